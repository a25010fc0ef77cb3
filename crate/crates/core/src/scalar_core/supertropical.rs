use std::cmp::Ordering;
use std::fmt;

use super::{NegationSemiring, Rational};

/// Supertropical scalar: tangible or ghost value over ℚ, plus bottom.
///
/// Ties in addition produce ghosts. The negation map is the identity, so the
/// quasi-zeros are the ghosts (and bottom).
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum SupertropicalScalar {
    Bottom,
    Tangible(Rational),
    Ghost(Rational),
}

impl SupertropicalScalar {
    pub fn tangible(v: impl Into<Rational>) -> Self {
        SupertropicalScalar::Tangible(v.into())
    }

    pub fn ghost(v: impl Into<Rational>) -> Self {
        SupertropicalScalar::Ghost(v.into())
    }

    /// The ν-value, `None` for bottom.
    pub fn value(&self) -> Option<&Rational> {
        match self {
            SupertropicalScalar::Bottom => None,
            SupertropicalScalar::Tangible(v) | SupertropicalScalar::Ghost(v) => Some(v),
        }
    }

    pub fn is_ghost(&self) -> bool {
        !matches!(self, SupertropicalScalar::Tangible(_))
    }

    fn cmp_value(&self, other: &Self) -> Ordering {
        match (self.value(), other.value()) {
            (None, None) => Ordering::Equal,
            (None, _) => Ordering::Less,
            (_, None) => Ordering::Greater,
            (Some(a), Some(b)) => a.cmp(b),
        }
    }
}

impl NegationSemiring for SupertropicalScalar {
    fn zero() -> Self {
        SupertropicalScalar::Bottom
    }

    fn one() -> Self {
        SupertropicalScalar::Tangible(Rational::zero())
    }

    fn add(&self, rhs: &Self) -> Self {
        match self.cmp_value(rhs) {
            Ordering::Greater => self.clone(),
            Ordering::Less => rhs.clone(),
            Ordering::Equal => match self.value() {
                None => SupertropicalScalar::Bottom,
                Some(v) => SupertropicalScalar::Ghost(v.clone()),
            },
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        match (self.value(), rhs.value()) {
            (Some(a), Some(b)) => {
                let v = a + b;
                if self.is_ghost() || rhs.is_ghost() {
                    SupertropicalScalar::Ghost(v)
                } else {
                    SupertropicalScalar::Tangible(v)
                }
            }
            _ => SupertropicalScalar::Bottom,
        }
    }

    fn negate(&self) -> Self {
        self.clone()
    }

    fn is_quasi_zero(&self) -> bool {
        self.is_ghost()
    }

    fn surpasses(&self, other: &Self) -> bool {
        self == other
            || (matches!(self, SupertropicalScalar::Ghost(_))
                && self.cmp_value(other) != Ordering::Less)
    }
}

impl fmt::Display for SupertropicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SupertropicalScalar::Bottom => write!(f, "bottom"),
            SupertropicalScalar::Tangible(v) => write!(f, "{v}"),
            SupertropicalScalar::Ghost(v) => write!(f, "{v}ν"),
        }
    }
}

impl fmt::Debug for SupertropicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
