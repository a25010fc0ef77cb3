use std::cmp::Ordering;
use std::fmt;

use super::{NegationSemiring, Rational};

/// Exploded layered tropical scalar: a tangible value with a layer, or the
/// adjoined bottom element `0_R`.
///
/// Addition keeps the larger tangible and adds layers on ties; multiplication
/// adds tangibles and multiplies layers. The negation map flips the layer sign.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EltScalar {
    Bottom,
    Layered { tangible: Rational, layer: Rational },
}

impl EltScalar {
    pub fn new(tangible: impl Into<Rational>, layer: impl Into<Rational>) -> Self {
        EltScalar::Layered {
            tangible: tangible.into(),
            layer: layer.into(),
        }
    }

    pub fn bottom() -> Self {
        EltScalar::Bottom
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, EltScalar::Bottom)
    }

    /// `t(a)`, `None` for bottom.
    pub fn tangible(&self) -> Option<&Rational> {
        match self {
            EltScalar::Bottom => None,
            EltScalar::Layered { tangible, .. } => Some(tangible),
        }
    }

    /// `s(a)`; bottom has layer 0.
    pub fn layer(&self) -> Rational {
        match self {
            EltScalar::Bottom => Rational::zero(),
            EltScalar::Layered { layer, .. } => layer.clone(),
        }
    }

    pub fn layer_is_zero(&self) -> bool {
        match self {
            EltScalar::Bottom => true,
            EltScalar::Layered { layer, .. } => layer.is_zero(),
        }
    }

    /// Non-quasi-zero scalars are exactly the invertible ones.
    pub fn inverse(&self) -> Option<Self> {
        match self {
            EltScalar::Layered { tangible, layer } if !layer.is_zero() => Some(EltScalar::Layered {
                tangible: -tangible,
                layer: layer.recip()?,
            }),
            _ => None,
        }
    }

    /// Tangible comparison with bottom below everything.
    pub fn cmp_tangible(&self, other: &Self) -> Ordering {
        match (self, other) {
            (EltScalar::Bottom, EltScalar::Bottom) => Ordering::Equal,
            (EltScalar::Bottom, _) => Ordering::Less,
            (_, EltScalar::Bottom) => Ordering::Greater,
            (
                EltScalar::Layered { tangible: a, .. },
                EltScalar::Layered { tangible: b, .. },
            ) => a.cmp(b),
        }
    }
}

impl NegationSemiring for EltScalar {
    fn zero() -> Self {
        EltScalar::Bottom
    }

    fn one() -> Self {
        EltScalar::new(0, 1)
    }

    fn add(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (EltScalar::Bottom, x) | (x, EltScalar::Bottom) => x.clone(),
            (
                EltScalar::Layered { tangible: a, layer: la },
                EltScalar::Layered { tangible: b, layer: lb },
            ) => match a.cmp(b) {
                Ordering::Greater => self.clone(),
                Ordering::Less => rhs.clone(),
                Ordering::Equal => EltScalar::Layered {
                    tangible: a.clone(),
                    layer: la + lb,
                },
            },
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (
                EltScalar::Layered { tangible: a, layer: la },
                EltScalar::Layered { tangible: b, layer: lb },
            ) => EltScalar::Layered {
                tangible: a + b,
                layer: la * lb,
            },
            _ => EltScalar::Bottom,
        }
    }

    fn negate(&self) -> Self {
        match self {
            EltScalar::Bottom => EltScalar::Bottom,
            EltScalar::Layered { tangible, layer } => EltScalar::Layered {
                tangible: tangible.clone(),
                layer: -layer,
            },
        }
    }

    fn is_quasi_zero(&self) -> bool {
        self.layer_is_zero()
    }

    fn surpasses(&self, other: &Self) -> bool {
        if self == other {
            return true;
        }
        match (self, other) {
            (_, EltScalar::Bottom) => self.is_quasi_zero(),
            (EltScalar::Layered { tangible: a, layer }, EltScalar::Layered { tangible: b, .. }) => {
                layer.is_zero() && a > b
            }
            (EltScalar::Bottom, _) => false,
        }
    }
}

impl fmt::Display for EltScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EltScalar::Bottom => write!(f, "bottom"),
            EltScalar::Layered { tangible, layer } => write!(f, "({tangible},{layer})"),
        }
    }
}

impl fmt::Debug for EltScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(t: i64, l: i64) -> EltScalar {
        EltScalar::new(t, l)
    }

    #[test]
    fn addition_rules() {
        assert_eq!(e(3, 2).add(&e(1, 5)), e(3, 2));
        assert_eq!(e(2, 3).add(&e(2, -3)), e(2, 0));
        assert_eq!(EltScalar::Bottom.add(&e(4, 7)), e(4, 7));
    }

    #[test]
    fn multiplication_rules() {
        assert_eq!(e(1, 2).mul(&e(3, 4)), e(4, 8));
        assert_eq!(e(5, 3).mul(&EltScalar::one()), e(5, 3));
        assert_eq!(e(5, 3).mul(&e(0, -1)), e(5, -3));
        assert_eq!(e(5, 3).mul(&EltScalar::Bottom), EltScalar::Bottom);
    }

    #[test]
    fn negation_and_circ() {
        assert_eq!(e(5, 3).negate(), e(5, -3));
        assert_eq!(e(5, 3).negate().negate(), e(5, 3));
        assert_eq!(EltScalar::Bottom.negate(), EltScalar::Bottom);
        assert_eq!(e(5, 3).circ(), e(5, 0));
        assert_eq!(EltScalar::Bottom.circ(), EltScalar::Bottom);
    }

    #[test]
    fn surpassing_examples() {
        assert!(e(7, 0).surpasses(&e(5, 2)));
        assert!(e(5, 2).surpasses(&e(5, 2)));
        assert!(!e(5, 3).surpasses(&e(5, 2)));
        assert!(e(1, 0).surpasses(&EltScalar::Bottom));
        assert!(!EltScalar::Bottom.surpasses(&e(1, 0)));
    }

    #[test]
    fn nabla_examples() {
        assert!(e(5, 3).nabla(&e(5, 3)));
        assert!(!e(5, 3).nabla(&e(5, -3)));
        assert!(e(3, 1).nabla(&e(5, 0)));
    }

    #[test]
    fn inverse() {
        assert_eq!(e(2, 4).inverse().unwrap(), EltScalar::new(-2, Rational::new(1, 4)));
        assert!(e(2, 0).inverse().is_none());
        assert!(EltScalar::Bottom.inverse().is_none());
    }
}
