use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::scalar_core::{EltScalar, Rational};

/// Truncated Puiseux series `Σ c_e t^e` with rational exponents and coefficients.
///
/// Terms with exponent at or beyond `truncation` are unknown; `None` means the
/// series is exact. The exact zero series has no terms and no truncation.
#[derive(Clone, PartialEq, Eq)]
pub struct PuiseuxSeries {
    terms: BTreeMap<Rational, Rational>,
    truncation: Option<Rational>,
}

fn min_opt(a: Option<Rational>, b: Option<Rational>) -> Option<Rational> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, None) => a,
        (None, b) => b,
    }
}

fn add_opt(a: Option<&Rational>, b: Option<&Rational>) -> Option<Rational> {
    Some(a? + b?)
}

impl PuiseuxSeries {
    pub fn zero() -> Self {
        PuiseuxSeries {
            terms: BTreeMap::new(),
            truncation: None,
        }
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), Rational::zero())
    }

    /// `c·t^e`, exact.
    pub fn monomial(coefficient: Rational, exponent: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(exponent, coefficient);
        }
        PuiseuxSeries {
            terms,
            truncation: None,
        }
    }

    /// Builds a series from `(coefficient, exponent)` pairs, collecting like terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, Rational)>) -> Self {
        let mut out = PuiseuxSeries::zero();
        for (c, e) in terms {
            out.accumulate(e, c);
        }
        out
    }

    /// Same terms, with everything at exponent `≥ order` discarded and marked unknown.
    pub fn truncated(&self, order: Rational) -> Self {
        let order = min_opt(self.truncation.clone(), Some(order));
        let mut out = PuiseuxSeries {
            terms: self.terms.clone(),
            truncation: order,
        };
        out.prune();
        out
    }

    fn accumulate(&mut self, e: Rational, c: Rational) {
        let entry = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn prune(&mut self) {
        if let Some(n) = &self.truncation {
            self.terms.retain(|e, _| e < n);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.terms.iter()
    }

    pub fn truncation(&self) -> Option<&Rational> {
        self.truncation.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.truncation.is_none()
    }

    /// Known to be zero: no terms and no truncation.
    pub fn is_exact_zero(&self) -> bool {
        self.terms.is_empty() && self.truncation.is_none()
    }

    /// No known terms although some may exist beyond the truncation.
    pub fn is_unknown(&self) -> bool {
        self.terms.is_empty() && self.truncation.is_some()
    }

    /// Least exponent term `(exponent, coefficient)`.
    pub fn leading(&self) -> Option<(&Rational, &Rational)> {
        self.terms.iter().next()
    }

    /// Lower bound on the valuation: the leading exponent, else the truncation.
    fn valuation_bound(&self) -> Option<&Rational> {
        self.leading().map(|(e, _)| e).or(self.truncation.as_ref())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.truncation = min_opt(self.truncation.clone(), rhs.truncation.clone());
        for (e, c) in &rhs.terms {
            out.accumulate(e.clone(), c.clone());
        }
        out.prune();
        out
    }

    pub fn neg(&self) -> Self {
        PuiseuxSeries {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
            truncation: self.truncation.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return PuiseuxSeries::zero();
        }
        PuiseuxSeries {
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
            truncation: self.truncation.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_exact_zero() || rhs.is_exact_zero() {
            return PuiseuxSeries::zero();
        }
        // A known error O(t^N) in one factor contributes O(t^(N + val(other))).
        let truncation = min_opt(
            add_opt(self.truncation.as_ref(), rhs.valuation_bound()),
            add_opt(rhs.truncation.as_ref(), self.valuation_bound()),
        );
        let mut out = PuiseuxSeries {
            terms: BTreeMap::new(),
            truncation,
        };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea + eb;
                if out.truncation.as_ref().is_some_and(|n| &e >= n) {
                    continue;
                }
                out.accumulate(e, ca * cb);
            }
        }
        out
    }

    /// Multiplicative inverse known up to exponent `order`.
    ///
    /// Monomials invert exactly. Otherwise `a = c t^v (1 + u)` and the geometric
    /// series of `u` is summed until its terms pass `order`.
    pub fn inverse(&self, order: &Rational) -> Result<Self> {
        let Some((v, c)) = self.leading() else {
            return Err(if self.is_exact_zero() {
                Error::ZeroSeries
            } else {
                Error::TruncationExhausted("inverse of a series with no known terms".into())
            });
        };
        let c_inv = c.recip().expect("stored coefficients are non-zero");
        let lead_inv = PuiseuxSeries::monomial(c_inv.clone(), -v);
        if self.terms.len() == 1 && self.is_exact() {
            return Ok(lead_inv);
        }
        // Relative precision of (1 + u)^{-1}: bounded by the request and by what is known of u.
        let mut precision = order + v;
        if let Some(n) = &self.truncation {
            precision = precision.min(n - v - v);
        }
        if !precision.is_positive() {
            return Ok(PuiseuxSeries {
                terms: BTreeMap::new(),
                truncation: Some(precision - v),
            });
        }
        let minus_u = PuiseuxSeries::from_terms(
            self.terms
                .iter()
                .skip(1)
                .map(|(e, x)| (-(x * &c_inv), e - v)),
        );
        let mut sum = PuiseuxSeries::one();
        let mut power = PuiseuxSeries::one();
        loop {
            power = power.mul(&minus_u).truncated(precision.clone());
            power.truncation = None;
            if power.terms.is_empty() {
                break;
            }
            sum = sum.add(&power);
        }
        sum.truncation = Some(precision);
        sum.prune();
        Ok(sum.mul(&lead_inv))
    }
}

/// EL-tropicalization: `0 ↦ bottom`, otherwise the tangible is minus the least
/// exponent and the layer is that term's coefficient.
pub fn el_tropicalize(a: &PuiseuxSeries) -> EltScalar {
    match a.leading() {
        None => EltScalar::Bottom,
        Some((e, c)) => EltScalar::new(-e, c.clone()),
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("{c}t^{e}")).collect();
        if let Some(n) = &self.truncation {
            parts.push(format!("O(t^{n})"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PuiseuxSeries {
    type Err = ParseError;

    /// Parses literals such as `5t^-3 + 1t^0`, `t^1/2 - 2`, `0` or `1 + O(t^3)`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let bad = |why: &str| ParseError::new(format!("{why} in Puiseux literal `{s}`"));
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        let mut prev = ' ';
        for ch in s.chars() {
            if ch.is_whitespace() {
                continue;
            }
            let separator = (ch == '+' || ch == '-') && prev != '^' && !current.is_empty();
            if separator {
                chunks.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else if (ch == '+' || ch == '-') && current.is_empty() && prev != '^' {
                negative ^= ch == '-';
            } else {
                current.push(ch);
            }
            prev = ch;
        }
        if current.is_empty() {
            return Err(bad("dangling operator or empty input"));
        }
        chunks.push((negative, current));

        let mut out = PuiseuxSeries::zero();
        let mut truncation = None;
        for (negative, chunk) in chunks {
            if let Some(inner) = chunk.strip_prefix("O(t^").and_then(|r| r.strip_suffix(')')) {
                let n: Rational = inner.parse().map_err(|_| bad("invalid order"))?;
                truncation = min_opt(truncation, Some(n));
                continue;
            }
            let (coef, exp) = match chunk.split_once('t') {
                Some((c, rest)) => {
                    let exp = match rest.strip_prefix('^') {
                        Some(e) => e.parse().map_err(|_| bad("invalid exponent"))?,
                        None if rest.is_empty() => Rational::one(),
                        None => return Err(bad("expected `^` after `t`")),
                    };
                    let coef = if c.is_empty() {
                        Rational::one()
                    } else {
                        c.parse().map_err(|_| bad("invalid coefficient"))?
                    };
                    (coef, exp)
                }
                None => (
                    chunk.parse().map_err(|_| bad("invalid constant"))?,
                    Rational::zero(),
                ),
            };
            out.accumulate(exp, if negative { -coef } else { coef });
        }
        if let Some(n) = truncation {
            out = out.truncated(n);
        }
        Ok(out)
    }
}
