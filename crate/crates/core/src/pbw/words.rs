use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::lie_core::{random_scalar, BracketProvider};
use crate::scalar_core::format::scalar_to_json;
use crate::scalar_core::{EltScalar, NegationSemiring};

/// A word in the base symbols, 0-based; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Word(w)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for i in &self.0 {
            write!(f, "x{}", i + 1)?;
        }
        Ok(())
    }
}

/// An element of the tensor algebra on free symbols: a finite sum of words
/// with non-bottom ELT coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWordElement {
    terms: BTreeMap<Word, EltScalar>,
}

impl FreeWordElement {
    pub fn zero() -> Self {
        FreeWordElement::default()
    }

    pub fn unit() -> Self {
        Self::monomial(Word::unit(), EltScalar::one())
    }

    /// The word `x_i` of length one.
    pub fn symbol(i: usize) -> Self {
        Self::monomial(Word(vec![i]), EltScalar::one())
    }

    pub fn monomial(w: Word, c: EltScalar) -> Self {
        Self::from_terms([(w, c)])
    }

    /// Sums repeated words; bottom coefficients are dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = (Word, EltScalar)>) -> Self {
        let mut out = FreeWordElement::zero();
        for (w, c) in terms {
            out.add_term(w, &c);
        }
        out
    }

    fn add_term(&mut self, w: Word, c: &EltScalar) {
        if c.is_bottom() {
            return;
        }
        let entry = self.terms.entry(w).or_insert(EltScalar::Bottom);
        *entry = entry.add(c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &EltScalar)> {
        self.terms.iter()
    }

    /// Coefficient of `w`, bottom when absent.
    pub fn coefficient(&self, w: &Word) -> EltScalar {
        self.terms.get(w).cloned().unwrap_or(EltScalar::Bottom)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest word length, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn negate(&self) -> Self {
        FreeWordElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.negate())).collect(),
        }
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.add(&other.negate())
    }

    pub fn scale(&self, a: &EltScalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), a.mul(c))))
    }

    /// Concatenation extended bilinearly.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = FreeWordElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), &a.mul(b));
            }
        }
        out
    }

    pub fn is_quasi_zero(&self) -> bool {
        self.terms.values().all(EltScalar::is_quasi_zero)
    }

    /// Coefficientwise `⊨`, with absent words read as bottom.
    pub fn surpasses(&self, other: &Self) -> bool {
        self.terms
            .keys()
            .chain(other.terms.keys())
            .all(|w| self.coefficient(w).surpasses(&other.coefficient(w)))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| {
                    json!({"word": w.0.iter().map(|i| i + 1).collect::<Vec<_>>(), "scalar": scalar_to_json(c)})
                })
                .collect(),
        )
    }
}

impl fmt::Display for FreeWordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn word_mul(u: &FreeWordElement, v: &FreeWordElement) -> FreeWordElement {
    u.mul(v)
}

/// `u⊗v ⊖ v⊗u`.
pub fn free_commutator(u: &FreeWordElement, v: &FreeWordElement) -> FreeWordElement {
    u.mul(v).minus(&v.mul(u))
}

/// The free associative algebra on `symbols` letters, with random elements
/// made of at most three words of length at most `max_len`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeWords {
    pub symbols: usize,
    pub max_len: usize,
}

impl BracketProvider for FreeWords {
    type Element = FreeWordElement;

    fn bracket(&self, x: &Self::Element, y: &Self::Element) -> Self::Element {
        free_commutator(x, y)
    }

    fn minus(&self, x: &Self::Element, y: &Self::Element) -> Self::Element {
        x.minus(y)
    }

    fn surpasses(&self, x: &Self::Element, y: &Self::Element) -> bool {
        x.surpasses(y)
    }

    fn basis(&self) -> Vec<Self::Element> {
        (0..self.symbols).map(FreeWordElement::symbol).collect()
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Element {
        let count = rng.gen_range(1..=3);
        FreeWordElement::from_terms((0..count).map(|_| {
            let len = rng.gen_range(1..=self.max_len.max(1));
            let w = Word((0..len).map(|_| rng.gen_range(0..self.symbols)).collect());
            (w, random_scalar(rng))
        }))
    }
}

/// Strong Jacobi on the symbols and on `samples` random triples whose
/// brackets stay within `degree`.
pub fn verify_strong_jacobi_free(
    n_symbols: usize,
    degree: usize,
    samples: usize,
    seed: u64,
) -> crate::Result<crate::lie_core::StrongJacobiReport<FreeWordElement>> {
    if degree < 3 || n_symbols == 0 {
        return Err(crate::Error::Precondition(format!(
            "need degree ≥ 3 and at least one symbol, got degree {degree} and {n_symbols} symbols"
        )));
    }
    let provider = FreeWords {
        symbols: n_symbols,
        max_len: degree / 3,
    };
    Ok(crate::lie_core::verify_strong_jacobi(&provider, samples, seed))
}
