use std::fmt::Debug;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::FreeLieAlgebra;
use super::classical::negated_commutator;
use crate::linalg::{Matrix, Vector};
use crate::scalar_core::EltScalar;

/// Anything with a bracket, a negation and a surpassing relation on its elements.
pub trait BracketProvider {
    type Element: Clone + Debug;

    fn bracket(&self, x: &Self::Element, y: &Self::Element) -> Self::Element;
    fn minus(&self, x: &Self::Element, y: &Self::Element) -> Self::Element;
    fn surpasses(&self, x: &Self::Element, y: &Self::Element) -> bool;
    /// Elements tried exhaustively before random sampling.
    fn basis(&self) -> Vec<Self::Element>;
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Element;
}

/// A random ELT scalar with small integer tangible and layer, `0_R` about one time in eight.
pub fn random_scalar(rng: &mut ChaCha8Rng) -> EltScalar {
    if rng.gen_ratio(1, 8) {
        EltScalar::Bottom
    } else {
        EltScalar::new(rng.gen_range(-3i64..=3), rng.gen_range(-3i64..=3))
    }
}

impl BracketProvider for FreeLieAlgebra {
    type Element = Vector<EltScalar>;

    fn bracket(&self, x: &Self::Element, y: &Self::Element) -> Self::Element {
        self.bracket_unchecked(x, y)
    }

    fn minus(&self, x: &Self::Element, y: &Self::Element) -> Self::Element {
        x.minus(y)
    }

    fn surpasses(&self, x: &Self::Element, y: &Self::Element) -> bool {
        x.surpasses(y)
    }

    fn basis(&self) -> Vec<Self::Element> {
        self.basis_vectors()
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Element {
        Vector((0..self.dim()).map(|_| random_scalar(rng)).collect())
    }
}

/// `gl(n, ℛ)` with the negated commutator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneralLinear {
    pub n: usize,
}

impl BracketProvider for GeneralLinear {
    type Element = Matrix<EltScalar>;

    fn bracket(&self, x: &Self::Element, y: &Self::Element) -> Self::Element {
        negated_commutator(x, y).expect("same size")
    }

    fn minus(&self, x: &Self::Element, y: &Self::Element) -> Self::Element {
        x.minus(y)
    }

    fn surpasses(&self, x: &Self::Element, y: &Self::Element) -> bool {
        x.surpasses(y)
    }

    fn basis(&self) -> Vec<Self::Element> {
        (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .map(|(i, j)| Matrix::elementary(self.n, i, j))
            .collect()
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Element {
        Matrix::new(self.n, self.n, (0..self.n * self.n).map(|_| random_scalar(rng)).collect())
            .expect("n*n entries")
    }
}

/// A triple `(x, y, z)` on which `[x,[y,z]] ⊖ [y,[x,z]] ⊨ [[x,y],z]` fails.
#[derive(Clone, Debug)]
pub struct JacobiFailure<E> {
    pub triple: (E, E, E),
    pub lhs: E,
    pub rhs: E,
}

#[derive(Clone, Debug)]
pub struct StrongJacobiReport<E> {
    pub checked: usize,
    pub failures: Vec<JacobiFailure<E>>,
}

impl<E> StrongJacobiReport<E> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the strong Jacobi identity on one triple and returns both sides.
pub fn strong_jacobi_triple<P: BracketProvider>(
    p: &P,
    x: &P::Element,
    y: &P::Element,
    z: &P::Element,
) -> (bool, P::Element, P::Element) {
    let lhs = p.minus(&p.bracket(x, &p.bracket(y, z)), &p.bracket(y, &p.bracket(x, z)));
    let rhs = p.bracket(&p.bracket(x, y), z);
    (p.surpasses(&lhs, &rhs), lhs, rhs)
}

/// All basis triples, then `samples` seeded random triples.
pub fn verify_strong_jacobi<P: BracketProvider>(
    p: &P,
    samples: usize,
    seed: u64,
) -> StrongJacobiReport<P::Element> {
    let basis = p.basis();
    let mut triples = Vec::new();
    for x in &basis {
        for y in &basis {
            for z in &basis {
                triples.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        triples.push((p.sample(&mut rng), p.sample(&mut rng), p.sample(&mut rng)));
    }
    let mut failures = Vec::new();
    for (x, y, z) in &triples {
        let (ok, lhs, rhs) = strong_jacobi_triple(p, x, y, z);
        if !ok {
            failures.push(JacobiFailure {
                triple: (x.clone(), y.clone(), z.clone()),
                lhs,
                rhs,
            });
        }
    }
    StrongJacobiReport {
        checked: triples.len(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar_core::NegationSemiring;

    #[test]
    fn pbw_example_fails_on_x1_x1_x2() {
        let l = FreeLieAlgebra::pbw_example();
        let (x1, x2) = (l.basis(0), l.basis(1));
        let (ok, lhs, rhs) = strong_jacobi_triple(&l, &x1, &x1, &x2);
        assert!(!ok);
        let s = Vector(vec![EltScalar::one(), EltScalar::one()]);
        assert_eq!(lhs, s.scale(&EltScalar::new(1, 0)));
        assert_eq!(rhs, s.scale(&EltScalar::new(2, 0)));
    }

    #[test]
    fn gl2_passes() {
        assert!(verify_strong_jacobi(&GeneralLinear { n: 2 }, 200, 3).passed());
    }
}
