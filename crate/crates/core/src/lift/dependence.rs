use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::laws::PuiseuxLift;
use super::puiseux::{el_tropicalize, PuiseuxSeries};
use crate::error::{Error, Result};
use crate::linalg::{linear_combination, Vector};
use crate::scalar_core::{EltScalar, NegationSemiring, Rational};

/// A verified relation `Σ α_j v_j ∈ zeroset`.
#[derive(Clone, Debug, PartialEq)]
pub struct DependenceCertificate {
    /// One coefficient per input vector; each is `0_R` or invertible, and not all are `0_R`.
    pub coefficients: Vec<EltScalar>,
    /// The quasi-zero vector `Σ α_j v_j`.
    pub combination: Vector<EltScalar>,
    /// The upstairs kernel vector the coefficients were tropicalized from.
    pub kernel: Vec<PuiseuxSeries>,
    /// Number of the successful attempt, counting the unperturbed lift as 0.
    pub perturbation: usize,
}

/// Number of perturbed restarts after the plain monomial lift.
const PERTURBED_ATTEMPTS: usize = 8;

fn check_input(vectors: &[Vector<EltScalar>]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Err(Error::Precondition("empty vector list".into()));
    };
    let n = first.len();
    if let Some(v) = vectors.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} among length-{n} vectors",
            v.len()
        )));
    }
    if vectors.len() <= n {
        return Err(Error::Precondition(format!(
            "{} vectors in dimension {n}; need more vectors than entries",
            vectors.len()
        )));
    }
    if let Some(a) = vectors
        .iter()
        .flat_map(|v| v.entries())
        .find(|a| !a.is_bottom() && a.is_quasi_zero())
    {
        return Err(Error::Precondition(format!(
            "entry {a} is quasi-zero and has no monomial lift"
        )));
    }
    Ok(n)
}

/// Relative precision request for inverting `a`: absolute order `order − val(a)`.
fn invert(a: &PuiseuxSeries, order: &Rational) -> Result<PuiseuxSeries> {
    let v = a.leading().map(|(e, _)| e.clone()).unwrap_or_else(Rational::zero);
    a.inverse(&(order - &v))
}

/// Kernel vector of the `n × m` matrix (`m > n`) with the free variable of the
/// first non-pivot column set to `−1`. Coordinates may come back with no known
/// term; they tropicalize to `0_R` and the caller re-checks the combination.
fn kernel_vector(mut a: Vec<Vec<PuiseuxSeries>>, m: usize, order: &Rational) -> Result<Vec<PuiseuxSeries>> {
    let n = a.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..m {
        if row == n {
            break;
        }
        let mut best: Option<usize> = None;
        let mut unknown = false;
        for i in row..n {
            let e = &a[i][col];
            match (e.leading(), best) {
                (Some((ev, _)), Some(b)) => {
                    if ev < a[b][col].leading().unwrap().0 {
                        best = Some(i);
                    }
                }
                (Some(_), None) => best = Some(i),
                (None, _) => unknown |= e.is_unknown(),
            }
        }
        let Some(p) = best else {
            if unknown {
                return Err(Error::TruncationExhausted(format!(
                    "column {col} has no known pivot"
                )));
            }
            continue;
        };
        a.swap(row, p);
        let inv = invert(&a[row][col], order)?;
        for i in row + 1..n {
            if a[i][col].is_exact_zero() {
                continue;
            }
            let f = a[i][col].mul(&inv);
            for j in col + 1..m {
                let update = f.mul(&a[row][j]);
                a[i][j] = a[i][j].sub(&update);
            }
            // Exact row operations annihilate this entry.
            a[i][col] = PuiseuxSeries::zero();
        }
        pivots.push((row, col));
        row += 1;
    }

    let free = (0..m)
        .find(|c| pivots.iter().all(|(_, pc)| pc != c))
        .expect("more columns than rows");
    let mut x = vec![PuiseuxSeries::zero(); m];
    x[free] = PuiseuxSeries::one().neg();
    for &(r, c) in pivots.iter().rev() {
        let mut acc = PuiseuxSeries::zero();
        for j in c + 1..m {
            if !x[j].is_exact_zero() && !a[r][j].is_exact_zero() {
                acc = acc.add(&a[r][j].mul(&x[j]));
            }
        }
        x[c] = acc.neg().mul(&invert(&a[r][c], order)?);
    }
    Ok(x)
}

/// `ℓ t^{−t} + r t^{−t+δ}` with random `r ≠ 0` and `δ ∈ {1/2, 1, 3/2, 2}`.
fn perturbed_lift(a: &EltScalar, rng: &mut ChaCha8Rng) -> PuiseuxSeries {
    let base = PuiseuxLift::monomial_preimage(a);
    let Some(t) = a.tangible() else {
        return base;
    };
    let mut r = 0;
    while r == 0 {
        r = rng.gen_range(-9..=9);
    }
    let delta = Rational::new(rng.gen_range(1..=4), 2);
    base.add(&PuiseuxSeries::monomial(
        Rational::new(r, rng.gen_range(1..=5)),
        &delta - t,
    ))
}

fn attempt(
    vectors: &[Vector<EltScalar>],
    n: usize,
    order: &Rational,
    perturbation: usize,
) -> Result<DependenceCertificate> {
    let m = vectors.len();
    let mut rng = ChaCha8Rng::seed_from_u64(perturbation as u64);
    let matrix: Vec<Vec<PuiseuxSeries>> = (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let a = vectors[j].get(i);
                    if perturbation == 0 {
                        PuiseuxLift::monomial_preimage(a)
                    } else {
                        perturbed_lift(a, &mut rng)
                    }
                })
                .collect()
        })
        .collect();
    let kernel = kernel_vector(matrix, m, order)?;
    let coefficients: Vec<EltScalar> = kernel.iter().map(el_tropicalize).collect();
    let terms: Vec<(EltScalar, &Vector<EltScalar>)> =
        coefficients.iter().cloned().zip(vectors.iter()).collect();
    let combination = linear_combination(n, &terms);
    if !combination.is_quasi_zero() {
        return Err(Error::TruncationExhausted(format!(
            "tropicalized kernel gives the non-quasi-zero combination {combination}"
        )));
    }
    Ok(DependenceCertificate {
        coefficients,
        combination,
        kernel,
        perturbation,
    })
}

/// A dependence relation among more than `n` vectors of `ℛ^n`, found by lifting
/// entries to monomials `ℓ t^{−t}`, solving upstairs, and tropicalizing.
///
/// When leading terms are lost to truncation the lift is retried with seeded
/// perturbations. Every returned certificate has been re-evaluated downstairs.
pub fn dependence_via_lift(
    vectors: &[Vector<EltScalar>],
    order: &Rational,
) -> Result<DependenceCertificate> {
    let n = check_input(vectors)?;
    let mut last = None;
    for perturbation in 0..=PERTURBED_ATTEMPTS {
        match attempt(vectors, n, order, perturbation) {
            Ok(cert) => return Ok(cert),
            Err(e @ Error::TruncationExhausted(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// [`dependence_via_lift`] with the order doubled on exhaustion, starting at 4.
pub fn certify_dependence(vectors: &[Vector<EltScalar>]) -> Result<DependenceCertificate> {
    let mut order = Rational::from_integer(4);
    for _ in 0..6 {
        match dependence_via_lift(vectors, &order) {
            Err(Error::TruncationExhausted(_)) => order = &order * &Rational::from_integer(2),
            other => return other,
        }
    }
    dependence_via_lift(vectors, &order)
}
