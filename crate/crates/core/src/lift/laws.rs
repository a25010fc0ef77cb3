use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::free::{free_lift_map, FreeLiftElement};
use super::puiseux::{el_tropicalize, PuiseuxSeries};
use crate::linalg::Vector;
use crate::scalar_core::{EltScalar, Natural, NegationSemiring, Rational, Z2};

/// A ring `R̂` with a projection `φ̂: R̂ → R` onto a negation semiring.
///
/// Implementors supply the ring operations upstairs, the projection, a sampler
/// for random elements, and for each probe `β` a preimage `x̂` with `β ⊨ φ̂(x̂)`.
pub trait LiftMap {
    type Up: Clone + fmt::Debug;
    type Down: NegationSemiring;

    fn name(&self) -> String;
    fn up_zero(&self) -> Self::Up;
    fn up_one(&self) -> Self::Up;
    fn up_add(&self, a: &Self::Up, b: &Self::Up) -> Self::Up;
    fn up_mul(&self, a: &Self::Up, b: &Self::Up) -> Self::Up;
    fn up_neg(&self, a: &Self::Up) -> Self::Up;
    fn up_is_zero(&self, a: &Self::Up) -> bool;
    fn project(&self, a: &Self::Up) -> Self::Down;
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Up;
    fn preimage_below(&self, target: &Self::Down) -> Option<Self::Up>;
    fn probe_set(&self) -> Vec<Self::Down>;
}

/// The five checkable lift laws, numbered in the order they are listed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LiftLaw {
    /// `φ̂(x) + φ̂(y) ⊨ φ̂(x + y)`.
    AddSurpass,
    /// `φ̂(x)φ̂(y) ⊨ φ̂(xy)` and `φ̂(1) = 1`.
    MulSurpass,
    /// `φ̂(−x) = ⊖φ̂(x)`.
    Negation,
    /// `φ̂(x) = 0 ⟺ x = 0`.
    Kernel,
    /// Every probe `β` surpasses some `φ̂(x̂)`.
    Density,
}

impl LiftLaw {
    pub const ALL: [LiftLaw; 5] = [
        LiftLaw::AddSurpass,
        LiftLaw::MulSurpass,
        LiftLaw::Negation,
        LiftLaw::Kernel,
        LiftLaw::Density,
    ];

    pub fn number(self) -> usize {
        self as usize + 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawFailure {
    pub law: LiftLaw,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct LiftReport {
    pub lift: String,
    pub samples: usize,
    pub failures: Vec<LawFailure>,
}

impl LiftReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn flags(&self, law: LiftLaw) -> bool {
        self.failures.iter().any(|f| f.law == law)
    }

    pub fn flagged_laws(&self) -> Vec<LiftLaw> {
        let mut laws: Vec<LiftLaw> = self.failures.iter().map(|f| f.law).collect();
        laws.sort();
        laws.dedup();
        laws
    }
}

/// Randomized check of the lift laws on `samples` pairs drawn from `seed`.
///
/// Only the first failure per law is recorded.
pub fn verify_lift_laws<L: LiftMap>(lift: &L, samples: usize, seed: u64) -> LiftReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LiftReport {
        lift: lift.name(),
        samples,
        failures: Vec::new(),
    };
    let mut fail = |law: LiftLaw, detail: String| {
        if !report.failures.iter().any(|f| f.law == law) {
            report.failures.push(LawFailure { law, detail });
        }
    };

    let one = lift.project(&lift.up_one());
    if one != L::Down::one() {
        fail(LiftLaw::MulSurpass, format!("φ(1) = {one:?}"));
    }
    let zero = lift.project(&lift.up_zero());
    if !zero.is_zero() {
        fail(LiftLaw::Kernel, format!("φ(0) = {zero:?}"));
    }

    for _ in 0..samples {
        let x = lift.sample(&mut rng);
        let y = lift.sample(&mut rng);
        let (px, py) = (lift.project(&x), lift.project(&y));

        let sum = lift.project(&lift.up_add(&x, &y));
        if !px.add(&py).surpasses(&sum) {
            fail(
                LiftLaw::AddSurpass,
                format!("x = {x:?}, y = {y:?}: φ(x)+φ(y) = {:?} does not surpass φ(x+y) = {sum:?}", px.add(&py)),
            );
        }
        let prod = lift.project(&lift.up_mul(&x, &y));
        if !px.mul(&py).surpasses(&prod) {
            fail(
                LiftLaw::MulSurpass,
                format!("x = {x:?}, y = {y:?}: φ(x)φ(y) = {:?} does not surpass φ(xy) = {prod:?}", px.mul(&py)),
            );
        }
        let neg = lift.project(&lift.up_neg(&x));
        if neg != px.negate() {
            fail(
                LiftLaw::Negation,
                format!("x = {x:?}: φ(−x) = {neg:?}, ⊖φ(x) = {:?}", px.negate()),
            );
        }
        if px.is_zero() != lift.up_is_zero(&x) {
            fail(LiftLaw::Kernel, format!("x = {x:?}: φ(x) = {px:?}"));
        }
    }

    for beta in lift.probe_set() {
        match lift.preimage_below(&beta) {
            Some(x) if beta.surpasses(&lift.project(&x)) => {}
            Some(x) => fail(
                LiftLaw::Density,
                format!("{beta:?} does not surpass φ({x:?}) = {:?}", lift.project(&x)),
            ),
            None => fail(LiftLaw::Density, format!("no preimage below {beta:?}")),
        }
    }
    report
}

/// `ψ̂((r̂_s)_s) = Σ_s φ̂(r̂_s) s`, with `coeffs[i]` attached to `gens[i]`.
pub fn module_lift_map<L: LiftMap>(
    coeffs: &[L::Up],
    lift: &L,
    gens: &[Vector<L::Down>],
) -> crate::Result<Vector<L::Down>> {
    if coeffs.len() != gens.len() {
        return Err(crate::Error::DimensionMismatch(format!(
            "{} coefficients for {} generators",
            coeffs.len(),
            gens.len()
        )));
    }
    let Some(first) = gens.first() else {
        return Err(crate::Error::EmptyGenerators);
    };
    let mut acc = Vector::zeros(first.len());
    for (c, g) in coeffs.iter().zip(gens) {
        acc = acc.try_add(&g.scale(&lift.project(c)))?;
    }
    Ok(acc)
}

/// Scalars `(t, ℓ)` with small integer `t` and `ℓ`, plus `0_R`, used as probes.
fn elt_probes() -> Vec<EltScalar> {
    let mut out = vec![EltScalar::Bottom];
    for t in -2..=2 {
        for l in -3..=3 {
            out.push(EltScalar::new(t, l));
        }
    }
    out.push(EltScalar::new(Rational::new(1, 2), Rational::new(-3, 2)));
    out
}

/// Truncated Puiseux series over `ℚ` with EL-tropicalization.
#[derive(Clone, Debug, Default)]
pub struct PuiseuxLift;

impl PuiseuxLift {
    /// The monomial `ℓ t^{−t}` with tropicalization `(t, ℓ)`, or `0`.
    pub fn monomial_preimage(a: &EltScalar) -> PuiseuxSeries {
        match a {
            EltScalar::Bottom => PuiseuxSeries::zero(),
            EltScalar::Layered { tangible, layer } => {
                PuiseuxSeries::monomial(layer.clone(), -tangible)
            }
        }
    }
}

impl LiftMap for PuiseuxLift {
    type Up = PuiseuxSeries;
    type Down = EltScalar;

    fn name(&self) -> String {
        "puiseux".into()
    }
    fn up_zero(&self) -> PuiseuxSeries {
        PuiseuxSeries::zero()
    }
    fn up_one(&self) -> PuiseuxSeries {
        PuiseuxSeries::one()
    }
    fn up_add(&self, a: &PuiseuxSeries, b: &PuiseuxSeries) -> PuiseuxSeries {
        a.add(b)
    }
    fn up_mul(&self, a: &PuiseuxSeries, b: &PuiseuxSeries) -> PuiseuxSeries {
        a.mul(b)
    }
    fn up_neg(&self, a: &PuiseuxSeries) -> PuiseuxSeries {
        a.neg()
    }
    fn up_is_zero(&self, a: &PuiseuxSeries) -> bool {
        a.is_exact_zero()
    }
    fn project(&self, a: &PuiseuxSeries) -> EltScalar {
        el_tropicalize(a)
    }

    /// Up to four terms with exponents in `{k/2 : −4 ≤ k ≤ 4}` and coefficients in `{−3, …, 3}`.
    /// Small ranges make leading-term cancellation in sums frequent.
    fn sample(&self, rng: &mut ChaCha8Rng) -> PuiseuxSeries {
        let n = rng.gen_range(0..=4);
        PuiseuxSeries::from_terms((0..n).map(|_| {
            (
                Rational::from_integer(rng.gen_range(-3..=3)),
                Rational::new(rng.gen_range(-4..=4), 2),
            )
        }))
    }

    /// `ℓ t^{−t}` for invertible `(t, ℓ)`; `0` for quasi-zeros and `0_R`.
    fn preimage_below(&self, target: &EltScalar) -> Option<PuiseuxSeries> {
        if target.is_quasi_zero() {
            Some(PuiseuxSeries::zero())
        } else {
            Some(Self::monomial_preimage(target))
        }
    }

    fn probe_set(&self) -> Vec<EltScalar> {
        elt_probes()
    }
}

/// The monoid-ring lift `ℤ[A] → R` of an ELT antiring.
#[derive(Clone, Debug, Default)]
pub struct FreeLift;

impl LiftMap for FreeLift {
    type Up = FreeLiftElement<EltScalar>;
    type Down = EltScalar;

    fn name(&self) -> String {
        "free Z[A]".into()
    }
    fn up_zero(&self) -> Self::Up {
        FreeLiftElement::zero()
    }
    fn up_one(&self) -> Self::Up {
        FreeLiftElement::one()
    }
    fn up_add(&self, a: &Self::Up, b: &Self::Up) -> Self::Up {
        a.add(b)
    }
    fn up_mul(&self, a: &Self::Up, b: &Self::Up) -> Self::Up {
        a.mul(b)
    }
    fn up_neg(&self, a: &Self::Up) -> Self::Up {
        a.neg()
    }
    fn up_is_zero(&self, a: &Self::Up) -> bool {
        a.is_zero()
    }
    fn project(&self, a: &Self::Up) -> EltScalar {
        free_lift_map(a)
    }

    /// Up to three symbols `a_{(t, ℓ)}` with `t ∈ {−1, 0, 1}`, `ℓ ∈ {±1, ±2}` and coefficients in `{−3, …, 3}`.
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Up {
        let n = rng.gen_range(0..=3);
        FreeLiftElement::from_terms((0..n).map(|_| {
            let l = [-2, -1, 1, 2][rng.gen_range(0..4)];
            (
                EltScalar::new(rng.gen_range(-1..=1), l),
                BigInt::from(rng.gen_range(-3..=3)),
            )
        }))
    }

    fn preimage_below(&self, target: &EltScalar) -> Option<Self::Up> {
        if target.is_quasi_zero() {
            Some(FreeLiftElement::zero())
        } else {
            FreeLiftElement::symbol(target)
        }
    }

    fn probe_set(&self) -> Vec<EltScalar> {
        elt_probes()
    }
}

/// `ℤ/2ℤ → ℕ₀`, `0 ↦ 0`, `1 ↦ 1`, with the trivial negation on `ℕ₀`.
#[derive(Clone, Debug, Default)]
pub struct ParityLift;

impl LiftMap for ParityLift {
    type Up = Z2;
    type Down = Natural;

    fn name(&self) -> String {
        "Z/2Z".into()
    }
    fn up_zero(&self) -> Z2 {
        Z2(false)
    }
    fn up_one(&self) -> Z2 {
        Z2(true)
    }
    fn up_add(&self, a: &Z2, b: &Z2) -> Z2 {
        a.add(*b)
    }
    fn up_mul(&self, a: &Z2, b: &Z2) -> Z2 {
        a.mul(*b)
    }
    fn up_neg(&self, a: &Z2) -> Z2 {
        a.neg()
    }
    fn up_is_zero(&self, a: &Z2) -> bool {
        !a.0
    }
    fn project(&self, a: &Z2) -> Natural {
        Natural::new(a.0 as u64)
    }
    fn sample(&self, rng: &mut ChaCha8Rng) -> Z2 {
        Z2(rng.gen())
    }
    fn preimage_below(&self, target: &Natural) -> Option<Z2> {
        Some(Z2(!target.is_quasi_zero()))
    }
    fn probe_set(&self) -> Vec<Natural> {
        (0..=12).map(Natural::new).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_lifts_pass() {
        assert!(verify_lift_laws(&PuiseuxLift, 200, 1).passed());
        assert!(verify_lift_laws(&FreeLift, 200, 1).passed());
        assert!(verify_lift_laws(&ParityLift, 50, 1).passed());
    }

    #[test]
    fn module_lift_on_standard_base() {
        let gens = vec![
            Vector(vec![EltScalar::new(0, 1), EltScalar::Bottom]),
            Vector(vec![EltScalar::Bottom, EltScalar::new(0, 1)]),
        ];
        let coeffs = vec!["5t^-3".parse().unwrap(), PuiseuxSeries::zero()];
        let v = module_lift_map(&coeffs, &PuiseuxLift, &gens).unwrap();
        assert_eq!(v, Vector(vec![EltScalar::new(3, 5), EltScalar::Bottom]));
    }
}
