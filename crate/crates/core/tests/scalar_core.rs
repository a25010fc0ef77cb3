use proptest::prelude::*;

use tropical_lie::scalar_core::{
    repeat_add, MaxPlus, Natural, SupertropicalScalar, SymPair,
};
use tropical_lie::{EltScalar, NegationSemiring, Rational};

fn s(t: i64, l: i64) -> EltScalar {
    EltScalar::new(t, l)
}

fn elt() -> impl Strategy<Value = EltScalar> {
    prop_oneof![
        1 => Just(EltScalar::Bottom),
        8 => (-4i64..=4, -4i64..=4).prop_map(|(t, l)| s(t, l)),
    ]
}

fn elt_quasi_zero() -> impl Strategy<Value = EltScalar> {
    prop_oneof![Just(EltScalar::Bottom), (-4i64..=4).prop_map(|t| s(t, 0))]
}

fn supertropical() -> impl Strategy<Value = SupertropicalScalar> {
    prop_oneof![
        1 => Just(SupertropicalScalar::Bottom),
        4 => (-4i64..=4).prop_map(SupertropicalScalar::tangible),
        3 => (-4i64..=4).prop_map(SupertropicalScalar::ghost),
    ]
}

fn supertropical_quasi_zero() -> impl Strategy<Value = SupertropicalScalar> {
    prop_oneof![
        Just(SupertropicalScalar::Bottom),
        (-4i64..=4).prop_map(SupertropicalScalar::ghost),
    ]
}

fn natural() -> impl Strategy<Value = Natural> {
    (0u64..40).prop_map(Natural::new)
}

fn sym_natural() -> impl Strategy<Value = SymPair<Natural>> {
    (natural(), natural()).prop_map(|(p, n)| SymPair::new(p, n))
}

fn max_plus() -> impl Strategy<Value = MaxPlus> {
    prop_oneof![
        1 => Just(MaxPlus::neg_infinity()),
        5 => (-4i64..=4).prop_map(MaxPlus::finite),
    ]
}

fn sym_max_plus() -> impl Strategy<Value = SymPair<MaxPlus>> {
    (max_plus(), max_plus()).prop_map(|(p, n)| SymPair::new(p, n))
}

fn negation_laws<S: NegationSemiring>(a: &S, b: &S) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.add(b).negate(), a.negate().add(&b.negate()));
    prop_assert_eq!(a.mul(b).negate(), a.mul(&b.negate()));
    prop_assert_eq!(a.mul(b).negate(), a.negate().mul(b));
    prop_assert_eq!(a.negate().negate(), a.clone());
    prop_assert_eq!(S::zero().negate(), S::zero());
    prop_assert!(a.circ().is_quasi_zero());
    Ok(())
}

fn semiring_laws<S: NegationSemiring>(a: &S, b: &S, c: &S) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.add(b), b.add(a));
    prop_assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    prop_assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    prop_assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    prop_assert_eq!(a.add(&S::zero()), a.clone());
    prop_assert_eq!(a.mul(&S::one()), a.clone());
    prop_assert_eq!(a.mul(&S::zero()), S::zero());
    Ok(())
}

/// `b + z1 ⊨ b` and `b + z1 + z2 ⊨ b + z1` by construction.
fn surpass_chain<S: NegationSemiring>(b: &S, z1: &S, z2: &S) -> Result<(), TestCaseError> {
    prop_assert!(b.surpasses(b));
    let mid = b.add(z1);
    let top = mid.add(z2);
    prop_assert!(mid.surpasses(b));
    prop_assert!(top.surpasses(&mid));
    prop_assert!(top.surpasses(b));
    Ok(())
}

fn transitive_on<S: NegationSemiring>(a: &S, b: &S, c: &S) -> Result<(), TestCaseError> {
    if a.surpasses(b) && b.surpasses(c) {
        prop_assert!(a.surpasses(c));
    }
    Ok(())
}

/// `a ⊨ b` by search over quasi-zero witnesses `c` with `a = b + c`.
fn elt_surpass_oracle(a: &EltScalar, b: &EltScalar) -> bool {
    let mut witnesses = vec![EltScalar::Bottom];
    for x in [a, b] {
        if let Some(t) = x.tangible() {
            witnesses.push(EltScalar::new(t.clone(), 0));
        }
    }
    witnesses.iter().any(|c| &b.add(c) == a)
}

fn supertropical_surpass_oracle(a: &SupertropicalScalar, b: &SupertropicalScalar) -> bool {
    let mut witnesses = vec![SupertropicalScalar::Bottom];
    for x in [a, b] {
        if let Some(v) = x.value() {
            witnesses.push(SupertropicalScalar::Ghost(v.clone()));
        }
    }
    witnesses.iter().any(|c| &b.add(c) == a)
}

fn natural_pair_surpass_oracle(a: &SymPair<Natural>, b: &SymPair<Natural>) -> bool {
    (0u64..=80).any(|k| {
        let c = SymPair::new(Natural::new(k), Natural::new(k));
        &b.add(&c) == a
    })
}

fn max_plus_pair_surpass_oracle(a: &SymPair<MaxPlus>, b: &SymPair<MaxPlus>) -> bool {
    let mut values = vec![MaxPlus::neg_infinity()];
    values.extend([&a.pos, &a.neg, &b.pos, &b.neg].into_iter().cloned());
    values
        .iter()
        .any(|k| &b.add(&SymPair::new(k.clone(), k.clone())) == a)
}

fn small_elt_grid() -> Vec<EltScalar> {
    let mut out = vec![EltScalar::Bottom];
    for t in -2..=2 {
        for l in -2..=2 {
            out.push(s(t, l));
        }
    }
    out
}

#[test]
fn surpasses_matches_oracle_exhaustively() {
    let grid = small_elt_grid();
    for a in &grid {
        for b in &grid {
            assert_eq!(a.surpasses(b), elt_surpass_oracle(a, b), "{a:?} ⊨ {b:?}");
        }
    }
}

#[test]
fn surpass_examples() {
    assert!(s(7, 0).surpasses(&s(5, 2)));
    assert!(s(5, 2).surpasses(&s(5, 2)));
    assert!(!s(5, 3).surpasses(&s(5, 2)));
    assert!(s(5, 3).nabla(&s(5, 3)));
    assert!(!s(5, 3).nabla(&s(5, -3)));
    assert!(s(3, 1).nabla(&s(5, 0)));
}

#[test]
fn circ_examples() {
    assert_eq!(s(5, 3).circ(), s(5, 0));
    assert_eq!(EltScalar::Bottom.circ(), EltScalar::Bottom);
    let p = SymPair::new(Natural::new(4), Natural::new(1));
    assert_eq!(p.circ(), SymPair::new(Natural::new(5), Natural::new(5)));
    assert_eq!(SupertropicalScalar::tangible(3).circ(), SupertropicalScalar::ghost(3));
}

#[test]
fn twist_examples() {
    let n = |a: u64, b: u64| SymPair::new(Natural::new(a), Natural::new(b));
    assert_eq!(n(1, 2).mul(&n(3, 4)), n(11, 10));
    assert_eq!(
        SymPair::embed(Natural::new(3)).mul(&SymPair::embed(Natural::new(5))),
        SymPair::embed(Natural::new(15))
    );
    assert_eq!(n(0, 1).mul(&n(6, 9)), n(9, 6));
    assert_eq!(n(0, 1).mul(&n(6, 9)), n(6, 9).negate());
}

#[test]
fn elt_arithmetic_examples() {
    assert_eq!(s(2, 3).add(&s(2, -3)), s(2, 0));
    assert_eq!(EltScalar::Bottom.add(&s(4, 7)), s(4, 7));
    assert_eq!(s(1, 2).mul(&s(3, 4)), s(4, 8));
    assert_eq!(s(3, 5).mul(&s(0, -1)), s(3, -5));
    assert_eq!(s(5, 3).negate(), s(5, -3));
    assert_eq!(EltScalar::Bottom.negate(), EltScalar::Bottom);
    assert_eq!(repeat_add(&s(1, 1), 5), s(1, 5));
}

#[test]
fn supertropical_examples() {
    let t = SupertropicalScalar::tangible;
    assert_eq!(t(3).add(&t(1)), t(3));
    assert_eq!(t(2).add(&t(2)), SupertropicalScalar::ghost(2));
    assert_eq!(SupertropicalScalar::Bottom.add(&t(5)), t(5));
    assert!(SupertropicalScalar::ghost(3).surpasses(&t(2)));
    assert!(!t(3).surpasses(&SupertropicalScalar::ghost(2)));
}

#[test]
fn rational_layers() {
    let half = Rational::new(1, 2);
    let a = EltScalar::new(half.clone(), half.clone());
    assert_eq!(a.add(&a), EltScalar::new(half, 1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn elt_negation_map(a in elt(), b in elt(), c in elt()) {
        negation_laws(&a, &b)?;
        semiring_laws(&a, &b, &c)?;
    }

    #[test]
    fn supertropical_negation_map(a in supertropical(), b in supertropical(), c in supertropical()) {
        negation_laws(&a, &b)?;
        semiring_laws(&a, &b, &c)?;
    }

    #[test]
    fn natural_negation_map(a in natural(), b in natural(), c in natural()) {
        negation_laws(&a, &b)?;
        semiring_laws(&a, &b, &c)?;
    }

    #[test]
    fn sym_natural_negation_map(a in sym_natural(), b in sym_natural(), c in sym_natural()) {
        negation_laws(&a, &b)?;
        semiring_laws(&a, &b, &c)?;
    }

    #[test]
    fn sym_max_plus_negation_map(a in sym_max_plus(), b in sym_max_plus(), c in sym_max_plus()) {
        negation_laws(&a, &b)?;
        semiring_laws(&a, &b, &c)?;
    }

    #[test]
    fn elt_surpass_preorder(b in elt(), z1 in elt_quasi_zero(), z2 in elt_quasi_zero(), c in elt()) {
        surpass_chain(&b, &z1, &z2)?;
        transitive_on(&b.add(&z1), &b, &c)?;
    }

    #[test]
    fn elt_surpass_antisymmetric(a in elt(), b in elt(), z in elt_quasi_zero()) {
        if a.surpasses(&b) && b.surpasses(&a) {
            prop_assert_eq!(&a, &b);
        }
        let up = a.add(&z);
        if a.surpasses(&up) {
            prop_assert_eq!(&a, &up);
        }
        prop_assert_eq!(z.add(&z), z.clone());
    }

    #[test]
    fn elt_surpass_closed_form(a in elt(), b in elt()) {
        prop_assert_eq!(a.surpasses(&b), elt_surpass_oracle(&a, &b));
    }

    #[test]
    fn elt_partial_order_conditions(x in elt(), z1 in elt_quasi_zero(), z2 in elt_quasi_zero(), y in elt()) {
        let premise = x.add(&z1).add(&z2) == x;
        let both = x.add(&z1) == x && x.add(&z2) == x;
        let either = x.add(&z1) == x || x.add(&z2) == x;
        let antisymmetric = !(x.surpasses(&y) && y.surpasses(&x)) || x == y;
        prop_assert!(!premise || both);
        prop_assert!(!premise || either);
        prop_assert!(antisymmetric);
    }

    #[test]
    fn supertropical_surpass(b in supertropical(), z1 in supertropical_quasi_zero(), z2 in supertropical_quasi_zero(), a in supertropical()) {
        surpass_chain(&b, &z1, &z2)?;
        transitive_on(&a, &b.add(&z1), &b)?;
        prop_assert_eq!(a.surpasses(&b), supertropical_surpass_oracle(&a, &b));
    }

    #[test]
    fn natural_surpass(b in natural(), k1 in 0u64..20, k2 in 0u64..20, a in natural()) {
        let (z1, z2) = (Natural::new(2 * k1), Natural::new(2 * k2));
        surpass_chain(&b, &z1, &z2)?;
        transitive_on(&a, &b.add(&z1), &b)?;
    }

    #[test]
    fn sym_natural_surpass(b in sym_natural(), k1 in natural(), k2 in natural(), a in sym_natural()) {
        let z1 = SymPair::new(k1.clone(), k1);
        let z2 = SymPair::new(k2.clone(), k2);
        surpass_chain(&b, &z1, &z2)?;
        prop_assert_eq!(a.surpasses(&b), natural_pair_surpass_oracle(&a, &b));
    }

    #[test]
    fn sym_max_plus_surpass(b in sym_max_plus(), k1 in max_plus(), k2 in max_plus(), a in sym_max_plus()) {
        let z1 = SymPair::new(k1.clone(), k1);
        let z2 = SymPair::new(k2.clone(), k2);
        surpass_chain(&b, &z1, &z2)?;
        prop_assert_eq!(a.surpasses(&b), max_plus_pair_surpass_oracle(&a, &b));
        transitive_on(&a, &b, &b.add(&z1))?;
    }

    #[test]
    fn twist_laws(a in sym_natural(), b in sym_natural(), c in sym_natural()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        let expected = SymPair::new(
            Natural::new(0).add(&a.pos.mul(&b.pos)).add(&a.neg.mul(&b.neg)),
            a.pos.mul(&b.neg).add(&a.neg.mul(&b.pos)),
        );
        prop_assert_eq!(a.mul(&b), expected);
        let swap = SymPair::new(Natural::new(0), Natural::new(1));
        prop_assert_eq!(swap.mul(&a), a.negate());
    }

    #[test]
    fn twist_laws_max_plus(a in sym_max_plus(), b in sym_max_plus(), c in sym_max_plus()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }
}
