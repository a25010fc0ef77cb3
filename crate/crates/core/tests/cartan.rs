use itertools::Itertools;
use proptest::prelude::*;
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tropical_lie::cartan::*;
use tropical_lie::lie_core::{construct_2dim, construct_3dim, FreeLieAlgebra, StructureConstants};
use tropical_lie::linalg::{CoefficientGrid, EltPolynomial, Matrix, Vector};
use tropical_lie::{EltScalar, NegationSemiring, Rational};

fn s(t: i64, l: i64) -> EltScalar {
    EltScalar::new(t, l)
}

fn from_rows(rows: &[&[EltScalar]]) -> Matrix<EltScalar> {
    Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

/// Leibniz determinant with the sign as a `(0, ±1)` factor.
fn leibniz(a: &Matrix<EltScalar>, idx: &[usize]) -> EltScalar {
    let mut total = EltScalar::Bottom;
    for perm in idx.iter().copied().permutations(idx.len()) {
        let inversions = (0..perm.len())
            .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let mut term = if inversions % 2 == 0 { s(0, 1) } else { s(0, -1) };
        for (&r, &c) in idx.iter().zip(&perm) {
            term = term.mul(a.get(r, c));
        }
        total = total.add(&term);
    }
    total
}

/// `α_k` as the sum of the `k × k` principal minors of `(0,−1)A`.
fn alpha_by_minors(a: &Matrix<EltScalar>, k: usize) -> EltScalar {
    let scaled = a.scale(&s(0, -1));
    (0..a.rows())
        .combinations(k)
        .fold(EltScalar::Bottom, |acc, idx| acc.add(&leibniz(&scaled, &idx)))
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix<EltScalar> {
    let entries = (0..n * n)
        .map(|_| {
            if rng.gen_ratio(1, 5) {
                EltScalar::Bottom
            } else {
                s(rng.gen_range(-3..=3), rng.gen_range(-3..=3))
            }
        })
        .collect();
    Matrix::new(n, n, entries).unwrap()
}

#[test]
fn char_poly_examples() {
    let p = char_poly(&Matrix::zeros(2, 2)).unwrap();
    assert_eq!(p.alphas(), vec![EltScalar::Bottom, EltScalar::Bottom]);
    assert_eq!(p.poly.degree(), Some(2));

    let d = from_rows(&[&[s(1, 1), EltScalar::Bottom], &[EltScalar::Bottom, s(2, 1)]]);
    let p = char_poly(&d).unwrap();
    assert_eq!(p.poly, EltPolynomial::new(vec![s(3, 1), s(2, -1), s(0, 1)]));
    assert!(char_poly(&Matrix::zeros(2, 3)).is_err());
}

#[test]
fn char_poly_matches_principal_minors() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let n = rng.gen_range(1..=4);
        let a = random_matrix(&mut rng, n);
        let p = char_poly(&a).unwrap();
        for k in 1..=n {
            assert_eq!(p.alpha(k), alpha_by_minors(&a, k), "α_{k} of {a:?}");
        }
        assert_eq!(p.alpha(0), s(0, 1));
        assert_eq!(p.alpha(1), s(0, -1).mul(&a.trace().unwrap()));
    }
}

fn poly2(a1: EltScalar, a2: EltScalar) -> CharPoly {
    CharPoly {
        n: 2,
        poly: EltPolynomial::new(vec![a2, a1, s(0, 1)]),
    }
}

#[test]
fn essential_index_examples() {
    let set = |v: &[usize]| v.iter().copied().collect::<std::collections::BTreeSet<_>>();
    assert_eq!(essential_indices(&poly2(s(4, 1), s(2, 1))), set(&[1]));
    assert_eq!(essential_indices(&poly2(s(1, 1), s(4, 1))), set(&[2]));
    assert_eq!(essential_indices(&poly2(s(1, 1), s(2, 1))), set(&[1, 2]));
    assert_eq!(essential_indices(&poly2(EltScalar::Bottom, s(2, 1))), set(&[2]));
    assert_eq!(essential_indices(&poly2(EltScalar::Bottom, EltScalar::Bottom)), set(&[]));
}

#[test]
fn essential_trace_examples() {
    let d = from_rows(&[&[s(1, 1), EltScalar::Bottom], &[EltScalar::Bottom, s(2, 1)]]);
    let etr = essential_trace(&d).unwrap();
    assert!(etr.used_trace_branch);
    assert_eq!(etr.mu, Some(1));
    assert_eq!(etr.value, s(2, 1));

    // tr = (1,0) so α_1 = (1,0); det = (2,−1) + (4,−1) so α_2 = (4,−1); slopes 1 < 2.
    let a = from_rows(&[&[s(1, 1), s(2, 1)], &[s(2, 1), s(1, -1)]]);
    let etr = essential_trace(&a).unwrap();
    assert_eq!(etr.char_poly.alphas(), vec![s(1, 0), s(4, -1)]);
    assert!(!etr.used_trace_branch);
    assert_eq!(etr.mu, Some(2));
    assert_eq!(etr.value, s(2, 0));

    let b = from_rows(&[&[s(0, 1), s(1, 1)], &[s(0, 1), s(0, 1)]]);
    let etr = essential_trace(&b).unwrap();
    assert_eq!(etr.value, EltScalar::new(Rational::new(1, 2), 0));
}

/// Strictly upper triangular, conjugated by a permutation and a diagonal
/// scaling, plus sparse quasi-zero entries; or `uvᵗ` with `vᵗu` quasi-zero.
fn random_elt_nilpotent(rng: &mut ChaCha8Rng) -> Matrix<EltScalar> {
    let n = rng.gen_range(1..=4);
    if rng.gen_ratio(1, 4) && n >= 2 {
        let mut u: Vec<EltScalar> = (0..n).map(|_| s(rng.gen_range(-2..=2), rng.gen_range(1..=3))).collect();
        let mut v = u.clone();
        v.shuffle(rng);
        u.swap(0, n - 1);
        // u_0 v_0 = (9, L) and u_1 v_1 = (9, −L) cancel above every other term.
        let top = Rational::from_integer(9);
        let t = |x: &EltScalar| x.tangible().unwrap().clone();
        v[0] = EltScalar::new(&top - &t(&u[0]), v[0].layer());
        let l = u[0].layer() * v[0].layer();
        v[1] = EltScalar::new(&top - &t(&u[1]), -(l / u[1].layer()));
        return Matrix::from_fn(n, n, |i, j| u[i].mul(&v[j]));
    }
    let mut a = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_ratio(3, 4) {
                a.set(i, j, s(rng.gen_range(-3..=3), rng.gen_range(1..=3) * if rng.gen() { 1 } else { -1 }));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let scale: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
    let mut b = Matrix::from_fn(n, n, |i, j| {
        let e = a.get(perm[i], perm[j]).clone();
        e.mul(&s(scale[i] - scale[j], 1))
    });
    for i in 0..n {
        for j in 0..n {
            if rng.gen_ratio(1, 6) {
                let q = s(rng.gen_range(-3..=3), 0);
                b.set(i, j, b.get(i, j).add(&q));
            }
        }
    }
    b
}

#[test]
fn essential_trace_of_elt_nilpotent_matrices_has_layer_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut non_bottom = 0;
    for _ in 0..500 {
        let a = random_elt_nilpotent(&mut rng);
        assert!(is_elt_nilpotent(&a, a.rows()).unwrap().is_some(), "{a:?}");
        let etr = essential_trace(&a).unwrap();
        assert_eq!(etr.used_trace_branch, etr.indices.contains(&1));
        if !etr.value.is_bottom() {
            non_bottom += 1;
        }
        assert!(etr.value.layer_is_zero(), "etr({a:?}) = {}", etr.value);
    }
    assert!(non_bottom > 50, "only {non_bottom} samples had a non-bottom essential trace");
}

#[test]
fn elt_nilpotency_examples() {
    let mut a = Matrix::zeros(3, 3);
    a.set(0, 1, s(1, 2));
    a.set(0, 2, s(-1, 3));
    a.set(1, 2, s(0, -1));
    assert_eq!(is_elt_nilpotent(&a, 3).unwrap(), Some(3));
    assert!(a.power(3).unwrap().entries().iter().all(EltScalar::is_bottom));
    assert_eq!(is_elt_nilpotent(&Matrix::identity(3), 10).unwrap(), None);
    let q = Matrix::from_fn(3, 3, |i, j| s(i as i64 - j as i64, 0));
    assert_eq!(is_elt_nilpotent(&q, 1).unwrap(), Some(1));
}

fn abelian(n: usize) -> FreeLieAlgebra {
    FreeLieAlgebra::with_default_labels(StructureConstants::zero(n)).unwrap()
}

/// `sl2` with an extra central base vector `z`.
fn sl2_plus_center() -> FreeLieAlgebra {
    let sl2 = FreeLieAlgebra::sl2_type();
    let c = StructureConstants::from_fn(4, |i, j, l| {
        if i < 3 && j < 3 && l < 3 {
            sl2.constants().get(i, j, l).clone()
        } else {
            EltScalar::Bottom
        }
    });
    FreeLieAlgebra::new(c, vec!["e".into(), "f".into(), "h".into(), "z".into()]).unwrap()
}

#[test]
fn killing_form_examples() {
    let k = killing_form(&abelian(3));
    assert!(k.gram.is_quasi_zero() && k.essential_gram.is_quasi_zero());

    let sl2 = FreeLieAlgebra::sl2_type();
    let k = killing_form(&sl2);
    assert_eq!(k.gram.get(2, 2), &s(0, 8));
    assert_eq!(k.gram.get(0, 1), &s(0, 4));
    let h = sl2.basis(2);
    assert_eq!(killing(&sl2, &h, &h).unwrap(), s(0, 8));
    assert_eq!(essential_killing(&sl2, &h, &h).unwrap(), k.essential_gram.get(2, 2).clone());
}

fn random_algebra(rng: &mut ChaCha8Rng) -> FreeLieAlgebra {
    let q = |rng: &mut ChaCha8Rng| match rng.gen_range(0..3) {
        0 => EltScalar::Bottom,
        _ => s(rng.gen_range(-1..=1), 0),
    };
    let any = |rng: &mut ChaCha8Rng| match rng.gen_range(0..4) {
        0 => EltScalar::Bottom,
        1 => s(rng.gen_range(-1..=1), 0),
        _ => s(rng.gen_range(-1..=1), rng.gen_range(1..=2) * if rng.gen() { 1 } else { -1 }),
    };
    if rng.gen() {
        return construct_2dim([q(rng), q(rng)], [q(rng), q(rng)], [any(rng), any(rng)]).unwrap();
    }
    loop {
        let mut c = StructureConstants::zero(3);
        for l in 0..3 {
            for i in 0..3 {
                c.set(i, i, l, q(rng));
            }
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                let v = if rng.gen_ratio(1, 2) { EltScalar::Bottom } else { any(rng) };
                c.set_antisymmetric(i, j, l, v);
            }
        }
        if let Ok(l) = construct_3dim(c) {
            return l;
        }
    }
}

#[test]
fn gram_matrices_are_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut essential_asymmetric = Vec::new();
    for _ in 0..200 {
        let l = random_algebra(&mut rng);
        let k = killing_form(&l);
        assert_eq!(k.gram, k.gram.transpose(), "{:?}", l.constants());
        if k.essential_gram != k.essential_gram.transpose() {
            essential_asymmetric.push(l.constants().clone());
        }
    }
    assert!(essential_asymmetric.is_empty(), "{:?}", essential_asymmetric.first());
}

#[test]
fn radical_probe_examples() {
    let grid = CoefficientGrid::small();
    let ab = probe_form_radical(&abelian(2), &grid);
    assert!(ab.degenerate());

    let sl2 = probe_form_radical(&FreeLieAlgebra::sl2_type(), &CoefficientGrid::default_elt());
    assert_eq!(sl2.witness, None);
    assert_eq!(sl2.probed, 13usize.pow(3) - 1);

    let w = probe_form_radical(&sl2_plus_center(), &grid).witness.unwrap();
    assert!(w.entries()[..3].iter().all(EltScalar::is_bottom));
    assert!(!w.get(3).is_quasi_zero());
}

#[test]
fn cartan_check_examples() {
    let grid = CoefficientGrid::small();
    let sl2 = cartan_check(&FreeLieAlgebra::sl2_type(), &grid, 2000);
    assert!(sl2.applicable() && sl2.consistent());
    assert_eq!(sl2.abelian_ideal, None);

    let ab = cartan_check(&abelian(2), &grid, 200);
    assert!(!ab.applicable());
    assert!(ab.abelian_ideal.is_some());

    let central = cartan_check(&sl2_plus_center(), &grid, 200);
    assert!(!central.applicable());
    let ideal = central.abelian_ideal.expect("span of z");
    assert!(ideal.gens.iter().all(|g| g.entries()[..3].iter().all(EltScalar::is_bottom)));
}

#[test]
fn cartan_criterion_never_violated_on_random_algebras() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let grid = CoefficientGrid::small();
    let mut applicable = 0;
    for _ in 0..60 {
        let l = random_algebra(&mut rng);
        let report = cartan_check(&l, &grid, 400);
        assert!(report.consistent(), "{:?}: {report:?}", l.constants());
        applicable += report.applicable() as usize;
    }
    println!("{applicable} of 60 algebras had no radical witness");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn trace_branch_iff_first_index_is_essential(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=3);
        let a = random_matrix(&mut rng, n);
        let etr = essential_trace(&a).unwrap();
        prop_assert_eq!(etr.used_trace_branch, etr.indices.contains(&1));
        if etr.used_trace_branch {
            prop_assert_eq!(etr.value, a.trace().unwrap());
        } else {
            prop_assert!(etr.value.layer_is_zero());
        }
        if let Some(mu) = etr.mu {
            prop_assert!(etr.indices.contains(&mu));
        }
    }

    #[test]
    fn killing_is_symmetric_on_vectors(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = random_algebra(&mut rng);
        let v = |rng: &mut ChaCha8Rng| Vector((0..l.dim()).map(|_| s(rng.gen_range(-2..=2), rng.gen_range(-2..=2))).collect());
        let (x, y) = (v(&mut rng), v(&mut rng));
        prop_assert_eq!(killing(&l, &x, &y).unwrap(), killing(&l, &y, &x).unwrap());
    }
}
