use serde_json::{json, Value};

use super::words::{free_commutator, FreeWordElement, Word};
use crate::lie_core::FreeLieAlgebra;
use crate::linalg::json::vector_to_json;
use crate::linalg::{CoefficientGrid, Vector};
use crate::scalar_core::{EltScalar, NegationSemiring};

/// `Σ v_i x_i` as a degree-one element.
pub fn embed(v: &Vector<EltScalar>) -> FreeWordElement {
    FreeWordElement::from_terms(
        v.entries()
            .iter()
            .enumerate()
            .map(|(i, c)| (Word(vec![i]), c.clone())),
    )
}

/// One defining relation of the enveloping algebra: `x_i x_j ⊖ x_j x_i` and the
/// image of `[x_i, x_j]`. Only the pair is produced; no congruence is closed.
pub fn enveloping_relation(l: &FreeLieAlgebra, i: usize, j: usize) -> (FreeWordElement, FreeWordElement) {
    let lhs = free_commutator(&FreeWordElement::symbol(i), &FreeWordElement::symbol(j));
    let rhs = embed(&l.constants().basis_bracket(i, j));
    (lhs, rhs)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PbwStep {
    pub name: String,
    pub passed: bool,
}

/// The computations showing that the two-dimensional algebra with
/// `[x_i, x_i] = (1,0)x_1 + (1,0)x_2` and `[x_1, x_2] = x_1 + x_2` admits no
/// injective morphism into an associative algebra with the negated commutator.
#[derive(Clone, Debug, PartialEq)]
pub struct PbwReport {
    /// `[x_1,[x_1,x_2]] + [x_1,[x_2,x_1]]`.
    pub y1: Vector<EltScalar>,
    /// `[x_2,[x_1,x_1]]`.
    pub y2: Vector<EltScalar>,
    pub surpass_y2_y1: bool,
    pub equal: bool,
    /// The same expressions over free symbols `a_1, a_2`.
    pub b1: FreeWordElement,
    pub b2: FreeWordElement,
    /// `b_1 ⊨ b_2` in the free associative algebra.
    pub strong_jacobi_in_free: bool,
    /// `⊨` is antisymmetric because the quasi-zeros are additively idempotent.
    pub partial_order: bool,
    pub steps: Vec<PbwStep>,
    pub conclusion: Option<String>,
}

impl PbwReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.passed) && self.conclusion.is_some()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "y1": vector_to_json(&self.y1),
            "y2": vector_to_json(&self.y2),
            "surpass_y2_y1": self.surpass_y2_y1,
            "equal": self.equal,
            "b1": self.b1.to_json(),
            "b2": self.b2.to_json(),
            "strong_jacobi_in_free": self.strong_jacobi_in_free,
            "partial_order": self.partial_order,
            "steps": self.steps.iter().map(|s| json!({"name": s.name, "passed": s.passed})).collect::<Vec<_>>(),
            "conclusion": self.conclusion,
        })
    }
}

/// Antisymmetry of `⊨` and idempotence of quasi-zero addition on grid scalars.
fn partial_order_on(values: &[EltScalar]) -> bool {
    let idempotent = values
        .iter()
        .filter(|q| q.is_quasi_zero())
        .all(|q| &q.add(q) == q);
    let antisymmetric = values.iter().all(|a| {
        values
            .iter()
            .all(|b| !(a.surpasses(b) && b.surpasses(a)) || a == b)
    });
    idempotent && antisymmetric
}

pub fn pbw_counterexample() -> PbwReport {
    let l = FreeLieAlgebra::pbw_example();
    let (x1, x2) = (l.basis(0), l.basis(1));
    let br = |a: &Vector<EltScalar>, b: &Vector<EltScalar>| l.bracket(a, b).expect("dimension 2");
    let y1 = br(&x1, &br(&x1, &x2)).add(&br(&x1, &br(&x2, &x1)));
    let y2 = br(&x2, &br(&x1, &x1));
    let sum = x1.add(&x2);
    let y1_expected = sum.scale(&EltScalar::new(1, 0));
    let y2_expected = sum.scale(&EltScalar::new(2, 0));

    let (a1, a2) = (FreeWordElement::symbol(0), FreeWordElement::symbol(1));
    let b1 = free_commutator(&a1, &free_commutator(&a1, &a2))
        .add(&free_commutator(&a1, &free_commutator(&a2, &a1)));
    let b2 = free_commutator(&a2, &free_commutator(&a1, &a1));

    let surpass_y2_y1 = y2.surpasses(&y1);
    let equal = y1 == y2;
    let strong_jacobi_in_free = b1.surpasses(&b2);
    let mut values: Vec<EltScalar> = CoefficientGrid::large().and_quasi_zeros().values().to_vec();
    values.push(EltScalar::Bottom);
    let partial_order = partial_order_on(&values);

    let steps = vec![
        PbwStep {
            name: "bracket table satisfies the axioms".into(),
            passed: l.verify().passed(),
        },
        PbwStep {
            name: "y1 = (1,0)x1 + (1,0)x2".into(),
            passed: y1 == y1_expected,
        },
        PbwStep {
            name: "y2 = (2,0)x1 + (2,0)x2".into(),
            passed: y2 == y2_expected,
        },
        PbwStep {
            name: "y1 + y2 is quasi-zero".into(),
            passed: y1.add(&y2).is_quasi_zero(),
        },
        PbwStep {
            name: "y2 surpasses y1".into(),
            passed: surpass_y2_y1,
        },
        PbwStep {
            name: "y1 differs from y2".into(),
            passed: !equal,
        },
        PbwStep {
            name: "b1 surpasses b2 in the free algebra".into(),
            passed: strong_jacobi_in_free,
        },
        PbwStep {
            name: "surpassing is a partial order".into(),
            passed: partial_order,
        },
    ];
    let conclusion = steps
        .iter()
        .all(|s| s.passed)
        .then(|| "no injective morphism exists".to_string());
    PbwReport {
        y1,
        y2,
        surpass_y2_y1,
        equal,
        b1,
        b2,
        strong_jacobi_in_free,
        partial_order,
        steps,
        conclusion,
    }
}
