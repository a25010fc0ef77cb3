use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use tropical_lie::cartan::{cartan_check, killing_form};
use tropical_lie::lie_core::json::{algebra_from_json, constants_from_json};
use tropical_lie::lie_core::{
    classical_algebra, derived_series, is_nilpotent, is_solvable, lower_central_series,
    negated_commutator, verify_axioms, ClassicalKind, FreeLieAlgebra, IdealGenerators, Verdict,
};
use tropical_lie::lift::{
    dependence_via_lift, verify_lift_laws, FreeLift, LiftReport, ParityLift, PuiseuxLift,
};
use tropical_lie::linalg::json::{matrix_to_json, vector_to_json};
use tropical_lie::linalg::{CoefficientGrid, GridSize, Vector};
use tropical_lie::scalar_core::format::{eval_expression, scalar_to_json};
use tropical_lie::{EltScalar, Rational};

#[derive(Parser)]
#[command(name = "tlie", version, about = "Exact computations over ELT semirings and Lie semialgebras")]
struct Cli {
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Coefficient grid for brute-force searches.
    #[arg(long, global = true, value_enum, default_value_t = Grid::Default)]
    grid: Grid,
    /// Bound on the length of derived and lower central series.
    #[arg(long, global = true, default_value_t = 6)]
    kmax: usize,
    /// Truncation order for Puiseux series.
    #[arg(long, global = true, default_value = "4")]
    order: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Grid {
    Small,
    Default,
    Large,
}

impl From<Grid> for GridSize {
    fn from(g: Grid) -> Self {
        match g {
            Grid::Small => GridSize::Small,
            Grid::Default => GridSize::Default,
            Grid::Large => GridSize::Large,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an ELT expression such as "(3,2)+(1,5)".
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Verify the axioms of a structure-constant file ("-" reads stdin).
    LieCheck { file: PathBuf },
    /// Derived and lower central series with solvability and nilpotency verdicts.
    LieSeries { file: PathBuf },
    /// Killing form, essential Killing form and the Cartan consistency check.
    LieKilling {
        file: PathBuf,
        /// Number of candidate ideals to examine.
        #[arg(long, default_value_t = 400)]
        samples: usize,
    },
    /// Generators of gl(n), A_n, B_n, C_n or D_n and a closure check.
    LieClassical { kind: String, n: usize },
    /// Lift-law suites and a dependence certificate for random vectors.
    LiftDemo {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Dimension n; n + 1 random vectors of length n are certified.
        #[arg(long, default_value_t = 3)]
        dim: usize,
    },
    /// Run the PBW counterexample.
    Pbw,
}

enum Failure {
    Input(String),
    Verification(Value),
}

type Outcome = Result<Value, Failure>;

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn read_json(path: &PathBuf) -> Result<Value, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| {
        input(format!(
            "{}: line {} column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })
}

fn read_algebra(path: &PathBuf) -> Result<FreeLieAlgebra, Failure> {
    algebra_from_json(&read_json(path)?).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Holds { step } => json!({"verdict": "holds", "step": step}),
        Verdict::Never { stabilized_at } => json!({"verdict": "never", "stabilized_at": stabilized_at}),
        Verdict::Inconclusive { reached } => json!({"verdict": "inconclusive", "reached": reached}),
    }
}

fn ideal_json(i: &IdealGenerators) -> Value {
    Value::Array(i.gens.iter().map(vector_to_json).collect())
}

fn lift_json(r: &LiftReport) -> Value {
    json!({
        "lift": r.lift,
        "samples": r.samples,
        "passed": r.passed(),
        "failures": r.failures.iter().map(|f| json!({"law": f.law.number(), "detail": f.detail})).collect::<Vec<_>>(),
    })
}

fn eval(expr: &str) -> Outcome {
    eval_expression(expr)
        .map(|s| scalar_to_json(&s))
        .map_err(|e| input(e.message))
}

fn lie_check(path: &PathBuf) -> Outcome {
    let (constants, labels) = constants_from_json(&read_json(path)?)
        .map_err(|e| input(format!("{}: {}", path.display(), e.message)))?;
    let r = verify_axioms(&constants);
    let out = json!({
        "dim": constants.dim(),
        "base": labels,
        "passed": r.passed(),
        "antisymmetry": r.antisymmetry.iter().map(|&(i, j, l)| [i + 1, j + 1, l + 1]).collect::<Vec<_>>(),
        "alternating": r.alternating.iter().map(|&(i, l)| [i + 1, l + 1]).collect::<Vec<_>>(),
        "jacobi": r.jacobi.iter().map(|&((i, j, k, m), ref s)| {
            json!({"indices": [i + 1, j + 1, k + 1, m + 1], "sum": scalar_to_json(s)})
        }).collect::<Vec<_>>(),
        "cyclic_sums": r.cyclic_sums.iter().map(|c| {
            let (i, j, k) = c.triple;
            json!({"triple": [i + 1, j + 1, k + 1], "sums": c.sums.iter().map(scalar_to_json).collect::<Vec<_>>()})
        }).collect::<Vec<_>>(),
    });
    if r.passed() {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn lie_series(path: &PathBuf, k_max: usize) -> Outcome {
    let l = read_algebra(path)?;
    Ok(json!({
        "derived": derived_series(&l, k_max).iter().map(ideal_json).collect::<Vec<_>>(),
        "lower_central": lower_central_series(&l, k_max).iter().map(ideal_json).collect::<Vec<_>>(),
        "solvable": verdict_json(&is_solvable(&l, k_max)),
        "nilpotent": verdict_json(&is_nilpotent(&l, k_max)),
    }))
}

fn lie_killing(path: &PathBuf, grid: &CoefficientGrid<EltScalar>, samples: usize) -> Outcome {
    let l = read_algebra(path)?;
    let k = killing_form(&l);
    let report = cartan_check(&l, grid, samples);
    let out = json!({
        "killing": matrix_to_json(&k.gram),
        "essential_killing": matrix_to_json(&k.essential_gram),
        "probed": report.radical.probed,
        "test_vectors": report.radical.test_vectors,
        "candidates": report.candidates,
        "degeneracy_witness": report.radical.witness.as_ref().map(vector_to_json),
        "abelian_ideal_witness": report.abelian_ideal.as_ref().map(ideal_json),
        "applicable": report.applicable(),
        "consistent": report.consistent(),
    });
    if report.consistent() {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

const MAX_CLASSICAL_SIZE: usize = 9;

fn lie_classical(kind: &str, n: usize) -> Outcome {
    let kind: ClassicalKind = kind.parse().map_err(|e: tropical_lie::ParseError| input(e.message))?;
    let a = classical_algebra(kind, n).map_err(input)?;
    if a.size > MAX_CLASSICAL_SIZE {
        return Err(input(format!(
            "matrix size {} exceeds the limit {MAX_CLASSICAL_SIZE}",
            a.size
        )));
    }
    let mut open = Vec::new();
    for (p, x) in a.generators.iter().enumerate() {
        for (q, y) in a.generators.iter().enumerate() {
            let b = negated_commutator(x, y).map_err(input)?;
            if !a.contains(&b) {
                open.push([p + 1, q + 1]);
            }
        }
    }
    let out = json!({
        "kind": kind.to_string(),
        "n": n,
        "size": a.size,
        "generators": a.generators.iter().zip(&a.labels).map(|(m, name)| {
            json!({"label": name, "matrix": matrix_to_json(m)})
        }).collect::<Vec<_>>(),
        "closed": open.is_empty(),
        "unclosed_pairs": open,
    });
    if open.is_empty() {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn random_entry(rng: &mut ChaCha8Rng) -> EltScalar {
    if rng.gen_bool(0.15) {
        EltScalar::Bottom
    } else {
        let l = [-2, -1, 1, 2][rng.gen_range(0..4)];
        EltScalar::new(rng.gen_range(-2..=2), l)
    }
}

fn lift_demo(seed: u64, order: &Rational, samples: usize, dim: usize) -> Outcome {
    if dim == 0 || dim > 6 {
        return Err(input(format!("--dim must lie in 1..=6, got {dim}")));
    }
    let reports = [
        verify_lift_laws(&PuiseuxLift, samples, seed),
        verify_lift_laws(&FreeLift, samples, seed),
    ];
    let parity = verify_lift_laws(&ParityLift, samples, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vectors: Vec<Vector<EltScalar>> = (0..=dim)
        .map(|_| Vector((0..dim).map(|_| random_entry(&mut rng)).collect()))
        .collect();
    let cert = dependence_via_lift(&vectors, order);
    let certificate = match &cert {
        Ok(c) => {
            let mut sum = Vector::zeros(dim);
            for (a, v) in c.coefficients.iter().zip(&vectors) {
                sum = sum.add(&v.scale(a));
            }
            let verified = sum.is_quasi_zero()
                && sum == c.combination
                && c.coefficients.iter().any(|a| !a.is_bottom());
            json!({
                "coefficients": c.coefficients.iter().map(scalar_to_json).collect::<Vec<_>>(),
                "combination": vector_to_json(&c.combination),
                "perturbation": c.perturbation,
                "verified": verified,
            })
        }
        Err(e) => json!({"error": e.to_string(), "verified": false}),
    };
    let passed = reports.iter().all(LiftReport::passed) && certificate["verified"] == true;
    let out = json!({
        "order": order.to_string(),
        "laws": reports.iter().chain([&parity]).map(lift_json).collect::<Vec<_>>(),
        "vectors": vectors.iter().map(vector_to_json).collect::<Vec<_>>(),
        "certificate": certificate,
    });
    if passed {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn pbw() -> Outcome {
    let report = tropical_lie::pbw::pbw_counterexample();
    if report.passed() {
        Ok(report.to_json())
    } else {
        Err(Failure::Verification(report.to_json()))
    }
}

fn run(cli: Cli) -> Outcome {
    let grid = CoefficientGrid::preset(cli.grid.into());
    let order: Rational = cli
        .order
        .parse()
        .map_err(|e: tropical_lie::ParseError| input(format!("--order: {}", e.message)))?;
    if order <= Rational::zero() {
        return Err(input("--order must be positive"));
    }
    match cli.command {
        Command::Eval { expr } => eval(&expr),
        Command::LieCheck { file } => lie_check(&file),
        Command::LieSeries { file } => lie_series(&file, cli.kmax),
        Command::LieKilling { file, samples } => lie_killing(&file, &grid, samples),
        Command::LieClassical { kind, n } => lie_classical(&kind, n),
        Command::LiftDemo { samples, dim } => lift_demo(cli.seed, &order, samples, dim),
        Command::Pbw => pbw(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(v)) => {
            println!("{v}");
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
