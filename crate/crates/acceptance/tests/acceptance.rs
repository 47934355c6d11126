//! Acceptance run: one line per criterion, exact comparisons throughout.
//! Exits non-zero if any criterion fails.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rbx_core::algebra::laws::{check_prelie_axiom, check_rb_law};
use rbx_core::algebra::{
    sample_rational, Algebra, Model, Rescaled, RotaBaxter, SamplePlan, Sampled, Scalars,
};
use rbx_core::arith::{int, rat, LambdaSeries};
use rbx_core::combinatorics::{quasi_shuffle, MonoidAlphabet, Word, WordSum};
use rbx_core::identities::trees::FreePreLie;
use rbx_core::identities::{
    check_atkinson, check_atkinson_lemma, check_bogoliubov, check_bohnenblust_spitzer, check_flows_bch,
    check_flows_product_law, check_magnus_terms, check_nc_spitzer, check_spitzer_commutative,
    magnus_reference_terms, BsForm, Magma, RbPreLie,
};
use rbx_core::models::{
    IntegrationAlgebra, Laurent, LaurentAlgebra, MatrixAlgebra, Poly, PolyAlgebra, RatMatrix, SequenceAlgebra,
    Window, WordAlgebra,
};
use rbx_core::yang_baxter::{
    aybe_check, check_dendriform, check_modified_ybe, check_operator_ybe, check_quasi_shuffle_expansions,
    check_quasi_shuffle_relations, rb_from_tensor, AybeMode, TensorR,
};
use rbx_core::{CheckResult, Rational};

const SEED: u64 = 42;

/// Collected outcome of one criterion.
#[derive(Default)]
struct Tally {
    checks: usize,
    cases: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn add(&mut self, r: CheckResult) {
        self.checks += 1;
        self.cases += r.cases;
        if let Some(c) = r.counterexample {
            self.failures.push(format!("{}: {c}", r.name));
        }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        self.checks += 1;
        self.cases += 1;
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }
}

struct Criterion {
    id: &'static str,
    title: &'static str,
    budget: Duration,
    run: fn() -> Tally,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn random(trials: usize) -> SamplePlan {
    SamplePlan::random(trials, SEED)
}

fn rb_exhaustive_and_random<A: Model>(t: &mut Tally, alg: &A, exhaustive: bool) {
    if exhaustive {
        t.add(check_rb_law(alg, &SamplePlan::exhaustive()));
    }
    t.add(check_rb_law(alg, &random(200)));
}

fn c1_rb_laws() -> Tally {
    let mut t = Tally::default();
    rb_exhaustive_and_random(&mut t, &MatrixAlgebra::new(2), true);
    rb_exhaustive_and_random(&mut t, &MatrixAlgebra::new(3), true);
    rb_exhaustive_and_random(&mut t, &SequenceAlgebra::summation(10), true);
    rb_exhaustive_and_random(&mut t, &SequenceAlgebra::standard_commutative(10, 6, 3), true);
    rb_exhaustive_and_random(&mut t, &SequenceAlgebra::standard_noncommutative(10, 6, 3), false);
    let laurent = LaurentAlgebra::new(2, 3);
    t.require(laurent.basis().len() == 6, "Laurent basis is ε^k for k in [-2, 3]");
    rb_exhaustive_and_random(&mut t, &laurent, true);
    let integration = IntegrationAlgebra::with_coefficients(Scalars, 16, 6);
    t.require(integration.basis().len() == 7, "integration basis is t^k for k <= 6");
    rb_exhaustive_and_random(&mut t, &integration, true);
    rb_exhaustive_and_random(&mut t, &WordAlgebra::new(int(1), 4, 3), false);
    t
}

fn c2_spitzer() -> Tally {
    let mut t = Tally::default();
    let standard = SequenceAlgebra::standard_commutative(8, 6, 7);
    t.add(check_spitzer_commutative(&standard, &standard.generator(), 5).unwrap());
    let integration = IntegrationAlgebra::new(16);
    t.add(check_spitzer_commutative(&integration, &integration.power(1), 5).unwrap());
    t
}

fn c3_nc_spitzer() -> Tally {
    let mut t = Tally::default();
    let m2 = MatrixAlgebra::new(2);
    let x = m2.add(&m2.unit(1, 2), &m2.unit(2, 1));
    t.add(check_nc_spitzer(&m2, &x, 4).unwrap());
    let m3 = MatrixAlgebra::new(3);
    let mut rng = random(1).rng();
    for _ in 0..50 {
        let x = RatMatrix::from_fn(3, |_, _| sample_rational(&mut rng));
        t.add(check_nc_spitzer(&m3, &x, 4).unwrap());
    }
    let nc = SequenceAlgebra::standard_noncommutative(6, 4, 5);
    t.add(check_nc_spitzer(&nc, &nc.generator(), 4).unwrap());
    t
}

/// Grade `grade` of `Ω'(λx)` against the displayed expression, both in the
/// noncommutative standard algebra on its generator and in free pre-Lie
/// algebra on one generator.
fn magnus_grade(grade: usize, displayed: &[(Rational, Magma)]) -> Tally {
    let mut t = Tally::default();
    let nc = SequenceAlgebra::standard_noncommutative(7, 6, 6);
    let x = nc.generator();
    t.add(check_magnus_terms(&RbPreLie(&nc), "standard-nc", &x, grade, displayed));
    let free = FreePreLie;
    t.add(check_magnus_terms(&free, "rooted-trees", &free.generator(), grade, displayed));
    t
}

fn xx() -> Magma {
    Magma::pre(Magma::X, Magma::X)
}

fn c4a_magnus_lambda2() -> Tally {
    magnus_grade(2, &[(rat(1, 2), xx())])
}

fn c4b_magnus_lambda3() -> Tally {
    magnus_grade(3, &[(rat(1, 4), Magma::pre(xx(), Magma::X)), (rat(1, 12), Magma::pre(Magma::X, xx()))])
}

fn c4c_magnus_lambda4() -> Tally {
    let displayed = [
        (rat(-1, 6), Magma::pre(Magma::pre(xx(), Magma::X), Magma::X)),
        (rat(-1, 12), Magma::pre(Magma::X, Magma::pre(xx(), Magma::X))),
    ];
    let mut t = magnus_grade(4, &displayed);
    let computed = magnus_grade(4, &magnus_reference_terms(4));
    if computed.failures.is_empty() {
        t.note("the computed grade-4 term is +1/6 ((x>x)>x)>x + 1/12 x>((x>x)>x)");
    }
    t
}

/// `Σ_a c_a x_a` at every window entry.
fn linear_window(alg: &SequenceAlgebra<PolyAlgebra>, letters: u32, rng: &mut rbx_core::algebra::SampleRng) -> Window<Poly> {
    let base = alg.base();
    alg.from_fn(|_| {
        (1..=letters).fold(base.zero(), |acc, a| base.add(&acc, &base.scale(&sample_rational(rng), &Poly::var(a))))
    })
}

fn c5_bohnenblust_spitzer() -> Tally {
    let mut t = Tally::default();
    let mut rng = random(1).rng();
    let comm = SequenceAlgebra::standard_commutative(6, 5, 3);
    let nc = SequenceAlgebra::standard_noncommutative(5, 5, 2);
    let comm_ops: Vec<_> = (0..5).map(|_| linear_window(&comm, 3, &mut rng)).collect();
    let nc_ops: Vec<_> = (0..5).map(|_| linear_window(&nc, 2, &mut rng)).collect();
    let m3 = MatrixAlgebra::new(3);
    let matrix_ops: Vec<_> = (0..5).map(|_| m3.random_element(&mut rng)).collect();
    let integration = IntegrationAlgebra::new(16);
    let int_ops: Vec<_> = (0..5).map(|_| integration.random_element(&mut rng)).collect();
    let rescaled = Rescaled::new(&nc, rat(2, 3));
    for n in 2..=5 {
        t.add(check_bohnenblust_spitzer(&comm, &comm_ops[..n], BsForm::CommutativePartitions).unwrap());
        t.add(check_bohnenblust_spitzer(&m3, &matrix_ops[..n], BsForm::CyclesPrelie).unwrap());
        t.add(check_bohnenblust_spitzer(&nc, &nc_ops[..n], BsForm::CyclesPrelie).unwrap());
        t.add(check_bohnenblust_spitzer(&rescaled, &nc_ops[..n], BsForm::CyclesPrelie).unwrap());
        t.add(check_bohnenblust_spitzer(&integration, &int_ops[..n], BsForm::WeightZero).unwrap());
    }
    t
}

fn c6_atkinson() -> Tally {
    let mut t = Tally::default();
    let plan = random(200);
    let nc = SequenceAlgebra::standard_noncommutative(6, 5, 3);
    t.add(check_atkinson(&nc, &nc.generator(), 5).unwrap());
    t.add(check_atkinson_lemma(&nc, &plan));
    let laurent = LaurentAlgebra::new(2, 3);
    let lx = Laurent::from_terms([(-1, int(1)), (0, int(1)), (1, int(1))]);
    t.add(check_atkinson(&laurent, &lx, 5).unwrap());
    t.add(check_atkinson_lemma(&laurent, &plan));
    let m = MatrixAlgebra::new(3);
    let mx = m.add(&m.unit(1, 2), &m.add(&m.unit(2, 1), &m.unit(3, 2)));
    t.add(check_atkinson(&m, &mx, 5).unwrap());
    t.add(check_atkinson_lemma(&m, &plan));
    let integration = IntegrationAlgebra::new(16);
    t.add(check_atkinson(&integration, &integration.power(1), 5).unwrap());
    t.add(check_atkinson_lemma(&integration, &plan));
    t
}

fn c7_bogoliubov() -> Tally {
    let mut t = Tally::default();
    let alg = LaurentAlgebra::new(2, 3);
    let mut rng = random(1).rng();
    for _ in 0..20 {
        let mut coeffs = vec![Laurent::zero()];
        for _ in 1..=4 {
            coeffs.push(alg.random_bounded(&mut rng, 2, 3));
        }
        t.add(check_bogoliubov(&alg, &LambdaSeries::from_coeffs(coeffs)).unwrap());
    }
    t
}

fn c8_flows() -> Tally {
    let mut t = Tally::default();
    let m2 = MatrixAlgebra::new(2);
    let m3 = MatrixAlgebra::new(3);
    for (x, y) in SamplePlan::exhaustive().pairs(&m2) {
        t.add(check_flows_bch(&m2, &x, &y, 3).unwrap());
        t.add(check_flows_product_law(&m2, &x, &y, 4).unwrap());
    }
    for (x, y) in random(20).pairs(&m3) {
        t.add(check_flows_bch(&m3, &x, &y, 3).unwrap());
        t.add(check_flows_product_law(&m3, &x, &y, 4).unwrap());
    }
    t
}

fn c9_half_shuffles_and_prelie() -> Tally {
    let mut t = Tally::default();
    let plan = random(50);
    let integration = IntegrationAlgebra::new(12);
    let shuffle_words = WordAlgebra::new(int(0), 4, 3);
    let words = WordAlgebra::new(int(1), 4, 3);
    // Shuffle relations at weight zero.
    t.add(check_quasi_shuffle_relations(&integration, &plan).unwrap());
    t.add(check_quasi_shuffle_relations(&shuffle_words, &plan).unwrap());
    // Quasi-shuffle relations at weight one.
    t.add(check_quasi_shuffle_relations(&words, &plan).unwrap());
    t.add(check_quasi_shuffle_relations(&SequenceAlgebra::standard_commutative(6, 4, 3), &plan).unwrap());
    t.add(check_quasi_shuffle_relations(&SequenceAlgebra::summation(10), &plan).unwrap());
    // Dendriform axioms at weight zero, commutative and not.
    t.add(check_dendriform(&integration, &plan).unwrap());
    t.add(check_dendriform(&shuffle_words, &plan).unwrap());
    let nilpotent = TensorR::new(3, vec![(RatMatrix::unit(3, 1, 3), RatMatrix::unit(3, 1, 3))]).unwrap();
    t.add(check_dendriform(&rb_from_tensor(nilpotent, AybeMode::Printed).unwrap(), &plan).unwrap());
    // Pre-Lie relation on every model.
    t.add(check_prelie_axiom(&MatrixAlgebra::new(3), &plan));
    t.add(check_prelie_axiom(&SequenceAlgebra::standard_noncommutative(5, 4, 2), &plan));
    t.add(check_prelie_axiom(&SequenceAlgebra::summation(8), &plan));
    t.add(check_prelie_axiom(&LaurentAlgebra::new(2, 3), &plan));
    t.add(check_prelie_axiom(&integration, &plan));
    t.add(check_prelie_axiom(&words, &plan));
    // Single letters: a ⊛ b = ab + ba + (a+b).
    let alpha = MonoidAlphabet::new(8);
    let (a, b) = (Word::letter(2), Word::letter(3));
    let expected = WordSum::from_terms([
        (Word(vec![2, 3]), int(1)),
        (Word(vec![3, 2]), int(1)),
        (Word(vec![5]), int(1)),
    ]);
    let got = quasi_shuffle(&a, &b, &alpha);
    t.require(got == expected, format!("x2 qsh x3 = {got}"));
    // R(x)R(y) and R(x)R(yR(z)) expansions, exhaustively on the word basis
    // and on random triples.
    t.add(check_quasi_shuffle_expansions(&words, &SamplePlan::exhaustive()).unwrap());
    t.add(check_quasi_shuffle_expansions(&words, &plan).unwrap());
    let x = words.generator();
    let r = |e: &_| words.operator(e);
    let lhs = words.mul(&r(&x), &r(&words.mul(&x, &r(&x))));
    let three = [
        r(&words.mul(&x, &r(&words.mul(&x, &r(&x))))),
        r(&words.mul(&x, &r(&words.mul(&x, &r(&x))))),
        r(&words.mul(&x, &r(&words.mul(&x, &r(&x))))),
        r(&words.mul(&words.mul(&x, &x), &r(&x))),
        r(&words.mul(&x, &r(&words.mul(&x, &x)))),
    ];
    let rhs = three.iter().fold(words.zero(), |acc, e| words.add(&acc, e));
    t.require(lhs == rhs, "R(x)R(xR(x)) five-term expansion on the generator");
    t
}

fn c10_yang_baxter() -> Tally {
    let mut t = Tally::default();
    let plan = random(50);
    t.add(check_modified_ybe(&MatrixAlgebra::new(2), &SamplePlan::exhaustive()));
    t.add(check_modified_ybe(&MatrixAlgebra::new(3), &plan));
    t.add(check_modified_ybe(&SequenceAlgebra::standard_commutative(6, 4, 3), &plan));
    t.add(check_modified_ybe(&SequenceAlgebra::standard_noncommutative(5, 4, 2), &plan));
    t.add(check_modified_ybe(&SequenceAlgebra::summation(10), &SamplePlan::exhaustive()));
    t.add(check_modified_ybe(&LaurentAlgebra::new(2, 3), &plan));
    t.add(check_modified_ybe(&IntegrationAlgebra::new(12), &plan));
    t.add(check_modified_ybe(&WordAlgebra::new(int(1), 4, 3), &plan));

    let m = MatrixAlgebra::new(2);
    let b = |x: &RatMatrix| rbx_core::algebra::b_operator(&m, x);
    let (x, y) = (m.unit(1, 2), m.unit(2, 1));
    t.require(
        m.mul(&b(&x), &b(&y)) == m.neg(&m.unit(1, 1)),
        "B(E12)B(E21) = -E11",
    );

    let r = TensorR::new(2, vec![(RatMatrix::unit(2, 1, 2), RatMatrix::unit(2, 1, 2))]).unwrap();
    t.add(aybe_check(&r, AybeMode::Printed));
    let alg = rb_from_tensor(r, AybeMode::Printed).unwrap();
    t.add(check_rb_law(&alg, &SamplePlan::exhaustive()));
    t.add(check_operator_ybe(&alg, &SamplePlan::exhaustive()).unwrap());
    t.add(check_operator_ybe(&alg, &plan).unwrap());
    let r3 = TensorR::new(3, vec![(RatMatrix::unit(3, 1, 3), RatMatrix::unit(3, 1, 3))]).unwrap();
    t.add(check_operator_ybe(&rb_from_tensor(r3, AybeMode::Printed).unwrap(), &plan).unwrap());
    t.add(check_operator_ybe(&IntegrationAlgebra::new(12), &plan).unwrap());
    t.add(check_operator_ybe(&Rescaled::new(MatrixAlgebra::new(3), int(0)), &plan).unwrap());

    let e11 = RatMatrix::unit(2, 1, 1);
    let diagonal = TensorR::new(2, vec![(e11.clone(), e11)]).unwrap();
    if !aybe_check(&diagonal, AybeMode::Printed).passed() {
        t.note("E11 (x) E11 fails the associative Yang-Baxter check");
    }
    t
}

/// Runs the verifier in-process, as the binary does, and reads back the
/// JSON report it writes.
fn rbx(args: &[&str]) -> (i32, String) {
    static RUNS: AtomicUsize = AtomicUsize::new(0);
    let path = std::env::temp_dir().join(format!(
        "rbx-acceptance-{}-{}.json",
        std::process::id(),
        RUNS.fetch_add(1, Ordering::Relaxed)
    ));
    let mut argv = vec!["rbx"];
    argv.extend_from_slice(args);
    argv.extend(["--format", "json", "--output", path.to_str().unwrap()]);
    let code = rbx::run(argv);
    let body = std::fs::read_to_string(&path).unwrap_or_default();
    let _ = std::fs::remove_file(&path);
    (code, body)
}

fn c11_negative_control() -> Tally {
    let mut t = Tally::default();
    let (code, body) = rbx(&["verify", "--suite", "rb-laws", "--model", "matrix-corrupted"]);
    t.require(code == 1, format!("exit code {code}, expected 1"));
    let report: serde_json::Value = serde_json::from_str(&body).unwrap_or_default();
    let checks = report["checks"].as_array().cloned().unwrap_or_default();
    let rb = checks
        .iter()
        .find(|c| c["name"].as_str().is_some_and(|n| n.starts_with("rb-law[")))
        .cloned()
        .unwrap_or_default();
    t.require(rb["status"] == "fail", "corrupted rb-law check did not fail");
    let rendered = rb["counterexample"].as_str().unwrap_or("");
    t.require(rendered.contains("R(x)R(y)"), "counterexample missing");
    if !rendered.is_empty() {
        t.note(rendered.to_string());
    }
    t.require(report["failed"].as_u64().unwrap_or(0) > 0, "failed count is zero");
    t
}

fn without_elapsed(body: &str) -> String {
    body.lines()
        .filter(|l| !l.trim_start().starts_with("\"elapsed_ms\""))
        .collect::<Vec<_>>()
        .join("\n")
}

fn c12_determinism() -> Tally {
    let mut t = Tally::default();
    let args = ["verify", "--suite", "all", "--seed", "42"];
    let ((code_a, a), (code_b, b)) = (rbx(&args), rbx(&args));
    t.require(code_a == 0, format!("first run exit {code_a}"));
    t.require(code_b == 0, format!("second run exit {code_b}"));
    t.require(!a.is_empty(), "empty report");
    t.require(without_elapsed(&a) == without_elapsed(&b), "reports differ");
    let report: serde_json::Value = serde_json::from_str(&a).unwrap_or_default();
    t.note(format!("{} checks in the full report", report["checks"].as_array().map_or(0, Vec::len)));
    t
}

fn clipped(s: &str, max: usize) -> String {
    match s.char_indices().nth(max) {
        Some((i, _)) => format!("{} ...", &s[..i]),
        None => s.to_string(),
    }
}

fn main() {
    let criteria = [
        Criterion { id: "1", title: "rota-baxter law on every model", budget: secs(5), run: c1_rb_laws },
        Criterion { id: "2", title: "spitzer identity, commutative", budget: secs(10), run: c2_spitzer },
        Criterion { id: "3", title: "noncommutative spitzer", budget: secs(30), run: c3_nc_spitzer },
        Criterion { id: "4a", title: "magnus lambda^2 = 1/2 x>x", budget: secs(5), run: c4a_magnus_lambda2 },
        Criterion {
            id: "4b",
            title: "magnus lambda^3 = 1/4 (x>x)>x + 1/12 x>(x>x)",
            budget: secs(5),
            run: c4b_magnus_lambda3,
        },
        Criterion {
            id: "4c",
            title: "magnus lambda^4 = -1/6 ((x>x)>x)>x - 1/12 x>((x>x)>x)",
            budget: secs(5),
            run: c4c_magnus_lambda4,
        },
        Criterion { id: "5", title: "bohnenblust-spitzer n = 2..5", budget: secs(60), run: c5_bohnenblust_spitzer },
        Criterion { id: "6", title: "atkinson factorization and lemma", budget: secs(10), run: c6_atkinson },
        Criterion { id: "7", title: "bogoliubov decomposition", budget: secs(5), run: c7_bogoliubov },
        Criterion { id: "8", title: "flows product and bch", budget: secs(30), run: c8_flows },
        Criterion {
            id: "9",
            title: "shuffle, quasi-shuffle, dendriform, pre-lie",
            budget: secs(10),
            run: c9_half_shuffles_and_prelie,
        },
        Criterion { id: "10", title: "yang-baxter variants", budget: secs(10), run: c10_yang_baxter },
        Criterion { id: "11", title: "negative control", budget: secs(30), run: c11_negative_control },
        Criterion { id: "12", title: "deterministic json report", budget: secs(120), run: c12_determinism },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let mut tally = (c.run)();
        let elapsed = start.elapsed();
        if elapsed > c.budget {
            tally.failures.push(format!("took {:.2} s, budget {} s", elapsed.as_secs_f64(), c.budget.as_secs()));
        }
        let ok = tally.failures.is_empty();
        failed += usize::from(!ok);
        println!(
            "criterion {:<3} {}  {} ({} checks, {} cases, {:.2} s)",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            tally.checks,
            tally.cases,
            elapsed.as_secs_f64()
        );
        for f in &tally.failures {
            println!("    failure: {}", clipped(f, 400));
        }
        for n in &tally.notes {
            println!("    note: {n}");
        }
    }
    println!("\n{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
