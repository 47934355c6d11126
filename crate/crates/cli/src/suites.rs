use std::time::Instant;

use rayon::prelude::*;
use rbx_core::algebra::laws::{
    check_double_assoc_and_hom, check_half_shuffles, check_linearity, check_prelie_axiom,
    check_projector, check_rb_law, check_tilde_rb, check_weight_rescale,
};
use rbx_core::algebra::vector_fields::check_cayley_prelie;
use rbx_core::algebra::{Model, SamplePlan};
use rbx_core::arith::{binomial, int, rat, LambdaSeries};
use rbx_core::combinatorics::{is_shuffle_of, quasi_shuffle, shuffle, MonoidAlphabet, Word, WordSum};
use rbx_core::identities::trees::FreePreLie;
use rbx_core::identities::{
    check_atkinson, check_atkinson_lemma, check_bogoliubov, check_bohnenblust_spitzer,
    check_flows_bch, check_flows_product_law, check_magnus_terms, check_nc_spitzer,
    check_spitzer_commutative, magnus_reference_terms, BsForm, RbPreLie,
};
use rbx_core::models::{symmetric_sweep, Laurent, RatMatrix, SequenceAlgebra};
use rbx_core::yang_baxter::{
    aybe_check, check_dendriform, check_modified_ybe, check_operator_ybe, check_quasi_shuffle_expansions,
    check_quasi_shuffle_relations, check_shuffle_of_images, rb_from_tensor, AybeMode, TensorR,
    AYBE_ANCHOR, QUASI_SHUFFLE_ANCHOR, SHUFFLE_ANCHOR,
};
use rbx_core::CheckResult;

use crate::config::{ModelKind, Suite, SuiteConfig};
use crate::error::CliError;
use crate::models::{laurent_model, standard_degree_cap, with_model, ModelOptions, Visitor};
use crate::report::Report;

type Checks = Result<Vec<CheckResult>, CliError>;
type Job<'a> = Box<dyn Fn() -> Checks + Send + Sync + 'a>;

/// Samples for laws quantified over triples.
const TRIPLE_BUDGET: usize = 50;
/// Random pairs for the flows checks.
const FLOW_PAIRS: usize = 20;
/// Random inputs for the Bogoliubov checks.
const BOGOLIUBOV_INPUTS: usize = 20;
/// Extra random elements for the noncommutative Spitzer check.
const NC_SPITZER_SAMPLES: usize = 5;

use ModelKind::*;

const ALL_MODELS: [ModelKind; 7] = [StandardComm, StandardNc, Laurent, Matrix, Integration, Summation, Words];

fn random_plan(cfg: &SuiteConfig) -> SamplePlan {
    SamplePlan::random(cfg.trials, cfg.seed)
}

fn triple_plan(cfg: &SuiteConfig) -> SamplePlan {
    SamplePlan::random(cfg.trials.min(TRIPLE_BUDGET), cfg.seed)
}

fn per_model<'a, V: Visitor + Send + 'a>(
    cfg: &'a SuiteConfig,
    defaults: &[ModelKind],
    opts: ModelOptions,
    v: V,
) -> Vec<Job<'a>> {
    let v = std::sync::Arc::new(v);
    let kinds = match cfg.model {
        Some(m) => vec![m],
        None => defaults.to_vec(),
    };
    kinds
        .into_iter()
        .map(|kind| {
            let (v, opts) = (v.clone(), opts.clone());
            Box::new(move || with_model(kind, cfg, &opts, &*v)) as Job<'a>
        })
        .collect()
}

fn only_models(cfg: &SuiteConfig, suite: Suite, allowed: &[ModelKind]) -> Result<(), CliError> {
    match cfg.model {
        Some(m) if !allowed.contains(&m) => Err(CliError::Incompatible {
            suite: suite.to_string(),
            model: m.to_string(),
            reason: format!(
                "supported models: {}",
                allowed.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
            ),
        }),
        _ => Ok(()),
    }
}

fn job<'a>(f: impl Fn() -> Checks + Send + Sync + 'a) -> Job<'a> {
    Box::new(f)
}

struct Laws<'a> {
    cfg: &'a SuiteConfig,
}

impl Visitor for Laws<'_> {
    fn visit<A: Model>(&self, alg: &A, _x: &A::Elem) -> Checks {
        let (plan, triples) = (random_plan(self.cfg), triple_plan(self.cfg));
        let exhaustive = SamplePlan::exhaustive();
        let mut out = vec![
            named(check_rb_law(alg, &exhaustive), "exhaustive"),
            named(check_rb_law(alg, &plan), &plan.describe()),
            check_linearity(alg, &plan),
            check_double_assoc_and_hom(alg, &triples),
            check_tilde_rb(alg, &plan),
            check_weight_rescale(alg, &rat(2, 3), &plan),
            check_half_shuffles(alg, &plan),
        ];
        if self.cfg.weight.is_none() && is_projector(&alg.name()) {
            out.push(check_projector(alg, &plan));
        }
        Ok(out)
    }
}

fn is_projector(name: &str) -> bool {
    name.starts_with("laurent") || name.starts_with("matrix")
}

fn named(mut r: CheckResult, detail: &str) -> CheckResult {
    r.name = format!("{} {detail}", r.name);
    r
}

struct Shuffles<'a> {
    cfg: &'a SuiteConfig,
}

impl Visitor for Shuffles<'_> {
    fn visit<A: Model>(&self, alg: &A, _x: &A::Elem) -> Checks {
        let plan = triple_plan(self.cfg);
        let small = SamplePlan::random(self.cfg.trials.min(20), self.cfg.seed);
        let mut out = vec![check_rb_law(alg, &random_plan(self.cfg)), check_quasi_shuffle_relations(alg, &plan)?];
        for (n, m) in [(1, 1), (1, 2), (2, 2)] {
            out.push(check_shuffle_of_images(alg, &small, n, m)?);
        }
        Ok(out)
    }
}

fn word(letters: &[u32]) -> Word {
    Word(letters.to_vec())
}

fn shuffle_combinatorics() -> Checks {
    let mut failure = None;
    let mut cases = 0;
    for (p, q) in [(1, 1), (2, 2), (3, 3), (2, 4)] {
        cases += 1;
        let u = Word((1..=p).collect());
        let v = Word((10..10 + q).collect());
        let count = shuffle(&u, &v).len();
        if rat(count as i64, 1) != binomial((p + q) as usize, p as usize) {
            failure.get_or_insert(format!("|{u} sh {v}| = {count}"));
        }
    }
    let (u, v) = (word(&[1, 2, 3]), word(&[4, 5, 6]));
    cases += 2;
    if !is_shuffle_of(&word(&[1, 4, 5, 2, 6, 3]), &u, &v) {
        failure.get_or_insert("x1x4x5x2x6x3 not found among the shuffles of x1x2x3 and x4x5x6".into());
    }
    let (x, y) = (word(&[1, 2, 3, 4]), word(&[5, 6, 7]));
    cases += 3;
    for (w, expected) in [
        (word(&[1, 5, 2, 6, 7, 3, 4]), true),
        (word(&[1, 2, 5, 6, 3, 4, 7]), true),
        (word(&[1, 4, 2, 5, 6, 3, 7]), false),
    ] {
        if is_shuffle_of(&w, &x, &y) != expected {
            failure.get_or_insert(format!("shuffle membership of {w} should be {expected}"));
        }
    }
    Ok(vec![CheckResult::from_outcome("shuffle-words", SHUFFLE_ANCHOR, cases, failure)])
}

struct QuasiShuffles<'a> {
    cfg: &'a SuiteConfig,
}

impl Visitor for QuasiShuffles<'_> {
    fn visit<A: Model>(&self, alg: &A, _x: &A::Elem) -> Checks {
        let plan = triple_plan(self.cfg);
        Ok(vec![check_quasi_shuffle_relations(alg, &plan)?, check_quasi_shuffle_expansions(alg, &plan)?])
    }
}

fn quasi_shuffle_combinatorics() -> Checks {
    let alpha = MonoidAlphabet::new(12);
    let mut failure = None;
    let single = quasi_shuffle(&Word::letter(1), &Word::letter(2), &alpha);
    let expected = WordSum::from_terms([(word(&[1, 2]), int(1)), (word(&[2, 1]), int(1)), (word(&[3]), int(1))]);
    if single != expected {
        failure = Some(format!("x1 qsh x2 = {single}, expected x1x2 + x2x1 + x3"));
    }
    // Letters add: y1 = x5 + x2 = x7, y2 = x6 + x3 = x9, z1 = x1 + x4 = x5.
    let long = quasi_shuffle(&word(&[1, 2, 3]), &word(&[4, 5, 6]), &alpha);
    for w in [word(&[1, 4, 5, 2, 6, 3]), word(&[1, 4, 7, 9]), word(&[5, 5, 2, 9])] {
        if long.coefficient(&w) <= int(0) {
            failure.get_or_insert(format!("{w} missing from x1x2x3 qsh x4x5x6"));
        }
    }
    Ok(vec![CheckResult::from_outcome("quasi-shuffle-words", QUASI_SHUFFLE_ANCHOR, 4, failure)])
}

struct Dendriform<'a> {
    cfg: &'a SuiteConfig,
}

impl Visitor for Dendriform<'_> {
    fn visit<A: Model>(&self, alg: &A, _x: &A::Elem) -> Checks {
        Ok(vec![check_dendriform(alg, &triple_plan(self.cfg))?])
    }
}

fn nilpotent_tensor(n: usize) -> TensorR {
    TensorR::new(n, vec![(RatMatrix::unit(n, 1, n), RatMatrix::unit(n, 1, n))]).expect("square units")
}

fn tensor_dendriform(cfg: &SuiteConfig) -> Checks {
    let alg = rb_from_tensor(nilpotent_tensor(cfg.dim), AybeMode::Printed)?;
    Ok(vec![
        check_dendriform(&alg, &SamplePlan::exhaustive())?,
        check_dendriform(&alg, &triple_plan(cfg))?,
    ])
}

struct PreLieSuite<'a> {
    cfg: &'a SuiteConfig,
}

impl Visitor for PreLieSuite<'_> {
    fn visit<A: Model>(&self, alg: &A, _x: &A::Elem) -> Checks {
        let plan = triple_plan(self.cfg);
        let mut out = vec![check_prelie_axiom(alg, &plan)];
        let pairs = plan.pairs(alg);
        let mut parts = Vec::new();
        for (a, b) in pairs.iter().take(10) {
            parts.push(check_bohnenblust_spitzer(alg, &[a.clone(), b.clone()], BsForm::CyclesPrelie)?);
        }
        out.push(CheckResult::all(
            format!("bohnenblust-spitzer-pairs[{}]", alg.name()),
            rbx_core::identities::BS_ANCHOR,
            parts,
        ));
        Ok(out)
    }
}

struct Spitzer<'a> {
    cfg: &'a SuiteConfig,
}

impl Visitor for Spitzer<'_> {
    fn visit<A: Model>(&self, alg: &A, x: &A::Elem) -> Checks {
        Ok(vec![check_spitzer_commutative(alg, x, self.cfg.order)?])
    }
}

struct NcSpitzer<'a> {
    cfg: &'a SuiteConfig,
}

impl Visitor for NcSpitzer<'_> {
    fn visit<A: Model>(&self, alg: &A, x: &A::Elem) -> Checks {
        let order = self.cfg.order.min(nc_order_cap(&alg.name()));
        let mut rng = random_plan(self.cfg).rng();
        let mut parts = vec![check_nc_spitzer(alg, x, order)?];
        for _ in 0..NC_SPITZER_SAMPLES {
            parts.push(check_nc_spitzer(alg, &alg.random_element(&mut rng), order)?);
        }
        Ok(parts)
    }
}

/// Noncommutative logarithms over free words grow quickly; the standard
/// noncommutative algebra is checked to order 4.
fn nc_order_cap(name: &str) -> usize {
    if name.starts_with("standard-nc") {
        4
    } else {
        usize::MAX
    }
}

struct Magnus<'a> {
    cfg: &'a SuiteConfig,
}

impl Visitor for Magnus<'_> {
    fn visit<A: Model>(&self, alg: &A, x: &A::Elem) -> Checks {
        let p = RbPreLie(alg);
        let top = self.cfg.order.min(4);
        Ok((2..=top)
            .map(|g| check_magnus_terms(&p, &alg.name(), x, g, &magnus_reference_terms(g)))
            .collect())
    }
}

fn magnus_free(cfg: &SuiteConfig) -> Checks {
    let p = FreePreLie;
    let x = p.generator();
    Ok((2..=cfg.order.min(4))
        .map(|g| check_magnus_terms(&p, "rooted-trees", &x, g, &magnus_reference_terms(g)))
        .collect())
}

struct Bohnenblust<'a> {
    cfg: &'a SuiteConfig,
}

impl Visitor for Bohnenblust<'_> {
    fn visit<A: Model>(&self, alg: &A, _x: &A::Elem) -> Checks {
        let forms: &[BsForm] = if alg.weight() == int(0) {
            &[BsForm::WeightZero, BsForm::CyclesPrelie]
        } else if alg.is_commutative() {
            &[BsForm::CommutativePartitions, BsForm::CyclesPrelie]
        } else {
            &[BsForm::CyclesPrelie]
        };
        let mut rng = random_plan(self.cfg).rng();
        let ops: Vec<A::Elem> = (0..self.cfg.bs_arity).map(|_| alg.random_element(&mut rng)).collect();
        let mut out = Vec::new();
        for n in 2.min(self.cfg.bs_arity)..=self.cfg.bs_arity {
            for &form in forms {
                out.push(check_bohnenblust_spitzer(alg, &ops[..n], form)?);
            }
        }
        Ok(out)
    }
}

struct Atkinson<'a> {
    cfg: &'a SuiteConfig,
}

impl Visitor for Atkinson<'_> {
    fn visit<A: Model>(&self, alg: &A, x: &A::Elem) -> Checks {
        let order = self.cfg.order.min(nc_order_cap(&alg.name()));
        Ok(vec![check_atkinson(alg, x, order)?, check_atkinson_lemma(alg, &random_plan(self.cfg))])
    }
}

fn bogoliubov(cfg: &SuiteConfig) -> Checks {
    let alg = laurent_model();
    let grades = cfg.order.min(4);
    let mut rng = random_plan(cfg).rng();
    let mut out = Vec::new();
    for _ in 0..cfg.trials.min(BOGOLIUBOV_INPUTS) {
        let mut coeffs = vec![Laurent::zero()];
        for _ in 1..=grades {
            coeffs.push(alg.random_bounded(&mut rng, 2, 3));
        }
        out.push(check_bogoliubov(&alg, &LambdaSeries::from_coeffs(coeffs))?);
    }
    Ok(vec![CheckResult::all("bogoliubov[laurent]", rbx_core::identities::BOGOLIUBOV_ANCHOR, out)])
}

struct Flows<'a> {
    cfg: &'a SuiteConfig,
}

impl Visitor for Flows<'_> {
    fn visit<A: Model>(&self, alg: &A, _x: &A::Elem) -> Checks {
        let (bch_order, law_order) = (self.cfg.order.min(3), self.cfg.order.min(4));
        let random = SamplePlan::random(self.cfg.trials.min(FLOW_PAIRS), self.cfg.seed);
        let mut out = Vec::new();
        for (label, pairs) in [("basis", SamplePlan::exhaustive().pairs(alg)), ("random", random.pairs(alg))] {
            let mut bch = Vec::new();
            let mut law = Vec::new();
            for (x, y) in &pairs {
                bch.push(check_flows_bch(alg, x, y, bch_order)?);
                law.push(check_flows_product_law(alg, x, y, law_order)?);
            }
            let anchor = rbx_core::identities::FLOWS_ANCHOR;
            out.push(CheckResult::all(format!("flows-bch[{}] {label}", alg.name()), anchor, bch));
            out.push(CheckResult::all(format!("flows-fixed-point[{}] {label}", alg.name()), anchor, law));
        }
        Ok(out)
    }
}

struct Modified<'a> {
    cfg: &'a SuiteConfig,
}

impl Visitor for Modified<'_> {
    fn visit<A: Model>(&self, alg: &A, _x: &A::Elem) -> Checks {
        Ok(vec![check_modified_ybe(alg, &triple_plan(self.cfg))])
    }
}

struct OperatorYbe<'a> {
    cfg: &'a SuiteConfig,
}

impl Visitor for OperatorYbe<'_> {
    fn visit<A: Model>(&self, alg: &A, _x: &A::Elem) -> Checks {
        Ok(vec![check_operator_ybe(alg, &triple_plan(self.cfg))?])
    }
}

fn associative_yang_baxter(cfg: &SuiteConfig) -> Checks {
    let mut out = Vec::new();
    let mut tensors = vec![nilpotent_tensor(2)];
    if cfg.dim > 2 {
        tensors.push(nilpotent_tensor(cfg.dim));
    }
    for r in tensors {
        for mode in [AybeMode::Printed, AybeMode::Standard] {
            out.push(named(aybe_check(&r, mode), &format!("r = {}", r.render())));
        }
        let alg = rb_from_tensor(r, AybeMode::Printed)?;
        out.push(check_rb_law(&alg, &SamplePlan::exhaustive()));
        out.push(check_operator_ybe(&alg, &SamplePlan::exhaustive())?);
        out.push(check_operator_ybe(&alg, &triple_plan(cfg))?);
    }
    let e11 = RatMatrix::unit(2, 1, 1);
    let diagonal = TensorR::new(2, vec![(e11.clone(), e11)]).expect("square units");
    let rejected = [AybeMode::Printed, AybeMode::Standard]
        .iter()
        .all(|&m| !aybe_check(&diagonal, m).passed());
    out.push(CheckResult::from_outcome(
        "aybe-rejects[E11 (x) E11]",
        AYBE_ANCHOR,
        2,
        (!rejected).then(|| format!("{} was accepted", diagonal.render())),
    ));
    Ok(out)
}

fn standard_symmetric(cfg: &SuiteConfig) -> Checks {
    let max_order = cfg.order.min(4);
    let cap = standard_degree_cap(cfg);
    let kinds = match cfg.model {
        Some(m) => vec![m],
        None => vec![StandardComm, StandardNc],
    };
    kinds
        .into_iter()
        .map(|kind| {
            let alg = match kind {
                StandardNc => SequenceAlgebra::standard_noncommutative(cfg.window, cap, cfg.alphabet),
                _ => SequenceAlgebra::standard_commutative(cfg.window, cap, cfg.alphabet),
            };
            Ok(symmetric_sweep(&alg, max_order)?)
        })
        .collect()
}

fn suite_jobs<'a>(suite: Suite, cfg: &'a SuiteConfig) -> Result<Vec<Job<'a>>, CliError> {
    let opts = ModelOptions::default();
    let free = cfg.model.is_none();
    let mut jobs: Vec<Job<'a>> = Vec::new();
    match suite {
        Suite::All => {
            for s in Suite::CONCRETE {
                jobs.extend(suite_jobs(s, cfg)?);
            }
        }
        Suite::RbLaws => jobs.extend(per_model(cfg, &ALL_MODELS, opts, Laws { cfg })),
        Suite::Shuffle => {
            let opts = ModelOptions { word_weight: int(0) };
            jobs.extend(per_model(cfg, &[Integration, Words], opts, Shuffles { cfg }));
            jobs.push(job(shuffle_combinatorics));
        }
        Suite::QuasiShuffle => {
            jobs.extend(per_model(cfg, &[Words, StandardComm, Summation], opts, QuasiShuffles { cfg }));
            jobs.push(job(quasi_shuffle_combinatorics));
        }
        Suite::Dendriform => {
            let opts = ModelOptions { word_weight: int(0) };
            jobs.extend(per_model(cfg, &[Integration, Words], opts, Dendriform { cfg }));
            if free {
                jobs.push(job(move || tensor_dendriform(cfg)));
            }
        }
        Suite::Prelie => {
            jobs.extend(per_model(cfg, &ALL_MODELS, opts, PreLieSuite { cfg }));
            jobs.push(job(|| Ok(vec![check_cayley_prelie(4)])));
        }
        Suite::Spitzer => jobs.extend(per_model(
            cfg,
            &[StandardComm, Integration, Laurent, Summation, Words],
            opts,
            Spitzer { cfg },
        )),
        Suite::NcSpitzer => jobs.extend(per_model(cfg, &[Matrix, StandardNc], opts, NcSpitzer { cfg })),
        Suite::Magnus => {
            jobs.extend(per_model(cfg, &[StandardNc, Matrix], opts, Magnus { cfg }));
            jobs.push(job(move || magnus_free(cfg)));
        }
        Suite::BohnenblustSpitzer => jobs.extend(per_model(
            cfg,
            &[StandardComm, Matrix, StandardNc, Integration],
            opts,
            Bohnenblust { cfg },
        )),
        Suite::Atkinson => jobs.extend(per_model(
            cfg,
            &[Matrix, StandardNc, Laurent, Integration, Summation],
            opts,
            Atkinson { cfg },
        )),
        Suite::Bogoliubov => {
            only_models(cfg, suite, &[Laurent])?;
            if cfg.weight.is_some() {
                return Err(CliError::Config("bogoliubov runs on the Laurent model at its own weight".into()));
            }
            jobs.push(job(move || bogoliubov(cfg)));
        }
        Suite::FlowsBch => jobs.extend(per_model(cfg, &[Matrix], opts, Flows { cfg })),
        Suite::YangBaxter => {
            jobs.extend(per_model(cfg, &ALL_MODELS, opts.clone(), Modified { cfg }));
            jobs.extend(per_model(cfg, &[Integration], opts, OperatorYbe { cfg }));
            if free {
                jobs.push(job(move || associative_yang_baxter(cfg)));
            }
        }
        Suite::StandardSymmetric => {
            only_models(cfg, suite, &[StandardComm, StandardNc])?;
            if cfg.weight.is_some() {
                return Err(CliError::Config("standard-symmetric runs at the model's own weight".into()));
            }
            jobs.push(job(move || standard_symmetric(cfg)));
        }
    }
    Ok(jobs)
}

/// Runs the configured suite. Jobs run in parallel; results are merged in
/// job order, so the report does not depend on scheduling.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report, CliError> {
    let start = Instant::now();
    let jobs = suite_jobs(cfg.suite, cfg)?;
    let results: Vec<Vec<CheckResult>> = jobs.par_iter().map(|j| j()).collect::<Result<_, _>>()?;
    let checks: Vec<CheckResult> = results.into_iter().flatten().collect();
    Ok(Report::new(cfg, checks, start.elapsed().as_millis() as u64))
}

