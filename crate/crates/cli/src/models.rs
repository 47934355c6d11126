use rbx_core::algebra::{Algebra, Model, Rescaled, RotaBaxter, SampleRng, Sampled, UnitalAlgebra};
use rbx_core::arith::{int, Rational};
use rbx_core::models::{
    IntegrationAlgebra, Laurent, LaurentAlgebra, MatrixAlgebra, RatMatrix, SequenceAlgebra, WordAlgebra,
};
use rbx_core::CheckResult;

use crate::config::{ModelKind, SuiteConfig};
use crate::error::CliError;

/// Degree cap of the standard algebras; raised to the order when needed.
pub const STANDARD_DEGREE_CAP: usize = 8;
/// Truncation `t^{cap+1}` of the integration model.
pub const INTEGRATION_CAP: usize = 16;
/// Exponents sampled by the Laurent model: poles up to `ε^-2`, regular part up to `ε^3`.
pub const LAURENT_BOUNDS: (u32, u32) = (2, 3);

/// A generic check body run against whichever model the configuration
/// selects. `x` is the model's distinguished element.
pub trait Visitor: Sync {
    fn visit<A: Model>(&self, alg: &A, x: &A::Elem) -> Result<Vec<CheckResult>, CliError>;
}

/// Knobs that differ between suites for the same model name.
#[derive(Debug, Clone)]
pub struct ModelOptions {
    /// Weight of the word model: 1 gives quasi-shuffles, 0 plain shuffles.
    pub word_weight: Rational,
}

impl Default for ModelOptions {
    fn default() -> Self {
        ModelOptions { word_weight: int(1) }
    }
}

pub fn standard_degree_cap(cfg: &SuiteConfig) -> usize {
    STANDARD_DEGREE_CAP.max(cfg.order)
}

pub fn laurent_model() -> LaurentAlgebra {
    LaurentAlgebra::new(LAURENT_BOUNDS.0, LAURENT_BOUNDS.1)
}

pub fn laurent_element() -> Laurent {
    Laurent::from_terms([(-1, int(1)), (0, int(1)), (1, int(1))])
}

pub fn integration_model() -> IntegrationAlgebra<rbx_core::algebra::Scalars> {
    IntegrationAlgebra::with_coefficients(rbx_core::algebra::Scalars, INTEGRATION_CAP, 6)
}

fn matrix_element(n: usize) -> RatMatrix {
    RatMatrix::unit(n, 1, 2).add(&RatMatrix::unit(n, 2, 1))
}

/// Builds the model, applies a weight override by rescaling and hands both
/// to the visitor.
pub fn with_model<V: Visitor>(
    kind: ModelKind,
    cfg: &SuiteConfig,
    opts: &ModelOptions,
    v: &V,
) -> Result<Vec<CheckResult>, CliError> {
    match kind {
        ModelKind::StandardComm => {
            let a = SequenceAlgebra::standard_commutative(cfg.window, standard_degree_cap(cfg), cfg.alphabet);
            let x = a.generator();
            weighted(a, x, cfg, v)
        }
        ModelKind::StandardNc => {
            let a = SequenceAlgebra::standard_noncommutative(cfg.window, standard_degree_cap(cfg), cfg.alphabet);
            let x = a.generator();
            weighted(a, x, cfg, v)
        }
        ModelKind::Laurent => weighted(laurent_model(), laurent_element(), cfg, v),
        ModelKind::Matrix => weighted(MatrixAlgebra::new(cfg.dim), matrix_element(cfg.dim), cfg, v),
        ModelKind::Integration => {
            let a = integration_model();
            let x = a.power(1);
            weighted(a, x, cfg, v)
        }
        ModelKind::Summation => {
            let a = SequenceAlgebra::summation(cfg.window);
            let x = a.from_fn(|k| int(k as i64 + 1));
            weighted(a, x, cfg, v)
        }
        ModelKind::Words => {
            let a = WordAlgebra::new(opts.word_weight.clone(), cfg.order, cfg.alphabet);
            let x = a.generator();
            weighted(a, x, cfg, v)
        }
        ModelKind::MatrixCorrupted => {
            let a = CorruptedTriangular::new(cfg.dim.max(3));
            let x = matrix_element(a.dim());
            weighted(a, x, cfg, v)
        }
    }
}

fn weighted<A: Model, V: Visitor>(
    alg: A,
    x: A::Elem,
    cfg: &SuiteConfig,
    v: &V,
) -> Result<Vec<CheckResult>, CliError> {
    let Some(target) = &cfg.weight else {
        return v.visit(&alg, &x);
    };
    let theta = alg.weight();
    if theta == int(0) {
        if *target == int(0) {
            return v.visit(&alg, &x);
        }
        return Err(CliError::Config(format!(
            "{} has weight 0 and cannot be rescaled to weight {target}",
            alg.name()
        )));
    }
    v.visit(&Rescaled::new(&alg, target / &theta), &x)
}

/// Upper-triangular projection that also keeps the bottom-left entry.
/// Its kernel is no longer closed under multiplication, so the
/// Rota–Baxter relation breaks; used as a negative control.
#[derive(Debug, Clone)]
pub struct CorruptedTriangular {
    inner: MatrixAlgebra,
}

impl CorruptedTriangular {
    pub fn new(n: usize) -> Self {
        assert!(n >= 3, "the corrupted projector needs dimension at least 3");
        CorruptedTriangular { inner: MatrixAlgebra::new(n) }
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }
}

impl Algebra for CorruptedTriangular {
    type Elem = RatMatrix;

    fn name(&self) -> String {
        format!("matrix-corrupted({})", self.dim())
    }
    fn zero(&self) -> RatMatrix {
        self.inner.zero()
    }
    fn add(&self, a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
        self.inner.add(a, b)
    }
    fn neg(&self, a: &RatMatrix) -> RatMatrix {
        self.inner.neg(a)
    }
    fn scale(&self, c: &Rational, a: &RatMatrix) -> RatMatrix {
        self.inner.scale(c, a)
    }
    fn mul(&self, a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
        self.inner.mul(a, b)
    }
    fn render(&self, a: &RatMatrix) -> String {
        self.inner.render(a)
    }
    fn contains(&self, a: &RatMatrix) -> bool {
        self.inner.contains(a)
    }
}

impl UnitalAlgebra for CorruptedTriangular {
    fn one(&self) -> RatMatrix {
        self.inner.one()
    }
}

impl RotaBaxter for CorruptedTriangular {
    fn weight(&self) -> Rational {
        int(-1)
    }
    fn operator(&self, x: &RatMatrix) -> RatMatrix {
        let last = self.dim() - 1;
        x.map(|i, j, v| {
            if i <= j || (i == last && j == 0) {
                v.clone()
            } else {
                Rational::from_integer(0.into())
            }
        })
    }
}

impl Sampled for CorruptedTriangular {
    fn basis(&self) -> Vec<RatMatrix> {
        self.inner.basis()
    }
    fn random_element(&self, rng: &mut SampleRng) -> RatMatrix {
        self.inner.random_element(rng)
    }
}
