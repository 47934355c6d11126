use num_traits::Zero;

use crate::algebra::{sparse_rational, Algebra, RotaBaxter, SampleRng, Sampled, UnitalAlgebra};
use crate::arith::Rational;
use crate::check::CheckResult;
use crate::error::{Error, Result};
use crate::models::RatMatrix;

pub const AYBE_ANCHOR: &str = "associative-yang-baxter";

/// `r = Σ u_i ⊗ v_i` in `M_n ⊗ M_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorR {
    pairs: Vec<(RatMatrix, RatMatrix)>,
    dim: usize,
}

impl TensorR {
    pub fn new(dim: usize, pairs: Vec<(RatMatrix, RatMatrix)>) -> Result<Self> {
        if let Some((u, v)) = pairs.iter().find(|(u, v)| u.dim() != dim || v.dim() != dim) {
            return Err(Error::Config(format!(
                "tensor factors of sizes {} and {} in a tensor of dimension {dim}",
                u.dim(),
                v.dim()
            )));
        }
        Ok(TensorR { pairs, dim })
    }

    pub fn zero(dim: usize) -> Self {
        TensorR { pairs: Vec::new(), dim }
    }

    pub fn pairs(&self) -> &[(RatMatrix, RatMatrix)] {
        &self.pairs
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `Σ u_i ⊗ v_i ⊗ 1`, `Σ u_i ⊗ 1 ⊗ v_i` and `Σ 1 ⊗ u_i ⊗ v_i` as
    /// `n³ × n³` matrices.
    fn legs(&self) -> [RatMatrix; 3] {
        let n = self.dim;
        let id = RatMatrix::identity(n);
        let mut legs = [0, 1, 2].map(|_| RatMatrix::zero(n * n * n));
        for (u, v) in &self.pairs {
            legs[0] = legs[0].add(&u.kron(v).kron(&id));
            legs[1] = legs[1].add(&u.kron(&id).kron(v));
            legs[2] = legs[2].add(&id.kron(u).kron(v));
        }
        legs
    }

    pub fn render(&self) -> String {
        if self.pairs.is_empty() {
            return "0".into();
        }
        let alg = crate::models::MatrixAlgebra::new(self.dim);
        self.pairs
            .iter()
            .map(|(u, v)| format!("{} (x) {}", alg.render(u), alg.render(v)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Which third term the associative Yang–Baxter expression uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AybeMode {
    /// `r13 r12 - r12 r23 + r23 r12`.
    Printed,
    /// `r13 r12 - r12 r23 + r23 r13`.
    Standard,
}

impl AybeMode {
    pub fn label(self) -> &'static str {
        match self {
            AybeMode::Printed => "r13r12 - r12r23 + r23r12",
            AybeMode::Standard => "r13r12 - r12r23 + r23r13",
        }
    }
}

/// The associative Yang–Baxter expression of `r` in `M_n^{⊗3}`.
pub fn aybe_residual(r: &TensorR, mode: AybeMode) -> RatMatrix {
    let [r12, r13, r23] = r.legs();
    let last = match mode {
        AybeMode::Printed => r23.mul(&r12),
        AybeMode::Standard => r23.mul(&r13),
    };
    r13.mul(&r12).add(&r12.mul(&r23).scale(&Rational::from_integer((-1).into()))).add(&last)
}

pub fn aybe_check(r: &TensorR, mode: AybeMode) -> CheckResult {
    let residual = aybe_residual(r, mode);
    let name = format!("aybe[{}]", mode.label());
    if residual.is_zero() {
        CheckResult::pass(name, AYBE_ANCHOR, 1)
    } else {
        let n = residual.dim();
        let nonzero = (0..n * n).filter(|k| !residual.get(k / n, k % n).is_zero()).count();
        CheckResult::fail(
            name,
            AYBE_ANCHOR,
            1,
            format!("r = {}; {} = nonzero ({nonzero} entries)", r.render(), mode.label()),
        )
    }
}

/// `n × n` matrices with `R_r(x) = Σ u_i x v_i`, weight 0.
#[derive(Debug, Clone)]
pub struct TensorRbAlgebra {
    r: TensorR,
}

/// Builds `R_r` after checking the associative Yang–Baxter equation in the
/// given mode.
pub fn rb_from_tensor(r: TensorR, mode: AybeMode) -> Result<TensorRbAlgebra> {
    let check = aybe_check(&r, mode);
    match check.counterexample {
        None => Ok(TensorRbAlgebra { r }),
        Some(c) => Err(Error::Precondition(format!("associative Yang–Baxter equation fails: {c}"))),
    }
}

impl TensorRbAlgebra {
    pub fn tensor(&self) -> &TensorR {
        &self.r
    }
}

impl Algebra for TensorRbAlgebra {
    type Elem = RatMatrix;

    fn name(&self) -> String {
        format!("tensor-rb({})", self.r.dim)
    }
    fn zero(&self) -> RatMatrix {
        RatMatrix::zero(self.r.dim)
    }
    fn add(&self, a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
        a.add(b)
    }
    fn neg(&self, a: &RatMatrix) -> RatMatrix {
        a.map(|_, _, v| -v)
    }
    fn scale(&self, c: &Rational, a: &RatMatrix) -> RatMatrix {
        a.scale(c)
    }
    fn mul(&self, a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
        a.mul(b)
    }
    fn render(&self, a: &RatMatrix) -> String {
        crate::models::MatrixAlgebra::new(self.r.dim).render(a)
    }
    fn contains(&self, a: &RatMatrix) -> bool {
        a.dim() == self.r.dim
    }
    fn is_zero(&self, a: &RatMatrix) -> bool {
        a.is_zero()
    }
}

impl UnitalAlgebra for TensorRbAlgebra {
    fn one(&self) -> RatMatrix {
        RatMatrix::identity(self.r.dim)
    }
}

impl RotaBaxter for TensorRbAlgebra {
    fn weight(&self) -> Rational {
        Rational::zero()
    }
    fn operator(&self, x: &RatMatrix) -> RatMatrix {
        self.r
            .pairs
            .iter()
            .fold(self.zero(), |acc, (u, v)| acc.add(&u.mul(x).mul(v)))
    }
}

impl Sampled for TensorRbAlgebra {
    fn basis(&self) -> Vec<RatMatrix> {
        let n = self.r.dim;
        (1..=n)
            .flat_map(|i| (1..=n).map(move |j| RatMatrix::unit(n, i, j)))
            .collect()
    }

    fn random_element(&self, rng: &mut SampleRng) -> RatMatrix {
        RatMatrix::from_fn(self.r.dim, |_, _| sparse_rational(rng, 0.6))
    }
}
