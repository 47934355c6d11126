use itertools::Itertools;
use rand::{Rng, SeedableRng};

use super::Sampled;
use crate::arith::{rat, Rational};

pub type SampleRng = rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleMode {
    /// Every tuple drawn from the model's declared basis.
    Exhaustive,
    /// `trials` tuples of seeded random elements.
    Random,
}

/// How a universally quantified law is instantiated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplePlan {
    pub mode: SampleMode,
    pub trials: usize,
    pub seed: u64,
}

impl SamplePlan {
    pub fn exhaustive() -> Self {
        SamplePlan { mode: SampleMode::Exhaustive, trials: 0, seed: 0 }
    }

    pub fn random(trials: usize, seed: u64) -> Self {
        SamplePlan { mode: SampleMode::Random, trials, seed }
    }

    pub fn rng(&self) -> SampleRng {
        SampleRng::seed_from_u64(self.seed)
    }

    pub fn describe(&self) -> String {
        match self.mode {
            SampleMode::Exhaustive => "exhaustive".into(),
            SampleMode::Random => format!("random({}, seed {})", self.trials, self.seed),
        }
    }

    pub fn singles<A: Sampled>(&self, alg: &A) -> Vec<A::Elem> {
        self.tuples(alg, 1).into_iter().map(|mut t| t.remove(0)).collect()
    }

    pub fn pairs<A: Sampled>(&self, alg: &A) -> Vec<(A::Elem, A::Elem)> {
        self.tuples(alg, 2)
            .into_iter()
            .map(|t| (t[0].clone(), t[1].clone()))
            .collect()
    }

    pub fn triples<A: Sampled>(&self, alg: &A) -> Vec<(A::Elem, A::Elem, A::Elem)> {
        self.tuples(alg, 3)
            .into_iter()
            .map(|t| (t[0].clone(), t[1].clone(), t[2].clone()))
            .collect()
    }

    /// All `arity`-tuples over the basis, or `trials` random tuples.
    pub fn tuples<A: Sampled>(&self, alg: &A, arity: usize) -> Vec<Vec<A::Elem>> {
        match self.mode {
            SampleMode::Exhaustive => {
                let basis = alg.basis();
                (0..arity)
                    .map(|_| basis.iter().cloned())
                    .multi_cartesian_product()
                    .collect()
            }
            SampleMode::Random => {
                let mut rng = self.rng();
                (0..self.trials)
                    .map(|_| (0..arity).map(|_| alg.random_element(&mut rng)).collect())
                    .collect()
            }
        }
    }
}

/// Small random rational: numerator in [-3, 3], denominator in [1, 3].
pub fn sample_rational(rng: &mut SampleRng) -> Rational {
    rat(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

/// Small random rational that is nonzero with probability about `density`.
pub fn sparse_rational(rng: &mut SampleRng, density: f64) -> Rational {
    if rng.gen_bool(density) {
        rat(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(1..=2))
    } else {
        rat(0, 1)
    }
}
