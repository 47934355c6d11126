use std::sync::OnceLock;

use num_traits::{One, Zero};

use super::{binomial, Rational};
use crate::error::{Error, Result};

/// Largest index served by [`bernoulli`].
pub const BERNOULLI_MAX: usize = 40;

/// Bernoulli numbers under the `x/(e^x - 1)` convention, so `B_1 = -1/2`.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    /// Solves `sum_{k=0}^{n} C(n+1, k) B_k = 0` for `B_n`, `n = 1..=max`.
    pub fn new(max: usize) -> Self {
        let mut values = vec![Rational::one()];
        for n in 1..=max {
            let partial = (0..n).fold(Rational::zero(), |acc, k| {
                acc + binomial(n + 1, k) * &values[k]
            });
            values.push(-partial / binomial(n + 1, n));
        }
        BernoulliTable { values }
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Result<&Rational> {
        self.values.get(n).ok_or(Error::BernoulliBounds {
            index: n,
            max: self.max_index(),
        })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

pub fn bernoulli(n: usize) -> Result<Rational> {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE
        .get_or_init(|| BernoulliTable::new(BERNOULLI_MAX))
        .get(n)
        .cloned()
}
