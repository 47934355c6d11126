use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;

use super::render_terms;
use crate::algebra::{sparse_rational, Algebra, RotaBaxter, SampleRng, Sampled, UnitalAlgebra};
use crate::arith::{int, Rational};

/// Finite Laurent polynomial `Σ c_k ε^k`, zero coefficients not stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<i32, Rational>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn monomial(exponent: i32, c: Rational) -> Self {
        let mut l = Laurent::zero();
        l.add_term(exponent, c);
        l
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, Rational)>) -> Self {
        let mut l = Laurent::zero();
        for (k, c) in terms {
            l.add_term(k, c);
        }
        l
    }

    pub fn add_term(&mut self, exponent: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: i32) -> Rational {
        self.terms.get(&exponent).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i32, &Rational)> {
        self.terms.iter()
    }

    /// Order of the pole, `0` when there is none.
    pub fn pole_order(&self) -> u32 {
        self.terms.keys().next().map_or(0, |&k| (-k).max(0) as u32)
    }

    pub fn is_pole_free(&self) -> bool {
        self.terms.keys().all(|&k| k >= 0)
    }

    pub fn is_purely_polar(&self) -> bool {
        self.terms.keys().all(|&k| k < 0)
    }
}

/// Keeps exponents `< 0` (the divergent part).
pub fn laurent_pole_projection(x: &Laurent) -> Laurent {
    Laurent { terms: x.terms.iter().filter(|(k, _)| **k < 0).map(|(k, c)| (*k, c.clone())).collect() }
}

/// Laurent polynomials `Q[ε^{-1}, ε]` with the pole projection, a weight
/// −1 Rota–Baxter operator (`ε^{-1}Q[ε^{-1}]` and `Q[ε]` are subalgebras).
///
/// Arithmetic is exact; `pole_bound` and `regular_bound` bound the exponents
/// of sampled elements and of accepted Bogoliubov inputs.
#[derive(Debug, Clone)]
pub struct LaurentAlgebra {
    pole_bound: u32,
    regular_bound: u32,
}

impl LaurentAlgebra {
    pub fn new(pole_bound: u32, regular_bound: u32) -> Self {
        LaurentAlgebra { pole_bound, regular_bound }
    }

    pub fn pole_bound(&self) -> u32 {
        self.pole_bound
    }

    pub fn regular_bound(&self) -> u32 {
        self.regular_bound
    }

    pub fn random_bounded(&self, rng: &mut SampleRng, pole: u32, top: u32) -> Laurent {
        let mut l = Laurent::zero();
        for k in -(pole as i32)..=(top as i32) {
            l.add_term(k, sparse_rational(rng, 0.5));
        }
        if l.terms.is_empty() {
            l.add_term(rng.gen_range(-(pole as i32)..=top as i32), int(1));
        }
        l
    }
}

impl Default for LaurentAlgebra {
    fn default() -> Self {
        LaurentAlgebra::new(4, 6)
    }
}

impl Algebra for LaurentAlgebra {
    type Elem = Laurent;

    fn name(&self) -> String {
        "laurent".into()
    }
    fn zero(&self) -> Laurent {
        Laurent::zero()
    }
    fn add(&self, a: &Laurent, b: &Laurent) -> Laurent {
        let mut out = a.clone();
        for (k, c) in b.terms() {
            out.add_term(*k, c.clone());
        }
        out
    }
    fn neg(&self, a: &Laurent) -> Laurent {
        Laurent { terms: a.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
    fn scale(&self, c: &Rational, a: &Laurent) -> Laurent {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent { terms: a.terms.iter().map(|(k, v)| (*k, c * v)).collect() }
    }
    fn mul(&self, a: &Laurent, b: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (i, x) in a.terms() {
            for (j, y) in b.terms() {
                out.add_term(i + j, x * y);
            }
        }
        out
    }
    fn render(&self, a: &Laurent) -> String {
        render_terms(a.terms().map(|(k, c)| {
            let m = match k {
                0 => String::new(),
                1 => "e".to_string(),
                k => format!("e^{k}"),
            };
            (m, c)
        }))
    }
    fn is_commutative(&self) -> bool {
        true
    }
}

impl UnitalAlgebra for LaurentAlgebra {
    fn one(&self) -> Laurent {
        Laurent::monomial(0, Rational::one())
    }
}

impl RotaBaxter for LaurentAlgebra {
    fn weight(&self) -> Rational {
        int(-1)
    }
    fn operator(&self, x: &Laurent) -> Laurent {
        laurent_pole_projection(x)
    }
}

impl Sampled for LaurentAlgebra {
    /// Monomials `ε^k` for `k` in `[-pole_bound, regular_bound]`.
    fn basis(&self) -> Vec<Laurent> {
        (-(self.pole_bound as i32)..=self.regular_bound as i32)
            .map(|k| Laurent::monomial(k, int(1)))
            .collect()
    }

    fn random_element(&self, rng: &mut SampleRng) -> Laurent {
        self.random_bounded(rng, self.pole_bound.min(2), self.regular_bound.min(3))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laws::{check_projector, check_rb_law};
    use crate::algebra::{tilde_operator, SamplePlan};

    fn eps(k: i32) -> Laurent {
        Laurent::monomial(k, int(1))
    }

    #[test]
    fn projection_examples() {
        let alg = LaurentAlgebra::default();
        let x = alg.add(&alg.add(&eps(-1), &eps(0)), &eps(1));
        assert_eq!(laurent_pole_projection(&x), eps(-1));
        assert_eq!(laurent_pole_projection(&alg.add(&eps(0), &eps(2))), Laurent::zero());
        assert_eq!(alg.operator(&alg.one()), Laurent::zero());
        assert_eq!(alg.render(&x), "e^-1 + 1 + e");
    }

    #[test]
    fn tilde_is_regular_part() {
        let alg = LaurentAlgebra::default();
        let x = alg.add(&eps(-1), &eps(0));
        assert_eq!(tilde_operator(&alg, &x), eps(0));
    }

    #[test]
    fn rb_law_by_hand_pair() {
        let alg = LaurentAlgebra::default();
        let x = eps(-1);
        let y = alg.add(&eps(-1), &eps(0));
        let lhs = alg.mul(&alg.operator(&x), &alg.operator(&y));
        let rhs = alg.operator(&crate::algebra::double_product(&alg, &x, &y));
        assert_eq!(lhs, eps(-2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn laws_on_monomials() {
        let alg = LaurentAlgebra::new(2, 3);
        assert!(check_rb_law(&alg, &SamplePlan::exhaustive()).passed());
        assert!(check_projector(&alg, &SamplePlan::exhaustive()).passed());
        assert!(check_rb_law(&alg, &SamplePlan::random(100, 3)).passed());
    }
}
