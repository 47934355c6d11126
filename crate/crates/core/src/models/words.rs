use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;

use super::render_terms;
use crate::algebra::{sample_rational, Algebra, RotaBaxter, SampleRng, Sampled, UnitalAlgebra};
use crate::arith::Rational;
use crate::combinatorics::Word;
use crate::combinatorics::words::weighted_quasi_shuffle_capped;

/// Element of `k[x] ⊗ T(k[x])`: a sum of terms `x^h ⊗ x^{a_1} ⊗ ... ⊗ x^{a_m}`
/// keyed by `(h, [a_1, ..., a_m])`. Exponent 0 is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WordTensor {
    terms: BTreeMap<(u32, Vec<u32>), Rational>,
}

impl WordTensor {
    pub fn zero() -> Self {
        WordTensor::default()
    }

    pub fn term(head: u32, tail: &[u32], c: Rational) -> Self {
        let mut t = WordTensor::zero();
        t.add_term(head, tail.to_vec(), c);
        t
    }

    pub fn add_term(&mut self, head: u32, tail: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (head, tail);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coefficient(&self, head: u32, tail: &[u32]) -> Rational {
        self.terms.get(&(head, tail.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, Vec<u32>), &Rational)> {
        self.terms.iter()
    }
}

/// The mixable-shuffle algebra on `k[x]`: the free commutative Rota–Baxter
/// algebra of weight `θ` on one generator. The product multiplies heads and
/// quasi-shuffles tails (letters merge by adding exponents, weighted by
/// `θ`); `R(a ⊗ u) = 1 ⊗ a ⊗ u`.
///
/// Tails longer than `length_cap` span an ideal stable under `R`, so they
/// are dropped exactly.
#[derive(Debug, Clone)]
pub struct WordAlgebra {
    weight: Rational,
    length_cap: usize,
    alphabet: u32,
}

impl WordAlgebra {
    /// `alphabet` bounds the exponents used by the sampler.
    pub fn new(weight: Rational, length_cap: usize, alphabet: u32) -> Self {
        WordAlgebra { weight, length_cap, alphabet: alphabet.max(1) }
    }

    pub fn length_cap(&self) -> usize {
        self.length_cap
    }

    /// The generator `x ⊗ ()`.
    pub fn generator(&self) -> WordTensor {
        self.power(1)
    }

    /// `x^h ⊗ ()`.
    pub fn power(&self, h: u32) -> WordTensor {
        WordTensor::term(h, &[], Rational::one())
    }

    /// Quasi-shuffle of tails with this algebra's weight, as word sums.
    pub fn tail_product(&self, u: &Word, v: &Word) -> crate::combinatorics::WordSum {
        weighted_quasi_shuffle_capped(u, v, &self.weight, &|a, b| a + b, self.length_cap)
    }

    fn monomial_text(head: u32, tail: &[u32]) -> String {
        let letter = |a: u32| match a {
            0 => "1".to_string(),
            1 => "x".to_string(),
            a => format!("x^{a}"),
        };
        let mut s = letter(head);
        for &a in tail {
            s.push('|');
            s.push_str(&letter(a));
        }
        if head == 0 && tail.is_empty() {
            String::new()
        } else {
            s
        }
    }
}

impl Algebra for WordAlgebra {
    type Elem = WordTensor;

    fn name(&self) -> String {
        format!("words(weight {}, len<={})", self.weight, self.length_cap)
    }
    fn zero(&self) -> WordTensor {
        WordTensor::zero()
    }
    fn add(&self, a: &WordTensor, b: &WordTensor) -> WordTensor {
        let mut out = a.clone();
        for ((h, t), c) in b.terms() {
            out.add_term(*h, t.clone(), c.clone());
        }
        out
    }
    fn neg(&self, a: &WordTensor) -> WordTensor {
        WordTensor { terms: a.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }
    fn scale(&self, c: &Rational, a: &WordTensor) -> WordTensor {
        if c.is_zero() {
            return WordTensor::zero();
        }
        WordTensor { terms: a.terms.iter().map(|(k, v)| (k.clone(), c * v)).collect() }
    }
    fn mul(&self, a: &WordTensor, b: &WordTensor) -> WordTensor {
        let mut out = WordTensor::zero();
        for ((ha, ta), ca) in a.terms() {
            for ((hb, tb), cb) in b.terms() {
                let c = ca * cb;
                let tails = self.tail_product(&Word(ta.clone()), &Word(tb.clone()));
                for (w, k) in tails.terms() {
                    out.add_term(ha + hb, w.0.clone(), &c * k);
                }
            }
        }
        out
    }
    fn render(&self, a: &WordTensor) -> String {
        render_terms(a.terms().map(|((h, t), c)| (Self::monomial_text(*h, t), c)))
    }
    fn is_commutative(&self) -> bool {
        true
    }
    fn contains(&self, a: &WordTensor) -> bool {
        a.terms().all(|((_, t), _)| t.len() <= self.length_cap)
    }
}

impl UnitalAlgebra for WordAlgebra {
    fn one(&self) -> WordTensor {
        self.power(0)
    }
}

impl RotaBaxter for WordAlgebra {
    fn weight(&self) -> Rational {
        self.weight.clone()
    }
    fn operator(&self, x: &WordTensor) -> WordTensor {
        let mut out = WordTensor::zero();
        for ((h, t), c) in x.terms() {
            if t.len() < self.length_cap {
                let mut tail = vec![*h];
                tail.extend_from_slice(t);
                out.add_term(0, tail, c.clone());
            }
        }
        out
    }
}

impl Sampled for WordAlgebra {
    /// `x^h ⊗ ()`, `x^h ⊗ x^a` for `h` in `0..=alphabet`, `a` in `1..=alphabet`.
    fn basis(&self) -> Vec<WordTensor> {
        let mut out = Vec::new();
        for h in 0..=self.alphabet {
            out.push(self.power(h));
            if self.length_cap >= 1 {
                for a in 1..=self.alphabet {
                    out.push(WordTensor::term(h, &[a], Rational::one()));
                }
            }
        }
        out
    }

    fn random_element(&self, rng: &mut SampleRng) -> WordTensor {
        let mut x = WordTensor::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let len = rng.gen_range(0..=2.min(self.length_cap));
            let tail: Vec<u32> = (0..len).map(|_| rng.gen_range(0..=self.alphabet)).collect();
            x.add_term(rng.gen_range(0..=self.alphabet), tail, sample_rational(rng));
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laws::check_rb_law;
    use crate::algebra::SamplePlan;
    use crate::arith::int;

    #[test]
    fn operator_prefixes_head() {
        let alg = WordAlgebra::new(int(1), 4, 2);
        let x = alg.generator();
        assert_eq!(alg.operator(&x), WordTensor::term(0, &[1], int(1)));
        assert_eq!(alg.render(&alg.operator(&alg.one())), "1|1");
        let rx = alg.operator(&x);
        // R(x)R(x) = 2 R(x R(x)) + R(x^2)
        let expected = alg.add(
            &WordTensor::term(0, &[1, 1], int(2)),
            &WordTensor::term(0, &[2], int(1)),
        );
        assert_eq!(alg.mul(&rx, &rx), expected);
    }

    #[test]
    fn rb_law_in_free_models() {
        for weight in [int(0), int(1), int(-2)] {
            let alg = WordAlgebra::new(weight, 4, 2);
            assert!(check_rb_law(&alg, &SamplePlan::exhaustive()).passed());
            assert!(check_rb_law(&alg, &SamplePlan::random(60, 11)).passed());
        }
    }

    #[test]
    fn length_cap_is_exact_below_cap() {
        let small = WordAlgebra::new(int(1), 3, 2);
        let large = WordAlgebra::new(int(1), 6, 2);
        let x = small.add(&small.generator(), &small.operator(&small.power(2)));
        let p_small = small.mul(&small.operator(&x), &small.operator(&x));
        let p_large = large.mul(&large.operator(&x), &large.operator(&x));
        for ((h, t), c) in p_large.terms() {
            if t.len() <= 3 {
                assert_eq!(p_small.coefficient(*h, t), *c);
            }
        }
    }
}
