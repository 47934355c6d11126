//! Cayley's pre-Lie algebra of polynomial vector fields `x^n ∂_x` with
//! `(x^n ∂) ▷ (x^m ∂) = m x^{n+m-1} ∂`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::iproduct;
use num_traits::Zero;

use crate::arith::{int, Rational};
use crate::check::CheckResult;

/// Finite sum `Σ c_n x^n ∂_x`, keyed by the exponent `n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VectorField {
    terms: BTreeMap<u32, Rational>,
}

impl VectorField {
    pub fn monomial(n: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(n, int(1));
        VectorField { terms }
    }

    pub fn coefficient(&self, n: u32) -> Rational {
        self.terms.get(&n).cloned().unwrap_or_else(Rational::zero)
    }

    fn insert(&mut self, n: u32, c: Rational) {
        let entry = self.terms.entry(n).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&n);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (n, c) in &other.terms {
            out.insert(*n, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (n, c) in &other.terms {
            out.insert(*n, -c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn prelie(&self, other: &Self) -> Self {
        let mut out = VectorField::default();
        for ((n, a), (m, b)) in iproduct!(&self.terms, &other.terms) {
            if *m == 0 {
                continue;
            }
            out.insert(n + m - 1, a * b * int(*m as i64));
        }
        out
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(n, c)| format!("{c}*x^{n}d"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Pre-Lie relation on all monomial triples with exponents `<= max_degree`.
pub fn check_cayley_prelie(max_degree: u32) -> CheckResult {
    let monomials: Vec<VectorField> = (0..=max_degree).map(VectorField::monomial).collect();
    let mut cases = 0;
    for (x, y, z) in iproduct!(&monomials, &monomials, &monomials) {
        cases += 1;
        let lhs = x.prelie(y).prelie(z).sub(&x.prelie(&y.prelie(z)));
        let rhs = y.prelie(x).prelie(z).sub(&y.prelie(&x.prelie(z)));
        if lhs != rhs {
            return CheckResult::fail(
                "cayley-vector-fields",
                super::laws::PRELIE_ANCHOR,
                cases,
                format!("x = {x}, y = {y}, z = {z}: {lhs} vs {rhs}"),
            );
        }
    }
    CheckResult::pass("cayley-vector-fields", super::laws::PRELIE_ANCHOR, cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_rule() {
        let p = VectorField::monomial(2).prelie(&VectorField::monomial(3));
        assert_eq!(p, {
            let mut v = VectorField::default();
            v.insert(4, int(3));
            v
        });
        assert!(VectorField::monomial(5).prelie(&VectorField::monomial(0)).is_zero());
    }

    #[test]
    fn prelie_on_monomials() {
        assert!(check_cayley_prelie(5).passed());
    }

    #[test]
    fn not_associative() {
        let x = VectorField::monomial(1);
        let y = VectorField::monomial(0);
        let z = VectorField::monomial(2);
        assert_ne!(x.prelie(&y).prelie(&z), x.prelie(&y.prelie(&z)));
    }
}
