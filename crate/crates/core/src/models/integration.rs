use num_traits::Zero;

use crate::algebra::{Algebra, RotaBaxter, SampleRng, Sampled, Scalars, UnitalAlgebra};
use crate::arith::{int, rat, Rational};
use crate::error::{Error, Result};

/// Polynomial `Σ c_n t^n` with coefficients in some algebra, trailing zero
/// coefficients trimmed.
#[derive(Debug, Clone, PartialEq)]
pub struct TimePoly<E> {
    pub coeffs: Vec<E>,
}

/// Polynomial functions of `t` with rational coefficients.
pub type PolyFunction = TimePoly<Rational>;

impl PolyFunction {
    /// Rational polynomial from its coefficient list, lowest degree first.
    pub fn from_rationals(coeffs: Vec<Rational>) -> Self {
        let mut p = TimePoly { coeffs };
        while p.coeffs.last().is_some_and(Zero::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    /// `Some(d)` for a nonzero polynomial of degree `d`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

/// `t^n ↦ t^{n+1}/(n+1)`, so `R(p)(t) = ∫_0^t p`. Fails when the result
/// would exceed degree `cap`.
pub fn riemann_integral(p: &PolyFunction, cap: usize) -> Result<PolyFunction> {
    if p.degree().is_some_and(|d| d >= cap) {
        return Err(Error::Config(format!(
            "integrating degree {} exceeds the degree cap {cap}",
            p.degree().unwrap_or(0)
        )));
    }
    Ok(integrate(&Scalars, &p.coeffs, cap))
}

fn integrate<C: Algebra>(coeff: &C, p: &[C::Elem], cap: usize) -> TimePoly<C::Elem> {
    let mut out = vec![coeff.zero()];
    for (n, c) in p.iter().enumerate().take(cap) {
        out.push(coeff.scale(&rat(1, n as i64 + 1), c));
    }
    trimmed(coeff, out)
}

fn trimmed<C: Algebra>(coeff: &C, mut coeffs: Vec<C::Elem>) -> TimePoly<C::Elem> {
    while coeffs.last().is_some_and(|c| coeff.is_zero(c)) {
        coeffs.pop();
    }
    TimePoly { coeffs }
}

/// Polynomials in `t` over a coefficient algebra, modulo `t^{cap+1}`, with
/// the weight-zero integration operator. Powers above the cap form an ideal
/// mapped into itself by integration, so the quotient is exact.
#[derive(Debug, Clone)]
pub struct IntegrationAlgebra<C> {
    coeff: C,
    cap: usize,
    basis_degree: usize,
}

impl<C: Algebra> IntegrationAlgebra<C> {
    /// `basis_degree` bounds the powers of `t` in the sampling basis.
    pub fn with_coefficients(coeff: C, cap: usize, basis_degree: usize) -> Self {
        IntegrationAlgebra { coeff, cap, basis_degree: basis_degree.min(cap) }
    }

    pub fn coefficients(&self) -> &C {
        &self.coeff
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `c t^n`, zero when `n > cap`.
    pub fn monomial(&self, c: C::Elem, n: usize) -> TimePoly<C::Elem> {
        if n > self.cap {
            return TimePoly { coeffs: vec![] };
        }
        let mut coeffs = vec![self.coeff.zero(); n];
        coeffs.push(c);
        trimmed(&self.coeff, coeffs)
    }
}

impl IntegrationAlgebra<Scalars> {
    pub fn new(cap: usize) -> Self {
        IntegrationAlgebra::with_coefficients(Scalars, cap, 2)
    }

    /// `t^n`.
    pub fn power(&self, n: usize) -> PolyFunction {
        self.monomial(int(1), n)
    }
}

impl Default for IntegrationAlgebra<Scalars> {
    fn default() -> Self {
        IntegrationAlgebra::new(16)
    }
}

impl<C: Algebra> Algebra for IntegrationAlgebra<C> {
    type Elem = TimePoly<C::Elem>;

    fn name(&self) -> String {
        if self.coeff.name() == "Q" {
            format!("integration(t^{})", self.cap)
        } else {
            format!("integration({}, t^{})", self.coeff.name(), self.cap)
        }
    }
    fn zero(&self) -> Self::Elem {
        TimePoly { coeffs: vec![] }
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let zero = self.coeff.zero();
        let coeffs = (0..n)
            .map(|i| {
                self.coeff.add(a.coeffs.get(i).unwrap_or(&zero), b.coeffs.get(i).unwrap_or(&zero))
            })
            .collect();
        trimmed(&self.coeff, coeffs)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        TimePoly { coeffs: a.coeffs.iter().map(|c| self.coeff.neg(c)).collect() }
    }
    fn scale(&self, c: &Rational, a: &Self::Elem) -> Self::Elem {
        trimmed(&self.coeff, a.coeffs.iter().map(|x| self.coeff.scale(c, x)).collect())
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return self.zero();
        }
        let n = (a.coeffs.len() + b.coeffs.len() - 1).min(self.cap + 1);
        let mut coeffs = vec![self.coeff.zero(); n];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                if i + j < n {
                    coeffs[i + j] = self.coeff.add(&coeffs[i + j], &self.coeff.mul(x, y));
                }
            }
        }
        trimmed(&self.coeff, coeffs)
    }
    fn render(&self, a: &Self::Elem) -> String {
        let parts: Vec<String> = a
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.coeff.is_zero(c))
            .map(|(n, c)| {
                let c = self.coeff.render(c);
                match n {
                    0 => c,
                    1 => format!("({c})*t"),
                    n => format!("({c})*t^{n}"),
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
    fn is_commutative(&self) -> bool {
        self.coeff.is_commutative()
    }
    fn contains(&self, a: &Self::Elem) -> bool {
        a.coeffs.len() <= self.cap + 1 && a.coeffs.iter().all(|c| self.coeff.contains(c))
    }
}

impl<C: UnitalAlgebra> UnitalAlgebra for IntegrationAlgebra<C> {
    fn one(&self) -> Self::Elem {
        self.monomial(self.coeff.one(), 0)
    }
}

impl<C: UnitalAlgebra> RotaBaxter for IntegrationAlgebra<C> {
    fn weight(&self) -> Rational {
        Rational::zero()
    }
    fn operator(&self, x: &Self::Elem) -> Self::Elem {
        integrate(&self.coeff, &x.coeffs, self.cap)
    }
}

impl<C: Sampled> Sampled for IntegrationAlgebra<C> {
    /// `b t^n` for base generators `b` and `n <= basis_degree`.
    fn basis(&self) -> Vec<Self::Elem> {
        let base = self.coeff.basis();
        (0..=self.basis_degree)
            .flat_map(|n| base.iter().map(move |b| (n, b.clone())))
            .map(|(n, b)| self.monomial(b, n))
            .collect()
    }

    fn random_element(&self, rng: &mut SampleRng) -> Self::Elem {
        let coeffs = (0..=self.basis_degree.min(3)).map(|_| self.coeff.random_element(rng)).collect();
        trimmed(&self.coeff, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laws::check_rb_law;
    use crate::algebra::SamplePlan;
    use crate::models::MatrixAlgebra;

    #[test]
    fn integral_examples() {
        let alg = IntegrationAlgebra::default();
        let one = alg.one();
        let t = alg.operator(&one);
        assert_eq!(t, alg.power(1));
        let lhs = alg.mul(&t, &t);
        assert_eq!(lhs, alg.power(2));
        assert_eq!(lhs, alg.operator(&alg.add(&t, &t)));
        assert_eq!(lhs, alg.scale(&int(2), &alg.operator(&alg.mul(&one, &t))));
        assert_eq!(alg.operator(&alg.power(3)), alg.scale(&rat(1, 4), &alg.power(4)));
    }

    #[test]
    fn standalone_integral_respects_cap() {
        let p = PolyFunction::from_rationals(vec![int(1), int(2)]);
        let r = riemann_integral(&p, 4).unwrap();
        assert_eq!(r.coeffs, vec![int(0), int(1), int(1)]);
        let high = PolyFunction::from_rationals(vec![int(0), int(0), int(0), int(0), int(1)]);
        assert!(matches!(riemann_integral(&high, 4), Err(Error::Config(_))));
        assert_eq!(PolyFunction::from_rationals(vec![int(0)]).degree(), None);
    }

    #[test]
    fn rb_law_scalar_and_matrix_coefficients() {
        let alg = IntegrationAlgebra::new(6);
        assert!(check_rb_law(&alg, &SamplePlan::exhaustive()).passed());
        assert!(check_rb_law(&alg, &SamplePlan::random(50, 1)).passed());
        let mat = IntegrationAlgebra::with_coefficients(MatrixAlgebra::new(2), 5, 1);
        assert!(!mat.is_commutative());
        assert!(check_rb_law(&mat, &SamplePlan::exhaustive()).passed());
    }
}
