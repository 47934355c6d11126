use num_traits::{One, Zero};

use super::magnus::{bernoulli_recursion, prelie_magnus, PreLie};
use crate::algebra::RotaBaxter;
use crate::arith::{
    bernoulli, factorial, int, pow, series_log, series_mismatch, series_scale, LambdaSeries,
    Rational,
};
use crate::check::CheckResult;
use crate::error::{Error, Result};

pub const SPITZER_ANCHOR: &str = "spitzer-identity";

/// `Ω'_θ(λx) = Σ_{n>0} (-1)^{n+1} θ^{n-1} λ^n x^n / n`, which is
/// `θ^{-1} log(1 + θλx)` and reduces to `λx` at `θ = 0`.
pub fn spitzer_closed_form<A: RotaBaxter>(alg: &A, x: &A::Elem, order: usize) -> LambdaSeries<A::Elem> {
    let theta = alg.weight();
    let mut coeffs = vec![alg.zero()];
    for n in 1..=order {
        let sign = if n % 2 == 1 { int(1) } else { int(-1) };
        let c = sign * pow(&theta, n - 1) / int(n as i64);
        coeffs.push(alg.scale(&c, &alg.pow(x, n)));
    }
    LambdaSeries::from_coeffs(coeffs)
}

/// `a ∘ b = θab`: left multiplication by `θa`.
struct ScaledLeftMul<'a, A>(&'a A);

impl<A: RotaBaxter> PreLie for ScaledLeftMul<'_, A> {
    type Elem = A::Elem;

    fn zero(&self) -> A::Elem {
        self.0.zero()
    }
    fn add(&self, a: &A::Elem, b: &A::Elem) -> A::Elem {
        self.0.add(a, b)
    }
    fn scale(&self, c: &Rational, a: &A::Elem) -> A::Elem {
        self.0.scale(c, a)
    }
    fn prelie(&self, a: &A::Elem, b: &A::Elem) -> A::Elem {
        self.0.scale(&self.0.weight(), &self.0.mul(a, b))
    }
    fn render(&self, a: &A::Elem) -> String {
        self.0.render(a)
    }
}

/// Spitzer's identity in a commutative Rota–Baxter algebra, together with
/// the closed form of its right-hand argument and its two Bernoulli
/// rewritings.
pub fn check_spitzer_commutative<A: RotaBaxter>(
    alg: &A,
    x: &A::Elem,
    order: usize,
) -> Result<CheckResult> {
    if !alg.is_commutative() {
        return Err(Error::Precondition(format!(
            "Spitzer's identity needs a commutative algebra, {} is not",
            alg.name()
        )));
    }
    let name = |part: &str| format!("{part}[{}](N={order})", alg.name());
    let theta = alg.weight();
    let closed = spitzer_closed_form(alg, x, order);

    let mut iterated = vec![alg.one()];
    iterated.extend((1..=order).map(|n| alg.iterated(x, n)));
    let lhs = series_log(alg, &LambdaSeries::from_coeffs(iterated))?;
    let rhs = closed.map(|c| alg.operator(c));
    let identity = CheckResult::from_outcome(
        name("spitzer"),
        SPITZER_ANCHOR,
        order,
        series_mismatch(alg, "log(1 + Σ R^(n)(x)) = R(Omega'_θ)", &lhs, &rhs),
    );

    let log_form = if theta.is_zero() {
        LambdaSeries::monomial(alg, x.clone(), 1, order)
    } else {
        let mut one_plus = LambdaSeries::one(alg, order);
        if order >= 1 {
            one_plus.set_coeff(1, alg.scale(&theta, x));
        }
        series_scale(alg, &(Rational::one() / &theta), &series_log(alg, &one_plus)?)
    };
    let closed_form = CheckResult::from_outcome(
        name("spitzer-log-form"),
        SPITZER_ANCHOR,
        order,
        series_mismatch(alg, "Omega'_θ = θ^-1 log(1 + θλx)", &closed, &log_form),
    );

    let mut z = vec![alg.zero(); order + 1];
    if order >= 1 {
        z[1] = x.clone();
    }
    let bernoulli_form = LambdaSeries::from_coeffs(bernoulli_recursion(&ScaledLeftMul(alg), &z, |n| {
        bernoulli(n).expect("order within the Bernoulli table") / factorial(n)
    }));
    let bernoulli_check = CheckResult::from_outcome(
        name("spitzer-bernoulli-form"),
        SPITZER_ANCHOR,
        order,
        series_mismatch(alg, "Omega'_θ = Σ B_n/n! l^n_θOmega (x)", &closed, &bernoulli_form),
    );

    let magnus = prelie_magnus(alg, x, order);
    let reduction = CheckResult::from_outcome(
        name("spitzer-prelie-reduction"),
        SPITZER_ANCHOR,
        order,
        series_mismatch(alg, "Omega'(λx) = Omega'_θ", &magnus, &closed),
    );

    Ok(CheckResult::all(
        name("spitzer-commutative"),
        SPITZER_ANCHOR,
        [identity, closed_form, bernoulli_check, reduction],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, UnitalAlgebra};
    use crate::algebra::double_product;
    use crate::models::{IntegrationAlgebra, LaurentAlgebra, MatrixAlgebra, SequenceAlgebra};

    #[test]
    fn standard_and_integration_models() {
        let std = SequenceAlgebra::standard_commutative(8, 6, 3);
        let r = check_spitzer_commutative(&std, &std.generator(), 5).unwrap();
        assert!(r.passed(), "{r}");
        let int_alg = IntegrationAlgebra::default();
        let x = int_alg.add(&int_alg.one(), &int_alg.power(1));
        assert!(check_spitzer_commutative(&int_alg, &x, 5).unwrap().passed());
        let laurent = LaurentAlgebra::default();
        let y = crate::models::Laurent::from_terms([(-1, int(1)), (0, int(2))]);
        assert!(check_spitzer_commutative(&laurent, &y, 4).unwrap().passed());
    }

    #[test]
    fn order_two_is_the_rb_relation() {
        let std = SequenceAlgebra::standard_commutative(6, 4, 2);
        let x = std.generator();
        let rx = std.operator(&x);
        let lhs = std.mul(&rx, &rx);
        let rhs = std.operator(&double_product(&std, &x, &x));
        assert_eq!(lhs, rhs);
        assert!(check_spitzer_commutative(&std, &x, 2).unwrap().passed());
    }

    #[test]
    fn noncommutative_is_rejected() {
        let m = MatrixAlgebra::new(2);
        assert!(matches!(
            check_spitzer_commutative(&m, &m.one(), 3),
            Err(Error::Precondition(_))
        ));
    }
}
