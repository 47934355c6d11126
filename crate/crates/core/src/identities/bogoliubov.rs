use crate::algebra::{tilde_operator, Algebra, RotaBaxter, UnitalAlgebra};
use crate::arith::{series_inverse, series_mismatch, series_mul, series_sub, LambdaSeries};
use crate::check::CheckResult;
use crate::error::{Error, Result};
use crate::models::{Laurent, LaurentAlgebra};

pub const BOGOLIUBOV_ANCHOR: &str = "bogoliubov-recursion";

/// Solves `f = 1 + R(fx)`, `h^{-1} = 1 - R̃(fx)` grade by grade for a
/// Laurent-valued series `x` with zero constant term. Returns `(f, h^{-1})`.
pub fn bogoliubov_decompose(
    alg: &LaurentAlgebra,
    x: &LambdaSeries<Laurent>,
) -> Result<(LambdaSeries<Laurent>, LambdaSeries<Laurent>)> {
    if !alg.is_zero(x.coeff(0)) {
        return Err(Error::Precondition("the input series must have zero constant term".into()));
    }
    if let Some((k, c)) = x.coeffs().iter().enumerate().find(|(_, c)| c.pole_order() > alg.pole_bound()) {
        return Err(Error::Config(format!(
            "grade {k} has a pole of order {} above the bound {}",
            c.pole_order(),
            alg.pole_bound()
        )));
    }
    let mut f = vec![alg.one()];
    let mut hinv = vec![alg.one()];
    for n in 1..=x.order() {
        let mut y = alg.zero();
        for j in 1..=n {
            y = alg.add(&y, &alg.mul(&f[n - j], x.coeff(j)));
        }
        f.push(alg.operator(&y));
        hinv.push(alg.neg(&tilde_operator(alg, &y)));
    }
    Ok((LambdaSeries::from_coeffs(f), LambdaSeries::from_coeffs(hinv)))
}

/// Counterterm purely polar, renormalized part pole free, `f(1 - x) = h^{-1}`
/// and `f(1 - x)h = 1`.
pub fn check_bogoliubov(alg: &LaurentAlgebra, x: &LambdaSeries<Laurent>) -> Result<CheckResult> {
    let (f, hinv) = bogoliubov_decompose(alg, x)?;
    let order = x.order();
    let polar = (1..=order)
        .find(|&n| !f.coeff(n).is_purely_polar())
        .map(|n| format!("f_{n} = {} has a regular part", alg.render(f.coeff(n))));
    let finite = (1..=order)
        .find(|&n| !hinv.coeff(n).is_pole_free())
        .map(|n| format!("h^-1_{n} = {} has a pole", alg.render(hinv.coeff(n))));
    let one = LambdaSeries::one(alg, order);
    let one_minus_x = series_sub(alg, &one, x)?;
    let f_one_minus_x = series_mul(alg, &f, &one_minus_x)?;
    let split = series_mismatch(alg, "f(1 - x) = h^-1", &f_one_minus_x, &hinv);
    let h = series_inverse(alg, &hinv)?;
    let product = series_mismatch(alg, "f(1 - x)h = 1", &series_mul(alg, &f_one_minus_x, &h)?, &one);
    let failure = polar
        .or(finite)
        .or(split)
        .or(product)
        .map(|m| format!("x = {}; {m}", x.render(alg)));
    Ok(CheckResult::from_outcome(
        format!("bogoliubov[{}](N={order})", alg.name()),
        BOGOLIUBOV_ANCHOR,
        order,
        failure,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::arith::int;

    fn series(alg: &LaurentAlgebra, grades: Vec<Laurent>) -> LambdaSeries<Laurent> {
        let mut coeffs = vec![alg.zero()];
        coeffs.extend(grades);
        LambdaSeries::from_coeffs(coeffs)
    }

    #[test]
    fn zero_input() {
        let alg = LaurentAlgebra::default();
        let x = LambdaSeries::zero(&alg, 3);
        let (f, hinv) = bogoliubov_decompose(&alg, &x).unwrap();
        assert_eq!(f, LambdaSeries::one(&alg, 3));
        assert_eq!(hinv, LambdaSeries::one(&alg, 3));
    }

    #[test]
    fn first_two_grades() {
        let alg = LaurentAlgebra::default();
        let x1 = Laurent::from_terms([(-1, int(1)), (0, int(1))]);
        let x2 = Laurent::from_terms([(-2, int(1)), (1, int(2))]);
        let x = series(&alg, vec![x1.clone(), x2.clone()]);
        let (f, hinv) = bogoliubov_decompose(&alg, &x).unwrap();
        assert_eq!(*f.coeff(1), Laurent::monomial(-1, int(1)));
        assert_eq!(*hinv.coeff(1), Laurent::monomial(0, int(-1)));
        let y2 = alg.add(&alg.mul(f.coeff(1), &x1), &x2);
        assert_eq!(*f.coeff(2), alg.operator(&y2));
        assert_eq!(*hinv.coeff(2), alg.neg(&tilde_operator(&alg, &y2)));
        assert!(check_bogoliubov(&alg, &x).unwrap().passed());
    }

    #[test]
    fn pole_bound_and_constant_term() {
        let alg = LaurentAlgebra::new(1, 3);
        let x = series(&alg, vec![Laurent::monomial(-2, int(1))]);
        assert!(matches!(bogoliubov_decompose(&alg, &x), Err(Error::Config(_))));
        let bad = LambdaSeries::one(&alg, 2);
        assert!(matches!(bogoliubov_decompose(&alg, &bad), Err(Error::Precondition(_))));
    }
}
