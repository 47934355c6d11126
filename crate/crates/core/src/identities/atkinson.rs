use crate::algebra::laws::{first_failure, mismatch};
use crate::algebra::{tilde_operator, Model, RotaBaxter, SamplePlan};
use crate::arith::{series_inverse, series_mismatch, series_mul, series_sub, LambdaSeries};
use crate::check::CheckResult;
use crate::error::Result;

use super::fixed_point::{solve_fixed_point, Side};

pub const ATKINSON_ANCHOR: &str = "atkinson-factorization";

/// `fh = 1 - λθ fxh` and `1 + λθx = f^{-1} h^{-1}` to order `N`, with
/// `f = 1 + λR(fx)` and `h = 1 + λR̃(xh)`.
pub fn check_atkinson<A: RotaBaxter>(alg: &A, x: &A::Elem, order: usize) -> Result<CheckResult> {
    let theta = alg.weight();
    let f = solve_fixed_point(alg, x, Side::LeftR, order);
    let h = solve_fixed_point(alg, x, Side::RightTilde, order);
    let lambda_theta_x = LambdaSeries::monomial(alg, alg.scale(&theta, x), 1, order);
    let one = LambdaSeries::one(alg, order);

    let fh = series_mul(alg, &f, &h)?;
    let fxh = series_mul(alg, &series_mul(alg, &f, &lambda_theta_x)?, &h)?;
    let rhs = series_sub(alg, &one, &fxh)?;
    let product = series_mismatch(alg, "fh = 1 - λθ fxh", &fh, &rhs);

    let inverses = series_mul(alg, &series_inverse(alg, &f)?, &series_inverse(alg, &h)?)?;
    let lhs = crate::arith::series_add(alg, &one, &lambda_theta_x)?;
    let factorised = series_mismatch(alg, "1 + λθx = f^-1 h^-1", &lhs, &inverses);

    let failure = product
        .or(factorised)
        .map(|m| format!("x = {}; {m}", alg.render(x)));
    Ok(CheckResult::from_outcome(
        format!("atkinson[{}](N={order})", alg.name()),
        ATKINSON_ANCHOR,
        order,
        failure,
    ))
}

/// `R(a)R̃(b) = R(aR̃(b)) + R̃(R(a)b)` on sampled pairs.
pub fn check_atkinson_lemma<A: Model>(alg: &A, plan: &SamplePlan) -> CheckResult {
    let (cases, failure) = first_failure(plan.pairs(alg), |(a, b)| {
        let ra = alg.operator(a);
        let tb = tilde_operator(alg, b);
        let lhs = alg.mul(&ra, &tb);
        let rhs = alg.add(
            &alg.operator(&alg.mul(a, &tb)),
            &tilde_operator(alg, &alg.mul(&ra, b)),
        );
        mismatch(alg, "R(a)R~(b)", &lhs, &rhs)
            .map(|m| format!("a = {}, b = {}; {m}", alg.render(a), alg.render(b)))
    });
    CheckResult::from_outcome(
        format!("atkinson-lemma[{}]", alg.name()),
        ATKINSON_ANCHOR,
        cases,
        failure,
    )
}
