use crate::algebra::{prelie_left, Algebra, RotaBaxter};
use crate::arith::{factorial, rat, series_mismatch, series_mul, LambdaSeries};
use crate::check::CheckResult;
use crate::error::Result;

use super::bch::{bch_series_of, BchProduct};
use super::fixed_point::{solve_fixed_point_series, solve_fixed_point, Side};
use super::magnus::{prelie_magnus, prelie_magnus_series};

pub const FLOWS_ANCHOR: &str = "flows-product";

/// `(Ω ▷ S)_n = Σ_{i+j=n} Ω_i ▷θ S_j`.
fn left_prelie_series<A: RotaBaxter>(
    alg: &A,
    omega: &LambdaSeries<A::Elem>,
    s: &LambdaSeries<A::Elem>,
) -> LambdaSeries<A::Elem> {
    let coeffs = (0..=s.order())
        .map(|n| {
            (0..=n).fold(alg.zero(), |acc, i| {
                let (a, b) = (omega.coeff(i), s.coeff(n - i));
                if alg.is_zero(a) || alg.is_zero(b) {
                    acc
                } else {
                    alg.add(&acc, &prelie_left(alg, a, b))
                }
            })
        })
        .collect();
    LambdaSeries::from_coeffs(coeffs)
}

/// `e^{-ℓ_{Ω▷}}(s) = Σ_k (-1)^k ℓ^k_{Ω▷}(s) / k!`, truncated by grade.
fn exp_minus_left<A: RotaBaxter>(
    alg: &A,
    omega: &LambdaSeries<A::Elem>,
    s: &LambdaSeries<A::Elem>,
) -> LambdaSeries<A::Elem> {
    let mut out = s.clone();
    let mut term = s.clone();
    for k in 1..=s.order() {
        term = left_prelie_series(alg, omega, &term);
        let c = rat(if k % 2 == 0 { 1 } else { -1 }, 1) / factorial(k);
        out = LambdaSeries::from_coeffs(
            out.coeffs()
                .iter()
                .zip(term.coeffs())
                .map(|(a, b)| alg.add(a, &alg.scale(&c, b)))
                .collect(),
        );
    }
    out
}

/// The flows product `x • y = y + e^{-ℓ_{Ω'(λy)▷θ}}(λx)` as a graded
/// series. Its fixed point is the product of the fixed points of `x` and `y`
/// (in that order).
pub fn flows_product<A: RotaBaxter>(
    alg: &A,
    x: &A::Elem,
    y: &A::Elem,
    order: usize,
) -> LambdaSeries<A::Elem> {
    let lx = LambdaSeries::monomial(alg, x.clone(), 1, order);
    let omega_y = prelie_magnus(alg, y, order);
    let moved = exp_minus_left(alg, &omega_y, &lx);
    let mut coeffs = moved.coeffs().to_vec();
    if order >= 1 {
        coeffs[1] = alg.add(&coeffs[1], y);
    }
    LambdaSeries::from_coeffs(coeffs)
}

fn render_pair<A: Algebra>(alg: &A, x: &A::Elem, y: &A::Elem) -> String {
    format!("x = {}, y = {}", alg.render(x), alg.render(y))
}

/// `l = 1 + R(l (x • y))` equals `f h` with `f = 1 + λR(fx)`, `h = 1 + λR(hy)`.
pub fn check_flows_product_law<A: RotaBaxter>(
    alg: &A,
    x: &A::Elem,
    y: &A::Elem,
    order: usize,
) -> Result<CheckResult> {
    let z = flows_product(alg, x, y, order);
    let l = solve_fixed_point_series(alg, &z);
    let f = solve_fixed_point(alg, x, Side::LeftR, order);
    let h = solve_fixed_point(alg, y, Side::LeftR, order);
    let fh = series_mul(alg, &f, &h)?;
    let failure = series_mismatch(alg, "l = fh", &l, &fh)
        .map(|m| format!("{}; {m}", render_pair(alg, x, y)));
    Ok(CheckResult::from_outcome(
        format!("flows-fixed-point[{}](N={order})", alg.name()),
        FLOWS_ANCHOR,
        order,
        failure,
    ))
}

/// `Ω'(x • y) = BCH_{∗θ}(Ω'(λx), Ω'(λy))` to order `N`.
pub fn check_flows_bch<A: RotaBaxter>(
    alg: &A,
    x: &A::Elem,
    y: &A::Elem,
    order: usize,
) -> Result<CheckResult> {
    let z = flows_product(alg, x, y, order);
    let lhs = prelie_magnus_series(alg, &z);
    let rhs = bch_series_of(
        alg,
        &prelie_magnus(alg, x, order),
        &prelie_magnus(alg, y, order),
        BchProduct::Double,
    )?;
    let failure = series_mismatch(alg, "Omega'(x.y) = BCH*(Omega'(x), Omega'(y))", &lhs, &rhs)
        .map(|m| format!("{}; {m}", render_pair(alg, x, y)));
    Ok(CheckResult::from_outcome(
        format!("flows-bch[{}](N={order})", alg.name()),
        FLOWS_ANCHOR,
        order,
        failure,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::models::MatrixAlgebra;

    #[test]
    fn degenerate_products() {
        let m = MatrixAlgebra::new(2);
        let x = m.add(&m.unit(1, 2), &m.unit(2, 2));
        assert_eq!(flows_product(&m, &m.zero(), &x, 4), LambdaSeries::monomial(&m, x.clone(), 1, 4));
        assert_eq!(flows_product(&m, &x, &m.zero(), 4), LambdaSeries::monomial(&m, x.clone(), 1, 4));
    }

    #[test]
    fn matrix_unit_pairs() {
        let m = MatrixAlgebra::new(2);
        let basis = crate::algebra::Sampled::basis(&m);
        for x in &basis {
            for y in &basis {
                let law = check_flows_product_law(&m, x, y, 4).unwrap();
                assert!(law.passed(), "{law}");
                let bch = check_flows_bch(&m, x, y, 3).unwrap();
                assert!(bch.passed(), "{bch}");
            }
        }
    }
}
