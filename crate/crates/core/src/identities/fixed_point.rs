use crate::algebra::{tilde_operator, RotaBaxter};
use crate::arith::LambdaSeries;

/// Which fixed-point equation to solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `f = 1 + λR(fx)`.
    LeftR,
    /// `h = 1 + λR̃(xh)`.
    RightTilde,
}

/// Solves the chosen equation by the grade recursion `f_{n+1} = R(f_n x)`
/// or `h_{n+1} = R̃(x h_n)`.
pub fn solve_fixed_point<A: RotaBaxter>(
    alg: &A,
    x: &A::Elem,
    side: Side,
    order: usize,
) -> LambdaSeries<A::Elem> {
    let mut coeffs = vec![alg.one()];
    for n in 0..order {
        let prev = &coeffs[n];
        let next = match side {
            Side::LeftR => alg.operator(&alg.mul(prev, x)),
            Side::RightTilde => tilde_operator(alg, &alg.mul(x, prev)),
        };
        coeffs.push(next);
    }
    LambdaSeries::from_coeffs(coeffs)
}

/// Solves `l = 1 + R(l z)` for a series `z` with zero constant term:
/// `l_n = R(Σ_{j=1..n} l_{n-j} z_j)`.
pub fn solve_fixed_point_series<A: RotaBaxter>(
    alg: &A,
    z: &LambdaSeries<A::Elem>,
) -> LambdaSeries<A::Elem> {
    let mut coeffs = vec![alg.one()];
    for n in 1..=z.order() {
        let mut acc = alg.zero();
        for j in 1..=n {
            acc = alg.add(&acc, &alg.mul(&coeffs[n - j], z.coeff(j)));
        }
        coeffs.push(alg.operator(&acc));
    }
    LambdaSeries::from_coeffs(coeffs)
}
