use std::fmt;

use crate::algebra::{prelie_left, RotaBaxter};
use crate::arith::{bernoulli, factorial, rat, series_log, series_mismatch, LambdaSeries, Rational};
use crate::check::CheckResult;
use crate::error::Result;

use super::fixed_point::{solve_fixed_point, Side};

pub const MAGNUS_ANCHOR: &str = "pre-lie-magnus-expansion";
pub const NC_SPITZER_ANCHOR: &str = "noncommutative-spitzer";

/// A vector space with a bilinear product, used as the target of pre-Lie
/// expansions. The product need not satisfy any law.
pub trait PreLie {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: &Rational, a: &Self::Elem) -> Self::Elem;
    fn prelie(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn render(&self, a: &Self::Elem) -> String;
}

/// The pre-Lie product `a ▷θ b` of a Rota–Baxter algebra.
#[derive(Debug, Clone, Copy)]
pub struct RbPreLie<'a, A>(pub &'a A);

impl<A: RotaBaxter> PreLie for RbPreLie<'_, A> {
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
        prelie_left(self.0, a, b)
    }
    fn render(&self, a: &A::Elem) -> String {
        self.0.render(a)
    }
}

/// Grade recursion for `Ω = Z + Σ_{n>0} c_n ℓ^n_{Ω▷}(Z)`, where `Z` is a
/// series with zero constant term given as `z[0..=N]`.
///
/// With `T_0(m) = Z_m` and `T_n(m) = Σ_{i>=1} Ω_i ▷ T_{n-1}(m-i)`, grade `k`
/// is `Ω_k = Z_k + Σ_{n>=1} c_n T_n(k)`, which only reads `Ω_i` for `i < k`.
pub fn bernoulli_recursion<P: PreLie>(
    p: &P,
    z: &[P::Elem],
    coeff: impl Fn(usize) -> Rational,
) -> Vec<P::Elem> {
    let order = z.len().saturating_sub(1);
    let mut omega = vec![p.zero(); order + 1];
    // t[n][m] = T_n(m)
    let mut t: Vec<Vec<P::Elem>> = vec![vec![p.zero(); order + 1]; order + 1];
    for k in 1..=order {
        t[0][k] = z[k].clone();
        let mut value = z[k].clone();
        for n in 1..k {
            let mut acc = p.zero();
            for i in 1..=k - n {
                acc = p.add(&acc, &p.prelie(&omega[i], &t[n - 1][k - i]));
            }
            t[n][k] = acc;
            value = p.add(&value, &p.scale(&coeff(n), &t[n][k]));
        }
        omega[k] = value;
    }
    omega
}

/// `(-1)^n B_n / n!`.
fn magnus_coefficient(n: usize) -> Rational {
    let b = bernoulli(n).expect("expansion order within the Bernoulli table");
    let sign = if n % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
    sign * b / factorial(n)
}

/// `Ω'(Z)` for a series `Z` with zero constant term.
pub fn prelie_magnus_series<A: RotaBaxter>(
    alg: &A,
    z: &LambdaSeries<A::Elem>,
) -> LambdaSeries<A::Elem> {
    let mut coeffs = z.coeffs().to_vec();
    coeffs[0] = alg.zero();
    LambdaSeries::from_coeffs(bernoulli_recursion(&RbPreLie(alg), &coeffs, magnus_coefficient))
}

/// The pre-Lie Magnus expansion `Ω'(λx)` to order `N`.
pub fn prelie_magnus<A: RotaBaxter>(alg: &A, x: &A::Elem, order: usize) -> LambdaSeries<A::Elem> {
    prelie_magnus_series(alg, &LambdaSeries::monomial(alg, x.clone(), 1, order))
}

/// `R(Ω'(λx)) = log f` with `f = 1 + λR(fx)`, coefficientwise to order `N`.
pub fn check_nc_spitzer<A: RotaBaxter>(alg: &A, x: &A::Elem, order: usize) -> Result<CheckResult> {
    let omega = prelie_magnus(alg, x, order);
    let lhs = omega.map(|c| alg.operator(c));
    let f = solve_fixed_point(alg, x, Side::LeftR, order);
    let rhs = series_log(alg, &f)?;
    let failure = series_mismatch(alg, "R(Omega') = log f", &lhs, &rhs)
        .map(|m| format!("x = {}; {m}", alg.render(x)));
    Ok(CheckResult::from_outcome(
        format!("nc-spitzer[{}](N={order})", alg.name()),
        NC_SPITZER_ANCHOR,
        order,
        failure,
    ))
}

/// Nonassociative monomial in one generator, for writing expansions down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Magma {
    X,
    Pre(Box<Magma>, Box<Magma>),
}

impl Magma {
    pub fn pre(a: Magma, b: Magma) -> Magma {
        Magma::Pre(Box::new(a), Box::new(b))
    }

    pub fn degree(&self) -> usize {
        match self {
            Magma::X => 1,
            Magma::Pre(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn eval<P: PreLie>(&self, p: &P, x: &P::Elem) -> P::Elem {
        match self {
            Magma::X => x.clone(),
            Magma::Pre(a, b) => p.prelie(&a.eval(p, x), &b.eval(p, x)),
        }
    }
}

impl fmt::Display for Magma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Magma::X => f.write_str("x"),
            Magma::Pre(a, b) => {
                let wrap = |m: &Magma| match m {
                    Magma::X => m.to_string(),
                    _ => format!("({m})"),
                };
                write!(f, "{}>{}", wrap(a), wrap(b))
            }
        }
    }
}

/// Closed forms of the Magnus coefficients at grades 1 to 4, the grade 4
/// term already reduced with the pre-Lie law.
pub fn magnus_reference_terms(grade: usize) -> Vec<(Rational, Magma)> {
    use Magma::X;
    let xx = || Magma::pre(X, X);
    match grade {
        1 => vec![(rat(1, 1), X)],
        2 => vec![(rat(1, 2), xx())],
        3 => vec![(rat(1, 4), Magma::pre(xx(), X)), (rat(1, 12), Magma::pre(X, xx()))],
        4 => vec![
            (rat(1, 6), Magma::pre(Magma::pre(xx(), X), X)),
            (rat(1, 12), Magma::pre(X, Magma::pre(xx(), X))),
        ],
        _ => Vec::new(),
    }
}

/// Compares grade `grade` of `Ω'(λx)` in `p` against `Σ c·m(x)`.
pub fn check_magnus_terms<P: PreLie>(
    p: &P,
    model: &str,
    x: &P::Elem,
    grade: usize,
    terms: &[(Rational, Magma)],
) -> CheckResult {
    let mut z = vec![p.zero(); grade + 1];
    if grade >= 1 {
        z[1] = x.clone();
    }
    let omega = bernoulli_recursion(p, &z, magnus_coefficient);
    let expected = terms
        .iter()
        .fold(p.zero(), |acc, (c, m)| p.add(&acc, &p.scale(c, &m.eval(p, x))));
    let expression = terms
        .iter()
        .map(|(c, m)| format!("{c}*{m}"))
        .collect::<Vec<_>>()
        .join(" + ");
    let failure = (omega[grade] != expected).then(|| {
        format!(
            "λ^{grade}: expansion = {} but {expression} = {}",
            p.render(&omega[grade]),
            p.render(&expected)
        )
    });
    CheckResult::from_outcome(format!("magnus[{model}](λ^{grade})"), MAGNUS_ANCHOR, 1, failure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::identities::trees::FreePreLie;
    use crate::models::{MatrixAlgebra, SequenceAlgebra};

    #[test]
    fn coefficients() {
        assert_eq!(magnus_coefficient(1), rat(1, 2));
        assert_eq!(magnus_coefficient(2), rat(1, 12));
        assert_eq!(magnus_coefficient(3), rat(0, 1));
        assert_eq!(magnus_coefficient(4), rat(-1, 720));
    }

    #[test]
    fn free_expansion_matches_closed_forms() {
        let p = FreePreLie;
        let x = p.generator();
        for grade in 1..=4 {
            let r = check_magnus_terms(&p, "trees", &x, grade, &magnus_reference_terms(grade));
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn four_term_and_reduced_grade_four_agree() {
        use Magma::X;
        let p = FreePreLie;
        let x = p.generator();
        let xx = || Magma::pre(X, X);
        let four = [
            (rat(1, 8), Magma::pre(Magma::pre(xx(), X), X)),
            (rat(1, 24), Magma::pre(Magma::pre(X, xx()), X)),
            (rat(1, 24), Magma::pre(X, Magma::pre(xx(), X))),
            (rat(1, 24), Magma::pre(xx(), xx())),
        ];
        assert!(check_magnus_terms(&p, "trees", &x, 4, &four).passed());
    }

    #[test]
    fn nc_spitzer_in_matrices_and_sequences() {
        let m = MatrixAlgebra::new(2);
        let x = m.add(&m.unit(1, 2), &m.unit(2, 1));
        assert!(check_nc_spitzer(&m, &x, 4).unwrap().passed());
        let s = SequenceAlgebra::standard_noncommutative(5, 4, 2);
        assert!(check_nc_spitzer(&s, &s.generator(), 4).unwrap().passed());
    }

    #[test]
    fn magma_rendering() {
        let m = Magma::pre(Magma::X, Magma::pre(Magma::X, Magma::X));
        assert_eq!(m.to_string(), "x>(x>x)");
        assert_eq!(m.degree(), 3);
    }
}
