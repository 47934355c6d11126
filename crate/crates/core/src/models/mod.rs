//! Concrete Rota–Baxter algebras.
//!
//! | model | carrier | operator | weight |
//! |---|---|---|---|
//! | [`SequenceAlgebra`] over [`PolyAlgebra`] | windows of (non)commutative polynomials | shifted partial sums | 1 |
//! | [`SequenceAlgebra`] over [`Scalars`](crate::algebra::Scalars) | windows of rationals | summation | 1 |
//! | [`LaurentAlgebra`] | Laurent polynomials in ε | pole part | −1 |
//! | [`MatrixAlgebra`] | n×n rational matrices | upper-triangular part | −1 |
//! | [`IntegrationAlgebra`] | polynomials in t modulo t^{cap+1} | `∫_0^t` | 0 |
//! | [`WordAlgebra`] | `A ⊗ words` with the mixable shuffle | prefixing | θ |

mod integration;
mod laurent;
mod matrix;
mod poly;
mod sequence;
mod symmetric;
mod words;

pub use integration::{riemann_integral, IntegrationAlgebra, PolyFunction, TimePoly};
pub use laurent::{laurent_pole_projection, Laurent, LaurentAlgebra};
pub use matrix::{triangular_projection, MatrixAlgebra, RatMatrix};
pub use poly::{Poly, PolyAlgebra, PolyKind};
pub use sequence::{
    finite_difference, standard_sum_operator, summation_operator, SequenceAlgebra, Window,
};
pub use symmetric::{
    elementary_symmetric_check, ordered_subsequence_sum, power_sum, symmetric_sweep, SYMMETRIC_ANCHOR,
};
pub use words::{WordAlgebra, WordTensor};

use num_traits::{One, Signed, Zero};

use crate::arith::Rational;

/// Renders `Σ c·m` as `c*m + c*m - ...` with unit coefficients elided;
/// an empty monomial string denotes the unit.
pub(crate) fn render_terms<'a>(terms: impl IntoIterator<Item = (String, &'a Rational)>) -> String {
    let mut out = String::new();
    for (monomial, c) in terms {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let abs = c.abs();
        let body = match (monomial.is_empty(), abs.is_one()) {
            (true, _) => abs.to_string(),
            (false, true) => monomial,
            (false, false) => format!("{abs}*{monomial}"),
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
