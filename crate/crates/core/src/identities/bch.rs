use num_traits::Zero;

use crate::algebra::{DoubleProduct, RotaBaxter, UnitalAlgebra, Unitization};
use crate::arith::{series_exp, series_log, series_mul, LambdaSeries};
use crate::error::{Error, Result};

pub const BCH_ANCHOR: &str = "baker-campbell-hausdorff";

/// Which associative product the exponentials are taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BchProduct {
    /// The algebra's own product.
    Carrier,
    /// The double product `∗θ`, with a unit adjoined.
    Double,
}

/// `log(exp(a) exp(b))` for series with zero constant term.
pub fn bch_of_series<U: UnitalAlgebra>(
    alg: &U,
    a: &LambdaSeries<U::Elem>,
    b: &LambdaSeries<U::Elem>,
) -> Result<LambdaSeries<U::Elem>> {
    let product = series_mul(alg, &series_exp(alg, a)?, &series_exp(alg, b)?)?;
    series_log(alg, &product)
}

/// BCH of two graded series in the chosen product.
pub fn bch_series_of<A: RotaBaxter>(
    alg: &A,
    a: &LambdaSeries<A::Elem>,
    b: &LambdaSeries<A::Elem>,
    product: BchProduct,
) -> Result<LambdaSeries<A::Elem>> {
    match product {
        BchProduct::Carrier => bch_of_series(alg, a, b),
        BchProduct::Double => {
            let u = Unitization::new(DoubleProduct::new(alg));
            let out = bch_of_series(&u, &a.map(|c| u.embed(c)), &b.map(|c| u.embed(c)))?;
            if let Some(k) = out.coeffs().iter().position(|c| !c.scalar.is_zero()) {
                return Err(Error::Domain(format!("BCH left a scalar part at λ^{k}")));
            }
            Ok(out.map(|c| c.elem.clone()))
        }
    }
}

/// `log(exp(λa) exp(λb))` to order `N`.
pub fn bch_series<A: RotaBaxter>(
    alg: &A,
    a: &A::Elem,
    b: &A::Elem,
    order: usize,
    product: BchProduct,
) -> Result<LambdaSeries<A::Elem>> {
    let la = LambdaSeries::monomial(alg, a.clone(), 1, order);
    let lb = LambdaSeries::monomial(alg, b.clone(), 1, order);
    bch_series_of(alg, &la, &lb, product)
}
