//! Truncated formal power series `Σ_{k<=N} a_k λ^k` with coefficients in an
//! arbitrary algebra. All arithmetic truncates at the common order `N`.

use num_traits::One;

use super::{factorial, int, Rational};
use crate::algebra::{Algebra, UnitalAlgebra};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct LambdaSeries<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> LambdaSeries<E> {
    /// Series with coefficients `coeffs[0..=N]`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<E>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant coefficient");
        LambdaSeries { coeffs }
    }

    pub fn zero<A: Algebra<Elem = E>>(alg: &A, order: usize) -> Self {
        LambdaSeries { coeffs: vec![alg.zero(); order + 1] }
    }

    pub fn one<A: UnitalAlgebra<Elem = E>>(alg: &A, order: usize) -> Self {
        Self::constant(alg, alg.one(), order)
    }

    pub fn constant<A: Algebra<Elem = E>>(alg: &A, c: E, order: usize) -> Self {
        let mut s = Self::zero(alg, order);
        s.coeffs[0] = c;
        s
    }

    /// `c λ^degree`, truncated to `order`.
    pub fn monomial<A: Algebra<Elem = E>>(alg: &A, c: E, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(alg, order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &E {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: E) {
        self.coeffs[k] = c;
    }

    /// Drops coefficients above `order`; `order` must not exceed the current one.
    pub fn truncate(&self, order: usize) -> Self {
        LambdaSeries { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    pub fn map<F: Clone>(&self, f: impl FnMut(&E) -> F) -> LambdaSeries<F> {
        LambdaSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn render<A: Algebra<Elem = E>>(&self, alg: &A) -> String {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| format!("λ^{k}: {}", alg.render(c)))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

fn same_order<E>(a: &LambdaSeries<E>, b: &LambdaSeries<E>) -> Result<()> {
    if a.coeffs.len() != b.coeffs.len() {
        return Err(Error::OrderMismatch { left: a.coeffs.len() - 1, right: b.coeffs.len() - 1 });
    }
    Ok(())
}

fn in_carrier<A: Algebra>(alg: &A, a: &LambdaSeries<A::Elem>) -> Result<()> {
    if a.coeffs.iter().all(|c| alg.contains(c)) {
        Ok(())
    } else {
        Err(Error::CarrierMismatch(alg.name()))
    }
}

pub fn series_add<A: Algebra>(
    alg: &A,
    a: &LambdaSeries<A::Elem>,
    b: &LambdaSeries<A::Elem>,
) -> Result<LambdaSeries<A::Elem>> {
    same_order(a, b)?;
    Ok(LambdaSeries {
        coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| alg.add(x, y)).collect(),
    })
}

pub fn series_sub<A: Algebra>(
    alg: &A,
    a: &LambdaSeries<A::Elem>,
    b: &LambdaSeries<A::Elem>,
) -> Result<LambdaSeries<A::Elem>> {
    same_order(a, b)?;
    Ok(LambdaSeries {
        coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| alg.sub(x, y)).collect(),
    })
}

pub fn series_neg<A: Algebra>(alg: &A, a: &LambdaSeries<A::Elem>) -> LambdaSeries<A::Elem> {
    a.map(|x| alg.neg(x))
}

pub fn series_scale<A: Algebra>(
    alg: &A,
    c: &Rational,
    a: &LambdaSeries<A::Elem>,
) -> LambdaSeries<A::Elem> {
    a.map(|x| alg.scale(c, x))
}

/// Cauchy product `c_n = Σ_{i+j=n} a_i b_j` using the carrier product.
pub fn series_mul<A: Algebra>(
    alg: &A,
    a: &LambdaSeries<A::Elem>,
    b: &LambdaSeries<A::Elem>,
) -> Result<LambdaSeries<A::Elem>> {
    same_order(a, b)?;
    in_carrier(alg, a)?;
    in_carrier(alg, b)?;
    Ok(mul_unchecked(alg, a, b))
}

pub(crate) fn mul_unchecked<A: Algebra>(
    alg: &A,
    a: &LambdaSeries<A::Elem>,
    b: &LambdaSeries<A::Elem>,
) -> LambdaSeries<A::Elem> {
    let order = a.order();
    let coeffs = (0..=order)
        .map(|n| {
            (0..=n).fold(alg.zero(), |acc, i| {
                let (x, y) = (&a.coeffs[i], &b.coeffs[n - i]);
                if alg.is_zero(x) || alg.is_zero(y) {
                    acc
                } else {
                    alg.add(&acc, &alg.mul(x, y))
                }
            })
        })
        .collect();
    LambdaSeries { coeffs }
}

/// `Σ_{k>=1} (-1)^{k+1} (a-1)^k / k`; requires `a_0 = 1`.
pub fn series_log<A: UnitalAlgebra>(
    alg: &A,
    a: &LambdaSeries<A::Elem>,
) -> Result<LambdaSeries<A::Elem>> {
    in_carrier(alg, a)?;
    if a.coeffs[0] != alg.one() {
        return Err(Error::Domain("log needs constant term equal to the unit".into()));
    }
    let order = a.order();
    let mut y = a.clone();
    y.coeffs[0] = alg.zero();
    let mut power = y.clone();
    let mut out = LambdaSeries::zero(alg, order);
    for k in 1..=order {
        let c = if k % 2 == 1 { int(1) } else { int(-1) } / int(k as i64);
        out = series_add(alg, &out, &series_scale(alg, &c, &power))?;
        power = mul_unchecked(alg, &power, &y);
    }
    Ok(out)
}

/// `Σ_{k>=0} a^k / k!`; requires `a_0 = 0`.
pub fn series_exp<A: UnitalAlgebra>(
    alg: &A,
    a: &LambdaSeries<A::Elem>,
) -> Result<LambdaSeries<A::Elem>> {
    in_carrier(alg, a)?;
    if !alg.is_zero(&a.coeffs[0]) {
        return Err(Error::Domain("exp needs zero constant term".into()));
    }
    let order = a.order();
    let mut out = LambdaSeries::one(alg, order);
    let mut power = a.clone();
    for k in 1..=order {
        let c = Rational::one() / factorial(k);
        out = series_add(alg, &out, &series_scale(alg, &c, &power))?;
        power = mul_unchecked(alg, &power, a);
    }
    Ok(out)
}

/// Two-sided inverse `Σ_k (1-a)^k`; requires `a_0 = 1`.
pub fn series_inverse<A: UnitalAlgebra>(
    alg: &A,
    a: &LambdaSeries<A::Elem>,
) -> Result<LambdaSeries<A::Elem>> {
    in_carrier(alg, a)?;
    if a.coeffs[0] != alg.one() {
        return Err(Error::Domain("inverse needs constant term equal to the unit".into()));
    }
    let order = a.order();
    let mut minus_y = series_neg(alg, a);
    minus_y.coeffs[0] = alg.zero();
    let mut out = LambdaSeries::one(alg, order);
    let mut power = minus_y.clone();
    for _ in 1..=order {
        out = series_add(alg, &out, &power)?;
        power = mul_unchecked(alg, &power, &minus_y);
    }
    Ok(out)
}

/// First coefficient where two series differ, rendered.
pub fn series_mismatch<A: Algebra>(
    alg: &A,
    what: &str,
    lhs: &LambdaSeries<A::Elem>,
    rhs: &LambdaSeries<A::Elem>,
) -> Option<String> {
    if lhs.order() != rhs.order() {
        return Some(format!("{what}: orders {} and {} differ", lhs.order(), rhs.order()));
    }
    lhs.coeffs
        .iter()
        .zip(&rhs.coeffs)
        .enumerate()
        .find(|(_, (l, r))| l != r)
        .map(|(k, (l, r))| {
            format!("{what} at λ^{k}: lhs = {} but rhs = {}", alg.render(l), alg.render(r))
        })
}
