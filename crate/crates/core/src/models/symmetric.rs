use itertools::Itertools;

use super::{Poly, PolyAlgebra, PolyKind, SequenceAlgebra};
use crate::algebra::{Algebra, RotaBaxter, UnitalAlgebra};
use crate::check::CheckResult;
use crate::error::{Error, Result};

pub const SYMMETRIC_ANCHOR: &str = "standard-algebra-symmetric-functions";

/// `Σ_{i_1 < ... < i_n < k} x_{i_1} ⋯ x_{i_n}`: the elementary symmetric
/// polynomial `e_n(x_1, ..., x_{k-1})`, or its ordered-word analogue.
pub fn ordered_subsequence_sum(base: &PolyAlgebra, n: usize, k: usize) -> Poly {
    let mut out = base.zero();
    for letters in (1..k as u32).combinations(n) {
        out = base.add(&out, &base.monomial(&letters));
    }
    out
}

/// `Σ_{i<k} x_i^n`.
pub fn power_sum(base: &PolyAlgebra, n: usize, k: usize) -> Poly {
    let mut out = base.zero();
    for i in 1..k as u32 {
        out = base.add(&out, &base.monomial(&vec![i; n]));
    }
    out
}

/// Checks `R^{(n)}(x)_k` against the ordered-subsequence oracle and
/// `R(x^n)_k` against the power sum in a standard algebra.
pub fn elementary_symmetric_check(
    alg: &SequenceAlgebra<PolyAlgebra>,
    n: usize,
    k: usize,
) -> Result<CheckResult> {
    if n == 0 {
        return Err(Error::Config("symmetric-function order must be at least 1".into()));
    }
    if k >= alg.window() {
        return Err(Error::Config(format!("index {k} outside window {}", alg.window())));
    }
    if alg.base().degree_cap() < n {
        return Err(Error::Config(format!(
            "degree cap {} below order {n}",
            alg.base().degree_cap()
        )));
    }
    let base = alg.base();
    let x = alg.generator();
    let iterated = alg.iterated(&x, n);
    let e = ordered_subsequence_sum(base, n, k);
    let power = alg.operator(&alg.pow(&x, n));
    let p = power_sum(base, n, k);
    let label = match base.kind() {
        PolyKind::Commutative => "e",
        PolyKind::NonCommutative => "ordered-e",
    };
    let failure = if iterated.entries[k] != e {
        Some(format!(
            "R^({n})(x)_{k} = {} but {label}_{n} = {}",
            base.render(&iterated.entries[k]),
            base.render(&e)
        ))
    } else if power.entries[k] != p {
        Some(format!(
            "R(x^{n})_{k} = {} but p_{n} = {}",
            base.render(&power.entries[k]),
            base.render(&p)
        ))
    } else {
        None
    };
    Ok(CheckResult::from_outcome(
        format!("symmetric[{}](n={n}, k={k})", alg.name()),
        SYMMETRIC_ANCHOR,
        2,
        failure,
    ))
}

/// Runs [`elementary_symmetric_check`] for all `1 <= n <= max_order` and
/// all window indices.
pub fn symmetric_sweep(alg: &SequenceAlgebra<PolyAlgebra>, max_order: usize) -> Result<CheckResult> {
    let mut parts = Vec::new();
    for n in 1..=max_order {
        for k in 0..alg.window() {
            parts.push(elementary_symmetric_check(alg, n, k)?);
        }
    }
    Ok(CheckResult::all(format!("symmetric-sweep[{}]", alg.name()), SYMMETRIC_ANCHOR, parts))
}
