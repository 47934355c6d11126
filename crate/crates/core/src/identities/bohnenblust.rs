use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{double_product, prelie_left, RotaBaxter};
use crate::arith::{factorial, pow};
use crate::check::CheckResult;
use crate::combinatorics::{permutations, set_partitions, Permutation};
use crate::error::{Error, Result};

pub const BS_ANCHOR: &str = "bohnenblust-spitzer";

/// Largest number of operands accepted (the sums have `n!` terms).
pub const BS_MAX_ARITY: usize = 6;

/// Which right-multiplication operator builds each cycle in `D_σ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DVariant {
    /// `r_{θF}(y) = θ yF`.
    Associative,
    /// `r_{▷F}(y) = y ▷θ F`.
    PreLie,
}

/// Closed form compared against the symmetrized nested sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BsForm {
    /// Sum over set partitions; commutative algebras only.
    CommutativePartitions,
    /// Sum over permutations of `D_σ` built with the pre-Lie product.
    CyclesPrelie,
    /// The `∗`-product of the operands; weight zero only.
    WeightZero,
}

impl BsForm {
    pub fn label(self) -> &'static str {
        match self {
            BsForm::CommutativePartitions => "partitions",
            BsForm::CyclesPrelie => "cycles-prelie",
            BsForm::WeightZero => "weight-zero",
        }
    }
}

fn check_arity(n: usize) -> Result<()> {
    if !(1..=BS_MAX_ARITY).contains(&n) {
        return Err(Error::Precondition(format!(
            "Bohnenblust–Spitzer needs between 1 and {BS_MAX_ARITY} operands, got {n}"
        )));
    }
    Ok(())
}

fn double_fold<A: RotaBaxter>(alg: &A, items: impl IntoIterator<Item = A::Elem>) -> Option<A::Elem> {
    items.into_iter().reduce(|acc, y| double_product(alg, &acc, &y))
}

fn parallel_sum<A: RotaBaxter>(
    alg: &A,
    sigmas: Vec<Permutation>,
    term: impl Fn(&Permutation) -> A::Elem + Sync + Send,
) -> A::Elem {
    let terms: Vec<A::Elem> = sigmas.par_iter().map(term).collect();
    alg.sum(&terms)
}

/// `Σ_σ R(⋯R(R(F_σ(1))F_σ(2))⋯)F_σ(n)`; the last factor stays outside the
/// outermost `R`. For `n = 1` this is `F_1`.
pub fn bs_lhs<A: RotaBaxter>(alg: &A, ops: &[A::Elem]) -> Result<A::Elem> {
    let n = ops.len();
    check_arity(n)?;
    if n == 1 {
        return Ok(ops[0].clone());
    }
    let sigmas: Vec<Permutation> = permutations(n)?.collect();
    Ok(parallel_sum(alg, sigmas, |s| {
        let mut g = alg.operator(&ops[s.apply(1) - 1]);
        for k in 2..n {
            g = alg.operator(&alg.mul(&g, &ops[s.apply(k) - 1]));
        }
        alg.mul(&g, &ops[s.apply(n) - 1])
    }))
}

/// `D_σ(F_1, ..., F_n)`: for each canonical cycle `(a_0 a_1 ⋯)` apply
/// `r_{F_{a_1}}` first, then `r_{F_{a_2}}`, ... to `F_{a_0}`; combine the
/// cycles with `∗θ` in canonical order.
pub fn d_theta_sigma<A: RotaBaxter>(
    alg: &A,
    ops: &[A::Elem],
    sigma: &Permutation,
    variant: DVariant,
) -> Result<A::Elem> {
    if sigma.degree() != ops.len() {
        return Err(Error::Precondition(format!(
            "permutation of degree {} applied to {} operands",
            sigma.degree(),
            ops.len()
        )));
    }
    let theta = alg.weight();
    let cycles = sigma.canonical_cycles().cycles.into_iter().map(|cycle| {
        let mut y = ops[cycle[0] - 1].clone();
        for &a in &cycle[1..] {
            let f = &ops[a - 1];
            y = match variant {
                DVariant::Associative => alg.scale(&theta, &alg.mul(&y, f)),
                DVariant::PreLie => prelie_left(alg, &y, f),
            };
        }
        y
    });
    double_fold(alg, cycles).ok_or_else(|| Error::Precondition("no operands".into()))
}

/// The closed-form side of the chosen form.
pub fn bs_rhs<A: RotaBaxter>(alg: &A, ops: &[A::Elem], form: BsForm) -> Result<A::Elem> {
    let n = ops.len();
    check_arity(n)?;
    let theta = alg.weight();
    match form {
        BsForm::CommutativePartitions => {
            if !alg.is_commutative() {
                return Err(Error::Precondition(format!(
                    "the partition form needs a commutative algebra, {} is not",
                    alg.name()
                )));
            }
            let minus_theta = -theta;
            let mut total = alg.zero();
            for p in set_partitions(n)? {
                let blocks = p.blocks.iter().map(|b| {
                    let prod = alg.product(b.iter().map(|&j| &ops[j - 1])).expect("blocks are nonempty");
                    alg.scale(&factorial(b.len() - 1), &prod)
                });
                let term = double_fold(alg, blocks).expect("partitions have blocks");
                let c = pow(&minus_theta, n - p.block_count());
                total = alg.add(&total, &alg.scale(&c, &term));
            }
            Ok(total)
        }
        BsForm::CyclesPrelie => {
            let sigmas: Vec<Permutation> = permutations(n)?.collect();
            let terms: Vec<Result<A::Elem>> = sigmas
                .par_iter()
                .map(|s| d_theta_sigma(alg, ops, s, DVariant::PreLie))
                .collect();
            let terms = terms.into_iter().collect::<Result<Vec<_>>>()?;
            Ok(alg.sum(&terms))
        }
        BsForm::WeightZero => {
            if !theta.is_zero() {
                return Err(Error::Precondition(format!(
                    "the weight-zero form needs θ = 0, {} has θ = {theta}",
                    alg.name()
                )));
            }
            Ok(double_fold(alg, ops.iter().cloned()).expect("arity checked"))
        }
    }
}

/// Compares the nested sum with the chosen closed form.
pub fn check_bohnenblust_spitzer<A: RotaBaxter>(
    alg: &A,
    ops: &[A::Elem],
    form: BsForm,
) -> Result<CheckResult> {
    let rhs = bs_rhs(alg, ops, form)?;
    let lhs = bs_lhs(alg, ops)?;
    let n = ops.len();
    let failure = (lhs != rhs).then(|| {
        let operands: Vec<String> = ops.iter().map(|f| alg.render(f)).collect();
        format!(
            "F = [{}]: nested sum = {} but {} form = {}",
            operands.join("; "),
            alg.render(&lhs),
            form.label(),
            alg.render(&rhs)
        )
    });
    let cases: usize = (1..=n).product();
    Ok(CheckResult::from_outcome(
        format!("bohnenblust-spitzer[{}](n={n}, {})", alg.name(), form.label()),
        BS_ANCHOR,
        cases,
        failure,
    ))
}
