use num_traits::Zero;

use crate::algebra::laws::{first_failure, jacobiator, left_prelie_defect, mismatch, render_pair, render_triple, right_prelie_defect};
use crate::algebra::{b_operator, commutator, double_product, Model, SamplePlan};
use crate::arith::rat;
use crate::check::CheckResult;
use crate::error::{Error, Result};

pub const OPERATOR_YBE_ANCHOR: &str = "operator-yang-baxter";
pub const MODIFIED_YBE_ANCHOR: &str = "modified-yang-baxter";

/// On the commutator Lie algebra of a weight-0 model: the operator form
/// `[R(x),R(y)] = R([R(x),y] + [x,R(y)])`, Jacobi for
/// `[x,y]_R = [R(x),y] + [x,R(y)]`, right pre-Lie `x↑y = [x,R(y)]`, left
/// pre-Lie `x↓y = [R(x),y]` and `[x,y]_R = x↑y - y↑x`.
pub fn check_operator_ybe<A: Model>(alg: &A, plan: &SamplePlan) -> Result<CheckResult> {
    if !alg.weight().is_zero() {
        return Err(Error::Precondition(format!(
            "operator Yang–Baxter checks need weight 0, {} has weight {}",
            alg.name(),
            alg.weight()
        )));
    }
    let br = |x: &A::Elem, y: &A::Elem| commutator(alg, x, y);
    let r = |x: &A::Elem| alg.operator(x);
    let up = |x: &A::Elem, y: &A::Elem| br(x, &r(y));
    let down = |x: &A::Elem, y: &A::Elem| br(&r(x), y);
    let br_r = |x: &A::Elem, y: &A::Elem| alg.add(&down(x, y), &up(x, y));
    let zero = alg.zero();
    let a = OPERATOR_YBE_ANCHOR;
    let pairs = plan.pairs(alg);
    let triples = plan.triples(alg);

    let (n, f) = first_failure(pairs.iter(), |(x, y)| {
        mismatch(alg, "[R(x),R(y)] = R([R(x),y] + [x,R(y)])", &br(&r(x), &r(y)), &r(&br_r(x, y)))
            .map(|m| format!("{}; {m}", render_pair(alg, x, y)))
    });
    let ybe = CheckResult::from_outcome("operator-form", a, n, f);

    let (n, f) = first_failure(pairs.iter(), |(x, y)| {
        let anti = mismatch(alg, "[x,y]_R = -[y,x]_R", &br_r(x, y), &alg.neg(&br_r(y, x)));
        let split = mismatch(alg, "[x,y]_R = x↑y - y↑x", &br_r(x, y), &alg.sub(&up(x, y), &up(y, x)));
        anti.or(split).map(|m| format!("{}; {m}", render_pair(alg, x, y)))
    });
    let bracket = CheckResult::from_outcome("bracket-split", a, n, f);

    let triple = |name: &str, what: &str, defect: &dyn Fn(&A::Elem, &A::Elem, &A::Elem) -> A::Elem| {
        let (n, f) = first_failure(triples.iter(), |(x, y, z)| {
            mismatch(alg, what, &defect(x, y, z), &zero)
                .map(|m| format!("{}; {m}", render_triple(alg, x, y, z)))
        });
        CheckResult::from_outcome(name, a, n, f)
    };
    let jacobi = triple("jacobi", "Jacobi for [,]_R", &|x, y, z| jacobiator(alg, br_r, x, y, z));
    let right = triple("right-pre-lie", "right pre-Lie defect of x↑y = [x,R(y)]", &|x, y, z| {
        right_prelie_defect(alg, up, x, y, z)
    });
    let left = triple("left-pre-lie", "left pre-Lie defect of x↓y = [R(x),y]", &|x, y, z| {
        left_prelie_defect(alg, down, x, y, z)
    });

    Ok(CheckResult::all(
        format!("operator-ybe[{}]", alg.name()),
        a,
        [ybe, bracket, jacobi, right, left],
    ))
}

/// For `B = R - R̃ = 2R + θ id`: the associative relation
/// `B(x)B(y) = B(B(x)y + xB(y)) - θ²xy`, its Lie form on commutators,
/// Jacobi for `[x,y]_B = ½([B(x),y] + [x,B(y)])` and
/// `x ∗θ y = ½(B(x)y + xB(y))`.
pub fn check_modified_ybe<A: Model>(alg: &A, plan: &SamplePlan) -> CheckResult {
    let theta = alg.weight();
    let theta_sq = &theta * &theta;
    let half = rat(1, 2);
    let b = |x: &A::Elem| b_operator(alg, x);
    let br = |x: &A::Elem, y: &A::Elem| commutator(alg, x, y);
    let br_b = |x: &A::Elem, y: &A::Elem| alg.scale(&half, &alg.add(&br(&b(x), y), &br(x, &b(y))));
    let zero = alg.zero();
    let a = MODIFIED_YBE_ANCHOR;
    let pairs = plan.pairs(alg);

    let (n, f) = first_failure(pairs.iter(), |(x, y)| {
        let lhs = alg.mul(&b(x), &b(y));
        let inner = alg.add(&alg.mul(&b(x), y), &alg.mul(x, &b(y)));
        let rhs = alg.sub(&b(&inner), &alg.scale(&theta_sq, &alg.mul(x, y)));
        mismatch(alg, "B(x)B(y) = B(B(x)y + xB(y)) - θ²xy", &lhs, &rhs)
            .map(|m| format!("{}; {m}", render_pair(alg, x, y)))
    });
    let assoc = CheckResult::from_outcome("associative-form", a, n, f);

    let (n, f) = first_failure(pairs.iter(), |(x, y)| {
        let lhs = br(&b(x), &b(y));
        let inner = alg.add(&br(&b(x), y), &br(x, &b(y)));
        let rhs = alg.sub(&b(&inner), &alg.scale(&theta_sq, &br(x, y)));
        mismatch(alg, "[B(x),B(y)] = B([B(x),y] + [x,B(y)]) - θ²[x,y]", &lhs, &rhs)
            .map(|m| format!("{}; {m}", render_pair(alg, x, y)))
    });
    let lie = CheckResult::from_outcome("lie-form", a, n, f);

    let (n, f) = first_failure(plan.triples(alg), |(x, y, z)| {
        mismatch(alg, "Jacobi for [,]_B", &jacobiator(alg, br_b, x, y, z), &zero)
            .map(|m| format!("{}; {m}", render_triple(alg, x, y, z)))
    });
    let jacobi = CheckResult::from_outcome("jacobi", a, n, f);

    let (n, f) = first_failure(pairs.iter(), |(x, y)| {
        let sum = alg.add(&alg.mul(&b(x), y), &alg.mul(x, &b(y)));
        mismatch(alg, "x*y = (B(x)y + xB(y))/2", &double_product(alg, x, y), &alg.scale(&half, &sum))
            .map(|m| format!("{}; {m}", render_pair(alg, x, y)))
    });
    let rewrite = CheckResult::from_outcome("double-rewrite", a, n, f);

    CheckResult::all(format!("modified-ybe[{}]", alg.name()), a, [assoc, lie, jacobi, rewrite])
}
