//! Generic law checkers. Each checker instantiates a universally quantified
//! identity on the tuples selected by a [`SamplePlan`] and reports the first
//! counterexample.

use super::{
    b_operator, double_product, half_shuffles, prelie_left, prelie_right,
    tilde_operator, Algebra, Model, Rescaled, SamplePlan, Tilde,
};
use crate::arith::{rat, Rational};
use crate::check::CheckResult;

pub const RB_ANCHOR: &str = "rota-baxter-relation";
pub const DOUBLE_ANCHOR: &str = "double-product";
pub const RESCALE_ANCHOR: &str = "weight-rescaling";
pub const TILDE_ANCHOR: &str = "complementary-operator";
pub const PRELIE_ANCHOR: &str = "pre-lie-relation";
pub const HALF_SHUFFLE_ANCHOR: &str = "half-shuffles";
pub const LINEARITY_ANCHOR: &str = "operator-linearity";

/// `Some(description)` when `lhs != rhs`.
pub fn mismatch<A: Algebra>(alg: &A, what: &str, lhs: &A::Elem, rhs: &A::Elem) -> Option<String> {
    (lhs != rhs).then(|| {
        format!("{what}: lhs = {} but rhs = {}", alg.render(lhs), alg.render(rhs))
    })
}

/// Runs `eval` over all cases and returns `(cases, first failure)`.
pub fn first_failure<T>(
    cases: impl IntoIterator<Item = T>,
    mut eval: impl FnMut(&T) -> Option<String>,
) -> (usize, Option<String>) {
    let mut count = 0;
    for case in cases {
        count += 1;
        if let Some(msg) = eval(&case) {
            return (count, Some(msg));
        }
    }
    (count, None)
}

pub fn render_pair<A: Algebra>(alg: &A, x: &A::Elem, y: &A::Elem) -> String {
    format!("x = {}, y = {}", alg.render(x), alg.render(y))
}

pub fn render_triple<A: Algebra>(alg: &A, x: &A::Elem, y: &A::Elem, z: &A::Elem) -> String {
    format!("x = {}, y = {}, z = {}", alg.render(x), alg.render(y), alg.render(z))
}

/// `R(x)R(y) = R(R(x)y + xR(y) + θxy)` on sampled pairs.
pub fn check_rb_law<A: Model>(alg: &A, plan: &SamplePlan) -> CheckResult {
    let (cases, failure) = first_failure(plan.pairs(alg), |(x, y)| {
        let lhs = alg.mul(&alg.operator(x), &alg.operator(y));
        let rhs = alg.operator(&double_product(alg, x, y));
        mismatch(alg, "R(x)R(y) = R(x *θ y)", &lhs, &rhs)
            .map(|m| format!("{}; {m}", render_pair(alg, x, y)))
    });
    CheckResult::from_outcome(
        format!("rb-law[{}]", alg.name()),
        RB_ANCHOR,
        cases,
        failure,
    )
}

/// `R(αx + βy) = αR(x) + βR(y)` on sampled pairs with fixed scalars.
pub fn check_linearity<A: Model>(alg: &A, plan: &SamplePlan) -> CheckResult {
    let (a, b) = (rat(3, 2), rat(-2, 1));
    let (cases, failure) = first_failure(plan.pairs(alg), |(x, y)| {
        let combo = alg.add(&alg.scale(&a, x), &alg.scale(&b, y));
        let lhs = alg.operator(&combo);
        let rhs = alg.add(
            &alg.scale(&a, &alg.operator(x)),
            &alg.scale(&b, &alg.operator(y)),
        );
        mismatch(alg, "R(3/2 x - 2 y)", &lhs, &rhs)
            .map(|m| format!("{}; {m}", render_pair(alg, x, y)))
    });
    CheckResult::from_outcome(
        format!("linearity[{}]", alg.name()),
        LINEARITY_ANCHOR,
        cases,
        failure,
    )
}

/// Associativity of `∗θ`, `R(x ∗θ y) = R(x)R(y)`, the Rota–Baxter relation
/// for `∗θ`, and `R̃(x ∗θ y) = -R̃(x)R̃(y)`.
pub fn check_double_assoc_and_hom<A: Model>(alg: &A, plan: &SamplePlan) -> CheckResult {
    let star = |x: &A::Elem, y: &A::Elem| double_product(alg, x, y);
    let theta = alg.weight();
    let assoc = first_failure(plan.triples(alg), |(x, y, z)| {
        let lhs = star(&star(x, y), z);
        let rhs = star(x, &star(y, z));
        mismatch(alg, "(x*y)*z = x*(y*z)", &lhs, &rhs)
            .map(|m| format!("{}; {m}", render_triple(alg, x, y, z)))
    });
    let pairs = plan.pairs(alg);
    let hom = first_failure(pairs.iter(), |(x, y)| {
        let lhs = alg.operator(&star(x, y));
        let rhs = alg.mul(&alg.operator(x), &alg.operator(y));
        mismatch(alg, "R(x*y) = R(x)R(y)", &lhs, &rhs)
            .map(|m| format!("{}; {m}", render_pair(alg, x, y)))
    });
    let rb_star = first_failure(pairs.iter(), |(x, y)| {
        let (rx, ry) = (alg.operator(x), alg.operator(y));
        let lhs = star(&rx, &ry);
        let inner = alg.add(
            &alg.add(&star(&rx, y), &star(x, &ry)),
            &alg.scale(&theta, &star(x, y)),
        );
        let rhs = alg.operator(&inner);
        mismatch(alg, "R(x)*R(y) = R(R(x)*y + x*R(y) + θ x*y)", &lhs, &rhs)
            .map(|m| format!("{}; {m}", render_pair(alg, x, y)))
    });
    let anti = first_failure(pairs.iter(), |(x, y)| {
        let lhs = tilde_operator(alg, &star(x, y));
        let rhs = alg.neg(&alg.mul(&tilde_operator(alg, x), &tilde_operator(alg, y)));
        mismatch(alg, "R~(x*y) = -R~(x)R~(y)", &lhs, &rhs)
            .map(|m| format!("{}; {m}", render_pair(alg, x, y)))
    });
    let name = alg.name();
    CheckResult::all(
        format!("double-product[{name}]"),
        DOUBLE_ANCHOR,
        [
            CheckResult::from_outcome("associativity", DOUBLE_ANCHOR, assoc.0, assoc.1),
            CheckResult::from_outcome("homomorphism", DOUBLE_ANCHOR, hom.0, hom.1),
            CheckResult::from_outcome("rb-for-double", DOUBLE_ANCHOR, rb_star.0, rb_star.1),
            CheckResult::from_outcome("tilde-anti-homomorphism", TILDE_ANCHOR, anti.0, anti.1),
        ],
    )
}

/// `βR` satisfies the relation with weight `βθ`.
pub fn check_weight_rescale<A: Model>(alg: &A, beta: &Rational, plan: &SamplePlan) -> CheckResult {
    let rescaled = Rescaled::new(alg, beta.clone());
    let inner = check_rb_law(&rescaled, plan);
    CheckResult::from_outcome(
        format!("weight-rescale[{}; beta = {beta}]", alg.name()),
        RESCALE_ANCHOR,
        inner.cases,
        inner.counterexample,
    )
}

/// `R̃ = -θ id - R` is Rota–Baxter of the same weight.
pub fn check_tilde_rb<A: Model>(alg: &A, plan: &SamplePlan) -> CheckResult {
    let inner = check_rb_law(&Tilde::new(alg), plan);
    CheckResult::from_outcome(
        format!("tilde-rb-law[{}]", alg.name()),
        TILDE_ANCHOR,
        inner.cases,
        inner.counterexample,
    )
}

/// Left pre-Lie defect `(x▷y)▷z - x▷(y▷z) - (y▷x)▷z + y▷(x▷z)` for any
/// bilinear product on the carrier of `alg`.
pub fn left_prelie_defect<A: Algebra>(
    alg: &A,
    prod: impl Fn(&A::Elem, &A::Elem) -> A::Elem,
    x: &A::Elem,
    y: &A::Elem,
    z: &A::Elem,
) -> A::Elem {
    let lhs = alg.sub(&prod(&prod(x, y), z), &prod(x, &prod(y, z)));
    let rhs = alg.sub(&prod(&prod(y, x), z), &prod(y, &prod(x, z)));
    alg.sub(&lhs, &rhs)
}

/// Right pre-Lie defect `(x◁y)◁z - x◁(y◁z) - (x◁z)◁y + x◁(z◁y)`.
pub fn right_prelie_defect<A: Algebra>(
    alg: &A,
    prod: impl Fn(&A::Elem, &A::Elem) -> A::Elem,
    x: &A::Elem,
    y: &A::Elem,
    z: &A::Elem,
) -> A::Elem {
    let lhs = alg.sub(&prod(&prod(x, y), z), &prod(x, &prod(y, z)));
    let rhs = alg.sub(&prod(&prod(x, z), y), &prod(x, &prod(z, y)));
    alg.sub(&lhs, &rhs)
}

/// Jacobiator `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]` of a bracket.
pub fn jacobiator<A: Algebra>(
    alg: &A,
    bracket: impl Fn(&A::Elem, &A::Elem) -> A::Elem,
    x: &A::Elem,
    y: &A::Elem,
    z: &A::Elem,
) -> A::Elem {
    let a = bracket(x, &bracket(y, z));
    let b = bracket(y, &bracket(z, x));
    let c = bracket(z, &bracket(x, y));
    alg.add(&alg.add(&a, &b), &c)
}

/// Pre-Lie relation for `▷θ`, right pre-Lie relation for `◁θ`, Jacobi for
/// the induced bracket and `[a,b]_▷ = [a,b]_∗`.
pub fn check_prelie_axiom<A: Model>(alg: &A, plan: &SamplePlan) -> CheckResult {
    let left = |a: &A::Elem, b: &A::Elem| prelie_left(alg, a, b);
    let right = |a: &A::Elem, b: &A::Elem| prelie_right(alg, a, b);
    let bracket = |a: &A::Elem, b: &A::Elem| alg.sub(&left(a, b), &left(b, a));
    let zero = alg.zero();
    let triples = plan.triples(alg);
    let mut parts = Vec::new();

    let (n, f) = first_failure(triples.iter(), |(x, y, z)| {
        mismatch(alg, "left pre-Lie defect", &left_prelie_defect(alg, left, x, y, z), &zero)
            .map(|m| format!("{}; {m}", render_triple(alg, x, y, z)))
    });
    parts.push(CheckResult::from_outcome("left-pre-lie", PRELIE_ANCHOR, n, f));

    let (n, f) = first_failure(triples.iter(), |(x, y, z)| {
        mismatch(alg, "right pre-Lie defect", &right_prelie_defect(alg, right, x, y, z), &zero)
            .map(|m| format!("{}; {m}", render_triple(alg, x, y, z)))
    });
    parts.push(CheckResult::from_outcome("right-pre-lie", PRELIE_ANCHOR, n, f));

    let (n, f) = first_failure(triples.iter(), |(x, y, z)| {
        mismatch(alg, "Jacobi for [,]_pre-Lie", &jacobiator(alg, bracket, x, y, z), &zero)
            .map(|m| format!("{}; {m}", render_triple(alg, x, y, z)))
    });
    parts.push(CheckResult::from_outcome("jacobi", PRELIE_ANCHOR, n, f));

    let (n, f) = first_failure(plan.pairs(alg), |(x, y)| {
        let star = alg.sub(&double_product(alg, x, y), &double_product(alg, y, x));
        mismatch(alg, "[x,y]_pre-Lie = [x,y]_*", &bracket(x, y), &star)
            .map(|m| format!("{}; {m}", render_pair(alg, x, y)))
    });
    parts.push(CheckResult::from_outcome("bracket-match", PRELIE_ANCHOR, n, f));

    CheckResult::all(format!("pre-lie[{}]", alg.name()), PRELIE_ANCHOR, parts)
}

/// `x↑y + x↓y + θxy = x ∗θ y` and, for weight zero and commutative
/// carriers, `x↓y = y↑x`.
pub fn check_half_shuffles<A: Model>(alg: &A, plan: &SamplePlan) -> CheckResult {
    let theta = alg.weight();
    let symmetric = alg.is_commutative();
    let (n, f) = first_failure(plan.pairs(alg), |(x, y)| {
        let (up, down) = half_shuffles(alg, x, y);
        let lhs = alg.add(&alg.add(&up, &down), &alg.scale(&theta, &alg.mul(x, y)));
        let rhs = double_product(alg, x, y);
        let sum = mismatch(alg, "x↑y + x↓y + θxy = x*y", &lhs, &rhs);
        let swap = if symmetric {
            let (y_up_x, _) = half_shuffles(alg, y, x);
            mismatch(alg, "x↓y = y↑x", &down, &y_up_x)
        } else {
            None
        };
        sum.or(swap).map(|m| format!("{}; {m}", render_pair(alg, x, y)))
    });
    CheckResult::from_outcome(format!("half-shuffles[{}]", alg.name()), HALF_SHUFFLE_ANCHOR, n, f)
}

/// `x ∗θ y = ½(B(x)y + xB(y))`.
pub fn check_b_rewrite<A: Model>(alg: &A, plan: &SamplePlan) -> CheckResult {
    let half = rat(1, 2);
    let (n, f) = first_failure(plan.pairs(alg), |(x, y)| {
        let sum = alg.add(&alg.mul(&b_operator(alg, x), y), &alg.mul(x, &b_operator(alg, y)));
        mismatch(alg, "x*y = (B(x)y + xB(y))/2", &double_product(alg, x, y), &alg.scale(&half, &sum))
            .map(|m| format!("{}; {m}", render_pair(alg, x, y)))
    });
    CheckResult::from_outcome(format!("b-rewrite[{}]", alg.name()), DOUBLE_ANCHOR, n, f)
}

/// Idempotence `R∘R = R` and closure of image and kernel under the product;
/// meaningful for the projector models.
pub fn check_projector<A: Model>(alg: &A, plan: &SamplePlan) -> CheckResult {
    let complement = |x: &A::Elem| alg.sub(x, &alg.operator(x));
    let (n, f) = first_failure(plan.pairs(alg), |(x, y)| {
        let rx = alg.operator(x);
        let idem = mismatch(alg, "R(R(x)) = R(x)", &alg.operator(&rx), &rx);
        let image = {
            let prod = alg.mul(&rx, &alg.operator(y));
            mismatch(alg, "R(x)R(y) in image", &alg.operator(&prod), &prod)
        };
        let kernel = {
            let prod = alg.mul(&complement(x), &complement(y));
            mismatch(alg, "kernel closed", &alg.operator(&prod), &alg.zero())
        };
        idem.or(image).or(kernel).map(|m| format!("{}; {m}", render_pair(alg, x, y)))
    });
    CheckResult::from_outcome(format!("projector[{}]", alg.name()), RB_ANCHOR, n, f)
}
