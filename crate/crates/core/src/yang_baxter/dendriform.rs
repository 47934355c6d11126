use crate::algebra::laws::{first_failure, mismatch, render_pair, render_triple};
use num_traits::Zero;

use crate::algebra::{half_shuffles, Algebra, Model, RotaBaxter, SamplePlan};
use crate::check::CheckResult;
use crate::combinatorics::{shuffle, Word};
use crate::error::{Error, Result};

pub const DENDRIFORM_ANCHOR: &str = "dendriform-axioms";
pub const QUASI_SHUFFLE_ANCHOR: &str = "quasi-shuffle-relations";
pub const SHUFFLE_ANCHOR: &str = "shuffle-of-iterated-images";

fn up<A: RotaBaxter>(alg: &A, x: &A::Elem, y: &A::Elem) -> A::Elem {
    half_shuffles(alg, x, y).0
}

fn down<A: RotaBaxter>(alg: &A, x: &A::Elem, y: &A::Elem) -> A::Elem {
    half_shuffles(alg, x, y).1
}

fn triple_check<A: Model>(
    alg: &A,
    triples: &[(A::Elem, A::Elem, A::Elem)],
    name: &str,
    anchor: &str,
    what: &str,
    sides: impl Fn(&A::Elem, &A::Elem, &A::Elem) -> (A::Elem, A::Elem),
) -> CheckResult {
    let (n, f) = first_failure(triples.iter(), |(x, y, z)| {
        let (lhs, rhs) = sides(x, y, z);
        mismatch(alg, what, &lhs, &rhs).map(|m| format!("{}; {m}", render_triple(alg, x, y, z)))
    });
    CheckResult::from_outcome(name, anchor, n, f)
}

/// The three dendriform axioms for `x↑y = xR(y)`, `x↓y = R(x)y` and
/// associativity of `↑ + ↓`. Commutative carriers also get
/// `a↓b = b↑a` and `a↓(b↓c) = (a↓b + b↓a)↓c`.
pub fn check_dendriform<A: Model>(alg: &A, plan: &SamplePlan) -> Result<CheckResult> {
    if !alg.weight().is_zero() {
        return Err(Error::Precondition(format!(
            "dendriform axioms need weight 0, {} has weight {}",
            alg.name(),
            alg.weight()
        )));
    }
    let triples = plan.triples(alg);
    let up = |x: &A::Elem, y: &A::Elem| up(alg, x, y);
    let down = |x: &A::Elem, y: &A::Elem| down(alg, x, y);
    let sum = |x: &A::Elem, y: &A::Elem| alg.add(&up(x, y), &down(x, y));
    let a = DENDRIFORM_ANCHOR;
    let mut parts = vec![
        triple_check(alg, &triples, "up-up", a, "(a↑b)↑c = a↑(b↑c + b↓c)", |x, y, z| {
            (up(&up(x, y), z), up(x, &sum(y, z)))
        }),
        triple_check(alg, &triples, "down-up", a, "a↓(b↑c) = (a↓b)↑c", |x, y, z| {
            (down(x, &up(y, z)), up(&down(x, y), z))
        }),
        triple_check(alg, &triples, "down-down", a, "a↓(b↓c) = (a↑b + a↓b)↓c", |x, y, z| {
            (down(x, &down(y, z)), down(&sum(x, y), z))
        }),
        triple_check(alg, &triples, "sum-associative", a, "(a·b)·c = a·(b·c) for · = ↑+↓", |x, y, z| {
            (sum(&sum(x, y), z), sum(x, &sum(y, z)))
        }),
    ];
    if alg.is_commutative() {
        let (n, f) = first_failure(plan.pairs(alg), |(x, y)| {
            mismatch(alg, "a↓b = b↑a", &down(x, y), &up(y, x))
                .map(|m| format!("{}; {m}", render_pair(alg, x, y)))
        });
        parts.push(CheckResult::from_outcome("commutative-swap", a, n, f));
        parts.push(triple_check(alg, &triples, "commutative-down", a, "a↓(b↓c) = (a↓b + b↓a)↓c", |x, y, z| {
            (down(x, &down(y, z)), down(&alg.add(&down(x, y), &down(y, x)), z))
        }));
    }
    Ok(CheckResult::all(format!("dendriform[{}]", alg.name()), a, parts))
}

/// Half-shuffle relations of a commutative algebra of weight θ:
/// `x↓y = y↑x` and `(x↑y)↑z = x↑(y↑z + z↑y + θ y·z)`. At weight zero this is
/// the shuffle (Zinbiel) system.
pub fn check_quasi_shuffle_relations<A: Model>(alg: &A, plan: &SamplePlan) -> Result<CheckResult> {
    require_commutative(alg, "quasi-shuffle relations")?;
    let theta = alg.weight();
    let up = |x: &A::Elem, y: &A::Elem| up(alg, x, y);
    let down = |x: &A::Elem, y: &A::Elem| down(alg, x, y);
    let a = QUASI_SHUFFLE_ANCHOR;
    let (n, f) = first_failure(plan.pairs(alg), |(x, y)| {
        mismatch(alg, "x↓y = y↑x", &down(x, y), &up(y, x))
            .map(|m| format!("{}; {m}", render_pair(alg, x, y)))
    });
    let swap = CheckResult::from_outcome("swap", a, n, f);
    let triples = plan.triples(alg);
    let nested = triple_check(alg, &triples, "nested-up", a, "(x↑y)↑z = x↑(y↑z + z↑y + θyz)", |x, y, z| {
        let inner = alg.add(
            &alg.add(&up(y, z), &up(z, y)),
            &alg.scale(&theta, &alg.mul(y, z)),
        );
        (up(&up(x, y), z), up(x, &inner))
    });
    Ok(CheckResult::all(format!("quasi-shuffle[{}]", alg.name()), a, [swap, nested]))
}

/// Expansions of `R(x)R(y)` and `R(x)R(yR(z))` into shuffle terms plus the
/// weight corrections, valid for commutative carriers.
pub fn check_quasi_shuffle_expansions<A: Model>(alg: &A, plan: &SamplePlan) -> Result<CheckResult> {
    require_commutative(alg, "quasi-shuffle expansions")?;
    let theta = alg.weight();
    let r = |x: &A::Elem| alg.operator(x);
    let m = |x: &A::Elem, y: &A::Elem| alg.mul(x, y);
    let a = QUASI_SHUFFLE_ANCHOR;
    let (n, f) = first_failure(plan.pairs(alg), |(x, y)| {
        let lhs = m(&r(x), &r(y));
        let shuffle = alg.add(&r(&m(x, &r(y))), &r(&m(y, &r(x))));
        let rhs = alg.add(&shuffle, &alg.scale(&theta, &r(&m(x, y))));
        mismatch(alg, "R(x)R(y) = R(xR(y)) + R(yR(x)) + θR(xy)", &lhs, &rhs)
            .map(|e| format!("{}; {e}", render_pair(alg, x, y)))
    });
    let two = CheckResult::from_outcome("two-fold", a, n, f);
    let triples = plan.triples(alg);
    let three = triple_check(
        alg,
        &triples,
        "three-fold",
        a,
        "R(x)R(yR(z)) = R(xR(yR(z))) + R(yR(xR(z))) + R(yR(zR(x))) + θ(R(xyR(z)) + R(yR(xz)))",
        |x, y, z| {
            let lhs = m(&r(x), &r(&m(y, &r(z))));
            let shuffle = [
                r(&m(x, &r(&m(y, &r(z))))),
                r(&m(y, &r(&m(x, &r(z))))),
                r(&m(y, &r(&m(z, &r(x))))),
            ];
            let merged = alg.add(&r(&m(&m(x, y), &r(z))), &r(&m(y, &r(&m(x, z)))));
            let rhs = shuffle
                .iter()
                .fold(alg.scale(&theta, &merged), |acc, t| alg.add(&acc, t));
            (lhs, rhs)
        },
    );
    Ok(CheckResult::all(format!("quasi-shuffle-expansions[{}]", alg.name()), a, [two, three]))
}

/// `R(h_1 R(h_2 ⋯ R(h_k)⋯))`.
pub fn iterated_image<A: RotaBaxter>(alg: &A, hs: &[A::Elem]) -> A::Elem {
    hs.iter()
        .rev()
        .fold(alg.one(), |inner, h| alg.operator(&alg.mul(h, &inner)))
}

/// Weight zero: the product of the iterated images of `f_1..f_n` and
/// `g_1..g_m` is the sum of the iterated images over all their shuffles.
/// Checked on tuples drawn from `plan`.
pub fn check_shuffle_of_images<A: Model>(
    alg: &A,
    plan: &SamplePlan,
    n: usize,
    m: usize,
) -> Result<CheckResult> {
    if !alg.weight().is_zero() {
        return Err(Error::Precondition(format!(
            "the shuffle of iterated images needs weight 0, {} has weight {}",
            alg.name(),
            alg.weight()
        )));
    }
    if n == 0 || m == 0 {
        return Err(Error::Config("iterated images need at least one factor each".into()));
    }
    let left = Word((0..n as u32).collect());
    let right = Word((n as u32..(n + m) as u32).collect());
    let shuffles = shuffle(&left, &right);
    let (cases, failure) = first_failure(plan.tuples(alg, n + m), |hs| {
        let lhs = alg.mul(&iterated_image(alg, &hs[..n]), &iterated_image(alg, &hs[n..]));
        let rhs = shuffles.iter().fold(alg.zero(), |acc, w| {
            let picked: Vec<A::Elem> = w.0.iter().map(|&i| hs[i as usize].clone()).collect();
            alg.add(&acc, &iterated_image(alg, &picked))
        });
        let rendered: Vec<String> = hs.iter().map(|h| alg.render(h)).collect();
        mismatch(alg, "product of iterated images = sum over shuffles", &lhs, &rhs)
            .map(|e| format!("f = [{}], g = [{}]; {e}", rendered[..n].join("; "), rendered[n..].join("; ")))
    });
    Ok(CheckResult::from_outcome(
        format!("shuffle-of-images[{}](n={n}, m={m})", alg.name()),
        SHUFFLE_ANCHOR,
        cases,
        failure,
    ))
}

fn require_commutative<A: Algebra>(alg: &A, what: &str) -> Result<()> {
    if alg.is_commutative() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} need a commutative carrier, {} is not", alg.name())))
    }
}
