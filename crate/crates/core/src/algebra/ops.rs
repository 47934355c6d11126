use super::{Algebra, RotaBaxter};

/// `x ∗θ y = R(x)y + xR(y) + θxy`.
pub fn double_product<A: RotaBaxter>(alg: &A, x: &A::Elem, y: &A::Elem) -> A::Elem {
    let rx_y = alg.mul(&alg.operator(x), y);
    let x_ry = alg.mul(x, &alg.operator(y));
    let xy = alg.scale(&alg.weight(), &alg.mul(x, y));
    alg.add(&alg.add(&rx_y, &x_ry), &xy)
}

/// `R̃(x) = -θx - R(x)`.
pub fn tilde_operator<A: RotaBaxter>(alg: &A, x: &A::Elem) -> A::Elem {
    let theta_x = alg.scale(&alg.weight(), x);
    alg.neg(&alg.add(&theta_x, &alg.operator(x)))
}

/// Left pre-Lie product `a ▷θ b = R(a)b - bR(a) - θba`.
pub fn prelie_left<A: RotaBaxter>(alg: &A, a: &A::Elem, b: &A::Elem) -> A::Elem {
    let ra = alg.operator(a);
    let ba = alg.scale(&alg.weight(), &alg.mul(b, a));
    alg.sub(&alg.sub(&alg.mul(&ra, b), &alg.mul(b, &ra)), &ba)
}

/// Right pre-Lie product `a ◁θ b = -(b ▷θ a)`.
pub fn prelie_right<A: RotaBaxter>(alg: &A, a: &A::Elem, b: &A::Elem) -> A::Elem {
    alg.neg(&prelie_left(alg, b, a))
}

/// `B(x) = R(x) - R̃(x) = 2R(x) + θx`.
pub fn b_operator<A: RotaBaxter>(alg: &A, x: &A::Elem) -> A::Elem {
    alg.sub(&alg.operator(x), &tilde_operator(alg, x))
}

/// The half-shuffles `(x↑y, x↓y) = (xR(y), R(x)y)`.
pub fn half_shuffles<A: RotaBaxter>(alg: &A, x: &A::Elem, y: &A::Elem) -> (A::Elem, A::Elem) {
    (alg.mul(x, &alg.operator(y)), alg.mul(&alg.operator(x), y))
}

/// `[x, y] = xy - yx`.
pub fn commutator<A: Algebra>(alg: &A, x: &A::Elem, y: &A::Elem) -> A::Elem {
    alg.sub(&alg.mul(x, y), &alg.mul(y, x))
}
