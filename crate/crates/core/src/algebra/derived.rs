use num_traits::{One, Zero};

use super::{ops, Algebra, RotaBaxter, SampleRng, Sampled, UnitalAlgebra};
use crate::arith::Rational;

macro_rules! delegate_carrier {
    ($wrapper:ident) => {
        impl<A: Algebra> Algebra for $wrapper<A> {
            type Elem = A::Elem;

            fn name(&self) -> String {
                self.label()
            }
            fn zero(&self) -> Self::Elem {
                self.inner.zero()
            }
            fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
                self.inner.add(a, b)
            }
            fn neg(&self, a: &Self::Elem) -> Self::Elem {
                self.inner.neg(a)
            }
            fn scale(&self, c: &Rational, a: &Self::Elem) -> Self::Elem {
                self.inner.scale(c, a)
            }
            fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
                self.inner.mul(a, b)
            }
            fn render(&self, a: &Self::Elem) -> String {
                self.inner.render(a)
            }
            fn is_commutative(&self) -> bool {
                self.inner.is_commutative()
            }
            fn contains(&self, a: &Self::Elem) -> bool {
                self.inner.contains(a)
            }
        }

        impl<A: UnitalAlgebra> UnitalAlgebra for $wrapper<A> {
            fn one(&self) -> Self::Elem {
                self.inner.one()
            }
        }

        impl<A: Sampled> Sampled for $wrapper<A> {
            fn basis(&self) -> Vec<Self::Elem> {
                self.inner.basis()
            }
            fn random_element(&self, rng: &mut SampleRng) -> Self::Elem {
                self.inner.random_element(rng)
            }
        }
    };
}

/// The complementary operator `R̃ = -θ id - R` on the same carrier.
#[derive(Debug, Clone)]
pub struct Tilde<A> {
    inner: A,
}

impl<A> Tilde<A> {
    pub fn new(inner: A) -> Self {
        Tilde { inner }
    }

    pub fn inner(&self) -> &A {
        &self.inner
    }
}

impl<A: Algebra> Tilde<A> {
    fn label(&self) -> String {
        format!("tilde({})", self.inner.name())
    }
}

delegate_carrier!(Tilde);

impl<A: RotaBaxter> RotaBaxter for Tilde<A> {
    fn weight(&self) -> Rational {
        self.inner.weight()
    }
    fn operator(&self, x: &Self::Elem) -> Self::Elem {
        ops::tilde_operator(&self.inner, x)
    }
}

/// `βR`, a Rota–Baxter operator of weight `βθ`.
#[derive(Debug, Clone)]
pub struct Rescaled<A> {
    inner: A,
    beta: Rational,
}

impl<A> Rescaled<A> {
    pub fn new(inner: A, beta: Rational) -> Self {
        Rescaled { inner, beta }
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn inner(&self) -> &A {
        &self.inner
    }
}

impl<A: Algebra> Rescaled<A> {
    fn label(&self) -> String {
        if self.beta.is_one() {
            self.inner.name()
        } else {
            format!("{}*({})", self.beta, self.inner.name())
        }
    }
}

delegate_carrier!(Rescaled);

impl<A: RotaBaxter> RotaBaxter for Rescaled<A> {
    fn weight(&self) -> Rational {
        &self.beta * self.inner.weight()
    }
    fn operator(&self, x: &Self::Elem) -> Self::Elem {
        self.inner.scale(&self.beta, &self.inner.operator(x))
    }
}

/// The carrier of a Rota–Baxter algebra equipped with the double product
/// `x ∗θ y = R(x)y + xR(y) + θxy`. In general it has no unit.
#[derive(Debug, Clone)]
pub struct DoubleProduct<A> {
    inner: A,
}

impl<A> DoubleProduct<A> {
    pub fn new(inner: A) -> Self {
        DoubleProduct { inner }
    }
}

impl<A: RotaBaxter> Algebra for DoubleProduct<A> {
    type Elem = A::Elem;

    fn name(&self) -> String {
        format!("double({})", self.inner.name())
    }
    fn zero(&self) -> Self::Elem {
        self.inner.zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.inner.add(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.inner.neg(a)
    }
    fn scale(&self, c: &Rational, a: &Self::Elem) -> Self::Elem {
        self.inner.scale(c, a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        ops::double_product(&self.inner, a, b)
    }
    fn render(&self, a: &Self::Elem) -> String {
        self.inner.render(a)
    }
    fn is_commutative(&self) -> bool {
        self.inner.is_commutative()
    }
    fn contains(&self, a: &Self::Elem) -> bool {
        self.inner.contains(a)
    }
}

/// Element `c·1 + a` of a unitization.
#[derive(Debug, Clone, PartialEq)]
pub struct Unitized<E> {
    pub scalar: Rational,
    pub elem: E,
}

/// Adjoins a unit to an algebra: `(s, a)(t, b) = (st, sb + ta + ab)`.
#[derive(Debug, Clone)]
pub struct Unitization<B> {
    inner: B,
}

impl<B: Algebra> Unitization<B> {
    pub fn new(inner: B) -> Self {
        Unitization { inner }
    }

    pub fn inner(&self) -> &B {
        &self.inner
    }

    pub fn embed(&self, a: &B::Elem) -> Unitized<B::Elem> {
        Unitized { scalar: Rational::zero(), elem: a.clone() }
    }
}

impl<B: Algebra> Algebra for Unitization<B> {
    type Elem = Unitized<B::Elem>;

    fn name(&self) -> String {
        format!("unitization({})", self.inner.name())
    }
    fn zero(&self) -> Self::Elem {
        Unitized { scalar: Rational::zero(), elem: self.inner.zero() }
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Unitized { scalar: &a.scalar + &b.scalar, elem: self.inner.add(&a.elem, &b.elem) }
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Unitized { scalar: -&a.scalar, elem: self.inner.neg(&a.elem) }
    }
    fn scale(&self, c: &Rational, a: &Self::Elem) -> Self::Elem {
        Unitized { scalar: c * &a.scalar, elem: self.inner.scale(c, &a.elem) }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let ab = self.inner.mul(&a.elem, &b.elem);
        let sb = self.inner.scale(&a.scalar, &b.elem);
        let ta = self.inner.scale(&b.scalar, &a.elem);
        Unitized {
            scalar: &a.scalar * &b.scalar,
            elem: self.inner.add(&self.inner.add(&sb, &ta), &ab),
        }
    }
    fn render(&self, a: &Self::Elem) -> String {
        format!("{} + {}", a.scalar, self.inner.render(&a.elem))
    }
    fn is_commutative(&self) -> bool {
        self.inner.is_commutative()
    }
    fn contains(&self, a: &Self::Elem) -> bool {
        self.inner.contains(&a.elem)
    }
}

impl<B: Algebra> UnitalAlgebra for Unitization<B> {
    fn one(&self) -> Self::Elem {
        Unitized { scalar: Rational::one(), elem: self.inner.zero() }
    }
}
