//! The weighted Rota–Baxter contract and everything derived from it.
//!
//! An [`Algebra`] is an associative algebra over the rationals, possibly
//! without unit. A [`RotaBaxter`] algebra is unital and carries a linear
//! operator `R` with a weight `θ` such that
//!
//! ```text
//! R(x) R(y) = R( R(x) y + x R(y) + θ x y ).
//! ```
//!
//! Nothing here assumes the relation holds; the checkers in [`laws`] verify
//! it on a declared sample set.

mod derived;
pub mod laws;
mod ops;
mod sample;
pub mod vector_fields;

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::Rational;

pub use derived::{DoubleProduct, Rescaled, Tilde, Unitization, Unitized};
pub use ops::{
    b_operator, commutator, double_product, half_shuffles, prelie_left, prelie_right,
    tilde_operator,
};
pub use sample::{sample_rational, sparse_rational, SampleMode, SamplePlan, SampleRng};

/// Associative algebra over the rationals. Elements are plain values in
/// canonical form, so `==` is exact equality.
pub trait Algebra: Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn name(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: &Rational, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Deterministic plain-text rendering used in reports.
    fn render(&self, a: &Self::Elem) -> String;

    fn is_commutative(&self) -> bool {
        false
    }

    /// Whether `a` is a well-formed element of this particular carrier
    /// (matching dimension, window length, ...).
    fn contains(&self, _a: &Self::Elem) -> bool {
        true
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// Left-to-right product of a nonempty list.
    fn product<'a, I>(&self, items: I) -> Option<Self::Elem>
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        let mut iter = items.into_iter();
        let first = iter.next()?.clone();
        Some(iter.fold(first, |acc, x| self.mul(&acc, x)))
    }
}

pub trait UnitalAlgebra: Algebra {
    fn one(&self) -> Self::Elem;

    fn from_scalar(&self, c: &Rational) -> Self::Elem {
        self.scale(c, &self.one())
    }

    fn pow(&self, a: &Self::Elem, k: usize) -> Self::Elem {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, a))
    }
}

/// Unital algebra with a Rota–Baxter operator of the given weight.
pub trait RotaBaxter: UnitalAlgebra {
    fn weight(&self) -> Rational;
    fn operator(&self, x: &Self::Elem) -> Self::Elem;

    /// `R^{(n)}(x) = R(R^{(n-1)}(x) x)` with `R^{(1)}(x) = R(x)`; `n = 0`
    /// gives the unit.
    fn iterated(&self, x: &Self::Elem, n: usize) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.operator(&self.mul(&acc, x));
        }
        acc
    }
}

/// Finite generator set and seeded random elements for law checking.
pub trait Sampled: Algebra {
    fn basis(&self) -> Vec<Self::Elem>;
    fn random_element(&self, rng: &mut SampleRng) -> Self::Elem;
}

/// A registered model: a Rota–Baxter algebra that can be sampled.
pub trait Model: RotaBaxter + Sampled {}

impl<T: RotaBaxter + Sampled> Model for T {}

impl<A: Algebra + ?Sized> Algebra for &A {
    type Elem = A::Elem;

    fn name(&self) -> String {
        (**self).name()
    }
    fn zero(&self) -> Self::Elem {
        (**self).zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).add(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (**self).neg(a)
    }
    fn scale(&self, c: &Rational, a: &Self::Elem) -> Self::Elem {
        (**self).scale(c, a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).mul(a, b)
    }
    fn render(&self, a: &Self::Elem) -> String {
        (**self).render(a)
    }
    fn is_commutative(&self) -> bool {
        (**self).is_commutative()
    }
    fn contains(&self, a: &Self::Elem) -> bool {
        (**self).contains(a)
    }
}

impl<A: UnitalAlgebra + ?Sized> UnitalAlgebra for &A {
    fn one(&self) -> Self::Elem {
        (**self).one()
    }
}

impl<A: RotaBaxter + ?Sized> RotaBaxter for &A {
    fn weight(&self) -> Rational {
        (**self).weight()
    }
    fn operator(&self, x: &Self::Elem) -> Self::Elem {
        (**self).operator(x)
    }
}

impl<A: Sampled + ?Sized> Sampled for &A {
    fn basis(&self) -> Vec<Self::Elem> {
        (**self).basis()
    }
    fn random_element(&self, rng: &mut SampleRng) -> Self::Elem {
        (**self).random_element(rng)
    }
}

/// The rationals as a one-dimensional commutative algebra.
#[derive(Debug, Clone, Copy, Default)]
pub struct Scalars;

impl Algebra for Scalars {
    type Elem = Rational;

    fn name(&self) -> String {
        "Q".into()
    }
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn scale(&self, c: &Rational, a: &Rational) -> Rational {
        c * a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn render(&self, a: &Rational) -> String {
        a.to_string()
    }
    fn is_commutative(&self) -> bool {
        true
    }
}

impl UnitalAlgebra for Scalars {
    fn one(&self) -> Rational {
        Rational::one()
    }
}

impl Sampled for Scalars {
    fn basis(&self) -> Vec<Rational> {
        vec![Rational::one()]
    }
    fn random_element(&self, rng: &mut SampleRng) -> Rational {
        sample::sample_rational(rng)
    }
}
