use rand::Rng;

use super::{Poly, PolyAlgebra, PolyKind};
use crate::algebra::{Algebra, RotaBaxter, SampleRng, Sampled, Scalars, UnitalAlgebra};
use crate::arith::{int, Rational};

/// The first `W` values `(s_0, ..., s_{W-1})` of a sequence with values in
/// some algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct Window<E> {
    pub entries: Vec<E>,
}

/// Sequences over a base algebra with pointwise product and the shifted
/// partial-sum operator `R(s)_k = Σ_{i<k} s_i` of weight 1.
///
/// Entry `k` of `R(s)` reads only entries `< k`, so any identity checked on
/// indices `0..W` holds exactly there.
#[derive(Debug, Clone)]
pub struct SequenceAlgebra<C> {
    base: C,
    window: usize,
    label: String,
}

impl<C: Algebra> SequenceAlgebra<C> {
    pub fn new(base: C, window: usize, label: impl Into<String>) -> Self {
        assert!(window >= 1, "window must hold at least one entry");
        SequenceAlgebra { base, window, label: label.into() }
    }

    pub fn base(&self) -> &C {
        &self.base
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn from_fn(&self, f: impl FnMut(usize) -> C::Elem) -> Window<C::Elem> {
        Window { entries: (0..self.window).map(f).collect() }
    }

    /// `c` at entry `k`, zero elsewhere.
    pub fn delta(&self, k: usize, c: C::Elem) -> Window<C::Elem> {
        self.from_fn(|i| if i == k { c.clone() } else { self.base.zero() })
    }

    fn zip(
        &self,
        a: &Window<C::Elem>,
        b: &Window<C::Elem>,
        f: impl Fn(&C::Elem, &C::Elem) -> C::Elem,
    ) -> Window<C::Elem> {
        Window { entries: a.entries.iter().zip(&b.entries).map(|(x, y)| f(x, y)).collect() }
    }
}

impl SequenceAlgebra<PolyAlgebra> {
    /// Rota's standard algebra over `k[x_1, x_2, ...]`.
    pub fn standard_commutative(window: usize, degree_cap: usize, alphabet: u32) -> Self {
        SequenceAlgebra::new(
            PolyAlgebra::new(PolyKind::Commutative, degree_cap, alphabet),
            window,
            "standard-comm",
        )
    }

    /// The noncommutative standard algebra over the free associative algebra.
    pub fn standard_noncommutative(window: usize, degree_cap: usize, alphabet: u32) -> Self {
        SequenceAlgebra::new(
            PolyAlgebra::new(PolyKind::NonCommutative, degree_cap, alphabet),
            window,
            "standard-nc",
        )
    }

    /// The generator `x = (0, x_1, x_2, ..., x_{W-1})`; entry `i` holds `x_i`.
    pub fn generator(&self) -> Window<Poly> {
        self.from_fn(|i| if i == 0 { Poly::zero() } else { Poly::var(i as u32) })
    }
}

impl SequenceAlgebra<Scalars> {
    /// Rational sequences with the summation operator.
    pub fn summation(window: usize) -> Self {
        SequenceAlgebra::new(Scalars, window, "summation")
    }
}

impl<C: Algebra> Algebra for SequenceAlgebra<C> {
    type Elem = Window<C::Elem>;

    fn name(&self) -> String {
        format!("{}(W={})", self.label, self.window)
    }
    fn zero(&self) -> Self::Elem {
        self.from_fn(|_| self.base.zero())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.zip(a, b, |x, y| self.base.add(x, y))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Window { entries: a.entries.iter().map(|x| self.base.neg(x)).collect() }
    }
    fn scale(&self, c: &Rational, a: &Self::Elem) -> Self::Elem {
        Window { entries: a.entries.iter().map(|x| self.base.scale(c, x)).collect() }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.zip(a, b, |x, y| self.base.mul(x, y))
    }
    fn render(&self, a: &Self::Elem) -> String {
        let parts: Vec<String> = a.entries.iter().map(|x| self.base.render(x)).collect();
        format!("({})", parts.join(", "))
    }
    fn is_commutative(&self) -> bool {
        self.base.is_commutative()
    }
    fn contains(&self, a: &Self::Elem) -> bool {
        a.entries.len() == self.window && a.entries.iter().all(|x| self.base.contains(x))
    }
}

impl<C: UnitalAlgebra> UnitalAlgebra for SequenceAlgebra<C> {
    fn one(&self) -> Self::Elem {
        self.from_fn(|_| self.base.one())
    }
}

impl<C: UnitalAlgebra> RotaBaxter for SequenceAlgebra<C> {
    fn weight(&self) -> Rational {
        int(1)
    }
    fn operator(&self, x: &Self::Elem) -> Self::Elem {
        standard_sum_operator(&self.base, x)
    }
}

impl<C: Sampled> Sampled for SequenceAlgebra<C> {
    /// `δ_k · b_{k mod |B|}` for every window index, plus the constant
    /// sequences on the base generators.
    fn basis(&self) -> Vec<Self::Elem> {
        let base = self.base.basis();
        let mut out: Vec<Self::Elem> = (0..self.window)
            .map(|k| self.delta(k, base[k % base.len()].clone()))
            .collect();
        if base.len() > 1 || self.window > 1 {
            out.extend(base.iter().map(|b| self.from_fn(|_| b.clone())));
        }
        out
    }

    fn random_element(&self, rng: &mut SampleRng) -> Self::Elem {
        self.from_fn(|_| {
            if rng.gen_bool(0.6) {
                self.base.random_element(rng)
            } else {
                self.base.zero()
            }
        })
    }
}

/// `R(s)_k = Σ_{i<k} s_i`; entry 0 is zero.
pub fn standard_sum_operator<C: Algebra>(base: &C, s: &Window<C::Elem>) -> Window<C::Elem> {
    let mut acc = base.zero();
    let mut entries = Vec::with_capacity(s.entries.len());
    for x in &s.entries {
        entries.push(acc.clone());
        acc = base.add(&acc, x);
    }
    Window { entries }
}

/// `R(f)(n) = Σ_{k=0}^{n-1} f(k)` on a window of rationals.
pub fn summation_operator(f: &Window<Rational>) -> Window<Rational> {
    standard_sum_operator(&Scalars, f)
}

/// `Δ(f)(n) = f(n+1) - f(n)`, defined on the first `W-1` entries.
pub fn finite_difference(f: &Window<Rational>) -> Vec<Rational> {
    f.entries.windows(2).map(|w| &w[1] - &w[0]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laws::check_rb_law;
    use crate::algebra::SamplePlan;

    #[test]
    fn summation_examples() {
        let alg = SequenceAlgebra::summation(6);
        let f = alg.from_fn(|k| int(k as i64));
        let rf = summation_operator(&f);
        assert_eq!(rf.entries[3], int(3));
        assert_eq!(rf.entries[0], int(0));
        assert_eq!(summation_operator(&alg.zero()), alg.zero());
        let diff = finite_difference(&rf);
        assert_eq!(diff, f.entries[..5].to_vec());
    }

    #[test]
    fn generator_partial_sums() {
        let alg = SequenceAlgebra::standard_commutative(6, 6, 2);
        let x = alg.generator();
        let rx = alg.operator(&x);
        let expected = alg.base().add(&Poly::var(1), &alg.base().add(&Poly::var(2), &Poly::var(3)));
        assert_eq!(rx.entries[4], expected);
        assert_eq!(alg.operator(&alg.zero()), alg.zero());
    }

    #[test]
    fn second_iterate_is_e2() {
        let alg = SequenceAlgebra::standard_commutative(6, 6, 2);
        let x = alg.generator();
        let r2 = alg.iterated(&x, 2);
        assert_eq!(alg.base().render(&r2.entries[4]), "x1x2 + x1x3 + x2x3");
    }

    #[test]
    fn rb_law_exhaustive_on_window_basis() {
        assert!(check_rb_law(&SequenceAlgebra::summation(10), &SamplePlan::exhaustive()).passed());
        let nc = SequenceAlgebra::standard_noncommutative(6, 4, 2);
        assert!(check_rb_law(&nc, &SamplePlan::exhaustive()).passed());
        assert!(check_rb_law(&nc, &SamplePlan::random(50, 7)).passed());
    }
}
