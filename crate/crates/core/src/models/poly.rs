use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Zero};
use rand::Rng;

use super::render_terms;
use crate::algebra::{Algebra, SampleRng, Sampled, UnitalAlgebra};
use crate::arith::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyKind {
    /// `k[x_1, x_2, ...]`; monomials are sorted multisets of letters.
    Commutative,
    /// The free associative algebra; monomials are words.
    NonCommutative,
}

/// Finitely supported map from monomials to rationals. Monomials are
/// letter lists (sorted for commutative polynomials); zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct Poly {
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Rational) -> Self {
        Poly::term(Vec::new(), c)
    }

    pub fn var(letter: u32) -> Self {
        Poly::term(vec![letter], int(1))
    }

    /// `c · m`; the caller supplies the monomial in canonical form.
    pub fn term(monomial: Vec<u32>, c: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(monomial, c);
        p
    }

    pub fn add_term(&mut self, monomial: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: &[u32]) -> Rational {
        self.terms.get(monomial).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }
}

/// Polynomial algebra truncated above total degree `degree_cap`. Terms of
/// degree above the cap form an ideal, so the truncation is a quotient
/// algebra and degree-preserving operators descend to it.
#[derive(Debug, Clone)]
pub struct PolyAlgebra {
    kind: PolyKind,
    degree_cap: usize,
    alphabet: u32,
}

impl PolyAlgebra {
    /// `alphabet` bounds the letters used by the sampler only.
    pub fn new(kind: PolyKind, degree_cap: usize, alphabet: u32) -> Self {
        PolyAlgebra { kind, degree_cap, alphabet: alphabet.max(1) }
    }

    pub fn kind(&self) -> PolyKind {
        self.kind
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    fn combine(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        match self.kind {
            PolyKind::NonCommutative => a.iter().chain(b).copied().collect(),
            PolyKind::Commutative => a.iter().merge(b).copied().collect(),
        }
    }

    /// Canonical monomial from a letter list.
    pub fn monomial(&self, letters: &[u32]) -> Poly {
        let mut m = letters.to_vec();
        if self.kind == PolyKind::Commutative {
            m.sort_unstable();
        }
        Poly::term(m, int(1))
    }
}

impl Algebra for PolyAlgebra {
    type Elem = Poly;

    fn name(&self) -> String {
        match self.kind {
            PolyKind::Commutative => format!("cpoly(deg<={})", self.degree_cap),
            PolyKind::NonCommutative => format!("ncpoly(deg<={})", self.degree_cap),
        }
    }

    fn zero(&self) -> Poly {
        Poly::zero()
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let (big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let mut out = big.clone();
        for (m, c) in small.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn neg(&self, a: &Poly) -> Poly {
        Poly { terms: a.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    fn scale(&self, c: &Rational, a: &Poly) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: a.terms.iter().map(|(m, v)| (m.clone(), c * v)).collect() }
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                if ma.len() + mb.len() > self.degree_cap {
                    continue;
                }
                out.add_term(self.combine(ma, mb), ca * cb);
            }
        }
        out
    }

    fn render(&self, a: &Poly) -> String {
        render_terms(
            a.terms()
                .map(|(m, c)| (m.iter().map(|l| format!("x{l}")).collect::<String>(), c)),
        )
    }

    fn is_commutative(&self) -> bool {
        self.kind == PolyKind::Commutative
    }

    fn contains(&self, a: &Poly) -> bool {
        a.terms().all(|(m, _)| {
            m.len() <= self.degree_cap
                && (self.kind == PolyKind::NonCommutative || m.windows(2).all(|w| w[0] <= w[1]))
        })
    }
}

impl UnitalAlgebra for PolyAlgebra {
    fn one(&self) -> Poly {
        Poly::constant(Rational::one())
    }
}

impl Sampled for PolyAlgebra {
    fn basis(&self) -> Vec<Poly> {
        std::iter::once(self.one())
            .chain((1..=self.alphabet).map(Poly::var))
            .collect()
    }

    fn random_element(&self, rng: &mut SampleRng) -> Poly {
        let mut p = Poly::zero();
        let terms = rng.gen_range(1..=3);
        for _ in 0..terms {
            let degree = rng.gen_range(0..=2.min(self.degree_cap));
            let letters: Vec<u32> = (0..degree).map(|_| rng.gen_range(1..=self.alphabet)).collect();
            let m = self.monomial(&letters).terms.into_keys().next().unwrap_or_default();
            p.add_term(m, crate::algebra::sample_rational(rng));
        }
        p
    }
}
