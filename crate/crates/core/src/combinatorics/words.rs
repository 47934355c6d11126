use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::Rational;

/// A word over positive-integer letters; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(a: u32) -> Self {
        Word(vec![a])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    fn prepend(&self, a: u32) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + 1);
        letters.push(a);
        letters.extend_from_slice(&self.0);
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for a in &self.0 {
            write!(f, "x{a}")?;
        }
        Ok(())
    }
}

/// Finite formal sum of words with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WordSum {
    terms: BTreeMap<Word, Rational>,
}

impl WordSum {
    pub fn zero() -> Self {
        WordSum::default()
    }

    pub fn word(w: Word) -> Self {
        let mut s = WordSum::zero();
        s.add_term(w, Rational::one());
        s
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut s = WordSum::zero();
        for (w, c) in terms {
            s.add_term(w, c);
        }
        s
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &WordSum) -> WordSum {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> WordSum {
        WordSum::from_terms(self.terms.iter().map(|(w, v)| (w.clone(), c * v)))
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Bilinear extension of a product on words.
    pub fn product(&self, other: &WordSum, f: impl Fn(&Word, &Word) -> WordSum) -> WordSum {
        let mut out = WordSum::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let ab = a * b;
                for (w, c) in f(u, v).terms {
                    out.add_term(w, &ab * c);
                }
            }
        }
        out
    }
}

impl fmt::Display for WordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = crate::models::render_terms(self.terms.iter().map(|(w, c)| {
            let m = if w.is_empty() { String::new() } else { w.to_string() };
            (m, c)
        }));
        f.write_str(&rendered)
    }
}

/// Letters valued in the commutative monoid of positive integers under
/// addition; `size` bounds the letters used when enumerating.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonoidAlphabet {
    pub size: u32,
}

impl MonoidAlphabet {
    pub fn new(size: u32) -> Self {
        MonoidAlphabet { size }
    }

    pub fn merge(&self, a: u32, b: u32) -> u32 {
        a + b
    }

    pub fn letters(&self) -> impl Iterator<Item = u32> {
        1..=self.size
    }

    /// All words of length at most `max_len` over the alphabet.
    pub fn words(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            layer = layer
                .iter()
                .flat_map(|w| self.letters().map(move |a| w.concat(&Word::letter(a))))
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }
}

/// All interleavings of `u` and `v`, with multiplicity, in lexicographic
/// order of the choice sequence (left letters first).
pub fn shuffle(u: &Word, v: &Word) -> Vec<Word> {
    if u.is_empty() {
        return vec![v.clone()];
    }
    if v.is_empty() {
        return vec![u.clone()];
    }
    let (a, u1) = (u.0[0], Word(u.0[1..].to_vec()));
    let (b, v1) = (v.0[0], Word(v.0[1..].to_vec()));
    let mut out: Vec<Word> = shuffle(&u1, v).into_iter().map(|w| w.prepend(a)).collect();
    out.extend(shuffle(u, &v1).into_iter().map(|w| w.prepend(b)));
    out
}

/// The shuffle product as a formal sum.
pub fn shuffle_sum(u: &Word, v: &Word) -> WordSum {
    WordSum::from_terms(shuffle(u, v).into_iter().map(|w| (w, Rational::one())))
}

/// Whether `w` is one of the interleavings of `u` and `v`.
pub fn is_shuffle_of(w: &Word, u: &Word, v: &Word) -> bool {
    fn go(w: &[u32], u: &[u32], v: &[u32]) -> bool {
        match w.split_first() {
            None => u.is_empty() && v.is_empty(),
            Some((c, rest)) => {
                (u.first() == Some(c) && go(rest, &u[1..], v))
                    || (v.first() == Some(c) && go(rest, u, &v[1..]))
            }
        }
    }
    w.len() == u.len() + v.len() && go(&w.0, &u.0, &v.0)
}

/// Hoffman's recursion with the merge term weighted by `theta`:
/// `au ⧢ bv = a(u ⧢ bv) + b(au ⧢ v) + θ [a+b](u ⧢ v)`.
pub fn weighted_quasi_shuffle(
    u: &Word,
    v: &Word,
    theta: &Rational,
    merge: &impl Fn(u32, u32) -> u32,
) -> WordSum {
    weighted_quasi_shuffle_capped(u, v, theta, merge, usize::MAX)
}

/// As [`weighted_quasi_shuffle`] but dropping words longer than `cap`.
pub(crate) fn weighted_quasi_shuffle_capped(
    u: &Word,
    v: &Word,
    theta: &Rational,
    merge: &impl Fn(u32, u32) -> u32,
    cap: usize,
) -> WordSum {
    fn go(
        u: &[u32],
        v: &[u32],
        theta: &Rational,
        merge: &impl Fn(u32, u32) -> u32,
        cap: usize,
        prefix: &mut Vec<u32>,
        coeff: Rational,
        out: &mut WordSum,
    ) {
        if prefix.len() + u.len().max(v.len()) > cap {
            return;
        }
        if u.is_empty() || v.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(if u.is_empty() { v } else { u });
            out.add_term(Word(w), coeff);
            return;
        }
        prefix.push(u[0]);
        go(&u[1..], v, theta, merge, cap, prefix, coeff.clone(), out);
        prefix.pop();
        prefix.push(v[0]);
        go(u, &v[1..], theta, merge, cap, prefix, coeff.clone(), out);
        prefix.pop();
        if !theta.is_zero() {
            prefix.push(merge(u[0], v[0]));
            go(&u[1..], &v[1..], theta, merge, cap, prefix, coeff * theta, out);
            prefix.pop();
        }
    }
    let mut out = WordSum::zero();
    go(&u.0, &v.0, theta, merge, cap, &mut Vec::new(), Rational::one(), &mut out);
    out
}

/// The quasi-shuffle over a monoid alphabet (merge weight 1).
pub fn quasi_shuffle(u: &Word, v: &Word, alpha: &MonoidAlphabet) -> WordSum {
    weighted_quasi_shuffle(u, v, &Rational::one(), &|a, b| alpha.merge(a, b))
}

/// Bilinear quasi-shuffle of formal sums.
pub fn quasi_shuffle_sum(a: &WordSum, b: &WordSum, alpha: &MonoidAlphabet) -> WordSum {
    a.product(b, |u, v| quasi_shuffle(u, v, alpha))
}
