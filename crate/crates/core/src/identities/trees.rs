//! The free pre-Lie algebra on one generator: rooted trees with the
//! grafting product. Used as the symbolic model for pre-Lie expansions.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::PreLie;
use crate::arith::Rational;

/// Unlabelled rooted tree, children kept sorted so equal trees compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootedTree {
    children: Vec<RootedTree>,
}

impl RootedTree {
    /// The single-vertex tree.
    pub fn leaf() -> Self {
        RootedTree { children: Vec::new() }
    }

    pub fn with_children(mut children: Vec<RootedTree>) -> Self {
        children.sort();
        RootedTree { children }
    }

    pub fn vertices(&self) -> usize {
        1 + self.children.iter().map(RootedTree::vertices).sum::<usize>()
    }

    /// All trees obtained by attaching `a` to one vertex of `self`, with
    /// multiplicity.
    pub fn graft(&self, a: &RootedTree) -> Vec<RootedTree> {
        let mut at_root = self.children.clone();
        at_root.push(a.clone());
        let mut out = vec![RootedTree::with_children(at_root)];
        for (i, c) in self.children.iter().enumerate() {
            for g in c.graft(a) {
                let mut children = self.children.clone();
                children[i] = g;
                out.push(RootedTree::with_children(children));
            }
        }
        out
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("o")?;
        if !self.children.is_empty() {
            f.write_str("[")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

/// Finite linear combination of rooted trees.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TreeSum {
    terms: BTreeMap<RootedTree, Rational>,
}

impl TreeSum {
    pub fn tree(t: RootedTree) -> Self {
        let mut s = TreeSum::default();
        s.add_term(t, Rational::one());
        s
    }

    pub fn add_term(&mut self, t: RootedTree, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(t.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn coefficient(&self, t: &RootedTree) -> Rational {
        self.terms.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Grafting `a ▷ b = Σ_v (a attached at vertex v of b)`, a left pre-Lie
/// product.
#[derive(Debug, Clone, Copy, Default)]
pub struct FreePreLie;

impl FreePreLie {
    pub fn generator(&self) -> TreeSum {
        TreeSum::tree(RootedTree::leaf())
    }
}

impl PreLie for FreePreLie {
    type Elem = TreeSum;

    fn zero(&self) -> TreeSum {
        TreeSum::default()
    }
    fn add(&self, a: &TreeSum, b: &TreeSum) -> TreeSum {
        let mut out = a.clone();
        for (t, c) in &b.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }
    fn scale(&self, c: &Rational, a: &TreeSum) -> TreeSum {
        let mut out = TreeSum::default();
        for (t, v) in &a.terms {
            out.add_term(t.clone(), c * v);
        }
        out
    }
    fn prelie(&self, a: &TreeSum, b: &TreeSum) -> TreeSum {
        let mut out = TreeSum::default();
        for (ta, ca) in &a.terms {
            for (tb, cb) in &b.terms {
                let c = ca * cb;
                for g in tb.graft(ta) {
                    out.add_term(g, c.clone());
                }
            }
        }
        out
    }
    fn render(&self, a: &TreeSum) -> String {
        crate::models::render_terms(a.terms.iter().map(|(t, c)| (t.to_string(), c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn grafting_small_trees() {
        let p = FreePreLie;
        let x = p.generator();
        let xx = p.prelie(&x, &x);
        assert_eq!(p.render(&xx), "o[o]");
        // x ▷ (x ▷ x): attach at root or at the child
        assert_eq!(p.render(&p.prelie(&x, &xx)), "o[o,o] + o[o[o]]");
        assert_eq!(p.render(&p.prelie(&xx, &x)), "o[o[o]]");
    }

    #[test]
    fn pre_lie_law_on_small_trees() {
        let p = FreePreLie;
        let x = p.generator();
        let xx = p.prelie(&x, &x);
        let xxx = p.prelie(&x, &xx);
        let elems = [x.clone(), xx.clone(), xxx, p.add(&x, &p.scale(&int(2), &xx))];
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    let assoc = |u: &TreeSum, v: &TreeSum| {
                        let l = p.prelie(&p.prelie(u, v), c);
                        let r = p.prelie(u, &p.prelie(v, c));
                        p.add(&l, &p.scale(&int(-1), &r))
                    };
                    assert_eq!(assoc(a, b), assoc(b, a));
                }
            }
        }
    }

    #[test]
    fn vertex_counts_add() {
        let p = FreePreLie;
        let x = p.generator();
        let t = p.prelie(&p.prelie(&x, &x), &p.prelie(&x, &x));
        assert!(t.terms.keys().all(|k| k.vertices() == 4));
        assert_eq!(t.len(), 2);
    }
}
