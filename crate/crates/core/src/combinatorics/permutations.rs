use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Largest degree accepted by the enumerators.
pub const MAX_DEGREE: usize = 8;

/// A permutation of `1..=n` in one-line notation: `images[i-1] = σ(i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::Domain(format!("{images:?} is not a permutation of 1..={n}")));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Canonical cycle decomposition: each cycle starts with its largest
    /// entry and cycles are sorted by increasing first entry.
    pub fn canonical_cycles(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in (1..=n).rev() {
            if seen[start] {
                continue;
            }
            // scanning from the top, `start` is the maximum of its cycle
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.apply(start);
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            cycles.push(cycle);
        }
        cycles.sort_by_key(|c| c[0]);
        CycleDecomposition { cycles }
    }

    /// Builds `σ` from cycles `(a_0 a_1 ...)` meaning `a_0 ↦ a_1 ↦ ... ↦ a_0`.
    /// Fixed points may be omitted.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n + 1];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || used[a] {
                    return Err(Error::Domain(format!("invalid cycles {cycles:?} for degree {n}")));
                }
                used[a] = true;
                images[a - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(" "))
    }
}

/// Cycles of a permutation in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn degree(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycles(self.degree(), &self.cycles)
            .expect("canonical cycles always form a permutation")
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            write!(f, "({})", c.iter().join(" "))?;
        }
        Ok(())
    }
}

/// All permutations of `1..=n` in lexicographic order of their one-line
/// notation.
pub fn permutations(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    if !(1..=MAX_DEGREE).contains(&n) {
        return Err(Error::Config(format!("permutation degree {n} outside 1..={MAX_DEGREE}")));
    }
    Ok((1..=n).permutations(n).map(|images| Permutation { images }))
}
