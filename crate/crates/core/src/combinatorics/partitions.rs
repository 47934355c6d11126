use std::fmt;

use itertools::Itertools;

use super::MAX_DEGREE;
use crate::error::{Error, Result};

/// A set partition of `1..=n`; blocks are sorted internally and ordered by
/// smallest element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            write!(f, "{{{}}}", b.iter().join(","))?;
        }
        Ok(())
    }
}

/// All set partitions of `1..=n`, enumerated by restricted growth strings
/// in lexicographic order.
pub fn set_partitions(n: usize) -> Result<Vec<SetPartition>> {
    if !(1..=MAX_DEGREE).contains(&n) {
        return Err(Error::Config(format!("set partition size {n} outside 1..={MAX_DEGREE}")));
    }
    let mut out = Vec::new();
    let mut growth = vec![0usize; n];
    fn go(i: usize, max: usize, growth: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        let n = growth.len();
        if i == n {
            let mut blocks = vec![Vec::new(); max + 1];
            for (k, &b) in growth.iter().enumerate() {
                blocks[b].push(k + 1);
            }
            out.push(SetPartition { blocks });
            return;
        }
        for b in 0..=max + 1 {
            growth[i] = b;
            go(i + 1, max.max(b), growth, out);
        }
    }
    go(1, 0, &mut growth, &mut out);
    Ok(out)
}

/// Bell numbers by the triangle recurrence.
pub fn bell_number(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for v in &row {
            next.push(next.last().unwrap() + v);
        }
        row = next;
    }
    row[0]
}
