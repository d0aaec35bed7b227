//! Quotient structures: a block id per element plus the block member lists.

use crate::error::{Error, Result};
use crate::relation::Rel;

/// A partition of `{0..n-1}`. Block ids are ordered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Canonicalizes arbitrary labels: elements with equal labels share a
    /// block, and block ids follow first occurrence.
    pub fn from_labels<L: PartialEq>(labels: &[L]) -> Self {
        let mut class_of: Vec<usize> = Vec::with_capacity(labels.len());
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, label) in labels.iter().enumerate() {
            match (0..i).find(|&j| labels[j] == *label) {
                Some(j) => {
                    let id = class_of[j];
                    class_of.push(id);
                    blocks[id].push(i);
                }
                None => {
                    class_of.push(blocks.len());
                    blocks.push(vec![i]);
                }
            }
        }
        Partition { class_of, blocks }
    }

    /// Classes of an equivalence relation.
    pub fn from_equivalence(sim: &Rel) -> Result<Self> {
        if !sim.is_equivalence() {
            return Err(Error::NotEquivalence);
        }
        let n = sim.n();
        let mut class_of = vec![usize::MAX; n];
        let mut blocks = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let block: Vec<usize> = (a..n).filter(|&b| sim.get(a, b)).collect();
            for &b in &block {
                class_of[b] = id;
            }
            blocks.push(block);
        }
        Ok(Partition { class_of, blocks })
    }

    pub fn n(&self) -> usize {
        self.class_of.len()
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn class_map(&self) -> &[usize] {
        &self.class_of
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Smallest member of each block, in block order.
    pub fn representatives(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }

    pub fn to_equivalence(&self) -> Rel {
        Rel::from_fn(self.n(), |a, b| self.class_of[a] == self.class_of[b])
    }
}
