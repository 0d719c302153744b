//! The semigroup tree: the children of H are `H \ {x}` for the minimal
//! generators `x > F(H)`. Every numerical semigroup appears exactly once, at
//! depth equal to its genus.

use super::NumericalSemigroup;
use crate::error::{Error, Result};

/// Default bound on the genus accepted by [`enumerate_by_genus`].
pub const DEFAULT_GENUS_CAP: usize = 20;
/// Nodes are stored as 128-bit gap masks; every generator of a semigroup of
/// genus `g` is below `4g`, so 31 is the largest genus that fits.
pub const MAX_GENUS_CAP: usize = 31;

#[derive(Clone, Copy)]
struct Node {
    gaps: u128,
    frobenius: i64,
    genus: usize,
}

impl Node {
    #[inline]
    fn contains(&self, x: i64) -> bool {
        x >= 0 && (x >= 128 || self.gaps >> x & 1 == 0)
    }

    fn multiplicity(&self) -> i64 {
        (1..).find(|&x| self.contains(x)).unwrap()
    }

    /// Minimal generators, ascending. None exceeds `F + e`.
    fn generators(&self) -> Vec<i64> {
        let e = self.multiplicity();
        (e..=(self.frobenius + e).max(e))
            .filter(|&x| {
                self.contains(x) && !(e..=x / 2).any(|y| self.contains(y) && self.contains(x - y))
            })
            .collect()
    }
}

/// Depth-first, pre-order walk over the tree, children visited in increasing
/// order of the removed generator.
pub struct GenusTree {
    max_genus: usize,
    stack: Vec<Node>,
}

impl Iterator for GenusTree {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        let node = self.stack.pop()?;
        let gens = node.generators();
        if node.genus < self.max_genus {
            for &x in gens.iter().rev().filter(|&&x| x > node.frobenius) {
                self.stack.push(Node {
                    gaps: node.gaps | 1u128 << x,
                    frobenius: x,
                    genus: node.genus + 1,
                });
            }
        }
        let gens: Vec<u64> = gens.into_iter().map(|g| g as u64).collect();
        Some(NumericalSemigroup::new(&gens).expect("tree nodes are numerical semigroups"))
    }
}

/// Every numerical semigroup of genus at most `max_genus`, each exactly once,
/// in a fixed order.
pub fn enumerate_by_genus(max_genus: usize, cap: usize) -> Result<GenusTree> {
    let cap = cap.min(MAX_GENUS_CAP);
    if max_genus > cap {
        return Err(Error::GenusCapExceeded {
            requested: max_genus,
            cap,
        });
    }
    Ok(GenusTree {
        max_genus,
        stack: vec![Node {
            gaps: 0,
            frobenius: -1,
            genus: 0,
        }],
    })
}

/// `counts[g]` is the number of semigroups of genus `g`.
pub fn count_by_genus(max_genus: usize, cap: usize) -> Result<Vec<usize>> {
    let mut counts = vec![0; max_genus + 1];
    for s in enumerate_by_genus(max_genus, cap)? {
        counts[s.genus()] += 1;
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_zero_is_the_naturals() {
        let all: Vec<_> = enumerate_by_genus(0, DEFAULT_GENUS_CAP).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].generators(), &[1]);
    }

    #[test]
    fn genus_two_in_tree_order() {
        let all: Vec<Vec<i64>> = enumerate_by_genus(2, DEFAULT_GENUS_CAP)
            .unwrap()
            .map(|s| s.generators().to_vec())
            .collect();
        assert_eq!(all, vec![vec![1], vec![2, 3], vec![3, 4, 5], vec![2, 5]]);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate_by_genus(21, DEFAULT_GENUS_CAP).err(),
            Some(Error::GenusCapExceeded {
                requested: 21,
                cap: 20
            })
        );
        assert!(enumerate_by_genus(32, 100).is_err());
    }
}
