//! Numerical semigroups: construction, Apéry sets, gaps and pseudo-Frobenius
//! numbers.
//!
//! A [`NumericalSemigroup`] is immutable once built. Membership is answered
//! from a bit window over `[0, c]` where `c` is the conductor; everything at or
//! above `c` belongs to the semigroup.

mod tree;

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use crate::bits::Bits;
use crate::error::{Error, Result};

pub use tree::{count_by_genus, enumerate_by_genus, GenusTree, DEFAULT_GENUS_CAP, MAX_GENUS_CAP};

/// Largest accepted generator.
pub const MAX_GENERATOR: u64 = 1 << 24;
/// Largest accepted Frobenius number; bounds the size of every window.
pub const MAX_FROBENIUS: i64 = 1 << 24;

#[derive(Clone)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    frobenius: i64,
    /// `apery[r]` is the least element of H congruent to `r` modulo the
    /// multiplicity.
    apery: Vec<i64>,
    gaps: Vec<i64>,
    pseudo_frobenius: Vec<i64>,
    membership: Bits,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`. Redundant generators are
    /// dropped, so any generating list is accepted.
    pub fn new(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::NonPositiveGenerator);
        }
        if let Some(&big) = gens.iter().find(|&&g| g > MAX_GENERATOR) {
            return Err(Error::GeneratorTooLarge {
                value: big,
                max: MAX_GENERATOR,
            });
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }

        let mut sorted: Vec<i64> = gens.iter().map(|&g| g as i64).collect();
        sorted.sort_unstable();
        sorted.dedup();
        let e = sorted[0];
        let apery = apery_by_shortest_path(e, &sorted[1..]);
        let frobenius = apery.iter().copied().max().unwrap_or(0) - e;
        if frobenius > MAX_FROBENIUS {
            return Err(Error::FrobeniusTooLarge {
                value: frobenius,
                max: MAX_FROBENIUS,
            });
        }

        let conductor = frobenius + 1;
        let membership = Bits::from_fn(conductor as usize + 1, |x| {
            let x = x as i64;
            x >= apery[(x % e) as usize]
        });
        let contains = |x: i64| x >= 0 && (x > frobenius || membership.get(x as usize));

        // An Apéry element w is a minimal generator iff it is not w' + h for
        // another nonzero Apéry element w' and h ∈ H.
        let mut generators = vec![e];
        for &w in apery.iter().filter(|&&w| w != 0) {
            let decomposable = apery
                .iter()
                .any(|&w2| w2 != 0 && w2 != w && w2 < w && contains(w - w2));
            if !decomposable {
                generators.push(w);
            }
        }
        generators.sort_unstable();

        let gaps: Vec<i64> = (1..conductor).filter(|&x| !contains(x)).collect();
        let pseudo_frobenius = if e == 1 {
            vec![-1]
        } else {
            gaps.iter()
                .copied()
                .filter(|&x| generators.iter().all(|&g| contains(x + g)))
                .collect()
        };

        Ok(NumericalSemigroup {
            generators,
            frobenius,
            apery,
            gaps,
            pseudo_frobenius,
            membership,
        })
    }

    /// The semigroup `<1>`, i.e. all nonnegative integers.
    pub fn trivial() -> Self {
        Self::new(&[1]).expect("<1> is a valid semigroup")
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn generators_u64(&self) -> Vec<u64> {
        self.generators.iter().map(|&g| g as u64).collect()
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    /// Largest integer not in H, or `-1` for `<1>`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// `PF(H) = {x ∈ ℤ \ H : x + (H \ {0}) ⊆ H}`. For `<1>` this is `{-1}`.
    pub fn pseudo_frobenius(&self) -> &[i64] {
        &self.pseudo_frobenius
    }

    /// Cohen-Macaulay type of `k[[H]]`.
    pub fn type_number(&self) -> usize {
        self.pseudo_frobenius.len()
    }

    /// Apéry set with respect to the multiplicity, sorted ascending.
    pub fn apery_set(&self) -> Vec<i64> {
        let mut out = self.apery.clone();
        out.sort_unstable();
        out
    }

    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && (x > self.frobenius || self.membership.get(x as usize))
    }

    pub fn is_trivial(&self) -> bool {
        self.generators[0] == 1
    }

    pub fn is_symmetric(&self) -> bool {
        self.type_number() == 1
    }

    /// `2·genus = F + type`.
    pub fn is_almost_symmetric(&self) -> bool {
        2 * self.genus() as i64 == self.frobenius + self.type_number() as i64
    }

    pub(crate) fn membership_bits(&self) -> &Bits {
        &self.membership
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Dijkstra over residues modulo `e`: the distance to residue `r` is the least
/// element of H in that class.
fn apery_by_shortest_path(e: i64, others: &[i64]) -> Vec<i64> {
    let e_us = e as usize;
    let mut dist = vec![i64::MAX; e_us];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in others {
            let nd = d.checked_add(g).expect("generator sums stay below 2^48");
            let nr = (r + (g % e) as usize) % e_us;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    #[test]
    fn basic_invariants() {
        let s = sg(&[3, 4, 5]);
        assert_eq!(s.generators(), &[3, 4, 5]);
        assert_eq!(s.frobenius(), 2);
        assert_eq!(s.gaps(), &[1, 2]);
        assert_eq!(s.genus(), 2);
        assert_eq!(s.pseudo_frobenius(), &[1, 2]);

        let s = sg(&[2, 3]);
        assert_eq!(s.frobenius(), 1);
        assert_eq!(s.gaps(), &[1]);
        assert_eq!(s.pseudo_frobenius(), &[1]);
        assert!(s.is_symmetric());
    }

    #[test]
    fn four_seven_thirteen_fourteen() {
        let s = sg(&[4, 7, 13, 14]);
        assert_eq!(s.conductor(), 11);
        assert_eq!(s.gaps(), &[1, 2, 3, 5, 6, 9, 10]);
        assert_eq!(s.pseudo_frobenius(), &[9, 10]);
        assert_eq!(s.type_number(), 2);
        assert_eq!(s.apery_set(), vec![0, 7, 13, 14]);
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let s = sg(&[6, 4, 5, 8, 9, 10, 4]);
        assert_eq!(s.generators(), &[4, 5, 6]);
        assert_eq!(sg(&[5, 6, 9, 12, 13]).generators(), &[5, 6, 9, 13]);
    }

    #[test]
    fn trivial_semigroup() {
        let s = NumericalSemigroup::trivial();
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.conductor(), 0);
        assert_eq!(s.genus(), 0);
        assert_eq!(s.pseudo_frobenius(), &[-1]);
        assert!(s.contains(0) && s.contains(1));
        assert!(!s.contains(-1));
        assert!(s.is_almost_symmetric());
        assert_eq!(sg(&[1, 7]).generators(), &[1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(NumericalSemigroup::new(&[]), Err(Error::EmptyGenerators));
        assert_eq!(NumericalSemigroup::new(&[4, 6]), Err(Error::GcdNotOne(2)));
        assert_eq!(
            NumericalSemigroup::new(&[0, 3]),
            Err(Error::NonPositiveGenerator)
        );
        assert!(matches!(
            NumericalSemigroup::new(&[3, MAX_GENERATOR + 1]),
            Err(Error::GeneratorTooLarge { .. })
        ));
    }

    #[test]
    fn large_multiplicity_family_is_fast() {
        // e-family at e = 60: <60, 63..=119, 181, 182>
        let mut gens: Vec<u64> = vec![60];
        gens.extend(63..=119);
        gens.extend([181, 182]);
        let s = sg(&gens);
        assert_eq!(s.conductor(), 2 * 60 + 3);
    }
}
