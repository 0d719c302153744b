//! Relative ideals of a numerical semigroup: the value sets of monomial
//! fractional ideals of `k[[H]]`.
//!
//! A relative ideal `E` is a set of integers, bounded below, with
//! `E + H ⊆ E`. Writing `m = min(E)` and `F` for the Frobenius number of H,
//! every integer above `m + F` lies in `E` (because `m + H ⊆ E`), so `E` is
//! determined by `m` and the `F + 1` bits describing `E ∩ [m, m + F]`. All
//! constructors produce this canonical form, so set equality is equality of
//! `(offset, window)` and isomorphism of monomial ideals is equality of
//! windows.
//!
//! Products only need the windows: an element `m1 + m2 + k` with `k ≤ F` of
//! `E1 + E2` is a sum `(m1 + i) + (m2 + j)` with `i, j ≤ k`. For the colon
//! `E1 : E2 = {x : x + E2 ⊆ E1}` the solutions lie in
//! `[m1 - m2, ∞)`, and everything from `m1 - m2 + F + 1` on is a solution
//! (it translates `E2` above `m1 + F`), so scanning `F + 1` candidates is
//! exhaustive.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone)]
pub struct RelativeIdeal<'s> {
    semigroup: &'s NumericalSemigroup,
    offset: i64,
    window: Bits,
}

/// Target for [`RelativeIdeal::embed_integral`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    /// Translate into `H`.
    InsideRing,
    /// Translate into `M + M`, the value set of `m²`.
    InsideMaximalSquared,
}

impl<'s> RelativeIdeal<'s> {
    fn window_len(s: &NumericalSemigroup) -> usize {
        (s.frobenius() + 1) as usize
    }

    /// Builds the ideal whose members are given by `member`, knowing that no
    /// integer below `lo` is a member and that `lo + F + 1` is.
    fn from_membership(s: &'s NumericalSemigroup, lo: i64, member: impl Fn(i64) -> bool) -> Self {
        let f = s.frobenius();
        let offset = (lo..=lo + f).find(|&x| member(x)).unwrap_or(lo + f + 1);
        let window = Bits::from_fn(Self::window_len(s), |d| member(offset + d as i64));
        RelativeIdeal {
            semigroup: s,
            offset,
            window,
        }
    }

    /// `⋃ (g + H)` over `gens`.
    pub fn from_generators(s: &'s NumericalSemigroup, gens: &[i64]) -> Result<Self> {
        let &m = gens.iter().min().ok_or(Error::EmptyGenerators)?;
        Ok(Self::from_membership(s, m, |x| {
            gens.iter().any(|&g| s.contains(x - g))
        }))
    }

    /// `z + H`.
    pub fn principal(s: &'s NumericalSemigroup, z: i64) -> Self {
        RelativeIdeal {
            semigroup: s,
            offset: z,
            window: s.membership_bits().clone_prefix(Self::window_len(s)),
        }
    }

    /// The semigroup itself, the value set of `R`.
    pub fn ring(s: &'s NumericalSemigroup) -> Self {
        Self::principal(s, 0)
    }

    /// `M = H \ {0}`, the value set of the maximal ideal.
    pub fn maximal(s: &'s NumericalSemigroup) -> Self {
        Self::from_generators(s, s.generators()).expect("generators are nonempty")
    }

    /// All integers `≥ z`: the value set of `t^z V`.
    pub fn everything_from(s: &'s NumericalSemigroup, z: i64) -> Self {
        RelativeIdeal {
            semigroup: s,
            offset: z,
            window: Bits::from_fn(Self::window_len(s), |_| true),
        }
    }

    /// `K = {x : F - x ∉ H}`, normalized so that `min(K) = 0`.
    pub fn canonical(s: &'s NumericalSemigroup) -> Self {
        let f = s.frobenius();
        RelativeIdeal {
            semigroup: s,
            offset: 0,
            window: Bits::from_fn(Self::window_len(s), |d| !s.contains(f - d as i64)),
        }
    }

    pub fn semigroup(&self) -> &'s NumericalSemigroup {
        self.semigroup
    }

    /// `min(E)`.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        let d = x - self.offset;
        d >= 0 && (d > self.semigroup.frobenius() || self.window.get(d as usize))
    }

    /// Smallest integer from which on every integer is a member.
    pub fn conductor(&self) -> i64 {
        let top = (0..self.window.len()).rev().find(|&d| !self.window.get(d));
        match top {
            Some(d) => self.offset + d as i64 + 1,
            None => self.offset,
        }
    }

    /// Members of `E` below its conductor, ascending.
    pub fn members_below_conductor(&self) -> Vec<i64> {
        (self.offset..self.conductor())
            .filter(|&x| self.contains(x))
            .collect()
    }

    fn same_semigroup(&self, other: &RelativeIdeal<'_>) -> Result<()> {
        if std::ptr::eq(self.semigroup, other.semigroup) || self.semigroup == other.semigroup {
            Ok(())
        } else {
            Err(Error::SemigroupMismatch)
        }
    }

    /// `z + E`.
    pub fn translate(&self, z: i64) -> Self {
        RelativeIdeal {
            semigroup: self.semigroup,
            offset: self.offset + z,
            window: self.window.clone(),
        }
    }

    /// The translate with minimum 0.
    pub fn normalized(&self) -> Self {
        self.translate(-self.offset)
    }

    /// `E1 + E2 = {x + y}`, the value set of the product of the ideals.
    pub fn product(&self, other: &RelativeIdeal<'_>) -> Result<Self> {
        self.same_semigroup(other)?;
        Ok(self.product_unchecked(other))
    }

    pub(crate) fn product_unchecked(&self, other: &RelativeIdeal<'_>) -> Self {
        let mut window = Bits::zeros(self.window.len());
        for i in self.window.ones() {
            window.or_shifted(&other.window, i);
        }
        RelativeIdeal {
            semigroup: self.semigroup,
            offset: self.offset + other.offset,
            window,
        }
    }

    /// `n·E`; `E⁰ = H`.
    pub fn power(&self, n: usize) -> Self {
        let mut acc = Self::ring(self.semigroup);
        for _ in 0..n {
            acc = acc.product_unchecked(self);
        }
        acc
    }

    /// `E1 ∪ E2`, the value set of the sum of the ideals.
    pub fn union(&self, other: &RelativeIdeal<'_>) -> Result<Self> {
        self.same_semigroup(other)?;
        let lo = self.offset.min(other.offset);
        Ok(Self::from_membership(self.semigroup, lo, |x| {
            self.contains(x) || other.contains(x)
        }))
    }

    /// `E1 : E2 = {x ∈ ℤ : x + E2 ⊆ E1}`.
    pub fn colon(&self, other: &RelativeIdeal<'_>) -> Result<Self> {
        self.same_semigroup(other)?;
        let lo = self.offset - other.offset;
        let shifts: Vec<i64> = other
            .window
            .ones()
            .map(|k| other.offset + k as i64)
            .collect();
        Ok(Self::from_membership(self.semigroup, lo, |x| {
            shifts.iter().all(|&y| self.contains(x + y))
        }))
    }

    /// `E \ (M + E)`, ascending: the values of a minimal monomial generating
    /// set, which is unique.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let s = self.semigroup;
        let f = s.frobenius();
        let e = s.multiplicity();
        (self.offset..=self.offset + f + e)
            .filter(|&x| self.contains(x) && !s.generators().iter().any(|&g| self.contains(x - g)))
            .collect()
    }

    /// Minimal number of generators.
    pub fn num_generators(&self) -> usize {
        self.minimal_generators().len()
    }

    /// `s + E` for the least `s ∈ H` landing inside `H` (or `M + M`).
    pub fn embed_integral(&self, target: Containment) -> Self {
        let s = self.semigroup;
        let host = match target {
            Containment::InsideRing => Self::ring(s),
            Containment::InsideMaximalSquared => {
                let m = Self::maximal(s);
                m.product_unchecked(&m)
            }
        };
        let admissible = host.colon(self).expect("same semigroup");
        let shift = (admissible.offset..)
            .find(|&x| admissible.contains(x) && s.contains(x))
            .expect("admissible shifts are cofinite");
        self.translate(shift)
    }

    /// `Some(z)` with `other = z + self` when the ideals are translates.
    pub fn iso_class_equal(&self, other: &RelativeIdeal<'_>) -> Result<Option<i64>> {
        self.same_semigroup(other)?;
        Ok((self.window == other.window).then(|| other.offset - self.offset))
    }

    pub fn is_subset(&self, other: &RelativeIdeal<'_>) -> bool {
        if self.offset < other.offset {
            return false;
        }
        if self.offset == other.offset {
            return self.window.is_subset(&other.window);
        }
        let hi = other.offset + self.semigroup.frobenius();
        (self.offset..=hi).all(|x| !self.contains(x) || other.contains(x))
    }

    /// `λ(E_big / E_small) = |E_big \ E_small|`.
    pub fn length_between(small: &RelativeIdeal<'_>, big: &RelativeIdeal<'_>) -> Result<usize> {
        small.same_semigroup(big)?;
        if !small.is_subset(big) {
            return Err(Error::NotContained);
        }
        let hi = small.offset + small.semigroup.frobenius();
        Ok((big.offset..=hi)
            .filter(|&x| big.contains(x) && !small.contains(x))
            .count())
    }

    /// `Hom(E, E) = R`, i.e. `E : E = H`.
    pub fn is_closed(&self) -> bool {
        let endo = self.colon(self).expect("same semigroup");
        endo == Self::ring(self.semigroup)
    }

    pub fn window_bits(&self) -> String {
        self.window.to_bit_string()
    }

    pub(crate) fn from_window(s: &'s NumericalSemigroup, offset: i64, window: Bits) -> Self {
        debug_assert_eq!(window.len(), Self::window_len(s));
        debug_assert!(window.len() == 0 || window.get(0));
        RelativeIdeal {
            semigroup: s,
            offset,
            window,
        }
    }

    pub fn to_record(&self) -> IdealRecord {
        IdealRecord {
            offset: self.offset,
            window_bits: self.window_bits(),
            generators: self.minimal_generators(),
        }
    }
}

impl PartialEq for RelativeIdeal<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.offset == other.offset
            && self.window == other.window
            && self.same_semigroup(other).is_ok()
    }
}

impl Eq for RelativeIdeal<'_> {}

impl fmt::Debug for RelativeIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} + H over {}",
            self.minimal_generators(),
            self.semigroup
        )
    }
}

/// Serialized form of an ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub offset: i64,
    pub window_bits: String,
    pub generators: Vec<i64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    fn members(e: &RelativeIdeal, upto: i64) -> Vec<i64> {
        (e.offset()..=upto).filter(|&x| e.contains(x)).collect()
    }

    #[test]
    fn generators_of_canonical_ideal() {
        let s = sg(&[4, 5, 6, 7]);
        let c = RelativeIdeal::from_generators(&s, &[4, 5, 6]).unwrap();
        assert_eq!(c.offset(), 4);
        assert_eq!(members(&c, 11), vec![4, 5, 6, 8, 9, 10, 11]);
        let i = RelativeIdeal::from_generators(&s, &[4, 5]).unwrap();
        assert_eq!(members(&i, 11), vec![4, 5, 8, 9, 10, 11]);

        let h = sg(&[3, 4, 5]);
        assert_eq!(
            RelativeIdeal::from_generators(&h, &[0]).unwrap(),
            RelativeIdeal::ring(&h)
        );
        assert_eq!(
            RelativeIdeal::from_generators(&h, &[]).err(),
            Some(Error::EmptyGenerators)
        );
    }

    #[test]
    fn square_of_two_generated_ideal() {
        let s = sg(&[4, 5, 6, 7]);
        let i = RelativeIdeal::from_generators(&s, &[4, 5]).unwrap();
        let c = RelativeIdeal::from_generators(&s, &[4, 5, 6]).unwrap();
        assert_eq!(i.product(&i).unwrap(), c.translate(4));
        assert_eq!(i.power(1), i);

        let h = sg(&[3, 4, 5]);
        let c = RelativeIdeal::from_generators(&h, &[3, 4]).unwrap();
        let c2 = c.power(2);
        assert_eq!(c2.offset(), 6);
        assert_eq!(c2.minimal_generators(), vec![6, 7, 8]);
        assert_eq!(members(&c2, 10), vec![6, 7, 8, 9, 10]);
    }

    #[test]
    fn colon_examples() {
        let s = sg(&[4, 5, 6, 7]);
        let k = RelativeIdeal::canonical(&s);
        assert_eq!(k.colon(&k).unwrap(), RelativeIdeal::ring(&s));

        // over <3,4,5>: ({3,4}+H) : M = {3,4,5,...}, brute-forced over x in [-10, 10]
        let h = sg(&[3, 4, 5]);
        let c = RelativeIdeal::from_generators(&h, &[3, 4]).unwrap();
        let m = RelativeIdeal::maximal(&h);
        let l = c.colon(&m).unwrap();
        assert_eq!(l, RelativeIdeal::everything_from(&h, 3));
    }

    #[test]
    fn minimal_generators_examples() {
        let s = sg(&[4, 7, 9, 10]);
        assert_eq!(
            RelativeIdeal::canonical(&s).minimal_generators(),
            vec![0, 1, 3]
        );
        let s = sg(&[3, 4, 5]);
        let k = RelativeIdeal::canonical(&s);
        assert_eq!(k.minimal_generators(), vec![0, 1]);
        assert_eq!(
            RelativeIdeal::principal(&s, 7).minimal_generators(),
            vec![7]
        );
    }

    #[test]
    fn canonical_ideal_examples() {
        let s = sg(&[4, 5, 6, 7]);
        let k = RelativeIdeal::canonical(&s);
        assert_eq!(k, RelativeIdeal::from_generators(&s, &[0, 1, 2]).unwrap());
        let s = sg(&[2, 3]);
        assert_eq!(RelativeIdeal::canonical(&s), RelativeIdeal::ring(&s));
        let s = sg(&[4, 7, 13, 14]);
        assert_eq!(
            RelativeIdeal::canonical(&s),
            RelativeIdeal::from_generators(&s, &[0, 1]).unwrap()
        );
        let t = NumericalSemigroup::trivial();
        assert_eq!(RelativeIdeal::canonical(&t), RelativeIdeal::ring(&t));
    }

    #[test]
    fn embedding_examples() {
        let s = sg(&[4, 7, 13, 14]);
        let k = RelativeIdeal::canonical(&s);
        assert_eq!(k.embed_integral(Containment::InsideRing), k.translate(7));
        let h = RelativeIdeal::ring(&s);
        assert_eq!(h.embed_integral(Containment::InsideRing), h);

        // smallest s in H with s + K inside {6, 7, 8, ...}
        let s = sg(&[3, 4, 5]);
        let k = RelativeIdeal::canonical(&s);
        let c = k.embed_integral(Containment::InsideMaximalSquared);
        assert_eq!(c, k.translate(6));
        assert_eq!(members(&c, 12), vec![6, 7, 9, 10, 11, 12]);
    }

    #[test]
    fn isomorphism_by_translation() {
        let s = sg(&[4, 5, 6, 7]);
        let c = RelativeIdeal::from_generators(&s, &[4, 5, 6]).unwrap();
        let k = RelativeIdeal::canonical(&s);
        assert_eq!(c.iso_class_equal(&k).unwrap(), Some(-4));
        assert_eq!(k.iso_class_equal(&k).unwrap(), Some(0));

        let s = sg(&[3, 4, 5]);
        let a = RelativeIdeal::from_generators(&s, &[0, 1]).unwrap();
        let b = RelativeIdeal::from_generators(&s, &[0, 2]).unwrap();
        assert_eq!(a.iso_class_equal(&b).unwrap(), None);
    }

    #[test]
    fn lengths() {
        let s = sg(&[4, 7, 13, 14]);
        let k = RelativeIdeal::canonical(&s);
        let h = RelativeIdeal::ring(&s);
        assert_eq!(RelativeIdeal::length_between(&h, &k).unwrap(), 3);
        assert_eq!(RelativeIdeal::length_between(&k, &k).unwrap(), 0);
        assert_eq!(
            RelativeIdeal::length_between(&k, &h).err(),
            Some(Error::NotContained)
        );

        let s = sg(&[3, 4, 5]);
        let c = RelativeIdeal::from_generators(&s, &[3, 4]).unwrap();
        let h = RelativeIdeal::ring(&s);
        assert_eq!(RelativeIdeal::length_between(&c, &h).unwrap(), 2);
    }

    #[test]
    fn mismatched_semigroups_are_rejected() {
        let a = sg(&[3, 4, 5]);
        let b = sg(&[2, 3]);
        let x = RelativeIdeal::ring(&a);
        let y = RelativeIdeal::ring(&b);
        assert_eq!(x.product(&y).err(), Some(Error::SemigroupMismatch));
        assert_eq!(x.colon(&y).err(), Some(Error::SemigroupMismatch));
        assert_eq!(x.iso_class_equal(&y).err(), Some(Error::SemigroupMismatch));
    }

    #[test]
    fn trivial_semigroup_ideals() {
        let t = NumericalSemigroup::trivial();
        let e = RelativeIdeal::from_generators(&t, &[3, 5]).unwrap();
        assert_eq!(e, RelativeIdeal::everything_from(&t, 3));
        assert_eq!(e.minimal_generators(), vec![3]);
        assert_eq!(e.window_bits(), "");
    }

    #[test]
    fn record_serialization() {
        let s = sg(&[3, 4, 5]);
        let k = RelativeIdeal::canonical(&s);
        let json = serde_json::to_string(&k.to_record()).unwrap();
        assert_eq!(
            json,
            r#"{"offset":0,"window_bits":"110","generators":[0,1]}"#
        );
    }
}
