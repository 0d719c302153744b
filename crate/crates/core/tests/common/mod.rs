//! Brute-force reference implementations over explicit finite sets.
//!
//! Sets are truncated at `BOUND`; comparisons against the library only look
//! below `BOUND - MARGIN`, where truncation cannot have removed anything.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cdeg::{NumericalSemigroup, RelativeIdeal};

pub const BOUND: i64 = 240;
pub const MARGIN: i64 = 80;
pub const LOW: i64 = -60;

pub type Set = BTreeSet<i64>;

/// Membership by sieving: `x ∈ H` iff `x - g ∈ H` for some generator.
pub fn sieve(gens: &[u64]) -> Set {
    let mut member = vec![false; BOUND as usize];
    member[0] = true;
    for x in 1..BOUND as usize {
        member[x] = gens
            .iter()
            .any(|&g| g as usize <= x && member[x - g as usize]);
    }
    (0..BOUND).filter(|&x| member[x as usize]).collect()
}

pub fn gaps(h: &Set) -> Vec<i64> {
    (0..BOUND - MARGIN).filter(|x| !h.contains(x)).collect()
}

pub fn frobenius(h: &Set) -> i64 {
    gaps(h).last().copied().unwrap_or(-1)
}

pub fn pseudo_frobenius(h: &Set) -> Vec<i64> {
    let m: Vec<i64> = h
        .iter()
        .copied()
        .filter(|&x| x > 0 && x < BOUND - MARGIN)
        .collect();
    gaps(h)
        .into_iter()
        .filter(|&x| m.iter().all(|&y| h.contains(&(x + y))))
        .collect()
}

pub fn ideal(h: &Set, gens: &[i64]) -> Set {
    (LOW..BOUND)
        .filter(|&x| gens.iter().any(|&g| h.contains(&(x - g))))
        .collect()
}

pub fn minkowski(a: &Set, b: &Set) -> Set {
    let mut out = Set::new();
    for &x in a {
        for &y in b {
            if x + y < BOUND {
                out.insert(x + y);
            }
        }
    }
    out
}

pub fn translate(a: &Set, z: i64) -> Set {
    a.iter().map(|&x| x + z).filter(|&x| x < BOUND).collect()
}

/// `{x : x + b ⊆ a}`, judged on sums below `BOUND`.
pub fn colon(a: &Set, b: &Set) -> Set {
    (LOW..BOUND - MARGIN)
        .filter(|&x| b.iter().all(|&y| x + y >= BOUND || a.contains(&(x + y))))
        .collect()
}

pub fn canonical(h: &Set) -> Set {
    let f = frobenius(h);
    (0..BOUND).filter(|&x| !h.contains(&(f - x))).collect()
}

pub fn below(a: &Set, limit: i64) -> Set {
    a.iter().copied().filter(|&x| x < limit).collect()
}

pub fn count_diff(big: &Set, small: &Set, limit: i64) -> usize {
    big.iter()
        .filter(|&&x| x < limit && !small.contains(&x))
        .count()
}

/// Least `n` with `N^{n+1} = N^n` for `N` the normalization of `e`.
pub fn reduction_number(h: &Set, e: &Set) -> usize {
    let m = *e.iter().next().unwrap();
    let n = translate(e, -m);
    let mut p = h.clone();
    for k in 0.. {
        let q = minkowski(&p, &n);
        if below(&q, BOUND - MARGIN) == below(&p, BOUND - MARGIN) {
            return k;
        }
        p = q;
    }
    unreachable!()
}

/// Smallest `s ∈ H` with `s + K ⊆ H`.
pub fn canonical_shift(h: &Set) -> i64 {
    let k = canonical(h);
    (0..)
        .find(|&s| h.contains(&s) && k.iter().all(|&x| s + x >= BOUND || h.contains(&(s + x))))
        .unwrap()
}

/// The library's ideal as an explicit set.
pub fn materialize(e: &RelativeIdeal<'_>) -> Set {
    (e.offset()..BOUND).filter(|&x| e.contains(x)).collect()
}

/// Every numerical semigroup of genus `g`, from its gap set: a subset of
/// `[1, 2g - 1]` whose complement is closed under addition.
pub fn semigroups_of_genus(g: usize) -> Vec<Set> {
    let top = 2 * g as i64;
    let mut out = Vec::new();
    let candidates: Vec<i64> = (1..top).collect();
    choose(&candidates, g, &mut Vec::new(), &mut |gap_set| {
        let gs: Set = gap_set.iter().copied().collect();
        let h: Vec<i64> = (0..=top).filter(|x| !gs.contains(x)).collect();
        if h.iter().all(|&x| h.iter().all(|&y| !gs.contains(&(x + y)))) {
            out.push(gs);
        }
    });
    out
}

fn choose(items: &[i64], k: usize, acc: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
    if acc.len() == k {
        f(acc);
        return;
    }
    for (i, &x) in items.iter().enumerate() {
        if items.len() - i < k - acc.len() {
            break;
        }
        acc.push(x);
        choose(&items[i + 1..], k, acc, f);
        acc.pop();
    }
}

pub fn sg(gens: &[u64]) -> NumericalSemigroup {
    NumericalSemigroup::new(gens).unwrap()
}
