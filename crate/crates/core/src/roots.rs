//! Monomial roots of the canonical ideal.
//!
//! `L` is a root of `C` when `L^n ≅ C` for some `n`; the least such `n` is
//! `τ_L(C)` and the rootset collects the attained exponents. Isomorphism of
//! monomial ideals is translation, so it suffices to look at normalized `L`
//! (`min L = 0`). Then `H ⊆ L ⊆ L^n` for every `n`, and a root satisfies
//! `H ⊆ L ⊆ L^τ = K`. The search therefore runs over the ideals between `H`
//! and `K`, which is `2^cdeg` candidates at worst instead of `2^genus`.
//!
//! Only monomial ideals are searched; the reported set is the monomial
//! rootset.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::corpus::check::CheckBuilder;
use crate::corpus::PropertyCheckResult;
use crate::error::{Error, Result};
use crate::invariants::{canonical_index, reduction_number};
use crate::relideal::{IdealRecord, RelativeIdeal};
use crate::semigroup::NumericalSemigroup;

/// Default bound on the size of the subset space searched.
pub const DEFAULT_SEARCH_CAP: usize = 16;

/// A root `L` (normalized) with `τ_L(C)`, `red(L)` and whether `L : L = H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootWitness {
    pub ideal: IdealRecord,
    pub tau: usize,
    pub red_l: usize,
    pub closed: bool,
}

impl RootWitness {
    /// Rebuilds `L` over `s`.
    pub fn ideal<'s>(&self, s: &'s NumericalSemigroup) -> Result<RelativeIdeal<'s>> {
        RelativeIdeal::from_generators(s, &self.ideal.generators)
    }
}

/// The monomial rootset with one witness per root, ordered by window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rootset {
    pub exponents: BTreeSet<usize>,
    pub witnesses: Vec<RootWitness>,
    /// Number of normalized ideals between `H` and `K` that were examined.
    pub candidates: usize,
}

/// Depth-first walk over the normalized ideals whose gaps lie in `allowed`.
///
/// Gaps are decided in increasing order. Once `y` is in the ideal, so is
/// every `y + m` with `m ∈ M`; those gaps are forced. An unforced gap may be
/// taken or left, and leaving it keeps it out for good because every later
/// decision only forces larger integers.
pub struct NormalizedIdeals<'s> {
    semigroup: &'s NumericalSemigroup,
    gaps: Vec<usize>,
    allowed: Bits,
    maximal: Bits,
    stack: Vec<(usize, Bits, Bits)>,
}

impl<'s> NormalizedIdeals<'s> {
    fn new(s: &'s NumericalSemigroup, allowed: Bits) -> Self {
        let len = (s.frobenius() + 1) as usize;
        let ring = Bits::from_fn(len, |x| s.contains(x as i64));
        let maximal = Bits::from_fn(len, |x| x > 0 && s.contains(x as i64));
        NormalizedIdeals {
            semigroup: s,
            gaps: s.gaps().iter().map(|&g| g as usize).collect(),
            allowed,
            maximal,
            stack: vec![(0, ring, Bits::zeros(len))],
        }
    }
}

impl<'s> Iterator for NormalizedIdeals<'s> {
    type Item = RelativeIdeal<'s>;

    fn next(&mut self) -> Option<RelativeIdeal<'s>> {
        while let Some((idx, window, forced)) = self.stack.pop() {
            let Some(&x) = self.gaps.get(idx) else {
                return Some(RelativeIdeal::from_window(self.semigroup, 0, window));
            };
            let allowed = self.allowed.get(x);
            if forced.get(x) {
                if !allowed {
                    continue;
                }
            } else {
                // Leaving x out is explored after taking it.
                self.stack.push((idx + 1, window.clone(), forced.clone()));
                if !allowed {
                    continue;
                }
            }
            let mut window = window;
            let mut forced = forced;
            window.set(x);
            forced.or_shifted(&self.maximal, x);
            self.stack.push((idx + 1, window, forced));
        }
        None
    }
}

/// Every relative ideal with minimum 0, each once.
pub fn enumerate_normalized_ideals(
    s: &NumericalSemigroup,
    cap: usize,
) -> Result<NormalizedIdeals<'_>> {
    if s.genus() > cap {
        return Err(Error::GenusCapExceeded {
            requested: s.genus(),
            cap,
        });
    }
    let len = (s.frobenius() + 1) as usize;
    Ok(NormalizedIdeals::new(s, Bits::from_fn(len, |_| true)))
}

/// Normalized ideals `L` with `H ⊆ L ⊆ K`.
pub fn ideals_below_canonical(s: &NumericalSemigroup, cap: usize) -> Result<NormalizedIdeals<'_>> {
    let k = RelativeIdeal::canonical(s);
    let h = RelativeIdeal::ring(s);
    let size = RelativeIdeal::length_between(&h, &k)?;
    if size > cap {
        return Err(Error::GenusCapExceeded {
            requested: size,
            cap,
        });
    }
    let len = (s.frobenius() + 1) as usize;
    Ok(NormalizedIdeals::new(
        s,
        Bits::from_fn(len, |x| k.contains(x as i64)),
    ))
}

/// `τ_L(C)` for a normalized `L ⊆ K`, or `None` when no power of `L` is `K`.
pub fn root_exponent(l: &RelativeIdeal<'_>, k: &RelativeIdeal<'_>) -> Option<usize> {
    let mut power = l.clone();
    for n in 1.. {
        if power == *k {
            return Some(n);
        }
        if !power.is_subset(k) {
            return None;
        }
        let next = power.product_unchecked(l);
        if next == power {
            return None;
        }
        power = next;
    }
    unreachable!()
}

/// Monomial rootset of `C`, searched exhaustively among ideals between `H`
/// and `K`.
pub fn rootset(s: &NumericalSemigroup, cap: usize) -> Result<Rootset> {
    let k = RelativeIdeal::canonical(s);
    let mut exponents = BTreeSet::new();
    let mut witnesses = Vec::new();
    let mut candidates = 0;
    for l in ideals_below_canonical(s, cap)? {
        candidates += 1;
        if let Some(tau) = root_exponent(&l, &k) {
            exponents.insert(tau);
            witnesses.push(RootWitness {
                tau,
                red_l: reduction_number(&l)?,
                closed: l.is_closed(),
                ideal: l.to_record(),
            });
        }
    }
    witnesses.sort_by(|a, b| a.ideal.window_bits.cmp(&b.ideal.window_bits));
    Ok(Rootset {
        exponents,
        witnesses,
        candidates,
    })
}

/// Finiteness and closedness of roots, uniqueness of exponents, and the
/// type-two and Gorenstein cases.
pub fn verify_root_theorems(
    s: &NumericalSemigroup,
    roots: &Rootset,
) -> Result<PropertyCheckResult> {
    let r = s.type_number();
    let k = RelativeIdeal::canonical(s);
    let mut check = CheckBuilder::new("thm5.8", s);
    check
        .record("rootset", &roots.exponents)
        .record("rootset_size", roots.exponents.len())
        .record("type", r)
        .expect(roots.exponents.contains(&1), "1 in rootset");
    if r >= 2 {
        check.expect(roots.exponents.len() < r, "rootset_size <= type - 1");
    } else {
        check.expect(
            roots.exponents.iter().eq([1].iter()),
            "Gorenstein: rootset = {1}",
        );
    }
    if r == 2 {
        check.expect(
            roots.exponents.iter().eq([1].iter()),
            "type 2: rootset = {1}",
        );
    }
    let mut open = Vec::new();
    let mut repeated = Vec::new();
    for w in &roots.witnesses {
        if !w.closed {
            open.push(w.ideal.generators.clone());
        }
        if r >= 2 {
            let l = w.ideal(s)?;
            let mut power = l.power(w.tau);
            for m in w.tau + 1..=w.red_l + 1 {
                power = power.product_unchecked(&l);
                if power == k {
                    repeated.push((w.ideal.generators.clone(), m));
                    break;
                }
            }
        }
        if r >= 2 && w.tau > w.red_l {
            check.expect(false, "tau <= red(L)");
        }
    }
    check
        .record("unclosed_witnesses", &open)
        .record("repeated_exponents", &repeated)
        .expect(open.is_empty(), "every root is closed")
        .expect(repeated.is_empty(), "each root has a single exponent");
    Ok(check.finish())
}

/// `τ_L(C) ≤ min(r - 1, red(L))` for every witness.
pub fn check_tau_bound(s: &NumericalSemigroup, roots: &Rootset) -> PropertyCheckResult {
    let r = s.type_number();
    let mut check = CheckBuilder::new("prop5.6", s);
    if r < 2 {
        return check.skip("Gorenstein ring");
    }
    let bad: Vec<_> = roots
        .witnesses
        .iter()
        .filter(|w| w.tau > (r - 1).min(w.red_l))
        .map(|w| serde_json::json!({"generators": w.ideal.generators, "tau": w.tau, "red_l": w.red_l}))
        .collect();
    check
        .record("type_minus_one", r - 1)
        .record("witnesses", roots.witnesses.len())
        .expect(bad.is_empty(), "tau <= min(type_minus_one, red_l)");
    if !bad.is_empty() {
        check.record("offending", bad);
    }
    check.finish()
}

/// For a witness `(L, τ)` and each divisor `p` of `τ`, `I = L^{τ/p}` has
/// `I^p ≅ K`, and `ρ ≤ ⌊(red(I) + p - 1) / p⌋`.
pub fn check_root_index_bound(
    s: &NumericalSemigroup,
    roots: &Rootset,
) -> Result<PropertyCheckResult> {
    let rho = canonical_index(s)?;
    let mut check = CheckBuilder::new("root-index", s);
    check.record("rho", rho);
    let mut rows = Vec::new();
    let mut ok = true;
    for w in &roots.witnesses {
        let l = w.ideal(s)?;
        for p in (1..=w.tau).filter(|p| w.tau % p == 0) {
            let i = l.power(w.tau / p);
            let red_i = reduction_number(&i)?;
            let bound = red_i.div_ceil(p);
            ok &= rho <= bound;
            rows.push(serde_json::json!({
                "generators": w.ideal.generators,
                "p": p,
                "red_i": red_i,
                "bound": bound,
            }));
        }
    }
    check.record("bounds", rows).expect(ok, "rho <= bound");
    Ok(check.finish())
}

/// Generators of `⟨e + i : 0 ≤ i ≤ e - 2, i ∉ {e - b - 1, e - a - 1}⟩`.
pub fn type3_family_generators(a: i64, b: i64, e: i64) -> Result<Vec<u64>> {
    if !(0 < a && a < b && b < 2 * a && e >= a + b + 2) {
        return Err(Error::HypothesisViolated(format!(
            "need 0 < a < b < 2a and e >= a + b + 2, got a={a}, b={b}, e={e}"
        )));
    }
    Ok((0..=e - 2)
        .filter(|&i| i != e - b - 1 && i != e - a - 1)
        .map(|i| (e + i) as u64)
        .collect())
}

/// The family with canonical module `⟨1, t^a, t^b⟩` has no monomial root
/// other than `K` itself.
pub fn check_no_proper_roots_type3(
    a: i64,
    b: i64,
    e: i64,
    cap: usize,
) -> Result<PropertyCheckResult> {
    let gens = type3_family_generators(a, b, e)?;
    let s = NumericalSemigroup::new(&gens)?;
    let k_gens = RelativeIdeal::canonical(&s).minimal_generators();
    let roots = rootset(&s, cap)?;
    let mut check = CheckBuilder::new("thm5.15", &s);
    check
        .record("a", a)
        .record("b", b)
        .record("e", e)
        .record("canonical_generators", &k_gens)
        .record("type", s.type_number())
        .record("rootset", &roots.exponents)
        .expect(k_gens == [0, a, b], "canonical_generators = {0, a, b}")
        .expect(s.type_number() == 3, "type = 3")
        .expect(roots.exponents.iter().eq([1].iter()), "rootset = {1}");
    Ok(check.finish())
}
