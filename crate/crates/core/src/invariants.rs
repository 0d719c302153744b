//! Canonical degree, canonical index, Hilbert coefficients of the canonical
//! ideal, and the almost-Gorenstein test.
//!
//! Throughout, `C = s + K` is the integral translate of the canonical ideal
//! and `a = min(C)`. For a monomial ideal `E` the principal ideal generated
//! by `t^{min E}` is a reduction (every large power of `E - min E` is the
//! same cofinite set), so `e0(C) = λ(R/(a)) = a` and reduction numbers are
//! measured against it.

use serde::{Deserialize, Serialize};

use crate::corpus::check::CheckBuilder;
use crate::corpus::PropertyCheckResult;
use crate::error::{Error, Result};
use crate::relideal::{Containment, RelativeIdeal};
use crate::semigroup::NumericalSemigroup;

/// All invariants of one ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub generators: Vec<i64>,
    pub multiplicity: i64,
    pub frobenius: i64,
    pub conductor: i64,
    pub genus: usize,
    #[serde(rename = "type")]
    pub type_number: usize,
    pub cdeg: usize,
    pub canonical_index: usize,
    pub e0_c: i64,
    pub e1_c: i64,
    pub sally_s0: i64,
    pub almost_gorenstein: bool,
    pub gorenstein: bool,
    pub cdeg_star: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// `K`, its integral translate `C`, and `a = min(C)`.
pub struct CanonicalSetup<'s> {
    pub canonical_module: RelativeIdeal<'s>,
    pub canonical_ideal: RelativeIdeal<'s>,
    pub reduction_value: i64,
}

pub fn canonical_setup(s: &NumericalSemigroup) -> CanonicalSetup<'_> {
    let k = RelativeIdeal::canonical(s);
    let c = k.embed_integral(Containment::InsideRing);
    let a = c.offset();
    CanonicalSetup {
        canonical_module: k,
        canonical_ideal: c,
        reduction_value: a,
    }
}

/// The three ways of reading off the canonical degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CdegRoutes {
    /// `λ(C/(a))`.
    pub over_reduction: usize,
    /// `e0(C) - λ(R/C)`.
    pub multiplicity_minus_colength: i64,
    /// `λ(K/R)` with `K` normalized to contain `R`.
    pub canonical_over_ring: usize,
}

impl CdegRoutes {
    pub fn agree(&self) -> bool {
        self.over_reduction as i64 == self.multiplicity_minus_colength
            && self.over_reduction == self.canonical_over_ring
    }
}

pub fn cdeg_routes(s: &NumericalSemigroup) -> CdegRoutes {
    let setup = canonical_setup(s);
    let h = RelativeIdeal::ring(s);
    let c = &setup.canonical_ideal;
    let a = setup.reduction_value;
    let principal = RelativeIdeal::principal(s, a);
    let over_reduction = RelativeIdeal::length_between(&principal, c).expect("(a) ⊆ C");
    let colength = RelativeIdeal::length_between(c, &h).expect("C ⊆ R");
    let canonical_over_ring =
        RelativeIdeal::length_between(&h, &setup.canonical_module).expect("R ⊆ K");
    CdegRoutes {
        over_reduction,
        multiplicity_minus_colength: a - colength as i64,
        canonical_over_ring,
    }
}

/// Canonical degree `cdeg(R) = λ(C/(a))`.
pub fn cdeg(s: &NumericalSemigroup) -> Result<usize> {
    let routes = cdeg_routes(s);
    if !routes.agree() {
        return Err(Error::InternalInconsistency(format!(
            "cdeg routes disagree on {s}: {routes:?}"
        )));
    }
    Ok(routes.over_reduction)
}

/// Least `n ≥ 0` with `E^{n+1} = t^{min E}·E^n`.
pub fn reduction_number(e: &RelativeIdeal<'_>) -> Result<usize> {
    let n_ideal = e.normalized();
    let s = e.semigroup();
    // H ⊆ N ⊆ N² ⊆ … ⊆ ℕ grows by at least one gap per step until it stops.
    let cap = s.genus() + 1;
    let mut current = RelativeIdeal::ring(s);
    for n in 0..=cap {
        let next = current.product_unchecked(&n_ideal);
        if next == current {
            return Ok(n);
        }
        current = next;
    }
    Err(Error::IterationCapExceeded {
        what: "reduction number",
        cap,
    })
}

/// `ρ(R) = red(C)`.
pub fn canonical_index(s: &NumericalSemigroup) -> Result<usize> {
    let rho = reduction_number(&RelativeIdeal::canonical(s))?;
    let r = s.type_number();
    if r >= 2 {
        if rho == 1 {
            return Err(Error::InternalInconsistency(format!(
                "canonical index 1 on non-Gorenstein {s}"
            )));
        }
        if cdeg(s)? + 1 == r && rho != 2 {
            return Err(Error::InternalInconsistency(format!(
                "almost Gorenstein {s} has canonical index {rho}, expected 2"
            )));
        }
    }
    Ok(rho)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct E1Routes {
    /// `Σ_{j<ρ} λ(C^{j+1}/aC^j)`.
    pub sally_sum: i64,
    /// `e0·n - λ(R/C^n)` at `n = ρ+1, ρ+2, ρ+3`.
    pub hilbert_fit: [i64; 3],
}

impl E1Routes {
    pub fn agree(&self) -> bool {
        self.hilbert_fit.iter().all(|&x| x == self.sally_sum)
    }
}

pub fn e1_routes(s: &NumericalSemigroup) -> Result<E1Routes> {
    let rho = reduction_number(&RelativeIdeal::canonical(s))?;
    let setup = canonical_setup(s);
    let c = &setup.canonical_ideal;
    let a = setup.reduction_value;
    let h = RelativeIdeal::ring(s);

    let mut sally_sum = 0i64;
    let mut power = h.clone();
    for _ in 0..rho {
        let next = power.product_unchecked(c);
        let reduced = power.translate(a);
        sally_sum += RelativeIdeal::length_between(&reduced, &next)? as i64;
        power = next;
    }

    let mut hilbert_fit = [0i64; 3];
    for (slot, n) in hilbert_fit.iter_mut().zip(rho + 1..) {
        let colength = RelativeIdeal::length_between(&c.power(n), &h)? as i64;
        *slot = a * n as i64 - colength;
    }
    Ok(E1Routes {
        sally_sum,
        hilbert_fit,
    })
}

/// First Hilbert coefficient `e1(C)`.
pub fn hilbert_coefficient_e1(s: &NumericalSemigroup) -> Result<i64> {
    let routes = e1_routes(s)?;
    if !routes.agree() {
        return Err(Error::InternalInconsistency(format!(
            "e1 routes disagree on {s}: {routes:?}"
        )));
    }
    Ok(routes.sally_sum)
}

/// Multiplicity of the Sally module, `e1(C) - cdeg(R)`.
pub fn sally_multiplicity(s: &NumericalSemigroup) -> Result<i64> {
    Ok(hilbert_coefficient_e1(s)? - cdeg(s)? as i64)
}

/// `cdeg = r - 1`, cross-checked against almost-symmetry of H.
pub fn almost_gorenstein(s: &NumericalSemigroup) -> Result<bool> {
    let by_cdeg = cdeg(s)? + 1 == s.type_number();
    if by_cdeg != s.is_almost_symmetric() {
        return Err(Error::InternalInconsistency(format!(
            "almost-Gorenstein routes disagree on {s}"
        )));
    }
    Ok(by_cdeg)
}

pub fn report(s: &NumericalSemigroup) -> Result<InvariantReport> {
    let mut rep = InvariantReport {
        generators: s.generators().to_vec(),
        multiplicity: s.multiplicity(),
        frobenius: s.frobenius(),
        conductor: s.conductor(),
        genus: s.genus(),
        type_number: s.type_number(),
        cdeg: 0,
        canonical_index: 0,
        e0_c: 0,
        e1_c: 0,
        sally_s0: 0,
        almost_gorenstein: true,
        gorenstein: true,
        cdeg_star: 0,
        note: None,
    };
    if s.is_trivial() {
        rep.note = Some("valuation ring: invariants degenerate".into());
        return Ok(rep);
    }
    let setup = canonical_setup(s);
    let routes = cdeg_routes(s);
    rep.cdeg = cdeg(s)?;
    rep.canonical_index = canonical_index(s)?;
    rep.e0_c = setup.reduction_value;
    rep.e1_c = hilbert_coefficient_e1(s)?;
    rep.sally_s0 = rep.e1_c - rep.cdeg as i64;
    rep.almost_gorenstein = almost_gorenstein(s)?;
    rep.gorenstein = rep.cdeg == 0;
    // deg of the associated graded ring along (a) is λ(R/(a)) = e0(C).
    rep.cdeg_star = routes.multiplicity_minus_colength;

    if rep.gorenstein != (rep.type_number == 1) {
        return Err(Error::InternalInconsistency(format!(
            "cdeg = 0 but type {} on {s}",
            rep.type_number
        )));
    }
    if rep.sally_s0 < 0 || rep.cdeg_star != rep.cdeg as i64 {
        return Err(Error::InternalInconsistency(format!(
            "Sally multiplicity or cdeg* out of range on {s}"
        )));
    }
    Ok(rep)
}

/// Socle dimension of `R/E`: `λ(((E :_R M) ∩ H) / E)`.
fn socle_dimension(e: &RelativeIdeal<'_>, maximal: &RelativeIdeal<'_>) -> usize {
    let s = e.semigroup();
    let colon = e.colon(maximal).expect("same semigroup");
    (colon.offset()..e.conductor())
        .filter(|&x| colon.contains(x) && s.contains(x) && !e.contains(x))
        .count()
}

/// For an irreducible m-primary `E ⊆ m²`: `λ(E/(a)) ≥ r - 1`, and
/// `red(E) ≤ 2` when equality holds.
pub fn check_irreducible_ideal_bound(
    s: &NumericalSemigroup,
    e: &RelativeIdeal<'_>,
) -> Result<PropertyCheckResult> {
    if s.is_trivial() {
        return Err(Error::PreconditionFailed(
            "the ring is a valuation ring".into(),
        ));
    }
    let maximal = RelativeIdeal::maximal(s);
    let m2 = maximal.product_unchecked(&maximal);
    if !e.is_subset(&m2) {
        return Err(Error::PreconditionFailed(
            "ideal is not contained in the square of the maximal ideal".into(),
        ));
    }
    let mut check = CheckBuilder::new("irreducible-bound", s);
    check.record("ideal", e.to_record());
    let socle = socle_dimension(e, &maximal);
    check.record("socle_dimension", socle);
    if socle != 1 {
        return Ok(check.skip("ideal is not irreducible"));
    }
    let principal = RelativeIdeal::principal(s, e.offset());
    let length = RelativeIdeal::length_between(&principal, e)?;
    let r = s.type_number();
    check
        .record("length_over_reduction", length)
        .record("type_minus_one", r - 1)
        .expect(length + 1 >= r, "length_over_reduction >= type_minus_one");
    if length + 1 == r {
        let red = reduction_number(e)?;
        check
            .record("reduction_number", red)
            .expect(red <= 2, "reduction_number <= 2");
    }
    Ok(check.finish())
}

/// Runs the irreducible-ideal bound over every monomial ideal `E ⊆ M + M`
/// with `min(E)` up to the point where translating further no longer changes
/// irreducibility.
pub fn sweep_irreducible_ideals(s: &NumericalSemigroup, cap: usize) -> Result<PropertyCheckResult> {
    let mut check = CheckBuilder::new("irreducible-bound", s);
    if s.is_trivial() {
        return Ok(check.skip("valuation ring"));
    }
    let maximal = RelativeIdeal::maximal(s);
    let m2 = maximal.product_unchecked(&maximal);
    let r = s.type_number();
    let c = s.conductor();
    let mut ideals = 0usize;
    let mut irreducible = 0usize;
    let mut failures = Vec::new();
    for n in crate::roots::enumerate_normalized_ideals(s, cap)? {
        ideals += 1;
        // (s + N) : M = s + (N : M), so the socle of R/(s + N) is the set of
        // y in (N : M) \ N with s + y in H.
        let colon = n.colon(&maximal)?;
        let extra: Vec<i64> = (colon.offset()..n.conductor())
            .filter(|&y| colon.contains(y) && !n.contains(y))
            .collect();
        let admissible = m2.colon(&n)?;
        let min_extra = extra.iter().copied().min().unwrap_or(0);
        let last = admissible
            .conductor()
            .max(c - min_extra)
            .max(admissible.offset());
        let mut verdict: Option<(usize, Option<usize>)> = None;
        for shift in admissible.offset()..=last {
            if !admissible.contains(shift) || !s.contains(shift) {
                continue;
            }
            let socle = extra.iter().filter(|&&y| s.contains(shift + y)).count();
            if socle != 1 {
                continue;
            }
            irreducible += 1;
            // λ(E/(a)) and red(E) are invariant under translation.
            let (length, red) = match verdict {
                Some(v) => v,
                None => {
                    let length = RelativeIdeal::length_between(&RelativeIdeal::ring(s), &n)?;
                    let red = if length + 1 == r {
                        Some(reduction_number(&n)?)
                    } else {
                        None
                    };
                    verdict = Some((length, red));
                    (length, red)
                }
            };
            let ok = length + 1 >= r && red.is_none_or(|red| red <= 2);
            if !ok && failures.len() < 8 {
                failures.push(serde_json::json!({
                    "ideal": n.translate(shift).to_record(),
                    "length_over_reduction": length,
                    "type_minus_one": r - 1,
                    "reduction_number": red,
                }));
            }
        }
    }
    check
        .record("ideals", ideals)
        .record("irreducible_ideals", irreducible)
        .expect(
            failures.is_empty(),
            "every irreducible ideal satisfies the bound",
        );
    if !failures.is_empty() {
        check.record("counterexamples", failures);
    }
    Ok(check.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    #[test]
    fn cdeg_examples() {
        assert_eq!(cdeg(&sg(&[4, 7, 13, 14])).unwrap(), 3);
        assert_eq!(cdeg(&sg(&[2, 3])).unwrap(), 0);
        assert_eq!(cdeg(&sg(&[4, 7, 9, 10])).unwrap(), 3);
        assert!(cdeg_routes(&sg(&[5, 6, 9, 13])).agree());
    }

    #[test]
    fn reduction_number_examples() {
        let s = sg(&[3, 4, 5]);
        let c = canonical_setup(&s).canonical_ideal;
        assert_eq!(reduction_number(&c).unwrap(), 2);
        assert_eq!(
            reduction_number(&RelativeIdeal::principal(&s, 9)).unwrap(),
            0
        );
        let s = sg(&[4, 7, 13, 14]);
        assert_eq!(reduction_number(&RelativeIdeal::canonical(&s)).unwrap(), 3);
    }

    #[test]
    fn canonical_index_examples() {
        assert_eq!(canonical_index(&sg(&[4, 5, 6, 7])).unwrap(), 2);
        assert_eq!(canonical_index(&sg(&[2, 3])).unwrap(), 0);
        assert_eq!(canonical_index(&sg(&[4, 7, 9, 10])).unwrap(), 2);
    }

    #[test]
    fn e1_examples() {
        assert_eq!(hilbert_coefficient_e1(&sg(&[3, 4, 5])).unwrap(), 2);
        assert_eq!(hilbert_coefficient_e1(&sg(&[2, 3])).unwrap(), 0);
        // Sally sum 2 + 1, Hilbert polynomial 4n - 3.
        assert_eq!(hilbert_coefficient_e1(&sg(&[4, 5, 6, 7])).unwrap(), 3);
    }

    #[test]
    fn sally_and_almost_gorenstein() {
        let s = sg(&[3, 4, 5]);
        assert_eq!(sally_multiplicity(&s).unwrap(), 1);
        assert!(almost_gorenstein(&s).unwrap());
        let s = sg(&[2, 3]);
        assert_eq!(sally_multiplicity(&s).unwrap(), 0);
        assert!(almost_gorenstein(&s).unwrap());
        assert!(!almost_gorenstein(&sg(&[4, 7, 9, 10])).unwrap());
    }

    #[test]
    fn report_bundles_everything() {
        let r = report(&sg(&[3, 4, 5])).unwrap();
        assert_eq!(
            (r.type_number, r.cdeg, r.canonical_index, r.e1_c, r.sally_s0),
            (2, 1, 2, 2, 1)
        );
        assert!(r.almost_gorenstein && !r.gorenstein);
        assert_eq!(r.cdeg_star, 1);

        let r = report(&NumericalSemigroup::trivial()).unwrap();
        assert!(r.gorenstein && r.note.is_some());
        assert_eq!(r.cdeg, 0);
    }

    #[test]
    fn irreducible_bound_on_canonical_translate() {
        let s = sg(&[3, 4, 5]);
        let e = RelativeIdeal::canonical(&s).translate(8);
        let res = check_irreducible_ideal_bound(&s, &e).unwrap();
        assert!(res.is_pass(), "{res:?}");
        assert_eq!(res.payload["length_over_reduction"], 1);
        assert_eq!(res.payload["reduction_number"], 2);
    }

    #[test]
    fn irreducible_bound_skips_and_rejects() {
        let s = sg(&[3, 4, 5]);
        // {6,7,8,...} = M + M is not irreducible: its socle is {3, 4, 5}.
        let m = RelativeIdeal::maximal(&s);
        let m2 = m.product(&m).unwrap();
        assert!(check_irreducible_ideal_bound(&s, &m2).unwrap().is_skipped());
        assert!(matches!(
            check_irreducible_ideal_bound(&s, &m),
            Err(Error::PreconditionFailed(_))
        ));
        assert!(check_irreducible_ideal_bound(
            &NumericalSemigroup::trivial(),
            &RelativeIdeal::ring(&NumericalSemigroup::trivial())
        )
        .is_err());
    }
}
