//! The idealization `A = R ⋉ m`, handled through its canonical ideal in pair
//! form.
//!
//! With `C ⊆ m²` the integral canonical ideal and `L = C : M`, the canonical
//! ideal of `A` is `L × C` and its powers are `(L^n, L^{n-1}·C)`. Every
//! invariant of `A` is read off these two components, so `A` is never built.

use serde::{Deserialize, Serialize};

use crate::corpus::check::CheckBuilder;
use crate::corpus::PropertyCheckResult;
use crate::error::{Error, Result};
use crate::invariants::{almost_gorenstein, canonical_index, cdeg};
use crate::relideal::{Containment, RelativeIdeal};
use crate::semigroup::NumericalSemigroup;

/// An ideal of `A` in the form `first × second`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairIdeal<'s> {
    pub first: RelativeIdeal<'s>,
    pub second: RelativeIdeal<'s>,
}

impl<'s> PairIdeal<'s> {
    /// `(F1 F2, F1 S2 + F2 S1)`, from `(a, x)(b, y) = (ab, ay + bx)`.
    pub fn product(&self, other: &PairIdeal<'_>) -> Result<PairIdeal<'s>> {
        let first = self.first.product(&other.first)?;
        let second = self
            .first
            .product(&other.second)?
            .union(&self.second.product(&other.first)?)?;
        Ok(PairIdeal { first, second })
    }

    pub fn translate(&self, z: i64) -> PairIdeal<'s> {
        PairIdeal {
            first: self.first.translate(z),
            second: self.second.translate(z),
        }
    }
}

/// The data `C ⊆ m²`, `L = C : M` and `a = min(C)` the formulas run on.
pub struct IdealizationSetup<'s> {
    pub canonical_ideal: RelativeIdeal<'s>,
    pub colon: RelativeIdeal<'s>,
    pub maximal: RelativeIdeal<'s>,
    pub reduction_value: i64,
}

pub fn idealization_setup(s: &NumericalSemigroup) -> Result<IdealizationSetup<'_>> {
    if s.is_trivial() {
        return Err(Error::DvrInput);
    }
    let c = RelativeIdeal::canonical(s).embed_integral(Containment::InsideMaximalSquared);
    let maximal = RelativeIdeal::maximal(s);
    let colon = c.colon(&maximal)?;
    Ok(IdealizationSetup {
        reduction_value: c.offset(),
        canonical_ideal: c,
        colon,
        maximal,
    })
}

/// Invariants of `A` as computed from the components, with the side facts
/// the formulas depend on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealizationComponents {
    pub cdeg_a: usize,
    pub r_a: usize,
    pub rho_a: usize,
    /// `λ(L/C)`.
    pub colon_over_canonical: usize,
    /// `λ(L/mL)` and `λ(L/mC)`.
    pub colon_mod_ml: usize,
    pub colon_mod_mc: usize,
    pub ml_equals_mc: bool,
}

/// `cdeg(A)`, `r(A)`, `ρ(A)` and `λ(L/C)` without checking them against `R`.
pub fn idealization_components(s: &NumericalSemigroup) -> Result<IdealizationComponents> {
    let setup = idealization_setup(s)?;
    let (c, l, m, a) = (
        &setup.canonical_ideal,
        &setup.colon,
        &setup.maximal,
        setup.reduction_value,
    );
    let a_r = RelativeIdeal::principal(s, a);
    let a_m = m.translate(a);
    let cdeg_a = RelativeIdeal::length_between(&a_r, l)? + RelativeIdeal::length_between(&a_m, c)?;

    let mc = m.product(c)?;
    let ml = m.product(l)?;
    let nu_c = RelativeIdeal::length_between(&mc, c)?;
    let colon_mod_ml = RelativeIdeal::length_between(&ml, l)?;
    let colon_mod_mc = RelativeIdeal::length_between(&mc, l)?;

    Ok(IdealizationComponents {
        cdeg_a,
        r_a: nu_c + colon_mod_mc,
        rho_a: pair_reduction_number(&setup)?,
        colon_over_canonical: RelativeIdeal::length_between(c, l)?,
        colon_mod_ml,
        colon_mod_mc,
        ml_equals_mc: ml == mc,
    })
}

/// Least `n` with `(K_A)^{n+1} = (t^a, 0)·(K_A)^n`, i.e. `L^{n+1} = a + L^n`
/// and `L^n C = a + L^{n-1} C`, where `(K_A)^0 = A = H × M`.
fn pair_reduction_number(setup: &IdealizationSetup<'_>) -> Result<usize> {
    let s = setup.canonical_ideal.semigroup();
    let base = PairIdeal {
        first: setup.colon.clone(),
        second: setup.canonical_ideal.clone(),
    };
    let a = setup.reduction_value;
    let mut current = PairIdeal {
        first: RelativeIdeal::ring(s),
        second: setup.maximal.clone(),
    };
    // Both components grow along translates of increasing chains bounded by
    // the normalization, so they settle within genus + 2 steps.
    let cap = s.genus() + 3;
    for n in 0..=cap {
        let next = current.product(&base)?;
        if next == current.translate(a) {
            return Ok(n);
        }
        current = next;
    }
    Err(Error::IterationCapExceeded {
        what: "idealization reduction number",
        cap,
    })
}

/// `cdeg(A)`, `r(A)` and `ρ(A)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealizationInvariants {
    pub cdeg_a: usize,
    pub r_a: usize,
    pub rho_a: usize,
}

/// Components checked against `cdeg(A) = 2 cdeg(R) + 2` and
/// `r(A) = 2 r(R) + 1`.
pub fn idealization_invariants(s: &NumericalSemigroup) -> Result<IdealizationInvariants> {
    let comp = idealization_components(s)?;
    if !comp.ml_equals_mc || comp.colon_mod_ml != comp.colon_mod_mc {
        return Err(Error::InternalInconsistency(format!("mL != mC on {s}")));
    }
    let (d, r) = (cdeg(s)?, s.type_number());
    if comp.cdeg_a != 2 * d + 2 || comp.r_a != 2 * r + 1 {
        return Err(Error::InternalInconsistency(format!(
            "idealization of {s}: cdeg_A = {}, r_A = {}, expected {} and {}",
            comp.cdeg_a,
            comp.r_a,
            2 * d + 2,
            2 * r + 1
        )));
    }
    Ok(IdealizationInvariants {
        cdeg_a: comp.cdeg_a,
        r_a: comp.r_a,
        rho_a: comp.rho_a,
    })
}

/// The formulas for `cdeg(A)` and `r(A)`, the facts they rest on, and the
/// power law `(K_A)^n = (L^n, L^{n-1} C)`.
pub fn check_idealization_formulas(s: &NumericalSemigroup) -> Result<PropertyCheckResult> {
    let mut check = CheckBuilder::new("thm6.8", s);
    if s.is_trivial() {
        return Ok(check.skip("valuation ring"));
    }
    let comp = idealization_components(s)?;
    let (d, r) = (cdeg(s)?, s.type_number());
    check
        .record("cdeg_a", comp.cdeg_a)
        .record("two_cdeg_plus_two", 2 * d + 2)
        .record("r_a", comp.r_a)
        .record("two_r_plus_one", 2 * r + 1)
        .record("colon_over_canonical", comp.colon_over_canonical)
        .expect(comp.cdeg_a == 2 * d + 2, "cdeg_a = two_cdeg_plus_two")
        .expect(comp.r_a == 2 * r + 1, "r_a = two_r_plus_one")
        .expect(comp.colon_over_canonical == 1, "colon_over_canonical = 1")
        .expect(comp.ml_equals_mc, "mL = mC");

    let setup = idealization_setup(s)?;
    let base = PairIdeal {
        first: setup.colon.clone(),
        second: setup.canonical_ideal.clone(),
    };
    let mut power = base.clone();
    let mut law_holds = true;
    for n in 1..=comp.rho_a + 2 {
        let direct = PairIdeal {
            first: setup.colon.power(n),
            second: setup.colon.power(n - 1).product(&setup.canonical_ideal)?,
        };
        law_holds &= power == direct;
        power = power.product(&base)?;
    }
    check
        .record("rho_a", comp.rho_a)
        .expect(law_holds, "pair powers = (L^n, L^(n-1) C)");
    Ok(check.finish())
}

/// `R` is almost Gorenstein exactly when `A` is.
pub fn idealization_ag_transfer(s: &NumericalSemigroup) -> Result<PropertyCheckResult> {
    let mut check = CheckBuilder::new("cor6.9", s);
    if s.is_trivial() {
        return Ok(check.skip("valuation ring"));
    }
    let comp = idealization_components(s)?;
    let ag_r = almost_gorenstein(s)?;
    let ag_a = comp.cdeg_a + 1 == comp.r_a;
    check
        .record("cdeg_a", comp.cdeg_a)
        .record("r_a", comp.r_a)
        .record("ag_r", ag_r)
        .record("ag_a", ag_a)
        .expect(ag_r == ag_a, "ag_r = ag_a");
    Ok(check.finish())
}

/// One row of the `ρ(R)` versus `ρ(R ⋉ m)` comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexExperiment {
    pub gens: Vec<i64>,
    #[serde(rename = "rho_R")]
    pub rho_r: usize,
    #[serde(rename = "rho_A")]
    pub rho_a: usize,
    pub equal: bool,
}

/// Records both indices; nothing is asserted about them.
pub fn idealization_index_experiment(s: &NumericalSemigroup) -> Result<IndexExperiment> {
    let rho_a = idealization_components(s)?.rho_a;
    let rho_r = canonical_index(s)?;
    Ok(IndexExperiment {
        gens: s.generators().to_vec(),
        rho_r,
        rho_a,
        equal: rho_r == rho_a,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    #[test]
    fn formulas_on_examples() {
        for (g, cdeg_a, r_a) in [
            (&[3u64, 4, 5][..], 4, 5),
            (&[4, 5, 6, 7][..], 6, 7),
            (&[4, 7, 9, 10][..], 8, 7),
        ] {
            let inv = idealization_invariants(&sg(g)).unwrap();
            assert_eq!((inv.cdeg_a, inv.r_a), (cdeg_a, r_a), "{g:?}");
        }
    }

    #[test]
    fn components_of_three_four_five() {
        let s = sg(&[3, 4, 5]);
        let setup = idealization_setup(&s).unwrap();
        assert_eq!(setup.reduction_value, 6);
        assert_eq!(setup.colon, RelativeIdeal::everything_from(&s, 6));
        let comp = idealization_components(&s).unwrap();
        assert_eq!(comp.colon_over_canonical, 1);
        assert!(comp.ml_equals_mc);
    }

    #[test]
    fn checks_pass_and_dvr_is_rejected() {
        for g in [&[3u64, 4, 5][..], &[2, 3], &[4, 7, 13, 14], &[5, 6, 9, 13]] {
            let s = sg(g);
            assert!(check_idealization_formulas(&s).unwrap().is_pass(), "{g:?}");
            assert!(idealization_ag_transfer(&s).unwrap().is_pass(), "{g:?}");
        }
        let t = NumericalSemigroup::trivial();
        assert_eq!(idealization_components(&t).err(), Some(Error::DvrInput));
        assert!(check_idealization_formulas(&t).unwrap().is_skipped());
    }

    #[test]
    fn experiment_row_serializes() {
        let row = idealization_index_experiment(&sg(&[3, 4, 5])).unwrap();
        assert_eq!(row.rho_r, 2);
        let json = serde_json::to_value(&row).unwrap();
        assert!(json.get("rho_R").is_some() && json.get("rho_A").is_some());
    }
}
