//! Parametrised semigroup families with closed-form claims about their
//! invariants. Each row compares the computed values with the claimed ones.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::invariants::{canonical_index, canonical_setup, cdeg};
use crate::relideal::RelativeIdeal;
use crate::roots::{root_exponent, rootset, type3_family_generators};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// `⟨e, e+3, …, 2e-1, 3e+1, 3e+2⟩`, `e ≥ 4`.
    #[serde(rename = "e-family")]
    EFamily,
    /// `⟨a, a+3, …, 2a-1, 2a+1, 2a+2⟩`, `a ≥ 4`.
    #[serde(rename = "a-family-1")]
    AFamily1,
    /// `⟨a, a+1, a+4, …, 2a-1, 2a+2, 2a+3⟩`, `a ≥ 5`.
    #[serde(rename = "a-family-2")]
    AFamily2,
    /// `⟨a, a+1, …, 2a-1⟩`, `a ≥ 3`.
    #[serde(rename = "maxgen")]
    Maxgen,
    /// `⟨e+i : 0 ≤ i ≤ e-2, i ∉ {e-b-1, e-a-1}⟩`.
    #[serde(rename = "type3-rootless")]
    Type3Rootless,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::EFamily,
        Family::AFamily1,
        Family::AFamily2,
        Family::Maxgen,
        Family::Type3Rootless,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::EFamily => "e-family",
            Family::AFamily1 => "a-family-1",
            Family::AFamily2 => "a-family-2",
            Family::Maxgen => "maxgen",
            Family::Type3Rootless => "type3-rootless",
        }
    }

    /// Least admissible value of the running parameter.
    pub fn lower_bound(self) -> i64 {
        match self {
            Family::EFamily | Family::AFamily1 => 4,
            Family::AFamily2 => 5,
            Family::Maxgen => 3,
            Family::Type3Rootless => 4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

fn out_of_range(family: Family, value: i64, bound: &str) -> Error {
    Error::ParamOutOfRange {
        family: family.name().into(),
        value,
        bound: bound.into(),
    }
}

/// Generators of a one-parameter family member.
pub fn family_generators(family: Family, n: i64) -> Result<Vec<u64>> {
    let check = |min: i64, bound: &str| {
        if n < min {
            Err(out_of_range(family, n, bound))
        } else {
            Ok(())
        }
    };
    let gens: Vec<i64> = match family {
        Family::EFamily => {
            check(4, "e >= 4")?;
            let e = n;
            std::iter::once(e)
                .chain(e + 3..2 * e)
                .chain([3 * e + 1, 3 * e + 2])
                .collect()
        }
        Family::AFamily1 => {
            check(4, "a >= 4")?;
            let a = n;
            std::iter::once(a)
                .chain(a + 3..2 * a)
                .chain([2 * a + 1, 2 * a + 2])
                .collect()
        }
        Family::AFamily2 => {
            check(5, "a >= 5")?;
            let a = n;
            [a, a + 1]
                .into_iter()
                .chain(a + 4..2 * a)
                .chain([2 * a + 2, 2 * a + 3])
                .collect()
        }
        Family::Maxgen => {
            check(3, "a >= 3")?;
            (n..2 * n).collect()
        }
        Family::Type3Rootless => {
            return Err(Error::HypothesisViolated(
                "type3-rootless takes the parameters a, b and e".into(),
            ))
        }
    };
    Ok(gens.into_iter().map(|g| g as u64).collect())
}

/// One member of a family with its computed and claimed quantities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub family: Family,
    pub params: BTreeMap<String, i64>,
    pub generators: Vec<i64>,
    pub computed: BTreeMap<String, Value>,
    pub claimed: BTreeMap<String, Value>,
    pub matches: bool,
}

impl FamilyRow {
    pub fn verdict(&self) -> &'static str {
        if self.matches {
            "MATCH"
        } else {
            "MISMATCH"
        }
    }
}

fn row(
    family: Family,
    params: &[(&str, i64)],
    s: &NumericalSemigroup,
    pairs: Vec<(&str, Value, Value)>,
) -> FamilyRow {
    let mut computed = BTreeMap::new();
    let mut claimed = BTreeMap::new();
    for (k, got, want) in pairs {
        computed.insert(k.to_string(), got);
        claimed.insert(k.to_string(), want);
    }
    FamilyRow {
        family,
        params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        generators: s.generators().to_vec(),
        matches: computed == claimed,
        computed,
        claimed,
    }
}

/// Evaluates one member of a one-parameter family.
pub fn family_row(family: Family, n: i64) -> Result<FamilyRow> {
    let gens = family_generators(family, n)?;
    let s = NumericalSemigroup::new(&gens)?;
    let c = canonical_setup(&s).canonical_ideal;
    let pairs = match family {
        Family::EFamily => {
            let k_gens = RelativeIdeal::canonical(&s).minimal_generators();
            vec![
                ("conductor", json!(s.conductor()), json!(2 * n + 3)),
                ("cdeg", json!(cdeg(&s)?), json!(3)),
                ("rho", json!(canonical_index(&s)?), json!(n - 1)),
                ("type", json!(s.type_number()), json!(2)),
                ("canonical_generators", json!(k_gens), json!([0, 1])),
            ]
        }
        Family::AFamily1 | Family::AFamily2 => {
            let drop = if family == Family::AFamily1 { 1 } else { 2 };
            let red = if family == Family::AFamily1 { 2 } else { 3 };
            vec![
                ("cdeg", json!(cdeg(&s)?), json!(n - drop)),
                ("nu_c", json!(c.num_generators()), json!(n - drop)),
                ("red_c", json!(canonical_index(&s)?), json!(red)),
            ]
        }
        Family::Maxgen => {
            let k = RelativeIdeal::canonical(&s);
            let l = RelativeIdeal::from_generators(&s, &[0, 1])?;
            let a = n as usize;
            vec![
                ("k_is_power", json!(l.power(a - 2) == k), json!(true)),
                ("tau", json!(root_exponent(&l, &k)), json!(a - 2)),
                ("type_minus_one", json!(s.type_number() - 1), json!(a - 2)),
            ]
        }
        Family::Type3Rootless => unreachable!("rejected by family_generators"),
    };
    Ok(row(family, &[(param_name(family), n)], &s, pairs))
}

fn param_name(family: Family) -> &'static str {
    match family {
        Family::EFamily | Family::Type3Rootless => "e",
        _ => "a",
    }
}

/// Evaluates one member of the type-three family; `cap` bounds the root
/// search.
pub fn type3_row(a: i64, b: i64, e: i64, cap: usize) -> Result<FamilyRow> {
    let gens = type3_family_generators(a, b, e)?;
    let s = NumericalSemigroup::new(&gens)?;
    let k_gens = RelativeIdeal::canonical(&s).minimal_generators();
    let roots = rootset(&s, cap)?;
    let pairs = vec![
        ("type", json!(s.type_number()), json!(3)),
        ("canonical_generators", json!(k_gens), json!([0, a, b])),
        ("rootset", json!(roots.exponents), json!([1])),
    ];
    Ok(row(
        Family::Type3Rootless,
        &[("a", a), ("b", b), ("e", e)],
        &s,
        pairs,
    ))
}

/// Rows for `from..=to` of a one-parameter family.
pub fn family_table(family: Family, from: i64, to: i64) -> Result<Vec<FamilyRow>> {
    (from..=to).map(|n| family_row(family, n)).collect()
}

/// Every `(a, b, e)` with `0 < a < b < 2a`, `a + b ≤ max_sum` and
/// `a + b + 2 ≤ e ≤ a + b + 2 + extra`.
pub fn type3_parameter_grid(max_sum: i64, extra: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for a in 1..max_sum {
        for b in a + 1..2 * a {
            if a + b > max_sum {
                break;
            }
            for e in a + b + 2..=a + b + 2 + extra {
                out.push((a, b, e));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_match_definitions() {
        assert_eq!(
            family_generators(Family::EFamily, 4).unwrap(),
            vec![4, 7, 13, 14]
        );
        assert_eq!(
            family_generators(Family::AFamily1, 4).unwrap(),
            vec![4, 7, 9, 10]
        );
        assert_eq!(
            family_generators(Family::AFamily2, 5).unwrap(),
            vec![5, 6, 9, 12, 13]
        );
        assert_eq!(family_generators(Family::Maxgen, 3).unwrap(), vec![3, 4, 5]);
    }

    #[test]
    fn ranges_are_enforced() {
        assert_eq!(
            family_generators(Family::EFamily, 3).err(),
            Some(Error::ParamOutOfRange {
                family: "e-family".into(),
                value: 3,
                bound: "e >= 4".into()
            })
        );
        assert!(family_generators(Family::AFamily2, 4).is_err());
        assert!(family_row(Family::Type3Rootless, 7).is_err());
    }

    #[test]
    fn small_rows_match() {
        for f in [
            Family::EFamily,
            Family::AFamily1,
            Family::AFamily2,
            Family::Maxgen,
        ] {
            let lo = f.lower_bound();
            for row in family_table(f, lo, lo + 3).unwrap() {
                assert!(row.matches, "{row:?}");
            }
        }
        assert!(type3_row(2, 3, 7, 16).unwrap().matches);
    }

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
            assert_eq!(serde_json::to_value(f).unwrap(), json!(f.name()));
        }
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn type3_grid() {
        let grid = type3_parameter_grid(5, 0);
        assert_eq!(grid, vec![(2, 3, 7)]);
    }
}
