//! Three parametric families: the staircase semigroups
//! `S_{m,k,s} = {0, m, 2m, …, km, km+s+1, →}`, the intervals
//! `⟨m, …, 2m-5⟩` and the intervals `⟨2k+1, …, 3k+1⟩` with their divisor
//! witnesses. Each constructor attaches closed-form predictions; `validate`
//! recomputes every one of them from scratch.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::antiatom::{is_lambda_minimal, solve};
use crate::error::{Error, Result};
use crate::numset::NumericalSet;
use crate::partition::size_via_gap_count;
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Staircase { m: u32, k: u32, s: u32 },
    IntervalM { m: u32 },
    IntervalK { k: u32, l: u32 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Staircase { m, k, s } => write!(f, "staircase({m},{k},{s})"),
            Family::IntervalM { m } => write!(f, "interval_m({m})"),
            Family::IntervalK { k, l } => write!(f, "interval_k({k},{l})"),
        }
    }
}

/// A predicted value: a single integer or a sorted list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Prediction {
    Value(i64),
    List(Vec<i64>),
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prediction::Value(v) => write!(f, "{v}"),
            Prediction::List(v) => {
                let items: Vec<String> = v.iter().map(i64::to_string).collect();
                write!(f, "{{{}}}", items.join(","))
            }
        }
    }
}

fn list<I: IntoIterator<Item = u32>>(it: I) -> Prediction {
    Prediction::List(it.into_iter().map(i64::from).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyInstance {
    pub family: Family,
    pub semigroup: NumericalSemigroup,
    /// The numerical set of strictly smaller partition size, for `interval_k`.
    pub witness: Option<NumericalSet>,
    pub predicted: BTreeMap<&'static str, Prediction>,
}

/// Builds `S_{m,k,s}`. Requires `m ≥ 2`, `k ≥ 1`, `1 ≤ s ≤ m-1`.
pub fn staircase(m: u32, k: u32, s: u32) -> Result<FamilyInstance> {
    if m < 2 || k < 1 || s < 1 || s >= m {
        return Err(Error::OutOfDomain(format!(
            "staircase needs m >= 2, k >= 1, 1 <= s <= m-1; got ({m},{k},{s})"
        )));
    }
    let f = k * m + s;
    let semigroup = NumericalSemigroup::from_gaps((1..=f).filter(|x| x % m != 0 || *x > k * m))?;
    let pf = ((k - 1) * m + s + 1..k * m).chain(k * m + 1..=f);
    let predicted = BTreeMap::from([
        ("frobenius", Prediction::Value(f.into())),
        ("genus", Prediction::Value((k * (m - 1) + s).into())),
        ("pseudo_frobenius", list(pf)),
        ("type", Prediction::Value((m - 1).into())),
        ("lambda_minimal", Prediction::Value(1)),
    ]);
    Ok(FamilyInstance {
        family: Family::Staircase { m, k, s },
        semigroup,
        witness: None,
        predicted,
    })
}

/// Builds `⟨m, …, 2m-5⟩` for `m ≥ 9`.
pub fn interval_m(m: u32) -> Result<FamilyInstance> {
    if m < 9 {
        return Err(Error::OutOfDomain(format!("interval_m needs m >= 9; got {m}")));
    }
    let semigroup = NumericalSemigroup::from_generators(m..=2 * m - 5)?;
    let m64 = i64::from(m);
    let (low, base, high) = (4 * m64 - 5, 5 * m64 - 13, 5 * m64 - 7);
    let predicted = BTreeMap::from([
        ("frobenius", Prediction::Value(2 * m64 - 1)),
        ("gaps", list((1..m).chain(2 * m - 4..2 * m))),
        ("pseudo_frobenius", list(2 * m - 4..2 * m)),
        ("type", Prediction::Value(4)),
        ("depth", Prediction::Value(2)),
        ("pa", Prediction::Value(6)),
        ("base_size", Prediction::Value(base)),
        ("min_size", Prediction::Value(low)),
        ("sizes", Prediction::List(vec![low, low, base, base, high, high])),
        ("lambda_minimal", Prediction::Value(0)),
    ]);
    Ok(FamilyInstance {
        family: Family::IntervalM { m },
        semigroup,
        witness: None,
        predicted,
    })
}

/// `|λ(T)|` for the `interval_k` witness. The numerator is divisible by
/// `2ℓ²` whenever `ℓ | k`; anything else is an error.
pub fn interval_k_witness_size(k: u64, l: u64) -> Result<u64> {
    if l == 0 || !k.is_multiple_of(l) {
        return Err(Error::OutOfDomain(format!("{l} does not divide {k}")));
    }
    let (k, l) = (k as i128, l as i128);
    let numerator = 3 * k * k * l - k * k + 4 * k * l.pow(3) + 3 * k * l * l + k * l - 2 * l.pow(4)
        + 2 * l.pow(3);
    let denominator = 2 * l * l;
    if numerator % denominator != 0 {
        return Err(Error::PropertyViolated(format!(
            "{numerator} is not divisible by {denominator}"
        )));
    }
    Ok((numerator / denominator) as u64)
}

/// `|λ(S)| - |λ(T)|` for the `interval_k` witness, as
/// `(ℓ-1)(u-1)(2ℓu - 2ℓ - u) / 2` with `u = k/ℓ`.
pub fn interval_k_improvement(k: u64, l: u64) -> Result<i64> {
    if l == 0 || !k.is_multiple_of(l) {
        return Err(Error::OutOfDomain(format!("{l} does not divide {k}")));
    }
    let (l, u) = (l as i64, (k / l) as i64);
    let twice = (l - 1) * (u - 1) * (2 * l * u - 2 * l - u);
    if twice % 2 != 0 {
        return Err(Error::PropertyViolated(format!("{twice} is odd")));
    }
    Ok(twice / 2)
}

fn interval_k_semigroup(k: u32) -> Result<NumericalSemigroup> {
    NumericalSemigroup::from_generators(2 * k + 1..=3 * k + 1)
}

fn interval_k_witness(k: u32, l: u32) -> Result<NumericalSet> {
    // gaps of T: gaps of S minus {1..l-1} and minus the non-1-mod-l part of (3k+1, 4k+1]
    NumericalSet::from_gaps(
        (l.max(1)..=2 * k).chain((3 * k + 2..=4 * k + 1).filter(|x| x % l == 1 % l)),
    )
}

/// Builds `S = ⟨2k+1, …, 3k+1⟩` and `T = S ∪ {1..ℓ-1} ∪ {x ∈ (3k+1, 4k+1] : x ≢ 1 mod ℓ}`.
pub fn interval_k(k: u32, l: u32) -> Result<FamilyInstance> {
    if k < 4 || l == 0 || !k.is_multiple_of(l) {
        return Err(Error::OutOfDomain(format!(
            "interval_k needs k >= 4 and l | k; got ({k},{l})"
        )));
    }
    let semigroup = interval_k_semigroup(k)?;
    let witness = interval_k_witness(k, l)?;
    let k64 = u64::from(k);
    let predicted = BTreeMap::from([
        ("frobenius", Prediction::Value(4 * i64::from(k) + 1)),
        ("base_size", Prediction::Value((k64 * k64 + 4 * k64) as i64)),
        ("witness_size", Prediction::Value(interval_k_witness_size(k64, l.into())? as i64)),
        ("improvement", Prediction::Value(interval_k_improvement(k64, l.into())?)),
        ("witness_atom_monoid_is_s", Prediction::Value(1)),
        ("strictly_smaller", Prediction::Value(i64::from(l != 1 && l != k))),
    ]);
    Ok(FamilyInstance {
        family: Family::IntervalK { k, l },
        semigroup,
        witness: Some(witness),
        predicted,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationRow {
    pub name: &'static str,
    pub predicted: Prediction,
    pub computed: Prediction,
}

impl ValidationRow {
    pub fn ok(&self) -> bool {
        self.predicted == self.computed
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyValidation {
    pub family: Family,
    pub rows: Vec<ValidationRow>,
}

impl FamilyValidation {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(ValidationRow::ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ValidationRow> {
        self.rows.iter().filter(|r| !r.ok())
    }

    /// Plain-text prediction-vs-computed table.
    pub fn table(&self) -> String {
        let width = self.rows.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
        let mut out = format!("{}\n", self.family);
        out += &format!("{:width$}  {:>24}  {:>24}  ok\n", "name", "predicted", "computed");
        for r in &self.rows {
            out += &format!(
                "{:width$}  {:>24}  {:>24}  {}\n",
                r.name,
                r.predicted.to_string(),
                r.computed.to_string(),
                if r.ok() { "yes" } else { "NO" }
            );
        }
        out
    }
}

impl FamilyInstance {
    /// Recomputes every prediction with the general-purpose machinery.
    pub fn validate(&self) -> Result<FamilyValidation> {
        let s = &self.semigroup;
        let bool_value = |b: bool| Prediction::Value(i64::from(b));
        let mut computed: BTreeMap<&'static str, Prediction> = BTreeMap::new();
        for &name in self.predicted.keys() {
            let value = match name {
                "frobenius" => Prediction::Value(s.frobenius()),
                "genus" => Prediction::Value(s.genus() as i64),
                "gaps" => list(s.gaps().iter().copied()),
                "pseudo_frobenius" => list(s.pseudo_frobenius()?.iter().copied()),
                "type" => Prediction::Value(s.semigroup_type() as i64),
                "depth" => Prediction::Value(s.depth().into()),
                "lambda_minimal" => bool_value(is_lambda_minimal(s)?),
                "base_size" => Prediction::Value(size_via_gap_count(s) as i64),
                _ => continue,
            };
            computed.insert(name, value);
        }
        if matches!(self.family, Family::IntervalM { .. }) {
            let solution = solve(s)?;
            computed.insert("pa", Prediction::Value(solution.pa as i64));
            computed.insert("min_size", Prediction::Value(solution.min_size as i64));
            computed.insert(
                "sizes",
                Prediction::List(solution.sizes().into_iter().map(|v| v as i64).collect()),
            );
            computed.insert("lambda_minimal", bool_value(solution.lambda_minimal));
        }
        if let Some(t) = &self.witness {
            let base = size_via_gap_count(s) as i64;
            let size = size_via_gap_count(t) as i64;
            computed.insert("witness_size", Prediction::Value(size));
            computed.insert("improvement", Prediction::Value(base - size));
            computed.insert("witness_atom_monoid_is_s", bool_value(t.atom_monoid() == *s));
            computed.insert("strictly_smaller", bool_value(size < base));
        }
        let rows = self
            .predicted
            .iter()
            .map(|(&name, predicted)| ValidationRow {
                name,
                predicted: predicted.clone(),
                computed: computed
                    .remove(name)
                    .unwrap_or(Prediction::List(Vec::new())),
            })
            .collect();
        Ok(FamilyValidation {
            family: self.family,
            rows,
        })
    }
}

/// One point of the `|λ(T)| ≈ 2√3·|λ(S)|^{3/4}` trend along
/// `k = 12ℓ₁²`, `ℓ = 3ℓ₁`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrendPoint {
    pub l1: u32,
    pub k: u32,
    pub l: u32,
    pub base_size: u64,
    pub witness_size: u64,
    pub ratio: f64,
}

/// Sizes are computed from the numerical sets themselves, then checked
/// against the closed forms.
pub fn asymptotic_trend(l1: u32) -> Result<TrendPoint> {
    if l1 == 0 {
        return Err(Error::OutOfDomain("l1 must be positive".into()));
    }
    let (k, l) = (12 * l1 * l1, 3 * l1);
    let s = interval_k_semigroup(k)?;
    let t = interval_k_witness(k, l)?;
    let base_size = size_via_gap_count(&s);
    let witness_size = size_via_gap_count(&t);
    let k64 = u64::from(k);
    if base_size != k64 * k64 + 4 * k64 || witness_size != interval_k_witness_size(k64, l.into())? {
        return Err(Error::PropertyViolated(format!(
            "interval_k({k},{l}) sizes disagree with the closed form"
        )));
    }
    let ratio = witness_size as f64 / (2.0 * 3f64.sqrt() * (base_size as f64).powf(0.75));
    Ok(TrendPoint {
        l1,
        k,
        l,
        base_size,
        witness_size,
        ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn staircase_examples() {
        let s = staircase(2, 3, 1).unwrap();
        assert_eq!(s.semigroup.to_string(), "<2,9>");
        assert_eq!(s.semigroup.frobenius(), 7);
        for k in 1..=4 {
            assert_eq!(staircase(5, k, 4).unwrap().semigroup.semigroup_type(), 4);
        }
        assert!(staircase(1, 1, 1).is_err());
        assert!(staircase(4, 0, 1).is_err());
        assert!(staircase(4, 2, 4).is_err());
        assert!(staircase(4, 2, 0).is_err());
    }

    #[test]
    fn staircase_grid_validates() {
        for m in 2..=6 {
            for k in 1..=4 {
                for s in 1..m {
                    let v = staircase(m, k, s).unwrap().validate().unwrap();
                    assert!(v.ok(), "{}", v.table());
                }
            }
        }
    }

    #[test]
    fn interval_m_small_cases() {
        assert!(interval_m(8).is_err());
        let nine = interval_m(9).unwrap();
        assert_eq!(nine.predicted["pseudo_frobenius"], Prediction::List(vec![14, 15, 16, 17]));
        assert_eq!(nine.predicted["sizes"], Prediction::List(vec![31, 31, 32, 32, 38, 38]));
        let v = nine.validate().unwrap();
        assert!(v.ok(), "{}", v.table());
        let ten = interval_m(10).unwrap().validate().unwrap();
        assert!(ten.ok(), "{}", ten.table());
        assert_eq!(interval_m(10).unwrap().predicted["base_size"], Prediction::Value(37));
        assert_eq!(interval_m(10).unwrap().predicted["min_size"], Prediction::Value(35));
    }

    #[test]
    fn interval_k_example() {
        let inst = interval_k(4, 2).unwrap();
        assert_eq!(inst.semigroup.to_string(), "<9,10,11,12,13>");
        let t = inst.witness.as_ref().unwrap();
        let expected = NumericalSet::from_gaps((2..=8).chain([15, 17])).unwrap();
        assert_eq!(t, &expected);
        assert_eq!(interval_k_witness_size(4, 2).unwrap(), 31);
        assert!(inst.validate().unwrap().ok());
        assert!(interval_k(6, 4).is_err());
        assert!(interval_k(3, 1).is_err());
    }

    #[test]
    fn trivial_divisors() {
        for k in 4..=10u32 {
            let one = interval_k(k, 1).unwrap();
            assert_eq!(one.witness.as_ref().unwrap().gaps(), one.semigroup.gaps());
            let all = interval_k(k, k).unwrap();
            assert_eq!(all.witness.unwrap(), all.semigroup.dual().unwrap());
            assert_eq!(interval_k_improvement(k.into(), 1).unwrap(), 0);
            assert_eq!(interval_k_improvement(k.into(), k.into()).unwrap(), 0);
        }
    }

    #[test]
    fn closed_forms_divide_exactly() {
        for k in 1..=200u64 {
            for l in (1..=k).filter(|l| k % l == 0) {
                let size = interval_k_witness_size(k, l).unwrap() as i64;
                let base = (k * k + 4 * k) as i64;
                assert_eq!(base - size, interval_k_improvement(k, l).unwrap(), "k={k} l={l}");
            }
        }
        assert!(interval_k_witness_size(6, 4).is_err());
    }

    #[test]
    fn trend_points_match_closed_forms() {
        let p = asymptotic_trend(1).unwrap();
        assert_eq!((p.k, p.l, p.base_size, p.witness_size), (12, 3, 192, 150));
        let p2 = asymptotic_trend(2).unwrap();
        assert!(p2.ratio > p.ratio);
    }
}
