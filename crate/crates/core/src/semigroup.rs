//! Numerical semigroups and their derived invariants.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numset::NumericalSet;

/// A numerical set closed under addition.
///
/// Pseudo-Frobenius numbers, the void and the minimal generators are
/// computed once at construction; they are pure functions of the gap set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "SemigroupRepr", try_from = "SemigroupRepr")]
pub struct NumericalSemigroup {
    set: NumericalSet,
    minimal_generators: Vec<u32>,
    pf: Vec<u32>,
    void: Vec<u32>,
}

impl NumericalSemigroup {
    pub fn naturals() -> Self {
        Self::from_set_unchecked(NumericalSet::naturals())
    }

    /// The monoid of nonnegative integer combinations of `gens`.
    ///
    /// Membership is sieved up to `2 · max · min`, which lies above the
    /// Frobenius number of any cofinite monoid with these generators.
    pub fn from_generators<I: IntoIterator<Item = u32>>(gens: I) -> Result<Self> {
        let mut gens: Vec<u32> = gens.into_iter().filter(|&g| g > 0).collect();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let d = gens.iter().fold(0, |a, &b| gcd(a, b));
        if d != 1 {
            return Err(Error::NotCofinite(d));
        }
        let bound = 2 * (gens[0] as usize) * (*gens.last().unwrap() as usize);
        let mut reachable = vec![false; bound + 1];
        reachable[0] = true;
        for n in 1..=bound {
            reachable[n] = gens
                .iter()
                .take_while(|&&g| g as usize <= n)
                .any(|&g| reachable[n - g as usize]);
        }
        let gaps = (1..=bound as u32).filter(|&n| !reachable[n as usize]).collect();
        Ok(Self::from_set_unchecked(NumericalSet::from_sorted_gaps(gaps)))
    }

    pub fn from_gaps<I: IntoIterator<Item = u32>>(gaps: I) -> Result<Self> {
        Self::try_from(NumericalSet::from_gaps(gaps)?)
    }

    /// Caller guarantees `set` is closed under addition.
    pub(crate) fn from_set_unchecked(set: NumericalSet) -> Self {
        debug_assert!(set.is_semigroup(), "{set} is not a semigroup");
        let minimal_generators = minimal_generators(&set);
        let pf = pseudo_frobenius(&set);
        let void = match set.frobenius_gap() {
            None => Vec::new(),
            Some(f) => set
                .gaps()
                .iter()
                .copied()
                .filter(|&x| set.is_gap(f - x))
                .collect(),
        };
        NumericalSemigroup {
            set,
            minimal_generators,
            pf,
            void,
        }
    }

    pub fn as_set(&self) -> &NumericalSet {
        &self.set
    }

    pub fn into_set(self) -> NumericalSet {
        self.set
    }

    pub fn minimal_generators(&self) -> &[u32] {
        &self.minimal_generators
    }

    /// Gaps `P` with `P + s ∈ S` for every nonzero `s ∈ S`.
    pub fn pseudo_frobenius(&self) -> Result<&[u32]> {
        if self.is_naturals() {
            return Err(Error::UndefinedForNaturals("PF"));
        }
        Ok(&self.pf)
    }

    /// Number of pseudo-Frobenius numbers; 0 for the naturals.
    pub fn semigroup_type(&self) -> usize {
        self.pf.len()
    }

    /// Pseudo-Frobenius numbers whose double lies in `S`, i.e. the gaps `h`
    /// for which `S ∪ {h}` is again a semigroup. Empty for the naturals.
    pub fn special_gaps(&self) -> Vec<u32> {
        self.pf
            .iter()
            .copied()
            .filter(|&p| self.contains(2 * p))
            .collect()
    }

    /// The void `{x ∈ G(S) : F - x ∈ G(S)}`; empty for the naturals.
    pub fn void(&self) -> &[u32] {
        &self.void
    }

    pub fn is_symmetric(&self) -> bool {
        !self.is_naturals() && self.void.is_empty()
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Minimal generators all lie in `[m, F + m]`.
fn minimal_generators(s: &NumericalSet) -> Vec<u32> {
    let m = s.multiplicity();
    let top = s.frobenius_gap().map_or(0, |f| f + 1) + m;
    (m..=top)
        .filter(|&x| s.contains(x))
        .filter(|&x| !(m..=x / 2).any(|a| s.contains(a) && s.contains(x - a)))
        .collect()
}

fn pseudo_frobenius(s: &NumericalSet) -> Vec<u32> {
    let small = s.small_elements();
    s.gaps()
        .iter()
        .copied()
        .filter(|&p| small.iter().all(|&e| s.contains(p + e)))
        .collect()
}

impl Deref for NumericalSemigroup {
    type Target = NumericalSet;

    fn deref(&self) -> &NumericalSet {
        &self.set
    }
}

impl TryFrom<NumericalSet> for NumericalSemigroup {
    type Error = Error;

    fn try_from(set: NumericalSet) -> Result<Self> {
        if !set.is_semigroup() {
            return Err(Error::NotASemigroup(set.to_string()));
        }
        Ok(Self::from_set_unchecked(set))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.minimal_generators.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

/// Generators, comma separated, optionally in angle brackets: `<3,5,7>`.
impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let inner = text.trim();
        let inner = match (inner.strip_prefix(['<', '⟨']), inner.ends_with(['>', '⟩'])) {
            (Some(rest), true) => rest.trim_end_matches(['>', '⟩']),
            (None, false) => inner,
            _ => return Err(err("unbalanced brackets")),
        };
        let gens = inner
            .split(',')
            .map(|g| g.trim().parse::<u32>().map_err(|_| err("expected a generator")))
            .collect::<Result<Vec<u32>>>()?;
        Self::from_generators(gens)
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct SemigroupRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gaps: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<u32>>,
}

impl From<NumericalSemigroup> for SemigroupRepr {
    fn from(s: NumericalSemigroup) -> Self {
        SemigroupRepr {
            gaps: Some(s.gaps().to_vec()),
            generators: Some(s.minimal_generators),
        }
    }
}

impl TryFrom<SemigroupRepr> for NumericalSemigroup {
    type Error = Error;

    fn try_from(repr: SemigroupRepr) -> Result<Self> {
        let parse_err = |reason: &str| Error::Parse {
            input: "semigroup JSON".into(),
            reason: reason.into(),
        };
        match (repr.gaps, repr.generators) {
            (Some(gaps), generators) => {
                let s = NumericalSemigroup::from_gaps(gaps)?;
                if let Some(gens) = generators {
                    if NumericalSemigroup::from_generators(gens)? != s {
                        return Err(parse_err("gaps and generators disagree"));
                    }
                }
                Ok(s)
            }
            (None, Some(gens)) => NumericalSemigroup::from_generators(gens),
            (None, None) => Err(parse_err("expected \"gaps\" or \"generators\"")),
        }
    }
}
