//! Numerical sets: subsets of the nonnegative integers that contain 0 and
//! have finite complement.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A numerical set `T`, stored by its gap set `N \ T`.
///
/// Membership is answered from a bitset covering `[0, F + 1]`; everything
/// above the Frobenius number is an element.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "SetRepr", try_from = "SetRepr")]
pub struct NumericalSet {
    gaps: Vec<u32>,
    members: BitSet,
}

impl NumericalSet {
    /// The set of all nonnegative integers.
    pub fn naturals() -> Self {
        Self::from_sorted_gaps(Vec::new())
    }

    pub fn from_gaps<I: IntoIterator<Item = u32>>(gaps: I) -> Result<Self> {
        let mut gaps: Vec<u32> = gaps.into_iter().collect();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.first() == Some(&0) {
            return Err(Error::ZeroGap);
        }
        Ok(Self::from_sorted_gaps(gaps))
    }

    /// Builds the set from its elements in `[0, bound)`, everything at or
    /// above `bound` being an element.
    pub fn from_membership<F: Fn(u32) -> bool>(bound: u32, member: F) -> Result<Self> {
        Self::from_gaps((0..bound).filter(|&x| !member(x)))
    }

    pub(crate) fn from_sorted_gaps(gaps: Vec<u32>) -> Self {
        debug_assert!(gaps.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(gaps.first() != Some(&0));
        let len = gaps.last().map_or(1, |&f| f as usize + 2);
        let mut members = BitSet::new(len);
        for i in 0..len {
            members.set(i, true);
        }
        for &g in &gaps {
            members.set(g as usize, false);
        }
        NumericalSet { gaps, members }
    }

    /// Sorted gaps.
    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn is_naturals(&self) -> bool {
        self.gaps.is_empty()
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        x as usize >= self.members.len() || self.members.get(x as usize)
    }

    #[inline]
    pub fn is_gap(&self, x: u32) -> bool {
        !self.contains(x)
    }

    /// Largest gap, or -1 for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.gaps.last().map_or(-1, |&f| f as i64)
    }

    /// Largest gap, if any.
    pub fn frobenius_gap(&self) -> Option<u32> {
        self.gaps.last().copied()
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u32 {
        (1..).find(|&x| self.contains(x)).expect("cofinite set")
    }

    /// The unique `q` with `(q - 1) m <= F < q m`; 0 for the naturals.
    pub fn depth(&self) -> u32 {
        match self.frobenius_gap() {
            None => 0,
            Some(f) => f / self.multiplicity() + 1,
        }
    }

    /// Elements of `T` below `bound`, ascending.
    pub fn elements_below(&self, bound: u32) -> impl Iterator<Item = u32> + '_ {
        (0..bound).filter(move |&x| self.contains(x))
    }

    /// Positive elements below the Frobenius number.
    pub fn small_elements(&self) -> Vec<u32> {
        match self.frobenius_gap() {
            None => Vec::new(),
            Some(f) => self.elements_below(f).filter(|&x| x > 0).collect(),
        }
    }

    /// Closure under addition. Only sums at most `F` need checking.
    pub fn is_semigroup(&self) -> bool {
        let Some(f) = self.frobenius_gap() else {
            return true;
        };
        let small = self.small_elements();
        small.iter().all(|&a| {
            small
                .iter()
                .take_while(|&&b| b <= a && a + b <= f)
                .all(|&b| self.contains(a + b))
        })
    }

    /// The atom monoid `{x : x + T ⊆ T}`.
    ///
    /// `x` belongs to it iff `x ∈ T` and no gap `g > x` has `g - x ∈ T`.
    pub fn atom_monoid(&self) -> NumericalSemigroup {
        let bound = self.frobenius_gap().map_or(0, |f| f + 1);
        let atoms = NumericalSet::from_membership(bound, |x| {
            self.contains(x)
                && self
                    .gaps
                    .iter()
                    .rev()
                    .take_while(|&&g| g > x)
                    .all(|&g| !self.contains(g - x))
        })
        .expect("0 is always an atom");
        NumericalSemigroup::from_set_unchecked(atoms)
    }

    /// The dual `T* = {x : F - x ∉ T}`. Its gaps are the `x ≤ F` with `F - x ∈ T`.
    pub fn dual(&self) -> Result<NumericalSet> {
        let f = self
            .frobenius_gap()
            .ok_or(Error::UndefinedForNaturals("the dual"))?;
        Ok(NumericalSet::from_sorted_gaps(
            (0..=f).filter(|&x| self.contains(f - x)).collect(),
        ))
    }

    pub fn is_subset_of(&self, other: &NumericalSet) -> bool {
        other.gaps.iter().all(|&g| self.is_gap(g))
    }
}

impl Ord for NumericalSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gaps.cmp(&other.gaps)
    }
}

impl PartialOrd for NumericalSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `{0,5,7,9,->}`: every element up to `F + 1`, then the arrow.
impl fmt::Display for NumericalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self.frobenius_gap().map_or(0, |g| g + 1);
        f.write_str("{")?;
        for x in self.elements_below(top + 1) {
            write!(f, "{x},")?;
        }
        f.write_str("->}")
    }
}

impl fmt::Debug for NumericalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSet{self}")
    }
}

impl FromStr for NumericalSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let body = s
            .trim()
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .ok_or_else(|| err("expected braces"))?;
        let mut items: Vec<&str> = body.split(',').map(str::trim).collect();
        match items.pop() {
            Some("->") | Some("→") => {}
            _ => return Err(err("a numerical set must end with ->")),
        }
        let elements = items
            .iter()
            .map(|t| t.parse::<u32>().map_err(|_| err("bad element")))
            .collect::<Result<Vec<_>>>()?;
        if elements.first() != Some(&0) {
            return Err(err("a numerical set must start with 0"));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(err("elements must be strictly increasing"));
        }
        let tail = *elements.last().unwrap();
        NumericalSet::from_membership(tail, |x| elements.binary_search(&x).is_ok())
    }
}

/// JSON forms: `{"gaps": [...]}` canonically, `{"generators": [...]}` on input.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum SetRepr {
    Gaps { gaps: Vec<u32> },
    Generators { generators: Vec<u32> },
}

impl From<NumericalSet> for SetRepr {
    fn from(t: NumericalSet) -> Self {
        SetRepr::Gaps { gaps: t.gaps }
    }
}

impl TryFrom<SetRepr> for NumericalSet {
    type Error = Error;

    fn try_from(repr: SetRepr) -> Result<Self> {
        match repr {
            SetRepr::Gaps { gaps } => NumericalSet::from_gaps(gaps),
            SetRepr::Generators { generators } => {
                Ok(NumericalSemigroup::from_generators(generators)?.into_set())
            }
        }
    }
}
