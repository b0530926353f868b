//! Integer partitions and the profile-walk bijection with numerical sets.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numset::NumericalSet;

/// Weakly decreasing positive parts, stored row by row.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartitionRepr", into = "PartitionRepr")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                "parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Column lengths: `λ'_i = #{j : λ_j ≥ i}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Side of the largest square in the Young diagram.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i)
            .count()
    }

    /// Hook length of every box, row by row, from arm and leg counts.
    pub fn hook_lengths(&self) -> Vec<Vec<u32>> {
        let columns = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row as usize)
                    .map(|j| {
                        let arm = row - 1 - j as u32;
                        let leg = columns.parts[j] - 1 - i as u32;
                        arm + leg + 1
                    })
                    .collect()
            })
            .collect()
    }

    pub fn hook_set(&self) -> BTreeSet<u32> {
        self.hook_lengths().into_iter().flatten().collect()
    }

    /// Sorted multiset of hook lengths.
    pub fn hook_multiset(&self) -> Vec<u32> {
        let mut hooks: Vec<u32> = self.hook_lengths().into_iter().flatten().collect();
        hooks.sort_unstable();
        hooks
    }

    /// ASCII Young diagram, first row on top.
    pub fn render(&self, hooks: bool) -> String {
        let mut out = String::new();
        if hooks {
            let lengths = self.hook_lengths();
            let width = lengths
                .iter()
                .flatten()
                .map(|h| h.to_string().len())
                .max()
                .unwrap_or(1);
            for row in lengths {
                let cells: Vec<String> = row.iter().map(|h| format!("{h:>width$}")).collect();
                out.push_str(&cells.join(" "));
                out.push('\n');
            }
        } else {
            for &p in &self.parts {
                out.push_str(&"#".repeat(p as usize));
                out.push('\n');
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    parts: Vec<u32>,
}

impl From<Partition> for PartitionRepr {
    fn from(p: Partition) -> Self {
        PartitionRepr { parts: p.parts }
    }
}

impl TryFrom<PartitionRepr> for Partition {
    type Error = Error;

    fn try_from(repr: PartitionRepr) -> Result<Self> {
        Partition::new(repr.parts)
    }
}

/// `λ(T)`: walk `0, 1, 2, …`, stepping right on elements and up on gaps;
/// every up step closes a row as long as the number of right steps so far.
pub fn enumeration(t: &NumericalSet) -> Partition {
    let Some(f) = t.frobenius_gap() else {
        return Partition::empty();
    };
    let mut rights = 0;
    let mut rows = Vec::with_capacity(t.genus());
    for n in 0..=f {
        if t.contains(n) {
            rights += 1;
        } else {
            rows.push(rights);
        }
    }
    rows.reverse();
    Partition { parts: rows }
}

/// Inverse of [`enumeration`]. The `j`-th smallest part (from 0) belongs to
/// the gap `part + j`.
pub fn numerical_set_of(lambda: &Partition) -> NumericalSet {
    let gaps = lambda
        .parts
        .iter()
        .rev()
        .enumerate()
        .map(|(j, &p)| p + j as u32)
        .collect();
    NumericalSet::from_sorted_gaps(gaps)
}

/// `|λ(T)| = Σ_{x ∈ G(T)} #{u ∈ T : u < x}`, without building the partition.
pub fn size_via_gap_count(t: &NumericalSet) -> u64 {
    t.gaps()
        .iter()
        .enumerate()
        .map(|(i, &x)| (x - i as u32) as u64)
        .sum()
}

/// Length of the hook of the box `(u, x)`.
pub fn hook_length(t: &NumericalSet, u: u32, x: u32) -> Result<u32> {
    if t.contains(u) && t.is_gap(x) && u < x {
        Ok(x - u)
    } else {
        Err(Error::NotABox { u, x })
    }
}

/// The hook set of `λ(T)` read off the boxes `(u, x)`.
pub fn box_hook_set(t: &NumericalSet) -> BTreeSet<u32> {
    t.gaps()
        .iter()
        .flat_map(|&x| t.elements_below(x).map(move |u| x - u))
        .collect()
}

/// Right/up steps of the walk over `0..=F`.
pub fn profile_walk(t: &NumericalSet) -> String {
    let top = t.frobenius_gap().map_or(0, |f| f + 1);
    (0..top)
        .map(|n| if t.contains(n) { 'R' } else { 'U' })
        .collect()
}
