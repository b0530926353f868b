//! Exhaustive generation of numerical semigroups by genus or Frobenius
//! number, and λ-minimality scans over the result.
//!
//! The semigroup tree: the root is `N`, and the children of `S` are
//! `S \ {x}` for each minimal generator `x > F(S)`. Each semigroup appears
//! exactly once, at depth equal to its genus, and Frobenius numbers strictly
//! increase along every branch.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::antiatom::is_lambda_minimal;
use crate::error::{Error, Result};
use crate::numset::NumericalSet;
use crate::semigroup::NumericalSemigroup;

/// Largest genus the tree walk supports (membership fits in 128 bits).
pub const MAX_GENUS: u32 = 40;
/// Largest Frobenius number the tree walk supports.
pub const MAX_FROBENIUS: u32 = 60;

/// Below this depth children are explored in parallel.
const PARALLEL_DEPTH: u32 = 6;

/// Membership of `[0, 128)`; everything above is an element.
#[derive(Clone, Copy)]
struct Node {
    members: u128,
    frobenius: i32,
    genus: u32,
    multiplicity: u32,
}

impl Node {
    fn root() -> Self {
        Node {
            members: u128::MAX,
            frobenius: -1,
            genus: 0,
            multiplicity: 1,
        }
    }

    #[inline]
    fn contains(&self, x: u32) -> bool {
        x >= 128 || self.members >> x & 1 == 1
    }

    /// Minimal generators above the Frobenius number, ascending; they lie in
    /// `(F, F + m]`.
    fn effective_generators(&self) -> impl Iterator<Item = u32> + '_ {
        let lo = (self.frobenius + 1) as u32;
        (lo..=lo + self.multiplicity).filter(move |&x| {
            x > 0
                && self.contains(x)
                && !(self.multiplicity..=x / 2).any(|a| self.contains(a) && self.contains(x - a))
        })
    }

    fn child(&self, x: u32) -> Node {
        let multiplicity = if x == self.multiplicity {
            (x + 1..).find(|&y| self.contains(y)).unwrap()
        } else {
            self.multiplicity
        };
        Node {
            members: self.members & !(1u128 << x),
            frobenius: x as i32,
            genus: self.genus + 1,
            multiplicity,
        }
    }

    fn to_semigroup(self) -> NumericalSemigroup {
        let gaps = (1..128).filter(|&x| !self.contains(x)).collect();
        NumericalSemigroup::from_set_unchecked(NumericalSet::from_sorted_gaps(gaps))
    }
}

/// Collects every node below `node` (itself included) accepted by `keep`,
/// descending only into children allowed by `descend`.
fn walk<K, D>(node: Node, keep: &K, descend: &D, out: &mut Vec<Node>)
where
    K: Fn(&Node) -> bool + Sync,
    D: Fn(&Node, u32) -> bool + Sync,
{
    if keep(&node) {
        out.push(node);
    }
    let children: Vec<Node> = node
        .effective_generators()
        .filter(|&x| descend(&node, x))
        .map(|x| node.child(x))
        .collect();
    if node.genus < PARALLEL_DEPTH {
        let found: Vec<Vec<Node>> = children
            .into_par_iter()
            .map(|c| {
                let mut v = Vec::new();
                walk(c, keep, descend, &mut v);
                v
            })
            .collect();
        out.extend(found.into_iter().flatten());
    } else {
        for c in children {
            walk(c, keep, descend, out);
        }
    }
}

fn collect_sorted(nodes: Vec<Node>) -> Vec<NumericalSemigroup> {
    let mut out: Vec<NumericalSemigroup> = nodes.into_par_iter().map(Node::to_semigroup).collect();
    out.sort_unstable();
    out
}

/// Every semigroup of genus exactly `g`, sorted by gap list.
pub fn semigroups_by_genus(g: u32) -> Result<Vec<NumericalSemigroup>> {
    check_bound(EnumerationMode::Genus, g)?;
    let mut nodes = Vec::new();
    walk(
        Node::root(),
        &|n: &Node| n.genus == g,
        &|n: &Node, _| n.genus < g,
        &mut nodes,
    );
    Ok(collect_sorted(nodes))
}

/// Every semigroup with Frobenius number exactly `f`, sorted by gap list.
pub fn semigroups_by_frobenius(f: u32) -> Result<Vec<NumericalSemigroup>> {
    check_bound(EnumerationMode::Frobenius, f)?;
    let mut nodes = Vec::new();
    walk(
        Node::root(),
        &|n: &Node| n.frobenius == f as i32,
        &|_, x| x <= f,
        &mut nodes,
    );
    Ok(collect_sorted(nodes))
}

fn check_bound(mode: EnumerationMode, bound: u32) -> Result<()> {
    let max = match mode {
        EnumerationMode::Genus => MAX_GENUS,
        EnumerationMode::Frobenius => MAX_FROBENIUS,
    };
    if bound > max {
        return Err(Error::OutOfDomain(format!("{mode} bound {bound} exceeds {max}")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumerationMode {
    Genus,
    Frobenius,
}

impl fmt::Display for EnumerationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnumerationMode::Genus => "genus",
            EnumerationMode::Frobenius => "frobenius",
        })
    }
}

/// Restriction applied to the enumerated semigroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SemigroupFilter {
    Depth(u32),
    Type(usize),
    Multiplicity(u32),
    SmallElements(usize),
}

impl SemigroupFilter {
    pub fn accepts(&self, s: &NumericalSemigroup) -> bool {
        match *self {
            SemigroupFilter::Depth(d) => s.depth() == d,
            SemigroupFilter::Type(t) => s.semigroup_type() == t,
            SemigroupFilter::Multiplicity(m) => s.multiplicity() == m,
            SemigroupFilter::SmallElements(n) => s.small_elements().len() == n,
        }
    }
}

/// `depth=2`, `type=3`, `multiplicity=5`, `small=3`.
impl FromStr for SemigroupFilter {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let (name, value) = text.split_once('=').ok_or_else(|| err("expected name=value"))?;
        let value: u32 = value.trim().parse().map_err(|_| err("bad value"))?;
        match name.trim() {
            "depth" => Ok(SemigroupFilter::Depth(value)),
            "type" => Ok(SemigroupFilter::Type(value as usize)),
            "multiplicity" | "m" => Ok(SemigroupFilter::Multiplicity(value)),
            "small" | "small_elements" => Ok(SemigroupFilter::SmallElements(value as usize)),
            _ => Err(err("unknown filter")),
        }
    }
}

/// Semigroups with `1 ≤ genus ≤ bound` (or `1 ≤ F ≤ bound`); `N` is never
/// included. `only` keeps a single bucket.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationQuery {
    pub mode: EnumerationMode,
    pub bound: u32,
    pub only: Option<u32>,
    pub filter: Option<SemigroupFilter>,
}

impl EnumerationQuery {
    pub fn by_genus(bound: u32) -> Self {
        EnumerationQuery {
            mode: EnumerationMode::Genus,
            bound,
            only: None,
            filter: None,
        }
    }

    pub fn by_frobenius(bound: u32) -> Self {
        EnumerationQuery {
            mode: EnumerationMode::Frobenius,
            ..Self::by_genus(bound)
        }
    }

    pub fn only(mut self, bucket: u32) -> Self {
        self.only = Some(bucket);
        self
    }

    pub fn filter(mut self, filter: SemigroupFilter) -> Self {
        self.filter = Some(filter);
        self
    }

    fn buckets(&self) -> Result<Vec<u32>> {
        if self.bound == 0 {
            return Err(Error::OutOfDomain("bound must be at least 1".into()));
        }
        check_bound(self.mode, self.bound)?;
        match self.only {
            Some(b) if b == 0 || b > self.bound => Err(Error::OutOfDomain(format!(
                "bucket {b} is outside 1..={}",
                self.bound
            ))),
            Some(b) => Ok(vec![b]),
            None => Ok((1..=self.bound).collect()),
        }
    }

    pub fn bucket_of(&self, s: &NumericalSemigroup) -> u32 {
        match self.mode {
            EnumerationMode::Genus => s.genus() as u32,
            EnumerationMode::Frobenius => s.frobenius() as u32,
        }
    }

    /// The semigroups of each bucket, filtered.
    pub fn run(&self) -> Result<BTreeMap<u32, Vec<NumericalSemigroup>>> {
        self.buckets()?
            .into_iter()
            .map(|b| {
                let mut all = match self.mode {
                    EnumerationMode::Genus => semigroups_by_genus(b)?,
                    EnumerationMode::Frobenius => semigroups_by_frobenius(b)?,
                };
                if let Some(filter) = self.filter {
                    all.retain(|s| filter.accepts(s));
                }
                Ok((b, all))
            })
            .collect()
    }

    /// All semigroups of the query in bucket order, each bucket sorted by gaps.
    pub fn semigroups(&self) -> Result<Vec<NumericalSemigroup>> {
        Ok(self.run()?.into_values().flatten().collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BucketCount {
    pub bucket: u32,
    pub semigroups: usize,
    pub non_minimal: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub query: EnumerationQuery,
    pub buckets: Vec<BucketCount>,
    pub total: usize,
    /// Failing semigroups, sorted by gap list.
    pub non_minimal: Vec<NumericalSemigroup>,
}

/// Runs [`is_lambda_minimal`] on every semigroup of the query.
pub fn scan_minimality(query: &EnumerationQuery) -> Result<ScanReport> {
    let mut buckets = Vec::new();
    let mut non_minimal = Vec::new();
    for (bucket, semigroups) in query.run()? {
        let flags: Vec<bool> = semigroups
            .par_iter()
            .map(is_lambda_minimal)
            .collect::<Result<_>>()?;
        let failing: Vec<NumericalSemigroup> = semigroups
            .iter()
            .zip(&flags)
            .filter(|(_, &ok)| !ok)
            .map(|(s, _)| s.clone())
            .collect();
        buckets.push(BucketCount {
            bucket,
            semigroups: semigroups.len(),
            non_minimal: failing.len(),
        });
        non_minimal.extend(failing);
    }
    non_minimal.sort_unstable();
    Ok(ScanReport {
        query: query.clone(),
        total: buckets.iter().map(|b| b.semigroups).sum(),
        buckets,
        non_minimal,
    })
}
