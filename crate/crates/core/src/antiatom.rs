//! All numerical sets with a given atom monoid, the sizes of their
//! partitions, and λ-minimality.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numset::NumericalSet;
use crate::partition::{enumeration, size_via_gap_count, Partition};
use crate::semigroup::NumericalSemigroup;
use crate::voidposet::{OrderIdeal, VoidPoset};

/// One numerical set `T = S ∪ I` with `A(T) = S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssociatedSetReport {
    pub ideal: OrderIdeal,
    pub numerical_set: NumericalSet,
    pub partition_size: u64,
    pub self_dual: bool,
    /// Index of the report for the dual ideal `I*`.
    pub dual_index: usize,
}

impl AssociatedSetReport {
    pub fn partition(&self) -> Partition {
        enumeration(&self.numerical_set)
    }
}

#[derive(Clone, Debug)]
pub struct AntiAtomSolution {
    pub semigroup: NumericalSemigroup,
    /// Reports sorted by ideal member list; the first is always `I = ∅`.
    pub reports: Vec<AssociatedSetReport>,
    pub pa: usize,
    /// `|λ(S)|`.
    pub base_size: u64,
    pub min_size: u64,
    pub lambda_minimal: bool,
    /// Smallest report by size, ties broken by the ideal's member list.
    pub witness_index: usize,
}

impl AntiAtomSolution {
    /// Partition sizes, ascending.
    pub fn sizes(&self) -> Vec<u64> {
        let mut sizes: Vec<u64> = self.reports.iter().map(|r| r.partition_size).collect();
        sizes.sort_unstable();
        sizes
    }

    pub fn witness(&self) -> &AssociatedSetReport {
        &self.reports[self.witness_index]
    }

    pub fn summary(&self) -> SolutionSummary {
        SolutionSummary {
            semigroup: self.semigroup.clone(),
            pa: self.pa,
            sizes: self.sizes(),
            base_size: self.base_size,
            min_size: self.min_size,
            lambda_minimal: self.lambda_minimal,
            witness_ideal: self.witness().ideal.members().to_vec(),
        }
    }
}

/// JSON report of a solution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionSummary {
    pub semigroup: NumericalSemigroup,
    pub pa: usize,
    pub sizes: Vec<u64>,
    pub base_size: u64,
    pub min_size: u64,
    pub lambda_minimal: bool,
    pub witness_ideal: Vec<u32>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SolveOptions {
    /// Check every order ideal's classification against `A(S ∪ I) = S`.
    pub cross_check: bool,
}

/// Partition sizes of `S ∪ I` straight from the gap list of `S`.
struct SizeTable {
    // each gap of S with its void position, if any
    gaps: Vec<(u32, Option<u32>)>,
}

impl SizeTable {
    fn new(poset: &VoidPoset) -> Self {
        let void = poset.elements();
        let gaps = poset
            .semigroup()
            .gaps()
            .iter()
            .map(|&g| (g, void.binary_search(&g).ok().map(|i| i as u32)))
            .collect();
        SizeTable { gaps }
    }

    /// `Σ_{x ∈ G(T)} #{u ∈ T : u < x}`; the `j`-th gap of `T` contributes `x - j`.
    fn size(&self, mask: u64) -> u64 {
        let mut total = 0;
        let mut kept = 0;
        for &(g, pos) in &self.gaps {
            if pos.is_some_and(|i| mask >> i & 1 == 1) {
                continue;
            }
            total += (g - kept) as u64;
            kept += 1;
        }
        total
    }
}

fn cross_check(poset: &VoidPoset, mask: u64, associated: bool) -> Result<()> {
    let t = poset.numerical_set_mask(mask);
    let oracle = t.atom_monoid() == *poset.semigroup();
    if oracle != associated {
        return Err(Error::PropertyViolated(format!(
            "classification of {t} disagrees with its atom monoid"
        )));
    }
    Ok(())
}

pub fn solve(s: &NumericalSemigroup) -> Result<AntiAtomSolution> {
    solve_with(s, SolveOptions::default())
}

pub fn solve_with(s: &NumericalSemigroup, options: SolveOptions) -> Result<AntiAtomSolution> {
    let poset = VoidPoset::new(s)?;
    let table = SizeTable::new(&poset);
    let base_size = table.size(0);

    let mut associated: Vec<(Vec<u32>, u64)> = Vec::new();
    for mask in poset.ideal_masks() {
        let ok = poset.is_associated_mask(mask);
        if options.cross_check {
            cross_check(&poset, mask, ok)?;
        }
        if ok {
            associated.push((poset.members_of(mask), mask));
        }
    }
    associated.sort_unstable();

    let position: HashMap<u64, usize> = associated
        .iter()
        .enumerate()
        .map(|(i, &(_, mask))| (mask, i))
        .collect();
    let reports: Vec<AssociatedSetReport> = associated
        .iter()
        .map(|(members, mask)| {
            let dual = poset.dual_mask(*mask);
            AssociatedSetReport {
                ideal: poset.ideal_from_mask(*mask),
                numerical_set: poset.numerical_set(members),
                partition_size: table.size(*mask),
                self_dual: poset.is_self_dual_mask(*mask),
                dual_index: *position
                    .get(&dual)
                    .expect("duals of associated ideals are associated"),
            }
        })
        .collect();

    let witness_index = reports
        .iter()
        .enumerate()
        .min_by_key(|(_, r)| r.partition_size)
        .map(|(i, _)| i)
        .expect("the empty ideal is always associated");
    let min_size = reports[witness_index].partition_size;
    Ok(AntiAtomSolution {
        semigroup: s.clone(),
        pa: reports.len(),
        base_size,
        min_size,
        lambda_minimal: min_size == base_size,
        witness_index,
        reports,
    })
}

/// `(|λ(S)|, min |λ(T)|)` over associated `T`, without keeping the reports.
pub fn size_range(s: &NumericalSemigroup) -> Result<(u64, u64)> {
    if s.is_naturals() {
        return Ok((0, 0));
    }
    let poset = VoidPoset::new(s)?;
    let table = SizeTable::new(&poset);
    let min = poset
        .ideal_masks()
        .filter(|&m| poset.is_associated_mask(m))
        .map(|m| table.size(m))
        .min()
        .expect("the empty ideal is always associated");
    Ok((table.size(0), min))
}

/// `|λ(S)|` is the smallest size among partitions with hook set `N \ S`.
/// The naturals are trivially λ-minimal.
pub fn is_lambda_minimal(s: &NumericalSemigroup) -> Result<bool> {
    let (base, min) = size_range(s)?;
    Ok(base == min)
}

/// `(|A|, |B|)` with `|λ(T)| = |λ(S)| + |A| - |B|` for `T = S ∪ I`, where
/// `A = {(i, h) : i ∈ I, h ∈ G(T), i < h}` and
/// `B = {(s, i) : s ∈ S, i ∈ I, s < i}`.
pub fn set_counting_decomposition(s: &NumericalSemigroup, ideal: &[u32]) -> Result<(u64, u64)> {
    let poset = VoidPoset::new(s)?;
    if !poset.is_associated(ideal) {
        return Err(Error::NotAssociated(poset.numerical_set(ideal).to_string()));
    }
    let t = poset.numerical_set(ideal);
    let a = ideal
        .iter()
        .map(|&i| t.gaps().iter().filter(|&&h| i < h).count() as u64)
        .sum();
    let b = ideal
        .iter()
        .map(|&i| s.elements_below(i).count() as u64)
        .sum();
    Ok((a, b))
}

/// The three type-3 cases, for `PF(S) = {P, Q, F}` with `P < Q < F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Type3Case {
    /// `P + Q - F ∈ S` and `Q - P ∉ M(S)`: two associated sets.
    PairSumInS,
    /// `P + Q - F ∉ S`: four associated sets, from the self-dual ideals.
    PairSumNotInS,
    /// `P + Q - F ∈ S` and `Q - P ∈ M(S)`: ideals among `∅, M(S), I₁, I₂`.
    DifferenceInVoid,
}

#[derive(Clone, Debug, Serialize)]
pub struct Type3Profile {
    pub p: u32,
    pub q: u32,
    pub frobenius: u32,
    pub case: Type3Case,
    pub predicted_pa: Option<usize>,
    /// `{x : Q - P ≼ x}` and `{x : F - Q ≼ x}` in the third case.
    pub i1: Option<OrderIdeal>,
    pub i2: Option<OrderIdeal>,
    pub observed_pa: usize,
    pub order_ideal_count: usize,
    /// The case analysis agrees with [`solve`].
    pub consistent: bool,
}

pub fn type3_profile(s: &NumericalSemigroup) -> Result<Type3Profile> {
    if s.semigroup_type() != 3 {
        return Err(Error::WrongInvariant {
            expected: "type 3".into(),
            found: format!("type {}", s.semigroup_type()),
        });
    }
    let (p, q, f) = match *s.pseudo_frobenius()? {
        [p, q, f] => (p, q, f),
        _ => unreachable!(),
    };
    let poset = VoidPoset::new(s)?;
    let solution = solve(s)?;
    let assoc: Vec<&OrderIdeal> = solution.reports.iter().map(|r| &r.ideal).collect();
    let pair_in_s = p + q >= f && s.contains(p + q - f);

    let (case, predicted_pa, i1, i2, consistent) = if !pair_in_s {
        // The associated ideals are exactly the self-dual ones; the poset
        // itself may have more order ideals (e.g. <4,7,9,10> has six).
        let ok = solution.pa == 4
            && poset
                .order_ideals()
                .all(|i| poset.is_self_dual(&i) == assoc.contains(&&i));
        (Type3Case::PairSumNotInS, Some(4), None, None, ok)
    } else if !poset.contains(q - p) {
        (Type3Case::PairSumInS, Some(2), None, None, solution.pa == 2)
    } else {
        let i1 = poset.principal_up_set(q - p)?;
        let i2 = poset.principal_up_set(f - q)?;
        let full = poset.ideal_from_mask(poset.mask_of(poset.elements())?);
        let allowed = [OrderIdeal::default(), full, i1.clone(), i2.clone()];
        let ok = assoc.iter().all(|i| allowed.contains(i)) && poset.dual_ideal(&i1) == i2;
        (Type3Case::DifferenceInVoid, None, Some(i1), Some(i2), ok)
    };
    Ok(Type3Profile {
        p,
        q,
        frobenius: f,
        case,
        predicted_pa,
        i1,
        i2,
        observed_pa: solution.pa,
        order_ideal_count: poset.ideal_masks().count(),
        consistent,
    })
}

/// For depth 2 with Durfee square `n` and largest gaps
/// `F, F - α₁, …, F - α_{n-1}`: whether `α_i = α_j + α_k` forces
/// `j = k = i - 1`. When it holds, `S` is λ-minimal.
pub fn durfee_gap_condition(s: &NumericalSemigroup) -> Result<bool> {
    if s.depth() != 2 {
        return Err(Error::WrongInvariant {
            expected: "depth 2".into(),
            found: format!("depth {}", s.depth()),
        });
    }
    let n = enumeration(s).durfee();
    let f = s.frobenius_gap().expect("depth 2");
    // alpha[0] = 0 stands for F itself, so alpha[i] is α_i.
    let alpha: Vec<u32> = s.gaps().iter().rev().take(n).map(|&g| f - g).collect();
    for i in 1..n {
        for j in 1..n {
            for k in 1..n {
                if alpha[i] == alpha[j] + alpha[k] && !(j + 1 == i && k + 1 == i) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `|λ(S)|` through the partition itself, for cross-checks.
pub fn base_size(s: &NumericalSemigroup) -> u64 {
    size_via_gap_count(s)
}
