//! Decomposition of the Young diagram of `λ(T)` into sections cut at the
//! multiples of `m(S)` and at `F(S) - a·m(S)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numset::NumericalSet;
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SectionCell {
    pub box_count: u64,
    pub hook_lengths: BTreeSet<u32>,
}

/// Cells `(a, b)` with `a + b ≤ q - 1`. Box `(u, x)` lands in
/// `(⌊(F - x)/m⌋, ⌊u/m⌋)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectionGrid {
    pub multiplicity: u32,
    pub frobenius: u32,
    pub depth: u32,
    pub cells: BTreeMap<(u32, u32), SectionCell>,
}

impl SectionGrid {
    pub fn cell(&self, a: u32, b: u32) -> Option<&SectionCell> {
        self.cells.get(&(a, b))
    }

    pub fn total_boxes(&self) -> u64 {
        self.cells.values().map(|c| c.box_count).sum()
    }

    /// Depth-2 naming: sections 1, 2, 3 are cells (1,0), (0,0), (0,1).
    pub fn depth_two_section(&self, index: u8) -> Option<&SectionCell> {
        if self.depth != 2 {
            return None;
        }
        match index {
            1 => self.cell(1, 0),
            2 => self.cell(0, 0),
            3 => self.cell(0, 1),
            _ => None,
        }
    }
}

/// Sections of `λ(T)` relative to `S`. Requires `S ⊆ T ⊆ S*`, which holds
/// whenever `T` is associated to `S`.
pub fn sections(t: &NumericalSet, s: &NumericalSemigroup) -> Result<SectionGrid> {
    let f = s
        .frobenius_gap()
        .ok_or(Error::UndefinedForNaturals("sections"))?;
    let sandwiched = t.is_gap(f)
        && (0..f).all(|x| {
            let in_s = s.contains(x);
            let in_t = t.contains(x);
            (!in_s || in_t) && (!in_t || in_s || s.is_gap(f - x))
        });
    if !sandwiched {
        return Err(Error::NotAssociated(t.to_string()));
    }

    let m = s.multiplicity();
    let q = s.depth();
    let mut cells: BTreeMap<(u32, u32), SectionCell> = (0..q)
        .flat_map(|a| (0..q - a).map(move |b| ((a, b), SectionCell::default())))
        .collect();
    for &x in t.gaps() {
        for u in t.elements_below(x) {
            let key = ((f - x) / m, u / m);
            let cell = cells.get_mut(&key).expect("box outside the section grid");
            cell.box_count += 1;
            cell.hook_lengths.insert(x - u);
        }
    }
    Ok(SectionGrid {
        multiplicity: m,
        frobenius: f,
        depth: q,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::size_via_gap_count;

    fn staircase(m: u32, k: u32, s: u32) -> NumericalSemigroup {
        let f = k * m + s;
        NumericalSemigroup::from_gaps((1..=f).filter(|x| x % m != 0 || *x > k * m)).unwrap()
    }

    #[test]
    fn staircase_section_sizes() {
        for m in 2..=6 {
            for k in 1..=4 {
                for s in 1..m {
                    let sg = staircase(m, k, s);
                    let grid = sections(&sg, &sg).unwrap();
                    assert_eq!(grid.depth, k + 1);
                    assert_eq!(grid.total_boxes(), size_via_gap_count(&sg));
                    for (&(a, b), cell) in &grid.cells {
                        let expected = if a + b < k { m - 1 } else { s };
                        assert_eq!(cell.box_count, expected as u64, "S_{{{m},{k},{s}}} cell ({a},{b})");
                        assert!(cell.hook_lengths.len() as u64 <= cell.box_count);
                    }
                }
            }
        }
    }

    #[test]
    fn smallest_symmetric_semigroup_has_one_cell() {
        let s = NumericalSemigroup::from_generators([2, 3]).unwrap();
        let grid = sections(&s, &s).unwrap();
        assert_eq!(grid.cells.len(), 1);
        let cell = grid.cell(0, 0).unwrap();
        assert_eq!(cell.box_count, 1);
        assert_eq!(cell.hook_lengths, BTreeSet::from([1]));
    }

    #[test]
    fn depth_two_sections_of_interval_semigroup() {
        let s = NumericalSemigroup::from_generators(9..=13).unwrap();
        let t = NumericalSet::from_gaps([2, 3, 4, 5, 6, 7, 8, 15, 17]).unwrap();
        let grid = sections(&t, &s).unwrap();
        assert_eq!(grid.cells.len(), 3);
        assert_eq!(grid.total_boxes(), 31);
        let two = grid.depth_two_section(2).unwrap();
        assert!(two.hook_lengths.contains(&17));
        assert!(grid.depth_two_section(4).is_none());
    }

    #[test]
    fn rejects_sets_outside_the_sandwich() {
        let s = NumericalSemigroup::from_generators(9..=13).unwrap();
        let not_above_s = NumericalSet::from_gaps((1..=9).chain(14..=17)).unwrap();
        assert!(matches!(sections(&not_above_s, &s), Err(Error::NotAssociated(_))));
        let too_big = NumericalSet::from_gaps((1..=8).chain(14..=16)).unwrap();
        assert!(sections(&too_big, &s).is_err());
        let n = NumericalSemigroup::naturals();
        assert!(sections(&n, &n).is_err());
    }
}
