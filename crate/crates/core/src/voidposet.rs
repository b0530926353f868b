//! The void of a semigroup, its partial order, and the up-closed subsets
//! ("order ideals") that parametrize the numerical sets associated to it.
//!
//! Every set `T` with atom monoid `S` has the form `S ∪ I` for an order
//! ideal `I` of the void poset. Subsets of the void are handled as bitmasks
//! over the void's elements in ascending order, so voids are capped at 64
//! elements.

use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::numset::NumericalSet;
use crate::semigroup::NumericalSemigroup;

/// An up-closed subset of the void, as a sorted member list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct OrderIdeal {
    members: Vec<u32>,
}

impl OrderIdeal {
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl fmt::Display for OrderIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.members)
    }
}

/// `(p, x, y)` in the void with `p + x + y = F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct IdealTriangle {
    pub p: u32,
    pub x: u32,
    pub y: u32,
}

/// Why an element `x` of an associated ideal is there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum ElementWitness {
    /// `F - x` is in the ideal too.
    DualInIdeal(u32),
    /// The ideal satisfies this triangle starting at `x`.
    Triangle(IdealTriangle),
}

#[derive(Clone, Debug)]
pub struct VoidPoset {
    semigroup: NumericalSemigroup,
    frobenius: u32,
    elements: Vec<u32>,
    // position of each value 0..=F in `elements`
    index: Vec<Option<u8>>,
    // up[i]: every j with elements[i] ≼ elements[j], i included
    up: Vec<u64>,
    pf_mask: u64,
}

impl VoidPoset {
    pub fn new(s: &NumericalSemigroup) -> Result<Self> {
        let f = s.frobenius_gap().ok_or(Error::UndefinedForNaturals("the void"))?;
        let elements = s.void().to_vec();
        if elements.len() > 64 {
            return Err(Error::VoidTooLarge(elements.len()));
        }
        let mut index = vec![None; f as usize + 1];
        for (i, &x) in elements.iter().enumerate() {
            index[x as usize] = Some(i as u8);
        }
        let up = elements
            .iter()
            .map(|&x| {
                elements
                    .iter()
                    .enumerate()
                    .filter(|&(_, &y)| y >= x && s.contains(y - x))
                    .fold(0u64, |m, (j, _)| m | 1 << j)
            })
            .collect();
        let pf_mask = s
            .pseudo_frobenius()?
            .iter()
            .filter_map(|&p| index[p as usize])
            .fold(0u64, |m, i| m | 1 << i);
        Ok(VoidPoset {
            semigroup: s.clone(),
            frobenius: f,
            elements,
            index,
            up,
            pf_mask,
        })
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn frobenius(&self) -> u32 {
        self.frobenius
    }

    /// Void elements, ascending.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.position(x).is_some()
    }

    fn position(&self, x: u32) -> Option<usize> {
        self.index.get(x as usize).copied().flatten().map(usize::from)
    }

    fn full_mask(&self) -> u64 {
        if self.elements.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.elements.len()) - 1
        }
    }

    /// `x ≼ y` iff `y - x ∈ S`. False unless both are void elements.
    pub fn leq(&self, x: u32, y: u32) -> bool {
        match (self.position(x), self.position(y)) {
            (Some(i), Some(j)) => self.up[i] >> j & 1 == 1,
            _ => false,
        }
    }

    /// Strict relations `x ≺ y`.
    pub fn relations(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (i, &x) in self.elements.iter().enumerate() {
            for (j, &y) in self.elements.iter().enumerate() {
                if i != j && self.up[i] >> j & 1 == 1 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Cover relations of the Hasse diagram.
    pub fn hasse_edges(&self) -> Vec<(u32, u32)> {
        self.relations()
            .into_iter()
            .filter(|&(x, y)| {
                !self
                    .elements
                    .iter()
                    .any(|&z| z != x && z != y && self.leq(x, z) && self.leq(z, y))
            })
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<u32> {
        (0..self.elements.len())
            .filter(|&i| self.up[i] == 1 << i)
            .map(|i| self.elements[i])
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<u32> {
        (0..self.elements.len())
            .filter(|&j| (0..self.elements.len()).all(|i| i == j || self.up[i] >> j & 1 == 0))
            .map(|j| self.elements[j])
            .collect()
    }

    /// Bitmask of `members`; errors on anything outside the void.
    pub fn mask_of(&self, members: &[u32]) -> Result<u64> {
        members.iter().try_fold(0u64, |m, &x| {
            self.position(x)
                .map(|i| m | 1 << i)
                .ok_or(Error::NotInVoid(x))
        })
    }

    pub fn members_of(&self, mask: u64) -> Vec<u32> {
        (0..self.elements.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.elements[i])
            .collect()
    }

    pub fn is_up_closed_mask(&self, mask: u64) -> bool {
        (0..self.elements.len()).all(|i| mask >> i & 1 == 0 || self.up[i] & !mask == 0)
    }

    pub fn is_up_closed(&self, members: &[u32]) -> bool {
        self.mask_of(members)
            .is_ok_and(|mask| self.is_up_closed_mask(mask))
    }

    /// Validates `members` as an order ideal.
    pub fn order_ideal(&self, members: &[u32]) -> Result<OrderIdeal> {
        let mask = self.mask_of(members)?;
        if !self.is_up_closed_mask(mask) {
            let mut m = members.to_vec();
            m.sort_unstable();
            return Err(Error::NotAnOrderIdeal(m));
        }
        Ok(self.ideal_from_mask(mask))
    }

    pub(crate) fn ideal_from_mask(&self, mask: u64) -> OrderIdeal {
        OrderIdeal {
            members: self.members_of(mask),
        }
    }

    fn ideal_mask(&self, ideal: &OrderIdeal) -> u64 {
        self.mask_of(&ideal.members)
            .expect("order ideal from a different poset")
    }

    /// `{y : x ≼ y}`.
    pub fn principal_up_set(&self, x: u32) -> Result<OrderIdeal> {
        let i = self.position(x).ok_or(Error::NotInVoid(x))?;
        Ok(self.ideal_from_mask(self.up[i]))
    }

    /// Every order ideal exactly once, as bitmasks.
    pub fn ideal_masks(&self) -> IdealMasks<'_> {
        IdealMasks {
            poset: self,
            stack: vec![(self.elements.len(), 0)],
        }
    }

    /// Every order ideal exactly once, the empty one and the whole void
    /// included.
    pub fn order_ideals(&self) -> impl Iterator<Item = OrderIdeal> + '_ {
        self.ideal_masks().map(|m| self.ideal_from_mask(m))
    }

    pub(crate) fn dual_mask(&self, mask: u64) -> u64 {
        let f = self.frobenius;
        (0..self.elements.len())
            .filter(|&i| {
                let j = self.position(f - self.elements[i]).expect("void is symmetric");
                mask >> j & 1 == 0
            })
            .fold(0, |m, i| m | 1 << i)
    }

    /// `I* = {x ∈ M(S) : F - x ∉ I}`.
    pub fn dual_ideal(&self, ideal: &OrderIdeal) -> OrderIdeal {
        self.ideal_from_mask(self.dual_mask(self.ideal_mask(ideal)))
    }

    pub(crate) fn is_self_dual_mask(&self, mask: u64) -> bool {
        // x ∈ I ⇒ F - x ∈ I, i.e. I is closed under reflection.
        let reflected = self.full_mask() & !self.dual_mask(mask);
        reflected == mask
    }

    /// `x ∈ I` implies `F - x ∈ I`.
    pub fn is_self_dual(&self, ideal: &OrderIdeal) -> bool {
        self.is_self_dual_mask(self.ideal_mask(ideal))
    }

    /// Triangles `(p, x, y)` with `x ≤ y`, sorted by `x`.
    pub fn triangles(&self, p: u32) -> Result<Vec<IdealTriangle>> {
        if !self.contains(p) {
            return Err(Error::NotInVoid(p));
        }
        let rest = self.frobenius - p;
        Ok(self
            .elements
            .iter()
            .copied()
            .take_while(|&x| 2 * x <= rest)
            .filter(|&x| self.contains(rest - x))
            .map(|x| IdealTriangle { p, x, y: rest - x })
            .collect())
    }

    /// `p, x ∈ I` and `F - y ∉ I`, in the orientation given.
    pub fn satisfies(&self, ideal: &OrderIdeal, t: &IdealTriangle) -> bool {
        ideal.contains(t.p) && ideal.contains(t.x) && !ideal.contains(self.frobenius - t.y)
    }

    /// Some triangle at `p` satisfied by `mask`, in either orientation of
    /// its last two entries.
    fn satisfied_triangle_mask(&self, mask: u64, p: u32) -> Option<IdealTriangle> {
        let f = self.frobenius;
        let rest = f - p;
        let has = |x: u32| self.position(x).is_some_and(|i| mask >> i & 1 == 1);
        self.elements
            .iter()
            .copied()
            .take_while(|&x| x < rest)
            .filter(|&x| self.contains(rest - x))
            .map(|x| IdealTriangle { p, x, y: rest - x })
            .find(|t| has(t.p) && has(t.x) && !has(f - t.y))
    }

    /// Whether `S ∪ I` has atom monoid `S`: `I` is up-closed, and every
    /// pseudo-Frobenius `P ∈ I` has `2P ∉ S`, or `F - P ∈ I`, or a satisfied
    /// Frobenius triangle `(P, x, y)`.
    pub fn is_associated(&self, members: &[u32]) -> bool {
        self.mask_of(members)
            .is_ok_and(|mask| self.is_associated_mask(mask))
    }

    pub fn is_associated_mask(&self, mask: u64) -> bool {
        if !self.is_up_closed_mask(mask) {
            return false;
        }
        let f = self.frobenius;
        let mut pfs = mask & self.pf_mask;
        while pfs != 0 {
            let i = pfs.trailing_zeros() as usize;
            pfs &= pfs - 1;
            let p = self.elements[i];
            let dual_in = self.position(f - p).is_some_and(|j| mask >> j & 1 == 1);
            let ok = !self.semigroup.contains(2 * p)
                || dual_in
                || self.satisfied_triangle_mask(mask, p).is_some();
            if !ok {
                return false;
            }
        }
        true
    }

    /// `S ∪ I` for a subset of the void.
    pub fn numerical_set(&self, members: &[u32]) -> NumericalSet {
        NumericalSet::from_sorted_gaps(
            self.semigroup
                .gaps()
                .iter()
                .copied()
                .filter(|g| !members.contains(g))
                .collect(),
        )
    }

    pub(crate) fn numerical_set_mask(&self, mask: u64) -> NumericalSet {
        NumericalSet::from_sorted_gaps(
            self.semigroup
                .gaps()
                .iter()
                .copied()
                .filter(|&g| self.position(g).is_none_or(|i| mask >> i & 1 == 0))
                .collect(),
        )
    }

    /// For `x` in an associated ideal: `F - x ∈ I`, or a satisfied ideal
    /// triangle `(x, y, z)`. Failure means the ideal was not associated or
    /// the implementation is wrong.
    pub fn element_condition_check(&self, ideal: &OrderIdeal, x: u32) -> Result<ElementWitness> {
        if !ideal.contains(x) {
            return Err(Error::OutOfDomain(format!("{x} is not in the ideal {ideal}")));
        }
        let mask = self.ideal_mask(ideal);
        let f = self.frobenius;
        if ideal.contains(f - x) {
            return Ok(ElementWitness::DualInIdeal(f - x));
        }
        self.satisfied_triangle_mask(mask, x)
            .map(ElementWitness::Triangle)
            .ok_or_else(|| {
                Error::PropertyViolated(format!(
                    "{x} in {ideal} has neither its dual nor a satisfied triangle"
                ))
            })
    }
}

impl Serialize for VoidPoset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let relations: Vec<[u32; 2]> = self.relations().into_iter().map(|(x, y)| [x, y]).collect();
        let mut st = serializer.serialize_struct("VoidPoset", 2)?;
        st.serialize_field("void", &self.elements)?;
        st.serialize_field("relations", &relations)?;
        st.end()
    }
}

/// Depth-first walk over elements in decreasing order: an element may join
/// only if everything strictly above it already has.
pub struct IdealMasks<'a> {
    poset: &'a VoidPoset,
    stack: Vec<(usize, u64)>,
}

impl Iterator for IdealMasks<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while let Some((remaining, mask)) = self.stack.pop() {
            if remaining == 0 {
                return Some(mask);
            }
            let i = remaining - 1;
            let above = self.poset.up[i] & !(1 << i);
            if above & !mask == 0 {
                self.stack.push((i, mask | 1 << i));
            }
            self.stack.push((i, mask));
        }
        None
    }
}
