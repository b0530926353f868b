//! Exhaustive and property-based checks that span several modules.

use std::collections::BTreeSet;

use antiatom_core::families::{interval_k, interval_m, staircase};
use antiatom_core::partition::size_via_gap_count;
use antiatom_core::voidposet::ElementWitness;
use antiatom_core::{
    enumeration, numerical_set_of, sections, semigroups_by_frobenius, solve, NumericalSemigroup,
    NumericalSet, VoidPoset,
};
use proptest::prelude::*;

fn semigroups_up_to(f: u32) -> Vec<NumericalSemigroup> {
    (1..=f).flat_map(|frob| semigroups_by_frobenius(frob).unwrap()).collect()
}

fn numerical_sets_up_to(f: u32) -> impl Iterator<Item = NumericalSet> {
    (1..=f).flat_map(|frob| {
        (0u32..1 << (frob - 1)).map(move |mask| {
            NumericalSet::from_gaps((1..frob).filter(|x| mask >> (x - 1) & 1 == 1).chain([frob]))
                .unwrap()
        })
    })
}

#[test]
fn atom_monoid_laws() {
    for t in numerical_sets_up_to(12) {
        let a = t.atom_monoid();
        assert!(a.is_subset_of(&t), "{t}");
        assert!(a.is_semigroup());
        assert_eq!(a.atom_monoid(), a);
        let dual = t.dual().unwrap();
        assert_eq!(dual.atom_monoid(), a, "{t}");
        assert_eq!(dual.dual().unwrap(), t);
        assert_eq!(size_via_gap_count(&t), enumeration(&t).size());
        assert_eq!(numerical_set_of(&enumeration(&t)), t);
    }
}

#[test]
fn depth_brackets_frobenius() {
    for s in semigroups_up_to(16) {
        let (q, m, f) = (s.depth() as i64, s.multiplicity() as i64, s.frobenius());
        assert!((q - 1) * m <= f && f < q * m, "{s}");
    }
}

#[test]
fn pseudo_frobenius_and_extremal_void_elements() {
    for s in semigroups_up_to(16) {
        let pf = s.pseudo_frobenius().unwrap();
        let f = s.frobenius_gap().unwrap();
        assert_eq!(*pf.last().unwrap(), f);
        let poset = VoidPoset::new(&s).unwrap();
        assert_eq!(poset.maximal_elements(), pf[..pf.len() - 1].to_vec(), "{s}");
        let mut minimal: Vec<u32> = pf[..pf.len() - 1].iter().map(|p| f - p).collect();
        minimal.sort_unstable();
        assert_eq!(poset.minimal_elements(), minimal, "{s}");
    }
}

#[test]
fn classification_matches_subset_oracle() {
    for s in semigroups_up_to(16) {
        let poset = VoidPoset::new(&s).unwrap();
        let n = poset.len();
        let void = poset.elements().to_vec();
        for mask in 0u64..1 << n {
            let members: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| void[i]).collect();
            let oracle = poset.numerical_set(&members).atom_monoid() == s;
            assert_eq!(poset.is_associated(&members), oracle, "{s} with {members:?}");
        }
    }
}

#[test]
fn dual_ideals_pair_up() {
    for s in semigroups_up_to(16) {
        let poset = VoidPoset::new(&s).unwrap();
        for ideal in poset.order_ideals() {
            let dual = poset.dual_ideal(&ideal);
            assert!(poset.is_up_closed(dual.members()));
            assert_eq!(poset.dual_ideal(&dual), ideal);
            assert_eq!(poset.is_associated(ideal.members()), poset.is_associated(dual.members()));
        }
        let sol = solve(&s).unwrap();
        for r in &sol.reports {
            let partner = &sol.reports[r.dual_index];
            assert_eq!(partner.ideal, poset.dual_ideal(&r.ideal));
            assert_eq!(partner.partition_size, r.partition_size);
            assert_eq!(partner.partition(), r.partition().conjugate(), "{s}");
        }
    }
}

#[test]
fn every_member_of_an_associated_ideal_has_a_witness() {
    for s in semigroups_up_to(16) {
        let poset = VoidPoset::new(&s).unwrap();
        let f = poset.frobenius();
        for r in solve(&s).unwrap().reports {
            for &x in r.ideal.members() {
                match poset.element_condition_check(&r.ideal, x).unwrap() {
                    ElementWitness::DualInIdeal(y) => {
                        assert_eq!(y, f - x);
                        assert!(r.ideal.contains(y));
                    }
                    ElementWitness::Triangle(t) => {
                        assert_eq!(t.p + t.x + t.y, f);
                        assert!(poset.satisfies(&r.ideal, &t), "{s}: {t:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn associated_set_counts_by_type() {
    for s in semigroups_up_to(16) {
        let sol = solve(&s).unwrap();
        let t = s.semigroup_type();
        assert_eq!(sol.pa == 1, s.void().is_empty(), "{s}");
        assert_eq!(sol.pa == 1, t == 1, "{s}");
        if t == 2 {
            assert_eq!(sol.pa, 2, "{s}");
        }
    }
}

#[test]
fn depth_two_sections() {
    for s in semigroups_up_to(16).into_iter().filter(|s| s.depth() == 2) {
        let f = s.frobenius_gap().unwrap();
        let window = f - s.multiplicity() + 1..=f;
        let own = sections(&s, &s).unwrap();
        let own_cell = own.depth_two_section(2).unwrap();
        let own_hooks: BTreeSet<u32> =
            enumeration(&s).hook_set().into_iter().filter(|h| window.contains(h)).collect();
        assert_eq!(own_cell.hook_lengths, own_hooks, "{s}");
        assert_eq!(own_cell.hook_lengths.len() as u64, own_cell.box_count, "{s}");
        for r in solve(&s).unwrap().reports {
            let grid = sections(&r.numerical_set, &s).unwrap();
            let cell = grid.depth_two_section(2).unwrap();
            let in_window = r.partition().hook_set().into_iter().filter(|h| window.contains(h));
            for h in in_window {
                assert!(cell.hook_lengths.contains(&h), "{s} / {}: hook {h}", r.numerical_set);
            }
            assert!(own_cell.box_count <= cell.box_count);
            assert_eq!(grid.total_boxes(), r.partition_size);
        }
    }
}

#[test]
fn family_predictions_hold_on_the_grid() {
    for m in 9..=14 {
        let inst = interval_m(m).unwrap();
        assert_eq!(inst.semigroup.semigroup_type(), 4);
        assert_eq!(inst.semigroup.depth(), 2);
        let v = inst.validate().unwrap();
        assert!(v.ok(), "{}", v.table());
    }
    for k in 4..=12 {
        for l in (1..=k).filter(|l| k % l == 0) {
            let v = interval_k(k, l).unwrap().validate().unwrap();
            assert!(v.ok(), "{}", v.table());
        }
    }
    for m in 2..=8u32 {
        for k in (1..).take_while(|k| k * m < 60) {
            for s in (1..m).filter(|s| k * m + s <= 60) {
                let v = staircase(m, k, s).unwrap().validate().unwrap();
                assert!(v.ok(), "{}", v.table());
            }
        }
    }
}

fn sieve(gens: &[u32], bound: u32) -> Vec<bool> {
    let mut reach = vec![false; bound as usize + 1];
    reach[0] = true;
    for x in 1..=bound as usize {
        reach[x] = gens.iter().any(|&g| g as usize <= x && reach[x - g as usize]);
    }
    reach
}

proptest! {
    #[test]
    fn generators_match_sieve(gens in prop::collection::vec(2u32..=30, 1..6)) {
        let g = gens.iter().fold(0, |a, &b| num_gcd(a, b));
        let result = NumericalSemigroup::from_generators(gens.clone());
        if g != 1 {
            prop_assert!(result.is_err());
        } else {
            let s = result.unwrap();
            let bound = s.frobenius().max(0) as u32 + 31;
            let reach = sieve(&gens, bound);
            for x in 0..=bound {
                prop_assert_eq!(s.contains(x), reach[x as usize], "x = {}", x);
            }
        }
    }
}

fn num_gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}
