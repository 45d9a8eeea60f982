//! Permutation group operations on catalog groups, against brute force.

mod common;

use loopfold::permgroup::catalog::{
    alternating, by_name, cyclic, direct_product, mathieu, mathieu_extension, pgl2, psl2, symmetric,
};
use loopfold::permgroup::{composition_factors, GroupHandle};
use loopfold::{Error, Permutation};
use proptest::prelude::*;

fn perm(degree: usize, cycles: &[&[u32]]) -> Permutation {
    Permutation::from_cycles(degree, cycles).unwrap()
}

fn element_of_order(g: &GroupHandle, o: u64) -> Permutation {
    let store = g.elements().unwrap();
    let id = store.iter().find(|&x| store.order(x) == o).unwrap();
    store.perm(id)
}

#[test]
fn orders_from_generators() {
    assert_eq!(GroupHandle::from_generators(vec![perm(5, &[&[0, 1, 2, 3, 4]])], 100).unwrap().order(), 5);
    assert_eq!(alternating(5).unwrap().order(), 60);
    let m11 = mathieu(11).unwrap();
    assert_eq!(m11.order(), 7920);
    assert_eq!(common::elements(m11.generators()).len(), 7920);
    assert_eq!(mathieu(22).unwrap().order(), 443_520);
    assert_eq!(psl2(9).unwrap().order(), 360);
    assert_eq!(pgl2(5).unwrap().order(), 120);
}

#[test]
fn degree_mismatch_is_an_error() {
    let r = GroupHandle::from_generators(vec![perm(3, &[&[0, 1]]), perm(4, &[&[0, 1]])], 100);
    assert!(matches!(r, Err(Error::DegreeMismatch(..))));
}

#[test]
fn class_counts_match_brute_force() {
    for g in [symmetric(4).unwrap(), psl2(5).unwrap(), mathieu(12).unwrap(), psl2(7).unwrap()] {
        let table = g.conjugacy_classes().unwrap();
        let profile = common::class_profile(g.generators());
        let mut ours = std::collections::BTreeMap::new();
        for c in table.classes() {
            *ours.entry((c.element_order, c.size as usize)).or_insert(0) += 1;
        }
        assert_eq!(ours, profile, "{}", g.name());
    }
    assert_eq!(symmetric(4).unwrap().conjugacy_classes().unwrap().len(), 5);
    assert_eq!(psl2(5).unwrap().conjugacy_classes().unwrap().len(), 5);
    assert_eq!(mathieu(12).unwrap().conjugacy_classes().unwrap().len(), 15);
}

#[test]
fn m12_order_three_and_five_classes() {
    let g = mathieu(12).unwrap();
    let t = g.conjugacy_classes().unwrap();
    let size = |name: &str| t.class(t.index_by_name(name).unwrap()).size;
    assert_eq!(size("3A"), 1760);
    assert_eq!(size("3B"), 2640);
    assert_eq!(size("5A"), 9504);
}

#[test]
fn centralizers() {
    let s4 = symmetric(4).unwrap();
    assert!(s4.centralizer(&s4.identity()).unwrap().same_group(&s4));
    let a8 = alternating(8).unwrap();
    let c = perm(8, &[&[0, 1, 2]]);
    assert_eq!(a8.centralizer(&c).unwrap().order(), 180);
    let a5 = alternating(5).unwrap();
    let x = perm(5, &[&[0, 1, 2, 3, 4]]);
    assert_eq!(a5.centralizer(&x).unwrap().order(), 5);
    assert_eq!(common::centralizer_order(a5.generators(), x.images()), 5);
}

#[test]
fn normalizers() {
    let s4 = symmetric(4).unwrap();
    let u = s4.subgroup(vec![perm(4, &[&[0, 1, 2]])]).unwrap();
    assert_eq!(s4.normalizer(&u).unwrap().order(), 6);
    assert!(s4.normalizer(&s4).unwrap().same_group(&s4));
    let m11 = mathieu(11).unwrap();
    let p11 = m11.sylow(11).unwrap();
    assert_eq!(m11.normalizer(&p11).unwrap().order(), 55);
    let foreign = GroupHandle::from_generators(vec![perm(4, &[&[0, 1]])], 100).unwrap();
    let a4 = alternating(4).unwrap();
    assert!(matches!(a4.normalizer(&foreign), Err(Error::NotSubgroup(_))));
}

#[test]
fn automizers_and_fusion() {
    let m11 = mathieu(11).unwrap();
    let x11 = element_of_order(&m11, 11);
    let l11 = m11.subgroup(vec![x11.clone()]).unwrap();
    assert_eq!(m11.automizer_index(&l11).unwrap(), 5);
    assert_eq!(m11.cyclic_fusion_count(&x11).unwrap(), 2);
    let x5 = element_of_order(&m11, 5);
    let l5 = m11.subgroup(vec![x5.clone()]).unwrap();
    assert_eq!(m11.automizer_index(&l5).unwrap(), 4);
    assert!(m11.centralizer(&x5).unwrap().is_soluble().unwrap());

    let s3 = symmetric(3).unwrap();
    assert_eq!(s3.cyclic_fusion_count(&perm(3, &[&[0, 1, 2]])).unwrap(), 1);
    let z5 = cyclic(5).unwrap();
    let g = z5.generators()[0].clone();
    assert_eq!(z5.cyclic_fusion_count(&g).unwrap(), 4);
    let l = z5.subgroup(vec![g]).unwrap();
    assert_eq!(z5.automizer_index(&l).unwrap(), 1);
    assert!(s3.cyclic_fusion_count(&perm(3, &[&[0, 1]])).is_err());
}

#[test]
fn derived_series_and_solubility() {
    let s4 = symmetric(4).unwrap();
    let orders: Vec<u128> = s4.derived_series().unwrap().iter().map(|g| g.order()).collect();
    assert_eq!(orders, vec![24, 12, 4, 1]);
    assert!(s4.is_soluble().unwrap());
    assert!(!alternating(5).unwrap().is_soluble().unwrap());
}

#[test]
fn sylow_and_cores() {
    let s4 = symmetric(4).unwrap();
    assert_eq!(s4.sylow(3).unwrap().order(), 3);
    let o2 = s4.p_core(2).unwrap();
    assert_eq!(o2.order(), 4);
    assert!(s4.is_normal_subgroup(&o2));
    assert!(alternating(5).unwrap().p_core(2).unwrap().is_trivial());
    let s4z3 = direct_product(&s4, &cyclic(3).unwrap()).unwrap();
    assert_eq!(s4z3.p_core(3).unwrap().order(), 3);
    assert_eq!(mathieu(11).unwrap().sylow(11).unwrap().order(), 11);
    assert_eq!(mathieu(12).unwrap().sylow(2).unwrap().order(), 64);
}

#[test]
fn composition_factor_examples() {
    let orders = |g: &GroupHandle| -> Vec<u128> {
        composition_factors(g).unwrap().iter().map(|f| f.order).collect()
    };
    assert_eq!(orders(&symmetric(4).unwrap()), vec![2, 3, 2, 2]);
    let s5 = composition_factors(&symmetric(5).unwrap()).unwrap();
    assert_eq!(s5.iter().map(|f| f.order).collect::<Vec<_>>(), vec![2, 60]);
    assert!(s5[1].is("A5") && s5[1].is("PSL2(4)") && s5[1].is("PSL2(5)"));
    let pgl9 = composition_factors(&pgl2(9).unwrap()).unwrap();
    assert_eq!(pgl9.iter().map(|f| f.order).collect::<Vec<_>>(), vec![2, 360]);
    assert!(pgl9[1].is("A6"));
    let a8 = composition_factors(&alternating(8).unwrap()).unwrap();
    assert!(a8[0].is("A8") && !a8[0].is("PSL3(4)"));
}

#[test]
fn mathieu_extensions() {
    let m12_2 = mathieu_extension(12).unwrap();
    assert_eq!(m12_2.order(), 190_080);
    let m22_2 = mathieu_extension(22).unwrap();
    assert_eq!(m22_2.order(), 887_040);
    let f = composition_factors(&m22_2).unwrap();
    assert_eq!(f.len(), 2);
    assert!(f.iter().any(|x| x.is("M22")));
}

/// Small catalog groups for the invariant checks.
fn small_catalog() -> Vec<GroupHandle> {
    ["S4", "A5", "S5", "D10", "C7", "psl2(7)", "pgl2(5)", "psl2(8)", "A4xC3", "M11"]
        .iter()
        .map(|n| by_name(n).unwrap())
        .collect()
}

#[test]
fn class_table_invariants() {
    for g in small_catalog() {
        let t = g.conjugacy_classes().unwrap();
        let order = g.order() as u64;
        assert_eq!(t.classes().iter().map(|c| c.size).sum::<u64>(), order);
        let store = g.elements().unwrap();
        for (i, c) in t.classes().iter().enumerate() {
            assert_eq!(order % c.size, 0);
            assert_eq!(g.centralizer(&c.representative).unwrap().order() as u64 * c.size, order);
            assert!(t.members(i).iter().all(|&x| store.order(x) == c.element_order));
            let inv = store.index_of(&c.representative.inverse()).unwrap();
            assert_eq!(t.class_of_id(inv), t.inverse_class(&store, i));
        }
    }
}

#[test]
fn fusion_times_automizer_is_p_minus_one() {
    for g in small_catalog() {
        let t = g.conjugacy_classes().unwrap();
        for c in t.classes() {
            let p = c.element_order;
            if p % 2 == 1 && loopfold::arith::is_prime(p as u128) {
                let l = g.subgroup(vec![c.representative.clone()]).unwrap();
                let n = g.cyclic_fusion_count(&c.representative).unwrap() as u128;
                assert_eq!(n * g.automizer_index(&l).unwrap(), p as u128 - 1, "{}", g.name());
            }
        }
    }
}

#[test]
fn p_cores_contain_normal_p_subgroups() {
    for g in small_catalog() {
        let t = g.conjugacy_classes().unwrap();
        for p in [2u64, 3, 5, 7] {
            let core = g.p_core(p).unwrap();
            assert!(g.is_normal_subgroup(&core));
            // normal closures of single p-elements that are p-groups
            for c in t.classes() {
                let o = c.element_order;
                if o == 1 || loopfold::arith::p_part(o as u128, p as u128) != o as u128 {
                    continue;
                }
                let n = g.normal_closure(&[c.representative.clone()]).unwrap();
                if loopfold::arith::p_part(n.order(), p as u128) == n.order() {
                    assert!(n.is_subgroup_of(&core), "{} p={p}", g.name());
                }
            }
        }
    }
}

#[test]
fn solubility_agrees_with_composition_factors() {
    for g in small_catalog() {
        let factors = composition_factors(&g).unwrap();
        let all_prime = factors.iter().all(|f| loopfold::arith::is_prime(f.order));
        assert_eq!(g.is_soluble().unwrap(), all_prime, "{}", g.name());
        assert_eq!(factors.iter().map(|f| f.order).product::<u128>(), g.order());
    }
}

fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #[test]
    fn random_groups_match_closure(gens in prop::collection::vec(arb_perm(6), 1..3)) {
        let g = GroupHandle::from_generators(gens.clone(), 1000).unwrap();
        let elems = common::elements(&gens);
        prop_assert_eq!(g.order(), elems.len() as u128);
        for e in &elems {
            prop_assert!(g.contains(&Permutation::from_images(e.clone()).unwrap()));
        }
        let t = g.conjugacy_classes().unwrap();
        prop_assert_eq!(t.len(), common::classes(&gens).len());
    }

    #[test]
    fn permutation_group_axioms(a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.inverse().compose(&a).is_identity());
        prop_assert_eq!(a.compose(&b).images().to_vec(), common::compose(a.images(), b.images()));
    }
}
