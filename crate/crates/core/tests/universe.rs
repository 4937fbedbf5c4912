mod common;

use attainset::corpus::{instances, Class, Corpus};
use attainset::oracle::smallest_algebra;
use attainset::universe::{generate_algebra, partition_witness, Property, Witness};
use attainset::{Closure, Error, PointMap, SetFamily, Subset, Universe};
use common::{a4, fam, h_universe, l3, s, tau_h};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn universe_rejects_zero_and_oversized() {
    assert_eq!(Universe::new(0).unwrap_err(), Error::EmptyUniverse);
    assert!(matches!(Universe::new(25), Err(Error::UniverseTooLarge { .. })));
    assert!(Universe::new(24).is_ok());
}

#[test]
fn members_are_canonical() {
    let a = fam(3, &["12", "0", "0", ""]);
    let b = fam(3, &["", "0", "12"]);
    assert_eq!(a, b);
    assert_eq!(a.members(), &[s(""), s("0"), s("12")]);
}

#[test]
fn out_of_range_member_is_rejected() {
    let u = Universe::new(2).unwrap();
    assert!(SetFamily::new(u, [s("2")]).is_err());
}

#[test]
fn classify_a4() {
    let a = a4();
    let r = a.classify();
    assert!(r.algebra && r.topology && r.semialgebra);
    assert!(!r.lattice_with_singletons);
}

#[test]
fn classify_trivial_algebra() {
    for n in 1..5 {
        let u = Universe::new(n).unwrap();
        let f = SetFamily::new(u.clone(), [Subset::EMPTY, u.full()]).unwrap();
        assert!(f.classify().pi_system && f.classify().algebra);
    }
}

#[test]
fn classify_l3() {
    let l = l3();
    let r = l.classify();
    assert!(r.lattice_with_unit);
    assert!(!r.algebra);
    assert_eq!(
        r.witness(Property::Algebra),
        Some(&Witness::MissingComplement { member: s("0") })
    );
    assert!(!r.lattice_with_singletons);
    assert_eq!(
        r.witness(Property::LatticeWithSingletons),
        Some(&Witness::MissingMember { set: s("2") })
    );
}

#[test]
fn classify_compactness_is_vacuous() {
    assert!(tau_h().opens().classify().compact_topology);
}

#[test]
fn complement_dual_examples() {
    let c = tau_h().opens().complement_dual();
    let want = SetFamily::new(h_universe(), [s("012"), s("12"), s("2"), s("")]).unwrap();
    assert_eq!(c, want);
    let f = fam(3, &["", "012"]);
    assert_eq!(f.complement_dual(), f);
}

#[test]
fn close_under_examples() {
    let a = fam(4, &["01", "23", "0123"]);
    assert_eq!(a.close_under(Closure::Unions).unwrap(), a4());
    let x = fam(4, &["13"]);
    assert_eq!(x.close_under(Closure::FiniteIntersections).unwrap(), x);
    let c = fam(4, &["123", "23"]);
    assert_eq!(c.close_under(Closure::FiniteIntersections).unwrap(), c);
}

#[test]
fn empty_union_is_included() {
    let f = fam(3, &["0"]);
    assert_eq!(f.close_under(Closure::Unions).unwrap(), fam(3, &["", "0"]));
    assert_eq!(f.close_under(Closure::Intersections).unwrap(), f);
}

#[test]
fn partition_witness_examples() {
    let intervals = fam(3, &["", "0", "1", "2", "01", "12", "012"]);
    assert_eq!(
        partition_witness(s("02"), &intervals, 2).unwrap(),
        Some(vec![s("0"), s("2")])
    );
    assert_eq!(
        partition_witness(Subset::EMPTY, &fam(2, &["", "01"]), 1).unwrap(),
        Some(vec![Subset::EMPTY])
    );
    assert_eq!(partition_witness(s("012"), &a4(), 2).unwrap(), None);
    assert_eq!(partition_witness(s("0"), &a4(), 0).unwrap_err(), Error::ZeroParts);
}

#[test]
fn generate_algebra_examples() {
    let intervals = fam(3, &["", "0", "1", "2", "01", "12", "012"]);
    let a = generate_algebra(&intervals).unwrap();
    assert_eq!(a.len(), 8);
    assert_eq!(generate_algebra(&a4()).unwrap(), a4());
    let p = SetFamily::power_set(&Universe::new(3).unwrap()).unwrap();
    assert_eq!(generate_algebra(&p).unwrap(), p);
}

#[test]
fn generate_algebra_rejects_non_semialgebra() {
    assert!(matches!(
        generate_algebra(&l3()),
        Err(Error::NotA { property: Property::Semialgebra, .. })
    ));
}

#[test]
fn image_and_preimage_examples() {
    let e = Universe::new(4).unwrap();
    let h = PointMap::new(e.clone(), h_universe(), vec![0, 1, 1, 2]).unwrap();
    let img = fam(4, &["23", "123"]).image_family(&h).unwrap();
    assert_eq!(img, SetFamily::new(h_universe(), [s("12")]).unwrap());
    let top = SetFamily::new(h_universe(), [s("012")]).unwrap();
    assert_eq!(top.preimage_family(&h).unwrap(), fam(4, &["0123"]));
    let a = SetFamily::new(h_universe(), [s("0")]).unwrap();
    assert_eq!(a.preimage_family(&h).unwrap(), fam(4, &["0"]));
}

#[test]
fn meets_all_examples() {
    assert_eq!(fam(4, &["01", "23"]).meets_all().unwrap().len(), 9);
    assert!(fam(3, &["", "1"]).meets_all().unwrap().is_empty());
    assert_eq!(fam(3, &["012"]).meets_all().unwrap().len(), 7);
}

#[test]
fn generated_algebra_is_smallest_on_tiny_universes() {
    let mut c = Corpus::new(7);
    for _ in 0..200 {
        let n = c.rng().gen_range(1..=3);
        let f = c.semialgebra(n);
        let want = SetFamily::new(f.universe().clone(), smallest_algebra(n, f.members())).unwrap();
        assert_eq!(generate_algebra(&f).unwrap(), want, "{}", f.show());
    }
}

#[test]
fn corpus_tags_match_classification() {
    for inst in instances(1, 500, 1..=6) {
        assert!(inst.tag_matches(), "{:?} {}", inst.class, inst.family.show());
    }
}

#[test]
fn corpus_partition_of_one_block_gives_trivial_algebra() {
    let a = Corpus::algebra_from_blocks(4, &[s("0123")]);
    assert_eq!(a, fam(4, &["", "0123"]));
    let mut c = Corpus::new(1);
    assert!(c.instance(Class::Algebra, 4).tag_matches());
}

fn family_strategy() -> impl Strategy<Value = SetFamily> {
    (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec(0u32..(1 << n), 1..8).prop_map(move |bits| {
            SetFamily::new(Universe::new(n).unwrap(), bits.into_iter().map(Subset)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn classification_implications(f in family_strategy()) {
        let r = f.classify();
        prop_assert!(!r.algebra || r.lattice_with_unit);
        prop_assert!(!r.lattice_with_unit || r.pi_system);
        prop_assert!(!r.lattice_with_unit || r.lattice);
        prop_assert!(!r.topology || r.pi_system);
        prop_assert!(!r.semialgebra || r.pi_system);
        prop_assert!(!r.algebra || r.semialgebra);
        prop_assert!(!r.lattice_with_singletons || r.lattice_with_unit);
        prop_assert!(!r.t1_topology || r.topology);
        prop_assert!(!r.topology || r.compact_topology);
        prop_assert!(!r.open_base_with_empty || r.open_base);
    }
}

proptest! {
    #[test]
    fn complement_is_an_involution(f in family_strategy()) {
        prop_assert_eq!(f.complement_dual().complement_dual(), f);
    }

    #[test]
    fn intersection_closures_agree(f in family_strategy()) {
        let a = f.close_under(Closure::Intersections).unwrap();
        let b = f.close_under(Closure::FiniteIntersections).unwrap();
        prop_assert!(f.is_subfamily_of(&a));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn closures_are_idempotent(f in family_strategy()) {
        for mode in [Closure::Unions, Closure::Intersections] {
            let once = f.close_under(mode).unwrap();
            prop_assert_eq!(once.close_under(mode).unwrap(), once);
        }
    }

    #[test]
    fn closed_base_duality(f in family_strategy()) {
        if f.classify().closed_base {
            let left = f.close_under(Closure::Intersections).unwrap().complement_dual();
            let right = f.complement_dual().close_under(Closure::Unions).unwrap();
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn topology_duality(seed in any::<u64>(), n in 1usize..=5) {
        let t = Corpus::new(seed).topology(n);
        let c = t.opens().complement_dual();
        prop_assert!(c.classify().closed_system);
        prop_assert!(c.complement_dual().classify().topology);
    }
}
