mod common;

use attainset::corpus::Corpus;
use attainset::topo::map_report;
use attainset::{PointMap, SetFamily, Subset, Topology, Universe};
use common::{h_universe, s, tau_h};
use proptest::prelude::*;

fn hfam(members: &[&str]) -> SetFamily {
    SetFamily::new(h_universe(), members.iter().map(|m| s(m))).unwrap()
}

#[test]
fn from_open_base_examples() {
    let t = Topology::from_open_base(&hfam(&["0", "01", "012"])).unwrap();
    assert_eq!(t.opens(), tau_h().opens());
    assert_eq!(Topology::from_open_base(tau_h().opens()).unwrap(), tau_h());
    let u = Universe::new(2).unwrap();
    let d = Topology::from_open_base(&SetFamily::new(u.clone(), [s("0"), s("1")]).unwrap()).unwrap();
    assert_eq!(d, Topology::discrete(&u).unwrap());
}

#[test]
fn from_open_base_rejects_bad_base() {
    let u = Universe::new(3).unwrap();
    let f = SetFamily::new(u, [s("01"), s("12")]).unwrap();
    assert!(Topology::from_open_base(&f).is_err());
}

#[test]
fn from_closed_base_examples() {
    let t = Topology::from_closed_base(&hfam(&["", "2", "12", "012"])).unwrap();
    assert_eq!(t, tau_h());
    let u = Universe::new(3).unwrap();
    let ind = Topology::from_closed_base(&SetFamily::new(u.clone(), [s(""), s("012")]).unwrap()).unwrap();
    assert_eq!(ind, Topology::indiscrete(&u));
    let two = Universe::new(2).unwrap();
    let singles = SetFamily::new(two, [s(""), s("0"), s("1"), s("01")]).unwrap();
    assert!(Topology::from_closed_base(&singles).unwrap().is_discrete());
}

#[test]
fn singletons_are_no_closed_base_on_three_points() {
    // {0} and {1} have no member above their union that misses 2
    let u = Universe::new(3).unwrap();
    let singles = SetFamily::new(u, [s(""), s("0"), s("1"), s("2"), s("012")]).unwrap();
    assert!(!singles.classify().closed_base);
    assert!(Topology::from_closed_base(&singles).is_err());
}

#[test]
fn from_closed_base_rejects_nonempty_meet() {
    let u = Universe::new(2).unwrap();
    let f = SetFamily::new(u, [s("0"), s("01")]).unwrap();
    assert!(Topology::from_closed_base(&f).is_err());
}

#[test]
fn closure_examples() {
    let t = tau_h();
    assert_eq!(t.closure(s("1")), s("12"));
    assert_eq!(t.closure(Subset::EMPTY), Subset::EMPTY);
    assert_eq!(t.closure(s("0")), s("012"));
    assert_eq!(t.interior(s("12")), Subset::EMPTY);
    assert_eq!(t.interior(s("01")), s("01"));
}

#[test]
fn neighborhood_examples() {
    let t = tau_h();
    assert_eq!(t.neighborhood_filter(1, true).unwrap(), hfam(&["01", "012"]));
    assert_eq!(t.neighborhood_filter(2, true).unwrap(), hfam(&["012"]));
    let n = t.neighborhood_filter(1, false).unwrap();
    assert_eq!(n, hfam(&["01", "012"]));
    let u = Universe::new(3).unwrap();
    let d = Topology::discrete(&u).unwrap();
    let all: Vec<Subset> = u.power_set().filter(|a| a.contains(0)).collect();
    assert_eq!(d.neighborhood_filter(0, false).unwrap().members(), all.as_slice());
}

#[test]
fn neighborhood_filter_rejects_bad_point() {
    assert!(tau_h().neighborhood_filter(3, true).is_err());
}

#[test]
fn local_base_examples() {
    let t = tau_h();
    assert!(t.is_local_base(&hfam(&["01"]), 1));
    for x in 0..3 {
        assert!(t.is_local_base(&hfam(&[]).with_members([t.min_nbhd(x)]).unwrap(), x));
        assert!(t.is_local_base(&t.neighborhood_filter(x, true).unwrap(), x));
    }
    assert!(!t.is_local_base(&hfam(&["012"]), 1));
    assert!(!t.is_local_base(&hfam(&["1"]), 1));
}

#[test]
fn map_report_examples() {
    let t = tau_h();
    let id = PointMap::identity(t.universe());
    let r = map_report(&id, &t, &t).unwrap();
    assert!(r.continuous && r.open_map && r.closed_map && r.bijection && r.homeomorphism);

    let e = Universe::new(4).unwrap();
    let h = PointMap::new(e.clone(), h_universe(), vec![0, 1, 1, 2]).unwrap();
    let r = map_report(&h, &Topology::discrete(&e).unwrap(), &t).unwrap();
    assert!(r.continuous && !r.bijection && !r.homeomorphism);

    let pt = Universe::new(1).unwrap();
    let c = PointMap::new(pt.clone(), h_universe(), vec![0]).unwrap();
    let r = map_report(&c, &Topology::discrete(&pt).unwrap(), &t).unwrap();
    assert!(r.continuous && !r.closed_map);
    assert!(r.homeomorphism_identities_hold());
}

#[test]
fn separation_examples() {
    let r = tau_h().separation();
    assert!(!r.t1 && !r.hausdorff && r.compact);
    let u = Universe::new(3).unwrap();
    let d = Topology::discrete(&u).unwrap().separation();
    assert!(d.t1 && d.hausdorff && d.discrete);
    assert!(!Topology::indiscrete(&u).separation().t1);
}

#[test]
fn subspace_examples() {
    let t = tau_h();
    let (sub, keep) = t.subspace(s("12")).unwrap();
    assert_eq!(keep, vec![1, 2]);
    assert_eq!(sub.opens().members(), &[s(""), s("0"), s("01")]);
    assert_eq!(sub.universe().label(0), "b");
    let (whole, _) = t.subspace(s("012")).unwrap();
    assert_eq!(whole.opens().members(), t.opens().members());
    let u = Universe::new(4).unwrap();
    let (d, _) = Topology::discrete(&u).unwrap().subspace(s("13")).unwrap();
    assert!(d.is_discrete());
    assert!(t.subspace(Subset::EMPTY).is_err());
}

#[test]
fn non_topology_is_rejected() {
    let u = Universe::new(3).unwrap();
    assert!(Topology::new(SetFamily::new(u, [s(""), s("0"), s("1"), s("012")]).unwrap()).is_err());
}

#[test]
fn specialization_dot_mentions_every_point() {
    let dot = tau_h().specialization_dot();
    assert!(dot.starts_with("digraph"));
    for l in ["a", "b", "c"] {
        assert!(dot.contains(&format!("\"{l}\"")), "{dot}");
    }
}

fn topology_strategy() -> impl Strategy<Value = Topology> {
    (any::<u64>(), 1usize..=5).prop_map(|(seed, n)| Corpus::new(seed).topology(n))
}

fn subset_pair(t: &Topology, a: u32, b: u32) -> (Subset, Subset) {
    let full = t.universe().full();
    (Subset(a).intersection(full), Subset(b).intersection(full))
}

proptest! {
    #[test]
    fn kuratowski_laws(t in topology_strategy(), a in any::<u32>(), b in any::<u32>()) {
        let (a, b) = subset_pair(&t, a, b);
        let ca = t.closure(a);
        prop_assert!(a.is_subset_of(ca));
        prop_assert_eq!(t.closure(ca), ca);
        prop_assert_eq!(t.closure(a.union(b)), ca.union(t.closure(b)));
        prop_assert_eq!(t.closure(Subset::EMPTY), Subset::EMPTY);
        if a.is_subset_of(b) {
            prop_assert!(ca.is_subset_of(t.closure(b)));
        }
    }

    #[test]
    fn closure_is_pointwise(t in topology_strategy(), a in any::<u32>()) {
        let (a, _) = subset_pair(&t, a, 0);
        let naive = Subset::from_points((0..t.universe().size()).filter(|&y| {
            t.opens().iter().filter(|g| g.contains(y)).all(|g| g.meets(a))
        }));
        prop_assert_eq!(t.closure(a), naive);
        let u = t.universe();
        prop_assert_eq!(t.interior(a), u.complement(t.closure(u.complement(a))));
    }

    #[test]
    fn min_nbhd_is_open_and_least(t in topology_strategy()) {
        for x in 0..t.universe().size() {
            let m = t.min_nbhd(x);
            prop_assert!(t.is_open(m) && m.contains(x));
            prop_assert!(t.opens().iter().filter(|g| g.contains(x)).all(|g| m.is_subset_of(g)));
        }
    }

    #[test]
    fn finite_separation_laws(t in topology_strategy()) {
        prop_assert!(t.separation().finite_laws_hold());
    }

    #[test]
    fn continuity_dual_criterion(s1 in any::<u64>(), n in 1usize..=4, m in 1usize..=4) {
        let mut c = Corpus::new(s1);
        let from = c.topology(n);
        let to = c.topology(m);
        let f = c.map(n, m);
        let r = map_report(&f, &from, &to).unwrap();
        let closed = from.closed_sets();
        let dual = to.closed_sets().iter().all(|k| closed.contains(f.preimage(k)));
        prop_assert_eq!(r.continuous, dual);
        prop_assert!(r.homeomorphism_identities_hold());
    }
}
