mod common;

use attainset::corpus::Corpus;
use attainset::filters::{
    admissible_filters, admissible_ultrafilters, enumerate_ultrafilters, extend_to_ultrafilter,
    filter_image, trace_ultrafilter, trivial_trace,
};
use attainset::oracle::{filters_naive, filters_pruned, maximal};
use attainset::ultraspace::build_space;
use attainset::{Ambient, Closure, Error, Filter, FilterBase, PointMap, SetFamily, Subset, Universe};
use common::{a4, fam, h_universe, l3, s};
use proptest::prelude::*;

fn amb(f: SetFamily) -> Ambient {
    Ambient::family(f).unwrap()
}

fn power(n: usize) -> Ambient {
    Ambient::power_set(&Universe::new(n).unwrap())
}

fn mins(us: &[attainset::Ultrafilter]) -> Vec<Subset> {
    us.iter().map(|u| u.min()).collect()
}

fn oracle_mins(f: &SetFamily) -> Vec<Subset> {
    let mut v: Vec<Subset> = maximal(&filters_naive(f.members()))
        .iter()
        .map(|m| m.iter().fold(f.universe().full(), |a, &b| a.intersection(b)))
        .collect();
    v.sort();
    v
}

#[test]
fn generated_filter_examples() {
    let b = FilterBase::new(amb(a4()), fam(4, &["01"])).unwrap();
    assert_eq!(b.generated_filter().unwrap().members().unwrap(), vec![s("01"), s("0123")]);

    let f = Filter::principal(amb(a4()), s("23")).unwrap();
    let again = FilterBase::from_filter(&f).generated_filter().unwrap();
    assert_eq!(again, f);

    let b = FilterBase::new(power(4), fam(4, &["123", "23"])).unwrap();
    let g = b.generated_filter().unwrap();
    let want: Vec<Subset> = Universe::new(4).unwrap().power_set().filter(|x| s("23").is_subset_of(*x)).collect();
    assert_eq!(g.members().unwrap(), want);
}

#[test]
fn improper_base_is_flagged() {
    let b = FilterBase::new(power(2), fam(2, &["", "01"])).unwrap();
    assert!(!b.is_proper());
    assert_eq!(b.generated_filter().unwrap_err(), Error::ImproperBase);
}

#[test]
fn undirected_base_is_rejected() {
    let r = FilterBase::new(amb(l3()), fam(3, &["0", "1"]));
    assert!(matches!(r, Err(Error::NotDirected(..))));
}

#[test]
fn enumerate_examples() {
    assert_eq!(mins(&enumerate_ultrafilters(&amb(a4()))), vec![s("01"), s("23")]);
    let triv = enumerate_ultrafilters(&amb(fam(3, &["", "012"])));
    assert_eq!(mins(&triv), vec![s("012")]);
    let p = enumerate_ultrafilters(&power(3));
    assert_eq!(mins(&p), vec![s("0"), s("1"), s("2")]);
    assert_eq!(p[1].point(), Some(1));
}

#[test]
fn non_pi_system_ambient_is_rejected() {
    assert!(Ambient::family(fam(3, &["01", "12"])).is_err());
}

#[test]
fn extension_examples() {
    let top = Filter::principal(amb(a4()), s("0123")).unwrap();
    assert_eq!(extend_to_ultrafilter(&top).min(), s("01"));
    let u = Filter::principal(amb(a4()), s("23")).unwrap();
    assert_eq!(extend_to_ultrafilter(&u).min(), s("23"));
    let f = Filter::principal(power(4), s("01")).unwrap();
    assert_eq!(extend_to_ultrafilter(&f).point(), Some(0));
}

#[test]
fn admissible_examples() {
    let all = admissible_ultrafilters(&amb(a4()), &fam(4, &["0123"])).unwrap();
    assert_eq!(all.len(), 2);
    let one = admissible_ultrafilters(&amb(a4()), &fam(4, &["01"])).unwrap();
    assert_eq!(mins(&one), vec![s("01")]);
    assert!(admissible_ultrafilters(&power(2), &fam(2, &["0", "1"])).unwrap().is_empty());
}

#[test]
fn admissible_rejects_constraint_outside_ambient() {
    assert!(admissible_ultrafilters(&amb(a4()), &fam(4, &["0"])).is_err());
}

#[test]
fn trivial_trace_examples() {
    let t = trivial_trace(0, &amb(a4())).unwrap();
    assert_eq!(t.filter.members().unwrap(), vec![s("01"), s("0123")]);
    assert!(t.maximal && t.maximal_by_hypothesis);

    let p = trivial_trace(0, &power(4)).unwrap();
    assert_eq!(p.filter.min(), s("0"));
    assert!(p.maximal);

    let l = trivial_trace(2, &amb(l3())).unwrap();
    assert_eq!(l.filter.members().unwrap(), vec![s("012")]);
    assert!(!l.maximal && !l.maximal_by_hypothesis);
    let bigger = Filter::principal(amb(l3()), s("0")).unwrap();
    assert!(l.filter.is_subfilter_of(&bigger) && l.filter != bigger);
}

#[test]
fn trace_ultrafilter_examples() {
    let p = enumerate_ultrafilters(&power(4));
    let (f0, out) = trace_ultrafilter(&p[0], &a4()).unwrap();
    assert_eq!(f0.members().unwrap(), vec![s("01"), s("0123")]);
    assert!(out.maximal && out.surjective && out.target_is_algebra);
    let (f2, _) = trace_ultrafilter(&p[2], &a4()).unwrap();
    assert_eq!(f2.members().unwrap(), vec![s("23"), s("0123")]);
    for u in &p {
        let (t, out) = trace_ultrafilter(u, &fam(4, &["", "0123"])).unwrap();
        assert_eq!(t.members().unwrap(), vec![s("0123")]);
        assert!(out.maximal);
    }
}

#[test]
fn filter_image_examples() {
    let e = Universe::new(4).unwrap();
    let h = PointMap::new(e.clone(), h_universe(), vec![0, 1, 1, 2]).unwrap();
    let at1 = &enumerate_ultrafilters(&power(4))[1];
    let img = filter_image(&h, &FilterBase::from_filter(at1.filter())).unwrap();
    let g = img.generated_filter().unwrap();
    assert_eq!(g.min(), s("1"));
    assert!(g.is_ultrafilter());

    let id = PointMap::identity(&e);
    let b = FilterBase::new(power(4), fam(4, &["01", "0123"])).unwrap();
    assert_eq!(filter_image(&id, &b).unwrap().members(), b.members());

    let a = FilterBase::new(power(4), fam(4, &["01", "0123"])).unwrap();
    let img = filter_image(&h, &a).unwrap();
    assert_eq!(img.members().members(), &[s("01"), s("012")]);
}

/// Every family of subsets of a two-point set that is a pi-system.
fn pi_systems_on_two() -> Vec<SetFamily> {
    let u = Universe::new(2).unwrap();
    let all: Vec<Subset> = u.power_set().collect();
    (1u32..1 << all.len())
        .map(|mask| {
            SetFamily::new(u.clone(), (0..all.len()).filter(|&i| mask >> i & 1 == 1).map(|i| all[i])).unwrap()
        })
        .filter(|f| f.classify().pi_system)
        .collect()
}

#[test]
fn enumeration_matches_search_on_every_two_point_pi_system() {
    let fams = pi_systems_on_two();
    assert_eq!(fams.len(), 4);
    for f in fams {
        assert_eq!(mins(&enumerate_ultrafilters(&amb(f.clone()))), oracle_mins(&f), "{}", f.show());
    }
}

#[test]
fn enumeration_matches_search_on_random_pi_systems() {
    let mut c = Corpus::new(11);
    for i in 0..600 {
        let n = 3 + i % 3;
        let f = c.pi_system(n);
        let want: Vec<Subset> = {
            let mut v: Vec<Subset> = maximal(&filters_pruned(f.members()))
                .iter()
                .map(|m| m.iter().fold(f.universe().full(), |a, &b| a.intersection(b)))
                .collect();
            v.sort();
            v
        };
        assert_eq!(mins(&enumerate_ultrafilters(&amb(f.clone()))), want, "{}", f.show());
    }
}

#[test]
fn pruned_and_naive_filter_searches_agree() {
    let mut c = Corpus::new(5);
    for _ in 0..200 {
        let f = c.pi_system(3);
        if f.len() > 20 {
            continue;
        }
        let mut naive = filters_naive(f.members());
        for x in naive.iter_mut() {
            x.sort();
        }
        naive.sort();
        assert_eq!(naive, filters_pruned(f.members()));
    }
}

#[test]
fn filters_are_principal() {
    let mut c = Corpus::new(3);
    for _ in 0..200 {
        let f = c.pi_system(4);
        for m in filters_pruned(f.members()) {
            let min = m.iter().fold(f.universe().full(), |a, &b| a.intersection(b));
            let p = Filter::principal(amb(f.clone()), min).unwrap();
            assert_eq!(p.members().unwrap(), m);
        }
    }
}

#[test]
fn union_splitting_on_lattices() {
    let mut c = Corpus::new(9);
    for _ in 0..300 {
        let l = c.lattice(5);
        for u in enumerate_ultrafilters(&amb(l.clone())) {
            for a in l.iter() {
                for b in l.iter() {
                    if u.contains(a.union(b)) {
                        assert!(u.contains(a) || u.contains(b));
                    }
                }
            }
        }
    }
}

#[test]
fn ultrafilter_family_of_a_non_lattice_is_no_lattice() {
    // splitting itself never fails on a finite pi-system; what breaks
    // without unions is the lattice structure of the phi family
    let l = fam(3, &["", "0", "1", "2", "012"]);
    assert!(l.classify().pi_system && !l.classify().lattice);
    let space = build_space(&l).unwrap();
    assert_eq!(space.points().len(), 3);
    assert!(!space.uf().classify().lattice);
}

#[test]
fn dichotomy_on_algebras() {
    let mut c = Corpus::new(13);
    for _ in 0..200 {
        let a = c.algebra(5);
        let u = a.universe();
        let mut dich: Vec<Subset> = filters_pruned(a.members())
            .into_iter()
            .filter(|f| a.iter().all(|x| f.contains(&x) || f.contains(&u.complement(x))))
            .map(|f| f.iter().fold(u.full(), |acc, &b| acc.intersection(b)))
            .collect();
        dich.sort();
        assert_eq!(mins(&enumerate_ultrafilters(&amb(a.clone()))), dich);
    }
}

#[test]
fn dichotomy_without_an_algebra() {
    // the converse fails: every ultrafilter here is dichotomous, yet the
    // family is not closed under complements
    let f = fam(2, &["", "0", "01"]);
    assert!(!f.classify().algebra);
    let dich: Vec<Vec<Subset>> = filters_pruned(f.members())
        .into_iter()
        .filter(|x| f.iter().all(|a| x.contains(&a) || x.contains(&f.universe().complement(a))))
        .collect();
    assert_eq!(dich, vec![vec![s("0"), s("01")]]);
    assert_eq!(mins(&enumerate_ultrafilters(&amb(f))), vec![s("0")]);
}

#[test]
fn filters_are_meets_of_their_ultrafilters() {
    for n in 1..=4 {
        let p = power(n);
        let us = enumerate_ultrafilters(&p);
        for m in p.universe().power_set().filter(|x| !x.is_empty()) {
            let f = Filter::principal(p.clone(), m).unwrap();
            let above: Vec<_> = us.iter().filter(|u| f.is_subfilter_of(u.filter())).collect();
            for x in p.universe().power_set() {
                assert_eq!(f.contains(x), above.iter().all(|u| u.contains(x)));
            }
        }
    }
}

#[test]
fn admissibility_ignores_finite_intersections() {
    let mut c = Corpus::new(21);
    for _ in 0..300 {
        let l = c.pi_system(5);
        let cons = c.constraint_from(&l);
        let closed = cons.close_under(Closure::FiniteIntersections).unwrap();
        let a = amb(l);
        assert_eq!(
            mins(&admissible_ultrafilters(&a, &cons).unwrap()),
            mins(&admissible_ultrafilters(&a, &closed).unwrap())
        );
        let f1: Vec<Subset> = admissible_filters(&a, &cons).unwrap().iter().map(Filter::min).collect();
        let f2: Vec<Subset> = admissible_filters(&a, &closed).unwrap().iter().map(Filter::min).collect();
        assert_eq!(f1, f2);
    }
}

proptest! {
    #[test]
    fn extension_is_above_and_maximal(seed in any::<u64>(), n in 1usize..=5) {
        let mut c = Corpus::new(seed);
        let l = c.pi_system(n);
        let a = amb(l.clone());
        for f in admissible_filters(&a, &fam(n, &[&"01234"[..n]])).unwrap() {
            let u = extend_to_ultrafilter(&f);
            prop_assert!(f.is_subfilter_of(u.filter()));
            prop_assert!(u.filter().is_ultrafilter());
        }
    }

    #[test]
    fn images_of_ultrafilters_are_ultrafilters(seed in any::<u64>(), e in 1usize..=5, h in 1usize..=5) {
        let mut c = Corpus::new(seed);
        let f = c.map(e, h);
        for u in enumerate_ultrafilters(&power(e)) {
            let img = filter_image(&f, &FilterBase::from_filter(u.filter())).unwrap();
            prop_assert!(img.generated_filter().unwrap().is_ultrafilter());
        }
    }
}
