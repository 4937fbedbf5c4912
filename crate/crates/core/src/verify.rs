//! Brute-force verification suite. Every entry draws its own seeded
//! instances, so entries run in parallel and the report does not depend on
//! scheduling.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::attraction::{
    attraction_set_direct, attraction_set_via_ultrafilters, condition_check, convergence_forms,
    converges, generalized_solution_pipeline, image_convergence_forms, limit_set,
    partial_attraction, ultra_limit_map, AttractionProblem,
};
use crate::corpus::{Class, Corpus};
use crate::filters::{
    admissible_filters, admissible_ultrafilters, enumerate_ultrafilters, extend_to_ultrafilter,
    filter_image, trace_ultrafilter, trivial_trace, Ambient, Filter, FilterBase,
};
use crate::oracle;
use crate::report::Checks;
use crate::topo::{map_report, Topology};
use crate::ultraspace::{build_space, stone_report, wallman_embedding, Which};
use crate::universe::{
    generate_algebra, literal_compactness, Closure, PointMap, Property, SetFamily, Subset,
    Universe,
};

#[derive(Clone, Debug, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Largest universe drawn for any instance.
    pub max_universe: usize,
    /// Instances drawn per entry.
    pub instances: usize,
}

impl Default for VerifyConfig {
    fn default() -> VerifyConfig {
        VerifyConfig {
            seed: 42,
            max_universe: 6,
            instances: 100,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub id: String,
    pub name: String,
    pub instances_run: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure_witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Finding {
    pub name: String,
    pub instances: usize,
    pub observed: usize,
    pub note: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub entries: usize,
    pub passed: usize,
    pub failed: usize,
    pub instances: usize,
    pub all_passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub max_universe: usize,
    pub entries: Vec<Entry>,
    pub summary: Summary,
    pub exploratory: Vec<Finding>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.summary.all_passed
    }

    pub fn entry(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!(
                "{} {:<10} {:<44} {:>5}",
                if e.passed { "PASS" } else { "FAIL" },
                e.id,
                e.name,
                e.instances_run
            ));
            if let Some(w) = &e.first_failure_witness {
                out.push_str(&format!("  {w}"));
            }
            out.push('\n');
        }
        for f in &self.exploratory {
            out.push_str(&format!("note {}: {}/{} {}\n", f.name, f.observed, f.instances, f.note));
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{} of {} entries passed over {} instances\n",
            s.passed, s.entries, s.instances
        ));
        out
    }
}

/// Numeric parts of an id, then the id itself.
pub fn id_key(id: &str) -> (Vec<u32>, String) {
    if id == "a_I°" {
        return (vec![2, 10, 1], id.to_string());
    }
    let nums = id
        .split(|c: char| !c.is_ascii_digit())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().unwrap())
        .collect();
    (nums, id.to_string())
}

/// `Ok(true)`: the instance met the hypothesis and passed. `Ok(false)`: the
/// hypothesis did not apply. `Err`: a failure witness.
type Case = std::result::Result<bool, String>;
type Out<T> = std::result::Result<T, String>;

struct Suite {
    id: &'static str,
    name: &'static str,
    run: fn(&mut Run) -> Case,
}

fn lib<T>(r: crate::Result<T>) -> Out<T> {
    r.map_err(|e| e.to_string())
}

fn ensure(ok: bool, w: impl FnOnce() -> String) -> Out<()> {
    if ok {
        Ok(())
    } else {
        Err(w())
    }
}

struct Run {
    c: Corpus,
    fam_n: usize,
    e_n: usize,
    h_n: usize,
}

impl Run {
    fn size(&mut self, cap: usize) -> usize {
        let m = cap.min(self.fam_n).max(1);
        self.c.rng().gen_range(1..=m)
    }

    fn coin(&mut self, p: f64) -> bool {
        self.c.rng().gen_bool(p)
    }

    fn random_family(&mut self, n: usize) -> SetFamily {
        let k = self.c.rng().gen_range(1..=6);
        let sets: Vec<Subset> = (0..k).map(|_| self.c.subset(n)).collect();
        SetFamily::new(Corpus::universe(n), sets).unwrap()
    }

    fn structured(&mut self, n: usize) -> SetFamily {
        let class = *Class::ALL.choose(self.c.rng()).unwrap();
        self.c.instance(class, n).family
    }

    /// Half structured instances, half arbitrary small families.
    fn any_family(&mut self) -> SetFamily {
        let n = self.size(5);
        if self.coin(0.5) {
            self.structured(n)
        } else {
            self.random_family(n)
        }
    }

    fn pi_system(&mut self) -> SetFamily {
        let n = self.size(5);
        self.c.pi_system(n)
    }

    fn lattice(&mut self) -> SetFamily {
        let n = self.size(5);
        self.c.lattice(n)
    }

    fn algebra(&mut self) -> SetFamily {
        let n = self.size(5);
        self.c.algebra(n)
    }

    fn topology(&mut self) -> Topology {
        let n = self.size(5);
        self.c.topology(n)
    }

    fn sizes(&mut self) -> (usize, usize) {
        let e = self.c.rng().gen_range(1..=self.e_n);
        let h = self.c.rng().gen_range(1..=self.h_n);
        (e, h)
    }

    fn problem(&mut self) -> AttractionProblem {
        let (e, h) = self.sizes();
        self.c.problem(e, h)
    }

    /// Arbitrary topology with an algebra containing the constraint.
    fn algebra_problem(&mut self) -> AttractionProblem {
        let (e, h) = self.sizes();
        let tau = self.c.topology(h);
        let map = self.c.map(e, h);
        let alg = self.c.algebra(e);
        let constraint = self.c.constraint_from(&alg);
        AttractionProblem::new(tau, map, constraint, Some(alg)).unwrap()
    }

    fn pipeline(&mut self) -> AttractionProblem {
        let (e, h) = self.sizes();
        self.c.pipeline_problem(e, h)
    }

    /// A proper base on the power set: supersets of a common nonempty core,
    /// closed under intersection.
    fn power_base(&mut self, u: &Universe) -> FilterBase {
        let n = u.size();
        let core = Subset::singleton(self.c.rng().gen_range(0..n)).union(if self.coin(0.5) {
            self.c.subset(n)
        } else {
            Subset::EMPTY
        });
        let k = self.c.rng().gen_range(1..=3);
        let sets: Vec<Subset> = (0..k).map(|_| self.c.superset(n, core, 0.5)).collect();
        let fam = SetFamily::new(u.clone(), sets)
            .unwrap()
            .close_under(Closure::FiniteIntersections)
            .unwrap();
        FilterBase::new(Ambient::power_set(u), fam).unwrap()
    }

    fn point(&mut self, u: &Universe) -> usize {
        self.c.rng().gen_range(0..u.size())
    }
}

// ---------------------------------------------------------------------------
// definitions written out directly

fn union_closed(m: &[Subset]) -> bool {
    let set: HashSet<Subset> = m.iter().copied().collect();
    m.iter().all(|&a| m.iter().all(|&b| set.contains(&a.union(b))))
}

fn inter_closed(m: &[Subset]) -> bool {
    let set: HashSet<Subset> = m.iter().copied().collect();
    m.iter()
        .all(|&a| m.iter().all(|&b| set.contains(&a.intersection(b))))
}

fn naive_pi(f: &SetFamily) -> bool {
    let m = f.members();
    m.contains(&Subset::EMPTY) && m.contains(&f.universe().full()) && inter_closed(m)
}

fn naive_lattice(f: &SetFamily) -> bool {
    let m = f.members();
    m.contains(&Subset::EMPTY) && union_closed(m) && inter_closed(m)
}

/// Union of every nonempty subfamily is a member, found by growing the set
/// of reachable unions to a fixed point.
fn all_unions_present(m: &[Subset]) -> bool {
    let members: HashSet<Subset> = m.iter().copied().collect();
    let mut reach: HashSet<Subset> = members.clone();
    loop {
        let grown: Vec<Subset> = reach
            .iter()
            .flat_map(|&a| m.iter().map(move |&b| a.union(b)))
            .filter(|s| !reach.contains(s))
            .collect();
        if grown.is_empty() {
            break;
        }
        reach.extend(grown);
    }
    reach.is_subset(&members)
}

fn naive_topology(f: &SetFamily) -> bool {
    naive_pi(f) && all_unions_present(f.members())
}

fn naive_closed_system(f: &SetFamily) -> bool {
    let m = f.members();
    m.contains(&Subset::EMPTY) && m.contains(&f.universe().full()) && union_closed(m) && inter_closed(m)
}

fn naive_algebra(f: &SetFamily) -> bool {
    naive_pi(f) && f.iter().all(|s| f.contains(f.universe().complement(s)))
}

fn tiles(rest: Subset, m: &[Subset]) -> bool {
    match rest.lowest() {
        None => true,
        Some(p) => m
            .iter()
            .any(|&b| b.contains(p) && b.is_subset_of(rest) && tiles(rest.difference(b), m)),
    }
}

fn naive_semialgebra(f: &SetFamily) -> bool {
    naive_pi(f) && f.iter().all(|s| tiles(f.universe().complement(s), f.members()))
}

fn naive_open_base(f: &SetFamily) -> bool {
    let m = f.members();
    let covers = m.iter().fold(Subset::EMPTY, |a, &s| a.union(s)) == f.universe().full();
    covers
        && m.iter().all(|&b1| {
            m.iter().all(|&b2| {
                b1.intersection(b2).points().all(|x| {
                    m.iter()
                        .any(|&b3| b3.contains(x) && b3.is_subset_of(b1.intersection(b2)))
                })
            })
        })
}

fn naive_closed_base(f: &SetFamily) -> bool {
    let u = f.universe();
    let m = f.members();
    let meet = m.iter().fold(u.full(), |a, &s| a.intersection(s));
    m.contains(&u.full())
        && meet.is_empty()
        && m.iter().all(|&b1| {
            m.iter().all(|&b2| {
                u.complement(b1.union(b2)).points().all(|x| {
                    m.iter()
                        .any(|&b3| b1.union(b2).is_subset_of(b3) && !b3.contains(x))
                })
            })
        })
}

fn naive_t1(f: &SetFamily) -> bool {
    let u = f.universe();
    naive_topology(f) && (0..u.size()).all(|x| f.contains(u.complement(Subset::singleton(x))))
}

/// Points every open neighborhood of which meets `s`.
fn naive_closure(t: &Topology, s: Subset) -> Subset {
    Subset::from_points(
        (0..t.universe().size())
            .filter(|&y| t.opens().iter().filter(|g| g.contains(y)).all(|g| g.meets(s))),
    )
}

/// Sets containing an open set around `x`.
fn naive_nbhds(t: &Topology, x: usize) -> Vec<Subset> {
    t.universe()
        .power_set()
        .filter(|&a| t.opens().iter().any(|g| g.contains(x) && g.is_subset_of(a)))
        .collect()
}

fn upward(u: &Universe, base: &[Subset]) -> Vec<Subset> {
    u.power_set()
        .filter(|&s| base.iter().any(|b| b.is_subset_of(s)))
        .collect()
}

fn flag(f: &SetFamily, p: Property, naive: bool) -> Case {
    let got = f.classify().holds(p);
    ensure(got == naive, || {
        format!("{} flagged {p} = {got}, definition gives {naive}", f.show())
    })?;
    Ok(true)
}

fn named(checks: &Checks, names: &[&str]) -> Case {
    let mut seen = false;
    for n in names {
        if let Some(c) = checks.get(n) {
            seen = true;
            if !c.passed {
                return Err(format!("{n}: {}", c.witness.clone().unwrap_or_default()));
            }
        }
    }
    Ok(seen)
}

// ---------------------------------------------------------------------------
// families

fn e_pi(r: &mut Run) -> Case {
    let f = r.any_family();
    flag(&f, Property::PiSystem, naive_pi(&f))
}

fn e_lattice(r: &mut Run) -> Case {
    let f = r.any_family();
    flag(&f, Property::Lattice, naive_lattice(&f))
}

fn e_lattice_unit(r: &mut Run) -> Case {
    let f = r.any_family();
    let naive = naive_lattice(&f) && f.contains(f.universe().full());
    flag(&f, Property::LatticeWithUnit, naive)?;
    if naive_lattice(&f) {
        let g = lib(f.with_members([f.universe().full()]))?;
        ensure(g.classify().lattice_with_unit, || {
            format!("adding the unit to {} breaks the lattice", f.show())
        })?;
    }
    Ok(true)
}

fn e_topology(r: &mut Run) -> Case {
    let f = r.any_family();
    flag(&f, Property::Topology, naive_topology(&f))
}

fn e_closed_system(r: &mut Run) -> Case {
    let f = r.any_family();
    flag(&f, Property::ClosedSystem, naive_closed_system(&f))
}

fn e_complement(r: &mut Run) -> Case {
    let f = r.any_family();
    let u = f.universe();
    let d = f.complement_dual();
    ensure(d.len() == f.len() && f.iter().all(|s| d.contains(u.complement(s))), || {
        format!("dual of {} is {}", f.show(), d.show())
    })?;
    Ok(true)
}

fn e_duality(r: &mut Run) -> Case {
    let f = r.any_family();
    let back = f.complement_dual().complement_dual();
    ensure(back == f, || format!("{} came back as {}", f.show(), back.show()))?;
    let t = r.topology();
    let closed = t.opens().complement_dual();
    ensure(naive_closed_system(&closed) && closed.classify().closed_system, || {
        format!("complements of {} are not a closed system", t.opens().show())
    })?;
    let opens = closed.complement_dual();
    ensure(naive_topology(&opens) && opens.classify().topology, || {
        format!("complements of {} are not a topology", closed.show())
    })?;
    Ok(true)
}

fn e_algebra(r: &mut Run) -> Case {
    let f = r.any_family();
    let naive = naive_algebra(&f);
    flag(&f, Property::Algebra, naive)?;
    let rep = f.classify();
    ensure(!rep.algebra || (rep.lattice_with_unit && rep.pi_system), || {
        format!("{} is an algebra but not a lattice with unit", f.show())
    })?;
    Ok(true)
}

fn e_semialgebra(r: &mut Run) -> Case {
    let f = r.any_family();
    flag(&f, Property::Semialgebra, naive_semialgebra(&f))?;
    let rep = f.classify();
    ensure(!rep.algebra || rep.semialgebra, || {
        format!("algebra {} not flagged as a semialgebra", f.show())
    })?;
    Ok(true)
}

fn e_generated_algebra(r: &mut Run) -> Case {
    let n = r.size(5);
    let f = if r.coin(0.7) {
        r.c.semialgebra(n)
    } else {
        r.structured(n)
    };
    if !f.classify().semialgebra {
        ensure(generate_algebra(&f).is_err(), || {
            format!("{} is not a semialgebra yet an algebra was produced", f.show())
        })?;
        return Ok(true);
    }
    let got = lib(generate_algebra(&f))?;
    let want = if n <= 3 {
        SetFamily::new(f.universe().clone(), oracle::smallest_algebra(n, f.members())).unwrap()
    } else {
        // blocks of points that no member separates
        let mut blocks: Vec<Subset> = Vec::new();
        for x in 0..n {
            match blocks.iter_mut().find(|b| {
                let y = b.lowest().unwrap();
                f.iter().all(|s| s.contains(x) == s.contains(y))
            }) {
                Some(b) => *b = b.with(x),
                None => blocks.push(Subset::singleton(x)),
            }
        }
        Corpus::algebra_from_blocks(n, &blocks)
    };
    ensure(got == want, || {
        format!("generated {} from {}, expected {}", got.show(), f.show(), want.show())
    })?;
    Ok(true)
}

fn base_family(r: &mut Run) -> SetFamily {
    if r.coin(0.5) {
        let t = r.topology();
        if r.coin(0.5) {
            t.closed_sets()
        } else {
            t.opens().clone()
        }
    } else {
        r.any_family()
    }
}

fn e_open_base(r: &mut Run) -> Case {
    let f = base_family(r);
    flag(&f, Property::OpenBase, naive_open_base(&f))
}

fn e_closed_base(r: &mut Run) -> Case {
    let f = base_family(r);
    flag(&f, Property::ClosedBase, naive_closed_base(&f))
}

fn e_base_duality(r: &mut Run) -> Case {
    let f = base_family(r);
    let rep = f.classify();
    let d = f.complement_dual();
    if rep.closed_base {
        ensure(naive_open_base(&d) && d.contains(Subset::EMPTY), || {
            format!("complements of closed base {} are not an open base with the empty set", f.show())
        })?;
    }
    if rep.open_base_with_empty {
        ensure(naive_closed_base(&d), || {
            format!("complements of open base {} are not a closed base", f.show())
        })?;
    }
    Ok(rep.closed_base || rep.open_base_with_empty)
}

fn closed_base(r: &mut Run) -> Option<SetFamily> {
    let f = base_family(r);
    f.classify().closed_base.then_some(f)
}

fn e_base_meets(r: &mut Run) -> Case {
    let Some(b) = closed_base(r) else { return Ok(false) };
    let c = lib(b.close_under(Closure::Intersections))?;
    ensure(naive_closed_system(&c), || {
        format!("intersections of {} are not a closed system", b.show())
    })?;
    Ok(true)
}

fn e_base_topology(r: &mut Run) -> Case {
    let Some(b) = closed_base(r) else { return Ok(false) };
    let t = lib(b.close_under(Closure::Intersections))?.complement_dual();
    ensure(naive_topology(&t), || {
        format!("complements of intersections of {} are not a topology", b.show())
    })?;
    lib(Topology::from_closed_base(&b))?;
    Ok(true)
}

fn e_base_identity(r: &mut Run) -> Case {
    let Some(b) = closed_base(r) else { return Ok(false) };
    let left = lib(b.close_under(Closure::Intersections))?.complement_dual();
    let d = b.complement_dual();
    // unions of the dual, grown to a fixed point, with the empty union
    let mut reach: HashSet<Subset> = d.iter().collect();
    reach.insert(Subset::EMPTY);
    loop {
        let grown: Vec<Subset> = reach
            .iter()
            .flat_map(|&a| d.iter().map(move |s| a.union(s)))
            .filter(|s| !reach.contains(s))
            .collect();
        if grown.is_empty() {
            break;
        }
        reach.extend(grown);
    }
    let right = SetFamily::new(b.universe().clone(), reach).unwrap();
    ensure(left == right && lib(d.close_under(Closure::Unions))? == right, || {
        format!("{} vs {}", left.show(), right.show())
    })?;
    Ok(true)
}

fn e_t1(r: &mut Run) -> Case {
    let f = if r.coin(0.3) {
        let n = r.size(5);
        lib(Topology::discrete(&Corpus::universe(n)))?.opens().clone()
    } else {
        r.any_family()
    };
    flag(&f, Property::T1Topology, naive_t1(&f))
}

fn e_local_base(r: &mut Run) -> Case {
    let t = r.topology();
    let u = t.universe().clone();
    let x = r.point(&u);
    let m = t.min_nbhd(x);
    let k = r.c.rng().gen_range(1..=3);
    let mut sets: Vec<Subset> = (0..k)
        .map(|_| {
            if r.coin(0.6) {
                r.c.superset(u.size(), m, 0.3)
            } else {
                r.c.subset(u.size())
            }
        })
        .collect();
    if r.coin(0.5) {
        sets.push(m);
    }
    let z = SetFamily::new(u.clone(), sets).unwrap();
    let nb = naive_nbhds(&t, x);
    let naive = z.iter().all(|s| nb.contains(&s)) && nb.iter().all(|&a| z.iter().any(|b| b.is_subset_of(a)));
    let got = t.is_local_base(&z, x);
    ensure(got == naive, || {
        format!("{} at {x}: got {got}, definition {naive}", z.show())
    })?;
    Ok(true)
}

// ---------------------------------------------------------------------------
// filters on the power set

fn small_power(r: &mut Run) -> Universe {
    let n = r.size(4);
    Corpus::universe(n)
}

fn e_filters(r: &mut Run) -> Case {
    let u = small_power(r);
    let members: Vec<Subset> = u.power_set().collect();
    let mut naive: Vec<Vec<Subset>> = oracle::filters_naive(&members)
        .into_iter()
        .map(|mut f| {
            f.sort();
            f
        })
        .collect();
    naive.sort();
    let amb = Ambient::power_set(&u);
    let mut fast: Vec<Vec<Subset>> = u
        .power_set()
        .filter(|s| !s.is_empty())
        .map(|m| lib(Filter::principal(amb.clone(), m).and_then(|f| f.members())))
        .collect::<Out<_>>()?;
    fast.sort();
    ensure(naive == fast, || {
        format!("{} filters by search, {} principal", naive.len(), fast.len())
    })?;
    Ok(true)
}

fn e_ultrafilters(r: &mut Run) -> Case {
    let u = small_power(r);
    let members: Vec<Subset> = u.power_set().collect();
    let mut naive: Vec<Subset> = oracle::maximal(&oracle::filters_naive(&members))
        .iter()
        .map(|f| f.iter().fold(u.full(), |a, &s| a.intersection(s)))
        .collect();
    naive.sort();
    let fast: Vec<Subset> = enumerate_ultrafilters(&Ambient::power_set(&u))
        .iter()
        .map(|x| x.min())
        .collect();
    ensure(naive == fast, || format!("{naive:?} vs {fast:?}"))?;
    Ok(true)
}

fn e_generated_filter(r: &mut Run) -> Case {
    let n = r.c.rng().gen_range(1..=r.e_n);
    let u = Corpus::universe(n);
    let b = r.power_base(&u);
    let want = upward(&u, b.members().members());
    let got = lib(lib(b.generated_filter())?.members())?;
    let set: HashSet<Subset> = want.iter().copied().collect();
    let is_filter = !set.contains(&Subset::EMPTY)
        && want.iter().all(|&a| want.iter().all(|&c| set.contains(&a.intersection(c))));
    ensure(is_filter && got == want, || {
        format!("base {} generates {:?}", b.members().show(), got)
    })?;
    Ok(true)
}

fn e_convergence_base(r: &mut Run) -> Case {
    let t = r.topology();
    let u = t.universe().clone();
    let b = r.power_base(&u);
    for y in 0..u.size() {
        let f = lib(convergence_forms(&b, &t, y))?;
        ensure(f.neighborhoods == f.minimal_neighborhood, || {
            format!("base {} at {y}: {f:?}", b.members().show())
        })?;
    }
    Ok(true)
}

fn e_convergence_filter(r: &mut Run) -> Case {
    let t = r.topology();
    let u = t.universe().clone();
    let min = Subset::singleton(r.point(&u)).union(r.c.subset(u.size()));
    let f = lib(Filter::principal(Ambient::power_set(&u), min))?;
    let members = lib(f.members())?;
    let base = FilterBase::from_filter(&f);
    for y in 0..u.size() {
        let naive = naive_nbhds(&t, y).iter().all(|s| members.contains(s));
        ensure(converges(&base, &t, y) == naive, || {
            format!("filter above {} at {y}", u.show(min))
        })?;
    }
    Ok(true)
}

fn e_trivial_ultrafilter(r: &mut Run) -> Case {
    let u = small_power(r);
    let members: Vec<Subset> = u.power_set().collect();
    let maximal = oracle::maximal(&oracle::filters_naive(&members));
    for x in 0..u.size() {
        let t = lib(trivial_trace(x, &Ambient::power_set(&u)))?;
        let fixed: Vec<Subset> = members.iter().copied().filter(|s| s.contains(x)).collect();
        ensure(t.maximal && t.filter.min() == Subset::singleton(x) && maximal.contains(&fixed), || {
            format!("sets containing {x} are not an ultrafilter")
        })?;
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// attraction sets

fn filter_form(p: &AttractionProblem) -> Out<Subset> {
    let amb = Ambient::power_set(p.domain());
    let mut out = Subset::EMPTY;
    for f in lib(admissible_filters(&amb, p.constraint()))? {
        let img = lib(filter_image(p.map(), &FilterBase::from_filter(&f)))?;
        for z in 0..p.tau().universe().size() {
            if converges(&img, p.tau(), z) {
                out = out.with(z);
            }
        }
    }
    Ok(out)
}

fn mismatch(p: &AttractionProblem, what: &str, a: Subset, b: Subset) -> String {
    let hu = p.tau().universe();
    format!(
        "{what}: {} vs {} for constraint {}",
        hu.show(a),
        hu.show(b),
        p.constraint().show()
    )
}

fn e_filter_form_definition(r: &mut Run) -> Case {
    let p = r.problem();
    let (a, b) = (filter_form(&p)?, oracle::attraction_set(&p));
    ensure(a == b, || mismatch(&p, "filter form vs definition", a, b))?;
    Ok(true)
}

fn e_filter_form(r: &mut Run) -> Case {
    let p = r.problem();
    let (a, b) = (filter_form(&p)?, lib(attraction_set_direct(&p))?);
    ensure(a == b, || mismatch(&p, "filter form vs direct", a, b))?;
    Ok(true)
}

fn e_ultra_form_definition(r: &mut Run) -> Case {
    let p = r.problem();
    let (a, b) = (lib(attraction_set_via_ultrafilters(&p))?, oracle::attraction_set(&p));
    ensure(a == b, || mismatch(&p, "ultrafilter form vs definition", a, b))?;
    Ok(true)
}

fn e_ultra_form(r: &mut Run) -> Case {
    let p = r.problem();
    let (a, b) = (lib(attraction_set_via_ultrafilters(&p))?, lib(attraction_set_direct(&p))?);
    ensure(a == b, || mismatch(&p, "ultrafilter form vs direct", a, b))?;
    Ok(true)
}

fn closed_problem(p: &AttractionProblem) -> Out<AttractionProblem> {
    lib(p.with_constraint(lib(p.constraint().close_under(Closure::FiniteIntersections))?))
}

fn e_closure_ultrafilters(r: &mut Run) -> Case {
    let p = r.problem();
    let q = closed_problem(&p)?;
    let amb = Ambient::power_set(p.domain());
    let a = lib(admissible_ultrafilters(&amb, p.constraint()))?;
    let b = lib(admissible_ultrafilters(&amb, q.constraint()))?;
    ensure(a == b, || {
        format!("{} admissible before closing {}, {} after", a.len(), p.constraint().show(), b.len())
    })?;
    Ok(true)
}

fn e_closure_attraction(r: &mut Run) -> Case {
    let p = r.problem();
    let q = closed_problem(&p)?;
    let (a, b) = (lib(attraction_set_via_ultrafilters(&p))?, lib(attraction_set_via_ultrafilters(&q))?);
    let (c, d) = (lib(attraction_set_direct(&p))?, lib(attraction_set_direct(&q))?);
    ensure(a == b && c == d, || mismatch(&p, "closing the constraint", a, b))?;
    Ok(true)
}

fn e_base_formula(r: &mut Run) -> Case {
    let p = closed_problem(&r.problem())?;
    let want = p
        .constraint()
        .iter()
        .map(|b| naive_closure(p.tau(), p.map().image(b)))
        .fold(p.tau().universe().full(), Subset::intersection);
    let got = lib(attraction_set_via_ultrafilters(&p))?;
    ensure(got == want, || mismatch(&p, "base formula", got, want))?;
    Ok(true)
}

fn e_direct_formula(r: &mut Run) -> Case {
    let p = r.problem();
    let (a, b) = (lib(attraction_set_direct(&p))?, oracle::attraction_set(&p));
    ensure(a == b, || mismatch(&p, "direct vs definition", a, b))?;
    Ok(true)
}

fn empty_meet(p: &AttractionProblem) -> Out<bool> {
    Ok(lib(p.constraint().close_under(Closure::FiniteIntersections))?.contains(Subset::EMPTY))
}

/// A problem whose constraint has an empty finite intersection, made so by
/// adding the complement of a member when needed.
fn empty_problem(r: &mut Run) -> Out<AttractionProblem> {
    let p = r.problem();
    if empty_meet(&p)? {
        return Ok(p);
    }
    let c = p.constraint();
    let m = *c.members().choose(r.c.rng()).unwrap();
    let q = lib(p.with_constraint(lib(c.with_members([p.domain().complement(m)]))?))?;
    debug_assert!(empty_meet(&q)?);
    Ok(q)
}

fn e_empty_ultrafilters(r: &mut Run) -> Case {
    let p = empty_problem(r)?;
    let a = lib(admissible_ultrafilters(&Ambient::power_set(p.domain()), p.constraint()))?;
    ensure(a.is_empty(), || format!("{} admits {} ultrafilters", p.constraint().show(), a.len()))?;
    Ok(true)
}

fn e_empty_attraction(r: &mut Run) -> Case {
    let p = empty_problem(r)?;
    let (a, b) = (lib(attraction_set_direct(&p))?, lib(attraction_set_via_ultrafilters(&p))?);
    ensure(a.is_empty() && b.is_empty(), || mismatch(&p, "expected empty", a, b))?;
    Ok(true)
}

fn e_nonempty_base(r: &mut Run) -> Case {
    let p = closed_problem(&r.problem())?;
    if p.constraint().contains(Subset::EMPTY) || !p.tau().opens().classify().compact_topology {
        return Ok(false);
    }
    let a = lib(attraction_set_direct(&p))?;
    ensure(!a.is_empty(), || format!("empty for base {}", p.constraint().show()))?;
    Ok(true)
}

fn e_nonempty(r: &mut Run) -> Case {
    let p = r.problem();
    if empty_meet(&p)? || !p.tau().opens().classify().compact_topology {
        return Ok(false);
    }
    let (a, b) = (lib(attraction_set_direct(&p))?, lib(attraction_set_via_ultrafilters(&p))?);
    ensure(!a.is_empty() && !b.is_empty(), || {
        format!("empty for {}", p.constraint().show())
    })?;
    Ok(true)
}

struct MapCase {
    f: PointMap,
    from: Topology,
    to: Topology,
}

fn map_case(r: &mut Run) -> MapCase {
    let n1 = r.size(4);
    let from = r.c.topology(n1);
    if r.coin(0.35) {
        let mut perm: Vec<usize> = (0..n1).collect();
        perm.shuffle(r.c.rng());
        let f = PointMap::new(Corpus::universe(n1), Corpus::universe(n1), perm).unwrap();
        let to = if r.coin(0.6) {
            Topology::new(from.opens().image_family(&f).unwrap()).unwrap()
        } else {
            r.c.topology(n1)
        };
        MapCase { f, from, to }
    } else {
        let n2 = r.size(4);
        let to = r.c.topology(n2);
        MapCase {
            f: r.c.map(n1, n2),
            from,
            to,
        }
    }
}

fn e_continuous(r: &mut Run) -> Case {
    let m = map_case(r);
    let rep = lib(map_report(&m.f, &m.from, &m.to))?;
    let naive = m.to.opens().iter().all(|g| m.from.opens().contains(m.f.preimage(g)));
    let dual = m
        .to
        .closed_sets()
        .iter()
        .all(|c| m.from.closed_sets().contains(m.f.preimage(c)));
    ensure(rep.continuous == naive && naive == dual, || {
        format!("{:?}: flag {}, opens {naive}, closed sets {dual}", m.f.images(), rep.continuous)
    })?;
    Ok(true)
}

fn e_bijection(r: &mut Run) -> Case {
    let m = map_case(r);
    let rep = lib(map_report(&m.f, &m.from, &m.to))?;
    let im = m.f.images();
    let onto = (0..m.to.universe().size()).all(|y| im.contains(&y));
    let inj = (0..im.len()).all(|a| (0..im.len()).all(|b| im[a] != im[b] || a == b));
    ensure(rep.bijection == (onto && inj), || format!("{im:?}"))?;
    Ok(true)
}

fn e_open_map(r: &mut Run) -> Case {
    let m = map_case(r);
    let rep = lib(map_report(&m.f, &m.from, &m.to))?;
    let naive = m.from.opens().iter().all(|g| m.to.opens().contains(m.f.image(g)));
    ensure(rep.open_map == naive, || format!("{:?}", m.f.images()))?;
    Ok(true)
}

fn e_closed_map(r: &mut Run) -> Case {
    let m = map_case(r);
    let rep = lib(map_report(&m.f, &m.from, &m.to))?;
    let closed = m.to.closed_sets();
    let naive = m.from.closed_sets().iter().all(|c| closed.contains(m.f.image(c)));
    ensure(rep.closed_map == naive, || format!("{:?}", m.f.images()))?;
    Ok(true)
}

fn e_homeomorphism(r: &mut Run) -> Case {
    let m = map_case(r);
    let rep = lib(map_report(&m.f, &m.from, &m.to))?;
    let naive = rep.bijection
        && m.to.opens().iter().all(|g| m.from.opens().contains(m.f.preimage(g)))
        && m.from.opens().iter().all(|g| m.to.opens().contains(m.f.image(g)));
    ensure(rep.homeomorphism_identities_hold() && rep.homeomorphism == naive, || {
        format!("{:?}: {rep:?}", m.f.images())
    })?;
    Ok(true)
}

// ---------------------------------------------------------------------------
// filters of a family and the ultrafilter space

fn oracle_ultra_mins(l: &SetFamily) -> Vec<Subset> {
    let full = l.universe().full();
    let mut v: Vec<Subset> = oracle::maximal(&oracle::filters_pruned(l.members()))
        .iter()
        .map(|f| f.iter().fold(full, |a, &s| a.intersection(s)))
        .collect();
    v.sort();
    v
}

fn unit(l: &SetFamily) -> SetFamily {
    SetFamily::new(l.universe().clone(), [l.universe().full()]).unwrap()
}

fn e_family_ultrafilters(r: &mut Run) -> Case {
    let l = r.pi_system();
    let fast: Vec<Subset> = enumerate_ultrafilters(&lib(Ambient::family(l.clone()))?)
        .iter()
        .map(|u| u.min())
        .collect();
    let naive = oracle_ultra_mins(&l);
    ensure(fast == naive, || format!("{}: {fast:?} vs {naive:?}", l.show()))?;
    Ok(true)
}

fn e_extension(r: &mut Run) -> Case {
    let l = r.pi_system();
    let amb = lib(Ambient::family(l.clone()))?;
    for f in lib(admissible_filters(&amb, &unit(&l)))? {
        let u = extend_to_ultrafilter(&f);
        ensure(u.filter().is_ultrafilter() && f.is_subfilter_of(u.filter()), || {
            format!("filter above {} in {}", l.universe().show(f.min()), l.show())
        })?;
    }
    let all = oracle::filters_pruned(l.members());
    let max = oracle::maximal(&all);
    ensure(
        all.iter().all(|f| max.iter().any(|m| f.iter().all(|s| m.contains(s)))),
        || format!("a filter of {} lies below no maximal one", l.show()),
    )?;
    Ok(true)
}

fn e_phi(r: &mut Run) -> Case {
    let l = r.pi_system();
    let space = lib(build_space(&l))?;
    let full = l.universe().full();
    let naive: Vec<Vec<Subset>> = oracle::maximal(&oracle::filters_pruned(l.members()));
    for a in l.iter() {
        let want = Subset::from_points(naive.iter().filter(|f| f.contains(&a)).map(|f| {
            let min = f.iter().fold(full, |acc, &s| acc.intersection(s));
            space.points().iter().position(|u| u.min() == min).unwrap()
        }));
        ensure(space.phi(a) == Some(want), || format!("phi({}) differs", l.universe().show(a)))?;
    }
    Ok(true)
}

fn e_uf_pi(r: &mut Run) -> Case {
    let l = r.pi_system();
    let space = lib(build_space(&l))?;
    ensure(naive_pi(space.uf()) && space.uf().classify().pi_system, || {
        format!("UF of {} is {}", l.show(), space.uf().show())
    })?;
    Ok(true)
}

/// A base on the power set together with a set meeting each of its members.
fn base_and_trace_set(r: &mut Run) -> (Universe, FilterBase, Subset) {
    let n = r.c.rng().gen_range(1..=r.e_n);
    let u = Corpus::universe(n);
    let b = r.power_base(&u);
    let least = b.least();
    let pts: Vec<usize> = least.points().collect();
    let p = *pts.choose(r.c.rng()).unwrap();
    let a = r.c.superset(n, Subset::singleton(p), 0.4);
    (u, b, a)
}

fn e_restricted_base(r: &mut Run) -> Case {
    let (u, b, a) = base_and_trace_set(r);
    let restricted = SetFamily::new(u.clone(), b.members().iter().map(|s| s.intersection(a))).unwrap();
    let fb = lib(FilterBase::new(Ambient::power_set(&u), restricted))?;
    ensure(fb.is_proper(), || format!("{} restricted to {}", b.members().show(), u.show(a)))?;
    Ok(true)
}

fn e_restricted_filter(r: &mut Run) -> Case {
    let (u, b, a) = base_and_trace_set(r);
    let restricted: Vec<Subset> = b.members().iter().map(|s| s.intersection(a)).collect();
    let big = upward(&u, b.members().members());
    let small = upward(&u, &restricted);
    ensure(big.iter().all(|s| small.contains(s)) && small.contains(&a), || {
        format!("{} restricted to {}", b.members().show(), u.show(a))
    })?;
    Ok(true)
}

fn e_family_bases(r: &mut Run) -> Case {
    let l = r.pi_system();
    let m = l.members();
    let k = r.c.rng().gen_range(1..=3.min(m.len()));
    let picks: Vec<Subset> = m.choose_multiple(r.c.rng(), k).copied().collect();
    let s = SetFamily::new(l.universe().clone(), picks).unwrap();
    let naive = !s.contains(Subset::EMPTY)
        && s.iter().all(|a| {
            s.iter()
                .all(|b| s.iter().any(|c| c.is_subset_of(a.intersection(b))))
        });
    let got = FilterBase::new(lib(Ambient::family(l.clone()))?, s.clone())
        .map(|fb| fb.is_proper())
        .unwrap_or(false);
    ensure(got == naive, || format!("{} in {}: got {got}", s.show(), l.show()))?;
    Ok(true)
}

fn e_family_restriction(r: &mut Run) -> Case {
    let l = r.pi_system();
    let amb = lib(Ambient::family(l.clone()))?;
    let filters = lib(admissible_filters(&amb, &unit(&l)))?;
    let f = filters.choose(r.c.rng()).unwrap().clone();
    let cands: Vec<Subset> = l.iter().filter(|a| a.meets(f.min())).collect();
    let a = *cands.choose(r.c.rng()).unwrap();
    let fm = lib(f.members())?;
    let restricted = SetFamily::new(l.universe().clone(), fm.iter().map(|s| s.intersection(a))).unwrap();
    let g = lib(lib(FilterBase::new(amb.clone(), restricted.clone()))?.generated_filter())?;
    let naive: Vec<Subset> = l
        .iter()
        .filter(|s| restricted.iter().any(|b| b.is_subset_of(*s)))
        .collect();
    ensure(
        fm.iter().all(|&s| g.contains(s)) && g.contains(a) && lib(g.members())? == naive,
        || format!("filter above {} restricted to {}", l.universe().show(f.min()), l.universe().show(a)),
    )?;
    Ok(true)
}

fn e_union_split(r: &mut Run) -> Case {
    let l = r.lattice();
    let amb = lib(Ambient::family(l.clone()))?;
    for u in enumerate_ultrafilters(&amb) {
        for a in l.iter() {
            for b in l.iter() {
                if u.contains(a.union(b)) {
                    ensure(u.contains(a) || u.contains(b), || {
                        format!("{} and {} in {}", l.universe().show(a), l.universe().show(b), l.show())
                    })?;
                }
            }
        }
    }
    Ok(true)
}

fn e_cover_split(r: &mut Run) -> Case {
    let l = r.lattice();
    let full = l.universe().full();
    let amb = lib(Ambient::family(l.clone()))?;
    for u in enumerate_ultrafilters(&amb) {
        for a in l.iter() {
            for b in l.iter().filter(|b| a.union(*b) == full) {
                ensure(u.contains(a) || u.contains(b), || {
                    format!("{} and {} in {}", l.universe().show(a), l.universe().show(b), l.show())
                })?;
            }
        }
    }
    Ok(true)
}

fn e_uf_lattice(r: &mut Run) -> Case {
    let l = r.lattice();
    let space = lib(build_space(&l))?;
    ensure(space.uf().classify().lattice_with_unit, || format!("UF of {}", l.show()))?;
    for a in l.iter() {
        for b in l.iter() {
            let (pa, pb) = (space.phi(a).unwrap(), space.phi(b).unwrap());
            ensure(space.phi(a.union(b)) == Some(pa.union(pb)), || {
                format!("phi of {} union {}", l.universe().show(a), l.universe().show(b))
            })?;
        }
    }
    Ok(true)
}

fn e_star_opens(r: &mut Run) -> Case {
    let l = r.pi_system();
    let space = lib(build_space(&l))?;
    let pts = space.universe();
    for g in pts.power_set() {
        let naive = g.points().all(|i| {
            l.iter()
                .any(|a| space.points()[i].contains(a) && space.phi(a).unwrap().is_subset_of(g))
        });
        ensure(space.star().is_open(g) == naive, || format!("{} in star of {}", pts.show(g), l.show()))?;
    }
    Ok(true)
}

fn e_star_hausdorff(r: &mut Run) -> Case {
    let l = r.pi_system();
    let space = lib(build_space(&l))?;
    let sep = space.star().separation();
    ensure(sep.hausdorff, || format!("star of {} unseparated at {:?}", l.show(), sep.unseparated))?;
    Ok(true)
}

fn e_power_identification(r: &mut Run) -> Case {
    let n = r.size(5);
    let u = Corpus::universe(n);
    let space = lib(build_space(&lib(SetFamily::power_set(&u))?))?;
    let a: Vec<Subset> = space.points().iter().map(|p| p.min()).collect();
    let b: Vec<Subset> = enumerate_ultrafilters(&Ambient::power_set(&u))
        .iter()
        .map(|p| p.min())
        .collect();
    let singles: Vec<Subset> = (0..n).map(Subset::singleton).collect();
    ensure(a == b && b == singles, || format!("{a:?} vs {b:?}"))?;
    Ok(true)
}

fn e_trace_representation(r: &mut Run) -> Case {
    let l = r.pi_system();
    let amb = lib(Ambient::family(l.clone()))?;
    for u in enumerate_ultrafilters(&amb) {
        let members: Vec<Subset> = l.iter().filter(|&s| u.contains(s)).collect();
        let found = (0..l.universe().size()).any(|x| {
            let t: Vec<Subset> = l.iter().filter(|s| s.contains(x)).collect();
            t == members
        });
        ensure(found, || {
            format!("ultrafilter above {} of {} is no trace", l.universe().show(u.min()), l.show())
        })?;
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// the Wallman topology

fn lattice_space(r: &mut Run) -> Out<(SetFamily, crate::ultraspace::UltraSpace, Topology)> {
    let l = r.lattice();
    let space = lib(build_space(&l))?;
    let w = lib(space.topology(Which::Wallman))?.clone();
    Ok((l, space, w))
}

fn e_uf_meets(r: &mut Run) -> Case {
    let (l, space, _) = lattice_space(r)?;
    let c = lib(space.uf().close_under(Closure::Intersections))?;
    ensure(naive_closed_system(&c), || format!("intersections of UF of {}", l.show()))?;
    Ok(true)
}

fn e_wallman_compact(r: &mut Run) -> Case {
    let (l, space, w) = lattice_space(r)?;
    lib(literal_compactness(w.opens().members(), space.universe())
        .map_err(|w| crate::Error::Precondition(format!("{w:?}"))))
    .map_err(|e| format!("{}: {e}", l.show()))?;
    Ok(true)
}

fn e_singleton_closed(r: &mut Run) -> Case {
    let (l, space, _) = lattice_space(r)?;
    let checks = space.singleton_closedness();
    named(&checks, &checks.iter().map(|c| c.check.as_str()).collect::<Vec<_>>())
        .map_err(|w| format!("{}: {w}", l.show()))
}

fn e_wallman_definition(r: &mut Run) -> Case {
    let (l, space, w) = lattice_space(r)?;
    let want = lib(space.uf().close_under(Closure::Intersections))?.complement_dual();
    ensure(*w.opens() == want, || format!("Wallman topology of {}", l.show()))?;
    Ok(true)
}

fn e_wallman_t1(r: &mut Run) -> Case {
    let (l, _, w) = lattice_space(r)?;
    let rep = w.opens().classify();
    ensure(rep.t1_topology && rep.compact_topology && naive_t1(w.opens()), || {
        format!("Wallman topology of {}", l.show())
    })?;
    Ok(true)
}

fn e_wallman_local_base(r: &mut Run) -> Case {
    let (l, space, w) = lattice_space(r)?;
    for i in 0..space.points().len() {
        let z = lib(space.local_base_at(i))?;
        let opens_at: Vec<Subset> = w.opens().iter().filter(|g| g.contains(i)).collect();
        let naive = z.iter().all(|s| opens_at.contains(&s))
            && opens_at.iter().all(|&g| z.iter().any(|b| b.is_subset_of(g)));
        ensure(naive && w.is_local_base(&z, i), || {
            format!("at {} for {}", space.universe().label(i), l.show())
        })?;
    }
    Ok(true)
}

fn e_wallman_pointwise(r: &mut Run) -> Case {
    let (l, space, w) = lattice_space(r)?;
    for g in space.universe().power_set() {
        ensure(space.predicate_open(g) == w.is_open(g), || {
            format!("{} for {}", space.universe().show(g), l.show())
        })?;
    }
    Ok(true)
}

fn e_phi_complement_open(r: &mut Run) -> Case {
    let (l, space, w) = lattice_space(r)?;
    let all = space.universe().full();
    for a in l.iter() {
        ensure(w.is_open(all.difference(space.phi(a).unwrap())), || {
            format!("complement of phi({})", l.universe().show(a))
        })?;
    }
    Ok(true)
}

fn e_wallman_triple(r: &mut Run) -> Case {
    let (l, space, w) = lattice_space(r)?;
    let a = lib(space.uf().close_under(Closure::Intersections))?.complement_dual();
    let b = lib(space.uf().complement_dual().close_under(Closure::Unions))?;
    ensure(*w.opens() == a && a == b, || format!("three forms differ for {}", l.show()))?;
    Ok(true)
}

fn e_wallman_density(r: &mut Run) -> Case {
    let n = r.size(5);
    let l = lib(SetFamily::power_set(&Corpus::universe(n)))?;
    let space = lib(build_space(&l))?;
    let d = lib(space.density(Which::Wallman))?;
    ensure(d.hypothesis_holds && d.dense, || format!("{d:?}"))?;
    Ok(true)
}

fn t1_topology(r: &mut Run) -> Topology {
    let t = r.topology();
    if t.opens().classify().t1_topology {
        t
    } else {
        Topology::discrete(t.universe()).unwrap()
    }
}

fn embedding_checks(r: &mut Run, names: &[&str]) -> Case {
    let t = t1_topology(r);
    let e = lib(wallman_embedding(&t))?;
    named(&e.checks, names)
}

fn e_embedding_values(r: &mut Run) -> Case {
    let t = t1_topology(r);
    let e = lib(wallman_embedding(&t))?;
    let closed = t.closed_sets();
    for x in 0..t.universe().size() {
        let u = &e.space.points()[e.map.apply(x)];
        ensure(closed.iter().all(|c| u.contains(c) == c.contains(x)), || {
            format!("trace at {x} is not the sets containing it")
        })?;
    }
    Ok(true)
}

fn e_embedding_preimage_within(r: &mut Run) -> Case {
    let t = t1_topology(r);
    let e = lib(wallman_embedding(&t))?;
    for c in t.closed_sets().iter() {
        let pre = e.map.preimage(e.space.phi(c).unwrap());
        ensure(pre.is_subset_of(c), || format!("preimage of phi({}) leaves it", t.universe().show(c)))?;
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// algebras

fn e_dichotomy(r: &mut Run) -> Case {
    let a = r.algebra();
    let u = a.universe();
    let full = u.full();
    let mut naive: Vec<Subset> = oracle::filters_pruned(a.members())
        .into_iter()
        .filter(|f| a.iter().all(|s| f.contains(&s) || f.contains(&u.complement(s))))
        .map(|f| f.iter().fold(full, |acc, &s| acc.intersection(s)))
        .collect();
    naive.sort();
    let fast: Vec<Subset> = enumerate_ultrafilters(&lib(Ambient::family(a.clone()))?)
        .iter()
        .map(|x| x.min())
        .collect();
    ensure(naive == fast, || format!("{}: {naive:?} vs {fast:?}", a.show()))?;
    Ok(true)
}

fn stone_checks(r: &mut Run, names: &[&str]) -> Case {
    let a = if r.coin(0.5) {
        let n = r.size(5);
        lib(SetFamily::power_set(&Corpus::universe(n)))?
    } else {
        r.algebra()
    };
    let rep = lib(stone_report(&a))?;
    named(&rep.checks, names).map_err(|w| format!("{}: {w}", a.show()))
}

fn e_clopen(r: &mut Run) -> Case {
    let a = r.algebra();
    let space = lib(build_space(&a))?;
    let t = space.star();
    let clopen: Vec<Subset> = space
        .universe()
        .power_set()
        .filter(|&g| t.opens().contains(g) && t.opens().contains(space.universe().complement(g)))
        .collect();
    ensure(space.uf().members() == clopen.as_slice(), || a.show())?;
    stone_checks(r, &["uf-is-clopen-family"])
}

fn e_algebra_traces(r: &mut Run) -> Case {
    let a = r.algebra();
    let amb = lib(Ambient::family(a.clone()))?;
    for x in 0..a.universe().size() {
        let t = lib(trivial_trace(x, &amb))?;
        ensure(t.maximal, || format!("trace at {x} in {}", a.show()))?;
    }
    Ok(true)
}

fn e_algebra_trace_map(r: &mut Run) -> Case {
    let a = r.algebra();
    let space = lib(build_space(&a))?;
    let f = lib(space.trace_map())?;
    for x in 0..a.universe().size() {
        let u = &space.points()[f.apply(x)];
        ensure(a.iter().all(|s| u.contains(s) == s.contains(x)), || {
            format!("trace at {x} in {}", a.show())
        })?;
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// partial attraction sets

fn e_partial_definition(r: &mut Run) -> Case {
    let p = r.algebra_problem();
    let alg = p.algebra().unwrap();
    let tau = p.tau();
    let cons = p.constraint();
    let mut want = Subset::EMPTY;
    for f in oracle::filters_pruned(alg.members()) {
        if !cons.iter().all(|c| f.contains(&c)) {
            continue;
        }
        for z in 0..tau.universe().size() {
            let conv = tau
                .opens()
                .iter()
                .filter(|g| g.contains(z))
                .all(|g| f.iter().any(|&s| p.map().image(s).is_subset_of(g)));
            if conv {
                want = want.with(z);
            }
        }
    }
    let got = lib(partial_attraction(&p))?.filter_form;
    ensure(got == want, || mismatch(&p, "partial filter form vs definition", got, want))?;
    Ok(true)
}

fn e_partial_forms(r: &mut Run) -> Case {
    let p = r.algebra_problem();
    let pa = lib(partial_attraction(&p))?;
    ensure(pa.forms_agree(), || mismatch(&p, "partial forms", pa.ultrafilter_form, pa.filter_form))?;
    Ok(true)
}

fn e_partial_inclusion(r: &mut Run) -> Case {
    let p = r.algebra_problem();
    let pa = lib(partial_attraction(&p))?;
    let d = lib(attraction_set_direct(&p))?;
    ensure(pa.ultrafilter_form.is_subset_of(d), || mismatch(&p, "partial within direct", pa.ultrafilter_form, d))?;
    Ok(true)
}

fn e_condition(r: &mut Run) -> Case {
    let p = r.algebra_problem();
    let c = lib(condition_check(&p))?;
    ensure(c.per_point == c.by_min_nbhd, || format!("{c:?}"))?;
    Ok(true)
}

fn e_partial_equality(r: &mut Run) -> Case {
    let p = r.algebra_problem();
    if !lib(condition_check(&p))?.holds {
        return Ok(false);
    }
    let other = r.c.constraint_from(p.algebra().unwrap());
    for q in [p.clone(), lib(p.with_constraint(other))?] {
        let pa = lib(partial_attraction(&q))?;
        let d = lib(attraction_set_direct(&q))?;
        ensure(pa.ultrafilter_form == d, || mismatch(&q, "partial vs direct", pa.ultrafilter_form, d))?;
    }
    Ok(true)
}

fn e_trace_is_ultra(r: &mut Run) -> Case {
    let a = r.algebra();
    for u in enumerate_ultrafilters(&Ambient::power_set(a.universe())) {
        let (_, out) = lib(trace_ultrafilter(&u, &a))?;
        ensure(out.maximal, || format!("trace at {:?} in {}", u.point(), a.show()))?;
    }
    Ok(true)
}

fn e_trace_onto(r: &mut Run) -> Case {
    let a = r.algebra();
    let amb = lib(Ambient::family(a.clone()))?;
    let u0 = &enumerate_ultrafilters(&Ambient::power_set(a.universe()))[0];
    let (_, out) = lib(trace_ultrafilter(u0, &a))?;
    let traces: HashSet<Subset> = (0..a.universe().size())
        .map(|x| a.iter().filter(|s| s.contains(x)).fold(a.universe().full(), Subset::intersection))
        .collect();
    let atoms: HashSet<Subset> = amb.atoms().into_iter().collect();
    ensure(out.surjective && traces == atoms, || a.show())?;
    Ok(true)
}

fn h_base_case(r: &mut Run) -> (Topology, FilterBase) {
    let t = r.topology();
    let u = t.universe().clone();
    let b = r.power_base(&u);
    (t, b)
}

fn e_open_nbhd_form(r: &mut Run) -> Case {
    let (t, b) = h_base_case(r);
    for z in 0..t.universe().size() {
        let f = lib(convergence_forms(&b, &t, z))?;
        ensure(f.open_neighborhoods == f.minimal_neighborhood, || format!("at {z}: {f:?}"))?;
    }
    Ok(true)
}

fn literal_image_open(p: &AttractionProblem, b: &FilterBase, z: usize) -> bool {
    p.tau()
        .opens()
        .iter()
        .filter(|g| g.contains(z))
        .all(|g| b.members().iter().any(|s| p.map().image(s).is_subset_of(g)))
}

fn e_image_open_form(r: &mut Run) -> Case {
    let p = r.problem();
    let b = r.power_base(p.domain());
    for z in 0..p.tau().universe().size() {
        let direct = converges(&lib(filter_image(p.map(), &b))?, p.tau(), z);
        ensure(direct == literal_image_open(&p, &b, z), || format!("base {} at {z}", b.members().show()))?;
    }
    Ok(true)
}

fn e_preimage_form(r: &mut Run) -> Case {
    let p = r.problem();
    let b = r.power_base(p.domain());
    for z in 0..p.tau().universe().size() {
        let (via_opens, _, direct) = lib(image_convergence_forms(&b, p.map(), p.tau(), z))?;
        ensure(via_opens == direct, || format!("base {} at {z}", b.members().show()))?;
    }
    Ok(true)
}

fn algebra_filter(r: &mut Run, a: &SetFamily) -> Out<Filter> {
    let amb = lib(Ambient::family(a.clone()))?;
    let fs = lib(admissible_filters(&amb, &unit(a)))?;
    Ok(fs.choose(r.c.rng()).unwrap().clone())
}

fn e_filter_trace_identity(r: &mut Run) -> Case {
    let a = r.algebra();
    let f = algebra_filter(r, &a)?;
    let fm = lib(f.members())?;
    let up: Vec<Subset> = upward(a.universe(), &fm).into_iter().filter(|&s| a.contains(s)).collect();
    ensure(up == fm, || format!("filter above {} in {}", a.universe().show(f.min()), a.show()))?;
    Ok(true)
}

fn e_filter_image_form(r: &mut Run) -> Case {
    let p = r.algebra_problem();
    let f = algebra_filter(r, p.algebra().unwrap())?;
    let fm = lib(f.members())?;
    let b = lib(FilterBase::new(
        Ambient::power_set(p.domain()),
        SetFamily::new(p.domain().clone(), fm).unwrap(),
    ))?;
    for z in 0..p.tau().universe().size() {
        let direct = converges(&lib(filter_image(p.map(), &FilterBase::from_filter(&f)))?, p.tau(), z);
        ensure(direct == literal_image_open(&p, &b, z), || {
            format!("filter above {} at {z}", p.domain().show(f.min()))
        })?;
    }
    Ok(true)
}

fn e_any_local_base(r: &mut Run) -> Case {
    let (t, b) = h_base_case(r);
    let u = t.universe().clone();
    let in_filter = |s: Subset| b.members().iter().any(|m| m.is_subset_of(s));
    for z in 0..u.size() {
        let m = t.min_nbhd(z);
        let mut zs = vec![lib(t.neighborhood_filter(z, true))?];
        let extra: Vec<Subset> = (0..2).map(|_| r.c.superset(u.size(), m, 0.5)).collect();
        zs.push(SetFamily::new(u.clone(), extra.into_iter().chain([m])).unwrap());
        for zb in zs {
            debug_assert!(t.is_local_base(&zb, z));
            let conv = converges(&b, &t, z);
            ensure(zb.iter().all(in_filter) == conv, || {
                format!("local base {} at {z}", zb.show())
            })?;
        }
    }
    Ok(true)
}

/// Whether some local base at `z` has every preimage in the filter of `b`.
/// The family of all such neighborhoods is the largest candidate.
fn local_base_exists(p: &AttractionProblem, b: &[Subset], z: usize) -> bool {
    let t = p.tau();
    let u = t.universe();
    let cands: Vec<Subset> = naive_nbhds(t, z)
        .into_iter()
        .filter(|&s| b.iter().any(|m| m.is_subset_of(p.map().preimage(s))))
        .collect();
    !cands.is_empty() && t.is_local_base(&SetFamily::new(u.clone(), cands).unwrap(), z)
}

fn e_preimage_local_base(r: &mut Run) -> Case {
    let p = r.problem();
    let b = r.power_base(p.domain());
    for z in 0..p.tau().universe().size() {
        let (_, via_local, direct) = lib(image_convergence_forms(&b, p.map(), p.tau(), z))?;
        let exists = local_base_exists(&p, b.members().members(), z);
        ensure(via_local == direct && exists == direct, || format!("base {} at {z}", b.members().show()))?;
    }
    Ok(true)
}

fn e_trace_local_base(r: &mut Run) -> Case {
    let p = r.algebra_problem();
    let amb = lib(Ambient::family(p.algebra().unwrap().clone()))?;
    for x in 0..p.domain().size() {
        let t = lib(trivial_trace(x, &amb))?;
        let b = FilterBase::from_filter(&t.filter);
        for z in 0..p.tau().universe().size() {
            let conv = converges(&lib(filter_image(p.map(), &b))?, p.tau(), z);
            let exists = local_base_exists(&p, &[t.filter.min()], z);
            ensure(conv == exists, || format!("trace at {x}, point {z}"))?;
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// limits

fn power_ultra(u: &Universe, x: usize) -> crate::filters::Ultrafilter {
    enumerate_ultrafilters(&Ambient::power_set(u)).swap_remove(x)
}

fn e_limit_set(r: &mut Run) -> Case {
    let p = r.problem();
    for x in 0..p.domain().size() {
        let got = lib(limit_set(&power_ultra(p.domain(), x), &p))?;
        let hx = p.map().apply(x);
        let want = Subset::from_points(
            (0..p.tau().universe().size())
                .filter(|&z| p.tau().opens().iter().filter(|g| g.contains(z)).all(|g| g.contains(hx))),
        );
        ensure(got == want, || format!("limits at {x}"))?;
    }
    Ok(true)
}

fn e_limit_nonempty(r: &mut Run) -> Case {
    let p = r.problem();
    if !p.tau().opens().classify().compact_topology {
        return Ok(false);
    }
    let hull = naive_closure(p.tau(), p.map().image(p.domain().full()));
    for x in 0..p.domain().size() {
        let l = lib(limit_set(&power_ultra(p.domain(), x), &p))?;
        ensure(!l.is_empty() && l.is_subset_of(hull), || format!("limits at {x}"))?;
    }
    Ok(true)
}

/// A problem whose topology is Hausdorff, and so discrete.
fn hausdorff_problem(r: &mut Run) -> AttractionProblem {
    if r.coin(0.5) {
        let p = r.problem();
        if p.tau().separation().hausdorff {
            return p;
        }
    }
    r.pipeline()
}

fn e_limit_unique(r: &mut Run) -> Case {
    let p = hausdorff_problem(r);
    for x in 0..p.domain().size() {
        let l = lib(limit_set(&power_ultra(p.domain(), x), &p))?;
        ensure(l.len() == 1, || format!("limits at {x}: {}", p.tau().universe().show(l)))?;
    }
    Ok(true)
}

fn e_limit_closures(r: &mut Run) -> Case {
    let p = hausdorff_problem(r);
    let e = p.domain();
    for x in 0..e.size() {
        let meet = e
            .complement(Subset::singleton(x))
            .subsets()
            .map(|s| naive_closure(p.tau(), p.map().image(s.with(x))))
            .fold(p.tau().universe().full(), Subset::intersection);
        let l = lib(limit_set(&power_ultra(e, x), &p))?;
        ensure(meet == l && l.len() == 1, || format!("at {x}"))?;
    }
    Ok(true)
}

fn e_hausdorff_filters(r: &mut Run) -> Case {
    let p = hausdorff_problem(r);
    let t = p.tau();
    let b = r.power_base(t.universe());
    let n = (0..t.universe().size()).filter(|&z| converges(&b, t, z)).count();
    ensure(n <= 1, || format!("base {} converges to {n} points", b.members().show()))?;
    Ok(true)
}

fn power_problem(p: &AttractionProblem) -> AttractionProblem {
    AttractionProblem::new(p.tau().clone(), p.map().clone(), p.constraint().clone(), None).unwrap()
}

fn e_limit_map_total(r: &mut Run) -> Case {
    let p = power_problem(&hausdorff_problem(r));
    let lm = lib(ultra_limit_map(&p))?;
    ensure(lm.is_total(), || format!("{:?}", lm.values))?;
    Ok(true)
}

fn e_limit_map_values(r: &mut Run) -> Case {
    let p = power_problem(&hausdorff_problem(r));
    let lm = lib(ultra_limit_map(&p))?;
    for (i, u) in lm.space.points().iter().enumerate() {
        let l = lib(limit_set(u, &p))?;
        ensure(lm.values[i].map(Subset::singleton) == Some(l), || format!("at point {i}"))?;
    }
    Ok(true)
}

fn e_limit_factor(r: &mut Run) -> Case {
    let p = power_problem(&hausdorff_problem(r));
    let lm = lib(ultra_limit_map(&p))?;
    named(&lm.checks, &["limit-of-fixed-ultrafilter"])
}

fn e_ultra_constraint(r: &mut Run) -> Case {
    let p = hausdorff_problem(r);
    let e = p.domain();
    let x = r.point(e);
    let members: Vec<Subset> = e.complement(Subset::singleton(x)).subsets().map(|s| s.with(x)).collect();
    let q = lib(AttractionProblem::new(
        p.tau().clone(),
        p.map().clone(),
        SetFamily::new(e.clone(), members).unwrap(),
        None,
    ))?;
    let a = lib(attraction_set_direct(&q))?;
    ensure(a == Subset::singleton(p.map().apply(x)), || format!("at {x}"))?;
    Ok(true)
}

// ---------------------------------------------------------------------------
// the compactificator

struct Piped {
    p: AttractionProblem,
    lm: crate::attraction::LimitMap,
}

/// A discrete-target problem on which the measurability condition holds.
fn piped(r: &mut Run) -> Out<Option<Piped>> {
    let p = r.pipeline();
    let lm = lib(ultra_limit_map(&p))?;
    Ok(lm.condition.holds.then_some(Piped { p, lm }))
}

fn e_trace_limit(r: &mut Run) -> Case {
    let Some(Piped { p, .. }) = piped(r)? else { return Ok(false) };
    let amb = lib(Ambient::family(p.algebra().unwrap().clone()))?;
    for x in 0..p.domain().size() {
        let t = lib(trivial_trace(x, &amb))?;
        let img = lib(filter_image(p.map(), &FilterBase::from_filter(&t.filter)))?;
        ensure(converges(&img, p.tau(), p.map().apply(x)), || format!("trace at {x}"))?;
    }
    Ok(true)
}

fn e_unique_limit(r: &mut Run) -> Case {
    let Some(Piped { p, lm }) = piped(r)? else { return Ok(false) };
    for u in lm.space.points() {
        let l = lib(limit_set(u, &p))?;
        ensure(l.len() == 1, || format!("above {}", p.domain().show(u.min())))?;
    }
    Ok(true)
}

fn e_limit_agrees(r: &mut Run) -> Case {
    let Some(Piped { p, lm }) = piped(r)? else { return Ok(false) };
    let trace = lib(lm.space.trace_map())?;
    for x in 0..p.domain().size() {
        ensure(lm.values[trace.apply(x)] == Some(p.map().apply(x)), || format!("at {x}"))?;
    }
    Ok(true)
}

fn limit_checks(r: &mut Run, names: &[&str]) -> Case {
    let Some(Piped { lm, .. }) = piped(r)? else { return Ok(false) };
    named(&lm.checks, names)
}

fn e_limit_defined(r: &mut Run) -> Case {
    let Some(Piped { lm, .. }) = piped(r)? else { return Ok(false) };
    ensure(lm.is_total(), || format!("{:?}", lm.values))?;
    Ok(true)
}

fn e_limit_is_limit(r: &mut Run) -> Case {
    let Some(Piped { p, lm }) = piped(r)? else { return Ok(false) };
    for (i, u) in lm.space.points().iter().enumerate() {
        let z = lm.values[i].ok_or("undefined value")?;
        let img = lib(filter_image(p.map(), &FilterBase::from_filter(u.filter())))?;
        ensure(converges(&img, p.tau(), z), || format!("at point {i}"))?;
    }
    Ok(true)
}

fn e_compactificator(r: &mut Run) -> Case {
    let Some(Piped { p, lm }) = piped(r)? else { return Ok(false) };
    let star = lm.space.star();
    let trace = lib(lm.space.trace_map())?;
    let image = trace.image(p.domain().full());
    ensure(star.opens().classify().compact_topology, || "star topology not compact".into())?;
    ensure(star.closure(image) == lm.space.universe().full(), || "traces not dense".into())?;
    named(&lm.checks, &["limit-continuous", "limit-factors-through-trace"]).map(|_| true)
}

fn e_any_constraint(r: &mut Run) -> Case {
    let Some(Piped { p, lm }) = piped(r)? else { return Ok(false) };
    let e = p.domain().size();
    let cons = r.c.constraint(e);
    let q = lib(AttractionProblem::new(p.tau().clone(), p.map().clone(), cons.clone(), None))?;
    let inner = lib(AttractionProblem::new(
        lm.space.star().clone(),
        lib(lm.space.trace_map())?,
        cons,
        None,
    ))?;
    let a = lib(attraction_set_direct(&q))?;
    let b = lm.image(lib(attraction_set_direct(&inner))?);
    ensure(b == Some(a), || mismatch(&q, "image of inner set", b.unwrap_or_default(), a))?;
    Ok(true)
}

fn pipeline_checks(r: &mut Run, names: &[&str], need_condition: bool) -> Case {
    let p = r.pipeline();
    let rep = lib(generalized_solution_pipeline(&p))?;
    if need_condition && !rep.condition_holds {
        return Ok(false);
    }
    named(&rep.checks, names)
}

fn e_three_way(r: &mut Run) -> Case {
    let p = r.pipeline();
    let rep = lib(generalized_solution_pipeline(&p))?;
    if !rep.condition_holds {
        return Ok(false);
    }
    let lm = lib(ultra_limit_map(&p))?;
    let via_admissible = lm.image(rep.admissible);
    ensure(
        via_admissible == Some(rep.direct) && rep.image == Some(rep.direct),
        || mismatch(&p, "three-way", via_admissible.unwrap_or_default(), rep.direct),
    )?;
    Ok(true)
}

// ---------------------------------------------------------------------------

fn suites() -> Vec<Suite> {
    macro_rules! s {
        ($id:expr, $name:expr, $f:expr) => {
            Suite { id: $id, name: $name, run: $f }
        };
    }
    vec![
        s!("Eq 2.2", "pi-system-flag", e_pi),
        s!("Eq 2.3", "lattice-flag", e_lattice),
        s!("Eq 2.4", "lattice-with-unit-flag", e_lattice_unit),
        s!("Eq 2.5", "topology-flag", e_topology),
        s!("Eq 2.6", "closed-system-flag", e_closed_system),
        s!("Eq 2.7", "complement-dual", e_complement),
        s!("Eq 2.8", "complement-duality", e_duality),
        s!("Eq 2.9", "algebra-flag", e_algebra),
        s!("Eq 2.10", "semialgebra-flag", e_semialgebra),
        s!("a_I°", "generated-algebra", e_generated_algebra),
        s!("Eq 2.11", "open-base-flag", e_open_base),
        s!("Eq 2.12", "closed-base-flag", e_closed_base),
        s!("Eq 2.13", "base-complement-duality", e_base_duality),
        s!("Eq 2.14", "closed-base-meets-closed-system", e_base_meets),
        s!("Eq 2.15", "closed-base-topology", e_base_topology),
        s!("Eq 2.16", "closed-base-union-identity", e_base_identity),
        s!("Eq 2.17", "t1-flag", e_t1),
        s!("Eq 2.18", "local-base", e_local_base),
        s!("Eq 3.1", "filters-are-principal", e_filters),
        s!("Eq 3.2", "ultrafilters-are-points", e_ultrafilters),
        s!("Eq 3.3", "generated-filter", e_generated_filter),
        s!("Eq 3.4", "convergence-base-form", e_convergence_base),
        s!("Eq 3.5", "convergence-filter-form", e_convergence_filter),
        s!("Eq 3.8", "trivial-ultrafilter", e_trivial_ultrafilter),
        s!("Eq 4.4", "filter-form-vs-definition", e_filter_form_definition),
        s!("Prop 4.1", "filter-form-vs-direct", e_filter_form),
        s!("Eq 4.12", "ultrafilter-form-vs-definition", e_ultra_form_definition),
        s!("Prop 4.2", "ultrafilter-form-vs-direct", e_ultra_form),
        s!("Prop 4.3", "closure-keeps-admissible-ultrafilters", e_closure_ultrafilters),
        s!("Cor 4.1", "closure-keeps-attraction-set", e_closure_attraction),
        s!("Eq 4.15", "base-closure-formula", e_base_formula),
        s!("Eq 4.16", "direct-formula", e_direct_formula),
        s!("Eq 4.17", "empty-meet-no-ultrafilters", e_empty_ultrafilters),
        s!("Eq 4.18", "empty-meet-empty-set", e_empty_attraction),
        s!("Prop 4.4", "compact-base-nonempty", e_nonempty_base),
        s!("Cor 4.2", "compact-nonempty", e_nonempty),
        s!("Eq 4.20", "continuity", e_continuous),
        s!("Eq 4.21", "bijection", e_bijection),
        s!("Eq 4.22", "open-map", e_open_map),
        s!("Eq 4.23", "closed-map", e_closed_map),
        s!("Eq 4.24", "homeomorphism-identities", e_homeomorphism),
        s!("Eq 5.0", "family-ultrafilters", e_family_ultrafilters),
        s!("Eq 5.1", "ultrafilter-extension", e_extension),
        s!("Eq 5.2", "phi", e_phi),
        s!("Eq 5.3", "uf-pi-system", e_uf_pi),
        s!("Eq 5.4", "restricted-base", e_restricted_base),
        s!("Eq 5.5", "restricted-filter", e_restricted_filter),
        s!("Eq 5.6", "family-bases", e_family_bases),
        s!("Eq 5.7", "family-restriction", e_family_restriction),
        s!("Eq 5.9", "union-splitting", e_union_split),
        s!("Eq 5.10", "cover-splitting", e_cover_split),
        s!("Eq 5.11", "uf-lattice", e_uf_lattice),
        s!("Eq 7.3", "star-opens", e_star_opens),
        s!("Eq 7.4", "star-hausdorff", e_star_hausdorff),
        s!("Eq 7.5", "power-set-ultrafilters", e_power_identification),
        s!("Eq 7.7", "ultrafilters-are-traces", e_trace_representation),
        s!("Eq 8.2", "uf-meets-closed-system", e_uf_meets),
        s!("Prop 8.2", "wallman-compact", e_wallman_compact),
        s!("Prop 8.3", "singleton-closedness", e_singleton_closed),
        s!("Eq 8.10", "wallman-definition", e_wallman_definition),
        s!("Eq 8.12", "wallman-compact-t1", e_wallman_t1),
        s!("Prop 8.4", "wallman-local-base", e_wallman_local_base),
        s!("Eq 8.13", "wallman-pointwise-opens", e_wallman_pointwise),
        s!("Eq 8.14", "phi-complement-open", e_phi_complement_open),
        s!("Eq 9.8", "wallman-triple-identity", e_wallman_triple),
        s!("Prop 9.1", "wallman-density", e_wallman_density),
        s!("Eq 9.12", "embedding-values", e_embedding_values),
        s!("Eq 9.13", "embedding-injective", |r| embedding_checks(r, &["embedding-injective"])),
        s!("Eq 9.14", "embedding-image", |r| embedding_checks(r, &["embedding-image-is-traces"])),
        s!("Eq 9.15", "embedding-phi-preimage", |r| embedding_checks(r, &["embedding-pulls-phi-back"])),
        s!("Eq 9.16", "embedding-phi-preimage-within", e_embedding_preimage_within),
        s!("Eq 9.16`", "embedding-uf-preimage", |r| embedding_checks(r, &["embedding-pulls-uf-into-lattice"])),
        s!("Prop 9.2", "embedding-continuous", |r| embedding_checks(r, &["embedding-continuous"])),
        s!("Cor 9.1", "embedding-continuous-onto-image", |r| embedding_checks(r, &["embedding-continuous-onto-image"])),
        s!("Prop 9.3", "embedding-open-onto-image", |r| embedding_checks(r, &["embedding-open-onto-image"])),
        s!("Eq 9.25", "embedding-homeomorphism", |r| embedding_checks(r, &["embedding-homeomorphism-onto-image"])),
        s!("Eq 10.1", "algebra-ultrafilters-dichotomous", e_dichotomy),
        s!("Eq 10.2", "phi-complement", |r| stone_checks(r, &["phi-preserves-complement"])),
        s!("Prop 10.1", "uf-self-dual", |r| stone_checks(r, &["uf-self-dual"])),
        s!("Prop 10.2", "star-equals-wallman", |r| stone_checks(r, &["star-equals-wallman"])),
        s!("Eq 10.100", "uf-algebra", |r| stone_checks(r, &["uf-is-algebra"])),
        s!("Prop 10.3", "uf-clopen", e_clopen),
        s!("Eq 10.7", "star-compact-hausdorff", |r| stone_checks(r, &["star-hausdorff", "star-compact"])),
        s!("Eq 10.17", "algebra-traces-maximal", e_algebra_traces),
        s!("Eq 10.20", "algebra-trace-map", e_algebra_trace_map),
        s!("Eq 10.21", "trace-map-injective", |r| stone_checks(r, &["trace-injective"])),
        s!("Eq 10.22", "trace-preimage-meet", |r| stone_checks(r, &["trace-pulls-admissible-to-meet"])),
        s!("Prop 10.4", "star-density", |r| stone_checks(r, &["traces-dense-in-star"])),
        s!("Eq 11.1", "partial-filter-form", e_partial_definition),
        s!("Prop 11.1", "partial-ultrafilter-form", e_partial_forms),
        s!("Prop 11.2", "partial-inclusion", e_partial_inclusion),
        s!("Cond 11.1", "measurability-condition", e_condition),
        s!("Prop 11.3", "partial-equality", e_partial_equality),
        s!("Eq 11.14", "trace-is-ultrafilter", e_trace_is_ultra),
        s!("Eq 11.17", "traces-exhaust-ultrafilters", e_trace_onto),
        s!("Eq 11.18", "open-neighborhood-form", e_open_nbhd_form),
        s!("Eq 11.19", "image-open-neighborhood-form", e_image_open_form),
        s!("Eq 11.20", "preimage-form", e_preimage_form),
        s!("Eq 11.22", "filter-trace-identity", e_filter_trace_identity),
        s!("Eq 11.23", "filter-image-form", e_filter_image_form),
        s!("Eq 11.24", "any-local-base-form", e_any_local_base),
        s!("Eq 11.26", "preimage-local-base-form", e_preimage_local_base),
        s!("Eq 11.29", "trace-local-base-form", e_trace_local_base),
        s!("Eq 12.1", "limit-set", e_limit_set),
        s!("Prop 12.1", "limit-set-nonempty", e_limit_nonempty),
        s!("Prop 12.2", "limit-set-singleton", e_limit_unique),
        s!("Prop 12.3", "limit-closure-meet", e_limit_closures),
        s!("Eq 12.4", "hausdorff-unique-limits", e_hausdorff_filters),
        s!("Eq 12.11", "limit-map-total", e_limit_map_total),
        s!("Eq 12.12", "limit-map-values", e_limit_map_values),
        s!("Eq 12.17", "limit-map-factorization", e_limit_factor),
        s!("Eq 12.22", "ultrafilter-constraint", e_ultra_constraint),
        s!("Eq 13.5", "algebra-limit-defined", e_limit_defined),
        s!("Eq 13.6", "algebra-limit-is-limit", e_limit_is_limit),
        s!("Prop 13.1", "trace-converges", e_trace_limit),
        s!("Prop 13.2", "algebra-limit-unique", e_unique_limit),
        s!("Prop 13.3", "algebra-limit-agrees", e_limit_agrees),
        s!("Prop 13.4", "algebra-limit-in-closures", |r| limit_checks(r, &["limit-in-image-closures"])),
        s!("Prop 13.5", "algebra-limit-continuous", |r| limit_checks(r, &["limit-continuous"])),
        s!("Prop 13.6", "algebra-limit-factorization", |r| limit_checks(r, &["limit-factors-through-trace"])),
        s!("Eq 13.21", "compactificator", e_compactificator),
        s!("Eq 13.22", "compactificator-any-constraint", e_any_constraint),
        s!("Eq 13.23", "compactificator-measurable-constraint", |r| pipeline_checks(r, &["image-equals-direct"], true)),
        s!("Prop 14.1", "inner-attraction-is-admissible", |r| pipeline_checks(r, &["inner-attraction-is-admissible"], false)),
        s!("Thm 14.1", "three-way-agreement", e_three_way),
    ]
}

/// Ids covered by the suite, in report order.
pub fn suite_ids() -> Vec<String> {
    let mut ids: Vec<String> = suites().iter().map(|s| s.id.to_string()).collect();
    ids.sort_by_key(|id| id_key(id));
    ids
}

fn run_suite(s: &Suite, index: usize, cfg: &VerifyConfig) -> Entry {
    let cap = cfg.max_universe.max(1);
    let mut run = Run {
        c: Corpus::new(cfg.seed ^ (index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
        fam_n: cap.min(5),
        e_n: cap.min(6),
        h_n: cap.min(5),
    };
    let mut ran = 0;
    let mut failure = None;
    for i in 0..cfg.instances {
        match (s.run)(&mut run) {
            Ok(true) => ran += 1,
            Ok(false) => {}
            Err(w) => {
                ran += 1;
                failure = Some(format!("instance {i}: {w}"));
                break;
            }
        }
    }
    if ran == 0 && failure.is_none() {
        failure = Some("no instance met the hypothesis".into());
    }
    Entry {
        id: s.id.to_string(),
        name: s.name.to_string(),
        instances_run: ran,
        passed: failure.is_none(),
        first_failure_witness: failure,
    }
}

pub fn run_verify(cfg: &VerifyConfig) -> VerifyReport {
    let table = suites();
    let mut entries: Vec<Entry> = table
        .par_iter()
        .enumerate()
        .map(|(i, s)| run_suite(s, i, cfg))
        .collect();
    entries.sort_by_key(|e| id_key(&e.id));
    let passed = entries.iter().filter(|e| e.passed).count();
    let summary = Summary {
        entries: entries.len(),
        passed,
        failed: entries.len() - passed,
        instances: entries.iter().map(|e| e.instances_run).sum(),
        all_passed: passed == entries.len(),
    };
    VerifyReport {
        seed: cfg.seed,
        max_universe: cfg.max_universe,
        entries,
        summary,
        exploratory: explore(cfg),
    }
}

// ---------------------------------------------------------------------------
// exploratory searches, reported but not asserted

fn explore(cfg: &VerifyConfig) -> Vec<Finding> {
    let cap = cfg.max_universe.max(1);
    let mut run = Run {
        c: Corpus::new(cfg.seed.wrapping_add(0x5EED)),
        fam_n: cap.min(5),
        e_n: cap.min(6),
        h_n: cap.min(5),
    };
    let n = cfg.instances;

    let mut star_wall = (0, 0, None);
    for _ in 0..n {
        let l = run.lattice();
        if l.classify().algebra {
            continue;
        }
        let space = build_space(&l).unwrap();
        star_wall.0 += 1;
        if space.wallman() != Some(space.star()) {
            star_wall.1 += 1;
            star_wall.2.get_or_insert(l.show());
        }
    }

    let mut dich = (0, 0, None);
    for _ in 0..n {
        let l = run.pi_system();
        if l.classify().algebra {
            continue;
        }
        dich.0 += 1;
        let u = l.universe();
        let full = u.full();
        let mut d: Vec<Subset> = oracle::filters_pruned(l.members())
            .into_iter()
            .filter(|f| l.iter().all(|s| f.contains(&s) || f.contains(&u.complement(s))))
            .map(|f| f.iter().fold(full, |a, &s| a.intersection(s)))
            .collect();
        d.sort();
        if d == oracle_ultra_mins(&l) {
            dich.1 += 1;
            dich.2.get_or_insert(l.show());
        }
    }

    let mut strict = (0, 0, None);
    for _ in 0..n {
        let p = run.pipeline();
        let Ok(c) = condition_check(&p) else { continue };
        if c.holds {
            continue;
        }
        strict.0 += 1;
        let (Ok(pa), Ok(d)) = (partial_attraction(&p), attraction_set_direct(&p)) else { continue };
        if pa.ultrafilter_form != d {
            strict.1 += 1;
            strict.2.get_or_insert_with(|| mismatch(&p, "partial vs direct", pa.ultrafilter_form, d));
        }
    }

    vec![
        Finding {
            name: "star-differs-from-wallman".into(),
            instances: star_wall.0,
            observed: star_wall.1,
            note: "non-algebra lattices whose two ultrafilter topologies differ".into(),
            witness: star_wall.2,
        },
        Finding {
            name: "dichotomy-without-algebra".into(),
            instances: dich.0,
            observed: dich.1,
            note: "non-algebra pi-systems whose ultrafilters are exactly the dichotomous filters".into(),
            witness: dich.2,
        },
        Finding {
            name: "strict-partial-inclusion".into(),
            instances: strict.0,
            observed: strict.1,
            note: "problems failing the measurability condition with a strictly smaller partial set".into(),
            witness: strict.2,
        },
    ]
}
