//! Finite topologies driven by a table of minimal open neighborhoods.

mod maps;

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::universe::{literal_compactness, Closure, Property, SetFamily, Subset, Universe};

pub use maps::{map_report, MapReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Topology {
    opens: SetFamily,
    min_nbhd: Vec<Subset>,
}

impl Topology {
    pub fn new(opens: SetFamily) -> Result<Topology> {
        let report = opens.classify();
        if !report.topology {
            return Err(Error::NotA {
                property: Property::Topology,
                witness: report.witness(Property::Topology).cloned().unwrap(),
            });
        }
        let u = opens.universe().clone();
        let min_nbhd = (0..u.size())
            .map(|x| {
                opens
                    .iter()
                    .filter(|g| g.contains(x))
                    .fold(u.full(), Subset::intersection)
            })
            .collect();
        Ok(Topology { opens, min_nbhd })
    }

    pub fn discrete(u: &Universe) -> Result<Topology> {
        Topology::new(SetFamily::power_set(u)?)
    }

    pub fn indiscrete(u: &Universe) -> Topology {
        Topology::new(SetFamily::new(u.clone(), [Subset::EMPTY, u.full()]).unwrap()).unwrap()
    }

    /// Topology whose opens are all unions of base members.
    pub fn from_open_base(base: &SetFamily) -> Result<Topology> {
        let report = base.classify();
        if !report.open_base {
            return Err(Error::NotA {
                property: Property::OpenBase,
                witness: report.witness(Property::OpenBase).cloned().unwrap(),
            });
        }
        Topology::new(base.close_under(Closure::Unions)?)
    }

    /// Topology whose closed sets are all intersections of base members.
    pub fn from_closed_base(base: &SetFamily) -> Result<Topology> {
        let report = base.classify();
        if !report.closed_base {
            return Err(Error::NotA {
                property: Property::ClosedBase,
                witness: report.witness(Property::ClosedBase).cloned().unwrap(),
            });
        }
        let opens = base.close_under(Closure::Intersections)?.complement_dual();
        let dual = base.complement_dual().close_under(Closure::Unions)?;
        assert_eq!(opens, dual, "complement of intersections differs from unions of complements");
        Topology::new(opens)
    }

    pub fn opens(&self) -> &SetFamily {
        &self.opens
    }

    pub fn universe(&self) -> &Universe {
        self.opens.universe()
    }

    pub fn closed_sets(&self) -> SetFamily {
        self.opens.complement_dual()
    }

    pub fn is_open(&self, s: Subset) -> bool {
        self.opens.contains(s)
    }

    pub fn is_closed(&self, s: Subset) -> bool {
        self.opens.contains(self.universe().complement(s))
    }

    /// Smallest open set containing `x`.
    pub fn min_nbhd(&self, x: usize) -> Subset {
        self.min_nbhd[x]
    }

    /// Points all of whose neighborhoods meet `a`.
    pub fn closure(&self, a: Subset) -> Subset {
        Subset::from_points((0..self.universe().size()).filter(|&x| self.min_nbhd[x].meets(a)))
    }

    pub fn interior(&self, a: Subset) -> Subset {
        Subset::from_points((0..self.universe().size()).filter(|&x| self.min_nbhd[x].is_subset_of(a)))
    }

    /// Open neighborhoods of `x`, or with `open_only = false` every superset
    /// of one.
    pub fn neighborhood_filter(&self, x: usize, open_only: bool) -> Result<SetFamily> {
        self.universe().check_point(x)?;
        let u = self.universe().clone();
        if open_only {
            SetFamily::new(u, self.opens.iter().filter(|g| g.contains(x)))
        } else {
            let m = self.min_nbhd[x];
            let free = u.complement(m);
            if free.len() > 16 {
                return Err(Error::FamilyTooLarge {
                    cap: crate::universe::MAX_FAMILY,
                });
            }
            SetFamily::new(u, free.subsets().map(|s| s.union(m)))
        }
    }

    /// Whether `z` is a local base at `x`: its members are neighborhoods of
    /// `x` and every neighborhood contains one of them.
    pub fn is_local_base(&self, z: &SetFamily, x: usize) -> bool {
        let m = self.min_nbhd[x];
        // every neighborhood contains m, so refining m refines them all
        z.universe() == self.universe()
            && z.iter().all(|b| m.is_subset_of(b))
            && z.iter().any(|b| b.is_subset_of(m))
    }

    /// Trace topology on `a`, reindexed so the i-th point of `a` becomes i.
    /// Returns the topology together with the original index of each point.
    pub fn subspace(&self, a: Subset) -> Result<(Topology, Vec<usize>)> {
        let u = self.universe();
        u.check_subset(a)?;
        let keep: Vec<usize> = a.points().collect();
        let sub = Universe::labelled(keep.iter().map(|&x| u.label(x)).collect())?;
        let squeeze = |s: Subset| {
            Subset::from_points(
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &x)| s.contains(x))
                    .map(|(i, _)| i),
            )
        };
        let opens = SetFamily::new(sub, self.opens.iter().map(squeeze))?;
        Ok((Topology::new(opens)?, keep))
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.universe().size()).all(|x| self.min_nbhd[x] == Subset::singleton(x))
    }

    pub fn separation(&self) -> SeparationReport {
        let n = self.universe().size();
        let opens = self.opens.members();
        let mut t1 = true;
        let mut hausdorff = true;
        let mut witness = None;
        for x in 0..n {
            for y in 0..n {
                if x == y {
                    continue;
                }
                if t1 && !opens.iter().any(|g| g.contains(x) && !g.contains(y)) {
                    t1 = false;
                    witness.get_or_insert((x, y));
                }
                if hausdorff
                    && !opens.iter().any(|g| {
                        g.contains(x)
                            && opens
                                .iter()
                                .any(|h| h.contains(y) && !g.meets(*h))
                    })
                {
                    hausdorff = false;
                    witness.get_or_insert((x, y));
                }
            }
        }
        SeparationReport {
            t1,
            hausdorff,
            compact: literal_compactness(opens, self.universe()).is_ok(),
            discrete: self.is_discrete(),
            unseparated: witness,
        }
    }

    /// Specialization preorder as a DOT digraph, an edge `x -> y` whenever
    /// `x` lies in the closure of `y`.
    pub fn specialization_dot(&self) -> String {
        let u = self.universe();
        let mut out = String::from("digraph specialization {\n");
        for x in 0..u.size() {
            let _ = writeln!(out, "  \"{}\";", u.label(x));
        }
        for y in 0..u.size() {
            for x in self.closure(Subset::singleton(y)).points() {
                if x != y {
                    let _ = writeln!(out, "  \"{}\" -> \"{}\";", u.label(x), u.label(y));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationReport {
    pub t1: bool,
    pub hausdorff: bool,
    /// Always true on a finite universe.
    pub compact: bool,
    pub discrete: bool,
    /// First ordered pair of points that some axiom fails to separate.
    pub unseparated: Option<(usize, usize)>,
}

impl SeparationReport {
    /// On a finite space T1, Hausdorff and discrete coincide.
    pub fn finite_laws_hold(&self) -> bool {
        self.t1 == self.hausdorff && self.hausdorff == self.discrete && self.compact
    }
}
