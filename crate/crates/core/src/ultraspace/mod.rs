//! The space of ultrafilters of a finite pi-system, with its star and
//! Wallman topologies.

mod stone;
mod wallman;

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::filters::{enumerate_ultrafilters, trivial_trace, Ambient, Ultrafilter};
use crate::report::Checks;
use crate::topo::Topology;
use crate::universe::{PointMap, Property, SetFamily, Subset, Universe};

pub use stone::{stone_report, StoneReport};
pub use wallman::{wallman_embedding, WallmanEmbedding};

#[derive(Clone, Debug)]
pub struct UltraSpace {
    ambient: Ambient,
    points: Vec<Ultrafilter>,
    universe: Universe,
    /// `phi[i]` is the set of points containing the i-th ambient member.
    phi: Vec<Subset>,
    uf: SetFamily,
    star: Topology,
    wallman: Option<Topology>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Which {
    Star,
    Wallman,
}

/// Builds the ultrafilter space of a pi-system. The Wallman topology is only
/// built when the family is a lattice containing the whole universe.
pub fn build_space(ambient: &SetFamily) -> Result<UltraSpace> {
    let amb = Ambient::family(ambient.clone())?;
    let points = enumerate_ultrafilters(&amb);
    let base = ambient.universe();
    let universe = Universe::labelled(
        points
            .iter()
            .map(|u| format!("F{}", base.show(u.min())))
            .collect(),
    )?;
    let phi: Vec<Subset> = ambient
        .iter()
        .map(|l| Subset::from_points((0..points.len()).filter(|&i| points[i].contains(l))))
        .collect();
    let uf = SetFamily::new(universe.clone(), phi.iter().copied())?;
    let star = Topology::from_open_base(&uf)?;
    let wallman = if ambient.classify().lattice_with_unit {
        Some(Topology::from_closed_base(&uf)?)
    } else {
        None
    };
    Ok(UltraSpace {
        ambient: amb,
        points,
        universe,
        phi,
        uf,
        star,
        wallman,
    })
}

impl UltraSpace {
    pub fn ambient(&self) -> &SetFamily {
        self.ambient.as_family().unwrap()
    }

    pub fn points(&self) -> &[Ultrafilter] {
        &self.points
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Points whose ultrafilter contains `l`, for an ambient member `l`.
    pub fn phi(&self, l: Subset) -> Option<Subset> {
        self.ambient().index_of(l).map(|i| self.phi[i])
    }

    /// The range of `phi`.
    pub fn uf(&self) -> &SetFamily {
        &self.uf
    }

    pub fn star(&self) -> &Topology {
        &self.star
    }

    pub fn wallman(&self) -> Option<&Topology> {
        self.wallman.as_ref()
    }

    pub fn topology(&self, which: Which) -> Result<&Topology> {
        match which {
            Which::Star => Ok(&self.star),
            Which::Wallman => self.wallman.as_ref().ok_or_else(|| Error::NotA {
                property: Property::LatticeWithUnit,
                witness: self
                    .ambient()
                    .classify()
                    .witness(Property::LatticeWithUnit)
                    .cloned()
                    .unwrap(),
            }),
        }
    }

    pub fn index_of(&self, u: &Ultrafilter) -> Option<usize> {
        self.points.iter().position(|p| p == u)
    }

    /// Point at which the trace of `x` sits, if that trace is maximal.
    pub fn trace_point(&self, x: usize) -> Result<Option<usize>> {
        let t = trivial_trace(x, &self.ambient)?;
        Ok(t.filter
            .into_ultrafilter()
            .and_then(|u| self.index_of(&u)))
    }

    /// The map sending each point of the base universe to its trace.
    pub fn trace_map(&self) -> Result<PointMap> {
        let n = self.ambient().universe().size();
        let mut images = Vec::with_capacity(n);
        for x in 0..n {
            images.push(self.trace_point(x)?.ok_or_else(|| {
                Error::Precondition(format!("trace at point {x} is not an ultrafilter"))
            })?);
        }
        PointMap::new(self.ambient().universe().clone(), self.universe.clone(), images)
    }

    /// Openness through the pointwise description: every point of `g` has a
    /// member `l` outside it whose non-containing points all lie in `g`.
    pub fn predicate_open(&self, g: Subset) -> bool {
        let all = self.universe.full();
        g.points().all(|u| {
            self.ambient().iter().any(|l| {
                let outside = all.difference(self.phi(l).unwrap());
                outside.contains(u) && outside.is_subset_of(g)
            })
        })
    }

    /// `{u}` is the intersection of `phi(L)` over `L` in `u`, and closed in
    /// the Wallman topology when that exists.
    pub fn singleton_closedness(&self) -> Checks {
        let mut checks = Checks::new();
        for (i, u) in self.points.iter().enumerate() {
            let meet = self
                .ambient()
                .iter()
                .filter(|&l| u.contains(l))
                .fold(self.universe.full(), |acc, l| acc.intersection(self.phi(l).unwrap()));
            let name = self.universe.label(i);
            checks.expect(
                &format!("singleton-is-phi-meet {name}"),
                meet == Subset::singleton(i),
                || format!("meet is {}", self.universe.show(meet)),
            );
            if let Some(w) = &self.wallman {
                checks.expect(
                    &format!("singleton-closed {name}"),
                    w.is_closed(Subset::singleton(i)),
                    || "complement is not open".into(),
                );
            }
        }
        checks
    }

    /// `{points \ phi(L) : L not in u}`, a local base at `u` for the Wallman
    /// topology.
    pub fn local_base_at(&self, u: usize) -> Result<SetFamily> {
        self.universe.check_point(u)?;
        self.topology(Which::Wallman)?;
        let all = self.universe.full();
        let p = &self.points[u];
        SetFamily::new(
            self.universe.clone(),
            self.ambient()
                .iter()
                .filter(|&l| !p.contains(l))
                .map(|l| all.difference(self.phi(l).unwrap())),
        )
    }

    pub fn density(&self, which: Which) -> Result<DensityReport> {
        let top = self.topology(which)?;
        let n = self.ambient().universe().size();
        let mut traces = Subset::EMPTY;
        let mut non_maximal = Vec::new();
        for x in 0..n {
            match self.trace_point(x)? {
                Some(i) => traces = traces.with(i),
                None => non_maximal.push(x),
            }
        }
        let closure = top.closure(traces);
        let report = self.ambient().classify();
        let hypothesis = match which {
            Which::Wallman => report.lattice_with_singletons,
            Which::Star => report.algebra,
        };
        Ok(DensityReport {
            topology: which,
            trace_points: traces,
            closure,
            dense: closure == self.universe.full(),
            hypothesis_holds: hypothesis,
            non_maximal_traces: non_maximal,
        })
    }

    /// `phi` as a bipartite DOT graph, members on the left.
    pub fn phi_dot(&self) -> String {
        let base = self.ambient().universe();
        let mut out = String::from("digraph phi {\n  rankdir=LR;\n");
        for (i, l) in self.ambient().iter().enumerate() {
            let _ = writeln!(out, "  \"L{}\" [shape=box];", base.show(l));
            for p in self.phi[i].points() {
                let _ = writeln!(out, "  \"L{}\" -> \"{}\";", base.show(l), self.universe.label(p));
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    pub topology: Which,
    pub trace_points: Subset,
    pub closure: Subset,
    pub dense: bool,
    /// Whether the ambient satisfies the hypothesis under which density is
    /// guaranteed: every singleton for the Wallman topology, an algebra for
    /// the star topology.
    pub hypothesis_holds: bool,
    /// Base points whose trace is not an ultrafilter.
    pub non_maximal_traces: Vec<usize>,
}
