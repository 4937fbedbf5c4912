use super::{build_space, UltraSpace, Which};
use crate::error::{Error, Result};
use crate::report::Checks;
use crate::topo::{map_report, Topology};
use crate::universe::{PointMap, Property, Subset};

/// A T1 space embedded into the ultrafilters of its closed sets.
#[derive(Clone, Debug)]
pub struct WallmanEmbedding {
    pub space: UltraSpace,
    pub map: PointMap,
    pub checks: Checks,
}

impl WallmanEmbedding {
    pub fn passed(&self) -> bool {
        self.checks.all_passed()
    }
}

pub fn wallman_embedding(tau: &Topology) -> Result<WallmanEmbedding> {
    let report = tau.opens().classify();
    if !report.t1_topology {
        return Err(Error::NotA {
            property: Property::T1Topology,
            witness: report.witness(Property::T1Topology).cloned().unwrap(),
        });
    }
    let closed = tau.closed_sets();
    let space = build_space(&closed)?;
    let wallman = space.topology(Which::Wallman)?.clone();
    let map = space.trace_map()?;
    let e = tau.universe();
    let pts = space.universe();
    let mut checks = Checks::new();

    checks.expect("embedding-injective", map.is_injective(), || {
        "two points share a trace".into()
    });

    let image = map.image(e.full());
    let mut traced = Subset::EMPTY;
    for x in 0..e.size() {
        if let Some(i) = space.trace_point(x)? {
            traced = traced.with(i);
        }
    }
    checks.expect("embedding-image-is-traces", image == traced, || {
        format!("image {} vs traces {}", pts.show(image), pts.show(traced))
    });

    let bad = closed
        .iter()
        .find(|&l| map.preimage(space.phi(l).unwrap()) != l);
    checks.expect("embedding-pulls-phi-back", bad.is_none(), || {
        format!("preimage of phi({}) differs", e.show(bad.unwrap()))
    });

    let bad = space
        .uf()
        .iter()
        .find(|&b| !closed.contains(map.preimage(b)));
    checks.expect("embedding-pulls-uf-into-lattice", bad.is_none(), || {
        format!("preimage of {} is not closed", pts.show(bad.unwrap()))
    });

    let whole = map_report(&map, tau, &wallman)?;
    checks.expect("embedding-continuous", whole.continuous, || whole.witnesses.join("; "));

    let (sub, keep) = wallman.subspace(image)?;
    let onto: Vec<usize> = map
        .images()
        .iter()
        .map(|y| keep.iter().position(|k| k == y).unwrap())
        .collect();
    let onto = PointMap::new(e.clone(), sub.universe().clone(), onto)?;
    let r = map_report(&onto, tau, &sub)?;
    checks.expect("embedding-continuous-onto-image", r.continuous, || r.witnesses.join("; "));
    checks.expect("embedding-open-onto-image", r.open_map, || r.witnesses.join("; "));
    checks.expect("embedding-homeomorphism-onto-image", r.homeomorphism, || {
        r.witnesses.join("; ")
    });

    let dense = wallman.closure(image) == pts.full();
    checks.expect("embedding-dense", dense, || {
        format!("closure of image is {}", pts.show(wallman.closure(image)))
    });
    let sep = wallman.separation();
    checks.expect("wallman-t1", sep.t1, || format!("{:?}", sep.unseparated));
    checks.expect("wallman-compact", sep.compact, || "open cover without subcover".into());

    Ok(WallmanEmbedding { space, map, checks })
}
