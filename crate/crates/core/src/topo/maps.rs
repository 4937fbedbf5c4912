use serde::Serialize;

use super::Topology;
use crate::error::Result;
use crate::universe::PointMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapReport {
    pub continuous: bool,
    pub open_map: bool,
    pub closed_map: bool,
    pub bijection: bool,
    pub homeomorphism: bool,
    /// One line per failed flag.
    pub witnesses: Vec<String>,
}

impl MapReport {
    /// A bijection is a homeomorphism exactly when it is continuous and open,
    /// and exactly when it is continuous and closed.
    pub fn homeomorphism_identities_hold(&self) -> bool {
        let via_open = self.continuous && self.open_map && self.bijection;
        let via_closed = self.continuous && self.closed_map && self.bijection;
        self.homeomorphism == via_open && via_open == via_closed
    }
}

pub fn map_report(f: &PointMap, from: &Topology, to: &Topology) -> Result<MapReport> {
    from.universe().check_same(f.domain())?;
    to.universe().check_same(f.codomain())?;
    let (dom, cod) = (from.universe(), to.universe());
    let mut witnesses = Vec::new();

    let bad_pre = to.opens().iter().find(|&g| !from.is_open(f.preimage(g)));
    if let Some(g) = bad_pre {
        witnesses.push(format!("preimage of open {} is not open", cod.show(g)));
    }
    let bad_open = from.opens().iter().find(|&g| !to.is_open(f.image(g)));
    if let Some(g) = bad_open {
        witnesses.push(format!("image of open {} is not open", dom.show(g)));
    }
    let bad_closed = from
        .closed_sets()
        .iter()
        .find(|&c| !to.is_closed(f.image(c)));
    if let Some(c) = bad_closed {
        witnesses.push(format!("image of closed {} is not closed", dom.show(c)));
    }
    let bijection = f.is_injective() && f.is_surjective();
    if !bijection {
        witnesses.push("map is not a bijection".to_string());
    }
    let continuous = bad_pre.is_none();
    let open_map = bad_open.is_none();
    let homeomorphism = continuous && bijection && {
        // the inverse must be continuous: images of opens are open
        let inv: Vec<usize> = (0..cod.size())
            .map(|y| f.preimage(crate::universe::Subset::singleton(y)).lowest().unwrap())
            .collect();
        let inv = PointMap::new(cod.clone(), dom.clone(), inv)?;
        from.opens().iter().all(|g| to.is_open(inv.preimage(g)))
    };
    Ok(MapReport {
        continuous,
        open_map,
        closed_map: bad_closed.is_none(),
        bijection,
        homeomorphism,
        witnesses,
    })
}
