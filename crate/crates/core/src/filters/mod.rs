//! Filters and ultrafilters on finite pi-systems.
//!
//! On a finite pi-system every filter is principal: it is the family of
//! members above its smallest member. A filter is therefore stored as that
//! minimum together with its ambient family. The power set is kept virtual
//! so that it never has to be materialized.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::universe::{PointMap, Property, SetFamily, Subset, Universe, MAX_FAMILY};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ambient {
    PowerSet(Universe),
    Family(Arc<SetFamily>),
}

impl Ambient {
    /// Wraps a pi-system.
    pub fn family(fam: SetFamily) -> Result<Ambient> {
        let report = fam.classify();
        if !report.pi_system {
            return Err(Error::NotA {
                property: Property::PiSystem,
                witness: report.witness(Property::PiSystem).cloned().unwrap(),
            });
        }
        Ok(Ambient::Family(Arc::new(fam)))
    }

    pub fn power_set(u: &Universe) -> Ambient {
        Ambient::PowerSet(u.clone())
    }

    pub fn universe(&self) -> &Universe {
        match self {
            Ambient::PowerSet(u) => u,
            Ambient::Family(f) => f.universe(),
        }
    }

    pub fn as_family(&self) -> Option<&SetFamily> {
        match self {
            Ambient::PowerSet(_) => None,
            Ambient::Family(f) => Some(f),
        }
    }

    pub fn contains(&self, s: Subset) -> bool {
        match self {
            Ambient::PowerSet(u) => s.is_subset_of(u.full()),
            Ambient::Family(f) => f.contains(s),
        }
    }

    /// Inclusion-minimal nonempty members, ascending.
    pub fn atoms(&self) -> Vec<Subset> {
        match self {
            Ambient::PowerSet(u) => (0..u.size()).map(Subset::singleton).collect(),
            Ambient::Family(f) => {
                let nonempty: Vec<Subset> = f.iter().filter(|s| !s.is_empty()).collect();
                nonempty
                    .iter()
                    .copied()
                    .filter(|&a| !nonempty.iter().any(|&b| b.is_proper_subset_of(a)))
                    .collect()
            }
        }
    }

    /// Members containing `m`, ascending.
    pub fn members_above(&self, m: Subset) -> Result<Vec<Subset>> {
        match self {
            Ambient::PowerSet(u) => {
                let free = u.complement(m);
                if 1usize << free.len() > MAX_FAMILY {
                    return Err(Error::FamilyTooLarge { cap: MAX_FAMILY });
                }
                Ok(free.subsets().map(|s| s.union(m)).collect())
            }
            Ambient::Family(f) => Ok(f.iter().filter(|s| m.is_subset_of(*s)).collect()),
        }
    }

    pub fn is_algebra(&self) -> bool {
        match self {
            Ambient::PowerSet(_) => true,
            Ambient::Family(f) => f.classify().algebra,
        }
    }

    pub fn has_singletons(&self) -> bool {
        match self {
            Ambient::PowerSet(_) => true,
            Ambient::Family(f) => f.classify().lattice_with_singletons,
        }
    }
}

/// A filter on an ambient pi-system, held as its minimum member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filter {
    ambient: Ambient,
    min: Subset,
}

impl Filter {
    pub fn principal(ambient: Ambient, min: Subset) -> Result<Filter> {
        if min.is_empty() || !ambient.contains(min) {
            return Err(Error::InvalidFilterMin);
        }
        Ok(Filter { ambient, min })
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn min(&self) -> Subset {
        self.min
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.ambient.contains(s) && self.min.is_subset_of(s)
    }

    pub fn members(&self) -> Result<Vec<Subset>> {
        self.ambient.members_above(self.min)
    }

    pub fn is_subfilter_of(&self, other: &Filter) -> bool {
        self.ambient == other.ambient && other.min.is_subset_of(self.min)
    }

    /// Maximal among filters of the same ambient.
    pub fn is_ultrafilter(&self) -> bool {
        match &self.ambient {
            Ambient::PowerSet(_) => self.min.len() == 1,
            Ambient::Family(f) => !f
                .iter()
                .any(|s| !s.is_empty() && s.is_proper_subset_of(self.min)),
        }
    }

    pub fn into_ultrafilter(self) -> Option<Ultrafilter> {
        self.is_ultrafilter().then_some(Ultrafilter(self))
    }
}

/// A filter that has been checked to be maximal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ultrafilter(Filter);

impl Ultrafilter {
    pub fn filter(&self) -> &Filter {
        &self.0
    }

    pub fn min(&self) -> Subset {
        self.0.min
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.0.contains(s)
    }

    pub fn ambient(&self) -> &Ambient {
        &self.0.ambient
    }

    /// For an ultrafilter of the power set, the point it is fixed at.
    pub fn point(&self) -> Option<usize> {
        match self.0.ambient {
            Ambient::PowerSet(_) => self.0.min.lowest(),
            Ambient::Family(_) => None,
        }
    }
}

/// A directed family of ambient members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterBase {
    ambient: Ambient,
    members: SetFamily,
}

impl FilterBase {
    pub fn new(ambient: Ambient, members: SetFamily) -> Result<FilterBase> {
        ambient.universe().check_same(members.universe())?;
        if members.is_empty() {
            return Err(Error::EmptyBase);
        }
        if let Some(s) = members.iter().find(|&s| !ambient.contains(s)) {
            return Err(Error::NotInAmbient(members.universe().show(s)));
        }
        let m = members.members();
        for (i, &a) in m.iter().enumerate() {
            for &b in &m[i + 1..] {
                let ab = a.intersection(b);
                if !m.iter().any(|c| c.is_subset_of(ab)) {
                    let u = members.universe();
                    return Err(Error::NotDirected(u.show(a), u.show(b)));
                }
            }
        }
        Ok(FilterBase { ambient, members })
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn members(&self) -> &SetFamily {
        &self.members
    }

    pub fn is_proper(&self) -> bool {
        !self.members.contains(Subset::EMPTY)
    }

    /// The member contained in every other member.
    pub fn least(&self) -> Subset {
        let meet = self.members.meet();
        debug_assert!(self.members.contains(meet));
        meet
    }

    /// Ambient members that contain some base member.
    pub fn generated_filter(&self) -> Result<Filter> {
        if !self.is_proper() {
            return Err(Error::ImproperBase);
        }
        let min = match &self.ambient {
            Ambient::PowerSet(_) => self.least(),
            Ambient::Family(f) => {
                let upper: Vec<Subset> = f
                    .iter()
                    .filter(|l| self.members.iter().any(|b| b.is_subset_of(*l)))
                    .collect();
                let min = upper.iter().fold(f.universe().full(), |a, s| a.intersection(*s));
                debug_assert!(upper.iter().all(|s| min.is_subset_of(*s)) && f.contains(min));
                min
            }
        };
        Filter::principal(self.ambient.clone(), min)
    }

    pub fn from_filter(f: &Filter) -> FilterBase {
        let u = f.ambient.universe().clone();
        FilterBase {
            ambient: f.ambient.clone(),
            members: SetFamily::new(u, [f.min]).unwrap(),
        }
    }
}

/// All ultrafilters of a pi-system, in ascending order of their minima.
pub fn enumerate_ultrafilters(ambient: &Ambient) -> Vec<Ultrafilter> {
    ambient
        .atoms()
        .into_iter()
        .map(|a| {
            Ultrafilter(Filter {
                ambient: ambient.clone(),
                min: a,
            })
        })
        .collect()
}

/// The ultrafilter above `f` whose minimum has the least bitmask.
pub fn extend_to_ultrafilter(f: &Filter) -> Ultrafilter {
    let atom = f
        .ambient
        .atoms()
        .into_iter()
        .find(|a| a.is_subset_of(f.min))
        .expect("every nonempty member contains an atom");
    Ultrafilter(Filter {
        ambient: f.ambient.clone(),
        min: atom,
    })
}

/// Ultrafilters containing every member of `constraint`.
pub fn admissible_ultrafilters(ambient: &Ambient, constraint: &SetFamily) -> Result<Vec<Ultrafilter>> {
    ambient.universe().check_same(constraint.universe())?;
    if let Some(s) = constraint.iter().find(|&s| !ambient.contains(s)) {
        return Err(Error::NotInAmbient(constraint.universe().show(s)));
    }
    let meet = constraint.meet();
    Ok(enumerate_ultrafilters(ambient)
        .into_iter()
        .filter(|u| u.min().is_subset_of(meet))
        .collect())
}

/// Every filter of `ambient` containing `constraint`.
pub fn admissible_filters(ambient: &Ambient, constraint: &SetFamily) -> Result<Vec<Filter>> {
    ambient.universe().check_same(constraint.universe())?;
    let meet = constraint.meet();
    let mins: Vec<Subset> = match ambient {
        Ambient::PowerSet(_) => meet.subsets().filter(|s| !s.is_empty()).collect(),
        Ambient::Family(f) => f
            .iter()
            .filter(|s| !s.is_empty() && s.is_subset_of(meet))
            .collect(),
    };
    Ok(mins
        .into_iter()
        .map(|min| Filter {
            ambient: ambient.clone(),
            min,
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub point: usize,
    pub filter: Filter,
    pub maximal: bool,
    /// Set when the ambient is an algebra or contains every singleton, in
    /// which case every trace is an ultrafilter.
    pub maximal_by_hypothesis: bool,
}

/// `{L : x in L}`.
pub fn trivial_trace(x: usize, ambient: &Ambient) -> Result<Trace> {
    let u = ambient.universe();
    u.check_point(x)?;
    let min = match ambient {
        Ambient::PowerSet(_) => Subset::singleton(x),
        Ambient::Family(f) => f
            .iter()
            .filter(|s| s.contains(x))
            .fold(u.full(), Subset::intersection),
    };
    let filter = Filter {
        ambient: ambient.clone(),
        min,
    };
    Ok(Trace {
        point: x,
        maximal: filter.is_ultrafilter(),
        maximal_by_hypothesis: ambient.is_algebra() || ambient.has_singletons(),
        filter,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceOutcome {
    pub maximal: bool,
    pub target_is_algebra: bool,
    /// Every ultrafilter of the target arises as a trace of a power-set
    /// ultrafilter.
    pub surjective: bool,
}

/// Trace `u ∩ target` of a power-set ultrafilter.
pub fn trace_ultrafilter(u: &Ultrafilter, target: &SetFamily) -> Result<(Filter, TraceOutcome)> {
    let x = u
        .point()
        .ok_or_else(|| Error::Precondition("ultrafilter must live on the power set".into()))?;
    let ambient = Ambient::family(target.clone())?;
    let trace = trivial_trace(x, &ambient)?;
    let atoms = ambient.atoms();
    let n = ambient.universe().size();
    let reached: Vec<Subset> = (0..n)
        .map(|p| trivial_trace(p, &ambient).map(|t| t.filter.min))
        .collect::<Result<_>>()?;
    let surjective = atoms.iter().all(|a| reached.contains(a));
    Ok((
        trace.filter,
        TraceOutcome {
            maximal: trace.maximal,
            target_is_algebra: ambient.is_algebra(),
            surjective,
        },
    ))
}

/// Elementwise image of a base under `f`, a base on the codomain power set.
pub fn filter_image(f: &PointMap, base: &FilterBase) -> Result<FilterBase> {
    base.members.universe().check_same(f.domain())?;
    let image = base.members.image_family(f)?;
    FilterBase::new(Ambient::power_set(f.codomain()), image)
}
