//! Attraction sets of a map under an asymptotic constraint, computed
//! directly and through ultrafilters.

mod limits;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::filters::{admissible_filters, admissible_ultrafilters, filter_image, Ambient, FilterBase, Ultrafilter};
use crate::topo::Topology;
use crate::universe::{Closure, PointMap, Property, SetFamily, Subset, Universe};

pub use limits::{generalized_solution_pipeline, ultra_limit_map, LimitMap, PipelineReport};

/// A map `h: E -> H`, a topology on `H`, a constraint family on `E` and an
/// optional algebra on `E` for the partial problem.
#[derive(Clone, Debug)]
pub struct AttractionProblem {
    tau: Topology,
    h: PointMap,
    constraint: SetFamily,
    algebra: Option<SetFamily>,
}

impl AttractionProblem {
    pub fn new(
        tau: Topology,
        h: PointMap,
        constraint: SetFamily,
        algebra: Option<SetFamily>,
    ) -> Result<AttractionProblem> {
        tau.universe().check_same(h.codomain())?;
        h.domain().check_same(constraint.universe())?;
        if constraint.is_empty() {
            return Err(Error::Precondition("constraint family is empty".into()));
        }
        if let Some(a) = &algebra {
            a.universe().check_same(h.domain())?;
            let r = a.classify();
            if !r.algebra {
                return Err(Error::NotA {
                    property: Property::Algebra,
                    witness: r.witness(Property::Algebra).cloned().unwrap(),
                });
            }
            if let Some(s) = constraint.iter().find(|&s| !a.contains(s)) {
                return Err(Error::NotInAmbient(a.universe().show(s)));
            }
        }
        Ok(AttractionProblem {
            tau,
            h,
            constraint,
            algebra,
        })
    }

    pub fn tau(&self) -> &Topology {
        &self.tau
    }

    pub fn map(&self) -> &PointMap {
        &self.h
    }

    pub fn constraint(&self) -> &SetFamily {
        &self.constraint
    }

    pub fn algebra(&self) -> Option<&SetFamily> {
        self.algebra.as_ref()
    }

    pub fn domain(&self) -> &Universe {
        self.h.domain()
    }

    pub fn with_constraint(&self, constraint: SetFamily) -> Result<AttractionProblem> {
        AttractionProblem::new(self.tau.clone(), self.h.clone(), constraint, self.algebra.clone())
    }

    fn require_algebra(&self) -> Result<&SetFamily> {
        self.algebra
            .as_ref()
            .ok_or_else(|| Error::Precondition("problem has no algebra".into()))
    }
}

/// Whether the filter generated by `base` on the power set of `H` converges
/// to `y`: the smallest neighborhood of `y` contains a base member.
pub fn converges(base: &FilterBase, tau: &Topology, y: usize) -> bool {
    let m = tau.min_nbhd(y);
    base.members().iter().any(|b| b.is_subset_of(m))
}

/// The equivalent descriptions of convergence, each computed on its own.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvergenceForms {
    /// Every neighborhood lies in the generated filter.
    pub neighborhoods: bool,
    /// Every open neighborhood lies in the generated filter.
    pub open_neighborhoods: bool,
    /// Every member of the local base of open neighborhoods lies in the filter.
    pub local_base: bool,
    /// Through the smallest neighborhood.
    pub minimal_neighborhood: bool,
}

impl ConvergenceForms {
    pub fn agree(&self) -> bool {
        self.neighborhoods == self.open_neighborhoods
            && self.open_neighborhoods == self.local_base
            && self.local_base == self.minimal_neighborhood
    }
}

pub fn convergence_forms(base: &FilterBase, tau: &Topology, y: usize) -> Result<ConvergenceForms> {
    let in_filter = |s: Subset| base.members().iter().any(|b| b.is_subset_of(s));
    let nbhds = tau.neighborhood_filter(y, false)?;
    let opens = tau.neighborhood_filter(y, true)?;
    let local = SetFamily::new(tau.universe().clone(), [tau.min_nbhd(y)])?;
    debug_assert!(tau.is_local_base(&local, y));
    let neighborhoods = nbhds.iter().all(in_filter);
    let open_neighborhoods = opens.iter().all(in_filter);
    let local_base = local.iter().all(in_filter);
    Ok(ConvergenceForms {
        neighborhoods,
        open_neighborhoods,
        local_base,
        minimal_neighborhood: converges(base, tau, y),
    })
}

/// Convergence of the image of `base` under `h`, through preimages of open
/// neighborhoods and of a local base, against the direct image test.
pub fn image_convergence_forms(
    base: &FilterBase,
    h: &PointMap,
    tau: &Topology,
    z: usize,
) -> Result<(bool, bool, bool)> {
    let in_filter = |s: Subset| base.members().iter().any(|b| b.is_subset_of(s));
    let via_opens = tau
        .neighborhood_filter(z, true)?
        .iter()
        .all(|g| in_filter(h.preimage(g)));
    let via_local = in_filter(h.preimage(tau.min_nbhd(z)));
    let direct = converges(&filter_image(h, base)?, tau, z);
    Ok((via_opens, via_local, direct))
}

/// Intersection, over finite intersections `B` of constraint members, of the
/// closure of `h(B)`.
pub fn attraction_set_direct(p: &AttractionProblem) -> Result<Subset> {
    let fin = p.constraint.close_under(Closure::FiniteIntersections)?;
    Ok(fin
        .iter()
        .map(|b| p.tau.closure(p.h.image(b)))
        .fold(p.tau.universe().full(), Subset::intersection))
}

/// Union of the limits of images of admissible power-set ultrafilters.
pub fn attraction_set_via_ultrafilters(p: &AttractionProblem) -> Result<Subset> {
    let ambient = Ambient::power_set(p.domain());
    let mut out = Subset::EMPTY;
    for u in admissible_ultrafilters(&ambient, &p.constraint)? {
        out = out.union(limit_set(&u, p)?);
    }
    Ok(out)
}

/// Points to which the image of the ultrafilter `u` converges.
pub fn limit_set(u: &Ultrafilter, p: &AttractionProblem) -> Result<Subset> {
    let image = filter_image(&p.h, &FilterBase::from_filter(u.filter()))?;
    Ok(Subset::from_points(
        (0..p.tau.universe().size()).filter(|&z| converges(&image, &p.tau, z)),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialAttraction {
    /// Through admissible ultrafilters of the algebra.
    pub ultrafilter_form: Subset,
    /// Through every admissible filter of the algebra.
    pub filter_form: Subset,
}

impl PartialAttraction {
    pub fn forms_agree(&self) -> bool {
        self.ultrafilter_form == self.filter_form
    }
}

/// Attraction set when only filters of the algebra are allowed.
pub fn partial_attraction(p: &AttractionProblem) -> Result<PartialAttraction> {
    let alg = p.require_algebra()?;
    let ambient = Ambient::family(alg.clone())?;
    let mut ultra = Subset::EMPTY;
    for u in admissible_ultrafilters(&ambient, &p.constraint)? {
        ultra = ultra.union(limit_set(&u, p)?);
    }
    let mut filt = Subset::EMPTY;
    for f in admissible_filters(&ambient, &p.constraint)? {
        let image = filter_image(&p.h, &FilterBase::from_filter(&f))?;
        for z in 0..p.tau.universe().size() {
            if converges(&image, &p.tau, z) {
                filt = filt.with(z);
            }
        }
    }
    Ok(PartialAttraction {
        ultrafilter_form: ultra,
        filter_form: filt,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    /// Per point of `H`: some local base has all preimages in the algebra.
    pub per_point: Vec<bool>,
    /// Per point: the smallest neighborhood alone already works.
    pub by_min_nbhd: Vec<bool>,
    pub holds: bool,
}

/// Checks that every point of `H` has a local base whose preimages all lie
/// in the algebra. The smallest neighborhood is tried first; otherwise the
/// largest candidate family, every neighborhood with preimage in the
/// algebra, is tested as a local base.
pub fn condition_check(p: &AttractionProblem) -> Result<ConditionReport> {
    let alg = p.require_algebra()?;
    let hu = p.tau.universe();
    let mut per_point = Vec::new();
    let mut by_min = Vec::new();
    for z in 0..hu.size() {
        let m = p.tau.min_nbhd(z);
        let quick = alg.contains(p.h.preimage(m));
        let ok = quick || {
            let candidates: Vec<Subset> = hu
                .complement(m)
                .subsets()
                .map(|s| s.union(m))
                .filter(|&b| alg.contains(p.h.preimage(b)))
                .collect();
            !candidates.is_empty()
                && p.tau
                    .is_local_base(&SetFamily::new(hu.clone(), candidates)?, z)
        };
        by_min.push(quick);
        per_point.push(ok);
    }
    Ok(ConditionReport {
        holds: per_point.iter().all(|&b| b),
        per_point,
        by_min_nbhd: by_min,
    })
}
