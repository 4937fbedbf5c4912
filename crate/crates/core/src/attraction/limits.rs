use serde::Serialize;

use super::{
    attraction_set_direct, condition_check, limit_set, partial_attraction, AttractionProblem,
    ConditionReport, PartialAttraction,
};
use crate::error::{Error, Result};
use crate::filters::{admissible_ultrafilters, Ambient};
use crate::report::Checks;
use crate::topo::map_report;
use crate::ultraspace::{build_space, UltraSpace};
use crate::universe::{PointMap, SetFamily, Subset};

/// Limits of images of the ultrafilters of an algebra.
#[derive(Clone, Debug)]
pub struct LimitMap {
    pub space: UltraSpace,
    /// `values[i]` is the limit at the i-th ultrafilter, when it converges.
    pub values: Vec<Option<usize>>,
    pub condition: ConditionReport,
    pub checks: Checks,
}

impl LimitMap {
    pub fn is_total(&self) -> bool {
        self.values.iter().all(Option::is_some)
    }

    /// Image of a set of ultrafilter points, if every value is defined.
    pub fn image(&self, pts: Subset) -> Option<Subset> {
        pts.points()
            .try_fold(Subset::EMPTY, |acc, i| self.values[i].map(|z| acc.with(z)))
    }
}

fn algebra_of(p: &AttractionProblem) -> Result<SetFamily> {
    match p.algebra() {
        Some(a) => Ok(a.clone()),
        None => SetFamily::power_set(p.domain()),
    }
}

/// Builds the limit map for a compact Hausdorff target. Without an explicit
/// algebra the power set of `E` is used.
pub fn ultra_limit_map(p: &AttractionProblem) -> Result<LimitMap> {
    let sep = p.tau().separation();
    if !(sep.hausdorff && sep.compact) {
        return Err(Error::Precondition(
            "limit map needs a compact Hausdorff topology on H".into(),
        ));
    }
    let alg = algebra_of(p)?;
    let p = &AttractionProblem::new(
        p.tau().clone(),
        p.map().clone(),
        p.constraint().clone(),
        Some(alg.clone()),
    )?;
    let space = build_space(&alg)?;
    let values: Vec<Option<usize>> = space
        .points()
        .iter()
        .map(|u| {
            let lim = limit_set(u, p)?;
            Ok((lim.len() == 1).then(|| lim.lowest().unwrap()))
        })
        .collect::<Result<_>>()?;
    let condition = condition_check(p)?;
    let tau = p.tau();
    let h = p.map();
    let e = p.domain();
    let hu = tau.universe();
    let trace = space.trace_map()?;
    let mut checks = Checks::new();

    let total = values.iter().all(Option::is_some);
    checks.expect("limit-total-iff-condition", total == condition.holds, || {
        format!("total {total}, condition {}", condition.holds)
    });

    let power = Ambient::power_set(e);
    let mut bad = None;
    for u in crate::filters::enumerate_ultrafilters(&power) {
        let x = u.point().unwrap();
        let lim = limit_set(&u, p)?;
        let at_trace = values[trace.apply(x)];
        if lim != Subset::singleton(h.apply(x)) || (total && at_trace != Some(h.apply(x))) {
            bad = Some(x);
            break;
        }
    }
    checks.expect("limit-of-fixed-ultrafilter", bad.is_none(), || {
        format!("fails at point {}", e.label(bad.unwrap()))
    });

    let mut bad = None;
    'outer: for (i, u) in space.points().iter().enumerate() {
        if let Some(z) = values[i] {
            for l in alg.iter().filter(|&l| u.contains(l)) {
                if !tau.closure(h.image(l)).contains(z) {
                    bad = Some((i, l));
                    break 'outer;
                }
            }
        }
    }
    checks.expect("limit-in-image-closures", bad.is_none(), || {
        let (i, l) = bad.unwrap();
        format!("{} misses closure of h({})", space.universe().label(i), e.show(l))
    });

    if total {
        let map = PointMap::new(
            space.universe().clone(),
            hu.clone(),
            values.iter().map(|v| v.unwrap()).collect(),
        )?;
        let r = map_report(&map, space.star(), tau)?;
        checks.expect("limit-continuous", r.continuous, || r.witnesses.join("; "));
        let composed = trace.compose(&map)?;
        checks.expect("limit-factors-through-trace", composed == *h, || {
            format!("{:?} vs {:?}", composed.images(), h.images())
        });
    }

    Ok(LimitMap {
        space,
        values,
        condition,
        checks,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    /// Admissible ultrafilters, as points of the ultrafilter space.
    pub admissible: Subset,
    /// Attraction set of the trace map in the star topology.
    pub inner: Subset,
    /// Image of `inner` under the limit map, when defined there.
    pub image: Option<Subset>,
    pub direct: Subset,
    pub partial: PartialAttraction,
    pub condition_holds: bool,
    pub limit_values: Vec<Option<usize>>,
    pub checks: Checks,
}

impl PipelineReport {
    pub fn passed(&self) -> bool {
        self.checks.all_passed()
    }
}

/// Solves the relaxed problem in the ultrafilter space of the algebra and
/// maps the result back through the limit map.
pub fn generalized_solution_pipeline(p: &AttractionProblem) -> Result<PipelineReport> {
    let limit = ultra_limit_map(p)?;
    let alg = algebra_of(p)?;
    let p = &AttractionProblem::new(
        p.tau().clone(),
        p.map().clone(),
        p.constraint().clone(),
        Some(alg.clone()),
    )?;
    let space = &limit.space;
    let ambient = Ambient::family(alg)?;
    let admissible = admissible_ultrafilters(&ambient, p.constraint())?
        .iter()
        .fold(Subset::EMPTY, |acc, u| acc.with(space.index_of(u).unwrap()));

    let inner_problem = AttractionProblem::new(
        space.star().clone(),
        space.trace_map()?,
        p.constraint().clone(),
        None,
    )?;
    let inner = attraction_set_direct(&inner_problem)?;
    let direct = attraction_set_direct(p)?;
    let partial = partial_attraction(p)?;
    let image = limit.image(inner);
    let pts = space.universe();
    let hu = p.tau().universe();

    let mut checks = limit.checks.clone();
    checks.expect("inner-attraction-is-admissible", inner == admissible, || {
        format!("inner {} vs admissible {}", pts.show(inner), pts.show(admissible))
    });
    checks.expect("partial-forms-agree", partial.forms_agree(), || {
        format!("{partial:?}")
    });
    checks.expect(
        "partial-within-direct",
        partial.ultrafilter_form.is_subset_of(direct),
        || format!("partial {} direct {}", hu.show(partial.ultrafilter_form), hu.show(direct)),
    );
    if limit.condition.holds {
        checks.expect("image-equals-direct", image == Some(direct), || {
            format!("image {image:?} direct {}", hu.show(direct))
        });
        checks.expect(
            "image-equals-partial",
            image == Some(partial.ultrafilter_form),
            || format!("image {image:?} partial {}", hu.show(partial.ultrafilter_form)),
        );
    }

    Ok(PipelineReport {
        admissible,
        inner,
        image,
        direct,
        partial,
        condition_holds: limit.condition.holds,
        limit_values: limit.values.clone(),
        checks,
    })
}
