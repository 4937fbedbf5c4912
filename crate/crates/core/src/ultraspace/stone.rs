use super::{build_space, UltraSpace, Which};
use crate::error::{Error, Result};
use crate::filters::{admissible_ultrafilters, Ambient, Filter};
use crate::report::Checks;
use crate::universe::{Closure, Property, SetFamily, Subset};

#[derive(Clone, Debug)]
pub struct StoneReport {
    pub space: UltraSpace,
    pub checks: Checks,
}

impl StoneReport {
    pub fn passed(&self) -> bool {
        self.checks.all_passed()
    }
}

/// Subfamilies used for the preimage identity: all of them for small
/// algebras, otherwise singletons, pairs and the whole family.
fn test_subfamilies(alg: &SetFamily) -> Vec<Vec<Subset>> {
    let m = alg.members();
    if m.len() <= 10 {
        (1u32..1 << m.len())
            .map(|mask| {
                (0..m.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| m[i])
                    .collect()
            })
            .collect()
    } else {
        let mut out: Vec<Vec<Subset>> = m.iter().map(|&a| vec![a]).collect();
        for (i, &a) in m.iter().enumerate() {
            for &b in &m[i + 1..] {
                out.push(vec![a, b]);
            }
        }
        out.push(m.to_vec());
        out
    }
}

pub fn stone_report(algebra: &SetFamily) -> Result<StoneReport> {
    let report = algebra.classify();
    if !report.algebra {
        return Err(Error::NotA {
            property: Property::Algebra,
            witness: report.witness(Property::Algebra).cloned().unwrap(),
        });
    }
    let space = build_space(algebra)?;
    let u = algebra.universe();
    let pts = space.universe();
    let all = pts.full();
    let star = space.star();
    let wallman = space.topology(Which::Wallman)?;
    let uf = space.uf();
    let mut checks = Checks::new();

    let bad = algebra
        .iter()
        .find(|&a| space.phi(u.complement(a)) != Some(all.difference(space.phi(a).unwrap())));
    checks.expect("phi-preserves-complement", bad.is_none(), || {
        format!("fails at {}", u.show(bad.unwrap()))
    });

    checks.expect("uf-self-dual", *uf == uf.complement_dual(), || {
        "uf differs from its complement dual".into()
    });
    checks.expect("star-equals-wallman", star == wallman, || {
        "star and Wallman topologies differ".into()
    });
    checks.expect("uf-is-algebra", uf.classify().algebra, || {
        format!("{:?}", uf.classify().witness(Property::Algebra))
    });

    let clopen: Vec<Subset> = star
        .opens()
        .iter()
        .filter(|&g| star.is_closed(g))
        .collect();
    checks.expect("uf-is-clopen-family", clopen == uf.members(), || {
        format!("clopen sets {:?} vs uf {:?}", clopen, uf.members())
    });

    let sep = star.separation();
    checks.expect("star-hausdorff", sep.hausdorff, || format!("{:?}", sep.unseparated));
    checks.expect("star-compact", sep.compact, || "open cover without subcover".into());

    let trace = space.trace_map()?;
    let distinguishes = (0..u.size()).all(|x| {
        (0..u.size()).all(|y| x == y || algebra.iter().any(|a| a.contains(x) && !a.contains(y)))
    });
    if distinguishes {
        checks.expect("trace-injective", trace.is_injective(), || {
            "algebra separates points but traces collide".into()
        });
    }

    let ambient = Ambient::family(algebra.clone())?;
    let mut bad = None;
    for fam in test_subfamilies(algebra) {
        let constraint = SetFamily::new(u.clone(), fam.iter().copied())?;
        let adm = admissible_ultrafilters(&ambient, &constraint)?;
        let adm_pts = adm
            .iter()
            .fold(Subset::EMPTY, |acc, p| acc.with(space.index_of(p).unwrap()));
        if trace.preimage(adm_pts) != constraint.meet() {
            bad = Some(constraint);
            break;
        }
    }
    checks.expect("trace-pulls-admissible-to-meet", bad.is_none(), || {
        bad.as_ref().unwrap().show()
    });

    let fin = algebra.close_under(Closure::FiniteIntersections)?;
    checks.expect("algebra-closed-under-meets", fin == *algebra, || {
        "finite intersections leave the algebra".into()
    });

    let dichotomous: Vec<Subset> = algebra
        .iter()
        .filter(|m| !m.is_empty())
        .filter(|&m| {
            let f = Filter::principal(ambient.clone(), m).unwrap();
            algebra
                .iter()
                .all(|a| f.contains(a) || f.contains(u.complement(a)))
        })
        .collect();
    let ult: Vec<Subset> = space.points().iter().map(|p| p.min()).collect();
    checks.expect("ultrafilters-are-dichotomous-filters", dichotomous == ult, || {
        format!("dichotomous {dichotomous:?} vs ultrafilters {ult:?}")
    });

    let density = space.density(Which::Star)?;
    checks.expect("traces-dense-in-star", density.dense, || {
        format!("closure of traces is {}", pts.show(density.closure))
    });

    Ok(StoneReport { space, checks })
}
