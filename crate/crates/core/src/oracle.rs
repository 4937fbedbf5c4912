//! Brute-force reference computations, written straight from the
//! definitions and sharing no code with the fast paths they check.

use std::collections::HashMap;

use crate::attraction::AttractionProblem;
use crate::universe::Subset;

fn is_filter(members: &[Subset], chosen: &[Subset]) -> bool {
    if chosen.is_empty() || chosen.iter().any(|s| s.is_empty()) {
        return false;
    }
    let has = |s: Subset| chosen.contains(&s);
    let closed = chosen
        .iter()
        .all(|&a| chosen.iter().all(|&b| has(a.intersection(b))));
    let upward = chosen
        .iter()
        .all(|&a| members.iter().all(|&l| !a.is_subset_of(l) || has(l)));
    closed && upward
}

/// Every filter of a family of at most 20 members, by checking each of its
/// subfamilies against the axioms.
pub fn filters_naive(members: &[Subset]) -> Vec<Vec<Subset>> {
    assert!(members.len() <= 20, "naive enumeration is limited to 20 members");
    let mut out = Vec::new();
    for mask in 1u32..1 << members.len() {
        let chosen: Vec<Subset> = (0..members.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| members[i])
            .collect();
        if is_filter(members, &chosen) {
            out.push(chosen);
        }
    }
    out
}

/// Every filter of a family of at most 64 members. Subfamilies are explored
/// from large members to small ones, pruning branches that break upward
/// closure or closure under intersection, and every survivor is rechecked
/// against the full axioms.
pub fn filters_pruned(members: &[Subset]) -> Vec<Vec<Subset>> {
    assert!(members.len() <= 64, "pruned enumeration is limited to 64 members");
    let mut order: Vec<Subset> = members.to_vec();
    order.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let index: HashMap<Subset, usize> = order.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut out = Vec::new();
    let mut stack = vec![(0usize, 0u64, 0u64)];
    while let Some((i, inc, req)) = stack.pop() {
        if i == order.len() {
            let chosen: Vec<Subset> = (0..order.len())
                .filter(|&j| inc >> j & 1 == 1)
                .map(|j| order[j])
                .collect();
            if is_filter(members, &chosen) {
                let mut c = chosen;
                c.sort();
                out.push(c);
            }
            continue;
        }
        let l = order[i];
        if req >> i & 1 == 0 {
            stack.push((i + 1, inc, req));
        }
        if l.is_empty() {
            continue;
        }
        let supersets_in = (0..i)
            .filter(|&j| l.is_proper_subset_of(order[j]))
            .all(|j| inc >> j & 1 == 1);
        if !supersets_in {
            continue;
        }
        let mut new_req = req;
        let mut dead = false;
        for j in (0..i).filter(|&j| inc >> j & 1 == 1) {
            match index.get(&l.intersection(order[j])) {
                Some(&k) if k >= i || inc >> k & 1 == 1 => new_req |= 1 << k,
                _ => {
                    dead = true;
                    break;
                }
            }
        }
        if !dead {
            stack.push((i + 1, inc | 1 << i, new_req));
        }
    }
    out.sort();
    out
}

/// Filters not strictly contained in another filter.
pub fn maximal(filters: &[Vec<Subset>]) -> Vec<Vec<Subset>> {
    filters
        .iter()
        .filter(|f| {
            !filters
                .iter()
                .any(|g| g.len() > f.len() && f.iter().all(|s| g.contains(s)))
        })
        .cloned()
        .collect()
}

fn algebra_axioms(n: usize, fam: &[Subset]) -> bool {
    let full = Subset::full(n);
    fam.contains(&Subset::EMPTY)
        && fam.contains(&full)
        && fam.iter().all(|&a| fam.contains(&full.difference(a)))
        && fam
            .iter()
            .all(|&a| fam.iter().all(|&b| fam.contains(&a.intersection(b))))
}

/// Intersection of every algebra on `{0..n-1}` containing `fam`, found by
/// scanning all families of subsets. Only for `n <= 3`.
pub fn smallest_algebra(n: usize, fam: &[Subset]) -> Vec<Subset> {
    assert!(n <= 3, "family scan is limited to 3 points");
    let all: Vec<Subset> = Subset::full(n).subsets().collect();
    let mut meet: Option<Vec<Subset>> = None;
    for mask in 0u32..1 << all.len() {
        let cand: Vec<Subset> = (0..all.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| all[i])
            .collect();
        if fam.iter().all(|s| cand.contains(s)) && algebra_axioms(n, &cand) {
            meet = Some(match meet {
                None => cand,
                Some(m) => m.into_iter().filter(|s| cand.contains(s)).collect(),
            });
        }
    }
    meet.expect("the power set is always an algebra")
}

/// Points every open neighborhood of which meets the image of every
/// intersection of a nonempty subfamily of the constraint.
pub fn attraction_set(p: &AttractionProblem) -> Subset {
    let cons = p.constraint().members();
    assert!(cons.len() <= 16, "subfamily scan is limited to 16 constraint sets");
    let full = p.domain().full();
    let meets: Vec<Subset> = (1u32..1 << cons.len())
        .map(|mask| {
            (0..cons.len())
                .filter(|&i| mask >> i & 1 == 1)
                .fold(full, |acc, i| acc.intersection(cons[i]))
        })
        .collect();
    let tau = p.tau();
    let h = p.map();
    Subset::from_points((0..tau.universe().size()).filter(|&y| {
        tau.opens().iter().filter(|g| g.contains(y)).all(|g| {
            meets.iter().all(|&b| {
                b.points().any(|x| g.contains(h.apply(x)))
            })
        })
    }))
}
