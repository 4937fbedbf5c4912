use std::collections::{HashMap, HashSet};

use super::{Property, SetFamily, Subset, MAX_FAMILY};
use crate::error::{Error, Result};

/// Counts, per subset of a target, how many nonempty pairwise disjoint
/// candidates can tile it exactly. Bit `k` of the result is set when some
/// tiling uses `k` pieces.
struct Tilings<'a> {
    pieces: &'a [Subset],
    memo: HashMap<Subset, u32>,
}

impl Tilings<'_> {
    fn counts(&mut self, s: Subset) -> u32 {
        let Some(p) = s.lowest() else {
            return 1;
        };
        if let Some(&c) = self.memo.get(&s) {
            return c;
        }
        let mut acc = 0u32;
        for i in 0..self.pieces.len() {
            let piece = self.pieces[i];
            if piece.contains(p) && piece.is_subset_of(s) {
                acc |= self.counts(s.difference(piece)) << 1;
            }
        }
        self.memo.insert(s, acc);
        acc
    }
}

/// Lexicographically least `n`-tuple of pairwise disjoint members whose union
/// is `target`, comparing tuples by canonical member order.
pub fn partition_witness(target: Subset, fam: &SetFamily, n: usize) -> Result<Option<Vec<Subset>>> {
    if n == 0 {
        return Err(Error::ZeroParts);
    }
    fam.universe().check_subset(target)?;
    let candidates: Vec<Subset> = fam.iter().filter(|s| s.is_subset_of(target)).collect();
    let pieces: Vec<Subset> = candidates.iter().copied().filter(|s| !s.is_empty()).collect();
    let has_empty = fam.contains(Subset::EMPTY);
    let mut tilings = Tilings {
        pieces: &pieces,
        memo: HashMap::new(),
    };
    let mut feasible = |rest: Subset, slots: usize| -> bool {
        let c = tilings.counts(rest);
        if has_empty {
            let upto = if slots >= 31 { u32::MAX } else { (2u32 << slots) - 1 };
            c & upto != 0
        } else {
            slots < 32 && c >> slots & 1 == 1
        }
    };
    if !feasible(target, n) {
        return Ok(None);
    }
    let mut rest = target;
    let mut tuple = Vec::with_capacity(n);
    for slot in 0..n {
        let left = n - slot - 1;
        let pick = candidates
            .iter()
            .copied()
            .find(|c| c.is_subset_of(rest) && feasible(rest.difference(*c), left))
            .expect("feasibility guarantees a next piece");
        rest = rest.difference(pick);
        tuple.push(pick);
    }
    Ok(Some(tuple))
}

/// All finite disjoint unions of members of a semialgebra.
pub fn generate_algebra(fam: &SetFamily) -> Result<SetFamily> {
    let report = fam.classify();
    if !report.semialgebra {
        return Err(Error::NotA {
            property: Property::Semialgebra,
            witness: report.witness(Property::Semialgebra).cloned().unwrap(),
        });
    }
    let mut seen: HashSet<Subset> = HashSet::from([Subset::EMPTY]);
    let mut queue = vec![Subset::EMPTY];
    while let Some(a) = queue.pop() {
        for m in fam.iter() {
            if !m.meets(a) {
                let b = a.union(m);
                if seen.insert(b) {
                    if seen.len() > MAX_FAMILY {
                        return Err(Error::FamilyTooLarge { cap: MAX_FAMILY });
                    }
                    queue.push(b);
                }
            }
        }
    }
    SetFamily::new(fam.universe().clone(), seen)
}
