use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{ClassificationReport, PointMap, Subset, Universe};
use crate::error::{Error, Result};

/// Cap on the number of members any family may hold.
pub const MAX_FAMILY: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Closure {
    /// Unions of all subfamilies, the empty union included.
    Unions,
    /// Intersections of all nonempty subfamilies.
    Intersections,
    /// Intersections of finite nonempty subfamilies, built pairwise.
    FiniteIntersections,
}

/// A canonical family of subsets: members ascending by bitmask, no duplicates.
#[derive(Clone)]
pub struct SetFamily {
    universe: Universe,
    members: Vec<Subset>,
    report: OnceLock<ClassificationReport>,
}

impl PartialEq for SetFamily {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.members == other.members
    }
}

impl Eq for SetFamily {}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetFamily[{}]{:?}", self.universe.size(), self.members)
    }
}

impl SetFamily {
    pub fn new<I: IntoIterator<Item = Subset>>(universe: Universe, members: I) -> Result<SetFamily> {
        let mut v: Vec<Subset> = Vec::new();
        for s in members {
            universe.check_subset(s)?;
            v.push(s);
        }
        v.sort_unstable();
        v.dedup();
        if v.len() > MAX_FAMILY {
            return Err(Error::FamilyTooLarge { cap: MAX_FAMILY });
        }
        Ok(SetFamily::from_canonical(universe, v))
    }

    /// Builds a family from point lists, e.g. `&[&[0, 1], &[2]]`.
    pub fn from_lists(universe: Universe, lists: &[&[usize]]) -> Result<SetFamily> {
        let mut sets = Vec::new();
        for l in lists {
            for &p in *l {
                universe.check_point(p)?;
            }
            sets.push(Subset::from_points(l.iter().copied()));
        }
        SetFamily::new(universe, sets)
    }

    pub(crate) fn from_canonical(universe: Universe, members: Vec<Subset>) -> SetFamily {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SetFamily {
            universe,
            members,
            report: OnceLock::new(),
        }
    }

    fn from_set(universe: Universe, set: impl IntoIterator<Item = Subset>) -> SetFamily {
        let mut v: Vec<Subset> = set.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        SetFamily::from_canonical(universe, v)
    }

    /// The full power set of a universe, if it fits under the member cap.
    pub fn power_set(universe: &Universe) -> Result<SetFamily> {
        if 1usize << universe.size() > MAX_FAMILY {
            return Err(Error::FamilyTooLarge { cap: MAX_FAMILY });
        }
        Ok(SetFamily::from_canonical(
            universe.clone(),
            universe.power_set().collect(),
        ))
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.members.binary_search(&s).ok()
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.universe == other.universe && self.iter().all(|s| other.contains(s))
    }

    /// Intersection of all members; the whole universe for the empty family.
    pub fn meet(&self) -> Subset {
        self.iter()
            .fold(self.universe.full(), |acc, s| acc.intersection(s))
    }

    /// Union of all members.
    pub fn join(&self) -> Subset {
        self.iter().fold(Subset::EMPTY, |acc, s| acc.union(s))
    }

    pub fn with_members<I: IntoIterator<Item = Subset>>(&self, extra: I) -> Result<SetFamily> {
        SetFamily::new(self.universe.clone(), self.iter().chain(extra))
    }

    pub fn relabel(&self, universe: Universe) -> Result<SetFamily> {
        self.universe.check_same(&universe)?;
        Ok(SetFamily::from_canonical(universe, self.members.clone()))
    }

    /// Elementwise complement.
    pub fn complement_dual(&self) -> SetFamily {
        let u = &self.universe;
        SetFamily::from_set(u.clone(), self.iter().map(|s| u.complement(s)))
    }

    pub fn close_under(&self, mode: Closure) -> Result<SetFamily> {
        let cap_err = || Error::FamilyTooLarge { cap: MAX_FAMILY };
        let out: HashSet<Subset> = match mode {
            Closure::Unions => {
                let mut acc: HashSet<Subset> = HashSet::from([Subset::EMPTY]);
                for m in self.iter() {
                    let grown: Vec<Subset> = acc.iter().map(|r| r.union(m)).collect();
                    acc.extend(grown);
                    if acc.len() > MAX_FAMILY {
                        return Err(cap_err());
                    }
                }
                acc
            }
            Closure::Intersections => {
                let mut acc: HashSet<Subset> = HashSet::new();
                for m in self.iter() {
                    let grown: Vec<Subset> = acc.iter().map(|r| r.intersection(m)).collect();
                    acc.extend(grown);
                    acc.insert(m);
                    if acc.len() > MAX_FAMILY {
                        return Err(cap_err());
                    }
                }
                acc
            }
            Closure::FiniteIntersections => {
                let mut acc: HashSet<Subset> = self.iter().collect();
                let mut order: Vec<Subset> = self.members.clone();
                let mut i = 0;
                while i < order.len() {
                    let a = order[i];
                    for j in 0..=i {
                        let c = a.intersection(order[j]);
                        if acc.insert(c) {
                            order.push(c);
                            if acc.len() > MAX_FAMILY {
                                return Err(cap_err());
                            }
                        }
                    }
                    i += 1;
                }
                acc
            }
        };
        Ok(SetFamily::from_set(self.universe.clone(), out))
    }

    /// Classification flags, computed once and cached.
    pub fn classify(&self) -> &ClassificationReport {
        self.report.get_or_init(|| ClassificationReport::compute(self))
    }

    /// `{A : A meets every member}`.
    pub fn meets_all(&self) -> Result<SetFamily> {
        let mut out = Vec::new();
        for a in self.universe.power_set() {
            if self.iter().all(|s| a.meets(s)) {
                out.push(a);
                if out.len() > MAX_FAMILY {
                    return Err(Error::FamilyTooLarge { cap: MAX_FAMILY });
                }
            }
        }
        Ok(SetFamily::from_canonical(self.universe.clone(), out))
    }

    pub fn image_family(&self, f: &PointMap) -> Result<SetFamily> {
        self.universe.check_same(f.domain())?;
        Ok(SetFamily::from_set(
            f.codomain().clone(),
            self.iter().map(|s| f.image(s)),
        ))
    }

    /// Preimages of the members of a family on the codomain of `f`.
    pub fn preimage_family(&self, f: &PointMap) -> Result<SetFamily> {
        self.universe.check_same(f.codomain())?;
        Ok(SetFamily::from_set(
            f.domain().clone(),
            self.iter().map(|s| f.preimage(s)),
        ))
    }

    /// Traces on `a`, expressed on the full universe.
    pub fn trace_on(&self, a: Subset) -> SetFamily {
        let set: BTreeSet<Subset> = self.iter().map(|s| s.intersection(a)).collect();
        SetFamily::from_canonical(self.universe.clone(), set.into_iter().collect())
    }

    pub fn show(&self) -> String {
        let parts: Vec<String> = self.iter().map(|s| self.universe.show(s)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}
