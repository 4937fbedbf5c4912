use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use super::{partition_witness, SetFamily, Subset, Universe};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    PiSystem,
    Lattice,
    LatticeWithUnit,
    LatticeWithSingletons,
    Algebra,
    Semialgebra,
    Topology,
    ClosedSystem,
    T1Topology,
    OpenBase,
    OpenBaseWithEmpty,
    ClosedBase,
    CompactTopology,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Property::PiSystem => "pi-system",
            Property::Lattice => "lattice",
            Property::LatticeWithUnit => "lattice with unit",
            Property::LatticeWithSingletons => "lattice with singletons",
            Property::Algebra => "algebra",
            Property::Semialgebra => "semialgebra",
            Property::Topology => "topology",
            Property::ClosedSystem => "closed system",
            Property::T1Topology => "T1 topology",
            Property::OpenBase => "open base",
            Property::OpenBaseWithEmpty => "open base with empty set",
            Property::ClosedBase => "closed base",
            Property::CompactTopology => "compact topology",
        };
        f.write_str(s)
    }
}

/// Counterexample attached to a failed flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    MissingMember { set: Subset },
    MissingIntersection { a: Subset, b: Subset },
    MissingUnion { a: Subset, b: Subset },
    MissingComplement { member: Subset },
    NoPartition { member: Subset, complement: Subset },
    Uncovered { point: usize },
    NoRefinement { b1: Subset, b2: Subset, point: usize },
    NonemptyMeet { meet: Subset },
    NoSeparation { b1: Subset, b2: Subset, point: usize },
    NoFiniteSubcover { cover: Vec<Subset> },
    NotTopology,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::MissingMember { set } => write!(f, "{set} is not a member"),
            Witness::MissingIntersection { a, b } => {
                write!(f, "{a} and {b} are members but their intersection is not")
            }
            Witness::MissingUnion { a, b } => {
                write!(f, "{a} and {b} are members but their union is not")
            }
            Witness::MissingComplement { member } => {
                write!(f, "the complement of {member} is not a member")
            }
            Witness::NoPartition {
                member,
                complement,
            } => write!(
                f,
                "complement {complement} of {member} is no disjoint union of members"
            ),
            Witness::Uncovered { point } => write!(f, "point {point} lies in no member"),
            Witness::NoRefinement { b1, b2, point } => write!(
                f,
                "no member contains {point} inside the intersection of {b1} and {b2}"
            ),
            Witness::NonemptyMeet { meet } => write!(f, "members intersect in {meet}"),
            Witness::NoSeparation { b1, b2, point } => write!(
                f,
                "no member contains the union of {b1} and {b2} while missing {point}"
            ),
            Witness::NoFiniteSubcover { cover } => write!(f, "cover {cover:?} has no finite subcover"),
            Witness::NotTopology => write!(f, "family is not a topology"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub pi_system: bool,
    pub lattice: bool,
    pub lattice_with_unit: bool,
    pub lattice_with_singletons: bool,
    pub algebra: bool,
    pub semialgebra: bool,
    pub topology: bool,
    pub closed_system: bool,
    pub t1_topology: bool,
    pub open_base: bool,
    pub open_base_with_empty: bool,
    pub closed_base: bool,
    /// Checked cover by cover; on a finite universe every cover is finite,
    /// so this holds for every topology.
    pub compact_topology: bool,
    pub witnesses: BTreeMap<Property, Witness>,
}

impl ClassificationReport {
    pub fn holds(&self, p: Property) -> bool {
        match p {
            Property::PiSystem => self.pi_system,
            Property::Lattice => self.lattice,
            Property::LatticeWithUnit => self.lattice_with_unit,
            Property::LatticeWithSingletons => self.lattice_with_singletons,
            Property::Algebra => self.algebra,
            Property::Semialgebra => self.semialgebra,
            Property::Topology => self.topology,
            Property::ClosedSystem => self.closed_system,
            Property::T1Topology => self.t1_topology,
            Property::OpenBase => self.open_base,
            Property::OpenBaseWithEmpty => self.open_base_with_empty,
            Property::ClosedBase => self.closed_base,
            Property::CompactTopology => self.compact_topology,
        }
    }

    pub fn witness(&self, p: Property) -> Option<&Witness> {
        self.witnesses.get(&p)
    }

    pub(super) fn compute(fam: &SetFamily) -> ClassificationReport {
        let u = fam.universe();
        let full = u.full();
        let missing = |s: Subset| (!fam.contains(s)).then_some(Witness::MissingMember { set: s });

        let no_empty = missing(Subset::EMPTY);
        let no_full = missing(full);
        let inter = pair_failure(fam, |a, b| a.intersection(b))
            .map(|(a, b)| Witness::MissingIntersection { a, b });
        let union = pair_failure(fam, |a, b| a.union(b)).map(|(a, b)| Witness::MissingUnion { a, b });
        let compl = fam
            .iter()
            .find(|&s| !fam.contains(u.complement(s)))
            .map(|member| Witness::MissingComplement { member });
        let singletons = (0..u.size())
            .map(Subset::singleton)
            .find(|&s| !fam.contains(s))
            .map(|set| Witness::MissingMember { set });
        let cosingletons = (0..u.size())
            .map(|x| u.complement(Subset::singleton(x)))
            .find(|&s| !fam.contains(s))
            .map(|set| Witness::MissingMember { set });

        let pi = first([&no_empty, &no_full, &inter]);
        let lattice = first([&no_empty, &union, &inter]);
        let lattice_unit = lattice.clone().or_else(|| no_full.clone());
        let lattice_single = lattice_unit.clone().or_else(|| singletons.clone());
        let algebra = pi.clone().or_else(|| compl.clone());
        let semialgebra = pi.clone().or_else(|| partition_failure(fam));
        let topology = pi.clone().or_else(|| union.clone());
        let closed_system = first([&no_empty, &no_full, &union, &inter]);
        let t1 = topology.clone().or_else(|| cosingletons.clone());
        let open_base = open_base_failure(fam);
        let open_base_empty = open_base.clone().or_else(|| no_empty.clone());
        let closed_base = closed_base_failure(fam);
        let compact = if topology.is_some() {
            Some(Witness::NotTopology)
        } else {
            literal_compactness(fam.members(), u).err()
        };

        let mut witnesses = BTreeMap::new();
        let mut flag = |p: Property, w: Option<Witness>| {
            let ok = w.is_none();
            if let Some(w) = w {
                witnesses.insert(p, w);
            }
            ok
        };
        ClassificationReport {
            pi_system: flag(Property::PiSystem, pi),
            lattice: flag(Property::Lattice, lattice),
            lattice_with_unit: flag(Property::LatticeWithUnit, lattice_unit),
            lattice_with_singletons: flag(Property::LatticeWithSingletons, lattice_single),
            algebra: flag(Property::Algebra, algebra),
            semialgebra: flag(Property::Semialgebra, semialgebra),
            topology: flag(Property::Topology, topology),
            closed_system: flag(Property::ClosedSystem, closed_system),
            t1_topology: flag(Property::T1Topology, t1),
            open_base: flag(Property::OpenBase, open_base),
            open_base_with_empty: flag(Property::OpenBaseWithEmpty, open_base_empty),
            closed_base: flag(Property::ClosedBase, closed_base),
            compact_topology: flag(Property::CompactTopology, compact),
            witnesses,
        }
    }
}

fn first<const N: usize>(ws: [&Option<Witness>; N]) -> Option<Witness> {
    ws.into_iter().find_map(|w| w.clone())
}

fn pair_failure(fam: &SetFamily, op: impl Fn(Subset, Subset) -> Subset) -> Option<(Subset, Subset)> {
    let m = fam.members();
    for (i, &a) in m.iter().enumerate() {
        for &b in &m[i + 1..] {
            if !fam.contains(op(a, b)) {
                return Some((a, b));
            }
        }
    }
    None
}

fn partition_failure(fam: &SetFamily) -> Option<Witness> {
    let u = fam.universe();
    for member in fam.iter() {
        let complement = u.complement(member);
        let parts = complement.len().max(1);
        let found = partition_witness(complement, fam, parts)
            .ok()
            .flatten()
            .is_some();
        if !found {
            return Some(Witness::NoPartition { member, complement });
        }
    }
    None
}

fn open_base_failure(fam: &SetFamily) -> Option<Witness> {
    let u = fam.universe();
    if let Some(point) = u.complement(fam.join()).lowest() {
        return Some(Witness::Uncovered { point });
    }
    // c is refined at every point iff it is the union of the members inside it
    let mut memo: HashMap<Subset, Subset> = HashMap::new();
    let m = fam.members();
    for (i, &b1) in m.iter().enumerate() {
        for &b2 in &m[i..] {
            let c = b1.intersection(b2);
            let covered = *memo.entry(c).or_insert_with(|| {
                fam.iter()
                    .filter(|b| b.is_subset_of(c))
                    .fold(Subset::EMPTY, Subset::union)
            });
            if let Some(point) = c.difference(covered).lowest() {
                return Some(Witness::NoRefinement { b1, b2, point });
            }
        }
    }
    None
}

fn closed_base_failure(fam: &SetFamily) -> Option<Witness> {
    let u = fam.universe();
    if !fam.contains(u.full()) {
        return Some(Witness::MissingMember { set: u.full() });
    }
    let meet = fam.meet();
    if !meet.is_empty() {
        return Some(Witness::NonemptyMeet { meet });
    }
    // d is separated from every outside point iff it is the meet of the members above it
    let mut memo: HashMap<Subset, Subset> = HashMap::new();
    let m = fam.members();
    for (i, &b1) in m.iter().enumerate() {
        for &b2 in &m[i..] {
            let d = b1.union(b2);
            let hull = *memo.entry(d).or_insert_with(|| {
                fam.iter()
                    .filter(|b| d.is_subset_of(*b))
                    .fold(u.full(), Subset::intersection)
            });
            if let Some(point) = hull.difference(d).lowest() {
                return Some(Witness::NoSeparation { b1, b2, point });
            }
        }
    }
    None
}

/// Checks every open cover for a finite subcover, extracting an irredundant
/// one by greedy removal. Covers are enumerated exhaustively for families of
/// at most 16 members; larger families check the whole family as a cover.
pub fn literal_compactness(members: &[Subset], u: &Universe) -> Result<(), Witness> {
    let full = u.full();
    let check = |cover: &[Subset]| -> Result<(), Witness> {
        let mut kept: Vec<Subset> = cover.to_vec();
        let mut i = 0;
        while i < kept.len() {
            let rest = kept
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(Subset::EMPTY, |acc, (_, s)| acc.union(*s));
            if rest == full {
                kept.remove(i);
            } else {
                i += 1;
            }
        }
        let covered = kept.iter().fold(Subset::EMPTY, |acc, s| acc.union(*s));
        if covered == full {
            Ok(())
        } else {
            Err(Witness::NoFiniteSubcover {
                cover: cover.to_vec(),
            })
        }
    };
    if members.len() <= 12 {
        for mask in 1u32..(1u32 << members.len()) {
            let cover: Vec<Subset> = (0..members.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| members[i])
                .collect();
            if cover.iter().fold(Subset::EMPTY, |a, s| a.union(*s)) == full {
                check(&cover)?;
            }
        }
        Ok(())
    } else if members.iter().fold(Subset::EMPTY, |a, s| a.union(*s)) == full {
        check(members)
    } else {
        Ok(())
    }
}
