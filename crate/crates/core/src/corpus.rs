//! Seeded generators for random families and attraction problems.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::attraction::AttractionProblem;
use crate::topo::Topology;
use crate::universe::{Closure, PointMap, Property, SetFamily, Subset, Universe};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Class {
    PiSystem,
    Lattice,
    Algebra,
    Semialgebra,
    Topology,
}

impl Class {
    pub const ALL: [Class; 5] = [
        Class::PiSystem,
        Class::Lattice,
        Class::Algebra,
        Class::Semialgebra,
        Class::Topology,
    ];

    /// The classification flag the generator promises.
    pub fn property(self) -> Property {
        match self {
            Class::PiSystem => Property::PiSystem,
            Class::Lattice => Property::LatticeWithUnit,
            Class::Algebra => Property::Algebra,
            Class::Semialgebra => Property::Semialgebra,
            Class::Topology => Property::Topology,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub class: Class,
    pub family: SetFamily,
}

impl Instance {
    pub fn tag_matches(&self) -> bool {
        self.family.classify().holds(self.class.property())
    }
}

pub struct Corpus {
    rng: ChaCha8Rng,
}

impl Corpus {
    pub fn new(seed: u64) -> Corpus {
        Corpus {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn universe(n: usize) -> Universe {
        Universe::new(n).expect("generator sizes stay within the universe cap")
    }

    pub fn subset(&mut self, n: usize) -> Subset {
        Subset(self.rng.gen::<u32>()).intersection(Subset::full(n))
    }

    /// A subset containing `core`, each other point kept with probability `p`.
    pub fn superset(&mut self, n: usize, core: Subset, p: f64) -> Subset {
        (0..n)
            .filter(|_| self.rng.gen_bool(p))
            .fold(core, |acc, x| acc.with(x))
    }

    /// Arbitrary family of up to `max` random subsets.
    pub fn family(&mut self, n: usize, max: usize) -> SetFamily {
        let k = self.rng.gen_range(0..=max);
        let sets: Vec<Subset> = (0..k).map(|_| self.subset(n)).collect();
        SetFamily::new(Corpus::universe(n), sets).unwrap()
    }

    fn generators(&mut self, n: usize) -> SetFamily {
        let k = self.rng.gen_range(1..=4);
        let sets: Vec<Subset> = (0..k).map(|_| self.subset(n)).collect();
        SetFamily::new(Corpus::universe(n), sets).unwrap()
    }

    pub fn pi_system(&mut self, n: usize) -> SetFamily {
        let u = Corpus::universe(n);
        self.generators(n)
            .close_under(Closure::FiniteIntersections)
            .unwrap()
            .with_members([Subset::EMPTY, u.full()])
            .unwrap()
    }

    /// Lattice containing the empty set and the whole universe.
    pub fn lattice(&mut self, n: usize) -> SetFamily {
        let u = Corpus::universe(n);
        self.generators(n)
            .with_members([Subset::EMPTY, u.full()])
            .unwrap()
            .close_under(Closure::FiniteIntersections)
            .unwrap()
            .close_under(Closure::Unions)
            .unwrap()
    }

    pub fn topology(&mut self, n: usize) -> Topology {
        Topology::new(self.lattice(n)).unwrap()
    }

    /// Random partition of `{0..n-1}` into nonempty blocks, ordered by least point.
    pub fn partition(&mut self, n: usize) -> Vec<Subset> {
        let k = self.rng.gen_range(1..=n);
        let mut blocks = vec![Subset::EMPTY; k];
        for x in 0..n {
            let b = self.rng.gen_range(0..k);
            blocks[b] = blocks[b].with(x);
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_by_key(|b| b.lowest());
        blocks
    }

    pub fn algebra_from_blocks(n: usize, blocks: &[Subset]) -> SetFamily {
        let sets = (0u32..1 << blocks.len()).map(|mask| {
            (0..blocks.len())
                .filter(|&i| mask >> i & 1 == 1)
                .fold(Subset::EMPTY, |acc, i| acc.union(blocks[i]))
        });
        SetFamily::new(Corpus::universe(n), sets).unwrap()
    }

    pub fn algebra(&mut self, n: usize) -> SetFamily {
        let blocks = self.partition(n);
        Corpus::algebra_from_blocks(n, &blocks)
    }

    /// Intervals over a random linear order of random consecutive segments.
    pub fn semialgebra(&mut self, n: usize) -> SetFamily {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut self.rng);
        let mut segments: Vec<Subset> = Vec::new();
        for &x in &order {
            match segments.last_mut() {
                Some(last) if self.rng.gen_bool(0.35) => *last = last.with(x),
                _ => segments.push(Subset::singleton(x)),
            }
        }
        let mut sets = vec![Subset::EMPTY];
        for i in 0..segments.len() {
            let mut acc = Subset::EMPTY;
            for seg in &segments[i..] {
                acc = acc.union(*seg);
                sets.push(acc);
            }
        }
        SetFamily::new(Corpus::universe(n), sets).unwrap()
    }

    pub fn instance(&mut self, class: Class, n: usize) -> Instance {
        let family = match class {
            Class::PiSystem => self.pi_system(n),
            Class::Lattice => self.lattice(n),
            Class::Algebra => self.algebra(n),
            Class::Semialgebra => self.semialgebra(n),
            Class::Topology => self.topology(n).opens().clone(),
        };
        Instance { class, family }
    }

    pub fn map(&mut self, e: usize, h: usize) -> PointMap {
        let images = (0..e).map(|_| self.rng.gen_range(0..h)).collect();
        PointMap::new(Corpus::universe(e), Corpus::universe(h), images).unwrap()
    }

    /// Constraint of 1 to 3 sets, usually sharing a common core.
    pub fn constraint(&mut self, e: usize) -> SetFamily {
        let k = self.rng.gen_range(1..=3);
        let core = if self.rng.gen_bool(0.8) {
            let c = self.subset(e);
            if c.is_empty() {
                Subset::singleton(self.rng.gen_range(0..e))
            } else {
                c
            }
        } else {
            Subset::EMPTY
        };
        let sets: Vec<Subset> = (0..k).map(|_| self.superset(e, core, 0.5)).collect();
        SetFamily::new(Corpus::universe(e), sets).unwrap()
    }

    /// Random problem with an arbitrary topology on `H` and, half the time,
    /// an algebra containing the constraint.
    pub fn problem(&mut self, e: usize, h: usize) -> AttractionProblem {
        let tau = self.topology(h);
        let map = self.map(e, h);
        if self.rng.gen_bool(0.5) {
            let alg = self.algebra(e);
            let constraint = self.constraint_from(&alg);
            AttractionProblem::new(tau, map, constraint, Some(alg)).unwrap()
        } else {
            let constraint = self.constraint(e);
            AttractionProblem::new(tau, map, constraint, None).unwrap()
        }
    }

    /// Constraint of 1 to 3 nonempty members of a family, when it has any.
    pub fn constraint_from(&mut self, fam: &SetFamily) -> SetFamily {
        let nonempty: Vec<Subset> = fam.iter().filter(|s| !s.is_empty()).collect();
        let k = self.rng.gen_range(1..=3);
        let sets: Vec<Subset> = (0..k)
            .map(|_| *nonempty.choose(&mut self.rng).unwrap())
            .collect();
        SetFamily::new(fam.universe().clone(), sets).unwrap()
    }

    /// Algebra, map and constraint for a discrete `H`. Half the maps are
    /// constant on every atom of the algebra.
    pub fn pipeline_problem(&mut self, e: usize, h: usize) -> AttractionProblem {
        let blocks = self.partition(e);
        let alg = Corpus::algebra_from_blocks(e, &blocks);
        let map = if self.rng.gen_bool(0.5) {
            let mut images = vec![0; e];
            for b in &blocks {
                let y = self.rng.gen_range(0..h);
                for x in b.points() {
                    images[x] = y;
                }
            }
            PointMap::new(Corpus::universe(e), Corpus::universe(h), images).unwrap()
        } else {
            self.map(e, h)
        };
        let constraint = self.constraint_from(&alg);
        let tau = Topology::discrete(&Corpus::universe(h)).unwrap();
        AttractionProblem::new(tau, map, constraint, Some(alg)).unwrap()
    }
}

/// `count` tagged instances cycling through every class, universe sizes
/// drawn from `sizes`.
pub fn instances(seed: u64, count: usize, sizes: std::ops::RangeInclusive<usize>) -> Vec<Instance> {
    let mut c = Corpus::new(seed);
    (0..count)
        .map(|i| {
            let n = c.rng.gen_range(sizes.clone());
            c.instance(Class::ALL[i % Class::ALL.len()], n)
        })
        .collect()
}
