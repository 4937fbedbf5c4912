//! Finite universes, subsets as bitmasks, and canonical set families.

mod classify;
mod family;
mod partition;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use classify::{literal_compactness, ClassificationReport, Property, Witness};
pub use family::{Closure, SetFamily, MAX_FAMILY};
pub use partition::{generate_algebra, partition_witness};

/// Largest supported universe. Subsets are stored in a `u32`.
pub const MAX_UNIVERSE: usize = 24;

/// A subset of a universe, bit `i` set when point `i` is a member.
///
/// The derived ordering compares the raw bitmask, which is the canonical
/// member order used everywhere else in the crate.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        if n >= 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Subset {
        Subset(1 << x)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Subset {
        Subset(points.into_iter().fold(0, |acc, p| acc | (1 << p)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, x: usize) -> bool {
        x < 32 && self.0 >> x & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self != other && self.is_subset_of(other)
    }

    pub fn meets(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn with(self, x: usize) -> Subset {
        Subset(self.0 | 1 << x)
    }

    pub fn lowest(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn points(self) -> Points {
        Points(self.0)
    }

    /// All subsets of `self`, in ascending bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(Subset(cur))
        })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.points())
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let points = Vec::<usize>::deserialize(d)?;
        if let Some(&p) = points.iter().find(|&&p| p >= 32) {
            return Err(serde::de::Error::custom(format!("point index {p} too large")));
        }
        Ok(Subset::from_points(points))
    }
}

pub struct Points(u32);

impl Iterator for Points {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(p)
    }
}

/// A finite point set `{0, .., size-1}` with optional display labels.
///
/// Equality ignores labels.
#[derive(Clone, Debug)]
pub struct Universe {
    size: usize,
    labels: Option<Arc<[String]>>,
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
    }
}

impl Eq for Universe {}

impl Universe {
    pub fn new(size: usize) -> Result<Universe> {
        if size == 0 {
            return Err(Error::EmptyUniverse);
        }
        if size > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size,
                cap: MAX_UNIVERSE,
            });
        }
        Ok(Universe { size, labels: None })
    }

    pub fn labelled<S: Into<String>>(labels: Vec<S>) -> Result<Universe> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut u = Universe::new(labels.len())?;
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        u.labels = Some(labels.into());
        Ok(u)
    }

    pub fn with_labels(self, labels: Option<Vec<String>>) -> Result<Universe> {
        match labels {
            None => Ok(self),
            Some(l) if l.len() != self.size => Err(Error::LabelCount {
                expected: self.size,
                got: l.len(),
            }),
            Some(l) => Universe::labelled(l),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.size)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn point(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|s| s == label),
            None => label.parse().ok().filter(|&x| x < self.size),
        }
    }

    pub fn check_point(&self, x: usize) -> Result<()> {
        if x < self.size {
            Ok(())
        } else {
            Err(Error::PointOutOfRange {
                point: x,
                size: self.size,
            })
        }
    }

    pub fn check_subset(&self, s: Subset) -> Result<()> {
        if s.is_subset_of(self.full()) {
            Ok(())
        } else {
            let point = s.difference(self.full()).lowest().unwrap_or(0);
            Err(Error::PointOutOfRange {
                point,
                size: self.size,
            })
        }
    }

    pub fn check_same(&self, other: &Universe) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                left: self.size,
                right: other.size,
            })
        }
    }

    pub fn complement(&self, s: Subset) -> Subset {
        self.full().difference(s)
    }

    /// Renders a subset with point labels, e.g. `{a,c}`.
    pub fn show(&self, s: Subset) -> String {
        let parts: Vec<String> = s.points().map(|p| self.label(p)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Every subset of the universe, ascending.
    pub fn power_set(&self) -> impl Iterator<Item = Subset> {
        self.full().subsets()
    }
}

/// A total map between two finite universes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointMap {
    domain: Universe,
    codomain: Universe,
    images: Vec<usize>,
}

impl PointMap {
    pub fn new(domain: Universe, codomain: Universe, images: Vec<usize>) -> Result<PointMap> {
        if images.len() != domain.size() {
            return Err(Error::MapLength {
                expected: domain.size(),
                got: images.len(),
            });
        }
        for &y in &images {
            codomain.check_point(y)?;
        }
        Ok(PointMap {
            domain,
            codomain,
            images,
        })
    }

    pub fn identity(u: &Universe) -> PointMap {
        PointMap {
            domain: u.clone(),
            codomain: u.clone(),
            images: (0..u.size()).collect(),
        }
    }

    pub fn domain(&self) -> &Universe {
        &self.domain
    }

    pub fn codomain(&self) -> &Universe {
        &self.codomain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn image(&self, s: Subset) -> Subset {
        s.points()
            .fold(Subset::EMPTY, |acc, x| acc.with(self.images[x]))
    }

    pub fn preimage(&self, s: Subset) -> Subset {
        Subset::from_points((0..self.domain.size()).filter(|&x| s.contains(self.images[x])))
    }

    pub fn is_injective(&self) -> bool {
        self.image(self.domain.full()).len() == self.domain.size()
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.domain.full()) == self.codomain.full()
    }

    pub fn compose(&self, after: &PointMap) -> Result<PointMap> {
        self.codomain.check_same(&after.domain)?;
        Ok(PointMap {
            domain: self.domain.clone(),
            codomain: after.codomain.clone(),
            images: self.images.iter().map(|&y| after.images[y]).collect(),
        })
    }
}
