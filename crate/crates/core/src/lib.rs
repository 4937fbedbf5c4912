//! Finite set families, ultrafilter spaces and attraction sets under
//! asymptotic constraints.

pub mod attraction;
pub mod corpus;
pub mod error;
pub mod filters;
pub mod json;
pub mod oracle;
pub mod report;
pub mod topo;
pub mod ultraspace;
pub mod universe;
pub mod verify;

pub use attraction::AttractionProblem;
pub use error::{Error, Result};
pub use filters::{Ambient, Filter, FilterBase, Ultrafilter};
pub use report::{Check, Checks};
pub use topo::Topology;
pub use ultraspace::UltraSpace;
pub use universe::{Closure, PointMap, SetFamily, Subset, Universe};
