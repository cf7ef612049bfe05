//! List colouring of matroids, matroid partition, and base-exchange
//! witnesses.
//!
//! A [`Matroid`] is a rank oracle on a ground set of at most 64 elements.
//! [`partition`] solves matroid partition with deficiency certificates;
//! [`coloring`] reduces list colouring to it and checks that colourability
//! from lists of fixed sizes is decided by the lists `{1..ℓ(e)}`;
//! [`exchange`] uses such colourings to build symmetric and partition
//! exchanges between bases. [`oracle`] holds the exhaustive checkers the
//! solvers are tested against.

pub mod cli;
pub mod coloring;
pub mod error;
pub mod exchange;
pub mod io;
pub mod matroid;
pub mod oracle;
pub mod partition;
pub mod set;

pub use coloring::{Coloring, ColoringOutcome, ListAssignment, SizeFunction};
pub use error::{Error, Result};
pub use matroid::{ElementMap, GroundSet, Kind, Matroid, RankOracle};
pub use partition::{DeficiencyCertificate, PartitionOutcome, PartitionProblem, PartitionSolution};
pub use set::ElementSet;
