//! Signed Young diagrams for the classical symmetric pairs, the orbit graphs
//! whose vertices they are, closure relations between the corresponding
//! nilpotent K-orbits, and graph induction along column-pair removal.
//!
//! Every algebraic statement the library relies on has an independent oracle
//! in [`oracle`], and [`verify`] runs the full battery of cross-checks.

pub mod closure;
pub mod emit;
pub mod error;
pub mod graph;
pub mod induction;
pub mod matrix;
pub mod oracle;
pub mod pair;
pub mod partition;
pub mod series;
pub mod signed;
pub mod verify;

pub use closure::{closure_diagram, codim_one_covers, covers_down, ClosurePoset, CoverRelation};
pub use error::{Error, Result};
pub use graph::{
    build_graph, classify, component_count_formula, components_bfs, product_decomposition,
    representatives, Classification, ComponentLabels, OrbitGraph,
};
pub use induction::{ind_set, restrict, verify_component_bijection, BijectionReport};
pub use matrix::{jordan_type, verify_induction, ExactMatrix, InducedPair, RowSlot};
pub use pair::PairType;
pub use partition::{KSequence, OrbitDimension, Partition};
pub use series::{genfunc, TruncatedSeries};
pub use signed::{enumerate_syd, PiVector, Primitive, Row, Sign, SignedDiagram};
