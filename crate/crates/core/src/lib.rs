//! Bound quiver algebras, their trivial extensions, and the cutting sets that
//! recover incidence algebras from a trivial extension.
//!
//! The usual flow is
//!
//! ```
//! use phicut::{corpus, incidence_cuts, trivial_extension, CutOptions, Document};
//!
//! let Document::Algebra(a) = corpus::document("e7_solution_01")? else { unreachable!() };
//! let t = trivial_extension(&a)?;
//! let found = incidence_cuts(&t, &CutOptions::default(), &corpus::solutions()?)?;
//! assert_eq!(found.reports.len(), 1);
//! # Ok::<(), phicut::Error>(())
//! ```
//!
//! Paths compose left to right: `a b` is `a` followed by `b`.
//! See `examples/` for one program per capability.

pub mod algebra;
pub mod error;
pub mod names;
pub mod path_space;
pub mod poset;
pub mod quiver;
pub mod graph_type;
pub mod iso;
pub mod trivext;
pub mod cutting;
pub mod matrix;
pub mod text;
pub mod corpus;
pub mod families;
pub mod cli;

pub use algebra::BoundAlgebra;
pub use cutting::{
    brute_force_cuts, cut, enumerate_cutting_sets, incidence_cuts, roundtrip, CutAnalysis, CutOptions, CutReport,
    CuttingSet, DedupMode, RoundTrip,
};
pub use error::{Error, Result};
pub use graph_type::{classify_graph, GraphType};
pub use iso::{are_isomorphic, find_isomorphism, isomorphic_up_to_opposite, IsoMode};
pub use matrix::{encode, heuristic, solve, MatrixInstance};
pub use path_space::{PathSpace, DEFAULT_PATH_CAP};
pub use poset::{hasse, incidence_presentation, Poset};
pub use quiver::{ArrowId, Path, Quiver, VertexId};
pub use text::{parse_document, Document};
pub use trivext::{maximal_paths, trivial_extension, TrivExtPresentation};
