//! Nullity of signed graphs: exact rank computation, structural invariants,
//! the cyclomatic/pendant upper bound on nullity and recognizers for the
//! graphs that attain it, plus an exhaustive and seeded verification harness.
//!
//! ```
//! use signull::{generators, linalg};
//!
//! let g: signull::SignedGraph = "n 4\ne 0 1 +\ne 1 2 +\ne 2 3 +\ne 3 0 +\n".parse().unwrap();
//! assert_eq!(linalg::nullity(&g), 2);
//! assert_eq!(g, generators::cycle(4, signull::Sign::Positive).unwrap());
//! ```

pub mod classify;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod linalg;
pub mod matching;
pub mod structure;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Edge, Relabeling, Sign, SignedGraph, VertexSet};
pub use linalg::{multiplicity, nullity, Rational};

// The guide's listings run as doctests so they cannot drift from the code.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/signed-graphs.md")]
    mod signed_graphs {}
    #[doc = include_str!("../../../book/src/nullity.md")]
    mod nullity {}
    #[doc = include_str!("../../../book/src/structure.md")]
    mod structure {}
    #[doc = include_str!("../../../book/src/trees.md")]
    mod trees {}
    #[doc = include_str!("../../../book/src/reductions.md")]
    mod reductions {}
    #[doc = include_str!("../../../book/src/extremal-graphs.md")]
    mod extremal_graphs {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
