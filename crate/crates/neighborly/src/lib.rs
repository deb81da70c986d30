//! A workbench for enumerating uniform k-neighborly oriented matroids of
//! small rank and corank by single-element extension, and for analyzing the
//! resulting catalogs: faces and neighborliness, relabeling-class and
//! face-lattice-class canonical keys, facet-ridge graphs, universal edges,
//! edge-valence invariants, the dual surrounding property, and exact
//! non-realizability certificates via biquadratic final polynomials.
//!
//! Ground sets are `{0,..,n-1}` internally; all file formats and reports use
//! 1-based element labels.

pub mod analyze;
pub mod bfp;
pub mod canon;
pub mod catalog;
pub mod chirotope;
pub mod error;
pub mod extend;
pub mod faces;
pub mod matrixint;
pub mod pipeline;
pub mod sign;
pub mod subsets;

pub use chirotope::Chirotope;
pub use error::OmError;
pub use sign::{Sign, SignVector};
