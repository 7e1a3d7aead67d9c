//! Spectral and combinatorial machinery for odd cycles in `(n,d,λ)`-graphs.
//!
//! * [`graph`]: immutable simple graphs, induced subgraphs, edge-list I/O.
//! * [`constructions`]: Paley, random regular and standard graphs.
//! * [`spectral`]: dense spectra, `(n,d,λ)` certificates, mixing checks.
//! * [`counting`]: exact walk, homomorphism and labelled-copy counts.
//! * [`commonality`]: two-colour odd-cycle densities and the `Q` polynomial.
//! * [`regularize`]: extraction of an almost-regular set dense in a subgraph.
//! * [`experiments`]: built-in corpus and randomized trial runners.
//!
//! Data-parallel loops go through [`exec`], which uses rayon when the
//! `parallel` feature is on and plain iterators otherwise.

pub mod commonality;
pub mod constructions;
pub mod counting;
pub mod error;
pub mod exec;
pub mod experiments;
pub mod graph;
pub mod regularize;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
