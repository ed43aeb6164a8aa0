//! Hypergraph-based mathematical morphology for binary images.
//!
//! A finite hypergraph `H = (H•, H×)` pairs a vertex universe with an indexed
//! family of hyperedges. Four elementary operators move subsets between the
//! two lattices (edge selections to vertex sets and back); composing them
//! yields dilations, erosions, openings, closings and half-operators that
//! satisfy the usual adjunction and duality laws exactly.
//!
//! Binary images plug into this machinery through [`image`]: every pixel is a
//! vertex and every pixel contributes one hyperedge covering its structuring
//! element neighborhood. The resulting operators act as denoising filters, and
//! [`pipeline`] chains them in front of Zhang-Suen [`thinning`] so skeletons
//! keep the connectivity and shape of the underlying object.
//!
//! The crate is `no_std` (alloc required); IO, file formats and the CLI live
//! in the companion `hypermorph` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod hypergraph;
pub mod image;
pub mod morphology;
pub mod pipeline;
pub mod set;
pub mod thinning;

pub use hypergraph::{EdgeId, Hypergraph, HypergraphError, VertexId};
pub use image::{BinaryImage, ImageHypergraphConfig, NoiseError, StructuringElement};
pub use morphology::{AsfOrder, OperatorKind, OperatorSpec, VertexEdgePair};
pub use pipeline::{
    Connectivity, PipelineConfig, SkeletonComparison, SkeletonMetrics, TestShape,
};
pub use set::{EdgeSet, VertexSet};
pub use thinning::ThinningReport;
