//! Arc presentations and grid diagrams for prime alternating knots.
//!
//! The crate takes a Dowker-Thistlethwaite code, realizes it as a planar
//! diagram, grows a spanning tree of the diagram under a few prefix
//! conditions, stacks the resulting arcs at distinct heights around the tree,
//! reads off an arc presentation, and converts that to a grid diagram. The
//! grid is tidied by shape moves, rendered in several formats, and the whole
//! construction is cross-checked with the Alexander and Jones polynomials.
//!
//! Modules follow the pipeline order:
//!
//! * [`codec`] - parsing, validation and canonical forms of DT codes
//! * [`diagram`] - planar realization, faces, primality, Reidemeister moves
//! * [`spantree`] - admissible spanning trees of a diagram
//! * [`arcbuild`] - heights, spokes and page order of the arc presentation
//! * [`grid`] - grid diagrams, shape moves, renders
//! * [`invariants`] - Alexander and Jones polynomials, knot comparison
//! * [`pipeline`] - the end-to-end run over a knot table
//! * [`poly`] - integer Laurent polynomials used by the invariants

#![forbid(unsafe_code)]

pub mod arcbuild;
pub mod codec;
pub mod diagram;
mod error;
pub mod grid;
pub mod invariants;
pub mod pipeline;
pub mod poly;
pub mod spantree;

pub use arcbuild::ArcPresentation;
pub use codec::DtCode;
pub use diagram::PlanarDiagram;
pub use error::{Error, Result};
pub use grid::Grid;
pub use invariants::{Comparison, Verdict};
pub use poly::Laurent;
pub use spantree::SpanningTree;
