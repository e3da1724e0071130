//! Compiles and runs every code block in the book.
//!
//! Each module below pulls one chapter in as its doc comment, so
//! `cargo test` treats the chapter's Rust snippets as doc-tests. The
//! crate exports nothing; it exists to keep the guide honest.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}

#[doc = include_str!("../../../book/src/dt-codes.md")]
mod dt_codes {}

#[doc = include_str!("../../../book/src/planar-diagrams.md")]
mod planar_diagrams {}

#[doc = include_str!("../../../book/src/spanning-trees.md")]
mod spanning_trees {}

#[doc = include_str!("../../../book/src/arc-presentations.md")]
mod arc_presentations {}

#[doc = include_str!("../../../book/src/grid-diagrams.md")]
mod grid_diagrams {}

#[doc = include_str!("../../../book/src/invariants.md")]
mod invariants {}

#[doc = include_str!("../../../book/src/pipeline.md")]
mod pipeline {}

#[doc = include_str!("../../../README.md")]
mod readme {}
