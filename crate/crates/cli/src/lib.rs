#![forbid(unsafe_code)]

//! Persistence and wire formats for the search CLI: the catalog JSON/CSV
//! schema with exact (never floating-point) coordinate strings, run
//! manifests with content digests, and resumable checkpoints.

pub mod catalog;
pub mod checkpoint;
