//! Command-line support for `autcl-core`: group descriptors, JSON documents,
//! DOT output and the verification registry.

pub mod descriptor;
pub mod dot;
pub mod json;
pub mod verify;

pub use autcl_core as core;
