//! File formats, instance generation, rendering and the command-line
//! front-end for `regioncolor-core`.

pub use regioncolor_core as core;

pub mod commands;
pub mod formats;
pub mod gen;
pub mod render;
