//! File formats, JSON output shapes and multi-threaded drivers for
//! `unicolor-core`, plus the `unicolor` command-line tool.

pub mod catalog;
pub mod checkpoint;
pub mod dot;
pub mod graph6;
pub mod json;
pub mod parallel;

pub use unicolor_core as core;
