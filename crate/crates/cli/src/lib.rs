//! File formats, JSON documents, limits and the command-line front end for
//! `zipcross-core`.

pub mod app;
pub mod format;
pub mod generate;
pub mod json;
pub mod limits;
pub mod parallel;

pub use app::{run, Response};
