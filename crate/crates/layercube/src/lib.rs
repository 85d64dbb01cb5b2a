//! File formats, parallel drivers and the command line for `layercube-core`.

pub mod cli;
pub mod formats;
pub mod parallel;
