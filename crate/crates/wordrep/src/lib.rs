//! File formats, multi-worker drivers and the command line for
//! [`wordrep_core`].

pub mod cli;
pub mod data;
pub mod format;
pub mod json;
pub mod parallel;
pub mod results;
pub mod verify;

pub use format::ParseError;
pub use parallel::Workers;
