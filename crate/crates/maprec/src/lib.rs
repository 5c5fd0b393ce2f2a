//! Tables, checks and the command line on top of [`maprec_core`].

pub use maprec_core as core;

pub mod cache;
pub mod checks;
pub mod cli;
pub mod render;
pub mod table;
