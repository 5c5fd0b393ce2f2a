pub mod errata;
pub mod published;
