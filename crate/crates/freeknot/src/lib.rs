//! File formats, generators and batch tools around `freeknot_core`.

pub mod dot;
pub mod generate;
pub mod input;
pub mod schema;
pub mod survey;
