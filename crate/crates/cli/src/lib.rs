//! Library half of the `grepunit` binary: check definitions, sweeps and
//! output rendering.

pub mod checks;
pub mod render;
pub mod sweep;
