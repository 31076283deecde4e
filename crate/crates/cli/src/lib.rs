//! Companion crate to `sector-core`: the verification runner and JSON
//! reports, SVG rendering, and the subcommand implementations behind the
//! `sector` binary.

pub mod commands;
pub mod render;
pub mod report;
pub mod sample;
pub mod verify;
