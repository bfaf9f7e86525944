//! Scene files, check execution, reports and rendering for the
//! `strongnear` command.

pub mod app;
pub mod checks;
pub mod load;
pub mod render;
pub mod report;
pub mod scene;
