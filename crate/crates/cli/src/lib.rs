//! IO companion to the exact height/invariant engines: graph file
//! format, report rendering, command plumbing.

pub mod graphfile;
pub mod render;
