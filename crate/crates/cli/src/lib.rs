//! Library surface of the command-line tool: the matrix document
//! schema, report rendering, and the randomized realizability search.
//! The binary in `main.rs` is a thin dispatcher over these.

pub mod document;
pub mod report;
pub mod search;
