//! Problem files, reports and the command-line driver around `wres-core`.

pub mod cli;
pub mod corpus;
pub mod problem_file;
pub mod report;
pub mod selftest;

