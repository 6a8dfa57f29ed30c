//! Group-expression language, command dispatch and reports for the `sgl` tool.

pub mod ast;
pub mod census;
pub mod commands;
pub mod eval;
pub mod parser;
pub mod report;
