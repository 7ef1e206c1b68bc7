//! Textual frontend: expression grammar, canonical printer, `.bb` source
//! files, reports, and the CLI dispatcher.

pub mod cli;
pub mod parse;
pub mod print;
pub mod report;
pub mod source;

pub use parse::parse_expression;
pub use print::print_expression;
pub use report::Report;
pub use source::SourceFile;
