//! Command-line front end for `ordsum`: the expression grammar, class
//! descriptors, config files and the command dispatcher.

pub mod app;
pub mod parse;

pub use app::{run, CliError, Outcome, Record};
pub use parse::{
    parse_expr, parse_ordinal, parse_scheme, parse_sgc, parse_table, parse_term, Expr, ParseError,
    Pos,
};
