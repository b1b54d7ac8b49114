//! Textual front end: tokens, parser with declaration-level recovery, and the
//! canonical printer.

mod lexer;
mod parser;
mod printer;

pub use lexer::{is_keyword, tokenize, Keyword, Token, TokenKind};
pub use parser::parse_system;
pub use printer::{print_system, quote};
