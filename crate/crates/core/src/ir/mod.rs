//! Positional search on top of the antichain lattice.
//!
//! A term's occurrences in a document become an antichain of singleton
//! intervals; query operators map to lattice operators, and the resulting
//! antichain yields snippets and a score.

mod eval;
mod index;
mod query;
mod tokenize;

use thiserror::Error;

pub use eval::{evaluate, format_score, score, search, snippets, SearchResult};
pub use index::{build_index, Document, PositionalIndex};
pub use query::{parse_query, QueryAst};
pub use tokenize::tokenize;

#[derive(Debug, Error)]
pub enum IrError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("duplicate document id {0:?}")]
    DuplicateDoc(String),

    #[error("unknown document id {0:?}")]
    UnknownDoc(String),

    #[error("the top element {{∅}} has no score")]
    Unscoreable,

    #[error("invalid index at line {line}: {msg}")]
    InvalidIndex { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
