//! Construction expressions.
//!
//! ```text
//! expr    := surface | product ;
//! product := "product" "(" surface "," "curve" "(" INT ")" ")" ;
//! surface := family | "blowup" "(" surface "," INT ")"
//!          | "logtransform" "(" surface "," INT "," INT ")" ;
//! family  := IDENT | IDENT "(" INT { "," INT } ")" ;
//! ```
//!
//! Every node and every error carries a byte [`Span`] into the source.

mod ast;
mod eval;
mod parser;

pub use ast::{pretty_print, ConstructionExpr, Span, SurfaceExpr};
pub use eval::{evaluate, evaluate_surface, Model};
pub use parser::parse;

use alloc::string::String;

use crate::catalog::SurfaceFamily;
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DslErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("`{name}` takes {expected} argument(s), found {found}")]
    Arity { name: String, expected: usize, found: usize },
    #[error("type error: {0}")]
    Type(String),
    #[error(transparent)]
    Eval(Error),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{kind} at {}..{}", span.start, span.end)]
pub struct DslError {
    pub kind: DslErrorKind,
    pub span: Span,
}

impl DslError {
    pub(crate) fn new(kind: DslErrorKind, span: Span) -> Self {
        DslError { kind, span }
    }
}

/// Identifiers reserved by the grammar; never family names.
pub const KEYWORDS: [&str; 4] = ["product", "curve", "blowup", "logtransform"];

pub(crate) fn family_arity(name: &str) -> Option<usize> {
    SurfaceFamily::arity_of(name)
}
