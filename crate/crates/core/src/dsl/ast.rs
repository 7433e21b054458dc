use alloc::boxed::Box;
use core::fmt;

use crate::catalog::SurfaceFamily;

/// Byte range `start..end` into the parsed text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub const fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn to(self, other: Span) -> Span {
        Span::new(self.start, other.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SurfaceExpr {
    /// Parameters are not validated until evaluation.
    Family {
        family: SurfaceFamily,
        span: Span,
    },
    BlowUp {
        child: Box<SurfaceExpr>,
        k: u64,
        span: Span,
    },
    LogTransform {
        child: Box<SurfaceExpr>,
        p: u64,
        q: u64,
        span: Span,
    },
}

impl SurfaceExpr {
    pub fn family(family: SurfaceFamily) -> Self {
        SurfaceExpr::Family { family, span: Span::default() }
    }

    pub fn blow_up(child: SurfaceExpr, k: u64) -> Self {
        SurfaceExpr::BlowUp { child: Box::new(child), k, span: Span::default() }
    }

    pub fn log_transform(child: SurfaceExpr, p: u64, q: u64) -> Self {
        SurfaceExpr::LogTransform { child: Box::new(child), p, q, span: Span::default() }
    }

    pub fn span(&self) -> Span {
        match self {
            SurfaceExpr::Family { span, .. }
            | SurfaceExpr::BlowUp { span, .. }
            | SurfaceExpr::LogTransform { span, .. } => *span,
        }
    }

    /// Structural equality, spans ignored.
    pub fn same_structure(&self, other: &SurfaceExpr) -> bool {
        match (self, other) {
            (SurfaceExpr::Family { family: a, .. }, SurfaceExpr::Family { family: b, .. }) => a == b,
            (SurfaceExpr::BlowUp { child: a, k: ka, .. }, SurfaceExpr::BlowUp { child: b, k: kb, .. }) => {
                ka == kb && a.same_structure(b)
            }
            (
                SurfaceExpr::LogTransform { child: a, p: pa, q: qa, .. },
                SurfaceExpr::LogTransform { child: b, p: pb, q: qb, .. },
            ) => pa == pb && qa == qb && a.same_structure(b),
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConstructionExpr {
    Surface(SurfaceExpr),
    /// Products are terminal: the grammar only allows them outermost.
    Product {
        surface: SurfaceExpr,
        genus: u64,
        span: Span,
    },
}

impl ConstructionExpr {
    pub fn product(surface: SurfaceExpr, genus: u64) -> Self {
        ConstructionExpr::Product { surface, genus, span: Span::default() }
    }

    pub fn span(&self) -> Span {
        match self {
            ConstructionExpr::Surface(s) => s.span(),
            ConstructionExpr::Product { span, .. } => *span,
        }
    }

    pub fn same_structure(&self, other: &ConstructionExpr) -> bool {
        match (self, other) {
            (ConstructionExpr::Surface(a), ConstructionExpr::Surface(b)) => a.same_structure(b),
            (
                ConstructionExpr::Product { surface: a, genus: ga, .. },
                ConstructionExpr::Product { surface: b, genus: gb, .. },
            ) => ga == gb && a.same_structure(b),
            _ => false,
        }
    }
}

impl From<SurfaceExpr> for ConstructionExpr {
    fn from(s: SurfaceExpr) -> Self {
        ConstructionExpr::Surface(s)
    }
}

impl fmt::Display for SurfaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceExpr::Family { family, .. } => write!(f, "{family}"),
            SurfaceExpr::BlowUp { child, k, .. } => write!(f, "blowup({child}, {k})"),
            SurfaceExpr::LogTransform { child, p, q, .. } => write!(f, "logtransform({child}, {p}, {q})"),
        }
    }
}

impl fmt::Display for ConstructionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionExpr::Surface(s) => write!(f, "{s}"),
            ConstructionExpr::Product { surface, genus, .. } => write!(f, "product({surface}, curve({genus}))"),
        }
    }
}

/// Canonical lowercase rendering; parsing it gives back the same structure.
pub fn pretty_print(e: &ConstructionExpr) -> alloc::string::String {
    alloc::format!("{e}")
}
