use alloc::string::String;
use alloc::vec::Vec;

use crate::catalog::SurfaceFamily;
use crate::invariants::KodairaDimension;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("c1^2 + c2 = {sum} is not divisible by 12")]
    NotDivisible { sum: i64 },
    #[error("Noether's formula gives chi = {from_chern} but the Hodge data gives {from_hodge}")]
    NoetherMismatch { from_chern: i64, from_hodge: i64 },
    #[error("b2 = {b2} is smaller than b+ = {b_plus}")]
    NegativeBetti { b2: i64, b_plus: i64 },
    #[error("multiplicities {p} and {q} are not coprime")]
    NotCoprime { p: u64, q: u64 },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("plurigenus P_{m} of {family} is not available")]
    RuleUnavailable { family: SurfaceFamily, m: u64 },
    #[error("stored Kodaira dimension {stored} of {family} disagrees with plurigenera growth {observed}")]
    InconsistentKod { family: SurfaceFamily, stored: KodairaDimension, observed: KodairaDimension },
    #[error("{0} carries no marked elliptic fibration")]
    NotElliptic(SurfaceFamily),
    #[error("logarithmic transforms apply only to the rational elliptic surface and the elliptic K3, not {0}")]
    UnsupportedFamily(SurfaceFamily),
    #[error("surface has already been blown up {0} times")]
    AlreadyBlownUp(u64),
    #[error("intersection form is definite; indefinite classification does not apply")]
    DefiniteFormUnsupported,
    #[error("geometric genera differ: {left} vs {right}")]
    GeometricGenusMismatch { left: i64, right: i64 },
    #[error("c1^2 defect {0} is negative; swap the arguments")]
    NegativeDefect(i64),
    #[error("blow-up count k must be at least 1, got {0}")]
    BadK(u64),
    #[error("vector has no nonzero entry")]
    ZeroVector,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("invalid intersection form data: {0}")]
    InvalidForm(&'static str),
    #[error("Kodaira dimension {0} is outside the admissible range")]
    KodOutOfRange(i64),
    #[error("postcondition violated: {0}")]
    Postcondition(&'static str),
    #[error("coverage gap: missing {}", format_pairs(.0))]
    CoverageGap(Vec<(KodairaDimension, KodairaDimension)>),
}

fn format_pairs(pairs: &[(KodairaDimension, KodairaDimension)]) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for (i, (a, b)) in pairs.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "({a},{b})");
    }
    out
}

impl Error {
    /// Errors that indicate corrupt catalog data or a broken invariant,
    /// as opposed to bad caller input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NotDivisible { .. }
                | Error::NoetherMismatch { .. }
                | Error::NegativeBetti { .. }
                | Error::InconsistentKod { .. }
                | Error::InvalidForm(_)
                | Error::Postcondition(_)
        )
    }
}
