use alloc::vec::Vec;
use core::fmt;

use super::AnomalyKind;
use crate::catalog::{SurfaceFamily, SurfaceModel};
use crate::cobordism::balance_blowups;
use crate::constructions::blow_up;
use crate::dsl::{evaluate_surface, DslErrorKind, SurfaceExpr};
use crate::error::{Error, Result};
use crate::num::gcd;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// Diffeomorphic threefolds of different Kodaira dimension.
    A,
    /// Diffeomorphic threefolds of equal Kodaira dimension that are not
    /// deformation equivalent.
    B,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::A => "A",
            Theorem::B => "B",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExampleId {
    A1,
    A2,
    A3,
    A4,
    A5,
    B1,
    B2,
    B3,
}

impl ExampleId {
    pub const ALL: [ExampleId; 8] = [
        ExampleId::A1,
        ExampleId::A2,
        ExampleId::A3,
        ExampleId::A4,
        ExampleId::A5,
        ExampleId::B1,
        ExampleId::B2,
        ExampleId::B3,
    ];
    pub const THEOREM_A: [ExampleId; 5] = [ExampleId::A1, ExampleId::A2, ExampleId::A3, ExampleId::A4, ExampleId::A5];
    pub const THEOREM_B: [ExampleId; 3] = [ExampleId::B1, ExampleId::B2, ExampleId::B3];

    pub fn theorem(self) -> Theorem {
        match self {
            ExampleId::A1 | ExampleId::A2 | ExampleId::A3 | ExampleId::A4 | ExampleId::A5 => Theorem::A,
            ExampleId::B1 | ExampleId::B2 | ExampleId::B3 => Theorem::B,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ExampleId::A1 => "A1",
            ExampleId::A2 => "A2",
            ExampleId::A3 => "A3",
            ExampleId::A4 => "A4",
            ExampleId::A5 => "A5",
            ExampleId::B1 => "B1",
            ExampleId::B2 => "B2",
            ExampleId::B3 => "B3",
        }
    }

    /// Case-insensitive.
    pub fn parse(s: &str) -> Option<Self> {
        ExampleId::ALL.into_iter().find(|id| id.as_str().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pairing {
    /// Left blown up at `left_offset + k` points, right at `right_offset + k`.
    Simultaneous { left_offset: u64, right_offset: u64 },
    /// The side with larger `c1^2` gets the extra points, as in
    /// [`balance_blowups`]; needs `k >= 1`.
    Balanced,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSpec {
    pub example: ExampleId,
    pub left: SurfaceExpr,
    pub right: SurfaceExpr,
    pub pairing: Pairing,
    pub k_min: u64,
}

/// The two blown-up surfaces of one row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairInstance {
    pub left_expr: SurfaceExpr,
    pub left: SurfaceModel,
    pub right_expr: SurfaceExpr,
    pub right: SurfaceModel,
}

fn fam(f: SurfaceFamily) -> SurfaceExpr {
    SurfaceExpr::family(f)
}

fn blown(base: &SurfaceExpr, n: u64) -> SurfaceExpr {
    if n == 0 {
        base.clone()
    } else {
        SurfaceExpr::blow_up(base.clone(), n)
    }
}

pub(crate) fn eval_base(e: &SurfaceExpr) -> Result<SurfaceModel> {
    evaluate_surface(e).map_err(|err| match err.kind {
        DslErrorKind::Eval(e) => e,
        _ => Error::Postcondition("example surface failed to evaluate"),
    })
}

/// Base data of an example. For B3 this is the representative pair
/// `dolgachev(2,3)` / `dolgachev(2,5)`; the verifier runs the whole grid.
pub fn pair_spec(example: ExampleId) -> PairSpec {
    use SurfaceFamily::*;
    let simultaneous = |left_offset, right_offset| Pairing::Simultaneous { left_offset, right_offset };
    let (left, right, pairing, k_min) = match example {
        ExampleId::A1 => (RationalElliptic, Dolgachev { p: 2, q: 3 }, simultaneous(0, 0), 0),
        ExampleId::A2 => (K3Elliptic, HomotopyK3 { p: 3, q: 5 }, simultaneous(0, 0), 0),
        ExampleId::A3 => (ProjectivePlane, Barlow, simultaneous(8, 0), 0),
        ExampleId::A4 => (K3Elliptic, Catanese, Pairing::Balanced, 1),
        ExampleId::A5 => (EllipticMn { n: 11 }, Sextic, Pairing::Balanced, 1),
        ExampleId::B1 => (Barlow, ProjectivePlane, simultaneous(0, 8), 0),
        ExampleId::B2 => (Horikawa, Sextic, simultaneous(0, 8), 0),
        ExampleId::B3 => (Dolgachev { p: 2, q: 3 }, Dolgachev { p: 2, q: 5 }, simultaneous(0, 0), 0),
    };
    PairSpec { example, left: fam(left), right: fam(right), pairing, k_min }
}

/// Coprime `(p, q)` with `2 <= p < q <= q_max`, ascending.
pub fn dolgachev_grid(q_max: u64) -> Vec<(u64, u64)> {
    (2..=q_max)
        .flat_map(|q| (2..q).map(move |p| (p, q)))
        .filter(|&(p, q)| gcd(p, q) == 1)
        .collect::<alloc::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

impl PairSpec {
    pub(crate) fn dolgachev_pair(a: (u64, u64), b: (u64, u64)) -> Self {
        PairSpec {
            example: ExampleId::B3,
            left: fam(SurfaceFamily::Dolgachev { p: a.0, q: a.1 }),
            right: fam(SurfaceFamily::Dolgachev { p: b.0, q: b.1 }),
            pairing: Pairing::Simultaneous { left_offset: 0, right_offset: 0 },
            k_min: 0,
        }
    }

    pub fn instance(&self, k: u64) -> Result<PairInstance> {
        let left = eval_base(&self.left)?;
        let right = eval_base(&self.right)?;
        let (left, right) = match self.pairing {
            Pairing::Simultaneous { left_offset, right_offset } => {
                let l = left_offset.checked_add(k).ok_or(Error::Overflow)?;
                let r = right_offset.checked_add(k).ok_or(Error::Overflow)?;
                (blow_up(&left, l)?, blow_up(&right, r)?)
            }
            Pairing::Balanced => {
                if left.chern.c1_sq >= right.chern.c1_sq {
                    balance_blowups(&left, &right, k)?
                } else {
                    let (r, l) = balance_blowups(&right, &left, k)?;
                    (l, r)
                }
            }
        };
        Ok(PairInstance {
            left_expr: blown(&self.left, left.blowups),
            right_expr: blown(&self.right, right.blowups),
            left,
            right,
        })
    }

    pub(crate) fn row_anomalies(&self, genus: u64) -> Vec<AnomalyKind> {
        match self.example {
            ExampleId::A2 if genus >= 2 => alloc::vec![AnomalyKind::A2Header],
            ExampleId::A3 => alloc::vec![AnomalyKind::A3GenusSwap],
            ExampleId::A5 => alloc::vec![AnomalyKind::A5Balancing],
            _ => Vec::new(),
        }
    }

    pub(crate) fn involves_dolgachev_2_3(&self) -> bool {
        let target = SurfaceFamily::Dolgachev { p: 2, q: 3 };
        [&self.left, &self.right].iter().any(|e| matches!(e, SurfaceExpr::Family { family, .. } if *family == target))
    }
}
