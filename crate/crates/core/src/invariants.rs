//! Invariant bookkeeping for simply connected compact complex surfaces.
//!
//! Two routes reach the signature of a surface: the Betti route
//! (`b+ = 2 p_g + 1`, `b2 = c2 - 2`) and the Hirzebruch route
//! (`sigma = (c1^2 - 2 c2) / 3`). [`IntersectionForm::for_surface`] computes
//! the first and refuses any surface on which the second disagrees.

use core::fmt;

use crate::catalog::SurfaceModel;
use crate::error::{Error, Result};
use crate::num;

/// Chern numbers `(c1^2, c2)` of a compact complex surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChernPair {
    pub c1_sq: i64,
    pub c2: i64,
}

impl ChernPair {
    pub const fn new(c1_sq: i64, c2: i64) -> Self {
        ChernPair { c1_sq, c2 }
    }
}

/// Holomorphic Euler characteristic from Noether's formula
/// `chi(O) = (c1^2 + c2) / 12`.
pub fn chi_from_noether(c: ChernPair) -> Result<i64> {
    let sum = num::add(c.c1_sq, c.c2)?;
    if sum.rem_euclid(12) != 0 {
        return Err(Error::NotDivisible { sum });
    }
    Ok(sum / 12)
}

/// Signature via the Hirzebruch route, `(c1^2 - 2 c2) / 3`.
pub fn signature_from_chern(c: ChernPair) -> Result<i64> {
    let twice = num::mul(2, c.c2)?;
    let numerator = num::sub(c.c1_sq, twice)?;
    if numerator.rem_euclid(3) != 0 {
        return Err(Error::InvalidForm("c1^2 - 2 c2 is not divisible by 3"));
    }
    Ok(numerator / 3)
}

/// Geometric genus, irregularity and holomorphic Euler characteristic.
///
/// Irregularity is always zero here; every surface in scope is simply
/// connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HodgeSummary {
    p_g: i64,
    q: i64,
    chi_o: i64,
}

impl HodgeSummary {
    /// Builds the summary and checks it against Noether's formula for `chern`.
    pub fn new(p_g: i64, q: i64, chern: ChernPair) -> Result<Self> {
        if p_g < 0 {
            return Err(Error::BadParameter(alloc::format!("geometric genus {p_g} is negative")));
        }
        if q != 0 {
            return Err(Error::BadParameter(alloc::format!(
                "irregularity {q} is nonzero; only simply connected surfaces are modeled"
            )));
        }
        let chi_o = num::add(num::sub(1, q)?, p_g)?;
        let noether = chi_from_noether(chern)?;
        if noether != chi_o {
            return Err(Error::NoetherMismatch { from_chern: noether, from_hodge: chi_o });
        }
        Ok(HodgeSummary { p_g, q, chi_o })
    }

    pub fn p_g(&self) -> i64 {
        self.p_g
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn chi_o(&self) -> i64 {
        self.chi_o
    }
}

/// Second Betti number split into its positive and negative parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BettiData {
    pub b2: i64,
    pub b_plus: i64,
    pub b_minus: i64,
}

/// Betti numbers of a simply connected surface: `b2 = c2 - 2`,
/// `b+ = 2 p_g + 1`.
pub fn betti_data(p_g: i64, c2: i64) -> Result<BettiData> {
    let b2 = num::sub(c2, 2)?;
    let b_plus = num::add(num::mul(2, p_g)?, 1)?;
    if b2 < b_plus {
        return Err(Error::NegativeBetti { b2, b_plus });
    }
    Ok(BettiData { b2, b_plus, b_minus: b2 - b_plus })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Rank, `b+`, `b-` and parity of a unimodular intersection form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntersectionForm {
    b_plus: i64,
    b_minus: i64,
    parity: Parity,
}

impl IntersectionForm {
    pub fn new(b_plus: i64, b_minus: i64, parity: Parity) -> Result<Self> {
        if b_plus < 0 || b_minus < 0 {
            return Err(Error::InvalidForm("negative b+ or b-"));
        }
        num::add(b_plus, b_minus)?;
        let form = IntersectionForm { b_plus, b_minus, parity };
        // Even unimodular forms have signature divisible by 8.
        if parity == Parity::Even && form.signature().rem_euclid(8) != 0 {
            return Err(Error::InvalidForm("even form with signature not divisible by 8"));
        }
        Ok(form)
    }

    /// Extracts the form of a simply connected surface. Parity is even
    /// exactly when the surface is spin.
    pub fn for_surface(s: &SurfaceModel) -> Result<Self> {
        let betti = betti_data(s.hodge.p_g(), s.chern.c2)?;
        let parity = if s.spin { Parity::Even } else { Parity::Odd };
        let form = IntersectionForm::new(betti.b_plus, betti.b_minus, parity)?;
        if form.signature() != signature_from_chern(s.chern)? {
            return Err(Error::InvalidForm("Betti signature disagrees with (c1^2 - 2 c2)/3"));
        }
        Ok(form)
    }

    pub fn rank(&self) -> i64 {
        self.b_plus + self.b_minus
    }

    pub fn b_plus(&self) -> i64 {
        self.b_plus
    }

    pub fn b_minus(&self) -> i64 {
        self.b_minus
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn signature(&self) -> i64 {
        self.b_plus - self.b_minus
    }

    pub fn is_indefinite(&self) -> bool {
        self.b_plus >= 1 && self.b_minus >= 1
    }
}

impl fmt::Display for IntersectionForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rank {}, b+ {}, b- {}, signature {}, {}",
            self.rank(),
            self.b_plus,
            self.b_minus,
            self.signature(),
            self.parity
        )
    }
}

/// Intersection form of a catalog surface; see [`IntersectionForm::for_surface`].
pub fn intersection_form(s: &SurfaceModel) -> Result<IntersectionForm> {
    IntersectionForm::for_surface(s)
}

/// Kodaira dimension of a surface or threefold.
///
/// The derived ordering puts `NegInfinity` below every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KodairaDimension {
    NegInfinity,
    Zero,
    One,
    Two,
    Three,
}

impl KodairaDimension {
    pub const ALL: [KodairaDimension; 5] = [
        KodairaDimension::NegInfinity,
        KodairaDimension::Zero,
        KodairaDimension::One,
        KodairaDimension::Two,
        KodairaDimension::Three,
    ];

    pub fn from_value(v: i64) -> Result<Self> {
        match v {
            0 => Ok(KodairaDimension::Zero),
            1 => Ok(KodairaDimension::One),
            2 => Ok(KodairaDimension::Two),
            3 => Ok(KodairaDimension::Three),
            _ => Err(Error::KodOutOfRange(v)),
        }
    }

    /// `None` for `-inf`.
    pub fn value(self) -> Option<u8> {
        match self {
            KodairaDimension::NegInfinity => None,
            KodairaDimension::Zero => Some(0),
            KodairaDimension::One => Some(1),
            KodairaDimension::Two => Some(2),
            KodairaDimension::Three => Some(3),
        }
    }

    /// Sum with `-inf` absorbing.
    pub fn checked_add(self, other: Self) -> Result<Self> {
        match (self.value(), other.value()) {
            (Some(a), Some(b)) => Self::from_value(i64::from(a) + i64::from(b)),
            _ => Ok(KodairaDimension::NegInfinity),
        }
    }
}

impl fmt::Display for KodairaDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            None => f.write_str("-inf"),
            Some(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FundamentalGroup {
    Trivial,
    SurfaceGroup { genus: u64 },
}

impl FundamentalGroup {
    pub fn surface_group(genus: u64) -> Result<Self> {
        if genus == 0 {
            return Err(Error::BadParameter("surface group genus must be at least 1".into()));
        }
        Ok(FundamentalGroup::SurfaceGroup { genus })
    }

    /// Fundamental group of `S x C` for simply connected `S` and a curve of
    /// genus `genus`.
    pub fn of_curve(genus: u64) -> Self {
        if genus == 0 {
            FundamentalGroup::Trivial
        } else {
            FundamentalGroup::SurfaceGroup { genus }
        }
    }
}

impl fmt::Display for FundamentalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FundamentalGroup::Trivial => f.write_str("trivial"),
            FundamentalGroup::SurfaceGroup { genus } => write!(f, "surface group of genus {genus}"),
        }
    }
}
