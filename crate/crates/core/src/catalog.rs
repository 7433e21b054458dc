//! The surface families and their exact invariants.
//!
//! | family              | c1^2 | c2   | p_g | kod  | spin        |
//! |---------------------|------|------|-----|------|-------------|
//! | `cp2`               | 9    | 3    | 0   | -inf | no          |
//! | `rational_elliptic` | 0    | 12   | 0   | -inf | no          |
//! | `dolgachev(p,q)`    | 0    | 12   | 0   | 1    | no          |
//! | `k3`                | 0    | 24   | 1   | 0    | yes         |
//! | `homotopy_k3(p,q)`  | 0    | 24   | 1   | 1    | p, q odd    |
//! | `barlow`            | 1    | 11   | 0   | 2    | no          |
//! | `catanese`          | 1    | 23   | 1   | 2    | no          |
//! | `elliptic_mn(n)`    | 0    | 12n  | n-1 | 1    | n even      |
//! | `horikawa`          | 16   | 116  | 10  | 2    | no          |
//! | `sextic`            | 24   | 108  | 10  | 2    | yes         |

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::invariants::{chi_from_noether, ChernPair, HodgeSummary, IntersectionForm, KodairaDimension};
use crate::num::{self, gcd};

/// Default range `1..=KOD_CHECK_BOUND` scanned when checking a stored
/// Kodaira dimension against plurigenera growth.
pub const KOD_CHECK_BOUND: u64 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurfaceFamily {
    ProjectivePlane,
    RationalElliptic,
    Dolgachev { p: u64, q: u64 },
    K3Elliptic,
    HomotopyK3 { p: u64, q: u64 },
    Barlow,
    Catanese,
    EllipticMn { n: u64 },
    Horikawa,
    Sextic,
}

impl SurfaceFamily {
    /// Lowercase identifier used by the construction language.
    pub fn name(&self) -> &'static str {
        match self {
            SurfaceFamily::ProjectivePlane => "cp2",
            SurfaceFamily::RationalElliptic => "rational_elliptic",
            SurfaceFamily::Dolgachev { .. } => "dolgachev",
            SurfaceFamily::K3Elliptic => "k3",
            SurfaceFamily::HomotopyK3 { .. } => "homotopy_k3",
            SurfaceFamily::Barlow => "barlow",
            SurfaceFamily::Catanese => "catanese",
            SurfaceFamily::EllipticMn { .. } => "elliptic_mn",
            SurfaceFamily::Horikawa => "horikawa",
            SurfaceFamily::Sextic => "sextic",
        }
    }

    pub fn params(&self) -> Vec<u64> {
        match *self {
            SurfaceFamily::Dolgachev { p, q } | SurfaceFamily::HomotopyK3 { p, q } => vec![p, q],
            SurfaceFamily::EllipticMn { n } => vec![n],
            _ => Vec::new(),
        }
    }

    /// Number of positional parameters the family takes.
    pub fn arity_of(name: &str) -> Option<usize> {
        match name {
            "cp2" | "rational_elliptic" | "k3" | "barlow" | "catanese" | "horikawa" | "sextic" => Some(0),
            "elliptic_mn" => Some(1),
            "dolgachev" | "homotopy_k3" => Some(2),
            _ => None,
        }
    }

    /// Builds a family from its identifier and parameters. Parameter
    /// constraints are checked by [`SurfaceFamily::validate`], not here.
    pub fn from_name(name: &str, params: &[u64]) -> Option<Self> {
        if Self::arity_of(name)? != params.len() {
            return None;
        }
        Some(match name {
            "cp2" => SurfaceFamily::ProjectivePlane,
            "rational_elliptic" => SurfaceFamily::RationalElliptic,
            "dolgachev" => SurfaceFamily::Dolgachev { p: params[0], q: params[1] },
            "k3" => SurfaceFamily::K3Elliptic,
            "homotopy_k3" => SurfaceFamily::HomotopyK3 { p: params[0], q: params[1] },
            "barlow" => SurfaceFamily::Barlow,
            "catanese" => SurfaceFamily::Catanese,
            "elliptic_mn" => SurfaceFamily::EllipticMn { n: params[0] },
            "horikawa" => SurfaceFamily::Horikawa,
            "sextic" => SurfaceFamily::Sextic,
            _ => return None,
        })
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            SurfaceFamily::Dolgachev { p, q } | SurfaceFamily::HomotopyK3 { p, q } => check_multiplicities(p, q),
            SurfaceFamily::EllipticMn { n } if n < 3 => {
                Err(Error::BadParameter(alloc::format!("elliptic_mn needs n >= 3, got {n}")))
            }
            _ => Ok(()),
        }
    }
}

/// `2 <= p < q` and `gcd(p, q) = 1`.
pub(crate) fn check_multiplicities(p: u64, q: u64) -> Result<()> {
    if p < 2 {
        return Err(Error::BadParameter(alloc::format!("multiplicity p = {p} must be at least 2")));
    }
    if p >= q {
        return Err(Error::BadParameter(alloc::format!("multiplicities must satisfy p < q, got ({p}, {q})")));
    }
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    Ok(())
}

impl fmt::Display for SurfaceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        let params = self.params();
        if !params.is_empty() {
            f.write_str("(")?;
            for (i, p) in params.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Marks a surface as carrying an elliptic fibration over the projective
/// line, with the multiplicities of its two multiple fibers if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EllipticFibration {
    pub multiple_fibers: Option<(u64, u64)>,
}

/// A catalog surface, possibly blown up.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurfaceModel {
    pub family: SurfaceFamily,
    pub blowups: u64,
    pub chern: ChernPair,
    pub hodge: HodgeSummary,
    pub spin: bool,
    pub kod: KodairaDimension,
    pub elliptic: Option<EllipticFibration>,
    /// First Chern class in the basis `(H, E_1, .., E_k)`; only known for
    /// blow-ups of the projective plane.
    pub c1_coords: Option<Vec<i64>>,
}

impl SurfaceModel {
    pub fn intersection_form(&self) -> Result<IntersectionForm> {
        IntersectionForm::for_surface(self)
    }

    pub fn plurigenus(&self, m: u64) -> Result<u64> {
        plurigenus(self, m)
    }
}

struct Row {
    c1_sq: i64,
    c2: i64,
    p_g: i64,
    kod: KodairaDimension,
    spin: bool,
}

fn row(family: SurfaceFamily) -> Result<Row> {
    use KodairaDimension::*;
    let r = |c1_sq, c2, p_g, kod, spin| Row { c1_sq, c2, p_g, kod, spin };
    Ok(match family {
        SurfaceFamily::ProjectivePlane => r(9, 3, 0, NegInfinity, false),
        SurfaceFamily::RationalElliptic => r(0, 12, 0, NegInfinity, false),
        SurfaceFamily::Dolgachev { .. } => r(0, 12, 0, One, false),
        SurfaceFamily::K3Elliptic => r(0, 24, 1, Zero, true),
        // K = (p-1)F1 + (q-1)F2 = (2pq - p - q) f with f primitive, so K is
        // even exactly when p and q are both odd.
        SurfaceFamily::HomotopyK3 { p, q } => r(0, 24, 1, One, p % 2 == 1 && q % 2 == 1),
        SurfaceFamily::Barlow => r(1, 11, 0, Two, false),
        SurfaceFamily::Catanese => r(1, 23, 1, Two, false),
        SurfaceFamily::EllipticMn { n } => {
            let n = num::to_i64(n)?;
            r(0, num::mul(12, n)?, n - 1, One, elliptic_mn_spin(n)?)
        }
        SurfaceFamily::Horikawa => r(16, 116, 10, Two, false),
        SurfaceFamily::Sextic => r(24, 108, 10, Two, true),
    })
}

/// `K = (n-2) F` and a hyperplane section of the cubic factor meets each
/// fiber in 3 points, so `c1 . H = 3(2 - n)`; `M_n` is spin iff that
/// pairing is even.
fn elliptic_mn_spin(n: i64) -> Result<bool> {
    let pairing = num::mul(3, num::sub(2, n)?)?;
    Ok(pairing % 2 == 0)
}

/// Returns the catalog row for `family`, unblown.
pub fn instantiate(family: SurfaceFamily) -> Result<SurfaceModel> {
    family.validate()?;
    let row = row(family)?;
    let chern = ChernPair::new(row.c1_sq, row.c2);
    let hodge = HodgeSummary::new(row.p_g, 0, chern)?;
    let elliptic = match family {
        SurfaceFamily::RationalElliptic | SurfaceFamily::K3Elliptic | SurfaceFamily::EllipticMn { .. } => {
            Some(EllipticFibration { multiple_fibers: None })
        }
        SurfaceFamily::Dolgachev { p, q } | SurfaceFamily::HomotopyK3 { p, q } => {
            Some(EllipticFibration { multiple_fibers: Some((p, q)) })
        }
        _ => None,
    };
    let c1_coords = match family {
        SurfaceFamily::ProjectivePlane => Some(vec![3]),
        _ => None,
    };
    let spin = row.spin && row.c1_sq % 2 == 0;
    Ok(SurfaceModel { family, blowups: 0, chern, hodge, spin, kod: row.kod, elliptic, c1_coords })
}

/// Whether every plurigenus of the family is known.
pub fn has_full_rule(family: SurfaceFamily) -> bool {
    !matches!(family, SurfaceFamily::Barlow | SurfaceFamily::Catanese)
}

/// `P_m`, the dimension of sections of `mK`. Blow-ups do not change it.
pub fn plurigenus(s: &SurfaceModel, m: u64) -> Result<u64> {
    family_plurigenus(s.family, m)
}

fn family_plurigenus(family: SurfaceFamily, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::BadParameter("plurigenus index must be at least 1".into()));
    }
    let mi = num::to_i64(m)?;
    let value: i64 = match family {
        SurfaceFamily::ProjectivePlane | SurfaceFamily::RationalElliptic => 0,
        SurfaceFamily::K3Elliptic => 1,
        SurfaceFamily::Dolgachev { p, q } => elliptic_multiple_fiber_plurigenus(1, p, q, mi)?,
        SurfaceFamily::HomotopyK3 { p, q } => elliptic_multiple_fiber_plurigenus(2, p, q, mi)?,
        SurfaceFamily::Barlow | SurfaceFamily::Catanese if m >= 2 => {
            return Err(Error::RuleUnavailable { family, m });
        }
        SurfaceFamily::Barlow => 0,
        SurfaceFamily::Catanese => 1,
        SurfaceFamily::EllipticMn { n } => {
            // h0(P1, O(m(n-2)))
            let n = num::to_i64(n)?;
            num::add(num::mul(mi, n - 2)?, 1)?
        }
        SurfaceFamily::Horikawa => {
            if mi <= 2 {
                (mi + 1) * (4 * mi + 1)
            } else {
                let sq = num::mul(mi, mi)?;
                num::add(num::sub(num::mul(8, sq)?, num::mul(8, mi)?)?, 11)?
            }
        }
        SurfaceFamily::Sextic => {
            if mi <= 2 {
                let n = 2 * mi + 3;
                n * (n - 1) * (n - 2) / 6
            } else {
                let sq = num::mul(mi, mi)?;
                num::add(num::sub(num::mul(12, sq)?, num::mul(12, mi)?)?, 11)?
            }
        }
    };
    num::to_u64(value)
}

/// Plurigenera of an elliptic surface over the projective line with
/// `chi(O) = chi` and two multiple fibers of multiplicities `p`, `q`.
///
/// The canonical bundle formula gives
/// `mK = m(chi - 2) F + m(p-1) F1 + m(q-1) F2`; using `p F1 = q F2 = F`
/// the sections are those of `O(d)` on the base with
/// `d = m(chi - 2) + floor(m(p-1)/p) + floor(m(q-1)/q)`.
fn elliptic_multiple_fiber_plurigenus(chi: i64, p: u64, q: u64, m: i64) -> Result<i64> {
    let p = num::to_i64(p)?;
    let q = num::to_i64(q)?;
    let from_p = num::mul(m, p - 1)?.div_euclid(p);
    let from_q = num::mul(m, q - 1)?.div_euclid(q);
    let degree = num::add(num::add(num::mul(m, chi - 2)?, from_p)?, from_q)?;
    Ok(if degree < 0 { 0 } else { degree + 1 })
}

/// Growth class of a plurigenera sequence `P_1, .., P_n`.
///
/// Compares the maximum over the whole range with the maximum over its
/// first half: a sequence growing like `m^d` roughly multiplies that
/// maximum by `2^d`. The exponent is the `d` with
/// `2^(d - 1/2) <= ratio < 2^(d + 1/2)`, evaluated on squares in integers.
pub fn growth_class(values: &[u64]) -> Result<KodairaDimension> {
    let total = values.iter().copied().max().unwrap_or(0);
    if total == 0 {
        return Ok(KodairaDimension::NegInfinity);
    }
    let half = values[..values.len() / 2].iter().copied().max().unwrap_or(0).max(1);
    let a2 = u128::from(half) * u128::from(half);
    let b2 = u128::from(total) * u128::from(total);
    for d in 0..=3u32 {
        if b2 < a2 << (2 * d + 1) {
            return KodairaDimension::from_value(i64::from(d));
        }
    }
    Err(Error::KodOutOfRange(4))
}

/// The stored Kodaira dimension, cross-checked against plurigenera growth
/// on `1..=KOD_CHECK_BOUND` when the full rule is known.
pub fn kodaira_dimension(s: &SurfaceModel) -> Result<KodairaDimension> {
    kodaira_dimension_with_bound(s, KOD_CHECK_BOUND)
}

pub fn kodaira_dimension_with_bound(s: &SurfaceModel, bound: u64) -> Result<KodairaDimension> {
    if !has_full_rule(s.family) {
        return Ok(s.kod);
    }
    let values = (1..=bound).map(|m| plurigenus(s, m)).collect::<Result<Vec<_>>>()?;
    let observed = growth_class(&values)?;
    if observed != s.kod {
        return Err(Error::InconsistentKod { family: s.family, stored: s.kod, observed });
    }
    Ok(s.kod)
}

/// Descriptive row of the family table, with parametric entries written
/// symbolically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyInfo {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub constraints: &'static str,
    pub c1_sq: &'static str,
    pub c2: &'static str,
    pub p_g: &'static str,
    pub kod: KodairaDimension,
    pub spin: &'static str,
    pub plurigenera: &'static str,
    /// A representative instance; its invariants match the symbolic row.
    pub sample: SurfaceFamily,
}

pub fn family_table() -> Vec<FamilyInfo> {
    use KodairaDimension::*;
    let info = |name, params, constraints, c1_sq, c2, p_g, kod, spin, plurigenera, sample| FamilyInfo {
        name,
        params,
        constraints,
        c1_sq,
        c2,
        p_g,
        kod,
        spin,
        plurigenera,
        sample,
    };
    vec![
        info("cp2", &[], "", "9", "3", "0", NegInfinity, "no", "0", SurfaceFamily::ProjectivePlane),
        info("rational_elliptic", &[], "", "0", "12", "0", NegInfinity, "no", "0", SurfaceFamily::RationalElliptic),
        info(
            "dolgachev",
            &["p", "q"],
            "2 <= p < q, gcd(p,q) = 1",
            "0",
            "12",
            "0",
            One,
            "no",
            "max(0, 1 - m + floor(m(p-1)/p) + floor(m(q-1)/q))",
            SurfaceFamily::Dolgachev { p: 2, q: 3 },
        ),
        info("k3", &[], "", "0", "24", "1", Zero, "yes", "1", SurfaceFamily::K3Elliptic),
        info(
            "homotopy_k3",
            &["p", "q"],
            "2 <= p < q, gcd(p,q) = 1",
            "0",
            "24",
            "1",
            One,
            "iff p and q odd",
            "1 + floor(m(p-1)/p) + floor(m(q-1)/q)",
            SurfaceFamily::HomotopyK3 { p: 3, q: 5 },
        ),
        info("barlow", &[], "", "1", "11", "0", Two, "no", "P1 = 0; m >= 2 unavailable", SurfaceFamily::Barlow),
        info("catanese", &[], "", "1", "23", "1", Two, "no", "P1 = 1; m >= 2 unavailable", SurfaceFamily::Catanese),
        info(
            "elliptic_mn",
            &["n"],
            "n >= 3",
            "0",
            "12n",
            "n-1",
            One,
            "iff n even",
            "m(n-2) + 1",
            SurfaceFamily::EllipticMn { n: 11 },
        ),
        info(
            "horikawa",
            &[],
            "",
            "16",
            "116",
            "10",
            Two,
            "no",
            "(m+1)(4m+1) for m <= 2; 8m^2 - 8m + 11 for m >= 3",
            SurfaceFamily::Horikawa,
        ),
        info(
            "sextic",
            &[],
            "",
            "24",
            "108",
            "10",
            Two,
            "yes",
            "C(2m+3,3) for m <= 2; 12m^2 - 12m + 11 for m >= 3",
            SurfaceFamily::Sextic,
        ),
    ]
}

/// Representative instances of every family, unblown.
pub fn sample_surfaces() -> Result<Vec<SurfaceModel>> {
    family_table().iter().map(|f| instantiate(f.sample)).collect()
}

/// Noether's formula must agree with the stored Hodge data.
pub fn check_noether(s: &SurfaceModel) -> Result<()> {
    let chi = chi_from_noether(s.chern)?;
    if chi != s.hodge.chi_o() {
        return Err(Error::NoetherMismatch { from_chern: chi, from_hodge: s.hodge.chi_o() });
    }
    Ok(())
}
