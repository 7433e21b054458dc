//! Blow-ups, logarithmic transforms and products with a curve.

use core::iter;

use crate::catalog::{self, check_multiplicities, plurigenus, SurfaceFamily, SurfaceModel};
use crate::error::{Error, Result};
use crate::invariants::{ChernPair, FundamentalGroup, KodairaDimension};
use crate::num;

/// A smooth compact curve of genus `genus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Curve {
    pub genus: u64,
}

impl Curve {
    pub const fn new(genus: u64) -> Self {
        Curve { genus }
    }
}

/// `(c1^3, c1 c2, c3)` of a threefold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChernTriple {
    pub c1_cubed: i64,
    pub c1c2: i64,
    pub c3: i64,
}

impl ChernTriple {
    /// Chern numbers of `S x C` for a surface with `(c1^2, c2) = (a, b)` and
    /// a curve of genus `g`: `((6-6g)a, (2-2g)(a+b), (2-2g)b)`.
    pub fn of_product(chern: ChernPair, genus: u64) -> Result<Self> {
        let g = num::to_i64(genus)?;
        let euler = num::sub(2, num::mul(2, g)?)?;
        let a = chern.c1_sq;
        let b = chern.c2;
        Ok(ChernTriple {
            c1_cubed: num::mul(num::mul(3, euler)?, a)?,
            c1c2: num::mul(euler, num::add(a, b)?)?,
            c3: num::mul(euler, b)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThreefoldModel {
    pub surface: SurfaceModel,
    pub curve: Curve,
    pub chern3: ChernTriple,
    pub kod: KodairaDimension,
    pub pi1: FundamentalGroup,
}

impl ThreefoldModel {
    pub fn plurigenus(&self, m: u64) -> Result<u64> {
        threefold_plurigenus(self, m)
    }
}

/// Past this many exceptional curves the explicit first Chern class vector
/// is dropped.
pub const MAX_TRACKED_BLOWUPS: u64 = 4096;

/// Blows `s` up at `k` distinct points: `c1^2 - k`, `c2 + k`; plurigenera
/// and Kodaira dimension unchanged, spin lost once `k >= 1`.
pub fn blow_up(s: &SurfaceModel, k: u64) -> Result<SurfaceModel> {
    let ki = num::to_i64(k)?;
    let chern = ChernPair::new(num::sub(s.chern.c1_sq, ki)?, num::add(s.chern.c2, ki)?);
    let blowups = s.blowups.checked_add(k).ok_or(Error::Overflow)?;
    let c1_coords = match &s.c1_coords {
        Some(_) if blowups > MAX_TRACKED_BLOWUPS => None,
        Some(coords) if k > 0 => {
            let extra = k as usize;
            Some(coords.iter().copied().chain(iter::repeat_n(-1, extra)).collect())
        }
        other => other.clone(),
    };
    Ok(SurfaceModel {
        family: s.family,
        blowups,
        chern,
        hodge: s.hodge,
        spin: s.spin && k == 0,
        kod: s.kod,
        elliptic: s.elliptic,
        c1_coords,
    })
}

/// Logarithmic transforms of multiplicities `p` and `q` on two smooth
/// fibers of the rational elliptic surface or of the elliptic K3.
pub fn log_transform(s: &SurfaceModel, p: u64, q: u64) -> Result<SurfaceModel> {
    let target = match s.family {
        SurfaceFamily::RationalElliptic => SurfaceFamily::Dolgachev { p, q },
        SurfaceFamily::K3Elliptic => SurfaceFamily::HomotopyK3 { p, q },
        f if s.elliptic.is_some() => return Err(Error::UnsupportedFamily(f)),
        f => return Err(Error::NotElliptic(f)),
    };
    if s.blowups > 0 {
        return Err(Error::AlreadyBlownUp(s.blowups));
    }
    check_multiplicities(p, q)?;
    let out = catalog::instantiate(target)?;
    debug_assert_eq!(out.chern, s.chern);
    debug_assert_eq!(out.hodge, s.hodge);
    Ok(out)
}

/// `h0(mK)` of a curve of genus `g`.
pub fn curve_plurigenus(c: Curve, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::BadParameter("plurigenus index must be at least 1".into()));
    }
    Ok(match c.genus {
        0 => 0,
        1 => 1,
        g if m == 1 => g,
        g => {
            let factor = m.checked_mul(2).and_then(|v| v.checked_sub(1)).ok_or(Error::Overflow)?;
            factor.checked_mul(g - 1).ok_or(Error::Overflow)?
        }
    })
}

pub fn curve_kod(c: Curve) -> KodairaDimension {
    match c.genus {
        0 => KodairaDimension::NegInfinity,
        1 => KodairaDimension::Zero,
        _ => KodairaDimension::One,
    }
}

pub fn product(s: &SurfaceModel, c: Curve) -> Result<ThreefoldModel> {
    Ok(ThreefoldModel {
        surface: s.clone(),
        curve: c,
        chern3: ChernTriple::of_product(s.chern, c.genus)?,
        kod: s.kod.checked_add(curve_kod(c))?,
        pi1: FundamentalGroup::of_curve(c.genus),
    })
}

/// Plurigenera are multiplicative on products.
pub fn threefold_plurigenus(x: &ThreefoldModel, m: u64) -> Result<u64> {
    let surface = plurigenus(&x.surface, m)?;
    let curve = curve_plurigenus(x.curve, m)?;
    surface.checked_mul(curve).ok_or(Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::instantiate;
    use KodairaDimension::*;

    fn surface(f: SurfaceFamily) -> SurfaceModel {
        instantiate(f).unwrap()
    }

    #[test]
    fn blow_up_examples() {
        let s = blow_up(&surface(SurfaceFamily::ProjectivePlane), 8).unwrap();
        assert_eq!((s.chern.c1_sq, s.chern.c2, s.hodge.p_g(), s.kod), (1, 11, 0, NegInfinity));
        assert_eq!(s.c1_coords, Some(alloc::vec![3, -1, -1, -1, -1, -1, -1, -1, -1]));

        let k3 = surface(SurfaceFamily::K3Elliptic);
        assert_eq!(blow_up(&k3, 0).unwrap(), k3);
        let b = blow_up(&k3, 1).unwrap();
        assert_eq!((b.chern.c1_sq, b.chern.c2, b.spin), (-1, 25, false));
        assert_eq!(b.c1_coords, None);
    }

    #[test]
    fn blow_up_overflow_is_detected() {
        let s = surface(SurfaceFamily::ProjectivePlane);
        assert_eq!(blow_up(&s, u64::MAX), Err(Error::Overflow));
        let k3 = surface(SurfaceFamily::K3Elliptic);
        assert_eq!(blow_up(&k3, i64::MAX as u64), Err(Error::Overflow));
        let huge = blow_up(&s, 1 << 40).unwrap();
        assert_eq!(huge.c1_coords, None);
        assert_eq!(huge.chern.c2, 3 + (1 << 40));
    }

    #[test]
    fn log_transform_examples() {
        let d = log_transform(&surface(SurfaceFamily::RationalElliptic), 2, 3).unwrap();
        assert_eq!(d.family, SurfaceFamily::Dolgachev { p: 2, q: 3 });
        let h = log_transform(&surface(SurfaceFamily::K3Elliptic), 2, 3).unwrap();
        assert_eq!(h.family, SurfaceFamily::HomotopyK3 { p: 2, q: 3 });
        assert_eq!(h.kod, One);
        assert_eq!(h.chern, ChernPair::new(0, 24));
        assert_eq!(
            log_transform(&surface(SurfaceFamily::Barlow), 2, 3),
            Err(Error::NotElliptic(SurfaceFamily::Barlow))
        );
    }

    #[test]
    fn log_transform_errors() {
        let re = surface(SurfaceFamily::RationalElliptic);
        assert_eq!(log_transform(&re, 2, 4), Err(Error::NotCoprime { p: 2, q: 4 }));
        assert_eq!(log_transform(&blow_up(&re, 1).unwrap(), 2, 3), Err(Error::AlreadyBlownUp(1)));
        let d = surface(SurfaceFamily::Dolgachev { p: 2, q: 3 });
        assert!(matches!(log_transform(&d, 2, 5), Err(Error::UnsupportedFamily(_))));
        assert!(matches!(log_transform(&re, 1, 2), Err(Error::BadParameter(_))));
    }

    #[test]
    fn curve_examples() {
        assert_eq!(curve_plurigenus(Curve::new(0), 3), Ok(0));
        assert_eq!(curve_plurigenus(Curve::new(1), 5), Ok(1));
        assert_eq!(curve_plurigenus(Curve::new(2), 2), Ok(3));
        assert_eq!(curve_plurigenus(Curve::new(4), 1), Ok(4));
        assert_eq!(curve_kod(Curve::new(0)), NegInfinity);
        assert_eq!(curve_kod(Curve::new(1)), Zero);
        assert_eq!(curve_kod(Curve::new(7)), One);
    }

    #[test]
    fn product_examples() {
        let x = product(&surface(SurfaceFamily::Barlow), Curve::new(2)).unwrap();
        assert_eq!(x.chern3, ChernTriple { c1_cubed: -6, c1c2: -24, c3: -22 });
        assert_eq!(x.kod, Three);
        assert_eq!(x.pi1, FundamentalGroup::SurfaceGroup { genus: 2 });

        let y = product(&surface(SurfaceFamily::Horikawa), Curve::new(1)).unwrap();
        assert_eq!(y.chern3, ChernTriple { c1_cubed: 0, c1c2: 0, c3: 0 });

        let z = product(&surface(SurfaceFamily::Dolgachev { p: 2, q: 3 }), Curve::new(1)).unwrap();
        assert_eq!(z.kod, One);
        assert_eq!(z.pi1, FundamentalGroup::SurfaceGroup { genus: 1 });

        let w = product(&surface(SurfaceFamily::Barlow), Curve::new(0)).unwrap();
        assert_eq!(w.kod, NegInfinity);
        assert_eq!(w.pi1, FundamentalGroup::Trivial);
    }

    #[test]
    fn threefold_plurigenus_examples() {
        let x = product(&surface(SurfaceFamily::Dolgachev { p: 2, q: 3 }), Curve::new(1)).unwrap();
        assert_eq!(threefold_plurigenus(&x, 6), Ok(2));
        let h = product(&surface(SurfaceFamily::Horikawa), Curve::new(1)).unwrap();
        assert_eq!(threefold_plurigenus(&h, 2), Ok(27));
        let s = product(&surface(SurfaceFamily::Sextic), Curve::new(2)).unwrap();
        assert_eq!(threefold_plurigenus(&s, 2), Ok(105));
        let b = product(&surface(SurfaceFamily::Barlow), Curve::new(1)).unwrap();
        assert!(matches!(threefold_plurigenus(&b, 2), Err(Error::RuleUnavailable { .. })));
    }
}
