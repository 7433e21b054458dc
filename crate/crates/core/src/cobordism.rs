//! Diffeomorphism verdicts from intersection-form data.
//!
//! The chain of reasoning is one-directional: matching forms give an
//! h-cobordism, and a vanishing Whitehead group turns the h-cobordism of the
//! products into a product cobordism. When the forms differ nothing is
//! concluded.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::catalog::SurfaceModel;
use crate::constructions::blow_up;
use crate::error::{Error, Result};
use crate::invariants::{FundamentalGroup, IntersectionForm};
use crate::num::gcd;

/// Stable identifiers of the results a verdict relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremTag {
    /// Simply connected 4-manifolds are h-cobordant iff their forms agree.
    HCobordismCriterion,
    /// Indefinite unimodular forms are classified by rank, signature, parity.
    FormClassification,
    /// An h-cobordism of dimension >= 6 with vanishing torsion is trivial.
    SCobordism,
    /// `Wh(pi_1) = 0` for non-positively curved closed manifolds.
    NonPositiveCurvatureVanishing,
    /// `Wh(pi_1(Sigma)) = 0` for compact Riemann surfaces.
    SurfaceGroupVanishing,
    /// h-cobordant simply connected surfaces times a positive-genus curve
    /// are diffeomorphic.
    ProductDiffeomorphism,
    /// The simply connected h-cobordism theorem.
    Smale,
}

impl TheoremTag {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremTag::HCobordismCriterion => "Thm2.1",
            TheoremTag::FormClassification => "Thm2.2",
            TheoremTag::SCobordism => "Thm2.3",
            TheoremTag::NonPositiveCurvatureVanishing => "Thm2.4",
            TheoremTag::SurfaceGroupVanishing => "Cor2.5",
            TheoremTag::ProductDiffeomorphism => "Cor2.6",
            TheoremTag::Smale => "Smale",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            TheoremTag::HCobordismCriterion,
            TheoremTag::FormClassification,
            TheoremTag::SCobordism,
            TheoremTag::NonPositiveCurvatureVanishing,
            TheoremTag::SurfaceGroupVanishing,
            TheoremTag::ProductDiffeomorphism,
            TheoremTag::Smale,
        ]
        .into_iter()
        .find(|t| t.as_str() == s)
    }

    fn is_whitehead_vanishing(self) -> bool {
        matches!(self, TheoremTag::NonPositiveCurvatureVanishing | TheoremTag::SurfaceGroupVanishing)
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictOutcome {
    DiffeomorphicViaSCobordism,
    DiffeomorphicViaSmale,
    NoConclusion,
}

impl VerdictOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictOutcome::DiffeomorphicViaSCobordism => "DiffeomorphicViaSCobordism",
            VerdictOutcome::DiffeomorphicViaSmale => "DiffeomorphicViaSmale",
            VerdictOutcome::NoConclusion => "NoConclusion",
        }
    }
}

impl fmt::Display for VerdictOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Verdict {
    pub outcome: VerdictOutcome,
    pub chain: Vec<TheoremTag>,
}

impl Verdict {
    pub fn is_diffeomorphic(&self) -> bool {
        self.outcome != VerdictOutcome::NoConclusion
    }

    /// An s-cobordism verdict must cite both the h-cobordism criterion and a
    /// Whitehead vanishing result; a Smale verdict must cite the criterion.
    pub fn is_sound(&self) -> bool {
        let has_h = self.chain.contains(&TheoremTag::HCobordismCriterion);
        match self.outcome {
            VerdictOutcome::DiffeomorphicViaSCobordism => {
                has_h && self.chain.iter().any(|t| t.is_whitehead_vanishing())
            }
            VerdictOutcome::DiffeomorphicViaSmale => has_h,
            VerdictOutcome::NoConclusion => true,
        }
    }
}

/// Indefinite forms are isomorphic iff rank, signature and parity agree.
pub fn forms_isomorphic(a: &IntersectionForm, b: &IntersectionForm) -> Result<bool> {
    if !a.is_indefinite() || !b.is_indefinite() {
        return Err(Error::DefiniteFormUnsupported);
    }
    Ok(a.rank() == b.rank() && a.signature() == b.signature() && a.parity() == b.parity())
}

pub fn h_cobordant(a: &SurfaceModel, b: &SurfaceModel) -> Result<bool> {
    forms_isomorphic(&a.intersection_form()?, &b.intersection_form()?)
}

/// Blows `m` up at `k + d` points and `m2` at `k`, where `d` is the
/// difference of their `c1^2`. With equal geometric genus the results are
/// h-cobordant.
pub fn balance_blowups(m: &SurfaceModel, m2: &SurfaceModel, k: u64) -> Result<(SurfaceModel, SurfaceModel)> {
    if m.hodge.p_g() != m2.hodge.p_g() {
        return Err(Error::GeometricGenusMismatch { left: m.hodge.p_g(), right: m2.hodge.p_g() });
    }
    let defect = m.chern.c1_sq.checked_sub(m2.chern.c1_sq).ok_or(Error::Overflow)?;
    if defect < 0 {
        return Err(Error::NegativeDefect(defect));
    }
    if k < 1 {
        return Err(Error::BadK(k));
    }
    let extra = (defect as u64).checked_add(k).ok_or(Error::Overflow)?;
    let left = blow_up(m, extra)?;
    let right = blow_up(m2, k)?;
    if !h_cobordant(&left, &right)? {
        return Err(Error::Postcondition("balanced blow-ups are not h-cobordant"));
    }
    Ok((left, right))
}

/// Whitehead groups of the fundamental groups in scope all vanish: the
/// trivial group by the classical theorem, surface groups because every
/// positive-genus surface carries a non-positively curved metric.
pub fn wh_vanishes(pi: FundamentalGroup) -> bool {
    match pi {
        FundamentalGroup::Trivial => true,
        FundamentalGroup::SurfaceGroup { .. } => true,
    }
}

/// Verdict on `M x Sigma_g` versus `M2 x Sigma_g`.
pub fn diffeomorphic_product(m: &SurfaceModel, m2: &SurfaceModel, genus: u64) -> Result<Verdict> {
    if !h_cobordant(m, m2)? {
        return Ok(Verdict { outcome: VerdictOutcome::NoConclusion, chain: Vec::new() });
    }
    let pi1 = FundamentalGroup::of_curve(genus);
    if !wh_vanishes(pi1) {
        return Ok(Verdict { outcome: VerdictOutcome::NoConclusion, chain: vec![TheoremTag::HCobordismCriterion] });
    }
    Ok(match pi1 {
        FundamentalGroup::Trivial => Verdict {
            outcome: VerdictOutcome::DiffeomorphicViaSmale,
            chain: vec![TheoremTag::HCobordismCriterion, TheoremTag::Smale],
        },
        FundamentalGroup::SurfaceGroup { .. } => Verdict {
            outcome: VerdictOutcome::DiffeomorphicViaSCobordism,
            chain: vec![TheoremTag::HCobordismCriterion, TheoremTag::SurfaceGroupVanishing, TheoremTag::SCobordism],
        },
    })
}

/// Whether the entries of `v` have greatest common divisor 1.
pub fn c1_primitive(v: &[i64]) -> Result<bool> {
    let g = v.iter().fold(0u64, |acc, &x| gcd(acc, x.unsigned_abs()));
    if g == 0 {
        return Err(Error::ZeroVector);
    }
    Ok(g == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{instantiate, SurfaceFamily};
    use crate::invariants::Parity;

    fn surface(f: SurfaceFamily) -> SurfaceModel {
        instantiate(f).unwrap()
    }

    fn plane8() -> SurfaceModel {
        blow_up(&surface(SurfaceFamily::ProjectivePlane), 8).unwrap()
    }

    #[test]
    fn forms_examples() {
        let barlow = surface(SurfaceFamily::Barlow).intersection_form().unwrap();
        assert_eq!(forms_isomorphic(&barlow, &plane8().intersection_form().unwrap()), Ok(true));

        let k3 = surface(SurfaceFamily::K3Elliptic).intersection_form().unwrap();
        let cat = blow_up(&surface(SurfaceFamily::Catanese), 1).unwrap().intersection_form().unwrap();
        assert_eq!((k3.rank(), k3.signature()), (cat.rank(), cat.signature()));
        assert_eq!(forms_isomorphic(&k3, &cat), Ok(false));

        let cp2 = surface(SurfaceFamily::ProjectivePlane).intersection_form().unwrap();
        assert_eq!(forms_isomorphic(&cp2, &k3), Err(Error::DefiniteFormUnsupported));
        assert_eq!(forms_isomorphic(&k3, &cp2), Err(Error::DefiniteFormUnsupported));
        let neg = IntersectionForm::new(0, 9, Parity::Odd).unwrap();
        assert_eq!(forms_isomorphic(&neg, &neg), Err(Error::DefiniteFormUnsupported));
    }

    #[test]
    fn h_cobordant_examples() {
        assert_eq!(h_cobordant(&surface(SurfaceFamily::Barlow), &plane8()), Ok(true));
        assert_eq!(
            h_cobordant(&surface(SurfaceFamily::K3Elliptic), &surface(SurfaceFamily::HomotopyK3 { p: 3, q: 5 })),
            Ok(true)
        );
        // (2,3) is not spin, so it is odd and differs from K3 until both are blown up
        let hk = surface(SurfaceFamily::HomotopyK3 { p: 2, q: 3 });
        let k3 = surface(SurfaceFamily::K3Elliptic);
        assert_eq!(h_cobordant(&k3, &hk), Ok(false));
        assert_eq!(h_cobordant(&blow_up(&k3, 1).unwrap(), &blow_up(&hk, 1).unwrap()), Ok(true));
        let cat1 = blow_up(&surface(SurfaceFamily::Catanese), 1).unwrap();
        assert_eq!(h_cobordant(&k3, &cat1), Ok(false));
    }

    #[test]
    fn balance_examples() {
        let (a, b) =
            balance_blowups(&surface(SurfaceFamily::Catanese), &surface(SurfaceFamily::K3Elliptic), 1).unwrap();
        assert_eq!((a.blowups, b.blowups), (2, 1));
        assert_eq!(h_cobordant(&a, &b), Ok(true));

        let (a, b) =
            balance_blowups(&surface(SurfaceFamily::Sextic), &surface(SurfaceFamily::EllipticMn { n: 11 }), 1).unwrap();
        assert_eq!((a.blowups, b.blowups), (25, 1));
        assert_eq!(h_cobordant(&a, &b), Ok(true));

        for k in 1..5 {
            assert_eq!(
                balance_blowups(&surface(SurfaceFamily::Barlow), &surface(SurfaceFamily::K3Elliptic), k),
                Err(Error::GeometricGenusMismatch { left: 0, right: 1 })
            );
        }
    }

    #[test]
    fn balance_errors() {
        let k3 = surface(SurfaceFamily::K3Elliptic);
        let cat = surface(SurfaceFamily::Catanese);
        assert_eq!(balance_blowups(&k3, &cat, 1), Err(Error::NegativeDefect(-1)));
        assert_eq!(balance_blowups(&cat, &k3, 0), Err(Error::BadK(0)));
    }

    #[test]
    fn whitehead() {
        assert!(wh_vanishes(FundamentalGroup::Trivial));
        assert!(wh_vanishes(FundamentalGroup::SurfaceGroup { genus: 1 }));
        assert!(wh_vanishes(FundamentalGroup::SurfaceGroup { genus: 5 }));
    }

    #[test]
    fn product_verdicts() {
        let barlow = surface(SurfaceFamily::Barlow);
        let v = diffeomorphic_product(&barlow, &plane8(), 1).unwrap();
        assert_eq!(v.outcome, VerdictOutcome::DiffeomorphicViaSCobordism);
        let tags: Vec<_> = v.chain.iter().map(|t| t.as_str()).collect();
        assert_eq!(tags, ["Thm2.1", "Cor2.5", "Thm2.3"]);
        assert!(v.is_sound());

        let v = diffeomorphic_product(&barlow, &plane8(), 0).unwrap();
        assert_eq!(v.outcome, VerdictOutcome::DiffeomorphicViaSmale);
        assert!(v.is_sound());

        let cat1 = blow_up(&surface(SurfaceFamily::Catanese), 1).unwrap();
        let v = diffeomorphic_product(&surface(SurfaceFamily::K3Elliptic), &cat1, 3).unwrap();
        assert_eq!(v.outcome, VerdictOutcome::NoConclusion);
        assert!(v.chain.is_empty());
    }

    #[test]
    fn soundness_rejects_missing_whitehead_tag() {
        let v = Verdict {
            outcome: VerdictOutcome::DiffeomorphicViaSCobordism,
            chain: vec![TheoremTag::HCobordismCriterion, TheoremTag::SCobordism],
        };
        assert!(!v.is_sound());
    }

    #[test]
    fn tags_round_trip() {
        for s in ["Thm2.1", "Thm2.2", "Thm2.3", "Thm2.4", "Cor2.5", "Cor2.6", "Smale"] {
            assert_eq!(TheoremTag::parse(s).unwrap().as_str(), s);
        }
        assert_eq!(TheoremTag::parse("Thm9.9"), None);
    }

    #[test]
    fn primitivity() {
        assert_eq!(c1_primitive(&[3, -1, -1, -1, -1, -1, -1, -1, -1]), Ok(true));
        assert_eq!(c1_primitive(&[4, 2]), Ok(false));
        assert_eq!(c1_primitive(&[0, 0]), Err(Error::ZeroVector));
        assert_eq!(c1_primitive(&[]), Err(Error::ZeroVector));
        assert_eq!(c1_primitive(&[0, -6, 9]), Ok(false));
        assert_eq!(c1_primitive(&[i64::MIN, 3]), Ok(true));
    }
}
