//! Places where the published statement of an example and the computed
//! invariants disagree. The computed side always comes from the models.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{pair_spec, ExampleId};
use crate::catalog::{instantiate, SurfaceFamily};
use crate::cobordism::h_cobordant;
use crate::constructions::{blow_up, product, Curve};
use crate::error::Result;
use crate::invariants::{betti_data, KodairaDimension};

/// Row-level marker carried by verification rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnomalyKind {
    /// A2 header lists `(0, 2)`; the higher-genus pair is `(1, 2)`.
    A2Header,
    /// A3 prose swaps the Barlow side's dimension between genus 1 and
    /// higher genus.
    A3GenusSwap,
    /// A5 prose blows the elliptic side up at `k + 1` points, one too many
    /// for equal second Betti numbers.
    A5Balancing,
    /// `P_6` does not separate this Dolgachev pair from `(2, 3)`.
    DolgachevSixthPlurigenus,
}

impl AnomalyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AnomalyKind::A2Header => "A2-header",
            AnomalyKind::A3GenusSwap => "A3-genus-swap",
            AnomalyKind::A5Balancing => "A5-balancing",
            AnomalyKind::DolgachevSixthPlurigenus => "B3-sixth-plurigenus",
        }
    }
}

type KodPair = (KodairaDimension, KodairaDimension);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Anomaly {
    /// Stated and computed pairs for genus 1 and genus >= 2.
    KodPairHeader { example: ExampleId, stated: [KodPair; 2], computed: [KodPair; 2] },
    /// Right-hand dimension for genus 1 and genus >= 2.
    GenusSwap { example: ExampleId, stated: [KodairaDimension; 2], computed: [KodairaDimension; 2] },
    /// Second Betti numbers at `k = 0` with the stated blow-up counts.
    BalancingOffByOne { example: ExampleId, left_b2: i64, right_b2: i64, h_cobordant: bool },
}

impl Anomaly {
    pub fn kind(&self) -> AnomalyKind {
        match self {
            Anomaly::KodPairHeader { .. } => AnomalyKind::A2Header,
            Anomaly::GenusSwap { .. } => AnomalyKind::A3GenusSwap,
            Anomaly::BalancingOffByOne { .. } => AnomalyKind::A5Balancing,
        }
    }

    pub fn example(&self) -> ExampleId {
        match self {
            Anomaly::KodPairHeader { example, .. }
            | Anomaly::GenusSwap { example, .. }
            | Anomaly::BalancingOffByOne { example, .. } => *example,
        }
    }

    pub fn description(&self) -> String {
        let pair = |p: &KodPair| format!("({}, {})", p.0, p.1);
        match self {
            Anomaly::KodPairHeader { stated, computed, .. } => format!(
                "stated pairs {} and {}; computed {} for genus 1 and {} for genus >= 2",
                pair(&stated[0]),
                pair(&stated[1]),
                pair(&computed[0]),
                pair(&computed[1])
            ),
            Anomaly::GenusSwap { stated, computed, .. } => format!(
                "stated kod {} for genus 1 and {} for genus >= 2; computed {} and {}",
                stated[0], stated[1], computed[0], computed[1]
            ),
            Anomaly::BalancingOffByOne { left_b2, right_b2, h_cobordant, .. } => format!(
                "with k+1 blow-ups on the elliptic side b2 is {left_b2}+k against {right_b2}+k \
                 (off by {}); h-cobordant: {h_cobordant}",
                left_b2 - right_b2
            ),
        }
    }
}

fn kod_pair_with_genus(example: ExampleId, genus: u64) -> Result<KodPair> {
    let pair = pair_spec(example);
    let inst = pair.instance(pair.k_min)?;
    let x = product(&inst.left, Curve::new(genus))?;
    let y = product(&inst.right, Curve::new(genus))?;
    Ok((x.kod, y.kod))
}

/// Every example-level discrepancy, in example order.
pub fn anomaly_scan() -> Result<Vec<Anomaly>> {
    use KodairaDimension::*;
    let mut out = Vec::new();

    let computed = [kod_pair_with_genus(ExampleId::A2, 1)?, kod_pair_with_genus(ExampleId::A2, 2)?];
    let stated = [(Zero, One), (Zero, Two)];
    if computed != stated {
        out.push(Anomaly::KodPairHeader { example: ExampleId::A2, stated, computed });
    }

    let computed = [kod_pair_with_genus(ExampleId::A3, 1)?.1, kod_pair_with_genus(ExampleId::A3, 2)?.1];
    let stated = [Three, Two];
    if computed != stated {
        out.push(Anomaly::GenusSwap { example: ExampleId::A3, stated, computed });
    }

    let elliptic = blow_up(&instantiate(SurfaceFamily::EllipticMn { n: 11 })?, 1)?;
    let sextic = instantiate(SurfaceFamily::Sextic)?;
    let defect = sextic.chern.c1_sq - elliptic.chern.c1_sq - 1;
    let sextic = blow_up(&sextic, defect as u64)?;
    let left_b2 = betti_data(elliptic.hodge.p_g(), elliptic.chern.c2)?.b2;
    let right_b2 = betti_data(sextic.hodge.p_g(), sextic.chern.c2)?.b2;
    if left_b2 != right_b2 {
        out.push(Anomaly::BalancingOffByOne {
            example: ExampleId::A5,
            left_b2,
            right_b2,
            h_cobordant: h_cobordant(&elliptic, &sextic)?,
        });
    }
    Ok(out)
}
