//! JSON encodings. Kodaira dimensions are strings (`"-inf"`, `"0"`, ..);
//! every other number is an exact integer.

use serde_json::{json, Value};

use kodaira_core::catalog::FamilyInfo;
use kodaira_core::verifier::{Anomaly, DeformationEvidence, ReportRow, VerificationReport};
use kodaira_core::{ChernTriple, IntersectionForm, KodairaDimension, SurfaceModel, ThreefoldModel, Verdict};

use crate::SCHEMA_VERSION;

/// Adds the schema field to a top-level object.
pub fn document(mut body: Value) -> Value {
    if let Value::Object(map) = &mut body {
        map.insert("schema".into(), json!(SCHEMA_VERSION));
    }
    body
}

pub fn to_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn kod(k: KodairaDimension) -> Value {
    json!(k.to_string())
}

pub fn kod_pair(p: (KodairaDimension, KodairaDimension)) -> Value {
    json!([kod(p.0), kod(p.1)])
}

pub fn form(f: &IntersectionForm) -> Value {
    json!({
        "rank": f.rank(),
        "b_plus": f.b_plus(),
        "b_minus": f.b_minus(),
        "signature": f.signature(),
        "parity": f.parity().to_string(),
        "indefinite": f.is_indefinite(),
    })
}

pub fn surface(s: &SurfaceModel, form_value: Value) -> Value {
    json!({
        "family": s.family.to_string(),
        "blowups": s.blowups,
        "c1_sq": s.chern.c1_sq,
        "c2": s.chern.c2,
        "chi": s.hodge.chi_o(),
        "p_g": s.hodge.p_g(),
        "q": s.hodge.q(),
        "kod": kod(s.kod),
        "spin": s.spin,
        "intersection_form": form_value,
        "multiple_fibers": s.elliptic.and_then(|e| e.multiple_fibers).map(|(p, q)| json!([p, q])),
        "elliptic": s.elliptic.is_some(),
    })
}

pub fn chern3(c: &ChernTriple) -> Value {
    json!({ "c1_cubed": c.c1_cubed, "c1c2": c.c1c2, "c3": c.c3 })
}

pub fn threefold(x: &ThreefoldModel) -> Value {
    json!({
        "surface_family": x.surface.family.to_string(),
        "surface_blowups": x.surface.blowups,
        "curve_genus": x.curve.genus,
        "chern": chern3(&x.chern3),
        "kod": kod(x.kod),
        "pi1": x.pi1.to_string(),
    })
}

pub fn verdict(v: &Verdict) -> Value {
    json!({
        "outcome": v.outcome.as_str(),
        "chain": v.chain.iter().map(|t| t.as_str()).collect::<Vec<_>>(),
    })
}

pub fn evidence(e: &DeformationEvidence) -> Value {
    match e {
        DeformationEvidence::PlurigenusDiffersAt { m, left, right } => {
            json!({ "kind": "PlurigenusDiffersAt", "m": m, "left": left, "right": right })
        }
        DeformationEvidence::ExternalTheorem(name) => json!({ "kind": "ExternalTheorem", "theorem": name }),
        DeformationEvidence::IndistinguishableWithin(bound) => {
            json!({ "kind": "IndistinguishableWithin", "bound": bound })
        }
        DeformationEvidence::None => json!({ "kind": "None" }),
    }
}

pub fn row(r: &ReportRow) -> Value {
    json!({
        "k": r.k,
        "left": r.left.to_string(),
        "right": r.right.to_string(),
        "verdict": r.verdict.as_ref().map(verdict),
        "chern_equal": r.chern_equal,
        "left_chern": r.left_chern.as_ref().map(chern3),
        "right_chern": r.right_chern.as_ref().map(chern3),
        "kod": r.kod_pair.map(kod_pair),
        "expected_kod": r.expected_kod_pair.map(kod_pair),
        "deformation_evidence": evidence(&r.deformation_evidence),
        "anomalies": r.anomalies.iter().map(|a| a.as_str()).collect::<Vec<_>>(),
        "failures": r.failures.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "passed": r.passed(),
    })
}

pub fn report(r: &VerificationReport) -> Value {
    json!({
        "theorem": r.theorem.to_string(),
        "example": r.example.as_str(),
        "genus": r.genus,
        "k_min": r.k_min,
        "k_max": r.k_max,
        "m_bound": r.m_bound,
        "note": r.scope_note(),
        "passed": r.passed(),
        "rows": r.rows.iter().map(row).collect::<Vec<_>>(),
    })
}

pub fn anomaly(a: &Anomaly) -> Value {
    let detail = match a {
        Anomaly::KodPairHeader { stated, computed, .. } => json!({
            "stated": stated.iter().map(|p| kod_pair(*p)).collect::<Vec<_>>(),
            "computed": computed.iter().map(|p| kod_pair(*p)).collect::<Vec<_>>(),
        }),
        Anomaly::GenusSwap { stated, computed, .. } => json!({
            "stated": stated.iter().map(|k| kod(*k)).collect::<Vec<_>>(),
            "computed": computed.iter().map(|k| kod(*k)).collect::<Vec<_>>(),
        }),
        Anomaly::BalancingOffByOne { left_b2, right_b2, h_cobordant, .. } => json!({
            "left_b2": left_b2,
            "right_b2": right_b2,
            "rank_mismatch": left_b2 - right_b2,
            "h_cobordant": h_cobordant,
        }),
    };
    json!({
        "id": a.kind().as_str(),
        "example": a.example().as_str(),
        "description": a.description(),
        "values": detail,
    })
}

pub fn family(f: &FamilyInfo) -> Value {
    json!({
        "name": f.name,
        "params": f.params,
        "constraints": f.constraints,
        "c1_sq": f.c1_sq,
        "c2": f.c2,
        "p_g": f.p_g,
        "kod": kod(f.kod),
        "spin": f.spin,
        "plurigenera": f.plurigenera,
        "sample": f.sample.to_string(),
    })
}
