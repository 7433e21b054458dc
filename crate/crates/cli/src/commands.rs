use serde_json::{json, Value};

use kodaira_core::catalog::{check_noether, family_table};
use kodaira_core::cobordism::{diffeomorphic_product, h_cobordant};
use kodaira_core::dsl::{evaluate, parse, pretty_print, ConstructionExpr, Model};
use kodaira_core::verifier::{
    anomaly_scan, verify_theorem_a, verify_theorem_b, DeformationEvidence, ExampleId, ReportRow, Theorem,
    VerificationReport,
};
use kodaira_core::{Error, IntersectionForm, KodairaDimension, SurfaceModel, ThreefoldModel, Verdict};

use crate::table::{key_values, Table};
use crate::{json, CliError, Output};

fn load(text: &str) -> Result<(ConstructionExpr, Model), CliError> {
    let expr = parse(text).map_err(|e| CliError::from_dsl(&e, text))?;
    let model = evaluate(&expr).map_err(|e| CliError::from_dsl(&e, text))?;
    if let Model::Surface(s) = &model {
        check_noether(s)?;
    }
    Ok((expr, model))
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

fn form_text(f: &IntersectionForm) -> String {
    format!(
        "rank {}, signature {}, {}, {} (b+ {}, b- {})",
        f.rank(),
        f.signature(),
        f.parity(),
        if f.is_indefinite() { "indefinite" } else { "definite" },
        f.b_plus(),
        f.b_minus()
    )
}

fn emit(as_json: bool, body: Value, text: impl FnOnce() -> String) -> Output {
    if as_json {
        Output::ok(json::to_string(&json::document(body)))
    } else {
        Output::ok(text())
    }
}

pub fn invariants(text: &str, as_json: bool) -> Result<Output, CliError> {
    let (expr, model) = load(text)?;
    let canonical = pretty_print(&expr);
    Ok(match model {
        Model::Surface(s) => {
            let form = s.intersection_form()?;
            let body = json!({
                "command": "invariants",
                "expr": canonical,
                "kind": "surface",
                "surface": json::surface(&s, json::form(&form)),
            });
            emit(as_json, body, || {
                let fibers = match s.elliptic {
                    None => "no".into(),
                    Some(e) => match e.multiple_fibers {
                        None => "yes".into(),
                        Some((p, q)) => format!("yes, multiple fibers of multiplicity {p} and {q}"),
                    },
                };
                key_values(&[
                    ("expression", canonical.clone()),
                    ("family", s.family.to_string()),
                    ("blow-ups", s.blowups.to_string()),
                    ("c1^2", s.chern.c1_sq.to_string()),
                    ("c2", s.chern.c2.to_string()),
                    ("chi(O)", s.hodge.chi_o().to_string()),
                    ("p_g", s.hodge.p_g().to_string()),
                    ("q", s.hodge.q().to_string()),
                    ("kod", s.kod.to_string()),
                    ("spin", yes_no(s.spin)),
                    ("form", form_text(&form)),
                    ("elliptic", fibers),
                ])
            })
        }
        Model::Threefold(x) => {
            let body = json!({
                "command": "invariants",
                "expr": canonical,
                "kind": "threefold",
                "threefold": json::threefold(&x),
            });
            emit(as_json, body, || {
                key_values(&[
                    ("expression", canonical.clone()),
                    ("surface", format!("{} blown up {} times", x.surface.family, x.surface.blowups)),
                    ("curve genus", x.curve.genus.to_string()),
                    ("c1^3", x.chern3.c1_cubed.to_string()),
                    ("c1c2", x.chern3.c1c2.to_string()),
                    ("c3", x.chern3.c3.to_string()),
                    ("kod", x.kod.to_string()),
                    ("pi1", x.pi1.to_string()),
                ])
            })
        }
    })
}

fn model_plurigenus(model: &Model, m: u64) -> Result<u64, Error> {
    match model {
        Model::Surface(s) => s.plurigenus(m),
        Model::Threefold(x) => x.plurigenus(m),
    }
}

pub fn plurigenera(text: &str, max: u64, as_json: bool) -> Result<Output, CliError> {
    if max == 0 {
        return Err(CliError::Input("--max must be at least 1".into()));
    }
    let (expr, model) = load(text)?;
    let values = (1..=max).map(|m| model_plurigenus(&model, m)).collect::<Result<Vec<_>, _>>()?;
    let body = json!({
        "command": "plurigenera",
        "expr": pretty_print(&expr),
        "plurigenera": values.iter().zip(1u64..).map(|(v, m)| json!({ "m": m, "value": v })).collect::<Vec<_>>(),
    });
    Ok(emit(as_json, body, || {
        let mut t = Table::new(&["m", "P_m"]);
        for (v, m) in values.iter().zip(1u64..) {
            t.push(vec![m.to_string(), v.to_string()]);
        }
        format!("{}\n{}", pretty_print(&expr), t.render())
    }))
}

/// First `m <= bound` where `f` gives different values, stopping early
/// where a plurigenus rule is unavailable.
struct Search {
    found: Option<(u64, u64, u64)>,
    unavailable_from: Option<u64>,
}

fn search(bound: u64, f: impl Fn(u64) -> Result<(u64, u64), Error>) -> Result<Search, Error> {
    for m in 1..=bound {
        match f(m) {
            Ok((a, b)) if a != b => return Ok(Search { found: Some((m, a, b)), unavailable_from: None }),
            Ok(_) => {}
            Err(Error::RuleUnavailable { .. }) => return Ok(Search { found: None, unavailable_from: Some(m) }),
            Err(e) => return Err(e),
        }
    }
    Ok(Search { found: None, unavailable_from: None })
}

fn search_json(s: &Search, bound: u64) -> Value {
    json!({
        "bound": bound,
        "m": s.found.map(|f| f.0),
        "values": s.found.map(|f| json!([f.1, f.2])),
        "unavailable_from": s.unavailable_from,
    })
}

fn search_text(s: &Search, bound: u64) -> String {
    match (s.found, s.unavailable_from) {
        (Some((m, a, b)), _) => format!("m = {m} ({a} vs {b})"),
        (None, Some(m)) => format!("none before m = {m}, where a plurigenus rule is unavailable"),
        (None, None) => format!("none for m <= {bound}"),
    }
}

/// `None` when a form is definite and the classification does not apply.
fn h_cobordism(a: &SurfaceModel, b: &SurfaceModel) -> Result<Option<bool>, Error> {
    match h_cobordant(a, b) {
        Ok(v) => Ok(Some(v)),
        Err(Error::DefiniteFormUnsupported) => Ok(None),
        Err(e) => Err(e),
    }
}

fn undecided(v: Option<bool>) -> String {
    v.map_or("undecided (definite form)".into(), yes_no)
}

fn kods_text(a: KodairaDimension, b: KodairaDimension) -> String {
    format!("{a} vs {b}")
}

pub fn compare(left: &str, right: &str, max: u64, as_json: bool) -> Result<Output, CliError> {
    let (le, lm) = load(left)?;
    let (re, rm) = load(right)?;
    let (lt, rt) = (pretty_print(&le), pretty_print(&re));
    match (&lm, &rm) {
        (Model::Surface(a), Model::Surface(b)) => {
            let hc = h_cobordism(a, b)?;
            let s = search(max, |m| Ok((a.plurigenus(m)?, b.plurigenus(m)?)))?;
            let chern_equal = a.chern == b.chern;
            let body = json!({
                "command": "compare",
                "kind": "surface",
                "left": lt,
                "right": rt,
                "h_cobordant": hc,
                "chern_equal": chern_equal,
                "kod": json::kod_pair((a.kod, b.kod)),
                "min_distinguishing_plurigenus": search_json(&s, max),
            });
            Ok(emit(as_json, body, || {
                key_values(&[
                    ("left", lt.clone()),
                    ("right", rt.clone()),
                    ("h-cobordant", undecided(hc)),
                    ("Chern numbers equal", yes_no(chern_equal)),
                    ("kod", kods_text(a.kod, b.kod)),
                    ("first differing P_m", search_text(&s, max)),
                ])
            }))
        }
        (Model::Threefold(x), Model::Threefold(y)) => {
            let verdict = threefold_verdict(x, y)?;
            let s = search(max, |m| Ok((x.plurigenus(m)?, y.plurigenus(m)?)))?;
            let chern_equal = x.chern3 == y.chern3;
            let body = json!({
                "command": "compare",
                "kind": "threefold",
                "left": lt,
                "right": rt,
                "verdict": verdict.as_ref().map(json::verdict),
                "chern_equal": chern_equal,
                "kod": json::kod_pair((x.kod, y.kod)),
                "min_distinguishing_plurigenus": search_json(&s, max),
            });
            Ok(emit(as_json, body, || {
                key_values(&[
                    ("left", lt.clone()),
                    ("right", rt.clone()),
                    ("verdict", verdict.as_ref().map_or("undecided (definite form)".into(), verdict_text)),
                    ("Chern numbers equal", yes_no(chern_equal)),
                    ("kod", kods_text(x.kod, y.kod)),
                    ("first differing P_m", search_text(&s, max)),
                ])
            }))
        }
        _ => Err(CliError::Input("cannot compare a surface with a threefold".into())),
    }
}

/// Products over curves of different genus have different fundamental
/// groups, so nothing is concluded.
fn threefold_verdict(x: &ThreefoldModel, y: &ThreefoldModel) -> Result<Option<Verdict>, Error> {
    if x.curve.genus != y.curve.genus {
        return Ok(Some(Verdict { outcome: kodaira_core::VerdictOutcome::NoConclusion, chain: Vec::new() }));
    }
    match diffeomorphic_product(&x.surface, &y.surface, x.curve.genus) {
        Ok(v) => Ok(Some(v)),
        Err(Error::DefiniteFormUnsupported) => Ok(None),
        Err(e) => Err(e),
    }
}

fn verdict_text(v: &Verdict) -> String {
    if v.chain.is_empty() {
        return v.outcome.to_string();
    }
    let chain: Vec<_> = v.chain.iter().map(|t| t.as_str()).collect();
    format!("{} [{}]", v.outcome, chain.join(", "))
}

fn evidence_text(e: &DeformationEvidence) -> String {
    match e {
        DeformationEvidence::PlurigenusDiffersAt { m, left, right } => format!("P_{m}: {left} vs {right}"),
        DeformationEvidence::ExternalTheorem(name) => format!("external: {name}"),
        DeformationEvidence::IndistinguishableWithin(bound) => format!("none for m <= {bound}"),
        DeformationEvidence::None => "-".into(),
    }
}

fn row_cells(r: &ReportRow) -> Vec<String> {
    let status = if r.passed() {
        "ok".to_string()
    } else {
        let reasons: Vec<_> = r.failures.iter().map(|f| f.to_string()).collect();
        format!("FAIL: {}", reasons.join("; "))
    };
    let flags: Vec<_> = r.anomalies.iter().map(|a| a.as_str()).collect();
    vec![
        r.k.to_string(),
        r.left.to_string(),
        r.right.to_string(),
        r.verdict.as_ref().map_or("-".into(), |v| v.outcome.to_string()),
        yes_no(r.chern_equal),
        r.kod_pair.map_or("-".into(), |(a, b)| format!("({a}, {b})")),
        evidence_text(&r.deformation_evidence),
        flags.join(","),
        status,
    ]
}

fn report_text(r: &VerificationReport) -> String {
    let failed = r.failed_rows().count();
    let mut out = format!(
        "{}  genus {}  k {}..={}  {} rows  {}\n",
        r.example,
        r.genus,
        r.k_min,
        r.k_max,
        r.rows.len(),
        if failed == 0 { "PASS".to_string() } else { format!("FAIL ({failed} rows)") }
    );
    if let Some(first) = r.rows.iter().find_map(|row| row.verdict.as_ref()) {
        out.push_str(&format!("chain: {}\n", verdict_text(first)));
    }
    out.push_str(&format!("note: {}\n", r.scope_note()));
    let mut t = Table::new(&["k", "left", "right", "verdict", "chern", "kod", "evidence", "flags", "status"]);
    for row in &r.rows {
        t.push(row_cells(row));
    }
    out.push_str(&t.render());
    out
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub theorem: Theorem,
    pub example: Option<ExampleId>,
    pub k_max: u64,
    /// `None` runs genus 1 and genus 2, or genus 0 for B1.
    pub genus: Option<u64>,
    pub m_bound: u64,
}

fn run_example(id: ExampleId, k_max: u64, genus: u64, m_bound: u64) -> Result<VerificationReport, Error> {
    match id.theorem() {
        Theorem::A => verify_theorem_a(id, k_max, genus),
        Theorem::B => verify_theorem_b(id, k_max, genus, m_bound),
    }
}

pub fn verify(opts: VerifyOptions, as_json: bool) -> Result<Output, CliError> {
    let examples: Vec<ExampleId> = match opts.example {
        Some(id) if id.theorem() != opts.theorem => {
            return Err(CliError::Input(format!("{id} belongs to theorem {}, not {}", id.theorem(), opts.theorem)));
        }
        Some(id) => vec![id],
        None => ExampleId::ALL.into_iter().filter(|id| id.theorem() == opts.theorem).collect(),
    };
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    for id in examples {
        let genera = match (opts.genus, id) {
            (Some(g), _) => vec![g],
            (None, ExampleId::B1) => vec![0],
            (None, _) => vec![1, 2],
        };
        for genus in genera {
            match run_example(id, opts.k_max, genus, opts.m_bound) {
                Ok(r) => reports.push(r),
                Err(Error::BadParameter(why)) if opts.example.is_none() => skipped.push((id, why)),
                Err(e) => return Err(e.into()),
            }
        }
    }
    if reports.is_empty() {
        return Err(CliError::Input("no example accepts these options".into()));
    }
    let passed = reports.iter().all(VerificationReport::passed);
    let total: usize = reports.iter().map(|r| r.rows.len()).sum();
    let failed: usize = reports.iter().map(|r| r.failed_rows().count()).sum();
    let body = json!({
        "command": "verify",
        "theorem": opts.theorem.to_string(),
        "passed": passed,
        "rows": total,
        "failed_rows": failed,
        "reports": reports.iter().map(json::report).collect::<Vec<_>>(),
        "skipped": skipped.iter().map(|(id, why)| json!({ "example": id.as_str(), "reason": why })).collect::<Vec<_>>(),
    });
    let mut out = emit(as_json, body, || {
        let mut s = String::new();
        for r in &reports {
            s.push_str(&report_text(r));
            s.push('\n');
        }
        for (id, why) in &skipped {
            s.push_str(&format!("skipped {id}: {why}\n"));
        }
        if passed {
            s.push_str(&format!("all {total} rows passed\n"));
        } else {
            s.push_str(&format!("{failed} of {total} rows failed\n"));
        }
        s
    });
    out.verification_failed = !passed;
    Ok(out)
}

pub fn catalog(as_json: bool) -> Result<Output, CliError> {
    let table = family_table();
    let body = json!({
        "command": "catalog",
        "families": table.iter().map(json::family).collect::<Vec<_>>(),
    });
    Ok(emit(as_json, body, || {
        let mut t = Table::new(&["family", "params", "constraints", "c1^2", "c2", "p_g", "kod", "spin", "plurigenera"]);
        for f in &table {
            t.push(vec![
                f.name.into(),
                f.params.join(", "),
                f.constraints.into(),
                f.c1_sq.into(),
                f.c2.into(),
                f.p_g.into(),
                f.kod.to_string(),
                f.spin.into(),
                f.plurigenera.into(),
            ]);
        }
        t.render()
    }))
}

pub fn anomalies(as_json: bool) -> Result<Output, CliError> {
    let found = anomaly_scan()?;
    let body = json!({
        "command": "anomalies",
        "anomalies": found.iter().map(json::anomaly).collect::<Vec<_>>(),
    });
    Ok(emit(as_json, body, || {
        let mut t = Table::new(&["id", "example", "finding"]);
        for a in &found {
            t.push(vec![a.kind().as_str().into(), a.example().to_string(), a.description()]);
        }
        t.render()
    }))
}
