use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use brokentoric::exactla::{format_rational, wedge_labels};
use brokentoric::invariants::{
    e2_page_with, euler_check, h_vector_formula, mayer_vietoris_check, skeletal_closed_form, skeletal_formula,
    vanishing_report, VanishingMode, VerifyReport, CheckItem,
};
use brokentoric::{
    constant_sheaf, generate, moment_sheaf, sheaf_cohomology, structural_sheaf, CellSheaf, ComplexDocument, E2Page,
    Engine, Error, FiltrationTable, PolytopeComplex,
};
use serde_json::{json, Value};

use crate::report::{pass, sha256_hex, table, tuple};
use crate::shapes::parse_shape;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
    Assertion(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::Assertion(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Input(m) | CliError::Assertion(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::EngineDisagreement { .. } | Error::NotAComplex(_) | Error::IncidenceInconsistent { .. } => {
                CliError::Assertion(e.to_string())
            }
            Error::UnknownGenerator(_) | Error::BadParameter(_) => CliError::Usage(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

/// Result of a report command, before rendering.
pub struct Outcome {
    pub kind: &'static str,
    pub payload: Value,
    pub text: String,
    pub passed: bool,
}

pub struct Input {
    pub complex: Arc<PolytopeComplex>,
    pub sha256: String,
}

pub fn load(path: &Path) -> Result<Input, CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|_| CliError::Input(format!("{} is not UTF-8", path.display())))?;
    let doc = ComplexDocument::from_json(text)?;
    let complex = doc.to_complex().map_err(|e| CliError::Input(e.to_string()))?;
    Ok(Input {
        complex: Arc::new(complex),
        sha256: sha256_hex(&bytes),
    })
}

pub fn generate_document(tokens: &[String], k: Option<usize>) -> Result<String, CliError> {
    let shape = parse_shape(tokens, k).map_err(CliError::Usage)?;
    let p = generate(&shape)?;
    Ok(ComplexDocument::from_complex(&p, Some(shape.to_string())).to_json())
}

fn grid_json(page: &E2Page) -> Value {
    json!(page.grid)
}

fn page_text(page: &E2Page) -> String {
    format!("E2 page, h^p(R^q) with p across and q up\n{page}")
}

pub fn validate(input: &Input) -> Result<Outcome, CliError> {
    let p = &input.complex;
    let simple = p.is_simple().ok();
    let payload = json!({
        "ambient_dim": p.ambient_dim(),
        "f_vector": p.f_vector(),
        "maximal_cells": p.maximal_cells().len(),
        "simple_polytope": simple,
        "top_dim": p.top_dim(),
        "valid": true,
    });
    let mut text = String::new();
    writeln!(text, "valid complex in Q^{}", p.ambient_dim()).unwrap();
    writeln!(text, "f-vector: {}", tuple(&p.f_vector())).unwrap();
    writeln!(text, "maximal cells: {}", p.maximal_cells().len()).unwrap();
    match simple {
        Some(s) => writeln!(text, "single polytope, simple: {s}").unwrap(),
        None => writeln!(text, "not a single polytope").unwrap(),
    }
    Ok(Outcome {
        kind: "verify",
        payload,
        text,
        passed: true,
    })
}

pub fn e2(input: &Input, engine: Engine) -> Result<Outcome, CliError> {
    let page = e2_page_with(&input.complex, engine)?;
    Ok(Outcome {
        kind: "e2",
        payload: json!({ "grid": grid_json(&page), "lower_vanishing": page.lower_violations().is_empty() }),
        text: page_text(&page),
        passed: true,
    })
}

pub fn betti(input: &Input, engine: Engine) -> Result<Outcome, CliError> {
    let p = &input.complex;
    let page = e2_page_with(p, engine)?;
    let b = page.betti();
    let chi = b.euler_characteristic();
    let vertices = p.cells_of_dim(0).len();
    let ok = chi == vertices as i64;
    let payload = json!({
        "betti": b.dims,
        "e2": grid_json(&page),
        "euler": { "alternating_sum": chi, "passed": ok, "vertices": vertices },
    });
    let mut text = page_text(&page);
    writeln!(text, "\nBetti numbers: {}", tuple(&b.dims)).unwrap();
    writeln!(text, "Euler check: {chi} against {vertices} vertices, {}", pass(ok)).unwrap();
    Ok(Outcome {
        kind: "betti",
        payload,
        text,
        passed: ok,
    })
}

pub fn filtration(input: &Input, engine: Engine) -> Result<Outcome, CliError> {
    let page = e2_page_with(&input.complex, engine)?;
    let t = FiltrationTable::from_e2(&page);
    let n = page.dim();
    let mut headers = vec!["i".to_string()];
    headers.extend((0..=n).map(|k| format!("L_{k}")));
    headers.push("h^i".into());
    let rows: Vec<Vec<String>> = t
        .dims
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = vec![i.to_string()];
            row.extend(r.iter().map(ToString::to_string));
            row.push(t.total(i).to_string());
            row
        })
        .collect();
    let mut text = String::from("Leray filtration dims L_k H^i\n");
    text.push_str(&table(&headers, &rows));
    text.push_str("weights: ");
    text.push_str(&t.weight_labels.join("; "));
    text.push('\n');
    Ok(Outcome {
        kind: "filtration",
        payload: json!({ "dims": t.dims, "monotone": t.is_monotone(), "weight_labels": t.weight_labels }),
        text,
        passed: t.is_monotone(),
    })
}

pub fn formulas(input: &Input, skeletal: bool, k: Option<usize>) -> Result<Outcome, CliError> {
    let p = &input.complex;
    if skeletal {
        let n = k.ok_or_else(|| CliError::Usage("--skeletal needs --k".into()))?;
        let prediction = skeletal_formula(p, n)?;
        let page = brokentoric::e2_page(&Arc::new(p.skeleton(n)))?;
        let grid_ok = prediction.matches(&page);
        let mut text = format!("skeletal formula for the {n}-skeleton\n");
        writeln!(text, "predicted (general): {:?}", prediction.general).unwrap();
        if let Some(s) = &prediction.simple {
            writeln!(text, "predicted (simple):  {s:?}").unwrap();
        }
        writeln!(text, "engine:              {:?}", page.grid).unwrap();
        writeln!(text, "grid match: {}", pass(grid_ok)).unwrap();
        let mut payload = json!({
            "engine": grid_json(&page),
            "grid_match": grid_ok,
            "n": n,
            "parent_dim": prediction.parent_dim,
            "predicted_general": prediction.general,
            "predicted_simple": prediction.simple,
        });
        let mut passed = grid_ok;
        if n + 1 == prediction.parent_dim && prediction.simple.is_some() {
            let c = skeletal_closed_form(p)?;
            let b: Vec<i64> = page.betti().dims.iter().map(|&x| x as i64).collect();
            let ok = c.corrected == b;
            passed &= ok;
            writeln!(text, "closed form Betti: {}", tuple(&c.corrected)).unwrap();
            writeln!(
                text,
                "with the sign (-1)^(n+1-2i) instead: {} (differs in degrees {:?})",
                tuple(&c.printed_sign),
                c.sign_discrepancies
            )
            .unwrap();
            writeln!(text, "engine Betti: {}, {}", tuple(&b), pass(ok)).unwrap();
            payload["closed_form"] = json!({
                "corrected": c.corrected,
                "engine_betti": b,
                "match": ok,
                "printed_sign": c.printed_sign,
                "sign_discrepancies": c.sign_discrepancies,
            });
        }
        return Ok(Outcome {
            kind: "formulas",
            payload,
            text,
            passed,
        });
    }
    let h = h_vector_formula(p)?;
    let page = brokentoric::e2_page(p)?;
    let diag: Vec<i64> = (0..=page.dim()).map(|i| page.get(i, i) as i64).collect();
    let ok = diag == h;
    let text = format!(
        "h-vector from face counts: {}\nengine diagonal h^i(R^i):  {}\n{}\n",
        tuple(&h),
        tuple(&diag),
        pass(ok)
    );
    Ok(Outcome {
        kind: "formulas",
        payload: json!({ "engine_diagonal": diag, "h_vector": h, "match": ok }),
        text,
        passed: ok,
    })
}

pub struct SheafChoice {
    pub moment: Option<usize>,
    pub constant: Option<usize>,
    pub facets: Option<Vec<usize>>,
}

pub fn sheaf(input: &Input, choice: &SheafChoice, stalks: bool, engine: Engine) -> Result<Outcome, CliError> {
    let p = &input.complex;
    let (name, s, labels): (String, CellSheaf, Vec<String>) = match (choice.constant, &choice.facets) {
        (Some(_), Some(_)) => return Err(CliError::Usage("--constant and --facets are exclusive".into())),
        (Some(m), None) => (format!("constant Q^{m}"), constant_sheaf(p, m), wedge_labels(m, 1)),
        (None, facets) => {
            let i = choice.moment.unwrap_or(0);
            let labels = wedge_labels(p.ambient_dim(), i);
            match facets {
                Some(f) => (
                    format!("structural S^{i} cut by facets {f:?}"),
                    structural_sheaf(p, i, f)?,
                    labels,
                ),
                None => (format!("moment R^{i}"), moment_sheaf(p, i), labels),
            }
        }
    };
    let h = sheaf_cohomology(&s, engine)?;
    let mut text = format!("sheaf: {name} in Q^{}\ncohomology: {}\n", s.coeff_dim(), tuple(&h.dims));
    let mut payload = json!({ "coeff_dim": s.coeff_dim(), "cohomology": h.dims, "sheaf": name });
    if stalks {
        let mut rows = Vec::new();
        let mut entries = Vec::new();
        for c in p.cells() {
            let st = s.stalk(c.id);
            let label = st.render(&labels);
            let basis: Vec<Vec<String>> = (0..st.dim())
                .map(|r| st.basis_vector(r).iter().map(format_rational).collect())
                .collect();
            rows.push(vec![
                c.id.to_string(),
                c.dim.to_string(),
                tuple(&c.vertices),
                st.dim().to_string(),
                label.clone(),
            ]);
            entries.push(json!({
                "basis": basis,
                "cell": c.id,
                "dim": c.dim,
                "label": label,
                "stalk_dim": st.dim(),
                "vertices": c.vertices,
            }));
        }
        let headers: Vec<String> = ["cell", "dim", "vertices", "rank", "stalk"].iter().map(|s| s.to_string()).collect();
        text.push_str(&table(&headers, &rows));
        payload["stalks"] = json!(entries);
    }
    Ok(Outcome {
        kind: "sheaf",
        payload,
        text,
        passed: true,
    })
}

pub fn verify(input: &Input, toric: bool, mv: bool, engine: Engine) -> Result<Outcome, CliError> {
    let p = &input.complex;
    let page = e2_page_with(p, engine)?;
    let single = p.single_top_cell().is_ok();
    let mut report = if toric || single {
        vanishing_report(p, &page, VanishingMode::ToricDiagonal)?
    } else {
        let mut r = vanishing_report(p, &page, VanishingMode::Lower)?;
        r.notices.push("not a single polytope; diagonal checks skipped".into());
        r
    };
    let euler = euler_check(p)?;
    report.items.push(CheckItem::new(
        "euler equals vertex count",
        euler.passed,
        format!("{} against {}", euler.alternating_sum, euler.vertices),
    ));
    if mv {
        let r = mayer_vietoris_check(p, engine)?;
        for row in &r.rows {
            report.items.push(CheckItem::new(
                format!("mayer-vietoris degree {}", row.degree),
                row.total == 0,
                format!(
                    "{} - {} - {} + {} = {}",
                    paren(row.chi_x),
                    paren(row.chi_y),
                    paren(row.chi_xtilde),
                    paren(row.chi_ytilde),
                    row.total
                ),
            ));
        }
    }
    Ok(verify_outcome(report))
}

fn paren(x: i64) -> String {
    if x < 0 {
        format!("({x})")
    } else {
        x.to_string()
    }
}

fn verify_outcome(report: VerifyReport) -> Outcome {
    let rows: Vec<Vec<String>> = report
        .items
        .iter()
        .map(|c| vec![pass(c.passed).to_string(), c.name.clone(), c.detail.clone()])
        .collect();
    let headers: Vec<String> = ["result", "check", "detail"].iter().map(|s| s.to_string()).collect();
    let mut text = table(&headers, &rows);
    for n in &report.notices {
        writeln!(text, "note: {n}").unwrap();
    }
    let passed = report.passed();
    Outcome {
        kind: "verify",
        payload: json!({ "items": report.items, "notices": report.notices, "passed": passed }),
        text,
        passed,
    }
}
