//! The invariant suite run by `jz check`.

use serde::{Deserialize, Serialize};

use jz_core::algebra::{enveloping, Bimodule, SubalgebraEmbedding};
use jz_core::complexes::ChainComplex;
use jz_core::exactlin::{Matrix, SparseVec};
use jz_core::fundamental::build_fundamental;
use jz_core::jzreport::jz;
use jz_core::relbar::{
    hochschild_columns, perturbed_section, relative_chain_complex, relative_resolution, section_independence,
};
use jz_core::torlab::{is_nilpotent_ideal, radical, tor, TorRequest};

use crate::commands::{hh_dims, rel_hh_dims};
use crate::document::Input;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub input: String,
    pub check: String,
    pub passed: bool,
    /// Witness of the failure, or a short summary on success.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub checks: Vec<CheckLine>,
    pub passed: usize,
    pub failed: usize,
}

impl CheckSummary {
    pub fn new(checks: Vec<CheckLine>) -> CheckSummary {
        let passed = checks.iter().filter(|c| c.passed).count();
        CheckSummary {
            failed: checks.len() - passed,
            passed,
            checks,
        }
    }
}

/// Long-sequence checks reported by name; each matches the failures whose
/// text starts with the given prefix.
const SEQUENCE_CHECKS: [(&str, &str); 8] = [
    ("K I = 0", "K I = 0"),
    ("gap identity", "gap identity"),
    ("connecting identity", "connecting identity"),
    ("gap dimension count", "gap dimension count"),
    ("filtration closed", "filtration"),
    ("E1 page against quotient homology", "E1 page"),
    ("flat case", "flat case"),
    ("bounded case", "bounded case"),
];

fn outcome(r: Result<String, String>) -> (bool, String) {
    match r {
        Ok(s) => (true, s),
        Err(s) => (false, s),
    }
}

/// Adds `1` to one entry of `d_{n+1}` that `d_n` sees, so that
/// `d_n d_{n+1} != 0`.
fn corrupt(diffs: &mut [Matrix]) -> bool {
    for n in 0..diffs.len().saturating_sub(1) {
        let seen = diffs[n].columns().iter().position(|c| !c.is_zero());
        if let (Some(i), true) = (seen, diffs[n + 1].cols() > 0) {
            let d = &diffs[n + 1];
            let f = d.field();
            let mut rows = d.row_vecs().to_vec();
            rows[i] = rows[i].add(&SparseVec::unit(0, f));
            diffs[n + 1] = Matrix::from_rows(f, d.cols(), rows);
            return true;
        }
    }
    false
}

fn hochschild_square_zero(x: &Bimodule, top: usize, corrupted: bool) -> Result<String, String> {
    let a = x.algebra();
    let f = a.field();
    let dims: Vec<usize> = (0..=top).map(|n| x.dim() * a.dim().pow(n as u32)).collect();
    let mut diffs: Vec<Matrix> = (1..=top)
        .map(|n| Matrix::from_columns(f, dims[n - 1], &hochschild_columns(x, n)))
        .collect();
    if corrupted && !corrupt(&mut diffs) {
        return Err("no entry can be corrupted: every differential vanishes".into());
    }
    ChainComplex::new(f, dims, diffs)
        .map(|_| format!("degrees 1..={top}"))
        .map_err(|e| e.to_string())
}

/// Deterministic maps `g : A/B -> B` used to perturb the standard section.
fn perturbations(emb: &SubalgebraEmbedding) -> Vec<Matrix> {
    let f = emb.ambient().field();
    let (rows, cols) = (emb.dim_sub(), emb.dim_quotient());
    let pattern = |shift: i64| {
        let rows = (0..rows)
            .map(|i| {
                let vals: Vec<_> = (0..cols).map(|j| f.from_i64((i as i64 + 2 * j as i64 + shift) % 3 - 1)).collect();
                SparseVec::from_dense(&vals)
            })
            .collect();
        Matrix::from_rows(f, cols, rows)
    };
    vec![pattern(0), pattern(1), pattern(2)]
}

fn check_sections(input: &Input) -> Result<String, String> {
    let emb = &input.embedding;
    let top = input.bounds.degree - 1;
    for (k, g) in perturbations(emb).iter().enumerate() {
        let sigma = perturbed_section(emb, g).map_err(|e| e.to_string())?;
        if !section_independence(emb, &input.bimodule, &sigma, top).map_err(|e| e.to_string())? {
            return Err(format!("section {k} changes the relative differential"));
        }
    }
    Ok("3 perturbed sections".into())
}

fn check_resolution(input: &Input) -> Vec<(&'static str, Result<String, String>)> {
    match relative_resolution(&input.embedding, input.bounds.degree) {
        Err(e) => vec![("relative resolution d^2 = 0", Err(e.to_string()))],
        Ok(res) => vec![
            (
                "relative resolution d^2 = 0",
                res.check_square_zero().map(|_| format!("degrees 0..={}", res.top_degree())).map_err(|e| e.to_string()),
            ),
            (
                "relative resolution sd + ds = 1",
                res.check_homotopy().map(|_| format!("degrees -1..{}", res.top_degree())).map_err(|e| e.to_string()),
            ),
        ],
    }
}

/// `H_m(A, X)` against `Tor^{A^e}_m(X, A)` for `m <= 3`.
fn check_hh_against_tor(input: &Input, hh: &[usize]) -> Result<String, String> {
    let a = input.embedding.ambient();
    let env = enveloping(a);
    let upto = hh.len().min(4);
    let right = input.bimodule.as_right_enveloping(&env).map_err(|e| e.to_string())?;
    let left = Bimodule::regular(a).as_left_enveloping(&env).map_err(|e| e.to_string())?;
    let req = TorRequest::new(env, right, left, upto).map_err(|e| e.to_string())?;
    let t = tor(&req).map_err(|e| e.to_string())?;
    match (0..upto).find(|&m| t[m] != hh[m]) {
        Some(m) => Err(format!("degree {m}: homology {} but Tor {}", hh[m], t[m])),
        None => Ok(format!("degrees 0..{upto}")),
    }
}

fn check_ground_agreement(hh: &[usize], rel: &[usize]) -> Result<String, String> {
    match (1..hh.len()).find(|&m| hh[m] != rel[m]) {
        Some(m) => Err(format!("degree {m}: absolute {} but relative {}", hh[m], rel[m])),
        None => Ok(format!("degrees 1..{}", hh.len())),
    }
}

fn check_radical(input: &Input) -> Result<String, String> {
    let a = input.embedding.ambient();
    let rad = radical(a).map_err(|e| e.to_string())?;
    if is_nilpotent_ideal(a, &rad) {
        Ok(format!("dim rad A = {}", rad.dim()))
    } else {
        Err("the trace-form radical is not a nilpotent ideal".into())
    }
}

/// Every invariant on one input. The comparison with relative homology over
/// the ground field only runs when `B = k`.
pub fn run_checks(input: &Input, corrupted: bool) -> Vec<CheckLine> {
    let top = input.bounds.degree - 1;
    let mut results: Vec<(&str, Result<String, String>)> = Vec::new();
    results.push(("hochschild complex d^2 = 0", hochschild_square_zero(&input.bimodule, top, corrupted)));
    results.push((
        "relative complex d^2 = 0",
        relative_chain_complex(&input.embedding, &input.bimodule, top)
            .map(|_| format!("degrees 1..={top}"))
            .map_err(|e| e.to_string()),
    ));
    results.extend(check_resolution(input));
    results.push(("section independence", check_sections(input)));
    results.push((
        "fundamental sequence",
        build_fundamental(&input.embedding, &input.bimodule, top)
            .and_then(|fs| fs.verify())
            .map(|_| "ι injective, κ ι = 0, κ onto".to_string())
            .map_err(|e| e.to_string()),
    ));
    match (hh_dims(input), rel_hh_dims(input)) {
        (Ok(hh), Ok(rel)) => {
            results.push(("homology against Tor over the enveloping algebra", check_hh_against_tor(input, &hh)));
            if input.embedding.dim_sub() == 1 {
                results.push(("relative over the ground field equals absolute", check_ground_agreement(&hh, &rel)));
            }
        }
        (Err(e), _) | (_, Err(e)) => results.push(("homology", Err(e.to_string()))),
    }
    results.push(("radical is a nilpotent ideal", check_radical(input)));
    match jz(&input.embedding, &input.bimodule, input.bounds) {
        Err(e) => results.push(("long sequence", Err(e.to_string()))),
        Ok(report) => {
            let failures = report.failures();
            for (name, prefix) in SEQUENCE_CHECKS {
                let hits: Vec<&String> = failures.iter().filter(|f| f.starts_with(prefix)).collect();
                let r = if hits.is_empty() {
                    Ok(String::new())
                } else {
                    Err(hits.iter().map(|s| s.as_str()).collect::<Vec<_>>().join("; "))
                };
                results.push((name, r));
            }
            results.push((
                "degree one",
                if report.degree_one.holds {
                    Ok(String::new())
                } else {
                    Err(format!(
                        "rank K_1 = {}, dim H_1(A|B) = {}, gap {}",
                        report.degree_one.rank_k, report.degree_one.relative, report.degree_one.gap
                    ))
                },
            ));
        }
    }
    results
        .into_iter()
        .map(|(check, r)| {
            let (passed, detail) = outcome(r);
            CheckLine {
                input: input.name.clone(),
                check: check.to_string(),
                passed,
                detail,
            }
        })
        .collect()
}
