//! Human-readable tables.

use std::fmt::Write;

use jz_core::jzreport::JZReport;
use jz_core::torlab::{HypothesisReport, PdBound};

use crate::check::CheckSummary;
use crate::commands::{Payload, Provenance, Run, TorResult};

fn header(out: &mut String, command: &str, p: &Provenance) {
    let b = &p.bounds;
    let name = if p.input.is_empty() { "(unnamed)" } else { &p.input };
    let _ = writeln!(out, "jz {} {command}: {name}", p.tool_version);
    let _ = writeln!(out, "input sha256 {}", p.input_sha256);
    let _ = writeln!(
        out,
        "field {}, N = {}, nmax = {}, starmax = {}, pmax = {}, qmax = {}, cap = {}",
        p.field, b.degree, b.nmax, b.starmax, b.pmax, b.qmax, b.cap
    );
    out.push('\n');
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn flag(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "NO",
        None => "-",
    }
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or("none".into(), |v| v.to_string())
}

fn pd(p: PdBound) -> String {
    match p {
        PdBound::AtMost(u) => format!("at most {u}"),
        PdBound::ExceedsCap => "exceeds cap".into(),
    }
}

/// Rows of cells, right-aligned in columns sized to the widest cell.
fn grid(out: &mut String, rows: &[Vec<String>]) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            if c == 0 {
                let _ = write!(line, "{cell:<w$}", w = widths[0]);
            } else {
                let _ = write!(line, "  {cell:>w$}", w = widths[c]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
}

fn row(label: &str, cells: impl IntoIterator<Item = String>) -> Vec<String> {
    std::iter::once(label.to_string()).chain(cells).collect()
}

fn hypothesis(out: &mut String, h: &HypothesisReport) {
    let _ = writeln!(
        out,
        "Tor^B_*(A/B, (A/B)^n) for 1 <= n <= {}, 0 <= * <= {}:",
        h.nmax, h.starmax
    );
    let mut rows = vec![row("n \\ *", (0..=h.starmax).map(|k| k.to_string()))];
    for (i, t) in h.table.iter().enumerate() {
        rows.push(row(&(i + 1).to_string(), t.iter().take(h.starmax + 1).map(|d| d.to_string())));
    }
    grid(out, &rows);
    let verdict = match h.witness {
        None => "vanishes in positive degrees within the bounds".to_string(),
        Some((n, k)) => format!("fails: Tor_{k} nonzero for n = {n}"),
    };
    let _ = writeln!(out, "hypothesis: {verdict}");
}

fn tor(out: &mut String, t: &TorResult) {
    hypothesis(out, &t.hypothesis);
    let e = &t.e1;
    let _ = writeln!(out, "\nE1 page, dim Tor^(B^e)_(p+q)(X, (A/B)^p):");
    let mut rows = vec![row("p \\ q", (1..=e.qmax).map(|q| q.to_string()))];
    for (i, r) in e.table.iter().enumerate() {
        rows.push(row(&(i + 1).to_string(), r.iter().map(|d| d.to_string())));
    }
    grid(out, &rows);
    if e.cross_check.is_empty() {
        let _ = writeln!(out, "quotient homology cross-check: not run (hypothesis fails)");
    } else {
        let _ = writeln!(out, "quotient homology cross-check: {}", if e.consistent() { "agrees" } else { "DISAGREES" });
    }
}

fn jz_table(out: &mut String, r: &JZReport) {
    let ms: Vec<String> = r.rows.iter().map(|x| x.degree.to_string()).collect();
    let col = |f: &dyn Fn(&jz_core::jzreport::DegreeRow) -> String| r.rows.iter().map(f).collect::<Vec<_>>();
    let rows = vec![
        row("m", ms),
        row("H_m(B, X)", col(&|x| x.sub.to_string())),
        row("H_m(A, X)", col(&|x| x.ambient.to_string())),
        row("H_m(A|B, X)", col(&|x| x.relative.to_string())),
        row("rank I_m", col(&|x| x.rank_i.to_string())),
        row("rank K_m", col(&|x| x.rank_k.to_string())),
        row("gap g_m", col(&|x| x.gap.to_string())),
        row("gap homology h_m", col(&|x| x.gap_homology.to_string())),
        row("K I = 0", col(&|x| yes_no(x.k_after_i_zero).to_string())),
        row("g_m = h_m", col(&|x| flag(x.gap_identity).to_string())),
        row("connecting identity", col(&|x| flag(x.connecting_identity).to_string())),
    ];
    grid(out, &rows);
    out.push('\n');
    let _ = writeln!(out, "fundamental sequence: {}", if r.fundamental.all_hold() { "verified" } else { "FAILS" });
    let dims_ok = r.dimension_rows.iter().all(|d| d.holds());
    let _ = writeln!(out, "gap dimension count: {}", if dims_ok { "verified" } else { "FAILS" });
    let filtration = match r.filtration.witness {
        None => "closed under the differential".to_string(),
        Some((p, n)) => format!("G_{p} NOT closed in degree {n}"),
    };
    let _ = writeln!(out, "filtration: {filtration}");
    out.push('\n');
    tor(
        out,
        &TorResult {
            hypothesis: r.hypothesis.clone(),
            e1: r.e1.clone(),
        },
    );
    out.push('\n');
    let f = &r.flat;
    let flat = match f.holds {
        None => "premises not verified".to_string(),
        Some(h) => format!(
            "gap zero in degrees >= 2: {}, degree one: {}, exact: {}",
            yes_no(f.gap_zero),
            yes_no(f.degree_one),
            yes_no(h)
        ),
    };
    let _ = writeln!(out, "flat case: {flat}");
    let b = &r.bounded;
    let _ = writeln!(
        out,
        "bounded case: nilpotency {}, pd(A/B) {}, gap must vanish from degree {}: {}",
        opt(b.nilpotency),
        pd(b.pd),
        opt(b.from_degree),
        flag(b.holds)
    );
    let d = &r.degree_one;
    let _ = writeln!(
        out,
        "degree one: rank K_1 = {}, dim H_1(A|B, X) = {}, gap {}: {}",
        d.rank_k,
        d.relative,
        d.gap,
        yes_no(d.holds)
    );
}

pub fn run_table(run: &Run) -> String {
    let mut out = String::new();
    header(&mut out, run.command.name(), &run.provenance);
    match &run.payload {
        Payload::Homology(h) => {
            let _ = writeln!(out, "homology of {}:", h.complex);
            grid(
                &mut out,
                &[
                    row("m", (0..h.dims.len()).map(|m| m.to_string())),
                    row("dim", h.dims.iter().map(|d| d.to_string())),
                ],
            );
        }
        Payload::Jz(r) => jz_table(&mut out, r),
        Payload::Tor(t) => tor(&mut out, t),
        Payload::Nilpotency(n) => {
            let dims = n.nilpotency.dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ");
            let _ = writeln!(out, "dim (A/B)^(tensor_B n), n = 1..={}: {dims}", n.nilpotency.cap);
            let _ = writeln!(out, "nilpotency index: {}", opt(n.nilpotency.index));
            let _ = writeln!(out, "projective dimension of A/B over B^e: {}", pd(n.quotient_pd));
        }
    }
    if !run.failures.is_empty() {
        let _ = writeln!(out, "\nFAILED: {}", run.failures.join("; "));
    }
    out
}

pub fn check_table(summary: &CheckSummary, inputs: usize) -> String {
    let mut out = String::new();
    if summary.checks.is_empty() {
        let _ = writeln!(out, "warning: 0 checks ({inputs} inputs)");
        return out;
    }
    for c in &summary.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        if c.detail.is_empty() {
            let _ = writeln!(out, "{status} {}: {}", c.input, c.check);
        } else {
            let _ = writeln!(out, "{status} {}: {} ({})", c.input, c.check, c.detail);
        }
    }
    let _ = writeln!(out, "\n{} passed, {} failed", summary.passed, summary.failed);
    out
}
