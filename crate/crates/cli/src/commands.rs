//! The analysis subcommands and their structured output.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use jz_core::fundamental::build_fundamental;
use jz_core::jzreport::{e1_page, jz, Bounds, E1Page, JZReport};
use jz_core::relbar::{hochschild_complex, relative_chain_complex};
use jz_core::torlab::{check_hypothesis, nilpotency_index, quotient_pd, HypothesisReport, NilpotencyReport, PdBound};

use crate::document::{Input, SCHEMA_VERSION};
use crate::error::{CliError, EXIT_INVARIANT, EXIT_OK};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Hh,
    RelHh,
    Jz,
    Tor,
    Nilpotency,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Hh => "hh",
            Command::RelHh => "rel-hh",
            Command::Jz => "jz",
            Command::Tor => "tor",
            Command::Nilpotency => "nilpotency",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub input: String,
    pub input_sha256: String,
    pub tool_version: String,
    pub field: String,
    pub bounds: Bounds,
}

impl Provenance {
    pub fn new(input: &Input, raw: &[u8]) -> Provenance {
        Provenance {
            input: input.name.clone(),
            input_sha256: hex::encode(Sha256::digest(raw)),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            field: input.field.to_string(),
            bounds: input.bounds,
        }
    }
}

/// The machine-readable report written by every analysis command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputReport {
    pub schema_version: u32,
    pub command: String,
    pub provenance: Provenance,
    pub passed: bool,
    pub failures: Vec<String>,
    pub result: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyResult {
    pub complex: String,
    /// `dims[m]` is the dimension in degree `m`.
    pub dims: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TorResult {
    pub hypothesis: HypothesisReport,
    pub e1: E1Page,
}

#[derive(Clone, Debug, Serialize)]
pub struct NilpotencyResult {
    pub nilpotency: NilpotencyReport,
    pub quotient_pd: PdBound,
}

#[derive(Clone, Debug)]
pub enum Payload {
    Homology(HomologyResult),
    Jz(Box<JZReport>),
    Tor(TorResult),
    Nilpotency(NilpotencyResult),
}

#[derive(Clone, Debug)]
pub struct Run {
    pub command: Command,
    pub provenance: Provenance,
    pub payload: Payload,
    pub failures: Vec<String>,
}

impl Run {
    pub fn report(&self) -> OutputReport {
        let result = match &self.payload {
            Payload::Homology(r) => serde_json::to_value(r),
            Payload::Jz(r) => serde_json::to_value(r),
            Payload::Tor(r) => serde_json::to_value(r),
            Payload::Nilpotency(r) => serde_json::to_value(r),
        }
        .expect("reports serialize");
        OutputReport {
            schema_version: SCHEMA_VERSION,
            command: self.command.name().to_string(),
            provenance: self.provenance.clone(),
            passed: self.failures.is_empty(),
            failures: self.failures.clone(),
            result,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.failures.is_empty() {
            EXIT_OK
        } else {
            EXIT_INVARIANT
        }
    }
}

/// `H_m(A, X)` for `0 <= m <= N - 2`.
pub fn hh_dims(input: &Input) -> Result<Vec<usize>, CliError> {
    let n = input.bounds.degree;
    let mut dims = hochschild_complex(&input.bimodule, n - 1)?.homology_dims();
    dims.truncate(n - 1);
    Ok(dims)
}

/// `H_m(A|B, X)` for `0 <= m <= N - 2`.
pub fn rel_hh_dims(input: &Input) -> Result<Vec<usize>, CliError> {
    let n = input.bounds.degree;
    let mut dims = relative_chain_complex(&input.embedding, &input.bimodule, n - 1)?.complex.homology_dims();
    dims.truncate(n - 1);
    Ok(dims)
}

pub fn run(command: Command, input: &Input, raw: &[u8]) -> Result<Run, CliError> {
    let b = input.bounds;
    let emb = &input.embedding;
    let (payload, failures) = match command {
        Command::Hh => (
            Payload::Homology(HomologyResult {
                complex: "C(A, X)".into(),
                dims: hh_dims(input)?,
            }),
            Vec::new(),
        ),
        Command::RelHh => (
            Payload::Homology(HomologyResult {
                complex: "C(A|B, X)".into(),
                dims: rel_hh_dims(input)?,
            }),
            Vec::new(),
        ),
        Command::Jz => {
            let report = jz(emb, &input.bimodule, b)?;
            let failures = report.failures();
            (Payload::Jz(Box::new(report)), failures)
        }
        Command::Tor => {
            let fs = build_fundamental(emb, &input.bimodule, b.degree - 1)?;
            let hypothesis = check_hypothesis(emb, b.nmax, b.starmax)?;
            let e1 = e1_page(&fs, &hypothesis, b.pmax, b.qmax)?;
            let failures = if e1.consistent() {
                Vec::new()
            } else {
                vec!["E1 page against quotient homology".to_string()]
            };
            (Payload::Tor(TorResult { hypothesis, e1 }), failures)
        }
        Command::Nilpotency => {
            let nilpotency = nilpotency_index(emb, b.cap)?;
            let pd = quotient_pd(emb, b.cap)?;
            (
                Payload::Nilpotency(NilpotencyResult {
                    nilpotency,
                    quotient_pd: pd,
                }),
                Vec::new(),
            )
        }
    };
    Ok(Run {
        command,
        provenance: Provenance::new(input, raw),
        payload,
        failures,
    })
}
