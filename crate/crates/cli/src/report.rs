//! Verification of schedules and the JSON report.

use decouple_core::compiler::{CompileError, PulseSchedule};
use decouple_core::pauli::dense_cap;
use decouple_core::verifier::{pairwise_verify, random_pair_hamiltonian, verify_decoupling, PairwiseWitness, VerifyError};
use serde::Serialize;

use crate::schedule::LoadedFile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Dense,
    Pairwise,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeRequest {
    Dense,
    Pairwise,
    Auto,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    pub seeds: Vec<u64>,
    pub tol: f64,
    pub mode: ModeRequest,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seeds: (0..5).collect(),
            tol: decouple_core::verifier::DEFAULT_TOL,
            mode: ModeRequest::Auto,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    /// A node or node pair seeing some label (pair) the wrong number of times.
    Pairwise {
        nodes: Vec<usize>,
        symbols: Vec<u32>,
        count: usize,
        expected: f64,
    },
    /// The pulse sequence does not compose to the identity.
    Closure { product: String },
    /// A frame listed in the file differs from the recomputed one.
    Frame { index: usize },
}

impl From<PairwiseWitness> for Witness {
    fn from(w: PairwiseWitness) -> Self {
        Witness::Pairwise {
            nodes: w.nodes,
            symbols: w.symbols,
            count: w.count,
            expected: w.expected,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub scenario: String,
    pub n: usize,
    pub d: u32,
    #[serde(rename = "N")]
    pub steps: usize,
    pub distinct_pulses: usize,
    /// Largest relative residual over the seeds; absent in pairwise mode.
    pub residual: Option<f64>,
    pub pass: bool,
    pub seeds: Vec<u64>,
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Report {
    pub fn to_json(&self) -> String {
        crate::json::to_canonical(self)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("dense verification needs dimension {dim}, above the cap of {cap}; use --mode pairwise")]
    DenseCap { dim: u128, cap: usize },
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Schedule(CompileError),
}

/// Resolves the requested mode against the dense dimension cap.
pub fn resolve_mode(dim: u128, request: ModeRequest) -> Result<Mode, ReportError> {
    let cap = dense_cap();
    let fits = dim <= cap as u128;
    match request {
        ModeRequest::Pairwise => Ok(Mode::Pairwise),
        ModeRequest::Auto if fits => Ok(Mode::Dense),
        ModeRequest::Auto => Ok(Mode::Pairwise),
        ModeRequest::Dense if fits => Ok(Mode::Dense),
        ModeRequest::Dense => Err(ReportError::DenseCap { dim, cap }),
    }
}

/// Verifies an in-memory schedule.
///
/// Dense mode draws one random pair Hamiltonian per seed and reports the
/// largest residual. The pairwise count always runs and supplies the
/// witness when verification fails.
pub fn verify_schedule(schedule: &PulseSchedule, opts: &VerifyOptions) -> Result<Report, ReportError> {
    let spec = schedule.spec();
    let mode = resolve_mode(spec.hilbert_dim(), opts.mode)?;
    let pairwise = pairwise_verify(schedule);
    let (residual, pass, seeds) = match mode {
        Mode::Pairwise => (None, pairwise.pass, Vec::new()),
        Mode::Dense => {
            let mut worst: f64 = 0.0;
            for &seed in &opts.seeds {
                let h = random_pair_hamiltonian(spec, seed);
                worst = worst.max(verify_decoupling(schedule, &h, opts.tol)?.residual);
            }
            (Some(worst), worst <= opts.tol, opts.seeds.clone())
        }
    };
    Ok(Report {
        scenario: schedule.scenario().name().to_string(),
        n: spec.nodes(),
        d: spec.dim(),
        steps: schedule.num_steps(),
        distinct_pulses: schedule.distinct_pulse_count(),
        residual,
        pass,
        seeds,
        mode,
        witness: if pass { None } else { pairwise.witness.map(Witness::from) },
    })
}

/// Verifies a loaded file. A sequence that does not close, or frames that
/// disagree with the sequence, give a failing report with a witness.
pub fn verify_file(file: &LoadedFile, opts: &VerifyOptions) -> Result<Report, ReportError> {
    let failed = |witness: Witness| -> Result<Report, ReportError> {
        let mode = resolve_mode(file.spec.hilbert_dim(), opts.mode)?;
        Ok(Report {
            scenario: file.scenario.name().to_string(),
            n: file.spec.nodes(),
            d: file.spec.dim(),
            steps: file.sequence.len(),
            distinct_pulses: file.pulses.len(),
            residual: None,
            pass: false,
            seeds: Vec::new(),
            mode,
            witness: Some(witness),
        })
    };
    let schedule = match file.schedule() {
        Ok(s) => s,
        Err(CompileError::NotClosed(product)) => return failed(Witness::Closure { product }),
        Err(e) => return Err(ReportError::Schedule(e)),
    };
    if let Some(frames) = &file.frames {
        let derived = schedule.frames();
        let mismatch = (0..frames.len().max(derived.len())).find(|&i| frames.get(i) != derived.get(i));
        if let Some(index) = mismatch {
            return failed(Witness::Frame { index });
        }
    }
    verify_schedule(&schedule, opts)
}
