//! Argument definitions and subcommand handlers.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use decouple_core::codes::{hamming_code, qr5_code, simplex_code, CodeError, LinearCode};
use decouple_core::compiler::{
    compile_bipartite, compile_qubit_network, compile_qudit_network, compile_single_node, CompileError, PulseSchedule,
};
use decouple_core::cycles::{hamilton_cycle, CycleError, CycleSpec};
use decouple_core::designs::{oa_from_code_with, DesignError, STRENGTH_COST_CAP};
use decouple_core::pauli::dense_cap;
use decouple_core::verifier::DEFAULT_TOL;
use thiserror::Error;

use crate::report::{verify_file, Mode, ModeRequest, ReportError, VerifyOptions};
use crate::schedule::{FileError, ScheduleFile};

#[derive(Debug, Parser)]
#[command(name = "decouple", version, about = "Compile and verify decoupling pulse schedules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compile a schedule file
    Compile(CompileArgs),
    /// Verify a schedule file and print a JSON report
    Verify(VerifyArgs),
    /// Print the orthogonal array of a code
    Oa(OaArgs),
    /// Inspect linear codes
    Codes {
        #[command(subcommand)]
        command: CodesCommand,
    },
    /// Print a Hamilton cycle as comma-separated generator indices
    Cycle(CycleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScenarioArg {
    Single,
    Bipartite,
    QubitNetwork,
    QuditNetwork,
}

#[derive(Debug, Args)]
pub struct CompileArgs {
    #[arg(long, value_enum)]
    pub scenario: ScenarioArg,
    /// Number of physical nodes (network scenarios)
    #[arg(long)]
    pub nodes: Option<usize>,
    /// Local dimension (single and bipartite)
    #[arg(long)]
    pub dim: Option<u32>,
    /// Qubits per node, d = 2^alpha (qudit-network)
    #[arg(long)]
    pub alpha: Option<u32>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub emit_frames: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Dense,
    Pairwise,
    Auto,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Number of random Hamiltonians; seeds 0..K
    #[arg(long, default_value_t = 5)]
    pub seeds: u64,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    pub mode: ModeArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Qr5,
    Hamming,
    Simplex,
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    /// Field order, a power of two
    #[arg(long, default_value_t = 4)]
    pub q: u32,
    #[arg(long, default_value_t = 2)]
    pub m: usize,
}

#[derive(Debug, Args)]
pub struct OaArgs {
    #[arg(long, value_enum)]
    pub code: Family,
    #[command(flatten)]
    pub params: CodeArgs,
    /// Run the strength check even above its cost cap
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Subcommand)]
pub enum CodesCommand {
    /// Print parameters, generator matrix and dual parameters
    Info {
        #[arg(long, value_enum)]
        family: Family,
        #[command(flatten)]
        params: CodeArgs,
    },
}

#[derive(Debug, Args)]
pub struct CycleArgs {
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compile(#[from] CompileError),
    #[error(transparent)]
    File(#[from] FileError),
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

/// Text for stdout and whether the command counts as a failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    /// Message for stderr.
    pub note: Option<String>,
    pub failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self {
            text,
            note: None,
            failed: false,
        }
    }
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Compile(args) => compile(&args),
        Command::Verify(args) => verify(&args),
        Command::Oa(args) => oa(&args),
        Command::Codes {
            command: CodesCommand::Info { family, params },
        } => codes_info(family, &params),
        Command::Cycle(args) => cycle(&args),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn build_schedule(args: &CompileArgs) -> Result<PulseSchedule, CliError> {
    let need_dim = || args.dim.ok_or_else(|| usage("--dim is required for this scenario"));
    let need_nodes = || args.nodes.ok_or_else(|| usage("--nodes is required for this scenario"));
    if args.alpha.is_some() && args.scenario != ScenarioArg::QuditNetwork {
        return Err(usage("--alpha only applies to --scenario qudit-network"));
    }
    match args.scenario {
        ScenarioArg::Single | ScenarioArg::Bipartite if args.nodes.is_some() => {
            return Err(usage("--nodes does not apply to single or bipartite"))
        }
        ScenarioArg::QubitNetwork | ScenarioArg::QuditNetwork if args.dim.is_some_and(|d| d != 2) => {
            return Err(usage("network scenarios use qubit label sites; omit --dim or pass 2"))
        }
        _ => {}
    }
    let schedule = match args.scenario {
        ScenarioArg::Single => compile_single_node(need_dim()?)?,
        ScenarioArg::Bipartite => compile_bipartite(need_dim()?)?,
        ScenarioArg::QubitNetwork => compile_qubit_network(need_nodes()?)?,
        ScenarioArg::QuditNetwork => {
            let alpha = args.alpha.ok_or_else(|| usage("--alpha is required for qudit-network"))?;
            compile_qudit_network(need_nodes()?, alpha)?
        }
    };
    Ok(schedule)
}

fn compile(args: &CompileArgs) -> Result<Output, CliError> {
    let text = ScheduleFile::from_schedule(&build_schedule(args)?, args.emit_frames).to_json();
    match &args.out {
        None => Ok(Output::ok(text)),
        Some(path) => {
            std::fs::write(path, text).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            Ok(Output::ok(String::new()))
        }
    }
}

fn verify(args: &VerifyArgs) -> Result<Output, CliError> {
    if !(args.tol.is_finite() && args.tol >= 0.0) {
        return Err(usage("--tol must be a finite non-negative number"));
    }
    let text = std::fs::read_to_string(&args.input).map_err(|source| CliError::Io {
        path: args.input.clone(),
        source,
    })?;
    let loaded = ScheduleFile::parse(&text)?.load()?;
    let opts = VerifyOptions {
        seeds: (0..args.seeds).collect(),
        tol: args.tol,
        mode: match args.mode {
            ModeArg::Dense => ModeRequest::Dense,
            ModeArg::Pairwise => ModeRequest::Pairwise,
            ModeArg::Auto => ModeRequest::Auto,
        },
    };
    let report = verify_file(&loaded, &opts)?;
    let note = (report.mode == Mode::Pairwise && opts.mode == ModeRequest::Auto).then(|| {
        format!(
            "pairwise-only verification: dimension {} is above the dense cap of {}",
            loaded.spec.hilbert_dim(),
            dense_cap()
        )
    });
    Ok(Output {
        text: report.to_json(),
        note,
        failed: !report.pass,
    })
}

fn family_code(family: Family, params: &CodeArgs) -> Result<LinearCode, CliError> {
    Ok(match family {
        Family::Qr5 => qr5_code(),
        Family::Hamming => hamming_code(params.q, params.m)?,
        Family::Simplex => simplex_code(params.q, params.m)?,
    })
}

fn oa(args: &OaArgs) -> Result<Output, CliError> {
    let code = family_code(args.code, &args.params)?;
    let q = code.field().order();
    let identity: Vec<u32> = (0..q).collect();
    let cap = (!args.force).then_some(STRENGTH_COST_CAP);
    match oa_from_code_with(&code, &identity, None, cap) {
        Ok(array) => Ok(Output::ok(array.to_text())),
        Err(DesignError::CostCap { cost, cap }) => Err(usage(format!(
            "strength check needs {cost} counts, above the cap of {cap}; pass --force to run it anyway"
        ))),
        Err(e) => Err(e.into()),
    }
}

fn codes_info(family: Family, params: &CodeArgs) -> Result<Output, CliError> {
    let code = family_code(family, params)?;
    let own = code.params()?;
    let dual = code.dual_code().params()?;
    Ok(Output::ok(format!(
        "{own} over GF({}), dual {dual}\n{}\n",
        code.field().order(),
        code.render_generator()
    )))
}

fn cycle(args: &CycleArgs) -> Result<Output, CliError> {
    let steps = hamilton_cycle(CycleSpec::new(args.d, args.k)?);
    Ok(Output::ok(format!("{}\n", steps.to_csv())))
}
