//! Command-line reports of n-qubit orbit dimensions: per-state dimension
//! breakdowns, reference tables with pass/fail checks, generic-state
//! sampling, entanglement witnesses, and tangent-matrix dumps.

mod report;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use orbitdim::corpus::{corpus, corpus_for_n, NamedState};
use orbitdim::lie::{tangent_matrix, GroupKind};
use orbitdim::orbit::generic_state_d1;
use orbitdim::statefile::{parse_state, state_to_file};
use orbitdim::StateError;

use report::{build_row, render_dims_text, render_json, render_table_text, render_table_tsv, Meta};

/// Largest qubit count the exact elimination handles in reasonable time.
const MAX_QUBITS: u32 = 12;

#[derive(Parser)]
#[command(
    name = "orbitdim",
    version,
    about = "Orbit dimensions and entanglement witnesses for n-qubit pure states"
)]
struct Cli {
    #[command(flatten)]
    globals: Globals,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Globals {
    /// Master seed for all randomized sampling
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Principal-orbit trials per state
    #[arg(long, global = true, default_value_t = 5)]
    trials: u32,

    /// Entry bound for random Gaussian-integer sampling
    #[arg(long = "ilo-range", global = true, default_value_t = 9)]
    ilo_range: u32,

    /// Cross-validate every exact rank against the SVD path
    #[arg(long = "float-check", global = true)]
    float_check: bool,

    /// Emit JSON instead of the text table
    #[arg(long, global = true, conflicts_with = "tsv")]
    json: bool,

    /// Emit tab-separated values instead of the text table
    #[arg(long, global = true)]
    tsv: bool,
}

#[derive(Args)]
struct StateSource {
    /// Catalog name, e.g. GHZ3, chi4, A-GHZ, W5
    #[arg(long, required_unless_present = "file", conflicts_with = "file")]
    name: Option<String>,

    /// JSON state file
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    #[value(name = "GL", alias = "gl")]
    Gl,
    #[value(name = "SL", alias = "sl")]
    Sl,
    #[value(name = "U2", alias = "u2")]
    U2,
    #[value(name = "SU2", alias = "su2")]
    Su2,
}

impl From<GroupArg> for GroupKind {
    fn from(arg: GroupArg) -> Self {
        match arg {
            GroupArg::Gl => GroupKind::GL,
            GroupArg::Sl => GroupKind::SL,
            GroupArg::U2 => GroupKind::U2,
            GroupArg::Su2 => GroupKind::SU2,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Report orbit dimensions and class dimensions for one state
    Dims {
        #[command(flatten)]
        source: StateSource,

        /// Restrict the per-group listing (repeatable); default is all four
        #[arg(long = "group", value_enum)]
        groups: Vec<GroupArg>,
    },

    /// Reproduce the reference table for a qubit count (1-4); 5 and up
    /// emit GHZ/W prediction rows
    Table {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=MAX_QUBITS as i64))]
        n: u32,
    },

    /// Sample a random ket and report the dimension of its SLOCC class
    Generic {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=MAX_QUBITS as i64))]
        n: u32,
    },

    /// Print only the entanglement witnesses: W1 and the D2 ladder label
    Witness {
        #[command(flatten)]
        source: StateSource,
    },

    /// Dump the tangent matrix of a state as TSV (debugging aid)
    DumpTangent {
        #[command(flatten)]
        source: StateSource,

        #[arg(long, value_enum, default_value = "GL")]
        group: GroupArg,
    },
}

#[derive(Debug)]
enum CliError {
    /// Exit 2: bad input documents.
    Parse(String),
    /// Exit 3: name not in the catalog.
    UnknownName(String),
    /// Exit 1: computed values disagree with the reference table.
    Mismatch,
    /// Exit 1: float path disagrees with the exact path.
    FloatMismatch(String),
    /// Exit 1: anything else.
    Failure(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::UnknownName(_) => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::UnknownName(name) => write!(f, "unknown state name {name:?}"),
            CliError::Mismatch => write!(f, "computed values do not match the reference table"),
            CliError::FloatMismatch(msg) => write!(f, "float cross-check failed: {msg}"),
            CliError::Failure(msg) => write!(f, "{msg}"),
        }
    }
}

fn load_state(source: &StateSource) -> Result<NamedState, CliError> {
    let state = if let Some(name) = &source.name {
        corpus(name).map_err(|err| match err {
            StateError::UnknownName { name } => CliError::UnknownName(name),
            other => CliError::Parse(other.to_string()),
        })?
    } else {
        let path = source.file.as_ref().expect("clap enforces name xor file");
        let text = std::fs::read_to_string(path)
            .map_err(|err| CliError::Parse(format!("{}: {err}", path.display())))?;
        let ket = parse_state(&text)
            .map_err(|err| CliError::Parse(format!("{}: {err}", path.display())))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "state".to_owned());
        NamedState {
            name,
            ket,
            expected: None,
            expected_ket: None,
        }
    };
    if state.ket.n() > MAX_QUBITS {
        return Err(CliError::Failure(format!(
            "{}: {} qubits exceeds the supported maximum of {MAX_QUBITS}",
            state.name,
            state.ket.n()
        )));
    }
    Ok(state)
}

fn meta(globals: Globals) -> Meta {
    Meta {
        seed: globals.seed,
        trials: globals.trials,
        ilo_range: globals.ilo_range,
    }
}

fn cmd_dims(globals: Globals, source: &StateSource, groups: &[GroupArg]) -> Result<(), CliError> {
    let state = load_state(source)?;
    let meta = meta(globals);
    let row = build_row(&state, meta, globals.float_check)?;
    if let Some(warning) = &row.warning {
        eprintln!("warning: {warning}");
    }
    if globals.json {
        print!("{}", render_json(std::slice::from_ref(&row), meta));
    } else if globals.tsv {
        print!("{}", render_table_tsv(std::slice::from_ref(&row)));
    } else {
        let groups: Vec<GroupKind> = if groups.is_empty() {
            GroupKind::ALL.to_vec()
        } else {
            groups.iter().copied().map(Into::into).collect()
        };
        print!("{}", render_dims_text(&row, meta, &groups));
    }
    Ok(())
}

fn cmd_table(globals: Globals, n: u32) -> Result<(), CliError> {
    let states = corpus_for_n(n).map_err(|err| CliError::Failure(err.to_string()))?;
    let meta = meta(globals);
    let mut rows = Vec::with_capacity(states.len());
    for state in &states {
        let row = build_row(state, meta, globals.float_check)?;
        if let Some(warning) = &row.warning {
            eprintln!("warning: {}: {warning}", row.label);
        }
        rows.push(row);
    }
    if globals.json {
        print!("{}", render_json(&rows, meta));
    } else if globals.tsv {
        print!("{}", render_table_tsv(&rows));
    } else {
        print!("{}", render_table_text(&rows, meta));
    }
    if rows.iter().any(|row| row.pass == Some(false)) {
        return Err(CliError::Mismatch);
    }
    Ok(())
}

/// Reference values for the dimension of the largest SLOCC class.
fn generic_reference(n: u32) -> Option<usize> {
    match n {
        1 => Some(2),
        2 => Some(6),
        3 => Some(14),
        4 => Some(24),
        _ => None,
    }
}

fn cmd_generic(globals: Globals, n: u32) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(globals.seed);
    let (ket, d1) = generic_state_d1(n, &mut rng, globals.ilo_range)
        .map_err(|err| CliError::Failure(err.to_string()))?;
    if globals.float_check {
        let m = orbitdim::orbit::state_matrix(&ket, GroupKind::GL);
        let exact = orbitdim::rank::exact_rank(&m).rank;
        match orbitdim::rank::float_rank_default(&m) {
            Ok(float) if float.rank == exact => {}
            Ok(float) => {
                return Err(CliError::FloatMismatch(format!(
                    "GL state matrix: exact rank {exact} but float rank {}",
                    float.rank
                )))
            }
            Err(err) => eprintln!("warning: float path: {err}; exact rank {exact} stands"),
        }
    }
    let reference = generic_reference(n);
    if globals.json {
        #[derive(Serialize)]
        struct GenericReport {
            meta: Meta,
            n: u32,
            representative: String,
            state: orbitdim::StateFile,
            d1: usize,
            reference: Option<usize>,
            prediction: bool,
        }
        let doc = GenericReport {
            meta: meta(globals),
            n,
            representative: ket.to_string(),
            state: state_to_file(&ket),
            d1,
            reference,
            prediction: reference.is_none(),
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("report serializes infallibly")
        );
    } else {
        println!("n={} seed={} ilo-range={}", n, globals.seed, globals.ilo_range);
        println!("ket: {ket}");
        println!("D1={d1}");
        match reference {
            Some(value) => println!("reference: {value} (generic {n}-qubit class)"),
            None => println!("prediction: no reference value for n={n}"),
        }
    }
    Ok(())
}

fn cmd_witness(globals: Globals, source: &StateSource) -> Result<(), CliError> {
    let state = load_state(source)?;
    let meta = meta(globals);
    let row = build_row(&state, meta, globals.float_check)?;
    if let Some(warning) = &row.warning {
        eprintln!("warning: {warning}");
    }
    let ladder = row.ladder.unwrap_or("unclassified");
    if globals.json {
        #[derive(Serialize)]
        struct WitnessReport<'a> {
            meta: Meta,
            label: &'a str,
            w1: usize,
            d2: usize,
            ladder: Option<&'static str>,
        }
        let doc = WitnessReport {
            meta,
            label: &row.label,
            w1: row.w1,
            d2: row.d2,
            ladder: row.ladder,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("report serializes infallibly")
        );
    } else {
        let kind = if row.w1 == 2 { "GHZ-type" } else { "none" };
        println!(
            "{}: W1={} ({kind})  D2={}  type={ladder}",
            row.label, row.w1, row.d2
        );
    }
    Ok(())
}

fn cmd_dump_tangent(source: &StateSource, group: GroupArg) -> Result<(), CliError> {
    let state = load_state(source)?;
    print!("{}", tangent_matrix(&state.ket, group.into()).to_tsv());
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Dims { source, groups } => cmd_dims(cli.globals, source, groups),
        Command::Table { n } => cmd_table(cli.globals, *n),
        Command::Generic { n } => cmd_generic(cli.globals, *n),
        Command::Witness { source } => cmd_witness(cli.globals, source),
        Command::DumpTangent { source, group } => cmd_dump_tangent(source, *group),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
