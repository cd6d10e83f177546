mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sympiso::{Error, Limits, DEFAULT_MAX_ENUM};

use report::{digest, RunReport};

#[derive(Parser, Debug)]
#[command(name = "sympiso", version, about = "Symplectic isometries, Pauli stabilizers and local Cliffords of stabilizer codes")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Largest number of candidates any exhaustive search may visit.
    #[arg(long, global = true, env = "SYMPISO_MAX_ENUM", default_value_t = DEFAULT_MAX_ENUM)]
    max_enum: u64,
    /// Worker threads for enumeration (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inspect and transform codes.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Isometry groups of codes.
    #[command(subcommand)]
    Iso(IsoCmd),
    /// Pauli operator arithmetic.
    #[command(subcommand)]
    Pauli(PauliCmd),
    /// Stabilizer groups.
    #[command(subcommand)]
    Stab(StabCmd),
    /// States, Clifford lifts and local-equivalence checks.
    #[command(subcommand)]
    Quantum(QuantumCmd),
    /// Reproduce the built-in worked examples.
    #[command(subcommand)]
    Paper(PaperCmd),
}

#[derive(Subcommand, Debug)]
pub enum CodeCmd {
    /// Self-orthogonality, self-duality, dual generators and minimum distance.
    Check { file: PathBuf },
    /// The code repeated `times` times side by side.
    Concat {
        file: PathBuf,
        #[arg(long)]
        times: usize,
    },
    /// Lift a code over F_p into the socle of Z/p^e.
    Lift {
        file: PathBuf,
        #[arg(long)]
        ring: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    Sl,
    Gl,
}

#[derive(Args, Debug)]
pub struct GroupOpts {
    /// List every group element.
    #[arg(long)]
    pub elements: bool,
}

#[derive(Subcommand, Debug)]
pub enum IsoCmd {
    /// The symplectic isometry group Symp(C).
    Symp {
        file: PathBuf,
        #[command(flatten)]
        opts: GroupOpts,
    },
    /// Isometries that are restrictions of monomial maps.
    Mon {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = FlavorArg::Sl)]
        flavor: FlavorArg,
        #[command(flatten)]
        opts: GroupOpts,
    },
    /// Symplectic and monomial isometries between two codes.
    Between {
        source: PathBuf,
        target: PathBuf,
        #[arg(long, value_enum, default_value_t = FlavorArg::Sl)]
        flavor: FlavorArg,
    },
    /// Close the monomial (or symplectic) group under an orbit action.
    Closure {
        file: PathBuf,
        /// `O` (projective points) or `O#` (pair spans).
        #[arg(long)]
        action: String,
        /// Start from the symplectic group instead of rMon_SL.
        #[arg(long)]
        symp: bool,
    },
    /// Compare ambient isometries of R^{2n} with SL-monomial matrices.
    VerifyStructure {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ring: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum PauliCmd {
    /// Product of the operators, left to right.
    Mul {
        #[arg(long, default_value = "F2")]
        ring: String,
        #[arg(required = true, num_args = 2..)]
        ops: Vec<String>,
    },
    /// Whether two operators commute.
    Commutes {
        #[arg(long, default_value = "F2")]
        ring: String,
        a: String,
        b: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum StabCmd {
    /// The stabilizer group whose Ψ-image is the code.
    FromCode { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum QuantumCmd {
    /// A basis of the code space Q(S).
    State { file: PathBuf },
    /// Realize a monomial code map by a local Clifford and a permutation.
    Lcp {
        source: PathBuf,
        target: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Try to refute local-unitary equivalence of two states (JSON states or code files).
    LuWitness { a: PathBuf, b: PathBuf },
    /// A Clifford unitary realizing a 2×2 matrix of determinant 1.
    Lift {
        /// Entries `a,b,c,d` of [[a,b],[c,d]].
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        matrix: Vec<i64>,
        #[arg(long)]
        d: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum PaperCmd {
    /// Run the worked examples against their expected values.
    Examples {
        #[arg(long)]
        only: Option<String>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::Verification(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let limits = Limits::new(cli.max_enum);
    let args = vec![format!("{:?}", cli.command)];
    let start = Instant::now();
    let (name, result) = commands::run(&cli.command, &limits);
    let (outcome, inputs) = match result {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let report = RunReport::new(name, digest(&args, &inputs), &outcome, start.elapsed());
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        Format::Text => report.text(&outcome),
    };
    let _ = std::io::stdout().write_all(text.as_bytes());
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
