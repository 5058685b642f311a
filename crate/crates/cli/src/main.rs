use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use borel_cli::commands::{self, Method, Outcome, ReductionArgs};
use borel_cli::{exit_code, parse_ideal, IdealFile};
use borel_core::{Result, Subject, TermOrder};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "borel", version, about = "Initial ideals, Betti and annihilator numbers, reduction numbers and Pommaret bases")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Add wall-clock time to the JSON report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SubjectArg {
    Ideal,
    Quotient,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Koszul,
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// Borel type, stability and associated primes of the ideal (or of in(I)).
    Classify { file: PathBuf },
    /// Initial ideal.
    Initial {
        file: PathBuf,
        #[arg(long, default_value = "revlex")]
        order: TermOrder,
    },
    /// Sampled generic initial ideal (revlex).
    Gin {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Graded Betti diagram.
    Betti {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "ideal")]
        subject: SubjectArg,
        #[arg(long, value_enum, default_value = "koszul")]
        method: MethodArg,
        /// Use the revlex initial ideal of the input.
        #[arg(long)]
        initial: bool,
        /// Only internal degrees up to this bound.
        #[arg(long)]
        jmax: Option<u32>,
    },
    /// Annihilator numbers along x_n, ..., x_1.
    Ann { file: PathBuf },
    /// Extremal Betti and annihilator numbers and their correspondence.
    Extremal { file: PathBuf },
    /// Reduction numbers of the maximal ideal of R/I.
    Reduction {
        file: PathBuf,
        /// Comma-separated linear forms generating J.
        #[arg(long)]
        forms: Option<String>,
        /// Search this many candidate reductions.
        #[arg(long)]
        search: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated coefficient grid for --search.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        grid: Option<Vec<i64>>,
    },
    /// Pommaret basis of the ideal (or of its leading ideal).
    Pommaret {
        file: PathBuf,
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Run everything.
    Report {
        file: PathBuf,
        /// Also sample gin with this many trials.
        #[arg(long)]
        gin_trials: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Initial { .. } => "initial",
            Command::Gin { .. } => "gin",
            Command::Betti { .. } => "betti",
            Command::Ann { .. } => "ann",
            Command::Extremal { .. } => "extremal",
            Command::Reduction { .. } => "reduction",
            Command::Pommaret { .. } => "pommaret",
            Command::Report { .. } => "report",
        }
    }

    fn file(&self) -> &PathBuf {
        match self {
            Command::Classify { file }
            | Command::Initial { file, .. }
            | Command::Gin { file, .. }
            | Command::Betti { file, .. }
            | Command::Ann { file }
            | Command::Extremal { file }
            | Command::Reduction { file, .. }
            | Command::Pommaret { file, .. }
            | Command::Report { file, .. } => file,
        }
    }
}

fn load(path: &PathBuf) -> Result<IdealFile> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| borel_core::Error::Domain(format!("cannot read {}: {e}", path.display())))?;
    parse_ideal(&src)
}

fn dispatch(cmd: &Command, file: &IdealFile) -> Result<Outcome> {
    match cmd {
        Command::Classify { .. } => commands::classify(file),
        Command::Initial { order, .. } => commands::initial(file, *order),
        Command::Gin { trials, seed, .. } => commands::gin(file, *trials, *seed),
        Command::Betti { subject, method, initial, jmax, .. } => {
            let subject = match subject {
                SubjectArg::Ideal => Subject::Ideal,
                SubjectArg::Quotient => Subject::Quotient,
            };
            let method = match method {
                MethodArg::Koszul => Method::Koszul,
                MethodArg::Oracle => Method::Oracle,
            };
            commands::betti(file, subject, method, *initial, *jmax)
        }
        Command::Ann { .. } => commands::ann(file),
        Command::Extremal { .. } => commands::extremal(file),
        Command::Reduction { forms, search, seed, grid, .. } => commands::reduction(
            file,
            &ReductionArgs { forms: forms.clone(), search: *search, seed: *seed, grid: grid.clone() },
        ),
        Command::Pommaret { cap, .. } => commands::pommaret(file, *cap),
        Command::Report { gin_trials, seed, .. } => commands::report(file, gin_trials.map(|t| (t, *seed))),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let start = Instant::now();
    let run = load(cli.command.file()).and_then(|f| dispatch(&cli.command, &f).map(|o| (f, o)));
    match run {
        Ok((file, out)) => {
            if cli.json {
                let mut v = out.to_json(cli.command.name(), &file);
                if cli.timing {
                    v["elapsed_ms"] = serde_json::json!(start.elapsed().as_millis() as u64);
                }
                println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            } else {
                for w in &out.warnings {
                    eprintln!("warning: {w}");
                }
                print!("{}", out.text);
            }
            ExitCode::from(out.status.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
