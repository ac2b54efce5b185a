//! `flab`: check, solve and convert fuzzy argumentation systems.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fuzzy_labeling::classical::{af_to_fas, clab_to_flab};
use fuzzy_labeling::extension::{enumerate_fextensions, ext_to_flab, flab_to_ext, FExtensionKind};
use fuzzy_labeling::io::{
    parse_af, parse_classical_labeling, parse_extension, parse_fas, parse_labeling, render_extension, render_fas,
    render_labeling, render_report, CheckReport, ExtensionSetReport, LabelingSetReport, Report, ValuesReport,
};
use fuzzy_labeling::principles::{
    all_cells, sweep, sweep_table, InstanceFamily, PrincipleId, SweepRow, SweepTable, SWEEP_NOTE,
};
use fuzzy_labeling::semantics::characteristic_values;
use fuzzy_labeling::{check_profile, is_labeling, solve, Error, Fas, Limits, PostulateId, SemanticsId};

#[derive(Parser)]
#[command(
    name = "flab",
    version,
    about = "Fuzzy labeling semantics for fuzzy argumentation systems"
)]
struct Cli {
    /// Largest system (in arguments) that may be enumerated.
    #[arg(long, global = true, env = "FLAB_MAX_ENUM", default_value_t = 10)]
    max_enum: usize,

    /// Print aligned tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a labeling against a semantics or a list of postulates.
    Check {
        fas: PathBuf,
        labeling: PathBuf,
        #[arg(short, long)]
        semantics: Option<SemanticsId>,
        /// Comma-separated postulates, e.g. BP,RP,WP. Defaults to all seven.
        #[arg(short, long, value_delimiter = ',')]
        postulates: Vec<PostulateId>,
    },
    /// Compute the labelings of a semantics.
    Solve {
        fas: PathBuf,
        #[arg(short, long)]
        semantics: SemanticsId,
    },
    /// Enumerate f-extensions of a kind.
    Extensions {
        fas: PathBuf,
        #[arg(short, long)]
        kind: FExtensionKind,
    },
    /// Convert between documents.
    #[command(subcommand)]
    Convert(Convert),
    /// Sweep the principles over a seeded family of random systems.
    Principles(PrinciplesArgs),
    /// Print the characteristic value set of a system.
    EnumerateValues { fas: PathBuf },
}

#[derive(Subcommand)]
enum Convert {
    /// Acceptability part of a labeling, as an f-extension.
    Lab2ext { labeling: PathBuf },
    /// Labeling induced by an f-extension.
    Ext2lab { fas: PathBuf, extension: PathBuf },
    /// Classical framework to a system with all degrees 1.
    Af2fas { af: PathBuf },
    /// Classical labeling to a fuzzy labeling.
    Clab2flab { labeling: PathBuf },
}

#[derive(Args)]
struct PrinciplesArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 500)]
    count: usize,
    #[arg(long, default_value_t = 5)]
    max_args: usize,
    /// Restrict to one semantics.
    #[arg(short, long)]
    semantics: Option<SemanticsId>,
    /// Restrict to one principle.
    #[arg(short, long)]
    principle: Option<PrincipleId>,
}

enum Failure {
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: Result<T, Error>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_fas(path: &Path) -> Result<Fas, Failure> {
    Ok(with_path(path, parse_fas(&read(path)?))?.fas)
}

struct Output {
    text: String,
    findings: bool,
}

fn report<R: Report>(r: &R, pretty: bool) -> Output {
    Output {
        text: render_report(r, pretty),
        findings: r.has_findings(),
    }
}

fn document(text: String) -> Output {
    Output { text, findings: false }
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let limits = Limits {
        max_args: cli.max_enum,
        ..Limits::default()
    };
    match cli.command {
        Command::Check {
            fas,
            labeling,
            semantics,
            postulates,
        } => {
            let f = load_fas(&fas)?;
            let lab = with_path(&labeling, parse_labeling(&read(&labeling)?))?.labeling;
            let profile: Vec<PostulateId> = match (&semantics, postulates.is_empty()) {
                (_, false) => postulates,
                (Some(s), true) => s.profile().to_vec(),
                (None, true) => PostulateId::ALL.to_vec(),
            };
            let reports = check_profile(&f, &lab, &profile)?;
            let member = semantics.map(|s| is_labeling(&f, &lab, s, &limits)).transpose()?;
            Ok(report(
                &CheckReport {
                    semantics,
                    member,
                    postulates: reports,
                },
                cli.pretty,
            ))
        }
        Command::Solve { fas, semantics } => {
            let f = load_fas(&fas)?;
            let set = solve(&f, semantics, &limits)?;
            Ok(report(&LabelingSetReport::new(semantics, set), cli.pretty))
        }
        Command::Extensions { fas, kind } => {
            let f = load_fas(&fas)?;
            let exts = enumerate_fextensions(&f, kind, &limits)?;
            Ok(report(&ExtensionSetReport::new(kind, exts), cli.pretty))
        }
        Command::Convert(c) => convert(c),
        Command::Principles(args) => {
            let family = InstanceFamily {
                seed: args.seed,
                count: args.count,
                max_args: args.max_args,
                ..InstanceFamily::default()
            };
            let table = if args.semantics.is_none() && args.principle.is_none() {
                sweep_table(&family, &limits)?
            } else {
                let cells: Vec<_> = all_cells()
                    .into_iter()
                    .filter(|(s, p)| args.semantics.is_none_or(|x| x == *s) && args.principle.is_none_or(|x| x == *p))
                    .collect();
                let verdicts = sweep(&family, &cells, &limits)?;
                let mut rows: Vec<SweepRow> = Vec::new();
                for v in verdicts {
                    match rows.last_mut() {
                        Some(r) if r.semantics == v.semantics => r.cells.push(v),
                        _ => rows.push(SweepRow {
                            semantics: v.semantics,
                            cells: vec![v],
                        }),
                    }
                }
                let principles = match args.principle {
                    Some(p) => vec![p],
                    None => PrincipleId::ALL.to_vec(),
                };
                SweepTable {
                    family,
                    note: SWEEP_NOTE,
                    principles,
                    rows,
                }
            };
            Ok(report(&table, cli.pretty))
        }
        Command::EnumerateValues { fas } => {
            let f = load_fas(&fas)?;
            Ok(report(&ValuesReport::new(characteristic_values(&f)), cli.pretty))
        }
    }
}

fn convert(c: Convert) -> Result<Output, Failure> {
    Ok(document(match c {
        Convert::Lab2ext { labeling } => {
            let lab = with_path(&labeling, parse_labeling(&read(&labeling)?))?.labeling;
            render_extension(&flab_to_ext(&lab))
        }
        Convert::Ext2lab { fas, extension } => {
            let f = load_fas(&fas)?;
            let ext = with_path(&extension, parse_extension(&read(&extension)?))?;
            render_labeling(&ext_to_flab(&f, &ext)?)
        }
        Convert::Af2fas { af } => render_fas(&af_to_fas(&with_path(&af, parse_af(&read(&af)?))?)),
        Convert::Clab2flab { labeling } => {
            let lab = with_path(&labeling, parse_classical_labeling(&read(&labeling)?))?;
            render_labeling(&clab_to_flab(&lab))
        }
    }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.findings {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
