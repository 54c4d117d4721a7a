use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sepindex::report::{
    analyze_cached, batch_table, catalog, dump_weights, git_check, git_text, parse_int_list, parse_support, report_csv,
    report_text, sweep, table_csv, table_json, table_text, weights_csv, weights_text, AnalysisRequest, Cache,
    OutputFormat,
};
use sepindex::reps::RepSpec;
use sepindex::{Error, Limits, TypeLetter, Weight};

#[derive(Parser)]
#[command(name = "sepindex", version, about = "Heights, torsion primes and separable indices of representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one group and representation.
    Analyze(Target),
    /// One row per group and representation.
    Table(TableArgs),
    /// List the weights of a representation.
    Weights(Target),
    /// Torus GIT on an explicit weight support.
    GitCheck(GitArgs),
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Cap applied to every size guard.
    #[arg(long)]
    cap: Option<u64>,
}

#[derive(Args)]
struct Group {
    /// Type letter A-G.
    #[arg(long = "type")]
    type_letter: char,
    #[arg(long)]
    rank: usize,
    /// root, weight, or matrix:<rows separated by ';'>.
    #[arg(long, default_value = "weight")]
    lattice: String,
    /// A prime for the verdicts.
    #[arg(long)]
    prime: Option<u64>,
}

#[derive(Args)]
struct Target {
    #[command(flatten)]
    group: Group,
    /// Representation, e.g. standard, adjoint, tensor(standard,dual(standard)).
    #[arg(long, conflicts_with = "highest_weight")]
    rep: Option<String>,
    /// Highest weight of an irreducible, e.g. 1,0,2.
    #[arg(long, allow_hyphen_values = true)]
    highest_weight: Option<String>,
    #[command(flatten)]
    common: Common,
    /// Directory for the memo cache.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    /// Groups such as A1,A2,B2; defaults to the built-in catalog.
    #[arg(long, value_delimiter = ',')]
    types: Vec<String>,
    /// Representations, separated by ';'.
    #[arg(long, value_delimiter = ';')]
    reps: Vec<String>,
    /// JSON file with an array of requests.
    #[arg(long, conflicts_with_all = ["types", "reps"])]
    requests: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct GitArgs {
    #[command(flatten)]
    group: Group,
    /// Weights separated by ';', coordinates by ',', e.g. "1,0;-1,1".
    #[arg(long, allow_hyphen_values = true)]
    support: String,
    #[command(flatten)]
    common: Common,
}

fn limits(common: &Common) -> Limits {
    common.cap.map(Limits::uniform).unwrap_or_default()
}

fn type_letter(c: char) -> Result<TypeLetter, Error> {
    TypeLetter::from_char(c).ok_or_else(|| Error::parse(0, format!("unknown type letter '{c}'")))
}

fn group_request(g: &Group, rep: RepSpec) -> Result<AnalysisRequest, Error> {
    let mut req = AnalysisRequest::new(type_letter(g.type_letter)?, g.rank, rep).with_lattice(g.lattice.parse()?);
    req.prime = g.prime;
    Ok(req)
}

fn target_request(t: &Target) -> Result<AnalysisRequest, Error> {
    let rep = match (&t.rep, &t.highest_weight) {
        (_, Some(hw)) => RepSpec::Irreducible(Weight(parse_int_list(hw, 0)?)),
        (Some(r), None) => r.parse()?,
        (None, None) => RepSpec::Standard,
    };
    let mut req = group_request(&t.group, rep)?;
    req.format = t.common.format;
    Ok(req)
}

fn cache(dir: &Option<PathBuf>) -> Result<Option<Cache>, Error> {
    dir.as_ref().map(Cache::new).transpose()
}

fn parse_group(s: &str) -> Result<(TypeLetter, usize), Error> {
    let s = s.trim();
    let mut chars = s.chars();
    let letter = chars.next().ok_or_else(|| Error::parse(0, "empty group"))?;
    let rank = chars.as_str().parse().map_err(|_| Error::parse(1, format!("bad rank in group '{s}'")))?;
    Ok((type_letter(letter.to_ascii_uppercase())?, rank))
}

fn json<T: serde::Serialize>(v: &T) -> Result<String, Error> {
    serde_json::to_string_pretty(v).map(|s| s + "\n").map_err(|e| Error::Io(e.to_string()))
}

fn run(cli: Cli) -> Result<String, Error> {
    match cli.command {
        Command::Analyze(t) => {
            let req = target_request(&t)?;
            let report = analyze_cached(&req, &limits(&t.common), cache(&t.cache_dir)?.as_ref())?;
            match t.common.format {
                OutputFormat::Json => json(&report),
                OutputFormat::Csv => report_csv(&report),
                OutputFormat::Text => Ok(report_text(&report)),
            }
        }
        Command::Table(a) => {
            let requests = if let Some(path) = &a.requests {
                let text = std::fs::read_to_string(path)?;
                serde_json::from_str(&text).map_err(|e| Error::parse(e.column(), format!("requests file: {e}")))?
            } else if a.types.is_empty() && a.reps.is_empty() {
                catalog()
            } else {
                let groups = a.types.iter().map(|g| parse_group(g)).collect::<Result<Vec<_>, _>>()?;
                let reps = if a.reps.is_empty() {
                    vec![RepSpec::Standard, RepSpec::Adjoint]
                } else {
                    a.reps.iter().map(|r| r.parse()).collect::<Result<Vec<_>, _>>()?
                };
                sweep(&groups, &reps)
            };
            let rows = batch_table(&requests, &limits(&a.common), cache(&a.cache_dir)?.as_ref());
            match a.common.format {
                OutputFormat::Json => table_json(&rows).map(|s| s + "\n"),
                OutputFormat::Csv => table_csv(&rows),
                OutputFormat::Text => Ok(table_text(&rows)),
            }
        }
        Command::Weights(t) => {
            let rows = dump_weights(&target_request(&t)?, &limits(&t.common))?;
            match t.common.format {
                OutputFormat::Json => json(&rows),
                OutputFormat::Csv => weights_csv(&rows),
                OutputFormat::Text => Ok(weights_text(&rows)),
            }
        }
        Command::GitCheck(g) => {
            let req = group_request(&g.group, RepSpec::Trivial)?;
            let support = parse_support(&g.support)?;
            let report = git_check(&req, &support, &limits(&g.common))?;
            match g.common.format {
                OutputFormat::Text => Ok(git_text(&report)),
                _ => json(&report),
            }
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse { .. } => 2,
                Error::GuardExceeded { .. } => 3,
                _ => 1,
            })
        }
    }
}
