//! `unitarity`: classify highest weight modules of the Hermitian real forms.
//!
//! Exit status: 0 unitary, 1 nonunitary, 2 not a parameter (or a dominant
//! weight that is not `g`-dominant), 3 usage or input errors.

mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use unitarity_core::classify::{Status, UnitarityRule};
use unitarity_core::registry;
use unitarity_core::text::parse_weight;
use unitarity_core::theta::{minimal_type, pi_types};
use unitarity_core::{Error, Family};

use output::{ClassifyReport, InfCharJson, ThetaReport};

const EXIT_UNITARY: u8 = 0;
const EXIT_NONUNITARY: u8 = 1;
const EXIT_NOT_PARAMETER: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "unitarity",
    version,
    about = "Unitarity of highest weight modules in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide unitarity of a single highest weight or infinitesimal character.
    Classify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Comma separated coordinates, e.g. "0,0,0,0,0,-4,2" or "1/2,3/2,-.5".
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value_t = Form::Lambda)]
        form: Form,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the unitary and nonunitary parameters with a given infinitesimal character.
    Infchar {
        #[command(flatten)]
        family: FamilyArgs,
        /// The g-dominant representative of the infinitesimal character.
        #[arg(long, allow_hyphen_values = true)]
        dominant: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Types of the E6 x SL(2) decomposition of the minimal representation of split E7.
    Theta {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long)]
        max_level: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the supported families.
    Families,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// so-even, so-odd, e6 or e7.
    #[arg(long)]
    family: String,
    /// Rank n for the so families.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Form {
    /// The highest weight lambda.
    Lambda,
    /// The infinitesimal character Lambda = lambda + rho.
    Infchar,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotGDominant(_) => EXIT_NOT_PARAMETER,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn resolve(args: &FamilyArgs) -> Result<(Family, Box<dyn UnitarityRule>), Failure> {
    let entry = registry::lookup(&args.family).ok_or_else(|| {
        let known: Vec<&str> = registry::names().collect();
        Failure::usage(format!(
            "unknown family `{}` (expected one of {})",
            args.family,
            known.join(", ")
        ))
    })?;
    let family = entry.family(args.n)?;
    Ok((family, registry::rule_for(family)?))
}

fn emit(text: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Failure::usage(format!("cannot write output: {e}")))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Classify {
            family,
            weight,
            form,
            format,
        } => {
            let (family, rule) = resolve(&family)?;
            let w = parse_weight(family, &weight)?;
            let verdict = match form {
                Form::Lambda => rule.classify_lambda(&w)?,
                Form::Infchar => rule.classify_inf_char(&w)?,
            };
            let report = ClassifyReport::new(family, form == Form::Lambda, &w, &verdict);
            emit(&match format {
                Format::Text => report.to_text(),
                Format::Json => output::to_json(&report),
            })?;
            Ok(match verdict.status {
                Status::Unitary => EXIT_UNITARY,
                Status::Nonunitary => EXIT_NONUNITARY,
                Status::NotParameter => EXIT_NOT_PARAMETER,
            })
        }
        Command::Infchar {
            family,
            dominant,
            format,
        } => {
            let (family, rule) = resolve(&family)?;
            let w = parse_weight(family, &dominant)?;
            let report = rule.inf_char_report(&w)?;
            emit(&match format {
                Format::Text => output::inf_char_text(family, &report),
                Format::Json => output::to_json(&InfCharJson::new(family, &report)),
            })?;
            Ok(EXIT_UNITARY)
        }
        Command::Theta {
            m,
            max_level,
            format,
        } => {
            let report = ThetaReport::new(m, max_level, pi_types(m, max_level), minimal_type(m));
            emit(&match format {
                Format::Text => report.to_text(),
                Format::Json => output::to_json(&report),
            })?;
            Ok(EXIT_UNITARY)
        }
        Command::Families => {
            let mut text = String::new();
            for e in registry::ENTRIES.iter() {
                let rank = if e.needs_rank { " (needs --n)" } else { "" };
                text.push_str(&format!("{:<8} {}{rank}\n", e.name, e.summary));
            }
            emit(&text)?;
            Ok(EXIT_UNITARY)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
