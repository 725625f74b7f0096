//! `nearring`: validate, classify and check finite near-rings given as
//! Cayley tables.
//!
//! Exit codes: 0 clean, 1 axiom or validation failure, 2 theorem
//! counterexample, 3 I/O or format error. With several inputs the largest
//! code wins.

mod input;
mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use nearring_core::builtin::{builtin, catalog, default_corpus};
use nearring_core::classify::{Analysis, CLASSIFY_ORDER_CAP};
use nearring_core::table_format::TableDoc;
use nearring_core::theorems::{run_suite, TheoremId};
use nearring_core::{AxiomViolation, Error, Flags, NearRing};

use input::{load, Exit, Failure};
use render::DigestRow;

#[derive(Parser)]
#[command(name = "nearring", version, about = "Finite near-ring workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Check the near-ring axioms and print the table-level flags.
    Validate {
        /// Table file, or builtin:NAME.
        file: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Per-element classification and structure flags.
    Classify {
        file: String,
        /// Label or index of a single element to profile.
        #[arg(long)]
        element: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Classify near-rings without a unity; unit and morphic columns read n/a.
        #[arg(long)]
        allow_nonunital: bool,
        /// Refuse inputs above this order.
        #[arg(long, default_value_t = CLASSIFY_ORDER_CAP, value_parser = clap::value_parser!(usize))]
        max_order: usize,
    },
    /// Run the theorem catalog. Directories are expanded to their *.json
    /// files; with no paths the builtin corpus is used.
    Verify {
        paths: Vec<String>,
        /// `all` or a comma-separated list of theorem ids.
        #[arg(long, default_value = "all")]
        theorems: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the catalog or export one entry as a table document.
    Builtin {
        #[arg(long, conflicts_with = "name")]
        list: bool,
        #[arg(required_unless_present = "list")]
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One digest row per table file in a directory.
    Corpus {
        dir: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Validate { file, format } => cmd_validate(&file, format),
        Command::Classify {
            file,
            element,
            format,
            allow_nonunital,
            max_order,
        } => cmd_classify(&file, element.as_deref(), format, allow_nonunital, max_order),
        Command::Verify {
            paths,
            theorems,
            format,
        } => cmd_verify(&paths, &theorems, format),
        Command::Builtin { list, name, out } => cmd_builtin(list, name.as_deref(), out),
        Command::Corpus { dir, format } => cmd_corpus(&dir, format),
    };
    let exit = result.unwrap_or_else(|f| {
        eprintln!("error: {f}");
        f.exit
    });
    ExitCode::from(exit as u8)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ValidateReport<'a> {
    name: &'a str,
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ring: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    flags: Option<&'a Flags>,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<&'a AxiomViolation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn cmd_validate(file: &str, format: Format) -> Result<Exit, Failure> {
    match load(file) {
        Ok(n) => {
            match format {
                Format::Json => print!(
                    "{}",
                    to_json(&ValidateReport {
                        name: n.name(),
                        valid: true,
                        order: Some(n.order()),
                        ring: Some(n.is_ring()),
                        flags: Some(n.flags()),
                        violation: None,
                        error: None,
                    })
                ),
                _ => {
                    println!("{}: valid near-ring of order {}", n.name(), n.order());
                    println!("{}", render::flags_line(&n));
                }
            }
            Ok(Exit::Clean)
        }
        Err(f) if f.exit == Exit::Axiom => {
            let violation = axiom_of(file);
            match format {
                Format::Json => print!(
                    "{}",
                    to_json(&ValidateReport {
                        name: file,
                        valid: false,
                        order: None,
                        ring: None,
                        flags: None,
                        violation: violation.as_ref(),
                        error: Some(f.message.clone()),
                    })
                ),
                _ => println!("invalid: {}", f.message),
            }
            Ok(Exit::Axiom)
        }
        Err(f) => Err(f),
    }
}

/// Re-reads a file that failed validation to recover the structured witness.
fn axiom_of(file: &str) -> Option<AxiomViolation> {
    let bytes = fs::read(file).ok()?;
    match TableDoc::parse(&bytes).ok()?.into_nearring() {
        Err(Error::Axiom(v)) => Some(v),
        _ => None,
    }
}

#[derive(Serialize)]
struct ClassifyReport<'a> {
    name: &'a str,
    order: usize,
    one: Option<usize>,
    labels: &'a [String],
    flags: &'a Flags,
    verdict: &'static str,
    structure: &'a nearring_core::classify::StructureProfile,
    elements: Vec<nearring_core::classify::ElementProfile>,
}

fn analysis<'a>(n: &'a NearRing, source: &str, max_order: usize) -> Result<Analysis<'a>, Failure> {
    Analysis::with_cap(n, true, max_order).map_err(|e| Failure::from_core(source, &e))
}

fn cmd_classify(
    file: &str,
    element: Option<&str>,
    format: Format,
    allow_nonunital: bool,
    max_order: usize,
) -> Result<Exit, Failure> {
    if max_order == 0 {
        return Err(Failure::io("--max-order must be positive"));
    }
    let n = load(file)?;
    if n.one().is_none() && !allow_nonunital {
        return Err(Failure {
            exit: Exit::Axiom,
            message: format!("{}: no multiplicative identity (pass --allow-nonunital)", n.name()),
        });
    }
    let an = analysis(&n, file, max_order)?;
    let fail = |e: Error| Failure::from_core(file, &e);

    if let Some(key) = element {
        let a = n
            .element(key)
            .ok_or_else(|| Failure::io(format!("{}: no element `{key}`", n.name())))?;
        let detail = render::ElementDetail::new(&an, an.element_profile(a).map_err(fail)?);
        match format {
            Format::Json => print!("{}", to_json(&detail)),
            Format::Csv => print!(
                "{}",
                render::classify_csv(&n, std::slice::from_ref(&detail.profile))
                    .map_err(|e| Failure::io(e.to_string()))?
            ),
            Format::Text => print!("{}", render::element_text(&n, &detail)),
        }
        return Ok(Exit::Clean);
    }

    let rows = an.element_profiles().map_err(fail)?;
    match format {
        Format::Json => print!(
            "{}",
            to_json(&ClassifyReport {
                name: n.name(),
                order: n.order(),
                one: n.one(),
                labels: n.labels(),
                flags: n.flags(),
                verdict: render::chain_verdict(an.structure()),
                structure: an.structure(),
                elements: rows,
            })
        ),
        Format::Csv => print!(
            "{}",
            render::classify_csv(&n, &rows).map_err(|e| Failure::io(e.to_string()))?
        ),
        Format::Text => print!("{}", render::classify_text(&an, &rows)),
    }
    Ok(Exit::Clean)
}

fn parse_theorems(spec: &str) -> Result<Vec<TheoremId>, Failure> {
    if spec.trim() == "all" {
        return Ok(TheoremId::ALL.to_vec());
    }
    spec.split(',')
        .map(|s| s.trim().parse::<TheoremId>().map_err(|e| Failure::io(e.to_string())))
        .collect()
}

fn cmd_verify(paths: &[String], theorems: &str, format: Format) -> Result<Exit, Failure> {
    let ids = parse_theorems(theorems)?;
    let corpus = if paths.is_empty() {
        default_corpus()
    } else {
        let mut worst = Exit::Clean;
        let mut corpus = Vec::new();
        for source in input::expand(paths)? {
            match load(&source) {
                Ok(n) => corpus.push(n),
                Err(f) => {
                    eprintln!("error: {f}");
                    worst = worst.worst(f.exit);
                }
            }
        }
        // nothing runs until every input has loaded
        if worst != Exit::Clean {
            return Ok(worst);
        }
        corpus
    };

    let suite = run_suite(&corpus, &ids);
    match format {
        Format::Json => print!("{}", to_json(&suite)),
        _ => {
            print!("{}", render::suite_text(&corpus, &suite));
            if corpus.len() > 1 {
                print!("{}", render::chain_text(&suite));
            }
        }
    }
    let mut exit = Exit::Clean;
    if suite.aggregate.failed > 0 {
        exit = exit.worst(Exit::Theorem);
    }
    if suite.aggregate.errors > 0 {
        exit = exit.worst(Exit::Io);
    }
    Ok(exit)
}

fn cmd_builtin(list: bool, name: Option<&str>, out: Option<PathBuf>) -> Result<Exit, Failure> {
    if list {
        for name in catalog() {
            println!("{name}");
        }
        return Ok(Exit::Clean);
    }
    let name = name.expect("clap requires a name without --list");
    let n = builtin(name).map_err(|e| Failure::io(e.to_string()))?;
    let doc = TableDoc::from_nearring(&n).emit();
    match out {
        Some(path) => fs::write(&path, doc).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?,
        None => print!("{doc}"),
    }
    Ok(Exit::Clean)
}

fn cmd_corpus(dir: &std::path::Path, format: Format) -> Result<Exit, Failure> {
    let files = input::json_files(dir)?;
    let mut worst = Exit::Clean;
    let mut rows = Vec::with_capacity(files.len());
    for path in files {
        let file = path
            .file_name()
            .map(|f| f.to_string_lossy().into_owned())
            .unwrap_or_default();
        let source = path.display().to_string();
        let row = load(&source).and_then(|n| {
            let an = analysis(&n, &source, CLASSIFY_ORDER_CAP)?;
            let profiles = an.element_profiles().map_err(|e| Failure::from_core(&source, &e))?;
            Ok(DigestRow::new(file.clone(), &an, &profiles))
        });
        rows.push(row.unwrap_or_else(|f| {
            worst = worst.worst(f.exit);
            DigestRow::failed(file, f.message)
        }));
    }
    match format {
        Format::Json => print!("{}", to_json(&rows)),
        Format::Csv => print!("{}", render::digest_csv(&rows).map_err(|e| Failure::io(e.to_string()))?),
        Format::Text => print!("{}", render::digest_text(&rows)),
    }
    Ok(worst)
}
