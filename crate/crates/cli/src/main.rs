//! `bktab`: enumeration, generating functions, Bender-Knuth involutions and
//! verification sweeps from the command line.
//!
//! Exit status is 0 on success, 1 for invalid input or a counterexample, and
//! 2 for usage errors (including an out-of-range `--j`).

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bktab::algebra::LaurentPolynomial;
use bktab::benderknuth::{
    bk_a_pattern, bk_a_tableau, bk_b, bk_b_tableau, bk_c_generator, bk_c_generator_tableau, bk_c_pattern_traced,
    bk_c_tableau_traced,
};
use bktab::bijections::{
    king_pattern_to_tableau, king_tableau_to_pattern, pattern_to_sot, pattern_to_tableau, sot_to_pattern,
    tableau_to_pattern,
};
use bktab::enumeration::{enum_gt, enum_king, enum_orthogonal, orthogonal, schur, symplectic};
use bktab::json::{self, Document};
use bktab::render::{render_orthogonal, render_pattern, render_tableau};
use bktab::verify::{self, Check, Config};
use bktab::{AlphabetKind, Error, Partition};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "bktab", version, about = "Tableau and Gelfand-Tsetlin pattern combinatorics for types A, B and C")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate tableaux (or patterns) of a shape.
    Enumerate {
        #[arg(long = "type", value_enum)]
        kind: TableauType,
        #[arg(long)]
        n: usize,
        /// Comma-separated parts; the empty string is the empty partition.
        #[arg(long, value_parser = parse_shape)]
        shape: Partition,
        #[arg(long, value_enum, default_value_t = EnumFormat::Count)]
        format: EnumFormat,
        /// Emit patterns instead of tableaux.
        #[arg(long)]
        patterns: bool,
    },
    /// Schur, symplectic or orthogonal polynomial of a shape.
    Poly {
        #[arg(long, value_enum)]
        family: PolyFamily,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_shape)]
        shape: Partition,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Apply a Bender-Knuth involution to a tableau or pattern file.
    Bk {
        #[arg(long, value_enum)]
        kind: BkKind,
        /// Generator index; `0` is the sign change of `x_1` for kinds b and c.
        #[arg(long)]
        j: usize,
        file: PathBuf,
        /// Also emit the four intermediate steps (kind c only).
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = DocFormat::Json)]
        format: DocFormat,
    },
    /// Run a bounded verification sweep and print a JSON report.
    Verify {
        #[arg(long, value_parser = parse_check)]
        check: Check,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_size: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Convert a tableau to its pattern or a pattern to its tableau.
    Convert {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = DocFormat::Json)]
        format: DocFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableauType {
    Ssyt,
    King,
    Orthogonal,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumFormat {
    Count,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFamily {
    Schur,
    Symplectic,
    Orthogonal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DocFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum BkKind {
    A,
    B,
    C,
}

fn parse_shape(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_check(s: &str) -> Result<Check, String> {
    s.parse::<Check>().map_err(|e| e.to_string())
}

/// Failure of a subcommand, mapped to an exit status.
enum Failure {
    Usage(String),
    Invalid(String),
    Counterexample,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::IndexOutOfRange { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Counterexample) => ExitCode::from(1),
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match command {
        Command::Enumerate { kind, n, shape, format, patterns } => {
            enumerate(&mut out, kind, n, &shape, format, patterns)?
        }
        Command::Poly { family, n, shape, format } => {
            let f = match family {
                PolyFamily::Schur => schur(n, &shape),
                PolyFamily::Symplectic => symplectic(n, &shape),
                PolyFamily::Orthogonal => orthogonal(n, &shape),
            }
            .map_err(|e| Failure::Usage(e.to_string()))?;
            write_poly(&mut out, &f, format)?;
        }
        Command::Bk { kind, j, file, trace, format } => {
            let doc = read_document(&file)?;
            let value = apply_bk(&doc, kind, j, trace, format)?;
            writeln!(out, "{value}")?;
        }
        Command::Verify { check, n, max_size, seed, samples } => {
            let report = verify::run(check, &Config { n, max_size, seed, samples });
            let value = serde_json::to_value(&report).expect("reports serialize");
            writeln!(out, "{}", json::to_canonical_string(&value))?;
            out.flush()?;
            if !report.passed {
                return Err(Failure::Counterexample);
            }
        }
        Command::Convert { file, format } => {
            let doc = read_document(&file)?;
            let converted = convert(&doc)?;
            writeln!(out, "{}", render_document(&converted, format))?;
        }
    }
    out.flush()?;
    Ok(())
}

fn read_document(path: &PathBuf) -> Result<Document, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    Ok(Document::parse(&text)?)
}

fn enumerate(
    out: &mut impl Write,
    kind: TableauType,
    n: usize,
    shape: &Partition,
    format: EnumFormat,
    patterns: bool,
) -> Result<(), Failure> {
    let usage = |e: Error| Failure::Usage(e.to_string());
    let docs: Box<dyn Iterator<Item = Document>> = match kind {
        TableauType::Ssyt => Box::new(enum_gt(n, shape).map_err(usage)?.map(Document::Gt)),
        TableauType::King => Box::new(enum_king(n, shape).map_err(usage)?.map(Document::King)),
        TableauType::Orthogonal => Box::new(enum_orthogonal(n, shape).map_err(usage)?.map(Document::Orthogonal)),
    };
    match format {
        EnumFormat::Count => writeln!(out, "{}", docs.count())?,
        EnumFormat::Json => {
            for doc in docs {
                let doc = if patterns { doc } else { convert(&doc)? };
                writeln!(out, "{}", json::to_canonical_string(&doc.to_value()))?;
            }
        }
    }
    Ok(())
}

fn write_poly(out: &mut impl Write, f: &LaurentPolynomial, format: PolyFormat) -> io::Result<()> {
    match format {
        PolyFormat::Json => writeln!(out, "{}", json::to_canonical_string(&json::poly_to_value(f))),
        PolyFormat::Text => writeln!(out, "{f}"),
    }
}

fn convert(doc: &Document) -> Result<Document, Failure> {
    Ok(match doc {
        Document::Tableau(t) => match t.kind() {
            AlphabetKind::TypeA(_) => Document::Gt(tableau_to_pattern(t)?),
            AlphabetKind::Signed(_) => Document::King(king_tableau_to_pattern(t)?),
            AlphabetKind::SignedInf(_) => Document::Orthogonal(sot_to_pattern(t)?),
        },
        Document::Gt(p) => Document::Tableau(pattern_to_tableau(p)?),
        Document::King(p) => Document::Tableau(king_pattern_to_tableau(p)),
        Document::Orthogonal(p) => Document::Tableau(pattern_to_sot(p)?),
    })
}

fn render_document(doc: &Document, format: DocFormat) -> String {
    match format {
        DocFormat::Json => json::to_canonical_string(&doc.to_value()),
        DocFormat::Text => match doc {
            Document::Tableau(t) => render_tableau(t),
            Document::Gt(p) => render_pattern(p),
            Document::King(p) => render_pattern(p.as_gt()),
            Document::Orthogonal(p) => render_orthogonal(p),
        },
    }
}

fn apply_bk(doc: &Document, kind: BkKind, j: usize, trace: bool, format: DocFormat) -> Result<String, Failure> {
    if trace && !matches!(kind, BkKind::C) {
        return Err(Failure::Usage("--trace is only available for --kind c".into()));
    }
    if trace && j == 0 {
        return Err(Failure::Usage("--trace needs 1 <= j <= n-1".into()));
    }
    let mismatch = |what: &str| Failure::Invalid(format!("--kind {what} does not apply to this input"));
    let (result, steps): (Document, Option<Vec<Value>>) = match (kind, doc) {
        (BkKind::A, Document::Gt(p)) => (Document::Gt(bk_a_pattern(p, j)?), None),
        (BkKind::A, Document::Tableau(t)) => (Document::Tableau(bk_a_tableau(t, j)?), None),
        (BkKind::A, _) => return Err(mismatch("a")),
        (BkKind::C, Document::King(p)) if trace => {
            let tr = bk_c_pattern_traced(p, j)?;
            let steps = tr.steps.iter().map(json::gt_to_value).collect();
            (Document::King(tr.result), Some(steps))
        }
        (BkKind::C, Document::King(p)) => (Document::King(bk_c_generator(p, j)?), None),
        (BkKind::C, Document::Tableau(t)) if trace => {
            let tr = bk_c_tableau_traced(t, j)?;
            let steps = tr.steps.iter().map(json::tableau_to_value).collect();
            (Document::Tableau(tr.result), Some(steps))
        }
        (BkKind::C, Document::Tableau(t)) => (Document::Tableau(bk_c_generator_tableau(t, j)?), None),
        (BkKind::C, _) => return Err(mismatch("c")),
        (BkKind::B, Document::Orthogonal(p)) => (Document::Orthogonal(bk_b(p, j)?), None),
        (BkKind::B, Document::Tableau(t)) => (Document::Tableau(bk_b_tableau(t, j)?), None),
        (BkKind::B, _) => return Err(mismatch("b")),
    };
    Ok(match (steps, format) {
        (None, f) => render_document(&result, f),
        (Some(steps), DocFormat::Json) => {
            json::to_canonical_string(&json!({ "trace": steps, "result": result.to_value() }))
        }
        (Some(steps), DocFormat::Text) => {
            let mut blocks: Vec<String> = steps
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let step = Document::from_value(v)
                        .map_or_else(|_| v.to_string(), |d| render_document(&d, DocFormat::Text));
                    format!("P{}:\n{step}", i + 1)
                })
                .collect();
            blocks.push(format!("result:\n{}", render_document(&result, DocFormat::Text)));
            blocks.join("\n\n")
        }
    })
}
