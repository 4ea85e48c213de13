//! Command-line interface: counting, enumeration, verification, rendering,
//! and tabulation over the library.
//!
//! Output conventions, shared by every subcommand:
//!
//! * JSON and JSONL put every numeric value in a string, so consumers are
//!   never exposed to 53-bit float truncation; booleans stay booleans.
//! * Enumeration-backed commands guard on the total word count
//!   `binomial(m + n, n)` against `--limit` before doing any work.
//! * Words are accepted in the UR, parenthesis, and bead alphabets and are
//!   normalized to UR on output.
//! * Output is deterministic for fixed arguments; `verify --timings` is the
//!   one opt-in exception.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gencat::exactmath::{binomial, c_gen, q_catalan_normalized, GridShape};
use gencat::necklaces::{enumerate_necklaces, enumerate_necklaces_fast, Necklace};
use gencat::paths::{enumerate_dyck, BinaryWord, DyckPath};
use gencat::render::{
    render_gallery, render_necklace, render_path, GalleryOptions, NecklaceOptions, PathOptions,
};
use gencat::verify::{run_all, shapes_up_to, CheckId, TheoremReport};
use gencat::{Error, Int};

const DEFAULT_LIMIT: u64 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "gencat",
    version,
    about = "Exact counting and enumeration of rational Dyck paths, binary necklaces, and marked necklaces"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Closed-form and enumerated counts for one shape
    Count {
        m: u64,
        n: u64,
        /// Refuse enumeration when binomial(m + n, n) exceeds this
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Coefficients of the normalized q-analogue and its value at q = 1
    Qcat {
        m: u64,
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// All Dyck paths of the shape as JSONL, lexicographic
    Paths {
        m: u64,
        n: u64,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: u64,
    },
    /// All necklaces of the shape as JSONL, lexicographic
    Necklaces {
        m: u64,
        n: u64,
        /// One row per marked necklace instead of per necklace
        #[arg(long)]
        marked: bool,
        /// Use the recursive generator instead of the word filter
        #[arg(long)]
        fast: bool,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: u64,
    },
    /// Run the identity checks over all shapes up to a size bound
    Verify {
        #[arg(long, default_value_t = 14)]
        max_sum: u64,
        /// Comma-separated subset of theorem1,theorem2,theorem3,lemma,orbit,qcat
        #[arg(long, default_value = "all")]
        checks: String,
        /// Include per-check wall time (makes output non-reproducible)
        #[arg(long)]
        timings: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Render an SVG diagram
    Render {
        #[command(subcommand)]
        what: RenderCmd,
    },
    /// CSV table of c_gen over all shapes up to a size bound
    Table {
        #[arg(long, default_value_t = 14)]
        max_sum: u64,
    },
}

#[derive(Subcommand)]
enum RenderCmd {
    /// A Dyck path on its grid with anchors marked
    Path {
        /// Word in UR, parenthesis, or bead alphabet
        word: String,
        /// Rows; inferred from the word when omitted
        m: Option<u64>,
        /// Columns; inferred from the word when omitted
        n: Option<u64>,
        /// Output file (stdout when omitted); written via temp file + rename
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// A necklace as beads on a circle with block separators
    Necklace {
        word: String,
        m: Option<u64>,
        n: Option<u64>,
        /// Highlight this distinguishable block
        #[arg(long)]
        mark: Option<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Every necklace of a shape with its marked variants and Dyck paths
    Gallery {
        m: u64,
        n: u64,
        /// Refuse layouts with more necklace rows than this
        #[arg(long, default_value_t = 64)]
        cap: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.cmd {
        Cmd::Count { m, n, limit, format } => cmd_count(m, n, limit, format)?,
        Cmd::Qcat { m, n, format } => cmd_qcat(m, n, format)?,
        Cmd::Paths { m, n, limit } => cmd_paths(m, n, limit)?,
        Cmd::Necklaces {
            m,
            n,
            marked,
            fast,
            limit,
        } => cmd_necklaces(m, n, marked, fast, limit)?,
        Cmd::Verify {
            max_sum,
            checks,
            timings,
            format,
        } => return cmd_verify(max_sum, &checks, timings, format),
        Cmd::Render { what } => cmd_render(what)?,
        Cmd::Table { max_sum } => cmd_table(max_sum)?,
    }
    Ok(ExitCode::SUCCESS)
}

/// Word count of the shape if it is within the enumeration limit.
fn guarded_word_count(shape: GridShape, limit: u64) -> Result<Int, Error> {
    let words = binomial::<Int>(shape.total(), shape.n())?;
    if words > Int::from(limit) {
        return Err(Error::EnumerationLimit {
            m: shape.m(),
            n: shape.n(),
            words: words.to_string(),
            limit: limit.to_string(),
        });
    }
    Ok(words)
}

#[derive(Serialize)]
struct CountRow {
    m: String,
    n: String,
    gcd: String,
    block_length: String,
    c_gen: String,
    words: String,
    dyck_count: String,
    necklace_count: String,
    marked_count: String,
}

fn cmd_count(m: u64, n: u64, limit: u64, format: Format) -> anyhow::Result<()> {
    let shape = GridShape::new(m, n)?;
    let words = guarded_word_count(shape, limit)?;
    let c = c_gen::<Int>(shape)?;
    let dyck_count = enumerate_dyck(shape).count() as u64;
    let mut necklace_count = 0u64;
    let mut marked_count = 0u64;
    for necklace in enumerate_necklaces(shape) {
        necklace_count += 1;
        marked_count += necklace.distinguishable_blocks().len() as u64;
    }
    let row = CountRow {
        m: m.to_string(),
        n: n.to_string(),
        gcd: shape.gcd().to_string(),
        block_length: shape.block_len().to_string(),
        c_gen: c.to_string(),
        words: words.to_string(),
        dyck_count: dyck_count.to_string(),
        necklace_count: necklace_count.to_string(),
        marked_count: marked_count.to_string(),
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string(&row)?),
        Format::Text => {
            println!("m = {}", row.m);
            println!("n = {}", row.n);
            println!("gcd = {}", row.gcd);
            println!("block_length = {}", row.block_length);
            println!("c_gen = {}", row.c_gen);
            println!("words = {}", row.words);
            println!("dyck_count = {}", row.dyck_count);
            println!("necklace_count = {}", row.necklace_count);
            println!("marked_count = {}", row.marked_count);
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct QcatRow {
    m: String,
    n: String,
    coefficients: Vec<String>,
    value_at_one: String,
}

fn cmd_qcat(m: u64, n: u64, format: Format) -> anyhow::Result<()> {
    let shape = GridShape::new(m, n)?;
    let poly = q_catalan_normalized::<Int>(shape)?;
    let coefficients: Vec<String> = poly.coeffs().iter().map(Int::to_string).collect();
    let value = poly.eval_one();
    match format {
        Format::Json => {
            let row = QcatRow {
                m: m.to_string(),
                n: n.to_string(),
                coefficients,
                value_at_one: value.to_string(),
            };
            println!("{}", serde_json::to_string(&row)?);
        }
        Format::Text => {
            println!("coefficients = [{}]", coefficients.join(", "));
            println!("value_at_one = {value}");
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct PathRow {
    word: String,
    anchors: Vec<[String; 2]>,
    a: String,
    w_p: String,
}

impl PathRow {
    fn new(path: &DyckPath) -> Self {
        PathRow {
            word: path.word().to_string(),
            anchors: path
                .anchors()
                .iter()
                .map(|&(x, y)| [x.to_string(), y.to_string()])
                .collect(),
            a: path.anchor_count().to_string(),
            w_p: path.anchored_weight().to_string(),
        }
    }
}

fn cmd_paths(m: u64, n: u64, limit: u64) -> anyhow::Result<()> {
    let shape = GridShape::new(m, n)?;
    guarded_word_count(shape, limit)?;
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    for path in enumerate_dyck(shape) {
        let row = PathRow::new(&path);
        writeln!(out, "{}", serde_json::to_string(&row)?)?;
    }
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct NecklaceRow {
    canonical: String,
    period: String,
    r: String,
    w_n: String,
    blocks: Vec<String>,
    distinguishable: Vec<String>,
    orbit_size: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    mark: Option<String>,
}

impl NecklaceRow {
    fn new(necklace: &Necklace, mark: Option<usize>) -> Result<Self, Error> {
        Ok(NecklaceRow {
            canonical: necklace.canonical().to_string(),
            period: necklace.period().to_string(),
            r: necklace.symmetry_order().to_string(),
            w_n: necklace.weight()?.to_string(),
            blocks: necklace.blocks().iter().map(BinaryWord::to_string).collect(),
            distinguishable: necklace
                .distinguishable_blocks()
                .iter()
                .map(usize::to_string)
                .collect(),
            orbit_size: necklace.orbit_size().to_string(),
            mark: mark.map(|j| j.to_string()),
        })
    }
}

fn cmd_necklaces(m: u64, n: u64, marked: bool, fast: bool, limit: u64) -> anyhow::Result<()> {
    let shape = GridShape::new(m, n)?;
    guarded_word_count(shape, limit)?;
    let necklaces: Box<dyn Iterator<Item = Necklace>> = if fast {
        Box::new(enumerate_necklaces_fast(shape).into_iter())
    } else {
        Box::new(enumerate_necklaces(shape))
    };
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    for necklace in necklaces {
        if marked {
            for mark in necklace.distinguishable_blocks() {
                let row = NecklaceRow::new(&necklace, Some(mark))?;
                writeln!(out, "{}", serde_json::to_string(&row)?)?;
            }
        } else {
            let row = NecklaceRow::new(&necklace, None)?;
            writeln!(out, "{}", serde_json::to_string(&row)?)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn parse_checks(arg: &str) -> Result<Vec<CheckId>, Error> {
    if arg.trim().eq_ignore_ascii_case("all") {
        return Ok(CheckId::ALL.to_vec());
    }
    arg.split(',').map(|part| part.trim().parse()).collect()
}

fn verify_text_line(report: &TheoremReport, timings: bool) -> String {
    let status = if report.pass { "pass" } else { "FAIL" };
    let mut line = format!(
        "{} ({}, {}): {} expected={} observed={} count={}",
        report.check,
        report.shape.m(),
        report.shape.n(),
        status,
        report.expected,
        report.observed,
        report.enumerated_count,
    );
    if let Some(cx) = &report.counterexample {
        line.push_str(&format!(" counterexample={cx}"));
    }
    if timings {
        line.push_str(&format!(" elapsed_ms={}", report.elapsed.as_millis()));
    }
    line
}

fn cmd_verify(max_sum: u64, checks: &str, timings: bool, format: Format) -> anyhow::Result<ExitCode> {
    let checks = parse_checks(checks)?;
    let run = run_all(max_sum, &checks)?;
    {
        let stdout = io::stdout().lock();
        let mut out = BufWriter::new(stdout);
        for report in &run.reports {
            match format {
                Format::Json => writeln!(out, "{}", report.to_json(timings))?,
                Format::Text => writeln!(out, "{}", verify_text_line(report, timings))?,
            }
        }
        out.flush()?;
    }
    let passed = run.reports.iter().filter(|r| r.pass).count();
    eprintln!(
        "verify: {passed}/{} checks passed over {} shapes (max_sum {max_sum})",
        run.reports.len(),
        shapes_up_to(max_sum).len(),
    );
    Ok(if run.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn word_shape(word: &BinaryWord, m: Option<u64>, n: Option<u64>) -> anyhow::Result<GridShape> {
    match (m, n) {
        (Some(m), Some(n)) => Ok(GridShape::new(m, n)?),
        (None, None) => Ok(word.shape()?),
        _ => bail!("give both m and n, or neither to infer them from the word"),
    }
}

fn emit_svg(svg: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        None => {
            print!("{svg}");
            Ok(())
        }
        Some(path) => {
            write_atomic(path, svg.as_bytes())
                .with_context(|| format!("writing {}", path.display()))
        }
    }
}

/// Readers of `path` never observe a partial document.
fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path)
}

fn cmd_render(what: RenderCmd) -> anyhow::Result<()> {
    match what {
        RenderCmd::Path { word, m, n, out } => {
            let word: BinaryWord = word.parse()?;
            let shape = word_shape(&word, m, n)?;
            let path = DyckPath::new(word, shape)?;
            let svg = render_path(&path, &PathOptions::default());
            emit_svg(&svg, out.as_deref())
        }
        RenderCmd::Necklace {
            word,
            m,
            n,
            mark,
            out,
        } => {
            let word: BinaryWord = word.parse()?;
            let shape = word_shape(&word, m, n)?;
            let necklace = Necklace::new(&word, shape)?;
            let svg = render_necklace(&necklace, mark, &NecklaceOptions::default())?;
            emit_svg(&svg, out.as_deref())
        }
        RenderCmd::Gallery { m, n, cap, out } => {
            let shape = GridShape::new(m, n)?;
            let options = GalleryOptions {
                cap,
                ..GalleryOptions::default()
            };
            let svg = render_gallery(shape, &options)?;
            emit_svg(&svg, out.as_deref())
        }
    }
}

fn cmd_table(max_sum: u64) -> anyhow::Result<()> {
    if max_sum < 2 {
        return Err(Error::VerifyRange { max_sum }.into());
    }
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    writeln!(out, "m,n,c_gen")?;
    for shape in shapes_up_to(max_sum) {
        writeln!(
            out,
            "{},{},{}",
            shape.m(),
            shape.n(),
            c_gen::<Int>(shape)?
        )?;
    }
    out.flush()?;
    Ok(())
}
