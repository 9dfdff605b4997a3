//! Command-line front end. [`run`] is the whole program minus process exit.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::correspondence::{
    classify, compose, factorize, symmetry_report, Correspondence, CorrespondenceError, Variable,
};
use crate::io::{
    classification_text, example3_discrepancy, parse_fractional_map, read_correspondence, save_matrix, symmetry_text,
    witness_text, ClassificationJson, InputError, OracleJson, Report, SymmetryJson, FIXTURES,
};
use crate::oracle::{verify_map_of_tuples, DEFAULT_TOLERANCE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "dtuple",
    version,
    about = "Decide whether a polynomial correspondence f(x, y) = 0 is a map of d-tuples"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format (default: text; json for `compose`).
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Oracle sample count.
    #[arg(long, default_value_t = 100, global = true)]
    samples: usize,
    /// Oracle chordal tolerance.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE, global = true)]
    tol: f64,
    /// Oracle seed.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Include wall-clock timings (milliseconds) in JSON reports.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct Input {
    /// File holding a matrix document (JSON) or a polynomial expression.
    #[arg(long, conflicts_with = "expr")]
    input: Option<PathBuf>,
    /// Polynomial expression, e.g. "(x*y+x+y+2)^3".
    #[arg(long)]
    expr: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify as rank 2, a perfect power of a map, or neither.
    Classify(Input),
    /// Separate variables: print Φ(x) = Ψ(y).
    Factorize(Input),
    /// Build the correspondence Φ(x) = Ψ(y) from two fractional maps.
    Compose {
        /// Φ as "num / den" in x.
        #[arg(long, requires = "psi", conflicts_with = "input")]
        phi: Option<String>,
        /// Ψ as "num / den" in y.
        #[arg(long, requires = "phi")]
        psi: Option<String>,
        /// JSON file {"phi": "...", "psi": "..."}.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Report the symmetry type of the coefficient matrix.
    Symmetry(Input),
    /// Check the tuple property numerically at random points.
    Verify(Input),
    /// Run every embedded worked example.
    Examples,
}

#[derive(Deserialize)]
struct MapPair {
    phi: String,
    psi: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self { code: EXIT_INPUT, message: message.into() }
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    out: &'a mut dyn Write,
    timings: Vec<(String, f64)>,
    started: Instant,
}

impl Ctx<'_> {
    fn json(&self, default: Format) -> bool {
        self.cli.format.unwrap_or(default) == Format::Json
    }

    fn lap(&mut self, name: &str) {
        let now = Instant::now();
        self.timings.push((format!("{name}_ms"), (now - self.started).as_secs_f64() * 1e3));
        self.started = now;
    }

    fn finish(&mut self, mut report: Report) -> std::io::Result<()> {
        if self.cli.timings {
            report.timings.extend(self.timings.drain(..));
        }
        self.out.write_all(report.to_json().as_bytes())
    }

    fn print(&mut self, text: &str) -> std::io::Result<()> {
        self.out.write_all(text.as_bytes())
    }
}

fn read_input(input: &Input) -> Result<Correspondence, Failure> {
    let (src, from_file) = match (&input.input, &input.expr) {
        (Some(path), _) => {
            let s = std::fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
            (s, true)
        }
        (None, Some(e)) => (e.clone(), false),
        (None, None) => return Err(Failure::input("provide --input <file> or --expr <expression>")),
    };
    read_correspondence(&src).map_err(|e| {
        let shown = if from_file { src.trim() } else { src.as_str() };
        let message = if shown.starts_with('{') { e.to_string() } else { e.annotate(shown) };
        Failure::input(message)
    })
}

fn io_err(e: std::io::Error) -> Failure {
    Failure { code: EXIT_INPUT, message: format!("write failed: {e}") }
}

fn cmd_classify(ctx: &mut Ctx, input: &Input) -> Result<i32, Failure> {
    let f = read_input(input)?;
    ctx.lap("parse");
    let class = classify(&f).map_err(|e| Failure::input(e.to_string()))?;
    ctx.lap("classify");
    let code = if class.is_map_of_tuples() { EXIT_OK } else { EXIT_NEGATIVE };
    if ctx.json(Format::Text) {
        let verdict = if class.is_map_of_tuples() { "map_of_tuples" } else { "not_map_of_tuples" };
        let mut report = Report::new(verdict);
        report.classification = Some(ClassificationJson::new(&class, f.degree()));
        ctx.finish(report).map_err(io_err)?;
    } else {
        ctx.print(&classification_text(&class, f.degree())).map_err(io_err)?;
    }
    Ok(code)
}

fn cmd_factorize(ctx: &mut Ctx, input: &Input) -> Result<i32, Failure> {
    let f = read_input(input)?;
    ctx.lap("parse");
    let fact = match factorize(&f) {
        Ok(fact) => fact,
        Err(CorrespondenceError::RankNotTwo { rank }) => {
            let message = format!("not separable: coefficient matrix has rank {rank}, expected 2");
            if ctx.json(Format::Text) {
                ctx.finish(Report::new("not_rank2")).map_err(io_err)?;
            } else {
                ctx.print(&format!("{message}\n")).map_err(io_err)?;
            }
            return Ok(EXIT_NEGATIVE);
        }
        Err(e) => return Err(Failure::input(e.to_string())),
    };
    ctx.lap("factorize");
    let scalar = fact.round_trip_scalar(&f).expect("factorization reproduces its source");
    if ctx.json(Format::Text) {
        let mut report = Report::new("rank2");
        report.factorization = Some((&fact).into());
        report.scalar = Some(scalar.to_string());
        ctx.finish(report).map_err(io_err)?;
    } else {
        ctx.print(&format!(
            "phi(x) = {}\npsi(y) = {}\nround-trip scalar: {scalar}\n",
            fact.phi.display_in('x'),
            fact.psi.display_in('y')
        ))
        .map_err(io_err)?;
    }
    Ok(EXIT_OK)
}

fn cmd_compose(
    ctx: &mut Ctx,
    phi: &Option<String>,
    psi: &Option<String>,
    input: &Option<PathBuf>,
) -> Result<i32, Failure> {
    let pair = match (phi, psi, input) {
        (Some(phi), Some(psi), _) => MapPair { phi: phi.clone(), psi: psi.clone() },
        (_, _, Some(path)) => {
            let s = std::fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
            serde_json::from_str(&s).map_err(|e| Failure::input(InputError::Json(e.to_string()).to_string()))?
        }
        _ => return Err(Failure::input("provide --phi and --psi, or --input <file>")),
    };
    let parse =
        |src: &str, var| parse_fractional_map(src, var, None).map_err(|e: InputError| Failure::input(e.annotate(src)));
    let phi = parse(&pair.phi, Variable::X)?;
    let psi = parse(&pair.psi, Variable::Y)?;
    let f = compose(&phi, &psi).map_err(|e| Failure::input(e.to_string()))?;
    if ctx.json(Format::Json) {
        ctx.print(&save_matrix(&f).to_json()).map_err(io_err)?;
    } else {
        ctx.print(&format!("{f}\n")).map_err(io_err)?;
    }
    Ok(EXIT_OK)
}

fn cmd_symmetry(ctx: &mut Ctx, input: &Input) -> Result<i32, Failure> {
    let f = read_input(input)?;
    ctx.lap("parse");
    let report = symmetry_report(&f);
    ctx.lap("symmetry");
    if ctx.json(Format::Text) {
        let mut r = Report::new("ok");
        r.symmetry = Some(SymmetryJson::from(&report));
        ctx.finish(r).map_err(io_err)?;
    } else {
        ctx.print(&symmetry_text(&report)).map_err(io_err)?;
    }
    Ok(EXIT_OK)
}

fn cmd_verify(ctx: &mut Ctx, input: &Input) -> Result<i32, Failure> {
    let f = read_input(input)?;
    ctx.lap("parse");
    let v = verify_map_of_tuples(&f, ctx.cli.samples, ctx.cli.tol, ctx.cli.seed)
        .map_err(|e| Failure::input(e.to_string()))?;
    ctx.lap("verify");
    let code = if v.passed { EXIT_OK } else { EXIT_NEGATIVE };
    if ctx.json(Format::Text) {
        let mut r = Report::new(if v.passed { "pass" } else { "fail" });
        r.oracle = Some(OracleJson::from(&v));
        r.witnesses.push(v.worst.clone());
        ctx.finish(r).map_err(io_err)?;
    } else {
        ctx.print(&format!(
            "{}: {} samples ({} rejected), tolerance {:e}\n{}",
            if v.passed { "PASS" } else { "FAIL" },
            v.samples,
            v.rejected,
            ctx.cli.tol,
            witness_text(&v.worst)
        ))
        .map_err(io_err)?;
    }
    Ok(code)
}

#[derive(Serialize)]
struct ExamplesReport<'a> {
    verdict: &'static str,
    fixtures: &'a [crate::io::FixtureOutcome],
    example3_discrepancy: &'a crate::io::Example3Discrepancy,
}

fn cmd_examples(ctx: &mut Ctx) -> Result<i32, Failure> {
    let outcomes: Vec<_> = FIXTURES.iter().map(|fx| fx.check(ctx.cli.samples, ctx.cli.tol, ctx.cli.seed)).collect();
    let ex3 = example3_discrepancy().map_err(|e| Failure::input(e.to_string()))?;
    let all = outcomes.iter().all(|o| o.passed());
    if ctx.json(Format::Text) {
        let report = ExamplesReport {
            verdict: if all { "pass" } else { "fail" },
            fixtures: &outcomes,
            example3_discrepancy: &ex3,
        };
        let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
        s.push('\n');
        ctx.print(&s).map_err(io_err)?;
    } else {
        let mut text = String::new();
        for o in &outcomes {
            let mark = |b: bool| if b { "ok" } else { "FAIL" };
            text.push_str(&format!(
                "{}: {} (classification {}, symmetry {}, factorization {}, oracle {})\n",
                o.name,
                if o.passed() { "PASS" } else { "FAIL" },
                mark(o.classification_ok),
                mark(o.symmetry_ok),
                o.factorization_ok.map_or("n/a", mark),
                mark(o.oracle_ok),
            ));
            for n in &o.notes {
                text.push_str(&format!("  {n}\n"));
            }
        }
        let values: Vec<String> = ex3.printed_values.iter().map(|(y, v)| format!("{v} at y = {y}")).collect();
        text.push_str(&format!(
            "example3 note: the printed y-triple (-1, -2, 4) does not solve the printed psi numerator ({}); \
             recomputed y-fiber over x = 1: [{}]\n",
            values.join(", "),
            ex3.y_fiber.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
        ));
        ctx.print(&text).map_err(io_err)?;
    }
    Ok(if all { EXIT_OK } else { EXIT_NEGATIVE })
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Ctx { cli: &cli, out, timings: Vec::new(), started: Instant::now() };
    let result = match &cli.command {
        Command::Classify(input) => cmd_classify(&mut ctx, input),
        Command::Factorize(input) => cmd_factorize(&mut ctx, input),
        Command::Compose { phi, psi, input } => cmd_compose(&mut ctx, phi, psi, input),
        Command::Symmetry(input) => cmd_symmetry(&mut ctx, input),
        Command::Verify(input) => cmd_verify(&mut ctx, input),
        Command::Examples => cmd_examples(&mut ctx),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
