//! Argument handling and dispatch for the `cumulants` binary.
//!
//! Every command writes a single JSON document to the output and nothing
//! else; diagnostics are the caller's business (see `main.rs`).

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use cumulants::parking::{orbit_moment_eval, volume_shape_eval, MAX_PARKING_N};
use cumulants::rational::{format_rational, parse_rational};
use cumulants::suites::{run_suite, Suite};
use cumulants::{
    boolean_convolve, boolean_from_moments, classical_convolve, classical_from_moments,
    cumulant_matrix, free_convolve, free_from_moments, gamma_convolve, generalized_cumulants,
    moments_from_boolean, moments_from_classical, moments_from_free, moments_from_generalized,
    MomentSequence, MultiplierSequence, Rational, TruncatedSeries, VerificationReport,
};

/// Largest matrix dimension accepted by `matrix`.
pub const MAX_MATRIX_DIM: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "cumulants",
    version,
    about = "Exact moment and cumulant transforms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Moments to cumulants or back.
    Transform {
        #[arg(long, value_enum)]
        theory: Theory,
        #[arg(long, value_enum)]
        direction: Direction,
        #[command(flatten)]
        io: SequenceIo,
    },
    /// Convolve two moment sequences.
    Convolve {
        #[arg(long, value_enum)]
        theory: Theory,
        #[command(flatten)]
        io: SequenceIo,
    },
    /// The cumulant matrix: entry (n, k) is the n-th cumulant induced by the
    /// constant multiplier k.
    Matrix {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        kmax: usize,
        #[command(flatten)]
        io: SequenceIo,
    },
    /// Truncated power series arithmetic.
    Series {
        #[arg(value_enum)]
        op: SeriesOp,
        #[command(flatten)]
        output: OutputArg,
        /// Series JSON file, or `-` for stdin. Repeat for binary operations.
        #[arg(long)]
        input: Vec<String>,
    },
    /// Volume and orbit polynomials evaluated at a sequence (all ones by
    /// default), for degrees 1..=n.
    Volume {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        io: SequenceIo,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputArg,
    },
}

#[derive(Debug, Args)]
pub struct SequenceIo {
    /// Multiplier sequence: a rational k, `n`, `n+j`, or a comma list.
    #[arg(long)]
    pub g: Option<String>,
    /// Truncation order; required with `--named`.
    #[arg(long)]
    pub order: Option<usize>,
    /// Moment-sequence JSON file (object or array of objects), or `-` for
    /// stdin. May be repeated.
    #[arg(long)]
    pub input: Vec<String>,
    /// Named sequence: u, chi, epsilon, ubar, uD, bell, catalan. May be
    /// repeated.
    #[arg(long)]
    pub named: Vec<String>,
    #[command(flatten)]
    pub output: OutputArg,
}

#[derive(Debug, Args)]
pub struct OutputArg {
    /// Output file, or `-` for stdout (the default).
    #[arg(long, default_value = "-")]
    pub output: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theory {
    Classical,
    Boolean,
    Free,
    Abel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// Moments to cumulants.
    M2c,
    /// Cumulants to moments.
    C2m,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesOp {
    Add,
    Mul,
    Reciprocal,
    Compose,
    Revert,
    Log,
    Exp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Lattice,
    Abel,
    Volume,
    Transport,
    Parametrization,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Lattice => Suite::Lattice,
            SuiteArg::Abel => Suite::Abel,
            SuiteArg::Volume => Suite::Volume,
            SuiteArg::Transport => Suite::Transport,
            SuiteArg::Parametrization => Suite::Parametrization,
        }
    }
}

/// What a successful run produced.
#[derive(Debug)]
pub struct Outcome {
    pub json: String,
    /// False only when a verification suite found a failure.
    pub pass: bool,
}

/// Parses a multiplier spec for sequences of the given order.
pub fn parse_multiplier(spec: &str, order: usize) -> anyhow::Result<MultiplierSequence> {
    let spec = spec.trim();
    if spec == "n" {
        return Ok(MultiplierSequence::index(order));
    }
    if let Some(rest) = spec.strip_prefix('n') {
        let shift: i64 = rest
            .trim()
            .trim_start_matches('+')
            .trim()
            .parse()
            .with_context(|| format!("bad multiplier spec {spec:?}"))?;
        return Ok(MultiplierSequence::diagonal(order, shift + 1));
    }
    if spec.contains(',') {
        let values = spec
            .split(',')
            .map(|s| parse_rational(s.trim()))
            .collect::<cumulants::Result<Vec<Rational>>>()?;
        if values.len() < order {
            bail!("multiplier list has {} values, need {order}", values.len());
        }
        return Ok(MultiplierSequence::new(values));
    }
    Ok(MultiplierSequence::constant(order, &parse_rational(spec)?))
}

fn read_source(path: &str, stdin: &mut dyn Read) -> anyhow::Result<String> {
    if path == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text).context("reading stdin")?;
        Ok(text)
    } else {
        fs::read_to_string(PathBuf::from(path)).with_context(|| format!("reading {path}"))
    }
}

/// Each source holds one JSON object or an array of them.
fn read_documents<T: serde::de::DeserializeOwned>(
    sources: &[String],
    stdin: &mut dyn Read,
) -> anyhow::Result<Vec<T>> {
    if sources.iter().filter(|s| *s == "-").count() > 1 {
        bail!("stdin can be used as input only once");
    }
    let mut out = Vec::new();
    for source in sources {
        let text = read_source(source, stdin)?;
        let value: Value =
            serde_json::from_str(&text).with_context(|| format!("parsing {source}"))?;
        let items = match value {
            Value::Array(items) => items,
            other => vec![other],
        };
        for item in items {
            out.push(serde_json::from_value(item).with_context(|| format!("parsing {source}"))?);
        }
    }
    Ok(out)
}

fn sequences(io: &SequenceIo, stdin: &mut dyn Read) -> anyhow::Result<Vec<MomentSequence>> {
    let mut out: Vec<MomentSequence> = read_documents(&io.input, stdin)?;
    for name in &io.named {
        let order = io
            .order
            .ok_or_else(|| anyhow!("--named {name} needs --order"))?;
        out.push(MomentSequence::named(name, order)?);
    }
    if let Some(order) = io.order {
        for s in &mut out {
            if s.order() < order {
                bail!("input has order {}, --order asks for {order}", s.order());
            }
            *s = s.truncate(order);
        }
    }
    Ok(out)
}

fn exactly<const K: usize>(
    mut items: Vec<MomentSequence>,
    what: &str,
) -> anyhow::Result<[MomentSequence; K]> {
    if items.len() != K {
        bail!(
            "{what} needs exactly {K} input sequence(s), got {}",
            items.len()
        );
    }
    items.truncate(K);
    Ok(items.try_into().expect("length checked"))
}

fn multiplier_for(
    theory: Theory,
    g: &Option<String>,
    order: usize,
) -> anyhow::Result<Option<MultiplierSequence>> {
    match (theory, g) {
        (Theory::Abel, Some(spec)) => Ok(Some(parse_multiplier(spec, order)?)),
        (Theory::Abel, None) => bail!("--theory abel requires --g"),
        (_, Some(_)) => bail!("--g is only meaningful with --theory abel"),
        (_, None) => Ok(None),
    }
}

fn reject_g(io: &SequenceIo, command: &str) -> anyhow::Result<()> {
    if io.g.is_some() {
        bail!("{command} does not take --g");
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string(value)?)
}

fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

fn transform(
    theory: Theory,
    direction: Direction,
    io: &SequenceIo,
    stdin: &mut dyn Read,
) -> anyhow::Result<String> {
    let [a] = exactly::<1>(sequences(io, stdin)?, "transform")?;
    let g = multiplier_for(theory, &io.g, a.order())?;
    let out = match (theory, direction) {
        (Theory::Classical, Direction::M2c) => classical_from_moments(&a),
        (Theory::Classical, Direction::C2m) => moments_from_classical(&a),
        (Theory::Boolean, Direction::M2c) => boolean_from_moments(&a),
        (Theory::Boolean, Direction::C2m) => moments_from_boolean(&a),
        (Theory::Free, Direction::M2c) => free_from_moments(&a),
        (Theory::Free, Direction::C2m) => moments_from_free(&a),
        (Theory::Abel, Direction::M2c) => generalized_cumulants(&a, &g.expect("checked"))?,
        (Theory::Abel, Direction::C2m) => moments_from_generalized(&a, &g.expect("checked"))?,
    };
    to_json(&out)
}

fn convolve(theory: Theory, io: &SequenceIo, stdin: &mut dyn Read) -> anyhow::Result<String> {
    let [a, b] = exactly::<2>(sequences(io, stdin)?, "convolve")?;
    let g = multiplier_for(theory, &io.g, a.order())?;
    let out = match theory {
        Theory::Classical => classical_convolve(&a, &b)?,
        Theory::Boolean => boolean_convolve(&a, &b)?,
        Theory::Free => free_convolve(&a, &b)?,
        Theory::Abel => gamma_convolve(&a, &b, &g.expect("checked"))?,
    };
    to_json(&out)
}

fn matrix(
    nmax: usize,
    kmax: usize,
    io: &SequenceIo,
    stdin: &mut dyn Read,
) -> anyhow::Result<String> {
    reject_g(io, "matrix")?;
    for (name, value) in [("--nmax", nmax), ("--kmax", kmax)] {
        if !(1..=MAX_MATRIX_DIM).contains(&value) {
            bail!("{name} must be between 1 and {MAX_MATRIX_DIM}, got {value}");
        }
    }
    let [a] = exactly::<1>(sequences(io, stdin)?, "matrix")?;
    to_json(&cumulant_matrix(&a, nmax, kmax)?)
}

fn series(op: SeriesOp, inputs: &[String], stdin: &mut dyn Read) -> anyhow::Result<String> {
    let items: Vec<TruncatedSeries> = read_documents(inputs, stdin)?;
    let arity = match op {
        SeriesOp::Add | SeriesOp::Mul | SeriesOp::Compose => 2,
        _ => 1,
    };
    if items.len() != arity {
        bail!(
            "series {op:?} needs exactly {arity} input series, got {}",
            items.len()
        );
    }
    let f = &items[0];
    let out = match op {
        SeriesOp::Add => f.add(&items[1])?,
        SeriesOp::Mul => f.mul(&items[1])?,
        SeriesOp::Compose => f.delta_compose(&items[1])?,
        SeriesOp::Reciprocal => f.reciprocal()?,
        SeriesOp::Revert => f.reversion()?,
        SeriesOp::Log => f.log()?,
        SeriesOp::Exp => f.exp()?,
    };
    to_json(&out)
}

#[derive(Serialize)]
struct VolumeTable {
    n: usize,
    volume: Vec<String>,
    orbit: Vec<String>,
}

fn volume(n: usize, io: &SequenceIo, stdin: &mut dyn Read) -> anyhow::Result<String> {
    reject_g(io, "volume")?;
    if !(1..=MAX_PARKING_N).contains(&n) {
        bail!("--n must be between 1 and {MAX_PARKING_N}, got {n}");
    }
    let mut items = sequences(io, stdin)?;
    let a = match items.len() {
        0 => MomentSequence::unity(n),
        1 => items.pop().expect("one item"),
        k => bail!("volume takes at most one input sequence, got {k}"),
    };
    if a.order() < n {
        bail!("input has order {}, need at least {n}", a.order());
    }
    let mut volume = Vec::with_capacity(n);
    let mut orbit = Vec::with_capacity(n);
    for k in 1..=n {
        volume.push(volume_shape_eval(&a, k)?);
        orbit.push(orbit_moment_eval(&a, k)?);
    }
    to_json(&VolumeTable {
        n,
        volume: strings(&volume),
        orbit: strings(&orbit),
    })
}

fn verify(suite: Suite, n: usize) -> anyhow::Result<(String, bool)> {
    let reports: Vec<VerificationReport> = run_suite(suite, n)?;
    let pass = reports.iter().all(|r| r.pass);
    Ok((to_json(&reports)?, pass))
}

fn output_of(command: &Command) -> &str {
    match command {
        Command::Transform { io, .. }
        | Command::Convolve { io, .. }
        | Command::Matrix { io, .. }
        | Command::Volume { io, .. } => &io.output.output,
        Command::Series { output, .. } | Command::Verify { output, .. } => &output.output,
    }
}

/// Runs one command, reading `-` inputs from `stdin`.
pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> anyhow::Result<Outcome> {
    let (json, pass) = match &cli.command {
        Command::Transform {
            theory,
            direction,
            io,
        } => (transform(*theory, *direction, io, stdin)?, true),
        Command::Convolve { theory, io } => (convolve(*theory, io, stdin)?, true),
        Command::Matrix { nmax, kmax, io } => (matrix(*nmax, *kmax, io, stdin)?, true),
        Command::Series { op, input, .. } => (series(*op, input, stdin)?, true),
        Command::Volume { n, io } => (volume(*n, io, stdin)?, true),
        Command::Verify { suite, n, .. } => verify((*suite).into(), *n)?,
    };
    Ok(Outcome { json, pass })
}

/// Writes the result to `--output` (stdout for `-`).
pub fn emit(cli: &Cli, outcome: &Outcome, stdout: &mut dyn Write) -> anyhow::Result<()> {
    let path = output_of(&cli.command);
    if path == "-" {
        writeln!(stdout, "{}", outcome.json)?;
        stdout.flush()?;
    } else {
        fs::write(path, format!("{}\n", outcome.json))
            .with_context(|| format!("writing {path}"))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use cumulants::rational::int;

    #[test]
    fn multiplier_specs() {
        assert_eq!(
            parse_multiplier("3", 2).unwrap(),
            MultiplierSequence::constant(2, &int(3))
        );
        assert_eq!(
            parse_multiplier("n", 3).unwrap(),
            MultiplierSequence::index(3)
        );
        assert_eq!(
            parse_multiplier("n+2", 3).unwrap().values(),
            &[int(3), int(4), int(5)]
        );
        assert_eq!(
            parse_multiplier("n-1", 3).unwrap().values(),
            &[int(0), int(1), int(2)]
        );
        assert_eq!(
            parse_multiplier("1, 0, 1/2", 3).unwrap().values()[2],
            cumulants::rational::ratio(1, 2)
        );
        assert!(parse_multiplier("1,2", 3).is_err());
        assert!(parse_multiplier("x", 3).is_err());
    }

    fn run(args: &[&str], stdin: &str) -> anyhow::Result<Outcome> {
        let cli = Cli::try_parse_from(std::iter::once("cumulants").chain(args.iter().copied()))?;
        execute(&cli, &mut stdin.as_bytes())
    }

    #[test]
    fn transforms_named_inputs() {
        let out = run(
            &[
                "transform",
                "--theory",
                "free",
                "--direction",
                "c2m",
                "--order",
                "5",
                "--named",
                "u",
            ],
            "",
        )
        .unwrap();
        assert_eq!(out.json, r#"{"order":5,"values":["1","2","5","14","42"]}"#);
        let out = run(
            &[
                "transform",
                "--theory",
                "abel",
                "--g",
                "1",
                "--direction",
                "m2c",
                "--order",
                "4",
                "--named",
                "bell",
            ],
            "",
        )
        .unwrap();
        assert_eq!(out.json, r#"{"order":4,"values":["1","1","1","1"]}"#);
    }

    #[test]
    fn g_rules() {
        assert!(run(
            &[
                "transform",
                "--theory",
                "abel",
                "--direction",
                "m2c",
                "--order",
                "3",
                "--named",
                "u"
            ],
            ""
        )
        .is_err());
        assert!(run(
            &[
                "transform",
                "--theory",
                "free",
                "--g",
                "2",
                "--direction",
                "m2c",
                "--order",
                "3",
                "--named",
                "u"
            ],
            ""
        )
        .is_err());
    }

    #[test]
    fn stdin_array_input() {
        let input = r#"[{"order":2,"values":["1","1"]},{"order":2,"values":["1","1"]}]"#;
        let out = run(
            &["convolve", "--theory", "classical", "--input", "-"],
            input,
        )
        .unwrap();
        assert_eq!(out.json, r#"{"order":2,"values":["2","4"]}"#);
    }
}
