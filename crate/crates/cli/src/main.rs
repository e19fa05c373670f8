//! `hhc`: evaluate, dump, plot and verify the homogeneous Hilbert curves.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.

mod svg;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hhc::geom::{enumerate, invert_point, Cell};
use hhc::map::{evaluate, transfer_point};
use hhc::metrics::{
    default_workers, dilation_estimate_with_workers, dilation_survey_with_workers, DilationMode,
    MAX_EXHAUSTIVE_ORDER,
};
use hhc::verify::Suite;
use hhc::{Curve, DyadicScalar, HhcError, QuaternaryFraction};

const MAX_MAP_ORDER: u32 = 30;
const MAX_DUMP_ORDER: u32 = 12;

#[derive(Debug, Parser)]
#[command(name = "hhc", version, about = "Homogeneous Hilbert curves in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a curve at one parameter.
    Map {
        #[arg(long, value_parser = parse_curve)]
        curve: Curve,
        #[arg(long)]
        order: u32,
        /// Quaternary digits (e.g. 0123) or the index form i/4^k.
        #[arg(long)]
        t: String,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Dump every cell of a curve in traversal order.
    Curve {
        #[arg(long, value_parser = parse_curve)]
        curve: Curve,
        #[arg(long)]
        order: u32,
        #[arg(long, value_enum, default_value_t = DumpFormat::Csv)]
        format: DumpFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Plot a curve as SVG.
    Svg {
        #[arg(long, value_parser = parse_curve)]
        curve: Curve,
        #[arg(long)]
        order: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run verification suites.
    Verify {
        /// group, tables, adjacency, equivalence, transfer, recursion, counts or all
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Move a point from one proper curve to another.
    Transfer {
        #[arg(long, value_parser = parse_curve)]
        from: Curve,
        #[arg(long, value_parser = parse_curve)]
        to: Curve,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        t: String,
    },
    /// Estimate the squared dilation factor.
    #[command(group(ArgGroup::new("target").required(true).args(["curve", "all"])))]
    Dilation {
        #[arg(long, value_parser = parse_curve)]
        curve: Option<Curve>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        order: u32,
        /// exhaustive or sampled:N
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DumpFormat {
    Csv,
    Json,
}

fn parse_curve(s: &str) -> Result<Curve, String> {
    s.parse::<Curve>().map_err(|e| e.to_string())
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Failed(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<HhcError> for CliError {
    fn from(e: HhcError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

type CliResult<T = ()> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Map {
            curve,
            order,
            t,
            format,
        } => cmd_map(curve, order, &t, format),
        Command::Curve {
            curve,
            order,
            format,
            output,
        } => cmd_curve(curve, order, format, output),
        Command::Svg {
            curve,
            order,
            output,
        } => cmd_svg(curve, order, output),
        Command::Verify { suite } => cmd_verify(&suite),
        Command::Transfer { from, to, order, t } => cmd_transfer(from, to, order, &t),
        Command::Dilation {
            curve,
            all,
            order,
            mode,
            seed,
        } => cmd_dilation(curve, all, order, &mode, seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed(msg)) => {
            eprintln!("hhc: check failed: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("hhc: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("hhc: {e}");
            ExitCode::from(2)
        }
    }
}

fn open_output(path: Option<PathBuf>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(&p).map_err(|e| {
            CliError::Usage(format!("cannot write {}: {e}", p.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn parse_parameter(order: u32, t: &str) -> CliResult<QuaternaryFraction> {
    if order == 0 || order > MAX_MAP_ORDER {
        return Err(CliError::Usage(format!(
            "--order must be between 1 and {MAX_MAP_ORDER}"
        )));
    }
    let q: QuaternaryFraction = t.parse()?;
    if q.order() != order {
        return Err(CliError::Usage(format!(
            "--t has {} digits but --order is {order}",
            q.order()
        )));
    }
    Ok(q)
}

fn check_dump_order(order: u32, max: u32) -> CliResult {
    if order == 0 || order > max {
        return Err(CliError::Usage(format!("--order must be between 1 and {max}")));
    }
    Ok(())
}

#[derive(Serialize)]
struct PointRecord {
    curve: Curve,
    nu: u32,
    order: u32,
    t: QuaternaryFraction,
    #[serde(skip_serializing_if = "Option::is_none")]
    t_reverted: Option<QuaternaryFraction>,
    x: DyadicScalar,
    y: DyadicScalar,
    x_decimal: f64,
    y_decimal: f64,
}

fn cmd_map(curve: Curve, order: u32, t: &str, format: TextFormat) -> CliResult {
    let q = parse_parameter(order, t)?;
    let result = evaluate(curve, &q)?;

    // the geometric descent must land back on the same parameter
    let cell = Cell::containing(result.point, order)?;
    let recovered = invert_point(curve, &cell)?;
    if recovered != q {
        return Err(CliError::Failed(format!(
            "inverse of {} is {recovered}, expected {q}",
            result.point
        )));
    }

    let (xd, yd) = result.point.to_f64();
    let mut out = io::stdout().lock();
    match format {
        TextFormat::Text => {
            writeln!(out, "curve: {curve}")?;
            writeln!(out, "order: {order}")?;
            writeln!(out, "t: {q}")?;
            if let Some(r) = &result.reverted {
                writeln!(out, "t': {r}")?;
            }
            writeln!(out, "point: {}", result.point)?;
            writeln!(out, "decimal: ({xd}, {yd})")?;
        }
        TextFormat::Json => {
            let record = PointRecord {
                curve,
                nu: curve.nu(),
                order,
                t: q,
                t_reverted: result.reverted,
                x: result.point.x,
                y: result.point.y,
                x_decimal: xd,
                y_decimal: yd,
            };
            serde_json::to_writer_pretty(&mut out, &record)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CellRecord {
    index: u64,
    digits: QuaternaryFraction,
    ix: u32,
    iy: u32,
    x: DyadicScalar,
    y: DyadicScalar,
    x_decimal: f64,
    y_decimal: f64,
}

fn cmd_curve(curve: Curve, order: u32, format: DumpFormat, output: Option<PathBuf>) -> CliResult {
    check_dump_order(order, MAX_DUMP_ORDER)?;
    let seq = enumerate(curve, order)?;
    let mut out = open_output(output)?;
    match format {
        DumpFormat::Csv => writeln!(out, "index,digits,ix,iy,x,y")?,
        DumpFormat::Json => write!(
            out,
            "{{\"curve\":\"{}\",\"nu\":{},\"order\":{order},\"cells\":[",
            curve.name(),
            curve.nu()
        )?,
    }
    for (i, cell) in seq.cells.iter().enumerate() {
        let digits = QuaternaryFraction::from_index(i as u64, order)?;
        let p = cell.center();
        match format {
            DumpFormat::Csv => writeln!(out, "{i},{digits},{},{},{},{}", cell.ix, cell.iy, p.x, p.y)?,
            DumpFormat::Json => {
                if i > 0 {
                    out.write_all(b",")?;
                }
                let (x_decimal, y_decimal) = p.to_f64();
                let record = CellRecord {
                    index: i as u64,
                    digits,
                    ix: cell.ix,
                    iy: cell.iy,
                    x: p.x,
                    y: p.y,
                    x_decimal,
                    y_decimal,
                };
                serde_json::to_writer(&mut out, &record)?;
            }
        }
    }
    if let DumpFormat::Json = format {
        writeln!(out, "]}}")?;
    }
    out.flush()?;
    Ok(())
}

fn cmd_svg(curve: Curve, order: u32, output: Option<PathBuf>) -> CliResult {
    check_dump_order(order, svg::MAX_ORDER)?;
    let seq = enumerate(curve, order)?;
    let mut out = open_output(output)?;
    out.write_all(svg::render(&seq).as_bytes())?;
    out.flush()?;
    Ok(())
}

fn cmd_verify(suite: &str) -> CliResult {
    let suites: Vec<Suite> = if suite.eq_ignore_ascii_case("all") {
        Suite::ALL.to_vec()
    } else {
        vec![suite
            .parse()
            .map_err(|_| CliError::Usage(format!("unknown suite {suite:?}")))?]
    };
    let mut out = io::stdout().lock();
    let mut failed = 0;
    let mut total = 0;
    for s in suites {
        for check in s.run() {
            total += 1;
            let tag = if check.passed { "PASS" } else { "FAIL" };
            failed += usize::from(!check.passed);
            writeln!(out, "[{tag}] {s}/{}: {}", check.name, check.detail)?;
        }
    }
    writeln!(out, "{} of {total} checks passed", total - failed)?;
    if failed > 0 {
        return Err(CliError::Failed(format!("{failed} checks failed")));
    }
    Ok(())
}

fn cmd_transfer(from: Curve, to: Curve, order: u32, t: &str) -> CliResult {
    for c in [from, to] {
        if !c.is_proper() {
            return Err(CliError::Usage(format!(
                "{c} is improper; point transfer is only defined between proper curves (nu 0..5)"
            )));
        }
    }
    let q = parse_parameter(order, t)?;
    let source = evaluate(from, &q)?.point;
    let image = transfer_point(to, from, q.first(), source)?;
    let direct = evaluate(to, &q)?.point;
    let mut out = io::stdout().lock();
    writeln!(out, "t: {q}")?;
    writeln!(out, "from {from}: {source}")?;
    writeln!(out, "transferred: {image}")?;
    writeln!(out, "to {to}: {direct}")?;
    writeln!(out, "equal: {}", image == direct)?;
    if image != direct {
        return Err(CliError::Failed("transferred point differs from direct evaluation".into()));
    }
    Ok(())
}

fn parse_mode(mode: &str, seed: u64) -> CliResult<DilationMode> {
    if mode == "exhaustive" {
        return Ok(DilationMode::Exhaustive);
    }
    mode.strip_prefix("sampled:")
        .and_then(|n| n.parse::<u64>().ok())
        .filter(|&n| n > 0)
        .map(|samples| DilationMode::Sampled { samples, seed })
        .ok_or_else(|| CliError::Usage(format!("invalid --mode {mode:?} (exhaustive or sampled:N)")))
}

fn worker_limit() -> CliResult<usize> {
    match std::env::var("HHC_THREADS") {
        Err(_) => Ok(default_workers()),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n.min(default_workers()).max(1)),
            _ => Err(CliError::Usage(format!(
                "HHC_THREADS must be a positive integer, got {v:?}"
            ))),
        },
    }
}

fn cmd_dilation(curve: Option<Curve>, all: bool, order: u32, mode: &str, seed: u64) -> CliResult {
    let mode = parse_mode(mode, seed)?;
    if order == 0 {
        return Err(CliError::Usage("--order must be at least 1".into()));
    }
    if mode == DilationMode::Exhaustive && order > MAX_EXHAUSTIVE_ORDER {
        return Err(CliError::Usage(format!(
            "exhaustive mode is limited to --order <= {MAX_EXHAUSTIVE_ORDER}"
        )));
    }
    let workers = worker_limit()?;
    let mut out = io::stdout().lock();
    match (curve, all) {
        (Some(c), false) => {
            let report = dilation_estimate_with_workers(c, order, mode, workers)?;
            serde_json::to_writer_pretty(&mut out, &report)?;
        }
        _ => {
            let survey = dilation_survey_with_workers(order, mode, workers)?;
            serde_json::to_writer_pretty(&mut out, &survey)?;
        }
    }
    writeln!(out)?;
    Ok(())
}
