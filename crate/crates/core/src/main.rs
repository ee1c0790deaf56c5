// Copyright 2026 the descartes-core Authors
// SPDX-License-Identifier: Apache-2.0

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use descartes_core::enumerate::{enumerate, write_atomic, write_records, EnumerationJob, OutputFormat, Shard};
use descartes_core::geometry::{
    midcircle_through_tangencies, realize_quadruple, verify_spinor_laws, ConfigurationReport, PlacedDisk,
    DEFAULT_TOLERANCE, LAWS,
};
use descartes_core::quadruple::{fourth_curvatures, from_spinor_pair, DescartesQuadruple};
use descartes_core::rational::{self, Rational};
use descartes_core::svg::{render_configuration, render_tessellation, RenderOptions};
use descartes_core::tessellation::{build_tessellation, check_observations, Observation, TessellationDoc};
use descartes_core::{Error, Result, Spinor};

#[derive(Parser)]
#[command(name = "descartes", version, about = "Spinor tessellations and Descartes quadruples")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the 15-tile tessellation for spinors a, b.
    Tess {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        json: bool,
        /// Also write an SVG drawing to this path.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Fourth curvatures tangent to three given ones.
    Solve {
        #[arg(long, value_name = "A,B,C", allow_hyphen_values = true, value_parser = parse_three)]
        curvatures: [Rational; 3],
    },
    /// Descartes quadruples generated by spinors a, b.
    Quad {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        json: bool,
    },
    /// Place a Descartes quadruple and check the tangency-spinor laws.
    Verify {
        #[arg(long, value_name = "A,B,C,D", allow_hyphen_values = true, value_parser = parse_four)]
        curvatures: [Rational; 4],
        #[arg(long, env = "DESCARTES_TOLERANCE", default_value_t = DEFAULT_TOLERANCE, value_parser = parse_tolerance)]
        tolerance: f64,
        #[arg(long)]
        json: bool,
    },
    /// Stream quadruples for all spinor pairs with coordinates in [-bound, bound].
    Enumerate(EnumerateArgs),
    /// Draw a tessellation or configuration JSON document as SVG.
    Render {
        #[arg(long, value_name = "PATH")]
        from_json: PathBuf,
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
        /// Draw mid-circles of a configuration.
        #[arg(long)]
        midcircles: bool,
        #[arg(long)]
        no_labels: bool,
        #[arg(long, default_value_t = 480, value_parser = clap::value_parser!(u32).range(64..))]
        width: u32,
    },
}

#[derive(Args)]
struct Pair {
    #[arg(long, value_name = "X,Y", allow_hyphen_values = true)]
    a: Spinor,
    #[arg(long, value_name = "X,Y", allow_hyphen_values = true)]
    b: Spinor,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    bound: u32,
    #[arg(long)]
    primitive: bool,
    /// Output file, written atomically; stdout if absent.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, default_value = "csv", value_parser = parse_format)]
    format: OutputFormat,
    #[arg(long, value_name = "I/K", default_value = "0/1")]
    shard: Shard,
    #[arg(long)]
    include_zero: bool,
}

fn parse_list(s: &str) -> std::result::Result<Vec<Rational>, String> {
    s.split(',')
        .map(|p| rational::parse(p.trim()).map_err(|e| e.to_string()))
        .collect()
}

fn parse_three(s: &str) -> std::result::Result<[Rational; 3], String> {
    parse_list(s)?
        .try_into()
        .map_err(|_| "expected three comma-separated values".to_string())
}

fn parse_four(s: &str) -> std::result::Result<[Rational; 4], String> {
    parse_list(s)?
        .try_into()
        .map_err(|_| "expected four comma-separated values".to_string())
}

fn parse_tolerance(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
        _ => Err(format!("`{s}` is not a positive tolerance")),
    }
}

fn parse_format(s: &str) -> std::result::Result<OutputFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))
}

#[derive(Serialize)]
struct TessOutput {
    #[serde(flatten)]
    doc: TessellationDoc,
    observations: Vec<Observation>,
}

fn tess(pair: &Pair, as_json: bool, svg: Option<&Path>) -> Result<()> {
    let t = build_tessellation(&pair.a, &pair.b)?;
    let observations = check_observations(&t);
    if let Some(path) = svg {
        write_atomic(path, render_tessellation(&t, &RenderOptions::default()).as_bytes())?;
    }
    if as_json {
        let out = TessOutput {
            doc: TessellationDoc::from(&t),
            observations,
        };
        println!("{}", json(&out)?);
        return Ok(());
    }
    println!("a = ({}), b = ({}), c = ({})", t.a, t.b, t.c);
    println!("{}", descartes_core::tessellation::summarize(&t));
    for o in &observations {
        println!("{} {} [{}]", if o.passed { "ok  " } else { "FAIL" }, o.name, o.witness);
    }
    Ok(())
}

fn quad(pair: &Pair, as_json: bool) -> Result<()> {
    let family = from_spinor_pair(&pair.a, &pair.b);
    if as_json {
        println!("{}", json(&family)?);
    } else {
        println!("{}", family.quadruple_1);
        println!("{}", family.quadruple_2);
    }
    Ok(())
}

fn verify(q: &[Rational; 4], tol: f64, as_json: bool) -> Result<bool> {
    let [a, b, c, d] = q.clone();
    DescartesQuadruple::new(a, b, c, d)?;
    let disks = realize_quadruple(q, tol)?;
    let report = verify_spinor_laws(&disks, tol)?;
    if as_json {
        println!("{}", json(&report)?);
    } else {
        for law in LAWS {
            let r = report.residual(law);
            println!("{} {law:<10} {r:.3e}", if r <= tol { "ok  " } else { "FAIL" });
        }
        for m in &report.midcircles {
            println!("midcircle {:?} curvature {:.9}", m.disks, m.curvature);
        }
        println!("tolerance {tol:e}: {}", if report.passed { "passed" } else { "failed" });
    }
    Ok(report.passed)
}

fn run_enumerate(args: &EnumerateArgs) -> Result<()> {
    let job = EnumerationJob {
        bound: args.bound,
        primitive_only: args.primitive,
        output_format: args.format,
        shard: args.shard,
        include_zero: args.include_zero,
    };
    let records = enumerate(&job)?;
    match &args.out {
        Some(path) => {
            let mut buf = Vec::new();
            write_records(records, job.output_format, &mut buf)?;
            write_atomic(path, &buf)?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = io::BufWriter::new(stdout.lock());
            write_records(records, job.output_format, &mut lock)?;
            lock.flush()?;
        }
    }
    Ok(())
}

fn configuration_midcircles(disks: &[PlacedDisk; 4], tol: f64) -> Vec<PlacedDisk> {
    [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
        .iter()
        .filter_map(|&[i, j, k]| midcircle_through_tangencies(&disks[i], &disks[j], &disks[k], tol).ok())
        .collect()
}

fn render(from: &Path, out: &Path, midcircles: bool, labels: bool, width: u32) -> Result<()> {
    let text = std::fs::read_to_string(from)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", from.display())))?;
    let opts = RenderOptions {
        width_px: width,
        show_labels: labels,
        show_midcircles: midcircles,
        ..RenderOptions::default()
    };
    let svg = if value.get("tiles").is_some() {
        let spinor = |key: &str| {
            value
                .get(key)
                .cloned()
                .ok_or_else(|| Error::Parse(format!("tessellation document lacks `{key}`")))
                .and_then(|v| serde_json::from_value::<Spinor>(v).map_err(|e| Error::Parse(e.to_string())))
        };
        let t = build_tessellation(&spinor("a")?, &spinor("b")?)?;
        render_tessellation(&t, &opts)
    } else if value.get("disks").is_some() {
        let report: ConfigurationReport =
            serde_json::from_value(value).map_err(|e| Error::Parse(format!("{}: {e}", from.display())))?;
        let mids = configuration_midcircles(&report.disks, report.tolerance);
        render_configuration(&report.disks, &mids, &opts)
    } else {
        return Err(Error::Parse(format!(
            "{}: neither a tessellation nor a configuration document",
            from.display()
        )));
    };
    write_atomic(out, svg.as_bytes())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Tess { pair, json, svg } => tess(&pair, json, svg.as_deref()).map(|_| true),
        Command::Solve { curvatures: [a, b, c] } => {
            println!("{}", fourth_curvatures(&a, &b, &c)?);
            Ok(true)
        }
        Command::Quad { pair, json } => quad(&pair, json).map(|_| true),
        Command::Verify {
            curvatures,
            tolerance,
            json,
        } => verify(&curvatures, tolerance, json),
        Command::Enumerate(args) => run_enumerate(&args).map(|_| true),
        Command::Render {
            from_json,
            out,
            midcircles,
            no_labels,
            width,
        } => render(&from_json, &out, midcircles, !no_labels, width).map(|_| true),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
