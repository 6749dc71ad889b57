use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use bast_core::io::{
    emit_instance, emit_result, emit_svg, parse_instance, parse_result, verify_result, DuplicatePolicy, Format,
    SvgOptions,
};
use bast_core::oracle::{brute_force_alpha_mst, MAX_BRUTE_FORCE_POINTS};
use bast_core::spanner::HOP_BOUND;
use bast_core::{
    build_alpha_st, build_spanner, euclidean_mst, unit_disk_graph, verify_alpha_st, verify_hop_spanner, Alpha,
    Generator, Instance, PointSet, ResultFile,
};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "bast", version, about = "Bounded-angle spanning trees and antenna hop spanners")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a point set.
    Gen(GenArgs),
    /// Build an alpha-spanning tree and verify it.
    Solve(SolveArgs),
    /// Orient radius-7 wedges into a 6-hop spanner of the unit disk graph.
    Convert(ConvertArgs),
    /// Re-check a result file against its instance.
    Verify(VerifyArgs),
    /// Exhaustive minimum alpha-spanning tree for up to 8 points.
    Oracle(OracleArgs),
    /// Draw an instance, optionally with a result, as SVG.
    Render(RenderArgs),
    /// Weight ratio and runtime over a range of seeds, as CSV.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GeneratorArgs {
    /// uniform-square, clustered, collinear, equilateral, equilateral-center,
    /// square-grid-reduction, hex-grid or connected-udg
    #[arg(long, short = 'g', default_value = "uniform-square")]
    generator: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, short = 'n')]
    n: Option<usize>,
    #[arg(long)]
    side: Option<f64>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    spread: Option<f64>,
    #[arg(long)]
    gap: Option<f64>,
    #[arg(long)]
    w: Option<usize>,
    #[arg(long)]
    h: Option<usize>,
    #[arg(long)]
    cells: Option<usize>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
}

impl GeneratorArgs {
    fn generator(&self) -> Result<Generator> {
        let mut params = BTreeMap::new();
        let counts = [
            ("n", self.n),
            ("k", self.k),
            ("w", self.w),
            ("h", self.h),
            ("cells", self.cells),
            ("rows", self.rows),
            ("cols", self.cols),
        ];
        for (key, v) in counts {
            if let Some(v) = v {
                params.insert(key.to_string(), v as f64);
            }
        }
        for (key, v) in [("side", self.side), ("spread", self.spread), ("gap", self.gap)] {
            if let Some(v) = v {
                params.insert(key.to_string(), v);
            }
        }
        Ok(Generator::from_name(&self.generator, &params)?)
    }
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    gen: GeneratorArgs,
    #[arg(long, short = 'o')]
    out: Option<PathBuf>,
    #[arg(long, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct InputArgs {
    /// Instance file (JSON or headerless x,y CSV).
    #[arg(long = "in", short = 'i')]
    input: PathBuf,
    /// Force the input format instead of sniffing it.
    #[arg(long)]
    format: Option<Format>,
    /// Drop repeated points instead of rejecting the instance.
    #[arg(long)]
    dedup: bool,
}

impl InputArgs {
    fn load(&self) -> Result<Instance> {
        let text = fs::read_to_string(&self.input).with_context(|| format!("reading {}", self.input.display()))?;
        let policy = if self.dedup {
            DuplicatePolicy::Dedup
        } else {
            DuplicatePolicy::Reject
        };
        parse_instance(&text, self.format, policy).with_context(|| format!("parsing {}", self.input.display()))
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    /// pi, 2pi/3 or pi/2 (equivalently 180, 120 or 90).
    #[arg(long, short = 'a')]
    alpha: Alpha,
    #[arg(long, short = 'o')]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct ConvertArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, short = 'o')]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Result file written by `solve` or `convert`.
    #[arg(long, short = 'r')]
    result: PathBuf,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Any aperture in degrees, or pi, 2pi/3, pi/2.
    #[arg(long, short = 'a', value_parser = parse_degrees)]
    alpha: f64,
    #[arg(long, short = 'o')]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, short = 'r')]
    result: Option<PathBuf>,
    #[arg(long, alias = "out", short = 'o')]
    svg: Option<PathBuf>,
    #[arg(long, default_value_t = 800.0)]
    size: f64,
    #[arg(long)]
    no_wedges: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    gen: GeneratorArgs,
    #[arg(long, short = 'a', default_value = "2pi/3")]
    alpha: Alpha,
    /// Number of consecutive seeds, starting at --seed.
    #[arg(long, default_value_t = 20)]
    seeds: u64,
    #[arg(long, short = 'o')]
    out: Option<PathBuf>,
}

fn parse_degrees(s: &str) -> std::result::Result<f64, String> {
    if let Ok(d) = s.trim().parse::<f64>() {
        if d > 0.0 && d <= 360.0 {
            return Ok(d);
        }
        return Err(format!("aperture must lie in (0, 360], got {d}"));
    }
    s.parse::<Alpha>().map(Alpha::degrees).map_err(|e| e.to_string())
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn status(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn gen(args: GenArgs) -> Result<ExitCode> {
    let instance = args.gen.generator()?.generate(args.gen.seed)?;
    write_out(args.out.as_deref(), &emit_instance(&instance, args.format))?;
    Ok(ExitCode::SUCCESS)
}

fn solve(args: SolveArgs) -> Result<ExitCode> {
    let inst = args.input.load()?;
    let st = build_alpha_st(&inst.points, args.alpha)?;
    let report = verify_alpha_st(&inst.points, &st);
    let result = ResultFile::from_alpha_st(&st, &report);
    write_out(args.out.as_deref(), &emit_result(&result))?;
    if let Some(svg) = &args.svg {
        let edges = st.tree.edges.clone();
        fs::write(svg, emit_svg(&inst.points, &st.wedges, &edges, &SvgOptions::default()))?;
    }
    eprintln!(
        "{} alpha={} n={} weight={:.6} ratio={:.6} max_spread={:.6}",
        if report.passed { "pass" } else { "FAIL" },
        args.alpha,
        inst.points.len(),
        report.weight,
        report.ratio,
        report.max_spread
    );
    for v in &report.violations {
        eprintln!("  {v:?}");
    }
    Ok(status(report.passed))
}

fn convert(args: ConvertArgs) -> Result<ExitCode> {
    let inst = args.input.load()?;
    let sp = build_spanner(&inst.points)?;
    let udg = unit_disk_graph(&inst.points, 1.0);
    let report = verify_hop_spanner(&sp.graph, &udg, HOP_BOUND);
    let result = ResultFile::from_spanner(&inst.points, &sp, &report);
    write_out(args.out.as_deref(), &emit_result(&result))?;
    if let Some(svg) = &args.svg {
        let edges: Vec<(usize, usize)> = sp.graph.edges().iter().map(|e| e.key()).collect();
        fs::write(svg, emit_svg(&inst.points, &sp.wedges, &edges, &SvgOptions::default()))?;
    }
    eprintln!(
        "{} n={} hop_stretch={} max_edge_len={:.6} components={:?} time_ms={:.3}",
        if report.passed { "pass" } else { "FAIL" },
        inst.points.len(),
        sp.hop_stretch,
        sp.max_edge_length,
        sp.stats.component_sizes,
        sp.stats.elapsed_ms
    );
    Ok(status(report.passed))
}

fn verify(args: VerifyArgs) -> Result<ExitCode> {
    let inst = args.input.load()?;
    let text = fs::read_to_string(&args.result).with_context(|| format!("reading {}", args.result.display()))?;
    let result = parse_result(&text)?;
    let v = verify_result(&inst.points, &result);
    println!("{}", if v.passed { "pass" } else { "FAIL" });
    for msg in &v.violations {
        println!("  {msg}");
    }
    Ok(status(v.passed))
}

#[derive(Serialize)]
struct OracleReport {
    alpha: f64,
    n: usize,
    exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    weight: Option<f64>,
    mst_weight: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    ratio: Option<f64>,
    edges: Vec<[usize; 2]>,
}

fn oracle(args: OracleArgs) -> Result<ExitCode> {
    let inst = args.input.load()?;
    let n = inst.points.len();
    if n > MAX_BRUTE_FORCE_POINTS {
        bail!("the oracle enumerates trees for at most {MAX_BRUTE_FORCE_POINTS} points, got {n}");
    }
    let tree = brute_force_alpha_mst(&inst.points, args.alpha)?;
    let mst_weight = euclidean_mst(&inst.points).weight;
    let report = OracleReport {
        alpha: args.alpha,
        n,
        exists: tree.is_some(),
        weight: tree.as_ref().map(|t| t.weight),
        mst_weight,
        ratio: tree.as_ref().map(|t| if mst_weight > 0.0 { t.weight / mst_weight } else { 1.0 }),
        edges: tree.as_ref().map_or(Vec::new(), |t| t.edges.iter().map(|&(a, b)| [a, b]).collect()),
    };
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    write_out(args.out.as_deref(), &text)?;
    match &tree {
        Some(t) => eprintln!("alpha={} weight={:.9} ratio={:.9}", args.alpha, t.weight, report.ratio.unwrap_or(1.0)),
        None => eprintln!("no alpha-ST exists for alpha={}", args.alpha),
    }
    Ok(ExitCode::SUCCESS)
}

fn render(args: RenderArgs) -> Result<ExitCode> {
    let inst = args.input.load()?;
    let (wedges, edges) = match &args.result {
        Some(path) => {
            let result = parse_result(&fs::read_to_string(path)?)?;
            let wedges = result.wedges_at(&inst.points)?;
            let edges = result.edges.iter().map(|e| (e[0], e[1])).collect();
            (wedges, edges)
        }
        None => (Vec::new(), Vec::new()),
    };
    if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= inst.points.len() || b >= inst.points.len()) {
        bail!("edge ({a}, {b}) refers to a missing point");
    }
    let opts = SvgOptions {
        size: args.size,
        draw_wedges: !args.no_wedges,
        ..SvgOptions::default()
    };
    write_out(args.svg.as_deref(), &emit_svg(&inst.points, &wedges, &edges, &opts))?;
    Ok(ExitCode::SUCCESS)
}

fn bench(args: BenchArgs) -> Result<ExitCode> {
    let generator = args.gen.generator()?;
    let mut csv = String::from("seed,n,alpha,ratio,runtime_ms\n");
    let mut all_passed = true;
    for seed in args.gen.seed..args.gen.seed + args.seeds {
        let points: PointSet = generator.generate(seed)?.points;
        let start = Instant::now();
        let st = build_alpha_st(&points, args.alpha)?;
        let elapsed = start.elapsed().as_secs_f64() * 1e3;
        let report = verify_alpha_st(&points, &st);
        all_passed &= report.passed;
        csv.push_str(&format!(
            "{seed},{},{},{:.9},{elapsed:.3}\n",
            points.len(),
            args.alpha.degrees(),
            report.ratio
        ));
    }
    write_out(args.out.as_deref(), &csv)?;
    Ok(status(all_passed))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Solve(a) => solve(a),
        Command::Convert(a) => convert(a),
        Command::Verify(a) => verify(a),
        Command::Oracle(a) => oracle(a),
        Command::Render(a) => render(a),
        Command::Bench(a) => bench(a),
    };
    match run {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_accept_numbers_and_names() {
        assert_eq!(parse_degrees("59"), Ok(59.0));
        assert_eq!(parse_degrees("pi"), Ok(180.0));
        assert_eq!(parse_degrees("2pi/3"), Ok(120.0));
        assert!(parse_degrees("0").is_err());
        assert!(parse_degrees("400").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn generator_flags_become_params() {
        let cli = Cli::parse_from(["bast", "gen", "-g", "collinear", "-n", "4", "--gap", "0.5"]);
        let Command::Gen(args) = cli.command else { panic!("expected gen") };
        let g = args.gen.generator().unwrap();
        assert_eq!(g, Generator::Collinear { n: 4, gap: 0.5 });
    }
}
