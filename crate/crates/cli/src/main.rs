//! Command-line front door for the sternpoly library: generate polynomials,
//! evaluate them, run verification suites, and export plot-ready datasets.
//!
//! Exit codes: 0 when the command succeeds with zero violations, 2 when a
//! verification found violations, 1 for usage or configuration errors.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde::Serialize;

use sternpoly::certify::certify_range;
use sternpoly::contfrac::{cf_eval, stern_ratio_cf};
use sternpoly::parabola::{az_scan, element_boundary_polyline, value_set_step_check, ParabolaRegion};
use sternpoly::roots::{
    alpha_family_check, rational_roots_census, scan_odd, t_family_report, RootRecord,
};
use sternpoly::{
    bounds, bracket_decode, bracket_encode, fmt_g17, stern_eval, stern_poly, stern_seq,
    BracketSeq, CheckReport, Complex64, GridSpec, SternIndex,
};

const SUITES: &[&str] = &[
    "table3",
    "mo",
    "ballmin",
    "wnt",
    "smallcases",
    "auxlemmas",
    "regions",
    "parabola",
    "azscan",
    "roots",
    "rationals",
    "alpha-family",
    "t-family",
    "certify",
];

#[derive(Parser, Debug)]
#[command(name = "sternpoly", version, about = "Stern polynomial toolkit")]
struct Cli {
    /// key=value config file mirroring the long flags; flags win on conflict
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Debug, Default, Clone)]
struct RunOpts {
    /// largest index, prime bound, or family depth the command touches
    #[arg(long = "n-max")]
    n_max: Option<u64>,
    /// opening angle α in radians, |α| < π/2
    #[arg(long)]
    alpha: Option<f64>,
    /// grid size: "AxB" (ratio grids) or a single sample count like "4096"
    #[arg(long)]
    grid: Option<String>,
    /// comparison tolerance, where the suite has a configurable one
    #[arg(long)]
    tol: Option<f64>,
    /// worker threads for the parallel scans (default: all cores)
    #[arg(long)]
    workers: Option<usize>,
    /// path for the machine-readable JSON/CSV output
    #[arg(long)]
    out: Option<PathBuf>,
    /// complex sample point, e.g. "1+2.5i"
    #[arg(long)]
    z: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print S_n: the λ-power form, then coefficients low-to-high
    Poly { n: u64 },
    /// Evaluate S_n at a complex point; prints "re im"
    Eval {
        n: u64,
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Print "n s_n" for the diatomic sequence, n = 0..=n_max
    Seq { n_max: u64 },
    /// Encode an odd integer as a bracket, or decode "[[a1,...,at]]"
    Bracket { value: String },
    /// Continued-fraction form of a bracket ratio at z, checked against
    /// the direct polynomial ratio
    Cf {
        bracket: String,
        #[arg(value_name = "Z", allow_hyphen_values = true)]
        point: String,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Run one verification suite
    Verify {
        suite: String,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Export a plot-ready dataset: fig1, fig2, or fig5
    Export {
        which: String,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Irreducibility certificates for all prime indices up to n-max
    Certify {
        #[command(flatten)]
        opts: RunOpts,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            process::exit(code);
        }
    };
    match run(cli) {
        Ok(true) => process::exit(0),
        Ok(false) => process::exit(2),
        Err(msg) => {
            eprintln!("error: {msg}");
            process::exit(1);
        }
    }
}

/// `Ok(true)` → exit 0, `Ok(false)` → exit 2 (violations), `Err` → exit 1.
fn run(cli: Cli) -> Result<bool, String> {
    let config = match &cli.config {
        Some(path) => load_config(path)?,
        None => BTreeMap::new(),
    };
    match cli.command {
        Cmd::Poly { n } => {
            let p = stern_poly(&SternIndex::from(n));
            println!("{p}");
            let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
            if coeffs.is_empty() {
                println!("coeffs: 0");
            } else {
                println!("coeffs: {}", coeffs.join(","));
            }
            Ok(true)
        }
        Cmd::Eval { n, z } => {
            let z = parse_complex(&z)?;
            let v = stern_eval(&SternIndex::from(n), z);
            println!("{} {}", fmt_g17(v.re), fmt_g17(v.im));
            Ok(true)
        }
        Cmd::Seq { n_max } => {
            for n in 0..=n_max {
                println!("{n} {}", stern_seq(&SternIndex::from(n)));
            }
            Ok(true)
        }
        Cmd::Bracket { value } => {
            if value.starts_with("[[") {
                let b = parse_bracket(&value)?;
                println!("{}", bracket_decode(&b));
            } else {
                let n = BigUint::from_str(value.trim())
                    .map_err(|_| format!("not an integer or bracket: {value}"))?;
                let b = bracket_encode(&SternIndex::from(n)).map_err(|e| e.to_string())?;
                println!("{b}");
            }
            Ok(true)
        }
        Cmd::Cf { bracket, point, opts } => {
            let opts = merge(opts, &config)?;
            let b = parse_bracket(&bracket)?;
            let z = parse_complex(&point)?;
            let tol = opts.tol.unwrap_or(1e-9);
            cmd_cf(&b, z, tol)
        }
        Cmd::Verify { suite, opts } => {
            let opts = merge(opts, &config)?;
            init_workers(&opts);
            cmd_verify(&suite, &opts)
        }
        Cmd::Export { which, opts } => {
            let opts = merge(opts, &config)?;
            init_workers(&opts);
            cmd_export(&which, &opts)
        }
        Cmd::Certify { opts } => {
            let opts = merge(opts, &config)?;
            init_workers(&opts);
            cmd_verify("certify", &opts)
        }
    }
}

// ---------------------------------------------------------------------------
// configuration plumbing

/// Reads a `key = value` file (one pair per line, `#` comments). Keys match
/// the long flag names; underscores are accepted in place of dashes.
fn load_config(path: &Path) -> Result<BTreeMap<String, String>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("{}:{}: expected key=value", path.display(), lineno + 1))?;
        let key = key.trim().replace('_', "-");
        let value = value.trim().to_string();
        match key.as_str() {
            "n-max" | "alpha" | "grid" | "tol" | "workers" | "out" | "z" => {
                map.insert(key, value);
            }
            other => {
                return Err(format!(
                    "{}:{}: unknown config key '{other}'",
                    path.display(),
                    lineno + 1
                ))
            }
        }
    }
    Ok(map)
}

/// Config values fill in whatever the flags left unset; flags win.
fn merge(mut opts: RunOpts, config: &BTreeMap<String, String>) -> Result<RunOpts, String> {
    let bad = |k: &str, v: &str| format!("config value {k}={v} does not parse");
    if opts.n_max.is_none() {
        if let Some(v) = config.get("n-max") {
            opts.n_max = Some(v.parse().map_err(|_| bad("n-max", v))?);
        }
    }
    if opts.alpha.is_none() {
        if let Some(v) = config.get("alpha") {
            opts.alpha = Some(v.parse().map_err(|_| bad("alpha", v))?);
        }
    }
    if opts.grid.is_none() {
        if let Some(v) = config.get("grid") {
            opts.grid = Some(v.clone());
        }
    }
    if opts.tol.is_none() {
        if let Some(v) = config.get("tol") {
            opts.tol = Some(v.parse().map_err(|_| bad("tol", v))?);
        }
    }
    if opts.workers.is_none() {
        if let Some(v) = config.get("workers") {
            opts.workers = Some(v.parse().map_err(|_| bad("workers", v))?);
        }
    }
    if opts.out.is_none() {
        if let Some(v) = config.get("out") {
            opts.out = Some(PathBuf::from(v));
        }
    }
    if opts.z.is_none() {
        if let Some(v) = config.get("z") {
            opts.z = Some(v.clone());
        }
    }
    if let Some(t) = opts.tol {
        if !(t > 0.0) {
            return Err("tol must be positive".into());
        }
    }
    Ok(opts)
}

fn init_workers(opts: &RunOpts) {
    if let Some(w) = opts.workers {
        // outputs are identical for any worker count (ordered merges), so a
        // failure to resize the pool is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w.max(1)).build_global();
    }
}

fn parse_grid(opts: &RunOpts, default: (usize, usize)) -> Result<(usize, usize), String> {
    let Some(s) = &opts.grid else {
        return Ok(default);
    };
    let t = s.trim().to_ascii_lowercase();
    let parse_one = |p: &str| -> Result<usize, String> {
        let v: usize = p.trim().parse().map_err(|_| format!("bad grid '{s}'"))?;
        if v == 0 {
            return Err(format!("grid components must be positive: '{s}'"));
        }
        Ok(v)
    };
    if let Some((a, b)) = t.split_once('x') {
        Ok((parse_one(a)?, parse_one(b)?))
    } else {
        let v = parse_one(&t)?;
        Ok((v, v))
    }
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot parse complex number '{s}' (try forms like 2, -1.5, 1+2.5i)");
    if t.is_empty() {
        return Err(bad());
    }
    let parse_re = |p: &str| p.parse::<f64>().map_err(|_| bad());
    let parse_im = |p: &str| -> Result<f64, String> {
        match p {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            other => other.parse::<f64>().map_err(|_| bad()),
        }
    };
    if let Some(body) = t.strip_suffix(['i', 'I']) {
        // find the +/- separating real and imaginary parts, skipping the
        // leading sign and exponent signs
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let c = bytes[k] as char;
            if (c == '+' || c == '-') && !matches!(bytes[k - 1] as char, 'e' | 'E') {
                split = Some(k);
                break;
            }
        }
        match split {
            Some(k) => Ok(Complex64::new(parse_re(&body[..k])?, parse_im(&body[k..])?)),
            None => Ok(Complex64::new(0.0, parse_im(body)?)),
        }
    } else {
        Ok(Complex64::new(parse_re(&t)?, 0.0))
    }
}

fn parse_bracket(s: &str) -> Result<BracketSeq, String> {
    let t = s.trim();
    let inner = t
        .strip_prefix("[[")
        .and_then(|r| r.strip_suffix("]]"))
        .ok_or_else(|| format!("bracket must look like [[a1,...,at]]: {s}"))?;
    let terms: Result<Vec<u32>, _> = inner.split(',').map(|p| p.trim().parse::<u32>()).collect();
    let terms = terms.map_err(|_| format!("bracket terms must be positive integers: {s}"))?;
    BracketSeq::new(terms).map_err(|e| e.to_string())
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    s.push('\n');
    fs::write(path, s).map_err(|e| format!("{}: {e}", path.display()))
}

/// Reports embed a wall-clock runtime; zero it so written files are
/// byte-identical across runs and worker counts.
fn deterministic(report: &CheckReport) -> CheckReport {
    let mut r = report.clone();
    r.runtime_ms = 0;
    r
}

// ---------------------------------------------------------------------------
// commands

fn cmd_cf(b: &BracketSeq, z: Complex64, tol: f64) -> Result<bool, String> {
    let cf = stern_ratio_cf(b, z);
    let value = cf_eval(&cf).map_err(|e| format!("continued fraction at z={z}: {e}"))?;
    let head = bracket_decode(b);
    let num = stern_eval(&head, z);
    let den = if b.len() >= 2 {
        let tail = BracketSeq::new(b.terms()[1..].to_vec()).expect("nonempty tail");
        stern_eval(&bracket_decode(&tail), z)
    } else {
        Complex64::new(1.0, 0.0)
    };
    let direct = num / den;
    let rel = (value - direct).norm() / direct.norm().max(f64::MIN_POSITIVE);
    println!("cf     {} {}", fmt_g17(value.re), fmt_g17(value.im));
    println!("direct {} {}", fmt_g17(direct.re), fmt_g17(direct.im));
    println!("rel    {}", fmt_g17(rel));
    Ok(rel <= tol)
}

fn region_for(alpha: f64) -> Result<ParabolaRegion, String> {
    ParabolaRegion::try_new(alpha).ok_or_else(|| format!("alpha must satisfy |alpha| < π/2, got {alpha}"))
}

#[derive(Serialize)]
struct CensusRow {
    num: i64,
    den: u64,
    hits: usize,
    first_indices: Vec<u64>,
}

#[derive(Serialize)]
struct RationalsReport {
    n_max: u64,
    roots: Vec<CensusRow>,
}

fn suite_line(r: &CheckReport) -> String {
    format!(
        "{} samples, worst margin {}, {} violations",
        r.samples,
        fmt_g17(r.worst_margin),
        r.violations.len()
    )
}

fn finish_report(
    name: &str,
    report: CheckReport,
    out: Option<&Path>,
) -> Result<bool, String> {
    let ok = report.passed();
    let tag = if ok { "[PASS]" } else { "[FAIL]" };
    println!("{tag} {name}: {}", suite_line(&report));
    for v in report.violations.iter().take(5) {
        println!("  violation: {} margin {}", v.label, fmt_g17(v.margin));
    }
    if let Some(path) = out {
        write_json(path, &deterministic(&report))?;
    }
    Ok(ok)
}

fn cmd_verify(suite: &str, opts: &RunOpts) -> Result<bool, String> {
    let pi = std::f64::consts::PI;
    let out = opts.out.as_deref();
    match suite {
        "table3" => finish_report("table3", bounds::table3_report(), out),
        "mo" => {
            let n_max = opts.n_max.unwrap_or(200).min(u32::MAX as u64) as u32;
            let (points, _) = parse_grid(opts, (4096, 4096))?;
            let grid = GridSpec::new(0.0, 4.0 * pi, points.max(2));
            finish_report("mo", bounds::check_mo_inequality(n_max, &grid), out)
        }
        "ballmin" => {
            let n_max = opts.n_max.unwrap_or(100).min(u32::MAX as u64) as u32;
            let (samples, _) = parse_grid(opts, (10_000, 10_000))?;
            finish_report("ballmin", bounds::check_ball_min_range(n_max, samples), out)
        }
        "wnt" => {
            let n_max = opts.n_max.unwrap_or(64).min(u32::MAX as u64) as u32;
            let (points, _) = parse_grid(opts, (4096, 4096))?;
            let ns: Vec<u32> = (1..=n_max.max(1)).collect();
            finish_report("wnt", bounds::check_wnt_bounds_range(&ns, points), out)
        }
        "smallcases" => {
            let (samples, _) = parse_grid(opts, (4096, 4096))?;
            finish_report("smallcases", bounds::check_small_cases(samples), out)
        }
        "auxlemmas" => {
            let (samples, _) = parse_grid(opts, (10_000, 10_000))?;
            finish_report("auxlemmas", bounds::check_aux_lemmas(samples), out)
        }
        "regions" => {
            let (samples, _) = parse_grid(opts, (4096, 4096))?;
            finish_report("regions", bounds::check_region_inclusions(samples), out)
        }
        "parabola" => {
            let alpha = opts.alpha.unwrap_or(pi / 12.0);
            let region = region_for(alpha)?;
            let (samples, _) = parse_grid(opts, (512, 512))?;
            let mut merged = CheckReport::new("parabola-step");
            let m = 16;
            for j in 1..=m {
                let theta = 2.0 * pi * j as f64 / (m + 1) as f64;
                let a = region.element_boundary_point(theta);
                merged.merge(value_set_step_check(&region, a, samples));
                merged.merge(value_set_step_check(&region, 0.5 * a, samples));
            }
            merged.merge(value_set_step_check(&region, region.vertex(), samples));
            merged.merge(value_set_step_check(&region, Complex64::new(0.0, 0.0), samples));
            finish_report("parabola", merged, out)
        }
        "azscan" => {
            let alpha = opts.alpha.unwrap_or(pi / 12.0);
            region_for(alpha)?;
            let z = match &opts.z {
                Some(s) => parse_complex(s)?,
                None => Complex64::new(2.0 - (pi / 7.0).cos(), (pi / 7.0).sin()),
            };
            let (a_max, b_max) = parse_grid(opts, (64, 64))?;
            let report = az_scan(z, alpha, a_max as u32, b_max as u32)
                .map_err(|e| format!("ratio grid at z={z}: {e}"))?;
            let ok = report.all_inside;
            let tag = if ok { "[PASS]" } else { "[FAIL]" };
            println!(
                "{tag} azscan: z={z} alpha={} grid {a_max}x{b_max}, {} grid violations, {} limit violations",
                fmt_g17(alpha),
                report.violations.len(),
                report.limit_violations.len()
            );
            for v in report.violations.iter().take(5) {
                println!(
                    "  outside: a={} b={} value {} {}",
                    v.a,
                    v.b,
                    fmt_g17(v.value[0]),
                    fmt_g17(v.value[1])
                );
            }
            if let Some(path) = out {
                write_json(path, &report)?;
            }
            Ok(ok)
        }
        "roots" => {
            let n_max = opts.n_max.unwrap_or(1024);
            let summary = scan_odd(n_max, |_| {}).map_err(|e| format!("root scan: {e}"))?;
            let ok = summary.two_disk_violations.is_empty()
                && summary.quarter_disk_violations.is_empty();
            let tag = if ok { "[PASS]" } else { "[FAIL]" };
            println!(
                "{tag} roots: {} polynomials, {} roots, min |root-2| {} (n={}), min |root| {} (n={}), max Re {} (n={}), worst residual {}",
                summary.polynomials,
                summary.roots,
                fmt_g17(summary.min_dist_to_two),
                summary.min_dist_n,
                fmt_g17(summary.min_abs_root),
                summary.min_abs_n,
                fmt_g17(summary.max_re),
                summary.max_re_n,
                fmt_g17(summary.worst_residual)
            );
            if let Some(path) = out {
                write_json(path, &summary)?;
            }
            Ok(ok)
        }
        "rationals" => {
            let n_max = opts.n_max.unwrap_or(4095);
            let census = rational_roots_census(n_max);
            let rows: Vec<CensusRow> = census
                .iter()
                .map(|(&(num, den), indices)| CensusRow {
                    num,
                    den,
                    hits: indices.len(),
                    first_indices: indices.iter().copied().take(8).collect(),
                })
                .collect();
            let expected = [(-1i64, 1u64), (-1, 2), (-1, 3)];
            let keys: Vec<(i64, u64)> = census.keys().copied().collect();
            let ok = keys == expected;
            let tag = if ok { "[PASS]" } else { "[FAIL]" };
            let shown: Vec<String> =
                keys.iter().map(|(n, d)| format!("{n}/{d}")).collect();
            println!("{tag} rationals: odd indices up to {n_max}, roots {{{}}}", shown.join(", "));
            if let Some(path) = out {
                write_json(path, &RationalsReport { n_max, roots: rows })?;
            }
            Ok(ok)
        }
        "alpha-family" => {
            let n_max = opts.n_max.unwrap_or(16).clamp(3, 30) as u32;
            let tol = opts.tol.unwrap_or(1e-9);
            let mut results = Vec::new();
            let mut worst = 0.0f64;
            for n in 3..=n_max {
                let res = alpha_family_check(n).map_err(|e| format!("family member n={n}: {e}"))?;
                worst = worst.max(res.max_abs_diff);
                results.push(res);
            }
            let ok = worst <= tol;
            let tag = if ok { "[PASS]" } else { "[FAIL]" };
            println!("{tag} alpha-family: n=3..{n_max}, worst |computed - predicted| {}", fmt_g17(worst));
            if let Some(path) = out {
                write_json(path, &results)?;
            }
            Ok(ok)
        }
        "t-family" => {
            let n_max = opts.n_max.unwrap_or(10).clamp(1, 30) as u32;
            let report = t_family_report(n_max).map_err(|e| format!("tower family: {e}"))?;
            for row in &report.rows {
                let ratio = row
                    .re_over_im_sq
                    .map_or_else(|| "n/a".to_string(), fmt_g17);
                println!(
                    "  n={} index={} degree={} max_im={} max_re={} re/im^2={ratio}",
                    row.n,
                    row.index,
                    row.degree,
                    fmt_g17(row.max_im),
                    fmt_g17(row.max_re)
                );
            }
            println!(
                "[PASS] t-family: max_im grows per parity class = {}, overall max_im = {}, all Re < 1 = {}",
                report.max_im_increasing_by_parity,
                fmt_g17(report.max_im_overall),
                report.all_re_below_one
            );
            if let Some(path) = out {
                write_json(path, &report)?;
            }
            Ok(true)
        }
        "certify" => {
            let p_max = opts.n_max.unwrap_or(2017);
            match certify_range(p_max) {
                Ok(summary) => {
                    println!(
                        "[PASS] certify: {} primes up to {}, max degree {}, min |root-2| {}, oracle {}/{} confirmed",
                        summary.count,
                        summary.p_max,
                        summary.max_degree,
                        fmt_g17(summary.min_dist_to_two),
                        summary.oracle_confirmed,
                        summary.oracle_checked
                    );
                    if let Some(path) = out {
                        write_json(path, &summary)?;
                    }
                    Ok(true)
                }
                Err(e) => {
                    println!("[FAIL] certify: {e}");
                    Ok(false)
                }
            }
        }
        other => Err(format!(
            "unknown suite '{other}'; expected one of: {}",
            SUITES.join(", ")
        )),
    }
}

#[derive(Serialize)]
struct GridExportPoint {
    a: u32,
    b: u32,
    re: f64,
    im: f64,
    inside: bool,
}

#[derive(Serialize)]
struct GridExport {
    z: [f64; 2],
    alpha: f64,
    a_max: u32,
    b_max: u32,
    points: Vec<GridExportPoint>,
    boundary: Vec<[f64; 2]>,
    violations: usize,
}

fn export_ratio_grid(z: Complex64, alpha: f64, opts: &RunOpts, default_out: &str) -> Result<bool, String> {
    let (a_max, b_max) = parse_grid(opts, (64, 64))?;
    let report = az_scan(z, alpha, a_max as u32, b_max as u32)
        .map_err(|e| format!("ratio grid at z={z}: {e}"))?;
    let region = ParabolaRegion::new(alpha);
    let r_cap = report
        .points
        .iter()
        .map(|p| (p.re * p.re + p.im * p.im).sqrt())
        .fold(0.5, f64::max)
        * 1.25;
    let export = GridExport {
        z: [z.re, z.im],
        alpha,
        a_max: a_max as u32,
        b_max: b_max as u32,
        points: report
            .points
            .iter()
            .map(|p| GridExportPoint { a: p.a, b: p.b, re: p.re, im: p.im, inside: p.inside })
            .collect(),
        boundary: element_boundary_polyline(&region, r_cap, 512)
            .into_iter()
            .map(|w| [w.re, w.im])
            .collect(),
        violations: report.violations.len(),
    };
    let path = opts.out.clone().unwrap_or_else(|| PathBuf::from(default_out));
    write_json(&path, &export)?;
    println!(
        "wrote {} grid points and {} boundary points to {}",
        export.points.len(),
        export.boundary.len(),
        path.display()
    );
    Ok(true)
}

fn cmd_export(which: &str, opts: &RunOpts) -> Result<bool, String> {
    let pi = std::f64::consts::PI;
    match which {
        "fig1" => {
            let n_max = opts.n_max.unwrap_or(32767);
            let mut rows: Vec<RootRecord> = Vec::new();
            scan_odd(n_max, |rec| {
                let [re, im] = rec.root;
                if (-4.0..=1.0).contains(&re) && im.abs() <= 3.0 {
                    rows.push(rec.clone());
                }
            })
            .map_err(|e| format!("root scan: {e}"))?;
            let path = opts.out.clone().unwrap_or_else(|| PathBuf::from("fig1.csv"));
            let mut csv = String::from("n,degree,root_re,root_im,residual\n");
            for r in &rows {
                csv.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.n,
                    r.degree,
                    fmt_g17(r.root[0]),
                    fmt_g17(r.root[1]),
                    fmt_g17(r.residual)
                ));
            }
            fs::write(&path, csv).map_err(|e| format!("{}: {e}", path.display()))?;
            println!("wrote {} windowed roots to {}", rows.len(), path.display());
            Ok(true)
        }
        "fig2" => {
            let z = Complex64::new(2.0 - (pi / 7.0).cos(), (pi / 7.0).sin());
            export_ratio_grid(z, pi / 12.0, opts, "fig2.json")
        }
        "fig5" => {
            let z = Complex64::new(1.0, 2.5);
            export_ratio_grid(z, 0.16 * pi, opts, "fig5.json")
        }
        other => Err(format!("unknown figure '{other}'; expected fig1, fig2, or fig5")),
    }
}
