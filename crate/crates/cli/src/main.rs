//! `wonderlat`: lattice arithmetic on wonderful compactifications.
//!
//! Exit codes: 0 success, 1 mathematical-invariant failure, 2 usage or
//! validation error, 3 unmet precondition (e.g. a curve class that is
//! not movable).

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use wonderlat_core::error::Error;
use wonderlat_core::lattice::{boundary_divisor, is_movable, pair, CurveClass, DivisorClass, Rat};
use wonderlat_core::limit::degeneration_chain;
use wonderlat_core::reducibility::{find_certificate, Certificate};
use wonderlat_core::rootsys::Series;
use wonderlat_core::spherical::{
    classify_color_types, load_datum, picard_rank, simple_group_datum, subvariety_datum,
    SphericalDatum,
};

#[derive(Parser)]
#[command(
    name = "wonderlat",
    version,
    about = "Curve/divisor lattices, reducibility certificates and limit chains on wonderful compactifications"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print spherical roots, colors, color types and the Picard rank
    Describe(DescribeArgs),
    /// Pair a curve class against boundary divisors or a divisor class
    Pair(PairArgs),
    /// Search a reducibility certificate for a movable curve class
    Certify(CertifyArgs),
    /// Degenerate a movable class down to the closed orbit
    Limit(LimitArgs),
    /// Sweep simple types for certificate coverage of movable classes
    Sweep(SweepArgs),
}

#[derive(Args)]
struct DatumArgs {
    /// Simple series of the group factor (A-G)
    #[arg(long = "type", value_name = "SERIES")]
    series: Option<char>,
    /// Rank of the group factor
    #[arg(long)]
    rank: Option<usize>,
    /// Datum file (JSON) instead of --type/--rank
    #[arg(long, value_name = "PATH", conflicts_with_all = ["series", "rank"])]
    datum: Option<PathBuf>,
    /// Restrict to the subvariety X_I for these boundary indices (1-based)
    #[arg(long, value_delimiter = ',', value_name = "I,J,...")]
    subvariety: Vec<usize>,
    /// Restrict to the closed orbit (all boundary indices removed)
    #[arg(long, conflicts_with = "subvariety")]
    closed_orbit: bool,
}

#[derive(Args)]
struct DescribeArgs {
    #[command(flatten)]
    datum: DatumArgs,
    #[arg(long, conflicts_with = "tsv")]
    json: bool,
    #[arg(long)]
    tsv: bool,
}

#[derive(Args)]
struct PairArgs {
    #[command(flatten)]
    datum: DatumArgs,
    /// Curve class coefficients on the dual Picard basis
    #[arg(
        long,
        value_delimiter = ',',
        required = true,
        allow_negative_numbers = true
    )]
    curve: Vec<i64>,
    /// Pair against this divisor class (coefficients on the Picard basis)
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, conflicts_with_all = ["boundary", "all"])]
    divisor: Vec<i64>,
    /// Pair against the boundary divisor X_i (1-based)
    #[arg(long, conflicts_with = "all")]
    boundary: Option<usize>,
    /// Pair against every boundary divisor
    #[arg(long)]
    all: bool,
    #[arg(long, conflicts_with = "tsv")]
    json: bool,
    #[arg(long)]
    tsv: bool,
}

#[derive(Args)]
struct CertifyArgs {
    #[command(flatten)]
    datum: DatumArgs,
    #[arg(
        long,
        value_delimiter = ',',
        required = true,
        allow_negative_numbers = true
    )]
    curve: Vec<i64>,
    /// Treat nonemptiness of the open moduli locus as established
    #[arg(long)]
    assume_nonempty: bool,
}

#[derive(Args)]
struct LimitArgs {
    /// Simple series of the group factor (A-G)
    #[arg(long = "type", value_name = "SERIES", required = true)]
    series: char,
    #[arg(long, required = true)]
    rank: usize,
    #[arg(
        long,
        value_delimiter = ',',
        required = true,
        allow_negative_numbers = true
    )]
    curve: Vec<i64>,
    /// Boundary indices in degeneration order (1-based; default rank..1)
    #[arg(long, value_delimiter = ',')]
    order: Vec<usize>,
}

#[derive(Args)]
struct SweepArgs {
    /// Comma-separated series letters
    #[arg(long, value_delimiter = ',', required = true)]
    series: Vec<char>,
    #[arg(long, default_value_t = 8)]
    max_rank: usize,
    /// Curve coefficients range over 0..=bound
    #[arg(long, default_value_t = 1)]
    coeff_bound: i64,
    /// Hard rank cap the sweep refuses to exceed
    #[arg(long, default_value_t = 8)]
    cap: usize,
    #[arg(long, conflicts_with = "tsv")]
    json: bool,
    #[arg(long)]
    tsv: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match &e {
            Error::NotMovable => 3,
            Error::ConsistencyFailure(_) => 1,
            _ => 2,
        };
        let mut message = e.to_string();
        for v in e.violations() {
            message.push_str(&format!("\n  {v}"));
        }
        Failure { code, message }
    }
}

fn main() -> ExitCode {
    // Die quietly on closed pipes instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Describe(args) => cmd_describe(args),
        Command::Pair(args) => cmd_pair(args),
        Command::Certify(args) => cmd_certify(args),
        Command::Limit(args) => cmd_limit(args),
        Command::Sweep(args) => cmd_sweep(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_series(c: char) -> Result<Series, Failure> {
    Series::from_letter(c).ok_or_else(|| Failure::usage(format!("unknown series `{c}`")))
}

fn build_datum(args: &DatumArgs) -> Result<Arc<SphericalDatum>, Failure> {
    let base = if let Some(path) = &args.datum {
        load_datum(path)?
    } else {
        match (args.series, args.rank) {
            (Some(s), Some(r)) => simple_group_datum(parse_series(s)?, r)?,
            _ => {
                return Err(Failure::usage(
                    "provide --type SERIES and --rank N, or --datum PATH",
                ))
            }
        }
    };
    let indices: BTreeSet<usize> = if args.closed_orbit {
        (0..base.boundary_count()).collect()
    } else {
        let mut set = BTreeSet::new();
        for &i in &args.subvariety {
            if i == 0 || i > base.boundary_count() {
                return Err(Failure::usage(format!(
                    "boundary index {i} out of range 1..={}",
                    base.boundary_count()
                )));
            }
            set.insert(i - 1);
        }
        set
    };
    Ok(Arc::new(subvariety_datum(&base, &indices)?))
}

fn rat_value(v: Rat) -> Value {
    if v.is_integer() {
        json!(v.to_integer())
    } else {
        json!(v.to_string())
    }
}

fn one_based(set: &BTreeSet<usize>) -> Vec<usize> {
    set.iter().map(|&i| i + 1).collect()
}

// ---------------------------------------------------------------------
// describe
// ---------------------------------------------------------------------

fn cmd_describe(args: DescribeArgs) -> Result<u8, Failure> {
    let datum = build_datum(&args.datum)?;
    let types = classify_color_types(&datum)?;

    if args.json {
        let out = json!({
            "kind": datum.kind().to_string(),
            "dynkin": datum.root_system().dynkin().to_string(),
            "rank": datum.boundary_count(),
            "pic_rank": picard_rank(&datum),
            "s_p": one_based(datum.s_p()),
            "spherical_roots": datum.spherical_roots().iter().enumerate().map(|(i, g)| json!({
                "index": i + 1,
                "origin": g.origin + 1,
                "coeffs": g.coeffs,
            })).collect::<Vec<_>>(),
            "colors": datum.colors().iter().map(|c| json!({
                "label": c.label,
                "moved_by": c.moved_by.iter().map(|&r| r + 1).collect::<Vec<_>>(),
                "type": c.kind.to_string(),
                "weight": c.weight,
            })).collect::<Vec<_>>(),
            "schubert_extras": datum.extras().iter().map(|e| json!({
                "label": e.label(),
                "root": e.root + 1,
                "origin": e.origin + 1,
            })).collect::<Vec<_>>(),
            "color_types": types.iter().map(|(root, t)| json!({
                "root": root + 1,
                "type": t.to_string(),
            })).collect::<Vec<_>>(),
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializable")
        );
        return Ok(0);
    }

    if args.tsv {
        println!("field\tvalue");
        println!("kind\t{}", datum.kind());
        println!("dynkin\t{}", datum.root_system().dynkin());
        println!("rank\t{}", datum.boundary_count());
        println!("pic_rank\t{}", picard_rank(&datum));
        for (i, g) in datum.spherical_roots().iter().enumerate() {
            println!(
                "spherical_root\tX{} (origin {}): {:?}",
                i + 1,
                g.origin + 1,
                g.coeffs
            );
        }
        for c in datum.colors() {
            println!(
                "color\t{}: moved_by {:?} type {} weight {:?}",
                c.label,
                c.moved_by.iter().map(|&r| r + 1).collect::<Vec<_>>(),
                c.kind,
                c.weight
            );
        }
        for e in datum.extras() {
            println!("schubert_extra\t{}: root {}", e.label(), e.root + 1);
        }
        return Ok(0);
    }

    println!("kind:      {}", datum.kind());
    println!("dynkin:    {}", datum.root_system().dynkin());
    println!("rank:      {}", datum.boundary_count());
    println!("pic rank:  {}", picard_rank(&datum));
    let sp = one_based(datum.s_p());
    println!("s_p:       {:?}", sp);
    println!("spherical roots (simple-root coordinates):");
    for (i, g) in datum.spherical_roots().iter().enumerate() {
        println!("  X{} (origin {}): {:?}", i + 1, g.origin + 1, g.coeffs);
    }
    println!("colors:");
    for c in datum.colors() {
        println!(
            "  {}: moved by {:?}, type ({}), weight {:?}",
            c.label,
            c.moved_by.iter().map(|&r| r + 1).collect::<Vec<_>>(),
            c.kind,
            c.weight
        );
    }
    if !datum.extras().is_empty() {
        println!("pulled-back Schubert divisors:");
        for e in datum.extras() {
            println!("  {}: moved by root {}", e.label(), e.root + 1);
        }
    }
    println!("color types by simple root:");
    let labels: Vec<String> = types
        .iter()
        .map(|(root, t)| format!("{}:{}", root + 1, t))
        .collect();
    println!("  {}", labels.join("  "));
    Ok(0)
}

// ---------------------------------------------------------------------
// pair
// ---------------------------------------------------------------------

fn cmd_pair(args: PairArgs) -> Result<u8, Failure> {
    let datum = build_datum(&args.datum)?;
    let n = datum.basis_len();
    if args.curve.len() != n {
        return Err(Failure::usage(format!(
            "--curve expects {n} coefficients (Picard rank), got {}",
            args.curve.len()
        )));
    }
    let eta = CurveClass::new(datum.clone(), args.curve.clone())?;

    let mut rows: Vec<(String, Rat)> = Vec::new();
    if args.all {
        for i in 0..datum.boundary_count() {
            let x = boundary_divisor(&datum, i)?;
            rows.push((format!("X{}", i + 1), pair(&x.expansion, &eta)?));
        }
    } else if let Some(i) = args.boundary {
        if i == 0 || i > datum.boundary_count() {
            return Err(Failure::usage(format!(
                "--boundary index {i} out of range 1..={}",
                datum.boundary_count()
            )));
        }
        let x = boundary_divisor(&datum, i - 1)?;
        rows.push((format!("X{i}"), pair(&x.expansion, &eta)?));
    } else if !args.divisor.is_empty() {
        if args.divisor.len() != n {
            return Err(Failure::usage(format!(
                "--divisor expects {n} coefficients, got {}",
                args.divisor.len()
            )));
        }
        let d = DivisorClass::from_integers(datum.clone(), &args.divisor)?;
        let label = format!(
            "divisor({})",
            args.divisor
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        rows.push((label, pair(&d, &eta)?));
    } else {
        return Err(Failure::usage(
            "choose one of --all, --boundary I or --divisor C1,..,Cn",
        ));
    }

    if args.json {
        let out = json!({
            "curve": args.curve,
            "rows": rows.iter().map(|(label, v)| json!({
                "divisor": label,
                "value": rat_value(*v),
            })).collect::<Vec<_>>(),
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializable")
        );
    } else if args.tsv {
        println!("divisor\tvalue");
        for (label, v) in &rows {
            println!("{label}\t{v}");
        }
    } else {
        for (label, v) in &rows {
            println!("<{label}, eta> = {v}");
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------
// certify
// ---------------------------------------------------------------------

fn certificate_json(cert: &Certificate) -> Value {
    json!({
        "eta": cert.eta.coeffs(),
        "eta1": cert.eta1.coeffs(),
        "eta2": cert.eta2.coeffs(),
        "witness": cert.witness_boundary.map(|i| i + 1),
        "gap": cert.gap,
        "mode": cert.nonemptiness_mode.map(|m| m.as_str()),
        "valid": cert.is_valid(),
    })
}

fn cmd_certify(args: CertifyArgs) -> Result<u8, Failure> {
    let datum = build_datum(&args.datum)?;
    let n = datum.basis_len();
    if args.curve.len() != n {
        return Err(Failure::usage(format!(
            "--curve expects {n} coefficients (Picard rank), got {}",
            args.curve.len()
        )));
    }
    let eta = CurveClass::new(datum, args.curve)?;
    let cert = find_certificate(&eta, args.assume_nonempty)?;
    let out = match cert {
        Some(cert) => certificate_json(&cert),
        None => json!({ "certificate": null }),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&out).expect("serializable")
    );
    Ok(0)
}

// ---------------------------------------------------------------------
// limit
// ---------------------------------------------------------------------

fn class_json(class: &CurveClass) -> Value {
    let datum = class.datum();
    let entries: Vec<Value> = datum
        .basis()
        .iter()
        .zip(class.coeffs())
        .map(|(elem, &c)| json!([datum.basis_label(elem), c]))
        .collect();
    json!(entries)
}

fn cmd_limit(args: LimitArgs) -> Result<u8, Failure> {
    let datum = Arc::new(simple_group_datum(parse_series(args.series)?, args.rank)?);
    if args.curve.len() != datum.basis_len() {
        return Err(Failure::usage(format!(
            "--curve expects {} coefficients, got {}",
            datum.basis_len(),
            args.curve.len()
        )));
    }
    let eta = CurveClass::new(datum.clone(), args.curve.clone())?;
    let order: Option<Vec<usize>> = if args.order.is_empty() {
        None
    } else {
        for &i in &args.order {
            if i == 0 || i > datum.boundary_count() {
                return Err(Failure::usage(format!(
                    "--order index {i} out of range 1..={}",
                    datum.boundary_count()
                )));
            }
        }
        Some(args.order.iter().map(|&i| i - 1).collect())
    };
    let chain = degeneration_chain(&datum, &eta, order.as_deref())?;

    let terminal = chain.terminal_class();
    let terminal_datum = chain.terminal_datum();
    let r = datum.boundary_count();
    let mut alpha = vec![0i64; r];
    let mut beta = vec![0i64; r];
    for e in terminal_datum.extras() {
        let c = terminal
            .coeff(&wonderlat_core::BasisElem::Extra(e.root))
            .expect("terminal basis");
        if e.root < r {
            alpha[e.origin] = c;
        } else {
            beta[e.origin] = c;
        }
    }
    let out = json!({
        "dynkin": args.series.to_uppercase().to_string() + &args.rank.to_string(),
        "eta": args.curve,
        "order": chain.steps.iter().map(|s| s.i0 + 1).collect::<Vec<_>>(),
        "steps": chain.steps.iter().map(|s| json!({
            "i0": s.i0 + 1,
            "removed": one_based(&s.target.kind().removed()),
            "class": class_json(&s.output_class),
        })).collect::<Vec<_>>(),
        "terminal": { "alpha": alpha, "beta": beta },
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&out).expect("serializable")
    );
    Ok(0)
}

// ---------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------

struct SweepRow {
    series: Series,
    rank: usize,
    classes: usize,
    movable: usize,
    certified: usize,
    failures: Vec<Vec<i64>>,
    in_scope: bool,
}

fn sweep_type(series: Series, rank: usize, bound: i64) -> Result<SweepRow, Error> {
    let datum = Arc::new(simple_group_datum(series, rank)?);
    let mut row = SweepRow {
        series,
        rank,
        classes: 0,
        movable: 0,
        certified: 0,
        failures: Vec::new(),
        in_scope: rank >= 3,
    };
    if !row.in_scope {
        return Ok(row);
    }
    let mut coeffs = vec![0i64; rank];
    loop {
        let mut k = rank;
        loop {
            if k == 0 {
                return Ok(row);
            }
            k -= 1;
            if coeffs[k] < bound {
                coeffs[k] += 1;
                break;
            }
            coeffs[k] = 0;
        }
        if coeffs.iter().all(|&c| c == 0) {
            return Ok(row);
        }
        row.classes += 1;
        let eta = CurveClass::new(datum.clone(), coeffs.clone())?;
        if !is_movable(&eta) {
            continue;
        }
        row.movable += 1;
        match find_certificate(&eta, false)? {
            Some(cert) if cert.is_valid() => row.certified += 1,
            _ => row.failures.push(coeffs.clone()),
        }
    }
}

fn valid_ranks(series: Series, max_rank: usize) -> Vec<usize> {
    (1..=max_rank).filter(|&r| series.rank_valid(r)).collect()
}

fn cmd_sweep(args: SweepArgs) -> Result<u8, Failure> {
    if args.max_rank > args.cap {
        return Err(Failure::usage(format!(
            "--max-rank {} exceeds the cap {}",
            args.max_rank, args.cap
        )));
    }
    let mut jobs: Vec<(Series, usize)> = Vec::new();
    for &c in &args.series {
        let series = parse_series(c)?;
        for rank in valid_ranks(series, args.max_rank) {
            jobs.push((series, rank));
        }
    }
    if jobs.is_empty() {
        return Err(Failure::usage("no admissible (series, rank) pairs"));
    }
    let rows: Vec<SweepRow> = jobs
        .par_iter()
        .map(|&(series, rank)| sweep_type(series, rank, args.coeff_bound))
        .collect::<Result<_, Error>>()?;

    let status = |row: &SweepRow| -> &'static str {
        if !row.in_scope {
            "out-of-theorem-scope"
        } else if row.failures.is_empty() {
            "ok"
        } else {
            "fail"
        }
    };
    let any_failure = rows.iter().any(|r| !r.failures.is_empty());

    if args.json {
        let out = json!({
            "coeff_bound": args.coeff_bound,
            "rows": rows.iter().map(|r| json!({
                "series": r.series.to_string(),
                "rank": r.rank,
                "classes": r.classes,
                "movable": r.movable,
                "certified": r.certified,
                "status": status(r),
            })).collect::<Vec<_>>(),
            "failures": rows.iter().flat_map(|r| r.failures.iter().map(|eta| json!({
                "series": r.series.to_string(),
                "rank": r.rank,
                "eta": eta,
            }))).collect::<Vec<_>>(),
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("serializable")
        );
    } else {
        println!("series\trank\tclasses\tmovable\tcertified\tstatus");
        for r in &rows {
            if r.in_scope {
                println!(
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    r.series,
                    r.rank,
                    r.classes,
                    r.movable,
                    r.certified,
                    status(r)
                );
            } else {
                println!("{}\t{}\t-\t-\t-\t{}", r.series, r.rank, status(r));
            }
        }
        for r in &rows {
            for eta in &r.failures {
                println!("FAIL\t{}{}\teta={eta:?}", r.series, r.rank);
            }
        }
    }
    Ok(if any_failure { 1 } else { 0 })
}
