//! `silt`: command-line driver for silt-core.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;

use silt_core::algebra::build::{build, build_algebra};
use silt_core::algebra::catalog::{catalog, catalog_names};
use silt_core::algebra::fdalg::FiniteDimAlgebra;
use silt_core::algebra::presentation::{FieldKind, Presentation};
use silt_core::algebra::structure::{cartan_report, ejr_certificate, is_symmetric, socle};
use silt_core::enumerate::{count, hasse, strata_counts, Count, Parallelism, DEFAULT_LIMIT};
use silt_core::io::{parse_algebra_file, parse_field_kind, parse_scalar, serialize_presentation, to_dot, to_json};
use silt_core::reductions::{max_central_radical_ideal, reduce};
use silt_core::{Error, Field, Fp, Q};

#[derive(Parser)]
#[command(name = "silt", version, about = "Support τ-tilting enumeration for quivers with relations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Common,
}

#[derive(Args, Clone)]
struct Common {
    /// Node budget for enumerations.
    #[arg(long, global = true, default_value_t = DEFAULT_LIMIT)]
    limit: usize,
    /// Value of the parameter `lambda`, as `p/q`.
    #[arg(long, global = true)]
    lambda: Option<String>,
    /// `rationals` or `gf(p)`; overrides the presentation.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Path length cap for building the algebra.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Worker threads for enumeration.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// List built-in algebras.
    Catalog,
    /// Dimension, Cartan matrix and symmetry.
    Info { algebra: String },
    /// Number of support τ-tilting pairs.
    Count { algebra: String },
    /// The Hasse quiver of the support τ-tilting poset.
    Hasse {
        algebra: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Counts t_I of τ-tilting modules over A/(e_I).
    Strata { algebra: String },
    /// Quotient by the maximal central radical ideal, with both counts.
    Reduce { algebra: String },
    /// Checks a single property.
    Check {
        algebra: String,
        #[arg(long, value_enum)]
        property: Property,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Symmetric,
    CartanPosdef,
    TauFinite,
}

macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Incomplete(_) | Error::CapInsufficient { .. } | Error::Internal(_) | Error::SplittingFailure => 1,
            _ => 2,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn input_error(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

type CliResult = Result<u8, Failure>;

fn load_presentation(name: &str, opts: &Common) -> Result<Presentation, Failure> {
    let lambda = opts.lambda.as_deref().map(parse_scalar).transpose()?;
    let mut p = if Path::new(name).is_file() {
        let text = std::fs::read_to_string(name).map_err(|e| input_error(format!("{name}: {e}")))?;
        let mut p = parse_algebra_file(&text)?;
        if p.name.is_none() {
            p.name = Path::new(name).file_stem().map(|s| s.to_string_lossy().into_owned());
        }
        if let Some(l) = lambda {
            p.field.lambda = Some(l);
        }
        p
    } else {
        catalog(name, lambda)?
    };
    if let Some(f) = &opts.field {
        p.field.kind = parse_field_kind(f)?;
    }
    p.check_lambda()?;
    Ok(p)
}

fn build_with<F: Field>(p: &Presentation, opts: &Common) -> silt_core::Result<FiniteDimAlgebra<F>> {
    match opts.cap {
        Some(c) => build_algebra(p, c),
        None => build(p),
    }
}

fn print_count(c: Count) {
    outln!("{c}");
}

fn run_command<F: Field>(cmd: &Command, p: &Presentation, opts: &Common) -> CliResult {
    let a: FiniteDimAlgebra<F> = build_with(p, opts)?;
    info!("built {} of dimension {}", a.name(), a.dim());
    let par = Parallelism::Parallel;
    match cmd {
        Command::Catalog => unreachable!("handled before loading"),
        Command::Info { .. } => {
            let c = cartan_report(&a);
            outln!("algebra: {}", a.name());
            outln!("field: {}", p.field.kind);
            outln!("dimension: {}", a.dim());
            outln!("vertices: {}", a.num_vertices());
            outln!("loewy length: {}", a.loewy_length());
            outln!("cartan:");
            for row in &c.matrix {
                outln!("  {}", row.iter().map(i64::to_string).collect::<Vec<_>>().join(" "));
            }
            outln!("cartan determinant: {}", c.determinant);
            outln!("cartan positive definite: {}", c.positive_definite);
            outln!("symmetric: {}", is_symmetric(&a));
            outln!("ejr certificate: {}", ejr_certificate(&a));
            Ok(0)
        }
        Command::Count { .. } => {
            print_count(count(&a, opts.limit, par)?);
            Ok(0)
        }
        Command::Hasse { format, out, .. } => {
            let g = hasse(&a, opts.limit, par)?;
            let text = match format {
                Format::Dot => to_dot(&a, &g),
                Format::Json => to_json(&a, &g)?,
            };
            match out {
                Some(path) => std::fs::write(path, text).map_err(|e| input_error(format!("{}: {e}", path.display())))?,
                None => out!("{text}"),
            }
            Ok(0)
        }
        Command::Strata { .. } => {
            let s = strata_counts(&a, opts.limit, par)?;
            outln!("{:<16} t_I", "I");
            for (k, v) in &s.entries {
                let set = format!("{{{}}}", k.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
                outln!("{set:<16} {v}");
            }
            outln!("{:<16} {}", "total", s.total);
            Ok(0)
        }
        Command::Reduce { .. } => {
            let ideal = max_central_radical_ideal(&a);
            let r = reduce(&a)?;
            match r.presentation() {
                Some(q) => out!("{}", serialize_presentation(q)),
                None => outln!("# quotient has no presentation"),
            }
            outln!("# ideal dimension: {}", ideal.dim());
            outln!("# socle inside ideal: {}", socle(&a).basis.iter().all(|v| ideal.contains(v)));
            outln!("# dimension: {} -> {}", a.dim(), r.dim());
            let (c1, c2) = (count(&a, opts.limit, par)?, count(&r, opts.limit, par)?);
            outln!("# count: {c1}");
            outln!("# reduced count: {c2}");
            Ok(if c1.is_finite() && c2.is_finite() { 0 } else { 1 })
        }
        Command::Check { property, .. } => match property {
            Property::Symmetric => {
                outln!("{}", is_symmetric(&a));
                Ok(0)
            }
            Property::CartanPosdef => {
                outln!("{}", cartan_report(&a).positive_definite);
                Ok(0)
            }
            Property::TauFinite => match count(&a, opts.limit, par)? {
                c @ Count::Finite(_) => {
                    outln!("true ({c})");
                    Ok(0)
                }
                c @ Count::AtLeast(_) => {
                    outln!("unknown ({c})");
                    Ok(1)
                }
            },
        },
    }
}

macro_rules! dispatch_primes {
    ($p:expr, $cmd:expr, $pres:expr, $opts:expr; $($prime:literal),*) => {
        match $p {
            $($prime => run_command::<Fp<$prime>>($cmd, $pres, $opts),)*
            other => Err(input_error(format!(
                "gf({other}) is not supported; choose one of {}",
                [$($prime.to_string()),*].join(", ")
            ))),
        }
    };
}

fn algebra_arg(cmd: &Command) -> Option<&str> {
    match cmd {
        Command::Catalog => None,
        Command::Info { algebra }
        | Command::Count { algebra }
        | Command::Hasse { algebra, .. }
        | Command::Strata { algebra }
        | Command::Reduce { algebra }
        | Command::Check { algebra, .. } => Some(algebra),
    }
}

fn run(cli: &Cli) -> CliResult {
    let Some(name) = algebra_arg(&cli.command) else {
        for n in catalog_names() {
            outln!("{n}");
        }
        return Ok(0);
    };
    let p = load_presentation(name, &cli.opts)?;
    match p.field.kind {
        FieldKind::Rationals => run_command::<Q>(&cli.command, &p, &cli.opts),
        FieldKind::Prime(q) => dispatch_primes!(q, &cli.command, &p, &cli.opts; 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 101, 32003),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let outcome = match cli.opts.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build() {
            Ok(pool) => pool.install(|| run(&cli)),
            Err(e) => Err(Failure { code: 1, msg: e.to_string() }),
        },
        None => run(&cli),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
