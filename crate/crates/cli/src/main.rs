//! `chern-inv`: command-line driver for the chern-inversion library.
//!
//! Data goes to standard output and diagnostics to standard error. Exit
//! status is 0 on success, 1 when a verification fails or a computation
//! errors, and 2 on usage errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use chern_inversion::chern::{cpn_record, hypersurface_record, theta_record, ChernRecord, Convention};
use chern_inversion::cobordism::{decompose_in_theta, mischenko_logarithm};
use chern_inversion::divisibility::{
    builtin_catalog, chern_slope, del_pezzo_scan, gcd_chern_numbers, hypersurface_scan, surface_signature,
    surface_todd, toric_surface_scan, DivisibilityVerdict, Qualifier, ScanEntry, SurfaceRecord,
};
use chern_inversion::inversion::{
    bell_gcd, bell_partial, hat_mult_inversion, hessenberg_determinant, lagrange_polynomial, mult_inversion_polynomial,
    Route,
};
use chern_inversion::json::{census_to_json, parse_record, poly_to_json, record_to_json};
use chern_inversion::polytope::{dissection_census, ordered_partition_census, FaceCensus};
use chern_inversion::verify::{self, Suite};
use chern_inversion::{Error, GradedPoly, IntPoly};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// Weights above this need `--unsafe-n`.
const DEFAULT_MAX_N: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "chern-inv", version, about = "Inversion polynomials, Chern numbers and divisibility checks")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Default output format.
    #[arg(long, global = true, value_enum, env = "CHERN_INV_FORMAT", default_value_t = Format::Text)]
    format: Format,

    /// Allow weights above 12.
    #[arg(long, global = true)]
    unsafe_n: bool,

    /// Variable name for polynomials in text output (default `t`, or `z`
    /// for Bell polynomials and determinants).
    #[arg(long, global = true, value_name = "NAME")]
    var: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lagrange inversion polynomial L_n.
    Lagrange {
        n: usize,
        #[arg(long, value_enum, default_value_t = LagrangeRoute::Recursive)]
        route: LagrangeRoute,
    },
    /// Multiplicative inversion polynomial M_n, or its exponential variant.
    Multinv {
        n: usize,
        #[arg(long)]
        hat: bool,
        #[arg(long, value_enum, default_value_t = MultRoute::Recursive, conflicts_with = "hat")]
        route: MultRoute,
    },
    /// Partial ordinary Bell polynomial and the gcd of its coefficients.
    Bell { n: usize, k: usize },
    /// Determinant of the generic n×n lower Hessenberg matrix in z_1..z_n.
    Hessenberg { n: usize },
    /// Chern-number generating functions.
    #[command(subcommand)]
    Chern(ChernCommand),
    /// Theta-basis expansions of cobordism classes.
    #[command(subcommand)]
    Cobordism(CobordismCommand),
    /// Face censuses of associahedra and permutohedra.
    #[command(subcommand)]
    Faces(FacesCommand),
    /// Chern-number divisibility by the Euler characteristic.
    #[command(subcommand)]
    Divisibility(DivisibilityCommand),
    /// Recompute every identity along independent routes.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LagrangeRoute {
    Recursive,
    Direct,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MultRoute {
    Recursive,
    Determinant,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    All,
    Fast,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Bundle {
    Tangent,
    Normal,
}

impl From<Bundle> for Convention {
    fn from(b: Bundle) -> Self {
        match b {
            Bundle::Tangent => Convention::Tangent,
            Bundle::Normal => Convention::Normal,
        }
    }
}

#[derive(Args, Debug)]
struct BundleArg {
    #[arg(long, value_enum, default_value_t = Bundle::Tangent)]
    bundle: Bundle,
}

#[derive(Subcommand, Debug)]
enum ChernCommand {
    /// Complex projective space CP^n.
    Cpn {
        n: usize,
        #[command(flatten)]
        bundle: BundleArg,
    },
    /// Theta divisor Θ^n, or Θ^n(k) for the k-th power of the polarization.
    Theta {
        n: usize,
        #[arg(long, default_value_t = 1)]
        power: u32,
        #[command(flatten)]
        bundle: BundleArg,
    },
    /// Smooth degree-d hypersurface in CP^m.
    Hypersurface { m: usize, d: u32 },
}

#[derive(Subcommand, Debug)]
enum CobordismCommand {
    /// [CP^1], ..., [CP^N] from the logarithm of the formal group.
    Log {
        #[arg(value_name = "N")]
        max_n: usize,
    },
    /// Theta-basis expansion of a Chern record read from a JSON file.
    Decompose { record: PathBuf },
}

#[derive(Subcommand, Debug)]
enum FacesCommand {
    /// Faces of the associahedron (dissections of the (n+2)-gon).
    Assoc { n: usize },
    /// Faces of the permutohedron (ordered set partitions of n).
    Perm { n: usize },
}

#[derive(Subcommand, Debug)]
enum DivisibilityCommand {
    /// Del Pezzo surfaces S_1..S_9.
    Delpezzo,
    /// Smooth toric surfaces of N-gons, N = 3..max.
    Toric {
        #[arg(long, default_value_t = 12)]
        max: u32,
    },
    /// Degree-d surfaces in CP^3, d = 1..max.
    Hypersurface {
        #[arg(long, default_value_t = 6)]
        max: u32,
    },
    /// Every entry of the built-in catalog.
    Catalog,
    /// A Chern record read from a JSON file.
    Record { file: PathBuf },
}

enum Failure {
    Usage(String),
    Runtime(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::Schema(_) | Error::Json(_) => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

struct Output {
    json: bool,
    unsafe_n: bool,
    var: Option<String>,
}

impl Output {
    fn check_n(&self, what: &str, n: usize) -> Result<(), Failure> {
        if n == 0 {
            return Err(Failure::Usage(format!("{what} must be at least 1")));
        }
        if n > DEFAULT_MAX_N && !self.unsafe_n {
            return Err(Failure::Usage(format!("{what} = {n} exceeds {DEFAULT_MAX_N}; pass --unsafe-n to allow it")));
        }
        Ok(())
    }

    fn var<'a>(&'a self, default: &'a str) -> &'a str {
        self.var.as_deref().unwrap_or(default)
    }

    fn emit(&self, text: String, value: impl FnOnce() -> Value) {
        if self.json {
            println!("{}", value());
        } else {
            print!("{text}");
        }
    }
}

fn poly_value<C, N>(p: &GradedPoly<C, N>) -> Value
where
    C: chern_inversion::ring::Scalar,
    N: chern_inversion::graded::Namespace,
{
    serde_json::to_value(poly_to_json(p).expect("homogeneous")).expect("serializable")
}

fn record_text(r: &ChernRecord, var: &str) -> String {
    let mut s = format!("{} ({} numbers, dimension {})\n", r.name, r.convention, r.dimension);
    let width = r.numbers.keys().map(|p| p.to_string().len()).max().unwrap_or(0);
    for (lambda, c) in &r.numbers {
        let _ = writeln!(s, "  c{:<width$}  {c}", lambda.to_string());
    }
    let _ = writeln!(s, "gf = {}", r.generating_function().display_with(var));
    s
}

fn read_record(path: &PathBuf) -> Result<ChernRecord, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_record(&text)?)
}

fn verdict_text(v: &DivisibilityVerdict) -> String {
    let mut s = format!("d = {}, chi = {}, ", v.d, v.chi);
    s.push_str(if !v.is_defined() {
        "undefined (chi = 0)"
    } else if v.extremely_divisible {
        "extremely divisible"
    } else {
        "not extremely divisible"
    });
    if v.qualifier == Qualifier::Witnessed {
        s.push_str(" (witnessed)");
    }
    s
}

fn verdict_value(v: &DivisibilityVerdict) -> Value {
    json!({
        "d": v.d.to_string(),
        "chi": v.chi.to_string(),
        "extremely_divisible": v.extremely_divisible,
        "qualifier": match v.qualifier { Qualifier::Complete => "complete", Qualifier::Witnessed => "witnessed" },
    })
}

fn surface_value(s: &SurfaceRecord) -> Value {
    let mut v = json!({
        "name": s.name,
        "c1sq": s.c1sq.to_string(),
        "c2": s.c2.to_string(),
        "signature": surface_signature(s).to_string(),
        "todd": surface_todd(s).to_string(),
    });
    if let Ok(slope) = chern_slope(s) {
        v["slope"] = json!(slope.slope.to_string());
        v["bmy_ok"] = json!(slope.bmy_ok);
    }
    v
}

fn scan_output(out: &Output, key: &str, scan: &std::collections::BTreeMap<u32, ScanEntry>) {
    let mut text = format!("{key:>3}  {:>6}  {:>6}  {:>4}  {:>5}  divisible\n", "c1^2", "c2", "gcd", "todd");
    for (k, e) in scan {
        let _ = writeln!(
            text,
            "{k:>3}  {:>6}  {:>6}  {:>4}  {:>5}  {}",
            e.surface.c1sq,
            e.surface.c2,
            e.verdict.d,
            e.todd,
            if e.verdict.extremely_divisible { "yes" } else { "no" }
        );
    }
    let divisible: Vec<u32> = scan.iter().filter(|(_, e)| e.verdict.extremely_divisible).map(|(&k, _)| k).collect();
    let _ = writeln!(text, "extremely divisible: {divisible:?}");
    out.emit(text, || {
        json!({
            "entries": scan.iter().map(|(k, e)| json!({
                key: k,
                "surface": surface_value(&e.surface),
                "verdict": verdict_value(&e.verdict),
            })).collect::<Vec<_>>(),
            "extremely_divisible": divisible,
        })
    });
}

fn census_output(out: &Output, census: &FaceCensus) {
    let mut text = format!("{}, n = {}\n{:>3}  {:>8}  by type\n", census.polytope, census.n, "dim", "faces");
    let f = census.f_vector();
    for dim in (0..census.n).rev() {
        let types: Vec<String> = census
            .counts
            .iter()
            .filter(|(lambda, _)| census.n - lambda.len() == dim)
            .map(|(lambda, c)| format!("{lambda}:{c}"))
            .collect();
        let _ = writeln!(text, "{dim:>3}  {:>8}  {}", f[dim], types.join(" + "));
    }
    let _ = writeln!(text, "total {}", census.total());
    out.emit(text, || {
        let mut v = serde_json::to_value(census_to_json(census)).expect("serializable");
        v["f_vector"] = json!(f.iter().map(BigInt::to_string).collect::<Vec<_>>());
        v
    });
}

fn run(cli: Cli) -> Result<(), Failure> {
    let out = Output { json: cli.json || cli.format == Format::Json, unsafe_n: cli.unsafe_n, var: cli.var };
    match cli.command {
        Command::Lagrange { n, route } => {
            out.check_n("n", n)?;
            let route = match route {
                LagrangeRoute::Recursive => Route::Recursive,
                LagrangeRoute::Direct => Route::DirectFormula,
            };
            let r = lagrange_polynomial(n, route)?;
            out.emit(
                format!("L{n} = {}\n", r.polynomial.display_with(out.var("t"))),
                || json!({"n": n, "route": r.route.to_string(), "polynomial": poly_value(&r.polynomial)}),
            );
        }
        Command::Multinv { n, hat, route } => {
            out.check_n("n", n)?;
            let (label, route, p) = if hat {
                ("hatM", "series", hat_mult_inversion(n)?)
            } else {
                let route = match route {
                    MultRoute::Recursive => Route::Recursive,
                    MultRoute::Determinant => Route::Determinant,
                };
                let r = mult_inversion_polynomial(n, route)?;
                ("M", if route == Route::Recursive { "recursive" } else { "determinant" }, r.polynomial)
            };
            out.emit(
                format!("{label}{n} = {}\n", p.display_with(out.var("t"))),
                || json!({"n": n, "hat": hat, "route": route, "polynomial": poly_value(&p)}),
            );
        }
        Command::Bell { n, k } => {
            out.check_n("n", n)?;
            let p = bell_partial(n, k)?;
            let g = bell_gcd(n, k)?;
            out.emit(format!("B({n},{k}) = {}\ngcd = {g}\n", p.display_with(out.var("z"))), || {
                let mut poly = poly_value(&p);
                poly["namespace"] = json!("z");
                json!({"n": n, "k": k, "polynomial": poly, "gcd": g.to_string()})
            });
        }
        Command::Hessenberg { n } => {
            out.check_n("n", n)?;
            let z: Vec<IntPoly> = (1..=n as u32).map(IntPoly::var).collect();
            let det = hessenberg_determinant(&z)?;
            out.emit(format!("det H{n} = {}\n", det.display_with(out.var("z"))), || {
                let mut poly = poly_value(&det);
                poly["namespace"] = json!("z");
                json!({"n": n, "determinant": poly})
            });
        }
        Command::Chern(cmd) => {
            let record = match cmd {
                ChernCommand::Cpn { n, bundle } => {
                    out.check_n("n", n)?;
                    cpn_record(n, bundle.bundle.into())?
                }
                ChernCommand::Theta { n, power, bundle } => {
                    out.check_n("n", n)?;
                    theta_record(n, power, bundle.bundle.into())?
                }
                ChernCommand::Hypersurface { m, d } => {
                    out.check_n("m", m)?;
                    hypersurface_record(m, d)?
                }
            };
            out.emit(record_text(&record, out.var("t")), || {
                serde_json::to_value(record_to_json(&record)).expect("serializable")
            });
        }
        Command::Cobordism(CobordismCommand::Log { max_n }) => {
            out.check_n("N", max_n)?;
            let log = mischenko_logarithm(max_n)?;
            let mut text = String::new();
            for (i, e) in log.iter().enumerate() {
                let _ = writeln!(text, "[CP{}] = {e}", i + 1);
            }
            out.emit(text, || {
                json!(log
                    .iter()
                    .enumerate()
                    .map(|(i, e)| json!({"n": i + 1, "class": poly_value(e)}))
                    .collect::<Vec<_>>())
            });
        }
        Command::Cobordism(CobordismCommand::Decompose { record }) => {
            let record = read_record(&record)?;
            let expr = decompose_in_theta(&record.in_convention(Convention::Normal)?)?;
            out.emit(
                format!("[{}] = {expr}\n", record.name),
                || json!({"name": record.name, "class": poly_value(&expr)}),
            );
        }
        Command::Faces(cmd) => {
            let census = match cmd {
                FacesCommand::Assoc { n } => {
                    out.check_n("n", n)?;
                    dissection_census(n)?
                }
                FacesCommand::Perm { n } => {
                    out.check_n("n", n)?;
                    ordered_partition_census(n)?
                }
            };
            census_output(&out, &census);
        }
        Command::Divisibility(cmd) => match cmd {
            DivisibilityCommand::Delpezzo => scan_output(&out, "d", &del_pezzo_scan()),
            DivisibilityCommand::Toric { max } => scan_output(&out, "N", &toric_surface_scan(max)?),
            DivisibilityCommand::Hypersurface { max } => {
                out.check_n("max", max as usize)?;
                scan_output(&out, "d", &hypersurface_scan(max)?)
            }
            DivisibilityCommand::Catalog => {
                let cat = builtin_catalog()?;
                let mut text = String::new();
                let mut values = Vec::new();
                for e in &cat.entries {
                    let v = gcd_chern_numbers(&e.record)?;
                    let _ = writeln!(text, "{:<20} dim {}  {}", e.record.name, e.record.dimension, verdict_text(&v));
                    for flag in &e.flags {
                        let _ = writeln!(text, "{:<20} note: {}", "", cat.flags[flag]);
                    }
                    values.push(json!({
                        "record": record_to_json(&e.record),
                        "description": e.description,
                        "provenance": e.provenance,
                        "flags": e.flags,
                        "verdict": verdict_value(&v),
                    }));
                }
                out.emit(text, || json!({"version": cat.version, "flags": cat.flags, "entries": values}));
            }
            DivisibilityCommand::Record { file } => {
                let record = read_record(&file)?;
                let v = gcd_chern_numbers(&record)?;
                let surface = if record.dimension == 2 && record.complete {
                    Some(SurfaceRecord::from_chern_record(&record)?)
                } else {
                    None
                };
                let mut text = format!("{}: {}\n", record.name, verdict_text(&v));
                if let Some(s) = &surface {
                    let _ = writeln!(
                        text,
                        "c1^2 = {}, c2 = {}, signature = {}, todd = {}",
                        s.c1sq,
                        s.c2,
                        surface_signature(s),
                        surface_todd(s)
                    );
                }
                out.emit(text, || {
                    let mut value = json!({"name": record.name, "verdict": verdict_value(&v)});
                    if let Some(s) = &surface {
                        value["surface"] = surface_value(s);
                    }
                    value
                });
            }
        },
        Command::Verify { max_n, suite } => {
            out.check_n("max-n", max_n)?;
            let suite = match suite {
                SuiteArg::All => Suite::All,
                SuiteArg::Fast => Suite::Fast,
            };
            let report = verify::run(suite, max_n)?;
            let mut text = String::new();
            for o in &report.outcomes {
                let _ = writeln!(text, "{} {:<30} {}", if o.passed { "PASS" } else { "FAIL" }, o.name, o.detail);
            }
            let passed = report.outcomes.iter().filter(|o| o.passed).count();
            let _ = writeln!(
                text,
                "{passed}/{} checks passed (suite {}, max n {})",
                report.outcomes.len(),
                report.suite,
                report.max_n
            );
            out.emit(text, || {
                json!({
                    "suite": report.suite.to_string(),
                    "max_n": report.max_n,
                    "passed": report.all_passed(),
                    "checks": report.outcomes.iter().map(|o| json!({
                        "name": o.name, "passed": o.passed, "detail": o.detail,
                    })).collect::<Vec<_>>(),
                })
            });
            if !report.all_passed() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => {
            eprintln!("error: verification failed");
            ExitCode::from(1)
        }
    }
}
