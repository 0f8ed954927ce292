//! Command-line front end: spectra, Milnor numbers, monodromy data, and
//! projective node bounds, with paper-style tables or JSON on stdout.
//!
//! Exit codes: 0 for successful computations (an infeasible configuration is
//! data, not an error), 1 for domain errors, 2 for usage and input syntax
//! errors. Diagnostics go to stderr, results to stdout.

use std::io::Write;

use clap::error::ErrorKind;
use clap::{ArgAction, Args, Parser, Subcommand};
use serde_json::{json, Value};

use spectre_core::bounds::{
    arnold_number, basset_bound, check_configuration, max_copies, miyaoka_yau_bound,
    plane_curve_bound, BoundProblem, MaxCopies,
};
use spectre_core::lefschetz::{
    ak_chain, local_monodromy, matrix_order, total_monodromy, IntMatrix,
};
use spectre_core::local::{milnor_number_with, LocalOrder, Milnor, DEFAULT_STAIRCASE_LIMIT};
use spectre_core::newton::{newton_polyhedron, nondegenerate_spectrum_with};
use spectre_core::parse::parse_polynomial;
use spectre_core::poly::Poly;
use spectre_core::rat::format_rat;
use spectre_core::spectrum::{EigenvalueSet, IntervalKind, SpectralSet};
use spectre_core::weights::{bp_spectrum, detect_weights, qh_spectrum};

pub const MAX_STAIRCASE_ENV: &str = "SPECTRE_MAX_STAIRCASE";

#[derive(Parser, Debug)]
#[command(
    name = "spectre",
    about = "Exact spectra of isolated hypersurface singularities and projective node bounds",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct PolyInput {
    /// Polynomial in the input grammar, e.g. "x^3+y^4" or "2*x^2*y-1/3*z^5"
    #[arg(value_name = "POLY", allow_hyphen_values = true)]
    poly: Option<String>,
    /// Comma-separated variable order, e.g. --vars x,y,z
    #[arg(long, value_name = "NAMES")]
    vars: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct SpectrumSource {
    #[command(flatten)]
    poly: PolyInput,
    /// Pure-power exponents a_0,...,a_n, e.g. --bp 2,3
    #[arg(long, value_name = "EXPONENTS", conflicts_with = "poly")]
    bp: Option<String>,
    /// Built-in singularity name: A<k>, D<k> (k >= 4), E6, E7, E8
    #[arg(long, value_name = "NAME", conflicts_with_all = ["poly", "bp"])]
    sing: Option<String>,
    /// Ambient variable count for --sing (default: the germ's own)
    #[arg(short = 'n', long = "ambient", value_name = "VARS")]
    ambient: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Milnor number of a germ
    Mu {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long, action = ArgAction::SetTrue)]
        json: bool,
    },
    /// Spectrum of a quasi-homogeneous germ, a pure-power sum, or a built-in
    Spectrum {
        #[command(flatten)]
        source: SpectrumSource,
        #[arg(long, action = ArgAction::SetTrue)]
        json: bool,
    },
    /// Spectrum of a convenient germ through its Newton diagram
    #[command(name = "newton-spectrum")]
    NewtonSpectrum {
        #[command(flatten)]
        input: PolyInput,
        /// Acknowledge that nondegeneracy is the caller's assertion
        #[arg(long, action = ArgAction::SetTrue)]
        assume_nondegenerate: bool,
        #[arg(long, action = ArgAction::SetTrue)]
        json: bool,
    },
    /// Log canonical threshold from the Newton diagram
    Lct {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long, action = ArgAction::SetTrue)]
        json: bool,
    },
    /// Arnold lattice-point count A_n(d)
    Arnold {
        #[arg(short, value_name = "N")]
        n: usize,
        #[arg(short, value_name = "D")]
        d: u64,
        #[arg(long, action = ArgAction::SetTrue)]
        json: bool,
    },
    /// Maximal copies of one singularity on a degree-d hypersurface in P^n
    Bound {
        #[arg(short, value_name = "N")]
        n: usize,
        #[arg(short, value_name = "D")]
        d: u64,
        /// Singularity name, e.g. A1
        #[arg(long, value_name = "NAME")]
        sing: String,
        #[arg(long, value_enum, default_value = "open")]
        interval: IntervalArg,
        #[arg(long, action = ArgAction::SetTrue)]
        json: bool,
    },
    /// Check a configuration of singularities against the Fermat spectrum
    Check {
        #[arg(short, value_name = "N")]
        n: usize,
        #[arg(short, value_name = "D")]
        d: u64,
        /// Singularity names, repeatable; comma lists and counts allowed
        /// (e.g. --sing A5,A1 or --sing 4xA1)
        #[arg(long, value_name = "NAMES", required = true)]
        sing: Vec<String>,
        #[arg(long, value_enum, default_value = "open")]
        interval: IntervalArg,
        #[arg(long, action = ArgAction::SetTrue)]
        json: bool,
    },
    /// Monodromy data: eigenvalues from a spectrum, or integer matrices for
    /// a chain morsification
    Monodromy {
        #[command(flatten)]
        source: SpectrumSource,
        /// Chain length k: work with the k-cycle morsification matrices
        #[arg(long, value_name = "K", conflicts_with_all = ["poly", "bp", "sing"])]
        ak: Option<usize>,
        #[arg(long, action = ArgAction::SetTrue)]
        json: bool,
    },
    /// Classical node bounds for a given degree
    Classical {
        #[arg(short, value_name = "D")]
        d: u64,
        #[arg(long, action = ArgAction::SetTrue)]
        json: bool,
    },
}

#[derive(clap::ValueEnum, Debug, Clone, Copy)]
enum IntervalArg {
    Open,
    Halfopen,
}

impl From<IntervalArg> for IntervalKind {
    fn from(a: IntervalArg) -> Self {
        match a {
            IntervalArg::Open => IntervalKind::Open,
            IntervalArg::Halfopen => IntervalKind::HalfOpenRight,
        }
    }
}

/// Error carrying the exit code it maps to.
#[derive(Debug)]
struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }
}

fn domain_err<T, E: std::fmt::Display>(r: Result<T, E>) -> CliResult<T> {
    r.map_err(|e| CliError::domain(e.to_string()))
}

type CliResult<T> = Result<T, CliError>;

/// Run the tool on `argv` (including the program name), writing results to
/// `out` and diagnostics to `err`; returns the process exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

fn staircase_limit() -> CliResult<usize> {
    match std::env::var(MAX_STAIRCASE_ENV) {
        Ok(v) => v.parse().ok().filter(|&n: &usize| n > 0).ok_or_else(|| {
            CliError::usage(format!(
                "{MAX_STAIRCASE_ENV} must be a positive integer, got `{v}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_STAIRCASE_LIMIT),
    }
}

fn parse_vars(vars: &Option<String>) -> Option<Vec<String>> {
    vars.as_ref()
        .map(|v| v.split(',').map(|s| s.trim().to_string()).collect())
}

fn read_poly(input: &PolyInput) -> CliResult<Poly> {
    let Some(text) = &input.poly else {
        return Err(CliError::usage("a polynomial argument is required"));
    };
    let vars = parse_vars(&input.vars);
    parse_polynomial(text, vars.as_deref()).map_err(|e| CliError::usage(e.to_string()))
}

fn parse_u64_list(text: &str, what: &str) -> CliResult<Vec<u64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| CliError::usage(format!("invalid {what} entry `{s}`")))
        })
        .collect()
}

/// Spectrum of a built-in A-D-E germ, stabilized to `ambient_vars` variables
/// by repeatedly adding a square.
///
/// The A series comes straight from the one-variable power; D_k and E7 are
/// quasi-homogeneous but not convenient, so their curve spectra are computed
/// from their detected weights; E6 and E8 are convenient and nondegenerate
/// and go through the Newton diagram.
pub fn builtin_singularity(name: &str, ambient_vars: usize) -> Result<SpectralSet, String> {
    let upper = name.trim().to_uppercase();
    let (base, base_vars) = if let Some(k) = upper.strip_prefix('A') {
        let k: u64 = k
            .parse()
            .ok()
            .filter(|&k| k >= 1)
            .ok_or_else(|| format!("unknown singularity `{name}`"))?;
        (SpectralSet::power_of_one_variable(k + 1), 1)
    } else if let Some(k) = upper.strip_prefix('D') {
        let k: u64 = k
            .parse()
            .ok()
            .filter(|&k| k >= 4)
            .ok_or_else(|| format!("unknown singularity `{name}` (D needs k >= 4)"))?;
        let f = parse_polynomial(&format!("x^{}+x*y^2", k - 1), None)
            .expect("well-formed D_k equation");
        let w = detect_weights(&f).map_err(|e| e.to_string())?;
        (qh_spectrum(&w).map_err(|e| e.to_string())?, 2)
    } else {
        let f = match upper.as_str() {
            "E6" => "x^3+y^4",
            "E7" => "x^3+x*y^3",
            "E8" => "x^3+y^5",
            _ => return Err(format!("unknown singularity `{name}`")),
        };
        let f = parse_polynomial(f, None).expect("well-formed E_k equation");
        let s = if upper == "E7" {
            let w = detect_weights(&f).map_err(|e| e.to_string())?;
            qh_spectrum(&w).map_err(|e| e.to_string())?
        } else {
            nondegenerate_spectrum_with(&f, DEFAULT_STAIRCASE_LIMIT).map_err(|e| e.to_string())?
        };
        (s, 2)
    };
    if ambient_vars < base_vars {
        return Err(format!(
            "`{name}` needs at least {base_vars} variables, got {ambient_vars}"
        ));
    }
    let mut s = base;
    for _ in base_vars..ambient_vars {
        s = s.suspension(2);
    }
    Ok(s)
}

/// Parse one `--sing` item: `NAME` or `<count>xNAME`.
fn parse_sing_item(item: &str, n: usize) -> CliResult<Vec<SpectralSet>> {
    let item = item.trim();
    let (count, name) = match item.split_once(['x', 'X']) {
        Some((num, rest)) if num.chars().all(|c| c.is_ascii_digit()) && !num.is_empty() => {
            let c: usize = num
                .parse()
                .map_err(|_| CliError::usage(format!("bad count in `{item}`")))?;
            (c, rest)
        }
        _ => (1, item),
    };
    if count == 0 {
        return Ok(Vec::new());
    }
    let s = builtin_singularity(name, n).map_err(CliError::usage)?;
    Ok(vec![s; count])
}

fn parse_sing_list(items: &[String], n: usize) -> CliResult<Vec<SpectralSet>> {
    let mut out = Vec::new();
    for item in items {
        for piece in item.split(',') {
            out.extend(parse_sing_item(piece, n)?);
        }
    }
    if out.is_empty() {
        return Err(CliError::usage("no singularities given"));
    }
    Ok(out)
}

fn spectrum_json(s: &SpectralSet) -> Value {
    json!({
        "num_vars": s.num_vars(),
        "mu": s.mu(),
        "spectrum": s
            .entries()
            .iter()
            .map(|(a, m)| json!({"alpha": format_rat(a), "mult": m}))
            .collect::<Vec<_>>(),
    })
}

fn eigenvalues_json(e: &EigenvalueSet) -> Value {
    json!(e
        .entries()
        .iter()
        .map(|(a, m)| json!({"fraction": format_rat(a), "mult": m}))
        .collect::<Vec<_>>())
}

fn matrix_json(m: &IntMatrix) -> Value {
    let rows: Vec<Value> = (0..m.size())
        .map(|i| {
            json!((0..m.size())
                .map(|j| m.get(i, j).to_string())
                .collect::<Vec<_>>())
        })
        .collect();
    json!(rows)
}

fn matrix_text(m: &IntMatrix) -> String {
    let rows: Vec<String> = (0..m.size())
        .map(|i| {
            let cells: Vec<String> = (0..m.size()).map(|j| m.get(i, j).to_string()).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

/// Resolve a spectrum from exactly one of: a polynomial (quasi-homogeneous
/// route), a pure-power exponent list, or a built-in name.
fn resolve_spectrum(source: &SpectrumSource) -> CliResult<SpectralSet> {
    match (&source.poly.poly, &source.bp, &source.sing) {
        (Some(_), None, None) => {
            let f = read_poly(&source.poly)?;
            let w = domain_err(detect_weights(&f))?;
            domain_err(qh_spectrum(&w))
        }
        (None, Some(bp), None) => {
            let exps = parse_u64_list(bp, "exponent")?;
            if exps.iter().any(|&a| a < 2) {
                return Err(CliError::usage("pure-power exponents must be at least 2"));
            }
            Ok(bp_spectrum(&exps))
        }
        (None, None, Some(name)) => {
            let base_vars = builtin_base_vars(name).map_err(CliError::usage)?;
            let ambient = source.ambient.unwrap_or(base_vars);
            builtin_singularity(name, ambient).map_err(CliError::usage)
        }
        _ => Err(CliError::usage(
            "exactly one of a polynomial, --bp, or --sing is required",
        )),
    }
}

fn builtin_base_vars(name: &str) -> Result<usize, String> {
    let upper = name.trim().to_uppercase();
    if upper.starts_with('A') {
        Ok(1)
    } else if upper.starts_with('D') || upper.starts_with('E') {
        Ok(2)
    } else {
        Err(format!("unknown singularity `{name}`"))
    }
}

fn write_spectrum_text(out: &mut dyn Write, s: &SpectralSet) {
    let _ = writeln!(out, "{}", s.render_table());
    let _ = writeln!(out, "mu = {}", s.mu());
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CliResult<()> {
    match cmd {
        Command::Mu { input, json } => {
            let f = read_poly(&input)?;
            let limit = staircase_limit()?;
            let data = domain_err(milnor_number_with(&f, LocalOrder::NegDegRevLex, limit))?;
            match (&data.mu, json) {
                (Milnor::Finite(mu), false) => {
                    let _ = writeln!(out, "{mu}");
                }
                (Milnor::Infinite, false) => {
                    let _ = writeln!(out, "infinite");
                }
                (Milnor::Finite(mu), true) => {
                    let _ = writeln!(out, "{}", json!({ "mu": mu }));
                }
                (Milnor::Infinite, true) => {
                    let _ = writeln!(out, "{}", json!({ "mu": "infinite" }));
                }
            }
            Ok(())
        }
        Command::Spectrum { source, json } => {
            let s = resolve_spectrum(&source)?;
            if json {
                let _ = writeln!(out, "{}", spectrum_json(&s));
            } else {
                write_spectrum_text(out, &s);
            }
            Ok(())
        }
        Command::NewtonSpectrum {
            input,
            assume_nondegenerate,
            json,
        } => {
            if !assume_nondegenerate {
                return Err(CliError::usage(
                    "newton-spectrum requires --assume-nondegenerate: \
                     nondegeneracy is not verified",
                ));
            }
            let f = read_poly(&input)?;
            let limit = staircase_limit()?;
            let s = domain_err(nondegenerate_spectrum_with(&f, limit))?;
            let p = newton_polyhedron(&f.support());
            let lct = domain_err(p.lct())?;
            if json {
                let mut v = spectrum_json(&s);
                v["lct"] = Value::String(format_rat(&lct));
                let _ = writeln!(out, "{v}");
            } else {
                write_spectrum_text(out, &s);
                let _ = writeln!(out, "lct = {}", format_rat(&lct));
            }
            Ok(())
        }
        Command::Lct { input, json } => {
            let f = read_poly(&input)?;
            if f.is_zero() {
                return Err(CliError::domain("the zero polynomial has no Newton diagram"));
            }
            if !f.vanishes_at_origin() {
                return Err(CliError::domain(
                    "the germ does not vanish at the origin, so it has no Newton diagram there",
                ));
            }
            let p = newton_polyhedron(&f.support());
            let lct = domain_err(p.lct())?;
            if json {
                let _ = writeln!(out, "{}", json!({ "lct": format_rat(&lct) }));
            } else {
                let _ = writeln!(out, "{}", format_rat(&lct));
            }
            Ok(())
        }
        Command::Arnold { n, d, json } => {
            let a = arnold_number(n, d);
            if json {
                let v = match a.to_string().parse::<u64>() {
                    Ok(small) => json!({ "arnold": small }),
                    Err(_) => json!({ "arnold": a.to_string() }),
                };
                let _ = writeln!(out, "{v}");
            } else {
                let _ = writeln!(out, "{a}");
            }
            Ok(())
        }
        Command::Bound {
            n,
            d,
            sing,
            interval,
            json,
        } => {
            if n < 1 || d < 2 {
                return Err(CliError::usage("bound needs n >= 1 and d >= 2"));
            }
            let germ = builtin_singularity(&sing, n).map_err(CliError::usage)?;
            let kind: IntervalKind = interval.into();
            let problem = BoundProblem { n, d, kind };
            let MaxCopies::Bounded(b) = max_copies(&germ, &problem) else {
                return Err(CliError::domain("bound is not finite"));
            };
            let other_kind = match kind {
                IntervalKind::Open => IntervalKind::HalfOpenRight,
                IntervalKind::HalfOpenRight => IntervalKind::Open,
            };
            let other = match max_copies(
                &germ,
                &BoundProblem {
                    kind: other_kind,
                    ..problem
                },
            ) {
                MaxCopies::Bounded(o) => Some(o),
                MaxCopies::Unbounded => None,
            };
            if json {
                let mut v = json!({
                    "bound": b,
                    "interval": match kind {
                        IntervalKind::Open => "open",
                        IntervalKind::HalfOpenRight => "halfopen",
                    },
                });
                if let Some(o) = other.filter(|o| *o != b) {
                    v["other_interval_bound"] = json!(o);
                }
                let _ = writeln!(out, "{v}");
            } else {
                let _ = writeln!(out, "{b}");
                if let Some(o) = other.filter(|o| *o != b) {
                    let name = match other_kind {
                        IntervalKind::Open => "open (Varchenko)",
                        IntervalKind::HalfOpenRight => "half-open (Steenbrink)",
                    };
                    let _ = writeln!(out, "note: {name} intervals give {o}");
                }
            }
            Ok(())
        }
        Command::Check {
            n,
            d,
            sing,
            interval,
            json,
        } => {
            if n < 1 || d < 2 {
                return Err(CliError::usage("check needs n >= 1 and d >= 2"));
            }
            let germs = parse_sing_list(&sing, n)?;
            let refs: Vec<&SpectralSet> = germs.iter().collect();
            let kind: IntervalKind = interval.into();
            let report = check_configuration(&refs, &BoundProblem { n, d, kind });
            if json {
                let _ = writeln!(out, "{}", report.to_json());
            } else {
                let verdict = if report.feasible {
                    "feasible"
                } else {
                    "infeasible"
                };
                let _ = writeln!(out, "{verdict}");
                let relation = if report.config_count > report.fermat_count {
                    ">"
                } else {
                    "<="
                };
                let _ = writeln!(
                    out,
                    "worst alpha = {}: config {} {} fermat {}",
                    format_rat(&report.worst_alpha),
                    report.config_count,
                    relation,
                    report.fermat_count
                );
                let other_kind = match kind {
                    IntervalKind::Open => IntervalKind::HalfOpenRight,
                    IntervalKind::HalfOpenRight => IntervalKind::Open,
                };
                let other = check_configuration(&refs, &BoundProblem { n, d, kind: other_kind });
                if other.feasible != report.feasible {
                    let name = match other_kind {
                        IntervalKind::Open => "open (Varchenko)",
                        IntervalKind::HalfOpenRight => "half-open (Steenbrink)",
                    };
                    let verdict = if other.feasible { "feasible" } else { "infeasible" };
                    let _ = writeln!(out, "note: {name} intervals give {verdict}");
                }
            }
            Ok(())
        }
        Command::Monodromy { source, ak, json } => {
            if let Some(k) = ak {
                if k < 1 {
                    return Err(CliError::usage("--ak needs k >= 1"));
                }
                let basis = ak_chain(k);
                let total = total_monodromy(&basis);
                let order = matrix_order(&total, 10_000).ok();
                let charpoly = total.char_poly();
                if json {
                    let locals: Vec<Value> = (0..k)
                        .map(|i| matrix_json(&local_monodromy(&basis, i)))
                        .collect();
                    let v = json!({
                        "rank": k,
                        "intersection": matrix_json(&basis.intersection),
                        "local": locals,
                        "total": matrix_json(&total),
                        "order": order,
                        "char_poly": charpoly.display(),
                    });
                    let _ = writeln!(out, "{v}");
                } else {
                    let _ = writeln!(out, "intersection form: {}", matrix_text(&basis.intersection));
                    for i in 0..k {
                        let _ = writeln!(
                            out,
                            "T_{} = {}",
                            i + 1,
                            matrix_text(&local_monodromy(&basis, i))
                        );
                    }
                    let _ = writeln!(out, "T = {}", matrix_text(&total));
                    let _ = writeln!(out, "characteristic polynomial: {}", charpoly.display());
                    match order {
                        Some(q) => {
                            let _ = writeln!(out, "order: {q}");
                        }
                        None => {
                            let _ = writeln!(out, "order: not finite within cap");
                        }
                    }
                }
                return Ok(());
            }
            let s = resolve_spectrum(&source)?;
            let e = s.eigenvalues();
            let order = e.monodromy_order();
            let charpoly = domain_err(e.characteristic_polynomial())?;
            if json {
                let v = json!({
                    "eigenvalues": eigenvalues_json(&e),
                    "char_poly": charpoly.expanded.display(),
                    "cyclotomic_factors": charpoly
                        .factors
                        .iter()
                        .map(|(q, m)| json!({"q": q, "mult": m}))
                        .collect::<Vec<_>>(),
                    "semisimple_order": order.to_string(),
                });
                let _ = writeln!(out, "{v}");
            } else {
                let fracs: Vec<String> = e
                    .entries()
                    .iter()
                    .map(|(a, m)| format!("{}x{}", m, format_rat(a)))
                    .collect();
                let _ = writeln!(out, "eigenvalue fractions: {}", fracs.join(", "));
                let factors: Vec<String> = charpoly
                    .factors
                    .iter()
                    .map(|(q, m)| {
                        if *m == 1 {
                            format!("Phi_{q}")
                        } else {
                            format!("Phi_{q}^{m}")
                        }
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    "characteristic polynomial: {}  (= {})",
                    charpoly.expanded.display(),
                    factors.join(" * ")
                );
                let _ = writeln!(out, "order of semisimple part: {order}");
            }
            Ok(())
        }
        Command::Classical { d, json } => {
            let plane = plane_curve_bound(d).map_err(|e| CliError::domain(e.to_string()))?;
            let basset = basset_bound(d);
            let my = miyaoka_yau_bound(d);
            if json {
                let mut v = json!({ "plane_curve": plane.to_string() });
                if let Ok(b) = &basset {
                    v["basset"] = json!(b.to_string());
                }
                if let Ok(m) = &my {
                    v["miyaoka_yau"] = json!(format_rat(m));
                }
                let _ = writeln!(out, "{v}");
            } else {
                let _ = writeln!(out, "plane curve nodes: {plane}");
                match &basset {
                    Ok(b) => {
                        let _ = writeln!(out, "Basset surface bound: {b}");
                    }
                    Err(e) => {
                        let _ = writeln!(out, "Basset surface bound: n/a ({e})");
                    }
                }
                match &my {
                    Ok(m) => {
                        let _ = writeln!(out, "Miyaoka-Yau surface bound: {}", format_rat(m));
                    }
                    Err(e) => {
                        let _ = writeln!(out, "Miyaoka-Yau surface bound: n/a ({e})");
                    }
                }
            }
            Ok(())
        }
    }
}
