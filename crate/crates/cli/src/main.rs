//! Command-line interface: exact equivariant motivic Chern class computations.
//!
//! Exit status: 0 success, 1 verification failure (an equality or axiom check
//! that came out false), 2 usage error.

mod selftest;

use clap::{Parser, Subcommand, ValueEnum};
use motivic_core::flag::{check_axioms, mc_schubert, weight_function_flag};
use motivic_core::matrix::{orbit_sum_identity, weight_function_matrix};
use motivic_core::parse::parse_polynomial;
use motivic_core::ranks::{q_binomial, segre_class, segre_sieve, tau_rank_motivic};
use motivic_core::{
    CompositionIndex, ConvexPolytope, Int, LimitValue, OrbitIndex, RankLocus,
    RationalExpression, VariableTable,
};
use serde::Serialize;
use std::collections::BTreeMap;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "motivic", version, about = "Exact equivariant motivic Chern classes")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker thread count; MOTIVIC_THREADS is used when the flag is absent.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FlagEmit {
    Weightfn,
    Restrictions,
    Axioms,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum A2Method {
    Motivic,
    Sieve,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// Schubert cells in partial flag varieties.
    Flag {
        /// Shape, e.g. 2,2
        #[arg(long)]
        mu: String,
        /// Cell index, e.g. 1,3/2,4
        #[arg(long)]
        index: String,
        #[arg(long, value_enum, default_value_t = FlagEmit::Weightfn)]
        emit: FlagEmit,
    },
    /// Matrix Schubert cells in Hom(C^k, C^n).
    Matsch {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Column set, e.g. 2,3 (empty for the zero orbit)
        #[arg(long = "J", default_value = "")]
        j: String,
        /// Also verify that the weight functions sum to prod (1 + y a/b).
        #[arg(long)]
        sum_check: bool,
    },
    /// Motivic Segre classes of A2 rank loci.
    A2 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = A2Method::Both)]
        method: A2Method,
        /// Print coefficients in q = -y instead of y.
        #[arg(long)]
        q_display: bool,
    },
    /// Newton polytope of a Laurent polynomial.
    Polytope {
        /// Comma-separated variable names, e.g. a,b
        #[arg(long)]
        vars: String,
        /// Polynomial in canonical text form
        #[arg(long)]
        poly: String,
    },
    /// Gaussian q-binomial coefficient.
    Qbinom {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        r: usize,
    },
    /// Limit of a one-variable rational expression at infinity.
    Limit {
        /// Variable name
        #[arg(long, default_value = "xi")]
        var: String,
        /// Numerator in canonical text form
        #[arg(long)]
        num: String,
        /// Denominator in canonical text form
        #[arg(long, default_value = "(1)")]
        den: String,
    },
    /// Run the pinned golden example suite.
    Selftest,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).unwrap()),
        Format::Text => println!("{}", text()),
    }
}

fn parse_mu(s: &str) -> Option<Vec<usize>> {
    s.split(',').map(|p| p.trim().parse().ok()).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads.or_else(|| {
        std::env::var("MOTIVIC_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(t) = threads {
        if t == 0 {
            return usage_error("--threads must be positive");
        }
        if rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .is_err()
        {
            return usage_error("thread pool already initialized");
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Flag { mu, index, emit: what } => cmd_flag(cli.format, &mu, &index, what),
        Cmd::Matsch { k, n, j, sum_check } => cmd_matsch(cli.format, k, n, &j, sum_check),
        Cmd::A2 {
            k,
            n,
            r,
            method,
            q_display,
        } => cmd_a2(cli.format, k, n, r, method, q_display),
        Cmd::Polytope { vars, poly } => cmd_polytope(&vars, &poly),
        Cmd::Qbinom { a, r } => {
            let b = q_binomial::<Int>(a, r);
            #[derive(Serialize)]
            struct Out {
                a: usize,
                r: usize,
                coefficients: Vec<i64>,
                display: String,
            }
            let out = Out {
                a,
                r,
                coefficients: b.coeffs().iter().map(|c| *c as i64).collect(),
                display: b.display("q", false),
            };
            emit(cli.format, &out, || out.display.clone());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Limit { var, num, den } => cmd_limit(cli.format, &var, &num, &den),
        Cmd::Selftest => Ok(selftest::run()),
    }
}

fn cmd_flag(format: Format, mu: &str, index: &str, what: FlagEmit) -> Result<ExitCode, String> {
    let mu = parse_mu(mu).ok_or("invalid --mu")?;
    let idx = CompositionIndex::parse(index).ok_or("invalid --index")?;
    if idx.shape().mu() != mu.as_slice() {
        return Err("--index does not match --mu".to_string());
    }
    match what {
        FlagEmit::Weightfn => {
            let wf = weight_function_flag::<Int>(&idx);
            #[derive(Serialize)]
            struct Out {
                index: String,
                u: String,
                w: String,
                w_tilde: String,
            }
            let out = Out {
                index: idx.to_string(),
                u: wf.u.canonical_string(),
                w: wf.w.canonical_string(),
                w_tilde: wf.w_tilde.canonical_string(),
            };
            emit(format, &out, || {
                format!("U = {}\nW = {}\nWtilde = {}", out.u, out.w, out.w_tilde)
            });
            Ok(ExitCode::SUCCESS)
        }
        FlagEmit::Restrictions => {
            let cls = mc_schubert::<Int>(&idx).map_err(|e| e.to_string())?;
            #[derive(Serialize)]
            struct Out {
                omega: String,
                restrictions: BTreeMap<String, String>,
            }
            let out = Out {
                omega: idx.to_string(),
                restrictions: cls
                    .restrictions()
                    .map(|(j, p)| (j.to_string(), p.canonical_string()))
                    .collect(),
            };
            emit(format, &out, || {
                out.restrictions
                    .iter()
                    .map(|(j, p)| format!("{j}: {p}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(ExitCode::SUCCESS)
        }
        FlagEmit::Axioms => {
            let cls = mc_schubert::<Int>(&idx).map_err(|e| e.to_string())?;
            let report = check_axioms(&cls, &idx);
            emit(format, &report, || {
                let mut lines: Vec<String> = report
                    .entries
                    .iter()
                    .map(|e| {
                        format!(
                            "{}: positive={} i={} ii={} iii={}",
                            e.theta,
                            e.positive,
                            e.axiom_i.map_or("-".into(), |b| b.to_string()),
                            e.axiom_ii,
                            e.axiom_iii.map_or("-".into(), |b| b.to_string()),
                        )
                    })
                    .collect();
                lines.push(if report.pass { "PASS".into() } else { "FAIL".into() });
                lines.join("\n")
            });
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn cmd_matsch(
    format: Format,
    k: usize,
    n: usize,
    j: &str,
    sum_check: bool,
) -> Result<ExitCode, String> {
    if !(1 <= k && k <= n) {
        return Err("need 1 <= k <= n".to_string());
    }
    let j: Vec<usize> = if j.trim().is_empty() {
        Vec::new()
    } else {
        parse_mu(j).ok_or("invalid --J")?
    };
    if j.iter().any(|&v| v < 1 || v > n) || j.len() > k {
        return Err("--J must be a subset of 1..n with at most k entries".to_string());
    }
    let idx = OrbitIndex::new(k, n, j);
    let w = weight_function_matrix::<Int>(&idx).map_err(|e| e.to_string())?;
    let residual_zero = if sum_check {
        Some(
            orbit_sum_identity::<Int>(k, n)
                .map_err(|e| e.to_string())?
                .is_zero(),
        )
    } else {
        None
    };
    #[derive(Serialize)]
    struct Out {
        k: usize,
        n: usize,
        j: Vec<usize>,
        weight_function: String,
        sum_check: Option<bool>,
    }
    let out = Out {
        k,
        n,
        j: idx.j().to_vec(),
        weight_function: w.canonical_string(),
        sum_check: residual_zero,
    };
    emit(format, &out, || {
        let mut s = format!("W = {}", out.weight_function);
        if let Some(ok) = out.sum_check {
            s.push_str(if ok { "\nsum check: ZERO" } else { "\nsum check: NONZERO" });
        }
        s
    });
    Ok(match residual_zero {
        Some(false) => ExitCode::FAILURE,
        _ => ExitCode::SUCCESS,
    })
}

fn cmd_a2(
    format: Format,
    k: usize,
    n: usize,
    r: usize,
    method: A2Method,
    q_display: bool,
) -> Result<ExitCode, String> {
    if !(r <= k && k <= n && k >= 1) {
        return Err("need r <= k <= n with k >= 1".to_string());
    }
    let loc = RankLocus::new(k, n, r);
    let show = |e: &RationalExpression<Int>| {
        if q_display {
            e.q_string()
        } else {
            e.canonical_string()
        }
    };
    let motivic = match method {
        A2Method::Sieve => None,
        _ => Some(
            segre_class(
                tau_rank_motivic::<Int>(loc).map_err(|e| e.to_string())?,
                k,
                n,
            ),
        ),
    };
    let sieve = match method {
        A2Method::Motivic => None,
        _ => Some(segre_sieve::<Int>(loc).map_err(|e| e.to_string())?),
    };
    let equal = match (&motivic, &sieve) {
        (Some(m), Some(s)) => Some(m.rat_equal(s)),
        _ => None,
    };
    #[derive(Serialize)]
    struct Out {
        k: usize,
        n: usize,
        r: usize,
        motivic: Option<String>,
        sieve: Option<String>,
        equal: Option<bool>,
    }
    let out = Out {
        k,
        n,
        r,
        motivic: motivic.as_ref().map(&show),
        sieve: sieve.as_ref().map(&show),
        equal,
    };
    emit(format, &out, || {
        let mut lines = Vec::new();
        if let Some(m) = &out.motivic {
            lines.push(format!("motivic = {m}"));
        }
        if let Some(s) = &out.sieve {
            lines.push(format!("sieve = {s}"));
        }
        if let Some(eq) = out.equal {
            lines.push(if eq { "EQUAL".into() } else { "NOT EQUAL".into() });
        }
        lines.join("\n")
    });
    Ok(match equal {
        Some(false) => ExitCode::FAILURE,
        _ => ExitCode::SUCCESS,
    })
}

fn cmd_polytope(vars: &str, poly: &str) -> Result<ExitCode, String> {
    let names: Vec<String> = vars.split(',').map(|s| s.trim().to_string()).collect();
    if names.iter().any(|s| s.is_empty()) {
        return Err("invalid --vars".to_string());
    }
    let table = VariableTable::flat(names);
    let p = parse_polynomial::<Int>(poly, &table).map_err(|e| e.to_string())?;
    let np = ConvexPolytope::newton(&p);
    #[derive(Serialize)]
    struct Out {
        generators: Vec<Vec<i64>>,
        vertices: Vec<Vec<i64>>,
    }
    let out = Out {
        generators: np.generators().to_vec(),
        vertices: np.vertices().to_vec(),
    };
    println!("{}", serde_json::to_string_pretty(&out).unwrap());
    Ok(ExitCode::SUCCESS)
}

fn cmd_limit(format: Format, var: &str, num: &str, den: &str) -> Result<ExitCode, String> {
    let table = VariableTable::flat(vec![var.to_string()]);
    let num = parse_polynomial::<Int>(num, &table).map_err(|e| e.to_string())?;
    let den = parse_polynomial::<Int>(den, &table).map_err(|e| e.to_string())?;
    if den.is_zero() {
        return Err("zero denominator".to_string());
    }
    let h = RationalExpression::new(num, vec![den]);
    let lim = motivic_core::limit::limit_at_infinity(&h).map_err(|e| e.to_string())?;
    #[derive(Serialize)]
    struct Out {
        finite: bool,
        value: Option<String>,
    }
    let out = match &lim {
        LimitValue::Finite(v) => Out {
            finite: true,
            value: Some(v.display("y")),
        },
        LimitValue::Infinite => Out {
            finite: false,
            value: None,
        },
    };
    emit(format, &out, || match &out.value {
        Some(v) => format!("limit = {v}"),
        None => "limit = infinity".to_string(),
    });
    Ok(ExitCode::SUCCESS)
}
