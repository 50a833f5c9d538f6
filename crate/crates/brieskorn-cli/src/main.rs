//! Command-line front end: exact d-invariants of Brieskorn homology spheres
//! `Sigma(p,q,r)` with `pq + pr - qr = 1`, plus enumeration, verification
//! suites, family generators, and plumbing-graph export.
//!
//! Machine-readable output goes to stdout (JSON, or CSV for `enumerate`);
//! errors go to stderr. Exit codes: 0 success, 2 invalid arguments,
//! 3 invalid triple, 4 overflow/budget, 5 verification counterexample.

mod record;

use std::process::ExitCode;

use brieskorn::dinv::{self, Method};
use brieskorn::error::Error;
use brieskorn::families::{
    self, default_grid, family_instance, fibonacci_case, GridSpec, Prediction, VerificationReport,
};
use brieskorn::plumbing::{almost_simple_linear_graph, star_graph};
use brieskorn::triples::{enumerate, Triple};
use clap::{Parser, Subcommand, ValueEnum};
use record::{OutputRecord, CSV_HEADER};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "brieskorn",
    version,
    about = "Exact d-invariants of Brieskorn homology spheres with pq+pr-qr=1"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Full,
    Refined,
    ClosedForm,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Full => Method::Full,
            MethodArg::Refined => Method::Refined,
            MethodArg::ClosedForm => Method::ClosedForm,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeArg {
    /// almost simple linear chain with a single -p leaf
    Linear,
    /// star: central e0 vertex with three Hirzebruch-Jung legs
    Star,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the d-invariant of Sigma(p, q, (pq-1)/(q-p))
    Compute {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// largest p allowed into the full O(p^2) sweep
        #[arg(long, default_value_t = 2000)]
        oracle_max_p: i64,
    },
    /// Enumerate all valid triples with p <= p-max
    Enumerate {
        #[arg(long)]
        p_max: i64,
        /// keep only triples with q - p <= this
        #[arg(long)]
        l_max: Option<i64>,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Report every applicable closed form and the slope regime
    Classify {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
    },
    /// Run a verification suite; nonzero exit on any counterexample
    Verify {
        /// theorem suite or family name
        #[arg(long)]
        suite: String,
        /// enumeration bound for theorem suites (default 500)
        #[arg(long)]
        p_max: Option<i64>,
        /// parameter grid for family suites, e.g. "t=1..5,k=1..5"
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, default_value_t = 2000)]
        oracle_max_p: i64,
    },
    /// Generate one member of a parametric family
    Family {
        #[arg(long)]
        name: String,
        /// comma-separated parameters, e.g. "k1=2,k2=3"
        #[arg(long)]
        params: String,
    },
    /// Fibonacci cases (F_{2k+1}, F_{2k+2}, F_{2k+3}) for a range of k
    Fib {
        #[arg(long)]
        k_min: i64,
        #[arg(long)]
        k_max: i64,
    },
    /// Print a plumbing graph in DOT or JSON
    Plumbing {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        #[arg(long, value_enum, default_value_t = ShapeArg::Linear)]
        shape: ShapeArg,
    },
    /// Compare two triples through the d-invariant
    Compare {
        /// first triple as "P,Q"
        #[arg(long)]
        a: String,
        /// second triple as "P,Q"
        #[arg(long)]
        b: String,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::QOutOfRange { .. }
        | Error::NonIntegralR { .. }
        | Error::NotCoprime { .. }
        | Error::EvenP { .. }
        | Error::OddP { .. }
        | Error::OutOfLattice { .. }
        | Error::EvenEntry { .. } => 3,
        Error::UnknownName(_) | Error::OutOfFamilyDomain { .. } | Error::InvalidArgument(_) => 2,
        Error::NoClosedForm { .. }
        | Error::BudgetExceeded { .. }
        | Error::Overflow
        | Error::Integrity(_)
        | Error::MalformedGraph(_) => 4,
    }
}

fn parse_pair(s: &str) -> Result<(i64, i64), Error> {
    let parts: Vec<&str> = s.split(',').collect();
    let [p, q] = parts.as_slice() else {
        return Err(Error::InvalidArgument("expected \"P,Q\""));
    };
    let parse = |x: &str| {
        x.trim()
            .parse::<i64>()
            .map_err(|_| Error::InvalidArgument("expected a decimal integer"))
    };
    Ok((parse(p)?, parse(q)?))
}

fn parse_grid(s: &str) -> Result<GridSpec, Error> {
    let mut ranges = Vec::new();
    for part in s.split(',') {
        let (name, range) = part
            .split_once('=')
            .ok_or(Error::InvalidArgument("grid entries look like name=lo..hi"))?;
        let (lo, hi) = match range.split_once("..") {
            Some((lo, hi)) => (lo, hi),
            None => (range, range),
        };
        let parse = |x: &str| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidArgument("expected a decimal integer"))
        };
        ranges.push((name.trim().to_string(), parse(lo)?, parse(hi)?));
    }
    Ok(GridSpec::new(ranges))
}

fn parse_params(s: &str) -> Result<Vec<(String, i64)>, Error> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let (name, value) = part
            .split_once('=')
            .ok_or(Error::InvalidArgument("parameters look like name=value"))?;
        let value = value
            .trim()
            .parse::<i64>()
            .map_err(|_| Error::InvalidArgument("expected a decimal integer"))?;
        out.push((name.trim().to_string(), value));
    }
    Ok(out)
}

fn report_json(rep: &VerificationReport) -> serde_json::Value {
    json!({
        "suite": rep.suite,
        "scope": rep.scope,
        "checks": rep.checks.len(),
        "passes": rep.pass_count,
        "counterexamples": rep.counterexamples,
        "truncated": rep.truncated,
        "summary": rep.summary,
        "records": rep.checks.iter().map(|c| json!({
            "label": c.label,
            "predicted": c.predicted,
            "computed": c.computed,
            "pass": c.pass,
            "note": c.note,
        })).collect::<Vec<_>>(),
    })
}

fn run(cmd: Cmd) -> Result<u8, Error> {
    match cmd {
        Cmd::Compute {
            p,
            q,
            method,
            oracle_max_p,
        } => {
            let triple = Triple::new(p, q)?;
            if matches!(method, MethodArg::Full) && p > oracle_max_p {
                return Err(Error::BudgetExceeded {
                    detail: "p exceeds --oracle-max-p for the full sweep",
                });
            }
            let rec = OutputRecord::build(&triple, method.into())?;
            println!("{}", serde_json::to_string(&rec).expect("serializable"));
            Ok(0)
        }
        Cmd::Enumerate {
            p_max,
            l_max,
            format,
        } => {
            let range = l_max.map(|hi| 1..=hi);
            if matches!(format, TableFormat::Csv) {
                println!("{CSV_HEADER}");
            }
            for triple in enumerate(p_max, range) {
                let rec = OutputRecord::build(&triple, Method::Auto)?;
                match format {
                    TableFormat::Csv => println!("{}", rec.to_csv_row()),
                    TableFormat::Json => {
                        println!("{}", serde_json::to_string(&rec).expect("serializable"))
                    }
                }
            }
            Ok(0)
        }
        Cmd::Classify { p, q } => {
            let triple = Triple::new(p, q)?;
            let rep = dinv::classify(&triple)?;
            let dec = triple.decompose().ok();
            let out = json!({
                "p": triple.p(),
                "q": triple.q(),
                "r": triple.r(),
                "n_p": dec.map(|d| d.n_p),
                "l": dec.map(|d| d.l),
                "t": dec.map(|d| d.t),
                "alpha": dec.map(|d| d.alpha),
                "s_num": dec.map(|d| d.s_raw().0),
                "s_den": dec.map(|d| d.s_raw().1),
                "regime": rep.regime.to_string(),
                "D": rep.big_d,
                "d_equals_D_guaranteed": rep.d_equals_big_d_guaranteed,
                "matches": rep.matches.iter().map(|m| json!({
                    "name": m.name,
                    "predicted_d": m.predicted_d,
                    "guarantees_d_equals_D": m.guarantees_equality,
                })).collect::<Vec<_>>(),
            });
            println!("{out}");
            Ok(0)
        }
        Cmd::Verify {
            suite,
            p_max,
            grid,
            oracle_max_p,
        } => {
            let rep = if let Some(grid) = grid {
                families::verify_family(&suite, &parse_grid(&grid)?, oracle_max_p)?
            } else if families::THEOREM_SUITES.contains(&suite.as_str()) {
                families::verify_theorem(&suite, p_max.unwrap_or(500), oracle_max_p)?
            } else if families::FAMILY_NAMES.contains(&suite.as_str()) {
                families::verify_family(&suite, &default_grid(&suite)?, oracle_max_p)?
            } else {
                return Err(Error::UnknownName(suite));
            };
            println!("{}", report_json(&rep));
            if !rep.all_pass() {
                Ok(5)
            } else if rep.truncated {
                Ok(4)
            } else {
                Ok(0)
            }
        }
        Cmd::Family { name, params } => {
            let params = parse_params(&params)?;
            let refs: Vec<(&str, i64)> = params.iter().map(|(k, v)| (k.as_str(), *v)).collect();
            let inst = family_instance(&name, &refs)?;
            let prediction = match inst.prediction {
                Prediction::Exact(d) => json!({"kind": "exact", "d": d}),
                Prediction::LowerBound { f34 } => json!({"kind": "lower-bound", "f34": f34}),
            };
            let out = json!({
                "family": inst.family,
                "params": inst.params.iter().map(|(k, v)| json!({"name": k, "value": v})).collect::<Vec<_>>(),
                "p": inst.triple.p(),
                "q": inst.triple.q(),
                "r": inst.triple.r(),
                "prediction": prediction,
            });
            println!("{out}");
            Ok(0)
        }
        Cmd::Fib { k_min, k_max } => {
            if k_min > k_max {
                return Err(Error::InvalidArgument("k-min must not exceed k-max"));
            }
            for k in k_min..=k_max {
                let case = fibonacci_case(k)?;
                let out = json!({
                    "k": k,
                    "p": case.triple.p(),
                    "q": case.triple.q(),
                    "r": case.triple.r(),
                    "d": case.result.value,
                    "D": case.big_d,
                    "F34": case.f34,
                    "method": case.result.method.to_string(),
                    "strict": case.strict,
                    "expected_strict": case.expected_strict,
                    "as_expected": case.as_expected(),
                });
                println!("{out}");
            }
            Ok(0)
        }
        Cmd::Plumbing {
            p,
            q,
            format,
            shape,
        } => {
            let triple = Triple::new(p, q)?;
            let graph = match shape {
                ShapeArg::Linear => almost_simple_linear_graph(&triple)?,
                ShapeArg::Star => star_graph(&(&triple).into())?,
            };
            match format {
                GraphFormat::Dot => println!("{}", graph.to_dot()),
                GraphFormat::Json => println!("{}", graph.to_json()),
            }
            Ok(0)
        }
        Cmd::Compare { a, b } => {
            let (pa, qa) = parse_pair(&a)?;
            let (pb, qb) = parse_pair(&b)?;
            let ta = Triple::new(pa, qa)?;
            let tb = Triple::new(pb, qb)?;
            let cmp = families::compare_cobordism(&ta, &tb)?;
            let out = json!({
                "a": {"p": ta.p(), "q": ta.q(), "r": ta.r(), "d": cmp.d1},
                "b": {"p": tb.p(), "q": tb.q(), "r": tb.r(), "d": cmp.d2},
                "verdict": if cmp.distinguished { "distinguished" } else { "inconclusive" },
            });
            println!("{out}");
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    // die quietly when a downstream pipe closes, like other line-oriented tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
