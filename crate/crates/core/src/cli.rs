//! Command-line front end.
//!
//! Exit codes: `0` success, `1` domain error (square `v`, non-coprime `m`, …),
//! `2` usage error, `3` when `oracle-check` finds a disagreement.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::equiv::{ClassReport, Family};
use crate::error::Error;
use crate::oracle::{cross_check, verify_matrix, CrossCheck};
use crate::pell::{self, UnitGroupData};
use crate::surd::{make_surd, CfExpansion};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "surd-equiv", version, about = "Equivalence of quadratic irrationals m/q + sqrt(v)")]
struct Cli {
    /// Emit one JSON record instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Bound on unit powers scanned (k0 search and oracle unit scan)
    #[arg(long, global = true)]
    max_power: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct FamilyArgs {
    #[arg(long)]
    v: u64,
    #[arg(long)]
    q: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Continued fraction of m/q + sqrt(v)
    Expand {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
    },
    /// Are m/q + sqrt(v) and n/q + sqrt(v) equivalent?
    Equiv {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Do m/q + sqrt(v) and n/q + sqrt(v) have inverse periods?
    Inverse {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Does m/q + sqrt(v) have a self-inverse period?
    Selfinv {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
    },
    /// Equivalence classes of m/q + sqrt(v), 0 <= m < q, gcd(m, q) = 1
    Classes {
        #[command(flatten)]
        fam: FamilyArgs,
    },
    /// GL(2, Z) matrix carrying m/q + sqrt(v) to n/q + sqrt(v)
    Matrix {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Fundamental unit, k0 and q0
    Unitdata {
        #[command(flatten)]
        fam: FamilyArgs,
    },
    /// Compare every decision against the continued-fraction oracle.
    /// Without --v/--q, runs the grid 2 <= v <= v-max, 1 <= q <= q-max.
    OracleCheck {
        #[arg(long)]
        v: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, default_value_t = 50)]
        v_max: u64,
        #[arg(long, default_value_t = 12)]
        q_max: u64,
    },
}

/// Machine-readable output: every integer is a decimal string.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub result: Value,
}

struct Output {
    record: OutputRecord,
    text: String,
    code: i32,
}

fn strs(xs: &[BigInt]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn list(xs: &[BigInt]) -> String {
    format!("[{}]", strs(xs).join(", "))
}

fn number(m: i64, q: u64, v: u64) -> String {
    format!("{m}/{q} + sqrt({v})")
}

fn reduction_note(m: i64, reduced: u64) -> String {
    if m == reduced as i64 {
        String::new()
    } else {
        format!(" (m = {m} reduced to {reduced})")
    }
}

fn expansion_json(e: &CfExpansion) -> Value {
    json!({
        "preperiod": strs(e.preperiod()),
        "period": strs(e.period()),
        "period_length": e.period().len().to_string(),
    })
}

fn unit_data_json(d: &UnitGroupData) -> Value {
    json!({
        "s": d.s().to_string(),
        "t": d.t().to_string(),
        "norm": d.fundamental.norm().as_i32().to_string(),
        "k0": d.k0.to_string(),
        "r0_mod_q2": d.r0_mod.to_string(),
        "c0_mod_q2": d.c0_mod.to_string(),
        "q0": d.q0.to_string(),
    })
}

fn class_json(report: &ClassReport, lengths: &[Vec<usize>]) -> Value {
    let classes: Vec<Value> = report
        .classes
        .iter()
        .zip(lengths)
        .map(|(members, lens)| {
            json!({
                "members": members.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                "period_lengths": lens.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "q0": report.q0.to_string(),
        "num_classes": report.num_classes.to_string(),
        "class_size": report.class_size.to_string(),
        "classes": classes,
    })
}

fn cross_check_json(c: &CrossCheck) -> Value {
    let disagreements: Vec<Value> = c
        .disagreements
        .iter()
        .map(|d| {
            json!({
                "check": d.check,
                "v": d.v.to_string(),
                "q": d.q.to_string(),
                "m": d.m.to_string(),
                "n": d.n.map(|n| n.to_string()),
                "decided": d.decided,
                "oracle": d.oracle,
            })
        })
        .collect();
    json!({
        "pairs_checked": c.pairs.to_string(),
        "witnesses_verified": c.witnesses.to_string(),
        "agree": c.passed(),
        "disagreements": disagreements,
    })
}

fn family(fam: FamilyArgs, max_power: Option<u64>) -> Result<Family, Error> {
    let data = match max_power {
        Some(bound) => pell::unit_group_data_with_bound(fam.v, fam.q, bound)?,
        None => pell::unit_group_data(fam.v, fam.q)?,
    };
    Ok(Family::from_data(data))
}

fn inputs(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn execute(cli: &Cli) -> Result<Output, Error> {
    let ok = |command: &str, inputs, result, text| Output {
        record: OutputRecord {
            command: command.to_string(),
            inputs,
            result,
        },
        text,
        code: EXIT_OK,
    };
    let fam_inputs = |f: FamilyArgs| vec![("v", f.v.to_string()), ("q", f.q.to_string())];

    match &cli.command {
        Command::Expand { fam, m } => {
            let x = make_surd(*m, fam.q, fam.v)?;
            let e = x.expand();
            let mut ins = fam_inputs(*fam);
            ins.push(("m", m.to_string()));
            let text = format!(
                "x = {}\npre-period: {}\nperiod: {}\nperiod length: {}\n",
                number(*m, fam.q, fam.v),
                list(e.preperiod()),
                list(e.period()),
                e.period().len()
            );
            Ok(ok("expand", inputs(&ins), expansion_json(&e), text))
        }
        Command::Equiv { fam, m, n } | Command::Inverse { fam, m, n } => {
            let f = family(*fam, cli.max_power)?;
            let inverse = matches!(cli.command, Command::Inverse { .. });
            let (name, answer) = if inverse {
                ("inverse", f.inverse_periods(*m, *n)?)
            } else {
                ("equiv", f.equivalent(*m, *n)?)
            };
            let (mr, nr) = (f.reduce(*m), f.reduce(*n));
            let mut ins = fam_inputs(*fam);
            ins.extend([
                ("m", m.to_string()),
                ("n", n.to_string()),
                ("m_reduced", mr.to_string()),
                ("n_reduced", nr.to_string()),
            ]);
            let label = if inverse { "inverse periods" } else { "equivalent" };
            let text = format!(
                "{} and {}: {label} = {answer}{}\nq0 = {}\n",
                number(mr as i64, fam.q, fam.v),
                number(nr as i64, fam.q, fam.v),
                [reduction_note(*m, mr), reduction_note(*n, nr)].concat(),
                f.q0()
            );
            let result = json!({ "answer": answer, "q0": f.q0().to_string() });
            Ok(ok(name, inputs(&ins), result, text))
        }
        Command::Selfinv { fam, m } => {
            let f = family(*fam, cli.max_power)?;
            let answer = f.self_inverse(*m)?;
            let mr = f.reduce(*m);
            let mut ins = fam_inputs(*fam);
            ins.extend([("m", m.to_string()), ("m_reduced", mr.to_string())]);
            let text = format!(
                "{} {} a self-inverse period{}\nq0 = {}\n",
                number(mr as i64, fam.q, fam.v),
                if answer { "has" } else { "does not have" },
                reduction_note(*m, mr),
                f.q0()
            );
            let result = json!({ "answer": answer, "q0": f.q0().to_string() });
            Ok(ok("selfinv", inputs(&ins), result, text))
        }
        Command::Classes { fam } => {
            let f = family(*fam, cli.max_power)?;
            let report = f.class_summary();
            let lengths: Vec<Vec<usize>> = report
                .classes
                .iter()
                .map(|class| {
                    class
                        .iter()
                        .map(|&m| f.member(m as i64).expand().period().len())
                        .collect()
                })
                .collect();
            let mut text = format!(
                "v = {}, q = {}\nq0 = {}\n{} classes of {} elements\n",
                fam.v, fam.q, report.q0, report.num_classes, report.class_size
            );
            for (members, lens) in report.classes.iter().zip(&lengths) {
                let ms: Vec<String> = members.iter().map(|m| m.to_string()).collect();
                let ls: Vec<String> = lens.iter().map(|l| l.to_string()).collect();
                text += &format!("  m in {{{}}}  period lengths [{}]\n", ms.join(", "), ls.join(", "));
            }
            let result = class_json(&report, &lengths);
            Ok(ok("classes", inputs(&fam_inputs(*fam)), result, text))
        }
        Command::Matrix { fam, m, n } => {
            let f = family(*fam, cli.max_power)?;
            let w = f.witness_matrix(*m, *n)?;
            let verified = verify_matrix(&w, &f.member(*m), &f.member(*n));
            let mut ins = fam_inputs(*fam);
            ins.extend([("m", m.to_string()), ("n", n.to_string())]);
            let text = format!(
                "({} x + {}) / ({} x + {}) maps {} to {}\na = {}\nb = {}\nc = {}\nd = {}\ndeterminant = {}\nverified: {}\n",
                w.a, w.b, w.c, w.d,
                number(*m, fam.q, fam.v),
                number(*n, fam.q, fam.v),
                w.a, w.b, w.c, w.d,
                w.det(),
                verified
            );
            let result = json!({
                "a": w.a.to_string(),
                "b": w.b.to_string(),
                "c": w.c.to_string(),
                "d": w.d.to_string(),
                "det": w.det().to_string(),
                "verified": verified,
            });
            Ok(ok("matrix", inputs(&ins), result, text))
        }
        Command::Unitdata { fam } => {
            let f = family(*fam, cli.max_power)?;
            let d = f.unit_data();
            let text = format!(
                "fundamental unit: {} + {}*sqrt({}) (norm {})\nk0 = {}\n(r0, c0) mod {} = ({}, {})\nq0 = {}\n",
                d.s(),
                d.t(),
                d.v,
                d.fundamental.norm(),
                d.k0,
                d.q * d.q,
                d.r0_mod,
                d.c0_mod,
                d.q0
            );
            Ok(ok("unitdata", inputs(&fam_inputs(*fam)), unit_data_json(d), text))
        }
        Command::OracleCheck { v, q, v_max, q_max } => {
            let vs: Vec<u64> = match v {
                Some(v) => vec![*v],
                None => (2..=*v_max).filter(|v| !is_square(*v)).collect(),
            };
            let qs: Vec<u64> = match q {
                Some(q) => vec![*q],
                None => (1..=*q_max).collect(),
            };
            let mut total = CrossCheck::default();
            for &v in &vs {
                for &q in &qs {
                    total.merge(cross_check(v, q, cli.max_power)?);
                }
            }
            let mut ins = vec![];
            match v {
                Some(v) => ins.push(("v", v.to_string())),
                None => ins.push(("v_max", v_max.to_string())),
            }
            match q {
                Some(q) => ins.push(("q", q.to_string())),
                None => ins.push(("q_max", q_max.to_string())),
            }
            if let Some(bound) = cli.max_power {
                ins.push(("max_power", bound.to_string()));
            }
            let mut text = format!(
                "families: {}\npairs checked: {}\nwitnesses verified: {}\n",
                vs.len() * qs.len(),
                total.pairs,
                total.witnesses
            );
            for d in &total.disagreements {
                text += &format!(
                    "DISAGREE {} v={} q={} m={} n={:?}: decided {} oracle {}\n",
                    d.check, d.v, d.q, d.m, d.n, d.decided, d.oracle
                );
            }
            text += if total.passed() { "all checks agree\n" } else { "disagreements found\n" };
            let mut out = ok("oracle-check", inputs(&ins), cross_check_json(&total), text);
            if !total.passed() {
                out.code = EXIT_DISAGREEMENT;
            }
            Ok(out)
        }
    }
}

fn is_square(v: u64) -> bool {
    crate::arith::is_perfect_square(&BigInt::from(v))
}

/// Parses `argv` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli) {
        Ok(output) => {
            let written = if cli.json {
                serde_json::to_string(&output.record)
                    .map(|s| writeln!(out, "{s}"))
                    .expect("output record serializes")
            } else {
                write!(out, "{}", output.text)
            };
            if written.is_err() {
                return EXIT_USAGE;
            }
            output.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}
