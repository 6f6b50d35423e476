//! Command execution.  Every command returns its standard-output text and
//! an exit status; nothing here writes to standard output directly.

use crate::args::{Cli, Command, CountWhich, Format, Suite};
use crate::listing::{borel_listing, to_csv, to_json, to_text, Listing, MAX_LISTING_N};
use crate::tableau::{proper_records, render};
use crate::SCHEMA;
use atlas_double::{cross_bracket, Double};
use atlas_freealg::{Bicharacter, Mode};
use atlas_nichols::Verdict;
use atlas_rootdata::{
    build_rt, cond_pair, count_borel, count_full_with_progress, CellVerdict, DiagramStyle, PairReport,
    RootSequence,
};
use serde_json::json;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};
use thiserror::Error;

/// Largest rank for `count borel`.
pub const MAX_BOREL_COUNT_N: usize = 9;
/// Largest rank for `count full`.
pub const MAX_FULL_COUNT_N: usize = 7;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("computation failed: {0}")]
    Compute(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Compute(_) | CliError::Io(_) => EXIT_FAIL,
        }
    }
}

/// Validated settings of one invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: usize,
    pub command: Command,
    pub format: Format,
    pub bound: u32,
    pub threads: Option<usize>,
    pub multiparameter: bool,
    pub out: Option<PathBuf>,
    pub style: DiagramStyle,
    pub seed: u64,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let n = match (&cli.command, cli.n) {
            (Command::Pair { theta, .. }, explicit) => {
                let len = parse_values(theta)?.len();
                if let Some(n) = explicit.filter(|&n| n != len) {
                    return Err(CliError::Usage(format!("--n {n} does not match the length {len} of theta")));
                }
                len
            }
            (_, n) => n.unwrap_or(3),
        };
        if n == 0 {
            return Err(CliError::Usage("--n must be at least 1".into()));
        }
        if cli.bound == 0 {
            return Err(CliError::Usage("--bound must be at least 1".into()));
        }
        if cli.threads == Some(0) {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        Ok(RunConfig {
            n,
            command: cli.command,
            format: cli.format,
            bound: cli.bound,
            threads: cli.threads,
            multiparameter: cli.multiparameter,
            out: cli.out,
            style: if cli.unicode { DiagramStyle::Unicode } else { DiagramStyle::Ascii },
            seed: cli.seed,
        })
    }

    fn mode(&self) -> Mode {
        if self.multiparameter {
            Mode::Multiparameter
        } else {
            Mode::OneParameter
        }
    }
}

/// Output text and exit status of a command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn pass(stdout: String) -> Self {
        Outcome { stdout, code: EXIT_PASS }
    }
}

pub fn execute(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match &cfg.command {
        Command::Borel => cmd_borel(cfg),
        Command::Tableau => cmd_tableau(cfg),
        Command::Count { which } => cmd_count(cfg, *which),
        Command::Verify { suite } => cmd_verify(cfg, *suite),
        Command::Pair { theta, theta_neg, symbolic } => cmd_pair(cfg, theta, theta_neg, *symbolic),
    }
}

fn emit_listing(cfg: &RunConfig, l: &Listing, text: impl FnOnce(&Listing) -> String) -> String {
    match cfg.format {
        Format::Json => to_json(l) + "\n",
        Format::Csv => to_csv(l),
        Format::Text => text(l),
    }
}

fn cmd_borel(cfg: &RunConfig) -> Result<Outcome, CliError> {
    if cfg.n > MAX_LISTING_N {
        return Err(CliError::Usage(format!("borel lists at most n = {MAX_LISTING_N}")));
    }
    let l = borel_listing(cfg.n, cfg.style);
    Ok(Outcome::pass(emit_listing(cfg, &l, to_text)))
}

fn cmd_tableau(cfg: &RunConfig) -> Result<Outcome, CliError> {
    if !(2..=6).contains(&cfg.n) {
        return Err(CliError::Usage("tableau needs 2 <= n <= 6".into()));
    }
    let records = proper_records(cfg.n, cfg.style);
    let l = Listing { schema: SCHEMA.to_string(), n: cfg.n, records };
    Ok(Outcome::pass(emit_listing(cfg, &l, |l| render(&l.records, l.n))))
}

/// Prints pairs/sec to standard error until `stop` is set.
fn progress_reporter(done: &AtomicU64, stop: &AtomicBool, total: u64, start: Instant) {
    let mut last = Instant::now();
    while !stop.load(Ordering::Relaxed) {
        std::thread::sleep(Duration::from_millis(50));
        if last.elapsed() < Duration::from_secs(1) {
            continue;
        }
        last = Instant::now();
        let d = done.load(Ordering::Relaxed);
        let secs = start.elapsed().as_secs_f64();
        eprint!("\r{d}/{total} pairs scanned, {:.0} pairs/s", d as f64 / secs);
    }
    if start.elapsed() >= Duration::from_secs(1) {
        eprintln!();
    }
}

fn cmd_count(cfg: &RunConfig, which: CountWhich) -> Result<Outcome, CliError> {
    let n = cfg.n;
    let start = Instant::now();
    let (count, cond) = match which {
        CountWhich::Borel => {
            if n > MAX_BOREL_COUNT_N {
                return Err(CliError::Usage(format!("count borel supports n <= {MAX_BOREL_COUNT_N}")));
            }
            (count_borel(n), None)
        }
        CountWhich::Full => {
            if n > MAX_FULL_COUNT_N {
                return Err(CliError::Usage(format!("count full supports n <= {MAX_FULL_COUNT_N}")));
            }
            let rows: u64 = (2..=n as u64 + 1).product();
            let done = AtomicU64::new(0);
            let stop = AtomicBool::new(false);
            let c = std::thread::scope(|s| {
                s.spawn(|| progress_reporter(&done, &stop, rows * rows, start));
                let c = count_full_with_progress(n, &done);
                stop.store(true, Ordering::Relaxed);
                c
            });
            (c.total, Some(c))
        }
    };
    let secs = start.elapsed().as_secs_f64();
    let which_s = match which {
        CountWhich::Borel => "borel",
        CountWhich::Full => "full",
    };
    let out = match cfg.format {
        Format::Json => {
            let mut v = json!({ "schema": SCHEMA, "which": which_s, "n": n, "count": count, "seconds": secs });
            if let Some(c) = cond {
                v["all_cond1"] = json!(c.all_cond1);
                v["uses_cond2"] = json!(c.uses_cond2());
            }
            serde_json::to_string_pretty(&v).expect("serializes") + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let c1 = cond.map(|c| c.all_cond1.to_string()).unwrap_or_default();
            let c2 = cond.map(|c| c.uses_cond2().to_string()).unwrap_or_default();
            w.write_record(["schema", "which", "n", "count", "all_cond1", "uses_cond2", "seconds"])?;
            w.write_record([SCHEMA, which_s, &n.to_string(), &count.to_string(), &c1, &c2, &format!("{secs:.3}")])?;
            String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("utf-8")
        }
        Format::Text => {
            let mut s = format!("count {which_s} n={n}: {count}\n");
            if let Some(c) = cond {
                let _ = writeln!(s, "  every cell by condition 1: {}", c.all_cond1);
                let _ = writeln!(s, "  some cell needs condition 2: {}", c.uses_cond2());
            }
            let _ = writeln!(s, "  time: {secs:.3} s");
            s
        }
    };
    Ok(Outcome::pass(out))
}

/// Run one suite, returning its verdicts and extra report lines.
pub fn run_suite(cfg: &RunConfig, suite: Suite) -> Result<(Vec<Verdict>, Vec<String>), CliError> {
    use atlas_double::suites as d;
    use atlas_nichols::suites as s;
    let (n, bound, mode, seed) = (cfg.n, cfg.bound, cfg.mode(), cfg.seed);
    let nerr = |e: atlas_nichols::NicholsError| CliError::Compute(e.to_string());
    let derr = |e: atlas_double::DoubleError| CliError::Compute(e.to_string());
    let one = |v: Verdict| Ok((vec![v], Vec::new()));
    match suite {
        Suite::Identities => one(s::identity_suite(100, seed, mode).map_err(nerr)?),
        Suite::Derivatives => one(s::derivative_suite(n, mode).map_err(nerr)?),
        Suite::Omega => one(s::omega_suite(n, 50, seed, mode).map_err(nerr)?),
        Suite::Pbw => one(s::pbw_suite(n, bound, mode).map_err(nerr)?),
        Suite::Coideal => one(s::coideal_suite(n, bound, mode).map_err(nerr)?),
        Suite::Theorem26 => one(s::theorem26_suite(n, mode).map_err(nerr)?),
        Suite::Decode => one(s::structure_suite(n, mode).map_err(nerr)?),
        Suite::Double => {
            let a = d::double_suite(n, 20, seed, mode).map_err(derr)?;
            let b = d::cross_suite(n, mode).map_err(derr)?;
            Ok((vec![a, b], Vec::new()))
        }
        Suite::Sh => one(d::sh_suite(n, mode).map_err(derr)?),
        Suite::Derm => one(d::derm_suite(n, mode).map_err(derr)?),
        Suite::Consistency => {
            let (v, report) = d::consistency_suite(n, bound, mode).map_err(derr)?;
            let line = format!("accepted {}/{} pairs", report.accepted(), report.pairs.len());
            Ok((vec![v], vec![line]))
        }
    }
}

fn cmd_verify(cfg: &RunConfig, suite: Suite) -> Result<Outcome, CliError> {
    let (verdicts, extra) = run_suite(cfg, suite)?;
    let passed = verdicts.iter().all(|v| v.passed());
    let suite_s = format!("{suite:?}").to_lowercase();
    let out = match cfg.format {
        Format::Json => {
            let vs: Vec<_> = verdicts
                .iter()
                .map(|v| json!({ "name": v.name, "checked": v.checked, "failure": v.failure }))
                .collect();
            let v = json!({
                "schema": SCHEMA, "suite": suite_s, "n": cfg.n, "bound": cfg.bound,
                "passed": passed, "verdicts": vs, "notes": extra,
            });
            serde_json::to_string_pretty(&v).expect("serializes") + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["schema", "suite", "check", "checked", "passed", "failure"])?;
            for v in &verdicts {
                w.write_record([
                    SCHEMA,
                    &suite_s,
                    &v.name,
                    &v.checked.to_string(),
                    &v.passed().to_string(),
                    v.failure.as_deref().unwrap_or(""),
                ])?;
            }
            String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("utf-8")
        }
        Format::Text => {
            let mut s = String::new();
            for v in &verdicts {
                let _ = writeln!(s, "{v}");
            }
            for e in &extra {
                let _ = writeln!(s, "{e}");
            }
            let _ = writeln!(s, "verify {suite_s} n={}: {}", cfg.n, if passed { "pass" } else { "FAIL" });
            s
        }
    };
    Ok(Outcome { stdout: out, code: if passed { EXIT_PASS } else { EXIT_FAIL } })
}

/// `3,1,0`, `(3,1,0)` or `3 1 0`.
pub fn parse_values(s: &str) -> Result<Vec<usize>, CliError> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<usize>().map_err(|_| CliError::Usage(format!("bad root sequence {s:?}"))))
        .collect::<Result<Vec<_>, _>>()
        .and_then(|v| if v.is_empty() { Err(CliError::Usage(format!("empty root sequence {s:?}"))) } else { Ok(v) })
}

fn parse_theta(n: usize, s: &str) -> Result<RootSequence, CliError> {
    RootSequence::new(n, parse_values(s)?).map_err(|e| CliError::Usage(e.to_string()))
}

fn cell_str(c: CellVerdict) -> &'static str {
    match c {
        CellVerdict::Cond1 => "1",
        CellVerdict::Cond2 => "2",
        CellVerdict::Fail => "x",
    }
}

fn pair_text(th: &RootSequence, tn: &RootSequence, rep: &PairReport, brackets: &[(String, String, String)]) -> String {
    let n = rep.n;
    let mut s = format!("pair theta={th} theta'={tn}\n");
    let _ = write!(s, "{:>6}", "");
    for i in 1..=n {
        let _ = write!(s, " {:>4}", format!("i={i}"));
    }
    s.push('\n');
    for k in 1..=n {
        let _ = write!(s, "{:>6}", format!("k={k}"));
        for i in 1..=n {
            let _ = write!(s, " {:>4}", cell_str(rep.cell(k, i)));
        }
        s.push('\n');
    }
    s.push_str("(1 = condition 1, 2 = condition 2 only, x = fails)\n");
    for (p, m, v) in brackets {
        let _ = writeln!(s, "[{p}, {m}-] = {v}");
    }
    match rep.first_failure() {
        None => s.push_str("verdict: accept\n"),
        Some((k, i)) => {
            let _ = writeln!(s, "verdict: reject at (k={k}, i={i})");
        }
    }
    s
}

fn cmd_pair(cfg: &RunConfig, theta: &str, theta_neg: &str, symbolic: bool) -> Result<Outcome, CliError> {
    let th = parse_theta(cfg.n, theta)?;
    let tn = parse_theta(cfg.n, theta_neg)?;
    let (pp, pn) = (build_rt(&th), build_rt(&tn));
    let rep = cond_pair(&pp, &pn).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut brackets = Vec::new();
    if symbolic {
        let ctx = Double::new(Bicharacter::new(cfg.n, cfg.mode()));
        for gp in pp.pbw_generators() {
            for gm in pn.pbw_generators() {
                let b = cross_bracket(&ctx, &gp, &gm).map_err(|e| CliError::Compute(e.to_string()))?;
                brackets.push((crate::render::bracket_word(&gp), crate::render::bracket_word(&gm), b.elem.to_string()));
            }
        }
    }
    let out = match cfg.format {
        Format::Json => {
            let cells: Vec<Vec<&str>> =
                (1..=cfg.n).map(|k| (1..=cfg.n).map(|i| cell_str(rep.cell(k, i))).collect()).collect();
            let bs: Vec<_> = brackets.iter().map(|(p, m, v)| json!({ "pos": p, "neg": m, "value": v })).collect();
            let v = json!({
                "schema": SCHEMA, "theta": th.values(), "theta_neg": tn.values(),
                "holds": rep.holds, "cells": cells, "first_failure": rep.first_failure(), "brackets": bs,
            });
            serde_json::to_string_pretty(&v).expect("serializes") + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["schema", "theta", "theta_neg", "k", "i", "cell"])?;
            for k in 1..=cfg.n {
                for i in 1..=cfg.n {
                    w.write_record([
                        SCHEMA,
                        &th.to_string(),
                        &tn.to_string(),
                        &k.to_string(),
                        &i.to_string(),
                        cell_str(rep.cell(k, i)),
                    ])?;
                }
            }
            String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("utf-8")
        }
        Format::Text => pair_text(&th, &tn, &rep, &brackets),
    };
    Ok(Outcome { stdout: out, code: if rep.holds { EXIT_PASS } else { EXIT_FAIL } })
}
