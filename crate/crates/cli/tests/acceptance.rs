//! One pass/fail line per acceptance criterion.  Run with
//! `cargo test -p atlas-cli --test acceptance -- --nocapture` to see them.

use atlas_cli::render::bracket_word;
use atlas_cli::{proper_records, Record};
use atlas_double::suites::{derm_suite, double_suite, sh_suite};
use atlas_double::{consistency_experiment, Double};
use atlas_freealg::{Bicharacter, Mode};
use atlas_nichols::suites::*;
use atlas_nichols::Verdict;
use atlas_rootdata::*;
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn verdicts(vs: Vec<Verdict>) -> Outcome {
    let checked: usize = vs.iter().map(|v| v.checked).sum();
    match vs.iter().find(|v| !v.passed()) {
        Some(v) => Err(v.to_string()),
        None => Ok(format!("{checked} checks")),
    }
}

fn set(items: &[usize]) -> Vec<usize> {
    items.to_vec()
}

fn criterion_1() -> Outcome {
    let p = build_rt(&RootSequence::new(3, vec![3, 1, 0]).unwrap());
    let want_r = vec![set(&[1, 3]), set(&[2]), set(&[])];
    let want_t = vec![set(&[1, 2, 3]), set(&[2]), set(&[])];
    ensure(p.r_sets() == want_r && p.t_sets() == want_t, || format!("(3,1,0): R={:?} T={:?}", p.r_sets(), p.t_sets()))?;
    let p = build_rt(&RootSequence::new(3, vec![2, 1, 1]).unwrap());
    let want_r = vec![set(&[2]), set(&[2]), set(&[3])];
    let want_t = vec![set(&[2, 3]), set(&[2, 3]), set(&[3])];
    ensure(p.r_sets() == want_r && p.t_sets() == want_t, || format!("(2,1,1): R={:?} T={:?}", p.r_sets(), p.t_sets()))?;
    Ok("(3,1,0) and (2,1,1) exact".into())
}

/// One row of the reference table: θ, star, R_3..R_1, T_3..T_1, PBW words
/// per k = 3..1, coideal generators.
struct Row {
    theta: [usize; 3],
    star: bool,
    r: [&'static [usize]; 3],
    t: [&'static [usize]; 3],
    pbw: [&'static [&'static str]; 3],
    rcs: &'static [&'static str],
}

#[rustfmt::skip]
const TABLE: [Row; 16] = [
    Row { theta: [3,2,1], star: true,  r: [&[3], &[3], &[3]],       t: [&[3], &[3], &[3]],         pbw: [&["x3"], &["[x2x3]"], &["[x1x2x3]"]], rcs: &["[x1x2x3]"] },
    Row { theta: [3,2,0], star: true,  r: [&[], &[2,3], &[2,3]],    t: [&[], &[2,3], &[2,3]],      pbw: [&[], &["x2", "[x3x2]"], &["[x1x2]", "[x3[x1x2]]"]], rcs: &["[x3[x1x2]]"] },
    Row { theta: [3,1,1], star: false, r: [&[3], &[2], &[3]],       t: [&[3], &[2,3], &[3]],       pbw: [&["x3"], &["x2", "[x3x2]"], &["[x1x2x3]"]], rcs: &["[x1x2x3]", "x2"] },
    Row { theta: [3,1,0], star: false, r: [&[], &[2], &[1,3]],      t: [&[], &[2], &[1,2,3]],      pbw: [&[], &["x2"], &["x1", "[x2x1]", "[x3x2x1]"]], rcs: &["[x3x2x1]", "x2"] },
    Row { theta: [3,0,1], star: false, r: [&[3], &[], &[1,3]],      t: [&[3], &[], &[1,3]],        pbw: [&["x3"], &[], &["x1", "[[x2x3]x1]"]], rcs: &["[[x2x3]x1]"] },
    Row { theta: [3,0,0], star: true,  r: [&[], &[], &[1,2,3]],     t: [&[], &[], &[1,2,3]],       pbw: [&[], &[], &["x1", "[x2x1]", "[x3x2x1]"]], rcs: &["[x3x2x1]"] },
    Row { theta: [2,2,1], star: true,  r: [&[3], &[3], &[1,2]],     t: [&[3], &[3], &[1,2,3]],     pbw: [&["x3"], &["[x2x3]"], &["x1", "[x2x1]", "[x3x2x1]"]], rcs: &["[x3x2x1]", "[x2x3]"] },
    Row { theta: [2,2,0], star: false, r: [&[], &[2,3], &[2]],      t: [&[], &[2,3], &[2]],        pbw: [&[], &["x2", "[x3x2]"], &["[x1x2]"]], rcs: &["[x1x2]", "[x3x2]"] },
    Row { theta: [2,1,1], star: true,  r: [&[3], &[2], &[2]],       t: [&[3], &[2,3], &[2,3]],     pbw: [&["x3"], &["x2", "[x3x2]"], &["[x1x2]", "[x3[x1x2]]"]], rcs: &["[x1x2]", "x3"] },
    Row { theta: [2,1,0], star: false, r: [&[], &[2], &[2]],        t: [&[], &[2], &[2]],          pbw: [&[], &["x2"], &["[x1x2]"]], rcs: &["[x1x2]"] },
    Row { theta: [2,0,1], star: false, r: [&[3], &[], &[1,2]],      t: [&[3], &[], &[1,2,3]],      pbw: [&["x3"], &[], &["x1", "[x2x1]", "[x3x2x1]"]], rcs: &["[x2x1]", "x3"] },
    Row { theta: [2,0,0], star: false, r: [&[], &[], &[1,2]],       t: [&[], &[], &[1,2]],         pbw: [&[], &[], &["x1", "[x2x1]"]], rcs: &["[x2x1]"] },
    Row { theta: [1,2,1], star: false, r: [&[3], &[3], &[1]],       t: [&[3], &[3], &[1,3]],       pbw: [&["x3"], &["[x2x3]"], &["x1", "[[x2x3]x1]"]], rcs: &["[x2x3]", "x1"] },
    Row { theta: [1,2,0], star: true,  r: [&[], &[2,3], &[1]],      t: [&[], &[2,3], &[1,2,3]],    pbw: [&[], &["x2", "[x3x2]"], &["x1", "[x2x1]", "[x3x2x1]"]], rcs: &["[x3x2]", "x1"] },
    Row { theta: [0,2,1], star: false, r: [&[3], &[3], &[]],        t: [&[3], &[3], &[]],          pbw: [&["x3"], &["[x2x3]"], &[]], rcs: &["[x2x3]"] },
    Row { theta: [0,2,0], star: false, r: [&[], &[2,3], &[]],       t: [&[], &[2,3], &[]],         pbw: [&[], &["x2", "[x3x2]"], &[]], rcs: &["[x3x2]"] },
];

fn row_matches(row: &Row, rec: &Record) -> Result<(), String> {
    let th = format!("{:?}", row.theta);
    ensure(rec.theta == row.theta, || format!("row order: expected {th}, got {:?}", rec.theta))?;
    ensure(rec.adr_invariant == row.star, || format!("{th}: star"))?;
    for j in 0..3 {
        let k = 3 - j;
        ensure(rec.r[k - 1] == row.r[j], || format!("{th}: R_{k} = {:?}", rec.r[k - 1]))?;
        ensure(rec.t[k - 1] == row.t[j], || format!("{th}: T_{k} = {:?}", rec.t[k - 1]))?;
        let got: Vec<&str> = rec.pbw.iter().filter(|g| g.k == k).map(|g| g.word.as_str()).collect();
        ensure(got == row.pbw[j], || format!("{th}: PBW at k={k} = {got:?}"))?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let records = proper_records(3, DiagramStyle::Ascii);
    ensure(records.len() == 16, || format!("{} proper rows", records.len()))?;
    let by_word: BTreeMap<String, GenDesc> =
        all_descriptors(3).into_iter().map(|g| (bracket_word(&g), g)).collect();
    let table = RootTable::new(3);
    let mut identical = 0;
    for (row, rec) in TABLE.iter().zip(&records) {
        row_matches(row, rec)?;
        let got: Vec<&str> = rec.rcs.iter().map(|g| g.word.as_str()).collect();
        if got == row.rcs {
            identical += 1;
            continue;
        }
        // A different minimal generating set is accepted when both sets
        // have the same size and generate the same subalgebra.
        let theta = RootSequence::new(3, row.theta.to_vec()).unwrap();
        let listed: Vec<GenDesc> = row.rcs.iter().map(|w| by_word[*w]).collect();
        let ours: Vec<GenDesc> = rec.rcs.iter().map(|g| by_word[&g.word]).collect();
        ensure(listed.len() == ours.len(), || format!("{:?}: generators {got:?}", row.theta))?;
        ensure(generated_theta(&table, &listed).ok() == Some(theta.clone()), || format!("{:?}: listed set", row.theta))?;
        ensure(generated_theta(&table, &ours).ok() == Some(theta), || format!("{:?}: our set", row.theta))?;
    }
    let starred = records.iter().filter(|r| r.adr_invariant).count();
    ensure(starred == 6, || format!("{starred} starred rows"))?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 1.0, || format!("took {secs:.2} s"))?;
    Ok(format!("16 rows, 6 starred, generators {identical}/16 identical and 16/16 equivalent, {secs:.3} s"))
}

fn criterion_3() -> Outcome {
    for n in 1..=7 {
        let f: u64 = (2..=n as u64 + 1).product();
        ensure(count_borel(n) == f, || format!("count_borel({n}) = {}", count_borel(n)))?;
    }
    let start = Instant::now();
    for (n, want) in [(2, 26), (3, 252), (4, 3368), (5, 58810)] {
        let got = count_full(n).total;
        ensure(got == want, || format!("count_full({n}) = {got}"))?;
    }
    let small = start.elapsed().as_secs_f64();
    let start = Instant::now();
    let six = count_full(6).total;
    ensure(six == 1_290_930, || format!("count_full(6) = {six}"))?;
    let big = start.elapsed().as_secs_f64();
    ensure(small < 60.0 && big < 60.0, || format!("n=2..5 {small:.1} s, n=6 {big:.1} s"))?;
    Ok(format!("borel (n+1)! for n<=7; full 26, 252, 3368, 58810 in {small:.2} s; 1290930 in {big:.2} s"))
}

fn criterion_4() -> Outcome {
    let mut total = 0;
    for n in 1..=6 {
        for th in enumerate_theta(n) {
            let v = check_claims(&build_rt(&th));
            ensure(v.is_empty(), || format!("{th}: {}", v[0]))?;
            total += 1;
        }
    }
    Ok(format!("{total} root sequences"))
}

fn criterion_5() -> Outcome {
    for n in 1..=5 {
        let invariant: BTreeSet<RootSequence> =
            enumerate_theta(n).filter(|th| is_adr_invariant(&build_rt(th))).collect();
        let mut image = BTreeSet::new();
        for pi in 0..(1u64 << n) {
            let mask = pi << 1;
            let th = theta_of_kpi(n, mask).map_err(|e| e.to_string())?;
            ensure(kpi_of(&build_rt(&th)) == mask, || format!("kpi_of({th}) at n={n}"))?;
            image.insert(th);
        }
        ensure(image.len() == 1 << n && image == invariant, || format!("n={n}: {} invariant", invariant.len()))?;
    }
    let three: Vec<Vec<usize>> = enumerate_theta(3)
        .filter(|th| is_adr_invariant(&build_rt(th)))
        .map(|th| th.values().to_vec())
        .collect();
    let mut want: Vec<Vec<usize>> =
        TABLE.iter().filter(|r| r.star).map(|r| r.theta.to_vec()).chain([vec![0, 0, 0], vec![1, 1, 1]]).collect();
    want.sort();
    ensure(three == want, || format!("n=3 invariant set {three:?}"))?;
    Ok("bijection with subsets for n<=5; n=3 set is the 6 starred rows plus (0,0,0), (1,1,1)".into())
}

fn criterion_6() -> Outcome {
    verdicts(vec![
        identity_suite(120, 61, Mode::OneParameter).map_err(|e| e.to_string())?,
        identity_suite(40, 62, Mode::Multiparameter).map_err(|e| e.to_string())?,
    ])
}

fn criterion_7() -> Outcome {
    verdicts(vec![omega_suite(4, 50, 71, Mode::OneParameter).map_err(|e| e.to_string())?])
}

fn criterion_8() -> Outcome {
    verdicts(vec![pbw_suite(3, 6, Mode::OneParameter).map_err(|e| e.to_string())?])
}

fn criterion_9() -> Outcome {
    verdicts(vec![derivative_suite(4, Mode::OneParameter).map_err(|e| e.to_string())?])
}

fn criterion_10() -> Outcome {
    verdicts(vec![theorem26_suite(3, Mode::OneParameter).map_err(|e| e.to_string())?])
}

fn criterion_11() -> Outcome {
    verdicts(vec![coideal_suite(3, 6, Mode::OneParameter).map_err(|e| e.to_string())?])
}

fn criterion_12() -> Outcome {
    let e = |e: atlas_double::DoubleError| e.to_string();
    verdicts(vec![
        double_suite(4, 10, 121, Mode::OneParameter).map_err(e)?,
        derm_suite(3, Mode::OneParameter).map_err(e)?,
        sh_suite(4, Mode::OneParameter).map_err(e)?,
    ])
}

fn criterion_13() -> Outcome {
    let ctx = Double::new(Bicharacter::one_parameter(2));
    let report = consistency_experiment(&ctx, 6).map_err(|e| e.to_string())?;
    ensure(report.pairs.len() == 36, || format!("{} pairs", report.pairs.len()))?;
    ensure(report.disagreements().is_empty(), || format!("{} disagreements", report.disagreements().len()))?;
    ensure(report.accepted() == 26, || format!("{} accepted", report.accepted()))?;
    let (fast, naive) = (count_full(1), count_full_naive(1));
    ensure(fast.total == 4 && naive.total == 4, || format!("count_full(1) = {}, brute force {}", fast.total, naive.total))?;
    Ok("26/36 by closure, no disagreement with the pair condition; count_full(1) = 4 = brute force".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("R/T reconstruction", criterion_1),
        ("n=3 tableau", criterion_2),
        ("exact counts", criterion_3),
        ("Claims 1-4 invariants", criterion_4),
        ("ad_r classification", criterion_5),
        ("skew-bracket identities", criterion_6),
        ("Omega correctness", criterion_7),
        ("PBW basis ranks", criterion_8),
        ("derivative formulas", criterion_9),
        ("derivative-span equality", criterion_10),
        ("coideal and differential closure", criterion_11),
        ("double-wing formulas", criterion_12),
        ("consistency calibration", criterion_13),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let secs = start.elapsed().as_secs_f64();
        match &res {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} [{secs:.2} s]", i + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL {name}: {why} [{secs:.2} s]", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
