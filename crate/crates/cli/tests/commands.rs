use atlas_cli::*;
use clap::Parser;
use std::process::Command as Proc;

fn exec(args: &[&str]) -> Outcome {
    let mut argv = vec!["coideal-atlas"];
    argv.extend_from_slice(args);
    let cfg = RunConfig::from_cli(Cli::try_parse_from(argv).unwrap()).unwrap();
    execute(&cfg).unwrap()
}

fn binary(args: &[&str]) -> (i32, String, String) {
    let out = Proc::new(env!("CARGO_BIN_EXE_coideal-atlas")).args(args).env_remove("ATLAS_THREADS").output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn record<'a>(l: &'a Listing, theta: &[usize]) -> &'a Record {
    l.records.iter().find(|r| r.theta == theta).unwrap()
}

fn words(gens: &[GeneratorRecord]) -> Vec<&str> {
    gens.iter().map(|g| g.word.as_str()).collect()
}

#[test]
fn borel_row_220_has_the_table_data() {
    let l: Listing = serde_json::from_str(&exec(&["borel", "--n", "3", "--format", "json"]).stdout).unwrap();
    assert_eq!(l.schema, "coideal-atlas/1");
    assert_eq!(l.records.len(), 24);
    let r = record(&l, &[2, 2, 0]);
    assert_eq!(r.r[1], vec![2, 3]);
    assert_eq!(r.t[1], vec![2, 3]);
    assert_eq!(r.r[0], vec![2]);
    assert_eq!(r.t[0], vec![2]);
    let mut pbw = words(&r.pbw);
    pbw.sort();
    assert_eq!(pbw, vec!["[x1x2]", "[x3x2]", "x2"]);
    assert!(!r.hopf);
}

#[test]
fn borel_listing_sizes() {
    let two: Listing = serde_json::from_str(&exec(&["borel", "--n", "2", "--format", "json"]).stdout).unwrap();
    assert_eq!(two.records.len(), 6);
    let one: Listing = serde_json::from_str(&exec(&["borel", "--n", "1", "--format", "json"]).stdout).unwrap();
    let thetas: Vec<_> = one.records.iter().map(|r| r.theta.clone()).collect();
    assert_eq!(thetas, vec![vec![0], vec![1]]);
    assert!(one.records.iter().all(|r| r.hopf));
}

#[test]
fn borel_csv_has_a_header_and_one_line_per_record() {
    let out = exec(&["borel", "--n", "2", "--format", "csv"]).stdout;
    let mut rd = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(rd.headers().unwrap().get(0), Some("schema"));
    let rows: Vec<_> = rd.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| &r[0] == "coideal-atlas/1"));
    assert_eq!(&rows[4][1], "(2,0)");
    assert_eq!(&rows[4][6], "[x2x1]");
}

#[test]
fn tableau_rows_from_the_table() {
    let l: Listing = serde_json::from_str(&exec(&["tableau", "--format", "json"]).stdout).unwrap();
    assert_eq!(l.records.len(), 16);
    assert_eq!(words(&record(&l, &[3, 1, 0]).rcs), vec!["[x3x2x1]", "x2"]);
    assert_eq!(words(&record(&l, &[0, 2, 1]).rcs), vec!["[x2x3]"]);
    assert_eq!(l.records.iter().filter(|r| r.adr_invariant).count(), 6);
    assert!(l.records.iter().all(|r| !r.hopf));
    let text = exec(&["tableau"]).stdout;
    assert_eq!(text.lines().filter(|l| l.starts_with("| *")).count(), 6);
}

#[test]
fn counts() {
    assert!(exec(&["count", "full", "--n", "3"]).stdout.starts_with("count full n=3: 252\n"));
    assert!(exec(&["count", "borel", "--n", "4"]).stdout.starts_with("count borel n=4: 120\n"));
    let v: serde_json::Value = serde_json::from_str(&exec(&["count", "full", "--n", "2", "--format", "json"]).stdout).unwrap();
    assert_eq!(v["count"], 26);
    assert_eq!(v["schema"], "coideal-atlas/1");
    assert_eq!(v["all_cond1"].as_u64().unwrap() + v["uses_cond2"].as_u64().unwrap(), 26);
}

#[test]
fn verify_suites_pass() {
    for (suite, n) in [("sh", "3"), ("omega", "3"), ("decode", "3"), ("derm", "2")] {
        let out = exec(&["verify", suite, "--n", n]);
        assert_eq!(out.code, EXIT_PASS, "{}", out.stdout);
    }
    let out = exec(&["verify", "consistency", "--n", "2"]);
    assert_eq!(out.code, EXIT_PASS);
    assert!(out.stdout.contains("accepted 26/36 pairs"), "{}", out.stdout);
}

#[test]
fn verify_json_reports_each_check() {
    let v: serde_json::Value =
        serde_json::from_str(&exec(&["verify", "sh", "--n", "2", "--format", "json"]).stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["verdicts"][0]["name"], "sh");
    assert!(v["verdicts"][0]["failure"].is_null());
}

#[test]
fn pair_examples() {
    let acc = exec(&["pair", "1", "1"]);
    assert_eq!(acc.code, EXIT_PASS);
    assert!(acc.stdout.contains("k=1    2"), "{}", acc.stdout);
    assert!(acc.stdout.ends_with("verdict: accept\n"));
    let rej = exec(&["pair", "1,0", "2,0"]);
    assert_eq!(rej.code, EXIT_FAIL);
    assert!(rej.stdout.ends_with("verdict: reject at (k=1, i=1)\n"), "{}", rej.stdout);
    assert_eq!(exec(&["pair", "(0,0)", "(0,0)"]).code, EXIT_PASS);
}

#[test]
fn pair_symbolic_prints_straightened_brackets() {
    let out = exec(&["pair", "1", "1", "--symbolic"]).stdout;
    assert!(out.contains("[x1, x1-] = 1 - g1f1\n"), "{out}");
    let v: serde_json::Value =
        serde_json::from_str(&exec(&["pair", "1,0", "2,0", "--symbolic", "--format", "json"]).stdout).unwrap();
    assert_eq!(v["holds"], false);
    assert_eq!(v["first_failure"], serde_json::json!([1, 1]));
    assert_eq!(v["brackets"].as_array().unwrap().len(), 2);
}

#[test]
fn exit_codes_of_the_binary() {
    assert_eq!(binary(&["pair", "1", "1"]).0, 0);
    assert_eq!(binary(&["pair", "1,0", "2,0"]).0, 1);
    let (code, _, err) = binary(&["verify", "nonsense"]);
    assert_eq!(code, 2);
    assert!(err.contains("invalid value"));
    let (code, _, err) = binary(&["pair", "3,0", "0,0"]);
    assert_eq!(code, 2, "{err}");
    assert_eq!(binary(&["pair", "1,0", "0,0", "--n", "3"]).0, 2);
    assert_eq!(binary(&["borel", "--n", "0"]).0, 2);
    assert_eq!(binary(&["count", "full", "--n", "9"]).0, 2);
    assert_eq!(binary(&["--help"]).0, 0);
}

#[test]
fn out_flag_and_thread_override() {
    let dir = std::env::temp_dir().join(format!("atlas-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("count.txt");
    let (code, stdout, _) = binary(&["count", "full", "--n", "2", "--threads", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("count full n=2: 26"));
    let out = Proc::new(env!("CARGO_BIN_EXE_coideal-atlas"))
        .args(["count", "full", "--n", "2"])
        .env("ATLAS_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
