use std::io::Cursor;

use cliquemin_cli::{run, EXIT_CAPABILITY, EXIT_FALSIFIED, EXIT_OK, EXIT_USAGE};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn invoke(args: &[&str], stdin: &str) -> Output {
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cliquemin").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json_lines(text: &str) -> Vec<serde_json::Value> {
    text.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn construct_balanced_two() {
    let o = invoke(&["construct", "--parts", "2,2,2,2,2"], "");
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let mut lines = o.stdout.lines();
    let g = cliquemin::graph6::from_graph6(lines.next().unwrap()).unwrap();
    assert_eq!(g.n(), 10);
    assert_eq!(cliquemin::census::census(&g).unwrap().t4, 5);
    let report: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(report["t4_closed_form"], "5");
    assert_eq!(report["n"], "10");
}

#[test]
fn verify_eq1_from_stdin() {
    let o = invoke(&["verify", "--identity", "eq1", "-"], "Dhc\n");
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let v = json_lines(&o.stdout);
    assert_eq!(v.len(), 1);
    assert_eq!(v[0]["identity"], "EQ1");
    assert_eq!(v[0]["slack"]["num"], "0");
    assert_eq!(v[0]["holds"], true);
}

#[test]
fn verify_all_emits_every_identity_per_graph() {
    let o = invoke(&["verify", "-"], "Dhc\nC~\n");
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert_eq!(json_lines(&o.stdout).len(), 20);
}

#[test]
fn hypothesis_failures_are_not_falsifications() {
    // K_{1,3} has an independent triple, so the conditional identities may fail
    let o = invoke(&["verify", "-"], "Cs\n");
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(json_lines(&o.stdout).iter().any(|c| c["hypothesis_satisfied"] == false));
    assert_ne!(o.code, EXIT_FALSIFIED);
}

#[test]
fn exact_search_limit() {
    let o = invoke(&["search-exact", "--n", "12"], "");
    assert_eq!(o.code, EXIT_CAPABILITY);
    assert!(o.stdout.is_empty());
    assert!(o.stderr.contains("n <= 11"));
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(invoke(&["frobnicate"], "").code, EXIT_USAGE);
    assert_eq!(invoke(&["census", "-"], "D??x\n").code, EXIT_USAGE);
    assert_eq!(invoke(&["verify", "--identity", "le9", "-"], "Dhc\n").code, EXIT_USAGE);
    assert_eq!(invoke(&["construct", "--parts", "1,2,3"], "").code, EXIT_USAGE);
    assert_eq!(invoke(&["ratio", "--pmax", "0"], "").code, EXIT_USAGE);
    assert_eq!(invoke(&["census", "-", "--format", "g6"], "Dhc\n").code, EXIT_USAGE);
    assert_eq!(invoke(&["bound"], "").code, EXIT_USAGE);
    assert_eq!(invoke(&["census", "/nonexistent/graphs.g6"], "").code, EXIT_USAGE);
    assert_eq!(invoke(&["--help"], "").code, EXIT_OK);
}

#[test]
fn census_json_and_csv() {
    let o = invoke(&["census", "-"], "Dhc\nC~\n");
    let v = json_lines(&o.stdout);
    assert_eq!(v[0]["t3p"], "5");
    assert_eq!(v[1]["t4"], "1");
    let csv = invoke(&["census", "-", "--format", "csv"], "Dhc\n").stdout;
    assert_eq!(csv, "n,m,t3,t3p,t3pp,i3,t4,t4p\n5,5,0,5,5,0,0,0\n");
}

#[test]
fn searches_and_tables() {
    let v = json_lines(&invoke(&["search-exact", "--n", "9"], "").stdout);
    assert_eq!(v[0]["f_value"], "1");
    assert_eq!(v[0]["exhaustive"], true);
    assert!(v[0].get("elapsed_ms").is_none());
    let timed = json_lines(&invoke(&["search-exact", "--n", "6", "--timing"], "").stdout);
    assert!(timed[0].get("elapsed_ms").is_some());

    let v = json_lines(&invoke(&["blowup-opt", "--n", "10"], "").stdout);
    assert_eq!(v[0]["t4"], "5");
    assert_eq!(v[0]["spec"]["parts"], serde_json::json!(["2", "2", "2", "2", "2"]));

    let csv = invoke(&["ratio", "--pmax", "2"], "").stdout;
    assert_eq!(
        csv,
        "p,n,t4,ratio_num,ratio_den,ratio_approx,in_band\n1,5,0,0,1,0.000000000,true\n2,10,5,1,10,0.100000000,true\n"
    );

    let b = json_lines(&invoke(&["bound", "--n", "10"], "").stdout);
    assert_eq!(b[0]["implied_t4_lower_bound"]["num"], "50");
    assert_eq!(b[0]["construction_value"], "5");
}

#[test]
fn output_and_witness_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("result.json");
    let g6 = dir.path().join("witnesses.g6");
    let o = invoke(
        &[
            "search-exact",
            "--n",
            "10",
            "--output",
            out.to_str().unwrap(),
            "--g6-out",
            g6.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o.stdout.is_empty());
    let result: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let listed: Vec<String> = std::fs::read_to_string(&g6).unwrap().lines().map(String::from).collect();
    assert_eq!(result["witnesses"], serde_json::json!(listed));
    for w in &listed {
        let g = cliquemin::graph6::from_graph6(w).unwrap();
        assert!(g.has_independence_at_most_2());
    }
}

#[test]
fn output_is_identical_across_thread_counts() {
    let input = "Dhc\nI~KwW^Bow\nC~\n";
    let commands: [&[&str]; 5] = [
        &["census", "-"],
        &["verify", "-"],
        &["search-exact", "--n", "9"],
        &["search-local", "--n", "16", "--seed", "4", "--steps", "2000", "--restarts", "3"],
        &["blowup-opt", "--n", "17"],
    ];
    for cmd in commands {
        let runs: Vec<String> = ["1", "4", "8"]
            .iter()
            .map(|t| {
                let mut args = vec!["--threads", t];
                args.extend_from_slice(cmd);
                let o = invoke(&args, input);
                assert_eq!(o.code, EXIT_OK, "{cmd:?}: {}", o.stderr);
                o.stdout
            })
            .collect();
        assert!(runs.iter().all(|r| *r == runs[0]), "{cmd:?}");
    }
}

#[test]
fn binary_entry_point() {
    let bin = env!("CARGO_BIN_EXE_cliquemin");
    let out = std::process::Command::new(bin).args(["search-exact", "--n", "12"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_CAPABILITY));
    let out = std::process::Command::new(bin).args(["blowup-opt", "--n", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "{\"spec\":{\"parts\":[\"1\",\"1\",\"1\",\"1\",\"1\"]},\"n\":\"5\",\"t4\":\"0\"}\n"
    );
}
