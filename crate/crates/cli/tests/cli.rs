//! End-to-end tests against the built binary: output bytes, JSON schemas and
//! exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pdelliptic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn classify_recipe_json() {
    let out = run(&[
        "classify", "--p", "2", "--d", "3", "--m", "4", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = parsed.as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["kind"], "exp");
    assert_eq!(rows[0]["deg_phi"], 2);
    assert_eq!(rows[0]["deg_phi_prime"], 1);
    assert_eq!(rows[0]["nu"], 2);
}

#[test]
fn classify_trivial_and_invalid() {
    let out = run(&[
        "classify", "--p", "2", "--d", "3", "--m", "6", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["outcome"], "trivial");

    let out = run(&["classify", "--p", "2", "--d", "3", "--m", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).is_empty());
    let err: serde_json::Value = serde_json::from_str(stderr(&out).trim()).unwrap();
    assert_eq!(err["code"], "invalid_input");

    let out = run(&["classify", "--p", "4", "--d", "3", "--m", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_str(stderr(&out).trim()).unwrap();
    assert_eq!(err["code"], "invalid_input");
    assert!(err["message"].as_str().unwrap().contains("not prime"));
}

#[test]
fn endos_csv_matches_the_table() {
    let out = run(&["endos", "--table", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = "\
order,xi_description,trace,m
Z[i],-1+i,-2,1
Z[i],-1-i,-2,1
Z[(1+i*sqrt(7))/2],(-1+i*sqrt(7))/2,-1,2
Z[(1+i*sqrt(7))/2],(-1-i*sqrt(7))/2,-1,2
Z[i*sqrt(2)],i*sqrt(2),0,3
Z[i*sqrt(2)],-i*sqrt(2),0,3
Z[(1+i*sqrt(7))/2],(1+i*sqrt(7))/2,1,4
Z[(1+i*sqrt(7))/2],(1-i*sqrt(7))/2,1,4
Z[i],1+i,2,5
Z[i],1-i,2,5
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn smooth_certificate_exit_codes() {
    let out = run(&[
        "smooth",
        "--n",
        "2",
        "--d",
        "3",
        "--witness",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"candidates\":[],\"d\":3,\"n\":2,\"r\":5,\"verdict\":\"smooth\"}\n"
    );

    // Degree 2 is governed by the reducibility test instead.
    let out = run(&["smooth", "--n", "2", "--d", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_str(stderr(&out).trim()).unwrap();
    assert_eq!(err["code"], "out_of_scope");
}

#[test]
fn smooth_grid_via_cli() {
    for n in 2..=5 {
        for d in 3..=6 {
            let out = run(&[
                "smooth",
                "--n",
                &n.to_string(),
                "--d",
                &d.to_string(),
                "--format",
                "json",
            ]);
            assert_eq!(out.status.code(), Some(0), "(n,d) = ({n},{d})");
            let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
            assert_eq!(parsed["verdict"], "smooth");
            assert_eq!(parsed["candidate_count"], 0);
        }
    }
}

#[test]
fn geom_counts_json() {
    let out = run(&["geom", "--p", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"isotropic_lines\":15,\"lines\":35,\"p\":2,\"points\":15}\n"
    );

    let out = run(&["geom", "--p", "3", "--stats", "--format", "json"]);
    assert_eq!(
        stdout(&out),
        "{\"meeting_isotropic_line\":13,\"meeting_non_isotropic_line\":16,\"p\":3,\"through_any_point\":4,\"total\":40}\n"
    );
}

#[test]
fn geom_list_is_deterministic_and_complete() {
    let a = run(&["geom", "--p", "2", "--list", "--format", "csv"]);
    let b = run(&["geom", "--p", "2", "--list", "--format", "csv"]);
    assert_eq!(stdout(&a), stdout(&b));
    let text = stdout(&a);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 36); // header + 35 lines
    assert_eq!(lines[0], "index,line,isotropic");
    assert_eq!(lines.iter().filter(|l| l.ends_with(",true")).count(), 15);
}

#[test]
fn antisym_counts() {
    for (p, expected) in [("2", 6u64), ("3", 24), ("5", 120), ("7", 336)] {
        let out = run(&["antisym", "--p", p, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0));
        let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(parsed["count"], expected, "p = {p}");
    }
    let out = run(&["antisym", "--p", "3", "--list", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed.as_array().unwrap().len(), 24);
}

#[test]
fn bitri_all_plain_is_byte_stable() {
    let out = run(&["bitri", "--all"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = "\
m  outcome  kind  nu  deg_phi  deg_phi_prime
1  recipe   ex1   1   1        5
2  recipe   exp   2   1        2
3  recipe   ex1   1   3        3
4  recipe   exp   2   2        1
5  recipe   ex1   1   5        1
6  trivial  -     -   -        -
";
    assert_eq!(stdout(&out), expected);

    let with_m = run(&["bitri", "--m", "2", "--format", "json"]);
    let direct = run(&[
        "classify", "--p", "2", "--d", "3", "--m", "2", "--format", "json",
    ]);
    assert_eq!(stdout(&with_m), stdout(&direct));
}

#[test]
fn construct_scenario_counts() {
    let cases = [
        ("both-odd", "1", "1", 2u64),
        ("both-even", "2", "2", 4),
        ("equal-line", "2", "1", 6),
        ("coplanar-distinct", "2", "1", 2),
    ];
    for (scenario, dp, dpp, expected) in cases {
        let out = run(&[
            "construct",
            "--example",
            "exp2",
            "--p",
            "2",
            "--deg-phi",
            dp,
            "--deg-phi-prime",
            dpp,
            "--scenario",
            scenario,
            "--format",
            "json",
        ]);
        assert_eq!(out.status.code(), Some(0), "{scenario}");
        let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(parsed["h_count"], expected, "{scenario}");
    }
}

#[test]
fn construct_witness_fields() {
    let out = run(&[
        "construct",
        "--example",
        "exp",
        "--p",
        "2",
        "--deg-phi",
        "1",
        "--deg-phi-prime",
        "2",
        "--witness",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["h_count"], 2);
    assert_eq!(parsed["m"], 2);
    assert!(parsed["sample_h"].as_str().unwrap().starts_with("span("));
    assert!(parsed["sample_alpha"].as_str().unwrap().starts_with("[["));

    // Scenario inconsistent with the degree parities is rejected.
    let out = run(&[
        "construct",
        "--example",
        "exp2",
        "--p",
        "2",
        "--deg-phi",
        "1",
        "--deg-phi-prime",
        "1",
        "--scenario",
        "both-even",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_str(stderr(&out).trim()).unwrap();
    assert_eq!(err["code"], "invalid_input");
}

#[test]
fn usage_errors_are_json_on_stderr() {
    let out = run(&["classify", "--p", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_str(stderr(&out).trim()).unwrap();
    assert_eq!(err["code"], "usage");

    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("Usage:"));
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec!["endos", "--table", "--format", "json"],
        vec!["antisym", "--p", "5", "--list", "--format", "csv"],
        vec![
            "smooth",
            "--n",
            "4",
            "--d",
            "5",
            "--witness",
            "--format",
            "csv",
        ],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(stdout(&a), stdout(&b), "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}
