use std::process::{Command, Output};

use kronkit::partitions_of;
use rayon::prelude::*;

fn kronkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kronkit"))
        .args(args)
        .env("KRONKIT_CACHE_BYTES", "4000000")
        .output()
        .expect("spawn kronkit")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn coeff_prints_value() {
    let o = kronkit(&["coeff", "2,1", "2,1", "2,1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1\n");
    assert!(o.stderr.is_empty());
}

#[test]
fn vanishing_trace() {
    let o = kronkit(&["coeff", "2,2,2,2", "5,3", "4,4", "--trace"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("0"));
    let trace: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    let last = trace.as_array().unwrap().last().unwrap();
    assert_eq!(last["theorem"], "lr-vanishing");
    assert_eq!(
        last["frame"],
        serde_json::json!({"p": 4, "q": 2, "r": 2, "t": 2})
    );
}

#[test]
fn formula_method() {
    let o = kronkit(&[
        "coeff",
        "4,2",
        "4,2",
        "4,2",
        "--method=formula",
        "--format=json",
        "--trace",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 2);
    assert_eq!(v["method"], "formula-2row");
    assert_eq!(
        v["trace"][0]["intermediates"],
        serde_json::json!({"x": 0, "y": 2})
    );
}

#[test]
fn exit_code_taxonomy() {
    let code = |args: &[&str]| kronkit(args).status.code().unwrap();
    assert_eq!(code(&["coeff", "2,a", "2,1", "2,1"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["coeff", "3", "2,1", "1"]), 3);
    assert_eq!(code(&["coeff", "2,1", "2,1", "2,1", "--method=dvir"]), 4);
    assert_eq!(code(&["table", "20"]), 5);
    let o = kronkit(&["table", "20"]);
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn expand_outputs() {
    assert_eq!(stdout(&kronkit(&["expand", "3", "3"])), "{\"3\":1}\n");
    assert_eq!(stdout(&kronkit(&["expand", "2,1", "3"])), "{\"2,1\":1}\n");
    let csv = stdout(&kronkit(&["expand", "2,2", "2,2", "--format=csv"]));
    let mut r = csv::Reader::from_reader(csv.as_bytes());
    let rows: Vec<(String, String)> = r
        .records()
        .map(|rec| {
            let rec = rec.unwrap();
            (rec[0].to_string(), rec[1].to_string())
        })
        .collect();
    let want = [("4", "1"), ("2,2", "1"), ("1,1,1,1", "1")];
    assert_eq!(rows.len(), 3);
    for ((nu, k), (wnu, wk)) in rows.iter().zip(want) {
        assert_eq!((nu.as_str(), k.as_str()), (wnu, wk));
    }
}

#[test]
fn table_outputs() {
    assert_eq!(stdout(&kronkit(&["table", "0"])), "() () () 1\n");
    let t3 = stdout(&kronkit(&["table", "3"]));
    assert!(t3.contains("(2,1) (2,1) (2,1) 1\n"));
    let o = kronkit(&["table", "4", "--format=csv"]);
    assert!(stdout(&o).starts_with("lambda,mu,nu,k\n"));
}

#[test]
fn verify_command() {
    let o = kronkit(&["verify", "--max-m", "5", "--suite", "stability"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = kronkit(&[
        "verify", "--max-m", "8", "--suite", "formulas", "--jobs", "2",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
    assert!(kronkit(&["verify", "--max-m", "1", "--suite", "all"])
        .status
        .success());
}

#[test]
fn json_is_stable_under_reserialization() {
    let cases: &[&[&str]] = &[
        &["coeff", "3,2,1,1", "4,3", "4,3", "--format=json", "--trace"],
        &["coeff", "2,2,2,2", "4,4", "4,4", "--format=json", "--trace"],
        &["expand", "3,2,1", "3,2,1"],
        &["table", "4", "--format=json"],
        &["verify", "--max-m", "3", "--suite", "dvir", "--format=json"],
    ];
    for args in cases {
        let text = stdout(&kronkit(args));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap() + "\n", text, "{args:?}");
    }
}

#[test]
fn auto_matches_direct_through_binary() {
    let mut triples = Vec::new();
    for m in 0..=7 {
        let ps: Vec<String> = partitions_of(m, None, None)
            .map(|p| p.to_string())
            .collect();
        for a in &ps {
            for b in &ps {
                for c in &ps {
                    triples.push([a.clone(), b.clone(), c.clone()]);
                }
            }
        }
    }
    let bad = triples.par_iter().find_first(|[a, b, c]| {
        let auto = kronkit(&["coeff", a, b, c]);
        let direct = kronkit(&["coeff", a, b, c, "--method=direct"]);
        !auto.status.success() || auto.stdout != direct.stdout
    });
    assert_eq!(bad, None);
}
