use std::process::Command;

fn polypos(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_polypos")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn gen_emits_coefficients() {
    let (code, out, _) = polypos(&["gen", "eulerian-a", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"coeffs":["0","1","4","1"]}"#);
    let (_, out, _) = polypos(&["gen", "eulerian-d", "4", "--emit", "table"]);
    assert_eq!(out.trim(), "coeffs  [1 44 102 44 1]");
}

#[test]
fn check_exit_codes_follow_the_property() {
    assert_eq!(polypos(&["check", "real-rooted", "1,3,3,1"]).0, 0);
    assert_eq!(polypos(&["check", "real-rooted", "1,0,1"]).0, 1);
    assert_eq!(polypos(&["check", "gamma", "1,3,1"]).0, 0);
    assert_eq!(polypos(&["check", "gamma", "1,3"]).0, 1);
    assert_eq!(polypos(&["check", "interlace", "1,1", "--with", "0,2,1"]).0, 0);
    assert_eq!(polypos(&["check", "interlace", "0,2,1", "--with", "1,1"]).0, 1);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(polypos(&["gen", "nothing", "3"]).0, 2);
    assert_eq!(polypos(&["check", "real-rooted", "1,x"]).0, 2);
    assert_eq!(polypos(&["check", "interlace", "1,1"]).0, 2);
    assert_eq!(polypos(&["suite", "no-such-suite"]).0, 2);
    assert_eq!(polypos(&["graph", "/nonexistent/graph.json"]).0, 2);
    assert_eq!(polypos(&["--help"]).0, 0);
}

#[test]
fn perm_reports_the_orbit() {
    let (code, out, _) = polypos(&["perm", "31524", "--orbit"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["canonical"], "13524");
    assert_eq!(v["orbit"].as_array().unwrap().len(), 4);
    assert_eq!(v["identity_holds"], true);
}

#[test]
fn file_commands() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    };
    let g = write("g.json", r#"{"n":4,"edges":[[0,1],[0,2],[0,3]]}"#);
    let (code, out, _) = polypos(&["graph", &g]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["clawfree"], false);
    assert_eq!(v["chromatic"]["coeffs"], serde_json::json!(["0", "-1", "3", "-3", "1"]));

    let c = write("c.json", r#"{"facets":[[0,1,2]]}"#);
    let (_, out, _) = polypos(&["sd", &c]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["sd_f"], v["E_f"]);

    let s = write("s.json", r#"{"n":2,"Q":[["0","1"],["1","0"]],"b":["1/2","0"],"d":["0","3"]}"#);
    let (_, out, _) = polypos(&["sep", &s]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pairwise_neg_corr"], true);

    let p = write("p.json", r#"{"n":3,"covers":[[1,3],[3,2]]}"#);
    let (_, out, _) = polypos(&["poset", &p]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["sign_graded"], true);
}

#[test]
fn suites_are_byte_identical_for_a_seed() {
    let a = polypos(&["suite", "type-d-table", "--seed", "7"]);
    let b = polypos(&["suite", "type-d-table", "--seed", "7"]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    let (code, out, _) = polypos(&["suite", "--list"]);
    assert_eq!(code, 0);
    assert_eq!(serde_json::from_str::<serde_json::Value>(&out).unwrap().as_array().unwrap().len(), 17);
}
