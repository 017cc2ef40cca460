use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn catfock(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catfock"))
        .args(args)
        .output()
        .expect("catfock runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("catfock-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn catalan_list() {
    let out = catfock(&["catalan", "--upto", "6", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "1,1,2,5,14,42,132\n"
    );
    let out = catfock(&["catalan", "--upto", "3"]);
    assert_eq!(json_of(&out), json!(["1", "1", "2", "5"]));
}

#[test]
fn pnk_is_json_when_piped() {
    let out = catfock(&["fock", "pnk", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out), json!({"(2,1)": "1", "(2,2)": "1+q"}));
    let out = catfock(&["fock", "pn", "--upto", "3"]);
    assert_eq!(
        json_of(&out),
        json!({"1": "1", "2": "2+q", "3": "5+5q+q^2"})
    );
}

#[test]
fn solve_catalan_boundary() {
    let path = scratch("catalan.json", r#"["1", "1", "2", "5"]"#);
    let out = catfock(&[
        "cts",
        "solve",
        "--boundary",
        path.to_str().unwrap(),
        "--method",
        "both",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["equal"], json!(true));
    assert_eq!(v["closed"][2], json!(["2", "2", "1"]));
    assert_eq!(v["closed"][3][1], json!("5"));
}

#[test]
fn solve_polynomial_boundary() {
    // (1+q) P_n for n = 1, 2, 3
    let path = scratch(
        "fock.json",
        r#"[{"coeffs": ["1", "1"]}, {"coeffs": ["2", "3", "1"]}, {"coeffs": ["5", "10", "6", "1"]}]"#,
    );
    let out = catfock(&["cts", "solve", "--boundary", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    // x_{3,2} = (1+q)(3+q)
    assert_eq!(v[2][1], json!({"coeffs": ["3", "4", "1"]}));
    assert_eq!(v[2][2], json!({"coeffs": ["1", "1"]}));
}

#[test]
fn solve_rejects_bad_files() {
    let path = scratch("empty.json", "[]");
    assert_eq!(
        catfock(&["cts", "solve", "--boundary", path.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let path = scratch("garbage.json", r#"["1", "x/2"]"#);
    let out = catfock(&["cts", "solve", "--boundary", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("x/2"));
    assert_eq!(
        catfock(&["cts", "solve", "--boundary", "/nonexistent/b.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn moment_with_gram_file() {
    // <f_i, f_j> for six test vectors; the six-letter word at q = 1 is
    // <f1,f6><f2,f5><f3,f4> + <f1,f5><f2,f6><f3,f4>
    let g = [
        ["1", "0", "0", "0", "2", "3"],
        ["0", "1", "0", "0", "5", "7"],
        ["0", "0", "1", "1/2", "0", "0"],
        ["0", "0", "1/2", "1", "0", "0"],
        ["2", "5", "0", "0", "1", "0"],
        ["3", "7", "0", "0", "0", "1"],
    ];
    let path = scratch("gram.json", &serde_json::to_string(&g).unwrap());
    let out = catfock(&[
        "fock",
        "moment",
        "--word",
        "---+++",
        "--gram",
        path.to_str().unwrap(),
        "--q",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    // 3*5*(1/2) + 2*7*(1/2) = 29/2
    assert_eq!(json_of(&out)["value"], json!("29/2"));
    let out = catfock(&[
        "fock",
        "moment",
        "--word",
        "-3-3+4+4",
        "--gram",
        path.to_str().unwrap(),
    ]);
    assert_eq!(json_of(&out)["value"], json!("(1/4)+(1/4)q"));
}

#[test]
fn asymmetric_gram_rejected() {
    let path = scratch("asym.json", r#"[["1", "2"], ["3", "1"]]"#);
    let out = catfock(&[
        "fock",
        "moment",
        "--word",
        "-+",
        "--gram",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_and_formats() {
    let out = catfock(&[
        "partitions",
        "enumerate",
        "--n",
        "3",
        "--noncrossing",
        "--k",
        "3",
        "--format",
        "text",
    ]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "{(1,6),(2,5),(3,4)}\n"
    );
    let out = catfock(&["partitions", "enumerate", "--n", "2", "--format", "csv"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "partition,l,r\n1,1,2\n1,3,4\n2,1,3\n2,2,4\n3,1,4\n3,2,3\n"
    );
    let out = catfock(&[
        "partitions",
        "enumerate",
        "--n",
        "2",
        "--epsilon",
        "-+-",
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(
        catfock(&["partitions", "enumerate", "--n", "8"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(catfock(&["fock", "pnk", "--n", "8"]).status.code(), Some(3));
    assert_eq!(
        catfock(&["trapezoid", "--order", "0", "--rows", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(catfock(&["triangle"]).status.code(), Some(2));
    let out = catfock(&["fock", "moment", "--word", "-+?"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains('?'));
}

#[test]
fn verify_report() {
    let out = catfock(&["verify", "--suite", "fock", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["suite"], json!("fock"));
    assert_eq!(v["passed"], json!(true));
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == json!(true)));
}
