use std::path::PathBuf;
use std::process::Command;

use framesteps::io::{document_to_json, parse_document, Document};
use framesteps_cli::{run, Outcome, EXIT_INVALID, EXIT_OK, EXIT_USAGE};

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn scratch(name: &str, contents: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("framesteps").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = cli(args);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    out.stdout
}

#[test]
fn count_only_enumeration() {
    assert_eq!(ok(&["enumerate", "--shape", "2,2", "--weight", "1,1,1,1", "--count-only"]), "2\n");
    assert_eq!(ok(&["enumerate", "--shape", "2,2", "--weight", "1,1,1,1"]).lines().count(), 2);
    assert_eq!(ok(&["enumerate", "--shape", "3,3", "--weight", "1,1,1,1,1,1", "--limit", "3"]).lines().count(), 3);
}

#[test]
fn funtf_eigensteps_clear() {
    let out = ok(&["eigensteps", "--clear", &fixture("funtf_3x5.csv")]);
    assert_eq!(
        out,
        "ℓ = 3\n{\"kind\":\"gt\",\"shape\":\"triangular\",\"rows\":[[3],[5,1],[5,4,0],[5,5,2,0],[5,5,5,0,0]]}\n"
    );
    let outer = ok(&["eigensteps", "--outer", "--clear", &fixture("funtf_3x5.csv")]);
    assert!(outer.ends_with("\"rows\":[[3,0,0],[5,1,0],[5,4,0],[5,5,2],[5,5,5]]}\n"));
    let raw = ok(&["eigensteps", &fixture("funtf_3x5.csv")]);
    assert_eq!(raw.lines().count(), 5);
}

#[test]
fn ssyt_to_triangle() {
    assert_eq!(
        ok(&["convert", "--to", "gt", &fixture("ex_ssyt.json")]),
        "{\"kind\":\"gt\",\"shape\":\"triangular\",\"rows\":[[4],[4,2],[4,3,2],[4,3,3,1]]}\n"
    );
}

#[test]
fn conversions_reparse_and_revalidate() {
    let inputs = ["ex_ssyt.json", "funtf_triangle.json", "generalized_example.json", "boxcomp_example.json"];
    for input in inputs {
        for to in ["ssyt", "gt", "skew", "parallelogram"] {
            let text = ok(&["convert", "--to", to, &fixture(input)]);
            let doc = parse_document(&text).unwrap();
            let valid = match &doc {
                Document::Tableau(t) => t.is_valid(),
                Document::Pattern(p) => p.is_valid(),
                Document::Matrix(_) => false,
            };
            assert!(valid, "{input} -> {to}: {text}");
            assert_eq!(format!("{}\n", document_to_json(&doc)), text);
            let back = ok(&["validate", &scratch(&format!("{to}-{input}"), &text)]);
            assert!(back.starts_with("valid"));
        }
    }
}

#[test]
fn straight_skew_straight() {
    let skew = ok(&["convert", "--to", "skew", &fixture("ex_ssyt.json")]);
    let path = scratch("ex_skew.json", &skew);
    let straight = ok(&["convert", "--to", "ssyt", &path]);
    assert_eq!(straight, std::fs::read_to_string(fixture("ex_ssyt.json")).unwrap());
}

#[test]
fn complement_maps() {
    assert_eq!(
        ok(&["complement", "--map", "naimark", &fixture("funtf_triangle.json")]),
        "{\"kind\":\"gt\",\"shape\":\"triangular\",\"rows\":[[2],[4,0],[5,1,0],[5,3,0,0],[5,5,0,0,0]]}\n"
    );
    assert_eq!(
        ok(&["complement", "--map", "generalized", &fixture("generalized_example.json")]),
        "{\"kind\":\"gt\",\"shape\":\"triangular\",\"rows\":[[2],[3,0],[5,1,0],[5,4,1,0],[5,4,1,0,0]]}\n"
    );
    assert_eq!(
        ok(&["complement", "--map", "boxcomp", &fixture("boxcomp_example.json")]),
        "{\"kind\":\"tableau\",\"rows\":[[1,1,2,3,3],[3,4,4,4],[4]]}\n"
    );
    let gamma = ok(&["complement", "--map", "gamma", "--n", "5", "--d", "3", &scratch(
        "funtf_ssyt.json",
        "{\"kind\":\"tableau\",\"rows\":[[1,1,1,2,2],[2,3,3,3,4],[4,4,5,5,5]]}",
    )]);
    assert_eq!(gamma, "{\"kind\":\"tableau\",\"rows\":[[1,1,2,2,3],[3,4,4,5,5]]}\n");
    let out = cli(&["complement", "--map", "gamma", &fixture("ex_ssyt.json")]);
    assert_eq!(out.code, EXIT_INVALID);
}

#[test]
fn rendering() {
    assert_eq!(ok(&["render", &fixture("ex_ssyt.json")]), "4\n3 3 4\n2 2 3\n1 1 1 1\n");
    let small = scratch("small_gt.json", "{\"kind\":\"gt\",\"shape\":\"triangular\",\"rows\":[[3],[5,1]]}");
    assert_eq!(ok(&["render", "--format", "ascii", &small]), "5  1\n 3\n");
    let empty = scratch("empty.json", "{\"kind\":\"tableau\",\"rows\":[]}");
    assert_eq!(ok(&["render", &empty]), "(empty)\n");
    assert!(ok(&["render", "--format", "latex", &fixture("ex_ssyt.json")]).starts_with("\\begin{ytableau}\n4 \\\\"));
}

#[test]
fn frame_commands() {
    let report = ok(&["report", &fixture("funtf_3x5.csv")]);
    assert!(report.contains("rank: 3\n") && report.contains("tight: yes\n") && report.contains("equal norm: yes\n"));
    let psi = ok(&["naimark-frame", &fixture("funtf_3x5.csv")]);
    assert_eq!(psi.lines().count(), 2);
    let psi_path = scratch("psi.csv", &psi);
    let cleared = ok(&["eigensteps", "--clear", &psi_path]);
    assert!(cleared.ends_with("\"rows\":[[2],[4,0],[5,1,0],[5,3,0,0],[5,5,0,0,0]]}\n"));
    let shear = scratch("shear.csv", "1,1\n0,1\n");
    assert_eq!(cli(&["naimark-frame", &shear]).code, EXIT_INVALID);
    assert_eq!(ok(&["naimark-frame", "--generalized", &shear]).lines().count(), 1);
}

#[test]
fn diagram_verification() {
    let out = ok(&["verify-diagrams", "--n", "4", "--d", "2"]);
    assert!(out.starts_with("naimark diagram: 3 of 3 tableaux commute\n"));
    assert_eq!(cli(&["verify-diagrams", "--n", "3", "--d", "3"]).code, EXIT_USAGE);
}

#[test]
fn exit_codes_and_diagnostics() {
    assert_eq!(cli(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(cli(&["convert", "--to", "gt"]).code, EXIT_USAGE);
    assert_eq!(cli(&["--help"]).code, EXIT_OK);

    let missing = cli(&["validate", "/no/such/file.json"]);
    assert_eq!(missing.code, EXIT_USAGE);
    assert!(missing.stderr.starts_with("error: cannot read"));

    let schema = cli(&["validate", &scratch("bad_schema.json", "{\"kind\":\"gt\",\"rows\":[[1]]}")]);
    assert_eq!(schema.code, EXIT_USAGE);

    let invalid = cli(&["validate", &scratch("bad_tableau.json", "{\"kind\":\"tableau\",\"rows\":[[2,1],[1]]}")]);
    assert_eq!(invalid.code, EXIT_INVALID);
    assert_eq!(invalid.stderr.lines().count(), 1);
    assert!(invalid.stderr.contains("row"), "{}", invalid.stderr);

    let pattern = scratch("bad_gt.json", "{\"kind\":\"gt\",\"shape\":\"triangular\",\"rows\":[[3],[2,1]]}");
    let out = cli(&["validate", &pattern]);
    assert_eq!(out.code, EXIT_INVALID);
    assert!(out.stderr.contains("interlac"), "{}", out.stderr);
}

#[test]
fn binary_honours_tolerance_variable() {
    let bin = env!("CARGO_BIN_EXE_framesteps");
    let csv = fixture("funtf_3x5.csv");
    let default = Command::new(bin).args(["eigensteps", "--clear", &csv]).env_remove("FRAMESTEPS_TOL").output().unwrap();
    assert_eq!(default.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&default.stdout).starts_with("ℓ = 3\n"));

    let strict = Command::new(bin).args(["eigensteps", "--clear", &csv]).env("FRAMESTEPS_TOL", "1e-30").output().unwrap();
    assert_eq!(strict.status.code(), Some(EXIT_INVALID));

    let garbage = Command::new(bin).args(["report", &csv]).env("FRAMESTEPS_TOL", "tiny").output().unwrap();
    assert_eq!(garbage.status.code(), Some(EXIT_USAGE));
}
