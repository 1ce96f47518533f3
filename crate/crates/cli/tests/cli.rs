use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use crosscap::graph::{build_comaximal, complete_bipartite, gamma_with_units, parse_edge_list, to_edge_list};
use crosscap::ring::{compile_ring, RingSpec};
use crosscap::surface::{verify_certificate, EmbeddingCertificate};

fn crosscap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crosscap")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).filter(|rest| rest.starts_with(' ')))
        .map(str::trim)
        .unwrap_or_else(|| panic!("no {key} in {text}"))
}

fn only_file(dir: &Path, ext: &str) -> std::path::PathBuf {
    let mut hits: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == ext))
        .collect();
    assert_eq!(hits.len(), 1, "{ext} files in {}", dir.display());
    hits.pop().unwrap()
}

#[test]
fn ring_reports() {
    let o = stdout(&crosscap(&["ring", "Z8"]));
    assert_eq!(
        (field(&o, "order"), field(&o, "units"), field(&o, "jacobson"), field(&o, "local")),
        ("8", "4", "4", "true")
    );
    let o = stdout(&crosscap(&["ring", "Z3 x Z3"]));
    assert_eq!(
        (field(&o, "order"), field(&o, "units"), field(&o, "jacobson"), field(&o, "local")),
        ("9", "4", "1", "false")
    );
    let o = stdout(&crosscap(&["ring", "Z2[x]/(x^3)"]));
    assert_eq!((field(&o, "local"), field(&o, "maximal-ideal")), ("true", "4"));
}

#[test]
fn bad_ring_spec_is_an_error() {
    let o = crosscap(&["ring", "Z2 x Q"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn classify_z5_writes_a_certificate_that_reverifies() {
    let dir = tempfile::tempdir().unwrap();
    let o =
        crosscap(&["classify", "--ring", "Z5", "--family", "gamma", "--S", "4", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(field(&text, "computed"), "projective");
    assert!(field(&text, "theory").starts_with("projective"));

    let cert = EmbeddingCertificate::parse(&fs::read_to_string(only_file(dir.path(), "cert")).unwrap()).unwrap();
    let r = compile_ring(&RingSpec::parse("Z5").unwrap()).unwrap();
    let g = gamma_with_units(&r, &[4], false).unwrap();
    let t = verify_certificate(&g, &cert).unwrap();
    assert_eq!((t.euler_genus, t.orientable), (1, false));
}

#[test]
fn classify_comaximal_z2xz4() {
    let dir = tempfile::tempdir().unwrap();
    let o =
        crosscap(&["classify", "--ring", "Z2 x Z4", "--family", "comaximal", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(field(&stdout(&o), "computed"), "projective");
    let cert = EmbeddingCertificate::parse(&fs::read_to_string(only_file(dir.path(), "cert")).unwrap()).unwrap();
    let g = build_comaximal(&compile_ring(&RingSpec::parse("Z2 x Z4").unwrap()).unwrap());
    assert_eq!(verify_certificate(&g, &cert).unwrap().euler_genus, 1);
}

#[test]
fn classify_z7_names_the_obstruction() {
    let dir = tempfile::tempdir().unwrap();
    let o = crosscap(&["classify", "--ring", "Z7", "--S", "1", "--out", dir.path().to_str().unwrap()]);
    let text = stdout(&o);
    assert_eq!(field(&text, "computed"), "neither");
    assert_eq!(field(&text, "witness"), "obstruction A2 (isomorphic)");
    let model = fs::read_to_string(only_file(dir.path(), "model")).unwrap();
    assert!(model.starts_with("pattern A2\n"));
    assert_eq!(model.lines().filter(|l| l.starts_with("path ")).count(), 18);
}

#[test]
fn classify_unit_and_cayley_families() {
    let o = stdout(&crosscap(&["classify", "--ring", "Z3 x Z3", "--family", "cayley"]));
    assert_eq!(field(&o, "computed"), "projective");
    let o = stdout(&crosscap(&["classify", "--ring", "Z5", "--family", "unit"]));
    assert_eq!(field(&o, "computed"), "planar");
}

#[test]
fn crosscap_of_named_and_ring_graphs() {
    let o = stdout(&crosscap(&["crosscap", "--named", "K6"]));
    assert_eq!(field(&o, "crosscap"), "1");
    let o = stdout(&crosscap(&["crosscap", "--ring", "Z9", "--S", "1"]));
    assert!(field(&o, "lower").starts_with("2 (K36"), "{o}");
    let o = stdout(&crosscap(&["crosscap", "--named", "2*K5"]));
    assert_eq!(field(&o, "crosscap"), "2");
    assert!(field(&o, "lower").contains("composition"));
}

#[test]
fn crosscap_of_an_edge_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k33.edges");
    fs::write(&path, to_edge_list(&complete_bipartite(3, 3))).unwrap();
    let out = dir.path().join("out");
    let o = crosscap(&["crosscap", "--graph", path.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&stdout(&o), "crosscap"), "1");
    let cert = EmbeddingCertificate::parse(&fs::read_to_string(out.join("k33.cert")).unwrap()).unwrap();
    assert!(verify_certificate(&complete_bipartite(3, 3), &cert).is_ok());
}

#[test]
fn obstruction_list_and_export() {
    let o = stdout(&crosscap(&["obstruction", "list"]));
    let names: Vec<&str> = o.lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(names, ["K5", "K33", "K44", "K36", "A2", "B3", "E18"]);
    let dir = tempfile::tempdir().unwrap();
    crosscap(&["obstruction", "show", "b3", "--out", dir.path().to_str().unwrap()]);
    let g = parse_edge_list(&fs::read_to_string(dir.path().join("b3.edges")).unwrap()).unwrap();
    assert_eq!((g.p(), g.q()), (8, 18));
}

#[test]
fn graph_export_formats() {
    let o = stdout(&crosscap(&["graph", "--ring", "Z2 x Z2 x Z3", "--family", "comaximal"]));
    assert_eq!(parse_edge_list(&o).unwrap().q(), 35);
    let o = stdout(&crosscap(&["graph", "--ring", "Z5", "--S", "1,4", "--format", "dot"]));
    assert!(o.contains("graph") && o.matches("--").count() == 10, "{o}");
}

#[test]
fn verify_paper_sections_and_exit_codes() {
    let o = crosscap(&["verify-paper", "--section", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().filter(|l| l.starts_with('[')).map(String::from).collect();
    assert_eq!(lines.len(), 1);
    assert!(lines[0].starts_with("[ 9] PASS"));

    let o = crosscap(&["verify-paper"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("[ 3] SKIPPED"));
    assert_eq!(text.lines().filter(|l| l.starts_with('[') && l.contains("] PASS")).count(), 9);

    let tight = crosscap(&["verify-paper", "--budget", "20"]);
    assert_eq!(tight.status.code(), Some(2));
    assert!(!stdout(&tight).contains("FAIL"));
    assert_eq!(crosscap(&["verify-paper", "--budget", "20"]).status.code(), Some(2));

    assert_ne!(crosscap(&["verify-paper", "--budget", "0"]).status.code(), Some(0));
    assert_ne!(crosscap(&["verify-paper", "--section", "9"]).status.code(), Some(0));
}

#[test]
fn worker_count_does_not_change_output() {
    let run = |w: &str| {
        let o = crosscap(&["classify", "--ring", "Z3 x Z3", "--S", "(1,2),(2,2)", "--workers", w]);
        stdout(&o)
    };
    let (one, four) = (run("1"), run("4"));
    assert_eq!(field(&one, "computed"), "projective");
    assert_eq!(one, four);
}
