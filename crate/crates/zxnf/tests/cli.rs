use std::path::PathBuf;
use std::process::{Command, Output};

use zxnf::corpus::{toy_corpus, zx_corpus};
use zxnf::format::{parse_diagram, parse_toy_diagram, print_diagram, print_toy_diagram};
use zxnf::structurally_equal;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(format!("{name}.json")).display().to_string()
}

fn zxnf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zxnf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn data_files_match_the_corpus() {
    for (name, d) in zx_corpus() {
        let text = std::fs::read_to_string(data(&name)).unwrap();
        assert!(structurally_equal(&parse_diagram(&text).unwrap(), &d), "{name}");
        assert_eq!(text.trim_end(), print_diagram(&d));
    }
    for (name, d) in toy_corpus() {
        let text = std::fs::read_to_string(data(&name)).unwrap();
        assert!(structurally_equal(&parse_toy_diagram(&text).unwrap(), &d), "{name}");
        assert_eq!(text.trim_end(), print_toy_diagram(&d));
    }
}

#[test]
fn cz_decompositions_are_equal() {
    let o = zxnf(&["equal", &data("cz_phase_gates"), &data("cz_hadamards"), "--up-to-scalar"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("verdict Equal"));
    let o = zxnf(&["equal", &data("cz_phase_gates"), &data("cnot")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bell_overlap_reports_the_probability() {
    let o = zxnf(&["interpret", &data("bell_overlap_00")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("matrix 1x1"));
    assert!(out.contains("(0,1,0,-1)/2^1"), "{out}");
    assert!(out.contains("modulus squared (1,0,0,0)/2^1"), "{out}");
}

#[test]
fn zero_form_only_for_zero_diagrams() {
    let o = zxnf(&["normalize", &data("bell_overlap_01"), "--form", "zero"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("summary zero inputs=0 outputs=0"));
    let o = zxnf(&["normalize", &data("bell_state"), "--form", "zero"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn normal_forms_are_printed_in_the_file_format() {
    let o = zxnf(&["normalize", &data("cnot"), "--form", "rgslc"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let op = out.lines().find_map(|l| l.strip_prefix("operator ")).unwrap();
    let d = parse_diagram(op).unwrap();
    assert_eq!(zxnf::interpret(&d), zxnf::interpret(&zxnf::corpus::cnot()));
    assert!(out.lines().last().unwrap().starts_with("summary qubits=4"));
    let o = zxnf(&["normalize", &data("toy_correlated_state"), "--form", "gslo"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("summary toy_bits=2 edges=1"));
}

#[test]
fn toy_states_are_told_apart() {
    let o = zxnf(&["equal", &data("toy_state_green_00"), &data("toy_state_red_00")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("verdict Unequal"));
    let o = zxnf(&["interpret", &data("toy_zero_operator")]);
    assert!(stdout(&o).contains("pairs []"));
}

#[test]
fn clifford_t_words() {
    let o = zxnf(&["ct-normalize", "H Z1 H Z1 H Z1 H Z1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("t-count"));
    let o = zxnf(&["ct-normalize", "H Q"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_input_is_an_error() {
    let dir = std::env::temp_dir().join("zxnf-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"nodes\": [{\"id\": 0, \"kind\": \"Z\", \"phase\": 11}], \"edges\": [], \"inputs\": [], \"outputs\": [0]}").unwrap();
    let o = zxnf(&["interpret", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("node 0"));
}

#[test]
fn check_matrix_commands() {
    let dir = std::env::temp_dir().join("zxnf-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bell = dir.join("bell.txt");
    std::fs::write(&bell, "10\n10\n01\n01\n").unwrap();
    let o = zxnf(&["check-matrix", "graph-form", bell.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("adjacency\n01\n10\n"), "{}", stdout(&o));
    let (a, b) = (dir.join("k3.txt"), dir.join("star.txt"));
    std::fs::write(&a, "011\n101\n110\n").unwrap();
    std::fs::write(&b, "011\n100\n100\n").unwrap();
    let o = zxnf(&["check-matrix", "lc-equal", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn rule_audit_command() {
    let o = zxnf(&["check-rules", "--max-arity", "1", "--toy"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.ends_with("PASS")));
}
