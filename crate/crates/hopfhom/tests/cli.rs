use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hopfhom::formats::{to_canonical_json, HopfFileV1, ReportV1, SubspaceFileV1, SurjectionFileV1};
use hopfhom_core::field::Rational;
use hopfhom_core::linalg::Subspace;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopfhom"))
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn run(args: &[&str]) -> (i32, Output) {
    let out = bin().args(args).output().expect("runs");
    (out.status.code().expect("exit code"), out)
}

fn report(out: &Output) -> ReportV1 {
    serde_json::from_slice(&out.stdout).expect("report on stdout")
}

fn fixture(name: &str) -> String {
    fixtures().join(name).to_str().unwrap().to_string()
}

#[test]
fn shipped_fixtures_are_canonical() {
    for entry in walk(&fixtures()) {
        let text = std::fs::read_to_string(&entry).unwrap();
        let again = if entry.to_str().unwrap().contains("surjection") {
            to_canonical_json(&SurjectionFileV1::parse(&text).unwrap())
        } else {
            to_canonical_json(&HopfFileV1::parse(&text).unwrap())
        };
        assert_eq!(again, text, "{}", entry.display());
    }
}

fn walk(dir: &Path) -> Vec<PathBuf> {
    let mut out = Vec::new();
    for e in std::fs::read_dir(dir).unwrap() {
        let p = e.unwrap().path();
        if p.is_dir() {
            out.extend(walk(&p));
        } else {
            out.push(p);
        }
    }
    out.sort();
    out
}

#[test]
fn verify_example_passes() {
    let (code, out) = run(&["verify", "--example", "sweedler"]);
    assert_eq!(code, 0);
    assert!(report(&out).passed);
}

#[test]
fn verify_files() {
    let (code, out) = run(&["verify", &fixture("fs3.hopf.json"), &fixture("fs3.surjection.json")]);
    assert_eq!(code, 0);
    assert_eq!(report(&out).data["h_dim"], 1);
}

#[test]
fn truncated_file_is_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixtures().join("sweedler.hopf.json")).unwrap();
    let path = dir.path().join("cut.json");
    std::fs::write(&path, &text[..text.len() / 2]).unwrap();
    let (code, out) = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("input error"));
}

#[test]
fn mutated_mult_entry_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let mut file = HopfFileV1::parse(&std::fs::read_to_string(fixtures().join("kz2.hopf.json")).unwrap()).unwrap();
    file.mult[1].3 = "2".into();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, to_canonical_json(&file)).unwrap();
    let (code, out) = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    let r = report(&out);
    assert!(!r.passed);
    assert!(r.checks.iter().any(|c| !c.passed && c.witness.is_some()));
}

#[test]
fn field_mismatch_is_input_error() {
    let (code, _) = run(&["verify", &fixture("kz2.hopf.json"), "--field", "GF(7)"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["verify", "--example", "kz2", "--field", "GF(17)"]);
    assert_eq!(code, 2);
}

#[test]
fn prime_field_fixture() {
    let (code, out) = run(&[
        "coinvariants",
        &fixture("gf7/fs3_k12.hopf.json"),
        &fixture("gf7/fs3_k12.surjection.json"),
        "--field",
        "GF(7)",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report(&out).data["b_dim"], 3);
}

#[test]
fn coinvariants_dims() {
    for (name, dim) in [("sweedler", 2), ("fs3_k12", 3), ("fs3", 6), ("kz2", 2)] {
        let (code, out) = run(&["coinvariants", &fixture(&format!("{name}.hopf.json")), &fixture(&format!("{name}.surjection.json"))]);
        assert_eq!(code, 0);
        assert_eq!(report(&out).data["b_dim"], dim, "{name}");
    }
}

#[test]
fn galois_dims() {
    for (name, dim) in [("sweedler", 8), ("fs3_k12", 12)] {
        let (code, out) = run(&["galois", "--example", name]);
        assert_eq!(code, 0);
        let r = report(&out);
        assert_eq!(r.data["galois"], true);
        assert_eq!(r.data["tensor_dim"], dim);
    }
}

#[test]
fn classify_counts() {
    let (code, out) = run(&["classify", "--example", "sweedler", "--brute"]);
    assert_eq!(code, 0);
    let r = report(&out);
    assert_eq!(r.data["count"], 2);
    let dims: Vec<u64> = r.data["calculi"].as_array().unwrap().iter().map(|c| c["omega_dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![2, 0]);
}

#[test]
fn induce_universal_and_ideal_file() {
    let (code, out) = run(&["induce", "--example", "fs3_k12", "--universal"]);
    assert_eq!(code, 0);
    let r = report(&out);
    assert_eq!(r.data["sections_dim"], 6);
    assert_eq!(r.data["strict_inclusion"], false);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ideal.json");
    let full = SubspaceFileV1::from_subspace(&Subspace::<Rational>::full(3));
    std::fs::write(&path, to_canonical_json(&full)).unwrap();
    let (code, out) = run(&["induce", "--example", "sweedler", "--ideal", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report(&out).data["omega_dim"], 0);
}

#[test]
fn roundtrip_and_gate() {
    let (code, out) = run(&["roundtrip", "--example", "fs3_k12"]);
    assert_eq!(code, 0);
    assert!(report(&out).data["fg_not_applicable"].as_array().unwrap().is_empty());
    let (code, out) = run(&["roundtrip", "--example", "sweedler", "--suite", "t2", "--disable-galois"]);
    assert_eq!(code, 0);
    let r = report(&out);
    assert_eq!(r.data["fg_not_applicable"].as_array().unwrap().len(), 2);
    assert!(!r.warnings.is_empty());
}

#[test]
fn output_is_deterministic_and_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let (_, a) = run(&["classify", "--example", "fs3_k12", "--json", path.to_str().unwrap()]);
    let (_, b) = run(&["classify", "--example", "fs3_k12"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
}

#[test]
fn export_matches_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _) = run(&["export", "--example", "sweedler", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    for f in ["sweedler.hopf.json", "sweedler.surjection.json"] {
        assert_eq!(std::fs::read(dir.path().join(f)).unwrap(), std::fs::read(fixtures().join(f)).unwrap());
    }
}
