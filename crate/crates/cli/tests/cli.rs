use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use circulant_core::bipartite::BipartiteDemoReport;
use circulant_core::io::{
    canonicalization_from_json, matrix_from_json, matrix_to_json, tuple_to_json, SpectrumRecord,
};
use circulant_core::matcore::is_circulant;
use circulant_core::matcore::random::{random_matrix, random_unit_vector, seeded};
use circulant_core::{Complex64, ComplexMatrix, StateTuple};

fn circulant(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circulant"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn assert_single_line_error(o: &Output, code: i32) {
    assert_eq!(o.status.code(), Some(code), "stderr: {}", stderr(o));
    assert_eq!(stderr(o).lines().count(), 1, "stderr: {}", stderr(o));
}

#[test]
fn channel_apply_uniform_gives_circulant() {
    let dir = tempfile::tempdir().unwrap();
    let x = random_matrix(3, 3, &mut seeded(1));
    let m = write(dir.path(), "x.json", &matrix_to_json(&x));
    let out = dir.path().join("y.json");
    let o = circulant(&["channel", "apply", "--weights", "uniform", "--matrix", &m, "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let y = matrix_from_json(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(is_circulant(&y, 1e-12).unwrap());
    assert!((y.trace() - x.trace()).norm() < 1e-12);
}

#[test]
fn channel_apply_identity_input() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "id.json", &matrix_to_json(&ComplexMatrix::identity(4)));
    let o = circulant(&["channel", "apply", "--weights", "0.1,0.2,0.3,0.4", "--matrix", &m]);
    assert_eq!(o.status.code(), Some(0));
    let y = matrix_from_json(&stdout(&o)).unwrap();
    assert!(y.approx_eq(&ComplexMatrix::identity(4), 1e-15));
}

#[test]
fn channel_apply_weights_file() {
    let dir = tempfile::tempdir().unwrap();
    let w = write(dir.path(), "w.json", "[1.0, 0.0]");
    let x = random_matrix(2, 2, &mut seeded(2));
    let m = write(dir.path(), "x.json", &matrix_to_json(&x));
    let o = circulant(&["channel", "apply", "--weights", &w, "--matrix", &m]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(matrix_from_json(&stdout(&o)).unwrap(), x);
}

#[test]
fn channel_apply_dimension_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "x.json", &matrix_to_json(&ComplexMatrix::identity(4)));
    let o = circulant(&["channel", "apply", "--weights", "1,1,1", "--matrix", &m]);
    assert_single_line_error(&o, 2);
}

#[test]
fn channel_apply_missing_file() {
    let o = circulant(&["channel", "apply", "--weights", "uniform", "--matrix", "/nonexistent/x.json"]);
    assert_single_line_error(&o, 1);
}

#[test]
fn channel_apply_malformed_file() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "x.json", "{\"rows\": 2,");
    let o = circulant(&["channel", "apply", "--weights", "uniform", "--matrix", &m]);
    assert_single_line_error(&o, 2);
}

#[test]
fn spectrum_uniform() {
    let o = circulant(&["channel", "spectrum", "--weights", "uniform", "--dim", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = SpectrumRecord::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.channel_spectrum.multiplicity_of_one, Some(4));
    assert_eq!(r.channel_spectrum.multiplicity_of_zero, Some(12));
    assert!(r.is_entanglement_breaking);
}

#[test]
fn spectrum_non_uniform_and_trivial() {
    let o = circulant(&["channel", "spectrum", "--weights", "0.75,0.25"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!SpectrumRecord::from_json(&stdout(&o)).unwrap().is_entanglement_breaking);
    let o = circulant(&["channel", "spectrum", "--weights", "uniform", "--dim", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let r = SpectrumRecord::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.channel_spectrum.eigenvalues.re.len(), 1);
    let o = circulant(&["channel", "spectrum", "--weights", "uniform"]);
    assert_single_line_error(&o, 2);
    let o = circulant(&["channel", "spectrum", "--weights", "uniform", "--dim", "3", "--tol", "-1"]);
    assert_single_line_error(&o, 2);
}

#[test]
fn sweep_csv_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sweep.csv");
    let o = circulant(&[
        "coherence", "sweep", "--phi", "0.5235987755982988", "--steps", "200", "--p", "1", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("theta,c_rho,c_phi,c_delta"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 200);
    assert_eq!(&rows[0][1..], &[0.0, 0.0, 0.0]);
    for r in &rows {
        assert!(r[1] - r[2] >= -1e-10 && r[2] - r[3] >= -1e-10);
    }
    assert!((rows[199][0] - std::f64::consts::PI).abs() < 1e-15);
}

#[test]
fn sweep_json_and_digits() {
    let o = circulant(&["coherence", "sweep", "--steps", "5", "--format", "json", "--p", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
    assert_eq!(v["p"], 2);
    let o = circulant(&["coherence", "sweep", "--steps", "5", "--digits", "3"]);
    for cell in stdout(&o).lines().skip(1).flat_map(|l| l.split(',').map(str::to_string).collect::<Vec<_>>()) {
        let digits = cell.trim_start_matches('-').replace('.', "").trim_start_matches('0').len();
        assert!(digits <= 3, "{cell}");
    }
}

#[test]
fn sweep_guards() {
    assert_single_line_error(&circulant(&["coherence", "sweep", "--steps", "1"]), 2);
    assert_single_line_error(&circulant(&["coherence", "sweep", "--p", "3"]), 2);
    assert_single_line_error(&circulant(&["coherence", "sweep", "--out", "/nonexistent/dir/s.csv"]), 1);
}

#[test]
fn bargmann_canon_random_tuple() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = seeded(3);
    let t = StateTuple::new((0..4).map(|_| random_unit_vector(3, &mut rng)).collect()).unwrap();
    let p = write(dir.path(), "t.json", &tuple_to_json(&t));
    let o = circulant(&["bargmann", "canon", "--tuple", &p]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let (r, canon) = canonicalization_from_json(&stdout(&o)).unwrap();
    assert!(r.arg_match && r.modulus_bound_holds && r.consecutive_equal);
    assert_eq!(canon.len(), 4);
}

#[test]
fn bargmann_canon_degenerate_and_repeated() {
    let dir = tempfile::tempdir().unwrap();
    let e0 = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
    let e1 = vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
    let t = StateTuple::new(vec![e0.clone(), e1, e0.clone()]).unwrap();
    let p = write(dir.path(), "orth.json", &tuple_to_json(&t));
    let o = circulant(&["bargmann", "canon", "--tuple", &p]);
    assert_single_line_error(&o, 3);
    assert!(stderr(&o).contains("ψ_1|ψ_2"), "{}", stderr(&o));

    let t = StateTuple::new(vec![e0.clone(), e0.clone(), e0]).unwrap();
    let p = write(dir.path(), "rep.json", &tuple_to_json(&t));
    let o = circulant(&["bargmann", "canon", "--tuple", &p]);
    let (r, _) = canonicalization_from_json(&stdout(&o)).unwrap();
    assert!((r.canonical_invariant - Complex64::new(1.0, 0.0)).norm() < 1e-10);
}

#[test]
fn bipartite_demo_erases_entanglement() {
    for (da, db) in [("2", "2"), ("2", "3")] {
        for seed in ["0", "1", "7"] {
            let o = circulant(&["bipartite", "demo", "--da", da, "--db", db, "--seed", seed]);
            assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
            let r: BipartiteDemoReport = serde_json::from_str(&stdout(&o)).unwrap();
            assert!(!r.input_is_ppt && r.output_is_ppt);
        }
    }
    assert_single_line_error(&circulant(&["bipartite", "demo", "--da", "1", "--db", "2"]), 2);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["bipartite", "demo", "--da", "2", "--db", "3", "--seed", "42"][..],
        &["channel", "spectrum", "--weights", "0.5,0.3,0.2"][..],
        &["coherence", "sweep", "--steps", "17"][..],
    ] {
        let a = circulant(args);
        let b = circulant(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn unknown_subcommand() {
    assert_single_line_error(&circulant(&["frobnicate"]), 2);
    assert_single_line_error(&circulant(&["channel", "apply", "--weights"]), 2);
    let o = circulant(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
}
