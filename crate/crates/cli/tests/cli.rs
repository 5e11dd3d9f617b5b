use std::process::{Command, Output};

fn spectra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spectra"))
        .args(args)
        .env("SPECTRA_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn prob_of_s3() {
    let out = spectra(&["prob", "--catalog", "symmetric:3", "--kind", "group"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1/2\n");
}

#[test]
fn prob_of_cyclic_group() {
    let out = spectra(&["prob", "--catalog", "cyclic:7", "--kind", "group"]);
    assert_eq!(stdout(&out), "1\n");
    let out = spectra(&[
        "prob",
        "--catalog",
        "symmetric:4",
        "--method",
        "class-count",
    ]);
    assert_eq!(stdout(&out), "5/24\n");
}

#[test]
fn commring_then_annihilating_probability() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rg.json");
    let path = path.to_str().unwrap();
    let out = spectra(&[
        "construct",
        "--op",
        "commring",
        "--catalog",
        "heisenberg:3",
        "--output",
        path,
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = spectra(&["prob", "--input", path, "--poly", "1,0"]);
    assert_eq!(stdout(&out), "11/27\n");
}

#[test]
fn documents_round_trip_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["dihedral:5", "quaternion8", "heisenberg:3"] {
        let first = stdout(&spectra(&["catalog", name]));
        assert!(!first.contains(' '));
        let path = dir.path().join("doc.json");
        std::fs::write(&path, &first).unwrap();
        // a product with the trivial group reloads and re-saves the document unchanged
        let saved = dir.path().join("saved.json");
        let out = spectra(&[
            "construct",
            "--op",
            "product",
            "--input",
            path.to_str().unwrap(),
            "--catalog2",
            "cyclic:1",
            "--output",
            saved.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        assert_eq!(std::fs::read_to_string(&saved).unwrap(), first);
    }
}

#[test]
fn construction_outputs_load_back() {
    let dir = tempfile::tempdir().unwrap();
    let n = dir.path().join("n.json");
    let g = dir.path().join("g.json");
    assert!(spectra(&[
        "construct",
        "--op",
        "nring",
        "--catalog",
        "zn:4",
        "--output",
        n.to_str().unwrap()
    ])
    .status
    .success());
    assert!(spectra(&[
        "construct",
        "--op",
        "circle",
        "--input",
        n.to_str().unwrap(),
        "--output",
        g.to_str().unwrap()
    ])
    .status
    .success());
    assert_eq!(
        stdout(&spectra(&["prob", "--input", g.to_str().unwrap()])),
        "1\n"
    );
    let out = spectra(&["construct", "--op", "malcev", "--catalog", "ut3:2"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with(r#"{"identity":0,"n":64,"#));
}

#[test]
fn analyze_reports_structure() {
    let text = stdout(&spectra(&["analyze", "--catalog", "ut3:2"]));
    assert!(text.contains("type: ring"));
    assert!(text.contains("nilpotency class: 3"));
    assert!(text.contains("powers: 8 2 1"));
    assert!(text.contains("associative: true"));
    let text = stdout(&spectra(&["analyze", "--catalog", "symmetric:3"]));
    assert!(text.contains("nilpotency class: not nilpotent"));
    assert!(text.contains("center: 1"));
}

#[test]
fn enumerate_prints_spectrum_report() {
    let out = spectra(&["enumerate", "--v", "2,2", "--w", "2", "--alternating"]);
    assert_eq!(
        stdout(&out),
        "{\"family\":\"bilinear V=[2, 2] W=[2] alternating\",\"gate32\":{\"pass\":true,\"violations\":[]},\"poly\":\"1,-1\",\"values\":[{\"count\":2,\"p_over_q\":\"1\"}]}\n"
    );
    let out = spectra(&[
        "enumerate",
        "--general",
        "2,2",
        "--filter",
        "associative",
        "--poly",
        "1,0",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"gate32\""));
}

#[test]
fn verify_is_deterministic_and_exits_zero() {
    let a = spectra(&[
        "verify",
        "--suite",
        "multiplicativity",
        "--seed",
        "11",
        "--json",
    ]);
    let b = spectra(&[
        "verify",
        "--suite",
        "multiplicativity",
        "--seed",
        "11",
        "--json",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("\"instances\":25"));
}

#[test]
fn input_errors_exit_two() {
    for args in [
        vec!["prob", "--catalog", "ut3:2", "--kind", "group"],
        vec!["prob", "--catalog", "symmetric:9"],
        vec!["prob", "--catalog", "nonsense"],
        vec!["prob", "--catalog", "zn:4", "--poly", "1"],
        vec!["prob", "--input", "/nonexistent/file.json"],
        vec!["construct", "--op", "commring", "--catalog", "symmetric:3"],
        vec!["construct", "--op", "circle", "--catalog", "zn:2"],
        vec!["verify", "--suite", "lemma99"],
        vec!["enumerate", "--general", "4,4,4"],
        vec!["prob"],
    ] {
        let out = spectra(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn invalid_document_names_the_violation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"type":"group","n":2,"identity":0,"table":[[0,1],[1,1]]}"#,
    )
    .unwrap();
    let out = spectra(&["prob", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not a permutation"), "{err}");
}
