use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use biharm_core::regression::FIGURE_PANELS;
use biharm_core::{Geometry, Method, Problem};

fn biharm(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biharm"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn configs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

fn write_config(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// Data rows of a CSV file, skipping the optional timestamp line and header.
fn rows(path: &Path) -> Vec<Vec<String>> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

#[test]
fn every_figure_config_runs_and_meets_its_threshold() {
    let tmp = tempfile::tempdir().unwrap();
    for panel in &FIGURE_PANELS {
        let cfg = configs_dir().join(format!("{}.cfg", panel.name));
        let out = biharm(
            &["run", "--config", cfg.to_str().unwrap(), "--quiet-header"],
            tmp.path(),
        );
        assert!(out.status.success(), "{}: {}", panel.name, stderr(&out));

        let summary = rows(&tmp.path().join(format!("out/{}_summary.csv", panel.name)));
        assert_eq!(summary.len(), 1);
        assert_eq!(summary[0][0], panel.method.to_string());
        let rel: f64 = summary[0][4].parse().unwrap();
        assert!(rel < panel.threshold, "{}: {rel}", panel.name);

        let comparison = tmp.path().join(format!(
            "out/{}_{}_comparison.csv",
            panel.name,
            panel.method.to_string().to_ascii_lowercase()
        ));
        let table = rows(&comparison);
        let last: f64 = table.last().unwrap()[0].parse().unwrap();
        assert_eq!(last, 4.0);
    }
}

#[test]
fn csv_values_round_trip() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = configs_dir().join("fig2_left.cfg");
    let out = biharm(
        &["run", "--config", cfg.to_str().unwrap(), "--quiet-header"],
        tmp.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));

    let panel = FIGURE_PANELS
        .iter()
        .find(|p| p.name == "fig2_left")
        .unwrap();
    let p = Problem::standing_wave(Geometry::Line, 1, panel.r0, panel.r2);
    let e = Method::Adm1d.solve(&p, panel.terms, 40).unwrap();
    let dumped = rows(&tmp.path().join("out/fig2_left_components.csv"));
    assert_eq!(dumped.len(), (panel.terms + 1) * 41);
    for row in dumped {
        let (k, n): (usize, usize) = (row[1].parse().unwrap(), row[2].parse().unwrap());
        let v: f64 = row[3].parse().unwrap();
        assert_eq!(
            v.to_bits(),
            e.components[k].coeff(n).to_bits(),
            "k={k} n={n}"
        );
    }
}

#[test]
fn quiet_runs_are_byte_identical_and_headers_are_timestamps() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = configs_dir().join("fig4_right.cfg");
    let files = [
        "out/fig4_right_components.csv",
        "out/fig4_right_adm_radial_comparison.csv",
        "out/fig4_right_summary.csv",
    ];
    let read_all = || -> Vec<Vec<u8>> {
        files
            .iter()
            .map(|f| fs::read(tmp.path().join(f)).unwrap())
            .collect()
    };

    assert!(biharm(
        &["run", "--config", cfg.to_str().unwrap(), "--quiet-header"],
        tmp.path()
    )
    .status
    .success());
    let first = read_all();
    assert!(biharm(
        &["run", "--config", cfg.to_str().unwrap(), "--quiet-header"],
        tmp.path()
    )
    .status
    .success());
    assert_eq!(first, read_all());

    assert!(
        biharm(&["run", "--config", cfg.to_str().unwrap()], tmp.path())
            .status
            .success()
    );
    for (quiet, stamped) in first.iter().zip(read_all()) {
        let stamped = String::from_utf8(stamped).unwrap();
        let (head, rest) = stamped.split_once('\n').unwrap();
        assert!(head.starts_with("# generated "));
        assert_eq!(rest.as_bytes(), &quiet[..]);
    }
}

#[test]
fn json_summary_and_both_methods() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(
        tmp.path(),
        "both.cfg",
        "geometry=line\ny0=0.2\ny2=-0.1\nmethod=both\nterms=2\nformat=json\nx_max=2\nstep=0.01\noutput_path=res/both\n",
    );
    let out = biharm(&["run", "--config", cfg.to_str().unwrap()], tmp.path());
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(tmp.path().join("res/both_summary.json")).unwrap(),
    )
    .unwrap();
    assert!(doc["generated"].is_string());
    let methods = doc["methods"].as_array().unwrap();
    assert_eq!(methods.len(), 2);
    assert_eq!(methods[0]["method"], "ADM_1D");
    assert_eq!(methods[1]["method"], "LADM_1D");
    assert!(methods[1]["max_rel_error"].as_f64().unwrap() < 1e-3);
    assert!(tmp.path().join("res/both_adm_1d_comparison.csv").exists());
    assert!(tmp.path().join("res/both_ladm_1d_comparison.csv").exists());

    let out = biharm(
        &["run", "--config", cfg.to_str().unwrap(), "--quiet-header"],
        tmp.path(),
    );
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(tmp.path().join("res/both_summary.json")).unwrap(),
    )
    .unwrap();
    assert!(doc.get("generated").is_none());
}

#[test]
fn config_errors_exit_2_with_line_numbers() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(
        tmp.path(),
        "bad.cfg",
        "# comment\ngeometry=line\nalpha=twelve\noutput_path=o\n",
    );
    let out = biharm(&["run", "--config", cfg.to_str().unwrap()], tmp.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));

    let cfg = write_config(
        tmp.path(),
        "dup.cfg",
        "geometry=line\noutput_path=o\ngeometry=radial\n",
    );
    let out = biharm(&["run", "--config", cfg.to_str().unwrap()], tmp.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3: duplicate key `geometry` (first set on line 1)"));

    let out = biharm(&["run", "--config", "missing.cfg"], tmp.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn irregular_radial_data_exits_3() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(
        tmp.path(),
        "irregular.cfg",
        "geometry=radial\ny0=1\ny1=0.5\nmethod=adm\noutput_path=o\n",
    );
    let out = biharm(&["run", "--config", cfg.to_str().unwrap()], tmp.path());
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("y'(0)"), "{}", stderr(&out));

    let cfg = write_config(
        tmp.path(),
        "step.cfg",
        "geometry=line\ny0=1\nx_max=1\nstep=2\noutput_path=o\n",
    );
    assert_eq!(
        biharm(&["run", "--config", cfg.to_str().unwrap()], tmp.path())
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn regress_passes_and_writes_table() {
    let tmp = tempfile::tempdir().unwrap();
    let out = biharm(&["regress", "--out", "report/regress.csv"], tmp.path());
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stderr(&out).contains("0 failed"));
    let text = fs::read_to_string(tmp.path().join("report/regress.csv")).unwrap();
    assert!(
        text.starts_with("check,subject,component,degree,r0,r2,expected,computed,oracle,status\n")
    );
    assert!(text.lines().skip(1).all(|l| l.ends_with(",PASS")));
    assert!(text.contains("figure_protocol,fig1_left:LADM_1D"));

    let out = biharm(&["regress"], tmp.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("check,subject"));
}
