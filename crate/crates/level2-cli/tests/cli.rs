use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_level2"))
        .args(args)
        .env("MODULI_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn tables_in_every_format() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["tables", "q2", "--format", "csv"], dir.path());
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 15);
    assert_eq!(out.lines().next().unwrap(), "7;0,0,0,1,0,0,1");
    let out = stdout(&run(&["tables", "h3-s7", "--format", "csv"], dir.path()));
    assert!(out.contains("1,1,1,1,1,1,1;-25920,37584,-20880,5580,-720,36"));
    let out = stdout(&run(&["tables", "m08", "--format", "latex"], dir.path()));
    assert!(out.contains("\\(\\left[8\\right]\\) & \\(q^{5}+q^{3}\\) \\\\"));
    let out = stdout(&run(&["tables", "h3-s8", "--format", "json"], dir.path()));
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 22);
    let out = stdout(&run(&["tables", "q2"], dir.path()));
    assert!(out.contains("| [7] | q^6+q^3 |"));
}

#[test]
fn verify_agrees_and_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let reports = dir.path().join("reports");
    let r = reports.to_str().unwrap();
    let o = run(&["verify", "q2", "--q", "3", "--report-dir", r], dir.path());
    assert!(o.status.success());
    assert!(stdout(&o).contains("15/15 AGREE"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(reports.join("verify-q2-q3.json")).unwrap()).unwrap();
    assert!(json.to_string().contains("\"closed_form_value\""));

    let o = run(&["verify", "m08", "--q", "3,5", "--report-dir", r], dir.path());
    assert!(o.status.success());
    assert!(stdout(&o).contains("44/44 AGREE"));
    assert!(reports.join("verify-m08-q5.json").exists());
}

#[test]
fn verify_components_skips_undecomposed_classes() {
    let dir = tempfile::tempdir().unwrap();
    let r = dir.path().to_str().unwrap();
    let o = run(&["verify", "q2", "--components", "--partitions", "[1,6],[5,2]", "--report-dir", r], dir.path());
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("[6,1] Δ_l∩Δ_c q=3 closed=50544 brute=50544 AGREE"));
    assert!(out.contains("[5,2] q=3 SKIPPED"));
    assert!(out.contains("4/4 AGREE, 1 SKIPPED"));
    assert!(dir.path().join("verify-q2-components-q3.json").exists());
}

#[test]
fn verify_skips_oversized_extensions() {
    let dir = tempfile::tempdir().unwrap();
    let r = dir.path().to_str().unwrap();
    let o = run(&["verify", "q2", "--q", "5", "--partitions", "[4,3],[2,1^5]", "--report-dir", r], dir.path());
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("[4,3] q=5 SKIPPED"));
    assert!(out.contains("1/1 AGREE, 1 SKIPPED"));
}

#[test]
fn configuration_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["verify", "q2", "--q", "4"][..],
        &["verify", "q2", "--q", "6"],
        &["verify", "q2", "--partitions", "[6]"],
        &["verify", "m08", "--components"],
        &["verify", "q2", "--strategy", "nonsense"],
        &["--threads", "0", "bounds"],
        &["tables", "m09"],
    ] {
        assert_eq!(run(args, dir.path()).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn cohomology_and_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["cohomology", "q2", "--format", "csv"], dir.path());
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().nth(1).unwrap().starts_with("0;1;0;0"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("H^4 s[2,1^5]: computed 8, printed 6"));
    let out = stdout(&run(&["cohomology", "h3", "--poincare"], dir.path()));
    assert_eq!(out.trim(), "25920t^5+37584t^4+20880t^3+5580t^2+720t+36");
    let out = stdout(&run(&["bounds", "--format", "csv"], dir.path()));
    assert_eq!(out.lines().count(), 1 + 8 * 15);
    assert!(out.contains("2,\"[7]\",-2,Hk_plus_1,2"));
    let out = stdout(&run(&["bounds"], dir.path()));
    assert!(out.contains("≥1 in W_0H^0"));
}

#[test]
fn induce_builds_then_loads_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c");
    let o = run(&["induce", "--check-index"], &cache);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1451520 / 40320 / 36");
    assert!(String::from_utf8_lossy(&o.stderr).contains("Built"));

    // the flag takes precedence over the environment
    let elsewhere = dir.path().join("unused");
    let o = run(&["--cache-dir", cache.to_str().unwrap(), "induce", "--format", "csv"], &elsewhere);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("Loaded"));
    assert!(stdout(&o).contains("37 rows, 0 disagree"));
    assert!(!elsewhere.exists());

    assert!(stdout(&run(&["cache", "status"], &cache)).contains("valid, 1451520 elements"));
    assert!(run(&["cache", "clear"], &cache).status.success());
    assert!(stdout(&run(&["cache"], &cache)).contains("absent"));
}
