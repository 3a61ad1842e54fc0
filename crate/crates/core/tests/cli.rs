use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_invol2"));
    c.env_remove("INVOL2_DEGREE_BUDGET");
    c
}

fn scenario(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios").join(name)
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn bundled_scenarios_run_and_recheck() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["aniso_deg4.json", "lemma3_deg8.json", "count_deg8.json"] {
        let cert = dir.path().join(format!("{name}.cert"));
        let o = bin().arg("run").arg(scenario(name)).arg("--out").arg(&cert).output().unwrap();
        assert_eq!(code(&o), 0, "{name}: {}", String::from_utf8_lossy(&o.stderr));
        let o = bin().arg("run").arg(scenario(name)).arg("--recheck").arg(&cert).output().unwrap();
        assert_eq!(code(&o), 0, "{name}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).contains(" 0 failures"));
    }
}

#[test]
fn certificates_are_deterministic() {
    let run = || bin().arg("run").arg(scenario("aniso_deg4.json")).arg("--seed").arg("7").output().unwrap();
    let (a, b) = (run(), run());
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn tampered_certificate_fails_recheck() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("c.json");
    let o = bin().arg("run").arg(scenario("aniso_deg4.json")).arg("--out").arg(&cert).output().unwrap();
    assert_eq!(code(&o), 0);
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let results = v["results"].as_array_mut().unwrap();
    let r = results.iter_mut().find(|r| r["witnesses"].as_object().is_some_and(|w| !w.is_empty())).unwrap();
    let w = r["witnesses"].as_object_mut().unwrap().values_mut().next().unwrap();
    w["sha256"] = serde_json::Value::String("00".repeat(32));
    std::fs::write(&cert, serde_json::to_string(&v).unwrap()).unwrap();
    let o = bin().arg("run").arg(scenario("aniso_deg4.json")).arg("--recheck").arg(&cert).output().unwrap();
    assert_eq!(code(&o), 1);
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.json");
    std::fs::write(&f, "{\"field\": ").unwrap();
    assert_eq!(code(&bin().arg("run").arg(&f).output().unwrap()), 2);
    std::fs::write(&f, r#"{"field": {"vars": ["a"]}, "factors": [], "actions": [], "bogus": 1}"#).unwrap();
    assert_eq!(code(&bin().arg("run").arg(&f).output().unwrap()), 2);
    assert_eq!(code(&bin().arg("frobnicate").output().unwrap()), 2);
}

#[test]
fn unmet_expectation_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("s.json");
    std::fs::write(
        &f,
        r#"{"field": {"vars": ["x", "y"]},
            "factors": [{"type": "quat", "alpha": "x", "beta": "y", "involution": "tau"}],
            "actions": [{"action": "represents", "alpha": "y", "expect": {"represented": false}}]}"#,
    )
    .unwrap();
    assert_eq!(code(&bin().arg("run").arg(&f).output().unwrap()), 1);
}

#[test]
fn degree_overflow_exits_3() {
    let o = bin().env("INVOL2_DEGREE_BUDGET", "1").arg("run").arg(scenario("aniso_deg4.json")).output().unwrap();
    assert_eq!(code(&o), 3);
}

#[test]
fn form_commands() {
    let o = bin().args(["i-invariant", "--vars", "x,y", "x", "y"]).output().unwrap();
    assert_eq!((code(&o), stdout(&o).trim()), (0, "0"));
    let o = bin().args(["i-invariant", "--vars", "x,y", "x", "x"]).output().unwrap();
    assert_eq!((code(&o), stdout(&o).trim()), (0, "1"));
    let o = bin().args(["pfister", "--vars", "a,b", "[a,b)", "m2t"]).output().unwrap();
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("i = 1"), "{}", stdout(&o));
    let o = bin().args(["represents", "b", "--vars", "a,b", "--factor", "[a,b)"]).output().unwrap();
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("yes"));
    let o = bin().args(["represents", "a", "--vars", "a,b", "--factor", "[a,b)"]).output().unwrap();
    assert_eq!(stdout(&o).trim(), "no");
}
