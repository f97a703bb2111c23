use std::process::{Command, Output};

fn schubert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = schubert(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8").trim_end().to_string()
}

#[test]
fn coefficient_of_coloured_instance() {
    assert_eq!(stdout(&["coeff", "32154", "14523", "45312"]), "1");
}

#[test]
fn identity_polynomial() {
    assert_eq!(stdout(&["schubert", "1"]), "1");
    assert_eq!(stdout(&["schubert", "132"]), "x1 + x2");
}

#[test]
fn chains_with_words() {
    let out = stdout(&["chains", "--k", "2", "--words", "312645", "561234"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("6"));
    let mut words: Vec<&str> = lines.collect();
    words.sort_unstable();
    assert_eq!(words, ["2456", "2465", "2645", "4256", "4265", "4526"]);
}

#[test]
fn coloured_count() {
    assert_eq!(stdout(&["coloured", "--I", "2,3", "32154", "45312"]), "57");
}

#[test]
fn psi_p_and_psi_set() {
    assert_eq!(stdout(&["psi-p", "--p", "3", "413652"]), "S[42531] + S[52341]");
    let out = stdout(&["psi-P", "--set", "1,3,5", "516432"]);
    assert_eq!(out.matches("(y)").count(), 9);
}

#[test]
fn lrc_and_expand() {
    assert_eq!(stdout(&["lrc", "(153)(246)", "3,2,1"]), "2");
    assert_eq!(stdout(&["expand", "x1^2 + x1*x2"]), "S[231] + S[312]");
}

#[test]
fn census_small() {
    assert_eq!(stdout(&["census", "--n", "4"]), "14 21 24");
}

#[test]
fn complex_gluings() {
    let out = stdout(&["complex", "--k", "2", "21345", "45123"]);
    assert_eq!(out.lines().filter(|l| l.starts_with('{')).count(), 5);
    assert!(out.contains("codimension 2: 2"));
}

#[test]
fn json_carries_schema() {
    let out = stdout(&["--format", "json", "coeff", "32154", "14523", "45312"]);
    let v: serde_json::Value = serde_json::from_str(&out).expect("json");
    assert_eq!(v["schema"], "1");
    assert_eq!(v["coeff"], "1");
}

#[test]
fn dot_export() {
    let out = stdout(&["--format", "dot", "interval", "--k", "2", "312645", "561234"]);
    assert!(out.starts_with("digraph"));
}

#[test]
fn verify_all_small() {
    let out = schubert(&["verify", "--check", "all", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "verify", "--check", "B", "--n", "4", "--seed", "3"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn malformed_permutation_is_a_domain_error() {
    let out = schubert(&["schubert", "41x2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 3"));
    let out = schubert(&["coeff", "1223", "1", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(schubert(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(schubert(&["chains", "312645", "561234"]).status.code(), Some(2));
    assert_eq!(schubert(&["coeff", "--bogus", "1", "1", "1"]).status.code(), Some(2));
}
