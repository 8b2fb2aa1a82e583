use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn signull(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_signull"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("signull-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

const C4: &str = "n 4\ne 0 1 +\ne 1 2 +\ne 2 3 +\ne 3 0 +\n";

#[test]
fn nullity_from_stdin() {
    let o = signull(&["nullity", "-"], Some(C4));
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n 4\nrank 2\neta 2\n");
}

#[test]
fn multiplicity_accepts_negative_and_fractional_lambda() {
    let o = signull(&["multiplicity", "-", "-2"], Some(C4));
    assert_eq!(stdout(&o), "lambda -2\nmultiplicity 1\n");
    let o = signull(&["multiplicity", "-", "1/2"], Some(C4));
    assert_eq!(stdout(&o), "lambda 1/2\nmultiplicity 0\n");
}

#[test]
fn gen_then_classify_theta() {
    let path = scratch("theta.txt");
    let o = signull(
        &[
            "gen",
            "theta",
            "p=4",
            "q=4",
            "l=4",
            "signs=++",
            "-o",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = signull(&["classify", path.to_str().unwrap()], None);
    let text = stdout(&o);
    assert!(text.contains("eta 3\n"), "{text}");
    assert!(
        text.contains("form theta\n") || text.contains("form bicyclic\n"),
        "{text}"
    );
}

#[test]
fn invariants_and_bound() {
    let o = signull(&["invariants", "-"], Some(C4));
    let text = stdout(&o);
    assert!(
        text.contains("cyclomatic 1\n") && text.contains("pendants 0\n"),
        "{text}"
    );
    let o = signull(&["bound", "-"], Some(C4));
    assert_eq!(stdout(&o), "case leaf_free_cycle_disjoint\nbound 2\neta 2\nslack 0\n");
}

#[test]
fn reduce_writes_final_graph() {
    let out = scratch("reduced.txt");
    let o = signull(
        &["reduce", "-", "-o", out.to_str().unwrap()],
        Some("n 3\ne 0 1 +\ne 1 2 -\n"),
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1);
    assert_eq!(std::fs::read_to_string(out).unwrap().trim(), "n 1");
}

#[test]
fn verify_small_universe_exits_zero() {
    let o = signull(
        &["verify", "--max-n", "4", "--props", "nullity_bound,cycle_closed_form"],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("total_violations 0"));
    let o = signull(
        &["verify", "--max-n", "4", "--props", "nullity_bound", "--key-value"],
        None,
    );
    assert!(stdout(&o).contains("total_violations=0"));
}

#[test]
fn exit_codes_distinguish_usage_and_input_errors() {
    let o = signull(&["nullity"], None);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&o.stderr).lines().count(), 1);

    let o = signull(&["nullity", "-"], Some("n 2\ne 0 5 +\n"));
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&o.stderr).lines().count(), 1);

    let o = signull(&["nullity", "/nonexistent/graph.txt"], None);
    assert_eq!(o.status.code(), Some(2));

    let o = signull(&["verify", "--max-n", "3", "--props", "no_such_property"], None);
    assert_eq!(o.status.code(), Some(2));
}
