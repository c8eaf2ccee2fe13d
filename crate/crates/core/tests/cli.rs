use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_distinguish"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(args: &[&str]) -> String {
    let o = run(&[&["gen"], args].concat(), "");
    assert!(o.status.success());
    stdout(&o)
}

fn temp_file(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("distinguish-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn solve_petersen_from_stdin() {
    let o = run(&["solve", "-"], &gen(&["petersen"]));
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("c branch=special colors=4 certified=1\n"));
    assert_eq!(out.lines().filter(|l| l.starts_with("v ")).count(), 10);
}

#[test]
fn six_cycle_uses_its_own_construction() {
    let o = run(&["solve", "-"], &gen(&["cycle", "--n", "6"]));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("c branch=c6_extension colors=4 certified=1\n"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("6-cycle"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let graph = gen(&["random_girth5", "--n", "30", "--d", "5", "--seed", "7"]);
    assert_eq!(graph, gen(&["random_girth5", "--n", "30", "--d", "5", "--seed", "7"]));
    let a = run(&["solve", "-"], &graph);
    let b = run(&["solve", "-"], &graph);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["listcolor", "-", "--seed", "3"], &graph);
    let b = run(&["listcolor", "-", "--seed", "3"], &graph);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn solve_writes_to_file() {
    let out = temp_file("solved.txt", "");
    let o = run(&["solve", "-", "--out", out.to_str().unwrap()], &gen(&["dodecahedron"]));
    assert!(o.status.success());
    assert!(std::fs::read_to_string(out)
        .unwrap()
        .starts_with("c branch=geodesic colors=4 certified=1\n"));
}

#[test]
fn verify_reports_witness_or_improperness() {
    let graph = gen(&["path", "--n", "3"]);
    let symmetric = temp_file("symmetric.txt", "v 1 1\nv 2 2\nv 3 1\n");
    let o = run(&["verify", "-", symmetric.to_str().unwrap()], &graph);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "not distinguishing\n1 -> 3\n2 -> 2\n3 -> 1\n");

    let fine = temp_file("fine.txt", "v 1 1\nv 2 2\nv 3 3\n");
    assert_eq!(
        stdout(&run(&["verify", "-", fine.to_str().unwrap()], &graph)),
        "distinguishing\n"
    );

    let alternating: String = (1..=10).map(|v| format!("v {v} {}\n", 2 - v % 2)).collect();
    let improper = temp_file("improper.txt", &alternating);
    let o = run(&["verify", "-", improper.to_str().unwrap()], &gen(&["petersen"]));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exact_and_color2() {
    assert_eq!(stdout(&run(&["exact", "-"], &gen(&["cycle", "--n", "6"]))), "4\n");
    assert_eq!(stdout(&run(&["exact", "-"], &gen(&["star", "--n", "4"]))), "4\n");
    assert_eq!(run(&["exact", "-"], &gen(&["heawood"])).status.code(), Some(1));
    let o = run(&["color2", "-", "--root", "2"], &gen(&["path", "--n", "3"]));
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("c colors="));
}

#[test]
fn listcolor_reads_lists() {
    let graph = gen(&["path", "--n", "3"]);
    let lists = temp_file("lists.txt", "l 1 5 6 7 8\nl 2 5 6 7 8\nl 3 5 6 7 8\n");
    let o = run(&["listcolor", "-", "--lists", lists.to_str().unwrap()], &graph);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("v 1 8\nv 2 5\nv 3 6\n"));
    let short = temp_file("short.txt", "l 1 5 6 7\nl 2 5 6 7\nl 3 5 6 7\n");
    assert_eq!(
        run(&["listcolor", "-", "--lists", short.to_str().unwrap()], &graph)
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn bad_input_exits_one() {
    assert_eq!(
        run(&["solve", "-"], &gen(&["cycle", "--n", "4"])).status.code(),
        Some(1)
    );
    assert_eq!(run(&["solve", "-"], "p edge 2 1\ne 1 5\n").status.code(), Some(1));
    assert_eq!(run(&["solve", "/nonexistent/graph.col"], "").status.code(), Some(1));
    assert_eq!(run(&["nonsense"], "").status.code(), Some(1));
}

#[test]
fn corpus_runs_all_criteria() {
    let o = run(&["corpus", "--count", "300"], "");
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("[PASS]")).count(), 7);
}
