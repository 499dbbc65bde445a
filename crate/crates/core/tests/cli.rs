use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_squarecol"))
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

#[test]
fn solves_and_verifies_a_fixture() {
    let out = run(&["@petersen-minus-edge", "--uniform", "8", "--solver", "8", "--verify"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let colored = text.lines().filter(|l| l.contains(" = ")).count();
    assert_eq!(colored, 10);
}

#[test]
fn rejects_the_petersen_graph() {
    let out = run(&["@petersen", "--uniform", "8", "--solver", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("PetersenInput"));
}

#[test]
fn oracle_reports_unsatisfiable_lists() {
    let out = run(&["@figure1b", "--uniform", "7", "--solver", "oracle"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no proper list coloring"));
}

#[test]
fn auto_prints_selection_and_respects_preconditions() {
    let out = run(&["@cycle(9)", "--uniform", "6", "--solver", "auto"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("# girth = 9, mad = 2"));
    assert!(text.contains("# solver = 6"));

    // too dense for 6 and 7, so auto must fall through to 8
    let out = run(&["@mcgee", "--uniform", "8", "--solver", "auto", "--verify"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("# solver = 8"));
}

#[test]
fn precondition_failures_print_the_failing_quantity() {
    let out = run(&["@petersen-minus-edge", "--uniform", "7", "--solver", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("mad = 14/5"));

    let out = run(&["@cycle(6)", "--uniform", "6", "--solver", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("girth = 6"));
}

#[test]
fn malformed_input_exits_one_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "3 2\na b c\n").unwrap();
    let out = run(&[path.to_str().unwrap(), "--uniform", "8"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 2"));
}

#[test]
fn file_graph_and_lists_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    std::fs::write(&graph, "3 2\na b\nb c\n").unwrap();
    let lists = dir.path().join("l.txt");
    std::fs::write(&lists, "a: 1 2\nb: 2 3\nc: 1 3\n").unwrap();
    let out = run(&[
        graph.to_str().unwrap(),
        "--lists",
        lists.to_str().unwrap(),
        "--solver",
        "oracle",
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("a = ") && text.contains("b = ") && text.contains("c = "));
}

#[test]
fn identical_seeds_give_identical_output() {
    let args = ["@heawood", "--random", "8", "42", "--solver", "8"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let c = run(&["@heawood", "--random", "8", "43", "--solver", "8"]);
    assert_eq!(c.status.code(), Some(0));
    assert_ne!(a.stdout, c.stdout, "different seeds should differ");
}

#[test]
fn trace_lists_removals_before_colorings() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.txt");
    let out = run(&[
        "@cycle(9)",
        "--uniform",
        "7",
        "--solver",
        "7",
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = std::fs::read_to_string(&trace).unwrap();
    let first_color = text.find("COLOR").expect("has COLOR lines");
    let last_remove = text.rfind("REMOVE").expect("has REMOVE lines");
    assert!(last_remove < first_color);
}
