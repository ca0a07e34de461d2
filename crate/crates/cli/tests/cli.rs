use std::io::Write;
use std::process::{Command, Output, Stdio};

use aalpha_core::charpoly::charpoly_direct;
use aalpha_core::ops::{complement, line_graph};
use aalpha_core::poly::parse_bipoly;
use aalpha_core::{family_generate, Graph};

fn aalpha(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aalpha")).args(args).output().expect("run aalpha")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_aalpha"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("run aalpha");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fam(s: &str) -> Graph {
    family_generate(&s.parse().unwrap()).unwrap()
}

#[test]
fn charpoly_output_parses_back() {
    let o = aalpha(&["charpoly", "--graph", "complete:3"]);
    assert_eq!(o.status.code(), Some(0));
    let p = parse_bipoly(stdout(&o).trim()).unwrap();
    assert_eq!(p, charpoly_direct(&fam("complete:3")));
    // (λ − 2)(λ − 3α + 1)²: the λ² coefficient is −trace = −6α
    assert_eq!(stdout(&o).trim(), "l^3 - 6a*l^2 + (-3 + 6a + 9a^2)*l + (-2 + 12a - 18a^2)");
}

#[test]
fn formula_method_matches_direct() {
    let direct = aalpha(&["charpoly", "--graph", "complete:4", "--op", "total"]);
    let formula = aalpha(&["charpoly", "--graph", "complete:4", "--method", "formula:total-a"]);
    assert_eq!(formula.status.code(), Some(0));
    assert_eq!(stdout(&direct), stdout(&formula));
}

#[test]
fn spectrum_of_triangle_at_one_half() {
    let o = aalpha(&["spectrum", "--graph", "complete:3", "--alpha", "1/2"]);
    assert_eq!(stdout(&o).trim(), "2 0.5 0.5");
    let o = aalpha(&["spectrum", "--graph", "complete:3", "--alpha", "0.5"]);
    assert_eq!(stdout(&o).trim(), "2 0.5 0.5");
}

#[test]
fn verify_exit_codes_follow_the_status() {
    let o = aalpha(&["verify", "--theorem", "line-regular-aalpha", "--graph", "complete:5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("status=pass"));

    let o = aalpha(&["verify", "--theorem", "total-aalpha", "--graph", "path:4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("status=hypothesis-not-met"));

    let o = aalpha(&["verify", "--theorem", "pendant-many", "--graph", "cycle:5", "--targets", "0,1,3", "--numeric"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("mode=numeric"));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(aalpha(&["charpoly"]).status.code(), Some(64));
    assert_eq!(aalpha(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(aalpha(&["charpoly", "--graph", "nonsense:3"]).status.code(), Some(64));
    assert_eq!(aalpha(&["verify", "--theorem", "nope", "--graph", "complete:3"]).status.code(), Some(64));
    assert_eq!(aalpha(&["op", "--graph", "complete:3", "--op", "union"]).status.code(), Some(64));
    assert_eq!(aalpha(&["--help"]).status.code(), Some(0));
}

#[test]
fn malformed_edge_list_exits_65_with_line_number() {
    let o = with_stdin(&["graph", "--file", "-"], "3 2\n0 1\n1 x\n");
    assert_eq!(o.status.code(), Some(65));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn unreadable_file_exits_66() {
    let o = aalpha(&["graph", "--file", "/nonexistent/graph.txt"]);
    assert_eq!(o.status.code(), Some(66));
}

#[test]
fn edge_list_round_trips_through_stdin() {
    let g = fam("petersen");
    let o = with_stdin(&["graph", "--file", "-"], &g.to_edge_list());
    assert_eq!(Graph::parse_edge_list(&stdout(&o)).unwrap(), g);
}

#[test]
fn op_pipeline_applies_left_to_right() {
    let o = aalpha(&["op", "--graph", "cycle:5", "--op", "line", "--op", "complement"]);
    let expected = complement(&line_graph(&fam("cycle:5")).unwrap());
    assert_eq!(Graph::parse_edge_list(&stdout(&o)).unwrap(), expected);

    let o = aalpha(&["op", "--graph", "path:3", "--op", "coalesce:0,1", "--with", "complete:3"]);
    let g = Graph::parse_edge_list(&stdout(&o)).unwrap();
    assert_eq!((g.n(), g.m()), (5, 5));
}

#[test]
fn output_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("aalpha-cli-test-{}.txt", std::process::id()));
    let o = aalpha(&["charpoly", "--graph", "path:2", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(parse_bipoly(text.trim()).unwrap(), charpoly_direct(&fam("path:2")));
}

#[test]
fn small_suite_passes() {
    let o = aalpha(&["suite", "--max-n", "3", "--numeric"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.lines().last().unwrap().starts_with("total"));
    assert!(out.contains("coalescence"));
}
