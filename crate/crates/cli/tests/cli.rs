use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use colorspan::io::{parse_graph, parse_points, parse_provenance, ResultRecord};
use tempfile::TempDir;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colorspan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn record(o: &Output) -> ResultRecord {
    assert_eq!(code(o), 0, "{}", stderr(o));
    ResultRecord::parse(&stdout(o)).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_points_is_deterministic_and_covers_colors() {
    let a = run(&["gen", "points", "--n", "8", "--t", "4", "--seed", "1"]);
    let b = run(&["gen", "points", "--n", "8", "--t", "4", "--seed", "1"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let set = parse_points(&stdout(&a)).unwrap();
    assert_eq!(set.len(), 8);
    assert!(set.color_classes().iter().all(|c| !c.is_empty()));
    let clustered = run(&[
        "gen",
        "points",
        "--n",
        "8",
        "--k",
        "2",
        "--distribution",
        "clustered",
    ]);
    assert_eq!(parse_points(&stdout(&clustered)).unwrap().num_colors(), 4);
}

#[test]
fn gen_graph_parses_back() {
    let o = run(&["gen", "graph", "--n", "10", "--k", "2", "--seed", "7"]);
    assert_eq!(code(&o), 0);
    let g = parse_graph(&stdout(&o)).unwrap().to_colored().unwrap();
    assert_eq!(g.num_vertices(), 10);
    assert_eq!(g.num_colors(), 4);
    assert!(g.color_classes().iter().all(|c| !c.is_empty()));
    let uncolored = run(&["gen", "graph", "--n", "6", "--t", "0", "--p", "0.3"]);
    assert!(parse_graph(&stdout(&uncolored)).unwrap().colors.is_none());
}

#[test]
fn gen_rejects_bad_parameters() {
    assert_eq!(code(&run(&["gen", "points", "--n", "3", "--t", "4"])), 3);
    assert_eq!(
        code(&run(&[
            "gen",
            "points",
            "--n",
            "9",
            "--t",
            "3",
            "--matching"
        ])),
        3
    );
    assert_eq!(code(&run(&["gen", "points", "--n", "9"])), 3);
    assert_eq!(
        code(&run(&[
            "gen",
            "points",
            "--n",
            "9",
            "--t",
            "2",
            "--distribution",
            "gaussian"
        ])),
        3
    );
}

#[test]
fn solve_reproduces_fixture_values() {
    let f1 = fixture("figure1.points");
    let f2 = fixture("figure2.points");
    let r = record(&run(&["solve", path_str(&f1), "--objective", "minsum"]));
    assert!((r.value - 1.8).abs() < 1e-9);
    let r = record(&run(&["solve", path_str(&f1), "--objective", "maxmin"]));
    assert!((r.value - 2f64.sqrt()).abs() < 1e-9);
    let r = record(&run(&["solve", path_str(&f2), "--objective", "minmax"]));
    assert!((r.value - 1.6).abs() < 1e-9);
    assert!((r.total_weight - 3.2).abs() < 1e-9);
    let r = record(&run(&["oracle", path_str(&f1), "--objective", "maxsum"]));
    assert!((r.value - (1.0 + 5f64.sqrt())).abs() < 1e-9);
}

#[test]
fn solve_matches_library() {
    let dir = TempDir::new().unwrap();
    let text = stdout(&run(&[
        "gen", "points", "--n", "30", "--k", "3", "--seed", "5",
    ]));
    let path = write(&dir, "p.points", &text);
    let set = parse_points(&text).unwrap();
    for obj in colorspan::solvers::Objective::ALL.into_iter().take(3) {
        let r = record(&run(&["solve", &path, "--objective", obj.name()]));
        let lib = colorspan::solvers::solve(&set, obj).unwrap();
        assert_eq!(r.value, lib.value(obj));
        assert_eq!(r.pairs, lib.pairs);
    }
}

#[test]
fn solve_output_is_byte_identical_without_timing() {
    let f1 = fixture("figure1.points");
    let a = run(&["solve", path_str(&f1), "--json"]);
    let b = run(&["solve", path_str(&f1), "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let timed = stdout(&run(&["solve", path_str(&f1), "--timing"]));
    assert!(timed.contains("time_ms="));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let odd = write(&dir, "odd.points", "3 3\n0 0 0\n1 0 1\n2 0 2\n");
    assert_eq!(code(&run(&["solve", &odd])), 3);
    let bad = write(&dir, "bad.points", "2 2\n0 0 0\n1 zz 1\n");
    let o = run(&["solve", &bad]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    // Four colors, but the only cross-color edges are (0,1) and (1,2).
    let g = write(&dir, "g.graph", "4 2 4\n0\n1\n2\n3\n0 1\n1 2\n");
    assert_eq!(code(&run(&["solve", &g])), 2);
    assert_eq!(code(&run(&["oracle", &g])), 2);
    assert_eq!(code(&run(&["solve", &g, "--objective", "maxmin"])), 3);
    assert_eq!(
        code(&run(&[
            "solve",
            path_str(&fixture("figure1.points")),
            "--objective",
            "median"
        ])),
        3
    );
    assert_eq!(code(&run(&["nonsense"])), 3);
}

#[test]
fn check_sweep_passes() {
    for obj in ["minsum", "maxmin", "minmax"] {
        let o = run(&[
            "check",
            "--sweep",
            "100",
            "--seed",
            "11",
            "--objective",
            obj,
        ]);
        assert_eq!(code(&o), 0, "{}", stdout(&o));
        let out = stdout(&o);
        assert_eq!(out.lines().filter(|l| l.contains(": pass")).count(), 100);
        assert!(out.ends_with(&format!("{obj}: 100/100 passed\n")));
    }
}

#[test]
fn check_budget_and_mismatch_codes() {
    let dir = TempDir::new().unwrap();
    let big = write(
        &dir,
        "big.points",
        &stdout(&run(&[
            "gen", "points", "--n", "50", "--k", "10", "--seed", "2",
        ])),
    );
    assert_eq!(code(&run(&["check", &big])), 4);
    let f1 = fixture("figure1.points");
    assert_eq!(code(&run(&["check", path_str(&f1)])), 0);
    assert_eq!(
        code(&run(&["check", path_str(&f1), "--inject-mismatch"])),
        5
    );
    assert_eq!(
        code(&run(&["check", "--sweep", "3", "--inject-mismatch"])),
        5
    );
    let g = write(
        &dir,
        "g.graph",
        &stdout(&run(&[
            "gen",
            "graph",
            "--n",
            "10",
            "--k",
            "2",
            "--seed",
            "3",
            "--weighted",
        ])),
    );
    assert_eq!(code(&run(&["check", &g])), 0);
}

#[test]
fn reduce_single_edge() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "edge.graph", "2 1 0\n0 1\n");
    let out = dir.path().join("out.graph");
    let o = run(&[
        "reduce",
        &input,
        "--step",
        "is2mcis",
        "--k",
        "2",
        "-o",
        path_str(&out),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let g = parse_graph(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!((g.num_vertices, g.edges.len(), g.num_colors), (4, 6, 2));
    let prov =
        parse_provenance(&fs::read_to_string(dir.path().join("out.graph.prov")).unwrap()).unwrap();
    assert_eq!(prov.len(), 4);
}

#[test]
fn reduce_literal_flag_and_provenance_path() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "iso.graph", "2 0 0\n");
    let side = dir.path().join("side.txt");
    let o = run(&[
        "reduce",
        &input,
        "--step",
        "is2mcis",
        "--k",
        "2",
        "--literal",
        "--provenance",
        path_str(&side),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "4 0 2\n0\n0\n1\n1\n");
    assert_eq!(fs::read_to_string(&side).unwrap().lines().count(), 4);
    assert_eq!(code(&run(&["reduce", &input, "--step", "is2mcis"])), 3);
    assert_eq!(code(&run(&["reduce", &input, "--step", "mcis2mcim"])), 3);
}

#[test]
fn chained_reduce_and_certify_on_c5() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5.graph", "5 5 0\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let mcis = dir.path().join("mcis.graph");
    let mcim = dir.path().join("mcim.graph");
    assert_eq!(
        code(&run(&[
            "reduce",
            &c5,
            "--step",
            "is2mcis",
            "--k",
            "2",
            "-o",
            path_str(&mcis)
        ])),
        0
    );
    assert_eq!(
        code(&run(&[
            "reduce",
            path_str(&mcis),
            "--step",
            "mcis2mcim",
            "-o",
            path_str(&mcim)
        ])),
        0
    );
    let out = parse_graph(&fs::read_to_string(&mcim).unwrap()).unwrap();
    let inner = parse_graph(&fs::read_to_string(&mcis).unwrap()).unwrap();
    assert_eq!(out.num_vertices, inner.num_vertices + 2);
    assert_eq!(out.edges.len(), inner.edges.len() + inner.num_vertices);
    let prov =
        parse_provenance(&fs::read_to_string(dir.path().join("mcim.graph.prov")).unwrap()).unwrap();
    assert_eq!(prov.len(), out.num_vertices);

    let o = run(&["certify", &c5, "--k", "2"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    for key in [
        "independent_set=true",
        "colorful_independent_set=true",
        "colorful_independent_matching=true",
        "equivalent=true",
    ] {
        assert!(text.contains(key), "{text}");
    }
    let k4 = write(&dir, "k4.graph", "4 6 0\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let text = stdout(&run(&["certify", &k4, "--k", "2"]));
    assert!(text.contains("independent_set=false") && text.contains("equivalent=true"));
}

#[test]
fn render_figure1() {
    let dir = TempDir::new().unwrap();
    let f1 = fixture("figure1.points");
    let result = dir.path().join("r.txt");
    let svg_a = dir.path().join("a.svg");
    let o = run(&[
        "solve",
        path_str(&f1),
        "--objective",
        "maxmin",
        "-o",
        path_str(&result),
        "--render-out",
        path_str(&svg_a),
    ]);
    assert_eq!(code(&o), 0);
    let svg = stdout(&run(&["render", path_str(&f1), path_str(&result)]));
    assert_eq!(svg.matches("<line").count(), 2);
    assert_eq!(svg.matches("<circle").count(), 6);
    assert_eq!(svg, fs::read_to_string(&svg_a).unwrap());
    assert_eq!(
        svg,
        stdout(&run(&["render", path_str(&f1), path_str(&result)]))
    );

    let empty = write(
        &dir,
        "empty.txt",
        "objective=maxmin\nvalue=0\ntotal_weight=0\nmin_edge_weight=0\nmax_edge_weight=0\npairs=\n",
    );
    assert_eq!(code(&run(&["render", path_str(&f1), &empty])), 3);
    let other = write(&dir, "other.points", "2 2\n0 0 0\n1 0 1\n");
    assert_eq!(code(&run(&["render", &other, path_str(&result)])), 3);
}
