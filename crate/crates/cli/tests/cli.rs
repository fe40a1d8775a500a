use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperfuzz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_reports_crisp_properties() {
    let o = run(&[
        "check",
        path(&fixture("e1.txt")),
        "--subset",
        path(&fixture("subset_b.txt")),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("PROPERTY right_ideal = true\n"));
    assert!(out.contains("PROPERTY left_ideal = false\n"));
    assert!(out.contains("PROPERTY filter = false\n"));
}

#[test]
fn check_reports_fuzzy_properties() {
    let o = run(&[
        "check",
        path(&fixture("e2_ab.txt")),
        "--fuzzy",
        path(&fixture("fuzzy_a1_b0.txt")),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PROPERTY fuzzy_left_ideal = true\n"));
}

#[test]
fn check_accepts_subset_and_fuzzy_together() {
    let o = run(&[
        "check",
        path(&fixture("e1.txt")),
        "--subset",
        path(&fixture("subset_b.txt")),
        "--fuzzy",
        path(&fixture("fuzzy_a1_b0.txt")),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("PROPERTY filter_c3 = "));
    assert!(out.contains("PROPERTY complement_fuzzy_prime_ideal = "));
}

#[test]
fn carrier_mismatch_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.txt");
    fs::write(&f, "fuzzy: a=1\n").unwrap();
    let o = run(&["check", path(&fixture("e1.txt")), "--fuzzy", path(&f)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn missing_file_is_a_usage_error() {
    let o = run(&["check", "/nonexistent/structure.txt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_all_at_order_two() {
    let o = run(&["verify", "--theorem", "all", "--order", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.contains(" HOLDS ")).count(), 6);
    assert!(out.contains("THEOREM prop17 HOLDS checked=11664\n"));
}

#[test]
fn verify_sampled_order_three() {
    let args = [
        "verify",
        "--theorem",
        "prop6",
        "--order",
        "3",
        "--mode",
        "sample",
        "--seed",
        "1",
        "--budget",
        "2000",
    ];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    let b = run(&[&["--jobs", "1"][..], &args[..]].concat());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_rejects_bad_combinations() {
    for args in [
        &["verify", "--theorem", "prop99", "--order", "2"][..],
        &["verify", "--theorem", "prop6", "--order", "3"],
        &["verify", "--theorem", "prop6", "--order", "5"],
        &[
            "verify",
            "--theorem",
            "prop6",
            "--order",
            "4",
            "--relation",
            "0",
        ],
        &[
            "verify",
            "--theorem",
            "prop6",
            "--order",
            "2",
            "--range",
            "0..3",
        ],
        &[
            "verify",
            "--theorem",
            "prop6",
            "--order",
            "3",
            "--relation",
            "0",
            "--range",
            "x",
        ],
        &[
            "verify",
            "--theorem",
            "prop6",
            "--order",
            "2",
            "--relation",
            "99",
        ],
        &[
            "--jobs",
            "0",
            "verify",
            "--theorem",
            "prop6",
            "--order",
            "1",
        ],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_fixed_relation_range() {
    let o = run(&[
        "verify",
        "--theorem",
        "prop6",
        "--order",
        "3",
        "--relation",
        "273",
        "--range",
        "0..500",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("THEOREM prop6 HOLDS checked=3500\n"));
}

#[test]
fn enumerate_counts() {
    for (kind, order, expected) in [
        ("structures", "2", "COUNT structures = 81\n"),
        ("relations", "2", "COUNT relations = 16\n"),
        ("subsets", "3", "COUNT subsets = 7\n"),
        ("filters", "1", "COUNT filters = 2\n"),
        ("ideals", "2", "COUNT ideals = 1344\n"),
    ] {
        let o = run(&["enumerate", "--kind", kind, "--order", order]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains(expected), "{kind}");
    }
}

#[test]
fn enumerate_lists_fuzzy_grid() {
    let o = run(&[
        "enumerate",
        "--kind",
        "fuzzy",
        "--order",
        "2",
        "--grid",
        "1",
        "--list",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "COUNT fuzzy = 4\nfuzzy: a=0 b=0\nfuzzy: a=0 b=1\nfuzzy: a=1 b=0\nfuzzy: a=1 b=1\n"
    );
}

#[test]
fn enumerate_rejects_large_orders() {
    assert_eq!(
        run(&["enumerate", "--kind", "structures", "--order", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["enumerate", "--kind", "filters", "--order", "3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn search_exit_codes() {
    let o = run(&["search", "--relax", "drop-filter-c3", "--max-order", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("WITNESS drop-filter-c3 clause=\"filter.c3\""));
    let o = run(&["search", "--relax", "drop-filter-c1", "--max-order", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("NONE_FOUND"));
    let o = run(&["search", "--relax", "unknown-name", "--max-order", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn search_witness_is_checkable() {
    let o = run(&[
        "search",
        "--relax",
        "drop-ideal-downclosed",
        "--max-order",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let block = out.split_once('\n').unwrap().1;
    let w = hyperfuzz_core::textio::parse_witness(block).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let (s, r) = (dir.path().join("s.txt"), dir.path().join("a.txt"));
    fs::write(
        &s,
        hyperfuzz_core::textio::render_structure(&w.structure, &w.relation),
    )
    .unwrap();
    let subset = w.subset.expect("crisp witness");
    fs::write(
        &r,
        hyperfuzz_core::textio::render_subset(w.structure.carrier(), subset),
    )
    .unwrap();
    let o = run(&["check", path(&s), "--subset", path(&r)]);
    assert!(stdout(&o).contains("PROPERTY left_ideal = false\n"));
}
