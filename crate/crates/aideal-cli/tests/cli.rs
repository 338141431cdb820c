//! End-to-end tests of the command-line surface: exit codes, output
//! formats, and the bundled data files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_aideal"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn tmpfile(name: &str, content: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

#[test]
fn abasis_prints_the_unknot_basis() {
    let out = run(&["abasis", "--knot", data("unknot.knot").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let basis = aideal::format::parse_ideal(&stdout(&out)).unwrap();
    let expected = std::fs::read_to_string(data("unknot.basis")).unwrap();
    assert_eq!(basis, aideal::format::parse_ideal(&expected).unwrap());
    let log = stderr(&out);
    assert!(log.contains("m^2 + (t^2 + t^-2)*m + 1"), "{log}");
    assert!(log.contains("l^2*m + t^-2*l^2 - m - t^2"), "{log}");
}

#[test]
fn gb_reproduces_the_basis_from_the_cleared_ideal() {
    let out = run(&["gb", "--ideal", data("unknot.ideal").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let gb = aideal::format::parse_ideal(&stdout(&out)).unwrap();
    let expected = std::fs::read_to_string(data("unknot.basis")).unwrap();
    assert_eq!(gb, aideal::format::parse_ideal(&expected).unwrap());
}

#[test]
fn gb_commutative_degeneration() {
    let out = run(&[
        "gb",
        "--ideal",
        data("unknot.ideal").to_str().unwrap(),
        "--t-minus-one",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let log = stderr(&out);
    assert!(log.contains("m^2 + 2*m + 1"), "{log}");
    assert!(log.contains("l^2*m + l^2 - m - 1"), "{log}");
}

#[test]
fn gb_rejects_empty_ideal() {
    let path = tmpfile("empty.ideal", "{\"polys\": []}\n");
    let out = run(&["gb", "--ideal", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no nonzero generators"));
}

#[test]
fn malformed_files_exit_2_with_positions() {
    let path = tmpfile(
        "broken.ideal",
        "{\"polys\": [{\"terms\": [{\"p\": -1, \"q\": 0, \"coeff\": [[0,1,1]]}]}]}\n",
    );
    let out = run(&["gb", "--ideal", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("polys[0].terms[0]"),
        "{}",
        stderr(&out)
    );

    let path = tmpfile("syntax.knot", "{ not json");
    let out = run(&["verify", "--knot", path.to_str().unwrap(), "--depth", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 1"), "{}", stderr(&out));

    let path = tmpfile(
        "badexpr.knot",
        "{\"name\": \"x\", \"bounding_curve\": [0, 1], \"generators\": [\"L(0 1)\"]}\n",
    );
    let out = run(&["abasis", "--knot", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("1:5"), "{}", stderr(&out));
}

#[test]
fn relators_print_four_zero_lines() {
    let out = run(&["relators"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0\n0\n0\n0\n");
}

#[test]
fn specialize_and_apoly() {
    let out = run(&[
        "specialize",
        "--basis",
        data("unknot.basis").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("l^2 - 2*l + 1"), "{text}");
    assert!(text.contains("-l*m^2 + l + m^2 - 1"), "{text}");

    let out = run(&["apoly", "--basis", data("unknot.basis").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("B = l - 1"), "{text}");
    assert!(text.contains("A = 1"), "{text}");
    assert!(stderr(&out).contains("principal closure, not radical"));
}

#[test]
fn verify_passes_with_builtin_and_file_kappa() {
    for knot in ["unknot.knot", "unknot-file.knot"] {
        let out = run(&[
            "verify",
            "--knot",
            data(knot).to_str().unwrap(),
            "--depth",
            "40",
        ]);
        assert_eq!(out.status.code(), Some(0), "{knot}: {}", stderr(&out));
        let text = stdout(&out);
        assert_eq!(text.matches("PASS").count(), 2, "{text}");
    }
}

#[test]
fn verify_fails_on_corrupted_kappa() {
    let good = std::fs::read_to_string(data("unknot.kappa")).unwrap();
    let mut kf = aideal::format::parse_kappa(&good).unwrap();
    kf.kappa[5] = &kf.kappa[5] + &aideal::TRat::one();
    let kappa_path = tmpfile("corrupt.kappa", &aideal::format::write_kappa(&kf));
    let knot = format!(
        "{{\"name\": \"unknot\", \"bounding_curve\": [0, 1], \"generators\": [\"L(0,1) + t^2 + t^-2\", \"L(1,1) + t^-3 * L(1,0)\"], \"kappa\": \"{}\"}}\n",
        kappa_path.file_name().unwrap().to_str().unwrap()
    );
    let knot_path = tmpfile("corrupt.knot", &knot);
    let out = run(&[
        "verify",
        "--knot",
        knot_path.to_str().unwrap(),
        "--depth",
        "30",
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("FAIL"), "{text}");
    assert!(text.contains("color 4"), "{text}");
}

#[test]
fn annihilate_finds_candidates() {
    let out = run(&[
        "annihilate",
        "--kappa",
        "builtin:unknot",
        "--pmax",
        "1",
        "--qmax",
        "1",
        "--depth",
        "20",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("L(1,0)"), "{text}");
    assert!(text.contains("L(1,1)"), "{text}");
    assert!(
        stderr(&out).contains("verified to depth 20"),
        "{}",
        stderr(&out)
    );

    // the same search through the kappa file surface
    let out = run(&[
        "annihilate",
        "--kappa",
        data("unknot.kappa").to_str().unwrap(),
        "--pmax",
        "1",
        "--qmax",
        "1",
        "--depth",
        "20",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out), text);
}

#[test]
fn unknown_subcommand_exits_2() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
