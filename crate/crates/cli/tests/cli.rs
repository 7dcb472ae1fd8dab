//! End-to-end runs of the `hypvol` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use hypvol_core::certify::{Certificate, Status};

fn hypvol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypvol"))
        .args(args)
        .env_remove("HYPVOL_CONFIG")
        .output()
        .expect("spawn hypvol")
}

fn code(args: &[&str]) -> i32 {
    hypvol(args).status.code().expect("exit code")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hypvol-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], i32)] = &[
        (&["verify", "table", "--id", "1"], 0),
        (&["verify", "table", "--id", "2", "--format", "csv"], 0),
        (&["verify", "all"], 0),
        (
            &[
                "certify", "window", "--target", "6.89", "--lo", "1.215", "--hi", "1.439",
            ],
            0,
        ),
        (
            &[
                "certify", "window", "--target", "7.2", "--lo", "1.215", "--hi", "1.439",
            ],
            1,
        ),
        (
            &[
                "certify",
                "window",
                "--target",
                "6.89",
                "--lo",
                "1.215",
                "--hi",
                "1.439",
                "--max-depth",
                "1",
            ],
            2,
        ),
        (&["certify", "lemma", "--id", "no111"], 0),
        (
            &["certify", "lemma", "--id", "borbounds", "--format", "md"],
            0,
        ),
        (&["certify", "tail"], 0),
        (&["certify", "lemma", "--id", "unknown"], 64),
        (&["verify", "table", "--id", "3"], 64),
        (&["verify", "table"], 64),
        (&["--max-depth", "0", "certify", "tail"], 64),
        (&["--max-depth", "65", "certify", "tail"], 64),
        (&["--format", "xml", "verify", "all"], 64),
        (&["certify", "tail", "--no-such-flag"], 64),
        (&["certify", "window", "--lo", "1.0", "--hi", "1.2"], 64),
        (&["certify", "window", "--target", "six"], 64),
        (
            &["certify", "replay", "--cert", "/nonexistent/cert.json"],
            74,
        ),
        (
            &["certify", "tail", "--out", "/nonexistent/dir/out.json"],
            74,
        ),
        (&[], 64),
    ];
    for (args, want) in cases {
        assert_eq!(code(args), *want, "hypvol {}", args.join(" "));
    }
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn every_lemma_id_certifies() {
    for id in [
        "borbounds",
        "monotoneE",
        "table1",
        "table2",
        "l2twicel1",
        "no111",
        "uniquel1_threshold",
        "noboundarycross",
        "tail_monotone",
        "theorem_6_89_window",
    ] {
        let out = hypvol(&["certify", "lemma", "--id", id]);
        assert_eq!(out.status.code(), Some(0), "{id}");
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["lemma_id"], id);
        assert_eq!(v["verdict"], "certified");
    }
}

#[test]
fn output_is_independent_of_thread_count() {
    let runs: &[&[&str]] = &[
        &["verify", "table", "--id", "1", "--format", "md"],
        &["verify", "table", "--id", "2", "--format", "json"],
        &["certify", "window", "--format", "json"],
        &["certify", "window", "--format", "csv", "--target", "7.2"],
        &["certify", "tail", "--format", "md"],
        &["verify", "all", "--format", "json"],
    ];
    for args in runs {
        let base = hypvol(args).stdout;
        assert!(!base.is_empty());
        for t in ["1", "3", "8"] {
            let mut a = args.to_vec();
            a.extend(["--threads", t]);
            assert_eq!(
                hypvol(&a).stdout,
                base,
                "{} with {t} threads",
                args.join(" ")
            );
        }
    }
}

#[test]
fn table_csv_shape() {
    let out = hypvol(&["verify", "table", "--id", "1", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut r = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(r.headers().unwrap().len(), 5);
    let rows: Vec<_> = r.records().map(|x| x.unwrap()).collect();
    assert_eq!(rows.len(), 18);
    assert!(rows.iter().all(|x| x.len() == 5));
    assert_eq!(&rows[0][0], "[1.215,1.220]");
    assert_eq!(&rows[0][4], "6.899");
}

#[test]
fn certificate_json_round_trips_and_replays() {
    let path = scratch("window.json");
    let p = path.to_str().unwrap();
    assert_eq!(code(&["certify", "window", "--out", p]), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let cert = Certificate::from_json(&text).unwrap();
    assert_eq!(cert.status, Status::Certified);
    assert_eq!(cert.to_json().trim_end(), text.trim_end());

    let out = hypvol(&["certify", "replay", "--cert", p]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["replayed"], "certified");

    let mut bad = cert.clone();
    bad.pieces[0].bound_lo = "9".into();
    std::fs::write(&path, bad.to_json()).unwrap();
    assert_eq!(code(&["certify", "replay", "--cert", p]), 64);
    std::fs::write(&path, "{not json").unwrap();
    assert_eq!(code(&["certify", "replay", "--cert", p]), 64);
}

#[test]
fn config_file_from_environment() {
    let path = scratch("defaults.toml");
    std::fs::write(&path, "format = \"csv\"\nmax_depth = 1\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_hypvol"))
        .args(["certify", "window"])
        .env("HYPVOL_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("lo,hi,bound_lo,bound_hi,outcome"));

    // flags win over the file
    let out = Command::new(env!("CARGO_BIN_EXE_hypvol"))
        .args(["certify", "window", "--max-depth", "40", "--format", "json"])
        .env("HYPVOL_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(Certificate::from_json(std::str::from_utf8(&out.stdout).unwrap()).is_ok());

    std::fs::write(&path, "unknown_key = 1\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_hypvol"))
        .args(["certify", "tail"])
        .env("HYPVOL_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn no111_prints_its_witness() {
    let out = hypvol(&["certify", "lemma", "--id", "no111", "--format", "md"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("| cosh_l1_lower | [1.2559"), "{text}");
    assert!(text.contains("gt:1.255"));
}
