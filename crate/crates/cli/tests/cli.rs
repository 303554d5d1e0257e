use std::path::PathBuf;
use std::process::{Command, Output};

use bggkit::bgg::{render_grids, SsReport};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn bgg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bgg"))
        .args(args)
        .current_dir(root())
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = bgg(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(
        PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(name),
    )
    .unwrap()
}

#[test]
fn kl_single_polynomials() {
    assert_eq!(stdout(&["kl", "--type", "A3", "e", "tsut"]), "1 + q\n");
    assert_eq!(stdout(&["kl", "--type", "A3", "t", "tsut"]), "1 + q\n");
    assert_eq!(stdout(&["kl", "--type", "A3", "s", "tsut"]), "1\n");
    assert_eq!(stdout(&["kl", "--type", "A1", "e", "s"]), "1\n");
}

#[test]
fn kl_listing_and_classification_match_golden() {
    assert_eq!(stdout(&["kl", "--type", "A3"]), golden("kl_a3.txt"));
    assert_eq!(
        stdout(&["classify", "--type", "A3"]),
        golden("classify_a3.txt")
    );
}

#[test]
fn spectral_sequence_grids_match_golden() {
    for w in ["tsut", "stuts"] {
        let obj = format!("simple:{w}");
        assert_eq!(
            stdout(&["ss", "--type", "A3", "--object", &obj]),
            golden(&format!("ss_a3_{w}.txt")),
            "{w}"
        );
    }
    assert_eq!(
        stdout(&["ss", "algebras/a2_block.json", "--object", "simple:sts"]),
        golden("ss_a2_sts.txt")
    );
}

#[test]
fn pages_option_truncates() {
    let out = stdout(&[
        "ss",
        "--type",
        "A3",
        "--object",
        "simple:tsut",
        "--pages",
        "2",
    ]);
    assert!(out.contains("E_2"));
    assert!(!out.contains("E_3"));
    assert!(out.contains("E_inf"));
}

#[test]
fn json_report_round_trips() {
    for args in [
        vec!["ss", "--type", "A3", "--object", "simple:tsut"],
        vec!["ss", "--type", "A3", "--object", "simple:stuts"],
        vec!["ss", "algebras/a2_block.json", "--object", "simple:sts"],
        vec![
            "ss",
            "--algebra",
            "algebras/a2_block.json",
            "--object",
            "standard:st",
        ],
    ] {
        let text = stdout(&args);
        let mut json_args = args.clone();
        json_args.extend(["--format", "json"]);
        let report: SsReport = serde_json::from_str(&stdout(&json_args)).unwrap();
        assert_eq!(render_grids(&report), text, "{args:?}");
    }
}

#[test]
fn resolutions() {
    assert_eq!(
        stdout(&["resolve", "algebras/a1_block.json", "--object", "simple:s"]),
        "deg 0: M_e → deg 1: M_s (shift m = -1)\n"
    );
    let a2 = "deg 0: M_e → deg 1: M_s ⊕ M_t → deg 2: M_st ⊕ M_ts → deg 3: M_sts (shift m = -3)\n";
    assert_eq!(
        stdout(&[
            "resolve",
            "algebras/a2_block.json",
            "--object",
            "simple:sts"
        ]),
        a2
    );
    assert_eq!(
        stdout(&["resolve", "--type", "A2", "--object", "simple:sts"]),
        a2
    );
    // Any reduced word names the same weight.
    assert_eq!(
        stdout(&[
            "resolve",
            "algebras/a2_block.json",
            "--object",
            "simple:tst"
        ]),
        a2
    );
    assert_eq!(
        stdout(&[
            "resolve",
            "algebras/a1_block.json",
            "--object",
            "simple:s",
            "--shift",
            "-1"
        ]),
        "deg 0: M_e → deg 1: M_s (shift m = 0)\n"
    );
}

#[test]
fn complex_files_round_trip() {
    let json = stdout(&[
        "resolve",
        "algebras/a2_block.json",
        "--object",
        "simple:st",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let dir = std::env::temp_dir().join(format!("bgg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("complex.json");
    std::fs::write(&file, v["complex"].to_string()).unwrap();
    let obj = format!("complex:@{}", file.display());
    assert_eq!(
        stdout(&["resolve", "algebras/a2_block.json", "--object", &obj]),
        "deg 0: M_e → deg 1: M_s ⊕ M_t → deg 2: M_st (shift m = 0)\n"
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn delorme_and_heart() {
    let out = stdout(&["delorme", "algebras/a1_block.json", "--object", "simple:s"]);
    assert!(out.starts_with("[L_s] = -[M_e] + [M_s]\n"));
    assert!(out.contains("identity holds"));
    let out = stdout(&["delorme", "--type", "A3", "--object", "simple:tsut"]);
    assert!(out.starts_with("[L_tsut] = 2[M_e] - [M_s] - 2[M_t]"));
    let out = stdout(&["heart", "algebras/a2_block.json", "--object", "standard:st"]);
    assert!(out.contains("in the heart after shift m = -2"));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| bgg(args).status.code();
    assert_eq!(code(&["verify", "algebras/a1_block.json"]), Some(0));
    assert_eq!(code(&["verify", "algebras/a2_block.json"]), Some(0));

    let out = bgg(&["verify", "algebras/a1_block_mutated.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("axiom (3) fails"));

    let out = bgg(&["resolve", "--type", "A3", "--object", "simple:tsut"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("not in any shift of the heart"));
    assert_eq!(
        code(&[
            "resolve",
            "algebras/a2_block.json",
            "--object",
            "costandard:e",
            "--shift",
            "1"
        ]),
        Some(0)
    );
    assert_eq!(
        code(&[
            "heart",
            "algebras/a2_block.json",
            "--object",
            "costandard:sts"
        ]),
        Some(1)
    );

    assert_eq!(code(&["verify", "algebras/missing.json"]), Some(2));
    assert_eq!(code(&["verify", "Cargo.toml"]), Some(2));
    assert_eq!(code(&["kl", "--type", "Q7"]), Some(2));
    assert_eq!(code(&["kl", "--type", "A2", "e", "xyz"]), Some(2));
    assert_eq!(
        code(&[
            "resolve",
            "algebras/a1_block.json",
            "--object",
            "simple:nope"
        ]),
        Some(2)
    );
    assert_eq!(
        code(&["resolve", "algebras/a1_block.json", "--object", "blob:s"]),
        Some(2)
    );
    assert_eq!(
        code(&["resolve", "--type", "A2", "--object", "standard:s"]),
        Some(2)
    );
    assert_eq!(code(&["resolve", "--object", "simple:s"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
}

#[test]
fn prime_fields() {
    let mut v: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(root().join("algebras/a2_block.json")).unwrap(),
    )
    .unwrap();
    let dir = std::env::temp_dir().join(format!("bgg-cli-fp-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (p, code) in [(2, 0), (65521, 0), (17, 2)] {
        v["field"] = serde_json::json!(p);
        let file = dir.join(format!("a2_{p}.json"));
        std::fs::write(&file, v.to_string()).unwrap();
        let path = file.to_str().unwrap();
        assert_eq!(bgg(&["verify", path]).status.code(), Some(code), "F_{p}");
        if code == 0 {
            assert_eq!(
                stdout(&["resolve", path, "--object", "simple:sts"]),
                "deg 0: M_e → deg 1: M_s ⊕ M_t → deg 2: M_st ⊕ M_ts → deg 3: M_sts (shift m = -3)\n"
            );
        }
    }
    std::fs::remove_dir_all(dir).unwrap();
}
