//! End-to-end tests of the binary: document IO, exit codes, round
//! trips.

use std::fs;
use std::process::Command;

use gortrim_cli::document::MatrixDocument;
use gortrim_cli::report::ReportDoc;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gortrim"))
}

fn example_doc_file(dir: &tempfile::TempDir) -> std::path::PathBuf {
    let doc = MatrixDocument::from_presenter(&gortrim::example::presenter());
    let path = dir.path().join("example.json");
    fs::write(&path, doc.to_json()).unwrap();
    path
}

#[test]
fn pfaffians_prints_the_generator_list() {
    let dir = tempfile::tempdir().unwrap();
    let input = example_doc_file(&dir);
    let out = bin().args(["pfaffians", "--input"]).arg(&input).output().unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    for expected in gortrim::example::EXPECTED_GENERATORS {
        assert!(stdout.contains(expected), "missing {} in:\n{}", expected, stdout);
    }
}

#[test]
fn malformed_document_exits_one_with_cell_position() {
    let dir = tempfile::tempdir().unwrap();
    let doc = MatrixDocument::from_presenter(&gortrim::example::presenter());
    let mut bad = doc.clone();
    bad.matrix[2][1] = "z + $".to_string();
    bad.matrix[1][2] = "z + $".to_string();
    let path = dir.path().join("bad.json");
    fs::write(&path, bad.to_json()).unwrap();
    let out = bin().args(["pfaffians", "--input"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("cell (2,3)"), "stderr: {}", stderr);
    assert!(stderr.contains("position"), "stderr: {}", stderr);
}

#[test]
fn classify_text_and_json_agree() {
    let dir = tempfile::tempdir().unwrap();
    let input = example_doc_file(&dir);

    let text_out = bin()
        .args(["classify", "--trim", "1,2,3", "--input"])
        .arg(&input)
        .output()
        .unwrap();
    assert!(text_out.status.success());
    let text = String::from_utf8(text_out.stdout).unwrap();
    assert!(text.contains("class: H(1,1)"), "{}", text);
    assert!(text.contains("format: (1,7,10,4)"), "{}", text);

    let json_out = bin()
        .args(["classify", "--trim", "1,2,3", "--json", "--input"])
        .arg(&input)
        .output()
        .unwrap();
    assert!(json_out.status.success());
    let doc = ReportDoc::from_json(&String::from_utf8(json_out.stdout).unwrap()).unwrap();
    assert_eq!(doc.class, "H(1,1)");
    assert_eq!(doc.mu, 7);
    // machine-readable output re-parses to equal values
    assert_eq!(ReportDoc::from_json(&doc.to_json()).unwrap(), doc);
}

#[test]
fn oversized_presenter_is_rejected_for_classification() {
    let dir = tempfile::tempdir().unwrap();
    // a valid 7x7 skew document: classification requires size 5
    let mut matrix = vec![vec!["0".to_string(); 7]; 7];
    for i in 0..7 {
        for j in i + 1..7 {
            matrix[i][j] = "x".to_string();
            matrix[j][i] = "-x".to_string();
        }
    }
    let doc = MatrixDocument {
        field: "Q".to_string(),
        variables: vec!["x".into(), "y".into(), "z".into()],
        matrix,
        witness: None,
    };
    let path = dir.path().join("seven.json");
    fs::write(&path, doc.to_json()).unwrap();

    // pfaffians accepts any odd size
    let pf = bin().args(["pfaffians", "--input"]).arg(&path).output().unwrap();
    assert!(pf.status.success());

    let out = bin()
        .args(["classify", "--trim", "1", "--input"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("requires a 5x5"), "stderr: {}", stderr);
}

#[test]
fn report_covers_all_thirty_one_trim_sets() {
    let dir = tempfile::tempdir().unwrap();
    let input = example_doc_file(&dir);
    let out = bin()
        .args(["report", "--json", "--input"])
        .arg(&input)
        .output()
        .unwrap();
    assert!(out.status.success());
    let docs: Vec<ReportDoc> =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(docs.len(), 31);
    // every t=4,5 row is class G with the pattern-extended flag
    for doc in docs.iter().filter(|d| d.t >= 4) {
        assert!(doc.class.starts_with('G'), "{:?}", doc.class);
        assert!(doc.format_pattern_extended);
    }
}

#[test]
fn verify_commands_pass_and_exit_zero() {
    let ex = bin().args(["verify-example"]).output().unwrap();
    assert!(ex.status.success());
    let stdout = String::from_utf8(ex.stdout).unwrap();
    assert!(stdout.contains("PASS"));
    assert!(!stdout.contains("FAIL"));
}

#[test]
fn search_is_reproducible_and_emits_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let witness_dir = dir.path().join("w");
    let args = [
        "search",
        "--field",
        "F2",
        "--degree",
        "2",
        "--trials",
        "25",
        "--seed",
        "9",
        "--include-example",
    ];
    let a = bin().args(args).output().unwrap();
    let b = bin()
        .args(args)
        .args(["--emit-witnesses"])
        .arg(&witness_dir)
        .output()
        .unwrap();
    assert!(a.status.success() && b.status.success());
    // byte-identical stdout under the same seed
    assert_eq!(a.stdout, b.stdout);

    // each witness re-parses as a valid input document
    let entries: Vec<_> = fs::read_dir(&witness_dir).unwrap().collect();
    assert!(!entries.is_empty());
    for entry in entries {
        let text = fs::read_to_string(entry.unwrap().path()).unwrap();
        let doc = MatrixDocument::from_json(&text).unwrap();
        doc.to_presenter().unwrap();
        assert!(doc.witness.is_some());
    }
}

#[test]
fn search_rejects_bad_configs() {
    let out = bin()
        .args(["search", "--field", "F4", "--trials", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = bin()
        .args(["search", "--field", "F2", "--degree", "0", "--trials", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
