use symdiff::cli::{run, EXIT_INPUT, EXIT_OK};
use symdiff::report::ReportDocument;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("symdiff").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn verify_table_type_i() {
    let (code, out, err) = invoke(&["verify-table", "--family", "I", "--max-param", "6"]);
    assert_eq!(code, EXIT_OK, "{err}");
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 21);
    assert!(rows.iter().all(|r| r.trim_end().ends_with("match")), "{out}");
}

#[test]
fn verify_table_type_iii_is_lower_bound() {
    let (code, out, _) = invoke(&["verify-table", "--family", "III", "--max-param", "5", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for row in v["rows"].as_array().unwrap() {
        assert_eq!(row["verdict"], "consistent-lower-bound");
    }
}

#[test]
fn score_polydisk() {
    let (code, out, _) = invoke(&["score", "--domain", "poly:3", "--sym", "1", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc: ReportDocument = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.rows.len(), 3);
    assert!(doc.rows.iter().all(|r| r.sigma == -2));

    let (_, out, _) = invoke(&["score", "--domain", "poly:3", "--sym", "1", "--convention", "m-plus-lowest", "--format", "json"]);
    let doc: ReportDocument = serde_json::from_str(&out).unwrap();
    assert!(doc.rows.iter().all(|r| r.sigma == 2));
}

#[test]
fn decompose_type_ii_json() {
    let (code, out, _) = invoke(&["decompose", "--domain", "II:4", "--sym", "2", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc: ReportDocument = serde_json::from_str(&out).unwrap();
    let got: Vec<(&str, &str)> = doc.rows.iter().map(|r| (r.label.as_str(), r.dim.as_str())).collect();
    assert_eq!(got, [("(2,2)", "20"), ("(1,1,1,1)", "1")]);
    // round trip through the serializer is byte-stable
    assert_eq!(doc.to_json(), out);
}

#[test]
fn decompose_csv_and_pretty() {
    let (code, out, _) = invoke(&["decompose", "--domain", "IV:5", "--sym", "1..3", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    // 1 + 2 + 2 summands, one header per level
    assert_eq!(out.lines().count(), 5 + 3);

    let (code, out, _) = invoke(&["decompose", "--domain", "I:2,2", "--sym", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("Sym^2: 2 summands"));
    assert!(out.contains("(1,1)"));
}

#[test]
fn polydisk_command() {
    let (code, out, _) = invoke(&["polydisk", "-n", "2", "--sym", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("strictly negative"));
    assert_eq!(out.lines().filter(|l| l.contains("  -4  ")).count(), 3, "{out}");
}

#[test]
fn curves_commands() {
    assert_eq!(invoke(&["curves", "product", "--genera", "2,3,4"]).1, "9\n");
    assert_eq!(invoke(&["curves", "quotient", "--genus", "5", "--order", "4"]).1, "2\n");
    let (code, out, err) = invoke(&["curves", "quotient", "--genus", "4", "--order", "4"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.is_empty());
    assert!(err.contains("no free action"));
    assert_eq!(invoke(&["curves", "product", "--genera", "2,1"]).0, EXIT_INPUT);
}

#[test]
fn oracle_check_command() {
    let (code, out, _) = invoke(&["oracle-check", "--domain", "I:2,3", "--sym", "0..3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().filter(|l| l.ends_with("agree")).count(), 4);
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        vec!["decompose", "--domain", "V:3", "--sym", "1"],
        vec!["decompose", "--domain", "IV:2", "--sym", "1"],
        vec!["decompose", "--domain", "I:2,2", "--sym", "3..1"],
        vec!["verify-table", "--family", "VI", "--max-param", "3"],
        vec!["verify-table", "--family", "I", "--max-param", "3", "--smax", "0"],
        vec!["frobnicate"],
    ] {
        let (code, out, err) = invoke(&args);
        assert_eq!(code, EXIT_INPUT, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn warnings_go_to_stderr() {
    let (code, out, err) = invoke(&["decompose", "--domain", "IV:3", "--sym", "1", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    assert!(err.contains("III:2"));
    assert!(!out.contains("warning"));
}

#[test]
fn meta_is_confined_to_stderr() {
    let (_, plain, _) = invoke(&["verify-table", "--family", "IV", "--max-param", "6"]);
    let (_, with_meta, err) = invoke(&["--meta", "verify-table", "--family", "IV", "--max-param", "6"]);
    assert_eq!(plain, with_meta);
    assert!(err.contains("meta: symdiff"));
}
