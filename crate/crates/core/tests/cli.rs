use vwcalc::cli::{run, OutputRecord};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("vwcalc").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn horizontal_symbolic_text() {
    let (code, out, _) = call(&["horizontal", "--order", "3", "--symbolic"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines,
        [
            "normalization: (-2)^(-P2)",
            "q^0: 1",
            "q^1: -2*g + 2",
            "q^2: 2*g^2 - 13*g + 11",
            "q^3: -4/3*g^3 + 22*g^2 - 314/3*g + 84",
        ]
    );
}

#[test]
fn vertical_line() {
    let (code, out, _) = call(&["vertical", "--rank", "2", "--symbolic"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "(-2)^(-P2) * (c2 + 6*K2)");
    let (_, out, _) = call(&["vertical", "--rank", "3", "--surface", "quintic"]);
    assert!(out.trim().ends_with("(395/2)"), "{out}");
}

#[test]
fn rank_one_is_rejected() {
    let (code, _, err) = call(&["vertical", "--rank", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("rank"));
}

#[test]
fn usage_errors() {
    for args in [vec!["frobnicate"], vec!["horizontal", "--bogus"], vec!["mixed", "--surface", "torus"]] {
        let (code, out, err) = call(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(err.contains("Usage"), "{err}");
    }
    let (code, _, _) = call(&["horizontal", "--surface", "custom:1,1,0"]);
    assert_eq!(code, 2);
    let (code, _, _) = call(&["euler-series"]);
    assert_eq!(code, 2);
}

#[test]
fn json_round_trip_is_byte_stable() {
    for args in [
        vec!["compare-vw", "--surface", "quintic", "--json"],
        vec!["horizontal", "--order", "5", "--json"],
        vec!["mixed", "--json"],
        vec!["euler-series", "--euler", "24", "--order", "6", "--json"],
        vec!["monopole", "--surface", "octic-double", "--order", "6", "--json"],
    ] {
        let (_, first, _) = call(&args);
        let (_, second, _) = call(&args);
        assert_eq!(first, second);
        let rec = OutputRecord::from_json(&first).unwrap();
        assert_eq!(rec.to_json() + "\n", first);
    }
}

#[test]
fn compare_quintic() {
    let (code, out, _) = call(&["compare-vw", "--surface", "quintic", "--json"]);
    assert_eq!(code, 0);
    let rec = OutputRecord::from_json(&out).unwrap();
    assert_eq!(rec.status.as_deref(), Some("EQUAL"));
    assert_eq!(rec.coefficients, ["1", "-10", "90", "-580"]);
    let norm = rec.normalization.unwrap();
    assert_eq!(norm.two_exponent, "-10");
    assert_eq!(norm.display, "(-2)^(-10)");
}

#[test]
fn monopole_labels_tail() {
    let (code, out, _) = call(&["monopole", "--surface", "quintic", "--order", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("q^3: -580"));
    assert!(out.contains("horizontal-only"));
    assert!(out.contains("q^2 S^[1,1]: 85"));
}

#[test]
fn fractions_are_lowest_terms() {
    let (_, out, _) = call(&["euler-series", "--euler", "55", "--order", "2", "--json"]);
    let rec = OutputRecord::from_json(&out).unwrap();
    assert_eq!(rec.parameters["shift"], "-55/12");
    let (_, out, _) = call(&["euler-series", "--euler", "24", "--order", "2", "--json"]);
    let rec = OutputRecord::from_json(&out).unwrap();
    assert_eq!(rec.parameters["shift"], "-2");
}

#[test]
fn diagonal_check_and_selftest() {
    let (code, out, _) = call(&["diagonal-check", "--g", "3", "--order", "8"]);
    assert_eq!(code, 0);
    assert!(out.contains("status: AGREE"));
    let (code, _, _) = call(&["diagonal-check", "--g", "1"]);
    assert_eq!(code, 2);
    let (code, out, _) = call(&["selftest"]);
    assert_eq!(code, 0);
    assert!(out.contains("status: PASS"));
}
