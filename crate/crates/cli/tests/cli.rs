use std::process::Command;

use linperm_cli::run;

fn invoke(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("linperm").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn value<'a>(out: &'a str, key: &str) -> Option<&'a str> {
    out.lines().find_map(|line| {
        let (k, v) = line.split_once(':')?;
        (k == key).then(|| v.trim())
    })
}

#[test]
fn field_prints_modulus_and_order() {
    let (code, out, _) = invoke(&["field", "--p", "3", "--e", "1", "--n", "2"]);
    assert_eq!(code, 0);
    // x^2 + 1 encodes as 1 + 0·3 + 1·9
    assert_eq!(value(&out, "modulus"), Some("10"));
    assert_eq!(value(&out, "order"), Some("9"));

    let (_, out, _) = invoke(&["field", "--p", "2", "--e", "1", "--n", "3"]);
    assert_eq!(value(&out, "modulus"), Some("11"));
}

#[test]
fn check_examples() {
    let (code, out, _) = invoke(&["check", "--p", "3", "--e", "1", "--n", "2", "--r", "1", "--a", "4"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "permutation"), Some("true"));
    assert_eq!(value(&out, "norm"), Some("2"));

    let (code, out, _) = invoke(&["check", "--p", "3", "--e", "1", "--n", "2", "--r", "1", "--a", "3"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "permutation"), Some("false"));
    assert_eq!(value(&out, "norm"), Some("1"));
}

#[test]
fn invert_methods_agree_on_anchor() {
    for method in ["closed", "dickson", "special"] {
        let (code, out, err) = invoke(&[
            "invert", "--p", "3", "--e", "1", "--n", "2", "--r", "1", "--a", "4", "--method", method,
        ]);
        assert_eq!(code, 0, "{method}: {err}");
        assert_eq!(value(&out, "coeffs"), Some("7,2"), "{method}");
    }
}

#[test]
fn invert_closed_and_dickson_agree_everywhere_small() {
    for (p, e, n) in [(2, 1, 4), (3, 1, 3), (2, 2, 3), (5, 1, 2)] {
        let order = u64::pow(p, (e * n) as u32);
        for r in 1..n {
            for a in 0..order {
                let args = |m: &str| {
                    vec![
                        "invert".to_string(),
                        "--p".into(),
                        p.to_string(),
                        "--e".into(),
                        e.to_string(),
                        "--n".into(),
                        n.to_string(),
                        "--r".into(),
                        r.to_string(),
                        "--a".into(),
                        a.to_string(),
                        "--method".into(),
                        m.into(),
                    ]
                };
                let run_with = |m| {
                    let argv = args(m);
                    invoke(&argv.iter().map(String::as_str).collect::<Vec<_>>())
                };
                let (c1, o1, _) = run_with("closed");
                let (c2, o2, _) = run_with("dickson");
                assert_eq!(c1, c2, "p={p} e={e} n={n} r={r} a={a}");
                if c1 == 0 {
                    assert_eq!(o1, o2, "p={p} e={e} n={n} r={r} a={a}");
                }
            }
        }
    }
}

#[test]
fn invert_reports_violated_criterion() {
    for method in ["closed", "dickson", "special"] {
        let (code, out, err) = invoke(&[
            "invert", "--p", "3", "--e", "1", "--n", "2", "--r", "1", "--a", "3", "--method", method,
        ]);
        assert_ne!(code, 0);
        assert!(out.is_empty());
        assert!(err.contains("Nor_{n:d}(a) = 1"), "{method}: {err}");
    }
}

#[test]
fn invert_special_rejects_unsupported_shape() {
    let (code, _, err) =
        invoke(&["invert", "--p", "2", "--n", "6", "--r", "2", "--a", "9", "--method", "special"]);
    assert_ne!(code, 0);
    assert!(err.contains("r = 2, n = 6"), "{err}");
}

#[test]
fn lift_reports_big_field() {
    let (code, out, err) =
        invoke(&["lift", "--p", "3", "--e", "1", "--n", "2", "--r", "1", "--a", "4", "--t", "3"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(value(&out, "big_order"), Some("729"));
    let coeffs: Vec<&str> = value(&out, "coeffs").unwrap().split(',').collect();
    assert_eq!(coeffs.len(), 2);
    assert_eq!(coeffs[1], "1");

    let (code, _, _) =
        invoke(&["lift", "--p", "3", "--e", "1", "--n", "2", "--r", "1", "--a", "4", "--t", "2"]);
    assert_ne!(code, 0);
}

#[test]
fn verify_summary() {
    let (code, out, _) = invoke(&["verify", "--max-order", "27", "--primes", "3"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "failures"), Some("0"));
    // F_9 with r = 1, and F_27 with r = 1, 2
    assert_eq!(value(&out, "cases"), Some("63"));
    assert!(!out.contains("failure:"));

    let (code, out, _) = invoke(&["verify", "--max-order", "1"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "cases"), Some("0"));
}

#[test]
fn bench_reports_agreement() {
    let (code, out, err) =
        invoke(&["bench", "--p", "3", "--e", "1", "--n", "4", "--r", "1", "--trials", "3"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(value(&out, "agree"), Some("true"));
    assert!(value(&out, "closed_ns").unwrap().parse::<u64>().is_ok());
    assert!(value(&out, "dickson_ns").unwrap().parse::<u64>().is_ok());

    let (code, out, _) = invoke(&["bench", "--p", "3", "--e", "1", "--n", "2", "--r", "1", "--trials", "0"]);
    assert_eq!(code, 0);
    assert_eq!(value(&out, "closed_ns"), Some("0"));

    let (code, _, err) = invoke(&["bench", "--p", "2", "--e", "1", "--n", "16", "--r", "1", "--trials", "1"]);
    assert_ne!(code, 0);
    assert!(err.contains("no permutation binomial"), "{err}");
}

#[test]
fn json_carries_the_same_keys() {
    let (code, out, _) =
        invoke(&["--json", "check", "--p", "3", "--e", "1", "--n", "2", "--r", "1", "--a", "4"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["permutation"], serde_json::json!(true));
    assert_eq!(v["norm"], serde_json::json!(2));

    let (_, out, _) = invoke(&["invert", "--p", "3", "--n", "2", "--r", "1", "--a", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!([7, 2]));
}

#[test]
fn rejects_bad_parameters() {
    let cases: &[&[&str]] = &[
        &["check", "--p", "4", "--n", "2", "--r", "1", "--a", "1"],
        &["check", "--p", "3", "--n", "2", "--r", "2", "--a", "1"],
        &["check", "--p", "3", "--n", "2", "--r", "0", "--a", "1"],
        &["check", "--p", "3", "--n", "2", "--r", "1", "--a", "9"],
        &["check", "--p", "3", "--e", "0", "--n", "2", "--r", "1", "--a", "1"],
        &["field", "--p", "4294967311", "--n", "2"],
        &["field", "--p", "2", "--n", "100000"],
        &["verify", "--max-order", "2000000"],
        &["verify", "--max-order", "9", "--primes", "4"],
    ];
    for args in cases {
        let (code, out, err) = invoke(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(err.starts_with("error: "), "{args:?}: {err}");
    }
    assert_eq!(invoke(&["check", "--p", "3", "--bogus"]).0, 2);
    assert_eq!(invoke(&["frobnicate"]).0, 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["lift", "--p", "2", "--e", "1", "--n", "3", "--r", "1", "--a", "5", "--t", "2"];
    assert_eq!(invoke(&args), invoke(&args));
    let args = ["bench", "--p", "3", "--n", "3", "--trials", "2"];
    let agree = |out: &str| value(out, "agree").map(str::to_owned);
    assert_eq!(agree(&invoke(&args).1), agree(&invoke(&args).1));
}

#[test]
fn binary_round_trip() {
    let exe = env!("CARGO_BIN_EXE_linperm");
    let out = Command::new(exe)
        .args(["invert", "--p", "3", "--e", "1", "--n", "2", "--r", "1", "--a", "4", "--method", "closed"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "coeffs: 7,2\n");

    let out = Command::new(exe)
        .args(["invert", "--p", "3", "--e", "1", "--n", "2", "--r", "1", "--a", "3", "--method", "closed"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("violated"));
}
