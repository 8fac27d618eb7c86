use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, Output};

use unitarity_core::classify::{classify_lambda, Status};
use unitarity_core::text::{parse_coords, parse_weight};
use unitarity_core::{Family, Rational, RootSystemSpec, Weight};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unitarity"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn manifest_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(manifest_path("tests/golden").join(name)).unwrap()
}

fn core_fixture(family: Family, name: &str) -> BTreeSet<Weight> {
    std::fs::read_to_string(manifest_path("../core/tests/fixtures").join(name))
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_weight(family, l).unwrap())
        .collect()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn tuples(family: Family, v: &serde_json::Value) -> BTreeSet<Weight> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let coords: Vec<&str> = t
                .as_array()
                .unwrap()
                .iter()
                .map(|c| c.as_str().unwrap())
                .collect();
            parse_weight(family, &coords.join(",")).unwrap()
        })
        .collect()
}

#[test]
fn classify_examples_set_exit_codes() {
    let out = run(&[
        "classify",
        "--family",
        "e7",
        "--form",
        "lambda",
        "--weight",
        "0,0,0,0,0,-4,2",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), golden("classify_e7_wallach.txt"));

    let out = run(&[
        "classify", "--family", "so-even", "--n", "3", "--form", "lambda", "--weight", "0,0,0",
    ]);
    assert_eq!(code(&out), 0);

    let out = run(&[
        "classify",
        "--family",
        "e6",
        "--form",
        "infchar",
        "--weight",
        "0,1,4,5,6,0",
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("verdict: nonunitary"));

    // Not k-dominant.
    let out = run(&[
        "classify", "--family", "so-even", "--n", "3", "--weight", "0,0,1",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("verdict: not-parameter"));
}

#[test]
fn classify_json_fields() {
    let out = run(&[
        "classify",
        "--family",
        "so-odd",
        "--n",
        "3",
        "--weight",
        "-3,.5,1/2",
        "--format",
        "json",
    ]);
    let v = json(&out);
    assert_eq!(v["family"], "so-odd");
    assert_eq!(v["n"], 3);
    assert_eq!(v["weight"], serde_json::json!(["-3", "1/2", "1/2"]));
    assert_eq!(
        v["status"].as_str().unwrap(),
        if code(&out) == 0 {
            "unitary"
        } else {
            "nonunitary"
        }
    );
    let e = json(&run(&[
        "classify",
        "--family",
        "e6",
        "--weight",
        "0,0,0,0,0,0",
        "--format",
        "json",
    ]));
    assert!(e.get("n").is_none());
}

#[test]
fn decimal_and_fraction_inputs_agree() {
    let a = run(&[
        "classify", "--family", "so-odd", "--n", "2", "--weight", "-1.5,0.5", "--format", "json",
    ]);
    let b = run(&[
        "classify", "--family", "so-odd", "--n", "2", "--weight", "-3/2,1/2", "--format", "json",
    ]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(code(&a), code(&b));
}

#[test]
fn e6_rho_matches_the_published_lists() {
    let out = run(&[
        "infchar",
        "--family",
        "e6",
        "--dominant",
        "0,1,2,3,4,-4",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(
        tuples(Family::E6, &v["unitary"]),
        core_fixture(Family::E6, "e6_rho_unitary.txt")
    );
    assert_eq!(
        tuples(Family::E6, &v["nonunitary"]),
        core_fixture(Family::E6, "e6_rho_nonunitary.txt")
    );
    assert!(v.get("not_parameter").is_none());

    let text = run(&["infchar", "--family", "e6", "--dominant", "0,1,2,3,4,-4"]);
    assert_eq!(stdout(&text), golden("infchar_e6_rho.txt"));
}

#[test]
fn e7_rho_matches_the_published_lists() {
    let out = run(&[
        "infchar",
        "--family",
        "e7",
        "--dominant",
        "0,1,2,3,4,5,-17/2",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(
        tuples(Family::E7, &v["unitary"]),
        core_fixture(Family::E7, "e7_rho_unitary.txt")
    );
    assert_eq!(
        tuples(Family::E7, &v["nonunitary"]),
        core_fixture(Family::E7, "e7_rho_nonunitary.txt")
    );
}

#[test]
fn so_odd_rank_two_report_matches_brute_force() {
    let out = run(&[
        "infchar",
        "--family",
        "so-odd",
        "--n",
        "2",
        "--dominant",
        "1,0",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);

    // All signed permutations of (1, 0); keep Lambda_2 > 0 with an integral
    // tail and classify lambda = Lambda - rho through the highest weight form.
    let spec = RootSystemSpec::build(Family::SoOdd(2)).unwrap();
    let base = [Rational::from_integer(1), Rational::from_integer(0)];
    let mut unitary = BTreeSet::new();
    let mut nonunitary = BTreeSet::new();
    for (i, j) in [(0, 1), (1, 0)] {
        for s0 in [1, -1] {
            for s1 in [1, -1] {
                let w = Weight::new(vec![base[i] * s0, base[j] * s1]);
                let tail = w.coords()[1];
                if tail <= Rational::from_integer(0) || !(tail * 2).is_integer() {
                    continue;
                }
                let lambda = &w - spec.rho();
                match classify_lambda(&spec, &lambda).unwrap().status {
                    Status::Unitary => unitary.insert(w),
                    Status::Nonunitary => nonunitary.insert(w),
                    Status::NotParameter => false,
                };
            }
        }
    }
    assert_eq!(tuples(Family::SoOdd(2), &v["unitary"]), unitary);
    assert_eq!(tuples(Family::SoOdd(2), &v["nonunitary"]), nonunitary);
}

#[test]
fn so_even_rank_three_golden() {
    let out = run(&[
        "infchar",
        "--family",
        "so-even",
        "--n",
        "3",
        "--dominant",
        "2,1,0",
        "--format",
        "json",
    ]);
    assert_eq!(stdout(&out), golden("infchar_so_even3_rho.json"));
}

#[test]
fn non_dominant_input_is_rejected() {
    let out = run(&["infchar", "--family", "e6", "--dominant", "0,1,2,4,3,-4"]);
    assert_eq!(code(&out), 2);
    assert_eq!(
        String::from_utf8_lossy(&out.stderr).trim(),
        "The entered parameter is not g-dominant"
    );
}

#[test]
fn theta_tables() {
    let out = run(&["theta", "--m", "0", "--max-level", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), golden("theta_m0_level2.txt"));

    let v = json(&run(&[
        "theta",
        "--m",
        "5",
        "--max-level",
        "4",
        "--format",
        "json",
    ]));
    assert_eq!(v["types"], serde_json::json!([]));

    let v = json(&run(&[
        "theta",
        "--m",
        "-3",
        "--max-level",
        "3",
        "--format",
        "json",
    ]));
    assert_eq!(
        v["types"],
        serde_json::json!([{"a": 3, "b": 0, "c": 0, "n": 3, "hprime_weight": 22}])
    );
}

#[test]
fn json_output_is_canonical() {
    let cases: [&[&str]; 4] = [
        &[
            "infchar",
            "--family",
            "e6",
            "--dominant",
            "0,1,2,3,4,-4",
            "--format",
            "json",
        ],
        &[
            "infchar",
            "--family",
            "so-even",
            "--n",
            "4",
            "--dominant",
            "5,2,1,0",
            "--format",
            "json",
        ],
        &[
            "classify",
            "--family",
            "e7",
            "--weight",
            "0,0,0,0,0,-4,2",
            "--format",
            "json",
        ],
        &["theta", "--m", "2", "--max-level", "6", "--format", "json"],
    ];
    for args in cases {
        let out = run(args);
        let text = stdout(&out);
        let reparsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&reparsed).unwrap() + "\n";
        assert_eq!(again, text, "{args:?}");
        // Rationals print in lowest terms and parse back to themselves.
        for s in text.split('"').skip(1).step_by(2) {
            if let Ok(c) = parse_coords(s) {
                if c.len() == 1 && s.contains('/') {
                    assert_eq!(format!("{}/{}", c[0].numer(), c[0].denom()), s);
                }
            }
        }
    }
}

#[test]
fn usage_errors_exit_with_three() {
    for args in [
        &["classify", "--family", "so-even", "--weight", "0,0,0"][..],
        &["classify", "--family", "g2", "--weight", "0,0"],
        &["classify", "--family", "e6", "--weight", "0,1,x"],
        &["classify", "--family", "e6", "--weight", "0,1,2"],
        &["classify", "--family", "e7", "--weight", "0,0,0,0,0,-4,2,2"],
        &[
            "classify", "--family", "so-odd", "--n", "1", "--weight", "0",
        ],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(
            code(&out),
            3,
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(code(&run(&["--help"])), 0);
}
