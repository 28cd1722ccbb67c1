use std::process::{Command, Output};

use jtwist_cli::args::Format;
use jtwist_cli::commands::render_reports;
use jtwist_cli::exit_code;
use jtwist_cli::json::element_from_json;
use jtwist_core::exactalg::Rational;
use jtwist_core::twists::{
    build_twist, check_cocycle_element, Direction, Family, Form, TwistSpec, UMode,
};

fn jtwist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jtwist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_first_order_text() {
    let o = jtwist(&[
        "expand", "--family", "L", "--form", "closed", "--order", "1", "--u", "symbolic",
        "--format", "text",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines, ["1⊗1", "-u/κ · D⊗P", "(1-u)/κ · P⊗D"]);
}

#[test]
fn expand_ascii() {
    let o = jtwist(&["expand", "--family", "L", "--order", "1", "--ascii"]);
    assert!(stdout(&o).contains("(1-u)/kappa * P(x)D"));
}

#[test]
fn expand_unit_order_zero() {
    let o = jtwist(&["expand", "--family", "0", "--order", "0"]);
    assert_eq!(stdout(&o), "1⊗1\n");
}

#[test]
fn expand_json_round_trip_at_one_half() {
    let o = jtwist(&[
        "expand",
        "--family",
        "R",
        "--inverse",
        "--form",
        "closed",
        "--order",
        "1",
        "--u",
        "1/2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let parsed = element_from_json(&stdout(&o)).unwrap();
    let spec = TwistSpec::new(Family::R, Direction::Inverse, Form::Closed, 1)
        .with_u(UMode::Value(Rational::new(1, 2).unwrap()));
    assert_eq!(parsed, build_twist(&spec).unwrap());
    let grade_one = parsed.grade_slice(1).unwrap();
    let half = Rational::new(1, 2).unwrap();
    for (_, c) in grade_one.terms() {
        for (_, u) in c.terms() {
            let value = u.as_constant().unwrap();
            assert!(value == half || value == -&half);
        }
    }
    assert_eq!(grade_one.len(), 2);
}

#[test]
fn expand_json_round_trip_symbolic() {
    let o = jtwist(&[
        "expand", "--family", "L", "--order", "4", "--format", "json",
    ]);
    let parsed = element_from_json(&stdout(&o)).unwrap();
    assert_eq!(
        parsed,
        build_twist(&TwistSpec::closed(Family::L, 4)).unwrap()
    );
    assert!(parsed
        .terms()
        .any(|(_, c)| c.terms().any(|(_, u)| u.degree() > Some(1))));
}

#[test]
fn json_output_is_deterministic() {
    let args = ["verify", "--all", "--order", "2", "--format", "json"];
    let a = jtwist(&args);
    let b = jtwist(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["status"], "pass");
    let first = &doc["reports"][0];
    assert!(first["grades"].as_array().unwrap().len() == 3);
}

#[test]
fn verify_examples() {
    let o = jtwist(&[
        "verify", "--check", "cocycle", "--family", "L", "--order", "0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass cocycle"));

    let o = jtwist(&[
        "verify",
        "--check",
        "endpoints",
        "--family",
        "L",
        "--order",
        "6",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("F_{L,u=0} = F0") && out.contains("F_{L,u=1} = F1"));

    let o = jtwist(&[
        "verify",
        "--check",
        "hopf-data",
        "--family",
        "R",
        "--generator",
        "Q",
        "--order",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("printed sign confirmed"));

    let o = jtwist(&["verify", "--check", "v-family", "--v", "-2", "--order", "5"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn identities_examples() {
    let o = jtwist(&["identities", "--bigident", "--bound", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass bigident bound=3"));
    assert_eq!(stdout(&jtwist(&["identities", "--det", "0"])), "1\n");
    assert_eq!(stdout(&jtwist(&["identities", "--det", "1"])), "-1\n");
    let o = jtwist(&["identities", "--det", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["det"]["value"], "1/1");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["expand", "--family", "Q"][..],
        &["expand", "--family", "L", "--u", "1/0"],
        &["expand", "--family", "0", "--form", "product"],
        &["verify", "--order", "2"],
        &["verify", "--check", "endpoints", "--family", "1"],
        &["identities", "--lchain", "--bound", "9"],
        &["frobnicate"],
    ] {
        assert_eq!(jtwist(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("jtwist-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("f.json");
    let o = jtwist(&[
        "expand",
        "--family",
        "L",
        "--order",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let parsed = element_from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(
        parsed,
        build_twist(&TwistSpec::closed(Family::L, 2)).unwrap()
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn injected_failure_flips_exit_code() {
    let f = build_twist(&TwistSpec::closed(Family::L, 3)).unwrap();
    let good = check_cocycle_element("F_L", &f);
    let mutated = f.map_coeffs(|m, c| {
        if m.grade() == 2 {
            c.scale_rational(&Rational::from(2))
        } else {
            c.clone()
        }
    });
    let bad = check_cocycle_element("mutated", &mutated);
    let ok = render_reports(std::slice::from_ref(&good), Format::Json);
    assert_eq!(exit_code(ok.passed), 0);
    let failed = render_reports(&[good, bad], Format::Json);
    assert_eq!(exit_code(failed.passed), 1);
    let doc: serde_json::Value = serde_json::from_str(&failed.body).unwrap();
    assert_eq!(doc["status"], "fail");
    assert_eq!(doc["reports"][1]["first_failure"]["grade"], 2);
}
