use std::process::{Command, Output};

use num_rational::BigRational;
use qsl2::clebsch::cg_table;
use qsl2::rep::rep_of_element;
use qsl2::scalars::{evaluate_at, HalfInt};
use qsl2::uqsl2::parse_element;
use serde_json::Value;

fn qsl2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsl2"))
        .args(args)
        .env_remove("QSL2_MAX_SPIN")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let o = qsl2(&all);
    (serde_json::from_slice(&o.stdout).expect("valid JSON"), o.status.code().unwrap())
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-10 * a.abs().max(b.abs()).max(1.0)
}

#[test]
fn normal_form_examples() {
    let o = qsl2(&["normal-form", "k*e"]);
    assert_eq!(stdout(&o), "t^2 * e*k\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&qsl2(&["normal-form", "e*k^-1"])), "e*k^-1\n");
    assert_eq!(
        stdout(&qsl2(&["normal-form", "f*e - e*f"])),
        "-(1/(t^2-t^-2))*k^2 + (1/(t^2-t^-2))*k^-2\n"
    );
}

#[test]
fn parse_errors_exit_2_with_position() {
    let o = qsl2(&["normal-form", "e*(f"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 4"));
    assert_eq!(qsl2(&["normal-form", "x"]).status.code(), Some(2));
    assert_eq!(qsl2(&["rep", "1/3", "e"]).status.code(), Some(2));
    assert_eq!(qsl2(&["rep", "1", "e", "--numeric", "abc"]).status.code(), Some(2));
}

#[test]
fn rep_examples() {
    let (v, code) = json(&["rep", "1/2", "e"]);
    assert_eq!(code, 0);
    assert_eq!(v["rows"], serde_json::json!([["0", "1"], ["0", "0"]]));
    let (v, _) = json(&["rep", "1/2", "k"]);
    assert_eq!(v["rows"], serde_json::json!([["t", "0"], ["0", "t^-1"]]));
}

#[test]
fn numeric_rep_matches_commutator_formula() {
    let (v, code) = json(&["rep", "1", "e*f-f*e", "--numeric", "2"]);
    assert_eq!(code, 0);
    let t: f64 = 2.0;
    let d = t * t - 1.0 / (t * t);
    for (i, m) in [1.0, 0.0, -1.0].iter().enumerate() {
        let k2 = t.powf(4.0 * m);
        let want = (k2 - 1.0 / k2) / d;
        let got = v["rows"][i][i].as_f64().unwrap();
        assert!(close(got, want), "m={m}: {got} vs {want}");
    }
}

#[test]
fn numeric_output_agrees_with_exact_output() {
    let t0 = BigRational::new(3.into(), 2.into());
    for (l, expr) in [("1/2", "e"), ("1/2", "k"), ("1", "e*f-f*e"), ("3/2", "e^2*f*k^-1 + t*f")] {
        let (v, _) = json(&["rep", l, expr, "--numeric", "3/2"]);
        let exact = rep_of_element(l.parse::<HalfInt>().unwrap(), &parse_element(expr).unwrap()).unwrap();
        let want = exact.matrix.evaluate(&t0).unwrap();
        for (r, row) in want.iter().enumerate() {
            for (c, w) in row.iter().enumerate() {
                assert!(close(v["rows"][r][c].as_f64().unwrap(), *w), "{l} {expr} ({r},{c})");
            }
        }
    }
    let (v, _) = json(&["cg", "1", "1", "--numeric", "3/2"]);
    let table = cg_table(HalfInt::int(1), HalfInt::int(1)).unwrap();
    for block in v["blocks"].as_array().unwrap() {
        let j: HalfInt = block["j"].as_str().unwrap().parse().unwrap();
        for col in block["columns"].as_array().unwrap() {
            let m: HalfInt = col["m"].as_str().unwrap().parse().unwrap();
            for e in col["entries"].as_array().unwrap() {
                let p: HalfInt = e["p"].as_str().unwrap().parse().unwrap();
                let n: HalfInt = e["n"].as_str().unwrap().parse().unwrap();
                let want = evaluate_at(&table.get(j, p, n, m), &t0).unwrap();
                assert!(close(e["value"].as_f64().unwrap(), want));
            }
        }
    }
}

#[test]
fn cg_half_half_blocks() {
    let (v, code) = json(&["cg", "1/2", "1/2"]);
    assert_eq!(code, 0);
    let blocks = v["blocks"].as_array().unwrap();
    let sizes: Vec<(String, usize)> = blocks
        .iter()
        .map(|b| {
            let n = b["columns"]
                .as_array()
                .unwrap()
                .iter()
                .map(|c| c["entries"].as_array().unwrap().len())
                .sum();
            (b["j"].as_str().unwrap().to_string(), n)
        })
        .collect();
    assert_eq!(sizes, vec![("1".to_string(), 4), ("0".to_string(), 2)]);
    let top = &blocks[0]["columns"][0]["entries"][0]["value"]["display"];
    assert_eq!(top, "1");
}

#[test]
fn cg_csv_has_one_row_per_coefficient() {
    let o = qsl2(&["cg", "1", "1/2", "--csv"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("j,m,p,n,value"));
    // j = 3/2 has 1+2+2+1 entries, j = 1/2 has 2+2
    assert_eq!(lines.count(), 10);
}

#[test]
fn wigner_eckart_examples() {
    let (v, code) = json(&["wigner-eckart", "1", "1/2"]);
    assert_eq!(code, 0);
    assert_eq!(v["consistent"], true);
    assert_eq!(v["equals_closed_form"], true);

    // the quoted closed form disagrees with the extracted value here
    let (v, code) = json(&["wigner-eckart", "1", "1"]);
    assert_eq!(code, 1);
    assert_eq!(v["consistent"], true);
    assert_eq!(v["equals_closed_form"], false);
    assert_eq!(v["equals_corrected"], true);
    assert_eq!(v["alpha_closed_form"]["display"], "sqrt(t^8+1)");

    assert_eq!(qsl2(&["wigner-eckart", "2", "1/2"]).status.code(), Some(4));
    assert_eq!(qsl2(&["wigner-eckart", "1/2", "1"]).status.code(), Some(4));
}

#[test]
fn center_reports_both_characterizations() {
    for j in ["1", "2"] {
        let (v, code) = json(&["center", j]);
        assert_eq!(code, 0);
        assert_eq!(v["central"], true);
        assert_eq!(v["agree"], true);
        assert_eq!(v["ad_invariant"].as_object().unwrap().len(), 4);
        assert_eq!(v["commutes"].as_object().unwrap().len(), 4);
    }
}

#[test]
fn adjoint_basis_examples() {
    let o = qsl2(&["adjoint-basis", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("lambda[1][1] = e*k^-1\n"));
    let (v, _) = json(&["adjoint-basis", "1", "--closed-form"]);
    assert_eq!(v["construction"], "closed_form");
    assert_eq!(v["constructions_equal"], true);
    let (v, code) = json(&["adjoint-basis", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["relations_hold"], true);
}

#[test]
fn range_and_domain_errors() {
    assert_eq!(qsl2(&["rep", "9/2", "e"]).status.code(), Some(4));
    assert_eq!(qsl2(&["rep", "--", "-1", "e"]).status.code(), Some(4));
    assert_eq!(qsl2(&["center", "0"]).status.code(), Some(4));
    assert_eq!(qsl2(&["normal-form", "1/(t-1)", "--numeric", "1"]).status.code(), Some(3));
    assert_eq!(qsl2(&["rep", "1", "e", "--numeric", "0"]).status.code(), Some(3));
}

#[test]
fn spin_cap_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qsl2"))
        .args(["rep", "3", "k"])
        .env("QSL2_MAX_SPIN", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let a = stdout(&qsl2(&["cg", "1", "1", "--json"]));
    let b = stdout(&qsl2(&["cg", "1", "1", "--json"]));
    assert_eq!(a, b);
    let path = std::env::temp_dir().join(format!("qsl2-cli-test-{}.json", std::process::id()));
    let o = qsl2(&["cg", "1", "1", "--json", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), a);
    std::fs::remove_file(path).unwrap();
}
