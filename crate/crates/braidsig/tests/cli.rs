use std::process::{Command, Output};

fn braidsig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidsig"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn invariants_json_contract() {
    let out = braidsig(&["invariants", "1^3 2^3 1^3 2^3", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["word"], "1^3 2^3 1^3 2^3");
    assert_eq!(v["strands"], 3);
    assert_eq!(v["letters"], 12);
    assert_eq!(v["b1"], 10);
    assert_eq!(v["delta_sigma"], 2);
    assert_eq!(v["twist"], 4);
    assert_eq!(v["thm3_ok"], true);
    assert_eq!(v["cut"]["delta_betti"], 2);
    assert!(v["thm1"]["lo"].is_number());
    assert_eq!(v["flags"]["sufficiently_complicated"], true);
}

#[test]
fn invariants_respects_strands_flag() {
    let out = braidsig(&["invariants", "1^2", "--strands", "4", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["strands"], 4);
    assert_eq!(v["components"], 4);
}

#[test]
fn matrix_grids_and_inertia() {
    let out = braidsig(&["matrix", "1^3", "--inertia"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("V (2 x 2):\n-1 1\n0 -1"));
    assert!(text.contains("V + V^T:\n-2 1\n1 -2"));
    assert!(text.contains("inertia: (0, 2, 0)"));
}

#[test]
fn matrix_json_keys() {
    let out = braidsig(&["matrix", "1^3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["size"], 2);
    assert_eq!(v["bricks"].as_array().unwrap().len(), 2);
    assert_eq!(v["entries"][0][1], 1);
}

#[test]
fn extract_reports_certificate() {
    let out = braidsig(&["extract", "1^3 2^3 1^3 2^3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("dots: 4"));
    assert!(text.contains("class: j=2"));
    assert!(text.contains("occurrences: 1"));
}

#[test]
fn bounds_text() {
    let out = braidsig(&["bounds", "1^3 2^3 1^3 2^3"]);
    let text = stdout(&out);
    assert!(text.contains("delta_sigma: 2"));
    assert!(text.contains("twist: 4"));
    assert!(text.contains("thm3_ok: true"));
    assert!(text.contains("[9.7703, 30.4482)"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(braidsig(&["invariants", "banana"]).status.code(), Some(2));
    assert_eq!(braidsig(&["invariants", "0"]).status.code(), Some(2));
    assert_eq!(braidsig(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        braidsig(&["invariants", "3", "--strands", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_three_braids_exits_0() {
    let out = braidsig(&["verify", "--min-strands", "3", "--max-strands", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("word,strands,letters,"));
    assert_eq!(text.lines().count(), 35); // header + 34 words
}

#[test]
fn verify_four_braids_exits_1_on_certificate_gap() {
    // The t = 6 four-strand words carry no alternating 4-run, so the
    // 21 * count >= t assertion fails and the sweep reports it.
    let out = braidsig(&["verify", "--min-strands", "4", "--max-strands", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("certificate 21 count >= t"));
}

#[test]
fn verify_csv_deterministic_and_out_flag() {
    let dir = std::env::temp_dir();
    let a = dir.join("braidsig_sweep_a.csv");
    let b = dir.join("braidsig_sweep_b.csv");
    for path in [&a, &b] {
        let out = braidsig(&[
            "verify",
            "--min-strands",
            "3",
            "--max-strands",
            "3",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let first = std::fs::read(&a).unwrap();
    let second = std::fs::read(&b).unwrap();
    assert!(!first.is_empty());
    assert_eq!(first, second);
    std::fs::remove_file(a).ok();
    std::fs::remove_file(b).ok();
}

#[test]
fn enumerate_lists_family() {
    let out = braidsig(&[
        "enumerate",
        "--min-strands",
        "3",
        "--max-strands",
        "3",
        "--min-twist",
        "4",
        "--max-twist",
        "4",
        "--exponents",
        "3",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "3\t1^3 2^3 1^3 2^3");
}

#[test]
fn enumerate_random_seeded() {
    let run = |seed: &str| {
        stdout(&braidsig(&[
            "enumerate",
            "--random",
            "5",
            "--seed",
            seed,
        ]))
    };
    assert_eq!(run("11"), run("11"));
    assert_ne!(run("11"), run("12"));
}

#[test]
fn exhaustive_twist_flag() {
    let out = braidsig(&[
        "invariants",
        "1^3 3^3 1^3",
        "--strands",
        "4",
        "--exhaustive-twist",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["twist"], 2);
}
