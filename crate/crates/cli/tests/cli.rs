use std::process::{Command, Output};

fn hhc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hhc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hhc(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    hhc(args).status.code().unwrap()
}

#[test]
fn map_examples() {
    let out = stdout(&["map", "--curve", "hilbert", "--order", "2", "--t", "00"]);
    assert!(out.contains("point: (1/2^3, 1/2^3)"), "{out}");
    assert!(out.contains("decimal: (0.125, 0.125)"));

    let out = stdout(&["map", "--curve", "i1", "--order", "2", "--t", "10"]);
    assert!(out.contains("t': 13"), "{out}");

    let out = stdout(&["map", "--curve", "0", "--order", "1", "--t", "0"]);
    assert!(out.contains("point: (1/2^2, 1/2^2)"));
}

#[test]
fn map_accepts_index_form_and_json() {
    let digits = stdout(&["map", "--curve", "liu2", "--order", "3", "--t", "213", "--format", "json"]);
    let index = stdout(&["map", "--curve", "liu2", "--order", "3", "--t", "39/4^3", "--format", "json"]);
    assert_eq!(digits, index);
    let v: serde_json::Value = serde_json::from_str(&digits).unwrap();
    assert_eq!(v["curve"], "Liu2");
    assert_eq!(v["t"], "213");
    assert!(v["x"].as_str().unwrap().ends_with("/2^4"));
}

#[test]
fn moore_order_one_csv() {
    let out = stdout(&["curve", "--curve", "moore", "--order", "1"]);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "index,digits,ix,iy,x,y");
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[4], "3,3,1,0,3/2^2,1/2^2");
}

#[test]
fn moore_svg_endpoints_meet_at_bottom_centre() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("moore.svg");
    stdout(&["svg", "--curve", "moore", "--order", "4", "-o", path.to_str().unwrap()]);
    let svg = std::fs::read_to_string(&path).unwrap();
    let points: Vec<(f64, f64)> = svg
        .split("points=\"")
        .nth(1)
        .unwrap()
        .split('"')
        .next()
        .unwrap()
        .split(' ')
        .map(|p| {
            let (x, y) = p.split_once(',').unwrap();
            (x.parse().unwrap(), y.parse().unwrap())
        })
        .collect();
    assert_eq!(points.len(), 256);
    // y is flipped in SVG, so the bottom row sits at 1 - 1/32
    assert_eq!(points[0], (0.46875, 0.96875));
    assert_eq!(points[255], (0.53125, 0.96875));
}

#[test]
fn outputs_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    for (name, args) in [
        ("a.svg", vec!["svg", "--curve", "i4", "--order", "5"]),
        ("a.csv", vec!["curve", "--curve", "liu3", "--order", "5"]),
        ("a.json", vec!["curve", "--curve", "i6", "--order", "4", "--format", "json"]),
    ] {
        let path = dir.path().join(name);
        let mut with_file = args.clone();
        with_file.extend(["-o", path.to_str().unwrap()]);
        stdout(&with_file);
        let first = std::fs::read(&path).unwrap();
        stdout(&with_file);
        assert_eq!(std::fs::read(&path).unwrap(), first);
        assert_eq!(stdout(&args).into_bytes(), first, "{name}: file and stdout differ");
    }
}

#[test]
fn json_dump_parses() {
    let out = stdout(&["curve", "--curve", "hilbert", "--order", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 16);
    assert_eq!(cells[15]["ix"], 3);
    assert_eq!(cells[15]["iy"], 0);
}

#[test]
fn transfer_between_proper_curves() {
    let out = stdout(&["transfer", "--from", "hilbert", "--to", "moore", "--order", "3", "--t", "012"]);
    assert!(out.contains("equal: true"));
    assert_eq!(code(&["transfer", "--from", "i1", "--to", "moore", "--order", "3", "--t", "012"]), 2);
}

#[test]
fn dilation_reports() {
    let out = stdout(&["dilation", "--curve", "hilbert", "--order", "6"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ratio"], "961/171");
    assert_eq!(v["estimate"], "5.61988304094");

    let out = stdout(&["dilation", "--all", "--order", "3", "--mode", "sampled:500", "--seed", "9"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 12);
}

#[test]
fn worker_count_does_not_change_output() {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_hhc"))
            .args(["dilation", "--curve", "i5", "--order", "5"])
            .env("HHC_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn verify_single_suite() {
    let out = stdout(&["verify", "--suite", "group"]);
    assert!(out.lines().filter(|l| l.starts_with("[PASS]")).count() >= 16);
    assert!(!out.contains("[FAIL]"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&["map", "--curve", "hilbert", "--order", "2", "--t", "0"]), 2);
    assert_eq!(code(&["map", "--curve", "hilbert", "--order", "31", "--t", "0"]), 2);
    assert_eq!(code(&["map", "--curve", "hilbert", "--order", "1", "--t", "4"]), 2);
    assert_eq!(code(&["map", "--curve", "i2", "--order", "1", "--t", "0"]), 2);
    assert_eq!(code(&["map", "--curve", "nope", "--order", "1", "--t", "0"]), 2);
    assert_eq!(code(&["curve", "--curve", "hilbert", "--order", "13"]), 2);
    assert_eq!(code(&["svg", "--curve", "hilbert", "--order", "10"]), 2);
    assert_eq!(code(&["verify", "--suite", "bogus"]), 2);
    assert_eq!(code(&["dilation", "--curve", "hilbert", "--order", "8"]), 2);
    assert_eq!(code(&["dilation", "--curve", "hilbert", "--order", "3", "--mode", "sampled:0"]), 2);
    assert_eq!(code(&["dilation", "--order", "3"]), 2);
}
