use std::path::Path;
use std::process::{Command, Output};

fn cxbase(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cxbase")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = cxbase(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let v: serde_json::Value = serde_json::from_str(&stdout(args)).unwrap();
    assert_eq!(v["schema_version"], 1);
    v
}

fn read_csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r.records().map(|rec| rec.unwrap().iter().map(String::from).collect()).collect();
    (header, rows)
}

#[test]
fn dim_example() {
    let h: f64 = stdout(&["dim", "--n", "2", "--d", "1"]).trim().parse().unwrap();
    assert!((h - 1.210760533).abs() < 1e-6);
    let v = json(&["dim", "--n", "2", "--d", "-2", "--json"]);
    assert!((v["dimension"].as_f64().unwrap() - 1.523627086).abs() < 1e-6);
}

#[test]
fn classify_example() {
    let v = json(&["classify", "--n", "3", "--d", "3", "--json"]);
    assert_eq!(v["tag"], "ThreeAttractors");
    assert_eq!(v["fixed_points"].as_array().unwrap().len(), 3);
    assert_eq!(json(&["classify", "--n", "2", "--d", "-1", "--json"])["proper"], true);
}

#[test]
fn encode_decode_add() {
    assert_eq!(stdout(&["encode", "--n", "3", "--d", "3", "--point", "-12,10"]), "digits 0,1,1,1\nterminal 0,0\n");
    assert_eq!(stdout(&["decode", "--n", "3", "--d", "3", "--digits", "0,1,1,1"]), "-12,10\n");
    let v = json(&["add", "--n", "2", "--d", "-1", "--x", "1", "--y", "1", "--json"]);
    let two = json(&["encode", "--n", "2", "--d", "-1", "--point", "2,0", "--json"]);
    assert_eq!(v["digits"], two["digits"]);
}

#[test]
fn dim_table_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let out = cxbase(&["dim-table", "--max-n", "9", "--csv", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("-D"));
    let golden = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/dim_table.csv")).unwrap();
    let (gh, grows) = read_csv(&golden);
    let (h, rows) = read_csv(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(h, gh);
    assert_eq!(rows.len(), grows.len());
    for (r, g) in rows.iter().zip(&grows) {
        assert_eq!(r[0], g[0]);
        for (a, b) in r.iter().zip(g).skip(1) {
            if b.is_empty() {
                assert!(a.is_empty());
            } else {
                let (a, b): (f64, f64) = (a.parse().unwrap(), b.parse().unwrap());
                assert!((a - b).abs() < 1e-6, "n={}: {a} vs {b}", r[0]);
            }
        }
    }
}

#[test]
fn csv_has_nine_significant_digits() {
    let text = stdout(&["sweep", "--steps", "3", "--depth", "12"]);
    let (header, rows) = read_csv(&text);
    assert_eq!(header, ["phi", "estimate"]);
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0][0], "1.57079633");
    assert_eq!(rows[2][0], "3.14159265");
}

#[test]
fn exit_codes() {
    let out = cxbase(&["classify", "--n", "2", "--d", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    assert_eq!(cxbase(&["encode", "--n", "2", "--d", "-1", "--point", "1"]).status.code(), Some(1));
    assert_eq!(cxbase(&["decode", "--n", "2", "--d", "-1", "--digits", "0,2"]).status.code(), Some(1));
    assert_eq!(cxbase(&["cubic", "--m", "2", "--a", "7"]).status.code(), Some(1));
    assert_eq!(cxbase(&["frobnicate"]).status.code(), Some(1));
    let out = cxbase(&["render", "int", "--n", "2", "--d", "2", "--k", "4", "--res", "32", "--out", "/nonexistent-dir/x.ppm"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ppm_and_svg_files() {
    let dir = tempfile::tempdir().unwrap();
    let ppm = dir.path().join("f.ppm");
    stdout(&["render", "frac", "--n", "2", "--d", "-2", "--k", "10", "--res", "64", "--out", ppm.to_str().unwrap()]);
    let bytes = std::fs::read(&ppm).unwrap();
    assert!(bytes.starts_with(b"P6\n"));
    let header = String::from_utf8_lossy(&bytes[..20]).to_string();
    let mut parts = header.split_whitespace().skip(1);
    let (w, h): (usize, usize) = (parts.next().unwrap().parse().unwrap(), parts.next().unwrap().parse().unwrap());
    assert_eq!(parts.next(), Some("255"));
    assert_eq!(bytes.len(), format!("P6\n{w} {h}\n255\n").len() + 3 * w * h);

    let svg = dir.path().join("b.svg");
    stdout(&["boundary", "--n", "3", "--d", "-2", "--k", "4", "--svg", svg.to_str().unwrap()]);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.contains("version=\"1.1\""));
    assert_eq!(text.matches("<path").count(), 1);
    let hull = dir.path().join("h.svg");
    let v = json(&["hull", "--n", "2", "--d", "-1", "--svg", hull.to_str().unwrap(), "--json"]);
    assert!((v["perimeter"].as_f64().unwrap() - 4.82843).abs() < 1e-5);
    assert_eq!(std::fs::read_to_string(&hull).unwrap().matches("<path").count(), 1);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let p = dir.path().join(name);
        stdout(&["render", "frac", "--n", "3", "--d", "-1", "--k", "8", "--res", "96", "--sample", "20000", "--seed", "7", "--out", p.to_str().unwrap()]);
        std::fs::read(p).unwrap()
    };
    assert_eq!(run("a.ppm"), run("b.ppm"));
    let args = ["coverage", "--n", "2", "--d", "-1", "--k", "9", "--res", "96", "--json"];
    assert_eq!(stdout(&args), stdout(&args));
    let v = json(&args);
    assert!(v["covered_fraction"].as_f64().unwrap() >= 0.99);
    assert_eq!(v["window"]["x0"], -2.0);
}

#[test]
fn cubic_command() {
    let v = json(&["cubic", "--m", "2", "--a", "3", "--json"]);
    assert_eq!(v["proper"], true);
    let v = json(&["cubic", "--m", "2", "--a", "1", "--positive-r", "--json"]);
    assert_eq!(v["proper"], false);
    let cycle = v["attractors"].as_array().unwrap().iter().find(|a| a["kind"] == "Cycle").unwrap();
    assert_eq!(cycle["points"].as_array().unwrap().len(), 2);
}
