use std::process::{Command, Output};

fn octaq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octaq")).args(args).env_remove("OCTAQ_RESOLUTION").output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn classify_prints_a_report() {
    let out = octaq(&["classify", "--coeffs", "1,0,-1,0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["case_label"], "cuboid_inside_stellated_octahedron");
    assert_eq!(v["components"], 2);
    assert_eq!(v["unbounded"], true);
    assert_eq!(v["family"]["family"], "B_ZERO");
}

#[test]
fn classify_text_format() {
    let out = octaq(&["classify", "--coeffs", "0,1,-1,1/8", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("two_nested_spheres"));
    assert_eq!(s.matches("radius:").count(), 2);
}

#[test]
fn verify_agrees_on_nested_components() {
    let out = octaq(&["verify", "--coeffs", "1,0,-1,0.5", "--resolution", "64"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["agreement"], "agree");
    assert_eq!(v["crossing_components"], 2);
}

#[test]
fn resolution_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_octaq"))
        .args(["verify", "--coeffs", "0,1,0,-1"])
        .env("OCTAQ_RESOLUTION", "32")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["resolution"], 32);
    let bad = Command::new(env!("CARGO_BIN_EXE_octaq"))
        .args(["verify", "--coeffs", "0,1,0,-1"])
        .env("OCTAQ_RESOLUTION", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(octaq(&["classify", "--coeffs", "0,0,1,1"]).status.code(), Some(2));
    assert_eq!(octaq(&["classify", "--coeffs", "1,2,3"]).status.code(), Some(2));
    assert_eq!(octaq(&["classify", "--coeffs", "1,x,0,0"]).status.code(), Some(2));
    assert_eq!(octaq(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(octaq(&["classify"]).status.code(), Some(1));
    assert_eq!(octaq(&["verify", "--coeffs", "1,0,-1,0", "--resolution", "4"]).status.code(), Some(1));
    assert_eq!(octaq(&["sweep", "--family", "eps", "--eps1", "1", "--beta", "1", "--k-range", "0:1:1"]).status.code(), Some(1));
    assert_eq!(octaq(&["--help"]).status.code(), Some(0));
}

#[test]
fn sweep_writes_csv_in_grid_order() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let out = octaq(&[
        "sweep", "--family", "eps", "--eps1", "1", "--eps2", "-1", "--beta-range", "1:2:1", "--k-range", "-1:1:1/2",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header[0], "family");
    assert_eq!(header.last().unwrap(), "error");
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 10);
    let col = |name: &str| header.iter().position(|h| h == name).unwrap();
    assert_eq!(&rows[0][col("beta")], "1");
    assert_eq!(&rows[0][col("k")], "-1");
    assert_eq!(&rows[5][col("beta")], "2");
    assert_eq!(&rows[2][col("case_label")], "octahedron_plus_origin");
    assert_eq!(&rows[2][col("sing_orbit_1")], "1");
    assert_eq!(&rows[4][col("sing_orbit_6")], "1");
}

#[test]
fn sweep_other_families() {
    for args in [
        &["sweep", "--family", "a0", "--eps2", "-1", "--d-range", "-1:1:1/4"][..],
        &["sweep", "--family", "b0", "--eps2", "1", "--d-range", "-1:1:1/4"][..],
        &["sweep", "--family", "c0", "--b-range", "-1:1:1/2", "--d-range", "-1:1:1"][..],
    ] {
        let out = octaq(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let lines = String::from_utf8(out.stdout).unwrap().lines().count();
        assert!(lines > 5, "{args:?}");
    }
}

#[test]
fn mesh_writes_obj() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sphere.obj");
    let out = octaq(&["mesh", "--coeffs", "0,1,0,-1", "--resolution", "32", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let obj = std::fs::read_to_string(&path).unwrap();
    let verts: Vec<[f64; 3]> = obj
        .lines()
        .filter_map(|l| l.strip_prefix("v "))
        .map(|l| {
            let c: Vec<f64> = l.split(' ').map(|t| t.parse().unwrap()).collect();
            [c[0], c[1], c[2]]
        })
        .collect();
    assert!(!verts.is_empty());
    assert!(verts.iter().all(|v| ((v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt() - 1.0).abs() < 0.1));
    assert!(obj.lines().any(|l| l.starts_with("f ")));
    assert_eq!(octaq(&["mesh", "--coeffs", "1,1,1,1", "--resolution", "16"]).status.code(), Some(2));
}

#[test]
fn group_dump_has_48_matrices() {
    let out = octaq(&["group", "--dump"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 48);
    assert_eq!(arr.iter().filter(|e| e["det"] == 1).count(), 24);
}
