use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use incomplete_cli::output::read_representatives;
use incomplete_core::Platonic;

fn incomplete(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_incomplete"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn prism_path() -> String {
    format!(
        "{}/../core/tests/data/triangular_prism.json",
        env!("CARGO_MANIFEST_DIR")
    )
}

#[test]
fn enumerate_cube_reports_total() {
    let o = incomplete(&["enumerate", "--solid", "cube", "--no-reps"]);
    assert!(o.status.success());
    let line = stdout(&o);
    let fields: Vec<&str> = line.trim().split(", ").collect();
    assert_eq!(
        fields[..3],
        ["cube", "connected+nonplanar+proper+nonempty", "122"]
    );
    assert!(fields[3].parse::<f64>().is_ok());
}

#[test]
fn tetrahedron_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.csv");
    let reps = dir.path().join("reps.txt");
    let obj = dir.path().join("obj");
    let o = Command::new(env!("CARGO_BIN_EXE_incomplete"))
        .args(["enumerate", "--solid", "tetrahedron", "--histogram"])
        .arg(&h)
        .arg("--reps")
        .arg(&reps)
        .arg("--obj")
        .arg(&obj)
        .output()
        .unwrap();
    assert!(o.status.success(), "{o:?}");
    assert_eq!(
        fs::read_to_string(&h).unwrap(),
        "edges,count\n3,3\n4,2\n5,1\n"
    );

    let masks = read_representatives(&reps).unwrap();
    assert_eq!(masks.len(), 6);
    assert!(masks.windows(2).all(|w| w[0] < w[1]));
    let text = fs::read_to_string(&reps).unwrap();
    let rewritten: String = masks.iter().map(|m| format!("{m:x}\n")).collect();
    assert_eq!(text, rewritten);

    let solid = Platonic::Tetrahedron.solid();
    let mut files: Vec<_> = fs::read_dir(&obj)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    assert_eq!(files.len(), 6);
    for (path, &mask) in files.iter().zip(&masks) {
        let (verts, lines) = parse_obj(path);
        assert_eq!(verts.len(), 4);
        assert_eq!(lines.len() as u32, mask.count_ones());
        for (a, b) in lines {
            let e = solid.edge_index(a - 1, b - 1).unwrap();
            assert!(mask & (1 << e) != 0);
        }
        for (v, p) in verts.iter().zip(solid.vertices()) {
            let expect = p.to_f64();
            assert!(v.iter().zip(expect).all(|(x, y)| (x - y).abs() < 1e-9));
        }
    }
}

/// Minimal OBJ reader: `v x y z` and `l i j` records.
fn parse_obj(path: &Path) -> (Vec<[f64; 3]>, Vec<(usize, usize)>) {
    let mut verts = Vec::new();
    let mut lines = Vec::new();
    for line in fs::read_to_string(path).unwrap().lines() {
        let mut it = line.split_whitespace();
        match it.next() {
            Some("v") => {
                let c: Vec<f64> = it.map(|x| x.parse().unwrap()).collect();
                verts.push([c[0], c[1], c[2]]);
            }
            Some("l") => {
                let c: Vec<usize> = it.map(|x| x.parse().unwrap()).collect();
                assert_eq!(c.len(), 2);
                lines.push((c[0], c[1]));
            }
            Some("#") | None => {}
            Some(other) => panic!("unexpected record {other}"),
        }
    }
    (verts, lines)
}

#[test]
fn verify_small_solids_and_prism() {
    for solid in ["tetrahedron", "cube", "octahedron", &prism_path()] {
        let o = incomplete(&["verify", "--solid", solid]);
        assert_eq!(o.status.code(), Some(0), "{solid}: {}", stdout(&o));
        assert!(stdout(&o).trim_end().ends_with("ok"));
    }
    let o = incomplete(&["verify", "--solid", "octahedron"]);
    assert!(stdout(&o).contains("sweep 218, burnside 218"));
}

#[test]
fn burnside_prints_orbit_count() {
    let o = incomplete(&["burnside", "--solid", "cube"]);
    assert_eq!(stdout(&o), "cube, 218\n");
    let o = incomplete(&["burnside", "--solid", "icosahedron"]);
    assert!(o.status.success());
}

#[test]
fn dump_group_lists_every_element() {
    let o = incomplete(&["dump-group", "--solid", "icosahedron"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let elements: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(elements.len(), 60);
    assert_eq!(elements[0], "0: ()");
}

#[test]
fn filter_flags() {
    let o = incomplete(&["enumerate", "--solid", "cube", "--no-filter", "--no-reps"]);
    assert!(stdout(&o).starts_with("cube, none, 218,"));
    let o = incomplete(&[
        "enumerate",
        "--solid",
        "cube",
        "--filters",
        "connected",
        "--no-reps",
    ]);
    assert!(stdout(&o).starts_with("cube, connected, "));
    let o = incomplete(&["enumerate", "--solid", "cube", "--filters", "round"]);
    assert_eq!(o.status.code(), Some(2));
    let o = incomplete(&[
        "enumerate",
        "--solid",
        "cube",
        "--filters",
        "connected",
        "--no-filter",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(
        incomplete(&["enumerate", "--solid", "nonagon"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        incomplete(&["enumerate", "--solid", "cube", "--workers", "0"])
            .status
            .code(),
        Some(2)
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"name\": 3}").unwrap();
    let o = incomplete(&["enumerate", "--solid", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let unwritable = dir.path().join("missing-dir").join("reps.txt");
    let o = incomplete(&[
        "enumerate",
        "--solid",
        "cube",
        "--reps",
        unwritable.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("writing"));
}

#[test]
fn histogram_rows_sum_to_total() {
    let dir = tempfile::tempdir().unwrap();
    for solid in ["tetrahedron", "cube", "octahedron"] {
        let h = dir.path().join(format!("{solid}.csv"));
        let o = Command::new(env!("CARGO_BIN_EXE_incomplete"))
            .args(["enumerate", "--solid", solid, "--no-reps", "--histogram"])
            .arg(&h)
            .output()
            .unwrap();
        let total: u64 = stdout(&o).split(", ").nth(2).unwrap().parse().unwrap();
        let sum: u64 = fs::read_to_string(&h)
            .unwrap()
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(1).unwrap().parse::<u64>().unwrap())
            .sum();
        assert_eq!(sum, total, "{solid}");
    }
}

#[test]
fn builtin_round_trips_through_spec_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cube.json");
    fs::write(&path, Platonic::Cube.solid().to_json()).unwrap();
    let o = incomplete(&["enumerate", "--solid", path.to_str().unwrap(), "--no-reps"]);
    assert!(stdout(&o).starts_with("cube, connected+nonplanar+proper+nonempty, 122,"));
}
