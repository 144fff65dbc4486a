use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use aperiodic::coords::{Isometry, Point8, Scalar};
use aperiodic::graph::WindowMode;
use aperiodic::substitution::{generate, AmmannBeenker, AnyPatch, TileKind};
use aperiodic_cli::patch_file::{Coeff, PatchFile};
use aperiodic_cli::{read_patch, summarize};
use num_bigint::BigInt;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aperiodic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    assert!(
        o.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn generated(dir: &Path, family: &str, seed: &str, n: u32) -> PathBuf {
    let path = dir.join(format!("{family}-{seed}-{n}.json"));
    let o = bin(&[
        "generate",
        "--family",
        family,
        "--seed",
        seed,
        "--gen",
        &n.to_string(),
        "--out",
        path.to_str().unwrap(),
    ]);
    stdout(&o);
    path
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

/// The original degree counter: doubles in pairs up to "0 0", four corners
/// per tile, repeated tiles dropped, a strictly interior bounding-box window
/// and the number of corners on each point as its degree.
fn reference_reader(text: &str) -> (usize, f64) {
    let nums: Vec<f64> = text
        .split_whitespace()
        .map(|s| s.parse().unwrap())
        .collect();
    let mut pts = Vec::new();
    for p in nums.chunks(2) {
        if p[0] == 0.0 && p[1] == 0.0 {
            break;
        }
        pts.push((p[0], p[1]));
    }
    let count = pts.len();
    let mut tiles: Vec<&[(f64, f64)]> = Vec::new();
    for t in pts.chunks(4) {
        if !tiles.contains(&t) {
            tiles.push(t);
        }
    }
    let corners: Vec<(f64, f64)> = tiles.concat();
    let (mut x0, mut y0, mut x1, mut y1) = (10000.0f64, 10000.0f64, 0.0f64, 0.0f64);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let mut inside: Vec<(f64, f64)> = Vec::new();
    for &(x, y) in &corners {
        if x > x0 && x < x1 && y > y0 && y < y1 && !inside.contains(&(x, y)) {
            inside.push((x, y));
        }
    }
    let total: usize = inside
        .iter()
        .map(|p| corners.iter().filter(|c| *c == p).count())
        .sum();
    (count, total as f64 / inside.len() as f64)
}

#[test]
fn generate_counts() {
    let dir = tempfile::tempdir().unwrap();
    let file = PatchFile::from_json(
        &std::fs::read_to_string(generated(dir.path(), "ab", "square", 1)).unwrap(),
    )
    .unwrap();
    assert_eq!(file.tiles.len(), 9);
    assert_eq!(file.tiles.iter().filter(|t| t.kind == "rhomb").count(), 4);
    assert_eq!(
        (
            file.family.as_str(),
            file.seed_kind.as_str(),
            file.generation
        ),
        ("ab", "square", 1)
    );
    let one = PatchFile::from_json(&stdout(&bin(&[
        "generate", "--family", "a2", "--seed", "small", "--gen", "0",
    ])))
    .unwrap();
    assert_eq!(one.tiles.len(), 1);
    assert_eq!(one.tiles[0].vertices.len(), 6);
    assert_eq!(one.tiles[0].vertices[0].len(), 2);
}

#[test]
fn generate_is_deterministic() {
    let args = [
        "generate", "--family", "pkd", "--seed", "kite", "--gen", "5",
    ];
    assert_eq!(stdout(&bin(&args)), stdout(&bin(&args)));
}

#[test]
fn patch_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (family, seed, n) in [
        ("pkd", "dart", 4),
        ("pr", "thin", 4),
        ("ab", "rhomb", 2),
        ("a2", "large", 9),
    ] {
        let path = generated(dir.path(), family, seed, n);
        let text = std::fs::read_to_string(&path).unwrap();
        let patch = read_patch(&path).unwrap();
        assert_eq!(PatchFile::from_patch(&patch).to_json(), text);
        assert_eq!(
            patch.len(),
            PatchFile::from_json(&text).unwrap().tiles.len()
        );
    }
    // placements come back exactly
    let direct = generate::<AmmannBeenker>(TileKind::Square, 2).unwrap();
    let AnyPatch::Beenker(read) = read_patch(&generated(dir.path(), "ab", "square", 2)).unwrap()
    else {
        panic!()
    };
    for (a, b) in direct.tiles.iter().zip(&read.tiles) {
        assert_eq!((&a.placement, &a.vertices), (&b.placement, &b.vertices));
    }
}

#[test]
fn big_coefficients_are_strings() {
    let mut patch = generate::<AmmannBeenker>(TileKind::Rhomb45, 1).unwrap();
    let huge = BigInt::from(10).pow(30);
    let shift = Point8::new(Scalar::from_coeffs([
        huge.clone(),
        BigInt::from(0),
        -huge,
        BigInt::from(1),
    ]));
    patch.tiles = patch
        .tiles
        .iter()
        .map(|t| t.transformed(&Isometry::translate(shift.clone())))
        .collect();
    let file = PatchFile::from_patch(&AnyPatch::Beenker(patch));
    let first = &file.tiles[0].vertices[0][0];
    assert!(first.iter().any(|c| matches!(c, Coeff::Text(_))));
    assert!(first.iter().any(|c| matches!(c, Coeff::Int(_))));
    let again = PatchFile::from_json(&file.to_json()).unwrap();
    assert_eq!(again, file);
    assert_eq!(PatchFile::from_patch(&again.to_patch().unwrap()), file);
}

#[test]
fn malformed_patches_are_data_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = generated(dir.path(), "pkd", "kite", 1);
    let mut file = PatchFile::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    file.tiles[0].vertices[1][0][0] = Coeff::Int(7);
    let bent = dir.path().join("bent.json");
    std::fs::write(&bent, file.to_json()).unwrap();
    let o = bin(&["stats", bent.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a placed"));
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{\"family\":").unwrap();
    assert_eq!(
        bin(&["stats", junk.to_str().unwrap()]).status.code(),
        Some(3)
    );
    assert_eq!(
        bin(&["stats", "/no/such/patch.json"]).status.code(),
        Some(3)
    );
}

#[test]
fn usage_errors() {
    for args in [
        vec!["generate", "--family", "ab", "--seed", "kite", "--gen", "1"],
        vec![
            "generate", "--family", "hex", "--seed", "kite", "--gen", "1",
        ],
        vec![
            "generate", "--family", "ab", "--seed", "square", "--gen", "99",
        ],
        vec!["stats", "x.json", "--window", "interior"],
        vec!["frobnicate"],
        vec!["a2", "--from", "5", "--to", "2"],
    ] {
        assert_eq!(bin(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn stats_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let a2 = generated(dir.path(), "a2", "small", 1);
    let s = json(&bin(&["stats", a2.to_str().unwrap()]));
    assert_eq!(
        (s["V"].as_u64(), s["T"].as_u64(), s["avg"].as_f64()),
        (Some(6), Some(12), Some(2.0))
    );
    let ab = generated(dir.path(), "ab", "square", 1);
    let s = json(&bin(&["stats", ab.to_str().unwrap(), "--window", "compat"]));
    assert_eq!(s["ratio"], "8/3");
    assert_eq!(s["window"], "compat");
    let hist: u64 = s["histogram"]
        .as_object()
        .unwrap()
        .values()
        .map(|v| v.as_u64().unwrap())
        .sum();
    assert_eq!(hist, s["V"].as_u64().unwrap());

    let paths: Vec<PathBuf> = (1..=3)
        .map(|n| generated(dir.path(), "pr", "fat", n))
        .collect();
    let mut args = vec!["stats", "--window", "compat", "--format", "csv"];
    args.extend(paths.iter().map(|p| p.to_str().unwrap()));
    let csv = stdout(&bin(&args));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "generation,V,T,avg");
    assert_eq!(lines.len(), 4);
    assert!(
        lines[3].starts_with("3,") && lines[3].ends_with(",3.126761"),
        "{}",
        lines[3]
    );
}

#[test]
fn empty_window_is_its_own_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let one = generated(dir.path(), "pkd", "kite", 0);
    let o = bin(&["stats", one.to_str().unwrap(), "--window", "middle-third"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no vertices"));
}

#[test]
fn a2_command() {
    let table = stdout(&bin(&["a2", "--from", "1", "--to", "9"]));
    let rows: Vec<&str> = table.lines().collect();
    assert_eq!(rows[0], "k,V,T,avg");
    let vt: Vec<String> = rows[1..]
        .iter()
        .map(|r| r.split(',').take(3).collect::<Vec<_>>().join(","))
        .collect();
    assert_eq!(
        vt,
        [
            "1,6,12", "2,6,12", "3,9,20", "4,12,28", "5,18,44", "6,26,66", "7,40,104", "8,61,162",
            "9,95,256"
        ]
    );
    assert_eq!(
        stdout(&bin(&["a2", "--limit"])).trim(),
        "2.8396425434090715"
    );
    let j = json(&bin(&["a2", "--limit", "--format", "json"]));
    assert_eq!(j["exact"], "29/11 + 1/11·√5");
}

#[test]
fn extrapolate_command() {
    let j = json(&bin(&[
        "extrapolate",
        &data("dart.csv"),
        "--use-generations",
        "3,5,6,7,8,9",
    ]));
    assert!((j["intercept"].as_f64().unwrap() - 3.89151).abs() < 5e-4);
    assert_eq!(j["pairs"].as_array().unwrap().len(), 6);
    let j = json(&bin(&["extrapolate", &data("thin.txt"), "--start", "4"]));
    assert!((j["slope"].as_f64().unwrap() + 2.93142).abs() < 5e-4);
    assert!((j["intercept"].as_f64().unwrap() - 4.08498).abs() < 5e-4);
    let csv = stdout(&bin(&[
        "extrapolate",
        &data("thin.txt"),
        "--start",
        "4",
        "--format",
        "csv",
    ]));
    assert_eq!(csv.lines().nth(1).unwrap().split(',').nth(2), Some("4.085"));
    assert_eq!(
        bin(&["extrapolate", &data("flat.txt"), "--start", "2"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        bin(&["extrapolate", &data("thin.txt"), "--start", "8"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        bin(&["extrapolate", &data("bad_series.txt")]).status.code(),
        Some(3)
    );
    assert_eq!(
        bin(&["extrapolate", &data("thin.txt"), "--use-generations", "1,2"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn svg_has_one_polygon_per_tile() {
    let dir = tempfile::tempdir().unwrap();
    for (family, seed, n) in [("pkd", "kite", 4), ("a2", "small", 8)] {
        let patch = generated(dir.path(), family, seed, n);
        let tiles = read_patch(&patch).unwrap().len();
        let plain = stdout(&bin(&["render-svg", patch.to_str().unwrap()]));
        assert_eq!(plain.matches("<polygon").count(), tiles);
        assert_eq!(plain.matches(r#"fill="none""#).count(), tiles);
        let out = dir.path().join("out.svg");
        stdout(&bin(&[
            "render-svg",
            patch.to_str().unwrap(),
            "--fill-by-kind",
            "--stroke",
            "0.1",
            "--out",
            out.to_str().unwrap(),
        ]));
        let filled = std::fs::read_to_string(out).unwrap();
        assert_eq!(filled.matches(r#"fill="none""#).count(), 0);
        assert_eq!(filled.matches(r#"stroke-width="0.1""#).count(), tiles);
    }
    let patch = generated(dir.path(), "ab", "square", 0);
    assert_eq!(
        bin(&["render-svg", patch.to_str().unwrap(), "--stroke", "-1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn compat_dump_matches_the_reference_reader() {
    let dir = tempfile::tempdir().unwrap();
    for (family, seed, n) in [
        ("pkd", "dart", 5),
        ("pkd", "kite", 4),
        ("pr", "fat", 4),
        ("pr", "thin", 3),
        ("ab", "square", 2),
        ("ab", "rhomb", 2),
    ] {
        let path = generated(dir.path(), family, seed, n);
        let dump = stdout(&bin(&["dump", path.to_str().unwrap(), "--compat-quad"]));
        assert_eq!(dump.lines().last(), Some("0 0"));
        assert!(dump.lines().all(|l| l.split(' ').count() == 2));
        let patch = read_patch(&path).unwrap();
        let (count, average) = reference_reader(&dump);
        assert_eq!(count, 4 * patch.len(), "{family} {seed} {n}");
        let ours = summarize(&patch, WindowMode::InteriorBBoxCompat)
            .unwrap()
            .average();
        assert!(
            (average - ours).abs() < 1e-12,
            "{family} {seed} {n}: {average} vs {ours}"
        );
    }
}

#[test]
fn compat_dump_refuses_hexagons() {
    let dir = tempfile::tempdir().unwrap();
    let path = generated(dir.path(), "a2", "small", 4);
    let o = bin(&["dump", path.to_str().unwrap(), "--compat-quad"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("hexagons"));
}
