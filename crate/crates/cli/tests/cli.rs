use std::path::Path;
use std::process::{Command, Output};

use lamina_cli::{RunReport, RunResults};

fn lamina(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lamina"))
        .args(args)
        .env_remove("LAMINA_DB")
        .env("SOURCE_DATE_EPOCH", "1700000000")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn rows(csv_text: &str) -> Vec<Vec<String>> {
    csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(csv_text.as_bytes())
        .records()
        .map(|r| r.unwrap().iter().map(str::to_owned).collect())
        .collect()
}

#[test]
fn golden_outputs_are_byte_identical() {
    let cases: [(&[&str], &str, i32); 6] = [
        (&["min-nu", "--all"], "min_nu_all.csv", 0),
        (&["max-zone", "--all"], "max_zone_all.csv", 0),
        (
            &["nu12", "2", "--angle-ply", "23.5", "--theta-grid", "90"],
            "nu12_2_angle_ply.csv",
            0,
        ),
        (&["materials", "list"], "materials_list.csv", 0),
        (&["materials", "validate"], "materials_validate.csv", 2),
        (
            &["xi-domain", "2", "--resolution", "41", "--markers"],
            "xi_domain_2.csv",
            0,
        ),
    ];
    for (args, file, code) in cases {
        let o = lamina(args);
        assert_eq!(o.status.code(), Some(code), "{args:?}");
        assert_eq!(stdout(&o), golden(file), "{args:?}");
    }
}

#[test]
fn repeated_runs_are_identical() {
    for args in [
        &["min-nu", "--all", "--format", "json"][..],
        &["xi-domain", "5", "--format", "json"],
    ] {
        assert_eq!(lamina(args).stdout, lamina(args).stdout);
    }
}

#[test]
fn exit_code_contract() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.csv");
    std::fs::write(&empty, "").unwrap();
    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "name,E1,E2,G12,nu12\nok,10,1,0.5,0.3\nbroken,ten,1,0.5,0.3\n").unwrap();
    let empty = empty.to_str().unwrap();
    let bad = bad.to_str().unwrap();

    let cases: [(&[&str], i32); 14] = [
        (&["--help"], 0),
        (&["--version"], 0),
        (&["materials", "show", "2"], 0),
        (&["--db", empty, "materials", "list"], 2),
        (&["--db", bad, "materials", "list"], 2),
        (&["--db", "/nonexistent/db.csv", "materials", "list"], 2),
        (&["materials", "validate"], 2),
        (&[], 3),
        (&["frobnicate"], 3),
        (&["nu12", "2"], 3),
        (&["nu12", "2", "--point", "0.9", "-0.9"], 3),
        (&["nu12", "2", "--angle-ply", "120"], 3),
        (&["min-nu", "42"], 3),
        (&["--tolerance", "speed=1", "materials", "validate"], 3),
    ];
    for (args, code) in cases {
        assert_eq!(lamina(args).status.code(), Some(code), "{args:?}");
    }
    let o = lamina(&["--db", empty, "materials", "list"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("no materials"));
    let o = lamina(&["--db", bad, "materials", "list"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn tolerance_override_and_env_db() {
    let o = lamina(&[
        "--tolerance",
        "modulus=0.02",
        "--tolerance",
        "ratio=0.01",
        "materials",
        "validate",
    ]);
    assert_eq!(o.status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let db = dir.path().join("one.json");
    std::fs::write(
        &db,
        r#"[{"name": "T300/5208", "E1": 181, "E2": 10.3, "G12": 7.17, "nu12": 0.28}]"#,
    )
    .unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_lamina"))
        .args(["materials", "list"])
        .env("LAMINA_DB", &db)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(rows(&stdout(&o)).len(), 1);
}

#[test]
fn non_physical_row_is_flagged() {
    let dir = tempfile::tempdir().unwrap();
    let db = dir.path().join("db.csv");
    std::fs::write(&db, "name,E1,E2,G12,nu12\nodd,10,1,1,3.5\n").unwrap();
    let o = lamina(&["--db", db.to_str().unwrap(), "materials", "validate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("non-physical"));
    let o = lamina(&["--db", db.to_str().unwrap(), "min-nu", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn table_rows_parse_back_within_tolerance() {
    let t2: [[f64; 5]; 3] = [
        [-0.33, 39.1, 0.68, -0.07, 23.5],
        [-0.94, 33.1, 0.74, 0.10, 21.0],
        [-0.12, 42.8, 0.59, -0.29, 26.8],
    ];
    let got = rows(&stdout(&lamina(&["min-nu", "--all"])));
    assert_eq!(got.len(), 15);
    for (i, want) in [1usize, 9, 14].into_iter().zip(t2) {
        let r: Vec<f64> = got[i][2..7].iter().map(|s| s.parse().unwrap()).collect();
        let tol = [0.01, 0.2, 0.01, 0.01, 0.2];
        for k in 0..5 {
            assert!((r[k] - want[k]).abs() <= tol[k] + 1e-9, "row {i}: {r:?}");
        }
        assert_eq!(got[i][7], "true");
    }

    let got = rows(&stdout(&lamina(&["max-zone", "--all"])));
    let want5 = [0.94, 0.75, 16.2, 73.8, 57.6, 10.3, -0.36, 30.5];
    let r: Vec<f64> = got[4][2..10].iter().map(|s| s.parse().unwrap()).collect();
    let tol = [0.01, 0.01, 0.2, 0.2, 0.2, 0.2, 0.01, 0.2];
    for k in 0..8 {
        assert!((r[k] - want5[k]).abs() <= tol[k] + 1e-9, "{r:?}");
    }
    assert_eq!(got[0][10], "true");
    assert_eq!(&got[0][2..4], ["1.0000", "1.0000"]);
    let width7: f64 = got[6][6].parse().unwrap();
    assert!(width7 < 45.0);
}

#[test]
fn nu12_sweeps() {
    let got = rows(&stdout(&lamina(&[
        "nu12",
        "2",
        "--angle-ply",
        "23.5",
        "--theta-grid",
        "3600",
    ])));
    assert_eq!(got.len(), 3601);
    let (theta, nu) = got
        .iter()
        .map(|r| (r[0].parse::<f64>().unwrap(), r[1].parse::<f64>().unwrap()))
        .fold((0.0, f64::INFINITY), |b, x| if x.1 < b.1 { x } else { b });
    assert!(
        (theta - 39.1).abs() <= 0.2 && (nu + 0.33).abs() <= 0.01,
        "({theta}, {nu})"
    );

    let got = rows(&stdout(&lamina(&["nu12", "2", "--point", "0", "0"])));
    assert_eq!(got.len(), 181);
    assert!(got.iter().all(|r| r[1] == got[0][1]));

    let got = rows(&stdout(&lamina(&[
        "nu12",
        "5",
        "--angle-ply",
        "10.3",
        "--theta-grid",
        "900",
    ])));
    let signs: Vec<(f64, bool)> = got
        .iter()
        .map(|r| (r[0].parse().unwrap(), r[1].parse::<f64>().unwrap() < 0.0))
        .collect();
    let changes: Vec<f64> = signs.windows(2).filter(|w| w[0].1 != w[1].1).map(|w| w[1].0).collect();
    assert_eq!(changes.len(), 2);
    assert!(
        (changes[0] - 16.2).abs() <= 0.2 && (changes[1] - 73.8).abs() <= 0.2,
        "{changes:?}"
    );
}

#[test]
fn xi_domain_points_lie_on_eta_zero() {
    use lamina_core::{eta, in_domain, LaminationPoint, MaterialDatabase};
    let m = MaterialDatabase::bundled()
        .find("2")
        .unwrap()
        .design_material()
        .unwrap();
    let o = lamina(&["xi-domain", "2", "--format", "json"]);
    let report: RunReport = serde_json::from_slice(&o.stdout).unwrap();
    let RunResults::Feasibility(xi) = report.results else {
        panic!("wrong result kind")
    };
    assert!(xi.feasibility.feasible);
    assert!(xi.feasibility.argmin.on_parabola(1e-6));
    assert!(!xi.feasibility.xi_boundary.is_empty());
    for line in &xi.feasibility.xi_boundary {
        for p in line {
            assert!(in_domain(p) && eta(&m, p).abs() <= 1e-6);
        }
    }
    // the region between the two branches, near the η minimum, is auxetic
    assert!(eta(&m, &LaminationPoint::new(0.6, -0.2)) < 0.0);
}

#[test]
fn plots() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("nu.csv");
    std::fs::write(&csv, stdout(&lamina(&["nu12", "2", "--angle-ply", "23.5"]))).unwrap();
    let svg = dir.path().join("nu.svg");
    let o = lamina(&[
        "plot",
        csv.to_str().unwrap(),
        "--kind",
        "polar-nu12",
        "-o",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<?xml") && text.contains(r#"class="zero""#) && text.trim_end().ends_with("</svg>"));

    let map = dir.path().join("map.csv");
    std::fs::write(&map, stdout(&lamina(&["xi-domain", "2", "--markers"]))).unwrap();
    let o = lamina(&["plot", map.to_str().unwrap(), "--kind", "domain-map"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for class in ["legend", "eta-min", "nu-min", "zone-max", "xi-boundary", "domain"] {
        assert!(text.contains(&format!(r#"class="{class}""#)), "{class}");
    }

    let o = lamina(&["plot", map.to_str().unwrap(), "--kind", "polar-nu12"]);
    assert_eq!(o.status.code(), Some(3));
    let empty = dir.path().join("empty.csv");
    std::fs::write(&empty, "theta_deg,nu12\n").unwrap();
    assert_eq!(
        lamina(&["plot", empty.to_str().unwrap(), "--kind", "polar-nu12"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn json_reports_round_trip() {
    for args in [
        &["min-nu", "2", "--format", "json"][..],
        &["max-zone", "1", "--format", "json"],
        &["nu12", "3", "--angle-ply", "20", "--format", "json"],
    ] {
        let text = stdout(&lamina(args));
        let report: RunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(report.timestamp, 1_700_000_000);
        assert_eq!(
            report.command[1..],
            args.iter().map(|s| s.to_string()).collect::<Vec<_>>()[..]
        );
        let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
        assert_eq!(again, text);
    }
    let all: Vec<RunReport> =
        serde_json::from_slice(&lamina(&["max-zone", "--all", "--format", "json"]).stdout).unwrap();
    assert_eq!(
        all.iter().map(|r| r.material.unwrap()).collect::<Vec<_>>(),
        (1..=15).collect::<Vec<_>>()
    );
}
