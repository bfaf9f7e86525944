use serde_json::json;
use std::path::PathBuf;
use strongnear::fixtures;
use strongnear::Shape;
use strongnear_cli::app::{main_with, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_OK};
use strongnear_cli::checks::{run, RunOptions};
use strongnear_cli::load::{load, parse_scene};
use strongnear_cli::render::render_svg;
use strongnear_cli::report::Report;
use strongnear_cli::scene::{Scene, Verdict};

fn scene_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("scenes")
        .join(format!("{name}.json"))
}

fn bundled(name: &str) -> Scene {
    parse_scene(&std::fs::read_to_string(scene_path(name)).unwrap()).unwrap()
}

fn run_scene(scene: Scene) -> Report {
    run(&load(scene, None).unwrap(), &RunOptions::default())
}

fn shapes_of(scene: &Scene) -> Vec<(String, Shape)> {
    scene.shapes.iter().map(|s| (s.name.clone(), s.shape.clone())).collect()
}

fn verdicts(r: &Report) -> Vec<(&str, Verdict)> {
    r.records.iter().map(|x| (x.check.as_str(), x.verdict)).collect()
}

#[test]
fn bundled_geometry_matches_fixtures() {
    let planar = [
        ("fig1_1", fixtures::fig1_1()),
        ("fig2", fixtures::fig2()),
        ("fig3", fixtures::fig3()),
        ("fig4_connected", fixtures::fig4()),
        ("fig5_not_delta_connected", fixtures::fig5()),
        ("fig7", fixtures::fig7()),
        ("fig8", fixtures::fig8()),
        ("remark1", fixtures::remark1()),
    ];
    for (name, fixture) in planar {
        let scene = bundled(name);
        assert_eq!(shapes_of(&scene), fixture.shapes, "{name}");
        let grid = strongnear_cli::load::build_grid(scene.grid.as_ref().unwrap(), None).unwrap();
        assert_eq!(grid, fixture.grid, "{name}");
    }
    assert_eq!(bundled("fig1_1").maps[0].map, fixtures::fig1_1_rotation());
    assert_eq!(bundled("fig2").maps[0].map, fixtures::fig2_map(3));
    let fig3 = bundled("fig3");
    assert_eq!(fig3.maps[0].map, fixtures::inversion_map());
    let out = strongnear_cli::load::build_grid(fig3.maps[0].output_grid.as_ref().unwrap(), None).unwrap();
    assert_eq!(out, fixtures::fig3_output_grid());

    let fig6 = bundled("fig6_descriptive");
    let t = fig6.tessellation.as_ref().unwrap();
    let cells: Vec<_> = t
        .cells
        .iter()
        .map(|c| (c.name.clone(), c.color.clone(), c.shape.clone()))
        .collect();
    let want: Vec<_> = fixtures::fig6_cells()
        .into_iter()
        .map(|c| (c.name, c.color, c.shape))
        .collect();
    assert_eq!(cells, want);
    let family: Vec<_> = t
        .family
        .iter()
        .map(|f| (f.instant.as_str(), f.cell.as_str(), f.shape.clone()))
        .collect();
    assert_eq!(family, fixtures::fig6_family_shapes());
}

#[test]
fn every_bundled_scene_meets_its_expectations() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenes");
    let mut names: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    names.sort();
    assert!(names.len() >= 10);
    for p in names {
        let scene = parse_scene(&std::fs::read_to_string(&p).unwrap()).unwrap();
        let rep = run_scene(scene);
        assert!(rep.all_ok(), "{}: {}", p.display(), rep.to_json());
    }
}

#[test]
fn tangent_disks_report() {
    let rep = run_scene(bundled("fig5_not_delta_connected"));
    let v = verdicts(&rep);
    assert_eq!(v[0], ("is_connected", Verdict::Pass));
    assert_eq!(v[2], ("find_decomposition", Verdict::NoneFound));
}

#[test]
fn overlapping_disks_report_and_drawing() {
    let loaded = load(bundled("fig4_connected"), None).unwrap();
    let rep = run(&loaded, &RunOptions::default());
    assert_eq!(rep.records[0].verdict, Verdict::Pass);
    assert_eq!(rep.records[0].details["pieces"], json!(["X1", "X2"]));
    let svg = render_svg(&loaded, &rep).unwrap();
    assert!(svg.contains("id=\"set-X1\"") && svg.contains("id=\"set-X2\""));
    let first = svg
        .split("id=\"witness-0\"")
        .nth(1)
        .unwrap()
        .split("</g>")
        .next()
        .unwrap();
    assert_eq!(first.matches("<text").count(), 2);
    assert!(first.contains(">1</text>") && first.contains(">2</text>"));
}

#[test]
fn remark1_witness_names_the_pair() {
    let rep = run_scene(bundled("remark1"));
    let spc = rep.records.iter().find(|r| r.check == "spc").unwrap();
    assert_eq!(spc.verdict, Verdict::Fail);
    assert_eq!(spc.details["spc_witness"], json!({"a": "A", "b": "B"}));
    let open = rep.records.iter().find(|r| r.check == "open_map").unwrap();
    assert_eq!(open.verdict, Verdict::Pass);
}

fn strip_scene(checks: serde_json::Value) -> Scene {
    serde_json::from_value(json!({
        "version": 1,
        "name": "strip",
        "backend": "grid",
        "grid": {"window": [0.0, 0.0, 30.0, 10.0], "width": 30, "height": 10},
        "shapes": [
            {"name": "L", "shape": {"type": "rectangle", "corners": [[0.0, 0.0], [12.0, 10.0]]}},
            {"name": "M", "shape": {"type": "rectangle", "corners": [[9.0, 0.0], [21.0, 10.0]]}},
            {"name": "R", "shape": {"type": "rectangle", "corners": [[18.0, 0.0], [30.0, 10.0]]}},
            {"name": "nothing", "shape": {"type": "disk", "center": [5.0, 5.0], "radius": 0.1}}
        ],
        "relations": [{"name": "io", "kind": "interior_overlap"}],
        "checks": checks
    }))
    .unwrap()
}

#[test]
fn chain_of_three_links_is_numbered() {
    let scene = strip_scene(json!([
        {"check": "find_chain", "relation": "io", "cover": ["L", "M", "R"], "a": [1.5, 5.5], "b": [28.5, 5.5]}
    ]));
    let loaded = load(scene, None).unwrap();
    let rep = run(&loaded, &RunOptions::default());
    assert_eq!(rep.records[0].verdict, Verdict::Pass, "{}", rep.to_json());
    assert_eq!(rep.records[0].details["links"], json!(["L", "M", "R"]));
    let svg = render_svg(&loaded, &rep).unwrap();
    let overlay = svg
        .split("class=\"chain\"")
        .nth(1)
        .unwrap()
        .split("</g>")
        .next()
        .unwrap();
    assert_eq!(overlay.matches("<path").count(), 3);
    for k in 1..=3 {
        assert!(overlay.contains(&format!(">{k}</text>")));
    }
    // the tiny disk misses every pixel center but keeps its group
    let group = svg
        .split("<g id=\"set-nothing\"")
        .nth(1)
        .unwrap()
        .split('\n')
        .next()
        .unwrap();
    assert!(group.ends_with("\"></g>"), "{group}");
}

#[test]
fn report_round_trips() {
    let rep = run_scene(bundled("finite_line"));
    let back: Report = serde_json::from_str(&rep.to_json()).unwrap();
    assert_eq!(back, rep);
}

#[test]
fn runs_are_deterministic_including_parallel() {
    let loaded = load(bundled("fig8"), None).unwrap();
    let a = run(&loaded, &RunOptions::default());
    let b = run(
        &loaded,
        &RunOptions {
            parallel: true,
            ..RunOptions::default()
        },
    );
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(render_svg(&loaded, &a).unwrap(), render_svg(&loaded, &b).unwrap());
}

#[test]
fn empty_check_list() {
    let rep = run_scene(strip_scene(json!([])));
    assert!(rep.records.is_empty() && rep.all_ok());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.json");
    std::fs::write(&path, serde_json::to_string(&strip_scene(json!([]))).unwrap()).unwrap();
    let out = dir.path().join("out");
    let code = main_with([
        "strongnear",
        "run",
        path.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let text = std::fs::read_to_string(out.join("strip.report.json")).unwrap();
    assert!(text.ends_with('\n'));
    assert!(out.join("strip.svg").exists());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap().to_string();
    let failing = dir.path().join("failing.json");
    std::fs::write(
        &failing,
        serde_json::to_string(&strip_scene(json!([{"check": "intersects", "a": "L", "b": "R"}]))).unwrap(),
    )
    .unwrap();
    assert_eq!(
        main_with(["strongnear", "run", failing.to_str().unwrap(), "--out", &out]),
        EXIT_CHECK_FAILED
    );
    // the same check filtered away by a subcommand
    assert_eq!(
        main_with(["strongnear", "chain", failing.to_str().unwrap(), "--out", &out]),
        EXIT_OK
    );

    let broken = dir.path().join("broken.json");
    std::fs::write(
        &broken,
        "{\n  \"version\": 1,\n  \"name\": \"x\",\n  \"backend\": \"planar\"\n}\n",
    )
    .unwrap();
    assert_eq!(
        main_with(["strongnear", "run", broken.to_str().unwrap(), "--out", &out]),
        EXIT_INPUT
    );
    let missing = dir.path().join("missing.json");
    assert_eq!(main_with(["strongnear", "run", missing.to_str().unwrap()]), EXIT_INPUT);
    assert_eq!(main_with(["strongnear", "frobnicate"]), EXIT_INPUT);
}

#[test]
fn diagnostics_name_line_and_field() {
    let e = parse_scene("{\n  \"version\": 1,\n  \"name\": \"x\",\n  \"backend\": \"planar\"\n}").unwrap_err();
    assert!(e.0.contains("line 4"), "{}", e.0);
    let e = parse_scene("{\"version\": 2, \"name\": \"x\", \"backend\": \"finite\"}").unwrap_err();
    assert!(e.0.starts_with("version"), "{}", e.0);
    let e = load(
        strip_scene(json!([{"check": "near", "relation": "io", "a": "L", "b": "Q"}])),
        None,
    )
    .err()
    .unwrap();
    assert!(e.0.contains("checks[0]") && e.0.contains("\"Q\""), "{}", e.0);
    let e = load(
        strip_scene(json!([{"check": "near", "relation": "zz", "a": "L", "b": "M"}])),
        None,
    )
    .err()
    .unwrap();
    assert!(e.0.contains("unknown relation"), "{}", e.0);
    let e = parse_scene("{\"version\": 1, \"name\": \"x\", \"backend\": \"finite\", \"colour\": 1}").unwrap_err();
    assert!(e.0.contains("colour"), "{}", e.0);
}

#[test]
fn finite_render_is_refused_with_a_dump() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let path = scene_path("finite_line");
    assert_eq!(
        main_with(["strongnear", "render", path.to_str().unwrap(), "--out", out]),
        EXIT_INPUT
    );
    let dump = std::fs::read_to_string(dir.path().join("finite_line.txt")).unwrap();
    assert!(dump.starts_with("points: a b c d e\n"));
    assert_eq!(
        main_with(["strongnear", "run", path.to_str().unwrap(), "--out", out]),
        EXIT_OK
    );
}

#[test]
fn adjacency_flag_changes_connectivity() {
    let scene: Scene = serde_json::from_value(json!({
        "version": 1,
        "name": "diagonal",
        "backend": "grid",
        "grid": {"window": [0.0, 0.0, 4.0, 4.0], "width": 4, "height": 4},
        "shapes": [
            {"name": "P", "shape": {"type": "rectangle", "corners": [[0.0, 0.0], [1.0, 1.0]]}},
            {"name": "Q", "shape": {"type": "rectangle", "corners": [[1.2, 1.2], [2.0, 2.0]]}}
        ],
        "derived": [{"name": "PQ", "op": "union", "of": ["P", "Q"]}],
        "checks": [{"check": "is_connected", "set": "PQ"}]
    }))
    .unwrap();
    let eight = run(&load(scene.clone(), None).unwrap(), &RunOptions::default());
    let four = run(
        &load(scene, Some(strongnear::Adjacency::Four)).unwrap(),
        &RunOptions::default(),
    );
    assert_eq!(eight.records[0].verdict, Verdict::Pass);
    assert_eq!(four.records[0].verdict, Verdict::Fail);
}

#[test]
fn precondition_violations_are_errors() {
    let scene = strip_scene(json!([
        {"check": "closure_theorem", "relation": "io", "pieces": ["L", "R"]},
        {"check": "compatibility", "relation": "io", "expect": "error"}
    ]));
    let rep = run_scene(scene);
    assert_eq!(rep.records[0].verdict, Verdict::Error);
    assert!(rep.records[0].details["error"]
        .as_str()
        .unwrap()
        .contains("precondition"));
    assert!(!rep.records[0].ok);
    assert!(rep.records[1].ok);
}
