use std::fs;
use std::path::PathBuf;

use mopguard::gallery::triangulate;
use mopguard::io::{
    parse_mop, parse_mop1, parse_mop_json, parse_polygon, parse_vertex_set, write_mop1, write_mop_json, write_poly1,
    write_poly_json,
};
use mopguard::Mop;

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn fixtures(ext: &str) -> Vec<String> {
    let dir: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures"].iter().collect();
    let mut names: Vec<String> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(ext))
        .collect();
    names.sort();
    names
}

fn mops() -> Vec<(String, Mop)> {
    let mut out: Vec<(String, Mop)> =
        fixtures(".mop").into_iter().map(|n| (n.clone(), parse_mop(&fixture(&n)).unwrap())).collect();
    out.push(("fan6.json".into(), parse_mop(&fixture("fan6.json")).unwrap()));
    out
}

#[test]
fn corpus_is_nonempty() {
    assert!(mops().len() >= 5);
    assert!(fixtures(".poly").len() >= 2);
}

#[test]
fn mop_round_trips() {
    for (name, g) in mops() {
        assert_eq!(parse_mop1(&write_mop1(&g)).unwrap(), g, "{name} via MOP1");
        assert_eq!(parse_mop_json(&write_mop_json(&g)).unwrap(), g, "{name} via JSON");
    }
}

#[test]
fn mop1_and_json_fixtures_agree() {
    assert_eq!(parse_mop(&fixture("fan6.mop")).unwrap(), parse_mop(&fixture("fan6.json")).unwrap());
}

#[test]
fn polygon_round_trips() {
    let mut names = fixtures(".poly");
    names.push("hexagon.json".into());
    for name in names {
        let p = parse_polygon(&fixture(&name)).unwrap();
        assert_eq!(parse_polygon(&write_poly1(&p)).unwrap(), p, "{name} via POLY1");
        assert_eq!(parse_polygon(&write_poly_json(&p)).unwrap(), p, "{name} via JSON");
    }
}

#[test]
fn fixture_properties() {
    let sun = parse_mop(&fixture("sun.mop")).unwrap();
    assert_eq!(sun.n2(), 3);
    let cover = parse_vertex_set(&fixture("sun_cover.set")).unwrap();
    assert!(sun.is_dominating(&cover).unwrap());
    let zigzag = parse_mop(&fixture("zigzag8.mop")).unwrap();
    assert_eq!(zigzag.degree_sequence().iter().sum::<usize>(), 2 * (2 * 8 - 3));
    assert_eq!(parse_mop(&fixture("triangle.mop")).unwrap(), Mop::triangle());
}

#[test]
fn fixture_polygons_triangulate_inside() {
    for name in ["square.poly", "dart.poly", "hexagon.json"] {
        let p = parse_polygon(&fixture(name)).unwrap();
        let g = triangulate(&p).unwrap();
        assert_eq!(g.diagonals().len(), p.len() - 3, "{name}");
        for &(a, b) in g.diagonals() {
            assert!(p.is_internal_diagonal(a, b), "{name}: {a}-{b}");
        }
    }
}
