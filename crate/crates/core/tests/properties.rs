use mopguard::families::random_mop;
use mopguard::gallery::{triangulate, Point, SimplePolygon};
use mopguard::io::{parse_mop1, parse_mop_json, write_mop1, write_mop_json};
use mopguard::isolation::{dominate_half_minus, dominate_third, isolate_best, isolate_order, isolate_order_plus_n2};
use mopguard::{three_coloring, Mop, VertexSet};
use proptest::prelude::*;

fn arb_mop(lo: usize, hi: usize) -> impl Strategy<Value = Mop> {
    (lo..=hi, any::<u64>()).prop_map(|(n, seed)| random_mop(n, seed).unwrap())
}

/// Residual maximum degree computed from the edge list alone.
fn residual(g: &Mop, s: &VertexSet) -> isize {
    let n = g.n();
    let edges = g.edges();
    let mut covered: Vec<bool> = (0..n).map(|v| s.contains(v)).collect();
    for &(a, b) in &edges {
        if s.contains(a) {
            covered[b] = true;
        }
        if s.contains(b) {
            covered[a] = true;
        }
    }
    let mut deg = vec![0isize; n];
    for &(a, b) in &edges {
        if !covered[a] && !covered[b] {
            deg[a] += 1;
            deg[b] += 1;
        }
    }
    (0..n).filter(|&v| !covered[v]).map(|v| deg[v]).max().unwrap_or(-1)
}

fn doubled_triangle_area(a: Point, b: Point, c: Point) -> i128 {
    let (a, b, c) = ((a.0 as i128, a.1 as i128), (b.0 as i128, b.1 as i128), (c.0 as i128, c.1 as i128));
    ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).abs()
}

/// Corners of a star-shaped polygon: distinct angles around the origin,
/// sorted, with radii from `radii`.
fn star_polygon(radii: &[u8]) -> Option<SimplePolygon> {
    let n = radii.len();
    let pts = (0..n)
        .map(|i| {
            let phi = std::f64::consts::TAU * i as f64 / n as f64;
            let r = 50.0 + radii[i] as f64;
            ((r * phi.cos()).round() as i64, (r * phi.sin()).round() as i64)
        })
        .collect();
    SimplePolygon::new(pts).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn random_mops_are_well_formed(g in arb_mop(3, 60)) {
        let n = g.n();
        prop_assert_eq!(g.diagonals().len(), n - 3);
        prop_assert_eq!(g.edge_count(), 2 * n - 3);
        prop_assert_eq!(g.faces().len(), n - 2);
        if n >= 4 {
            prop_assert!(g.n2() >= 2 && g.n2() <= n / 2);
            let v2: Vec<usize> = g.degree2_vertices().iter().collect();
            for (i, &a) in v2.iter().enumerate() {
                for &b in &v2[i + 1..] {
                    prop_assert!(!g.has_edge(a, b));
                }
            }
        }
    }

    #[test]
    fn text_formats_round_trip(g in arb_mop(3, 40)) {
        prop_assert_eq!(parse_mop1(&write_mop1(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_mop_json(&write_mop_json(&g)).unwrap(), g);
    }

    #[test]
    fn coloring_is_proper(g in arb_mop(3, 60)) {
        let c = three_coloring(&g);
        for (a, b) in g.edges() {
            prop_assert_ne!(c[a], c[b]);
        }
    }

    #[test]
    fn isolation_algorithms_meet_their_bounds(g in arb_mop(3, 60), k in 0usize..5) {
        let n = g.n();
        for sol in [isolate_order(&g, k), isolate_order_plus_n2(&g, k), isolate_best(&g, k)] {
            let sol = sol.unwrap();
            prop_assert!(residual(&g, &sol.set) <= k as isize);
            if sol.bound_applies {
                prop_assert!(sol.within_bound());
            }
        }
        if n >= k + 4 {
            prop_assert!(isolate_order(&g, k).unwrap().set.len() <= n / (k + 4));
        }
    }

    #[test]
    fn dominating_sets_dominate(g in arb_mop(4, 60)) {
        for sol in [dominate_third(&g).unwrap(), dominate_half_minus(&g).unwrap()] {
            prop_assert_eq!(residual(&g, &sol.set), -1);
        }
        prop_assert!(dominate_third(&g).unwrap().set.len() <= g.n() / 3);
        // floor((n - n2) / 2), plus one only when it is unattainable.
        let m = g.n() - g.n2();
        prop_assert!(dominate_half_minus(&g).unwrap().set.len() <= m.div_ceil(2));
    }

    #[test]
    fn rotation_preserves_degrees(g in arb_mop(3, 40), s in 0usize..40) {
        let n = g.n();
        let s = s % n;
        let r = g.rotate(s);
        for v in 0..n {
            prop_assert_eq!(r.degree((v + n - s) % n).unwrap(), g.degree(v).unwrap());
        }
    }

    #[test]
    fn ear_then_delete_is_identity(g in arb_mop(3, 40), e in 0usize..40) {
        let n = g.n();
        let u = e % n;
        let (h, w) = g.add_ear((u, (u + 1) % n)).unwrap();
        prop_assert_eq!(h.degree(w).unwrap(), 2);
        let (back, _) = h.delete_degree2_vertex(w).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn contraction_gives_smaller_mop(g in arb_mop(4, 40), e in 0usize..40) {
        let n = g.n();
        let u = e % n;
        let (h, map) = g.contract_boundary_edge((u, (u + 1) % n)).unwrap();
        prop_assert_eq!(h.n(), n - 1);
        prop_assert_eq!(map.parents().len(), n - 1);
    }

    #[test]
    fn star_polygons_triangulate_inside(radii in prop::collection::vec(any::<u8>(), 3..30)) {
        if let Some(p) = star_polygon(&radii) {
            let g = triangulate(&p).unwrap();
            prop_assert_eq!(g.diagonals().len(), p.len() - 3);
            for &(a, b) in g.diagonals() {
                prop_assert!(p.is_internal_diagonal(a, b));
            }
            // The triangles tile the polygon: their areas add up.
            let area: i128 = g.faces().iter().map(|&(a, b, c)| doubled_triangle_area(p.corner(a), p.corner(b), p.corner(c))).sum();
            prop_assert_eq!(area, p.doubled_area());
        }
    }
}
