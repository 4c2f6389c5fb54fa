use mopguard::families::family_s;
use mopguard::isolation::isolate_best;
use mopguard::oracle::Oracle;
use mopguard::FamilySpec;

fn members() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for k in 0..=4 {
        for t in 1..=3 {
            out.push(FamilySpec::T { k, t });
            out.push(FamilySpec::S { k: k.max(1), t });
        }
        out.push(FamilySpec::R { k: k.max(1) });
        for t in (k + 4).div_ceil(2)..=k + 4 {
            out.push(FamilySpec::H { k, t });
        }
        out.push(FamilySpec::A { k, p: 1 });
    }
    out.extend((2..=6).map(|p| FamilySpec::M { p }));
    out.extend((3..=9).map(|n| FamilySpec::Fan { n }));
    out
}

#[test]
fn orders_and_degree_two_counts_match_closed_forms() {
    for spec in members() {
        let g = spec.generate().unwrap_or_else(|e| panic!("{spec}: {e}"));
        assert_eq!(g.n(), spec.order(), "{spec}");
        if let Some(n2) = spec.n2() {
            assert_eq!(g.n2(), n2, "{spec}");
        }
    }
}

#[test]
fn known_values_agree_with_the_oracle() {
    let oracle = Oracle::default();
    let mut checked = 0;
    for spec in members() {
        let Some(value) = spec.known_value() else { continue };
        let g = spec.generate().unwrap();
        if g.n() > 20 {
            continue;
        }
        let exact = match spec {
            FamilySpec::M { .. } => oracle.domination_number(&g).unwrap(),
            _ => oracle.isolation_number(&g, spec.k().unwrap()).unwrap(),
        };
        assert_eq!(exact.value, value, "{spec}");
        checked += 1;
    }
    assert!(checked >= 15, "only {checked} members checked");
}

#[test]
fn best_algorithm_is_tight_on_isolation_families() {
    for spec in members() {
        let (Some(value), Some(k)) = (spec.known_value(), spec.k()) else { continue };
        let g = spec.generate().unwrap();
        if g.n() < 3 {
            continue;
        }
        let sol = isolate_best(&g, k).unwrap();
        assert!(sol.set.len() >= value, "{spec}: {} below the exact value {value}", sol.set.len());
    }
}

#[test]
fn s_family_degree_two_vertices_are_independent() {
    for k in 1..=4 {
        for t in 1..=3 {
            let g = family_s(k, t).unwrap();
            let v2: Vec<usize> = g.degree2_vertices().iter().collect();
            for (i, &a) in v2.iter().enumerate() {
                for &b in &v2[i + 1..] {
                    assert!(!g.has_edge(a, b), "S({k},{t}): {a}-{b}");
                }
            }
        }
    }
}
