use affine_cluster::closed_forms::sq_oct;
use affine_cluster::graph::{
    build_g14, build_g22, build_h, build_tilde_g14, disjoint_union, half_turn_map, is_weighted_involution,
    is_weighted_isomorphic, Edge, EdgeWeight, ExportFormat, WeightedGraph,
};
use affine_cluster::matching::{enumerate_matchings, match_count, match_polynomial, matching_weight};
use affine_cluster::Laurent;
use num_bigint::BigInt;
use proptest::prelude::*;

const ORACLE_VERTEX_LIMIT: usize = 24;

fn brute_polynomial(g: &WeightedGraph) -> Laurent {
    enumerate_matchings(g, 1 << 20)
        .unwrap()
        .iter()
        .fold(Laurent::zero(), |acc, m| acc + matching_weight(g, m))
}

/// Every family graph small enough for exhaustive enumeration.
fn small_family_graphs() -> Vec<WeightedGraph> {
    let mut out = Vec::new();
    for m in 1..=12 {
        out.push(build_h(m).unwrap());
    }
    for n in 3..=8 {
        out.push(build_g22(n).unwrap());
    }
    for n in -10..=12 {
        if let Ok(g) = build_g14(n) {
            out.push(g);
        }
        if let Ok(g) = build_tilde_g14(n) {
            out.push(g);
        }
    }
    out.retain(|g| g.vertex_count <= ORACLE_VERTEX_LIMIT);
    out
}

#[test]
fn matching_polynomial_matches_enumeration_on_family_graphs() {
    let graphs = small_family_graphs();
    assert!(graphs.len() > 20);
    for g in &graphs {
        assert_eq!(match_polynomial(g).unwrap(), brute_polynomial(g), "graph {}", g.tag);
    }
}

#[test]
fn counts_are_values_at_ones() {
    for n in -10..=12 {
        let Ok(g) = build_g14(n) else { continue };
        assert_eq!(match_count(&g).unwrap(), match_polynomial(&g).unwrap().eval_at_ones());
    }
}

#[test]
fn square_and_octagon_counts() {
    for n in -12..=14 {
        if matches!(n, 1 | 2) {
            assert!(build_g14(n).is_err());
            continue;
        }
        let g = build_g14(n).unwrap();
        g.validate().unwrap();
        let (sq, oct) = sq_oct(n).unwrap();
        assert_eq!(g.cell_counts(), (sq as usize, oct as usize), "n = {n}");
    }
}

#[test]
fn grid_sizes() {
    for m in 1..=10u32 {
        let h = build_h(m).unwrap();
        assert_eq!(h.vertex_count, 2 * m as usize);
        assert_eq!(h.edge_count(), 3 * m as usize - 2);
    }
    assert!(build_h(0).is_err());
    assert!(build_g22(2).is_err());
}

#[test]
fn even_graphs_have_half_turn_symmetry() {
    for n in (-12..=14).step_by(2) {
        if n == 2 {
            continue;
        }
        let g = build_g14(n).unwrap();
        let map = half_turn_map(n).unwrap();
        assert!(is_weighted_involution(&g, &map), "n = {n}");
    }
}

#[test]
fn reciprocal_tilde_graphs_are_isomorphic() {
    for n in 0..=5i64 {
        let a = build_tilde_g14(-2 * n - 1).unwrap();
        let b = build_tilde_g14(2 * n + 5).unwrap();
        assert!(is_weighted_isomorphic(&a, &b), "n = {n}");
    }
    assert!(!is_weighted_isomorphic(&build_g14(5).unwrap(), &build_g14(-3).unwrap()));
    assert!(!is_weighted_isomorphic(
        &build_tilde_g14(5).unwrap(),
        &build_tilde_g14(-3).unwrap()
    ));
}

#[test]
fn disjoint_union_multiplies() {
    for (n, m) in [(5i64, 3u32), (-3, 4), (6, 2), (0, 5)] {
        let a = build_g14(n).unwrap();
        let b = build_h(m).unwrap();
        let u = disjoint_union(&a, &b);
        assert_eq!(u.vertex_count, a.vertex_count + b.vertex_count);
        assert_eq!(
            match_polynomial(&u).unwrap(),
            match_polynomial(&a).unwrap() * match_polynomial(&b).unwrap()
        );
        assert_eq!(
            match_count(&u).unwrap(),
            match_count(&a).unwrap() * match_count(&b).unwrap()
        );
    }
}

#[test]
fn json_export_round_trips() {
    for n in [-5i64, 0, 3, 6] {
        let g = build_g14(n).unwrap();
        let back = WeightedGraph::from_json(&g.export(ExportFormat::Json)).unwrap();
        assert_eq!(back, g);
    }
    let dot = build_g14(7).unwrap().export(ExportFormat::Dot);
    assert!(dot.starts_with("graph") && dot.contains("style=dashed"));
    assert!("svg".parse::<ExportFormat>().is_err());
}

#[test]
fn tilde_indices() {
    assert_eq!(build_tilde_g14(3).unwrap().vertex_count, 0);
    assert_eq!(match_polynomial(&build_tilde_g14(3).unwrap()).unwrap(), Laurent::one());
    for m in [1i64, 2, 4, -2] {
        assert!(build_tilde_g14(m).is_err(), "m = {m}");
    }
}

fn random_graph() -> impl Strategy<Value = WeightedGraph> {
    (1usize..=6).prop_flat_map(|half| {
        let n = 2 * half;
        prop::collection::vec((0..n, 0..n, 0u8..3), 0..=2 * n).prop_map(move |raw| {
            let mut g = WeightedGraph::empty("random");
            g.vertex_count = n;
            for (u, v, w) in raw {
                if u != v {
                    let weight = [EdgeWeight::One, EdgeWeight::X1, EdgeWeight::X2][w as usize];
                    g.edges.push(Edge { u, v, weight });
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn dp_matches_enumeration_on_random_graphs(g in random_graph()) {
        prop_assert_eq!(match_polynomial(&g).unwrap(), brute_polynomial(&g));
        let count = enumerate_matchings(&g, 1 << 20).unwrap().len();
        prop_assert_eq!(match_count(&g).unwrap(), BigInt::from(count));
    }
}
