mod common;

use std::collections::BTreeSet;

use common::{brute_force_expansions, parse_dot, reduced_fractions};
use slope_diameter::subst::boundary_cfs;
use slope_diameter::{build_tree, leaves, simple_cf, to_dot, Rational};

fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p, q).unwrap()
}

#[test]
fn tree_matches_exhaustive_search() {
    for (p, q) in reduced_fractions(21) {
        let r = rat(p, q);
        let brute = brute_force_expansions(p, q);
        let tree: BTreeSet<Vec<i64>> = leaves(&build_tree(r).unwrap())
            .into_iter()
            .map(|cf| cf.to_flat())
            .collect();
        let masks: BTreeSet<Vec<i64>> = boundary_cfs(&simple_cf(r).unwrap())
            .into_iter()
            .map(|cf| cf.to_flat())
            .collect();
        assert_eq!(tree, brute, "{r}");
        assert_eq!(masks, brute, "{r}");
    }
}

#[test]
fn known_leaf_sets() {
    let flat = |r| -> Vec<Vec<i64>> {
        leaves(&build_tree(r).unwrap())
            .into_iter()
            .map(|cf| cf.to_flat())
            .collect()
    };
    assert_eq!(flat(rat(2, 7)), [vec![0, 3, 2], vec![0, 4, -2], vec![1, -2, 2, -3]]);
    assert_eq!(flat(rat(1, 2)), [vec![0, 2], vec![1, -2]]);
    assert_eq!(flat(rat(1, 3)), [vec![0, 3], vec![1, -2, 2]]);
    assert_eq!(flat(rat(2, 5)), [vec![0, 2, 2], vec![0, 3, -2], vec![1, -2, 3]]);
}

#[test]
fn dot_output_parses() {
    for (p, q) in reduced_fractions(40) {
        let tree = build_tree(rat(p, q)).unwrap();
        for ascii in [false, true] {
            let dot = to_dot(&tree, ascii);
            let g = parse_dot(&dot).unwrap_or_else(|e| panic!("{p}/{q}: {e}\n{dot}"));
            assert_eq!(g.nodes.len(), tree.nodes().len());
            assert_eq!(g.edges.len(), tree.nodes().len() - 1);
            let dead = if ascii { "DNE" } else { "∄" };
            let dead_count = g.nodes.values().filter(|a| a["label"] == dead).count();
            assert_eq!(dead_count, tree.dead_leaf_count());
            let live = g.nodes.values().filter(|a| a["shape"] == "ellipse").count();
            assert_eq!(live, tree.live_leaf_count());
        }
    }
}

#[test]
fn dot_for_five_two_and_half() {
    let g = parse_dot(&to_dot(&build_tree(rat(2, 7)).unwrap(), false)).unwrap();
    let leaf_labels: BTreeSet<_> = g
        .nodes
        .values()
        .filter(|a| a["shape"] == "ellipse")
        .map(|a| a["label"].clone())
        .collect();
    assert_eq!(
        leaf_labels,
        ["[0,3,2]", "[0,4,-2]", "[1,-2,2,-3]"].map(String::from).into()
    );
    let root_edges: Vec<_> = g.edges.iter().filter(|e| e.0 == "n0").map(|e| e.2.as_str()).collect();
    assert_eq!(root_edges, ["0", "1"]);

    let g = parse_dot(&to_dot(&build_tree(rat(1, 2)).unwrap(), true)).unwrap();
    assert_eq!(g.nodes.values().filter(|a| a["shape"] == "ellipse").count(), 2);
}

#[test]
fn dot_checker_rejects_garbage() {
    assert!(parse_dot("graph x { }").is_err());
    assert!(parse_dot("digraph x { n0 -> n1; }").is_err());
    assert!(parse_dot("digraph x { n0 [label=\"a\"] }").is_err());
    assert!(parse_dot("digraph x { n0 [label=\"a\"]; ").is_err());
}
