mod common;

use metdim_core::constructive::{classify_equality, single_vertices, Verdict};
use metdim_core::domination::{domination_number, is_single_vertex, private_neighbors};
use metdim_core::enumerate::connected_graphs_upto;
use metdim_core::generators::{
    complete, complete_bipartite, cycle, kneser, path, petersen, random_connected_stream, seeded_rng, star,
    subdivided_wheel,
};
use metdim_core::resolve::metric_dimension;
use metdim_core::{Budget, Graph};
use rand::Rng;

fn beta(g: &Graph) -> usize {
    metric_dimension(g, Budget::UNLIMITED).unwrap().beta
}

fn gamma(g: &Graph) -> usize {
    domination_number(g, Budget::UNLIMITED).unwrap().gamma
}

#[test]
fn paths_and_cycles() {
    for n in 3..=15 {
        assert_eq!(gamma(&path(n).unwrap()), n.div_ceil(3), "P_{n}");
        assert_eq!(gamma(&cycle(n).unwrap()), n.div_ceil(3), "C_{n}");
    }
    for n in 3..=12 {
        assert_eq!(beta(&path(n).unwrap()), 1, "P_{n}");
        assert_eq!(beta(&cycle(n).unwrap()), 2, "C_{n}");
    }
}

#[test]
fn complete_and_complete_bipartite() {
    for n in 1..=8 {
        assert_eq!(beta(&complete(n).unwrap()), n - 1);
    }
    for s in 2..=5 {
        for t in 2..=5 {
            let g = complete_bipartite(s, t).unwrap();
            assert_eq!(beta(&g), s + t - 2);
            assert_eq!(gamma(&g), 2);
        }
    }
}

#[test]
fn petersen_values() {
    let p = petersen();
    assert_eq!(beta(&p), 3);
    assert_eq!(gamma(&p), 3);
    assert_eq!(common::metric_dimension(&p).0, 3);
    assert_eq!(common::domination_number(&p).0, 3);
}

#[test]
fn subdivided_wheels() {
    for k in 3..=8 {
        let g = subdivided_wheel(k).unwrap();
        assert_eq!(g.order(), 3 * k + 1);
        let mut degrees = g.degree_sequence().degrees;
        degrees.sort_unstable();
        let mut expected = vec![2; 2 * k];
        expected.extend(vec![3; k]);
        expected.push(k);
        expected.sort_unstable();
        assert_eq!(degrees, expected, "k = {k}");
    }
    assert_eq!(gamma(&subdivided_wheel(6).unwrap()), 7);
}

#[test]
fn odd_graphs_are_regular() {
    for k in 2..=3 {
        let g = kneser(2 * k + 1, k).unwrap();
        assert!((0..g.order()).all(|v| g.degree(v) == k + 1));
    }
}

#[test]
fn classification_examples() {
    let c = classify_equality(&complete_bipartite(2, 2).unwrap(), Budget::UNLIMITED).unwrap();
    assert_eq!((c.verdict, c.beta, c.gamma), (Verdict::CompleteBipartite(2, 2), 2, 2));
    let s = classify_equality(&star(6).unwrap(), Budget::UNLIMITED).unwrap();
    assert_eq!(s.verdict, Verdict::StrictInequality);
}

#[test]
fn minimum_dominating_members_have_private_neighbor_or_are_single() {
    let check = |g: &Graph| {
        let d = domination_number(g, Budget::UNLIMITED).unwrap().dominating_set;
        for u in &d {
            let private = !private_neighbors(g, &d, u).unwrap().is_empty();
            let single = is_single_vertex(g, &d, u).unwrap();
            assert!(private || single, "{g:?} {d} {u}");
            assert!(!(private && single));
        }
        single_vertices(g, &d).len()
    };
    for g in connected_graphs_upto(6) {
        check(&g);
    }
    for i in 0..2000 {
        let mut rng = seeded_rng(5, i);
        let n = rng.gen_range(7..=10);
        check(&random_connected_stream(n, 0.3, 6, i).unwrap());
    }
}
