use std::collections::BTreeMap;

use proptest::prelude::*;
use zipcross_core::cuts::enumerate_min_cuts;
use zipcross_core::solver::{convex_upper_bound, euler_lower_bound, verify_certificate};
use zipcross_core::zip::{split_at_cut, zip};
use zipcross_core::{canonical_key, is_planar, EdgeId, MultiGraph, Outcome, Solver, VertexId};

fn graph(max_n: usize, max_m: usize) -> impl Strategy<Value = MultiGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_m).prop_map(move |pairs| {
            let pairs: Vec<_> = pairs.into_iter().filter(|(a, b)| a != b).collect();
            MultiGraph::from_edges(n, &pairs).unwrap()
        })
    })
}

/// Connected: a random tree plus extra edges.
fn connected(max_n: usize, max_extra: usize) -> impl Strategy<Value = MultiGraph> {
    (2..=max_n).prop_flat_map(move |n| {
        let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
        (parents, prop::collection::vec((0..n, 0..n), 0..=max_extra)).prop_map(move |(ps, extra)| {
            let mut pairs: Vec<_> = ps.into_iter().enumerate().map(|(i, p)| (p, i + 1)).collect();
            pairs.extend(extra.into_iter().filter(|(a, b)| a != b));
            MultiGraph::from_edges(n, &pairs).unwrap()
        })
    })
}

fn relabel(g: &MultiGraph, perm: &[usize]) -> MultiGraph {
    let pairs: Vec<_> = g.index_pairs().into_iter().map(|(a, b)| (perm[b], perm[a])).collect();
    MultiGraph::from_edges(g.vertex_count(), &pairs).unwrap()
}

fn solve(s: &mut Solver<'_>, g: &MultiGraph) -> u32 {
    s.crossing_number(g, None).value().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn canonical_key_ignores_labels(g in graph(8, 14), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_key(&g).unwrap(), canonical_key(&relabel(&g, &perm)).unwrap());
    }

    #[test]
    fn cross_identify_counts(g in graph(7, 12), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        prop_assume!(g.edge_count() >= 2);
        let e = g.edges()[i.index(g.edge_count())];
        let f = g.edges()[j.index(g.edge_count())];
        match g.cross_identify(e.id, f.id) {
            Ok(h) => {
                prop_assert!(!e.shares_endpoint(&f));
                prop_assert_eq!(h.vertex_count(), g.vertex_count() + 1);
                prop_assert_eq!(h.edge_count(), g.edge_count() + 2);
                let x = g.next_vertex_id();
                prop_assert_eq!(h.degree(x), 4);
                for &v in g.vertices() {
                    prop_assert_eq!(h.degree(v), g.degree(v));
                }
            }
            Err(_) => prop_assert!(e.id == f.id || e.shares_endpoint(&f)),
        }
    }

    #[test]
    fn contract_counts(g in graph(7, 12), mask in any::<u8>()) {
        let set: Vec<VertexId> = g.vertices().iter().copied().enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1).map(|(_, v)| v).collect();
        prop_assume!(!set.is_empty());
        let inside = g.edges().iter().filter(|e| set.contains(&e.u) && set.contains(&e.v)).count();
        let (h, x) = g.contract_set(&set).unwrap();
        prop_assert_eq!(h.vertex_count(), g.vertex_count() + 1 - set.len());
        prop_assert_eq!(h.edge_count(), g.edge_count() - inside);
        let leaving: usize = set.iter().map(|&v| g.degree(v)).sum::<usize>() - 2 * inside;
        prop_assert_eq!(h.degree(x), leaving);
    }

    #[test]
    fn simplify_is_idempotent_and_keeps_planarity(g in graph(8, 16)) {
        let s = g.simplify();
        prop_assert!(s.is_simple());
        prop_assert_eq!(s.simplify(), s.clone());
        prop_assert_eq!(is_planar(&g).is_planar(), is_planar(&s).is_planar());
    }

    #[test]
    fn deletion_is_monotone_and_bounds_hold(g in connected(7, 9), i in any::<prop::sample::Index>()) {
        let mut s = Solver::default();
        let out = s.crossing_number(&g, None);
        let Outcome::Solved(r) = out else { panic!("small graphs solve") };
        prop_assert!(verify_certificate(&g, &r.certificate).is_ok());
        prop_assert!(euler_lower_bound(&g) <= r.value);
        prop_assert!(r.value <= convex_upper_bound(&g));
        prop_assert_eq!(r.value == 0, is_planar(&g).is_planar());
        let e = g.edges()[i.index(g.edge_count())].id;
        prop_assert!(solve(&mut s, &g.delete_edge(e).unwrap()) <= r.value);
    }

    #[test]
    fn split_then_zip_is_identity(g in connected(8, 8)) {
        for cut in enumerate_min_cuts(&g, 3, true).unwrap() {
            prop_assert!(cut.validate(&g));
            let spec = split_at_cut(&g, &cut).unwrap();
            let z = zip(&spec).unwrap();
            prop_assert_eq!(&z, &g);
            let ids = |h: &MultiGraph| {
                let mut v: Vec<(EdgeId, VertexId, VertexId)> = h.edges().iter().map(|e| (e.id, e.ends().0, e.ends().1)).collect();
                v.sort_unstable();
                v
            };
            prop_assert_eq!(ids(&z), ids(&g));
        }
    }

    #[test]
    fn small_cut_zip_is_additive(g in connected(8, 7)) {
        let mut s = Solver::default();
        for cut in enumerate_min_cuts(&g, 3, true).unwrap() {
            let spec = split_at_cut(&g, &cut).unwrap();
            prop_assert_eq!(solve(&mut s, &g), solve(&mut s, &spec.g1) + solve(&mut s, &spec.g2));
        }
    }
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest relabeled sorted edge list over all permutations.
fn brute_form(n: usize, pairs: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut v: Vec<_> = pairs.iter().map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b]))).collect();
            v.sort_unstable();
            v
        })
        .min()
        .unwrap_or_default()
        .into_iter()
        .chain(std::iter::once((n, n)))
        .collect()
}

#[test]
fn canonical_keys_match_exhaustive_isomorphism() {
    let mut classes = 0;
    for n in 1..=5 {
        let perms = all_perms(n);
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut by_key = BTreeMap::new();
        for mask in 0u32..1 << slots.len() {
            let pairs: Vec<_> = slots
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = MultiGraph::from_edges(n, &pairs).unwrap();
            let bf = brute_form(n, &pairs, &perms);
            let prev = by_key.insert(canonical_key(&g).unwrap(), bf.clone());
            if let Some(p) = prev {
                assert_eq!(p, bf, "equal keys for non-isomorphic graphs");
            }
        }
        let forms: std::collections::BTreeSet<_> = by_key.values().collect();
        assert_eq!(
            forms.len(),
            by_key.len(),
            "isomorphic graphs with different keys on {n} vertices"
        );
        classes += by_key.len();
    }
    // 1 + 2 + 4 + 11 + 34 graphs on 1..=5 vertices
    assert_eq!(classes, 52);
}

#[test]
fn canonical_keys_on_random_seven_vertex_multigraphs() {
    let perms = all_perms(7);
    let mut x: u64 = 7;
    let mut next = move || {
        x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (x >> 33) as usize
    };
    let mut by_key = BTreeMap::new();
    let mut by_form = BTreeMap::new();
    for _ in 0..150 {
        let m = 4 + next() % 6;
        let pairs: Vec<_> = (0..m)
            .map(|_| (next() % 7, next() % 7))
            .filter(|(a, b)| a != b)
            .collect();
        let g = MultiGraph::from_edges(7, &pairs).unwrap();
        let key = canonical_key(&g).unwrap();
        let bf = brute_form(7, &pairs, &perms);
        assert_eq!(*by_key.entry(key.clone()).or_insert_with(|| bf.clone()), bf);
        assert_eq!(*by_form.entry(bf).or_insert(key.clone()), key);
    }
}
