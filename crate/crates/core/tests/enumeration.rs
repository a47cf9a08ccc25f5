use std::collections::BTreeSet;

use itertools::Itertools;
use obelisk::graph::{canonical_form, enumerate_connected, Arc, OrientedGraph};

/// Connected orientations of subgraphs of K_n up to isomorphism, counted by
/// the smallest adjacency string over all n! relabellings.
fn brute_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut classes = BTreeSet::new();
    for code in 0..3u32.pow(pairs.len() as u32) {
        let mut c = code;
        let mut adj = vec![vec![false; n]; n];
        for &(i, j) in &pairs {
            match c % 3 {
                1 => adj[i][j] = true,
                2 => adj[j][i] = true,
                _ => {}
            }
            c /= 3;
        }
        // connectivity of the underlying graph
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if (adj[v][w] || adj[w][v]) && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            continue;
        }
        let key = perms
            .iter()
            .map(|p| (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| adj[p[i]][p[j]]).collect::<Vec<_>>())
            .min()
            .unwrap();
        classes.insert(key);
    }
    classes.len()
}

#[test]
fn counts_match_brute_force() {
    for n in 1..=5 {
        assert_eq!(enumerate_connected(n).unwrap().len(), brute_count(n), "n={n}");
    }
    assert_eq!(brute_count(3), 5);
}

#[test]
fn members_pairwise_distinct_and_connected() {
    let all = enumerate_connected(5).unwrap();
    let codes: BTreeSet<Vec<u8>> = all.iter().map(|g| canonical_form(g).code).collect();
    assert_eq!(codes.len(), all.len());
    assert!(all.iter().all(OrientedGraph::is_connected));
    let d5 = OrientedGraph::from_arcs((0..5).map(|i| Arc::new(i, (i + 1) % 5))).unwrap();
    assert!(codes.contains(&canonical_form(&d5).code));
}
