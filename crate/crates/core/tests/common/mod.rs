//! Brute-force reference implementations and graph samplers shared by the
//! integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use cliquedyn::{canonical_form, Graph};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i:02}")).collect()
}

/// Erdős–Rényi graph on `v00, v01, ...`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_parts(names(n), edges)
}

/// A random graph with random size and density.
pub fn any_graph(rng: &mut impl Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(0..=max_n);
    let p = rng.gen_range(0.05..0.95);
    random_graph(rng, n, p)
}

/// The same graph under a random renaming.
pub fn shuffled(rng: &mut impl Rng, g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_parts((0..n).map(|i| format!("w{i:02}")).collect(), edges)
}

fn is_clique(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| g.adjacent(u, v)))
}

/// Maximal cliques by checking every vertex subset; sorted.
pub fn brute_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    assert!(n <= 20, "subset enumeration limited to 20 vertices");
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if !is_clique(g, &set) {
            continue;
        }
        let maximal = (0..n)
            .filter(|&w| mask >> w & 1 == 0)
            .all(|w| !set.iter().all(|&u| g.adjacent(u, w)));
        if maximal {
            out.push(set);
        }
    }
    out.sort();
    out
}

/// Intersection graph of the subset-enumerated cliques.
pub fn brute_clique_graph(g: &Graph) -> Graph {
    let cliques = brute_maximal_cliques(g);
    let mut edges = Vec::new();
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            if cliques[i].iter().any(|x| cliques[j].contains(x)) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_parts(
        (0..cliques.len()).map(|i| format!("c{i:05}")).collect(),
        edges,
    )
}

/// Isomorphism by trying vertex permutations, extending a partial map
/// only while it preserves adjacency and non-adjacency.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    fn go(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == g.vertex_count() {
            return true;
        }
        for t in 0..h.vertex_count() {
            if used[t] {
                continue;
            }
            if (0..i).all(|j| g.adjacent(i, j) == h.adjacent(t, map[j])) {
                map.push(t);
                used[t] = true;
                if go(g, h, map, used) {
                    return true;
                }
                used[t] = false;
                map.pop();
            }
        }
        false
    }
    go(g, h, &mut Vec::new(), &mut vec![false; n])
}

/// One representative of every isomorphism class on exactly `n` vertices,
/// built by adding a vertex with every neighbor set to the classes on
/// `n - 1` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty()];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let base: Vec<(usize, usize)> = g.edges().collect();
            for mask in 0u32..(1 << (k - 1)) {
                let mut edges = base.clone();
                edges.extend(
                    (0..k - 1)
                        .filter(|&i| mask >> i & 1 == 1)
                        .map(|i| (i, k - 1)),
                );
                let h = Graph::from_parts(names(k), edges);
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

pub fn connected_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n)
        .flat_map(all_graphs)
        .filter(|g| g.is_connected())
        .collect()
}
