//! Maximal cliques, the clique graph operator, domination and the Helly
//! property for clique families.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{sorted_intersection, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliqueError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("domination is only defined for two distinct vertices")]
    SameVertex,
    #[error("graph has {count} maximal cliques, more than the cap of {cap}")]
    TooManyCliques { count: usize, cap: usize },
    #[error("clique enumeration stopped after exceeding {limit} cliques")]
    LimitExceeded { limit: usize },
}

/// A clique graph together with where each of its vertices came from.
///
/// Vertex `i` of `graph` (in index order) is the clique `cliques[i]`, a
/// sorted list of vertex indices of the source graph.
#[derive(Debug, Clone)]
pub struct CliqueGraphResult {
    pub graph: Graph,
    pub cliques: Vec<Vec<usize>>,
}

impl CliqueGraphResult {
    pub fn provenance(&self, v: usize) -> &[usize] {
        &self.cliques[v]
    }

    /// Position of the clique with exactly these (sorted) members.
    pub fn find(&self, members: &[usize]) -> Option<usize> {
        self.cliques
            .binary_search_by(|c| c.as_slice().cmp(members))
            .ok()
    }
}

/// All maximal cliques, each sorted, in lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    enumerate(g, usize::MAX).expect("unbounded enumeration")
}

/// Like [`maximal_cliques`] but gives up once more than `limit` cliques
/// have been found.
pub fn maximal_cliques_bounded(g: &Graph, limit: usize) -> Result<Vec<Vec<usize>>, CliqueError> {
    enumerate(g, limit)
}

pub fn clique_graph(g: &Graph) -> CliqueGraphResult {
    build_clique_graph(g, maximal_cliques(g))
}

pub fn clique_graph_bounded(g: &Graph, limit: usize) -> Result<CliqueGraphResult, CliqueError> {
    Ok(build_clique_graph(g, maximal_cliques_bounded(g, limit)?))
}

/// Intersection graph of an already sorted clique family.
pub(crate) fn build_clique_graph(g: &Graph, cliques: Vec<Vec<usize>>) -> CliqueGraphResult {
    let names = fresh_names(cliques.len());
    let graph = Graph::from_parts(names, intersection_edges(g.vertex_count(), &cliques));
    CliqueGraphResult { graph, cliques }
}

pub(crate) fn fresh_names(count: usize) -> Vec<String> {
    let width = count.saturating_sub(1).to_string().len();
    (0..count).map(|i| format!("q{i:0width$}")).collect()
}

pub(crate) fn intersection_edges(n: usize, cliques: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, c) in cliques.iter().enumerate() {
        for &v in c {
            containing[v].push(i);
        }
    }
    let mut edges = Vec::new();
    for list in &containing {
        for a in 0..list.len() {
            for b in a + 1..list.len() {
                edges.push((list[a], list[b]));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    edges
}

fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); max_deg + 1];
    for v in 0..n {
        buckets[deg[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    while order.len() < n {
        d = d.min(max_deg);
        while buckets[d].is_empty() {
            d += 1;
        }
        let v = buckets[d].pop().unwrap();
        if removed[v] || deg[v] != d {
            continue;
        }
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                buckets[deg[w]].push(w);
                d = d.min(deg[w]);
            }
        }
    }
    order
}

struct Enumerator<'a> {
    g: &'a Graph,
    limit: usize,
    found: &'a std::sync::atomic::AtomicUsize,
}

impl Enumerator<'_> {
    fn bron_kerbosch(
        &self,
        r: &mut Vec<usize>,
        mut p: Vec<usize>,
        mut x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<(), CliqueError> {
        use std::sync::atomic::Ordering::Relaxed;
        if p.is_empty() {
            if x.is_empty() {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
                if self.found.fetch_add(1, Relaxed) + 1 > self.limit {
                    return Err(CliqueError::LimitExceeded { limit: self.limit });
                }
            }
            return Ok(());
        }
        if self.found.load(Relaxed) > self.limit {
            return Err(CliqueError::LimitExceeded { limit: self.limit });
        }
        // Pivot maximizing |N(u) ∩ P| over P ∪ X.
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| crate::graph::sorted_intersection_count(self.g.neighbors(u), &p))
            .unwrap();
        let candidates: Vec<usize> = p
            .iter()
            .copied()
            .filter(|&v| !self.g.adjacent(pivot, v))
            .collect();
        for v in candidates {
            let nv = self.g.neighbors(v);
            r.push(v);
            self.bron_kerbosch(
                r,
                sorted_intersection(&p, nv),
                sorted_intersection(&x, nv),
                out,
            )?;
            r.pop();
            let pos = p.binary_search(&v).unwrap();
            p.remove(pos);
            let pos = x.binary_search(&v).unwrap_err();
            x.insert(pos, v);
        }
        Ok(())
    }

    fn expand_vertex(&self, v: usize, rank: &[usize]) -> Result<Vec<Vec<usize>>, CliqueError> {
        let (mut p, mut x) = (Vec::new(), Vec::new());
        for &w in self.g.neighbors(v) {
            if rank[w] > rank[v] {
                p.push(w);
            } else {
                x.push(w);
            }
        }
        let mut out = Vec::new();
        self.bron_kerbosch(&mut vec![v], p, x, &mut out)?;
        Ok(out)
    }
}

fn enumerate(g: &Graph, limit: usize) -> Result<Vec<Vec<usize>>, CliqueError> {
    let order = degeneracy_order(g);
    let mut rank = vec![0; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let found = std::sync::atomic::AtomicUsize::new(0);
    let en = Enumerator {
        g,
        limit,
        found: &found,
    };
    #[cfg(feature = "parallel")]
    let chunks: Vec<Result<Vec<Vec<usize>>, CliqueError>> = if order.len() >= 512 {
        use rayon::prelude::*;
        order
            .par_iter()
            .map(|&v| en.expand_vertex(v, &rank))
            .collect()
    } else {
        order.iter().map(|&v| en.expand_vertex(v, &rank)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let chunks: Vec<Result<Vec<Vec<usize>>, CliqueError>> =
        order.iter().map(|&v| en.expand_vertex(v, &rank)).collect();
    let mut all = Vec::new();
    for c in chunks {
        all.extend(c?);
    }
    all.sort_unstable();
    Ok(all)
}

/// True iff `N[w] ⊆ N[u]`.
pub fn dominates(g: &Graph, u: &str, w: &str) -> Result<bool, CliqueError> {
    let (a, b) = (g.require(u)?, g.require(w)?);
    if a == b {
        return Err(CliqueError::SameVertex);
    }
    Ok(dominates_index(g, a, b))
}

pub(crate) fn dominates_index(g: &Graph, u: usize, w: usize) -> bool {
    g.adjacent(u, w) && g.neighbors(w).iter().all(|&x| x == u || g.adjacent(u, x))
}

/// Deletes strictly dominated vertices and keeps one representative (the
/// least name) of each class of mutually dominating vertices, in a single
/// simultaneous pass.
pub fn domination_retract(g: &Graph) -> Graph {
    let closed: Vec<Vec<usize>> = g.vertices().map(|v| g.closed_neighborhood(v)).collect();
    let mut rep_of: HashMap<&[usize], usize> = HashMap::new();
    let mut reps = Vec::new();
    for v in g.vertices() {
        rep_of.entry(closed[v].as_slice()).or_insert_with(|| {
            reps.push(v);
            v
        });
    }
    let keep: Vec<usize> = reps
        .into_iter()
        .filter(|&r| {
            !g.neighbors(r)
                .iter()
                .any(|&x| closed[x].len() > closed[r].len() && dominates_index(g, x, r))
        })
        .collect();
    g.induced_by_index(&keep)
}

/// Helly property of the clique family, decided with the extended
/// triangle criterion: for every triangle, the vertices adjacent to at
/// least two of its corners must contain one vertex adjacent to all the
/// others.
pub fn is_clique_helly(g: &Graph) -> bool {
    for (a, b) in g.edges() {
        let common_ab = sorted_intersection(g.neighbors(a), g.neighbors(b));
        for &c in common_ab.iter().filter(|&&c| c > b) {
            let ac = sorted_intersection(g.neighbors(a), g.neighbors(c));
            let bc = sorted_intersection(g.neighbors(b), g.neighbors(c));
            let mut ext: Vec<usize> = common_ab.iter().chain(&ac).chain(&bc).copied().collect();
            ext.sort_unstable();
            ext.dedup();
            let universal = ext
                .iter()
                .any(|&u| ext.iter().all(|&w| w == u || g.adjacent(u, w)));
            if !universal {
                return false;
            }
        }
    }
    true
}

/// Definitional check over every subfamily of at least three maximal
/// cliques; refuses graphs with more than `cap` cliques.
pub fn helly_brute(g: &Graph, cap: usize) -> Result<bool, CliqueError> {
    let cliques = maximal_cliques(g);
    if cliques.len() > cap {
        return Err(CliqueError::TooManyCliques {
            count: cliques.len(),
            cap,
        });
    }
    let k = cliques.len();
    let meets: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| !sorted_intersection(&cliques[i], &cliques[j]).is_empty())
                .collect()
        })
        .collect();

    // Depth-first over pairwise intersecting families, tracking the
    // running common intersection.
    fn extend(
        cliques: &[Vec<usize>],
        meets: &[Vec<bool>],
        chosen: &mut Vec<usize>,
        common: &[usize],
        next: usize,
    ) -> bool {
        if chosen.len() >= 3 && common.is_empty() {
            return false;
        }
        for j in next..cliques.len() {
            if chosen.iter().all(|&i| meets[i][j]) {
                let common2 = sorted_intersection(common, &cliques[j]);
                chosen.push(j);
                let ok = extend(cliques, meets, chosen, &common2, j + 1);
                chosen.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    for i in 0..k {
        let mut chosen = vec![i];
        if !extend(&cliques, &meets, &mut chosen, &cliques[i], i + 1) {
            return Ok(false);
        }
    }
    Ok(true)
}
