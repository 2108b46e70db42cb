//! Finite simple undirected graphs with stable vertex names, plus the local
//! measurements (girth, neighborhoods, local girth, local minimum degree)
//! used by the rest of the crate.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("operation is undefined on the empty graph")]
    EmptyGraph,
}

/// Length of a shortest cycle, or `Infinite` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GirthValue {
    Finite(usize),
    Infinite,
}

impl GirthValue {
    pub fn is_infinite(self) -> bool {
        matches!(self, GirthValue::Infinite)
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            GirthValue::Finite(g) => Some(g),
            GirthValue::Infinite => None,
        }
    }
}

impl fmt::Display for GirthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GirthValue::Finite(g) => write!(f, "{g}"),
            GirthValue::Infinite => f.write_str("inf"),
        }
    }
}

/// An immutable finite simple graph.
///
/// Vertices carry text names. Internally they are indexed `0..n` in
/// ascending name order, so index order and name order always agree and
/// every derived graph keeps the names of the vertices it retains.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.names)
            .field(
                "edges",
                &self
                    .edges()
                    .map(|(u, v)| (self.name(u), self.name(v)))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Collects vertices and edges by name; duplicate edges are ignored.
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    vertices: BTreeSet<String>,
    edges: BTreeSet<(String, String)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, v: impl Into<String>) -> &mut Self {
        self.vertices.insert(v.into());
        self
    }

    pub fn add_edge(
        &mut self,
        u: impl Into<String>,
        v: impl Into<String>,
    ) -> Result<&mut Self, GraphError> {
        let (u, v) = (u.into(), v.into());
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.vertices.insert(u.clone());
        self.vertices.insert(v.clone());
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.insert(key);
        Ok(self)
    }

    pub fn build(self) -> Graph {
        let names: Vec<String> = self.vertices.into_iter().collect();
        let index: HashMap<String, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let mut adj = vec![Vec::new(); names.len()];
        for (u, v) in &self.edges {
            let (a, b) = (index[u], index[v]);
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { names, index, adj }
    }
}

impl Graph {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn builder() -> GraphBuilder {
        GraphBuilder::new()
    }

    /// Builds a graph from name strings and an edge list over positions in
    /// `names`. Names need not be sorted but must be distinct.
    ///
    /// Panics on duplicate names or self-loops; this is the internal fast
    /// path used by constructions whose output is known to be simple.
    pub fn from_parts(names: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let n = names.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        let mut new_pos = vec![0usize; n];
        for (pos, &old) in order.iter().enumerate() {
            new_pos[old] = pos;
        }
        let mut sorted_names = Vec::with_capacity(n);
        let mut names = names.into_iter().map(Some).collect::<Vec<_>>();
        for &old in &order {
            sorted_names.push(names[old].take().unwrap());
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert_ne!(u, v, "self-loop in from_parts");
            let (a, b) = (new_pos[u], new_pos[v]);
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let index: HashMap<String, usize> = sorted_names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        assert_eq!(index.len(), n, "duplicate vertex names in from_parts");
        Graph {
            names: sorted_names,
            index,
            adj,
        }
    }

    /// Convenience constructor over string edge pairs.
    pub fn from_edges<'a>(
        edges: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::new();
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize, GraphError> {
        self.index_of(name)
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn adjacent_names(&self, u: &str, v: &str) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(a), Some(b)) => self.adjacent(a, b),
            _ => false,
        }
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.names.len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Closed neighborhood `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    /// Subgraph induced on `set`, keeping names.
    pub fn induced(&self, set: &[&str]) -> Result<Graph, GraphError> {
        let mut idx = Vec::with_capacity(set.len());
        for s in set {
            idx.push(self.require(s)?);
        }
        Ok(self.induced_by_index(&idx))
    }

    pub fn induced_by_index(&self, set: &[usize]) -> Graph {
        let mut keep: Vec<usize> = set.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut pos = vec![usize::MAX; self.names.len()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let names: Vec<String> = keep.iter().map(|&v| self.names[v].clone()).collect();
        let adj: Vec<Vec<usize>> = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (pos[w] != usize::MAX).then_some(pos[w]))
                    .collect()
            })
            .collect();
        let index = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        Graph { names, index, adj }
    }

    /// Induced subgraph on the open neighborhood of `v`.
    pub fn neighborhood_graph(&self, v: &str) -> Result<Graph, GraphError> {
        let v = self.require(v)?;
        Ok(self.link(v))
    }

    pub(crate) fn link(&self, v: usize) -> Graph {
        self.induced_by_index(&self.adj[v])
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn girth(&self) -> GirthValue {
        let n = self.vertex_count();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut touched = Vec::new();
        for root in 0..n {
            for &t in &touched {
                dist[t] = usize::MAX;
                parent[t] = usize::MAX;
            }
            touched.clear();
            dist[root] = 0;
            touched.push(root);
            let mut queue = VecDeque::from([root]);
            'bfs: while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        touched.push(w);
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        if best == usize::MAX {
            GirthValue::Infinite
        } else {
            GirthValue::Finite(best)
        }
    }

    /// Minimum girth over the open neighborhoods of all vertices.
    pub fn local_girth(&self) -> Result<GirthValue, GraphError> {
        if self.is_empty() {
            return Err(GraphError::EmptyGraph);
        }
        Ok(self.local_girth_over(self.vertices()).unwrap())
    }

    /// Local girth restricted to the neighborhoods of the given vertices;
    /// `None` if the iterator is empty.
    pub fn local_girth_over(&self, vs: impl IntoIterator<Item = usize>) -> Option<GirthValue> {
        vs.into_iter().map(|v| self.link(v).girth()).min()
    }

    pub fn local_min_degree(&self) -> Result<usize, GraphError> {
        if self.is_empty() {
            return Err(GraphError::EmptyGraph);
        }
        Ok(self.local_min_degree_over(self.vertices()).unwrap())
    }

    /// Local minimum degree over the given vertices. An isolated vertex has
    /// an empty neighborhood, which counts as minimum degree 0.
    pub fn local_min_degree_over(&self, vs: impl IntoIterator<Item = usize>) -> Option<usize> {
        vs.into_iter()
            .map(|v| self.link(v).min_degree().unwrap_or(0))
            .min()
    }

    pub fn is_locally_cyclic(&self) -> bool {
        self.is_locally_cyclic_over(self.vertices())
    }

    pub fn is_locally_cyclic_over(&self, vs: impl IntoIterator<Item = usize>) -> bool {
        vs.into_iter().all(|v| self.link(v).is_cycle())
    }

    /// Connected, 2-regular, at least three vertices.
    pub fn is_cycle(&self) -> bool {
        self.vertex_count() >= 3 && self.adj.iter().all(|l| l.len() == 2) && self.is_connected()
    }

    /// Removes every vertex of degree exactly one, all at once.
    pub fn prune_degree_one(&self) -> Graph {
        let keep: Vec<usize> = self.vertices().filter(|&v| self.degree(v) != 1).collect();
        self.induced_by_index(&keep)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            sorted_intersection_count(a, b) == 0
        })
    }

    /// Connected components, each sorted, ordered by least member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.components().len() == 1
    }

    /// Breadth-first distances from `sources` (`usize::MAX` = unreachable).
    pub fn distances_from(&self, sources: &[usize]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s] != 0 {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let adj = (0..n)
            .map(|u| {
                let mut it = self.adj[u].iter().peekable();
                (0..n)
                    .filter(|&v| {
                        while it.peek().is_some_and(|&&w| w < v) {
                            it.next();
                        }
                        v != u && it.peek() != Some(&&v)
                    })
                    .collect()
            })
            .collect();
        Graph {
            names: self.names.clone(),
            index: self.index.clone(),
            adj,
        }
    }

    /// Renames every vertex; the renaming must be injective.
    pub fn relabel(&self, mut rename: impl FnMut(&str) -> String) -> Graph {
        let names: Vec<String> = self.names.iter().map(|s| rename(s)).collect();
        Graph::from_parts(names, self.edges())
    }
}

pub(crate) fn sorted_intersection_count(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

pub(crate) fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Small named graphs used across tests, examples and the CLI.
pub mod named {
    use super::Graph;

    fn numbered(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        Graph::from_parts((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn path(n: usize) -> Graph {
        numbered(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        numbered(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Graph {
        numbered(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    pub fn star(leaves: usize) -> Graph {
        numbered(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    /// Complete multipartite graph with `parts` parts of `size` vertices;
    /// vertex `i` lies in part `i / size`.
    pub fn complete_multipartite(parts: usize, size: usize) -> Graph {
        let n = parts * size;
        numbered(
            n,
            (0..n).flat_map(move |i| {
                (i + 1..n)
                    .filter(move |&j| i / size != j / size)
                    .map(move |j| (i, j))
            }),
        )
    }

    /// K_{2,2,2}; antipodal pairs are {0,1}, {2,3}, {4,5}.
    pub fn octahedron() -> Graph {
        complete_multipartite(3, 2)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        numbered(
            a + b,
            (0..a).flat_map(move |i| (a..a + b).map(move |j| (i, j))),
        )
    }

    pub fn icosahedron() -> Graph {
        // Apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
        let mut e = Vec::new();
        for i in 0..5 {
            let up = 1 + i;
            let up_next = 1 + (i + 1) % 5;
            let low = 6 + i;
            let low_next = 6 + (i + 1) % 5;
            e.extend([
                (0, up),
                (up, up_next),
                (up, low),
                (up, low_next),
                (low, low_next),
                (low, 11),
            ]);
        }
        numbered(12, e)
    }

    pub fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        numbered(10, e)
    }

    pub fn triangular_prism() -> Graph {
        numbered(
            6,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
    }
}
