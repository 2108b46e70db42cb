//! Locally finite, possibly infinite graphs given by a neighbor function,
//! finite balls extracted from them, and iterated clique graphs of those
//! balls with a record of which part of the result is certain.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;

use thiserror::Error;

use crate::cliques::{build_clique_graph, maximal_cliques};
use crate::graph::Graph;

mod families;
mod generate;
mod tree_t;

pub use families::{
    caterpillar, triangulation, CaterpillarOracle, CaterpillarVertex, LegRule, PathOracle, Row,
    Tree3Oracle, TriangulationBall, TriangulationOracle, Word,
};
pub use generate::{generate, Params, FAMILIES};
pub use tree_t::{
    t_double_prime, t_prime, tree_t, DoublePrimeVertex, PrimeVertex, TDoublePrimeOracle,
    TPrimeOracle, TVertex, TreeTOracle, Window,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle is not symmetric: `{0}` lists `{1}` but not the other way round")]
    Asymmetric(String, String),
    #[error("oracle lists `{0}` as its own neighbor")]
    SelfLoop(String),
    #[error("`{0}` is not a vertex of this graph")]
    UnknownVertex(String),
    #[error("`{0}` lies outside the window this oracle can answer for")]
    BeyondWindow(String),
    #[error("two descriptors render as the same token `{0}`")]
    DuplicateToken(String),
    #[error("extraction exceeded {0} vertices")]
    TooLarge(usize),
    #[error("radius must exceed twice the number of steps (r = {radius}, n = {steps})")]
    RadiusTooSmall { radius: usize, steps: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// A locally finite graph presented by its neighbor function.
///
/// `neighbors` must be pure, symmetric and irreflexive, and return a
/// finite sorted list.
pub trait GraphOracle {
    type Vertex: Clone + Ord + Hash + fmt::Display + fmt::Debug;

    fn basepoint(&self) -> Self::Vertex;

    fn neighbors(&self, v: &Self::Vertex) -> Result<Vec<Self::Vertex>, OracleError>;
}

impl<O: GraphOracle + ?Sized> GraphOracle for &O {
    type Vertex = O::Vertex;

    fn basepoint(&self) -> Self::Vertex {
        (**self).basepoint()
    }

    fn neighbors(&self, v: &Self::Vertex) -> Result<Vec<Self::Vertex>, OracleError> {
        (**self).neighbors(v)
    }
}

/// A finite window around a center vertex.
#[derive(Debug, Clone)]
pub struct Ball<V> {
    pub graph: Graph,
    /// Descriptor of each graph vertex, by index.
    pub vertices: Vec<V>,
    pub center: usize,
    pub depths: Vec<usize>,
    pub radius: usize,
    /// Vertices at depth `radius`; their neighborhoods may be cut off.
    pub boundary: Vec<usize>,
}

impl<V: Ord + Clone> Ball<V> {
    pub fn index_of(&self, v: &V) -> Option<usize> {
        // `vertices` follows name order, not descriptor order.
        self.vertices.iter().position(|x| x == v)
    }

    /// Lookup table from descriptor to graph index.
    pub fn lookup(&self) -> HashMap<V, usize>
    where
        V: Hash,
    {
        self.vertices
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect()
    }
}

/// Breadth-first extraction of the radius-`radius` ball around `center`,
/// with every edge among the extracted vertices.
pub fn ball<O: GraphOracle>(
    o: &O,
    center: &O::Vertex,
    radius: usize,
) -> Result<Ball<O::Vertex>, OracleError> {
    extract(o, center, radius, usize::MAX)
}

/// Extracts the whole connected component of `center`, failing once more
/// than `cap` vertices are found. Only meaningful for finite oracles.
pub fn exhaust<O: GraphOracle>(
    o: &O,
    center: &O::Vertex,
    cap: usize,
) -> Result<Ball<O::Vertex>, OracleError> {
    extract(o, center, usize::MAX, cap)
}

fn extract<O: GraphOracle>(
    o: &O,
    center: &O::Vertex,
    radius: usize,
    cap: usize,
) -> Result<Ball<O::Vertex>, OracleError> {
    let mut id: HashMap<O::Vertex, usize> = HashMap::new();
    let mut verts = vec![center.clone()];
    let mut depth = vec![0usize];
    let mut lists: Vec<Vec<O::Vertex>> = Vec::new();
    id.insert(center.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let v = verts[i].clone();
        let nbrs = o.neighbors(&v)?;
        if nbrs.contains(&v) {
            return Err(OracleError::SelfLoop(v.to_string()));
        }
        if depth[i] < radius {
            for w in &nbrs {
                if !id.contains_key(w) {
                    if verts.len() >= cap {
                        return Err(OracleError::TooLarge(cap));
                    }
                    id.insert(w.clone(), verts.len());
                    verts.push(w.clone());
                    depth.push(depth[i] + 1);
                    queue.push_back(verts.len() - 1);
                }
            }
        }
        if lists.len() <= i {
            lists.resize(i + 1, Vec::new());
        }
        lists[i] = nbrs;
    }
    let mut edges = Vec::new();
    for (i, list) in lists.iter().enumerate() {
        for w in list {
            if let Some(&j) = id.get(w) {
                if !lists[j].contains(&verts[i]) {
                    return Err(OracleError::Asymmetric(verts[i].to_string(), w.to_string()));
                }
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    let names: Vec<String> = verts.iter().map(ToString::to_string).collect();
    let mut seen = std::collections::HashSet::new();
    if let Some(dup) = names.iter().find(|n| !seen.insert(n.as_str())) {
        return Err(OracleError::DuplicateToken(dup.clone()));
    }
    let graph = Graph::from_parts(names.clone(), edges);
    let mut order = vec![0usize; verts.len()];
    for (i, name) in names.iter().enumerate() {
        order[graph.index_of(name).unwrap()] = i;
    }
    let vertices: Vec<O::Vertex> = order.iter().map(|&i| verts[i].clone()).collect();
    let depths: Vec<usize> = order.iter().map(|&i| depth[i]).collect();
    let boundary = (0..depths.len()).filter(|&v| depths[v] == radius).collect();
    Ok(Ball {
        center: graph.index_of(&names[0]).unwrap(),
        graph,
        vertices,
        depths,
        radius,
        boundary,
    })
}

/// A finite graph seen through the oracle interface.
#[derive(Debug, Clone)]
pub struct FiniteOracle {
    graph: Graph,
    base: String,
}

impl FiniteOracle {
    pub fn new(graph: Graph, base: &str) -> Result<Self, OracleError> {
        if !graph.contains(base) {
            return Err(OracleError::UnknownVertex(base.to_string()));
        }
        Ok(FiniteOracle {
            graph,
            base: base.to_string(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

impl GraphOracle for FiniteOracle {
    type Vertex = String;

    fn basepoint(&self) -> String {
        self.base.clone()
    }

    fn neighbors(&self, v: &String) -> Result<Vec<String>, OracleError> {
        let i = self
            .graph
            .index_of(v)
            .ok_or_else(|| OracleError::UnknownVertex(v.clone()))?;
        Ok(self
            .graph
            .neighbors(i)
            .iter()
            .map(|&w| self.graph.name(w).to_string())
            .collect())
    }
}

/// A clique of an oracle graph: its members, sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CliqueVertex<V>(pub Vec<V>);

impl<V: fmt::Display> fmt::Display for CliqueVertex<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// The clique graph of an oracle graph, itself an oracle.
///
/// The neighbors of a clique `Q` are found inside the subgraph induced on
/// `N[Q]`: every clique meeting `Q` lies there, and so does every vertex
/// that could extend it.
#[derive(Debug, Clone)]
pub struct CliqueOracle<O> {
    inner: O,
}

pub fn clique_oracle<O: GraphOracle>(inner: O) -> CliqueOracle<O> {
    CliqueOracle { inner }
}

impl<O: GraphOracle> CliqueOracle<O> {
    pub fn inner(&self) -> &O {
        &self.inner
    }

    /// Maximal cliques of the inner graph meeting `seed`, all computed in
    /// the subgraph induced on `N[seed]`.
    fn cliques_meeting(&self, seed: &[O::Vertex]) -> Result<Vec<Vec<O::Vertex>>, OracleError> {
        let mut local: Vec<O::Vertex> = seed.to_vec();
        for q in seed {
            local.extend(self.inner.neighbors(q)?);
        }
        local.sort();
        local.dedup();
        let pos: HashMap<&O::Vertex, usize> =
            local.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut edges = Vec::new();
        for (i, v) in local.iter().enumerate() {
            for w in self.inner.neighbors(v)? {
                if let Some(&j) = pos.get(&w) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        let width = local.len().to_string().len();
        let g = Graph::from_parts(
            (0..local.len()).map(|i| format!("{i:0width$}")).collect(),
            edges,
        );
        let seed_idx: Vec<usize> = seed.iter().map(|s| pos[s]).collect();
        Ok(maximal_cliques(&g)
            .into_iter()
            .filter(|c| c.iter().any(|v| seed_idx.contains(v)))
            .map(|c| {
                let mut members: Vec<O::Vertex> = c.into_iter().map(|i| local[i].clone()).collect();
                members.sort();
                members
            })
            .collect())
    }
}

impl<O: GraphOracle> GraphOracle for CliqueOracle<O> {
    type Vertex = CliqueVertex<O::Vertex>;

    fn basepoint(&self) -> Self::Vertex {
        let b = self.inner.basepoint();
        let mut found = self
            .cliques_meeting(std::slice::from_ref(&b))
            .expect("basepoint neighborhood must be answerable");
        found.sort();
        CliqueVertex(found.swap_remove(0))
    }

    fn neighbors(&self, q: &Self::Vertex) -> Result<Vec<Self::Vertex>, OracleError> {
        let all = self.cliques_meeting(&q.0)?;
        if !all.contains(&q.0) {
            return Err(OracleError::UnknownVertex(q.to_string()));
        }
        let mut out: Vec<Self::Vertex> = all
            .into_iter()
            .filter(|c| c != &q.0)
            .map(CliqueVertex)
            .collect();
        out.sort();
        Ok(out)
    }
}

/// One level of a trusted iteration.
#[derive(Debug, Clone)]
pub struct TrustLevel {
    pub graph: Graph,
    /// For level `i > 0`: the clique of level `i - 1` behind each vertex.
    pub members: Vec<Vec<usize>>,
    /// Vertices whose entire true neighborhood is present at this level.
    pub interior: Vec<bool>,
    /// Base-ball vertices underlying each vertex, sorted.
    pub support: Vec<Vec<usize>>,
}

/// Iterated clique graphs of a ball, restricted at every step to the
/// cliques that are certainly cliques of the infinite graph.
///
/// Level `i` holds only cliques that meet the interior of level `i - 1`.
/// Such cliques, and all adjacencies among them, agree with the true
/// `k^i` of the oracle graph; the interior shrinks to the cliques lying
/// entirely inside the previous interior.
#[derive(Debug, Clone)]
pub struct TrustedIterate<V> {
    pub base: Ball<V>,
    pub levels: Vec<TrustLevel>,
    /// `radius - 2 * steps`.
    pub trust_radius: usize,
    /// Final-level vertices whose support lies within `trust_radius` of
    /// the center.
    pub trusted: Vec<usize>,
}

impl<V: Clone + Ord + Hash> TrustedIterate<V> {
    pub fn steps(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn graph(&self) -> &Graph {
        &self.levels.last().unwrap().graph
    }

    pub fn level(&self, i: usize) -> &TrustLevel {
        &self.levels[i]
    }

    pub fn is_trusted(&self, v: usize) -> bool {
        self.trusted.binary_search(&v).is_ok()
    }

    /// Vertices of level `i - 2` shared by all members of the members of
    /// `v` at level `i`. For a clique of `k^2` arising from the cliques
    /// through one vertex, this is that vertex.
    pub fn core(&self, i: usize, v: usize) -> Vec<usize> {
        assert!(i >= 2);
        let lvl = &self.levels[i];
        let prev = &self.levels[i - 1];
        let mut common: Option<Vec<usize>> = None;
        for &m in &lvl.members[v] {
            let set = &prev.members[m];
            common = Some(match common {
                None => set.clone(),
                Some(c) => crate::graph::sorted_intersection(&c, set),
            });
        }
        common.unwrap_or_default()
    }

    /// Maps every vertex of every level of `self` to the vertex of `other`
    /// with the same descriptor (level 0) or the same members. Returns
    /// `None` if some vertex has no counterpart.
    pub fn embedding_into(&self, other: &TrustedIterate<V>) -> Option<Vec<Vec<usize>>> {
        if other.levels.len() < self.levels.len() {
            return None;
        }
        let lookup = other.base.lookup();
        let mut maps = Vec::with_capacity(self.levels.len());
        let base_map: Option<Vec<usize>> = self
            .base
            .vertices
            .iter()
            .map(|v| lookup.get(v).copied())
            .collect();
        maps.push(base_map?);
        for i in 1..self.levels.len() {
            let table: HashMap<&[usize], usize> = other.levels[i]
                .members
                .iter()
                .enumerate()
                .map(|(j, m)| (m.as_slice(), j))
                .collect();
            let prev = &maps[i - 1];
            let mut map = Vec::with_capacity(self.levels[i].members.len());
            for m in &self.levels[i].members {
                let mut image: Vec<usize> = m.iter().map(|&x| prev[x]).collect();
                image.sort_unstable();
                map.push(*table.get(image.as_slice())?);
            }
            maps.push(map);
        }
        Some(maps)
    }
}

/// Extracts the radius-`radius` ball around `center` and applies the
/// clique operator `steps` times, keeping only certified cliques.
pub fn trusted_iterate<O: GraphOracle>(
    o: &O,
    center: &O::Vertex,
    radius: usize,
    steps: usize,
) -> Result<TrustedIterate<O::Vertex>, OracleError> {
    if radius <= 2 * steps {
        return Err(OracleError::RadiusTooSmall { radius, steps });
    }
    let base = ball(o, center, radius)?;
    Ok(iterate_ball(base, steps))
}

/// The trusted iteration of an already extracted ball.
pub fn iterate_ball<V: Clone + Ord + Hash>(base: Ball<V>, steps: usize) -> TrustedIterate<V> {
    let radius = base.radius;
    let level0 = TrustLevel {
        graph: base.graph.clone(),
        members: Vec::new(),
        interior: base.depths.iter().map(|&d| d < radius).collect(),
        support: (0..base.graph.vertex_count()).map(|v| vec![v]).collect(),
    };
    let mut levels = vec![level0];
    for _ in 0..steps {
        let prev = levels.last().unwrap();
        let kept: Vec<Vec<usize>> = maximal_cliques(&prev.graph)
            .into_iter()
            .filter(|c| c.iter().any(|&v| prev.interior[v]))
            .collect();
        let interior = kept
            .iter()
            .map(|c| c.iter().all(|&v| prev.interior[v]))
            .collect();
        let support = kept
            .iter()
            .map(|c| {
                let mut s: Vec<usize> = c
                    .iter()
                    .flat_map(|&v| prev.support[v].iter().copied())
                    .collect();
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        let k = build_clique_graph(&prev.graph, kept);
        levels.push(TrustLevel {
            graph: k.graph,
            members: k.cliques,
            interior,
            support,
        });
    }
    let trust_radius = radius.saturating_sub(2 * steps);
    let last = levels.last().unwrap();
    let trusted = (0..last.graph.vertex_count())
        .filter(|&v| {
            last.support[v]
                .iter()
                .all(|&b| base.depths[b] <= trust_radius)
        })
        .collect();
    TrustedIterate {
        base,
        levels,
        trust_radius,
        trusted,
    }
}
