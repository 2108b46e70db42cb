//! Graph homomorphisms and triangular covering maps: verification,
//! quotients by fixed-point-free automorphisms, the induced map on clique
//! graphs, and finite balls of universal triangular covers.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::cliques::CliqueGraphResult;
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("map is not total: source vertex `{0}` has no image")]
    NotTotal(String),
    #[error("source vertex `{0}` is mapped twice")]
    MappedTwice(String),
    #[error("image `{0}` is not a target vertex")]
    OutsideTarget(String),
    #[error("map is not a graph homomorphism")]
    NotHomomorphism,
    #[error("map is not a triangular covering map (fails at `{0}`)")]
    NotTriangularCover(String),
    #[error("permutation is not a bijection on the vertex set")]
    NotPermutation,
    #[error("permutation is not an automorphism (edge {0} -- {1} is not preserved)")]
    NotAutomorphism(String, String),
    #[error("permutation fixes vertex `{0}`")]
    FixedPoint(String),
    #[error("image of clique {0:?} is not a maximal clique of the target")]
    ImageNotMaximal(Vec<String>),
    #[error("graph is not connected")]
    Disconnected,
    #[error("composed maps do not share the middle graph")]
    Mismatch,
}

/// A vertex map between two graphs; `map[v]` is the target index of the
/// source vertex `v`. Construction checks totality, not adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphHom {
    pub source: Graph,
    pub target: Graph,
    pub map: Vec<usize>,
}

impl GraphHom {
    pub fn new(source: Graph, target: Graph, map: Vec<usize>) -> Result<Self, CoverError> {
        if map.len() != source.vertex_count() {
            let missing = source.name(map.len().min(source.vertex_count().saturating_sub(1)));
            return Err(CoverError::NotTotal(missing.to_string()));
        }
        if let Some(&bad) = map.iter().find(|&&t| t >= target.vertex_count()) {
            return Err(CoverError::OutsideTarget(bad.to_string()));
        }
        Ok(GraphHom {
            source,
            target,
            map,
        })
    }

    /// Builds the map from `(source name, target name)` pairs.
    pub fn from_pairs<'a>(
        source: Graph,
        target: Graph,
        pairs: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self, CoverError> {
        let mut map = vec![usize::MAX; source.vertex_count()];
        for (s, t) in pairs {
            let si = source.require(s)?;
            let ti = target
                .index_of(t)
                .ok_or_else(|| CoverError::OutsideTarget(t.to_string()))?;
            if map[si] != usize::MAX {
                return Err(CoverError::MappedTwice(s.to_string()));
            }
            map[si] = ti;
        }
        if let Some(v) = map.iter().position(|&t| t == usize::MAX) {
            return Err(CoverError::NotTotal(source.name(v).to_string()));
        }
        Ok(GraphHom {
            source,
            target,
            map,
        })
    }

    pub fn identity(g: &Graph) -> Self {
        GraphHom {
            source: g.clone(),
            target: g.clone(),
            map: g.vertices().collect(),
        }
    }

    pub fn image_name(&self, v: usize) -> &str {
        self.target.name(self.map[v])
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GraphHom) -> Result<GraphHom, CoverError> {
        if self.target != other.source {
            return Err(CoverError::Mismatch);
        }
        Ok(GraphHom {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&m| other.map[m]).collect(),
        })
    }
}

pub fn verify_hom(p: &GraphHom) -> bool {
    p.source
        .edges()
        .all(|(u, v)| p.target.adjacent(p.map[u], p.map[v]))
}

/// A distance that may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub is_hom: bool,
    /// The map restricts to an isomorphism `N[v] -> N[p(v)]` for every
    /// source vertex `v`.
    pub is_triangular_cover: bool,
    /// `p(N[v]) ⊇ N[p(v)]` for every `v`.
    pub locally_surjective: bool,
    /// Least distance between two distinct vertices with the same image.
    pub min_fiber_distance: Distance,
    pub failing_vertex: Option<String>,
}

impl CoverReport {
    /// The fiber-distance characterization: a locally surjective map whose
    /// fibers are more than three apart. Agrees with `is_triangular_cover`
    /// on every homomorphism.
    pub fn fiber_criterion(&self) -> bool {
        self.is_hom && self.locally_surjective && self.min_fiber_distance > Distance::Finite(3)
    }
}

/// Full report for any vertex map; never fails.
pub fn cover_report(p: &GraphHom) -> CoverReport {
    let is_hom = verify_hom(p);
    let mut locally_surjective = true;
    let mut failing = None;
    let mut mark = vec![usize::MAX; p.target.vertex_count()];
    for v in p.source.vertices() {
        let closed = p.source.closed_neighborhood(v);
        let image_closed = p.target.closed_neighborhood(p.map[v]);
        // Injective on N[v]?
        let mut injective = true;
        for &u in &closed {
            let t = p.map[u];
            if mark[t] == v {
                injective = false;
            }
            mark[t] = v;
        }
        let covers_all = image_closed.iter().all(|&t| mark[t] == v);
        if !covers_all {
            locally_surjective = false;
        }
        let mut ok = is_hom && injective && covers_all && closed.len() == image_closed.len();
        if ok {
            'pairs: for (i, &a) in closed.iter().enumerate() {
                for &b in &closed[i + 1..] {
                    if p.source.adjacent(a, b) != p.target.adjacent(p.map[a], p.map[b]) {
                        ok = false;
                        break 'pairs;
                    }
                }
            }
        }
        if !ok && failing.is_none() {
            failing = Some(p.source.name(v).to_string());
        }
    }
    CoverReport {
        is_hom,
        is_triangular_cover: is_hom && failing.is_none(),
        locally_surjective,
        min_fiber_distance: min_fiber_distance(p),
        failing_vertex: failing,
    }
}

/// Report for a homomorphism; a map that is not one is a precondition
/// violation here.
pub fn is_triangular_cover(p: &GraphHom) -> Result<CoverReport, CoverError> {
    if !verify_hom(p) {
        return Err(CoverError::NotHomomorphism);
    }
    Ok(cover_report(p))
}

fn min_fiber_distance(p: &GraphHom) -> Distance {
    let mut fiber_size = vec![0usize; p.target.vertex_count()];
    for &t in &p.map {
        fiber_size[t] += 1;
    }
    let mut best = usize::MAX;
    let n = p.source.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut touched = Vec::new();
    for x in 0..n {
        if fiber_size[p.map[x]] < 2 {
            continue;
        }
        for &t in &touched {
            dist[t] = usize::MAX;
        }
        touched.clear();
        dist[x] = 0;
        touched.push(x);
        let mut queue = VecDeque::from([x]);
        'bfs: while let Some(u) = queue.pop_front() {
            if dist[u] + 1 >= best {
                break;
            }
            for &w in p.source.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    touched.push(w);
                    if p.map[w] == p.map[x] {
                        best = best.min(dist[w]);
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
        }
    }
    if best == usize::MAX {
        Distance::Infinite
    } else {
        Distance::Finite(best)
    }
}

#[derive(Debug, Clone)]
pub struct Quotient {
    pub graph: Graph,
    pub projection: GraphHom,
    pub report: CoverReport,
}

/// Quotient by the cyclic group generated by a fixed-point-free
/// automorphism, given as `perm[v]` = image index of `v`. Orbits are named
/// by their least member.
pub fn quotient(g: &Graph, perm: &[usize]) -> Result<Quotient, CoverError> {
    let n = g.vertex_count();
    if perm.len() != n {
        return Err(CoverError::NotPermutation);
    }
    let mut hit = vec![false; n];
    for &x in perm {
        if x >= n || std::mem::replace(&mut hit[x], true) {
            return Err(CoverError::NotPermutation);
        }
    }
    for (u, v) in g.edges() {
        if !g.adjacent(perm[u], perm[v]) {
            return Err(CoverError::NotAutomorphism(
                g.name(u).into(),
                g.name(v).into(),
            ));
        }
    }
    if let Some(v) = (0..n).find(|&v| perm[v] == v) {
        return Err(CoverError::FixedPoint(g.name(v).to_string()));
    }
    let mut orbit = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for v in 0..n {
        if orbit[v] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(v);
        let mut w = v;
        while orbit[w] == usize::MAX {
            orbit[w] = id;
            w = perm[w];
        }
    }
    let names = reps.iter().map(|&r| g.name(r).to_string()).collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| orbit[u] != orbit[v])
        .map(|(u, v)| (orbit[u], orbit[v]))
        .collect();
    let graph = Graph::from_parts(names, edges);
    // Orbit ids follow least members, which follow name order.
    let projection = GraphHom {
        source: g.clone(),
        target: graph.clone(),
        map: orbit,
    };
    let report = cover_report(&projection);
    Ok(Quotient {
        graph,
        projection,
        report,
    })
}

/// Permutation lookup from `(from, to)` name pairs.
pub fn permutation_from_pairs<'a>(
    g: &Graph,
    pairs: impl IntoIterator<Item = (&'a str, &'a str)>,
) -> Result<Vec<usize>, CoverError> {
    let mut perm = vec![usize::MAX; g.vertex_count()];
    for (a, b) in pairs {
        let (i, j) = (g.require(a)?, g.require(b)?);
        if perm[i] != usize::MAX {
            return Err(CoverError::MappedTwice(a.to_string()));
        }
        perm[i] = j;
    }
    if let Some(v) = perm.iter().position(|&x| x == usize::MAX) {
        return Err(CoverError::NotTotal(g.name(v).to_string()));
    }
    Ok(perm)
}

/// The map between clique graphs induced by a triangular cover `p`:
/// each clique `Q` of the source goes to the clique `p(Q)` of the target.
pub fn induced_clique_map(
    p: &GraphHom,
    source_k: &CliqueGraphResult,
    target_k: &CliqueGraphResult,
) -> Result<GraphHom, CoverError> {
    let report = is_triangular_cover(p)?;
    if !report.is_triangular_cover {
        return Err(CoverError::NotTriangularCover(
            report.failing_vertex.unwrap_or_default(),
        ));
    }
    let mut map = Vec::with_capacity(source_k.cliques.len());
    for q in &source_k.cliques {
        let mut image: Vec<usize> = q.iter().map(|&v| p.map[v]).collect();
        image.sort_unstable();
        image.dedup();
        let found = target_k.find(&image).filter(|_| image.len() == q.len());
        match found {
            Some(t) => map.push(t),
            None => {
                return Err(CoverError::ImageNotMaximal(
                    image
                        .iter()
                        .map(|&t| p.target.name(t).to_string())
                        .collect(),
                ))
            }
        }
    }
    Ok(GraphHom {
        source: source_k.graph.clone(),
        target: target_k.graph.clone(),
        map,
    })
}

#[derive(Debug, Clone)]
pub struct UniversalBall {
    pub cover: Graph,
    pub projection: GraphHom,
    /// Distance from the lifted basepoint, by cover vertex index.
    pub depths: Vec<usize>,
    /// Cover vertices whose closed neighborhood is not yet a full lift.
    pub boundary: Vec<usize>,
    pub basepoint: usize,
}

impl UniversalBall {
    pub fn is_boundary(&self, v: usize) -> bool {
        self.boundary.binary_search(&v).is_ok()
    }
}

struct Development<'g> {
    g: &'g Graph,
    image: Vec<usize>,
    depth: Vec<usize>,
    parent: Vec<usize>,
    completed: Vec<bool>,
    nbr: Vec<BTreeMap<usize, usize>>,
    pending: Vec<(usize, usize)>,
}

impl<'g> Development<'g> {
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn create(&mut self, image: usize, depth: usize) -> usize {
        let id = self.image.len();
        self.image.push(image);
        self.depth.push(depth);
        self.parent.push(id);
        self.completed.push(false);
        self.nbr.push(BTreeMap::new());
        id
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        debug_assert_ne!(a, b);
        let (ia, ib) = (self.image[a], self.image[b]);
        match self.nbr[a].get(&ib) {
            Some(&c) if c == b => {}
            Some(&c) => self.pending.push((c, b)),
            None => match self.nbr[b].get(&ia) {
                Some(&c) => self.pending.push((c, a)),
                None => {
                    self.nbr[a].insert(ib, b);
                    self.nbr[b].insert(ia, a);
                }
            },
        }
    }

    /// Identifies cover vertices that must coincide, cascading.
    fn settle(&mut self) {
        while let Some((x, y)) = self.pending.pop() {
            let (x, y) = (self.find(x), self.find(y));
            if x == y {
                continue;
            }
            let (keep, gone) = (x.min(y), x.max(y));
            self.parent[gone] = keep;
            self.depth[keep] = self.depth[keep].min(self.depth[gone]);
            self.completed[keep] |= self.completed[gone];
            let moved = std::mem::take(&mut self.nbr[gone]);
            let ig = self.image[gone];
            for (_, w) in moved {
                let w = self.find(w);
                if self.nbr[w].get(&ig) == Some(&gone) {
                    self.nbr[w].remove(&ig);
                }
                if w != keep {
                    self.add_edge(keep, w);
                }
            }
            // Neighbour maps may still point at merged-away ids.
            for list in self.nbr.iter_mut() {
                for val in list.values_mut() {
                    if *val == gone {
                        *val = keep;
                    }
                }
            }
        }
    }

    fn complete(&mut self, x: usize) {
        let v = self.image[x];
        let link: Vec<usize> = self.g.neighbors(v).to_vec();
        let mut lift: BTreeMap<usize, usize> = self.nbr[x].clone();
        loop {
            let mut changed = false;
            for &u in &link {
                if lift.contains_key(&u) {
                    continue;
                }
                let found = lift
                    .iter()
                    .filter(|&(&w, _)| self.g.adjacent(u, w))
                    .find_map(|(_, &y)| self.nbr[y].get(&u).copied());
                if let Some(z) = found {
                    let z = self.find(z);
                    lift.insert(u, z);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let d = self.depth[x] + 1;
        for &u in &link {
            if let std::collections::btree_map::Entry::Vacant(e) = lift.entry(u) {
                e.insert(self.create(u, d));
            }
        }
        for &u in &link {
            self.add_edge(x, lift[&u]);
        }
        for (i, &u) in link.iter().enumerate() {
            for &w in &link[i + 1..] {
                if self.g.adjacent(u, w) {
                    self.add_edge(lift[&u], lift[&w]);
                }
            }
        }
        let x = self.find(x);
        self.completed[x] = true;
        self.settle();
    }

    fn alive(&self) -> Vec<usize> {
        (0..self.image.len())
            .filter(|&i| self.parent[i] == i)
            .collect()
    }

    fn bfs_depths(&mut self, root: usize) {
        let root = self.find(root);
        let alive = self.alive();
        for &a in &alive {
            self.depth[a] = usize::MAX;
        }
        self.depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let next: Vec<usize> = self.nbr[u].values().copied().collect();
            for w in next {
                let w = self.find(w);
                if self.depth[w] == usize::MAX {
                    self.depth[w] = self.depth[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
}

/// Finite radius-`radius` ball of the universal triangular cover of a
/// connected graph, developed breadth-first from a lift of `base`.
///
/// Every cover vertex at depth below the radius gets its closed
/// neighborhood completed: neighbors already forced by an existing
/// triangle are reused, the rest are created fresh, and exactly the edges
/// among projected neighbors are copied. Vertices that turn out to be
/// forced equal are identified.
pub fn universal_cover_ball(
    g: &Graph,
    base: &str,
    radius: usize,
) -> Result<UniversalBall, CoverError> {
    let v0 = g.require(base)?;
    if !g.is_connected() {
        return Err(CoverError::Disconnected);
    }
    let mut dev = Development {
        g,
        image: Vec::new(),
        depth: Vec::new(),
        parent: Vec::new(),
        completed: Vec::new(),
        nbr: Vec::new(),
        pending: Vec::new(),
    };
    let root = dev.create(v0, 0);
    loop {
        let mut queue: VecDeque<usize> = VecDeque::from([root]);
        let mut queued = vec![false; dev.image.len()];
        queued[root] = true;
        while let Some(x) = queue.pop_front() {
            let x = dev.find(x);
            if dev.completed[x] || dev.depth[x] >= radius {
                // Still walk through completed vertices to reach the frontier.
                let next: Vec<usize> = dev.nbr[x].values().copied().collect();
                for w in next {
                    let w = dev.find(w);
                    if w >= queued.len() {
                        queued.resize(w + 1, false);
                    }
                    if !queued[w] {
                        queued[w] = true;
                        queue.push_back(w);
                    }
                }
                continue;
            }
            dev.complete(x);
            let x = dev.find(x);
            let next: Vec<usize> = dev.nbr[x].values().copied().collect();
            for w in next {
                let w = dev.find(w);
                if w >= queued.len() {
                    queued.resize(w + 1, false);
                }
                if !queued[w] {
                    queued[w] = true;
                    queue.push_back(w);
                }
            }
        }
        dev.bfs_depths(root);
        let pending: bool = dev
            .alive()
            .into_iter()
            .any(|a| !dev.completed[a] && dev.depth[a] < radius);
        if !pending {
            break;
        }
    }

    // Name cover vertices `image~k`, k counting lifts of that image in
    // creation order.
    let alive = dev.alive();
    let mut pos = HashMap::new();
    let mut ordinal: HashMap<usize, usize> = HashMap::new();
    let mut names = Vec::with_capacity(alive.len());
    for (i, &a) in alive.iter().enumerate() {
        pos.insert(a, i);
        let k = ordinal.entry(dev.image[a]).or_insert(0);
        names.push(format!("{}~{}", g.name(dev.image[a]), k));
        *k += 1;
    }
    let mut edges = Vec::new();
    for &a in &alive {
        let next: Vec<usize> = dev.nbr[a].values().copied().collect();
        for w in next {
            let w = dev.find(w);
            if a < w {
                edges.push((pos[&a], pos[&w]));
            }
        }
    }
    let cover = Graph::from_parts(names.clone(), edges);
    let mut map = vec![0; cover.vertex_count()];
    let mut depths = vec![0; cover.vertex_count()];
    for (i, &a) in alive.iter().enumerate() {
        let idx = cover.index_of(&names[i]).unwrap();
        map[idx] = dev.image[a];
        depths[idx] = dev.depth[a];
    }
    let projection = GraphHom {
        source: cover.clone(),
        target: g.clone(),
        map,
    };
    let basepoint = cover.index_of(&names[pos[&dev.find(root)]]).unwrap();
    let boundary: Vec<usize> = cover
        .vertices()
        .filter(|&v| !local_isomorphism_at(&projection, v))
        .collect();
    Ok(UniversalBall {
        cover,
        projection,
        depths,
        boundary,
        basepoint,
    })
}

/// Whether `p` restricts to an isomorphism `N[v] -> N[p(v)]`.
pub fn local_isomorphism_at(p: &GraphHom, v: usize) -> bool {
    let closed = p.source.closed_neighborhood(v);
    let mut image: Vec<usize> = closed.iter().map(|&u| p.map[u]).collect();
    image.sort_unstable();
    image.dedup();
    if image.len() != closed.len() || image != p.target.closed_neighborhood(p.map[v]) {
        return false;
    }
    closed.iter().enumerate().all(|(i, &a)| {
        closed[i + 1..]
            .iter()
            .all(|&b| p.source.adjacent(a, b) == p.target.adjacent(p.map[a], p.map[b]))
    })
}
