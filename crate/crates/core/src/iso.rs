//! Canonical labeling and isomorphism testing.
//!
//! Disconnected graphs are split into components and co-disconnected dense
//! graphs are handled through their complement; what remains goes through
//! colour refinement with individualization, a backtracking search over the
//! resulting tree, and pruning by automorphisms discovered along the way.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use crate::graph::Graph;

/// Isomorphism-invariant fingerprint: the vertex count followed by the
/// sorted edge list under a canonical vertex ordering.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u32>);

impl CanonicalForm {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0[0] as usize
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CanonicalForm(n={}, m={})",
            self.0[0],
            (self.0.len() - 1) / 2
        )
    }
}

/// Canonical vertex ordering: position `i` holds the vertex placed at `i`.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    let adj: Vec<Vec<usize>> = g.vertices().map(|v| g.neighbors(v).to_vec()).collect();
    canon_order(&adj)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let adj: Vec<Vec<usize>> = g.vertices().map(|v| g.neighbors(v).to_vec()).collect();
    let order = canon_order(&adj);
    CanonicalForm(encode(&adj, &order))
}

/// Returns `map` with `map[v]` the image in `h` of vertex `v` of `g`, or
/// `None` when the graphs are not isomorphic.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let ag: Vec<Vec<usize>> = g.vertices().map(|v| g.neighbors(v).to_vec()).collect();
    let ah: Vec<Vec<usize>> = h.vertices().map(|v| h.neighbors(v).to_vec()).collect();
    let og = canon_order(&ag);
    let oh = canon_order(&ah);
    if encode(&ag, &og) != encode(&ah, &oh) {
        return None;
    }
    let mut map = vec![0; g.vertex_count()];
    for (pos, &v) in og.iter().enumerate() {
        map[v] = oh[pos];
    }
    Some(map)
}

/// Checks that `map` is a bijection `g -> h` preserving adjacency and
/// non-adjacency.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    if g.vertex_count() != h.vertex_count() || map.len() != g.vertex_count() {
        return false;
    }
    let mut seen = vec![false; h.vertex_count()];
    for &x in map {
        if x >= seen.len() || std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    g.edge_count() == h.edge_count() && g.edges().all(|(u, v)| h.adjacent(map[u], map[v]))
}

fn encode(adj: &[Vec<usize>], order: &[usize]) -> Vec<u32> {
    let n = adj.len();
    let mut pos = vec![0u32; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p as u32;
    }
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (u, list) in adj.iter().enumerate() {
        for &v in list {
            if u < v {
                let (a, b) = (pos[u], pos[v]);
                edges.push(if a < b { (a, b) } else { (b, a) });
            }
        }
    }
    edges.sort_unstable();
    let mut out = Vec::with_capacity(1 + 2 * edges.len());
    out.push(n as u32);
    for (a, b) in edges {
        out.push(a);
        out.push(b);
    }
    out
}

fn components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn sub_adjacency(adj: &[Vec<usize>], members: &[usize]) -> Vec<Vec<usize>> {
    let mut local = vec![usize::MAX; adj.len()];
    for (i, &v) in members.iter().enumerate() {
        local[v] = i;
    }
    members
        .iter()
        .map(|&v| {
            let mut l: Vec<usize> = adj[v]
                .iter()
                .filter(|&&w| local[w] != usize::MAX)
                .map(|&w| local[w])
                .collect();
            l.sort_unstable();
            l
        })
        .collect()
}

fn complement(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut mark = vec![false; n];
    (0..n)
        .map(|u| {
            for &w in &adj[u] {
                mark[w] = true;
            }
            let l = (0..n).filter(|&v| v != u && !mark[v]).collect();
            for &w in &adj[u] {
                mark[w] = false;
            }
            l
        })
        .collect()
}

fn canon_order(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 1 {
        return (0..n).collect();
    }
    let comps = components(adj);
    if comps.len() > 1 {
        let mut parts: Vec<(Vec<u32>, Vec<usize>)> = comps
            .into_iter()
            .map(|members| {
                let sub = sub_adjacency(adj, &members);
                let order = canon_order(&sub);
                let key = encode(&sub, &order);
                (key, order.into_iter().map(|i| members[i]).collect())
            })
            .collect();
        parts.sort_by(|a, b| a.0.cmp(&b.0));
        return parts.into_iter().flat_map(|(_, o)| o).collect();
    }
    let m: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if 4 * m >= n * (n - 1) {
        let co = complement(adj);
        if components(&co).len() > 1 {
            // The order is a canonical labelling of the complement, hence
            // of the graph itself.
            return canon_order(&co);
        }
    }
    Search::new(adj).run()
}

struct Leaf {
    trace: Vec<u64>,
    code: Vec<u32>,
    colors: Vec<u32>,
}

/// FNV-1a over the cell sizes of a refined partition. Any invariant total
/// order on traces yields a canonical choice; hashing keeps traces short.
fn trace_hash(sizes: &[u32]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &x in std::iter::once(&(sizes.len() as u32)).chain(sizes) {
        for b in x.to_le_bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    best: Option<Leaf>,
    first: Option<Leaf>,
    /// Discovered automorphisms, as their moved points `(v, image)`.
    autos: Vec<Vec<(usize, usize)>>,
    /// Marks the vertices individualized on the current path.
    fixed: Vec<bool>,
    /// Length of the common prefix of the current trace and the best
    /// leaf's trace. Past it the current path is strictly ahead.
    agree: usize,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        Search {
            adj,
            best: None,
            first: None,
            autos: Vec::new(),
            fixed: vec![false; adj.len()],
            agree: 0,
        }
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.adj.len();
        let mut root = Partition::unit(n);
        root.refine(self.adj, &[0]);
        let mut trace = Vec::new();
        self.dfs(root, &mut trace);
        let best = self.best.expect("search visits at least one leaf");
        let mut order = vec![0; n];
        for (v, &c) in best.colors.iter().enumerate() {
            order[c as usize] = v;
        }
        order
    }

    /// Pushes the next trace entry; returns false if the path falls
    /// behind the best leaf.
    fn push_trace(&mut self, trace: &mut Vec<u64>, h: u64) -> bool {
        trace.push(h);
        let d = trace.len();
        if let Some(best) = &self.best {
            if self.agree == d - 1 {
                match best.trace.get(d - 1).map(|b| h.cmp(b)) {
                    Some(Ordering::Less) => {
                        trace.pop();
                        return false;
                    }
                    Some(Ordering::Equal) => self.agree = d,
                    // Longer than the best trace counts as ahead.
                    _ => {}
                }
            }
        }
        true
    }

    fn pop_trace(&mut self, trace: &mut Vec<u64>) {
        trace.pop();
        self.agree = self.agree.min(trace.len());
    }

    /// `part` is already refined.
    fn dfs(&mut self, part: Partition, trace: &mut Vec<u64>) {
        let n = part.elems.len();
        if !self.push_trace(trace, trace_hash(&part.cell_sizes())) {
            return;
        }
        if part.cells == n {
            let colors = part.pos.iter().map(|&p| p as u32).collect();
            self.leaf(colors, trace);
            self.pop_trace(trace);
            return;
        }
        let target = part.smallest_open_cell();
        let cell: Vec<usize> = part.elems[target..part.end[target]].to_vec();
        let mut explored: Vec<usize> = Vec::new();
        let mut autos_seen = usize::MAX;
        let mut orbits: Vec<usize> = Vec::new();
        for &w in &cell {
            if !explored.is_empty() {
                if autos_seen != self.autos.len() {
                    orbits = self.stabilizer_orbits(n);
                    autos_seen = self.autos.len();
                }
                let ow = find(&mut orbits, w);
                if explored.iter().any(|&x| find(&mut orbits, x) == ow) {
                    continue;
                }
            }
            explored.push(w);
            let mut child = part.clone();
            let s = child.individualize(w);
            child.refine(self.adj, &[s]);
            self.fixed[w] = true;
            self.dfs(child, trace);
            self.fixed[w] = false;
        }
        self.pop_trace(trace);
    }

    fn leaf(&mut self, colors: Vec<u32>, trace: &[u64]) {
        let order: Vec<usize> = {
            let mut o = vec![0; colors.len()];
            for (v, &c) in colors.iter().enumerate() {
                o[c as usize] = v;
            }
            o
        };
        let code = encode(self.adj, &order);
        let leaf = Leaf {
            trace: trace.to_vec(),
            code,
            colors,
        };
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.trace == leaf.trace && reference.code == leaf.code {
                let mut ref_order = vec![0; leaf.colors.len()];
                for (v, &c) in reference.colors.iter().enumerate() {
                    ref_order[c as usize] = v;
                }
                let moved: Vec<(usize, usize)> = leaf
                    .colors
                    .iter()
                    .enumerate()
                    .map(|(v, &c)| (v, ref_order[c as usize]))
                    .filter(|&(v, g)| v != g)
                    .collect();
                if !moved.is_empty() {
                    self.autos.push(moved);
                }
                return;
            }
        }
        let better = match &self.best {
            None => true,
            Some(b) => (&leaf.trace, &leaf.code) > (&b.trace, &b.code),
        };
        if self.first.is_none() {
            self.first = Some(Leaf {
                trace: leaf.trace.clone(),
                code: leaf.code.clone(),
                colors: leaf.colors.clone(),
            });
        }
        if better {
            self.agree = leaf.trace.len();
            self.best = Some(leaf);
        }
    }

    /// Orbit partition (union-find parents) of the group generated by the
    /// known automorphisms that fix every individualized vertex.
    fn stabilizer_orbits(&self, n: usize) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..n).collect();
        for moved in &self.autos {
            if moved.iter().all(|&(v, _)| !self.fixed[v]) {
                for &(v, g) in moved {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, g));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        parent
    }
}

/// Ordered partition of the vertices into cells, each a contiguous range
/// of `elems`; a cell is named by its start position.
#[derive(Clone)]
struct Partition {
    elems: Vec<usize>,
    pos: Vec<usize>,
    start: Vec<usize>,
    /// `end[s]` for every cell start `s`.
    end: Vec<usize>,
    cells: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut end = vec![0; n];
        if n > 0 {
            end[0] = n;
        }
        Partition {
            elems: (0..n).collect(),
            pos: (0..n).collect(),
            start: vec![0; n],
            end,
            cells: usize::from(n > 0),
        }
    }

    fn cell_sizes(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.cells);
        let mut s = 0;
        while s < self.elems.len() {
            out.push((self.end[s] - s) as u32);
            s = self.end[s];
        }
        out
    }

    fn smallest_open_cell(&self) -> usize {
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < self.elems.len() {
            let size = self.end[s] - s;
            if size > 1 && best.is_none_or(|(b, _)| size < b) {
                best = Some((size, s));
            }
            s = self.end[s];
        }
        best.expect("partition is not discrete").1
    }

    fn place(&mut self, v: usize, at: usize) {
        self.elems[at] = v;
        self.pos[v] = at;
    }

    /// Splits `w` off the front of its cell; returns the new singleton.
    fn individualize(&mut self, w: usize) -> usize {
        let s = self.start[w];
        let e = self.end[s];
        let other = self.elems[s];
        let p = self.pos[w];
        self.place(other, p);
        self.place(w, s);
        self.end[s] = s + 1;
        self.end[s + 1] = e;
        for i in s + 1..e {
            self.start[self.elems[i]] = s + 1;
        }
        self.cells += 1;
        s
    }

    /// Refines to the coarsest equitable partition below the current one,
    /// starting from the given splitter cells. Every choice depends only
    /// on cell positions and neighbor counts, so the result is invariant.
    fn refine(&mut self, adj: &[Vec<usize>], splitters: &[usize]) {
        let n = self.elems.len();
        let mut count = vec![0u32; n];
        let mut in_queue = vec![false; n];
        let mut queue: VecDeque<usize> = splitters.iter().copied().collect();
        for &s in splitters {
            in_queue[s] = true;
        }
        let mut touched: Vec<usize> = Vec::new();
        let mut cells: Vec<usize> = Vec::new();
        while let Some(sc) = queue.pop_front() {
            if self.cells == n {
                break;
            }
            in_queue[sc] = false;
            for i in sc..self.end[sc] {
                for &u in &adj[self.elems[i]] {
                    if count[u] == 0 {
                        touched.push(u);
                    }
                    count[u] += 1;
                }
            }
            cells.clear();
            cells.extend(touched.iter().map(|&u| self.start[u]));
            cells.sort_unstable();
            cells.dedup();
            for &cs in &cells {
                let ce = self.end[cs];
                let first = count[self.elems[cs]];
                if self.elems[cs..ce].iter().all(|&v| count[v] == first) {
                    continue;
                }
                let mut members: Vec<(u32, usize)> =
                    self.elems[cs..ce].iter().map(|&v| (count[v], v)).collect();
                members.sort_unstable();
                let mut frags: Vec<(usize, usize)> = Vec::new();
                for (i, &(c, v)) in members.iter().enumerate() {
                    self.place(v, cs + i);
                    if i == 0 || c != members[i - 1].0 {
                        frags.push((cs + i, cs + i));
                    }
                    frags.last_mut().unwrap().1 = cs + i + 1;
                }
                for &(fs, fe) in &frags {
                    self.end[fs] = fe;
                    for i in fs..fe {
                        self.start[self.elems[i]] = fs;
                    }
                }
                self.cells += frags.len() - 1;
                // A queued cell keeps its start and stays queued; otherwise
                // the largest fragment need not be used as a splitter.
                let skip = if in_queue[cs] {
                    cs
                } else {
                    let mut big = frags[0];
                    for &f in &frags {
                        if f.1 - f.0 > big.1 - big.0 {
                            big = f;
                        }
                    }
                    big.0
                };
                for &(fs, _) in &frags {
                    if fs != skip && !in_queue[fs] {
                        in_queue[fs] = true;
                        queue.push_back(fs);
                    }
                }
            }
            for &u in &touched {
                count[u] = 0;
            }
            touched.clear();
        }
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}
