//! Iterating the clique operator: period detection, budget handling, and
//! the two accelerated double steps (clique-Helly retraction and leaf
//! pruning for triangle-free graphs).

use std::collections::HashMap;

use thiserror::Error;

use crate::cliques::{clique_graph, clique_graph_bounded, domination_retract, is_clique_helly};
use crate::graph::Graph;
use crate::iso::{are_isomorphic, canonical_form};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DynamicsError {
    #[error("budget values must be at least 1")]
    InvalidBudget,
    #[error("graph is not clique-Helly")]
    NotCliqueHelly,
    #[error("graph contains a triangle")]
    NotTriangleFree,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph needs at least two vertices")]
    TooSmall,
    #[error("leaf pruning gave {pruned} vertices but the second clique graph has {direct}; they are not isomorphic")]
    ValidationMismatch { pruned: usize, direct: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    max_steps: usize,
    max_vertices: usize,
}

impl Budget {
    pub fn new(max_steps: usize, max_vertices: usize) -> Result<Self, DynamicsError> {
        if max_steps == 0 || max_vertices == 0 {
            return Err(DynamicsError::InvalidBudget);
        }
        Ok(Budget {
            max_steps,
            max_vertices,
        })
    }

    pub fn max_steps(&self) -> usize {
        self.max_steps
    }

    pub fn max_vertices(&self) -> usize {
        self.max_vertices
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Converged,
    BudgetExceeded,
}

/// Which budget ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exhausted {
    Steps,
    Vertices,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynamicsReport {
    pub status: Status,
    /// Vertex counts of `k^0 G, k^1 G, ...` for every iterate computed.
    pub size_sequence: Vec<usize>,
    pub preperiod: Option<usize>,
    pub period: Option<usize>,
    /// `(m, m + p)`: two steps with equal canonical forms.
    pub witness: Option<(usize, usize)>,
    pub exhausted: Option<Exhausted>,
}

/// Iterates the clique operator until a canonical form repeats or the
/// budget runs out. A budget stop carries no claim of divergence.
pub fn iterate(g: &Graph, budget: Budget) -> DynamicsReport {
    iterate_collect(g, budget).0
}

/// Same as [`iterate`], also returning every iterate computed.
pub fn iterate_collect(g: &Graph, budget: Budget) -> (DynamicsReport, Vec<Graph>) {
    let mut seen = HashMap::new();
    let mut graphs = vec![g.clone()];
    let mut sizes = vec![g.vertex_count()];
    let stop = |sizes: Vec<usize>, why| DynamicsReport {
        status: Status::BudgetExceeded,
        size_sequence: sizes,
        preperiod: None,
        period: None,
        witness: None,
        exhausted: Some(why),
    };
    if g.vertex_count() > budget.max_vertices {
        return (stop(sizes, Exhausted::Vertices), graphs);
    }
    let mut step = 0;
    loop {
        let current = graphs.last().unwrap();
        let form = canonical_form(current);
        if let Some(&m) = seen.get(&form) {
            let report = DynamicsReport {
                status: Status::Converged,
                size_sequence: sizes,
                preperiod: Some(m),
                period: Some(step - m),
                witness: Some((m, step)),
                exhausted: None,
            };
            return (report, graphs);
        }
        seen.insert(form, step);
        if step == budget.max_steps {
            return (stop(sizes, Exhausted::Steps), graphs);
        }
        match clique_graph_bounded(current, budget.max_vertices) {
            Ok(next) => {
                step += 1;
                sizes.push(next.graph.vertex_count());
                graphs.push(next.graph);
            }
            Err(_) => return (stop(sizes, Exhausted::Vertices), graphs),
        }
    }
}

/// `k^n G` by direct computation.
pub fn kth_clique_graph(g: &Graph, n: usize) -> Graph {
    let mut cur = g.clone();
    for _ in 0..n {
        cur = clique_graph(&cur).graph;
    }
    cur
}

/// `k^2 G` for clique-Helly `G`, computed as the domination retract.
pub fn helly_double_step(g: &Graph) -> Result<Graph, DynamicsError> {
    if !is_clique_helly(g) {
        return Err(DynamicsError::NotCliqueHelly);
    }
    Ok(domination_retract(g))
}

/// `k^2 G` for connected triangle-free `G`, computed by deleting the
/// vertices of degree one. With `validate`, the second clique graph is
/// also computed directly and a mismatch is reported as an error.
///
/// The shortcut holds for every connected triangle-free graph on at least
/// three vertices; `K2` is the one case where it fails (`k^2 K2 = K1`).
pub fn triangle_free_double_step(g: &Graph, validate: bool) -> Result<Graph, DynamicsError> {
    if g.vertex_count() < 2 {
        return Err(DynamicsError::TooSmall);
    }
    if !g.is_connected() {
        return Err(DynamicsError::Disconnected);
    }
    if !g.is_triangle_free() {
        return Err(DynamicsError::NotTriangleFree);
    }
    let pruned = g.prune_degree_one();
    if validate {
        let direct = kth_clique_graph(g, 2);
        if are_isomorphic(&pruned, &direct).is_none() {
            return Err(DynamicsError::ValidationMismatch {
                pruned: pruned.vertex_count(),
                direct: direct.vertex_count(),
            });
        }
    }
    Ok(pruned)
}
