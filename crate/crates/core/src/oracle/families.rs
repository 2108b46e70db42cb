//! Small oracle families: the two-way infinite path, the 3-regular tree,
//! a ladder strip with pendant paths, and degree-regular triangulations.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::{exhaust, GraphOracle, OracleError};
use crate::graph::Graph;

/// The two-way infinite path on the integers.
#[derive(Debug, Clone, Copy, Default)]
pub struct PathOracle;

impl GraphOracle for PathOracle {
    type Vertex = i64;

    fn basepoint(&self) -> i64 {
        0
    }

    fn neighbors(&self, v: &i64) -> Result<Vec<i64>, OracleError> {
        Ok(vec![v - 1, v + 1])
    }
}

/// The 3-regular tree. Vertices are words over {0, 1, 2}; the root has
/// three children, every other vertex two.
#[derive(Debug, Clone, Copy, Default)]
pub struct Tree3Oracle;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<u8>);

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("r")?;
        for d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl GraphOracle for Tree3Oracle {
    type Vertex = Word;

    fn basepoint(&self) -> Word {
        Word(Vec::new())
    }

    fn neighbors(&self, v: &Word) -> Result<Vec<Word>, OracleError> {
        let w = &v.0;
        let mut out = Vec::new();
        if let Some((_, parent)) = w.split_last() {
            out.push(Word(parent.to_vec()));
        }
        let children: &[u8] = if w.is_empty() { &[0, 1, 2] } else { &[0, 1] };
        for &c in children {
            let mut x = w.clone();
            x.push(c);
            out.push(Word(x));
        }
        out.sort();
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Row {
    Top,
    Bottom,
}

impl Row {
    fn letter(self) -> char {
        match self {
            Row::Top => 't',
            Row::Bottom => 'b',
        }
    }
}

/// How long the pendant path at each spine vertex is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LegRule {
    Explicit(BTreeMap<(Row, i64), u32>),
    /// Length `max(0, i - offset)` at position `i` of `row`, none elsewhere.
    Ramp {
        row: Row,
        offset: i64,
    },
}

impl LegRule {
    fn length(&self, row: Row, i: i64) -> u32 {
        match self {
            LegRule::Explicit(m) => m.get(&(row, i)).copied().unwrap_or(0),
            LegRule::Ramp { row: r, offset } => {
                if *r == row {
                    (i - offset).max(0) as u32
                } else {
                    0
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaterpillarVertex {
    Spine(Row, i64),
    /// Step `j >= 1` of the pendant path hanging off `Spine(row, i)`.
    Leg(Row, i64, u32),
}

impl fmt::Display for CaterpillarVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CaterpillarVertex::Spine(r, i) => write!(f, "{}{i}", r.letter()),
            CaterpillarVertex::Leg(r, i, j) => write!(f, "{}{i}.{j}", r.letter()),
        }
    }
}

/// A triangulated strip with pendant paths.
///
/// The strip has vertices `t_i`, `b_i` with edges `t_i t_{i+1}`,
/// `b_i b_{i+1}`, `t_i b_i` and `t_i b_{i+1}`. With a half width the
/// spine is cut to positions `-w..=w`.
#[derive(Debug, Clone)]
pub struct CaterpillarOracle {
    pub legs: LegRule,
    pub half_width: Option<i64>,
}

impl CaterpillarOracle {
    fn on_spine(&self, i: i64) -> bool {
        self.half_width.is_none_or(|w| (-w..=w).contains(&i))
    }
}

impl GraphOracle for CaterpillarOracle {
    type Vertex = CaterpillarVertex;

    fn basepoint(&self) -> CaterpillarVertex {
        CaterpillarVertex::Spine(Row::Top, 0)
    }

    fn neighbors(&self, v: &CaterpillarVertex) -> Result<Vec<CaterpillarVertex>, OracleError> {
        use CaterpillarVertex::*;
        let mut out = Vec::new();
        match *v {
            Spine(row, i) => {
                if !self.on_spine(i) {
                    return Err(OracleError::UnknownVertex(v.to_string()));
                }
                let (other, diag) = match row {
                    Row::Top => (Row::Bottom, i + 1),
                    Row::Bottom => (Row::Top, i - 1),
                };
                for (r, j) in [(row, i - 1), (row, i + 1), (other, i), (other, diag)] {
                    if self.on_spine(j) {
                        out.push(Spine(r, j));
                    }
                }
                if self.legs.length(row, i) > 0 {
                    out.push(Leg(row, i, 1));
                }
            }
            Leg(row, i, j) => {
                let len = self.legs.length(row, i);
                if !self.on_spine(i) || j == 0 || j > len {
                    return Err(OracleError::UnknownVertex(v.to_string()));
                }
                out.push(if j == 1 {
                    Spine(row, i)
                } else {
                    Leg(row, i, j - 1)
                });
                if j < len {
                    out.push(Leg(row, i, j + 1));
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

/// The finite strip on positions `-half_width..=half_width`.
pub fn caterpillar(half_width: i64, legs: LegRule) -> Result<Graph, OracleError> {
    if half_width < 0 {
        return Err(OracleError::InvalidParameter(
            "half width must be non-negative".into(),
        ));
    }
    let o = CaterpillarOracle {
        legs,
        half_width: Some(half_width),
    };
    Ok(exhaust(&o, &o.basepoint(), 1 << 20)?.graph)
}

/// A ball in the triangulation of the plane in which every vertex has
/// degree `d`, grown layer by layer from a center.
///
/// Vertex `t{l}_{i}` is the `i`-th vertex of layer `l`; layer `l` is the
/// set of vertices at distance `l` from the center `t0_0`. Names do not
/// depend on the radius, so smaller balls are induced subgraphs of
/// larger ones.
#[derive(Debug, Clone)]
pub struct TriangulationBall {
    pub graph: Graph,
    pub degree: usize,
    pub radius: usize,
    /// Layer of each vertex, by graph index.
    pub layers: Vec<usize>,
}

impl TriangulationBall {
    /// Vertices of layer below `radius`, which have their full degree.
    pub fn inner(&self) -> Vec<usize> {
        (0..self.layers.len())
            .filter(|&v| self.layers[v] < self.radius)
            .collect()
    }
}

pub fn triangulation(degree: usize, radius: usize) -> Result<TriangulationBall, OracleError> {
    if degree < 6 {
        return Err(OracleError::InvalidParameter(format!(
            "triangulation degree must be at least 6, got {degree}"
        )));
    }
    let mut names = vec!["t0_0".to_string()];
    let mut layer_of = vec![0usize];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut deg = vec![0usize];
    let add_edge = |edges: &mut Vec<(usize, usize)>, deg: &mut Vec<usize>, a: usize, b: usize| {
        edges.push((a, b));
        deg[a] += 1;
        deg[b] += 1;
    };
    if radius == 0 {
        return Ok(TriangulationBall {
            graph: Graph::from_parts(names, edges),
            degree,
            radius,
            layers: layer_of,
        });
    }
    let mut rim: Vec<usize> = Vec::new();
    for i in 0..degree {
        names.push(format!("t1_{i}"));
        layer_of.push(1);
        deg.push(0);
        rim.push(names.len() - 1);
    }
    for i in 0..degree {
        add_edge(&mut edges, &mut deg, 0, rim[i]);
        add_edge(&mut edges, &mut deg, rim[i], rim[(i + 1) % degree]);
    }
    for layer in 2..=radius {
        // Each rim vertex still needs `e = degree - deg` neighbors outward:
        // it is joined to the vertex the previous rim vertex left over and
        // to `e - 1` new ones, the last of which the next rim vertex takes.
        let m = rim.len();
        let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(m);
        let mut next: Vec<usize> = Vec::new();
        for &v in &rim {
            let e = degree - deg[v];
            assert!(
                e >= 2,
                "degree {degree} leaves rim vertex with {e} outward edges"
            );
            let mut block = Vec::with_capacity(e - 1);
            for _ in 0..e - 1 {
                names.push(format!("t{layer}_{}", next.len()));
                layer_of.push(layer);
                deg.push(0);
                block.push(names.len() - 1);
                next.push(names.len() - 1);
            }
            blocks.push(block);
        }
        for i in 0..m {
            let shared = *blocks[(i + m - 1) % m].last().unwrap();
            let v = rim[i];
            add_edge(&mut edges, &mut deg, v, shared);
            for &w in &blocks[i] {
                add_edge(&mut edges, &mut deg, v, w);
            }
        }
        for i in 0..next.len() {
            add_edge(&mut edges, &mut deg, next[i], next[(i + 1) % next.len()]);
        }
        rim = next;
    }
    let graph = Graph::from_parts(names.clone(), edges);
    let mut layers = vec![0; names.len()];
    for (i, n) in names.iter().enumerate() {
        layers[graph.index_of(n).unwrap()] = layer_of[i];
    }
    Ok(TriangulationBall {
        graph,
        degree,
        radius,
        layers,
    })
}

/// Oracle access to the degree-`d` triangulation, answering for every
/// vertex within distance `reach` of the center.
#[derive(Debug, Clone)]
pub struct TriangulationOracle {
    ball: TriangulationBall,
    reach: usize,
    by_name: HashMap<String, usize>,
}

impl TriangulationOracle {
    pub fn new(degree: usize, reach: usize) -> Result<Self, OracleError> {
        let ball = triangulation(degree, reach + 1)?;
        let by_name = ball
            .graph
            .names()
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        Ok(TriangulationOracle {
            ball,
            reach,
            by_name,
        })
    }

    pub fn reach(&self) -> usize {
        self.reach
    }
}

impl GraphOracle for TriangulationOracle {
    type Vertex = String;

    fn basepoint(&self) -> String {
        "t0_0".to_string()
    }

    fn neighbors(&self, v: &String) -> Result<Vec<String>, OracleError> {
        let &i = self
            .by_name
            .get(v)
            .ok_or_else(|| OracleError::BeyondWindow(v.clone()))?;
        if self.ball.layers[i] > self.reach {
            return Err(OracleError::BeyondWindow(v.clone()));
        }
        let g = &self.ball.graph;
        Ok(g.neighbors(i)
            .iter()
            .map(|&w| g.name(w).to_string())
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GirthValue;
    use crate::oracle::ball;

    #[test]
    fn triangulation_small() {
        let t = triangulation(6, 1).unwrap();
        assert_eq!((t.graph.vertex_count(), t.graph.edge_count()), (7, 12));
        let t = triangulation(7, 3).unwrap();
        let g = &t.graph;
        for v in t.inner() {
            assert_eq!(g.degree(v), 7);
        }
        assert!(g.is_locally_cyclic_over(t.inner()));
        assert!(triangulation(5, 2).is_err());
    }

    #[test]
    fn triangulation_layers_are_distances() {
        let t = triangulation(7, 4).unwrap();
        let c = t.graph.index_of("t0_0").unwrap();
        assert_eq!(t.graph.distances_from(&[c]), t.layers);
    }

    #[test]
    fn triangulation_oracle_window() {
        let o = TriangulationOracle::new(7, 3).unwrap();
        let b = ball(&o, &o.basepoint(), 3).unwrap();
        let direct = triangulation(7, 3).unwrap();
        assert_eq!(b.graph, direct.graph);
        assert!(matches!(
            ball(&o, &o.basepoint(), 5),
            Err(OracleError::BeyondWindow(_))
        ));
    }

    #[test]
    fn caterpillar_shape() {
        let legs = LegRule::Explicit(BTreeMap::from([((Row::Top, 0), 2), ((Row::Bottom, 1), 1)]));
        let g = caterpillar(2, legs).unwrap();
        assert_eq!(g.vertex_count(), 10 + 3);
        assert_eq!(g.edge_count(), 4 + 4 + 5 + 4 + 3);
        assert!(g.contains("t0.2") && g.contains("b-2"));
        assert_eq!(g.girth(), GirthValue::Finite(3));
    }

    #[test]
    fn ramp_legs_grow() {
        let o = CaterpillarOracle {
            legs: LegRule::Ramp {
                row: Row::Top,
                offset: 0,
            },
            half_width: None,
        };
        let v = CaterpillarVertex::Leg(Row::Top, 4, 4);
        assert_eq!(
            o.neighbors(&v).unwrap(),
            vec![CaterpillarVertex::Leg(Row::Top, 4, 3)]
        );
        assert!(o
            .neighbors(&CaterpillarVertex::Leg(Row::Top, -1, 1))
            .is_err());
    }
}
