//! The triangle-free graph `T` and its quotients `T'` and `T''`.
//!
//! `T` is built from lines. A line is a copy of the integers; position `p`
//! is the vertex `V(A, p)` and consecutive positions `p - 1`, `p` are
//! joined through a subdivision vertex `S(A, p)` carrying a pendant path
//! of length `p` (none when `p <= 0`). Lines are addressed by the list of
//! positions at which they were attached: the line `A ++ [q]` hangs off
//! `V(A, q)` through an 8-cycle whose opposite vertex is `V(A ++ [q], q)`.
//! Every position of a line carries exactly one such cycle, so consecutive
//! address entries differ.
//!
//! Subtracting one from every position, label and address entry maps `T`
//! minus its leaves onto `T`; this shift realizes `k^2 T = T`.

use std::fmt;

use super::{exhaust, Ball, GraphOracle, OracleError};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TVertex {
    /// Position `p` of line `A`.
    V(Vec<i64>, i64),
    /// Subdivision vertex between positions `n - 1` and `n` of line `A`.
    S(Vec<i64>, i64),
    /// Step `j` (1-based) of the pendant path at `S(A, n)`.
    Leg(Vec<i64>, i64, u32),
    /// Step `1..=3` on side `0` or `1` of the 8-cycle attaching line `B`;
    /// step 1 is next to the parent line.
    Cyc(Vec<i64>, u8, u8),
}

struct Addr<'a>(&'a [i64]);

impl fmt::Display for Addr<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Display for TVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TVertex::V(a, p) => write!(f, "V{}{p}", Addr(a)),
            TVertex::S(a, n) => write!(f, "S{}{n}", Addr(a)),
            TVertex::Leg(a, n, j) => write!(f, "L{}{n}.{j}", Addr(a)),
            TVertex::Cyc(b, s, k) => write!(f, "C{}{s}.{k}", Addr(b)),
        }
    }
}

impl TVertex {
    /// The label shift by `by`; leg steps and cycle steps are unchanged.
    pub fn shifted(&self, by: i64) -> TVertex {
        let addr = |a: &[i64]| a.iter().map(|x| x + by).collect::<Vec<_>>();
        match self {
            TVertex::V(a, p) => TVertex::V(addr(a), p + by),
            TVertex::S(a, n) => TVertex::S(addr(a), n + by),
            TVertex::Leg(a, n, j) => TVertex::Leg(addr(a), n + by, *j),
            TVertex::Cyc(b, s, k) => TVertex::Cyc(addr(b), *s, *k),
        }
    }

    /// Address of the line this vertex belongs to; for cycle vertices,
    /// the line the cycle attaches.
    pub fn address(&self) -> &[i64] {
        match self {
            TVertex::V(a, _) | TVertex::S(a, _) | TVertex::Leg(a, _, _) | TVertex::Cyc(a, _, _) => {
                a
            }
        }
    }

    fn well_formed(&self) -> bool {
        let a = self.address();
        if a.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        match self {
            TVertex::V(..) | TVertex::S(..) => true,
            TVertex::Leg(_, n, j) => *j >= 1 && i64::from(*j) <= *n,
            TVertex::Cyc(b, s, k) => !b.is_empty() && *s <= 1 && (1..=3).contains(k),
        }
    }
}

/// Line depth: `[]` and `[0]` are the two central lines.
fn depth(a: &[i64]) -> usize {
    match a.first() {
        Some(0) => a.len() - 1,
        _ => a.len(),
    }
}

/// A finite truncation: positions `-label..=label` and lines of depth at
/// most `depth`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub label: i64,
    pub depth: usize,
}

fn in_window(v: &TVertex, w: Option<Window>) -> bool {
    let Some(w) = w else { return true };
    let a = v.address();
    if depth(a) > w.depth || a.iter().any(|x| x.abs() > w.label) {
        return false;
    }
    match v {
        TVertex::V(_, p) => p.abs() <= w.label,
        TVertex::S(_, n) | TVertex::Leg(_, n, _) => (-w.label + 1..=w.label).contains(n),
        TVertex::Cyc(..) => true,
    }
}

/// Neighbors in the untruncated graph.
fn raw_neighbors(v: &TVertex) -> Vec<TVertex> {
    use TVertex::*;
    let mut out = Vec::new();
    match v {
        V(a, p) => {
            out.push(S(a.clone(), *p));
            out.push(S(a.clone(), p + 1));
            if a.last() == Some(p) {
                out.push(Cyc(a.clone(), 0, 3));
                out.push(Cyc(a.clone(), 1, 3));
            } else {
                let mut b = a.clone();
                b.push(*p);
                out.push(Cyc(b.clone(), 0, 1));
                out.push(Cyc(b, 1, 1));
            }
        }
        S(a, n) => {
            out.push(V(a.clone(), n - 1));
            out.push(V(a.clone(), *n));
            if *n >= 1 {
                out.push(Leg(a.clone(), *n, 1));
            }
        }
        Leg(a, n, j) => {
            out.push(if *j == 1 {
                S(a.clone(), *n)
            } else {
                Leg(a.clone(), *n, j - 1)
            });
            if i64::from(*j) < *n {
                out.push(Leg(a.clone(), *n, j + 1));
            }
        }
        Cyc(b, s, k) => {
            let q = *b.last().unwrap();
            match k {
                1 => {
                    out.push(V(b[..b.len() - 1].to_vec(), q));
                    out.push(Cyc(b.clone(), *s, 2));
                }
                2 => {
                    out.push(Cyc(b.clone(), *s, 1));
                    out.push(Cyc(b.clone(), *s, 3));
                }
                _ => {
                    out.push(Cyc(b.clone(), *s, 2));
                    out.push(V(b.clone(), q));
                }
            }
        }
    }
    out
}

fn check(v: &TVertex, w: Option<Window>) -> Result<(), OracleError> {
    if v.well_formed() && in_window(v, w) {
        Ok(())
    } else {
        Err(OracleError::UnknownVertex(v.to_string()))
    }
}

fn t_neighbors(v: &TVertex, w: Option<Window>) -> Result<Vec<TVertex>, OracleError> {
    check(v, w)?;
    let mut out: Vec<TVertex> = raw_neighbors(v)
        .into_iter()
        .filter(|x| in_window(x, w))
        .collect();
    out.sort();
    Ok(out)
}

/// `T` itself, or a truncation of it.
#[derive(Debug, Clone, Copy, Default)]
pub struct TreeTOracle {
    pub window: Option<Window>,
}

impl GraphOracle for TreeTOracle {
    type Vertex = TVertex;

    fn basepoint(&self) -> TVertex {
        TVertex::V(Vec::new(), 0)
    }

    fn neighbors(&self, v: &TVertex) -> Result<Vec<TVertex>, OracleError> {
        t_neighbors(v, self.window)
    }
}

/// The half `T_1` of `T` left after deleting the central 8-cycle: lines
/// whose address does not start with 0.
fn in_half(v: &TVertex) -> bool {
    v.address().first() != Some(&0)
}

fn half_neighbors(v: &TVertex, w: Option<Window>) -> Result<Vec<TVertex>, OracleError> {
    if !in_half(v) {
        return Err(OracleError::UnknownVertex(v.to_string()));
    }
    Ok(t_neighbors(v, w)?.into_iter().filter(in_half).collect())
}

fn root() -> TVertex {
    TVertex::V(Vec::new(), 0)
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrimeVertex {
    T(TVertex),
    /// The three new vertices of the 4-cycle through the root.
    Q(u8),
}

impl fmt::Display for PrimeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeVertex::T(v) => v.fmt(f),
            PrimeVertex::Q(i) => write!(f, "Q{i}"),
        }
    }
}

/// `T'`: one half of `T` with the central 8-cycle folded to the 4-cycle
/// `V[]0 - Q1 - Q2 - Q3`.
#[derive(Debug, Clone, Copy, Default)]
pub struct TPrimeOracle {
    pub window: Option<Window>,
}

impl GraphOracle for TPrimeOracle {
    type Vertex = PrimeVertex;

    fn basepoint(&self) -> PrimeVertex {
        PrimeVertex::T(root())
    }

    fn neighbors(&self, v: &PrimeVertex) -> Result<Vec<PrimeVertex>, OracleError> {
        let mut out: Vec<PrimeVertex> = match v {
            PrimeVertex::T(x) => {
                let mut out: Vec<PrimeVertex> = half_neighbors(x, self.window)?
                    .into_iter()
                    .map(PrimeVertex::T)
                    .collect();
                if *x == root() {
                    out.push(PrimeVertex::Q(1));
                    out.push(PrimeVertex::Q(3));
                }
                out
            }
            PrimeVertex::Q(i @ 1..=3) => {
                let side = |j: u8| {
                    if j == 0 || j == 4 {
                        PrimeVertex::T(root())
                    } else {
                        PrimeVertex::Q(j)
                    }
                };
                vec![side(i - 1), side(i + 1)]
            }
            PrimeVertex::Q(_) => return Err(OracleError::UnknownVertex(v.to_string())),
        };
        out.sort();
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DoublePrimeVertex {
    /// Vertex `i` of the 16-cycle, for `i` not divisible by 4.
    Ring(u8),
    /// A vertex of copy `k` of the half `T_1`; its root is ring vertex `4k`.
    Copy(u8, TVertex),
}

impl fmt::Display for DoublePrimeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DoublePrimeVertex::Ring(i) => write!(f, "R{i}"),
            DoublePrimeVertex::Copy(k, v) => write!(f, "{k}:{v}"),
        }
    }
}

impl DoublePrimeVertex {
    /// The fixed-point-free automorphism: half a turn of the ring.
    pub fn psi(&self) -> DoublePrimeVertex {
        match self {
            DoublePrimeVertex::Ring(i) => DoublePrimeVertex::Ring((i + 8) % 16),
            DoublePrimeVertex::Copy(k, v) => DoublePrimeVertex::Copy((k + 2) % 4, v.clone()),
        }
    }
}

/// `T''`: a 16-cycle with a copy of `T_1` rooted at every fourth vertex.
#[derive(Debug, Clone, Copy, Default)]
pub struct TDoublePrimeOracle {
    pub window: Option<Window>,
}

fn ring_vertex(i: u8) -> DoublePrimeVertex {
    let i = i % 16;
    if i.is_multiple_of(4) {
        DoublePrimeVertex::Copy(i / 4, root())
    } else {
        DoublePrimeVertex::Ring(i)
    }
}

impl GraphOracle for TDoublePrimeOracle {
    type Vertex = DoublePrimeVertex;

    fn basepoint(&self) -> DoublePrimeVertex {
        DoublePrimeVertex::Copy(0, root())
    }

    fn neighbors(&self, v: &DoublePrimeVertex) -> Result<Vec<DoublePrimeVertex>, OracleError> {
        let mut out = match v {
            DoublePrimeVertex::Ring(i) if *i < 16 && i % 4 != 0 => {
                vec![ring_vertex(i + 15), ring_vertex(i + 1)]
            }
            DoublePrimeVertex::Ring(_) => return Err(OracleError::UnknownVertex(v.to_string())),
            DoublePrimeVertex::Copy(k, x) if *k < 4 => {
                let mut out: Vec<DoublePrimeVertex> = half_neighbors(x, self.window)?
                    .into_iter()
                    .map(|y| DoublePrimeVertex::Copy(*k, y))
                    .collect();
                if *x == root() {
                    out.push(ring_vertex(4 * k + 15));
                    out.push(ring_vertex(4 * k + 1));
                }
                out
            }
            DoublePrimeVertex::Copy(..) => return Err(OracleError::UnknownVertex(v.to_string())),
        };
        out.sort();
        Ok(out)
    }
}

const FINITE_CAP: usize = 1 << 22;

/// The truncation of `T` to `window`, with descriptors.
pub fn tree_t(window: Window) -> Result<Ball<TVertex>, OracleError> {
    let o = TreeTOracle {
        window: Some(window),
    };
    exhaust(&o, &o.basepoint(), FINITE_CAP)
}

pub fn t_prime(window: Window) -> Result<Ball<PrimeVertex>, OracleError> {
    let o = TPrimeOracle {
        window: Some(window),
    };
    exhaust(&o, &o.basepoint(), FINITE_CAP)
}

pub fn t_double_prime(window: Window) -> Result<Ball<DoublePrimeVertex>, OracleError> {
    let o = TDoublePrimeOracle {
        window: Some(window),
    };
    exhaust(&o, &o.basepoint(), FINITE_CAP)
}

impl Ball<DoublePrimeVertex> {
    /// `psi` as a permutation of graph indices.
    pub fn psi_permutation(&self) -> Vec<usize> {
        let lookup = self.lookup();
        self.vertices.iter().map(|v| lookup[&v.psi()]).collect()
    }
}
