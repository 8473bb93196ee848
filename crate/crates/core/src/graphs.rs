//! Undirected graphs, the shape palette for competition graphs, and detectors
//! for the subgraphs that cannot occur in their complements.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::hypercore::{BitIter, VertexId};

/// Simple undirected graph on at most 64 vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<u64>,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "SimpleGraph(n={}, [{}])", self.n(), edges.join(", "))
    }
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices. Panics if `n > 64`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= 64, "at most 64 vertices");
        SimpleGraph { adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Self {
        SimpleGraph::empty(n).complement()
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::empty(n);
        for &(a, b) in edges {
            g.add_edge(VertexId(a), VertexId(b));
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Adds `uv`. Loops are ignored.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        if u != v {
            self.adj[u.0] |= 1 << v.0;
            self.adj[v.0] |= 1 << u.0;
        }
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) {
        self.adj[u.0] &= !(1 << v.0);
        self.adj[v.0] &= !(1 << u.0);
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u.0] >> v.0 & 1 == 1
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.0].count_ones() as usize
    }

    pub(crate) fn neighbour_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(a, b)` with `a < b`, 0-based, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, &m)| BitIter(m & above(a)).map(move |b| (a, b)))
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.n();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        SimpleGraph {
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(v, &m)| !m & all & !(1 << v))
                .collect(),
        }
    }

    /// Every edge of `self` is an edge of `other` (same vertex count assumed).
    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.n() == other.n() && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.n());
        for (a, b) in self.edges() {
            g.add_edge(VertexId(perm[a]), VertexId(perm[b]));
        }
        g
    }
}

/// The named shapes a competition graph can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ShapeTag {
    Complete,
    CompleteMinusP2,
    CompleteMinusP3,
    /// Only reachable for tournaments (k = 2).
    CompleteMinusTriangle,
    CliquePlusIsolated,
    Other,
}

impl ShapeTag {
    pub const ALL: [ShapeTag; 6] = [
        ShapeTag::Complete,
        ShapeTag::CompleteMinusP2,
        ShapeTag::CompleteMinusP3,
        ShapeTag::CompleteMinusTriangle,
        ShapeTag::CliquePlusIsolated,
        ShapeTag::Other,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ShapeTag::Complete => "Complete",
            ShapeTag::CompleteMinusP2 => "CompleteMinusP2",
            ShapeTag::CompleteMinusP3 => "CompleteMinusP3",
            ShapeTag::CompleteMinusTriangle => "CompleteMinusTriangle",
            ShapeTag::CliquePlusIsolated => "CliquePlusIsolated",
            ShapeTag::Other => "Other",
        }
    }
}

impl fmt::Display for ShapeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeClass {
    pub tag: ShapeTag,
    /// Complement edges, 0-based `(a, b)` with `a < b`, sorted.
    pub missing_edges: Vec<(usize, usize)>,
    pub isolated_vertex: Option<VertexId>,
}

impl fmt::Display for ShapeClass {
    /// `CompleteMinusP3 missing [1-2, 2-3]`, `CliquePlusIsolated isolated v5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag)?;
        if let Some(v) = self.isolated_vertex {
            return write!(f, " isolated {v}");
        }
        if !self.missing_edges.is_empty() {
            let parts: Vec<String> = self
                .missing_edges
                .iter()
                .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
                .collect();
            write!(f, " missing [{}]", parts.join(", "))?;
        }
        Ok(())
    }
}

/// Classifies `g` by the edge structure of its complement. Count-based rules
/// (0, 1, 2 adjacent, 3 forming a triangle) take precedence over the star
/// rule for clique-plus-isolated-vertex.
pub fn classify_shape(g: &SimpleGraph) -> ShapeClass {
    let c = g.complement();
    let missing: Vec<(usize, usize)> = c.edges().collect();
    let n = g.n();
    let tag = match missing.len() {
        0 => ShapeTag::Complete,
        1 => ShapeTag::CompleteMinusP2,
        2 if shares_endpoint(missing[0], missing[1]) => ShapeTag::CompleteMinusP3,
        3 if has_triangle(&c).is_some() => ShapeTag::CompleteMinusTriangle,
        _ => ShapeTag::Other,
    };
    if tag != ShapeTag::Other {
        return ShapeClass {
            tag,
            missing_edges: missing,
            isolated_vertex: None,
        };
    }
    let centre = (0..n).find(|&v| n >= 2 && c.degree(VertexId(v)) == n - 1);
    match centre {
        Some(v) if missing.len() == n - 1 => ShapeClass {
            tag: ShapeTag::CliquePlusIsolated,
            missing_edges: missing,
            isolated_vertex: Some(VertexId(v)),
        },
        _ => ShapeClass {
            tag: ShapeTag::Other,
            missing_edges: missing,
            isolated_vertex: None,
        },
    }
}

fn shares_endpoint(e: (usize, usize), f: (usize, usize)) -> bool {
    e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1
}

/// Bits strictly above position `a`.
fn above(a: usize) -> u64 {
    if a >= 63 {
        0
    } else {
        u64::MAX << (a + 1)
    }
}

/// Lexicographically least pair of vertex-disjoint edges.
pub fn has_disjoint_edge_pair(g: &SimpleGraph) -> Option<((usize, usize), (usize, usize))> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for (i, &e) in edges.iter().enumerate() {
        if let Some(&f) = edges[i + 1..].iter().find(|&&f| !shares_endpoint(e, f)) {
            return Some((e, f));
        }
    }
    None
}

/// Lexicographically least triangle `(a, b, c)`, `a < b < c`.
pub fn has_triangle(g: &SimpleGraph) -> Option<(usize, usize, usize)> {
    for (a, b) in g.edges() {
        let common = g.neighbour_mask(a) & g.neighbour_mask(b) & above(b);
        if let Some(c) = BitIter(common).next() {
            return Some((a, b, c));
        }
    }
    None
}

/// A claw `K_{1,3}` as a (not necessarily induced) subgraph: the least centre
/// of degree at least 3 and its three least neighbours.
pub fn has_claw(g: &SimpleGraph) -> Option<(usize, [usize; 3])> {
    (0..g.n()).find_map(|c| {
        let mut it = BitIter(g.neighbour_mask(c));
        match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), Some(d)) => Some((c, [a, b, d])),
            _ => None,
        }
    })
}
