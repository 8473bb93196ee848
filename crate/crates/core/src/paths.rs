//! Hyperpaths and strongness.
//!
//! A hyperpath alternates vertices and arcs, `v1 a1 v2 ... a_{t-1} v_t`, with
//! pairwise distinct vertices, pairwise distinct arcs, and `v_i` preceding
//! `v_{i+1}` in `a_i`. The distinct-arc condition is what separates this from
//! plain reachability in the dominance digraph.
//!
//! Searches enumerate paths in lexicographic order of (vertex sequence, arc
//! sequence): a depth-first walk over vertex sequences with ascending
//! successors, and for each complete vertex sequence a backtracking
//! assignment of distinct arcs in ascending id order.

use std::ops::ControlFlow;

use crate::error::{HyperError, Result};
use crate::hypercore::{bits, ArcId, BitIter, Hypertournament, VertexId, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HyperPath {
    pub vertices: Vec<VertexId>,
    pub arcs: Vec<ArcId>,
}

impl HyperPath {
    /// The length-0 path consisting of one vertex.
    pub fn trivial(v: VertexId) -> Self {
        HyperPath {
            vertices: vec![v],
            arcs: Vec::new(),
        }
    }

    /// Number of arcs.
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self
            .vertices
            .last()
            .expect("paths have at least one vertex")
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub(crate) fn from_raw(vertices: &[usize], arcs: &[usize]) -> Self {
        HyperPath {
            vertices: vertices.iter().map(|&v| VertexId(v)).collect(),
            arcs: arcs.iter().map(|&a| ArcId(a)).collect(),
        }
    }
}

/// Why a vertex/arc sequence is not a hyperpath.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathDefect {
    NoVertices,
    /// `arcs.len()` must be `vertices.len() - 1`.
    ArcCountMismatch,
    VertexOutOfRange(VertexId),
    UnknownArc(ArcId),
    RepeatedVertex(VertexId),
    RepeatedArc(ArcId),
    /// `vertices[step]` does not precede `vertices[step + 1]` in `arcs[step]`.
    NotPreceding {
        step: usize,
    },
}

/// Checks every hyperpath condition, reporting the first defect found.
pub fn check_path(t: &Hypertournament, p: &HyperPath) -> Result<(), PathDefect> {
    if p.vertices.is_empty() {
        return Err(PathDefect::NoVertices);
    }
    if p.arcs.len() + 1 != p.vertices.len() {
        return Err(PathDefect::ArcCountMismatch);
    }
    let mut seen = VertexSet::EMPTY;
    for &v in &p.vertices {
        if v.0 >= t.n() {
            return Err(PathDefect::VertexOutOfRange(v));
        }
        if seen.contains(v) {
            return Err(PathDefect::RepeatedVertex(v));
        }
        seen.insert(v);
    }
    for (i, &a) in p.arcs.iter().enumerate() {
        if a.0 >= t.arc_count() {
            return Err(PathDefect::UnknownArc(a));
        }
        if p.arcs[..i].contains(&a) {
            return Err(PathDefect::RepeatedArc(a));
        }
    }
    for (step, w) in p.vertices.windows(2).enumerate() {
        if !t.precedes(p.arcs[step], w[0], w[1]).unwrap_or(false) {
            return Err(PathDefect::NotPreceding { step });
        }
    }
    Ok(())
}

pub fn is_valid_path(t: &Hypertournament, p: &HyperPath) -> bool {
    check_path(t, p).is_ok()
}

/// Depth-first enumerator of all (from, to)-hyperpaths within a length bound.
struct Walker<'a, F> {
    t: &'a Hypertournament,
    to: usize,
    max_len: usize,
    forbidden_arcs: &'a [usize],
    verts: Vec<usize>,
    arcs: Vec<usize>,
    visit: F,
}

impl<B, F: FnMut(&[usize], &[usize]) -> ControlFlow<B>> Walker<'_, F> {
    fn walk(&mut self, visited: u64) -> ControlFlow<B> {
        let u = *self.verts.last().unwrap();
        let mut candidates = self.t.out_mask(u) & !visited;
        if self.verts.len() == self.max_len {
            // one arc left in the budget: only the target will do
            candidates &= 1 << self.to;
        }
        for v in BitIter(candidates) {
            self.verts.push(v);
            if v == self.to {
                self.assign(0)?;
            } else {
                self.walk(visited | 1 << v)?;
            }
            self.verts.pop();
        }
        ControlFlow::Continue(())
    }

    fn assign(&mut self, step: usize) -> ControlFlow<B> {
        if step + 1 == self.verts.len() {
            return (self.visit)(&self.verts, &self.arcs);
        }
        let (x, y) = (self.verts[step], self.verts[step + 1]);
        for a in bits(self.t.prec_words(x, y)) {
            if self.arcs.contains(&a) || self.forbidden_arcs.contains(&a) {
                continue;
            }
            self.arcs.push(a);
            self.assign(step + 1)?;
            self.arcs.pop();
        }
        ControlFlow::Continue(())
    }
}

/// Calls `visit(vertices, arcs)` on every (from, to)-hyperpath of length at
/// most `max_len` that avoids `forbidden_vertices` and `forbidden_arcs`, in
/// lexicographic (vertex sequence, arc sequence) order, stopping at the first
/// `Break`. Raw 0-based indices, no validation: callers guarantee
/// `from != to`, `max_len >= 1`, and that neither endpoint is forbidden.
pub(crate) fn for_each_path<B>(
    t: &Hypertournament,
    from: usize,
    to: usize,
    max_len: usize,
    forbidden_vertices: u64,
    forbidden_arcs: &[usize],
    visit: impl FnMut(&[usize], &[usize]) -> ControlFlow<B>,
) -> Option<B> {
    let mut walker = Walker {
        t,
        to,
        max_len: max_len.min(t.n() - 1),
        forbidden_arcs,
        verts: vec![from],
        arcs: Vec::new(),
        visit,
    };
    match walker.walk(forbidden_vertices | 1 << from) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    }
}

/// Raw first-path search; see [`for_each_path`].
pub(crate) fn first_path(
    t: &Hypertournament,
    from: usize,
    to: usize,
    max_len: usize,
    forbidden_vertices: u64,
    forbidden_arcs: &[usize],
) -> Option<HyperPath> {
    for_each_path(
        t,
        from,
        to,
        max_len,
        forbidden_vertices,
        forbidden_arcs,
        |v, a| ControlFlow::Break(HyperPath::from_raw(v, a)),
    )
}

/// The lexicographically least (from, to)-hyperpath with at most `max_len`
/// arcs whose vertices other than the endpoints avoid `forbidden_vertices`
/// and whose arcs avoid `forbidden_arcs`. The search is exhaustive, so
/// `None` means no such path exists.
pub fn find_path(
    t: &Hypertournament,
    from: VertexId,
    to: VertexId,
    max_len: usize,
    forbidden_vertices: VertexSet,
    forbidden_arcs: &[ArcId],
) -> Result<Option<HyperPath>> {
    for v in [from, to] {
        if v.0 >= t.n() {
            return Err(HyperError::VertexOutOfRange {
                label: v.label() as i64,
                n: t.n(),
            });
        }
        if forbidden_vertices.contains(v) {
            return Err(HyperError::BadBound(format!(
                "endpoint {v} is a forbidden vertex"
            )));
        }
    }
    if from == to {
        return Err(HyperError::SameVertex(from.0));
    }
    if max_len < 1 {
        return Err(HyperError::BadBound("max_len must be at least 1".into()));
    }
    let arcs: Vec<usize> = forbidden_arcs.iter().map(|a| a.0).collect();
    Ok(first_path(
        t,
        from.0,
        to.0,
        max_len,
        forbidden_vertices.0,
        &arcs,
    ))
}

/// A simple digraph on at most 64 vertices, stored as out-neighbour masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleDigraph {
    out: Vec<u64>,
}

impl SimpleDigraph {
    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.out[u.0] >> v.0 & 1 == 1
    }

    pub fn out_neighbours(&self, u: VertexId) -> VertexSet {
        VertexSet(self.out[u.0])
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    fn reach(adj: &[u64], start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in BitIter(frontier) {
                next |= adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Every vertex reaches every other one.
    pub fn is_strongly_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut rev = vec![0u64; n];
        for (u, &m) in self.out.iter().enumerate() {
            for v in BitIter(m) {
                rev[v] |= 1 << u;
            }
        }
        Self::reach(&self.out, 0) == all && Self::reach(&rev, 0) == all
    }
}

/// The digraph with `u -> v` iff u precedes v in at least one arc.
pub fn dominance_digraph(t: &Hypertournament) -> SimpleDigraph {
    SimpleDigraph {
        out: (0..t.n()).map(|v| t.out_mask(v)).collect(),
    }
}

/// Strong connectivity of the dominance digraph. Necessary for strongness
/// but not sufficient: a hyperpath may not reuse an arc, while a walk in the
/// dominance digraph can lean on one arc several times.
pub fn is_strong_dominance(t: &Hypertournament) -> bool {
    dominance_digraph(t).is_strongly_connected()
}

/// Whether a hyperpath joins every ordered pair. The dominance digraph
/// screens out most non-strong instances; the rest are searched pair by pair.
pub fn is_strong(t: &Hypertournament) -> bool {
    is_strong_dominance(t) && all_pairs_joined(t)
}

/// Strongness by exhaustive hyperpath search alone; the oracle for [`is_strong`].
pub fn is_strong_exhaustive(t: &Hypertournament) -> bool {
    all_pairs_joined(t)
}

fn all_pairs_joined(t: &Hypertournament) -> bool {
    let n = t.n();
    (0..n).all(|x| (0..n).all(|y| x == y || first_path(t, x, y, n - 1, 0, &[]).is_some()))
}
