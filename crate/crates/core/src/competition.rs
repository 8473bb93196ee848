//! (i,j)-step competition graphs.
//!
//! Two vertices x and y (i,j)-step compete when some third vertex z is
//! reached by an (x,z)-path P avoiding y and a (y,z)-path Q avoiding x, with
//! P and Q arc-disjoint and their lengths within (i, j) in either order.
//!
//! [`competition_graph`] evaluates that definition by exhaustive search.
//! [`competition_graph_12_fast`] instead uses the characterization of the
//! missing edges of the (1,2) graph in terms of out-neighbourhoods and the
//! arcs in which neither endpoint is last ([`missing_edge_case_12`]).

use std::fmt;
use std::ops::ControlFlow;

use crate::error::{HyperError, Result};
use crate::graphs::SimpleGraph;
use crate::hypercore::{ArcId, Hypertournament, VertexId};
use crate::paths::{first_path, for_each_path, HyperPath};

/// Which missing-edge condition holds for a pair, checked in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MissingEdgeCase {
    /// `N+(x)` is empty.
    SinkX,
    /// `N+(y)` is empty.
    SinkY,
    /// `N+(x) = {y}`.
    SoleOutY,
    /// `N+(y) = {x}`.
    SoleOutX,
    /// `A*{x,y} = {a}`, `N+_{T-a}(x) ⊆ {y}` and `N+_{T-a}(y) ⊆ {x}`.
    StarArc(ArcId),
    /// None of the above: x and y (1,2)-step compete.
    NotMissing,
}

impl MissingEdgeCase {
    pub fn name(self) -> &'static str {
        match self {
            MissingEdgeCase::SinkX => "SinkX",
            MissingEdgeCase::SinkY => "SinkY",
            MissingEdgeCase::SoleOutY => "SoleOutY",
            MissingEdgeCase::SoleOutX => "SoleOutX",
            MissingEdgeCase::StarArc(_) => "StarArc",
            MissingEdgeCase::NotMissing => "NotMissing",
        }
    }

    pub fn is_missing(self) -> bool {
        self != MissingEdgeCase::NotMissing
    }
}

impl fmt::Display for MissingEdgeCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MissingEdgeCase::StarArc(a) => write!(f, "StarArc(arc {})", a.0),
            other => f.write_str(other.name()),
        }
    }
}

/// Certificate that x and y (i,j)-step compete: P runs from x to z, Q from y to z.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompetitionWitness {
    pub z: VertexId,
    pub p: HyperPath,
    pub q: HyperPath,
}

fn check_bounds(i: usize, j: usize) -> Result<()> {
    if i < 1 || j < 1 {
        return Err(HyperError::BadBound(format!(
            "(i,j) = ({i},{j}); both must be at least 1"
        )));
    }
    Ok(())
}

fn check_pair(t: &Hypertournament, x: VertexId, y: VertexId) -> Result<()> {
    for v in [x, y] {
        if v.0 >= t.n() {
            return Err(HyperError::VertexOutOfRange {
                label: v.label() as i64,
                n: t.n(),
            });
        }
    }
    if x == y {
        return Err(HyperError::SameVertex(x.0));
    }
    Ok(())
}

fn check_theorem_scope(t: &Hypertournament) -> Result<()> {
    if t.k() < 3 {
        return Err(HyperError::ArityOutOfRange {
            n: t.n(),
            k: t.k(),
            min: 3,
        });
    }
    Ok(())
}

/// Longest Q allowed alongside a P of length `p`, or 0 if P is too long.
fn q_bound(p: usize, i: usize, j: usize) -> usize {
    let mut q = 0;
    if p <= i {
        q = q.max(j);
    }
    if p <= j {
        q = q.max(i);
    }
    q
}

/// The first witness in (z ascending, P lexicographic, Q lexicographic) order.
fn search(
    t: &Hypertournament,
    x: usize,
    y: usize,
    i: usize,
    j: usize,
) -> Option<CompetitionWitness> {
    let p_max = i.max(j);
    (0..t.n()).filter(|&z| z != x && z != y).find_map(|z| {
        for_each_path(t, x, z, p_max, 1 << y, &[], |pv, pa| {
            let qb = q_bound(pa.len(), i, j);
            if qb == 0 {
                return ControlFlow::Continue(());
            }
            match first_path(t, y, z, qb, 1 << x, pa) {
                Some(q) => ControlFlow::Break(CompetitionWitness {
                    z: VertexId(z),
                    p: HyperPath::from_raw(pv, pa),
                    q,
                }),
                None => ControlFlow::Continue(()),
            }
        })
    })
}

/// Whether x and y (i,j)-step compete, by exhaustive search over the definition.
pub fn competes_by_definition(
    t: &Hypertournament,
    x: VertexId,
    y: VertexId,
    i: usize,
    j: usize,
) -> Result<bool> {
    Ok(competition_witness(t, x, y, i, j)?.is_some())
}

/// The first certificate in (z, P, Q) order, or `None` when x and y do not compete.
pub fn competition_witness(
    t: &Hypertournament,
    x: VertexId,
    y: VertexId,
    i: usize,
    j: usize,
) -> Result<Option<CompetitionWitness>> {
    check_pair(t, x, y)?;
    check_bounds(i, j)?;
    Ok(search(t, x.0, y.0, i, j))
}

/// `C_{i,j}(T)` from the definition. Accepts k = 2 instances.
pub fn competition_graph(t: &Hypertournament, i: usize, j: usize) -> Result<SimpleGraph> {
    check_bounds(i, j)?;
    Ok(definition_graph(t, i, j))
}

pub(crate) fn definition_graph(t: &Hypertournament, i: usize, j: usize) -> SimpleGraph {
    let n = t.n();
    let mut g = SimpleGraph::empty(n);
    for x in 0..n {
        for y in x + 1..n {
            if search(t, x, y, i, j).is_some() {
                g.add_edge(VertexId(x), VertexId(y));
            }
        }
    }
    g
}

pub(crate) fn case_12(t: &Hypertournament, x: usize, y: usize) -> MissingEdgeCase {
    let (ox, oy) = (t.out_mask(x), t.out_mask(y));
    if ox == 0 {
        return MissingEdgeCase::SinkX;
    }
    if oy == 0 {
        return MissingEdgeCase::SinkY;
    }
    if ox == 1 << y {
        return MissingEdgeCase::SoleOutY;
    }
    if oy == 1 << x {
        return MissingEdgeCase::SoleOutX;
    }
    if let [a] = t.arcs_star_unchecked(x, y)[..] {
        let rest_x = t.out_mask_excluding(x, a.0) & !(1 << y);
        let rest_y = t.out_mask_excluding(y, a.0) & !(1 << x);
        if rest_x == 0 && rest_y == 0 {
            return MissingEdgeCase::StarArc(a);
        }
    }
    MissingEdgeCase::NotMissing
}

/// The first of the five missing-edge conditions that holds for `xy`, or
/// `NotMissing`. Requires `k >= 3`.
pub fn missing_edge_case_12(
    t: &Hypertournament,
    x: VertexId,
    y: VertexId,
) -> Result<MissingEdgeCase> {
    check_theorem_scope(t)?;
    check_pair(t, x, y)?;
    Ok(case_12(t, x.0, y.0))
}

/// `C_{1,2}(T)` from the missing-edge characterization. Requires `k >= 3`.
pub fn competition_graph_12_fast(t: &Hypertournament) -> Result<SimpleGraph> {
    check_theorem_scope(t)?;
    Ok(lemma_graph(t))
}

pub(crate) fn lemma_graph(t: &Hypertournament) -> SimpleGraph {
    let n = t.n();
    let mut g = SimpleGraph::empty(n);
    for x in 0..n {
        for y in x + 1..n {
            if !case_12(t, x, y).is_missing() {
                g.add_edge(VertexId(x), VertexId(y));
            }
        }
    }
    g
}
