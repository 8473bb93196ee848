//! The k-hypertournament data model.
//!
//! A k-hypertournament on `n` vertices has exactly one arc per k-subset of
//! its vertices; the arc is an ordering of that subset, and a vertex
//! *precedes* (dominates) every vertex listed after it. Arcs are stored
//! densely by the colex rank of their vertex set, so the arc id of a subset is
//! independent of input order.

use std::fmt;

use crate::error::{HyperError, Result};
use crate::subset::{self, binomial, colex_rank, MAX_VERTICES};

/// Hard cap on the arc count of a single instance. Per-pair arc bitsets cost
/// `n^2 * m / 64` words, which must stay modest.
pub const MAX_ARCS: u64 = 1 << 16;

/// A vertex, 0-based internally and labelled `v{index+1}` externally.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }

    /// 1-based label.
    pub fn label(self) -> usize {
        self.0 + 1
    }

    /// From a 1-based label. Panics on 0.
    pub fn from_label(label: usize) -> Self {
        assert!(label > 0, "vertex labels are 1-based");
        VertexId(label - 1)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.label())
    }
}

/// Arc identifier: the colex rank of the arc's vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcId(pub usize);

impl ArcId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A set of vertices of an instance with at most 64 vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: VertexId) -> Self {
        VertexSet(1 << v.0)
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.0 >> v.0 & 1 == 1
    }

    pub fn insert(&mut self, v: VertexId) {
        self.0 |= 1 << v.0;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = VertexId> {
        BitIter(self.0).map(VertexId)
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Iterates set bit positions of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// Iterates set bits of a multi-word bitset.
pub(crate) fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words
        .iter()
        .enumerate()
        .flat_map(|(w, &word)| BitIter(word).map(move |b| w * 64 + b))
}

/// An owned view of one arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperArc {
    pub id: ArcId,
    pub entries: Vec<VertexId>,
}

impl fmt::Display for HyperArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Admit k = 2 (ordinary tournaments). Theorem checkers still refuse them.
    pub tournament_mode: bool,
}

/// A validated, immutable k-hypertournament.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypertournament {
    n: usize,
    k: usize,
    /// `m * k` entries; arc `r` occupies `entries[r*k..(r+1)*k]`.
    entries: Vec<u8>,
    /// `after[r*n + v]`: vertices listed after `v` in arc `r` (0 if `v` is absent).
    after: Vec<u64>,
    /// Out-neighbourhood mask per vertex.
    out: Vec<u64>,
    /// Words per arc bitset.
    words: usize,
    /// `prec[(x*n + y)*words ..]`: arcs in which x precedes y.
    prec: Vec<u64>,
}

impl fmt::Debug for Hypertournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypertournament")
            .field("n", &self.n)
            .field("k", &self.k)
            .field(
                "arcs",
                &self.arcs().map(|a| a.to_string()).collect::<Vec<_>>(),
            )
            .finish()
    }
}

fn check_arity(n: usize, k: usize, options: BuildOptions) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(HyperError::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let min = if options.tournament_mode { 2 } else { 3 };
    if k < min || k + 1 > n {
        return Err(HyperError::ArityOutOfRange { n, k, min });
    }
    let m = binomial(n, k);
    if m > MAX_ARCS {
        return Err(HyperError::InstanceTooLarge {
            arcs: m,
            max: MAX_ARCS,
        });
    }
    Ok(())
}

/// Validates one arc and returns its sorted vertex set.
fn check_arc(n: usize, k: usize, arc: &[usize]) -> Result<Vec<usize>> {
    if arc.len() != k {
        return Err(HyperError::WrongArcLength {
            arc: arc.to_vec(),
            len: arc.len(),
            k,
        });
    }
    if let Some(&v) = arc.iter().find(|&&v| v >= n) {
        return Err(HyperError::VertexOutOfRange {
            label: v as i64 + 1,
            n,
        });
    }
    let mut sorted = arc.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(HyperError::RepeatedVertexInArc { arc: arc.to_vec() });
    }
    Ok(sorted)
}

/// Every problem with a candidate arc list, in a stable order: per-arc
/// problems in input order, then duplicate subsets, then missing subsets
/// (both by rank). Empty iff [`Hypertournament::build`] would succeed.
pub fn diagnose(n: usize, k: usize, arcs: &[Vec<usize>], options: BuildOptions) -> Vec<HyperError> {
    if let Err(e) = check_arity(n, k, options) {
        return vec![e];
    }
    let m = binomial(n, k);
    let mut problems = Vec::new();
    let mut ranks = Vec::with_capacity(arcs.len());
    for arc in arcs {
        match check_arc(n, k, arc) {
            Ok(sorted) => ranks.push((colex_rank(&sorted), sorted)),
            Err(e) => problems.push(e),
        }
    }
    ranks.sort();
    let mut seen = vec![false; m as usize];
    let mut reported = vec![false; m as usize];
    for (rank, sorted) in &ranks {
        let r = *rank as usize;
        if seen[r] && !reported[r] {
            reported[r] = true;
            problems.push(HyperError::DuplicateSubset {
                subset: sorted.clone(),
            });
        }
        seen[r] = true;
    }
    if problems.is_empty()
        || problems
            .iter()
            .all(|p| matches!(p, HyperError::DuplicateSubset { .. }))
    {
        for (r, present) in seen.iter().enumerate() {
            if !present {
                let subset = subset::subset_unrank(n, k, r as u64).expect("rank in range");
                problems.push(HyperError::MissingSubset { subset });
            }
        }
    }
    problems
}

impl Hypertournament {
    /// Validates an arc list (0-based vertices, any order) and builds the
    /// instance. k = 2 is rejected; see [`Hypertournament::build_with`].
    pub fn build(n: usize, k: usize, arcs: &[Vec<usize>]) -> Result<Self> {
        Self::build_with(n, k, arcs, BuildOptions::default())
    }

    pub fn build_with(
        n: usize,
        k: usize,
        arcs: &[Vec<usize>],
        options: BuildOptions,
    ) -> Result<Self> {
        check_arity(n, k, options)?;
        let m = binomial(n, k) as usize;
        let mut entries = vec![u8::MAX; m * k];
        let mut filled = vec![false; m];
        let mut dup = None;
        for arc in arcs {
            let sorted = check_arc(n, k, arc)?;
            let r = colex_rank(&sorted) as usize;
            if filled[r] {
                dup.get_or_insert(sorted);
                continue;
            }
            filled[r] = true;
            for (slot, &v) in entries[r * k..(r + 1) * k].iter_mut().zip(arc) {
                *slot = v as u8;
            }
        }
        if let Some(subset) = dup {
            // report the lowest-ranked duplicate, matching diagnose()
            return Err(diagnose(n, k, arcs, options)
                .into_iter()
                .find(|e| matches!(e, HyperError::DuplicateSubset { .. }))
                .unwrap_or(HyperError::DuplicateSubset { subset }));
        }
        if let Some(r) = filled.iter().position(|&f| !f) {
            let subset = subset::subset_unrank(n, k, r as u64)?;
            return Err(HyperError::MissingSubset { subset });
        }
        Ok(Self::from_entries(n, k, entries))
    }

    /// Builds from dense rank-ordered entries that are already known valid.
    pub(crate) fn from_entries(n: usize, k: usize, entries: Vec<u8>) -> Self {
        let m = entries.len() / k;
        let words = m.div_ceil(64).max(1);
        let mut after = vec![0u64; m * n];
        let mut out = vec![0u64; n];
        let mut prec = vec![0u64; n * n * words];
        for r in 0..m {
            let arc = &entries[r * k..(r + 1) * k];
            let mut tail = 0u64;
            for &v in arc.iter().rev() {
                let v = v as usize;
                after[r * n + v] = tail;
                out[v] |= tail;
                for w in BitIter(tail) {
                    prec[(v * n + w) * words + r / 64] |= 1 << (r % 64);
                }
                tail |= 1 << v;
            }
        }
        Hypertournament {
            n,
            k,
            entries,
            after,
            out,
            words,
            prec,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn arc_count(&self) -> usize {
        self.entries.len() / self.k
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId)
    }

    pub fn arc_entries(&self, a: ArcId) -> &[u8] {
        &self.entries[a.0 * self.k..(a.0 + 1) * self.k]
    }

    pub fn arc(&self, a: ArcId) -> Result<HyperArc> {
        self.check_arc_id(a)?;
        Ok(HyperArc {
            id: a,
            entries: self
                .arc_entries(a)
                .iter()
                .map(|&v| VertexId(v as usize))
                .collect(),
        })
    }

    /// Arcs in id order.
    pub fn arcs(&self) -> impl Iterator<Item = HyperArc> + '_ {
        (0..self.arc_count()).map(|r| self.arc(ArcId(r)).expect("id in range"))
    }

    /// Arc id of the arc on a given vertex set.
    pub fn arc_on(&self, vertices: &[VertexId]) -> Result<ArcId> {
        let idx: Vec<usize> = vertices.iter().map(|v| v.0).collect();
        let r = subset::subset_rank(self.n, self.k, &idx)?;
        Ok(ArcId(r as usize))
    }

    /// Arcs as 0-based vertex sequences, in id order.
    pub fn arc_lists(&self) -> Vec<Vec<usize>> {
        self.entries
            .chunks(self.k)
            .map(|c| c.iter().map(|&v| v as usize).collect())
            .collect()
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 >= self.n {
            return Err(HyperError::VertexOutOfRange {
                label: v.label() as i64,
                n: self.n,
            });
        }
        Ok(())
    }

    fn check_pair(&self, x: VertexId, y: VertexId) -> Result<()> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(HyperError::SameVertex(x.0));
        }
        Ok(())
    }

    fn check_arc_id(&self, a: ArcId) -> Result<()> {
        if a.0 >= self.arc_count() {
            return Err(HyperError::UnknownArc(a.0));
        }
        Ok(())
    }

    /// True iff `x` is listed before `y` in arc `a`.
    pub fn precedes(&self, a: ArcId, x: VertexId, y: VertexId) -> Result<bool> {
        self.check_arc_id(a)?;
        self.check_pair(x, y)?;
        let arc = self.arc_entries(a);
        let pos = |v: VertexId| arc.iter().position(|&e| e as usize == v.0);
        let px = pos(x).ok_or(HyperError::VertexNotInArc {
            vertex: x.0,
            arc: a.0,
        })?;
        let py = pos(y).ok_or(HyperError::VertexNotInArc {
            vertex: y.0,
            arc: a.0,
        })?;
        Ok(px < py)
    }

    /// Bitset of arcs in which x precedes y (unchecked).
    #[inline]
    pub(crate) fn prec_words(&self, x: usize, y: usize) -> &[u64] {
        let base = (x * self.n + y) * self.words;
        &self.prec[base..base + self.words]
    }

    /// `A(x, y)`: arcs in which x precedes y.
    pub fn arcs_where_precedes(&self, x: VertexId, y: VertexId) -> Result<Vec<ArcId>> {
        self.check_pair(x, y)?;
        Ok(bits(self.prec_words(x.0, y.0)).map(ArcId).collect())
    }

    /// `A{x, y}`: arcs containing both x and y.
    pub fn arcs_containing_pair(&self, x: VertexId, y: VertexId) -> Result<Vec<ArcId>> {
        self.check_pair(x, y)?;
        let mut out: Vec<ArcId> = bits(self.prec_words(x.0, y.0))
            .chain(bits(self.prec_words(y.0, x.0)))
            .map(ArcId)
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// `A*{x, y}`: arcs containing x and y in which neither is the last entry.
    pub fn arcs_star(&self, x: VertexId, y: VertexId) -> Result<Vec<ArcId>> {
        self.check_pair(x, y)?;
        Ok(self.arcs_star_unchecked(x.0, y.0))
    }

    pub(crate) fn arcs_star_unchecked(&self, x: usize, y: usize) -> Vec<ArcId> {
        let (wx, wy) = (self.prec_words(x, y), self.prec_words(y, x));
        let mut out = Vec::new();
        for (w, (&a, &b)) in wx.iter().zip(wy).enumerate() {
            for bit in BitIter(a | b) {
                let r = w * 64 + bit;
                let last = self.entries[(r + 1) * self.k - 1] as usize;
                if last != x && last != y {
                    out.push(ArcId(r));
                }
            }
        }
        out
    }

    /// `N+(x)`: every vertex that x precedes in some arc.
    pub fn out_neighbourhood(&self, x: VertexId) -> VertexSet {
        VertexSet(self.out[x.0])
    }

    #[inline]
    pub(crate) fn out_mask(&self, x: usize) -> u64 {
        self.out[x]
    }

    /// `N+_{T-a}(x)`: out-neighbourhood with arc `a` removed.
    pub fn out_neighbourhood_excluding_arc(&self, x: VertexId, a: ArcId) -> Result<VertexSet> {
        self.check_arc_id(a)?;
        self.check_vertex(x)?;
        Ok(VertexSet(self.out_mask_excluding(x.0, a.0)))
    }

    pub(crate) fn out_mask_excluding(&self, x: usize, a: usize) -> u64 {
        (0..self.arc_count())
            .filter(|&r| r != a)
            .fold(0, |acc, r| acc | self.after[r * self.n + x])
    }

    /// The vertex with empty out-neighbourhood, if there is one (at most one exists).
    pub fn sink(&self) -> Option<VertexId> {
        self.out.iter().position(|&m| m == 0).map(VertexId)
    }
}
