//! Checks of the structural results on (1,2)-step competition graphs, run on
//! single instances or swept over enumerations and seeded samples.
//!
//! The definition-based `C_{1,2}` is ground truth; the characterization-based
//! builder is what the missing-edge check puts on trial. Sweeps may switch to
//! the characterization-based graph for the shape checks to reach larger
//! enumerations.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::competition::{case_12, definition_graph, MissingEdgeCase};
use crate::constructions::{enumerate_all, random_hypertournament};
use crate::error::{HyperError, Result};
use crate::graphs::{
    classify_shape, has_claw, has_disjoint_edge_pair, has_triangle, ShapeClass, ShapeTag,
    SimpleGraph,
};
use crate::hypercore::{BuildOptions, Hypertournament, VertexId};
use crate::io::{instance_to_json, parse_instance};
use crate::paths::{is_strong, is_strong_dominance, is_strong_exhaustive};

/// The (i,j) pairs [`Check::IjCollapse`] compares against (1,2) by default.
pub const DEFAULT_COLLAPSE_PAIRS: [(usize, usize); 3] = [(2, 2), (1, 3), (3, 2)];

/// Instances handed to one worker at a time.
const CHUNK: u64 = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// Characterization-based and definition-based `C_{1,2}` agree pair by pair.
    MissingEdgeLemma,
    /// The complement has no two disjoint edges, no triangle, and a claw
    /// exactly when the graph is a clique plus an isolated vertex.
    ComplementLemmas,
    /// The shape is one of the four admissible ones, and not the
    /// clique-plus-isolated one when the instance is strong.
    ShapeTheorems,
    /// `C_{i,j} = C_{1,2}` for the configured pairs, and `C_{1,1} ⊆ C_{1,2}`.
    IjCollapse,
    /// A sink is the isolated vertex of a clique-plus-isolated shape.
    SinkShape,
    /// Dominance-digraph strongness equals exhaustive path strongness.
    StrongnessOracle,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::MissingEdgeLemma,
        Check::ComplementLemmas,
        Check::ShapeTheorems,
        Check::IjCollapse,
        Check::SinkShape,
        Check::StrongnessOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::MissingEdgeLemma => "missing-edge",
            Check::ComplementLemmas => "complement",
            Check::ShapeTheorems => "shape",
            Check::IjCollapse => "collapse",
            Check::SinkShape => "sink",
            Check::StrongnessOracle => "strongness",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = HyperError;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
                HyperError::Parse(format!(
                    "unknown check {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// Which `C_{1,2}` the shape-level checks look at.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum GraphBuilder {
    #[default]
    Definition,
    Lemma,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail(String),
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        *self == CheckOutcome::Pass
    }

    fn fail_if(cond: bool, detail: impl FnOnce() -> String) -> Self {
        if cond {
            CheckOutcome::Fail(detail())
        } else {
            CheckOutcome::Pass
        }
    }
}

fn check_scope(t: &Hypertournament) -> Result<()> {
    if t.k() < 3 {
        return Err(HyperError::ArityOutOfRange {
            n: t.n(),
            k: t.k(),
            min: 3,
        });
    }
    Ok(())
}

fn check_pairs(pairs: &[(usize, usize)]) -> Result<()> {
    match pairs.iter().find(|&&(i, j)| i < 1 || j < 2) {
        Some((i, j)) => Err(HyperError::BadBound(format!(
            "collapse pair ({i},{j}) needs i>=1 and j>=2"
        ))),
        None => Ok(()),
    }
}

/// Per-instance state shared by the checks, each piece computed on first use.
struct Subject<'a> {
    t: &'a Hypertournament,
    builder: GraphBuilder,
    cases: OnceCell<Vec<MissingEdgeCase>>,
    lemma: OnceCell<SimpleGraph>,
    definition: OnceCell<SimpleGraph>,
    shape: OnceCell<ShapeClass>,
    strong: OnceCell<bool>,
}

impl<'a> Subject<'a> {
    fn new(t: &'a Hypertournament, builder: GraphBuilder) -> Self {
        Subject {
            t,
            builder,
            cases: OnceCell::new(),
            lemma: OnceCell::new(),
            definition: OnceCell::new(),
            shape: OnceCell::new(),
            strong: OnceCell::new(),
        }
    }

    /// Cases for pairs `x < y` in lexicographic order.
    fn cases(&self) -> &[MissingEdgeCase] {
        self.cases.get_or_init(|| {
            let n = self.t.n();
            let mut out = Vec::with_capacity(n * (n - 1) / 2);
            for x in 0..n {
                for y in x + 1..n {
                    out.push(case_12(self.t, x, y));
                }
            }
            out
        })
    }

    fn lemma(&self) -> &SimpleGraph {
        self.lemma.get_or_init(|| {
            let n = self.t.n();
            let mut g = SimpleGraph::empty(n);
            let mut cases = self.cases().iter();
            for x in 0..n {
                for y in x + 1..n {
                    if !cases.next().expect("one case per pair").is_missing() {
                        g.add_edge(VertexId(x), VertexId(y));
                    }
                }
            }
            g
        })
    }

    fn definition(&self) -> &SimpleGraph {
        self.definition
            .get_or_init(|| definition_graph(self.t, 1, 2))
    }

    fn c12(&self) -> &SimpleGraph {
        match self.builder {
            GraphBuilder::Definition => self.definition(),
            GraphBuilder::Lemma => self.lemma(),
        }
    }

    fn shape(&self) -> &ShapeClass {
        self.shape.get_or_init(|| classify_shape(self.c12()))
    }

    fn strong(&self) -> bool {
        *self.strong.get_or_init(|| is_strong(self.t))
    }

    fn run(&self, check: Check, pairs: &[(usize, usize)]) -> CheckOutcome {
        match check {
            Check::MissingEdgeLemma => self.missing_edge_lemma(),
            Check::ComplementLemmas => self.complement_lemmas(),
            Check::ShapeTheorems => self.shape_theorems(),
            Check::IjCollapse => self.ij_collapse(pairs),
            Check::SinkShape => self.sink_shape(),
            Check::StrongnessOracle => self.strongness_oracle(),
        }
    }

    fn missing_edge_lemma(&self) -> CheckOutcome {
        let n = self.t.n();
        let def = self.definition();
        let mut cases = self.cases().iter();
        for x in 0..n {
            for y in x + 1..n {
                let case = *cases.next().expect("one case per pair");
                let competes = def.has_edge(VertexId(x), VertexId(y));
                if case.is_missing() == competes {
                    let verdict = if competes {
                        "competes"
                    } else {
                        "does not compete"
                    };
                    return CheckOutcome::Fail(format!(
                        "pair v{},v{}: characterization gives {case}, definition says the pair {verdict}",
                        x + 1,
                        y + 1
                    ));
                }
            }
        }
        CheckOutcome::Pass
    }

    fn complement_lemmas(&self) -> CheckOutcome {
        let c = self.c12().complement();
        if let Some((e, f)) = has_disjoint_edge_pair(&c) {
            return CheckOutcome::Fail(format!(
                "complement has disjoint edges {}-{} and {}-{}",
                e.0 + 1,
                e.1 + 1,
                f.0 + 1,
                f.1 + 1
            ));
        }
        if let Some((a, b, d)) = has_triangle(&c) {
            return CheckOutcome::Fail(format!(
                "complement has triangle {}-{}-{}",
                a + 1,
                b + 1,
                d + 1
            ));
        }
        let isolated = self.shape().tag == ShapeTag::CliquePlusIsolated;
        match has_claw(&c) {
            Some((centre, leaves)) if !isolated => CheckOutcome::Fail(format!(
                "complement has claw centred at v{} with leaves v{},v{},v{} but shape is {}",
                centre + 1,
                leaves[0] + 1,
                leaves[1] + 1,
                leaves[2] + 1,
                self.shape().tag
            )),
            None if isolated => CheckOutcome::Fail(format!(
                "shape is {} but its complement has no claw",
                self.shape()
            )),
            _ => CheckOutcome::Pass,
        }
    }

    fn shape_theorems(&self) -> CheckOutcome {
        let shape = self.shape();
        let allowed = matches!(
            shape.tag,
            ShapeTag::Complete
                | ShapeTag::CompleteMinusP2
                | ShapeTag::CompleteMinusP3
                | ShapeTag::CliquePlusIsolated
        );
        if !allowed {
            return CheckOutcome::Fail(format!("shape {shape} is not admissible"));
        }
        CheckOutcome::fail_if(
            self.strong() && shape.tag == ShapeTag::CliquePlusIsolated,
            || format!("strong instance has shape {shape}"),
        )
    }

    fn ij_collapse(&self, pairs: &[(usize, usize)]) -> CheckOutcome {
        let base = self.definition();
        for &(i, j) in pairs {
            let g = definition_graph(self.t, i, j);
            if &g != base {
                return CheckOutcome::Fail(format!(
                    "C_{{{i},{j}}} differs from C_{{1,2}}: {}",
                    edge_diff(&g, base)
                ));
            }
        }
        let c11 = definition_graph(self.t, 1, 1);
        CheckOutcome::fail_if(!c11.is_subgraph_of(base), || {
            format!(
                "C_{{1,1}} is not contained in C_{{1,2}}: {}",
                edge_diff(&c11, base)
            )
        })
    }

    fn sink_shape(&self) -> CheckOutcome {
        let Some(s) = self.t.sink() else {
            return CheckOutcome::Pass;
        };
        let shape = self.shape();
        CheckOutcome::fail_if(
            shape.tag != ShapeTag::CliquePlusIsolated || shape.isolated_vertex != Some(s),
            || format!("sink {s} but shape is {shape}"),
        )
    }

    fn strongness_oracle(&self) -> CheckOutcome {
        let fast = self.strong();
        let slow = is_strong_exhaustive(self.t);
        CheckOutcome::fail_if(fast != slow, || {
            format!(
                "dominance digraph says strong={fast}, exhaustive path search says strong={slow}"
            )
        })
    }
}

/// Edges in exactly one of the two graphs, as `+a-b` (only in `g`) / `-a-b`.
fn edge_diff(g: &SimpleGraph, base: &SimpleGraph) -> String {
    let mut parts = Vec::new();
    for (a, b) in g.edges() {
        if !base.has_edge(VertexId(a), VertexId(b)) {
            parts.push(format!("+{}-{}", a + 1, b + 1));
        }
    }
    for (a, b) in base.edges() {
        if !g.has_edge(VertexId(a), VertexId(b)) {
            parts.push(format!("-{}-{}", a + 1, b + 1));
        }
    }
    parts.join(" ")
}

fn single(t: &Hypertournament, check: Check, pairs: &[(usize, usize)]) -> Result<CheckOutcome> {
    check_scope(t)?;
    Ok(Subject::new(t, GraphBuilder::Definition).run(check, pairs))
}

pub fn check_missing_edge_lemma(t: &Hypertournament) -> Result<CheckOutcome> {
    single(t, Check::MissingEdgeLemma, &[])
}

pub fn check_complement_lemmas(t: &Hypertournament) -> Result<CheckOutcome> {
    single(t, Check::ComplementLemmas, &[])
}

pub fn check_shape_theorems(t: &Hypertournament) -> Result<CheckOutcome> {
    single(t, Check::ShapeTheorems, &[])
}

pub fn check_ij_collapse(t: &Hypertournament, pairs: &[(usize, usize)]) -> Result<CheckOutcome> {
    check_pairs(pairs)?;
    single(t, Check::IjCollapse, pairs)
}

pub fn check_sink_shape(t: &Hypertournament) -> Result<CheckOutcome> {
    single(t, Check::SinkShape, &[])
}

pub fn check_strongness_oracle(t: &Hypertournament) -> Result<CheckOutcome> {
    single(t, Check::StrongnessOracle, &[])
}

/// Where a sweep draws its instances from.
#[derive(Clone, Debug)]
pub enum SweepSource {
    /// Enumeration indices `range` (clamped to the enumeration size).
    Enumerate {
        n: usize,
        k: usize,
        range: Range<u64>,
        budget: u128,
    },
    /// One seeded random instance per seed.
    Random {
        n: usize,
        k: usize,
        seeds: Range<u64>,
    },
    /// Explicit instances, indexed by position.
    Instances(Vec<Hypertournament>),
}

impl SweepSource {
    /// Every instance for (n, k), starting at enumeration index `resume`.
    pub fn all(n: usize, k: usize, resume: u64, budget: u128) -> Self {
        SweepSource::Enumerate {
            n,
            k,
            range: resume..u64::MAX,
            budget,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub checks: Vec<Check>,
    pub jobs: usize,
    pub builder: GraphBuilder,
    pub collapse_pairs: Vec<(usize, usize)>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            checks: Check::ALL.to_vec(),
            jobs: 1,
            builder: GraphBuilder::Definition,
            collapse_pairs: DEFAULT_COLLAPSE_PAIRS.to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// Enumeration index, seed, or position in the instance list.
    pub index: u64,
    pub check: String,
    pub detail: String,
    /// Instance JSON, re-checkable with [`recheck`].
    pub instance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub source: String,
    pub first_index: u64,
    pub instance_count: u64,
    pub shape_histogram: BTreeMap<ShapeTag, u64>,
    pub strong_count: u64,
    /// Instances whose dominance digraph is strongly connected; exceeds
    /// `strong_count` when some pair is joined only by walks that reuse an arc.
    pub dominance_strong_count: u64,
    /// How often each missing-edge condition was the first to hold, over all
    /// non-adjacent pairs of all instances.
    pub missing_edge_cases: BTreeMap<String, u64>,
    pub checks_run: Vec<String>,
    pub failures: Vec<Failure>,
    /// Wall-clock seconds. Left out of the JSON unless requested, so that
    /// reports of identical sweeps are byte-identical.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_seconds: Option<f64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Human-readable summary.
    pub fn table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("source          {}\n", self.source));
        out.push_str(&format!("instances       {}\n", self.instance_count));
        out.push_str(&format!("strong          {}\n", self.strong_count));
        out.push_str(&format!(
            "dominance-strong {}\n",
            self.dominance_strong_count
        ));
        out.push_str(&format!("checks          {}\n", self.checks_run.join(", ")));
        out.push_str("shapes\n");
        for (tag, count) in &self.shape_histogram {
            out.push_str(&format!("  {:<22}{count}\n", tag.name()));
        }
        out.push_str("missing-edge cases\n");
        for (case, count) in &self.missing_edge_cases {
            out.push_str(&format!("  {case:<22}{count}\n"));
        }
        if let Some(s) = self.elapsed_seconds {
            out.push_str(&format!("elapsed         {s:.3}s\n"));
        }
        out.push_str(&format!("failures        {}\n", self.failures.len()));
        for f in self.failures.iter().take(20) {
            out.push_str(&format!("  #{} {}: {}\n", f.index, f.check, f.detail));
        }
        out
    }
}

const CASE_NAMES: [&str; 5] = ["SinkX", "SinkY", "SoleOutY", "SoleOutX", "StarArc"];

#[derive(Default)]
struct Tally {
    count: u64,
    shapes: [u64; ShapeTag::ALL.len()],
    strong: u64,
    dominance_strong: u64,
    cases: [u64; CASE_NAMES.len()],
    failures: Vec<Failure>,
}

impl Tally {
    fn absorb(&mut self, other: Tally) {
        self.count += other.count;
        self.strong += other.strong;
        self.dominance_strong += other.dominance_strong;
        for (a, b) in self.shapes.iter_mut().zip(other.shapes) {
            *a += b;
        }
        for (a, b) in self.cases.iter_mut().zip(other.cases) {
            *a += b;
        }
        self.failures.extend(other.failures);
    }

    fn record(&mut self, index: u64, t: &Hypertournament, cfg: &SweepConfig) {
        let s = Subject::new(t, cfg.builder);
        self.count += 1;
        let tag = s.shape().tag;
        self.shapes[ShapeTag::ALL
            .iter()
            .position(|&x| x == tag)
            .expect("listed tag")] += 1;
        if s.strong() {
            self.strong += 1;
        }
        if is_strong_dominance(t) {
            self.dominance_strong += 1;
        }
        for case in s.cases() {
            if let Some(slot) = CASE_NAMES.iter().position(|&name| name == case.name()) {
                self.cases[slot] += 1;
            }
        }
        for &check in &cfg.checks {
            if let CheckOutcome::Fail(detail) = s.run(check, &cfg.collapse_pairs) {
                self.failures.push(Failure {
                    index,
                    check: check.name().to_string(),
                    detail,
                    instance: instance_to_json(t),
                });
            }
        }
    }
}

/// Runs `cfg.checks` over every instance of `source`. The report does not
/// depend on `cfg.jobs`.
pub fn sweep(source: &SweepSource, cfg: &SweepConfig) -> Result<VerificationReport> {
    check_pairs(&cfg.collapse_pairs)?;
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(|e| HyperError::Parse(format!("cannot start worker pool: {e}")))?;

    let chunks = |range: Range<u64>| -> Vec<Range<u64>> {
        let mut out = Vec::new();
        let mut lo = range.start;
        while lo < range.end {
            let hi = lo.saturating_add(CHUNK).min(range.end);
            out.push(lo..hi);
            lo = hi;
        }
        out
    };

    let (description, first, parts): (String, u64, Vec<Tally>) = match source {
        SweepSource::Enumerate {
            n,
            k,
            range,
            budget,
        } => {
            let e = enumerate_all(*n, *k, *budget)?;
            check_scope(&e.instance(0)?)?;
            let range = range.start.min(e.len())..range.end.min(e.len());
            let parts = pool.install(|| {
                chunks(range.clone())
                    .into_par_iter()
                    .map(|r| {
                        let mut tally = Tally::default();
                        for (i, t) in e.iter_range(r) {
                            tally.record(i, &t, cfg);
                        }
                        tally
                    })
                    .collect()
            });
            (
                format!("all n={n} k={k} indices {}..{}", range.start, range.end),
                range.start,
                parts,
            )
        }
        SweepSource::Random { n, k, seeds } => {
            check_scope(&random_hypertournament(*n, *k, 0)?)?;
            let parts = pool.install(|| {
                chunks(seeds.clone())
                    .into_par_iter()
                    .map(|r| {
                        let mut tally = Tally::default();
                        for seed in r {
                            let t =
                                random_hypertournament(*n, *k, seed).expect("parameters checked");
                            tally.record(seed, &t, cfg);
                        }
                        tally
                    })
                    .collect()
            });
            (
                format!("random n={n} k={k} seeds {}..{}", seeds.start, seeds.end),
                seeds.start,
                parts,
            )
        }
        SweepSource::Instances(list) => {
            for t in list {
                check_scope(t)?;
            }
            let parts = pool.install(|| {
                list.par_iter()
                    .enumerate()
                    .map(|(i, t)| {
                        let mut tally = Tally::default();
                        tally.record(i as u64, t, cfg);
                        tally
                    })
                    .collect()
            });
            (format!("{} instance(s)", list.len()), 0, parts)
        }
    };

    let mut total = Tally::default();
    for part in parts {
        total.absorb(part);
    }
    total
        .failures
        .sort_by(|a, b| (a.index, &a.check).cmp(&(b.index, &b.check)));
    Ok(VerificationReport {
        source: description,
        first_index: first,
        instance_count: total.count,
        shape_histogram: ShapeTag::ALL.iter().copied().zip(total.shapes).collect(),
        strong_count: total.strong,
        dominance_strong_count: total.dominance_strong,
        missing_edge_cases: CASE_NAMES
            .iter()
            .map(|s| s.to_string())
            .zip(total.cases)
            .collect(),
        checks_run: cfg.checks.iter().map(|c| c.name().to_string()).collect(),
        failures: total.failures,
        elapsed_seconds: Some(started.elapsed().as_secs_f64()),
    })
}

/// Re-runs a reported failure from its serialized instance alone.
pub fn recheck(failure: &Failure, collapse_pairs: &[(usize, usize)]) -> Result<CheckOutcome> {
    let t = parse_instance(&failure.instance, BuildOptions::default())?;
    let check: Check = failure.check.parse()?;
    check_pairs(collapse_pairs)?;
    single(&t, check, collapse_pairs)
}
