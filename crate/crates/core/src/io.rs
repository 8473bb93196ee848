//! File formats. Vertices are 1-based in every format.
//!
//! - instance: `{"n":5,"k":3,"arcs":[[3,2,1],[4,1,2],...]}`; arcs in any order
//!   on input, emitted in arc-id order.
//! - graph: `{"n":5,"edges":[[1,2],...]}`; edges emitted sorted.
//! - DOT: `graph { v1; ... v1 -- v2; ... }` with every vertex declared.
//! - witness path: `{"vertices":[...],"arcs":[[...],[...]]}`.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::competition::CompetitionWitness;
use crate::error::{HyperError, Result};
use crate::graphs::{ShapeClass, SimpleGraph};
use crate::hypercore::{diagnose, BuildOptions, Hypertournament, VertexId, MAX_ARCS};
use crate::paths::HyperPath;
use crate::subset::MAX_VERTICES;

/// Version of the formats above; bumped on any incompatible change.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDoc {
    pub n: usize,
    pub k: usize,
    pub arcs: Vec<Vec<i64>>,
}

fn label_to_index(label: i64, n: usize) -> Result<usize> {
    if label < 1 || label as u64 > n as u64 {
        return Err(HyperError::VertexOutOfRange { label, n });
    }
    Ok(label as usize - 1)
}

impl InstanceDoc {
    pub fn from_instance(t: &Hypertournament) -> Self {
        InstanceDoc {
            n: t.n(),
            k: t.k(),
            arcs: t
                .arc_lists()
                .into_iter()
                .map(|a| a.into_iter().map(|v| v as i64 + 1).collect())
                .collect(),
        }
    }

    /// Arcs as 0-based vertex lists; fails on labels outside `1..=n`.
    pub fn arcs_zero_based(&self) -> Result<Vec<Vec<usize>>> {
        if self.arcs.len() as u64 > MAX_ARCS {
            return Err(HyperError::InstanceTooLarge {
                arcs: self.arcs.len() as u64,
                max: MAX_ARCS,
            });
        }
        self.arcs
            .iter()
            .map(|a| a.iter().map(|&l| label_to_index(l, self.n)).collect())
            .collect()
    }

    /// All validation problems (empty when the document builds).
    pub fn diagnose(&self, options: BuildOptions) -> Vec<HyperError> {
        match self.arcs_zero_based() {
            Ok(arcs) => diagnose(self.n, self.k, &arcs, options),
            Err(e) => vec![e],
        }
    }

    pub fn build(&self, options: BuildOptions) -> Result<Hypertournament> {
        Hypertournament::build_with(self.n, self.k, &self.arcs_zero_based()?, options)
    }
}

pub fn parse_instance_doc(text: &str) -> Result<InstanceDoc> {
    serde_json::from_str(text).map_err(|e| HyperError::Parse(e.to_string()))
}

/// Parses and validates an instance document.
pub fn parse_instance(text: &str, options: BuildOptions) -> Result<Hypertournament> {
    parse_instance_doc(text)?.build(options)
}

pub fn instance_to_json(t: &Hypertournament) -> String {
    serde_json::to_string(&InstanceDoc::from_instance(t)).expect("plain data serializes")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<[i64; 2]>,
}

pub fn graph_to_json(g: &SimpleGraph) -> String {
    let doc = GraphDoc {
        n: g.n(),
        edges: g
            .edges()
            .map(|(a, b)| [a as i64 + 1, b as i64 + 1])
            .collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

fn graph_from_labels(n: usize, edges: impl IntoIterator<Item = (i64, i64)>) -> Result<SimpleGraph> {
    if n > MAX_VERTICES {
        return Err(HyperError::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let mut g = SimpleGraph::empty(n);
    for (a, b) in edges {
        let (a, b) = (label_to_index(a, n)?, label_to_index(b, n)?);
        if a == b {
            return Err(HyperError::Parse(format!("self-loop on v{}", a + 1)));
        }
        g.add_edge(VertexId(a), VertexId(b));
    }
    Ok(g)
}

pub fn parse_graph_json(text: &str) -> Result<SimpleGraph> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| HyperError::Parse(e.to_string()))?;
    graph_from_labels(doc.n, doc.edges.iter().map(|e| (e[0], e[1])))
}

pub fn graph_to_dot(g: &SimpleGraph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  v{};\n", v + 1));
    }
    for (a, b) in g.edges() {
        out.push_str(&format!("  v{} -- v{};\n", a + 1, b + 1));
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, PartialEq, Eq)]
enum DotToken<'a> {
    Word(&'a str),
    Open,
    Close,
    Semi,
    Edge,
}

fn dot_tokens(text: &str) -> Result<Vec<DotToken<'_>>> {
    let mut tokens = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b if b.is_ascii_whitespace() => i += 1,
            b'{' => {
                tokens.push(DotToken::Open);
                i += 1;
            }
            b'}' => {
                tokens.push(DotToken::Close);
                i += 1;
            }
            b';' => {
                tokens.push(DotToken::Semi);
                i += 1;
            }
            b'-' if bytes.get(i + 1) == Some(&b'-') => {
                tokens.push(DotToken::Edge);
                i += 2;
            }
            b if b.is_ascii_alphanumeric() || b == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                tokens.push(DotToken::Word(&text[start..i]));
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(HyperError::Parse(format!(
                    "unexpected character {ch:?} in DOT"
                )));
            }
        }
    }
    Ok(tokens)
}

fn dot_vertex(word: &str) -> Result<i64> {
    word.strip_prefix('v')
        .filter(|d| !d.is_empty() && d.len() <= 3 && d.bytes().all(|b| b.is_ascii_digit()))
        .and_then(|d| d.parse::<i64>().ok())
        .filter(|&l| l >= 1)
        .ok_or_else(|| HyperError::Parse(format!("vertex ids look like v1, v2, ...; got {word:?}")))
}

/// Parses the DOT subset this crate emits: an undirected `graph` with `vN`
/// node statements and `vA -- vB` edge statements, semicolons optional. The
/// vertex count is the largest label mentioned.
pub fn parse_dot(text: &str) -> Result<SimpleGraph> {
    let tokens = dot_tokens(text)?;
    let mut it = tokens.iter().peekable();
    if it.next() != Some(&DotToken::Word("graph")) {
        return Err(HyperError::Parse(
            "DOT input must start with `graph`".into(),
        ));
    }
    if let Some(DotToken::Word(_)) = it.peek() {
        it.next();
    }
    if it.next() != Some(&DotToken::Open) {
        return Err(HyperError::Parse("expected `{` after `graph`".into()));
    }
    let mut max_label = 0i64;
    let mut edges = Vec::new();
    loop {
        match it.next() {
            Some(DotToken::Close) => break,
            Some(DotToken::Semi) => {}
            Some(DotToken::Word(w)) => {
                let a = dot_vertex(w)?;
                max_label = max_label.max(a);
                if it.peek() == Some(&&DotToken::Edge) {
                    it.next();
                    let b = match it.next() {
                        Some(DotToken::Word(w)) => dot_vertex(w)?,
                        _ => return Err(HyperError::Parse("expected a vertex after `--`".into())),
                    };
                    max_label = max_label.max(b);
                    edges.push((a, b));
                }
            }
            Some(t) => return Err(HyperError::Parse(format!("unexpected {t:?} in DOT body"))),
            None => return Err(HyperError::Parse("unterminated DOT body".into())),
        }
    }
    if it.next().is_some() {
        return Err(HyperError::Parse("trailing input after DOT graph".into()));
    }
    if max_label as usize > MAX_VERTICES {
        return Err(HyperError::TooManyVertices {
            n: max_label as usize,
            max: MAX_VERTICES,
        });
    }
    graph_from_labels(max_label as usize, edges)
}

/// Graph JSON or DOT, told apart by the first non-blank character.
pub fn parse_graph_any(text: &str) -> Result<SimpleGraph> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text)
    } else {
        parse_dot(text)
    }
}

#[derive(Serialize)]
struct PathDoc {
    vertices: Vec<usize>,
    arcs: Vec<Vec<usize>>,
}

fn path_doc(t: &Hypertournament, p: &HyperPath) -> PathDoc {
    PathDoc {
        vertices: p.vertices.iter().map(|v| v.label()).collect(),
        arcs: p
            .arcs
            .iter()
            .map(|&a| t.arc_entries(a).iter().map(|&v| v as usize + 1).collect())
            .collect(),
    }
}

pub fn path_to_json(t: &Hypertournament, p: &HyperPath) -> String {
    serde_json::to_string(&path_doc(t, p)).expect("plain data serializes")
}

#[derive(Serialize)]
struct WitnessDoc {
    x: usize,
    y: usize,
    i: usize,
    j: usize,
    competes: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    z: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<PathDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<PathDoc>,
}

/// `{"x":1,"y":5,"i":1,"j":2,"competes":true,"z":4,"p":{..},"q":{..}}`;
/// the last three keys are absent when there is no witness.
pub fn witness_to_json(
    t: &Hypertournament,
    (x, y): (VertexId, VertexId),
    (i, j): (usize, usize),
    w: Option<&CompetitionWitness>,
) -> String {
    let doc = WitnessDoc {
        x: x.label(),
        y: y.label(),
        i,
        j,
        competes: w.is_some(),
        z: w.map(|w| w.z.label()),
        p: w.map(|w| path_doc(t, &w.p)),
        q: w.map(|w| path_doc(t, &w.q)),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

#[derive(Serialize)]
struct ShapeDoc<'a> {
    tag: &'a str,
    missing: Vec<[usize; 2]>,
    isolated: Option<usize>,
}

pub fn shape_to_json(s: &ShapeClass) -> String {
    let doc = ShapeDoc {
        tag: s.tag.name(),
        missing: s
            .missing_edges
            .iter()
            .map(|&(a, b)| [a + 1, b + 1])
            .collect(),
        isolated: s.isolated_vertex.map(|v| v.label()),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

/// `A..B` (half-open) or a single seed `A`.
pub fn parse_seed_range(text: &str) -> Result<Range<u64>> {
    let bad = || HyperError::Parse(format!("expected a seed range like 0..100, got {text:?}"));
    let num = |s: &str| s.trim().parse::<u64>().map_err(|_| bad());
    match text.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(bad());
            }
            Ok(a..b)
        }
        None => {
            let a = num(text)?;
            Ok(a..a.checked_add(1).ok_or_else(bad)?)
        }
    }
}

/// `x,y` with 1-based labels, e.g. `1,5`.
pub fn parse_vertex_pair(text: &str) -> Result<(VertexId, VertexId)> {
    let bad = || HyperError::Parse(format!("expected a vertex pair like 1,5, got {text:?}"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    let label = |s: &str| -> Result<VertexId> {
        let s = s.trim();
        let s = s.strip_prefix('v').unwrap_or(s);
        match s.parse::<usize>() {
            Ok(l) if (1..=MAX_VERTICES).contains(&l) => Ok(VertexId::from_label(l)),
            _ => Err(bad()),
        }
    };
    Ok((label(a)?, label(b)?))
}
