use thiserror::Error;

/// Formats a 0-based vertex list with the 1-based `v` labels used in all I/O.
pub(crate) fn labels(vertices: &[usize]) -> String {
    let parts: Vec<String> = vertices.iter().map(|v| format!("v{}", v + 1)).collect();
    format!("{{{}}}", parts.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperError {
    #[error("arity k={k} out of range for n={n} (need {min}<=k<=n-1)")]
    ArityOutOfRange { n: usize, k: usize, min: usize },
    #[error("n={n} exceeds the supported maximum of {max} vertices")]
    TooManyVertices { n: usize, max: usize },
    #[error("instance has {arcs} arcs, above the supported maximum of {max}")]
    InstanceTooLarge { arcs: u64, max: u64 },
    #[error("arc {} has {len} entries, expected k={k}", labels(.arc))]
    WrongArcLength {
        arc: Vec<usize>,
        len: usize,
        k: usize,
    },
    #[error("arc {} repeats a vertex", labels(.arc))]
    RepeatedVertexInArc { arc: Vec<usize> },
    #[error("vertex label {label} out of range 1..={n}")]
    VertexOutOfRange { label: i64, n: usize },
    #[error("duplicate subset {}: more than one arc on it", labels(.subset))]
    DuplicateSubset { subset: Vec<usize> },
    #[error("missing subset {}: no arc on it", labels(.subset))]
    MissingSubset { subset: Vec<usize> },
    #[error("v{} is not an entry of arc {arc}", .vertex + 1)]
    VertexNotInArc { vertex: usize, arc: usize },
    #[error("the two vertices must differ (both v{})", .0 + 1)]
    SameVertex(usize),
    #[error("unknown arc id {0}")]
    UnknownArc(usize),
    #[error("subset has {got} elements, expected {k}")]
    BadSubsetSize { got: usize, k: usize },
    #[error("rank {rank} out of range (C(n,k) = {count})")]
    RankOutOfRange { rank: u64, count: u64 },
    #[error("bad bound: {0}")]
    BadBound(String),
    #[error("enumeration needs {count} instances, budget is {budget}")]
    BudgetExceeded { count: u128, budget: u128 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = HyperError> = std::result::Result<T, E>;
