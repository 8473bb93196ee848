//! k-hypertournaments and their (i,j)-step competition graphs.
//!
//! A k-hypertournament on n vertices has exactly one arc, an ordered k-tuple,
//! on every k-subset of the vertices. Vertices are 0-based internally and
//! 1-based (`v1`, `v2`, ...) in every printed or serialized form.

pub mod competition;
pub mod constructions;
pub mod error;
pub mod graphs;
pub mod hypercore;
pub mod io;
pub mod paths;
pub mod subset;
pub mod verify;

pub use competition::{
    competes_by_definition, competition_graph, competition_graph_12_fast, competition_witness,
    missing_edge_case_12, CompetitionWitness, MissingEdgeCase,
};
pub use constructions::{
    enumerate_all, instance_count, random_hypertournament, t1, t2, t3, transitive, Enumeration,
    FigureVariant, GeneratorKind, GeneratorSpec, DEFAULT_BUDGET, RANDOM_GENERATOR,
};
pub use error::{HyperError, Result};
pub use graphs::{classify_shape, ShapeClass, ShapeTag, SimpleGraph};
pub use hypercore::{ArcId, BuildOptions, HyperArc, Hypertournament, VertexId, VertexSet};
pub use paths::{find_path, is_strong, is_strong_dominance, HyperPath};
