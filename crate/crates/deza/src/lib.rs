//! Deza graph toolkit: recognition, analysis, construction, enumeration,
//! and structural verification.
//!
//! A nonempty k-regular graph on n vertices is a *Deza graph* when the
//! number of common neighbours of any two distinct vertices takes at most
//! two values b >= a; it is *strictly Deza* when it additionally has
//! diameter 2 and is not strongly regular. This crate implements the
//! structure theory of strictly Deza graphs whose parameters satisfy
//! k = b + 1 and beta > 1: every such graph is a 2-clique extension of a
//! complete multipartite graph with parts of size (n - k + 1)/2 and is
//! recognizable from its parameter quadruple (with a = 2k - n).
//!
//! The pieces:
//! - [`graph`]: immutable bitmask graphs, neighbourhoods, and the graph6
//!   interchange format ([`graph6`]);
//! - [`analysis`]: Deza / strongly-regular recognition, the alpha/beta
//!   invariants, vertex types, and the B[.]-class partition;
//! - [`construct`]: complete multipartite graphs, clique/coclique
//!   extensions, and the parameterized family;
//! - [`verify`]: executable structure verdicts with explicit witnesses and
//!   a per-property check suite;
//! - [`enumerate`]: isomorphism-free census of strictly Deza graphs on
//!   small vertex counts, with exact canonical forms from [`canon`].

pub mod analysis;
pub mod canon;
pub mod construct;
pub mod enumerate;
pub mod graph;
pub mod graph6;
#[cfg(test)]
mod testutil;
pub mod verify;

pub use analysis::{
    beta_by_formula, classify_all, classify_vertex, deza_parameters, is_strictly_deza,
    is_strongly_regular, quotient_graph, rho_partition, standing_hypothesis, vertex_profile,
    AnalysisError, DezaParameters, RhoPartition, SrgParameters, Standing, TypeCensus, VertexKind,
    VertexProfile, VertexType,
};
pub use canon::{canonical_form, canonical_graph, CanonicalForm};
pub use construct::{
    clique_extension, coclique_extension, complete_multipartite, deza_family, extension,
    feasibility, from_parameters, ConstructError, Infeasibility, MultipartiteShape,
};
pub use enumerate::{
    census_to_graph6, census_to_jsonl, enumerate_regular, enumerate_strictly_deza, CensusRecord,
    EnumerationError, ResourceLimits, StructureSummary, MAX_ENUM_ORDER,
};
pub use graph::{Graph, GraphError, VertexSet, MAX_ORDER};
pub use graph6::{Graph6Error, Graph6LineError};
pub use verify::{
    check_properties, verify_parameters, verify_structure, ParameterVerdict, PropertyCheck,
    PropertyReport, StructureCheck, StructureFailure, StructureVerdict, StructureWitness,
};
