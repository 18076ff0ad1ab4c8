//! Zero forcing on small graphs: the standard color-change rule, exact
//! computation of the zero forcing number `Z(G)` and the failed zero forcing
//! number `F(G)` by exhaustive search, structural upper bounds, and
//! constructions of large failed sets for graph products.
//!
//! Graphs are immutable bitset-adjacency structures of at most
//! [`MAX_VERTICES`] vertices, safely shareable across threads.

#![forbid(unsafe_code)]

pub mod bitset;
pub mod construct;
pub mod edgelist;
pub mod family;
pub mod forcing;
pub mod graph;
pub mod oracle;
pub mod product;
pub mod records;
pub mod subsets;

pub use bitset::{parse_vertex_set, SetParseError, VertexSet, MAX_VERTICES};
pub use construct::{
    cartesian_lower_bound, corona_construction, corona_witness_need, grid_construction,
    known_failed_forcing_number, lexicographic_construction, lexicographic_witness_need,
    prism_construction, product_closed_form, strong_grid_construction, strong_torus_construction,
    torus_construction, Claim, ConstructionError, ConstructionResult, CoronaWitnessNeed,
    LexWitnessNeed,
};
pub use edgelist::{parse_graph, serialize_graph, ParseError, ParseErrorKind};
pub use family::{build_family, FamilyError, FamilySpec};
pub use forcing::{
    apply_rule_once, derived_coloring, derived_set, is_failed, is_maximal_failed, is_stalled,
    is_zero_forcing_set, ForceChain,
};
pub use graph::{Graph, GraphError};
pub use oracle::{
    failed_zero_forcing_number, structural_upper_bound, verify_sharpness, zero_forcing_number,
    BoundBasis, CapacityError, Certificate, ExactOptions, Route, SharpnessVerdict, Stat,
    DEFAULT_CAP,
};
pub use product::{
    apply_product, cartesian_product, corona, lexicographic_product, pair_index, strong_product,
    GraphExpr, ProductOp,
};
pub use records::{certificate_record, construction_record, parse_record, Record, RecordError};
