//! Alpha-spectral radius of k-uniform hypergraphs, supertree rewriting
//! operations, the extremal supertree families, and an exhaustive checker
//! that confirms those families maximize the spectral radius at small sizes.

pub mod canonical;
pub mod combinatorics;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod hypergraph;
pub mod io;
pub mod spectral;
pub mod transforms;
pub mod verify;

pub use canonical::{are_isomorphic, canonical_form, canonical_graph, CanonicalForm};
pub use combinatorics::{
    check_bfs_ordering, degree_sequence, find_bfs_ordering, independence_number, matching_number,
    pendant_friendly_mis, BfsLayout, BfsViolation, DegreeSequence,
};
pub use constructions::{
    beta_range, bfs_supertree, h_supertree, hyperstar, layer_plan, mu_range, t_supertree,
    FamilyParams, LayerPlan,
};
pub use enumeration::{
    count_supertrees, enumerate_classes, enumerate_supertrees, EnumerationQuery, Filter,
};
pub use error::{Error, Result};
pub use hypergraph::{validate_supertree, Hypergraph, Supertree};
pub use io::{parse_hypergraph, to_json, to_plain};
pub use spectral::{
    alpha_spectral_radius, alpha_spectral_radius_from, apply_a_alpha, rayleigh, residual, Alpha,
    PerronResult, SolverOptions,
};
pub use transforms::{edge_release, move_edges, release_move, two_switch, EdgeMove, TwoSwitchSpec};
pub use verify::{
    scope_note, sweep, sweep_theorems, verify_degree_sequence_extremal,
    verify_independence_extremal, verify_matching_extremal, ExtremalReport, SweepReport, Theorem,
    TheoremSet, VerifyOptions,
};
