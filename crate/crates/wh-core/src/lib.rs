//! Construction and symmetry analysis of the Woolly Hat graphs `WH_n(a,b,c,d)`:
//! a family of tetravalent tricirculants built from three cyclic vertex classes.
//!
//! The crate provides
//!
//! * parameter validation and graph construction ([`params`], [`graph`]),
//! * the named automorphisms of the family and general permutation-group
//!   machinery with a deterministic stabilizer chain ([`perm`], [`group`]),
//! * a full automorphism-group and canonical-form engine based on color
//!   refinement with individualization backtracking ([`aut`]),
//! * transitivity reports, the red/blue edge structure of the vertex-transitive
//!   members, and LR-structure candidate tests ([`symmetry`]),
//! * the vertex-transitivity classification decision procedure ([`classify`]),
//! * exhaustive parameter censuses with deterministic, resumable output
//!   ([`census`]),
//! * graph6/sparse6/DOT export ([`format`]).
//!
//! With the default `parallel` feature the census sweeps fan out over a rayon
//! pool; without it the same entry points run sequentially.

pub mod aut;
pub mod census;
pub mod classify;
pub mod format;
pub mod graph;
pub mod group;
pub mod params;
pub mod perm;
pub mod symmetry;

pub use aut::{
    are_isomorphic, automorphism_generators, canonical_form, CanonicalForm, ColoredGraph,
};
pub use classify::{
    classify, family2_check, family3_check, vt_ground_truth, Clause, VtClassification,
};
pub use graph::{EdgeKind, QuotientGraph, VertexClass, VertexId, WhGraph};
pub use group::{Action, PermGroup};
pub use params::{ParamError, WhParams};
pub use perm::{is_automorphism, rho, sigma, tau, theta, Permutation};
pub use symmetry::{
    lr_candidate_check, transitivity_report, EdgeColor, EdgeColoring, LrReport, TransitivityReport,
};
