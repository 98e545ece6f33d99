//! Exact root-system computations for flag domains.
//!
//! The crate classifies the identity component of the holomorphic
//! automorphism group of a measurable open real-form orbit `D` in a complex
//! flag manifold `Z = G/Q`, and checks the supporting tables by brute-force
//! root-system computation.
//!
//! * [`rootsys`]: simple root systems, Weyl orbits, Weyl dimension formula,
//!   Freudenthal multiplicities.
//! * [`parabolic`]: parabolic subalgebras from node sets or defining vectors.
//! * [`realform`]: a registry of real forms with Vogan paintings.
//! * [`homcheck`]: search for root chains certifying that the dominant
//!   short root representation does not map into `g/q`.
//! * [`classify`]: the decision procedure producing a [`HolResult`].
//! * [`repthy`]: vanishing range, cohomological degree, enlargement and
//!   branching dimension checks.

pub mod classify;
pub mod error;
pub mod homcheck;
pub mod parabolic;
pub mod realform;
pub mod repthy;
pub mod rootsys;

pub use classify::{classify_hol, classify_product, ExceptionRegistry, HolKind, HolResult, Source};
pub use error::{Error, Result};
pub use homcheck::{
    find_killing_chain, sweep_exceptions, verify_certificate, ChainCertificate, SweepReport,
};
pub use parabolic::{parabolic_from_nodes, parabolic_from_vector, NodeSet, Parabolic};
pub use realform::{lookup_real_form, measurability_status, Measurability, RealForm, RealFormKind};
pub use repthy::{
    hermitian_dim, s_dimension, vanishing_condition, verify_branching, verify_enlargement,
    BranchingReport, EnlargementPair, EnlargementReport,
};
pub use rootsys::{
    build_root_system, dominant_root, pair, weight_multiplicity, weyl_dim, weyl_orbit, Family,
    LengthClass, Root, RootSystem, SimpleType, Weight,
};
