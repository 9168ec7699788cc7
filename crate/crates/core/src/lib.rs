//! Exact toolkit for Newton polyhedra, normal fans, B1-facet cuts, weighted
//! blow-up presentations and candidate-pole bookkeeping.

pub mod b1;
pub mod blowup;
mod dd;
pub mod error;
pub mod fan;
pub mod linalg;
pub mod nondeg;
pub mod num;
pub mod poly;
pub mod polyhedron;
pub mod upoly;
pub mod zeta;

pub use b1::{
    b_cut, choose_compatible, choose_consistent, classify_cones, detect_b1, general_bset, slope_classes,
    B1Certificate, BCut, BClass, BSet, Choice, ConeClassification, ConeKind, Mode, Refusal,
};
pub use blowup::{
    chart_groups, cox_presentation, numerical_data, orbit_restriction, proper_transform, relative_canonical,
    verify_desingularization, Case, ChartGroup, OrbitDetail, OrbitRecord, SNCCertificate, StackPresentation,
    TransformedPolynomial,
};
pub use error::{Error, Result};
pub use fan::{
    dual_pair, frugal_simplicial_subdivision, inscribed, normal_fan, ray_adjacency, Cone, Dual, Fan, Ray,
};
pub use nondeg::{nondegeneracy_check, Method, NondegeneracyVerdict, OracleConfig, Verdict, Witness};
pub use num::Q;
pub use poly::{face_polynomial, parse_polynomial, ExponentVector, Polynomial};
pub use polyhedron::{dd_convert, newton_polyhedron, Face, HalfSpace, NewtonPolyhedron, Representation};
pub use zeta::{
    actual_poles, assemble_topological_zeta, candidate_poles, reduced_candidate_poles, removable_slope_classes,
    ActualPoles, PoleSet, RationalFunctionInS, Stratum,
};
