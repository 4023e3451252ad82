//! Flow-up classes on highest-root Hessenberg varieties and the divided
//! difference operators that generate them.
//!
//! Everything is exact: polynomials have rational coefficients in the simple
//! roots `a1..ak`, and Weyl group elements are integer matrices.

pub mod ddops;
pub mod error;
pub mod flow;
pub mod gkm;
pub mod poly;
pub mod props;
pub mod repchar;
pub mod rootsystem;
pub mod suite;
pub mod weyl;

pub use ddops::{
    build_family, divided_difference, ActionCase, BuildStats, Coordinates, DividedDifferences,
    FlowUpFamily,
};
pub use error::{Error, Result};
pub use flow::{flow_up_basis, flow_up_space, FlowUpSpace};
pub use gkm::{
    check_gkm, class_degree, dot_action, expand_in_basis, is_flow_up, CohomologyClass, Violation,
};
pub use poly::{act, Grading, Monomial, Polynomial, Rational};
pub use props::{Check, Report};
pub use repchar::{
    action_matrix, fiber_matrix, fiber_representation, ActionMatrix, Character, Confirm,
};
pub use rootsystem::{CartanType, Family, HessenbergSet, Root, RootId, RootSystem};
pub use suite::{Context, Options, Suite};
pub use weyl::{Edge, ElemId, LabeledGraph, WeylElement, WeylGroup};
