//! Curve-level invariants, the virtual Plücker formulas, the Hessian audit,
//! explicit dual curves and the inequality suite.

mod dual_curve;
mod dual_predict;
mod global;
mod hessian;
mod inequalities;

pub use dual_curve::{dual_curve, same_curve, DualCurveOptions};
pub use dual_predict::{
    plucker_verify, predict_dual, predict_from_numbers, DualPrediction, Identity, Prediction,
};
pub use global::{
    aggregate, global_invariants, irreducibility, singular_classes, GlobalInvariants,
    Irreducibility,
};
pub use hessian::{
    hessian, hessian_audit, intersection_multiplicity, HessianReport, PointContribution,
};
pub use inequalities::{inequality_audit, inequality_suite, InequalityEntry, InequalityReport};
