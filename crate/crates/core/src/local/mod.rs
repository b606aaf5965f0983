//! Local analysis of curve germs: Newton polygons, Puiseux branches, Milnor
//! numbers and the virtual cusp/node split of the delta invariant.

mod germ;
mod milnor;
mod puiseux;
mod report;

pub use germ::{localize, newton_polygon, shear, NewtonPolygon, Segment};
pub use milnor::{local_intersection, milnor_number};
pub use puiseux::{puiseux_branches, BranchDatum, ExpansionTerm};
pub use report::{analyze_germ, local_report, tangent_directions, ClassTag, LocalInvariants};
