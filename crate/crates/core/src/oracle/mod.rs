//! Independent cross-checks: delta by blow-ups and branch data by numerical
//! monodromy. Neither feeds the exact reports.

mod blowup;
mod cross;
mod numeric;

pub use blowup::{blowup_delta, InfinitelyNearTree, TreeNode};
pub use cross::{check_orbit, cross_validate, OracleReport, OrbitCheck};
pub use numeric::{numeric_branches, NumericBranches};
