//! Serializable reports. Every number is exact: integers as JSON integers,
//! rationals and algebraic data as strings. Numerical oracle output lives
//! only under `nonexact`.

mod csv;
mod text;

use serde::{Deserialize, Serialize};

pub use self::csv::{census_csv, CSV_HEADER};
pub use self::text::{render_census, render_record, render_text};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub input: String,
    pub variables: [String; 3],
    pub degree: u32,
    pub irreducibility: String,
    pub singular_points: Vec<PointEntry>,
    pub unresolved: Vec<String>,
    pub global: Option<GlobalEntry>,
    pub dual: Option<DualEntry>,
    pub identities: Vec<IdentityEntry>,
    pub inequalities: Vec<InequalityDoc>,
    pub hessian: Option<HessianEntry>,
    pub dual_curve: Option<DualCurveEntry>,
    pub oracle: Option<Vec<OracleEntry>>,
    pub warnings: Vec<String>,
    pub status: Status,
    pub nonexact: Option<NonexactEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Every check passed.
    Ok,
    /// A constraint or identity failed, or the data are inadmissible.
    Finding,
    /// Singular orbits beyond the extension bound remain.
    Unresolved,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Finding => 1,
            Status::Unresolved => 3,
        }
    }
}

/// One Galois orbit of singular points with its local invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointEntry {
    /// Minimal polynomial of `t` generating the residue field, or `"Q"`.
    pub residue_field: String,
    /// Rational box isolating the root `t` used for the coordinates.
    pub embedding: Option<BoxEntry>,
    /// Projective coordinates as polynomials in `t`.
    pub coordinates: [String; 3],
    pub orbit_size: usize,
    pub local: LocalEntry,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxEntry {
    pub re: [String; 2],
    pub im: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalEntry {
    pub class_tag: String,
    pub m_p: u32,
    pub mu: u32,
    pub r: u32,
    pub delta: u32,
    pub c_vp: u32,
    pub n_vp: u32,
    pub tangents: u32,
    pub branches: Vec<BranchEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchEntry {
    pub multiplicity: u32,
    pub orbit_size: usize,
    pub expansion: Vec<TermEntry>,
    pub truncation_order: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermEntry {
    pub exponent: String,
    pub face_factor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalEntry {
    pub d: i64,
    pub c_v: i64,
    pub n_v: i64,
    pub delta: i64,
    pub g: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualEntry {
    pub d_hat: i64,
    pub c_hat_v: i64,
    pub n_hat_v: i64,
    pub admissible: bool,
    pub negative: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityEntry {
    pub name: String,
    pub statement: String,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityDoc {
    pub name: String,
    pub statement: String,
    pub left: i64,
    pub right: i64,
    pub satisfied: bool,
    pub applicable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HessianEntry {
    pub hessian: String,
    pub hessian_degree: u32,
    pub per_point: Vec<HessianPointEntry>,
    pub bezout_total: i64,
    pub inflection_tally: i64,
    pub branch_flex_tally: i64,
    pub nodes_and_cusps_only: bool,
    pub tally_matches_dual: Option<bool>,
    pub eqmain: Option<bool>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HessianPointEntry {
    pub point: usize,
    pub orbit_size: usize,
    pub intersection: u32,
    pub branch_flexes: Option<u32>,
    pub expected: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualCurveEntry {
    pub equation: Option<String>,
    pub failure: Option<String>,
    /// `(d, c_v, n_v)` of the computed dual curve.
    pub observed: Option<[i64; 3]>,
    pub matches_prediction: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleEntry {
    pub point: usize,
    pub delta_milnor: u32,
    pub delta_blowup: u32,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonexactEntry {
    pub numeric_branches: Vec<NumericEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericEntry {
    pub point: usize,
    pub r: Option<u32>,
    pub multiplicities: Option<Vec<u32>>,
    pub confident: bool,
    pub agrees_with_exact: Option<bool>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
