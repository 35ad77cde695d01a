use thiserror::Error;

use crate::hyp::Hyp;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the crate, from rejecting a non-finite
/// scalar up to document validation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value {value} for {place}")]
    NonFinite { place: &'static str, value: f64 },

    #[error("{left} and {right} are incomparable under the componentwise order")]
    Incomparable { left: Hyp, right: Hyp },

    #[error("memberships {left} and {right} at point {index} are incomparable (strict mode)")]
    IncomparableAt { index: usize, left: Hyp, right: Hyp },

    #[error("memberships {left} (left point {left_index}) and {right} (right point {right_index}) are incomparable (strict mode)")]
    IncomparablePair {
        left_index: usize,
        right_index: usize,
        left: Hyp,
        right: Hyp,
    },

    #[error("interval endpoints are not ordered: {lo} must {} {hi}", if *.strict { "strictly precede" } else { "precede" })]
    IntervalOrder { lo: Hyp, hi: Hyp, strict: bool },

    #[error("universe must contain at least one point")]
    EmptyUniverse,

    #[error("universe dimension must be at least 1")]
    ZeroDimension,

    #[error("point {index} has {got} coordinates, expected {expected}")]
    PointDimension {
        index: usize,
        expected: usize,
        got: usize,
    },

    #[error("points {first} and {second} are identical")]
    DuplicatePoint { first: usize, second: usize },

    #[error("universe has {points} points but {labels} labels")]
    LabelCount { points: usize, labels: usize },

    #[error("universe has {points} points but {values} membership values")]
    ValueCount { points: usize, values: usize },

    #[error("membership {value} at point {index} leaves [0,1] in the {component} component")]
    MembershipRange {
        index: usize,
        value: Hyp,
        component: &'static str,
    },

    #[error("operands live on different universes")]
    UniverseMismatch,

    #[error("algebraic sum {sum} at point {index} exceeds 1")]
    SumRange { index: usize, sum: Hyp },

    #[error("alpha {alpha} must have both components in (0,1]")]
    AlphaRange { alpha: Hyp },

    #[error("epsilon {epsilon} must have both components > 0")]
    EpsilonRange { epsilon: Hyp },

    #[error("operation needs dimension >= 2, universe has dimension {dim}")]
    NeedsDim2 { dim: usize },

    #[error("axis {axis} out of range for dimension {dim}")]
    AxisRange { axis: usize, dim: usize },

    #[error("enumeration budget exceeded: {points} points, {levels} levels (max 5 points, 4 levels)")]
    EnumerationBudget { points: usize, levels: usize },

    #[error("cannot parse {input:?} as a hyperbolic number: {reason}")]
    ParseNumber { input: String, reason: String },

    #[error("document parse error at line {line}, column {column}: {message}")]
    DocumentParse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unsupported document version {got} (expected 1)")]
    DocumentVersion { got: u64 },

    #[error("set {name:?}: {source}")]
    SetValidation {
        name: String,
        #[source]
        source: Box<Error>,
    },

    #[error("no set named {name:?} in the document")]
    UnknownSet { name: String },

    #[error("unknown property suite {name:?}")]
    UnknownSuite { name: String },

    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },
}
