use std::fmt;

use thiserror::Error;

/// Which direction of a multiplication table failed the Latin-square check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Row => write!(f, "row"),
            Axis::Column => write!(f, "column"),
        }
    }
}

/// Errors produced by group construction, coset decomposition, witness
/// building, and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order must be at least 1")]
    EmptyTable,

    #[error("table entry [{row}][{col}] = {value} is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("multiplication table is not a Latin square: {axis} {index} repeats value {value}")]
    NotLatinSquare {
        axis: Axis,
        index: usize,
        value: usize,
    },

    #[error("multiplication table has no two-sided identity element")]
    NoIdentity,

    #[error("element {element} has no two-sided inverse")]
    MissingInverse { element: usize },

    #[error("multiplication table is not associative at ({a}, {b}, {c}): ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("unknown group family {name:?}")]
    UnknownFamily { name: String },

    #[error("invalid parameters for {family}: {reason}")]
    ParamOutOfRange {
        family: &'static str,
        reason: String,
    },

    #[error("cannot parse group expression {input:?}: {reason}")]
    ParseSpec { input: String, reason: String },

    #[error("cannot parse {what} at line {line}: {reason}")]
    ParseText {
        what: &'static str,
        line: usize,
        reason: String,
    },

    #[error("element index {index} is out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("subgroup does not contain the identity element")]
    MissingIdentity,

    #[error("set is not closed under the group product: {a} * {b} = {product} is not a member")]
    NotClosed { a: usize, b: usize, product: usize },

    #[error("subgroup is not normal: {g} * {h} * {g}^-1 = {conjugate} lies outside the subgroup")]
    NotNormal {
        g: usize,
        h: usize,
        conjugate: usize,
    },

    #[error("subgroup must be proper and non-trivial (1 < |H| < |G|)")]
    TrivialOrFull,

    #[error("group order {order} exceeds the subgroup enumeration bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },

    #[error("tau={tau} must be even for this construction")]
    TauOdd { tau: usize },

    #[error("tau={tau} must be odd for this construction")]
    TauEven { tau: usize },

    #[error("tau={tau} out of range: 1 <= tau <= |H| = {subgroup_order}")]
    TauOutOfRange { tau: usize, subgroup_order: usize },

    #[error("kappa={kappa} out of range: 0 <= kappa <= |H|-1 = {max}")]
    KappaOutOfRange { kappa: usize, max: usize },

    #[error("gcd(2,|H|-1)=2 does not divide kappa={kappa}")]
    GcdViolation { kappa: usize },

    #[error("not a connection set: {reason}")]
    NotAConnectionSet { reason: String },

    #[error("not a regular-set witness: {reason}")]
    NotAWitness { reason: String },

    #[error("invalid certificate: {reason}")]
    InvalidCertificate { reason: String },

    #[error("connection set Y intersects H (shared element {element})")]
    YIntersectsH { element: usize },

    #[error("search space too large: {orbits} inversion-orbits exceeds the bound {bound}")]
    SearchSpaceTooLarge { orbits: usize, bound: usize },

    #[error("internal defect: {context}")]
    InternalDefect { context: String },
}

pub type Result<T> = std::result::Result<T, Error>;
