use std::fmt;

use thiserror::Error;

/// Why a Cayley table failed to define a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotAGroupReason {
    /// No two-sided unit exists.
    NoUnit,
    /// Some row or column is not a permutation; the witness is `(row_or_col, index, 0)`.
    NotLatin,
    /// `(x*y)*z != x*(y*z)` for the witness triple.
    NotAssociative,
    /// The witness element has no two-sided inverse.
    NoInverse,
}

impl fmt::Display for NotAGroupReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotAGroupReason::NoUnit => "no-unit",
            NotAGroupReason::NotLatin => "not-latin",
            NotAGroupReason::NotAssociative => "not-associative",
            NotAGroupReason::NoInverse => "no-inverse",
        })
    }
}

/// Which of the two operations of a digroup an error or witness refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Star,
    Circ,
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Op::Star => "*",
            Op::Circ => "o",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("table is empty")]
    EmptyTable,

    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("not a group ({reason}), witness {witness:?}")]
    NotAGroup {
        reason: NotAGroupReason,
        witness: [usize; 3],
    },

    #[error("identity of the {op} table is {found}, expected 0")]
    IdentityNotZero { op: Op, found: usize },

    #[error("operations have different orders: {star} vs {circ}")]
    OrderMismatch { star: usize, circ: usize },

    #[error("order {order} exceeds the configured cap {cap} for {what}")]
    OrderCapExceeded {
        order: usize,
        cap: usize,
        what: &'static str,
    },

    #[error("element {element} is out of range for carrier order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("subset is over a carrier of order {found}, expected {expected}")]
    CarrierMismatch { expected: usize, found: usize },

    #[error("subset is not a subgroup of the {op} group")]
    NotASubgroup { op: Op },

    #[error("subset is not a normal subgroup of the {op} group")]
    NotNormal { op: Op },

    #[error("subset is not closed under both operations and inverses")]
    NotASubBrace,

    #[error("digroup is not a skew brace, witness {witness:?}")]
    NotABrace { witness: [usize; 3] },

    #[error("subset is not an ideal")]
    NotAnIdeal,

    #[error("partition is not a congruence, witness {witness:?}")]
    NotACongruence { witness: [usize; 3] },

    #[error("map is not {0}")]
    BadMap(&'static str),

    #[error("not a ring: {0}")]
    NotARing(String),

    #[error("element {0} has no inverse for x o y = xy + x + y")]
    NotRadical(usize),

    #[error("bad theta-twist base: {0}")]
    BadSpec(&'static str),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
