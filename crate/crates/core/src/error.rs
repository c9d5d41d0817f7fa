use thiserror::Error;

use crate::ring::RingElement;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("additive group needs at least one cyclic factor")]
    EmptyShape,
    #[error("modulus #{index} is {value}, every modulus must be at least 2")]
    InvalidModulus { index: usize, value: u64 },
    #[error("order {order} exceeds the limit of {limit}")]
    OrderOverflow { order: u64, limit: u64 },
    #[error("malformed structure-constant table: {0}")]
    MalformedTable(String),
    #[error("structure constant c{i}{j} is not annihilated by the moduli of e{i} and e{j}", i = .i + 1, j = .j + 1)]
    WellDefinednessViolation { i: usize, j: usize },
    #[error(
        "associativity fails on generators (e{i}e{j})e{l} = {left} but e{i}(e{j}e{l}) = {right}",
        i = .i + 1, j = .j + 1, l = .l + 1
    )]
    AssociativityViolation {
        i: usize,
        j: usize,
        l: usize,
        left: RingElement,
        right: RingElement,
    },
    #[error("element {found} is not in the ring: expected {expected} coordinates, each below its modulus")]
    ShapeMismatch { expected: usize, found: RingElement },
    #[error("syntax error at line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unknown catalog ring `{0}`")]
    UnknownCatalogName(String),
    #[error("bad catalog parameters for `{name}`: {message}")]
    BadCatalogParams { name: String, message: String },
    #[error("cannot parse element `{0}`; expected comma-separated coordinates such as 1,0")]
    BadElementSyntax(String),
    #[error("the ring is commutative")]
    CommutativeRing,
    #[error("the target commutator value must be non-zero")]
    ZeroR,
    #[error("isoclinism search gate: {what} has order {order}, limit is {limit}")]
    SearchGate {
        what: &'static str,
        order: usize,
        limit: usize,
    },
    #[error("isoclinism search gave up after {nodes} nodes")]
    SearchBudgetExceeded { nodes: u64 },
    #[error("isoclinism witness is invalid")]
    WitnessInvalid,
}
