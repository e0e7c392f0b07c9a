use alloc::string::String;

use thiserror::Error;

use crate::group::AxiomViolation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group order {0}")]
    InvalidOrder(usize),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{what} requires an odd prime, got {got}")]
    NotOddPrime { what: &'static str, got: u64 },
    #[error("group order {order} exceeds the cap of {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("element index {index} out of range for a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("objects belong to different groups")]
    ParentMismatch,
    #[error("{what} is only valid for parameter >= {min}, got {got}")]
    BelowValidityBound { what: &'static str, min: u64, got: u64 },
    #[error("closed form unavailable: {0}")]
    UnsupportedFamily(String),
    #[error("poset is not a lattice: elements {0} and {1} have no {2}")]
    NotALattice(usize, usize, &'static str),
    #[error("group axioms violated: {0}")]
    Axiom(AxiomViolation),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
