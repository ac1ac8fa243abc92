//! Exact algebra for Procesi bundle fibers at torus-fixed points of the
//! Hilbert scheme of points in the plane.
//!
//! The crate models the bigraded Frobenius characteristic of a fiber as a
//! transformed Macdonald polynomial and checks the core-induction
//! decompositions of those fibers under cyclic and binary dihedral subgroups
//! of `SL_2`. Everything is exact: big integers, Laurent polynomials in
//! `q, t`, rational functions in `q`, and cyclotomic integers.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod characters;
pub mod exactnum;
pub mod macdonald;
pub mod partitions;
pub mod rootlattice;
pub mod symfunc;
pub mod verify;

pub use exactnum::{CycInt, IntPoly, LaurentQT, QPoly, RationalQ};
pub use partitions::Partition;
pub use symfunc::{Basis, SymFunc};

use alloc::string::String;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("exact division left a nonzero remainder")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid partition text {0:?}")]
    ParsePartition(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("partition {0} is not symmetric")]
    NotSymmetric(Partition),
    #[error("number of {0}-cycles must be even, got {1}")]
    OddCycleCount(usize, usize),
    #[error("{what} = {value} exceeds the configured bound {bound}")]
    TooLarge {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("expected an integer, got a non-integral value in {0}")]
    NotIntegral(&'static str),
    #[error("weight reduction failed: {0}")]
    WeightReduction(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
