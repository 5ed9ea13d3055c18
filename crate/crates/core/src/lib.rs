//! Exact verification of factorization identities for quantum-affine boundary
//! and bulk operators on q-oscillator Fock spaces.
//!
//! All arithmetic is over exact rationals: parameters are sampled at admissible
//! rational points and every identity is checked entry by entry on the part of a
//! truncated space where truncation provably does not interfere.

pub mod cli;
pub mod error;
pub mod exactq;
pub mod fock;
pub mod linalg;
pub mod operators;
pub mod par;
pub mod reps;
pub mod solvers;
pub mod verify;

pub use error::{Error, Result};
