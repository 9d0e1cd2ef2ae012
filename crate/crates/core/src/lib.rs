//! Exact-arithmetic machinery for the classical irrationality proofs of π
//! and e: rational interval enclosures, the Niven polynomial, symbolic
//! integration of polynomial × sin(πx), and contradiction certificates for
//! rational candidates.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod numbers;
pub mod pi_engine;
pub mod polynomials;
pub mod series;
pub mod trigpoly;
pub mod witness;

pub use error::{Error, Result};
