//! Exact algebra for polynomial composites `T = K + X L[X]` over computable
//! field pairs `K ⊆ L`.
//!
//! The crate is `no_std` (with `alloc`). It provides exact arithmetic for
//! finite fields and rational function fields over `GF(p)`, dense
//! polynomials with factorization over finite fields, and decision
//! procedures for units, atoms, square-free and radical elements of `T`,
//! together with brute-force oracles that check them at small scale.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod composite;
pub mod error;
pub mod explorer;
pub mod extensions;
pub mod fields;
pub mod poly;
pub mod squarefree;
pub mod text;

pub use error::{Error, ErrorClass, Result};
