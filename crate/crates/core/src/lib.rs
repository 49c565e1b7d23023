//! Finite-field workbench for quasi-cyclic, double-circulant and
//! four-circulant codes, and the maps that turn them into additive cyclic
//! and cyclic codes.
//!
//! The crate is `no_std` and only needs `alloc`. Field elements are handled
//! through their canonical integer encoding (`u32` in `[0, q)`); [`Field`]
//! owns the arithmetic tables and every vector in this crate is a slice of
//! encodings interpreted in some field.
//!
//! - [`galois`]: prime-power fields, explicit extension towers, modular orders.
//! - [`rings`]: the quotient ring `F_q[x]/(x^m - 1)` and Artin-prime machinery.
//! - [`codes`]: linear and additive codes, structural predicates, exact distance.
//! - [`constructions`]: circulant-based codes, self-dual searches, random QC codes.
//! - [`transforms`]: field-extension and two-dimensional maps and the end-to-end pipelines.
//! - [`bounds`]: q-ary entropy, its inverse and the rate/distance targets.
#![no_std]

extern crate alloc;

pub mod arith;
pub mod bounds;
pub mod codes;
pub mod constructions;
mod error;
pub mod galois;
mod poly;
pub mod rings;
pub mod transforms;

pub use codes::{AdditiveCode, LinearCode, DEFAULT_BUDGET};
pub use error::{Error, Result};
pub use galois::{ExtensionTower, Field, FieldElement};
pub use rings::{Ring, RingElement};
