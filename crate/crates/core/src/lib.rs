//! Exact arithmetic for q-series invariants of three families of orbifold
//! log Calabi-Yau surfaces.
//!
//! The crate computes, in exact rational arithmetic throughout:
//!
//! - higher-genus log Gromov-Witten generating polynomials ([`loggw`]),
//! - genus-0 local Gromov-Witten invariants with an independent
//!   equivariant-mirror oracle ([`localgw`]),
//! - all-genus open Gromov-Witten generating functions with topological
//!   vertex oracles ([`opengw`]),
//! - refined BPS invariants and genus-0 Klemm-Pandharipande invariants
//!   with integrality certification ([`bps`]),
//! - motivic and numerical Donaldson-Thomas invariants of symmetric
//!   quivers via plethystic inversion ([`quiverdt`]).
//!
//! The families are the weighted projective plane `P(1,a,b)` with a
//! two-component anticanonical boundary and its two boundary blow-ups
//! ([`geometry`]). All generating functions live in the ring of Laurent
//! polynomials in fractional powers of `q` ([`qkernel::QExact`]) or its
//! fraction field ([`qkernel::QRatio`]); no floating point is used anywhere.

pub mod bps;
pub mod error;
pub mod geometry;
pub mod localgw;
pub mod loggw;
pub mod opengw;
pub mod partitions;
pub mod qkernel;
pub mod quiverdt;

pub use error::{Error, Result};
