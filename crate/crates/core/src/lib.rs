//! Exact-rational toolkit connecting small hyperdeterminants with elliptic
//! curves over the rationals.
//!
//! The crate implements, with no floating point anywhere:
//!
//! * Cayley's degree-4 hyperdeterminant of a 2×2×2 hypermatrix and the
//!   classical invariants S, T, Δ = S³ − 27T² of the binary quartic obtained
//!   by contracting one slot of a 2×2×2×2 hypermatrix ([`invariants`]).
//! * The Mordell–Weil chord-tangent group law and two-torsion extraction on
//!   elliptic curve models over Q ([`elliptic`]).
//! * The transformation chain between a fully-2-torsioned factored cubic,
//!   the symmetric `u²v² = 2euv − 2fv − 2gu + h` model, and the placement of
//!   its eight parameters on the corners of a cube so that the curve equation
//!   becomes Cayley's hyperdeterminant ([`bridge`]).
//! * Reduction of a pair of trilinear equations on a 2×2×2×2 integer
//!   hypermatrix to a quartic elliptic condition, with a bounded exact search
//!   for rational solutions ([`trilinear`]).
//!
//! All scalars are [`rational::Rational`] (arbitrary-precision, always in
//! lowest terms). The `hyperbridge` binary exposes every pipeline stage as a
//! subcommand with JSON output; see [`json`] for the wire formats.

pub mod bridge;
pub mod elliptic;
mod error;
pub mod hypermatrix;
pub mod invariants;
pub mod json;
pub mod rational;
pub mod selftest;
pub mod trilinear;

pub use error::Error;
