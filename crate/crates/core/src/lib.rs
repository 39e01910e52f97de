//! Combinatorial classification data for affine embeddings of a connected
//! reductive group.
//!
//! The group is encoded by a root datum on a fixed maximal torus; embeddings
//! are encoded by strongly convex cones of one-parameter subgroups in the
//! cocharacter lattice. The crate provides:
//!
//! * exact integer linear algebra on the (co)character lattices ([`lattice`]),
//! * root data, Weyl groups, parabolic types and dominant representatives
//!   ([`rootdata`]),
//! * exact rational polyhedral cones with dual descriptions and Hilbert bases
//!   ([`cones`]),
//! * torus states and their numerical functions ([`states`]),
//! * the classification layer itself: validation, weight monoids,
//!   biequivariance checks, resolutions, morphisms and slice complexes
//!   ([`embeddings`]),
//! * brute-force oracles and a deterministic self-test suite ([`verify`],
//!   [`selftest`]).
//!
//! All arithmetic is arbitrary-precision integer (or exact rational in the
//! oracles); there is no floating point anywhere.

pub mod cones;
pub mod embeddings;
mod error;
pub mod lattice;
mod linalg;
pub mod rootdata;

pub mod states;


pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
