//! Exact computations in the sector of the Euclidean building for
//! SL3(Q((t^-1))), as acted on by SL3(Z[t]).
//!
//! The crate models the standard apartment and sector through normalized
//! lattice exponents, computes cell stabilizers as degree-bound profiles,
//! builds the piecewise-linear Morse relabeling of the distance height
//! (with the flat edges subdivided), and evaluates the quotient-link
//! cocycles against explicit chamber cycles, ending in the triangular
//! pairing matrix that certifies the cycles' linear independence.
//!
//! All arithmetic is exact (big rationals); there is no floating point.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod apartment;
pub mod cocycle;
pub mod links;
pub mod matrix;
pub mod morse;
pub mod pairing;
pub mod poly;
pub mod stabilizer;

pub use apartment::{ApartmentVertex, BoundaryClass, Cell, CellKind, Node, Region, SectorVertex, Window, WindowError};
pub use matrix::{Mat3, Unipotent, UnipotentModN};
pub use morse::{HeightKey, MorseTable};
pub use poly::{Degree, Poly, Rat};
pub use stabilizer::StabilizerProfile;
