//! Projective Reed-Muller codes over GF(q).
//!
//! - [`gf`]: the field GF(p^e) with integer-encoded elements.
//! - [`projgeom`]: points and flats of P^m(F_q).
//! - [`homopoly`]: sparse homogeneous polynomials.
//! - [`prm`]: code parameters, generator matrices and brute-force oracles.
//! - [`separation`]: separating hyperplanes via flat chains, and the product
//!   polynomial that isolates a single point.
//! - [`sample`]: seeded random instances.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod gf;
pub mod homopoly;
pub mod linalg;
pub mod prm;
pub mod projgeom;
pub mod sample;
pub mod separation;

pub use gf::{Elem, Field, GfError};
pub use homopoly::{HomPoly, PolyError};
pub use prm::{CodeParams, GenMatrix, PrmError, WeightSearch};
pub use projgeom::{Flat, GeomError, ProjPoint, ProjectiveSpace};
pub use separation::{
    ContradictionReport, FlatChain, GapWitness, RegimeOutcome, SeparationError,
    SeparationInstance, Separator,
};
