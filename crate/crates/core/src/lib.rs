//! Exact-arithmetic toolkit for characteristic classes of singular
//! hypersurfaces in projective space.
//!
//! Everything is computed over the rationals with arbitrary precision; no
//! floating point appears anywhere. The pipeline goes from a homogeneous
//! polynomial to the Segre class of its singularity subscheme (via projective
//! degrees of the gradient map, computed with Grobner bases and saturation),
//! and from there to the weighted Chern-Mather class, the mu-class, the
//! Fulton and Chern-Schwartz-MacPherson classes and the Milnor class.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line front end live in the companion `cherncalc` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod chow;
pub mod constructible;
pub mod error;
pub mod groebner;
pub mod hypersurface;
pub mod parse;
pub mod poly;
pub mod rng;
pub mod segre;

pub use chow::{ChowClass, LineBundle};
pub use error::Error;
pub use groebner::{GroebnerBasis, GroebnerConfig, MonomialOrder};
pub use hypersurface::HypersurfaceReport;
pub use poly::{Ideal, Monomial, RatPoly};
pub use segre::{ProjectiveDegrees, SegreConfig};

/// Exact rational scalar used everywhere in this crate.
pub type Rat = num_rational::BigRational;
