//! Exact intersection-theory engine for the degree of the third secant
//! variety of a smooth genus-2 curve of degree `d >= 8` in `P^(d-2)`.
//!
//! The computation runs in four layers:
//!
//! * [`ring`]: exact rationals, the quotient rings `Q[T]/(T^3)` and
//!   `Q[T,h]/(T^3, h^(d-1))`, and truncated power series over them.
//! * [`grr`]: the cohomology of `C x Pic^3(C)`, Todd classes and the
//!   Grothendieck-Riemann-Roch pushforward giving `ch(H)` and `ch(G)`.
//! * [`porteous`]: Chern series of the bundles `E` and `F` on
//!   `Pic^3(C) x P^(d-2)` and the Porteous class `x1`, evaluated three ways.
//! * [`degree`]: the degree pairing, the final secant degree and the
//!   Berzolari cross-check.

pub mod degree;
pub mod error;
pub mod grr;
pub mod porteous;
pub mod ring;

pub use degree::{berzolari, binomial, secant3_degree, DegreeReport};
pub use error::{EngineError, Result};
pub use grr::{BundleData, UpstreamClass};
pub use porteous::{Method, PorteousMatrix, PorteousResult, TwistedBundle};
pub use ring::{AmbientClass, ChernSeries, Rational, RingElement, ThetaPoly};

/// Smallest curve degree the construction supports.
pub const MIN_DEGREE: u32 = 8;
