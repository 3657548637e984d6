//! Exact computer algebra for the Mayr-Meyer ideal families.
//!
//! The crate provides a small sparse-polynomial kernel over the rationals or
//! a prime field, Buchberger's algorithm with cofactor lifting, ideal-level
//! operations (intersection, colon, saturation, elimination, dimension), the
//! factories for both Mayr-Meyer families along with their minimal primes
//! and components, and a verification harness that replays the
//! minimal-component decomposition at desk-scale parameters.

pub mod error;
pub mod files;
pub mod groebner;
pub mod ideal;
pub mod mayr_meyer;
pub mod ring;
pub mod verify;

pub use error::{AlgebraError, Result};
pub use groebner::{reduce, Config, DivisionResult, GroebnerBasis};
pub use ideal::{Certificate, Ideal, Primality};
pub use ring::{
    make_mm_ring, parse_poly, Field, Monomial, MonomialOrder, Polynomial, RingContext, Scalar,
};
