//! Explicit Hermite-Padé approximation systems for the binomial functions
//! `(1-z)^{ω_k}`, exact verification of their structural identities, and
//! effective approximation certificates for `ξ = (a/b)^{1/n}`.

pub mod arith;
pub mod binomial;
pub mod bounds;
pub mod certify;
pub mod cli;
pub mod error;
pub mod interval;
pub mod pade;
pub mod wire;

pub use error::{Error, Result};
