//! Exact arithmetic tools around `a^n + b^n = c^n`.
//!
//! - [`integer`]: gcds, primality, prime powers, integer roots.
//! - [`decomposition`]: the cofactors of `a^n + b^n` and `c^n - a^n`, parity rules.
//! - [`sieve`]: candidate classification, counting, censuses and the printed tables.
//! - [`extensions`]: negative exponents, the radical equation, rational normalisation.
//! - [`gaussian`], [`quaternion`]: the equation over Gaussian integers and integer quaternions.
//! - [`identities`]: contrast identities that do have solutions.
//! - [`cli`]: the `fermat` command.

pub mod cli;
pub mod decomposition;
pub mod error;
pub mod extensions;
pub mod gaussian;
pub mod identities;
pub mod integer;
pub mod quaternion;
pub mod sieve;

pub use error::{Error, Result};
