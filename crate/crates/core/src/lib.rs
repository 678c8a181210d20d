//! Modular-method sieve for twisted Fermat equations a·x^n + b·y^n + c·z^n = 0.
//!
//! The library mechanizes the finite computations behind the modular
//! approach to these equations: Frey curves and their trace sets at
//! auxiliary primes, norm-congruence elimination against newform
//! eigenvalue data (mod l and mod 9), strong-irreducibility certificates
//! for mod-3 representations, Hensel-lifted deformation-ring checks,
//! p-adic local solvability certificates, and the comparison of mod-3
//! with mod-9 trace data that shows where the mod-3 method alone stalls.
//!
//! Everything is exact integer arithmetic; scans over auxiliary primes
//! run data-parallel under the `parallel` feature (on by default) with a
//! sequential fallback, and results are deterministic either way.

pub mod arith;
pub mod error;
pub mod scan;

pub mod elliptic;
pub mod frey;
pub mod kraus;
pub mod newforms;

pub use error::{Error, Result};
