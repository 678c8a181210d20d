//! Exact integer, modular and polynomial arithmetic shared by every other
//! module. Everything here is pure and reentrant.

pub mod hensel;
pub mod modpoly;
pub mod modular;
pub mod poly;
pub mod primes;

pub use hensel::hensel_lift_root;
pub use modpoly::{factor_mod_l, ModPoly};
pub use modular::{is_nth_power, pow_mod, Residue};
pub use poly::{resultant, IntPoly};
