#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod constants;
pub mod construct;
pub mod ecurve;
pub mod error;
pub mod exact;
pub mod families;
pub mod poly;
pub mod reduction;
pub mod search;

pub use error::{Error, Result, Stage};
pub use exact::{rat, Int, Rat};
pub use poly::{Poly, RatFunc, Var};
pub use reduction::{SolutionE5, SymData, SystemSolution};
