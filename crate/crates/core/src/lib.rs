//! Exact computation of resolution invariants and weighted blow-ups.
//!
//! The crate is `no_std` and only needs an allocator.

#![no_std]

extern crate alloc;

pub mod blowup;
pub mod chart;
pub mod contact;
pub mod derivations;
pub mod driver;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod invariants;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod rat;

pub use error::{Error, Result};
pub use ideal::Ideal;
pub use parse::parse_poly;
pub use poly::{Monomial, MonomialOrder, Polynomial, Ring};
pub use rat::Rat;
