//! Canonical zeta generators in genus zero and genus one, computed exactly.

pub mod export;
pub mod falphabet;
pub mod freealg;
pub mod genusone;
pub mod genuszero;
pub mod linalg;
pub mod memo;
pub mod moulds;
pub mod mzvspace;
pub mod q;
pub mod reference;
pub mod selftest;
pub mod sl2recursion;

pub use freealg::{Alphabet, Series, Word};
pub use q::Q;
