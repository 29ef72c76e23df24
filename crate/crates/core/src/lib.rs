//! Hereditarily finite ZF sets as executable values.
//!
//! Sets are canonical and hash-consed ([`HFSet`]), so extensional equality is
//! structural. On top of the kernel sit a carrier-relative relational
//! calculus, function evaluation and λ-abstraction, a backward-chaining
//! discharger for relation/function side conditions, the canonical
//! constructions (Booleans, von Neumann naturals, integers, rationals,
//! coproducts, options), isomorphism machinery and bridges to machine values.

pub mod bridges;
pub mod canon;
pub mod error;
pub mod funcs;
pub mod iso;
pub mod kernel;
pub mod obligations;
pub mod relcalc;

pub use error::{Error, Result, Side};
pub use kernel::{HFSet, Limits};
