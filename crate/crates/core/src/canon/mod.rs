//! Booleans, naturals, integers, rationals, coproducts and options built as
//! canonical sets.

mod boolean;
mod int;
mod nat;
mod rat;
mod sum;

pub use boolean::*;
pub use int::*;
pub use nat::*;
pub use rat::*;
pub use sum::*;
