//! Independent cross-checks: alternant formulas for the type B and C Weyl
//! characters, and detropicalized Bender-Knuth maps.

mod character;
mod detrop;

pub use character::{character_b, character_c};
pub use detrop::{detrop_bk_a, detrop_bk_c, tropical_limit_agrees, RationalPattern};
