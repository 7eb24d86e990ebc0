//! Bender-Knuth involutions of types A, B and C on patterns and tableaux.

mod pattern;
mod tableau;

pub use pattern::{
    bk_a_pattern, bk_b, bk_c_generator, bk_c_pattern, bk_c_pattern_traced, bk_first_pattern, four_fold_composite,
    rect_pattern, BkCTrace,
};
pub use tableau::{
    bk_a_tableau, bk_b_tableau, bk_c_generator_tableau, bk_c_tableau, bk_c_tableau_traced, bk_first_tableau,
    BkCTableauTrace,
};
