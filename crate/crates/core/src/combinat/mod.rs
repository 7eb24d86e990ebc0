//! Partitions, tableaux over the three alphabets, and Gelfand-Tsetlin,
//! King and orthogonal patterns.

mod letter;
mod partition;
pub(crate) mod pattern;
mod tableau;

pub use letter::Letter;
pub use partition::Partition;
pub use pattern::{
    king_support, shape_of_orthogonal, validate_gt, validate_king, validate_orthogonal, weight_pattern_a,
    weight_pattern_bc, GTPattern, KingPattern, OrthogonalPattern,
};
pub use tableau::{is_king_symplectic, is_semistandard, is_sundaram_orthogonal, weight_tableau, AlphabetKind, Tableau};
