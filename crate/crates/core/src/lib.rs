//! Exact computer algebra for unital Jordan algebras and the Lie theory
//! built on top of them: the Tits-Kantor-Koecher algebra and its universal
//! central extension, dominant J-spaces, Garland's projection formula,
//! Weyl and standard modules, and Chevalley-Eilenberg (relative) homology.
//!
//! All arithmetic is exact over the rationals.  Computations on the free
//! Jordan algebra go through finite graded truncations.

pub mod dominance;
pub mod error;
pub mod exactlin;
pub mod freejordan;
pub mod garland;
pub mod jordan;
pub mod oracles;
pub mod partitions;
pub mod pbw;
pub mod tkk;

pub use error::{Error, Result};
