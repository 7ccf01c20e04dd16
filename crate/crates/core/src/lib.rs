//! Exact construction, verification and classification of Kingdon algebras:
//! the alternative Clifford-like algebras of three-dimensional formed spaces,
//! which include the octonions, the split octonions and the alternative
//! exterior algebra, together with the Cayley-Dickson doubling process that
//! realizes all of them.
//!
//! All arithmetic is exact over the rationals.

pub mod algebra;
pub mod cayley_dickson;
pub mod error;
pub mod exact;
pub mod export;
pub mod identities;
pub mod kingdon;
pub mod sampling;
pub mod structure;
pub mod verdict;

pub use algebra::{
    associator, check_homomorphism, check_involution, commutator, mul, norm, trace, Algebra, AlgebraJson, Element,
    Involution, InvolutionKind,
};
pub use cayley_dickson::{double, tower, Tower};
pub use error::{Error, ParseScalarError, Result};
pub use exact::{Matrix, Scalar};
pub use kingdon::{build_kingdon, kingdon_norm, reduce_word, FormedSpace, KingdonAlgebra, VectorWord};
pub use structure::{classify, structure_report, IsoClass, Signature, StructureReport};
pub use verdict::{Checker, Verdict};
