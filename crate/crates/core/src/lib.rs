//! Exact arithmetic for the loci of non-simple (1, d)-polarised abelian
//! surfaces: which exponent pairs (m, n) of complementary elliptic curves
//! can occur, how many components each pair contributes, the singular
//! relations cutting those components out of the Siegel upper half-space,
//! explicit period matrices on them, and brute-force verification of the
//! finite symplectic group facts the construction rests on.
//!
//! Everything arithmetic is exact (u64/i128 with overflow checks); floats
//! appear only in period matrices and carry stated tolerances.

pub mod arith;
pub mod cli;
pub mod error;
pub mod humbert;
pub mod locus;
pub mod periods;
pub mod sympmod;
pub mod wire;

pub use error::{Error, Result};
pub use humbert::{SingularRelation, XyPair};
pub use locus::{component_count, complements, Decomposition, LocusLabel};
pub use periods::{EllipticEmbedding, LatticeVector, PeriodMatrix};
