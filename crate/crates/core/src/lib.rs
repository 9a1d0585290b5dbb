//! Exact E₆ state sum invariants of lens spaces.
//!
//! The invariant of L(p,q) is computed two ways: as w·ρ(A)₁₁ for the lens
//! matrix A = (−q b; p −a), where ρ is a 10-dimensional representation of
//! SL(2,ℤ) over the cyclotomic field Q(ζ₂₄), and from a closed-form table
//! indexed by p mod 12 and q mod gcd(p,12). All arithmetic is exact.
//!
//! Modules, bottom-up:
//! - [`cyclotomic`]: the field Q(ζ), quantum integers, embeddings and serialization.
//! - [`modular`]: SL(2,ℤ) matrices, S/T words, cofactors, Γ(12) and its generator table.
//! - [`representation`]: ρ(S), ρ(T), evaluation on words, relation and kernel checks.
//! - [`invariant`]: the two formulas and the verification sweeps.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod invariant;
pub mod modular;
pub mod report;
pub mod representation;

pub use cyclotomic::{quantum_integer, Cyclotomic};
pub use error::{Error, Result};
pub use invariant::LensSpace;
pub use modular::{GeneratorWord, UnimodularMatrix};
pub use representation::RepMatrix;
