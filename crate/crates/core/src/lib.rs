//! Exact computation in free two-step nilpotent groups `N_n` and their
//! automorphism groups.
//!
//! Elements are kept in the normal form
//! `x1^a1 * ... * xn^an * prod_{i<j} [xi,xj]^cij` with `[a,b] = a^-1 b^-1 a b`.
//! Automorphisms are stored by generator images. The abelianized picture lives
//! in [`zlinalg`] and [`involutions`]; IA-stabilizers and triplet decoding live
//! in [`iastruct`]. [`verify`] reruns every structural check on random inputs.

pub mod autgroup;
pub mod error;
pub mod iastruct;
pub mod involutions;
pub mod nilcore;
pub mod report;
pub mod sampling;
pub mod seeding;
pub mod verify;
pub mod wordlang;
pub mod zlinalg;

pub use autgroup::{Automorphism, InvolutionKind};
pub use error::{Error, Result};
pub use iastruct::{IASplit, PMClass, Triplet};
pub use involutions::{InvolutionCanonicalForm, PlusMinusPair, ProbeResult};
pub use nilcore::{Element, GeneratorWord, Letter};
pub use report::{CheckResult, CheckStatus, VerificationReport};
pub use verify::{Mutant, VerifyConfig};
pub use zlinalg::{IntMatrix, LatticeBasis, SmithDecomposition};
