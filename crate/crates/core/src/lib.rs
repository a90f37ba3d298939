pub mod algebra;
pub mod corpus;
pub mod cylinders;
pub mod error;
pub mod format;
pub mod fox;
pub mod homology;
pub mod invariants;
pub mod report;

pub use cylinders::FreeEndomorphism;
pub use error::{Error, Result};
pub use fox::{AdmissiblePresentation, GeneratorClass, GeneratorRef, Letter, Word};
pub use homology::{HomologyAssignment, MonodromyMatrix};
pub use invariants::{
    AlexanderPolynomial, FiberednessReport, InvariantReport, JacobianBlocks, NormalizedLaurent,
    Verdict,
};
