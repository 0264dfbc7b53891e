//! Computational algebra for self-conjugate-reciprocal irreducible monic
//! (SCRIM) polynomials over quadratic extension fields F_{q^2}.
//!
//! The crate builds deterministic towers F_p ⊂ F_{q^2} ⊂ F_{q^{2n}},
//! characterizes SCRIM polynomials through three equivalent criteria
//! (fixed-point, root-correspondence, order membership in D_n), counts them
//! by degree and by order, and enumerates them explicitly via the f_beta
//! root-product construction — cross-checked against a brute-force scan.

pub mod cosets;
pub mod field;
pub mod numutil;
pub mod poly;
pub mod scrim;

pub use field::{BaseField, FieldElement, FieldError, FieldSpec};
pub use poly::{ParseError, PolyError, Polynomial};
pub use scrim::{
    ClassifyReport, Config, CountResult, DnSet, Enumeration, ScrimError, ScrimRecord,
};
