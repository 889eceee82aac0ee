//! Exact computations for quasireductive supergroups: root data with a
//! polarization, Laurent characters, Clifford supermodules over the odd
//! Cartan part, and the super Weyl character formula.

pub mod characters;
pub mod clifford;
pub mod field;
pub mod laurent;
pub mod rootdata;

pub use characters::{
    even_character, gl_super_character, maximal_weight_check, odd_factor, schur, super_character,
    super_character_with, CharacterError, CharacterOptions, SuperCharacterReport,
};
pub use clifford::{classify, construct_rep, CliffordClassification, CliffordError, QuadraticSpace};
pub use field::{FieldError, FieldMode};
pub use laurent::{CharacterPoly, HalfWeight, LaurentError};
pub use rootdata::{polarize, standard_polarized, GammaFunctional, GroupSpec, PolarizedDatum, RootDatum};
