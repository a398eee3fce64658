//! Closed-form evaluation of character-twisted infinite products, infinite
//! products of cyclotomic polynomials, and the multiple L-series values that
//! fall out of their Maclaurin expansions.
//!
//! Every closed form in this crate comes paired with an independent oracle
//! (truncated products, truncated generating functions, brute-force sums)
//! so the identities can be checked numerically; see [`verify`].

pub mod arith;
pub mod characters;
pub mod complex_serde;
pub mod error;
pub mod lseries;
pub mod oracle;
pub mod products;
pub mod specfun;
pub mod verify;

pub use arith::{PrimePower, Rational};
pub use characters::{
    enumerate_characters, CharacterClassification, CharacterGroup, DirichletCharacter, Parity,
    RootOfUnity,
};
pub use error::{Error, Result};
pub use lseries::{LSeriesValue, MethodTag as LSeriesMethod};
pub use num_complex::Complex64 as Complex;
pub use products::{EvalReport, MethodTag, PolyZ};
pub use specfun::DerivTower;
pub use verify::{CaseResult, Suite, VerifyReport};
