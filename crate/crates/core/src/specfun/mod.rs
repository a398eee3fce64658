//! Special functions: complex gamma, digamma/polygamma at real points,
//! Hurwitz zeta, exact Bernoulli and Euler numbers and polynomials, partial
//! Bell polynomials, and derivative towers of `Γ` and `1/Γ`.

pub mod bell;
pub mod bernoulli;
pub mod coprime;
pub mod derivs;
pub mod gamma;
pub mod trig;
pub mod zeta;

pub use bell::{bell_partial, bell_table, BellScalar};
pub use bernoulli::{
    bernoulli_number, bernoulli_poly, csc_series, csc_series_coefficients, euler_number,
    euler_poly, format_rational, glaisher_coefficients, special_values_table, springer_number,
    BernoulliEulerCache, SpecialValuesRow,
};
pub use coprime::{
    gamma_product_coprime, gamma_product_coprime_closed, sine_product_coprime,
    sine_product_coprime_closed,
};
pub use derivs::{bell_sums, gamma_derivs, polygamma_values, recip_gamma_derivs, DerivTower};
pub use gamma::{cgamma, rgamma};
pub use zeta::{digamma_rational, hurwitz_zeta, polygamma, EULER_GAMMA};
