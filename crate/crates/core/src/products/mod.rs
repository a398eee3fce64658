//! Closed forms for the character-twisted products `Π (1 − χ(k)z/k)`, the
//! gamma-quotient lemma behind them, and products of cyclotomic polynomials,
//! each with a truncated-product reference.

pub mod character;
pub mod cyclotomic;
pub mod report;

pub use character::{
    char_product, char_product_at_one, char_product_at_one_sine, char_product_gamma,
    char_product_partial, char_product_sine, char_product_sine_any, evaluate_char_product,
    general_product_gamma, yamasaki_product, ProductMethod, PARTIAL_TERMS_PER_MODULUS,
};
pub use cyclotomic::{
    cyclotomic, cyclotomic_product_gamma, cyclotomic_product_partial, cyclotomic_product_sine,
    delta_m, evaluate_cyclotomic_product, roots_of_unity_partial, roots_of_unity_product,
    roots_of_unity_product_from_two, CyclotomicMethod, PolyZ, CYCLOTOMIC_FACTORS,
};
pub use report::{EvalReport, MethodTag};
