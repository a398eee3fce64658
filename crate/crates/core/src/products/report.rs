use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Which formula produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodTag {
    CharGamma,
    CharSine,
    CharAtOne,
    CharAtOneSine,
    CharPartial,
    Yamasaki,
    GeneralGamma,
    GeneralTruncated,
    CyclotomicGamma,
    CyclotomicSine,
    CyclotomicPartial,
    RootsOfUnityGamma,
    RootsOfUnityPartial,
}

impl MethodTag {
    pub fn as_str(self) -> &'static str {
        match self {
            MethodTag::CharGamma => "char-gamma",
            MethodTag::CharSine => "char-sine",
            MethodTag::CharAtOne => "char-at-one",
            MethodTag::CharAtOneSine => "char-at-one-sine",
            MethodTag::CharPartial => "char-partial",
            MethodTag::Yamasaki => "yamasaki",
            MethodTag::GeneralGamma => "general-gamma",
            MethodTag::GeneralTruncated => "general-truncated",
            MethodTag::CyclotomicGamma => "cyclotomic-gamma",
            MethodTag::CyclotomicSine => "cyclotomic-sine",
            MethodTag::CyclotomicPartial => "cyclotomic-partial",
            MethodTag::RootsOfUnityGamma => "roots-of-unity-gamma",
            MethodTag::RootsOfUnityPartial => "roots-of-unity-partial",
        }
    }
}

impl fmt::Display for MethodTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A value from the requested method next to an independent reference value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    #[serde(with = "crate::complex_serde")]
    pub closed_form: Complex64,
    #[serde(with = "crate::complex_serde")]
    pub oracle: Complex64,
    pub oracle_terms: u64,
    pub abs_discrepancy: f64,
    pub method_tag: MethodTag,
}

impl EvalReport {
    pub fn new(closed_form: Complex64, oracle: Complex64, oracle_terms: u64, method_tag: MethodTag) -> Self {
        EvalReport {
            closed_form,
            oracle,
            oracle_terms,
            abs_discrepancy: (closed_form - oracle).norm(),
            method_tag,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serializes_with_kebab_tags() {
        let r = EvalReport::new(Complex64::new(1.0, 0.0), Complex64::new(1.0, 1e-3), 10, MethodTag::CharAtOneSine);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"method_tag\":\"char-at-one-sine\""));
        assert!(json.contains("\"closed_form\":{\"re\":1.0,\"im\":0.0}"));
        let back: EvalReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert!((r.abs_discrepancy - 1e-3).abs() < 1e-15);
    }

    #[test]
    fn display_matches_serde() {
        for tag in [MethodTag::CharGamma, MethodTag::CyclotomicPartial, MethodTag::RootsOfUnityGamma] {
            let json = serde_json::to_string(&tag).unwrap();
            assert_eq!(json, format!("\"{tag}\""));
        }
    }
}
