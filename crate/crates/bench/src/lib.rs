//! Shared inputs for the kernel benchmarks.

use charprod_core::{enumerate_characters, Complex, DirichletCharacter};

/// Moduli used for the per-modulus sweeps.
pub const MODULI: [u64; 4] = [4, 7, 11, 23];

/// The first odd primitive character mod `q`.
pub fn odd_primitive(q: u64) -> DirichletCharacter {
    enumerate_characters(q)
        .expect("valid modulus")
        .into_iter()
        .find(|ch| ch.is_odd() && ch.conductor() == q)
        .expect("modulus has an odd primitive character")
}

/// Evaluation points inside the unit disc.
pub fn points() -> Vec<Complex> {
    vec![Complex::new(0.5, 0.0), Complex::new(-0.3, 0.4), Complex::new(0.9, -0.1)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_exist() {
        for q in MODULI {
            let ch = odd_primitive(q);
            assert_eq!(ch.modulus(), q);
            assert!(ch.is_odd());
        }
        assert!(points().iter().all(|z| z.norm() < 1.0));
    }
}
