//! Dirichlet characters modulo `q`.
//!
//! The unit group `(ℤ/qℤ)*` is split by the Chinese remainder theorem into
//! its prime-power parts. Each odd prime power contributes one cyclic
//! generator (the least primitive root, lifted mod `p²` when needed), `4`
//! contributes `−1`, and `2^k` for `k ≥ 3` contributes `−1` and `5`. Every
//! local generator is lifted to a residue mod `q` that is `1` on the other
//! components.
//!
//! A character is fixed by exponents `aᵢ ∈ [0, ordᵢ)` with
//! `χ(gᵢ) = e^{2πi·aᵢ/ordᵢ}`. Values are kept as exact [`RootOfUnity`] tags;
//! they become floating point only through [`DirichletCharacter::evaluate`].
//!
//! Characters are enumerated in lexicographic order of their exponent
//! vectors; the principal character is always index `0`. The textual id of a
//! character is `"q.N"` with `N` that index. The aliases `chi3`, `chi-4` and
//! `chi6` name the nonprincipal characters mod 3, 4 and 6.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::arith::{self, gcd, lcm, pow_mod, Rational};
use crate::error::{invalid, Error, Result};

/// `e^{2πi·exp/order}` with `gcd(exp, order) = 1` (order 1 means the value 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootOfUnity {
    pub order: u64,
    pub exp: u64,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { order: 1, exp: 0 };

    pub fn new(order: u64, exp: u64) -> Self {
        assert!(order >= 1, "root of unity needs a positive order");
        let exp = exp % order;
        let g = gcd(exp, order);
        if exp == 0 {
            return Self::ONE;
        }
        RootOfUnity {
            order: order / g,
            exp: exp / g,
        }
    }


    pub fn pow(self, e: u64) -> Self {
        Self::new(self.order, ((self.exp as u128 * e as u128) % self.order as u128) as u64)
    }

    pub fn conj(self) -> Self {
        Self::new(self.order, self.order - self.exp)
    }

    pub fn is_real(self) -> bool {
        self.order <= 2
    }

    /// Angle `2π·exp/order` split exactly into a quadrant and a remainder in
    /// `[−π/4, π/4]`, so conjugate and negated tags give exactly conjugate
    /// and negated values.
    pub fn to_complex(self) -> Complex64 {
        let o = self.order as i128;
        let e4 = 4 * self.exp as i128;
        let quadrant = (2 * e4 + o).div_euclid(2 * o);
        let rem = e4 - quadrant * o;
        let (s, c) = if 2 * rem.abs() == o {
            (FRAC_1_SQRT_2, FRAC_1_SQRT_2)
        } else {
            (PI * rem.abs() as f64 / (2 * o) as f64).sin_cos()
        };
        let s = if rem < 0 { -s } else { s };
        match quadrant.rem_euclid(4) {
            0 => Complex64::new(c, s),
            1 => Complex64::new(-s, c),
            2 => Complex64::new(-c, -s),
            _ => Complex64::new(s, -c),
        }
    }
}

impl std::ops::Mul for RootOfUnity {
    type Output = Self;

    fn mul(self, other: Self) -> Self {
        let order = lcm(self.order, other.order);
        let exp = self.exp * (order / self.order) + other.exp * (order / other.order);
        Self::new(order, exp)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.order, self.exp) {
            (1, _) => write!(f, "1"),
            (2, _) => write!(f, "-1"),
            (4, 1) => write!(f, "i"),
            (4, 3) => write!(f, "-i"),
            (n, k) => write!(f, "e({k}/{n})"),
        }
    }
}

/// Cyclic decomposition of `(ℤ/qℤ)*` with a discrete-logarithm table.
#[derive(Debug)]
pub struct UnitGroup {
    modulus: u64,
    generators: Vec<u64>,
    orders: Vec<u64>,
    /// Mixed-radix stride of each generator's exponent in a log index.
    strides: Vec<u64>,
    /// `dlog[u]` is the packed exponent vector of unit `u`, or `u64::MAX`.
    dlog: Vec<u64>,
}

impl UnitGroup {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(invalid(format!("modulus must be >= 2, got {q}")));
        }
        let mut generators = Vec::new();
        let mut orders = Vec::new();
        for (p, e) in arith::factorize(q) {
            let pe = p.pow(e);
            let local: Vec<(u64, u64)> = if p == 2 {
                match e {
                    1 => vec![],
                    2 => vec![(3, 2)],
                    _ => vec![(pe - 1, 2), (5, pe / 4)],
                }
            } else {
                vec![(primitive_root_prime_power(p, e), pe / p * (p - 1))]
            };
            for (g, ord) in local {
                generators.push(crt_lift(g, pe, q));
                orders.push(ord);
            }
        }
        let mut strides = vec![1u64; orders.len()];
        for i in (0..orders.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * orders[i + 1];
        }

        let mut dlog = vec![u64::MAX; q as usize];
        let mut elems: Vec<(u64, u64)> = vec![(1 % q, 0)];
        for i in 0..generators.len() {
            let mut next = Vec::with_capacity(elems.len() * orders[i] as usize);
            for &(u, idx) in &elems {
                let mut x = u;
                for e in 0..orders[i] {
                    next.push((x, idx + e * strides[i]));
                    x = ((x as u128 * generators[i] as u128) % q as u128) as u64;
                }
            }
            elems = next;
        }
        for (u, idx) in elems {
            dlog[u as usize] = idx;
        }
        // q = 2: the only unit is 1 and the list above already holds it.
        Ok(UnitGroup {
            modulus: q,
            generators,
            orders,
            strides,
            dlog,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Group order `φ(q)`.
    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    /// Exponent vector of the unit `k mod q`, if it is a unit.
    pub fn log(&self, k: i64) -> Option<Vec<u64>> {
        let idx = self.dlog[k.rem_euclid(self.modulus as i64) as usize];
        if idx == u64::MAX {
            return None;
        }
        Some(
            self.orders
                .iter()
                .zip(&self.strides)
                .map(|(&ord, &stride)| (idx / stride) % ord)
                .collect(),
        )
    }

    /// Exponent vector of the character with canonical index `index`.
    fn exponents_of_index(&self, mut index: u64) -> Vec<u64> {
        let mut out = vec![0; self.orders.len()];
        for i in (0..self.orders.len()).rev() {
            out[i] = index % self.orders[i];
            index /= self.orders[i];
        }
        out
    }

    fn index_of_exponents(&self, exps: &[u64]) -> u64 {
        exps.iter().zip(&self.strides).map(|(a, s)| a * s).sum()
    }
}

fn primitive_root_prime_power(p: u64, e: u32) -> u64 {
    let prime_factors: Vec<u64> = arith::factorize(p - 1).into_iter().map(|(r, _)| r).collect();
    let g = (2..p)
        .find(|&g| prime_factors.iter().all(|&r| pow_mod(g, (p - 1) / r, p) != 1))
        .unwrap_or(1);
    if e >= 2 && pow_mod(g, p - 1, p * p) == 1 {
        g + p
    } else {
        g
    }
}

/// The residue mod `q` congruent to `g` mod `pe` and to 1 mod `q / pe`.
fn crt_lift(g: u64, pe: u64, q: u64) -> u64 {
    let rest = q / pe;
    if rest == 1 {
        return g % q;
    }
    // x = 1 + rest·t with rest·t ≡ g − 1 (mod pe)
    let inv = arith::inv_mod(rest % pe, pe).expect("coprime CRT components");
    let t = ((g + pe - 1) % pe) as u128 * inv as u128 % pe as u128;
    ((1 + rest as u128 * t) % q as u128) as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterClassification {
    pub is_principal: bool,
    pub is_primitive: bool,
    pub conductor: u64,
    pub parity: Parity,
    pub is_real: bool,
}

/// A Dirichlet character mod `q`, immutable after construction.
#[derive(Debug, Clone)]
pub struct DirichletCharacter {
    group: Arc<UnitGroup>,
    index: u64,
    exponents: Vec<u64>,
    values: Vec<Option<RootOfUnity>>,
    classification: CharacterClassification,
}

impl DirichletCharacter {
    fn build(group: Arc<UnitGroup>, exponents: Vec<u64>) -> Self {
        let q = group.modulus;
        let index = group.index_of_exponents(&exponents);
        let exponent = group.orders.iter().fold(1, |acc, &o| lcm(acc, o));
        let values: Vec<Option<RootOfUnity>> = (0..q as i64)
            .map(|k| {
                group.log(k).map(|logs| {
                    let s = logs
                        .iter()
                        .zip(&exponents)
                        .zip(&group.orders)
                        .fold(0u128, |acc, ((&e, &a), &ord)| {
                            (acc + e as u128 * a as u128 * (exponent / ord) as u128)
                                % exponent as u128
                        });
                    RootOfUnity::new(exponent, s as u64)
                })
            })
            .collect();
        let is_principal = exponents.iter().all(|&a| a == 0);
        let is_real = exponents
            .iter()
            .zip(&group.orders)
            .all(|(&a, &ord)| (2 * a) % ord == 0);
        let parity = match values[(q - 1) as usize] {
            Some(v) if v.order == 2 => Parity::Odd,
            _ => Parity::Even,
        };
        let conductor = conductor_by_divisors(q, &values);
        DirichletCharacter {
            group,
            index,
            exponents,
            values,
            classification: CharacterClassification {
                is_principal,
                is_primitive: conductor == q,
                conductor,
                parity,
                is_real,
            },
        }
    }

    pub fn principal(q: u64) -> Result<Self> {
        CharacterGroup::new(q)?.character(0)
    }

    /// Character mod `q` with the given generator exponents.
    pub fn from_exponents(q: u64, exponents: &[u64]) -> Result<Self> {
        let group = CharacterGroup::new(q)?;
        group.from_exponents(exponents)
    }

    /// Parse `"q.N"` or one of the aliases `chi3`, `chi-4`, `chi6`.
    pub fn parse(id: &str) -> Result<Self> {
        let (q, n) = match id {
            "chi3" => (3, 1),
            "chi-4" => (4, 1),
            "chi6" => (6, 1),
            _ => {
                let (q, n) = id
                    .split_once('.')
                    .ok_or_else(|| Error::UnknownCharacter(id.to_string()))?;
                let q: u64 = q.parse().map_err(|_| Error::UnknownCharacter(id.to_string()))?;
                let n: u64 = n.parse().map_err(|_| Error::UnknownCharacter(id.to_string()))?;
                (q, n)
            }
        };
        if !(2..=1_000_000).contains(&q) {
            return Err(Error::UnknownCharacter(id.to_string()));
        }
        CharacterGroup::new(q)?
            .character(n)
            .map_err(|_| Error::UnknownCharacter(id.to_string()))
    }

    pub fn modulus(&self) -> u64 {
        self.group.modulus
    }

    /// Canonical index of this character in the enumeration mod `q`.
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn label(&self) -> String {
        format!("{}.{}", self.modulus(), self.index)
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// `χ(gᵢ) = e^{2πi·rᵢ}` with `rᵢ` the returned rationals.
    pub fn generator_exponents(&self) -> Vec<Rational> {
        self.exponents
            .iter()
            .zip(&self.group.orders)
            .map(|(&a, &ord)| Rational::new(a.into(), ord.into()))
            .collect()
    }

    pub fn generators(&self) -> &[u64] {
        self.group.generators()
    }

    /// Exact value `χ(k)`; `None` when `gcd(k, q) > 1`.
    pub fn value(&self, k: i64) -> Option<RootOfUnity> {
        self.values[k.rem_euclid(self.modulus() as i64) as usize]
    }

    /// `χ(k)` as a complex number (zero off the units).
    pub fn evaluate(&self, k: i64) -> Complex64 {
        self.value(k)
            .map_or(Complex64::new(0.0, 0.0), RootOfUnity::to_complex)
    }

    /// The value table `χ(0), …, χ(q−1)`.
    pub fn value_table(&self) -> &[Option<RootOfUnity>] {
        &self.values
    }

    pub fn classify(&self) -> CharacterClassification {
        self.classification
    }

    pub fn parity(&self) -> Parity {
        self.classification.parity
    }

    pub fn is_odd(&self) -> bool {
        self.classification.parity == Parity::Odd
    }

    pub fn is_principal(&self) -> bool {
        self.classification.is_principal
    }

    pub fn is_real(&self) -> bool {
        self.classification.is_real
    }

    pub fn conductor(&self) -> u64 {
        self.classification.conductor
    }

    pub fn conjugate(&self) -> Self {
        let exps = self
            .exponents
            .iter()
            .zip(&self.group.orders)
            .map(|(&a, &ord)| (ord - a) % ord)
            .collect();
        Self::build(self.group.clone(), exps)
    }

    pub(crate) fn require_nonprincipal(&self, what: &str) -> Result<()> {
        if self.is_principal() {
            return Err(Error::Hypothesis(format!(
                "{what} needs a nonprincipal character, {} is principal",
                self.label()
            )));
        }
        Ok(())
    }

    pub(crate) fn require_odd(&self, what: &str) -> Result<()> {
        self.require_nonprincipal(what)?;
        if !self.is_odd() {
            return Err(Error::Hypothesis(format!(
                "{what} needs an odd character (chi(-1) = -1), {} is even",
                self.label()
            )));
        }
        Ok(())
    }
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.modulus() == other.modulus() && self.exponents == other.exponents
    }
}

impl Eq for DirichletCharacter {}

/// Smallest divisor `f` of `q` such that `χ(u) = 1` for every unit `u ≡ 1 (mod f)`.
fn conductor_by_divisors(q: u64, values: &[Option<RootOfUnity>]) -> u64 {
    arith::divisors(q)
        .into_iter()
        .find(|&f| {
            (0..q / f)
                .map(|t| (1 + f * t) % q)
                .all(|u| values[u as usize].is_none_or(|v| v == RootOfUnity::ONE))
        })
        .unwrap_or(q)
}

/// All characters mod `q`, built lazily from one shared unit-group table.
#[derive(Debug, Clone)]
pub struct CharacterGroup {
    group: Arc<UnitGroup>,
}

impl CharacterGroup {
    pub fn new(q: u64) -> Result<Self> {
        Ok(CharacterGroup {
            group: Arc::new(UnitGroup::new(q)?),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.group.modulus
    }

    /// Number of characters, `φ(q)`.
    pub fn len(&self) -> u64 {
        self.group.order()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn unit_group(&self) -> &UnitGroup {
        &self.group
    }

    pub fn character(&self, index: u64) -> Result<DirichletCharacter> {
        if index >= self.len() {
            return Err(invalid(format!(
                "character index {index} out of range for modulus {} ({} characters)",
                self.modulus(),
                self.len()
            )));
        }
        let exps = self.group.exponents_of_index(index);
        Ok(DirichletCharacter::build(self.group.clone(), exps))
    }

    pub fn from_exponents(&self, exponents: &[u64]) -> Result<DirichletCharacter> {
        if exponents.len() != self.group.orders.len()
            || exponents.iter().zip(&self.group.orders).any(|(a, o)| a >= o)
        {
            return Err(invalid(format!(
                "exponents {exponents:?} do not fit generator orders {:?}",
                self.group.orders
            )));
        }
        Ok(DirichletCharacter::build(self.group.clone(), exponents.to_vec()))
    }

    pub fn iter(&self) -> impl Iterator<Item = DirichletCharacter> + '_ {
        (0..self.len()).map(move |i| self.character(i).expect("index in range"))
    }
}

/// All `φ(q)` characters mod `q` in canonical order.
pub fn enumerate_characters(q: u64) -> Result<Vec<DirichletCharacter>> {
    let group = CharacterGroup::new(q)?;
    Ok(group.iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::euler_phi;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Local-conductor formula, independent of the divisor search.
    fn conductor_from_components(chi: &DirichletCharacter) -> u64 {
        let q = chi.modulus();
        let mut slot = 0;
        let mut f = 1;
        for (p, e) in arith::factorize(q) {
            if p == 2 {
                match e {
                    1 => {}
                    2 => {
                        if chi.exponents[slot] != 0 {
                            f *= 4;
                        }
                        slot += 1;
                    }
                    _ => {
                        let (b, c5) = (chi.exponents[slot], chi.exponents[slot + 1]);
                        let ord5 = chi.group.orders[slot + 1];
                        if c5 != 0 {
                            let t = (ord5 / gcd(c5, ord5)).trailing_zeros();
                            f *= 1 << (t + 2);
                        } else if b != 0 {
                            f *= 4;
                        }
                        slot += 2;
                    }
                }
            } else {
                let a = chi.exponents[slot];
                let ord = chi.group.orders[slot];
                if a != 0 {
                    let mut d = ord / gcd(a, ord);
                    let mut v = 0;
                    while d.is_multiple_of(p) {
                        d /= p;
                        v += 1;
                    }
                    f *= p.pow(1 + v);
                }
                slot += 1;
            }
        }
        f
    }

    #[test]
    fn mod4_character() {
        let chars = enumerate_characters(4).unwrap();
        assert_eq!(chars.len(), 2);
        let chi = &chars[1];
        assert_eq!(chi.evaluate(1), c(1.0, 0.0));
        assert_eq!(chi.evaluate(3), c(-1.0, 0.0));
        assert_eq!(chi.evaluate(0), c(0.0, 0.0));
        assert_eq!(chi.evaluate(2), c(0.0, 0.0));
        assert_eq!(chi.evaluate(7), c(-1.0, 0.0));
        let cl = chi.classify();
        assert_eq!(cl.parity, Parity::Odd);
        assert!(cl.is_primitive && cl.is_real && !cl.is_principal);
        assert_eq!(cl.conductor, 4);
    }

    #[test]
    fn mod5_characters() {
        let chars = enumerate_characters(5).unwrap();
        assert_eq!(chars.len(), 4);
        let complex = chars
            .iter()
            .find(|chi| chi.evaluate(2) == c(0.0, 1.0))
            .expect("character with chi(2) = i");
        assert_eq!(complex.evaluate(3), c(0.0, -1.0));
        assert_eq!(complex.evaluate(4), c(-1.0, 0.0));
        assert_eq!(complex.label(), "5.1");
        let real: Vec<_> = chars.iter().filter(|c| c.is_real() && !c.is_principal()).collect();
        assert_eq!(real.len(), 1);
        let real = real[0];
        assert_eq!(real.parity(), Parity::Even);
        assert!(real.classify().is_primitive);
        assert_eq!(real.conductor(), 5);
        assert_eq!(real.evaluate(2), c(-1.0, 0.0));
        assert_eq!(real.evaluate(4), c(1.0, 0.0));
    }

    #[test]
    fn mod3_and_mod6() {
        let chi3 = DirichletCharacter::parse("chi3").unwrap();
        assert_eq!(chi3.evaluate(2), c(-1.0, 0.0));
        assert_eq!(chi3.evaluate(3), c(0.0, 0.0));
        let chi6 = DirichletCharacter::parse("chi6").unwrap();
        assert_eq!(chi6.evaluate(1), c(1.0, 0.0));
        assert_eq!(chi6.evaluate(5), c(-1.0, 0.0));
        assert_eq!(chi6.evaluate(6), c(0.0, 0.0));
        assert!(chi6.is_odd());
        // induced from the character mod 3
        assert_eq!(chi6.conductor(), 3);
        let p6 = DirichletCharacter::principal(6).unwrap().classify();
        assert!(p6.is_principal && !p6.is_primitive);
        assert_eq!(p6.conductor, 1);
        assert_eq!(p6.parity, Parity::Even);
    }

    #[test]
    fn parse_ids() {
        assert_eq!(DirichletCharacter::parse("chi-4").unwrap().label(), "4.1");
        assert_eq!(DirichletCharacter::parse("5.3").unwrap().label(), "5.3");
        assert!(DirichletCharacter::parse("5.4").is_err());
        assert!(DirichletCharacter::parse("1.0").is_err());
        assert!(DirichletCharacter::parse("chi7").is_err());
        assert!(enumerate_characters(1).is_err());
    }

    #[test]
    fn enumeration_size_and_distinctness() {
        for q in 2..=200 {
            let chars = enumerate_characters(q).unwrap();
            assert_eq!(chars.len() as u64, euler_phi(q), "q = {q}");
            assert!(chars[0].is_principal());
            let mut tables: Vec<_> = chars.iter().map(|c| c.value_table().to_vec()).collect();
            tables.sort_by_key(|t| format!("{t:?}"));
            tables.dedup();
            assert_eq!(tables.len() as u64, euler_phi(q), "distinct tables q = {q}");
        }
    }

    #[test]
    fn structural_invariants() {
        for q in 2..=100u64 {
            for chi in enumerate_characters(q).unwrap() {
                assert_eq!(chi.value(1), Some(RootOfUnity::ONE));
                for j in 0..q {
                    assert_eq!(chi.value(j as i64).is_none(), gcd(j, q) > 1);
                }
                let units = arith::coprime_residues(q);
                for &a in &units {
                    for &b in &units {
                        let prod = chi.value((a * b % q) as i64).unwrap();
                        assert_eq!(prod, chi.value(a as i64).unwrap() * chi.value(b as i64).unwrap());
                    }
                }
                let sum: Complex64 = (1..=q as i64).map(|k| chi.evaluate(k)).sum();
                if chi.is_principal() {
                    assert!((sum.re - euler_phi(q) as f64).abs() < 1e-9);
                } else {
                    assert!(sum.norm() < 1e-12, "orthogonality q = {q}");
                }
                let odd = chi.evaluate(q as i64 - 1) == c(-1.0, 0.0);
                assert_eq!(odd, chi.is_odd());
                if chi.is_odd() {
                    for j in 0..q as i64 {
                        assert_eq!(chi.evaluate(q as i64 - j), -chi.evaluate(j));
                    }
                }
                let real = (0..q as i64).all(|k| chi.evaluate(k).im == 0.0);
                assert_eq!(real, chi.is_real());
                assert_eq!(chi.conductor(), conductor_from_components(&chi), "{}", chi.label());
                assert_eq!(chi.classify().is_primitive, chi.conductor() == q);
            }
        }
    }

    #[test]
    fn conjugates_are_enumerated() {
        for q in [5u64, 7, 8, 12, 13, 15, 16, 21] {
            let chars = enumerate_characters(q).unwrap();
            for chi in &chars {
                let bar = chi.conjugate();
                assert!(chars.contains(&bar));
                for k in 0..q as i64 {
                    assert_eq!(bar.evaluate(k), chi.evaluate(k).conj());
                }
            }
        }
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        for q in [8u64, 12, 15, 24, 35] {
            let chars = enumerate_characters(q).unwrap();
            for w in chars.windows(2) {
                assert!(w[0].exponents() < w[1].exponents());
            }
            for (i, chi) in chars.iter().enumerate() {
                assert_eq!(chi.index(), i as u64);
            }
        }
    }

    #[test]
    fn root_of_unity_algebra() {
        let i = RootOfUnity::new(4, 1);
        assert_eq!(i * i, RootOfUnity::new(2, 1));
        assert_eq!(i.pow(4), RootOfUnity::ONE);
        assert_eq!(i.conj(), RootOfUnity::new(4, 3));
        assert_eq!(RootOfUnity::new(12, 6), RootOfUnity::new(2, 1));
        assert_eq!(i.to_complex(), c(0.0, 1.0));
        assert_eq!(i.to_string(), "i");
    }
}
