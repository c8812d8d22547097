//! Arithmetic in `F_q = GF(2^(2n+1))`, polynomial basis over `GF(2)`.
//!
//! The modulus is the irreducible polynomial of degree `2n + 1` that is
//! smallest as an integer (bit `i` = coefficient of `X^i`).

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::params::MAX_N;

/// An element of `F_q` as the bit-pattern of its reduced representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn to_hex(self) -> String {
        format!("{:x}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

/// Carry-less product of two `GF(2)[X]` polynomials.
fn clmul(a: u64, b: u64) -> u128 {
    let mut acc = 0u128;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= (a as u128) << shift;
        }
        b >>= 1;
        shift += 1;
    }
    acc
}

fn poly_degree(p: u128) -> i32 {
    127 - p.leading_zeros() as i32
}

fn poly_rem(mut a: u128, m: u128) -> u128 {
    let dm = poly_degree(m);
    while a != 0 && poly_degree(a) >= dm {
        a ^= m << (poly_degree(a) - dm);
    }
    a
}

fn poly_gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    poly_rem(clmul(a, b), m as u128) as u64
}

/// `X^(2^k) mod m`.
fn frobenius_power_of_x(k: u32, m: u64) -> u64 {
    let mut r = poly_rem(2, m as u128) as u64;
    for _ in 0..k {
        r = mulmod(r, r, m);
    }
    r
}

/// Rabin irreducibility test for a polynomial of degree `d >= 1`.
fn is_irreducible(m: u64) -> bool {
    let d = poly_degree(m as u128);
    if d < 1 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let d = d as u32;
    if frobenius_power_of_x(d, m) != 2 {
        return false;
    }
    let mut k = d;
    let mut p = 2;
    let mut primes = Vec::new();
    while p * p <= k {
        if k.is_multiple_of(p) {
            primes.push(p);
            while k.is_multiple_of(p) {
                k /= p;
            }
        }
        p += 1;
    }
    if k > 1 {
        primes.push(k);
    }
    primes.into_iter().all(|p| {
        let h = frobenius_power_of_x(d / p, m) ^ 2;
        poly_gcd(m as u128, h as u128) == 1
    })
}

/// The integer-smallest irreducible polynomial of degree `2n + 1` over `GF(2)`.
pub fn field_modulus(n: u32) -> Result<u64> {
    if n == 0 || n > MAX_N {
        return Err(Error::ParameterDomain(format!(
            "n must lie in 1..={MAX_N}, got {n}"
        )));
    }
    let d = 2 * n + 1;
    let lo = 1u64 << d;
    Ok((lo..lo << 1)
        .find(|&m| is_irreducible(m))
        .expect("irreducible polynomials exist in every degree"))
}

/// `GF(2^degree)` with a fixed modulus. Log/antilog tables are used up to
/// degree 16; larger fields fall back to shift-and-add.
#[derive(Debug, Clone)]
pub struct GfField {
    degree: u32,
    modulus: u64,
    order: u64,
    tables: Option<(Vec<u32>, Vec<u32>)>,
}

impl GfField {
    /// The field `F_q` of the Suzuki family member `n`.
    pub fn for_suzuki(n: u32) -> Result<Self> {
        let modulus = field_modulus(n)?;
        Ok(Self::with_modulus(modulus))
    }

    /// Builds the field for an irreducible `modulus`; irreducibility is the caller's contract.
    pub fn with_modulus(modulus: u64) -> Self {
        let degree = poly_degree(modulus as u128) as u32;
        let order = 1u64 << degree;
        let mut field = GfField {
            degree,
            modulus,
            order,
            tables: None,
        };
        if degree <= 16 {
            field.tables = field.build_tables();
        }
        field
    }

    /// Log/antilog tables over a primitive element, if one is found.
    fn build_tables(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        let n = (self.order - 1) as usize;
        'generator: for g in 2..self.order {
            let mut exp = vec![0u32; 2 * n];
            let mut log = vec![0u32; self.order as usize];
            let mut cur = 1u64;
            for (i, slot) in exp.iter_mut().take(n).enumerate() {
                if i > 0 && cur == 1 {
                    continue 'generator;
                }
                *slot = cur as u32;
                log[cur as usize] = i as u32;
                cur = mulmod(cur, g, self.modulus);
            }
            if cur != 1 {
                continue;
            }
            for i in n..2 * n {
                exp[i] = exp[i - n];
            }
            return Some((exp, log));
        }
        // GF(2): the multiplicative group is trivial.
        if n == 1 {
            return Some((vec![1, 1], vec![0, 0]));
        }
        None
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of elements `q`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn element(&self, bits: u64) -> FieldElement {
        FieldElement(poly_rem(bits as u128, self.modulus as u128) as u32)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        match &self.tables {
            Some((exp, log)) => {
                FieldElement(exp[(log[a.0 as usize] + log[b.0 as usize]) as usize])
            }
            None => FieldElement(mulmod(a.0 as u64, b.0 as u64, self.modulus) as u32),
        }
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero {
                degree: self.degree,
            });
        }
        match &self.tables {
            Some((exp, log)) => {
                let n = (self.order - 1) as u32;
                Ok(FieldElement(exp[((n - log[a.0 as usize]) % n) as usize]))
            }
            None => Ok(self.pow(a, self.order - 2)),
        }
    }

    /// `dst[i] += factor * src[i]`.
    pub fn axpy(&self, dst: &mut [FieldElement], src: &[FieldElement], factor: FieldElement) {
        if factor.is_zero() {
            return;
        }
        match &self.tables {
            Some((exp, log)) => {
                let lf = log[factor.0 as usize];
                for (d, &s) in dst.iter_mut().zip(src) {
                    if s.0 != 0 {
                        d.0 ^= exp[(lf + log[s.0 as usize]) as usize];
                    }
                }
            }
            None => {
                for (d, &s) in dst.iter_mut().zip(src) {
                    *d = self.add(*d, self.mul(factor, s));
                }
            }
        }
    }

    /// The unique square root, `a^(2^(degree - 1))`.
    pub fn sqrt(&self, a: FieldElement) -> FieldElement {
        let mut r = a;
        for _ in 0..self.degree - 1 {
            r = self.mul(r, r);
        }
        r
    }

    /// All `q` elements in bit-pattern order.
    pub fn enumerate(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order as u32).map(FieldElement)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Trial division by every polynomial of degree 1..=d/2.
    fn irreducible_by_trial_division(m: u64) -> bool {
        let d = poly_degree(m as u128);
        (2u64..1 << (d / 2 + 1)).all(|f| poly_rem(m as u128, f as u128) != 0)
    }

    #[test]
    fn modulus_matches_brute_force_scan() {
        for n in 1..=5 {
            let d = 2 * n + 1;
            let expected = (1u64 << d..1u64 << (d + 1))
                .find(|&m| irreducible_by_trial_division(m))
                .unwrap();
            assert_eq!(field_modulus(n).unwrap(), expected, "n = {n}");
        }
        assert_eq!(field_modulus(1).unwrap(), 0b1011);
        assert_eq!(field_modulus(2).unwrap(), 0b100101);
        assert_eq!(field_modulus(3).unwrap(), 0b10000011);
    }

    #[test]
    fn rabin_agrees_with_trial_division() {
        for m in 2u64..1 << 11 {
            assert_eq!(is_irreducible(m), irreducible_by_trial_division(m), "m = {m:b}");
        }
    }

    #[test]
    fn small_product() {
        let f = GfField::for_suzuki(1).unwrap();
        // X * X^2 = X^3 = X + 1
        assert_eq!(f.mul(FieldElement(0b10), FieldElement(0b100)), FieldElement(0b11));
    }

    #[test]
    fn exhaustive_axioms_gf8() {
        let f = GfField::for_suzuki(1).unwrap();
        let all: Vec<_> = f.enumerate().collect();
        for &a in &all {
            assert!(f.add(a, a).is_zero());
            assert_eq!(f.pow(a, f.order()), a);
            let s = f.sqrt(a);
            assert_eq!(f.mul(s, s), a);
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
            }
            for &b in &all {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for &c in &all {
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn random_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [2, 3, 9] {
            let f = GfField::for_suzuki(n).unwrap();
            for _ in 0..10_000 {
                let a = FieldElement(rng.gen_range(0..f.order() as u32));
                let b = FieldElement(rng.gen_range(0..f.order() as u32));
                let c = FieldElement(rng.gen_range(0..f.order() as u32));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.pow(a, f.order()), a);
                let s = f.sqrt(a);
                assert_eq!(f.mul(s, s), a);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
                }
            }
        }
    }

    #[test]
    fn table_free_field_matches() {
        // n = 9 gives degree 19, beyond the table limit.
        let f = GfField::for_suzuki(9).unwrap();
        assert!(f.tables.is_none());
        let a = f.element(0x1234);
        assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
    }

    #[test]
    fn inverse_of_zero() {
        let f = GfField::for_suzuki(2).unwrap();
        assert_eq!(f.inv(FieldElement::ZERO), Err(Error::DivisionByZero { degree: 5 }));
    }

    #[test]
    fn hex_serialization() {
        assert_eq!(serde_json::to_string(&FieldElement(0x1b)).unwrap(), "\"1b\"");
    }
}
