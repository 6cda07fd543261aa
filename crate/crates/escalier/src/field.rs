//! Field abstraction shared by the point-ideal machinery.
//!
//! All coefficient arithmetic in this crate goes through [`FieldOps`] so the
//! same Möller/interpolation code runs over `GF(2^m)` (the syndrome setting)
//! and over small prime fields (Macaulay's trick).

use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

/// Exact arithmetic in a finite field, with the field itself acting as the
/// operation context (tables live in the field value, elements stay `Copy`).
pub trait FieldOps {
    type Elem: Copy + Eq + Hash + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, e: Self::Elem) -> bool {
        e == self.zero()
    }
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        self.add(a, self.neg(b))
    }
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: Self::Elem) -> Option<Self::Elem>;

    fn pow(&self, base: Self::Elem, mut k: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut b = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            k >>= 1;
        }
        acc
    }

    /// Evaluate one power product at a point. Implementations with discrete
    /// log tables override this with a single table walk.
    fn eval_term(&self, exps: &[u32], point: &[Self::Elem]) -> Self::Elem {
        let mut v = self.one();
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                v = self.mul(v, self.pow(point[i], e as u64));
                if self.is_zero(v) {
                    return self.zero();
                }
            }
        }
        v
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PrimeFieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// The prime field Z_p, elements stored reduced in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, PrimeFieldError> {
        if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(PrimeFieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    /// Smallest prime >= `lo`.
    pub fn smallest_prime_at_least(lo: u64) -> u64 {
        let mut p = lo.max(2);
        loop {
            if PrimeField::new(p).is_ok() {
                return p;
            }
            p += 1;
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
}

impl FieldOps for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        // p stays far below 2^32 in practice; widen to be safe.
        ((a as u128 * b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.p) {
            return None;
        }
        // Fermat; p is prime.
        Some(self.pow(a, self.p - 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.add(3, 4), 2);
        assert_eq!(f5.mul(3, 4), 2);
        assert_eq!(f5.inv(3), Some(2));
        assert_eq!(f5.inv(0), None);
        assert_eq!(f5.elem(-1), 4);
        assert_eq!(PrimeField::smallest_prime_at_least(6), 7);
        assert_eq!(PrimeField::smallest_prime_at_least(2), 2);
    }
}
