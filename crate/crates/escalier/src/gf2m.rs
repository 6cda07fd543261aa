//! Exact arithmetic in GF(2^m) = Z_2(a) via exp/log tables, plus Zech
//! logarithms and the n-th roots of unity used throughout the syndrome work.
//!
//! `a` is the class of x modulo the primitive polynomial, so `a` generates the
//! multiplicative group and every nonzero element is `a^k` for a unique
//! `k < 2^m - 1`. Elements are stored as Z_2-coordinate vectors packed into a
//! `u32` (basis 1, a, ..., a^{m-1}).

use std::sync::OnceLock;

use thiserror::Error;

use crate::field::FieldOps;

/// Hard ceiling for the extension degree (tables stay small).
pub const DEFAULT_MAX_M: u32 = 16;

/// Sentinel in the Zech table for the x with 1 + a^x = 0.
pub const ZECH_NONE: u32 = u32::MAX;

fn max_degree() -> u32 {
    static CAP: OnceLock<u32> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("ESCALIER_MAX_M")
            .ok()
            .and_then(|s| s.parse::<u32>().ok())
            .map(|m| m.clamp(DEFAULT_MAX_M, 20))
            .unwrap_or(DEFAULT_MAX_M)
    })
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2mError {
    #[error("extension degree {0} outside 2..={1}")]
    DegreeOutOfRange(u32, u32),
    #[error("polynomial {0:#x} is reducible over Z_2")]
    ReduciblePolynomial(u32),
    #[error("x is not a primitive root modulo {0:#x}")]
    NonPrimitiveRoot(u32),
    #[error("inverse of zero")]
    ZeroInversion,
    #[error("discrete logarithm of zero")]
    ZeroLogarithm,
    #[error("{n} does not divide 2^{m}-1")]
    NotADivisor { n: u32, m: u32 },
    #[error("index {0} outside 1..={1}")]
    IndexOutOfRange(u32, u32),
    #[error("element value {0} outside the field")]
    ValueOutOfRange(u32),
    #[error("malformed element literal {0:?} (expected \"0\" or \"a^k\")")]
    BadElementLiteral(String),
}

/// An element of GF(2^m): the packed coordinate vector. `0` is the zero
/// element; interpretation (in particular `m`) comes from the owning [`Field`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElem(pub u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn value(self) -> u32 {
        self.0
    }
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// GF(2^m) with precomputed exp/log/Zech tables. Immutable after
/// construction; all operations are pure, so values can be shared freely
/// across threads.
#[derive(Debug, Clone)]
pub struct Field {
    m: u32,
    poly: u32,
    q: u32, // 2^m - 1, the multiplicative group order
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

/// Default primitive polynomials per degree (validated at construction).
const DEFAULT_POLYS: [(u32, u32); 15] = [
    (2, 0b111),
    (3, 0b1011),
    (4, 0b1_0011),
    (5, 0b10_0101),
    (6, 0b100_0011),
    (7, 0b1000_0011),
    (8, 0b1_0001_1101),
    (9, 0x211),
    (10, 0x409),
    (11, 0x805),
    (12, 0x1053),
    (13, 0x201b),
    (14, 0x4443),
    (15, 0x8003),
    (16, 0x1100b),
];

pub fn default_poly(m: u32) -> Option<u32> {
    DEFAULT_POLYS.iter().find(|(d, _)| *d == m).map(|(_, p)| *p)
}

fn poly_deg(p: u32) -> u32 {
    31 - p.leading_zeros()
}

/// Remainder of binary-polynomial division a mod b (b != 0).
fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = 63 - b.leading_zeros();
    while a != 0 {
        let da = 63 - a.leading_zeros();
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

fn is_irreducible(p: u32) -> bool {
    let m = poly_deg(p);
    if m == 0 || p & 1 == 0 {
        // x divides p, or p is constant
        return false;
    }
    // Trial division by every polynomial of degree 1..=m/2 (constant term 1
    // is necessary for any factor once x is ruled out, but checking all is
    // cheap and simpler).
    for d in 1..=m / 2 {
        let lo = 1u64 << d;
        for f in lo..(lo << 1) {
            if poly_rem(p as u64, f) == 0 {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Build GF(2^m). With `poly = None` a built-in default primitive
    /// polynomial is used; either way the polynomial is re-validated
    /// (irreducibility by trial division, primitivity of x by walking the
    /// full exp table).
    pub fn new(m: u32, poly: Option<u32>) -> Result<Field, Gf2mError> {
        let cap = max_degree();
        if !(2..=cap).contains(&m) {
            return Err(Gf2mError::DegreeOutOfRange(m, cap));
        }
        let poly = match poly {
            Some(p) => {
                if poly_deg(p) != m {
                    return Err(Gf2mError::DegreeOutOfRange(poly_deg(p), cap));
                }
                p
            }
            None => default_poly(m).ok_or(Gf2mError::DegreeOutOfRange(m, cap))?,
        };
        if !is_irreducible(poly) {
            return Err(Gf2mError::ReduciblePolynomial(poly));
        }
        let q = (1u32 << m) - 1;
        // exp is doubled so products of two logs index without a reduction.
        let mut exp = vec![0u32; 2 * q as usize];
        let mut log = vec![u32::MAX; 1usize << m];
        let mut e = 1u32;
        for k in 0..q {
            if e == 1 && k != 0 {
                // The order of x divides q; an early return to 1 means the
                // (irreducible) polynomial is not primitive.
                return Err(Gf2mError::NonPrimitiveRoot(poly));
            }
            exp[k as usize] = e;
            exp[(k + q) as usize] = e;
            log[e as usize] = k;
            e <<= 1;
            if e >> m & 1 == 1 {
                e ^= poly;
            }
        }
        if e != 1 {
            return Err(Gf2mError::NonPrimitiveRoot(poly));
        }
        let mut zech = vec![ZECH_NONE; q as usize];
        for x in 0..q {
            let s = 1 ^ exp[x as usize];
            if s != 0 {
                zech[x as usize] = log[s as usize];
            }
        }
        Ok(Field { m, poly, q, exp, log, zech })
    }

    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn poly(&self) -> u32 {
        self.poly
    }
    /// Order of the multiplicative group, 2^m - 1.
    pub fn group_order(&self) -> u32 {
        self.q
    }

    /// a^k for any k (reduced mod 2^m - 1).
    pub fn alpha_pow(&self, k: u64) -> FieldElem {
        FieldElem(self.exp[(k % self.q as u64) as usize])
    }

    pub fn elem(&self, value: u32) -> Result<FieldElem, Gf2mError> {
        if value >> self.m != 0 {
            return Err(Gf2mError::ValueOutOfRange(value));
        }
        Ok(FieldElem(value))
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(a.0 ^ b.0)
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.is_zero() || b.is_zero() {
            return FieldElem::ZERO;
        }
        FieldElem(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem, Gf2mError> {
        if a.is_zero() {
            return Err(Gf2mError::ZeroInversion);
        }
        Ok(FieldElem(self.exp[(self.q - self.log[a.0 as usize]) as usize % (2 * self.q as usize)]))
    }

    /// Discrete logarithm base a, in `[0, 2^m-1)`.
    pub fn dlog(&self, a: FieldElem) -> Result<u32, Gf2mError> {
        if a.is_zero() {
            return Err(Gf2mError::ZeroLogarithm);
        }
        Ok(self.log[a.0 as usize])
    }

    /// e^k with 0^0 = 1.
    pub fn pow_elem(&self, e: FieldElem, k: u64) -> FieldElem {
        if e.is_zero() {
            return if k == 0 { FieldElem::ONE } else { FieldElem::ZERO };
        }
        let lg = self.log[e.0 as usize] as u64;
        self.alpha_pow(lg * (k % self.q as u64) % self.q as u64)
    }

    /// Zech logarithm: the k with a^k = 1 + a^x, or `None` when 1 + a^x = 0
    /// (only x ≡ 0 mod 2^m-1 in characteristic 2).
    pub fn zech(&self, x: u32) -> Option<u32> {
        let z = self.zech[(x % self.q) as usize];
        (z != ZECH_NONE).then_some(z)
    }

    pub fn format_elem(&self, e: FieldElem) -> String {
        if e.is_zero() {
            "0".to_string()
        } else {
            format!("a^{}", self.log[e.0 as usize])
        }
    }

    pub fn parse_elem(&self, s: &str) -> Result<FieldElem, Gf2mError> {
        if s == "0" {
            return Ok(FieldElem::ZERO);
        }
        let k = s
            .strip_prefix("a^")
            .and_then(|t| t.parse::<u64>().ok())
            .ok_or_else(|| Gf2mError::BadElementLiteral(s.to_string()))?;
        Ok(self.alpha_pow(k))
    }

    /// Every field element, zero first then a^0, a^1, ...
    pub fn all_elems(&self) -> impl Iterator<Item = FieldElem> + '_ {
        std::iter::once(FieldElem::ZERO).chain((0..self.q).map(|k| FieldElem(self.exp[k as usize])))
    }
}

impl FieldOps for Field {
    type Elem = FieldElem;

    fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }
    fn one(&self) -> FieldElem {
        FieldElem::ONE
    }
    fn is_zero(&self, e: FieldElem) -> bool {
        e.is_zero()
    }
    fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        Field::add(self, a, b)
    }
    fn neg(&self, a: FieldElem) -> FieldElem {
        a
    }
    fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        Field::mul(self, a, b)
    }
    fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        Field::inv(self, a).ok()
    }
    fn pow(&self, base: FieldElem, k: u64) -> FieldElem {
        self.pow_elem(base, k)
    }
    fn eval_term(&self, exps: &[u32], point: &[FieldElem]) -> FieldElem {
        // one pass over the discrete logs; a zero coordinate under a positive
        // exponent kills the product
        let mut logsum: u64 = 0;
        for (&e, p) in exps.iter().zip(point) {
            if e > 0 {
                if p.is_zero() {
                    return FieldElem::ZERO;
                }
                logsum += self.log[p.0 as usize] as u64 * e as u64;
            }
        }
        FieldElem(self.exp[(logsum % self.q as u64) as usize])
    }
}

/// The n-th roots of unity R_n = {b^0, ..., b^{n-1}} with b = a^alpha,
/// alpha = (2^m-1)/n, and S_n = R_n ∪ {0} (zero listed first).
#[derive(Debug, Clone)]
pub struct RootSets {
    pub n: u32,
    pub alpha: u32,
    pub b: FieldElem,
    rn: Vec<FieldElem>,
    sn: Vec<FieldElem>,
}

impl RootSets {
    pub fn rn(&self) -> &[FieldElem] {
        &self.rn
    }
    pub fn sn(&self) -> &[FieldElem] {
        &self.sn
    }
    /// b^k for any k.
    pub fn b_pow(&self, field: &Field, k: u64) -> FieldElem {
        field.alpha_pow(self.alpha as u64 * (k % self.n as u64))
    }
    /// Index i with e = b^i.
    pub fn index_of(&self, field: &Field, e: FieldElem) -> Option<u32> {
        let lg = field.dlog(e).ok()?;
        (lg % self.alpha == 0).then(|| lg / self.alpha)
    }
    pub fn contains(&self, field: &Field, e: FieldElem) -> bool {
        self.index_of(field, e).is_some()
    }
}

pub fn roots_of_unity(field: &Field, n: u32) -> Result<RootSets, Gf2mError> {
    let q = field.group_order();
    if n == 0 || !q.is_multiple_of(n) {
        return Err(Gf2mError::NotADivisor { n, m: field.m() });
    }
    let alpha = q / n;
    let b = field.alpha_pow(alpha as u64);
    let rn: Vec<FieldElem> = (0..n).map(|i| field.alpha_pow(alpha as u64 * i as u64)).collect();
    let mut sn = Vec::with_capacity(n as usize + 1);
    sn.push(FieldElem::ZERO);
    sn.extend_from_slice(&rn);
    Ok(RootSets { n, alpha, b, rn, sn })
}

/// The (2^m-1, n; S)-Zech sequence: zeta(i) counts the j in S with
/// 1 + b^j != 0 and dlog(1 + b^j) ≡ i (mod alpha). Indices j ≡ 0 (mod n)
/// have 1 + b^j = 0 and belong to no class.
pub fn zech_sequence(field: &Field, n: u32, set: &[u32]) -> Result<Vec<u32>, Gf2mError> {
    let roots = roots_of_unity(field, n)?;
    let mut zeta = vec![0u32; roots.alpha as usize];
    for &j in set {
        if j < 1 || j > n {
            return Err(Gf2mError::IndexOutOfRange(j, n));
        }
        let bj = roots.b_pow(field, j as u64);
        let s = field.add(FieldElem::ONE, bj);
        if s.is_zero() {
            continue;
        }
        let class = field.dlog(s).unwrap() % roots.alpha;
        zeta[class as usize] += 1;
    }
    Ok(zeta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf16_default_is_x4_x_1() {
        let f = Field::new(4, None).unwrap();
        assert_eq!(f.poly(), 0b1_0011);
        // a^4 = a + 1
        assert_eq!(f.alpha_pow(4), FieldElem(0b0011));
        assert_eq!(f.alpha_pow(15), FieldElem::ONE);
    }

    #[test]
    fn gf4_exp_table() {
        let f = Field::new(2, None).unwrap();
        let table: Vec<u32> = (0..3).map(|k| f.alpha_pow(k).value()).collect();
        assert_eq!(table, vec![0b01, 0b10, 0b11]); // 1, a, a+1
    }

    #[test]
    fn reducible_poly_rejected() {
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2
        assert_eq!(Field::new(4, Some(0b1_0101)).unwrap_err(), Gf2mError::ReduciblePolynomial(0b1_0101));
    }

    #[test]
    fn non_primitive_poly_rejected() {
        // x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5.
        assert_eq!(Field::new(4, Some(0b1_1111)).unwrap_err(), Gf2mError::NonPrimitiveRoot(0b1_1111));
    }

    #[test]
    fn degree_out_of_range() {
        assert!(matches!(Field::new(1, None), Err(Gf2mError::DegreeOutOfRange(..))));
        assert!(matches!(Field::new(40, None), Err(Gf2mError::DegreeOutOfRange(..))));
    }

    #[test]
    fn all_default_polys_validate() {
        for m in 2..=16 {
            Field::new(m, None).unwrap_or_else(|e| panic!("m={m}: {e}"));
        }
    }

    #[test]
    fn arithmetic_examples() {
        let f = Field::new(4, None).unwrap();
        // add(e, e) = 0 for every e
        for e in f.all_elems() {
            assert_eq!(f.add(e, e), FieldElem::ZERO);
        }
        // a^3 * a^13 = a^16 mod 15 = a
        assert_eq!(f.mul(f.alpha_pow(3), f.alpha_pow(13)), f.alpha_pow(1));
        assert_eq!(f.dlog(FieldElem::ONE).unwrap(), 0);
        assert_eq!(f.dlog(FieldElem::ZERO).unwrap_err(), Gf2mError::ZeroLogarithm);
        assert_eq!(f.inv(FieldElem::ZERO).unwrap_err(), Gf2mError::ZeroInversion);
        for e in f.all_elems().skip(1) {
            assert_eq!(f.mul(e, f.inv(e).unwrap()), FieldElem::ONE);
        }
    }

    #[test]
    fn dlog_homomorphism() {
        let f = Field::new(5, None).unwrap();
        for i in 0..31u64 {
            for j in 0..31u64 {
                let (e1, e2) = (f.alpha_pow(i), f.alpha_pow(j));
                assert_eq!(
                    f.dlog(f.mul(e1, e2)).unwrap(),
                    ((i + j) % 31) as u32
                );
            }
        }
    }

    #[test]
    fn zech_table_exhaustive() {
        for m in 2..=8 {
            let f = Field::new(m, None).unwrap();
            for x in 0..f.group_order() {
                let ax = f.alpha_pow(x as u64);
                let s = f.add(FieldElem::ONE, ax);
                match f.zech(x) {
                    None => assert!(s.is_zero()),
                    Some(z) => assert_eq!(f.alpha_pow(z as u64), s),
                }
            }
            // sentinel exactly at x = 0
            assert!(f.zech(0).is_none());
        }
    }

    #[test]
    fn roots_of_unity_examples() {
        let f = Field::new(4, None).unwrap();
        let r15 = roots_of_unity(&f, 15).unwrap();
        assert_eq!((r15.alpha, r15.b), (1, f.alpha_pow(1)));
        assert_eq!(r15.rn().len(), 15);
        assert_eq!(r15.sn().len(), 16);

        let r5 = roots_of_unity(&f, 5).unwrap();
        assert_eq!(r5.alpha, 3);
        assert_eq!(r5.b, f.alpha_pow(3));
        let rn: Vec<FieldElem> = (0..5).map(|i| f.alpha_pow(3 * i)).collect();
        assert_eq!(r5.rn(), &rn[..]);

        assert_eq!(
            roots_of_unity(&f, 4).unwrap_err(),
            Gf2mError::NotADivisor { n: 4, m: 4 }
        );
        // elements of Rn pairwise distinct, b^n = 1
        let mut seen = std::collections::HashSet::new();
        for &e in r5.rn() {
            assert!(seen.insert(e));
        }
        assert_eq!(r5.b_pow(&f, 5), FieldElem::ONE);
    }

    #[test]
    fn zech_sequence_examples() {
        let f = Field::new(4, None).unwrap();
        let all: Vec<u32> = (1..=15).collect();
        assert_eq!(zech_sequence(&f, 15, &all).unwrap(), vec![14]);
        let s5: Vec<u32> = (1..=5).collect();
        assert_eq!(zech_sequence(&f, 5, &s5).unwrap(), vec![0, 2, 2]);
        assert_eq!(zech_sequence(&f, 5, &[]).unwrap(), vec![0, 0, 0]);
        assert_eq!(
            zech_sequence(&f, 5, &[6]).unwrap_err(),
            Gf2mError::IndexOutOfRange(6, 5)
        );
    }

    #[test]
    fn zech_sequence_mass_conservation() {
        let f = Field::new(6, None).unwrap();
        for n in [7u32, 9, 21, 63] {
            for set in [vec![1, 2, 3], (1..=n).collect::<Vec<_>>(), vec![n]] {
                let zeta = zech_sequence(&f, n, &set).unwrap();
                let expect = set.iter().filter(|&&j| j % n != 0).count() as u32;
                assert_eq!(zeta.iter().sum::<u32>(), expect);
            }
        }
    }

    #[test]
    fn element_literals() {
        let f = Field::new(3, None).unwrap();
        for e in f.all_elems() {
            assert_eq!(f.parse_elem(&f.format_elem(e)).unwrap(), e);
        }
        assert!(f.parse_elem("a^x").is_err());
    }
}
