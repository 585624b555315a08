//! Arithmetic in GF(p^e) with integer-encoded elements.
//!
//! An element is stored as an integer `v` in `[0, q)`. Its base-`p` digits
//! `d_0, ..., d_{e-1}` (little endian) are the coefficients of the residue
//! `d_0 + d_1 a + ... + d_{e-1} a^{e-1}` in `GF(p)[a] / (modulus)`. Addition
//! works digit-wise mod `p`; multiplication and inversion go through exp/log
//! tables over a fixed primitive element.
//!
//! The modulus is the monic irreducible polynomial of degree `e` whose lower
//! coefficients `c_0 .. c_{e-1}`, read as little-endian base-`p` digits, give
//! the smallest integer. Element encodings for `e >= 2` depend on this rule.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

/// Largest field order accepted by default. Elements are stored as `u16`.
pub const MAX_ORDER: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{e} exceeds the cap {cap}")]
    OrderTooLarge { p: u32, e: u32, cap: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value {value} is not an element of GF({q})")]
    NotInField { value: u64, q: u32 },
    #[error("digit vector {0:?} is not valid for this field")]
    BadDigits(Vec<u32>),
}

/// A field element, identified by its integer encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Wraps a raw encoding. Whether it lies below `q` is the caller's concern;
    /// use [`Field::element`] for a checked conversion.
    pub const fn new(raw: u16) -> Self {
        Elem(raw)
    }

    pub const fn value(self) -> u32 {
        self.0 as u32
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub(crate) const fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The finite field GF(p^e). Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    primitive: Elem,
    exp: Vec<u16>,
    log: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, e)` with `q = p^e`.
pub fn prime_power(q: u64) -> Result<(u32, u32), GfError> {
    if q < 2 {
        return Err(GfError::NotPrimePower(q));
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut e = 0u32;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    if rest != 1 || p > u64::from(u32::MAX) {
        return Err(GfError::NotPrimePower(q));
    }
    Ok((p as u32, e))
}

impl Field {
    /// Builds GF(p^e) under the default order cap [`MAX_ORDER`].
    pub fn new(p: u32, e: u32) -> Result<Self, GfError> {
        Self::with_max_order(p, e, MAX_ORDER)
    }

    /// Builds GF(q) for a prime power `q`.
    pub fn from_order(q: u64) -> Result<Self, GfError> {
        let (p, e) = prime_power(q)?;
        Self::new(p, e)
    }

    /// Builds GF(p^e), rejecting orders above `max_order` (itself capped at
    /// [`MAX_ORDER`]).
    pub fn with_max_order(p: u32, e: u32, max_order: u32) -> Result<Self, GfError> {
        if !is_prime(u64::from(p)) {
            return Err(GfError::NotPrime(p));
        }
        if e == 0 {
            return Err(GfError::ZeroDegree);
        }
        let cap = max_order.min(MAX_ORDER);
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= cap)
            .ok_or(GfError::OrderTooLarge { p, e, cap })?;

        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, e)
        };

        let mut field = Field {
            p,
            e,
            q,
            modulus,
            primitive: Elem::ONE,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    fn build_tables(&mut self) {
        let order = (self.q - 1) as usize;
        let generator = (1..self.q)
            .find(|&g| self.multiplicative_order(g) == order)
            .expect("the multiplicative group of a finite field is cyclic");

        let mut exp = Vec::with_capacity(order);
        let mut log = vec![0u32; self.q as usize];
        let mut cur = 1u32;
        for i in 0..order {
            exp.push(cur as u16);
            log[cur as usize] = i as u32;
            cur = self.mul_slow(cur, generator);
        }
        self.primitive = Elem(generator as u16);
        self.exp = exp;
        self.log = log;
    }

    fn multiplicative_order(&self, g: u32) -> usize {
        let mut cur = g;
        let mut order = 1;
        while cur != 1 {
            cur = self.mul_slow(cur, g);
            order += 1;
        }
        order
    }

    /// Polynomial multiplication mod the modulus, used only to build the tables.
    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        let e = self.e as usize;
        let da = digits_of(a, p, e);
        let db = digits_of(b, p, e);
        let mut prod = vec![0u32; 2 * e];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((u64::from(prod[i + j]) + u64::from(x) * u64::from(y))
                    % u64::from(p)) as u32;
            }
        }
        poly_rem(&mut prod, &self.modulus, p);
        value_of(&prod[..e], p)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients `c_0 .. c_e` of the monic modulus. For prime fields this is `x`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn primitive_element(&self) -> Elem {
        self.primitive
    }

    /// `exp[i]` is the primitive element raised to `i`, for `0 <= i < q - 1`.
    pub fn exp_table(&self) -> &[u16] {
        &self.exp
    }

    /// `log[v]` is the discrete log of `v`; `log[0]` is unused.
    pub fn log_table(&self) -> &[u32] {
        &self.log
    }

    pub fn element(&self, value: u64) -> Result<Elem, GfError> {
        if value < u64::from(self.q) {
            Ok(Elem(value as u16))
        } else {
            Err(GfError::NotInField { value, q: self.q })
        }
    }

    /// All elements in ascending encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.q).map(|v| Elem(v as u16))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.q).map(|v| Elem(v as u16))
    }

    /// Little-endian base-`p` digits, always `e` of them.
    pub fn to_digits(&self, a: Elem) -> Vec<u32> {
        digits_of(a.value(), self.p, self.e as usize)
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<Elem, GfError> {
        if digits.len() != self.e as usize || digits.iter().any(|&d| d >= self.p) {
            return Err(GfError::BadDigits(digits.to_vec()));
        }
        Ok(Elem(value_of(digits, self.p) as u16))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.e == 1 {
            Elem(((a.value() + b.value()) % self.p) as u16)
        } else if self.p == 2 {
            Elem(a.0 ^ b.0)
        } else {
            let p = self.p;
            let (mut x, mut y) = (a.value(), b.value());
            let (mut out, mut place) = (0u32, 1u32);
            for _ in 0..self.e {
                out += ((x % p + y % p) % p) * place;
                place *= p;
                x /= p;
                y /= p;
            }
            Elem(out as u16)
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            a
        } else if self.e == 1 {
            Elem(((self.p - a.value()) % self.p) as u16)
        } else {
            let p = self.p;
            let mut x = a.value();
            let (mut out, mut place) = (0u32, 1u32);
            for _ in 0..self.e {
                out += ((p - x % p) % p) * place;
                place *= p;
                x /= p;
            }
            Elem(out as u16)
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        let n = self.q - 1;
        let s = self.log[a.idx()] + self.log[b.idx()];
        Elem(self.exp[(if s >= n { s - n } else { s }) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, GfError> {
        if a.is_zero() {
            return Err(GfError::DivisionByZero);
        }
        Ok(self.inv_nonzero(a))
    }

    #[inline]
    pub(crate) fn inv_nonzero(&self, a: Elem) -> Elem {
        debug_assert!(!a.is_zero());
        let n = self.q - 1;
        Elem(self.exp[((n - self.log[a.idx()]) % n) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^n` with `0^0 = 1`.
    pub fn pow(&self, a: Elem, n: u64) -> Elem {
        if n == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let order = u64::from(self.q - 1);
        let l = (u64::from(self.log[a.idx()]) * (n % order)) % order;
        Elem(self.exp[l as usize])
    }
}

fn digits_of(mut v: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(v % p);
        v /= p;
    }
    out
}

fn value_of(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Reduces `poly` (little-endian coefficients) modulo the monic `modulus` in place.
fn poly_rem(poly: &mut [u32], modulus: &[u32], p: u32) {
    let deg = modulus.len() - 1;
    for top in (deg..poly.len()).rev() {
        let c = poly[top];
        if c == 0 {
            continue;
        }
        for (i, &m) in modulus.iter().enumerate() {
            let idx = top - deg + i;
            poly[idx] = ((u64::from(poly[idx]) + u64::from(p - c) * u64::from(m))
                % u64::from(p)) as u32;
        }
    }
}

fn monic_from_code(code: u32, p: u32, degree: usize) -> Vec<u32> {
    let mut poly = digits_of(code, p, degree);
    poly.push(1);
    poly
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let degree = poly.len() - 1;
    for d in 1..=degree / 2 {
        for code in 0..p.pow(d as u32) {
            let divisor = monic_from_code(code, p, d);
            let mut rem = poly.to_vec();
            poly_rem(&mut rem, &divisor, p);
            if rem[..d].iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, e: u32) -> Vec<u32> {
    (0..p.pow(e))
        .map(|code| monic_from_code(code, p, e as usize))
        .find(|poly| is_irreducible(poly, p))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL_ORDERS: &[u64] = &[
        2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49,
        53, 59, 61, 64,
    ];

    fn el(v: u16) -> Elem {
        Elem::new(v)
    }

    #[test]
    fn prime_field_modulus_is_x() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.modulus(), &[0, 1]);
    }

    #[test]
    fn gf4_modulus() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn gf8_modulus_matches_root_search() {
        // A monic cubic over GF(2) is irreducible iff it has no root in GF(2).
        let smallest = (0u32..8)
            .find(|&code| {
                let c = [code & 1, (code >> 1) & 1, (code >> 2) & 1];
                (0..2u32).all(|x| (c[0] + c[1] * x + c[2] * x * x + x * x * x) % 2 != 0)
            })
            .unwrap();
        assert_eq!(smallest, 3);
        let f = Field::new(2, 3).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn small_examples() {
        let gf2 = Field::new(2, 1).unwrap();
        assert_eq!(gf2.add(el(1), el(1)), el(0));
        let gf5 = Field::new(5, 1).unwrap();
        assert_eq!(gf5.inv(el(2)).unwrap(), el(3));
        let gf4 = Field::new(2, 2).unwrap();
        assert_eq!(gf4.mul(el(2), el(2)), el(3));
    }

    #[test]
    fn enumeration() {
        let gf4 = Field::from_order(4).unwrap();
        let all: Vec<u32> = gf4.elements().map(Elem::value).collect();
        assert_eq!(all, [0, 1, 2, 3]);
        let gf9 = Field::from_order(9).unwrap();
        let mut v: Vec<Elem> = gf9.elements().collect();
        assert_eq!(v.len(), 9);
        v.dedup();
        assert_eq!(v.len(), 9);
    }

    #[test]
    fn errors() {
        assert_eq!(Field::new(4, 1), Err(GfError::NotPrime(4)));
        assert_eq!(Field::new(2, 0), Err(GfError::ZeroDegree));
        assert!(matches!(
            Field::new(2, 17),
            Err(GfError::OrderTooLarge { .. })
        ));
        assert!(matches!(
            Field::with_max_order(3, 3, 26),
            Err(GfError::OrderTooLarge { .. })
        ));
        let gf3 = Field::new(3, 1).unwrap();
        assert_eq!(gf3.inv(Elem::ZERO), Err(GfError::DivisionByZero));
        assert_eq!(gf3.div(Elem::ONE, Elem::ZERO), Err(GfError::DivisionByZero));
        assert!(gf3.element(3).is_err());
        assert_eq!(prime_power(12), Err(GfError::NotPrimePower(12)));
        assert_eq!(prime_power(1), Err(GfError::NotPrimePower(1)));
    }

    #[test]
    fn prime_power_factoring() {
        assert_eq!(prime_power(2), Ok((2, 1)));
        assert_eq!(prime_power(9), Ok((3, 2)));
        assert_eq!(prime_power(64), Ok((2, 6)));
        assert_eq!(prime_power(49), Ok((7, 2)));
        assert_eq!(prime_power(65537), Ok((65537, 1)));
    }

    #[test]
    fn tables_are_consistent() {
        for &q in SMALL_ORDERS {
            let f = Field::from_order(q).unwrap();
            let n = (f.order() - 1) as usize;
            assert_eq!(f.exp_table().len(), n);
            assert_eq!(f.exp_table()[0], 1);
            let mut seen = vec![false; f.order() as usize];
            for &x in f.exp_table() {
                assert!(x != 0 && !seen[x as usize]);
                seen[x as usize] = true;
            }
            for i in 0..n {
                for j in 0..n {
                    let a = f.exp_table()[i] as u32;
                    let b = f.exp_table()[j] as u32;
                    assert_eq!(f.mul_slow(a, b), f.exp_table()[(i + j) % n] as u32);
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for &q in SMALL_ORDERS {
            let f = Field::from_order(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, Elem::ZERO), a);
                assert_eq!(f.mul(a, Elem::ONE), a);
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(f.sub(a, b), b), a);
                    if !b.is_zero() {
                        assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
                    }
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_and_fermat() {
        for &q in SMALL_ORDERS {
            let f = Field::from_order(q).unwrap();
            for x in f.elements() {
                assert_eq!(f.pow(x, q), x);
                if !x.is_zero() {
                    assert_eq!(f.pow(x, q - 1), Elem::ONE);
                }
            }
            assert_eq!(f.pow(Elem::ZERO, 0), Elem::ONE);
        }
    }

    #[test]
    fn digit_round_trip() {
        for &q in SMALL_ORDERS {
            let f = Field::from_order(q).unwrap();
            for x in f.elements() {
                assert_eq!(f.from_digits(&f.to_digits(x)).unwrap(), x);
            }
        }
        let gf9 = Field::from_order(9).unwrap();
        assert!(gf9.from_digits(&[3, 0]).is_err());
        assert!(gf9.from_digits(&[1]).is_err());
    }

    #[test]
    fn largest_binary_field_builds() {
        let f = Field::new(2, 16).unwrap();
        assert_eq!(f.order(), 1 << 16);
        let a = Elem::new(0xBEEF);
        assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
    }
}
