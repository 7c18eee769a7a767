//! Arithmetic in GF(2^m) for odd m, in polynomial-basis bitmask form.
//!
//! An element is a polynomial over GF(2) of degree < m, stored as the bitmask
//! of its coefficients (bit i = coefficient of x^i). Addition is XOR;
//! multiplication is carryless multiplication reduced by a fixed irreducible
//! modulus of degree m. On top of the plain arithmetic this module carries the
//! twist `theta`: x -> x^(2^(n+1)) where m = 2n+1, the square root of the
//! Frobenius in the sense that theta(theta(x)) = x^2.
//!
//! The modulus for each m is the lexicographically least irreducible
//! polynomial of degree m (as a bitmask integer), verified irreducible at
//! construction; it is part of every serialized field so results are
//! reproducible. Fields are cheap to clone: the log/exp/theta tables are
//! shared behind an `Arc`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field degree. Desk scale stops at GF(2^15).
pub const MAX_M: u32 = 15;

// ---------------------------------------------------------------------------
// GF(2)[x] helpers on bitmasks
// ---------------------------------------------------------------------------

fn poly_degree(f: u64) -> i32 {
    63 - f.leading_zeros() as i32
}

/// Carryless product of two GF(2) polynomials.
fn poly_mul(a: u64, b: u64) -> u64 {
    let mut acc = 0u64;
    let mut a = a;
    let mut shift = 0;
    while a != 0 {
        if a & 1 == 1 {
            acc ^= b << shift;
        }
        a >>= 1;
        shift += 1;
    }
    acc
}

/// Remainder of a modulo f (f nonzero).
fn poly_rem(mut a: u64, f: u64) -> u64 {
    let df = poly_degree(f);
    while poly_degree(a) >= df {
        a ^= f << (poly_degree(a) - df);
    }
    a
}

/// Exhaustive trial-division irreducibility test, adequate for degree <= 15.
pub fn poly_is_irreducible(f: u64) -> bool {
    let d = poly_degree(f);
    if d < 1 {
        return false;
    }
    if d == 1 {
        return true;
    }
    for g in 2u64..(1 << (d / 2 + 1)) {
        if poly_degree(g) >= 1 && poly_rem(f, g) == 0 {
            return false;
        }
    }
    true
}

/// Lexicographically least irreducible polynomial of the given degree.
pub fn least_irreducible(m: u32) -> u64 {
    ((1u64 << m)..(1u64 << (m + 1)))
        .find(|&f| poly_is_irreducible(f))
        .expect("an irreducible polynomial of every degree exists")
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// ---------------------------------------------------------------------------
// Field elements
// ---------------------------------------------------------------------------

/// An element of GF(2^m), tagged with its field degree so that mixing
/// elements of different fields is caught as a usage error.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    bits: u16,
    m: u8,
}

impl FieldElement {
    /// Coefficient bitmask of the element.
    pub fn bits(self) -> u16 {
        self.bits
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gf{}:{:#x}", self.m, self.bits)
    }
}

// ---------------------------------------------------------------------------
// Field parameters
// ---------------------------------------------------------------------------

struct Tables {
    /// exp[i] = g^i for the least primitive element g, length 2*(2^m - 1)
    /// so that products of logs index without a reduction.
    exp: Vec<u16>,
    /// log[x] = i with g^i = x, for x != 0. log[0] is a sentinel.
    log: Vec<u32>,
    /// theta[x] = x^(2^(n+1)).
    theta: Vec<u16>,
}

/// Parameters of GF(2^m) for odd m: the modulus, the decomposition m = 2n+1,
/// and the twist exponent 2^(n+1).
#[derive(Clone)]
pub struct FieldParams {
    m: u32,
    n: u32,
    modulus: u64,
    theta_exp: u64,
    tables: Arc<Tables>,
}

impl PartialEq for FieldParams {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.modulus == other.modulus
    }
}
impl Eq for FieldParams {}

impl fmt::Debug for FieldParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldParams")
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl FieldParams {
    /// GF(2^m) with the canonical (lexicographically least irreducible) modulus.
    pub fn new(m: u32) -> Result<FieldParams> {
        Self::with_modulus(m, least_irreducible(Self::check_degree(m)?))
    }

    /// GF(2^m) with an explicit modulus; the modulus must be irreducible of
    /// degree exactly m.
    pub fn with_modulus(m: u32, modulus: u64) -> Result<FieldParams> {
        Self::check_degree(m)?;
        if poly_degree(modulus) != m as i32 {
            return Err(Error::usage(format!(
                "modulus {modulus:#b} does not have degree {m}"
            )));
        }
        if !poly_is_irreducible(modulus) {
            return Err(Error::usage(format!(
                "modulus {modulus:#b} is reducible over GF(2)"
            )));
        }
        let n = (m - 1) / 2;
        let size = 1u32 << m;
        let ord = (size - 1) as u64;

        let mul_raw = |a: u16, b: u16| -> u16 {
            poly_rem(poly_mul(a as u64, b as u64), modulus) as u16
        };

        // Least primitive element: smallest bitmask of multiplicative order 2^m - 1.
        let factors = prime_factors(ord);
        let pow_raw = |base: u16, mut k: u64| -> u16 {
            let mut acc = 1u16;
            let mut sq = base;
            while k > 0 {
                if k & 1 == 1 {
                    acc = mul_raw(acc, sq);
                }
                sq = mul_raw(sq, sq);
                k >>= 1;
            }
            acc
        };
        let generator = (1..size)
            .map(|b| b as u16)
            .find(|&g| factors.iter().all(|&l| pow_raw(g, ord / l) != 1))
            .expect("the multiplicative group of a finite field is cyclic");

        let mut exp = vec![0u16; (2 * ord.max(1)) as usize];
        let mut log = vec![u32::MAX; size as usize];
        let mut acc = 1u16;
        for i in 0..ord as usize {
            exp[i] = acc;
            exp[i + ord as usize] = acc;
            log[acc as usize] = i as u32;
            acc = mul_raw(acc, generator);
        }
        debug_assert_eq!(acc, 1, "generator order must be 2^m - 1");

        let theta_exp = 1u64 << (n + 1);
        let mut theta = vec![0u16; size as usize];
        for x in 0..size as usize {
            let mut t = x as u16;
            for _ in 0..(n + 1) {
                t = mul_raw(t, t);
            }
            theta[x] = t;
        }

        Ok(FieldParams {
            m,
            n,
            modulus,
            theta_exp,
            tables: Arc::new(Tables { exp, log, theta }),
        })
    }

    fn check_degree(m: u32) -> Result<u32> {
        if m == 0 || m > MAX_M || m % 2 == 0 {
            return Err(Error::usage(format!(
                "field degree must be odd with 1 <= m <= {MAX_M}, got {m}"
            )));
        }
        Ok(m)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// n in the decomposition m = 2n + 1.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The twist exponent 2^(n+1).
    pub fn theta_exp(&self) -> u64 {
        self.theta_exp
    }

    /// Number of field elements, 2^m.
    pub fn size(&self) -> u32 {
        1 << self.m
    }

    /// Order of the multiplicative group, 2^m - 1.
    pub fn mult_order(&self) -> u64 {
        (1u64 << self.m) - 1
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { bits: 0, m: self.m as u8 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { bits: 1, m: self.m as u8 }
    }

    /// The element with the given coefficient bitmask.
    pub fn element(&self, bits: u64) -> Result<FieldElement> {
        if bits >= self.size() as u64 {
            return Err(Error::usage(format!(
                "bitmask {bits} out of range for GF(2^{})",
                self.m
            )));
        }
        Ok(FieldElement { bits: bits as u16, m: self.m as u8 })
    }

    /// All 2^m elements in bitmask order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size() as u64).map(|b| FieldElement { bits: b as u16, m: self.m as u8 })
    }

    fn check(&self, x: FieldElement) -> u16 {
        assert_eq!(
            x.m as u32, self.m,
            "usage error: element of GF(2^{}) used with GF(2^{})",
            x.m, self.m
        );
        x.bits
    }

    fn wrap(&self, bits: u16) -> FieldElement {
        FieldElement { bits, m: self.m as u8 }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (a, b) = (self.check(a), self.check(b));
        self.wrap(a ^ b)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (a, b) = (self.check(a), self.check(b));
        if a == 0 || b == 0 {
            return self.zero();
        }
        let t = &self.tables;
        self.wrap(t.exp[(t.log[a as usize] + t.log[b as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        let a = self.check(a);
        if a == 0 {
            return Err(Error::domain("inverse of zero in GF(2^m)"));
        }
        let t = &self.tables;
        let ord = self.mult_order() as u32;
        Ok(self.wrap(t.exp[((ord - t.log[a as usize]) % ord) as usize]))
    }

    /// a^k, with the exponent reduced modulo 2^m - 1 for nonzero bases.
    /// 0^0 = 1, 0^k = 0 for k > 0; 0^k for k < 0 is a domain error.
    pub fn pow(&self, a: FieldElement, k: i64) -> Result<FieldElement> {
        let bits = self.check(a);
        if bits == 0 {
            return match k {
                0 => Ok(self.one()),
                k if k > 0 => Ok(self.zero()),
                _ => Err(Error::domain("negative power of zero in GF(2^m)")),
            };
        }
        let ord = self.mult_order() as i64;
        let k = k.rem_euclid(ord) as u64;
        let t = &self.tables;
        let e = (t.log[bits as usize] as u64 * k) % ord as u64;
        Ok(self.wrap(t.exp[e as usize]))
    }

    /// The twist x -> x^(2^(n+1)). A field automorphism with
    /// theta(theta(x)) = x^2.
    pub fn theta(&self, x: FieldElement) -> FieldElement {
        let bits = self.check(x);
        self.wrap(self.tables.theta[bits as usize])
    }

    /// The least element (by bitmask) of multiplicative order exactly 2^m - 1.
    pub fn primitive_element(&self) -> FieldElement {
        // exp[1] is the generator the tables were built from, which was the
        // least bitmask found in the ascending search.
        if self.mult_order() == 1 {
            return self.one();
        }
        self.wrap(self.tables.exp[1])
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: FieldElement) -> Result<u64> {
        let bits = self.check(a);
        if bits == 0 {
            return Err(Error::domain("zero has no multiplicative order"));
        }
        let ord = self.mult_order();
        let l = self.tables.log[bits as usize] as u64;
        Ok(ord / num_integer::gcd(ord, l))
    }

    /// Reference multiplication straight from the definition (carryless
    /// product reduced by the modulus); used as an oracle for the tables.
    pub fn mul_raw(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (a, b) = (self.check(a), self.check(b));
        self.wrap(poly_rem(poly_mul(a as u64, b as u64), self.modulus) as u16)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8() -> FieldParams {
        FieldParams::new(3).unwrap()
    }

    #[test]
    fn canonical_moduli_are_least_irreducible() {
        // Frozen from the exhaustive search; spot values (x, x^3+x+1,
        // x^5+x^2+1, x^7+x+1) agree with standard tables.
        let expected = [(1, 2), (3, 11), (5, 37), (7, 131), (9, 515), (11, 2053), (13, 8219), (15, 32771)];
        for (m, want) in expected {
            assert_eq!(FieldParams::new(m).unwrap().modulus(), want, "m={m}");
        }
    }

    #[test]
    fn gf8_examples() {
        let f = gf8();
        let t = f.element(0b10).unwrap();
        let t2 = f.element(0b100).unwrap();
        // t + t^2 = t^2 + t
        assert_eq!(f.add(t, t2).bits(), 0b110);
        // x^3 = x + 1 under the modulus, so t * t^2 = t + 1
        assert_eq!(f.mul(t, t2).bits(), 0b011);
        // identity and characteristic 2
        for x in f.elements() {
            assert_eq!(f.mul(x, f.one()), x);
            assert_eq!(f.add(x, x), f.zero());
            assert_eq!(f.add(x, f.zero()), x);
        }
        // theta(t) = t^4 = t^2 + t
        assert_eq!(f.theta(t).bits(), 0b110);
        assert_eq!(f.theta(f.zero()), f.zero());
        assert_eq!(f.theta(f.one()), f.one());
        // primitive element of GF(8) is t itself
        assert_eq!(f.primitive_element(), t);
        assert_eq!(f.element_order(t).unwrap(), 7);
    }

    #[test]
    fn primitive_element_orders() {
        // GF(2): the only nonzero element
        let f2 = FieldParams::new(1).unwrap();
        assert_eq!(f2.primitive_element(), f2.one());
        // GF(32): order 31 by direct powering
        let f32 = FieldParams::new(5).unwrap();
        let g = f32.primitive_element();
        let mut acc = f32.one();
        let mut order = 0;
        loop {
            acc = f32.mul(acc, g);
            order += 1;
            if acc == f32.one() {
                break;
            }
        }
        assert_eq!(order, 31);
    }

    #[test]
    fn pow_and_inv() {
        for m in [1u32, 3, 5, 7] {
            let f = FieldParams::new(m).unwrap();
            let ord = f.mult_order() as i64;
            for x in f.elements().skip(1) {
                assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
                assert_eq!(f.pow(x, ord).unwrap(), f.one());
                assert_eq!(f.pow(x, -1).unwrap(), f.inv(x).unwrap());
            }
        }
        let f = gf8();
        assert!(matches!(f.inv(f.zero()), Err(Error::Domain(_))));
        assert!(matches!(f.pow(f.zero(), -2), Err(Error::Domain(_))));
        assert_eq!(f.pow(f.zero(), 0).unwrap(), f.one());
        assert_eq!(f.pow(f.zero(), 5).unwrap(), f.zero());
    }

    #[test]
    fn field_axioms_exhaustive_small_m() {
        for m in [1u32, 3, 5] {
            let f = FieldParams::new(m).unwrap();
            let all: Vec<_> = f.elements().collect();
            for &x in &all {
                for &y in &all {
                    assert_eq!(f.mul(x, y), f.mul(y, x));
                    assert_eq!(f.mul(x, y), f.mul_raw(x, y));
                    for &z in &all {
                        assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                        assert_eq!(
                            f.mul(x, f.add(y, z)),
                            f.add(f.mul(x, y), f.mul(x, z))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_and_theta_exhaustive() {
        for m in [1u32, 3, 5, 7] {
            let f = FieldParams::new(m).unwrap();
            for x in f.elements() {
                // x^(2^m) = x
                assert_eq!(f.pow(x, 1 << m).unwrap(), x);
                // theta o theta = squaring
                assert_eq!(f.theta(f.theta(x)), f.mul(x, x));
            }
            // theta is an automorphism
            for x in f.elements() {
                for y in f.elements() {
                    assert_eq!(f.theta(f.mul(x, y)), f.mul(f.theta(x), f.theta(y)));
                    assert_eq!(f.theta(f.add(x, y)), f.add(f.theta(x), f.theta(y)));
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "usage error")]
    fn mixing_fields_panics() {
        let f3 = FieldParams::new(3).unwrap();
        let f5 = FieldParams::new(5).unwrap();
        let a = f3.element(1).unwrap();
        let b = f5.element(1).unwrap();
        let _ = f3.add(a, b);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(FieldParams::new(2).is_err());
        assert!(FieldParams::new(0).is_err());
        assert!(FieldParams::new(17).is_err());
        // x^3 + 1 = (x+1)(x^2+x+1) is reducible
        assert!(FieldParams::with_modulus(3, 0b1001).is_err());
        assert!(FieldParams::with_modulus(3, 0b10001).is_err());
    }

    proptest::proptest! {
        #[test]
        fn table_mul_matches_raw_large_m(a in 0u64..(1 << 13), b in 0u64..(1 << 13)) {
            let f = FieldParams::new(13).unwrap();
            let (x, y) = (f.element(a).unwrap(), f.element(b).unwrap());
            proptest::prop_assert_eq!(f.mul(x, y), f.mul_raw(x, y));
        }

        #[test]
        fn theta_automorphism_large_m(a in 0u64..(1 << 15), b in 0u64..(1 << 15)) {
            let f = FieldParams::new(15).unwrap();
            let (x, y) = (f.element(a).unwrap(), f.element(b).unwrap());
            proptest::prop_assert_eq!(f.theta(f.mul(x, y)), f.mul(f.theta(x), f.theta(y)));
            proptest::prop_assert_eq!(f.theta(f.theta(x)), f.mul(x, x));
        }

        #[test]
        fn inverses_large_m(a in 1u64..(1 << 11)) {
            let f = FieldParams::new(11).unwrap();
            let x = f.element(a).unwrap();
            proptest::prop_assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
        }
    }
}
