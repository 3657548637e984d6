//! Exact field coefficients: arbitrary-precision rationals or residues mod p.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest admissible prime modulus. Keeping p below 2^31 makes every
/// product of two residues fit in a u64 without overflow.
pub const MAX_PRIME: u32 = (1u32 << 31) - 1;

/// The coefficient field of a ring: the rationals or a prime field GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u32),
}

impl Field {
    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    /// Validates the descriptor: a prime modulus must be an actual prime
    /// below [`MAX_PRIME`].
    pub fn validate(&self) -> crate::error::Result<()> {
        match self {
            Field::Rationals => Ok(()),
            Field::Prime(p) => {
                if *p > MAX_PRIME {
                    return Err(crate::error::AlgebraError::InvalidParams(format!(
                        "modulus {p} exceeds 2^31 - 1"
                    )));
                }
                if !is_prime_u32(*p) {
                    return Err(crate::error::AlgebraError::InvalidParams(format!(
                        "modulus {p} is not prime"
                    )));
                }
                Ok(())
            }
        }
    }

    pub fn scalar_from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => {
                let p64 = *p as i64;
                let r = ((v % p64) + p64) % p64;
                Scalar::Mod {
                    val: r as u32,
                    p: *p,
                }
            }
        }
    }

    pub fn scalar_from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let p_big = BigInt::from(*p);
                let mut r = v % &p_big;
                if r.is_negative() {
                    r += &p_big;
                }
                let digits = r.to_u32_digits().1;
                Scalar::Mod {
                    val: digits.first().copied().unwrap_or(0),
                    p: *p,
                }
            }
        }
    }

    pub fn zero(&self) -> Scalar {
        self.scalar_from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.scalar_from_i64(1)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator (the `Ratio` normal form); residues lie in [0, p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { val: u32, p: u32 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { val, .. } => *val == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rationals,
            Scalar::Mod { p, .. } => Field::Prime(*p),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { val: a, p }, Scalar::Mod { val: b, p: q }) if p == q => {
                let s = (*a as u64 + *b as u64) % (*p as u64);
                Scalar::Mod { val: s as u32, p: *p }
            }
            _ => panic!("scalar arithmetic across different fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { val, p } => Scalar::Mod {
                val: if *val == 0 { 0 } else { p - val },
                p: *p,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { val: a, p }, Scalar::Mod { val: b, p: q }) if p == q => {
                let m = (*a as u64 * *b as u64) % (*p as u64);
                Scalar::Mod { val: m as u32, p: *p }
            }
            _ => panic!("scalar arithmetic across different fields"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Rat(a.recip())
            }
            Scalar::Mod { val, p } => {
                assert!(*val != 0, "inverse of zero");
                Scalar::Mod {
                    val: mod_inv(*val as u64, *p as u64) as u32,
                    p: *p,
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    /// Number of bits in the numerator/denominator, as fed to the
    /// coefficient-growth guard. Residues count as their modulus width.
    pub fn bit_size(&self) -> u64 {
        match self {
            Scalar::Rat(r) => r.numer().bits().max(r.denom().bits()),
            Scalar::Mod { .. } => 32,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { val, .. } => write!(f, "{val}"),
        }
    }
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) works and avoids signed bookkeeping.
    mod_pow(a, p - 2, p)
}

/// Deterministic Miller-Rabin, exact for all n < 2^32.
pub fn is_prime_u32(n: u32) -> bool {
    let n = n as u64;
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 7, 61] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = x * x % n;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_normal_form() {
        let f = Field::Rationals;
        let half = f.scalar_from_i64(1).div(&f.scalar_from_i64(2));
        let other = f.scalar_from_i64(-2).div(&f.scalar_from_i64(-4));
        assert_eq!(half, other);
        assert_eq!(half.to_string(), "1/2");
    }

    #[test]
    fn modular_wraparound() {
        let f = Field::Prime(13);
        assert_eq!(f.scalar_from_i64(-1), f.scalar_from_i64(12));
        let nine = f.scalar_from_i64(3).mul(&f.scalar_from_i64(3));
        assert_eq!(nine, f.scalar_from_i64(9));
        assert!(nine.mul(&nine.inv()).is_one());
    }

    #[test]
    fn large_modulus_products_do_not_overflow() {
        let p = 2_147_483_647u32; // 2^31 - 1, prime
        let f = Field::Prime(p);
        let a = f.scalar_from_i64(p as i64 - 1);
        let sq = a.mul(&a);
        assert_eq!(sq, f.scalar_from_i64(1));
    }

    #[test]
    fn primality() {
        assert!(is_prime_u32(2));
        assert!(is_prime_u32(13));
        assert!(is_prime_u32(1009));
        assert!(is_prime_u32(2_147_483_647));
        assert!(!is_prime_u32(1));
        assert!(!is_prime_u32(1001));
        assert!(Field::Prime(4).validate().is_err());
    }
}
