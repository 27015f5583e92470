//! Scalars in the prime field F_p.
//!
//! Moduli are validated to be prime on construction and every value carries
//! its modulus, so mixing fields is caught immediately. All arithmetic is
//! exact integer arithmetic.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::Error;

/// Deterministic primality test by trial division. Fine for the small
/// moduli this crate works with.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    if n.is_multiple_of(3) {
        return n == 3;
    }
    let mut k = 5;
    while k * k <= n {
        if n.is_multiple_of(k) || n.is_multiple_of(k + 2) {
            return false;
        }
        k += 6;
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Largest accepted modulus: keeps every product of two reduced values
/// inside u64, so the arithmetic never wraps.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Shared modulus validation: prime and within the supported range.
pub(crate) fn validate_modulus(p: u64) -> Result<(), Error> {
    if !is_prime(p) {
        return Err(Error::InvalidModulus(p));
    }
    if p > MAX_MODULUS {
        return Err(Error::BoundExceeded {
            p,
            bound: MAX_MODULUS,
        });
    }
    Ok(())
}

/// An element of F_p, stored reduced to `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpScalar {
    value: u64,
    modulus: u64,
}

impl FpScalar {
    /// Reduces `value` mod `modulus`. Fails unless the modulus is a prime in
    /// the supported range.
    pub fn new(value: i64, modulus: u64) -> Result<Self, Error> {
        validate_modulus(modulus)?;
        Ok(Self::reduce(value, modulus))
    }

    /// Like [`FpScalar::new`] but assumes the modulus was validated by the
    /// caller.
    pub(crate) fn reduce(value: i64, modulus: u64) -> Self {
        let m = modulus as i64;
        FpScalar {
            value: value.rem_euclid(m) as u64,
            modulus,
        }
    }

    pub fn zero(modulus: u64) -> Result<Self, Error> {
        Self::new(0, modulus)
    }

    pub fn one(modulus: u64) -> Result<Self, Error> {
        Self::new(1, modulus)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = FpScalar {
            value: 1 % self.modulus,
            modulus: self.modulus,
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in F_{}", self.modulus);
        self.pow(self.modulus - 2)
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "scalars from different prime fields"
        );
    }
}

impl Add for FpScalar {
    type Output = FpScalar;

    fn add(self, rhs: Self) -> Self {
        self.check_same(&rhs);
        FpScalar {
            value: (self.value + rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Sub for FpScalar {
    type Output = FpScalar;

    fn sub(self, rhs: Self) -> Self {
        self.check_same(&rhs);
        FpScalar {
            value: (self.value + self.modulus - rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Mul for FpScalar {
    type Output = FpScalar;

    fn mul(self, rhs: Self) -> Self {
        self.check_same(&rhs);
        FpScalar {
            value: (self.value * rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Neg for FpScalar {
    type Output = FpScalar;

    fn neg(self) -> Self {
        FpScalar {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
