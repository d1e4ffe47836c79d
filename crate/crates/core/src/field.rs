//! Coefficient fields: the rationals, or a prime field of odd characteristic.
//!
//! Every scalar is carried as a [`BigRational`]. In a prime field the value is
//! kept reduced to an integer in `0..c`, so equality stays structural.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn prime(c: u64) -> Result<Self> {
        if c == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if !is_prime(c) {
            return Err(Error::NotPrime(c));
        }
        Ok(Field::Prime(c))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(c) => *c,
        }
    }

    /// Map a rational into this field. Panics if the denominator vanishes mod `c`.
    pub fn reduce(&self, x: Scalar) -> Scalar {
        match self {
            Field::Rationals => x,
            Field::Prime(c) => {
                let c = BigInt::from(*c);
                let n = x.numer().mod_floor(&c);
                let d = x.denom().mod_floor(&c);
                assert!(!d.is_zero(), "denominator is not invertible in characteristic {c}");
                let inv = mod_inverse(&d, &c);
                BigRational::from_integer((n * inv).mod_floor(&c))
            }
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.reduce(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn one(&self) -> Scalar {
        BigRational::one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.reduce(-a)
    }

    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!a.is_zero(), "inverse of zero");
        self.reduce(a.recip())
    }

    /// Multiply by `(-1)^odd`.
    pub fn signed(&self, a: Scalar, odd: bool) -> Scalar {
        if odd {
            self.neg(&a)
        } else {
            a
        }
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one() || (-&e.gcd).is_one());
    let x = if e.gcd.is_negative() { -e.x } else { e.x };
    x.mod_floor(m)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
