use core::fmt;

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn bit(self) -> u8 {
        self as u8
    }
}

impl core::ops::Add for Parity {
    type Output = Parity;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.is_odd() ^ rhs.is_odd())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A free generator `y_i` (even) or `z_j` (odd); `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub parity: Parity,
    pub index: usize,
}

impl Generator {
    pub fn y(index: usize) -> Self {
        Generator { parity: Parity::Even, index }
    }

    pub fn z(index: usize) -> Self {
        Generator { parity: Parity::Odd, index }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = if self.parity.is_odd() { 'z' } else { 'y' };
        write!(f, "{letter}{}", self.index)
    }
}

/// `p` even generators, `q` odd generators, and the coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
    pub field: Field,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        Self::with_field(p, q, Field::Rationals)
    }

    pub fn with_field(p: usize, q: usize, field: Field) -> Result<Self> {
        if p + q == 0 {
            return Err(Error::InvalidSignature("p + q must be at least 1".into()));
        }
        if let Field::Prime(c) = field {
            // Goes through the checked constructor so a hand-built Field::Prime(2) is caught.
            Field::prime(c)?;
        }
        Ok(Signature { p, q, field })
    }

    pub fn generators(&self) -> Vec<Generator> {
        (1..=self.p).map(Generator::y).chain((1..=self.q).map(Generator::z)).collect()
    }

    pub fn check_generator(&self, g: Generator) -> Result<()> {
        let bound = if g.parity.is_odd() { self.q } else { self.p };
        if g.index == 0 || g.index > bound {
            return Err(Error::GeneratorOutOfRange(format!("{g}")));
        }
        Ok(())
    }

    pub fn ensure_same(&self, other: &Signature) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }
}
