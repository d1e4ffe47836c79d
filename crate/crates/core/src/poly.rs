use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::Result;
use crate::field::Scalar;
use crate::monomial::{mul_basis, BasisMonomial, Multidegree};
use crate::signature::{Generator, Parity, Signature};

/// Parity of a polynomial as a whole.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyParity {
    Even,
    Odd,
    Mixed,
}

/// A finite linear combination of basis monomials with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperPolynomial {
    sig: Signature,
    terms: BTreeMap<BasisMonomial, Scalar>,
}

impl SuperPolynomial {
    pub fn zero(sig: Signature) -> Self {
        SuperPolynomial { sig, terms: BTreeMap::new() }
    }

    pub fn generator(sig: Signature, g: Generator) -> Result<Self> {
        sig.check_generator(g)?;
        Ok(Self::monomial(sig, BasisMonomial::Gen(g), sig.field.one()))
    }

    /// Single term; a zero coefficient gives the zero polynomial. Does not validate `m`.
    pub fn monomial(sig: Signature, m: BasisMonomial, c: Scalar) -> Self {
        let mut p = Self::zero(sig);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (BasisMonomial, Scalar)>) -> Result<Self> {
        let mut p = Self::zero(sig);
        for (m, c) in terms {
            m.check(&sig)?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&BasisMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &BasisMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: BasisMonomial, c: Scalar) {
        let c = self.sig.field.reduce(c);
        if c.is_zero() {
            return;
        }
        let field = self.sig.field;
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = field.add(e.get(), &c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.sig.ensure_same(&other.sig)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.sig);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), self.sig.field.mul(a, c));
        }
        out
    }

    fn neg_ref(&self) -> Self {
        let field = self.sig.field;
        SuperPolynomial { sig: self.sig, terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect() }
    }

    /// The product `self * other`, bilinear over the monomial rule.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.sig.ensure_same(&other.sig)?;
        let field = self.sig.field;
        let mut out = Self::zero(self.sig);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((neg, m)) = mul_basis(a, b, &self.sig) {
                    out.add_term(m, field.signed(field.mul(ca, cb), neg));
                }
            }
        }
        Ok(out)
    }

    /// Left multiplication by a generator; cheaper than a full product.
    pub fn left_mul_generator(&self, g: Generator) -> Self {
        let gm = BasisMonomial::Gen(g);
        let mut out = Self::zero(self.sig);
        for (m, c) in &self.terms {
            if let Some((neg, r)) = mul_basis(&gm, m, &self.sig) {
                out.add_term(r, self.sig.field.signed(c.clone(), neg));
            }
        }
        out
    }

    pub fn right_mul_generator(&self, g: Generator) -> Self {
        let gm = BasisMonomial::Gen(g);
        let mut out = Self::zero(self.sig);
        for (m, c) in &self.terms {
            if let Some((neg, r)) = mul_basis(m, &gm, &self.sig) {
                out.add_term(r, self.sig.field.signed(c.clone(), neg));
            }
        }
        out
    }

    /// The zero polynomial reports even.
    pub fn parity(&self) -> PolyParity {
        let mut seen = [false; 2];
        for m in self.terms.keys() {
            seen[m.parity().bit() as usize] = true;
        }
        match seen {
            [_, false] => PolyParity::Even,
            [false, true] => PolyParity::Odd,
            [true, true] => PolyParity::Mixed,
        }
    }

    /// `Some(parity)` when the polynomial is homogeneous in parity.
    pub fn homogeneous_parity(&self) -> Option<Parity> {
        match self.parity() {
            PolyParity::Even => Some(Parity::Even),
            PolyParity::Odd => Some(Parity::Odd),
            PolyParity::Mixed => None,
        }
    }

    /// Largest total degree of a term; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(BasisMonomial::degree).max().unwrap_or(0)
    }

    /// The common multidegree of all terms, if there is one.
    pub fn multidegree(&self) -> Option<Multidegree> {
        let mut it = self.terms.keys().map(|m| m.multidegree(&self.sig));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Split into multihomogeneous components.
    pub fn components(&self) -> BTreeMap<Multidegree, SuperPolynomial> {
        let mut out: BTreeMap<Multidegree, SuperPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.multidegree(&self.sig))
                .or_insert_with(|| Self::zero(self.sig))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn monomials(&self) -> Vec<BasisMonomial> {
        self.terms.keys().cloned().collect()
    }
}

// Operator forms panic on a signature mismatch; use the `try_*` methods to get an error.

impl Add for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn add(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self.try_add(rhs).expect("signature mismatch")
    }
}

impl Sub for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn sub(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self.try_sub(rhs).expect("signature mismatch")
    }
}

impl Mul for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn mul(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self.try_mul(rhs).expect("signature mismatch")
    }
}

impl Neg for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        self.neg_ref()
    }
}
