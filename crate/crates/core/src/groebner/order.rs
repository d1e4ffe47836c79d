use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::monomial::{BasisMonomial, Factor};
use crate::poly::SuperPolynomial;
use crate::signature::{Generator, Parity, Signature};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Total degree, then the left factor, then the right factor, each compared
    /// as an exponent word from the highest-precedence generator down.
    Deglex,
    /// Generators below tensors; tensors compare the even exponents of the
    /// left factor, then of the right factor, then the odd ones, each read
    /// from the highest index down.
    Weight,
}

/// A total order on the basis monomials of one signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    sig: Signature,
    /// Generators in increasing precedence.
    precedence: Vec<Generator>,
}

impl MonomialOrder {
    /// Deglex with precedence `z1 < .. < zq < y1 < .. < yp`.
    pub fn deglex(sig: &Signature) -> Self {
        MonomialOrder { kind: OrderKind::Deglex, sig: *sig, precedence: default_precedence(sig) }
    }

    pub fn weight(sig: &Signature) -> Self {
        MonomialOrder { kind: OrderKind::Weight, sig: *sig, precedence: default_precedence(sig) }
    }

    pub fn new(kind: OrderKind, sig: &Signature) -> Self {
        match kind {
            OrderKind::Deglex => Self::deglex(sig),
            OrderKind::Weight => Self::weight(sig),
        }
    }

    /// Deglex with a caller-chosen generator precedence (increasing).
    pub fn deglex_with_precedence(sig: &Signature, precedence: Vec<Generator>) -> Result<Self> {
        let mut sorted = precedence.clone();
        sorted.sort();
        sorted.dedup();
        let mut all = sig.generators();
        all.sort();
        if sorted != all || precedence.len() != all.len() {
            return Err(Error::Domain(format!(
                "precedence must list each of the {} generators exactly once",
                all.len()
            )));
        }
        Ok(MonomialOrder { kind: OrderKind::Deglex, sig: *sig, precedence })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn precedence(&self) -> &[Generator] {
        &self.precedence
    }

    /// Monomials are assumed to belong to this order's signature.
    pub fn compare(&self, a: &BasisMonomial, b: &BasisMonomial) -> Ordering {
        match self.kind {
            OrderKind::Deglex => a.degree().cmp(&b.degree()).then_with(|| match (a, b) {
                (BasisMonomial::Gen(x), BasisMonomial::Gen(y)) => self.rank(*x).cmp(&self.rank(*y)),
                (BasisMonomial::Tensor(s), BasisMonomial::Tensor(t)) => {
                    self.word_cmp(&s.left, &t.left).then_with(|| self.word_cmp(&s.right, &t.right))
                }
                // Unequal degrees were already decided.
                _ => unreachable!("generator and tensor of equal degree"),
            }),
            OrderKind::Weight => match (a, b) {
                (BasisMonomial::Gen(x), BasisMonomial::Gen(y)) => weight_gen_key(*x).cmp(&weight_gen_key(*y)),
                (BasisMonomial::Gen(_), BasisMonomial::Tensor(_)) => Ordering::Less,
                (BasisMonomial::Tensor(_), BasisMonomial::Gen(_)) => Ordering::Greater,
                (BasisMonomial::Tensor(s), BasisMonomial::Tensor(t)) => rev_cmp(&s.left.y, &t.left.y)
                    .then_with(|| rev_cmp(&s.right.y, &t.right.y))
                    .then_with(|| rev_cmp(&z_bits(&s.left, self.sig.q), &z_bits(&t.left, self.sig.q)))
                    .then_with(|| rev_cmp(&z_bits(&s.right, self.sig.q), &z_bits(&t.right, self.sig.q))),
            },
        }
    }

    /// Leading monomial and its coefficient.
    pub fn lead(&self, f: &SuperPolynomial) -> Result<(BasisMonomial, Scalar)> {
        f.terms()
            .max_by(|a, b| self.compare(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    fn rank(&self, g: Generator) -> usize {
        self.precedence.iter().position(|&h| h == g).expect("generator of this signature")
    }

    fn word_cmp(&self, a: &Factor, b: &Factor) -> Ordering {
        for g in self.precedence.iter().rev() {
            let o = exponent(a, *g).cmp(&exponent(b, *g));
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    }
}

fn default_precedence(sig: &Signature) -> Vec<Generator> {
    (1..=sig.q).map(Generator::z).chain((1..=sig.p).map(Generator::y)).collect()
}

fn weight_gen_key(g: Generator) -> (u8, usize) {
    (u8::from(g.parity == Parity::Even), g.index)
}

fn exponent(f: &Factor, g: Generator) -> u32 {
    match g.parity {
        Parity::Even => f.y[g.index - 1],
        Parity::Odd => u32::from(f.z.binary_search(&g.index).is_ok()),
    }
}

fn z_bits(f: &Factor, q: usize) -> Vec<u32> {
    let mut bits = alloc::vec![0u32; q];
    for &j in &f.z {
        bits[j - 1] = 1;
    }
    bits
}

/// Lexicographic comparison reading from the last coordinate.
fn rev_cmp(a: &[u32], b: &[u32]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}
