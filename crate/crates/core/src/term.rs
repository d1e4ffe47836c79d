//! Nonassociative terms over the free generators and their canonical forms.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::monomial::{enumerate_basis, Multidegree};
use crate::poly::SuperPolynomial;
use crate::signature::{Generator, Parity, Signature};
use crate::text::{parse_generator, parse_tree, Tree};

/// A binary product tree. Parentheses matter: the product is not associative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Leaf(Generator),
    Node(Box<Term>, Box<Term>),
}

impl Term {
    pub fn node(a: Term, b: Term) -> Term {
        Term::Node(Box::new(a), Box::new(b))
    }

    pub fn degree(&self) -> usize {
        match self {
            Term::Leaf(_) => 1,
            Term::Node(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn parity(&self) -> Parity {
        match self {
            Term::Leaf(g) => g.parity,
            Term::Node(a, b) => a.parity() + b.parity(),
        }
    }

    pub fn leaves(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Generator>) {
        match self {
            Term::Leaf(g) => out.push(*g),
            Term::Node(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    pub fn check(&self, sig: &Signature) -> Result<()> {
        self.leaves().into_iter().try_for_each(|g| sig.check_generator(g))
    }

    /// Every tree shape with `n` leaves, leaves labelled from `labels`.
    pub fn all_of_degree(labels: &[Generator], n: usize) -> Vec<Term> {
        if n == 0 {
            return Vec::new();
        }
        if n == 1 {
            return labels.iter().map(|&g| Term::Leaf(g)).collect();
        }
        let mut out = Vec::new();
        for k in 1..n {
            let lefts = Term::all_of_degree(labels, k);
            let rights = Term::all_of_degree(labels, n - k);
            for a in &lefts {
                for b in &rights {
                    out.push(Term::node(a.clone(), b.clone()));
                }
            }
        }
        out
    }

    /// A random term with exactly `n` leaves: uniform split points, uniform generators.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, sig: &Signature, n: usize) -> Term {
        assert!(n >= 1);
        let gens = sig.generators();
        fn go<R: Rng + ?Sized>(rng: &mut R, gens: &[Generator], n: usize) -> Term {
            if n == 1 {
                return Term::Leaf(gens[rng.gen_range(0..gens.len())]);
            }
            let k = rng.gen_range(1..n);
            Term::node(go(rng, gens, k), go(rng, gens, n - k))
        }
        go(rng, &gens, n)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Leaf(g) => write!(f, "{g}"),
            Term::Node(a, b) => write!(f, "({a} {b})"),
        }
    }
}

/// Parse a fully parenthesised term such as `(y1 (z1 y2))`.
pub fn parse_term(input: &str, sig: &Signature) -> Result<Term> {
    fn conv(t: Tree, sig: &Signature) -> Result<Term> {
        match t {
            Tree::Leaf(name, pos) => Ok(Term::Leaf(parse_generator(&name, pos, sig)?)),
            Tree::Node(a, b) => Ok(Term::node(conv(*a, sig)?, conv(*b, sig)?)),
        }
    }
    conv(parse_tree(input)?, sig)
}

/// Evaluate `t` in the tensor model: its canonical form.
pub fn normalize(t: &Term, sig: &Signature) -> Result<SuperPolynomial> {
    match t {
        Term::Leaf(g) => SuperPolynomial::generator(*sig, *g),
        Term::Node(a, b) => {
            // Generator operands take the cheaper one-sided path.
            match (&**a, &**b) {
                (Term::Leaf(g), _) => {
                    sig.check_generator(*g)?;
                    Ok(normalize(b, sig)?.left_mul_generator(*g))
                }
                (_, Term::Leaf(g)) => {
                    sig.check_generator(*g)?;
                    Ok(normalize(a, sig)?.right_mul_generator(*g))
                }
                _ => normalize(a, sig)?.try_mul(&normalize(b, sig)?),
            }
        }
    }
}

/// Dimension of the multilinear component in `y1..y_{p'}` and `z1..z_{q'}`,
/// by direct enumeration of basis monomials.
pub fn multilinear_dimension(sig: &Signature, p_sub: usize, q_sub: usize) -> Result<usize> {
    if p_sub > sig.p || q_sub > sig.q {
        return Err(Error::InvalidMultidegree(alloc::format!(
            "({p_sub}, {q_sub}) exceeds the signature ({}, {})",
            sig.p,
            sig.q
        )));
    }
    if p_sub + q_sub == 0 {
        return Err(Error::InvalidMultidegree("at least one variable is required".into()));
    }
    let mut y = vec![0u32; sig.p];
    let mut z = vec![0u32; sig.q];
    y[..p_sub].iter_mut().for_each(|e| *e = 1);
    z[..q_sub].iter_mut().for_each(|e| *e = 1);
    Ok(enumerate_basis(sig, &Multidegree::new(y, z))?.len())
}
