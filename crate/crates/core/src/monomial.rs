//! Basis monomials of the tensor model and their products.
//!
//! A [`Factor`] is a monomial of the free super-commutative algebra: an
//! exponent vector over `y1..yp` and a strictly increasing list of odd indices
//! (each `z_j` squares to zero). A [`TensorMonomial`] is `u (x) v` with both
//! factors of positive degree. Together with the generators these form a basis
//! of the free bicommutative superalgebra.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::signature::{Generator, Parity, Signature};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factor {
    /// Exponent of `y_i` at position `i - 1`.
    pub y: Vec<u32>,
    /// Odd indices present, strictly increasing, 1-based.
    pub z: Vec<usize>,
}

impl Factor {
    pub fn one(sig: &Signature) -> Self {
        Factor { y: vec![0; sig.p], z: Vec::new() }
    }

    pub fn from_generator(g: Generator, sig: &Signature) -> Self {
        let mut f = Factor::one(sig);
        match g.parity {
            Parity::Even => f.y[g.index - 1] = 1,
            Parity::Odd => f.z.push(g.index),
        }
        f
    }

    /// Build a factor from an arbitrary word of generators, sorting the odd
    /// letters. Returns the reordering sign (`true` = negative), or `None`
    /// when an odd generator repeats.
    pub fn from_word(word: &[Generator], sig: &Signature) -> Option<(bool, Factor)> {
        let mut f = Factor::one(sig);
        let mut odd = Vec::new();
        for g in word {
            match g.parity {
                Parity::Even => f.y[g.index - 1] += 1,
                Parity::Odd => odd.push(g.index),
            }
        }
        let mut neg = false;
        // Insertion sort; each adjacent transposition of odd letters flips the sign.
        for i in 1..odd.len() {
            let mut j = i;
            while j > 0 && odd[j - 1] >= odd[j] {
                if odd[j - 1] == odd[j] {
                    return None;
                }
                odd.swap(j - 1, j);
                neg = !neg;
                j -= 1;
            }
        }
        f.z = odd;
        Some((neg, f))
    }

    pub fn degree(&self) -> usize {
        self.y.iter().map(|&e| e as usize).sum::<usize>() + self.z.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree() == 0
    }

    pub fn parity(&self) -> Parity {
        Parity::from_bit(self.z.len() % 2 == 1)
    }

    /// The product `self * other` in the free super-commutative algebra.
    /// `None` if an odd index collides; otherwise the sign flag and result.
    pub fn mul(&self, other: &Factor) -> Option<(bool, Factor)> {
        let y = self.y.iter().zip(&other.y).map(|(a, b)| a + b).collect();
        let mut z = Vec::with_capacity(self.z.len() + other.z.len());
        let (mut i, mut j) = (0, 0);
        let mut inversions = 0usize;
        while i < self.z.len() && j < other.z.len() {
            match self.z[i].cmp(&other.z[j]) {
                core::cmp::Ordering::Less => {
                    z.push(self.z[i]);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    // other.z[j] moves past every remaining odd letter of self.
                    inversions += self.z.len() - i;
                    z.push(other.z[j]);
                    j += 1;
                }
                core::cmp::Ordering::Equal => return None,
            }
        }
        z.extend_from_slice(&self.z[i..]);
        z.extend_from_slice(&other.z[j..]);
        Some((inversions % 2 == 1, Factor { y, z }))
    }

    /// Componentwise divisibility in the commutative monoid (odd letters as a set).
    pub fn divides(&self, other: &Factor) -> bool {
        self.y.iter().zip(&other.y).all(|(a, b)| a <= b) && self.z.iter().all(|j| other.z.binary_search(j).is_ok())
    }

    /// Letters of `self`, even ones first, in index order.
    pub fn letters(&self) -> Vec<Generator> {
        let mut out = Vec::with_capacity(self.degree());
        for (i, &e) in self.y.iter().enumerate() {
            for _ in 0..e {
                out.push(Generator::y(i + 1));
            }
        }
        out.extend(self.z.iter().map(|&j| Generator::z(j)));
        out
    }

    /// Letters of `other` not accounted for by `self`; assumes `self | other`.
    pub fn quotient_letters(&self, other: &Factor) -> Vec<Generator> {
        let mut out = Vec::new();
        for (i, (&a, &b)) in self.y.iter().zip(&other.y).enumerate() {
            for _ in a..b {
                out.push(Generator::y(i + 1));
            }
        }
        out.extend(other.z.iter().filter(|j| self.z.binary_search(j).is_err()).map(|&j| Generator::z(j)));
        out
    }

    pub(crate) fn contains(&self, g: Generator) -> bool {
        match g.parity {
            Parity::Even => self.y.get(g.index - 1).is_some_and(|&e| e > 0),
            Parity::Odd => self.z.binary_search(&g.index).is_ok(),
        }
    }

    fn fits(&self, sig: &Signature) -> bool {
        self.y.len() == sig.p && self.z.windows(2).all(|w| w[0] < w[1]) && self.z.iter().all(|&j| j >= 1 && j <= sig.q)
    }
}

/// `left (x) right`, both factors of positive degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorMonomial {
    pub left: Factor,
    pub right: Factor,
}

impl TensorMonomial {
    pub fn new(left: Factor, right: Factor) -> Result<Self> {
        if left.is_one() || right.is_one() {
            return Err(Error::Domain("both tensor factors must have positive degree".into()));
        }
        Ok(TensorMonomial { left, right })
    }

    pub fn degree(&self) -> usize {
        self.left.degree() + self.right.degree()
    }

    pub fn parity(&self) -> Parity {
        self.left.parity() + self.right.parity()
    }
}

/// A basis element: a free generator or a tensor monomial.
///
/// The derived order puts generators first and compares tensors
/// lexicographically on `(yu, zu, yv, zv)`; this is the storage and
/// enumeration order, not a monomial order for reduction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisMonomial {
    Gen(Generator),
    Tensor(TensorMonomial),
}

impl BasisMonomial {
    pub fn degree(&self) -> usize {
        match self {
            BasisMonomial::Gen(_) => 1,
            BasisMonomial::Tensor(t) => t.degree(),
        }
    }

    pub fn parity(&self) -> Parity {
        match self {
            BasisMonomial::Gen(g) => g.parity,
            BasisMonomial::Tensor(t) => t.parity(),
        }
    }

    pub fn multidegree(&self, sig: &Signature) -> Multidegree {
        let mut md = Multidegree::zero(sig);
        match self {
            BasisMonomial::Gen(g) => md.bump(*g),
            BasisMonomial::Tensor(t) => {
                for f in [&t.left, &t.right] {
                    for (acc, e) in md.y.iter_mut().zip(&f.y) {
                        *acc += e;
                    }
                    for &j in &f.z {
                        md.z[j - 1] += 1;
                    }
                }
            }
        }
        md
    }

    pub fn as_tensor(&self) -> Option<&TensorMonomial> {
        match self {
            BasisMonomial::Tensor(t) => Some(t),
            BasisMonomial::Gen(_) => None,
        }
    }

    pub fn check(&self, sig: &Signature) -> Result<()> {
        let ok = match self {
            BasisMonomial::Gen(g) => return sig.check_generator(*g),
            BasisMonomial::Tensor(t) => t.left.fits(sig) && t.right.fits(sig) && !t.left.is_one() && !t.right.is_one(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }
}

/// Degree in each generator: `y` over `y1..yp`, `z` over `z1..zq`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multidegree {
    pub y: Vec<u32>,
    pub z: Vec<u32>,
}

impl Multidegree {
    pub fn zero(sig: &Signature) -> Self {
        Multidegree { y: vec![0; sig.p], z: vec![0; sig.q] }
    }

    pub fn new(y: Vec<u32>, z: Vec<u32>) -> Self {
        Multidegree { y, z }
    }

    pub fn total(&self) -> usize {
        self.y.iter().chain(&self.z).map(|&e| e as usize).sum()
    }

    pub fn bump(&mut self, g: Generator) {
        match g.parity {
            Parity::Even => self.y[g.index - 1] += 1,
            Parity::Odd => self.z[g.index - 1] += 1,
        }
    }

    pub fn check(&self, sig: &Signature) -> Result<()> {
        if self.y.len() != sig.p || self.z.len() != sig.q {
            return Err(Error::InvalidMultidegree(format!(
                "expected {} even and {} odd entries, got {} and {}",
                sig.p,
                sig.q,
                self.y.len(),
                self.z.len()
            )));
        }
        Ok(())
    }

    /// All multidegrees of the given total degree whose odd entries are at most 2
    /// (larger odd degrees always give an empty component).
    pub fn all_of_total(sig: &Signature, total: usize) -> Vec<Multidegree> {
        let slots = sig.p + sig.q;
        let mut out = Vec::new();
        let mut cur = vec![0u32; slots];
        fn go(i: usize, left: usize, p: usize, cur: &mut Vec<u32>, out: &mut Vec<Multidegree>) {
            if i == cur.len() {
                if left == 0 {
                    out.push(Multidegree { y: cur[..p].to_vec(), z: cur[p..].to_vec() });
                }
                return;
            }
            let cap = if i < p { left } else { left.min(2) };
            for e in 0..=cap {
                cur[i] = e as u32;
                go(i + 1, left - e, p, cur, out);
            }
            cur[i] = 0;
        }
        go(0, total, sig.p, &mut cur, &mut out);
        out
    }
}

/// Product of two basis monomials, ignoring the coefficient field.
/// `None` means the product is zero; otherwise the sign flag and the monomial.
pub(crate) fn mul_basis(a: &BasisMonomial, b: &BasisMonomial, sig: &Signature) -> Option<(bool, BasisMonomial)> {
    use BasisMonomial::{Gen, Tensor};
    let (neg, left, right) = match (a, b) {
        (Gen(x), Gen(w)) => (false, Factor::from_generator(*x, sig), Factor::from_generator(*w, sig)),
        (Gen(x), Tensor(t)) => {
            let (s, u) = Factor::from_generator(*x, sig).mul(&t.left)?;
            (s, u, t.right.clone())
        }
        (Tensor(t), Gen(x)) => {
            let (s, v) = t.right.mul(&Factor::from_generator(*x, sig))?;
            (s, t.left.clone(), v)
        }
        (Tensor(t1), Tensor(t2)) => {
            // (u1 (x) v1)(u2 (x) v2) = (-1)^{|v1|(|u2|+|v2|)} u1u2 (x) v2v1
            let rule = t1.right.parity().is_odd() && t2.parity().is_odd();
            let (s1, u) = t1.left.mul(&t2.left)?;
            let (s2, v) = t2.right.mul(&t1.right)?;
            (rule ^ s1 ^ s2, u, v)
        }
    };
    Some((neg, Tensor(TensorMonomial { left, right })))
}

/// `a * b` as `(coefficient, monomial)`; the coefficient is `+-1`, or `0` with
/// no monomial when an odd generator repeats inside one tensor factor.
pub fn mul_monomials(a: &BasisMonomial, b: &BasisMonomial, sig: &Signature) -> Result<(Scalar, Option<BasisMonomial>)> {
    a.check(sig)?;
    b.check(sig)?;
    Ok(match mul_basis(a, b, sig) {
        None => (sig.field.from_i64(0), None),
        Some((neg, m)) => (sig.field.from_i64(if neg { -1 } else { 1 }), Some(m)),
    })
}

/// Every basis monomial of exactly the given multidegree, sorted by the
/// derived order (lexicographic on `(yu, zu, yv, zv)`).
///
/// Components with an odd degree above 2 are zero and give an empty list.
pub fn enumerate_basis(sig: &Signature, md: &Multidegree) -> Result<Vec<BasisMonomial>> {
    md.check(sig)?;
    let total = md.total();
    if total == 0 {
        return Err(Error::InvalidMultidegree("total degree must be at least 1".into()));
    }
    if md.z.iter().any(|&l| l > 2) {
        return Ok(Vec::new());
    }
    if total == 1 {
        let g = match md.y.iter().position(|&k| k == 1) {
            Some(i) => Generator::y(i + 1),
            None => Generator::z(md.z.iter().position(|&l| l == 1).unwrap() + 1),
        };
        return Ok(vec![BasisMonomial::Gen(g)]);
    }

    let single: Vec<usize> = (0..sig.q).filter(|&j| md.z[j] == 1).map(|j| j + 1).collect();
    let double: Vec<usize> = (0..sig.q).filter(|&j| md.z[j] == 2).map(|j| j + 1).collect();

    let mut out = Vec::new();
    let mut yu = vec![0u32; sig.p];
    loop {
        let yv: Vec<u32> = md.y.iter().zip(&yu).map(|(k, a)| k - a).collect();
        for mask in 0u64..(1u64 << single.len()) {
            let mut zu = double.clone();
            let mut zv = double.clone();
            for (bit, &j) in single.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    zu.push(j);
                } else {
                    zv.push(j);
                }
            }
            zu.sort_unstable();
            zv.sort_unstable();
            let left = Factor { y: yu.clone(), z: zu };
            let right = Factor { y: yv.clone(), z: zv };
            if !left.is_one() && !right.is_one() {
                out.push(BasisMonomial::Tensor(TensorMonomial { left, right }));
            }
        }
        // Odometer over 0..=k_i for each even exponent of the left factor.
        let mut i = 0;
        while i < sig.p {
            if yu[i] < md.y[i] {
                yu[i] += 1;
                break;
            }
            yu[i] = 0;
            i += 1;
        }
        if i == sig.p {
            break;
        }
    }
    out.sort();
    Ok(out)
}

/// All basis monomials of total degree `n`, grouped by multidegree.
pub fn enumerate_degree(sig: &Signature, n: usize) -> Vec<BasisMonomial> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for md in Multidegree::all_of_total(sig, n) {
        out.extend(enumerate_basis(sig, &md).expect("multidegree is well formed"));
    }
    out
}
