//! Sparse multivariate polynomials with integer coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent vector of a monomial.
pub type Exps = Vec<u32>;

pub fn total_degree(e: &[u32]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    nvars: usize,
    terms: BTreeMap<Exps, BigInt>,
}

impl IntPoly {
    pub fn zero(nvars: usize) -> Self {
        IntPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c.into());
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, unit(nvars, i), 1)
    }

    pub fn monomial(nvars: usize, e: Exps, c: impl Into<BigInt>) -> Self {
        assert_eq!(e.len(), nvars, "exponent vector length");
        let mut p = Self::zero(nvars);
        p.add_term(e, c.into());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exps, BigInt)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exps, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &[u32]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, e: Exps, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Largest total degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| total_degree(e)).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        IntPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_truncated(other, usize::MAX)
    }

    /// Product keeping only terms of total degree at most `bound`.
    pub fn mul_truncated(&self, other: &Self, bound: usize) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut acc: BTreeMap<Exps, BigInt> = BTreeMap::new();
        for (a, ca) in &self.terms {
            let da = total_degree(a);
            for (b, cb) in &other.terms {
                if bound != usize::MAX && da + total_degree(b) > bound {
                    continue;
                }
                let e: Exps = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        IntPoly { nvars: self.nvars, terms: acc }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn truncate(&self, bound: usize) -> Self {
        IntPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(e, _)| total_degree(e) <= bound).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Substitute `x_i -> x'_{map[i]}` into a ring with `nvars` variables.
    pub fn specialize(&self, map: &[usize], nvars: usize) -> Self {
        assert_eq!(map.len(), self.nvars);
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            out.add_term(specialize_exps(e, map, nvars), c.clone());
        }
        out
    }

    /// Sum of the coefficients: the value at `(1, .., 1)`.
    pub fn value_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact quotient by `1 - x^m`, if it divides.
    pub fn div_one_minus(&self, m: &[u32]) -> Option<Self> {
        assert_eq!(m.len(), self.nvars);
        if m.iter().all(|&x| x == 0) {
            return None;
        }
        // Terms along each line `base + k m` telescope: q(base + k m) is the
        // prefix sum of the coefficients up to k, and the full sum must vanish.
        let mut lines: BTreeMap<Exps, BTreeMap<u32, BigInt>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e.iter().zip(m).filter(|(_, &mi)| mi > 0).map(|(&ei, &mi)| ei / mi).min().unwrap_or(0);
            let base: Exps = e.iter().zip(m).map(|(&ei, &mi)| ei - k * mi).collect();
            lines.entry(base).or_default().insert(k, c.clone());
        }
        let mut q = Self::zero(self.nvars);
        for (base, coeffs) in lines {
            let top = *coeffs.keys().next_back().expect("nonempty line");
            let mut run = BigInt::zero();
            for k in 0..=top {
                if let Some(c) = coeffs.get(&k) {
                    run += c;
                }
                if k < top {
                    let e: Exps = base.iter().zip(m).map(|(&b, &mi)| b + k * mi).collect();
                    q.add_term(e, run.clone());
                }
            }
            if !run.is_zero() {
                return None;
            }
        }
        Some(q)
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        let mut s = String::new();
        if self.terms.is_empty() {
            s.push('0');
            return s;
        }
        // Highest total degree first, reads like a textbook polynomial.
        let mut items: Vec<(&Exps, &BigInt)> = self.terms.iter().collect();
        items.sort_by(|a, b| total_degree(b.0).cmp(&total_degree(a.0)).then_with(|| b.0.cmp(a.0)));
        for (i, (e, c)) in items.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let is_const = e.iter().all(|&x| x == 0);
            if is_const || !mag.is_one() {
                let _ = write!(s, "{mag}");
                if !is_const {
                    s.push('*');
                }
            }
            let mut first = true;
            for (j, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if !first {
                    s.push('*');
                }
                first = false;
                s.push_str(&names[j]);
                if x > 1 {
                    let _ = write!(s, "^{x}");
                }
            }
        }
        s
    }
}

pub(crate) fn unit(nvars: usize, i: usize) -> Exps {
    let mut e = vec![0; nvars];
    e[i] = 1;
    e
}

pub(crate) fn specialize_exps(e: &[u32], map: &[usize], nvars: usize) -> Exps {
    let mut out = vec![0; nvars];
    for (i, &x) in e.iter().enumerate() {
        out[map[i]] += x;
    }
    out
}

/// Truncated power series: the coefficients of `terms / (1 - x^m)`, keeping
/// total degree at most `bound`.
pub(crate) fn divide_series_one_minus(terms: &mut BTreeMap<Exps, BigInt>, m: &[u32], bound: usize) {
    // Lexicographic order visits a - m before a, so each coefficient is final
    // by the time it is pushed forward.
    let dm = total_degree(m);
    let mut cursor = match terms.keys().next() {
        Some(k) => k.clone(),
        None => return,
    };
    loop {
        let c = terms[&cursor].clone();
        if total_degree(&cursor) + dm <= bound && !c.is_zero() {
            let next: Exps = cursor.iter().zip(m).map(|(a, b)| a + b).collect();
            *terms.entry(next).or_insert_with(BigInt::zero) += c;
        }
        match terms.range((core::ops::Bound::Excluded(cursor.clone()), core::ops::Bound::Unbounded)).next() {
            Some((k, _)) => cursor = k.clone(),
            None => break,
        }
    }
    terms.retain(|_, c| !c.is_zero());
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| alloc::format!("x{}", i + 1)).collect();
        f.write_str(&self.fmt_with(&names))
    }
}
