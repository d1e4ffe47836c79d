//! Independent oracles shared by the integration tests and the acceptance run.
//! None of these call the library's normal forms, orders or closed formulas.
#![allow(dead_code)]

use std::collections::BTreeMap;

use bicomm_core::characters::Partition;
use bicomm_core::monomial::enumerate_degree;
use bicomm_core::{BasisMonomial, Factor, Generator, Multidegree, Parity, Signature, SuperPolynomial, TensorMonomial, Term};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn sig(p: usize, q: usize) -> Signature {
    Signature::new(p, q).unwrap()
}

// ---------------------------------------------------------------- words

/// An unsorted element of the tensor model: a lone generator, or a pair of
/// words `left (x) right` with a sign.
#[derive(Debug, Clone)]
pub enum WordElem {
    Gen(Generator),
    Pair { neg: bool, left: Vec<Generator>, right: Vec<Generator> },
}

fn odd_count(w: &[Generator]) -> usize {
    w.iter().filter(|g| g.parity == Parity::Odd).count()
}

/// Evaluate a term by concatenating words, tracking only the product signs.
pub fn word_eval(t: &Term) -> WordElem {
    match t {
        Term::Leaf(g) => WordElem::Gen(*g),
        Term::Node(a, b) => match (word_eval(a), word_eval(b)) {
            (WordElem::Gen(x), WordElem::Gen(w)) => WordElem::Pair { neg: false, left: vec![x], right: vec![w] },
            (WordElem::Gen(x), WordElem::Pair { neg, left, right }) => {
                let mut l = vec![x];
                l.extend(left);
                WordElem::Pair { neg, left: l, right }
            }
            (WordElem::Pair { neg, left, mut right }, WordElem::Gen(x)) => {
                right.push(x);
                WordElem::Pair { neg, left, right }
            }
            (WordElem::Pair { neg: n1, left: u1, right: v1 }, WordElem::Pair { neg: n2, left: u2, right: v2 }) => {
                let flip = odd_count(&v1) % 2 == 1 && (odd_count(&u2) + odd_count(&v2)) % 2 == 1;
                let mut left = u1;
                left.extend(u2);
                let mut right = v2;
                right.extend(v1);
                WordElem::Pair { neg: n1 ^ n2 ^ flip, left, right }
            }
        },
    }
}

/// Bubble sort a word into a commutative monomial; each swap of two odd
/// letters flips the sign. `None` if an odd letter repeats.
pub fn sort_word(word: &[Generator], sig: &Signature) -> Option<(bool, Factor)> {
    let mut w = word.to_vec();
    let mut neg = false;
    for i in 0..w.len() {
        for j in 0..w.len() - 1 - i {
            if w[j] > w[j + 1] {
                if w[j].parity == Parity::Odd && w[j + 1].parity == Parity::Odd {
                    neg = !neg;
                }
                w.swap(j, j + 1);
            }
        }
    }
    if w.windows(2).any(|p| p[0] == p[1] && p[0].parity == Parity::Odd) {
        return None;
    }
    let mut y = vec![0u32; sig.p];
    let mut z = Vec::new();
    for g in w {
        match g.parity {
            Parity::Even => y[g.index - 1] += 1,
            Parity::Odd => z.push(g.index),
        }
    }
    Some((neg, Factor { y, z }))
}

/// The word oracle's normal form of a term: zero or a single signed monomial.
pub fn word_normalize(t: &Term, sig: &Signature) -> SuperPolynomial {
    let one = sig.field.one();
    match word_eval(t) {
        WordElem::Gen(g) => SuperPolynomial::monomial(*sig, BasisMonomial::Gen(g), one),
        WordElem::Pair { neg, left, right } => {
            let (Some((nl, l)), Some((nr, r))) = (sort_word(&left, sig), sort_word(&right, sig)) else {
                return SuperPolynomial::zero(*sig);
            };
            let c = sig.field.signed(one, neg ^ nl ^ nr);
            SuperPolynomial::monomial(*sig, BasisMonomial::Tensor(TensorMonomial { left: l, right: r }), c)
        }
    }
}

// ---------------------------------------------------------------- linear algebra

pub fn coords(f: &SuperPolynomial, basis: &[BasisMonomial]) -> Vec<BigRational> {
    let index: BTreeMap<&BasisMonomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut v = vec![BigRational::zero(); basis.len()];
    for (m, c) in f.terms() {
        v[*index.get(m).expect("monomial outside the coordinate basis")] = c.clone();
    }
    v
}

/// Incremental row echelon form over the rationals with dense rows.
#[derive(Default)]
pub struct DenseSpan {
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl DenseSpan {
    fn residue(&self, v: &[BigRational]) -> Vec<BigRational> {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let k = v[*pivot].clone() / row[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &k * r;
                }
            }
        }
        v
    }

    /// Adds `v`; true when it was independent of the rows so far.
    pub fn insert(&mut self, v: &[BigRational]) -> bool {
        let r = self.residue(v);
        match r.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(pivot) => {
                // Keep earlier rows reduced at the new pivot.
                for (_, row) in &mut self.rows {
                    if !row[pivot].is_zero() {
                        let k = row[pivot].clone() / r[pivot].clone();
                        for (x, y) in row.iter_mut().zip(&r) {
                            *x -= &k * y;
                        }
                    }
                }
                self.rows.push((pivot, r));
                true
            }
        }
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.residue(v).iter().all(|x| x.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub fn rank(vectors: &[Vec<BigRational>]) -> usize {
    let mut s = DenseSpan::default();
    vectors.iter().filter(|v| s.insert(v)).count()
}

/// One degree of a two-sided ideal: its coordinate basis and a spanning set.
pub struct IdealSlice {
    pub basis: Vec<BasisMonomial>,
    pub span: DenseSpan,
    pub elements: Vec<SuperPolynomial>,
}

/// Degree slices `1..=max_degree` of the ideal generated by homogeneous `gens`,
/// closed under products with arbitrary basis monomials from both sides.
pub fn ideal_slices(gens: &[SuperPolynomial], sig: &Signature, max_degree: usize) -> Vec<IdealSlice> {
    let mut slices: Vec<IdealSlice> = Vec::new();
    for d in 1..=max_degree {
        let basis = enumerate_degree(sig, d);
        let mut slice = IdealSlice { basis, span: DenseSpan::default(), elements: Vec::new() };
        let mut candidates: Vec<SuperPolynomial> = gens.iter().filter(|g| g.degree() == d).cloned().collect();
        for e in 1..d {
            let monos = enumerate_degree(sig, d - e);
            for a in &slices[e - 1].elements {
                for m in &monos {
                    let m = SuperPolynomial::monomial(*sig, m.clone(), sig.field.one());
                    candidates.push(a.try_mul(&m).unwrap());
                    candidates.push(m.try_mul(a).unwrap());
                }
            }
        }
        for c in candidates {
            if slice.span.insert(&coords(&c, &slice.basis)) {
                slice.elements.push(c);
            }
        }
        slices.push(slice);
    }
    slices
}

// ---------------------------------------------------------------- weight order

fn exps_even(t: &TensorMonomial) -> Vec<(u32, u32)> {
    t.left.y.iter().copied().zip(t.right.y.iter().copied()).collect()
}

fn exps_odd(t: &TensorMonomial, q: usize) -> Vec<(u32, u32)> {
    (1..=q).map(|j| (u32::from(t.left.z.contains(&j)), u32::from(t.right.z.contains(&j)))).collect()
}

/// Every strictly increasing map `0..k -> 0..n`.
pub fn increasing_maps(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, k, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, n, &mut Vec::new(), &mut out);
    out
}

fn some_map_dominates(src: &[(u32, u32)], dst: &[(u32, u32)]) -> bool {
    // Targets past the end of `dst` carry exponent zero.
    let n = src.len() + dst.len();
    increasing_maps(src.len(), n).iter().any(|phi| {
        src.iter().zip(phi).all(|(&(a, b), &j)| {
            let (c, d) = dst.get(j).copied().unwrap_or((0, 0));
            a <= c && b <= d
        })
    })
}

pub fn tensor(yl: &[u32], zl: &[usize], yr: &[u32], zr: &[usize]) -> TensorMonomial {
    TensorMonomial { left: Factor { y: yl.to_vec(), z: zl.to_vec() }, right: Factor { y: yr.to_vec(), z: zr.to_vec() } }
}

/// All tensors with `k` indices per parity and even exponents up to 2.
pub fn small_tensors(k: usize) -> Vec<TensorMonomial> {
    let mut out = Vec::new();
    let even_choices = 9usize.pow(k as u32);
    let odd_choices = 4usize.pow(k as u32);
    for e in 0..even_choices {
        let (mut yl, mut yr) = (vec![0u32; k], vec![0u32; k]);
        let mut x = e;
        for i in 0..k {
            yl[i] = (x % 3) as u32;
            yr[i] = (x / 3 % 3) as u32;
            x /= 9;
        }
        for o in 0..odd_choices {
            let (mut zl, mut zr) = (Vec::new(), Vec::new());
            for j in 0..k {
                let bits = o >> (2 * j) & 3;
                if bits & 1 == 1 {
                    zl.push(j + 1);
                }
                if bits & 2 == 2 {
                    zr.push(j + 1);
                }
            }
            let t = tensor(&yl, &zl, &yr, &zr);
            if t.left.degree() > 0 && t.right.degree() > 0 {
                out.push(t);
            }
        }
    }
    out
}

/// Exhaustive search for increasing maps on even and odd indices carrying
/// `m` onto a factor-wise divisor of `n`.
pub fn weight_brute(m: &TensorMonomial, n: &TensorMonomial, q: usize) -> bool {
    some_map_dominates(&exps_even(m), &exps_even(n)) && some_map_dominates(&exps_odd(m, q), &exps_odd(n, q))
}

// ---------------------------------------------------------------- counting

/// Count pairs `(u, v)` of nonempty supercommutative monomials with product
/// of multidegree `md`: each odd letter of degree 2 sits in both factors, each
/// of degree 1 in exactly one.
pub fn count_pairs(md: &Multidegree) -> u64 {
    if md.total() == 1 {
        return 1;
    }
    if md.z.iter().any(|&l| l > 2) {
        return 0;
    }
    let mut count = 0;
    let choices: Vec<Vec<u32>> =
        md.y.iter().map(|&k| (0..=k).collect()).chain(md.z.iter().map(|&l| if l == 1 { vec![0, 1] } else { vec![l / 2] })).collect();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let u: Vec<u32> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        let v: Vec<u32> = u.iter().zip(md.y.iter().chain(&md.z)).map(|(&a, &b)| b - a).collect();
        if u.iter().any(|&a| a > 0) && v.iter().any(|&b| b > 0) {
            count += 1;
        }
        let mut i = 0;
        while i < idx.len() {
            idx[i] += 1;
            if idx[i] < choices[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
        if i == idx.len() {
            return count;
        }
    }
}

// ---------------------------------------------------------------- tableaux

/// Standard Young tableaux by removing the cell holding the largest entry.
pub fn count_syt(parts: &[usize]) -> BigInt {
    let parts: Vec<usize> = parts.iter().copied().filter(|&r| r > 0).collect();
    if parts.is_empty() {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for i in 0..parts.len() {
        let corner = i + 1 == parts.len() || parts[i + 1] < parts[i];
        if corner {
            let mut smaller = parts.clone();
            smaller[i] -= 1;
            total += count_syt(&smaller);
        }
    }
    total
}

pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(Partition::all_of).collect()
}
