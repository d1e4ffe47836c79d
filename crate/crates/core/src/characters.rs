//! Partitions, Schur polynomials and cocharacter multiplicities.
//!
//! The multilinear component in `p` even and `q` odd variables decomposes over
//! `S_p x S_q` with multiplicities `m(lambda, mu)`. These are nonzero only for
//! `lambda` with at most two rows and `mu` with at most two columns, and they
//! can be read off the multigraded Hilbert series by expanding its slices in
//! products of Schur polynomials.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intpoly::{total_degree, Exps, IntPoly};
use crate::series::{hilbert_free, Grading, RationalSeries};
use crate::signature::Signature;

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain(format!("partition parts must be positive: {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("partition parts must be weakly decreasing: {parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Drops zero parts; the rest must already be decreasing.
    pub fn from_padded(parts: &[u32]) -> Result<Self> {
        Partition::new(parts.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect())
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition { parts: (0..cols).map(|j| self.parts.iter().filter(|&&r| r > j).count()).collect() }
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for k in (1..=rest.min(max)).rev() {
                cur.push(k);
                go(rest - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn standard_tableaux(&self) -> BigInt {
        let conj = self.conjugate();
        let mut hooks = BigInt::one();
        for (i, &r) in self.parts.iter().enumerate() {
            for j in 0..r {
                hooks *= (r - j) + (conj.part(j) - i) - 1;
            }
        }
        let factorial: BigInt = (1..=self.size()).map(BigInt::from).product();
        factorial / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Parses `2,1`, `(2,1)` or the empty string / `()` for the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Domain(format!("bad partition part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Schur polynomial `s_lambda` in `d` variables, as a sum over semistandard
/// tableaux with entries at most `d`.
pub fn schur(lambda: &Partition, d: usize) -> IntPoly {
    let mut out = IntPoly::zero(d);
    if lambda.rows() > d {
        return out;
    }
    let cells: Vec<(usize, usize)> =
        lambda.parts.iter().enumerate().flat_map(|(i, &r)| (0..r).map(move |j| (i, j))).collect();
    let mut grid: Vec<Vec<usize>> = lambda.parts.iter().map(|&r| vec![0; r]).collect();
    let mut weight = vec![0u32; d];
    fill(&cells, 0, &mut grid, &mut weight, d, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    grid: &mut [Vec<usize>],
    weight: &mut [u32],
    d: usize,
    out: &mut IntPoly,
) {
    if k == cells.len() {
        out.add_term(weight.to_vec(), BigInt::one());
        return;
    }
    let (i, j) = cells[k];
    let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
    let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
    for v in lo_row.max(lo_col)..=d {
        grid[i][j] = v;
        weight[v - 1] += 1;
        fill(cells, k + 1, grid, weight, d, out);
        weight[v - 1] -= 1;
    }
}

/// Shapes in `s_lambda * s_(n)` with at most `d` rows: `mu` interlacing `lambda`.
pub fn young_row_product(lambda: &Partition, n: usize, d: usize) -> Result<Vec<Partition>> {
    if lambda.rows() > d {
        return Err(Error::Domain(format!("{lambda} has more than {d} rows")));
    }
    let rows = (lambda.rows() + 1).min(d);
    let target = lambda.size() + n;
    let mut out = Vec::new();
    // mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ...
    let bounds: Vec<(usize, usize)> = (0..rows)
        .map(|i| (lambda.part(i), if i == 0 { target } else { lambda.part(i - 1) }))
        .collect();
    boxed_shapes(&bounds, target, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Shapes in `s_lambda * s_(1^n)` with at most `d` rows: `lambda_i <= mu_i <= lambda_i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnProduct {
    pub shapes: Vec<Partition>,
    /// Set when `n > d`, where `s_(1^n)` itself vanishes in `d` variables.
    pub vanished: bool,
}

pub fn young_column_product(lambda: &Partition, n: usize, d: usize) -> ColumnProduct {
    if n > d {
        return ColumnProduct { shapes: Vec::new(), vanished: true };
    }
    let rows = lambda.rows() + n;
    let target = lambda.size() + n;
    let bounds: Vec<(usize, usize)> = (0..rows).map(|i| (lambda.part(i), lambda.part(i) + 1)).collect();
    let mut shapes = Vec::new();
    boxed_shapes(&bounds, target, &mut Vec::new(), &mut shapes);
    shapes.retain(|mu| mu.rows() <= d);
    ColumnProduct { shapes, vanished: false }
}

/// Partitions of `target` with `lo_i <= mu_i <= hi_i`, in decreasing lex order.
fn boxed_shapes(bounds: &[(usize, usize)], target: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    let used: usize = cur.iter().sum();
    if cur.len() == bounds.len() {
        if used == target {
            out.push(Partition { parts: cur.iter().copied().filter(|&x| x > 0).collect() });
        }
        return;
    }
    let (lo, hi) = bounds[cur.len()];
    let prev = cur.last().copied().unwrap_or(usize::MAX);
    let hi = hi.min(prev).min(target - used);
    if lo > hi {
        return;
    }
    for v in (lo..=hi).rev() {
        cur.push(v);
        boxed_shapes(bounds, target, cur, out);
        cur.pop();
    }
}

/// Multiplicity `m(lambda, mu)` of the irreducible `S_p x S_q` character in
/// the multilinear component, by the closed form.
pub fn multiplicity(lambda: &Partition, mu: &Partition) -> u64 {
    let mc = mu.conjugate();
    if lambda.rows() > 2 || mc.rows() > 2 {
        return 0;
    }
    let (l1, l2) = (lambda.part(0) as u64, lambda.part(1) as u64);
    let (m1, m2) = (mc.part(0) as u64, mc.part(1) as u64);
    match lambda.size() + mu.size() {
        0 => 0,
        1 => 1,
        _ if l2 + m2 > 0 => (l1 - l2 + 1) * (m1 - m2 + 1),
        _ => (l1 + 1) * (m1 + 1) - 2,
    }
}

/// `u1 + v1 + 1/((1-u1)^2 (1-u1u2) (1-v1)^2 (1-v1v2)) - 2/((1-u1)(1-v1)) + 1`
/// over the common denominator; variables `u1, u2, v1, v2`.
pub fn double_multiplicity_rational(bound: usize) -> RationalSeries {
    let n = 4;
    let one = IntPoly::one(n);
    let m = |e: [u32; 4]| IntPoly::monomial(n, e.to_vec(), 1);
    let (u1, v1) = (m([1, 0, 0, 0]), m([0, 0, 1, 0]));
    let om = |e: [u32; 4]| one.sub(&m(e));
    let den = om([1, 0, 0, 0])
        .pow(2)
        .mul(&om([1, 1, 0, 0]))
        .mul(&om([0, 0, 1, 0]).pow(2))
        .mul(&om([0, 0, 1, 1]));
    let small = om([1, 1, 0, 0]).mul(&om([1, 0, 0, 0])).mul(&om([0, 0, 1, 1])).mul(&om([0, 0, 1, 0]));
    let numerator = u1.add(&v1).add(&one).mul(&den).add(&one).sub(&small.scale(&BigInt::from(2)));
    let names = ["u1", "u2", "v1", "v2"].iter().map(|s| String::from(*s)).collect();
    let factors = vec![(vec![1, 0, 0, 0], 2), (vec![1, 1, 0, 0], 1), (vec![0, 0, 1, 0], 2), (vec![0, 0, 1, 1], 1)];
    RationalSeries::new(names, numerator, factors, bound).expect("well-formed series")
}

/// Coefficients of the double multiplicity series with `u`-degree at most `a`
/// and `v`-degree at most `b`, keyed by exponents of `(u1, u2, v1, v2)`.
pub fn double_multiplicity_series(a: usize, b: usize) -> BTreeMap<[u32; 4], BigInt> {
    let s = double_multiplicity_rational(a + b);
    s.coefficients()
        .filter(|(e, _)| (e[0] + e[1]) as usize <= a && (e[2] + e[3]) as usize <= b)
        .map(|(e, c)| ([e[0], e[1], e[2], e[3]], c.clone()))
        .collect()
}

/// Coefficient of `u^lambda v^(mu')` in the double multiplicity series, when
/// both shapes fit in two variables; `None` otherwise.
pub fn double_multiplicity_key(lambda: &Partition, mu: &Partition) -> Option<[u32; 4]> {
    let mc = mu.conjugate();
    (lambda.rows() <= 2 && mc.rows() <= 2)
        .then(|| [lambda.part(0) as u32, lambda.part(1) as u32, mc.part(0) as u32, mc.part(1) as u32])
}

fn check_symmetric(f: &IntPoly) -> Result<()> {
    let d = f.nvars();
    for i in 0..d.saturating_sub(1) {
        for (e, c) in f.terms() {
            let mut s = e.clone();
            s.swap(i, i + 1);
            if &f.coefficient(&s) != c {
                return Err(Error::NotSymmetric(format!(
                    "swapping variables {} and {} changes the coefficient of {:?}",
                    i + 1,
                    i + 2,
                    e
                )));
            }
        }
    }
    Ok(())
}

/// Expansion of a symmetric polynomial in Schur polynomials, by repeatedly
/// removing the lexicographically greatest monomial.
pub fn schur_expand(f: &IntPoly) -> Result<BTreeMap<Partition, BigInt>> {
    check_symmetric(f)?;
    let d = f.nvars();
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    loop {
        let Some((e, c)) = rest.terms().next_back().map(|(e, c)| (e.clone(), c.clone())) else { break };
        let lambda = Partition::from_padded(&e)
            .map_err(|_| Error::NotSymmetric(format!("leading exponent {e:?} is not a partition")))?;
        rest = rest.sub(&schur(&lambda, d).scale(&c));
        out.insert(lambda, c);
    }
    Ok(out)
}

/// Expansion of a polynomial in `du + dv` variables, symmetric in each block,
/// in products `s_lambda(first block) s_mu(second block)`.
pub fn schur_expand_bivariate(f: &IntPoly, du: usize) -> Result<BTreeMap<(Partition, Partition), BigInt>> {
    let dv = f.nvars().checked_sub(du).ok_or_else(|| Error::Domain("block larger than the ring".into()))?;
    // Coefficients in the second block, keyed by the exponent in the first.
    let mut by_u: BTreeMap<Exps, IntPoly> = BTreeMap::new();
    for (e, c) in f.terms() {
        by_u.entry(e[..du].to_vec()).or_insert_with(|| IntPoly::zero(dv)).add_term(e[du..].to_vec(), c.clone());
    }
    let mut out = BTreeMap::new();
    while let Some((e, coeff)) = by_u.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        let lambda = Partition::from_padded(&e)
            .map_err(|_| Error::NotSymmetric(format!("leading exponent {e:?} is not a partition")))?;
        for (ue, uc) in schur(&lambda, du).terms() {
            let slot = by_u.entry(ue.clone()).or_insert_with(|| IntPoly::zero(dv));
            *slot = slot.sub(&coeff.scale(uc));
            if slot.is_zero() {
                by_u.remove(ue);
            }
        }
        for (mu, c) in schur_expand(&coeff)? {
            out.insert((lambda.clone(), mu), c);
        }
    }
    Ok(out)
}

/// The slice of the multigraded Hilbert series of even degree `k` and odd
/// degree `l`, as a polynomial in `u1..up, v1..vq`.
pub fn hilbert_slice(sig: &Signature, k: usize, l: usize) -> IntPoly {
    let s = hilbert_free(sig, Grading::Multi, k + l);
    let p = sig.p;
    IntPoly::from_terms(
        p + sig.q,
        s.coefficients()
            .filter(|(e, _)| total_degree(&e[..p]) == k && total_degree(&e[p..]) == l)
            .map(|(e, c)| (e.clone(), c.clone())),
    )
}

/// Multiplicities read off the `(k, l)` slice of the Hilbert series of the
/// free algebra with `p` even and `q` odd generators.
pub fn cocharacter_from_hilbert(sig: &Signature, k: usize, l: usize) -> Result<BTreeMap<(Partition, Partition), BigInt>> {
    if sig.field.characteristic() != 0 {
        return Err(Error::Domain("characters need characteristic zero".into()));
    }
    let mut out = schur_expand_bivariate(&hilbert_slice(sig, k, l), sig.p)?;
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}
