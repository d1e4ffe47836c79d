//! Hilbert series, dimensions, codimensions and Gelfand-Kirillov dimension of
//! the free algebra.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intpoly::{divide_series_one_minus, specialize_exps, total_degree, unit, Exps, IntPoly};
use crate::monomial::Multidegree;
use crate::signature::Signature;

pub const DEFAULT_TRUNCATION: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Grading {
    /// One variable `t` for the total degree.
    Total,
    /// `u` for the even degree, `v` for the odd degree.
    Bi,
    /// `u1..up` and `v1..vq`, one per generator.
    Multi,
}

impl Grading {
    pub fn variable_names(self, sig: &Signature) -> Vec<String> {
        match self {
            Grading::Total => vec!["t".into()],
            Grading::Bi => vec!["u".into(), "v".into()],
            Grading::Multi => (1..=sig.p).map(|i| format!("u{i}")).chain((1..=sig.q).map(|j| format!("v{j}"))).collect(),
        }
    }
}

/// `numerator / prod (1 - x^m)^e` together with its expansion through total
/// degree `bound`. Values are immutable; the expansion is computed on
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    vars: Vec<String>,
    numerator: IntPoly,
    denominator: Vec<(Exps, u32)>,
    bound: usize,
    coefficients: BTreeMap<Exps, BigInt>,
}

impl RationalSeries {
    /// Builds the series and cancels any denominator factor dividing the numerator.
    pub fn new(vars: Vec<String>, numerator: IntPoly, denominator: Vec<(Exps, u32)>, bound: usize) -> Result<Self> {
        if numerator.nvars() != vars.len() {
            return Err(Error::Domain(format!(
                "numerator has {} variables, {} names given",
                numerator.nvars(),
                vars.len()
            )));
        }
        let mut merged: BTreeMap<Exps, u32> = BTreeMap::new();
        for (m, e) in denominator {
            if m.len() != vars.len() || m.iter().all(|&x| x == 0) {
                return Err(Error::Domain("denominator factors must be 1 - x^m with m nonzero".into()));
            }
            if e > 0 {
                *merged.entry(m).or_insert(0) += e;
            }
        }
        let mut numerator = numerator;
        for (m, e) in merged.iter_mut() {
            while *e > 0 && !numerator.is_zero() {
                match numerator.div_one_minus(m) {
                    Some(q) => {
                        numerator = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        merged.retain(|_, e| *e > 0);
        let denominator: Vec<(Exps, u32)> = merged.into_iter().collect();
        let coefficients = expand(&numerator, &denominator, bound);
        Ok(RationalSeries { vars, numerator, denominator, bound, coefficients })
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &[(Exps, u32)] {
        &self.denominator
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// The same function expanded to a different bound.
    pub fn with_bound(&self, bound: usize) -> Self {
        RationalSeries {
            coefficients: expand(&self.numerator, &self.denominator, bound),
            bound,
            ..self.clone()
        }
    }

    /// Coefficient of `x^e`; `None` beyond the expansion bound.
    pub fn coefficient(&self, e: &[u32]) -> Option<BigInt> {
        if e.len() != self.vars.len() || total_degree(e) > self.bound {
            return None;
        }
        Some(self.coefficients.get(e).cloned().unwrap_or_else(BigInt::zero))
    }

    /// Nonzero coefficients up to the bound, in lexicographic exponent order.
    pub fn coefficients(&self) -> impl Iterator<Item = (&Exps, &BigInt)> {
        self.coefficients.iter()
    }

    /// Sum of coefficients of total degree `n`.
    pub fn total_coefficient(&self, n: usize) -> Option<BigInt> {
        (n <= self.bound)
            .then(|| self.coefficients.iter().filter(|(e, _)| total_degree(e) == n).map(|(_, c)| c).sum())
    }

    /// Substitute `x_i -> x'_{map[i]}`.
    pub fn specialize(&self, map: &[usize], vars: Vec<String>) -> Result<Self> {
        if map.len() != self.vars.len() || map.iter().any(|&i| i >= vars.len()) {
            return Err(Error::Domain("specialization map does not fit the variables".into()));
        }
        let n = vars.len();
        let den = self.denominator.iter().map(|(m, e)| (specialize_exps(m, map, n), *e)).collect();
        RationalSeries::new(vars, self.numerator.specialize(map, n), den, self.bound)
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn same_function(&self, other: &Self) -> bool {
        if self.vars.len() != other.vars.len() {
            return false;
        }
        let n = self.vars.len();
        let den = |d: &[(Exps, u32)]| {
            d.iter().fold(IntPoly::one(n), |acc, (m, e)| {
                acc.mul(&IntPoly::one(n).sub(&IntPoly::monomial(n, m.clone(), 1)).pow(*e))
            })
        };
        self.numerator.mul(&den(&other.denominator)) == other.numerator.mul(&den(&self.denominator))
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.numerator.fmt_with(&self.vars))?;
        if self.denominator.is_empty() {
            return Ok(());
        }
        f.write_str(" / (")?;
        for (i, (m, e)) in self.denominator.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            let mono = IntPoly::monomial(self.vars.len(), m.clone(), 1).fmt_with(&self.vars);
            write!(f, "(1 - {mono})")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        f.write_str(")")
    }
}

fn expand(numerator: &IntPoly, denominator: &[(Exps, u32)], bound: usize) -> BTreeMap<Exps, BigInt> {
    let mut terms: BTreeMap<Exps, BigInt> =
        numerator.truncate(bound).terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    for (m, e) in denominator {
        for _ in 0..*e {
            divide_series_one_minus(&mut terms, m, bound);
        }
    }
    terms
}

/// Hilbert series of the free algebra in the chosen grading, expanded through
/// total degree `bound`.
pub fn hilbert_free(sig: &Signature, grading: Grading, bound: usize) -> RationalSeries {
    let (p, q) = (sig.p, sig.q);
    let names = grading.variable_names(sig);
    let n = names.len();
    // even_var(i) / odd_var(j) give the variable carrying generator y_{i+1} / z_{j+1}.
    let (even_var, odd_var): (Vec<usize>, Vec<usize>) = match grading {
        Grading::Total => (vec![0; p], vec![0; q]),
        Grading::Bi => (vec![0; p], vec![1; q]),
        Grading::Multi => ((0..p).collect(), (p..p + q).collect()),
    };
    let one = IntPoly::one(n);
    let linear = even_var.iter().chain(&odd_var).fold(IntPoly::zero(n), |acc, &i| acc.add(&IntPoly::var(n, i)));
    let even_part = even_var.iter().fold(one.clone(), |acc, &i| acc.mul(&one.sub(&IntPoly::var(n, i))));
    let odd_part = odd_var.iter().fold(one.clone(), |acc, &j| acc.mul(&one.add(&IntPoly::var(n, j))));
    // linear + (odd/even - 1)^2 over the common denominator even^2.
    let numerator = linear.mul(&even_part.pow(2)).add(&odd_part.sub(&even_part).pow(2));
    let denominator: Vec<(Exps, u32)> = even_var.iter().map(|&i| (unit(n, i), 2)).collect();
    RationalSeries::new(names, numerator, denominator, bound).expect("well-formed Hilbert series")
}

/// Which component [`dim_component`] measures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Degree {
    Multi(Multidegree),
    Bi(usize, usize),
    Total(usize),
}

/// Coefficient of `x^k` in `(1 - x)^(-r)`.
fn neg_binomial(k: usize, r: usize) -> BigInt {
    if r == 0 {
        return if k == 0 { BigInt::one() } else { BigInt::zero() };
    }
    binomial(BigInt::from(k + r - 1), BigInt::from(k))
}

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

/// Dimension of a homogeneous component, from the closed forms.
pub fn dim_component(sig: &Signature, degree: &Degree) -> Result<BigInt> {
    let (p, q) = (sig.p, sig.q);
    match degree {
        Degree::Multi(md) => {
            md.check(sig)?;
            if md.total() == 0 {
                return Err(Error::InvalidMultidegree("total degree must be positive".into()));
            }
            if md.total() == 1 {
                return Ok(BigInt::one());
            }
            let even: BigInt = md.y.iter().map(|&k| BigInt::from(k + 1)).product();
            let squares: BigInt = md.z.iter().map(|&l| BigInt::from(match l { 0 | 2 => 1, 1 => 2, _ => 0 })).product();
            let linear: BigInt = md.z.iter().map(|&l| BigInt::from(u32::from(l <= 1))).product();
            Ok(even * squares - 2 * linear)
        }
        Degree::Bi(k, l) => {
            let (k, l) = (*k, *l);
            match k + l {
                0 => Err(Error::InvalidMultidegree("total degree must be positive".into())),
                1 => Ok(BigInt::from(if k == 1 { p } else { q })),
                _ => Ok(neg_binomial(k, 2 * p) * binom(2 * q, l) - 2 * neg_binomial(k, p) * binom(q, l)),
            }
        }
        Degree::Total(n) => {
            if *n == 0 {
                return Err(Error::InvalidMultidegree("total degree must be positive".into()));
            }
            (0..=*n).try_fold(BigInt::zero(), |acc, k| Ok(acc + dim_component(sig, &Degree::Bi(k, n - k))?))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Codimension {
    /// Multilinear in `p` even and `q` odd variables.
    Super { p: usize, q: usize },
    /// Summed over all parity assignments of `n` variables.
    Ordinary(usize),
}

pub fn codimension(mode: Codimension) -> Result<BigInt> {
    let two = BigInt::from(2);
    match mode {
        Codimension::Super { p, q } => match p + q {
            0 => Err(Error::Domain("codimension needs at least one variable".into())),
            1 => Ok(BigInt::one()),
            n => Ok(two.pow(n as u32) - 2),
        },
        Codimension::Ordinary(n) => match n {
            0 => Err(Error::Domain("codimension needs at least one variable".into())),
            1 => Ok(two),
            n => Ok(two.pow(2 * n as u32) - two.pow(n as u32 + 1)),
        },
    }
}

/// Order of the pole at `t = 1` of a univariate series.
pub fn pole_order_at_one(s: &RationalSeries) -> Result<usize> {
    if s.variables().len() != 1 {
        return Err(Error::Multivariate);
    }
    if s.numerator().is_zero() {
        return Ok(0);
    }
    // Every factor 1 - t^k has a simple root at 1.
    let poles: usize = s.denominator().iter().map(|(_, e)| *e as usize).sum();
    let mut zeros = 0;
    let mut num = s.numerator().clone();
    while zeros < poles && num.value_at_one().is_zero() {
        num = num.div_one_minus(&[1]).expect("a root at 1 means 1 - t divides");
        zeros += 1;
    }
    Ok(poles - zeros)
}

/// Gelfand-Kirillov dimension of the free algebra: `2p`.
pub fn gk_dimension_free(sig: &Signature) -> usize {
    pole_order_at_one(&hilbert_free(sig, Grading::Total, 0)).expect("total grading is univariate")
}
