use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::Result;
use crate::field::Scalar;
use crate::monomial::BasisMonomial;
use crate::poly::SuperPolynomial;
use crate::signature::Generator;

use super::order::MonomialOrder;

/// One multiplication by a free generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Left(Generator),
    Right(Generator),
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Left(g) => write!(f, "{g}*"),
            Step::Right(g) => write!(f, "*{g}"),
        }
    }
}

/// Whether `n` can be reached from `m` by multiplying with generators on
/// either side.
pub fn divides(m: &BasisMonomial, n: &BasisMonomial) -> bool {
    match (m, n) {
        (BasisMonomial::Gen(x), BasisMonomial::Gen(y)) => x == y,
        (BasisMonomial::Gen(x), BasisMonomial::Tensor(t)) => t.left.contains(*x) || t.right.contains(*x),
        (BasisMonomial::Tensor(_), BasisMonomial::Gen(_)) => false,
        (BasisMonomial::Tensor(s), BasisMonomial::Tensor(t)) => s.left.divides(&t.left) && s.right.divides(&t.right),
    }
}

/// Generator multiplications carrying `m` onto `±n`, applied first to last.
pub fn chain(m: &BasisMonomial, n: &BasisMonomial) -> Option<Vec<Step>> {
    if !divides(m, n) {
        return None;
    }
    match (m, n) {
        (BasisMonomial::Gen(_), BasisMonomial::Gen(_)) => Some(Vec::new()),
        (BasisMonomial::Gen(x), BasisMonomial::Tensor(t)) => {
            let mut out = Vec::new();
            let (mut lefts, mut rights);
            if t.left.contains(*x) {
                // x (x) w first, with w taken from the right factor.
                lefts = without_one(t.left.letters(), *x);
                rights = t.right.letters();
                let w = rights.remove(0);
                out.push(Step::Right(w));
            } else {
                lefts = t.left.letters();
                rights = without_one(t.right.letters(), *x);
                let w = lefts.remove(0);
                out.push(Step::Left(w));
            }
            out.extend(lefts.into_iter().map(Step::Left));
            out.extend(rights.into_iter().map(Step::Right));
            Some(out)
        }
        (BasisMonomial::Tensor(s), BasisMonomial::Tensor(t)) => {
            let mut out: Vec<Step> = s.left.quotient_letters(&t.left).into_iter().map(Step::Left).collect();
            out.extend(s.right.quotient_letters(&t.right).into_iter().map(Step::Right));
            Some(out)
        }
        (BasisMonomial::Tensor(_), BasisMonomial::Gen(_)) => None,
    }
}

fn without_one(mut letters: Vec<Generator>, x: Generator) -> Vec<Generator> {
    let i = letters.iter().position(|&g| g == x).expect("letter present");
    letters.remove(i);
    letters
}

pub fn apply_chain(f: &SuperPolynomial, steps: &[Step]) -> SuperPolynomial {
    steps.iter().fold(f.clone(), |acc, s| match s {
        Step::Left(g) => acc.left_mul_generator(*g),
        Step::Right(g) => acc.right_mul_generator(*g),
    })
}

/// One subtraction performed by [`reduce_with_trace`]: `coeff * chain(G[index])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub index: usize,
    pub chain: Vec<Step>,
    pub coeff: Scalar,
}

/// Full reduction of `f` modulo `g`; divisors are tried in list order.
pub fn reduce(f: &SuperPolynomial, g: &[SuperPolynomial], ord: &MonomialOrder) -> Result<SuperPolynomial> {
    Ok(reduce_with_trace(f, g, ord)?.0)
}

/// As [`reduce`], also returning the subtractions made, so that
/// `f - remainder = sum coeff * chain(G[index])`.
pub fn reduce_with_trace(
    f: &SuperPolynomial,
    g: &[SuperPolynomial],
    ord: &MonomialOrder,
) -> Result<(SuperPolynomial, Vec<ReductionStep>)> {
    for h in g {
        f.signature().ensure_same(h.signature())?;
    }
    let field = f.signature().field;
    let leads: Vec<Option<BasisMonomial>> = g.iter().map(|h| ord.lead(h).ok().map(|(m, _)| m)).collect();
    let mut rest = f.clone();
    let mut remainder = SuperPolynomial::zero(*f.signature());
    let mut trace = Vec::new();
    while let Ok((n, c)) = ord.lead(&rest) {
        let mut step = None;
        for (i, m) in leads.iter().enumerate() {
            let Some(m) = m else { continue };
            let Some(steps) = chain(m, &n) else { continue };
            let h = apply_chain(&g[i], &steps);
            // Orders that are not compatible everywhere may move the lead; skip such divisors.
            match ord.lead(&h) {
                Ok((hn, hc)) if hn == n => {
                    let k = field.mul(&c, &field.inv(&hc));
                    step = Some((i, steps, k, h));
                    break;
                }
                _ => continue,
            }
        }
        match step {
            Some((index, steps, k, h)) => {
                rest = rest.try_sub(&h.scale(&k))?;
                trace.push(ReductionStep { index, chain: steps, coeff: k });
            }
            None => {
                remainder.add_term(n.clone(), c.clone());
                rest.add_term(n, field.neg(&c));
            }
        }
    }
    Ok((remainder, trace))
}

/// `true` if no monomial of `f` is divisible by any of `leads`.
pub fn is_reduced(f: &SuperPolynomial, leads: &[BasisMonomial]) -> bool {
    f.terms().all(|(m, _)| leads.iter().all(|l| !divides(l, m)))
}

pub(crate) fn max_by_order<'a>(
    ord: &MonomialOrder,
    it: impl Iterator<Item = &'a BasisMonomial>,
) -> Option<&'a BasisMonomial> {
    it.max_by(|a, b| ord.compare(a, b))
}

pub(crate) fn below(ord: &MonomialOrder, a: &BasisMonomial, bound: Option<&BasisMonomial>) -> bool {
    bound.is_none_or(|b| ord.compare(a, b) == Ordering::Less)
}
