//! Reduction modulo two-sided ideals and degree-truncated Gröbner–Shirshov
//! staircases.
//!
//! The ideal generated by homogeneous polynomials is graded, so its degree-`d`
//! slice is spanned by the degree-`d` generators together with `x h` and `h x`
//! for every generator `x` and every `h` in the degree-`(d-1)` slice. Each
//! slice is kept in echelon form with respect to the monomial order; its pivots
//! are exactly the leading monomials of the slice.

mod order;
mod reduce;
mod weight;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

pub use order::{MonomialOrder, OrderKind};
pub use reduce::{apply_chain, chain, divides, is_reduced, reduce, reduce_with_trace, ReductionStep, Step};
pub use weight::weight_preceq;

use crate::error::{Error, Result};
use crate::monomial::{enumerate_degree, BasisMonomial, Multidegree};
use crate::poly::SuperPolynomial;
use crate::signature::Signature;
use reduce::{below, max_by_order};

/// Largest truncation degree accepted by [`truncated_basis`].
pub const DEFAULT_DEGREE_CAP: usize = 16;

/// Rows with distinct leading monomials; each row is monic.
#[derive(Debug, Clone, Default)]
struct Echelon {
    rows: BTreeMap<BasisMonomial, SuperPolynomial>,
}

impl Echelon {
    /// Reduce `f` against the rows; insert it if something is left.
    /// Returns the new pivot, if any.
    fn insert(&mut self, f: SuperPolynomial, ord: &MonomialOrder) -> Option<BasisMonomial> {
        let field = f.signature().field;
        let mut f = f;
        let mut bound: Option<BasisMonomial> = None;
        loop {
            let next = max_by_order(
                ord,
                f.terms().map(|(m, _)| m).filter(|m| self.rows.contains_key(*m) && below(ord, m, bound.as_ref())),
            )
            .cloned();
            let Some(m) = next else { break };
            let c = f.coefficient(&m);
            f = f.try_sub(&self.rows[&m].scale(&c)).expect("same signature");
            bound = Some(m);
        }
        let (lead, c) = ord.lead(&f).ok()?;
        let monic = f.scale(&field.inv(&c));
        self.rows.insert(lead.clone(), monic);
        Some(lead)
    }
}

/// Membership answer; `Unknown` when the truncation does not decide it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Membership {
    Yes,
    No,
    Unknown,
}

/// Staircase of an ideal computed through a fixed degree.
#[derive(Debug, Clone)]
pub struct GsBasis {
    sig: Signature,
    order: MonomialOrder,
    max_degree: usize,
    input: Vec<SuperPolynomial>,
    staircase: Vec<BasisMonomial>,
    generators: Vec<SuperPolynomial>,
    stable_through: usize,
    last_new_degree: Option<usize>,
    slice_dims: Vec<usize>,
}

impl GsBasis {
    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// The polynomials the ideal was generated from.
    pub fn input(&self) -> &[SuperPolynomial] {
        &self.input
    }

    /// Minimal leading monomials, in the order they were found.
    pub fn staircase(&self) -> &[BasisMonomial] {
        &self.staircase
    }

    /// One monic ideal element per staircase monomial, with that monomial as lead.
    pub fn generators(&self) -> &[SuperPolynomial] {
        &self.generators
    }

    /// The largest degree `d <= max_degree` at which no new staircase
    /// monomial appeared (`0` if every degree produced one).
    pub fn stable_through(&self) -> usize {
        self.stable_through
    }

    /// The last degree that produced a staircase monomial.
    pub fn last_new_degree(&self) -> Option<usize> {
        self.last_new_degree
    }

    /// Dimension of the ideal's slice in each degree `1..=max_degree` (index `d - 1`).
    pub fn ideal_dims(&self) -> &[usize] {
        &self.slice_dims
    }

    pub fn reduce(&self, f: &SuperPolynomial) -> Result<SuperPolynomial> {
        reduce(f, &self.generators, &self.order)
    }

    pub fn member(&self, f: &SuperPolynomial) -> Result<Membership> {
        self.sig.ensure_same(f.signature())?;
        if f.degree() > self.max_degree {
            return Ok(Membership::Unknown);
        }
        if self.reduce(f)?.is_zero() {
            Ok(Membership::Yes)
        } else if f.degree() <= self.stable_through {
            Ok(Membership::No)
        } else {
            Ok(Membership::Unknown)
        }
    }

    /// Quotient dimensions in degrees `1..=max_degree` (index `d - 1`): basis
    /// monomials not divisible by any staircase monomial.
    pub fn quotient_dims(&self) -> Vec<usize> {
        (1..=self.max_degree)
            .map(|d| {
                enumerate_degree(&self.sig, d)
                    .iter()
                    .filter(|m| self.staircase.iter().all(|s| !divides(s, m)))
                    .count()
            })
            .collect()
    }
}

/// Compute the staircase of the ideal generated by `gens` through degree
/// `max_degree`. Generators must be nonzero and homogeneous in total degree.
pub fn truncated_basis(gens: &[SuperPolynomial], order: &MonomialOrder, max_degree: usize) -> Result<GsBasis> {
    truncated_basis_with_cap(gens, order, max_degree, DEFAULT_DEGREE_CAP)
}

pub fn truncated_basis_with_cap(
    gens: &[SuperPolynomial],
    order: &MonomialOrder,
    max_degree: usize,
    cap: usize,
) -> Result<GsBasis> {
    let sig = *order.signature();
    if max_degree > cap {
        return Err(Error::DegreeOverflow { degree: max_degree, cap });
    }
    let mut by_degree: BTreeMap<usize, Vec<&SuperPolynomial>> = BTreeMap::new();
    let mut multigraded = true;
    for g in gens {
        sig.ensure_same(g.signature())?;
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let degrees: Vec<usize> = g.terms().map(|(m, _)| m.degree()).collect();
        if degrees.iter().any(|&d| d != degrees[0]) {
            return Err(Error::NotHomogeneous);
        }
        if degrees[0] > max_degree {
            return Err(Error::DegreeOverflow { degree: degrees[0], cap: max_degree });
        }
        multigraded &= g.multidegree().is_some();
        by_degree.entry(degrees[0]).or_default().push(g);
    }

    // Blocks are per multidegree when every generator allows it.
    let block = |f: &SuperPolynomial| -> Option<Multidegree> {
        if multigraded {
            f.multidegree()
        } else {
            None
        }
    };
    let gens_list = sig.generators();
    let mut staircase: Vec<BasisMonomial> = Vec::new();
    let mut reduced: Vec<SuperPolynomial> = Vec::new();
    let mut stable_through = 0;
    let mut last_new = None;
    let mut slice_dims = Vec::with_capacity(max_degree);
    let mut previous: BTreeMap<Option<Multidegree>, Echelon> = BTreeMap::new();
    for d in 1..=max_degree {
        let mut slice: BTreeMap<Option<Multidegree>, Echelon> = BTreeMap::new();
        let mut candidates: Vec<SuperPolynomial> = by_degree.get(&d).into_iter().flatten().map(|g| (*g).clone()).collect();
        for ech in previous.values() {
            for h in ech.rows.values() {
                for &x in &gens_list {
                    candidates.push(h.left_mul_generator(x));
                    candidates.push(h.right_mul_generator(x));
                }
            }
        }
        for c in candidates {
            if c.is_zero() {
                continue;
            }
            slice.entry(block(&c)).or_default().insert(c, order);
        }
        let mut new_here = false;
        let earlier = staircase.len();
        for ech in slice.values() {
            for (lead, row) in &ech.rows {
                if staircase[..earlier].iter().all(|s| !divides(s, lead)) {
                    staircase.push(lead.clone());
                    reduced.push(row.clone());
                    new_here = true;
                }
            }
        }
        slice_dims.push(slice.values().map(|e| e.rows.len()).sum());
        if new_here {
            last_new = Some(d);
        } else {
            stable_through = d;
        }
        previous = slice;
    }
    Ok(GsBasis {
        sig,
        order: order.clone(),
        max_degree,
        input: gens.to_vec(),
        staircase,
        generators: reduced,
        stable_through,
        last_new_degree: last_new,
        slice_dims,
    })
}
