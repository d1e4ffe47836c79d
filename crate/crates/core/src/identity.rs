//! Checking super-identities by substitution.
//!
//! An [`Identity`] is `lhs = (-1)^E rhs`, where both sides are product
//! patterns over named variables and `E` is a sum of products of variable
//! parities (computed mod 2). A right-hand side of `0` states that the left
//! side vanishes. Each variable is annotated even, odd, or any; "any" is drawn
//! at random per trial and enumerated during exhaustive substitution.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monomial::{enumerate_degree, BasisMonomial};
use crate::poly::SuperPolynomial;
use crate::signature::{Generator, Parity, Signature};
use crate::text::{lex, parse_tree, Tok, Tree};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pattern {
    Var(usize),
    Node(Box<Pattern>, Box<Pattern>),
}

impl Pattern {
    fn leaf_count(&self) -> usize {
        match self {
            Pattern::Var(_) => 1,
            Pattern::Node(a, b) => a.leaf_count() + b.leaf_count(),
        }
    }

    fn eval(&self, values: &[SuperPolynomial]) -> Result<SuperPolynomial> {
        match self {
            Pattern::Var(i) => Ok(values[*i].clone()),
            Pattern::Node(a, b) => a.eval(values)?.try_mul(&b.eval(values)?),
        }
    }

    fn fmt_with(&self, names: &[VarSpec], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Var(i) => f.write_str(&names[*i].name),
            Pattern::Node(a, b) => {
                f.write_str("(")?;
                a.fmt_with(names, f)?;
                f.write_str(" ")?;
                b.fmt_with(names, f)?;
                f.write_str(")")
            }
        }
    }
}

/// A polynomial over GF(2) in the variable parities. Each monomial is a set of
/// variable indices; the empty set is the constant 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignExponent {
    monomials: BTreeSet<Vec<usize>>,
}

impl SignExponent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(one: bool) -> Self {
        let mut s = Self::zero();
        if one {
            s.monomials.insert(Vec::new());
        }
        s
    }

    fn var(i: usize) -> Self {
        let mut s = Self::zero();
        s.monomials.insert(vec![i]);
        s
    }

    fn add(&self, other: &Self) -> Self {
        SignExponent { monomials: self.monomials.symmetric_difference(&other.monomials).cloned().collect() }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for a in &self.monomials {
            for b in &other.monomials {
                let mut m: Vec<usize> = a.iter().chain(b).copied().collect();
                m.sort_unstable();
                m.dedup();
                // Addition in GF(2): equal monomials cancel.
                if !out.monomials.remove(&m) {
                    out.monomials.insert(m);
                }
            }
        }
        out
    }

    pub fn evaluate(&self, parities: &[Parity]) -> bool {
        self.monomials.iter().filter(|m| m.iter().all(|&i| parities[i].is_odd())).count() % 2 == 1
    }

    /// The summands, for mutation testing.
    pub fn summands(&self) -> Vec<SignExponent> {
        self.monomials
            .iter()
            .map(|m| SignExponent { monomials: core::iter::once(m.clone()).collect() })
            .collect()
    }

    /// This exponent with one summand removed.
    pub fn without(&self, summand: &SignExponent) -> SignExponent {
        self.add(summand)
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSpec {
    pub name: String,
    /// `None` means either parity.
    pub parity: Option<Parity>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub vars: Vec<VarSpec>,
    pub lhs: Pattern,
    /// `None` for an identity of the form `lhs = 0`.
    pub rhs: Option<Pattern>,
    pub sign: SignExponent,
}

impl Identity {
    /// Parse `lhs = (-1)^sign rhs`. Variables are collected from `lhs` in order
    /// of appearance and default to either parity. `rhs` may be `0`.
    pub fn parse(lhs: &str, rhs: &str, sign: &str) -> Result<Self> {
        let mut vars: Vec<VarSpec> = Vec::new();
        let lhs = to_pattern(parse_tree(lhs)?, &mut vars, true)?;
        let rhs = if rhs.trim() == "0" {
            None
        } else {
            Some(to_pattern(parse_tree(rhs)?, &mut vars, false)?)
        };
        let sign = parse_sign(sign, &vars)?;
        Ok(Identity { vars, lhs, rhs, sign })
    }

    pub fn with_parity(mut self, name: &str, parity: Parity) -> Result<Self> {
        let v = self
            .vars
            .iter_mut()
            .find(|v| v.name == name)
            .ok_or_else(|| Error::Pattern(format!("no variable named {name}")))?;
        v.parity = Some(parity);
        Ok(self)
    }

    pub fn with_sign(mut self, sign: SignExponent) -> Self {
        self.sign = sign;
        self
    }

    pub fn degree(&self) -> usize {
        self.lhs.leaf_count()
    }

    /// Evaluate both sides; returns `(lhs, (-1)^E rhs)`.
    pub fn sides(&self, values: &[SuperPolynomial]) -> Result<(SuperPolynomial, SuperPolynomial)> {
        if values.len() != self.vars.len() {
            return Err(Error::Pattern(format!("expected {} values, got {}", self.vars.len(), values.len())));
        }
        let mut parities = Vec::with_capacity(values.len());
        for (v, spec) in values.iter().zip(&self.vars) {
            let p = v
                .homogeneous_parity()
                .ok_or_else(|| Error::Pattern(format!("value for {} is not homogeneous", spec.name)))?;
            parities.push(p);
        }
        let lhs = self.lhs.eval(values)?;
        let rhs = match &self.rhs {
            None => SuperPolynomial::zero(*lhs.signature()),
            Some(r) => {
                let r = r.eval(values)?;
                if self.sign.evaluate(&parities) {
                    -&r
                } else {
                    r
                }
            }
        };
        Ok((lhs, rhs))
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.lhs.fmt_with(&self.vars, f)?;
        f.write_str(" = ")?;
        match &self.rhs {
            None => f.write_str("0"),
            Some(r) => {
                if !self.sign.is_zero() {
                    f.write_str("(-1)^[")?;
                    for (i, m) in self.sign.monomials.iter().enumerate() {
                        if i > 0 {
                            f.write_str("+")?;
                        }
                        if m.is_empty() {
                            f.write_str("1")?;
                        }
                        for (k, v) in m.iter().enumerate() {
                            if k > 0 {
                                f.write_str("*")?;
                            }
                            f.write_str(&self.vars[*v].name)?;
                        }
                    }
                    f.write_str("] ")?;
                }
                r.fmt_with(&self.vars, f)
            }
        }
    }
}

fn to_pattern(t: Tree, vars: &mut Vec<VarSpec>, may_declare: bool) -> Result<Pattern> {
    match t {
        Tree::Leaf(name, pos) => match vars.iter().position(|v| v.name == name) {
            Some(i) => Ok(Pattern::Var(i)),
            None if may_declare => {
                vars.push(VarSpec { name, parity: None });
                Ok(Pattern::Var(vars.len() - 1))
            }
            None => Err(Error::Pattern(format!("arity mismatch: {name} (at {pos}) does not occur on the left side"))),
        },
        Tree::Node(a, b) => Ok(Pattern::Node(
            Box::new(to_pattern(*a, vars, may_declare)?),
            Box::new(to_pattern(*b, vars, may_declare)?),
        )),
    }
}

/// `expr := term ('+' term)*`, `term := factor ('*' factor)*`,
/// `factor := name | 0 | 1 | '(' expr ')'`.
fn parse_sign(input: &str, vars: &[VarSpec]) -> Result<SignExponent> {
    if input.trim().is_empty() {
        return Ok(SignExponent::zero());
    }
    let toks = lex(input).map_err(|e| Error::Pattern(format!("sign exponent: {e}")))?;
    let mut at = 0;
    let e = sign_expr(&toks, &mut at, vars, input.len())?;
    if at != toks.len() {
        return Err(Error::Pattern(format!("sign exponent: unexpected input at position {}", toks[at].0)));
    }
    Ok(e)
}

fn sign_expr(toks: &[(usize, Tok)], at: &mut usize, vars: &[VarSpec], end: usize) -> Result<SignExponent> {
    let mut acc = sign_term(toks, at, vars, end)?;
    while let Some((_, Tok::Plus)) = toks.get(*at) {
        *at += 1;
        acc = acc.add(&sign_term(toks, at, vars, end)?);
    }
    Ok(acc)
}

fn sign_term(toks: &[(usize, Tok)], at: &mut usize, vars: &[VarSpec], end: usize) -> Result<SignExponent> {
    let mut acc = sign_factor(toks, at, vars, end)?;
    while let Some((_, Tok::Star)) = toks.get(*at) {
        *at += 1;
        acc = acc.mul(&sign_factor(toks, at, vars, end)?);
    }
    Ok(acc)
}

fn sign_factor(toks: &[(usize, Tok)], at: &mut usize, vars: &[VarSpec], end: usize) -> Result<SignExponent> {
    let pos = toks.get(*at).map_or(end, |t| t.0);
    let tok = toks.get(*at).map(|t| &t.1);
    *at += 1;
    match tok {
        Some(Tok::Ident(name)) => vars
            .iter()
            .position(|v| &v.name == name)
            .map(SignExponent::var)
            .ok_or_else(|| Error::Pattern(format!("sign exponent: unknown variable {name} at position {pos}"))),
        Some(Tok::Num(n)) if n.is_integer() => {
            let odd = n.to_integer() % 2u8 != num_bigint::BigInt::from(0u8);
            Ok(SignExponent::constant(odd))
        }
        Some(Tok::LParen) => {
            let e = sign_expr(toks, at, vars, end)?;
            match toks.get(*at) {
                Some((_, Tok::RParen)) => {
                    *at += 1;
                    Ok(e)
                }
                _ => Err(Error::Pattern(format!("sign exponent: expected ')' at position {pos}"))),
            }
        }
        _ => Err(Error::Pattern(format!("sign exponent: unexpected token at position {pos}"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    pub trials: usize,
    pub seed: u64,
    /// Random values are drawn from basis monomials up to this degree.
    pub max_degree: usize,
    /// Exhaustive generator substitution runs when the identity has at most
    /// this many leaves and at most `exhaustive_cap` tuples.
    pub exhaustive_degree: usize,
    pub exhaustive_cap: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { trials: 200, seed: 0, max_degree: 4, exhaustive_degree: 4, exhaustive_cap: 50_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// `None` for an exhaustive case, otherwise the random trial number.
    pub trial: Option<usize>,
    pub values: Vec<SuperPolynomial>,
    pub lhs: SuperPolynomial,
    pub rhs: SuperPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass { random_trials: usize, exhaustive_cases: usize },
    Fail(Box<Witness>),
}

impl Outcome {
    pub fn passed(&self) -> bool {
        matches!(self, Outcome::Pass { .. })
    }
}

/// Random homogeneous values of a given parity: one basis monomial, or a sum of two.
struct ValuePool {
    /// Indexed by parity bit, then degree - 1.
    by_parity: [Vec<Vec<BasisMonomial>>; 2],
}

impl ValuePool {
    fn new(sig: &Signature, max_degree: usize) -> Self {
        let mut by_parity: [Vec<Vec<BasisMonomial>>; 2] = [Vec::new(), Vec::new()];
        for n in 1..=max_degree {
            let mut split = [Vec::new(), Vec::new()];
            for m in enumerate_degree(sig, n) {
                split[m.parity().bit() as usize].push(m);
            }
            for (slot, ms) in by_parity.iter_mut().zip(split) {
                if !ms.is_empty() {
                    slot.push(ms);
                }
            }
        }
        ValuePool { by_parity }
    }

    fn has(&self, parity: Parity) -> bool {
        !self.by_parity[parity.bit() as usize].is_empty()
    }

    fn draw<R: Rng>(&self, rng: &mut R, sig: &Signature, parity: Parity) -> SuperPolynomial {
        let pool = &self.by_parity[parity.bit() as usize];
        let terms = if rng.gen_bool(0.5) { 1 } else { 2 };
        let mut out = SuperPolynomial::zero(*sig);
        while out.is_zero() {
            for _ in 0..terms {
                // Degree first, so short values are as common as long ones.
                let level = &pool[rng.gen_range(0..pool.len())];
                let m = level[rng.gen_range(0..level.len())].clone();
                let mut c = rng.gen_range(1..=3i64);
                if rng.gen_bool(0.5) {
                    c = -c;
                }
                out.add_term(m, sig.field.from_i64(c));
            }
        }
        out
    }
}

/// Substitute values into both sides and compare exactly.
///
/// Trial `i` draws from its own ChaCha stream `(seed, i)`, so any subset of
/// trials can be rerun in isolation with the same values.
pub fn check_identity(id: &Identity, sig: &Signature, cfg: &CheckConfig) -> Result<Outcome> {
    let pool = ValuePool::new(sig, cfg.max_degree);
    for spec in &id.vars {
        let options: &[Parity] = match spec.parity {
            Some(Parity::Even) => &[Parity::Even],
            Some(Parity::Odd) => &[Parity::Odd],
            None => &[Parity::Even, Parity::Odd],
        };
        if options.iter().all(|&p| !pool.has(p)) {
            return Err(Error::Pattern(format!("signature has no values for variable {}", spec.name)));
        }
    }

    let gens = sig.generators();
    let mut exhaustive = 0usize;
    if id.degree() <= cfg.exhaustive_degree {
        let choices: Vec<Vec<Generator>> = id
            .vars
            .iter()
            .map(|v| gens.iter().copied().filter(|g| v.parity.is_none_or(|p| p == g.parity)).collect())
            .collect();
        let total = choices.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()));
        if total.is_some_and(|t| t > 0 && t <= cfg.exhaustive_cap) {
            let mut idx = vec![0usize; choices.len()];
            loop {
                let values: Vec<SuperPolynomial> = idx
                    .iter()
                    .zip(&choices)
                    .map(|(&i, c)| SuperPolynomial::generator(*sig, c[i]))
                    .collect::<Result<_>>()?;
                let (lhs, rhs) = id.sides(&values)?;
                if lhs != rhs {
                    return Ok(Outcome::Fail(Box::new(Witness { trial: None, values, lhs, rhs })));
                }
                exhaustive += 1;
                let mut k = 0;
                while k < idx.len() {
                    idx[k] += 1;
                    if idx[k] < choices[k].len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == idx.len() {
                    break;
                }
            }
        }
    }

    for trial in 0..cfg.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(trial as u64);
        let values: Vec<SuperPolynomial> = id
            .vars
            .iter()
            .map(|v| {
                let parity = match v.parity {
                    Some(p) => p,
                    None => {
                        let p = Parity::from_bit(rng.gen_bool(0.5));
                        if !pool.has(p) {
                            p + Parity::Odd
                        } else {
                            p
                        }
                    }
                };
                pool.draw(&mut rng, sig, parity)
            })
            .collect();
        let (lhs, rhs) = id.sides(&values)?;
        if lhs != rhs {
            return Ok(Outcome::Fail(Box::new(Witness { trial: Some(trial), values, lhs, rhs })));
        }
    }
    Ok(Outcome::Pass { random_trials: cfg.trials, exhaustive_cases: exhaustive })
}

fn left_comb(head: &str, rights: &[String]) -> String {
    rights.iter().fold(head.to_string(), |acc, r| format!("({acc} {r})"))
}

fn right_comb(lefts: &[String], inner: &str) -> String {
    lefts.iter().rev().fold(inner.to_string(), |acc, l| format!("({l} {acc})"))
}

fn xs(range: core::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| format!("x{i}")).collect()
}

fn sum_of(names: &[String]) -> String {
    if names.is_empty() {
        "0".into()
    } else {
        names.join("+")
    }
}

/// The defining identities and their standard consequences, instantiated at
/// the given length parameter `k` (number of variables in the long forms).
pub fn catalog(k: usize) -> Vec<(&'static str, Identity)> {
    let k = k.max(4);
    let tail = xs(4..=k);
    let tail_sum = sum_of(&tail);
    let mut out: Vec<(&'static str, Identity)> = Vec::new();
    let mut push = |name: &'static str, lhs: String, rhs: String, sign: String, odd: &[&str]| {
        let mut id = Identity::parse(&lhs, &rhs, &sign).expect("catalog identity parses");
        for v in odd {
            id = id.with_parity(v, Parity::Odd).expect("catalog variable exists");
        }
        out.push((name, id));
    };
    push("superleft", "(x1 (x2 x3))".into(), "(x2 (x1 x3))".into(), "x1*x2".into(), &[]);
    push("superright", "((x1 x2) x3)".into(), "((x1 x3) x2)".into(), "x2*x3".into(), &[]);
    push("weak-associativity", "(x1 ((x2 x3) x4))".into(), "((x1 (x2 x3)) x4)".into(), String::new(), &[]);
    push(
        "two-odd-in-left-box",
        format!("(x2 {})", left_comb("(x1 x3)", &tail)),
        format!("(x1 {})", left_comb("(x2 x3)", &tail)),
        "x1*x2".into(),
        &[],
    );
    push("repeated-odd-in-left-box", format!("(z {})", left_comb("(z x1)", &xs(2..=k - 2))), "0".into(), String::new(), &["z"]);
    push(
        "two-odd-in-left",
        format!("(x2 {})", right_comb(&tail.iter().rev().cloned().collect::<Vec<_>>(), "(x1 x3)")),
        format!("(x1 {})", right_comb(&tail.iter().rev().cloned().collect::<Vec<_>>(), "(x2 x3)")),
        format!("({tail_sum})*(x1+x2)+x1*x2"),
        &[],
    );
    push(
        "repeated-odd-in-left",
        format!("(z {})", right_comb(&xs(2..=k - 2).iter().rev().cloned().collect::<Vec<_>>(), "(z x1)")),
        "0".into(),
        String::new(),
        &["z"],
    );
    push(
        "two-odd-in-right",
        format!("({} x2)", left_comb("(x3 x1)", &tail)),
        format!("({} x1)", left_comb("(x3 x2)", &tail)),
        format!("({tail_sum})*(x1+x2)+x1*x2"),
        &[],
    );
    push("repeated-odd-in-right", format!("({} z)", left_comb("(x1 z)", &xs(2..=k - 2))), "0".into(), String::new(), &["z"]);
    // u = (..(u1 u2)..)u_j, v = (a b) in the square.
    let us: Vec<String> = (2..=k - 1).map(|i| format!("u{i}")).collect();
    push(
        "product-to-front",
        format!("({} (a b))", left_comb("u1", &us)),
        format!("(u1 {})", left_comb("(a b)", &us)),
        format!("({})*(a+b)", sum_of(&us)),
        &[],
    );
    push("square-associative", "(((a b) (c d)) (e f))".into(), "((a b) ((c d) (e f)))".into(), String::new(), &[]);
    push("square-supercommutative", "((a b) (c d))".into(), "((c d) (a b))".into(), "(a+b)*(c+d)".into(), &[]);
    out.push(("main-lemma", main_lemma(2, 2, 2, 2).expect("valid shape")));
    out.push(("permuting-left", permuting_variables(2, 3, &[4, 1, 3, 5, 2], Side::Left).expect("permutation")));
    out.push(("permuting-right", permuting_variables(2, 3, &[5, 4, 2, 3, 1], Side::Right).expect("permutation")));
    out
}

/// The product of two left-normed chains, moved into a single right-normed
/// chain: `k, l, m, n >= 1` count the `t`, `u`, `v` and `w` variables.
pub fn main_lemma(k: usize, l: usize, m: usize, n: usize) -> Result<Identity> {
    if k.min(l).min(m).min(n) == 0 {
        return Err(Error::Pattern("main lemma needs k, l, m, n >= 1".into()));
    }
    let names = |c: char, r: core::ops::RangeInclusive<usize>| -> Vec<String> { r.map(|i| format!("{c}{i}")).collect() };
    let ts = names('t', 1..=k);
    let us = names('u', 1..=l);
    let vs = names('v', 1..=m);
    let ws = names('w', 1..=n);
    let outer = |v: &[String]| -> Vec<String> { v.iter().rev().cloned().collect() };
    let a = right_comb(&outer(&ts[1..]), &left_comb("t1", &us));
    let b = right_comb(&outer(&vs[1..]), &left_comb("v1", &ws));
    let inner = left_comb(&left_comb("v1", &ws), &us);
    let rhs = right_comb(&outer(&ts), &right_comb(&outer(&vs[1..]), &inner));
    let vw: Vec<String> = vs.iter().chain(&ws).cloned().collect();
    let sign = format!("({})*({})", sum_of(&us), sum_of(&vw));
    Identity::parse(&format!("({a} {b})"), &rhs, &sign)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Reordering generators acting on `u` from one side: even variables
/// `y1..yk`, odd variables `z1..zl`, applied in the order `sigma` (a
/// permutation of `1..=k+l`, where `j > k` names `z_{j-k}`). The sign counts
/// inversions among the odd variables.
pub fn permuting_variables(k: usize, l: usize, sigma: &[usize], side: Side) -> Result<Identity> {
    let mut seen = sigma.to_vec();
    seen.sort_unstable();
    if seen != (1..=k + l).collect::<Vec<_>>() {
        return Err(Error::Pattern(format!("{sigma:?} is not a permutation of 1..={}", k + l)));
    }
    let name = |j: usize| if j <= k { format!("y{j}") } else { format!("z{}", j - k) };
    let permuted: Vec<String> = sigma.iter().map(|&j| name(j)).collect();
    let sorted: Vec<String> = (1..=k + l).map(name).collect();
    let odd: Vec<usize> = sigma.iter().copied().filter(|&j| j > k).collect();
    let inversions = (0..odd.len()).flat_map(|a| (a + 1..odd.len()).map(move |b| (a, b))).filter(|&(a, b)| odd[a] > odd[b]).count();
    let (lhs, rhs) = match side {
        Side::Left => (right_comb(&permuted, "u"), right_comb(&sorted, "u")),
        Side::Right => (left_comb("u", &permuted), left_comb("u", &sorted)),
    };
    let mut id = Identity::parse(&lhs, &rhs, if inversions % 2 == 1 { "1" } else { "0" })?;
    for j in 1..=k + l {
        id = id.with_parity(&name(j), if j <= k { Parity::Even } else { Parity::Odd })?;
    }
    Ok(id)
}

/// Lookup in [`catalog`] by name.
pub fn named(name: &str, k: usize) -> Option<Identity> {
    catalog(k).into_iter().find(|(n, _)| *n == name).map(|(_, id)| id)
}

/// Names in [`catalog`], in order.
pub fn catalog_names() -> Vec<&'static str> {
    catalog(4).into_iter().map(|(n, _)| n).collect()
}

/// Parity assignment summary used in reports.
pub fn parity_table(id: &Identity) -> BTreeMap<String, String> {
    id.vars
        .iter()
        .map(|v| (v.name.clone(), v.parity.map_or_else(|| "any".to_string(), |p| p.to_string())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig() -> Signature {
        Signature::new(2, 3).unwrap()
    }

    fn quick() -> CheckConfig {
        CheckConfig { trials: 40, seed: 7, ..CheckConfig::default() }
    }

    #[test]
    fn superleft_passes() {
        let id = Identity::parse("(x1 (x2 x3))", "(x2 (x1 x3))", "x1*x2").unwrap();
        assert!(check_identity(&id, &sig(), &quick()).unwrap().passed());
    }

    #[test]
    fn weak_associativity_passes() {
        let id = Identity::parse("(x1 ((x2 x3) x4))", "((x1 (x2 x3)) x4)", "").unwrap();
        assert!(check_identity(&id, &sig(), &quick()).unwrap().passed());
    }

    #[test]
    fn dropped_sign_fails_with_witness() {
        let id = Identity::parse("(x1 (x2 x3))", "(x2 (x1 x3))", "")
            .unwrap()
            .with_parity("x1", Parity::Odd)
            .unwrap()
            .with_parity("x2", Parity::Odd)
            .unwrap();
        match check_identity(&id, &sig(), &quick()).unwrap() {
            Outcome::Fail(w) => assert_ne!(w.lhs, w.rhs),
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn pattern_errors() {
        assert!(matches!(Identity::parse("(x1 x2)", "(x1 x3)", ""), Err(Error::Pattern(_))));
        assert!(matches!(Identity::parse("(x1 x2)", "(x2 x1)", "x1*q"), Err(Error::Pattern(_))));
        assert!(matches!(Identity::parse("(x1 x2)", "(x2 x1)", "x1*"), Err(Error::Pattern(_))));
        let id = Identity::parse("(x1 x2)", "(x2 x1)", "").unwrap();
        let s = sig();
        let one = SuperPolynomial::generator(s, Generator::y(1)).unwrap();
        assert!(matches!(id.sides(&[one]), Err(Error::Pattern(_))));
    }

    #[test]
    fn sign_algebra() {
        let vars: Vec<VarSpec> = ["a", "b", "c"].iter().map(|n| VarSpec { name: (*n).into(), parity: None }).collect();
        let e = parse_sign("(a+b)*(a+c)", &vars).unwrap();
        // a + ac + ab + bc over GF(2) with a*a = a
        assert_eq!(e.summands().len(), 4);
        let f = parse_sign("a*b + a*b + 1", &vars).unwrap();
        assert_eq!(f, SignExponent::constant(true));
    }

    #[test]
    fn catalog_is_well_formed() {
        let names = catalog_names();
        assert!(names.contains(&"main-lemma"));
        for (name, id) in catalog(5) {
            assert!(id.degree() >= 3, "{name}");
        }
    }

    #[test]
    fn trials_are_reproducible() {
        let id = Identity::parse("(x1 (x2 x3))", "(x2 (x1 x3))", "").unwrap();
        let a = check_identity(&id, &sig(), &quick()).unwrap();
        let b = check_identity(&id, &sig(), &quick()).unwrap();
        assert_eq!(a, b);
    }
}
