//! Text grammar shared by the command line and tests.
//!
//! ```text
//! generator   y3 | z2
//! tensor      y1^2 y3 z2 | y1 z1
//! polynomial  3/2 * y1|z1 + -1 * z1|y1        (or 0)
//! term        (y1 (z1 y2))
//! ```
//!
//! Factors may list letters in any order; odd letters are sorted with the
//! matching sign and a repeated odd letter makes the monomial zero.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::monomial::{BasisMonomial, Factor, TensorMonomial};
use crate::poly::SuperPolynomial;
use crate::signature::{Generator, Signature};

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if !core::mem::take(&mut first) {
                f.write_str(" ")
            } else {
                Ok(())
            }
        };
        for (i, &e) in self.y.iter().enumerate() {
            if e == 0 {
                continue;
            }
            sep(f)?;
            write!(f, "y{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        for j in &self.z {
            sep(f)?;
            write!(f, "z{j}")?;
        }
        Ok(())
    }
}

impl fmt::Display for TensorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.left, self.right)
    }
}

impl fmt::Display for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisMonomial::Gen(g) => write!(f, "{g}"),
            BasisMonomial::Tensor(t) => write!(f, "{t}"),
        }
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c} * {m}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Tok {
    Num(BigRational),
    Ident(String),
    Caret,
    Bar,
    Star,
    Plus,
    Minus,
    LParen,
    RParen,
}

pub(crate) fn lex(input: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'^' => out.push((start, Tok::Caret)),
            b'|' => out.push((start, Tok::Bar)),
            b'*' => out.push((start, Tok::Star)),
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'(' => out.push((start, Tok::LParen)),
            b')' => out.push((start, Tok::RParen)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: BigInt = input[start..i].parse().map_err(|_| Error::parse(start, "bad integer"))?;
                let mut value = BigRational::from_integer(numer);
                if i < bytes.len() && bytes[i] == b'/' {
                    let ds = i + 1;
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let denom: BigInt = input[ds..i].parse().map_err(|_| Error::parse(ds, "bad denominator"))?;
                    if denom.is_zero() {
                        return Err(Error::parse(ds, "zero denominator"));
                    }
                    value /= BigRational::from_integer(denom);
                }
                out.push((start, Tok::Num(value)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(input[start..i].to_string())));
                continue;
            }
            _ => return Err(Error::parse(start, alloc::format!("unexpected character {:?}", c as char))),
        }
        i += 1;
    }
    Ok(out)
}

/// Parse `y<i>` / `z<j>` and validate the index against `sig`.
pub fn parse_generator(name: &str, pos: usize, sig: &Signature) -> Result<Generator> {
    let (letter, digits) = name.split_at(1.min(name.len()));
    let index: usize = digits.parse().map_err(|_| Error::parse(pos, alloc::format!("unknown generator {name:?}")))?;
    let g = match letter {
        "y" => Generator::y(index),
        "z" => Generator::z(index),
        _ => return Err(Error::parse(pos, alloc::format!("unknown generator {name:?}"))),
    };
    sig.check_generator(g).map_err(|_| Error::parse(pos, alloc::format!("generator {name} out of range")))?;
    Ok(g)
}

struct Cursor<'a> {
    toks: &'a [(usize, Tok)],
    at: usize,
    end: usize,
}

impl<'a> Cursor<'a> {
    fn new(toks: &'a [(usize, Tok)], end: usize) -> Self {
        Cursor { toks, at: 0, end }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<&'a Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t);
        self.at += 1;
        t
    }
}

/// Parse one factor word, stopping at `|`, `+`, `-` or end of input.
fn parse_word(cur: &mut Cursor<'_>, sig: &Signature) -> Result<Vec<Generator>> {
    let mut word = Vec::new();
    while let Some(Tok::Ident(name)) = cur.peek() {
        let pos = cur.pos();
        let g = parse_generator(name, pos, sig)?;
        cur.bump();
        let mut exp = 1usize;
        if let Some(Tok::Caret) = cur.peek() {
            cur.bump();
            let pos = cur.pos();
            match cur.bump() {
                Some(Tok::Num(n)) if n.is_integer() && *n >= BigRational::one() => {
                    exp = n.to_integer().try_into().map_err(|_| Error::parse(pos, "exponent too large"))?;
                }
                _ => return Err(Error::parse(pos, "expected a positive integer exponent")),
            }
        }
        word.extend(core::iter::repeat_n(g, exp));
    }
    Ok(word)
}

/// Parse a monomial as written; returns the sign from reordering odd letters,
/// or `None` if the written monomial is zero.
fn parse_monomial_at(cur: &mut Cursor<'_>, sig: &Signature) -> Result<Option<(bool, BasisMonomial)>> {
    let pos = cur.pos();
    let left = parse_word(cur, sig)?;
    if left.is_empty() {
        return Err(Error::parse(pos, "expected a monomial"));
    }
    if let Some(Tok::Bar) = cur.peek() {
        cur.bump();
        let rpos = cur.pos();
        let right = parse_word(cur, sig)?;
        if right.is_empty() {
            return Err(Error::parse(rpos, "right tensor factor is empty"));
        }
        let (Some((s1, u)), Some((s2, v))) = (Factor::from_word(&left, sig), Factor::from_word(&right, sig)) else {
            return Ok(None);
        };
        Ok(Some((s1 ^ s2, BasisMonomial::Tensor(TensorMonomial { left: u, right: v }))))
    } else if left.len() == 1 {
        Ok(Some((false, BasisMonomial::Gen(left[0]))))
    } else {
        Err(Error::parse(pos, "a product of generators needs a '|' between tensor factors"))
    }
}

/// Parse a single monomial such as `y1^2 z2 | z1`, returning it with its sign.
pub fn parse_monomial(input: &str, sig: &Signature) -> Result<Option<(Scalar, BasisMonomial)>> {
    let toks = lex(input)?;
    let mut cur = Cursor::new(&toks, input.len());
    let m = parse_monomial_at(&mut cur, sig)?;
    if cur.peek().is_some() {
        return Err(Error::parse(cur.pos(), "unexpected trailing input"));
    }
    Ok(m.map(|(neg, m)| (sig.field.from_i64(if neg { -1 } else { 1 }), m)))
}

pub fn parse_polynomial(input: &str, sig: &Signature) -> Result<SuperPolynomial> {
    let toks = lex(input)?;
    let mut cur = Cursor::new(&toks, input.len());
    let mut out = SuperPolynomial::zero(*sig);
    if toks.is_empty() {
        return Err(Error::parse(0, "empty polynomial"));
    }
    if toks.len() == 1 && matches!(&toks[0].1, Tok::Num(n) if n.is_zero()) {
        return Ok(out);
    }
    let mut first = true;
    loop {
        let mut negative = false;
        if !first {
            match cur.bump() {
                Some(Tok::Plus) => {}
                Some(Tok::Minus) => negative = true,
                None => break,
                Some(_) => return Err(Error::parse(cur.toks[cur.at - 1].0, "expected '+' between terms")),
            }
        }
        first = false;
        while let Some(Tok::Minus) = cur.peek() {
            cur.bump();
            negative = !negative;
        }
        let mut coeff = BigRational::one();
        if let Some(Tok::Num(n)) = cur.peek() {
            coeff = n.clone();
            cur.bump();
            match cur.peek() {
                Some(Tok::Star) => {
                    cur.bump();
                }
                _ => return Err(Error::parse(cur.pos(), "expected '*' after coefficient")),
            }
        }
        if negative {
            coeff = -coeff;
        }
        if let Some((neg, m)) = parse_monomial_at(&mut cur, sig)? {
            out.add_term(m, if neg { -coeff } else { coeff });
        }
        if cur.peek().is_none() {
            break;
        }
    }
    Ok(out)
}

/// A binary tree with named leaves; the common shape behind terms and identity patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tree {
    Leaf(String, usize),
    Node(Box<Tree>, Box<Tree>),
}

pub(crate) fn parse_tree(input: &str) -> Result<Tree> {
    let toks = lex(input)?;
    let mut cur = Cursor::new(&toks, input.len());
    let t = tree_at(&mut cur)?;
    if cur.peek().is_some() {
        return Err(Error::parse(cur.pos(), "unexpected trailing input; wrap products in parentheses"));
    }
    Ok(t)
}

fn tree_at(cur: &mut Cursor<'_>) -> Result<Tree> {
    let pos = cur.pos();
    match cur.bump() {
        Some(Tok::Ident(name)) => Ok(Tree::Leaf(name.clone(), pos)),
        Some(Tok::LParen) => {
            let a = tree_at(cur)?;
            let b = tree_at(cur)?;
            let close = cur.pos();
            match cur.bump() {
                Some(Tok::RParen) => Ok(Tree::Node(Box::new(a), Box::new(b))),
                Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    Err(Error::parse(close, "ambiguous unparenthesized product; the product is not associative"))
                }
                _ => Err(Error::parse(close, "expected ')'")),
            }
        }
        Some(Tok::RParen) => Err(Error::parse(pos, "unexpected ')'")),
        Some(_) => Err(Error::parse(pos, "expected a generator or '('")),
        None => Err(Error::parse(pos, "unexpected end of input")),
    }
}
