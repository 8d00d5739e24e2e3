//! Sparse multivariate polynomials in canonical form.
//!
//! Terms are kept strictly descending in the ring's monomial order with no
//! zero coefficients, so equality of canonical forms is equality in the ring.

use crate::error::{Error, Result};
use crate::ring::{same_ring, Monomial, RingSpec};
use rand::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub coeff: u64,
    pub mon: Monomial,
}

#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<RingSpec>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        Self {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<RingSpec>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Arc<RingSpec>, c: u64) -> Self {
        let c = c % ring.field().modulus();
        let mut terms = Vec::new();
        if c != 0 {
            terms.push(Term {
                coeff: c,
                mon: Monomial::one(ring.nvars()),
            });
        }
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn variable(ring: &Arc<RingSpec>, index: usize) -> Self {
        Self {
            ring: ring.clone(),
            terms: vec![Term {
                coeff: 1,
                mon: Monomial::var(index, ring.nvars()),
            }],
        }
    }

    /// Build a canonical polynomial from arbitrary terms: reduces
    /// coefficients, merges equal monomials, drops zeros, sorts descending.
    pub fn from_terms(ring: &Arc<RingSpec>, mut terms: Vec<Term>) -> Self {
        let p = ring.field();
        terms.retain(|t| t.coeff % p.modulus() != 0);
        for t in &mut terms {
            t.coeff %= p.modulus();
        }
        terms.sort_by(|a, b| ring.cmp_monomials(&b.mon, &a.mon));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.mon == t.mon => {
                    last.coeff = p.add(last.coeff, t.coeff);
                }
                _ => merged.push(t),
            }
        }
        merged.retain(|t| t.coeff != 0);
        Self {
            ring: ring.clone(),
            terms: merged,
        }
    }

    #[inline]
    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|t| t.mon.is_one())
    }

    /// Nonzero constant, i.e. a unit.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mon.is_one()
    }

    #[inline]
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Weighted degree of the leading term.
    pub fn degree(&self) -> Option<i64> {
        self.leading_term().map(|t| self.ring.wdeg(&t.mon))
    }

    /// `Some(d)` when every term has weighted degree `d`; `None` for the zero
    /// polynomial or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let first = self.terms.first()?;
        let d = self.ring.wdeg(&first.mon);
        self.terms
            .iter()
            .all(|t| self.ring.wdeg(&t.mon) == d)
            .then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(
            same_ring(&self.ring, &other.ring),
            "polynomials from different rings"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let p = self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match self.ring.cmp_monomials(&a.mon, &b.mon) {
                Ordering::Greater => {
                    terms.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = p.add(a.coeff, b.coeff);
                    if c != 0 {
                        terms.push(Term {
                            coeff: c,
                            mon: a.mon.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        Self {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Self {
        let p = self.ring.field();
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: p.neg(t.coeff),
                    mon: t.mon.clone(),
                })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Multiply by a single term. Monomial orders are multiplicative, so the
    /// term list stays sorted; this is the hot path of reduction.
    pub fn mul_term(&self, coeff: u64, mon: &Monomial) -> Self {
        let p = self.ring.field();
        let coeff = coeff % p.modulus();
        if coeff == 0 {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: p.mul(t.coeff, coeff),
                    mon: t.mon.mul(mon),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let p = self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(Term {
                    coeff: p.mul(a.coeff, b.coeff),
                    mon: a.mon.mul(&b.mon),
                });
            }
        }
        Self::from_terms(&self.ring, terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Checked variants enforcing the same-ring precondition as an error.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("add of different rings".into()));
        }
        Ok(self.add(other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("mul of different rings".into()));
        }
        Ok(self.mul(other))
    }

    /// Formal partial derivative with respect to one variable.
    pub fn partial_derivative(&self, var: usize) -> Self {
        let p = self.ring.field();
        let mut terms = Vec::new();
        for t in &self.terms {
            let e = t.mon.exp(var);
            if e == 0 {
                continue;
            }
            let c = p.mul(t.coeff, e as u64 % p.modulus());
            if c != 0 {
                terms.push(Term {
                    coeff: c,
                    mon: t.mon.with_exp(var, e - 1),
                });
            }
        }
        Self::from_terms(&self.ring, terms)
    }

    /// Dense random homogeneous polynomial of weighted degree `d`: every
    /// monomial receives a coefficient derived deterministically from
    /// `(seed, d, ring)`.
    pub fn random_homogeneous(ring: &Arc<RingSpec>, d: i64, seed: u64) -> Self {
        let mut h = seed;
        for part in [0x9e3779b97f4a7c15u64, d as u64, ring.fingerprint()] {
            h = splitmix64(h ^ part);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(h);
        let p = ring.field().modulus();
        let terms = ring
            .monomials_of_degree(d)
            .into_iter()
            .map(|mon| Term {
                coeff: rng.next_u64() % p,
                mon,
            })
            .collect();
        Self::from_terms(ring, terms)
    }

    /// Map into a ring extending this one by trailing variables.
    pub fn extended(&self, ring: &Arc<RingSpec>) -> Self {
        assert!(ring.nvars() >= self.ring.nvars());
        Polynomial {
            ring: ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff,
                    mon: t.mon.extended(ring.nvars()),
                })
                .collect(),
        }
        .resorted()
    }

    /// Map into a smaller ring; errors when a dropped variable occurs.
    pub fn truncated(&self, ring: &Arc<RingSpec>) -> Result<Self> {
        let n = ring.nvars();
        for t in &self.terms {
            if t.mon.exps()[n..].iter().any(|&e| e != 0) {
                return Err(Error::RingMismatch(
                    "polynomial involves a variable outside the target ring".into(),
                ));
            }
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff,
                    mon: t.mon.truncated(n),
                })
                .collect(),
        }
        .resorted())
    }

    fn resorted(mut self) -> Self {
        self.terms
            .sort_by(|a, b| self.ring.cmp_monomials(&b.mon, &a.mon));
        self
    }

    /// Drop the leading term; the remaining tail is already canonical.
    pub(crate) fn without_leading_term(&self) -> Self {
        if self.terms.is_empty() {
            return self.clone();
        }
        Self {
            ring: self.ring.clone(),
            terms: self.terms[1..].to_vec(),
        }
    }

    /// Total order on polynomials of one ring; used only to make generator
    /// lists deterministic.
    pub fn cmp_for_sort(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            match self
                .ring
                .cmp_monomials(&a.mon, &b.mon)
                .then(a.coeff.cmp(&b.coeff))
            {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// Arithmetic dispatch mirroring the operation surface: add, mul, pow, scale.
pub enum PolyOp<'a> {
    Add(&'a Polynomial),
    Mul(&'a Polynomial),
    Pow(u32),
    Scale(u64),
}

pub fn poly_arith(a: &Polynomial, op: PolyOp<'_>) -> Result<Polynomial> {
    match op {
        PolyOp::Add(b) => a.checked_add(b),
        PolyOp::Mul(b) => a.checked_mul(b),
        PolyOp::Pow(e) => Ok(a.pow(e)),
        PolyOp::Scale(c) => Ok(a.scale(c)),
    }
}

/// Formal partials with respect to x, y, z; the input must not involve other
/// variables.
pub fn jacobian_partials(f: &Polynomial) -> Result<(Polynomial, Polynomial, Polynomial)> {
    let ring = f.ring();
    if ring.nvars() < 3 {
        return Err(Error::Precondition("ring must contain x, y, z".into()));
    }
    for t in f.terms() {
        if t.mon.exps()[3..].iter().any(|&e| e != 0) {
            return Err(Error::Precondition(
                "jacobian input must involve only x, y, z".into(),
            ));
        }
    }
    Ok((
        f.partial_derivative(0),
        f.partial_derivative(1),
        f.partial_derivative(2),
    ))
}

// ---------------------------------------------------------------------------
// Parsing and printing
//
// Grammar: poly := ['-'] term (('+'|'-') term)*
//          term := coeff | [coeff '*'] var ('^' nat)? ('*' var ('^' nat)?)*
// with `coeff` a decimal integer; whitespace is insignificant. Bare integer
// constants are accepted so unit ideals and constant normal forms round-trip.
// ---------------------------------------------------------------------------

#[derive(Debug, PartialEq)]
enum Tok {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn lex(text: &str, p: u64) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '+' => {
                chars.next();
                toks.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                toks.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                toks.push(Tok::Star);
            }
            '^' => {
                chars.next();
                toks.push(Tok::Caret);
            }
            '0'..='9' => {
                let mut v: u64 = 0;
                while let Some(&d) = chars.peek() {
                    if let Some(digit) = d.to_digit(10) {
                        v = (v * 10 + digit as u64) % p;
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Int(v));
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Ident(name));
            }
            other => {
                return Err(Error::Parse(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: std::iter::Peekable<std::vec::IntoIter<Tok>>,
    ring: &'a Arc<RingSpec>,
}

impl<'a> Parser<'a> {
    fn parse_nat(&mut self) -> Result<u16> {
        match self.toks.next() {
            Some(Tok::Int(v)) => {
                // lexing reduced mod p; exponents must be re-read as plain
                // naturals, so reject anything that was reduced
                if v > u16::MAX as u64 {
                    return Err(Error::Parse("exponent too large".into()));
                }
                Ok(v as u16)
            }
            Some(Tok::Minus) => Err(Error::Parse("negative exponent".into())),
            _ => Err(Error::Parse("expected exponent after `^`".into())),
        }
    }

    fn parse_var_factor(&mut self, exps: &mut [u16]) -> Result<()> {
        match self.toks.next() {
            Some(Tok::Ident(name)) => {
                let idx = self
                    .ring
                    .var_index(&name)
                    .ok_or(Error::UnknownVariable(name))?;
                let e = if matches!(self.toks.peek(), Some(Tok::Caret)) {
                    self.toks.next();
                    self.parse_nat()?
                } else {
                    1
                };
                let (v, over) = exps[idx].overflowing_add(e);
                if over {
                    return Err(Error::Parse("exponent too large".into()));
                }
                exps[idx] = v;
                Ok(())
            }
            _ => Err(Error::Parse("expected a variable".into())),
        }
    }

    fn parse_term(&mut self) -> Result<Term> {
        let mut exps = vec![0u16; self.ring.nvars()];
        let coeff = if let Some(Tok::Int(_)) = self.toks.peek() {
            let Some(Tok::Int(v)) = self.toks.next() else {
                unreachable!()
            };
            if matches!(self.toks.peek(), Some(Tok::Star)) {
                self.toks.next();
                self.parse_var_factor(&mut exps)?;
            } else {
                // bare constant term
                return Ok(Term {
                    coeff: v,
                    mon: Monomial::from_exps(&exps),
                });
            }
            v
        } else {
            self.parse_var_factor(&mut exps)?;
            1
        };
        while matches!(self.toks.peek(), Some(Tok::Star)) {
            self.toks.next();
            self.parse_var_factor(&mut exps)?;
        }
        Ok(Term {
            coeff,
            mon: Monomial::from_exps(&exps),
        })
    }
}

/// Parse the polynomial text grammar; coefficients are reduced mod p.
pub fn parse_polynomial(text: &str, ring: &Arc<RingSpec>) -> Result<Polynomial> {
    let p = ring.field().modulus();
    let toks = lex(text, p)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut parser = Parser {
        toks: toks.into_iter().peekable(),
        ring,
    };
    let field = ring.field();
    let mut terms: Vec<Term> = Vec::new();
    let mut negate = match parser.toks.peek() {
        Some(Tok::Minus) => {
            parser.toks.next();
            true
        }
        _ => false,
    };
    loop {
        let mut t = parser.parse_term()?;
        if negate {
            t.coeff = field.neg(t.coeff % p);
        }
        terms.push(t);
        match parser.toks.next() {
            None => break,
            Some(Tok::Plus) => negate = false,
            Some(Tok::Minus) => negate = true,
            Some(_) => return Err(Error::Parse("malformed polynomial".into())),
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (i, t) in self.terms.iter().enumerate() {
            let c = field.symmetric(t.coeff);
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mon_str = monomial_string(&t.mon, &self.ring);
            match (&mon_str[..], mag) {
                ("", m) => write!(f, "{m}")?,
                (s, 1) => write!(f, "{s}")?,
                (s, m) => write!(f, "{m}*{s}")?,
            }
        }
        Ok(())
    }
}

fn monomial_string(m: &Monomial, ring: &RingSpec) -> String {
    let mut parts = Vec::new();
    for (i, name) in ring.vars().iter().enumerate() {
        match m.exp(i) {
            0 => {}
            1 => parts.push(name.clone()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn ring(p: u64) -> Arc<RingSpec> {
        RingSpec::p2(PrimeField::new(p).unwrap())
    }

    #[test]
    fn parse_examples() {
        let r = ring(7);
        let f = parse_polynomial("x^2 + 2*y*z", &r).unwrap();
        assert_eq!(f.terms().len(), 2);
        assert_eq!(f.homogeneous_degree(), Some(2));

        let f = PrimeField::new(32003).unwrap();
        let r4 = RingSpec::double_cover_ambient(f, 3).unwrap();
        let g = parse_polynomial("t^2 - x^6", &r4).unwrap();
        assert_eq!(g.homogeneous_degree(), Some(6));

        let z = parse_polynomial("7*x", &ring(7)).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn parse_errors() {
        let r = ring(7);
        assert!(matches!(
            parse_polynomial("x + w", &r),
            Err(Error::UnknownVariable(_))
        ));
        assert!(parse_polynomial("x +", &r).is_err());
        assert!(parse_polynomial("x ^", &r).is_err());
        assert!(matches!(
            parse_polynomial("x^-2", &r),
            Err(Error::Parse(msg)) if msg.contains("negative exponent")
        ));
        assert!(parse_polynomial("2*3*x", &r).is_err());
    }

    #[test]
    fn product_of_conjugates() {
        let r = ring(32003);
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        let lhs = x.add(&y).mul(&x.sub(&y));
        let rhs = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(lhs, rhs);
        assert!(lhs.mul(&Polynomial::zero(&r)).is_zero());
    }

    #[test]
    fn frobenius_against_multinomial_oracle() {
        for p in [5u64, 7, 13] {
            let r = ring(p);
            let x = Polynomial::variable(&r, 0);
            let y = Polynomial::variable(&r, 1);
            let lhs = x.add(&y).pow(p as u32);
            // Pascal's triangle mod p, independent of polynomial multiplication
            let mut row = vec![1u64];
            for _ in 0..p {
                let mut next = vec![1u64];
                for w in row.windows(2) {
                    next.push((w[0] + w[1]) % p);
                }
                next.push(1);
                row = next;
            }
            let mut terms = Vec::new();
            for (k, &c) in row.iter().enumerate() {
                if c % p != 0 {
                    terms.push(Term {
                        coeff: c,
                        mon: Monomial::from_exps(&[(p as usize - k) as u16, k as u16, 0]),
                    });
                }
            }
            let oracle = Polynomial::from_terms(&r, terms);
            assert_eq!(lhs, oracle);
            let expect = x.pow(p as u32).add(&y.pow(p as u32));
            assert_eq!(lhs, expect);
        }
    }

    #[test]
    fn random_generation_is_deterministic_and_dense() {
        let r = ring(32003);
        let a = Polynomial::random_homogeneous(&r, 2, 42);
        let b = Polynomial::random_homogeneous(&r, 2, 42);
        assert_eq!(a, b);
        assert!(a.terms().len() <= 6);
        let c = Polynomial::random_homogeneous(&r, 2, 43);
        assert_ne!(a, c);
        let lin = Polynomial::random_homogeneous(&r, 1, 7);
        assert_eq!(lin.homogeneous_degree(), Some(1));
        assert!(lin.terms().len() <= 3);
    }

    #[test]
    fn partials_and_euler_identity() {
        let r = ring(32003);
        let x = Polynomial::variable(&r, 0);
        let (fx, fy, fz) = jacobian_partials(&x.mul(&x)).unwrap();
        assert_eq!(fx, x.scale(2));
        assert!(fy.is_zero() && fz.is_zero());

        let xyz = parse_polynomial("x*y*z", &r).unwrap();
        let (fx, fy, fz) = jacobian_partials(&xyz).unwrap();
        assert_eq!(fx, parse_polynomial("y*z", &r).unwrap());
        assert_eq!(fy, parse_polynomial("x*z", &r).unwrap());
        assert_eq!(fz, parse_polynomial("x*y", &r).unwrap());

        let f = Polynomial::random_homogeneous(&r, 6, 11);
        let (fx, fy, fz) = jacobian_partials(&f).unwrap();
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        let z = Polynomial::variable(&r, 2);
        let sum = x.mul(&fx).add(&y.mul(&fy)).add(&z.mul(&fz));
        assert_eq!(sum, f.scale(6));
    }

    #[test]
    fn display_round_trips() {
        let r = ring(32003);
        for seed in 0..10 {
            let f = Polynomial::random_homogeneous(&r, 3, seed);
            let back = parse_polynomial(&f.to_string(), &r).unwrap();
            assert_eq!(f, back);
        }
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        let c = Polynomial::constant(&r, 32002);
        assert_eq!(c.to_string(), "-1");
        assert_eq!(parse_polynomial("-1", &r).unwrap(), c);
    }
}
