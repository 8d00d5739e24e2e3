//! Weighted polynomial ring descriptions, monomials, and monomial orders.
//!
//! Every ring fixes a variable list, a positive weight per variable, a prime
//! field, and one global monomial order. Polynomials store their terms in
//! strictly descending order with respect to that order, so canonical forms
//! are unique per ring.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::sync::Arc;

/// Global monomial orders supported by the kernel.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OrderKind {
    /// Graded reverse lexicographic with respect to the weighted degree;
    /// earlier variables are larger.
    WeightedGrevlex,
    /// Block order that compares the exponent of the last variable first and
    /// falls back to weighted grevlex. Eliminates the last variable.
    ElimLast,
}

/// A monomial as a dense exponent vector aligned with a ring's variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[u16; 6]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self {
            exps: smallvec::smallvec![0; nvars],
        }
    }

    pub fn var(index: usize, nvars: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        Self {
            exps: SmallVec::from_slice(exps),
        }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    #[inline]
    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Exact division; `None` when some exponent would go negative.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Self { exps })
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Raise or lower the exponent of one variable; used by derivatives and
    /// by the substitution t^2 -> F.
    pub fn with_exp(&self, i: usize, e: u16) -> Self {
        let mut m = self.clone();
        m.exps[i] = e;
        m
    }

    /// Pad with zero exponents for extra trailing variables.
    pub fn extended(&self, nvars: usize) -> Self {
        let mut exps = self.exps.clone();
        exps.resize(nvars, 0);
        Self { exps }
    }

    /// Drop trailing variables; caller must know their exponents vanish.
    pub fn truncated(&self, nvars: usize) -> Self {
        Self {
            exps: SmallVec::from_slice(&self.exps[..nvars]),
        }
    }
}

/// An immutable ring description shared behind `Arc`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingSpec {
    vars: Vec<String>,
    weights: Vec<u32>,
    field: PrimeField,
    order: OrderKind,
}

impl RingSpec {
    pub fn new(vars: Vec<String>, weights: Vec<u32>, field: PrimeField) -> Result<Arc<Self>> {
        if vars.is_empty() || vars.len() != weights.len() {
            return Err(Error::InvalidRing(
                "need one positive weight per variable".into(),
            ));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::InvalidRing("weights must be >= 1".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            let mut chars = v.chars();
            let ok = chars
                .next()
                .map(|c| c.is_ascii_alphabetic())
                .unwrap_or(false)
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::InvalidRing(format!("bad variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(Self {
            vars,
            weights,
            field,
            order: OrderKind::WeightedGrevlex,
        }))
    }

    /// The coordinate ring of P^2: k[x, y, z], all weights 1.
    pub fn p2(field: PrimeField) -> Arc<Self> {
        Self::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![1, 1, 1],
            field,
        )
        .expect("valid ring")
    }

    /// Ambient ring of the double cover: k[x, y, z, t], weights (1, 1, 1, s).
    pub fn double_cover_ambient(field: PrimeField, s: u32) -> Result<Arc<Self>> {
        if s == 0 {
            return Err(Error::InvalidRing("weight of t must be positive".into()));
        }
        Self::new(
            vec!["x".into(), "y".into(), "z".into(), "t".into()],
            vec![1, 1, 1, s],
            field,
        )
    }

    /// Internal extension used by ideal intersection: append an auxiliary
    /// variable of weight zero and switch to the elimination block order.
    pub(crate) fn with_elim_aux(&self) -> Arc<Self> {
        let mut vars = self.vars.clone();
        vars.push("aux_".into());
        let mut weights = self.weights.clone();
        weights.push(0);
        Arc::new(Self {
            vars,
            weights,
            field: self.field,
            order: OrderKind::ElimLast,
        })
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn order(&self) -> OrderKind {
        self.order
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Weighted degree of a monomial.
    #[inline]
    pub fn wdeg(&self, m: &Monomial) -> i64 {
        m.exps()
            .iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e as i64 * w as i64)
            .sum()
    }

    /// Compare two monomials under the ring's order.
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.order {
            OrderKind::WeightedGrevlex => self.cmp_weighted_grevlex(a, b),
            OrderKind::ElimLast => {
                let last = self.nvars() - 1;
                match a.exp(last).cmp(&b.exp(last)) {
                    Ordering::Equal => self.cmp_weighted_grevlex(a, b),
                    ord => ord,
                }
            }
        }
    }

    fn cmp_weighted_grevlex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.wdeg(a).cmp(&self.wdeg(b)) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Reverse lex: larger monomial has the negative last nonzero
        // difference.
        for i in (0..self.nvars()).rev() {
            let d = a.exp(i) as i32 - b.exp(i) as i32;
            if d != 0 {
                return if d < 0 { Ordering::Greater } else { Ordering::Less };
            }
        }
        Ordering::Equal
    }

    /// All monomials of the given weighted degree, descending in the ring
    /// order.
    pub fn monomials_of_degree(&self, d: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        if d < 0 {
            return out;
        }
        let mut exps: Vec<u16> = vec![0; self.nvars()];
        self.enumerate_rec(0, d, &mut exps, &mut out);
        out.sort_by(|a, b| self.cmp_monomials(b, a));
        out
    }

    fn enumerate_rec(&self, var: usize, rem: i64, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if var == self.nvars() {
            if rem == 0 {
                out.push(Monomial::from_exps(exps));
            }
            return;
        }
        let w = self.weights[var] as i64;
        if var + 1 == self.nvars() {
            if rem % w == 0 && rem / w <= u16::MAX as i64 {
                exps[var] = (rem / w) as u16;
                out.push(Monomial::from_exps(exps));
                exps[var] = 0;
            }
            return;
        }
        let max = rem / w;
        for e in 0..=max.min(u16::MAX as i64) {
            exps[var] = e as u16;
            self.enumerate_rec(var + 1, rem - e * w, exps, out);
        }
        exps[var] = 0;
    }

    /// Stable fingerprint mixing variables, weights, modulus, and order;
    /// feeds deterministic random generation.
    pub fn fingerprint(&self) -> u64 {
        let mut h = 0xcbf29ce484222325u64;
        let mut eat = |bytes: &[u8]| {
            for &b in bytes {
                h ^= b as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        };
        eat(&self.field.modulus().to_le_bytes());
        eat(&[match self.order {
            OrderKind::WeightedGrevlex => 0u8,
            OrderKind::ElimLast => 1,
        }]);
        for (v, w) in self.vars.iter().zip(&self.weights) {
            eat(v.as_bytes());
            eat(&w.to_le_bytes());
        }
        h
    }
}

/// Cheap ring identity check: pointer equality first, deep equality as a
/// fallback for rings built independently with the same data.
pub fn same_ring(a: &Arc<RingSpec>, b: &Arc<RingSpec>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, DEFAULT_PRIME};

    fn s3() -> Arc<RingSpec> {
        RingSpec::p2(PrimeField::new(DEFAULT_PRIME).unwrap())
    }

    #[test]
    fn grevlex_basics() {
        let r = s3();
        let x = Monomial::var(0, 3);
        let y = Monomial::var(1, 3);
        let z = Monomial::var(2, 3);
        assert_eq!(r.cmp_monomials(&x, &y), Ordering::Greater);
        assert_eq!(r.cmp_monomials(&y, &z), Ordering::Greater);
        // x^3 > x^2 y > x y^2 > y^3 in grevlex
        let x2y = Monomial::from_exps(&[2, 1, 0]);
        let xy2 = Monomial::from_exps(&[1, 2, 0]);
        let x3 = Monomial::from_exps(&[3, 0, 0]);
        assert_eq!(r.cmp_monomials(&x2y, &xy2), Ordering::Greater);
        assert_eq!(r.cmp_monomials(&x3, &x2y), Ordering::Greater);
        // degree dominates
        let x2 = Monomial::from_exps(&[2, 0, 0]);
        assert_eq!(r.cmp_monomials(&x2, &y), Ordering::Greater);
        assert_eq!(r.cmp_monomials(&x2, &x3), Ordering::Less);
        assert_eq!(r.wdeg(&x3), 3);
        assert_eq!(r.wdeg(&x2y), 3);
    }

    #[test]
    fn weighted_order_places_t_low() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let r = RingSpec::double_cover_ambient(f, 3).unwrap();
        let t = Monomial::var(3, 4);
        let x3 = Monomial::from_exps(&[3, 0, 0, 0]);
        assert_eq!(r.wdeg(&t), 3);
        assert_eq!(r.cmp_monomials(&x3, &t), Ordering::Greater);
        let t2 = Monomial::from_exps(&[0, 0, 0, 2]);
        let x6 = Monomial::from_exps(&[6, 0, 0, 0]);
        assert_eq!(r.cmp_monomials(&x6, &t2), Ordering::Greater);
    }

    #[test]
    fn elim_order_dominated_by_aux() {
        let r = s3().with_elim_aux();
        let u = Monomial::var(3, 4);
        let x5 = Monomial::from_exps(&[5, 0, 0, 0]);
        assert_eq!(r.cmp_monomials(&u, &x5), Ordering::Greater);
    }

    #[test]
    fn monomial_counts() {
        let r = s3();
        assert_eq!(r.monomials_of_degree(1).len(), 3);
        assert_eq!(r.monomials_of_degree(2).len(), 6);
        assert_eq!(r.monomials_of_degree(5).len(), 21);
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let r4 = RingSpec::double_cover_ambient(f, 3).unwrap();
        // degree 6 with weights (1,1,1,3): e_t in {0,1,2}
        assert_eq!(r4.monomials_of_degree(6).len(), 28 + 10 + 1);
    }

    #[test]
    fn descending_enumeration() {
        let r = s3();
        let ms = r.monomials_of_degree(2);
        for w in ms.windows(2) {
            assert_eq!(r.cmp_monomials(&w[0], &w[1]), Ordering::Greater);
        }
    }
}
