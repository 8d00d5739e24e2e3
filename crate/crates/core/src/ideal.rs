//! Ideal arithmetic on top of the Groebner engine: colon ideals, ideal
//! intersection via one auxiliary elimination variable, and saturation.

use crate::error::{Error, Result};
use crate::groebner::{
    module_buchberger, reduced_groebner_basis, GroebnerBasis, ModOrder,
};
use crate::poly::Polynomial;
use crate::ring::{same_ring, RingSpec};
use std::sync::Arc;

/// A homogeneous ideal given by generators.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<RingSpec>,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Arc<RingSpec>, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch("generator from another ring".into()));
            }
        }
        Ok(Self {
            ring: ring.clone(),
            gens,
        })
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn groebner_basis(&self) -> GroebnerBasis {
        reduced_groebner_basis(&self.ring, &self.gens)
    }

    /// Same ideal presented by its reduced Groebner basis; the canonical
    /// representative used whenever outputs must be deterministic.
    pub fn canonicalized(&self) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            gens: self.groebner_basis().basis,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().contains_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    /// Equality as ideals: identical reduced Groebner bases.
    pub fn equals(&self, other: &Ideal) -> bool {
        same_ring(&self.ring, &other.ring)
            && self.groebner_basis().basis == other.groebner_basis().basis
    }
}

/// The colon ideal `[I : g]` of a single element, read off the last
/// coordinates of the syzygies of `(gens(I), g)`.
fn colon_single(i: &Ideal, g: &Polynomial) -> Ideal {
    let ring = i.ring().clone();
    if g.is_zero() {
        return Ideal::new(&ring, vec![Polynomial::one(&ring)]).unwrap();
    }
    let mut columns: Vec<Vec<Polynomial>> = i
        .generators()
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| vec![p.clone()])
        .collect();
    let last = columns.len();
    columns.push(vec![g.clone()]);
    let run = module_buchberger(&ring, 1, &[0], &columns, &ModOrder::Pot, true);
    let gens: Vec<Polynomial> = run
        .syzygies
        .into_iter()
        .map(|c| c[last].clone())
        .filter(|p| !p.is_zero())
        .collect();
    Ideal::new(&ring, gens).unwrap().canonicalized()
}

/// `[I : J] = {f : f·J ⊆ I}`, via one single-element colon per generator of
/// `J` and pairwise intersections.
pub fn colon_ideal(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if !same_ring(i.ring(), j.ring()) {
        return Err(Error::RingMismatch("colon of ideals in different rings".into()));
    }
    let ring = i.ring().clone();
    let mut acc: Option<Ideal> = None;
    for g in j.generators() {
        let single = colon_single(i, g);
        acc = Some(match acc {
            None => single,
            Some(prev) => intersect(&prev, &single)?,
        });
    }
    Ok(match acc {
        // colon by the zero ideal is the whole ring
        None => Ideal::new(&ring, vec![Polynomial::one(&ring)])?,
        Some(ideal) => ideal,
    })
}

/// Ideal intersection by the elimination construction: in S[u] with a block
/// order eliminating u, `I ∩ J = (u·I + (1-u)·J) ∩ S`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch("intersection across rings".into()));
    }
    let ring = a.ring().clone();
    let ca = a.canonicalized();
    let cb = b.canonicalized();
    if ca.is_unit() {
        return Ok(cb);
    }
    if cb.is_unit() {
        return Ok(ca);
    }
    if ca.is_zero() || cb.is_zero() {
        return Ideal::new(&ring, Vec::new());
    }

    let ext = ring.with_elim_aux();
    let u = Polynomial::variable(&ext, ext.nvars() - 1);
    let one_minus_u = Polynomial::one(&ext).sub(&u);
    let mut gens: Vec<Polynomial> = Vec::new();
    for g in ca.generators() {
        gens.push(u.mul(&g.extended(&ext)));
    }
    for g in cb.generators() {
        gens.push(one_minus_u.mul(&g.extended(&ext)));
    }
    let gb = reduced_groebner_basis(&ext, &gens);
    let mut kept = Vec::new();
    for g in &gb.basis {
        if let Ok(lowered) = g.truncated(&ring) {
            kept.push(lowered);
        }
    }
    Ok(Ideal::new(&ring, kept)?.canonicalized())
}

/// Saturation `[I : J^∞]` by iterating the colon until the reduced Groebner
/// basis stabilizes; the iteration cap is a failsafe against engine bugs.
pub fn saturate(i: &Ideal, j: &Ideal, max_iterations: u32) -> Result<Ideal> {
    let mut current = i.canonicalized();
    for _ in 0..max_iterations {
        let next = colon_ideal(&current, j)?;
        if next.generators() == current.generators() {
            return Ok(current);
        }
        current = next;
    }
    Err(Error::SaturationBound(max_iterations))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::parse_polynomial;

    fn s3() -> Arc<RingSpec> {
        RingSpec::p2(PrimeField::new(32003).unwrap())
    }

    fn ideal(r: &Arc<RingSpec>, gens: &[&str]) -> Ideal {
        Ideal::new(
            r,
            gens.iter().map(|s| parse_polynomial(s, r).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn colon_examples() {
        let r = s3();
        let i = ideal(&r, &["x^2", "x*y"]);
        let q = colon_ideal(&i, &ideal(&r, &["x"])).unwrap();
        assert!(q.equals(&ideal(&r, &["x", "y"])));

        let j = ideal(&r, &["1"]);
        let q = colon_ideal(&i, &j).unwrap();
        assert!(q.equals(&i));
    }

    #[test]
    fn intersection_examples() {
        let r = s3();
        let a = ideal(&r, &["x"]);
        let b = ideal(&r, &["y"]);
        let c = intersect(&a, &b).unwrap();
        assert!(c.equals(&ideal(&r, &["x*y"])));

        let d = intersect(&ideal(&r, &["x", "y"]), &ideal(&r, &["y", "z"])).unwrap();
        assert!(d.equals(&ideal(&r, &["y", "x*z"])));
    }

    #[test]
    fn saturation_examples() {
        let r = s3();
        let m = ideal(&r, &["x", "y", "z"]);
        let i = ideal(&r, &["x^2", "x*y"]);
        let sat = saturate(&i, &ideal(&r, &["x", "y"]), 50).unwrap();
        assert!(sat.equals(&ideal(&r, &["x"])));
        // idempotence
        let again = saturate(&sat, &ideal(&r, &["x", "y"]), 50).unwrap();
        assert!(again.equals(&sat));

        // a codimension-2 complete intersection is saturated
        let f1 = Polynomial::random_homogeneous(&r, 2, 5);
        let f2 = Polynomial::random_homogeneous(&r, 2, 6);
        let ci = Ideal::new(&r, vec![f1, f2]).unwrap();
        let sat = saturate(&ci, &m, 50).unwrap();
        assert!(sat.equals(&ci));
    }

    #[test]
    fn colon_containments_on_random_instances() {
        let r = s3();
        for seed in 0..3u64 {
            let i = Ideal::new(
                &r,
                vec![
                    Polynomial::random_homogeneous(&r, 2, seed),
                    Polynomial::random_homogeneous(&r, 3, seed + 10),
                ],
            )
            .unwrap();
            let j = Ideal::new(
                &r,
                vec![
                    Polynomial::random_homogeneous(&r, 1, seed + 20),
                    Polynomial::random_homogeneous(&r, 2, seed + 30),
                ],
            )
            .unwrap();
            let q = colon_ideal(&i, &j).unwrap();
            let igb = i.groebner_basis();
            // I ⊆ [I : J]
            let qgb = q.groebner_basis();
            for g in i.generators() {
                assert!(crate::groebner::normal_form(g, &qgb).is_zero());
            }
            // J · [I : J] ⊆ I
            for g in j.generators() {
                for h in q.generators() {
                    assert!(crate::groebner::normal_form(&g.mul(h), &igb).is_zero());
                }
            }
            // [I : J] ⊆ [I : J^∞]
            let sat = saturate(&i, &j, 50).unwrap();
            let satgb = sat.groebner_basis();
            for h in q.generators() {
                assert!(crate::groebner::normal_form(h, &satgb).is_zero());
            }
        }
    }
}
