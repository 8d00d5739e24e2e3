//! Finitely generated graded modules presented by generators and relations
//! over a polynomial ring: ⊕ S(-a_i) modulo the column span of a homogeneous
//! relation matrix.

use crate::error::{Error, Result};
use crate::groebner::{column_degree, Column};
use crate::linalg::MatFp;
use crate::poly::Polynomial;
use crate::ring::{same_ring, Monomial, RingSpec};
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct GradedModulePresentation {
    ring: Arc<RingSpec>,
    gen_twists: Vec<i64>,
    relations: Vec<Column>,
    relation_degrees: Vec<i64>,
}

impl GradedModulePresentation {
    /// Validates that every relation column is homogeneous with respect to
    /// the generator twists; zero columns are dropped.
    pub fn new(
        ring: &Arc<RingSpec>,
        gen_twists: Vec<i64>,
        relations: Vec<Column>,
    ) -> Result<Self> {
        let mut kept = Vec::new();
        let mut degrees = Vec::new();
        for col in relations {
            if col.len() != gen_twists.len() {
                return Err(Error::Precondition(
                    "relation column length differs from generator count".into(),
                ));
            }
            for e in &col {
                if !same_ring(e.ring(), ring) {
                    return Err(Error::RingMismatch("relation entry from another ring".into()));
                }
            }
            match column_degree(&gen_twists, &col)? {
                None => {}
                Some(d) => {
                    degrees.push(d);
                    kept.push(col);
                }
            }
        }
        Ok(Self {
            ring: ring.clone(),
            gen_twists,
            relations: kept,
            relation_degrees: degrees,
        })
    }

    /// The free module ⊕ S(-a_i).
    pub fn free(ring: &Arc<RingSpec>, gen_twists: Vec<i64>) -> Self {
        Self {
            ring: ring.clone(),
            gen_twists,
            relations: Vec::new(),
            relation_degrees: Vec::new(),
        }
    }

    /// The cyclic module S/(gens).
    pub fn quotient_ring(ring: &Arc<RingSpec>, gens: &[Polynomial]) -> Result<Self> {
        Self::new(
            ring,
            vec![0],
            gens.iter().map(|g| vec![g.clone()]).collect(),
        )
    }

    /// An ideal viewed as a module: generators in their own degrees, related
    /// by their syzygies.
    pub fn ideal_module(ring: &Arc<RingSpec>, gens: &[Polynomial]) -> Result<Self> {
        let mut twists = Vec::new();
        for g in gens {
            let d = g
                .homogeneous_degree()
                .ok_or_else(|| Error::Precondition("ideal generator not homogeneous".into()))?;
            twists.push(d);
        }
        let columns: Vec<crate::groebner::FreeModuleVector> = gens
            .iter()
            .map(|g| crate::groebner::FreeModuleVector::new(vec![0], vec![g.clone()]))
            .collect::<Result<_>>()?;
        let syz = crate::groebner::syzygies(&columns)?;
        Self::new(ring, twists, syz.into_iter().map(|v| v.entries).collect())
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn gen_twists(&self) -> &[i64] {
        &self.gen_twists
    }

    pub fn relations(&self) -> &[Column] {
        &self.relations
    }

    pub fn relation_degrees(&self) -> &[i64] {
        &self.relation_degrees
    }

    /// dim_k M_d by plain linear algebra: the degree-d slice of the free
    /// cover minus the rank of the degree-d slice of the relation span. This
    /// path never touches the Groebner engine, which makes it the
    /// independent oracle for everything built on top.
    pub fn graded_piece_dimension(&self, d: i64) -> usize {
        let basis = free_basis(&self.ring, &self.gen_twists, d);
        if basis.is_empty() {
            return 0;
        }
        let index = basis_index(&basis);
        let mut columns: Vec<Vec<(usize, u64)>> = Vec::new();
        for (col, &bj) in self.relations.iter().zip(&self.relation_degrees) {
            for m in self.ring.monomials_of_degree(d - bj) {
                columns.push(column_in_basis(&self.ring, col, &m, &index));
            }
        }
        basis.len() - rank_of_columns(&self.ring, basis.len(), &columns)
    }

    /// Presentation of the twisted module M(-shift): every generator and
    /// relation degree moves up by `shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        Self {
            ring: self.ring.clone(),
            gen_twists: self.gen_twists.iter().map(|a| a + shift).collect(),
            relations: self.relations.clone(),
            relation_degrees: self.relation_degrees.iter().map(|b| b + shift).collect(),
        }
    }

    /// Cancel one unit relation entry at (row, col): remove the generator and
    /// the relation, updating the remaining columns. Valid because entries
    /// are homogeneous, so a unit entry is a degree-0 isomorphism.
    fn cancel(&mut self, row: usize, col: usize) {
        let field = self.ring.field();
        let u = self.relations[col][row]
            .leading_term()
            .expect("unit entry")
            .coeff;
        let uinv = field.inv(u);
        let pivot = self.relations[col].clone();
        for (c, column) in self.relations.iter_mut().enumerate() {
            if c == col {
                continue;
            }
            if !column[row].is_unit() && !column[row].is_zero() {
                // a nonzero non-constant entry in a homogeneous column of the
                // same row can only occur when column degrees differ; the
                // generic update below handles it through polynomial factors
            }
            if column[row].is_zero() {
                continue;
            }
            let factor = column[row].mul_term(uinv, &Monomial::one(self.ring.nvars()));
            for (r, entry) in column.iter_mut().enumerate() {
                *entry = entry.sub(&pivot[r].mul(&factor));
            }
        }
        for column in self.relations.iter_mut() {
            column.remove(row);
        }
        self.relations.remove(col);
        self.relation_degrees.remove(col);
        self.gen_twists.remove(row);
        // drop columns that became zero
        let mut kept = Vec::new();
        let mut kept_deg = Vec::new();
        for (c, column) in self.relations.iter().enumerate() {
            if column.iter().any(|p| !p.is_zero()) {
                kept.push(column.clone());
                kept_deg.push(self.relation_degrees[c]);
            }
        }
        self.relations = kept;
        self.relation_degrees = kept_deg;
    }

    fn find_unit_entry(&self) -> Option<(usize, usize)> {
        for (c, column) in self.relations.iter().enumerate() {
            for (r, entry) in column.iter().enumerate() {
                if entry.is_unit() {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// Prune superfluous generators by unit-entry elimination to a fixpoint.
    pub fn pruned(&self) -> Self {
        let mut m = self.clone();
        while let Some((r, c)) = m.find_unit_entry() {
            m.cancel(r, c);
        }
        m
    }

    /// Degrees of a minimal homogeneous generating set, ascending.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let mut twists = self.pruned().gen_twists;
        twists.sort_unstable();
        twists
    }

    /// True exactly when M is free with `rank` generators in degree 0: the
    /// pruned presentation has `rank` degree-0 generators and no relations
    /// left.
    pub fn is_trivial_free(&self, rank: usize) -> bool {
        let pruned = self.pruned();
        pruned.gen_twists.len() == rank
            && pruned.gen_twists.iter().all(|&a| a == 0)
            && pruned.relations.is_empty()
    }
}

/// Basis of the degree-d slice of ⊕ S(-a_i): pairs (summand, monomial).
pub(crate) fn free_basis(
    ring: &Arc<RingSpec>,
    twists: &[i64],
    d: i64,
) -> Vec<(usize, Monomial)> {
    let mut out = Vec::new();
    for (i, &a) in twists.iter().enumerate() {
        for m in ring.monomials_of_degree(d - a) {
            out.push((i, m));
        }
    }
    out
}

pub(crate) fn basis_index(basis: &[(usize, Monomial)]) -> HashMap<(usize, Monomial), usize> {
    basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(n, key)| (key, n))
        .collect()
}

/// Coordinates of `m * col` in the indexed basis of the target slice.
pub(crate) fn column_in_basis(
    ring: &Arc<RingSpec>,
    col: &Column,
    m: &Monomial,
    index: &HashMap<(usize, Monomial), usize>,
) -> Vec<(usize, u64)> {
    let mut out = Vec::new();
    for (i, entry) in col.iter().enumerate() {
        for t in entry.terms() {
            let mon = t.mon.mul(m);
            let row = *index
                .get(&(i, mon))
                .expect("homogeneous entry lands in the slice basis");
            out.push((row, t.coeff));
        }
    }
    out
}

pub(crate) fn rank_of_columns(
    ring: &Arc<RingSpec>,
    rows: usize,
    columns: &[Vec<(usize, u64)>],
) -> usize {
    if rows == 0 || columns.is_empty() {
        return 0;
    }
    let mut mat = MatFp::zeros(ring.field(), rows, columns.len());
    for (c, col) in columns.iter().enumerate() {
        for &(r, v) in col {
            let prev = mat.get(r, c);
            mat.set(r, c, ring.field().add(prev, v));
        }
    }
    mat.rank()
}

/// Source dimension and rank of the degree-d slice of the map defined by
/// `cols` from ⊕ S(-b_j) (one b per column) into ⊕ S(-a_i).
pub(crate) fn map_slice_dims(
    ring: &Arc<RingSpec>,
    source_twists: &[i64],
    target_twists: &[i64],
    cols: &[Column],
    d: i64,
) -> (usize, usize) {
    debug_assert_eq!(source_twists.len(), cols.len());
    let target = free_basis(ring, target_twists, d);
    let index = basis_index(&target);
    let mut columns = Vec::new();
    let mut source_dim = 0;
    for (j, col) in cols.iter().enumerate() {
        for m in ring.monomials_of_degree(d - source_twists[j]) {
            source_dim += 1;
            columns.push(column_in_basis(ring, col, &m, &index));
        }
    }
    (source_dim, rank_of_columns(ring, target.len(), &columns))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::{parse_polynomial, Polynomial};

    fn s3() -> Arc<RingSpec> {
        RingSpec::p2(PrimeField::new(32003).unwrap())
    }

    fn p(r: &Arc<RingSpec>, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn dimensions_of_standard_modules() {
        let r = s3();
        let free = GradedModulePresentation::free(&r, vec![0]);
        assert_eq!(free.graded_piece_dimension(2), 6);

        let point = GradedModulePresentation::quotient_ring(
            &r,
            &[p(&r, "x"), p(&r, "y"), p(&r, "z")],
        )
        .unwrap();
        assert_eq!(point.graded_piece_dimension(0), 1);
        assert_eq!(point.graded_piece_dimension(1), 0);
    }

    #[test]
    fn complete_intersection_reaches_bezout_length() {
        let r = s3();
        let f1 = Polynomial::random_homogeneous(&r, 2, 21);
        let f2 = Polynomial::random_homogeneous(&r, 2, 22);
        let m = GradedModulePresentation::quotient_ring(&r, &[f1, f2]).unwrap();
        for d in 4..9 {
            assert_eq!(m.graded_piece_dimension(d), 4);
        }
    }

    #[test]
    fn minimal_generators_prune_redundancy() {
        let r = s3();
        // <e1, e2 | e1 - e2>
        let m = GradedModulePresentation::new(
            &r,
            vec![0, 0],
            vec![vec![Polynomial::one(&r), Polynomial::one(&r).neg()]],
        )
        .unwrap();
        assert_eq!(m.minimal_generators(), vec![0]);

        let free = GradedModulePresentation::free(&r, vec![0, 3]);
        assert_eq!(free.minimal_generators(), vec![0, 3]);
    }

    #[test]
    fn trivial_freeness() {
        let r = s3();
        // S^4 presented with a redundant fifth generator
        let mut col = vec![Polynomial::zero(&r); 5];
        col[0] = Polynomial::one(&r);
        col[4] = Polynomial::one(&r).neg();
        let m = GradedModulePresentation::new(&r, vec![0; 5], vec![col]).unwrap();
        assert!(m.is_trivial_free(4));
        assert!(!m.is_trivial_free(5));

        let split = GradedModulePresentation::free(&r, vec![0, 3]);
        assert!(!split.is_trivial_free(2));
    }

    #[test]
    fn pruning_keeps_dimensions() {
        let r = s3();
        let mut col1 = vec![Polynomial::zero(&r); 3];
        col1[0] = Polynomial::one(&r);
        col1[1] = p(&r, "x").neg();
        let mut col2 = vec![Polynomial::zero(&r); 3];
        col2[1] = p(&r, "y");
        col2[2] = p(&r, "x^2");
        let m =
            GradedModulePresentation::new(&r, vec![1, 0, -1], vec![col1, col2]).unwrap();
        let q = m.pruned();
        for d in -1..6 {
            assert_eq!(m.graded_piece_dimension(d), q.graded_piece_dimension(d));
        }
    }
}
