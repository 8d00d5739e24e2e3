//! Buchberger's algorithm over free modules, with Gebauer-Moller pair
//! elimination, normal forms, and syzygy extraction via cofactor tracking.
//!
//! One engine serves ideals (rank 1) and submodules of free modules. For
//! syzygy runs the product criterion is disabled: an S-pair with coprime
//! leading terms reduces to zero but its cofactor is exactly the Koszul
//! syzygy, which must be collected, not skipped. The chain criterion remains
//! valid in both modes because it rewrites one monomial syzygy in terms of
//! two retained ones.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{same_ring, Monomial, OrderKind, RingSpec};
use std::cmp::Ordering;
use std::sync::Arc;

/// A column vector in a free module ⊕ S(-a_i), entry per summand.
pub(crate) type Column = Vec<Polynomial>;

/// Orders on free-module terms `(monomial, position)`.
#[derive(Clone, Debug)]
pub(crate) enum ModOrder {
    /// Position over term: e_0 > e_1 > ..., ties by the ring order.
    Pot,
    /// Order induced by mapping e_i to `monomial * e_{target}`; ties by
    /// position. Used for syzygy modules, anchored at the input leads.
    Schreyer { anchors: Vec<(usize, Monomial)> },
}

#[derive(Clone, Debug)]
pub(crate) struct Lead {
    pub pos: usize,
    pub mon: Monomial,
    pub coeff: u64,
}

pub(crate) struct Ctx<'a> {
    pub ring: &'a Arc<RingSpec>,
    pub order: &'a ModOrder,
}

impl Ctx<'_> {
    pub fn cmp_terms(&self, p1: usize, m1: &Monomial, p2: usize, m2: &Monomial) -> Ordering {
        match self.order {
            ModOrder::Pot => p2.cmp(&p1).then_with(|| self.ring.cmp_monomials(m1, m2)),
            ModOrder::Schreyer { anchors } => {
                let (t1, a1) = &anchors[p1];
                let (t2, a2) = &anchors[p2];
                t2.cmp(t1)
                    .then_with(|| self.ring.cmp_monomials(&m1.mul(a1), &m2.mul(a2)))
                    .then_with(|| p2.cmp(&p1))
            }
        }
    }

    /// Leading term of a column. Within one position the polynomial's own
    /// leading term is maximal because the order is multiplicative.
    pub fn column_lead(&self, col: &Column) -> Option<Lead> {
        let mut best: Option<Lead> = None;
        for (pos, poly) in col.iter().enumerate() {
            let Some(t) = poly.leading_term() else {
                continue;
            };
            let better = match &best {
                None => true,
                Some(b) => self.cmp_terms(pos, &t.mon, b.pos, &b.mon) == Ordering::Greater,
            };
            if better {
                best = Some(Lead {
                    pos,
                    mon: t.mon.clone(),
                    coeff: t.coeff,
                });
            }
        }
        best
    }
}

pub(crate) fn col_zero(ring: &Arc<RingSpec>, rank: usize) -> Column {
    vec![Polynomial::zero(ring); rank]
}

pub(crate) fn col_is_zero(col: &Column) -> bool {
    col.iter().all(|p| p.is_zero())
}

fn col_scale(col: &mut Column, c: u64) {
    for p in col.iter_mut() {
        *p = p.scale(c);
    }
}

fn col_mul_term(col: &Column, c: u64, m: &Monomial) -> Column {
    col.iter().map(|p| p.mul_term(c, m)).collect()
}

fn col_sub_scaled(a: &mut Column, c: u64, m: &Monomial, b: &Column) {
    for (x, y) in a.iter_mut().zip(b) {
        *x = x.sub(&y.mul_term(c, m));
    }
}

/// Degree of a homogeneous column relative to ambient twists; `None` for the
/// zero column, error when entries disagree.
pub(crate) fn column_degree(twists: &[i64], col: &Column) -> Result<Option<i64>> {
    let mut deg: Option<i64> = None;
    for (i, p) in col.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let d = p.homogeneous_degree().ok_or_else(|| {
            Error::Precondition("module column entry is not homogeneous".into())
        })? + twists[i];
        match deg {
            None => deg = Some(d),
            Some(existing) if existing == d => {}
            _ => {
                return Err(Error::Precondition(
                    "module column is not homogeneous".into(),
                ))
            }
        }
    }
    Ok(deg)
}

struct Elem {
    col: Column,
    lead: Lead,
    cof: Option<Column>,
}

struct Pair {
    i: usize,
    j: usize,
    pos: usize,
    lcm: Monomial,
    deg: i64,
}

pub(crate) struct GbRun {
    /// Reduced Groebner basis of the submodule generated by the inputs.
    pub basis: Vec<Column>,
    /// When tracking: generators of the syzygy module of the inputs, reduced
    /// with respect to the Schreyer order anchored at the input leads.
    pub syzygies: Vec<Column>,
}

struct Engine<'a> {
    ctx: Ctx<'a>,
    twists: &'a [i64],
    ninputs: usize,
    track: bool,
    product_criterion: bool,
    basis: Vec<Elem>,
    pairs: Vec<Pair>,
    syzygies: Vec<Column>,
}

impl<'a> Engine<'a> {
    fn pair_cmp(&self, a: &Pair, b: &Pair) -> Ordering {
        a.deg
            .cmp(&b.deg)
            .then(a.pos.cmp(&b.pos))
            .then_with(|| self.ctx.ring.cmp_monomials(&a.lcm, &b.lcm))
            .then(a.i.cmp(&b.i))
            .then(a.j.cmp(&b.j))
    }

    fn pop_min_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let mut min = 0;
        for idx in 1..self.pairs.len() {
            if self.pair_cmp(&self.pairs[idx], &self.pairs[min]) == Ordering::Less {
                min = idx;
            }
        }
        Some(self.pairs.swap_remove(min))
    }

    fn add_element(&mut self, mut col: Column, mut cof: Option<Column>, lead: Lead) {
        let field = self.ctx.ring.field();
        let inv = field.inv(lead.coeff);
        if inv != 1 {
            col_scale(&mut col, inv);
            if let Some(c) = cof.as_mut() {
                col_scale(c, inv);
            }
        }
        let lead = Lead {
            coeff: 1,
            ..lead
        };
        self.basis.push(Elem { col, lead, cof });
        self.update_pairs(self.basis.len() - 1);
    }

    /// Gebauer-Moller update for the pair set after appending element `t`.
    fn update_pairs(&mut self, t: usize) {
        let lt = self.basis[t].lead.clone();

        struct Cand {
            i: usize,
            lcm: Monomial,
            coprime: bool,
        }
        let mut cands: Vec<Cand> = Vec::new();
        for i in 0..t {
            let bi = &self.basis[i].lead;
            if bi.pos != lt.pos {
                continue;
            }
            cands.push(Cand {
                i,
                lcm: bi.mon.lcm(&lt.mon),
                coprime: bi.mon.is_coprime(&lt.mon),
            });
        }

        // Rule M: a candidate whose lcm is a proper multiple of another
        // candidate's lcm is redundant.
        let keep_m: Vec<bool> = cands
            .iter()
            .map(|x| {
                !cands
                    .iter()
                    .any(|y| y.lcm != x.lcm && y.lcm.divides(&x.lcm))
            })
            .collect();

        // Rule F: one pair per lcm class. In ideal mode a class containing a
        // coprime pair is dropped outright (the product criterion); in
        // syzygy or module mode the representative is always kept.
        let mut chain_filter_done: Vec<usize> = Vec::new();
        let mut sorted: Vec<usize> = (0..cands.len()).filter(|&i| keep_m[i]).collect();
        sorted.sort_by(|&a, &b| {
            self.ctx
                .ring
                .cmp_monomials(&cands[a].lcm, &cands[b].lcm)
                .then(cands[a].i.cmp(&cands[b].i))
        });
        let mut idx = 0;
        while idx < sorted.len() {
            let mut end = idx + 1;
            while end < sorted.len() && cands[sorted[end]].lcm == cands[sorted[idx]].lcm {
                end += 1;
            }
            let class = &sorted[idx..end];
            let drop_class =
                self.product_criterion && class.iter().any(|&c| cands[c].coprime);
            if !drop_class {
                chain_filter_done.push(class[0]);
            }
            idx = end;
        }

        // Chain criterion on old pairs: the new lead splits them.
        let basis = &self.basis;
        self.pairs.retain(|pr| {
            if pr.pos != lt.pos || !lt.mon.divides(&pr.lcm) {
                return true;
            }
            let li = basis[pr.i].lead.mon.lcm(&lt.mon);
            if li == pr.lcm {
                return true;
            }
            let lj = basis[pr.j].lead.mon.lcm(&lt.mon);
            lj == pr.lcm
        });

        for c in chain_filter_done {
            let cand = &cands[c];
            let deg = self.ctx.ring.wdeg(&cand.lcm) + self.twists.get(lt.pos).copied().unwrap_or(0);
            self.pairs.push(Pair {
                i: cand.i,
                j: t,
                pos: lt.pos,
                lcm: cand.lcm.clone(),
                deg,
            });
        }
    }

    fn s_vector(&self, pair: &Pair) -> (Column, Option<Column>) {
        let bi = &self.basis[pair.i];
        let bj = &self.basis[pair.j];
        let mi = pair.lcm.checked_div(&bi.lead.mon).expect("lcm divisible");
        let mj = pair.lcm.checked_div(&bj.lead.mon).expect("lcm divisible");
        let mut v = col_mul_term(&bi.col, 1, &mi);
        col_sub_scaled(&mut v, 1, &mj, &bj.col);
        let cof = if self.track {
            let mut c = col_mul_term(bi.cof.as_ref().unwrap(), 1, &mi);
            col_sub_scaled(&mut c, 1, &mj, bj.cof.as_ref().unwrap());
            Some(c)
        } else {
            None
        };
        (v, cof)
    }

    fn find_reducer(&self, lead: &Lead) -> Option<usize> {
        self.basis
            .iter()
            .position(|e| e.lead.pos == lead.pos && e.lead.mon.divides(&lead.mon))
    }

    fn top_reduce(&self, mut v: Column, mut cof: Option<Column>) -> (Column, Option<Column>, Option<Lead>) {
        loop {
            let Some(lead) = self.ctx.column_lead(&v) else {
                return (v, cof, None);
            };
            let Some(r) = self.find_reducer(&lead) else {
                return (v, cof, Some(lead));
            };
            let e = &self.basis[r];
            let q = lead.mon.checked_div(&e.lead.mon).expect("divisible");
            col_sub_scaled(&mut v, lead.coeff, &q, &e.col);
            if let Some(c) = cof.as_mut() {
                col_sub_scaled(c, lead.coeff, &q, e.cof.as_ref().unwrap());
            }
        }
    }

    fn run(&mut self, inputs: &[Column]) {
        for (idx, input) in inputs.iter().enumerate() {
            if col_is_zero(input) {
                if self.track {
                    let mut e = col_zero(self.ctx.ring, self.ninputs);
                    e[idx] = Polynomial::one(self.ctx.ring);
                    self.syzygies.push(e);
                }
                continue;
            }
            let cof = self.track.then(|| {
                let mut e = col_zero(self.ctx.ring, self.ninputs);
                e[idx] = Polynomial::one(self.ctx.ring);
                e
            });
            let lead = self.ctx.column_lead(input).expect("nonzero column");
            self.add_element(input.clone(), cof, lead);
        }

        while let Some(pair) = self.pop_min_pair() {
            let (v, cof) = self.s_vector(&pair);
            let (v, cof, lead) = self.top_reduce(v, cof);
            match lead {
                None => {
                    if self.track {
                        let cof = cof.expect("tracking");
                        if !col_is_zero(&cof) {
                            self.syzygies.push(cof);
                        }
                    }
                    debug_assert!(col_is_zero(&v));
                }
                Some(lead) => {
                    debug_assert!(!col_is_zero(&v));
                    self.add_element(v, cof, lead);
                }
            }
        }
    }
}

/// Full normal form: reduce every term of `v` by the leads of `reducers`.
pub(crate) fn column_normal_form(
    ctx: &Ctx<'_>,
    v: &Column,
    reducers: &[(Lead, Column)],
) -> Column {
    let ring = ctx.ring;
    let rank = v.len();
    let mut work = v.clone();
    let mut result_terms: Vec<Vec<crate::poly::Term>> = vec![Vec::new(); rank];
    'outer: loop {
        let Some(lead) = ctx.column_lead(&work) else {
            break;
        };
        for (rl, rc) in reducers {
            if rl.pos == lead.pos && rl.mon.divides(&lead.mon) {
                let q = lead.mon.checked_div(&rl.mon).expect("divisible");
                let c = ring.field().mul(lead.coeff, ring.field().inv(rl.coeff));
                col_sub_scaled(&mut work, c, &q, rc);
                continue 'outer;
            }
        }
        // irreducible leading term: move it to the result
        result_terms[lead.pos].push(crate::poly::Term {
            coeff: lead.coeff,
            mon: lead.mon.clone(),
        });
        work[lead.pos] = work[lead.pos].without_leading_term();
    }
    result_terms
        .into_iter()
        .map(|terms| Polynomial::from_terms(ring, terms))
        .collect()
}

/// Minimalize and tail-reduce a Groebner basis into the unique reduced one.
pub(crate) fn reduce_basis(ctx: &Ctx<'_>, elems: Vec<Column>) -> Vec<Column> {
    let field = ctx.ring.field();
    let mut with_leads: Vec<(Lead, Column)> = elems
        .into_iter()
        .filter_map(|mut col| {
            let lead = ctx.column_lead(&col)?;
            let inv = field.inv(lead.coeff);
            if inv != 1 {
                col_scale(&mut col, inv);
            }
            Some((Lead { coeff: 1, ..lead }, col))
        })
        .collect();
    with_leads.sort_by(|a, b| ctx.cmp_terms(a.0.pos, &a.0.mon, b.0.pos, &b.0.mon));

    let mut kept: Vec<(Lead, Column)> = Vec::new();
    for (lead, col) in with_leads {
        let redundant = kept
            .iter()
            .any(|(kl, _)| kl.pos == lead.pos && kl.mon.divides(&lead.mon));
        if !redundant {
            kept.push((lead, col));
        }
    }

    let snapshot = kept.clone();
    for i in 0..kept.len() {
        let others: Vec<(Lead, Column)> = snapshot
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, e)| e.clone())
            .collect();
        let reduced = column_normal_form(ctx, &kept[i].1, &others);
        kept[i].1 = reduced;
    }
    kept.into_iter().map(|(_, c)| c).collect()
}

/// Run Buchberger on module columns. Returns the reduced basis and, when
/// `track_syzygies` is set, a generating set of the syzygy module of the
/// inputs (complete by Schreyer's theorem; the chain criterion only removes
/// monomial syzygies expressible through retained pairs).
pub(crate) fn module_buchberger(
    ring: &Arc<RingSpec>,
    rank: usize,
    twists: &[i64],
    inputs: &[Column],
    order: &ModOrder,
    track_syzygies: bool,
) -> GbRun {
    let ctx = Ctx { ring, order };
    let mut engine = Engine {
        twists,
        ninputs: inputs.len(),
        track: track_syzygies,
        product_criterion: rank == 1 && !track_syzygies,
        basis: Vec::new(),
        pairs: Vec::new(),
        syzygies: Vec::new(),
        ctx,
    };
    engine.run(inputs);

    let ctx = Ctx { ring, order };
    let basis = reduce_basis(&ctx, engine.basis.into_iter().map(|e| e.col).collect());

    let mut syzygies = engine.syzygies;
    if track_syzygies && !syzygies.is_empty() {
        syzygies = reduce_syzygies(ring, twists, inputs, syzygies);
    }
    GbRun { basis, syzygies }
}

/// Canonicalize collected syzygies: complete them into the reduced Groebner
/// basis of the syzygy module under the Schreyer order anchored at the input
/// leads. The collected cofactors generate the syzygy module but are written
/// over the original generators, so a plain inter-reduction could discard
/// needed elements; a full completion cannot. Syzygies supported on zero
/// input columns pass through untouched.
fn reduce_syzygies(
    ring: &Arc<RingSpec>,
    ambient_twists: &[i64],
    inputs: &[Column],
    syzygies: Vec<Column>,
) -> Vec<Column> {
    let base_order = ModOrder::Pot;
    let base_ctx = Ctx {
        ring,
        order: &base_order,
    };
    let mut anchors = Vec::with_capacity(inputs.len());
    let mut degrees = Vec::with_capacity(inputs.len());
    let mut zero_positions = Vec::new();
    for (i, col) in inputs.iter().enumerate() {
        degrees.push(
            column_degree(ambient_twists, col)
                .ok()
                .flatten()
                .unwrap_or(0),
        );
        match base_ctx.column_lead(col) {
            Some(l) => anchors.push((l.pos, l.mon)),
            None => {
                anchors.push((0, Monomial::one(ring.nvars())));
                zero_positions.push(i);
            }
        }
    }
    let (unit_syz, cofactor_syz): (Vec<Column>, Vec<Column>) = syzygies
        .into_iter()
        .partition(|s| zero_positions.iter().any(|&i| !s[i].is_zero()));

    let order = ModOrder::Schreyer { anchors };
    let run = module_buchberger(ring, inputs.len(), &degrees, &cofactor_syz, &order, false);
    let mut reduced = run.basis;
    reduced.extend(unit_syz);
    reduced
}

// ---------------------------------------------------------------------------
// Ideal-level public surface
// ---------------------------------------------------------------------------

/// A reduced Groebner basis: monic elements, no term of any element divisible
/// by the leading term of another. Unique per ideal and order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<RingSpec>,
    pub order: OrderKind,
    pub basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn contains_unit(&self) -> bool {
        self.basis.iter().any(|p| p.is_unit())
    }
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn reduced_groebner_basis(ring: &Arc<RingSpec>, gens: &[Polynomial]) -> GroebnerBasis {
    for g in gens {
        assert!(same_ring(g.ring(), ring), "generator from a different ring");
    }
    let columns: Vec<Column> = gens.iter().map(|g| vec![g.clone()]).collect();
    let run = module_buchberger(ring, 1, &[0], &columns, &ModOrder::Pot, false);
    GroebnerBasis {
        ring: ring.clone(),
        order: ring.order(),
        basis: run.basis.into_iter().map(|mut c| c.remove(0)).collect(),
    }
}

/// Remainder of `f` on division by the basis; no term of the result is
/// divisible by any leading term of `gb`.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    assert!(same_ring(f.ring(), &gb.ring), "ring mismatch");
    let order = ModOrder::Pot;
    let ctx = Ctx {
        ring: &gb.ring,
        order: &order,
    };
    let reducers: Vec<(Lead, Column)> = gb
        .basis
        .iter()
        .filter_map(|g| {
            let t = g.leading_term()?;
            Some((
                Lead {
                    pos: 0,
                    mon: t.mon.clone(),
                    coeff: t.coeff,
                },
                vec![g.clone()],
            ))
        })
        .collect();
    column_normal_form(&ctx, &vec![f.clone()], &reducers)
        .into_iter()
        .next()
        .unwrap()
}

/// Ideal membership via normal form against the reduced basis.
pub fn ideal_membership(f: &Polynomial, ring: &Arc<RingSpec>, gens: &[Polynomial]) -> bool {
    let gb = reduced_groebner_basis(ring, gens);
    normal_form(f, &gb).is_zero()
}

/// An element of a free module ⊕ S(-a_i): the ambient twists plus one
/// polynomial entry per summand.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeModuleVector {
    pub twists: Vec<i64>,
    pub entries: Vec<Polynomial>,
}

impl FreeModuleVector {
    pub fn new(twists: Vec<i64>, entries: Vec<Polynomial>) -> Result<Self> {
        if twists.len() != entries.len() {
            return Err(Error::Precondition(
                "vector needs one entry per free summand".into(),
            ));
        }
        Ok(Self { twists, entries })
    }

    /// Degree of the vector as a homogeneous module element.
    pub fn degree(&self) -> Result<Option<i64>> {
        let ring = self
            .entries
            .iter()
            .find(|p| !p.is_zero())
            .map(|p| p.ring().clone());
        match ring {
            None => Ok(None),
            Some(_) => column_degree(&self.twists, &self.entries),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }
}

/// Generators of the syzygy module of homogeneous columns: every returned
/// vector `c` satisfies sum_i c_i * column_i = 0 exactly, and the returned
/// set generates the kernel of the evaluation map.
pub fn syzygies(columns: &[FreeModuleVector]) -> Result<Vec<FreeModuleVector>> {
    if columns.is_empty() {
        return Ok(Vec::new());
    }
    let twists = columns[0].twists.clone();
    let ring = columns
        .iter()
        .flat_map(|c| c.entries.iter())
        .find(|p| !p.is_zero())
        .map(|p| p.ring().clone())
        .ok_or_else(|| Error::Precondition("all columns are zero".into()))?;
    let mut degrees = Vec::with_capacity(columns.len());
    for c in columns {
        if c.twists != twists {
            return Err(Error::Precondition(
                "columns live in different free modules".into(),
            ));
        }
        let deg = column_degree(&twists, &c.entries)?
            .ok_or_else(|| Error::Precondition("zero column".into()))?;
        degrees.push(deg);
    }
    let cols: Vec<Column> = columns.iter().map(|c| c.entries.clone()).collect();
    let run = module_buchberger(&ring, twists.len(), &twists, &cols, &ModOrder::Pot, true);
    let mut out: Vec<FreeModuleVector> = run
        .syzygies
        .into_iter()
        .map(|entries| FreeModuleVector {
            twists: degrees.clone(),
            entries,
        })
        .collect();
    out.sort_by(|a, b| {
        a.degree()
            .ok()
            .flatten()
            .cmp(&b.degree().ok().flatten())
            .then_with(|| {
                for (x, y) in a.entries.iter().zip(&b.entries) {
                    let ord = x.cmp_for_sort(y);
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
                Ordering::Equal
            })
    });
    Ok(out)
}

/// Check the defining property: every S-polynomial of the basis reduces to
/// zero. Test and selftest helper.
pub fn is_groebner_basis(gb: &GroebnerBasis) -> bool {
    let ring = &gb.ring;
    let field = ring.field();
    for (i, f) in gb.basis.iter().enumerate() {
        for g in gb.basis.iter().skip(i + 1) {
            let (Some(tf), Some(tg)) = (f.leading_term(), g.leading_term()) else {
                continue;
            };
            let lcm = tf.mon.lcm(&tg.mon);
            let mf = lcm.checked_div(&tf.mon).unwrap();
            let mg = lcm.checked_div(&tg.mon).unwrap();
            let s = f
                .mul_term(field.inv(tf.coeff), &mf)
                .sub(&g.mul_term(field.inv(tg.coeff), &mg));
            if !normal_form(&s, gb).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::parse_polynomial;

    fn s3() -> Arc<RingSpec> {
        RingSpec::p2(PrimeField::new(32003).unwrap())
    }

    fn p(r: &Arc<RingSpec>, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn already_reduced() {
        let r = s3();
        let gb = reduced_groebner_basis(&r, &[p(&r, "x"), p(&r, "y")]);
        assert_eq!(gb.basis.len(), 2);
        assert_eq!(gb.basis[0], p(&r, "y"));
        assert_eq!(gb.basis[1], p(&r, "x"));
        assert!(is_groebner_basis(&gb));
    }

    #[test]
    fn reduction_collapses_generators() {
        let r = s3();
        let gens = [p(&r, "x^2 - y^2"), p(&r, "x - y")];
        let gb = reduced_groebner_basis(&r, &gens);
        assert_eq!(gb.basis, vec![p(&r, "x - y")]);
    }

    #[test]
    fn reduced_basis_is_unique_under_permutation_and_scaling() {
        let r = s3();
        let a = p(&r, "x^2*y - z^3");
        let b = p(&r, "x*z - y^2");
        let c = p(&r, "y*z^2 - x^2");
        let gb1 = reduced_groebner_basis(&r, &[a.clone(), b.clone(), c.clone()]);
        let gb2 = reduced_groebner_basis(&r, &[c.scale(7), a.scale(31999), b.clone()]);
        assert_eq!(gb1.basis, gb2.basis);
        assert!(is_groebner_basis(&gb1));
    }

    #[test]
    fn zero_ideal_and_unit_ideal() {
        let r = s3();
        let gb = reduced_groebner_basis(&r, &[Polynomial::zero(&r)]);
        assert!(gb.basis.is_empty());
        let gb = reduced_groebner_basis(&r, &[p(&r, "x"), p(&r, "x + 1")]);
        assert!(gb.contains_unit());
        assert_eq!(gb.basis, vec![Polynomial::one(&r)]);
    }

    #[test]
    fn normal_form_examples() {
        let r = s3();
        let gb = reduced_groebner_basis(&r, &[p(&r, "x")]);
        assert_eq!(normal_form(&p(&r, "x^2 + y"), &gb), p(&r, "y"));
        let gens = [p(&r, "x^2 - y^2"), p(&r, "x*y - z^2")];
        let gb = reduced_groebner_basis(&r, &gens);
        for g in &gens {
            assert!(normal_form(g, &gb).is_zero());
        }
    }

    #[test]
    fn normal_form_is_linear() {
        let r = s3();
        let gb = reduced_groebner_basis(&r, &[p(&r, "x^2 - y*z"), p(&r, "y^3 - z^3")]);
        for seed in 0..5u64 {
            let f = Polynomial::random_homogeneous(&r, 4, seed);
            let g = Polynomial::random_homogeneous(&r, 4, seed + 100);
            let a = 17 + seed;
            let lhs = normal_form(&f.scale(a).add(&g), &gb);
            let rhs = normal_form(&f, &gb).scale(a).add(&normal_form(&g, &gb));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn membership_examples() {
        let r = s3();
        let f1 = Polynomial::random_homogeneous(&r, 3, 1);
        let f2 = Polynomial::random_homogeneous(&r, 3, 2);
        let a = Polynomial::random_homogeneous(&r, 3, 3);
        let b = Polynomial::random_homogeneous(&r, 3, 4);
        let f = a.mul(&f1).add(&b.mul(&f2));
        assert!(ideal_membership(&f, &r, &[f1.clone(), f2.clone()]));
        assert!(!ideal_membership(
            &p(&r, "x"),
            &r,
            &[p(&r, "x^2"), p(&r, "x*y")]
        ));
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let r = s3();
        let cols = vec![
            FreeModuleVector::new(vec![0], vec![p(&r, "x")]).unwrap(),
            FreeModuleVector::new(vec![0], vec![p(&r, "y")]).unwrap(),
        ];
        let syz = syzygies(&cols).unwrap();
        assert_eq!(syz.len(), 1);
        let v = &syz[0];
        assert_eq!(v.twists, vec![1, 1]);
        // (y, -x) up to sign
        let a = &v.entries[0];
        let b = &v.entries[1];
        let zero = a.mul(&p(&r, "x")).add(&b.mul(&p(&r, "y")));
        assert!(zero.is_zero());
        assert!(!a.is_zero() && !b.is_zero());
    }

    #[test]
    fn koszul_syzygies_of_three_variables() {
        let r = s3();
        let cols: Vec<FreeModuleVector> = ["x", "y", "z"]
            .iter()
            .map(|v| FreeModuleVector::new(vec![0], vec![p(&r, v)]).unwrap())
            .collect();
        let syz = syzygies(&cols).unwrap();
        assert_eq!(syz.len(), 3);
        for v in &syz {
            let sum = v.entries[0]
                .mul(&p(&r, "x"))
                .add(&v.entries[1].mul(&p(&r, "y")))
                .add(&v.entries[2].mul(&p(&r, "z")));
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn syzygy_of_duplicate_and_zero_generators() {
        let r = s3();
        let x = p(&r, "x");
        let cols = vec![
            FreeModuleVector::new(vec![0], vec![x.clone()]).unwrap(),
            FreeModuleVector::new(vec![0], vec![x.clone()]).unwrap(),
        ];
        let syz = syzygies(&cols).unwrap();
        assert_eq!(syz.len(), 1);
        let v = &syz[0];
        assert!(v.entries[0].mul(&x).add(&v.entries[1].mul(&x)).is_zero());
    }
}
