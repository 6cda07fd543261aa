//! Brute-force machinery over finite point sets: the Gröbner escalier of the
//! ideal of points, its reduced lex Gröbner basis, exact interpolation, and
//! Cerlienco-Mureddu correspondences with their prefix-property verifier.
//!
//! Two independent computation routes are provided on purpose:
//!
//! * [`escalier_of_points`] runs a Möller-style loop that admits a term iff
//!   its evaluation vector is linearly independent of the vectors of the
//!   previously admitted terms, always testing the lex-smallest minimal
//!   element of the complement of the current partial escalier;
//! * [`incremental_basis`] inserts points one at a time, growing a reduced
//!   basis (and the escalier, one term per point) via the basis element of
//!   minimal leading term that fails to vanish at the new point. A
//!   triangular family falls out of the updates and drives exact Newton-style
//!   interpolation on the escalier.
//!
//! The two agree on every input; the property tests insist on it.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use thiserror::Error;

use crate::field::FieldOps;
use crate::monomial::{minimal_basis_from_escalier, Escalier, Term, VarOrder};
use crate::poly::SparsePoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PointIdealError {
    #[error("empty point set")]
    EmptyPointSet,
    #[error("point arity {got} does not match the {expected} declared variables")]
    ArityMismatch { expected: usize, got: usize },
    #[error("duplicate point at index {0}")]
    DuplicatePoint(usize),
    #[error("support size {support} does not match {points} points / {values} values")]
    SupportSizeMismatch { support: usize, points: usize, values: usize },
    #[error("singular evaluation matrix: the support does not interpolate this point set")]
    SingularEvaluationMatrix,
    #[error("correspondence does not pair exactly the points of the set")]
    BijectionMismatch,
}

/// An ordered set of distinct points.
#[derive(Debug, Clone)]
pub struct PointSet<F: FieldOps> {
    order: VarOrder,
    points: Vec<Vec<F::Elem>>,
}

impl<F: FieldOps> PointSet<F> {
    pub fn new(order: VarOrder, points: Vec<Vec<F::Elem>>) -> Result<Self, PointIdealError> {
        let nv = order.len();
        let mut seen: HashSet<&[F::Elem]> = HashSet::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if p.len() != nv {
                return Err(PointIdealError::ArityMismatch { expected: nv, got: p.len() });
            }
            if !seen.insert(p.as_slice()) {
                return Err(PointIdealError::DuplicatePoint(i));
            }
        }
        Ok(PointSet { order, points })
    }

    pub fn order(&self) -> &VarOrder {
        &self.order
    }
    pub fn nvars(&self) -> usize {
        self.order.len()
    }
    pub fn len(&self) -> usize {
        self.points.len()
    }
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
    pub fn points(&self) -> &[Vec<F::Elem>] {
        &self.points
    }
    /// Same points in a different order (for verification sweeps).
    pub fn reordered(&self, idx: &[usize]) -> PointSet<F> {
        PointSet {
            order: self.order.clone(),
            points: idx.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }
    /// Keep the listed coordinates (projection); fails on duplicates.
    pub fn project(&self, coords: &[usize], order: VarOrder) -> Result<PointSet<F>, PointIdealError> {
        let pts = self
            .points
            .iter()
            .map(|p| coords.iter().map(|&c| p[c]).collect())
            .collect();
        PointSet::new(order, pts)
    }
}

fn eval_term<F: FieldOps>(field: &F, t: &Term, p: &[F::Elem]) -> F::Elem {
    field.eval_term(t.exps(), p)
}

/// Gröbner escalier of the ideal of points, by rank checks on evaluation
/// vectors. A term is admitted iff its evaluation vector is independent of
/// the previously admitted ones; candidates are processed lex-smallest first
/// among the minimal elements of the complement of the partial escalier, and
/// a dependent candidate is promoted permanently into the complement's
/// generating set.
pub fn escalier_of_points<F: FieldOps>(field: &F, pts: &PointSet<F>) -> Result<Escalier, PointIdealError> {
    if pts.is_empty() {
        return Err(PointIdealError::EmptyPointSet);
    }
    let nv = pts.nvars();
    let n = pts.len();
    let mut rows: Vec<(usize, Vec<F::Elem>)> = Vec::with_capacity(n);
    let mut admitted: Vec<Term> = Vec::with_capacity(n);
    let mut promoted: Vec<Term> = Vec::new();
    let mut cand: BTreeSet<Term> = BTreeSet::new();
    cand.insert(Term::one(nv));
    while let Some(t) = cand.pop_first() {
        if promoted.iter().any(|g| g.divides(&t)) {
            continue;
        }
        if admitted.len() == n {
            // the matrix already has full rank; every candidate is dependent
            promoted.push(t);
            continue;
        }
        let mut v: Vec<F::Elem> = pts.points().iter().map(|p| eval_term(field, &t, p)).collect();
        for (piv, row) in &rows {
            let c = v[*piv];
            if !field.is_zero(c) {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = field.sub(*x, field.mul(c, *r));
                }
            }
        }
        match v.iter().position(|x| !field.is_zero(*x)) {
            None => promoted.push(t),
            Some(piv) => {
                let ci = field.inv(v[piv]).unwrap();
                for x in v.iter_mut() {
                    *x = field.mul(ci, *x);
                }
                rows.push((piv, v));
                for var in 0..nv {
                    let c = t.mul_var(var);
                    if !promoted.iter().any(|g| g.divides(&c)) {
                        cand.insert(c);
                    }
                }
                admitted.push(t);
            }
        }
    }
    let esc = minimal_basis_from_escalier(&admitted, nv).expect("admitted set is an order ideal");
    promoted.sort();
    debug_assert_eq!(esc.minimal_basis(), &promoted[..]);
    Ok(esc)
}

/// Output of the incremental point-insertion engine.
#[derive(Debug, Clone)]
pub struct PointIdealSummary<F: FieldOps> {
    /// Escalier increment contributed by each point, in insertion order.
    pub increments: Vec<Term>,
    /// Reduced lex Gröbner basis of the ideal of points, by increasing LT.
    pub basis: Vec<SparsePoly<F>>,
    /// One exact interpolant per requested value vector, supported on the
    /// escalier.
    pub interpolants: Vec<SparsePoly<F>>,
}

impl<F: FieldOps> PointIdealSummary<F> {
    pub fn escalier(&self) -> Escalier {
        minimal_basis_from_escalier(&self.increments, self.increments[0].arity())
            .expect("increments form an order ideal")
    }
}

/// Incremental reduced-basis engine. For each point, the basis element with
/// minimal leading term among those not vanishing there yields the escalier
/// increment and (normalized) the next member of a triangular family; the
/// remaining elements are corrected and the new leading terms receive fully
/// reduced generators. `targets` are value vectors to interpolate on the
/// escalier along the way (Newton-style, using the triangular family).
pub fn incremental_basis<F: FieldOps>(
    field: &F,
    pts: &PointSet<F>,
    targets: &[&[F::Elem]],
) -> Result<PointIdealSummary<F>, PointIdealError> {
    if pts.is_empty() {
        return Err(PointIdealError::EmptyPointSet);
    }
    for t in targets {
        if t.len() != pts.len() {
            return Err(PointIdealError::SupportSizeMismatch {
                support: t.len(),
                points: pts.len(),
                values: t.len(),
            });
        }
    }
    let nv = pts.nvars();
    let mut basis: BTreeMap<Term, SparsePoly<F>> = BTreeMap::new();
    basis.insert(Term::one(nv), SparsePoly::one(field, nv));
    let mut in_escalier: HashSet<Term> = HashSet::with_capacity(pts.len());
    let mut increments: Vec<Term> = Vec::with_capacity(pts.len());
    let mut interpolants: Vec<SparsePoly<F>> = targets.iter().map(|_| SparsePoly::zero(nv)).collect();

    for (sigma, p) in pts.points().iter().enumerate() {
        let mut found: Option<(Term, F::Elem)> = None;
        for (lt, g) in basis.iter() {
            let v = g.eval(field, p);
            if !field.is_zero(v) {
                found = Some((*lt, v));
                break;
            }
        }
        let (tau, v) = found.expect("distinct points always separate");
        let gstar = basis.remove(&tau).unwrap();
        // triangular element: vanishes on earlier points, 1 at this one
        let q = gstar.scale(field, field.inv(v).unwrap());
        for (k, vals) in targets.iter().enumerate() {
            let r = field.sub(vals[sigma], interpolants[k].eval(field, p));
            interpolants[k].add_scaled_assign(field, &q, r);
        }
        // elements with smaller LT vanish at p by minimality; correct the rest
        for g in basis.values_mut() {
            let gv = g.eval(field, p);
            if !field.is_zero(gv) {
                g.sub_scaled_assign(field, &q, gv);
            }
        }
        in_escalier.insert(tau);
        increments.push(tau);
        // new minimal generators of the shrunken leading-term ideal
        let mut new_lts: Vec<Term> = (0..nv)
            .map(|var| tau.mul_var(var))
            .filter(|c| !basis.contains_key(c))
            .filter(|c| {
                (0..nv).all(|var| match c.div_var(var) {
                    None => true,
                    Some(d) => in_escalier.contains(&d),
                })
            })
            .collect();
        new_lts.sort();
        new_lts.dedup();
        for lt in new_lts {
            let shift = lt.div(&tau).unwrap();
            let mut g = gstar.mul_term(field, &shift, field.one());
            let gv = g.eval(field, p);
            if !field.is_zero(gv) {
                g.sub_scaled_assign(field, &q, gv);
            }
            // bring the tail back onto the escalier
            g = reduce_tail(field, g, &basis);
            debug_assert_eq!(g.leading_term(), Some(&lt));
            basis.insert(lt, g);
        }
    }
    Ok(PointIdealSummary {
        increments,
        basis: basis.into_values().collect(),
        interpolants,
    })
}

/// Normal-form the tail of `g` (everything below its leading term) against
/// the current basis. Reducers vanish wherever `g` vanishes, so vanishing is
/// preserved; their leading terms are smaller than `g`'s, so the LT survives.
/// A worklist of currently reducible terms keeps this linear in the number
/// of reduction events.
fn reduce_tail<F: FieldOps>(
    field: &F,
    g: SparsePoly<F>,
    basis: &BTreeMap<Term, SparsePoly<F>>,
) -> SparsePoly<F> {
    let lt = *g.leading_term().expect("nonzero");
    let divisor_of = |t: &Term| basis.keys().find(|b| b.divides(t)).cloned();
    let mut work = g;
    let mut queue: BTreeSet<Term> = work
        .iter()
        .filter(|(t, _)| **t != lt && divisor_of(t).is_some())
        .map(|(t, _)| *t)
        .collect();
    while let Some(t) = queue.pop_last() {
        let Some(c) = work.coeff(&t) else { continue };
        let blt = divisor_of(&t).unwrap();
        let red = &basis[&blt];
        let shift = t.div(&blt).unwrap();
        let scale = field.mul(c, field.inv(red.leading_coeff().unwrap()).unwrap());
        let sub = red.mul_term(field, &shift, scale);
        work.sub_scaled_assign(field, &sub, field.one());
        for (u, _) in sub.iter() {
            if *u != t && *u != lt && divisor_of(u).is_some() {
                queue.insert(*u);
            }
        }
    }
    work
}

/// Reduced lex Gröbner basis of the ideal of a finite point set.
pub fn lex_gb_of_points<F: FieldOps>(
    field: &F,
    pts: &PointSet<F>,
) -> Result<Vec<SparsePoly<F>>, PointIdealError> {
    Ok(incremental_basis(field, pts, &[])?.basis)
}

/// Exact interpolation with prescribed support (dense linear solve; the
/// evaluation matrix must be square and invertible).
pub fn interpolate<F: FieldOps>(
    field: &F,
    pts: &PointSet<F>,
    values: &[F::Elem],
    support: &[Term],
) -> Result<SparsePoly<F>, PointIdealError> {
    let n = pts.len();
    if support.len() != n || values.len() != n {
        return Err(PointIdealError::SupportSizeMismatch {
            support: support.len(),
            points: n,
            values: values.len(),
        });
    }
    // augmented matrix, Gauss-Jordan with first-nonzero pivoting
    let mut m: Vec<Vec<F::Elem>> = pts
        .points()
        .iter()
        .zip(values)
        .map(|(p, &v)| {
            let mut row: Vec<F::Elem> = support.iter().map(|t| eval_term(field, t, p)).collect();
            row.push(v);
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !field.is_zero(m[r][col]));
        let piv = piv.ok_or(PointIdealError::SingularEvaluationMatrix)?;
        m.swap(col, piv);
        let ci = field.inv(m[col][col]).unwrap();
        for x in m[col].iter_mut() {
            *x = field.mul(ci, *x);
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !field.is_zero(row[col]) {
                let c = row[col];
                for (x, pv) in row.iter_mut().zip(&pivot_row) {
                    *x = field.sub(*x, field.mul(c, *pv));
                }
            }
        }
    }
    let mut out = SparsePoly::zero(pts.nvars());
    for (j, t) in support.iter().enumerate() {
        out.add_term(field, *t, m[j][n]);
    }
    Ok(out)
}

/// An ordered bijection between a point list and an escalier.
#[derive(Debug, Clone)]
pub struct Correspondence<F: FieldOps> {
    pairs: Vec<(Vec<F::Elem>, Term)>,
}

impl<F: FieldOps> Correspondence<F> {
    pub fn new(pairs: Vec<(Vec<F::Elem>, Term)>) -> Self {
        Correspondence { pairs }
    }
    pub fn pairs(&self) -> &[(Vec<F::Elem>, Term)] {
        &self.pairs
    }
    pub fn len(&self) -> usize {
        self.pairs.len()
    }
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
    pub fn term_of(&self, p: &[F::Elem]) -> Option<&Term> {
        self.pairs.iter().find(|(q, _)| q.as_slice() == p).map(|(_, t)| t)
    }
    /// Points reordered so their images are lex increasing (the pullback of
    /// the escalier enumeration through the correspondence).
    pub fn lex_pullback_points(&self, order: VarOrder) -> Result<PointSet<F>, PointIdealError> {
        let mut pairs: Vec<&(Vec<F::Elem>, Term)> = self.pairs.iter().collect();
        pairs.sort_by_key(|a| a.1);
        PointSet::new(order, pairs.into_iter().map(|(p, _)| p.clone()).collect())
    }
    pub fn terms_sorted(&self) -> Vec<Term> {
        let mut ts: Vec<Term> = self.pairs.iter().map(|(_, t)| *t).collect();
        ts.sort();
        ts
    }
}

/// The Cerlienco-Mureddu correspondence of an ordered point set: each point
/// is paired with the unique term by which the escalier grows when the point
/// is appended.
pub fn cm_correspondence<F: FieldOps>(
    field: &F,
    pts: &PointSet<F>,
) -> Result<Correspondence<F>, PointIdealError> {
    let summary = incremental_basis(field, pts, &[])?;
    Ok(Correspondence::new(
        pts.points().iter().cloned().zip(summary.increments).collect(),
    ))
}

/// Outcome of a prefix-property verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmVerification {
    pub ok: bool,
    /// First prefix length at which the claimed terms stop being the
    /// escalier of the point prefix, with (expected, claimed) increment.
    pub failure: Option<(usize, Term, Term)>,
}

/// Check that `phi` is a Cerlienco-Mureddu correspondence for `pts` in the
/// given order: for every prefix length, the first terms of `phi` must equal
/// (as a set) the escalier of the corresponding point prefix.
pub fn verify_cm<F: FieldOps>(
    field: &F,
    pts: &PointSet<F>,
    phi: &Correspondence<F>,
) -> Result<CmVerification, PointIdealError> {
    if phi.len() != pts.len() {
        return Err(PointIdealError::BijectionMismatch);
    }
    let mut by_point: HashMap<&[F::Elem], &Term> = HashMap::with_capacity(phi.len());
    for (p, t) in phi.pairs() {
        if by_point.insert(p.as_slice(), t).is_some() {
            return Err(PointIdealError::BijectionMismatch);
        }
    }
    let claimed: Vec<&Term> = pts
        .points()
        .iter()
        .map(|p| by_point.get(p.as_slice()).copied().ok_or(PointIdealError::BijectionMismatch))
        .collect::<Result<_, _>>()?;
    {
        let mut uniq: HashSet<&Term> = HashSet::new();
        if !claimed.iter().all(|t| uniq.insert(*t)) {
            return Err(PointIdealError::BijectionMismatch);
        }
    }
    let truth = incremental_basis(field, pts, &[])?.increments;
    for (i, (want, got)) in truth.iter().zip(&claimed).enumerate() {
        if want != *got {
            return Ok(CmVerification {
                ok: false,
                failure: Some((i + 1, *want, *(*got))),
            });
        }
    }
    Ok(CmVerification { ok: true, failure: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::gf2m::{Field, FieldElem};

    fn pt2(f: &Field, a: u32, b: u32) -> Vec<FieldElem> {
        vec![f.elem(a).unwrap(), f.elem(b).unwrap()]
    }

    #[test]
    fn single_point_escalier() {
        let f = Field::new(2, None).unwrap();
        let pts = PointSet::new(VarOrder::numbered(1), vec![vec![f.elem(2).unwrap()]]).unwrap();
        let e = escalier_of_points(&f, &pts).unwrap();
        assert_eq!(e.terms(), &[Term::one(1)]);
    }

    #[test]
    fn three_point_example() {
        let f = Field::new(2, None).unwrap();
        let pts = PointSet::new(
            VarOrder::numbered(2),
            vec![pt2(&f, 0, 0), pt2(&f, 0, 1), pt2(&f, 1, 0)],
        )
        .unwrap();
        let e = escalier_of_points(&f, &pts).unwrap();
        let want = [Term::new(vec![0, 0]), Term::new(vec![1, 0]), Term::new(vec![0, 1])];
        assert_eq!(e.terms(), &want[..]);
        // correspondence is order sensitive
        let phi = cm_correspondence(&f, &pts).unwrap();
        let terms: Vec<&Term> = phi.pairs().iter().map(|(_, t)| t).collect();
        assert_eq!(terms[0], &Term::new(vec![0, 0]));
        assert_eq!(terms[1], &Term::new(vec![0, 1])); // x2
        assert_eq!(terms[2], &Term::new(vec![1, 0])); // x1

        let swapped = PointSet::new(
            VarOrder::numbered(2),
            vec![pt2(&f, 0, 0), pt2(&f, 1, 0), pt2(&f, 0, 1)],
        )
        .unwrap();
        let phi2 = cm_correspondence(&f, &swapped).unwrap();
        let terms2: Vec<&Term> = phi2.pairs().iter().map(|(_, t)| t).collect();
        assert_eq!(terms2[1], &Term::new(vec![1, 0])); // x1 first now
    }

    #[test]
    fn verify_cm_detects_failure() {
        let f = Field::new(2, None).unwrap();
        let pts = PointSet::new(VarOrder::numbered(2), vec![pt2(&f, 0, 0), pt2(&f, 0, 1)]).unwrap();
        let good = cm_correspondence(&f, &pts).unwrap();
        assert!(verify_cm(&f, &pts, &good).unwrap().ok);

        // claim x1 for the second point: two points share the x1 coordinate,
        // so the true escalier of the pair is {1, x2}
        let bad = Correspondence::new(vec![
            (pt2(&f, 0, 0), Term::new(vec![0, 0])),
            (pt2(&f, 0, 1), Term::new(vec![1, 0])),
        ]);
        let v = verify_cm(&f, &pts, &bad).unwrap();
        assert!(!v.ok);
        let (sigma, want, got) = v.failure.unwrap();
        assert_eq!(sigma, 2);
        assert_eq!(want, Term::new(vec![0, 1]));
        assert_eq!(got, Term::new(vec![1, 0]));
    }

    #[test]
    fn gb_of_two_points_one_var() {
        let f = Field::new(2, None).unwrap();
        let pts = PointSet::new(
            VarOrder::numbered(1),
            vec![vec![FieldElem::ZERO], vec![FieldElem::ONE]],
        )
        .unwrap();
        let gb = lex_gb_of_points(&f, &pts).unwrap();
        assert_eq!(gb.len(), 1);
        // x^2 + x
        let mut want = SparsePoly::from_term(&f, Term::var_pow(1, 0, 2), FieldElem::ONE);
        want.add_term(&f, Term::var_pow(1, 0, 1), FieldElem::ONE);
        assert_eq!(gb[0], want);
    }

    #[test]
    fn gb_vanishes_and_is_reduced() {
        let f = Field::new(3, None).unwrap();
        let pts: Vec<Vec<FieldElem>> = f
            .all_elems()
            .flat_map(|a| f.all_elems().map(move |b| vec![a, b]))
            .filter(|p| p[0] != p[1])
            .collect();
        let pts = PointSet::new(VarOrder::error_pair(), pts).unwrap();
        let sum = incremental_basis(&f, &pts, &[]).unwrap();
        let esc = sum.escalier();
        assert_eq!(esc.len(), pts.len());
        for g in &sum.basis {
            for p in pts.points() {
                assert!(g.eval(&f, p).is_zero());
            }
            // monic, tail on the escalier
            assert_eq!(g.leading_coeff(), Some(FieldElem::ONE));
            for (t, _) in g.iter() {
                if t != g.leading_term().unwrap() {
                    assert!(esc.contains(t));
                }
            }
        }
        let lts: Vec<Term> = sum.basis.iter().map(|g| *g.leading_term().unwrap()).collect();
        assert_eq!(&lts[..], esc.minimal_basis());
    }

    #[test]
    fn interpolate_examples() {
        let f = Field::new(2, None).unwrap();
        // two points, lagrange on {1, x}
        let pts = PointSet::new(
            VarOrder::numbered(1),
            vec![vec![FieldElem::ZERO], vec![FieldElem::ONE]],
        )
        .unwrap();
        let p = interpolate(
            &f,
            &pts,
            &[FieldElem::ONE, FieldElem::ZERO],
            &[Term::one(1), Term::var_pow(1, 0, 1)],
        )
        .unwrap();
        // x + 1
        assert_eq!(p.coeff(&Term::one(1)), Some(FieldElem::ONE));
        assert_eq!(p.coeff(&Term::var_pow(1, 0, 1)), Some(FieldElem::ONE));

        // all-zero values give the zero polynomial
        let z = interpolate(
            &f,
            &pts,
            &[FieldElem::ZERO, FieldElem::ZERO],
            &[Term::one(1), Term::var_pow(1, 0, 1)],
        )
        .unwrap();
        assert!(z.is_zero());

        // singular support: {1, x^3} cannot separate 0 and 1 (x^3 = x on GF(4)
        // restricted to {0,1} -> dependent columns? actually x^3(0)=0, x^3(1)=1:
        // invertible; use a genuinely singular case: {x, x^2} on {0, 1}
        let s = interpolate(
            &f,
            &pts,
            &[FieldElem::ONE, FieldElem::ZERO],
            &[Term::var_pow(1, 0, 1), Term::var_pow(1, 0, 2)],
        );
        assert_eq!(s.unwrap_err(), PointIdealError::SingularEvaluationMatrix);
    }

    #[test]
    fn newton_interpolation_on_escalier() {
        let f = PrimeField::new(7).unwrap();
        let pts = PointSet::new(
            VarOrder::numbered(2),
            vec![vec![0, 0], vec![1, 0], vec![2, 0], vec![0, 1], vec![1, 1]],
        )
        .unwrap();
        let values: Vec<u64> = pts.points().iter().map(|p| (3 * p[0] + 2 * p[1] * p[1] + 1) % 7).collect();
        let sum = incremental_basis(&f, &pts, &[&values]).unwrap();
        let interp = &sum.interpolants[0];
        let esc = sum.escalier();
        assert!(interp.supported_on(&esc));
        for (p, &v) in pts.points().iter().zip(&values) {
            assert_eq!(interp.eval(&f, p), v);
        }
    }

    #[test]
    fn rank_and_incremental_routes_agree() {
        let f = Field::new(3, None).unwrap();
        let pts: Vec<Vec<FieldElem>> = vec![
            pt2(&f, 1, 2), pt2(&f, 3, 2), pt2(&f, 1, 1), pt2(&f, 0, 5), pt2(&f, 4, 4), pt2(&f, 5, 1),
        ];
        let pts = PointSet::new(VarOrder::numbered(2), pts).unwrap();
        let a = escalier_of_points(&f, &pts).unwrap();
        let b = incremental_basis(&f, &pts, &[]).unwrap().escalier();
        assert_eq!(a, b);
    }
}
