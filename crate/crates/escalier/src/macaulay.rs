//! Macaulay's trick: turn a 0-dimensional monomial ideal into a point set
//! (escalier exponent vectors as coordinates), products of linear factors as
//! a universal basis, and a triangular interpolation family. Runs over a
//! prime field Z_p with p at least the maximal generator degree, since the
//! construction needs the scalars 0..delta-1 to stay distinct.
//!
//! Also Lazard's two-variable form of the Cerlienco-Mureddu correspondence,
//! which reads the escalier off the column profile of the point set.

use std::collections::HashMap;

use thiserror::Error;

use crate::field::{FieldOps, PrimeField};
use crate::monomial::{degrevlex_cmp, escalier_from_minimal_basis, Escalier, MonomialError, Term, VarOrder};
use crate::pointideal::{
    escalier_of_points, lex_gb_of_points, verify_cm, Correspondence, PointIdealError, PointSet,
};
use crate::poly::{normal_form, SparsePoly};

#[derive(Debug, Error)]
pub enum MacaulayError {
    #[error("prime {p} is smaller than the maximal generator degree {delta}")]
    FieldTooSmall { p: u64, delta: u64 },
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Points(#[from] PointIdealError),
    #[error(transparent)]
    Prime(#[from] crate::field::PrimeFieldError),
    #[error("expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
}

/// Result of Macaulay's construction for a monomial basis G.
#[derive(Debug, Clone)]
pub struct MacaulayOutput {
    pub prime_field: PrimeField,
    pub gens: Vec<Term>,
    pub escalier: Escalier,
    /// Escalier enumeration used throughout: increasing degree, lex within a
    /// degree, so every prefix is an order ideal.
    pub enumeration: Vec<Term>,
    /// Exponent vectors of the enumeration, read as points of Z_p^n.
    pub points: PointSet<PrimeField>,
    /// p_i = prod_l prod_{j<e_il} (x_l - j), one per generator.
    pub ideal_gens: Vec<SparsePoly<PrimeField>>,
    pub correspondence: Correspondence<PrimeField>,
    /// q_i = prod_l prod_{j<e_il} (x_l - j)/(e_il - j), one per escalier term.
    pub triangular: Vec<SparsePoly<PrimeField>>,
}

fn falling_product(field: &PrimeField, nvars: usize, exps: &[u32], normalize: bool) -> SparsePoly<PrimeField> {
    let mut acc = SparsePoly::one(field, nvars);
    for (var, &e) in exps.iter().enumerate() {
        for j in 0..e as u64 {
            let mut factor = SparsePoly::var(field, nvars, var);
            factor.add_term(field, Term::one(nvars), field.neg(j % field.modulus()));
            if normalize {
                let d = field.sub(e as u64 % field.modulus(), j % field.modulus());
                factor = factor.scale(field, field.inv(d).expect("e - j nonzero mod p"));
            }
            acc = acc.mul(field, &factor);
        }
    }
    acc
}

/// Macaulay's construction over Z_p (p prime, p >= max generator degree).
pub fn macaulay_construct(gens: &[Term], p: u64) -> Result<MacaulayOutput, MacaulayError> {
    let nvars = gens.first().map(Term::arity).unwrap_or(1);
    let delta = gens.iter().map(Term::degree).max().unwrap_or(0);
    if p < delta {
        return Err(MacaulayError::FieldTooSmall { p, delta });
    }
    let field = PrimeField::new(p)?;
    let escalier = escalier_from_minimal_basis(gens, nvars)?;
    let mut enumeration: Vec<Term> = escalier.terms().to_vec();
    enumeration.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    let points_raw: Vec<Vec<u64>> = enumeration
        .iter()
        .map(|t| t.exps().iter().map(|&e| e as u64 % p).collect())
        .collect();
    let points = PointSet::new(VarOrder::numbered(nvars), points_raw)?;
    let ideal_gens = gens.iter().map(|g| falling_product(&field, nvars, g.exps(), false)).collect();
    let triangular = enumeration
        .iter()
        .map(|t| falling_product(&field, nvars, t.exps(), true))
        .collect();
    let correspondence = Correspondence::new(
        points.points().iter().cloned().zip(enumeration.iter().cloned()).collect(),
    );
    let mut sorted_gens = gens.to_vec();
    sorted_gens.sort();
    Ok(MacaulayOutput {
        prime_field: field,
        gens: sorted_gens,
        escalier,
        enumeration,
        points,
        ideal_gens,
        correspondence,
        triangular,
    })
}

/// Verification report for a [`MacaulayOutput`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayReport {
    /// The products generate exactly the ideal of the points: each reduces
    /// to zero against the point-ideal basis and the escaliers agree.
    pub ideals_match: bool,
    /// The enumeration-to-points map is a Cerlienco-Mureddu correspondence.
    pub cm_ok: bool,
    /// Leading terms of the products equal the generators under lex and
    /// under degrevlex, and the point-ideal escalier complement is generated
    /// by them.
    pub leading_terms_ok: bool,
    /// q_i(P_j) = 0 for j < i and q_i(P_i) = 1, for every prefix.
    pub triangular_ok: bool,
}

impl MacaulayReport {
    pub fn all_ok(&self) -> bool {
        self.ideals_match && self.cm_ok && self.leading_terms_ok && self.triangular_ok
    }
}

pub fn macaulay_verify(out: &MacaulayOutput) -> Result<MacaulayReport, MacaulayError> {
    let f = &out.prime_field;
    let point_gb = lex_gb_of_points(f, &out.points)?;
    let oracle_escalier = escalier_of_points(f, &out.points)?;

    let vanish = out
        .ideal_gens
        .iter()
        .all(|p| out.points.points().iter().all(|pt| f.is_zero(p.eval(f, pt))));
    let reduce_to_zero = out
        .ideal_gens
        .iter()
        .all(|p| normal_form(f, p, &point_gb).is_zero());
    let ideals_match = vanish && reduce_to_zero && oracle_escalier == out.escalier;

    let cm_ok = verify_cm(f, &out.points, &out.correspondence)?.ok;

    let lex_lts: Vec<&Term> = out.ideal_gens.iter().map(|p| p.leading_term().unwrap()).collect();
    let mut lex_sorted: Vec<Term> = lex_lts.iter().map(|t| *(*t)).collect();
    lex_sorted.sort();
    let degrevlex_ok = out
        .ideal_gens
        .iter()
        .zip(lex_lts.iter())
        .all(|(p, lt)| p.leading_term_by(degrevlex_cmp) == Some(*lt));
    let leading_terms_ok = lex_sorted == out.gens
        && degrevlex_ok
        && oracle_escalier.minimal_basis() == &out.gens[..];

    let mut triangular_ok = true;
    for (i, q) in out.triangular.iter().enumerate() {
        for (j, pt) in out.points.points().iter().enumerate() {
            let v = q.eval(f, pt);
            if j < i && !f.is_zero(v) {
                triangular_ok = false;
            }
            if j == i && v != f.one() {
                triangular_ok = false;
            }
        }
    }

    Ok(MacaulayReport { ideals_match, cm_ok, leading_terms_ok, triangular_ok })
}

/// Lazard's two-variable correspondence.
#[derive(Debug, Clone)]
pub struct LazardOutput<F: FieldOps> {
    pub escalier: Escalier,
    pub correspondence: Correspondence<F>,
    /// Column sizes d(0) >= d(1) >= ... after renumbering (ties broken by
    /// first appearance in the input).
    pub column_counts: Vec<usize>,
}

/// Read the escalier of a 2-variable point set off its column profile:
/// group by first coordinate, renumber so the counts d(i) never increase,
/// then N = {x1^i x2^j : j < d(i)} and the point at column i, height j maps
/// to x1^i x2^j.
pub fn lazard_correspondence<F: FieldOps>(
    _field: &F,
    pts: &PointSet<F>,
) -> Result<LazardOutput<F>, MacaulayError> {
    if pts.nvars() != 2 {
        return Err(MacaulayError::ArityMismatch { expected: 2, got: pts.nvars() });
    }
    if pts.is_empty() {
        return Err(MacaulayError::Points(PointIdealError::EmptyPointSet));
    }
    let mut col_index: HashMap<F::Elem, usize> = HashMap::new();
    let mut columns: Vec<Vec<F::Elem>> = Vec::new(); // y-values per column, in appearance order
    for p in pts.points() {
        let i = *col_index.entry(p[0]).or_insert_with(|| {
            columns.push(Vec::new());
            columns.len() - 1
        });
        columns[i].push(p[1]);
    }
    let mut order: Vec<usize> = (0..columns.len()).collect();
    order.sort_by(|&a, &b| columns[b].len().cmp(&columns[a].len())); // stable: ties keep appearance order
    let keys: Vec<F::Elem> = {
        let mut by_col: Vec<F::Elem> = vec![pts.points()[0][0]; columns.len()];
        for p in pts.points() {
            by_col[col_index[&p[0]]] = p[0];
        }
        by_col
    };
    let mut pairs: Vec<(Vec<F::Elem>, Term)> = Vec::with_capacity(pts.len());
    let mut column_counts = Vec::with_capacity(columns.len());
    let mut terms: Vec<Term> = Vec::with_capacity(pts.len());
    for (new_i, &old) in order.iter().enumerate() {
        column_counts.push(columns[old].len());
        for (j, &y) in columns[old].iter().enumerate() {
            let t = Term::new(vec![new_i as u32, j as u32]);
            pairs.push((vec![keys[old], y], t));
            terms.push(t);
        }
    }
    let escalier = crate::monomial::minimal_basis_from_escalier(&terms, 2)?;
    Ok(LazardOutput { escalier, correspondence: Correspondence::new(pairs), column_counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2m::Field;

    fn t(exps: &[u32]) -> Term {
        Term::new(exps.to_vec())
    }

    #[test]
    fn construct_square_basis() {
        let out = macaulay_construct(&[t(&[2, 0]), t(&[1, 1]), t(&[0, 2])], 2).unwrap();
        assert_eq!(out.enumeration, vec![t(&[0, 0]), t(&[1, 0]), t(&[0, 1])]);
        assert_eq!(
            out.points.points(),
            &[vec![0u64, 0], vec![1, 0], vec![0, 1]]
        );
        // p for x1^2 is x1(x1-1) = x1^2 + x1 mod 2
        let p0 = &out.ideal_gens[0];
        assert_eq!(p0.coeff(&t(&[2, 0])), Some(1));
        assert_eq!(p0.coeff(&t(&[1, 0])), Some(1));
        // p for x1 x2 is x1 x2 itself
        assert_eq!(out.ideal_gens[1].num_terms(), 1);
        let report = macaulay_verify(&out).unwrap();
        assert!(report.all_ok(), "{report:?}");
    }

    #[test]
    fn construct_single_var() {
        let out = macaulay_construct(&[t(&[1])], 2).unwrap();
        assert_eq!(out.points.points(), &[vec![0u64]]);
        assert_eq!(out.ideal_gens[0], SparsePoly::var(&out.prime_field, 1, 0));
        assert_eq!(out.triangular[0], SparsePoly::one(&out.prime_field, 1));
        assert!(macaulay_verify(&out).unwrap().all_ok());
    }

    #[test]
    fn construct_cubic_line() {
        let out = macaulay_construct(&[t(&[3, 0]), t(&[0, 1])], 3).unwrap();
        assert_eq!(
            out.points.points(),
            &[vec![0u64, 0], vec![1, 0], vec![2, 0]]
        );
        let f = &out.prime_field;
        // q_2 = x1, q_3 = x1(x1-1)/2 = 2 x1^2 + x1 mod 3
        assert_eq!(out.triangular[1], SparsePoly::var(f, 2, 0));
        let q3 = &out.triangular[2];
        assert_eq!(q3.coeff(&t(&[2, 0])), Some(2));
        assert_eq!(q3.coeff(&t(&[1, 0])), Some(1));
        assert!(macaulay_verify(&out).unwrap().all_ok());
    }

    #[test]
    fn broken_generator_detected() {
        let mut out = macaulay_construct(&[t(&[2, 0]), t(&[1, 1]), t(&[0, 2])], 2).unwrap();
        let f = out.prime_field.clone();
        let mut bad = out.ideal_gens[0].clone();
        bad.add_term(&f, Term::one(2), 1);
        out.ideal_gens[0] = bad;
        let report = macaulay_verify(&out).unwrap();
        assert!(!report.ideals_match);
    }

    #[test]
    fn field_too_small() {
        assert!(matches!(
            macaulay_construct(&[t(&[3, 0]), t(&[0, 1])], 2),
            Err(MacaulayError::FieldTooSmall { p: 2, delta: 3 })
        ));
    }

    #[test]
    fn lazard_small_example() {
        let f = Field::new(2, None).unwrap();
        let e = |v: u32| f.elem(v).unwrap();
        let pts = PointSet::new(
            VarOrder::numbered(2),
            vec![vec![e(0), e(0)], vec![e(0), e(1)], vec![e(1), e(0)]],
        )
        .unwrap();
        let out = lazard_correspondence(&f, &pts).unwrap();
        assert_eq!(out.column_counts, vec![2, 1]);
        let oracle = escalier_of_points(&f, &pts).unwrap();
        assert_eq!(out.escalier, oracle);
        // column-major point order satisfies the prefix property
        let ordered = PointSet::new(
            VarOrder::numbered(2),
            out.correspondence.pairs().iter().map(|(p, _)| p.clone()).collect(),
        )
        .unwrap();
        assert!(verify_cm(&f, &ordered, &out.correspondence).unwrap().ok);
    }

    #[test]
    fn lazard_single_point() {
        let f = Field::new(2, None).unwrap();
        let pts = PointSet::new(VarOrder::numbered(2), vec![vec![f.elem(2).unwrap(), f.elem(3).unwrap()]]).unwrap();
        let out = lazard_correspondence(&f, &pts).unwrap();
        assert_eq!(out.escalier.terms(), &[Term::one(2)]);
    }

    #[test]
    fn lazard_on_the_weight2_error_variety() {
        // for n = 7 every column of {(c, d) : c != d} has n - 1 = 6 points,
        // so the staircase is the full 7 x 6 box
        let f = Field::new(3, None).unwrap();
        let roots = crate::gf2m::roots_of_unity(&f, 7).unwrap();
        let pts = crate::variety::error_variety_points(&roots, crate::variety::VarietyKind::Two);
        let out = lazard_correspondence(&f, &pts).unwrap();
        assert_eq!(out.column_counts, vec![6; 7]);
        assert_eq!(out.escalier.len(), 42);
        assert_eq!(
            out.escalier.minimal_basis(),
            &[t(&[7, 0]), t(&[0, 6])]
        );
    }

    #[test]
    fn lazard_rejects_wrong_arity() {
        let f = Field::new(2, None).unwrap();
        let pts = PointSet::new(VarOrder::numbered(3), vec![vec![f.elem(1).unwrap(); 3]]).unwrap();
        assert!(matches!(
            lazard_correspondence(&f, &pts),
            Err(MacaulayError::ArityMismatch { expected: 2, got: 3 })
        ));
    }
}
