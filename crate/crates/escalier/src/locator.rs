//! Error locator polynomials by exact interpolation.
//!
//! The general error locator polynomial (GELP) is the monic degree-2
//! polynomial z1^2 + a1(x1,x2) z1 + a0(x1,x2) whose roots at a correctable
//! syndrome are the error locations padded with zero. It is obtained by
//! interpolating the values z1^2 over a syndrome variety on its escalier
//! support, never by a basis-completion algorithm.
//!
//! The half error locator polynomial (HELP) is linear in z1 and returns one
//! designated error location of a weight-2 syndrome (the one at an odd gap
//! from its partner); the partner follows from z2 = z1 + x1. For full-length
//! codes the support collapses to (n-1)/2 terms on a single scaled orbit.

use thiserror::Error;

use crate::field::FieldOps;
use crate::gf2m::{FieldElem, Gf2mError};
use crate::monomial::Term;
use crate::pointideal::{incremental_basis, interpolate, PointIdealError, PointSet};
use crate::poly::SparsePoly;
use crate::variety::{
    syndrome_variety_points, z2_odd_gap_points, DerivedStructures, SyndromeConfig, VarietyKind,
};
use crate::monomial::VarOrder;
use crate::gf2m::Field;

#[derive(Debug, Error)]
pub enum LocatorError {
    #[error(transparent)]
    Points(#[from] PointIdealError),
    #[error(transparent)]
    Gf2m(#[from] Gf2mError),
    #[error("support terms {0} and {1} coincide")]
    SupportCollision(usize, usize),
    #[error("sparse HELP needs a full-length code (n = 2^m - 1), got n = {n} with alpha = {alpha}")]
    NotFullLength { n: u32, alpha: u32 },
    #[error("GELP interpolation must target the two, plus or ns variety, got {0}")]
    UnsupportedKind(VarietyKind),
    #[error("base escalier does not carry the interpolated support")]
    BaseEscalierMismatch,
    #[error("point set is not the odd-gap parameterization of Z_2")]
    OddGapMismatch,
    #[error("found {found} roots in S_n (with multiplicity) instead of 2; syndrome is not correctable")]
    NotASplitPair { found: usize },
}

/// Outcome counts of an exhaustive verification sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepSummary {
    pub checked: u64,
    pub failures: u64,
}

impl SweepSummary {
    pub fn ok(&self) -> bool {
        self.failures == 0
    }
}

/// General error locator polynomial for one variety kind.
#[derive(Debug, Clone)]
pub struct Gelp {
    pub kind: VarietyKind,
    /// z1^2 + a1(x1,x2) z1 + a0(x1,x2), in the four syndrome variables.
    pub poly: SparsePoly<Field>,
}

/// Interpolate the GELP tail over Z_kind (crate-internal route shared with
/// the derivation chain).
pub(crate) fn gelp_poly(cfg: &SyndromeConfig, kind: VarietyKind) -> Result<SparsePoly<Field>, LocatorError> {
    if kind == VarietyKind::E {
        return Err(LocatorError::UnsupportedKind(kind));
    }
    let f = &cfg.field;
    let pts = syndrome_variety_points(cfg, kind);
    let values: Vec<FieldElem> = pts.points().iter().map(|p| f.mul(p[2], p[2])).collect();
    let summary = incremental_basis(f, &pts, &[&values])?;
    let mut g = summary.interpolants[0].clone();
    // z1^2 - tail; characteristic 2 makes the sign immaterial
    g.add_term(f, Term::var_pow(4, 2, 2), f.one());
    debug_assert_eq!(g.leading_term().map(Term::exps), Some(&[0u32, 0, 2, 0][..]));
    Ok(g)
}

/// GELP against the escalier of `base` (kind two, plus or ns). The tail
/// interpolates the values z1^2 = c^2 at each syndrome point; equivalently
/// the z1-linear part is exactly x1 and the constant part interpolates cd.
pub fn gelp_interpolate(cfg: &SyndromeConfig, base: &DerivedStructures) -> Result<Gelp, LocatorError> {
    let poly = gelp_poly(cfg, base.kind)?;
    let lt = *poly.leading_term().unwrap();
    for (t, _) in poly.iter() {
        if *t != lt && !base.escalier.contains(t) {
            return Err(LocatorError::BaseEscalierMismatch);
        }
    }
    Ok(Gelp { kind: base.kind, poly })
}

impl Gelp {
    /// Specialize to a syndrome: the pair (a1, a0) with
    /// GELP(s1, s2, z) = z^2 + a1 z + a0.
    pub fn quadratic_at(&self, f: &Field, s1: FieldElem, s2: FieldElem) -> (FieldElem, FieldElem) {
        let mut a1 = FieldElem::ZERO;
        let mut a0 = FieldElem::ZERO;
        for (t, &c) in self.poly.iter() {
            let e = t.exps();
            if e[2] == 2 {
                continue;
            }
            let v = f.mul(c, f.mul(f.pow_elem(s1, e[0] as u64), f.pow_elem(s2, e[1] as u64)));
            match e[2] {
                0 => a0 = f.add(a0, v),
                1 => a1 = f.add(a1, v),
                _ => unreachable!("GELP is quadratic in z1"),
            }
        }
        (a1, a0)
    }

    pub fn eval_z(&self, f: &Field, s1: FieldElem, s2: FieldElem, z: FieldElem) -> FieldElem {
        let (a1, a0) = self.quadratic_at(f, s1, s2);
        f.add(f.add(f.mul(z, z), f.mul(a1, z)), a0)
    }
}

/// Roots of the specialized GELP in S_n, counted with multiplicity, by
/// scanning all n + 1 candidates. In characteristic 2 a single root is
/// double exactly when the z-coefficient vanishes.
pub fn locate_roots(
    cfg: &SyndromeConfig,
    gelp: &Gelp,
    s1: FieldElem,
    s2: FieldElem,
) -> Result<(FieldElem, FieldElem), LocatorError> {
    let f = &cfg.field;
    let (a1, a0) = gelp.quadratic_at(f, s1, s2);
    let mut roots = Vec::with_capacity(2);
    for &z in cfg.roots.sn() {
        if f.add(f.add(f.mul(z, z), f.mul(a1, z)), a0).is_zero() {
            roots.push(z);
        }
    }
    match roots.len() {
        2 => Ok((roots[0], roots[1])),
        1 if a1.is_zero() => Ok((roots[0], roots[0])),
        k => Err(LocatorError::NotASplitPair { found: k }),
    }
}

/// Exhaustive root-property sweep: for every pair in the kind's domain
/// (plus/ns sweeps also include the zero pair), the specialized GELP must
/// have root multiset exactly {c, d}.
pub fn gelp_root_sweep(cfg: &SyndromeConfig, gelp: &Gelp) -> SweepSummary {
    let mut checked = 0;
    let mut failures = 0;
    for &c in cfg.roots.sn() {
        for &d in cfg.roots.sn() {
            let in_domain = match gelp.kind {
                VarietyKind::Two => !c.is_zero() && !d.is_zero() && c != d,
                _ => c != d || (c.is_zero() && d.is_zero()),
            };
            if !in_domain {
                continue;
            }
            checked += 1;
            let (s1, s2) = cfg.syndrome_of_pair(c, d);
            match locate_roots(cfg, gelp, s1, s2) {
                Ok((r1, r2)) => {
                    let same = (r1 == c && r2 == d) || (r1 == d && r2 == c);
                    if !same {
                        failures += 1;
                    }
                }
                Err(_) => failures += 1,
            }
        }
    }
    SweepSummary { checked, failures }
}

/// Half error locator polynomial z1 + sum c_t t with t in the x-variables.
#[derive(Debug, Clone)]
pub struct Help {
    pub poly: SparsePoly<Field>,
    /// Whether the closed sparse support was used (full-length codes).
    pub sparse: bool,
    /// Result of the exhaustive designation sweep over all weight-2 pairs.
    pub sweep: SweepSummary,
}

impl Help {
    /// The designated error location at a weight-2 syndrome.
    pub fn designated_root(&self, f: &Field, s1: FieldElem, s2: FieldElem) -> FieldElem {
        let mut acc = FieldElem::ZERO;
        for (t, &c) in self.poly.iter() {
            let e = t.exps();
            if e[2] != 0 {
                continue; // the z1 term itself
            }
            acc = f.add(acc, f.mul(c, f.mul(f.pow_elem(s1, e[0] as u64), f.pow_elem(s2, e[1] as u64))));
        }
        acc
    }
}

fn help_sweep(cfg: &SyndromeConfig, help: &Help) -> SweepSummary {
    let f = &cfg.field;
    let n = cfg.n() as u64;
    let mut checked = 0;
    let mut failures = 0;
    for i in 1..=(n - 1) / 2 {
        let gap = 2 * i - 1;
        for k in 0..n {
            let c = cfg.roots.b_pow(f, k);
            let d = f.mul(c, cfg.roots.b_pow(f, gap));
            let (s1, s2) = cfg.syndrome_of_pair(c, d);
            checked += 1;
            let h = help.designated_root(f, s1, s2);
            if h != c || f.add(s1, h) != d {
                failures += 1;
            }
        }
    }
    SweepSummary { checked, failures }
}

/// Sparse HELP for full-length codes: support
/// x1^{(n+1-l(i-1)) mod n} x2^{(i-1) mod (n-1)/2}, i = 1..(n-1)/2, solved on
/// the single orbit {(1 + a^{2j+1}, 1 + a^{l(2j+1)})} with target value 1;
/// the solved polynomial then designates c on every scaled orbit, which the
/// returned sweep verifies exhaustively.
pub fn help_sparse(cfg: &SyndromeConfig) -> Result<Help, LocatorError> {
    let f = &cfg.field;
    let n = cfg.n();
    if cfg.roots.alpha != 1 {
        return Err(LocatorError::NotFullLength { n, alpha: cfg.roots.alpha });
    }
    let half = ((n - 1) / 2) as u64;
    let l = cfg.l;
    let support: Vec<Term> = (1..=half)
        .map(|i| {
            let e1 = (n as i64 + 1 - (l as i64) * (i as i64 - 1)).rem_euclid(n as i64) as u32;
            let e2 = ((i - 1) % half) as u32;
            Term::new(vec![e1, e2])
        })
        .collect();
    for i in 0..support.len() {
        for j in i + 1..support.len() {
            if support[i] == support[j] {
                return Err(LocatorError::SupportCollision(i + 1, j + 1));
            }
        }
    }
    let anchors: Vec<Vec<FieldElem>> = (0..half)
        .map(|j| {
            let u = f.add(FieldElem::ONE, f.alpha_pow(2 * j + 1));
            let v = f.add(FieldElem::ONE, f.alpha_pow(l * (2 * j + 1)));
            vec![u, v]
        })
        .collect();
    let pts = PointSet::new(VarOrder::new(vec!["x1", "x2"]).unwrap(), anchors)?;
    let values = vec![FieldElem::ONE; half as usize];
    let tail = interpolate(f, &pts, &values, &support)?;
    let mut poly = tail.extend_arity(4);
    poly.add_term(f, Term::var_pow(4, 2, 1), f.one());
    let mut help = Help { poly, sparse: true, sweep: SweepSummary { checked: 0, failures: 0 } };
    help.sweep = help_sweep(cfg, &help);
    Ok(help)
}

/// General-length HELP: interpolate the designated root c over the projected
/// odd-gap points, supported on the projection's own escalier.
pub fn help_general(cfg: &SyndromeConfig, z2: &PointSet<Field>) -> Result<Help, LocatorError> {
    let expected = z2_odd_gap_points(cfg);
    if z2.points() != expected.points() {
        return Err(LocatorError::OddGapMismatch);
    }
    let f = &cfg.field;
    let projected = z2.project(&[0, 1], VarOrder::new(vec!["x1", "x2"]).unwrap())?;
    let values: Vec<FieldElem> = z2.points().iter().map(|p| p[2]).collect();
    let summary = incremental_basis(f, &projected, &[&values])?;
    let mut poly = summary.interpolants[0].extend_arity(4);
    poly.add_term(f, Term::var_pow(4, 2, 1), f.one());
    let mut help = Help { poly, sparse: false, sweep: SweepSummary { checked: 0, failures: 0 } };
    help.sweep = help_sweep(cfg, &help);
    Ok(help)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2m::Field;
    use crate::variety::base_structures;

    fn cfg(m: u32, n: u32, l: u64) -> SyndromeConfig {
        SyndromeConfig::new(Field::new(m, None).unwrap(), n, l).unwrap()
    }

    #[test]
    fn sparse_help_support_n7() {
        let cfg = cfg(3, 7, 3);
        let h = help_sparse(&cfg).unwrap();
        assert!(h.sparse);
        assert_eq!(h.sweep, SweepSummary { checked: 21, failures: 0 });
        let mut exps: Vec<Vec<u32>> = h
            .poly
            .iter()
            .filter(|(t, _)| t.exps()[2] == 0)
            .map(|(t, _)| t.exps().to_vec())
            .collect();
        exps.sort();
        // support x1^{(n+1-3(i-1)) mod 7} x2^{i-1}: (1,0), (5,1), (2,2)
        assert_eq!(exps, vec![vec![1, 0, 0, 0], vec![2, 2, 0, 0], vec![5, 1, 0, 0]]);
    }

    #[test]
    fn sparse_help_n15_sweep() {
        let cfg = cfg(4, 15, 3);
        let h = help_sparse(&cfg).unwrap();
        assert_eq!(h.sweep, SweepSummary { checked: 105, failures: 0 });
        // 7 coefficients
        assert_eq!(h.poly.num_terms() - 1, 7);
    }

    #[test]
    fn sparse_help_needs_full_length() {
        let cfg = cfg(4, 5, 3);
        assert!(matches!(help_sparse(&cfg), Err(LocatorError::NotFullLength { n: 5, alpha: 3 })));
    }

    #[test]
    fn general_help_small() {
        let cfg = cfg(4, 5, 3);
        let z2 = z2_odd_gap_points(&cfg);
        let h = help_general(&cfg, &z2).unwrap();
        assert_eq!(h.sweep, SweepSummary { checked: 10, failures: 0 });
        // tail lives on the escalier of the 10 projected points
        let f = &cfg.field;
        let projected = z2.project(&[0, 1], VarOrder::new(vec!["x1", "x2"]).unwrap()).unwrap();
        let esc = crate::pointideal::escalier_of_points(f, &projected).unwrap();
        assert_eq!(esc.len(), 10);
        for (t, _) in h.poly.iter() {
            if t.exps()[2] == 0 {
                assert!(esc.contains(&Term::new(t.exps()[..2].to_vec())));
            }
        }
    }

    #[test]
    fn general_help_degenerate_n3() {
        // smallest case: n = 3 inside GF(4)
        let cfg = cfg(2, 3, 5); // l = 5 is odd and 5 mod 3 = 2
        let z2 = z2_odd_gap_points(&cfg);
        let h = help_general(&cfg, &z2).unwrap();
        assert_eq!(h.sweep, SweepSummary { checked: 3, failures: 0 });
    }

    #[test]
    fn sparse_coefficients_are_scale_invariant() {
        // solving the anchor system on any c-scaled orbit copy returns the
        // same coefficients; this is what makes one orbit sufficient
        let cfg = cfg(4, 15, 3);
        let f = &cfg.field;
        let h = help_sparse(&cfg).unwrap();
        let support: Vec<Term> = h
            .poly
            .iter()
            .filter(|(t, _)| t.exps()[2] == 0)
            .map(|(t, _)| Term::new(t.exps()[..2].to_vec()))
            .collect();
        for k in [2u64, 9] {
            let c = f.alpha_pow(k);
            let cl = f.pow_elem(c, 3);
            let anchors: Vec<Vec<FieldElem>> = (0..7)
                .map(|j| {
                    let u = f.add(FieldElem::ONE, f.alpha_pow(2 * j + 1));
                    let v = f.add(FieldElem::ONE, f.alpha_pow(3 * (2 * j + 1)));
                    vec![f.mul(c, u), f.mul(cl, v)]
                })
                .collect();
            let pts = PointSet::new(VarOrder::new(vec!["x1", "x2"]).unwrap(), anchors).unwrap();
            let scaled = interpolate(f, &pts, &vec![c; 7], &support).unwrap();
            for (t, &co) in scaled.iter() {
                assert_eq!(h.poly.coeff(&t.extend_arity(4)), Some(co));
            }
        }
    }

    #[test]
    fn general_matches_sparse_on_values() {
        let cfg = cfg(3, 7, 3);
        let hs = help_sparse(&cfg).unwrap();
        let hg = help_general(&cfg, &z2_odd_gap_points(&cfg)).unwrap();
        let f = &cfg.field;
        for i in 1..=3u64 {
            for k in 0..7u64 {
                let c = cfg.roots.b_pow(f, k);
                let d = f.mul(c, cfg.roots.b_pow(f, 2 * i - 1));
                let (s1, s2) = cfg.syndrome_of_pair(c, d);
                assert_eq!(hs.designated_root(f, s1, s2), hg.designated_root(f, s1, s2));
            }
        }
    }

    #[test]
    fn gelp_examples_n15() {
        let cfg = cfg(4, 15, 3);
        let base = base_structures(&cfg).unwrap();
        let gelp = gelp_interpolate(&cfg, &base).unwrap();
        let f = &cfg.field;
        // zero-error syndrome is outside the two-variety contract, but the
        // single-error and double-error examples must hold on Z_2's closure:
        // errors {b^2, b^7}: syndrome (b^2 + b^7, 0)
        let (c, d) = (f.alpha_pow(2), f.alpha_pow(7));
        let (s1, s2) = cfg.syndrome_of_pair(c, d);
        assert!(s2.is_zero());
        let (r1, r2) = locate_roots(&cfg, &gelp, s1, s2).unwrap();
        assert!((r1, r2) == (c, d) || (r1, r2) == (d, c));
    }

    #[test]
    fn gelp_plus_covers_weights_0_to_2() {
        let cfg = cfg(3, 7, 3);
        let base = base_structures(&cfg).unwrap();
        let plus = crate::variety::derive_structures(VarietyKind::Plus, &base, &cfg).unwrap();
        let gelp = gelp_interpolate(&cfg, &plus).unwrap();
        let sweep = gelp_root_sweep(&cfg, &gelp);
        assert_eq!(sweep.failures, 0);
        // single error c = b^5: roots {0, b^5}
        let f = &cfg.field;
        let c = f.alpha_pow(5);
        let (s1, s2) = cfg.syndrome_of_pair(c, FieldElem::ZERO);
        let (r1, r2) = locate_roots(&cfg, &gelp, s1, s2).unwrap();
        assert!((r1, r2) == (FieldElem::ZERO, c) || (r1, r2) == (c, FieldElem::ZERO));
        // zero syndrome: double root at zero
        let (r1, r2) = locate_roots(&cfg, &gelp, FieldElem::ZERO, FieldElem::ZERO).unwrap();
        assert_eq!((r1, r2), (FieldElem::ZERO, FieldElem::ZERO));
        // a non-image syndrome has no split pair
        let bad = (0..7)
            .flat_map(|i| (0..7).map(move |j| (i, j)))
            .map(|(i, j)| (f.alpha_pow(i), f.alpha_pow(j)))
            .find(|&(s1, s2)| {
                cfg.roots.sn().iter().all(|&c| {
                    cfg.roots.sn().iter().all(|&d| cfg.syndrome_of_pair(c, d) != (s1, s2))
                })
            });
        if let Some((s1, s2)) = bad {
            assert!(matches!(
                locate_roots(&cfg, &gelp, s1, s2),
                Err(LocatorError::NotASplitPair { .. })
            ));
        }
    }
}
