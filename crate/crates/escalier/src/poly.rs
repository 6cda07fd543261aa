//! Sparse multivariate polynomials with exact coefficients over a [`FieldOps`]
//! field. Terms are kept in a sorted vector whose order *is* the lex term
//! order, so iteration is lex-increasing, the leading term is the last entry,
//! and linear combinations are cache-friendly merges.

use crate::field::FieldOps;
use crate::monomial::{Escalier, Term};

pub struct SparsePoly<F: FieldOps> {
    nvars: usize,
    /// (term, coeff) sorted by increasing lex term, no zero coefficients.
    terms: Vec<(Term, F::Elem)>,
}

impl<F: FieldOps> Clone for SparsePoly<F> {
    fn clone(&self) -> Self {
        SparsePoly { nvars: self.nvars, terms: self.terms.clone() }
    }
}

impl<F: FieldOps> PartialEq for SparsePoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl<F: FieldOps> Eq for SparsePoly<F> {}

impl<F: FieldOps> std::fmt::Debug for SparsePoly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(t, c)| (t.exps(), c))).finish()
    }
}

impl<F: FieldOps> SparsePoly<F> {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: Vec::new() }
    }

    pub fn constant(field: &F, nvars: usize, c: F::Elem) -> Self {
        let mut p = SparsePoly::zero(nvars);
        p.add_term(field, Term::one(nvars), c);
        p
    }

    pub fn one(field: &F, nvars: usize) -> Self {
        SparsePoly::constant(field, nvars, field.one())
    }

    pub fn from_term(field: &F, t: Term, c: F::Elem) -> Self {
        let mut p = SparsePoly::zero(t.arity());
        p.add_term(field, t, c);
        p
    }

    /// The monomial x_var with coefficient 1.
    pub fn var(field: &F, nvars: usize, var: usize) -> Self {
        SparsePoly::from_term(field, Term::var_pow(nvars, var, 1), field.one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
    pub fn coeff(&self, t: &Term) -> Option<F::Elem> {
        self.terms
            .binary_search_by(|(s, _)| s.cmp(t))
            .ok()
            .map(|i| self.terms[i].1)
    }
    /// Iterate (term, coeff) in increasing lex order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Term, &F::Elem)> {
        self.terms.iter().map(|(t, c)| (t, c))
    }
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.last().map(|(t, _)| t)
    }
    pub fn leading_coeff(&self) -> Option<F::Elem> {
        self.terms.last().map(|(_, c)| *c)
    }

    /// Add `c * t` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, field: &F, t: Term, c: F::Elem) {
        debug_assert_eq!(t.arity(), self.nvars);
        if field.is_zero(c) {
            return;
        }
        match self.terms.binary_search_by(|(s, _)| s.cmp(&t)) {
            Ok(i) => {
                let s = field.add(self.terms[i].1, c);
                if field.is_zero(s) {
                    self.terms.remove(i);
                } else {
                    self.terms[i].1 = s;
                }
            }
            Err(i) => self.terms.insert(i, (t, c)),
        }
    }

    /// self += c * other, as one merge pass.
    pub fn add_scaled_assign(&mut self, field: &F, other: &SparsePoly<F>, c: F::Elem) {
        if field.is_zero(c) || other.is_zero() {
            return;
        }
        let mut merged: Vec<(Term, F::Elem)> =
            Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut mine = std::mem::take(&mut self.terms).into_iter().peekable();
        let mut theirs = other.terms.iter().peekable();
        loop {
            match (mine.peek(), theirs.peek()) {
                (Some((a, _)), Some((b, _))) => match a.cmp(b) {
                    std::cmp::Ordering::Less => merged.push(mine.next().unwrap()),
                    std::cmp::Ordering::Greater => {
                        let (t, oc) = theirs.next().unwrap();
                        merged.push((*t, field.mul(c, *oc)));
                    }
                    std::cmp::Ordering::Equal => {
                        let (t, mc) = mine.next().unwrap();
                        let (_, oc) = theirs.next().unwrap();
                        let s = field.add(mc, field.mul(c, *oc));
                        if !field.is_zero(s) {
                            merged.push((t, s));
                        }
                    }
                },
                (Some(_), None) => merged.push(mine.next().unwrap()),
                (None, Some(_)) => {
                    let (t, oc) = theirs.next().unwrap();
                    merged.push((*t, field.mul(c, *oc)));
                }
                (None, None) => break,
            }
        }
        self.terms = merged;
    }

    /// self -= c * other.
    pub fn sub_scaled_assign(&mut self, field: &F, other: &SparsePoly<F>, c: F::Elem) {
        self.add_scaled_assign(field, other, field.neg(c));
    }

    pub fn add(&self, field: &F, other: &SparsePoly<F>) -> SparsePoly<F> {
        let mut out = self.clone();
        out.add_scaled_assign(field, other, field.one());
        out
    }

    pub fn sub(&self, field: &F, other: &SparsePoly<F>) -> SparsePoly<F> {
        let mut out = self.clone();
        out.sub_scaled_assign(field, other, field.one());
        out
    }

    pub fn scale(&self, field: &F, c: F::Elem) -> SparsePoly<F> {
        if field.is_zero(c) {
            return SparsePoly::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(t, x)| (*t, field.mul(c, *x))).collect();
        SparsePoly { nvars: self.nvars, terms }
    }

    /// Normalize to leading coefficient 1 (no-op on zero).
    pub fn monic(&self, field: &F) -> SparsePoly<F> {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(field, field.inv(lc).expect("nonzero leading coeff")),
        }
    }

    /// self * (c * t). Multiplying by a fixed term preserves the lex order,
    /// so the result is built in one pass.
    pub fn mul_term(&self, field: &F, t: &Term, c: F::Elem) -> SparsePoly<F> {
        if field.is_zero(c) {
            return SparsePoly::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(s, x)| (s.mul(t), field.mul(*x, c)))
            .collect();
        SparsePoly { nvars: self.nvars, terms }
    }

    pub fn mul(&self, field: &F, other: &SparsePoly<F>) -> SparsePoly<F> {
        let mut out = SparsePoly::zero(self.nvars);
        for (t, &c) in other.iter() {
            out.add_scaled_assign(field, &self.mul_term(field, t, c), field.one());
        }
        out
    }

    pub fn pow(&self, field: &F, k: u32) -> SparsePoly<F> {
        let mut acc = SparsePoly::one(field, self.nvars);
        for _ in 0..k {
            acc = acc.mul(field, self);
        }
        acc
    }

    pub fn eval(&self, field: &F, point: &[F::Elem]) -> F::Elem {
        debug_assert_eq!(point.len(), self.nvars);
        let mut acc = field.zero();
        for (t, c) in &self.terms {
            acc = field.add(acc, field.mul(*c, field.eval_term(t.exps(), point)));
        }
        acc
    }

    /// Leading term under a caller-supplied order.
    pub fn leading_term_by<C: Fn(&Term, &Term) -> std::cmp::Ordering>(&self, cmp: C) -> Option<&Term> {
        self.terms.iter().map(|(t, _)| t).max_by(|a, b| cmp(a, b))
    }

    /// True when every term lies in the escalier.
    pub fn supported_on(&self, esc: &Escalier) -> bool {
        self.terms.iter().all(|(t, _)| esc.contains(t))
    }

    /// Zero-pad the exponent vectors up to `nvars` trailing variables.
    pub fn extend_arity(&self, nvars: usize) -> SparsePoly<F> {
        let terms = self.terms.iter().map(|(t, c)| (t.extend_arity(nvars), *c)).collect();
        SparsePoly { nvars, terms }
    }

    pub fn format(&self, _field: &F, order: &crate::monomial::VarOrder, fmt_coeff: impl Fn(F::Elem) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .rev()
            .map(|(t, c)| {
                let cs = fmt_coeff(*c);
                if t.is_one() {
                    cs
                } else if cs == "1" || cs == "a^0" {
                    t.format(order)
                } else {
                    format!("{}*{}", cs, t.format(order))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Full normal form of `f` modulo `basis`: repeatedly cancels the largest
/// term divisible by some basis leading term. Terminates because lex is a
/// well order. Basis elements must be nonzero.
pub fn normal_form<F: FieldOps>(field: &F, f: &SparsePoly<F>, basis: &[SparsePoly<F>]) -> SparsePoly<F> {
    let lts: Vec<(&Term, F::Elem)> = basis
        .iter()
        .map(|g| (g.leading_term().expect("nonzero basis element"), g.leading_coeff().unwrap()))
        .collect();
    let mut rest = f.clone();
    let mut out = SparsePoly::zero(f.nvars());
    while let Some((t, c)) = rest.terms.last().cloned() {
        let mut reduced = false;
        for (i, (lt, lc)) in lts.iter().enumerate() {
            if lt.divides(&t) {
                let q = t.div(lt).unwrap();
                let scale = field.mul(c, field.inv(*lc).unwrap());
                let sub = basis[i].mul_term(field, &q, scale);
                rest.sub_scaled_assign(field, &sub, field.one());
                reduced = true;
                break;
            }
        }
        if !reduced {
            rest.terms.pop();
            out.add_term(field, t, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::gf2m::Field;

    #[test]
    fn arithmetic_over_gf8() {
        let f = Field::new(3, None).unwrap();
        let x = SparsePoly::var(&f, 2, 0);
        let y = SparsePoly::var(&f, 2, 1);
        let s = x.add(&f, &y);
        // (x+y)^2 = x^2 + y^2 in characteristic 2
        let sq = s.mul(&f, &s);
        let expect = x.mul(&f, &x).add(&f, &y.mul(&f, &y));
        assert_eq!(sq, expect);
        // cancellation drops entries
        assert!(s.sub(&f, &s).is_zero());
        for c in f.all_elems() {
            for d in f.all_elems() {
                assert_eq!(s.eval(&f, &[c, d]), f.add(c, d));
            }
        }
    }

    #[test]
    fn merge_axpy_matches_term_by_term() {
        let f = PrimeField::new(7).unwrap();
        let mut a = SparsePoly::zero(2);
        let mut b = SparsePoly::zero(2);
        for i in 0..6u32 {
            a.add_term(&f, Term::new(vec![i, i % 3]), (i as u64 + 1) % 7);
            b.add_term(&f, Term::new(vec![i % 4, i]), (2 * i as u64 + 3) % 7);
        }
        let mut merged = a.clone();
        merged.add_scaled_assign(&f, &b, 5);
        let mut slow = a.clone();
        for (t, &c) in b.iter() {
            slow.add_term(&f, *t, f.mul(5, c));
        }
        assert_eq!(merged, slow);
    }

    #[test]
    fn normal_form_reduces() {
        let f = PrimeField::new(5).unwrap();
        // f = x^3 mod {x^2 - 2} -> 2x
        let x3 = SparsePoly::from_term(&f, Term::var_pow(1, 0, 3), 1);
        let mut g = SparsePoly::from_term(&f, Term::var_pow(1, 0, 2), 1);
        g.add_term(&f, Term::one(1), f.neg(2));
        let nf = normal_form(&f, &x3, &[g]);
        let mut want = SparsePoly::zero(1);
        want.add_term(&f, Term::var_pow(1, 0, 1), 2);
        assert_eq!(nf, want);
    }

    #[test]
    fn telescoping_identity() {
        // (z2 + z1) * sum z1^i z2^{n-1-i} = z2^n + z1^n over GF(2^m)
        let f = Field::new(3, None).unwrap();
        let n = 7u32;
        let mut sum = SparsePoly::zero(2);
        for i in 0..n {
            sum.add_term(&f, Term::new(vec![i, n - 1 - i]), f.one());
        }
        let z1 = SparsePoly::var(&f, 2, 0);
        let z2 = SparsePoly::var(&f, 2, 1);
        let lhs = z1.add(&f, &z2).mul(&f, &sum);
        let mut rhs = SparsePoly::from_term(&f, Term::new(vec![n, 0]), f.one());
        rhs.add_term(&f, Term::new(vec![0, n]), f.one());
        assert_eq!(lhs, rhs);
    }
}
