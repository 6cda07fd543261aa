//! Terms, the lexicographical order, order ideals (escaliers) and minimal
//! bases of their complement semigroup ideals.
//!
//! The variable list is ordered smallest first, so lex comparison scans the
//! exponent vector from the last position down. `Ord` on [`Term`] *is* the
//! lex term order; `BTreeMap<Term, _>` keyed polynomials therefore iterate in
//! increasing lex order and the leading term is the last key.

use std::cmp::Ordering;
use std::collections::HashSet;

use thiserror::Error;

/// Hard cap on the number of variables; keeps terms inline and copyable.
/// The syndrome work needs four, Macaulay examples two or three.
pub const MAX_VARS: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MonomialError {
    #[error("variable lists must be nonempty, duplicate-free and at most {MAX_VARS} long")]
    BadVarOrder,
    #[error("terms have mismatched variable counts ({0} vs {1})")]
    VarOrderMismatch(usize, usize),
    #[error("no generator is a pure power of variable {0}; ideal is not 0-dimensional")]
    NotZeroDimensional(usize),
    #[error("not an order ideal: {divisor:?} divides {term:?} but is missing")]
    NotOrderIdeal { divisor: Term, term: Term },
}

/// Ordered variable names, smallest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarOrder {
    names: Vec<String>,
}

impl VarOrder {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<VarOrder, MonomialError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let uniq: HashSet<&String> = names.iter().collect();
        if names.is_empty() || names.len() > MAX_VARS || uniq.len() != names.len() {
            return Err(MonomialError::BadVarOrder);
        }
        Ok(VarOrder { names })
    }

    /// x1 < x2 < z1 < z2, the order used for all syndrome varieties.
    pub fn syndrome() -> VarOrder {
        VarOrder::new(vec!["x1", "x2", "z1", "z2"]).unwrap()
    }

    /// z1 < z2, the order for the two-variable error varieties.
    pub fn error_pair() -> VarOrder {
        VarOrder::new(vec!["z1", "z2"]).unwrap()
    }

    /// x1 < ... < xk.
    pub fn numbered(k: usize) -> VarOrder {
        VarOrder::new((1..=k).map(|i| format!("x{i}")).collect()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// A term (power product), stored as its exponent vector inline (at most
/// [`MAX_VARS`] variables, so terms are `Copy` and never touch the heap).
/// Unused slots stay zero, which keeps derived equality and hashing honest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Term {
    len: u8,
    exps: [u32; MAX_VARS],
}

impl Term {
    pub fn new(exps: Vec<u32>) -> Term {
        Term::from_slice(&exps)
    }
    pub fn from_slice(src: &[u32]) -> Term {
        assert!(src.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut exps = [0u32; MAX_VARS];
        exps[..src.len()].copy_from_slice(src);
        Term { len: src.len() as u8, exps }
    }
    pub fn one(nvars: usize) -> Term {
        assert!(nvars <= MAX_VARS);
        Term { len: nvars as u8, exps: [0; MAX_VARS] }
    }
    /// x_var^e (0-based variable index).
    pub fn var_pow(nvars: usize, var: usize, e: u32) -> Term {
        let mut t = Term::one(nvars);
        t.exps[var] = e;
        t
    }
    pub fn exps(&self) -> &[u32] {
        &self.exps[..self.len as usize]
    }
    pub fn arity(&self) -> usize {
        self.len as usize
    }
    pub fn degree(&self) -> u64 {
        self.exps().iter().map(|&e| e as u64).sum()
    }
    pub fn is_one(&self) -> bool {
        self.exps().iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Term) -> Term {
        debug_assert_eq!(self.arity(), other.arity());
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(&other.exps) {
            *a += b;
        }
        out
    }
    pub fn mul_var(&self, var: usize) -> Term {
        let mut out = *self;
        out.exps[var] += 1;
        out
    }
    pub fn divides(&self, other: &Term) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }
    pub fn div(&self, other: &Term) -> Option<Term> {
        if !other.divides(self) {
            return None;
        }
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(&other.exps) {
            *a -= b;
        }
        Some(out)
    }
    /// Quotient by one variable, if the exponent is positive.
    pub fn div_var(&self, var: usize) -> Option<Term> {
        if self.exps[var] == 0 {
            return None;
        }
        let mut out = *self;
        out.exps[var] -= 1;
        Some(out)
    }

    /// Extend to a larger variable list (new trailing exponents zero).
    pub fn extend_arity(&self, nvars: usize) -> Term {
        assert!(nvars <= MAX_VARS && nvars >= self.arity());
        let mut out = *self;
        out.len = nvars as u8;
        out
    }

    pub fn format(&self, order: &VarOrder) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    order.names()[i].clone()
                } else {
                    format!("{}^{}", order.names()[i], e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Term {
    /// Lexicographic order induced by x1 < ... < xn: the last differing
    /// exponent decides.
    fn cmp(&self, other: &Term) -> Ordering {
        debug_assert_eq!(self.arity(), other.arity());
        for (a, b) in self.exps.iter().rev().zip(other.exps.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Term) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lex comparison; errors when the terms live over different variable lists.
pub fn lex_cmp(t1: &Term, t2: &Term) -> Result<Ordering, MonomialError> {
    if t1.arity() != t2.arity() {
        return Err(MonomialError::VarOrderMismatch(t1.arity(), t2.arity()));
    }
    Ok(t1.cmp(t2))
}

/// Degree-compatible spot order (degrevlex): total degree first, ties broken
/// reverse-lexicographically on the smallest variable.
pub fn degrevlex_cmp(t1: &Term, t2: &Term) -> Ordering {
    debug_assert_eq!(t1.arity(), t2.arity());
    t1.degree().cmp(&t2.degree()).then_with(|| {
        for (a, b) in t1.exps().iter().zip(t2.exps()) {
            match b.cmp(a) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    })
}

/// A finite order ideal of terms, paired with the minimal generating set of
/// its complement. Both lists are kept sorted in increasing lex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Escalier {
    nvars: usize,
    terms: Vec<Term>,
    set: HashSet<Term>,
    minimal_basis: Vec<Term>,
}

impl Escalier {
    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
    /// Terms in increasing lex order.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }
    pub fn minimal_basis(&self) -> &[Term] {
        &self.minimal_basis
    }
    pub fn contains(&self, t: &Term) -> bool {
        self.set.contains(t)
    }
    pub fn term_set(&self) -> &HashSet<Term> {
        &self.set
    }
}

/// Minimal elements (under divisibility) of the complement of an order ideal
/// given as a set. Candidates are 1 and the one-variable shifts of members.
fn complement_minimal_basis(nvars: usize, set: &HashSet<Term>) -> Vec<Term> {
    let mut out: HashSet<Term> = HashSet::new();
    let minimal = |t: &Term| -> bool {
        (0..nvars).all(|v| match t.div_var(v) {
            None => true,
            Some(d) => set.contains(&d),
        })
    };
    let one = Term::one(nvars);
    if !set.contains(&one) {
        out.insert(one);
    } else {
        for t in set {
            for v in 0..nvars {
                let c = t.mul_var(v);
                if !set.contains(&c) && minimal(&c) {
                    out.insert(c);
                }
            }
        }
    }
    let mut out: Vec<Term> = out.into_iter().collect();
    out.sort();
    out
}

/// Escalier of the 0-dimensional monomial ideal generated by `gens`:
/// all terms divisible by no generator.
pub fn escalier_from_minimal_basis(gens: &[Term], nvars: usize) -> Result<Escalier, MonomialError> {
    for g in gens {
        if g.arity() != nvars {
            return Err(MonomialError::VarOrderMismatch(g.arity(), nvars));
        }
    }
    // 0-dimensionality: every variable needs a pure power among the
    // generators (1 counts as a pure power of each).
    let mut bounds = vec![u32::MAX; nvars];
    for g in gens {
        let support: Vec<usize> = (0..nvars).filter(|&v| g.exps()[v] > 0).collect();
        match support.len() {
            0 => bounds.iter_mut().for_each(|b| *b = 0),
            1 => {
                let v = support[0];
                bounds[v] = bounds[v].min(g.exps()[v]);
            }
            _ => {}
        }
    }
    if let Some(v) = (0..nvars).find(|&v| bounds[v] == u32::MAX) {
        return Err(MonomialError::NotZeroDimensional(v));
    }
    let mut terms = Vec::new();
    let mut cursor = vec![0u32; nvars];
    'outer: loop {
        let t = Term::new(cursor.clone());
        if !gens.iter().any(|g| g.divides(&t)) {
            terms.push(t);
        }
        for v in 0..nvars {
            cursor[v] += 1;
            if cursor[v] < bounds[v] {
                continue 'outer;
            }
            cursor[v] = 0;
        }
        break;
    }
    terms.sort();
    let set: HashSet<Term> = terms.iter().cloned().collect();
    let minimal_basis = complement_minimal_basis(nvars, &set);
    Ok(Escalier { nvars, terms, set, minimal_basis })
}

/// Wrap a finite term set as an escalier, checking the order-ideal property
/// and computing the minimal basis of the complement.
pub fn minimal_basis_from_escalier(terms: &[Term], nvars: usize) -> Result<Escalier, MonomialError> {
    let set: HashSet<Term> = terms.iter().cloned().collect();
    for t in &set {
        if t.arity() != nvars {
            return Err(MonomialError::VarOrderMismatch(t.arity(), nvars));
        }
        for v in 0..nvars {
            if let Some(d) = t.div_var(v) {
                if !set.contains(&d) {
                    return Err(MonomialError::NotOrderIdeal { divisor: d, term: *t });
                }
            }
        }
    }
    let mut terms: Vec<Term> = set.iter().cloned().collect();
    terms.sort();
    let minimal_basis = complement_minimal_basis(nvars, &set);
    Ok(Escalier { nvars, terms, set, minimal_basis })
}
