//! Sparse Laurent polynomials with exact arbitrary-precision coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector, so iteration order —
//! and the canonical text rendering — is the lexicographic order on exponent
//! vectors.  Zero coefficients are pruned on every operation: a coefficient
//! is either absent or nonzero, and equality of polynomials is equality of
//! the underlying maps.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::error::KernelError;
use super::vars::{ExpVec, VarSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: VarSet,
    terms: BTreeMap<ExpVec, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &VarSet) -> Self {
        LaurentPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VarSet, c: i64) -> Self {
        let mut p = Self::zero(vars);
        p.insert_term(ExpVec::zeros(vars.len()), BigInt::from(c));
        p
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, 1)
    }

    /// Single term `coeff * v1^e1 * ... * vk^ek`.
    pub fn monomial(vars: &VarSet, exps: &[i32], coeff: i64) -> Self {
        assert_eq!(
            exps.len(),
            vars.len(),
            "exponent vector length must match context"
        );
        let mut p = Self::zero(vars);
        p.insert_term(ExpVec::from_slice(exps), BigInt::from(coeff));
        p
    }

    /// The variable `vars[idx]` as a polynomial.
    pub fn var(vars: &VarSet, idx: usize) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        Self::monomial(vars, &exps, 1)
    }

    /// Build from a term list; repeated exponent vectors are collected.
    pub fn from_terms(vars: &VarSet, terms: &[(&[i32], i64)]) -> Self {
        let mut p = Self::zero(vars);
        for (exps, coeff) in terms {
            assert_eq!(
                exps.len(),
                vars.len(),
                "exponent vector length must match context"
            );
            p.insert_term(ExpVec::from_slice(exps), BigInt::from(*coeff));
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient at an exponent vector (zero if absent).
    pub fn coeff(&self, exps: &[i32]) -> BigInt {
        self.terms
            .get(&ExpVec::from_slice(exps))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Add `c` to the coefficient at `e`, pruning zeros.
    pub(crate) fn insert_term(&mut self, e: ExpVec, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_context(&self, rhs: &LaurentPoly) -> Result<(), KernelError> {
        if self.vars != rhs.vars {
            return Err(KernelError::ContextMismatch {
                left: self.vars.describe(),
                right: rhs.vars.describe(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &LaurentPoly) -> Result<LaurentPoly, KernelError> {
        self.check_context(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &LaurentPoly) -> Result<LaurentPoly, KernelError> {
        self.check_context(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, rhs: &LaurentPoly) -> Result<LaurentPoly, KernelError> {
        self.check_context(rhs)?;
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.insert_term(ea.add(eb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = Self::zero(&self.vars);
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    pub fn scale_i64(&self, c: i64) -> LaurentPoly {
        self.scale(&BigInt::from(c))
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut out = Self::one(&self.vars);
        for _ in 0..k {
            out = out.try_mul(self).expect("same context");
        }
        out
    }

    /// Formal partial derivative with respect to `vars[var]`.
    /// Works on negative exponents too: d/dx x^-1 = -x^-2.
    pub fn diff(&self, var: usize) -> LaurentPoly {
        assert!(var < self.vars.len(), "variable index out of range");
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let k = e.0[var];
            if k == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne.0[var] = k - 1;
            out.insert_term(ne, c * BigInt::from(k));
        }
        out
    }

    /// Multiply by the monomial with exponent vector `by`.
    pub fn shift(&self, by: &[i32]) -> LaurentPoly {
        assert_eq!(by.len(), self.vars.len());
        let by = ExpVec::from_slice(by);
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            out.terms.insert(e.add(&by), c.clone());
        }
        out
    }

    pub fn min_exp(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e.0[var]).min()
    }

    pub fn max_exp(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e.0[var]).max()
    }

    /// Replace `vars[var]` by an integer.  Requires nonnegative exponents in
    /// that variable (no exact division of points is attempted).
    pub fn substitute_int(&self, var: usize, value: &BigInt) -> Result<LaurentPoly, KernelError> {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let k = e.0[var];
            if k < 0 {
                return Err(KernelError::Domain(format!(
                    "cannot substitute an integer into {} with negative exponent {}",
                    self.vars.name(var),
                    k
                )));
            }
            let mut ne = e.clone();
            ne.0[var] = 0;
            out.insert_term(ne, c * value.pow(k as u32));
        }
        Ok(out)
    }

    /// Replace `vars[var]` by a polynomial in the same context.  Requires
    /// nonnegative exponents of `var` in `self`, and `repl` must not involve
    /// `var` itself.
    pub fn substitute(&self, var: usize, repl: &LaurentPoly) -> Result<LaurentPoly, KernelError> {
        self.check_context(repl)?;
        if repl.terms.keys().any(|e| e.0[var] != 0) {
            return Err(KernelError::Domain(format!(
                "replacement polynomial must not involve {}",
                self.vars.name(var)
            )));
        }
        let max = self.max_exp(var).unwrap_or(0);
        if self.min_exp(var).unwrap_or(0) < 0 {
            return Err(KernelError::Domain(format!(
                "cannot substitute into negative powers of {}",
                self.vars.name(var)
            )));
        }
        // Memoized powers of the replacement.
        let mut powers: Vec<LaurentPoly> = Vec::with_capacity(max.max(0) as usize + 1);
        powers.push(Self::one(&self.vars));
        for k in 1..=max.max(0) {
            let next = powers[(k - 1) as usize].try_mul(repl)?;
            powers.push(next);
        }
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let k = e.0[var];
            let mut base = e.clone();
            base.0[var] = 0;
            for (pe, pc) in &powers[k as usize].terms {
                out.insert_term(base.add(pe), c * pc);
            }
        }
        Ok(out)
    }

    /// Apply a linear map to every exponent vector (group actions on monomials).
    /// The map must be injective on the support for the result to be faithful;
    /// colliding images are collected additively.
    pub fn map_exponents(&self, f: impl Fn(&[i32]) -> Vec<i32>) -> LaurentPoly {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let ne = f(&e.0);
            assert_eq!(ne.len(), self.vars.len());
            out.insert_term(ExpVec(ne), c.clone());
        }
        out
    }

    /// Narrow to a sub-context: keep the variables at positions `keep` (in
    /// that order) under the names of `new_vars`.  Every dropped variable
    /// must appear with exponent zero throughout.
    pub fn project(&self, keep: &[usize], new_vars: &VarSet) -> Result<LaurentPoly, KernelError> {
        assert_eq!(keep.len(), new_vars.len());
        let mut out = LaurentPoly::zero(new_vars);
        for (e, c) in &self.terms {
            for v in 0..self.vars.len() {
                if !keep.contains(&v) && e.0[v] != 0 {
                    return Err(KernelError::Domain(format!(
                        "cannot project out {}: it appears with exponent {}",
                        self.vars.name(v),
                        e.0[v]
                    )));
                }
            }
            let ne: Vec<i32> = keep.iter().map(|&v| e.0[v]).collect();
            out.insert_term(ExpVec(ne), c.clone());
        }
        Ok(out)
    }

    /// Sum of all coefficients, i.e. the evaluation at all variables = 1.
    pub fn sum_coeffs(&self) -> BigInt {
        let mut s = BigInt::zero();
        for c in self.terms.values() {
            s += c;
        }
        s
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("context mismatch in +")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("context mismatch in -")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("context mismatch in *")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&BigInt::from(-1))
    }
}

/// Canonical text rendering: terms in lexicographic exponent order, each as
/// `<±coeff>*v1^e1*v2^e2` with unit coefficients and zero exponents omitted,
/// e.g. `-3*t1^2*t2`, `x2^-1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = self.render_monomial(e);
            let mag = c.abs();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl LaurentPoly {
    fn render_monomial(&self, e: &ExpVec) -> String {
        let mut parts = Vec::new();
        for (i, &k) in e.0.iter().enumerate() {
            if k == 0 {
                continue;
            }
            if k == 1 {
                parts.push(self.vars.name(i).to_string());
            } else {
                parts.push(format!("{}^{}", self.vars.name(i), k));
            }
        }
        parts.join("*")
    }
}
