//! Truncated multivariate series on rectangular exponent boxes.
//!
//! A [`TruncSeries`] stores exact coefficients for every exponent tuple inside
//! a per-variable box `[lo_i, hi_i]`.  Coefficients outside the box are
//! *undefined*, not zero: reading one is an error.  Multiplication truncates —
//! products landing outside the box are discarded — so the caller is
//! responsible for choosing boxes on which truncation is sound (exponents that
//! only ever grow, or a window padded wider than any possible drift; the
//! generating-function expander does exactly that).

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;
use std::collections::HashMap;

use super::error::KernelError;
use super::laurent::LaurentPoly;
use super::vars::{ExpVec, VarSet};

/// Inclusive per-variable exponent bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesBox {
    lo: Vec<i32>,
    hi: Vec<i32>,
}

impl SeriesBox {
    /// Box `[0, hi_i]` in every variable (plain power-series truncation).
    pub fn nonneg(hi: &[i32]) -> Self {
        assert!(hi.iter().all(|&h| h >= 0), "box bounds must be >= 0");
        SeriesBox {
            lo: vec![0; hi.len()],
            hi: hi.to_vec(),
        }
    }

    pub fn with_ranges(ranges: &[(i32, i32)]) -> Self {
        assert!(
            ranges.iter().all(|&(l, h)| l <= h),
            "box ranges must satisfy lo <= hi"
        );
        SeriesBox {
            lo: ranges.iter().map(|r| r.0).collect(),
            hi: ranges.iter().map(|r| r.1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.lo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lo.is_empty()
    }

    pub fn lo(&self) -> &[i32] {
        &self.lo
    }

    pub fn hi(&self) -> &[i32] {
        &self.hi
    }

    pub fn contains(&self, e: &ExpVec) -> bool {
        e.0.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(&v, (&l, &h))| l <= v && v <= h)
    }
}

/// A series truncated to a box, with exact integer coefficients.
#[derive(Clone, Debug)]
pub struct TruncSeries {
    vars: VarSet,
    bounds: SeriesBox,
    coeffs: HashMap<ExpVec, BigInt>,
}

impl PartialEq for TruncSeries {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.bounds == other.bounds && self.coeffs == other.coeffs
    }
}

impl TruncSeries {
    pub fn zero(vars: &VarSet, bounds: SeriesBox) -> Self {
        assert_eq!(vars.len(), bounds.len(), "box dimension must match context");
        TruncSeries {
            vars: vars.clone(),
            bounds,
            coeffs: HashMap::new(),
        }
    }

    /// Truncate a polynomial to a box.
    pub fn from_poly(poly: &LaurentPoly, bounds: SeriesBox) -> Self {
        let mut s = Self::zero(poly.vars(), bounds);
        for (e, c) in poly.terms() {
            if s.bounds.contains(e) {
                s.coeffs.insert(e.clone(), c.clone());
            }
        }
        s
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn bounds(&self) -> &SeriesBox {
        &self.bounds
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_coeffs(&self) -> usize {
        self.coeffs.len()
    }

    pub fn support(&self) -> impl Iterator<Item = (&ExpVec, &BigInt)> {
        self.coeffs.iter()
    }

    /// Exact coefficient inside the box; an out-of-box read is an error.
    pub fn coeff(&self, exps: &[i32]) -> Result<BigInt, KernelError> {
        let e = ExpVec::from_slice(exps);
        if !self.bounds.contains(&e) {
            return Err(KernelError::OutOfBox(exps.to_vec()));
        }
        Ok(self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero))
    }

    /// Smallest and largest exponent of `var` present in the support.
    pub fn support_range(&self, var: usize) -> Option<(i32, i32)> {
        let mut it = self.coeffs.keys().map(|e| e.0[var]);
        let first = it.next()?;
        let mut lo = first;
        let mut hi = first;
        for v in it {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        Some((lo, hi))
    }

    pub(crate) fn add_term(&mut self, e: ExpVec, c: BigInt) {
        if c.is_zero() || !self.bounds.contains(&e) {
            return;
        }
        match self.coeffs.entry(e) {
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::hash_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_series(&mut self, rhs: &TruncSeries) {
        assert_eq!(self.vars, rhs.vars, "context mismatch in series +=");
        assert_eq!(self.bounds, rhs.bounds, "series += requires a common box");
        for (e, c) in &rhs.coeffs {
            self.add_term(e.clone(), c.clone());
        }
    }

    /// Truncating product with a polynomial (out-of-box terms discarded).
    pub fn mul_poly_trunc(&self, p: &LaurentPoly) -> TruncSeries {
        assert_eq!(&self.vars, p.vars(), "context mismatch in series * poly");
        let mut out = Self::zero(&self.vars, self.bounds.clone());
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in p.terms() {
                let e = ea.add(eb);
                if out.bounds.contains(&e) {
                    out.add_term(e, ca * cb);
                }
            }
        }
        out
    }

    /// Truncating product of two series over the same box.
    pub fn mul_series_trunc(&self, rhs: &TruncSeries) -> TruncSeries {
        assert_eq!(self.vars, rhs.vars, "context mismatch in series *");
        assert_eq!(self.bounds, rhs.bounds, "series * requires a common box");
        let mut out = Self::zero(&self.vars, self.bounds.clone());
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                let e = ea.add(eb);
                if out.bounds.contains(&e) {
                    out.add_term(e, ca * cb);
                }
            }
        }
        out
    }

    /// Formal partial derivative; exponents that leave the box are dropped
    /// (their source terms have coefficient multiplied by the exponent, so a
    /// genuine drop can only happen at the lower box edge).
    pub fn diff(&self, var: usize) -> TruncSeries {
        let mut out = Self::zero(&self.vars, self.bounds.clone());
        for (e, c) in &self.coeffs {
            let k = e.0[var];
            if k == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne.0[var] = k - 1;
            if out.bounds.contains(&ne) {
                out.add_term(ne, c * BigInt::from(k));
            }
        }
        out
    }

    /// Keep only coefficients inside a (typically smaller) box.
    pub fn restrict(&self, bounds: SeriesBox) -> TruncSeries {
        assert_eq!(bounds.len(), self.vars.len());
        let mut out = Self::zero(&self.vars, bounds);
        for (e, c) in &self.coeffs {
            if out.bounds.contains(e) {
                out.coeffs.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Fix some variables to exponent values and project the rest onto a new
    /// context, returning the slice as a polynomial.
    pub fn slice_poly(&self, fixed: &[(usize, i32)], out_vars: &VarSet) -> LaurentPoly {
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|i| !fixed.iter().any(|(j, _)| j == i))
            .collect();
        assert_eq!(
            keep.len(),
            out_vars.len(),
            "output context must cover the free variables"
        );
        let mut out = LaurentPoly::zero(out_vars);
        for (e, c) in &self.coeffs {
            if fixed.iter().all(|&(i, v)| e.0[i] == v) {
                let proj: Vec<i32> = keep.iter().map(|&i| e.0[i]).collect();
                out.insert_term(ExpVec(proj), c.clone());
            }
        }
        out
    }

    /// As `slice_poly`, but keep the result as a truncated series over the
    /// projected box.
    pub fn slice_series(&self, fixed: &[(usize, i32)], out_vars: &VarSet) -> TruncSeries {
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|i| !fixed.iter().any(|(j, _)| j == i))
            .collect();
        assert_eq!(keep.len(), out_vars.len());
        let ranges: Vec<(i32, i32)> = keep
            .iter()
            .map(|&i| (self.bounds.lo[i], self.bounds.hi[i]))
            .collect();
        let mut out = Self::zero(out_vars, SeriesBox::with_ranges(&ranges));
        for (e, c) in &self.coeffs {
            if fixed.iter().all(|&(i, v)| e.0[i] == v) {
                let proj: Vec<i32> = keep.iter().map(|&i| e.0[i]).collect();
                out.coeffs.insert(ExpVec(proj), c.clone());
            }
        }
        out
    }

    /// Forget the truncation and return the stored coefficients as a polynomial.
    pub fn to_poly(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(&self.vars);
        for (e, c) in &self.coeffs {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }
}

/// Step indicator: `theta(k, u) = 1` iff `u >= 0` and `k | u`.
pub fn theta(k: i64, u: i64) -> i64 {
    assert!(k >= 1, "theta modulus must be >= 1");
    i64::from(u >= 0 && u % k == 0)
}

/// `f_s(q) = C(q+s-1, q)`, the coefficient of `x^q` in `(1-x)^-s`.
pub fn f_binom(s: u32, q: i64) -> Result<BigInt, KernelError> {
    if s == 0 {
        return Err(KernelError::Domain("f_binom requires s >= 1".into()));
    }
    if q < 0 {
        return Err(KernelError::Domain(format!(
            "f_binom requires q >= 0, got {q}"
        )));
    }
    Ok(binomial(
        BigInt::from(q + i64::from(s) - 1),
        BigInt::from(q),
    ))
}

/// One-variable expansion of `x^r / (1 - x^k)^s` through `x^order`, built
/// directly from the arithmetic progression rule: the coefficient of `x^p`
/// is `theta(k, p-r) * f_s((p-r)/k)`.
pub fn theta_f_expand(r: i64, k: i64, s: u32, order: i64) -> Result<TruncSeries, KernelError> {
    if r < 0 || order < 0 {
        return Err(KernelError::Domain(
            "theta_f_expand requires r >= 0 and order >= 0".into(),
        ));
    }
    if k < 1 || s == 0 {
        return Err(KernelError::Domain(
            "theta_f_expand requires k >= 1 and s >= 1".into(),
        ));
    }
    let vars = VarSet::new(&["x"]);
    let mut out = TruncSeries::zero(&vars, SeriesBox::nonneg(&[order as i32]));
    for p in 0..=order {
        if theta(k, p - r) == 1 {
            let c = f_binom(s, (p - r) / k)?;
            out.add_term(ExpVec(vec![p as i32]), c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_examples() {
        assert_eq!(theta(3, 0), 1);
        assert_eq!(theta(3, 6), 1);
        assert_eq!(theta(3, 5), 0);
        assert_eq!(theta(3, -3), 0);
        assert_eq!(theta(2, 0), 1);
        assert_eq!(theta(2, 7), 0);
        assert_eq!(theta(1, 4), 1);
        assert_eq!(theta(1, -1), 0);
    }

    #[test]
    fn f_binom_examples() {
        assert_eq!(f_binom(1, 7).unwrap(), BigInt::from(1));
        assert_eq!(f_binom(2, 3).unwrap(), BigInt::from(4));
        assert_eq!(f_binom(3, 2).unwrap(), BigInt::from(6));
        assert_eq!(f_binom(4, 0).unwrap(), BigInt::from(1));
        assert!(f_binom(2, -1).is_err());
        assert!(f_binom(0, 3).is_err());
    }

    #[test]
    fn theta_f_expand_examples() {
        // 1/(1-x): all-ones series
        let s = theta_f_expand(0, 1, 1, 4).unwrap();
        for p in 0..=4 {
            assert_eq!(s.coeff(&[p]).unwrap(), BigInt::from(1));
        }
        // x^2/(1-x^3)^2 at x^8: progression term j=2, f_2(2) = 3
        let s = theta_f_expand(2, 3, 2, 10).unwrap();
        assert_eq!(s.coeff(&[8]).unwrap(), BigInt::from(3));
        assert_eq!(s.coeff(&[2]).unwrap(), BigInt::from(1));
        assert_eq!(s.coeff(&[3]).unwrap(), BigInt::from(0));
        // x/(1-x^2) has no even-degree terms
        let s = theta_f_expand(1, 2, 1, 6).unwrap();
        assert_eq!(s.coeff(&[4]).unwrap(), BigInt::from(0));
        assert_eq!(s.coeff(&[5]).unwrap(), BigInt::from(1));
    }

    #[test]
    fn out_of_box_read_is_an_error() {
        let s = theta_f_expand(0, 1, 1, 4).unwrap();
        assert!(matches!(s.coeff(&[5]), Err(KernelError::OutOfBox(_))));
        assert!(matches!(s.coeff(&[-1]), Err(KernelError::OutOfBox(_))));
    }

    #[test]
    fn slices_project_correctly() {
        let tv = VarSet::new(&["t", "y"]);
        let p = LaurentPoly::from_terms(&tv, &[(&[0, 0], 1), (&[1, 1], 2), (&[2, 1], 3)]);
        let s = TruncSeries::from_poly(&p, SeriesBox::nonneg(&[2, 1]));
        let yv = VarSet::new(&["t"]);
        let sl = s.slice_poly(&[(1, 1)], &yv);
        assert_eq!(sl, LaurentPoly::from_terms(&yv, &[(&[1], 2), (&[2], 3)]));
        let sl0 = s.slice_series(&[(1, 0)], &yv);
        assert_eq!(sl0.coeff(&[0]).unwrap(), BigInt::from(1));
        assert_eq!(sl0.coeff(&[1]).unwrap(), BigInt::from(0));
    }
}
