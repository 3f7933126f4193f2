//! Rational generating functions with factored denominators, and their exact
//! expansion on truncation boxes.
//!
//! A [`RationalGF`] is `numerator / prod_i factor_i^mult_i` where every factor
//! has constant term +1.  Denominators are never multiplied out: expansion
//! divides by one factor at a time via the geometric series, which keeps every
//! intermediate product small (most factors are binomials).
//!
//! Expansion semantics: variables whose requested lower bound is 0 are
//! *series* variables; every non-constant factor term must have nonnegative
//! exponents and total degree >= 1 in them, so discarding overflow beyond the
//! upper bound is sound (such terms can never re-enter the box).  Variables
//! with a negative lower bound are *Laurent window* variables: their exponents
//! may drift both ways during expansion, so the engine works on a window
//! padded by the worst-case drift per unit of series degree and only then
//! restricts to the requested box.  Inside the requested box the returned
//! coefficients are exact.

use num_traits::One;

use super::error::KernelError;
use super::laurent::LaurentPoly;
use super::series::{SeriesBox, TruncSeries};
use super::vars::VarSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    vars: VarSet,
    numerator: LaurentPoly,
    factors: Vec<(LaurentPoly, u32)>,
}

impl RationalGF {
    /// Build and validate: contexts agree, the numerator has nonnegative
    /// exponents everywhere, and each denominator factor has constant term +1
    /// with multiplicity >= 1.
    pub fn new(
        numerator: LaurentPoly,
        factors: Vec<(LaurentPoly, u32)>,
    ) -> Result<Self, KernelError> {
        let vars = numerator.vars().clone();
        for v in 0..vars.len() {
            if numerator.min_exp(v).unwrap_or(0) < 0 {
                return Err(KernelError::Normalization(format!(
                    "numerator has a negative exponent in {}",
                    vars.name(v)
                )));
            }
        }
        for (f, mult) in &factors {
            if f.vars() != &vars {
                return Err(KernelError::ContextMismatch {
                    left: vars.describe(),
                    right: f.vars().describe(),
                });
            }
            if *mult == 0 {
                return Err(KernelError::Normalization(
                    "factor multiplicity must be >= 1".into(),
                ));
            }
            let c0 = f.coeff(&vec![0; vars.len()]);
            if !c0.is_one() {
                return Err(KernelError::Normalization(format!(
                    "factor constant term is {c0}, expected +1: {f}"
                )));
            }
        }
        Ok(RationalGF {
            vars,
            numerator,
            factors,
        })
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn factors(&self) -> &[(LaurentPoly, u32)] {
        &self.factors
    }

    /// Denominator multiplied out (for cross-multiplication checks).
    pub fn denominator_poly(&self) -> LaurentPoly {
        let mut d = LaurentPoly::one(&self.vars);
        for (f, mult) in &self.factors {
            for _ in 0..*mult {
                d = &d * f;
            }
        }
        d
    }

    /// Substitute an integer for one variable in numerator and denominator.
    pub fn substitute_int(&self, var: usize, value: i64) -> Result<RationalGF, KernelError> {
        let value = num_bigint::BigInt::from(value);
        let numerator = self.numerator.substitute_int(var, &value)?;
        let mut factors = Vec::with_capacity(self.factors.len());
        for (f, mult) in &self.factors {
            factors.push((f.substitute_int(var, &value)?, *mult));
        }
        RationalGF::new(numerator, factors)
    }

    /// Exact Taylor/Laurent coefficients of the function on `requested`.
    pub fn expand(&self, requested: &SeriesBox) -> Result<TruncSeries, KernelError> {
        if requested.len() != self.vars.len() {
            return Err(KernelError::Domain(
                "box dimension does not match the variable context".into(),
            ));
        }
        for v in 0..self.vars.len() {
            if requested.lo()[v] > 0 || requested.hi()[v] < 0 {
                return Err(KernelError::Domain(format!(
                    "box for {} must contain 0 (got [{}, {}])",
                    self.vars.name(v),
                    requested.lo()[v],
                    requested.hi()[v]
                )));
            }
        }
        let is_series: Vec<bool> = (0..self.vars.len())
            .map(|v| requested.lo()[v] == 0)
            .collect();

        // Validate that every factor is expandable against this variable split
        // and record the worst-case Laurent drift per unit of series degree.
        let mut drift = vec![0i64; self.vars.len()];
        for (f, _) in &self.factors {
            for (e, _) in f.terms() {
                if e.is_zero() {
                    continue;
                }
                let mut series_deg = 0i64;
                for (v, &series) in is_series.iter().enumerate() {
                    if series {
                        if e.0[v] < 0 {
                            return Err(KernelError::Normalization(format!(
                                "factor term has negative exponent in series variable {}: {f}",
                                self.vars.name(v)
                            )));
                        }
                        series_deg += i64::from(e.0[v]);
                    }
                }
                if series_deg == 0 {
                    return Err(KernelError::Normalization(format!(
                        "factor term has no series-variable degree: {f}"
                    )));
                }
                for v in 0..self.vars.len() {
                    if !is_series[v] {
                        let d =
                            (i64::from(e.0[v].unsigned_abs() as i32) + series_deg - 1) / series_deg;
                        drift[v] = drift[v].max(d);
                    }
                }
            }
        }

        let t_total: i64 = (0..self.vars.len())
            .filter(|&v| is_series[v])
            .map(|v| i64::from(requested.hi()[v]))
            .sum();

        // Working box: series variables keep their range, Laurent variables
        // are padded by drift * total series budget around both the requested
        // window and the numerator's own support.
        let mut ranges = Vec::with_capacity(self.vars.len());
        for v in 0..self.vars.len() {
            if is_series[v] {
                ranges.push((0, requested.hi()[v]));
            } else {
                let pad = drift[v] * t_total;
                let lo = i64::from(requested.lo()[v])
                    .min(i64::from(self.numerator.min_exp(v).unwrap_or(0)))
                    - pad;
                let hi = i64::from(requested.hi()[v])
                    .max(i64::from(self.numerator.max_exp(v).unwrap_or(0)))
                    + pad;
                let clamp = |x: i64| -> i32 {
                    x.clamp(i64::from(i32::MIN / 4), i64::from(i32::MAX / 4)) as i32
                };
                ranges.push((clamp(lo), clamp(hi)));
            }
        }
        let working = SeriesBox::with_ranges(&ranges);

        let mut acc = TruncSeries::from_poly(&self.numerator, working);
        for (f, mult) in &self.factors {
            let r = LaurentPoly::one(&self.vars).try_sub(f)?; // f = 1 - r
            for _ in 0..*mult {
                acc = geometric_divide(&acc, &r);
            }
        }
        Ok(acc.restrict(requested.clone()))
    }
}

/// `sum_j r^j * acc` on the box of `acc`, computed as the fixpoint of
/// `s -> acc + r*s`.  Terminates because every term of `r` has series degree
/// >= 1, so iterates beyond the box budget stop contributing.
fn geometric_divide(acc: &TruncSeries, r: &LaurentPoly) -> TruncSeries {
    if r.is_zero() {
        return acc.clone();
    }
    let mut s = acc.clone();
    loop {
        let mut next = acc.clone();
        next.add_assign_series(&s.mul_poly_trunc(r));
        if next == s {
            return s;
        }
        s = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn tt() -> VarSet {
        VarSet::new(&["t1", "t2"])
    }

    fn gf(vars: &VarSet, num: &[(&[i32], i64)], factors: &[&[(&[i32], i64)]]) -> RationalGF {
        RationalGF::new(
            LaurentPoly::from_terms(vars, num),
            factors
                .iter()
                .map(|f| (LaurentPoly::from_terms(vars, f), 1))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn geometric_series_in_one_variable() {
        let v = VarSet::new(&["t"]);
        let f = gf(&v, &[(&[0], 1)], &[&[(&[0], 1), (&[1], -1)]]);
        let s = f.expand(&SeriesBox::nonneg(&[5])).unwrap();
        for p in 0..=5 {
            assert_eq!(s.coeff(&[p]).unwrap(), BigInt::from(1));
        }
    }

    #[test]
    fn squared_factor_gives_binomials() {
        // 1/(1-t)^2: coefficient of t^3 is 4
        let v = VarSet::new(&["t"]);
        let f = RationalGF::new(
            LaurentPoly::one(&v),
            vec![(LaurentPoly::from_terms(&v, &[(&[0], 1), (&[1], -1)]), 2)],
        )
        .unwrap();
        let s = f.expand(&SeriesBox::nonneg(&[6])).unwrap();
        assert_eq!(s.coeff(&[3]).unwrap(), BigInt::from(4));
        assert_eq!(s.coeff(&[6]).unwrap(), BigInt::from(7));
    }

    #[test]
    fn two_variable_example_with_numerator() {
        // (1 - t1 t2)/((1-t1)(1-t2)): coefficient(i,j) = 1 - [i>=1][j>=1]
        let v = tt();
        let f = gf(
            &v,
            &[(&[0, 0], 1), (&[1, 1], -1)],
            &[
                &[(&[0, 0], 1), (&[1, 0], -1)],
                &[(&[0, 0], 1), (&[0, 1], -1)],
            ],
        );
        let s = f.expand(&SeriesBox::nonneg(&[4, 4])).unwrap();
        assert_eq!(s.coeff(&[0, 0]).unwrap(), BigInt::from(1));
        assert_eq!(s.coeff(&[1, 0]).unwrap(), BigInt::from(1));
        assert_eq!(s.coeff(&[0, 1]).unwrap(), BigInt::from(1));
        assert_eq!(s.coeff(&[1, 1]).unwrap(), BigInt::from(0));
        assert_eq!(s.coeff(&[3, 0]).unwrap(), BigInt::from(1));
        assert_eq!(s.coeff(&[3, 2]).unwrap(), BigInt::from(0));
    }

    #[test]
    fn laurent_window_expansion() {
        // 1/(1 - t(x + 1/x)): [t^n] = (x + 1/x)^n, binomial coefficients.
        let v = VarSet::new(&["t", "x"]);
        let f = gf(
            &v,
            &[(&[0, 0], 1)],
            &[&[(&[0, 0], 1), (&[1, 1], -1), (&[1, -1], -1)]],
        );
        let s = f
            .expand(&SeriesBox::with_ranges(&[(0, 3), (-3, 3)]))
            .unwrap();
        assert_eq!(s.coeff(&[2, 0]).unwrap(), BigInt::from(2));
        assert_eq!(s.coeff(&[2, 2]).unwrap(), BigInt::from(1));
        assert_eq!(s.coeff(&[2, -2]).unwrap(), BigInt::from(1));
        assert_eq!(s.coeff(&[3, 1]).unwrap(), BigInt::from(3));
        assert_eq!(s.coeff(&[3, -1]).unwrap(), BigInt::from(3));
        assert_eq!(s.coeff(&[3, 3]).unwrap(), BigInt::from(1));
        assert_eq!(s.coeff(&[1, 0]).unwrap(), BigInt::from(0));
    }

    #[test]
    fn reconstruction_identity_on_box() {
        // expand(f) * denominator == numerator, coefficientwise on the box.
        let v = tt();
        let f = gf(
            &v,
            &[(&[0, 0], 1), (&[1, 1], -1)],
            &[
                &[(&[0, 0], 1), (&[1, 0], -1)],
                &[(&[0, 0], 1), (&[0, 1], -1)],
            ],
        );
        let bx = SeriesBox::nonneg(&[6, 6]);
        let s = f.expand(&bx).unwrap();
        let back = s
            .mul_poly_trunc(&f.factors()[0].0)
            .mul_poly_trunc(&f.factors()[1].0);
        assert_eq!(back, TruncSeries::from_poly(f.numerator(), bx));
    }

    #[test]
    fn normalization_errors() {
        let v = VarSet::new(&["t"]);
        // constant term 2
        let bad = RationalGF::new(
            LaurentPoly::one(&v),
            vec![(LaurentPoly::from_terms(&v, &[(&[0], 2), (&[1], -1)]), 1)],
        );
        assert!(matches!(bad, Err(KernelError::Normalization(_))));
        // numerator with a negative exponent
        let bad = RationalGF::new(LaurentPoly::monomial(&v, &[-1], 1), vec![]);
        assert!(matches!(bad, Err(KernelError::Normalization(_))));
        // factor term with zero series degree: 1 - x (x a Laurent window var)
        let v2 = VarSet::new(&["t", "x"]);
        let f = RationalGF::new(
            LaurentPoly::one(&v2),
            vec![(
                LaurentPoly::from_terms(&v2, &[(&[0, 0], 1), (&[0, 1], -1)]),
                1,
            )],
        )
        .unwrap();
        let err = f.expand(&SeriesBox::with_ranges(&[(0, 3), (-2, 2)]));
        assert!(matches!(err, Err(KernelError::Normalization(_))));
    }

    #[test]
    fn theta_f_expand_matches_gf_expand_spot() {
        // x^2/(1-x^3)^2 two ways
        let v = VarSet::new(&["x"]);
        let f = RationalGF::new(
            LaurentPoly::monomial(&v, &[2], 1),
            vec![(LaurentPoly::from_terms(&v, &[(&[0], 1), (&[3], -1)]), 2)],
        )
        .unwrap();
        let a = f.expand(&SeriesBox::nonneg(&[20])).unwrap();
        let b = crate::kernel::series::theta_f_expand(2, 3, 2, 20).unwrap();
        assert_eq!(a, b);
    }
}
