//! Character generating functions.
//!
//! For each algebra there is a rational function `G(t1,t2; z1,z2)` whose
//! `t1^p t2^q` coefficient is the character of the irreducible with highest
//! weight `(p, q)`, written as a polynomial in the two fundamental characters
//! `z1, z2`.  This module transcribes those rational functions, substitutes
//! the fundamental-character decompositions `z_i(x1, x2)` to obtain a form
//! whose coefficients are Laurent polynomials in the torus variables, and
//! provides the structural cross-checks built on `G`:
//!
//! * extraction of characters from the series expansion of `G` (verified
//!   against the Freudenthal oracle),
//! * the G2 Clebsch-Gordan identities among small characters,
//! * the second-order differential equation `(Lt - Lz) G = 0` satisfied by
//!   the G2 generating function (`Lz` is the operator whose eigenfunctions
//!   are the characters with eigenvalue `4p^2 + 12q^2 + 12pq + 20p + 36q`),
//! * the dimension generating functions obtained by substituting the
//!   fundamental dimensions for `z1, z2`.

use crate::freudenthal::character_vars;
use crate::kernel::{KernelError, LaurentPoly, RationalGF, SeriesBox, TruncSeries, VarSet};
use crate::lie::{weyl_dim, AlgebraId};
use crate::report::IdentityOutcome;

/// Variables of the z-form: `(t1, t2, z1, z2)`.
pub fn tz_vars() -> VarSet {
    VarSet::new(&["t1", "t2", "z1", "z2"])
}

/// Variables of the substituted form: `(t1, t2, x1, x2)`.
pub fn tx_vars() -> VarSet {
    VarSet::new(&["t1", "t2", "x1", "x2"])
}

/// Exponent/coefficient pairs of a fixed Laurent polynomial in `(x1, x2)`.
type WeightTerms = &'static [([i32; 2], i64)];

/// Weights (as `x1, x2` exponent pairs) of the two fundamental
/// representations, with multiplicity.  These fix the labeling convention of
/// the whole crate: `z1` is the character of the smaller fundamental
/// representation (3-, 4- and 7-dimensional for A2, C2, G2 respectively).
fn fundamental_weight_terms(alg: AlgebraId) -> (WeightTerms, WeightTerms) {
    match alg {
        AlgebraId::A2 => (
            &[([1, 0], 1), ([0, -1], 1), ([-1, 1], 1)],
            &[([0, 1], 1), ([-1, 0], 1), ([1, -1], 1)],
        ),
        AlgebraId::C2 => (
            &[([1, 0], 1), ([-1, 0], 1), ([1, -1], 1), ([-1, 1], 1)],
            &[
                ([0, 0], 1),
                ([0, 1], 1),
                ([0, -1], 1),
                ([2, -1], 1),
                ([-2, 1], 1),
            ],
        ),
        AlgebraId::G2 => (
            &[
                ([0, 0], 1),
                ([1, 0], 1),
                ([-1, 0], 1),
                ([1, -1], 1),
                ([-1, 1], 1),
                ([2, -1], 1),
                ([-2, 1], 1),
            ],
            &[
                ([0, 0], 2),
                ([1, 0], 1),
                ([-1, 0], 1),
                ([0, 1], 1),
                ([0, -1], 1),
                ([1, -1], 1),
                ([-1, 1], 1),
                ([2, -1], 1),
                ([-2, 1], 1),
                ([3, -1], 1),
                ([-3, 1], 1),
                ([3, -2], 1),
                ([-3, 2], 1),
            ],
        ),
    }
}

/// The fundamental characters as Laurent polynomials in `(x1, x2)`.
pub fn fundamental_characters(alg: AlgebraId) -> (LaurentPoly, LaurentPoly) {
    let vars = character_vars();
    let build = |terms: &[([i32; 2], i64)]| {
        let borrowed: Vec<(&[i32], i64)> = terms.iter().map(|(e, c)| (&e[..], *c)).collect();
        LaurentPoly::from_terms(&vars, &borrowed)
    };
    let (a, b) = fundamental_weight_terms(alg);
    (build(a), build(b))
}

/// Polynomial in `(t1, t2, z1, z2)` given as `(t1exp, t2exp, z1exp, z2exp, coeff)`.
fn tzpoly(terms: &[(i32, i32, i32, i32, i64)]) -> LaurentPoly {
    let vars = tz_vars();
    let expanded: Vec<(Vec<i32>, i64)> = terms
        .iter()
        .map(|&(a, b, c, d, k)| (vec![a, b, c, d], k))
        .collect();
    let borrowed: Vec<(&[i32], i64)> = expanded.iter().map(|(e, k)| (e.as_slice(), *k)).collect();
    LaurentPoly::from_terms(&vars, &borrowed)
}

/// `zpart * (sum of t-monomials)` — the building block the G2 numerator and
/// denominators are printed in.
fn block(zpart: &[(i32, i32, i64)], tmons: &[(i32, i32)]) -> LaurentPoly {
    let z = tzpoly(
        &zpart
            .iter()
            .map(|&(c, d, k)| (0, 0, c, d, k))
            .collect::<Vec<_>>(),
    );
    let t = tzpoly(
        &tmons
            .iter()
            .map(|&(a, b)| (a, b, 0, 0, 1))
            .collect::<Vec<_>>(),
    );
    &z * &t
}

/// The character generating function in its z-form: a polynomial numerator
/// over two denominator factors (one per fundamental direction), all in the
/// variables `(t1, t2, z1, z2)`.
#[derive(Clone, Debug)]
pub struct CharGf {
    algebra: AlgebraId,
    numerator: LaurentPoly,
    den_factors: [LaurentPoly; 2],
}

impl CharGf {
    pub fn build(alg: AlgebraId) -> CharGf {
        let one = &[(0, 0, 1i64)][..];
        let (numerator, d1, d2) = match alg {
            AlgebraId::A2 => (
                // 1 - t1 t2
                tzpoly(&[(0, 0, 0, 0, 1), (1, 1, 0, 0, -1)]),
                // 1 - t1 z1 + t1^2 z2 - t1^3
                tzpoly(&[
                    (0, 0, 0, 0, 1),
                    (1, 0, 1, 0, -1),
                    (2, 0, 0, 1, 1),
                    (3, 0, 0, 0, -1),
                ]),
                // 1 - t2 z2 + t2^2 z1 - t2^3
                tzpoly(&[
                    (0, 0, 0, 0, 1),
                    (0, 1, 0, 1, -1),
                    (0, 2, 1, 0, 1),
                    (0, 3, 0, 0, -1),
                ]),
            ),
            AlgebraId::C2 => (
                // 1 + t2 - z1 t1 t2 + t1^2 t2 + t1^2 t2^2
                tzpoly(&[
                    (0, 0, 0, 0, 1),
                    (0, 1, 0, 0, 1),
                    (1, 1, 1, 0, -1),
                    (2, 1, 0, 0, 1),
                    (2, 2, 0, 0, 1),
                ]),
                // 1 - (t1 + t1^3) z1 + t1^2 (z2 + 1) + t1^4
                &(&tzpoly(&[(0, 0, 0, 0, 1), (4, 0, 0, 0, 1)])
                    + &block(&[(1, 0, -1)], &[(1, 0), (3, 0)]))
                    + &block(&[(0, 1, 1), (0, 0, 1)], &[(2, 0)]),
                // 1 - (t2 + t2^3)(z2 - 1) + t2^2 (z1^2 - 2 z2) + t2^4
                &(&tzpoly(&[(0, 0, 0, 0, 1), (0, 4, 0, 0, 1)])
                    + &block(&[(0, 1, -1), (0, 0, 1)], &[(0, 1), (0, 3)]))
                    + &block(&[(2, 0, 1), (0, 1, -2)], &[(0, 2)]),
            ),
            AlgebraId::G2 => {
                // 1 + t1^6 + (t1 + t1^5)(1 - z1) + (t1^2 + t1^4)(1 + z2)
                //   + t1^3 (1 - z1^2 + 2 z2)
                let d1 = &(&(&tzpoly(&[(0, 0, 0, 0, 1), (6, 0, 0, 0, 1)])
                    + &block(&[(0, 0, 1), (1, 0, -1)], &[(1, 0), (5, 0)]))
                    + &block(&[(0, 0, 1), (0, 1, 1)], &[(2, 0), (4, 0)]))
                    + &block(&[(0, 0, 1), (2, 0, -1), (0, 1, 2)], &[(3, 0)]);
                // 1 + t2^6 + (t2 + t2^5)(1 + z1 - z2)
                //   + (t2^2 + t2^4)(1 - z1 + z1^3 - 2 z2 - 3 z1 z2)
                //   + t2^3 (1 - 2 z1 - z1^2 + 2 z1^3 - 4 z2 - 4 z1 z2 - z2^2)
                let d2 = &(&(&tzpoly(&[(0, 0, 0, 0, 1), (0, 6, 0, 0, 1)])
                    + &block(&[(0, 0, 1), (1, 0, 1), (0, 1, -1)], &[(0, 1), (0, 5)]))
                    + &block(
                        &[(0, 0, 1), (1, 0, -1), (3, 0, 1), (0, 1, -2), (1, 1, -3)],
                        &[(0, 2), (0, 4)],
                    ))
                    + &block(
                        &[
                            (0, 0, 1),
                            (1, 0, -2),
                            (2, 0, -1),
                            (3, 0, 2),
                            (0, 1, -4),
                            (1, 1, -4),
                            (0, 2, -1),
                        ],
                        &[(0, 3)],
                    );
                // 1 + t1 + t1^4 t2 + t2^3 + t1^3 t2^4 + t1^4 t2^4
                //   + (1 - z1)(t1^3 t2 + t1 t2^3)
                //   + (1 + z1)(t2 + t2^2 + t1^4 t2^2 + t1^4 t2^3)
                //   + (1 + z1 - z1^2)(t1 t2^2 + t1^3 t2^2)
                //   + (1 + z2)(t1^2 t2 + t1^2 t2^3)
                //   + (2 + z1 - z1^2 + z2)(t1 t2 + t1^3 t2^3)
                //   + (1 + 2 z1 - z1^2 + z2 + z1 z2) t1^2 t2^2
                let n =
                    &(&(&(&(&(&block(one, &[(0, 0), (1, 0), (4, 1), (0, 3), (3, 4), (4, 4)])
                        + &block(&[(0, 0, 1), (1, 0, -1)], &[(3, 1), (1, 3)]))
                        + &block(&[(0, 0, 1), (1, 0, 1)], &[(0, 1), (0, 2), (4, 2), (4, 3)]))
                        + &block(&[(0, 0, 1), (1, 0, 1), (2, 0, -1)], &[(1, 2), (3, 2)]))
                        + &block(&[(0, 0, 1), (0, 1, 1)], &[(2, 1), (2, 3)]))
                        + &block(
                            &[(0, 0, 2), (1, 0, 1), (2, 0, -1), (0, 1, 1)],
                            &[(1, 1), (3, 3)],
                        ))
                        + &block(
                            &[(0, 0, 1), (1, 0, 2), (2, 0, -1), (0, 1, 1), (1, 1, 1)],
                            &[(2, 2)],
                        );
                (n, d1, d2)
            }
        };
        CharGf {
            algebra: alg,
            numerator,
            den_factors: [d1, d2],
        }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn numerator_z(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn den_factors_z(&self) -> &[LaurentPoly; 2] {
        &self.den_factors
    }

    /// The z-form as an expandable rational function in `(t1, t2, z1, z2)`,
    /// all four treated as series variables.
    pub fn as_z_gf(&self) -> RationalGF {
        RationalGF::new(
            self.numerator.clone(),
            vec![
                (self.den_factors[0].clone(), 1),
                (self.den_factors[1].clone(), 1),
            ],
        )
        .expect("z-form is a valid rational generating function")
    }

    /// Substitute integers for `z1, z2` and reduce to `(t1, t2)`: used for
    /// the dimension generating functions.
    pub fn specialize_z(&self, z1: i64, z2: i64) -> (LaurentPoly, Vec<LaurentPoly>) {
        let tvars = VarSet::new(&["t1", "t2"]);
        let reduce = |p: &LaurentPoly| -> LaurentPoly {
            p.substitute_int(2, &z1.into())
                .and_then(|p| p.substitute_int(3, &z2.into()))
                .and_then(|p| p.project(&[0, 1], &tvars))
                .expect("z-specialization stays polynomial in t")
        };
        (
            reduce(&self.numerator),
            self.den_factors.iter().map(reduce).collect(),
        )
    }

    /// Substitute the fundamental-character decompositions for `z1, z2`,
    /// returning a rational function in `(t1, t2, x1, x2)` together with the
    /// `(x1, x2)` monomial shift applied to the numerator to clear its
    /// negative exponents (the series of the result is `x1^s1 x2^s2 * G`).
    pub fn x_form(&self) -> (RationalGF, [i32; 2]) {
        let vars = tx_vars();
        let (z1t, z2t) = fundamental_weight_terms(self.algebra);
        let lift = |terms: &[([i32; 2], i64)]| {
            let expanded: Vec<(Vec<i32>, i64)> = terms
                .iter()
                .map(|&(e, c)| (vec![0, 0, e[0], e[1]], c))
                .collect();
            let borrowed: Vec<(&[i32], i64)> =
                expanded.iter().map(|(e, c)| (e.as_slice(), *c)).collect();
            LaurentPoly::from_terms(&vars, &borrowed)
        };
        let z1x = lift(z1t);
        let z2x = lift(z2t);
        let subst = |p: &LaurentPoly| -> LaurentPoly {
            let mut acc = LaurentPoly::zero(&vars);
            for (e, c) in p.terms() {
                let base = LaurentPoly::monomial(&vars, &[e.0[0], e.0[1], 0, 0], 1).scale(c);
                let with_z1 = &base * &z1x.pow(e.0[2] as u32);
                acc = &acc + &(&with_z1 * &z2x.pow(e.0[3] as u32));
            }
            acc
        };
        let num = subst(&self.numerator);
        let shift = [
            -num.min_exp(2).unwrap_or(0).min(0),
            -num.min_exp(3).unwrap_or(0).min(0),
        ];
        let num = num.shift(&[0, 0, shift[0], shift[1]]);
        let gf = RationalGF::new(
            num,
            vec![
                (subst(&self.den_factors[0]), 1),
                (subst(&self.den_factors[1]), 1),
            ],
        )
        .expect("x-form is a valid rational generating function");
        (gf, shift)
    }
}

/// Largest absolute `x1`/`x2` exponent over both fundamental characters —
/// the per-unit-weight growth bound used to size extraction windows.
fn x_exponent_bound(alg: AlgebraId) -> [i32; 2] {
    let (a, b) = fundamental_weight_terms(alg);
    let mut out = [0i32; 2];
    for (e, _) in a.iter().chain(b) {
        out[0] = out[0].max(e[0].abs());
        out[1] = out[1].max(e[1].abs());
    }
    out
}

/// Characters keyed by highest weight `(p, q)`.
pub type CharacterList = Vec<((i64, i64), LaurentPoly)>;

/// Characters of all irreducibles with `p <= pmax, q <= qmax`, extracted
/// from the series expansion of the generating function.  The `x`-window is
/// sized from the extremal-weight bound and enlarged on boundary contact.
pub fn characters_from_gf(
    alg: AlgebraId,
    pmax: i64,
    qmax: i64,
) -> Result<CharacterList, KernelError> {
    let (gf, shift) = CharGf::build(alg).x_form();
    // Every weight of the irreducible (p, q) is a sum of p weights of the
    // first fundamental and q of the second (any Weyl image of the highest
    // weight is such a sum, and the rest lie in their convex hull), so the
    // slice support fits in (p + q) times the per-weight exponent bound plus
    // the numerator shift.  The margin of 2 keeps the boundary-contact test
    // meaningful; contact still widens the window and retries.
    let eb = x_exponent_bound(alg);
    let total = (pmax + qmax) as i32;
    let mut w1 = total * eb[0] + shift[0] + 2;
    let mut w2 = total * eb[1] + shift[1] + 2;
    'attempt: for _ in 0..4 {
        let bx =
            SeriesBox::with_ranges(&[(0, pmax as i32), (0, qmax as i32), (-w1, w1), (-w2, w2)]);
        let series = gf.expand(&bx)?;
        let xvars = character_vars();
        let mut out = Vec::new();
        for p in 0..=pmax {
            for q in 0..=qmax {
                let slice = series.slice_poly(&[(0, p as i32), (1, q as i32)], &xvars);
                // Boundary contact means the window may have clipped genuine
                // terms; retry with a wider window.
                let clipped = |v: usize, w: i32| {
                    slice.max_exp(v).unwrap_or(0) >= w || slice.min_exp(v).unwrap_or(0) <= -w
                };
                if clipped(0, w1) || clipped(1, w2) {
                    w1 *= 2;
                    w2 *= 2;
                    continue 'attempt;
                }
                out.push(((p, q), slice.shift(&[-shift[0], -shift[1]])));
            }
        }
        return Ok(out);
    }
    Err(KernelError::Domain(
        "character extraction window kept overflowing".into(),
    ))
}

/// The four Clebsch-Gordan product identities among small G2 characters and
/// the three solved forms of the quadratic characters, checked as exact
/// Laurent-polynomial identities on oracle characters, plus their dimension
/// shadows under the Weyl dimension formula.
pub fn clebsch_gordan_checks_g2() -> Vec<IdentityOutcome> {
    use crate::freudenthal::oracle_character;
    let alg = AlgebraId::G2;
    let z1 = oracle_character(alg, 1, 0);
    let z2 = oracle_character(alg, 0, 1);
    let c20 = oracle_character(alg, 2, 0);
    let c11 = oracle_character(alg, 1, 1);
    let c02 = oracle_character(alg, 0, 2);
    let c30 = oracle_character(alg, 3, 0);
    let one = LaurentPoly::one(z1.vars());

    let mut out = Vec::new();
    let mut check = |name: &str, lhs: &LaurentPoly, rhs: &LaurentPoly| {
        out.push(if lhs == rhs {
            IdentityOutcome::pass(name, format!("{} terms match", lhs.num_terms()))
        } else {
            IdentityOutcome::fail(name, format!("difference: {}", lhs - rhs))
        });
    };

    check(
        "z1^2 = chi20 + z1 + z2 + 1",
        &(&z1 * &z1),
        &(&(&(&c20 + &z1) + &z2) + &one),
    );
    check(
        "z1 z2 = chi11 + chi20 + z1",
        &(&z1 * &z2),
        &(&(&c11 + &c20) + &z1),
    );
    check(
        "z2^2 = chi02 + chi30 + chi20 + z2 + 1",
        &(&z2 * &z2),
        &(&(&(&(&c02 + &c30) + &c20) + &z2) + &one),
    );
    check(
        "z1 chi20 = chi30 + chi11 + chi20 + z1 + z2",
        &(&z1 * &c20),
        &(&(&(&(&c30 + &c11) + &c20) + &z1) + &z2),
    );
    check(
        "chi20 = z1^2 - z2 - z1 - 1",
        &c20,
        &(&(&(&(&z1 * &z1) - &z2) - &z1) - &one),
    );
    check(
        "chi11 = z1 z2 - z1^2 + z2 + 1",
        &c11,
        &(&(&(&(&z1 * &z2) - &(&z1 * &z1)) + &z2) + &one),
    );
    check(
        "chi02 = z2^2 - z1^3 + 2 z1 z2 + z2 + 2 z1",
        &c02,
        &(&(&(&(&(&z2 * &z2) - &(&(&z1 * &z1) * &z1)) + &(&z1 * &z2).scale_i64(2)) + &z2)
            + &z1.scale_i64(2)),
    );

    // Dimension shadows: evaluate each product identity at x1 = x2 = 1.
    let d = |p, q| weyl_dim(alg, p, q);
    out.push(IdentityOutcome::from_eq(
        "dim shadow 7*7 = 27 + 7 + 14 + 1",
        d(1, 0) * d(1, 0),
        d(2, 0) + d(1, 0) + d(0, 1) + 1,
    ));
    out.push(IdentityOutcome::from_eq(
        "dim shadow 7*14 = 64 + 27 + 7",
        d(1, 0) * d(0, 1),
        d(1, 1) + d(2, 0) + d(1, 0),
    ));
    out.push(IdentityOutcome::from_eq(
        "dim shadow 14*14 = 77 + 77 + 27 + 14 + 1",
        d(0, 1) * d(0, 1),
        d(0, 2) + d(3, 0) + d(2, 0) + d(0, 1) + 1,
    ));
    out.push(IdentityOutcome::from_eq(
        "dim shadow 7*27 = 77 + 64 + 27 + 7 + 14",
        d(1, 0) * d(2, 0),
        d(3, 0) + d(1, 1) + d(2, 0) + d(1, 0) + d(0, 1),
    ));
    out
}

/// A linear differential operator: a sum of `coefficient * d^k` terms, where
/// the multi-index `k` lists the derivative order per variable.
#[derive(Clone, Debug)]
pub struct DiffOp {
    terms: Vec<(LaurentPoly, Vec<u32>)>,
}

impl DiffOp {
    pub fn new(terms: Vec<(LaurentPoly, Vec<u32>)>) -> DiffOp {
        assert!(!terms.is_empty());
        let vars = terms[0].0.vars().clone();
        for (c, k) in &terms {
            assert_eq!(c.vars(), &vars);
            assert_eq!(k.len(), vars.len());
        }
        DiffOp { terms }
    }

    pub fn apply_poly(&self, p: &LaurentPoly) -> LaurentPoly {
        let mut acc = LaurentPoly::zero(p.vars());
        for (coeff, multi) in &self.terms {
            let mut d = p.clone();
            for (v, &k) in multi.iter().enumerate() {
                for _ in 0..k {
                    d = d.diff(v);
                }
            }
            acc = &acc + &(&d * coeff);
        }
        acc
    }

    pub fn apply_series(&self, s: &TruncSeries) -> TruncSeries {
        let mut acc = TruncSeries::zero(s.vars(), s.bounds().clone());
        for (coeff, multi) in &self.terms {
            let mut d = s.clone();
            for (v, &k) in multi.iter().enumerate() {
                for _ in 0..k {
                    d = d.diff(v);
                }
            }
            acc.add_assign_series(&d.mul_poly_trunc(coeff));
        }
        acc
    }
}

/// `4 t1^2 d11 + 12 t2^2 d22 + 12 t1 t2 d12 + 24 t1 d1 + 48 t2 d2` in the
/// `(t1, t2, z1, z2)` context — multiplies `t1^p t2^q` by the eigenvalue
/// `4p^2 + 12q^2 + 12pq + 20p + 36q`.
pub fn cs_operator_t() -> DiffOp {
    DiffOp::new(vec![
        (tzpoly(&[(2, 0, 0, 0, 4)]), vec![2, 0, 0, 0]),
        (tzpoly(&[(0, 2, 0, 0, 12)]), vec![0, 2, 0, 0]),
        (tzpoly(&[(1, 1, 0, 0, 12)]), vec![1, 1, 0, 0]),
        (tzpoly(&[(1, 0, 0, 0, 24)]), vec![1, 0, 0, 0]),
        (tzpoly(&[(0, 1, 0, 0, 48)]), vec![0, 1, 0, 0]),
    ])
}

/// The G2 operator in the fundamental-character coordinates:
/// `4(z1^2 - z2 - 4 z1 - 7) d_z1^2
///  + 4(3 z2^2 - 3 z1^3 + 6 z1 z2 - 5 z1^2 + 2 z2 + 11 z1 - 7) d_z2^2
///  + 4(3 z1 z2 - 7 z1^2 + 7 z2 - 8 z1 + 7) d_z1 d_z2
///  + 24 z1 d_z1 + 48 z2 d_z2`.
pub fn cs_operator_z_g2() -> DiffOp {
    DiffOp::new(vec![
        (
            tzpoly(&[
                (0, 0, 2, 0, 4),
                (0, 0, 0, 1, -4),
                (0, 0, 1, 0, -16),
                (0, 0, 0, 0, -28),
            ]),
            vec![0, 0, 2, 0],
        ),
        (
            tzpoly(&[
                (0, 0, 0, 2, 12),
                (0, 0, 3, 0, -12),
                (0, 0, 1, 1, 24),
                (0, 0, 2, 0, -20),
                (0, 0, 0, 1, 8),
                (0, 0, 1, 0, 44),
                (0, 0, 0, 0, -28),
            ]),
            vec![0, 0, 0, 2],
        ),
        (
            tzpoly(&[
                (0, 0, 1, 1, 12),
                (0, 0, 2, 0, -28),
                (0, 0, 0, 1, 28),
                (0, 0, 1, 0, -32),
                (0, 0, 0, 0, 28),
            ]),
            vec![0, 0, 1, 1],
        ),
        (tzpoly(&[(0, 0, 1, 0, 24)]), vec![0, 0, 1, 0]),
        (tzpoly(&[(0, 0, 0, 1, 48)]), vec![0, 0, 0, 1]),
    ])
}

/// Series check of the differential equation for the G2 generating function:
/// expand `G` in all four variables (the `t^{p,q}` coefficients are then the
/// characters as `z`-polynomials), apply both operators, and require the
/// difference to vanish identically on the box.  The `z`-caps carry a margin
/// of 3 over the observed support so the degree-raising coefficients of the
/// `z`-operator cannot push genuine terms out of the box.
pub fn pde_check_g2(order: i64) -> Vec<IdentityOutcome> {
    assert!(order >= 0);
    let z1cap = 3 * order as i32 + 4;
    let z2cap = 2 * order as i32 + 4;
    let bx = SeriesBox::nonneg(&[order as i32, order as i32, z1cap, z2cap]);
    let series = CharGf::build(AlgebraId::G2)
        .as_z_gf()
        .expand(&bx)
        .expect("z-form expansion");

    let mut out = Vec::new();
    let z1_top = series.support_range(2).map(|(_, hi)| hi).unwrap_or(0);
    let z2_top = series.support_range(3).map(|(_, hi)| hi).unwrap_or(0);
    if z1_top > z1cap - 3 || z2_top > z2cap - 3 {
        out.push(IdentityOutcome::fail(
            "z-support margin",
            format!("support ({z1_top}, {z2_top}) too close to caps ({z1cap}, {z2cap})"),
        ));
        return out;
    }
    out.push(IdentityOutcome::pass(
        "z-support margin",
        format!("support ({z1_top}, {z2_top}) within caps ({z1cap}, {z2cap}) minus 3"),
    ));

    let lhs = cs_operator_t().apply_series(&series);
    let rhs = cs_operator_z_g2().apply_series(&series);
    let mut residual = lhs;
    residual.add_assign_series(&rhs.mul_poly_trunc(&LaurentPoly::constant(&tz_vars(), -1)));
    let coeff_count = series.num_coeffs();
    out.push(if residual.is_zero() {
        IdentityOutcome::pass(
            "(Lt - Lz) G = 0",
            format!("residual vanishes on {coeff_count} coefficients (t-order {order})"),
        )
    } else {
        let (e, c) = residual
            .support()
            .next()
            .expect("nonzero residual has support");
        IdentityOutcome::fail(
            "(Lt - Lz) G = 0",
            format!("first nonzero residual coefficient {c} at {e:?}"),
        )
    });
    out
}

/// The printed two-variable polynomial `P` with
/// `E(t1,t2) = P / ((1-t1)^6 (1-t2)^6)` the G2 dimension generating function.
fn g2_dimension_numerator() -> LaurentPoly {
    let vars = VarSet::new(&["t1", "t2"]);
    LaurentPoly::from_terms(
        &vars,
        &[
            (&[0, 0], 1),
            (&[1, 0], 1),
            (&[0, 1], 8),
            (&[1, 1], -26),
            (&[2, 1], 15),
            (&[3, 1], -6),
            (&[4, 1], 1),
            (&[0, 2], 8),
            (&[1, 2], -41),
            (&[2, 2], 78),
            (&[3, 2], -41),
            (&[4, 2], 8),
            (&[0, 3], 1),
            (&[1, 3], -6),
            (&[2, 3], 15),
            (&[3, 3], -26),
            (&[4, 3], 8),
            (&[3, 4], 1),
            (&[4, 4], 1),
        ],
    )
}

/// Dimension generating functions: substituting the fundamental dimensions
/// for `(z1, z2)` in `G` must produce the generating function of Weyl
/// dimensions.  For G2 this is checked both by cross-multiplication against
/// the closed form `P/((1-t1)^6(1-t2)^6)` and by expanding that closed form;
/// for A2 and C2 the specialized `G` is expanded directly.
pub fn dimension_gf_checks(order: i64) -> Vec<IdentityOutcome> {
    let order = order as i32;
    let tvars = VarSet::new(&["t1", "t2"]);
    let mut out = Vec::new();

    let dims_match = |name: &str, num: LaurentPoly, factors: Vec<(LaurentPoly, u32)>, alg| {
        let gf = RationalGF::new(num, factors).expect("dimension gf");
        let series = gf
            .expand(&SeriesBox::nonneg(&[order, order]))
            .expect("expand");
        for p in 0..=order {
            for q in 0..=order {
                let got = series.coeff(&[p, q]).expect("in box");
                let want = weyl_dim(alg, p as i64, q as i64);
                if got != want.into() {
                    return IdentityOutcome::fail(
                        name,
                        format!("coefficient ({p},{q}) is {got}, Weyl dimension is {want}"),
                    );
                }
            }
        }
        IdentityOutcome::pass(name, format!("all dimensions match for p,q <= {order}"))
    };

    // A2: z -> (3, 3).
    let (num, dens) = CharGf::build(AlgebraId::A2).specialize_z(3, 3);
    out.push(dims_match(
        "A2 dimension specialization",
        num,
        dens.into_iter().map(|f| (f, 1)).collect(),
        AlgebraId::A2,
    ));

    // C2: z -> (4, 5).
    let (num, dens) = CharGf::build(AlgebraId::C2).specialize_z(4, 5);
    out.push(dims_match(
        "C2 dimension specialization",
        num,
        dens.into_iter().map(|f| (f, 1)).collect(),
        AlgebraId::C2,
    ));

    // G2: z -> (7, 14), checked against P/((1-t1)^6(1-t2)^6).
    let (num, dens) = CharGf::build(AlgebraId::G2).specialize_z(7, 14);
    let p = g2_dimension_numerator();
    let one_minus = |v: usize| {
        LaurentPoly::from_terms(
            &tvars,
            &[(&[0, 0], 1), (&[(v == 0) as i32, (v == 1) as i32], -1)],
        )
    };
    // Cross-multiplication: num * (1-t1)^6 (1-t2)^6 == P * den1 * den2.
    let lhs = &num * &(&one_minus(0).pow(6) * &one_minus(1).pow(6));
    let rhs = &p * &(&dens[0] * &dens[1]);
    out.push(if lhs == rhs {
        IdentityOutcome::pass(
            "G2 dimension gf cross-multiplication",
            "specialized G equals P/((1-t1)^6(1-t2)^6)".into(),
        )
    } else {
        IdentityOutcome::fail(
            "G2 dimension gf cross-multiplication",
            format!("difference: {}", &lhs - &rhs),
        )
    });
    out.push(dims_match(
        "G2 dimension gf expansion",
        p,
        vec![(one_minus(0), 6), (one_minus(1), 6)],
        AlgebraId::G2,
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freudenthal::oracle_character;
    use num_bigint::BigInt;

    #[test]
    fn fundamental_characters_match_oracle() {
        // This is the convention pin: the hardcoded decompositions must be
        // exactly what the recursion produces for the fundamentals.
        for alg in AlgebraId::ALL {
            let (z1, z2) = fundamental_characters(alg);
            assert_eq!(z1, oracle_character(alg, 1, 0), "{alg} z1");
            assert_eq!(z2, oracle_character(alg, 0, 1), "{alg} z2");
        }
    }

    #[test]
    fn z_form_transcription_spot_checks() {
        let a2 = CharGf::build(AlgebraId::A2);
        assert_eq!(
            a2.numerator_z(),
            &tzpoly(&[(0, 0, 0, 0, 1), (1, 1, 0, 0, -1)])
        );
        let c2 = CharGf::build(AlgebraId::C2);
        assert_eq!(c2.numerator_z().num_terms(), 5);
        assert_eq!(c2.numerator_z().coeff(&[1, 1, 1, 0]), BigInt::from(-1));
        let g2 = CharGf::build(AlgebraId::G2);
        // t2^3 block of the second factor: coefficient of t2^3 z1^3 is 2,
        // of t2^3 z2^2 is -1, of t2^3 z1 z2 is -4.
        let d2 = &g2.den_factors_z()[1];
        assert_eq!(d2.coeff(&[0, 3, 3, 0]), BigInt::from(2));
        assert_eq!(d2.coeff(&[0, 3, 0, 2]), BigInt::from(-1));
        assert_eq!(d2.coeff(&[0, 3, 1, 1]), BigInt::from(-4));
        // numerator: coefficient of t1^2 t2^2 z1 is 2, of t1 t2 (z-free) is 2.
        assert_eq!(g2.numerator_z().coeff(&[2, 2, 1, 0]), BigInt::from(2));
        assert_eq!(g2.numerator_z().coeff(&[1, 1, 0, 0]), BigInt::from(2));
    }

    #[test]
    fn characters_extracted_from_gf_match_oracle_small() {
        for alg in AlgebraId::ALL {
            let chars = characters_from_gf(alg, 2, 2).unwrap();
            for ((p, q), ch) in chars {
                assert_eq!(ch, oracle_character(alg, p, q), "{alg} ({p},{q})");
            }
        }
    }

    #[test]
    fn trivial_and_fundamental_slices() {
        let chars = characters_from_gf(AlgebraId::A2, 1, 1).unwrap();
        let lookup = |p, q| {
            chars
                .iter()
                .find(|((a, b), _)| (*a, *b) == (p, q))
                .map(|(_, c)| c.clone())
                .unwrap()
        };
        assert_eq!(lookup(0, 0), LaurentPoly::one(&character_vars()));
        assert_eq!(lookup(1, 0), fundamental_characters(AlgebraId::A2).0);
    }

    #[test]
    fn clebsch_gordan_identities_hold() {
        for outcome in clebsch_gordan_checks_g2() {
            assert!(outcome.pass, "{}: {}", outcome.name, outcome.detail);
        }
    }

    #[test]
    fn eigenvalue_action_of_t_operator() {
        let op = cs_operator_t();
        for (p, q) in [(0i32, 0i32), (1, 0), (0, 1), (2, 3), (5, 1)] {
            let mono = LaurentPoly::monomial(&tz_vars(), &[p, q, 0, 0], 1);
            let eigen = 4 * p * p + 12 * q * q + 12 * p * q + 20 * p + 36 * q;
            assert_eq!(op.apply_poly(&mono), mono.scale_i64(i64::from(eigen)));
        }
    }

    #[test]
    fn z_operator_kills_constants() {
        let op = cs_operator_z_g2();
        assert!(op.apply_poly(&LaurentPoly::one(&tz_vars())).is_zero());
    }

    #[test]
    fn pde_residual_vanishes_at_low_order() {
        for outcome in pde_check_g2(3) {
            assert!(outcome.pass, "{}: {}", outcome.name, outcome.detail);
        }
    }

    #[test]
    fn dimension_generating_functions_agree() {
        for outcome in dimension_gf_checks(6) {
            assert!(outcome.pass, "{}: {}", outcome.name, outcome.detail);
        }
    }

    #[test]
    fn g2_dimension_numerator_values() {
        // E = P/((1-t1)^6(1-t2)^6): first coefficients are dim(0,0) = 1,
        // dim(1,0) = 7, dim(0,1) = 14.
        let p = g2_dimension_numerator();
        let tvars = VarSet::new(&["t1", "t2"]);
        let om = |v: usize| {
            LaurentPoly::from_terms(
                &tvars,
                &[(&[0, 0], 1), (&[(v == 0) as i32, (v == 1) as i32], -1)],
            )
        };
        let gf = RationalGF::new(p, vec![(om(0), 6), (om(1), 6)]).unwrap();
        let s = gf.expand(&SeriesBox::nonneg(&[2, 2])).unwrap();
        assert_eq!(s.coeff(&[0, 0]).unwrap(), BigInt::from(1));
        assert_eq!(s.coeff(&[1, 0]).unwrap(), BigInt::from(7));
        assert_eq!(s.coeff(&[0, 1]).unwrap(), BigInt::from(14));
    }
}
