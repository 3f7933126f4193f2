//! Property tests for the exact-arithmetic kernel: Laurent polynomials form a
//! commutative ring, differentiation satisfies the Leibniz rule, integer
//! substitution is a ring homomorphism, and series expansion of a rational
//! function reconstructs its numerator when multiplied back by the
//! denominator.

use liemult_core::{LaurentPoly, RationalGF, SeriesBox, TruncSeries, VarSet};
use proptest::prelude::*;

fn vars3() -> VarSet {
    VarSet::new(&["x", "y", "z"])
}

/// Random Laurent polynomial in three variables: up to 6 terms, exponents in
/// [-3, 3], coefficients in [-9, 9].
fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-3i32..=3, 3), -9i64..=9), 0..6).prop_map(
        |terms| {
            let vars = vars3();
            let borrowed: Vec<(&[i32], i64)> =
                terms.iter().map(|(e, c)| (e.as_slice(), *c)).collect();
            LaurentPoly::from_terms(&vars, &borrowed)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn multiplication_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn subtraction_inverts_addition(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn one_is_multiplicative_identity(a in arb_poly()) {
        let one = LaurentPoly::one(a.vars());
        prop_assert_eq!(&a * &one, a);
    }

    #[test]
    fn leibniz_rule(a in arb_poly(), b in arb_poly(), v in 0usize..3) {
        let lhs = (&a * &b).diff(v);
        let rhs = &(&a.diff(v) * &b) + &(&a * &b.diff(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in arb_poly(), b in arb_poly(), c in -4i64..=4) {
        // Clear negative exponents in x first so integer substitution applies.
        let shift_a = -a.min_exp(0).unwrap_or(0).min(0);
        let shift_b = -b.min_exp(0).unwrap_or(0).min(0);
        let a = a.shift(&[shift_a, 0, 0]);
        let b = b.shift(&[shift_b, 0, 0]);
        if c == 0 {
            return Ok(());
        }
        let cval = num_bigint::BigInt::from(c);
        let lhs = (&a * &b).substitute_int(0, &cval).unwrap();
        let rhs = &a.substitute_int(0, &cval).unwrap() * &b.substitute_int(0, &cval).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn expansion_times_denominator_is_numerator(
        num_terms in prop::collection::vec((prop::collection::vec(0i32..=2, 2), -5i64..=5), 0..4),
        // Each factor is 1 - c * t1^e1 t2^e2 with e1+e2 >= 1.
        factor_data in prop::collection::vec((0i32..=2, 0i32..=2, 1i64..=2), 1..3),
    ) {
        let vars = VarSet::new(&["t1", "t2"]);
        let borrowed: Vec<(&[i32], i64)> =
            num_terms.iter().map(|(e, c)| (e.as_slice(), *c)).collect();
        let numerator = LaurentPoly::from_terms(&vars, &borrowed);
        let mut factors = Vec::new();
        for (e1, e2, c) in factor_data {
            let (e1, e2) = if e1 == 0 && e2 == 0 { (1, 1) } else { (e1, e2) };
            factors.push((
                LaurentPoly::from_terms(&vars, &[(&[0, 0], 1), (&[e1, e2], -c)]),
                1u32,
            ));
        }
        let f = RationalGF::new(numerator.clone(), factors).unwrap();
        let bx = SeriesBox::nonneg(&[7, 7]);
        let expanded = f.expand(&bx).unwrap();
        let mut back = expanded;
        for (fac, _) in f.factors() {
            back = back.mul_poly_trunc(fac);
        }
        prop_assert_eq!(back, TruncSeries::from_poly(&numerator, bx));
    }
}
