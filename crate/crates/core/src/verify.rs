//! Cross-validation suites.
//!
//! Each suite bundles one family of exact checks into a [`SuiteReport`]:
//! counted cases, any value mismatches (with the per-method values), and
//! named identity outcomes.  The command-line `verify` verb and the
//! acceptance tests both drive these functions, so a suite passing here is
//! exactly the condition under which those pass.

use std::time::Instant;

use crate::chargen::{
    characters_from_gf, clebsch_gordan_checks_g2, dimension_gf_checks, pde_check_g2,
};
use crate::closed::{f_g2_gf_check, min_form_check_a2, mu_closed};
use crate::freudenthal::{freudenthal_table, oracle_character, oracle_multiplicity};
use crate::lie::{weyl_dim, AlgebraId};
use crate::multgen::{mult_from_gf, reconstruct_g2, G2_T_DEGREE_GUESS};
use crate::report::{IdentityOutcome, Mismatch, SuiteReport};

fn finish(mut report: SuiteReport, started: Instant) -> SuiteReport {
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    report
}

/// Three-way agreement between the closed forms, the generating-function
/// expansion, and the recursion, for every dominant weight with
/// `m + n <= 4` and all highest weights `p <= pmax, q <= qmax`.
pub fn suite_three_way(algebras: &[AlgebraId], pmax: i64, qmax: i64) -> SuiteReport {
    let started = Instant::now();
    let mut report = SuiteReport::new("three-way");
    for &alg in algebras {
        for p in 0..=pmax {
            for q in 0..=qmax {
                for m in 0..=4 {
                    for n in 0..=(4 - m) {
                        report.cases += 1;
                        let formula = mu_closed(alg, p, q, m, n);
                        let genfun = mult_from_gf(alg, p, q, m, n);
                        let oracle = oracle_multiplicity(alg, p, q, m, n);
                        let agree = matches!(
                            (&formula, &genfun),
                            (Ok(f), Ok(g)) if *f >= 0 && *f as u64 == oracle && *g == oracle
                        );
                        if !agree {
                            let mut mm = Mismatch::at(alg, p, q, m, n);
                            mm.record("formula", &render(&formula));
                            mm.record("genfun", &render(&genfun));
                            mm.record("freudenthal", &oracle.to_string());
                            report.mismatches.push(mm);
                        }
                    }
                }
            }
        }
    }
    finish(report, started)
}

fn render<T: std::fmt::Display, E: std::fmt::Display>(r: &Result<T, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// Characters extracted from the character generating function against the
/// recursion, term by term, plus their evaluations at `x1 = x2 = 1`.
pub fn suite_characters(algebras: &[AlgebraId], pmax: i64, qmax: i64) -> SuiteReport {
    let started = Instant::now();
    let mut report = SuiteReport::new("characters");
    for &alg in algebras {
        match characters_from_gf(alg, pmax, qmax) {
            Ok(chars) => {
                for ((p, q), ch) in chars {
                    report.cases += 1;
                    let expected = oracle_character(alg, p, q);
                    if ch != expected {
                        let mut mm = Mismatch::at(alg, p, q, 0, 0);
                        mm.record("genfun-character", &ch.to_string());
                        mm.record("freudenthal-character", &expected.to_string());
                        report.mismatches.push(mm);
                        continue;
                    }
                    let dim = ch.sum_coeffs();
                    let expected_dim = weyl_dim(alg, p, q);
                    if dim != expected_dim.into() {
                        let mut mm = Mismatch::at(alg, p, q, 0, 0);
                        mm.record("character-at-1", &dim.to_string());
                        mm.record("weyl-dim", &expected_dim.to_string());
                        report.mismatches.push(mm);
                    }
                }
            }
            Err(e) => {
                report
                    .identities
                    .push(IdentityOutcome::fail("character extraction", e.to_string()));
            }
        }
    }
    report.identities.push(IdentityOutcome::from_eq(
        "G2 fundamental dimensions are 7 and 14",
        format!(
            "{}, {}",
            weyl_dim(AlgebraId::G2, 1, 0),
            weyl_dim(AlgebraId::G2, 0, 1)
        ),
        "7, 14".to_string(),
    ));
    finish(report, started)
}

/// The four G2 Clebsch-Gordan product identities, their three solved forms,
/// and the dimension shadows.
pub fn suite_cg_g2() -> SuiteReport {
    let started = Instant::now();
    let mut report = SuiteReport::new("cg-g2");
    report.identities = clebsch_gordan_checks_g2();
    report.cases = report.identities.len() as u64;
    finish(report, started)
}

/// Series check of the differential equation satisfied by the G2 character
/// generating function, through total `t`-order `order`.
pub fn suite_pde_g2(order: i64) -> SuiteReport {
    let started = Instant::now();
    let mut report = SuiteReport::new("pde-g2");
    report.identities = pde_check_g2(order);
    report.cases = report.identities.len() as u64;
    finish(report, started)
}

/// Dimension generating functions for all three algebras (the G2 one both
/// by cross-multiplication and by expansion).
pub fn suite_dim_gf(order: i64) -> SuiteReport {
    let started = Instant::now();
    let mut report = SuiteReport::new("dim-gf");
    report.identities = dimension_gf_checks(order);
    report.cases = report.identities.len() as u64;
    finish(report, started)
}

/// Closed-form reformulations: the A2 `min(p, q)` identity and the G2
/// main-term generating function.
pub fn suite_min_form(bound: i64) -> SuiteReport {
    let started = Instant::now();
    let mut report = SuiteReport::new("min-form");
    report.identities = min_form_check_a2(bound);
    report.identities.extend(f_g2_gf_check(bound.min(12)));
    report.cases = report.identities.len() as u64;
    finish(report, started)
}

/// The G2 numerator reconstruction with its audit trail.
pub fn suite_h_reconstruct() -> SuiteReport {
    let started = Instant::now();
    let mut report = SuiteReport::new("h-reconstruct");
    match reconstruct_g2(G2_T_DEGREE_GUESS) {
        Ok(rec) => {
            report.identities = rec.checks.clone();
            report.identities.push(IdentityOutcome::from_eq(
                "numerator has the 24 coefficient slots",
                rec.artifact().matches("# g[").count(),
                24,
            ));
        }
        Err(e) => {
            report
                .identities
                .push(IdentityOutcome::fail("reconstruction", e.to_string()));
        }
    }
    report.cases = report.identities.len() as u64;
    finish(report, started)
}

/// Dimension checksums straight from the recursion tables:
/// sum of multiplicity times orbit size over the dominant weights.
pub fn suite_checksums(algebras: &[AlgebraId], bound: i64) -> SuiteReport {
    let started = Instant::now();
    let mut report = SuiteReport::new("checksums");
    for &alg in algebras {
        for p in 0..=bound {
            for q in 0..=bound {
                report.cases += 1;
                let total = freudenthal_table(alg, p, q).dimension_checksum();
                let expected = weyl_dim(alg, p, q);
                if total != expected {
                    let mut mm = Mismatch::at(alg, p, q, 0, 0);
                    mm.record("orbit-weighted-sum", &total.to_string());
                    mm.record("weyl-dim", &expected.to_string());
                    report.mismatches.push(mm);
                }
            }
        }
    }
    finish(report, started)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let algs = AlgebraId::ALL;
        assert!(suite_three_way(&algs, 3, 3).passed());
        assert!(suite_characters(&algs, 1, 1).passed());
        assert!(suite_cg_g2().passed());
        assert!(suite_pde_g2(2).passed());
        assert!(suite_dim_gf(4).passed());
        assert!(suite_min_form(8).passed());
        assert!(suite_checksums(&algs, 3).passed());
    }

    #[test]
    fn reports_carry_case_counts() {
        let r = suite_three_way(&[AlgebraId::A2], 2, 2);
        // 3 x 3 highest weights x 15 weight keys.
        assert_eq!(r.cases, 9 * 15);
        assert!(r.passed());
        assert!(r.mismatches.is_empty());
    }
}
