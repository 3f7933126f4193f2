//! Weight multiplicities by the Freudenthal recursion.
//!
//! For a dominant weight `mu` strictly below the highest weight `lambda`,
//!
//! ```text
//! (<l+r, l+r> - <m+r, m+r>) mult(mu)
//!     = 2 * sum_{alpha > 0} sum_{k >= 1} mult(mu + k*alpha) <mu + k*alpha, alpha>
//! ```
//!
//! with `r = rho = [1, 1]`.  The recursion runs over dominant weights in
//! order of increasing depth below `lambda`; non-dominant weights on the
//! right-hand side are looked up through their dominant representative, and
//! weights outside the table contribute zero.  Every division is checked to
//! be exact — the recursion is integer-valued in exact arithmetic, so a
//! remainder would mean a bug, not roundoff.
//!
//! This module is the reference oracle: the generating-function and
//! closed-form paths are tested against it, so it stays deliberately direct
//! (no Weyl-orbit tricks beyond the dominant-representative lookup).

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::kernel::{LaurentPoly, VarSet};
use crate::lie::{
    dominant_representative, dominant_weights_below, inner, is_dominant, weyl_orbit, AlgebraId,
    Weight,
};

/// Full multiplicity table of one irreducible representation, stored on
/// dominant weights only (multiplicity is Weyl-invariant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultTable {
    algebra: AlgebraId,
    highest: Weight,
    mults: BTreeMap<Weight, u64>,
}

impl MultTable {
    /// Run the recursion for highest weight `[p, q]`.
    pub fn compute(algebra: AlgebraId, p: i64, q: i64) -> MultTable {
        assert!(p >= 0 && q >= 0, "highest weight must be dominant");
        let lambda = [p, q];
        let doms = dominant_weights_below(algebra, lambda);
        let lam_shift = [p + 1, q + 1];
        let lam_norm = inner(algebra, lam_shift, lam_shift);

        let mut mults: BTreeMap<Weight, u64> = BTreeMap::new();
        mults.insert(lambda, 1);
        for &(mu, depth) in doms.iter().skip(1) {
            let mut rhs: i128 = 0;
            for &(alpha, alpha_c) in algebra.positive_roots() {
                let mut k = 1i64;
                loop {
                    // mu + k*alpha stays below lambda exactly while the
                    // simple-root coordinates of lambda - (mu + k*alpha)
                    // remain nonnegative.
                    if depth[0] - k * alpha_c[0] < 0 || depth[1] - k * alpha_c[1] < 0 {
                        break;
                    }
                    let w = [mu[0] + k * alpha[0], mu[1] + k * alpha[1]];
                    let m = lookup(&mults, algebra, w);
                    if m != 0 {
                        rhs += i128::from(m) * i128::from(inner(algebra, w, alpha));
                    }
                    k += 1;
                }
            }
            rhs *= 2;
            let mu_shift = [mu[0] + 1, mu[1] + 1];
            let lhs = i128::from(lam_norm - inner(algebra, mu_shift, mu_shift));
            assert!(lhs > 0, "Casimir gap must be positive below the top");
            assert!(rhs > 0 && rhs % lhs == 0, "recursion must divide exactly");
            mults.insert(mu, u64::try_from(rhs / lhs).expect("multiplicity fits u64"));
        }
        MultTable {
            algebra,
            highest: lambda,
            mults,
        }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn highest(&self) -> Weight {
        self.highest
    }

    /// Multiplicity of an arbitrary weight (any Weyl chamber); zero when the
    /// weight does not occur.
    pub fn multiplicity(&self, w: Weight) -> u64 {
        lookup(&self.mults, self.algebra, w)
    }

    /// The dominant weights that occur, with their multiplicities.
    pub fn dominant_entries(&self) -> impl Iterator<Item = (Weight, u64)> + '_ {
        self.mults.iter().map(|(&w, &m)| (w, m))
    }

    /// `sum_mu mult(mu) * |orbit(mu)|` over dominant weights — must equal the
    /// Weyl dimension, which is checked independently in the test suites.
    pub fn dimension_checksum(&self) -> i128 {
        self.mults
            .iter()
            .map(|(&w, &m)| i128::from(m) * weyl_orbit(self.algebra, w).len() as i128)
            .sum()
    }

    /// The character as a Laurent polynomial in `x1, x2` (formal exponentials
    /// of the fundamental weights).
    pub fn character(&self) -> LaurentPoly {
        let vars = character_vars();
        let mut terms: Vec<(Vec<i32>, i64)> = Vec::new();
        for (&mu, &m) in &self.mults {
            for w in weyl_orbit(self.algebra, mu) {
                terms.push((vec![w[0] as i32, w[1] as i32], m as i64));
            }
        }
        let borrowed: Vec<(&[i32], i64)> = terms.iter().map(|(e, c)| (e.as_slice(), *c)).collect();
        LaurentPoly::from_terms(&vars, &borrowed)
    }
}

fn lookup(mults: &BTreeMap<Weight, u64>, algebra: AlgebraId, w: Weight) -> u64 {
    let dom = if is_dominant(w) {
        w
    } else {
        dominant_representative(algebra, w)
    };
    mults.get(&dom).copied().unwrap_or(0)
}

/// The variable context shared by every character: `x1, x2`.
pub fn character_vars() -> VarSet {
    VarSet::new(&["x1", "x2"])
}

type TableCache = Mutex<HashMap<(AlgebraId, i64, i64), Arc<MultTable>>>;

static CACHE: OnceLock<TableCache> = OnceLock::new();

/// Cached multiplicity table for the irreducible with highest weight `(p, q)`.
pub fn freudenthal_table(algebra: AlgebraId, p: i64, q: i64) -> Arc<MultTable> {
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&(algebra, p, q)) {
        return Arc::clone(t);
    }
    // Compute outside the lock so concurrent tests do not serialize on one
    // long recursion; a race at worst computes the same table twice.
    let table = Arc::new(MultTable::compute(algebra, p, q));
    let mut guard = cache.lock().unwrap();
    Arc::clone(guard.entry((algebra, p, q)).or_insert(table))
}

/// Multiplicity of weight `(m, n)` in the irreducible with highest weight
/// `(p, q)`, by the recursion.
pub fn oracle_multiplicity(algebra: AlgebraId, p: i64, q: i64, m: i64, n: i64) -> u64 {
    freudenthal_table(algebra, p, q).multiplicity([m, n])
}

/// Character of the irreducible with highest weight `(p, q)`, by the
/// recursion.
pub fn oracle_character(algebra: AlgebraId, p: i64, q: i64) -> LaurentPoly {
    freudenthal_table(algebra, p, q).character()
}
