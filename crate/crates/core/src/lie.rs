//! Root-system data and Weyl-group combinatorics for the rank-two simple
//! Lie algebras A2, C2 and G2.
//!
//! Weights live in fundamental-weight coordinates: the pair `[m, n]` stands
//! for `m*w1 + n*w2` where `w1, w2` are the fundamental weights.  In these
//! coordinates the `i`-th simple reflection is `w -> w - w[i] * alpha_i`,
//! with `alpha_i` the `i`-th row of the Cartan matrix.
//!
//! Inner products use an integer-scaled Gram matrix of the fundamental
//! weights.  The overall scale is irrelevant everywhere it is used (the
//! Freudenthal recursion and the Weyl dimension formula are invariant under
//! rescaling the form), so it is chosen to make all entries integers.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// The three rank-two simple Lie algebras.  `B2` is accepted as an input
/// alias for `C2` (they are isomorphic, with the two simple roots swapped;
/// the conventions here label the short root first, which matches `C2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraId {
    A2,
    C2,
    G2,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 3] = [AlgebraId::A2, AlgebraId::C2, AlgebraId::G2];

    /// Rows are the simple roots written in fundamental-weight coordinates.
    pub fn cartan(self) -> [[i64; 2]; 2] {
        match self {
            AlgebraId::A2 => [[2, -1], [-1, 2]],
            AlgebraId::C2 => [[2, -1], [-2, 2]],
            AlgebraId::G2 => [[2, -1], [-3, 2]],
        }
    }

    /// Integer-scaled Gram matrix of the fundamental weights,
    /// `gram[i][j] ~ <w_i, w_j>`.
    pub fn gram(self) -> [[i64; 2]; 2] {
        match self {
            AlgebraId::A2 => [[2, 1], [1, 2]],
            AlgebraId::C2 => [[1, 1], [1, 2]],
            AlgebraId::G2 => [[2, 3], [3, 6]],
        }
    }

    /// Positive roots as `(fundamental coordinates, simple-root coordinates)`.
    pub fn positive_roots(self) -> &'static [(Weight, [i64; 2])] {
        match self {
            AlgebraId::A2 => &[([2, -1], [1, 0]), ([-1, 2], [0, 1]), ([1, 1], [1, 1])],
            AlgebraId::C2 => &[
                ([2, -1], [1, 0]),
                ([-2, 2], [0, 1]),
                ([0, 1], [1, 1]),
                ([2, 0], [2, 1]),
            ],
            AlgebraId::G2 => &[
                ([2, -1], [1, 0]),
                ([-3, 2], [0, 1]),
                ([-1, 1], [1, 1]),
                ([1, 0], [2, 1]),
                ([3, -1], [3, 1]),
                ([0, 1], [3, 2]),
            ],
        }
    }

    /// `adj(cartan), det(cartan)`: `alpha_coords` of a weight `w` are
    /// `w * adj / det` when integral.
    fn cartan_adj_det(self) -> ([[i64; 2]; 2], i64) {
        let c = self.cartan();
        let det = c[0][0] * c[1][1] - c[0][1] * c[1][0];
        let adj = [[c[1][1], -c[0][1]], [-c[1][0], c[0][0]]];
        (adj, det)
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraId::A2 => "A2",
            AlgebraId::C2 => "C2",
            AlgebraId::G2 => "G2",
        })
    }
}

impl FromStr for AlgebraId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "A2" => Ok(AlgebraId::A2),
            "C2" | "B2" => Ok(AlgebraId::C2),
            "G2" => Ok(AlgebraId::G2),
            other => Err(format!(
                "unknown algebra {other:?} (expected A2, C2, B2 or G2)"
            )),
        }
    }
}

/// A weight in fundamental-weight coordinates.
pub type Weight = [i64; 2];

/// Scaled inner product `<a, b>` of two weights in fundamental coordinates.
pub fn inner(algebra: AlgebraId, a: Weight, b: Weight) -> i64 {
    let g = algebra.gram();
    a[0] * (g[0][0] * b[0] + g[0][1] * b[1]) + a[1] * (g[1][0] * b[0] + g[1][1] * b[1])
}

/// Apply the `i`-th simple reflection (`i` is 0 or 1).
pub fn reflect(algebra: AlgebraId, i: usize, w: Weight) -> Weight {
    let alpha = algebra.cartan()[i];
    [w[0] - w[i] * alpha[0], w[1] - w[i] * alpha[1]]
}

pub fn is_dominant(w: Weight) -> bool {
    w[0] >= 0 && w[1] >= 0
}

/// The unique dominant weight in the Weyl orbit of `w`, reached by applying
/// simple reflections at negative coordinates.
pub fn dominant_representative(algebra: AlgebraId, w: Weight) -> Weight {
    let mut w = w;
    for _ in 0..1000 {
        if w[0] < 0 {
            w = reflect(algebra, 0, w);
        } else if w[1] < 0 {
            w = reflect(algebra, 1, w);
        } else {
            return w;
        }
    }
    unreachable!("dominant representative walk did not terminate for {w:?}");
}

/// The full Weyl orbit of `w`, sorted and without repeats.
pub fn weyl_orbit(algebra: AlgebraId, w: Weight) -> Vec<Weight> {
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    let mut frontier = vec![w];
    seen.insert(w);
    while let Some(v) = frontier.pop() {
        for i in 0..2 {
            let r = reflect(algebra, i, v);
            if seen.insert(r) {
                frontier.push(r);
            }
        }
    }
    seen.into_iter().collect()
}

/// Order of the Weyl group (orbit size of the regular weight `rho`).
pub fn weyl_order(algebra: AlgebraId) -> usize {
    weyl_orbit(algebra, [1, 1]).len()
}

/// Coordinates of `w` in the simple-root basis, or `None` if `w` is not in
/// the root lattice.
pub fn alpha_coords(algebra: AlgebraId, w: Weight) -> Option<[i64; 2]> {
    let (adj, det) = algebra.cartan_adj_det();
    let num = [
        w[0] * adj[0][0] + w[1] * adj[1][0],
        w[0] * adj[0][1] + w[1] * adj[1][1],
    ];
    if num[0] % det == 0 && num[1] % det == 0 {
        Some([num[0] / det, num[1] / det])
    } else {
        None
    }
}

/// `true` when `high - low` is a nonnegative integer combination of simple
/// roots, i.e. `low` can occur as a weight of the irreducible with highest
/// weight `high`.
pub fn is_below(algebra: AlgebraId, high: Weight, low: Weight) -> bool {
    let diff = [high[0] - low[0], high[1] - low[1]];
    matches!(alpha_coords(algebra, diff), Some([c1, c2]) if c1 >= 0 && c2 >= 0)
}

/// All dominant weights `mu <= lambda`, each paired with the simple-root
/// coordinates of `lambda - mu`, sorted by increasing depth `c1 + c2`
/// (so `lambda` itself comes first).
pub fn dominant_weights_below(algebra: AlgebraId, lambda: Weight) -> Vec<(Weight, [i64; 2])> {
    assert!(is_dominant(lambda), "highest weight must be dominant");
    let c = algebra.cartan();
    // A dominant mu <= lambda satisfies 0 <= c_j <= (lambda in alpha coords)_j
    // componentwise, because the inverse Cartan matrix is nonnegative.
    let bound = alpha_coords(algebra, lambda).unwrap_or_else(|| {
        // lambda need not lie in the root lattice; use the rational bound
        // rounded down.
        let (adj, det) = algebra.cartan_adj_det();
        [
            (lambda[0] * adj[0][0] + lambda[1] * adj[1][0]).div_euclid(det),
            (lambda[0] * adj[0][1] + lambda[1] * adj[1][1]).div_euclid(det),
        ]
    });
    let mut out = Vec::new();
    for c1 in 0..=bound[0] {
        for c2 in 0..=bound[1] {
            let mu = [
                lambda[0] - c1 * c[0][0] - c2 * c[1][0],
                lambda[1] - c1 * c[0][1] - c2 * c[1][1],
            ];
            if is_dominant(mu) {
                out.push((mu, [c1, c2]));
            }
        }
    }
    out.sort_by_key(|&(_, [c1, c2])| (c1 + c2, c1));
    out
}

/// Dimension of the irreducible with highest weight `(p, q)` by the Weyl
/// product formula.  Exact integer arithmetic; the final division is
/// asserted to be exact.
pub fn weyl_dim(algebra: AlgebraId, p: i64, q: i64) -> i128 {
    assert!(p >= 0 && q >= 0, "highest weight must be dominant");
    let rho_shift = [p + 1, q + 1];
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for &(alpha, _) in algebra.positive_roots() {
        num *= i128::from(inner(algebra, rho_shift, alpha));
        den *= i128::from(inner(algebra, [1, 1], alpha));
    }
    assert!(num % den == 0, "Weyl dimension product must divide exactly");
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_group_orders() {
        assert_eq!(weyl_order(AlgebraId::A2), 6);
        assert_eq!(weyl_order(AlgebraId::C2), 8);
        assert_eq!(weyl_order(AlgebraId::G2), 12);
    }

    #[test]
    fn algebra_parsing_accepts_b2_alias() {
        assert_eq!("a2".parse::<AlgebraId>().unwrap(), AlgebraId::A2);
        assert_eq!("B2".parse::<AlgebraId>().unwrap(), AlgebraId::C2);
        assert_eq!("g2".parse::<AlgebraId>().unwrap(), AlgebraId::G2);
        assert!("D4".parse::<AlgebraId>().is_err());
    }

    #[test]
    fn simple_roots_have_expected_lengths() {
        // alpha1 is the short root in C2 and G2; A2 is simply laced.
        let sq = |alg: AlgebraId, i: usize| {
            let a = alg.cartan()[i];
            inner(alg, a, a)
        };
        assert_eq!(sq(AlgebraId::A2, 0), sq(AlgebraId::A2, 1));
        assert_eq!(2 * sq(AlgebraId::C2, 0), sq(AlgebraId::C2, 1));
        assert_eq!(3 * sq(AlgebraId::G2, 0), sq(AlgebraId::G2, 1));
    }

    #[test]
    fn cartan_matrix_is_consistent_with_gram() {
        // cartan[i][j] == 2 <alpha_i, alpha_j> / <alpha_j, alpha_j>
        for alg in AlgebraId::ALL {
            let c = alg.cartan();
            for i in 0..2 {
                for j in 0..2 {
                    let a_i = c[i];
                    let a_j = c[j];
                    let num = 2 * inner(alg, a_i, a_j);
                    let den = inner(alg, a_j, a_j);
                    assert_eq!(num % den, 0);
                    assert_eq!(num / den, c[i][j], "{alg} entry ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn positive_root_coordinates_agree() {
        for alg in AlgebraId::ALL {
            for &(fund, alpha) in alg.positive_roots() {
                let c = alg.cartan();
                let rebuilt = [
                    alpha[0] * c[0][0] + alpha[1] * c[1][0],
                    alpha[0] * c[0][1] + alpha[1] * c[1][1],
                ];
                assert_eq!(rebuilt, fund);
                assert_eq!(alpha_coords(alg, fund), Some(alpha));
            }
        }
    }

    #[test]
    fn rho_is_half_sum_of_positive_roots() {
        for alg in AlgebraId::ALL {
            let mut sum = [0i64, 0];
            for &(fund, _) in alg.positive_roots() {
                sum = [sum[0] + fund[0], sum[1] + fund[1]];
            }
            assert_eq!(sum, [2, 2], "{alg}");
        }
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(weyl_orbit(AlgebraId::A2, [1, 0]).len(), 3);
        assert_eq!(weyl_orbit(AlgebraId::A2, [1, 1]).len(), 6);
        assert_eq!(weyl_orbit(AlgebraId::C2, [1, 0]).len(), 4);
        assert_eq!(weyl_orbit(AlgebraId::C2, [0, 1]).len(), 4);
        assert_eq!(weyl_orbit(AlgebraId::C2, [1, 1]).len(), 8);
        assert_eq!(weyl_orbit(AlgebraId::G2, [1, 0]).len(), 6);
        assert_eq!(weyl_orbit(AlgebraId::G2, [0, 1]).len(), 6);
        assert_eq!(weyl_orbit(AlgebraId::G2, [2, 1]).len(), 12);
        assert_eq!(weyl_orbit(AlgebraId::G2, [0, 0]).len(), 1);
    }

    #[test]
    fn seven_dimensional_orbit_contents() {
        // Weights of the 7-dimensional G2 representation: the orbit of [1,0]
        // plus the zero weight.
        let orbit = weyl_orbit(AlgebraId::G2, [1, 0]);
        let expected: Vec<Weight> = vec![[-2, 1], [-1, 0], [-1, 1], [1, -1], [1, 0], [2, -1]];
        assert_eq!(orbit, expected);
    }

    #[test]
    fn dominant_representative_walks_home() {
        assert_eq!(dominant_representative(AlgebraId::A2, [-1, 2]), [1, 1]);
        assert_eq!(dominant_representative(AlgebraId::G2, [-1, 0]), [1, 0]);
        assert_eq!(dominant_representative(AlgebraId::C2, [0, -1]), [0, 1]);
        for alg in AlgebraId::ALL {
            for w in weyl_orbit(alg, [3, 2]) {
                assert_eq!(dominant_representative(alg, w), [3, 2]);
            }
        }
    }

    #[test]
    fn dominant_weights_below_examples() {
        let take = |alg, lam| {
            dominant_weights_below(alg, lam)
                .into_iter()
                .map(|(w, _)| w)
                .collect::<Vec<_>>()
        };
        assert_eq!(take(AlgebraId::A2, [1, 1]), vec![[1, 1], [0, 0]]);
        assert_eq!(take(AlgebraId::C2, [2, 0]), vec![[2, 0], [0, 1], [0, 0]]);
        assert_eq!(take(AlgebraId::G2, [0, 1]), vec![[0, 1], [1, 0], [0, 0]]);
        let g2_adjointish = take(AlgebraId::G2, [1, 1]);
        assert_eq!(g2_adjointish, vec![[1, 1], [2, 0], [0, 1], [1, 0], [0, 0]]);
        // A fundamental weight of A2 is alone below itself (the other weights
        // of the 3-dimensional representation are non-dominant).
        assert_eq!(take(AlgebraId::A2, [1, 0]), vec![[1, 0]]);
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dim(AlgebraId::A2, 1, 0), 3);
        assert_eq!(weyl_dim(AlgebraId::A2, 1, 1), 8);
        assert_eq!(weyl_dim(AlgebraId::A2, 2, 2), 27);
        assert_eq!(weyl_dim(AlgebraId::C2, 1, 0), 4);
        assert_eq!(weyl_dim(AlgebraId::C2, 0, 1), 5);
        assert_eq!(weyl_dim(AlgebraId::C2, 1, 1), 16);
        assert_eq!(weyl_dim(AlgebraId::C2, 2, 0), 10);
        assert_eq!(weyl_dim(AlgebraId::G2, 1, 0), 7);
        assert_eq!(weyl_dim(AlgebraId::G2, 0, 1), 14);
        assert_eq!(weyl_dim(AlgebraId::G2, 1, 1), 64);
        assert_eq!(weyl_dim(AlgebraId::G2, 2, 0), 27);
        assert_eq!(weyl_dim(AlgebraId::G2, 0, 2), 77);
        assert_eq!(weyl_dim(AlgebraId::G2, 3, 0), 77);
    }

    #[test]
    fn g2_dimension_matches_sextic_polynomial() {
        for p in 0..=20i64 {
            for q in 0..=20i64 {
                let sextic = i128::from(p + 1)
                    * i128::from(q + 1)
                    * i128::from(p + q + 2)
                    * i128::from(p + 2 * q + 3)
                    * i128::from(p + 3 * q + 4)
                    * i128::from(2 * p + 3 * q + 5);
                assert_eq!(sextic % 120, 0);
                assert_eq!(weyl_dim(AlgebraId::G2, p, q), sextic / 120);
            }
        }
    }

    #[test]
    fn a2_and_c2_dimension_polynomials() {
        for p in 0..=12i64 {
            for q in 0..=12i64 {
                let a2 = i128::from(p + 1) * i128::from(q + 1) * i128::from(p + q + 2);
                assert_eq!(a2 % 2, 0);
                assert_eq!(weyl_dim(AlgebraId::A2, p, q), a2 / 2);
                let c2 = i128::from(p + 1)
                    * i128::from(q + 1)
                    * i128::from(p + q + 2)
                    * i128::from(p + 2 * q + 3);
                assert_eq!(c2 % 6, 0);
                assert_eq!(weyl_dim(AlgebraId::C2, p, q), c2 / 6);
            }
        }
    }
}
