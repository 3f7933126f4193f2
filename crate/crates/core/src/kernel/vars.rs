//! Variable contexts and exponent vectors.
//!
//! Every polynomial and truncated series carries a [`VarSet`]; arithmetic
//! between values with different contexts is refused with a context error
//! rather than silently reinterpreting exponent positions.

use std::sync::Arc;

/// An ordered list of distinct variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    /// Build a context from variable names.  Names must be nonempty and distinct.
    pub fn new(names: &[&str]) -> Self {
        assert!(
            !names.is_empty(),
            "variable context must name at least one variable"
        );
        let owned: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        for (i, a) in owned.iter().enumerate() {
            assert!(
                !owned[..i].contains(a),
                "duplicate variable name {a:?} in context"
            );
        }
        VarSet(Arc::new(owned))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.0[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// Short description used in error messages, e.g. `(t1,t2,x1,x2)`.
    pub fn describe(&self) -> String {
        format!("({})", self.0.join(","))
    }
}

/// Exponent vector with one signed entry per context variable.
///
/// The derived `Ord` is lexicographic on the entries; it is the canonical
/// term order used for rendering and for `BTreeMap`-backed polynomials.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpVec(pub Vec<i32>);

impl ExpVec {
    pub fn zeros(n: usize) -> Self {
        ExpVec(vec![0; n])
    }

    pub fn from_slice(exps: &[i32]) -> Self {
        ExpVec(exps.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise sum (exponents of a product of monomials).
    pub fn add(&self, other: &ExpVec) -> ExpVec {
        debug_assert_eq!(self.0.len(), other.0.len());
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn varset_lookup() {
        let v = VarSet::new(&["t1", "t2", "x1", "x2"]);
        assert_eq!(v.len(), 4);
        assert_eq!(v.index_of("x1"), Some(2));
        assert_eq!(v.index_of("y1"), None);
        assert_eq!(v.describe(), "(t1,t2,x1,x2)");
    }

    #[test]
    #[should_panic(expected = "duplicate")]
    fn varset_rejects_duplicates() {
        VarSet::new(&["x", "x"]);
    }

    #[test]
    fn expvec_order_is_lexicographic() {
        let a = ExpVec::from_slice(&[-1, 5]);
        let b = ExpVec::from_slice(&[0, -9]);
        let c = ExpVec::from_slice(&[0, 0]);
        assert!(a < b && b < c);
    }
}
