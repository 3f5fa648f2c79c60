//! Laplacian characteristic polynomials with integer roots, kept factored as
//! a root → multiplicity map, and the union/join calculus on them.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};

/// `∏ (x − λ)^m` over non-negative integer roots. The empty map is the
/// constant polynomial 1 of the null graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FactoredCharPoly {
    roots: BTreeMap<u64, u64>,
}

impl FactoredCharPoly {
    pub fn one() -> Self {
        Self::default()
    }

    /// `Θ(K_k) = x (x − k)^{k−1}`.
    pub fn clique(k: u64) -> Self {
        let mut p = Self::one();
        if k > 0 {
            p.insert(0, 1);
            p.insert(k, k - 1);
        }
        p
    }

    /// `Θ` of the edgeless graph on `n` vertices, `x^n`.
    pub fn edgeless(n: u64) -> Self {
        let mut p = Self::one();
        p.insert(0, n);
        p
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut p = Self::one();
        for (root, mult) in pairs {
            p.insert(root, mult);
        }
        p
    }

    /// Adds `mult` copies of `root`; zero multiplicities are ignored.
    pub fn insert(&mut self, root: u64, mult: u64) {
        if mult > 0 {
            *self.roots.entry(root).or_insert(0) += mult;
        }
    }

    /// Removes one copy of `root`, failing if it is not a root.
    pub fn remove_one(&mut self, root: u64) -> Result<()> {
        match self.roots.get_mut(&root) {
            Some(m) if *m > 1 => *m -= 1,
            Some(_) => {
                self.roots.remove(&root);
            }
            None => {
                return Err(Error::Contradiction(format!(
                    "cannot divide by (x-{root}): not a root of {self}"
                )))
            }
        }
        Ok(())
    }

    pub fn multiplicity(&self, root: u64) -> u64 {
        self.roots.get(&root).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.roots.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn distinct_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn max_root(&self) -> Option<u64> {
        self.roots.keys().next_back().copied()
    }

    /// Ascending `(root, multiplicity)` pairs.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (u64, u64)> + '_ {
        self.roots.iter().map(|(&r, &m)| (r, m))
    }

    /// Descending `(root, multiplicity)` pairs.
    pub fn pairs_descending(&self) -> Vec<(u64, u64)> {
        self.iter().rev().collect()
    }

    /// Sum of roots with multiplicity, the trace of the Laplacian.
    pub fn root_sum(&self) -> u128 {
        self.iter().map(|(r, m)| r as u128 * m as u128).sum()
    }

    /// `Θ(x − d)`: every root moves up by `d`.
    pub fn shifted(&self, d: u64) -> Self {
        FactoredCharPoly {
            roots: self.roots.iter().map(|(&r, &m)| (r + d, m)).collect(),
        }
    }

    /// Multiplies in another polynomial (multiplicities add).
    pub fn absorb(&mut self, other: &FactoredCharPoly) {
        for (r, m) in other.iter() {
            self.insert(r, m);
        }
    }
}

impl fmt::Display for FactoredCharPoly {
    /// `x^a (x-λ1)^m1 (x-λ2)^m2 …`, zero first and then roots descending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.roots.is_empty() {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        if let Some(m) = self.roots.get(&0) {
            parts.push(format!("x^{m}"));
        }
        for (r, m) in self.iter().rev().filter(|&(r, _)| r > 0) {
            parts.push(format!("(x-{r})^{m}"));
        }
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for FactoredCharPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.roots.len()))?;
        for (r, m) in self.iter().rev() {
            seq.serialize_element(&[r, m])?;
        }
        seq.end()
    }
}

/// `Θ(Γ_1 + … + Γ_r) = ∏ Θ(Γ_i)`.
pub fn union_charpoly<'a>(
    parts: impl IntoIterator<Item = &'a FactoredCharPoly>,
) -> FactoredCharPoly {
    let mut out = FactoredCharPoly::one();
    for p in parts {
        out.absorb(p);
    }
    out
}

/// `Θ(Γ_1 ∨ Γ_2) = x (x − n1 − n2) / ((x − n1)(x − n2)) · Θ(Γ_1, x − n2) Θ(Γ_2, x − n1)`.
pub fn join_charpoly(
    p1: &FactoredCharPoly,
    n1: u64,
    p2: &FactoredCharPoly,
    n2: u64,
) -> Result<FactoredCharPoly> {
    for (p, n) in [(p1, n1), (p2, n2)] {
        if p.degree() != n {
            return Err(Error::Contradiction(format!(
                "polynomial {p} has degree {} but the graph has {n} vertices",
                p.degree()
            )));
        }
        if p.max_root().is_some_and(|r| r > n) {
            return Err(Error::Contradiction(format!(
                "polynomial {p} has a root above its vertex count {n}"
            )));
        }
    }
    if n1 == 0 {
        return Ok(p2.clone());
    }
    if n2 == 0 {
        return Ok(p1.clone());
    }
    let mut out = p1.shifted(n2);
    out.absorb(&p2.shifted(n1));
    out.remove_one(n1)?;
    out.remove_one(n2)?;
    out.insert(0, 1);
    out.insert(n1 + n2, 1);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_and_union_examples() {
        let k2 = FactoredCharPoly::clique(2);
        assert_eq!(k2.to_string(), "x^1 (x-2)^1");
        let three_k2 = union_charpoly([&k2, &k2, &k2]);
        assert_eq!(three_k2, FactoredCharPoly::from_pairs([(0, 3), (2, 3)]));
        assert_eq!(union_charpoly([]).to_string(), "1");
        assert_eq!(
            union_charpoly([&FactoredCharPoly::clique(1)]).to_string(),
            "x^1"
        );
    }

    #[test]
    fn join_examples() {
        let k1 = FactoredCharPoly::clique(1);
        assert_eq!(
            join_charpoly(&k1, 1, &k1, 1).unwrap(),
            FactoredCharPoly::clique(2)
        );

        let k6 = FactoredCharPoly::clique(6);
        let three_k6 = union_charpoly([&k6, &k6, &k6]);
        let gamma = join_charpoly(&FactoredCharPoly::clique(2), 2, &three_k6, 18).unwrap();
        assert_eq!(
            gamma,
            FactoredCharPoly::from_pairs([(0, 1), (20, 2), (2, 2), (8, 15)])
        );
    }

    #[test]
    fn apex_join_shifts_by_one() {
        // K_1 ∨ Γ on n vertices: x (x − n) / (x − 1) · Θ(Γ, x − 1)
        let inner = FactoredCharPoly::from_pairs([(0, 2), (3, 1), (1, 1)]);
        let joined = join_charpoly(&FactoredCharPoly::clique(1), 1, &inner, 4).unwrap();
        let mut expected = inner.shifted(1);
        expected.remove_one(1).unwrap();
        expected.insert(0, 1);
        expected.insert(5, 1);
        assert_eq!(joined, expected);
    }

    #[test]
    fn join_rejects_inconsistent_input() {
        let bad = FactoredCharPoly::from_pairs([(2, 2)]);
        assert!(join_charpoly(&bad, 2, &FactoredCharPoly::clique(1), 1).is_err());
        assert!(join_charpoly(
            &FactoredCharPoly::clique(3),
            2,
            &FactoredCharPoly::clique(1),
            1
        )
        .is_err());
        let null = FactoredCharPoly::one();
        let k3 = FactoredCharPoly::clique(3);
        assert_eq!(join_charpoly(&null, 0, &k3, 3).unwrap(), k3);
    }

    #[test]
    fn json_is_descending_pairs() {
        let p = FactoredCharPoly::from_pairs([(0, 1), (8, 7)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[8,7],[0,1]]");
    }
}
