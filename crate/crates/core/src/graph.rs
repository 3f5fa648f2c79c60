//! Simple undirected graphs on `0..n` with dense bit-row adjacency, and the
//! power-graph constructions built on them.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

#[derive(Serialize)]
struct GraphJson<'a> {
    n: usize,
    edges: Vec<[usize; 2]>,
    labels: Vec<&'a str>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.check(u)?;
            g.check(v)?;
            if u == v {
                return Err(Error::Domain(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Bit row of `u`; bit `v` is set iff `u ~ v`.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adds `{u, v}`; loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            return;
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(w, &bits)| {
            let mut bits = bits;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            })
        })
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        components(self).len() <= 1
    }

    /// `self + other`; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    /// `self ∨ other`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }

    /// `n m` header, then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let fallback: Vec<String>;
        let labels: Vec<&str> = match &self.labels {
            Some(l) => l.iter().map(String::as_str).collect(),
            None => {
                fallback = (0..self.n).map(|v| v.to_string()).collect();
                fallback.iter().map(String::as_str).collect()
            }
        };
        serde_json::to_value(GraphJson {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels,
        })
        .expect("graph serializes")
    }
}

/// `u ~ v` iff `u ≠ v` and one lies in the cyclic subgroup of the other.
pub fn power_graph(group: &FiniteGroup) -> Graph {
    let mut g = Graph::empty(group.order());
    for u in group.elements() {
        for v in group.powers(u) {
            g.add_edge(u, v);
        }
    }
    let labels = group.elements().map(|x| group.element_label(x)).collect();
    g.with_labels(labels)
}

/// Power graph with the identity removed.
pub fn proper_power_graph(group: &FiniteGroup) -> Result<Graph> {
    if group.order() < 2 {
        return Err(Error::Domain("proper power graph needs |G| >= 2".into()));
    }
    let keep: Vec<usize> = group
        .elements()
        .filter(|&x| x != group.identity())
        .collect();
    induced_subgraph(&power_graph(group), &keep)
}

/// Power graph of `Z_n` minus the identity and all generators.
///
/// For prime `n` the result has no vertices.
pub fn reduced_cyclic_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "reduced cyclic graph needs n >= 2, got {n}"
        )));
    }
    let z = crate::group::cyclic_group(n)?;
    let keep: Vec<usize> = (1..n).filter(|&a| gcd(a, n) > 1).collect();
    induced_subgraph(&power_graph(&z), &keep)
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..g.n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut comp = Vec::new();
        while let Some(u) = queue.pop_front() {
            comp.push(u);
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn complement(g: &Graph) -> Graph {
    let mut c = Graph::empty(g.n);
    for u in 0..g.n {
        for v in u + 1..g.n {
            if !g.has_edge(u, v) {
                c.add_edge(u, v);
            }
        }
    }
    c.labels = g.labels.clone();
    c
}

pub fn is_complete(g: &Graph) -> bool {
    (0..g.n).all(|u| g.degree(u) + 1 == g.n)
}

/// Subgraph induced by `vertices` (deduplicated and sorted); vertex `i` of the
/// result is the `i`-th smallest requested vertex. Labels are carried over.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<Graph> {
    let mut vs = vertices.to_vec();
    vs.sort_unstable();
    vs.dedup();
    for &v in &vs {
        g.check(v)?;
    }
    let mut h = Graph::empty(vs.len());
    for (i, &u) in vs.iter().enumerate() {
        for (j, &v) in vs.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                h.add_edge(i, j);
            }
        }
    }
    if let Some(labels) = &g.labels {
        h.labels = Some(vs.iter().map(|&v| labels[v].clone()).collect());
    }
    Ok(h)
}
