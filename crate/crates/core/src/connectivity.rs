//! Vertex connectivity with a minimum separating set as witness.
//!
//! The flow route contracts true-twin classes (a minimum separator never
//! splits one) and runs vertex-capacitated max-flow between non-adjacent
//! classes, visiting sources in the order of Even's algorithm. The exhaustive
//! route tries all subsets by increasing size and serves as the oracle on
//! small graphs.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{components, is_complete, Graph};
use crate::twins::twin_partition;

/// `κ` and a vertex set of that size whose removal disconnects the graph or
/// leaves at most one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutCertificate {
    pub size: usize,
    pub separating_set: Vec<usize>,
}

/// Exhaustive search is refused above this many vertices.
pub const EXHAUSTIVE_LIMIT: usize = 20;

/// Whether deleting `set` leaves a disconnected graph or at most one vertex.
pub fn is_separating(g: &Graph, set: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut removed = vec![false; n];
    for &v in set {
        removed[v] = true;
    }
    let left: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    if left.len() <= 1 {
        return true;
    }
    let mut seen = removed;
    let mut queue = VecDeque::from([left[0]]);
    seen[left[0]] = true;
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                reached += 1;
                queue.push_back(v);
            }
        }
    }
    reached < left.len()
}

/// Exact `κ` by max-flow on the true-twin quotient.
pub fn vertex_connectivity(g: &Graph) -> CutCertificate {
    flow_connectivity(g, true)
}

/// Same as [`vertex_connectivity`] but with one flow node per vertex.
pub fn vertex_connectivity_uncontracted(g: &Graph) -> CutCertificate {
    flow_connectivity(g, false)
}

/// Smallest separating set by enumeration; `n <= EXHAUSTIVE_LIMIT`.
pub fn vertex_connectivity_exhaustive(g: &Graph) -> Result<CutCertificate> {
    let n = g.vertex_count();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::Domain(format!(
            "exhaustive connectivity limited to {EXHAUSTIVE_LIMIT} vertices, got {n}"
        )));
    }
    for k in 0..=n {
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            if is_separating(g, &subset) {
                return Ok(CutCertificate {
                    size: k,
                    separating_set: subset,
                });
            }
            // next k-combination in lexicographic order
            let Some(i) = (0..k).rev().find(|&i| subset[i] < n - k + i) else {
                break;
            };
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
        }
    }
    unreachable!("removing every vertex always separates")
}

#[allow(clippy::needless_range_loop)]
fn flow_connectivity(g: &Graph, contract: bool) -> CutCertificate {
    let n = g.vertex_count();
    if n == 0 || components(g).len() > 1 {
        return CutCertificate {
            size: 0,
            separating_set: Vec::new(),
        };
    }
    if is_complete(g) {
        return CutCertificate {
            size: n - 1,
            separating_set: (0..n - 1).collect(),
        };
    }

    // Neighbourhood of a non-universal vertex separates it from the rest.
    let v0 = (0..n)
        .filter(|&v| g.degree(v) + 1 < n)
        .min_by_key(|&v| (g.degree(v), v))
        .expect("non-complete graph has a non-universal vertex");
    let mut best = CutCertificate {
        size: g.degree(v0),
        separating_set: g.neighbors(v0).collect(),
    };

    let (members, weights, adjacent) = if contract {
        let t = twin_partition(g, false);
        let members: Vec<Vec<usize>> = t.classes.iter().map(|c| c.members.clone()).collect();
        let k = members.len();
        let weights = members.iter().map(|m| m.len() as u64).collect();
        let mut adjacent = vec![vec![false; k]; k];
        for a in 0..k {
            for b in a + 1..k {
                let adj = t.adjacent(g, a, b);
                adjacent[a][b] = adj;
                adjacent[b][a] = adj;
            }
        }
        (members, weights, adjacent)
    } else {
        let members: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        let adjacent = (0..n)
            .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
            .collect();
        (members, vec![1; n], adjacent)
    };

    let network = NodeNetwork::new(&weights, &adjacent);
    let mut prefix = 0u64;
    for s in 0..weights.len() {
        if prefix > best.size as u64 {
            break;
        }
        for t in s + 1..weights.len() {
            if adjacent[s][t] {
                continue;
            }
            if let Some((value, cut)) = network.min_cut(s, t, best.size as u64) {
                let mut set: Vec<usize> = cut
                    .iter()
                    .flat_map(|&c| members[c].iter().copied())
                    .collect();
                set.sort_unstable();
                debug_assert_eq!(set.len() as u64, value);
                best = CutCertificate {
                    size: set.len(),
                    separating_set: set,
                };
            }
        }
        prefix += weights[s];
    }
    best.separating_set.sort_unstable();
    best
}

const INF: u64 = u64::MAX / 4;

/// Node-capacitated undirected network, split into `in -> out` arcs.
struct NodeNetwork {
    weights: Vec<u64>,
    adjacency: Vec<Vec<usize>>,
}

struct Dinic {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u64>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(nodes: usize) -> Self {
        Dinic {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    fn add_arc(&mut self, u: usize, v: usize, c: u64) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    fn bfs(&mut self, s: usize) {
        self.level.fill(-1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: u64) -> u64 {
        if u == t {
            return pushed;
        }
        while self.iter[u] < self.head[u].len() {
            let e = self.head[u][self.iter[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let d = self.dfs(v, t, pushed.min(self.cap[e]));
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    /// Max flow, stopping early once it reaches `limit`.
    fn max_flow(&mut self, s: usize, t: usize, limit: u64) -> u64 {
        let mut flow = 0;
        while flow < limit {
            self.bfs(s);
            if self.level[t] < 0 {
                break;
            }
            self.iter.fill(0);
            loop {
                let f = self.dfs(s, t, limit - flow);
                if f == 0 {
                    break;
                }
                flow += f;
                if flow >= limit {
                    break;
                }
            }
        }
        flow
    }
}

impl NodeNetwork {
    fn new(weights: &[u64], adjacent: &[Vec<bool>]) -> Self {
        let adjacency = adjacent
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &a)| a)
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        NodeNetwork {
            weights: weights.to_vec(),
            adjacency,
        }
    }

    /// Minimum node cut between non-adjacent `s` and `t` if it is smaller
    /// than `limit`.
    fn min_cut(&self, s: usize, t: usize, limit: u64) -> Option<(u64, Vec<usize>)> {
        let k = self.weights.len();
        let mut d = Dinic::new(2 * k);
        for v in 0..k {
            let c = if v == s || v == t {
                INF
            } else {
                self.weights[v]
            };
            d.add_arc(2 * v, 2 * v + 1, c);
            for &w in &self.adjacency[v] {
                d.add_arc(2 * v + 1, 2 * w, INF);
            }
        }
        let value = d.max_flow(2 * s + 1, 2 * t, limit);
        if value >= limit {
            return None;
        }
        d.bfs(2 * s + 1);
        let cut = (0..k)
            .filter(|&v| v != s && v != t && d.level[2 * v] >= 0 && d.level[2 * v + 1] < 0)
            .collect();
        Some((value, cut))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::power_graph;
    use crate::group::{cyclic_group, dicyclic_group, direct_product};
    use proptest::prelude::*;

    #[test]
    fn dicyclic_connectivity_is_two() {
        for n in 2..=8 {
            let q = dicyclic_group(n).unwrap();
            let g = power_graph(&q);
            let cut = vertex_connectivity(&g);
            assert_eq!(cut.size, 2, "n = {n}");
            assert!(is_separating(&g, &cut.separating_set));
            assert!(is_separating(&g, &[0, n]));
        }
        let cut = vertex_connectivity(&power_graph(&dicyclic_group(2).unwrap()));
        assert_eq!(cut.separating_set, vec![0, 2]);
    }

    #[test]
    fn complete_and_trivial_conventions() {
        let k4 = power_graph(&cyclic_group(4).unwrap());
        let cut = vertex_connectivity(&k4);
        assert_eq!(cut.size, 3);
        assert!(is_separating(&k4, &cut.separating_set));
        assert_eq!(vertex_connectivity(&Graph::empty(0)).size, 0);
        assert_eq!(vertex_connectivity(&Graph::complete(1)).size, 0);
        assert_eq!(vertex_connectivity(&Graph::empty(3)).size, 0);
        assert_eq!(
            vertex_connectivity_exhaustive(&Graph::empty(0))
                .unwrap()
                .size,
            0
        );
        assert_eq!(
            vertex_connectivity_exhaustive(&Graph::complete(1))
                .unwrap()
                .size,
            0
        );
        assert!(vertex_connectivity_exhaustive(&Graph::empty(21)).is_err());
    }

    #[test]
    fn elementary_abelian_cut_is_identity() {
        let g = direct_product(&cyclic_group(3).unwrap(), &cyclic_group(3).unwrap());
        let cut = vertex_connectivity(&power_graph(&g));
        assert_eq!(
            cut,
            CutCertificate {
                size: 1,
                separating_set: vec![0]
            }
        );
    }

    #[test]
    fn cyclic_kappa_small() {
        // κ(G(Z_6)) = φ(6) + 1 = 3
        let g = power_graph(&cyclic_group(6).unwrap());
        assert_eq!(vertex_connectivity(&g).size, 3);
        assert_eq!(vertex_connectivity_exhaustive(&g).unwrap().size, 3);
        let g = power_graph(&cyclic_group(12).unwrap());
        assert_eq!(
            vertex_connectivity(&g).size,
            vertex_connectivity_exhaustive(&g).unwrap().size
        );
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
                move |bits| {
                    let mut g = Graph::empty(n);
                    let mut k = 0;
                    for u in 0..n {
                        for v in u + 1..n {
                            if bits[k] {
                                g.add_edge(u, v);
                            }
                            k += 1;
                        }
                    }
                    g
                },
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn flow_matches_exhaustive(g in arb_graph(12)) {
            let oracle = vertex_connectivity_exhaustive(&g).unwrap();
            let flow = vertex_connectivity(&g);
            let plain = vertex_connectivity_uncontracted(&g);
            prop_assert_eq!(flow.size, oracle.size);
            prop_assert_eq!(plain.size, oracle.size);
            prop_assert_eq!(flow.separating_set.len(), flow.size);
            prop_assert!(is_separating(&g, &flow.separating_set));
            prop_assert!(is_separating(&g, &plain.separating_set));
        }
    }
}
