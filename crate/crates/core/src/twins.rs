//! Twin classes: vertex sets whose members share a closed neighbourhood
//! (true twins, a clique) or an open neighbourhood (false twins, an
//! independent set). Every class is a module of the graph.

use std::collections::BTreeMap;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinKind {
    Clique,
    Independent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinClass {
    /// Sorted.
    pub members: Vec<usize>,
    pub kind: TwinKind,
}

#[derive(Debug, Clone)]
pub struct TwinPartition {
    /// Ordered by smallest member.
    pub classes: Vec<TwinClass>,
    pub class_of: Vec<usize>,
}

impl TwinPartition {
    /// Whether every vertex of class `a` is adjacent to every vertex of class `b`
    /// (for `a ≠ b`; modules are all-or-nothing).
    pub fn adjacent(&self, g: &Graph, a: usize, b: usize) -> bool {
        g.has_edge(self.classes[a].members[0], self.classes[b].members[0])
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Groups true twins; when `false_twins` is set, vertices left alone are then
/// grouped by open neighbourhood. A vertex never has both kinds of twin.
pub fn twin_partition(g: &Graph, false_twins: bool) -> TwinPartition {
    let n = g.vertex_count();
    let mut closed: BTreeMap<Vec<u64>, Vec<usize>> = BTreeMap::new();
    for u in 0..n {
        let mut key = g.row(u).to_vec();
        key[u / 64] |= 1 << (u % 64);
        closed.entry(key).or_default().push(u);
    }
    let mut classes = Vec::new();
    let mut singles = Vec::new();
    for members in closed.into_values() {
        if members.len() > 1 {
            classes.push(TwinClass {
                members,
                kind: TwinKind::Clique,
            });
        } else {
            singles.push(members[0]);
        }
    }
    if false_twins {
        let mut open: BTreeMap<&[u64], Vec<usize>> = BTreeMap::new();
        for &u in &singles {
            open.entry(g.row(u)).or_default().push(u);
        }
        for members in open.into_values() {
            let kind = if members.len() > 1 {
                TwinKind::Independent
            } else {
                TwinKind::Clique
            };
            classes.push(TwinClass { members, kind });
        }
    } else {
        classes.extend(singles.into_iter().map(|u| TwinClass {
            members: vec![u],
            kind: TwinKind::Clique,
        }));
    }
    classes.sort_by_key(|c| c.members[0]);
    let mut class_of = vec![0; n];
    for (i, c) in classes.iter().enumerate() {
        for &v in &c.members {
            class_of[v] = i;
        }
    }
    TwinPartition { classes, class_of }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_collapses_to_two_classes() {
        let g = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
        let t = twin_partition(&g, true);
        assert_eq!(t.len(), 2);
        assert_eq!(t.classes[1].members, vec![1, 2, 3, 4]);
        assert_eq!(t.classes[1].kind, TwinKind::Independent);
        let t = twin_partition(&g, false);
        assert_eq!(t.len(), 5);
    }

    #[test]
    fn complete_graph_is_one_clique_class() {
        let t = twin_partition(&Graph::complete(7), true);
        assert_eq!(t.len(), 1);
        assert_eq!(t.classes[0].kind, TwinKind::Clique);
    }

    #[test]
    fn classes_are_modules() {
        let g =
            Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (2, 3), (1, 3), (3, 4), (3, 5)]).unwrap();
        let t = twin_partition(&g, true);
        for c in &t.classes {
            for x in 0..6 {
                if c.members.contains(&x) {
                    continue;
                }
                let adj: Vec<bool> = c.members.iter().map(|&m| g.has_edge(m, x)).collect();
                assert!(adj.iter().all(|&a| a == adj[0]));
            }
        }
    }
}
