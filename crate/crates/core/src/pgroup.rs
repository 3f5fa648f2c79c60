//! Recursive structure of p-group power graphs.
//!
//! For an element `g` of a p-group, `Γ(g)` is the subgraph induced by
//! `U(g) = {h : g ∈ ⟨h⟩}`. It is a clique on `[g]` joined to the disjoint
//! union of `Γ(h)` over the primitive classes `[h]` of `g` (those with
//! `[h^p] = [g]`), and a bare clique when there are none. The power graph is
//! `Γ(e)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{is_prime_power, phi};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{primitive_classes_with, CyclicClasses, Element, FiniteGroup};
use crate::spectra::{join_charpoly, union_charpoly, FactoredCharPoly, Spectrum};

/// Per-class data of a p-group.
#[derive(Debug, Clone)]
pub struct PGroupClasses {
    pub prime: u64,
    pub classes: CyclicClasses,
    /// Indexed by class id.
    pub up_size: Vec<u64>,
    /// Primitive-class representatives of each class.
    pub primitive: Vec<Vec<Element>>,
}

impl PGroupClasses {
    pub fn new(group: &FiniteGroup) -> Result<Self> {
        let prime = group.is_p_group().ok_or_else(|| {
            Error::Domain(format!(
                "{} is not a p-group of order at least 2",
                group.label()
            ))
        })?;
        let classes = group.cyclic_classes();
        let k = classes.classes.len();
        let mut up_size = vec![0u64; k];
        for members in &classes.classes {
            // each class contributes to U(x) for every x in ⟨rep⟩, once per class of x
            let mut seen = vec![false; k];
            for x in group.powers(members[0]) {
                let c = classes.class_of[x];
                if !seen[c] {
                    seen[c] = true;
                    up_size[c] += members.len() as u64;
                }
            }
        }
        let primitive = (0..k)
            .map(|c| primitive_classes_with(group, &classes, prime, classes.classes[c][0]))
            .collect();
        Ok(PGroupClasses {
            prime,
            classes,
            up_size,
            primitive,
        })
    }

    pub fn order_of(&self, g: Element) -> u64 {
        self.classes.order_of[g]
    }

    /// `|U(g)|`.
    pub fn up_size(&self, g: Element) -> u64 {
        self.up_size[self.classes.class_of[g]]
    }

    /// `|Û(g)| = |U(g)| − φ(o(g))`.
    pub fn hat_up_size(&self, g: Element) -> u64 {
        self.up_size(g) - phi(self.order_of(g))
    }

    /// `π(g)`.
    pub fn pi(&self, g: Element) -> usize {
        self.primitive[self.classes.class_of[g]].len()
    }

    pub fn primitive_classes(&self, g: Element) -> &[Element] {
        &self.primitive[self.classes.class_of[g]]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    /// `π(g) = 0`: `Γ(g) = K_k` with `k = φ(o(g))`.
    Clique(u64),
    /// `K_apex ∨ (children disjoint union)`.
    Join {
        apex: u64,
        children: Vec<DecompTree>,
    },
}

/// `Γ(g)` as a join/union expression over cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompTree {
    /// Smallest element of the class `[g]`.
    pub element: Element,
    pub label: String,
    pub order: u64,
    /// `|U(g)|` as counted in the group.
    pub up_size: u64,
    pub kind: NodeKind,
}

impl DecompTree {
    /// Vertices of the expression; equals `up_size` for a correct tree.
    pub fn vertex_count(&self) -> u64 {
        match &self.kind {
            NodeKind::Clique(k) => *k,
            NodeKind::Join { apex, children } => {
                apex + children.iter().map(DecompTree::vertex_count).sum::<u64>()
            }
        }
    }

    pub fn children(&self) -> &[DecompTree] {
        match &self.kind {
            NodeKind::Clique(_) => &[],
            NodeKind::Join { children, .. } => children,
        }
    }

    /// Pre-order traversal.
    pub fn nodes(&self) -> Vec<&DecompTree> {
        let mut out = vec![self];
        for c in self.children() {
            out.extend(c.nodes());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut v = match &self.kind {
            NodeKind::Clique(k) => json!({ "clique": k }),
            NodeKind::Join { apex, children } => json!({
                "join": {
                    "apex": apex,
                    "children": children.iter().map(DecompTree::to_json).collect::<Vec<_>>(),
                }
            }),
        };
        let obj = v.as_object_mut().expect("object literal");
        obj.insert("element".into(), json!(self.element));
        obj.insert("label".into(), json!(self.label));
        obj.insert("order".into(), json!(self.order));
        obj.insert("up_size".into(), json!(self.up_size));
        v
    }

    fn render(&self) -> String {
        match &self.kind {
            NodeKind::Clique(k) => format!("K{k}"),
            NodeKind::Join { apex, children } => {
                let mut groups: Vec<(String, usize, bool)> = Vec::new();
                for c in children {
                    let s = c.render();
                    match groups.last_mut() {
                        Some((last, m, _)) if *last == s => *m += 1,
                        _ => groups.push((s, 1, matches!(c.kind, NodeKind::Join { .. }))),
                    }
                }
                let items: Vec<String> = groups
                    .iter()
                    .map(|(s, m, compound)| {
                        let s = if *compound && (*m > 1 || groups.len() > 1) {
                            format!("({s})")
                        } else {
                            s.clone()
                        };
                        if *m > 1 {
                            format!("{m}*{s}")
                        } else {
                            s
                        }
                    })
                    .collect();
                let single_join = groups.len() == 1 && groups[0].1 == 1 && groups[0].2;
                let right = if groups.len() > 1 || single_join {
                    format!("({})", items.join(" + "))
                } else {
                    items.join(" + ")
                };
                format!("K{apex} v {right}")
            }
        }
    }
}

impl fmt::Display for DecompTree {
    /// `K<k>` for cliques, `v` for joins, `+` for disjoint unions and `m*`
    /// for repeated siblings, e.g. `K1 v ((K2 v 3*K6) + 3*K2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Decomposes `G(G)` for a p-group `G`.
pub fn decompose(group: &FiniteGroup) -> Result<DecompTree> {
    let data = PGroupClasses::new(group)?;
    Ok(decompose_with(group, &data))
}

pub fn decompose_with(group: &FiniteGroup, data: &PGroupClasses) -> DecompTree {
    subtree(group, data, group.identity())
}

fn subtree(group: &FiniteGroup, data: &PGroupClasses, g: Element) -> DecompTree {
    let order = data.order_of(g);
    let k = phi(order);
    let primitive = data.primitive_classes(g);
    let kind = if primitive.is_empty() {
        NodeKind::Clique(k)
    } else {
        let mut children: Vec<(String, DecompTree)> = primitive
            .iter()
            .map(|&h| {
                let t = subtree(group, data, h);
                (t.to_string(), t)
            })
            .collect();
        children.sort_by(|(sa, a), (sb, b)| {
            b.vertex_count()
                .cmp(&a.vertex_count())
                .then_with(|| sa.cmp(sb))
                .then_with(|| a.element.cmp(&b.element))
        });
        NodeKind::Join {
            apex: k,
            children: children.into_iter().map(|(_, t)| t).collect(),
        }
    };
    DecompTree {
        element: g,
        label: group.element_label(g),
        order,
        up_size: data.up_size(g),
        kind,
    }
}

/// Builds the graph the expression describes.
pub fn tree_graph(t: &DecompTree) -> Graph {
    match &t.kind {
        NodeKind::Clique(k) => Graph::complete(*k as usize),
        NodeKind::Join { apex, children } => {
            let union = children
                .iter()
                .fold(Graph::empty(0), |acc, c| acc.disjoint_union(&tree_graph(c)));
            Graph::complete(*apex as usize).join(&union)
        }
    }
}

/// `Θ(Γ(g))` bottom-up: `x (x − k)^{k−1}` at a leaf and
/// `x (x − |U(g)|)^{k} / (x − k) · ∏ Θ(Γ(h_i), x − k)` at a join.
pub fn tree_charpoly(t: &DecompTree) -> Result<FactoredCharPoly> {
    match &t.kind {
        NodeKind::Clique(k) => Ok(FactoredCharPoly::clique(*k)),
        NodeKind::Join { apex, children } => {
            let parts = children
                .iter()
                .map(tree_charpoly)
                .collect::<Result<Vec<_>>>()?;
            let union = union_charpoly(&parts);
            let m = children.iter().map(DecompTree::vertex_count).sum();
            join_charpoly(&FactoredCharPoly::clique(*apex), *apex, &union, m)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "form", content = "witness", rename_all = "snake_case")]
pub enum Form {
    Zero,
    /// `λ = o(g)`.
    OrderOf(Element),
    /// `λ = |Û(h)| + o(h)`.
    UhatPlusOrder(Element),
    /// No element realizes `λ` in either form.
    Unclassified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EigenvalueForm {
    pub value: u64,
    pub multiplicity: u64,
    #[serde(flatten)]
    pub form: Form,
}

impl EigenvalueForm {
    pub fn is_classified(&self) -> bool {
        self.form != Form::Unclassified
    }
}

/// Assigns each distinct eigenvalue the form `0`, `o(g)` or `|Û(h)| + o(h)`,
/// preferring `o(g)` and then the smallest witness index.
pub fn classify_eigenvalues(group: &FiniteGroup, s: &Spectrum) -> Result<Vec<EigenvalueForm>> {
    let data = PGroupClasses::new(group)?;
    classify_with(group, &data, s)
}

pub fn classify_with(
    group: &FiniteGroup,
    data: &PGroupClasses,
    s: &Spectrum,
) -> Result<Vec<EigenvalueForm>> {
    let p = s
        .as_exact()
        .ok_or_else(|| Error::Domain("eigenvalue classification needs an exact spectrum".into()))?;
    let mut by_order: BTreeMap<u64, Element> = BTreeMap::new();
    let mut by_uhat: BTreeMap<u64, Element> = BTreeMap::new();
    for g in group.elements() {
        by_order.entry(data.order_of(g)).or_insert(g);
        by_uhat
            .entry(data.hat_up_size(g) + data.order_of(g))
            .or_insert(g);
    }
    Ok(p.iter()
        .map(|(value, multiplicity)| {
            let form = if value == 0 {
                Form::Zero
            } else if let Some(&g) = by_order.get(&value) {
                Form::OrderOf(g)
            } else if let Some(&h) = by_uhat.get(&value) {
                Form::UhatPlusOrder(h)
            } else {
                Form::Unclassified
            };
            EigenvalueForm {
                value,
                multiplicity,
                form,
            }
        })
        .collect())
}

/// Violations of the divisibility properties of p-group eigenvalues, each as
/// a human-readable witness. Empty when all hold.
pub fn check_multiple_property(group: &FiniteGroup, s: &Spectrum) -> Result<Vec<String>> {
    let data = PGroupClasses::new(group)?;
    check_multiple_with(group, &data, s)
}

pub fn check_multiple_with(
    group: &FiniteGroup,
    data: &PGroupClasses,
    s: &Spectrum,
) -> Result<Vec<String>> {
    let poly = s
        .as_exact()
        .ok_or_else(|| Error::Domain("divisibility check needs an exact spectrum".into()))?;
    let p = data.prime;
    let mut out = Vec::new();
    for (value, _) in poly.iter() {
        if value != 0 && value != 1 && value % p != 0 {
            out.push(format!(
                "eigenvalue {value} is neither 1 nor a multiple of {p}"
            ));
        }
    }
    for members in &data.classes.classes {
        let g = members[0];
        let o = data.order_of(g);
        let u = data.hat_up_size(g) + o;
        if !u.is_multiple_of(o) {
            out.push(format!(
                "element {}: |Û|+o = {u} is not a multiple of o = {o}",
                group.element_label(g)
            ));
        }
        let pi = data.pi(g) as u64;
        if is_prime_power(u) && pi != 0 && pi % p != 1 {
            out.push(format!(
                "element {}: |Û|+o = {u} is a prime power but π = {pi} is not 0 or 1 mod {p}",
                group.element_label(g)
            ));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum NodeFormCheck {
    Holds,
    Violated {
        eigenvalue: u64,
    },
    /// `π(g) = 0` and `o(g) = 2`: `Γ(g) = K_1` has no nonzero eigenvalue.
    Inapplicable,
}

/// For every non-identity node `g` of order `p^r`, checks that each nonzero
/// eigenvalue of `Γ(g)` is `o(g1) − p^{r−1}` or `|Û(g2)| + o(g2) − p^{r−1}`
/// for some `g1, g2 ∈ U(g)`. Results are keyed by node representative.
pub fn check_node_forms(
    group: &FiniteGroup,
    data: &PGroupClasses,
    tree: &DecompTree,
) -> Result<Vec<(Element, NodeFormCheck)>> {
    let mut out = Vec::new();
    for node in tree.nodes() {
        if node.element == group.identity() {
            continue;
        }
        if node.order == 2 && node.children().is_empty() {
            out.push((node.element, NodeFormCheck::Inapplicable));
            continue;
        }
        let base = node.order / data.prime;
        let up = group.up_set(node.element)?;
        let mut allowed = std::collections::BTreeSet::new();
        for &h in &up {
            allowed.insert(data.order_of(h) - base);
            allowed.insert(data.hat_up_size(h) + data.order_of(h) - base);
        }
        let poly = tree_charpoly(node)?;
        let bad = poly
            .iter()
            .map(|(v, _)| v)
            .find(|&v| v != 0 && !allowed.contains(&v));
        out.push((
            node.element,
            match bad {
                Some(eigenvalue) => NodeFormCheck::Violated { eigenvalue },
                None => NodeFormCheck::Holds,
            },
        ));
    }
    Ok(out)
}
