//! Finite groups given by a total multiplication table over `0..n`.
//!
//! Every constructor fixes a canonical enumeration of the elements:
//! residues for cyclic groups, `a^0..a^{2n-1}` followed by `a^0 b..a^{2n-1} b`
//! for dicyclic groups, and lexicographic pairs for direct products.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::Serialize;

use crate::arith::{self, lcm};
use crate::error::{Error, Result};

/// Index of a group element.
pub type Element = usize;

/// Orders above this are multiplied on demand instead of through a stored table.
pub const EAGER_TABLE_LIMIT: usize = 4096;

#[derive(Clone)]
enum Structure {
    Cyclic,
    /// `Q_n`, order `4n`.
    Dicyclic(usize),
    Product(Box<FiniteGroup>, Box<FiniteGroup>),
    Table,
}

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    identity: Element,
    label: String,
    structure: Structure,
    table: Option<Arc<[u32]>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

/// Order, cyclic subgroup and `≈`-class of a single element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementInfo {
    pub element: Element,
    pub order: u64,
    /// `⟨g⟩`, sorted.
    pub cyclic_subgroup: Vec<Element>,
    /// `[g]`: elements generating the same cyclic subgroup, sorted.
    pub eq_class: Vec<Element>,
}

/// Partition of a group into `≈`-classes, with element orders.
#[derive(Debug, Clone)]
pub struct CyclicClasses {
    pub order_of: Vec<u64>,
    pub class_of: Vec<usize>,
    /// Members of each class, sorted; classes are ordered by smallest member.
    pub classes: Vec<Vec<Element>>,
}

impl CyclicClasses {
    /// Smallest element of the class containing `g`.
    pub fn representative(&self, g: Element) -> Element {
        self.classes[self.class_of[g]][0]
    }
}

/// `Z_n` under addition mod `n`.
pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::Domain("cyclic group needs n >= 1".into()));
    }
    Ok(FiniteGroup::build(
        n,
        0,
        format!("Z_{n}"),
        Structure::Cyclic,
    ))
}

/// `Q_n = ⟨a, b | a^{2n} = e, a^n = b^2, ab = ba^{-1}⟩`, order `4n`.
///
/// Index `i < 2n` is `a^i`; index `2n + i` is `a^i b`.
pub fn dicyclic_group(n: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "dicyclic group needs n >= 2, got {n}"
        )));
    }
    Ok(FiniteGroup::build(
        4 * n,
        0,
        format!("Q_{n}"),
        Structure::Dicyclic(n),
    ))
}

/// Generalized quaternion group of order `2^{alpha+1}`, i.e. `Q_{2^{alpha-1}}`.
pub fn generalized_quaternion(alpha: u32) -> Result<FiniteGroup> {
    if !(2..=20).contains(&alpha) {
        return Err(Error::Domain(format!(
            "generalized quaternion needs 2 <= alpha <= 20, got {alpha}"
        )));
    }
    dicyclic_group(1 << (alpha - 1))
}

/// `G × H` with componentwise multiplication; `(g, h)` has index `g·|H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let order = g.order * h.order;
    let identity = g.identity * h.order + h.identity;
    let label = format!("{} x {}", g.label, h.label);
    FiniteGroup::build(
        order,
        identity,
        label,
        Structure::Product(Box::new(g.clone()), Box::new(h.clone())),
    )
}

/// Validates a Cayley table and wraps it as a group.
///
/// Checks run in the order: shape and range, identity, inverses, associativity.
/// The error names the first violating element or triple.
pub fn from_table(order: usize, table: &[Vec<usize>]) -> Result<FiniteGroup> {
    if order == 0 {
        return Err(Error::InvalidTable("order must be positive".into()));
    }
    if table.len() != order {
        return Err(Error::InvalidTable(format!(
            "expected {order} rows, found {}",
            table.len()
        )));
    }
    let mut flat = Vec::with_capacity(order * order);
    for (i, row) in table.iter().enumerate() {
        if row.len() != order {
            return Err(Error::InvalidTable(format!(
                "row {i} has {} entries, expected {order}",
                row.len()
            )));
        }
        for (j, &k) in row.iter().enumerate() {
            if k >= order {
                return Err(Error::InvalidTable(format!(
                    "entry ({i},{j}) = {k} is not an element index"
                )));
            }
            flat.push(k as u32);
        }
    }
    let mul = |a: usize, b: usize| flat[a * order + b] as usize;

    let identity = (0..order)
        .find(|&e| (0..order).all(|g| mul(e, g) == g && mul(g, e) == g))
        .ok_or_else(|| Error::InvalidTable("no two-sided identity".into()))?;
    for g in 0..order {
        if !(0..order).any(|h| mul(g, h) == identity && mul(h, g) == identity) {
            return Err(Error::InvalidTable(format!("element {g} has no inverse")));
        }
    }
    for a in 0..order {
        for b in 0..order {
            let ab = mul(a, b);
            for c in 0..order {
                if mul(ab, c) != mul(a, mul(b, c)) {
                    return Err(Error::InvalidTable(format!(
                        "not associative at ({a},{b},{c})"
                    )));
                }
            }
        }
    }
    Ok(FiniteGroup {
        order,
        identity,
        label: format!("T_{order}"),
        structure: Structure::Table,
        table: Some(flat.into()),
    })
}

/// Parses the plain-text table format: `n`, then `n` rows of `n` indices.
/// Identity must be index 0.
pub fn parse_table(text: &str) -> Result<FiniteGroup> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidTable("empty table file".into()))?;
    let order: usize = header
        .parse()
        .map_err(|_| Error::InvalidTable(format!("bad order line `{header}`")))?;
    let mut rows = Vec::with_capacity(order);
    for (i, line) in lines.enumerate() {
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::InvalidTable(format!("row {i}: bad entry `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    let group = from_table(order, &rows)?;
    if group.identity != 0 {
        return Err(Error::InvalidTable(format!(
            "identity must be index 0, found {}",
            group.identity
        )));
    }
    Ok(group)
}

pub fn read_table_file(path: impl AsRef<Path>) -> Result<FiniteGroup> {
    parse_table(&std::fs::read_to_string(path)?)
}

impl FiniteGroup {
    fn build(order: usize, identity: Element, label: String, structure: Structure) -> Self {
        let mut group = FiniteGroup {
            order,
            identity,
            label,
            structure,
            table: None,
        };
        if order <= EAGER_TABLE_LIMIT && !matches!(group.structure, Structure::Cyclic) {
            let mut flat = Vec::with_capacity(order * order);
            for a in 0..order {
                for b in 0..order {
                    flat.push(group.mul_rule(a, b) as u32);
                }
            }
            group.table = Some(flat.into());
        }
        group
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        match &self.table {
            Some(t) => t[a * self.order + b] as usize,
            None => self.mul_rule(a, b),
        }
    }

    fn mul_rule(&self, a: Element, b: Element) -> Element {
        match &self.structure {
            Structure::Cyclic => (a + b) % self.order,
            Structure::Dicyclic(n) => {
                let m = 2 * n;
                match (a < m, b < m) {
                    (true, true) => (a + b) % m,
                    (true, false) => m + (a + b - m) % m,
                    // a^i b a^j = a^{i-j} b
                    (false, true) => m + (a - m + m - b) % m,
                    // a^i b a^j b = a^{i-j+n}
                    (false, false) => (a - m + m - (b - m) + n) % m,
                }
            }
            Structure::Product(g, h) => {
                let (ga, ha) = (a / h.order, a % h.order);
                let (gb, hb) = (b / h.order, b % h.order);
                g.mul(ga, gb) * h.order + h.mul(ha, hb)
            }
            Structure::Table => unreachable!("table groups always store their table"),
        }
    }

    pub fn pow(&self, g: Element, mut k: u64) -> Element {
        let mut base = g;
        let mut acc = self.identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    fn check(&self, g: Element) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                index: g,
                order: self.order,
            })
        }
    }

    /// `e, g, g^2, …, g^{o(g)-1}` in power order.
    pub fn powers(&self, g: Element) -> Vec<Element> {
        let mut out = vec![self.identity];
        let mut x = g;
        while x != self.identity {
            out.push(x);
            x = self.mul(x, g);
        }
        out
    }

    pub fn element_order(&self, g: Element) -> u64 {
        match (&self.structure, &self.table) {
            (Structure::Cyclic, _) => (self.order / arith::gcd(g, self.order)) as u64,
            (Structure::Product(a, b), None) => {
                lcm(a.element_order(g / b.order), b.element_order(g % b.order))
            }
            _ => self.powers(g).len() as u64,
        }
    }

    pub fn inverse(&self, g: Element) -> Element {
        self.pow(g, self.element_order(g) - 1)
    }

    pub fn element_info(&self, g: Element) -> Result<ElementInfo> {
        self.check(g)?;
        let powers = self.powers(g);
        let order = powers.len() as u64;
        let mut eq_class: Vec<Element> = powers
            .iter()
            .enumerate()
            .filter(|&(k, _)| arith::gcd(k as u64, order) == 1)
            .map(|(_, &x)| x)
            .collect();
        // o(e) = 1 and gcd(0, 1) = 1 picks e itself.
        eq_class.sort_unstable();
        let mut cyclic_subgroup = powers;
        cyclic_subgroup.sort_unstable();
        Ok(ElementInfo {
            element: g,
            order,
            cyclic_subgroup,
            eq_class,
        })
    }

    /// `U(g) = {h : g ∈ ⟨h⟩}`, sorted.
    pub fn up_set(&self, g: Element) -> Result<Vec<Element>> {
        self.check(g)?;
        Ok(self
            .elements()
            .filter(|&h| self.powers(h).contains(&g))
            .collect())
    }

    /// `Û(g) = U(g) − [g]`, sorted.
    pub fn hat_up_set(&self, g: Element) -> Result<Vec<Element>> {
        let class: BTreeSet<Element> = self.element_info(g)?.eq_class.into_iter().collect();
        Ok(self
            .up_set(g)?
            .into_iter()
            .filter(|h| !class.contains(h))
            .collect())
    }

    pub fn cyclic_classes(&self) -> CyclicClasses {
        const UNSET: usize = usize::MAX;
        let n = self.order;
        let mut order_of = vec![0u64; n];
        let mut class_of = vec![UNSET; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if class_of[g] != UNSET {
                continue;
            }
            let powers = self.powers(g);
            let o = powers.len() as u64;
            let id = classes.len();
            let mut members = Vec::new();
            for (k, &x) in powers.iter().enumerate() {
                if arith::gcd(k as u64, o) == 1 {
                    class_of[x] = id;
                    order_of[x] = o;
                    members.push(x);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        CyclicClasses {
            order_of,
            class_of,
            classes,
        }
    }

    /// The prime `p` when every element order is a power of `p` and `|G| >= 2`.
    pub fn is_p_group(&self) -> Option<u64> {
        if self.order < 2 {
            return None;
        }
        let (p, _) = arith::factorize(self.order as u64).ok()?.prime_power()?;
        self.elements()
            .all(|g| {
                let mut o = self.element_order(g);
                while o.is_multiple_of(p) {
                    o /= p;
                }
                o == 1
            })
            .then_some(p)
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements()
            .any(|g| self.element_order(g) == self.order as u64)
    }

    /// Non-cyclic 2-group of order at least 8 with a unique involution.
    pub fn is_generalized_quaternion(&self) -> bool {
        self.order >= 8
            && self.order.is_power_of_two()
            && !self.is_cyclic()
            && self
                .elements()
                .filter(|&g| self.element_order(g) == 2)
                .count()
                == 1
    }

    /// One representative (smallest index) per primitive class of `g`:
    /// classes `[h]` with `[h^p] = [g]` and `h ≠ e`.
    pub fn primitive_classes(&self, g: Element) -> Result<Vec<Element>> {
        self.check(g)?;
        let p = self
            .is_p_group()
            .ok_or_else(|| Error::Domain(format!("{} is not a p-group", self.label)))?;
        let classes = self.cyclic_classes();
        Ok(primitive_classes_with(self, &classes, p, g))
    }

    /// Human-readable name of an element in the canonical enumeration.
    pub fn element_label(&self, g: Element) -> String {
        match &self.structure {
            Structure::Product(..) => format!("({})", self.components(g).join(",")),
            _ => self.atom_label(g),
        }
    }

    fn components(&self, g: Element) -> Vec<String> {
        match &self.structure {
            Structure::Product(a, b) => {
                let mut out = a.components(g / b.order);
                out.extend(b.components(g % b.order));
                out
            }
            _ => vec![self.atom_label(g)],
        }
    }

    fn atom_label(&self, g: Element) -> String {
        match &self.structure {
            Structure::Dicyclic(n) => {
                let m = 2 * n;
                match g {
                    0 => "e".into(),
                    1 => "a".into(),
                    g if g < m => format!("a^{g}"),
                    g if g == m => "b".into(),
                    g if g == m + 1 => "ab".into(),
                    g => format!("a^{}b", g - m),
                }
            }
            _ => g.to_string(),
        }
    }

    /// Index of the element with the given component indices in a (flattened)
    /// product; for non-products a single component is the element itself.
    pub fn element_from_components(&self, parts: &[Element]) -> Result<Element> {
        fn go(group: &FiniteGroup, parts: &[Element]) -> Result<(Element, usize)> {
            match &group.structure {
                Structure::Product(a, b) => {
                    let (x, used) = go(a, parts)?;
                    let (y, used_b) = go(b, &parts[used..])?;
                    Ok((x * b.order + y, used + used_b))
                }
                _ => {
                    let &g = parts
                        .first()
                        .ok_or_else(|| Error::Domain("too few components".into()))?;
                    group.check(g)?;
                    Ok((g, 1))
                }
            }
        }
        let (g, used) = go(self, parts)?;
        if used != parts.len() {
            return Err(Error::Domain("too many components".into()));
        }
        Ok(g)
    }
}

pub(crate) fn primitive_classes_with(
    group: &FiniteGroup,
    classes: &CyclicClasses,
    p: u64,
    g: Element,
) -> Vec<Element> {
    let target = classes.class_of[g];
    let identity_class = classes.class_of[group.identity()];
    classes
        .classes
        .iter()
        .enumerate()
        .filter(|&(id, _)| id != identity_class)
        .filter(|(_, members)| classes.class_of[group.pow(members[0], p)] == target)
        .map(|(_, members)| members[0])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z9z3() -> FiniteGroup {
        direct_product(&cyclic_group(9).unwrap(), &cyclic_group(3).unwrap())
    }

    fn el(g: &FiniteGroup, a: usize, b: usize) -> Element {
        g.element_from_components(&[a, b]).unwrap()
    }

    fn assert_group_axioms(g: &FiniteGroup) {
        let n = g.order();
        let e = g.identity();
        for a in 0..n {
            assert_eq!(g.mul(e, a), a);
            assert_eq!(g.mul(a, e), a);
            assert_eq!(g.mul(a, g.inverse(a)), e);
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn constructors_satisfy_axioms() {
        for g in [
            cyclic_group(1).unwrap(),
            cyclic_group(6).unwrap(),
            dicyclic_group(2).unwrap(),
            dicyclic_group(3).unwrap(),
            dicyclic_group(5).unwrap(),
            z9z3(),
        ] {
            assert_group_axioms(&g);
        }
    }

    #[test]
    fn cyclic_examples() {
        assert_eq!(cyclic_group(1).unwrap().order(), 1);
        assert!(cyclic_group(0).is_err());
        let z4 = cyclic_group(4).unwrap();
        assert_eq!(z4.element_order(2), 2);
        let z6 = cyclic_group(6).unwrap();
        assert_eq!(z6.element_info(1).unwrap().eq_class, vec![1, 5]);
        let info = z6.element_info(2).unwrap();
        assert_eq!(info.order, 3);
        assert_eq!(info.cyclic_subgroup, vec![0, 2, 4]);
        assert!(z6.element_info(6).is_err());
    }

    #[test]
    fn dicyclic_examples() {
        let q2 = dicyclic_group(2).unwrap();
        assert_eq!(q2.order(), 8);
        // a^1 b has index 2n + 1 = 5
        assert_eq!(q2.element_order(5), 4);
        assert_eq!(q2.element_order(4), 4);
        let q3 = dicyclic_group(3).unwrap();
        assert_eq!(q3.order(), 12);
        assert_eq!(q3.element_order(1), 6);
        // ⟨a^0 b⟩ = {e, b, a^2, a^2 b}
        assert_eq!(
            q2.element_info(4).unwrap().cyclic_subgroup,
            vec![0, 2, 4, 6]
        );
        assert!(dicyclic_group(1).is_err());
    }

    #[test]
    fn dicyclic_elements_outside_a_square_to_a_n() {
        for n in 2..12 {
            let q = dicyclic_group(n).unwrap();
            for i in 0..2 * n {
                let x = 2 * n + i;
                assert_eq!(q.mul(x, x), n, "n={n} i={i}");
                assert_eq!(q.element_order(x), 4);
            }
            // ⟨a^i b⟩ = ⟨a^{n+i} b⟩ = {e, a^i b, a^n, a^{n+i} b}
            for i in 0..n {
                let mut expect = vec![0, n, 2 * n + i, 2 * n + n + i];
                expect.sort_unstable();
                assert_eq!(q.element_info(2 * n + i).unwrap().cyclic_subgroup, expect);
                assert_eq!(
                    q.element_info(2 * n + n + i).unwrap().cyclic_subgroup,
                    expect
                );
            }
        }
    }

    #[test]
    fn generalized_quaternion_orders() {
        assert_eq!(generalized_quaternion(2).unwrap().order(), 8);
        assert_eq!(generalized_quaternion(3).unwrap().order(), 16);
        assert_eq!(generalized_quaternion(4).unwrap().order(), 32);
        assert!(generalized_quaternion(1).is_err());
        assert!(generalized_quaternion(3)
            .unwrap()
            .is_generalized_quaternion());
        assert!(!dicyclic_group(3).unwrap().is_generalized_quaternion());
        assert!(!cyclic_group(8).unwrap().is_generalized_quaternion());
    }

    #[test]
    fn product_examples() {
        let g = z9z3();
        assert_eq!(g.order(), 27);
        assert_eq!(g.element_order(el(&g, 3, 0)), 3);
        let v4 = direct_product(&cyclic_group(2).unwrap(), &cyclic_group(2).unwrap());
        assert_eq!((0..4).filter(|&x| v4.element_order(x) == 2).count(), 3);
        let z3z3 = direct_product(&cyclic_group(3).unwrap(), &cyclic_group(3).unwrap());
        assert!((1..9).all(|x| z3z3.element_order(x) == 3));
        for x in g.elements() {
            let (a, b) = (x / 3, x % 3);
            let expect = lcm(
                cyclic_group(9).unwrap().element_order(a),
                cyclic_group(3).unwrap().element_order(b),
            );
            assert_eq!(g.element_order(x), expect);
        }
        assert_eq!(g.element_label(el(&g, 3, 1)), "(3,1)");
    }

    #[test]
    fn element_info_in_product() {
        let g = z9z3();
        let info = g.element_info(el(&g, 1, 0)).unwrap();
        assert_eq!(info.order, 9);
        assert_eq!(info.eq_class.len(), 6);
    }

    #[test]
    fn class_sizes_are_phi_of_order() {
        for g in [
            z9z3(),
            dicyclic_group(6).unwrap(),
            cyclic_group(30).unwrap(),
        ] {
            for x in g.elements() {
                let info = g.element_info(x).unwrap();
                assert_eq!(info.cyclic_subgroup.len() as u64, info.order);
                assert_eq!(info.eq_class.len() as u64, arith::phi(info.order));
                assert!(info
                    .eq_class
                    .iter()
                    .all(|y| info.cyclic_subgroup.contains(y)));
                assert!(info.cyclic_subgroup.contains(&g.identity()));
            }
        }
    }

    #[test]
    fn up_set_examples() {
        let z4 = cyclic_group(4).unwrap();
        assert_eq!(z4.up_set(2).unwrap(), vec![1, 2, 3]);
        assert_eq!(z4.hat_up_set(2).unwrap(), vec![1, 3]);
        assert_eq!(z4.up_set(0).unwrap(), vec![0, 1, 2, 3]);
        let g = z9z3();
        assert_eq!(g.up_set(el(&g, 3, 0)).unwrap().len(), 20);
        assert_eq!(g.up_set(g.identity()).unwrap().len(), 27);
    }

    #[test]
    fn primitive_class_examples() {
        let g = z9z3();
        let got: BTreeSet<_> = g
            .primitive_classes(g.identity())
            .unwrap()
            .into_iter()
            .collect();
        let want: BTreeSet<_> = [(3, 0), (3, 1), (3, 2), (0, 1)]
            .iter()
            .map(|&(a, b)| g.cyclic_classes().representative(el(&g, a, b)))
            .collect();
        assert_eq!(got, want);

        let got: BTreeSet<_> = g
            .primitive_classes(el(&g, 3, 0))
            .unwrap()
            .into_iter()
            .collect();
        let want: BTreeSet<_> = [(1, 0), (1, 1), (1, 2)]
            .iter()
            .map(|&(a, b)| g.cyclic_classes().representative(el(&g, a, b)))
            .collect();
        assert_eq!(got, want);

        let z5 = cyclic_group(5).unwrap();
        assert!(z5.primitive_classes(1).unwrap().is_empty());
        assert!(cyclic_group(6).unwrap().primitive_classes(0).is_err());
    }

    #[test]
    fn primitive_classes_of_identity_count_order_p_classes() {
        for g in [
            z9z3(),
            generalized_quaternion(3).unwrap(),
            cyclic_group(16).unwrap(),
        ] {
            let p = g.is_p_group().unwrap();
            let pi_e = g.primitive_classes(g.identity()).unwrap().len();
            let order_p = g.elements().filter(|&x| g.element_order(x) == p).count();
            assert_eq!(pi_e as u64, order_p as u64 / (p - 1));
        }
    }

    #[test]
    fn up_set_splits_along_primitive_classes() {
        let g = direct_product(&cyclic_group(4).unwrap(), &cyclic_group(2).unwrap());
        let classes = g.cyclic_classes();
        for x in g.elements().filter(|&x| x != g.identity()) {
            let mut pieces: Vec<Element> = classes.classes[classes.class_of[x]].clone();
            for h in g.primitive_classes(x).unwrap() {
                pieces.extend(g.up_set(h).unwrap());
            }
            let total = pieces.len();
            pieces.sort_unstable();
            pieces.dedup();
            assert_eq!(pieces.len(), total, "pieces overlap");
            assert_eq!(pieces, g.up_set(x).unwrap());
        }
    }

    #[test]
    fn p_group_detection() {
        assert_eq!(dicyclic_group(2).unwrap().is_p_group(), Some(2));
        assert_eq!(cyclic_group(6).unwrap().is_p_group(), None);
        assert_eq!(z9z3().is_p_group(), Some(3));
        assert_eq!(cyclic_group(1).unwrap().is_p_group(), None);
    }

    #[test]
    fn table_validation() {
        let trivial = from_table(1, &[vec![0]]).unwrap();
        assert_eq!(trivial.order(), 1);

        let z3: Vec<Vec<usize>> = (0..3)
            .map(|i| (0..3).map(|j| (i + j) % 3).collect())
            .collect();
        let t = from_table(3, &z3).unwrap();
        let c = cyclic_group(3).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(t.mul(a, b), c.mul(a, b));
            }
        }

        let err = from_table(2, &[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(
            err.to_string().contains("element 1 has no inverse"),
            "{err}"
        );

        // a Latin square with identity 0 that is not associative
        let bad = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = from_table(5, &bad).unwrap_err();
        assert!(err.to_string().contains("not associative"), "{err}");

        assert!(from_table(2, &[vec![0, 1]]).is_err());
        assert!(from_table(2, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn table_file_round_trip() {
        let q2 = dicyclic_group(2).unwrap();
        let mut text = format!("{}\n", q2.order());
        for a in q2.elements() {
            let row: Vec<String> = q2.elements().map(|b| q2.mul(a, b).to_string()).collect();
            text.push_str(&row.join(" "));
            text.push('\n');
        }
        let t = parse_table(&text).unwrap();
        assert_eq!(t.is_p_group(), Some(2));
        assert!(t.is_generalized_quaternion());
        assert!(parse_table("").is_err());
        // identity at index 1
        assert!(parse_table("2\n1 0\n0 1\n").is_err());
    }

    #[test]
    fn lazy_and_eager_multiplication_agree() {
        let big = cyclic_group(5000).unwrap();
        assert_eq!(big.mul(4999, 2), 1);
        let prod = direct_product(&cyclic_group(2).unwrap(), &cyclic_group(2500).unwrap());
        assert!(prod.table.is_none());
        assert_eq!(prod.element_order(1), 2500);
        assert_eq!(prod.element_order(2500 + 1), 2500);
        assert_eq!(prod.element_order(2500), 2);
    }
}
