//! p-groups reachable from cyclic and generalized-quaternion constructors.

use crate::arith::is_prime;
use crate::group::{cyclic_group, direct_product, generalized_quaternion, FiniteGroup};

/// Partitions of `k` into non-increasing parts.
pub fn partitions(k: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

fn product_of(factors: &[FiniteGroup]) -> Option<FiniteGroup> {
    let (first, rest) = factors.split_first()?;
    Some(
        rest.iter()
            .fold(first.clone(), |acc, g| direct_product(&acc, g)),
    )
}

fn cyclic_factors(p: u64, parts: &[u32]) -> Vec<FiniteGroup> {
    parts
        .iter()
        .map(|&a| cyclic_group(p.pow(a) as usize).expect("positive order"))
        .collect()
}

/// Abelian groups of order `p^k`, one per partition of `k`.
pub fn abelian_p_groups(p: u64, k: u32) -> Vec<FiniteGroup> {
    partitions(k)
        .iter()
        .filter_map(|parts| product_of(&cyclic_factors(p, parts)))
        .collect()
}

/// Multisets of generalized-quaternion parameters `alpha` (each of order
/// `2^{alpha+1}`) with total exponent at most `budget`, non-increasing.
fn quaternion_multisets(budget: u32) -> Vec<Vec<u32>> {
    fn go(budget: u32, max_alpha: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        for alpha in (2..=max_alpha).rev() {
            if alpha < budget {
                prefix.push(alpha);
                go(budget - alpha - 1, alpha, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(budget, budget.saturating_sub(1), &mut Vec::new(), &mut out);
    out
}

/// Abelian p-groups of order at most `max_order`, generalized quaternion
/// groups, and direct products of generalized quaternion groups with each
/// other and with abelian 2-groups. Ordered by order, then construction.
pub fn pgroup_catalog(max_order: usize) -> Vec<FiniteGroup> {
    let mut out = Vec::new();
    for p in (2..=max_order as u64).filter(|&p| is_prime(p)) {
        let mut k = 1;
        while p.pow(k) <= max_order as u64 {
            out.extend(abelian_p_groups(p, k));
            k += 1;
        }
    }
    let mut two_exp = 0;
    while 1usize << (two_exp + 1) <= max_order {
        two_exp += 1;
    }
    for quats in quaternion_multisets(two_exp) {
        let used: u32 = quats.iter().map(|a| a + 1).sum();
        let qs: Vec<FiniteGroup> = quats
            .iter()
            .map(|&a| generalized_quaternion(a).expect("alpha >= 2"))
            .collect();
        for rest in 0..=two_exp - used {
            for parts in partitions(rest) {
                let mut factors = qs.clone();
                factors.extend(cyclic_factors(2, &parts));
                out.extend(product_of(&factors));
            }
        }
    }
    out.sort_by_key(|g| g.order());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|k| partitions(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn catalog_contents() {
        let cat = pgroup_catalog(16);
        let labels: Vec<&str> = cat.iter().map(|g| g.label()).collect();
        for want in [
            "Z_2",
            "Z_4",
            "Z_2 x Z_2",
            "Z_9",
            "Z_3 x Z_3",
            "Q_2",
            "Q_4",
            "Q_2 x Z_2",
            "Z_2 x Z_2 x Z_2 x Z_2",
            "Z_13",
        ] {
            assert!(labels.contains(&want), "{want} missing from {labels:?}");
        }
        assert!(cat
            .iter()
            .all(|g| g.order() <= 16 && g.is_p_group().is_some()));
        assert!(cat.windows(2).all(|w| w[0].order() <= w[1].order()));
        let big = pgroup_catalog(256);
        assert!(big.iter().any(|g| g.label() == "Q_2 x Q_2"));
        assert!(big.iter().any(|g| g.label() == "Q_8 x Z_2 x Z_2"));
        assert!(big.iter().all(|g| g.order() <= 256));
    }
}
