//! Scanner for the integrality conjecture on cyclic power graphs.

use serde::Serialize;
use serde_json::json;

use super::{run_claim, ClaimReport};
use crate::arith::factorize;
use crate::error::{Error, Result};
use crate::graph::power_graph;
use crate::group::cyclic_group;
use crate::spectra::{algebraic_connectivity, spectrum};

/// The three conjectured-equivalent statements for `G(Z_n)`, with the
/// predicate under both readings of "product of two primes".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub algcon_integer: bool,
    pub laplacian_integral: bool,
    /// Prime power or product of two distinct primes.
    pub predicate_strict: bool,
    /// Prime power or product of two primes, equal primes allowed.
    pub predicate_loose: bool,
}

impl ConjectureRow {
    pub fn compute(n: usize) -> Result<Self> {
        let s = spectrum(&power_graph(&cyclic_group(n)?));
        let f = factorize(n as u64)?;
        Ok(ConjectureRow {
            n,
            algcon_integer: algebraic_connectivity(&s)?.is_integer(),
            laplacian_integral: s.is_laplacian_integral(),
            predicate_strict: f.is_prime_power() || f.is_product_of_two_distinct_primes(),
            predicate_loose: f.is_prime_power() || f.is_product_of_two_primes(),
        })
    }

    pub fn holds_strict(&self) -> bool {
        self.algcon_integer == self.laplacian_integral
            && self.laplacian_integral == self.predicate_strict
    }

    pub fn holds_loose(&self) -> bool {
        self.algcon_integer == self.laplacian_integral
            && self.laplacian_integral == self.predicate_loose
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureScan {
    pub rows: Vec<ConjectureRow>,
    /// `n` where the three statements disagree under each reading.
    pub failures_strict: Vec<usize>,
    pub failures_loose: Vec<usize>,
}

impl ConjectureScan {
    pub fn tsv(&self) -> String {
        let mut out = String::from(
            "n\talgcon_integer\tlaplacian_integral\tpredicate_strict\tpredicate_loose\n",
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                r.n, r.algcon_integer, r.laplacian_integral, r.predicate_strict, r.predicate_loose
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("scan serializes")
    }
}

/// Evaluates the conjecture for `2 ≤ n ≤ max_n`.
pub fn scan_conjecture(max_n: usize) -> Result<ConjectureScan> {
    if max_n < 2 {
        return Err(Error::Domain(format!("scan needs max_n >= 2, got {max_n}")));
    }
    let rows = (2..=max_n)
        .map(ConjectureRow::compute)
        .collect::<Result<Vec<_>>>()?;
    let failures_strict = rows
        .iter()
        .filter(|r| !r.holds_strict())
        .map(|r| r.n)
        .collect();
    let failures_loose = rows
        .iter()
        .filter(|r| !r.holds_loose())
        .map(|r| r.n)
        .collect();
    Ok(ConjectureScan {
        rows,
        failures_strict,
        failures_loose,
    })
}

/// The scan as a claim: fails on any disagreement under the distinct-primes
/// reading or any row with an integral spectrum but non-integral `μ`.
pub fn conjecture_report(max_n: usize) -> ClaimReport {
    run_claim("conjecture", json!({ "max_n": max_n }), |l| {
        let scan = scan_conjecture(max_n)?;
        for r in &scan.rows {
            l.require(!r.laplacian_integral || r.algcon_integer, || {
                format!(
                    "n = {}: Laplacian integral but algebraic connectivity not an integer",
                    r.n
                )
            });
            l.require(r.holds_strict(), || {
                format!(
                    "n = {}: algcon_integer = {}, laplacian_integral = {}, predicate = {}",
                    r.n, r.algcon_integer, r.laplacian_integral, r.predicate_strict
                )
            });
        }
        l.record("rows", scan.rows.len());
        l.record("failures_strict", &scan.failures_strict);
        l.record("failures_loose", &scan.failures_loose);
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Verdict;

    #[test]
    fn rows() {
        let r = |n| ConjectureRow::compute(n).unwrap();
        let six = r(6);
        assert!(six.algcon_integer && six.laplacian_integral && six.predicate_strict);
        let eight = r(8);
        assert!(eight.algcon_integer && eight.laplacian_integral && eight.predicate_strict);
        let twelve = r(12);
        assert!(!twelve.predicate_strict && !twelve.predicate_loose);
        assert!(!twelve.laplacian_integral);
    }

    #[test]
    fn small_scan() {
        let scan = scan_conjecture(50).unwrap();
        assert_eq!(scan.rows.len(), 49);
        assert_eq!(scan.tsv().lines().count(), 50);
        assert!(
            scan.failures_strict.is_empty(),
            "{:?}",
            scan.failures_strict
        );
        assert_eq!(conjecture_report(30).verdict, Verdict::Pass);
        assert!(scan_conjecture(1).is_err());
    }
}
