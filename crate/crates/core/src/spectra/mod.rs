//! Laplacian spectra: exact certification of integer eigenvalues, a numeric
//! fallback for the rest, and spectral queries built on top.
//!
//! [`spectrum`] first collapses twin classes. A class of `s` twins whose
//! outside neighbourhood has `ext` vertices carries `s − 1` eigenvalues equal
//! to `ext + s` (clique class) or `ext` (independent class); the rest of the
//! spectrum belongs to the integer quotient matrix `diag(ext) − A_q·diag(s)`.
//! Its characteristic polynomial mod a large prime rules out every integer
//! that is not a root, and exact nullity certifies the multiplicity of each
//! remaining candidate.

mod charpoly;
mod exact;
mod jacobi;

use std::fmt;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

pub use charpoly::{join_charpoly, union_charpoly, FactoredCharPoly};
pub use exact::RationalMatrix;
pub use jacobi::symmetric_eigenvalues;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::twins::{twin_partition, TwinKind};

/// A numeric eigenvalue within this distance of a certified integer with
/// spare multiplicity is absorbed into it.
pub const ABSORB_TOLERANCE: f64 = 1e-6;

/// Default tolerance attached to numeric eigenvalues.
pub const NUMERIC_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub enum SpectrumKind {
    /// Laplacian integral: the characteristic polynomial fully factored.
    Exact(FactoredCharPoly),
    /// Certified integer eigenvalues plus the remaining eigenvalues numerically
    /// (descending).
    Mixed {
        exact: FactoredCharPoly,
        numeric: Vec<f64>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub n: usize,
    pub kind: SpectrumKind,
    pub tolerance: f64,
}

/// An eigenvalue that is either a certified integer or a numeric real.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum SpectralValue {
    Integer(u64),
    Real(f64),
}

impl SpectralValue {
    pub fn as_f64(self) -> f64 {
        match self {
            SpectralValue::Integer(v) => v as f64,
            SpectralValue::Real(v) => v,
        }
    }

    pub fn as_integer(self) -> Option<u64> {
        match self {
            SpectralValue::Integer(v) => Some(v),
            SpectralValue::Real(_) => None,
        }
    }

    pub fn is_integer(self) -> bool {
        matches!(self, SpectralValue::Integer(_))
    }
}

impl fmt::Display for SpectralValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralValue::Integer(v) => write!(f, "{v}"),
            SpectralValue::Real(v) => write!(f, "{v:.9}"),
        }
    }
}

impl Spectrum {
    pub fn exact(p: FactoredCharPoly) -> Self {
        Spectrum {
            n: p.degree() as usize,
            kind: SpectrumKind::Exact(p),
            tolerance: 0.0,
        }
    }

    pub fn is_laplacian_integral(&self) -> bool {
        matches!(self.kind, SpectrumKind::Exact(_))
    }

    /// Certified integer part (the whole spectrum when exact).
    pub fn exact_part(&self) -> &FactoredCharPoly {
        match &self.kind {
            SpectrumKind::Exact(p) => p,
            SpectrumKind::Mixed { exact, .. } => exact,
        }
    }

    /// Non-integer eigenvalues, descending.
    pub fn numeric_part(&self) -> &[f64] {
        match &self.kind {
            SpectrumKind::Exact(_) => &[],
            SpectrumKind::Mixed { numeric, .. } => numeric,
        }
    }

    pub fn as_exact(&self) -> Option<&FactoredCharPoly> {
        match &self.kind {
            SpectrumKind::Exact(p) => Some(p),
            SpectrumKind::Mixed { .. } => None,
        }
    }

    pub fn multiplicity(&self, lambda: u64) -> u64 {
        self.exact_part().multiplicity(lambda)
    }

    /// All eigenvalues with multiplicity, descending.
    pub fn values(&self) -> Vec<SpectralValue> {
        let mut out: Vec<SpectralValue> = Vec::with_capacity(self.n);
        for (r, m) in self.exact_part().iter() {
            out.extend(std::iter::repeat_n(SpectralValue::Integer(r), m as usize));
        }
        out.extend(self.numeric_part().iter().map(|&x| SpectralValue::Real(x)));
        out.sort_by(|a, b| b.as_f64().total_cmp(&a.as_f64()));
        out
    }

    /// Sum of eigenvalues; exact for the integer part.
    pub fn trace(&self) -> f64 {
        self.exact_part().root_sum() as f64 + self.numeric_part().iter().sum::<f64>()
    }

    /// Two-row layout: eigenvalues over multiplicities, descending.
    pub fn table(&self) -> String {
        let mut cols: Vec<(String, String)> = Vec::new();
        let values = self.values();
        let mut i = 0;
        while i < values.len() {
            let v = values[i];
            let mut j = i + 1;
            while j < values.len() && same_value(values[j], v, self.tolerance) {
                j += 1;
            }
            cols.push((v.to_string(), (j - i).to_string()));
            i = j;
        }
        let widths: Vec<usize> = cols.iter().map(|(a, b)| a.len().max(b.len())).collect();
        let row = |pick: fn(&(String, String)) -> &String| {
            cols.iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{:>w$}", pick(c)))
                .collect::<Vec<_>>()
                .join("  ")
        };
        format!("( {} )\n( {} )", row(|c| &c.0), row(|c| &c.1))
    }
}

fn same_value(a: SpectralValue, b: SpectralValue, tol: f64) -> bool {
    match (a, b) {
        (SpectralValue::Integer(x), SpectralValue::Integer(y)) => x == y,
        (SpectralValue::Real(x), SpectralValue::Real(y)) => (x - y).abs() <= tol,
        _ => false,
    }
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Spectrum", 4)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("exact", self.exact_part())?;
        s.serialize_field("numeric", self.numeric_part())?;
        s.serialize_field("is_laplacian_integral", &self.is_laplacian_integral())?;
        s.end()
    }
}

/// `L = D − A` as an exact matrix.
pub fn laplacian(g: &Graph) -> RationalMatrix {
    let n = g.vertex_count();
    RationalMatrix::from_integers(n, laplacian_entries(g)).expect("square by construction")
}

fn laplacian_entries(g: &Graph) -> Vec<i64> {
    let n = g.vertex_count();
    let mut a = vec![0i64; n * n];
    for u in 0..n {
        a[u * n + u] = g.degree(u) as i64;
        for v in g.neighbors(u) {
            a[u * n + v] = -1;
        }
    }
    a
}

/// Multiplicity of `lambda` as a Laplacian eigenvalue: the exact nullity of
/// `L − λI` on the full matrix.
pub fn integer_eigenvalue_multiplicity(g: &Graph, lambda: u64) -> u64 {
    if lambda > g.vertex_count() as u64 {
        return 0;
    }
    laplacian(g).shifted(lambda as i64).nullity() as u64
}

/// Same as [`integer_eigenvalue_multiplicity`], by Bareiss elimination only.
pub fn bareiss_eigenvalue_multiplicity(g: &Graph, lambda: u64) -> u64 {
    laplacian(g).shifted(lambda as i64).bareiss_nullity() as u64
}

/// All Laplacian eigenvalues by Jacobi on the full matrix, descending.
pub fn numeric_eigenvalues(g: &Graph) -> Vec<f64> {
    let n = g.vertex_count();
    let a: Vec<f64> = laplacian_entries(g).into_iter().map(|x| x as f64).collect();
    symmetric_eigenvalues(n, &a)
}

/// Laplacian spectrum, exact whenever the graph is Laplacian integral.
pub fn spectrum(g: &Graph) -> Spectrum {
    let n = g.vertex_count();
    let twins = twin_partition(g, true);
    let k = twins.len();
    let sizes: Vec<u64> = twins
        .classes
        .iter()
        .map(|c| c.members.len() as u64)
        .collect();
    let mut adjacent = vec![false; k * k];
    let mut ext = vec![0u64; k];
    for a in 0..k {
        for b in 0..k {
            if a != b && twins.adjacent(g, a, b) {
                adjacent[a * k + b] = true;
                ext[a] += sizes[b];
            }
        }
    }

    let mut certified = FactoredCharPoly::one();
    for (c, class) in twins.classes.iter().enumerate() {
        let s = sizes[c];
        let value = match class.kind {
            TwinKind::Clique => ext[c] + s,
            TwinKind::Independent => ext[c],
        };
        certified.insert(value, s - 1);
    }

    // quotient B = diag(ext) − A_q·diag(s)
    let mut b = vec![0i64; k * k];
    for i in 0..k {
        b[i * k + i] = ext[i] as i64;
        for j in 0..k {
            if adjacent[i * k + j] {
                b[i * k + j] = -(sizes[j] as i64);
            }
        }
    }
    let chi = exact::charpoly_mod(k, &b);
    let mut quotient = FactoredCharPoly::one();
    for lambda in 0..=n as u64 {
        if exact::eval_mod(&chi, lambda) != 0 {
            continue;
        }
        let shifted: Vec<i64> = (0..k * k)
            .map(|idx| {
                if idx / k == idx % k {
                    b[idx] - lambda as i64
                } else {
                    b[idx]
                }
            })
            .collect();
        quotient.insert(lambda, exact::nullity(k, &shifted) as u64);
    }
    certified.absorb(&quotient);

    if certified.degree() == n as u64 {
        return Spectrum::exact(certified);
    }

    // symmetrised quotient S_ij = −a_ij·sqrt(s_i s_j)
    let mut sym = vec![0f64; k * k];
    for i in 0..k {
        sym[i * k + i] = ext[i] as f64;
        for j in 0..k {
            if adjacent[i * k + j] {
                sym[i * k + j] = -((sizes[i] * sizes[j]) as f64).sqrt();
            }
        }
    }
    let mut numeric = symmetric_eigenvalues(k, &sym);
    for (lambda, mult) in quotient.iter() {
        for _ in 0..mult {
            let closest = numeric
                .iter()
                .enumerate()
                .min_by(|x, y| {
                    (x.1 - lambda as f64)
                        .abs()
                        .total_cmp(&(y.1 - lambda as f64).abs())
                })
                .map(|(i, _)| i)
                .expect("quotient has as many numeric as certified eigenvalues");
            debug_assert!((numeric[closest] - lambda as f64).abs() < ABSORB_TOLERANCE);
            numeric.remove(closest);
        }
    }
    Spectrum {
        n,
        kind: SpectrumKind::Mixed {
            exact: certified,
            numeric,
        },
        tolerance: NUMERIC_TOLERANCE,
    }
}

/// Second-smallest eigenvalue `λ_{n−1}`.
pub fn algebraic_connectivity(s: &Spectrum) -> Result<SpectralValue> {
    if s.n < 2 {
        return Err(Error::Domain(format!(
            "algebraic connectivity needs at least 2 vertices, got {}",
            s.n
        )));
    }
    let values = s.values();
    Ok(values[values.len() - 2])
}

/// Multiplicity of the largest eigenvalue.
pub fn spectral_radius_multiplicity(s: &Spectrum) -> Result<u64> {
    let values = s.values();
    let Some(&top) = values.first() else {
        return Err(Error::Domain("spectral radius of the null graph".into()));
    };
    Ok(values
        .iter()
        .take_while(|&&v| same_value(v, top, s.tolerance.max(NUMERIC_TOLERANCE)))
        .count() as u64)
}

/// Largest eigenvalue `λ_1`.
pub fn spectral_radius(s: &Spectrum) -> Result<SpectralValue> {
    s.values()
        .first()
        .copied()
        .ok_or_else(|| Error::Domain("spectral radius of the null graph".into()))
}

/// Spectrum of the complement: keeps one zero and maps the other `n − 1`
/// eigenvalues `λ ↦ n − λ`.
pub fn complement_spectrum(s: &Spectrum) -> Result<Spectrum> {
    let p = s.as_exact().ok_or_else(|| {
        Error::Unsupported(
            "complement spectrum needs an exact spectrum; compute it directly".into(),
        )
    })?;
    if s.n == 0 {
        return Ok(s.clone());
    }
    let n = s.n as u64;
    let mut rest = p.clone();
    rest.remove_one(0)?;
    let mut out = FactoredCharPoly::one();
    out.insert(0, 1);
    for (r, m) in rest.iter() {
        if r > n {
            return Err(Error::Contradiction(format!(
                "eigenvalue {r} exceeds n = {n}"
            )));
        }
        out.insert(n - r, m);
    }
    Ok(Spectrum::exact(out))
}

/// Largest spectral radius over the components of a graph.
pub fn max_component_radius(parts: &[Spectrum]) -> Result<SpectralValue> {
    let mut best: Option<SpectralValue> = None;
    for s in parts {
        let r = spectral_radius(s)?;
        if best.is_none_or(|b| r.as_f64() > b.as_f64()) {
            best = Some(r);
        }
    }
    best.ok_or_else(|| Error::Domain("no components given".into()))
}
