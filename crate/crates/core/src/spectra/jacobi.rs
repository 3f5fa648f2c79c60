//! Cyclic Jacobi eigenvalues for dense real symmetric matrices.

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of the row-major symmetric matrix `a` (dimension `n`),
/// sorted descending. Rotations sweep until the off-diagonal Frobenius norm
/// drops below `1e-12 · n` times the largest entry magnitude (at least 1).
pub fn symmetric_eigenvalues(n: usize, a: &[f64]) -> Vec<f64> {
    assert_eq!(a.len(), n * n, "matrix must be n x n");
    let mut m = a.to_vec();
    let scale = m.iter().fold(1.0f64, |s, x| s.max(x.abs()));
    let threshold = 1e-12 * n as f64 * scale;

    for _ in 0..MAX_SWEEPS {
        if off_norm(n, &m) < threshold {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq.abs() < f64::MIN_POSITIVE {
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = m[k * n + p];
                    let akq = m[k * n + q];
                    m[k * n + p] = c * akp - s * akq;
                    m[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = m[p * n + k];
                    let aqk = m[q * n + k];
                    m[p * n + k] = c * apk - s * aqk;
                    m[q * n + k] = s * apk + c * aqk;
                }
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| m[i * n + i]).collect();
    eig.sort_by(|x, y| y.total_cmp(x));
    eig
}

fn off_norm(n: usize, m: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += m[i * n + j] * m[i * n + j];
            }
        }
    }
    s.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let e = symmetric_eigenvalues(2, &[2.0, 1.0, 1.0, 2.0]);
        assert!((e[0] - 3.0).abs() < 1e-12 && (e[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn path_laplacian() {
        // P_3 Laplacian: 0, 1, 3
        let l = [1.0, -1.0, 0.0, -1.0, 2.0, -1.0, 0.0, -1.0, 1.0];
        let e = symmetric_eigenvalues(3, &l);
        for (x, y) in e.iter().zip([3.0, 1.0, 0.0]) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn cycle_laplacian() {
        // C_n: 2 − 2 cos(2πk/n)
        let n = 9;
        let mut l = vec![0.0; n * n];
        for i in 0..n {
            l[i * n + i] = 2.0;
            l[i * n + (i + 1) % n] = -1.0;
            l[((i + 1) % n) * n + i] = -1.0;
        }
        let e = symmetric_eigenvalues(n, &l);
        let mut want: Vec<f64> = (0..n)
            .map(|k| 2.0 - 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
            .collect();
        want.sort_by(|x, y| y.total_cmp(x));
        for (x, y) in e.iter().zip(&want) {
            assert!((x - y).abs() < 1e-10, "{x} vs {y}");
        }
    }

    #[test]
    fn empty() {
        assert!(symmetric_eigenvalues(0, &[]).is_empty());
    }
}
