use super::mat::Mat;
use super::NumError;

/// Eigendecomposition `A = V diag(values) V^T` of a symmetric matrix,
/// eigenvalues in ascending order, eigenvectors as columns of `vectors`.
#[derive(Debug, Clone)]
pub struct SymEig {
    pub values: Vec<f64>,
    pub vectors: Mat,
}

const MAX_SWEEPS: usize = 100;

/// Symmetric eigendecomposition by the cyclic Jacobi method.
///
/// Sweeps rotate away each off-diagonal entry in turn until the
/// off-diagonal Frobenius mass is negligible relative to the input.
/// Symmetry of the input is checked against `1e-12 * (1 + max |a_ij|)`.
pub fn sym_eig(a: &Mat) -> Result<SymEig, NumError> {
    assert!(a.is_square(), "sym_eig requires a square matrix");
    let n = a.rows();
    let sym_tol = 1e-12 * (1.0 + a.max_abs());
    for i in 0..n {
        for j in i + 1..n {
            if (a.at(i, j) - a.at(j, i)).abs() > sym_tol {
                return Err(NumError::NonSymmetric);
            }
        }
    }

    let mut m = a.clone();
    // force exact symmetry so rotation updates stay consistent
    for i in 0..n {
        for j in i + 1..n {
            let avg = 0.5 * (m.at(i, j) + m.at(j, i));
            m.set(i, j, avg);
            m.set(j, i, avg);
        }
    }
    let mut v = Mat::identity(n);
    let stop = 1e-30 * (1.0 + a.norm_fro().powi(2));

    for _sweep in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| m.at(i, j) * m.at(i, j))
            .sum();
        if off <= stop {
            return Ok(finish(m, v));
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = m.at(p, q);
                if apq == 0.0 {
                    continue;
                }
                // Rotation angle from the classic two-by-two reduction:
                // theta measures (a_qq - a_pp) / 2 a_pq, t = tan is the
                // smaller root of t^2 + 2 theta t - 1 = 0.
                let theta = 0.5 * (m.at(q, q) - m.at(p, p)) / apq;
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                let app = m.at(p, p);
                let aqq = m.at(q, q);
                m.set(p, p, app - t * apq);
                m.set(q, q, aqq + t * apq);
                m.set(p, q, 0.0);
                m.set(q, p, 0.0);
                for k in 0..n {
                    if k != p && k != q {
                        let akp = m.at(k, p);
                        let akq = m.at(k, q);
                        m.set(k, p, akp - s * (akq + tau * akp));
                        m.set(p, k, m.at(k, p));
                        m.set(k, q, akq + s * (akp - tau * akq));
                        m.set(q, k, m.at(k, q));
                    }
                }
                for k in 0..n {
                    let vkp = v.at(k, p);
                    let vkq = v.at(k, q);
                    v.set(k, p, vkp - s * (vkq + tau * vkp));
                    v.set(k, q, vkq + s * (vkp - tau * vkq));
                }
            }
        }
    }

    // check whether the final sweep already met the tolerance
    let off: f64 = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| m.at(i, j) * m.at(i, j))
        .sum();
    if off <= stop {
        Ok(finish(m, v))
    } else {
        Err(NumError::NoConvergence)
    }
}

fn finish(m: Mat, v: Mat) -> SymEig {
    let n = m.rows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m.at(i, i).partial_cmp(&m.at(j, j)).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| m.at(i, i)).collect();
    let mut vectors = Mat::zeros(n, n);
    for (newj, &oldj) in order.iter().enumerate() {
        // fix an overall sign so results do not depend on rotation history:
        // make the largest-magnitude component positive
        let col = v.col(oldj);
        let lead = col
            .iter()
            .cloned()
            .max_by(|a, b| a.abs().partial_cmp(&b.abs()).unwrap())
            .unwrap();
        let sgn = if lead < 0.0 { -1.0 } else { 1.0 };
        for i in 0..n {
            vectors.set(i, newj, sgn * col[i]);
        }
    }
    SymEig { values, vectors }
}

/// Orthonormal basis (columns) for the kernel of `a`, via the symmetric
/// eigendecomposition of `a^T a`: eigenvalues below
/// `(tol * (1 + ||a||_F))^2` mark kernel directions.
///
/// The eigenvalue cut is floored at the eigensolver's own resolution
/// (`~1e-14` relative to `||a^T a||`), since squaring a tolerance like
/// `1e-9` would otherwise demand more accuracy than the decomposition
/// delivers and drop genuine kernel vectors to rounding noise.
///
/// Returns `None` when the kernel is trivial.
pub fn nullspace(a: &Mat, tol: f64) -> Result<Option<Mat>, NumError> {
    let ata = a.transpose().matmul(a);
    let eig = sym_eig(&ata)?;
    let tau = tol * (1.0 + a.norm_fro());
    let tau2 = (tau * tau).max(1e-14 * (1.0 + ata.norm_fro()));
    let dim = eig.values.iter().filter(|&&v| v.abs() <= tau2).count();
    if dim == 0 {
        return Ok(None);
    }
    let n = a.cols();
    let mut basis = Mat::zeros(n, dim);
    for j in 0..dim {
        for i in 0..n {
            basis.set(i, j, eig.vectors.at(i, j));
        }
    }
    Ok(Some(basis))
}
