use super::mat::{vaxpy, vdot, vscale};
use super::NumError;

/// A list of coordinate vectors orthonormal with respect to some inner
/// product, produced by [`orthonormalize`]. The frame remembers which of
/// the input vectors survived as `kept` (indices into the original list),
/// so callers can track rank-revealing drops.
#[derive(Debug, Clone)]
pub struct Frame {
    pub vectors: Vec<Vec<f64>>,
    pub kept: Vec<usize>,
}

impl Frame {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Gram–Schmidt under a caller-supplied inner product.
///
/// Uses the modified variant and a second re-orthogonalization pass for
/// stability. A vector is dropped (not an error) when its norm after
/// projection falls to `tol * (1 + original_norm)` — that is the
/// rank-revealing behaviour linear-span callers rely on. The inner
/// product must be positive definite on the spanned subspace; a negative
/// or vanishing squared norm on a surviving vector reports `GramNotPD`.
pub fn orthonormalize(
    vectors: &[Vec<f64>],
    gram: impl Fn(&[f64], &[f64]) -> f64,
    tol: f64,
) -> Result<Frame, NumError> {
    let mut out: Vec<Vec<f64>> = Vec::new();
    let mut kept = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let gn0 = gram(v, v);
        if gn0 < 0.0 {
            return Err(NumError::GramNotPD);
        }
        let orig = gn0.sqrt();
        let mut w = v.clone();
        // two passes of modified Gram-Schmidt
        for _ in 0..2 {
            for u in &out {
                let c = gram(&w, u);
                vaxpy(&mut w, -c, u);
            }
        }
        let gn = gram(&w, &w);
        if gn <= (tol * (1.0 + orig)).powi(2) {
            continue; // linearly dependent on the previous vectors
        }
        if gn < 0.0 || !gn.is_finite() {
            return Err(NumError::GramNotPD);
        }
        out.push(vscale(&w, 1.0 / gn.sqrt()));
        kept.push(idx);
    }
    Ok(Frame { vectors: out, kept })
}

/// Component of `v` inside the span of `frame` (frame assumed orthonormal
/// under `gram`).
pub fn project(v: &[f64], frame: &Frame, gram: impl Fn(&[f64], &[f64]) -> f64) -> Vec<f64> {
    let mut out = vec![0.0; v.len()];
    for u in &frame.vectors {
        let c = gram(v, u);
        vaxpy(&mut out, c, u);
    }
    out
}

/// Residual of `v` after removing its `frame` component; the norm of this
/// under `gram` measures how far `v` is from the span.
pub fn reject(v: &[f64], frame: &Frame, gram: impl Fn(&[f64], &[f64]) -> f64) -> Vec<f64> {
    let p = project(v, frame, &gram);
    v.iter().zip(&p).map(|(a, b)| a - b).collect()
}

/// Euclidean inner product, the default gram for coordinate work.
pub fn dot_gram(a: &[f64], b: &[f64]) -> f64 {
    vdot(a, b)
}
