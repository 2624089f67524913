//! Deterministic randomness: every trial anywhere in the crate derives
//! its generator from (user seed, check label, root index, trial index),
//! so reports are reproducible bit-for-bit regardless of execution order
//! or thread count.

use crate::numkit::{vaxpy, vdot, Frame};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

/// FNV-1a over the label and indices; used as the ChaCha stream id.
fn stream_id(label: &str, idx: usize, trial: usize) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    let mut eat = |byte: u8| {
        h ^= byte as u64;
        h = h.wrapping_mul(0x100000001b3);
    };
    for b in label.bytes() {
        eat(b);
    }
    for b in (idx as u64).to_le_bytes() {
        eat(b);
    }
    for b in (trial as u64).to_le_bytes() {
        eat(b);
    }
    h
}

pub fn derive_rng(seed: u64, label: &str, idx: usize, trial: usize) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(stream_id(label, idx, trial));
    rng
}

/// Euclidean-unit coefficient vector of length `n`, redrawn in the
/// (measure-zero) degenerate case.
pub fn unit_coeffs(rng: &mut ChaCha12Rng, n: usize) -> Vec<f64> {
    loop {
        let c: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        let norm = vdot(&c, &c).sqrt();
        if norm > 1e-6 {
            return c.iter().map(|x| x / norm).collect();
        }
    }
}

/// Linear combination of frame vectors with the given coefficients.
pub fn combine(frame: &Frame, coeffs: &[f64]) -> Vec<f64> {
    assert_eq!(frame.len(), coeffs.len());
    let dim = frame.vectors[0].len();
    let mut out = vec![0.0; dim];
    for (c, v) in coeffs.iter().zip(&frame.vectors) {
        vaxpy(&mut out, *c, v);
    }
    out
}

/// A random vector on the unit sphere of the frame's span: because the
/// frame is orthonormal in the working inner product, Euclidean-unit
/// coefficients give a unit vector there.
pub fn random_unit_in_frame(rng: &mut ChaCha12Rng, frame: &Frame) -> Vec<f64> {
    let c = unit_coeffs(rng, frame.len());
    combine(frame, &c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkit::orthonormalize;

    #[test]
    fn same_key_same_draws() {
        let mut a = derive_rng(42, "x", 1, 7);
        let mut b = derive_rng(42, "x", 1, 7);
        for _ in 0..16 {
            let x: f64 = a.sample(StandardNormal);
            let y: f64 = b.sample(StandardNormal);
            assert_eq!(x.to_bits(), y.to_bits());
        }
    }

    #[test]
    fn different_labels_decorrelate() {
        let mut a = derive_rng(42, "x", 0, 0);
        let mut b = derive_rng(42, "y", 0, 0);
        let xs: Vec<f64> = (0..8).map(|_| a.sample(StandardNormal)).collect();
        let ys: Vec<f64> = (0..8).map(|_| b.sample(StandardNormal)).collect();
        assert_ne!(xs, ys);
    }

    #[test]
    fn frame_sampling_is_unit_norm() {
        let f = orthonormalize(
            &[vec![1.0, 0.0, 0.0], vec![0.0, 2.0, 0.0]],
            |a, b| vdot(a, b),
            1e-10,
        )
        .unwrap();
        let mut rng = derive_rng(1, "sphere", 0, 0);
        for _ in 0..10 {
            let v = random_unit_in_frame(&mut rng, &f);
            assert!((vdot(&v, &v) - 1.0).abs() < 1e-12);
            assert!(v[2].abs() < 1e-15);
        }
    }
}
