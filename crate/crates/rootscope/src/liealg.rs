//! Structure-constant Lie algebra core.
//!
//! A [`LieAlgebra`] is built once from a matrix realization; after that,
//! every computation downstream works in basis coordinates with the
//! structure tensor, the Killing form `beta`, and (when a Cartan
//! involution is attached) the positive-definite form
//! `beta_sigma(x, y) = -beta(x, sigma y)`. Matrices reappear only when a
//! coordinate vector has to be realized again (group elements, expm).

use crate::numkit::{
    orthonormalize, rank, vaxpy, vdot, Cholesky, Frame, Mat, NumError,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LieError {
    #[error("basis matrices are linearly dependent")]
    DependentBasis,
    #[error("bracket leaves the span of the basis (residual {0:.3e})")]
    NotClosed(f64),
    #[error("Killing form is degenerate; the algebra is not semisimple")]
    Degenerate,
    #[error("Jacobi identity violated on basis triples (residual {0:.3e})")]
    JacobiViolation(f64),
    #[error("matrix does not lie in the span of the basis (residual {0:.3e})")]
    NotInSpan(f64),
    #[error("map is not an involution")]
    NotInvolution,
    #[error("map is not a Lie algebra automorphism (residual {0:.3e})")]
    NotAutomorphism(f64),
    #[error("eigenspaces of the involution do not span the algebra")]
    SplitInconsistent,
    #[error("candidate abelian vectors do not lie in the -1 eigenspace")]
    NotInP,
    #[error("candidate abelian vectors do not commute (residual {0:.3e})")]
    NotAbelian(f64),
    #[error(transparent)]
    Num(#[from] NumError),
}

/// Real semisimple Lie algebra presented by a matrix basis.
pub struct LieAlgebra {
    pub dim: usize,
    pub basis: Vec<Mat>,
    /// `[e_i, e_j] = sum_k structure[i][j][k] e_k`
    pub structure: Vec<Vec<Vec<f64>>>,
    /// Gram matrix of the Killing form in the basis.
    pub killing: Mat,
    ad_basis: Vec<Mat>,
    // least-squares machinery for expressing matrices in the basis
    span_cols: Mat,
    span_chol: Cholesky,
}

const CLOSURE_TOL: f64 = 1e-10;
const JACOBI_TOL: f64 = 1e-10;

impl LieAlgebra {
    /// Builds the algebra from a linearly independent matrix basis whose
    /// commutators close in its span. The Killing form is computed
    /// intrinsically from the structure constants, so it does not depend
    /// on the particular realization.
    pub fn from_basis(matrices: &[Mat]) -> Result<LieAlgebra, LieError> {
        let dim = matrices.len();
        if dim == 0 {
            return Err(LieError::DependentBasis);
        }
        let n = matrices[0].rows();
        assert!(
            matrices.iter().all(|m| m.rows() == n && m.cols() == n),
            "basis matrices must share one square shape"
        );

        // flatten the basis into the columns of an n^2 x dim matrix
        let mut span_cols = Mat::zeros(n * n, dim);
        for (j, m) in matrices.iter().enumerate() {
            for (i, &v) in m.flatten().iter().enumerate() {
                span_cols.set(i, j, v);
            }
        }
        if rank(&span_cols, 1e-10) < dim {
            return Err(LieError::DependentBasis);
        }
        let normal = span_cols.transpose().matmul(&span_cols);
        let span_chol = Cholesky::new(&normal).map_err(|_| LieError::DependentBasis)?;

        // structure constants by least squares on each commutator
        let fit = |target: &Mat| -> (Vec<f64>, f64) {
            let rhs: Vec<f64> = (0..dim)
                .map(|j| vdot(&span_cols.col(j), target.flatten()))
                .collect();
            let coeffs = span_chol.solve(&rhs);
            let mut resid = target.clone();
            for (j, &c) in coeffs.iter().enumerate() {
                resid = resid.sub(&matrices[j].scale(c));
            }
            (coeffs, resid.norm_fro())
        };

        let mut structure = vec![vec![vec![0.0; dim]; dim]; dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let comm = matrices[i].commutator(&matrices[j]);
                let (coeffs, resid) = fit(&comm);
                if resid > CLOSURE_TOL * (1.0 + comm.norm_fro()) {
                    return Err(LieError::NotClosed(resid));
                }
                for k in 0..dim {
                    structure[i][j][k] = coeffs[k];
                    structure[j][i][k] = -coeffs[k];
                }
            }
        }

        // ad matrices of the basis vectors: column j of ad(e_i) holds [e_i, e_j]
        let mut ad_basis = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut ad_i = Mat::zeros(dim, dim);
            for j in 0..dim {
                for k in 0..dim {
                    ad_i.set(k, j, structure[i][j][k]);
                }
            }
            ad_basis.push(ad_i);
        }

        let mut killing = Mat::zeros(dim, dim);
        for i in 0..dim {
            for j in i..dim {
                let v = ad_basis[i].matmul(&ad_basis[j]).trace();
                killing.set(i, j, v);
                killing.set(j, i, v);
            }
        }
        if rank(&killing, 1e-9) < dim {
            return Err(LieError::Degenerate);
        }

        let alg = LieAlgebra {
            dim,
            basis: matrices.to_vec(),
            structure,
            killing,
            ad_basis,
            span_cols,
            span_chol,
        };
        let jac = alg.jacobi_residual();
        if jac > JACOBI_TOL {
            return Err(LieError::JacobiViolation(jac));
        }
        Ok(alg)
    }

    /// Largest Jacobi identity residual over all basis triples.
    pub fn jacobi_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        let unit = |i: usize| {
            let mut v = vec![0.0; self.dim];
            v[i] = 1.0;
            v
        };
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let (ei, ej, ek) = (unit(i), unit(j), unit(k));
                    let mut total = self.bracket(&ei, &self.bracket(&ej, &ek));
                    vaxpy(&mut total, 1.0, &self.bracket(&ej, &self.bracket(&ek, &ei)));
                    vaxpy(&mut total, 1.0, &self.bracket(&ek, &self.bracket(&ei, &ej)));
                    worst = worst.max(total.iter().fold(0.0f64, |m, x| m.max(x.abs())));
                }
            }
        }
        worst
    }

    pub fn bracket(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.dim, "bracket: wrong coordinate length");
        assert_eq!(y.len(), self.dim, "bracket: wrong coordinate length");
        let mut out = vec![0.0; self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0.0 {
                continue;
            }
            vaxpy(&mut out, xi, &self.ad_basis[i].mul_vec(y));
        }
        out
    }

    /// Matrix of `ad(x) = [x, .]` acting on coordinates.
    pub fn ad(&self, x: &[f64]) -> Mat {
        assert_eq!(x.len(), self.dim, "ad: wrong coordinate length");
        let mut out = Mat::zeros(self.dim, self.dim);
        for (i, &xi) in x.iter().enumerate() {
            if xi != 0.0 {
                out = out.add(&self.ad_basis[i].scale(xi));
            }
        }
        out
    }

    pub fn killing_form(&self, x: &[f64], y: &[f64]) -> f64 {
        vdot(x, &self.killing.mul_vec(y))
    }

    /// Realizes a coordinate vector as a matrix.
    pub fn to_matrix(&self, x: &[f64]) -> Mat {
        assert_eq!(x.len(), self.dim);
        let n = self.basis[0].rows();
        let mut m = Mat::zeros(n, n);
        for (i, &c) in x.iter().enumerate() {
            if c != 0.0 {
                m = m.add(&self.basis[i].scale(c));
            }
        }
        m
    }

    /// Coordinates of a matrix in the basis (least squares, with a
    /// residual check against the reconstruction).
    pub fn coords_of(&self, m: &Mat) -> Result<Vec<f64>, LieError> {
        let rhs: Vec<f64> = (0..self.dim)
            .map(|j| vdot(&self.span_cols.col(j), m.flatten()))
            .collect();
        let coeffs = self.span_chol.solve(&rhs);
        let back = self.to_matrix(&coeffs);
        let resid = back.sub(m).norm_fro();
        if resid > 1e-9 * (1.0 + m.norm_fro()) {
            return Err(LieError::NotInSpan(resid));
        }
        Ok(coeffs)
    }
}

/// Cartan decomposition data: the involution in coordinates, the
/// positive-definite Gram matrix of `beta_sigma`, and orthonormal frames
/// for `k` (+1 eigenspace), `p` (-1 eigenspace) and the chosen maximal
/// abelian subspace `a` of `p`.
pub struct CartanData {
    pub sigma: Mat,
    pub gram: Mat,
    pub k_frame: Frame,
    pub p_frame: Frame,
    pub a_frame: Frame,
}

impl CartanData {
    /// Applies the involution to coordinates.
    pub fn apply_sigma(&self, x: &[f64]) -> Vec<f64> {
        self.sigma.mul_vec(x)
    }

    /// The `beta_sigma` inner product of two coordinate vectors.
    pub fn dot(&self, x: &[f64], y: &[f64]) -> f64 {
        vdot(x, &self.gram.mul_vec(y))
    }

    /// Norm under `beta_sigma`.
    pub fn norm(&self, x: &[f64]) -> f64 {
        self.dot(x, x).max(0.0).sqrt()
    }
}

impl LieAlgebra {
    /// `beta_sigma(x, y) = -beta(x, sigma y)`, the positive-definite inner
    /// product attached to the Cartan involution.
    pub fn beta_sigma(&self, cartan: &CartanData, x: &[f64], y: &[f64]) -> f64 {
        vdot(x, &cartan.gram.mul_vec(y))
    }

    /// Splits the algebra into the +1/-1 eigenspaces of an involutive
    /// automorphism `sigma` (given as its coordinate matrix). The returned
    /// data has an empty `a_frame`; attach one with
    /// [`LieAlgebra::attach_maximal_abelian`].
    pub fn cartan_split(&self, sigma: Mat) -> Result<CartanData, LieError> {
        assert_eq!(sigma.rows(), self.dim, "sigma must act on coordinates");
        assert!(sigma.is_square());

        let s2 = sigma.matmul(&sigma);
        if s2.sub(&Mat::identity(self.dim)).max_abs() > 1e-12 {
            return Err(LieError::NotInvolution);
        }

        // automorphism check on basis pairs: sigma[x,y] = [sigma x, sigma y]
        let unit = |i: usize| {
            let mut v = vec![0.0; self.dim];
            v[i] = 1.0;
            v
        };
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = sigma.mul_vec(&self.bracket(&unit(i), &unit(j)));
                let rhs = self.bracket(&sigma.mul_vec(&unit(i)), &sigma.mul_vec(&unit(j)));
                for (a, b) in lhs.iter().zip(&rhs) {
                    worst = worst.max((a - b).abs());
                }
            }
        }
        if worst > 1e-10 * (1.0 + sigma.max_abs()) {
            return Err(LieError::NotAutomorphism(worst));
        }

        // beta_sigma Gram matrix G = -K S; symmetric because sigma is a
        // beta-orthogonal automorphism
        let gram_raw = self.killing.matmul(&sigma).scale(-1.0);
        let asym = gram_raw.sub(&gram_raw.transpose()).max_abs();
        if asym > 1e-10 * (1.0 + gram_raw.max_abs()) {
            return Err(LieError::NotAutomorphism(asym));
        }
        let gram = gram_raw.add(&gram_raw.transpose()).scale(0.5);

        let bs = |x: &[f64], y: &[f64]| vdot(x, &gram.mul_vec(y));

        // eigenprojections (1 +- sigma)/2 of every basis vector span k and p
        let mut k_cand = Vec::with_capacity(self.dim);
        let mut p_cand = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let u = unit(i);
            let su = sigma.mul_vec(&u);
            k_cand.push((0..self.dim).map(|r| 0.5 * (u[r] + su[r])).collect::<Vec<_>>());
            p_cand.push((0..self.dim).map(|r| 0.5 * (u[r] - su[r])).collect::<Vec<_>>());
        }
        let k_frame = orthonormalize(&k_cand, bs, 1e-10)?;
        let p_frame = orthonormalize(&p_cand, bs, 1e-10)?;
        if k_frame.len() + p_frame.len() != self.dim {
            return Err(LieError::SplitInconsistent);
        }

        // beta(k, p) = 0: the eigenspaces are beta-orthogonal
        let mut cross = 0.0f64;
        for kv in &k_frame.vectors {
            for pv in &p_frame.vectors {
                cross = cross.max(self.killing_form(kv, pv).abs());
            }
        }
        if cross > 1e-10 * (1.0 + self.killing.max_abs()) {
            return Err(LieError::SplitInconsistent);
        }

        Ok(CartanData {
            sigma,
            gram,
            k_frame,
            p_frame,
            a_frame: Frame {
                vectors: Vec::new(),
                kept: Vec::new(),
            },
        })
    }

    /// Installs a maximal abelian subspace of `p`, given spanning
    /// coordinate vectors. Verifies membership in `p` and commutativity,
    /// and orthonormalizes the span under `beta_sigma` (which restricts
    /// to `beta` on `p`). Maximality itself is the caller's claim; the
    /// catalog checks it against the centralizer.
    pub fn attach_maximal_abelian(
        &self,
        cartan: CartanData,
        candidates: &[Vec<f64>],
    ) -> Result<CartanData, LieError> {
        let bs = |x: &[f64], y: &[f64]| vdot(x, &cartan.gram.mul_vec(y));
        for v in candidates {
            // v must be fixed by -sigma: project onto p and compare
            let sv = cartan.apply_sigma(v);
            let flip: Vec<f64> = v.iter().zip(&sv).map(|(a, b)| a + b).collect();
            let vn = vdot(v, v).sqrt();
            if flip.iter().any(|x| x.abs() > 1e-10 * (1.0 + vn)) {
                return Err(LieError::NotInP);
            }
        }
        let mut worst = 0.0f64;
        for (i, x) in candidates.iter().enumerate() {
            for y in candidates.iter().skip(i + 1) {
                let b = self.bracket(x, y);
                worst = worst.max(b.iter().fold(0.0f64, |m, v| m.max(v.abs())));
            }
        }
        if worst > 1e-10 {
            return Err(LieError::NotAbelian(worst));
        }
        let a_frame = orthonormalize(candidates, bs, 1e-10)?;
        Ok(CartanData { a_frame, ..cartan })
    }

    /// Euclidean-orthonormal basis of the centralizer of the abelian
    /// subspace: the kernel of the stacked ad matrices of the `a`-frame.
    pub fn centralizer_of_a(&self, cartan: &CartanData) -> Result<Vec<Vec<f64>>, LieError> {
        let r = cartan.a_frame.len();
        assert!(r > 0, "no abelian subspace attached");
        let mut stacked = Mat::zeros(r * self.dim, self.dim);
        for (s, a) in cartan.a_frame.vectors.iter().enumerate() {
            let ad_a = self.ad(a);
            for i in 0..self.dim {
                for j in 0..self.dim {
                    stacked.set(s * self.dim + i, j, ad_a.at(i, j));
                }
            }
        }
        let kernel = crate::numkit::nullspace(&stacked, 1e-10)?;
        Ok(match kernel {
            None => Vec::new(),
            Some(k) => (0..k.cols()).map(|j| k.col(j)).collect(),
        })
    }
}
