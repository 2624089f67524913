//! The restricted root decomposition engine.
//!
//! Given a Cartan decomposition with a maximal abelian subspace `a`, this
//! module simultaneously diagonalizes `ad(H)` for `H` in `a`, recovers
//! the set of restricted roots with their joint eigenspaces and
//! multiplicities, the centralizer `m` of `a` in `k`, and the coroots
//! `H_lambda` defined by `beta(H_lambda, H) = lambda(H)`.
//!
//! Strategy: eigendecompose `ad(H*)` for one generic element `H*` of `a`
//! (it is self-adjoint for the inner product `beta_sigma`), then read off
//! each eigenvector's full covector `(lambda(A_1), ..., lambda(A_r))` by
//! Rayleigh quotients and regroup on covectors. Genericity failures are
//! detected through per-vector eigen-residuals and retried with a fresh
//! generic element.

use crate::liealg::{CartanData, LieAlgebra, LieError};
use crate::numkit::{
    orthonormalize, project, reject, solve_spd, sym_eig, vaxpy, vdot, vscale, Frame, Mat,
    NumError,
};
use crate::report::{CheckCtx, CheckEntry, VerificationReport};
use crate::sample::derive_rng;
use rand::Rng;
use rand_distr::StandardNormal;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RootError {
    #[error("the abelian subspace is trivial; no root decomposition exists")]
    EmptyA,
    #[error("no generic element found after {0} attempts")]
    GenericityFailure(usize),
    #[error("root covectors too close to separate (spread {0:.3e})")]
    ClusterAmbiguity(f64),
    #[error("Killing Gram matrix on the abelian subspace is singular")]
    GramSingular,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("no root matches the given covector")]
    UnknownRoot,
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Eigenvalue cluster gap after normalizing the generic `ad` to unit
/// spectral radius.
pub const CLUSTER_GAP: f64 = 1e-6;

const MAX_REDRAWS: usize = 5;

/// Restricted root data: roots are covectors listed by their values on
/// the `a`-frame, sorted lexicographically; `spaces`, `coroots` and
/// `multiplicities` are parallel to `roots`.
pub struct RootDatum {
    pub a_dim: usize,
    pub roots: Vec<Vec<f64>>,
    pub spaces: Vec<Frame>,
    pub m_frame: Frame,
    pub coroots: Vec<Vec<f64>>,
    pub multiplicities: Vec<usize>,
    /// Covector matching tolerance fixed at build time.
    pub match_tol: f64,
}

impl RootDatum {
    /// Index of the root matching `cov` within the build-time tolerance.
    pub fn find_root(&self, cov: &[f64]) -> Option<usize> {
        self.roots.iter().position(|r| {
            r.iter()
                .zip(cov)
                .all(|(a, b)| (a - b).abs() <= self.match_tol)
        })
    }

    /// Index of `-lambda` for the root at `idx`.
    pub fn negative_of(&self, idx: usize) -> Option<usize> {
        let neg: Vec<f64> = self.roots[idx].iter().map(|x| -x).collect();
        self.find_root(&neg)
    }

    /// `a_dim + dim m + sum of multiplicities`.
    pub fn total_dim(&self) -> usize {
        self.a_dim + self.m_frame.len() + self.multiplicities.iter().sum::<usize>()
    }

    /// `lambda(H)` for `H` given in full coordinates, using the root's
    /// defining property through the coroot: `lambda(H) = beta(H_lambda, H)`.
    pub fn eval_root(&self, alg: &LieAlgebra, idx: usize, h: &[f64]) -> f64 {
        alg.killing_form(&self.coroots[idx], h)
    }

    /// `lambda(H_lambda)`, the positive scalar central to the proofs.
    pub fn lambda_of_coroot(&self, alg: &LieAlgebra, idx: usize) -> f64 {
        alg.killing_form(&self.coroots[idx], &self.coroots[idx])
    }
}

fn lex_cmp(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.partial_cmp(y).expect("finite covector values") {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    std::cmp::Ordering::Equal
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, i: usize) -> usize {
        if self.0[i] != i {
            let root = self.find(self.0[i]);
            self.0[i] = root;
        }
        self.0[i]
    }
    fn union(&mut self, i: usize, j: usize) {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri != rj {
            self.0[ri.max(rj)] = ri.min(rj);
        }
    }
}

/// Computes the full restricted root space decomposition.
pub fn decompose(
    alg: &LieAlgebra,
    cartan: &CartanData,
    tol: f64,
    seed: u64,
) -> Result<RootDatum, RootError> {
    let r = cartan.a_frame.len();
    if r == 0 {
        return Err(RootError::EmptyA);
    }
    let dim = alg.dim;
    let gram = &cartan.gram;
    let gdot = |x: &[f64], y: &[f64]| vdot(x, &gram.mul_vec(y));
    let gnorm = |x: &[f64]| gdot(x, x).max(0.0).sqrt();

    // ad(A_i) must be self-adjoint for beta_sigma: G ad = ad^T G
    for a in &cartan.a_frame.vectors {
        let ad_a = alg.ad(a);
        let lhs = gram.matmul(&ad_a);
        let resid = lhs.sub(&lhs.transpose()).max_abs();
        if resid > 1e-9 * (1.0 + gram.max_abs()) {
            return Err(RootError::Inconsistent(format!(
                "ad of an a-frame vector is not beta_sigma-self-adjoint (residual {:.3e})",
                resid
            )));
        }
    }

    // orthonormal basis Q for beta_sigma from the Gram eigendecomposition
    let ge = sym_eig(gram)?;
    if ge.values[0] <= 0.0 {
        return Err(RootError::Inconsistent(
            "beta_sigma Gram matrix is not positive definite".into(),
        ));
    }
    let mut q = Mat::zeros(dim, dim);
    for j in 0..dim {
        let s = 1.0 / ge.values[j].sqrt();
        for i in 0..dim {
            q.set(i, j, ge.vectors.at(i, j) * s);
        }
    }

    'attempt: for attempt in 0..MAX_REDRAWS {
        // (i) generic element of a
        let mut rng = derive_rng(seed, "generic-element", 0, attempt);
        let coeffs: Vec<f64> = (0..r).map(|_| rng.sample(StandardNormal)).collect();
        let mut hstar = vec![0.0; dim];
        for (c, a) in coeffs.iter().zip(&cartan.a_frame.vectors) {
            vaxpy(&mut hstar, *c, a);
        }

        // (ii) symmetrized matrix of ad(H*) in the Q basis
        let ad_h = alg.ad(&hstar);
        let t_raw = q.transpose().matmul(&gram.matmul(&ad_h)).matmul(&q);
        let t = t_raw.add(&t_raw.transpose()).scale(0.5);
        let te = sym_eig(&t)?;

        // eigenvectors back in coordinates; they are beta_sigma-orthonormal
        let vectors: Vec<Vec<f64>> = (0..dim).map(|j| q.mul_vec(&te.vectors.col(j))).collect();

        // (iv) covector of every eigenvector by Rayleigh quotients, with a
        // residual check that catches eigenspace mixing (genericity loss)
        let resid_tol = (10.0 * tol).max(1e-12);
        let mut covectors: Vec<Vec<f64>> = Vec::with_capacity(dim);
        for v in &vectors {
            let mut cov = Vec::with_capacity(r);
            for a in &cartan.a_frame.vectors {
                let bv = alg.bracket(a, v);
                let lam = gdot(&bv, v);
                let mut diff = bv.clone();
                vaxpy(&mut diff, -lam, v);
                if gnorm(&diff) > resid_tol {
                    continue 'attempt;
                }
                cov.push(lam);
            }
            covectors.push(cov);
        }

        // group eigenvectors whose covectors agree in every coordinate
        let max_abs = covectors
            .iter()
            .flatten()
            .fold(0.0f64, |m, x| m.max(x.abs()));
        let grp_tol = 10.0 * tol * (1.0 + max_abs);
        let mut uf = UnionFind::new(dim);
        for i in 0..dim {
            for j in i + 1..dim {
                let close = covectors[i]
                    .iter()
                    .zip(&covectors[j])
                    .all(|(a, b)| (a - b).abs() <= grp_tol);
                if close {
                    uf.union(i, j);
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut group_of = vec![usize::MAX; dim];
        for i in 0..dim {
            let root = uf.find(i);
            if group_of[root] == usize::MAX {
                group_of[root] = groups.len();
                groups.push(Vec::new());
            }
            groups[group_of[root]].push(i);
        }

        // covector per group = mean over members; a large spread means the
        // threshold chained across genuinely different roots
        let mut group_covs: Vec<Vec<f64>> = Vec::with_capacity(groups.len());
        for members in &groups {
            let mut mean = vec![0.0; r];
            for &m in members {
                vaxpy(&mut mean, 1.0, &covectors[m]);
            }
            let mean = vscale(&mean, 1.0 / members.len() as f64);
            let spread = members
                .iter()
                .flat_map(|&m| {
                    covectors[m]
                        .iter()
                        .zip(&mean)
                        .map(|(a, b)| (a - b).abs())
                        .collect::<Vec<_>>()
                })
                .fold(0.0f64, f64::max);
            if spread > 5.0 * grp_tol {
                // intrinsic to the covector values, so no redraw can help
                return Err(RootError::ClusterAmbiguity(spread));
            }
            group_covs.push(mean);
        }

        // genericity also demands distinct groups stay separated on H*:
        // two different covectors colliding on H* would have been caught by
        // the residual check above when their eigenvectors mixed, but a
        // clean accidental degeneracy can still slip through if spaces
        // happen to align; verify the H*-eigenvalue separation directly.
        let spectral = te.values.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if spectral == 0.0 {
            return Err(RootError::Inconsistent("ad(H*) vanished entirely".into()));
        }
        for gi in 0..groups.len() {
            for gj in gi + 1..groups.len() {
                let ei: f64 = vdot(&group_covs[gi], &coeffs);
                let ej: f64 = vdot(&group_covs[gj], &coeffs);
                if (ei - ej).abs() / spectral <= CLUSTER_GAP {
                    continue 'attempt;
                }
            }
        }

        return assemble(
            alg, cartan, tol, grp_tol, groups, group_covs, vectors,
        );
    }
    Err(RootError::GenericityFailure(MAX_REDRAWS))
}

fn assemble(
    alg: &LieAlgebra,
    cartan: &CartanData,
    tol: f64,
    grp_tol: f64,
    groups: Vec<Vec<usize>>,
    group_covs: Vec<Vec<f64>>,
    vectors: Vec<Vec<f64>>,
) -> Result<RootDatum, RootError> {
    let r = cartan.a_frame.len();
    let gram = &cartan.gram;
    let bs = |x: &[f64], y: &[f64]| vdot(x, &gram.mul_vec(y));

    // (v) split off the zero group = g_0
    let zero_idx = group_covs
        .iter()
        .position(|cov| cov.iter().all(|x| x.abs() <= grp_tol))
        .ok_or_else(|| RootError::Inconsistent("no zero eigenvalue group; a should centralize itself".into()))?;

    // m as kernel-in-k: centralizer vectors projected onto k
    let centralizer = alg.centralizer_of_a(cartan)?;
    let projected: Vec<Vec<f64>> = centralizer
        .iter()
        .map(|v| project(v, &cartan.k_frame, bs))
        .collect();
    let m_frame = orthonormalize(&projected, bs, 1e-10)?;

    // cross-check: m must also be the beta_sigma-complement of a inside g_0
    let g0_members = &groups[zero_idx];
    let alt: Vec<Vec<f64>> = g0_members
        .iter()
        .map(|&i| reject(&vectors[i], &cartan.a_frame, bs))
        .collect();
    let m_alt = orthonormalize(&alt, bs, 1e-10)?;
    if m_alt.len() != m_frame.len() {
        return Err(RootError::Inconsistent(format!(
            "centralizer-in-k gives dim m = {}, complement of a in g_0 gives {}",
            m_frame.len(),
            m_alt.len()
        )));
    }
    for v in &m_frame.vectors {
        let resid = bs(&reject(v, &m_alt, bs), &reject(v, &m_alt, bs)).max(0.0).sqrt();
        if resid > 1e-8 {
            return Err(RootError::Inconsistent(format!(
                "the two characterizations of m disagree (residual {:.3e})",
                resid
            )));
        }
    }

    // (vi) g_0 = a + m
    if g0_members.len() != r + m_frame.len() {
        return Err(RootError::Inconsistent(format!(
            "dim g_0 = {} but dim a + dim m = {}",
            g0_members.len(),
            r + m_frame.len()
        )));
    }

    // root spaces, sorted lexicographically on the covector
    let mut order: Vec<usize> = (0..groups.len()).filter(|&g| g != zero_idx).collect();
    order.sort_by(|&a, &b| lex_cmp(&group_covs[a], &group_covs[b]));

    let mut roots = Vec::with_capacity(order.len());
    let mut spaces = Vec::with_capacity(order.len());
    let mut multiplicities = Vec::with_capacity(order.len());
    for &g in &order {
        let members: Vec<Vec<f64>> = groups[g].iter().map(|&i| vectors[i].clone()).collect();
        let frame = orthonormalize(&members, bs, 1e-10)?;
        if frame.len() != members.len() {
            return Err(RootError::Inconsistent(
                "eigenvectors of one root space were not independent".into(),
            ));
        }
        multiplicities.push(frame.len());
        spaces.push(frame);
        roots.push(group_covs[g].clone());
    }

    let mut datum = RootDatum {
        a_dim: r,
        roots,
        spaces,
        m_frame,
        coroots: Vec::new(),
        multiplicities,
        match_tol: grp_tol.max(1e-9),
    };

    // coroots, plus the structural sanity checks on them
    for idx in 0..datum.roots.len() {
        let h = coroot(alg, cartan, &datum, idx, tol)?;
        datum.coroots.push(h);
    }
    for idx in 0..datum.roots.len() {
        if datum.lambda_of_coroot(alg, idx) <= 0.0 {
            return Err(RootError::Inconsistent(
                "lambda(H_lambda) must be positive".into(),
            ));
        }
        if datum.negative_of(idx).is_none() {
            return Err(RootError::Inconsistent(
                "roots must come in +/- pairs".into(),
            ));
        }
        // 3*lambda is never a root
        let triple: Vec<f64> = datum.roots[idx].iter().map(|x| 3.0 * x).collect();
        if datum.find_root(&triple).is_some() {
            return Err(RootError::Inconsistent("3*lambda appears in the root set".into()));
        }
    }
    if datum.total_dim() != alg.dim {
        return Err(RootError::Inconsistent(format!(
            "decomposition dims sum to {} but dim g = {}",
            datum.total_dim(),
            alg.dim
        )));
    }
    Ok(datum)
}

/// Solves for the coroot `H_lambda` in the `a`-frame from the Killing
/// Gram system, and verifies the defining property.
pub fn coroot(
    alg: &LieAlgebra,
    cartan: &CartanData,
    datum: &RootDatum,
    idx: usize,
    tol: f64,
) -> Result<Vec<f64>, RootError> {
    let r = cartan.a_frame.len();
    assert!(idx < datum.roots.len(), "root index out of range");
    let mut gram_a = Mat::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            gram_a.set(
                i,
                j,
                alg.killing_form(&cartan.a_frame.vectors[i], &cartan.a_frame.vectors[j]),
            );
        }
    }
    let coeffs = solve_spd(&gram_a, &datum.roots[idx]).map_err(|_| RootError::GramSingular)?;
    let mut h = vec![0.0; alg.dim];
    for (c, a) in coeffs.iter().zip(&cartan.a_frame.vectors) {
        vaxpy(&mut h, *c, a);
    }
    // beta(H_lambda, A_i) = lambda(A_i)
    for (i, a) in cartan.a_frame.vectors.iter().enumerate() {
        let got = alg.killing_form(&h, a);
        if (got - datum.roots[idx][i]).abs() > tol * (1.0 + datum.roots[idx][i].abs()) {
            return Err(RootError::Inconsistent(format!(
                "coroot fails its defining property (got {:.3e}, want {:.3e})",
                got, datum.roots[idx][i]
            )));
        }
    }
    Ok(h)
}

/// Verifies the grading `[g_lambda, g_mu] subset g_{lambda+mu}`, the
/// symmetry `sigma(g_lambda) = g_{-lambda}`, and the absence of tripled
/// roots. Failures land in the report, not in errors.
pub fn grading_check(
    alg: &LieAlgebra,
    cartan: &CartanData,
    datum: &RootDatum,
    tol: f64,
    ctx: &CheckCtx,
) -> VerificationReport {
    let gram = &cartan.gram;
    let bs = |x: &[f64], y: &[f64]| vdot(x, &gram.mul_vec(y));
    let gnorm = |x: &[f64]| bs(x, x).max(0.0).sqrt();

    // bracket grading over all root pairs and frame pairs
    let mut bracket_resid = 0.0f64;
    let mut pairs = 0usize;
    for li in 0..datum.roots.len() {
        for mi in 0..datum.roots.len() {
            let target: Vec<f64> = datum.roots[li]
                .iter()
                .zip(&datum.roots[mi])
                .map(|(a, b)| a + b)
                .collect();
            let target_zero = target.iter().all(|x| x.abs() <= datum.match_tol);
            let target_root = datum.find_root(&target);
            for x in &datum.spaces[li].vectors {
                for y in &datum.spaces[mi].vectors {
                    pairs += 1;
                    let b = alg.bracket(x, y);
                    let resid = if target_zero {
                        // lands in g_0 = a + m
                        let mut rem = reject(&b, &cartan.a_frame, bs);
                        rem = reject(&rem, &datum.m_frame, bs);
                        gnorm(&rem)
                    } else if let Some(ti) = target_root {
                        gnorm(&reject(&b, &datum.spaces[ti], bs))
                    } else {
                        gnorm(&b)
                    };
                    bracket_resid = bracket_resid.max(resid / (1.0 + gnorm(&b)));
                }
            }
        }
    }

    // sigma maps g_lambda onto g_{-lambda}
    let mut sigma_resid = 0.0f64;
    let mut sigma_vectors = 0usize;
    for li in 0..datum.roots.len() {
        // +/- pairing was established during assembly
        let ni = datum.negative_of(li).expect("roots come in +/- pairs");
        for x in &datum.spaces[li].vectors {
            sigma_vectors += 1;
            let sx = cartan.apply_sigma(x);
            sigma_resid = sigma_resid.max(gnorm(&reject(&sx, &datum.spaces[ni], bs)));
        }
    }

    // 3 lambda never a root: integer-exact on covector lookup
    let tripled = datum
        .roots
        .iter()
        .filter(|cov| {
            let t: Vec<f64> = cov.iter().map(|x| 3.0 * x).collect();
            datum.find_root(&t).is_some()
        })
        .count();

    VerificationReport {
        entries: vec![
            CheckEntry::residual(ctx, "grading_bracket", None, pairs, bracket_resid, tol),
            CheckEntry::residual(ctx, "sigma_symmetry", None, sigma_vectors, sigma_resid, tol),
            CheckEntry::counted(ctx, "triple_root_absence", datum.roots.len(), tripled == 0),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, AlgebraSpec};

    fn datum_for(spec: &AlgebraSpec) -> (crate::liealg::LieAlgebra, CartanData, RootDatum) {
        let (alg, cartan) = build(spec).unwrap();
        let datum = decompose(&alg, &cartan, 1e-9, 42).unwrap();
        (alg, cartan, datum)
    }

    #[test]
    fn sl2_roots_and_coroot() {
        let (alg, _, datum) = datum_for(&AlgebraSpec::sl(2));
        assert_eq!(datum.roots.len(), 2);
        assert_eq!(datum.multiplicities, vec![1, 1]);
        assert_eq!(datum.m_frame.len(), 0);
        // covectors +/- 2/sqrt(8) on the normalized a-frame
        let want = 2.0 / 8.0f64.sqrt();
        assert!((datum.roots[0][0] + want).abs() < 1e-10);
        assert!((datum.roots[1][0] - want).abs() < 1e-10);
        // coroot of the positive root is H/4 and lambda(H_lambda) = 1/2
        let pos = 1;
        assert!((datum.coroots[pos][0] - 0.25).abs() < 1e-10);
        assert!(datum.coroots[pos][1].abs() < 1e-12);
        assert!(datum.coroots[pos][2].abs() < 1e-12);
        assert!((datum.lambda_of_coroot(&alg, pos) - 0.5).abs() < 1e-10);
    }

    #[test]
    fn coroot_of_negative_root_is_negated() {
        let (alg, _, datum) = datum_for(&AlgebraSpec::sl(3));
        for idx in 0..datum.roots.len() {
            let ni = datum.negative_of(idx).unwrap();
            for (a, b) in datum.coroots[idx].iter().zip(&datum.coroots[ni]) {
                assert!((a + b).abs() < 1e-10);
            }
            // beta(H_lambda, H_lambda) = lambda(H_lambda) by definition
            let beta_hh = alg.killing_form(&datum.coroots[idx], &datum.coroots[idx]);
            assert!((beta_hh - datum.lambda_of_coroot(&alg, idx)).abs() < 1e-12);
        }
    }

    #[test]
    fn su21_has_doubled_root_pattern() {
        let (_, _, datum) = datum_for(&AlgebraSpec::su(2, 1));
        assert_eq!(datum.multiplicities, vec![1, 2, 2, 1]);
        assert_eq!(datum.m_frame.len(), 1);
        // outer covectors are exactly twice the inner ones
        assert!((datum.roots[0][0] - 2.0 * datum.roots[1][0]).abs() < 1e-9);
        assert!((datum.roots[3][0] - 2.0 * datum.roots[2][0]).abs() < 1e-9);
        assert_eq!(datum.total_dim(), 8);
    }

    #[test]
    fn so14_is_rank_one_multiplicity_three() {
        let (_, _, datum) = datum_for(&AlgebraSpec::so(1, 4));
        assert_eq!(datum.multiplicities, vec![3, 3]);
        assert_eq!(datum.m_frame.len(), 3);
        assert_eq!(datum.total_dim(), 10);
    }

    #[test]
    fn so23_and_sp4_have_eight_single_roots() {
        for spec in [AlgebraSpec::so(2, 3), AlgebraSpec::sp(4)] {
            let (_, _, datum) = datum_for(&spec);
            assert_eq!(datum.roots.len(), 8, "{}", spec);
            assert!(datum.multiplicities.iter().all(|&m| m == 1));
            assert_eq!(datum.m_frame.len(), 0);
            assert_eq!(datum.total_dim(), 10);
        }
    }

    #[test]
    fn eigen_residuals_hold_on_every_space() {
        let (alg, cartan, datum) = datum_for(&AlgebraSpec::su(2, 1));
        let gram = &cartan.gram;
        let bs = |x: &[f64], y: &[f64]| vdot(x, &gram.mul_vec(y));
        for (idx, frame) in datum.spaces.iter().enumerate() {
            for x in &frame.vectors {
                for (i, a) in cartan.a_frame.vectors.iter().enumerate() {
                    let mut diff = alg.bracket(a, x);
                    vaxpy(&mut diff, -datum.roots[idx][i], x);
                    assert!(bs(&diff, &diff).sqrt() < 1e-8);
                }
            }
        }
    }

    #[test]
    fn decomposition_is_deterministic_per_seed() {
        let (alg, cartan) = build(&AlgebraSpec::so(2, 3)).unwrap();
        let d1 = decompose(&alg, &cartan, 1e-9, 42).unwrap();
        let d2 = decompose(&alg, &cartan, 1e-9, 42).unwrap();
        assert_eq!(d1.roots.len(), d2.roots.len());
        for (a, b) in d1.roots.iter().zip(&d2.roots) {
            for (x, y) in a.iter().zip(b) {
                assert_eq!(x.to_bits(), y.to_bits());
            }
        }
        // a different seed still finds the same multiplicity table
        let d3 = decompose(&alg, &cartan, 1e-9, 7).unwrap();
        assert_eq!(d1.multiplicities, d3.multiplicities);
    }

    #[test]
    fn grading_check_passes_on_catalog_samples() {
        for spec in [AlgebraSpec::sl(2), AlgebraSpec::su(2, 1), AlgebraSpec::sp(4)] {
            let (alg, cartan, datum) = datum_for(&spec);
            let ctx = CheckCtx {
                algebra: spec.to_string(),
                seed: 42,
                trials: 1,
            };
            let report = grading_check(&alg, &cartan, &datum, 1e-9, &ctx);
            for e in &report.entries {
                assert!(e.pass, "{}: {} residual {:.3e}", spec, e.check, e.max_residual);
                assert!(e.max_residual < 1e-9);
            }
        }
    }

    #[test]
    fn trivial_abelian_subspace_is_rejected() {
        use crate::liealg::LieAlgebra;
        use crate::numkit::Mat;
        // compact so(3) with the identity involution has p = 0, so no a exists
        let basis = vec![
            Mat::new(3, 3, vec![0.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0, 1.0, 0.0]).unwrap(),
            Mat::new(3, 3, vec![0.0, 0.0, 1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0]).unwrap(),
            Mat::new(3, 3, vec![0.0, -1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]).unwrap(),
        ];
        let alg = LieAlgebra::from_basis(&basis).unwrap();
        let cartan = alg.cartan_split(Mat::identity(3)).unwrap();
        assert!(matches!(
            decompose(&alg, &cartan, 1e-9, 42),
            Err(RootError::EmptyA)
        ));
    }
}
