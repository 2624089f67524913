//! Catalog of classical real forms with their standard Cartan involution
//! and standard maximal abelian subspace.
//!
//! Every family is realized with real matrices chosen so that the
//! involution is literally `X -> -X^T` (complex entries are realified via
//! `a + ib -> [[a, -b], [b, a]]` blocks for `su(p,q)`). That buys a single
//! group-level involution `g -> (g^T)^{-1}` for all families.

use crate::liealg::{CartanData, LieAlgebra, LieError};
use crate::numkit::{det, inverse, orthonormalize, project, vdot, Mat, NumError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("invalid algebra parameters: {0}")]
    InvalidParams(String),
    #[error("claimed maximal abelian subspace is not maximal")]
    MaximalityFailure,
    #[error("matrix is not in the group (residual {0:.3e})")]
    NotInGroup(f64),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Num(#[from] NumError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    SlReal,
    SuPq,
    SoPq,
    SpReal,
}

/// A point in the catalog: a family plus its integer parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl AlgebraSpec {
    pub fn sl(n: usize) -> AlgebraSpec {
        AlgebraSpec {
            family: Family::SlReal,
            params: vec![n],
        }
    }

    pub fn su(p: usize, q: usize) -> AlgebraSpec {
        AlgebraSpec {
            family: Family::SuPq,
            params: vec![p, q],
        }
    }

    pub fn so(p: usize, q: usize) -> AlgebraSpec {
        AlgebraSpec {
            family: Family::SoPq,
            params: vec![p, q],
        }
    }

    /// `two_n` is the matrix size, so `sp(4)` means 4x4 matrices.
    pub fn sp(two_n: usize) -> AlgebraSpec {
        AlgebraSpec {
            family: Family::SpReal,
            params: vec![two_n],
        }
    }

    pub fn validate(&self) -> Result<(), CatalogError> {
        let bad = |msg: String| Err(CatalogError::InvalidParams(msg));
        match (self.family, self.params.as_slice()) {
            (Family::SlReal, &[n]) => {
                if n < 2 {
                    return bad(format!("sl requires n >= 2, got {}", n));
                }
            }
            (Family::SuPq, &[p, q]) => {
                if p < 1 || q < 1 {
                    return bad(format!("su requires p, q >= 1, got ({}, {})", p, q));
                }
            }
            (Family::SoPq, &[p, q]) => {
                if p < 1 || q < 1 {
                    return bad(format!("so requires p, q >= 1, got ({}, {})", p, q));
                }
                if p + q < 3 {
                    return bad("so(1,1) is abelian, not semisimple".into());
                }
            }
            (Family::SpReal, &[two_n]) => {
                if two_n < 2 || two_n % 2 != 0 {
                    return bad(format!("sp requires an even size >= 2, got {}", two_n));
                }
            }
            _ => return bad("wrong number of parameters".into()),
        }
        Ok(())
    }

    /// The size of the real matrices realizing the algebra.
    pub fn matrix_size(&self) -> usize {
        match (self.family, self.params.as_slice()) {
            (Family::SlReal, &[n]) => n,
            (Family::SuPq, &[p, q]) => 2 * (p + q),
            (Family::SoPq, &[p, q]) => p + q,
            (Family::SpReal, &[two_n]) => two_n,
            _ => unreachable!("validated spec"),
        }
    }
}

impl std::fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.family, self.params.as_slice()) {
            (Family::SlReal, &[n]) => write!(f, "sl({},R)", n),
            (Family::SuPq, &[p, q]) => write!(f, "su({},{})", p, q),
            (Family::SoPq, &[p, q]) => write!(f, "so({},{})", p, q),
            (Family::SpReal, &[two_n]) => write!(f, "sp({},R)", two_n),
            _ => write!(f, "invalid"),
        }
    }
}

impl std::str::FromStr for AlgebraSpec {
    type Err = CatalogError;

    /// Grammar: `sl n`, `su p q`, `so p q`, `sp 2n`.
    fn from_str(s: &str) -> Result<AlgebraSpec, CatalogError> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        parse_tokens(&toks)
    }
}

pub fn parse_tokens(toks: &[&str]) -> Result<AlgebraSpec, CatalogError> {
    let bad = |msg: String| CatalogError::InvalidParams(msg);
    if toks.is_empty() {
        return Err(bad("empty algebra spec".into()));
    }
    let nums: Result<Vec<usize>, _> = toks[1..].iter().map(|t| t.parse::<usize>()).collect();
    let nums = nums.map_err(|_| bad(format!("non-integer parameter in {:?}", toks)))?;
    let family = match toks[0] {
        "sl" => Family::SlReal,
        "su" => Family::SuPq,
        "so" => Family::SoPq,
        "sp" => Family::SpReal,
        other => return Err(bad(format!("unknown family '{}'", other))),
    };
    let spec = AlgebraSpec {
        family,
        params: nums,
    };
    spec.validate()?;
    Ok(spec)
}

/// The instances exercised by the test suite: together they cover trivial
/// and nontrivial centralizers, multiplicities 1 through 3, a doubled
/// root, and ranks 1 through 3.
pub fn list_catalog() -> Vec<AlgebraSpec> {
    vec![
        AlgebraSpec::sl(2),
        AlgebraSpec::sl(3),
        AlgebraSpec::sl(4),
        AlgebraSpec::su(2, 1),
        AlgebraSpec::so(1, 4),
        AlgebraSpec::so(2, 3),
        AlgebraSpec::sp(4),
    ]
}

fn unit_mat(n: usize, i: usize, j: usize) -> Mat {
    let mut m = Mat::zeros(n, n);
    m.set(i, j, 1.0);
    m
}

/// Complex matrix as a (real, imaginary) pair, realified on demand.
struct CMat {
    re: Mat,
    im: Mat,
}

impl CMat {
    fn zero(n: usize) -> CMat {
        CMat {
            re: Mat::zeros(n, n),
            im: Mat::zeros(n, n),
        }
    }

    /// `a + ib -> [[a, -b], [b, a]]`.
    fn realify(&self) -> Mat {
        let n = self.re.rows();
        let mut out = Mat::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.re.at(i, j));
                out.set(n + i, n + j, self.re.at(i, j));
                out.set(i, n + j, -self.im.at(i, j));
                out.set(n + i, j, self.im.at(i, j));
            }
        }
        out
    }
}

/// Matrix basis plus the indices of the designated abelian generators.
struct Realization {
    basis: Vec<Mat>,
    a_indices: Vec<usize>,
}

fn realize(spec: &AlgebraSpec) -> Realization {
    match (spec.family, spec.params.as_slice()) {
        (Family::SlReal, &[n]) => realize_sl(n),
        (Family::SuPq, &[p, q]) => realize_su(p, q),
        (Family::SoPq, &[p, q]) => realize_so(p, q),
        (Family::SpReal, &[two_n]) => realize_sp(two_n / 2),
        _ => unreachable!("validated spec"),
    }
}

fn realize_sl(n: usize) -> Realization {
    let mut basis = Vec::new();
    let mut a_indices = Vec::new();
    // traceless diagonal: E_kk - E_{k+1,k+1}; these span the standard a
    for k in 0..n - 1 {
        a_indices.push(basis.len());
        basis.push(unit_mat(n, k, k).sub(&unit_mat(n, k + 1, k + 1)));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(unit_mat(n, i, j));
            }
        }
    }
    Realization { basis, a_indices }
}

fn realize_so(p: usize, q: usize) -> Realization {
    let n = p + q;
    let mut basis = Vec::new();
    let mut a_indices = Vec::new();
    let anti = |i: usize, j: usize| unit_mat(n, i, j).sub(&unit_mat(n, j, i));
    let sym = |i: usize, j: usize| unit_mat(n, i, j).add(&unit_mat(n, j, i));
    // k = so(p) + so(q): antisymmetric blocks
    for i in 0..p {
        for j in i + 1..p {
            basis.push(anti(i, j));
        }
    }
    for i in 0..q {
        for j in i + 1..q {
            basis.push(anti(p + i, p + j));
        }
    }
    // p: symmetric off-block; the diagonal pairs S_ii span the standard a
    for i in 0..p {
        for j in 0..q {
            if i == j {
                a_indices.push(basis.len());
            }
            basis.push(sym(i, p + j));
        }
    }
    Realization { basis, a_indices }
}

fn realize_sp(n: usize) -> Realization {
    let m = 2 * n;
    let mut basis = Vec::new();
    let mut a_indices = Vec::new();
    // block form [[A, B], [C, -A^T]] with B, C symmetric
    for i in 0..n {
        for j in 0..n {
            if i == j {
                a_indices.push(basis.len());
            }
            basis.push(unit_mat(m, i, j).sub(&unit_mat(m, n + j, n + i)));
        }
    }
    for i in 0..n {
        for j in i..n {
            basis.push(unit_mat(m, i, n + j).add(&unit_mat(m, j, n + i)));
        }
    }
    for i in 0..n {
        for j in i..n {
            basis.push(unit_mat(m, n + i, j).add(&unit_mat(m, n + j, i)));
        }
    }
    Realization { basis, a_indices }
}

fn realize_su(p: usize, q: usize) -> Realization {
    let n = p + q;
    let mut cbasis: Vec<CMat> = Vec::new();
    let mut a_indices = Vec::new();

    // traceless imaginary diagonal
    for k in 0..n - 1 {
        let mut c = CMat::zero(n);
        c.im.set(k, k, 1.0);
        c.im.set(k + 1, k + 1, -1.0);
        cbasis.push(c);
    }
    // anti-Hermitian off-diagonal inside the p and q blocks
    let mut block_pairs = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            block_pairs.push((i, j));
        }
    }
    for i in 0..q {
        for j in i + 1..q {
            block_pairs.push((p + i, p + j));
        }
    }
    for (i, j) in block_pairs {
        let mut c = CMat::zero(n);
        c.re.set(i, j, 1.0);
        c.re.set(j, i, -1.0);
        cbasis.push(c);
        let mut c = CMat::zero(n);
        c.im.set(i, j, 1.0);
        c.im.set(j, i, 1.0);
        cbasis.push(c);
    }
    // off-block: Hermitian pairs E_jk + E_kj and i(E_jk - E_kj)
    for i in 0..p {
        for j in 0..q {
            if i == j {
                a_indices.push(cbasis.len());
            }
            let mut c = CMat::zero(n);
            c.re.set(i, p + j, 1.0);
            c.re.set(p + j, i, 1.0);
            cbasis.push(c);
            let mut c = CMat::zero(n);
            c.im.set(i, p + j, 1.0);
            c.im.set(p + j, i, -1.0);
            cbasis.push(c);
        }
    }

    Realization {
        basis: cbasis.iter().map(CMat::realify).collect(),
        a_indices,
    }
}

/// Builds the algebra, its Cartan data (involution `-X^T`, frames for
/// `k`, `p`, and the standard maximal abelian subspace), and verifies
/// maximality: the centralizer of the abelian subspace inside `p` must be
/// the subspace itself.
pub fn build(spec: &AlgebraSpec) -> Result<(LieAlgebra, CartanData), CatalogError> {
    spec.validate()?;
    let real = realize(spec);
    let alg = LieAlgebra::from_basis(&real.basis)?;

    // coordinate matrix of sigma(X) = -X^T, column by column
    let mut sigma = Mat::zeros(alg.dim, alg.dim);
    for (j, b) in alg.basis.iter().enumerate() {
        let coords = alg.coords_of(&b.transpose().scale(-1.0))?;
        for (i, &v) in coords.iter().enumerate() {
            sigma.set(i, j, v);
        }
    }

    let cartan = alg.cartan_split(sigma)?;
    let a_candidates: Vec<Vec<f64>> = real
        .a_indices
        .iter()
        .map(|&idx| {
            let mut v = vec![0.0; alg.dim];
            v[idx] = 1.0;
            v
        })
        .collect();
    let cartan = alg.attach_maximal_abelian(cartan, &a_candidates)?;

    // maximality: centralizer of a, projected to p, adds nothing to a
    let centralizer = alg.centralizer_of_a(&cartan)?;
    let bs = |x: &[f64], y: &[f64]| vdot(x, &cartan.gram.mul_vec(y));
    let mut probe: Vec<Vec<f64>> = cartan.a_frame.vectors.clone();
    for v in &centralizer {
        probe.push(project(v, &cartan.p_frame, bs));
    }
    let grown = orthonormalize(&probe, bs, 1e-8)?;
    if grown.len() != cartan.a_frame.len() {
        return Err(CatalogError::MaximalityFailure);
    }

    Ok((alg, cartan))
}

/// The global involution `g -> (g^T)^{-1}`, checked against the group
/// membership constraints of the family first.
pub fn group_involution(spec: &AlgebraSpec, g: &Mat) -> Result<Mat, CatalogError> {
    let resid = membership_residual(spec, g);
    if !(resid <= 1e-6 * (1.0 + g.norm_fro())) {
        return Err(CatalogError::NotInGroup(resid));
    }
    Ok(inverse(&g.transpose()).map_err(|_| CatalogError::NotInGroup(f64::INFINITY))?)
}

/// How far `g` is from satisfying the defining equations of the group.
fn membership_residual(spec: &AlgebraSpec, g: &Mat) -> f64 {
    let n = spec.matrix_size();
    if g.rows() != n || g.cols() != n {
        return f64::INFINITY;
    }
    match (spec.family, spec.params.as_slice()) {
        (Family::SlReal, _) => (det(g) - 1.0).abs(),
        (Family::SoPq, &[p, q]) => {
            let mut form = Mat::zeros(n, n);
            for i in 0..p {
                form.set(i, i, 1.0);
            }
            for i in 0..q {
                form.set(p + i, p + i, -1.0);
            }
            let resid = g.transpose().matmul(&form).matmul(g).sub(&form).max_abs();
            resid.max((det(g) - 1.0).abs())
        }
        (Family::SpReal, &[two_n]) => {
            let half = two_n / 2;
            let mut j = Mat::zeros(n, n);
            for i in 0..half {
                j.set(i, half + i, 1.0);
                j.set(half + i, i, -1.0);
            }
            g.transpose().matmul(&j).matmul(g).sub(&j).max_abs()
        }
        (Family::SuPq, &[p, q]) => {
            let half = p + q;
            // complex linearity: commute with the realified multiplication by i
            let mut jc = Mat::zeros(n, n);
            for i in 0..half {
                jc.set(i, half + i, -1.0);
                jc.set(half + i, i, 1.0);
            }
            let lin = g.matmul(&jc).sub(&jc.matmul(g)).max_abs();
            // preservation of the realified Hermitian form diag(I_p, -I_q)
            let mut form = Mat::zeros(n, n);
            for i in 0..half {
                let s = if i < p { 1.0 } else { -1.0 };
                form.set(i, i, s);
                form.set(half + i, half + i, s);
            }
            let herm = g.transpose().matmul(&form).matmul(g).sub(&form).max_abs();
            lin.max(herm).max((det(g) - 1.0).abs())
        }
        _ => f64::INFINITY,
    }
}

/// True when `g` is fixed by the global involution, i.e. lies in the
/// maximal compact subgroup.
pub fn k_membership(spec: &AlgebraSpec, g: &Mat) -> bool {
    match group_involution(spec, g) {
        Ok(theta_g) => theta_g.sub(g).max_abs() <= 1e-9 * (1.0 + g.norm_fro()),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkit::expm;

    #[test]
    fn dims_and_rank_match_hand_counts() {
        let cases = [
            (AlgebraSpec::sl(2), 3, 1),
            (AlgebraSpec::sl(3), 8, 2),
            (AlgebraSpec::su(2, 1), 8, 1),
            (AlgebraSpec::so(1, 4), 10, 1),
            (AlgebraSpec::so(2, 3), 10, 2),
            (AlgebraSpec::sp(4), 10, 2),
        ];
        for (spec, dim, a_dim) in cases {
            let (alg, cartan) = build(&spec).unwrap();
            assert_eq!(alg.dim, dim, "{}", spec);
            assert_eq!(cartan.a_frame.len(), a_dim, "{}", spec);
        }
    }

    #[test]
    fn realification_dimension_count() {
        // dim_R su(p,q) = (p+q)^2 - 1
        for (p, q) in [(1, 1), (2, 1), (2, 2)] {
            let (alg, _) = build(&AlgebraSpec::su(p, q)).unwrap();
            assert_eq!(alg.dim, (p + q) * (p + q) - 1);
        }
    }

    #[test]
    fn centralizer_oracle_counts() {
        // dim of the full centralizer of a equals a_dim + expected dim m
        for (spec, m_dim) in [
            (AlgebraSpec::sl(2), 0),
            (AlgebraSpec::su(2, 1), 1),
            (AlgebraSpec::so(1, 4), 3),
        ] {
            let (alg, cartan) = build(&spec).unwrap();
            let z = alg.centralizer_of_a(&cartan).unwrap();
            assert_eq!(z.len(), cartan.a_frame.len() + m_dim, "{}", spec);
        }
    }

    #[test]
    fn invalid_params_are_rejected() {
        assert!(matches!(
            build(&AlgebraSpec::sl(1)),
            Err(CatalogError::InvalidParams(_))
        ));
        assert!(matches!(
            build(&AlgebraSpec::so(1, 1)),
            Err(CatalogError::InvalidParams(_))
        ));
        assert!(matches!(
            build(&AlgebraSpec::sp(3)),
            Err(CatalogError::InvalidParams(_))
        ));
        assert!(matches!(
            build(&AlgebraSpec::su(0, 1)),
            Err(CatalogError::InvalidParams(_))
        ));
    }

    #[test]
    fn parse_grammar() {
        assert_eq!("sl 3".parse::<AlgebraSpec>().unwrap(), AlgebraSpec::sl(3));
        assert_eq!(
            "su 2 1".parse::<AlgebraSpec>().unwrap(),
            AlgebraSpec::su(2, 1)
        );
        assert_eq!(
            "so 1 4".parse::<AlgebraSpec>().unwrap(),
            AlgebraSpec::so(1, 4)
        );
        assert_eq!("sp 4".parse::<AlgebraSpec>().unwrap(), AlgebraSpec::sp(4));
        assert!("xx 2".parse::<AlgebraSpec>().is_err());
        assert!("sl two".parse::<AlgebraSpec>().is_err());
        assert!("sl 2 3".parse::<AlgebraSpec>().is_err());
    }

    #[test]
    fn catalog_is_complete_enough() {
        let cat = list_catalog();
        assert!(cat.len() >= 7);
        assert!(cat.contains(&AlgebraSpec::sl(2)));
        assert!(cat.contains(&AlgebraSpec::su(2, 1)));
        for spec in &cat {
            build(spec).unwrap_or_else(|e| panic!("{} failed to build: {}", spec, e));
        }
    }

    #[test]
    fn involution_fixes_identity_and_orthogonal() {
        let spec = AlgebraSpec::sl(3);
        let id = Mat::identity(3);
        assert!(group_involution(&spec, &id).unwrap().sub(&id).max_abs() < 1e-12);
        // a rotation lies in SO(3) < SL(3,R) and is fixed by the involution
        let (alg, cartan) = build(&spec).unwrap();
        let k = &cartan.k_frame.vectors[0];
        let rot = expm(&alg.to_matrix(k)).unwrap();
        let theta = group_involution(&spec, &rot).unwrap();
        assert!(theta.sub(&rot).max_abs() < 1e-10);
        assert!(k_membership(&spec, &rot));
    }

    #[test]
    fn involution_matches_exp_of_involuted_generator() {
        let spec = AlgebraSpec::sl(3);
        let x = Mat::new(
            3,
            3,
            vec![0.3, 0.8, -0.2, 0.1, -0.5, 0.4, 0.7, 0.0, 0.2],
        )
        .unwrap();
        let g = expm(&x).unwrap();
        let lhs = group_involution(&spec, &g).unwrap();
        let rhs = expm(&x.transpose().scale(-1.0)).unwrap();
        assert!(lhs.sub(&rhs).max_abs() < 1e-9);
    }

    #[test]
    fn non_members_are_rejected() {
        let spec = AlgebraSpec::sl(2);
        let g = Mat::identity(2).scale(2.0); // det 4
        assert!(matches!(
            group_involution(&spec, &g),
            Err(CatalogError::NotInGroup(_))
        ));
    }

    #[test]
    fn exp_of_abelian_direction_is_not_in_k() {
        let (alg, cartan) = build(&AlgebraSpec::sl(2)).unwrap();
        let a = &cartan.a_frame.vectors[0];
        let g = expm(&alg.to_matrix(a)).unwrap();
        assert!(!k_membership(&AlgebraSpec::sl(2), &g));
    }
}
