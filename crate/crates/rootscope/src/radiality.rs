//! Radiality of invariant functions on the symmetric space.
//!
//! The quotient `G/K` is modeled through the point map `p = g * gT`
//! (`Theta(g) = (gT)^-1` for every catalog realization, so `p` is exactly
//! `g * Theta(g)^-1` and depends only on the coset `gK`). A smooth
//! `phi(p)` built from conjugation invariants — here traces of powers of
//! `p` — is invariant under `g -> k g` for `k` in `K`, hence in particular
//! annihilated by the fundamental vector fields of `m`.
//!
//! For such a function `F` and a restricted root space `g_lambda`, the
//! pullback `f_lambda(X) = F(exp(M_X))` is *radial*: it depends only on
//! `beta_sigma(X, X)`. That is what `radiality_check` certifies by
//! sampling equal-norm pairs, together with the differential form of the
//! argument: the gradient of `f_lambda` vanishes along the tangent
//! directions `[m, X]` of the sphere.

use crate::liealg::{CartanData, LieAlgebra};
use crate::exec::map_trials;
use crate::numkit::{expm, inverse, reject, vadd, vscale, Mat, NumError};
use crate::report::{CheckCtx, CheckEntry, VerificationReport};
use crate::rootspace::RootDatum;
use crate::sample::{derive_rng, random_unit_in_frame};
use rand::Rng;
use thiserror::Error;

/// Finite-difference step for all first-derivative probes.
pub const FD_STEP: f64 = 1e-5;

#[derive(Debug, Error)]
pub enum RadialityError {
    #[error("vector is not in the root space (projection residual {0:.3e})")]
    NotInRootSpace(f64),
    #[error("root space has multiplicity {0}; the sphere argument needs at least 2")]
    MultiplicityTooSmall(usize),
    #[error(transparent)]
    Num(#[from] NumError),
}

/// The invariant function shipped with the verifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionKind {
    /// `trace(p)`
    TraceP,
    /// `trace(p^2)`
    TraceP2,
    /// `trace(p^-1)`
    TracePInv,
}

/// A function on the group that only sees the coset `gK`, evaluated
/// through the point model `p = g * gT`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvariantFunction {
    pub kind: FunctionKind,
}

impl InvariantFunction {
    pub fn new(kind: FunctionKind) -> Self {
        InvariantFunction { kind }
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            FunctionKind::TraceP => "trace_p",
            FunctionKind::TraceP2 => "trace_p2",
            FunctionKind::TracePInv => "trace_p_inv",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "trace_p" => Some(Self::new(FunctionKind::TraceP)),
            "trace_p2" => Some(Self::new(FunctionKind::TraceP2)),
            "trace_p_inv" => Some(Self::new(FunctionKind::TracePInv)),
            _ => None,
        }
    }

    pub fn all() -> [InvariantFunction; 3] {
        [
            Self::new(FunctionKind::TraceP),
            Self::new(FunctionKind::TraceP2),
            Self::new(FunctionKind::TracePInv),
        ]
    }

    /// Evaluates the function at a group element.
    ///
    /// `trace(p) = tr(g gT)`, `trace(p^2) = tr((g gT)^2)`, and
    /// `trace(p^-1) = tr(g^-1 g^-T)`, the last avoiding an explicit
    /// inversion of `p` itself.
    pub fn eval(&self, g: &Mat) -> Result<f64, RadialityError> {
        Ok(match self.kind {
            FunctionKind::TraceP => g.matmul(&g.transpose()).trace(),
            FunctionKind::TraceP2 => {
                let p = g.matmul(&g.transpose());
                p.matmul(&p).trace()
            }
            FunctionKind::TracePInv => {
                let gi = inverse(g)?;
                gi.matmul(&gi.transpose()).trace()
            }
        })
    }
}

/// A deliberately *non*-invariant probe: one fixed off-diagonal entry of
/// the point-model matrix. The rotations generated by `m` move this
/// entry (a diagonal entry would not do: on realified complex algebras
/// those rotations act by diagonal phases, which fix every diagonal
/// entry), so equal-norm sampling must detect it — this is the negative
/// control proving the radiality test has power.
pub fn probe_off_diagonal(g: &Mat) -> f64 {
    let p = g.matmul(&g.transpose());
    p.at(1, 2)
}

fn membership(
    cartan: &CartanData,
    datum: &RootDatum,
    idx: usize,
    x: &[f64],
) -> Result<(), RadialityError> {
    let bs = |a: &[f64], b: &[f64]| cartan.dot(a, b);
    let resid = cartan.norm(&reject(x, &datum.spaces[idx], bs));
    if resid > 1e-9 * (1.0 + cartan.norm(x)) {
        return Err(RadialityError::NotInRootSpace(resid));
    }
    Ok(())
}

/// The pullback of `F` to a root space: `X -> F(exp(M_X))`, where `M_X`
/// is the matrix realization of the coordinate vector `X`.
pub fn f_lambda(
    alg: &LieAlgebra,
    cartan: &CartanData,
    datum: &RootDatum,
    idx: usize,
    f: &InvariantFunction,
    x: &[f64],
) -> Result<f64, RadialityError> {
    membership(cartan, datum, idx, x)?;
    let g = expm(&alg.to_matrix(x))?;
    f.eval(&g)
}

/// Central finite difference of `t -> F(exp(-t M_Xm) g)` at `t = 0`.
///
/// This is the action of the fundamental vector field of `Xm` on `F` at
/// the coset of `g`; for the shipped invariant functions and `Xm` in `k`
/// (in particular in `m`) it must vanish up to the stencil error.
pub fn fundamental_derivative(
    alg: &LieAlgebra,
    f: &InvariantFunction,
    xm: &[f64],
    g: &Mat,
    h: f64,
) -> Result<f64, RadialityError> {
    let m = alg.to_matrix(xm);
    let plus = f.eval(&expm(&m.scale(-h))?.matmul(g))?;
    let minus = f.eval(&expm(&m.scale(h))?.matmul(g))?;
    Ok((plus - minus) / (2.0 * h))
}

/// One equal-norm comparison drawn by `radiality_check`.
pub struct RadialitySample {
    pub lambda: Vec<f64>,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub norm: f64,
    pub f_x: f64,
    pub f_y: f64,
    pub delta: f64,
}

fn draw_pair(
    cartan: &CartanData,
    datum: &RootDatum,
    idx: usize,
    seed: u64,
    label: &str,
    trial: usize,
) -> (Vec<f64>, Vec<f64>, f64) {
    let mut rng = derive_rng(seed, label, idx, trial);
    let radius: f64 = rng.random_range(0.1..=2.0);
    let x = vscale(&random_unit_in_frame(&mut rng, &datum.spaces[idx]), radius);
    let y = vscale(&random_unit_in_frame(&mut rng, &datum.spaces[idx]), radius);
    let norm = cartan.dot(&x, &x);
    (x, y, norm)
}

/// Draws `samples` equal-norm pairs in the root space and evaluates `F`
/// on both; radial means every delta vanishes.
pub fn radiality_samples(
    alg: &LieAlgebra,
    cartan: &CartanData,
    datum: &RootDatum,
    idx: usize,
    f: &InvariantFunction,
    samples: usize,
    seed: u64,
) -> Result<Vec<RadialitySample>, RadialityError> {
    let mult = datum.multiplicities[idx];
    if mult < 2 {
        return Err(RadialityError::MultiplicityTooSmall(mult));
    }
    Ok(map_trials(samples, |t| {
        let (x, y, norm) = draw_pair(cartan, datum, idx, seed, "radiality", t);
        let f_x = f_lambda(alg, cartan, datum, idx, f, &x).unwrap_or(f64::MAX);
        let f_y = f_lambda(alg, cartan, datum, idx, f, &y).unwrap_or(f64::MAX);
        RadialitySample {
            lambda: datum.roots[idx].clone(),
            x,
            y,
            norm,
            f_x,
            f_y,
            delta: (f_x - f_y).abs(),
        }
    }))
}

/// Randomized radiality verification on one root space of multiplicity
/// at least two.
///
/// Two families of evidence: equal-norm pairs must evaluate equally
/// (`radiality_equal_norm`, thresholded by `tol`), and the directional
/// derivative of `f_lambda` along every tangent direction `[M, Y]`,
/// `M` from the `m`-frame, must vanish (`radiality_tangential_gradient`,
/// thresholded by `1e-6 * (1 + |F|)` per sample).
pub fn radiality_check(
    alg: &LieAlgebra,
    cartan: &CartanData,
    datum: &RootDatum,
    idx: usize,
    f: &InvariantFunction,
    samples: usize,
    tol: f64,
    seed: u64,
    ctx: &CheckCtx,
) -> Result<VerificationReport, RadialityError> {
    let drawn = radiality_samples(alg, cartan, datum, idx, f, samples, seed)?;
    let max_delta = drawn.iter().fold(0.0f64, |m, s| m.max(s.delta));

    let grads = map_trials(samples, |t| {
        let (_, y, _) = draw_pair(cartan, datum, idx, seed, "radiality", t);
        let base = match f_lambda(alg, cartan, datum, idx, f, &y) {
            Ok(v) => v,
            Err(_) => return f64::MAX,
        };
        let mut worst = 0.0f64;
        for m in &datum.m_frame.vectors {
            let d = alg.bracket(m, &y);
            let dn = cartan.norm(&d);
            if dn <= 1e-12 {
                continue;
            }
            let d = vscale(&d, 1.0 / dn);
            let at = |s: f64| {
                f_lambda(alg, cartan, datum, idx, f, &vadd(&y, &vscale(&d, s)))
                    .unwrap_or(f64::MAX)
            };
            let fd = (at(FD_STEP) - at(-FD_STEP)) / (2.0 * FD_STEP);
            worst = worst.max(fd.abs() / (1.0 + base.abs()));
        }
        worst
    });
    let max_grad = grads.into_iter().fold(0.0f64, f64::max);

    let root = datum.roots[idx].as_slice();
    Ok(VerificationReport {
        entries: vec![
            CheckEntry::residual(ctx, "radiality_equal_norm", Some(root), samples, max_delta, tol)
                .with_function(f.name(), max_delta),
            CheckEntry::residual(
                ctx,
                "radiality_tangential_gradient",
                Some(root),
                samples,
                max_grad,
                1e-6,
            )
            .with_function(f.name(), max_grad),
        ],
    })
}

/// Maximum equal-norm delta of the non-invariant probe on one root
/// space, under exactly the sampling of `radiality_check`. A healthy
/// test setup yields a decisively nonzero value.
pub fn negative_control_delta(
    alg: &LieAlgebra,
    cartan: &CartanData,
    datum: &RootDatum,
    idx: usize,
    samples: usize,
    seed: u64,
) -> Result<f64, RadialityError> {
    let mult = datum.multiplicities[idx];
    if mult < 2 {
        return Err(RadialityError::MultiplicityTooSmall(mult));
    }
    let deltas = map_trials(samples, |t| {
        let (x, y, _) = draw_pair(cartan, datum, idx, seed, "radiality", t);
        let gx = match expm(&alg.to_matrix(&x)) {
            Ok(g) => g,
            Err(_) => return f64::MAX,
        };
        let gy = match expm(&alg.to_matrix(&y)) {
            Ok(g) => g,
            Err(_) => return f64::MAX,
        };
        (probe_off_diagonal(&gx) - probe_off_diagonal(&gy)).abs()
    });
    Ok(deltas.into_iter().fold(0.0f64, f64::max))
}

/// Certifies the hypothesis of the radiality statement: the shipped
/// functions are unchanged by `g -> k g` (invariance) and by `g -> g k`
/// (well-definedness on the quotient), for `k = exp` of `k`-elements.
pub fn k_invariance_report(
    alg: &LieAlgebra,
    cartan: &CartanData,
    f: &InvariantFunction,
    trials: usize,
    seed: u64,
    ctx: &CheckCtx,
) -> VerificationReport {
    let deltas = map_trials(trials, |t| {
        let mut rng = derive_rng(seed, "k-invariance", 0, t);
        let rk: f64 = rng.random_range(0.0..=1.0);
        let rp: f64 = rng.random_range(0.0..=1.0);
        let u = vscale(&random_unit_in_frame(&mut rng, &cartan.k_frame), rk);
        let v = vscale(&random_unit_in_frame(&mut rng, &cartan.p_frame), rp);
        let (k, g) = match (expm(&alg.to_matrix(&u)), expm(&alg.to_matrix(&v))) {
            (Ok(k), Ok(g)) => (k, g),
            _ => return (f64::MAX, f64::MAX),
        };
        let base = f.eval(&g).unwrap_or(f64::MAX);
        let left = f.eval(&k.matmul(&g)).unwrap_or(f64::MAX);
        let right = f.eval(&g.matmul(&k)).unwrap_or(f64::MAX);
        ((left - base).abs(), (right - base).abs())
    });
    let max_left = deltas.iter().fold(0.0f64, |m, (l, _)| m.max(*l));
    let max_right = deltas.iter().fold(0.0f64, |m, (_, r)| m.max(*r));
    VerificationReport {
        entries: vec![
            CheckEntry::residual(ctx, "k_invariance_left", None, trials, max_left, 1e-10)
                .with_function(f.name(), max_left),
            CheckEntry::residual(ctx, "k_invariance_right", None, trials, max_right, 1e-10)
                .with_function(f.name(), max_right),
        ],
    }
}

/// Certifies the fundamental vector fields of `m` annihilate `F`:
/// random `Xm` in `m`, random root-space point `g = exp(M_X)`, and the
/// central difference of `t -> F(exp(-t M_Xm) g)` at `0` stays below
/// `1e-6 * (1 + |F(g)|)`. Algebras with `m = 0` pass vacuously.
pub fn fundamental_derivative_report(
    alg: &LieAlgebra,
    datum: &RootDatum,
    f: &InvariantFunction,
    trials: usize,
    seed: u64,
    ctx: &CheckCtx,
) -> VerificationReport {
    if datum.m_frame.is_empty() {
        return VerificationReport {
            entries: vec![
                CheckEntry::counted(ctx, "fundamental_derivative", 0, true)
                    .with_function(f.name(), 0.0),
            ],
        };
    }
    let residuals = map_trials(trials, |t| {
        let mut rng = derive_rng(seed, "fundamental-derivative", 0, t);
        let xm = random_unit_in_frame(&mut rng, &datum.m_frame);
        let idx = t % datum.roots.len();
        let radius: f64 = rng.random_range(0.1..=2.0);
        let x = vscale(&random_unit_in_frame(&mut rng, &datum.spaces[idx]), radius);
        let g = match expm(&alg.to_matrix(&x)) {
            Ok(g) => g,
            Err(_) => return f64::MAX,
        };
        let base = f.eval(&g).unwrap_or(f64::MAX);
        match fundamental_derivative(alg, f, &xm, &g, FD_STEP) {
            Ok(d) => d.abs() / (1.0 + base.abs()),
            Err(_) => f64::MAX,
        }
    });
    let max = residuals.into_iter().fold(0.0f64, f64::max);
    VerificationReport {
        entries: vec![
            CheckEntry::residual(ctx, "fundamental_derivative", None, trials, max, 1e-6)
                .with_function(f.name(), max),
        ],
    }
}

/// Richardson-style stencil diagnostic: for a smooth `f`, central
/// differences at steps `h`, `h/2`, `h/4` satisfy
/// `(D_h - D_{h/2}) / (D_{h/2} - D_{h/4}) ~ 4`, confirming the O(h^2)
/// truncation order of the stencil.
pub fn stencil_ratio(f: impl Fn(f64) -> f64, h: f64) -> f64 {
    let d = |step: f64| (f(step) - f(-step)) / (2.0 * step);
    let dh = d(h);
    let dh2 = d(h / 2.0);
    let dh4 = d(h / 4.0);
    (dh - dh2) / (dh2 - dh4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, AlgebraSpec};
    use crate::rootspace::decompose;

    fn setup(spec: &AlgebraSpec) -> (LieAlgebra, CartanData, RootDatum) {
        let (alg, cartan) = build(spec).unwrap();
        let datum = decompose(&alg, &cartan, 1e-9, 42).unwrap();
        (alg, cartan, datum)
    }

    fn ctx_for(spec: &AlgebraSpec) -> CheckCtx {
        CheckCtx {
            algebra: spec.to_string(),
            seed: 42,
            trials: 50,
        }
    }

    #[test]
    fn f_lambda_at_zero_is_matrix_dimension() {
        let (alg, cartan, datum) = setup(&AlgebraSpec::so(1, 4));
        let f = InvariantFunction::new(FunctionKind::TraceP);
        let v = f_lambda(&alg, &cartan, &datum, 0, &f, &vec![0.0; alg.dim]).unwrap();
        assert_eq!(v, 5.0);
        let f2 = InvariantFunction::new(FunctionKind::TraceP2);
        assert_eq!(f_lambda(&alg, &cartan, &datum, 0, &f2, &vec![0.0; alg.dim]).unwrap(), 5.0);
        let fi = InvariantFunction::new(FunctionKind::TracePInv);
        let v = f_lambda(&alg, &cartan, &datum, 0, &fi, &vec![0.0; alg.dim]).unwrap();
        assert!((v - 5.0).abs() < 1e-14);
    }

    #[test]
    fn f_lambda_rejects_outside_vectors() {
        let (alg, cartan, datum) = setup(&AlgebraSpec::so(1, 4));
        let f = InvariantFunction::new(FunctionKind::TraceP);
        let a = cartan.a_frame.vectors[0].clone();
        assert!(matches!(
            f_lambda(&alg, &cartan, &datum, 0, &f, &a),
            Err(RadialityError::NotInRootSpace(_))
        ));
    }

    #[test]
    fn hand_rotated_pair_agrees() {
        let (alg, cartan, datum) = setup(&AlgebraSpec::so(1, 4));
        // two unit vectors of the multiplicity-3 space, rotated by 45
        // degrees in the frame plane: equal norm by construction
        let e1 = datum.spaces[0].vectors[0].clone();
        let e2 = datum.spaces[0].vectors[1].clone();
        let r = 0.5f64.sqrt();
        let y = vadd(&vscale(&e1, r), &vscale(&e2, r));
        for f in InvariantFunction::all() {
            let fx = f_lambda(&alg, &cartan, &datum, 0, &f, &e1).unwrap();
            let fy = f_lambda(&alg, &cartan, &datum, 0, &f, &y).unwrap();
            assert!(
                (fx - fy).abs() < 1e-9,
                "{}: {} vs {}",
                f.name(),
                fx,
                fy
            );
        }
    }

    #[test]
    fn k_invariance_of_all_kinds() {
        for spec in [AlgebraSpec::so(1, 4), AlgebraSpec::su(2, 1), AlgebraSpec::sp(4)] {
            let (alg, cartan, _) = setup(&spec);
            let ctx = ctx_for(&spec);
            for f in InvariantFunction::all() {
                let rep = k_invariance_report(&alg, &cartan, &f, 50, 42, &ctx);
                for e in &rep.entries {
                    assert!(
                        e.pass,
                        "{} {} {}: {:.3e}",
                        spec,
                        f.name(),
                        e.check,
                        e.max_residual
                    );
                }
            }
        }
    }

    #[test]
    fn fundamental_derivative_vanishes_on_m() {
        let (alg, _, datum) = setup(&AlgebraSpec::so(1, 4));
        let f = InvariantFunction::new(FunctionKind::TraceP);
        // Xm = 0 gives exactly zero: both exponentials are the identity
        let g = Mat::identity(5);
        let d = fundamental_derivative(&alg, &f, &vec![0.0; alg.dim], &g, FD_STEP).unwrap();
        assert_eq!(d, 0.0);

        for fk in InvariantFunction::all() {
            let ctx = ctx_for(&AlgebraSpec::so(1, 4));
            let rep = fundamental_derivative_report(&alg, &datum, &fk, 50, 42, &ctx);
            assert!(rep.pass(), "{} failed: {:.3e}", fk.name(), rep.entries[0].max_residual);
        }
    }

    #[test]
    fn fundamental_derivative_vacuous_without_m() {
        let spec = AlgebraSpec::sl(3);
        let (alg, _, datum) = setup(&spec);
        let f = InvariantFunction::new(FunctionKind::TraceP);
        let ctx = ctx_for(&spec);
        let rep = fundamental_derivative_report(&alg, &datum, &f, 50, 42, &ctx);
        assert!(rep.pass());
        assert_eq!(rep.entries[0].trials, 0);
    }

    #[test]
    fn radiality_passes_on_higher_multiplicity_spaces() {
        for spec in [AlgebraSpec::so(1, 4), AlgebraSpec::su(2, 1)] {
            let (alg, cartan, datum) = setup(&spec);
            let ctx = ctx_for(&spec);
            for idx in 0..datum.roots.len() {
                if datum.multiplicities[idx] < 2 {
                    continue;
                }
                for f in InvariantFunction::all() {
                    let rep = radiality_check(
                        &alg, &cartan, &datum, idx, &f, 100, 1e-8, 42, &ctx,
                    )
                    .unwrap();
                    for e in &rep.entries {
                        assert!(
                            e.pass,
                            "{} {} root {} {}: {:.3e}",
                            spec,
                            f.name(),
                            idx,
                            e.check,
                            e.max_residual
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn radiality_rejects_multiplicity_one() {
        let (alg, cartan, datum) = setup(&AlgebraSpec::sl(2));
        let f = InvariantFunction::new(FunctionKind::TraceP);
        let ctx = ctx_for(&AlgebraSpec::sl(2));
        assert!(matches!(
            radiality_check(&alg, &cartan, &datum, 0, &f, 10, 1e-8, 42, &ctx),
            Err(RadialityError::MultiplicityTooSmall(1))
        ));
    }

    #[test]
    fn negative_control_has_power() {
        for spec in [AlgebraSpec::so(1, 4), AlgebraSpec::su(2, 1)] {
            let (alg, cartan, datum) = setup(&spec);
            for idx in 0..datum.roots.len() {
                if datum.multiplicities[idx] < 2 {
                    continue;
                }
                let d = negative_control_delta(&alg, &cartan, &datum, idx, 100, 42).unwrap();
                assert!(d > 1e-3, "{} root {}: probe delta {:.3e}", spec, idx, d);
            }
        }
    }

    #[test]
    fn sample_norms_match_by_construction() {
        let (alg, cartan, datum) = setup(&AlgebraSpec::so(1, 4));
        let f = InvariantFunction::new(FunctionKind::TraceP);
        let samples = radiality_samples(&alg, &cartan, &datum, 0, &f, 50, 42).unwrap();
        assert_eq!(samples.len(), 50);
        for s in &samples {
            let ny = cartan.dot(&s.y, &s.y);
            assert!((s.norm - ny).abs() <= 1e-12 * (1.0 + s.norm));
            assert!(s.norm >= 0.1 * 0.1 - 1e-9 && s.norm <= 4.0 + 1e-9);
        }
    }

    #[test]
    fn stencil_converges_at_second_order() {
        let (alg, cartan, datum) = setup(&AlgebraSpec::so(1, 4));
        let f = InvariantFunction::new(FunctionKind::TraceP);
        // a direction transverse to the level sets: radial motion inside
        // the root space, where the derivative is genuinely nonzero
        let mut rng = derive_rng(7, "stencil", 0, 0);
        let x = random_unit_in_frame(&mut rng, &datum.spaces[0]);
        let g = |s: f64| {
            f_lambda(&alg, &cartan, &datum, 0, &f, &vscale(&x, 1.0 + s)).unwrap()
        };
        let ratio = stencil_ratio(g, 1e-2);
        assert!(
            (3.0..=5.0).contains(&ratio),
            "stencil ratio {} out of range",
            ratio
        );
    }

    #[test]
    fn deterministic_across_runs() {
        let (alg, cartan, datum) = setup(&AlgebraSpec::su(2, 1));
        let f = InvariantFunction::new(FunctionKind::TraceP2);
        let ctx = ctx_for(&AlgebraSpec::su(2, 1));
        let idx = 1;
        let a = radiality_check(&alg, &cartan, &datum, idx, &f, 50, 1e-8, 42, &ctx).unwrap();
        let b = radiality_check(&alg, &cartan, &datum, idx, &f, 50, 1e-8, 42, &ctx).unwrap();
        for (x, y) in a.entries.iter().zip(&b.entries) {
            assert_eq!(x.max_residual.to_bits(), y.max_residual.to_bits());
        }
    }

    #[test]
    fn parse_round_trips() {
        for f in InvariantFunction::all() {
            assert_eq!(InvariantFunction::parse(f.name()), Some(f));
        }
        assert_eq!(InvariantFunction::parse("trace_q"), None);
    }
}
