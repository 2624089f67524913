//! Verification of the orthogonal structure of a root space.
//!
//! For a nonzero `X` in a restricted root space `g_lambda`, the central
//! facts checked here are:
//!
//! * the square relation `[X, sigma X] = beta(X, sigma X) H_lambda`
//!   (`verify_relation1`), and its polarized form: for `X, Y` in
//!   `g_lambda`, `W = [X, sigma Y] - beta(X, sigma Y) H_lambda` lies in
//!   the centralizer `m` (`m_component`);
//! * the decomposition `g_lambda = R X (+) [m, X]`, orthogonal for
//!   `beta_sigma` (`verify_theorem1`);
//! * the constructive inverse (`reconstruct`): given any `Xprime`
//!   orthogonal to `X` inside `g_lambda`, an explicit `M` in `m` with
//!   `[M, X] = Xprime`, assembled through double brackets with `sigma X`
//!   exactly as in the constructive proof;
//! * the two corollaries: `[m, X] = 0` on multiplicity-one spaces, and
//!   `m = 0` forces all multiplicities to one (`corollary_checks`).

use crate::exec::map_trials;
use crate::liealg::{CartanData, LieAlgebra};
use crate::numkit::{orthonormalize, reject, vaxpy, vscale, Frame};
use crate::report::{CheckCtx, CheckEntry, VerificationReport};
use crate::rootspace::RootDatum;
use crate::sample::{derive_rng, random_unit_in_frame};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TheoremError {
    #[error("vector is not in the root space (projection residual {0:.3e})")]
    NotInRootSpace(f64),
    #[error("vector fails membership in m (residual {0:.3e})")]
    MembershipFailure(f64),
    #[error("zero vector where a nonzero one is required")]
    ZeroVector,
    #[error("given vectors are not beta_sigma-orthogonal (inner product {0:.3e})")]
    NotPerp(f64),
    #[error("structural identity failed: {0}")]
    IdentityFailure(String),
}

/// Witness of one reconstruction: all intermediate vectors of the
/// constructive proof plus its named residuals.
pub struct ReconstructionWitness {
    pub lambda: Vec<f64>,
    pub x: Vec<f64>,
    pub xprime: Vec<f64>,
    pub xpp: Vec<f64>,
    pub z: Vec<f64>,
    pub m: Vec<f64>,
    pub residuals: BTreeMap<String, f64>,
}

fn check_in_space(
    cartan: &CartanData,
    datum: &RootDatum,
    idx: usize,
    x: &[f64],
    tol: f64,
) -> Result<(), TheoremError> {
    let bs = |a: &[f64], b: &[f64]| cartan.dot(a, b);
    let resid = cartan.norm(&reject(x, &datum.spaces[idx], bs));
    if resid > tol * (1.0 + cartan.norm(x)) {
        return Err(TheoremError::NotInRootSpace(resid));
    }
    Ok(())
}

/// Residual of the square relation
/// `[X, sigma X] = beta(X, sigma X) H_lambda`, normalized by
/// `1 + |X|^2` so that passing is scale-invariant.
pub fn verify_relation1(
    alg: &LieAlgebra,
    cartan: &CartanData,
    datum: &RootDatum,
    idx: usize,
    x: &[f64],
    tol: f64,
) -> Result<f64, TheoremError> {
    check_in_space(cartan, datum, idx, x, tol)?;
    let sx = cartan.apply_sigma(x);
    let beta_xsx = alg.killing_form(x, &sx);
    let mut lhs = alg.bracket(x, &sx);
    vaxpy(&mut lhs, -beta_xsx, &datum.coroots[idx]);
    let nx = cartan.norm(x);
    Ok(cartan.norm(&lhs) / (1.0 + nx * nx))
}

/// The centralizer component of a pair:
/// `W = [X, sigma Y] - beta(X, sigma Y) H_lambda`, verified to lie in `m`
/// and to be Killing-orthogonal to the abelian subspace.
pub fn m_component(
    alg: &LieAlgebra,
    cartan: &CartanData,
    datum: &RootDatum,
    idx: usize,
    x: &[f64],
    y: &[f64],
    tol: f64,
) -> Result<Vec<f64>, TheoremError> {
    check_in_space(cartan, datum, idx, x, tol)?;
    check_in_space(cartan, datum, idx, y, tol)?;
    let sy = cartan.apply_sigma(y);
    let beta_xsy = alg.killing_form(x, &sy);
    let mut w = alg.bracket(x, &sy);
    vaxpy(&mut w, -beta_xsy, &datum.coroots[idx]);

    let bs = |a: &[f64], b: &[f64]| cartan.dot(a, b);
    let mem = cartan.norm(&reject(&w, &datum.m_frame, bs));
    if mem > tol * (1.0 + cartan.norm(&w)) {
        return Err(TheoremError::MembershipFailure(mem));
    }
    for a in &cartan.a_frame.vectors {
        let b = alg.killing_form(&w, a).abs();
        if b > tol * (1.0 + cartan.norm(&w)) {
            return Err(TheoremError::MembershipFailure(b));
        }
    }
    Ok(w)
}

/// Orthonormal frame of `{[M, X] : M in m}`, a subspace of `g_lambda`.
pub fn bracket_m_space(
    alg: &LieAlgebra,
    cartan: &CartanData,
    datum: &RootDatum,
    idx: usize,
    x: &[f64],
) -> Result<Frame, TheoremError> {
    if cartan.norm(x) <= 1e-12 {
        return Err(TheoremError::ZeroVector);
    }
    let bs = |a: &[f64], b: &[f64]| cartan.dot(a, b);
    let mut images = Vec::with_capacity(datum.m_frame.len());
    for m in &datum.m_frame.vectors {
        let b = alg.bracket(m, x);
        // the image must stay inside the root space; anything else is an
        // engine bug, not a verification failure
        let out = cartan.norm(&reject(&b, &datum.spaces[idx], bs));
        if out > 1e-8 * (1.0 + cartan.norm(&b)) {
            return Err(TheoremError::IdentityFailure(format!(
                "[m, X] left the root space (residual {:.3e})",
                out
            )));
        }
        images.push(b);
    }
    orthonormalize(&images, bs, 1e-10)
        .map_err(|e| TheoremError::IdentityFailure(format!("orthonormalization failed: {}", e)))
}

/// Orthonormal frame of the `beta_sigma`-orthogonal complement of `X`
/// inside its root space; its dimension is `mult(lambda) - 1`.
pub fn perp_space(
    cartan: &CartanData,
    datum: &RootDatum,
    idx: usize,
    x: &[f64],
) -> Result<Frame, TheoremError> {
    let nx = cartan.norm(x);
    if nx <= 1e-12 {
        return Err(TheoremError::ZeroVector);
    }
    let bs = |a: &[f64], b: &[f64]| cartan.dot(a, b);
    let xhat = Frame {
        vectors: vec![vscale(x, 1.0 / nx)],
        kept: vec![0],
    };
    let rejected: Vec<Vec<f64>> = datum.spaces[idx]
        .vectors
        .iter()
        .map(|v| reject(v, &xhat, bs))
        .collect();
    let frame = orthonormalize(&rejected, bs, 1e-10)
        .map_err(|e| TheoremError::IdentityFailure(format!("orthonormalization failed: {}", e)))?;
    if frame.len() != datum.multiplicities[idx] - 1 {
        return Err(TheoremError::IdentityFailure(format!(
            "complement of X in the root space has dim {}, expected mult - 1 = {}",
            frame.len(),
            datum.multiplicities[idx] - 1
        )));
    }
    Ok(frame)
}

/// Randomized verification of the decomposition
/// `g_lambda = R X (+) [m, X]` on one root space: dimension count,
/// double containment between `[m, X]` and the orthogonal complement of
/// `X`, and a span reconstruction.
pub fn verify_theorem1(
    alg: &LieAlgebra,
    cartan: &CartanData,
    datum: &RootDatum,
    idx: usize,
    trials: usize,
    tol: f64,
    seed: u64,
    ctx: &CheckCtx,
) -> VerificationReport {
    let bs = |a: &[f64], b: &[f64]| cartan.dot(a, b);
    let mult = datum.multiplicities[idx];
    let per_trial = map_trials(trials, |t| {
        let mut rng = derive_rng(seed, "theorem1", idx, t);
        let x = random_unit_in_frame(&mut rng, &datum.spaces[idx]);
        let bm = match bracket_m_space(alg, cartan, datum, idx, &x) {
            Ok(f) => f,
            Err(_) => return (false, f64::MAX),
        };
        let perp = match perp_space(cartan, datum, idx, &x) {
            Ok(f) => f,
            Err(_) => return (false, f64::MAX),
        };
        let dims_ok = bm.len() == mult - 1;
        // double containment: [m,X] inside X-perp and X-perp inside [m,X]
        let mut resid = 0.0f64;
        for v in &bm.vectors {
            resid = resid.max(cartan.norm(&reject(v, &perp, bs)));
        }
        for v in &perp.vectors {
            resid = resid.max(cartan.norm(&reject(v, &bm, bs)));
        }
        // R X + [m, X] spans the whole root space: adding the original
        // frame vectors to {X/|X|} u [m,X] must not increase the rank
        let mut span = vec![vscale(&x, 1.0 / cartan.norm(&x))];
        span.extend(bm.vectors.iter().cloned());
        span.extend(datum.spaces[idx].vectors.iter().cloned());
        let full = match orthonormalize(&span, bs, 1e-8) {
            Ok(f) => f,
            Err(_) => return (false, f64::MAX),
        };
        (dims_ok && full.len() == mult, resid)
    });
    let all_dims = per_trial.iter().all(|(ok, _)| *ok);
    let max_resid = per_trial.iter().fold(0.0f64, |m, (_, r)| m.max(*r));
    let root = Some(datum.roots[idx].as_slice());
    VerificationReport {
        entries: vec![
            CheckEntry::counted(ctx, "theorem1_dimension", trials, all_dims)
                .with_root(datum.roots[idx].as_slice()),
            CheckEntry::residual(ctx, "theorem1_containment", root, trials, max_resid, tol),
        ],
    }
}

/// Replays the constructive proof: from `X` and a prescribed orthogonal
/// component `Xprime`, produces `M` in `m` with `[M, X] = Xprime` via
///
/// ```text
/// Xpp = [[X, Xprime], sigma X]
/// Z   = Xpp / (3 lambda(H_lambda) beta(X, sigma X)) + Xprime
/// W   = [sigma X, Z],      M = -W / (lambda(H_lambda) beta(X, sigma X))
/// ```
///
/// recording the residuals of the two bracket identities the construction
/// rests on, the membership of `W` in `m`, and the round trip.
pub fn reconstruct(
    alg: &LieAlgebra,
    cartan: &CartanData,
    datum: &RootDatum,
    idx: usize,
    x: &[f64],
    xprime: &[f64],
    tol: f64,
) -> Result<ReconstructionWitness, TheoremError> {
    let nx = cartan.norm(x);
    if nx <= 1e-12 {
        return Err(TheoremError::ZeroVector);
    }
    check_in_space(cartan, datum, idx, x, tol)?;
    check_in_space(cartan, datum, idx, xprime, tol)?;
    let nxp = cartan.norm(xprime);
    let ortho = cartan.dot(x, xprime);
    if ortho.abs() > tol.max(1e-12) * (1.0 + nx * nxp) {
        return Err(TheoremError::NotPerp(ortho));
    }

    let sx = cartan.apply_sigma(x);
    let beta_xsx = alg.killing_form(x, &sx); // = -|X|^2 under beta_sigma
    let lam_h = datum.lambda_of_coroot(alg, idx);
    let d = lam_h * beta_xsx;
    if d.abs() <= 1e-12 * nx * nx {
        return Err(TheoremError::IdentityFailure(
            "division guard: lambda(H_lambda) beta(X, sigma X) vanished".into(),
        ));
    }

    let mut residuals = BTreeMap::new();
    let xpp = alg.bracket(&alg.bracket(x, xprime), &sx);

    // [X, Xpp] = -2 lambda(H_lambda) beta(X, sigma X) [X, Xprime]
    let x_xpp = alg.bracket(x, &xpp);
    let mut diff = x_xpp.clone();
    vaxpy(&mut diff, 2.0 * d, &alg.bracket(x, xprime));
    residuals.insert(
        "double_bracket_identity".to_string(),
        cartan.norm(&diff) / (1.0 + cartan.norm(&x_xpp)),
    );

    // [X, [sigma X, Xpp]] = 3 lambda(H_lambda) beta(X, sigma X) Xpp
    let iter = alg.bracket(x, &alg.bracket(&sx, &xpp));
    let mut diff = iter.clone();
    vaxpy(&mut diff, -3.0 * d, &xpp);
    residuals.insert(
        "iterated_bracket_identity".to_string(),
        cartan.norm(&diff) / (1.0 + cartan.norm(&iter)),
    );

    let mut z = vscale(&xpp, 1.0 / (3.0 * d));
    vaxpy(&mut z, 1.0, xprime);
    let w = alg.bracket(&sx, &z);

    // W must land in m, orthogonal to a
    let bs = |a: &[f64], b: &[f64]| cartan.dot(a, b);
    let mem = cartan.norm(&reject(&w, &datum.m_frame, bs));
    residuals.insert(
        "witness_membership".to_string(),
        mem / (1.0 + cartan.norm(&w)),
    );
    if mem > tol.max(1e-9) * (1.0 + cartan.norm(&w)) {
        return Err(TheoremError::IdentityFailure(format!(
            "witness left the centralizer (residual {:.3e})",
            mem
        )));
    }
    let a_orth = cartan
        .a_frame
        .vectors
        .iter()
        .map(|a| alg.killing_form(&w, a).abs())
        .fold(0.0f64, f64::max);
    residuals.insert("abelian_orthogonality".to_string(), a_orth);

    let m = vscale(&w, -1.0 / d);
    let mut round = alg.bracket(&m, x);
    vaxpy(&mut round, -1.0, xprime);
    let denom = if nxp > 0.0 { nxp } else { 1.0 };
    residuals.insert("round_trip".to_string(), cartan.norm(&round) / denom);

    Ok(ReconstructionWitness {
        lambda: datum.roots[idx].clone(),
        x: x.to_vec(),
        xprime: xprime.to_vec(),
        xpp,
        z,
        m,
        residuals,
    })
}

/// Both corollaries at once: on every multiplicity-one root space,
/// `[m, X] = 0` for random `X`; and if `m = 0`, every multiplicity is 1.
pub fn corollary_checks(
    alg: &LieAlgebra,
    cartan: &CartanData,
    datum: &RootDatum,
    trials: usize,
    tol: f64,
    seed: u64,
    ctx: &CheckCtx,
) -> VerificationReport {
    // (a): on mult-1 spaces the bracket image vanishes identically
    let mut max_image = 0.0f64;
    let mut image_trials = 0usize;
    let mut all_empty = true;
    for idx in 0..datum.roots.len() {
        if datum.multiplicities[idx] != 1 {
            continue;
        }
        let per_trial = map_trials(trials, |t| {
            let mut rng = derive_rng(seed, "corollary_a", idx, t);
            let x = random_unit_in_frame(&mut rng, &datum.spaces[idx]);
            let mut worst = 0.0f64;
            let mut empty = true;
            for m in &datum.m_frame.vectors {
                worst = worst.max(cartan.norm(&alg.bracket(m, &x)));
            }
            if let Ok(f) = bracket_m_space(alg, cartan, datum, idx, &x) {
                empty = f.is_empty();
            }
            (worst, empty)
        });
        image_trials += trials;
        for (worst, empty) in per_trial {
            max_image = max_image.max(worst);
            all_empty &= empty;
        }
    }
    let corollary_a = CheckEntry {
        pass: max_image < tol && all_empty,
        ..CheckEntry::residual(ctx, "corollary_a", None, image_trials, max_image, tol)
    };

    // (b): trivial centralizer forces one-dimensional root spaces
    let vacuous = !datum.m_frame.is_empty();
    let ok_b = vacuous || datum.multiplicities.iter().all(|&m| m == 1);
    let corollary_b = CheckEntry::counted(ctx, "corollary_b", datum.roots.len(), ok_b);

    VerificationReport {
        entries: vec![corollary_a, corollary_b],
    }
}

/// Report driver: square-relation residuals over seeded trials on every
/// root space.
pub fn relation1_report(
    alg: &LieAlgebra,
    cartan: &CartanData,
    datum: &RootDatum,
    trials: usize,
    tol: f64,
    seed: u64,
    ctx: &CheckCtx,
) -> VerificationReport {
    let mut report = VerificationReport::default();
    for idx in 0..datum.roots.len() {
        let residuals = map_trials(trials, |t| {
            let mut rng = derive_rng(seed, "relation1", idx, t);
            let x = random_unit_in_frame(&mut rng, &datum.spaces[idx]);
            verify_relation1(alg, cartan, datum, idx, &x, tol).unwrap_or(f64::MAX)
        });
        let max = residuals.into_iter().fold(0.0f64, f64::max);
        report.entries.push(CheckEntry::residual(
            ctx,
            "relation1",
            Some(datum.roots[idx].as_slice()),
            trials,
            max,
            tol,
        ));
    }
    report
}

/// Report driver: polarized-relation residuals (membership of `W` in `m`
/// and Killing-orthogonality to `a`) over seeded pairs.
pub fn relation1b_report(
    alg: &LieAlgebra,
    cartan: &CartanData,
    datum: &RootDatum,
    trials: usize,
    tol: f64,
    seed: u64,
    ctx: &CheckCtx,
) -> VerificationReport {
    let bs = |a: &[f64], b: &[f64]| cartan.dot(a, b);
    let mut report = VerificationReport::default();
    for idx in 0..datum.roots.len() {
        let residuals = map_trials(trials, |t| {
            let mut rng = derive_rng(seed, "relation1b", idx, t);
            let x = random_unit_in_frame(&mut rng, &datum.spaces[idx]);
            let y = random_unit_in_frame(&mut rng, &datum.spaces[idx]);
            // measure the residuals directly rather than erroring out
            let sy = cartan.apply_sigma(&y);
            let beta_xsy = alg.killing_form(&x, &sy);
            let mut w = alg.bracket(&x, &sy);
            vaxpy(&mut w, -beta_xsy, &datum.coroots[idx]);
            let mem = cartan.norm(&reject(&w, &datum.m_frame, bs));
            let orth = cartan
                .a_frame
                .vectors
                .iter()
                .map(|a| alg.killing_form(&w, a).abs())
                .fold(0.0f64, f64::max);
            mem.max(orth) / (1.0 + cartan.norm(&w))
        });
        let max = residuals.into_iter().fold(0.0f64, f64::max);
        report.entries.push(CheckEntry::residual(
            ctx,
            "relation1b",
            Some(datum.roots[idx].as_slice()),
            trials,
            max,
            tol,
        ));
    }
    report
}

/// Report driver: full reconstruction round trips on every root space of
/// multiplicity at least two.
pub fn reconstruction_report(
    alg: &LieAlgebra,
    cartan: &CartanData,
    datum: &RootDatum,
    trials: usize,
    tol: f64,
    seed: u64,
    ctx: &CheckCtx,
) -> VerificationReport {
    let mut report = VerificationReport::default();
    for idx in 0..datum.roots.len() {
        if datum.multiplicities[idx] < 2 {
            continue;
        }
        let per_trial = map_trials(trials, |t| {
            let mut rng = derive_rng(seed, "reconstruct", idx, t);
            let x = random_unit_in_frame(&mut rng, &datum.spaces[idx]);
            let perp = match perp_space(cartan, datum, idx, &x) {
                Ok(f) => f,
                Err(_) => return (f64::MAX, f64::MAX),
            };
            let xprime = random_unit_in_frame(&mut rng, &perp);
            match reconstruct(alg, cartan, datum, idx, &x, &xprime, tol) {
                Ok(w) => (
                    w.residuals["round_trip"],
                    w.residuals["double_bracket_identity"],
                ),
                Err(_) => (f64::MAX, f64::MAX),
            }
        });
        let round = per_trial.iter().fold(0.0f64, |m, (r, _)| m.max(*r));
        let ident = per_trial.iter().fold(0.0f64, |m, (_, i)| m.max(*i));
        let root = Some(datum.roots[idx].as_slice());
        report.entries.push(CheckEntry::residual(
            ctx,
            "reconstruction_round_trip",
            root,
            trials,
            round,
            tol,
        ));
        report.entries.push(CheckEntry::residual(
            ctx,
            "double_bracket_identity",
            root,
            trials,
            ident,
            tol,
        ));
    }
    report
}
