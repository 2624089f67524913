//! Acceptance gate: one test per shipping criterion, each printing a
//! single PASS line with the measured quantity when it holds (run with
//! `--nocapture` to see them on success).

use rootscope::catalog::{build, AlgebraSpec};
use rootscope::liealg::{CartanData, LieAlgebra};
use rootscope::radiality::{
    fundamental_derivative_report, negative_control_delta, radiality_samples, FunctionKind,
    InvariantFunction,
};
use rootscope::report::CheckCtx;
use rootscope::rootspace::{decompose, grading_check, RootDatum};
use rootscope::sample::{derive_rng, random_unit_in_frame};
use rootscope::theorem::{
    corollary_checks, perp_space, reconstruct, relation1b_report, relation1_report,
    verify_theorem1,
};
use std::process::Command;
use std::time::Instant;

const SEED: u64 = 42;
const TRIALS: usize = 100;

fn setup(spec: &AlgebraSpec) -> (LieAlgebra, CartanData, RootDatum) {
    let (alg, cartan) = build(spec).expect("catalog algebra builds");
    let datum = decompose(&alg, &cartan, 1e-9, SEED).expect("decomposition succeeds");
    (alg, cartan, datum)
}

fn ctx(spec: &AlgebraSpec) -> CheckCtx {
    CheckCtx {
        algebra: spec.to_string(),
        seed: SEED,
        trials: TRIALS,
    }
}

/// The six algebras with frozen expected tables: (spec, sorted
/// multiplicities of the root list, dim m).
fn expected_tables() -> Vec<(AlgebraSpec, Vec<usize>, usize)> {
    vec![
        (AlgebraSpec::sl(2), vec![1, 1], 0),
        (AlgebraSpec::sl(3), vec![1; 6], 0),
        (AlgebraSpec::su(2, 1), vec![1, 1, 2, 2], 1),
        (AlgebraSpec::so(1, 4), vec![3, 3], 0usize + 3),
        (AlgebraSpec::so(2, 3), vec![1; 8], 0),
        (AlgebraSpec::sp(4), vec![1; 8], 0),
    ]
}

fn catalog() -> Vec<AlgebraSpec> {
    rootscope::catalog::list_catalog()
}

#[test]
fn acceptance_1_root_data_matches_oracle() {
    let start = Instant::now();
    for (spec, mut expected_mults, expected_m) in expected_tables() {
        let (_, _, datum) = setup(&spec);
        let mut mults = datum.multiplicities.clone();
        mults.sort_unstable();
        expected_mults.sort_unstable();
        assert_eq!(mults, expected_mults, "{}: multiplicity table", spec);
        assert_eq!(datum.m_frame.len(), expected_m, "{}: dim m", spec);
        // roots come in exact +/- pairs and 2:1 covector ratios are exact
        for i in 0..datum.roots.len() {
            assert!(
                datum.negative_of(i).is_some(),
                "{}: root {} lacks a negative",
                spec,
                i
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {:?}", elapsed);
    println!(
        "ACCEPTANCE 1: PASS — multiplicity tables and dim m integer-exact on 6 algebras in {:?}",
        elapsed
    );
}

#[test]
fn acceptance_2_relation1_residuals() {
    let mut worst = 0.0f64;
    for spec in catalog() {
        let (alg, cartan, datum) = setup(&spec);
        let rep = relation1_report(&alg, &cartan, &datum, TRIALS, 1e-9, SEED, &ctx(&spec));
        for e in &rep.entries {
            assert!(
                e.pass && e.max_residual < 1e-9,
                "{}: relation1 residual {:.3e}",
                spec,
                e.max_residual
            );
            worst = worst.max(e.max_residual);
        }
    }
    println!(
        "ACCEPTANCE 2: PASS — square relation residual < 1e-9 over {} trials per root space (worst {:.3e})",
        TRIALS, worst
    );
}

#[test]
fn acceptance_3_relation1b_residuals() {
    let mut worst = 0.0f64;
    for spec in catalog() {
        let (alg, cartan, datum) = setup(&spec);
        let rep = relation1b_report(&alg, &cartan, &datum, TRIALS, 1e-9, SEED, &ctx(&spec));
        for e in &rep.entries {
            assert!(
                e.pass && e.max_residual < 1e-9,
                "{}: relation1b residual {:.3e}",
                spec,
                e.max_residual
            );
            worst = worst.max(e.max_residual);
        }
    }
    println!(
        "ACCEPTANCE 3: PASS — centralizer membership and abelian orthogonality < 1e-9 (worst {:.3e})",
        worst
    );
}

#[test]
fn acceptance_4_theorem1_dimension_and_containment() {
    let mut worst = 0.0f64;
    for spec in catalog() {
        let (alg, cartan, datum) = setup(&spec);
        let c = ctx(&spec);
        for idx in 0..datum.roots.len() {
            let rep = verify_theorem1(&alg, &cartan, &datum, idx, TRIALS, 1e-9, SEED, &c);
            for e in &rep.entries {
                assert!(
                    e.pass,
                    "{} root {}: {} residual {:.3e}",
                    spec, idx, e.check, e.max_residual
                );
                if e.check == "theorem1_containment" {
                    worst = worst.max(e.max_residual);
                }
            }
            // multiplicity-1 spaces: the bracket image is exactly {0}
            if datum.multiplicities[idx] == 1 {
                let mut rng = derive_rng(SEED, "acceptance4", idx, 0);
                let x = random_unit_in_frame(&mut rng, &datum.spaces[idx]);
                let f = rootscope::theorem::bracket_m_space(&alg, &cartan, &datum, idx, &x)
                    .expect("bracket space computes");
                assert_eq!(f.len(), 0, "{} root {idx}: [m, X] not trivial", spec);
            }
        }
    }
    println!(
        "ACCEPTANCE 4: PASS — dim [m, X] = mult - 1 integer-exact, containments < 1e-9 (worst {:.3e})",
        worst
    );
}

#[test]
fn acceptance_5_reconstruction() {
    let mut worst_rt = 0.0f64;
    let mut worst_id = 0.0f64;
    let mut spaces_covered = 0usize;
    for spec in catalog() {
        let (alg, cartan, datum) = setup(&spec);
        for idx in 0..datum.roots.len() {
            if datum.multiplicities[idx] < 2 {
                continue;
            }
            spaces_covered += 1;
            for t in 0..TRIALS {
                let mut rng = derive_rng(SEED, "acceptance5", idx, t);
                let x = random_unit_in_frame(&mut rng, &datum.spaces[idx]);
                let perp = perp_space(&cartan, &datum, idx, &x).expect("perp space");
                let xprime = random_unit_in_frame(&mut rng, &perp);
                let w = reconstruct(&alg, &cartan, &datum, idx, &x, &xprime, 1e-9)
                    .expect("reconstruction succeeds");
                let rt = w.residuals["round_trip"];
                let id = w.residuals["double_bracket_identity"]
                    .max(w.residuals["iterated_bracket_identity"]);
                assert!(rt <= 1e-8, "{} root {}: round trip {:.3e}", spec, idx, rt);
                assert!(id < 1e-8, "{} root {}: proof identity {:.3e}", spec, idx, id);
                worst_rt = worst_rt.max(rt);
                worst_id = worst_id.max(id);
            }
        }
    }
    assert!(spaces_covered >= 4, "expected the four mult >= 2 spaces");
    println!(
        "ACCEPTANCE 5: PASS — [M, X] = X' to {:.3e} and proof identities to {:.3e} on {} spaces x {} trials",
        worst_rt, worst_id, spaces_covered, TRIALS
    );
}

#[test]
fn acceptance_6_trivial_centralizer_forces_mult_one() {
    let mut covered = 0usize;
    for spec in catalog() {
        let (alg, cartan, datum) = setup(&spec);
        let rep = corollary_checks(&alg, &cartan, &datum, TRIALS, 1e-9, SEED, &ctx(&spec));
        let b = rep
            .entries
            .iter()
            .find(|e| e.check == "corollary_b")
            .expect("corollary_b entry");
        assert!(b.pass, "{}: corollary (b) failed", spec);
        if datum.m_frame.is_empty() {
            covered += 1;
            assert!(
                datum.multiplicities.iter().all(|&m| m == 1),
                "{}: m = 0 but a multiplicity exceeds 1",
                spec
            );
        }
    }
    println!(
        "ACCEPTANCE 6: PASS — m = 0 forces all multiplicities to 1, integer-exact on {} algebras",
        covered
    );
}

#[test]
fn acceptance_7_radiality_with_negative_control() {
    let mut worst_delta = 0.0f64;
    for spec in [AlgebraSpec::so(1, 4), AlgebraSpec::su(2, 1)] {
        let (alg, cartan, datum) = setup(&spec);
        for idx in 0..datum.roots.len() {
            if datum.multiplicities[idx] < 2 {
                continue;
            }
            for kind in [FunctionKind::TraceP, FunctionKind::TraceP2] {
                let f = InvariantFunction::new(kind);
                let samples =
                    radiality_samples(&alg, &cartan, &datum, idx, &f, TRIALS, SEED).unwrap();
                let max = samples.iter().fold(0.0f64, |m, s| m.max(s.delta));
                assert!(
                    max < 1e-8,
                    "{} root {} {}: max delta {:.3e}",
                    spec,
                    idx,
                    f.name(),
                    max
                );
                worst_delta = worst_delta.max(max);
            }
            // the non-invariant probe must be caught by the same sampling
            let control = negative_control_delta(&alg, &cartan, &datum, idx, TRIALS, SEED).unwrap();
            assert!(
                control > 1e-3,
                "{} root {}: negative control delta {:.3e} lacks power",
                spec,
                idx,
                control
            );
        }
        // fundamental vector fields of m annihilate the functions
        let c = CheckCtx {
            algebra: spec.to_string(),
            seed: SEED,
            trials: 50,
        };
        for f in InvariantFunction::all() {
            let rep = fundamental_derivative_report(&alg, &datum, &f, 50, SEED, &c);
            assert!(
                rep.pass(),
                "{} {}: fundamental derivative {:.3e}",
                spec,
                f.name(),
                rep.entries[0].max_residual
            );
        }
    }
    println!(
        "ACCEPTANCE 7: PASS — equal-norm deltas < 1e-8 (worst {:.3e}), fundamental derivatives < 1e-6, negative control exceeds 1e-3",
        worst_delta
    );
}

#[test]
fn acceptance_8_grading_symmetry_triples() {
    let mut worst = 0.0f64;
    for spec in catalog() {
        let (alg, cartan, datum) = setup(&spec);
        let rep = grading_check(&alg, &cartan, &datum, 1e-9, &ctx(&spec));
        for e in &rep.entries {
            assert!(
                e.pass,
                "{}: {} residual {:.3e}",
                spec, e.check, e.max_residual
            );
            if e.tol > 0.0 {
                worst = worst.max(e.max_residual);
            }
        }
    }
    println!(
        "ACCEPTANCE 8: PASS — bracket grading, sigma symmetry < 1e-9 (worst {:.3e}), no tripled roots",
        worst
    );
}

#[test]
fn acceptance_9_suite_determinism_and_wall_clock() {
    let exe = env!("CARGO_BIN_EXE_rootscope");
    let dir = std::env::temp_dir();
    let p1 = dir.join("rootscope-acceptance-suite-1.json");
    let p2 = dir.join("rootscope-acceptance-suite-2.json");
    let start = Instant::now();
    for p in [&p1, &p2] {
        let out = Command::new(exe)
            .args(["suite", "--seed", "42", "--json"])
            .arg(p)
            .output()
            .expect("suite runs");
        assert!(
            out.status.success(),
            "suite exited {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let elapsed = start.elapsed();
    let b1 = std::fs::read(&p1).unwrap();
    let b2 = std::fs::read(&p2).unwrap();
    assert_eq!(b1, b2, "suite JSON differs between identical runs");
    assert!(!b1.is_empty());
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "two suite runs took {:?}",
        elapsed
    );
    let _ = std::fs::remove_file(&p1);
    let _ = std::fs::remove_file(&p2);
    println!(
        "ACCEPTANCE 9: PASS — suite JSON byte-identical across runs; two full suites in {:?}",
        elapsed
    );
}
