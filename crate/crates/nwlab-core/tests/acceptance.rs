//! Acceptance gate: eleven structural properties separating the standard
//! and Newton-Wigner localization schemes, each checked end-to-end with
//! tolerances pinned in code.
//!
//! Runs as a plain binary (no libtest harness): every criterion prints
//! exactly one PASS/FAIL line, failures carry the violated assertion, and
//! the process exits nonzero if anything fails.

mod common;

use std::panic::catch_unwind;
use std::time::Instant;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use nwlab_core::gaussian::{
    build_covariance, covariance_from_quadratures, entanglement_entropy, log_negativity,
    QuadratureFamily,
};
use nwlab_core::lattice::{free_evolution, CauchyData, LatticeSpec, Region};
use nwlab_core::localization::{
    antilocality_defect, complex_rank, default_time_grid, fit_decay_rate, nw_subspace_basis,
    smeared_nw_rank, standard_rank, standard_subspace_basis, vacuum_re_correlation,
};
use nwlab_core::oneparticle::{
    complex_structure_j, evolve, nw_map, verify_one_particle_structure, OneParticleVector,
};
use nwlab_core::weyl::{
    commutator_phase, number_expectation, product_state_defect, schmidt_cyclicity,
    vacuum_expectation, weyl_adjoint, weyl_multiply, WeylWord,
};

const CRITERIA: &[(&str, fn())] = &[
    (
        "one-particle structure: pairing laws, evolution intertwining, full complex rank",
        c01_one_particle_structure,
    ),
    (
        "complex structure squares to -1 and commutes with time evolution",
        c02_complex_structure,
    ),
    (
        "fractional Hamiltonian powers are anti-local on every proper region",
        c03_antilocality,
    ),
    (
        "rank dichotomy: standard subspaces over-span, Newton-Wigner subspaces stay local",
        c04_rank_dichotomy,
    ),
    (
        "time smearing restores full rank to Newton-Wigner subspaces",
        c05_smeared_cyclicity,
    ),
    (
        "vacuum factorizes over Newton-Wigner regions, correlates standard regions",
        c06_vacuum_correlations,
    ),
    (
        "vacuum restrictions: Newton-Wigner pure and unentangled, standard mixed and entangled",
        c07_gaussian_dichotomy,
    ),
    (
        "local number operators collapse to the total in the standard scheme",
        c08_number_collapse,
    ),
    (
        "microcausality holds for the standard field and fails for the Newton-Wigner field",
        c09_microcausality,
    ),
    (
        "Schmidt rank decides cyclicity for bipartite states",
        c10_schmidt_cyclicity,
    ),
    ("Weyl algebra laws and state positivity", c11_weyl_laws),
];

fn main() {
    // keep the output to one line per criterion: the assertion message is
    // reported by the harness below, not by the default panic printer
    std::panic::set_hook(Box::new(|_| {}));
    let total = CRITERIA.len();
    let mut failed = 0usize;
    println!("acceptance gate: {total} criteria");
    for (idx, (name, check)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(*check);
        let dt = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("[PASS] {:2}/{total} ({dt:5.2}s) {name}", idx + 1),
            Err(payload) => {
                failed += 1;
                let msg = payload
                    .downcast_ref::<String>()
                    .map(String::as_str)
                    .or_else(|| payload.downcast_ref::<&'static str>().copied())
                    .unwrap_or("panicked without message");
                println!(
                    "[FAIL] {:2}/{total} ({dt:5.2}s) {name}\n       {msg}",
                    idx + 1
                );
            }
        }
    }
    if failed > 0 {
        println!("acceptance gate: {failed}/{total} criteria FAILED");
        std::process::exit(1);
    }
    println!("acceptance gate: all {total} criteria passed");
}

/// Deterministic standard-normal amplitudes for test vectors.
fn random_amplitudes(n: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    (0..n)
        .map(|_| {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            Complex64::new(re, im)
        })
        .collect()
}

// -------------------------------------------------------------------------
// criterion 1
// -------------------------------------------------------------------------

fn c01_one_particle_structure() {
    let spec = LatticeSpec::new(64, 1.0, 1.0).unwrap();
    let report = verify_one_particle_structure(&spec, 1e-10).unwrap();
    assert!(
        report.symplectic_residual < 1e-10,
        "symplectic pairing residual {:e} exceeds 1e-10",
        report.symplectic_residual
    );
    assert!(
        report.mu_residual < 1e-10,
        "Re-pairing residual {:e} exceeds 1e-10",
        report.mu_residual
    );
    assert!(
        report.intertwining_residual < 1e-10,
        "evolution intertwining residual {:e} exceeds 1e-10",
        report.intertwining_residual
    );
    assert_eq!(
        report.complex_rank, 64,
        "K-images must complex-span all 64 dimensions"
    );
    assert!(report.pass, "verification verdict must be pass");
}

// -------------------------------------------------------------------------
// criterion 2
// -------------------------------------------------------------------------

fn c02_complex_structure() {
    let spec = LatticeSpec::new(64, 1.0, 1.0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x4a53_5452);
    for _ in 0..16 {
        let f = CauchyData::random(64, &mut rng);
        let jf = complex_structure_j(&spec, &f).unwrap();
        let jjf = complex_structure_j(&spec, &jf).unwrap();
        let involution = jjf.axpy(1.0, &f).unwrap().norm() / f.norm();
        assert!(involution < 1e-10, "|J²f + f|/|f| = {involution:e}");
        for &t in &[0.3, 1.7] {
            let lhs = complex_structure_j(&spec, &free_evolution(&spec, &f, t).unwrap()).unwrap();
            let rhs = free_evolution(&spec, &jf, t).unwrap();
            let commutator = lhs.axpy(-1.0, &rhs).unwrap().norm() / f.norm();
            assert!(
                commutator < 1e-10,
                "|J D_t f - D_t J f|/|f| = {commutator:e} at t = {t}"
            );
        }
    }
}

// -------------------------------------------------------------------------
// criterion 3
// -------------------------------------------------------------------------

fn c03_antilocality() {
    let powers = [1.0, -1.0, 0.5, -0.5];

    // at m = 0.5 every contiguous proper region clears 1e-8 with margin
    let spec = LatticeSpec::new(16, 1.0, 0.5).unwrap();
    for start in 0..16 {
        for len in 1..16 {
            let g = Region::contiguous(16, start, len).unwrap();
            for &p in &powers {
                let defect = antilocality_defect(&spec, p, &g).unwrap();
                assert!(
                    defect > 1e-8,
                    "defect {defect:e} at power {p}, region start {start} len {len}"
                );
            }
        }
    }

    // power 0 is the identity — perfectly local, the defect collapses
    let half = Region::contiguous(16, 0, 8).unwrap();
    let local = antilocality_defect(&spec, 0.0, &half).unwrap();
    assert!(local < 1e-15, "identity defect {local:e} should vanish");

    // heavier mass shrinks the worst case but anti-locality persists:
    // strictly positive floor at m = 1 across the same sweep
    let heavier = LatticeSpec::new(16, 1.0, 1.0).unwrap();
    let mut floor = f64::INFINITY;
    for start in 0..16 {
        for len in 1..16 {
            let g = Region::contiguous(16, start, len).unwrap();
            for &p in &powers {
                floor = floor.min(antilocality_defect(&heavier, p, &g).unwrap());
            }
        }
    }
    assert!(floor > 4e-9, "m = 1 defect floor {floor:e}");
}

// -------------------------------------------------------------------------
// criterion 4
// -------------------------------------------------------------------------

fn c04_rank_dichotomy() {
    let spec = LatticeSpec::new(32, 1.0, 1.0).unwrap();
    for &glen in &[1usize, 8, 16, 24] {
        let g = Region::contiguous(32, 0, glen).unwrap();
        let standard = standard_rank(&spec, &g, None).unwrap();
        assert_eq!(
            standard,
            (2 * glen).min(32),
            "standard-scheme rank at |G| = {glen}"
        );
        let nw = complex_rank(&nw_subspace_basis(&spec, &g).unwrap(), None).unwrap();
        assert_eq!(nw, glen, "Newton-Wigner rank at |G| = {glen}");
    }
}

// -------------------------------------------------------------------------
// criterion 5
// -------------------------------------------------------------------------

fn c05_smeared_cyclicity() {
    let spec = LatticeSpec::new(32, 1.0, 1.0).unwrap();
    let g = Region::contiguous(32, 0, 4).unwrap();

    let times = default_time_grid(32, 4, 0.1);
    assert_eq!(times.len(), 9, "expected nine instants");
    assert!(
        times.iter().all(|t| t.abs() < 0.1),
        "instants must lie strictly inside the window"
    );

    let smeared = smeared_nw_rank(&spec, &g, &times, None).unwrap();
    assert_eq!(
        smeared, 32,
        "nine instants over four sites must span everything"
    );

    let frozen = smeared_nw_rank(&spec, &g, &[0.0], None).unwrap();
    assert_eq!(frozen, 4, "a single instant spans only the region modes");
}

// -------------------------------------------------------------------------
// criterion 6
// -------------------------------------------------------------------------

fn c06_vacuum_correlations() {
    let spec = LatticeSpec::new(64, 1.0, 1.0).unwrap();
    let g1 = Region::contiguous(64, 0, 4).unwrap();
    let g2 = Region::contiguous(64, 4, 4).unwrap();

    // Newton-Wigner excitations over disjoint regions: exactly product
    let nw1 = nw_subspace_basis(&spec, &g1).unwrap();
    let nw2 = nw_subspace_basis(&spec, &g2).unwrap();
    let mut nw_defect: f64 = 0.0;
    for f in &nw1 {
        for g in &nw2 {
            nw_defect = nw_defect.max(product_state_defect(f, g).unwrap());
        }
    }
    assert!(nw_defect < 1e-15, "NW product defect {nw_defect:e}");

    // standard excitations over the same adjacent regions: visibly correlated
    let st1 = standard_subspace_basis(&spec, &g1).unwrap();
    let st2 = standard_subspace_basis(&spec, &g2).unwrap();
    let mut st_defect: f64 = 0.0;
    for f in &st1 {
        for g in &st2 {
            st_defect = st_defect.max(product_state_defect(f, g).unwrap());
        }
    }
    assert!(st_defect > 1e-3, "standard product defect {st_defect:e}");

    // two-point Re-correlation decays exponentially at a rate close to m
    let big = LatticeSpec::new(256, 1.0, 1.0).unwrap();
    let probe = CauchyData::delta_field(256, 0);
    let mut distances = Vec::new();
    let mut values = Vec::new();
    for sep in (4..=32).step_by(4) {
        let target = CauchyData::delta_field(256, sep);
        distances.push(sep as f64);
        values.push(vacuum_re_correlation(&big, &probe, &target).unwrap());
    }
    let rate = fit_decay_rate(&distances, &values).unwrap();
    assert!(
        (rate - 1.0).abs() < 0.25,
        "correlation decay rate {rate} strays more than 25% from m = 1"
    );
}

// -------------------------------------------------------------------------
// criterion 7
// -------------------------------------------------------------------------

fn c07_gaussian_dichotomy() {
    // light mass (m·a = 0.1): correlations reach across the lattice
    let spec = LatticeSpec::new(64, 1.0, 0.1).unwrap();
    let g = Region::contiguous(64, 0, 32).unwrap();
    let gc = g.complement();

    // Newton-Wigner half: pure restriction, zero negativity with the rest
    let nw_modes = nw_subspace_basis(&spec, &g).unwrap();
    let nw_cov = build_covariance(&spec, &nw_modes).unwrap();
    let nw_entropy = entanglement_entropy(&nw_cov);
    assert!(nw_entropy < 1e-10, "NW half-split entropy {nw_entropy:e}");

    let nw_a = QuadratureFamily::from_complex_modes(&spec, &nw_modes).unwrap();
    let nw_b = QuadratureFamily::from_complex_modes(&spec, &nw_subspace_basis(&spec, &gc).unwrap())
        .unwrap();
    let nw_ln = log_negativity(&nw_a, &nw_b).unwrap();
    assert!(
        nw_ln == 0.0,
        "NW log-negativity {nw_ln:e} must be exactly zero"
    );

    // standard half: mixed restriction, positive negativity
    let st_a =
        QuadratureFamily::from_quadratures(&spec, standard_subspace_basis(&spec, &g).unwrap())
            .unwrap();
    let st_cov = covariance_from_quadratures(&st_a).unwrap();
    let st_entropy = entanglement_entropy(&st_cov);
    assert!(st_entropy > 0.1, "standard half-split entropy {st_entropy}");
    let max_nu = st_cov.nu().iter().cloned().fold(0.0_f64, f64::max);
    assert!(
        max_nu > 0.5 + 1e-3,
        "largest symplectic eigenvalue {max_nu}"
    );

    let st_b =
        QuadratureFamily::from_quadratures(&spec, standard_subspace_basis(&spec, &gc).unwrap())
            .unwrap();
    let st_ln = log_negativity(&st_a, &st_b).unwrap();
    assert!(st_ln > 0.01, "standard log-negativity {st_ln}");
}

// -------------------------------------------------------------------------
// criterion 8
// -------------------------------------------------------------------------

fn c08_number_collapse() {
    let spec = LatticeSpec::new(32, 1.0, 1.0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e75_6d62);

    // coherent displacement spread over the whole lattice, ‖g‖² = 4
    let raw = OneParticleVector::new(spec, random_amplitudes(32, &mut rng)).unwrap();
    let g_vec = raw.scale(Complex64::new(2.0 / raw.norm(), 0.0));
    assert!((g_vec.norm_sqr() - 4.0).abs() < 1e-12);

    // standard basis of a region with 2|G| ≥ N: the local number operator
    // IS the total one, so the expectation is ‖g‖²/2 = 2 exactly
    let region = Region::contiguous(32, 0, 24).unwrap();
    let st_basis = standard_subspace_basis(&spec, &region).unwrap();
    let n_standard = number_expectation(&st_basis, &g_vec).unwrap();
    assert!(
        (n_standard - 2.0).abs() < 1e-8,
        "standard local number expectation {n_standard} vs total 2.0"
    );

    // Newton-Wigner basis of the same region counts only the local share
    let nw_basis = nw_subspace_basis(&spec, &region).unwrap();
    let n_nw = number_expectation(&nw_basis, &g_vec).unwrap();
    let share: f64 = region
        .sites()
        .iter()
        .map(|&j| spec.spacing() * g_vec.amplitudes()[j].norm_sqr())
        .sum::<f64>()
        / 2.0;
    assert!(
        (n_nw - share).abs() < 1e-10,
        "NW local number {n_nw} vs direct share {share}"
    );
    assert!(
        n_nw < 2.0 - 1e-3,
        "NW local number {n_nw} must fall short of the total for spread g"
    );

    // truncated-Fock oracle on two abstract modes: the number expectation
    // of the displaced vacuum, built from explicit ladder matrices
    let two = LatticeSpec::new(2, 1.0, 1.0).unwrap();
    let f = [Complex64::new(0.3, 0.4), Complex64::new(-0.25, 0.1)];
    let w = common::weyl_operator(f);
    let coherent = &w * common::vacuum();
    let n_oracle = common::expectation(&common::total_number(), &coherent).re;

    let g_two = OneParticleVector::new(two, f.to_vec()).unwrap();
    let full_region = Region::contiguous(2, 0, 2).unwrap();
    let full_basis = nw_subspace_basis(&two, &full_region).unwrap();
    let n_core = number_expectation(&full_basis, &g_two).unwrap();
    assert!(
        (n_oracle - n_core).abs() < 1e-6,
        "oracle number {n_oracle} vs closed form {n_core}"
    );
    assert!((n_core - g_two.norm_sqr() / 2.0).abs() < 1e-12);

    // the oracle also pins the vacuum Weyl expectation and the product law
    let w_exp_oracle = common::expectation(&w, &common::vacuum());
    let w_exp_core = vacuum_expectation(&WeylWord::generator(g_two.clone()));
    assert!(
        (w_exp_oracle - w_exp_core).norm() < 1e-6,
        "oracle Weyl expectation {w_exp_oracle} vs closed form {w_exp_core}"
    );

    // product law, compared at the vacuum matrix element: the scalar
    // ⟨0|W(f)W(h)|0⟩ carries the composition twist phase (sign included),
    // and near the vacuum corner the ladder truncation is far below 1e-6
    // (whole truncated matrices would disagree at the cutoff boundary)
    let h = [Complex64::new(-0.2, 0.15), Complex64::new(0.35, -0.3)];
    let h_two = OneParticleVector::new(two, h.to_vec()).unwrap();
    let product_core =
        weyl_multiply(&WeylWord::generator(g_two), &WeylWord::generator(h_two)).unwrap();
    let oracle_product = &w * common::weyl_operator(h);
    let prod_exp_oracle = common::expectation(&oracle_product, &common::vacuum());
    let prod_exp_core = vacuum_expectation(&product_core);
    assert!(
        (prod_exp_oracle - prod_exp_core).norm() < 1e-6,
        "Weyl product expectation: oracle {prod_exp_oracle} vs closed form {prod_exp_core}"
    );
    // the twist phase is genuinely complex here, so the comparison is
    // phase-sensitive — confirm the configuration is non-degenerate
    assert!(prod_exp_core.im.abs() > 1e-3);
}

// -------------------------------------------------------------------------
// criterion 9
// -------------------------------------------------------------------------

fn c09_microcausality() {
    let spec = LatticeSpec::new(256, 1.0, 1.0).unwrap();

    // single-site excitations separated by 16 sites
    let f_std = nw_map(&spec, &CauchyData::delta_field(256, 0)).unwrap();
    let g_std = nw_map(&spec, &CauchyData::delta_field(256, 16)).unwrap();
    let site_a = Region::contiguous(256, 0, 1).unwrap();
    let site_b = Region::contiguous(256, 16, 1).unwrap();
    let f_nw = nw_subspace_basis(&spec, &site_a).unwrap().pop().unwrap();
    let g_nw = nw_subspace_basis(&spec, &site_b).unwrap().pop().unwrap();

    // equal time: both schemes commute on disjoint regions
    let std_equal = commutator_phase(&f_std, &g_std).unwrap().abs();
    let nw_equal = commutator_phase(&f_nw, &g_nw).unwrap().abs();
    assert!(std_equal < 1e-12, "standard equal-time phase {std_equal:e}");
    assert!(nw_equal < 1e-12, "NW equal-time phase {nw_equal:e}");

    // time shift 1 at separation 16: far outside the light cone
    let leak_std = commutator_phase(&f_std, &evolve(&g_std, 1.0).unwrap())
        .unwrap()
        .abs();
    let leak_nw = commutator_phase(&f_nw, &evolve(&g_nw, 1.0).unwrap())
        .unwrap()
        .abs();
    assert!(
        leak_nw > 1e-10,
        "NW spacelike commutator phase {leak_nw:e} should be visibly nonzero"
    );
    assert!(
        leak_nw > 1e3 * leak_std,
        "contrast too small: NW {leak_nw:e} vs standard {leak_std:e}"
    );
}

// -------------------------------------------------------------------------
// criterion 10
// -------------------------------------------------------------------------

fn c10_schmidt_cyclicity() {
    let d1 = 4usize;
    let d2 = 4usize;
    let mut rng = ChaCha8Rng::seed_from_u64(0x7363_686d);

    for trial in 0..100 {
        let state: Vec<Vec<Complex64>> = (0..d1).map(|_| random_amplitudes(d2, &mut rng)).collect();
        let (rank, cyclic) = schmidt_cyclicity(&state, 1e-10).unwrap();
        assert!(cyclic, "random state {trial} must be cyclic");
        assert_eq!(rank, d2, "random state {trial} must have full Schmidt rank");
        assert_eq!(
            orbit_span_rank(&state),
            d1 * rank,
            "orbit span mismatch on trial {trial}"
        );
    }

    // a product state: Schmidt rank one, not cyclic, orbit spans d1 dims
    let u = random_amplitudes(d1, &mut rng);
    let v = random_amplitudes(d2, &mut rng);
    let product: Vec<Vec<Complex64>> = u
        .iter()
        .map(|&a| v.iter().map(|&b| a * b).collect())
        .collect();
    let (rank, cyclic) = schmidt_cyclicity(&product, 1e-10).unwrap();
    assert_eq!(rank, 1, "product state Schmidt rank");
    assert!(!cyclic, "product states are never cyclic for d2 > 1");
    assert_eq!(orbit_span_rank(&product), d1);
}

/// Brute-force check: dimension of span{(E_rs ⊗ I)ψ} over all matrix units
/// E_rs acting on the first factor.
fn orbit_span_rank(state: &[Vec<Complex64>]) -> usize {
    let d1 = state.len();
    let d2 = state[0].len();
    let mut m = DMatrix::<Complex64>::zeros(d1 * d2, d1 * d1);
    for r in 0..d1 {
        for s in 0..d1 {
            // (E_rs ⊗ I)ψ moves row s of the coefficient matrix to row r
            for c in 0..d2 {
                m[(r * d2 + c, r * d1 + s)] = state[s][c];
            }
        }
    }
    let sv = m.svd(false, false).singular_values;
    let top = sv.iter().cloned().fold(0.0_f64, f64::max);
    sv.iter().filter(|&&s| s > 1e-10 * top).count()
}

// -------------------------------------------------------------------------
// criterion 11
// -------------------------------------------------------------------------

fn c11_weyl_laws() {
    let spec = LatticeSpec::new(16, 0.5, 1.2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7765_796c);
    let random_word = |rng: &mut ChaCha8Rng| {
        let amps: Vec<Complex64> = random_amplitudes(16, rng)
            .into_iter()
            .map(|z| z * 0.5)
            .collect();
        WeylWord::generator(OneParticleVector::new(spec, amps).unwrap())
    };

    for round in 0..20 {
        let a = random_word(&mut rng);
        let b = random_word(&mut rng);
        let c = random_word(&mut rng);

        // associativity
        let ab_c = weyl_multiply(&weyl_multiply(&a, &b).unwrap(), &c).unwrap();
        let a_bc = weyl_multiply(&a, &weyl_multiply(&b, &c).unwrap()).unwrap();
        let phase_gap = (ab_c.phase() - a_bc.phase()).norm();
        let disp_gap = ab_c
            .displacement()
            .add(&a_bc.displacement().neg())
            .unwrap()
            .norm();
        assert!(
            phase_gap < 1e-12 && disp_gap < 1e-12,
            "associativity residuals {phase_gap:e}, {disp_gap:e} in round {round}"
        );

        // adjoint involution: (ab)* = b*a*
        let lhs = weyl_adjoint(&weyl_multiply(&a, &b).unwrap());
        let rhs = weyl_multiply(&weyl_adjoint(&b), &weyl_adjoint(&a)).unwrap();
        let inv_gap = (lhs.phase() - rhs.phase()).norm()
            + lhs
                .displacement()
                .add(&rhs.displacement().neg())
                .unwrap()
                .norm();
        assert!(inv_gap < 1e-12, "involution residual {inv_gap:e}");

        // unitarity: W*W = 1 and the state never exceeds modulus one
        let unit = weyl_multiply(&weyl_adjoint(&a), &a).unwrap();
        assert!((unit.phase() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!(unit.displacement().norm() < 1e-12);
        assert!(vacuum_expectation(&a).norm() <= 1.0 + 1e-12);
    }

    // positivity: Gram matrices G_ij = ⟨W(f_i)* W(f_j)⟩ are PSD
    for round in 0..8 {
        let words: Vec<WeylWord> = (0..6).map(|_| random_word(&mut rng)).collect();
        let mut gram = DMatrix::<Complex64>::zeros(6, 6);
        for i in 0..6 {
            for j in 0..6 {
                let prod = weyl_multiply(&weyl_adjoint(&words[i]), &words[j]).unwrap();
                gram[(i, j)] = vacuum_expectation(&prod);
            }
        }
        // hermitize against roundoff before the eigensolve
        let herm = (gram.clone() + gram.adjoint()) * Complex64::new(0.5, 0.0);
        let min_eig = herm
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min);
        assert!(
            min_eig >= -1e-10,
            "Gram matrix eigenvalue {min_eig:e} below -1e-10 in round {round}"
        );
    }
}
