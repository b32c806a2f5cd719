//! Covariance-matrix analysis of the vacuum restricted to mode families.
//!
//! The vacuum is quasi-free, so its restriction to any finite family of
//! field quadratures Φ(v) is a Gaussian state, fully described by the
//! symmetrized second moments M_ab = Re⟨v_a, v_b⟩/2 and the commutator
//! pairings Σ_ab = Im⟨v_a, v_b⟩. Williamson's theorem reduces (M, Σ) to
//! symplectic eigenvalues ν_i ≥ 1/2: all ν = 1/2 means the restriction is
//! pure, anything above means mixedness — vacuum entanglement with the
//! rest of the lattice. Entanglement entropy is a function of the ν's, and
//! logarithmic negativity of a bipartition comes from redoing Williamson
//! after a partial transpose (a sign flip of one side's momentum
//! quadratures).
//!
//! The structural contrast quantified here: Newton-Wigner region modes are
//! orthonormal, their quadratures decouple, every ν is exactly 1/2 — the
//! vacuum restricts to a pure product state. Standard region modes are not
//! orthogonal, their ν's exceed 1/2 at physical masses, and adjacent
//! regions carry positive negativity — the vacuum is entangled across
//! every standard split.
//!
//! All logarithms are base e (nats).

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lattice::LatticeSpec;
use crate::localization::complex_rank;
use crate::oneparticle::{self, OneParticleVector};

/// Relative threshold under which a symplectic pairing counts as zero
/// during Gram–Schmidt pivoting and cross-coupling checks.
const PAIRING_RTOL: f64 = 1e-10;

/// ν values within this distance below 1/2 are treated as exactly 1/2
/// (pure-mode roundoff); anything lower violates the uncertainty relation.
const NU_CLAMP: f64 = 1e-10;

/// A family of quadrature generators brought to canonical form: vectors
/// [q₁, p₁, q₂, p₂, …] with Im⟨q_i, p_i⟩ = 1 and all other pairings 0.
#[derive(Debug, Clone)]
pub struct QuadratureFamily {
    spec: LatticeSpec,
    vectors: Vec<OneParticleVector>,
}

impl QuadratureFamily {
    /// Canonicalizes the quadrature pairs (Φ(e), Φ(ie)) of complex modes
    /// that must be complex-linearly independent (checked by rank).
    pub fn from_complex_modes(spec: &LatticeSpec, modes: &[OneParticleVector]) -> Result<Self> {
        if modes.is_empty() {
            return Err(Error::EmptyInput("no modes given".into()));
        }
        if complex_rank(modes, None)? != modes.len() {
            return Err(Error::Degenerate(
                "modes must be complex-linearly independent".into(),
            ));
        }
        let mut quads = Vec::with_capacity(2 * modes.len());
        for e in modes {
            quads.push(e.clone());
            quads.push(e.scale(Complex64::new(0.0, 1.0)));
        }
        Self::from_quadratures(spec, quads)
    }

    /// Canonicalizes an arbitrary real-linear family of quadrature
    /// generators by symplectic Gram–Schmidt, pivoting on the largest
    /// remaining pairing. Fails if the symplectic form degenerates on the
    /// span (a leftover direction with non-negligible norm pairs with
    /// nothing).
    pub fn from_quadratures(spec: &LatticeSpec, quads: Vec<OneParticleVector>) -> Result<Self> {
        if quads.is_empty() {
            return Err(Error::EmptyInput("no quadrature generators given".into()));
        }
        for v in &quads {
            spec.check_len(v.amplitudes().len())?;
        }
        let norm_scale = quads
            .iter()
            .map(OneParticleVector::norm_sqr)
            .fold(0.0_f64, f64::max);
        if norm_scale == 0.0 {
            return Err(Error::ZeroInput(
                "all quadrature generators are zero".into(),
            ));
        }

        let mut work = quads;
        let mut canonical = Vec::with_capacity(work.len());
        while work.len() >= 2 {
            // pivot: the pair with the largest symplectic pairing
            let mut best = (0usize, 1usize, 0.0_f64);
            for i in 0..work.len() {
                for j in (i + 1)..work.len() {
                    let s = pairing(&work[i], &work[j])?;
                    if s.abs() > best.2.abs() {
                        best = (i, j, s);
                    }
                }
            }
            let (i, j, s) = best;
            if s.abs() <= PAIRING_RTOL * norm_scale {
                break;
            }
            // remove j first (j > i) so indices stay valid
            let b = work.swap_remove(j);
            let a = work.swap_remove(i);
            // orient so the pairing is positive, then scale both members
            // by 1/√s: the pair (q, p) then satisfies Im⟨q, p⟩ = 1
            let (a, b, s) = if s > 0.0 { (a, b, s) } else { (b, a, -s) };
            let inv_root = Complex64::new(1.0 / s.sqrt(), 0.0);
            let q = a.scale(inv_root);
            let p = b.scale(inv_root);
            // strip the (q, p) plane from every remaining generator:
            // w → w − s(w, p)·q + s(w, q)·p
            for w in &mut work {
                let wp = pairing(w, &p)?;
                let wq = pairing(w, &q)?;
                let mut new = w.add(&q.scale(Complex64::new(-wp, 0.0)))?;
                new = new.add(&p.scale(Complex64::new(wq, 0.0)))?;
                *w = new;
            }
            canonical.push(q);
            canonical.push(p);
        }
        // leftovers must be numerically negligible: a genuine direction on
        // which σ degenerates has no canonical pair and no Williamson form
        for w in &work {
            if w.norm_sqr() > PAIRING_RTOL * norm_scale {
                return Err(Error::Degenerate(
                    "symplectic form is degenerate on the given family".into(),
                ));
            }
        }
        if canonical.is_empty() {
            return Err(Error::Degenerate(
                "no canonically paired directions found".into(),
            ));
        }
        Ok(QuadratureFamily {
            spec: *spec,
            vectors: canonical,
        })
    }

    /// Number of canonical (q, p) pairs.
    pub fn n_modes(&self) -> usize {
        self.vectors.len() / 2
    }

    /// The canonical quadrature vectors [q₁, p₁, q₂, p₂, …].
    pub fn vectors(&self) -> &[OneParticleVector] {
        &self.vectors
    }

    /// The lattice the family lives on.
    pub fn spec(&self) -> &LatticeSpec {
        &self.spec
    }
}

/// Symplectic pairing of quadratures: s(v, w) = Im⟨v, w⟩.
fn pairing(v: &OneParticleVector, w: &OneParticleVector) -> Result<f64> {
    Ok(oneparticle::inner(v, w)?.im)
}

/// Second-moment data of the vacuum over a quadrature family, together
/// with its Williamson spectrum.
#[derive(Debug, Clone)]
pub struct CovarianceData {
    m: DMatrix<f64>,
    sigma: DMatrix<f64>,
    nu: Vec<f64>,
}

impl CovarianceData {
    /// Symmetrized second moments M_ab = Re⟨v_a, v_b⟩/2.
    pub fn m(&self) -> &DMatrix<f64> {
        &self.m
    }

    /// Commutator pairings Σ_ab = Im⟨v_a, v_b⟩.
    pub fn sigma(&self) -> &DMatrix<f64> {
        &self.sigma
    }

    /// Symplectic eigenvalues, ascending; every value is ≥ 1/2 − 1e-10.
    pub fn nu(&self) -> &[f64] {
        &self.nu
    }

    /// Number of real quadrature directions (2 × number of modes).
    pub fn basis_size(&self) -> usize {
        self.m.nrows()
    }
}

/// Vacuum covariance over the quadrature pairs of complex modes
/// (independence checked); see [`covariance_from_quadratures`].
pub fn build_covariance(spec: &LatticeSpec, modes: &[OneParticleVector]) -> Result<CovarianceData> {
    covariance_from_quadratures(&QuadratureFamily::from_complex_modes(spec, modes)?)
}

/// Vacuum covariance over an explicit canonical quadrature family:
/// M_ab = Re⟨v_a, v_b⟩/2, Σ_ab = Im⟨v_a, v_b⟩, ν from the Williamson
/// reduction. Fails if Σ is singular or the uncertainty bound ν ≥ 1/2 is
/// violated beyond roundoff (which a genuine vacuum restriction cannot
/// do).
pub fn covariance_from_quadratures(family: &QuadratureFamily) -> Result<CovarianceData> {
    let (m, sigma) = moment_matrices(family.vectors())?;
    let nu = williamson_spectrum(&m, &sigma)?;
    if let Some(&bad) = nu.iter().find(|&&v| v < 0.5 - NU_CLAMP) {
        return Err(Error::UncertaintyViolation { nu: bad });
    }
    Ok(CovarianceData { m, sigma, nu })
}

fn moment_matrices(vectors: &[OneParticleVector]) -> Result<(DMatrix<f64>, DMatrix<f64>)> {
    let d = vectors.len();
    let mut m = DMatrix::<f64>::zeros(d, d);
    let mut sigma = DMatrix::<f64>::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let z = oneparticle::inner(&vectors[i], &vectors[j])?;
            m[(i, j)] = 0.5 * z.re;
            m[(j, i)] = 0.5 * z.re;
            sigma[(i, j)] = z.im;
            sigma[(j, i)] = -z.im;
        }
    }
    Ok((m, sigma))
}

/// Williamson spectrum of (M, Σ): the moduli of the eigenvalue pairs of
/// Σ⁻¹M, computed stably as the (doubled) singular values of the real
/// antisymmetric matrix B = M^{1/2} Σ⁻¹ M^{1/2}. No uncertainty bound is
/// imposed here — partial transposes legitimately push ν̃ below 1/2.
fn williamson_spectrum(m: &DMatrix<f64>, sigma: &DMatrix<f64>) -> Result<Vec<f64>> {
    let d = m.nrows();
    if d == 0 || !d.is_multiple_of(2) {
        return Err(Error::Degenerate(
            "covariance needs a positive even dimension".into(),
        ));
    }
    // M^{1/2} through the symmetric eigendecomposition
    let eig = m.clone().symmetric_eigen();
    if eig.eigenvalues.iter().any(|&l| l <= 0.0) {
        return Err(Error::Degenerate(
            "moment matrix must be positive definite".into(),
        ));
    }
    let sqrt_vals = DMatrix::from_diagonal(&eig.eigenvalues.map(f64::sqrt));
    let m_half = &eig.eigenvectors * sqrt_vals * eig.eigenvectors.transpose();

    let lu = sigma.clone().full_piv_lu();
    let x = lu
        .solve(&m_half)
        .ok_or_else(|| Error::Degenerate("symplectic pairing matrix is singular".into()))?;
    let b = &m_half * x;
    // B is antisymmetric in exact arithmetic; symmetrization removes the
    // roundoff part before the SVD
    let b_anti = (&b - b.transpose()) * 0.5;

    let mut sv: Vec<f64> = b_anti
        .svd(false, false)
        .singular_values
        .iter()
        .cloned()
        .collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut nu = Vec::with_capacity(d / 2);
    for pair in sv.chunks(2) {
        // antisymmetry forces the singular values into equal pairs; a
        // mismatch signals a numerically invalid reduction
        if (pair[0] - pair[1]).abs() > 1e-6 * (1.0 + pair[0]) {
            return Err(Error::Degenerate(format!(
                "Williamson spectrum failed to pair: {} vs {}",
                pair[0], pair[1]
            )));
        }
        nu.push(0.5 * (pair[0] + pair[1]));
    }
    nu.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(nu)
}

/// Entanglement entropy (nats) of the Gaussian restriction:
/// S = Σ_i [(ν_i + 1/2)·ln(ν_i + 1/2) − (ν_i − 1/2)·ln(ν_i − 1/2)],
/// with ν's within roundoff of 1/2 contributing exactly 0.
pub fn entanglement_entropy(cov: &CovarianceData) -> f64 {
    entropy_from_nu(&cov.nu)
}

pub(crate) fn entropy_from_nu(nu: &[f64]) -> f64 {
    nu.iter()
        .map(|&raw| {
            let v = clamp_nu(raw);
            if v <= 0.5 {
                0.0
            } else {
                (v + 0.5) * (v + 0.5).ln() - (v - 0.5) * (v - 0.5).ln()
            }
        })
        .sum()
}

/// Pure-state roundoff guard: values in [1/2 − 1e-10, 1/2] become exactly
/// 1/2. Values above 1/2 are genuine mixedness and pass through.
fn clamp_nu(v: f64) -> f64 {
    if (0.5 - NU_CLAMP..=0.5).contains(&v) {
        0.5
    } else {
        v
    }
}

/// Logarithmic negativity (nats) across a bipartition given as two
/// canonical quadrature families: the joint covariance is partially
/// transposed (momentum sign flip on the B side) and
/// LN = Σ max(0, −ln 2ν̃_i) is summed over the new symplectic spectrum.
///
/// The two families must be symplectically uncoupled (all cross pairings
/// zero) — guaranteed for region families of either scheme at equal time —
/// so that the joint basis is canonical and "momentum of B" is
/// well-defined.
pub fn log_negativity(family_a: &QuadratureFamily, family_b: &QuadratureFamily) -> Result<f64> {
    if family_a.spec != family_b.spec {
        return Err(Error::LatticeMismatch(
            "bipartition families live on different lattices".into(),
        ));
    }
    // cross-couplings must vanish for the partial transpose to act on a
    // canonical basis
    let mut max_cross: f64 = 0.0;
    for va in family_a.vectors() {
        for vb in family_b.vectors() {
            max_cross = max_cross.max(pairing(va, vb)?.abs());
        }
    }
    if max_cross > PAIRING_RTOL {
        return Err(Error::Degenerate(format!(
            "families are symplectically coupled (max pairing {max_cross:e}); \
             partial transpose undefined"
        )));
    }

    let mut joint: Vec<OneParticleVector> = family_a.vectors().to_vec();
    joint.extend_from_slice(family_b.vectors());
    let (mut m, sigma) = moment_matrices(&joint)?;

    // partial transpose: flip the sign of every B momentum quadrature
    // (odd positions within the B block) in the moment matrix
    let offset = family_a.vectors().len();
    let flipped: Vec<usize> = (0..family_b.vectors().len())
        .filter(|i| i % 2 == 1)
        .map(|i| offset + i)
        .collect();
    for &idx in &flipped {
        for j in 0..m.ncols() {
            m[(idx, j)] = -m[(idx, j)];
        }
    }
    for &idx in &flipped {
        for i in 0..m.nrows() {
            m[(i, idx)] = -m[(i, idx)];
        }
    }

    let nu_tilde = williamson_spectrum(&m, &sigma)?;
    Ok(nu_tilde
        .into_iter()
        .map(|raw| {
            let v = clamp_nu(raw);
            if v >= 0.5 {
                0.0
            } else {
                -(2.0 * v).ln()
            }
        })
        .sum())
}
