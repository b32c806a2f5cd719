//! Exact Weyl (CCR) word algebra with the quasi-free vacuum functional.
//!
//! A finite product of Weyl generators reduces to a single generator times
//! a phase:
//!
//! ```text
//! W(f)·W(g) = e^{-(i/2)·Im⟨f,g⟩} · W(f + g),
//! ```
//!
//! so a word is stored exactly as (phase, total displacement). All vacuum
//! quantities are computed through the quasi-free reduction
//! ⟨W(f)⟩ = e^{-‖f‖²/4}: no Fock-space matrices appear anywhere in this
//! module (a truncated Fock oracle exists only in tests). On top of the
//! word algebra sit the structural diagnostics: the product-state defect
//! across disjoint regions (zero for NW, order-one for the standard
//! scheme), the commutator phase Im⟨f,g⟩ (the microcausality witness),
//! coherent-state expectations of subspace number operators, and the
//! Schmidt-rank toy model of cyclicity for tensor-factor algebras.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fmatrix;
use crate::oneparticle::{self, OneParticleVector};

/// A reduced Weyl word: a unit-modulus phase and the total displacement f
/// of W(f). Multiplying the original factors in order reproduces exactly
/// this pair.
#[derive(Debug, Clone, PartialEq)]
pub struct WeylWord {
    phase: Complex64,
    displacement: OneParticleVector,
}

impl WeylWord {
    /// The generator W(f) itself: phase 1, displacement f.
    pub fn generator(f: OneParticleVector) -> Self {
        WeylWord {
            phase: Complex64::new(1.0, 0.0),
            displacement: f,
        }
    }

    /// The identity word W(0).
    pub fn identity(spec: crate::lattice::LatticeSpec) -> Self {
        Self::generator(OneParticleVector::zero(spec))
    }

    /// The accumulated phase (unit modulus up to roundoff).
    pub fn phase(&self) -> Complex64 {
        self.phase
    }

    /// The total displacement f of the reduced word W(f).
    pub fn displacement(&self) -> &OneParticleVector {
        &self.displacement
    }
}

/// The CCR product: phase' = phase₁·phase₂·e^{-(i/2)·Im⟨f₁,f₂⟩},
/// displacement' = f₁ + f₂.
pub fn weyl_multiply(w1: &WeylWord, w2: &WeylWord) -> Result<WeylWord> {
    let pairing = oneparticle::inner(&w1.displacement, &w2.displacement)?.im;
    let twist = Complex64::from_polar(1.0, -0.5 * pairing);
    Ok(WeylWord {
        phase: w1.phase * w2.phase * twist,
        displacement: w1.displacement.add(&w2.displacement)?,
    })
}

/// The adjoint W(f)* = W(−f): conjugate phase, negated displacement.
pub fn weyl_adjoint(w: &WeylWord) -> WeylWord {
    WeylWord {
        phase: w.phase.conj(),
        displacement: w.displacement.neg(),
    }
}

/// Vacuum expectation of a reduced word: phase·e^{-‖f‖²/4}.
pub fn vacuum_expectation(w: &WeylWord) -> Complex64 {
    w.phase * (-0.25 * w.displacement.norm_sqr()).exp()
}

/// The product-state defect |⟨W(f)W(g)⟩ − ⟨W(f)⟩⟨W(g)⟩|.
///
/// For symplectically orthogonal f, g this reduces to
/// |⟨W(f)⟩⟨W(g)⟩|·|e^{-Re⟨f,g⟩/2} − 1|: the Re-pairing alone decides
/// whether the vacuum factorizes. Fully orthogonal NW families give 0;
/// standard families across disjoint regions do not.
pub fn product_state_defect(f: &OneParticleVector, g: &OneParticleVector) -> Result<f64> {
    let wf = WeylWord::generator(f.clone());
    let wg = WeylWord::generator(g.clone());
    let joint = vacuum_expectation(&weyl_multiply(&wf, &wg)?);
    let split = vacuum_expectation(&wf) * vacuum_expectation(&wg);
    Ok((joint - split).norm())
}

/// The commutator phase Im⟨f,g⟩ appearing in
/// W(f)W(g) = e^{-i·Im⟨f,g⟩}·W(g)W(f); zero iff the two Weyl operators
/// commute.
pub fn commutator_phase(f: &OneParticleVector, g: &OneParticleVector) -> Result<f64> {
    Ok(oneparticle::inner(f, g)?.im)
}

/// Relative singular-value cutoff for the internal orthonormalization in
/// [`number_expectation`]. Deliberately permissive (1e-14, near roundoff):
/// dropping a genuine direction of the span would silently undercount
/// quanta, so the projector errs toward inclusion. Rank questions use the
/// much coarser tolerances of [`crate::localization`]; this constant only
/// controls projection quality.
const PROJECTION_RTOL: f64 = 1e-14;

/// Expectation of the subspace number operator N_[E] = Σ a⁺(e_i)a(e_i)
/// (e_i an orthonormal basis of the closed complex span [E] of the given
/// family) in the coherent state W(g)Ω: the value is ‖P_[E] g‖²/2.
///
/// The complex span is closed internally before projecting, which makes
/// basis independence and phase invariance automatic; the physics of the
/// collapse is that [E] for a standard region family of rank N is the
/// whole space, so the region operator already counts every quantum:
/// the result equals ‖g‖²/2 regardless of g's location.
pub fn number_expectation(subspace: &[OneParticleVector], g: &OneParticleVector) -> Result<f64> {
    if subspace.is_empty() {
        return Err(Error::EmptyInput(
            "number operator needs a nonempty mode family".into(),
        ));
    }
    for v in subspace {
        oneparticle::check_same_lattice(v, g)?;
    }
    // √a-scaling turns the weighted inner product into the plain one, so
    // an unweighted SVD orthonormalization projects correctly
    let root_a = g.spec().spacing().sqrt();
    let cols: Vec<Vec<Complex64>> = subspace
        .iter()
        .map(|v| v.amplitudes().iter().map(|z| root_a * z).collect())
        .collect();
    let basis =
        fmatrix::orthonormal_column_basis(&fmatrix::columns_to_matrix(&cols), PROJECTION_RTOL);
    let g_scaled = nalgebra::DVector::from_iterator(
        g.amplitudes().len(),
        g.amplitudes().iter().map(|z| root_a * z),
    );
    let coeffs = basis.adjoint() * g_scaled;
    Ok(coeffs.norm_squared() / 2.0)
}

/// Schmidt rank of a bipartite state vector given as a d₁×d₂ coefficient
/// matrix (rows: left factor), and whether the state is cyclic for the
/// left algebra B(H₁)⊗I — which holds iff the rank equals d₂.
///
/// The orbit {(A ⊗ I)ψ} has complex dimension d₁·rank, so it is the whole
/// d₁·d₂-dimensional space exactly at full Schmidt rank. Random states
/// have full rank with probability 1 when d₁ ≥ d₂: cyclic vectors are
/// dense.
pub fn schmidt_cyclicity(state: &[Vec<Complex64>], rtol: f64) -> Result<(usize, bool)> {
    if state.is_empty() || state[0].is_empty() {
        return Err(Error::EmptyInput("state matrix must be nonempty".into()));
    }
    let d2 = state[0].len();
    if state.iter().any(|row| row.len() != d2) {
        return Err(Error::LengthMismatch {
            expected: d2,
            got: state.iter().map(Vec::len).find(|&l| l != d2).unwrap_or(d2),
        });
    }
    let m = DMatrix::from_fn(state.len(), d2, |i, j| state[i][j]);
    if m.iter().all(|z| *z == Complex64::new(0.0, 0.0)) {
        return Err(Error::ZeroInput("zero state has no Schmidt rank".into()));
    }
    let rank = fmatrix::svd_rank(&m, rtol);
    Ok((rank, rank == d2))
}
