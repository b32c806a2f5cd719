//! Truncated two-mode Fock-space oracle.
//!
//! An independent check of the Weyl-word and number-operator conventions:
//! instead of closed-form Gaussian formulas, this builds the actual
//! operators on a truncated occupation basis — annihilators as ladder
//! matrices, the Weyl operator as a genuine matrix exponential — and
//! measures expectation values by matrix algebra. Agreement with the main
//! crate binds its abstract algebra to a concrete Hilbert-space
//! representation. With the amplitudes kept small (‖f‖² well under 1),
//! truncation at six quanta per mode contributes errors far below the
//! 1e-6 comparisons made against it.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Occupation levels kept per mode: 0 through 6 quanta.
pub const LEVELS: usize = 7;

/// Dimension of the truncated two-mode space.
pub const DIM: usize = LEVELS * LEVELS;

type CMat = DMatrix<Complex64>;
type CVec = DVector<Complex64>;

/// Single-mode annihilation matrix: a|n⟩ = √n |n−1⟩ on the truncated
/// ladder.
fn ladder() -> CMat {
    let mut a = CMat::zeros(LEVELS, LEVELS);
    for n in 1..LEVELS {
        a[(n - 1, n)] = Complex64::new((n as f64).sqrt(), 0.0);
    }
    a
}

/// Annihilator of one of the two modes on the joint space.
pub fn annihilator(mode: usize) -> CMat {
    let a = ladder();
    let id = CMat::identity(LEVELS, LEVELS);
    match mode {
        0 => a.kronecker(&id),
        1 => id.kronecker(&a),
        _ => panic!("the oracle has exactly two modes"),
    }
}

/// Smeared annihilator a(f) = Σᵢ conj(fᵢ)·aᵢ — antilinear in f, matching
/// the annihilation-operator convention of the main crate.
pub fn smeared_annihilator(f: [Complex64; 2]) -> CMat {
    annihilator(0) * f[0].conj() + annihilator(1) * f[1].conj()
}

/// Field quadrature Φ(f) = (a(f) + a(f)†)/√2.
pub fn field_operator(f: [Complex64; 2]) -> CMat {
    let a = smeared_annihilator(f);
    let adj = a.adjoint();
    (a + adj) * Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0)
}

/// Weyl operator W(f) = exp(iΦ(f)) as an explicit matrix exponential.
pub fn weyl_operator(f: [Complex64; 2]) -> CMat {
    matrix_exp(&(field_operator(f) * Complex64::new(0.0, 1.0)))
}

/// Two-mode vacuum |0, 0⟩.
pub fn vacuum() -> CVec {
    let mut v = CVec::zeros(DIM);
    v[0] = Complex64::new(1.0, 0.0);
    v
}

/// Total number operator a†₀a₀ + a†₁a₁.
pub fn total_number() -> CMat {
    let a0 = annihilator(0);
    let a1 = annihilator(1);
    a0.adjoint() * &a0 + a1.adjoint() * &a1
}

/// ⟨ψ|A|ψ⟩ for a normalized state ψ.
pub fn expectation(op: &CMat, state: &CVec) -> Complex64 {
    (state.adjoint() * op * state)[(0, 0)]
}

/// Matrix exponential by scaling and squaring with a Taylor tail. The
/// arguments used here are anti-Hermitian with modest norm, where this
/// converges to machine precision.
fn matrix_exp(x: &CMat) -> CMat {
    let n = x.nrows();
    let norm = x
        .row_iter()
        .map(|row| row.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0_f64, f64::max);
    let squarings = if norm > 0.25 {
        (norm / 0.25).log2().ceil() as u32
    } else {
        0
    };
    let scale = Complex64::new((0.5_f64).powi(squarings as i32), 0.0);
    let scaled = x * scale;

    let mut sum = CMat::identity(n, n);
    let mut term = CMat::identity(n, n);
    for k in 1..=24 {
        term = (&term * &scaled) * Complex64::new(1.0 / k as f64, 0.0);
        sum += &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}
