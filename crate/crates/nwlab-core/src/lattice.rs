//! Periodic 1-D lattice regularization of the classical Klein-Gordon system.
//!
//! The continuum model is the triple (S, σ, D_t): the real vector space S of
//! Cauchy data u0 ⊕ u1, the symplectic form σ, and the free time evolution
//! D_t. Here S becomes R^N ⊕ R^N over a periodic chain of N sites with
//! spacing `a`, and the one-particle Hamiltonian H = sqrt(m² − ∇²) becomes an
//! exact spectral multiplier in the discrete Fourier basis with dispersion
//!
//! ```text
//! ω_k = sqrt(m² + (4/a²)·sin²(πk/N)),   k = 0, …, N−1,
//! ```
//!
//! so every spectral function H^p is computed exactly (up to roundoff) by
//! transform → multiply → inverse transform. All L²-type sums carry the
//! lattice measure weight `a`, so quantities converge to their continuum
//! integrals as a → 0 with N·a fixed. The mass must be strictly positive:
//! negative powers of H appear throughout and are unbounded at m = 0.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};

/// The regularized model: site count, spacing, and mass.
///
/// Construction validates every invariant, so a value of this type is always
/// a usable lattice. The boundary condition is periodic (fixed); the spectrum
/// of H is contained in [m, sqrt(m² + 4/a²)].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeSpec {
    n_sites: usize,
    spacing: f64,
    mass: f64,
}

impl LatticeSpec {
    /// Validates and builds a lattice: N ≥ 2, a > 0, m > 0, all finite.
    ///
    /// m = 0 is rejected because the complex structure and the one-particle
    /// inner product require H^{-1}, which is unbounded at zero mass.
    pub fn new(n_sites: usize, spacing: f64, mass: f64) -> Result<Self> {
        if n_sites < 2 {
            return Err(Error::InvalidLattice(format!(
                "need at least 2 sites, got {n_sites}"
            )));
        }
        if !(spacing.is_finite() && spacing > 0.0) {
            return Err(Error::InvalidLattice(format!(
                "spacing must be finite and positive, got {spacing}"
            )));
        }
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::InvalidLattice(format!(
                "mass must be finite and positive, got {mass} \
                 (negative powers of H are unbounded at zero mass)"
            )));
        }
        Ok(Self {
            n_sites,
            spacing,
            mass,
        })
    }

    /// Number of lattice sites N.
    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    /// Lattice spacing a (the measure weight of all L²-type sums).
    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    /// Field mass m (the spectral floor of H).
    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Dispersion relation ω_k = sqrt(m² + (4/a²)·sin²(πk/N)) for k = 0..N.
    ///
    /// Every value satisfies m ≤ ω_k ≤ sqrt(m² + 4/a²), and ω depends on k
    /// only through min(k, N−k) (the folding symmetry of the discrete
    /// Laplacian).
    pub fn dispersion(&self) -> Vec<f64> {
        let n = self.n_sites as f64;
        (0..self.n_sites)
            .map(|k| {
                let s = (std::f64::consts::PI * k as f64 / n).sin();
                (self.mass * self.mass + 4.0 / (self.spacing * self.spacing) * s * s).sqrt()
            })
            .collect()
    }

    /// Applies the spectral function H^p to a complex sequence by discrete
    /// Fourier diagonalization: transform, multiply componentwise by ω_k^p,
    /// inverse transform. Exact up to roundoff; p = 0 short-circuits to the
    /// identity.
    pub fn apply_spectral(&self, p: f64, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.n_sites {
            return Err(Error::LengthMismatch {
                expected: self.n_sites,
                got: v.len(),
            });
        }
        if p == 0.0 {
            return Ok(v.to_vec());
        }
        let mut buf = v.to_vec();
        fft_forward(self.n_sites, &mut buf);
        for (x, w) in buf.iter_mut().zip(self.dispersion()) {
            *x *= w.powf(p);
        }
        fft_inverse(self.n_sites, &mut buf);
        let scale = 1.0 / self.n_sites as f64;
        for x in &mut buf {
            *x *= scale;
        }
        Ok(buf)
    }

    /// Real-input variant of [`apply_spectral`](Self::apply_spectral). The
    /// multipliers ω_k^p are even under k ↦ N−k, so the result of a real
    /// input is real up to roundoff; the imaginary parts are dropped.
    pub(crate) fn apply_spectral_real(&self, p: f64, v: &[f64]) -> Result<Vec<f64>> {
        let buf: Vec<Complex64> = v.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Ok(self
            .apply_spectral(p, &buf)?
            .into_iter()
            .map(|z| z.re)
            .collect())
    }

    /// Checks that `data` belongs to a lattice of this size.
    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n_sites {
            return Err(Error::LengthMismatch {
                expected: self.n_sites,
                got: len,
            });
        }
        Ok(())
    }
}

/// Cache of FFT plans keyed by (size, forward?).
type PlanCache = HashMap<(usize, bool), Arc<dyn Fft<f64>>>;

thread_local! {
    /// Cached FFT plans. Plans are immutable and cheap to share; caching
    /// keeps repeated spectral applications at a fixed N allocation-light.
    static FFT_PLANS: RefCell<PlanCache> = RefCell::new(HashMap::new());
}

fn with_plan(n: usize, forward: bool) -> Arc<dyn Fft<f64>> {
    FFT_PLANS.with(|cell| {
        let mut map = cell.borrow_mut();
        map.entry((n, forward))
            .or_insert_with(|| {
                let mut planner = FftPlanner::new();
                if forward {
                    planner.plan_fft_forward(n)
                } else {
                    planner.plan_fft_inverse(n)
                }
            })
            .clone()
    })
}

/// Unnormalized forward DFT in place.
pub(crate) fn fft_forward(n: usize, buf: &mut [Complex64]) {
    with_plan(n, true).process(buf);
}

/// Unnormalized inverse DFT in place (caller divides by N).
pub(crate) fn fft_inverse(n: usize, buf: &mut [Complex64]) {
    with_plan(n, false).process(buf);
}

/// A point of the classical phase space S: real field values u0 and
/// conjugate momentum values u1, one of each per site.
#[derive(Debug, Clone, PartialEq)]
pub struct CauchyData {
    u0: Vec<f64>,
    u1: Vec<f64>,
}

impl CauchyData {
    /// Builds u0 ⊕ u1; the two sequences must have equal length.
    pub fn new(u0: Vec<f64>, u1: Vec<f64>) -> Result<Self> {
        if u0.len() != u1.len() {
            return Err(Error::LengthMismatch {
                expected: u0.len(),
                got: u1.len(),
            });
        }
        Ok(Self { u0, u1 })
    }

    /// The zero element 0 ⊕ 0.
    pub fn zero(n: usize) -> Self {
        Self {
            u0: vec![0.0; n],
            u1: vec![0.0; n],
        }
    }

    /// δ_j ⊕ 0: a unit field spike at site j.
    pub fn delta_field(n: usize, j: usize) -> Self {
        let mut u0 = vec![0.0; n];
        u0[j] = 1.0;
        Self {
            u0,
            u1: vec![0.0; n],
        }
    }

    /// 0 ⊕ δ_j: a unit momentum spike at site j.
    pub fn delta_momentum(n: usize, j: usize) -> Self {
        let mut u1 = vec![0.0; n];
        u1[j] = 1.0;
        Self {
            u0: vec![0.0; n],
            u1,
        }
    }

    /// Standard-normal random data, for seeded sampling in verification runs.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        Self {
            u0: (0..n).map(|_| rng.sample(StandardNormal)).collect(),
            u1: (0..n).map(|_| rng.sample(StandardNormal)).collect(),
        }
    }

    /// Field component.
    pub fn u0(&self) -> &[f64] {
        &self.u0
    }

    /// Momentum component.
    pub fn u1(&self) -> &[f64] {
        &self.u1
    }

    /// Number of sites the data lives on.
    pub fn len(&self) -> usize {
        self.u0.len()
    }

    /// True when the data has no sites (never produced by this crate's
    /// constructors, present for completeness).
    pub fn is_empty(&self) -> bool {
        self.u0.is_empty()
    }

    /// Sites where either component is nonzero.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| self.u0[j] != 0.0 || self.u1[j] != 0.0)
            .collect()
    }

    /// Componentwise linear combination self + c·other.
    pub fn axpy(&self, c: f64, other: &CauchyData) -> Result<CauchyData> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(CauchyData {
            u0: self
                .u0
                .iter()
                .zip(&other.u0)
                .map(|(x, y)| x + c * y)
                .collect(),
            u1: self
                .u1
                .iter()
                .zip(&other.u1)
                .map(|(x, y)| x + c * y)
                .collect(),
        })
    }

    /// Euclidean norm of u0 ⊕ u1 (no measure weight; used for residual
    /// reporting only).
    pub fn norm(&self) -> f64 {
        self.u0
            .iter()
            .chain(&self.u1)
            .map(|x| x * x)
            .sum::<f64>()
            .sqrt()
    }
}

/// The symplectic form σ(f, g) = a·Σ_j (u0_j·v1_j − u1_j·v0_j).
///
/// The lattice measure weight a replaces the continuum volume element.
/// σ is antisymmetric and vanishes on pairs with disjoint site supports.
pub fn symplectic_form(spec: &LatticeSpec, f: &CauchyData, g: &CauchyData) -> Result<f64> {
    spec.check_len(f.len())?;
    spec.check_len(g.len())?;
    let mut acc = 0.0;
    for j in 0..f.len() {
        acc += f.u0[j] * g.u1[j] - f.u1[j] * g.u0[j];
    }
    Ok(spec.spacing() * acc)
}

/// The free evolution D_t in the Fourier basis:
///
/// ```text
/// û0_k(t) =  cos(ω_k t)·û0_k + ω_k⁻¹·sin(ω_k t)·û1_k
/// û1_k(t) = −ω_k·sin(ω_k t)·û0_k + cos(ω_k t)·û1_k
/// ```
///
/// This is a symplectic one-parameter group: D_t D_s = D_{t+s} and
/// σ(D_t f, D_t g) = σ(f, g). t = 0 short-circuits to the identity.
pub fn free_evolution(spec: &LatticeSpec, f: &CauchyData, t: f64) -> Result<CauchyData> {
    spec.check_len(f.len())?;
    if t == 0.0 {
        return Ok(f.clone());
    }
    let n = spec.n_sites();
    let mut f0: Vec<Complex64> = f.u0.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let mut f1: Vec<Complex64> = f.u1.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    fft_forward(n, &mut f0);
    fft_forward(n, &mut f1);
    for (k, w) in spec.dispersion().into_iter().enumerate() {
        let (s, c) = (w * t).sin_cos();
        let a0 = f0[k];
        let a1 = f1[k];
        f0[k] = c * a0 + (s / w) * a1;
        f1[k] = -(w * s) * a0 + c * a1;
    }
    fft_inverse(n, &mut f0);
    fft_inverse(n, &mut f1);
    // The multipliers are even under k ↦ N−k, so Hermitian symmetry of the
    // transforms is preserved and the results are real up to roundoff.
    let scale = 1.0 / n as f64;
    Ok(CauchyData {
        u0: f0.iter().map(|z| z.re * scale).collect(),
        u1: f1.iter().map(|z| z.re * scale).collect(),
    })
}

/// A spatial region: a subset of the site indices {0, …, N−1}.
///
/// Emptiness is allowed at construction and rejected by the operations that
/// require a nonempty (or proper) region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    n_sites: usize,
    sites: Vec<usize>,
}

impl Region {
    /// Builds a region from arbitrary site indices (deduplicated, sorted).
    pub fn new(n_sites: usize, sites: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = sites.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if let Some(&bad) = v.iter().find(|&&s| s >= n_sites) {
            return Err(Error::InvalidRegion(format!(
                "site {bad} out of range for {n_sites} sites"
            )));
        }
        Ok(Self {
            n_sites: n_sites.max(1),
            sites: v,
        })
    }

    /// A contiguous block of `len` sites starting at `start`, wrapping
    /// around the periodic boundary.
    pub fn contiguous(n_sites: usize, start: usize, len: usize) -> Result<Self> {
        if len > n_sites {
            return Err(Error::InvalidRegion(format!(
                "contiguous length {len} exceeds {n_sites} sites"
            )));
        }
        if start >= n_sites {
            return Err(Error::InvalidRegion(format!(
                "start {start} out of range for {n_sites} sites"
            )));
        }
        Self::new(n_sites, (0..len).map(|i| (start + i) % n_sites))
    }

    /// The complement G′ = {0, …, N−1} \ G.
    pub fn complement(&self) -> Region {
        let inside: Vec<bool> = {
            let mut m = vec![false; self.n_sites];
            for &s in &self.sites {
                m[s] = true;
            }
            m
        };
        Region {
            n_sites: self.n_sites,
            sites: (0..self.n_sites).filter(|&s| !inside[s]).collect(),
        }
    }

    /// The ambient site count N.
    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    /// The sites of the region, sorted ascending.
    pub fn sites(&self) -> &[usize] {
        &self.sites
    }

    /// Number of sites in the region.
    pub fn len(&self) -> usize {
        self.sites.len()
    }

    /// True for the empty region.
    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    /// True when the region is all of {0, …, N−1}.
    pub fn is_full(&self) -> bool {
        self.sites.len() == self.n_sites
    }

    /// Membership test.
    pub fn contains(&self, site: usize) -> bool {
        self.sites.binary_search(&site).is_ok()
    }

    /// True when the two regions share no site.
    pub fn is_disjoint_from(&self, other: &Region) -> bool {
        self.sites.iter().all(|s| !other.contains(*s))
    }
}
