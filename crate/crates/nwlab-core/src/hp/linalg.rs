//! Complex fixed-point vectors and a column-pivoted rank computation.
//!
//! Rank is decided by modified Gram–Schmidt with column pivoting, run twice
//! per pivot (re-orthogonalization), entirely on the 448-bit grid. A column
//! whose remaining norm falls below `rtol`·(largest initial column norm) is
//! declared dependent; with the default tolerance of 1e-60 this separates
//! genuine spectral gaps (the smallest the acceptance geometries produce is
//! ~1e-42) from the arithmetic noise floor (~1e-120) by tens of orders of
//! magnitude on each side.

use super::fixed::Fx;

/// A complex number on the fixed-point grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CxF {
    /// Real part.
    pub re: Fx,
    /// Imaginary part.
    pub im: Fx,
}

impl CxF {
    /// Builds re + i·im.
    pub fn new(re: Fx, im: Fx) -> Self {
        CxF { re, im }
    }

    /// The additive identity.
    pub fn zero() -> Self {
        CxF {
            re: Fx::zero(),
            im: Fx::zero(),
        }
    }

    /// A real value on the complex grid.
    pub fn from_real(re: Fx) -> Self {
        CxF { re, im: Fx::zero() }
    }

    /// Complex product self·rhs.
    pub fn mul(&self, rhs: &CxF) -> CxF {
        CxF {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }

    /// conj(self)·rhs — the elementary term of a Hermitian inner product.
    pub fn conj_mul(&self, rhs: &CxF) -> CxF {
        CxF {
            re: &(&self.re * &rhs.re) + &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) - &(&self.im * &rhs.re),
        }
    }

    /// |self|² as a fixed-point real.
    pub fn norm_sqr(&self) -> Fx {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    /// Scales by a real factor.
    pub fn scale(&self, s: &Fx) -> CxF {
        CxF {
            re: &self.re * s,
            im: &self.im * s,
        }
    }

    /// In-place self −= w·z.
    fn sub_scaled(&mut self, w: &CxF, z: &CxF) {
        let p = w.mul(z);
        self.re -= &p.re;
        self.im -= &p.im;
    }
}

/// ⟨u, v⟩ = Σ conj(u_i)·v_i on the fixed-point grid (unweighted; uniform
/// measure weights cancel in rank decisions).
fn dot(u: &[CxF], v: &[CxF]) -> CxF {
    let mut acc = CxF::zero();
    for (x, y) in u.iter().zip(v) {
        let t = x.conj_mul(y);
        acc.re += &t.re;
        acc.im += &t.im;
    }
    acc
}

fn norm_sqr(v: &[CxF]) -> Fx {
    let mut acc = Fx::zero();
    for x in v {
        acc += &x.norm_sqr();
    }
    acc
}

/// Complex rank of a column family by pivoted, re-orthogonalized
/// Gram–Schmidt: the number of pivots whose remaining norm exceeds
/// `rtol` times the largest initial column norm.
///
/// The tolerance is relative to the largest column norm, which bounds the
/// top singular value within a factor √(#columns); at the tolerance scales
/// used here that factor is immaterial.
pub fn pivoted_rank(columns: Vec<Vec<CxF>>, rtol: f64) -> usize {
    if columns.is_empty() {
        return 0;
    }
    let mut cols = columns;
    let max_norm_sq = cols
        .iter()
        .map(|c| norm_sqr(c))
        .max()
        .unwrap_or_else(Fx::zero);
    if max_norm_sq.is_zero() {
        return 0;
    }
    let rt = Fx::from_f64(rtol);
    let thresh_sq = &(&rt * &rt) * &max_norm_sq;

    let mut basis: Vec<Vec<CxF>> = Vec::new();
    while !cols.is_empty() {
        // pivot: the remaining column of largest norm
        let (pivot_idx, pivot_norm_sq) = cols
            .iter()
            .enumerate()
            .map(|(i, c)| (i, norm_sqr(c)))
            .max_by(|a, b| a.1.cmp(&b.1))
            .expect("nonempty column set");
        if pivot_norm_sq <= thresh_sq {
            break;
        }
        let mut q = cols.swap_remove(pivot_idx);
        // re-orthogonalize the pivot against the accepted basis (second
        // Gram–Schmidt pass; the first happened when each basis vector was
        // accepted)
        for b in &basis {
            let r = dot(b, &q);
            for (qe, be) in q.iter_mut().zip(b) {
                qe.sub_scaled(&r, be);
            }
        }
        let nrm = norm_sqr(&q).sqrt();
        if &nrm * &nrm <= thresh_sq {
            // the pivot collapsed under re-orthogonalization: dependent
            break;
        }
        let inv = Fx::one().div(&nrm);
        for qe in &mut q {
            *qe = qe.scale(&inv);
        }
        // first orthogonalization pass for every remaining column
        for c in &mut cols {
            let r = dot(&q, c);
            for (ce, qe) in c.iter_mut().zip(&q) {
                ce.sub_scaled(&r, qe);
            }
        }
        basis.push(q);
    }
    basis.len()
}
