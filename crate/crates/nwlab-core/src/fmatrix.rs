//! Crate-internal double-precision dense helpers shared by the rank,
//! projection, and verification code paths.

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Stacks equal-length complex columns into a dense matrix.
pub(crate) fn columns_to_matrix(cols: &[Vec<Complex64>]) -> DMatrix<Complex64> {
    let nrows = cols.first().map_or(0, Vec::len);
    DMatrix::from_fn(nrows, cols.len(), |i, j| cols[j][i])
}

/// Number of singular values exceeding `rtol` times the largest one.
/// A zero matrix has rank 0 for every tolerance.
pub(crate) fn svd_rank(m: &DMatrix<Complex64>, rtol: f64) -> usize {
    if m.is_empty() {
        return 0;
    }
    let sv = m.singular_values();
    let top = sv.max();
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rtol * top).count()
}

/// Orthonormal basis (as matrix columns) of the column span of `m`,
/// keeping left singular vectors whose singular value exceeds
/// `rtol`·(largest singular value).
pub(crate) fn orthonormal_column_basis(m: &DMatrix<Complex64>, rtol: f64) -> DMatrix<Complex64> {
    let svd = m.clone().svd(true, false);
    let u = svd.u.expect("left singular vectors requested");
    let sv = &svd.singular_values;
    let top = sv.max();
    let keep = if top == 0.0 {
        0
    } else {
        sv.iter().filter(|&&s| s > rtol * top).count()
    };
    u.columns(0, keep).into_owned()
}
