//! Rank and span helpers shared by the numeric oracles. Rank decisions
//! go through one column-pivoted QR routine with a relative threshold so
//! every oracle cuts off noise the same way.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

/// Numerical rank: column-pivoted QR, count diagonal entries of R above
/// `rel_tol` times `max(largest diagonal, scale_floor)`. Pivoting makes
/// the diagonal magnitudes non-increasing, so the count is a prefix
/// length.
///
/// `scale_floor` anchors the threshold when the whole matrix may be
/// round-off from a quantity of known scale: a difference of contractions
/// should pass `1.0` so that an all-noise matrix reads as rank 0 instead
/// of rank 1 (a purely relative cut always keeps the leading column).
/// Pass `0.0` when the columns are genuine data of arbitrary scale.
pub(crate) fn matrix_rank(m: &DMatrix<Complex64>, rel_tol: f64, scale_floor: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let r = m.clone().col_piv_qr().r();
    let k = m.nrows().min(m.ncols());
    let lead = r[(0, 0)].norm().max(scale_floor);
    if lead < f64::MIN_POSITIVE {
        return 0;
    }
    (0..k).take_while(|&i| r[(i, i)].norm() > rel_tol * lead).count()
}

/// Orthonormal basis for the column span, at the same rank threshold
/// (purely relative: the columns are data, not a difference).
pub(crate) fn orthonormal_cols(m: &DMatrix<Complex64>, rel_tol: f64) -> DMatrix<Complex64> {
    let rank = matrix_rank(m, rel_tol, 0.0);
    if rank == 0 {
        return DMatrix::zeros(m.nrows(), 0);
    }
    let q = m.clone().col_piv_qr().q();
    q.columns(0, rank).into_owned()
}

/// Dimension of the smallest subspace containing the columns of `start`
/// and invariant under every operator in `ops`: alternate
/// span-and-multiply until the dimension stabilizes.
pub(crate) fn krylov_span_dim(
    ops: &[DMatrix<Complex64>],
    start: &DMatrix<Complex64>,
    rel_tol: f64,
) -> usize {
    let dim = start.nrows();
    let mut basis = orthonormal_cols(start, rel_tol);
    loop {
        let w = basis.ncols();
        if w == 0 || w == dim {
            return w;
        }
        let mut stacked = DMatrix::zeros(dim, w * (ops.len() + 1));
        stacked.view_mut((0, 0), (dim, w)).copy_from(&basis);
        for (k, op) in ops.iter().enumerate() {
            stacked
                .view_mut((0, (k + 1) * w), (dim, w))
                .copy_from(&(op * &basis));
        }
        let next = orthonormal_cols(&stacked, rel_tol);
        if next.ncols() == w {
            return w;
        }
        basis = next;
    }
}

/// Standard complex Gaussian coordinates (independent real and imaginary
/// normals).
pub(crate) fn gaussian_coords<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Complex64> {
    (0..len)
        .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn rank_of_outer_product_is_one() {
        let u = DMatrix::from_column_slice(3, 1, &[c(1.0), c(2.0), c(-1.0)]);
        let m = &u * u.transpose();
        assert_eq!(matrix_rank(&m, 1e-10, 0.0), 1);
        assert_eq!(matrix_rank(&DMatrix::<Complex64>::zeros(3, 3), 1e-10, 0.0), 0);
        assert_eq!(matrix_rank(&DMatrix::<Complex64>::identity(4, 4), 1e-10, 0.0), 4);
    }

    #[test]
    fn scale_floor_reads_noise_as_rank_zero() {
        // all entries are round-off relative to operators of norm ~1
        let noise = DMatrix::from_fn(3, 3, |i, j| c(1e-14 * ((i + 2 * j) as f64 - 3.0)));
        assert_eq!(matrix_rank(&noise, 1e-10, 1.0), 0);
        // a purely relative cut sees structure in the noise instead
        assert!(matrix_rank(&noise, 1e-10, 0.0) >= 1);
        // the floor must not mask genuine rank at ordinary scale
        assert_eq!(matrix_rank(&DMatrix::<Complex64>::identity(3, 3), 1e-10, 1.0), 3);
    }

    #[test]
    fn orthonormal_cols_span_and_are_orthonormal() {
        let m = DMatrix::from_column_slice(
            3,
            3,
            &[c(1.0), c(0.0), c(0.0), c(1.0), c(0.0), c(0.0), c(0.0), c(1.0), c(0.0)],
        );
        let q = orthonormal_cols(&m, 1e-10);
        assert_eq!(q.ncols(), 2);
        let gram = q.adjoint() * &q;
        assert!((gram - DMatrix::<Complex64>::identity(2, 2)).norm() < 1e-12);
    }

    #[test]
    fn krylov_closure_of_jordan_block() {
        // nilpotent Jordan block: e_2 generates everything, e_0 only itself
        let mut j = DMatrix::<Complex64>::zeros(3, 3);
        j[(0, 1)] = c(1.0);
        j[(1, 2)] = c(1.0);
        let e2 = DMatrix::from_column_slice(3, 1, &[c(0.0), c(0.0), c(1.0)]);
        let e0 = DMatrix::from_column_slice(3, 1, &[c(1.0), c(0.0), c(0.0)]);
        assert_eq!(krylov_span_dim(&[j.clone()], &e2, 1e-10), 3);
        assert_eq!(krylov_span_dim(&[j], &e0, 1e-10), 1);
    }
}
