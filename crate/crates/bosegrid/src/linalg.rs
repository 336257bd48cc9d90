//! Dense symmetric eigendecomposition (sorted) and a Lanczos ground-state
//! solver for implicitly-represented symmetric operators.

use crate::{Error, Result};
use nalgebra::{DMatrix, DVector};

/// Eigenvalues ascending with matching eigenvector columns.
pub struct SortedEigen {
    pub values: Vec<f64>,
    /// column `n` is the eigenvector of `values[n]`
    pub vectors: DMatrix<f64>,
}

/// Full symmetric eigendecomposition, eigenvalues sorted ascending.
pub fn eigh(matrix: &DMatrix<f64>) -> Result<SortedEigen> {
    let n = matrix.nrows();
    if n != matrix.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "expected square matrix, got {}x{}",
            n,
            matrix.ncols()
        )));
    }
    let eig = matrix
        .clone()
        .try_symmetric_eigen(f64::EPSILON, 10_000)
        .ok_or_else(|| Error::EigenFailure(format!("symmetric eigensolver stalled at n={n}")))?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let mut vectors = DMatrix::zeros(n, n);
    let mut values = Vec::with_capacity(n);
    for (dst, &src) in order.iter().enumerate() {
        values.push(eig.eigenvalues[src]);
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    Ok(SortedEigen { values, vectors })
}

/// Lowest eigenpair of a symmetric operator given only its matvec.
///
/// Lanczos with full reorthogonalization; the Krylov basis is kept so the
/// eigenvector can be reconstructed. Deterministic start vector.
pub fn lanczos_ground<F>(dim: usize, max_iter: usize, tol: f64, matvec: F) -> Result<(f64, DVector<f64>)>
where
    F: Fn(&DVector<f64>) -> DVector<f64>,
{
    let m = max_iter.min(dim);
    let mut basis: Vec<DVector<f64>> = Vec::with_capacity(m + 1);
    let mut alpha: Vec<f64> = Vec::with_capacity(m);
    let mut beta: Vec<f64> = Vec::with_capacity(m);

    let mut q = DVector::from_fn(dim, |i, _| {
        (((i + 1) as f64) * 0.618_033_988_749_895).fract() - 0.5
    });
    q /= q.norm();
    basis.push(q);

    let mut prev_e0 = f64::MAX;
    for j in 0..m {
        let mut w = matvec(&basis[j]);
        let a = basis[j].dot(&w);
        alpha.push(a);
        w -= &basis[j] * a;
        if j > 0 {
            w -= &basis[j - 1] * beta[j - 1];
        }
        // full reorthogonalization, twice for safety
        for _ in 0..2 {
            for qi in &basis {
                let overlap = qi.dot(&w);
                w -= qi * overlap;
            }
        }
        let b = w.norm();
        let invariant = b < 1e-13;
        if invariant || (j + 1) % 8 == 0 || j + 1 == m {
            let e0 = tridiag_lowest(&alpha, &beta).0;
            if (e0 - prev_e0).abs() < tol * e0.abs().max(1.0) || invariant {
                return Ok(recover_ground(&alpha, &beta, &basis));
            }
            prev_e0 = e0;
        }
        if j + 1 < m {
            beta.push(b);
            basis.push(w / b);
        }
    }
    Ok(recover_ground(&alpha, &beta, &basis))
}

fn tridiag_matrix(alpha: &[f64], beta: &[f64]) -> DMatrix<f64> {
    let m = alpha.len();
    let mut t = DMatrix::zeros(m, m);
    for i in 0..m {
        t[(i, i)] = alpha[i];
        if i > 0 {
            t[(i, i - 1)] = beta[i - 1];
            t[(i - 1, i)] = beta[i - 1];
        }
    }
    t
}

fn tridiag_lowest(alpha: &[f64], beta: &[f64]) -> (f64, DVector<f64>) {
    let t = tridiag_matrix(alpha, beta);
    let eig = t.symmetric_eigen();
    let mut best = 0;
    for i in 1..eig.eigenvalues.len() {
        if eig.eigenvalues[i] < eig.eigenvalues[best] {
            best = i;
        }
    }
    (
        eig.eigenvalues[best],
        eig.eigenvectors.column(best).into_owned(),
    )
}

fn recover_ground(alpha: &[f64], beta: &[f64], basis: &[DVector<f64>]) -> (f64, DVector<f64>) {
    let (e0, coeffs) = tridiag_lowest(alpha, beta);
    let dim = basis[0].len();
    let mut v = DVector::zeros(dim);
    for (c, q) in coeffs.iter().zip(basis) {
        v += q * *c;
    }
    v /= v.norm();
    (e0, v)
}
