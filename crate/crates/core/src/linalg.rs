//! Dense complex linear algebra helpers on top of nalgebra.

use nalgebra::{DMatrix, DVector, SymmetricEigen, SVD};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type CMat = DMatrix<C64>;
pub type CVec = DVector<C64>;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Largest entry modulus, 0 for empty input.
pub fn max_abs<'a>(it: impl IntoIterator<Item = &'a C64>) -> f64 {
    it.into_iter().fold(0.0, |m, z| m.max(z.norm()))
}

pub fn max_abs_diff(a: &CMat, b: &CMat) -> f64 {
    assert_eq!(a.shape(), b.shape());
    max_abs((a - b).iter())
}

/// Orthonormal basis (as columns) of the kernel of `a`.
///
/// Singular values below `rel_tol * sigma_max` count as zero.
pub fn nullspace(a: &CMat, rel_tol: f64) -> CMat {
    nullspace_with_floor(a, rel_tol, 0.0)
}

/// As [`nullspace`], but singular values up to `floor` always count as zero.
pub fn nullspace_with_floor(a: &CMat, rel_tol: f64, floor: f64) -> CMat {
    let (m, n) = a.shape();
    if n == 0 {
        return CMat::zeros(0, 0);
    }
    if m == 0 {
        return CMat::identity(n, n);
    }
    let padded = if m < n {
        let mut p = CMat::zeros(n, n);
        p.rows_mut(0, m).copy_from(a);
        p
    } else {
        a.clone()
    };
    let svd = SVD::new(padded, false, true);
    let vt = svd.v_t.expect("v_t requested");
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let cut = (rel_tol * smax).max(floor);
    let cols: Vec<CVec> = svd
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| smax == 0.0 || s <= cut)
        .map(|(i, _)| vt.row(i).adjoint())
        .collect();
    if cols.is_empty() {
        return CMat::zeros(n, 0);
    }
    CMat::from_columns(&cols)
}

/// Basis-independent orthonormal basis of the column span of `basis`.
///
/// Coordinate vectors are projected onto the span in order and
/// Gram-Schmidt'ed; each vector's first significant entry is made real positive.
pub fn canonical_basis(basis: &CMat) -> CMat {
    let (n, k) = basis.shape();
    if k == 0 {
        return CMat::zeros(n, 0);
    }
    let q = orthonormalize(basis);
    let proj = &q * q.adjoint();
    let mut out: Vec<CVec> = Vec::with_capacity(q.ncols());
    for i in 0..n {
        if out.len() == q.ncols() {
            break;
        }
        let mut v: CVec = proj.column(i).into_owned();
        for _ in 0..2 {
            for u in &out {
                let coef = u.dotc(&v);
                v -= u * coef;
            }
        }
        let nv = v.norm();
        if nv > 1e-6 {
            v /= c(nv, 0.0);
            fix_phase(&mut v);
            out.push(v);
        }
    }
    CMat::from_columns(&out)
}

/// Rotates `v` so that its first entry above 1e-8 in modulus is real positive.
pub fn fix_phase(v: &mut CVec) {
    let scale = v.iter().fold(0.0f64, |m, z| m.max(z.norm()));
    if let Some(z) = v.iter().find(|z| z.norm() > 1e-8 * scale.max(1e-300)) {
        let ph = z.conj() / z.norm();
        *v *= ph;
    }
}

/// Modified Gram-Schmidt on the columns, dropping dependent ones.
pub fn orthonormalize(a: &CMat) -> CMat {
    let mut out: Vec<CVec> = Vec::new();
    let scale = a.column_iter().map(|c| c.norm()).fold(0.0, f64::max);
    for col in a.column_iter() {
        let mut v: CVec = col.into_owned();
        for _ in 0..2 {
            for u in &out {
                let coef = u.dotc(&v);
                v -= u * coef;
            }
        }
        let nv = v.norm();
        if nv > 1e-9 * scale.max(1e-300) {
            out.push(v / c(nv, 0.0));
        }
    }
    if out.is_empty() {
        return CMat::zeros(a.nrows(), 0);
    }
    CMat::from_columns(&out)
}

/// Numerical rank with relative singular value cut.
pub fn rank(a: &CMat, rel_tol: f64) -> usize {
    if a.nrows() == 0 || a.ncols() == 0 {
        return 0;
    }
    let s = SVD::new(a.clone(), false, false).singular_values;
    let smax = s.iter().cloned().fold(0.0, f64::max);
    if smax == 0.0 {
        return 0;
    }
    s.iter().filter(|&&x| x > rel_tol * smax).count()
}

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
pub fn hermitian_eigen(h: &CMat) -> (Vec<f64>, CMat) {
    let sym = (h + h.adjoint()) * c(0.5, 0.0);
    let eig = SymmetricEigen::new(sym);
    let mut idx: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    idx.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());
    let vals = idx.iter().map(|&i| eig.eigenvalues[i]).collect();
    let cols: Vec<CVec> = idx.iter().map(|&i| eig.eigenvectors.column(i).into_owned()).collect();
    let vecs = if cols.is_empty() { CMat::zeros(0, 0) } else { CMat::from_columns(&cols) };
    (vals, vecs)
}

/// Smallest and largest eigenvalue of the Hermitian part.
pub fn eig_range(h: &CMat) -> (f64, f64) {
    let (v, _) = hermitian_eigen(h);
    (v.first().copied().unwrap_or(0.0), v.last().copied().unwrap_or(0.0))
}

pub fn hermiticity_residual(h: &CMat) -> f64 {
    max_abs_diff(h, &h.adjoint())
}

/// Hermitian positive-definite test: min eigenvalue above `rel * max`.
pub fn is_positive_definite(h: &CMat, rel: f64, herm_tol: f64) -> bool {
    if hermiticity_residual(h) > herm_tol {
        return false;
    }
    let (lo, hi) = eig_range(h);
    hi > 0.0 && lo > rel * hi
}

pub fn inverse(a: &CMat) -> Result<CMat> {
    a.clone()
        .try_inverse()
        .ok_or_else(|| Error::Singular(format!("{}x{} matrix", a.nrows(), a.ncols())))
}

/// Upper-triangular `r` with `g = r^H r` for Hermitian positive-definite `g`.
pub fn cholesky_upper(g: &CMat) -> Result<CMat> {
    let sym = (g + g.adjoint()) * c(0.5, 0.0);
    let ch = nalgebra::Cholesky::new(sym)
        .ok_or_else(|| Error::Positivity("Gram matrix is not positive definite".into()))?;
    Ok(ch.l().adjoint())
}

/// Least-squares solution of `a x = b`.
pub fn lstsq(a: &CMat, b: &CMat) -> CMat {
    let svd = SVD::new(a.clone(), true, true);
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    svd.solve(b, 1e-12 * smax.max(1e-300)).expect("u and v computed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CMat {
        CMat::from_row_slice(
            2,
            4,
            &[c(1.0, 0.0), c(0.0, 1.0), c(2.0, 0.0), ZERO, ZERO, ZERO, c(1.0, -1.0), c(3.0, 0.0)],
        )
    }

    #[test]
    fn nullspace_of_wide_matrix() {
        let a = sample();
        let n = nullspace(&a, 1e-12);
        assert_eq!(n.ncols(), 2);
        assert!(max_abs((&a * &n).iter()) < 1e-12);
        let g = n.adjoint() * &n;
        assert!(max_abs_diff(&g, &CMat::identity(2, 2)) < 1e-12);
    }

    #[test]
    fn canonical_basis_ignores_rotation() {
        let a = sample();
        let n = nullspace(&a, 1e-12);
        let rot = CMat::from_row_slice(2, 2, &[c(0.6, 0.0), c(0.0, 0.8), c(0.0, 0.8), c(0.6, 0.0)]);
        let b1 = canonical_basis(&n);
        let b2 = canonical_basis(&(&n * rot));
        assert!(max_abs_diff(&b1, &b2) < 1e-12);
    }

    #[test]
    fn hermitian_eigen_reconstructs() {
        let h = CMat::from_row_slice(2, 2, &[c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(2.0, 0.0)]);
        let (vals, vecs) = hermitian_eigen(&h);
        assert!((vals[0] - 1.0).abs() < 1e-12 && (vals[1] - 3.0).abs() < 1e-12);
        let d = CMat::from_diagonal(&CVec::from_iterator(2, vals.iter().map(|&x| c(x, 0.0))));
        assert!(max_abs_diff(&(&vecs * d * vecs.adjoint()), &h) < 1e-12);
    }

    #[test]
    fn cholesky_factor() {
        let g = CMat::from_row_slice(2, 2, &[c(4.0, 0.0), c(1.0, 1.0), c(1.0, -1.0), c(3.0, 0.0)]);
        let r = cholesky_upper(&g).unwrap();
        assert!(max_abs_diff(&(r.adjoint() * &r), &g) < 1e-12);
    }
}
