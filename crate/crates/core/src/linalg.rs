//! Dense complex matrix helpers.

use ndarray::{Array1, Array2, Axis};
pub use num_complex::Complex64 as C64;

pub type Mat = Array2<C64>;

pub fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

pub fn identity(n: usize) -> Mat {
    Array2::eye(n)
}

pub fn zeros(n: usize) -> Mat {
    Array2::zeros((n, n))
}

pub fn diag(values: &[C64]) -> Mat {
    let mut m = zeros(values.len());
    for (i, v) in values.iter().enumerate() {
        m[[i, i]] = *v;
    }
    m
}

pub fn diag_real(values: &[f64]) -> Mat {
    let v: Vec<C64> = values.iter().map(|&x| c(x)).collect();
    diag(&v)
}

/// Diagonal entries of a matrix.
pub fn diagonal(m: &Mat) -> Vec<C64> {
    m.diag().to_vec()
}

pub fn is_diagonal(m: &Mat, tol: f64) -> bool {
    m.indexed_iter().all(|((i, j), v)| i == j || v.norm() <= tol)
}

pub fn dagger(m: &Mat) -> Mat {
    m.t().mapv(|z| z.conj())
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    ndarray::linalg::kron(a, b)
}

pub fn comm(a: &Mat, b: &Mat) -> Mat {
    a.dot(b) - b.dot(a)
}

pub fn acomm(a: &Mat, b: &Mat) -> Mat {
    a.dot(b) + b.dot(a)
}

pub fn frobenius(m: &Mat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Matrix product that skips the zero entries of the left factor.
pub trait SparseDot {
    fn sdot(&self, b: &Mat) -> Mat;
}

impl SparseDot for Mat {
    fn sdot(&self, b: &Mat) -> Mat {
        let (rows, inner) = self.dim();
        let nnz = self.iter().filter(|z| z.norm_sqr() != 0.0).count();
        if nnz * 8 > rows * inner {
            return self.dot(b);
        }
        let mut out = Array2::<C64>::zeros((rows, b.ncols()));
        for ((i, k), x) in self.indexed_iter() {
            if x.norm_sqr() != 0.0 {
                out.row_mut(i).scaled_add(*x, &b.row(k));
            }
        }
        out
    }
}

/// Largest singular value, by power iteration on `XᴴX`.
///
/// Sparse inputs (the usual case for ladder operators) iterate over their
/// non-zero entries only.
pub fn spectral_norm(m: &Mat) -> f64 {
    let (rows, n) = m.dim();
    if n == 0 || rows == 0 {
        return 0.0;
    }
    let fro = frobenius(m);
    if fro == 0.0 || !fro.is_finite() {
        return fro;
    }
    let entries: Vec<(usize, usize, C64)> = m
        .indexed_iter()
        .filter(|(_, z)| z.norm_sqr() != 0.0)
        .map(|((i, j), z)| (i, j, z / fro))
        .collect();
    if entries.len() * 4 < rows * n {
        power_iteration(n, |v, u| {
            let mut w = Array1::<C64>::zeros(rows);
            for &(i, j, x) in &entries {
                w[i] += x * v[j];
            }
            u.fill(c(0.0));
            for &(i, j, x) in &entries {
                u[j] += x.conj() * w[i];
            }
        }) * fro
    } else {
        let x = m.mapv(|z| z / fro);
        let xh = dagger(&x);
        power_iteration(n, |v, u| u.assign(&xh.dot(&x.dot(v)))) * fro
    }
}

/// `sqrt` of the top eigenvalue of the Gram operator applied by `apply`.
fn power_iteration(n: usize, apply: impl Fn(&Array1<C64>, &mut Array1<C64>)) -> f64 {
    // deterministic start vector with support on every coordinate
    let mut v: Array1<C64> = (0..n).map(|k| c(1.0 + 0.37 * ((k as f64) * 1.3).sin())).collect();
    normalize(&mut v);
    let mut u = Array1::<C64>::zeros(n);
    let mut lam = 0.0;
    for _ in 0..1000 {
        apply(&v, &mut u);
        let next = vnorm(&u);
        if next == 0.0 {
            return 0.0;
        }
        u.mapv_inplace(|z| z / next);
        std::mem::swap(&mut v, &mut u);
        let done = (next - lam).abs() <= 1e-13 * next;
        lam = next;
        if done {
            break;
        }
    }
    lam.sqrt()
}

fn vnorm(v: &Array1<C64>) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn normalize(v: &mut Array1<C64>) {
    let n = vnorm(v);
    v.mapv_inplace(|z| z / n);
}

/// Keep only the columns selected by `mask`, i.e. `X·P` for the diagonal
/// projector `P` defined by the mask.
pub fn restrict_columns(m: &Mat, mask: &[bool]) -> Mat {
    let mut out = m.clone();
    for (j, mut col) in out.axis_iter_mut(Axis(1)).enumerate() {
        if !mask[j] {
            col.fill(c(0.0));
        }
    }
    out
}

/// `X·P` with `P = diag(mask)`, compacted to the selected columns.
pub fn select_columns(m: &Mat, mask: &[bool]) -> Mat {
    let idx: Vec<usize> = (0..mask.len()).filter(|&j| mask[j]).collect();
    m.select(Axis(1), &idx)
}

/// Product of a sequence of matrices; `None` for the empty product.
pub fn product<'a>(factors: impl IntoIterator<Item = &'a Mat>) -> Option<Mat> {
    let mut it = factors.into_iter();
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, f| acc.dot(f)))
}

/// Inverse by Gauss-Jordan elimination with partial pivoting.
pub fn inverse(m: &Mat) -> Option<Mat> {
    let n = m.nrows();
    if n != m.ncols() {
        return None;
    }
    let mut a = m.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let (piv, best) = (col..n)
            .map(|r| (r, a[[r, col]].norm()))
            .fold((col, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best == 0.0 {
            return None;
        }
        if piv != col {
            for k in 0..n {
                a.swap([piv, k], [col, k]);
                inv.swap([piv, k], [col, k]);
            }
        }
        let p = a[[col, col]];
        for k in 0..n {
            a[[col, k]] /= p;
            inv[[col, k]] /= p;
        }
        for r in 0..n {
            if r != col {
                let f = a[[r, col]];
                if f != c(0.0) {
                    for k in 0..n {
                        let t = a[[col, k]];
                        a[[r, k]] -= f * t;
                        let t = inv[[col, k]];
                        inv[[r, k]] -= f * t;
                    }
                }
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectral_norm_of_diagonal() {
        let m = diag_real(&[1.0, -3.0, 2.0]);
        assert!((spectral_norm(&m) - 3.0).abs() < 1e-10);
        assert_eq!(spectral_norm(&zeros(4)), 0.0);
    }

    #[test]
    fn spectral_norm_of_rank_one() {
        // u vᵀ with |u| = √5, |v| = √2
        let mut m = zeros(2);
        m[[0, 0]] = c(1.0);
        m[[0, 1]] = c(1.0);
        m[[1, 0]] = c(2.0);
        m[[1, 1]] = c(2.0);
        assert!((spectral_norm(&m) - 10f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn inverse_roundtrip() {
        let mut m = identity(3);
        m[[0, 1]] = C64::new(2.0, 1.0);
        m[[2, 0]] = c(-0.5);
        m[[1, 1]] = c(0.0);
        m[[1, 2]] = c(3.0);
        let inv = inverse(&m).unwrap();
        let e = m.dot(&inv) - identity(3);
        assert!(frobenius(&e) < 1e-12);
        assert!(inverse(&zeros(2)).is_none());
    }

    #[test]
    fn column_selection() {
        let m = diag_real(&[1.0, 2.0, 3.0]);
        let r = restrict_columns(&m, &[true, false, true]);
        assert_eq!(r[[1, 1]], c(0.0));
        assert_eq!(select_columns(&m, &[false, true, true]).ncols(), 2);
    }
}
