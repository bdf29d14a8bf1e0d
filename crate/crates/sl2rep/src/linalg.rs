//! Small shared linear-algebra helpers over `Complex64` matrices.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMat = DMatrix<Complex64>;
pub type CVec = DVector<Complex64>;

/// Max-norm deviation from Hermitian symmetry.
pub fn hermitian_deviation(m: &CMat) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..m.nrows() {
        for j in 0..=i {
            let d = (m[(i, j)] - m[(j, i)].conj()).norm();
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

/// Eigenvalues of a Hermitian matrix, sorted descending.
pub fn hermitian_eigenvalues(m: &CMat) -> Vec<f64> {
    let eig = m.clone().symmetric_eigen();
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    vals
}

/// Eigen-decomposition of a Hermitian matrix: (eigenvalues ascending,
/// orthonormal eigenvector columns).
pub fn hermitian_eigen(m: &CMat) -> (Vec<f64>, CMat) {
    let eig = m.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());
    let vals: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vecs = CMat::from_columns(
        &order
            .iter()
            .map(|&i| eig.eigenvectors.column(i).into_owned())
            .collect::<Vec<_>>(),
    );
    (vals, vecs)
}

/// Eigenvalues of a real symmetric matrix, sorted descending.
pub fn real_symmetric_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let eig = m.clone().symmetric_eigen();
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    vals
}

/// All complex eigenvalues of a general complex matrix via the real `2n x 2n`
/// embedding `[[Re, -Im], [Im, Re]]`, whose spectrum is `spec(M)` together
/// with its conjugate.
pub fn general_eigenvalues_doubled(m: &CMat) -> Vec<Complex64> {
    let n = m.nrows();
    let mut j = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            let z = m[(r, c)];
            j[(r, c)] = z.re;
            j[(r, c + n)] = -z.im;
            j[(r + n, c)] = z.im;
            j[(r + n, c + n)] = z.re;
        }
    }
    j.complex_eigenvalues().iter().copied().collect()
}

/// Group sorted values into clusters split at gaps larger than `tol`.
/// Returns (value ranges as index spans into the sorted input).
pub fn cluster_sorted(values: &[f64], tol: f64) -> Vec<std::ops::Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..values.len() {
        if (values[i] - values[i - 1]).abs() > tol {
            out.push(start..i);
            start = i;
        }
    }
    if !values.is_empty() {
        out.push(start..values.len());
    }
    out
}

/// Gram-Schmidt orthonormalization of sparse vectors given as
/// (index, coefficient) lists; drops near-zero remainders.
pub fn orthonormalize_sparse(vectors: &[Vec<(usize, Complex64)>]) -> Vec<Vec<(usize, Complex64)>> {
    let mut basis: Vec<Vec<(usize, Complex64)>> = Vec::new();
    for v in vectors {
        let mut w: std::collections::BTreeMap<usize, Complex64> = v.iter().copied().collect();
        for u in &basis {
            // <u, w>
            let ip: Complex64 = u
                .iter()
                .map(|&(i, cu)| cu.conj() * w.get(&i).copied().unwrap_or_default())
                .sum();
            for &(i, cu) in u {
                *w.entry(i).or_default() -= ip * cu;
            }
        }
        let norm2: f64 = w.values().map(|c| c.norm_sqr()).sum();
        let norm = norm2.sqrt();
        if norm > 1e-10 {
            basis.push(
                w.into_iter()
                    .filter(|(_, c)| c.norm() > 1e-14)
                    .map(|(i, c)| (i, c / norm))
                    .collect(),
            );
        }
    }
    basis
}

/// Max-norm of `A - B`.
pub fn max_distance(a: &CMat, b: &CMat) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `sum_i v_i v_i^*` accumulation helper for rank-one averaging.
pub fn accumulate_outer(h: &mut CMat, v: &CVec) {
    let n = v.len();
    for i in 0..n {
        for j in 0..n {
            h[(i, j)] += v[i] * v[j].conj();
        }
    }
}
