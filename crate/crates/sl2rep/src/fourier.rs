//! Fourier transforms of complex functions on `SL2(Z/p^n Z)` at the
//! constructed irreducibles: `f^(eta) = sum_g f(g) eta(g)`, the inverse
//! transform, Plancherel bookkeeping, and the generating-set transform
//! `delta_S^(eta) = sum_{s in S} eta(s)`.
//!
//! The full-group transform walks the two Bruhat cells so that the `d` and
//! `u` factors enter as phase-permutation and diagonal column operations;
//! the only dense multiplications are one `W . A_x` per unipotent slice and
//! one `(W U_z W) . B_z` per second-cell slice.

use crate::linalg::CMat;
use crate::repbuilder::{GenMat, Inventory, Representation};
use crate::sl2group::{group_order, GeneratingSet, GroupIndex, SL2Elem};
use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FourierError {
    #[error("inventory is incomplete: sum of dim^2 = {sum_dim_sq} != |G| = {order}")]
    IncompleteInventory { sum_dim_sq: u128, order: u128 },
}

/// A complex function on the group, dense in enumeration order.
#[derive(Debug, Clone)]
pub struct GroupFunction {
    pub values: Vec<Complex64>,
}

impl GroupFunction {
    pub fn zero(index: &GroupIndex) -> Self {
        Self {
            values: vec![Complex64::default(); index.len()],
        }
    }

    /// Indicator of a single element.
    pub fn delta(index: &GroupIndex, e: &SL2Elem) -> Self {
        let mut f = Self::zero(index);
        f.values[index.of(e)] = Complex64::new(1.0, 0.0);
        f
    }

    /// Indicator of a generating set (multiplicities add).
    pub fn delta_set(index: &GroupIndex, s: &GeneratingSet) -> Self {
        let mut f = Self::zero(index);
        for e in &s.elements {
            f.values[index.of(e)] += Complex64::new(1.0, 0.0);
        }
        f
    }

    pub fn random<R: rand::Rng + ?Sized>(index: &GroupIndex, rng: &mut R) -> Self {
        Self {
            values: (0..index.len())
                .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
                .collect(),
        }
    }

    pub fn norm_sq(&self) -> f64 {
        self.values.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn max_distance(&self, other: &Self) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Brute-force convolution `(f * h)(x) = sum_y f(y) h(y^{-1} x)`; the
/// oracle for the convolution theorem.
pub fn convolve(f: &GroupFunction, h: &GroupFunction, index: &GroupIndex) -> GroupFunction {
    let mut out = GroupFunction::zero(index);
    for (yi, y) in index.elements().iter().enumerate() {
        let fy = f.values[yi];
        if fy.norm_sqr() == 0.0 {
            continue;
        }
        let yinv = y.inv();
        for (xi, x) in index.elements().iter().enumerate() {
            out.values[xi] += fy * h.values[index.of(&yinv.mul(x))];
        }
    }
    out
}

/// Per-representation Fourier coefficient matrices, parallel to the
/// inventory entries.
#[derive(Debug, Clone)]
pub struct FourierCoefficients {
    pub matrices: Vec<CMat>,
}

impl FourierCoefficients {
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            matrices: self
                .matrices
                .iter()
                .map(|m| m * Complex64::new(factor, 0.0))
                .collect(),
        }
    }
}

/// `f^(eta) = sum_g f(g) eta(g)` for every inventory representation.
pub fn fourier_transform(
    f: &GroupFunction,
    inventory: &Inventory,
    index: &GroupIndex,
) -> FourierCoefficients {
    let matrices = inventory
        .entries()
        .par_iter()
        .map(|rep| transform_one(f, rep, index))
        .collect();
    FourierCoefficients { matrices }
}

fn transform_one(f: &GroupFunction, rep: &Representation, index: &GroupIndex) -> CMat {
    let pp = rep.pp();
    let m = pp.modulus();
    let dim = rep.dim;
    let structured = (0..m).all(|b| !matches!(rep.u_image(b), GenMat::Dense(_)))
        && pp
            .units()
            .all(|a| !matches!(rep.d_image(a), GenMat::Dense(_)));
    if !structured {
        // lifted representations carry dense generator images but tiny
        // dimensions; the direct sum is cheap
        let mut out = CMat::zeros(dim, dim);
        for (i, g) in index.elements().iter().enumerate() {
            let c = f.values[i];
            if c.norm_sqr() != 0.0 {
                out += rep.evaluate(g) * c;
            }
        }
        return out;
    }

    let mut out = CMat::zeros(dim, dim);
    // cell 1: g = u_x w d_gamma u_y = [[x gamma, x gamma y - gamma^{-1}],
    //                                  [gamma, gamma y]]
    for x in 0..m {
        let mut acc = CMat::zeros(dim, dim);
        let mut any = false;
        for gamma in pp.units() {
            let gi = pp.inv(gamma).unwrap();
            let (dest, phase) = match rep.d_image(gamma) {
                GenMat::PhasePerm { dest, phase } => (dest.clone(), phase.clone()),
                GenMat::Diag(d) => ((0..dim).collect(), d.clone()),
                GenMat::Dense(_) => unreachable!(),
            };
            let a = pp.mul(x, gamma);
            for y in 0..m {
                let g =
                    SL2Elem::from_reduced(a, pp.sub(pp.mul(a, y), gi), gamma, pp.mul(gamma, y), pp);
                let c = f.values[index.of(&g)];
                if c.norm_sqr() == 0.0 {
                    continue;
                }
                any = true;
                let uphase = match rep.u_image(y) {
                    GenMat::Diag(d) => d,
                    _ => unreachable!(),
                };
                for i in 0..dim {
                    acc[(dest[i], i)] += c * phase[i] * uphase[i];
                }
            }
        }
        if any {
            let wa = rep.w_matrix() * &acc;
            out += rep.u_image(x).left_mul(&wa);
        }
    }
    // cell 2: g = w u_z w d_{-alpha} u_t = [[alpha, alpha t],
    //                                       [-z alpha, -z alpha t + alpha^{-1}]]
    let p = pp.p();
    for zt in 0..m / p {
        let z = zt * p;
        let mut acc = CMat::zeros(dim, dim);
        let mut any = false;
        for alpha in pp.units() {
            let ai = pp.inv(alpha).unwrap();
            let neg_alpha = pp.neg(alpha);
            let (dest, phase) = match rep.d_image(neg_alpha) {
                GenMat::PhasePerm { dest, phase } => (dest.clone(), phase.clone()),
                GenMat::Diag(d) => ((0..dim).collect(), d.clone()),
                GenMat::Dense(_) => unreachable!(),
            };
            let c_entry = pp.neg(pp.mul(z, alpha));
            for t in 0..m {
                let g = SL2Elem::from_reduced(
                    alpha,
                    pp.mul(alpha, t),
                    c_entry,
                    pp.add(pp.mul(c_entry, t), ai),
                    pp,
                );
                let c = f.values[index.of(&g)];
                if c.norm_sqr() == 0.0 {
                    continue;
                }
                any = true;
                let uphase = match rep.u_image(t) {
                    GenMat::Diag(d) => d,
                    _ => unreachable!(),
                };
                for i in 0..dim {
                    acc[(dest[i], i)] += c * phase[i] * uphase[i];
                }
            }
        }
        if any {
            out += rep.wuw(zt) * &acc;
        }
    }
    out
}

/// `delta_S^(eta) = sum_{s in S} eta(s)` per representation, together with
/// the normalized variant `1/|S| delta_S^`.
pub fn delta_set_transform(
    s: &GeneratingSet,
    inventory: &Inventory,
) -> (FourierCoefficients, FourierCoefficients) {
    let matrices: Vec<CMat> = inventory
        .entries()
        .par_iter()
        .map(|rep| {
            let mut m = CMat::zeros(rep.dim, rep.dim);
            for e in &s.elements {
                m += rep.evaluate(e);
            }
            m
        })
        .collect();
    let raw = FourierCoefficients { matrices };
    let normalized = raw.scaled(1.0 / s.elements.len() as f64);
    (raw, normalized)
}

/// Fourier inversion `f(g) = (1/|G|) sum_eta dim(eta) tr(eta(g^{-1})
/// f^(eta))`; requires a complete inventory.
pub fn inverse_fourier(
    coeffs: &FourierCoefficients,
    inventory: &Inventory,
    index: &GroupIndex,
) -> Result<GroupFunction, FourierError> {
    let order = group_order(inventory.pp);
    if inventory.sum_dim_sq() != order {
        return Err(FourierError::IncompleteInventory {
            sum_dim_sq: inventory.sum_dim_sq(),
            order,
        });
    }
    let scale = 1.0 / order as f64;
    let contributions: Vec<Vec<Complex64>> = inventory
        .entries()
        .par_iter()
        .zip(coeffs.matrices.par_iter())
        .map(|(rep, mat)| {
            index
                .elements()
                .iter()
                .map(|g| {
                    let eg = rep.evaluate(&g.inv());
                    // tr(eg . mat)
                    let mut tr = Complex64::default();
                    for i in 0..rep.dim {
                        for j in 0..rep.dim {
                            tr += eg[(i, j)] * mat[(j, i)];
                        }
                    }
                    tr * rep.dim as f64
                })
                .collect()
        })
        .collect();
    let mut values = vec![Complex64::default(); index.len()];
    for contrib in contributions {
        for (v, c) in values.iter_mut().zip(contrib) {
            *v += c;
        }
    }
    for v in &mut values {
        *v *= scale;
    }
    Ok(GroupFunction { values })
}

/// Both sides of the Plancherel identity `sum_g |f(g)|^2 = (1/|G|) sum_eta
/// dim(eta) ||f^(eta)||_F^2`.
pub fn plancherel_sides(
    f: &GroupFunction,
    coeffs: &FourierCoefficients,
    inventory: &Inventory,
) -> (f64, f64) {
    let lhs = f.norm_sq();
    let order = group_order(inventory.pp) as f64;
    let rhs: f64 = inventory
        .entries()
        .iter()
        .zip(&coeffs.matrices)
        .map(|(rep, m)| rep.dim as f64 * m.iter().map(|z| z.norm_sqr()).sum::<f64>())
        .sum::<f64>()
        / order;
    (lhs, rhs)
}
