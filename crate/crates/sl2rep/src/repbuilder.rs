//! Construction of the representations `R_k(Delta, sigma)`, their
//! irreducible restrictions to induced subspaces, the `k = n`
//! decomposition, the labeled inventory of inequivalent irreducibles, and
//! character tables.
//!
//! All constructed matrices are unitary: the big action preserves the
//! standard inner product of `C[G]` and every basis used here is
//! orthonormal.

use crate::baseline;
use crate::gring::{
    induced_basis_unchecked, CCharacter, CGroup, GRingError, OrbitData, RingParams,
};
use crate::linalg::{orthonormalize_sparse, CMat};
use crate::modarith::{
    action_constant, canonical_delta_primes, canonical_sigmas, legendre, unity_power,
    ModArithError, PrimePower, WeylConstantConvention,
};
use crate::sl2group::{
    bruhat_decompose, group_order, BruhatCase, BruhatFactor, GroupError, SL2Elem,
};
use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::TAU;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RepError {
    #[error(transparent)]
    ModArith(#[from] ModArithError),
    #[error(transparent)]
    GRing(#[from] GRingError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Baseline(#[from] baseline::BaselineError),
    #[error("k = n split supports n <= 3, got n = {0}")]
    Unsupported(u32),
    #[error("inventory requires n <= 3, got n = {0}")]
    UnsupportedLevel(u32),
}

/// Sign of the exponent in the Weyl action `T(w)[g] = c sum_h zeta^{±Tr(g *
/// conj(h))} h`. The two sections of the source construction disagree; the
/// negative sign is the one under which the action is a homomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum TraceSign {
    #[default]
    Negative,
    Positive,
}

impl TraceSign {
    fn apply(&self, t: u64) -> i64 {
        match self {
            TraceSign::Negative => -(t as i64),
            TraceSign::Positive => t as i64,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RepBuildOptions {
    pub weyl_convention: WeylConstantConvention,
    pub trace_sign: TraceSign,
    /// seed for the randomized baseline (quotient representation) solver
    pub baseline_seed: u64,
}

impl Default for RepBuildOptions {
    fn default() -> Self {
        Self {
            weyl_convention: WeylConstantConvention::default(),
            trace_sign: TraceSign::default(),
            baseline_seed: 1,
        }
    }
}

/// Character label of a non-quotient representation: `Ell(l)` for the
/// cyclic-character index at `k < n`, `Eps(+-1)` for the two-element `C` at
/// `k = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChiLabel {
    Ell(u64),
    Eps(i8),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum RepLabel {
    Trivial,
    NonQuotient {
        k: u32,
        chi: ChiLabel,
        /// canonical index of the Delta class (1 or 2)
        delta_idx: u8,
        delta_prime: u64,
        /// canonical index of the sigma class (1 or 2)
        sigma_idx: u8,
        sigma: u64,
    },
    Quotient {
        base_index: usize,
        base_dim: usize,
    },
}

impl RepLabel {
    pub fn is_quotient(&self) -> bool {
        matches!(self, RepLabel::Quotient { .. } | RepLabel::Trivial)
    }

    /// `(k, chi, delta_idx, sigma_idx)` for plot ordering; quotient entries
    /// sort after every non-quotient entry.
    pub fn sort_key(&self) -> (u32, u8, u64, u8) {
        match self {
            RepLabel::NonQuotient {
                k,
                chi,
                delta_idx,
                sigma_idx,
                ..
            } => {
                let c = match chi {
                    ChiLabel::Ell(l) => *l,
                    ChiLabel::Eps(e) => {
                        if *e > 0 {
                            0
                        } else {
                            1
                        }
                    }
                };
                (*k, *delta_idx, c, *sigma_idx)
            }
            _ => (u32::MAX, u8::MAX, u64::MAX, u8::MAX),
        }
    }
}

impl std::fmt::Display for RepLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RepLabel::Trivial => write!(f, "1"),
            RepLabel::NonQuotient {
                k,
                chi,
                delta_idx,
                sigma_idx,
                ..
            } => match chi {
                ChiLabel::Ell(l) => write!(f, "R{k}({l},{delta_idx},{sigma_idx})"),
                ChiLabel::Eps(e) => write!(f, "R{k}({e:+},{delta_idx},{sigma_idx})"),
            },
            RepLabel::Quotient {
                base_index,
                base_dim,
            } => {
                write!(f, "Q{base_index}[dim {base_dim}]")
            }
        }
    }
}

/// A generator image: structured forms keep evaluation at `O(dim^2)` per
/// group element for the constructed representations.
#[derive(Debug, Clone)]
pub enum GenMat {
    /// diagonal with the given phases
    Diag(Vec<Complex64>),
    /// `F e_i = phase[i] e_{dest[i]}`
    PhasePerm {
        dest: Vec<usize>,
        phase: Vec<Complex64>,
    },
    Dense(CMat),
}

impl GenMat {
    pub fn to_dense(&self, dim: usize) -> CMat {
        match self {
            GenMat::Diag(d) => CMat::from_diagonal(&nalgebra::DVector::from_vec(d.clone())),
            GenMat::PhasePerm { dest, phase } => {
                let mut m = CMat::zeros(dim, dim);
                for i in 0..dim {
                    m[(dest[i], i)] = phase[i];
                }
                m
            }
            GenMat::Dense(m) => m.clone(),
        }
    }

    /// `self . m` in place of m.
    pub fn left_mul(&self, m: &CMat) -> CMat {
        match self {
            GenMat::Diag(d) => {
                let mut out = m.clone();
                for i in 0..out.nrows() {
                    for j in 0..out.ncols() {
                        out[(i, j)] *= d[i];
                    }
                }
                out
            }
            GenMat::PhasePerm { dest, phase } => {
                let mut out = CMat::zeros(m.nrows(), m.ncols());
                for i in 0..m.nrows() {
                    for j in 0..m.ncols() {
                        out[(dest[i], j)] = phase[i] * m[(i, j)];
                    }
                }
                out
            }
            GenMat::Dense(a) => a * m,
        }
    }

    /// `m . self`.
    pub fn right_mul(&self, m: &CMat) -> CMat {
        match self {
            GenMat::Diag(d) => {
                let mut out = m.clone();
                for j in 0..out.ncols() {
                    for i in 0..out.nrows() {
                        out[(i, j)] *= d[j];
                    }
                }
                out
            }
            GenMat::PhasePerm { dest, phase } => {
                let mut out = CMat::zeros(m.nrows(), m.ncols());
                for j in 0..m.ncols() {
                    for i in 0..m.nrows() {
                        out[(i, j)] = phase[j] * m[(i, dest[j])];
                    }
                }
                out
            }
            GenMat::Dense(a) => m * a,
        }
    }
}

/// An explicit unitary matrix representation, stored through the images of
/// the Bruhat generators `d_a`, `u_b`, `w`; arbitrary elements evaluate as
/// products along their Bruhat factorization. The dense `w u_z w` products
/// of the second Bruhat cell are cached per `z`.
pub struct Representation {
    pub label: RepLabel,
    pub dim: usize,
    pp: PrimePower,
    u_images: Vec<GenMat>,
    d_images: Vec<Option<GenMat>>,
    w_image: CMat,
    wuw_cache: Vec<OnceLock<CMat>>,
}

impl Representation {
    pub fn from_images(
        label: RepLabel,
        pp: PrimePower,
        u_images: Vec<GenMat>,
        d_images: Vec<Option<GenMat>>,
        w_image: CMat,
    ) -> Self {
        let dim = w_image.nrows();
        let cache_len = (pp.modulus() / pp.p()) as usize;
        Self {
            label,
            dim,
            pp,
            u_images,
            d_images,
            w_image,
            wuw_cache: (0..cache_len).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn pp(&self) -> PrimePower {
        self.pp
    }

    pub fn u_image(&self, b: u64) -> &GenMat {
        &self.u_images[b as usize]
    }

    pub fn d_image(&self, a: u64) -> &GenMat {
        self.d_images[a as usize]
            .as_ref()
            .expect("d_a is defined for units only")
    }

    pub fn w_matrix(&self) -> &CMat {
        &self.w_image
    }

    /// `W U_{p t} W`, cached.
    pub fn wuw(&self, t: u64) -> &CMat {
        self.wuw_cache[t as usize].get_or_init(|| {
            let z = (self.pp.p() * t) % self.pp.modulus();
            let uz = &self.u_images[z as usize];
            uz.right_mul(&self.w_image) * &self.w_image
            // note: (W . U_z) . W computed as right_mul then dense product
        })
    }

    /// Evaluate the representation at an arbitrary group element via its
    /// Bruhat factorization.
    pub fn evaluate(&self, e: &SL2Elem) -> CMat {
        let bf = bruhat_decompose(e);
        match bf.case {
            BruhatCase::LowerUnit => {
                // u_x w d_g u_y
                let (x, g, y) = match bf.factors[..] {
                    [BruhatFactor::U(x), BruhatFactor::W, BruhatFactor::D(g), BruhatFactor::U(y)] => {
                        (x, g, y)
                    }
                    _ => unreachable!(),
                };
                let m = self.u_images[x as usize].left_mul(&self.w_image);
                let m = self.d_image(g).right_mul(&m);
                self.u_images[y as usize].right_mul(&m)
            }
            BruhatCase::LowerDivisible => {
                // w u_z w d_a u_t with z = 0 mod p
                let (z, a, t) = match bf.factors[..] {
                    [BruhatFactor::W, BruhatFactor::U(z), BruhatFactor::W, BruhatFactor::D(a), BruhatFactor::U(t)] => {
                        (z, a, t)
                    }
                    _ => unreachable!(),
                };
                debug_assert_eq!(z % self.pp.p(), 0);
                let m = self.wuw(z / self.pp.p()).clone();
                let m = self.d_image(a).right_mul(&m);
                self.u_images[t as usize].right_mul(&m)
            }
        }
    }

    pub fn trace_at(&self, e: &SL2Elem) -> Complex64 {
        self.evaluate(e).trace()
    }

    /// Clone the stored images (the `w u_z w` cache restarts empty).
    pub fn shallow_clone(&self) -> Self {
        Self::from_images(
            self.label.clone(),
            self.pp,
            self.u_images.clone(),
            self.d_images.clone(),
            self.w_image.clone(),
        )
    }
}

/// The big (reducible) action of `R_k(Delta, sigma)` on `C[G]`, materialized
/// on the canonical point basis. Used by tests and kept small: the dense
/// Weyl matrix has `|G|^2` entries.
pub struct BigAction {
    pub rp: RingParams,
    pub sigma: u64,
    pub constant: Complex64,
    opts: RepBuildOptions,
}

impl BigAction {
    pub fn new(rp: RingParams, sigma: u64, opts: RepBuildOptions) -> Result<Self, RepError> {
        let constant = action_constant(
            rp.k(),
            rp.delta_prime(),
            sigma,
            rp.pp(),
            opts.weyl_convention,
        )?;
        Ok(Self {
            rp,
            sigma,
            constant,
            opts,
        })
    }

    pub fn dim(&self) -> usize {
        self.rp.point_count() as usize
    }

    pub fn u_matrix(&self, b: u64) -> CMat {
        let n = self.dim();
        let mut m = CMat::zeros(n, n);
        for i in 0..n {
            let g = self.rp.point_at(i);
            let t = b as i64 * self.rp.norm(g) as i64;
            m[(i, i)] = unity_power(self.sigma as i64, t, self.rp.pp());
        }
        m
    }

    pub fn d_matrix(&self, a: u64) -> CMat {
        let n = self.dim();
        let pp = self.rp.pp();
        let ai = pp.inv(a).unwrap();
        let sign = legendre(a as i64, pp.p()).pow(self.rp.k()) as f64;
        let mut m = CMat::zeros(n, n);
        for i in 0..n {
            let g = self.rp.point_at(i);
            let dest = self.rp.point_index(self.rp.scale(g, ai));
            m[(dest, i)] = Complex64::new(sign, 0.0);
        }
        m
    }

    pub fn w_matrix(&self) -> CMat {
        let n = self.dim();
        let mut m = CMat::zeros(n, n);
        for i in 0..n {
            let g = self.rp.point_at(i);
            for j in 0..n {
                let h = self.rp.point_at(j);
                let t = self.rp.trace(self.rp.star(g, self.rp.conj(h)));
                m[(j, i)] = self.constant
                    * unity_power(
                        self.sigma as i64,
                        self.opts.trace_sign.apply(t),
                        self.rp.pp(),
                    );
            }
        }
        m
    }

    /// Evaluate the big action at a group element via Bruhat products.
    pub fn evaluate(&self, e: &SL2Elem) -> CMat {
        let mut acc = CMat::identity(self.dim(), self.dim());
        for f in bruhat_decompose(e).factors {
            let m = match f {
                BruhatFactor::D(a) => self.d_matrix(a),
                BruhatFactor::U(b) => self.u_matrix(b),
                BruhatFactor::W => self.w_matrix(),
            };
            acc *= m;
        }
        acc
    }
}

/// Restrict `R_k(Delta, sigma)` to the induced subspace of a principal
/// character: the irreducible `R_k(chi, Delta, sigma)` for `k < n`, in the
/// orthonormalized `f_i` basis.
pub fn restrict(
    cg: &CGroup,
    orbits: &OrbitData,
    chi: &CCharacter,
    sigma: u64,
    label: RepLabel,
    opts: RepBuildOptions,
) -> Result<Representation, RepError> {
    if !chi.principal {
        return Err(RepError::GRing(GRingError::NotPrincipal));
    }
    Ok(restrict_unchecked(cg, orbits, chi, sigma, label, opts))
}

/// Restriction to the induced subspace of any character with nonvanishing
/// basis (used for principal characters; exposed for experiments over
/// invariant subspaces without the irreducibility guarantee).
pub fn restrict_unchecked(
    cg: &CGroup,
    orbits: &OrbitData,
    chi: &CCharacter,
    sigma: u64,
    label: RepLabel,
    opts: RepBuildOptions,
) -> Representation {
    let rp = cg.rp();
    let pp = rp.pp();
    let m = pp.modulus();
    let basis = induced_basis_unchecked(cg, orbits, chi);
    let dim = basis.len();
    let points: Vec<_> = basis.iter().map(|v| rp.point_at(v.rep_point)).collect();

    // u_b: diagonal, phase zeta_sigma^{b Nm(m_i)}
    let u_images: Vec<GenMat> = (0..m)
        .map(|b| {
            GenMat::Diag(
                points
                    .iter()
                    .map(|&pt| unity_power(sigma as i64, b as i64 * rp.norm(pt) as i64, pp))
                    .collect(),
            )
        })
        .collect();

    // orbit id -> basis position
    let mut pos_of_orbit = vec![usize::MAX; orbits.orbit_count()];
    for (i, v) in basis.iter().enumerate() {
        pos_of_orbit[v.orbit] = i;
    }

    // d_a: phase-permutation; destination orbit of m_i . a^{-1}
    let k = rp.k();
    let d_images: Vec<Option<GenMat>> = (0..m)
        .map(|a| {
            if !pp.is_unit(a) {
                return None;
            }
            let ai = pp.inv(a).unwrap();
            let sign = legendre(a as i64, pp.p()).pow(k) as f64;
            let mut dest = vec![0usize; dim];
            let mut phase = vec![Complex64::default(); dim];
            for (i, &pt) in points.iter().enumerate() {
                let q = rp.scale(pt, ai);
                let qi = rp.point_index(q);
                let oid = orbits.orbit_of[qi] as usize;
                let j = pos_of_orbit[oid];
                debug_assert_ne!(j, usize::MAX, "scaling left the surviving orbits");
                debug_assert_eq!(basis[i].stab_size, basis[j].stab_size);
                let c0 = orbits.reaching_c[qi] as usize;
                dest[i] = j;
                phase[i] = chi.value_conj(c0) * sign;
            }
            Some(GenMat::PhasePerm { dest, phase })
        })
        .collect();

    // w: entry (j, i) = c / |Stab_j| * sum_{c in C} chi(c)
    //                   zeta^{+-Tr((c * m_i) * conj(m_j))} * N_j / N_i
    let constant = action_constant(k, rp.delta_prime(), sigma, pp, opts.weyl_convention)
        .expect("parameters validated by RingParams");
    let mut w = CMat::zeros(dim, dim);
    for (i, &mi) in points.iter().enumerate() {
        for (j, &mj) in points.iter().enumerate() {
            let mjc = rp.conj(mj);
            let mut s = Complex64::default();
            for (ci, &c) in cg.elements().iter().enumerate() {
                let t = rp.trace(rp.star(rp.star(c, mi), mjc));
                s += chi.value(ci) * unity_power(sigma as i64, opts.trace_sign.apply(t), pp);
            }
            w[(j, i)] = constant * s * basis[j].norm / (basis[j].stab_size as f64 * basis[i].norm);
        }
    }

    Representation::from_images(label, pp, u_images, d_images, w)
}

/// Sparse vector over the points of `Z/p^n Z x 0` (as residues).
type SparseVec = Vec<(usize, Complex64)>;

/// Build a representation from an orthonormal sparse basis of an invariant
/// subspace of `R_n(sigma)` on `C[Z/p^n Z]` (the `k = n` space).
fn rep_from_sparse_basis(
    label: RepLabel,
    pp: PrimePower,
    sigma: u64,
    basis: &[SparseVec],
    opts: RepBuildOptions,
) -> Representation {
    let m = pp.modulus();
    let dim = basis.len();
    let n = pp.n();
    let constant = action_constant(n, 1, sigma, pp, opts.weyl_convention)
        .expect("k = n parameters are always valid");

    let maps: Vec<std::collections::HashMap<usize, Complex64>> =
        basis.iter().map(|v| v.iter().copied().collect()).collect();

    // u_b: each basis vector is supported on residues with a common value of
    // x^2 mod p^n, so the image is diagonal
    let u_images: Vec<GenMat> = (0..m)
        .map(|b| {
            GenMat::Diag(
                basis
                    .iter()
                    .map(|v| {
                        let x0 = v[0].0 as u64;
                        let phase =
                            unity_power(sigma as i64, b as i64 * ((x0 * x0 % m) as i64), pp);
                        debug_assert!(v.iter().all(|&(x, _)| {
                            let xx = (x as u64 * x as u64) % m;
                            (unity_power(sigma as i64, b as i64 * xx as i64, pp) - phase).norm()
                                < 1e-12
                        }));
                        phase
                    })
                    .collect(),
            )
        })
        .collect();

    // d_a: dense block via inner products <b_r, F b_c>
    let k = n;
    let d_images: Vec<Option<GenMat>> = (0..m)
        .map(|a| {
            if !pp.is_unit(a) {
                return None;
            }
            let ai = pp.inv(a).unwrap();
            let sign = legendre(a as i64, pp.p()).pow(k) as f64;
            let mut mat = CMat::zeros(dim, dim);
            for (c, v) in basis.iter().enumerate() {
                for &(x, coef) in v {
                    let y = (x as u64 * ai % m) as usize;
                    for (r, map) in maps.iter().enumerate() {
                        if let Some(&cr) = map.get(&y) {
                            mat[(r, c)] += cr.conj() * coef * sign;
                        }
                    }
                }
            }
            Some(GenMat::Dense(mat))
        })
        .collect();

    // w: <b_r, W b_c> with W e_x = c sum_y zeta^{+-2xy} e_y
    let mut w = CMat::zeros(dim, dim);
    for (c, v) in basis.iter().enumerate() {
        for (r, u) in basis.iter().enumerate() {
            let mut s = Complex64::default();
            for &(x, cx) in v {
                for &(y, cy) in u {
                    let t = 2 * x as u64 * y as u64 % m;
                    s += cx * cy.conj() * unity_power(sigma as i64, opts.trace_sign.apply(t), pp);
                }
            }
            w[(r, c)] = constant * s;
        }
    }

    Representation::from_images(label, pp, u_images, d_images, w)
}

/// The decomposition of `R_n(sigma)` at `k = n`.
///
/// For `n = 2` returns `[trivial, R'_2(chi_{+1}, sigma), R_2(chi_{-1},
/// sigma)]`: the trivial line spanned by `sum_i (ip, 0)`, its invariant
/// complement in the even subspace, and the odd subspace. For `n = 3`
/// returns the two new irreducibles `R_3(chi_{+-1}, sigma)_1` in the
/// `B_0 union B_1` basis (the embedded copy of `R_1(sigma)` removed).
pub fn k_equals_n_split(
    pp: PrimePower,
    sigma: u64,
    sigma_idx: u8,
    opts: RepBuildOptions,
) -> Result<Vec<Representation>, RepError> {
    let m = pp.modulus();
    let p = pp.p();
    let half = |x: f64| Complex64::new(x, 0.0);
    let nq_label = |eps: i8| RepLabel::NonQuotient {
        k: pp.n(),
        chi: ChiLabel::Eps(eps),
        delta_idx: 1,
        delta_prime: 1,
        sigma_idx,
        sigma,
    };
    match pp.n() {
        2 => {
            let s2 = half(1.0 / 2f64.sqrt());
            // trivial: sum over multiples of p, normalized
            let trivial: SparseVec = (0..p)
                .map(|i| ((i * p) as usize, half(1.0 / (p as f64).sqrt())))
                .collect();
            // chi = +1: unit sums + orthonormalized {2 e_0 - e_i - e_{-i}}
            let mut even: Vec<SparseVec> = Vec::new();
            for j in 1..=(m - 1) / 2 {
                if j % p != 0 {
                    even.push(vec![(j as usize, s2), ((m - j) as usize, s2)]);
                }
            }
            let raw_mult: Vec<SparseVec> = (1..=(p - 1) / 2)
                .map(|i| {
                    vec![
                        (0usize, half(2.0)),
                        ((i * p) as usize, half(-1.0)),
                        ((m - i * p) as usize, half(-1.0)),
                    ]
                })
                .collect();
            even.extend(orthonormalize_sparse(&raw_mult));
            // chi = -1: all differences
            let odd: Vec<SparseVec> = (1..=(m - 1) / 2)
                .map(|j| vec![(j as usize, s2), ((m - j) as usize, -s2)])
                .collect();
            Ok(vec![
                rep_from_sparse_basis(RepLabel::Trivial, pp, sigma, &[trivial], opts),
                rep_from_sparse_basis(nq_label(1), pp, sigma, &even, opts),
                rep_from_sparse_basis(nq_label(-1), pp, sigma, &odd, opts),
            ])
        }
        3 => {
            let s2 = half(1.0 / 2f64.sqrt());
            let p2 = p * p;
            let mut reps = Vec::new();
            for eps in [1i8, -1] {
                let sgn = half(eps as f64);
                let mut basis: Vec<SparseVec> = Vec::new();
                // B_0: unit symmetrizations
                for x in 1..=(m - 1) / 2 {
                    if x % p != 0 {
                        basis.push(vec![(x as usize, s2), ((m - x) as usize, sgn * s2)]);
                    }
                }
                // B_1 with k >= 1 (k = 0 spans the embedded R_1(sigma) copy)
                let mut b1: Vec<SparseVec> = Vec::new();
                for khat in 1..=(p - 1) / 2 {
                    for y in 0..p {
                        let mut v: Vec<(usize, Complex64)> = Vec::new();
                        for a in 0..p {
                            let zeta =
                                Complex64::from_polar(1.0, TAU * (khat * a % p) as f64 / p as f64);
                            let pt = (p * y + a * p2) % m;
                            v.push((pt as usize, zeta));
                            v.push((((m - pt) % m) as usize, sgn * zeta));
                        }
                        // merge duplicate points (y = 0 mirrors onto itself)
                        v.sort_by_key(|&(i, _)| i);
                        let mut merged: SparseVec = Vec::new();
                        for (i, c) in v {
                            match merged.last_mut() {
                                Some((li, lc)) if *li == i => *lc += c,
                                _ => merged.push((i, c)),
                            }
                        }
                        merged.retain(|(_, c)| c.norm() > 1e-12);
                        if !merged.is_empty() {
                            b1.push(merged);
                        }
                    }
                }
                basis.extend(orthonormalize_sparse(&b1));
                let expect = ((m - m / p2) / 2) as usize;
                debug_assert_eq!(basis.len(), expect, "k = n = 3 basis dimension");
                reps.push(rep_from_sparse_basis(
                    nq_label(eps),
                    pp,
                    sigma,
                    &basis,
                    opts,
                ));
            }
            Ok(reps)
        }
        n => Err(RepError::Unsupported(n)),
    }
}

/// The labeled inventory: non-quotient representations first (in the plot
/// ordering: `k = 0` blocks by `Delta` class with ascending character label,
/// then the `k = 1` blocks over `(Delta, sigma)`, then `k = n`), followed by
/// the quotient representations lifted from `SL2(Z/p^{n-1} Z)`.
pub struct Inventory {
    pub pp: PrimePower,
    entries: Vec<Representation>,
    nonquotient_count: usize,
}

impl Inventory {
    /// Complete inventory for `n <= 2`; partial spaces for `n = 3` (the
    /// `k in {1, 2}` subspaces at `sigma = sigma_1` over both `Delta`
    /// classes and characters `l in {1, 2}`, plus the `k = 3` split).
    pub fn build(pp: PrimePower, opts: RepBuildOptions) -> Result<Self, RepError> {
        match pp.n() {
            1 => {
                let base = baseline::sl2_irreps(pp, opts.baseline_seed)?;
                let entries = base
                    .iter()
                    .enumerate()
                    .map(|(i, b)| {
                        b.to_representation(RepLabel::Quotient {
                            base_index: i,
                            base_dim: b.dim,
                        })
                    })
                    .collect::<Vec<_>>();
                Ok(Self {
                    pp,
                    entries,
                    nonquotient_count: 0,
                })
            }
            2 => {
                let mut entries = Self::nonquotient_n2(pp, opts)?;
                let nonquotient_count = entries.len();
                let base_pp = PrimePower::new(pp.p(), 1).expect("p already validated");
                let base = baseline::sl2_irreps(base_pp, opts.baseline_seed)?;
                for (i, b) in base.iter().enumerate() {
                    entries.push(baseline::lift_base(
                        b,
                        pp,
                        RepLabel::Quotient {
                            base_index: i,
                            base_dim: b.dim,
                        },
                    )?);
                }
                Ok(Self {
                    pp,
                    entries,
                    nonquotient_count,
                })
            }
            3 => {
                let mut entries = Vec::new();
                let (d1, d2) = canonical_delta_primes(pp.p());
                let (s1, s2) = canonical_sigmas(pp.p());
                for k in [1u32, 2] {
                    for (di, dp) in [(1u8, d1), (2u8, d2)] {
                        let rp = RingParams::new(pp, k, dp)?;
                        let cg = CGroup::build(rp);
                        let orbits = OrbitData::compute(&rp, &cg);
                        for ell in [1u64, 2] {
                            let chi = if cg.is_cyclic() {
                                cg.character(ell)
                            } else {
                                cg.characters()
                                    .into_iter()
                                    .filter(|c| c.principal)
                                    .nth(ell as usize - 1)
                                    .expect("fewer than two principal characters")
                            };
                            if !chi.principal {
                                continue;
                            }
                            let label = RepLabel::NonQuotient {
                                k,
                                chi: ChiLabel::Ell(ell),
                                delta_idx: di,
                                delta_prime: dp,
                                sigma_idx: 1,
                                sigma: s1,
                            };
                            entries.push(restrict(&cg, &orbits, &chi, s1, label, opts)?);
                        }
                    }
                }
                for (si, s) in [(1u8, s1), (2u8, s2)] {
                    for rep in k_equals_n_split(pp, s, si, opts)? {
                        if !matches!(rep.label, RepLabel::Trivial) {
                            entries.push(rep);
                        }
                    }
                }
                let nonquotient_count = entries.len();
                Ok(Self {
                    pp,
                    entries,
                    nonquotient_count,
                })
            }
            n => Err(RepError::UnsupportedLevel(n)),
        }
    }

    fn nonquotient_n2(
        pp: PrimePower,
        opts: RepBuildOptions,
    ) -> Result<Vec<Representation>, RepError> {
        let p = pp.p();
        let (d1, d2) = canonical_delta_primes(p);
        let (s1, s2) = canonical_sigmas(p);
        let mut entries = Vec::new();

        // k = 0: sigma irrelevant for equivalence, fixed to sigma_1;
        // character classes {l, |C| - l} with representatives l < |C| / 2
        for (di, dp) in [(1u8, d1), (2u8, d2)] {
            let rp = RingParams::new(pp, 0, dp)?;
            let cg = CGroup::build(rp);
            let orbits = OrbitData::compute(&rp, &cg);
            let csize = cg.len() as u64;
            for ell in 1..csize.div_ceil(2) {
                if ell % p == 0 {
                    continue;
                }
                let chi = cg.character(ell);
                debug_assert!(chi.principal);
                let label = RepLabel::NonQuotient {
                    k: 0,
                    chi: ChiLabel::Ell(ell),
                    delta_idx: di,
                    delta_prime: dp,
                    sigma_idx: 1,
                    sigma: s1,
                };
                entries.push(restrict(&cg, &orbits, &chi, s1, label, opts)?);
            }
        }

        // k = 1: blocks (d1,s1), (d2,s1), (d1,s2), (d2,s2); l in (0, p)
        for (si, s) in [(1u8, s1), (2u8, s2)] {
            for (di, dp) in [(1u8, d1), (2u8, d2)] {
                let rp = RingParams::new(pp, 1, dp)?;
                let cg = CGroup::build(rp);
                let orbits = OrbitData::compute(&rp, &cg);
                for ell in 1..p {
                    let chi = cg.character(ell);
                    debug_assert!(chi.principal);
                    let label = RepLabel::NonQuotient {
                        k: 1,
                        chi: ChiLabel::Ell(ell),
                        delta_idx: di,
                        delta_prime: dp,
                        sigma_idx: si,
                        sigma: s,
                    };
                    entries.push(restrict(&cg, &orbits, &chi, s, label, opts)?);
                }
            }
        }
        // reorder the k = 1 blocks into (d1,s1), (d2,s1), (d1,s2), (d2,s2):
        // already emitted in that order by the loops above

        // k = 2 = n: (chi_{+1}, s1), (chi_{-1}, s1), (chi_{+1}, s2), (chi_{-1}, s2)
        for (si, s) in [(1u8, s1), (2u8, s2)] {
            for rep in k_equals_n_split(pp, s, si, opts)? {
                if !matches!(rep.label, RepLabel::Trivial) {
                    entries.push(rep);
                }
            }
        }
        Ok(entries)
    }

    /// Assemble an inventory from explicit parts (partial-space experiments
    /// and tests).
    pub fn from_parts(
        pp: PrimePower,
        entries: Vec<Representation>,
        nonquotient_count: usize,
    ) -> Self {
        assert!(nonquotient_count <= entries.len());
        Self {
            pp,
            entries,
            nonquotient_count,
        }
    }

    /// Copy of this inventory with the last entry removed, plus the removed
    /// entry (used to exercise completeness guards).
    pub fn without_last_entry(&self) -> (Self, &Representation) {
        let dropped = self.entries.last().expect("nonempty inventory");
        let kept: Vec<Representation> = self.entries[..self.entries.len() - 1]
            .iter()
            .map(Representation::shallow_clone)
            .collect();
        let nq = self.nonquotient_count.min(kept.len());
        (
            Self {
                pp: self.pp,
                entries: kept,
                nonquotient_count: nq,
            },
            dropped,
        )
    }

    pub fn entries(&self) -> &[Representation] {
        &self.entries
    }

    pub fn nonquotient(&self) -> &[Representation] {
        &self.entries[..self.nonquotient_count]
    }

    pub fn quotient(&self) -> &[Representation] {
        &self.entries[self.nonquotient_count..]
    }

    pub fn nonquotient_count(&self) -> usize {
        self.nonquotient_count
    }

    pub fn sum_dim_sq(&self) -> u128 {
        self.entries.iter().map(|r| (r.dim * r.dim) as u128).sum()
    }

    /// Whether the inventory spans the full group algebra.
    pub fn is_complete(&self) -> bool {
        self.sum_dim_sq() == group_order(self.pp)
    }
}

/// A character table: traces of the given representations at the class
/// representatives.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub class_reps: Vec<SL2Elem>,
    pub class_sizes: Vec<usize>,
    pub labels: Vec<RepLabel>,
    pub dims: Vec<usize>,
    /// `entries[row][col]`, rows indexed by classes
    pub entries: Vec<Vec<Complex64>>,
}

pub fn character_table(
    reps: &[&Representation],
    classes: &[crate::sl2group::ConjugacyClass],
) -> CharacterTable {
    let entries: Vec<Vec<Complex64>> = classes
        .iter()
        .map(|c| reps.iter().map(|r| r.trace_at(&c.representative)).collect())
        .collect();
    CharacterTable {
        class_reps: classes.iter().map(|c| c.representative).collect(),
        class_sizes: classes.iter().map(|c| c.size).collect(),
        labels: reps.iter().map(|r| r.label.clone()).collect(),
        dims: reps.iter().map(|r| r.dim).collect(),
        entries,
    }
}

impl CharacterTable {
    /// `<chi_i, chi_j> = (1/|G|) sum_K |K| chi_i(K) conj(chi_j(K))`.
    pub fn inner_product(&self, i: usize, j: usize) -> Complex64 {
        let order: f64 = self.class_sizes.iter().map(|&s| s as f64).sum();
        let mut s = Complex64::default();
        for (row, &size) in self.entries.iter().zip(self.class_sizes.iter()) {
            s += row[i] * row[j].conj() * size as f64;
        }
        s / order
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::max_distance;
    use crate::sl2group::random_element;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pp(p: u64, n: u32) -> PrimePower {
        PrimePower::new(p, n).unwrap()
    }

    fn build_rep(p: u64, n: u32, k: u32, dp: u64, sigma: u64, ell: u64) -> Representation {
        let rp = RingParams::new(pp(p, n), k, dp).unwrap();
        let cg = CGroup::build(rp);
        let orbits = OrbitData::compute(&rp, &cg);
        let chi = cg.character(ell);
        let label = RepLabel::NonQuotient {
            k,
            chi: ChiLabel::Ell(ell),
            delta_idx: 1,
            delta_prime: dp,
            sigma_idx: 1,
            sigma,
        };
        restrict(&cg, &orbits, &chi, sigma, label, RepBuildOptions::default()).unwrap()
    }

    #[test]
    fn big_action_identities() {
        let rp = RingParams::new(pp(3, 2), 0, 1).unwrap();
        let act = BigAction::new(rp, 1, RepBuildOptions::default()).unwrap();
        let id = CMat::identity(act.dim(), act.dim());
        assert!(max_distance(&act.d_matrix(1), &id) < 1e-12);
        assert!(max_distance(&act.u_matrix(0), &id) < 1e-12);
        // w^2 acts as d_{-1}
        let w = act.w_matrix();
        let w2 = &w * &w;
        assert!(max_distance(&w2, &act.d_matrix(8)) < 1e-9);
    }

    #[test]
    fn big_action_homomorphism() {
        let m9 = pp(3, 2);
        for k in [0u32, 1] {
            let rp = RingParams::new(m9, k, 1).unwrap();
            let act = BigAction::new(rp, 1, RepBuildOptions::default()).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            for _ in 0..4 {
                let a = random_element(m9, &mut rng);
                let b = random_element(m9, &mut rng);
                let lhs = act.evaluate(&a.mul(&b));
                let rhs = act.evaluate(&a) * act.evaluate(&b);
                assert!(max_distance(&lhs, &rhs) < 1e-9);
            }
        }
    }

    #[test]
    fn restricted_dimensions() {
        assert_eq!(build_rep(3, 2, 0, 1, 1, 1).dim, 6);
        assert_eq!(build_rep(3, 2, 1, 1, 1, 1).dim, 4);
        assert_eq!(build_rep(5, 2, 1, 1, 1, 1).dim, 12);
    }

    #[test]
    fn evaluate_is_identity_at_identity() {
        let r = build_rep(3, 2, 0, 1, 1, 1);
        let id = SL2Elem::identity(pp(3, 2));
        assert!(max_distance(&r.evaluate(&id), &CMat::identity(r.dim, r.dim)) < 1e-10);
    }

    #[test]
    fn evaluate_homomorphism_and_unitarity() {
        let m9 = pp(3, 2);
        for rep in [
            build_rep(3, 2, 0, 1, 1, 1),
            build_rep(3, 2, 0, 2, 1, 1),
            build_rep(3, 2, 1, 2, 2, 2),
        ] {
            let mut rng = ChaCha8Rng::seed_from_u64(17);
            for _ in 0..20 {
                let a = random_element(m9, &mut rng);
                let b = random_element(m9, &mut rng);
                let lhs = rep.evaluate(&a.mul(&b));
                let rhs = rep.evaluate(&a) * rep.evaluate(&b);
                assert!(max_distance(&lhs, &rhs) < 1e-9);
                let u = rep.evaluate(&a);
                let gram = &u * u.adjoint();
                assert!(max_distance(&gram, &CMat::identity(rep.dim, rep.dim)) < 1e-9);
            }
        }
    }

    #[test]
    fn k_equals_n_dimensions_and_trivial_vector() {
        let m9 = pp(3, 2);
        let reps = k_equals_n_split(m9, 1, 1, RepBuildOptions::default()).unwrap();
        assert_eq!(reps.len(), 3);
        assert!(matches!(reps[0].label, RepLabel::Trivial));
        assert_eq!(reps[0].dim, 1);
        assert_eq!(reps[1].dim, 4);
        assert_eq!(reps[2].dim, 4);
        // the trivial line really is fixed by all three generator actions
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..10 {
            let g = random_element(m9, &mut rng);
            let v = reps[0].evaluate(&g);
            assert!((v[(0, 0)] - Complex64::new(1.0, 0.0)).norm() < 1e-9);
        }
        // p = 5 dims (25 - 1) / 2 = 12
        let m25 = pp(5, 2);
        let reps5 = k_equals_n_split(m25, 1, 1, RepBuildOptions::default()).unwrap();
        assert_eq!(reps5[1].dim, 12);
        assert_eq!(reps5[2].dim, 12);
        assert!(k_equals_n_split(pp(3, 2), 1, 1, RepBuildOptions::default()).is_ok());
    }

    #[test]
    fn k_equals_n_central_signs() {
        // -I acts as +1 on the chi_{+1} piece and -1 on the chi_{-1} piece
        let m9 = pp(3, 2);
        let neg_id = SL2Elem::identity(m9).neg();
        let reps = k_equals_n_split(m9, 1, 1, RepBuildOptions::default()).unwrap();
        let t1 = reps[1].trace_at(&neg_id);
        let t2 = reps[2].trace_at(&neg_id);
        assert!((t1 - Complex64::new(4.0, 0.0)).norm() < 1e-9);
        assert!((t2 - Complex64::new(-4.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn k_equals_n_homomorphism_n3() {
        let m125 = pp(5, 3);
        let reps = k_equals_n_split(m125, 1, 1, RepBuildOptions::default()).unwrap();
        assert_eq!(reps.len(), 2);
        assert_eq!(reps[0].dim, 60);
        assert_eq!(reps[1].dim, 60);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for rep in &reps {
            for _ in 0..5 {
                let a = random_element(m125, &mut rng);
                let b = random_element(m125, &mut rng);
                let lhs = rep.evaluate(&a.mul(&b));
                let rhs = rep.evaluate(&a) * rep.evaluate(&b);
                assert!(max_distance(&lhs, &rhs) < 1e-9);
            }
        }
        assert!(matches!(
            k_equals_n_split(pp(3, 4), 1, 1, RepBuildOptions::default()),
            Err(RepError::Unsupported(4))
        ));
    }

    /// The convention switches: at n = 2 the Gauss-sum and alternating
    /// readings agree and give a homomorphism, while "-1" breaks it; the
    /// positive trace sign also breaks it at p = 5.
    #[test]
    fn convention_selection() {
        let m25 = pp(5, 2);
        let rp = RingParams::new(m25, 0, 1).unwrap();
        let cg = CGroup::build(rp);
        let orbits = OrbitData::compute(&rp, &cg);
        let chi = cg.character(1);
        let label = RepLabel::NonQuotient {
            k: 0,
            chi: ChiLabel::Ell(1),
            delta_idx: 2,
            delta_prime: 1,
            sigma_idx: 1,
            sigma: 1,
        };
        let residual = |opts: RepBuildOptions| {
            let rep = restrict(&cg, &orbits, &chi, 1, label.clone(), opts).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(23);
            let mut worst = 0f64;
            // the lower-unipotent pair mixes the two Bruhat cells (one Weyl
            // factor each, one in the product), so it pins the Weyl sign
            let l1 = SL2Elem::new(1, 0, 1, 1, m25).unwrap();
            let mut pairs = vec![(l1, l1)];
            for _ in 0..4 {
                pairs.push((random_element(m25, &mut rng), random_element(m25, &mut rng)));
            }
            for (a, b) in pairs {
                let lhs = rep.evaluate(&a.mul(&b));
                let rhs = rep.evaluate(&a) * rep.evaluate(&b);
                worst = worst.max(max_distance(&lhs, &rhs));
            }
            worst
        };
        let good = RepBuildOptions::default();
        assert!(residual(good) < 1e-9);
        let alternating = RepBuildOptions {
            weyl_convention: WeylConstantConvention::PaperAlternating,
            ..good
        };
        assert!(
            residual(alternating) < 1e-9,
            "agrees with GaussSum at n = 2"
        );
        let minus_one = RepBuildOptions {
            weyl_convention: WeylConstantConvention::PaperMinusOne,
            ..good
        };
        assert!(
            residual(minus_one) > 1e-3,
            "k even sign -1 breaks the action"
        );
        let positive = RepBuildOptions {
            trace_sign: TraceSign::Positive,
            ..good
        };
        assert!(
            residual(positive) > 1e-3,
            "positive trace sign breaks the action"
        );
    }

    /// At p = 5, n = 3, k = 2 (even k, odd n, p = 1 mod 4) the Gauss-sum
    /// value e = +1 keeps the homomorphism; the alternating reading does not.
    #[test]
    fn convention_selection_n3() {
        let m125 = pp(5, 3);
        let rp = RingParams::new(m125, 2, 1).unwrap();
        let cg = CGroup::build(rp);
        let orbits = OrbitData::compute(&rp, &cg);
        let chi = cg.character(2);
        assert!(chi.principal);
        let label = RepLabel::NonQuotient {
            k: 2,
            chi: ChiLabel::Ell(2),
            delta_idx: 2,
            delta_prime: 1,
            sigma_idx: 1,
            sigma: 1,
        };
        let residual = |opts: RepBuildOptions| {
            let rep = restrict(&cg, &orbits, &chi, 1, label.clone(), opts).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(31);
            let mut worst = 0f64;
            let l1 = SL2Elem::new(1, 0, 1, 1, m125).unwrap();
            let mut pairs = vec![(l1, l1)];
            for _ in 0..3 {
                pairs.push((
                    random_element(m125, &mut rng),
                    random_element(m125, &mut rng),
                ));
            }
            for (a, b) in pairs {
                worst = worst.max(max_distance(
                    &rep.evaluate(&a.mul(&b)),
                    &(rep.evaluate(&a) * rep.evaluate(&b)),
                ));
            }
            worst
        };
        assert!(residual(RepBuildOptions::default()) < 1e-9);
        let alternating = RepBuildOptions {
            weyl_convention: WeylConstantConvention::PaperAlternating,
            ..RepBuildOptions::default()
        };
        assert!(residual(alternating) > 1e-3);
    }

    #[test]
    fn inventory_counts() {
        let inv3 = Inventory::build(pp(3, 2), RepBuildOptions::default()).unwrap();
        assert_eq!(inv3.nonquotient_count(), 18);
        let dims: Vec<usize> = inv3.nonquotient().iter().map(|r| r.dim).collect();
        assert_eq!(
            dims,
            vec![6, 6, 6, 6, 12, 12, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4]
        );
        assert_eq!(inv3.quotient().len(), 7);
        assert!(inv3.is_complete());
        assert_eq!(inv3.sum_dim_sq(), 648);
    }

    #[test]
    fn inventory_ordering_p5() {
        // Appendix ordering: k = 0 Delta_1 block carries character labels
        // 1,2,3,4,6,7,8,9,11,12,13,14 (multiples of 5 skipped)
        let inv5 = Inventory::build(pp(5, 2), RepBuildOptions::default()).unwrap();
        assert_eq!(inv5.nonquotient_count(), 40);
        let first: Vec<(u32, u64, u8)> = inv5.nonquotient()[..12]
            .iter()
            .map(|r| match &r.label {
                RepLabel::NonQuotient {
                    k,
                    chi: ChiLabel::Ell(l),
                    delta_idx,
                    ..
                } => (*k, *l, *delta_idx),
                _ => panic!("unexpected label"),
            })
            .collect();
        let want: Vec<(u32, u64, u8)> = [1u64, 2, 3, 4, 6, 7, 8, 9, 11, 12, 13, 14]
            .iter()
            .map(|&l| (0u32, l, 1u8))
            .collect();
        assert_eq!(first, want);
        // last four: k = 2 with (chi, sigma) = (+1,1), (-1,1), (+1,2), (-1,2)
        let tail: Vec<(u32, i8, u8)> = inv5.nonquotient()[36..]
            .iter()
            .map(|r| match &r.label {
                RepLabel::NonQuotient {
                    k,
                    chi: ChiLabel::Eps(e),
                    sigma_idx,
                    ..
                } => (*k, *e, *sigma_idx),
                _ => panic!("unexpected label"),
            })
            .collect();
        assert_eq!(tail, vec![(2, 1, 1), (2, -1, 1), (2, 1, 2), (2, -1, 2)]);
        assert!(inv5.is_complete());
    }

    #[test]
    fn character_trace_example() {
        // trace at [[8,0],[0,8]] of R_0(chi_2, Delta_1 = 1, sigma_1) is +6
        let inv = Inventory::build(pp(3, 2), RepBuildOptions::default()).unwrap();
        let rep = &inv.nonquotient()[1]; // k = 0, ell = 2, delta_idx = 1
        match &rep.label {
            RepLabel::NonQuotient {
                k: 0,
                chi: ChiLabel::Ell(2),
                delta_idx: 1,
                ..
            } => {}
            other => panic!("unexpected label {other:?}"),
        }
        let m9 = pp(3, 2);
        let neg_id = SL2Elem::identity(m9).neg();
        let t = rep.trace_at(&neg_id);
        assert!((t - Complex64::new(6.0, 0.0)).norm() < 1e-9);
        let first = &inv.nonquotient()[0];
        assert!((first.trace_at(&neg_id) - Complex64::new(-6.0, 0.0)).norm() < 1e-9);
    }

    /// Theorem-level equivalence: conjugate character labels give equal
    /// character vectors; distinct classes give distinct ones.
    #[test]
    fn equivalence_classification() {
        let m9 = pp(3, 2);
        let classes = crate::sl2group::conjugacy_classes(m9).unwrap();
        let rp = RingParams::new(m9, 0, 1).unwrap();
        let cg = CGroup::build(rp);
        let orbits = OrbitData::compute(&rp, &cg);
        let opts = RepBuildOptions::default();
        let label = |l: u64| RepLabel::NonQuotient {
            k: 0,
            chi: ChiLabel::Ell(l),
            delta_idx: 1,
            delta_prime: 1,
            sigma_idx: 1,
            sigma: 1,
        };
        // chi_1 and chi_11 = chi_1^{-1} are equivalent; chi_1 and chi_2 are not
        let r1 = restrict(&cg, &orbits, &cg.character(1), 1, label(1), opts).unwrap();
        let r11 = restrict(&cg, &orbits, &cg.character(11), 1, label(11), opts).unwrap();
        let r2 = restrict(&cg, &orbits, &cg.character(2), 1, label(2), opts).unwrap();
        // also sigma does not matter at k = 0
        let r1s2 = restrict(&cg, &orbits, &cg.character(1), 2, label(1), opts).unwrap();
        let chars = |r: &Representation| -> Vec<Complex64> {
            classes
                .iter()
                .map(|c| r.trace_at(&c.representative))
                .collect()
        };
        let (c1, c11, c2, c1s2) = (chars(&r1), chars(&r11), chars(&r2), chars(&r1s2));
        let close =
            |a: &[Complex64], b: &[Complex64]| a.iter().zip(b).all(|(x, y)| (x - y).norm() < 1e-8);
        assert!(close(&c1, &c11));
        assert!(close(&c1, &c1s2));
        assert!(!close(&c1, &c2));
    }
}
