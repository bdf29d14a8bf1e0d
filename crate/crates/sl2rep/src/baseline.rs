//! Generic numerical construction of all irreducible representations of a
//! small finite group from its multiplication table, used for the quotient
//! representations (base case `SL2(Z/p Z)`).
//!
//! The character table comes from simultaneous eigenvectors of the class-sum
//! matrices: a random real combination, made normal by a diagonal
//! similarity, diagonalized through its commuting Hermitian and
//! anti-Hermitian parts. The regular representation is then split by a
//! random group-averaged rank-one Hermitian operator whose eigenspaces are
//! single irreducible copies; copies are matched to character rows and one
//! representative per irreducible is kept. Randomized steps are seeded and
//! retried with fresh seeds on numerical failure.

use crate::linalg::{cluster_sorted, hermitian_eigen, CMat, CVec};
use crate::modarith::PrimePower;
use crate::repbuilder::{GenMat, RepLabel, Representation};
use crate::sl2group::{enumerate, GroupError, SL2Elem};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BaselineError {
    #[error("group order {0} exceeds the baseline guard {MAX_BASELINE_ORDER}")]
    TooLarge(usize),
    #[error("numerical failure after {0} reseeded attempts")]
    NumericalFailure(u32),
    #[error(transparent)]
    Group(#[from] GroupError),
}

pub const MAX_BASELINE_ORDER: usize = 2000;
const MAX_RETRIES: u32 = 5;

/// A finite group given by index-based multiplication tables.
pub struct GroupTable {
    pub order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    pub identity: usize,
    pub classes: Vec<Vec<u32>>,
    pub class_of: Vec<u32>,
}

impl GroupTable {
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Build from an element list and a multiplication closure.
    pub fn from_elements<T, F>(elems: &[T], mul_fn: F) -> Result<Self, BaselineError>
    where
        T: std::hash::Hash + Eq + Clone,
        F: Fn(&T, &T) -> T,
    {
        let order = elems.len();
        if order > MAX_BASELINE_ORDER {
            return Err(BaselineError::TooLarge(order));
        }
        let index: HashMap<&T, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut mul = vec![0u32; order * order];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                mul[i * order + j] = index[&mul_fn(a, b)] as u32;
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul[e * order + x] as usize == x))
            .expect("no identity element");
        let mut inv = vec![0u32; order];
        for a in 0..order {
            inv[a] = (0..order)
                .find(|&b| mul[a * order + b] as usize == identity)
                .expect("missing inverse") as u32;
        }
        if order > 1 {
            // associativity spot check
            for (x, y, z) in [(1usize, order / 2, order - 1), (order - 1, 1, order / 2)] {
                let lhs = mul[mul[x * order + y] as usize * order + z];
                let rhs = mul[x * order + mul[y * order + z] as usize];
                debug_assert_eq!(lhs, rhs, "multiplication table not associative");
            }
        }
        let mut class_of = vec![u32::MAX; order];
        let mut classes = Vec::new();
        for x in 0..order {
            if class_of[x] != u32::MAX {
                continue;
            }
            let cid = classes.len() as u32;
            let mut members = Vec::new();
            for g in 0..order {
                let y = mul[mul[g * order + x] as usize * order + inv[g] as usize] as usize;
                if class_of[y] == u32::MAX {
                    class_of[y] = cid;
                    members.push(y as u32);
                }
            }
            classes.push(members);
        }
        Ok(Self {
            order,
            mul,
            inv,
            identity,
            classes,
            class_of,
        })
    }

    pub fn sl2(pp: PrimePower) -> Result<Self, BaselineError> {
        let elems: Vec<SL2Elem> = enumerate(pp)?.collect();
        Self::from_elements(&elems, |a, b| a.mul(b))
    }

    /// Apply the left-regular permutation of element `g` to a vector.
    fn permute(&self, g: usize, v: &CVec) -> CVec {
        let mut out = CVec::zeros(self.order);
        for x in 0..self.order {
            out[self.mul(g, x)] = v[x];
        }
        out
    }
}

/// One numerically constructed irreducible: unitary matrices for every group
/// element, in the index order of the defining `GroupTable`.
pub struct BaseIrrep {
    pub dim: usize,
    /// character value per conjugacy class
    pub character: Vec<Complex64>,
    pub matrices: Vec<CMat>,
}

/// Character table of the group via class-sum matrices. Returns one row per
/// class (rows ordered by ascending dimension then rounded values); entries
/// indexed by class id.
fn class_sum_characters(gt: &GroupTable, seed: u64) -> Result<Vec<Vec<Complex64>>, BaselineError> {
    let h = gt.class_count();
    let sizes: Vec<f64> = gt.classes.iter().map(|c| c.len() as f64).collect();
    let id_class = gt.class_of[gt.identity] as usize;

    // a[i][j][k]: for a fixed z in K_k, #{x in K_i : x^{-1} z in K_j}
    let mut a = vec![0f64; h * h * h];
    for k in 0..h {
        let z = gt.classes[k][0] as usize;
        for x in 0..gt.order {
            let i = gt.class_of[x] as usize;
            let j = gt.class_of[gt.mul(gt.inv(x), z)] as usize;
            a[(i * h + j) * h + k] += 1.0;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t: Vec<f64> = (0..h).map(|_| rng.random::<f64>()).collect();
    // N_jk = sum_i t_i a_{ijk} sqrt(|K_k| / |K_j|): normal matrix whose
    // eigenvectors, rescaled by sqrt(|K_j|), are the character rows
    let mut nmat = CMat::zeros(h, h);
    for i in 0..h {
        for j in 0..h {
            for k in 0..h {
                nmat[(j, k)] += Complex64::new(
                    t[i] * a[(i * h + j) * h + k] * (sizes[k] / sizes[j]).sqrt(),
                    0.0,
                );
            }
        }
    }
    let herm = (&nmat + nmat.adjoint()) * Complex64::new(0.5, 0.0);
    let anti = (&nmat - nmat.adjoint()) * Complex64::new(0.0, -0.5);
    let (vals, vecs) = hermitian_eigen(&herm);
    let scale = vals.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let clusters = cluster_sorted(&vals, 1e-8 * scale);
    let mut columns: Vec<CVec> = Vec::new();
    for cl in clusters {
        if cl.len() == 1 {
            columns.push(vecs.column(cl.start).into_owned());
            continue;
        }
        // split the degenerate block with the commuting anti-Hermitian part
        let block = CMat::from_columns(
            &cl.clone()
                .map(|i| vecs.column(i).into_owned())
                .collect::<Vec<_>>(),
        );
        let sub = block.adjoint() * &anti * &block;
        let (svals, svecs) = hermitian_eigen(&sub);
        let sscale = svals.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        if cluster_sorted(&svals, 1e-8 * sscale).len() != cl.len() {
            return Err(BaselineError::NumericalFailure(0));
        }
        let lifted = &block * svecs;
        for c in 0..cl.len() {
            columns.push(lifted.column(c).into_owned());
        }
    }
    if columns.len() != h {
        return Err(BaselineError::NumericalFailure(0));
    }

    let order = gt.order as f64;
    let mut chars: Vec<Vec<Complex64>> = Vec::new();
    for w in columns {
        // rotate so the identity-class entry is real positive, scale so
        // <chi, chi> = 1
        let wid = w[id_class];
        if wid.norm() < 1e-10 {
            return Err(BaselineError::NumericalFailure(0));
        }
        let phase = wid.conj() / wid.norm();
        let chi: Vec<Complex64> = (0..h)
            .map(|j| w[j] * phase * order.sqrt() / sizes[j].sqrt())
            .collect();
        let dim = chi[id_class].re;
        if (dim - dim.round()).abs() > 1e-6 || dim.round() < 1.0 {
            return Err(BaselineError::NumericalFailure(0));
        }
        chars.push(chi);
    }
    let total: f64 = chars.iter().map(|c| c[id_class].re.round().powi(2)).sum();
    if (total - order).abs() > 1e-6 {
        return Err(BaselineError::NumericalFailure(0));
    }
    Ok(chars)
}

/// All irreducible representations of the group described by `gt`.
/// Deterministic given the seed; reseeds itself up to five times if an
/// eigenvalue collision spoils a split.
pub fn generic_irreps(gt: &GroupTable, seed: u64) -> Result<Vec<BaseIrrep>, BaselineError> {
    let mut attempt_seed = seed;
    let mut last_err = BaselineError::NumericalFailure(MAX_RETRIES);
    for _ in 0..MAX_RETRIES {
        match generic_irreps_attempt(gt, attempt_seed) {
            Ok(irreps) => return Ok(irreps),
            Err(e @ BaselineError::TooLarge(_)) => return Err(e),
            Err(e) => {
                last_err = e;
                attempt_seed = attempt_seed
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(97);
            }
        }
    }
    Err(last_err)
}

fn generic_irreps_attempt(gt: &GroupTable, seed: u64) -> Result<Vec<BaseIrrep>, BaselineError> {
    let n = gt.order;
    let h = gt.class_count();
    let chars = class_sum_characters(gt, seed)?;

    // random group-averaged rank-one Hermitian: H = 1/|G| sum_g (P_g v)(P_g v)^*
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let v = CVec::from_iterator(
        n,
        (0..n).map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)),
    );
    let mut hmat = CMat::zeros(n, n);
    for g in 0..n {
        let w = gt.permute(g, &v);
        crate::linalg::accumulate_outer(&mut hmat, &w);
    }
    hmat /= Complex64::new(n as f64, 0.0);

    let (vals, vecs) = hermitian_eigen(&hmat);
    let scale = vals.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    let clusters = cluster_sorted(&vals, 1e-9 * scale.max(1e-12));

    // each cluster spans one irreducible copy; identify it by its character
    let mut found: Vec<Option<BaseIrrep>> = (0..h).map(|_| None).collect();
    for cl in clusters {
        let dim = cl.len();
        let q = CMat::from_columns(
            &cl.clone()
                .map(|i| vecs.column(i).into_owned())
                .collect::<Vec<_>>(),
        );
        // character of the copy
        let mut chi = vec![Complex64::default(); h];
        for (k, class) in gt.classes.iter().enumerate() {
            let g = class[0] as usize;
            // trace(Q^* P_g Q) without materializing P_g
            let mut tr = Complex64::default();
            for c in 0..dim {
                let col = q.column(c).into_owned();
                let pg = gt.permute(g, &col);
                tr += q.column(c).dotc(&pg);
            }
            chi[k] = tr;
        }
        let row = chars
            .iter()
            .position(|r| r.iter().zip(chi.iter()).all(|(a, b)| (a - b).norm() < 1e-6));
        let Some(row) = row else {
            return Err(BaselineError::NumericalFailure(0));
        };
        if chars[row][gt.class_of[gt.identity] as usize].re.round() as usize != dim {
            return Err(BaselineError::NumericalFailure(0));
        }
        if found[row].is_none() {
            // materialize matrices for every group element
            let matrices: Vec<CMat> = (0..n)
                .map(|g| {
                    let cols: Vec<CVec> = (0..dim)
                        .map(|c| gt.permute(g, &q.column(c).into_owned()))
                        .collect();
                    let pgq = CMat::from_columns(&cols);
                    q.adjoint() * pgq
                })
                .collect();
            found[row] = Some(BaseIrrep {
                dim,
                character: chars[row].clone(),
                matrices,
            });
        }
    }
    let mut irreps: Vec<BaseIrrep> = Vec::with_capacity(h);
    for slot in found {
        match slot {
            Some(ir) => irreps.push(ir),
            None => return Err(BaselineError::NumericalFailure(0)),
        }
    }
    // completeness and homomorphism spot checks
    let total: usize = irreps.iter().map(|r| r.dim * r.dim).sum();
    if total != n {
        return Err(BaselineError::NumericalFailure(0));
    }
    let mut rng2 = ChaCha8Rng::seed_from_u64(seed.wrapping_add(2));
    for ir in &irreps {
        for _ in 0..3 {
            let a = rng2.random_range(0..n);
            let b = rng2.random_range(0..n);
            let prod = &ir.matrices[a] * &ir.matrices[b];
            let direct = &ir.matrices[gt.mul(a, b)];
            if crate::linalg::max_distance(&prod, direct) > 1e-8 {
                return Err(BaselineError::NumericalFailure(0));
            }
        }
    }
    // deterministic order: ascending dimension, then rounded characters
    let mut order_idx: Vec<usize> = (0..irreps.len()).collect();
    let keys: Vec<(usize, Vec<(i64, i64)>)> = irreps
        .iter()
        .map(|r| {
            (
                r.dim,
                r.character
                    .iter()
                    .map(|z| ((z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64))
                    .collect(),
            )
        })
        .collect();
    order_idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut sorted = Vec::with_capacity(irreps.len());
    for i in order_idx {
        sorted.push(BaseIrrep {
            dim: irreps[i].dim,
            character: irreps[i].character.clone(),
            matrices: std::mem::take(&mut irreps[i].matrices),
        });
    }
    Ok(sorted)
}

/// A baseline irreducible of `SL2(Z/p^n Z)` bound to its element indexing.
pub struct Sl2BaseIrrep {
    pub pp: PrimePower,
    pub dim: usize,
    pub character: Vec<Complex64>,
    /// class representative per character entry
    pub class_reps: Vec<SL2Elem>,
    matrices: Vec<CMat>,
    index: HashMap<u64, u32>,
}

impl Sl2BaseIrrep {
    pub fn matrix_for(&self, e: &SL2Elem) -> &CMat {
        &self.matrices[self.index[&e.key()] as usize]
    }

    /// Package as a [`Representation`] over the same group.
    pub fn to_representation(&self, label: RepLabel) -> Representation {
        build_rep_from_eval(label, self.pp, |e| self.matrix_for(e).clone())
    }
}

/// All irreducibles of `SL2(Z/p^n Z)` at desk scale (`|G| <= 2000`).
pub fn sl2_irreps(pp: PrimePower, seed: u64) -> Result<Vec<Sl2BaseIrrep>, BaselineError> {
    let elems: Vec<SL2Elem> = enumerate(pp)?.collect();
    let gt = GroupTable::from_elements(&elems, |a, b| a.mul(b))?;
    let irreps = generic_irreps(&gt, seed)?;
    let index: HashMap<u64, u32> = elems
        .iter()
        .enumerate()
        .map(|(i, e)| (e.key(), i as u32))
        .collect();
    let class_reps: Vec<SL2Elem> = gt.classes.iter().map(|c| elems[c[0] as usize]).collect();
    Ok(irreps
        .into_iter()
        .map(|ir| Sl2BaseIrrep {
            pp,
            dim: ir.dim,
            character: ir.character,
            class_reps: class_reps.clone(),
            matrices: ir.matrices,
            index: index.clone(),
        })
        .collect())
}

/// Lift a representation of `SL2(Z/p^{n-1} Z)` along the entrywise reduction
/// map: the lift evaluates as `rho(pi(x))`.
pub fn lift_base(
    base: &Sl2BaseIrrep,
    to: PrimePower,
    label: RepLabel,
) -> Result<Representation, BaselineError> {
    // validate moduli compatibility through a probe projection
    SL2Elem::identity(to).project(base.pp)?;
    let base_pp = base.pp;
    Ok(build_rep_from_eval(label, to, |e| {
        base.matrix_for(&e.project(base_pp).expect("validated above"))
            .clone()
    }))
}

/// Lift any representation along the reduction map (general `n-1 -> n`).
pub fn lift_representation(
    base: &Representation,
    to: PrimePower,
    label: RepLabel,
) -> Result<Representation, BaselineError> {
    SL2Elem::identity(to).project(base.pp())?;
    let base_pp = base.pp();
    Ok(build_rep_from_eval(label, to, |e| {
        base.evaluate(&e.project(base_pp).expect("validated above"))
    }))
}

/// Assemble a [`Representation`] over `pp` from an evaluator on generator
/// elements.
fn build_rep_from_eval<F>(label: RepLabel, pp: PrimePower, eval: F) -> Representation
where
    F: Fn(&SL2Elem) -> CMat,
{
    let m = pp.modulus();
    let u_images: Vec<GenMat> = (0..m)
        .map(|b| GenMat::Dense(eval(&SL2Elem::unipotent(b as i64, pp))))
        .collect();
    let d_images: Vec<Option<GenMat>> = (0..m)
        .map(|a| {
            if pp.is_unit(a) {
                Some(GenMat::Dense(eval(&SL2Elem::diag(a as i64, pp).unwrap())))
            } else {
                None
            }
        })
        .collect();
    let w = eval(&SL2Elem::weyl(pp));
    Representation::from_images(label, pp, u_images, d_images, w)
}
