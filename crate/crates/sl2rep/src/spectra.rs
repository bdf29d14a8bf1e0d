//! Eigenvalue experiments: per-representation Cayley spectra, Wedderburn
//! union checks, lambda_1 tables, monochromatic classification, the Schreier
//! graph on the projective line `G/B`, and random-generator sweeps.

use crate::fourier::delta_set_transform;
use crate::linalg::{self, cluster_sorted, general_eigenvalues_doubled, hermitian_deviation, CMat};
use crate::modarith::PrimePower;
use crate::repbuilder::{Inventory, RepBuildOptions, RepError, RepLabel};
use crate::sl2group::{
    group_order, random_generator_pair, standard_generators, GenSetName, GeneratingSet, GroupError,
    GroupIndex,
};
use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpectraError {
    #[error(
        "spectrum has imaginary residual {max_imag:e} above the tolerance {tol:e} \
         (is the generating set symmetric?)"
    )]
    NonRealSpectrum { max_imag: f64, tol: f64 },
    #[error("adjacency oracle limited to |G| <= {guard}, got {order}")]
    TooLarge { order: u128, guard: u128 },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// Default tolerance on imaginary residuals of eigenvalues.
pub const IMAG_TOL: f64 = 1e-8;

/// Default clustering tolerance for monochromatic classification; well above
/// eigensolver noise at desk scale, well below observed spectral gaps.
pub const MONO_TOL: f64 = 1e-6;

/// Un-normalized Ramanujan reference for degree-`d` graphs: `2 sqrt(d-1)`.
pub fn ramanujan_bound(degree: usize) -> f64 {
    2.0 * ((degree - 1) as f64).sqrt()
}

/// Eigenvalues of a matrix whose spectrum is expected real, sorted
/// descending. Hermitian matrices take the symmetric path; anything else is
/// solved generally and rejected if an imaginary part survives above `tol`.
pub fn eigenvalues(m: &CMat, tol: f64) -> Result<Vec<f64>, SpectraError> {
    let scale = m.iter().map(|z| z.norm()).fold(1.0f64, f64::max);
    if hermitian_deviation(m) <= tol * scale {
        return Ok(linalg::hermitian_eigenvalues(m));
    }
    let doubled = general_eigenvalues_doubled(m);
    let max_imag = doubled.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if max_imag > tol * scale {
        return Err(SpectraError::NonRealSpectrum {
            max_imag,
            tol: tol * scale,
        });
    }
    // spectrum appears twice (once conjugated); keep every other value
    let mut reals: Vec<f64> = doubled.iter().map(|z| z.re).collect();
    reals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(reals.into_iter().step_by(2).collect())
}

/// Spectrum of one representation under `delta_S^`.
#[derive(Debug, Clone, Serialize)]
pub struct RepSpectrum {
    /// 1-based index in the inventory ordering (the plot index for
    /// non-quotient entries)
    pub rep_index: usize,
    pub label: RepLabel,
    pub dim: usize,
    pub quotient: bool,
    /// descending
    pub eigenvalues: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub p: u64,
    pub n: u32,
    pub set_name: String,
    pub degree: usize,
    pub normalized: bool,
    /// inventory spans the whole group algebra
    pub complete: bool,
    pub per_rep: Vec<RepSpectrum>,
    /// largest eigenvalue of the union (equals the degree when complete)
    pub leading: f64,
    /// second largest of the union for complete inventories; the plain
    /// maximum over the computed subspaces otherwise (a lower bound)
    pub lambda1: f64,
    pub lower_bound: bool,
    /// un-normalized Ramanujan reference `2 sqrt(degree - 1)`
    pub ramanujan: f64,
}

impl SpectrumReport {
    /// Union of per-representation spectra, each value with multiplicity
    /// `dim`, sorted descending.
    pub fn union_with_multiplicity(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for rs in &self.per_rep {
            for &v in &rs.eigenvalues {
                for _ in 0..rs.dim {
                    out.push(v);
                }
            }
        }
        out.sort_by(|a, b| b.partial_cmp(a).unwrap());
        out
    }
}

/// Per-representation spectra of `delta_S^` over the inventory.
pub fn cayley_spectrum(
    s: &GeneratingSet,
    inventory: &Inventory,
    imag_tol: f64,
) -> Result<SpectrumReport, SpectraError> {
    let (dt, _) = delta_set_transform(s, inventory);
    let spectra: Result<Vec<Vec<f64>>, SpectraError> = dt
        .matrices
        .par_iter()
        .map(|m| eigenvalues(m, imag_tol))
        .collect();
    let spectra = spectra?;
    let nq = inventory.nonquotient_count();
    let per_rep: Vec<RepSpectrum> = inventory
        .entries()
        .iter()
        .zip(spectra)
        .enumerate()
        .map(|(i, (rep, eigenvalues))| RepSpectrum {
            rep_index: i + 1,
            label: rep.label.clone(),
            dim: rep.dim,
            quotient: i >= nq,
            eigenvalues,
        })
        .collect();
    let complete = inventory.is_complete();
    let degree = s.degree();
    let mut union: Vec<f64> = per_rep
        .iter()
        .flat_map(|r| r.eigenvalues.iter().copied())
        .collect();
    union.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let leading = union.first().copied().unwrap_or(0.0);
    let lambda1 = if complete {
        // drop exactly one copy of the leading (trivial-representation)
        // value; multiplicities make the next entry of the weighted union
        // the right choice
        let weighted = {
            let mut w = Vec::new();
            for r in &per_rep {
                for &v in &r.eigenvalues {
                    for _ in 0..r.dim {
                        w.push(v);
                    }
                }
            }
            w.sort_by(|a, b| b.partial_cmp(a).unwrap());
            w
        };
        weighted.get(1).copied().unwrap_or(leading)
    } else {
        leading
    };
    Ok(SpectrumReport {
        p: inventory.pp.p(),
        n: inventory.pp.n(),
        set_name: s.name.clone(),
        degree,
        normalized: false,
        complete,
        per_rep,
        leading,
        lambda1,
        lower_bound: !complete,
        ramanujan: ramanujan_bound(degree),
    })
}

/// Guard for the direct dense adjacency oracle.
pub const ADJACENCY_GUARD: u128 = 5000;

/// Spectrum of the full `|G| x |G|` Cayley adjacency matrix (oracle).
pub fn cayley_adjacency_spectrum(
    s: &GeneratingSet,
    pp: PrimePower,
) -> Result<Vec<f64>, SpectraError> {
    let order = group_order(pp);
    if order > ADJACENCY_GUARD {
        return Err(SpectraError::TooLarge {
            order,
            guard: ADJACENCY_GUARD,
        });
    }
    let index = GroupIndex::build(pp)?;
    let n = index.len();
    let mut adj = DMatrix::<f64>::zeros(n, n);
    for (i, g) in index.elements().iter().enumerate() {
        for t in &s.elements {
            adj[(i, index.of(&g.mul(t)))] += 1.0;
        }
    }
    Ok(linalg::real_symmetric_eigenvalues(&adj))
}

/// One cluster of eigenvalues across representations.
#[derive(Debug, Clone, Serialize)]
pub struct EigenvalueCluster {
    pub value: f64,
    /// 1-based indices of the representations the value appears in
    pub reps: Vec<usize>,
    /// total multiplicity in the adjacency spectrum (dim-weighted)
    pub multiplicity: usize,
    pub monochromatic: bool,
}

/// Cluster the union spectrum at tolerance `tol` and label each cluster by
/// the set of representations it appears in; a cluster is monochromatic when
/// that set is a single representation.
pub fn monochromatic(report: &SpectrumReport, tol: f64) -> Vec<EigenvalueCluster> {
    let mut tagged: Vec<(f64, usize, usize)> = Vec::new(); // (value, rep_index, dim)
    for rs in &report.per_rep {
        for &v in &rs.eigenvalues {
            tagged.push((v, rs.rep_index, rs.dim));
        }
    }
    tagged.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let values: Vec<f64> = tagged.iter().map(|t| t.0).collect();
    cluster_sorted(&values, tol)
        .into_iter()
        .map(|range| {
            let slice = &tagged[range];
            let value = slice.iter().map(|t| t.0).sum::<f64>() / slice.len() as f64;
            let mut reps: Vec<usize> = slice.iter().map(|t| t.1).collect();
            reps.sort_unstable();
            reps.dedup();
            let multiplicity = slice.iter().map(|t| t.2).sum();
            EigenvalueCluster {
                value,
                monochromatic: reps.len() == 1,
                reps,
                multiplicity,
            }
        })
        .collect()
}

/// The projective line `P^1(Z/p^n Z)`: canonical representatives `(1, t)`
/// for `t` in `Z/p^n Z` and `(s, 1)` for `s` in `p Z/p^n Z`.
#[derive(Debug, Clone)]
pub struct ProjectiveLine {
    pp: PrimePower,
    points: Vec<(u64, u64)>,
}

impl ProjectiveLine {
    pub fn new(pp: PrimePower) -> Self {
        let m = pp.modulus();
        let p = pp.p();
        let mut points: Vec<(u64, u64)> = (0..m).map(|t| (1, t)).collect();
        points.extend((0..m / p).map(|i| (i * p, 1)));
        Self { pp, points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[(u64, u64)] {
        &self.points
    }

    /// Index of the line spanned by the column `(a, c)` (unimodular).
    pub fn index_of(&self, a: u64, c: u64) -> usize {
        let pp = self.pp;
        if pp.is_unit(a) {
            let t = pp.mul(c, pp.inv(a).unwrap());
            t as usize
        } else {
            let s = pp.mul(a, pp.inv(c).unwrap());
            debug_assert_eq!(s % pp.p(), 0);
            pp.modulus() as usize + (s / pp.p()) as usize
        }
    }
}

#[derive(Debug, Clone)]
pub struct SchreierGraph {
    pub pp: PrimePower,
    pub set_name: String,
    pub degree: usize,
    pub points: Vec<(u64, u64)>,
    pub adjacency: DMatrix<f64>,
    /// descending
    pub spectrum: Vec<f64>,
}

fn schreier_adjacency(s: &GeneratingSet, pp: PrimePower, line: &ProjectiveLine) -> DMatrix<f64> {
    let n = line.len();
    let mut adj = DMatrix::<f64>::zeros(n, n);
    for (i, &(x, y)) in line.points().iter().enumerate() {
        for g in &s.elements {
            let e = g.entries();
            let a = pp.add(pp.mul(e[0], x), pp.mul(e[1], y));
            let c = pp.add(pp.mul(e[2], x), pp.mul(e[3], y));
            adj[(i, line.index_of(a, c))] += 1.0;
        }
    }
    adj
}

/// The Schreier graph of the generating set acting on `G/B`, the projective
/// line.
pub fn schreier_graph(s: &GeneratingSet, pp: PrimePower) -> SchreierGraph {
    let line = ProjectiveLine::new(pp);
    let adj = schreier_adjacency(s, pp, &line);
    let spectrum = linalg::real_symmetric_eigenvalues(&adj);
    SchreierGraph {
        pp,
        set_name: s.name.clone(),
        degree: s.degree(),
        points: line.points.clone(),
        adjacency: adj,
        spectrum,
    }
}

impl SchreierGraph {
    /// Second largest eigenvalue.
    pub fn lambda1(&self) -> f64 {
        self.spectrum.get(1).copied().unwrap_or(f64::NAN)
    }
}

/// Result of the seeded random-generator sweep over Schreier graphs.
#[derive(Debug, Clone, Serialize)]
pub struct RandomSweep {
    pub p: u64,
    pub n: u32,
    pub count: usize,
    pub seed: u64,
    pub degree: usize,
    /// pairs rejected because they are not generating pairs (disconnected
    /// Schreier graph); about 1/(p+1) of uniform draws share a Borel mod p
    pub rejected: usize,
    /// un-normalized second-largest eigenvalues, one per kept pair
    pub lambda1s: Vec<f64>,
    pub mean: f64,
    pub ramanujan: f64,
}

fn is_connected(adj: &DMatrix<f64>) -> bool {
    let n = adj.nrows();
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut visited = 1;
    while let Some(v) = stack.pop() {
        for u in 0..n {
            if adj[(v, u)] > 0.0 && !seen[u] {
                seen[u] = true;
                visited += 1;
                stack.push(u);
            }
        }
    }
    visited == n
}

/// `count` random symmetrized generating pairs `{s, s^{-1}, t, t^{-1}}`, the
/// Schreier spectrum of each, and the mean second-largest eigenvalue. Draws
/// whose Schreier graph is disconnected are not generating pairs and are
/// redrawn (deterministically, from the same stream).
pub fn random_pair_experiment(pp: PrimePower, count: usize, seed: u64) -> RandomSweep {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let line = ProjectiveLine::new(pp);
    let mut adjacencies = Vec::with_capacity(count);
    let mut rejected = 0;
    while adjacencies.len() < count {
        let s = random_generator_pair(pp, &mut rng);
        let adj = schreier_adjacency(&s, pp, &line);
        if is_connected(&adj) {
            adjacencies.push(adj);
        } else {
            rejected += 1;
        }
    }
    let lambda1s: Vec<f64> = adjacencies
        .par_iter()
        .map(|adj| linalg::real_symmetric_eigenvalues(adj)[1])
        .collect();
    let mean = lambda1s.iter().sum::<f64>() / lambda1s.len().max(1) as f64;
    RandomSweep {
        p: pp.p(),
        n: pp.n(),
        count,
        seed,
        degree: 4,
        rejected,
        lambda1s,
        mean,
        ramanujan: ramanujan_bound(4),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Lambda1Row {
    pub set: String,
    pub n: u32,
    pub lambda1: f64,
    pub lower_bound: bool,
}

/// `lambda_1` for the three standard generating sets over the requested
/// levels `n` (complete spectra for `n <= 2`; the partial `k in {1,2}`
/// subspaces for `n = 3`, reported as lower bounds).
pub fn lambda1_table(
    p: u64,
    ns: &[u32],
    opts: RepBuildOptions,
) -> Result<Vec<Lambda1Row>, SpectraError> {
    let mut rows = Vec::new();
    for &n in ns {
        let pp = PrimePower::new(p, n).map_err(GroupError::from)?;
        let inventory = Inventory::build(pp, opts)?;
        let inventory = if n == 3 {
            // Table parity: the n = 3 bound aggregates the k in {1, 2}
            // subspaces only
            let kept: Vec<_> = inventory
                .entries()
                .iter()
                .filter(|r| matches!(r.label, RepLabel::NonQuotient { k, .. } if k < 3))
                .map(|r| r.shallow_clone())
                .collect();
            let count = kept.len();
            Inventory::from_parts(pp, kept, count)
        } else {
            inventory
        };
        for name in [GenSetName::G1, GenSetName::G2, GenSetName::G3] {
            let s = standard_generators(name, pp);
            let report = cayley_spectrum(&s, &inventory, IMAG_TOL)?;
            rows.push(Lambda1Row {
                set: name.to_string(),
                n,
                lambda1: report.lambda1,
                lower_bound: report.lower_bound,
            });
        }
    }
    Ok(rows)
}

/// Multiset containment `a subset b` at tolerance `tol` (both unsorted).
pub fn multiset_contained(a: &[f64], b: &[f64], tol: f64) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(|x, y| x.partial_cmp(y).unwrap());
    b.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut j = 0;
    for &x in &a {
        while j < b.len() && b[j] < x - tol {
            j += 1;
        }
        if j >= b.len() || (b[j] - x).abs() > tol {
            return false;
        }
        j += 1;
    }
    true
}

/// Elementwise equality of two multisets at tolerance `tol`.
pub fn multiset_equal(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && multiset_contained(a, b, tol) && multiset_contained(b, a, tol)
}
