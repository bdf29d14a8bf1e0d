//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see all lines).
//!
//! Three sub-criteria encode claims that the source material itself gets
//! wrong; they are implemented exactly as stated and fail honestly:
//! - criterion 5's entrywise match against the printed character table
//!   (the printed table's k=1 columns carry wrong signs at the twelve
//!   single-Weyl-factor classes; the companion test
//!   `c05_character_table_matches_up_to_documented_sign_misprint` proves the
//!   sharp corrected statement);
//! - criterion 10 at p=3 (the largest non-quotient eigenvalue sits in a
//!   k=0 representation there; the p=5 part holds);
//! - criterion 11's Schreier/Cayley lambda_1 equality at p=3 (holds at
//!   p=5).

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sl2rep::fourier;
use sl2rep::modarith::PrimePower;
use sl2rep::repbuilder::{character_table, ChiLabel, Inventory, RepBuildOptions, RepLabel};
use sl2rep::sl2group::{
    conjugacy_classes, enumerate, random_element, standard_generators, GenSetName, GroupIndex,
    SL2Elem,
};
use sl2rep::spectra::{
    self, cayley_adjacency_spectrum, cayley_spectrum, multiset_contained, schreier_graph,
    ProjectiveLine, IMAG_TOL,
};
use std::sync::OnceLock;

fn pp(p: u64, n: u32) -> PrimePower {
    PrimePower::new(p, n).unwrap()
}

fn inv3() -> &'static Inventory {
    static INV: OnceLock<Inventory> = OnceLock::new();
    INV.get_or_init(|| Inventory::build(pp(3, 2), RepBuildOptions::default()).unwrap())
}

fn inv5() -> &'static Inventory {
    static INV: OnceLock<Inventory> = OnceLock::new();
    INV.get_or_init(|| Inventory::build(pp(5, 2), RepBuildOptions::default()).unwrap())
}

fn criterion(num: &str, pass: bool, detail: &str) -> bool {
    println!(
        "criterion {num}: {} - {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    pass
}

// ------------------------------------------------------------------ 1

#[test]
fn c01_group_bookkeeping() {
    let order9 = enumerate(pp(3, 2)).unwrap().count();
    let classes9 = conjugacy_classes(pp(3, 2)).unwrap();
    let order25 = enumerate(pp(5, 2)).unwrap().count();
    let pass = order9 == 648 && classes9.len() == 25 && order25 == 15000;
    assert!(criterion(
        "1 [group bookkeeping]",
        pass,
        &format!(
            "|SL2(Z/9)| = {order9} (want 648), classes = {} (want 25), |SL2(Z/25)| = {order25} (want 15000)",
            classes9.len()
        )
    ));
    assert_eq!(classes9.iter().map(|c| c.size).sum::<usize>(), 648);
}

// ------------------------------------------------------------------ 2

#[test]
fn c02_inventory_counts_and_dimensions() {
    let inv = inv3();
    let dims: Vec<usize> = inv.nonquotient().iter().map(|r| r.dim).collect();
    let want = vec![6, 6, 6, 6, 12, 12, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4];
    let p5_count = inv5().nonquotient_count();
    let pass = dims == want && inv.nonquotient_count() == 18 && p5_count == 40;
    assert!(criterion(
        "2 [inventory counts/dims]",
        pass,
        &format!(
            "p=3 dims {dims:?} ({} non-quotient), p=5 non-quotient = {p5_count} (want 40)",
            inv.nonquotient_count()
        )
    ));
}

// ------------------------------------------------------------------ 3

#[test]
fn c03_completeness() {
    let inv = inv3();
    let nq: u128 = inv
        .nonquotient()
        .iter()
        .map(|r| (r.dim * r.dim) as u128)
        .sum();
    let q: u128 = inv.quotient().iter().map(|r| (r.dim * r.dim) as u128).sum();
    let pass = nq == 624 && q == 24 && nq + q == 648;
    assert!(criterion(
        "3 [completeness]",
        pass,
        &format!(
            "sum dim^2 = {nq} (non-quotient) + {q} (quotient) = {}",
            nq + q
        )
    ));
}

// ------------------------------------------------------------------ 4

#[test]
fn c04_homomorphism() {
    let mut worst = 0f64;
    for (prime, inv) in [(3u64, inv3()), (5, inv5())] {
        let m = pp(prime, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(20_000 + prime);
        let pairs: Vec<(SL2Elem, SL2Elem)> = (0..100)
            .map(|_| (random_element(m, &mut rng), random_element(m, &mut rng)))
            .collect();
        for rep in inv.entries() {
            for (a, b) in &pairs {
                let lhs = rep.evaluate(&a.mul(b));
                let rhs = rep.evaluate(a) * rep.evaluate(b);
                let d = (&lhs - &rhs).iter().map(|z| z.norm()).fold(0.0, f64::max);
                worst = worst.max(d);
            }
        }
    }
    let pass = worst <= 1e-9;
    assert!(criterion(
        "4 [homomorphism]",
        pass,
        &format!("max residual over p in {{3,5}}, 100 pairs x all reps: {worst:.2e} (tol 1e-9)")
    ));
}

// ------------------------------------------------------------------ 5

/// The printed character table of the worked example, digitized. `z3` is the
/// primitive cube root, `z12` the primitive 12th root.
#[allow(clippy::vec_init_then_push)]
fn printed_table() -> Vec<Vec<Complex64>> {
    let z3 = Complex64::from_polar(1.0, std::f64::consts::TAU / 3.0);
    let z3s = z3 * z3;
    let z12_7 = Complex64::from_polar(1.0, std::f64::consts::TAU * 7.0 / 12.0);
    let z12_11 = Complex64::from_polar(1.0, std::f64::consts::TAU * 11.0 / 12.0);
    let a = -z3 + 2.0 * z3s; // -z3 + 2 z3^2
    let b = 2.0 * z3 - z3s; // 2 z3 - z3^2
    let c = z12_7 - z12_11; // real, = -sqrt(3)
    let r = |x: f64| Complex64::new(x, 0.0);
    let row_r = |v: [f64; 18]| v.iter().map(|&x| r(x)).collect::<Vec<_>>();
    let mut t: Vec<Vec<Complex64>> = Vec::new();
    t.push(row_r([
        6., 6., 6., 6., 12., 12., 4., 4., 4., 4., 4., 4., 4., 4., 4., 4., 4., 4.,
    ]));
    t.push(row_r([
        -6., 6., 6., -6., -12., 12., 4., -4., 4., -4., 4., -4., 4., -4., 4., -4., 4., -4.,
    ]));
    t.push(row_r([
        3., 3., 3., 3., 0., 0., -2., -2., -2., -2., -2., -2., -2., -2., -2., -2., -2., -2.,
    ]));
    t.push(row_r([
        -3., 3., 3., -3., 0., 0., -2., 2., -2., 2., -2., 2., -2., 2., -2., 2., -2., 2.,
    ]));
    t.push(row_r([
        0., 0., 0., 0., -3., -3., 1., 1., 1., 1., 1., 1., 1., 1., 1., 1., 1., 1.,
    ]));
    t.push(row_r([
        0., 0., 0., 0., 3., -3., 1., -1., 1., -1., 1., -1., 1., -1., 1., -1., 1., -1.,
    ]));
    t.push(vec![
        r(-3.),
        r(-3.),
        r(-3.),
        r(-3.),
        r(3.),
        r(3.),
        a,
        a,
        b,
        b,
        a,
        a,
        b,
        b,
        a,
        a,
        b,
        b,
    ]);
    t.push(vec![
        r(3.),
        r(-3.),
        r(-3.),
        r(3.),
        r(-3.),
        r(3.),
        a,
        -a,
        b,
        -b,
        a,
        -a,
        b,
        -b,
        a,
        -a,
        b,
        -b,
    ]);
    t.push(vec![
        r(-3.),
        r(-3.),
        r(-3.),
        r(-3.),
        r(3.),
        r(3.),
        b,
        b,
        a,
        a,
        b,
        b,
        a,
        a,
        b,
        b,
        a,
        a,
    ]);
    t.push(vec![
        r(3.),
        r(-3.),
        r(-3.),
        r(3.),
        r(-3.),
        r(3.),
        b,
        -b,
        a,
        -a,
        b,
        -b,
        a,
        -a,
        b,
        -b,
        a,
        -a,
    ]);
    t.push(row_r([
        0., -2., 2., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0., 0.,
    ]));
    let zero12 = vec![r(0.); 12];
    let mut row12 = vec![-c, r(1.), r(-1.), c, r(0.), r(0.)];
    row12.extend(zero12.clone());
    t.push(row12);
    let mut row13 = vec![c, r(1.), r(-1.), -c, r(0.), r(0.)];
    row13.extend(zero12);
    t.push(row13);
    // rows 14..25: zero on the k=0 columns, cube-root patterns on k=1, k=2
    let k1k2 = |k1: [Complex64; 8], k2: [Complex64; 4]| {
        let mut row = vec![r(0.); 6];
        row.extend(k1);
        row.extend(k2);
        row
    };
    let o = r(1.0);
    t.push(k1k2(
        [-z3, -z3, -z3s, -z3s, -z3s, -z3s, -z3, -z3],
        [o, o, o, o],
    ));
    t.push(k1k2(
        [-z3, z3, -z3s, z3s, -z3s, z3s, -z3, z3],
        [o, -o, o, -o],
    ));
    t.push(k1k2(
        [-o, -o, -o, -o, -z3, -z3, -z3s, -z3s],
        [z3s, z3s, z3, z3],
    ));
    t.push(k1k2(
        [-o, o, -o, o, -z3, z3, -z3s, z3s],
        [z3s, -z3s, z3, -z3],
    ));
    t.push(k1k2(
        [-z3s, -z3s, -z3, -z3, -o, -o, -o, -o],
        [z3, z3, z3s, z3s],
    ));
    t.push(k1k2(
        [-z3s, z3s, -z3, z3, -o, o, -o, o],
        [z3, -z3, z3s, -z3s],
    ));
    t.push(k1k2(
        [-z3s, -z3s, -z3, -z3, -z3, -z3, -z3s, -z3s],
        [o, o, o, o],
    ));
    t.push(k1k2(
        [-z3s, z3s, -z3, z3, -z3, z3, -z3s, z3s],
        [o, -o, o, -o],
    ));
    t.push(k1k2(
        [-z3, -z3, -z3s, -z3s, -o, -o, -o, -o],
        [z3s, z3s, z3, z3],
    ));
    t.push(k1k2(
        [-z3, z3, -z3s, z3s, -o, o, -o, o],
        [z3s, -z3s, z3, -z3],
    ));
    t.push(k1k2(
        [-o, -o, -o, -o, -z3s, -z3s, -z3, -z3],
        [z3, z3, z3s, z3s],
    ));
    t.push(k1k2(
        [-o, o, -o, o, -z3s, z3s, -z3, z3],
        [z3, -z3, z3s, -z3s],
    ));
    assert_eq!(t.len(), 25);
    t
}

fn our_table() -> &'static Vec<Vec<Complex64>> {
    static T: OnceLock<Vec<Vec<Complex64>>> = OnceLock::new();
    T.get_or_init(|| {
        let inv = inv3();
        let classes = conjugacy_classes(pp(3, 2)).unwrap();
        let reps: Vec<_> = inv.nonquotient().iter().collect();
        let table = character_table(&reps, &classes);
        table.entries
    })
}

/// Invariant-based alignment: search a row bijection (candidates matched by
/// rounded value multisets) and then a column bijection making the tables
/// equal entrywise within `tol`. Returns the permutations if found.
#[allow(clippy::too_many_arguments)]
fn align_tables(
    ours: &[Vec<Complex64>],
    reference: &[Vec<Complex64>],
    tol: f64,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let nrows = reference.len();
    let ncols = reference[0].len();
    let sig = |row: &[Complex64]| {
        let mut v: Vec<(i64, i64)> = row
            .iter()
            .map(|z| ((z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64))
            .collect();
        v.sort_unstable();
        v
    };
    let our_sigs: Vec<_> = ours.iter().map(|r| sig(r)).collect();
    let cands: Vec<Vec<usize>> = reference
        .iter()
        .map(|r| {
            let s = sig(r);
            (0..nrows).filter(|&i| our_sigs[i] == s).collect()
        })
        .collect();
    fn col_match(
        ours: &[Vec<Complex64>],
        reference: &[Vec<Complex64>],
        rperm: &[usize],
        tol: f64,
        ncols: usize,
    ) -> Option<Vec<usize>> {
        let mut used = vec![false; ncols];
        let mut perm = vec![usize::MAX; ncols];
        fn bt(
            j: usize,
            ours: &[Vec<Complex64>],
            reference: &[Vec<Complex64>],
            rperm: &[usize],
            used: &mut [bool],
            perm: &mut [usize],
            tol: f64,
            ncols: usize,
        ) -> bool {
            if j == ncols {
                return true;
            }
            for oj in 0..ncols {
                if used[oj] {
                    continue;
                }
                let ok = rperm
                    .iter()
                    .enumerate()
                    .all(|(ri, &oi)| (ours[oi][oj] - reference[ri][j]).norm() <= tol);
                if ok {
                    used[oj] = true;
                    perm[j] = oj;
                    if bt(j + 1, ours, reference, rperm, used, perm, tol, ncols) {
                        return true;
                    }
                    used[oj] = false;
                }
            }
            false
        }
        if bt(0, ours, reference, rperm, &mut used, &mut perm, tol, ncols) {
            Some(perm)
        } else {
            None
        }
    }
    fn bt_rows(
        i: usize,
        taken: &mut Vec<bool>,
        rperm: &mut Vec<usize>,
        cands: &[Vec<usize>],
        ours: &[Vec<Complex64>],
        reference: &[Vec<Complex64>],
        tol: f64,
        ncols: usize,
        nrows: usize,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        if i == nrows {
            return col_match(ours, reference, rperm, tol, ncols).map(|cp| (rperm.clone(), cp));
        }
        for &oi in &cands[i] {
            if taken[oi] {
                continue;
            }
            taken[oi] = true;
            rperm.push(oi);
            let res = bt_rows(
                i + 1,
                taken,
                rperm,
                cands,
                ours,
                reference,
                tol,
                ncols,
                nrows,
            );
            if res.is_some() {
                return res;
            }
            rperm.pop();
            taken[oi] = false;
        }
        None
    }
    bt_rows(
        0,
        &mut vec![false; nrows],
        &mut Vec::new(),
        &cands,
        ours,
        reference,
        tol,
        ncols,
        nrows,
    )
}

#[test]
fn c05_character_table_matches_printed_table() {
    let ours = our_table();
    let reference = printed_table();
    let found = align_tables(ours, &reference, 1e-8);
    let pass = found.is_some();
    assert!(
        criterion(
            "5 [character table, as printed]",
            pass,
            if pass {
                "entrywise match at 1e-8 under row/column bijection"
            } else {
                "no bijection exists: the printed table's k=1 entries have wrong signs at the \
                 twelve single-Weyl-factor classes (six printed rows are impossible for any \
                 character table; see c05_..._documented_sign_misprint for the sharp statement)"
            }
        ),
        "the printed section-3 table is not a character table of SL2(Z/9); \
         our table is certified by exact completeness and orthonormality (criteria 3 and 6)"
    );
}

#[test]
fn c05_character_table_matches_up_to_documented_sign_misprint() {
    let ours = our_table();
    let mut reference = printed_table();
    // the documented misprint: k=1 columns (7..=14, 1-based) at the twelve
    // single-Weyl-factor classes (printed rows 14..=25) carry flipped signs
    for row in reference.iter_mut().skip(13) {
        for entry in row.iter_mut().take(14).skip(6) {
            *entry = -*entry;
        }
    }
    let found = align_tables(ours, &reference, 1e-8);
    let pass = found.is_some();
    assert!(criterion(
        "5b [character table, k=1 signs corrected]",
        pass,
        "entrywise match at 1e-8 under row/column bijection after negating the k=1 entries of \
         printed rows 14-25"
    ));
}

// ------------------------------------------------------------------ 6

#[test]
fn c06_orthogonality() {
    let inv = inv3();
    let classes = conjugacy_classes(pp(3, 2)).unwrap();
    let reps: Vec<_> = inv.entries().iter().collect();
    let table = character_table(&reps, &classes);
    let mut worst = 0f64;
    for i in 0..table.labels.len() {
        for j in 0..table.labels.len() {
            let want = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((table.inner_product(i, j) - Complex64::new(want, 0.0)).norm());
        }
    }
    let pass = worst <= 1e-8;
    assert!(criterion(
        "6 [orthogonality]",
        pass,
        &format!("max |<chi_i, chi_j> - delta_ij| = {worst:.2e} over the full p=3 inventory")
    ));
}

// ------------------------------------------------------------------ 7

#[test]
fn c07_fourier_inversion_and_plancherel() {
    let inv = inv3();
    let idx = GroupIndex::build(pp(3, 2)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(777);
    let mut worst_rt = 0f64;
    let mut worst_pl = 0f64;
    for _ in 0..10 {
        let f = fourier::GroupFunction::random(&idx, &mut rng);
        let ft = fourier::fourier_transform(&f, inv, &idx);
        let back = fourier::inverse_fourier(&ft, inv, &idx).unwrap();
        worst_rt = worst_rt.max(back.max_distance(&f));
        let (lhs, rhs) = fourier::plancherel_sides(&f, &ft, inv);
        worst_pl = worst_pl.max((lhs - rhs).abs());
    }
    let pass = worst_rt <= 1e-8 && worst_pl <= 1e-8 * 648.0;
    assert!(criterion(
        "7 [fourier inversion & plancherel]",
        pass,
        &format!("10 random functions: max round-trip {worst_rt:.2e}, max parseval residual {worst_pl:.2e}")
    ));
}

// ------------------------------------------------------------------ 8

#[test]
fn c08_wedderburn_union() {
    let inv = inv3();
    let mut worst = 0f64;
    for name in [GenSetName::G1, GenSetName::G2, GenSetName::G3] {
        let s = standard_generators(name, pp(3, 2));
        let report = cayley_spectrum(&s, inv, IMAG_TOL).unwrap();
        let mut union = report.union_with_multiplicity();
        let mut direct = cayley_adjacency_spectrum(&s, pp(3, 2)).unwrap();
        union.sort_by(|a, b| a.partial_cmp(b).unwrap());
        direct.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(union.len(), direct.len());
        let d = union
            .iter()
            .zip(&direct)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        worst = worst.max(d);
    }
    let pass = worst <= 1e-6;
    assert!(criterion(
        "8 [wedderburn union]",
        pass,
        &format!(
            "G1/G2/G3 at p=3: max |union - adjacency| = {worst:.2e} over 648 eigenvalues each"
        )
    ));
}

// ------------------------------------------------------------------ 9

#[test]
fn c09_lambda1_table() {
    let rows = spectra::lambda1_table(5, &[1, 2, 3], RepBuildOptions::default()).unwrap();
    let get = |set: &str, n: u32| {
        rows.iter()
            .find(|r| r.set == set && r.n == n)
            .map(|r| (r.lambda1, r.lower_bound))
            .unwrap()
    };
    let exact = [
        ("G1", 1, 3.699),
        ("G1", 2, 3.922),
        ("G2", 1, 3.774),
        ("G2", 2, 3.950),
        ("G3", 1, 3.236),
        ("G3", 2, 3.454),
    ];
    let mut pass = true;
    let mut detail = String::new();
    for (set, n, want) in exact {
        let (got, lb) = get(set, n);
        let ok = (got - want).abs() <= 5e-3 && !lb;
        pass &= ok;
        detail.push_str(&format!(
            "({set},n={n}): {got:.4} vs {want} {}; ",
            if ok { "ok" } else { "MISS" }
        ));
    }
    let lower = [("G1", 3.852), ("G2", 3.935), ("G3", 3.389)];
    for (set, bound) in lower {
        let (got, lb) = get(set, 3);
        let ok = lb && got >= bound - 5e-3;
        pass &= ok;
        detail.push_str(&format!(
            "({set},n=3): >= {got:.4} vs > {bound} {}; ",
            if ok { "ok" } else { "MISS" }
        ));
    }
    assert!(criterion(
        "9 [lambda1 table]",
        pass,
        detail.trim_end_matches("; ")
    ));
}

// ------------------------------------------------------------------ 10

fn leading_location(prime: u64, inv: &Inventory, name: GenSetName) -> (bool, String) {
    let s = standard_generators(name, pp(prime, 2));
    let report = cayley_spectrum(&s, inv, IMAG_TOL).unwrap();
    let nonquot: Vec<_> = report.per_rep.iter().filter(|r| !r.quotient).collect();
    let global_max = nonquot
        .iter()
        .map(|r| r.eigenvalues[0])
        .fold(f64::NEG_INFINITY, f64::max);
    let k2_rep = nonquot
        .iter()
        .find(|r| {
            matches!(
                r.label,
                RepLabel::NonQuotient {
                    k: 2,
                    chi: ChiLabel::Eps(1),
                    sigma_idx: 1,
                    ..
                }
            )
        })
        .expect("k=2 chi=+1 sigma=1 representation present");
    let attained = k2_rep.eigenvalues[0] >= global_max - 1e-9;
    (
        attained,
        format!(
            "p={prime} {}: max non-quotient {global_max:.6}, k=2/chi=+1/sigma=1 rep has {:.6}",
            s.name, k2_rep.eigenvalues[0]
        ),
    )
}

#[test]
fn c10_leading_eigenvalue_location_p5() {
    let (ok1, d1) = leading_location(5, inv5(), GenSetName::G1);
    let (ok2, d2) = leading_location(5, inv5(), GenSetName::G2);
    assert!(criterion(
        "10 [leading eigenvalue location, p=5]",
        ok1 && ok2,
        &format!("{d1}; {d2}")
    ));
}

#[test]
fn c10_leading_eigenvalue_location_p3() {
    let (ok1, d1) = leading_location(3, inv3(), GenSetName::G1);
    let (ok2, d2) = leading_location(3, inv3(), GenSetName::G2);
    assert!(
        criterion(
            "10 [leading eigenvalue location, p=3]",
            ok1 && ok2,
            &format!("{d1}; {d2}")
        ),
        "documented reference defect: at p=3 the largest non-quotient eigenvalue lies in the k=0 \
         dim-12 representation, not the k=2 one (the source only claims the location 'in many \
         of the examples')"
    );
}

// ------------------------------------------------------------------ 11

#[test]
fn c11_schreier_counts_and_containment() {
    // vertex count p^{n-1}(p+1); note the criterion's parenthetical "150"
    // contradicts its own formula (30 at p=5, n=2)
    let v5 = ProjectiveLine::new(pp(5, 2)).len();
    let v3 = ProjectiveLine::new(pp(3, 2)).len();
    let mut pass = v5 == 30 && v3 == 12;
    let inv = inv3();
    let mut detail = format!("vertices: p=5 {v5} (want 30 = 5*6), p=3 {v3} (want 12)");
    for name in [GenSetName::G1, GenSetName::G2, GenSetName::G3] {
        let s = standard_generators(name, pp(3, 2));
        let graph = schreier_graph(&s, pp(3, 2));
        let report = cayley_spectrum(&s, inv, IMAG_TOL).unwrap();
        let contained =
            multiset_contained(&graph.spectrum, &report.union_with_multiplicity(), 1e-6);
        pass &= contained;
        detail.push_str(&format!("; {} containment: {contained}", s.name));
    }
    assert!(criterion(
        "11a [schreier counts & containment]",
        pass,
        &detail
    ));
}

#[test]
fn c11_schreier_lambda1_equality_p5() {
    let s = standard_generators(GenSetName::G1, pp(5, 2));
    let graph = schreier_graph(&s, pp(5, 2));
    let report = cayley_spectrum(&s, inv5(), IMAG_TOL).unwrap();
    let pass = (graph.lambda1() - report.lambda1).abs() <= 1e-6;
    assert!(criterion(
        "11b [schreier lambda1 = cayley lambda1, G1, p=5]",
        pass,
        &format!(
            "schreier {:.6} vs cayley {:.6}",
            graph.lambda1(),
            report.lambda1
        )
    ));
}

#[test]
fn c11_schreier_lambda1_equality_p3() {
    let s = standard_generators(GenSetName::G1, pp(3, 2));
    let graph = schreier_graph(&s, pp(3, 2));
    let report = cayley_spectrum(&s, inv3(), IMAG_TOL).unwrap();
    let pass = (graph.lambda1() - report.lambda1).abs() <= 1e-6;
    assert!(
        criterion(
            "11c [schreier lambda1 = cayley lambda1, G1, p=3]",
            pass,
            &format!(
                "schreier {:.6} vs cayley {:.6}",
                graph.lambda1(),
                report.lambda1
            )
        ),
        "documented reference defect: the p=3 Cayley lambda1 lives in a k=0 representation that \
         does not appear in the projective-line permutation representation"
    );
}

// ------------------------------------------------------------------ 12

#[test]
fn c12_random_sweep_p19() {
    let sweep = spectra::random_pair_experiment(pp(19, 2), 100, 7);
    let in_band = sweep.mean >= 3.31 && sweep.mean <= 3.51;
    let normalized_ok = sweep
        .lambda1s
        .iter()
        .all(|&v| v / 4.0 <= 1.0 + 1e-8 && v / 4.0 >= -1.0 - 1e-8);
    let pass = in_band && normalized_ok;
    assert!(criterion(
        "12 [random sweep, p=19]",
        pass,
        &format!(
            "mean lambda1 = {:.4} (band [3.31, 3.51]), normalized values in [-1,1]: {normalized_ok}",
            sweep.mean
        )
    ));
}

// ------------------------------------------------------------------ 13

#[test]
fn c13_baseline_dixon() {
    let irreps = sl2rep::baseline::sl2_irreps(pp(3, 1), 1).unwrap();
    let dims: Vec<usize> = irreps.iter().map(|r| r.dim).collect();
    let total: usize = dims.iter().map(|d| d * d).sum();
    let pass = dims == vec![1, 1, 1, 2, 2, 2, 3] && total == 24;
    assert!(criterion(
        "13 [baseline irreducibles]",
        pass,
        &format!("SL2(Z/3) dims {dims:?}, sum dim^2 = {total}")
    ));
}
