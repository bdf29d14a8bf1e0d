//! The building blocks: Bruhat factorization in SL2(Z/p^n Z), the ring
//! G(k, Delta) with its norm-one group C, and the principal characters that
//! index irreducible subspaces.
//!
//! Run with: cargo run --release --example bruhat_and_ring

use sl2rep::gring::{CGroup, OrbitData, RingParams};
use sl2rep::modarith::{canonical_delta_primes, PrimePower};
use sl2rep::sl2group::{bruhat_decompose, BruhatFactor, SL2Elem};

fn main() {
    let pp = PrimePower::new(3, 2).unwrap();
    println!("== Bruhat decomposition in SL2(Z/9Z) ==");
    for entries in [[1, 1, 1, 2], [4, 3, 3, 7], [0, 8, 1, 0], [1, 3, 0, 1]] {
        let e = SL2Elem::new(entries[0], entries[1], entries[2], entries[3], pp).unwrap();
        let bf = bruhat_decompose(&e);
        let factors: Vec<String> = bf
            .factors
            .iter()
            .map(|f| match f {
                BruhatFactor::D(a) => format!("d_{a}"),
                BruhatFactor::U(b) => format!("u_{b}"),
                BruhatFactor::W => "w".to_string(),
            })
            .collect();
        println!(
            "  {e} = {}  (recomposes: {})",
            factors.join(" "),
            bf.recompose() == e
        );
    }

    println!("\n== The ring G(k, Delta) for p = 3, n = 2 ==");
    let (d1, d2) = canonical_delta_primes(3);
    println!("canonical Delta' classes: Delta'_1 = {d1}, Delta'_2 = {d2}");
    for (k, dp) in [(0u32, d1), (0, d2), (1, d1), (2, d1)] {
        let rp = RingParams::new(pp, k, dp).unwrap();
        let c = CGroup::build(rp);
        let orbits = OrbitData::compute(&rp, &c);
        let principal = c.principal_characters();
        println!(
            "  k = {k}, Delta' = {dp}: |G| = {:>2} points, |C| = {:>2} ({}), \
             {} principal characters, {} C-orbits",
            rp.point_count(),
            c.len(),
            if c.is_cyclic() {
                "cyclic"
            } else {
                "non-cyclic"
            },
            principal.len(),
            orbits.orbit_count(),
        );
        if let Some(chi) = principal.first() {
            let dim = sl2rep::gring::induced_basis(&c, &orbits, chi)
                .unwrap()
                .len();
            println!(
                "    chi_{} induces a {dim}-dimensional subspace (surviving orbits)",
                chi.ell()
            );
        }
    }
}
