//! Build the complete labeled inventory of irreducible representations of
//! SL2(Z/p^2 Z) and sanity-check the homomorphism property on random
//! products.
//!
//! Run with: cargo run --release --example build_irreps [p]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sl2rep::modarith::PrimePower;
use sl2rep::repbuilder::{Inventory, RepBuildOptions};
use sl2rep::sl2group::{group_order, random_element};

fn main() {
    let p: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let pp = PrimePower::new(p, 2).expect("p must be an odd prime");
    let inv = Inventory::build(pp, RepBuildOptions::default()).unwrap();
    println!(
        "SL2(Z/{}Z): |G| = {}, sum of dim^2 = {} (complete: {})",
        pp.modulus(),
        group_order(pp),
        inv.sum_dim_sq(),
        inv.is_complete()
    );
    println!("{:>5}  {:<14} {:>4}  kind", "index", "label", "dim");
    for (i, rep) in inv.entries().iter().enumerate() {
        let kind = if i < inv.nonquotient_count() {
            "non-quotient"
        } else {
            "quotient"
        };
        println!(
            "{:>5}  {:<14} {:>4}  {kind}",
            i + 1,
            rep.label.to_string(),
            rep.dim
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0f64;
    for _ in 0..25 {
        let a = random_element(pp, &mut rng);
        let b = random_element(pp, &mut rng);
        for rep in inv.entries() {
            let lhs = rep.evaluate(&a.mul(&b));
            let rhs = rep.evaluate(&a) * rep.evaluate(&b);
            let d = (&lhs - &rhs).iter().map(|z| z.norm()).fold(0.0, f64::max);
            worst = worst.max(d);
        }
    }
    println!("\nmax |R(AB) - R(A) R(B)| over 25 random pairs and all entries: {worst:.2e}");
}
