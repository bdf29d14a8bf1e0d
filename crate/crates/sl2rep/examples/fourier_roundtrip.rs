//! Fourier-analyze a random function on SL2(Z/9Z): transform at the full
//! inventory, invert, and check the Plancherel identity.
//!
//! Run with: cargo run --release --example fourier_roundtrip

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sl2rep::fourier::{fourier_transform, inverse_fourier, plancherel_sides, GroupFunction};
use sl2rep::modarith::PrimePower;
use sl2rep::repbuilder::{Inventory, RepBuildOptions};
use sl2rep::sl2group::GroupIndex;

fn main() {
    let pp = PrimePower::new(3, 2).unwrap();
    let inv = Inventory::build(pp, RepBuildOptions::default()).unwrap();
    let idx = GroupIndex::build(pp).unwrap();
    println!(
        "group of order {}, inventory of {} irreducibles (sum dim^2 = {})",
        idx.len(),
        inv.entries().len(),
        inv.sum_dim_sq()
    );

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let f = GroupFunction::random(&idx, &mut rng);
    let coeffs = fourier_transform(&f, &inv, &idx);
    println!("computed {} coefficient matrices", coeffs.matrices.len());

    let back = inverse_fourier(&coeffs, &inv, &idx).unwrap();
    println!(
        "inversion round-trip max error: {:.2e}",
        back.max_distance(&f)
    );

    let (lhs, rhs) = plancherel_sides(&f, &coeffs, &inv);
    println!("plancherel: sum |f|^2 = {lhs:.12}, (1/|G|) sum d ||f^||_F^2 = {rhs:.12}");
    println!("residual: {:.2e}", (lhs - rhs).abs());
}
