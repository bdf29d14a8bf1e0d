//! Seeded sweep over random generating pairs: second-largest eigenvalues of
//! the Schreier graphs on P^1(Z/p^2 Z) and their mean, against the
//! Ramanujan reference 2 sqrt(3).
//!
//! Run with: cargo run --release --example random_generators [p] [count] [seed]

use sl2rep::modarith::PrimePower;
use sl2rep::spectra::random_pair_experiment;

fn main() {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(19);
    let count: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(100);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let pp = PrimePower::new(p, 2).expect("p must be an odd prime");
    let sweep = random_pair_experiment(pp, count, seed);
    println!(
        "p = {p}, {count} generating pairs (seed {seed}, {} non-generating draws rejected):",
        sweep.rejected
    );
    let mut sorted = sweep.lambda1s.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    println!(
        "  lambda1 range [{:.4}, {:.4}], median {:.4}",
        sorted[0],
        sorted[sorted.len() - 1],
        sorted[sorted.len() / 2]
    );
    println!(
        "  mean {:.4}  vs un-normalized Ramanujan bound 2 sqrt(3) = {:.4}",
        sweep.mean, sweep.ramanujan
    );
}
