//! The Schreier graph of a generating set acting on the projective line
//! G/B, and the comparison of its second eigenvalue with the full Cayley
//! graph's.
//!
//! Run with: cargo run --release --example schreier_projective_line [p]

use sl2rep::modarith::PrimePower;
use sl2rep::repbuilder::{Inventory, RepBuildOptions};
use sl2rep::sl2group::{standard_generators, GenSetName};
use sl2rep::spectra::{cayley_spectrum, multiset_contained, schreier_graph, IMAG_TOL};

fn main() {
    let p: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let pp = PrimePower::new(p, 2).expect("p must be an odd prime");
    let inv = if p <= 7 {
        Some(Inventory::build(pp, RepBuildOptions::default()).unwrap())
    } else {
        None // skip the representation-side comparison at larger p
    };
    for name in [GenSetName::G1, GenSetName::G2, GenSetName::G3] {
        let s = standard_generators(name, pp);
        let g = schreier_graph(&s, pp);
        println!(
            "{} on P^1(Z/{}Z): {} vertices, top eigenvalue {:.4}, lambda1 {:.6} \
             (normalized {:.4})",
            s.name,
            pp.modulus(),
            g.points.len(),
            g.spectrum[0],
            g.lambda1(),
            g.lambda1() / g.degree as f64
        );
        if let Some(inv) = &inv {
            let report = cayley_spectrum(&s, inv, IMAG_TOL).unwrap();
            let contained =
                multiset_contained(&g.spectrum, &report.union_with_multiplicity(), 1e-6);
            println!(
                "   full Cayley lambda1 {:.6}; Schreier spectrum contained in Cayley: {}",
                report.lambda1, contained
            );
        }
    }
}
