//! Per-representation Cayley spectra for the three generator families at
//! p = 5, the lambda_1 comparison table across n = 1, 2, 3, and the
//! monochromatic classification.
//!
//! Run with: cargo run --release --example cayley_spectrum

use sl2rep::modarith::PrimePower;
use sl2rep::repbuilder::{Inventory, RepBuildOptions};
use sl2rep::sl2group::{standard_generators, GenSetName};
use sl2rep::spectra::{cayley_spectrum, lambda1_table, monochromatic, IMAG_TOL, MONO_TOL};

fn main() {
    let pp = PrimePower::new(5, 2).unwrap();
    let inv = Inventory::build(pp, RepBuildOptions::default()).unwrap();

    for name in [GenSetName::G1, GenSetName::G2, GenSetName::G3] {
        let s = standard_generators(name, pp);
        let report = cayley_spectrum(&s, &inv, IMAG_TOL).unwrap();
        let clusters = monochromatic(&report, MONO_TOL);
        let mono = clusters.iter().filter(|c| c.monochromatic).count();
        println!(
            "{}: leading {:.4}, lambda1 {:.4} (ramanujan {:.4}); {} eigenvalue clusters, \
             {mono} monochromatic",
            s.name,
            report.leading,
            report.lambda1,
            report.ramanujan,
            clusters.len()
        );
        // which representation carries the largest non-quotient eigenvalue
        let best = report
            .per_rep
            .iter()
            .filter(|r| !r.quotient)
            .max_by(|a, b| a.eigenvalues[0].partial_cmp(&b.eigenvalues[0]).unwrap())
            .unwrap();
        println!(
            "   largest non-quotient eigenvalue {:.4} in #{} = {}",
            best.eigenvalues[0], best.rep_index, best.label
        );
    }

    println!(
        "\nlambda_1 across levels (n = 3 rows are lower bounds from the k in {{1,2}} spaces):"
    );
    let rows = lambda1_table(5, &[1, 2, 3], RepBuildOptions::default()).unwrap();
    println!("{:>4} {:>4} {:>10}", "set", "n", "lambda1");
    for row in rows {
        println!(
            "{:>4} {:>4} {:>9.3}{}",
            row.set,
            row.n,
            row.lambda1,
            if row.lower_bound { " (>=)" } else { "" }
        );
    }
}
