//! Compute the 25 x 18 character table of the non-quotient irreducible
//! representations of SL2(Z/9Z) from the constructed matrices.
//!
//! Run with: cargo run --release --example character_table

use num_complex::Complex64;
use sl2rep::modarith::PrimePower;
use sl2rep::repbuilder::{character_table, Inventory, RepBuildOptions};
use sl2rep::sl2group::conjugacy_classes;

fn short(z: Complex64) -> String {
    // compact cyclotomic-friendly rendering
    if z.im.abs() < 1e-8 {
        let r = z.re;
        if (r - r.round()).abs() < 1e-8 {
            return format!("{}", r.round() as i64);
        }
        return format!("{r:.3}");
    }
    format!("{:.2}{:+.2}i", z.re, z.im)
}

fn main() {
    let pp = PrimePower::new(3, 2).unwrap();
    let inv = Inventory::build(pp, RepBuildOptions::default()).unwrap();
    let classes = conjugacy_classes(pp).unwrap();
    let reps: Vec<_> = inv.nonquotient().iter().collect();
    let table = character_table(&reps, &classes);

    print!("{:<16} {:>4}", "class", "size");
    for label in &table.labels {
        print!(" {:>12}", label.to_string());
    }
    println!();
    for (i, rep) in table.class_reps.iter().enumerate() {
        print!("{:<16} {:>4}", rep.to_string(), table.class_sizes[i]);
        for v in &table.entries[i] {
            print!(" {:>12}", short(*v));
        }
        println!();
    }

    // first row is the dimension vector
    let dims: Vec<usize> = table.dims.clone();
    println!("\ndimensions: {dims:?}");
    let mut worst = 0f64;
    for i in 0..table.labels.len() {
        for j in 0..table.labels.len() {
            let want = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((table.inner_product(i, j) - Complex64::new(want, 0.0)).norm());
        }
    }
    println!("max orthonormality deviation across columns: {worst:.2e}");
}
