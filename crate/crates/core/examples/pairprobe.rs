use sgw_core::functors::tensor;
use sgw_core::meataxe::{decide_irreducible, SimpleCatalog};
use sgw_core::partition::two_regular_partitions_of;
use std::time::Instant;

fn main() {
    let n = 10usize;
    let catalog = SimpleCatalog::symmetric(n);
    let trivial: sgw_core::Partition = "10".parse().unwrap();
    let labels: Vec<_> = two_regular_partitions_of(n)
        .into_iter()
        .filter(|p| *p != trivial)
        .collect();
    for i in 0..labels.len() {
        for j in i..labels.len() {
            let da = catalog.get(&labels[i]);
            let db = catalog.get(&labels[j]);
            let dim = da.dim * db.dim;
            if dim > 5000 {
                continue;
            }
            let t0 = Instant::now();
            let t = tensor(da, db);
            let (irr, _) = decide_irreducible(&t, &catalog, 2024);
            eprintln!(
                "{} (x) {} dim {} -> irr={} in {:?}",
                labels[i], labels[j], dim, irr, t0.elapsed()
            );
        }
    }
}
