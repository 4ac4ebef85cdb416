use sgw_core::meataxe::SimpleCatalog;
use std::time::Instant;

fn main() {
    let n: usize = std::env::args().nth(1).unwrap().parse().unwrap();
    let t0 = Instant::now();
    let catalog = SimpleCatalog::symmetric(n);
    for (lam, d) in &catalog.entries {
        println!("D({lam}) dim {}", d.dim);
    }
    println!("catalog n={n} in {:?}", t0.elapsed());
}
