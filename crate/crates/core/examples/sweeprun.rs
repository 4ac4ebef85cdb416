use sgw_core::sweep::run_sweep;
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let n: usize = args[1].parse().unwrap();
    let max_dim: usize = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(5000);
    let jobs: usize = args.get(3).map(|s| s.parse().unwrap()).unwrap_or(4);
    let t0 = Instant::now();
    let records = run_sweep(n, max_dim, jobs, 2024).unwrap();
    for r in &records {
        println!(
            "{} (x) {}  dim {:>5}  irr={:<5}  iso={:<10} end={:?} verdict={:?} {}ms",
            r.lambda, r.mu, r.tensor_dim, r.irreducible,
            r.iso_label.as_ref().map(|p| p.to_string()).unwrap_or_default(),
            r.end_dim, r.verdict, r.elapsed_ms
        );
    }
    println!("total {:?}", t0.elapsed());
}
