use sgw_core::lemmas::run_lemmas;
use std::collections::BTreeMap;
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let ns: Vec<usize> = args[1].split(',').map(|s| s.parse().unwrap()).collect();
    let only: Option<Vec<String>> = args.get(2).map(|s| s.split(',').map(|x| x.to_string()).collect());
    let t0 = Instant::now();
    let checks = run_lemmas(&ns, only.as_deref(), 12345).unwrap();
    let mut by_id: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for c in &checks {
        let e = by_id.entry(c.lemma_id.clone()).or_insert((0, 0));
        match c.verdict {
            sgw_core::report::Verdict::Pass => e.0 += 1,
            _ => {
                e.1 += 1;
                println!("FAIL {} n={} [{}]: {}", c.lemma_id, c.n, c.instance, c.witness);
            }
        }
    }
    for (id, (p, f)) in &by_id {
        println!("{id}: {p} pass, {f} fail");
    }
    println!("total {} in {:?}", checks.len(), t0.elapsed());
}
