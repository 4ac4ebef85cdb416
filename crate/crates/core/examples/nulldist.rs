use sgw_core::meataxe::{ElementSampler, SimpleCatalog};
use sgw_core::Rng;
use std::collections::BTreeMap;

fn main() {
    let catalog = SimpleCatalog::symmetric(10);
    let d = catalog.get(&"4,3,2,1".parse().unwrap());
    let mut rng = Rng::new(7);
    let mut sampler = ElementSampler::new(d, &mut rng);
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for _ in 0..60 {
        let (_, zm) = sampler.next(&mut rng);
        let nullity = zm.transpose().nullspace().dim();
        *hist.entry(nullity).or_insert(0) += 1;
    }
    println!("{hist:?}");
}
