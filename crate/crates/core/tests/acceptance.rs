//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `cargo test -- --nocapture`). Run via
//! `cargo test --test acceptance`.

use std::time::Instant;

use sgw_core::chars::{brauer_characters, decomposition_matrix};
use sgw_core::functors::{e_component, f_component, restrict_to_symmetric};
use sgw_core::gf2::{GF2Matrix, Rng};
use sgw_core::lemmas::run_lemmas;
use sgw_core::meataxe::{hom_space, iso_simple, norton, SimpleCatalog};
use sgw_core::partition::{
    e_tilde_label, eps_phi, f_tilde_label, odd_class_labels, partitions_of, ptn,
    two_regular_partitions_of, Partition,
};
use sgw_core::report::Verdict;
use sgw_core::sweep::run_sweep;

const SEED: u64 = 2024;

fn report(criterion: &str, ok: bool, started: Instant, detail: &str) {
    let line = format!(
        "ACCEPTANCE {criterion}: {} ({} ms) {detail}",
        if ok { "pass" } else { "FAIL" },
        started.elapsed().as_millis()
    );
    println!("{line}");
    assert!(ok, "{line}");
}

fn lemma_block(ns: &[usize], ids: &[&str]) -> (usize, usize) {
    let only: Vec<String> = ids.iter().map(|s| s.to_string()).collect();
    let checks = run_lemmas(ns, Some(&only), SEED).expect("registered checks");
    let pass = checks.iter().filter(|c| c.verdict == Verdict::Pass).count();
    (pass, checks.len() - pass)
}

#[test]
fn criterion_1_combinatorial_laws() {
    let t0 = Instant::now();
    // one more conormal than normal, exhaustively to 25 boxes
    let mut partitions = 0usize;
    for n in 1..=25 {
        for lam in partitions_of(n) {
            let ep = eps_phi(&lam);
            assert_eq!(ep.phi_total(), ep.eps_total() + 1, "{lam}");
            partitions += 1;
        }
    }
    // three-way JS equivalence on 2-regular partitions to 25 boxes
    let mut js_checked = 0usize;
    for n in 1..=25 {
        for lam in two_regular_partitions_of(n) {
            let ep = eps_phi(&lam);
            let parity = lam.parts().windows(2).all(|w| (w[0] - w[1]) % 2 == 0);
            let js = lam.is_js().unwrap();
            assert!(js == parity && js == (ep.eps_total() == 1), "{lam}");
            js_checked += 1;
        }
    }
    // crystal label identities on all applicable triples to 14 boxes
    let mut triples = 0usize;
    for n in 1..=14 {
        for lam in two_regular_partitions_of(n) {
            let ep = eps_phi(&lam);
            for i in 0..2u8 {
                for r in 0..=ep.eps(i) {
                    let nu = e_tilde_label(&lam, i, r).unwrap();
                    assert_eq!(f_tilde_label(&nu, i, r).as_ref(), Some(&lam));
                    let epn = eps_phi(&nu);
                    assert_eq!(epn.eps(i), ep.eps(i) - r);
                    assert_eq!(epn.phi(i), ep.phi(i) + r);
                    triples += 1;
                }
            }
        }
    }
    // parity obstruction for even n to 20
    let mut obstruction = 0usize;
    for n in (2..=20).step_by(2) {
        for lam in two_regular_partitions_of(n) {
            let ep = eps_phi(&lam);
            for (i, j) in [(0u8, 1u8), (1, 0)] {
                assert!(
                    !(ep.eps(i) == 2 && ep.eps(j) == 0 && ep.phi(i) == 0 && ep.phi(j) == 3),
                    "{lam}"
                );
            }
            obstruction += 1;
        }
    }
    report(
        "1 combinatorial laws",
        true,
        t0,
        &format!(
            "{partitions} partitions, {js_checked} JS, {triples} label triples, {obstruction} obstruction checks"
        ),
    );
}

#[test]
fn criterion_2_branching_end_identities() {
    let t0 = Instant::now();
    // dim End(D res S_{n-1}) = number of normal nodes, 4 <= n <= 9
    let mut end_checks = 0usize;
    for n in 4..=9 {
        let catalog = SimpleCatalog::symmetric(n);
        for (lam, d) in &catalog.entries {
            let r = restrict_to_symmetric(d, n - 1);
            let got = hom_space(&r, &r).dim();
            assert_eq!(got, eps_phi(lam).eps_total(), "End of D({lam}) res");
            end_checks += 1;
        }
    }
    // dim End(D res S_{n-2}) = 2 for JS partitions (not the trivial one)
    let mut js_checks = 0usize;
    for n in 4..=9 {
        let catalog = SimpleCatalog::symmetric(n);
        let trivial = ptn(&[n as u32]);
        for (lam, d) in &catalog.entries {
            if *lam == trivial || !lam.is_js().unwrap() {
                continue;
            }
            let r = restrict_to_symmetric(d, n - 2);
            assert_eq!(hom_space(&r, &r).dim(), 2, "double restriction of D({lam})");
            js_checks += 1;
        }
    }
    // adjointness dimension identities on all pairs at n = 6, 7
    let mut pairs = 0usize;
    for n in 6..=7 {
        let small = SimpleCatalog::symmetric(n - 1);
        let big = SimpleCatalog::symmetric(n);
        for (mu, dmu) in &small.entries {
            for (lam, dlam) in &big.entries {
                for i in 0..2u8 {
                    let fi = f_component(dmu, i);
                    let ei = e_component(dlam, i).1;
                    let lhs = hom_space(&fi, dlam).dim();
                    let rhs = hom_space(dmu, &ei).dim();
                    assert_eq!(lhs, rhs, "adjointness at ({mu}, {lam}, {i})");
                    pairs += 1;
                }
            }
        }
    }
    assert!(pairs >= 20);
    report(
        "2 branching/End identities",
        true,
        t0,
        &format!("{end_checks} restrictions, {js_checks} JS double restrictions, {pairs} adjoint pairs"),
    );
}

#[test]
fn criterion_3_multiplicity_laws() {
    let t0 = Instant::now();
    let (p1, f1) = lemma_block(&[4, 5, 6, 7, 8], &["L39"]);
    let (p2, f2) = lemma_block(&[4, 5, 6, 7, 8], &["L31"]);
    report(
        "3 multiplicity laws",
        f1 + f2 == 0,
        t0,
        &format!("e-power laws {p1}, uniserial double-restrictions {p2}"),
    );
}

#[test]
fn criterion_4_module_structure_instances() {
    let t0 = Instant::now();
    let mut pass = 0usize;
    let mut fail = 0usize;
    for (ns, ids) in [
        (vec![6usize, 8], vec!["L1", "L2", "L3", "L49", "L27", "L33"]),
        (vec![6], vec!["L5"]),
        (vec![8], vec!["L6", "L6'", "L12", "L25", "L59"]),
    ] {
        let (p, f) = lemma_block(&ns, &ids.iter().map(|s| *s).collect::<Vec<_>>());
        pass += p;
        fail += f;
    }
    report(
        "4 module-structure instances",
        fail == 0,
        t0,
        &format!("{pass} structure checks"),
    );
}

#[test]
fn criterion_5_inequality_lemmas() {
    let t0 = Instant::now();
    let (p, f) = lemma_block(&[6, 8], &["L54", "L7", "L8", "L15", "L19"]);
    report(
        "5 inequality lemmas",
        f == 0,
        t0,
        &format!("{p} bound evaluations"),
    );
}

#[test]
fn criterion_6_classification_family() {
    let t0 = Instant::now();
    // n = 6: exactly one irreducible pair with an explicit intertwiner
    let records = run_sweep(6, 5000, 2, SEED).unwrap();
    let irr: Vec<_> = records.iter().filter(|r| r.irreducible).collect();
    assert_eq!(irr.len(), 1);
    let mut pair = [irr[0].lambda.clone(), irr[0].mu.clone()];
    pair.sort();
    assert_eq!(pair, [ptn(&[4, 2]), ptn(&[5, 1])]);
    assert_eq!(irr[0].iso_label, Some(ptn(&[3, 2, 1])));
    assert!(records.iter().all(|r| r.verdict == Verdict::Pass));
    // the intertwiner itself: invertible by construction of the iso test
    let catalog = SimpleCatalog::symmetric(6);
    let t = sgw_core::functors::tensor(catalog.get(&ptn(&[4, 2])), catalog.get(&ptn(&[5, 1])));
    let iso = iso_simple(catalog.get(&ptn(&[3, 2, 1])), &t, SEED).expect("intertwiner");
    assert_eq!(iso.rank(), t.dim);

    // n = 10: both family pairs positively verified, >= 10 negatives
    // among pairs within the dimension budget, the rest skipped
    let records = run_sweep(10, 5000, 4, SEED).unwrap();
    assert!(records.iter().all(|r| r.verdict != Verdict::Fail));
    let family = sgw_core::partition::gk_family(10).unwrap();
    for (lam, mu, nu) in &family {
        let rec = records
            .iter()
            .find(|r| {
                (&r.lambda == lam && &r.mu == mu) || (&r.lambda == mu && &r.mu == lam)
            })
            .expect("family pair present");
        assert!(rec.irreducible, "{lam} (x) {mu} must be irreducible");
        assert_eq!(rec.iso_label.as_ref(), Some(nu));
        assert_eq!(rec.end_dim, Some(1));
    }
    let negatives = records
        .iter()
        .filter(|r| r.verdict == Verdict::Pass && !r.irreducible)
        .count();
    assert!(negatives >= 10, "only {negatives} negative verifications");
    let skipped = records
        .iter()
        .filter(|r| r.verdict == Verdict::SkippedResource)
        .count();
    report(
        "6 classification family (n=6, n=10)",
        true,
        t0,
        &format!("{negatives} negatives verified, {skipped} pairs skipped-resource"),
    );
}

#[test]
fn criterion_7_no_products_for_even_half() {
    let t0 = Instant::now();
    for n in [4usize, 8] {
        let records = run_sweep(n, 5000, 2, SEED).unwrap();
        assert!(
            records.iter().all(|r| r.verdict == Verdict::Pass),
            "sweep at n={n}"
        );
        assert!(records.iter().all(|r| !r.irreducible), "n={n}");
        assert!(records.iter().all(|r| r.verdict != Verdict::SkippedResource));
    }
    report("7 no irreducible products at n=4, n=8", true, t0, "full sweeps");
}

#[test]
fn criterion_8_brauer_parity() {
    let t0 = Instant::now();
    // decomposition matrices to n = 8: unitriangular and consistent with
    // the catalogued rows; Brauer degrees match constructed dimensions
    for n in 2..=8usize {
        let catalog = SimpleCatalog::symmetric(n);
        let dm = decomposition_matrix(n, &catalog, SEED).unwrap();
        assert!(dm.is_unitriangular(), "n={n}");
        let phi = brauer_characters(&dm);
        let id_class = Partition::new(vec![1; n]).unwrap();
        for (lam, d) in &catalog.entries {
            assert_eq!(phi[lam].value(&id_class), d.dim as i64, "degree of D({lam})");
        }
        if n >= 4 && n % 2 == 0 {
            // S^(n-1,1) row: one D^(n), one D^(n-1,1)
            let row = ptn(&[(n - 1) as u32, 1]);
            assert_eq!(dm.entry(&row, &ptn(&[n as u32])), 1);
            assert_eq!(dm.entry(&row, &row), 1);
        }
        if n >= 6 && n % 2 == 0 {
            // S^(n-2,2) row by congruence class of n mod 4
            let row = ptn(&[(n - 2) as u32, 2]);
            let trivial_mult = if n % 4 == 0 { 0 } else { 1 };
            assert_eq!(dm.entry(&row, &ptn(&[n as u32])), trivial_mult, "n={n}");
            assert_eq!(dm.entry(&row, &ptn(&[(n - 1) as u32, 1])), 1);
            assert_eq!(dm.entry(&row, &row), 1);
        }
    }
    // the distinguished two-row Brauer character at n = 8
    let catalog = SimpleCatalog::symmetric(8);
    let dm = decomposition_matrix(8, &catalog, SEED).unwrap();
    let phi = brauer_characters(&dm);
    let dist = ptn(&[5, 3]);
    for gamma in odd_class_labels(8) {
        let v = phi[&dist].value(&gamma);
        let h = gamma.h();
        assert_eq!(v.abs(), 1i64 << ((h - 1) / 2), "class {gamma}");
        assert_eq!(v.rem_euclid(2) == 1, h <= 2, "parity at {gamma}");
    }
    // product parity classwise for every 2-regular label
    for mu in two_regular_partitions_of(8) {
        let _ = sgw_core::chars::parity_filter(&mu, &dm, &phi);
    }
    report("8 Brauer parity", true, t0, "n <= 8 decomposition + parity facts");
}

#[test]
fn criterion_9_infrastructure() {
    let t0 = Instant::now();
    let mut rng = Rng::new(SEED);
    let random = |rows: usize, cols: usize, rng: &mut Rng| {
        let mut m = GF2Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if rng.next_u64() % 2 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    };
    for _ in 0..25 {
        let m = random(24, 37, &mut rng);
        let (r, rank, _) = m.rref();
        assert_eq!(r.rref().0, r);
        assert_eq!(rank + m.nullspace().dim(), 37);
        let a = random(6, 6, &mut rng);
        let b = random(5, 5, &mut rng);
        let c = random(6, 6, &mut rng);
        let d = random(5, 5, &mut rng);
        assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }
    // module cache round trip, bit exact
    let dir = tempfile::tempdir().unwrap();
    let d = sgw_core::specht::irreducible_module(&ptn(&[5, 1])).unwrap();
    let key = sgw_core::cache::CacheKey::new(6, "D(5,1)");
    sgw_core::cache::cache_store(dir.path(), &key, &d).unwrap();
    let back = sgw_core::cache::cache_load(dir.path(), &key).unwrap();
    assert_eq!(back.gens, d.gens);
    // Norton determinism per seed
    let m = sgw_core::group::perm_module(&[4, 2]);
    let a = norton(&m, 99);
    let b = norton(&m, 99);
    assert_eq!(
        serde_json::to_string(&a.certificate).unwrap(),
        serde_json::to_string(&b.certificate).unwrap()
    );
    assert_eq!(a.irreducible, b.irreducible);
    report("9 infrastructure properties", true, t0, "kernel invariants, cache, determinism");
}
