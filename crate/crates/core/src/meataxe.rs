//! Structural analysis of modules: intertwiner spaces, Norton's
//! irreducibility criterion, composition factors, socle series, direct-sum
//! decompositions, and verification of claimed module structures.
//!
//! Hom spaces are computed by the presentation method: spin the source
//! module from a minimal set of seed vectors, record for every basis
//! vector the word matrix that transports a candidate image, and turn
//! every linear dependency met during the spin into a linear condition on
//! the seed images. This keeps the cost near G * dim(source) matrix
//! multiplications in the *target* dimension, so the bigger module is
//! always placed on the spinning side (via duality when needed).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::gf2::{vec_ops, Echelon, GF2Matrix, Rng, Subspace};
use crate::module::{Group, Module};
use crate::partition::{two_regular_partitions_of, Partition};
use crate::specht::irreducible_module;

/// Multiset of composition factor labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FactorMultiset {
    pub entries: BTreeMap<Partition, usize>,
}

impl FactorMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(label: Partition) -> Self {
        let mut m = Self::new();
        m.add(label, 1);
        m
    }

    pub fn add(&mut self, label: Partition, mult: usize) {
        if mult > 0 {
            *self.entries.entry(label).or_insert(0) += mult;
        }
    }

    pub fn union(&self, other: &FactorMultiset) -> FactorMultiset {
        let mut out = self.clone();
        for (l, m) in &other.entries {
            out.add(l.clone(), *m);
        }
        out
    }

    pub fn mult(&self, label: &Partition) -> usize {
        self.entries.get(label).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn from_pairs(pairs: &[(&Partition, usize)]) -> Self {
        let mut m = Self::new();
        for (l, k) in pairs {
            m.add((*l).clone(), *k);
        }
        m
    }
}

impl fmt::Display for FactorMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .entries
            .iter()
            .map(|(l, m)| format!("({l}):{m}"))
            .collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Basis of the space of module homomorphisms; every basis element has
/// been verified to intertwine the generator actions.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<GF2Matrix>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The element with the given coefficient bits over the basis.
    pub fn element(&self, coeffs: usize) -> GF2Matrix {
        let mut acc = GF2Matrix::zero(self.source_dim, self.target_dim);
        for (k, b) in self.basis.iter().enumerate() {
            if (coeffs >> k) & 1 == 1 {
                acc = acc.add(b);
            }
        }
        acc
    }
}

/// Echelon basis that also tracks, for each stored row, its expression
/// over the originally inserted vectors.
struct TrackedEchelon {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    exprs: Vec<Vec<u64>>,
    expr_width: usize,
}

impl TrackedEchelon {
    fn new(expr_width: usize) -> Self {
        TrackedEchelon {
            rows: Vec::new(),
            pivots: Vec::new(),
            exprs: Vec::new(),
            expr_width,
        }
    }

    /// Insert the original vector number `orig_idx`; false if dependent.
    fn insert(&mut self, v: &[u64], orig_idx: usize) -> bool {
        let mut v = v.to_vec();
        let mut expr = vec_ops::unit(self.expr_width, orig_idx);
        for (i, &p) in self.pivots.iter().enumerate() {
            if vec_ops::get(&v, p) {
                let (row, e) = (self.rows[i].clone(), self.exprs[i].clone());
                vec_ops::xor_into(&mut v, &row);
                vec_ops::xor_into(&mut expr, &e);
            }
        }
        match vec_ops::leading_bit(&v) {
            None => false,
            Some(p) => {
                self.rows.push(v);
                self.pivots.push(p);
                self.exprs.push(expr);
                true
            }
        }
    }

    /// Express v over the original vectors, or None if independent.
    fn express(&self, v: &[u64]) -> Option<Vec<u64>> {
        let mut v = v.to_vec();
        let mut expr = vec_ops::zero(self.expr_width);
        for (i, &p) in self.pivots.iter().enumerate() {
            if vec_ops::get(&v, p) {
                vec_ops::xor_into(&mut v, &self.rows[i]);
                vec_ops::xor_into(&mut expr, &self.exprs[i]);
            }
        }
        if vec_ops::is_zero(&v) {
            Some(expr)
        } else {
            None
        }
    }
}

/// Full space of intertwiners from m to n. Exact; the basis elements are
/// re-verified by multiplication before returning.
pub fn hom_space(m: &Module, n: &Module) -> HomSpace {
    assert_eq!(m.group, n.group, "hom between modules of different groups");
    if m.dim == 0 || n.dim == 0 {
        return HomSpace {
            source_dim: m.dim,
            target_dim: n.dim,
            basis: Vec::new(),
        };
    }
    if n.dim > m.dim {
        // Hom(M, N) = Hom(N*, M*) via transposition; spin the big module.
        let h = hom_space(&n.dual(), &m.dual());
        return HomSpace {
            source_dim: m.dim,
            target_dim: n.dim,
            basis: h.basis.iter().map(|t| t.transpose()).collect(),
        };
    }
    hom_space_inner(m, n)
}

fn hom_space_inner(m: &Module, n: &Module) -> HomSpace {
    let dm = m.dim;
    let dn = n.dim;
    let gens = &m.gens;

    // Phase 1: greedy seed vectors generating m as a module.
    let mut seeds: Vec<usize> = Vec::new();
    {
        let mut ech = Echelon::new(dm);
        let mut queue: Vec<Vec<u64>> = Vec::new();
        let mut next = 0usize;
        while ech.dim() < dm {
            while next < dm {
                let e = vec_ops::unit(dm, next);
                if !ech.contains(&e) {
                    break;
                }
                next += 1;
            }
            let e = vec_ops::unit(dm, next);
            seeds.push(next);
            ech.insert(e.clone());
            queue.push(e);
            let mut head = queue.len() - 1;
            while head < queue.len() {
                let v = queue[head].clone();
                head += 1;
                for g in gens {
                    let u = g.apply_row(&v);
                    if ech.insert(u.clone()).is_some() {
                        queue.push(u);
                    }
                }
            }
        }
    }
    let k = seeds.len();

    // Phase 2: full spin with word-matrix tracking and condition capture.
    let mut ech = TrackedEchelon::new(dm);
    let mut vecs: Vec<Vec<u64>> = Vec::new();
    let mut seed_of: Vec<usize> = Vec::new();
    let mut words: Vec<GF2Matrix> = Vec::new();
    for (si, &j) in seeds.iter().enumerate() {
        let e = vec_ops::unit(dm, j);
        let ok = ech.insert(&e, vecs.len());
        assert!(ok, "seed vectors are independent");
        vecs.push(e);
        seed_of.push(si);
        words.push(GF2Matrix::identity(dn));
    }
    let mut conditions = Echelon::new(k * dn);
    let mut t = 0usize;
    while t < vecs.len() {
        for (gi, g) in gens.iter().enumerate() {
            let u = g.apply_row(&vecs[t]);
            let w_new = words[t].mul(&n.gens[gi]);
            match ech.express(&u) {
                None => {
                    let ok = ech.insert(&u, vecs.len());
                    debug_assert!(ok);
                    vecs.push(u);
                    seed_of.push(seed_of[t]);
                    words.push(w_new);
                }
                Some(expr) => {
                    // T(u) two ways: the difference annihilates the seeds.
                    let mut blocks = vec![GF2Matrix::zero(dn, dn); k];
                    blocks[seed_of[t]] = blocks[seed_of[t]].add(&w_new);
                    for s in 0..vecs.len() {
                        if vec_ops::get(&expr, s) {
                            blocks[seed_of[s]] = blocks[seed_of[s]].add(&words[s]);
                        }
                    }
                    let transposed: Vec<GF2Matrix> =
                        blocks.iter().map(|b| b.transpose()).collect();
                    for c in 0..dn {
                        let mut row = vec_ops::zero(k * dn);
                        let mut any = false;
                        for (j, bt) in transposed.iter().enumerate() {
                            for a in 0..dn {
                                if bt.get(c, a) {
                                    vec_ops::set(&mut row, j * dn + a, true);
                                    any = true;
                                }
                            }
                        }
                        if any {
                            conditions.insert(row);
                        }
                    }
                    if conditions.dim() == k * dn {
                        // conditions already force the zero map
                        return HomSpace {
                            source_dim: dm,
                            target_dim: dn,
                            basis: Vec::new(),
                        };
                    }
                }
            }
        }
        t += 1;
    }

    // Solve for the admissible seed images.
    let cond_matrix = GF2Matrix::from_rows(conditions.rows().to_vec(), k * dn);
    let solutions = cond_matrix.nullspace();

    let b_mat = GF2Matrix::from_rows(vecs.clone(), dm);
    let mut basis = Vec::new();
    for si in 0..solutions.dim() {
        let w = solutions.basis().row(si);
        // seed image rows
        let seed_imgs: Vec<Vec<u64>> = (0..k)
            .map(|j| {
                let mut wj = vec_ops::zero(dn);
                for a in 0..dn {
                    if vec_ops::get(w, j * dn + a) {
                        vec_ops::set(&mut wj, a, true);
                    }
                }
                wj
            })
            .collect();
        // T(b_t) = w_{seed(t)} * W_t, all as row vectors
        let img_rows: Vec<Vec<u64>> = (0..vecs.len())
            .map(|t| words[t].apply_row(&seed_imgs[seed_of[t]]))
            .collect();
        let v_mat = GF2Matrix::from_rows(img_rows, dn);
        let t_mat = b_mat
            .solve_right(&v_mat)
            .expect("basis matrix is invertible");
        for (gi, g) in gens.iter().enumerate() {
            assert_eq!(
                g.mul(&t_mat),
                t_mat.mul(&n.gens[gi]),
                "hom basis element failed intertwiner verification"
            );
        }
        basis.push(t_mat);
    }
    HomSpace {
        source_dim: dm,
        target_dim: dn,
        basis,
    }
}

/// A sum of group-element words in the generator slots; the randomized
/// algebra elements used by the MeatAxe.
#[derive(Clone, Debug, Serialize)]
pub struct AlgebraElement {
    pub words: Vec<Vec<usize>>,
}

impl AlgebraElement {
    pub fn identity_placeholder() -> AlgebraElement {
        AlgebraElement {
            words: vec![Vec::new()],
        }
    }

    pub fn evaluate(&self, m: &Module) -> GF2Matrix {
        let mut acc = GF2Matrix::zero(m.dim, m.dim);
        for w in &self.words {
            acc = acc.add(&m.evaluate_slots(w));
        }
        acc
    }
}

/// Stream of random algebra elements on a fixed module. A pool of
/// well-mixed random group elements is maintained by occasional pairwise
/// products; each draw emits the sum of three to five pool entries. Sums
/// of at least three group elements are needed: g + h = g(1 + g^{-1}h)
/// always has the large fixed space of a group element in its kernel.
pub struct ElementSampler<'a> {
    m: &'a Module,
    pool: Vec<(Vec<usize>, GF2Matrix)>,
    count: usize,
}

impl<'a> ElementSampler<'a> {
    pub fn new(m: &'a Module, rng: &mut Rng) -> Self {
        let mut s = ElementSampler {
            m,
            pool: Vec::new(),
            count: 0,
        };
        let g = m.gens.len().max(1);
        for _ in 0..8 {
            let len = 6 + rng.below(10);
            let w: Vec<usize> = (0..len).map(|_| rng.below(g) % m.gens.len().max(1)).collect();
            let mat = s.m.evaluate_slots(&w);
            s.pool.push((w, mat));
        }
        s
    }

    fn churn(&mut self, rng: &mut Rng) {
        let i = rng.below(self.pool.len());
        let j = rng.below(self.pool.len());
        if i == j {
            return;
        }
        if self.pool[i].0.len() > 160 {
            // re-seed an overgrown slot with a fresh word
            let g = self.m.gens.len().max(1);
            let len = 6 + rng.below(10);
            let w: Vec<usize> = (0..len)
                .map(|_| rng.below(g) % self.m.gens.len().max(1))
                .collect();
            let mat = self.m.evaluate_slots(&w);
            self.pool[i] = (w, mat);
            return;
        }
        let (wj, mj) = self.pool[j].clone();
        let (wi, mi) = &mut self.pool[i];
        wi.extend_from_slice(&wj);
        *mi = mi.mul(&mj);
    }

    pub fn next(&mut self, rng: &mut Rng) -> (AlgebraElement, GF2Matrix) {
        if self.count % 4 == 0 {
            self.churn(rng);
        }
        self.count += 1;
        let k = 3 + rng.below(3);
        let mut words = Vec::new();
        let mut acc = GF2Matrix::zero(self.m.dim, self.m.dim);
        for _ in 0..k {
            let i = rng.below(self.pool.len());
            words.push(self.pool[i].0.clone());
            acc = acc.add(&self.pool[i].1);
        }
        (AlgebraElement { words }, acc)
    }
}

fn left_nullspace(a: &GF2Matrix) -> Subspace {
    a.transpose().nullspace()
}

/// Spin a single vector under the module generators.
pub fn spin_vector(m: &Module, v: &[u64]) -> Subspace {
    let seed = Subspace::spanned_by(m.dim, &GF2Matrix::from_rows(vec![v.to_vec()], m.dim));
    crate::gf2::spin(&seed, &m.gens)
}

#[derive(Clone, Debug, Serialize)]
pub enum NortonOutcome {
    Irreducible,
    /// A proper nonzero invariant subspace was found (basis dimension).
    Reducible { submodule_dim: usize },
}

/// Certificate for an irreducibility decision: which algebra element was
/// used, its nullity, and the seed, so a run can be replayed exactly.
#[derive(Clone, Debug, Serialize)]
pub struct NortonCertificate {
    pub seed: u64,
    pub attempts: usize,
    pub element: AlgebraElement,
    pub nullity: usize,
    pub outcome: NortonOutcome,
}

pub struct NortonResult {
    pub irreducible: bool,
    pub certificate: NortonCertificate,
    pub submodule: Option<Subspace>,
}

/// Norton's criterion with seeded word search; None when no decisive
/// algebra element was found within the attempt budget.
pub fn norton_bounded(m: &Module, seed: u64, max_attempts: usize) -> Option<NortonResult> {
    assert!(m.dim >= 1);
    let mut rng = Rng::new(seed);
    if m.dim == 1 {
        return Some(NortonResult {
            irreducible: true,
            certificate: NortonCertificate {
                seed,
                attempts: 0,
                element: AlgebraElement::identity_placeholder(),
                nullity: 0,
                outcome: NortonOutcome::Irreducible,
            },
            submodule: None,
        });
    }
    let transposed: Vec<GF2Matrix> = m.gens.iter().map(|g| g.transpose()).collect();
    let mut sampler = ElementSampler::new(m, &mut rng);
    for attempt in 0..max_attempts {
        let (z, zm) = sampler.next(&mut rng);
        let null = left_nullspace(&zm);
        let nullity = null.dim();
        if nullity == 0 {
            continue;
        }
        let reducible = |sub: Subspace, attempt: usize, z: AlgebraElement| NortonResult {
            irreducible: false,
            certificate: NortonCertificate {
                seed,
                attempts: attempt + 1,
                element: z,
                nullity,
                outcome: NortonOutcome::Reducible {
                    submodule_dim: sub.dim(),
                },
            },
            submodule: Some(sub),
        };
        // spin vectors of the nullspace: exhaustively when the nullity is
        // small, a sample of basis vectors and combinations otherwise
        let exhaustive = nullity <= 4;
        let probes: Vec<Vec<u64>> = if exhaustive {
            (1usize..(1 << nullity))
                .map(|mask| {
                    let mut v = vec_ops::zero(m.dim);
                    for b in 0..nullity {
                        if (mask >> b) & 1 == 1 {
                            vec_ops::xor_into(&mut v, null.basis().row(b));
                        }
                    }
                    v
                })
                .collect()
        } else {
            let mut probes: Vec<Vec<u64>> = vec![null.basis().row(0).to_vec()];
            let mut v = vec_ops::zero(m.dim);
            for b in 0..nullity {
                if rng.next_u64() % 2 == 1 {
                    vec_ops::xor_into(&mut v, null.basis().row(b));
                }
            }
            if !vec_ops::is_zero(&v) {
                probes.push(v);
            }
            probes
        };
        let mut all_full = true;
        for v in &probes {
            let spun = spin_vector(m, v);
            if spun.dim() < m.dim {
                return Some(reducible(spun, attempt, z));
            }
        }
        // transposed side: a proper spin certifies reducibility through
        // its perp; a full spin completes the criterion when the direct
        // side was exhausted
        let null_t = zm.nullspace();
        let w = null_t.basis().row(0).to_vec();
        let seed_space = Subspace::spanned_by(m.dim, &GF2Matrix::from_rows(vec![w], m.dim));
        let spun_t = crate::gf2::spin(&seed_space, &transposed);
        if spun_t.dim() < m.dim {
            let perp = spun_t.basis().nullspace();
            debug_assert!(perp.dim() > 0 && perp.dim() < m.dim);
            return Some(reducible(perp, attempt, z));
        }
        all_full &= spun_t.dim() == m.dim;
        if exhaustive && all_full {
            return Some(NortonResult {
                irreducible: true,
                certificate: NortonCertificate {
                    seed,
                    attempts: attempt + 1,
                    element: z,
                    nullity,
                    outcome: NortonOutcome::Irreducible,
                },
                submodule: None,
            });
        }
    }
    None
}

/// Norton's criterion; panics if the word search is exhausted (callers
/// with a catalog at hand should prefer `decide_irreducible`).
pub fn norton(m: &Module, seed: u64) -> NortonResult {
    norton_bounded(m, seed, 400).unwrap_or_else(|| {
        panic!(
            "norton: no usable algebra element found for {} (dim {})",
            m.label, m.dim
        )
    })
}

/// Decide irreducibility with the randomized criterion first and an exact
/// socle probe as fallback: scanning the catalog simples by dimension,
/// the first nonzero hom space either exhibits a proper submodule or
/// identifies the module as simple.
pub fn decide_irreducible(
    m: &Module,
    catalog: &SimpleCatalog,
    seed: u64,
) -> (bool, Option<Subspace>) {
    // The randomized search evaluates algebra elements as full matrix
    // products, so its cost grows cubically; past a threshold the exact
    // socle probe wins outright.
    if m.dim <= 1000 {
        if let Some(r) = norton_bounded(m, seed, 60) {
            return (r.irreducible, r.submodule);
        }
    }
    socle_probe(m, catalog)
}

/// Exact irreducibility decision: scan the catalog simples by dimension;
/// the first nonzero hom space either exhibits a proper submodule or
/// identifies the module as simple.
fn socle_probe(m: &Module, catalog: &SimpleCatalog) -> (bool, Option<Subspace>) {
    // shortcut: a direct isomorphism onto a same-dimension simple avoids
    // the quadratically more expensive positive hom computation
    for (_, d) in &catalog.entries {
        if d.dim == m.dim && iso_simple(d, m, 0xB0).is_some() {
            return (true, None);
        }
    }
    let md = m.dual();
    let mut entries: Vec<&(Partition, Module)> = catalog.entries.iter().collect();
    entries.sort_by_key(|(_, d)| d.dim);
    for (_, d) in entries {
        if d.dim > m.dim {
            break;
        }
        // Hom(d, m) = Hom(m*, d*) transposed; spin the big side once per
        // candidate against the precomputed dual.
        let h = hom_space_inner(&md, &d.dual());
        if !h.basis.is_empty() {
            if d.dim == m.dim {
                return (true, None);
            }
            let image = Subspace::spanned_by(m.dim, &h.basis[0].transpose());
            return (false, Some(image));
        }
    }
    unreachable!("socle of a nonzero module meets the simple catalog");
}

pub fn is_irreducible(m: &Module, seed: u64) -> bool {
    norton(m, seed).irreducible
}

/// Catalog of the simple modules for one acting group, used to identify
/// composition factors.
pub struct SimpleCatalog {
    pub group: Group,
    pub entries: Vec<(Partition, Module)>,
}

impl SimpleCatalog {
    /// All D^lambda for 2-regular lambda of n, descending lexicographic.
    /// Modules are cached on disk when SGW_CACHE_DIR is set.
    pub fn symmetric(n: usize) -> SimpleCatalog {
        let cache_dir = crate::cache::cache_dir_from_env();
        let entries = two_regular_partitions_of(n)
            .into_iter()
            .map(|lam| {
                let key = crate::cache::CacheKey::new(n, format!("D({lam})"));
                if let Some(dir) = &cache_dir {
                    if let Some(m) = crate::cache::cache_load(dir, &key) {
                        return (lam, m);
                    }
                }
                let d = irreducible_module(&lam).expect("2-regular");
                if let Some(dir) = &cache_dir {
                    let _ = crate::cache::cache_store(dir, &key, &d);
                }
                (lam, d)
            })
            .collect();
        SimpleCatalog {
            group: Group::Symmetric(n),
            entries,
        }
    }

    /// Simples of S_m x S_2 over GF(2): D^nu (x) triv, labeled by nu.
    pub fn young_two(m: usize) -> SimpleCatalog {
        let triv2 = Module::trivial(Group::Symmetric(2), "D(2)");
        let entries = two_regular_partitions_of(m)
            .into_iter()
            .map(|nu| {
                let d = irreducible_module(&nu).expect("2-regular");
                let prod =
                    crate::module::outer_tensor(&d, &triv2, format!("D({nu})(x)D(2)"));
                (nu, prod)
            })
            .collect();
        SimpleCatalog {
            group: Group::Young(vec![m as u32, 2]),
            entries,
        }
    }

    pub fn get(&self, label: &Partition) -> &Module {
        &self
            .entries
            .iter()
            .find(|(l, _)| l == label)
            .unwrap_or_else(|| panic!("no catalog entry {label}"))
            .1
    }

    /// Identify a module known to be simple: match by dimension, then
    /// demand a nonzero hom (equivalently an isomorphism).
    pub fn identify(&self, m: &Module, seed: u64) -> Partition {
        let candidates: Vec<&(Partition, Module)> = self
            .entries
            .iter()
            .filter(|(_, d)| d.dim == m.dim)
            .collect();
        assert!(
            !candidates.is_empty(),
            "no simple of dimension {} in catalog ({})",
            m.dim,
            m.label
        );
        for (lam, d) in &candidates {
            if iso_simple(d, m, seed).is_some() {
                return lam.clone();
            }
        }
        panic!("simple module {} (dim {}) matches no catalog entry", m.label, m.dim);
    }
}

/// Fast isomorphism test between two modules at least one of which is
/// known simple: find an algebra element of nullity one on `a`, spin the
/// null vector with a recorded script, replay on `b`, and verify.
pub fn iso_simple(a: &Module, b: &Module, seed: u64) -> Option<GF2Matrix> {
    if a.dim != b.dim || a.dim == 0 {
        return None;
    }
    let mut rng = Rng::new(seed ^ 0xD1CE);
    if a.gens.is_empty() {
        return Some(GF2Matrix::identity(a.dim));
    }
    let mut sampler = ElementSampler::new(a, &mut rng);
    for _attempt in 0..200 {
        let (z, za) = sampler.next(&mut rng);
        let na = left_nullspace(&za);
        if na.dim() != 1 {
            continue;
        }
        let zb = z.evaluate(b);
        let nb = left_nullspace(&zb);
        if nb.dim() != 1 {
            return None; // nullities of a matching element must agree
        }
        let va = na.basis().row(0).to_vec();
        let vb = nb.basis().row(0).to_vec();

        // spin va with provenance
        let mut vecs = vec![va];
        let mut prov: Vec<Option<(usize, usize)>> = vec![None];
        let mut ech = Echelon::new(a.dim);
        ech.insert(vecs[0].clone());
        let mut t = 0;
        while t < vecs.len() && vecs.len() < a.dim {
            for (gi, g) in a.gens.iter().enumerate() {
                let u = g.apply_row(&vecs[t]);
                if ech.insert(u.clone()).is_some() {
                    vecs.push(u);
                    prov.push(Some((t, gi)));
                    if vecs.len() == a.dim {
                        break;
                    }
                }
            }
            t += 1;
        }
        if vecs.len() < a.dim {
            return None; // a is not generated by its null vector: not simple
        }
        // replay on b
        let mut imgs = vec![vb];
        for p in prov.iter().skip(1) {
            let (pt, gi) = p.unwrap();
            imgs.push(b.gens[gi].apply_row(&imgs[pt]));
        }
        let ba = GF2Matrix::from_rows(vecs, a.dim);
        let bb = GF2Matrix::from_rows(imgs, b.dim);
        let t_mat = ba.solve_right(&bb).expect("spin basis invertible");
        let intertwines = a
            .gens
            .iter()
            .zip(b.gens.iter())
            .all(|(ga, gb)| ga.mul(&t_mat) == t_mat.mul(gb));
        if intertwines && t_mat.rank() == a.dim {
            return Some(t_mat);
        }
        return None;
    }
    // fall back on the exact hom space
    let h = hom_space(a, b);
    for k in 1..(1usize << h.dim().min(12)) {
        let t = h.element(k);
        if t.rank() == a.dim {
            return Some(t);
        }
    }
    None
}

/// Search for any isomorphism between modules of equal dimension.
pub fn find_iso(a: &Module, b: &Module, seed: u64) -> Option<GF2Matrix> {
    if a.dim != b.dim {
        return None;
    }
    if a.dim == 0 {
        return Some(GF2Matrix::zero(0, 0));
    }
    let h = hom_space(a, b);
    let e = h.dim();
    if e == 0 {
        return None;
    }
    if e <= 14 {
        for k in 1..(1usize << e) {
            let t = h.element(k);
            if t.rank() == a.dim {
                return Some(t);
            }
        }
        None
    } else {
        let mut rng = Rng::new(seed ^ 0x150);
        for _ in 0..400 {
            let k = (rng.next_u64() as usize) & ((1usize << e.min(63)) - 1);
            if k == 0 {
                continue;
            }
            let t = h.element(k);
            if t.rank() == a.dim {
                return Some(t);
            }
        }
        None
    }
}

/// Composition factor inventory by recursive splitting.
pub fn chop(m: &Module, catalog: &SimpleCatalog, seed: u64) -> FactorMultiset {
    let mut out = FactorMultiset::new();
    let mut stack = vec![m.clone()];
    let mut counter = 0u64;
    while let Some(cur) = stack.pop() {
        if cur.dim == 0 {
            continue;
        }
        counter += 1;
        let (irr, sub) = decide_irreducible(&cur, catalog, seed.wrapping_add(counter));
        if irr {
            out.add(catalog.identify(&cur, seed.wrapping_add(counter)), 1);
        } else {
            let w = sub.expect("reducible verdict carries a submodule");
            stack.push(cur.submodule(&w));
            stack.push(cur.quotient(&w).0);
        }
    }
    debug_assert_eq!(
        out.entries
            .iter()
            .map(|(l, k)| catalog.get(l).dim * k)
            .sum::<usize>(),
        m.dim,
        "factor dimensions must add up"
    );
    out
}

/// Socle as a subspace together with its semisimple decomposition.
pub fn socle_with_space(m: &Module, catalog: &SimpleCatalog) -> (FactorMultiset, Subspace) {
    let mut labels = FactorMultiset::new();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (lam, d) in &catalog.entries {
        if d.dim > m.dim || m.dim == 0 {
            continue;
        }
        let h = hom_space(d, m);
        labels.add(lam.clone(), h.dim());
        for t in &h.basis {
            for r in 0..t.rows() {
                rows.push(t.row(r).to_vec());
            }
        }
    }
    let space = Subspace::spanned_by(m.dim, &GF2Matrix::from_rows(rows, m.dim));
    (labels, space)
}

pub fn socle(m: &Module, catalog: &SimpleCatalog) -> FactorMultiset {
    socle_with_space(m, catalog).0
}

pub fn head(m: &Module, catalog: &SimpleCatalog) -> FactorMultiset {
    socle(&m.dual(), catalog)
}

/// Socle series, bottom layer first.
pub fn socle_series(m: &Module, catalog: &SimpleCatalog) -> Vec<FactorMultiset> {
    let mut layers = Vec::new();
    let mut cur = m.clone();
    while cur.dim > 0 {
        let (labels, space) = socle_with_space(&cur, catalog);
        assert!(space.dim() > 0, "nonzero module has nonzero socle");
        layers.push(labels);
        cur = cur.quotient(&space).0;
    }
    layers
}

/// A claimed layered structure: socle series layers bottom-up, a
/// uniseriality flag, and optionally a direct-sum decomposition into
/// sub-claims.
#[derive(Clone, Debug, Serialize)]
pub struct StructureClaim {
    pub layers: Vec<FactorMultiset>,
    pub uniserial: bool,
    pub summands: Option<Vec<StructureClaim>>,
}

impl StructureClaim {
    pub fn uniserial_chain(labels: Vec<Partition>) -> StructureClaim {
        StructureClaim {
            layers: labels.into_iter().map(FactorMultiset::singleton).collect(),
            uniserial: true,
            summands: None,
        }
    }

    pub fn layered(layers: Vec<FactorMultiset>) -> StructureClaim {
        StructureClaim {
            layers,
            uniserial: false,
            summands: None,
        }
    }

    fn factor_multiset(&self) -> FactorMultiset {
        let mut acc = FactorMultiset::new();
        for l in &self.layers {
            acc = acc.union(l);
        }
        acc
    }
}

/// Check a claimed structure against the computed socle series (and, for
/// summand claims, against an explicit direct-sum decomposition). Returns
/// Err with the first mismatching layer.
pub fn verify_structure(
    m: &Module,
    claim: &StructureClaim,
    catalog: &SimpleCatalog,
    seed: u64,
) -> Result<(), String> {
    if let Some(subclaims) = &claim.summands {
        let parts = decompose_fully(m, seed);
        if parts.len() != subclaims.len() {
            return Err(format!(
                "expected {} summands, found {}",
                subclaims.len(),
                parts.len()
            ));
        }
        // match sub-claims to summands greedily by factor content
        let mut used = vec![false; parts.len()];
        for sc in subclaims {
            let want = sc.factor_multiset();
            let mut found = false;
            for (i, p) in parts.iter().enumerate() {
                if used[i] {
                    continue;
                }
                let have = chop(p, catalog, seed);
                if have == want && verify_structure(p, sc, catalog, seed).is_ok() {
                    used[i] = true;
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(format!("no summand matches claim {want}", want = want));
            }
        }
        return Ok(());
    }
    let layers = socle_series(m, catalog);
    if layers.len() != claim.layers.len() {
        return Err(format!(
            "socle series has {} layers, claim has {}",
            layers.len(),
            claim.layers.len()
        ));
    }
    for (i, (got, want)) in layers.iter().zip(claim.layers.iter()).enumerate() {
        if got != want {
            return Err(format!("layer {i} (from bottom): got {got}, want {want}"));
        }
        if claim.uniserial && got.total() != 1 {
            return Err(format!("layer {i} is not simple: {got}"));
        }
    }
    Ok(())
}

/// Search the endomorphism ring for an idempotent other than 0 and 1.
/// Enumerates coefficient vectors in ascending order for determinism.
pub fn nontrivial_idempotent(m: &Module, seed: u64) -> Result<Option<GF2Matrix>, String> {
    let end = hom_space(m, m);
    let e = end.dim();
    let id = GF2Matrix::identity(m.dim);
    if e <= 20 {
        for k in 1..(1usize << e) {
            let t = end.element(k);
            if t.mul(&t) == t && !t.is_zero() && t != id {
                return Ok(Some(t));
            }
        }
        Ok(None)
    } else {
        // Fitting fallback: a random endomorphism phi splits
        // M = ker(phi^N) + im(phi^N); a nontrivial split yields an
        // idempotent (the projection onto the image part).
        let mut rng = Rng::new(seed ^ 0xF177);
        for _ in 0..200 {
            let k = (rng.next_u64() as usize) & ((1usize << e.min(63)) - 1);
            if k == 0 {
                continue;
            }
            let phi = end.element(k);
            let p = phi.pow(m.dim.next_power_of_two() as u64);
            let ker = left_nullspace(&p);
            if ker.dim() == 0 || ker.dim() == m.dim {
                continue;
            }
            let im = Subspace::spanned_by(m.dim, &p);
            // idempotent: project along ker onto im
            let stacked = im.basis().stack(ker.basis());
            let inv = stacked
                .inverse()
                .expect("Fitting decomposition is a direct sum");
            let mut proj_target = im.basis().clone();
            let zero = GF2Matrix::zero(ker.dim(), m.dim);
            proj_target = proj_target.stack(&zero);
            let idem = inv.mul(&proj_target);
            if idem.mul(&idem) == idem && !idem.is_zero() && idem != id {
                return Ok(Some(idem));
            }
        }
        Err(format!(
            "endomorphism ring too large ({e}) and Fitting search inconclusive"
        ))
    }
}

/// True iff the endomorphism ring has no idempotents besides 0 and 1.
pub fn is_indecomposable(m: &Module, seed: u64) -> Result<bool, String> {
    assert!(m.dim >= 1);
    Ok(nontrivial_idempotent(m, seed)?.is_none())
}

/// Full direct-sum decomposition into indecomposable summands.
pub fn decompose_fully(m: &Module, seed: u64) -> Vec<Module> {
    if m.dim == 0 {
        return Vec::new();
    }
    match nontrivial_idempotent(m, seed).expect("decomposable search") {
        None => vec![m.clone()],
        Some(e) => {
            let im = Subspace::spanned_by(m.dim, &e);
            let ker = left_nullspace(&e);
            assert_eq!(im.dim() + ker.dim(), m.dim);
            let mut out = decompose_fully(&m.submodule(&im), seed);
            out.extend(decompose_fully(&m.submodule(&ker), seed));
            out
        }
    }
}

/// Whether the restriction to the alternating group splits: detected by
/// an endomorphism ring of dimension at least two.
pub fn splits_over_alternating(m: &Module) -> bool {
    let n = m.group.degree();
    assert!(n >= 3);
    let r = crate::functors::restrict(m, &crate::group::SubgroupKind::Alternating);
    hom_space(&r, &r).dim() >= 2
}

/// Injective hom witness: an element of Hom(a, b) of full source rank.
pub fn injective_hom(a: &Module, b: &Module) -> Option<GF2Matrix> {
    let h = hom_space(a, b);
    let e = h.dim();
    for k in 1..(1usize << e.min(16)) {
        let t = h.element(k);
        if t.rank() == a.dim {
            return Some(t);
        }
    }
    None
}

/// Surjective hom witness: an element of Hom(a, b) of full target rank.
pub fn surjective_hom(a: &Module, b: &Module) -> Option<GF2Matrix> {
    let h = hom_space(a, b);
    let e = h.dim();
    for k in 1..(1usize << e.min(16)) {
        let t = h.element(k);
        if t.rank() == b.dim {
            return Some(t);
        }
    }
    None
}

/// All distinct images of injective homs a -> b (for uniqueness claims).
pub fn injective_images(a: &Module, b: &Module) -> Vec<Subspace> {
    let h = hom_space(a, b);
    let e = h.dim();
    assert!(e <= 16, "too many homs to enumerate");
    let mut images: Vec<Subspace> = Vec::new();
    for k in 1..(1usize << e) {
        let t = h.element(k);
        if t.rank() == a.dim {
            let img = Subspace::spanned_by(b.dim, &t);
            if !images.contains(&img) {
                images.push(img);
            }
        }
    }
    images
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functors::{restrict_to_symmetric, tensor};
    use crate::group::perm_module;
    use crate::partition::ptn;

    #[test]
    fn end_of_simple_is_one_dimensional() {
        for lam in two_regular_partitions_of(6) {
            let d = irreducible_module(&lam).unwrap();
            assert_eq!(hom_space(&d, &d).dim(), 1, "{lam}");
        }
    }

    #[test]
    fn norton_examples_at_n6() {
        let d = irreducible_module(&ptn(&[5, 1])).unwrap();
        assert!(is_irreducible(&d, 42));
        let m = perm_module(&[5, 1]);
        assert!(!is_irreducible(&m, 42));
        let t = tensor(
            &irreducible_module(&ptn(&[4, 2])).unwrap(),
            &irreducible_module(&ptn(&[5, 1])).unwrap(),
        );
        assert!(is_irreducible(&t, 42));
    }

    #[test]
    fn norton_certificate_deterministic() {
        let m = perm_module(&[4, 2]);
        let a = norton(&m, 7);
        let b = norton(&m, 7);
        assert_eq!(
            serde_json::to_string(&a.certificate).unwrap(),
            serde_json::to_string(&b.certificate).unwrap()
        );
    }

    #[test]
    fn chop_m51_at_n6() {
        let catalog = SimpleCatalog::symmetric(6);
        let factors = chop(&perm_module(&[5, 1]), &catalog, 1);
        let mut want = FactorMultiset::new();
        want.add(ptn(&[6]), 2);
        want.add(ptn(&[5, 1]), 1);
        assert_eq!(factors, want);
    }

    #[test]
    fn socle_and_head_of_simple() {
        let catalog = SimpleCatalog::symmetric(5);
        let d = irreducible_module(&ptn(&[4, 1])).unwrap();
        assert_eq!(socle(&d, &catalog), FactorMultiset::singleton(ptn(&[4, 1])));
        assert_eq!(head(&d, &catalog), FactorMultiset::singleton(ptn(&[4, 1])));
    }

    #[test]
    fn socle_equals_head_of_dual() {
        let catalog = SimpleCatalog::symmetric(5);
        let m = perm_module(&[3, 1, 1]);
        assert_eq!(socle(&m, &catalog), head(&m.dual(), &catalog));
    }

    #[test]
    fn m41_splits_into_two_simples() {
        // the permutation module on (n-2,1) for odd degree splits
        let catalog = SimpleCatalog::symmetric(5);
        let m = perm_module(&[4, 1]);
        assert!(!is_indecomposable(&m, 3).unwrap());
        let parts = decompose_fully(&m, 3);
        assert_eq!(parts.len(), 2);
        let mut dims: Vec<usize> = parts.iter().map(|p| p.dim).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 4]);
        let _ = catalog;
    }

    #[test]
    fn hom_respects_multiplicity_bound() {
        // dim Hom(A, B) <= [A : soc B] when soc(B) is simple
        let catalog = SimpleCatalog::symmetric(6);
        let s = crate::specht::specht_module(&ptn(&[4, 2]));
        let soc = socle(&s, &catalog);
        assert_eq!(soc.total(), 1);
        let target = soc.entries.keys().next().unwrap().clone();
        let m = perm_module(&[4, 2]);
        let h = hom_space(&m, &s);
        let mult = chop(&m, &catalog, 9).mult(&target);
        assert!(h.dim() <= mult, "{} > {}", h.dim(), mult);
    }

    #[test]
    fn restriction_of_js_module_stays_irreducible() {
        let d = irreducible_module(&ptn(&[4, 2])).unwrap();
        let r = restrict_to_symmetric(&d, 5);
        assert!(is_irreducible(&r, 11));
    }

    #[test]
    fn trivial_does_not_split_over_alternating() {
        let t = Module::trivial(Group::Symmetric(6), "1");
        assert!(!splits_over_alternating(&t));
    }
}
