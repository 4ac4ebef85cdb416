//! Symmetric group infrastructure: permutations, tabloids and permutation
//! modules, Jucys-Murphy elements, subgroup generator words, and induction
//! from Young subgroups via minimal coset representatives.

use std::collections::HashMap;

use crate::gf2::GF2Matrix;
use crate::module::{Group, Module};
use crate::partition::Partition;

/// A permutation of {0..n-1}. Composition is left to right:
/// (p.compose(q))(x) = q(p(x)), matching right actions on row vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Permutation {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(!seen[i], "not a bijection");
            seen[i] = true;
        }
        Permutation { images }
    }

    /// The adjacent transposition s_i = (i, i+1), 1-based Coxeter index.
    pub fn adjacent(n: usize, i: usize) -> Permutation {
        assert!((1..n).contains(&i));
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// self then other.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut ord = 1;
        while !p.is_identity() {
            p = p.compose(self);
            ord += 1;
        }
        ord
    }
}

/// Decompose a permutation into adjacent transpositions: returns 1-based
/// Coxeter indices whose left-to-right product equals p. Bubble sort on
/// the one-line form, so the word is deterministic (and reduced).
pub fn perm_to_coxeter_word(p: &Permutation) -> Vec<usize> {
    let n = p.degree();
    // We need s-indices w_1..w_L with (s_{w_1} * ... * s_{w_L})(x) = p(x).
    // Sort the inverse one-line form; each swap contributes a generator.
    let mut line: Vec<usize> = (0..n).map(|x| p.inverse().apply(x)).collect();
    let mut word = Vec::new();
    loop {
        let mut swapped = false;
        for i in 0..n.saturating_sub(1) {
            if line[i] > line[i + 1] {
                line.swap(i, i + 1);
                word.push(i + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    word.reverse();
    debug_assert_eq!(evaluate_word_as_perm(n, &word), *p);
    word
}

fn evaluate_word_as_perm(n: usize, word: &[usize]) -> Permutation {
    let mut p = Permutation::identity(n);
    for &i in word {
        p = p.compose(&Permutation::adjacent(n, i));
    }
    p
}

/// A tabloid of shape alpha, canonically stored as the row index of each
/// point: word[x] = row containing x (0-based rows).
type TabloidWord = Vec<u8>;

/// The tabloid basis of the permutation module for a composition: all row
/// assignments, sorted lexicographically on the tuple of sorted row sets.
pub struct TabloidBasis {
    pub alpha: Vec<u32>,
    pub words: Vec<TabloidWord>,
    index: HashMap<TabloidWord, usize>,
}

impl TabloidBasis {
    pub fn new(alpha: &[u32]) -> TabloidBasis {
        let n: usize = alpha.iter().map(|&a| a as usize).sum();
        let mut words = Vec::new();
        let mut counts: Vec<u32> = alpha.to_vec();
        let mut cur = vec![0u8; n];
        fn rec(
            x: usize,
            n: usize,
            counts: &mut Vec<u32>,
            cur: &mut Vec<u8>,
            out: &mut Vec<TabloidWord>,
        ) {
            if x == n {
                out.push(cur.clone());
                return;
            }
            for r in 0..counts.len() {
                if counts[r] > 0 {
                    counts[r] -= 1;
                    cur[x] = r as u8;
                    rec(x + 1, n, counts, cur, out);
                    counts[r] += 1;
                }
            }
        }
        rec(0, n, &mut counts, &mut cur, &mut words);
        // canonical order: lexicographic on the tuple of sorted row sets
        words.sort_by_key(|w| row_sets(w, alpha.len()));
        let index = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        TabloidBasis {
            alpha: alpha.to_vec(),
            words,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn index_of(&self, word: &TabloidWord) -> usize {
        self.index[word]
    }

    /// Index permutation of the action of a group element: tabloid t goes
    /// to the tabloid whose row sets are the p-images of t's row sets.
    pub fn action(&self, p: &Permutation) -> Vec<usize> {
        let pinv = p.inverse();
        self.words
            .iter()
            .map(|w| {
                let moved: TabloidWord = (0..w.len()).map(|x| w[pinv.apply(x)]).collect();
                self.index_of(&moved)
            })
            .collect()
    }
}

fn row_sets(word: &TabloidWord, rows: usize) -> Vec<Vec<u8>> {
    let mut sets = vec![Vec::new(); rows];
    for (x, &r) in word.iter().enumerate() {
        sets[r as usize].push(x as u8);
    }
    sets
}

/// The permutation module on tabloids of a composition of n, with the
/// Coxeter generators of S_n acting by permutation matrices.
pub fn perm_module(alpha: &[u32]) -> Module {
    let n: usize = alpha.iter().map(|&a| a as usize).sum();
    let basis = TabloidBasis::new(alpha);
    let gens = (1..n)
        .map(|i| GF2Matrix::permutation(&basis.action(&Permutation::adjacent(n, i))))
        .collect();
    let parts: Vec<String> = alpha.iter().map(|a| a.to_string()).collect();
    Module::new(
        Group::Symmetric(n),
        gens,
        format!("M({})", parts.join(",")),
    )
}

/// Word of Coxeter indices for the transposition (j, k), 1 <= j < k <= n.
pub fn transposition_word(j: usize, k: usize) -> Vec<usize> {
    assert!(j < k);
    let mut w: Vec<usize> = (j..k).collect();
    let mut back: Vec<usize> = (j..k - 1).rev().collect();
    w.append(&mut back);
    w
}

/// Matrix of the Jucys-Murphy element X_k = sum of (j k) for j < k on a
/// module whose group contains s_1..s_{k-1}.
pub fn jm_matrix(m: &Module, k: usize) -> GF2Matrix {
    assert!(k >= 2 && k <= m.group.degree());
    let mut acc = GF2Matrix::zero(m.dim, m.dim);
    for j in 1..k {
        let slots: Vec<usize> = transposition_word(j, k)
            .iter()
            .map(|&i| m.slot_of_coxeter(i))
            .collect();
        acc = acc.add(&m.evaluate_slots(&slots));
    }
    acc
}

/// Matrix of the sum of all transpositions of S_k acting on a module
/// (the central element used to split by block-content parity).
pub fn transposition_sum(m: &Module, k: usize) -> GF2Matrix {
    let mut acc = GF2Matrix::zero(m.dim, m.dim);
    for t in 2..=k {
        acc = acc.add(&jm_matrix(m, t));
    }
    acc
}

/// Named subgroups and the generator words that realize them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupKind {
    /// S_{n-1}: s_1..s_{n-2}.
    LastPointStabilizer,
    /// Young subgroup of a composition.
    Young(Vec<u32>),
    /// A_n: words s_1 s_k for 2 <= k <= n-1.
    Alternating,
}

/// Generator words (1-based Coxeter indices) of a subgroup of S_n.
pub fn subgroup_generators(kind: &SubgroupKind, n: usize) -> Vec<Vec<usize>> {
    match kind {
        SubgroupKind::LastPointStabilizer => {
            assert!(n >= 2);
            (1..n - 1).map(|i| vec![i]).collect()
        }
        SubgroupKind::Young(alpha) => {
            let total: usize = alpha.iter().map(|&a| a as usize).sum();
            assert_eq!(total, n, "composition must sum to n");
            Group::Young(alpha.clone())
                .coxeter_indices()
                .unwrap()
                .iter()
                .map(|&i| vec![i])
                .collect()
        }
        SubgroupKind::Alternating => {
            assert!(n >= 3);
            (2..n).map(|k| vec![1, k]).collect()
        }
    }
}

/// Cosets of a Young subgroup, realized by tabloids, with minimal-length
/// representatives (k-th smallest of block i goes to k-th smallest of
/// row i).
struct YoungCosets {
    n: usize,
    blocks: Vec<Vec<usize>>,
    basis: TabloidBasis,
}

impl YoungCosets {
    fn new(alpha: &[u32]) -> YoungCosets {
        let n: usize = alpha.iter().map(|&a| a as usize).sum();
        let mut blocks = Vec::new();
        let mut start = 0usize;
        for &a in alpha {
            blocks.push((start..start + a as usize).collect());
            start += a as usize;
        }
        YoungCosets {
            n,
            blocks,
            basis: TabloidBasis::new(alpha),
        }
    }

    fn count(&self) -> usize {
        self.basis.dim()
    }

    fn representative(&self, idx: usize) -> Permutation {
        let word = &self.basis.words[idx];
        let sets = row_sets(word, self.blocks.len());
        let mut images = vec![0usize; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for (k, &x) in block.iter().enumerate() {
                images[x] = sets[b][k] as usize;
            }
        }
        Permutation::from_images(images)
    }

    /// Coset index of an arbitrary permutation.
    fn coset_of(&self, p: &Permutation) -> usize {
        // the tabloid with row b = p(block_b)
        let mut word = vec![0u8; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                word[p.apply(x)] = b as u8;
            }
        }
        self.basis.index_of(&word)
    }
}

/// Induce a module for a Young subgroup S_alpha up to S_n (n = |alpha|).
/// The basis is coset-major: index = coset * dim(m) + inner.
pub fn induce(m: &Module, label: impl Into<String>) -> Module {
    let Group::Young(alpha) = &m.group else {
        panic!("induce expects a Young-subgroup module; got {:?}", m.group)
    };
    let n = m.group.degree();
    let cosets = YoungCosets::new(alpha);
    let t = cosets.count();
    let d = m.dim;
    let dim = t * d;
    let mut gens = Vec::new();
    for i in 1..n {
        let s = Permutation::adjacent(n, i);
        let mut g = GF2Matrix::zero(dim, dim);
        for k in 0..t {
            // factor sigma_k * s = h * sigma_{k'} with h in S_alpha
            let p = cosets.representative(k).compose(&s);
            let k2 = cosets.coset_of(&p);
            let h = p.compose(&cosets.representative(k2).inverse());
            let block = m.evaluate_perm(&h);
            for r in 0..d {
                for c in 0..d {
                    if block.get(r, c) {
                        g.set(k * d + r, k2 * d + c, true);
                    }
                }
            }
        }
        gens.push(g);
    }
    Module::new(Group::Symmetric(n), gens, label)
}

/// Reinterpret an S_n-module as a module for the Young subgroup
/// S_(n, extra_1, ...) of a larger symmetric group, for induction.
pub fn as_young_factor(m: &Module, alpha: &[u32]) -> Module {
    let Group::Symmetric(n) = m.group else {
        panic!("as_young_factor expects a symmetric-group module")
    };
    assert_eq!(alpha[0] as usize, n);
    assert!(alpha[1..].iter().all(|&a| a == 1));
    let group = Group::Young(alpha.to_vec());
    // s_1..s_{n-1} act as in m; nothing else is a generator of the
    // Young subgroup because the later blocks are singletons.
    assert_eq!(group.generator_count(), m.gens.len());
    Module::new(group, m.gens.clone(), m.label.clone())
}

/// The trivial module induced from A_n to S_n: 2-dimensional, every
/// Coxeter generator acts by the coordinate swap.
pub fn induced_from_alternating_trivial(n: usize) -> Module {
    assert!(n >= 2);
    let swap = GF2Matrix::permutation(&[1, 0]);
    Module::new(
        Group::Symmetric(n),
        vec![swap; n - 1],
        format!("1^(A_{n} -> S_{n})"),
    )
}

/// Partition describing a composition's sorted shape, for labels.
pub fn composition_of_partition(lam: &Partition) -> Vec<u32> {
    lam.parts().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::ptn;

    #[test]
    fn coxeter_word_round_trip() {
        let p = Permutation::from_images(vec![2, 0, 3, 1, 4]);
        let w = perm_to_coxeter_word(&p);
        assert_eq!(evaluate_word_as_perm(5, &w), p);
        assert!(perm_to_coxeter_word(&Permutation::identity(4)).is_empty());
    }

    #[test]
    fn perm_module_dims() {
        assert_eq!(perm_module(&[5, 1]).dim, 6);
        assert_eq!(perm_module(&[6, 2]).dim, 28);
        assert_eq!(perm_module(&[4, 1, 1]).dim, 30);
    }

    #[test]
    fn perm_module_matrices_are_permutations() {
        let m = perm_module(&[3, 2]);
        for g in &m.gens {
            for i in 0..m.dim {
                let ones = (0..m.dim).filter(|&j| g.get(i, j)).count();
                assert_eq!(ones, 1);
            }
        }
        assert!(m.check_relations());
    }

    #[test]
    fn braid_and_involution_relations_hold_on_induced() {
        let triv = Module::trivial(Group::Young(vec![3, 2]), "1");
        let ind = induce(&triv, "ind");
        assert_eq!(ind.dim, 10);
        assert!(ind.check_relations());
    }

    #[test]
    fn induce_trivial_matches_perm_module_factors() {
        // induce(1 from S_alpha) is the permutation module on cosets; it
        // must be isomorphic to perm_module(alpha) as a permutation action,
        // and here the bases even coincide up to ordering.
        let alpha = vec![3, 2, 1];
        let triv = Module::trivial(Group::Young(alpha.clone()), "1");
        let ind = induce(&triv, "ind");
        let pm = perm_module(&alpha);
        assert_eq!(ind.dim, pm.dim);
        for (a, b) in ind.gens.iter().zip(pm.gens.iter()) {
            // both are permutation matrices with the same cycle type;
            // full isomorphism is established downstream via hom spaces
            assert_eq!(a.popcount(), b.popcount());
        }
    }

    #[test]
    fn jm_on_trivial_module() {
        let triv = Module::trivial(Group::Symmetric(5), "1");
        // X_k acts as k-1 mod 2 on the trivial module
        assert_eq!(jm_matrix(&triv, 2), GF2Matrix::identity(1));
        assert!(jm_matrix(&triv, 3).is_zero());
        assert_eq!(jm_matrix(&triv, 4), GF2Matrix::identity(1));
    }

    #[test]
    fn jm_commutes_with_smaller_coxeter_generators() {
        let m = perm_module(&[3, 1, 1]);
        for k in 2..=5 {
            let x = jm_matrix(&m, k);
            for i in 1..k - 1 {
                let g = &m.gens[i - 1];
                assert_eq!(x.mul(g), g.mul(&x), "X_{k} vs s_{i}");
            }
        }
    }

    #[test]
    fn young_subgroup_generator_indices() {
        let gens = subgroup_generators(&SubgroupKind::Young(vec![6, 2]), 8);
        let idx: Vec<usize> = gens.iter().map(|w| w[0]).collect();
        assert_eq!(idx, vec![1, 2, 3, 4, 5, 7]);
        let gens = subgroup_generators(&SubgroupKind::LastPointStabilizer, 6);
        assert_eq!(gens.len(), 4);
    }

    #[test]
    fn alternating_words_generate_order_twelve() {
        // brute-force orbit of the identity under the A_4 generator words
        let n = 4;
        let words = subgroup_generators(&SubgroupKind::Alternating, n);
        let gens: Vec<Permutation> = words
            .iter()
            .map(|w| evaluate_word_as_perm(n, w))
            .collect();
        let mut group = vec![Permutation::identity(n)];
        loop {
            let mut grew = false;
            let snapshot = group.clone();
            for p in &snapshot {
                for g in &gens {
                    let q = p.compose(g);
                    if !group.contains(&q) {
                        group.push(q);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        assert_eq!(group.len(), 12);
    }

    #[test]
    fn induced_dimension_is_index_times_dim() {
        let triv = Module::trivial(Group::Young(vec![4, 1]), "1");
        assert_eq!(induce(&triv, "x").dim, 5);
        let _ = ptn(&[4, 1]); // silence unused import in some cfgs
    }
}
