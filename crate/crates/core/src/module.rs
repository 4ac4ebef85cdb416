//! Representations as lists of generator matrices over GF(2), together
//! with the subspace plumbing (submodule and quotient actions, direct
//! sums, duals) shared by the branching functors and the MeatAxe.
//!
//! Convention: vectors are bit rows and generators act on the right,
//! composing left to right, so the matrix of `g then h` is A_g * A_h.

use crate::gf2::{vec_ops, GF2Matrix, Subspace};
use crate::group::{perm_to_coxeter_word, Permutation};

/// The acting group, determining how generator slots are interpreted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    /// S_n with Coxeter generators s_1..s_{n-1}.
    Symmetric(usize),
    /// Young subgroup of S_n for a composition; generators are the s_i
    /// that do not cross block boundaries, in increasing order of i.
    Young(Vec<u32>),
    /// A_n with generators s_1*s_2, s_1*s_3, ..., s_1*s_{n-1}.
    Alternating(usize),
}

impl Group {
    pub fn degree(&self) -> usize {
        match self {
            Group::Symmetric(n) | Group::Alternating(n) => *n,
            Group::Young(alpha) => alpha.iter().map(|&a| a as usize).sum(),
        }
    }

    /// Coxeter indices (1-based i for s_i) of the generator slots; for the
    /// alternating group the slots are words, not single s_i.
    pub fn coxeter_indices(&self) -> Option<Vec<usize>> {
        match self {
            Group::Symmetric(n) => Some((1..*n).collect()),
            Group::Young(alpha) => {
                let mut out = Vec::new();
                let mut boundary = std::collections::HashSet::new();
                let mut acc = 0usize;
                for &a in alpha {
                    acc += a as usize;
                    boundary.insert(acc);
                }
                let n: usize = alpha.iter().map(|&a| a as usize).sum();
                for i in 1..n {
                    if !boundary.contains(&i) {
                        out.push(i);
                    }
                }
                Some(out)
            }
            Group::Alternating(_) => None,
        }
    }

    pub fn generator_count(&self) -> usize {
        match self {
            Group::Symmetric(n) => n.saturating_sub(1),
            Group::Young(_) => self.coxeter_indices().unwrap().len(),
            Group::Alternating(n) => n.saturating_sub(2),
        }
    }

    /// The generators as permutations of {0..n-1}.
    pub fn generator_perms(&self) -> Vec<Permutation> {
        let n = self.degree();
        match self {
            Group::Symmetric(_) => (1..n).map(|i| Permutation::adjacent(n, i)).collect(),
            Group::Young(_) => self
                .coxeter_indices()
                .unwrap()
                .iter()
                .map(|&i| Permutation::adjacent(n, i))
                .collect(),
            Group::Alternating(_) => (2..n)
                .map(|k| {
                    Permutation::adjacent(n, 1).compose(&Permutation::adjacent(n, k))
                })
                .collect(),
        }
    }
}

/// A representation: one dim x dim generator matrix per generator slot of
/// the acting group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    pub group: Group,
    pub dim: usize,
    pub gens: Vec<GF2Matrix>,
    pub label: String,
}

impl Module {
    pub fn new(group: Group, gens: Vec<GF2Matrix>, label: impl Into<String>) -> Module {
        let dim = gens.first().map(|g| g.rows()).unwrap_or(0);
        for g in &gens {
            assert_eq!(g.rows(), dim);
            assert_eq!(g.cols(), dim);
        }
        assert_eq!(gens.len(), group.generator_count(), "generator count");
        Module {
            group,
            dim,
            gens,
            label: label.into(),
        }
    }

    /// Zero module placeholder for a group.
    pub fn zero(group: Group, label: impl Into<String>) -> Module {
        let g = group.generator_count();
        Module {
            group,
            dim: 0,
            gens: vec![GF2Matrix::zero(0, 0); g],
            label: label.into(),
        }
    }

    pub fn trivial(group: Group, label: impl Into<String>) -> Module {
        let g = group.generator_count();
        Module {
            group,
            dim: 1,
            gens: vec![GF2Matrix::identity(1); g],
            label: label.into(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// Slot of the Coxeter generator s_i in this module's generator list.
    pub fn slot_of_coxeter(&self, i: usize) -> usize {
        match &self.group {
            Group::Symmetric(_) => i - 1,
            Group::Young(_) => self
                .group
                .coxeter_indices()
                .unwrap()
                .iter()
                .position(|&j| j == i)
                .unwrap_or_else(|| panic!("s_{i} is not in {:?}", self.group)),
            Group::Alternating(_) => panic!("alternating group has word generators"),
        }
    }

    /// Product of generator matrices for a word of generator slots,
    /// applied left to right.
    pub fn evaluate_slots(&self, word: &[usize]) -> GF2Matrix {
        let mut acc = GF2Matrix::identity(self.dim);
        for &s in word {
            acc = acc.mul(&self.gens[s]);
        }
        acc
    }

    /// Matrix of an arbitrary permutation of the underlying degree,
    /// via its decomposition into Coxeter generators.
    pub fn evaluate_perm(&self, p: &Permutation) -> GF2Matrix {
        let word = perm_to_coxeter_word(p);
        let slots: Vec<usize> = word.iter().map(|&i| self.slot_of_coxeter(i)).collect();
        self.evaluate_slots(&slots)
    }

    /// Contragredient module: each generator g goes to (g^{-1})^T. The
    /// Coxeter generators are involutions, so only alternating-group
    /// word generators need a real inverse.
    pub fn dual(&self) -> Module {
        let gens = self
            .gens
            .iter()
            .map(|g| match self.group {
                Group::Alternating(_) => g
                    .inverse()
                    .expect("generator matrices are invertible")
                    .transpose(),
                _ => g.transpose(),
            })
            .collect();
        Module {
            group: self.group.clone(),
            dim: self.dim,
            gens,
            label: format!("dual({})", self.label),
        }
    }

    pub fn direct_sum(&self, other: &Module) -> Module {
        assert_eq!(self.group, other.group);
        let dim = self.dim + other.dim;
        let gens = self
            .gens
            .iter()
            .zip(other.gens.iter())
            .map(|(a, b)| {
                GF2Matrix::from_fn(dim, dim, |i, j| {
                    if i < self.dim && j < self.dim {
                        a.get(i, j)
                    } else if i >= self.dim && j >= self.dim {
                        b.get(i - self.dim, j - self.dim)
                    } else {
                        false
                    }
                })
            })
            .collect();
        Module {
            group: self.group.clone(),
            dim,
            gens,
            label: format!("{}(+){}", self.label, other.label),
        }
    }

    /// The action restricted to an invariant subspace, in the basis of the
    /// subspace's RREF rows. Panics if the subspace is not invariant.
    pub fn submodule(&self, space: &Subspace) -> Module {
        assert_eq!(space.ambient_dim(), self.dim);
        let k = space.dim();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut m = GF2Matrix::zero(k, k);
                for r in 0..k {
                    let img = g.apply_row(space.basis().row(r));
                    let coords = space
                        .coords(&img)
                        .expect("subspace not invariant under action");
                    for c in 0..k {
                        if vec_ops::get(&coords, c) {
                            m.set(r, c, true);
                        }
                    }
                }
                m
            })
            .collect();
        Module {
            group: self.group.clone(),
            dim: k,
            gens,
            label: format!("sub({})", self.label),
        }
    }

    /// Quotient by an invariant subspace. Returns the quotient module and
    /// the dim x q projection matrix sending a vector of self to its
    /// quotient coordinates (the non-pivot coordinates after reduction).
    pub fn quotient(&self, space: &Subspace) -> (Module, GF2Matrix) {
        assert_eq!(space.ambient_dim(), self.dim);
        let mut is_pivot = vec![false; self.dim];
        for &p in space.pivots() {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.dim).filter(|&j| !is_pivot[j]).collect();
        let q = free.len();
        let mut proj = GF2Matrix::zero(self.dim, q);
        for j in 0..self.dim {
            let e = vec_ops::unit(self.dim, j);
            let r = space.reduce(&e);
            for (c, &fj) in free.iter().enumerate() {
                if vec_ops::get(&r, fj) {
                    proj.set(j, c, true);
                }
            }
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut m = GF2Matrix::zero(q, q);
                for (r, &fj) in free.iter().enumerate() {
                    let img = g.apply_row(&vec_ops::unit(self.dim, fj));
                    let red = space.reduce(&img);
                    for (c, &fc) in free.iter().enumerate() {
                        if vec_ops::get(&red, fc) {
                            m.set(r, c, true);
                        }
                    }
                }
                m
            })
            .collect();
        let module = Module {
            group: self.group.clone(),
            dim: q,
            gens,
            label: format!("quot({})", self.label),
        };
        (module, proj)
    }

    /// Pull a subspace of the quotient back to self: the preimage under
    /// the projection returned by `quotient`. Always contains `space`.
    pub fn preimage(&self, space: &Subspace, quotient_sub: &Subspace) -> Subspace {
        let mut is_pivot = vec![false; self.dim];
        for &p in space.pivots() {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.dim).filter(|&j| !is_pivot[j]).collect();
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for i in 0..space.dim() {
            rows.push(space.basis().row(i).to_vec());
        }
        for i in 0..quotient_sub.dim() {
            // lift quotient coordinates by placing them on the free columns
            let mut v = vec_ops::zero(self.dim);
            for (c, &fj) in free.iter().enumerate() {
                if vec_ops::get(quotient_sub.basis().row(i), c) {
                    vec_ops::set(&mut v, fj, true);
                }
            }
            rows.push(v);
        }
        Subspace::spanned_by(self.dim, &GF2Matrix::from_rows(rows, self.dim))
    }

    /// Check the defining relations of the acting group: involutions,
    /// braid relations, and commuting relations. Alternating-group word
    /// generators are checked by evaluating the underlying permutations.
    pub fn check_relations(&self) -> bool {
        let id = GF2Matrix::identity(self.dim);
        match &self.group {
            Group::Alternating(_) => {
                // (s_1 s_k)^2 or ^3 depending on overlap; verified via the
                // permutation images instead of case analysis.
                let perms = self.group.generator_perms();
                for (a, pa) in self.gens.iter().zip(perms.iter()) {
                    let ord = pa.order();
                    if a.pow(ord as u64) != id {
                        return false;
                    }
                }
                true
            }
            _ => {
                let idx = self.group.coxeter_indices().unwrap();
                for (k, a) in self.gens.iter().enumerate() {
                    if a.mul(a) != id {
                        return false;
                    }
                    for (l, b) in self.gens.iter().enumerate().skip(k + 1) {
                        let (i, j) = (idx[k], idx[l]);
                        if i.abs_diff(j) >= 2 {
                            if a.mul(b) != b.mul(a) {
                                return false;
                            }
                        } else if a.mul(b).mul(a) != b.mul(a).mul(b) {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }
}

/// Outer tensor product over a Young subgroup S_alpha x S_beta: the first
/// block of generators acts through `a`, the second through `b`.
pub fn outer_tensor(a: &Module, b: &Module, label: impl Into<String>) -> Module {
    let (Group::Symmetric(na), Group::Symmetric(nb)) = (&a.group, &b.group) else {
        panic!("outer_tensor expects symmetric-group factors");
    };
    let alpha = vec![*na as u32, *nb as u32];
    let dim = a.dim * b.dim;
    let mut gens = Vec::new();
    for ga in &a.gens {
        gens.push(ga.kron(&GF2Matrix::identity(b.dim)));
    }
    for gb in &b.gens {
        gens.push(GF2Matrix::identity(a.dim).kron(gb));
    }
    Module {
        group: Group::Young(alpha),
        dim,
        gens,
        label: label.into(),
    }
}
