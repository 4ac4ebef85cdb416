//! Specht modules over GF(2) in the standard polytabloid basis, the
//! invariant bilinear form, and the irreducible head D = S/rad for
//! 2-regular shapes.
//!
//! The generator action is obtained by expanding polytabloids inside the
//! tabloid space and solving back into the standard basis; this performs
//! the straightening implicitly and exactly.

use crate::gf2::{vec_ops, GF2Matrix, Subspace};
use crate::group::{Permutation, TabloidBasis};
use crate::module::{Group, Module};
use crate::partition::{Partition, PartitionError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpechtError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("D^lambda requires a 2-regular partition, got {0}")]
    NotTwoRegular(Partition),
}

/// Standard Young tableaux of a shape, entries 0..n-1 increasing along
/// rows and columns, in lexicographic column-reading order.
pub fn standard_tableaux(lam: &Partition) -> Vec<Vec<Vec<u8>>> {
    let h = lam.h();
    let n = lam.n();
    let mut pos = vec![0usize; h];
    let mut tab: Vec<Vec<u8>> = lam.parts().iter().map(|&p| vec![0u8; p as usize]).collect();
    let mut out = Vec::new();
    fn rec(
        k: usize,
        n: usize,
        lam: &Partition,
        pos: &mut Vec<usize>,
        tab: &mut Vec<Vec<u8>>,
        out: &mut Vec<Vec<Vec<u8>>>,
    ) {
        if k == n {
            out.push(tab.clone());
            return;
        }
        for r in 0..lam.h() {
            if pos[r] < lam.part(r + 1) as usize && (r == 0 || pos[r] < pos[r - 1]) {
                tab[r][pos[r]] = k as u8;
                pos[r] += 1;
                rec(k + 1, n, lam, pos, tab, out);
                pos[r] -= 1;
            }
        }
    }
    rec(0, n, lam, &mut pos, &mut tab, &mut out);
    out.sort_by_key(|t| column_reading_word(t));
    out
}

fn column_reading_word(tab: &[Vec<u8>]) -> Vec<u8> {
    let width = tab.first().map(|r| r.len()).unwrap_or(0);
    let mut w = Vec::new();
    for c in 0..width {
        for row in tab {
            if c < row.len() {
                w.push(row[c]);
            }
        }
    }
    w
}

/// Number of standard tableaux by direct enumeration.
pub fn specht_dim(lam: &Partition) -> usize {
    standard_tableaux(lam).len()
}

/// The polytabloid of a tableau as a bit vector over the tabloid basis:
/// the sum over the column stabilizer (signs vanish at p = 2).
fn polytabloid(tab: &[Vec<u8>], basis: &TabloidBasis) -> Vec<u64> {
    let n: usize = tab.iter().map(|r| r.len()).sum();
    let width = tab.first().map(|r| r.len()).unwrap_or(0);
    let columns: Vec<Vec<u8>> = (0..width)
        .map(|c| tab.iter().filter(|r| c < r.len()).map(|r| r[c]).collect())
        .collect();
    let mut v = vec_ops::zero(basis.dim());
    // iterate the product of per-column permutations
    let mut perms: Vec<Vec<usize>> = columns
        .iter()
        .map(|col| (0..col.len()).collect())
        .collect();
    loop {
        // row word of the permuted tableau
        let mut word = vec![0u8; n];
        for (c, col) in columns.iter().enumerate() {
            for (r, &target_row) in perms[c].iter().enumerate() {
                word[col[r] as usize] = target_row as u8;
            }
        }
        let idx = basis.index_of(&word);
        let w = idx / 64;
        v[w] ^= 1u64 << (idx % 64);

        // advance the multi-permutation odometer
        let mut c = 0;
        loop {
            if c == perms.len() {
                return v;
            }
            if next_permutation(&mut perms[c]) {
                break;
            }
            perms[c] = (0..columns[c].len()).collect();
            c += 1;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Specht module with extra context kept for the Gram matrix.
pub struct SpechtConstruction {
    pub module: Module,
    /// dim(S) x dim(M^lambda) matrix of polytabloids over tabloids.
    pub polytabloids: GF2Matrix,
    pub gram: GF2Matrix,
}

/// Build S^lambda: basis = standard polytabloids, generator action by
/// permuting tabloids and solving back into the standard basis.
pub fn specht_construction(lam: &Partition) -> SpechtConstruction {
    let n = lam.n();
    let basis = TabloidBasis::new(lam.parts());
    let tableaux = standard_tableaux(lam);
    let dim_s = tableaux.len();
    let dim_m = basis.dim();
    let rows: Vec<Vec<u64>> = tableaux.iter().map(|t| polytabloid(t, &basis)).collect();
    let b = GF2Matrix::from_rows(rows, dim_m);
    let (r, t, pivots) = b.rref_with_transform();
    assert_eq!(
        pivots.len(),
        dim_s,
        "standard polytabloids must be independent"
    );

    let mut gens = Vec::new();
    for i in 1..n {
        let action = basis.action(&Permutation::adjacent(n, i));
        let mut g = GF2Matrix::zero(dim_s, dim_s);
        for (ti, _) in tableaux.iter().enumerate() {
            let image = permute_bits(b.row(ti), &action, dim_m);
            // coordinates against the reduced basis, then back through T
            let mut c = vec_ops::zero(dim_s);
            let mut rem = image;
            for (k, &p) in pivots.iter().enumerate() {
                if vec_ops::get(&rem, p) {
                    vec_ops::set(&mut c, k, true);
                    vec_ops::xor_into(&mut rem, r.row(k));
                }
            }
            assert!(
                vec_ops::is_zero(&rem),
                "generator image left the Specht module"
            );
            let x = t.apply_row(&c);
            g.set_row(ti, &x[..g.words_per_row()]);
        }
        gens.push(g);
    }

    // Gram matrix of the invariant form in the standard basis: tabloids
    // are an orthonormal basis of M^lambda.
    let mut gram = GF2Matrix::zero(dim_s, dim_s);
    for i in 0..dim_s {
        for j in i..dim_s {
            if vec_ops::parity_dot(b.row(i), b.row(j)) {
                gram.set(i, j, true);
                gram.set(j, i, true);
            }
        }
    }

    let module = Module::new(Group::Symmetric(n), gens, format!("S({lam})"));
    SpechtConstruction {
        module,
        polytabloids: b,
        gram,
    }
}

fn permute_bits(v: &[u64], action: &[usize], cols: usize) -> Vec<u64> {
    let mut out = vec_ops::zero(cols);
    for (wi, &w) in v.iter().enumerate() {
        let mut w = w;
        while w != 0 {
            let j = wi * 64 + w.trailing_zeros() as usize;
            w &= w - 1;
            vec_ops::set(&mut out, action[j], true);
        }
    }
    out
}

pub fn specht_module(lam: &Partition) -> Module {
    specht_construction(lam).module
}

/// The invariant bilinear form on S^lambda.
pub struct BilinearForm {
    pub gram: GF2Matrix,
}

pub fn gram_matrix(lam: &Partition) -> BilinearForm {
    BilinearForm {
        gram: specht_construction(lam).gram,
    }
}

/// D^lambda = S^lambda / rad of the invariant form, for 2-regular lambda.
pub fn irreducible_module(lam: &Partition) -> Result<Module, SpechtError> {
    if !lam.is_two_regular() {
        return Err(SpechtError::NotTwoRegular(lam.clone()));
    }
    let c = specht_construction(lam);
    let rad = c.gram.nullspace();
    debug_assert!(radical_is_invariant(&c.module, &rad));
    let (mut q, _) = c.module.quotient(&rad);
    q.label = format!("D({lam})");
    Ok(q)
}

fn radical_is_invariant(m: &Module, rad: &Subspace) -> bool {
    (0..rad.dim()).all(|i| {
        m.gens
            .iter()
            .all(|g| rad.contains(&g.apply_row(rad.basis().row(i))))
    })
}

/// Contragredient of any module; for the involutive Coxeter generators
/// this is plain transposition.
pub fn dual(m: &Module) -> Module {
    m.dual()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{ptn, two_regular_partitions_of};

    /// Hook length formula, used only as an independent oracle.
    fn hook_dim(lam: &Partition) -> u64 {
        let n = lam.n() as u64;
        let mut fact = 1u64;
        for k in 2..=n {
            fact *= k;
        }
        let conj_len = |c: usize| -> u32 {
            lam.parts().iter().filter(|&&p| p as usize > c).count() as u32
        };
        let mut denom = 1u64;
        for (r, &p) in lam.parts().iter().enumerate() {
            for c in 0..p as usize {
                let arm = p as u64 - c as u64 - 1;
                let leg = conj_len(c) as u64 - r as u64 - 1;
                denom *= arm + leg + 1;
            }
        }
        fact / denom
    }

    #[test]
    fn specht_dims_match_hook_lengths() {
        for &(parts, n) in &[
            (&[5u32, 1u32][..], 6usize),
            (&[6, 2][..], 8),
            (&[6, 1, 1][..], 8),
            (&[3, 2, 1][..], 6),
            (&[4, 2][..], 6),
        ] {
            let lam = Partition::new(parts.to_vec()).unwrap();
            assert_eq!(lam.n(), n);
            assert_eq!(specht_dim(&lam) as u64, hook_dim(&lam), "{lam}");
        }
    }

    #[test]
    fn specht_generators_satisfy_relations() {
        for lam in [ptn(&[4, 2]), ptn(&[3, 2, 1]), ptn(&[2, 2, 1])] {
            let m = specht_module(&lam);
            assert!(m.check_relations(), "{lam}");
        }
    }

    #[test]
    fn gram_is_invariant_under_generators() {
        // vectors are rows acting on the right, so invariance of the form
        // reads g * gram * g^T = gram
        for n in 2..=6 {
            for lam in crate::partition::partitions_of(n) {
                let c = specht_construction(&lam);
                for g in &c.module.gens {
                    assert_eq!(g.mul(&c.gram).mul(&g.transpose()), c.gram, "{lam}");
                }
            }
        }
    }

    #[test]
    fn gram_examples() {
        // lambda = (n): 1x1 Gram [1]
        let c = specht_construction(&ptn(&[5]));
        assert_eq!(c.gram, GF2Matrix::identity(1));
        // lambda = (n-1,1), n even: rank n-2
        let c = specht_construction(&ptn(&[5, 1]));
        assert_eq!(c.gram.rank(), 4);
        let c = specht_construction(&ptn(&[7, 1]));
        assert_eq!(c.gram.rank(), 6);
    }

    #[test]
    fn irreducible_dims() {
        assert_eq!(irreducible_module(&ptn(&[6])).unwrap().dim, 1);
        assert_eq!(irreducible_module(&ptn(&[5, 1])).unwrap().dim, 4);
        assert!(irreducible_module(&ptn(&[2, 2])).is_err());
    }

    #[test]
    fn theorem_dim_consistency_at_n6() {
        let d42 = irreducible_module(&ptn(&[4, 2])).unwrap().dim;
        let d51 = irreducible_module(&ptn(&[5, 1])).unwrap().dim;
        let d321 = irreducible_module(&ptn(&[3, 2, 1])).unwrap().dim;
        assert_eq!(d42 * d51, d321);
    }

    #[test]
    fn dual_is_involutive_bit_exactly() {
        for lam in two_regular_partitions_of(5) {
            let m = specht_module(&lam);
            assert_eq!(dual(&dual(&m)).gens, m.gens);
        }
    }
}
