//! Restriction, induction, block components and the branching functors on
//! concrete modules.
//!
//! Residue components of a restriction are cut out as generalized
//! eigenspaces of the last Jucys-Murphy element, which commutes with the
//! smaller symmetric group. Components of an induction are cut out by the
//! central transposition-sum element: adding a node of residue 0 keeps the
//! content parity, adding a node of residue 1 flips it, so after splitting
//! the source by its own content parity the two induced components are the
//! two parity eigenspaces upstairs.

use crate::gf2::{GF2Matrix, Subspace};
use crate::group::{
    as_young_factor, induce, jm_matrix, subgroup_generators, transposition_sum, SubgroupKind,
};
use crate::module::{Group, Module};

/// Generalized eigenspace of an operator for eigenvalue 0 or 1: the kernel
/// of (op + i*I)^N with N >= dim.
pub fn generalized_eigenspace(op: &GF2Matrix, eigenvalue: u8) -> Subspace {
    let d = op.rows();
    if d == 0 {
        return Subspace::empty(0);
    }
    let shifted = if eigenvalue == 0 {
        op.clone()
    } else {
        op.add(&GF2Matrix::identity(d))
    };
    let e = d.next_power_of_two() as u64;
    // kernel of the transpose power acting on row vectors: we want
    // {v : v * shifted^e = 0}, i.e. the left kernel.
    shifted.pow(e).transpose().nullspace()
}

/// Restrict a module along a named subgroup; the result's generators are
/// the evaluated generator words.
pub fn restrict(m: &Module, kind: &SubgroupKind) -> Module {
    let n = m.group.degree();
    let words = subgroup_generators(kind, n);
    let gens: Vec<GF2Matrix> = words
        .iter()
        .map(|w| {
            let slots: Vec<usize> = w.iter().map(|&i| m.slot_of_coxeter(i)).collect();
            m.evaluate_slots(&slots)
        })
        .collect();
    let group = match kind {
        SubgroupKind::LastPointStabilizer => Group::Symmetric(n - 1),
        SubgroupKind::Young(alpha) => Group::Young(alpha.clone()),
        SubgroupKind::Alternating => Group::Alternating(n),
    };
    Module::new(group, gens, format!("res({})", m.label))
}

/// Restrict an S_n-module all the way down to S_k.
pub fn restrict_to_symmetric(m: &Module, k: usize) -> Module {
    let Group::Symmetric(n) = m.group else {
        panic!("restrict_to_symmetric expects a symmetric-group module")
    };
    assert!(k <= n && k >= 1);
    Module::new(
        Group::Symmetric(k),
        m.gens[..k.saturating_sub(1)].to_vec(),
        format!("res{}({})", k, m.label),
    )
}

/// The residue-i component of the restriction to S_{n-1}, as a subspace of
/// m and as a module.
pub fn e_component(m: &Module, i: u8) -> (Subspace, Module) {
    let Group::Symmetric(n) = m.group else {
        panic!("e_component expects a symmetric-group module")
    };
    assert!(n >= 2);
    if m.dim == 0 {
        return (
            Subspace::empty(0),
            Module::zero(Group::Symmetric(n - 1), format!("e{}({})", i, m.label)),
        );
    }
    let x = jm_matrix(m, n);
    let space = generalized_eigenspace(&x, i);
    let down = restrict_to_symmetric(m, n - 1);
    let mut module = down.submodule(&space);
    module.label = format!("e{}({})", i, m.label);
    (space, module)
}

/// Both residue components of the restriction; their dimensions add up to
/// dim m.
pub fn branch_e(m: &Module) -> [Module; 2] {
    let (s0, e0) = e_component(m, 0);
    let (s1, e1) = e_component(m, 1);
    assert_eq!(s0.dim() + s1.dim(), m.dim, "JM eigenspaces must exhaust");
    [e0, e1]
}

/// The residue-i component of the induction to S_{n+1}.
pub fn f_component(m: &Module, i: u8) -> Module {
    let Group::Symmetric(n) = m.group else {
        panic!("f_component expects a symmetric-group module")
    };
    if m.dim == 0 {
        return Module::zero(Group::Symmetric(n + 1), format!("f{}({})", i, m.label));
    }
    // split the source by content parity (central transposition sum)
    let z = transposition_sum(m, n);
    let mut pieces: Vec<Module> = Vec::new();
    for p in 0..2u8 {
        let part = generalized_eigenspace(&z, p);
        if part.dim() == 0 {
            continue;
        }
        let sub = m.submodule(&part);
        let young = as_young_factor(&sub, &[n as u32, 1]);
        let ind = induce(&young, format!("ind({})", sub.label));
        let z_up = transposition_sum(&ind, n + 1);
        let target = generalized_eigenspace(&z_up, (p + i) % 2);
        let mut piece = ind.submodule(&target);
        piece.label = format!("f{}piece", i);
        pieces.push(piece);
    }
    let mut acc = Module::zero(Group::Symmetric(n + 1), format!("f{}({})", i, m.label));
    for p in pieces {
        acc = if acc.dim == 0 { p } else { acc.direct_sum(&p) };
    }
    acc.label = format!("f{}({})", i, m.label);
    acc
}

pub fn branch_f(m: &Module) -> [Module; 2] {
    let f0 = f_component(m, 0);
    let f1 = f_component(m, 1);
    let Group::Symmetric(n) = m.group else { unreachable!() };
    assert_eq!(f0.dim + f1.dim, m.dim * (n + 1), "induction dimension");
    [f0, f1]
}

/// r-fold application of the residue-i restriction component.
pub fn e_power(m: &Module, i: u8, r: usize) -> Module {
    let mut cur = m.clone();
    for _ in 0..r {
        if cur.dim == 0 {
            let Group::Symmetric(n) = cur.group else { unreachable!() };
            cur = Module::zero(Group::Symmetric(n - 1), "0");
            continue;
        }
        cur = e_component(&cur, i).1;
    }
    cur.label = format!("e{}^{}({})", i, r, m.label);
    cur
}

/// r-fold application of the residue-i induction component.
pub fn f_power(m: &Module, i: u8, r: usize) -> Module {
    let mut cur = m.clone();
    for _ in 0..r {
        cur = f_component(&cur, i);
    }
    cur.label = format!("f{}^{}({})", i, r, m.label);
    cur
}

/// The same-residue double restriction component over S_{n-2} x S_2: the
/// underlying space is the iterated Jucys-Murphy kernel, which is stable
/// under s_{n-1} because the block projection is central in the Young
/// subgroup algebra.
pub fn ebar2(m: &Module, i: u8) -> Module {
    let Group::Symmetric(n) = m.group else {
        panic!("ebar2 expects a symmetric-group module")
    };
    assert!(n >= 3);
    let alpha = vec![(n - 2) as u32, 2];
    if m.dim == 0 {
        return Module::zero(Group::Young(alpha), format!("ebar{}^2({})", i, m.label));
    }
    let k1 = generalized_eigenspace(&jm_matrix(m, n), i);
    let k2 = generalized_eigenspace(&jm_matrix(m, n - 1), i);
    let space = k1.intersection(&k2);
    let down = restrict(m, &SubgroupKind::Young(alpha));
    let mut module = down.submodule(&space); // panics if s_{n-1} does not fix it
    module.label = format!("ebar{}^2({})", i, m.label);
    module
}

/// Inner tensor product of two modules of the same symmetric group.
pub fn tensor(a: &Module, b: &Module) -> Module {
    assert_eq!(
        a.group, b.group,
        "tensor requires the same acting group on both factors"
    );
    let gens = a
        .gens
        .iter()
        .zip(b.gens.iter())
        .map(|(x, y)| x.kron(y))
        .collect();
    Module::new(
        a.group.clone(),
        gens,
        format!("{}(x){}", a.label, b.label),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::ptn;
    use crate::specht::irreducible_module;

    #[test]
    fn branch_e_of_trivial() {
        let triv = Module::trivial(Group::Symmetric(5), "1");
        let [e0, e1] = branch_e(&triv);
        // unique removable node of (5) is (1,5), residue 0
        assert_eq!(e0.dim, 1);
        assert_eq!(e1.dim, 0);
    }

    #[test]
    fn branch_f_of_d41_lands_in_residue_zero() {
        // All three conormal nodes of (4,1) have residue 0, so the full
        // induction is the 0-component.
        let d = irreducible_module(&ptn(&[4, 1])).unwrap();
        let [f0, f1] = branch_f(&d);
        assert_eq!(f0.dim, 6 * d.dim);
        assert_eq!(f1.dim, 0);
        assert!(f0.check_relations());
    }

    #[test]
    fn restriction_of_trivial_is_trivial() {
        let triv = Module::trivial(Group::Symmetric(6), "1");
        let r = restrict(&triv, &SubgroupKind::Alternating);
        assert_eq!(r.dim, 1);
        for g in &r.gens {
            assert_eq!(*g, GF2Matrix::identity(1));
        }
    }

    #[test]
    fn ebar2_restricts_to_double_e() {
        let d = irreducible_module(&ptn(&[3, 2, 1])).unwrap();
        for i in 0..2u8 {
            let bar = ebar2(&d, i);
            let e2 = e_power(&d, i, 2);
            assert_eq!(bar.dim, e2.dim, "residue {i}");
        }
    }

    #[test]
    fn tensor_with_trivial_preserves_dimension() {
        let d = irreducible_module(&ptn(&[5, 1])).unwrap();
        let triv = Module::trivial(Group::Symmetric(6), "1");
        let t = tensor(&d, &triv);
        assert_eq!(t.dim, d.dim);
        assert_eq!(t.gens, d.gens);
    }

    #[test]
    fn mackey_dimension_identity() {
        // M^ = M up + down identity on dims: dim(ind(res M)) + dim M =
        // dim(res(ind M)) for an S_n-module M.
        let d = irreducible_module(&ptn(&[4, 1])).unwrap();
        let [f0, f1] = branch_f(&d);
        let up_down: usize = [&f0, &f1]
            .iter()
            .map(|f| if f.dim > 0 { f.dim } else { 0 })
            .sum();
        assert_eq!(up_down, 6 * d.dim);
        let [e0, e1] = branch_e(&d);
        let down_up = (e0.dim + e1.dim) * 5;
        assert_eq!(up_down, d.dim + down_up);
    }
}
