//! Ordinary characters by the Murnaghan-Nakayama rule, permutation
//! characters on tabloids, 2-modular decomposition matrices computed by
//! chopping Specht modules, and Brauer characters on odd classes solved by
//! unitriangular back-substitution.

use std::collections::BTreeMap;
use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::meataxe::{chop, SimpleCatalog};
use crate::partition::{odd_class_labels, partitions_of, two_regular_partitions_of, Partition};
use crate::specht::specht_construction;

#[derive(Debug, Error)]
pub enum CharError {
    #[error("decomposition matrices are computed only up to n = {limit}, got {n}")]
    Resource { n: usize, limit: usize },
}

/// Character values indexed by conjugacy class label (cycle type).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterVector {
    pub values: BTreeMap<Partition, i64>,
}

impl CharacterVector {
    pub fn value(&self, class: &Partition) -> i64 {
        self.values[class]
    }
}

/// Ordinary character value chi^lambda(gamma) by border-strip recursion.
pub fn mn_character(lam: &Partition, gamma: &Partition) -> i64 {
    assert_eq!(lam.n(), gamma.n());
    let mut memo = HashMap::new();
    mn_rec(lam.parts(), gamma.parts(), &mut memo)
}

fn mn_rec(lam: &[u32], gamma: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>) -> i64 {
    if gamma.is_empty() {
        return if lam.is_empty() { 1 } else { 0 };
    }
    let key = (lam.to_vec(), gamma.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // remove a border strip of length gamma[0], trying every start row
    let k = gamma[0];
    let rest = &gamma[1..];
    let mut total = 0i64;
    let h = lam.len();
    for start in 0..h {
        // peeling a strip of size k starting at row `start`: the strip
        // occupies rows start..=end; after removal row r (start<=r<end)
        // becomes lam[r+1]-1, row end becomes lam[start]-k', where the
        // shape must stay a partition. Standard formulation: new value of
        // row r is lam[r+1] - 1 for start <= r < end, and the total
        // removed is k.
        for end in start..h {
            // removed cells when the strip spans rows start..=end:
            let mut removed = 0i64;
            let mut ok = true;
            let mut new_rows: Vec<u32> = lam.to_vec();
            // rows start..end-1 take the value of the next row minus 1
            for r in start..end {
                let target = lam[r + 1] as i64 - 1;
                if target < 0 {
                    ok = false;
                    break;
                }
                removed += lam[r] as i64 - target;
                new_rows[r] = target as u32;
            }
            if !ok {
                continue;
            }
            // row end gives up the remainder
            let already: i64 = removed;
            let from_end = k as i64 - already;
            if from_end <= 0 || from_end > lam[end] as i64 {
                continue;
            }
            new_rows[end] = (lam[end] as i64 - from_end) as u32;
            // must remain weakly decreasing (positivity: zeros dropped)
            let mut shape: Vec<u32> = new_rows.clone();
            while shape.last() == Some(&0) {
                shape.pop();
            }
            if shape.iter().any(|&p| p == 0)
                || shape.windows(2).any(|w| w[0] < w[1])
            {
                continue;
            }
            let height = (end - start) as u32;
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * mn_rec(&shape, rest, memo);
        }
    }
    memo.insert(key, total);
    total
}

/// Permutation character: the number of gamma-fixed tabloids of shape
/// beta, i.e. ways to distribute the cycles of gamma into the rows.
pub fn perm_character(beta: &Partition, gamma: &Partition) -> i64 {
    assert_eq!(beta.n(), gamma.n());
    let mut memo: HashMap<(usize, Vec<u32>), i64> = HashMap::new();
    fn rec(
        row: usize,
        beta: &[u32],
        cycles: &[u32],
        memo: &mut HashMap<(usize, Vec<u32>), i64>,
    ) -> i64 {
        if row == beta.len() {
            return if cycles.is_empty() { 1 } else { 0 };
        }
        let key = (row, cycles.to_vec());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        // Choose which cycles fill this row. Cycles are distinguishable
        // point sets, so every subset of positions counts separately even
        // when lengths repeat; the memo key is still a multiset because
        // equal multisets have equal counts.
        let target = beta[row];
        let mut total = 0i64;
        let m = cycles.len();
        for mask in 0u32..(1 << m) {
            let sum: u32 = (0..m)
                .filter(|&i| (mask >> i) & 1 == 1)
                .map(|i| cycles[i])
                .sum();
            if sum != target {
                continue;
            }
            let remaining: Vec<u32> = (0..m)
                .filter(|&i| (mask >> i) & 1 == 0)
                .map(|i| cycles[i])
                .collect();
            total += rec(row + 1, beta, &remaining, memo);
        }
        memo.insert(key, total);
        total
    }
    rec(0, beta.parts(), gamma.parts(), &mut memo)
}

/// Entries d[lambda][mu] = [S^lambda : D^mu] over GF(2).
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionMatrix {
    pub n: usize,
    /// All partitions of n, descending lexicographic.
    pub rows: Vec<Partition>,
    /// 2-regular partitions of n, descending lexicographic.
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<usize>>,
}

impl DecompositionMatrix {
    pub fn entry(&self, lam: &Partition, mu: &Partition) -> usize {
        let r = self.rows.iter().position(|x| x == lam).expect("row");
        let c = self.cols.iter().position(|x| x == mu).expect("col");
        self.entries[r][c]
    }

    /// d[lam][lam] = 1 for 2-regular lam; d[lam][mu] = 0 unless mu
    /// dominates-or-equals lam.
    pub fn is_unitriangular(&self) -> bool {
        for (r, lam) in self.rows.iter().enumerate() {
            for (c, mu) in self.cols.iter().enumerate() {
                let d = self.entries[r][c];
                if lam == mu && d != 1 {
                    return false;
                }
                if d != 0 && !mu.dominates(lam) {
                    return false;
                }
            }
        }
        true
    }
}

pub const DECOMPOSITION_LIMIT: usize = 10;

/// Decomposition matrix of S_n at p = 2 by chopping every Specht module.
pub fn decomposition_matrix(
    n: usize,
    catalog: &SimpleCatalog,
    seed: u64,
) -> Result<DecompositionMatrix, CharError> {
    if n > DECOMPOSITION_LIMIT {
        return Err(CharError::Resource {
            n,
            limit: DECOMPOSITION_LIMIT,
        });
    }
    let rows = partitions_of(n);
    let cols = two_regular_partitions_of(n);
    let mut entries = Vec::new();
    for lam in &rows {
        let s = specht_construction(lam).module;
        let factors = chop(&s, catalog, seed);
        entries.push(cols.iter().map(|mu| factors.mult(mu)).collect());
    }
    let dm = DecompositionMatrix {
        n,
        rows,
        cols,
        entries,
    };
    assert!(dm.is_unitriangular(), "decomposition matrix unitriangular");
    Ok(dm)
}

/// Brauer character of D^mu on the odd classes, solved from the ordinary
/// characters through the decomposition matrix: chi^lambda restricted to
/// odd classes equals sum_mu d[lambda][mu] phi^mu, and the system is
/// unitriangular with respect to dominance.
pub fn brauer_characters(dm: &DecompositionMatrix) -> BTreeMap<Partition, CharacterVector> {
    let classes = odd_class_labels(dm.n);
    let mut phi: BTreeMap<Partition, CharacterVector> = BTreeMap::new();
    // descending-lex order refines dominance downward: process most
    // dominant first, so every d[lam][mu] != 0 with mu != lam is solved.
    for lam in &dm.cols {
        let mut values = BTreeMap::new();
        for gamma in &classes {
            let mut v = mn_character(lam, gamma);
            for mu in &dm.cols {
                if mu != lam && dm.entry(lam, mu) != 0 {
                    v -= dm.entry(lam, mu) as i64 * phi[mu].value(gamma);
                }
            }
            values.insert(gamma.clone(), v);
        }
        phi.insert(lam.clone(), CharacterVector { values });
    }
    phi
}

/// The odd s < m for which phi^mu is odd on the class (n-s, s), plus the
/// numeric re-verification that phi^{(m+1,m-1)} * (phi^mu + sum xi) is
/// even on every odd class.
pub fn parity_filter(
    mu: &Partition,
    dm: &DecompositionMatrix,
    phi: &BTreeMap<Partition, CharacterVector>,
) -> Vec<u32> {
    let n = dm.n;
    assert_eq!(n % 2, 0);
    let m = (n / 2) as u32;
    let classes = odd_class_labels(n);
    let mut chosen = Vec::new();
    for s in (1..m).step_by(2) {
        let class = Partition::new(vec![n as u32 - s, s]).unwrap();
        if phi[mu].value(&class).rem_euclid(2) == 1 {
            chosen.push(s);
        }
    }
    // phi := phi^mu + sum_l xi^{(n-s_l, s_l)}; the product with the
    // distinguished two-row Brauer character must vanish mod 2 classwise.
    let dist = Partition::new(vec![m + 1, m - 1]).unwrap();
    for gamma in &classes {
        let mut f = phi[mu].value(gamma);
        for &s in &chosen {
            let beta = Partition::new(vec![n as u32 - s, s]).unwrap();
            f += perm_character(&beta, gamma);
        }
        let lead = phi[&dist].value(gamma);
        assert_eq!(
            (lead * f).rem_euclid(2),
            0,
            "product parity failed at class {gamma}"
        );
    }
    chosen
}

/// JSON export of the character data for one n.
#[derive(Serialize)]
pub struct CharacterTableExport {
    pub n: usize,
    pub classes: Vec<Partition>,
    pub ordinary: BTreeMap<String, Vec<i64>>,
    pub brauer: BTreeMap<String, Vec<i64>>,
    pub decomposition: Vec<Vec<usize>>,
}

pub fn export_tables(
    dm: &DecompositionMatrix,
    phi: &BTreeMap<Partition, CharacterVector>,
) -> CharacterTableExport {
    let classes = partitions_of(dm.n);
    let odd = odd_class_labels(dm.n);
    let mut ordinary = BTreeMap::new();
    for lam in &dm.rows {
        ordinary.insert(
            lam.to_string(),
            classes.iter().map(|g| mn_character(lam, g)).collect(),
        );
    }
    let mut brauer = BTreeMap::new();
    for mu in &dm.cols {
        brauer.insert(
            mu.to_string(),
            odd.iter().map(|g| phi[mu].value(g)).collect(),
        );
    }
    CharacterTableExport {
        n: dm.n,
        classes,
        ordinary,
        brauer,
        decomposition: dm.entries.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::ptn;

    #[test]
    fn trivial_character_is_one_everywhere() {
        for gamma in partitions_of(6) {
            assert_eq!(mn_character(&ptn(&[6]), &gamma), 1);
        }
    }

    #[test]
    fn standard_character_degree() {
        let id = ptn(&[1, 1, 1, 1, 1, 1]);
        assert_eq!(mn_character(&ptn(&[5, 1]), &id), 5);
    }

    /// Jacobi-Trudi expansion over permutation characters as an
    /// independent oracle for the border-strip recursion.
    fn jt_character(lam: &Partition, gamma: &Partition) -> i64 {
        let h = lam.h();
        let perms = permutations(h);
        let mut total = 0i64;
        for (sigma, sign) in perms {
            let mut parts: Vec<i64> = Vec::new();
            let mut ok = true;
            for i in 0..h {
                let v = lam.part(i + 1) as i64 - (i as i64) + sigma[i] as i64;
                if v < 0 {
                    ok = false;
                    break;
                }
                parts.push(v);
            }
            if !ok {
                continue;
            }
            let total_parts: i64 = parts.iter().sum();
            if total_parts != lam.n() as i64 {
                continue;
            }
            let mut sorted: Vec<u32> = parts
                .iter()
                .filter(|&&v| v > 0)
                .map(|&v| v as u32)
                .collect();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if parts.iter().filter(|&&v| v == 0).count() + sorted.len() != h {
                continue;
            }
            let beta = match Partition::new(sorted) {
                Ok(b) => b,
                Err(_) => continue,
            };
            if beta.n() != gamma.n() {
                continue;
            }
            total += sign * perm_character(&beta, gamma);
        }
        total
    }

    fn permutations(h: usize) -> Vec<(Vec<usize>, i64)> {
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..h).collect();
        fn rec(k: usize, idx: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
            if k == idx.len() {
                out.push((idx.clone(), sign));
                return;
            }
            for i in k..idx.len() {
                idx.swap(k, i);
                let s = if i == k { sign } else { -sign };
                rec(k + 1, idx, s, out);
                idx.swap(k, i);
            }
        }
        rec(0, &mut idx, 1, &mut out);
        out
    }

    #[test]
    fn mn_agrees_with_jacobi_trudi() {
        for n in 2..=7 {
            for lam in partitions_of(n) {
                for gamma in partitions_of(n) {
                    assert_eq!(
                        mn_character(&lam, &gamma),
                        jt_character(&lam, &gamma),
                        "lam={lam} gamma={gamma}"
                    );
                }
            }
        }
    }

    #[test]
    fn mn_example_from_oracle() {
        assert_eq!(mn_character(&ptn(&[2, 1]), &ptn(&[3])), -1);
    }

    #[test]
    fn perm_character_examples() {
        // xi^{(n-s,s)} on class (n-k,k) = delta_{s,k} for 1 <= s,k < m
        let n = 8u32;
        for s in 1..4u32 {
            for k in 1..4u32 {
                let beta = Partition::new(vec![n - s, s]).unwrap();
                let gamma = Partition::new(vec![n - k, k]).unwrap();
                let expect = if s == k { 1 } else { 0 };
                assert_eq!(perm_character(&beta, &gamma), expect, "s={s} k={k}");
            }
        }
        // xi^{(n)} = 1
        for gamma in partitions_of(6) {
            assert_eq!(perm_character(&ptn(&[6]), &gamma), 1);
        }
        // xi^{(1^n)}(1^n) = n!
        let ones = ptn(&[1, 1, 1, 1, 1, 1]);
        assert_eq!(perm_character(&ones, &ones), 720);
    }

    #[test]
    fn column_orthogonality_small() {
        // sum_lambda chi(gamma) chi(delta) = centralizer order if gamma
        // = delta else 0
        for n in 2..=6usize {
            let classes = partitions_of(n);
            let chars = partitions_of(n);
            for g in &classes {
                for d in &classes {
                    let sum: i64 = chars
                        .iter()
                        .map(|l| mn_character(l, g) * mn_character(l, d))
                        .sum();
                    if g == d {
                        assert_eq!(sum, centralizer_order(g) as i64);
                    } else {
                        assert_eq!(sum, 0);
                    }
                }
            }
        }
    }

    fn centralizer_order(gamma: &Partition) -> u64 {
        let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
        for &p in gamma.parts() {
            *counts.entry(p).or_insert(0) += 1;
        }
        let mut z = 1u64;
        for (&len, &mult) in &counts {
            for k in 1..=mult {
                z *= k;
            }
            z *= (len as u64).pow(mult as u32);
        }
        z
    }
}
