//! Dense exact linear algebra over GF(2).
//!
//! Matrices are bit-packed row-major, 64 bits per word, little-endian bit
//! order within a word. Trailing pad bits of each row are kept zero; every
//! routine below preserves that invariant. This module is the computational
//! substrate for everything else in the crate: module actions, Gram matrices,
//! intertwiner solving and the MeatAxe all reduce to the handful of kernels
//! here (`rref`, `solve_right`, `nullspace`, `kron`, `spin`).

use std::fmt;
use std::io::{self, Read, Write};

pub const WORD_BITS: usize = 64;

/// Bit-packed matrix over the 2-element field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GF2Matrix {
    rows: usize,
    cols: usize,
    wpr: usize, // words per row
    data: Vec<u64>,
}

#[inline]
fn words_for(cols: usize) -> usize {
    cols.div_ceil(WORD_BITS)
}

#[inline]
fn pad_mask(cols: usize) -> u64 {
    let rem = cols % WORD_BITS;
    if rem == 0 {
        !0
    } else {
        (1u64 << rem) - 1
    }
}

impl GF2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let wpr = words_for(cols);
        GF2Matrix {
            rows,
            cols,
            wpr,
            data: vec![0; rows * wpr],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut m = Self::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Permutation matrix P with P[i][perm[i]] = 1, so that applying the
    /// matrix on the right of a row vector moves coordinate i to perm[i].
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zero(n, n);
        for (i, &j) in perm.iter().enumerate() {
            m.set(i, j, true);
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn words_per_row(&self) -> usize {
        self.wpr
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.wpr..(i + 1) * self.wpr]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.wpr..(i + 1) * self.wpr]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        (self.data[i * self.wpr + j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.wpr + j / WORD_BITS];
        let bit = 1u64 << (j % WORD_BITS);
        if v {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    pub fn set_row(&mut self, i: usize, row: &[u64]) {
        debug_assert_eq!(row.len(), self.wpr);
        self.row_mut(i).copy_from_slice(row);
    }

    pub fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let (a, b) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * self.wpr);
            (
                &lo[src * self.wpr..(src + 1) * self.wpr],
                &mut hi[..self.wpr],
            )
        } else {
            let (lo, hi) = self.data.split_at_mut(src * self.wpr);
            (&hi[..self.wpr], &mut lo[dst * self.wpr..(dst + 1) * self.wpr])
        };
        for (d, s) in b.iter_mut().zip(a.iter()) {
            *d ^= *s;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.wpr {
            self.data.swap(a * self.wpr + k, b * self.wpr + k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.row(i).iter().all(|&w| w == 0)
    }

    /// Matrix sum, which over GF(2) is the XOR of the payloads.
    pub fn add(&self, other: &GF2Matrix) -> GF2Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (d, s) in out.data.iter_mut().zip(other.data.iter()) {
            *d ^= *s;
        }
        out
    }

    /// Matrix product. For each row of `self`, XOR together the rows of
    /// `rhs` selected by its set bits.
    pub fn mul(&self, rhs: &GF2Matrix) -> GF2Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = GF2Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            let arow = self.row(i);
            let orow = &mut out.data[i * out.wpr..(i + 1) * out.wpr];
            for (wi, &w) in arow.iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let j = wi * WORD_BITS + w.trailing_zeros() as usize;
                    w &= w - 1;
                    let brow = rhs.row(j);
                    for (d, s) in orow.iter_mut().zip(brow.iter()) {
                        *d ^= *s;
                    }
                }
            }
        }
        out
    }

    /// Apply to a row vector: v -> v * self.
    pub fn apply_row(&self, v: &[u64]) -> Vec<u64> {
        debug_assert_eq!(v.len(), words_for(self.rows));
        let mut out = vec![0u64; self.wpr];
        for (wi, &w) in v.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let i = wi * WORD_BITS + w.trailing_zeros() as usize;
                w &= w - 1;
                for (d, s) in out.iter_mut().zip(self.row(i).iter()) {
                    *d ^= *s;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> GF2Matrix {
        let mut out = GF2Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            for (wi, &w) in row.iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let j = wi * WORD_BITS + w.trailing_zeros() as usize;
                    w &= w - 1;
                    out.set(j, i, true);
                }
            }
        }
        out
    }

    /// Power by repeated squaring.
    pub fn pow(&self, mut e: u64) -> GF2Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = GF2Matrix::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &GF2Matrix) -> GF2Matrix {
        assert_eq!(self.cols, below.cols);
        let mut out = GF2Matrix::zero(self.rows + below.rows, self.cols);
        out.data[..self.data.len()].copy_from_slice(&self.data);
        out.data[self.data.len()..].copy_from_slice(&below.data);
        out
    }

    pub fn from_rows(rows: Vec<Vec<u64>>, cols: usize) -> GF2Matrix {
        let wpr = words_for(cols);
        let mut out = GF2Matrix::zero(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            debug_assert_eq!(r.len(), wpr);
            out.row_mut(i).copy_from_slice(r);
        }
        out
    }

    /// Reduced row echelon form; returns (R, rank, pivot columns).
    pub fn rref(&self) -> (GF2Matrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        (m, rank, pivots)
    }

    /// In-place RREF; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let wi = c / WORD_BITS;
            let bit = 1u64 << (c % WORD_BITS);
            let mut pivot = None;
            for i in r..self.rows {
                if self.data[i * self.wpr + wi] & bit != 0 {
                    pivot = Some(i);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            self.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && self.data[i * self.wpr + wi] & bit != 0 {
                    self.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// RREF with a transform: returns (R, T, pivots) with T * self = R.
    pub fn rref_with_transform(&self) -> (GF2Matrix, GF2Matrix, Vec<usize>) {
        // Run elimination on [self | I] by keeping the transform in a
        // parallel matrix, mirroring every row operation.
        let mut m = self.clone();
        let mut t = GF2Matrix::identity(self.rows);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let wi = c / WORD_BITS;
            let bit = 1u64 << (c % WORD_BITS);
            let mut pivot = None;
            for i in r..self.rows {
                if m.data[i * m.wpr + wi] & bit != 0 {
                    pivot = Some(i);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            m.swap_rows(r, p);
            t.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && m.data[i * m.wpr + wi] & bit != 0 {
                    m.xor_row_into(r, i);
                    t.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, t, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Inverse of a square invertible matrix, or None.
    pub fn inverse(&self) -> Option<GF2Matrix> {
        assert_eq!(self.rows, self.cols);
        let (_, t, pivots) = self.rref_with_transform();
        if pivots.len() == self.rows {
            Some(t)
        } else {
            None
        }
    }

    /// Solve self * X = rhs, exact over GF(2); None when inconsistent.
    /// In debug builds every solution is verified by multiplication.
    pub fn solve_right(&self, rhs: &GF2Matrix) -> Option<GF2Matrix> {
        assert_eq!(self.rows, rhs.rows, "shape mismatch in solve_right");
        let (_, t, pivots) = self.rref_with_transform();
        let rank = pivots.len();
        let c = t.mul(rhs); // c = T * rhs, so we need R * X = c
        // Rows of c beyond the rank must vanish, otherwise inconsistent.
        for i in rank..c.rows {
            if !c.row_is_zero(i) {
                return None;
            }
        }
        let mut x = GF2Matrix::zero(self.cols, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x.set_row(p, c.row(i));
        }
        debug_assert_eq!(self.mul(&x), *rhs, "solve_right verification failed");
        Some(x)
    }

    /// Right nullspace {v : self * v^T = 0}, returned as a subspace of
    /// F_2^cols with basis in RREF.
    pub fn nullspace(&self) -> Subspace {
        let (r, rank, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let wpr = words_for(self.cols);
        let mut basis = Vec::new();
        for j in 0..self.cols {
            if is_pivot[j] {
                continue;
            }
            let mut v = vec![0u64; wpr];
            v[j / WORD_BITS] |= 1 << (j % WORD_BITS);
            for i in 0..rank {
                if r.get(i, j) {
                    let p = pivots[i];
                    v[p / WORD_BITS] ^= 1 << (p % WORD_BITS);
                }
            }
            basis.push(v);
        }
        let mut m = GF2Matrix::from_rows(basis, self.cols);
        m.rref_in_place();
        Subspace::from_rref(self.cols, m)
    }

    /// Kronecker product, a-major: row a*rows(B)+b, col c*cols(B)+d.
    pub fn kron(&self, b: &GF2Matrix) -> GF2Matrix {
        let mut out = GF2Matrix::zero(self.rows * b.rows, self.cols * b.cols);
        for i in 0..self.rows {
            let arow = self.row(i);
            for (wi, &w) in arow.iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let j = wi * WORD_BITS + w.trailing_zeros() as usize;
                    w &= w - 1;
                    for k in 0..b.rows {
                        let dst = (i * b.rows + k) * out.wpr;
                        or_shifted(
                            &mut out.data[dst..dst + out.wpr],
                            b.row(k),
                            j * b.cols,
                            b.cols,
                        );
                    }
                }
            }
        }
        out
    }

    pub fn popcount(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Binary cache format: magic "GF2M", version u32, rows u64, cols u64,
    /// then the row-major packed words, all little-endian.
    pub fn write_to<W: Write>(&self, w: &mut W) -> io::Result<()> {
        w.write_all(b"GF2M")?;
        w.write_all(&1u32.to_le_bytes())?;
        w.write_all(&(self.rows as u64).to_le_bytes())?;
        w.write_all(&(self.cols as u64).to_le_bytes())?;
        for word in &self.data {
            w.write_all(&word.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> io::Result<GF2Matrix> {
        let mut magic = [0u8; 4];
        r.read_exact(&mut magic)?;
        if &magic != b"GF2M" {
            return Err(io::Error::new(io::ErrorKind::InvalidData, "bad magic"));
        }
        let mut b4 = [0u8; 4];
        r.read_exact(&mut b4)?;
        if u32::from_le_bytes(b4) != 1 {
            return Err(io::Error::new(io::ErrorKind::InvalidData, "bad version"));
        }
        let mut b8 = [0u8; 8];
        r.read_exact(&mut b8)?;
        let rows = u64::from_le_bytes(b8) as usize;
        r.read_exact(&mut b8)?;
        let cols = u64::from_le_bytes(b8) as usize;
        let mut m = GF2Matrix::zero(rows, cols);
        for i in 0..rows * m.wpr {
            r.read_exact(&mut b8)?;
            m.data[i] = u64::from_le_bytes(b8);
        }
        // Pad bits must be zero, otherwise the payload is corrupt.
        let mask = pad_mask(cols);
        for i in 0..rows {
            if m.wpr > 0 && m.row(i)[m.wpr - 1] & !mask != 0 {
                return Err(io::Error::new(io::ErrorKind::InvalidData, "pad bits set"));
            }
        }
        Ok(m)
    }
}

impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GF2Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows.min(40) {
            for j in 0..self.cols.min(80) {
                write!(f, "{}", if self.get(i, j) { '1' } else { '.' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// OR `src` (a row of `src_cols` bits) into `dst` at bit offset `offset`.
fn or_shifted(dst: &mut [u64], src: &[u64], offset: usize, src_cols: usize) {
    let word_off = offset / WORD_BITS;
    let bit_off = offset % WORD_BITS;
    let n_words = words_for(src_cols);
    for k in 0..n_words {
        let w = src[k];
        if w == 0 {
            continue;
        }
        dst[word_off + k] |= w << bit_off;
        if bit_off != 0 && word_off + k + 1 < dst.len() {
            dst[word_off + k + 1] |= w >> (WORD_BITS - bit_off);
        }
    }
}

/// Row-vector helpers on raw packed slices.
pub mod vec_ops {
    use super::{words_for, WORD_BITS};

    pub fn zero(cols: usize) -> Vec<u64> {
        vec![0u64; words_for(cols)]
    }

    pub fn unit(cols: usize, j: usize) -> Vec<u64> {
        let mut v = zero(cols);
        v[j / WORD_BITS] |= 1 << (j % WORD_BITS);
        v
    }

    pub fn get(v: &[u64], j: usize) -> bool {
        (v[j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1
    }

    pub fn set(v: &mut [u64], j: usize, b: bool) {
        let bit = 1u64 << (j % WORD_BITS);
        if b {
            v[j / WORD_BITS] |= bit;
        } else {
            v[j / WORD_BITS] &= !bit;
        }
    }

    pub fn xor_into(dst: &mut [u64], src: &[u64]) {
        for (d, s) in dst.iter_mut().zip(src.iter()) {
            *d ^= *s;
        }
    }

    pub fn is_zero(v: &[u64]) -> bool {
        v.iter().all(|&w| w == 0)
    }

    pub fn leading_bit(v: &[u64]) -> Option<usize> {
        for (wi, &w) in v.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn parity_dot(a: &[u64], b: &[u64]) -> bool {
        let mut acc = 0u64;
        for (x, y) in a.iter().zip(b.iter()) {
            acc ^= x & y;
        }
        acc.count_ones() % 2 == 1
    }
}

/// A subspace of F_2^ambient, with basis rows in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: GF2Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_rref(ambient: usize, basis: GF2Matrix) -> Subspace {
        debug_assert_eq!(basis.cols(), ambient);
        let pivots: Vec<usize> = (0..basis.rows())
            .map(|i| vec_ops::leading_bit(basis.row(i)).expect("zero row in RREF basis"))
            .collect();
        debug_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    /// Span of arbitrary generating rows.
    pub fn spanned_by(ambient: usize, rows: &GF2Matrix) -> Subspace {
        let (mut r, rank, _) = rows.rref();
        let mut basis = GF2Matrix::zero(rank, ambient);
        for i in 0..rank {
            basis.row_mut(i).copy_from_slice(r.row_mut(i));
        }
        Subspace::from_rref(ambient, basis)
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace::from_rref(ambient, GF2Matrix::identity(ambient))
    }

    pub fn empty(ambient: usize) -> Subspace {
        Subspace::from_rref(ambient, GF2Matrix::zero(0, ambient))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &GF2Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Reduce v against the basis; the remainder is zero iff v lies in
    /// the subspace.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let mut v = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if vec_ops::get(&v, p) {
                vec_ops::xor_into(&mut v, self.basis.row(i));
            }
        }
        v
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        vec_ops::is_zero(&self.reduce(v))
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    /// Coordinates of a member vector in the RREF basis.
    pub fn coords(&self, v: &[u64]) -> Option<Vec<u64>> {
        let mut c = vec_ops::zero(self.dim().max(1));
        let mut v = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if vec_ops::get(&v, p) {
                vec_ops::set(&mut c, i, true);
                vec_ops::xor_into(&mut v, self.basis.row(i));
            }
        }
        if vec_ops::is_zero(&v) {
            Some(c)
        } else {
            None
        }
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::spanned_by(self.ambient, &self.basis.stack(&other.basis))
    }

    /// Intersection via the Zassenhaus trick on [A|A; B|0].
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let n = self.ambient;
        let top = GF2Matrix::from_fn(self.dim(), 2 * n, |i, j| {
            if j < n {
                self.basis.get(i, j)
            } else {
                self.basis.get(i, j - n)
            }
        });
        let bot = GF2Matrix::from_fn(other.dim(), 2 * n, |i, j| {
            if j < n {
                other.basis.get(i, j)
            } else {
                false
            }
        });
        let (r, rank, _) = top.stack(&bot).rref();
        let mut rows = Vec::new();
        for i in 0..rank {
            let left_zero = (0..n).all(|j| !r.get(i, j));
            if left_zero {
                let mut v = vec_ops::zero(n);
                for j in 0..n {
                    if r.get(i, n + j) {
                        vec_ops::set(&mut v, j, true);
                    }
                }
                if !vec_ops::is_zero(&v) {
                    rows.push(v);
                }
            }
        }
        Subspace::spanned_by(n, &GF2Matrix::from_rows(rows, n))
    }
}

/// Smallest subspace containing `vectors` and closed under every action
/// (applied on the right of row vectors). Fixpoint iteration over a
/// worklist with semi-echelon membership tests.
pub fn spin(vectors: &Subspace, actions: &[GF2Matrix]) -> Subspace {
    let ambient = vectors.ambient_dim();
    let mut ech = Echelon::new(ambient);
    let mut queue: Vec<Vec<u64>> = Vec::new();
    for i in 0..vectors.dim() {
        if ech.insert(vectors.basis().row(i).to_vec()).is_some() {
            queue.push(vectors.basis().row(i).to_vec());
        }
    }
    let mut head = 0;
    'outer: while head < queue.len() {
        let v = queue[head].clone();
        head += 1;
        for a in actions {
            let w = a.apply_row(&v);
            if ech.insert(w.clone()).is_some() {
                queue.push(w);
                if ech.dim() == ambient {
                    break 'outer; // already the full space
                }
            }
        }
    }
    ech.into_subspace()
}

/// Growing semi-echelon basis: supports incremental insertion with
/// reduction, optionally tracking coefficients over the inserted vectors.
pub struct Echelon {
    ambient: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Echelon {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Reduce and insert; Some(pivot) if the vector was independent.
    pub fn insert(&mut self, mut v: Vec<u64>) -> Option<usize> {
        for (i, &p) in self.pivots.iter().enumerate() {
            if vec_ops::get(&v, p) {
                let row = self.rows[i].clone();
                vec_ops::xor_into(&mut v, &row);
            }
        }
        match vec_ops::leading_bit(&v) {
            None => None,
            Some(p) => {
                self.rows.push(v);
                self.pivots.push(p);
                Some(p)
            }
        }
    }

    /// Reduce without inserting; returns the remainder.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let mut v = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if vec_ops::get(&v, p) {
                vec_ops::xor_into(&mut v, &self.rows[i]);
            }
        }
        v
    }

    /// Reduce v, recording which basis rows were subtracted. Returns
    /// (remainder, coefficient bits over the current basis order).
    pub fn reduce_with_coeffs(&self, v: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let mut v = v.to_vec();
        let mut coeffs = vec_ops::zero(self.rows.len().max(1));
        for (i, &p) in self.pivots.iter().enumerate() {
            if vec_ops::get(&v, p) {
                vec_ops::set(&mut coeffs, i, true);
                vec_ops::xor_into(&mut v, &self.rows[i]);
            }
        }
        (v, coeffs)
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        vec_ops::is_zero(&self.reduce(v))
    }

    pub fn into_subspace(self) -> Subspace {
        let m = GF2Matrix::from_rows(self.rows, self.ambient);
        Subspace::spanned_by(self.ambient, &m)
    }
}

/// Deterministic 64-bit-state PRNG (SplitMix64). The seed is part of every
/// randomized certificate, so runs are reproducible.
#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
    seed: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed, seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // proptest's prelude also exports a trait named Rng
    type Rng = super::Rng;

    fn random_matrix(rng: &mut Rng, rows: usize, cols: usize) -> GF2Matrix {
        let mut m = GF2Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if rng.next_u64() % 2 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    #[test]
    fn rref_identity_and_zero() {
        let (r, rank, pivots) = GF2Matrix::identity(4).rref();
        assert_eq!(rank, 4);
        assert_eq!(pivots, vec![0, 1, 2, 3]);
        assert_eq!(r, GF2Matrix::identity(4));
        let (_, rank, _) = GF2Matrix::zero(3, 5).rref();
        assert_eq!(rank, 0);
    }

    #[test]
    fn equal_rows_rank_one() {
        let m = GF2Matrix::from_fn(2, 2, |_, _| true);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solve_identity_and_nullspace() {
        let mut rng = Rng::new(7);
        let b = random_matrix(&mut rng, 5, 3);
        let x = GF2Matrix::identity(5).solve_right(&b).unwrap();
        assert_eq!(x, b);

        let a = GF2Matrix::from_fn(1, 2, |_, _| true);
        let ns = a.nullspace();
        assert_eq!(ns.dim(), 1);
        assert!(ns.contains(&vec_ops::unit(2, 0).iter().zip(vec_ops::unit(2, 1)).map(|(a, b)| a | b).collect::<Vec<_>>()));
    }

    #[test]
    fn solve_random_verified_by_multiplication() {
        let mut rng = Rng::new(20240);
        for _ in 0..10 {
            let a = random_matrix(&mut rng, 20, 20);
            let x0 = random_matrix(&mut rng, 20, 4);
            let b = a.mul(&x0);
            let x = a.solve_right(&b).expect("consistent by construction");
            assert_eq!(a.mul(&x), b);
        }
    }

    #[test]
    fn kron_identities() {
        assert_eq!(
            GF2Matrix::identity(2).kron(&GF2Matrix::identity(3)),
            GF2Matrix::identity(6)
        );
        let mut rng = Rng::new(3);
        let a = random_matrix(&mut rng, 4, 5);
        assert_eq!(a.kron(&GF2Matrix::identity(1)), a);
    }

    #[test]
    fn spin_trivial_cases() {
        let acts = vec![GF2Matrix::identity(4)];
        let full = spin(&Subspace::full(4), &acts);
        assert!(full.is_full());
        let zero = spin(&Subspace::empty(4), &acts);
        assert_eq!(zero.dim(), 0);
    }

    #[test]
    fn spin_matches_brute_force_orbit_closure() {
        // Natural 5-dim permutation action of S_5 on a random seed vector:
        // the spun subspace must equal the span of the full orbit of the
        // vector under all 120 permutation matrices.
        let mut rng = Rng::new(99);
        let gens: Vec<GF2Matrix> = (0..4)
            .map(|i| {
                let mut p: Vec<usize> = (0..5).collect();
                p.swap(i, i + 1);
                GF2Matrix::permutation(&p)
            })
            .collect();
        for _ in 0..5 {
            let mut v = vec_ops::zero(5);
            for j in 0..5 {
                vec_ops::set(&mut v, j, rng.next_u64() % 2 == 1);
            }
            let seed = Subspace::spanned_by(5, &GF2Matrix::from_rows(vec![v.clone()], 5));
            let spun = spin(&seed, &gens);

            // brute force: all products of generators up to closure
            let mut perms: Vec<Vec<usize>> = vec![(0..5).collect()];
            loop {
                let mut grew = false;
                let snapshot = perms.clone();
                for p in &snapshot {
                    for i in 0..4 {
                        let mut q = p.clone();
                        q.swap(i, i + 1);
                        if !perms.contains(&q) {
                            perms.push(q);
                            grew = true;
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
            assert_eq!(perms.len(), 120);
            let orbit_rows: Vec<Vec<u64>> = perms
                .iter()
                .map(|p| {
                    let mut w = vec_ops::zero(5);
                    for j in 0..5 {
                        if vec_ops::get(&v, j) {
                            vec_ops::set(&mut w, p[j], true);
                        }
                    }
                    w
                })
                .collect();
            let orbit_span =
                Subspace::spanned_by(5, &GF2Matrix::from_rows(orbit_rows, 5));
            assert_eq!(spun, orbit_span);
        }
    }

    #[test]
    fn cache_round_trip() {
        let mut rng = Rng::new(5);
        let m = random_matrix(&mut rng, 130, 70);
        let mut buf = Vec::new();
        m.write_to(&mut buf).unwrap();
        let back = GF2Matrix::read_from(&mut buf.as_slice()).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn intersection_and_sum_dims() {
        let mut rng = Rng::new(11);
        for _ in 0..20 {
            let a = Subspace::spanned_by(12, &random_matrix(&mut rng, 5, 12));
            let b = Subspace::spanned_by(12, &random_matrix(&mut rng, 5, 12));
            let s = a.sum(&b);
            let i = a.intersection(&b);
            assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
            assert!(a.contains_space(&i));
            assert!(b.contains_space(&i));
            assert!(s.contains_space(&a));
        }
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(seed in 0u64..1000) {
            let mut rng = Rng::new(seed);
            let m = random_matrix(&mut rng, 12, 17);
            let (r, _, _) = m.rref();
            let (r2, _, _) = r.rref();
            prop_assert_eq!(r, r2);
        }

        #[test]
        fn rank_nullity(seed in 0u64..1000) {
            let mut rng = Rng::new(seed);
            let m = random_matrix(&mut rng, 13, 19);
            prop_assert_eq!(m.rank() + m.nullspace().dim(), 19);
        }

        #[test]
        fn kron_mixed_product(seed in 0u64..200) {
            let mut rng = Rng::new(seed);
            let a = random_matrix(&mut rng, 4, 4);
            let b = random_matrix(&mut rng, 3, 3);
            let c = random_matrix(&mut rng, 4, 4);
            let d = random_matrix(&mut rng, 3, 3);
            prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
        }

        #[test]
        fn transpose_involutive(seed in 0u64..200) {
            let mut rng = Rng::new(seed);
            let m = random_matrix(&mut rng, 9, 30);
            prop_assert_eq!(m.transpose().transpose(), m);
        }
    }
}
