//! Bit-packed vectors and matrices over GF(2).
//!
//! Vectors are fixed-length bit strings packed into 64-bit words; matrices are
//! row collections of equal-length vectors. Row reduction uses a deterministic
//! pivot rule (lowest-index nonzero column, lowest-index row) so canonical
//! forms are reproducible.

/// Fixed-length bit vector packed into `u64` words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0u64; len.div_ceil(64)],
        }
    }

    pub fn from_indices(len: usize, ones: &[usize]) -> Self {
        let mut v = BitVec::zeros(len);
        for &i in ones {
            v.set(i, true);
        }
        v
    }

    /// Parse from a string of `0`/`1` characters, index 0 first.
    pub fn from_bits_str(s: &str) -> Self {
        let bits: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut v = BitVec::zeros(bits.len());
        for (i, c) in bits.iter().enumerate() {
            v.set(i, *c == '1');
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let w = &mut self.words[i / 64];
        if value {
            *w |= 1u64 << (i % 64);
        } else {
            *w &= !(1u64 << (i % 64));
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "BitVec length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Parity of the AND of two vectors: the GF(2) dot product.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "BitVec length mismatch");
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }

    pub fn popcount(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Popcount of the AND with another vector.
    pub fn and_popcount(&self, other: &BitVec) -> usize {
        assert_eq!(self.len, other.len, "BitVec length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    /// Index of the first set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (wi, w) in self.words.iter().enumerate() {
            if *w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    /// Concatenation `[self | other]`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i, true);
        }
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Split into `[0..mid)` and `[mid..len)`.
    pub fn split(&self, mid: usize) -> (BitVec, BitVec) {
        let mut a = BitVec::zeros(mid);
        let mut b = BitVec::zeros(self.len - mid);
        for i in self.iter_ones() {
            if i < mid {
                a.set(i, true);
            } else {
                b.set(i - mid, true);
            }
        }
        (a, b)
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl std::fmt::Debug for BitVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// Dense GF(2) matrix stored as rows of [`BitVec`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinMatrix {
    n_cols: usize,
    rows: Vec<BitVec>,
}

impl BinMatrix {
    pub fn new(n_cols: usize) -> Self {
        BinMatrix {
            n_cols,
            rows: Vec::new(),
        }
    }

    pub fn from_rows(n_cols: usize, rows: Vec<BitVec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == n_cols), "row length mismatch");
        BinMatrix { n_cols, rows }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| BitVec::from_indices(n, &[i])).collect();
        BinMatrix { n_cols: n, rows }
    }

    pub fn push_row(&mut self, row: BitVec) {
        assert_eq!(row.len(), self.n_cols, "row length mismatch");
        self.rows.push(row);
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    /// Row-reduced echelon form with natural column order.
    ///
    /// Returns the reduced matrix (zero rows removed), its rank and the pivot
    /// column of each kept row.
    pub fn rref(&self) -> (BinMatrix, usize, Vec<usize>) {
        let order: Vec<usize> = (0..self.n_cols).collect();
        let mut m = self.clone();
        let pivots = rref_in_place(&mut m.rows, &order, &mut |_, _| {});
        m.rows.retain(|r| !r.is_zero());
        let rank = pivots.len();
        (m, rank, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of the right null space: all `v` with `M v = 0`.
    pub fn nullspace(&self) -> Vec<BitVec> {
        let (r, _, pivots) = self.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in (0..self.n_cols).filter(|c| !pivot_set.contains(c)) {
            let mut v = BitVec::zeros(self.n_cols);
            v.set(free, true);
            for (row, &p) in r.rows.iter().zip(&pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Reduce `v` against the rows of an RREF matrix, returning the remainder.
    pub fn reduce(&self, v: &BitVec, pivots: &[usize]) -> BitVec {
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(pivots) {
            if out.get(p) {
                out.xor_assign(row);
            }
        }
        out
    }

    /// Whether `v` lies in the row space. `self` must be in RREF with `pivots`.
    pub fn contains_in_rowspace(&self, v: &BitVec, pivots: &[usize]) -> bool {
        self.reduce(v, pivots).is_zero()
    }
}

/// In-place row reduction over an explicit column order.
///
/// `on_add(target, source)` fires for every row operation
/// `rows[target] ^= rows[source]` and `on_add` with swapped semantics is not
/// needed because swaps are reported through the returned pivot list ordering;
/// callers tracking side data should mirror swaps via `on_swap`.
pub fn rref_in_place<F>(rows: &mut [BitVec], col_order: &[usize], on_add: &mut F) -> Vec<usize>
where
    F: FnMut(usize, usize),
{
    let mut pivots = Vec::new();
    let mut next_row = 0usize;
    for &col in col_order {
        if next_row >= rows.len() {
            break;
        }
        let Some(src) = (next_row..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(next_row, src);
        for r in 0..rows.len() {
            if r != next_row && rows[r].get(col) {
                let (a, b) = split_two(rows, r, next_row);
                a.xor_assign(b);
                on_add(r, next_row);
            }
        }
        pivots.push(col);
        next_row += 1;
    }
    pivots
}

/// Mutable references to two distinct rows.
fn split_two(rows: &mut [BitVec], a: usize, b: usize) -> (&mut BitVec, &BitVec) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = rows.split_at_mut(b);
        (&mut lo[a], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(a);
        (&mut hi[0], &lo[b])
    }
}

/// Row reduction that also tracks row provenance.
///
/// Returns `(reduced rows, combos, pivots)` where `combos[k]` gives, for each
/// reduced row `k`, the set of input rows whose GF(2) sum it equals.
pub fn rref_tracked(rows: &[BitVec], n_cols: usize) -> (Vec<BitVec>, Vec<BitVec>, Vec<usize>) {
    let k = rows.len();
    let mut work: Vec<BitVec> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| r.concat(&BitVec::from_indices(k, &[i])))
        .collect();
    let order: Vec<usize> = (0..n_cols).collect();
    let pivots = rref_in_place(&mut work, &order, &mut |_, _| {});
    let mut reduced = Vec::new();
    let mut combos = Vec::new();
    for w in &work {
        let (head, tail) = w.split(n_cols);
        if !head.is_zero() {
            reduced.push(head);
            combos.push(tail);
        }
    }
    reduced.truncate(pivots.len());
    combos.truncate(pivots.len());
    (reduced, combos, pivots)
}

/// Solve the linear system `constraints · v = rhs` over GF(2).
///
/// Each constraint is a row vector `c_k` with the equation `c_k · v = rhs_k`.
/// Returns a particular solution and a basis of the homogeneous solution
/// space, or `None` when inconsistent.
pub fn solve_linear(
    constraints: &[BitVec],
    rhs: &BitVec,
    n_vars: usize,
) -> Option<(BitVec, Vec<BitVec>)> {
    assert_eq!(constraints.len(), rhs.len());
    let mut rows: Vec<BitVec> = constraints
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let mut r = c.clone();
            let mut aug = BitVec::zeros(1);
            aug.set(0, rhs.get(k));
            r = r.concat(&aug);
            r
        })
        .collect();
    let order: Vec<usize> = (0..n_vars).collect();
    let pivots = rref_in_place(&mut rows, &order, &mut |_, _| {});
    // Inconsistent iff some zero row has rhs bit 1.
    for r in &rows {
        let (head, tail) = r.split(n_vars);
        if head.is_zero() && tail.get(0) {
            return None;
        }
    }
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut particular = BitVec::zeros(n_vars);
    for (row, &p) in rows.iter().zip(&pivots) {
        if row.get(n_vars) {
            particular.set(p, true);
        }
    }
    let mut homogeneous = Vec::new();
    for free in (0..n_vars).filter(|c| !pivot_set.contains(c)) {
        let mut v = BitVec::zeros(n_vars);
        v.set(free, true);
        for (row, &p) in rows.iter().zip(&pivots) {
            if row.get(free) {
                v.set(p, true);
            }
        }
        homogeneous.push(v);
    }
    Some((particular, homogeneous))
}

/// Minimize `particular ⊕ span(homogeneous)` under the key ordering given by
/// `significance`: `significance[0]` is the most significant position.
pub fn lex_min_solution(
    particular: &BitVec,
    homogeneous: &[BitVec],
    significance: &[usize],
) -> BitVec {
    let mut basis: Vec<BitVec> = homogeneous.to_vec();
    let pivots = rref_in_place(&mut basis, significance, &mut |_, _| {});
    basis.retain(|r| !r.is_zero());
    let mut out = particular.clone();
    for (row, &p) in basis.iter().zip(&pivots) {
        if out.get(p) {
            out.xor_assign(row);
        }
    }
    out
}

/// Basis of the intersection of two row spaces (Zassenhaus).
pub fn rowspace_intersection(a: &[BitVec], b: &[BitVec], n_cols: usize) -> Vec<BitVec> {
    let mut work: Vec<BitVec> = Vec::with_capacity(a.len() + b.len());
    for r in a {
        work.push(r.concat(r));
    }
    let zero = BitVec::zeros(n_cols);
    for r in b {
        work.push(r.concat(&zero));
    }
    let order: Vec<usize> = (0..2 * n_cols).collect();
    rref_in_place(&mut work, &order, &mut |_, _| {});
    let mut out = Vec::new();
    for w in &work {
        let (head, tail) = w.split(n_cols);
        if head.is_zero() && !tail.is_zero() {
            out.push(tail);
        }
    }
    out
}
