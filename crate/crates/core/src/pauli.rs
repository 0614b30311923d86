//! Phase-exact n-qubit Pauli operators in binary symplectic form.
//!
//! An operator is `i^phase · Π_j X_j^{x_j} Z_j^{z_j}` with X written left of Z
//! on every qubit and qubit 0 leftmost in string form. All sign bookkeeping in
//! the crate flows from this one convention; it is validated against dense
//! matrices in the test suite. An operator is Hermitian exactly when
//! `phase + popcount(x AND z)` is even.

use crate::error::{Error, Result};
use crate::gf2::{rref_in_place, BitVec};

/// Pauli operator `i^{phase} X^x Z^z` on `n` qubits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOp {
    pub x: BitVec,
    pub z: BitVec,
    /// Exponent of the leading `i`, mod 4.
    pub phase: u8,
}

impl PauliOp {
    pub fn identity(n: usize) -> Self {
        PauliOp {
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
            phase: 0,
        }
    }

    pub fn from_parts(x: BitVec, z: BitVec, phase: u8) -> Self {
        assert_eq!(x.len(), z.len(), "x/z length mismatch");
        PauliOp {
            x,
            z,
            phase: phase & 3,
        }
    }

    /// Single-qubit X at `q`.
    pub fn x_at(n: usize, q: usize) -> Self {
        PauliOp::from_parts(BitVec::from_indices(n, &[q]), BitVec::zeros(n), 0)
    }

    /// Single-qubit Z at `q`.
    pub fn z_at(n: usize, q: usize) -> Self {
        PauliOp::from_parts(BitVec::zeros(n), BitVec::from_indices(n, &[q]), 0)
    }

    /// Single-qubit Y at `q` (Hermitian, `Y = i X Z`).
    pub fn y_at(n: usize, q: usize) -> Self {
        PauliOp::from_parts(
            BitVec::from_indices(n, &[q]),
            BitVec::from_indices(n, &[q]),
            1,
        )
    }

    pub fn n_qubits(&self) -> usize {
        self.x.len()
    }

    pub fn is_identity_bits(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        let mut w = 0;
        for i in 0..self.n_qubits() {
            if self.x.get(i) || self.z.get(i) {
                w += 1;
            }
        }
        w
    }

    pub fn is_hermitian(&self) -> bool {
        (self.phase as usize + self.x.and_popcount(&self.z)) % 2 == 0
    }

    /// Sign of a Hermitian operator relative to its canonical `+` form
    /// (`i^{popcount(x AND z)} X^x Z^z`): `false` for `+`, `true` for `−`.
    pub fn sign_bit(&self) -> bool {
        debug_assert!(self.is_hermitian());
        let w = (self.x.and_popcount(&self.z) % 4) as u8;
        ((self.phase + 4 - w) / 2) % 2 == 1
    }

    /// Canonical Hermitian representative with `+` sign for these bits.
    pub fn hermitian_canonical(x: BitVec, z: BitVec) -> Self {
        let w = (x.and_popcount(&z) % 4) as u8;
        PauliOp::from_parts(x, z, w)
    }

    pub fn negated(&self) -> Self {
        PauliOp {
            x: self.x.clone(),
            z: self.z.clone(),
            phase: (self.phase + 2) & 3,
        }
    }

    /// Force Hermiticity by absorbing a factor of `i` if required.
    pub fn hermitianized(mut self) -> Self {
        if !self.is_hermitian() {
            self.phase = (self.phase + 1) & 3;
        }
        self
    }

    /// Adjoint: conjugates the phase.
    pub fn dagger(&self) -> Self {
        // (i^p X^x Z^z)† = (−i)^p Z^z X^x = (−1)^{x·z} (−i)^p X^x Z^z.
        let xz = (self.x.and_popcount(&self.z) % 2) as u8;
        let phase = (4 - self.phase + 2 * xz) & 3;
        PauliOp {
            x: self.x.clone(),
            z: self.z.clone(),
            phase,
        }
    }

    /// Bits as one `[x | z]` row of length 2n.
    pub fn to_row(&self) -> BitVec {
        self.x.concat(&self.z)
    }

    pub fn from_row(row: &BitVec, phase: u8) -> Self {
        let n = row.len() / 2;
        let (x, z) = row.split(n);
        PauliOp::from_parts(x, z, phase)
    }

    /// Key ordering used for deterministic lexicographic choices: position
    /// `x_j` weighs `2^j` and `z_j` weighs `2^{n+j}`; smaller key wins.
    pub fn lex_key_significance(n: usize) -> Vec<usize> {
        // Most significant first: z_{n-1}, ..., z_0, x_{n-1}, ..., x_0
        // over a [x | z] row of length 2n.
        let mut order = Vec::with_capacity(2 * n);
        for j in (0..n).rev() {
            order.push(n + j);
        }
        for j in (0..n).rev() {
            order.push(j);
        }
        order
    }
}

impl std::fmt::Debug for PauliOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for PauliOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_hermitian() {
            write!(f, "{}", if self.sign_bit() { '-' } else { '+' })?;
        } else {
            write!(f, "(i^{})", self.phase)?;
        }
        for q in 0..self.n_qubits() {
            let c = match (self.x.get(q), self.z.get(q)) {
                (false, false) => 'I',
                (true, false) => 'X',
                (false, true) => 'Z',
                (true, true) => 'Y',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for PauliOp {
    type Err = Error;

    /// Parse strings like `XZZXI`, `+XXXX`, `-IZIZ`.
    fn from_str(s: &str) -> Result<PauliOp> {
        let s = s.trim();
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let n = body.chars().count();
        let mut x = BitVec::zeros(n);
        let mut z = BitVec::zeros(n);
        for (q, c) in body.chars().enumerate() {
            match c.to_ascii_uppercase() {
                'I' => {}
                'X' => x.set(q, true),
                'Z' => z.set(q, true),
                'Y' => {
                    x.set(q, true);
                    z.set(q, true);
                }
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("invalid Pauli character '{other}'"),
                    })
                }
            }
        }
        let mut p = PauliOp::hermitian_canonical(x, z);
        if negative {
            p = p.negated();
        }
        Ok(p)
    }
}

/// Symplectic product: 0 iff the operators commute.
pub fn symplectic_product(u: &PauliOp, v: &PauliOp) -> u8 {
    assert_eq!(u.n_qubits(), v.n_qubits(), "qubit count mismatch");
    let a = u.x.and_popcount(&v.z) + u.z.and_popcount(&v.x);
    (a % 2) as u8
}

/// Symplectic product on raw `[x | z]` rows.
pub fn symplectic_product_rows(u: &BitVec, v: &BitVec) -> u8 {
    let n = u.len() / 2;
    let (ux, uz) = u.split(n);
    let (vx, vz) = v.split(n);
    ((ux.and_popcount(&vz) + uz.and_popcount(&vx)) % 2) as u8
}

/// Exact product of two Pauli operators.
///
/// `Z^{z1} X^{x2} = (−1)^{z1·x2} X^{x2} Z^{z1}`, so the composite phase picks
/// up `2·(z1·x2)` on top of the operand phases.
pub fn pauli_mul(p: &PauliOp, q: &PauliOp) -> PauliOp {
    assert_eq!(p.n_qubits(), q.n_qubits(), "qubit count mismatch");
    let cross = (p.z.and_popcount(&q.x) % 2) as u8;
    PauliOp {
        x: p.x.xor(&q.x),
        z: p.z.xor(&q.z),
        phase: (p.phase + q.phase + 2 * cross) & 3,
    }
}

/// Fold a product of Pauli operators left to right.
pub fn pauli_product<'a>(n: usize, factors: impl IntoIterator<Item = &'a PauliOp>) -> PauliOp {
    let mut acc = PauliOp::identity(n);
    for f in factors {
        acc = pauli_mul(&acc, f);
    }
    acc
}

/// Result of a symplectic Gram–Schmidt decomposition.
#[derive(Clone, Debug)]
pub struct SymplecticBasis {
    /// Anticommuting pairs `(P, Q)` with unit symplectic product inside the
    /// pair and zero across pairs and against the center.
    pub pairs: Vec<(PauliOp, PauliOp)>,
    /// Mutually commuting leftovers.
    pub center: Vec<PauliOp>,
}

/// Symplectic Gram–Schmidt over a set of Hermitian Pauli operators.
///
/// The output generates the same GF(2) span as the input; dependent and
/// identity inputs are dropped. Products are Hermitianized (a factor of `i`
/// for anticommuting products), so every output operator is Hermitian with a
/// definite sign.
pub fn symplectic_gram_schmidt(ops: &[PauliOp]) -> SymplecticBasis {
    let Some(first) = ops.first() else {
        return SymplecticBasis {
            pairs: Vec::new(),
            center: Vec::new(),
        };
    };
    let n = first.n_qubits();
    // Independent spanning subset first, in input order.
    let mut work: Vec<PauliOp> = Vec::new();
    let mut rows: Vec<BitVec> = Vec::new();
    for op in ops {
        rows.push(op.to_row());
        let m = crate::gf2::BinMatrix::from_rows(2 * n, rows.clone());
        if m.rank() == rows.len() {
            work.push(op.clone());
        } else {
            rows.pop();
        }
    }

    let mut pairs = Vec::new();
    let mut center = Vec::new();
    while let Some(v) = work.first().cloned() {
        work.remove(0);
        if let Some(k) = work
            .iter()
            .position(|w| symplectic_product(&v, w) == 1)
        {
            let partner = work.remove(k);
            for w in work.iter_mut() {
                let s_v = symplectic_product(w, &v);
                let s_p = symplectic_product(w, &partner);
                if s_p == 1 {
                    *w = pauli_mul(w, &v).hermitianized();
                }
                if s_v == 1 {
                    *w = pauli_mul(w, &partner).hermitianized();
                }
            }
            pairs.push((v, partner));
        } else {
            center.push(v);
        }
    }
    SymplecticBasis { pairs, center }
}

impl SymplecticBasis {
    /// All operators in pair-then-center order.
    pub fn all_ops(&self) -> Vec<PauliOp> {
        let mut out = Vec::new();
        for (p, q) in &self.pairs {
            out.push(p.clone());
            out.push(q.clone());
        }
        out.extend(self.center.iter().cloned());
        out
    }
}

/// Basis of the symplectic kernel of `rows`: all `[x | z]` vectors with zero
/// symplectic product against every row.
///
/// The rows must be pairwise symplectically orthogonal (an abelian group);
/// the kernel then has dimension `2n − rank` and contains the row space.
pub fn kernel_symplectic(rows: &[BitVec], n: usize) -> Result<Vec<BitVec>> {
    for (i, a) in rows.iter().enumerate() {
        for b in rows.iter().skip(i + 1) {
            if symplectic_product_rows(a, b) == 1 {
                return Err(Error::NonAbelian);
            }
        }
    }
    // symp(v, r) = v · Λr where Λ swaps the x and z halves.
    let swapped: Vec<BitVec> = rows
        .iter()
        .map(|r| {
            let (x, z) = r.split(n);
            z.concat(&x)
        })
        .collect();
    let m = crate::gf2::BinMatrix::from_rows(2 * n, swapped);
    Ok(m.nullspace())
}

/// Reduce a set of `[x | z]` rows to an independent RREF basis.
pub fn row_basis(rows: &[BitVec], n_cols: usize) -> (Vec<BitVec>, Vec<usize>) {
    let mut work: Vec<BitVec> = rows.to_vec();
    let order: Vec<usize> = (0..n_cols).collect();
    let pivots = rref_in_place(&mut work, &order, &mut |_, _| {});
    work.retain(|r| !r.is_zero());
    (work, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    pub(crate) type Mat = Vec<Vec<Complex64>>;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn single(x: bool, z: bool) -> Mat {
        let zero = c(0.0, 0.0);
        let one = c(1.0, 0.0);
        match (x, z) {
            (false, false) => vec![vec![one, zero], vec![zero, one]],
            (true, false) => vec![vec![zero, one], vec![one, zero]],
            (false, true) => vec![vec![one, zero], vec![zero, -one]],
            // X·Z
            (true, true) => vec![vec![zero, -one], vec![one, zero]],
        }
    }

    fn kron(a: &Mat, b: &Mat) -> Mat {
        let (ra, ca) = (a.len(), a[0].len());
        let (rb, cb) = (b.len(), b[0].len());
        let mut out = vec![vec![c(0.0, 0.0); ca * cb]; ra * rb];
        for i in 0..ra {
            for j in 0..ca {
                for k in 0..rb {
                    for l in 0..cb {
                        out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
                    }
                }
            }
        }
        out
    }

    fn matmul(a: &Mat, b: &Mat) -> Mat {
        let n = a.len();
        let mut out = vec![vec![c(0.0, 0.0); n]; n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
        out
    }

    /// Dense matrix of a PauliOp, qubit 0 as the most significant factor.
    pub(crate) fn dense(p: &PauliOp) -> Mat {
        let mut m = vec![vec![c(1.0, 0.0)]];
        for q in 0..p.n_qubits() {
            m = kron(&m, &single(p.x.get(q), p.z.get(q)));
        }
        let ph = Complex64::i().powu(p.phase as u32);
        for row in &mut m {
            for v in row.iter_mut() {
                *v *= ph;
            }
        }
        m
    }

    fn mat_eq(a: &Mat, b: &Mat) -> bool {
        a.iter()
            .zip(b)
            .all(|(ra, rb)| ra.iter().zip(rb).all(|(x, y)| (x - y).norm() < 1e-12))
    }

    fn all_paulis(n: usize) -> Vec<PauliOp> {
        let mut out = Vec::new();
        for bits in 0..(1usize << (2 * n)) {
            for phase in 0..4u8 {
                let mut x = BitVec::zeros(n);
                let mut z = BitVec::zeros(n);
                for q in 0..n {
                    x.set(q, (bits >> q) & 1 == 1);
                    z.set(q, (bits >> (n + q)) & 1 == 1);
                }
                out.push(PauliOp::from_parts(x, z, phase));
            }
        }
        out
    }

    #[test]
    fn x_times_z_is_minus_i_y() {
        let x = PauliOp::x_at(1, 0);
        let z = PauliOp::z_at(1, 0);
        let y = PauliOp::y_at(1, 0);
        let xz = pauli_mul(&x, &z);
        // XZ = −iY as dense matrices.
        let minus_i_y = {
            let mut m = dense(&y);
            for row in &mut m {
                for v in row.iter_mut() {
                    *v *= -Complex64::i();
                }
            }
            m
        };
        assert!(mat_eq(&dense(&xz), &minus_i_y));
        // ZX = +iY.
        let zx = pauli_mul(&z, &x);
        let plus_i_y = {
            let mut m = dense(&y);
            for row in &mut m {
                for v in row.iter_mut() {
                    *v *= Complex64::i();
                }
            }
            m
        };
        assert!(mat_eq(&dense(&zx), &plus_i_y));
    }

    #[test]
    fn hermitian_square_is_identity_with_zero_phase() {
        for p in all_paulis(2).into_iter().filter(|p| p.is_hermitian()) {
            let sq = pauli_mul(&p, &p);
            assert!(sq.is_identity_bits());
            assert_eq!(sq.phase, 0);
        }
    }

    #[test]
    fn mul_is_phase_exact_against_dense_matrices() {
        for n in 1..=2usize {
            let ops = all_paulis(n);
            for p in &ops {
                for q in &ops {
                    let r = pauli_mul(p, q);
                    assert!(mat_eq(&dense(&r), &matmul(&dense(p), &dense(q))));
                }
            }
        }
    }

    #[test]
    fn mul_is_associative() {
        let ops: Vec<PauliOp> = all_paulis(1);
        for a in &ops {
            for b in &ops {
                for c in &ops {
                    let left = pauli_mul(&pauli_mul(a, b), c);
                    let right = pauli_mul(a, &pauli_mul(b, c));
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn symplectic_product_matches_dense_commutation() {
        for n in 1..=2usize {
            let ops: Vec<PauliOp> = all_paulis(n)
                .into_iter()
                .filter(|p| p.phase == 0)
                .collect();
            for u in &ops {
                for v in &ops {
                    let ab = matmul(&dense(u), &dense(v));
                    let ba = matmul(&dense(v), &dense(u));
                    let commute = mat_eq(&ab, &ba);
                    assert_eq!(symplectic_product(u, v) == 0, commute);
                }
            }
        }
    }

    #[test]
    fn symplectic_product_examples() {
        let x = PauliOp::x_at(1, 0);
        let z = PauliOp::z_at(1, 0);
        assert_eq!(symplectic_product(&x, &z), 1);
        assert_eq!(symplectic_product(&x, &x), 0);
        // S_1 of the [[5,2]] code against a generator located on qubits 0..2.
        let u: PauliOp = "XZZXI".parse().unwrap();
        let v: PauliOp = "ZXZII".parse().unwrap();
        assert_eq!(symplectic_product(&u, &v), 0);
    }

    #[test]
    fn dagger_matches_dense_conjugate_transpose() {
        for p in all_paulis(2) {
            let d = dense(&p);
            let n = d.len();
            let mut dt = vec![vec![c(0.0, 0.0); n]; n];
            for i in 0..n {
                for j in 0..n {
                    dt[i][j] = d[j][i].conj();
                }
            }
            assert!(mat_eq(&dense(&p.dagger()), &dt));
        }
    }

    #[test]
    fn gram_schmidt_xz_pair() {
        let basis = symplectic_gram_schmidt(&[PauliOp::x_at(1, 0), PauliOp::z_at(1, 0)]);
        assert_eq!(basis.pairs.len(), 1);
        assert!(basis.center.is_empty());
    }

    #[test]
    fn gram_schmidt_lone_z_is_center() {
        let basis = symplectic_gram_schmidt(&[PauliOp::z_at(1, 0)]);
        assert!(basis.pairs.is_empty());
        assert_eq!(basis.center.len(), 1);
    }

    #[test]
    fn gram_schmidt_five_qubit_algebra() {
        // Region algebra of the [[5,2]] example: one pair plus one center.
        let ops: Vec<PauliOp> = ["XIIII", "ZXZII", "YZYII"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let basis = symplectic_gram_schmidt(&ops);
        assert_eq!(basis.pairs.len(), 1);
        assert_eq!(basis.center.len(), 1);
    }

    #[test]
    fn gram_schmidt_contract_and_span() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(19);
        for _ in 0..40 {
            let n = rng.random_range(1..=6);
            let count = rng.random_range(1..=8);
            let ops: Vec<PauliOp> = (0..count)
                .map(|_| {
                    let mut x = BitVec::zeros(n);
                    let mut z = BitVec::zeros(n);
                    for q in 0..n {
                        x.set(q, rng.random());
                        z.set(q, rng.random());
                    }
                    PauliOp::hermitian_canonical(x, z)
                })
                .collect();
            let basis = symplectic_gram_schmidt(&ops);
            let out = basis.all_ops();
            // Same span.
            let in_rows: Vec<BitVec> = ops.iter().map(|p| p.to_row()).collect();
            let out_rows: Vec<BitVec> = out.iter().map(|p| p.to_row()).collect();
            let rank_in = crate::gf2::BinMatrix::from_rows(2 * n, in_rows.clone()).rank();
            let rank_out = crate::gf2::BinMatrix::from_rows(2 * n, out_rows.clone()).rank();
            assert_eq!(rank_in, rank_out);
            assert_eq!(rank_out, out_rows.len());
            let mut all = in_rows;
            all.extend(out_rows);
            assert_eq!(crate::gf2::BinMatrix::from_rows(2 * n, all).rank(), rank_in);
            // Pairing contract.
            for (i, (p, q)) in basis.pairs.iter().enumerate() {
                assert!(p.is_hermitian() && q.is_hermitian());
                assert_eq!(symplectic_product(p, q), 1);
                for (j, (p2, q2)) in basis.pairs.iter().enumerate() {
                    if i != j {
                        assert_eq!(symplectic_product(p, p2), 0);
                        assert_eq!(symplectic_product(p, q2), 0);
                        assert_eq!(symplectic_product(q, p2), 0);
                        assert_eq!(symplectic_product(q, q2), 0);
                    }
                }
                for r in &basis.center {
                    assert_eq!(symplectic_product(p, r), 0);
                    assert_eq!(symplectic_product(q, r), 0);
                }
            }
            for (i, a) in basis.center.iter().enumerate() {
                for b in basis.center.iter().skip(i + 1) {
                    assert_eq!(symplectic_product(a, b), 0);
                }
            }
        }
    }

    #[test]
    fn kernel_symplectic_contains_rows_and_has_right_dim() {
        // [[4,1,2]] stabilizer group.
        let gens: Vec<PauliOp> = ["XXXX", "IZIZ", "ZIZI"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let rows: Vec<BitVec> = gens.iter().map(|g| g.to_row()).collect();
        let kernel = kernel_symplectic(&rows, 4).unwrap();
        assert_eq!(kernel.len(), 2 * 4 - 3);
        let m = crate::gf2::BinMatrix::from_rows(8, kernel.clone());
        let (r, rank, piv) = m.rref();
        assert_eq!(rank, 5);
        for row in &rows {
            assert!(r.contains_in_rowspace(row, &piv));
        }
        // Z̄ = ZZII is in the kernel.
        let zbar: PauliOp = "ZZII".parse().unwrap();
        assert!(r.contains_in_rowspace(&zbar.to_row(), &piv));
        for v in &kernel {
            for row in &rows {
                assert_eq!(symplectic_product_rows(v, row), 0);
            }
        }
    }

    #[test]
    fn kernel_symplectic_five_qubit_contains_logical_rows() {
        let gens: Vec<PauliOp> = ["XZZXI", "IXZZX", "XIXZZ"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let rows: Vec<BitVec> = gens.iter().map(|g| g.to_row()).collect();
        let kernel = kernel_symplectic(&rows, 5).unwrap();
        assert_eq!(kernel.len(), 7);
        let m = crate::gf2::BinMatrix::from_rows(10, kernel);
        let (r, _, piv) = m.rref();
        // The four H_L rows, written as Pauli strings.
        for s in ["IZZXI", "IIZIX", "ZIZZI", "IZIIZ"] {
            let p: PauliOp = s.parse::<PauliOp>().unwrap();
            assert!(r.contains_in_rowspace(&p.to_row(), &piv));
        }
    }

    #[test]
    fn kernel_symplectic_full_rank_group_is_self() {
        // Stabilizer of |00⟩.
        let rows = vec![
            PauliOp::z_at(2, 0).to_row(),
            PauliOp::z_at(2, 1).to_row(),
        ];
        let kernel = kernel_symplectic(&rows, 2).unwrap();
        assert_eq!(kernel.len(), 2);
        let m = crate::gf2::BinMatrix::from_rows(4, kernel);
        let (r, _, piv) = m.rref();
        for row in &rows {
            assert!(r.contains_in_rowspace(row, &piv));
        }
    }

    #[test]
    fn kernel_symplectic_rejects_non_abelian() {
        let rows = vec![PauliOp::x_at(1, 0).to_row(), PauliOp::z_at(1, 0).to_row()];
        assert!(kernel_symplectic(&rows, 1).is_err());
    }

    #[test]
    fn parse_display_roundtrip() {
        for s in ["+XZZXI", "-IZIZ", "+YYII", "-ZZZZZ"] {
            let p: PauliOp = s.parse().unwrap();
            assert!(p.is_hermitian());
            assert_eq!(format!("{p}"), s.replace('+', "+"));
        }
    }
}
