//! Dense complex linear algebra over qudit registers.
//!
//! Matrices are row-major `Complex64` with the leftmost qudit as the most
//! significant digit of a basis index, so the basis string |i₁i₂⋯iₙ⟩ reads
//! like the index written in base d. Everything is double precision and
//! sequential; results are bit-reproducible across runs.

mod decomp;
mod matio;

pub use decomp::{expm, hermitian_eig, householder_qr, unitary_log};
pub use matio::{read_matrix, read_state, write_csv, write_matrix, write_state};

use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{check_cap, Error, Result};

/// Default cap on register dimension d^n (and on group-register sizes).
pub const DEFAULT_DIM_CAP: usize = 1 << 20;

/// Dense row-major complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows.min(8) {
            let entries: Vec<String> = (0..self.cols.min(8))
                .map(|c| format!("{:.4}{:+.4}i", self[(r, c)].re, self[(r, c)].im))
                .collect();
            writeln!(f, "  {}", entries.join(" "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.cols + c]
    }
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix { rows, cols, data: vec![Complex64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r);
        }
        ComplexMatrix { rows: nrows, cols: ncols, data }
    }

    /// Real matrix from f64 rows.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub(crate) fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn row(&self, r: usize) -> &[Complex64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                let trow = &mut out.data[r * other.cols..(r + 1) * other.cols];
                for c in 0..other.cols {
                    trow[c] += a * orow[c];
                }
            }
        }
        out
    }

    /// Applies the matrix to a vector.
    pub fn apply(&self, v: &StateVector) -> StateVector {
        assert_eq!(self.cols, v.dim(), "shape mismatch in apply");
        let out = (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v.amplitudes())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect();
        StateVector::new(out)
    }

    pub fn add(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        ComplexMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        ComplexMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: Complex64) -> ComplexMatrix {
        let data = self.data.iter().map(|a| a * s).collect();
        ComplexMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn adjoint(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)];
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// ‖A†A − I‖_F, the unitarity residual.
    pub fn unitarity_residual(&self) -> f64 {
        let gram = self.adjoint().mul(self);
        gram.sub(&ComplexMatrix::identity(gram.rows)).frobenius_norm()
    }

    /// Extracts the contiguous block with the given corner and shape.
    pub fn block(&self, row0: usize, col0: usize, nrows: usize, ncols: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(nrows, ncols, |r, c| self[(row0 + r, col0 + c)])
    }

    /// Commutator AB − BA.
    pub fn commutator(&self, other: &ComplexMatrix) -> ComplexMatrix {
        self.mul(other).sub(&other.mul(self))
    }
}

/// ‖a − b‖_F; shape mismatch is an argument error.
pub fn frobenius_distance(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    if (a.rows, a.cols) != (b.rows, b.cols) {
        return Err(Error::invalid(format!(
            "shape mismatch: {}x{} vs {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    Ok(a.sub(b).frobenius_norm())
}

/// Kronecker product with row-major pairing: index of (i, j) is i·dim(b) + j.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let rows = a
        .rows
        .checked_mul(b.rows)
        .ok_or(Error::ResourceLimit { needed: a.rows as u128 * b.rows as u128, cap: usize::MAX as u128 })?;
    let cols = a
        .cols
        .checked_mul(b.cols)
        .ok_or(Error::ResourceLimit { needed: a.cols as u128 * b.cols as u128, cap: usize::MAX as u128 })?;
    rows.checked_mul(cols)
        .ok_or(Error::ResourceLimit { needed: rows as u128 * cols as u128, cap: usize::MAX as u128 })?;
    let mut out = ComplexMatrix::zeros(rows, cols);
    for ar in 0..a.rows {
        for ac in 0..a.cols {
            let v = a[(ar, ac)];
            if v.norm_sqr() == 0.0 {
                continue;
            }
            for br in 0..b.rows {
                for bc in 0..b.cols {
                    out[(ar * b.rows + br, ac * b.cols + bc)] = v * b[(br, bc)];
                }
            }
        }
    }
    Ok(out)
}

/// Dense complex state vector.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Self {
        StateVector { amplitudes }
    }

    pub fn zero(dim: usize) -> Self {
        StateVector { amplitudes: vec![Complex64::new(0.0, 0.0); dim] }
    }

    /// Computational basis state |k⟩.
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut v = Self::zero(dim);
        v.amplitudes[k] = Complex64::new(1.0, 0.0);
        v
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn scale(&self, s: Complex64) -> StateVector {
        StateVector { amplitudes: self.amplitudes.iter().map(|a| a * s).collect() }
    }

    pub fn normalized(&self) -> StateVector {
        self.scale(Complex64::new(1.0 / self.norm(), 0.0))
    }

    pub fn sub(&self, other: &StateVector) -> StateVector {
        StateVector {
            amplitudes: self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn tensor(&self, other: &StateVector) -> StateVector {
        let mut out = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                out.push(a * b);
            }
        }
        StateVector { amplitudes: out }
    }
}

/// A permutation of {0, …, n−1} stored as the image sequence k ↦ π(k).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<String> = self.images.iter().map(|&x| (x + 1).to_string()).collect();
        write!(f, "[{}]", one_based.join(","))
    }
}

impl Permutation {
    /// Builds from 0-based images, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::invalid("images are not a bijection"));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based one-line notation "2,1,3".
    pub fn parse(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|t| {
                let v: usize = t
                    .trim()
                    .parse()
                    .map_err(|_| Error::invalid(format!("bad permutation entry {t:?}")))?;
                if v == 0 {
                    return Err(Error::invalid("permutation entries are 1-based"));
                }
                Ok(v - 1)
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Transposition (a b) on n points (0-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Group composition: (self ∘ other)(k) = self(other(k)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&k| self.images[k]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v] = k;
        }
        Permutation { images }
    }

    /// Writes the permutation as a product of adjacent transpositions
    /// s_k = (k k+1), 0-based k, such that self is the left-to-right
    /// product of the listed factors.
    pub fn adjacent_factorization(&self) -> Vec<usize> {
        // Bubble sort the one-line word; each swap multiplies on the right.
        let mut word = self.images.clone();
        let mut right_factors = Vec::new();
        let n = word.len();
        loop {
            let mut swapped = false;
            for k in 0..n.saturating_sub(1) {
                if word[k] > word[k + 1] {
                    word.swap(k, k + 1);
                    right_factors.push(k);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        // self · s_{f1} ⋯ s_{fm} = e  ⇒  self = s_{fm} ⋯ s_{f1}.
        right_factors.reverse();
        right_factors
    }
}

/// All permutations of n points in lexicographic order on image sequences.
pub fn enumerate_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation { images: images.clone() });
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
    }
    out
}

/// The natural representation P(π) on n qudits of dimension d:
/// P(π)|i₁…iₙ⟩ = |i_{π⁻¹(1)} … i_{π⁻¹(n)}⟩.
pub fn build_p(pi: &Permutation, n: usize, d: usize, cap: usize) -> Result<ComplexMatrix> {
    if pi.degree() != n {
        return Err(Error::invalid("permutation degree does not match n"));
    }
    if d < 2 {
        return Err(Error::invalid("d must be at least 2"));
    }
    let dim = checked_pow(d, n, cap)?;
    let inv = pi.inverse();
    let mut m = ComplexMatrix::zeros(dim, dim);
    let mut digits = vec![0usize; n];
    for col in 0..dim {
        index_to_digits(col, d, &mut digits);
        let mut row = 0usize;
        for k in 0..n {
            row = row * d + digits[inv.apply(k)];
        }
        m[(row, col)] = Complex64::new(1.0, 0.0);
    }
    Ok(m)
}

/// The collective representation Q(U) = U^{⊗n}.
pub fn build_q(u: &ComplexMatrix, n: usize, cap: usize) -> Result<ComplexMatrix> {
    if !u.is_square() {
        return Err(Error::invalid("u must be square"));
    }
    if u.unitarity_residual() > 1e-10 {
        return Err(Error::invalid("u is not unitary within 1e-10"));
    }
    checked_pow(u.rows(), n, cap)?;
    let mut out = ComplexMatrix::identity(1);
    for _ in 0..n {
        out = tensor(&out, u)?;
    }
    Ok(out)
}

/// Haar-random d×d unitary, deterministic in the seed: QR of a complex
/// Gaussian matrix with the R diagonal phases folded into Q.
pub fn random_unitary(d: usize, seed: u64) -> ComplexMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = ComplexMatrix::from_fn(d, d, |_, _| {
        Complex64::new(standard_normal(&mut rng), standard_normal(&mut rng))
    });
    let (q, r) = householder_qr(&g);
    // Fix phases so the distribution is exactly Haar.
    let mut u = q;
    for c in 0..d {
        let rd = r[(c, c)];
        let phase = if rd.norm() == 0.0 { Complex64::new(1.0, 0.0) } else { rd / rd.norm() };
        for row in 0..d {
            u[(row, c)] *= phase;
        }
    }
    u
}

/// Standard normal via Box-Muller on the ChaCha stream.
fn standard_normal<R: Rng>(rng: &mut R) -> f64 {
    loop {
        let u1: f64 = rng.gen::<f64>();
        if u1 <= f64::MIN_POSITIVE {
            continue;
        }
        let u2: f64 = rng.gen::<f64>();
        return (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos();
    }
}

/// d^n with a cap check.
pub fn checked_pow(d: usize, n: usize, cap: usize) -> Result<usize> {
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc.saturating_mul(d as u128);
    }
    check_cap(acc, cap)
}

/// Expands `index` into base-d digits, most significant first.
pub fn index_to_digits(index: usize, d: usize, digits: &mut [usize]) {
    let mut rem = index;
    for slot in digits.iter_mut().rev() {
        *slot = rem % d;
        rem /= d;
    }
}

/// Packs base-d digits (most significant first) into an index.
pub fn digits_to_index(digits: &[usize], d: usize) -> usize {
    digits.iter().fold(0, |acc, &x| acc * d + x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_conventions() {
        let id2 = ComplexMatrix::identity(2);
        let one = ComplexMatrix::identity(1);
        let m = ComplexMatrix::from_real_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]);
        assert_eq!(tensor(&one, &m).unwrap(), m);
        assert_eq!(tensor(&id2, &id2).unwrap(), ComplexMatrix::identity(4));
        // Mixed-product property on random inputs.
        let a = random_unitary(2, 1);
        let b = random_unitary(2, 2);
        let c = random_unitary(2, 3);
        let d = random_unitary(2, 4);
        let lhs = tensor(&a, &b).unwrap().mul(&tensor(&c, &d).unwrap());
        let rhs = tensor(&a.mul(&c), &b.mul(&d)).unwrap();
        assert!(frobenius_distance(&lhs, &rhs).unwrap() < 1e-12);
    }

    #[test]
    fn build_p_swap_and_identity() {
        let swap = Permutation::transposition(2, 0, 1);
        let p = build_p(&swap, 2, 2, DEFAULT_DIM_CAP).unwrap();
        // |01⟩ (index 1) ↦ |10⟩ (index 2)
        let v = p.apply(&StateVector::basis(4, 1));
        assert!((v.amplitudes()[2].re - 1.0).abs() < 1e-15);
        let e = build_p(&Permutation::identity(3), 3, 2, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(e, ComplexMatrix::identity(8));
    }

    #[test]
    fn build_p_is_homomorphism() {
        for n in 2..=4usize {
            let perms = enumerate_permutations(n);
            for a in &perms {
                for b in &perms {
                    let lhs = build_p(a, n, 2, DEFAULT_DIM_CAP)
                        .unwrap()
                        .mul(&build_p(b, n, 2, DEFAULT_DIM_CAP).unwrap());
                    let rhs = build_p(&a.compose(b), n, 2, DEFAULT_DIM_CAP).unwrap();
                    assert!(frobenius_distance(&lhs, &rhs).unwrap() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn build_p_homomorphism_sampled_larger_n() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [5usize, 6] {
            let perms = enumerate_permutations(n);
            for _ in 0..100 {
                let a = &perms[rng.gen_range(0..perms.len())];
                let b = &perms[rng.gen_range(0..perms.len())];
                let lhs = build_p(a, n, 2, DEFAULT_DIM_CAP)
                    .unwrap()
                    .mul(&build_p(b, n, 2, DEFAULT_DIM_CAP).unwrap());
                let rhs = build_p(&a.compose(b), n, 2, DEFAULT_DIM_CAP).unwrap();
                assert!(frobenius_distance(&lhs, &rhs).unwrap() < 1e-14);
            }
        }
    }

    #[test]
    fn build_q_examples() {
        let x = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        let q = build_q(&x, 2, DEFAULT_DIM_CAP).unwrap();
        let v = q.apply(&StateVector::basis(4, 0));
        assert!((v.amplitudes()[3].re - 1.0).abs() < 1e-15);
        assert_eq!(
            build_q(&ComplexMatrix::identity(3), 2, DEFAULT_DIM_CAP).unwrap(),
            ComplexMatrix::identity(9)
        );
        // Non-unitary input is rejected.
        let bad = ComplexMatrix::from_real_rows(&[vec![1.0, 1.0], vec![0.0, 1.0]]);
        assert!(build_q(&bad, 2, DEFAULT_DIM_CAP).is_err());
    }

    #[test]
    fn q_and_p_commute() {
        for n in 2..=4usize {
            for seed in 0..3u64 {
                let u = random_unitary(2, seed);
                let q = build_q(&u, n, DEFAULT_DIM_CAP).unwrap();
                for pi in enumerate_permutations(n) {
                    let p = build_p(&pi, n, 2, DEFAULT_DIM_CAP).unwrap();
                    let comm = q.mul(&p).sub(&p.mul(&q));
                    assert!(comm.frobenius_norm() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn build_q_homomorphism_on_random_pairs() {
        for seed in 0..5u64 {
            let u = random_unitary(3, 2 * seed);
            let v = random_unitary(3, 2 * seed + 1);
            let lhs = build_q(&u, 2, DEFAULT_DIM_CAP)
                .unwrap()
                .mul(&build_q(&v, 2, DEFAULT_DIM_CAP).unwrap());
            let rhs = build_q(&u.mul(&v), 2, DEFAULT_DIM_CAP).unwrap();
            assert!(frobenius_distance(&lhs, &rhs).unwrap() < 1e-10);
        }
    }

    #[test]
    fn random_unitary_contracts() {
        let u = random_unitary(4, 42);
        assert!(u.unitarity_residual() < 1e-12);
        assert_eq!(random_unitary(4, 42), u);
        // Haar first-moment oracle: E|U₁₁|² = 1/d.
        let mean: f64 = (0..1000)
            .map(|s| random_unitary(2, s)[(0, 0)].norm_sqr())
            .sum::<f64>()
            / 1000.0;
        assert!((mean - 0.5).abs() < 0.02, "mean {mean}");
    }

    #[test]
    fn frobenius_basics() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(frobenius_distance(&i2, &i2).unwrap(), 0.0);
        let z = ComplexMatrix::zeros(2, 2);
        assert!((frobenius_distance(&i2, &z).unwrap() - 2.0f64.sqrt()).abs() < 1e-15);
        assert!(frobenius_distance(&i2, &ComplexMatrix::zeros(2, 3)).is_err());
        // Triangle inequality on random triples.
        for seed in 0..5u64 {
            let a = random_unitary(3, 3 * seed);
            let b = random_unitary(3, 3 * seed + 1);
            let c = random_unitary(3, 3 * seed + 2);
            let ab = frobenius_distance(&a, &b).unwrap();
            let bc = frobenius_distance(&b, &c).unwrap();
            let ac = frobenius_distance(&a, &c).unwrap();
            assert!(ac <= ab + bc + 1e-12);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let pi = Permutation::identity(30);
        match build_p(&pi, 30, 2, DEFAULT_DIM_CAP) {
            Err(Error::ResourceLimit { .. }) => {}
            other => panic!("expected resource error, got {other:?}"),
        }
    }

    #[test]
    fn adjacent_factorization_reconstructs() {
        for pi in enumerate_permutations(5) {
            let mut acc = Permutation::identity(5);
            for k in pi.adjacent_factorization() {
                acc = acc.compose(&Permutation::transposition(5, k, k + 1));
            }
            assert_eq!(acc, pi);
        }
    }

    #[test]
    fn permutation_enumeration_is_lex() {
        let perms = enumerate_permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms[0], Permutation::identity(3));
        for w in perms.windows(2) {
            assert!(w[0].images() < w[1].images());
        }
    }
}
