//! Clebsch-Gordan steps: the qubit two-level rotation cascade element and
//! the general-d unitary fusing Q_λ ⊗ C^d into ⊕_{λ'} Q_{λ'}.
//!
//! The general-d unitary is constructed numerically: for each λ' obtained by
//! adding one box to λ, the highest-weight vector of Q_{λ'} inside the
//! product space is the joint kernel of the raising operators at weight λ',
//! and the remaining Gelfand-Tsetlin basis vectors follow by descending
//! through weight space with lowering operators. Adding a single box is
//! multiplicity-free, so each block is determined up to one sign, fixed by
//! making the first nonzero entry of the highest-weight row positive.

pub mod gt;

use std::fmt;

use num_complex::Complex64;

use crate::error::{check_cap, Error, Result};
use crate::linalg::{
    frobenius_distance, hermitian_eig, random_unitary, tensor, ComplexMatrix,
};
use crate::partitions::{add_box, Partition};

use gt::GtBasis;

/// A half-integer stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn from_int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    /// Parses a decimal like "0.5" or "2"; must be an exact half-integer.
    pub fn parse(s: &str) -> Result<Self> {
        let v: f64 = s
            .trim()
            .parse()
            .map_err(|_| Error::invalid(format!("bad half-integer {s:?}")))?;
        let twice = 2.0 * v;
        if twice.fract() != 0.0 || twice.abs() > 1e15 {
            return Err(Error::invalid(format!("{s:?} is not a half-integer")));
        }
        Ok(HalfInt(twice as i64))
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Total and z-component angular momentum labels for the qubit cascade.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpinLabel {
    pub j: HalfInt,
    pub m: HalfInt,
}

impl SpinLabel {
    pub fn new(j: HalfInt, m: HalfInt) -> Result<Self> {
        if j.twice() < 0 {
            return Err(Error::invalid("J must be nonnegative"));
        }
        if m.twice().abs() > j.twice() || (m.twice() - j.twice()) % 2 != 0 {
            return Err(Error::invalid("m must satisfy |m| ≤ J with matching parity"));
        }
        Ok(SpinLabel { j, m })
    }
}

/// The elementary two-level rotation of the qubit Clebsch-Gordan step:
/// cos θ_{J,m′} = √((J + m′ + 1/2)/(2J + 1)), sin θ = +√(1 − cos²θ).
#[derive(Clone, Copy, Debug)]
pub struct CgRotation {
    pub j: HalfInt,
    pub m_prime: HalfInt,
    pub cos_theta: f64,
    pub sin_theta: f64,
}

/// Evaluates the rotation angle closed form.
pub fn cg_angle(j: HalfInt, m_prime: HalfInt) -> Result<CgRotation> {
    if j.twice() < 0 {
        return Err(Error::invalid("J must be nonnegative"));
    }
    // 2(J + m' + 1/2) must lie in [0, 2(2J + 1)].
    let num2 = j.twice() + m_prime.twice() + 1;
    let den2 = 2 * j.twice() + 2;
    if num2 < 0 || num2 > den2 {
        return Err(Error::invalid(format!(
            "(J={j}, m'={m_prime}) is outside the coupling range"
        )));
    }
    let cos_theta = ((num2 as f64) / (den2 as f64)).sqrt();
    let sin_theta = (1.0 - cos_theta * cos_theta).max(0.0).sqrt();
    Ok(CgRotation { j, m_prime, cos_theta, sin_theta })
}

/// One output block of a CG unitary: the irrep λ' occupying `dim` rows
/// starting at `offset`.
#[derive(Clone, Debug)]
pub struct CgBlock {
    pub lambda: Partition,
    pub offset: usize,
    pub dim: usize,
}

/// Unitary change of basis from Q_λ ⊗ C^d (GT basis ⊗ computational) to
/// ⊕_{λ' ∈ addBox(λ)} Q_{λ'} (GT bases, blocks in canonical order).
pub struct CgUnitary {
    pub lambda_in: Partition,
    pub d: usize,
    pub matrix: ComplexMatrix,
    pub output_layout: Vec<CgBlock>,
}

/// Builds the general-d CG unitary by highest-weight reduction.
pub fn cg_unitary_general(lambda: &Partition, d: usize, cap: usize) -> Result<CgUnitary> {
    let basis_in = GtBasis::new(lambda, d)?;
    let defining = GtBasis::new(&Partition::row(1), d)?;
    let q = basis_in.dim();
    let total = check_cap(q as u128 * d as u128, cap)?;

    // Product-space generators E ⊗ I + I ⊗ E and weights.
    let id_q = ComplexMatrix::identity(q);
    let id_d = ComplexMatrix::identity(d);
    let mut prod_raise = Vec::with_capacity(d - 1);
    let mut prod_lower = Vec::with_capacity(d - 1);
    for k in 1..d {
        let r = tensor(basis_in.raising(k), &id_d)?.add(&tensor(&id_q, defining.raising(k))?);
        prod_lower.push(r.transpose());
        prod_raise.push(r);
    }
    let mut prod_weights = Vec::with_capacity(total);
    for wq in basis_in.weights() {
        for i in 0..d {
            let mut w = wq.clone();
            w[i] += 1;
            prod_weights.push(w);
        }
    }

    let outputs = add_box(lambda, d);
    let mut blocks = Vec::new();
    let mut rows: Vec<Vec<Complex64>> = Vec::with_capacity(total);
    let mut offset = 0;
    for lam_out in outputs {
        let embed = embed_irrep(
            &lam_out,
            d,
            &prod_raise,
            &prod_lower,
            &prod_weights,
            total,
        )?;
        let dim = embed.cols();
        for j in 0..dim {
            // Row (λ', pattern j) of the unitary is the conjugated column.
            rows.push((0..total).map(|r| embed[(r, j)].conj()).collect());
        }
        blocks.push(CgBlock { lambda: lam_out, offset, dim });
        offset += dim;
    }
    if offset != total {
        return Err(Error::invalid(format!(
            "internal: CG blocks cover {offset} of {total} dimensions"
        )));
    }
    let matrix = ComplexMatrix::from_rows(rows);
    Ok(CgUnitary { lambda_in: lambda.clone(), d, matrix, output_layout: blocks })
}

/// Finds the isometric embedding T: Q_{λ'} → Q_λ ⊗ C^d whose columns are the
/// images of the GT basis vectors of Q_{λ'}.
fn embed_irrep(
    lam_out: &Partition,
    d: usize,
    prod_raise: &[ComplexMatrix],
    prod_lower: &[ComplexMatrix],
    prod_weights: &[Vec<i64>],
    total: usize,
) -> Result<ComplexMatrix> {
    let out_basis = GtBasis::new(lam_out, d)?;
    let dim = out_basis.dim();
    let mut embed = ComplexMatrix::zeros(total, dim);

    // Highest weight: joint kernel of the raising operators restricted to
    // the weight-λ' subspace of the product.
    let hw_weight: Vec<i64> = lam_out.padded(d).iter().map(|&x| x as i64).collect();
    let slots: Vec<usize> = (0..total).filter(|&i| prod_weights[i] == hw_weight).collect();
    if slots.is_empty() {
        return Err(Error::invalid("internal: empty highest-weight subspace"));
    }
    let mut stacked_rows = Vec::new();
    for r in prod_raise {
        for row in 0..total {
            let entries: Vec<Complex64> = slots.iter().map(|&c| r[(row, c)]).collect();
            if entries.iter().any(|z| z.norm_sqr() > 0.0) {
                stacked_rows.push(entries);
            }
        }
    }
    let hw_local = if stacked_rows.is_empty() {
        // No raising operator acts: any unit vector in a 1-dim slot works.
        if slots.len() != 1 {
            return Err(Error::invalid("internal: degenerate highest-weight space"));
        }
        vec![Complex64::new(1.0, 0.0)]
    } else {
        kernel_vector(&ComplexMatrix::from_rows(stacked_rows))?
    };
    // Sign convention: first nonzero entry (in product order) real positive.
    let mut hw = vec![Complex64::new(0.0, 0.0); total];
    for (slot, value) in slots.iter().zip(&hw_local) {
        hw[*slot] = *value;
    }
    let first = hw
        .iter()
        .find(|z| z.norm() > 1e-9)
        .ok_or_else(|| Error::invalid("internal: null highest-weight vector"))?;
    let phase = first / first.norm();
    for z in hw.iter_mut() {
        *z /= phase;
    }
    for (r, z) in hw.iter().enumerate() {
        embed[(r, 0)] = *z;
    }

    // Descend through weight space: each group of patterns at weight μ is
    // solved from the already-known images one level up via the lowering
    // relations  Σ_j [E'⁻_k]_{M_j, N} T(ξ_{M_j}) = E⁻_k T(ξ_N).
    let heights: Vec<i64> = out_basis
        .weights()
        .iter()
        .map(|w| w.iter().enumerate().map(|(i, &x)| x * (d - i) as i64).sum())
        .collect();
    let top = heights[0];
    let mut levels: Vec<Vec<usize>> = Vec::new();
    for (idx, &h) in heights.iter().enumerate() {
        let level = (top - h) as usize;
        if levels.len() <= level {
            levels.resize(level + 1, Vec::new());
        }
        levels[level].push(idx);
    }
    let mut solved = vec![false; dim];
    solved[0] = true;
    for level in levels.iter().skip(1) {
        // Group this level's patterns by weight vector.
        let mut groups: Vec<(Vec<i64>, Vec<usize>)> = Vec::new();
        for &idx in level {
            let w = out_basis.weights()[idx].clone();
            match groups.iter_mut().find(|(gw, _)| *gw == w) {
                Some((_, members)) => members.push(idx),
                None => groups.push((w, vec![idx])),
            }
        }
        for (weight, members) in groups {
            let t = members.len();
            let mut coeff_rows: Vec<Vec<Complex64>> = Vec::new();
            let mut rhs_rows: Vec<Vec<Complex64>> = Vec::new();
            for k in 1..d {
                let lower_out = out_basis.lowering(k);
                // Sources one level up at weight μ + α_k.
                let mut src_weight = weight.clone();
                src_weight[k - 1] += 1;
                src_weight[k] -= 1;
                for (src, sw) in out_basis.weights().iter().enumerate() {
                    if *sw != src_weight || !solved[src] {
                        continue;
                    }
                    let coeffs: Vec<Complex64> =
                        members.iter().map(|&m| lower_out[(m, src)]).collect();
                    if coeffs.iter().all(|z| z.norm_sqr() == 0.0) {
                        continue;
                    }
                    let image: Vec<Complex64> = (0..total)
                        .map(|r| {
                            (0..total)
                                .map(|c| prod_lower[k - 1][(r, c)] * embed[(c, src)])
                                .sum()
                        })
                        .collect();
                    coeff_rows.push(coeffs);
                    rhs_rows.push(image);
                }
            }
            if coeff_rows.len() < t {
                return Err(Error::invalid(
                    "internal: underdetermined weight space in CG embedding",
                ));
            }
            let c = ComplexMatrix::from_rows(coeff_rows);
            let b = ComplexMatrix::from_rows(rhs_rows);
            let x = solve_least_squares(&c, &b)?;
            for (row_in_x, &m) in members.iter().enumerate() {
                for r in 0..total {
                    embed[(r, m)] = x[(row_in_x, r)];
                }
                solved[m] = true;
            }
        }
    }
    if !solved.iter().all(|&s| s) {
        return Err(Error::invalid("internal: unsolved GT pattern in CG embedding"));
    }
    Ok(embed)
}

/// Unit kernel vector of A (expects a one-dimensional kernel): the smallest
/// eigenvector of A†A.
fn kernel_vector(a: &ComplexMatrix) -> Result<Vec<Complex64>> {
    let gram = a.adjoint().mul(a);
    let n = gram.rows();
    let (vals, vecs) = hermitian_eig(&gram);
    let mut best = 0;
    for i in 1..n {
        if vals[i] < vals[best] {
            best = i;
        }
    }
    let scale = vals.iter().fold(0.0f64, |acc, &v| acc.max(v.abs())).max(1.0);
    if vals[best].abs() > 1e-10 * scale {
        return Err(Error::invalid(format!(
            "internal: kernel eigenvalue {:.2e} not numerically zero",
            vals[best]
        )));
    }
    Ok((0..n).map(|r| vecs[(r, best)]).collect())
}

/// Least-squares solution X of C·X = B via the normal equations; exact when
/// the system is consistent, which the CG construction guarantees.
fn solve_least_squares(c: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let gram = c.adjoint().mul(c);
    let rhs = c.adjoint().mul(b);
    solve_linear(&gram, &rhs)
}

/// Gaussian elimination with partial pivoting for a square system.
fn solve_linear(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = a.rows();
    let m = b.cols();
    let mut aug = ComplexMatrix::zeros(n, n + m);
    for r in 0..n {
        for c in 0..n {
            aug[(r, c)] = a[(r, c)];
        }
        for c in 0..m {
            aug[(r, n + c)] = b[(r, c)];
        }
    }
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| {
                aug[(x, col)]
                    .norm()
                    .partial_cmp(&aug[(y, col)].norm())
                    .unwrap()
            })
            .unwrap();
        if aug[(pivot, col)].norm() < 1e-12 {
            return Err(Error::invalid("internal: singular system in CG solve"));
        }
        if pivot != col {
            for c in 0..n + m {
                let tmp = aug[(col, c)];
                aug[(col, c)] = aug[(pivot, c)];
                aug[(pivot, c)] = tmp;
            }
        }
        let inv = Complex64::new(1.0, 0.0) / aug[(col, col)];
        for c in col..n + m {
            aug[(col, c)] *= inv;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = aug[(r, col)];
            if f.norm_sqr() == 0.0 {
                continue;
            }
            for c in col..n + m {
                let delta = f * aug[(col, c)];
                aug[(r, c)] -= delta;
            }
        }
    }
    Ok(ComplexMatrix::from_fn(n, m, |r, c| aug[(r, n + c)]))
}

/// Max over `trials` Haar draws of ‖cg·(q_λ(u) ⊗ u)·cg† − ⊕_{λ'} q_{λ'}(u)‖_F.
pub fn verify_intertwiner(cg: &CgUnitary, trials: usize, seed: u64) -> Result<f64> {
    let basis_in = GtBasis::new(&cg.lambda_in, cg.d)?;
    let out_bases: Vec<GtBasis> = cg
        .output_layout
        .iter()
        .map(|b| GtBasis::new(&b.lambda, cg.d))
        .collect::<Result<Vec<_>>>()?;
    let total = cg.matrix.rows();
    let mut worst = 0.0f64;
    for t in 0..trials {
        let u = random_unitary(cg.d, seed.wrapping_add(t as u64));
        let lhs = cg
            .matrix
            .mul(&tensor(&basis_in.irrep_unitary(&u), &u)?)
            .mul(&cg.matrix.adjoint());
        let mut rhs = ComplexMatrix::zeros(total, total);
        for (block, basis) in cg.output_layout.iter().zip(&out_bases) {
            let q = basis.irrep_unitary(&u);
            for r in 0..block.dim {
                for c in 0..block.dim {
                    rhs[(block.offset + r, block.offset + c)] = q[(r, c)];
                }
            }
        }
        worst = worst.max(frobenius_distance(&lhs, &rhs)?);
    }
    Ok(worst)
}

/// Basis-state action of one qubit cascade step on (J-register, m-register,
/// wire): the C_X m-update, the doubly controlled rotation, then the
/// J-update. Bit 0 on the wire encodes s or p = +1/2.
///
/// At stage k (the step that couples qudit k), the incoming m-register holds
/// m + (k−1)/2 and the outgoing register holds m′ + k/2.
#[derive(Clone, Copy, Debug)]
pub(crate) struct QubitStep {
    pub stage: usize,
    pub nj: usize,
    pub nm: usize,
}

impl QubitStep {
    /// Images of basis state (a = 2J register, b = m register, c = wire bit):
    /// at most two (a', b', c', amplitude) terms.
    pub fn map_basis(&self, a: usize, b: usize, c: usize) -> Vec<(usize, usize, usize, f64)> {
        let b_new = (b + (1 - c)) % self.nm;
        // Rotation controlled on (a, b_new): J = a/2, m' = b_new − stage/2.
        let two_j = a as i64;
        let two_mp = 2 * b_new as i64 - self.stage as i64;
        let coupled = (two_j + two_mp + 1) % 2 == 0
            && two_mp.abs() <= two_j + 1
            && two_j + two_mp + 1 >= 0;
        let (cos, sin) = if coupled {
            let rot = cg_angle(HalfInt::from_twice(two_j), HalfInt::from_twice(two_mp))
                .expect("coupling range checked");
            (rot.cos_theta, rot.sin_theta)
        } else {
            (1.0, 0.0)
        };
        // Wire action: |0⟩ ↦ cos|0⟩ − sin|1⟩, |1⟩ ↦ sin|0⟩ + cos|1⟩;
        // p-bit 0 raises J, p-bit 1 lowers it.
        let up = (a + 1) % self.nj;
        let down = (a + self.nj - 1) % self.nj;
        let mut out = Vec::with_capacity(2);
        let (amp0, amp1) = if c == 0 { (cos, -sin) } else { (sin, cos) };
        if amp0 != 0.0 {
            out.push((up, b_new, 0, amp0));
        }
        if amp1 != 0.0 {
            out.push((down, b_new, 1, amp1));
        }
        out
    }
}

/// The dense matrix of one qubit cascade step on registers sized for stage
/// k = 2·maxJ: (k+1) J values ⊗ (k+1) m values ⊗ one wire qubit.
pub fn cg_step_qubit_unitary(max_j: HalfInt) -> Result<ComplexMatrix> {
    let k = max_j.twice();
    if k < 1 {
        return Err(Error::invalid("maxJ must be at least 1/2"));
    }
    let k = k as usize;
    let regs = k + 1;
    let step = QubitStep { stage: k, nj: regs, nm: regs };
    let dim = regs * regs * 2;
    let mut m = ComplexMatrix::zeros(dim, dim);
    for a in 0..regs {
        for b in 0..regs {
            for c in 0..2 {
                let col = (a * regs + b) * 2 + c;
                for (a2, b2, c2, amp) in step.map_basis(a, b, c) {
                    let row = (a2 * regs + b2) * 2 + c2;
                    m[(row, col)] += Complex64::new(amp, 0.0);
                }
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::DEFAULT_DIM_CAP;
    use crate::partitions::{dim_q, enumerate_partitions};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn cg_angle_closed_form() {
        let r = cg_angle(HalfInt::from_twice(1), HalfInt::from_twice(0)).unwrap();
        assert!((r.cos_theta - 0.5f64.sqrt()).abs() < 1e-15);
        assert!((r.sin_theta - 0.5f64.sqrt()).abs() < 1e-15);
        // Stretched coupling: m' = J + 1/2 gives cos θ = 1.
        for twice_j in 0..6 {
            let stretched =
                cg_angle(HalfInt::from_twice(twice_j), HalfInt::from_twice(twice_j + 1)).unwrap();
            assert_eq!(stretched.cos_theta, 1.0);
            let bottom =
                cg_angle(HalfInt::from_twice(twice_j), HalfInt::from_twice(-twice_j - 1)).unwrap();
            assert_eq!(bottom.cos_theta, 0.0);
        }
        assert!(cg_angle(HalfInt::from_twice(1), HalfInt::from_twice(4)).is_err());
        assert!(cg_angle(HalfInt::from_twice(-1), HalfInt::from_twice(0)).is_err());
    }

    #[test]
    fn rotation_identity_holds() {
        for twice_j in 0..8 {
            for twice_mp in (-twice_j - 1..=twice_j + 1).step_by(2) {
                let r = cg_angle(HalfInt::from_twice(twice_j), HalfInt::from_twice(twice_mp))
                    .unwrap();
                assert!((r.cos_theta * r.cos_theta + r.sin_theta * r.sin_theta - 1.0).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn qubit_step_examples() {
        // Stage 2 (maxJ = 1): registers hold 3 values each.
        let m = cg_step_qubit_unitary(HalfInt::from_int(1)).unwrap();
        assert!(m.unitarity_residual() < 1e-12);
        let idx = |a: usize, b: usize, c: usize| (a * 3 + b) * 2 + c;
        // Stretched: |J=1/2, m=1/2⟩|s=+1/2⟩ → |J=1, m'=1, p=+1/2⟩ exactly.
        // Input encoding: a=1, b = m + 1/2 = 1, wire bit 0 (s=+1/2);
        // output: a=2, b' = m' + 1 = 2, bit 0.
        assert!((m[(idx(2, 2, 0), idx(1, 1, 0))].re - 1.0).abs() < 1e-14);
        // Singlet/triplet split: |J=1/2, m=1/2⟩|s=−1/2⟩.
        let col = idx(1, 1, 1);
        let h = 0.5f64.sqrt();
        assert!((m[(idx(0, 1, 1), col)].re - h).abs() < 1e-14, "singlet amplitude");
        assert!((m[(idx(2, 1, 0), col)].re - h).abs() < 1e-14, "triplet amplitude");
    }

    #[test]
    fn qubit_step_conserves_m() {
        // ⟨J', m', p| step |J, m, s⟩ = 0 unless m' = m + s; in register
        // terms the outgoing m register must equal b + (1 − c).
        for stage in [2usize, 3, 4] {
            let m = cg_step_qubit_unitary(HalfInt::from_twice(stage as i64)).unwrap();
            let regs = stage + 1;
            let idx = |a: usize, b: usize, c: usize| (a * regs + b) * 2 + c;
            for a in 0..regs {
                for b in 0..regs {
                    for c in 0..2 {
                        for a2 in 0..regs {
                            for b2 in 0..regs {
                                for c2 in 0..2 {
                                    let v = m[(idx(a2, b2, c2), idx(a, b, c))].norm();
                                    if v > 1e-14 && b2 != (b + 1 - c) % regs {
                                        panic!("m not conserved at stage {stage}");
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cg_general_two_qubits() {
        let cg = cg_unitary_general(&p(&[1]), 2, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(cg.matrix.rows(), 4);
        assert!(cg.matrix.unitarity_residual() < 1e-12);
        // Block layout: (2) then (1,1).
        assert_eq!(cg.output_layout[0].lambda, p(&[2]));
        assert_eq!(cg.output_layout[1].lambda, p(&[1, 1]));
        // Singlet row: (⟨01| − ⟨10|)/√2 with the first entry positive.
        let h = 0.5f64.sqrt();
        let singlet = cg.matrix.row(3);
        assert!(singlet[0].norm() < 1e-14);
        assert!((singlet[1].re - h).abs() < 1e-12);
        assert!((singlet[2].re + h).abs() < 1e-12);
        assert!(singlet[3].norm() < 1e-14);
    }

    #[test]
    fn cg_block_shapes_for_2_1_over_d3() {
        let cg = cg_unitary_general(&p(&[2, 1]), 3, DEFAULT_DIM_CAP).unwrap();
        let dims: Vec<usize> = cg.output_layout.iter().map(|b| b.dim).collect();
        let labels: Vec<Partition> =
            cg.output_layout.iter().map(|b| b.lambda.clone()).collect();
        assert_eq!(labels, vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]);
        assert_eq!(dims, vec![15, 6, 3]);
        assert_eq!(dims.iter().sum::<usize>(), 24);
        assert!(cg.matrix.unitarity_residual() < 1e-10);
    }

    #[test]
    fn cg_matches_su2_ladder() {
        // For d = 2 the top block of the CG for λ = (n−1) must reproduce the
        // closed-form rotation coefficients for every m'.
        for n in 2..=5u32 {
            let lam = p(&[n - 1]);
            let cg = cg_unitary_general(&lam, 2, DEFAULT_DIM_CAP).unwrap();
            let two_j = (n - 1) as i64;
            let upper = &cg.output_layout[0];
            assert_eq!(upper.lambda, p(&[n]));
            for qp in 0..upper.dim {
                // Row of the (n) block with m' = J' − q'.
                let two_mp = two_j + 1 - 2 * qp as i64;
                // Participants: (q = J − m₊, i=1) has column 2(J−m'−1/2)+1,
                // (q = J − m₋, i=0) has column 2(J−m'+1/2).
                let row = cg.matrix.row(upper.offset + qp);
                if two_mp.abs() <= two_j + 1 && (two_j + two_mp + 1) % 2 == 0 {
                    let rot =
                        cg_angle(HalfInt::from_twice(two_j), HalfInt::from_twice(two_mp)).unwrap();
                    let qa = (two_j - two_mp - 1) / 2;
                    let qb = (two_j - two_mp + 1) / 2;
                    if qa >= 0 {
                        let got = row[2 * qa as usize + 1].re;
                        assert!((got - rot.sin_theta).abs() < 1e-12, "sin at n={n} m'={two_mp}");
                    }
                    if qb <= two_j {
                        let got = row[2 * qb as usize].re;
                        assert!((got - rot.cos_theta).abs() < 1e-12, "cos at n={n} m'={two_mp}");
                    }
                }
            }
        }
    }

    #[test]
    fn intertwiner_residuals_small() {
        let cg = cg_unitary_general(&p(&[1]), 2, DEFAULT_DIM_CAP).unwrap();
        assert!(verify_intertwiner(&cg, 10, 0).unwrap() < 1e-9);
        let cg = cg_unitary_general(&p(&[2, 1]), 3, DEFAULT_DIM_CAP).unwrap();
        assert!(verify_intertwiner(&cg, 5, 0).unwrap() < 1e-8);
    }

    #[test]
    fn intertwiner_across_small_shapes() {
        for d in 2..=3usize {
            for n in 1..=4usize {
                for lam in enumerate_partitions(n, d).unwrap() {
                    let cg = cg_unitary_general(&lam, d, DEFAULT_DIM_CAP).unwrap();
                    assert!(cg.matrix.unitarity_residual() < 1e-10, "unitary λ={lam} d={d}");
                    let total: u64 = cg.output_layout.iter().map(|b| b.dim as u64).sum();
                    assert_eq!(total, dim_q(&lam, d).unwrap() * d as u64);
                    let res = verify_intertwiner(&cg, 10, 0).unwrap();
                    assert!(res < 1e-8, "intertwiner λ={lam} d={d}: {res:.2e}");
                }
            }
        }
    }

    #[test]
    fn half_int_parsing_and_display() {
        assert_eq!(HalfInt::parse("0.5").unwrap(), HalfInt::from_twice(1));
        assert_eq!(HalfInt::parse("2").unwrap(), HalfInt::from_int(2));
        assert_eq!(HalfInt::parse("-1.5").unwrap(), HalfInt::from_twice(-3));
        assert!(HalfInt::parse("0.3").is_err());
        assert_eq!(format!("{}", HalfInt::from_twice(3)), "3/2");
        assert_eq!(format!("{}", HalfInt::from_int(2)), "2");
        assert!(SpinLabel::new(HalfInt::from_twice(1), HalfInt::from_twice(3)).is_err());
    }
}
