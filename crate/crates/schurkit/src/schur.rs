//! The Schur transform U_Sch: the unitary mapping n-qudit computational
//! basis states to the |λ, q, p⟩ basis.
//!
//! Row order is fixed by [`SchurLayout`]: sectors λ in canonical partition
//! order, and within a sector the Gelfand-Tsetlin index q is the outer index
//! and the path index p the inner one. Two constructions are provided: the
//! general-d dense cascade of CG unitaries, and for qubits the register
//! circuit of two-level rotations; they must agree entrywise.

use std::collections::HashMap;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cg::gt::GtBasis;
use crate::cg::{cg_unitary_general, CgUnitary, QubitStep};
use crate::error::{Error, Result};
use crate::linalg::{
    build_p, build_q, checked_pow, enumerate_permutations, frobenius_distance, random_unitary,
    tensor, ComplexMatrix, StateVector,
};
use crate::partitions::{dim_p, dim_q, enumerate_partitions, enumerate_paths, Partition};
use crate::symgroup::{yor_generators, yor_matrix_with};

/// One sector of the Schur basis: λ occupies rows
/// offset .. offset + dim_q·dim_p.
#[derive(Clone, Debug)]
pub struct SchurSector {
    pub lambda: Partition,
    pub offset: usize,
    pub dim_q: usize,
    pub dim_p: usize,
}

/// The sector offset table defining the flat row order of U_Sch.
#[derive(Clone, Debug)]
pub struct SchurLayout {
    pub n: usize,
    pub d: usize,
    pub sectors: Vec<SchurSector>,
}

impl SchurLayout {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        let mut sectors = Vec::new();
        let mut offset = 0;
        for lambda in enumerate_partitions(n, d)? {
            let dq = dim_q(&lambda, d)? as usize;
            let dp = dim_p(&lambda) as usize;
            sectors.push(SchurSector { lambda, offset, dim_q: dq, dim_p: dp });
            offset += dq * dp;
        }
        Ok(SchurLayout { n, d, sectors })
    }

    /// Total dimension d^n.
    pub fn dim(&self) -> usize {
        self.sectors.last().map_or(0, |s| s.offset + s.dim_q * s.dim_p)
    }

    pub fn sector(&self, lambda: &Partition) -> Option<&SchurSector> {
        self.sectors.iter().find(|s| &s.lambda == lambda)
    }

    /// Flat row index of (λ, q, p).
    pub fn encode(&self, lambda: &Partition, q_index: usize, p_index: usize) -> Option<usize> {
        let s = self.sector(lambda)?;
        if q_index >= s.dim_q || p_index >= s.dim_p {
            return None;
        }
        Some(s.offset + q_index * s.dim_p + p_index)
    }

    /// Inverse of [`SchurLayout::encode`].
    pub fn decode(&self, flat: usize) -> Option<SchurIndex> {
        let s = self
            .sectors
            .iter()
            .find(|s| flat >= s.offset && flat < s.offset + s.dim_q * s.dim_p)?;
        let local = flat - s.offset;
        Some(SchurIndex {
            lambda: s.lambda.clone(),
            q_index: local / s.dim_p,
            p_index: local % s.dim_p,
            flat_index: flat,
        })
    }
}

/// A fully resolved Schur basis label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurIndex {
    pub lambda: Partition,
    pub q_index: usize,
    pub p_index: usize,
    pub flat_index: usize,
}

/// The full flat ↔ (λ, q, p) bijection in row order.
pub fn schur_index_table(n: usize, d: usize) -> Result<Vec<SchurIndex>> {
    let layout = SchurLayout::new(n, d)?;
    let mut out = Vec::with_capacity(layout.dim());
    for s in &layout.sectors {
        for q in 0..s.dim_q {
            for p in 0..s.dim_p {
                out.push(SchurIndex {
                    lambda: s.lambda.clone(),
                    q_index: q,
                    p_index: p,
                    flat_index: s.offset + q * s.dim_p + p,
                });
            }
        }
    }
    Ok(out)
}

/// The Schur transform with its row layout.
pub struct SchurUnitary {
    pub n: usize,
    pub d: usize,
    pub matrix: ComplexMatrix,
    pub layout: SchurLayout,
}

/// Builds U_Sch for n qudits of dimension d by cascading CG unitaries,
/// fusing qudits left to right and tracking the partition chain of every
/// branch as the p label.
pub fn build_schur_dense(n: usize, d: usize, cap: usize) -> Result<SchurUnitary> {
    if n == 0 || d < 2 {
        return Err(Error::invalid("need n ≥ 1 and d ≥ 2"));
    }
    checked_pow(d, n, cap)?;
    let layout = SchurLayout::new(n, d)?;

    // Each branch carries its partition chain and the (dimQ(λ) × d^k) block
    // of rows ⟨λ, q, chain| restricted to the first k qudits.
    struct Branch {
        chain: Vec<Partition>,
        block: ComplexMatrix,
    }
    let mut branches = vec![Branch {
        chain: vec![Partition::row(1)],
        block: ComplexMatrix::identity(d),
    }];
    let mut cg_cache: HashMap<Partition, CgUnitary> = HashMap::new();
    for _step in 2..=n {
        let mut next = Vec::new();
        for branch in &branches {
            let lambda = branch.chain.last().unwrap();
            if !cg_cache.contains_key(lambda) {
                cg_cache.insert(lambda.clone(), cg_unitary_general(lambda, d, cap)?);
            }
            let cg = &cg_cache[lambda];
            let expanded = tensor(&branch.block, &ComplexMatrix::identity(d))?;
            for out in &cg.output_layout {
                let rows = cg
                    .matrix
                    .block(out.offset, 0, out.dim, cg.matrix.cols())
                    .mul(&expanded);
                let mut chain = branch.chain.clone();
                chain.push(out.lambda.clone());
                next.push(Branch { chain, block: rows });
            }
        }
        branches = next;
    }

    let dim = layout.dim();
    let mut matrix = ComplexMatrix::zeros(dim, dim);
    for sector in &layout.sectors {
        // Branch generation is breadth-first in add-box order, so branches
        // ending at λ appear in canonical path order already.
        let sector_branches: Vec<&Branch> = branches
            .iter()
            .filter(|b| b.chain.last().unwrap() == &sector.lambda)
            .collect();
        if sector_branches.len() != sector.dim_p {
            return Err(Error::invalid(format!(
                "internal: sector {} has {} branches, expected {}",
                sector.lambda,
                sector_branches.len(),
                sector.dim_p
            )));
        }
        for (p_idx, branch) in sector_branches.iter().enumerate() {
            for q in 0..sector.dim_q {
                let row = sector.offset + q * sector.dim_p + p_idx;
                for col in 0..dim {
                    matrix[(row, col)] = branch.block[(q, col)];
                }
            }
        }
    }
    Ok(SchurUnitary { n, d, matrix, layout })
}

/// Builds U_Sch for qubits by simulating the register circuit: load qubit 1
/// into the (J, m) registers, apply one cascade step per remaining qubit,
/// then reindex valid register states to Schur rows.
///
/// Register encoding: J is stored as 2J and m as m + k/2 after step k, each
/// in 2^⌈log₂(n+1)⌉ register values; wire bit 0 encodes s or p = +1/2, so a
/// computational qubit feeds the cascade directly and the p-history of the
/// fully symmetric path is the all-zero string.
pub fn build_schur_qubit_circuit(n: usize, cap: usize) -> Result<SchurUnitary> {
    if n == 0 {
        return Err(Error::invalid("need n ≥ 1"));
    }
    let dim = checked_pow(2, n, cap)?;
    let layout = SchurLayout::new(n, 2)?;
    let nreg = (n + 1).next_power_of_two();
    let embedded = nreg * nreg * dim;

    // Embedded register index of each Schur basis label: J register holds
    // 2J = λ₁ − λ₂, m register holds m + n/2 = λ₁ − q, wire k holds the
    // step-k branch direction (0 = up), wire 1 ends cleared.
    let paths = enumerate_paths(n, 2)?;
    let mut row_of_embedded: Vec<(usize, usize)> = Vec::new();
    for sector in &layout.sectors {
        let lambda = &sector.lambda;
        let a = (lambda.part(0) - lambda.part(1)) as usize;
        let sector_paths = &paths
            .iter()
            .find(|(l, _)| l == lambda)
            .expect("sector paths present")
            .1;
        for q in 0..sector.dim_q {
            let b = lambda.part(0) as usize - q;
            for (p_idx, path) in sector_paths.iter().enumerate() {
                let mut wire_bits = 0usize;
                for t in 2..=n {
                    let prev = &path.chain()[t - 2];
                    let cur = &path.chain()[t - 1];
                    let down = cur.part(1) > prev.part(1);
                    wire_bits |= usize::from(down) << (n - t);
                }
                let embedded_idx = (a * nreg + b) * dim + wire_bits;
                let flat = sector.offset + q * sector.dim_p + p_idx;
                row_of_embedded.push((embedded_idx, flat));
            }
        }
    }

    let mut matrix = ComplexMatrix::zeros(dim, dim);
    for x in 0..dim {
        // Load qubit 1: J = 1/2 and m = ±1/2 from the leading bit (bit
        // value 0 carries s = +1/2), wire 1 cleared.
        let lead = (x >> (n - 1)) & 1;
        let rest = x & !(1usize << (n - 1));
        let start = (nreg + (1 - lead)) * dim + rest;
        let mut state = vec![Complex64::new(0.0, 0.0); embedded];
        state[start] = Complex64::new(1.0, 0.0);
        for k in 2..=n {
            let step = QubitStep { stage: k, nj: nreg, nm: nreg };
            let wire_shift = n - k;
            let mut out = vec![Complex64::new(0.0, 0.0); embedded];
            for (idx, amp) in state.iter().enumerate() {
                if amp.norm_sqr() == 0.0 {
                    continue;
                }
                let bits = idx % dim;
                let ab = idx / dim;
                let (aa, bb) = (ab / nreg, ab % nreg);
                let c = (bits >> wire_shift) & 1;
                for (a2, b2, c2, coeff) in step.map_basis(aa, bb, c) {
                    let bits2 = (bits & !(1usize << wire_shift)) | (c2 << wire_shift);
                    let idx2 = (a2 * nreg + b2) * dim + bits2;
                    out[idx2] += amp * coeff;
                }
            }
            state = out;
        }
        for &(embedded_idx, flat) in &row_of_embedded {
            matrix[(flat, x)] = state[embedded_idx];
        }
    }
    Ok(SchurUnitary { n, d: 2, matrix, layout })
}

/// Outcome of the Schur duality check.
#[derive(Clone, Debug)]
pub struct DualityReport {
    pub n: usize,
    pub d: usize,
    pub trials: usize,
    pub tol: f64,
    /// Largest entry magnitude outside the diagonal sector blocks.
    pub max_off_block: f64,
    /// Largest Frobenius residual between a sector block and q_λ(u) ⊗ p_λ(π):
    /// the closest-tensor-product residual against the Young's-orthogonal
    /// factor, the mismatch of the extracted unitary factor, and the direct
    /// comparison are all folded in.
    pub max_tensor_residual: f64,
    pub pass: bool,
}

/// Checks that U_Sch·Q(u)·P(π)·U_Sch† is block diagonal with sector blocks
/// q_λ(u) ⊗ p_λ(π), over `trials` Haar unitaries and uniform permutations.
pub fn verify_duality(
    u_sch: &SchurUnitary,
    trials: usize,
    seed: u64,
    tol: f64,
) -> Result<DualityReport> {
    let n = u_sch.n;
    let d = u_sch.d;
    let dim = u_sch.matrix.rows();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let perms = enumerate_permutations(n);
    let gt_bases: Vec<GtBasis> = u_sch
        .layout
        .sectors
        .iter()
        .map(|s| GtBasis::new(&s.lambda, d))
        .collect::<Result<Vec<_>>>()?;
    let yor_gens: Vec<Vec<ComplexMatrix>> = u_sch
        .layout
        .sectors
        .iter()
        .map(|s| yor_generators(&s.lambda))
        .collect::<Result<Vec<_>>>()?;
    // Sector lookup per row.
    let sector_of_row: Vec<usize> = (0..dim)
        .map(|r| {
            u_sch
                .layout
                .sectors
                .iter()
                .position(|s| r >= s.offset && r < s.offset + s.dim_q * s.dim_p)
                .unwrap()
        })
        .collect();

    let mut max_off_block = 0.0f64;
    let mut max_tensor_residual = 0.0f64;
    for _ in 0..trials {
        let u = random_unitary(d, rng.gen());
        let pi = &perms[rng.gen_range(0..perms.len())];
        let q = build_q(&u, n, usize::MAX)?;
        let p = build_p(pi, n, d, usize::MAX)?;
        let m = u_sch.matrix.mul(&q).mul(&p).mul(&u_sch.matrix.adjoint());

        for r in 0..dim {
            for c in 0..dim {
                if sector_of_row[r] != sector_of_row[c] {
                    max_off_block = max_off_block.max(m[(r, c)].norm());
                }
            }
        }

        for (si, sector) in u_sch.layout.sectors.iter().enumerate() {
            let size = sector.dim_q * sector.dim_p;
            let block = m.block(sector.offset, sector.offset, size, size);
            let q_expect = gt_bases[si].irrep_unitary(&u);
            let p_expect = yor_matrix_with(&yor_gens[si], sector.dim_p, pi)?;
            // Factor extracted by projecting onto p_λ(π); ‖p_λ(π)‖²_F = dimP.
            let mut q_extract = ComplexMatrix::zeros(sector.dim_q, sector.dim_q);
            for qr in 0..sector.dim_q {
                for qc in 0..sector.dim_q {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for pr in 0..sector.dim_p {
                        for pc in 0..sector.dim_p {
                            acc += block[(qr * sector.dim_p + pr, qc * sector.dim_p + pc)]
                                * p_expect[(pr, pc)].conj();
                        }
                    }
                    q_extract[(qr, qc)] = acc / sector.dim_p as f64;
                }
            }
            let closest = tensor(&q_extract, &p_expect)?;
            let tensor_residual = frobenius_distance(&block, &closest)?;
            let q_mismatch = frobenius_distance(&q_extract, &q_expect)?;
            let direct = frobenius_distance(&block, &tensor(&q_expect, &p_expect)?)?;
            max_tensor_residual = max_tensor_residual
                .max(tensor_residual)
                .max(q_mismatch)
                .max(direct);
        }
    }
    Ok(DualityReport {
        n,
        d,
        trials,
        tol,
        max_off_block,
        max_tensor_residual,
        pass: max_off_block < tol && max_tensor_residual < tol,
    })
}

/// Projector onto the λ sector pulled back to the computational basis:
/// U† (|λ rows⟩⟨λ rows|) U.
pub fn sector_projector(u_sch: &SchurUnitary, lambda: &Partition) -> Result<ComplexMatrix> {
    let sector = u_sch
        .layout
        .sector(lambda)
        .ok_or_else(|| Error::invalid(format!("{lambda} is not a sector")))?;
    let dim = u_sch.matrix.rows();
    let block = u_sch
        .matrix
        .block(sector.offset, 0, sector.dim_q * sector.dim_p, dim);
    Ok(block.adjoint().mul(&block))
}

/// Measurement distribution of λ after the Schur transform: squared norms
/// of each sector's amplitudes of U_Sch·ψ.
pub fn sector_distribution(u_sch: &SchurUnitary, psi: &StateVector) -> Vec<(Partition, f64)> {
    let transformed = u_sch.matrix.apply(psi);
    u_sch
        .layout
        .sectors
        .iter()
        .map(|s| {
            let mass: f64 = (s.offset..s.offset + s.dim_q * s.dim_p)
                .map(|i| transformed.amplitudes()[i].norm_sqr())
                .sum();
            (s.lambda.clone(), mass)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Permutation, DEFAULT_DIM_CAP};
    use crate::symgroup::{isotypic_projector, natural_representation, GroupIndex};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn index_table_small_cases() {
        let t = schur_index_table(2, 2).unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t[0].lambda, p(&[2]));
        assert_eq!((t[0].q_index, t[0].p_index), (0, 0));
        assert_eq!(t[3].lambda, p(&[1, 1]));
        let t = schur_index_table(3, 2).unwrap();
        assert_eq!(t.len(), 8);
        assert_eq!(t.iter().filter(|s| s.lambda == p(&[3])).count(), 4);
        assert_eq!(t.iter().filter(|s| s.lambda == p(&[2, 1])).count(), 4);
    }

    #[test]
    fn index_round_trip() {
        let layout = SchurLayout::new(4, 3).unwrap();
        assert_eq!(layout.dim(), 81);
        for flat in 0..layout.dim() {
            let s = layout.decode(flat).unwrap();
            assert_eq!(layout.encode(&s.lambda, s.q_index, s.p_index).unwrap(), flat);
        }
    }

    #[test]
    fn single_qudit_is_identity() {
        for d in 2..=4usize {
            let u = build_schur_dense(1, d, DEFAULT_DIM_CAP).unwrap();
            assert!(frobenius_distance(&u.matrix, &ComplexMatrix::identity(d)).unwrap() < 1e-14);
        }
        let u = build_schur_qubit_circuit(1, DEFAULT_DIM_CAP).unwrap();
        assert!(frobenius_distance(&u.matrix, &ComplexMatrix::identity(2)).unwrap() < 1e-14);
    }

    #[test]
    fn two_qubit_singlet_row() {
        let u = build_schur_dense(2, 2, DEFAULT_DIM_CAP).unwrap();
        let h = 0.5f64.sqrt();
        let row = u.matrix.row(3);
        assert!(row[0].norm() < 1e-14);
        assert!((row[1].re - h).abs() < 1e-12);
        assert!((row[2].re + h).abs() < 1e-12);
    }

    #[test]
    fn dense_build_is_unitary() {
        for (n_max, d) in [(8usize, 2usize), (4, 3), (3, 4)] {
            for n in 2..=n_max {
                let u = build_schur_dense(n, d, DEFAULT_DIM_CAP).unwrap();
                let residual = u.matrix.unitarity_residual();
                assert!(residual < 1e-10, "n={n} d={d}: {residual:.2e}");
            }
        }
    }

    #[test]
    fn circuit_matches_dense() {
        // n = 7 exercises completely full registers (2J reaches 2^⌈log₂ 8⌉ − 1).
        for n in 2..=7usize {
            let dense = build_schur_dense(n, 2, DEFAULT_DIM_CAP).unwrap();
            let circuit = build_schur_qubit_circuit(n, DEFAULT_DIM_CAP).unwrap();
            let dist = frobenius_distance(&dense.matrix, &circuit.matrix).unwrap();
            assert!(dist < 1e-9, "n={n}: {dist:.2e}");
        }
    }

    #[test]
    fn circuit_symmetric_path_is_stretched() {
        // All-|0⟩ input climbs the J ladder to (λ=(n), q=0, p=0).
        let n = 4;
        let u = build_schur_qubit_circuit(n, DEFAULT_DIM_CAP).unwrap();
        let v = u.matrix.apply(&StateVector::basis(16, 0));
        let row = u.layout.encode(&p(&[4]), 0, 0).unwrap();
        assert!((v.amplitudes()[row].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn three_qubit_mixed_symmetry_sector() {
        // The λ=(2,1) sector projector equals the projector onto the span of
        // |110⟩+ω|011⟩+ω*|101⟩, |001⟩+ω|100⟩+ω*|010⟩ and their ω ↔ ω*
        // conjugates.
        let u = build_schur_dense(3, 2, DEFAULT_DIM_CAP).unwrap();
        let got = sector_projector(&u, &p(&[2, 1])).unwrap();
        let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let mut states = Vec::new();
        for (support, w) in [
            ([0b110, 0b011, 0b101], omega),
            ([0b001, 0b100, 0b010], omega),
            ([0b110, 0b011, 0b101], omega.conj()),
            ([0b001, 0b100, 0b010], omega.conj()),
        ] {
            let mut v = vec![Complex64::new(0.0, 0.0); 8];
            v[support[0]] = Complex64::new(1.0, 0.0);
            v[support[1]] = w;
            v[support[2]] = w.conj();
            states.push(StateVector::new(v).normalized());
        }
        let mut ortho: Vec<StateVector> = Vec::new();
        for s in states {
            let mut v = s.clone();
            for o in &ortho {
                let coeff = o.inner(&v);
                v = v.sub(&o.scale(coeff));
            }
            if v.norm() > 1e-9 {
                ortho.push(v.normalized());
            }
        }
        assert_eq!(ortho.len(), 4);
        let mut want = ComplexMatrix::zeros(8, 8);
        for o in &ortho {
            for r in 0..8 {
                for c in 0..8 {
                    want[(r, c)] += o.amplitudes()[r] * o.amplitudes()[c].conj();
                }
            }
        }
        assert!(frobenius_distance(&got, &want).unwrap() < 1e-10);
    }

    #[test]
    fn three_qubit_mixed_symmetry_row_closed_form() {
        // Coupling the two-qubit triplet with a third spin down to J = 1/2:
        // ⟨(2,1), q=0, p=0| = √(2/3)⟨001| − √(1/6)⟨010| − √(1/6)⟨100|.
        let u = build_schur_dense(3, 2, DEFAULT_DIM_CAP).unwrap();
        let row_idx = u.layout.encode(&p(&[2, 1]), 0, 0).unwrap();
        let row = u.matrix.row(row_idx);
        let a = (2.0f64 / 3.0).sqrt();
        let b = -(1.0f64 / 6.0).sqrt();
        let want = [0.0, a, b, 0.0, b, 0.0, 0.0, 0.0];
        for (got, want) in row.iter().zip(want) {
            assert!((got.re - want).abs() < 1e-12 && got.im.abs() < 1e-14);
        }
    }

    #[test]
    fn sector_projectors_match_isotypic_projectors() {
        for (n, d) in [(2usize, 2usize), (3, 2), (4, 2), (3, 3)] {
            let u = build_schur_dense(n, d, DEFAULT_DIM_CAP).unwrap();
            let group = GroupIndex::new(n, 5040).unwrap();
            let rep = natural_representation(&group, d, DEFAULT_DIM_CAP).unwrap();
            for sector in &u.layout.sectors {
                let got = sector_projector(&u, &sector.lambda).unwrap();
                let want = isotypic_projector(&sector.lambda, &group, &rep).unwrap();
                assert!(
                    frobenius_distance(&got, &want).unwrap() < 1e-9,
                    "n={n} d={d} λ={}",
                    sector.lambda
                );
            }
        }
    }

    #[test]
    fn duality_reduction_holds() {
        for (n, d) in [(2usize, 2usize), (3, 2), (2, 3)] {
            let u = build_schur_dense(n, d, DEFAULT_DIM_CAP).unwrap();
            let report = verify_duality(&u, 20, 0, 1e-9).unwrap();
            assert!(report.pass, "n={n} d={d}: {report:?}");
        }
    }

    #[test]
    fn duality_identity_case() {
        let u = build_schur_dense(2, 2, DEFAULT_DIM_CAP).unwrap();
        let m = u.matrix.mul(&u.matrix.adjoint());
        assert!(frobenius_distance(&m, &ComplexMatrix::identity(4)).unwrap() < 1e-12);
    }

    #[test]
    fn duality_swap_on_two_qubits() {
        // Under π = swap the singlet block is −q_(1,1)(u) and the triplet
        // block is q_(2)(u).
        let u_sch = build_schur_dense(2, 2, DEFAULT_DIM_CAP).unwrap();
        let u = random_unitary(2, 77);
        let q = build_q(&u, 2, DEFAULT_DIM_CAP).unwrap();
        let swap = Permutation::transposition(2, 0, 1);
        let pm = build_p(&swap, 2, 2, DEFAULT_DIM_CAP).unwrap();
        let m = u_sch.matrix.mul(&q).mul(&pm).mul(&u_sch.matrix.adjoint());
        let singlet = GtBasis::new(&p(&[1, 1]), 2).unwrap().irrep_unitary(&u);
        assert!((m[(3, 3)] + singlet[(0, 0)]).norm() < 1e-10);
        let triplet = GtBasis::new(&p(&[2]), 2).unwrap().irrep_unitary(&u);
        let block = m.block(0, 0, 3, 3);
        assert!(frobenius_distance(&block, &triplet).unwrap() < 1e-10);
    }

    #[test]
    fn four_qubit_sector_dimensions() {
        let u = build_schur_qubit_circuit(4, DEFAULT_DIM_CAP).unwrap();
        let dims: Vec<(Partition, usize, usize)> = u
            .layout
            .sectors
            .iter()
            .map(|s| (s.lambda.clone(), s.dim_q, s.dim_p))
            .collect();
        assert_eq!(
            dims,
            vec![(p(&[4]), 5, 1), (p(&[3, 1]), 3, 3), (p(&[2, 2]), 1, 2)]
        );
        assert!(u.matrix.unitarity_residual() < 1e-10);
    }
}
