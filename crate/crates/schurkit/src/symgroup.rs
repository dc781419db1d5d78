//! Representation theory of the symmetric group S_n.
//!
//! Irrep matrices are built in Young's orthogonal form: the basis of P_λ is
//! the canonical partition-path order of [`crate::partitions`], the adjacent
//! transposition s_k acts with diagonal entries 1/r given by the axial
//! distance r from k to k+1, and off-diagonal entries √(1 − 1/r²) taken
//! nonnegative. These matrices drive the dense nonabelian Fourier transform
//! and the isotypic projectors that serve as brute-force oracles elsewhere.

use std::collections::HashMap;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{check_cap, Error, Result};
use crate::linalg::{enumerate_permutations, ComplexMatrix, Permutation};
use crate::partitions::{dim_p, enumerate_partitions, paths_to, Partition};

/// Default cap on the group order n! for dense group-algebra objects.
pub const DEFAULT_GROUP_CAP: usize = 5040;

/// Canonical indexing of all n! permutations (lexicographic on images).
pub struct GroupIndex {
    n: usize,
    elements: Vec<Permutation>,
    lookup: HashMap<Vec<usize>, usize>,
}

impl GroupIndex {
    pub fn new(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("group degree must be positive"));
        }
        let mut order: u128 = 1;
        for k in 1..=n {
            order = order.saturating_mul(k as u128);
        }
        check_cap(order, cap)?;
        let elements = enumerate_permutations(n);
        let lookup = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.images().to_vec(), i))
            .collect();
        Ok(GroupIndex { n, elements, lookup })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, pi: &Permutation) -> usize {
        self.lookup[pi.images()]
    }
}

/// Young's orthogonal form generator matrices: for each adjacent
/// transposition s_k = (k k+1), 1-based k in 1..n, the dimP(λ)×dimP(λ)
/// orthogonal matrix in canonical path order.
pub fn yor_generators(lambda: &Partition) -> Result<Vec<ComplexMatrix>> {
    let n = lambda.size();
    let paths = paths_to(lambda, n)?;
    let dim = paths.len();
    let index: HashMap<_, _> = paths.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    for k in 1..n {
        let mut m = ComplexMatrix::zeros(dim, dim);
        for (i, path) in paths.iter().enumerate() {
            let r = path.axial_distance(k) as f64;
            m[(i, i)] = Complex64::new(1.0 / r, 0.0);
            if let Some(swapped) = path.swap_labels(k) {
                let j = index[&swapped];
                let off = (1.0 - 1.0 / (r * r)).sqrt();
                m[(i, j)] = Complex64::new(off, 0.0);
            }
        }
        gens.push(m);
    }
    Ok(gens)
}

/// Young's-orthogonal-form matrix p_λ(π), by factoring π into adjacent
/// transpositions and multiplying generators.
pub fn yor_matrix(lambda: &Partition, pi: &Permutation) -> Result<ComplexMatrix> {
    if pi.degree() != lambda.size() {
        return Err(Error::invalid(format!(
            "permutation degree {} does not match |λ| = {}",
            pi.degree(),
            lambda.size()
        )));
    }
    let gens = yor_generators(lambda)?;
    yor_matrix_with(&gens, dim_p(lambda) as usize, pi)
}

/// As [`yor_matrix`], reusing precomputed generators.
pub fn yor_matrix_with(
    gens: &[ComplexMatrix],
    dim: usize,
    pi: &Permutation,
) -> Result<ComplexMatrix> {
    let mut m = ComplexMatrix::identity(dim);
    for k in pi.adjacent_factorization() {
        m = m.mul(&gens[k]);
    }
    Ok(m)
}

/// χ_λ(π): the trace of the Young's-orthogonal-form matrix.
pub fn character(lambda: &Partition, pi: &Permutation) -> Result<f64> {
    Ok(yor_matrix(lambda, pi)?.trace().re)
}

/// Irrep table for S_n: labels in canonical partition order with their
/// Young's-orthogonal generator matrices.
pub struct IrrepTable {
    n: usize,
    labels: Vec<Partition>,
    generators: Vec<Vec<ComplexMatrix>>,
    dims: Vec<usize>,
}

impl IrrepTable {
    pub fn new(n: usize) -> Result<Self> {
        let labels = enumerate_partitions(n, n)?;
        let mut generators = Vec::with_capacity(labels.len());
        let mut dims = Vec::with_capacity(labels.len());
        for lam in &labels {
            generators.push(yor_generators(lam)?);
            dims.push(dim_p(lam) as usize);
        }
        Ok(IrrepTable { n, labels, generators, dims })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    pub fn matrix(&self, i: usize, pi: &Permutation) -> Result<ComplexMatrix> {
        yor_matrix_with(&self.generators[i], self.dims[i], pi)
    }
}

/// The dense nonabelian Fourier transform over S_n: the n!×n! unitary with
/// entries √(d_ρ/|G|)·[r_ρ(g)]_{αβ}, rows ordered by (ρ, α, β) with ρ in
/// canonical partition order and α outer / β inner, columns by group index.
pub fn fourier_transform_dense(n: usize, cap: usize) -> Result<ComplexMatrix> {
    let group = GroupIndex::new(n, cap)?;
    let table = IrrepTable::new(n)?;
    let order = group.order();
    let mut f = ComplexMatrix::zeros(order, order);
    for (gi, g) in group.elements().iter().enumerate() {
        let mut row = 0usize;
        for (li, _) in table.labels().iter().enumerate() {
            let d = table.dim(li);
            let m = table.matrix(li, g)?;
            let weight = (d as f64 / order as f64).sqrt();
            for alpha in 0..d {
                for beta in 0..d {
                    f[(row + alpha * d + beta, gi)] = m[(alpha, beta)].scale(weight);
                }
            }
            row += d * d;
        }
        debug_assert_eq!(row, order);
    }
    Ok(f)
}

/// A representation of S_n given concretely as one matrix per group element
/// in [`GroupIndex`] order.
pub fn natural_representation(group: &GroupIndex, d: usize, cap: usize) -> Result<Vec<ComplexMatrix>> {
    group
        .elements()
        .iter()
        .map(|g| crate::linalg::build_p(g, group.degree(), d, cap))
        .collect()
}

/// The isotypic projector Π_μ = (d_μ/|G|) Σ_g χ_μ(g)* R(g).
///
/// The family `rep` is spot-checked for the homomorphism property on ten
/// seeded random pairs before use.
pub fn isotypic_projector(
    mu: &Partition,
    group: &GroupIndex,
    rep: &[ComplexMatrix],
) -> Result<ComplexMatrix> {
    if rep.len() != group.order() {
        return Err(Error::invalid("representation family size must equal |G|"));
    }
    spot_check_homomorphism(group, rep, 10, 0x5eed)?;
    let n = group.degree();
    if mu.size() != n {
        return Err(Error::invalid("|μ| must equal the group degree"));
    }
    let gens = yor_generators(mu)?;
    let dmu = dim_p(mu) as usize;
    let dim = rep[0].rows();
    let mut acc = ComplexMatrix::zeros(dim, dim);
    for (gi, g) in group.elements().iter().enumerate() {
        let chi = yor_matrix_with(&gens, dmu, g)?.trace().re;
        if chi == 0.0 {
            continue;
        }
        acc = acc.add(&rep[gi].scale(Complex64::new(chi, 0.0)));
    }
    Ok(acc.scale(Complex64::new(dmu as f64 / group.order() as f64, 0.0)))
}

fn spot_check_homomorphism(
    group: &GroupIndex,
    rep: &[ComplexMatrix],
    pairs: usize,
    seed: u64,
) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..pairs {
        let a = rng.gen_range(0..group.order());
        let b = rng.gen_range(0..group.order());
        let ab = group.index_of(&group.element(a).compose(group.element(b)));
        let residual = rep[a].mul(&rep[b]).sub(&rep[ab]).frobenius_norm();
        if residual > 1e-8 {
            return Err(Error::invalid(format!(
                "representation family fails homomorphism spot check (residual {residual:.2e})"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frobenius_distance, StateVector, DEFAULT_DIM_CAP};
    use crate::partitions::enumerate_paths;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn yor_s1_on_standard_is_diag() {
        let lam = p(&[2, 1]);
        let s1 = Permutation::transposition(3, 0, 1);
        let m = yor_matrix(&lam, &s1).unwrap();
        assert!((m[(0, 0)].re - 1.0).abs() < 1e-15);
        assert!((m[(1, 1)].re + 1.0).abs() < 1e-15);
        assert!(m[(0, 1)].norm() < 1e-15);
        // Identity and trace.
        let e = Permutation::identity(3);
        assert_eq!(character(&lam, &e).unwrap(), 2.0);
    }

    #[test]
    fn yor_is_orthogonal_homomorphism() {
        for n in 2..=4usize {
            let perms = enumerate_permutations(n);
            for lam in enumerate_partitions(n, n).unwrap() {
                for a in &perms {
                    let ma = yor_matrix(&lam, a).unwrap();
                    assert!(ma.unitarity_residual() < 1e-12, "orthogonality λ={lam}");
                    for b in &perms {
                        let mb = yor_matrix(&lam, b).unwrap();
                        let mab = yor_matrix(&lam, &a.compose(b)).unwrap();
                        assert!(
                            frobenius_distance(&ma.mul(&mb), &mab).unwrap() < 1e-10,
                            "homomorphism λ={lam}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn yor_homomorphism_sampled_n5_n6() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [5usize, 6] {
            let perms = enumerate_permutations(n);
            for lam in enumerate_partitions(n, n).unwrap() {
                let gens = yor_generators(&lam).unwrap();
                let dim = dim_p(&lam) as usize;
                for _ in 0..30 {
                    let a = &perms[rng.gen_range(0..perms.len())];
                    let b = &perms[rng.gen_range(0..perms.len())];
                    let ma = yor_matrix_with(&gens, dim, a).unwrap();
                    let mb = yor_matrix_with(&gens, dim, b).unwrap();
                    let mab = yor_matrix_with(&gens, dim, &a.compose(b)).unwrap();
                    assert!(frobenius_distance(&ma.mul(&mb), &mab).unwrap() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn braid_relations_hold() {
        for n in 2..=6usize {
            for lam in enumerate_partitions(n, n).unwrap() {
                let gens = yor_generators(&lam).unwrap();
                for g in &gens {
                    let sq = g.mul(g);
                    let dim = sq.rows();
                    assert!(
                        frobenius_distance(&sq, &ComplexMatrix::identity(dim)).unwrap() < 1e-12,
                        "s_k² = I for λ={lam}"
                    );
                }
                for j in 0..gens.len() {
                    for k in 0..gens.len() {
                        let lhs;
                        let rhs;
                        if j.abs_diff(k) == 1 {
                            lhs = gens[j].mul(&gens[k]).mul(&gens[j]);
                            rhs = gens[k].mul(&gens[j]).mul(&gens[k]);
                        } else {
                            lhs = gens[j].mul(&gens[k]);
                            rhs = gens[k].mul(&gens[j]);
                        }
                        assert!(
                            frobenius_distance(&lhs, &rhs).unwrap() < 1e-12,
                            "braid λ={lam} j={j} k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn trivial_character_is_one() {
        for pi in enumerate_permutations(4) {
            assert!((character(&p(&[4]), &pi).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn characters_are_class_functions_and_orthogonal() {
        let n = 4;
        let perms = enumerate_permutations(n);
        let labels = enumerate_partitions(n, n).unwrap();
        // Orthogonality: Σ_π χ_μ(π) χ_ν(π) = n!·δ_{μν}.
        for mu in &labels {
            for nu in &labels {
                let mut acc = 0.0;
                for pi in &perms {
                    acc += character(mu, pi).unwrap() * character(nu, pi).unwrap();
                }
                let want = if mu == nu { 24.0 } else { 0.0 };
                assert!((acc - want).abs() < 1e-9, "μ={mu} ν={nu} got {acc}");
            }
        }
        // Class function: χ(σπσ⁻¹) = χ(π).
        let mu = p(&[2, 1, 1]);
        for pi in &perms {
            for sg in &perms {
                let conj = sg.compose(pi).compose(&sg.inverse());
                let a = character(&mu, pi).unwrap();
                let b = character(&mu, &conj).unwrap();
                assert!((a - b).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn fourier_s2_is_hadamard() {
        let f = fourier_transform_dense(2, DEFAULT_GROUP_CAP).unwrap();
        let h = 0.5f64.sqrt();
        let want = ComplexMatrix::from_real_rows(&[vec![h, h], vec![h, -h]]);
        assert!(frobenius_distance(&f, &want).unwrap() < 1e-15);
    }

    #[test]
    fn fourier_is_unitary() {
        for n in 2..=6usize {
            let f = fourier_transform_dense(n, DEFAULT_GROUP_CAP).unwrap();
            assert!(f.unitarity_residual() < 1e-10, "n={n}");
        }
        assert!(matches!(
            fourier_transform_dense(8, DEFAULT_GROUP_CAP),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn schur_orthogonality_of_matrix_entries() {
        // Σ_g r_ρ(g)_{αβ} r_σ(g)_{γδ} = (|G|/d_ρ) δ_{ρσ} δ_{αγ} δ_{βδ}.
        let n = 4;
        let group = GroupIndex::new(n, DEFAULT_GROUP_CAP).unwrap();
        let table = IrrepTable::new(n).unwrap();
        let mats: Vec<Vec<ComplexMatrix>> = (0..table.labels().len())
            .map(|li| {
                group
                    .elements()
                    .iter()
                    .map(|g| table.matrix(li, g).unwrap())
                    .collect()
            })
            .collect();
        for (li, _) in table.labels().iter().enumerate() {
            for (lj, _) in table.labels().iter().enumerate() {
                let di = table.dim(li);
                let dj = table.dim(lj);
                for a in 0..di {
                    for b in 0..di {
                        for c in 0..dj {
                            for e in 0..dj {
                                let mut acc = 0.0;
                                for (x, y) in mats[li].iter().zip(&mats[lj]) {
                                    acc += x[(a, b)].re * y[(c, e)].re;
                                }
                                let want = if li == lj && a == c && b == e {
                                    group.order() as f64 / di as f64
                                } else {
                                    0.0
                                };
                                assert!((acc - want).abs() < 1e-10);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn projector_onto_two_qubit_symmetry_sectors() {
        let group = GroupIndex::new(2, DEFAULT_GROUP_CAP).unwrap();
        let rep = natural_representation(&group, 2, DEFAULT_DIM_CAP).unwrap();
        let triplet = isotypic_projector(&p(&[2]), &group, &rep).unwrap();
        let singlet = isotypic_projector(&p(&[1, 1]), &group, &rep).unwrap();
        assert!((triplet.trace().re - 3.0).abs() < 1e-12);
        assert!((singlet.trace().re - 1.0).abs() < 1e-12);
        // The singlet projector is |s⟩⟨s| for s = (|01⟩−|10⟩)/√2.
        let h = 0.5f64.sqrt();
        let s = StateVector::new(vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(h, 0.0),
            Complex64::new(-h, 0.0),
            Complex64::new(0.0, 0.0),
        ]);
        let proj_s = singlet.apply(&s);
        assert!(proj_s.sub(&s).norm() < 1e-12);
        // Idempotent and self-adjoint.
        assert!(frobenius_distance(&triplet.mul(&triplet), &triplet).unwrap() < 1e-9);
        assert!(frobenius_distance(&triplet.adjoint(), &triplet).unwrap() < 1e-12);
    }

    #[test]
    fn projectors_are_complete_for_three_qubits() {
        let group = GroupIndex::new(3, DEFAULT_GROUP_CAP).unwrap();
        let rep = natural_representation(&group, 2, DEFAULT_DIM_CAP).unwrap();
        let mut acc = ComplexMatrix::zeros(8, 8);
        for lam in enumerate_partitions(3, 3).unwrap() {
            acc = acc.add(&isotypic_projector(&lam, &group, &rep).unwrap());
        }
        assert!(frobenius_distance(&acc, &ComplexMatrix::identity(8)).unwrap() < 1e-9);
    }

    #[test]
    fn projector_rejects_non_homomorphic_family() {
        let group = GroupIndex::new(2, DEFAULT_GROUP_CAP).unwrap();
        let bad = vec![ComplexMatrix::identity(2), ComplexMatrix::identity(2).scale(Complex64::new(0.5, 0.0))];
        assert!(isotypic_projector(&p(&[2]), &group, &bad).is_err());
    }

    #[test]
    fn burnside_row_count() {
        for n in 2..=5usize {
            let total: usize = enumerate_paths(n, n)
                .unwrap()
                .iter()
                .map(|(_, paths)| paths.len() * paths.len())
                .sum();
            let order: usize = (1..=n).product();
            assert_eq!(total, order);
        }
    }
}
