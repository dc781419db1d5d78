//! Generalized phase estimation over the symmetric group.
//!
//! The simulated circuit prepares the uniform superposition over group
//! elements, applies the controlled representation C_R = Σ_g |g⟩⟨g| ⊗ R(g),
//! then the nonabelian Fourier transform on the group register. Measuring
//! the irrep label yields μ with probability ⟨ψ|Π_μ|ψ⟩, without performing
//! a full Schur transform; with R the natural qudit representation P the
//! label distribution coincides with measuring λ after U_Sch.

use num_complex::Complex64;

use crate::error::{check_cap, Error, Result};
use crate::linalg::{random_unitary, ComplexMatrix, StateVector};
use crate::partitions::{dim_p, enumerate_partitions, Partition};
use crate::schur::{build_schur_dense, sector_distribution};
use crate::symgroup::{
    natural_representation, yor_generators, yor_matrix_with, GroupIndex, DEFAULT_GROUP_CAP,
};

/// Result of the label measurement: the distribution over all partitions of
/// n in canonical order, and for each label of nonzero probability the
/// renormalized projection of ψ onto its isotypic component.
pub struct GpeOutcome {
    pub distribution: Vec<(Partition, f64)>,
    pub post_states: Vec<(Partition, StateVector)>,
}

impl GpeOutcome {
    pub fn probability(&self, mu: &Partition) -> f64 {
        self.distribution
            .iter()
            .find(|(l, _)| l == mu)
            .map_or(0.0, |(_, p)| *p)
    }

    pub fn post_state(&self, mu: &Partition) -> Option<&StateVector> {
        self.post_states
            .iter()
            .find(|(l, _)| l == mu)
            .map(|(_, s)| s)
    }
}

/// The block-diagonal controlled representation C_R = Σ_g |g⟩⟨g| ⊗ R(g).
pub fn controlled_rep(
    group: &GroupIndex,
    rep: &[ComplexMatrix],
    cap: usize,
) -> Result<ComplexMatrix> {
    if rep.len() != group.order() {
        return Err(Error::invalid("representation family size must equal |G|"));
    }
    let dim_r = rep[0].rows();
    let dim = check_cap(group.order() as u128 * dim_r as u128, cap)?;
    let mut m = ComplexMatrix::zeros(dim, dim);
    for (gi, r) in rep.iter().enumerate() {
        for a in 0..dim_r {
            for b in 0..dim_r {
                m[(gi * dim_r + a, gi * dim_r + b)] = r[(a, b)];
            }
        }
    }
    Ok(m)
}

/// Simulates the phase-estimation circuit and measures the irrep label.
pub fn run_gpe(
    group: &GroupIndex,
    rep: &[ComplexMatrix],
    psi: &StateVector,
) -> Result<GpeOutcome> {
    if rep.len() != group.order() {
        return Err(Error::invalid("representation family size must equal |G|"));
    }
    let dim_r = rep[0].rows();
    if psi.dim() != dim_r {
        return Err(Error::invalid("state dimension does not match the representation"));
    }
    if (psi.norm() - 1.0).abs() > 1e-10 {
        return Err(Error::invalid(format!(
            "state is not normalized (norm {})",
            psi.norm()
        )));
    }
    let n = group.degree();
    let order = group.order() as f64;
    let labels = enumerate_partitions(n, n)?;

    // Rotate ψ by every R(g) once; the g-block of the pre-Fourier state is
    // R(g)ψ/√|G|.
    let rotated: Vec<StateVector> = rep.iter().map(|r| r.apply(psi)).collect();

    let mut distribution = Vec::with_capacity(labels.len());
    let mut post_states = Vec::new();
    let mut total = 0.0;
    for mu in &labels {
        let gens = yor_generators(mu)?;
        let d_mu = dim_p(mu) as usize;
        // Irrep matrices for every group element, reused for the Fourier
        // blocks and the character below.
        let mats: Vec<ComplexMatrix> = group
            .elements()
            .iter()
            .map(|g| yor_matrix_with(&gens, d_mu, g))
            .collect::<Result<Vec<_>>>()?;
        // Fourier output block (μ, α, β) = √(d_μ)/|G| Σ_g r_μ(g)_{αβ} R(g)ψ.
        let weight = (d_mu as f64).sqrt() / order;
        let mut p_mu = 0.0;
        for alpha in 0..d_mu {
            for beta in 0..d_mu {
                let mut block = vec![Complex64::new(0.0, 0.0); dim_r];
                for (gi, w) in rotated.iter().enumerate() {
                    let coeff = mats[gi][(alpha, beta)].re * weight;
                    if coeff == 0.0 {
                        continue;
                    }
                    for (slot, amp) in block.iter_mut().zip(w.amplitudes()) {
                        *slot += amp * coeff;
                    }
                }
                p_mu += block.iter().map(|z| z.norm_sqr()).sum::<f64>();
            }
        }
        distribution.push((mu.clone(), p_mu));
        total += p_mu;

        if p_mu > 1e-12 {
            // Post-measurement state on the R register: Π_μ ψ renormalized,
            // with Π_μ = (d_μ/|G|) Σ_g χ_μ(g) R(g).
            let mut proj = StateVector::zero(dim_r);
            for (gi, w) in rotated.iter().enumerate() {
                let chi = mats[gi].trace().re;
                if chi == 0.0 {
                    continue;
                }
                for (slot, amp) in proj.amplitudes_mut().iter_mut().zip(w.amplitudes()) {
                    *slot += amp * (chi * d_mu as f64 / order);
                }
            }
            post_states.push((mu.clone(), proj.normalized()));
        }
    }
    if (total - 1.0).abs() > 1e-10 {
        return Err(Error::invalid(format!(
            "internal: GPE distribution sums to {total}, expected 1"
        )));
    }
    Ok(GpeOutcome { distribution, post_states })
}

/// Cap on the combined group ⊗ system dimension n!·d^n simulated densely.
pub const DEFAULT_GPE_CAP: usize = 1 << 22;

/// The weak Schur measurement: GPE with the natural representation P of S_n
/// on n qudits of dimension d, so that the measured label is λ.
pub fn weak_schur_measure(n: usize, d: usize, psi: &StateVector, cap: usize) -> Result<GpeOutcome> {
    let group = GroupIndex::new(n, DEFAULT_GROUP_CAP)?;
    let dim_r = psi.dim();
    check_cap(group.order() as u128 * dim_r as u128, DEFAULT_GPE_CAP)?;
    let rep = natural_representation(&group, d, cap)?;
    run_gpe(&group, &rep, psi)
}

/// Max total-variation deviation of the GPE distribution under conjugating
/// both the representation and the state by random unitaries.
pub fn basis_independence_check(
    group: &GroupIndex,
    rep: &[ComplexMatrix],
    psi: &StateVector,
    trials: usize,
    seed: u64,
) -> Result<f64> {
    let baseline = run_gpe(group, rep, psi)?;
    let dim_r = rep[0].rows();
    let mut worst = 0.0f64;
    for t in 0..trials {
        let v = random_unitary(dim_r, seed.wrapping_add(t as u64));
        let vdag = v.adjoint();
        let conjugated: Vec<ComplexMatrix> =
            rep.iter().map(|r| v.mul(r).mul(&vdag)).collect();
        let rotated_psi = v.apply(psi);
        let outcome = run_gpe(group, &conjugated, &rotated_psi)?;
        let tv: f64 = baseline
            .distribution
            .iter()
            .zip(&outcome.distribution)
            .map(|((_, a), (_, b))| (a - b).abs())
            .sum::<f64>()
            / 2.0;
        worst = worst.max(tv);
    }
    Ok(worst)
}

/// Distribution of λ measured after the full Schur transform, for
/// cross-checking [`weak_schur_measure`].
pub fn schur_then_measure(n: usize, d: usize, psi: &StateVector, cap: usize) -> Result<Vec<(Partition, f64)>> {
    let u = build_schur_dense(n, d, cap)?;
    Ok(sector_distribution(&u, psi))
}

/// Draws label measurement shots from an outcome distribution; a demo-mode
/// companion to the analytic probabilities.
pub fn sample_shots(outcome: &GpeOutcome, shots: usize, seed: u64) -> Vec<(Partition, usize)> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut counts: Vec<(Partition, usize)> = outcome
        .distribution
        .iter()
        .map(|(l, _)| (l.clone(), 0))
        .collect();
    for _ in 0..shots {
        let mut x: f64 = rng.gen();
        for ((_, p), (_, c)) in outcome.distribution.iter().zip(counts.iter_mut()) {
            x -= p;
            if x <= 0.0 {
                *c += 1;
                break;
            }
        }
    }
    counts
}
