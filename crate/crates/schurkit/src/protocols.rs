//! End-to-end protocol demos built on the Schur transform: spectrum
//! estimation of a density operator from the λ distribution on ρ^{⊗n}, and
//! entanglement concentration into the p register.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{checked_pow, ComplexMatrix};
use crate::partitions::Partition;
use crate::schur::build_schur_dense;

/// The λ distribution of ρ^{⊗n} for a diagonal ρ, with the per-sector
/// normalized row lengths λ/n that estimate the spectrum.
#[derive(Clone, Debug)]
pub struct SpectrumReport {
    pub n: usize,
    pub d: usize,
    /// p(λ) = tr(Π_λ ρ^{⊗n}) per sector, canonical order.
    pub lambda_distribution: Vec<(Partition, f64)>,
    /// λ/n padded to d entries, the spectrum estimate attached to λ.
    pub normalized_lambdas: Vec<(Partition, Vec<f64>)>,
    /// The input spectrum sorted decreasingly.
    pub input_spectrum: Vec<f64>,
}

impl SpectrumReport {
    pub fn probability(&self, lambda: &Partition) -> f64 {
        self.lambda_distribution
            .iter()
            .find(|(l, _)| l == lambda)
            .map_or(0.0, |(_, p)| *p)
    }

    /// The sector of largest probability.
    pub fn mode(&self) -> &Partition {
        &self
            .lambda_distribution
            .iter()
            .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .expect("nonempty distribution")
            .0
    }
}

/// Exact λ distribution of ρ^{⊗n} with ρ = diag(probs): the mixture over
/// computational basis strings of the sector masses of U_Sch, weighted by
/// the product probabilities. No density matrix is materialized.
pub fn spectrum_distribution(probs: &[f64], n: usize, cap: usize) -> Result<SpectrumReport> {
    let d = probs.len();
    if d < 2 {
        return Err(Error::invalid("need at least two spectrum entries"));
    }
    if probs.iter().any(|&p| p < 0.0) {
        return Err(Error::invalid("probabilities must be nonnegative"));
    }
    let total: f64 = probs.iter().sum();
    if (total - 1.0).abs() > 1e-12 {
        return Err(Error::invalid(format!("probabilities sum to {total}, expected 1")));
    }
    let dim = checked_pow(d, n, cap)?;
    let u = build_schur_dense(n, d, cap)?;

    // Pr(x) for each basis string x.
    let mut weights = vec![0.0f64; dim];
    let mut digits = vec![0usize; n];
    for (x, w) in weights.iter_mut().enumerate() {
        crate::linalg::index_to_digits(x, d, &mut digits);
        *w = digits.iter().map(|&i| probs[i]).product();
    }

    let mut lambda_distribution = Vec::new();
    let mut normalized_lambdas = Vec::new();
    for sector in &u.layout.sectors {
        let mut mass = 0.0;
        for r in sector.offset..sector.offset + sector.dim_q * sector.dim_p {
            let row = u.matrix.row(r);
            for (x, w) in weights.iter().enumerate() {
                if *w != 0.0 {
                    mass += row[x].norm_sqr() * w;
                }
            }
        }
        lambda_distribution.push((sector.lambda.clone(), mass));
        let normalized: Vec<f64> = sector
            .lambda
            .padded(d)
            .iter()
            .map(|&part| part as f64 / n as f64)
            .collect();
        normalized_lambdas.push((sector.lambda.clone(), normalized));
    }
    let mut input_spectrum = probs.to_vec();
    input_spectrum.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(SpectrumReport { n, d, lambda_distribution, normalized_lambdas, input_spectrum })
}

/// Per-sector outcome of entanglement concentration.
#[derive(Clone, Debug)]
pub struct ConcentrationSector {
    pub lambda: Partition,
    /// Probability of both parties measuring this λ.
    pub probability: f64,
    /// Schmidt rank of the concentrated state, dim P_λ.
    pub rank: usize,
    /// Fidelity of the conditional (p_A, p_B) state with the canonical
    /// maximally entangled state of that rank.
    pub fidelity: f64,
}

/// Outcome of concentrating |ψ⟩^{⊗n} with both parties applying U_Sch.
#[derive(Clone, Debug)]
pub struct ConcentrationReport {
    pub n: usize,
    pub d: usize,
    pub sectors: Vec<ConcentrationSector>,
    /// Probability that λ_A = λ_B (must be 1 for pure bipartite inputs).
    pub same_label_probability: f64,
    /// Expected concentrated entanglement Σ_λ p(λ)·log₂ dim P_λ in ebits.
    pub expected_ebits: f64,
}

/// Runs entanglement concentration for |ψ⟩_AB = Σ_i `schmidt[i]`·|ii⟩.
///
/// Both parties apply U_Sch to their n qudits. For every sector pair the
/// joint state is a block of U·diag(s(x))·Uᵀ; the diagonal blocks carry all
/// the weight, and conditioned on λ the reduced state of the (p_A, p_B)
/// registers (with p relabeled to integers 0..dim P_λ) is maximally
/// entangled.
pub fn concentrate_entanglement(
    schmidt: &[f64],
    n: usize,
    cap: usize,
) -> Result<ConcentrationReport> {
    let d = schmidt.len();
    if d < 2 {
        return Err(Error::invalid("need at least two Schmidt coefficients"));
    }
    if schmidt.iter().any(|&s| s < 0.0) {
        return Err(Error::invalid("Schmidt coefficients must be nonnegative"));
    }
    let norm: f64 = schmidt.iter().map(|s| s * s).sum();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::invalid(format!(
            "Schmidt coefficients have squared sum {norm}, expected 1"
        )));
    }
    // The joint A ⊗ B space has dimension (d²)^n.
    checked_pow(d * d, n, cap)?;
    let dim = checked_pow(d, n, cap)?;
    let u = build_schur_dense(n, d, cap)?;

    // |ψ⟩^{⊗n} regrouped as (A qudits) ⊗ (B qudits) is Σ_x s(x)|x⟩|x⟩, so
    // after both Schur transforms the joint amplitudes are Φ = U·S·Uᵀ.
    let mut weighted = u.matrix.clone();
    let mut digits = vec![0usize; n];
    for x in 0..dim {
        crate::linalg::index_to_digits(x, d, &mut digits);
        let s: f64 = digits.iter().map(|&i| schmidt[i]).product();
        let sc = Complex64::new(s, 0.0);
        for r in 0..dim {
            weighted[(r, x)] *= sc;
        }
    }
    let phi = weighted.mul(&u.matrix.transpose());

    let mut same_label_probability = 0.0;
    let mut expected_ebits = 0.0;
    let mut sectors = Vec::new();
    for sa in &u.layout.sectors {
        for sb in &u.layout.sectors {
            let block = phi.block(
                sa.offset,
                sb.offset,
                sa.dim_q * sa.dim_p,
                sb.dim_q * sb.dim_p,
            );
            let mass: f64 = block.data().iter().map(|z| z.norm_sqr()).sum();
            if sa.lambda != sb.lambda {
                continue;
            }
            same_label_probability += mass;
            if mass < 1e-12 {
                continue;
            }
            let fidelity = maximally_entangled_fidelity(&block, sa.dim_q, sa.dim_p, mass);
            expected_ebits += mass * (sa.dim_p as f64).log2();
            sectors.push(ConcentrationSector {
                lambda: sa.lambda.clone(),
                probability: mass,
                rank: sa.dim_p,
                fidelity,
            });
        }
    }
    Ok(ConcentrationReport { n, d, sectors, same_label_probability, expected_ebits })
}

/// Fidelity of the (p_A, p_B) reduced state of a normalized sector block
/// with (1/√r)Σ_p |pp⟩: with T_{qq'} = Σ_p Ψ[(q,p),(q',p)], the fidelity is
/// Σ_{qq'} |T_{qq'}|² / r.
fn maximally_entangled_fidelity(
    block: &ComplexMatrix,
    dim_q: usize,
    dim_p: usize,
    mass: f64,
) -> f64 {
    let mut acc = 0.0;
    for qa in 0..dim_q {
        for qb in 0..dim_q {
            let mut t = Complex64::new(0.0, 0.0);
            for p in 0..dim_p {
                t += block[(qa * dim_p + p, qb * dim_p + p)];
            }
            acc += t.norm_sqr();
        }
    }
    acc / (dim_p as f64 * mass)
}
