//! The acceptance suite: every release-gating property in one place, shared
//! by the `acceptance` integration test and the CLI `selftest` subcommand.
//!
//! Each criterion pins its tolerance here; none are configurable.

use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cg::{cg_angle, cg_unitary_general, HalfInt};
use crate::error::Result;
use crate::gpe::{basis_independence_check, run_gpe, schur_then_measure};
use crate::linalg::{ComplexMatrix, StateVector, DEFAULT_DIM_CAP};
use crate::partitions::{dim_p, dim_q, enumerate_partitions, Partition};
use crate::protocols::{concentrate_entanglement, spectrum_distribution};
use crate::schur::{
    build_schur_dense, build_schur_qubit_circuit, sector_projector, verify_duality,
};
use crate::symgroup::{
    fourier_transform_dense, isotypic_projector, natural_representation, GroupIndex, IrrepTable,
    DEFAULT_GROUP_CAP,
};

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{} criterion {:2}: {} ({:.2}s) {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.seconds,
            self.detail
        )
    }
}

fn run_criterion(
    id: usize,
    name: &'static str,
    time_limit: Option<f64>,
    body: impl FnOnce() -> Result<(bool, String)>,
) -> CriterionResult {
    let start = Instant::now();
    let (mut pass, mut detail) = match body() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    let seconds = start.elapsed().as_secs_f64();
    if let Some(limit) = time_limit {
        if seconds > limit {
            pass = false;
            detail = format!("{detail}; exceeded {limit}s runtime limit");
        }
    }
    CriterionResult { id, name, pass, detail, seconds }
}

/// Runs the full acceptance suite.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        two_qubit_decomposition(),
        three_qubit_mixed_symmetry(),
        schur_unitarity(),
        duality_reduction(),
        circuit_dense_equivalence(),
        cg_closed_form(),
        gpe_oracle_equivalence(),
        gpe_basis_independence(),
        spectrum_estimation(),
        entanglement_concentration(),
        dimension_identity(),
        fourier_orthogonality(),
    ]
}

fn sizes_under_test() -> Vec<(usize, usize)> {
    let mut sizes = Vec::new();
    for n in 2..=8 {
        sizes.push((n, 2));
    }
    for n in 2..=4 {
        sizes.push((n, 3));
    }
    for n in 2..=3 {
        sizes.push((n, 4));
    }
    sizes
}

fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("static partition")
}

fn two_qubit_decomposition() -> CriterionResult {
    run_criterion(1, "two-qubit singlet/triplet projectors", Some(1.0), || {
        let u = build_schur_dense(2, 2, DEFAULT_DIM_CAP)?;
        let h = 0.5f64.sqrt();
        let singlet_state = [
            Complex64::new(0.0, 0.0),
            Complex64::new(h, 0.0),
            Complex64::new(-h, 0.0),
            Complex64::new(0.0, 0.0),
        ];
        let mut want_singlet = ComplexMatrix::zeros(4, 4);
        for r in 0..4 {
            for c in 0..4 {
                want_singlet[(r, c)] = singlet_state[r] * singlet_state[c].conj();
            }
        }
        let want_triplet = ComplexMatrix::identity(4).sub(&want_singlet);
        let got_triplet = sector_projector(&u, &part(&[2]))?;
        let got_singlet = sector_projector(&u, &part(&[1, 1]))?;
        let r1 = crate::linalg::frobenius_distance(&got_singlet, &want_singlet)?;
        let r2 = crate::linalg::frobenius_distance(&got_triplet, &want_triplet)?;
        let residual = r1.max(r2);
        Ok((residual < 1e-10, format!("max residual {residual:.2e}")))
    })
}

fn three_qubit_mixed_symmetry() -> CriterionResult {
    run_criterion(2, "three-qubit mixed-symmetry sector", Some(1.0), || {
        let u = build_schur_dense(3, 2, DEFAULT_DIM_CAP)?;
        let got = sector_projector(&u, &part(&[2, 1]))?;
        let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        // |110⟩+ω|011⟩+ω*|101⟩ and |001⟩+ω|100⟩+ω*|010⟩, plus ω ↔ ω*.
        let mut ortho: Vec<StateVector> = Vec::new();
        for (support, w) in [
            ([0b110usize, 0b011, 0b101], omega),
            ([0b001, 0b100, 0b010], omega),
            ([0b110, 0b011, 0b101], omega.conj()),
            ([0b001, 0b100, 0b010], omega.conj()),
        ] {
            let mut v = vec![Complex64::new(0.0, 0.0); 8];
            v[support[0]] = Complex64::new(1.0, 0.0);
            v[support[1]] = w;
            v[support[2]] = w.conj();
            let mut s = StateVector::new(v).normalized();
            for o in &ortho {
                let coeff = o.inner(&s);
                s = s.sub(&o.scale(coeff));
            }
            ortho.push(s.normalized());
        }
        let mut want = ComplexMatrix::zeros(8, 8);
        for o in &ortho {
            for r in 0..8 {
                for c in 0..8 {
                    want[(r, c)] += o.amplitudes()[r] * o.amplitudes()[c].conj();
                }
            }
        }
        let residual = crate::linalg::frobenius_distance(&got, &want)?;
        Ok((residual < 1e-10, format!("residual {residual:.2e}")))
    })
}

fn schur_unitarity() -> CriterionResult {
    run_criterion(3, "Schur transform unitarity", Some(60.0), || {
        let mut worst = 0.0f64;
        for (n, d) in sizes_under_test() {
            let u = build_schur_dense(n, d, DEFAULT_DIM_CAP)?;
            worst = worst.max(u.matrix.unitarity_residual());
        }
        Ok((worst < 1e-10, format!("max ‖U†U−I‖ {worst:.2e}")))
    })
}

fn duality_reduction() -> CriterionResult {
    run_criterion(4, "Schur duality reduction", None, || {
        let mut worst_off = 0.0f64;
        let mut worst_tensor = 0.0f64;
        let mut all_pass = true;
        for (n, d) in sizes_under_test() {
            let u = build_schur_dense(n, d, DEFAULT_DIM_CAP)?;
            let report = verify_duality(&u, 20, 0, 1e-9)?;
            worst_off = worst_off.max(report.max_off_block);
            worst_tensor = worst_tensor.max(report.max_tensor_residual);
            all_pass &= report.pass;
        }
        Ok((
            all_pass,
            format!("max off-block {worst_off:.2e}, max tensor residual {worst_tensor:.2e}"),
        ))
    })
}

fn circuit_dense_equivalence() -> CriterionResult {
    run_criterion(5, "qubit circuit matches dense build", None, || {
        let mut worst_proj = 0.0f64;
        let mut worst_entry = 0.0f64;
        for n in 2..=6 {
            let dense = build_schur_dense(n, 2, DEFAULT_DIM_CAP)?;
            let circuit = build_schur_qubit_circuit(n, DEFAULT_DIM_CAP)?;
            for sector in &dense.layout.sectors {
                let a = sector_projector(&dense, &sector.lambda)?;
                let b = sector_projector(&circuit, &sector.lambda)?;
                worst_proj = worst_proj.max(crate::linalg::frobenius_distance(&a, &b)?);
            }
            worst_entry = worst_entry
                .max(crate::linalg::frobenius_distance(&dense.matrix, &circuit.matrix)?);
        }
        Ok((
            worst_proj < 1e-9 && worst_entry < 1e-9,
            format!("max projector gap {worst_proj:.2e}, max entrywise gap {worst_entry:.2e}"),
        ))
    })
}

fn cg_closed_form() -> CriterionResult {
    run_criterion(6, "CG rotations match the closed form", None, || {
        let mut worst = 0.0f64;
        // Sectors feeding cascade steps at n ≤ 6, d = 2 have at most five
        // boxes.
        for k in 1..=5usize {
            for lam in enumerate_partitions(k, 2)? {
                let cg = cg_unitary_general(&lam, 2, DEFAULT_DIM_CAP)?;
                let two_j = (lam.part(0) - lam.part(1)) as i64;
                for two_mp in (-(two_j + 1)..=two_j + 1).step_by(2) {
                    let rot = cg_angle(
                        HalfInt::from_twice(two_j),
                        HalfInt::from_twice(two_mp),
                    )?;
                    // Expected 2×2 block in row order [J−1/2, J+1/2] and
                    // column order [(m+1/2 pattern, qudit 1), (m−1/2
                    // pattern, qudit 0)]: [[cos, −sin], [sin, cos]].
                    let q_upper = (two_j + 1 - two_mp) / 2; // row in λ+e₁ block
                    let q_lower = (two_j - 1 - two_mp) / 2; // row in λ+e₂ block
                    let col_x = two_j - two_mp - 1; // 2·q_x with qudit bit 1
                    let col_y = two_j - two_mp + 1; // 2·q_y with qudit bit 0
                    let upper_block = &cg.output_layout[0];
                    let lower_block = cg.output_layout.get(1);
                    let mut check = |row: Option<usize>, col: i64, want: f64| {
                        if let Some(r) = row {
                            if (0..2 * (two_j + 1)).contains(&col) {
                                let got = cg.matrix[(r, col as usize)].re;
                                worst = worst.max((got - want).abs());
                            }
                        }
                    };
                    // Upper (J+1/2) block row.
                    let upper_row = (0..=two_j + 1)
                        .contains(&q_upper)
                        .then(|| upper_block.offset + q_upper as usize);
                    check(upper_row, col_x + 1, rot.sin_theta);
                    check(upper_row, col_y, rot.cos_theta);
                    // Lower (J−1/2) block row, when that sector exists.
                    if let Some(lower) = lower_block {
                        let lower_row = (0..=two_j - 1)
                            .contains(&q_lower)
                            .then(|| lower.offset + q_lower as usize);
                        check(lower_row, col_x + 1, rot.cos_theta);
                        check(lower_row, col_y, -rot.sin_theta);
                    }
                }
            }
        }
        Ok((worst < 1e-12, format!("max coefficient gap {worst:.2e}")))
    })
}

fn gpe_oracle_equivalence() -> CriterionResult {
    run_criterion(7, "GPE matches projector and Schur oracles", Some(120.0), || {
        let mut worst = 0.0f64;
        for (n, d) in [(2usize, 2usize), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3)] {
            let group = GroupIndex::new(n, DEFAULT_GROUP_CAP)?;
            let rep = natural_representation(&group, d, DEFAULT_DIM_CAP)?;
            let labels = enumerate_partitions(n, n)?;
            let projectors: Vec<ComplexMatrix> = labels
                .iter()
                .map(|mu| isotypic_projector(mu, &group, &rep))
                .collect::<Result<Vec<_>>>()?;
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64 * 31 + d as u64);
            for _ in 0..20 {
                let dim = d.pow(n as u32);
                let psi = StateVector::new(
                    (0..dim)
                        .map(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
                        .collect(),
                )
                .normalized();
                let out = run_gpe(&group, &rep, &psi)?;
                for (mu, proj) in labels.iter().zip(&projectors) {
                    let want = psi.inner(&proj.apply(&psi)).re;
                    worst = worst.max((out.probability(mu) - want).abs());
                }
                for (lam, prob) in schur_then_measure(n, d, &psi, DEFAULT_DIM_CAP)? {
                    worst = worst.max((out.probability(&lam) - prob).abs());
                }
            }
        }
        Ok((worst < 1e-10, format!("max probability gap {worst:.2e}")))
    })
}

fn gpe_basis_independence() -> CriterionResult {
    run_criterion(8, "GPE distribution is basis independent", None, || {
        let group = GroupIndex::new(3, DEFAULT_GROUP_CAP)?;
        let rep = natural_representation(&group, 2, DEFAULT_DIM_CAP)?;
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let psi = StateVector::new(
            (0..8)
                .map(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
                .collect(),
        )
        .normalized();
        let dev = basis_independence_check(&group, &rep, &psi, 5, 42)?;
        Ok((dev < 1e-10, format!("max total-variation deviation {dev:.2e}")))
    })
}

fn spectrum_estimation() -> CriterionResult {
    run_criterion(9, "spectrum estimation", None, || {
        let flat = spectrum_distribution(&[0.5, 0.5], 2, DEFAULT_DIM_CAP)?;
        let r1 = (flat.probability(&part(&[2])) - 0.75).abs();
        let r2 = (flat.probability(&part(&[1, 1])) - 0.25).abs();
        let skewed = spectrum_distribution(&[0.7, 0.3], 6, DEFAULT_DIM_CAP)?;
        let mode = skewed.mode().clone();
        let mode_gap = (mode.part(0) as f64 / 6.0 - 0.7).abs();
        let argmax_ok = skewed
            .lambda_distribution
            .iter()
            .all(|(lam, _)| mode_gap <= (lam.part(0) as f64 / 6.0 - 0.7).abs() + 1e-12);
        Ok((
            r1 < 1e-12 && r2 < 1e-12 && argmax_ok,
            format!("flat residuals {r1:.2e}/{r2:.2e}, mode λ = ({mode})"),
        ))
    })
}

fn entanglement_concentration() -> CriterionResult {
    run_criterion(10, "entanglement concentration", None, || {
        let report = concentrate_entanglement(&[0.8f64.sqrt(), 0.2f64.sqrt()], 3, DEFAULT_DIM_CAP)?;
        let same = (report.same_label_probability - 1.0).abs();
        let min_fidelity = report
            .sectors
            .iter()
            .map(|s| s.fidelity)
            .fold(1.0f64, f64::min);
        let mixed = report
            .sectors
            .iter()
            .find(|s| s.lambda == part(&[2, 1]))
            .map(|s| (s.rank, s.fidelity));
        let ok = same < 1e-10
            && min_fidelity >= 1.0 - 1e-9
            && matches!(mixed, Some((2, f)) if f >= 1.0 - 1e-9);
        Ok((
            ok,
            format!(
                "|p(λ_A=λ_B)−1| = {same:.2e}, min fidelity {min_fidelity:.12}"
            ),
        ))
    })
}

fn dimension_identity() -> CriterionResult {
    run_criterion(11, "dimension identity Σ dimQ·dimP = d^n", None, || {
        for n in 1..=8usize {
            for d in 2..=3usize {
                let mut total: u64 = 0;
                for lam in enumerate_partitions(n, d)? {
                    total += dim_q(&lam, d)? * dim_p(&lam);
                }
                if total != (d as u64).pow(n as u32) {
                    return Ok((false, format!("mismatch at n={n} d={d}: {total}")));
                }
            }
        }
        Ok((true, "exact for all n ≤ 8, d ≤ 3".to_string()))
    })
}

fn fourier_orthogonality() -> CriterionResult {
    run_criterion(12, "Fourier unitarity and Schur orthogonality", None, || {
        let mut worst_unitary = 0.0f64;
        for n in 2..=6usize {
            let f = fourier_transform_dense(n, DEFAULT_GROUP_CAP)?;
            worst_unitary = worst_unitary.max(f.unitarity_residual());
        }
        // Schur orthogonality of irrep matrix entries for n = 4.
        let n = 4;
        let group = GroupIndex::new(n, DEFAULT_GROUP_CAP)?;
        let table = IrrepTable::new(n)?;
        let mats: Vec<Vec<ComplexMatrix>> = (0..table.labels().len())
            .map(|li| {
                group
                    .elements()
                    .iter()
                    .map(|g| table.matrix(li, g))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut worst_orth = 0.0f64;
        for li in 0..table.labels().len() {
            for lj in 0..table.labels().len() {
                let (di, dj) = (table.dim(li), table.dim(lj));
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
                                worst_orth = worst_orth.max((acc - want).abs());
                            }
                        }
                    }
                }
            }
        }
        Ok((
            worst_unitary < 1e-10 && worst_orth < 1e-10,
            format!("max ‖F†F−I‖ {worst_unitary:.2e}, max orthogonality gap {worst_orth:.2e}"),
        ))
    })
}
