//! Gelfand-Tsetlin realizations of unitary-group irreps.
//!
//! For an irrep Q_λ of U(d) in the canonical GT-pattern basis, this module
//! builds the simple raising generators E_{k,k+1} from the classical
//! Gelfand-Tsetlin matrix-element formulas (all coefficients nonnegative),
//! derives the remaining elementary generators E_{jk} by commutators, and
//! evaluates q_λ(u) for a concrete unitary u by exponentiating along the
//! principal logarithm of u.

use num_complex::Complex64;

use crate::error::Result;
use crate::linalg::{expm, unitary_log, ComplexMatrix};
use crate::partitions::{enumerate_gt, GtPattern, Partition};

/// The GT basis of Q_λ together with its simple generator matrices.
pub struct GtBasis {
    pub lambda: Partition,
    pub d: usize,
    pub patterns: Vec<GtPattern>,
    /// raising[k] is E_{k+1,k+2} in 1-based generator terms (k in 0..d−1).
    raising: Vec<ComplexMatrix>,
    /// weights[p] is the d-component weight of pattern p.
    weights: Vec<Vec<i64>>,
}

impl GtBasis {
    pub fn new(lambda: &Partition, d: usize) -> Result<Self> {
        let patterns = enumerate_gt(lambda, d)?;
        let index: std::collections::HashMap<&GtPattern, usize> =
            patterns.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let dim = patterns.len();
        let mut raising = Vec::with_capacity(d.saturating_sub(1));
        for r in 1..d {
            // E_{r,r+1} adds one to a single entry of the length-r row.
            let mut m = ComplexMatrix::zeros(dim, dim);
            for (src, pat) in patterns.iter().enumerate() {
                for j in 1..=r {
                    let raised = pat.with_entry(r, j - 1, pat.entry(r, j - 1) + 1);
                    if !raised.is_valid() {
                        continue;
                    }
                    let coeff = raising_coefficient(pat, r, j);
                    let dst = index[&raised];
                    m[(dst, src)] = Complex64::new(coeff, 0.0);
                }
            }
            raising.push(m);
        }
        let weights = patterns.iter().map(|p| p.weight()).collect();
        Ok(GtBasis { lambda: lambda.clone(), d, patterns, raising, weights })
    }

    pub fn dim(&self) -> usize {
        self.patterns.len()
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    /// E_{k,k+1} (1-based k in 1..d).
    pub fn raising(&self, k: usize) -> &ComplexMatrix {
        &self.raising[k - 1]
    }

    /// E_{k+1,k} = E_{k,k+1}ᵀ (real matrices).
    pub fn lowering(&self, k: usize) -> ComplexMatrix {
        self.raising[k - 1].transpose()
    }

    /// Diagonal Cartan generator E_{kk} (1-based k in 1..=d).
    pub fn cartan(&self, k: usize) -> ComplexMatrix {
        let dim = self.dim();
        let mut m = ComplexMatrix::zeros(dim, dim);
        for p in 0..dim {
            m[(p, p)] = Complex64::new(self.weights[p][k - 1] as f64, 0.0);
        }
        m
    }

    /// dq_λ(E_{jk}) for arbitrary 1-based j, k: simple generators directly,
    /// longer hops by E_{j,k} = [E_{j,l}, E_{l,k}].
    pub fn elementary(&self, j: usize, k: usize) -> ComplexMatrix {
        if j == k {
            return self.cartan(j);
        }
        if j < k {
            if k == j + 1 {
                return self.raising(j).clone();
            }
            let a = self.elementary(j, k - 1);
            let b = self.elementary(k - 1, k);
            a.commutator(&b)
        } else {
            self.elementary(k, j).transpose()
        }
    }

    /// q_λ(u): exponentiates the image of the principal logarithm of u.
    pub fn irrep_unitary(&self, u: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(u.rows(), self.d, "u must be d×d");
        let log = unitary_log(u);
        let dim = self.dim();
        let mut gen = ComplexMatrix::zeros(dim, dim);
        for j in 1..=self.d {
            for k in 1..=self.d {
                let c = log[(j - 1, k - 1)];
                if c.norm_sqr() == 0.0 {
                    continue;
                }
                gen = gen.add(&self.elementary(j, k).scale(c));
            }
        }
        expm(&gen)
    }
}

/// Orthonormal-basis GT coefficient for raising entry j (1-based) of the
/// length-r row:
///
///   c = | Π_{i=1}^{r+1} (l_{r+1,i} − l_{r,j}) · Π_{i=1}^{r−1} (l_{r−1,i} − l_{r,j} − 1)
///       / Π_{i≠j} (l_{r,i} − l_{r,j})(l_{r,i} − l_{r,j} − 1) |^{1/2}
///
/// with l_{r,i} = m_{r,i} − i.
fn raising_coefficient(pat: &GtPattern, r: usize, j: usize) -> f64 {
    let l = |row: usize, i: usize| -> i64 { pat.entry(row, i - 1) as i64 - i as i64 };
    let lj = l(r, j);
    let mut num = 1i64;
    for i in 1..=(r + 1) {
        num *= l(r + 1, i) - lj;
    }
    for i in 1..r {
        num *= l(r - 1, i) - lj - 1;
    }
    let mut den = 1i64;
    for i in 1..=r {
        if i == j {
            continue;
        }
        den *= (l(r, i) - lj) * (l(r, i) - lj - 1);
    }
    ((num as f64) / (den as f64)).abs().sqrt()
}
