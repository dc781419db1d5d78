//! Matrix decompositions: Householder QR, a cyclic Jacobi eigensolver for
//! Hermitian matrices, the principal logarithm of a unitary, and the matrix
//! exponential by scaling and squaring.

use num_complex::Complex64;

use super::ComplexMatrix;

/// Householder QR: returns (Q, R) with A = Q·R, Q unitary, R upper triangular.
pub fn householder_qr(a: &ComplexMatrix) -> (ComplexMatrix, ComplexMatrix) {
    let m = a.rows();
    let n = a.cols();
    let mut r = a.clone();
    let mut q = ComplexMatrix::identity(m);
    for k in 0..n.min(m.saturating_sub(1)) {
        // Householder vector for column k below the diagonal.
        let mut x = vec![Complex64::new(0.0, 0.0); m - k];
        for i in k..m {
            x[i - k] = r[(i, k)];
        }
        let norm_x = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm_x == 0.0 {
            continue;
        }
        let x0 = x[0];
        let phase = if x0.norm() == 0.0 { Complex64::new(1.0, 0.0) } else { x0 / x0.norm() };
        let alpha = -phase * norm_x;
        let mut v = x;
        v[0] -= alpha;
        let vnorm_sq: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm_sq == 0.0 {
            continue;
        }
        // Apply H = I − 2vv†/‖v‖² to R (left) and accumulate into Q.
        for c in 0..n {
            let mut dot = Complex64::new(0.0, 0.0);
            for i in k..m {
                dot += v[i - k].conj() * r[(i, c)];
            }
            let f = 2.0 * dot / vnorm_sq;
            for i in k..m {
                let delta = f * v[i - k];
                r[(i, c)] -= delta;
            }
        }
        for c in 0..m {
            let mut dot = Complex64::new(0.0, 0.0);
            for i in k..m {
                dot += v[i - k].conj() * q[(c, i)].conj();
            }
            let f = 2.0 * dot / vnorm_sq;
            for i in k..m {
                let delta = f * v[i - k];
                q[(c, i)] = (q[(c, i)].conj() - delta).conj();
            }
        }
    }
    (q, r)
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps.
/// Returns (eigenvalues, V) with A = V·diag(vals)·V†; eigenvalues are not
/// sorted beyond the sweep's natural order.
pub fn hermitian_eig(a: &ComplexMatrix) -> (Vec<f64>, ComplexMatrix) {
    assert!(a.is_square(), "hermitian_eig needs a square matrix");
    let n = a.rows();
    let mut h = a.clone();
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm().max(1e-300);
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += h[(p, q)].norm_sqr();
            }
        }
        if off.sqrt() < 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = h[(p, q)];
                if apq.norm() < 1e-18 * scale {
                    continue;
                }
                // Unitary 2x2 rotation annihilating h[(p,q)].
                let app = h[(p, p)].re;
                let aqq = h[(q, q)].re;
                let abs = apq.norm();
                let phase = apq / abs;
                let tau = (aqq - app) / (2.0 * abs);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Columns p, q of H and V are mixed by
                //   [c, s·phase; -s·conj(phase), c]
                for i in 0..n {
                    let hip = h[(i, p)];
                    let hiq = h[(i, q)];
                    h[(i, p)] = c * hip - (s * phase.conj()) * hiq;
                    h[(i, q)] = (s * phase) * hip + c * hiq;
                }
                for i in 0..n {
                    let hpi = h[(p, i)];
                    let hqi = h[(q, i)];
                    h[(p, i)] = c * hpi - (s * phase) * hqi;
                    h[(q, i)] = (s * phase.conj()) * hpi + c * hqi;
                }
                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = c * vip - (s * phase.conj()) * viq;
                    v[(i, q)] = (s * phase) * vip + c * viq;
                }
            }
        }
    }
    let vals = (0..n).map(|i| h[(i, i)].re).collect();
    (vals, v)
}

/// Principal logarithm of a unitary: returns skew-Hermitian L with exp(L) = u.
///
/// Diagonalizes the commuting Hermitian pair (u + u†)/2 and (u − u†)/2i,
/// refining inside degenerate eigenspaces of the first so that the common
/// eigenbasis is found even when eigenvalue pairs e^{±iθ} share a real part.
pub fn unitary_log(u: &ComplexMatrix) -> ComplexMatrix {
    assert!(u.is_square());
    let n = u.rows();
    let udag = u.adjoint();
    let h1 = u.add(&udag).scale(Complex64::new(0.5, 0.0));
    let h2 = u.sub(&udag).scale(Complex64::new(0.0, -0.5));
    let (vals, mut basis) = hermitian_eig(&h1);
    // Group eigenvalues of H1 and rediagonalize H2 inside each group.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| vals[a].partial_cmp(&vals[b]).unwrap());
    let sorted = ComplexMatrix::from_fn(n, n, |r, c| basis[(r, order[c])]);
    basis = sorted;
    let sorted_vals: Vec<f64> = order.iter().map(|&i| vals[i]).collect();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && (sorted_vals[end] - sorted_vals[start]).abs() < 1e-8 {
            end += 1;
        }
        if end - start > 1 {
            // Restrict H2 to the group span and diagonalize.
            let k = end - start;
            let cols = ComplexMatrix::from_fn(n, k, |r, c| basis[(r, start + c)]);
            let small = cols.adjoint().mul(&h2.mul(&cols));
            let (_, w) = hermitian_eig(&small);
            let rotated = cols.mul(&w);
            for r in 0..n {
                for c in 0..k {
                    basis[(r, start + c)] = rotated[(r, c)];
                }
            }
        }
        start = end;
    }
    // Eigenvalues of u from the diagonal of V†uV; angles give the log.
    let d = basis.adjoint().mul(&u.mul(&basis));
    let mut log_diag = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        let z = d[(i, i)];
        log_diag[(i, i)] = Complex64::new(0.0, z.im.atan2(z.re));
    }
    basis.mul(&log_diag).mul(&basis.adjoint())
}

/// Matrix exponential by scaling and squaring with a Taylor expansion.
pub fn expm(a: &ComplexMatrix) -> ComplexMatrix {
    assert!(a.is_square());
    let n = a.rows();
    let norm = a.frobenius_norm();
    let s = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = a.scale(Complex64::new(1.0 / (1u64 << s) as f64, 0.0));
    let mut result = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    for k in 1..=24 {
        term = term.mul(&scaled).scale(Complex64::new(1.0 / k as f64, 0.0));
        result = result.add(&term);
        if term.frobenius_norm() < 1e-18 {
            break;
        }
    }
    for _ in 0..s {
        result = result.mul(&result);
    }
    result
}
