//! Small dense linear-algebra kernel shared by every other module.
//!
//! Spectral quantities of symmetric matrices are computed with a cyclic
//! Jacobi sweep (on `MᵀM` for singular values), which is simple and more
//! than accurate enough at the matrix sizes this crate works with
//! (n below a few dozen). The discrete Lyapunov equation is solved exactly
//! through its Kronecker vectorization, and the discrete algebraic Riccati
//! equation by fixed-point iteration of the Riccati recursion.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Dense dynamically-sized matrix used throughout the crate.
pub type Mat = DMatrix<f64>;
/// Dense dynamically-sized column vector used throughout the crate.
pub type Vector = DVector<f64>;

/// Tolerances for the numerical kernel. The defaults are fixed constants
/// used by the convenience wrappers; pass a custom record to the `_with`
/// variants to override them.
#[derive(Debug, Clone)]
pub struct NumericsSettings {
    /// Jacobi sweep terminates when the off-diagonal Frobenius norm drops
    /// below this factor times the matrix Frobenius norm.
    pub jacobi_tol: f64,
    /// Maximum number of full Jacobi sweeps.
    pub jacobi_sweep_cap: usize,
    /// Absolute symmetry tolerance for `sym_eig_extremes`.
    pub symmetry_tol: f64,
    /// Residual Frobenius norm accepted from the Lyapunov solve.
    pub dlyap_residual_tol: f64,
    /// Successive Frobenius change at which the Riccati recursion stops.
    pub dare_tol: f64,
    /// Iteration cap for the Riccati recursion.
    pub dare_iter_cap: usize,
}

impl Default for NumericsSettings {
    fn default() -> Self {
        NumericsSettings {
            jacobi_tol: 1e-15,
            jacobi_sweep_cap: 64,
            symmetry_tol: 1e-12,
            dlyap_residual_tol: 1e-9,
            dare_tol: 1e-11,
            dare_iter_cap: 100_000,
        }
    }
}

/// Checks that every entry of `m` is finite.
pub fn ensure_finite(m: &Mat, name: &str) -> Result<()> {
    if m.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::invalid(format!("{name} contains non-finite entries")))
    }
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi, ascending order.
///
/// The caller is responsible for symmetry; the routine reads both
/// triangles through the usual rotation updates, so feed it `(M + Mᵀ)/2`
/// when symmetry only holds to rounding.
fn jacobi_eigenvalues(m: &Mat, settings: &NumericsSettings) -> Vec<f64> {
    let n = m.nrows();
    if n == 1 {
        return vec![m[(0, 0)]];
    }
    let mut a = m.clone();
    let scale = a.norm().max(f64::MIN_POSITIVE);
    for _ in 0..settings.jacobi_sweep_cap {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[(p, q)] * a[(p, q)];
            }
        }
        if (2.0 * off).sqrt() <= settings.jacobi_tol * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eigs
}

/// Largest singular value of `m` (the matrix 2-norm).
pub fn spectral_norm(m: &Mat) -> Result<f64> {
    spectral_norm_with(m, &NumericsSettings::default())
}

pub fn spectral_norm_with(m: &Mat, settings: &NumericsSettings) -> Result<f64> {
    ensure_finite(m, "matrix")?;
    if m.is_empty() {
        return Err(Error::invalid("matrix must be non-empty"));
    }
    // Work on the smaller Gram matrix.
    let gram = if m.nrows() <= m.ncols() {
        m * m.transpose()
    } else {
        m.transpose() * m
    };
    let eigs = jacobi_eigenvalues(&gram, settings);
    let top = eigs.last().copied().unwrap_or(0.0).max(0.0);
    Ok(top.sqrt())
}

/// Spectral radius of a square matrix: the largest eigenvalue modulus.
pub fn spectral_radius(m: &Mat) -> Result<f64> {
    ensure_finite(m, "matrix")?;
    if m.nrows() != m.ncols() || m.is_empty() {
        return Err(Error::invalid(format!(
            "spectral radius needs a non-empty square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    let eigs = m.clone().complex_eigenvalues();
    Ok(eigs.iter().map(|z| z.norm()).fold(0.0, f64::max))
}

/// Extreme eigenvalues of a symmetric positive definite matrix.
#[derive(Debug, Clone, Copy)]
pub struct EigExtremes {
    pub sigma_min: f64,
    pub sigma_max: f64,
    /// Condition-style ratio `sigma_max / sigma_min`.
    pub ratio: f64,
}

/// Smallest/largest eigenvalue and their ratio for symmetric `M ≻ 0`.
pub fn sym_eig_extremes(m: &Mat) -> Result<EigExtremes> {
    sym_eig_extremes_with(m, &NumericsSettings::default())
}

pub fn sym_eig_extremes_with(m: &Mat, settings: &NumericsSettings) -> Result<EigExtremes> {
    ensure_finite(m, "matrix")?;
    if m.nrows() != m.ncols() || m.is_empty() {
        return Err(Error::invalid("eigenvalue extremes need a square matrix"));
    }
    let scale = m.amax().max(1.0);
    let asym = (m - m.transpose()).amax();
    if asym > settings.symmetry_tol * scale {
        return Err(Error::NotPositiveDefinite(format!(
            "asymmetry {asym:.3e} exceeds tolerance"
        )));
    }
    let sym = (m + m.transpose()) * 0.5;
    let eigs = jacobi_eigenvalues(&sym, settings);
    let sigma_min = eigs[0];
    let sigma_max = *eigs.last().unwrap();
    if sigma_min <= 0.0 {
        return Err(Error::NotPositiveDefinite(format!(
            "smallest eigenvalue {sigma_min:.3e} is not positive"
        )));
    }
    Ok(EigExtremes {
        sigma_min,
        sigma_max,
        ratio: sigma_max / sigma_min,
    })
}

/// Solves `P − A_clᵀ P A_cl = I` for the symmetric `P ≻ 0`.
///
/// Uses the Kronecker vectorization `(I − A_clᵀ ⊗ A_clᵀ) vec(P) = vec(I)`
/// and an LU solve, which is exact to rounding at these sizes.
pub fn solve_dlyap(a_cl: &Mat) -> Result<Mat> {
    solve_dlyap_with(a_cl, &NumericsSettings::default())
}

pub fn solve_dlyap_with(a_cl: &Mat, settings: &NumericsSettings) -> Result<Mat> {
    ensure_finite(a_cl, "A_cl")?;
    let n = a_cl.nrows();
    if n != a_cl.ncols() || n == 0 {
        return Err(Error::invalid("Lyapunov solve needs a square matrix"));
    }
    let rho = spectral_radius(a_cl)?;
    if rho >= 1.0 {
        return Err(Error::Unstable { rho });
    }
    let at = a_cl.transpose();
    let kron = at.kronecker(&at);
    let lhs = Mat::identity(n * n, n * n) - kron;
    let rhs = Vector::from_vec(Mat::identity(n, n).as_slice().to_vec());
    let sol = lhs
        .lu()
        .solve(&rhs)
        .ok_or_else(|| Error::invalid("singular Lyapunov operator"))?;
    let p = Mat::from_column_slice(n, n, sol.as_slice());
    let p = (&p + p.transpose()) * 0.5;
    let residual = (&p - at * &p * a_cl - Mat::identity(n, n)).norm();
    if residual > settings.dlyap_residual_tol {
        return Err(Error::invalid(format!(
            "Lyapunov residual {residual:.3e} exceeds tolerance"
        )));
    }
    Ok(p)
}

/// Stabilizing solution of the discrete algebraic Riccati equation plus
/// the associated feedback gain.
#[derive(Debug, Clone)]
pub struct DareSolution {
    /// Stabilizing cost-to-go matrix.
    pub p: Mat,
    /// Feedback gain with `u = K x` and `ρ(A + BK) < 1`.
    pub k: Mat,
    pub iterations: usize,
}

/// Fixed-point Riccati recursion for `P` and `K = −(R + BᵀPB)⁻¹BᵀPA`.
pub fn solve_dare(a: &Mat, b: &Mat, q: &Mat, r: &Mat) -> Result<DareSolution> {
    solve_dare_with(a, b, q, r, &NumericsSettings::default())
}

pub fn solve_dare_with(
    a: &Mat,
    b: &Mat,
    q: &Mat,
    r: &Mat,
    settings: &NumericsSettings,
) -> Result<DareSolution> {
    ensure_finite(a, "A")?;
    ensure_finite(b, "B")?;
    ensure_finite(q, "Q")?;
    ensure_finite(r, "R")?;
    let n = a.nrows();
    let m = b.ncols();
    if a.ncols() != n || b.nrows() != n || q.nrows() != n || q.ncols() != n {
        return Err(Error::invalid("DARE dimensions are inconsistent"));
    }
    if r.nrows() != m || r.ncols() != m {
        return Err(Error::invalid("R must be m x m"));
    }

    let mut p = q.clone();
    let mut iterations = 0;
    loop {
        let btp = b.transpose() * &p;
        let gram = r + &btp * b;
        let chol = gram
            .clone()
            .cholesky()
            .ok_or_else(|| Error::NotPositiveDefinite("R + BᵀPB".into()))?;
        let gain_term = chol.solve(&(&btp * a));
        let next = q + a.transpose() * &p * a - (a.transpose() * b) * &gain_term;
        let next = (&next + next.transpose()) * 0.5;
        let diff = (&next - &p).norm();
        p = next;
        iterations += 1;
        if diff <= settings.dare_tol {
            break;
        }
        if iterations >= settings.dare_iter_cap || !p.iter().all(|v| v.is_finite()) || p.amax() > 1e100
        {
            return Err(Error::NonStabilizable { iterations });
        }
    }

    let btp = b.transpose() * &p;
    let gram = r + &btp * b;
    let chol = gram
        .cholesky()
        .ok_or_else(|| Error::NotPositiveDefinite("R + BᵀPB".into()))?;
    let k = -chol.solve(&(&btp * a));
    let rho = spectral_radius(&(a + b * &k))?;
    if rho >= 1.0 {
        return Err(Error::NonStabilizable { iterations });
    }
    Ok(DareSolution { p, k, iterations })
}
