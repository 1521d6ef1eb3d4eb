//! Near-kernel vectors of the localizer and the variance bound they certify.

use rayon::prelude::*;

use crate::clifford::GammaRep;
use crate::error::{Error, Result};
use crate::linalg;
use crate::localizer::{self, Localizer};
use crate::matrix::Matrix;
use crate::scalar::{Scalar, C64};
use crate::tuple::HermitianTuple;

const UNIT_TOL: f64 = 1e-12;

fn norm(v: &[C64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// E(X)_v = ⟨Xv, v⟩ and Var(X)_v = ‖(X − E)v‖² for a unit vector v.
pub fn expectation_variance(x: &Matrix<C64>, v: &[C64]) -> Result<(f64, f64)> {
    let n = x.ensure_square()?;
    if v.len() != n {
        return Err(Error::Dimension(format!("vector has length {}, matrix side {n}", v.len())));
    }
    let nv = norm(v);
    if (nv - 1.0).abs() > UNIT_TOL {
        return Err(Error::Contract(format!("vector norm {nv} is not 1")));
    }
    let xv = x.mul_vec(v);
    let e: f64 = xv.iter().zip(v).map(|(a, b)| (a * b.conj()).re).sum();
    let var: f64 = xv.iter().zip(v).map(|(a, b)| (a - b * e).norm_sqr()).sum();
    Ok((e, var.max(0.0)))
}

/// Unit eigenvector for the eigenvalue of smallest magnitude, and that magnitude.
pub fn near_kernel<T: Scalar>(l: &Localizer<T>) -> Result<(Vec<C64>, f64)> {
    let eig = linalg::hermitian_eigen(&l.matrix.to_c64())?;
    let mut best = 0;
    for (k, e) in eig.values.iter().enumerate() {
        if e.abs() < eig.values[best].abs() {
            best = k;
        }
    }
    Ok((eig.vector(best), eig.values[best].abs()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Extracted {
    pub w: Vec<C64>,
    pub block: usize,
    /// ‖z_r‖ before normalization.
    pub block_norm: f64,
}

/// Splits z into g blocks of length n and normalizes the one of largest norm
/// (lowest index on ties).
pub fn extract_w(z: &[C64], g: usize, n: usize) -> Result<Extracted> {
    if g == 0 || z.len() != g * n {
        return Err(Error::Dimension(format!("vector of length {} is not {g}x{n}", z.len())));
    }
    let nz = norm(z);
    if (nz - 1.0).abs() > UNIT_TOL {
        return Err(Error::Contract(format!("vector norm {nz} is not 1")));
    }
    let mut block = 0;
    let mut best = -1.0;
    for b in 0..g {
        let nb = norm(&z[b * n..(b + 1) * n]);
        if nb > best {
            best = nb;
            block = b;
        }
    }
    assert!(
        best >= 1.0 / (g as f64).sqrt() - UNIT_TOL,
        "largest block norm {best} below 1/sqrt({g})"
    );
    let w = z[block * n..(block + 1) * n].iter().map(|c| c / best).collect();
    Ok(Extracted { w, block, block_norm: best })
}

#[derive(Clone, Debug, PartialEq)]
pub struct VarianceCertificate {
    pub lambda: Vec<f64>,
    /// ‖L_λ z‖ for the chosen eigenvector z.
    pub epsilon: f64,
    pub g: usize,
    pub w: Vec<C64>,
    pub block_norm: f64,
    pub expectations: Vec<f64>,
    pub variances: Vec<f64>,
    /// Σ_{j<k} ‖[X_j, X_k]‖.
    pub commutator_sum: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Σ_j Var(X_j)_w + |E(X_j)_w − λ_j|² against max(ε, ε²) + g Σ_{j<k} ‖[X_j, X_k]‖.
pub fn certificate<T: Scalar>(tuple: &HermitianTuple<T>, rep: &GammaRep, lambda: &[f64]) -> Result<VarianceCertificate> {
    let pt: Vec<T> = lambda.iter().map(|&v| T::from_f64(v)).collect();
    let l = localizer::build(tuple, rep, &pt)?;
    let (z, epsilon) = near_kernel(&l)?;
    let ext = extract_w(&z, l.g, l.n)?;
    let float = tuple.to_float();
    let mut expectations = Vec::with_capacity(tuple.d());
    let mut variances = Vec::with_capacity(tuple.d());
    let mut lhs = 0.0;
    let mut spread = 0.0;
    for (x, &lj) in float.matrices().iter().zip(lambda) {
        let (e, var) = expectation_variance(x, &ext.w)?;
        lhs += var + (e - lj) * (e - lj);
        let shifted = x - &Matrix::identity(x.rows()).scale(&C64::new(lj, 0.0));
        spread += linalg::operator_norm(&shifted).powi(2);
        expectations.push(e);
        variances.push(var);
    }
    let xs = tuple.matrices();
    let mut commutator_sum = 0.0;
    for j in 0..xs.len() {
        for k in j + 1..xs.len() {
            commutator_sum += linalg::operator_norm(&linalg::commutator(&xs[j], &xs[k])?);
        }
    }
    let rhs = epsilon.max(epsilon * epsilon) + rep.g() as f64 * commutator_sum;
    let slack = 1e-12 * (1.0 + spread);
    Ok(VarianceCertificate {
        lambda: lambda.to_vec(),
        epsilon,
        g: rep.g(),
        w: ext.w,
        block_norm: ext.block_norm,
        expectations,
        variances,
        commutator_sum,
        lhs,
        rhs,
        holds: lhs <= rhs + slack,
    })
}

/// Certificates at many points concurrently, in input order.
pub fn certificate_batch<T: Scalar>(
    tuple: &HermitianTuple<T>,
    rep: &GammaRep,
    lambdas: &[Vec<f64>],
) -> Vec<Result<VarianceCertificate>> {
    lambdas.par_iter().map(|l| certificate(tuple, rep, l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{default_rep, sigma_x};
    use crate::gallery;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn expectation_variance_basics() {
        let d = Matrix::diag(&[c(1.0), c(-1.0)]);
        assert_eq!(expectation_variance(&d, &[c(1.0), c(0.0)]).unwrap(), (1.0, 0.0));
        let (e, v) = expectation_variance(&sigma_x().to_c64(), &[c(1.0), c(0.0)]).unwrap();
        assert_eq!((e, v), (0.0, 1.0));
        assert!(expectation_variance(&d, &[c(1.0), c(1.0)]).is_err());
    }

    #[test]
    fn extract_examples() {
        let e = extract_w(&[c(1.0), c(0.0), c(0.0), c(0.0)], 2, 2).unwrap();
        assert_eq!(e.w, vec![c(1.0), c(0.0)]);
        let e = extract_w(&[c(0.0), c(0.0), c(0.6), c(0.8)], 2, 2).unwrap();
        assert_eq!(e.block, 1);
        assert!((e.w[0] - c(0.6)).norm() < 1e-15 && (e.w[1] - c(0.8)).norm() < 1e-15);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(extract_w(&[c(h), c(0.0), c(0.0), c(h)], 2, 2).unwrap().block, 0);
        assert!(extract_w(&[c(1.0)], 2, 2).is_err());
    }

    #[test]
    fn pauli_epsilon_values() {
        let t = gallery::pauli();
        let rep = default_rep(3).unwrap();
        let zero = vec![crate::scalar::GaussianRational::from_i64(0); 3];
        let (_, eps) = near_kernel(&localizer::build(&t, &rep, &zero).unwrap()).unwrap();
        assert!((eps - 1.0).abs() < 1e-12);
        let cert = certificate(&t, &rep, &[1.0, 0.0, 0.0]).unwrap();
        assert!(cert.epsilon < 1e-12);
        assert!((cert.rhs - 12.0).abs() < 1e-9);
        assert!(cert.holds);
    }

    #[test]
    fn commuting_joint_eigenvalue() {
        let t = gallery::commuting_diag();
        let rep = default_rep(3).unwrap();
        let cert = certificate(&t, &rep, &[2.0, 1.0, -1.0]).unwrap();
        assert!(cert.epsilon <= 1e-12);
        assert!(cert.lhs <= 1e-24);
        assert_eq!(cert.commutator_sum, 0.0);
        assert!(cert.holds);
    }
}
