//! The spectral localizer L_λ = Σ (X_j − λ_j) ⊗ γ_j and its relatives.

use crate::clifford::{four_gamma_blocks, GammaRep};
use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;
use crate::scalar::{Scalar, C64};
use crate::tuple::HermitianTuple;

/// Affine matrix family M(λ) = base − Σ λ_j D_j with sparse D_j.
#[derive(Clone, Debug)]
pub struct Pencil<T> {
    base: Matrix<T>,
    dirs: Vec<Vec<(usize, usize, T)>>,
}

impl<T: Scalar> Pencil<T> {
    fn new(tuple: &HermitianTuple<T>, gammas: &[Matrix<T>]) -> Self {
        let n = tuple.n();
        let g = gammas[0].rows();
        let mut base = Matrix::zeros(n * g, n * g);
        let id = Matrix::<T>::identity(n);
        let mut dirs = Vec::with_capacity(gammas.len());
        for (x, gamma) in tuple.matrices().iter().zip(gammas) {
            base = &base + &x.kron(gamma);
            let d = id.kron(gamma);
            let mut sparse = Vec::new();
            for i in 0..d.rows() {
                for j in 0..d.cols() {
                    if !d[(i, j)].is_zero() {
                        sparse.push((i, j, d[(i, j)].clone()));
                    }
                }
            }
            dirs.push(sparse);
        }
        Self { base, dirs }
    }

    /// M(λ) = base − Σ λ_j dirs_j.
    pub fn from_matrices(base: Matrix<T>, dirs: &[Matrix<T>]) -> Self {
        let dirs = dirs
            .iter()
            .map(|d| {
                let mut sparse = Vec::new();
                for i in 0..d.rows() {
                    for j in 0..d.cols() {
                        if !d[(i, j)].is_zero() {
                            sparse.push((i, j, d[(i, j)].clone()));
                        }
                    }
                }
                sparse
            })
            .collect();
        Self { base, dirs }
    }

    fn dense_dir(&self, k: usize) -> Matrix<T> {
        let n = self.size();
        let mut m = Matrix::zeros(n, n);
        for (i, j, v) in &self.dirs[k] {
            m[(*i, *j)] = v.clone();
        }
        m
    }

    /// The pencil λ ↦ f(M(λ)) for a linear map f.
    pub fn transform(&self, f: impl Fn(&Matrix<T>) -> Matrix<T>) -> Self {
        let dirs: Vec<Matrix<T>> = (0..self.nvars()).map(|k| f(&self.dense_dir(k))).collect();
        Self::from_matrices(f(&self.base), &dirs)
    }

    pub fn to_float(&self) -> Pencil<C64> {
        Pencil {
            base: self.base.to_c64(),
            dirs: self
                .dirs
                .iter()
                .map(|d| d.iter().map(|(i, j, v)| (*i, *j, v.to_c64())).collect())
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.base.rows()
    }

    pub fn nvars(&self) -> usize {
        self.dirs.len()
    }

    /// Evaluates at any (possibly complex) point.
    pub fn at(&self, lambda: &[T]) -> Matrix<T> {
        assert_eq!(lambda.len(), self.dirs.len(), "point dimension");
        let mut m = self.base.clone();
        for (l, dir) in lambda.iter().zip(&self.dirs) {
            if l.is_zero() {
                continue;
            }
            for (i, j, v) in dir {
                m[(*i, *j)] -= v.clone() * l;
            }
        }
        m
    }
}

fn check_rep<T: Scalar>(tuple: &HermitianTuple<T>, rep: &GammaRep) -> Result<()> {
    if rep.d() != tuple.d() {
        return Err(Error::Dimension(format!(
            "representation has d={}, tuple has d={}",
            rep.d(),
            tuple.d()
        )));
    }
    Ok(())
}

fn check_real<T: Scalar>(lambda: &[T]) -> Result<()> {
    if lambda.iter().any(|l| !l.im_part().is_zero()) {
        return Err(Error::Contract("λ must be real".into()));
    }
    Ok(())
}

pub fn pencil<T: Scalar>(tuple: &HermitianTuple<T>, rep: &GammaRep) -> Result<Pencil<T>> {
    check_rep(tuple, rep)?;
    Ok(Pencil::new(tuple, &rep.gammas_as::<T>()))
}

pub fn reduced_pencil<T: Scalar>(tuple: &HermitianTuple<T>) -> Result<Pencil<T>> {
    if tuple.d() != 4 {
        return Err(Error::Dimension(format!("reduced localizer needs d=4, got d={}", tuple.d())));
    }
    let blocks: Vec<Matrix<T>> = four_gamma_blocks().iter().map(|b| b.map(T::from_exact)).collect();
    Ok(Pencil::new(tuple, &blocks))
}

#[derive(Clone, Debug)]
pub struct Localizer<T> {
    pub lambda: Vec<T>,
    pub g: usize,
    pub n: usize,
    pub matrix: Matrix<T>,
}

pub fn build<T: Scalar>(tuple: &HermitianTuple<T>, rep: &GammaRep, lambda: &[T]) -> Result<Localizer<T>> {
    check_rep(tuple, rep)?;
    tuple.check_point(lambda)?;
    check_real(lambda)?;
    let matrix = pencil(tuple, rep)?.at(lambda);
    Ok(Localizer {
        lambda: lambda.to_vec(),
        g: rep.g(),
        n: tuple.n(),
        matrix,
    })
}

/// Upper-right 2n×2n block Σ_{k=1..4} (X_k − λ_k) ⊗ γ̃_k.
pub fn build_reduced<T: Scalar>(tuple: &HermitianTuple<T>, lambda: &[T]) -> Result<Matrix<T>> {
    let p = reduced_pencil(tuple)?;
    tuple.check_point(lambda)?;
    check_real(lambda)?;
    Ok(p.at(lambda))
}

/// [[0, L̃], [L̃*, 0]].
pub fn embed_reduced<T: Scalar>(reduced: &Matrix<T>) -> Matrix<T> {
    let z = Matrix::zeros(reduced.rows(), reduced.cols());
    Matrix::from_blocks(&z, reduced, &reduced.adjoint(), &z)
}

/// ‖L² − (Σ (X_j−λ_j)² ⊗ I + Σ_{j<k} [X_j, X_k] ⊗ γ_jγ_k)‖; exactly 0 on the exact path.
pub fn square_identity_residual<T: Scalar>(tuple: &HermitianTuple<T>, rep: &GammaRep, lambda: &[T]) -> Result<f64> {
    let l = build(tuple, rep, lambda)?.matrix;
    let shifted = tuple.shifted(lambda)?;
    let gammas = rep.gammas_as::<T>();
    let mut rhs = laplace(tuple, lambda)?.kron(&Matrix::identity(rep.g()));
    let xs = shifted.matrices();
    for j in 0..xs.len() {
        for k in j + 1..xs.len() {
            let c = linalg::commutator(&xs[j], &xs[k])?;
            rhs = &rhs + &c.kron(&(&gammas[j] * &gammas[k]));
        }
    }
    let diff = &(&l * &l) - &rhs;
    if diff.is_zero() {
        return Ok(0.0);
    }
    Ok(linalg::operator_norm(&diff))
}

/// Σ_j (X_j − λ_j)².
pub fn laplace<T: Scalar>(tuple: &HermitianTuple<T>, lambda: &[T]) -> Result<Matrix<T>> {
    check_real(lambda)?;
    let shifted = tuple.shifted(lambda)?;
    let n = tuple.n();
    Ok(shifted
        .matrices()
        .iter()
        .fold(Matrix::zeros(n, n), |acc, x| &acc + &(x * x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{paper_rep, sigma_x, sigma_y, sigma_z};
    use crate::scalar::{GaussianRational as Q, C64};

    fn pauli() -> HermitianTuple<Q> {
        HermitianTuple::new(vec![sigma_x(), sigma_y(), sigma_z()]).unwrap()
    }

    fn zero3() -> Vec<Q> {
        vec![Q::zero(); 3]
    }

    #[test]
    fn pauli_localizer_block_form() {
        let l = build(&pauli(), &paper_rep(3).unwrap(), &zero3()).unwrap();
        let want: Matrix<Q> = Matrix::from_i64_rows(&[&[1, 0, 0, 0], &[0, -1, 2, 0], &[0, 2, -1, 0], &[0, 0, 0, 1]]);
        assert_eq!(l.matrix, want);
        assert_eq!(linalg::determinant(&l.matrix).unwrap(), Q::from_i64(-3));
        assert!(l.matrix.is_hermitian());
    }

    #[test]
    fn one_matrix_localizer_is_shift() {
        let x: Matrix<Q> = Matrix::from_i64_rows(&[&[1, 2], &[2, 5]]);
        let t = HermitianTuple::new(vec![x.clone()]).unwrap();
        let mu = Q::ratio(1, 3);
        let l = build(&t, &paper_rep(1).unwrap(), std::slice::from_ref(&mu)).unwrap();
        assert_eq!(l.matrix, &x - &Matrix::identity(2).scale(&mu));
    }

    #[test]
    fn commuting_diagonals_singular_at_joint_eigenvalue() {
        let t = HermitianTuple::new(vec![
            Matrix::<Q>::diag(&[Q::from_i64(1), Q::from_i64(2)]),
            Matrix::diag(&[Q::from_i64(3), Q::from_i64(4)]),
        ])
        .unwrap();
        let l = build(&t, &paper_rep(2).unwrap(), &[Q::from_i64(1), Q::from_i64(3)]).unwrap();
        assert_eq!(linalg::determinant(&l.matrix).unwrap(), Q::zero());
    }

    #[test]
    fn reduced_embedding_matches_full() {
        let rep = paper_rep(4).unwrap();
        let x = |a: i64, b: i64| {
            Matrix::from_rows(vec![
                vec![Q::from_i64(a), Q::from_ints(b, 1)],
                vec![Q::from_ints(b, -1), Q::from_i64(-a)],
            ])
            .unwrap()
        };
        let t = HermitianTuple::new(vec![x(1, 0), x(0, 2), sigma_y().scale(&Q::from_i64(3)), x(2, -1)]).unwrap();
        let lam = vec![Q::ratio(1, 2), Q::from_i64(-1), Q::zero(), Q::ratio(2, 3)];
        let full = build(&t, &rep, &lam).unwrap().matrix;
        let red = build_reduced(&t, &lam).unwrap();
        assert_eq!(embed_reduced(&red), full);
        let only_w = HermitianTuple::new(vec![
            Matrix::zeros(2, 2),
            Matrix::zeros(2, 2),
            Matrix::zeros(2, 2),
            Matrix::identity(2),
        ])
        .unwrap();
        assert_eq!(build_reduced(&only_w, &[Q::zero(), Q::zero(), Q::zero(), Q::zero()]).unwrap(), Matrix::identity(4));
        assert!(build_reduced(&pauli(), &zero3()).is_err());
    }

    #[test]
    fn square_identity_exact_zero() {
        assert_eq!(square_identity_residual(&pauli(), &paper_rep(3).unwrap(), &zero3()).unwrap(), 0.0);
        let lam = vec![Q::ratio(1, 3), Q::from_i64(2), Q::ratio(-5, 7)];
        assert_eq!(square_identity_residual(&pauli(), &paper_rep(3).unwrap(), &lam).unwrap(), 0.0);
    }

    #[test]
    fn laplace_of_pauli_pair() {
        let t = HermitianTuple::new(vec![sigma_x(), sigma_y()]).unwrap();
        let (r, s) = (Q::ratio(3, 2), Q::from_i64(-2));
        let det = linalg::determinant(&laplace(&t, &[r.clone(), s.clone()]).unwrap()).unwrap();
        let r2 = r.clone() * &r;
        let s2 = s.clone() * &s;
        let want = Q::from_i64(4) + r2.clone() * &r2 + Q::from_i64(2) * &r2 * &s2 + s2.clone() * &s2;
        assert_eq!(det, want);
        let z = HermitianTuple::new(vec![Matrix::<C64>::zeros(2, 2)]).unwrap();
        assert!(laplace(&z, &[C64::new(0.0, 0.0)]).unwrap().is_zero());
    }

    #[test]
    fn complex_lambda_rejected() {
        assert!(build(&pauli(), &paper_rep(3).unwrap(), &[Q::imag_unit(), Q::zero(), Q::zero()]).is_err());
    }
}
