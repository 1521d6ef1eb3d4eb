//! Dense kernels: eigen, determinant, signature, Pfaffian, norms.

use nalgebra::SymmetricEigen;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{GaussianRational, Scalar, C64};

/// Eigen-decomposition of a Hermitian matrix; `vectors` holds eigenvectors as columns.
#[derive(Clone, Debug)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: Matrix<C64>,
}

impl Eigen {
    pub fn vector(&self, k: usize) -> Vec<C64> {
        (0..self.vectors.rows()).map(|i| self.vectors[(i, k)]).collect()
    }
}

pub fn hermitian_eigen(m: &Matrix<C64>) -> Result<Eigen> {
    m.ensure_hermitian("argument")?;
    let eig = SymmetricEigen::new(m.to_nalgebra());
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let n = m.rows();
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = Matrix::from_fn(n, n, |i, j| eig.eigenvectors[(i, order[j])]);
    Ok(Eigen { values, vectors })
}

/// Eigenvalues only, ascending.
pub fn hermitian_eigenvalues(m: &Matrix<C64>) -> Result<Vec<f64>> {
    m.ensure_hermitian("argument")?;
    let mut v: Vec<f64> = m.to_nalgebra().symmetric_eigenvalues().iter().copied().collect();
    v.sort_by(f64::total_cmp);
    Ok(v)
}

/// count(e > tol) − count(e < −tol); fails if any |e| ≤ tol.
pub fn signature(m: &Matrix<C64>, tol: f64) -> Result<i64> {
    let e = hermitian_eigenvalues(m)?;
    signature_of(&e, tol)
}

pub fn signature_of(eigenvalues: &[f64], tol: f64) -> Result<i64> {
    let gap = eigenvalues.iter().map(|e| e.abs()).fold(f64::INFINITY, f64::min);
    if gap <= tol {
        return Err(Error::SingularAtTolerance { gap, tol });
    }
    let pos = eigenvalues.iter().filter(|&&e| e > tol).count() as i64;
    Ok(2 * pos - eigenvalues.len() as i64)
}

pub fn smallest_eigen_magnitude(m: &Matrix<C64>) -> Result<f64> {
    let e = hermitian_eigenvalues(m)?;
    Ok(e.iter().map(|x| x.abs()).fold(f64::INFINITY, f64::min))
}

/// Largest singular value.
pub fn operator_norm<T: Scalar>(m: &Matrix<T>) -> f64 {
    if m.rows() == 0 || m.cols() == 0 {
        return 0.0;
    }
    let a = m.to_c64().to_nalgebra();
    a.singular_values().iter().copied().fold(0.0, f64::max)
}

/// 1e-8·(1 + ‖M‖).
pub fn default_tol<T: Scalar>(m: &Matrix<T>) -> f64 {
    1e-8 * (1.0 + operator_norm(m))
}

pub fn commutator<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>> {
    a.ensure_square()?;
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::Dimension(format!(
            "commutator of {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(&(a * b) - &(b * a))
}

pub fn determinant<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    m.ensure_square()?;
    Ok(T::determinant_kernel(m))
}

/// Partial-pivoted LU.
pub fn lu_determinant(m: &Matrix<C64>) -> C64 {
    let n = m.rows();
    let mut a: Vec<C64> = m.data().to_vec();
    let mut det = C64::new(1.0, 0.0);
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| a[i * n + k].norm().total_cmp(&a[j * n + k].norm()))
            .unwrap();
        let piv = a[p * n + k];
        if piv.norm() == 0.0 {
            return C64::new(0.0, 0.0);
        }
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            det = -det;
        }
        det *= piv;
        for i in k + 1..n {
            let f = a[i * n + k] / piv;
            if f.norm() == 0.0 {
                continue;
            }
            for j in k + 1..n {
                let t = a[k * n + j];
                a[i * n + j] -= f * t;
            }
        }
    }
    det
}

trait GaussInt: Clone {
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn exact_div(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

#[derive(Clone, Debug)]
struct Small(i128, i128);

#[derive(Clone, Debug)]
struct Big(BigInt, BigInt);

impl GaussInt for Small {
    fn one() -> Self {
        Small(1, 0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0 && self.1 == 0
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        if self.1 == 0 && o.1 == 0 {
            return Some(Small(self.0.checked_mul(o.0)?, 0));
        }
        let re = self.0.checked_mul(o.0)?.checked_sub(self.1.checked_mul(o.1)?)?;
        let im = self.0.checked_mul(o.1)?.checked_add(self.1.checked_mul(o.0)?)?;
        Some(Small(re, im))
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(Small(self.0.checked_sub(o.0)?, self.1.checked_sub(o.1)?))
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        if o.1 == 0 {
            debug_assert!(self.0 % o.0 == 0 && self.1 % o.0 == 0);
            return Some(Small(self.0 / o.0, self.1 / o.0));
        }
        let den = o.0.checked_mul(o.0)?.checked_add(o.1.checked_mul(o.1)?)?;
        let num = self.mul(&Small(o.0, o.1.checked_neg()?))?;
        debug_assert!(num.0 % den == 0 && num.1 % den == 0);
        Some(Small(num.0 / den, num.1 / den))
    }
    fn neg(&self) -> Option<Self> {
        Some(Small(self.0.checked_neg()?, self.1.checked_neg()?))
    }
}

impl GaussInt for Big {
    fn one() -> Self {
        Big(BigInt::one(), BigInt::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero() && self.1.is_zero()
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        if self.1.is_zero() && o.1.is_zero() {
            return Some(Big(&self.0 * &o.0, BigInt::zero()));
        }
        Some(Big(
            &self.0 * &o.0 - &self.1 * &o.1,
            &self.0 * &o.1 + &self.1 * &o.0,
        ))
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(Big(&self.0 - &o.0, &self.1 - &o.1))
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        if o.1.is_zero() {
            return Some(Big(&self.0 / &o.0, &self.1 / &o.0));
        }
        let den = &o.0 * &o.0 + &o.1 * &o.1;
        let num = self.mul(&Big(o.0.clone(), -&o.1))?;
        Some(Big(&num.0 / &den, &num.1 / &den))
    }
    fn neg(&self) -> Option<Self> {
        Some(Big(-&self.0, -&self.1))
    }
}

/// Fraction-free elimination; `None` signals overflow of the ring.
fn bareiss<R: GaussInt>(mut a: Vec<R>, n: usize) -> Option<R> {
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n.saturating_sub(1) {
        if a[k * n + k].is_zero() {
            match (k + 1..n).find(|&i| !a[i * n + k].is_zero()) {
                Some(p) => {
                    for j in 0..n {
                        a.swap(k * n + j, p * n + j);
                    }
                    negate = !negate;
                }
                None => return Some(zero_like::<R>()),
            }
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let lead = a[i * n + k].clone();
            for j in k + 1..n {
                let t = a[i * n + j].mul(&pivot)?.sub(&lead.mul(&a[k * n + j])?)?;
                a[i * n + j] = t.exact_div(&prev)?;
            }
        }
        prev = pivot;
    }
    let d = a[n * n - 1].clone();
    if negate {
        d.neg()
    } else {
        Some(d)
    }
}

fn zero_like<R: GaussInt>() -> R {
    // 1 − 1 never overflows
    R::one().sub(&R::one()).unwrap()
}

/// Exact determinant: scale to Gaussian integers, Bareiss in i128, BigInt on overflow.
pub fn exact_determinant(m: &Matrix<GaussianRational>) -> GaussianRational {
    let n = m.rows();
    if n == 0 {
        return GaussianRational::one();
    }
    let mut lcm = BigInt::one();
    for v in m.data() {
        lcm = lcm.lcm(v.re.denom()).lcm(v.im.denom());
    }
    let scale = BigRational::from_integer(lcm.clone());
    let ints: Vec<Big> = m
        .data()
        .iter()
        .map(|v| Big((&v.re * &scale).to_integer(), (&v.im * &scale).to_integer()))
        .collect();
    let small: Option<Vec<Small>> = ints
        .iter()
        .map(|b| Some(Small(b.0.to_i128()?, b.1.to_i128()?)))
        .collect();
    let det = match small.and_then(|s| bareiss(s, n)) {
        Some(Small(re, im)) => Big(BigInt::from(re), BigInt::from(im)),
        None => bareiss(ints, n).expect("BigInt ring does not overflow"),
    };
    let denom = BigRational::from_integer(num_traits::pow(lcm, n));
    GaussianRational::new(
        BigRational::from_integer(det.0) / &denom,
        BigRational::from_integer(det.1) / &denom,
    )
}

/// max |M + Mᵀ| (exact kinds compare exactly via the returned magnitude).
pub fn skew_violation<T: Scalar>(m: &Matrix<T>) -> f64 {
    let n = m.rows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)].clone() + &m[(j, i)]).magnitude());
        }
    }
    worst
}

pub fn is_skew<T: Scalar>(m: &Matrix<T>) -> bool {
    if !m.is_square() {
        return false;
    }
    if T::EXACT {
        let n = m.rows();
        return (0..n).all(|i| (i..n).all(|j| (m[(i, j)].clone() + &m[(j, i)]).is_zero()));
    }
    skew_violation(m) <= 1e-12 * (1.0 + m.frobenius())
}

/// Pfaffian of an even skew-symmetric matrix.
///
/// Exact matrices up to side 12 use first-row expansion; everything else
/// goes through Parlett–Reid elimination with pivoting.
pub fn pfaffian<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    let n = m.ensure_square()?;
    if n % 2 == 1 {
        return Err(Error::OddSide(n));
    }
    if !is_skew(m) {
        return Err(Error::NotSkew {
            violation: skew_violation(m),
        });
    }
    if T::EXACT && n <= 12 {
        let idx: Vec<usize> = (0..n).collect();
        return Ok(pfaffian_expand(m, &idx));
    }
    Ok(pfaffian_parlett_reid(m))
}

fn pfaffian_expand<T: Scalar>(m: &Matrix<T>, idx: &[usize]) -> T {
    if idx.is_empty() {
        return T::one();
    }
    let first = idx[0];
    let mut acc = T::zero();
    for p in 1..idx.len() {
        let a = &m[(first, idx[p])];
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..]
            .iter()
            .enumerate()
            .filter(|&(q, _)| q + 1 != p)
            .map(|(_, &v)| v)
            .collect();
        let term = a.clone() * &pfaffian_expand(m, &rest);
        if p % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

pub fn pfaffian_parlett_reid<T: Scalar>(m: &Matrix<T>) -> T {
    let n = m.rows();
    let mut a = m.clone();
    let mut pf = T::one();
    let mut k = 0;
    while k + 1 < n {
        let kp = (k + 1..n)
            .max_by(|&i, &j| a[(i, k)].magnitude().total_cmp(&a[(j, k)].magnitude()))
            .unwrap();
        if kp != k + 1 {
            for j in 0..n {
                let t = a[(k + 1, j)].clone();
                a[(k + 1, j)] = a[(kp, j)].clone();
                a[(kp, j)] = t;
            }
            for i in 0..n {
                let t = a[(i, k + 1)].clone();
                a[(i, k + 1)] = a[(i, kp)].clone();
                a[(i, kp)] = t;
            }
            pf = -pf;
        }
        if a[(k + 1, k)].is_zero() {
            return T::zero();
        }
        let head = a[(k, k + 1)].clone();
        pf *= head.clone();
        if k + 2 < n {
            let tau: Vec<T> = (k + 2..n).map(|j| a[(k, j)].clone() / &head).collect();
            let col: Vec<T> = (k + 2..n).map(|i| a[(i, k + 1)].clone()).collect();
            for (ii, i) in (k + 2..n).enumerate() {
                for (jj, j) in (k + 2..n).enumerate() {
                    let upd = tau[ii].clone() * &col[jj] - col[ii].clone() * &tau[jj];
                    a[(i, j)] += upd;
                }
            }
        }
        k += 2;
    }
    pf
}

/// Sign of a real value with a dead zone; `None` inside it.
pub fn sign_with_tol(v: f64, tol: f64) -> Option<i32> {
    if v.abs() <= tol {
        None
    } else if v.is_sign_positive() {
        Some(1)
    } else {
        Some(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational as Q;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn pauli_l0() -> Matrix<C64> {
        Matrix::from_i64_rows(&[&[1, 0, 0, 0], &[0, -1, 2, 0], &[0, 2, -1, 0], &[0, 0, 0, 1]])
    }

    #[test]
    fn eigen_sorted_and_reconstructs() {
        let d = Matrix::diag(&[c(3.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)]);
        assert_eq!(hermitian_eigen(&d).unwrap().values, vec![1.0, 2.0, 3.0]);
        let e = hermitian_eigen(&pauli_l0()).unwrap();
        for (got, want) in e.values.iter().zip([-3.0, 1.0, 1.0, 1.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn eigen_rejects_non_hermitian() {
        let m = Matrix::from_i64_rows(&[&[0, 2], &[0, 0]]);
        assert!(matches!(hermitian_eigen(&m), Err(Error::NotHermitian { .. })));
        let r = Matrix::<C64>::zeros(2, 3);
        assert!(matches!(hermitian_eigen(&r), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn signature_cases() {
        assert_eq!(signature(&Matrix::diag(&[c(1.0, 0.0), c(-1.0, 0.0)]), 1e-8).unwrap(), 0);
        assert_eq!(signature(&pauli_l0(), 1e-8).unwrap(), 2);
        let s = signature(&Matrix::diag(&[c(1.0, 0.0), c(1e-12, 0.0)]), 1e-8);
        assert!(matches!(s, Err(Error::SingularAtTolerance { .. })));
        assert_eq!(smallest_eigen_magnitude(&pauli_l0()).unwrap(), 1.0);
    }

    #[test]
    fn determinants() {
        let l0: Matrix<Q> = Matrix::from_i64_rows(&[&[1, 0, 0, 0], &[0, -1, 2, 0], &[0, 2, -1, 0], &[0, 0, 0, 1]]);
        assert_eq!(determinant(&l0).unwrap(), Q::from_i64(-3));
        assert_eq!(determinant(&Matrix::<Q>::identity(4)).unwrap(), Q::one());
        let nil: Matrix<Q> = Matrix::from_i64_rows(&[&[0, 2], &[0, 0]]);
        assert_eq!(determinant(&nil).unwrap(), Q::zero());
        assert!((determinant(&pauli_l0()).unwrap() - c(-3.0, 0.0)).norm() < 1e-12);
        assert!(determinant(&Matrix::<Q>::zeros(2, 3)).is_err());
    }

    #[test]
    fn exact_determinant_overflow_falls_back() {
        // entries near 2^62 overflow i128 products immediately
        let big = 1i64 << 62;
        let m: Matrix<Q> = Matrix::from_i64_rows(&[&[big, 3, 1], &[5, big, 7], &[1, 2, big]]);
        let want = {
            let b = BigInt::from(big);
            let e = |v: i64| BigInt::from(v);
            &b * (&b * &b - e(14)) - e(3) * (e(5) * &b - e(7)) + (e(10) - &b)
        };
        assert_eq!(exact_determinant(&m), Q::real(BigRational::from_integer(want)));
    }

    #[test]
    fn gaussian_bareiss_matches_lu() {
        let i = Q::imag_unit();
        let m = Matrix::from_rows(vec![
            vec![Q::ratio(1, 2), i.clone(), Q::from_i64(3)],
            vec![-i.clone(), Q::ratio(-2, 3), Q::from_ints(1, 1)],
            vec![Q::from_i64(3), Q::from_ints(1, -1), Q::zero()],
        ])
        .unwrap();
        let exact = exact_determinant(&m).to_c64();
        let float = lu_determinant(&m.to_c64());
        assert!((exact - float).norm() < 1e-12);
        // Hermitian ⇒ real determinant
        assert_eq!(exact_determinant(&m).im, BigRational::zero());
    }

    #[test]
    fn pfaffian_small_cases() {
        let m: Matrix<Q> = Matrix::from_i64_rows(&[&[0, 7], &[-7, 0]]);
        assert_eq!(pfaffian(&m).unwrap(), Q::from_i64(7));
        let (a, b, cc, d, e, f) = (2, 3, 5, 7, 11, 13);
        let m4: Matrix<Q> = Matrix::from_i64_rows(&[
            &[0, a, b, cc],
            &[-a, 0, d, e],
            &[-b, -d, 0, f],
            &[-cc, -e, -f, 0],
        ]);
        assert_eq!(pfaffian(&m4).unwrap(), Q::from_i64(a * f - b * e + cc * d));
        assert_eq!(pfaffian_parlett_reid(&m4), Q::from_i64(a * f - b * e + cc * d));
        assert!(matches!(pfaffian(&Matrix::<Q>::zeros(3, 3)), Err(Error::OddSide(3))));
        let not_skew: Matrix<Q> = Matrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert!(matches!(pfaffian(&not_skew), Err(Error::NotSkew { .. })));
    }

    #[test]
    fn norms_and_commutators() {
        let d = Matrix::diag(&[c(1.0, 0.0), c(-3.0, 0.0)]);
        assert!((operator_norm(&d) - 3.0).abs() < 1e-12);
        assert_eq!(operator_norm(&Matrix::<C64>::zeros(3, 3)), 0.0);
        let x: Matrix<Q> = Matrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let i = Q::imag_unit();
        let y = Matrix::from_rows(vec![vec![Q::zero(), -i.clone()], vec![i.clone(), Q::zero()]]).unwrap();
        let z: Matrix<Q> = Matrix::from_i64_rows(&[&[1, 0], &[0, -1]]);
        assert!(commutator(&x, &x).unwrap().is_zero());
        assert_eq!(commutator(&x, &y).unwrap(), z.scale(&(i * &Q::from_i64(2))));
        assert!((operator_norm(&commutator(&x, &y).unwrap()) - 2.0).abs() < 1e-12);
        assert!(commutator(&x, &Matrix::<Q>::identity(3)).is_err());
    }
}
