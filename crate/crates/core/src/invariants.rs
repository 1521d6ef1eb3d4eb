//! Half-signature, Pfaffian-sign and graded indices, and symmetry checks.

use std::fmt;

use rayon::prelude::*;

use crate::clifford::default_rep;
use crate::error::{Error, Result};
use crate::linalg;
use crate::localizer::{self, Pencil};
use crate::matrix::Matrix;
use crate::scalar::{Scalar, C64};
use crate::tuple::HermitianTuple;

/// Float symmetry checks pass below this violation.
const FLOAT_SYMMETRY_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexKind {
    HalfSignature,
    ArchetypalSign,
    GradedHalfSignature,
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexKind::HalfSignature => "half",
            IndexKind::ArchetypalSign => "arch",
            IndexKind::GradedHalfSignature => "graded",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IndexReport {
    pub lambda: Vec<f64>,
    pub kind: IndexKind,
    pub value: i64,
    /// Smallest |eigenvalue| of the localizer at λ.
    pub gap: f64,
}

fn point<T: Scalar>(lambda: &[f64]) -> Vec<T> {
    lambda.iter().map(|&v| T::from_f64(v)).collect()
}

fn half_signature(m: &Matrix<C64>, tol: f64) -> Result<(i64, f64)> {
    let eigs = linalg::hermitian_eigenvalues(m)?;
    let gap = eigs.iter().map(|e| e.abs()).fold(f64::INFINITY, f64::min);
    let sig = linalg::signature_of(&eigs, tol)?;
    if sig % 2 != 0 {
        return Err(Error::OddSignature(sig));
    }
    Ok((sig / 2, gap))
}

/// 1e-8·(1 + ‖L₀‖) for the standard localizer of the tuple.
pub fn default_index_tol<T: Scalar>(tuple: &HermitianTuple<T>) -> Result<f64> {
    let rep = default_rep(tuple.d())?;
    let zero = vec![T::zero(); tuple.d()];
    Ok(linalg::default_tol(&localizer::build(tuple, &rep, &zero)?.matrix))
}

/// ½ Sig(L_λ) for a triple.
pub fn index<T: Scalar>(tuple: &HermitianTuple<T>, lambda: &[f64], tol: Option<f64>) -> Result<IndexReport> {
    if tuple.d() != 3 {
        return Err(Error::Dimension(format!("index needs d=3, got d={}", tuple.d())));
    }
    let tol = match tol {
        Some(t) => t,
        None => default_index_tol(tuple)?,
    };
    let rep = default_rep(3)?;
    let l = localizer::build(tuple, &rep, &point::<T>(lambda))?;
    let (value, gap) = half_signature(&l.matrix.to_c64(), tol)?;
    Ok(IndexReport {
        lambda: lambda.to_vec(),
        kind: IndexKind::HalfSignature,
        value,
        gap,
    })
}

/// Evaluates `index` at many points concurrently; results keep input order.
pub fn index_batch<T: Scalar>(tuple: &HermitianTuple<T>, lambdas: &[Vec<f64>], tol: Option<f64>) -> Vec<Result<IndexReport>> {
    lambdas.par_iter().map(|l| index(tuple, l, tol)).collect()
}

/// Samples `per_segment` points on each segment between consecutive waypoints
/// (endpoints included once) and returns the index at each.
pub fn index_along_path<T: Scalar>(
    tuple: &HermitianTuple<T>,
    waypoints: &[Vec<f64>],
    per_segment: usize,
    tol: Option<f64>,
) -> Result<Vec<IndexReport>> {
    if waypoints.len() < 2 || per_segment == 0 {
        return Err(Error::Contract("a path needs two waypoints and at least one sample per segment".into()));
    }
    let mut pts = Vec::new();
    for w in waypoints.windows(2) {
        for s in 0..per_segment {
            let t = s as f64 / per_segment as f64;
            pts.push(w[0].iter().zip(&w[1]).map(|(a, b)| a + t * (b - a)).collect());
        }
    }
    pts.push(waypoints.last().unwrap().clone());
    index_batch(tuple, &pts, tol).into_iter().collect()
}

/// M^# = [[Dᵀ, −Bᵀ], [−Cᵀ, Aᵀ]] for M = [[A, B], [C, D]].
pub fn dual<T: Scalar>(m: &Matrix<T>) -> Result<Matrix<T>> {
    let side = m.ensure_square()?;
    if side % 2 == 1 {
        return Err(Error::OddSide(side));
    }
    let h = side / 2;
    let a = m.block(0, 0, h, h);
    let b = m.block(0, h, h, h);
    let c = m.block(h, 0, h, h);
    let d = m.block(h, h, h, h);
    Ok(Matrix::from_blocks(
        &d.transpose(),
        &(-&b.transpose()),
        &(-&c.transpose()),
        &a.transpose(),
    ))
}

fn violation_passes<T: Scalar>(diff: &Matrix<T>) -> (bool, f64) {
    let v = diff.max_abs();
    if T::EXACT {
        (diff.is_zero(), v)
    } else {
        (v <= FLOAT_SYMMETRY_TOL, v)
    }
}

pub fn is_self_dual<T: Scalar>(m: &Matrix<T>) -> bool {
    match dual(m) {
        Ok(d) => violation_passes(&(m - &d)).0,
        Err(_) => false,
    }
}

/// Q = [[I_n, −iZ], [iZ, I_n]] with Z = [[0, I_h], [−I_h, 0]] and h = n/2; Q has side 2n.
pub fn quaternion_q<T: Scalar>(n: usize) -> Result<Matrix<T>> {
    if n % 2 == 1 {
        return Err(Error::OddSide(n));
    }
    let h = n / 2;
    let id = Matrix::<T>::identity(h);
    let zero = Matrix::<T>::zeros(h, h);
    let z = Matrix::from_blocks(&zero, &id, &(-&id), &zero);
    let iz = z.scale(&T::imag_unit());
    let big = Matrix::<T>::identity(n);
    Ok(Matrix::from_blocks(&big, &(-&iz), &iz, &big))
}

fn require_self_dual<T: Scalar>(tuple: &HermitianTuple<T>) -> Result<()> {
    if tuple.d() != 3 {
        return Err(Error::Dimension(format!("archetypal polynomial needs d=3, got d={}", tuple.d())));
    }
    for (j, m) in tuple.matrices().iter().enumerate() {
        let d = dual(m).map_err(|_| Error::Symmetry {
            matrix: j + 1,
            flag: "self-dual".into(),
            violation: f64::INFINITY,
        })?;
        let (ok, violation) = violation_passes(&(m - &d));
        if !ok {
            return Err(Error::Symmetry {
                matrix: j + 1,
                flag: "self-dual".into(),
                violation,
            });
        }
    }
    Ok(())
}

/// λ ↦ ½ Q* L_λ Q, skew-symmetric for self-dual Hermitian triples.
pub fn archetypal_pencil<T: Scalar>(tuple: &HermitianTuple<T>) -> Result<Pencil<T>> {
    require_self_dual(tuple)?;
    let rep = default_rep(3)?;
    let q = quaternion_q::<T>(tuple.n())?;
    let qa = q.adjoint();
    let half = T::from_ratio(1, 2);
    Ok(localizer::pencil(tuple, &rep)?.transform(|m| (&(&qa * m) * &q).scale(&half)))
}

/// Pf(½ Q* L_λ Q) for a self-dual Hermitian triple.
pub fn archetypal<T: Scalar>(tuple: &HermitianTuple<T>, lambda: &[T]) -> Result<T> {
    tuple.check_point(lambda)?;
    if lambda.iter().any(|l| !l.im_part().is_zero()) {
        return Err(Error::Contract("λ must be real".into()));
    }
    linalg::pfaffian(&archetypal_pencil(tuple)?.at(lambda))
}

/// sign(arch) as a ℤ₂ index; values inside the gap tolerance are on the spectrum.
pub fn archetypal_sign<T: Scalar>(tuple: &HermitianTuple<T>, lambda: &[f64], tol: Option<f64>) -> Result<IndexReport> {
    let tol = match tol {
        Some(t) => t,
        None => default_index_tol(tuple)?,
    };
    let pt = point::<T>(lambda);
    let value = archetypal(tuple, &pt)?;
    let rep = default_rep(3)?;
    let l = localizer::build(tuple, &rep, &pt)?.matrix;
    let gap = linalg::smallest_eigen_magnitude(&l.to_c64())?;
    if gap <= tol {
        return Err(Error::SingularAtTolerance { gap, tol });
    }
    let v = value.to_c64().re;
    Ok(IndexReport {
        lambda: lambda.to_vec(),
        kind: IndexKind::ArchetypalSign,
        value: if v > 0.0 { 1 } else { -1 },
        gap,
    })
}

/// diag(1,…,1,−1,…,−1) with n/2 of each sign.
pub fn default_grading<T: Scalar>(n: usize) -> Result<Matrix<T>> {
    if n % 2 == 1 {
        return Err(Error::OddSide(n));
    }
    Ok(Matrix::diag(
        &(0..n).map(|k| if k < n / 2 { T::one() } else { -T::one() }).collect::<Vec<_>>(),
    ))
}

fn grading_violation<T: Scalar>(m: &Matrix<T>, gamma: &Matrix<T>, odd: bool) -> (bool, f64) {
    let mg = m * gamma;
    let gm = gamma * m;
    violation_passes(&if odd { &mg + &gm } else { &mg - &gm })
}

/// ½ Sig(i L̃_λ (Γ ⊗ I₂)) for X₁, X₂, X₃ even and X₄ odd, on the hyperplane λ₄ = 0.
pub fn graded_index<T: Scalar>(
    tuple: &HermitianTuple<T>,
    lambda: &[f64],
    gamma: &Matrix<T>,
    tol: Option<f64>,
) -> Result<IndexReport> {
    if tuple.d() != 4 {
        return Err(Error::Dimension(format!("graded index needs d=4, got d={}", tuple.d())));
    }
    tuple.check_point(&point::<T>(lambda))?;
    if gamma.rows() != tuple.n() || gamma.cols() != tuple.n() {
        return Err(Error::Dimension(format!("grading is {}x{}, tuple has n={}", gamma.rows(), gamma.cols(), tuple.n())));
    }
    for (j, m) in tuple.matrices().iter().enumerate() {
        let odd = j == 3;
        let (ok, violation) = grading_violation(m, gamma, odd);
        if !ok {
            return Err(Error::Symmetry {
                matrix: j + 1,
                flag: if odd { "odd" } else { "even" }.into(),
                violation,
            });
        }
    }
    if lambda[3] != 0.0 {
        return Err(Error::Symmetry {
            matrix: 4,
            flag: "lambda4 = 0".into(),
            violation: lambda[3].abs(),
        });
    }
    let reduced = localizer::build_reduced(tuple, &point::<T>(lambda))?;
    let graded = (&reduced * &gamma.kron(&Matrix::identity(2))).scale(&T::imag_unit());
    if !graded.is_hermitian() {
        return Err(Error::Symmetry {
            matrix: 0,
            flag: "hermitian graded localizer".into(),
            violation: graded.hermitian_violation(),
        });
    }
    let tol = match tol {
        Some(t) => t,
        None => {
            let zero = vec![T::zero(); 4];
            linalg::default_tol(&localizer::build_reduced(tuple, &zero)?)
        }
    };
    let (value, gap) = half_signature(&graded.to_c64(), tol)?;
    Ok(IndexReport {
        lambda: lambda.to_vec(),
        kind: IndexKind::GradedHalfSignature,
        value,
        gap,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryFlag {
    Symmetric,
    AntiSymmetric,
    SelfDual,
    Even,
    Odd,
}

impl fmt::Display for SymmetryFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryFlag::Symmetric => "symmetric",
            SymmetryFlag::AntiSymmetric => "anti-symmetric",
            SymmetryFlag::SelfDual => "self-dual",
            SymmetryFlag::Even => "even",
            SymmetryFlag::Odd => "odd",
        })
    }
}

/// Flags asserted for each matrix, plus the grading used by `Even`/`Odd`.
#[derive(Clone, Debug)]
pub struct SymmetryProfile<T> {
    pub flags: Vec<Vec<SymmetryFlag>>,
    pub grading: Option<Matrix<T>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymmetryCheck {
    /// 1-based matrix number.
    pub matrix: usize,
    pub flag: SymmetryFlag,
    pub passed: bool,
    /// Max entrywise violation; infinite when the shape rules the flag out.
    pub violation: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymmetryReport {
    pub checks: Vec<SymmetryCheck>,
}

impl SymmetryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&SymmetryCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

pub fn validate_symmetry<T: Scalar>(tuple: &HermitianTuple<T>, profile: &SymmetryProfile<T>) -> SymmetryReport {
    let mut checks = Vec::new();
    for (j, flags) in profile.flags.iter().enumerate() {
        let Some(m) = tuple.matrices().get(j) else {
            for &flag in flags {
                checks.push(SymmetryCheck { matrix: j + 1, flag, passed: false, violation: f64::INFINITY });
            }
            continue;
        };
        for &flag in flags {
            let (passed, violation) = match flag {
                SymmetryFlag::Symmetric => violation_passes(&(m - &m.transpose())),
                SymmetryFlag::AntiSymmetric => violation_passes(&(m + &m.transpose())),
                SymmetryFlag::SelfDual => match dual(m) {
                    Ok(d) => violation_passes(&(m - &d)),
                    Err(_) => (false, f64::INFINITY),
                },
                SymmetryFlag::Even | SymmetryFlag::Odd => match &profile.grading {
                    Some(g) if g.rows() == m.rows() && g.cols() == m.cols() => {
                        grading_violation(m, g, flag == SymmetryFlag::Odd)
                    }
                    _ => (false, f64::INFINITY),
                },
            };
            checks.push(SymmetryCheck { matrix: j + 1, flag, passed, violation });
        }
    }
    SymmetryReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::scalar::GaussianRational as Q;

    #[test]
    fn pauli_index_values() {
        let t = gallery::pauli();
        assert_eq!(index(&t, &[0.0, 0.0, 0.0], None).unwrap().value, 1);
        assert_eq!(index(&t, &[0.0, 0.0, 5.0], None).unwrap().value, 0);
        assert_eq!(index(&t.to_float(), &[0.1, -0.2, 0.3], None).unwrap().value, 1);
        assert!(matches!(
            index(&t, &[1.0, 0.0, 0.0], None),
            Err(Error::SingularAtTolerance { .. })
        ));
    }

    #[test]
    fn lemniscate_lobes() {
        let t = gallery::lemniscate();
        for y in [0.7, -0.7] {
            assert_eq!(index(&t, &[0.0, y, 0.0], None).unwrap().value, 1);
        }
    }

    #[test]
    fn dual_examples() {
        let id = Matrix::<Q>::identity(4);
        assert_eq!(dual(&id).unwrap(), id);
        let m = Matrix::<Q>::from_i64_rows(&[&[0, 1], &[0, 0]]);
        assert_eq!(dual(&m).unwrap(), Matrix::from_i64_rows(&[&[0, -1], &[0, 0]]));
        assert!(dual(&Matrix::<Q>::identity(3)).is_err());
        for m in gallery::null_plot().matrices() {
            assert!(is_self_dual(m));
        }
    }

    #[test]
    fn archetypal_on_null_plot() {
        let t = gallery::null_plot();
        let zero = vec![Q::zero(); 3];
        let a = archetypal(&t, &zero).unwrap();
        assert!(a.is_real());
        assert_eq!(a.clone() * &a, Q::from_i64(9));
        let far = archetypal_sign(&t, &[0.0, 0.0, 40.0], None).unwrap();
        assert_eq!(far.value, 1);
        assert!(archetypal(&gallery::pauli(), &zero).is_err());
    }

    #[test]
    fn graded_even_odd() {
        let t = gallery::even_odd(Q::zero());
        let g = gallery::even_odd_grading();
        assert_eq!(graded_index(&t, &[0.0; 4], &g, None).unwrap().value, -1);
        assert_eq!(graded_index(&t, &[5.0, 0.0, 0.0, 0.0], &g, None).unwrap().value, 0);
        assert!(matches!(
            graded_index(&t, &[0.0, 0.0, 0.0, 0.5], &g, None),
            Err(Error::Symmetry { .. })
        ));
        let swapped = HermitianTuple::new(vec![
            t.matrix(3).clone(),
            t.matrix(1).clone(),
            t.matrix(2).clone(),
            t.matrix(0).clone(),
        ])
        .unwrap();
        assert!(matches!(graded_index(&swapped, &[0.0; 4], &g, None), Err(Error::Symmetry { matrix: 1, .. })));
    }

    #[test]
    fn symmetry_profiles() {
        let quad = gallery::torus_quadruple(5);
        use SymmetryFlag::*;
        let profile = SymmetryProfile {
            flags: vec![vec![Symmetric], vec![AntiSymmetric], vec![Symmetric], vec![Symmetric]],
            grading: None,
        };
        assert!(validate_symmetry(&quad, &profile).passed());
        let sd = SymmetryProfile::<Q> { flags: vec![vec![SelfDual]; 3], grading: None };
        assert!(validate_symmetry(&gallery::null_plot(), &sd).passed());
        let pauli = validate_symmetry(&gallery::pauli(), &sd);
        assert!(!pauli.passed());
        assert_eq!(pauli.first_failure().unwrap().matrix, 1);
        let odd = HermitianTuple::new(vec![Matrix::<Q>::identity(3)]).unwrap();
        let one = SymmetryProfile::<Q> { flags: vec![vec![SelfDual]], grading: None };
        assert!(validate_symmetry(&odd, &one).checks[0].violation.is_infinite());
    }

    #[test]
    fn path_sampling_keeps_index() {
        let t = gallery::pauli();
        let path = vec![vec![0.0, 0.0, 0.0], vec![0.3, 0.2, -0.1], vec![-0.4, 0.1, 0.2]];
        let reports = index_along_path(&t, &path, 64, None).unwrap();
        assert_eq!(reports.len(), 129);
        assert!(reports.iter().all(|r| r.value == 1));
    }
}
