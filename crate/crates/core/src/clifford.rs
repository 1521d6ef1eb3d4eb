//! Gamma matrices satisfying the Clifford relations.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{GaussianRational as Q, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct GammaRep {
    gammas: Vec<Matrix<Q>>,
    split: Option<Vec<Matrix<Q>>>,
}

pub fn sigma_x() -> Matrix<Q> {
    Matrix::from_i64_rows(&[&[0, 1], &[1, 0]])
}

pub fn sigma_y() -> Matrix<Q> {
    let i = Q::imag_unit();
    Matrix::from_rows(vec![vec![Q::zero(), -i.clone()], vec![i, Q::zero()]]).unwrap()
}

pub fn sigma_z() -> Matrix<Q> {
    Matrix::from_i64_rows(&[&[1, 0], &[0, -1]])
}

/// γ̃ blocks of the four-gamma representation.
pub fn four_gamma_blocks() -> Vec<Matrix<Q>> {
    let i = Q::imag_unit();
    vec![
        sigma_x().scale(&i),
        sigma_y().scale(&-i.clone()),
        sigma_z().scale(&i),
        Matrix::identity(2),
    ]
}

impl GammaRep {
    /// Wraps arbitrary square matrices of a common size; see [`GammaRep::validate`].
    pub fn new(gammas: Vec<Matrix<Q>>) -> Result<Self> {
        let g = gammas.first().map(Matrix::rows).unwrap_or(0);
        if gammas.is_empty() || gammas.iter().any(|m| m.rows() != g || m.cols() != g) {
            return Err(Error::Dimension("gammas must be non-empty and share one square size".into()));
        }
        Ok(Self { gammas, split: None })
    }

    /// γ_j = [[0, γ̃_j], [γ̃_j*, 0]].
    pub fn from_split(blocks: Vec<Matrix<Q>>) -> Result<Self> {
        let h = blocks.first().map(Matrix::rows).unwrap_or(0);
        if blocks.is_empty() || blocks.iter().any(|b| b.rows() != h || b.cols() != h) {
            return Err(Error::Dimension("split blocks must share one square size".into()));
        }
        let z = Matrix::zeros(h, h);
        let gammas = blocks
            .iter()
            .map(|b| Matrix::from_blocks(&z, b, &b.adjoint(), &z))
            .collect();
        Ok(Self {
            gammas,
            split: Some(blocks),
        })
    }

    pub fn d(&self) -> usize {
        self.gammas.len()
    }

    pub fn g(&self) -> usize {
        self.gammas[0].rows()
    }

    pub fn gammas(&self) -> &[Matrix<Q>] {
        &self.gammas
    }

    pub fn off_diagonal_split(&self) -> Option<&[Matrix<Q>]> {
        self.split.as_deref()
    }

    pub fn gammas_as<T: Scalar>(&self) -> Vec<Matrix<T>> {
        self.gammas.iter().map(|m| m.map(T::from_exact)).collect()
    }

    pub fn validate(&self) -> CliffordReport {
        validate_gammas(&self.gammas)
    }

    /// U* γ_j U for a unitary U; the result is an equivalent representation.
    pub fn conjugated(&self, u: &Matrix<Q>) -> Self {
        let ua = u.adjoint();
        Self {
            gammas: self.gammas.iter().map(|m| &(&ua * m) * u).collect(),
            split: None,
        }
    }
}

/// The fixed representations for d = 1..4.
pub fn paper_rep(d: usize) -> Result<GammaRep> {
    match d {
        1 => GammaRep::new(vec![Matrix::identity(1)]),
        2 => GammaRep::new(vec![sigma_x(), sigma_y()]),
        3 => GammaRep::new(vec![sigma_x(), sigma_y(), sigma_z()]),
        4 => GammaRep::from_split(four_gamma_blocks()),
        _ => Err(Error::Contract(format!(
            "no fixed representation for d={d}; use generated_rep"
        ))),
    }
}

/// Tensor-product (Jordan–Wigner) representation of size 2^⌊d/2⌋.
pub fn generated_rep(d: usize) -> Result<GammaRep> {
    if d == 0 {
        return Err(Error::Contract("d must be at least 1".into()));
    }
    let m = d / 2;
    let chain = |factors: Vec<Matrix<Q>>| {
        factors
            .into_iter()
            .fold(Matrix::<Q>::identity(1), |acc, f| acc.kron(&f))
    };
    let mut gammas = Vec::with_capacity(d);
    for k in 0..m {
        for p in [sigma_x(), sigma_y()] {
            let mut f = vec![sigma_z(); k];
            f.push(p);
            f.extend(std::iter::repeat_n(Matrix::identity(2), m - k - 1));
            gammas.push(chain(f));
        }
    }
    if d % 2 == 1 {
        gammas.push(chain(vec![sigma_z(); m]));
    }
    GammaRep::new(gammas)
}

/// `paper_rep` where available, `generated_rep` otherwise.
pub fn default_rep(d: usize) -> Result<GammaRep> {
    if d <= 4 {
        paper_rep(d)
    } else {
        generated_rep(d)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Relation {
    Hermitian(usize),
    Involution(usize),
    Anticommute(usize, usize),
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Hermitian(j) => write!(f, "gamma{j} Hermitian"),
            Relation::Involution(j) => write!(f, "gamma{j}^2 = I"),
            Relation::Anticommute(j, k) => write!(f, "gamma{j} gamma{k} = -gamma{k} gamma{j}"),
        }
    }
}

/// Relations that failed, with 1-based indices and max entry violation.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CliffordReport {
    pub failures: Vec<(Relation, f64)>,
}

impl CliffordReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn validate_gammas<T: Scalar>(gammas: &[Matrix<T>]) -> CliffordReport {
    let mut report = CliffordReport::default();
    let violation = |m: &Matrix<T>| if m.is_zero() { 0.0 } else { m.max_abs().max(f64::MIN_POSITIVE) };
    for (j, a) in gammas.iter().enumerate() {
        let herm = a - &a.adjoint();
        if !herm.is_zero() {
            report.failures.push((Relation::Hermitian(j + 1), violation(&herm)));
        }
        let sq = &(a * a) - &Matrix::identity(a.rows());
        if !sq.is_zero() {
            report.failures.push((Relation::Involution(j + 1), violation(&sq)));
        }
        for (k, b) in gammas.iter().enumerate().skip(j + 1) {
            let anti = &(a * b) + &(b * a);
            if !anti.is_zero() {
                report
                    .failures
                    .push((Relation::Anticommute(j + 1, k + 1), violation(&anti)));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[(i64, i64)]]) -> Matrix<Q> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(a, b)| Q::from_ints(a, b)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn four_gammas_entry_for_entry() {
        let rep = paper_rep(4).unwrap();
        let o = (0, 0);
        let g1 = m(&[&[o, o, o, (0, 1)], &[o, o, (0, 1), o], &[o, (0, -1), o, o], &[(0, -1), o, o, o]]);
        let g2 = m(&[&[o, o, o, (-1, 0)], &[o, o, (1, 0), o], &[o, (1, 0), o, o], &[(-1, 0), o, o, o]]);
        let g3 = m(&[&[o, o, (0, 1), o], &[o, o, o, (0, -1)], &[(0, -1), o, o, o], &[o, (0, 1), o, o]]);
        let g4 = m(&[&[o, o, (1, 0), o], &[o, o, o, (1, 0)], &[(1, 0), o, o, o], &[o, (1, 0), o, o]]);
        assert_eq!(rep.gammas(), &[g1, g2, g3, g4.clone()]);
        assert_eq!(g4, Matrix::identity(2).kron(&sigma_x()));
        assert!(rep.validate().passed());
    }

    #[test]
    fn small_paper_reps() {
        assert_eq!(paper_rep(1).unwrap().gammas(), &[Matrix::<Q>::identity(1)]);
        assert_eq!(paper_rep(3).unwrap().gammas(), &[sigma_x(), sigma_y(), sigma_z()]);
        assert!(paper_rep(3).unwrap().validate().passed());
        assert!(paper_rep(5).is_err());
    }

    #[test]
    fn generated_sizes_and_relations() {
        for d in 1..=7 {
            let rep = generated_rep(d).unwrap();
            assert_eq!(rep.d(), d);
            assert_eq!(rep.g(), 1 << (d / 2));
            assert!(rep.validate().passed(), "d={d}");
        }
        assert_eq!(generated_rep(6).unwrap().g(), 8);
    }

    #[test]
    fn repeated_matrix_fails_anticommutation() {
        let r = validate_gammas(&[sigma_x(), sigma_x()]);
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.failures[0].0, Relation::Anticommute(1, 2));
        assert_eq!(r.failures[0].1, 2.0);
    }
}
