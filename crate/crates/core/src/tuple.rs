//! Hermitian d-tuples.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{format_rational, parse_rational, GaussianRational, Scalar, C64};

#[derive(Clone, Debug, PartialEq)]
pub struct HermitianTuple<T> {
    mats: Vec<Matrix<T>>,
}

impl<T: Scalar> HermitianTuple<T> {
    /// Validates shape and Hermiticity of every matrix.
    pub fn new(mats: Vec<Matrix<T>>) -> Result<Self> {
        if mats.is_empty() {
            return Err(Error::Contract("a tuple needs at least one matrix".into()));
        }
        let n = mats[0].rows();
        for (j, m) in mats.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(Error::Dimension(format!(
                    "matrix {} is {}x{}, expected {n}x{n}",
                    j + 1,
                    m.rows(),
                    m.cols()
                )));
            }
            m.ensure_hermitian(&format!("X{}", j + 1))?;
        }
        Ok(Self { mats })
    }

    pub fn d(&self) -> usize {
        self.mats.len()
    }

    pub fn n(&self) -> usize {
        self.mats[0].rows()
    }

    pub fn matrices(&self) -> &[Matrix<T>] {
        &self.mats
    }

    pub fn matrix(&self, j: usize) -> &Matrix<T> {
        &self.mats[j]
    }

    pub fn to_float(&self) -> HermitianTuple<C64> {
        HermitianTuple {
            mats: self.mats.iter().map(Matrix::to_c64).collect(),
        }
    }

    /// (X₁ − μ₁, …, X_d − μ_d).
    pub fn shifted(&self, mu: &[T]) -> Result<Self> {
        self.check_point(mu)?;
        let id = Matrix::identity(self.n());
        Ok(Self {
            mats: self
                .mats
                .iter()
                .zip(mu)
                .map(|(x, m)| x - &id.scale(m))
                .collect(),
        })
    }

    /// Blockwise direct sum X_j ⊕ Y_j.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.d() != other.d() {
            return Err(Error::Dimension(format!("direct sum of d={} and d={}", self.d(), other.d())));
        }
        let (a, b) = (self.n(), other.n());
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(x, y)| {
                let mut m = Matrix::zeros(a + b, a + b);
                m.set_block(0, 0, x);
                m.set_block(a, a, y);
                m
            })
            .collect();
        Ok(Self { mats })
    }

    /// U* X_j U for every j.
    pub fn conjugated(&self, u: &Matrix<T>) -> Self {
        let ua = u.adjoint();
        Self {
            mats: self.mats.iter().map(|x| &(&ua * x) * u).collect(),
        }
    }

    pub fn scaled(&self, factors: &[T]) -> Result<Self> {
        self.check_point(factors)?;
        Ok(Self {
            mats: self.mats.iter().zip(factors).map(|(x, f)| x.scale(f)).collect(),
        })
    }

    pub fn check_point(&self, lambda: &[T]) -> Result<()> {
        if lambda.len() != self.d() {
            return Err(Error::Dimension(format!(
                "point has {} coordinates, tuple has d={}",
                lambda.len(),
                self.d()
            )));
        }
        Ok(())
    }
}

/// A tuple of either scalar kind, as loaded from a config.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyTuple {
    Exact(HermitianTuple<GaussianRational>),
    Float(HermitianTuple<C64>),
}

impl AnyTuple {
    pub fn d(&self) -> usize {
        match self {
            AnyTuple::Exact(t) => t.d(),
            AnyTuple::Float(t) => t.d(),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            AnyTuple::Exact(t) => t.n(),
            AnyTuple::Float(t) => t.n(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, AnyTuple::Exact(_))
    }

    pub fn to_float(&self) -> HermitianTuple<C64> {
        match self {
            AnyTuple::Exact(t) => t.to_float(),
            AnyTuple::Float(t) => t.clone(),
        }
    }
}

/// Explicit JSON form of a tuple: entries are `[re, im]` string pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TupleDoc {
    pub d: usize,
    pub n: usize,
    pub kind: String,
    pub matrices: Vec<Vec<Vec<[String; 2]>>>,
}

impl TupleDoc {
    pub fn from_tuple(t: &AnyTuple) -> Self {
        let (kind, matrices) = match t {
            AnyTuple::Exact(t) => (
                "exact",
                t.matrices()
                    .iter()
                    .map(|m| rows_of(m, |v| [format_rational(&v.re), format_rational(&v.im)]))
                    .collect(),
            ),
            AnyTuple::Float(t) => (
                "float",
                t.matrices()
                    .iter()
                    .map(|m| rows_of(m, |v| [format!("{:e}", v.re), format!("{:e}", v.im)]))
                    .collect(),
            ),
        };
        Self {
            d: t.d(),
            n: t.n(),
            kind: kind.to_string(),
            matrices,
        }
    }

    pub fn to_tuple(&self) -> Result<AnyTuple> {
        if self.matrices.len() != self.d {
            return Err(Error::Config(format!(
                "d={} but {} matrices given",
                self.d,
                self.matrices.len()
            )));
        }
        for (j, m) in self.matrices.iter().enumerate() {
            if m.len() != self.n || m.iter().any(|row| row.len() != self.n) {
                return Err(Error::Config(format!("matrix {} is not {}x{}", j + 1, self.n, self.n)));
            }
        }
        let wrap = |e: Error, j: usize, r: usize, c: usize| {
            Error::Config(format!("matrix {} entry ({},{}): {e}", j + 1, r + 1, c + 1))
        };
        match self.kind.as_str() {
            "exact" => {
                let mut mats = Vec::new();
                for (j, m) in self.matrices.iter().enumerate() {
                    let mut rows = Vec::new();
                    for (r, row) in m.iter().enumerate() {
                        let mut out = Vec::new();
                        for (c, [re, im]) in row.iter().enumerate() {
                            let re = parse_rational(re).map_err(|e| wrap(e, j, r, c))?;
                            let im = parse_rational(im).map_err(|e| wrap(e, j, r, c))?;
                            out.push(GaussianRational::new(re, im));
                        }
                        rows.push(out);
                    }
                    mats.push(Matrix::from_rows(rows)?);
                }
                Ok(AnyTuple::Exact(HermitianTuple::new(mats).map_err(config_err)?))
            }
            "float" => {
                let mut mats = Vec::new();
                for (j, m) in self.matrices.iter().enumerate() {
                    let mut rows = Vec::new();
                    for (r, row) in m.iter().enumerate() {
                        let mut out = Vec::new();
                        for (c, [re, im]) in row.iter().enumerate() {
                            let re = parse_float(re).map_err(|e| wrap(e, j, r, c))?;
                            let im = parse_float(im).map_err(|e| wrap(e, j, r, c))?;
                            out.push(C64::new(re, im));
                        }
                        rows.push(out);
                    }
                    mats.push(Matrix::from_rows(rows)?);
                }
                Ok(AnyTuple::Float(HermitianTuple::new(mats).map_err(config_err)?))
            }
            other => Err(Error::Config(format!("unknown kind '{other}' (expected exact or float)"))),
        }
    }
}

fn config_err(e: Error) -> Error {
    Error::Config(e.to_string())
}

fn rows_of<T: Scalar>(m: &Matrix<T>, f: impl Fn(&T) -> [String; 2]) -> Vec<Vec<[String; 2]>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| f(&m[(i, j)])).collect())
        .collect()
}

/// Decimal or fraction text as f64.
pub fn parse_float(s: &str) -> Result<f64> {
    if s.contains('/') {
        return Ok(GaussianRational::real(parse_rational(s)?).to_c64().re);
    }
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad number '{s}'")))?;
    if !v.is_finite() {
        return Err(Error::Parse(format!("non-finite number '{s}'")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational as Q;

    fn sx() -> Matrix<Q> {
        Matrix::from_i64_rows(&[&[0, 1], &[1, 0]])
    }

    #[test]
    fn rejects_non_hermitian_and_mixed_sizes() {
        let bad: Matrix<Q> = Matrix::from_i64_rows(&[&[0, 2], &[0, 0]]);
        assert!(matches!(HermitianTuple::new(vec![bad]), Err(Error::NotHermitian { .. })));
        let err = HermitianTuple::new(vec![sx(), Matrix::identity(3)]);
        assert!(matches!(err, Err(Error::Dimension(_))));
        assert!(HermitianTuple::<Q>::new(vec![]).is_err());
    }

    #[test]
    fn direct_sum_and_shift() {
        let t = HermitianTuple::new(vec![sx()]).unwrap();
        let s = t.direct_sum(&t).unwrap();
        assert_eq!(s.n(), 4);
        let sh = t.shifted(&[Q::from_i64(2)]).unwrap();
        assert_eq!(sh.matrix(0)[(0, 0)], Q::from_i64(-2));
    }

    #[test]
    fn doc_roundtrip_and_bad_fraction() {
        let t = AnyTuple::Exact(HermitianTuple::new(vec![sx().scale(&Q::ratio(1, 3))]).unwrap());
        let doc = TupleDoc::from_tuple(&t);
        let json = serde_json::to_string(&doc).unwrap();
        let back: TupleDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_tuple().unwrap(), t);
        let mut broken = doc.clone();
        broken.matrices[0][0][1][0] = "1/0".into();
        assert!(matches!(broken.to_tuple(), Err(Error::Config(_))));
    }
}
