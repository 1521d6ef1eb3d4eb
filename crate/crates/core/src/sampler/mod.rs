//! Grid sampling of singularity indicators over λ-space.

mod export;
mod mesh;
mod torus;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::clifford::GammaRep;
use crate::error::{Error, Result};
use crate::invariants;
use crate::linalg;
use crate::localizer;
use crate::matrix::Matrix;
use crate::scalar::{Scalar, C64};
use crate::tuple::HermitianTuple;

pub use export::{grid_csv, mesh_obj, write_grid_csv, write_mesh_obj};
pub use mesh::{extract_isosurface, MeshStats, SpectrumMesh};
pub use torus::{torus_radius_profile, TorusProfile, TorusRoot};

#[derive(Clone, Debug, PartialEq)]
pub struct Axis {
    /// λ coordinate sampled along this axis (0-based).
    pub coord: usize,
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl Axis {
    pub fn new(coord: usize, min: f64, max: f64, count: usize) -> Self {
        Self { coord, min, max, count }
    }

    fn node<T: Scalar>(&self, k: usize) -> T {
        let lo = T::from_f64(self.min);
        let span = T::from_f64(self.max) - &lo;
        lo + &(span * &T::from_i64(k as i64) / &T::from_i64(self.count as i64 - 1))
    }

    pub fn node_f64(&self, k: usize) -> f64 {
        self.min + (self.max - self.min) * k as f64 / (self.count - 1) as f64
    }

    pub fn step(&self) -> f64 {
        (self.max - self.min) / (self.count - 1) as f64
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GridSpec {
    pub d: usize,
    pub axes: Vec<Axis>,
    /// Values of the coordinates that are not sampled.
    pub fixed: Vec<(usize, f64)>,
}

impl GridSpec {
    pub fn new(d: usize, axes: Vec<Axis>, fixed: Vec<(usize, f64)>) -> Result<Self> {
        let mut seen = vec![false; d];
        for c in axes.iter().map(|a| a.coord).chain(fixed.iter().map(|f| f.0)) {
            if c >= d || seen[c] {
                return Err(Error::Config(format!("coordinate {} is out of range or given twice", c + 1)));
            }
            seen[c] = true;
        }
        if let Some(c) = seen.iter().position(|s| !s) {
            return Err(Error::Config(format!("coordinate {} is neither sampled nor fixed", c + 1)));
        }
        for a in &axes {
            if a.count < 2 || a.min >= a.max || !a.min.is_finite() || !a.max.is_finite() {
                return Err(Error::Config(format!(
                    "axis {} needs count >= 2 and min < max, got [{}, {}] x {}",
                    a.coord + 1,
                    a.min,
                    a.max,
                    a.count
                )));
            }
        }
        if fixed.iter().any(|f| !f.1.is_finite()) {
            return Err(Error::Config("fixed coordinate is not finite".into()));
        }
        Ok(Self { d, axes, fixed })
    }

    /// The same range and count on every coordinate.
    pub fn cube(d: usize, min: f64, max: f64, count: usize) -> Result<Self> {
        Self::new(d, (0..d).map(|c| Axis::new(c, min, max, count)).collect(), vec![])
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(|a| a.count).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Per-axis indices of a flat node number; the last axis varies fastest.
    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.axes.len()];
        for (k, a) in self.axes.iter().enumerate().rev() {
            idx[k] = flat % a.count;
            flat /= a.count;
        }
        idx
    }

    pub fn flatten(&self, idx: &[usize]) -> usize {
        self.axes.iter().zip(idx).fold(0, |acc, (a, &i)| acc * a.count + i)
    }

    fn point<T: Scalar>(&self, flat: usize) -> Vec<T> {
        let mut p = vec![T::zero(); self.d];
        for (a, i) in self.axes.iter().zip(self.unflatten(flat)) {
            p[a.coord] = a.node(i);
        }
        for &(c, v) in &self.fixed {
            p[c] = T::from_f64(v);
        }
        p
    }

    /// Full λ coordinates of a node in floating point.
    pub fn point_f64(&self, flat: usize) -> Vec<f64> {
        let mut p = vec![0.0; self.d];
        for (a, i) in self.axes.iter().zip(self.unflatten(flat)) {
            p[a.coord] = a.node_f64(i);
        }
        for &(c, v) in &self.fixed {
            p[c] = v;
        }
        p
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Indicator {
    /// det L_λ.
    DetSign,
    /// Smallest |eigenvalue| of L_λ.
    SigmaMin,
    /// The archetypal Pfaffian of a self-dual triple.
    PfaffianSign,
}

impl fmt::Display for Indicator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Indicator::DetSign => "det-sign",
            Indicator::SigmaMin => "sigma-min",
            Indicator::PfaffianSign => "pfaffian-sign",
        })
    }
}

impl FromStr for Indicator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "det-sign" | "det" => Ok(Indicator::DetSign),
            "sigma-min" | "sigma" => Ok(Indicator::SigmaMin),
            "pfaffian-sign" | "pfaffian" | "arch" => Ok(Indicator::PfaffianSign),
            _ => Err(Error::Config(format!("unknown indicator '{s}' (det-sign, sigma-min, pfaffian-sign)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumGrid {
    pub spec: GridSpec,
    pub indicator: Indicator,
    /// One value per node, in `GridSpec::unflatten` order.
    pub values: Vec<f64>,
}

impl SpectrumGrid {
    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Relative size below which a floating determinant or Pfaffian is recomputed exactly.
const EXACT_FALLBACK: f64 = 1e-10;

/// ∏ of row 2-norms, an upper bound for |det|.
fn hadamard_bound(m: &Matrix<C64>) -> f64 {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].norm_sqr()).sum::<f64>().sqrt())
        .product()
}

/// Evaluates the indicator at every grid node.
///
/// Determinants and Pfaffians are computed in floating point first; for
/// exact tuples, values too small for their sign to be trusted are
/// recomputed exactly at the (exactly represented) node, so the sign of a
/// vanishing value is never rounding noise.
pub fn sample<T: Scalar>(tuple: &HermitianTuple<T>, rep: &GammaRep, spec: &GridSpec, indicator: Indicator) -> Result<SpectrumGrid> {
    if spec.d != tuple.d() {
        return Err(Error::Dimension(format!("grid has d={}, tuple has d={}", spec.d, tuple.d())));
    }
    let exact = match indicator {
        Indicator::PfaffianSign => invariants::archetypal_pencil(tuple)?,
        _ => localizer::pencil(tuple, rep)?,
    };
    let float = exact.to_float();
    let values = (0..spec.len())
        .into_par_iter()
        .map(|flat| {
            let pf = spec.point::<C64>(flat);
            let m = float.at(&pf);
            let v = match indicator {
                Indicator::SigmaMin => linalg::smallest_eigen_magnitude(&m)?,
                Indicator::DetSign => {
                    let v = linalg::lu_determinant(&m).re;
                    if T::EXACT && v.abs() <= EXACT_FALLBACK * hadamard_bound(&m) {
                        T::determinant_kernel(&exact.at(&spec.point::<T>(flat))).to_c64().re
                    } else {
                        v
                    }
                }
                Indicator::PfaffianSign => {
                    let v = linalg::pfaffian_parlett_reid(&m).re;
                    if T::EXACT && v.abs() <= EXACT_FALLBACK * hadamard_bound(&m).sqrt() {
                        linalg::pfaffian(&exact.at(&spec.point::<T>(flat)))?.to_c64().re
                    } else {
                        v
                    }
                }
            };
            if !v.is_finite() {
                return Err(Error::Contract(format!("indicator is not finite at {:?}", spec.point_f64(flat))));
            }
            Ok(v)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(SpectrumGrid {
        spec: spec.clone(),
        indicator,
        values,
    })
}

/// `sample` for a 4-tuple with three sampled axes and one fixed coordinate.
pub fn slice_4d<T: Scalar>(tuple: &HermitianTuple<T>, rep: &GammaRep, spec: &GridSpec, indicator: Indicator) -> Result<SpectrumGrid> {
    if tuple.d() != 4 || spec.axes.len() != 3 || spec.fixed.len() != 1 {
        return Err(Error::Dimension(
            "a 4D slice needs d=4 with three sampled axes and one fixed coordinate".into(),
        ));
    }
    sample(tuple, rep, spec, indicator)
}

/// A σ_min level whose sublevel set reaches every grid cell that meets the
/// spectrum: σ_min is 1-Lipschitz in λ, so some node of such a cell lies
/// within half a cell diagonal of a zero.
pub fn covering_sigma_level(spec: &GridSpec) -> f64 {
    0.5 * spec.axes.iter().map(|a| a.step() * a.step()).sum::<f64>().sqrt()
}

/// 1e-2·‖L₀‖, the default σ_min contour level at 41 nodes per axis.
pub fn default_sigma_level<T: Scalar>(tuple: &HermitianTuple<T>, rep: &GammaRep) -> Result<f64> {
    let zero = vec![T::zero(); tuple.d()];
    Ok(1e-2 * linalg::operator_norm(&localizer::build(tuple, rep, &zero)?.matrix))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::default_rep;
    use crate::gallery;

    #[test]
    fn grid_spec_validation() {
        assert!(GridSpec::new(3, vec![Axis::new(0, 0.0, 1.0, 2)], vec![(1, 0.0)]).is_err());
        assert!(GridSpec::new(1, vec![Axis::new(0, 1.0, 1.0, 3)], vec![]).is_err());
        assert!(GridSpec::new(1, vec![Axis::new(0, 0.0, 1.0, 1)], vec![]).is_err());
        assert!(GridSpec::new(2, vec![Axis::new(0, 0.0, 1.0, 2)], vec![(0, 0.0)]).is_err());
        let g = GridSpec::cube(3, -1.0, 1.0, 3).unwrap();
        assert_eq!(g.len(), 27);
        assert_eq!(g.unflatten(5), vec![0, 1, 2]);
        assert_eq!(g.flatten(&[2, 1, 0]), 21);
        assert_eq!(g.point_f64(5), vec![-1.0, 0.0, 1.0]);
    }

    #[test]
    fn exact_nodes_are_decimal() {
        let a = Axis::new(0, -2.0, 2.0, 41);
        let v: crate::scalar::GaussianRational = a.node(21);
        assert_eq!(v, crate::scalar::GaussianRational::ratio(1, 10));
    }

    #[test]
    fn indicator_values() {
        let t = gallery::pauli();
        let rep = default_rep(3).unwrap();
        let spec = GridSpec::cube(3, -2.0, 2.0, 5).unwrap();
        let det = sample(&t, &rep, &spec, Indicator::DetSign).unwrap();
        // centre node is the origin: char(0) = −3
        assert_eq!(det.values[62], -3.0);
        let sig = sample(&t.to_float(), &rep, &spec, Indicator::SigmaMin).unwrap();
        assert!((sig.values[62] - 1.0).abs() < 1e-12);
        assert!(sig.values.iter().all(|&v| v >= 0.0));
        assert!(sample(&t, &rep, &spec, Indicator::PfaffianSign).is_err());
        assert!("nope".parse::<Indicator>().is_err());
    }
}
