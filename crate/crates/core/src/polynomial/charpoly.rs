//! det(L_λ) reconstructed as a polynomial by tensor-grid interpolation.

use rayon::prelude::*;

use super::MultiPoly;
use crate::clifford::GammaRep;
use crate::error::{Error, Result};
use crate::linalg;
use crate::localizer::{self, Pencil};
use crate::scalar::Scalar;
use crate::tuple::HermitianTuple;

/// Relative residual allowed at held-out points on the float path.
const FLOAT_HOLDOUT_TOL: f64 = 1e-9;
/// Float coefficients below this fraction of the largest are dropped.
const FLOAT_PRUNE: f64 = 1e-12;

/// char(X₁,…,X_d)(λ) = det L_λ.
pub fn char_poly<T: Scalar>(tuple: &HermitianTuple<T>, rep: &GammaRep) -> Result<MultiPoly<T>> {
    interpolate_pencil(&localizer::pencil(tuple, rep)?)
}

/// det of the reduced localizer, d = 4.
pub fn reduced_char_poly<T: Scalar>(tuple: &HermitianTuple<T>) -> Result<MultiPoly<T>> {
    interpolate_pencil(&localizer::reduced_pencil(tuple)?)
}

/// det M(λ) for an affine pencil, with degree bound = matrix side in every variable.
pub fn interpolate_pencil<T: Scalar>(p: &Pencil<T>) -> Result<MultiPoly<T>> {
    let d = p.nvars();
    let count = p.size() + 1;
    let nodes = T::interpolation_nodes(count);
    let total = count.pow(d as u32);

    let mut grid: Vec<T> = (0..total)
        .into_par_iter()
        .map(|flat| {
            let point: Vec<T> = digits(flat, count, d).iter().map(|&i| nodes[i].clone()).collect();
            T::determinant_kernel(&p.at(&point))
        })
        .collect();

    // Solve along one axis at a time; after all axes grid[e] is the coefficient of λ^e.
    let mut stride = 1;
    for _axis in (0..d).rev() {
        let block = stride * count;
        grid = grid
            .par_chunks(block)
            .flat_map_iter(|chunk| {
                let mut out = chunk.to_vec();
                for offset in 0..stride {
                    let fiber: Vec<T> = (0..count).map(|i| chunk[offset + i * stride].clone()).collect();
                    for (i, c) in T::interpolation_solve(&nodes, &fiber).into_iter().enumerate() {
                        out[offset + i * stride] = c;
                    }
                }
                out
            })
            .collect();
        stride = block;
    }

    let poly = MultiPoly::from_terms(
        d,
        grid.into_iter()
            .enumerate()
            .map(|(flat, c)| (digits(flat, count, d).into_iter().map(|v| v as u32).collect(), c)),
    )
    .prune(FLOAT_PRUNE);
    check_holdout(p, &poly)?;
    Ok(poly)
}

/// Base-`count` digits of `flat`, most significant first.
fn digits(mut flat: usize, count: usize, d: usize) -> Vec<usize> {
    let mut out = vec![0; d];
    for k in (0..d).rev() {
        out[k] = flat % count;
        flat /= count;
    }
    out
}

fn check_holdout<T: Scalar>(p: &Pencil<T>, poly: &MultiPoly<T>) -> Result<()> {
    let d = p.nvars();
    for t in 0..3i64 {
        let point: Vec<T> = (0..d as i64)
            .map(|k| T::from_ratio(7 * (k + 1) + 5 * t - 9, 11 + t))
            .collect();
        let det = linalg::determinant(&p.at(&point))?;
        let value = poly.eval(&point);
        let residual = (det.clone() - &value).magnitude();
        if T::EXACT {
            if !(det - &value).is_zero() {
                return Err(Error::Interpolation { residual, tol: 0.0 });
            }
        } else {
            let cpoint: Vec<_> = point.iter().map(Scalar::to_c64).collect();
            let scale = poly.eval_abs(&cpoint).max(det.magnitude()).max(1.0);
            if residual > FLOAT_HOLDOUT_TOL * scale {
                return Err(Error::Interpolation {
                    residual: residual / scale,
                    tol: FLOAT_HOLDOUT_TOL,
                });
            }
        }
    }
    Ok(())
}
