//! Radial profile of the clock/shift torus in 4-space.

use crate::error::{Error, Result};
use crate::gallery;
use crate::polynomial::{reduced_char_poly, substitute_polar, MultiPoly, PolarForm};
use crate::scalar::C64;

const RESIDUAL_TOL: f64 = 1e-10;
const R_LIMIT: f64 = 64.0;

/// f(r, θ, φ) = Re det L̃ on w = r cos θ, x = r sin θ, y = r cos φ, z = r sin φ.
#[derive(Clone, Debug)]
pub struct TorusProfile {
    pub n: usize,
    pub poly: MultiPoly<C64>,
    form: PolarForm,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TorusRoot {
    pub r: f64,
    pub residual: f64,
}

impl TorusProfile {
    pub fn new(n: usize) -> Result<Self> {
        if !(3..=6).contains(&n) {
            return Err(Error::Contract(format!("torus profile is defined for n in 3..=6, got {n}")));
        }
        let poly = reduced_char_poly(&gallery::torus_quadruple(n))?;
        let form = substitute_polar(&poly.re_part())?;
        Ok(Self { n, poly, form })
    }

    pub fn f(&self, r: f64, theta: f64, phi: f64) -> f64 {
        self.form.eval(r, theta, phi).re
    }

    pub fn df_dr(&self, r: f64, theta: f64, phi: f64) -> f64 {
        self.form.eval_dr(r, theta, phi).re
    }

    /// The root of f(·, θ, φ) on (0, r_max], by bracketing and bisection.
    pub fn radius(&self, theta: f64, phi: f64) -> Result<TorusRoot> {
        let coeffs: Vec<f64> = self.form.radial(theta, phi).iter().map(|c| c.re).collect();
        let f = |r: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c);
        let f0 = f(0.0);
        let mut hi = 1.0;
        while f(hi).signum() == f0.signum() {
            hi *= 2.0;
            if hi > R_LIMIT || f0 == 0.0 {
                return Err(Error::NoBracket { theta, phi, r_max: hi });
            }
        }
        let mut lo = 0.0;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if f(mid).signum() == f0.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let (r, residual) = if f(lo).abs() <= f(hi).abs() { (lo, f(lo).abs()) } else { (hi, f(hi).abs()) };
        if residual > RESIDUAL_TOL {
            return Err(Error::Interpolation { residual, tol: RESIDUAL_TOL });
        }
        Ok(TorusRoot { r, residual })
    }
}

/// ρ(θ, φ) for the n×n clock/shift quadruple.
pub fn torus_radius_profile(n: usize, theta: f64, phi: f64) -> Result<TorusRoot> {
    TorusProfile::new(n)?.radius(theta, phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n4_profile_matches_closed_form() {
        let p = TorusProfile::new(4).unwrap();
        assert!((p.f(0.0, 0.3, 1.1) + 4.0).abs() < 1e-9);
        for (t, s, r) in [(0.0f64, 0.0f64, 0.5f64), (0.4, 2.0, 0.9), (1.3, -0.7, 0.2)] {
            let want = -4.0 + 32.0 * r.powi(6) + 16.0 * r.powi(8)
                + (20.0 - 2.0 * (4.0 * s).cos() - 2.0 * (4.0 * t).cos()) * r.powi(4);
            assert!((p.f(r, t, s) - want).abs() < 1e-9 * (1.0 + want.abs()), "{} vs {want}", p.f(r, t, s));
        }
        let root = p.radius(0.0, 0.0).unwrap();
        assert!(root.residual <= 1e-10 && root.r > 0.0);
    }

    #[test]
    fn n3_root_matches_univariate_polynomial() {
        let root = torus_radius_profile(3, 0.0, 0.0).unwrap();
        // −4r³ + 8r⁶ + 12r⁴ + 3r² − 1, bisected independently
        let g = |r: f64| -4.0 * r.powi(3) + 8.0 * r.powi(6) + 12.0 * r.powi(4) + 3.0 * r * r - 1.0;
        let (mut lo, mut hi) = (0.0, 1.0);
        for _ in 0..100 {
            let m = 0.5 * (lo + hi);
            if g(m) < 0.0 {
                lo = m;
            } else {
                hi = m;
            }
        }
        assert!((root.r - lo).abs() < 1e-9);
        assert!(TorusProfile::new(2).is_err());
    }
}
