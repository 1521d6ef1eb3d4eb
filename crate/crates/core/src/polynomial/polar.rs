//! Evaluation on the locus w = r cos θ, x = r sin θ, y = r cos φ, z = r sin φ.

use super::MultiPoly;
use crate::error::{Error, Result};
use crate::scalar::{Scalar, C64};

#[derive(Clone, Debug)]
pub struct PolarForm {
    terms: Vec<([u32; 4], C64)>,
}

pub fn substitute_polar<T: Scalar>(p: &MultiPoly<T>) -> Result<PolarForm> {
    if p.nvars() != 4 {
        return Err(Error::Dimension(format!("polar substitution needs 4 variables, got {}", p.nvars())));
    }
    Ok(PolarForm {
        terms: p
            .terms()
            .iter()
            .map(|(e, c)| ([e[0], e[1], e[2], e[3]], c.to_c64()))
            .collect(),
    })
}

impl PolarForm {
    /// Coefficients a_k of f(r) = Σ a_k r^k at fixed angles.
    pub fn radial(&self, theta: f64, phi: f64) -> Vec<C64> {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        let mut out = Vec::new();
        for (e, c) in &self.terms {
            let deg = e.iter().sum::<u32>() as usize;
            if out.len() <= deg {
                out.resize(deg + 1, C64::new(0.0, 0.0));
            }
            let ang = ct.powi(e[0] as i32) * st.powi(e[1] as i32) * cp.powi(e[2] as i32) * sp.powi(e[3] as i32);
            out[deg] += c * ang;
        }
        out
    }

    pub fn eval(&self, r: f64, theta: f64, phi: f64) -> C64 {
        horner(&self.radial(theta, phi), r)
    }

    /// ∂/∂r at fixed angles.
    pub fn eval_dr(&self, r: f64, theta: f64, phi: f64) -> C64 {
        let a = self.radial(theta, phi);
        let d: Vec<C64> = a.iter().enumerate().skip(1).map(|(k, c)| c * k as f64).collect();
        horner(&d, r)
    }
}

pub fn horner(coeffs: &[C64], r: f64) -> C64 {
    coeffs.iter().rev().fold(C64::new(0.0, 0.0), |acc, c| acc * r + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::expand_reference;

    #[test]
    fn difference_of_radii_vanishes() {
        let p = expand_reference("w^2+x^2-y^2-z^2", &["w", "x", "y", "z"]).unwrap();
        let f = substitute_polar(&p).unwrap();
        for k in 0..10 {
            let (r, t, s) = (0.3 * k as f64, 0.7 * k as f64, -1.1 * k as f64);
            assert!(f.eval(r, t, s).norm() < 1e-12);
        }
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        let p = expand_reference("w^3 + 2 x y z - z^2 + 5", &["w", "x", "y", "z"]).unwrap();
        let f = substitute_polar(&p).unwrap();
        let (r, t, s, h) = (0.8, 0.4, 2.1, 1e-6);
        let fd = (f.eval(r + h, t, s) - f.eval(r - h, t, s)) / (2.0 * h);
        assert!((fd - f.eval_dr(r, t, s)).norm() < 1e-8);
        assert!(substitute_polar(&expand_reference("x", &["x"]).unwrap()).is_err());
    }
}
