//! Univariate interpolation kernels used axis by axis on tensor grids.

use std::f64::consts::PI;

use crate::scalar::{Scalar, C64};

/// The `count`-th roots of unity ω^k, k = 0..count.
pub fn roots_of_unity(count: usize) -> Vec<C64> {
    (0..count).map(|k| unit_root(k, count)).collect()
}

fn unit_root(k: usize, n: usize) -> C64 {
    let k = k % n;
    // exact values on the axes keep real nodes real
    if (4 * k).is_multiple_of(n) {
        [C64::new(1.0, 0.0), C64::new(0.0, 1.0), C64::new(-1.0, 0.0), C64::new(0.0, -1.0)][4 * k / n]
    } else {
        C64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64)
    }
}

/// Coefficients c_m with values[k] = Σ_m c_m ω^{km}.
pub fn inverse_dft(n: usize, values: &[C64]) -> Vec<C64> {
    assert_eq!(values.len(), n);
    let scale = 1.0 / n as f64;
    (0..n)
        .map(|m| {
            values
                .iter()
                .enumerate()
                .map(|(k, v)| v * unit_root(n - (k * m) % n, n))
                .sum::<C64>()
                * scale
        })
        .collect()
}

/// Monomial coefficients of the interpolant, via Newton divided differences.
pub fn newton_to_monomial<T: Scalar>(nodes: &[T], values: &[T]) -> Vec<T> {
    let n = nodes.len();
    assert_eq!(values.len(), n);
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = dd[i].clone() - &dd[i - 1];
            let den = nodes[i].clone() - &nodes[i - level];
            dd[i] = num / &den;
        }
    }
    // Horner on the Newton form: p ← p·(x − x_k) + dd_k
    let mut coeffs = vec![T::zero(); n];
    if n == 0 {
        return coeffs;
    }
    coeffs[0] = dd[n - 1].clone();
    for (len, k) in (1..).zip((0..n - 1).rev()) {
        for i in (1..=len).rev() {
            let shifted = coeffs[i - 1].clone();
            let scaled = coeffs[i].clone() * &nodes[k];
            coeffs[i] = shifted - &scaled;
        }
        coeffs[0] = -(coeffs[0].clone() * &nodes[k]) + &dd[k];
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational as Q;

    #[test]
    fn newton_recovers_cubic() {
        // 2 − x + 3x³
        let p = |x: i64| Q::from_i64(2 - x + 3 * x * x * x);
        let nodes: Vec<Q> = (0..4).map(Q::from_i64).collect();
        let vals: Vec<Q> = (0..4).map(p).collect();
        let c = newton_to_monomial(&nodes, &vals);
        assert_eq!(c, vec![Q::from_i64(2), Q::from_i64(-1), Q::zero(), Q::from_i64(3)]);
    }

    #[test]
    fn dft_recovers_coefficients() {
        let want = [C64::new(1.0, 2.0), C64::new(-3.0, 0.0), C64::new(0.5, -1.0), C64::new(0.0, 0.0), C64::new(7.0, 0.0)];
        let nodes = roots_of_unity(5);
        let vals: Vec<C64> = nodes
            .iter()
            .map(|z| want.iter().enumerate().map(|(m, c)| c * z.powu(m as u32)).sum())
            .collect();
        let got = inverse_dft(5, &vals);
        for (a, b) in got.iter().zip(&want) {
            assert!((a - b).norm() < 1e-13);
        }
    }

    #[test]
    fn quarter_roots_are_exact() {
        let r = roots_of_unity(4);
        assert_eq!(r[1], C64::new(0.0, 1.0));
        assert_eq!(r[2], C64::new(-1.0, 0.0));
    }
}
