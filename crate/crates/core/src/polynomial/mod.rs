//! Sparse multivariate polynomials and characteristic polynomials of tuples.

mod charpoly;
mod expr;
pub mod interp;
mod polar;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Scalar, C64};

pub use charpoly::{char_poly, interpolate_pencil, reduced_char_poly};
pub use expr::{expand_reference, expand_reference_with};
pub use polar::{substitute_polar, PolarForm};

/// Σ c_e λ^e with exponent vectors as keys; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<T> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> MultiPoly<T> {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        Self::from_terms(nvars, [(vec![0; nvars], c)])
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        Self::from_terms(nvars, [(e, T::one())])
    }

    /// Sums duplicate exponents and drops zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, T)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, T> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> T {
        self.terms.get(e).cloned().unwrap_or_else(T::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> MultiPoly<U> {
        MultiPoly::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    pub fn to_float(&self) -> MultiPoly<C64> {
        self.map_coeffs(Scalar::to_c64)
    }

    /// Coefficientwise real part.
    pub fn re_part(&self) -> Self {
        self.map_coeffs(Scalar::re_part)
    }

    /// Coefficientwise imaginary part (as real coefficients).
    pub fn im_part(&self) -> Self {
        self.map_coeffs(Scalar::im_part)
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map_coeffs(|c| c.clone() * s)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_vars(o);
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check_vars(o);
        let mut p = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                p.add_term(e, ca.clone() * cb);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::constant(self.nvars, T::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    fn check_vars(&self, o: &Self) {
        assert_eq!(self.nvars, o.nvars, "polynomials in different variable counts");
    }

    pub fn eval(&self, x: &[T]) -> T {
        assert_eq!(x.len(), self.nvars, "point dimension");
        let mut acc = T::zero();
        let mut powers: Vec<Vec<T>> = x.iter().map(|v| vec![T::one(), v.clone()]).collect();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &p) in e.iter().enumerate() {
                while powers[k].len() <= p as usize {
                    let next = powers[k].last().unwrap().clone() * &x[k];
                    powers[k].push(next);
                }
                if p > 0 {
                    t *= powers[k][p as usize].clone();
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_c64(&self, x: &[C64]) -> C64 {
        assert_eq!(x.len(), self.nvars, "point dimension");
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(c.to_c64(), |acc, (&p, v)| acc * v.powu(p))
            })
            .sum()
    }

    /// Σ |c_e| |x|^e, the natural scale for evaluation round-off.
    pub fn eval_abs(&self, x: &[C64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(c.magnitude(), |acc, (&p, v)| acc * v.norm().powi(p as i32))
            })
            .sum()
    }

    pub fn derivative(&self, k: usize) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(e, _)| e[k] > 0).map(|(e, c)| {
                let mut e2 = e.clone();
                e2[k] -= 1;
                (e2, c.clone() * &T::from_i64(e[k] as i64))
            }),
        )
    }

    /// Replaces λ_k by −λ_k.
    pub fn flip_sign(&self, k: usize) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, c)| {
                let c = if e[k] % 2 == 1 { -c.clone() } else { c.clone() };
                (e.clone(), c)
            }),
        )
    }

    /// Zeroes real/imaginary parts below rel·max|coeff| (float path only).
    pub fn prune(&self, rel: f64) -> Self {
        if T::EXACT {
            return self.clone();
        }
        let thr = rel * self.max_abs_coeff();
        self.map_coeffs(|c| {
            let z = c.to_c64();
            let re = if z.re.abs() <= thr { 0.0 } else { z.re };
            let im = if z.im.abs() <= thr { 0.0 } else { z.im };
            let mut out = T::from_f64(re);
            if im != 0.0 {
                out += T::from_f64(im) * &T::imag_unit();
            }
            out
        })
    }

    /// Terms in graded-lex order: by total degree, then lexicographically descending exponents.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &T)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        v
    }

    /// One line per term: "re im e1 … ed".
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (e, c) in self.sorted_terms() {
            let [re, im] = c.text_parts();
            let _ = write!(s, "{re} {im}");
            for p in e {
                let _ = write!(s, " {p}");
            }
            s.push('\n');
        }
        s
    }

    pub fn from_text(nvars: usize, text: &str) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != nvars + 2 {
                return Err(Error::Parse(format!(
                    "line {}: expected {} fields, found {}",
                    lineno + 1,
                    nvars + 2,
                    parts.len()
                )));
            }
            let c = T::parse_parts(parts[0], parts[1])?;
            let e = parts[2..]
                .iter()
                .map(|s| s.parse::<u32>().map_err(|_| Error::Parse(format!("line {}: bad exponent '{s}'", lineno + 1))))
                .collect::<Result<Vec<u32>>>()?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl MultiPoly<GaussianRational> {
    /// True when every coefficient has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(GaussianRational::is_real)
    }
}

/// Result of [`poly_equal`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolyComparison {
    pub equal: bool,
    /// max over exponents of |a_e − b_e|.
    pub discrepancy: f64,
}

/// Exact kinds compare exactly; floats compare within tol·max|coeff|.
pub fn poly_equal<T: Scalar>(a: &MultiPoly<T>, b: &MultiPoly<T>, tol: f64) -> PolyComparison {
    assert_eq!(a.nvars, b.nvars, "polynomials in different variable counts");
    let diff = a.sub(b);
    let discrepancy = diff.max_abs_coeff();
    let equal = if T::EXACT {
        diff.is_empty()
    } else {
        discrepancy <= tol * a.max_abs_coeff().max(b.max_abs_coeff())
    };
    PolyComparison { equal, discrepancy }
}
