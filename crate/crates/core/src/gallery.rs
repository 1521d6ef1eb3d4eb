//! Named matrix families with the facts known about them.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_rational::BigRational;

use crate::clifford::{paper_rep, sigma_x, sigma_y, sigma_z};
use crate::error::{Error, Result};
use crate::invariants::IndexKind;
use crate::matrix::Matrix;
use crate::scalar::{parse_rational, GaussianRational as Q, Scalar, C64};
use crate::tuple::{AnyTuple, HermitianTuple};

fn q(num: i64, den: i64) -> Q {
    Q::ratio(num, den)
}

fn exact(mats: Vec<Matrix<Q>>) -> HermitianTuple<Q> {
    HermitianTuple::new(mats).expect("gallery matrices are Hermitian")
}

/// Builds a matrix from (re, im) integer pairs divided by `den`.
fn gauss_rows(rows: &[&[(i64, i64)]], den: i64) -> Matrix<Q> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&(a, b)| Q::from_ints(a, b) / &Q::from_i64(den)).collect())
            .collect(),
    )
    .unwrap()
}

pub fn scaled_pauli(a: Q, b: Q, c: Q) -> HermitianTuple<Q> {
    exact(vec![sigma_x().scale(&a), sigma_y().scale(&b), sigma_z().scale(&c)])
}

pub fn pauli() -> HermitianTuple<Q> {
    scaled_pauli(Q::one(), Q::one(), Q::one())
}

pub fn lemniscate() -> HermitianTuple<Q> {
    scaled_pauli(q(1, 2), Q::one(), q(1, 2))
}

/// (σ_x, σ_y): the two-matrix example with empty Laplace spectrum.
pub fn sigma_pair() -> HermitianTuple<Q> {
    exact(vec![sigma_x(), sigma_y()])
}

/// (tA, B, C) with A = diag(2,1,0,−1,−2), B and C the tridiagonal ¼ and ∓i/4 matrices.
pub fn fuzzy_sphere_5(t: Q) -> HermitianTuple<Q> {
    let a = Matrix::diag(&[2, 1, 0, -1, -2].map(Q::from_i64));
    let b = Matrix::from_fn(5, 5, |i, j| if i.abs_diff(j) == 1 { q(1, 4) } else { Q::zero() });
    let c = Matrix::from_fn(5, 5, |i, j| {
        if j == i + 1 {
            Q::new(BigRational::from_integer(0.into()), BigRational::new((-1).into(), 4.into()))
        } else if i == j + 1 {
            Q::new(BigRational::from_integer(0.into()), BigRational::new(1.into(), 4.into()))
        } else {
            Q::zero()
        }
    });
    exact(vec![a.scale(&t), b, c])
}

/// Cyclic shift U (U(1,n) = 1, U(k+1,k) = 1) and clock V = diag(e^{2πik/n}), k = 1..n.
pub fn clock_shift(n: usize) -> (Matrix<C64>, Matrix<C64>) {
    let u = Matrix::from_fn(n, n, |i, j| {
        if (i == 0 && j == n - 1) || (i > 0 && j == i - 1) {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    let v = Matrix::diag(&(1..=n).map(|k| root_of_unity(k, n)).collect::<Vec<_>>());
    (u, v)
}

fn root_of_unity(k: usize, n: usize) -> C64 {
    let k = k % n;
    if (4 * k).is_multiple_of(n) {
        [C64::new(1.0, 0.0), C64::new(0.0, 1.0), C64::new(-1.0, 0.0), C64::new(0.0, -1.0)][4 * k / n]
    } else {
        C64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64)
    }
}

/// Hermitian and anti-Hermitian parts of the clock and shift:
/// X₁ = ½U* + ½U, X₂ = (i/2)U* − (i/2)U, X₃, X₄ likewise from V.
pub fn torus_quadruple(n: usize) -> HermitianTuple<C64> {
    let (u, v) = clock_shift(n);
    let parts = |m: &Matrix<C64>| {
        let half = C64::new(0.5, 0.0);
        let ih = C64::new(0.0, 0.5);
        let ma = m.adjoint();
        (&ma.scale(&half) + &m.scale(&half), &ma.scale(&ih) - &m.scale(&ih))
    };
    let (x1, x2) = parts(&u);
    let (x3, x4) = parts(&v);
    HermitianTuple::new(vec![x1, x2, x3, x4]).expect("Hermitian parts")
}

/// Exact version of [`torus_quadruple`]; only n ∈ {1, 2, 4} have Gaussian-rational V.
pub fn torus_quadruple_exact(n: usize) -> Result<HermitianTuple<Q>> {
    if ![1, 2, 4].contains(&n) {
        return Err(Error::Contract(format!(
            "clock matrix for n={n} has irrational entries; use the float kind"
        )));
    }
    let t = torus_quadruple(n);
    let mats = t
        .matrices()
        .iter()
        .map(|m| m.map(|z| Q::new(BigRational::from_float(z.re).unwrap(), BigRational::from_float(z.im).unwrap())))
        .collect();
    HermitianTuple::new(mats)
}

/// The torus-to-sphere triple built from M = R + (r/2)(U* + U):
/// A = ½MV* + ½VM, B = (i/2)MV* − (i/2)VM, C = (ri/2)U* − (ri/2)U.
pub fn torus_triple(n: usize, big_r: f64, r: f64) -> HermitianTuple<C64> {
    let (u, v) = clock_shift(n);
    let c = |re: f64, im: f64| C64::new(re, im);
    let m = &Matrix::identity(n).scale(&c(big_r, 0.0)) + &(&u.adjoint() + &u).scale(&c(r / 2.0, 0.0));
    let p = (&m * &v.adjoint()).scale(&c(0.5, 0.0));
    let a = &p + &p.adjoint();
    let ip = p.scale(&c(0.0, 1.0));
    let b = &ip + &ip.adjoint();
    let cu = u.adjoint().scale(&c(0.0, r / 2.0));
    let cc = &cu + &cu.adjoint();
    HermitianTuple::new(vec![a, b, cc]).expect("Hermitian by construction")
}

/// The 6×6 two-holed torus triple; `r` scales the (3,4) coupling.
pub fn sykora_two_torus(r: Q) -> HermitianTuple<Q> {
    let half = q(1, 2);
    let rh = r * &half;
    let mut x = Matrix::diag(&[q(4, 5), Q::zero(), q(8, 5), q(4, 5), q(12, 5), q(8, 5)]);
    let mut y = Matrix::<Q>::zeros(6, 6);
    let i = Q::imag_unit();
    let couplings = [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)];
    for (a, b) in couplings.iter().map(|&(a, b)| (a, b, half.clone())).chain([(2, 3, rh)]).map(|(a, b, v)| ((a, b), v)) {
        let (j, k) = a;
        x[(j, k)] = b.clone();
        x[(k, j)] = b.clone();
        y[(j, k)] = -(i.clone() * &b);
        y[(k, j)] = i.clone() * &b;
    }
    let z = Matrix::diag(&[Q::zero(), q(13, 10), q(13, 10), q(13, 5), q(13, 5), q(39, 10)]);
    exact(vec![x, y, z])
}

/// X_r = σ_x ⊕ (r + σ_x), Y = σ_y ⊕ (−σ_y), Z = σ_z ⊕ σ_z.
pub fn bad_plot(r: Q) -> HermitianTuple<Q> {
    let o = (0, 0);
    let x = gauss_rows(&[&[o, (1, 0), o, o], &[(1, 0), o, o, o], &[o, o, o, (1, 0)], &[o, o, (1, 0), o]], 1);
    let shift = Matrix::diag(&[Q::zero(), Q::zero(), r.clone(), r]);
    let y = gauss_rows(&[&[o, (0, -1), o, o], &[(0, 1), o, o, o], &[o, o, o, (0, 1)], &[o, o, (0, -1), o]], 1);
    let z = Matrix::diag(&[1, -1, 1, -1].map(Q::from_i64));
    exact(vec![&x + &shift, y, z])
}

pub fn null_plot() -> HermitianTuple<Q> {
    bad_plot(Q::zero())
}

/// Self-dual Hermitian path from the null-plot triple, 0 ≤ s ≤ ½.
pub fn self_dual_path(s: Q) -> Result<HermitianTuple<Q>> {
    let zero = Q::zero();
    if s.re < zero.re || s.re > q(1, 2).re || !s.is_real() {
        return Err(Error::Contract(format!("self_dual_path needs 0 <= s <= 1/2, got {s}")));
    }
    let a = Q::one() - &(Q::from_i64(2) * &s);
    let ns = -s.clone();
    let z0 = Q::zero();
    let x = Matrix::from_rows(vec![
        vec![z0.clone(), a.clone(), z0.clone(), s.clone()],
        vec![a.clone(), z0.clone(), ns.clone(), z0.clone()],
        vec![z0.clone(), ns, z0.clone(), a.clone()],
        vec![s.clone(), z0.clone(), a, z0.clone()],
    ])?;
    let o = (0, 0);
    let y = gauss_rows(&[&[o, (0, -1), o, o], &[(0, 1), o, o, o], &[o, o, o, (0, 1)], &[o, o, (0, -1), o]], 1);
    let p = Q::one() - &s;
    let z = Matrix::diag(&[p.clone(), -p.clone(), p.clone(), -p]);
    HermitianTuple::new(vec![x, y, z])
}

/// (s₁γ₁, s₂γ₂, s₃γ₃, s₄γ₄) with the four-gamma representation.
pub fn gamma_tuple(scales: [Q; 4]) -> HermitianTuple<Q> {
    let rep = paper_rep(4).unwrap();
    exact(rep.gammas().iter().zip(scales).map(|(g, s)| g.scale(&s)).collect())
}

/// (X, Y, Z, H) with X(1,1) = X(4,4) = r; r = 0 is the undeformed even/odd tuple.
pub fn even_odd(r: Q) -> HermitianTuple<Q> {
    let o = (0, 0);
    let x = gauss_rows(&[&[o, (2, 0), o, o], &[(2, 0), o, o, o], &[o, o, o, (-2, 0)], &[o, o, (-2, 0), o]], 1);
    let shift = Matrix::diag(&[r.clone(), Q::zero(), Q::zero(), r]);
    let y = gauss_rows(&[&[o, (0, 1), o, o], &[(0, -1), o, o, o], &[o, o, o, (0, -1)], &[o, o, (0, 1), o]], 1);
    let z = Matrix::diag(&[1, -1, -1, 1].map(Q::from_i64));
    let h = gauss_rows(&[&[o, o, (1, 0), o], &[o, o, o, (1, 0)], &[(1, 0), o, o, o], &[o, (1, 0), o, o]], 1);
    exact(vec![&x + &shift, y, z, h])
}

/// Γ = diag(1, 1, −1, −1).
pub fn even_odd_grading() -> Matrix<Q> {
    Matrix::diag(&[1, 1, -1, -1].map(Q::from_i64))
}

/// Commuting diagonal triple with joint eigenvalues (1,0,1), (2,1,−1), (−1,1,½).
pub fn commuting_diag() -> HermitianTuple<Q> {
    exact(vec![
        Matrix::diag(&[Q::from_i64(1), Q::from_i64(2), Q::from_i64(-1)]),
        Matrix::diag(&[Q::zero(), Q::one(), Q::one()]),
        Matrix::diag(&[Q::one(), Q::from_i64(-1), q(1, 2)]),
    ])
}

/// Facts attached to an example and checked by the test suites.
#[derive(Clone, Debug)]
pub enum Fact {
    /// The (reduced) characteristic polynomial equals `expr` in `vars` after expansion.
    CharPoly {
        reduced: bool,
        expr: &'static str,
        vars: &'static [&'static str],
        defs: &'static [(&'static str, &'static str)],
    },
    /// An index value at a point off the spectrum.
    Index { kind: IndexKind, at: Vec<f64>, value: i64 },
    /// Points of the Clifford spectrum (exact joint eigenvalues for commuting tuples).
    SpectrumPoints(Vec<Vec<f64>>),
}

#[derive(Clone, Debug)]
pub struct NamedExample {
    pub name: &'static str,
    pub params: Vec<(String, String)>,
    pub tuple: AnyTuple,
    pub facts: Vec<Fact>,
}

/// Names, parameter lists and one-line descriptions, in listing order.
pub const EXAMPLES: &[(&str, &str, &str)] = &[
    ("pauli", "", "Pauli matrices; spectrum is the unit sphere"),
    ("scaled_pauli", "a b c", "(a sx, b sy, c sz)"),
    ("lemniscate", "", "(sx/2, sy, sz/2); two-lobed lemniscate surface"),
    ("sigma_pair", "", "(sx, sy); empty Laplace spectrum"),
    ("fuzzy_sphere_5", "t", "5x5 fuzzy sphere path (tA, B, C)"),
    ("torus_triple", "n R r", "clock/shift torus-to-sphere triple (float)"),
    ("torus_quadruple", "n", "Hermitian parts of clock and shift (float; exact for n=1,2,4)"),
    ("sykora_two_torus", "r", "6x6 triple with a two-holed torus spectrum at r=1"),
    ("bad_plot", "r", "direct sum sphere; det-sign plot is empty at r=0"),
    ("null_plot", "", "bad_plot at r=0; self-dual triple"),
    ("self_dual_path", "s", "self-dual path, 0 <= s <= 1/2"),
    ("gamma4", "", "the four gamma matrices; spectrum is one point"),
    ("rescaled_gamma", "", "(2g1, g2, g3, g4); spectrum is a three-sphere"),
    ("gamma_tuple", "s1 s2 s3 s4", "(s1 g1, s2 g2, s3 g3, s4 g4)"),
    ("even_odd", "r", "graded quadruple; r = 0 undeformed"),
    ("deformed_even_odd", "", "even_odd at r = 3/2"),
    ("commuting_diag", "", "commuting diagonal triple; three spectrum points"),
];

const XYZ: &[&str] = &["x", "y", "z"];
const WXYZ: &[&str] = &["w", "x", "y", "z"];
const R2: &[(&str, &str)] = &[("R2", "x^2+y^2+z^2")];

/// Builds an example by name; parameters are given as decimal or fraction strings.
pub fn build(name: &str, params: &BTreeMap<String, String>) -> Result<NamedExample> {
    let spec = EXAMPLES
        .iter()
        .find(|(n, _, _)| *n == name)
        .ok_or_else(|| Error::UnknownExample(name.to_string()))?;
    let allowed: Vec<&str> = spec.1.split_whitespace().collect();
    if let Some(bad) = params.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(Error::Config(format!("example '{name}' has no parameter '{bad}'")));
    }
    let get = |key: &str, default: &str| -> Result<Q> {
        let text = params.get(key).map(String::as_str).unwrap_or(default);
        parse_rational(text)
            .map(Q::real)
            .map_err(|e| Error::Config(format!("parameter {key}: {e}")))
    };
    let get_f = |key: &str, default: &str| -> Result<f64> { Ok(get(key, default)?.to_c64().re) };
    let get_n = |key: &str, default: &str| -> Result<usize> {
        let v = get(key, default)?;
        if !v.re.is_integer() || v.re < BigRational::from_integer(1.into()) {
            return Err(Error::Config(format!("parameter {key} must be a positive integer")));
        }
        v.re.to_integer().try_into().map_err(|_| Error::Config(format!("parameter {key} too large")))
    };
    let mut used: Vec<(String, String)> = Vec::new();
    for key in &allowed {
        if let Some(v) = params.get(*key) {
            used.push((key.to_string(), v.clone()));
        }
    }
    let idx = |kind, at: &[f64], value| Fact::Index { kind, at: at.to_vec(), value };
    let half = IndexKind::HalfSignature;
    let (tuple, facts) = match name {
        "pauli" => (
            AnyTuple::Exact(pauli()),
            vec![
                Fact::CharPoly { reduced: false, expr: "(x^2+y^2+z^2-1)(x^2+y^2+z^2+3)", vars: XYZ, defs: &[] },
                idx(half, &[0.0, 0.0, 0.0], 1),
                idx(half, &[0.0, 0.0, 5.0], 0),
            ],
        ),
        "scaled_pauli" => (
            AnyTuple::Exact(scaled_pauli(get("a", "1")?, get("b", "1")?, get("c", "1")?)),
            vec![],
        ),
        "lemniscate" => (
            AnyTuple::Exact(lemniscate()),
            vec![
                Fact::CharPoly { reduced: false, expr: "(x^2+y^2+z^2)^2+2z^2+2x^2-y^2", vars: XYZ, defs: &[] },
                idx(half, &[0.0, 0.7, 0.0], 1),
                idx(half, &[0.0, -0.7, 0.0], 1),
            ],
        ),
        "sigma_pair" => (
            AnyTuple::Exact(sigma_pair()),
            vec![Fact::CharPoly { reduced: false, expr: "(x^2+y^2)^2", vars: &["x", "y"], defs: &[] }],
        ),
        "fuzzy_sphere_5" => (AnyTuple::Exact(fuzzy_sphere_5(get("t", "1")?)), vec![]),
        "torus_triple" => (
            AnyTuple::Float(torus_triple(get_n("n", "5")?, get_f("R", "9/10")?, get_f("r", "4/10")?)),
            vec![],
        ),
        "torus_quadruple" => {
            let n = get_n("n", "4")?;
            if n < 2 {
                return Err(Error::Config("torus_quadruple needs n >= 2".into()));
            }
            let t = match torus_quadruple_exact(n) {
                Ok(t) => AnyTuple::Exact(t),
                Err(_) => AnyTuple::Float(torus_quadruple(n)),
            };
            (t, vec![])
        }
        "sykora_two_torus" => {
            let r = get("r", "1")?;
            let facts = if r == Q::one() {
                vec![idx(half, &[2.0, 0.0, 0.25], 0), idx(half, &[0.25, 0.0, 2.0], -1), idx(half, &[1.0, 0.0, 1.5], -1)]
            } else {
                vec![]
            };
            (AnyTuple::Exact(sykora_two_torus(r)), facts)
        }
        "bad_plot" | "null_plot" => {
            let r = if name == "null_plot" { Q::zero() } else { get("r", "0")? };
            let facts = if r.is_zero() {
                vec![
                    Fact::CharPoly { reduced: false, expr: "(x^2+y^2+z^2-1)^2(x^2+y^2+z^2+3)^2", vars: XYZ, defs: &[] },
                    idx(half, &[0.0, 0.0, 0.0], 0),
                ]
            } else {
                vec![]
            };
            (AnyTuple::Exact(bad_plot(r)), facts)
        }
        "self_dual_path" => {
            let s = get("s", "0")?;
            let facts = if s.is_zero() {
                vec![idx(IndexKind::ArchetypalSign, &[0.0, 0.0, 0.0], -1), idx(IndexKind::ArchetypalSign, &[0.0, 0.0, 10.0], 1)]
            } else {
                vec![]
            };
            (AnyTuple::Exact(self_dual_path(s).map_err(|e| Error::Config(e.to_string()))?), facts)
        }
        "gamma4" => (
            AnyTuple::Exact(gamma_tuple([Q::one(), Q::one(), Q::one(), Q::one()])),
            vec![Fact::CharPoly { reduced: true, expr: "(w^2+x^2+y^2+z^2)^3(w^2+x^2+y^2+z^2+8)", vars: WXYZ, defs: &[] }],
        ),
        "rescaled_gamma" => (
            AnyTuple::Exact(gamma_tuple([Q::from_i64(2), Q::one(), Q::one(), Q::one()])),
            vec![Fact::CharPoly {
                reduced: true,
                expr: "(9+6R2+R2^2-6w^2+2R2 w^2+w^4)(-15+14R2+R2^2+2w^2+2R2 w^2+w^4)",
                vars: WXYZ,
                defs: R2,
            }],
        ),
        "gamma_tuple" => (
            AnyTuple::Exact(gamma_tuple([get("s1", "1")?, get("s2", "1")?, get("s3", "1")?, get("s4", "1")?])),
            vec![],
        ),
        "even_odd" | "deformed_even_odd" => {
            let r = if name == "deformed_even_odd" { q(3, 2) } else { get("r", "0")? };
            let graded = IndexKind::GradedHalfSignature;
            let mut facts = vec![idx(graded, &[5.0, 0.0, 0.0, 0.0], 0)];
            if r.is_zero() {
                facts.push(Fact::CharPoly {
                    reduced: true,
                    expr: "(R2^2+2R2 w^2+6R2+w^4-6w^2+9)(R2^2+2R2 w^2+14R2+w^4+2w^2-15)",
                    vars: WXYZ,
                    defs: R2,
                });
                facts.push(idx(graded, &[0.0, 0.0, 0.0, 0.0], -1));
            } else if r == q(3, 2) {
                facts.push(idx(graded, &[0.0, 0.0, 0.0, 0.0], -1));
            }
            (AnyTuple::Exact(even_odd(r)), facts)
        }
        "commuting_diag" => (
            AnyTuple::Exact(commuting_diag()),
            vec![Fact::SpectrumPoints(vec![vec![1.0, 0.0, 1.0], vec![2.0, 1.0, -1.0], vec![-1.0, 1.0, 0.5]])],
        ),
        _ => unreachable!("every listed example is handled"),
    };
    Ok(NamedExample {
        name: spec.0,
        params: used,
        tuple,
        facts,
    })
}

/// Builds with default parameters.
pub fn build_default(name: &str) -> Result<NamedExample> {
    build(name, &BTreeMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi(re: i64, im: i64, den: i64) -> Q {
        Q::from_ints(re, im) / &Q::from_i64(den)
    }

    #[test]
    fn fuzzy_sphere_entries() {
        let t = fuzzy_sphere_5(Q::one());
        let a = t.matrix(0);
        for (k, v) in [2, 1, 0, -1, -2].iter().enumerate() {
            assert_eq!(a[(k, k)], Q::from_i64(*v));
        }
        assert_eq!(t.matrix(1)[(0, 1)], q(1, 4));
        assert_eq!(t.matrix(2)[(1, 0)], qi(0, 1, 4));
        assert_eq!(t.matrix(2)[(0, 1)], qi(0, -1, 4));
        assert_eq!(fuzzy_sphere_5(q(1, 2)).matrix(0)[(0, 0)], Q::one());
    }

    #[test]
    fn clock_and_shift() {
        let (u, v) = clock_shift(3);
        assert_eq!(u[(0, 2)], C64::new(1.0, 0.0));
        assert_eq!(u[(1, 0)], C64::new(1.0, 0.0));
        assert_eq!(u[(2, 1)], C64::new(1.0, 0.0));
        let (_, v4) = clock_shift(4);
        let want = [C64::new(0.0, 1.0), C64::new(-1.0, 0.0), C64::new(0.0, -1.0), C64::new(1.0, 0.0)];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(v4[(k, k)], *w);
        }
        assert!((v[(0, 0)] - C64::from_polar(1.0, 2.0 * PI / 3.0)).norm() < 1e-15);
        let t = torus_quadruple(5);
        assert!(crate::linalg::commutator(t.matrix(0), t.matrix(1)).unwrap().max_abs() < 1e-15);
        assert!(torus_quadruple_exact(4).is_ok());
        assert!(torus_quadruple_exact(3).is_err());
    }

    #[test]
    fn sykora_entries() {
        let t = sykora_two_torus(Q::one());
        assert_eq!(t.matrix(0)[(2, 3)], q(1, 2));
        assert_eq!(t.matrix(1)[(1, 0)], qi(0, 1, 2));
        assert_eq!(t.matrix(1)[(2, 3)], qi(0, -1, 2));
        let z = t.matrix(2);
        let want = [q(0, 1), q(13, 10), q(13, 10), q(13, 5), q(13, 5), q(39, 10)];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(&z[(k, k)], w);
        }
        assert_eq!(t.matrix(0)[(1, 2)], Q::zero());
    }

    #[test]
    fn paths_and_endpoints() {
        assert_eq!(self_dual_path(Q::zero()).unwrap(), null_plot());
        assert_eq!(bad_plot(Q::zero()), null_plot());
        assert!(self_dual_path(q(3, 4)).is_err());
        assert!(self_dual_path(q(-1, 4)).is_err());
        assert_eq!(scaled_pauli(Q::one(), Q::one(), Q::one()), pauli());
        let eo = even_odd(Q::zero());
        assert_eq!(eo.matrix(0)[(0, 1)], Q::from_i64(2));
        assert_eq!(eo.matrix(3), &Matrix::<Q>::identity(2).kron(&sigma_x()));
        assert_eq!(even_odd(q(3, 2)).matrix(0)[(3, 3)], q(3, 2));
    }

    #[test]
    fn every_listed_example_builds() {
        for (name, _, _) in EXAMPLES {
            let ex = build_default(name).unwrap();
            assert_eq!(ex.name, *name);
        }
        assert!(matches!(build_default("nope"), Err(Error::UnknownExample(_))));
        let mut p = BTreeMap::new();
        p.insert("t".to_string(), "1/0".to_string());
        assert!(matches!(build("fuzzy_sphere_5", &p), Err(Error::Config(_))));
        p.clear();
        p.insert("zz".to_string(), "1".to_string());
        assert!(build("pauli", &p).is_err());
    }
}
