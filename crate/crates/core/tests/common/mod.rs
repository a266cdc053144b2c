//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use num_traits::{One, Zero};
use octaq::rational::{q, qf};
use octaq::{QuarticCoefficients, Q};
use proptest::prelude::*;
use rand::Rng;

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Q::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Q>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][col] * cofactor_det(&minor);
        if col % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn matmul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).fold(Q::zero(), |s, k| s + &a[i][k] * &b[k][j])).collect()).collect()
}

/// Characteristic polynomial `det(xI − M) = x³ + c[2] x² + c[1] x + c[0]` by
/// the Faddeev–LeVerrier recursion.
pub fn char_poly3(m: &[Vec<Q>]) -> [Q; 3] {
    let n = 3;
    let id: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
    let mut mk = id.clone();
    let mut coeffs = vec![Q::one()];
    for k in 1..=n {
        let am = matmul(m, &mk);
        let tr = (0..n).fold(Q::zero(), |s, i| s + &am[i][i]);
        let ck = -tr / q(k as i64);
        coeffs.push(ck.clone());
        mk = am;
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] += &ck;
        }
    }
    // coeffs = [1, c_{n-1}, c_{n-2}, c_{n-3}]
    [coeffs[3].clone(), coeffs[2].clone(), coeffs[1].clone()]
}

/// The homogeneous 4x4 matrix written out by hand from the quadric
/// `A(XY+YZ+ZX) + B(X+Y+Z)² + C(X+Y+Z) + D`.
pub fn reference_lambda(f: &QuarticCoefficients) -> Vec<Vec<Q>> {
    let (a, b, c, d) = (f.a(), f.b(), f.c(), f.d());
    let off = a / q(2) + b;
    let hc = c / q(2);
    vec![
        vec![d.clone(), hc.clone(), hc.clone(), hc.clone()],
        vec![hc.clone(), b.clone(), off.clone(), off.clone()],
        vec![hc.clone(), off.clone(), b.clone(), off.clone()],
        vec![hc, off.clone(), off, b.clone()],
    ]
}

/// `A(XY+YZ+ZX) + B(X+Y+Z)² + C(X+Y+Z) + D` evaluated directly.
pub fn quadric_direct(f: &QuarticCoefficients, x: &Q, y: &Q, z: &Q) -> Q {
    let s = x + y + z;
    f.a() * (x * y + y * z + z * x) + f.b() * &s * &s + f.c() * &s + f.d()
}

/// `(1, X, Y, Z) M (1, X, Y, Z)ᵀ`.
pub fn bilinear(m: &[Vec<Q>], x: &Q, y: &Q, z: &Q) -> Q {
    let v = [Q::one(), x.clone(), y.clone(), z.clone()];
    let mut acc = Q::zero();
    for i in 0..4 {
        for j in 0..4 {
            acc += &v[i] * &m[i][j] * &v[j];
        }
    }
    acc
}

pub fn random_q<R: Rng>(rng: &mut R, num: i64, den: i64) -> Q {
    qf(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

/// Random valid coefficients with small rational entries.
pub fn random_coefficients<R: Rng>(rng: &mut R) -> QuarticCoefficients {
    loop {
        let c = [0; 4].map(|_| random_q(rng, 20, 12));
        if let Ok(f) = QuarticCoefficients::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()) {
            return f;
        }
    }
}

pub fn rational(num: i64, den: i64) -> impl Strategy<Value = Q> {
    (-num..=num, 1..=den).prop_map(|(n, d)| qf(n, d))
}

pub fn coefficients() -> impl Strategy<Value = QuarticCoefficients> {
    (rational(12, 8), rational(12, 8), rational(12, 8), rational(12, 8))
        .prop_filter_map("A = B = 0", |(a, b, c, d)| QuarticCoefficients::new(a, b, c, d).ok())
}

/// Coefficients that hit the exact zeros of the family parameters often.
pub fn structured_coefficients() -> impl Strategy<Value = QuarticCoefficients> {
    let small = prop_oneof![Just(q(0)), rational(6, 4)];
    (small.clone(), small.clone(), small.clone(), small)
        .prop_filter_map("A = B = 0", |(a, b, c, d)| QuarticCoefficients::new(a, b, c, d).ok())
}

pub fn any_coefficients() -> impl Strategy<Value = QuarticCoefficients> {
    prop_oneof![coefficients(), structured_coefficients()]
}

pub fn positive() -> impl Strategy<Value = Q> {
    (1..=9i64, 1..=9i64).prop_map(|(n, d)| qf(n, d))
}

