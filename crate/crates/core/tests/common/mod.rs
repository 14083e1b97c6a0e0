//! Independent oracles shared by the integration tests. None of these call
//! into the library's numerical routines; they rebuild each quantity from
//! its geometric definition.

#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use qconcept::membership::{Connective, MembershipTriple};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Projector onto the span of the given orthonormal columns.
pub fn projector(n: usize, basis: &[Vec<f64>]) -> DMatrix<f64> {
    let m = DMatrix::from_fn(n, basis.len(), |i, j| basis[j][i]);
    &m * m.transpose()
}

pub fn weight(p: &DMatrix<f64>, x: &[f64]) -> f64 {
    let v = DVector::from_column_slice(x);
    v.dot(&(p * &v))
}

pub fn unit(n: usize, k: usize) -> Vec<f64> {
    let mut e = vec![0.0; n];
    e[k] = 1.0;
    e
}

/// Membership weights of an eight-dimensional disjunction state, read
/// through explicitly constructed subspaces: A = span{e1, e2, e5, u_A},
/// B = span{e1, e3, e5, u_B}, and the combination
/// span{e1, e2, e3} ⊕ span{f5, f6}, where u_A and u_B lie in the (e6, e7)
/// plane at angle θ and f5 tilts e5 by φ towards (e6 + e7)/√2, f6 = e8.
pub fn r8_disjunction_weights(x: &[f64; 8], theta: f64, phi: f64) -> (f64, f64, f64) {
    let th = theta.to_radians();
    let p = std::f64::consts::FRAC_PI_4 + th / 2.0;
    let m = std::f64::consts::FRAC_PI_4 - th / 2.0;
    let mut u_a = vec![0.0; 8];
    u_a[5] = p.sin();
    u_a[6] = p.cos();
    let mut u_b = vec![0.0; 8];
    u_b[5] = m.sin();
    u_b[6] = m.cos();
    let ph = phi.to_radians();
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let mut f5 = vec![0.0; 8];
    f5[4] = ph.cos();
    f5[5] = r * ph.sin();
    f5[6] = r * ph.sin();
    let pa = projector(8, &[unit(8, 0), unit(8, 1), unit(8, 4), u_a]);
    let pb = projector(8, &[unit(8, 0), unit(8, 2), unit(8, 4), u_b]);
    let pc = projector(8, &[unit(8, 0), unit(8, 1), unit(8, 2), f5, unit(8, 7)]);
    (weight(&pa, x), weight(&pb, x), weight(&pc, x))
}

/// Conjunction weights of `x` defined as complements of the disjunction
/// weights of the coordinate-permuted vector in the complemented frame.
pub fn r8_conjunction_weights(x: &[f64; 8], theta: f64, phi: f64) -> (f64, f64, f64) {
    let y = [x[3], x[2], x[1], x[0], x[7], x[6], x[5], x[4]];
    let (a, b, c) = r8_disjunction_weights(&y, theta, phi);
    (1.0 - a, 1.0 - b, 1.0 - c)
}

/// Pairwise and Kolmogorov inequalities written out literally.
pub fn classical_by_inequalities(t: &MembershipTriple<f64>, eps: f64) -> bool {
    let (a, b, c) = (t.mu_a, t.mu_b, t.mu_combo);
    match t.connective {
        Connective::Conjunction => c <= a + eps && c <= b + eps && 1.0 - a - b + c >= -eps,
        Connective::Disjunction => a <= c + eps && b <= c + eps && a + b - c >= -eps,
    }
}

/// Random triple drawn so that it is classical: atoms of a four-point
/// probability space are sampled and the weights read off them.
pub fn random_classical(r: &mut impl Rng, connective: Connective) -> MembershipTriple<f64> {
    let mut p: [f64; 4] = [r.gen(), r.gen(), r.gen(), r.gen()];
    let s: f64 = p.iter().sum();
    p.iter_mut().for_each(|v| *v /= s);
    let (a, b) = (p[0] + p[1], p[0] + p[2]);
    let combo = match connective {
        Connective::Conjunction => p[0],
        Connective::Disjunction => p[0] + p[1] + p[2],
    };
    MembershipTriple { mu_a: a.min(1.0), mu_b: b.min(1.0), mu_combo: combo.min(1.0), connective }
}

/// Random orthonormal n×n matrix from Gram-Schmidt on uniform entries.
pub fn random_orthonormal(r: &mut impl Rng, n: usize) -> DMatrix<f64> {
    DMatrix::from_fn(n, n, |_, _| r.gen_range(-1.0..1.0)).qr().q()
}

pub fn columns(m: &DMatrix<f64>, range: std::ops::Range<usize>) -> Vec<Vec<f64>> {
    range.map(|j| m.column(j).iter().copied().collect()).collect()
}

pub fn random_unit(r: &mut impl Rng, n: usize) -> Vec<f64> {
    let v = DVector::from_fn(n, |_, _| r.gen_range(-1.0..1.0)).normalize();
    v.iter().copied().collect()
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Returns the
/// eigenvalues and the eigenvectors as columns.
pub fn jacobi_eigen(mut a: DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let n = a.nrows();
    let mut v = DMatrix::<f64>::identity(n, n);
    for _sweep in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[(i, j)].powi(2)).sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[(p, q)].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * a[(p, q)]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    ((0..n).map(|i| a[(i, i)]).collect(), v)
}

/// Meet and join weights from a Jacobi eigendecomposition of P_A + P_B:
/// eigenvalue 2 spans the intersection and nonzero eigenvalues span the sum.
pub fn meet_join_weights(n: usize, a: &[Vec<f64>], b: &[Vec<f64>], x: &[f64]) -> (f64, f64) {
    let sum = projector(n, a) + projector(n, b);
    let (values, vectors) = jacobi_eigen(sum);
    let xv = DVector::from_column_slice(x);
    let (mut meet, mut join) = (0.0, 0.0);
    for (k, &lambda) in values.iter().enumerate() {
        let c = vectors.column(k).dot(&xv).powi(2);
        if lambda > 1e-7 {
            join += c;
        }
        if lambda > 2.0 - 1e-7 {
            meet += c;
        }
    }
    (meet, join)
}
