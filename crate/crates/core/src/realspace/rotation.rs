//! Orthonormal frame of ℝ⁸ whose fifth and sixth vectors span the subspace
//! of the emergent concept.
//!
//! The frame is R_{5,b}(φ)·R_{68}(90°) applied to the standard basis, where
//! R_{5,b}(φ) rotates by φ in the plane of e5 and the bisector
//! b = (e6 + e7)/√2 and R_{68}(90°) sends e6 to e8.

use crate::num::{deg_to_rad, Real};

pub type Mat8<F> = [[F; 8]; 8];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EmergentFrame<F = f64> {
    /// Degrees.
    pub phi: F,
    /// Row-major; column k is the frame vector f_{k+1}.
    pub matrix: Mat8<F>,
}

fn identity<F: Real>() -> Mat8<F> {
    let mut m = [[F::zero(); 8]; 8];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = F::one();
    }
    m
}

fn matmul<F: Real>(a: &Mat8<F>, b: &Mat8<F>) -> Mat8<F> {
    let mut out = [[F::zero(); 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            out[i][j] = (0..8).fold(F::zero(), |acc, k| acc + a[i][k] * b[k][j]);
        }
    }
    out
}

/// Rotation by `angle` (radians) in the plane spanned by orthonormal `u`, `v`,
/// turning `u` towards `v`.
fn plane_rotation<F: Real>(u: &[F; 8], v: &[F; 8], angle: F) -> Mat8<F> {
    let mut m = identity::<F>();
    let (c, s) = (angle.cos(), angle.sin());
    for i in 0..8 {
        for j in 0..8 {
            m[i][j] = m[i][j] + (c - F::one()) * (u[i] * u[j] + v[i] * v[j]) + s * (v[i] * u[j] - u[i] * v[j]);
        }
    }
    m
}

fn unit<F: Real>(k: usize) -> [F; 8] {
    let mut e = [F::zero(); 8];
    e[k] = F::one();
    e
}

pub fn emergent_rotation<F: Real>(phi: F) -> EmergentFrame<F> {
    let r = F::FRAC_1_SQRT_2();
    let mut bisector = [F::zero(); 8];
    bisector[5] = r;
    bisector[6] = r;
    let r5b = plane_rotation(&unit(4), &bisector, deg_to_rad(phi));
    let r68 = plane_rotation(&unit(5), &unit(7), F::FRAC_PI_2());
    EmergentFrame { phi, matrix: matmul(&r5b, &r68) }
}

impl<F: Real> EmergentFrame<F> {
    /// Frame vector f_k for k in 1..=8.
    pub fn f(&self, k: usize) -> [F; 8] {
        let mut out = [F::zero(); 8];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.matrix[i][k - 1];
        }
        out
    }

    /// Coordinates (c5, c6, c7, c8) of `x` along f5..f8.
    pub fn c_coords(&self, x: &[F; 8]) -> [F; 4] {
        let mut c = [F::zero(); 4];
        for (j, cj) in c.iter_mut().enumerate() {
            *cj = (0..8).fold(F::zero(), |acc, i| acc + self.matrix[i][j + 4] * x[i]);
        }
        c
    }

    pub fn transpose_product(&self) -> Mat8<F> {
        let mut t = [[F::zero(); 8]; 8];
        for (i, row) in t.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.matrix[j][i];
            }
        }
        matmul(&self.matrix, &t)
    }
}
