//! Membership computed from intersection and sum subspaces can never show
//! overextension of the conjunction or underextension of the disjunction.

use thiserror::Error;

use crate::num::Real;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SubspaceError {
    #[error("spanning set {which} is not orthonormal (worst deviation {deviation})")]
    InvalidSubspace { which: char, deviation: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("state vector is not a unit vector (norm² = {0})")]
    NotUnit(f64),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Deviations<F = f64> {
    pub mu_a: F,
    pub mu_b: F,
    pub mu_and: F,
    pub mu_or: F,
    /// μ(A ∩ B) − min(μ(A), μ(B)).
    pub delta_c: F,
    /// max(μ(A), μ(B)) − μ(A + B).
    pub delta_d: F,
}

impl<F: Real> Deviations<F> {
    pub fn holds(&self, eps: F) -> bool {
        self.delta_c <= eps && self.delta_d <= eps
    }
}

fn dot<F: Real>(u: &[F], v: &[F]) -> F {
    u.iter().zip(v).fold(F::zero(), |acc, (&a, &b)| acc + a * b)
}

fn check_orthonormal<F: Real>(n: usize, basis: &[Vec<F>], which: char) -> Result<(), SubspaceError> {
    let mut worst = F::zero();
    for (i, u) in basis.iter().enumerate() {
        if u.len() != n {
            return Err(SubspaceError::Dimension { expected: n, got: u.len() });
        }
        for (j, v) in basis.iter().enumerate().take(i + 1) {
            let target = if i == j { F::one() } else { F::zero() };
            worst = worst.max((dot(u, v) - target).abs());
        }
    }
    if worst > F::EPS {
        return Err(SubspaceError::InvalidSubspace { which, deviation: worst.to_f64_lossy() });
    }
    Ok(())
}

/// Extends `basis` (orthonormal) by the directions of `candidates` that are
/// not already spanned, using Gram-Schmidt with a second orthogonalization
/// pass. Candidates whose remainder has norm below the rank cut are dropped.
fn extend_basis<F: Real>(mut basis: Vec<Vec<F>>, candidates: &[Vec<F>]) -> Vec<Vec<F>> {
    let cut = F::lit(1e-7);
    for c in candidates {
        let mut r = c.clone();
        for _ in 0..2 {
            for b in &basis {
                let p = dot(&r, b);
                r.iter_mut().zip(b).for_each(|(ri, &bi)| *ri = *ri - p * bi);
            }
        }
        let norm = dot(&r, &r).sqrt();
        if norm > cut {
            basis.push(r.into_iter().map(|v| v / norm).collect());
        }
    }
    basis
}

fn standard_basis<F: Real>(n: usize) -> Vec<Vec<F>> {
    (0..n).map(|k| (0..n).map(|i| if i == k { F::one() } else { F::zero() }).collect()).collect()
}

/// Orthonormal basis of the orthogonal complement of span(`basis`).
fn complement<F: Real>(n: usize, basis: &[Vec<F>]) -> Vec<Vec<F>> {
    extend_basis(basis.to_vec(), &standard_basis(n)).split_off(basis.len())
}

fn weight<F: Real>(basis: &[Vec<F>], x: &[F]) -> F {
    basis.iter().fold(F::zero(), |acc, b| {
        let c = dot(b, x);
        acc + c * c
    })
}

/// Squared projections of `x` onto A, B, A ∩ B and A + B, with the two
/// deviations. The sum is spanned by A ∪ B; the intersection is the
/// orthogonal complement of A⊥ + B⊥.
pub fn theorem9_check<F: Real>(
    n: usize,
    subspace_a: &[Vec<F>],
    subspace_b: &[Vec<F>],
    x: &[F],
) -> Result<Deviations<F>, SubspaceError> {
    if x.len() != n {
        return Err(SubspaceError::Dimension { expected: n, got: x.len() });
    }
    check_orthonormal(n, subspace_a, 'A')?;
    check_orthonormal(n, subspace_b, 'B')?;
    let norm2 = dot(x, x);
    if (norm2 - F::one()).abs() > F::EPS {
        return Err(SubspaceError::NotUnit(norm2.to_f64_lossy()));
    }
    let mu_a = weight(subspace_a, x);
    let mu_b = weight(subspace_b, x);
    let sum = extend_basis(subspace_a.to_vec(), subspace_b);
    let perp_sum = extend_basis(complement(n, subspace_a), &complement(n, subspace_b));
    let mu_or = weight(&sum, x);
    let mu_and = (norm2 - weight(&perp_sum, x)).max(F::zero());
    Ok(Deviations {
        mu_a,
        mu_b,
        mu_and,
        mu_or,
        delta_c: mu_and - mu_a.min(mu_b),
        delta_d: mu_a.max(mu_b) - mu_or,
    })
}
