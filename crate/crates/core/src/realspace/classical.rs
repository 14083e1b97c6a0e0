use thiserror::Error;

use crate::membership::{Connective, MembershipTriple};
use crate::num::{sqrt_clamped, Real};

#[derive(Debug, Error, Clone, Copy, PartialEq)]
pub enum RealSpaceError {
    #[error("item is not classical: component {component} has radicand {radicand}")]
    NotClassical { component: usize, radicand: f64 },
    #[error("negative radicand: the item is Δ-type and the tilted-subspace model does not apply")]
    NegativeRadicand,
    #[error("angle {theta}° gives a negative quantum logic factor {q}")]
    Infeasible { theta: f64, q: f64 },
    #[error("angle {0}° is outside the open interval (0°, 180°)")]
    BadAngle(f64),
}

/// Unit vector (x_AB, x_AB', x_A'B, x_A'B') in the canonical four-dimensional
/// representation where A = span{e1, e2} and B = span{e1, e3}.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct R4Vector<F = f64> {
    pub x: [F; 4],
}

impl<F: Real> R4Vector<F> {
    pub fn norm_sqr(&self) -> F {
        self.x.iter().fold(F::zero(), |acc, &v| acc + v * v)
    }
}

fn squares<F: Real>(t: &MembershipTriple<F>) -> [F; 4] {
    let one = F::one();
    let (a, b, c) = (t.mu_a, t.mu_b, t.mu_combo);
    match t.connective {
        Connective::Conjunction => [c, a - c, b - c, one - a - b + c],
        Connective::Disjunction => [a + b - c, c - b, c - a, one - c],
    }
}

/// Nonnegative square-root representation of a classical item.
pub fn classical_vector<F: Real>(t: &MembershipTriple<F>) -> Result<R4Vector<F>, RealSpaceError> {
    let sq = squares(t);
    if let Some((i, r)) = sq.iter().enumerate().find(|(_, r)| **r < -F::EPS) {
        return Err(RealSpaceError::NotClassical { component: i, radicand: r.to_f64_lossy() });
    }
    Ok(R4Vector { x: sq.map(sqrt_clamped) })
}

/// Squared projections of a vector on A, B and their meet or join.
pub fn reconstruct_from_vector<F: Real>(v: &R4Vector<F>, connective: Connective) -> MembershipTriple<F> {
    let [p, q, r, _] = v.x.map(|c| c * c);
    let mu_combo = match connective {
        Connective::Conjunction => p,
        Connective::Disjunction => p + q + r,
    };
    MembershipTriple { mu_a: p + q, mu_b: p + r, mu_combo, connective }
}
