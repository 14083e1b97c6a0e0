//! Interference model of a combination in a three-dimensional Hilbert space.
//!
//! The item state for the combination is the normalized superposition of the
//! states for A and B. Membership is the expectation of the projector onto
//! the span of the first two basis vectors, so the combination's weight is
//! the average of μ(A) and μ(B) plus an interference term controlled by the
//! relative phase β of |B⟩.

use serde::Serialize;
use thiserror::Error;

use crate::membership::{Connective, MembershipTriple};
use crate::num::{deg_to_rad, rad_to_deg, sqrt_clamped, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum C3Status {
    Ok,
    /// μ(A) or μ(B) is 0 or 1, where the construction divides by zero.
    DegenerateWeight,
    /// The required interference exceeds what two unit vectors can produce.
    CosOutOfRange,
}

impl C3Status {
    pub fn is_ok(self) -> bool {
        self == C3Status::Ok
    }
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum C3Error {
    #[error("item cannot be represented by interference alone ({0:?})")]
    NotRepresentable(C3Status),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct C3Model<F = f64> {
    pub a: F,
    pub b: F,
    /// True when the construction was carried out on 1 − μ(A), 1 − μ(B).
    pub swapped: bool,
    pub vec_a: [F; 3],
    /// |B⟩ without its global phase factor e^{iβ}.
    pub vec_b: [F; 3],
    /// Interference angle in degrees.
    pub beta: F,
    pub connective: Connective,
}

fn branch<F: Real>(mu_a: F, mu_b: F) -> (F, F, bool) {
    let one = F::one();
    if mu_a + mu_b >= one {
        (mu_a, mu_b, false)
    } else {
        (one - mu_a, one - mu_b, true)
    }
}

fn is_degenerate<F: Real>(mu: F) -> bool {
    mu.abs() <= F::EPS || (mu - F::one()).abs() <= F::EPS
}

/// Ratio whose arccos is β, before any clamping.
fn cos_beta<F: Real>(t: &MembershipTriple<F>, a: F, b: F) -> F {
    let one = F::one();
    let two = F::lit(2.0);
    let half_span = sqrt_clamped((one - a) * (one - b));
    (two * t.mu_combo - t.mu_a - t.mu_b) / (two * half_span)
}

pub fn c3_exists<F: Real>(t: &MembershipTriple<F>) -> C3Status {
    if is_degenerate(t.mu_a) || is_degenerate(t.mu_b) {
        return C3Status::DegenerateWeight;
    }
    let one = F::one();
    let two = F::lit(2.0);
    let (a, b, _) = branch(t.mu_a, t.mu_b);
    let lhs = (two * t.mu_combo - t.mu_a - t.mu_b).abs();
    let rhs = two * sqrt_clamped((one - a) * (one - b));
    if lhs > rhs + F::EPS {
        C3Status::CosOutOfRange
    } else {
        C3Status::Ok
    }
}

pub fn build_c3<F: Real>(t: &MembershipTriple<F>) -> Result<C3Model<F>, C3Error> {
    let status = c3_exists(t);
    if !status.is_ok() {
        return Err(C3Error::NotRepresentable(status));
    }
    let one = F::one();
    let (a, b, swapped) = branch(t.mu_a, t.mu_b);
    let vec_a = [a.sqrt(), F::zero(), sqrt_clamped(one - a)];
    let vec_b = [
        sqrt_clamped((one - a) * (one - b) / a),
        sqrt_clamped((a + b - one) / a),
        -sqrt_clamped(one - b),
    ];
    let cos = cos_beta(t, a, b).max(-one).min(one);
    Ok(C3Model {
        a,
        b,
        swapped,
        vec_a,
        vec_b,
        beta: rad_to_deg(cos.acos()),
        connective: t.connective,
    })
}

impl<F: Real> C3Model<F> {
    /// Largest possible size of the interference term.
    pub fn interference_bound(&self) -> F {
        let one = F::one();
        sqrt_clamped((one - self.a) * (one - self.b))
    }

    /// The interference term ℜ⟨A|M|B⟩ contributed at angle β.
    pub fn interference(&self) -> F {
        self.interference_bound() * deg_to_rad(self.beta).cos()
    }

    pub fn mu_a(&self) -> F {
        if self.swapped {
            F::one() - self.a
        } else {
            self.a
        }
    }

    pub fn mu_b(&self) -> F {
        if self.swapped {
            F::one() - self.b
        } else {
            self.b
        }
    }
}

/// Weights implied by a model.
pub fn c3_predict<F: Real>(m: &C3Model<F>) -> MembershipTriple<F> {
    let half = F::lit(0.5);
    let (mu_a, mu_b) = (m.mu_a(), m.mu_b());
    MembershipTriple {
        mu_a,
        mu_b,
        mu_combo: half * (mu_a + mu_b) + m.interference(),
        connective: m.connective,
    }
}
