//! Two-sector Fock space model.
//!
//! The combination is evaluated partly as two independent judgements (the
//! product or union sector, weight m²) and partly as one judgement of an
//! emergent concept (the superposition sector, weight n²).

use serde::Serialize;
use thiserror::Error;

use crate::hilbert_c3::c3_exists;
use crate::membership::{Connective, MembershipTriple};
use crate::num::Real;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FockWeights<F = f64> {
    pub m2: F,
    pub n2: F,
    /// The interference term ℜ⟨A|M|B⟩ of the superposition sector.
    pub interference: F,
}

impl<F: Real> FockWeights<F> {
    pub fn convex(m2: F) -> Self {
        Self { m2, n2: F::one() - m2, interference: F::zero() }
    }
}

#[derive(Debug, Error, Clone, Copy, PartialEq)]
pub enum FockError {
    #[error("sector weights give membership {value}, outside [0, 1]")]
    OutOfRange { value: f64 },
    #[error("product/union value equals the average but the combination weight differs")]
    Degenerate,
    #[error("convex weight m² = {m2} outside [0, 1]; the item needs interference")]
    Infeasible { m2: f64 },
}

/// Value of the two-judgement sector: product for conjunction, union for
/// disjunction.
pub fn sector_two<F: Real>(mu_a: F, mu_b: F, connective: Connective) -> F {
    match connective {
        Connective::Conjunction => mu_a * mu_b,
        Connective::Disjunction => mu_a + mu_b - mu_a * mu_b,
    }
}

pub fn fock_membership<F: Real>(mu_a: F, mu_b: F, w: &FockWeights<F>, connective: Connective) -> Result<F, FockError> {
    let avg = F::lit(0.5) * (mu_a + mu_b);
    let v = w.m2 * sector_two(mu_a, mu_b, connective) + w.n2 * (avg + w.interference);
    if v < -F::EPS || v > F::one() + F::EPS {
        return Err(FockError::OutOfRange { value: v.to_f64_lossy() });
    }
    Ok(v)
}

/// Zero-interference fit: μ = m²·s + (1 − m²)·avg.
pub fn solve_convex_weights<F: Real>(t: &MembershipTriple<F>) -> Result<FockWeights<F>, FockError> {
    let avg = F::lit(0.5) * (t.mu_a + t.mu_b);
    let s = sector_two(t.mu_a, t.mu_b, t.connective);
    let denom = avg - s;
    if denom.abs() <= F::EPS {
        return if (t.mu_combo - avg).abs() <= F::EPS {
            Ok(FockWeights::convex(F::zero()))
        } else {
            Err(FockError::Degenerate)
        };
    }
    let m2 = (avg - t.mu_combo) / denom;
    if m2 < -F::EPS || m2 > F::one() + F::EPS {
        return Err(FockError::Infeasible { m2: m2.to_f64_lossy() });
    }
    Ok(FockWeights::convex(m2.max(F::zero()).min(F::one())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelChoice {
    C3Interference,
    FockConvex,
    Unmodelable,
}

pub fn select_model<F: Real>(t: &MembershipTriple<F>) -> ModelChoice {
    if c3_exists(t).is_ok() {
        ModelChoice::C3Interference
    } else if solve_convex_weights(t).is_ok() {
        ModelChoice::FockConvex
    } else {
        ModelChoice::Unmodelable
    }
}
