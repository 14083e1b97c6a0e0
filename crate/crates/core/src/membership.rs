//! Membership triples, deviation factors, classification and explicit
//! Kolmogorovian witnesses.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::num::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Connective {
    #[serde(rename = "conj")]
    Conjunction,
    #[serde(rename = "disj")]
    Disjunction,
}

impl Connective {
    pub fn as_str(self) -> &'static str {
        match self {
            Connective::Conjunction => "conj",
            Connective::Disjunction => "disj",
        }
    }

    pub fn dual(self) -> Self {
        match self {
            Connective::Conjunction => Connective::Disjunction,
            Connective::Disjunction => Connective::Conjunction,
        }
    }
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TripleError {
    #[error("weight {field} = {value} lies outside [0, 1]")]
    OutOfRange { field: &'static str, value: f64 },
    #[error("weight {field} is not a finite number")]
    NotFinite { field: &'static str },
}

/// Measured weights of an item for concepts A, B and their combination.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MembershipTriple<F = f64> {
    pub mu_a: F,
    pub mu_b: F,
    /// μ(A and B) or μ(A or B) depending on `connective`.
    pub mu_combo: F,
    pub connective: Connective,
}

impl<F: Real> MembershipTriple<F> {
    /// Validating constructor. Values within `F::EPS` of the unit interval are
    /// accepted as given.
    pub fn new(mu_a: F, mu_b: F, mu_combo: F, connective: Connective) -> Result<Self, TripleError> {
        for (field, v) in [("mu_a", mu_a), ("mu_b", mu_b), ("mu_combo", mu_combo)] {
            if !v.is_finite() {
                return Err(TripleError::NotFinite { field });
            }
            if v < -F::EPS || v > F::one() + F::EPS {
                return Err(TripleError::OutOfRange { field, value: v.to_f64_lossy() });
            }
        }
        Ok(Self { mu_a, mu_b, mu_combo, connective })
    }

    pub fn conj(mu_a: F, mu_b: F, mu_combo: F) -> Result<Self, TripleError> {
        Self::new(mu_a, mu_b, mu_combo, Connective::Conjunction)
    }

    pub fn disj(mu_a: F, mu_b: F, mu_combo: F) -> Result<Self, TripleError> {
        Self::new(mu_a, mu_b, mu_combo, Connective::Disjunction)
    }

    pub fn swapped(&self) -> Self {
        Self { mu_a: self.mu_b, mu_b: self.mu_a, ..*self }
    }

    /// Complemented weights under the other connective (De Morgan dual).
    pub fn complement_dual(&self) -> Self {
        let one = F::one();
        Self {
            mu_a: one - self.mu_a,
            mu_b: one - self.mu_b,
            mu_combo: one - self.mu_combo,
            connective: self.connective.dual(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Label {
    Classical,
    DeltaNonclassical,
    KNonclassical,
}

impl Label {
    pub fn as_str(self) -> &'static str {
        match self {
            Label::Classical => "classical",
            Label::DeltaNonclassical => "delta_nonclassical",
            Label::KNonclassical => "k_nonclassical",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Classification<F = f64> {
    pub label: Label,
    pub delta: F,
    pub k: F,
}

/// Returns `(delta, k)`: the deviation from the fuzzy min/max rule and the
/// Kolmogorovian factor.
pub fn classicality_factors<F: Real>(t: &MembershipTriple<F>) -> (F, F) {
    let one = F::one();
    let (a, b, c) = (t.mu_a, t.mu_b, t.mu_combo);
    match t.connective {
        Connective::Conjunction => (c - a.min(b), one - a - b + c),
        Connective::Disjunction => (a.max(b) - c, a + b - c),
    }
}

pub fn classify<F: Real>(t: &MembershipTriple<F>) -> Classification<F> {
    classify_with(t, F::EPS)
}

pub fn classify_with<F: Real>(t: &MembershipTriple<F>, eps: F) -> Classification<F> {
    let (delta, k) = classicality_factors(t);
    let label = if delta > eps {
        Label::DeltaNonclassical
    } else if k < -eps {
        Label::KNonclassical
    } else {
        Label::Classical
    };
    Classification { label, delta, k }
}

/// Which of the three classicality inequalities an item breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Inequality {
    /// μ(A and B) ≤ μ(A), or μ(A) ≤ μ(A or B).
    BoundByA,
    /// μ(A and B) ≤ μ(B), or μ(B) ≤ μ(A or B).
    BoundByB,
    /// The Kolmogorovian factor is nonnegative.
    Kolmogorov,
}

impl Inequality {
    /// Position of the inequality within its group of three (1-based).
    pub fn index(self) -> u8 {
        match self {
            Inequality::BoundByA => 1,
            Inequality::BoundByB => 2,
            Inequality::Kolmogorov => 3,
        }
    }
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum WitnessError {
    #[error("no classical probability model: inequality {} is violated", .0.index())]
    NotClassical(Inequality),
}

/// Atom probabilities of a four-point sample space with E_A = {1, 2} and
/// E_B = {1, 3}.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KolmogorovWitness<F = f64> {
    pub p: [F; 4],
}

pub fn kolmogorov_witness<F: Real>(t: &MembershipTriple<F>) -> Result<KolmogorovWitness<F>, WitnessError> {
    let one = F::one();
    let (a, b, c) = (t.mu_a, t.mu_b, t.mu_combo);
    let (p, slack_a, slack_b, factor) = match t.connective {
        Connective::Conjunction => ([c, a - c, b - c, one - a - b + c], a - c, b - c, one - a - b + c),
        Connective::Disjunction => ([a + b - c, c - b, c - a, one - c], c - a, c - b, a + b - c),
    };
    for (slack, ineq) in [
        (slack_a, Inequality::BoundByA),
        (slack_b, Inequality::BoundByB),
        (factor, Inequality::Kolmogorov),
    ] {
        if slack < -F::EPS {
            return Err(WitnessError::NotClassical(ineq));
        }
    }
    let p = p.map(|v| if v < F::zero() { F::zero() } else { v });
    Ok(KolmogorovWitness { p })
}

/// Brute-force check of a witness over all 16 events of the sample space.
pub fn verify_witness<F: Real>(w: &KolmogorovWitness<F>, t: &MembershipTriple<F>) -> bool {
    verify_witness_with(w, t, F::TIGHT)
}

pub fn verify_witness_with<F: Real>(w: &KolmogorovWitness<F>, t: &MembershipTriple<F>, tol: F) -> bool {
    let one = F::one();
    if w.p.iter().any(|p| !p.is_finite()) {
        return false;
    }
    for mask in 0u8..16 {
        let s = (0..4)
            .filter(|i| mask & (1 << i) != 0)
            .fold(F::zero(), |acc, i| acc + w.p[i]);
        if s < -tol || s > one + tol {
            return false;
        }
    }
    let prob = |event: &[usize]| event.iter().fold(F::zero(), |acc, &i| acc + w.p[i]);
    let total = prob(&[0, 1, 2, 3]);
    let e_a = prob(&[0, 1]);
    let e_b = prob(&[0, 2]);
    let combo = match t.connective {
        Connective::Conjunction => prob(&[0]),
        Connective::Disjunction => prob(&[0, 1, 2]),
    };
    let close = |x: F, y: F| (x - y).abs() <= tol;
    close(total, one) && close(e_a, t.mu_a) && close(e_b, t.mu_b) && close(combo, t.mu_combo)
}
