//! Conjunction model with concept subspaces tilted by an angle θ.
//!
//! A = span{e1, e_A} and B = span{e1, e_B} with
//! e_A = (0, sin(π/4 + θ/2), cos(π/4 + θ/2), 0) and
//! e_B = (0, sin(π/4 − θ/2), cos(π/4 − θ/2), 0), so that θ is the angle
//! between e_A and e_B and θ = 90° recovers the canonical representation.
//! Disjunction triples are handled through their complemented conjunction.

use crate::membership::{Connective, MembershipTriple};
use crate::num::{deg_to_rad, rad_to_deg, sqrt_clamped, Real};

use super::classical::{R4Vector, RealSpaceError};

/// Signs chosen for ±√a and ±√b.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignPair(pub i8, pub i8);

impl SignPair {
    pub const PLUS: SignPair = SignPair(1, 1);

    pub fn product(self) -> i8 {
        self.0.signum() * self.1.signum()
    }
}

/// Closed range of θ (degrees) on which the quantum logic factor is
/// nonnegative for the given sign product. `lo == hi` for an isolated point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThetaInterval<F = f64> {
    pub sign_product: i8,
    pub lo: F,
    pub hi: F,
}

fn as_conjunction<F: Real>(t: &MembershipTriple<F>) -> MembershipTriple<F> {
    match t.connective {
        Connective::Conjunction => *t,
        Connective::Disjunction => t.complement_dual(),
    }
}

/// Returns (a, b) = (μ(A) − μ(A and B), μ(B) − μ(A and B)).
fn excess<F: Real>(t: &MembershipTriple<F>) -> Result<(F, F), RealSpaceError> {
    let a = t.mu_a - t.mu_combo;
    let b = t.mu_b - t.mu_combo;
    if a < -F::EPS || b < -F::EPS {
        return Err(RealSpaceError::NegativeRadicand);
    }
    Ok((a.max(F::zero()), b.max(F::zero())))
}

fn check_theta<F: Real>(theta: F) -> Result<F, RealSpaceError> {
    if !(theta > F::zero() && theta < F::lit(180.0)) {
        return Err(RealSpaceError::BadAngle(theta.to_f64_lossy()));
    }
    Ok(deg_to_rad(theta))
}

fn signed_roots<F: Real>(a: F, b: F, signs: SignPair) -> (F, F) {
    let sa = a.sqrt() * F::lit(f64::from(signs.0.signum()));
    let sb = b.sqrt() * F::lit(f64::from(signs.1.signum()));
    (sa, sb)
}

pub fn quantum_logic_factor<F: Real>(t: &MembershipTriple<F>, theta: F, signs: SignPair) -> Result<F, RealSpaceError> {
    let t = as_conjunction(t);
    let (a, b) = excess(&t)?;
    let th = check_theta(theta)?;
    let (sa, sb) = signed_roots(a, b, signs);
    let two = F::lit(2.0);
    let s2 = th.sin() * th.sin();
    Ok(F::one() - t.mu_combo - (a + b - two * sa * sb * th.cos()) / s2)
}

/// The factor is a downward parabola in cos θ with roots
/// (±√a·±√b ± √D) / (1 − μ(A and B)), D = (1 − μ(A))(1 − μ(B)).
pub fn theta_feasible_intervals<F: Real>(t: &MembershipTriple<F>) -> Result<Vec<ThetaInterval<F>>, RealSpaceError> {
    let t = as_conjunction(t);
    let (a, b) = excess(&t)?;
    let one = F::one();
    let rest = one - t.mu_combo;
    if rest <= F::EPS {
        return Ok(Vec::new());
    }
    let d = sqrt_clamped((one - t.mu_a) * (one - t.mu_b));
    let s = (a * b).sqrt();
    let products: &[i8] = if s == F::zero() { &[1] } else { &[1, -1] };
    let mut out = Vec::new();
    for &p in products {
        let sp = s * F::lit(f64::from(p));
        let c_lo = (sp - d) / rest;
        let c_hi = (sp + d) / rest;
        if c_lo > one + F::EPS || c_hi < -one - F::EPS {
            continue;
        }
        let clip = |c: F| c.max(-one).min(one);
        out.push(ThetaInterval {
            sign_product: if s == F::zero() { 0 } else { p },
            lo: rad_to_deg(clip(c_hi).acos()),
            hi: rad_to_deg(clip(c_lo).acos()),
        });
    }
    Ok(out)
}

/// Components (√μ(A and B), x2, x3, √q) of the item vector for the tilted
/// subspaces at angle θ.
pub fn ktype_vector<F: Real>(t: &MembershipTriple<F>, theta: F, signs: SignPair) -> Result<R4Vector<F>, RealSpaceError> {
    let q = quantum_logic_factor(t, theta, signs)?;
    if q < -F::EPS {
        return Err(RealSpaceError::Infeasible { theta: theta.to_f64_lossy(), q: q.to_f64_lossy() });
    }
    let t = as_conjunction(t);
    let (a, b) = excess(&t)?;
    let th = deg_to_rad(theta);
    let (sa, sb) = signed_roots(a, b, signs);
    let quarter = F::FRAC_PI_4();
    let half = th / F::lit(2.0);
    let (plus, minus) = (quarter + half, quarter - half);
    let sin = th.sin();
    let x2 = (sa * minus.cos() - sb * plus.cos()) / sin;
    let x3 = (-sa * minus.sin() + sb * plus.sin()) / sin;
    Ok(R4Vector { x: [sqrt_clamped(t.mu_combo), x2, x3, sqrt_clamped(q)] })
}
