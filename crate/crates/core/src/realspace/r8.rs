//! Emergent-concept model in ℝ⁸ = ℝ⁴ ⊕ ℝ⁴.
//!
//! The first four coordinates (x_AB, x_AB', x_A'B, x_A'B') carry the
//! classical, logical part of an item; the last four (x5..x8) carry the
//! quantum part. For a disjunction
//!
//! * A = span{e_AB, e_AB', e5, e_A} and B = span{e_AB, e_A'B, e5, e_B}, where
//!   e_A and e_B lie in the (e6, e7) plane at angle θ to each other;
//! * the combination is span{e_AB, e_AB', e_A'B, f5, f6}, with f5, f6 the
//!   emergent plane of [`EmergentFrame`].
//!
//! A conjunction is modelled through the complemented disjunction
//! (1 − μ(A), 1 − μ(B), 1 − μ(A and B)): the subspaces of A', B' and
//! "A' or B'" are the orthogonal complements of those of A, B and "A and B".
//! The returned vector lives in the frame where e_AB, e_AB', e_A'B, e_A'B'
//! keep their meaning for A and B; it is the disjunction-frame vector with
//! the coordinate involution (x1, x2, x3, x4, x5, x6, x7, x8) ↦
//! (x4, x3, x2, x1, x8, x7, x6, x5) applied, and the angle between e_A and
//! e_B in that frame is 180° − θ.
//!
//! Solving fixes the classical block from a target for the relative classical
//! weights (min/max rule for Δ-type items, sum rule for k-type items, the
//! midpoint rule for classical items) and the modularity condition
//! μ(A)·μ_c(B) = μ(B)·μ_c(A). What remains is a scalar equation in the
//! classical share μ_c(total) for each sign pattern of (x_A', x_B', c5),
//! located by a scan and refined by bisection.

use rayon::prelude::*;
use thiserror::Error;

use crate::membership::{classify, Connective, Label, MembershipTriple};
use crate::num::{deg_to_rad, sqrt_clamped, Real};

use super::classical::{classical_vector, R4Vector};
use super::rotation::{emergent_rotation, EmergentFrame};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairAngles<F = f64> {
    /// Angle between e_A and e_B, degrees, in (0°, 180°).
    pub theta: F,
    /// Tilt of the emergent plane, degrees, in [0°, 90°].
    pub phi: F,
}

impl<F: Real> PairAngles<F> {
    pub fn new(theta: F, phi: F) -> Result<Self, R8Error> {
        let ok_theta = theta > F::zero() && theta < F::lit(180.0);
        let ok_phi = phi >= F::zero() && phi <= F::lit(90.0);
        if !(ok_theta && ok_phi) {
            return Err(R8Error::BadAngles { theta: theta.to_f64_lossy(), phi: phi.to_f64_lossy() });
        }
        Ok(Self { theta, phi })
    }
}

#[derive(Debug, Error, Clone, Copy, PartialEq)]
pub enum R8Error {
    #[error("angles θ = {theta}°, φ = {phi}° are outside (0°, 180°) × [0°, 90°]")]
    BadAngles { theta: f64, phi: f64 },
    #[error("relative classical target {target} is not a classical triple with the measured weights")]
    InvalidTarget { target: f64 },
    #[error("no solution found; best residual {best_residual:e}")]
    NoSolution { best_residual: f64 },
}

#[derive(Debug, Error, Clone, Copy, PartialEq)]
pub enum FitError {
    #[error("no grid angle pair solves every item")]
    NoFeasibleAngles,
    #[error("empty item list")]
    Empty,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct R8Options<F = f64> {
    /// Largest accepted absolute residual.
    pub tolerance: F,
    /// Budget of scan passes and bisection steps.
    pub max_iterations: usize,
    /// Samples of μ_c(total) per scan pass.
    pub scan_points: usize,
    /// Proportionality factor between relative classical and measured weights
    /// in the frame that is solved (the disjunction frame).
    pub modularity_factor: F,
    /// Step of the x8 grid tried when no solution exists with x8 = 0.
    pub x8_step: F,
}

impl<F: Real> Default for R8Options<F> {
    fn default() -> Self {
        Self {
            tolerance: F::lit(1e-12),
            max_iterations: 100_000,
            scan_points: 1024,
            modularity_factor: F::one(),
            x8_step: F::lit(0.01),
        }
    }
}

impl<F: Real> R8Options<F> {
    /// Cheaper settings for searching many angle pairs.
    pub fn coarse() -> Self {
        Self { scan_points: 256, x8_step: F::lit(0.05), ..Self::default() }
    }
}

/// Weights read off a vector through the subspaces of the model.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Readout<F = f64> {
    pub mu_a: F,
    pub mu_b: F,
    pub mu_combo: F,
    pub norm_sqr: F,
}

/// Coordinates derived from a solution vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Derived<F = f64> {
    pub x_a: F,
    pub x_b: F,
    pub x_a_prime: F,
    pub x_b_prime: F,
    /// Coordinates on the emergent plane of the combination (first two) and
    /// on its complement within the quantum block (last two).
    pub c: [F; 4],
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RelativeWeights<F = f64> {
    pub mu_c_total: F,
    pub mu_q_total: F,
    /// Sector weights (A, B, combination) before normalization.
    pub mu_c: [F; 3],
    pub mu_q: [F; 3],
    /// `None` when the sector total vanishes.
    pub mu_c_r: Option<[F; 3]>,
    pub mu_q_r: Option<[F; 3]>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct R8Solution<F = f64> {
    /// (x_AB, x_AB', x_A'B, x_A'B', x5, x6, x7, x8).
    pub x: [F; 8],
    pub angles: PairAngles<F>,
    pub connective: Connective,
    pub derived: Derived<F>,
    pub residual: F,
    /// Relative classical weight targeted for the combination.
    pub classical_target: F,
    pub relative_weights: RelativeWeights<F>,
    /// For a conjunction, the vector in the frame of the complemented
    /// disjunction that was solved.
    pub dual: Option<[F; 8]>,
}

struct Trig<F> {
    sin_p: F,
    cos_p: F,
    sin_m: F,
    cos_m: F,
    sin_theta: F,
}

impl<F: Real> Trig<F> {
    fn new(theta: F) -> Self {
        let th = deg_to_rad(theta);
        let half = th / F::lit(2.0);
        let p = F::FRAC_PI_4() + half;
        let m = F::FRAC_PI_4() - half;
        Self { sin_p: p.sin(), cos_p: p.cos(), sin_m: m.sin(), cos_m: m.cos(), sin_theta: th.sin() }
    }

    /// (x_A, x_A', x_B, x_B') from (x6, x7).
    fn project(&self, x6: F, x7: F) -> (F, F, F, F) {
        (
            x6 * self.sin_p + x7 * self.cos_p,
            -x6 * self.cos_p + x7 * self.sin_p,
            x6 * self.sin_m + x7 * self.cos_m,
            x6 * self.cos_m - x7 * self.sin_m,
        )
    }

    /// (x6, x7) from (x_A', x_B').
    fn unprime(&self, ap: F, bp: F) -> (F, F) {
        // [−cos p, sin p; cos m, −sin m] has determinant −sin θ.
        let det = -self.sin_theta;
        let x6 = (ap * -self.sin_m - self.sin_p * bp) / det;
        let x7 = (-self.cos_p * bp - self.cos_m * ap) / det;
        (x6, x7)
    }
}

fn sq<F: Real>(v: F) -> F {
    v * v
}

fn norm_sqr<F: Real>(x: &[F; 8]) -> F {
    x.iter().fold(F::zero(), |acc, &v| acc + v * v)
}

/// Coordinate involution between the conjunction frame and the frame of the
/// complemented disjunction.
fn involution<F: Real>(x: &[F; 8]) -> [F; 8] {
    [x[3], x[2], x[1], x[0], x[7], x[6], x[5], x[4]]
}

fn disjunction_readout<F: Real>(x: &[F; 8], angles: &PairAngles<F>) -> (Readout<F>, Derived<F>) {
    let trig = Trig::new(angles.theta);
    let frame = emergent_rotation(angles.phi);
    let (xa, xap, xb, xbp) = trig.project(x[5], x[6]);
    let c = frame.c_coords(x);
    let base = sq(x[0]);
    let readout = Readout {
        mu_a: base + sq(x[1]) + sq(x[4]) + sq(xa),
        mu_b: base + sq(x[2]) + sq(x[4]) + sq(xb),
        mu_combo: base + sq(x[1]) + sq(x[2]) + sq(c[0]) + sq(c[1]),
        norm_sqr: norm_sqr(x),
    };
    (readout, Derived { x_a: xa, x_b: xb, x_a_prime: xap, x_b_prime: xbp, c })
}

/// Emergent plane of a conjunction: the complement, within the quantum
/// block, of the involuted plane span{f5, f6}.
fn conjunction_plane<F: Real>(frame: &EmergentFrame<F>) -> [[F; 8]; 4] {
    [
        involution(&frame.f(7)),
        involution(&frame.f(8)),
        involution(&frame.f(5)),
        involution(&frame.f(6)),
    ]
}

fn conjunction_readout<F: Real>(x: &[F; 8], angles: &PairAngles<F>) -> (Readout<F>, Derived<F>) {
    let trig = Trig::new(F::lit(180.0) - angles.theta);
    let frame = emergent_rotation(angles.phi);
    let (xa, xap, xb, xbp) = trig.project(x[5], x[6]);
    let plane = conjunction_plane(&frame);
    let c = plane.map(|g| (0..8).fold(F::zero(), |acc, i| acc + g[i] * x[i]));
    let base = sq(x[0]);
    let readout = Readout {
        mu_a: base + sq(x[1]) + sq(x[4]) + sq(xa),
        mu_b: base + sq(x[2]) + sq(x[4]) + sq(xb),
        mu_combo: base + sq(c[0]) + sq(c[1]),
        norm_sqr: norm_sqr(x),
    };
    (readout, Derived { x_a: xa, x_b: xb, x_a_prime: xap, x_b_prime: xbp, c })
}

/// Weights and derived coordinates of `x` under the model for `connective`.
pub fn readout<F: Real>(x: &[F; 8], angles: &PairAngles<F>, connective: Connective) -> (Readout<F>, Derived<F>) {
    match connective {
        Connective::Disjunction => disjunction_readout(x, angles),
        Connective::Conjunction => conjunction_readout(x, angles),
    }
}

fn sector_weights<F: Real>(x: &[F; 8], d: &Derived<F>, connective: Connective) -> ([F; 3], [F; 3]) {
    let base = sq(x[0]);
    let quantum_ab = sq(x[4]);
    let classical_combo = match connective {
        Connective::Disjunction => base + sq(x[1]) + sq(x[2]),
        Connective::Conjunction => base,
    };
    (
        [base + sq(x[1]), base + sq(x[2]), classical_combo],
        [quantum_ab + sq(d.x_a), quantum_ab + sq(d.x_b), sq(d.c[0]) + sq(d.c[1])],
    )
}

/// Residuals of the basic equations (three weights and the norm), the
/// modularity condition and, when given, the relative classical target of
/// the combination.
pub fn r8_residuals<F: Real>(
    x: &[F; 8],
    angles: &PairAngles<F>,
    t: &MembershipTriple<F>,
    modularity_target: Option<F>,
) -> Vec<F> {
    let (r, d) = readout(x, angles, t.connective);
    let (mu_c, _) = sector_weights(x, &d, t.connective);
    let mut out = vec![
        r.mu_a - t.mu_a,
        r.mu_b - t.mu_b,
        r.mu_combo - t.mu_combo,
        r.norm_sqr - F::one(),
        t.mu_a * mu_c[1] - t.mu_b * mu_c[0],
    ];
    if let Some(target) = modularity_target {
        let total = x[..4].iter().fold(F::zero(), |acc, &v| acc + v * v);
        out.push(mu_c[2] - target * total);
    }
    out
}

fn max_abs<F: Real>(v: &[F]) -> F {
    v.iter().fold(F::zero(), |acc, &r| acc.max(r.abs()))
}

pub fn relative_weights<F: Real>(s: &R8Solution<F>) -> RelativeWeights<F> {
    let (mu_c, mu_q) = sector_weights(&s.x, &s.derived, s.connective);
    let mu_c_total = s.x[..4].iter().fold(F::zero(), |acc, &v| acc + v * v);
    let mu_q_total = s.x[4..].iter().fold(F::zero(), |acc, &v| acc + v * v);
    let ratio = |w: [F; 3], total: F| {
        if total > F::EPS {
            Some(w.map(|v| v / total))
        } else {
            None
        }
    };
    RelativeWeights {
        mu_c_total,
        mu_q_total,
        mu_c,
        mu_q,
        mu_c_r: ratio(mu_c, mu_c_total),
        mu_q_r: ratio(mu_q, mu_q_total),
    }
}

/// Relative classical weight aimed at for the combination: the fuzzy min/max
/// rule for Δ-type items, the sum rule for k-type items and, for classical
/// items, the midpoint between the measured weight and the extreme classical
/// value (min(1, μ(A) + μ(B)) for a disjunction, min(μ(A), μ(B)) for a
/// conjunction).
pub fn classical_target<F: Real>(t: &MembershipTriple<F>) -> F {
    let (a, b, c) = (t.mu_a, t.mu_b, t.mu_combo);
    let one = F::one();
    let half = F::lit(0.5);
    let label = classify(t).label;
    match (t.connective, label) {
        (Connective::Disjunction, Label::DeltaNonclassical) => a.max(b),
        (Connective::Disjunction, Label::KNonclassical) => (a + b).min(one),
        (Connective::Disjunction, Label::Classical) => half * (c + (a + b).min(one)),
        (Connective::Conjunction, Label::DeltaNonclassical) => a.min(b),
        (Connective::Conjunction, Label::KNonclassical) => (a + b - one).max(F::zero()),
        (Connective::Conjunction, Label::Classical) => half * (c + a.min(b)),
    }
}

pub fn conjunction_dual<F: Real>(t: &MembershipTriple<F>) -> MembershipTriple<F> {
    t.complement_dual()
}

/// Scalar problem left once the classical block is fixed up to its share T.
struct Reduced<'a, F> {
    d: MembershipTriple<F>,
    rel: [F; 3],
    trig: &'a Trig<F>,
    cos_phi: F,
    sin_phi: F,
}

/// Quantum block at a given classical share.
struct QuantumPoint<F> {
    g: F,
    q: [F; 4],
}

impl<F: Real> Reduced<'_, F> {
    /// Radicands (x_A'², x_B'², c5²) at share `t`, with x8² = `s`.
    fn radicands(&self, t: F, s: F) -> [F; 3] {
        let one = F::one();
        [
            one - t - s - (self.d.mu_a - t * self.rel[0]),
            one - t - s - (self.d.mu_b - t * self.rel[1]),
            self.d.mu_combo - t * self.rel[2] - s,
        ]
    }

    /// Largest share at which all radicands are nonnegative.
    fn t_max(&self, s: F) -> Option<F> {
        let one = F::one();
        let at0 = self.radicands(F::zero(), s);
        if at0.iter().any(|&r| r < -F::EPS) {
            return None;
        }
        let slopes = [one - self.rel[0], one - self.rel[1], self.rel[2]];
        let mut hi = one;
        for (r0, k) in at0.iter().zip(slopes) {
            if k > F::zero() {
                hi = hi.min((*r0).max(F::zero()) / k);
            }
        }
        Some(hi)
    }

    fn eval(&self, t: F, s: F, signs: [F; 3]) -> Option<QuantumPoint<F>> {
        let [ra, rb, rc] = self.radicands(t, s);
        if ra < -F::EPS || rb < -F::EPS || rc < -F::EPS {
            return None;
        }
        let one = F::one();
        let ap = signs[0] * sqrt_clamped(ra);
        let bp = signs[1] * sqrt_clamped(rb);
        let c5 = signs[2] * sqrt_clamped(rc);
        let (x6, x7) = self.trig.unprime(ap, bp);
        let bis = (x6 + x7) * F::FRAC_1_SQRT_2();
        let x8 = s.sqrt();
        let rest = one - t - s;
        if self.cos_phi > F::lit(1e-6) {
            let x5 = (c5 - self.sin_phi * bis) / self.cos_phi;
            Some(QuantumPoint { g: x5 * x5 + x6 * x6 + x7 * x7 - rest, q: [x5, x6, x7, x8] })
        } else {
            let x5sq = rest - x6 * x6 - x7 * x7;
            if x5sq < -F::EPS {
                return None;
            }
            Some(QuantumPoint { g: self.sin_phi * bis - c5, q: [sqrt_clamped(x5sq), x6, x7, x8] })
        }
    }
}

struct Budget {
    left: usize,
}

impl Budget {
    fn take(&mut self) -> bool {
        if self.left == 0 {
            false
        } else {
            self.left -= 1;
            true
        }
    }
}

/// Classical shares at which the reduced equation vanishes.
fn roots_at<F: Real>(
    red: &Reduced<'_, F>,
    s: F,
    n: usize,
    budget: &mut Budget,
    best: &mut F,
) -> Vec<(F, [F; 4])> {
    let mut out = Vec::new();
    let Some(t_hi) = red.t_max(s) else {
        return out;
    };
    let one = F::one();
    let patterns = [[one, one, one], [one, -one, one], [-one, one, one], [-one, -one, one]];
    let n = n.max(8);
    for signs in patterns {
        if !budget.take() {
            return out;
        }
        let mut prev: Option<(F, F)> = None;
        for i in 0..=n {
            let t = t_hi * F::lit(i as f64) / F::lit(n as f64);
            let Some(p) = red.eval(t, s, signs) else {
                prev = None;
                continue;
            };
            *best = best.min(p.g.abs());
            if p.g.abs() <= F::TIGHT {
                out.push((t, p.q));
                prev = None;
                continue;
            }
            if let Some((t0, g0)) = prev {
                if g0.signum() != p.g.signum() {
                    if let Some(root) = bisect(red, s, signs, t0, g0, t, budget) {
                        out.push(root);
                    }
                }
            }
            prev = Some((t, p.g));
        }
    }
    out
}

fn bisect<F: Real>(
    red: &Reduced<'_, F>,
    s: F,
    signs: [F; 3],
    mut lo: F,
    g_lo: F,
    mut hi: F,
    budget: &mut Budget,
) -> Option<(F, [F; 4])> {
    for _ in 0..200 {
        if !budget.take() {
            return None;
        }
        let mid = (lo + hi) / F::lit(2.0);
        if mid <= lo || mid >= hi {
            break;
        }
        let p = red.eval(mid, s, signs)?;
        if p.g == F::zero() {
            return Some((mid, p.q));
        }
        if p.g.signum() == g_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = (lo + hi) / F::lit(2.0);
    red.eval(t, s, signs).map(|p| (t, p.q))
}

/// Solves in the disjunction frame for a disjunction triple `d` with relative
/// classical target `target`.
fn solve_disjunction_frame<F: Real>(
    d: &MembershipTriple<F>,
    target: F,
    angles: &PairAngles<F>,
    options: &R8Options<F>,
) -> Result<[F; 8], R8Error> {
    let lambda = options.modularity_factor;
    let rel = [lambda * d.mu_a, lambda * d.mu_b, target];
    let rel_triple = MembershipTriple { mu_a: rel[0], mu_b: rel[1], mu_combo: rel[2], connective: Connective::Disjunction };
    let unit = classical_vector(&rel_triple).map_err(|_| R8Error::InvalidTarget { target: target.to_f64_lossy() })?;
    let trig = Trig::new(angles.theta);
    let phi = deg_to_rad(angles.phi);
    let red = Reduced { d: *d, rel, trig: &trig, cos_phi: phi.cos(), sin_phi: phi.sin() };
    let mut budget = Budget { left: options.max_iterations };
    let mut best = F::infinity();

    let assemble = |t: F, q: [F; 4]| -> [F; 8] {
        let scale = sqrt_clamped(t);
        let R4Vector { x: u } = unit;
        let mut q = q;
        if let Some(&lead) = q.iter().find(|v| v.abs() > F::lit(1e-12)) {
            if lead < F::zero() {
                q = q.map(|v| -v);
            }
        }
        [u[0] * scale, u[1] * scale, u[2] * scale, u[3] * scale, q[0], q[1], q[2], q[3]]
            .map(|v| if v == F::zero() { F::zero() } else { v })
    };
    let accept = |x: &[F; 8]| -> F { max_abs(&r8_residuals(x, angles, d, Some(target))) };

    let pick = |roots: Vec<(F, [F; 4])>, best: &mut F| -> Option<[F; 8]> {
        let mut found: Option<(F, [F; 8])> = None;
        for (t, q) in roots {
            let x = assemble(t, q);
            let res = accept(&x);
            *best = best.min(res);
            if res <= options.tolerance && found.is_none_or(|(t0, _)| t > t0) {
                found = Some((t, x));
            }
        }
        found.map(|(_, x)| x)
    };

    // Pure classical representation: the quantum block vanishes.
    if (d.mu_combo - target).abs() <= F::EPS && (lambda - F::one()).abs() <= F::EPS {
        let x = assemble(F::one(), [F::zero(); 4]);
        if accept(&x) <= options.tolerance {
            return Ok(x);
        }
    }

    let roots = roots_at(&red, F::zero(), options.scan_points, &mut budget, &mut best);
    if let Some(x) = pick(roots, &mut best) {
        return Ok(x);
    }

    // Allow a component along e8, smallest first. Besides the regular grid,
    // try the levels at which a radicand vanishes at zero classical share:
    // there a root can exist at that level only.
    let step = options.x8_step;
    if step > F::zero() {
        let mut levels: Vec<(F, bool)> = Vec::new();
        let mut level = step;
        while level <= F::one() + F::EPS {
            levels.push((level, true));
            level = level + step;
        }
        for s in [d.mu_combo, F::one() - d.mu_a, F::one() - d.mu_b] {
            if s > F::EPS && s <= F::one() {
                levels.push((s.sqrt(), false));
            }
        }
        levels.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(std::cmp::Ordering::Equal));
        let mut prev_level = F::zero();
        for (level, on_grid) in levels {
            let roots = roots_at(&red, level * level, options.scan_points, &mut budget, &mut best);
            if let Some(mut x) = pick(roots, &mut best) {
                if on_grid {
                    // Shrink towards the smallest x8 that still admits a root.
                    let (mut lo, mut hi) = (prev_level, level);
                    for _ in 0..30 {
                        let mid = (lo + hi) / F::lit(2.0);
                        let roots = roots_at(&red, mid * mid, options.scan_points, &mut budget, &mut best);
                        match pick(roots, &mut best) {
                            Some(y) => {
                                x = y;
                                hi = mid;
                            }
                            None => lo = mid,
                        }
                    }
                }
                return Ok(x);
            }
            if budget.left == 0 {
                break;
            }
            prev_level = level;
        }
    }
    Err(R8Error::NoSolution { best_residual: best.to_f64_lossy() })
}

pub fn solve_r8<F: Real>(
    t: &MembershipTriple<F>,
    angles: &PairAngles<F>,
    options: &R8Options<F>,
) -> Result<R8Solution<F>, R8Error> {
    let angles = PairAngles::new(angles.theta, angles.phi)?;
    let target = classical_target(t);
    let (x, dual) = match t.connective {
        Connective::Disjunction => (solve_disjunction_frame(t, target, &angles, options)?, None),
        Connective::Conjunction => {
            let d = conjunction_dual(t);
            let y = solve_disjunction_frame(&d, F::one() - target, &angles, options)?;
            (involution(&y), Some(y))
        }
    };
    let residual = max_abs(&r8_residuals(&x, &angles, t, Some(target)));
    if residual > options.tolerance.max(F::EPS) {
        return Err(R8Error::NoSolution { best_residual: residual.to_f64_lossy() });
    }
    let (_, derived) = readout(&x, &angles, t.connective);
    let mut sol = R8Solution {
        x,
        angles,
        connective: t.connective,
        derived,
        residual,
        classical_target: target,
        relative_weights: RelativeWeights {
            mu_c_total: F::zero(),
            mu_q_total: F::zero(),
            mu_c: [F::zero(); 3],
            mu_q: [F::zero(); 3],
            mu_c_r: None,
            mu_q_r: None,
        },
        dual,
    };
    sol.relative_weights = relative_weights(&sol);
    Ok(sol)
}

/// Whether every item admits a solution at `angles`.
pub fn pair_solvable<F: Real>(items: &[MembershipTriple<F>], angles: &PairAngles<F>, options: &R8Options<F>) -> bool {
    items.iter().all(|t| solve_r8(t, angles, options).is_ok())
}

/// Scans θ and φ on a grid (in degrees) and returns the first angle pair, in
/// order of increasing θ and then φ, at which every item is solvable.
pub fn fit_pair_angles<F: Real>(
    items: &[MembershipTriple<F>],
    theta_step: F,
    phi_step: F,
    options: &R8Options<F>,
) -> Result<PairAngles<F>, FitError> {
    if items.is_empty() {
        return Err(FitError::Empty);
    }
    let to_count = |range: F, step: F| (range / step).floor().to_usize().unwrap_or(0);
    let n_theta = to_count(F::lit(180.0), theta_step);
    let n_phi = to_count(F::lit(90.0), phi_step);
    let thetas: Vec<F> = (1..=n_theta)
        .map(|i| theta_step * F::lit(i as f64))
        .filter(|&th| th < F::lit(180.0))
        .collect();
    thetas
        .par_iter()
        .find_map_first(|&theta| {
            (0..=n_phi).find_map(|j| {
                let angles = PairAngles { theta, phi: phi_step * F::lit(j as f64) };
                pair_solvable(items, &angles, options).then_some(angles)
            })
        })
        .ok_or(FitError::NoFeasibleAngles)
}
