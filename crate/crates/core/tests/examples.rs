//! Worked examples for every operation, checked against printed values or
//! against values recomputed here from first principles.

#![allow(clippy::approx_constant)]

mod common;

use approx::assert_abs_diff_eq;
use qconcept::data::embedded_samples;
use qconcept::fock::{fock_membership, select_model, solve_convex_weights, FockError, FockWeights, ModelChoice};
use qconcept::hilbert_c3::{build_c3, c3_exists, c3_predict, C3Status};
use qconcept::membership::{
    classicality_factors, classify, kolmogorov_witness, verify_witness, Connective, Inequality, KolmogorovWitness, Label,
    MembershipTriple, WitnessError,
};
use qconcept::realspace::{
    classical_vector, conjunction_dual, emergent_rotation, fit_pair_angles, ktype_vector, pair_solvable,
    quantum_logic_factor, r8_residuals, readout, reconstruct_from_vector, solve_r8, theorem9_check,
    theta_feasible_intervals, FitError, PairAngles, R4Vector, R8Error, R8Options, SignPair,
};

fn conj(a: f64, b: f64, c: f64) -> MembershipTriple<f64> {
    MembershipTriple::conj(a, b, c).unwrap()
}

fn disj(a: f64, b: f64, c: f64) -> MembershipTriple<f64> {
    MembershipTriple::disj(a, b, c).unwrap()
}

fn sample(pair: &str, item: &str) -> MembershipTriple<f64> {
    embedded_samples().lookup(pair, item).unwrap().triple
}

#[test]
fn triple_validation() {
    assert!(MembershipTriple::conj(1.2, 0.5, 0.5).is_err());
    assert!(MembershipTriple::disj(f64::NAN, 0.5, 0.5).is_err());
    assert!(MembershipTriple::conj(1.0 + 1e-10, 0.0 - 1e-10, 0.5).is_ok());
}

#[test]
fn factors_examples() {
    let (d, k) = classicality_factors(&conj(0.725, 0.825, 0.825));
    assert_abs_diff_eq!(d, 0.1, epsilon = 1e-12);
    assert_abs_diff_eq!(k, 0.275, epsilon = 1e-12);
    let (d, k) = classicality_factors(&disj(0.7, 0.3, 0.25));
    assert_abs_diff_eq!(d, 0.45, epsilon = 1e-12);
    assert_abs_diff_eq!(k, 0.75, epsilon = 1e-12);
    assert_eq!(classicality_factors(&conj(0.0, 0.0, 0.0)), (0.0, 1.0));
}

#[test]
fn classify_examples() {
    assert_eq!(classify(&conj(0.725, 0.825, 0.825)).label, Label::DeltaNonclassical);
    assert_eq!(classify(&disj(0.9, 0.4, 0.95)).label, Label::Classical);
    assert_eq!(classify(&disj(0.2, 0.1, 0.425)).label, Label::KNonclassical);
}

#[test]
fn boundary_triples_are_classical() {
    assert_eq!(classify(&conj(0.4, 0.7, 0.4)).label, Label::Classical);
    assert_eq!(classify(&conj(0.6, 0.7, 0.3)).label, Label::Classical);
    assert_eq!(classify(&disj(0.4, 0.6, 1.0)).label, Label::Classical);
}

#[test]
fn labels_follow_factor_signs() {
    let t = disj(0.9, 0.05, 0.99);
    let c = classify(&t);
    assert!(c.k < 0.0);
    assert_eq!(c.label, Label::KNonclassical);
    let t = disj(0.9, 0.6, 0.3);
    let c = classify(&t);
    assert!(c.delta > 0.0);
    assert_eq!(c.label, Label::DeltaNonclassical);
}

#[test]
fn witness_examples() {
    let cave = sample("building_dwelling", "Cave");
    let w = kolmogorov_witness(&cave).unwrap();
    let want = [cave.mu_a, 0.0, cave.mu_b - cave.mu_a, 1.0 - cave.mu_b];
    for (g, e) in w.p.iter().zip(want) {
        assert_abs_diff_eq!(*g, e, epsilon = 1e-12);
    }
    for (g, e) in w.p.iter().zip([0.2821, 0.0, 0.6679, 0.05]) {
        assert_abs_diff_eq!(*g, e, epsilon = 1e-4);
    }
    assert_abs_diff_eq!(w.p.iter().sum::<f64>(), 1.0, epsilon = 1e-12);
    assert!(verify_witness(&w, &cave));
    assert_eq!(
        kolmogorov_witness(&disj(0.7, 0.3, 0.25)),
        Err(WitnessError::NotClassical(Inequality::BoundByA))
    );
    let one = conj(1.0, 1.0, 1.0);
    let w = kolmogorov_witness(&one).unwrap();
    assert_eq!(w.p, [1.0, 0.0, 0.0, 0.0]);
    assert!(verify_witness(&w, &one));
}

#[test]
fn witness_verification_rejects_bad_atoms() {
    let bad = KolmogorovWitness { p: [0.5, 0.6, -0.1, 0.0] };
    for t in [conj(1.1 - 0.1, 0.4, 0.5), conj(0.5, 0.5, 0.5), disj(0.5, 0.5, 0.5)] {
        assert!(!verify_witness(&bad, &t));
    }
    let w = kolmogorov_witness(&conj(0.5, 0.6, 0.3)).unwrap();
    assert!(!verify_witness(&w, &conj(0.5, 0.6, 0.31)));
}

#[test]
fn witness_names_the_broken_inequality() {
    assert_eq!(kolmogorov_witness(&conj(0.3, 0.8, 0.5)), Err(WitnessError::NotClassical(Inequality::BoundByA)));
    assert_eq!(kolmogorov_witness(&conj(0.8, 0.3, 0.5)), Err(WitnessError::NotClassical(Inequality::BoundByB)));
    assert_eq!(kolmogorov_witness(&conj(0.8, 0.7, 0.4)), Err(WitnessError::NotClassical(Inequality::Kolmogorov)));
    assert_eq!(kolmogorov_witness(&disj(0.2, 0.1, 0.425)), Err(WitnessError::NotClassical(Inequality::Kolmogorov)));
}

#[test]
fn c3_existence_examples() {
    assert_eq!(c3_exists(&disj(0.4, 0.7, 0.45)), C3Status::Ok);
    assert_eq!(c3_exists(&sample("building_dwelling", "Cave")), C3Status::CosOutOfRange);
    assert_eq!(c3_exists(&disj(0.5, 0.5, 0.5)), C3Status::Ok);
    assert_eq!(c3_exists(&disj(1.0, 0.5, 0.9)), C3Status::DegenerateWeight);
}

#[test]
fn c3_examples() {
    let cases = [
        (disj(0.4, 0.7, 0.45), [0.6325, 0.0, 0.7746], [0.6708, 0.5, -0.5477], 103.6330),
        (disj(0.1, 0.7, 0.4), [0.9487, 0.0, 0.3162], [0.2789, 0.4714, -0.8367], 90.0),
        (conj(0.725, 0.825, 0.825), [0.8515, 0.0, 0.5244], [0.2576, 0.8710, -0.4183], 76.8253),
    ];
    for (t, a, b, beta) in cases {
        let m = build_c3(&t).unwrap();
        for (g, e) in m.vec_a.iter().zip(a).chain(m.vec_b.iter().zip(b)) {
            assert_abs_diff_eq!(*g, e, epsilon = 1e-4);
        }
        assert_abs_diff_eq!(m.beta, beta, epsilon = 1e-4);
        assert_eq!(c3_predict(&m).connective, t.connective);
    }
    assert!(build_c3(&sample("building_dwelling", "Cave")).is_err());
}

/// Rebuilds μ(A or B) from the complex vectors: the superposition
/// (|A⟩ + e^{iβ}|B⟩)/√2 measured by the projector on the first two axes.
#[test]
fn c3_superposition_oracle() {
    for t in [disj(0.4, 0.7, 0.45), disj(0.7, 0.3, 0.25), disj(0.54, 0.57, 0.85), conj(0.725, 0.825, 0.825)] {
        let m = build_c3(&t).unwrap();
        assert!(!m.swapped);
        let (c, s) = (m.beta.to_radians().cos(), m.beta.to_radians().sin());
        let re: Vec<f64> = (0..3).map(|i| (m.vec_a[i] + c * m.vec_b[i]) / 2f64.sqrt()).collect();
        let im: Vec<f64> = (0..3).map(|i| s * m.vec_b[i] / 2f64.sqrt()).collect();
        let measured = (0..2).map(|i| re[i] * re[i] + im[i] * im[i]).sum::<f64>();
        let norm = (0..3).map(|i| re[i] * re[i] + im[i] * im[i]).sum::<f64>();
        assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(measured, t.mu_combo, epsilon = 1e-12);
        assert_abs_diff_eq!(m.vec_a[0].powi(2) + m.vec_a[1].powi(2), t.mu_a, epsilon = 1e-12);
        assert_abs_diff_eq!(m.vec_b[0].powi(2) + m.vec_b[1].powi(2), t.mu_b, epsilon = 1e-12);
    }
}

#[test]
fn c3_predict_examples() {
    let m = build_c3(&disj(0.4, 0.7, 0.45)).unwrap();
    let p = c3_predict(&m);
    assert_abs_diff_eq!(p.mu_a, 0.4, epsilon = 1e-12);
    assert_abs_diff_eq!(p.mu_b, 0.7, epsilon = 1e-12);
    assert_abs_diff_eq!(p.mu_combo, 0.45, epsilon = 1e-12);
    let flat = build_c3(&disj(0.5, 0.5, 0.5)).unwrap();
    assert_abs_diff_eq!(flat.beta, 90.0, epsilon = 1e-12);
    assert_abs_diff_eq!(c3_predict(&flat).mu_combo, 0.5, epsilon = 1e-12);
    let hawaii = build_c3(&sample("hawaii", "Vacation Package")).unwrap();
    assert_abs_diff_eq!(c3_predict(&hawaii).mu_combo, 0.32, epsilon = 1e-9);
}

#[test]
fn fock_membership_examples() {
    let w = FockWeights { m2: 0.0, n2: 1.0, interference: -0.235 };
    assert_abs_diff_eq!(fock_membership(0.54, 0.57, &w, Connective::Disjunction).unwrap(), 0.32, epsilon = 1e-12);
    let w = FockWeights::convex(1.0);
    assert_abs_diff_eq!(fock_membership(0.3, 0.8, &w, Connective::Conjunction).unwrap(), 0.24, epsilon = 1e-12);
    let w = FockWeights::convex(0.8);
    assert_abs_diff_eq!(fock_membership(1.0, 0.0, &w, Connective::Disjunction).unwrap(), 0.9, epsilon = 1e-12);
    let w = FockWeights { m2: 0.0, n2: 1.0, interference: 0.9 };
    assert!(matches!(fock_membership(0.5, 0.5, &w, Connective::Conjunction), Err(FockError::OutOfRange { .. })));
}

#[test]
fn convex_weight_examples() {
    let w = solve_convex_weights(&sample("furniture_appliances", "Coffee Table")).unwrap();
    assert_abs_diff_eq!(w.m2, 0.4480, epsilon = 1e-4);
    assert_abs_diff_eq!(w.n2, 0.5520, epsilon = 1e-4);
    let w = solve_convex_weights(&disj(0.4, 0.05, 0.425)).unwrap();
    assert_abs_diff_eq!(w.m2, 0.9756, epsilon = 1e-4);
    assert_abs_diff_eq!(w.n2, 0.0244, epsilon = 1e-4);
    let w = solve_convex_weights(&conj(0.3, 0.6, 0.45)).unwrap();
    assert_eq!((w.m2, w.n2), (0.0, 1.0));
    assert_eq!(solve_convex_weights(&conj(0.0, 0.0, 0.3)), Err(FockError::Degenerate));
    assert!(matches!(solve_convex_weights(&disj(0.4, 0.7, 0.45)), Err(FockError::Infeasible { .. })));
}

#[test]
fn model_selection_examples() {
    assert_eq!(select_model(&disj(0.4, 0.7, 0.45)), ModelChoice::C3Interference);
    assert_eq!(select_model(&sample("furniture_appliances", "Coffee Table")), ModelChoice::FockConvex);
    let toothbrush = conj(0.0, 0.55, 0.0);
    assert_eq!(select_model(&toothbrush), ModelChoice::FockConvex);
    assert_abs_diff_eq!(solve_convex_weights(&toothbrush).unwrap().m2, 1.0, epsilon = 1e-12);
    assert_eq!(select_model(&disj(1.0, 1.0, 0.95)), ModelChoice::Unmodelable);
}

#[test]
fn classical_vector_examples() {
    let v = classical_vector(&sample("machine_vehicle", "Sailboat")).unwrap();
    for (g, e) in v.x.iter().zip([0.6489, 0.3782, 0.6156, 0.2386]) {
        assert_abs_diff_eq!(*g, e, epsilon = 1e-4);
    }
    assert_eq!(classical_vector(&conj(0.0, 0.0, 0.0)).unwrap().x, [0.0, 0.0, 0.0, 1.0]);
    assert_eq!(classical_vector(&conj(1.0, 1.0, 1.0)).unwrap().x, [1.0, 0.0, 0.0, 0.0]);
    assert!(classical_vector(&conj(0.725, 0.825, 0.825)).is_err());
}

#[test]
fn reconstruction_examples() {
    let t = reconstruct_from_vector(&R4Vector { x: [0.6489, 0.3782, 0.6156, 0.2386] }, Connective::Conjunction);
    assert_abs_diff_eq!(t.mu_a, 0.5641, epsilon = 1e-4);
    assert_abs_diff_eq!(t.mu_b, 0.8, epsilon = 1e-4);
    assert_abs_diff_eq!(t.mu_combo, 0.4211, epsilon = 1e-4);
    let t = reconstruct_from_vector(&R4Vector { x: [1.0, 0.0, 0.0, 0.0] }, Connective::Disjunction);
    assert_eq!((t.mu_a, t.mu_b, t.mu_combo), (1.0, 1.0, 1.0));
    let t = reconstruct_from_vector(&R4Vector { x: [0.5; 4] }, Connective::Conjunction);
    assert_eq!((t.mu_a, t.mu_b, t.mu_combo), (0.5, 0.5, 0.25));
}

#[test]
fn quantum_logic_factor_examples() {
    let horse = sample("machine_vehicle", "Horse Cart");
    assert_abs_diff_eq!(quantum_logic_factor(&horse, 80.9026, SignPair::PLUS).unwrap(), 0.0168, epsilon = 1e-4);
    let dish = sample("machine_vehicle", "Dishwasher");
    assert_abs_diff_eq!(quantum_logic_factor(&dish, 80.9026, SignPair::PLUS).unwrap(), 0.0, epsilon = 1e-5);
    let t = conj(0.5, 0.6, 0.3);
    assert_abs_diff_eq!(quantum_logic_factor(&t, 90.0, SignPair::PLUS).unwrap(), 0.2, epsilon = 1e-15);
    assert!(quantum_logic_factor(&conj(0.725, 0.825, 0.825), 80.0, SignPair::PLUS).is_err());
    assert!(quantum_logic_factor(&t, 0.0, SignPair::PLUS).is_err());
    assert!(quantum_logic_factor(&t, 180.0, SignPair::PLUS).is_err());
}

#[test]
fn theta_interval_examples() {
    let iv = theta_feasible_intervals(&sample("machine_vehicle", "Dishwasher")).unwrap();
    let mut points: Vec<f64> = iv.iter().flat_map(|i| [i.lo, i.hi]).collect();
    points.sort_by(f64::total_cmp);
    for (g, e) in points.iter().zip([80.9026, 80.9026, 99.0974, 99.0974]) {
        assert_abs_diff_eq!(*g, e, epsilon = 1e-4);
    }
    let iv = theta_feasible_intervals(&conj(0.5, 0.6, 0.5)).unwrap();
    assert!(iv.iter().any(|i| i.lo <= 90.0 && 90.0 <= i.hi));
    let horse = sample("machine_vehicle", "Horse Cart");
    for i in theta_feasible_intervals(&horse).unwrap() {
        let signs = SignPair(1, i.sign_product);
        let mid = 0.5 * (i.lo + i.hi);
        assert!(quantum_logic_factor(&horse, mid, signs).unwrap() > 0.0);
        assert_abs_diff_eq!(quantum_logic_factor(&horse, i.lo, signs).unwrap(), 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(quantum_logic_factor(&horse, i.hi, signs).unwrap(), 0.0, epsilon = 1e-9);
        assert!(quantum_logic_factor(&horse, i.lo - 1.0, signs).unwrap() < 0.0);
        assert!(quantum_logic_factor(&horse, i.hi + 1.0, signs).unwrap() < 0.0);
    }
}

/// Projections onto span{e1, e_A} and span{e1, e_B} with e_A, e_B in the
/// (e2, e3) plane at angle θ, computed from explicit basis vectors.
#[test]
fn ktype_vector_projection_oracle() {
    for (name, theta, want) in [
        ("Horse Cart", 80.9026, Some([0.5380, 0.2461, 0.7957, 0.1296])),
        ("Sailboat", 80.9026, Some([0.6489, 0.3324, 0.5911, 0.3451])),
        ("Raft", 80.9026, Some([0.4472, 0.0141, 0.7257, 0.5226])),
        ("Horse Cart", 60.0, None),
    ] {
        let t = sample("machine_vehicle", name);
        let v = ktype_vector(&t, theta, SignPair::PLUS).unwrap();
        if let Some(w) = want {
            for (g, e) in v.x.iter().zip(w) {
                assert_abs_diff_eq!(*g, e, epsilon = 1e-4);
            }
        }
        let th = f64::to_radians(theta);
        let p = std::f64::consts::FRAC_PI_4 + th / 2.0;
        let m = std::f64::consts::FRAC_PI_4 - th / 2.0;
        let e_a = vec![0.0, p.sin(), p.cos(), 0.0];
        let e_b = vec![0.0, m.sin(), m.cos(), 0.0];
        let pa = common::projector(4, &[common::unit(4, 0), e_a]);
        let pb = common::projector(4, &[common::unit(4, 0), e_b]);
        let pab = common::projector(4, &[common::unit(4, 0)]);
        assert_abs_diff_eq!(common::weight(&pa, &v.x), t.mu_a, epsilon = 1e-12);
        assert_abs_diff_eq!(common::weight(&pb, &v.x), t.mu_b, epsilon = 1e-12);
        assert_abs_diff_eq!(common::weight(&pab, &v.x), t.mu_combo, epsilon = 1e-12);
        assert_abs_diff_eq!(v.norm_sqr(), 1.0, epsilon = 1e-12);
    }
    assert!(ktype_vector(&sample("machine_vehicle", "Horse Cart"), 30.0, SignPair::PLUS).is_err());
}

#[test]
fn ktype_reduces_to_classical_at_right_angle() {
    let t = sample("machine_vehicle", "Sailboat");
    let k = ktype_vector(&t, 90.0, SignPair::PLUS).unwrap();
    let c = classical_vector(&t).unwrap();
    for (g, e) in k.x.iter().zip(c.x) {
        assert_abs_diff_eq!(g.abs(), e, epsilon = 1e-12);
    }
}

#[test]
fn subspace_examples() {
    let a = vec![vec![1.0, 0.0, 0.0, 0.0], vec![0.0, 1.0, 0.0, 0.0]];
    let x = [0.5, 0.5, 0.5, 0.5];
    let d = theorem9_check(4, &a, &a, &x).unwrap();
    assert_abs_diff_eq!(d.delta_c, 0.0, epsilon = 1e-15);
    assert_abs_diff_eq!(d.delta_d, 0.0, epsilon = 1e-15);
    let b = vec![vec![1.0, 0.0, 0.0, 0.0], vec![0.0, 0.0, 1.0, 0.0]];
    let mut r = common::rng(1);
    for _ in 0..100 {
        let x = common::random_unit(&mut r, 4);
        let d = theorem9_check(4, &a, &b, &x).unwrap();
        assert!(d.delta_c <= 1e-12);
        assert_abs_diff_eq!(d.mu_and, x[0] * x[0], epsilon = 1e-12);
        assert_abs_diff_eq!(d.mu_or, x[0] * x[0] + x[1] * x[1] + x[2] * x[2], epsilon = 1e-12);
    }
    assert!(theorem9_check(4, &[vec![1.0, 1.0, 0.0, 0.0]], &a, &x).is_err());
    assert!(theorem9_check(4, &a, &a, &[1.0, 1.0, 0.0, 0.0]).is_err());
    assert!(theorem9_check(3, &a, &a, &[1.0, 0.0, 0.0]).is_err());
}

#[test]
fn rotation_examples() {
    let x = [0.1, 0.2, 0.3, 0.4, 0.5, -0.6, 0.7, 0.8];
    let c = emergent_rotation(0.0).c_coords(&x);
    assert_abs_diff_eq!(c[0], x[4], epsilon = 1e-15);
    assert_abs_diff_eq!(c[1], x[7], epsilon = 1e-15);
    for phi in [12.0, 45.0, 77.0] {
        let frame = emergent_rotation(phi);
        let p = frame.transpose_product();
        for (i, row) in p.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_abs_diff_eq!(*v, if i == j { 1.0 } else { 0.0 }, epsilon = 1e-12);
            }
        }
        let c = frame.c_coords(&x);
        let ph = f64::to_radians(phi);
        assert_abs_diff_eq!(c[0], x[4] * ph.cos() + (x[5] + x[6]) / 2f64.sqrt() * ph.sin(), epsilon = 1e-12);
        assert_abs_diff_eq!(c[1], x[7], epsilon = 1e-12);
    }
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let f5 = emergent_rotation(90.0).f(5);
    for (g, e) in f5.iter().zip([0.0, 0.0, 0.0, 0.0, 0.0, h, h, 0.0]) {
        assert_abs_diff_eq!(*g, e, epsilon = 1e-12);
    }
}

fn discus() -> (MembershipTriple<f64>, PairAngles<f64>) {
    (sample("hobbies_games", "Discus Throwing"), PairAngles::new(108.4354, 12.0).unwrap())
}

#[test]
fn residual_examples() {
    let (t, angles) = discus();
    let s = solve_r8(&t, &angles, &R8Options::default()).unwrap();
    let max = |v: Vec<f64>| v.iter().fold(0.0f64, |m, r| m.max(r.abs()));
    assert!(max(r8_residuals(&s.x, &angles, &t, Some(s.classical_target))) < 1e-9);
    let printed = [0.4507, 0.2602, 0.0, 0.0, 0.7257, -0.4442, 0.0721, 0.0];
    assert!(max(r8_residuals(&printed, &angles, &t, None)) < 1e-3);
    let mut bumped = s.x;
    bumped[4] += 0.01;
    assert!(max(r8_residuals(&bumped, &angles, &t, None)) > 1e-4);
    let zero = r8_residuals(&[0.0; 8], &angles, &t, None);
    assert_eq!(zero[3], -1.0);
}

#[test]
fn r8_readout_matches_projection_oracle() {
    let (t, angles) = discus();
    let s = solve_r8(&t, &angles, &R8Options::default()).unwrap();
    let (w, _) = readout(&s.x, &angles, Connective::Disjunction);
    let (a, b, c) = common::r8_disjunction_weights(&s.x, angles.theta, angles.phi);
    assert_abs_diff_eq!(w.mu_a, a, epsilon = 1e-12);
    assert_abs_diff_eq!(w.mu_b, b, epsilon = 1e-12);
    assert_abs_diff_eq!(w.mu_combo, c, epsilon = 1e-12);
    assert_abs_diff_eq!(c, t.mu_combo, epsilon = 1e-9);
}

#[test]
fn r8_solver_examples() {
    let (t, angles) = discus();
    let s = solve_r8(&t, &angles, &R8Options::default()).unwrap();
    for (g, e) in s.x.iter().zip([0.4507, 0.2602, 0.0, 0.0, 0.7257, -0.4442, 0.0721, 0.0]) {
        assert_abs_diff_eq!(*g, e, epsilon = 1e-3);
    }
    assert_abs_diff_eq!(s.x.iter().map(|v| v * v).sum::<f64>(), 1.0, epsilon = 1e-9);
    assert!(s.residual <= 1e-12);
    let w = s.relative_weights;
    assert_abs_diff_eq!(w.mu_c_total, 0.2708, epsilon = 1e-3);
    assert_abs_diff_eq!(w.mu_c_total + w.mu_q_total, 1.0, epsilon = 1e-9);

    let mask = sample("sportswear_sports_equipment", "Diving Mask");
    let s = solve_r8(&mask, &PairAngles::new(107.0, 12.95).unwrap(), &R8Options::default()).unwrap();
    for (g, e) in s.x.iter().zip([0.0664, 0.0, 0.0, 0.0, 0.9978, 0.0, 0.0, 0.0]) {
        assert_abs_diff_eq!(*g, e, epsilon = 1e-3);
    }

    let library = sample("building_dwelling", "Library");
    let s = solve_r8(&library, &PairAngles::new(114.5, 0.0).unwrap(), &R8Options::default()).unwrap();
    for (g, e) in s.x.iter().zip([0.3809, 0.8015, 0.0, 0.2036, 0.0, 0.3927, 0.0919, 0.0923]) {
        assert_abs_diff_eq!(*g, e, epsilon = 1e-3);
    }
    let w = s.relative_weights;
    for (g, e) in w.mu_c_r.unwrap().iter().zip([0.95, 0.175, 0.175]) {
        assert_abs_diff_eq!(*g, e, epsilon = 1e-3);
    }
    for (g, e) in w.mu_q_r.unwrap().iter().zip([0.95, 0.175, 0.9503]) {
        assert_abs_diff_eq!(*g, e, epsilon = 1e-3);
    }
}

#[test]
fn r8_errors() {
    let (t, _) = discus();
    assert!(matches!(PairAngles::new(0.0, 12.0), Err(R8Error::BadAngles { .. })));
    assert!(matches!(PairAngles::new(90.0, 91.0), Err(R8Error::BadAngles { .. })));
    let bad = PairAngles { theta: 180.0, phi: 0.0 };
    assert!(matches!(solve_r8(&t, &bad, &R8Options::default()), Err(R8Error::BadAngles { .. })));
    let salt = sample("spices_herbs", "Salt");
    assert!(matches!(
        solve_r8(&salt, &PairAngles::new(152.6, 50.0).unwrap(), &R8Options::default()),
        Err(R8Error::NoSolution { .. })
    ));
}

#[test]
fn relative_weight_examples() {
    let angles = PairAngles::new(152.6, 50.0).unwrap();
    let msg = solve_r8(&sample("spices_herbs", "MSG"), &angles, &R8Options::default()).unwrap();
    let w = msg.relative_weights;
    assert_abs_diff_eq!(w.mu_c_total, 0.6950, epsilon = 1e-3);
    assert_abs_diff_eq!(w.mu_c_r.unwrap()[2], 0.25, epsilon = 1e-3);
    assert_abs_diff_eq!(w.mu_q_r.unwrap()[2], 0.8239, epsilon = 1e-3);

    let sugar = solve_r8(&sample("spices_herbs", "Sugar"), &angles, &R8Options::default()).unwrap();
    assert_abs_diff_eq!(sugar.relative_weights.mu_q_r.unwrap()[2], 1.0, epsilon = 1e-3);

    let (t, angles) = discus();
    let w = solve_r8(&t, &angles, &R8Options::default()).unwrap().relative_weights;
    for (g, e) in w.mu_c_r.unwrap().iter().zip([1.0, 0.75, 1.0]) {
        assert_abs_diff_eq!(*g, e, epsilon = 1e-3);
    }
    for (g, e) in w.mu_q_r.unwrap().iter().zip([1.0, 0.75, 0.5886]) {
        assert_abs_diff_eq!(*g, e, epsilon = 1e-3);
    }
}

#[test]
fn empty_quantum_sector_has_no_relative_weights() {
    let t = disj(0.5, 0.5, 0.75);
    let s = solve_r8(&t, &PairAngles::new(90.0, 0.0).unwrap(), &R8Options::default()).unwrap();
    let w = s.relative_weights;
    assert!(w.mu_c_total > 0.0);
    if w.mu_q_total <= 1e-9 {
        assert!(w.mu_q_r.is_none());
    }
}

#[test]
fn dual_examples() {
    let tv = conjunction_dual(&sample("furniture_appliances", "TV"));
    assert_eq!(tv.connective, Connective::Disjunction);
    assert_abs_diff_eq!(tv.mu_a, 0.3, epsilon = 1e-12);
    assert_abs_diff_eq!(tv.mu_b, 0.1, epsilon = 1e-12);
    assert_abs_diff_eq!(tv.mu_combo, 0.075, epsilon = 1e-12);
    let one = conjunction_dual(&conj(1.0, 1.0, 1.0));
    assert_eq!((one.mu_a, one.mu_b, one.mu_combo, one.connective), (0.0, 0.0, 0.0, Connective::Disjunction));
    let t = conj(0.25, 0.5, 0.125);
    assert_eq!(conjunction_dual(&conjunction_dual(&t)), t);
    let t = conj(0.3, 0.45, 0.2);
    let back = conjunction_dual(&conjunction_dual(&t));
    assert_abs_diff_eq!(back.mu_a, t.mu_a, epsilon = 1e-15);
    assert_abs_diff_eq!(back.mu_combo, t.mu_combo, epsilon = 1e-15);
}

#[test]
fn fit_examples() {
    let d = embedded_samples();
    let hobbies = d.pair("hobbies_games", Connective::Disjunction).unwrap();
    let opts = R8Options::coarse();
    assert!(pair_solvable(&hobbies.triples(), &PairAngles::new(108.4354, 12.0).unwrap(), &opts));
    let fitted = fit_pair_angles(&hobbies.triples(), 1.0, 1.0, &opts).unwrap();
    assert!(pair_solvable(&hobbies.triples(), &fitted, &R8Options::default()));

    let single = [disj(0.5, 0.5, 0.75)];
    let a = fit_pair_angles(&single, 1.0, 1.0, &opts).unwrap();
    assert!(pair_solvable(&single, &a, &R8Options::default()));
    assert!(pair_solvable(&single, &PairAngles::new(90.0, 0.0).unwrap(), &R8Options::default()));

    let odd = [conj(0.0, 0.0, 1.0)];
    match fit_pair_angles(&odd, 1.0, 1.0, &opts) {
        Err(e) => assert_eq!(e, FitError::NoFeasibleAngles),
        Ok(a) => assert!(solve_r8(&odd[0], &a, &R8Options::default()).unwrap().residual <= 1e-9),
    }
    assert_eq!(fit_pair_angles::<f64>(&[], 1.0, 1.0, &opts), Err(FitError::Empty));
}

#[test]
fn single_precision_scalar() {
    let t = MembershipTriple::<f32>::disj(0.4, 0.7, 0.45).unwrap();
    let m = build_c3(&t).unwrap();
    assert!((m.beta - 103.633).abs() < 1e-2);
    assert_eq!(classify(&t).label, Label::DeltaNonclassical);
}
