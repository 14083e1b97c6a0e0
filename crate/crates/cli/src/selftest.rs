//! Replays the worked examples of the reference corpus. Each case is keyed
//! by the example it reproduces.

#![allow(clippy::approx_constant)]

use qconcept::data::{embedded_samples, Dataset, PrintedModel};
use qconcept::fock::{fock_membership, solve_convex_weights, FockWeights};
use qconcept::hilbert_c3::{build_c3, c3_predict};
use qconcept::membership::{
    classicality_factors, classify, kolmogorov_witness, verify_witness, Connective, Inequality, Label, MembershipTriple,
    WitnessError,
};
use qconcept::realspace::{
    classical_vector, conjunction_dual, emergent_rotation, ktype_vector, pair_solvable, quantum_logic_factor,
    readout, reconstruct_from_vector, solve_r8, theta_feasible_intervals, R8Options, R8Solution, SignPair,
};

/// Cases whose printed values are not mutually consistent in the source, so
/// reproducing them is impossible. They are reported, not counted as
/// failures.
const KNOWN: &[(&str, &str)] = &[
    ("row/building_dwelling/Tree House", "printed weights and factors belong to another item"),
    ("c3/building_dwelling/Tree House", "printed weights and factors belong to another item"),
    ("c3/hobbies_games/Beer Drinking", "printed vectors use 0.2 for the first weight, which is 0.8"),
    ("c3/hobbies_games/Wrestling", "printed angle corresponds to a combined weight of 0.63, not 0.625"),
    ("c3/instruments_tools/Spoon", "printed first vector corresponds to a first weight of 0.67, not 0.65"),
    ("c3/household_appliances_kitchen_utensils/Cake Tin", "printed model belongs to Rubbish Bin"),
    ("c3/household_appliances_kitchen_utensils/Rubbish Bin", "printed model belongs to Cake Tin"),
    ("c3/fruits_vegetables/Tomato", "printed vectors repeat those of another example"),
    ("convex/house_furnishings_furniture/Wall-Hanging", "printed m² = 1 gives 0.94, not the measured 0.95"),
    ("convex/fruits_vegetables/Peanut", "printed m² = 1 gives 0.37, not the measured 0.4"),
    ("r8/spices_herbs/Poppyseeds", "relative quantum weight not reproducible jointly with MSG at one angle pair"),
    ("r8/spices_herbs/Salt", "no solution at the angle pair that reproduces MSG"),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Known,
}

pub struct Case {
    pub key: String,
    pub status: Status,
    pub detail: String,
}

pub struct Outcome {
    pub cases: Vec<Case>,
}

impl Outcome {
    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| c.status == Status::Fail).count()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let tag = match c.status {
                Status::Pass => "PASS ",
                Status::Fail => "FAIL ",
                Status::Known => "KNOWN",
            };
            out.push_str(&format!("{tag} {}", c.key));
            if !c.detail.is_empty() {
                out.push_str(&format!(": {}", c.detail));
            }
            out.push('\n');
        }
        let count = |s: Status| self.cases.iter().filter(|c| c.status == s).count();
        out.push_str(&format!(
            "{} passed, {} failed, {} known deviations\n",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Known)
        ));
        out
    }
}

type Check = Result<(), String>;

fn close(name: &str, got: f64, want: f64, tol: f64) -> Check {
    if (got - want).abs() <= tol {
        Ok(())
    } else {
        Err(format!("{name} = {got:.6}, expected {want} ± {tol:e}"))
    }
}

fn close_all(name: &str, got: &[f64], want: &[f64], tol: f64) -> Check {
    if got.len() != want.len() {
        return Err(format!("{name}: length {} instead of {}", got.len(), want.len()));
    }
    for (i, (g, w)) in got.iter().zip(want).enumerate() {
        close(&format!("{name}[{i}]"), *g, *w, tol)?;
    }
    Ok(())
}

fn same_signs(name: &str, got: &[f64], want: &[f64]) -> Check {
    for (i, (g, w)) in got.iter().zip(want).enumerate() {
        if w.abs() > 1e-3 && g.signum() != w.signum() {
            return Err(format!("{name}[{i}] has sign of {g:.4}, expected sign of {w}"));
        }
    }
    Ok(())
}

struct Runner {
    cases: Vec<Case>,
}

impl Runner {
    fn record(&mut self, key: String, check: Check) {
        let known = KNOWN.iter().find(|(k, _)| *k == key);
        let (status, detail) = match (check, known) {
            (Ok(()), _) => (Status::Pass, String::new()),
            (Err(e), Some((_, why))) => (Status::Known, format!("{e} ({why})")),
            (Err(e), None) => (Status::Fail, e),
        };
        self.cases.push(Case { key, status, detail });
    }

    fn check(&mut self, key: &str, f: impl FnOnce() -> Check) {
        self.record(key.to_string(), f());
    }
}

fn item(d: &Dataset, pair: &str, name: &str) -> Result<MembershipTriple<f64>, String> {
    d.lookup(pair, name).map(|i| i.triple).ok_or_else(|| format!("{pair}/{name} missing from the corpus"))
}

fn solve_at_reference(d: &Dataset, pair: &str, name: &str) -> Result<R8Solution<f64>, String> {
    let t = item(d, pair, name)?;
    let p = d.pair(pair, t.connective).ok_or("pair missing")?;
    let angles = p.angles.ok_or("pair has no reference angles")?;
    solve_r8(&t, &angles, &R8Options::default()).map_err(|e| e.to_string())
}

fn table_rows(r: &mut Runner, d: &Dataset) {
    for pair in &d.pairs {
        for it in &pair.items {
            let Some(reference) = it.reference else { continue };
            let t = it.triple;
            if let Some((label, delta, k)) = reference.row {
                r.record(format!("row/{}/{}", pair.pair_id, it.name), {
                    let c = classify(&t);
                    if c.label != label {
                        Err(format!("label {} instead of {}", c.label.as_str(), label.as_str()))
                    } else {
                        close("delta", c.delta, delta, 1e-4).and_then(|()| close("k", c.k, k, 1e-4))
                    }
                });
            }
            match reference.model {
                Some(PrintedModel::C3 { vec_a, vec_b, beta }) => {
                    r.record(format!("c3/{}/{}", pair.pair_id, it.name), {
                        build_c3(&t).map_err(|e| e.to_string()).and_then(|m| {
                            close_all("|A>", &m.vec_a, &vec_a, 1e-4)?;
                            close_all("|B>", &m.vec_b, &vec_b, 1e-4)?;
                            close("beta", m.beta, beta, 1e-4)?;
                            close("predicted weight", c3_predict(&m).mu_combo, t.mu_combo, 1e-9)
                        })
                    });
                }
                Some(PrintedModel::Convex { m2, n2, sector, average }) => {
                    r.record(format!("convex/{}/{}", pair.pair_id, it.name), {
                        let printed = FockWeights { m2, n2, interference: 0.0 };
                        close("sector", qconcept::fock::sector_two(t.mu_a, t.mu_b, t.connective), sector, 1e-4)
                            .and_then(|()| close("average", 0.5 * (t.mu_a + t.mu_b), average, 1e-4))
                            .and_then(|()| {
                                let mu = fock_membership(t.mu_a, t.mu_b, &printed, t.connective).map_err(|e| e.to_string())?;
                                close("weight from printed m²", mu, t.mu_combo, 1e-4)
                            })
                            .and_then(|()| {
                                let w = solve_convex_weights(&t).map_err(|e| e.to_string())?;
                                close("m²", w.m2, m2, 1e-4)
                            })
                    });
                }
                None => {}
            }
        }
    }
}

fn worked_examples(r: &mut Runner, d: &Dataset) {
    r.check("factors/Desk Lamp", || {
        let (delta, k) = classicality_factors(&item(d, "furniture_appliances", "Desk Lamp")?);
        close("delta", delta, 0.1, 1e-12).and_then(|()| close("k", k, 0.275, 1e-12))
    });
    r.check("factors/Ashtray", || {
        let (delta, k) = classicality_factors(&item(d, "house_furnishings_furniture", "Ashtray")?);
        close("delta", delta, 0.45, 1e-12).and_then(|()| close("k", k, 0.75, 1e-12))
    });
    r.check("label/Almond", || {
        let c = classify(&item(d, "fruits_vegetables", "Almond")?);
        (c.label == Label::KNonclassical).then_some(()).ok_or(format!("label {}", c.label.as_str()))
    });
    r.check("witness/Cave", || {
        let t = item(d, "building_dwelling", "Cave")?;
        let w = kolmogorov_witness(&t).map_err(|e| e.to_string())?;
        close_all("atoms", &w.p, &[t.mu_a, 0.0, t.mu_b - t.mu_a, 1.0 - t.mu_b], 1e-12)?;
        close_all("printed atoms", &w.p, &[0.2821, 0.0, 0.6679, 0.05], 1e-4)?;
        verify_witness(&w, &t).then_some(()).ok_or("witness fails verification".into())
    });
    r.check("witness/Ashtray", || match kolmogorov_witness(&item(d, "house_furnishings_furniture", "Ashtray")?) {
        Err(WitnessError::NotClassical(Inequality::BoundByA)) => Ok(()),
        other => Err(format!("{other:?}")),
    });
    r.check("hawaii/prediction", || {
        let t = item(d, "hawaii", "Vacation Package")?;
        let m = build_c3(&t).map_err(|e| e.to_string())?;
        close("beta", m.beta, 121.8967, 1e-4)?;
        close("predicted", c3_predict(&m).mu_combo, 0.32, 1e-9)
    });
    r.check("c3/Cake Tin and Rubbish Bin/interchanged", || {
        let pair = "household_appliances_kitchen_utensils";
        for (data, printed) in [("Rubbish Bin", "Cake Tin"), ("Cake Tin", "Rubbish Bin")] {
            let m = build_c3(&item(d, pair, data)?).map_err(|e| e.to_string())?;
            let reference = d.lookup(pair, printed).and_then(|i| i.reference).and_then(|r| r.model);
            let Some(PrintedModel::C3 { vec_a, vec_b, beta }) = reference else {
                return Err(format!("{printed} has no printed model"));
            };
            close_all("|A>", &m.vec_a, &vec_a, 1e-4)?;
            close_all("|B>", &m.vec_b, &vec_b, 1e-4)?;
            close("beta", m.beta, beta, 1e-4)?;
        }
        Ok(())
    });
    r.check("c3/Field Mouse/right angle", || {
        let m = build_c3(&item(d, "pets_farmyard_animals", "Field Mouse")?).map_err(|e| e.to_string())?;
        close("beta", m.beta, 90.0, 1e-9)
    });
    for (name, want) in [
        ("Sailboat", [0.6489, 0.3782, 0.6156, 0.2386]),
        ("Backpack", [0.0, 0.0, 0.0, 1.0]),
        ("Automobile", [1.0, 0.0, 0.0, 0.0]),
    ] {
        r.check(&format!("r4/{name}"), || {
            let t = item(d, "machine_vehicle", name)?;
            let v = classical_vector(&t).map_err(|e| e.to_string())?;
            close_all("x", &v.x, &want, 1e-4)?;
            let back = reconstruct_from_vector(&v, Connective::Conjunction);
            close_all("weights", &[back.mu_a, back.mu_b, back.mu_combo], &[t.mu_a, t.mu_b, t.mu_combo], 1e-9)
        });
    }
    r.check("ktype/Horse Cart/intervals", || {
        let iv = theta_feasible_intervals(&item(d, "machine_vehicle", "Horse Cart")?).map_err(|e| e.to_string())?;
        let mut got: Vec<f64> = iv.iter().flat_map(|i| [i.lo, i.hi]).collect();
        got.sort_by(f64::total_cmp);
        close_all("bounds", &got, &[53.1553, 83.9225, 96.0775, 126.8447], 5e-3)
    });
    r.check("ktype/Dishwasher/points", || {
        let iv = theta_feasible_intervals(&item(d, "machine_vehicle", "Dishwasher")?).map_err(|e| e.to_string())?;
        let mut got: Vec<f64> = iv.iter().flat_map(|i| [i.lo, i.hi]).collect();
        got.sort_by(f64::total_cmp);
        close_all("points", &got, &[80.9026, 80.9026, 99.0974, 99.0974], 1e-4)
    });
    for (name, want) in [
        ("Horse Cart", [0.5380, 0.2461, 0.7957, 0.1296]),
        ("Sailboat", [0.6489, 0.3324, 0.5911, 0.3451]),
        ("Raft", [0.4472, 0.0141, 0.7257, 0.5226]),
    ] {
        r.check(&format!("ktype/{name}/vector"), || {
            let v = ktype_vector(&item(d, "machine_vehicle", name)?, 80.9026, SignPair::PLUS).map_err(|e| e.to_string())?;
            close_all("x", &v.x, &want, 1e-4)
        });
    }
    r.check("ktype/Horse Cart/factor", || {
        let q = quantum_logic_factor(&item(d, "machine_vehicle", "Horse Cart")?, 80.9026, SignPair::PLUS)
            .map_err(|e| e.to_string())?;
        close("q", q, 0.0168, 1e-4)
    });
    r.check("dual/TV", || {
        let t = conjunction_dual(&item(d, "furniture_appliances", "TV")?);
        if t.connective != Connective::Disjunction {
            return Err("dual is not a disjunction".into());
        }
        close_all("weights", &[t.mu_a, t.mu_b, t.mu_combo], &[0.3, 0.1, 0.075], 1e-12)
    });
    r.check("rotation/right angle", || {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        close_all("f5", &emergent_rotation(90.0).f(5), &[0.0, 0.0, 0.0, 0.0, 0.0, h, h, 0.0], 1e-12)
    });
    r.check("r8/hobbies_games/Discus Throwing", || {
        let s = solve_at_reference(d, "hobbies_games", "Discus Throwing")?;
        let want = [0.4507, 0.2602, 0.0, 0.0, 0.7257, -0.4442, 0.0721, 0.0];
        close_all("x", &s.x, &want, 1e-3)?;
        same_signs("x", &s.x, &want)?;
        if s.residual > 1e-9 {
            return Err(format!("residual {:e}", s.residual));
        }
        let w = s.relative_weights;
        close("mu_c_total", w.mu_c_total, 0.2708, 1e-3)?;
        close_all("mu_c_r", &w.mu_c_r.ok_or("no classical part")?, &[1.0, 0.75, 1.0], 1e-3)?;
        close_all("mu_q_r", &w.mu_q_r.ok_or("no quantum part")?, &[1.0, 0.75, 0.5886], 1e-3)
    });
    r.check("r8/sportswear_sports_equipment/Diving Mask", || {
        let s = solve_at_reference(d, "sportswear_sports_equipment", "Diving Mask")?;
        close_all("x", &s.x, &[0.0664, 0.0, 0.0, 0.0, 0.9978, 0.0, 0.0, 0.0], 1e-3)?;
        let (w, _) = readout(&s.x, &s.angles, s.connective);
        close("mu_or", w.mu_combo, 0.95, 1e-9)
    });
    r.check("r8/building_dwelling/Library", || {
        let s = solve_at_reference(d, "building_dwelling", "Library")?;
        close_all("x", &s.x, &[0.3809, 0.8015, 0.0, 0.2036, 0.0, 0.3927, 0.0919, 0.0923], 1e-3)?;
        let w = s.relative_weights;
        close_all("mu_c_r", &w.mu_c_r.ok_or("no classical part")?, &[0.95, 0.175, 0.175], 1e-3)?;
        close_all("mu_q_r", &w.mu_q_r.ok_or("no quantum part")?, &[0.95, 0.175, 0.9503], 1e-3)
    });
    r.check("r8/spices_herbs/MSG", || {
        let w = solve_at_reference(d, "spices_herbs", "MSG")?.relative_weights;
        close("mu_c_total", w.mu_c_total, 0.6950, 1e-3)?;
        close("mu_c_r(or)", w.mu_c_r.ok_or("no classical part")?[2], 0.25, 1e-3)?;
        close("mu_q_r(or)", w.mu_q_r.ok_or("no quantum part")?[2], 0.8239, 1e-3)
    });
    r.check("r8/spices_herbs/Sugar", || {
        let w = solve_at_reference(d, "spices_herbs", "Sugar")?.relative_weights;
        close("mu_c_r(or)", w.mu_c_r.ok_or("no classical part")?[2], 0.0, 1e-3)?;
        close("mu_q_r(or)", w.mu_q_r.ok_or("no quantum part")?[2], 1.0, 1e-3)
    });
    r.check("r8/spices_herbs/Poppyseeds", || {
        let w = solve_at_reference(d, "spices_herbs", "Poppyseeds")?.relative_weights;
        close("mu_c_r(or)", w.mu_c_r.ok_or("no classical part")?[2], 0.6, 1e-3)?;
        close("mu_q_r(or)", w.mu_q_r.ok_or("no quantum part")?[2], 0.1270, 1e-3)
    });
    r.check("r8/spices_herbs/Salt", || {
        let w = solve_at_reference(d, "spices_herbs", "Salt")?.relative_weights;
        close_all("mu_c_r", &w.mu_c_r.ok_or("no classical part")?, &[0.75, 0.1, 0.75], 1e-3)?;
        close("mu_q_r(or)", w.mu_q_r.ok_or("no quantum part")?[2], 0.2955, 1e-3)
    });
    r.check("r8/hobbies_games/pair", || {
        let p = d.pair("hobbies_games", Connective::Disjunction).ok_or("pair missing")?;
        let angles = p.angles.ok_or("no angles")?;
        pair_solvable(&p.triples(), &angles, &R8Options::default())
            .then_some(())
            .ok_or("an item has no solution at the reference angles".into())
    });
}

pub fn run() -> Outcome {
    let d = embedded_samples();
    let mut r = Runner { cases: Vec::new() };
    table_rows(&mut r, &d);
    worked_examples(&mut r, &d);
    Outcome { cases: r.cases }
}
