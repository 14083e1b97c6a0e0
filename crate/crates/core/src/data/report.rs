use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{Map, Number, Value};

use crate::fock::{select_model, solve_convex_weights, FockWeights, ModelChoice};
use crate::hilbert_c3::{build_c3, C3Model};
use crate::membership::{classify_with, Classification, MembershipTriple};
use crate::realspace::{fit_pair_angles, solve_r8, PairAngles, R8Options, R8Solution, RelativeWeights};

use super::{ConceptPair, Dataset};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    /// Interference if possible, then the convex Fock model, then the
    /// eight-dimensional model.
    Auto,
    C3,
    Fock,
    R8,
}

impl ModelKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ModelKind::Auto => "auto",
            ModelKind::C3 => "c3",
            ModelKind::Fock => "fock",
            ModelKind::R8 => "r8",
        }
    }
}

impl FromStr for ModelKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(ModelKind::Auto),
            "c3" => Ok(ModelKind::C3),
            "fock" => Ok(ModelKind::Fock),
            "r8" => Ok(ModelKind::R8),
            other => Err(format!("unknown model kind `{other}` (expected auto, c3, fock or r8)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReportConfig {
    /// Model to build for each item; `None` classifies only.
    pub kind: Option<ModelKind>,
    /// Search the angle grid for each pair instead of using reference angles.
    pub fit_angles: bool,
    /// Search the angle grid for pairs without reference angles when some
    /// item needs the eight-dimensional model.
    pub fit_missing_angles: bool,
    /// Classification tolerance.
    pub eps: f64,
    pub r8: R8Options<f64>,
    /// Solver settings used while searching the angle grid.
    pub fit_r8: R8Options<f64>,
    pub theta_step: f64,
    pub phi_step: f64,
}

impl Default for ReportConfig {
    fn default() -> Self {
        Self {
            kind: None,
            fit_angles: false,
            fit_missing_angles: false,
            eps: 1e-9,
            r8: R8Options::default(),
            fit_r8: R8Options::coarse(),
            theta_step: 1.0,
            phi_step: 1.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ModelReport {
    C3(C3Model<f64>),
    Fock(FockWeights<f64>),
    R8(Box<R8Solution<f64>>),
    Failed { kind: ModelKind, message: String },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ItemReport {
    pub item: String,
    pub triple: MembershipTriple<f64>,
    pub classification: Classification<f64>,
    pub model: Option<ModelReport>,
}

impl ItemReport {
    pub fn relative_weights(&self) -> Option<&RelativeWeights<f64>> {
        match &self.model {
            Some(ModelReport::R8(s)) => Some(&s.relative_weights),
            _ => None,
        }
    }

    pub fn failed(&self) -> bool {
        matches!(self.model, Some(ModelReport::Failed { .. }))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairReport {
    pub pair_id: String,
    pub connective: crate::membership::Connective,
    pub angles: Option<PairAngles<f64>>,
    /// Set when angle fitting was requested and found nothing.
    pub angle_error: Option<String>,
    pub items: Vec<ItemReport>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub pairs: Vec<PairReport>,
}

impl Report {
    /// Number of items whose model could not be built, plus pairs whose
    /// angle fit failed.
    pub fn error_count(&self) -> usize {
        self.pairs
            .iter()
            .map(|p| usize::from(p.angle_error.is_some()) + p.items.iter().filter(|i| i.failed()).count())
            .sum()
    }
}

fn build_model(t: &MembershipTriple<f64>, kind: ModelKind, angles: Option<&PairAngles<f64>>, cfg: &ReportConfig) -> ModelReport {
    let kind = match kind {
        ModelKind::Auto => match select_model(t) {
            ModelChoice::C3Interference => ModelKind::C3,
            ModelChoice::FockConvex => ModelKind::Fock,
            ModelChoice::Unmodelable => ModelKind::R8,
        },
        k => k,
    };
    let failed = |message: String| ModelReport::Failed { kind, message };
    match kind {
        ModelKind::C3 => build_c3(t).map_or_else(|e| failed(e.to_string()), ModelReport::C3),
        ModelKind::Fock => solve_convex_weights(t).map_or_else(|e| failed(e.to_string()), ModelReport::Fock),
        ModelKind::R8 | ModelKind::Auto => match angles {
            None => failed("no angles known for this pair".to_string()),
            Some(a) => solve_r8(t, a, &cfg.r8).map_or_else(|e| failed(e.to_string()), |s| ModelReport::R8(Box::new(s))),
        },
    }
}

fn analyze_pair(pair: &ConceptPair, cfg: &ReportConfig) -> PairReport {
    let needs_angles = match cfg.kind {
        Some(ModelKind::R8) => true,
        Some(ModelKind::Auto) => pair.items.iter().any(|i| select_model(&i.triple) == ModelChoice::Unmodelable),
        _ => false,
    };
    let fit = cfg.fit_angles || (cfg.fit_missing_angles && pair.angles.is_none());
    let (angles, angle_error) = if fit && needs_angles {
        match fit_pair_angles(&pair.triples(), cfg.theta_step, cfg.phi_step, &cfg.fit_r8) {
            Ok(a) => (Some(a), None),
            Err(e) => (None, Some(e.to_string())),
        }
    } else {
        (pair.angles, None)
    };
    let items = pair
        .items
        .par_iter()
        .map(|item| ItemReport {
            item: item.name.clone(),
            triple: item.triple,
            classification: classify_with(&item.triple, cfg.eps),
            model: cfg.kind.map(|k| build_model(&item.triple, k, angles.as_ref(), cfg)),
        })
        .collect();
    PairReport { pair_id: pair.pair_id.clone(), connective: pair.connective, angles, angle_error, items }
}

/// Classifies every item and, when requested, builds its model. Items are
/// processed in parallel and reported in dataset order.
pub fn analyze(dataset: &Dataset, cfg: &ReportConfig) -> Report {
    Report { pairs: dataset.pairs.iter().map(|p| analyze_pair(p, cfg)).collect() }
}

fn fixed(v: f64) -> Value {
    let s = format!("{v:.4}");
    let s = if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') { s.trim_start_matches('-').to_string() } else { s };
    number(&s)
}

fn scientific(v: f64) -> Value {
    number(&format!("{v:.3e}"))
}

fn number(s: &str) -> Value {
    Number::from_str(s).map_or(Value::Null, Value::Number)
}

fn fixed_array(v: &[f64]) -> Value {
    Value::Array(v.iter().map(|&x| fixed(x)).collect())
}

fn object<const N: usize>(entries: [(&str, Value); N]) -> Value {
    let mut m = Map::new();
    for (k, v) in entries {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

fn classification_json(c: &Classification<f64>) -> Value {
    object([("label", Value::from(c.label.as_str())), ("delta", fixed(c.delta)), ("k", fixed(c.k))])
}

fn model_json(m: &ModelReport) -> Value {
    match m {
        ModelReport::C3(c) => object([
            ("kind", Value::from("c3")),
            ("swapped", Value::from(c.swapped)),
            ("a", fixed(c.a)),
            ("b", fixed(c.b)),
            ("vec_a", fixed_array(&c.vec_a)),
            ("vec_b", fixed_array(&c.vec_b)),
            ("beta", fixed(c.beta)),
        ]),
        ModelReport::Fock(w) => object([
            ("kind", Value::from("fock")),
            ("m2", fixed(w.m2)),
            ("n2", fixed(w.n2)),
            ("interference", fixed(w.interference)),
        ]),
        ModelReport::R8(s) => {
            let d = &s.derived;
            object([
                ("kind", Value::from("r8")),
                ("x", fixed_array(&s.x)),
                ("residual", scientific(s.residual)),
                ("classical_target", fixed(s.classical_target)),
                (
                    "derived",
                    object([
                        ("x_a", fixed(d.x_a)),
                        ("x_b", fixed(d.x_b)),
                        ("x_a_prime", fixed(d.x_a_prime)),
                        ("x_b_prime", fixed(d.x_b_prime)),
                        ("c", fixed_array(&d.c)),
                    ]),
                ),
            ])
        }
        ModelReport::Failed { kind, message } => {
            object([("kind", Value::from(kind.as_str())), ("error", Value::from(message.as_str()))])
        }
    }
}

fn relative_weights_json(w: &RelativeWeights<f64>) -> Value {
    let triple = |t: &Option<[f64; 3]>| t.as_ref().map_or(Value::Null, |v| fixed_array(v));
    object([
        ("mu_c_total", fixed(w.mu_c_total)),
        ("mu_q_total", fixed(w.mu_q_total)),
        ("mu_c_r", triple(&w.mu_c_r)),
        ("mu_q_r", triple(&w.mu_q_r)),
    ])
}

fn item_json(i: &ItemReport) -> Value {
    object([
        ("item", Value::from(i.item.as_str())),
        ("weights", fixed_array(&[i.triple.mu_a, i.triple.mu_b, i.triple.mu_combo])),
        ("classification", classification_json(&i.classification)),
        ("model", i.model.as_ref().map_or(Value::Null, model_json)),
        ("relative_weights", i.relative_weights().map_or(Value::Null, relative_weights_json)),
    ])
}

fn pair_json(p: &PairReport) -> Value {
    let mut v = object([
        ("pair_id", Value::from(p.pair_id.as_str())),
        ("connective", Value::from(p.connective.as_str())),
        (
            "angles",
            p.angles.map_or(Value::Null, |a| object([("theta", fixed(a.theta)), ("phi", fixed(a.phi))])),
        ),
        ("items", Value::Array(p.items.iter().map(item_json).collect())),
    ]);
    if let (Some(e), Value::Object(m)) = (&p.angle_error, &mut v) {
        m.insert("angle_error".to_string(), Value::from(e.as_str()));
    }
    v
}

/// Compact JSON with a fixed key order and four decimals for every weight,
/// component and angle.
pub fn write_report(report: &Report) -> String {
    let v = object([("pairs", Value::Array(report.pairs.iter().map(pair_json).collect()))]);
    serde_json::to_string(&v).expect("report serializes")
}
