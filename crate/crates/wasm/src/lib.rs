//! Browser bindings: a small JSON-in/JSON-out API over the set calculus so
//! a static page can plot membership curves, alpha-cuts and separation
//! sweeps. Every function takes and returns strings, so the whole surface
//! is also testable on the host.

use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

use dfuzzy::convex::{
    alpha_cut, axis_thresholds, candidate_alphas, core_points, essential_supremum,
    is_convex_by_cuts, is_convex_pointwise, is_strongly_convex, separation_degree, Hyperplane,
};
use dfuzzy::document::Document;
use dfuzzy::{DFuzzySet, Hyp, OrderMode};

fn ok_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("responses serialize")
}

fn err_json(message: impl ToString) -> String {
    let mut out = serde_json::Map::new();
    out.insert("error".into(), message.to_string().into());
    serde_json::Value::Object(out).to_string()
}

#[derive(Serialize)]
struct CurvePoints {
    xs: Vec<f64>,
    e1: Vec<f64>,
    e2: Vec<f64>,
}

fn curve(set: &DFuzzySet) -> CurvePoints {
    CurvePoints {
        xs: set.universe().points().iter().map(|p| p[0]).collect(),
        e1: set.values().iter().map(|v| v.u()).collect(),
        e2: set.values().iter().map(|v| v.v()).collect(),
    }
}

/// Built-in sample document for the demo page: the worked separation pair
/// plus a set with incomparable membership grades.
#[wasm_bindgen]
pub fn demo_document() -> String {
    include_str!("demo_document.json").to_string()
}

/// Names the demo page offers in its operation selector.
#[wasm_bindgen]
pub fn operation_names() -> String {
    ok_json(&[
        "union",
        "intersection",
        "algebraic-product",
        "absolute-difference",
        "convex-combination",
    ])
}

#[derive(Serialize)]
struct OpResponse {
    op: String,
    a: CurvePoints,
    b: CurvePoints,
    result: CurvePoints,
    incomparable_points: Vec<usize>,
}

/// Apply a binary pointwise operation (lattice mode). The convex
/// combination uses the constant weight `lambda` on both components.
#[wasm_bindgen]
pub fn set_operation(doc_json: &str, op: &str, set_a: &str, set_b: &str, lambda: f64) -> String {
    let run = || -> Result<OpResponse, String> {
        let doc = Document::from_json(doc_json).map_err(|e| e.to_string())?;
        let a = doc.get(set_a).map_err(|e| e.to_string())?;
        let b = doc.get(set_b).map_err(|e| e.to_string())?;
        let mode = OrderMode::Lattice;
        let result = match op {
            "union" => a.union(b, mode),
            "intersection" => a.intersection(b, mode),
            "algebraic-product" => a.algebraic_product(b),
            "absolute-difference" => a.absolute_difference(b),
            "convex-combination" => {
                let weight_value =
                    Hyp::new(lambda, lambda).map_err(|e| e.to_string())?;
                let weight = DFuzzySet::constant(a.universe().clone(), weight_value)
                    .map_err(|e| e.to_string())?;
                DFuzzySet::convex_combination(a, b, &weight)
            }
            other => return Err(format!("unknown operation {other:?}")),
        }
        .map_err(|e| e.to_string())?;
        let incomparable = a.incomparable_points(b).map_err(|e| e.to_string())?;
        Ok(OpResponse {
            op: op.to_string(),
            a: curve(a),
            b: curve(b),
            result: curve(&result),
            incomparable_points: incomparable,
        })
    };
    match run() {
        Ok(response) => ok_json(&response),
        Err(message) => err_json(message),
    }
}

#[derive(Serialize)]
struct WitnessResponse {
    endpoints: (usize, usize),
    interior: usize,
    lambda: f64,
    alpha: Option<String>,
}

#[derive(Serialize)]
struct AlphaResponse {
    set: CurvePoints,
    alpha: [f64; 2],
    cut: Vec<usize>,
    candidate_alphas: Vec<[f64; 2]>,
    convex_by_cuts: bool,
    convex_pointwise: bool,
    strongly_convex: bool,
    witness: Option<WitnessResponse>,
    supremum: [f64; 2],
    supremum_attained: bool,
    core: Vec<usize>,
}

/// Alpha-cut and convexity analysis of one set at an interactive alpha.
#[wasm_bindgen]
pub fn alpha_analysis(doc_json: &str, set_name: &str, alpha_e1: f64, alpha_e2: f64) -> String {
    let run = || -> Result<AlphaResponse, String> {
        let doc = Document::from_json(doc_json).map_err(|e| e.to_string())?;
        let set = doc.get(set_name).map_err(|e| e.to_string())?;
        let alpha = Hyp::new(alpha_e1, alpha_e2).map_err(|e| e.to_string())?;
        let cut = alpha_cut(set, alpha).map_err(|e| e.to_string())?;
        let by_cuts = is_convex_by_cuts(set);
        let pointwise = is_convex_pointwise(set, OrderMode::Lattice).map_err(|e| e.to_string())?;
        let strong = is_strongly_convex(set);
        let witness = by_cuts
            .witness
            .as_ref()
            .or(pointwise.witness.as_ref())
            .map(|w| WitnessResponse {
                endpoints: w.endpoints,
                interior: w.interior,
                lambda: w.lambda,
                alpha: w.alpha.map(|a| a.to_string()),
            });
        let (sup, attained) = essential_supremum(set);
        Ok(AlphaResponse {
            set: curve(set),
            alpha: [alpha.u(), alpha.v()],
            cut,
            candidate_alphas: candidate_alphas(set)
                .into_iter()
                .map(|a| [a.u(), a.v()])
                .collect(),
            convex_by_cuts: by_cuts.convex,
            convex_pointwise: pointwise.convex,
            strongly_convex: strong.convex,
            witness,
            supremum: [sup.u(), sup.v()],
            supremum_attained: attained,
            core: core_points(set),
        })
    };
    match run() {
        Ok(response) => ok_json(&response),
        Err(message) => err_json(message),
    }
}

#[derive(Serialize)]
struct SweepSample {
    threshold: f64,
    degree_e1: f64,
    degree_e2: f64,
}

#[derive(Serialize)]
struct SweepResponse {
    a: CurvePoints,
    b: CurvePoints,
    samples: Vec<SweepSample>,
    best_degree: [f64; 2],
    best_threshold_e1: f64,
    best_threshold_e2: f64,
    intersection_max: [f64; 2],
    theorem_holds: bool,
}

/// Sweep every candidate hyperplane on `axis` and report the separation
/// degree curve together with the optimum and the intersection supremum.
#[wasm_bindgen]
pub fn separation_sweep(doc_json: &str, set_a: &str, set_b: &str, axis: usize) -> String {
    let run = || -> Result<SweepResponse, String> {
        let doc = Document::from_json(doc_json).map_err(|e| e.to_string())?;
        let a = doc.get(set_a).map_err(|e| e.to_string())?;
        let b = doc.get(set_b).map_err(|e| e.to_string())?;
        let thresholds = axis_thresholds(&doc.universe, axis).map_err(|e| e.to_string())?;
        let mut samples = Vec::with_capacity(thresholds.len());
        let mut best = (f64::MIN, f64::MIN);
        let mut best_at = (thresholds[0], thresholds[0]);
        for threshold in thresholds {
            let degree = separation_degree(a, b, &Hyperplane { axis, threshold })
                .map_err(|e| e.to_string())?;
            if degree.u() > best.0 {
                best.0 = degree.u();
                best_at.0 = threshold;
            }
            if degree.v() > best.1 {
                best.1 = degree.v();
                best_at.1 = threshold;
            }
            samples.push(SweepSample {
                threshold,
                degree_e1: degree.u(),
                degree_e2: degree.v(),
            });
        }
        let (sup, _) = essential_supremum(
            &a.intersection(b, OrderMode::Lattice).map_err(|e| e.to_string())?,
        );
        let expected = Hyp::ONE - sup;
        let theorem_holds = Hyp::new(best.0, best.1)
            .map_err(|e| e.to_string())?
            .approx_eq(expected, 1e-12);
        Ok(SweepResponse {
            a: curve(a),
            b: curve(b),
            samples,
            best_degree: [best.0, best.1],
            best_threshold_e1: best_at.0,
            best_threshold_e2: best_at.1,
            intersection_max: [sup.u(), sup.v()],
            theorem_holds,
        })
    };
    match run() {
        Ok(response) => ok_json(&response),
        Err(message) => err_json(message),
    }
}
