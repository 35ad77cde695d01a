//! Convexity analysis on finite grid universes: alpha-cuts, the two
//! convexity definitions, boundedness certificates, essential suprema,
//! cores, shadows, and hyperplane separation.
//!
//! A finite point set is treated as convex when it contains every universe
//! point lying on the open segment between two of its members. That is the
//! restriction of convexity in real n-space to a sampled universe and makes
//! the cut-based and the pointwise definitions provably equivalent.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyp::{min_d, point_norm, Hyp, OrderMode};
use crate::set::{DFuzzySet, Universe};

/// Tolerance for deciding that a grid point lies on a segment.
pub const COLLINEARITY_TOL: f64 = 1e-9;

/// An axis-aligned hyperplane `{ x : x[axis] = threshold }`. Points with
/// `x[axis] == threshold` lie on the hyperplane and count on both sides.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Hyperplane {
    pub axis: usize,
    pub threshold: f64,
}

/// A violating configuration: membership at `interior` (a grid point at
/// parameter `lambda` on the open segment between `endpoints`) fails to
/// dominate what convexity requires. `alpha` is set when the violation was
/// found through an alpha-cut.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvexityWitness {
    pub endpoints: (usize, usize),
    pub interior: usize,
    pub lambda: f64,
    pub alpha: Option<Hyp>,
}

/// Outcome of a convexity check; `witness` is present exactly when
/// `convex` is false and can be re-checked by hand.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvexityReport {
    pub convex: bool,
    pub witness: Option<ConvexityWitness>,
    pub alphas_tested: Vec<Hyp>,
}

impl ConvexityReport {
    fn pass(alphas_tested: Vec<Hyp>) -> ConvexityReport {
        ConvexityReport {
            convex: true,
            witness: None,
            alphas_tested,
        }
    }

    fn fail(witness: ConvexityWitness, alphas_tested: Vec<Hyp>) -> ConvexityReport {
        ConvexityReport {
            convex: false,
            witness: Some(witness),
            alphas_tested,
        }
    }
}

/// Result of the brute-force hyperplane sweep. Each component of
/// `best_degree` may be realized by its own hyperplane; `joint_hyperplane`
/// is the single best compromise (largest worst component, ties broken by
/// the component sum, then by axis and threshold).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeparationReport {
    pub best_degree: Hyp,
    pub best_threshold_u: Hyperplane,
    pub best_threshold_v: Hyperplane,
    pub joint_best_degree: Hyp,
    pub joint_hyperplane: Hyperplane,
    /// Essential supremum of the intersection; for convex operands on a
    /// line the per-component optimum equals `1 - intersection_max`.
    pub intersection_max: Hyp,
    pub intersection_max_attained: bool,
}

/// Verdict of the shadow comparison between two sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ShadowVerdict {
    /// The sets are equal, so every shadow agrees.
    Equal,
    /// Shadows onto the hyperplane dropping this axis differ.
    DifferingAxis(usize),
    /// The sets differ but all tested axis-aligned shadows agree; telling
    /// them apart would need a hyperplane outside the tested family.
    Inconclusive,
}

/// Indices of points whose membership dominates `alpha`. Memberships
/// incomparable with `alpha` are excluded. `alpha` must have both
/// components in `(0, 1]`.
pub fn alpha_cut(set: &DFuzzySet, alpha: Hyp) -> Result<Vec<usize>> {
    if !(alpha.u() > 0.0 && alpha.u() <= 1.0 && alpha.v() > 0.0 && alpha.v() <= 1.0) {
        return Err(Error::AlphaRange { alpha });
    }
    Ok(cut_indices(set, alpha))
}

fn cut_indices(set: &DFuzzySet, alpha: Hyp) -> Vec<usize> {
    set.values()
        .iter()
        .enumerate()
        .filter(|(_, f)| alpha.leq(**f))
        .map(|(i, _)| i)
        .collect()
}

fn attained_components(set: &DFuzzySet) -> (Vec<f64>, Vec<f64>) {
    let mut us: Vec<f64> = set.values().iter().map(|f| f.u()).collect();
    let mut vs: Vec<f64> = set.values().iter().map(|f| f.v()).collect();
    us.sort_by(f64::total_cmp);
    us.dedup();
    vs.sort_by(f64::total_cmp);
    vs.dedup();
    (us, vs)
}

/// All pairs of attained positive component values, sorted. Cuts change only
/// at attained values, so testing cut convexity at exactly these alphas
/// covers every alpha with both components in `(0, 1]`.
pub fn candidate_alphas(set: &DFuzzySet) -> Vec<Hyp> {
    let (us, vs) = attained_components(set);
    let mut alphas = Vec::new();
    for &u in us.iter().filter(|&&u| u > 0.0) {
        for &v in vs.iter().filter(|&&v| v > 0.0) {
            alphas.push(Hyp::new(u, v).unwrap());
        }
    }
    alphas
}

/// Like [`candidate_alphas`] but keeping zero components (dropping only the
/// all-zero pair, whose cut is the whole universe and always convex). The
/// cut criterion has to include these boundary alphas to coincide with the
/// pointwise criterion on sets that attain membership 0.
fn closure_alphas(set: &DFuzzySet) -> Vec<Hyp> {
    let (us, vs) = attained_components(set);
    let mut alphas = Vec::new();
    for &u in &us {
        for &v in &vs {
            if u == 0.0 && v == 0.0 {
                continue;
            }
            alphas.push(Hyp::new(u, v).unwrap());
        }
    }
    alphas
}

/// Universe points on the open segment between points `i` and `j`, each with
/// its parameter `lambda` in `(0, 1)` measured from `i` towards `j`, sorted
/// by `lambda`.
pub fn segment_points(universe: &Universe, i: usize, j: usize) -> Vec<(usize, f64)> {
    assert!(i != j, "segment endpoints must differ");
    let a = universe.point(i);
    let b = universe.point(j);
    let delta: Vec<f64> = b.iter().zip(a).map(|(bc, ac)| bc - ac).collect();
    // parameterize along the coordinate with the largest travel
    let (axis, scale) = delta
        .iter()
        .enumerate()
        .max_by(|(_, x), (_, y)| x.abs().total_cmp(&y.abs()))
        .map(|(k, &d)| (k, d))
        .expect("universe dimension is positive");
    let mut result = Vec::new();
    if scale == 0.0 {
        return result; // distinct points always travel somewhere
    }
    'points: for (idx, p) in universe.points().iter().enumerate() {
        if idx == i || idx == j {
            continue;
        }
        let lambda = (p[axis] - a[axis]) / scale;
        if !(lambda > 0.0 && lambda < 1.0) {
            continue;
        }
        for c in 0..universe.dim() {
            let expected = a[c] + lambda * delta[c];
            if (p[c] - expected).abs() > COLLINEARITY_TOL {
                continue 'points;
            }
        }
        result.push((idx, lambda));
    }
    result.sort_by(|(_, x), (_, y)| x.total_cmp(y));
    result
}

/// For one unordered point pair: the endpoints and the grid points on the
/// open segment between them.
type Segment = (usize, usize, Vec<(usize, f64)>);

/// Segment structure of a universe, computed once per analysis.
fn all_segments(universe: &Universe) -> Vec<Segment> {
    let n = universe.len();
    let mut segments = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let interior = segment_points(universe, i, j);
            if !interior.is_empty() {
                segments.push((i, j, interior));
            }
        }
    }
    segments
}

/// Whether `member` (a sorted set of point indices) contains every universe
/// point on every open segment between two of its members; on failure the
/// first violating configuration is returned.
pub fn grid_convex_witness(
    universe: &Universe,
    members: &[usize],
) -> Option<(usize, usize, usize, f64)> {
    let mut in_set = vec![false; universe.len()];
    for &m in members {
        in_set[m] = true;
    }
    for (mi, &i) in members.iter().enumerate() {
        for &j in &members[mi + 1..] {
            for (k, lambda) in segment_points(universe, i, j) {
                if !in_set[k] {
                    return Some((i, j, k, lambda));
                }
            }
        }
    }
    None
}

/// Cut-based convexity: every alpha-cut over the attained alphas (including
/// the boundary alphas with a zero component) is grid-convex.
pub fn is_convex_by_cuts(set: &DFuzzySet) -> ConvexityReport {
    let universe = set.universe();
    let alphas = closure_alphas(set);
    let segments = all_segments(universe);
    let mut in_cut = vec![false; universe.len()];
    for &alpha in &alphas {
        for (idx, f) in set.values().iter().enumerate() {
            in_cut[idx] = alpha.leq(*f);
        }
        for &(i, j, ref interior) in &segments {
            if !(in_cut[i] && in_cut[j]) {
                continue;
            }
            for &(k, lambda) in interior {
                if !in_cut[k] {
                    return ConvexityReport::fail(
                        ConvexityWitness {
                            endpoints: (i, j),
                            interior: k,
                            lambda,
                            alpha: Some(alpha),
                        },
                        alphas,
                    );
                }
            }
        }
    }
    ConvexityReport::pass(alphas)
}

/// Pointwise convexity: membership at every grid point of every open
/// segment dominates the hyperbolic min of the endpoint memberships.
pub fn is_convex_pointwise(set: &DFuzzySet, mode: OrderMode) -> Result<ConvexityReport> {
    let universe = set.universe();
    for (i, j, interior) in all_segments(universe) {
        let bound = min_d(set.value(i), set.value(j), mode).map_err(|_| Error::IncomparablePair {
            left_index: i,
            right_index: j,
            left: set.value(i),
            right: set.value(j),
        })?;
        for (k, lambda) in interior {
            if !bound.leq(set.value(k)) {
                return Ok(ConvexityReport::fail(
                    ConvexityWitness {
                        endpoints: (i, j),
                        interior: k,
                        lambda,
                        alpha: None,
                    },
                    Vec::new(),
                ));
            }
        }
    }
    Ok(ConvexityReport::pass(Vec::new()))
}

/// Strong convexity: strict dominance in both components at every interior
/// grid point of every open segment between distinct points.
pub fn is_strongly_convex(set: &DFuzzySet) -> ConvexityReport {
    let universe = set.universe();
    for (i, j, interior) in all_segments(universe) {
        let bound = set.value(i).meet(set.value(j));
        for (k, lambda) in interior {
            if !bound.strict_lt(set.value(k)) {
                return ConvexityReport::fail(
                    ConvexityWitness {
                        endpoints: (i, j),
                        interior: k,
                        lambda,
                        alpha: None,
                    },
                    Vec::new(),
                );
            }
        }
    }
    ConvexityReport::pass(Vec::new())
}

/// Boundedness certificate: for each candidate alpha, the largest point norm
/// over the cut (zero for an empty cut). Finite universes are always
/// bounded, so the interesting output is the radius function itself.
pub fn bounding_radius(set: &DFuzzySet) -> Vec<(Hyp, Hyp)> {
    let universe = set.universe();
    candidate_alphas(set)
        .into_iter()
        .map(|alpha| {
            let radius = cut_indices(set, alpha)
                .into_iter()
                .map(|i| point_norm(universe.point(i)))
                .fold(Hyp::ZERO, |acc, n| acc.join(n));
            (alpha, radius)
        })
        .collect()
}

/// Componentwise supremum of the membership function, and whether a single
/// point attains both components at once.
pub fn essential_supremum(set: &DFuzzySet) -> (Hyp, bool) {
    let sup = set
        .values()
        .iter()
        .fold(Hyp::ZERO, |acc, &f| acc.join(f));
    let attained = set.values().contains(&sup);
    (sup, attained)
}

/// Points with membership within `epsilon` of the essential supremum. Both
/// components of `epsilon` must be strictly positive. When the supremum is
/// not attained at a single point this can be empty for small `epsilon`;
/// callers are expected to surface that rather than treat it as an error.
pub fn q_set(set: &DFuzzySet, epsilon: Hyp) -> Result<Vec<usize>> {
    if !epsilon.is_positive() {
        return Err(Error::EpsilonRange { epsilon });
    }
    let (sup, _) = essential_supremum(set);
    let floor = sup - epsilon;
    Ok(set
        .values()
        .iter()
        .enumerate()
        .filter(|(_, f)| floor.leq(**f))
        .map(|(i, _)| i)
        .collect())
}

/// The core: points where the essential supremum is attained exactly.
/// Empty when no single point reaches both component maxima.
pub fn core_points(set: &DFuzzySet) -> Vec<usize> {
    let (sup, _) = essential_supremum(set);
    set.values()
        .iter()
        .enumerate()
        .filter(|(_, f)| **f == sup)
        .map(|(i, _)| i)
        .collect()
}

/// Shadow (projection) of the set onto the coordinate hyperplane obtained by
/// dropping `axis`: the projected universe deduplicates the remaining
/// coordinates in first-occurrence order, and each projected point carries
/// the componentwise supremum over its fiber.
pub fn shadow(set: &DFuzzySet, axis: usize) -> Result<DFuzzySet> {
    let universe = set.universe();
    if universe.dim() < 2 {
        return Err(Error::NeedsDim2 {
            dim: universe.dim(),
        });
    }
    if axis >= universe.dim() {
        return Err(Error::AxisRange {
            axis,
            dim: universe.dim(),
        });
    }
    let mut projected: Vec<Vec<f64>> = Vec::new();
    let mut values: Vec<Hyp> = Vec::new();
    for (idx, p) in universe.points().iter().enumerate() {
        let mut q = p.clone();
        q.remove(axis);
        match projected.iter().position(|existing| *existing == q) {
            Some(slot) => values[slot] = values[slot].join(set.value(idx)),
            None => {
                projected.push(q);
                values.push(set.value(idx));
            }
        }
    }
    let shadow_universe = Arc::new(Universe::new(universe.dim() - 1, projected, None)?);
    DFuzzySet::new(shadow_universe, values)
}

/// Search the given axes for one whose shadows distinguish `a` from `b`.
/// Never concludes equality from agreeing shadows: for distinct convex sets
/// whose axis-aligned shadows all agree the answer is `Inconclusive`.
pub fn shadow_witness(a: &DFuzzySet, b: &DFuzzySet, axes: &[usize]) -> Result<ShadowVerdict> {
    if a.equals(b)? {
        return Ok(ShadowVerdict::Equal);
    }
    for &axis in axes {
        let sa = shadow(a, axis)?;
        let sb = shadow(b, axis)?;
        if !sa.equals(&sb)? {
            return Ok(ShadowVerdict::DifferingAxis(axis));
        }
    }
    Ok(ShadowVerdict::Inconclusive)
}

fn side_sup(set: &DFuzzySet, h: &Hyperplane, keep_geq: bool) -> Hyp {
    let universe = set.universe();
    let mut sup = Hyp::ZERO;
    for (idx, p) in universe.points().iter().enumerate() {
        let side = p[h.axis] - h.threshold;
        // points exactly on the hyperplane are constrained on both sides
        let on_side = if keep_geq { side >= 0.0 } else { side <= 0.0 };
        if on_side {
            sup = sup.join(set.value(idx));
        }
    }
    sup
}

/// Degree of separation of `a` and `b` by the hyperplane: `1 - K` where `K`
/// caps one operand on each side, componentwise over the better of the two
/// orientations.
pub fn separation_degree(a: &DFuzzySet, b: &DFuzzySet, h: &Hyperplane) -> Result<Hyp> {
    if !Arc::ptr_eq(a.universe(), b.universe()) && a.universe() != b.universe() {
        return Err(Error::UniverseMismatch);
    }
    if h.axis >= a.universe().dim() {
        return Err(Error::AxisRange {
            axis: h.axis,
            dim: a.universe().dim(),
        });
    }
    let k_first = side_sup(a, h, true).join(side_sup(b, h, false));
    let k_second = side_sup(a, h, false).join(side_sup(b, h, true));
    Ok(Hyp::ONE - k_first.meet(k_second))
}

/// Candidate thresholds on an axis: midpoints between consecutive distinct
/// coordinate values plus one sentinel on each side.
pub fn axis_thresholds(universe: &Universe, axis: usize) -> Result<Vec<f64>> {
    if axis >= universe.dim() {
        return Err(Error::AxisRange {
            axis,
            dim: universe.dim(),
        });
    }
    let mut coords: Vec<f64> = universe.points().iter().map(|p| p[axis]).collect();
    coords.sort_by(f64::total_cmp);
    coords.dedup();
    let mut thresholds = Vec::with_capacity(coords.len() + 1);
    thresholds.push(coords[0] - 1.0);
    for w in coords.windows(2) {
        thresholds.push((w[0] + w[1]) / 2.0);
    }
    thresholds.push(coords[coords.len() - 1] + 1.0);
    Ok(thresholds)
}

/// Brute-force sweep over every axis-aligned candidate hyperplane. Each
/// component of the reported optimum may pick its own hyperplane; the joint
/// hyperplane maximizes the worse component (component sum as tie-break).
pub fn optimal_separation(a: &DFuzzySet, b: &DFuzzySet) -> Result<SeparationReport> {
    let universe = a.universe();
    let mut best_u: Option<(f64, Hyperplane)> = None;
    let mut best_v: Option<(f64, Hyperplane)> = None;
    let mut best_joint: Option<(f64, f64, Hyp, Hyperplane)> = None;
    for axis in 0..universe.dim() {
        for threshold in axis_thresholds(universe, axis)? {
            let h = Hyperplane { axis, threshold };
            let d = separation_degree(a, b, &h)?;
            if best_u.is_none_or(|(u, _)| d.u() > u) {
                best_u = Some((d.u(), h));
            }
            if best_v.is_none_or(|(v, _)| d.v() > v) {
                best_v = Some((d.v(), h));
            }
            let score = (d.u().min(d.v()), d.u() + d.v());
            if best_joint.is_none_or(|(worst, sum, _, _)| score > (worst, sum)) {
                best_joint = Some((score.0, score.1, d, h));
            }
        }
    }
    let (du, hu) = best_u.expect("universes are nonempty");
    let (dv, hv) = best_v.expect("universes are nonempty");
    let (_, _, joint_degree, joint_h) = best_joint.expect("universes are nonempty");
    let (sup, attained) = essential_supremum(&a.intersection(b, OrderMode::Lattice)?);
    Ok(SeparationReport {
        best_degree: Hyp::new(du, dv).unwrap(),
        best_threshold_u: hu,
        best_threshold_v: hv,
        joint_best_degree: joint_degree,
        joint_hyperplane: joint_h,
        intersection_max: sup,
        intersection_max_attained: attained,
    })
}
