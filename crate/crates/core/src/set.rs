//! Fuzzy sets with hyperbolic-valued membership over finite universes.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hyp::{max_d, min_d, Hyp, OrderMode};

/// A finite indexed list of distinct points in real n-space. The index order
/// is the canonical iteration order for every operation.
#[derive(Clone, Debug, PartialEq)]
pub struct Universe {
    dim: usize,
    points: Vec<Vec<f64>>,
    labels: Option<Vec<String>>,
}

impl Universe {
    pub fn new(dim: usize, points: Vec<Vec<f64>>, labels: Option<Vec<String>>) -> Result<Universe> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if points.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        for (index, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::PointDimension {
                    index,
                    expected: dim,
                    got: p.len(),
                });
            }
            for &c in p {
                if !c.is_finite() {
                    return Err(Error::NonFinite {
                        place: "point coordinate",
                        value: c,
                    });
                }
            }
        }
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoint {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        if let Some(ls) = &labels {
            if ls.len() != points.len() {
                return Err(Error::LabelCount {
                    points: points.len(),
                    labels: ls.len(),
                });
            }
        }
        Ok(Universe {
            dim,
            points,
            labels,
        })
    }

    /// One-dimensional universe from a list of coordinates.
    pub fn line(coords: &[f64]) -> Result<Arc<Universe>> {
        let points = coords.iter().map(|&c| vec![c]).collect();
        Ok(Arc::new(Universe::new(1, points, None)?))
    }

    /// Two-dimensional grid, row-major with the x axis outer.
    pub fn grid2(xs: &[f64], ys: &[f64]) -> Result<Arc<Universe>> {
        let mut points = Vec::with_capacity(xs.len() * ys.len());
        for &x in xs {
            for &y in ys {
                points.push(vec![x, y]);
            }
        }
        Ok(Arc::new(Universe::new(2, points, None)?))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor rejects empty point lists
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn point(&self, index: usize) -> &[f64] {
        &self.points[index]
    }

    pub fn label(&self, index: usize) -> Option<&str> {
        self.labels.as_ref().map(|ls| ls[index].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Product universe, row-major with `self` outer. Point `(i, j)` of the
    /// operands lands at index `i * other.len() + j`.
    pub fn product(self: &Arc<Universe>, other: &Arc<Universe>) -> Arc<Universe> {
        let mut points = Vec::with_capacity(self.len() * other.len());
        for a in &self.points {
            for b in &other.points {
                let mut p = Vec::with_capacity(self.dim + other.dim);
                p.extend_from_slice(a);
                p.extend_from_slice(b);
                points.push(p);
            }
        }
        let labels = match (&self.labels, &other.labels) {
            (Some(la), Some(lb)) => {
                let mut ls = Vec::with_capacity(points.len());
                for a in la {
                    for b in lb {
                        ls.push(format!("({a},{b})"));
                    }
                }
                Some(ls)
            }
            _ => None,
        };
        Arc::new(Universe {
            dim: self.dim + other.dim,
            points,
            labels,
        })
    }
}

fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A classical fuzzy set: one real membership grade in `[0, 1]` per point.
#[derive(Clone, Debug, PartialEq)]
pub struct OrdinaryFuzzySet {
    universe: Arc<Universe>,
    values: Vec<f64>,
}

impl OrdinaryFuzzySet {
    pub fn new(universe: Arc<Universe>, values: Vec<f64>) -> Result<OrdinaryFuzzySet> {
        if values.len() != universe.len() {
            return Err(Error::ValueCount {
                points: universe.len(),
                values: values.len(),
            });
        }
        for (index, &x) in values.iter().enumerate() {
            if !(0.0..=1.0).contains(&x) {
                return Err(Error::MembershipRange {
                    index,
                    value: Hyp::raw(x, x),
                    component: "real",
                });
            }
        }
        Ok(OrdinaryFuzzySet { universe, values })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Verdict of the containment test (the order is partial, so a boolean
/// would silently hide incomparable memberships).
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum SubsetVerdict {
    Subset,
    NotSubset,
    /// Index of the first point where the memberships compare in neither
    /// direction.
    IncomparableAt(usize),
}

/// A fuzzy set whose membership function takes values in the hyperbolic unit
/// interval (both components in `[0, 1]`).
#[derive(Clone, Debug, PartialEq)]
pub struct DFuzzySet {
    universe: Arc<Universe>,
    values: Vec<Hyp>,
}

impl DFuzzySet {
    pub fn new(universe: Arc<Universe>, values: Vec<Hyp>) -> Result<DFuzzySet> {
        if values.len() != universe.len() {
            return Err(Error::ValueCount {
                points: universe.len(),
                values: values.len(),
            });
        }
        for (index, &value) in values.iter().enumerate() {
            if !(0.0..=1.0).contains(&value.u()) {
                return Err(Error::MembershipRange {
                    index,
                    value,
                    component: "e1",
                });
            }
            if !(0.0..=1.0).contains(&value.v()) {
                return Err(Error::MembershipRange {
                    index,
                    value,
                    component: "e2",
                });
            }
        }
        Ok(DFuzzySet { universe, values })
    }

    /// Indicator set of an ordinary (crisp) subset.
    pub fn from_crisp(universe: Arc<Universe>, member_flags: &[bool]) -> Result<DFuzzySet> {
        if member_flags.len() != universe.len() {
            return Err(Error::ValueCount {
                points: universe.len(),
                values: member_flags.len(),
            });
        }
        let values = member_flags
            .iter()
            .map(|&m| if m { Hyp::ONE } else { Hyp::ZERO })
            .collect();
        Ok(DFuzzySet { universe, values })
    }

    /// Same membership grade at every point.
    pub fn constant(universe: Arc<Universe>, value: Hyp) -> Result<DFuzzySet> {
        let n = universe.len();
        DFuzzySet::new(universe, vec![value; n])
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn values(&self) -> &[Hyp] {
        &self.values
    }

    pub fn value(&self, index: usize) -> Hyp {
        self.values[index]
    }

    fn check_same_universe(&self, other: &DFuzzySet) -> Result<()> {
        if same_universe(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// Split into the two classical fuzzy sets carried by the idempotent
    /// components.
    pub fn decompose(&self) -> (OrdinaryFuzzySet, OrdinaryFuzzySet) {
        let first = OrdinaryFuzzySet {
            universe: self.universe.clone(),
            values: self.values.iter().map(|x| x.u()).collect(),
        };
        let second = OrdinaryFuzzySet {
            universe: self.universe.clone(),
            values: self.values.iter().map(|x| x.v()).collect(),
        };
        (first, second)
    }

    /// Exact inverse of [`DFuzzySet::decompose`].
    pub fn recompose(first: &OrdinaryFuzzySet, second: &OrdinaryFuzzySet) -> Result<DFuzzySet> {
        if !same_universe(&first.universe, &second.universe) {
            return Err(Error::UniverseMismatch);
        }
        let values = first
            .values
            .iter()
            .zip(&second.values)
            .map(|(&u, &v)| Hyp::raw(u, v))
            .collect();
        Ok(DFuzzySet {
            universe: first.universe.clone(),
            values,
        })
    }

    pub fn is_empty(&self) -> bool {
        self.values.iter().all(|x| x.is_zero())
    }

    /// Exact componentwise equality at every point.
    pub fn equals(&self, other: &DFuzzySet) -> Result<bool> {
        self.check_same_universe(other)?;
        Ok(self.values == other.values)
    }

    /// Equality within an absolute per-component tolerance, for comparing
    /// results of arithmetic operations.
    pub fn equals_tol(&self, other: &DFuzzySet, tol: f64) -> Result<bool> {
        self.check_same_universe(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(&a, &b)| a.approx_eq(b, tol)))
    }

    /// Containment under the pointwise partial order.
    pub fn is_subset(&self, other: &DFuzzySet) -> Result<SubsetVerdict> {
        self.check_same_universe(other)?;
        let mut subset = true;
        for (index, (&a, &b)) in self.values.iter().zip(&other.values).enumerate() {
            if a.partial_cmp(&b).is_none() {
                return Ok(SubsetVerdict::IncomparableAt(index));
            }
            if !a.leq(b) {
                subset = false;
            }
        }
        Ok(if subset {
            SubsetVerdict::Subset
        } else {
            SubsetVerdict::NotSubset
        })
    }

    /// Pointwise `1 - f`.
    pub fn complement(&self) -> DFuzzySet {
        let values = self.values.iter().map(|&x| Hyp::ONE - x).collect();
        DFuzzySet {
            universe: self.universe.clone(),
            values,
        }
    }

    /// Pointwise hyperbolic max. In strict mode an incomparable pair is an
    /// error naming the point.
    pub fn union(&self, other: &DFuzzySet, mode: OrderMode) -> Result<DFuzzySet> {
        self.check_same_universe(other)?;
        let mut values = Vec::with_capacity(self.values.len());
        for (index, (&a, &b)) in self.values.iter().zip(&other.values).enumerate() {
            let joined = max_d(a, b, mode).map_err(|_| Error::IncomparableAt {
                index,
                left: a,
                right: b,
            })?;
            values.push(joined);
        }
        Ok(DFuzzySet {
            universe: self.universe.clone(),
            values,
        })
    }

    /// Pointwise hyperbolic min.
    pub fn intersection(&self, other: &DFuzzySet, mode: OrderMode) -> Result<DFuzzySet> {
        self.check_same_universe(other)?;
        let mut values = Vec::with_capacity(self.values.len());
        for (index, (&a, &b)) in self.values.iter().zip(&other.values).enumerate() {
            let met = min_d(a, b, mode).map_err(|_| Error::IncomparableAt {
                index,
                left: a,
                right: b,
            })?;
            values.push(met);
        }
        Ok(DFuzzySet {
            universe: self.universe.clone(),
            values,
        })
    }

    /// Pointwise sum, defined only while it stays below 1.
    pub fn algebraic_sum(&self, other: &DFuzzySet) -> Result<DFuzzySet> {
        self.check_same_universe(other)?;
        let mut values = Vec::with_capacity(self.values.len());
        for (index, (&a, &b)) in self.values.iter().zip(&other.values).enumerate() {
            let sum = a + b;
            if !sum.leq(Hyp::ONE) {
                return Err(Error::SumRange { index, sum });
            }
            values.push(sum);
        }
        Ok(DFuzzySet {
            universe: self.universe.clone(),
            values,
        })
    }

    /// Pointwise hyperbolic product.
    pub fn algebraic_product(&self, other: &DFuzzySet) -> Result<DFuzzySet> {
        self.check_same_universe(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| a * b)
            .collect();
        Ok(DFuzzySet {
            universe: self.universe.clone(),
            values,
        })
    }

    /// Pointwise `|f_A - f_B|` under the hyperbolic modulus.
    pub fn absolute_difference(&self, other: &DFuzzySet) -> Result<DFuzzySet> {
        self.check_same_universe(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| (a - b).modulus_k())
            .collect();
        Ok(DFuzzySet {
            universe: self.universe.clone(),
            values,
        })
    }

    /// Fuzzy relation on the product universe: value at `(x, y)` is the
    /// hyperbolic min of the operand grades. Universes may differ.
    pub fn cartesian_product(&self, other: &DFuzzySet, mode: OrderMode) -> Result<DFuzzySet> {
        let universe = self.universe.product(&other.universe);
        let mut values = Vec::with_capacity(universe.len());
        for (i, &a) in self.values.iter().enumerate() {
            for (j, &b) in other.values.iter().enumerate() {
                let met = min_d(a, b, mode).map_err(|_| Error::IncomparablePair {
                    left_index: i,
                    right_index: j,
                    left: a,
                    right: b,
                })?;
                values.push(met);
            }
        }
        Ok(DFuzzySet { universe, values })
    }

    /// Pointwise `f_W * f_A + (1 - f_W) * f_B`.
    ///
    /// The exact real value always lies between the operand grades, so the
    /// result is clamped componentwise into `[min, max]` of the operands;
    /// this keeps the containment sandwich exact in floating point.
    pub fn convex_combination(
        a: &DFuzzySet,
        b: &DFuzzySet,
        weight: &DFuzzySet,
    ) -> Result<DFuzzySet> {
        a.check_same_universe(b)?;
        a.check_same_universe(weight)?;
        let mut values = Vec::with_capacity(a.values.len());
        for ((&fa, &fb), &fw) in a.values.iter().zip(&b.values).zip(&weight.values) {
            let raw = fw * fa + (Hyp::ONE - fw) * fb;
            values.push(raw.clamp(fa.meet(fb), fa.join(fb)));
        }
        Ok(DFuzzySet {
            universe: a.universe.clone(),
            values,
        })
    }

    /// Points whose memberships compare in neither direction, i.e. where a
    /// lattice-mode union/intersection goes beyond the textbook max/min.
    pub fn incomparable_points(&self, other: &DFuzzySet) -> Result<Vec<usize>> {
        self.check_same_universe(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .enumerate()
            .filter(|(_, (a, b))| a.partial_cmp(b).is_none())
            .map(|(i, _)| i)
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn h(u: f64, v: f64) -> Hyp {
        Hyp::new(u, v).unwrap()
    }

    fn line4() -> Arc<Universe> {
        Universe::line(&[0.0, 1.0, 2.0, 3.0]).unwrap()
    }

    fn set(universe: &Arc<Universe>, vals: &[(f64, f64)]) -> DFuzzySet {
        let values = vals.iter().map(|&(u, v)| h(u, v)).collect();
        DFuzzySet::new(universe.clone(), values).unwrap()
    }

    #[test]
    fn universe_validation() {
        assert!(matches!(
            Universe::new(1, vec![], None),
            Err(Error::EmptyUniverse)
        ));
        assert!(matches!(
            Universe::new(2, vec![vec![0.0]], None),
            Err(Error::PointDimension { .. })
        ));
        assert!(matches!(
            Universe::new(1, vec![vec![1.0], vec![1.0]], None),
            Err(Error::DuplicatePoint { first: 0, second: 1 })
        ));
        assert!(matches!(
            Universe::new(1, vec![vec![1.0]], Some(vec![])),
            Err(Error::LabelCount { .. })
        ));
    }

    #[test]
    fn membership_validation() {
        let u = line4();
        let bad = DFuzzySet::new(
            u.clone(),
            vec![h(0.2, 0.2), h(1.2, 0.5), h(0.0, 0.0), h(0.0, 0.0)],
        );
        match bad {
            Err(Error::MembershipRange {
                index, component, ..
            }) => {
                assert_eq!(index, 1);
                assert_eq!(component, "e1");
            }
            other => panic!("expected range error, got {other:?}"),
        }
        assert!(matches!(
            DFuzzySet::new(u, vec![h(0.2, 0.2)]),
            Err(Error::ValueCount { .. })
        ));
    }

    #[test]
    fn empty_and_crisp() {
        let u = line4();
        let empty = DFuzzySet::constant(u.clone(), Hyp::ZERO).unwrap();
        assert!(empty.is_empty());
        let full = DFuzzySet::from_crisp(u.clone(), &[true; 4]).unwrap();
        assert!(full.values().iter().all(|&x| x == Hyp::ONE));
        let none = DFuzzySet::from_crisp(u.clone(), &[false; 4]).unwrap();
        assert!(none.is_empty());

        let flags = [true, false, true, false];
        let mixed = DFuzzySet::from_crisp(u.clone(), &flags).unwrap();
        let negated: Vec<bool> = flags.iter().map(|f| !f).collect();
        let other = DFuzzySet::from_crisp(u, &negated).unwrap();
        assert!(mixed.complement().equals(&other).unwrap());
    }

    #[test]
    fn decompose_recompose() {
        let u = line4();
        let a = set(&u, &[(0.06, 0.07), (0.2, 0.9), (1.0, 0.0), (0.5, 0.5)]);
        let (a1, a2) = a.decompose();
        assert_eq!(a1.values(), &[0.06, 0.2, 1.0, 0.5]);
        assert_eq!(a2.values(), &[0.07, 0.9, 0.0, 0.5]);
        let back = DFuzzySet::recompose(&a1, &a2).unwrap();
        assert!(back.equals(&a).unwrap());

        // a crisp set splits into two identical indicator functions
        let crisp = DFuzzySet::from_crisp(u, &[true, false, false, true]).unwrap();
        let (c1, c2) = crisp.decompose();
        assert_eq!(c1.values(), c2.values());
        assert_eq!(c1.values(), &[1.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn complement_values() {
        let u = line4();
        let a = set(&u, &[(0.06, 0.04), (0.0, 0.0), (1.0, 1.0), (0.5, 0.5)]);
        let c = a.complement();
        assert_eq!(c.value(0).to_string(), "0.94e1+0.96e2");
        assert_eq!(c.value(1), Hyp::ONE);
        assert_eq!(c.value(2), Hyp::ZERO);
    }

    #[test]
    fn subset_verdicts() {
        let u = line4();
        let a = set(&u, &[(0.2, 0.2), (0.5, 0.5), (0.1, 0.1), (0.0, 0.0)]);
        let b = a.union(&set(&u, &[(0.3, 0.1), (0.2, 0.6), (0.1, 0.1), (0.0, 0.1)]), OrderMode::Lattice).unwrap();
        assert_eq!(a.is_subset(&b).unwrap(), SubsetVerdict::Subset);

        let empty = DFuzzySet::constant(u.clone(), Hyp::ZERO).unwrap();
        assert_eq!(empty.is_subset(&a).unwrap(), SubsetVerdict::Subset);

        let c = set(&u, &[(0.5, 0.2), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)]);
        let d = set(&u, &[(0.2, 0.5), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)]);
        assert_eq!(c.is_subset(&d).unwrap(), SubsetVerdict::IncomparableAt(0));

        assert_eq!(b.is_subset(&a).unwrap(), SubsetVerdict::NotSubset);
    }

    #[test]
    fn union_intersection_modes() {
        let u = line4();
        let a = set(&u, &[(0.06, 0.04), (0.3, 0.6), (0.5, 0.5), (0.0, 0.0)]);
        let b = set(&u, &[(0.06, 0.07), (0.5, 0.4), (0.5, 0.5), (1.0, 1.0)]);
        let un = a.union(&b, OrderMode::Lattice).unwrap();
        assert_eq!(un.value(0), h(0.06, 0.07));
        assert_eq!(un.value(1), h(0.5, 0.6));
        let meet = a.intersection(&b, OrderMode::Lattice).unwrap();
        assert_eq!(meet.value(1), h(0.3, 0.4));

        // strict mode reports the offending point
        match a.union(&b, OrderMode::Strict) {
            Err(Error::IncomparableAt { index: 1, .. }) => {}
            other => panic!("expected incomparability at point 1, got {other:?}"),
        }

        let crisp = DFuzzySet::from_crisp(u, &[true, false, true, false]).unwrap();
        assert!(crisp
            .intersection(&crisp.complement(), OrderMode::Strict)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn algebraic_ops() {
        let u = line4();
        let a = set(&u, &[(0.4, 0.1), (0.5, 0.4), (0.2, 0.9), (0.7, 0.7)]);
        let b = set(&u, &[(0.5, 0.3), (0.2, 0.5), (0.5, 0.1), (0.6, 0.2)]);

        match a.algebraic_sum(&b) {
            Err(Error::SumRange { index: 3, sum }) => {
                assert!(sum.approx_eq(h(1.3, 0.9), 1e-12));
            }
            other => panic!("expected sum guard at point 3, got {other:?}"),
        }
        let empty = DFuzzySet::constant(u.clone(), Hyp::ZERO).unwrap();
        assert!(a.algebraic_sum(&empty).unwrap().equals(&a).unwrap());
        let small = set(&u, &[(0.4, 0.1), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)]);
        let sum = small.algebraic_sum(&b).unwrap();
        assert!(sum.value(0).approx_eq(h(0.9, 0.4), 1e-15));

        let prod = a.algebraic_product(&b).unwrap();
        assert!(prod.value(1).approx_eq(h(0.1, 0.2), 1e-15));

        assert!(a.absolute_difference(&a).unwrap().is_empty());
        let diff = a.absolute_difference(&b).unwrap();
        assert!(diff.value(2).approx_eq(h(0.3, 0.8), 1e-15));
    }

    #[test]
    fn cartesian_product_layout() {
        let x = Universe::line(&[0.0, 1.0]).unwrap();
        let y = Universe::line(&[10.0, 20.0, 30.0]).unwrap();
        let a = set(&x, &[(0.3, 0.6), (1.0, 1.0)]);
        let b = set(&y, &[(0.5, 0.4), (1.0, 1.0), (0.2, 0.2)]);
        let p = a.cartesian_product(&b, OrderMode::Lattice).unwrap();
        assert_eq!(p.universe().dim(), 2);
        assert_eq!(p.universe().len(), 6);
        assert_eq!(p.universe().point(1), &[0.0, 20.0]);
        // value at (x0, y0) is the componentwise min
        assert_eq!(p.value(0), h(0.3, 0.4));

        // a full second operand reproduces the first at every fiber
        let full = DFuzzySet::constant(y.clone(), Hyp::ONE).unwrap();
        let p2 = a.cartesian_product(&full, OrderMode::Lattice).unwrap();
        for i in 0..2 {
            for j in 0..3 {
                assert_eq!(p2.value(i * 3 + j), a.value(i));
            }
        }

        let none = DFuzzySet::constant(x.clone(), Hyp::ZERO).unwrap();
        assert!(none.cartesian_product(&b, OrderMode::Lattice).unwrap().is_empty());

        // strict mode names both offending indices
        match a.cartesian_product(&b, OrderMode::Strict) {
            Err(Error::IncomparablePair {
                left_index: 0,
                right_index: 0,
                ..
            }) => {}
            other => panic!("expected incomparable pair (0, 0), got {other:?}"),
        }
    }

    #[test]
    fn convex_combination_basics() {
        let u = line4();
        let a = set(&u, &[(0.2, 0.2), (0.9, 0.1), (0.5, 0.5), (1.0, 1.0)]);
        let b = set(&u, &[(0.8, 0.8), (0.1, 0.9), (0.5, 0.5), (0.0, 0.0)]);

        let all = DFuzzySet::constant(u.clone(), Hyp::ONE).unwrap();
        let picked = DFuzzySet::convex_combination(&a, &b, &all).unwrap();
        assert!(picked.equals(&a).unwrap());

        let half = DFuzzySet::constant(u.clone(), h(0.5, 0.5)).unwrap();
        let mid = DFuzzySet::convex_combination(&a, &b, &half).unwrap();
        assert_eq!(mid.value(0), h(0.5, 0.5));
    }

    #[test]
    fn universe_mismatch_reported() {
        let a = set(&line4(), &[(0.1, 0.1); 4]);
        let b = set(&Universe::line(&[0.0, 1.0]).unwrap(), &[(0.1, 0.1); 2]);
        assert!(matches!(a.union(&b, OrderMode::Lattice), Err(Error::UniverseMismatch)));
        assert!(matches!(a.equals(&b), Err(Error::UniverseMismatch)));
    }

    fn grid_hyp() -> impl Strategy<Value = Hyp> {
        (0..=20u32, 0..=20u32).prop_map(|(a, b)| h(a as f64 / 20.0, b as f64 / 20.0))
    }

    fn grid_set(n: usize) -> impl Strategy<Value = Vec<Hyp>> {
        proptest::collection::vec(grid_hyp(), n)
    }

    proptest! {
        #[test]
        fn lattice_set_laws(a in grid_set(5), b in grid_set(5), c in grid_set(5)) {
            let u = Universe::line(&[0.0, 1.0, 2.0, 3.0, 4.0]).unwrap();
            let a = DFuzzySet::new(u.clone(), a).unwrap();
            let b = DFuzzySet::new(u.clone(), b).unwrap();
            let c = DFuzzySet::new(u.clone(), c).unwrap();
            let m = OrderMode::Lattice;

            // De Morgan, both directions, bit-exact
            let lhs = a.union(&b, m).unwrap().complement();
            let rhs = a.complement().intersection(&b.complement(), m).unwrap();
            prop_assert!(lhs.equals(&rhs).unwrap());
            let lhs = a.intersection(&b, m).unwrap().complement();
            let rhs = a.complement().union(&b.complement(), m).unwrap();
            prop_assert!(lhs.equals(&rhs).unwrap());

            // distributivity
            let lhs = c.intersection(&a.union(&b, m).unwrap(), m).unwrap();
            let rhs = c.intersection(&a, m).unwrap().union(&c.intersection(&b, m).unwrap(), m).unwrap();
            prop_assert!(lhs.equals(&rhs).unwrap());
            let lhs = c.union(&a.intersection(&b, m).unwrap(), m).unwrap();
            let rhs = c.union(&a, m).unwrap().intersection(&c.union(&b, m).unwrap(), m).unwrap();
            prop_assert!(lhs.equals(&rhs).unwrap());

            // idempotent, commutative, associative, absorbing
            prop_assert!(a.union(&a, m).unwrap().equals(&a).unwrap());
            prop_assert!(a.union(&b, m).unwrap().equals(&b.union(&a, m).unwrap()).unwrap());
            let assoc_l = a.union(&b.union(&c, m).unwrap(), m).unwrap();
            let assoc_r = a.union(&b, m).unwrap().union(&c, m).unwrap();
            prop_assert!(assoc_l.equals(&assoc_r).unwrap());
            prop_assert!(a.union(&a.intersection(&b, m).unwrap(), m).unwrap().equals(&a).unwrap());
            prop_assert!(a.intersection(&a.union(&b, m).unwrap(), m).unwrap().equals(&a).unwrap());

            // complementing twice reproduces the set up to one rounding of
            // 1 - x; the sum with the complement is exactly 1
            prop_assert!(a.complement().complement().equals_tol(&a, 1e-15).unwrap());
            let full = a.algebraic_sum(&a.complement()).unwrap();
            prop_assert!(full.values().iter().all(|&x| x == Hyp::ONE));
        }

        #[test]
        fn union_commutes_with_decompose(a in grid_set(4), b in grid_set(4)) {
            let u = Universe::line(&[0.0, 1.0, 2.0, 3.0]).unwrap();
            let a = DFuzzySet::new(u.clone(), a).unwrap();
            let b = DFuzzySet::new(u.clone(), b).unwrap();
            let (u1, u2) = a.union(&b, OrderMode::Lattice).unwrap().decompose();
            let (a1, a2) = a.decompose();
            let (b1, b2) = b.decompose();
            for i in 0..4 {
                prop_assert_eq!(u1.values()[i], a1.values()[i].max(b1.values()[i]));
                prop_assert_eq!(u2.values()[i], a2.values()[i].max(b2.values()[i]));
            }
            let (i1, i2) = a.intersection(&b, OrderMode::Lattice).unwrap().decompose();
            for i in 0..4 {
                prop_assert_eq!(i1.values()[i], a1.values()[i].min(b1.values()[i]));
                prop_assert_eq!(i2.values()[i], a2.values()[i].min(b2.values()[i]));
            }
        }

        #[test]
        fn sandwich_property(a in grid_set(5), b in grid_set(5), w in grid_set(5)) {
            let u = Universe::line(&[0.0, 1.0, 2.0, 3.0, 4.0]).unwrap();
            let a = DFuzzySet::new(u.clone(), a).unwrap();
            let b = DFuzzySet::new(u.clone(), b).unwrap();
            let w = DFuzzySet::new(u.clone(), w).unwrap();
            let combo = DFuzzySet::convex_combination(&a, &b, &w).unwrap();
            let inter = a.intersection(&b, OrderMode::Lattice).unwrap();
            let union = a.union(&b, OrderMode::Lattice).unwrap();
            prop_assert_eq!(inter.is_subset(&combo).unwrap(), SubsetVerdict::Subset);
            prop_assert_eq!(combo.is_subset(&union).unwrap(), SubsetVerdict::Subset);
        }

        #[test]
        fn containment_extrema(a in grid_set(4), b in grid_set(4), extra in grid_set(4)) {
            let u = Universe::line(&[0.0, 1.0, 2.0, 3.0]).unwrap();
            let a = DFuzzySet::new(u.clone(), a).unwrap();
            let b = DFuzzySet::new(u.clone(), b).unwrap();
            let extra = DFuzzySet::new(u.clone(), extra).unwrap();
            let m = OrderMode::Lattice;
            let un = a.union(&b, m).unwrap();
            prop_assert_eq!(a.is_subset(&un).unwrap(), SubsetVerdict::Subset);
            prop_assert_eq!(b.is_subset(&un).unwrap(), SubsetVerdict::Subset);
            // any upper bound of both contains the union
            let d = un.union(&extra, m).unwrap();
            prop_assert_eq!(un.is_subset(&d).unwrap(), SubsetVerdict::Subset);
            // dual statement for the intersection
            let inter = a.intersection(&b, m).unwrap();
            prop_assert_eq!(inter.is_subset(&a).unwrap(), SubsetVerdict::Subset);
            let lower = inter.intersection(&extra, m).unwrap();
            prop_assert_eq!(lower.is_subset(&inter).unwrap(), SubsetVerdict::Subset);
        }
    }
}
