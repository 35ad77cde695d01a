//! Seeded generators and independent brute-force oracles.
//!
//! Everything here is deterministic: the same seed and configuration always
//! produce the same universes, sets and verdicts, so every law suite and the
//! acceptance run are reproducible bit for bit.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::convex::is_convex_pointwise;
use crate::convex::is_strongly_convex;
use crate::error::{Error, Result};
use crate::hyp::{Hyp, OrderMode};
use crate::set::{DFuzzySet, Universe};

/// Membership grid in steps of 0.05. Lattice operations on these values are
/// exact, which keeps the law checks free of float-equality noise. Each
/// level is the correctly rounded decimal (`k / 20`), so values survive the
/// 12-digit text rendering bit for bit.
pub fn default_levels() -> Vec<f64> {
    (0..=20).map(|k| k as f64 / 20.0).collect()
}

/// Generator configuration. Identical configuration and seed give an
/// identical stream of values.
#[derive(Clone, Debug, PartialEq)]
pub struct GenConfig {
    pub seed: u64,
    /// 1D universes draw their point count from this range.
    pub min_points: usize,
    pub max_points: usize,
    /// 1 for sampled lines, 2 for sampled grids.
    pub dim: usize,
    /// Admissible membership component values.
    pub levels: Vec<f64>,
    pub trials: usize,
}

impl Default for GenConfig {
    fn default() -> GenConfig {
        GenConfig {
            seed: 42,
            min_points: 3,
            max_points: 8,
            dim: 1,
            levels: default_levels(),
            trials: 500,
        }
    }
}

impl GenConfig {
    pub fn with_seed(seed: u64) -> GenConfig {
        GenConfig {
            seed,
            ..GenConfig::default()
        }
    }

    pub fn two_dimensional(seed: u64) -> GenConfig {
        GenConfig {
            seed,
            dim: 2,
            ..GenConfig::default()
        }
    }
}

/// Deterministic source of universes and membership assignments.
pub struct Generator {
    cfg: GenConfig,
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(cfg: GenConfig) -> Generator {
        let rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        Generator { cfg, rng }
    }

    pub fn from_seed(seed: u64) -> Generator {
        Generator::new(GenConfig::with_seed(seed))
    }

    pub fn config(&self) -> &GenConfig {
        &self.cfg
    }

    fn level(&mut self) -> f64 {
        self.cfg.levels[self.rng.gen_range(0..self.cfg.levels.len())]
    }

    /// A membership grade with independent components from the level grid.
    pub fn hyp(&mut self) -> Hyp {
        Hyp::new(self.level(), self.level()).unwrap()
    }

    /// Uniform hyperbolic number with components in `[-1, 1]` (not grid
    /// quantized; for arithmetic identities tested at tolerance).
    pub fn hyp_uniform(&mut self) -> Hyp {
        Hyp::new(self.rng.gen_range(-1.0..1.0), self.rng.gen_range(-1.0..1.0)).unwrap()
    }

    /// A fresh universe per the configured dimension: integer-coordinate
    /// lines, or small integer grids for dimension 2.
    pub fn universe(&mut self) -> Arc<Universe> {
        match self.cfg.dim {
            1 => {
                let n = self
                    .rng
                    .gen_range(self.cfg.min_points..=self.cfg.max_points);
                let coords: Vec<f64> = (0..n).map(|i| i as f64).collect();
                Universe::line(&coords).unwrap()
            }
            2 => {
                let nx = self.rng.gen_range(2..=4usize);
                let ny = self.rng.gen_range(2..=4usize);
                let xs: Vec<f64> = (0..nx).map(|i| i as f64).collect();
                let ys: Vec<f64> = (0..ny).map(|i| i as f64).collect();
                Universe::grid2(&xs, &ys).unwrap()
            }
            d => panic!("unsupported generator dimension {d}"),
        }
    }

    /// Arbitrary membership assignment on the given universe.
    pub fn set_on(&mut self, universe: &Arc<Universe>) -> DFuzzySet {
        let values = (0..universe.len()).map(|_| self.hyp()).collect();
        DFuzzySet::new(universe.clone(), values).unwrap()
    }

    pub fn set(&mut self) -> DFuzzySet {
        let u = self.universe();
        self.set_on(&u)
    }

    /// Two arbitrary sets sharing one universe.
    pub fn pair(&mut self) -> (DFuzzySet, DFuzzySet) {
        let u = self.universe();
        (self.set_on(&u), self.set_on(&u))
    }

    /// Three arbitrary sets sharing one universe.
    pub fn triple(&mut self) -> (DFuzzySet, DFuzzySet, DFuzzySet) {
        let u = self.universe();
        (self.set_on(&u), self.set_on(&u), self.set_on(&u))
    }

    /// Weakly unimodal values of the given length: rises to a peak, then
    /// falls, ties allowed.
    fn unimodal_values(&mut self, n: usize, peak_index: usize) -> Vec<f64> {
        debug_assert!(peak_index < n);
        let peak = self.level();
        let cap: Vec<f64> = self
            .cfg
            .levels
            .iter()
            .copied()
            .filter(|&l| l <= peak)
            .collect();
        let mut left: Vec<f64> = (0..peak_index)
            .map(|_| cap[self.rng.gen_range(0..cap.len())])
            .collect();
        left.sort_by(f64::total_cmp);
        let mut right: Vec<f64> = (0..n - 1 - peak_index)
            .map(|_| cap[self.rng.gen_range(0..cap.len())])
            .collect();
        right.sort_by(|a, b| b.total_cmp(a));
        let mut vals = left;
        vals.push(peak);
        vals.extend(right);
        vals
    }

    /// Strictly unimodal values with pairwise distinct entries.
    fn strict_unimodal_values(&mut self, n: usize, peak_index: usize) -> Vec<f64> {
        debug_assert!(n <= self.cfg.levels.len());
        let mut chosen = self.cfg.levels.clone();
        chosen.shuffle(&mut self.rng);
        chosen.truncate(n);
        chosen.sort_by(f64::total_cmp);
        let peak = chosen.pop().unwrap();
        let mut flank_sides: Vec<bool> = (0..chosen.len()).map(|i| i < peak_index).collect();
        flank_sides.shuffle(&mut self.rng);
        let mut left: Vec<f64> = Vec::new();
        let mut right: Vec<f64> = Vec::new();
        for (value, goes_left) in chosen.into_iter().zip(flank_sides) {
            if goes_left {
                left.push(value);
            } else {
                right.push(value);
            }
        }
        left.sort_by(f64::total_cmp);
        right.sort_by(|a, b| b.total_cmp(a));
        let mut vals = left;
        vals.push(peak);
        vals.extend(right);
        vals
    }

    fn convex_line_values(&mut self, n: usize, shared_peak: Option<usize>) -> Vec<Hyp> {
        let peak_u = shared_peak.unwrap_or_else(|| self.rng.gen_range(0..n));
        let peak_v = shared_peak.unwrap_or_else(|| self.rng.gen_range(0..n));
        let us = self.unimodal_values(n, peak_u);
        let vs = self.unimodal_values(n, peak_v);
        us.into_iter()
            .zip(vs)
            .map(|(u, v)| Hyp::new(u, v).unwrap())
            .collect()
    }

    /// Convex set on the given 1D universe (each component unimodal along
    /// the line). The output is asserted convex; a failure is a generator
    /// bug.
    pub fn convex_set_on(&mut self, universe: &Arc<Universe>) -> DFuzzySet {
        assert_eq!(universe.dim(), 1, "convex_set_on expects a line universe");
        let values = self.convex_line_values(universe.len(), None);
        let set = DFuzzySet::new(universe.clone(), values).unwrap();
        assert!(
            is_convex_pointwise(&set, OrderMode::Lattice).unwrap().convex,
            "generator produced a non-convex set"
        );
        set
    }

    /// Convex set per the configured dimension. In 2D the set is the
    /// componentwise min of two unimodal cylinder profiles, convex because
    /// intersections of convex sets are convex.
    pub fn convex_set(&mut self) -> DFuzzySet {
        let universe = self.universe();
        match universe.dim() {
            1 => self.convex_set_on(&universe),
            _ => {
                let nx = 1 + universe
                    .points()
                    .iter()
                    .map(|p| p[0] as usize)
                    .max()
                    .unwrap();
                let ny = 1 + universe
                    .points()
                    .iter()
                    .map(|p| p[1] as usize)
                    .max()
                    .unwrap();
                let gx = self.convex_line_values(nx, None);
                let gy = self.convex_line_values(ny, None);
                let values: Vec<Hyp> = universe
                    .points()
                    .iter()
                    .map(|p| gx[p[0] as usize].meet(gy[p[1] as usize]))
                    .collect();
                let set = DFuzzySet::new(universe, values).unwrap();
                assert!(
                    is_convex_pointwise(&set, OrderMode::Lattice).unwrap().convex,
                    "generator produced a non-convex 2D set"
                );
                set
            }
        }
    }

    /// Two convex sets on one universe.
    pub fn convex_pair(&mut self) -> (DFuzzySet, DFuzzySet) {
        match self.cfg.dim {
            1 => {
                let u = self.universe();
                (self.convex_set_on(&u), self.convex_set_on(&u))
            }
            _ => {
                let a = self.convex_set();
                let u = a.universe().clone();
                let nx = 1 + u.points().iter().map(|p| p[0] as usize).max().unwrap();
                let ny = 1 + u.points().iter().map(|p| p[1] as usize).max().unwrap();
                let gx = self.convex_line_values(nx, None);
                let gy = self.convex_line_values(ny, None);
                let values: Vec<Hyp> = u
                    .points()
                    .iter()
                    .map(|p| gx[p[0] as usize].meet(gy[p[1] as usize]))
                    .collect();
                (a, DFuzzySet::new(u, values).unwrap())
            }
        }
    }

    /// Convex 1D set whose components peak at the same point, so the
    /// essential supremum is attained there.
    pub fn convex_set_attained(&mut self) -> DFuzzySet {
        let universe = self.universe();
        assert_eq!(universe.dim(), 1, "attained generation works on lines");
        let peak = self.rng.gen_range(0..universe.len());
        let values = self.convex_line_values(universe.len(), Some(peak));
        let set = DFuzzySet::new(universe, values).unwrap();
        assert!(
            is_convex_pointwise(&set, OrderMode::Lattice).unwrap().convex,
            "generator produced a non-convex set"
        );
        set
    }

    /// Strongly convex 1D set: strictly unimodal profiles with distinct
    /// values in both components, peaking at one shared point.
    pub fn strongly_convex_set_on(&mut self, universe: &Arc<Universe>) -> DFuzzySet {
        assert_eq!(universe.dim(), 1);
        let n = universe.len();
        assert!(n <= self.cfg.levels.len(), "need enough distinct levels");
        let peak = self.rng.gen_range(0..n);
        let us = self.strict_unimodal_values(n, peak);
        let vs = self.strict_unimodal_values(n, peak);
        let values = us
            .into_iter()
            .zip(vs)
            .map(|(u, v)| Hyp::new(u, v).unwrap())
            .collect();
        let set = DFuzzySet::new(universe.clone(), values).unwrap();
        assert!(
            is_strongly_convex(&set).convex,
            "generator produced a non strongly convex set"
        );
        set
    }

    pub fn strongly_convex_set(&mut self) -> DFuzzySet {
        let u = self.universe();
        self.strongly_convex_set_on(&u)
    }

    pub fn strongly_convex_pair(&mut self) -> (DFuzzySet, DFuzzySet) {
        let u = self.universe();
        (
            self.strongly_convex_set_on(&u),
            self.strongly_convex_set_on(&u),
        )
    }
}

/// Every assignment of membership level pairs to a fixed 1D integer grid.
pub struct ExhaustiveFamily {
    universe: Arc<Universe>,
    pairs: Vec<Hyp>,
}

impl ExhaustiveFamily {
    /// Budget guard: at most 5 points and 4 levels per component keeps the
    /// whole enumeration near one million instances.
    pub fn new(points: usize, levels: &[f64]) -> Result<ExhaustiveFamily> {
        if points == 0 || points > 5 || levels.is_empty() || levels.len() > 4 {
            return Err(Error::EnumerationBudget {
                points,
                levels: levels.len(),
            });
        }
        let coords: Vec<f64> = (0..points).map(|i| i as f64).collect();
        let universe = Universe::line(&coords)?;
        let mut pairs = Vec::with_capacity(levels.len() * levels.len());
        for &u in levels {
            for &v in levels {
                pairs.push(Hyp::new(u, v)?);
            }
        }
        Ok(ExhaustiveFamily { universe, pairs })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn count(&self) -> u64 {
        (self.pairs.len() as u64).pow(self.universe.len() as u32)
    }

    /// Decode the instance at `index` (mixed-radix digits select the level
    /// pair per point).
    pub fn set_at(&self, index: u64) -> DFuzzySet {
        let base = self.pairs.len() as u64;
        let mut rest = index;
        let values: Vec<Hyp> = (0..self.universe.len())
            .map(|_| {
                let digit = (rest % base) as usize;
                rest /= base;
                self.pairs[digit]
            })
            .collect();
        debug_assert_eq!(rest, 0, "index out of range");
        DFuzzySet::new(self.universe.clone(), values).unwrap()
    }

    pub fn iter(&self) -> impl Iterator<Item = DFuzzySet> + '_ {
        (0..self.count()).map(|i| self.set_at(i))
    }
}

/// Stream every assignment of level pairs to 1D grids of every size up to
/// `max_points`.
pub fn exhaustive_sets(
    max_points: usize,
    levels: &[f64],
) -> Result<impl Iterator<Item = DFuzzySet>> {
    let families: Vec<ExhaustiveFamily> = (1..=max_points)
        .map(|n| ExhaustiveFamily::new(n, levels))
        .collect::<Result<_>>()?;
    Ok(families
        .into_iter()
        .flat_map(|family| (0..family.count()).map(move |i| family.set_at(i))))
}

fn is_unimodal(vals: &[f64]) -> bool {
    let mut k = 0;
    while k + 1 < vals.len() && vals[k] <= vals[k + 1] {
        k += 1;
    }
    while k + 1 < vals.len() && vals[k] >= vals[k + 1] {
        k += 1;
    }
    k == vals.len() - 1
}

/// Independent quasi-concavity oracle for one real-valued component.
///
/// On a line it sorts by coordinate and scans for a strict interior valley.
/// In higher dimensions it runs its own projection-based segment sweep.
/// Deliberately shares no code with the convexity checks it arbitrates.
pub fn scalar_quasiconcave(universe: &Universe, values: &[f64]) -> bool {
    assert_eq!(universe.len(), values.len());
    if universe.dim() == 1 {
        let mut order: Vec<usize> = (0..universe.len()).collect();
        order.sort_by(|&a, &b| universe.point(a)[0].total_cmp(&universe.point(b)[0]));
        let line: Vec<f64> = order.iter().map(|&i| values[i]).collect();
        return is_unimodal(&line);
    }
    let n = universe.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let a = universe.point(i);
            let b = universe.point(j);
            let d: Vec<f64> = b.iter().zip(a).map(|(x, y)| x - y).collect();
            let dd: f64 = d.iter().map(|x| x * x).sum();
            for k in 0..n {
                if k == i || k == j {
                    continue;
                }
                let p = universe.point(k);
                let e: Vec<f64> = p.iter().zip(a).map(|(x, y)| x - y).collect();
                let t = e.iter().zip(&d).map(|(x, y)| x * y).sum::<f64>() / dd;
                if !(t > 0.0 && t < 1.0) {
                    continue;
                }
                let off_line = e
                    .iter()
                    .zip(&d)
                    .map(|(x, y)| (x - t * y) * (x - t * y))
                    .sum::<f64>()
                    .sqrt();
                if off_line > 1e-9 {
                    continue;
                }
                if values[k] < values[i].min(values[j]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Both idempotent components quasi-concave in the classical scalar sense,
/// which is the decomposition criterion for convexity.
pub fn scalar_convex(set: &DFuzzySet) -> bool {
    let (a1, a2) = set.decompose();
    scalar_quasiconcave(set.universe(), a1.values())
        && scalar_quasiconcave(set.universe(), a2.values())
}
