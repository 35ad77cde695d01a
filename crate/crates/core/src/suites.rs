//! Runnable property suites: every algebraic law and theorem in the library
//! as a seeded, deterministic pass/fail check with a first counterexample.

use serde::Serialize;

use crate::convex::{
    essential_supremum, grid_convex_witness, is_convex_by_cuts, is_convex_pointwise,
    is_strongly_convex, optimal_separation, shadow,
};
use crate::error::{Error, Result};
use crate::hyp::{d_metric, max_d, min_d, point_norm, Hyp, OrderMode};
use crate::set::{DFuzzySet, SubsetVerdict, Universe};
use crate::testkit::{scalar_convex, ExhaustiveFamily, GenConfig, Generator};

pub const SUITE_NAMES: [&str; 15] = [
    "ring",
    "order",
    "metric",
    "demorgan",
    "distributive",
    "containment",
    "sandwich",
    "decompose",
    "equivalence",
    "intersection-convexity",
    "product-convexity",
    "strong-closure",
    "core",
    "shadow",
    "separation",
];

/// Outcome of one suite run. `trials` counts checked instances, which can
/// exceed the requested trial count when a suite also sweeps a fixed
/// exhaustive family.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub trials: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Tally {
    name: &'static str,
    trials: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Tally {
        Tally {
            name,
            trials: 0,
            failures: 0,
            first: None,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(describe());
            }
        }
    }

    fn finish(self) -> SuiteOutcome {
        SuiteOutcome {
            name: self.name.to_string(),
            trials: self.trials,
            failures: self.failures,
            first_counterexample: self.first,
        }
    }
}

pub fn run_suite(name: &str, seed: u64, trials: usize) -> Result<SuiteOutcome> {
    match name {
        "ring" => Ok(ring(seed, trials)),
        "order" => Ok(order(seed, trials)),
        "metric" => Ok(metric(seed, trials)),
        "demorgan" => Ok(demorgan(seed, trials)),
        "distributive" => Ok(distributive(seed, trials)),
        "containment" => Ok(containment(seed, trials)),
        "sandwich" => Ok(sandwich(seed, trials)),
        "decompose" => Ok(decompose(seed, trials)),
        "equivalence" => Ok(equivalence(seed, trials)),
        "intersection-convexity" => Ok(intersection_convexity(seed, trials)),
        "product-convexity" => Ok(product_convexity(seed, trials)),
        "strong-closure" => Ok(strong_closure(seed, trials)),
        "core" => Ok(core_theorem(seed, trials)),
        "shadow" => Ok(shadow_convexity(seed, trials)),
        "separation" => Ok(separation_theorem(seed, trials)),
        _ => Err(Error::UnknownSuite {
            name: name.to_string(),
        }),
    }
}

pub fn run_all(seed: u64, trials: usize) -> Vec<SuiteOutcome> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, seed, trials).expect("known suite"))
        .collect()
}

const ARITH_TOL: f64 = 1e-12;

fn ring(seed: u64, trials: usize) -> SuiteOutcome {
    let mut t = Tally::new("ring");
    t.check(
        Hyp::K * Hyp::K == Hyp::ONE
            && Hyp::E1 * Hyp::E1 == Hyp::E1
            && Hyp::E2 * Hyp::E2 == Hyp::E2
            && Hyp::E1 + Hyp::E2 == Hyp::ONE
            && Hyp::E1 * Hyp::E2 == Hyp::ZERO,
        || "basis constants violate k^2=1, e1^2=e1, e2^2=e2, e1+e2=1, e1e2=0".to_string(),
    );
    let mut g = Generator::from_seed(seed);
    for trial in 0..trials {
        let (x, y, z) = (g.hyp_uniform(), g.hyp_uniform(), g.hyp_uniform());
        let commutes = x * y == y * x && x + y == y + x;
        let associates = ((x * y) * z).approx_eq(x * (y * z), ARITH_TOL);
        let distributes = (x * (y + z)).approx_eq(x * y + x * z, ARITH_TOL);
        let unital = x * Hyp::ONE == x && x + Hyp::ZERO == x;
        let (x1, x2) = x.to_standard();
        let (y1, y2) = y.to_standard();
        let std_product =
            Hyp::from_standard(x1 * y1 + x2 * y2, x1 * y2 + x2 * y1).expect("finite");
        let std_agrees = (x * y).approx_eq(std_product, ARITH_TOL);
        t.check(
            commutes && associates && distributes && unital && std_agrees,
            || format!("trial {trial}: ring law failed for x={x}, y={y}, z={z}"),
        );
    }
    t.finish()
}

fn order(seed: u64, trials: usize) -> SuiteOutcome {
    let mut t = Tally::new("order");
    let mut g = Generator::from_seed(seed);
    for trial in 0..trials {
        let x = g.hyp();
        let y = g.hyp();
        let reflexive = x.leq(x);
        let antisymmetric = !(x.leq(y) && y.leq(x)) || x == y;
        // build a comparable chain so transitivity is never vacuous
        let up1 = x.join(g.hyp());
        let up2 = up1.join(g.hyp());
        let transitive = x.leq(up1) && up1.leq(up2) && x.leq(up2);
        let strict_agrees = match x.partial_cmp(&y) {
            Some(_) => {
                max_d(x, y, OrderMode::Strict).expect("comparable") == x.join(y)
                    && min_d(x, y, OrderMode::Strict).expect("comparable") == x.meet(y)
            }
            None => max_d(x, y, OrderMode::Strict).is_err(),
        };
        let lattice_laws = x.join(x) == x
            && x.meet(x) == x
            && x.join(x.meet(y)) == x
            && x.meet(x.join(y)) == x;
        t.check(
            reflexive && antisymmetric && transitive && strict_agrees && lattice_laws,
            || format!("trial {trial}: order axiom failed for x={x}, y={y}"),
        );
    }
    t.finish()
}

fn metric(seed: u64, trials: usize) -> SuiteOutcome {
    let mut t = Tally::new("metric");
    let mut g = Generator::from_seed(seed);
    let slack = Hyp::new(ARITH_TOL, ARITH_TOL).unwrap();
    for trial in 0..trials {
        let (x, y, z) = (g.hyp_uniform(), g.hyp_uniform(), g.hyp_uniform());
        let identity = d_metric(x, x) == Hyp::ZERO && (d_metric(x, y) == Hyp::ZERO) == (x == y);
        let symmetric = d_metric(x, y) == d_metric(y, x);
        let nonneg = Hyp::ZERO.leq(d_metric(x, y));
        let triangle = d_metric(x, z).leq(d_metric(x, y) + d_metric(y, z) + slack);
        let modulus_mult = (x * y).modulus_k() == x.modulus_k() * y.modulus_k();
        // norm axioms for diagonal-embedded points
        let p = [x.u() * 5.0, y.u() * 5.0];
        let q = [z.u() * 5.0, x.v() * 5.0];
        let sum = [p[0] + q[0], p[1] + q[1]];
        let norm_triangle = point_norm(&sum).leq(point_norm(&p) + point_norm(&q) + slack);
        let norm_zero = point_norm(&[0.0, 0.0]) == Hyp::ZERO;
        let c = z.v() * 3.0;
        let scaled = [c * p[0], c * p[1]];
        let homogeneous = point_norm(&scaled)
            .approx_eq(Hyp::new(c.abs(), c.abs()).unwrap() * point_norm(&p), 1e-9);
        t.check(
            identity && symmetric && nonneg && triangle && modulus_mult && norm_triangle
                && norm_zero && homogeneous,
            || format!("trial {trial}: metric/norm axiom failed for x={x}, y={y}, z={z}"),
        );
    }
    t.finish()
}

fn demorgan_pair(a: &DFuzzySet, b: &DFuzzySet) -> bool {
    let m = OrderMode::Lattice;
    let lhs1 = a.union(b, m).unwrap().complement();
    let rhs1 = a.complement().intersection(&b.complement(), m).unwrap();
    let lhs2 = a.intersection(b, m).unwrap().complement();
    let rhs2 = a.complement().union(&b.complement(), m).unwrap();
    lhs1.equals(&rhs1).unwrap() && lhs2.equals(&rhs2).unwrap()
}

fn demorgan(seed: u64, trials: usize) -> SuiteOutcome {
    let mut t = Tally::new("demorgan");
    // the two comparable cases the identity reduces to
    let u1 = Universe::line(&[0.0]).unwrap();
    let lo = DFuzzySet::constant(u1.clone(), Hyp::new(0.2, 0.3).unwrap()).unwrap();
    let hi = DFuzzySet::constant(u1, Hyp::new(0.6, 0.8).unwrap()).unwrap();
    t.check(demorgan_pair(&lo, &hi), || "comparable case a < b".to_string());
    t.check(demorgan_pair(&hi, &lo), || "comparable case a > b".to_string());
    // complete pair sweep over a small exhaustive family
    for n in 1..=3 {
        let family = ExhaustiveFamily::new(n, &[0.0, 0.5]).unwrap();
        let sets: Vec<DFuzzySet> = family.iter().collect();
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate() {
                t.check(demorgan_pair(a, b), || {
                    format!("exhaustive {n}-point pair ({i}, {j})")
                });
            }
        }
    }
    let mut g = Generator::from_seed(seed);
    for trial in 0..trials {
        let (a, b) = g.pair();
        t.check(demorgan_pair(&a, &b), || {
            format!("trial {trial}: A={:?} B={:?}", a.values(), b.values())
        });
    }
    t.finish()
}

fn distributive_triple(a: &DFuzzySet, b: &DFuzzySet, c: &DFuzzySet) -> bool {
    let m = OrderMode::Lattice;
    let lhs1 = c.intersection(&a.union(b, m).unwrap(), m).unwrap();
    let rhs1 = c
        .intersection(a, m)
        .unwrap()
        .union(&c.intersection(b, m).unwrap(), m)
        .unwrap();
    let lhs2 = c.union(&a.intersection(b, m).unwrap(), m).unwrap();
    let rhs2 = c
        .union(a, m)
        .unwrap()
        .intersection(&c.union(b, m).unwrap(), m)
        .unwrap();
    lhs1.equals(&rhs1).unwrap() && lhs2.equals(&rhs2).unwrap()
}

fn distributive(seed: u64, trials: usize) -> SuiteOutcome {
    let mut t = Tally::new("distributive");
    // the six strictly ordered cases, in strict mode as well
    let u1 = Universe::line(&[0.0]).unwrap();
    let grades = [
        Hyp::new(0.2, 0.25).unwrap(),
        Hyp::new(0.5, 0.55).unwrap(),
        Hyp::new(0.8, 0.85).unwrap(),
    ];
    for perm in [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ] {
        let a = DFuzzySet::constant(u1.clone(), grades[perm[0]]).unwrap();
        let b = DFuzzySet::constant(u1.clone(), grades[perm[1]]).unwrap();
        let c = DFuzzySet::constant(u1.clone(), grades[perm[2]]).unwrap();
        let strict = {
            let m = OrderMode::Strict;
            let lhs = c.intersection(&a.union(&b, m).unwrap(), m).unwrap();
            let rhs = c
                .intersection(&a, m)
                .unwrap()
                .union(&c.intersection(&b, m).unwrap(), m)
                .unwrap();
            lhs.equals(&rhs).unwrap()
        };
        t.check(strict && distributive_triple(&a, &b, &c), || {
            format!("ordered case {perm:?}")
        });
    }
    // complete triple sweep over a small exhaustive family
    for n in 1..=3 {
        let family = ExhaustiveFamily::new(n, &[0.0, 0.5]).unwrap();
        let sets: Vec<DFuzzySet> = family.iter().collect();
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate() {
                for (k, c) in sets.iter().enumerate() {
                    t.check(distributive_triple(a, b, c), || {
                        format!("exhaustive {n}-point triple ({i}, {j}, {k})")
                    });
                }
            }
        }
    }
    let mut g = Generator::from_seed(seed);
    for trial in 0..trials {
        let (a, b, c) = g.triple();
        t.check(distributive_triple(&a, &b, &c), || {
            format!("trial {trial}")
        });
    }
    t.finish()
}

fn containment(seed: u64, trials: usize) -> SuiteOutcome {
    let mut t = Tally::new("containment");
    let mut g = Generator::from_seed(seed);
    let m = OrderMode::Lattice;
    for trial in 0..trials {
        let (a, b, extra) = g.triple();
        let union = a.union(&b, m).unwrap();
        let inter = a.intersection(&b, m).unwrap();
        // union contains both, intersection is contained in both
        let bounds = a.is_subset(&union).unwrap() == SubsetVerdict::Subset
            && b.is_subset(&union).unwrap() == SubsetVerdict::Subset
            && inter.is_subset(&a).unwrap() == SubsetVerdict::Subset
            && inter.is_subset(&b).unwrap() == SubsetVerdict::Subset;
        // smallest/largest: anything containing both contains the union,
        // anything inside both sits inside the intersection
        let upper = union.union(&extra, m).unwrap();
        let lower = inter.intersection(&extra, m).unwrap();
        let extremal = union.is_subset(&upper).unwrap() == SubsetVerdict::Subset
            && lower.is_subset(&inter).unwrap() == SubsetVerdict::Subset;
        let empty = DFuzzySet::constant(a.universe().clone(), Hyp::ZERO).unwrap();
        let empty_contained = empty.is_subset(&a).unwrap() == SubsetVerdict::Subset;
        t.check(bounds && extremal && empty_contained, || format!("trial {trial}"));
    }
    t.finish()
}

fn sandwich(seed: u64, trials: usize) -> SuiteOutcome {
    let mut t = Tally::new("sandwich");
    let mut g = Generator::from_seed(seed);
    let m = OrderMode::Lattice;
    for trial in 0..trials {
        let (a, b, weight) = g.triple();
        let combo = DFuzzySet::convex_combination(&a, &b, &weight).unwrap();
        let inter = a.intersection(&b, m).unwrap();
        let union = a.union(&b, m).unwrap();
        let ok = inter.is_subset(&combo).unwrap() == SubsetVerdict::Subset
            && combo.is_subset(&union).unwrap() == SubsetVerdict::Subset;
        t.check(ok, || format!("trial {trial}"));
    }
    t.finish()
}

fn decompose(seed: u64, trials: usize) -> SuiteOutcome {
    let mut t = Tally::new("decompose");
    let mut g = Generator::from_seed(seed);
    for trial in 0..trials {
        let (a, b) = g.pair();
        let (a1, a2) = a.decompose();
        let round_trip = DFuzzySet::recompose(&a1, &a2).unwrap().equals(&a).unwrap();
        let (u1, u2) = a.union(&b, OrderMode::Lattice).unwrap().decompose();
        let (b1, b2) = b.decompose();
        let commutes = (0..a.universe().len()).all(|i| {
            u1.values()[i] == a1.values()[i].max(b1.values()[i])
                && u2.values()[i] == a2.values()[i].max(b2.values()[i])
        });
        t.check(round_trip && commutes, || format!("trial {trial}"));
    }
    t.finish()
}

fn equivalence_verdicts(set: &DFuzzySet) -> (bool, bool, bool) {
    let by_cuts = is_convex_by_cuts(set).convex;
    let pointwise = is_convex_pointwise(set, OrderMode::Lattice)
        .expect("lattice mode is total")
        .convex;
    let scalar = scalar_convex(set);
    (by_cuts, pointwise, scalar)
}

fn equivalence(seed: u64, trials: usize) -> SuiteOutcome {
    let mut t = Tally::new("equivalence");
    let family = ExhaustiveFamily::new(3, &[0.0, 0.5, 1.0]).unwrap();
    for (i, set) in family.iter().enumerate() {
        let (c, p, s) = equivalence_verdicts(&set);
        t.check(c == p && p == s, || {
            format!("exhaustive instance {i}: cuts={c} pointwise={p} scalar={s}")
        });
    }
    let mut line = Generator::from_seed(seed);
    let mut grid = Generator::new(GenConfig::two_dimensional(seed ^ 0x9e37_79b9));
    for trial in 0..trials {
        let set = if trial % 3 == 2 {
            grid.set()
        } else {
            line.set()
        };
        let (c, p, s) = equivalence_verdicts(&set);
        t.check(c == p && p == s, || {
            format!(
                "trial {trial} (dim {}): cuts={c} pointwise={p} scalar={s}",
                set.universe().dim()
            )
        });
    }
    t.finish()
}

fn intersection_convexity(seed: u64, trials: usize) -> SuiteOutcome {
    let mut t = Tally::new("intersection-convexity");
    let mut g = Generator::from_seed(seed);
    for trial in 0..trials {
        let (a, b) = g.convex_pair();
        let inter = a.intersection(&b, OrderMode::Lattice).unwrap();
        let (c, p, s) = equivalence_verdicts(&inter);
        t.check(c && p && s, || format!("trial {trial}"));
    }
    t.finish()
}

fn product_convexity(seed: u64, trials: usize) -> SuiteOutcome {
    let mut t = Tally::new("product-convexity");
    // a cylinder: product of crisp convex blocks is a convex crisp rectangle
    let ux = Universe::line(&[0.0, 1.0, 2.0, 3.0]).unwrap();
    let uy = Universe::line(&[0.0, 1.0, 2.0]).unwrap();
    let block_x = DFuzzySet::from_crisp(ux, &[false, true, true, false]).unwrap();
    let block_y = DFuzzySet::from_crisp(uy, &[true, true, false]).unwrap();
    let cylinder = block_x
        .cartesian_product(&block_y, OrderMode::Lattice)
        .unwrap();
    t.check(
        is_convex_pointwise(&cylinder, OrderMode::Lattice)
            .unwrap()
            .convex,
        || "crisp cylinder".to_string(),
    );
    let mut g = Generator::from_seed(seed);
    for trial in 0..trials {
        let a = g.convex_set();
        let b = g.convex_set();
        let product = a.cartesian_product(&b, OrderMode::Lattice).unwrap();
        let ok = is_convex_pointwise(&product, OrderMode::Lattice)
            .unwrap()
            .convex;
        t.check(ok, || format!("trial {trial}"));
    }
    t.finish()
}

fn strong_closure(seed: u64, trials: usize) -> SuiteOutcome {
    let mut t = Tally::new("strong-closure");
    let mut g = Generator::from_seed(seed);
    for trial in 0..trials {
        let (a, b) = g.strongly_convex_pair();
        let inter = a.intersection(&b, OrderMode::Lattice).unwrap();
        t.check(is_strongly_convex(&inter).convex, || format!("trial {trial}"));
    }
    t.finish()
}

fn core_theorem(seed: u64, trials: usize) -> SuiteOutcome {
    let mut t = Tally::new("core");
    let mut g = Generator::from_seed(seed);
    for trial in 0..trials {
        let a = g.convex_set_attained();
        let (_, attained) = essential_supremum(&a);
        let core = crate::convex::core_points(&a);
        let convex_core =
            attained && !core.is_empty() && grid_convex_witness(a.universe(), &core).is_none();
        let s = g.strongly_convex_set();
        let singleton = crate::convex::core_points(&s).len() == 1;
        t.check(convex_core && singleton, || {
            format!("trial {trial}: core={core:?}")
        });
    }
    t.finish()
}

fn shadow_convexity(seed: u64, trials: usize) -> SuiteOutcome {
    let mut t = Tally::new("shadow");
    let mut g = Generator::new(GenConfig::two_dimensional(seed));
    for trial in 0..trials {
        let a = g.convex_set();
        let ok = [0usize, 1].iter().all(|&axis| {
            let s = shadow(&a, axis).unwrap();
            is_convex_pointwise(&s, OrderMode::Lattice).unwrap().convex
        });
        t.check(ok, || format!("trial {trial}"));
    }
    t.finish()
}

fn separation_theorem(seed: u64, trials: usize) -> SuiteOutcome {
    let mut t = Tally::new("separation");
    // the worked one-dimensional pair: optimum 0.5 exactly
    let coords = [0.0, 1.0, 2.0, 3.0, 4.0];
    let u = Universe::line(&coords).unwrap();
    let diag = |x: f64| Hyp::new(x, x).unwrap();
    let a = DFuzzySet::new(
        u.clone(),
        [0.2, 0.8, 0.5, 0.2, 0.0].iter().map(|&x| diag(x)).collect(),
    )
    .unwrap();
    let b = DFuzzySet::new(
        u,
        [0.0, 0.2, 0.5, 0.8, 0.2].iter().map(|&x| diag(x)).collect(),
    )
    .unwrap();
    let report = optimal_separation(&a, &b).unwrap();
    t.check(
        report.best_degree == diag(0.5) && report.intersection_max == diag(0.5),
        || format!("worked pair: D={} M={}", report.best_degree, report.intersection_max),
    );
    let mut g = Generator::from_seed(seed);
    for trial in 0..trials {
        let (a, b) = g.convex_pair();
        let report = optimal_separation(&a, &b).unwrap();
        let expected = Hyp::ONE - report.intersection_max;
        let ok = report.best_degree.approx_eq(expected, ARITH_TOL)
            && report.joint_best_degree.leq(report.best_degree);
        t.check(ok, || {
            format!(
                "trial {trial}: D={} vs 1-M={}",
                report.best_degree, expected
            )
        });
    }
    t.finish()
}
