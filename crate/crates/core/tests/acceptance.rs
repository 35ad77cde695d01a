//! Acceptance suite: every library-level guarantee as one pass/fail check
//! with a pinned tolerance, trial count, and runtime bound.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see one line
//! per criterion.

use std::time::{Duration, Instant};

use dfuzzy::convex::{
    core_points, essential_supremum, grid_convex_witness, is_convex_by_cuts, is_convex_pointwise,
    optimal_separation,
};
use dfuzzy::document::{Document, ValueEncoding};
use dfuzzy::testkit::{scalar_convex, ExhaustiveFamily, Generator};
use dfuzzy::{DFuzzySet, Hyp, OrderMode, SubsetVerdict, Universe};

const TOL: f64 = 1e-12;

fn diag(x: f64) -> Hyp {
    Hyp::new(x, x).unwrap()
}

fn finish(number: u32, name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!(
        "criterion {number:02} {name}: PASS ({:.3} ms)",
        elapsed.as_secs_f64() * 1e3
    );
    assert!(
        elapsed < budget,
        "criterion {number} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

#[test]
fn criterion_01_ring_constants() {
    let start = Instant::now();
    assert_eq!(Hyp::K * Hyp::K, Hyp::ONE);
    assert_eq!(Hyp::E1 * Hyp::E1, Hyp::E1);
    assert_eq!(Hyp::E2 * Hyp::E2, Hyp::E2);
    assert_eq!(Hyp::E1 + Hyp::E2, Hyp::ONE);
    assert_eq!(Hyp::E1 * Hyp::E2, Hyp::ZERO);
    finish(1, "ring constants", start, Duration::from_millis(1));
}

#[test]
fn criterion_02_standard_form_product() {
    let start = Instant::now();
    let mut g = Generator::from_seed(42);
    for _ in 0..100_000 {
        let x = g.hyp_uniform();
        let y = g.hyp_uniform();
        let (x1, x2) = x.to_standard();
        let (y1, y2) = y.to_standard();
        let standard = Hyp::from_standard(x1 * y1 + x2 * y2, x1 * y2 + x2 * y1).unwrap();
        assert!(
            (x * y).approx_eq(standard, TOL),
            "product mismatch for x={x}, y={y}"
        );
    }
    finish(2, "standard-form product", start, Duration::from_secs(1));
}

#[test]
fn criterion_03_partial_order_axioms() {
    let start = Instant::now();
    let mut g = Generator::from_seed(42);
    for _ in 0..10_000 {
        let x = g.hyp();
        let y = g.hyp();
        assert!(x.leq(x), "reflexivity");
        if x.leq(y) && y.leq(x) {
            assert_eq!(x, y, "antisymmetry");
        }
        // dominating chain keeps transitivity non-vacuous
        let mid = x.join(g.hyp());
        let top = mid.join(g.hyp());
        assert!(x.leq(mid) && mid.leq(top));
        assert!(x.leq(top), "transitivity");
    }
    finish(3, "partial-order axioms", start, Duration::from_secs(1));
}

fn demorgan_holds(a: &DFuzzySet, b: &DFuzzySet) -> bool {
    let m = OrderMode::Lattice;
    let lhs1 = a.union(b, m).unwrap().complement();
    let rhs1 = a.complement().intersection(&b.complement(), m).unwrap();
    let lhs2 = a.intersection(b, m).unwrap().complement();
    let rhs2 = a.complement().union(&b.complement(), m).unwrap();
    lhs1.equals(&rhs1).unwrap() && lhs2.equals(&rhs2).unwrap()
}

fn distributive_holds(a: &DFuzzySet, b: &DFuzzySet, c: &DFuzzySet) -> bool {
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

#[test]
fn criterion_04_demorgan_and_distributive() {
    let start = Instant::now();
    // 10^3 random pairs/triples on the 0.05 grid
    let mut g = Generator::from_seed(42);
    for trial in 0..1_000 {
        let (a, b, c) = g.triple();
        assert!(demorgan_holds(&a, &b), "de morgan failed at trial {trial}");
        assert!(
            distributive_holds(&a, &b, &c),
            "distributivity failed at trial {trial}"
        );
    }
    // complete pair and triple sweep over a small family
    let levels2 = [0.0, 0.5];
    for n in 1..=3usize {
        let family = ExhaustiveFamily::new(n, &levels2).unwrap();
        let sets: Vec<DFuzzySet> = family.iter().collect();
        for a in &sets {
            for b in &sets {
                assert!(demorgan_holds(a, b));
            }
        }
        for a in &sets {
            for b in &sets {
                for c in &sets {
                    assert!(distributive_holds(a, b, c));
                }
            }
        }
    }
    // full enumeration at 5 points and 4 levels: every instance joins one
    // derived pair and one derived triple
    let levels4 = [0.0, 0.3, 0.7, 1.0];
    for n in 1..=5usize {
        let family = ExhaustiveFamily::new(n, &levels4).unwrap();
        let count = family.count();
        for i in 0..count {
            let a = family.set_at(i);
            let b = family.set_at(i.wrapping_mul(2_654_435_761).wrapping_add(12_345) % count);
            let c = family.set_at(i.wrapping_mul(1_099_087_573).wrapping_add(7) % count);
            assert!(demorgan_holds(&a, &b), "enumerated pair {n}/{i}");
            assert!(distributive_holds(&a, &b, &c), "enumerated triple {n}/{i}");
        }
    }
    finish(4, "de morgan + distributive", start, Duration::from_secs(30));
}

fn convexity_verdicts_agree(set: &DFuzzySet) -> bool {
    let cuts = is_convex_by_cuts(set).convex;
    let pointwise = is_convex_pointwise(set, OrderMode::Lattice).unwrap().convex;
    let scalar = scalar_convex(set);
    cuts == pointwise && pointwise == scalar
}

#[test]
fn criterion_05_convexity_definition_equivalence() {
    let start = Instant::now();
    // the full enumeration: sizes 1..=5, four levels per component
    let levels4 = [0.0, 0.3, 0.7, 1.0];
    let mut enumerated = 0u64;
    for n in 1..=5usize {
        let family = ExhaustiveFamily::new(n, &levels4).unwrap();
        for i in 0..family.count() {
            let set = family.set_at(i);
            assert!(
                convexity_verdicts_agree(&set),
                "definitions disagree on enumerated instance {n}/{i}"
            );
            enumerated += 1;
        }
    }
    assert_eq!(enumerated, 16 + 256 + 4_096 + 65_536 + 1_048_576);
    // plus 10^3 random sets, one third of them on 2D grids
    let mut line = Generator::from_seed(42);
    let mut grid = Generator::new(dfuzzy::testkit::GenConfig::two_dimensional(43));
    for trial in 0..1_000 {
        let set = if trial % 3 == 2 { grid.set() } else { line.set() };
        assert!(
            convexity_verdicts_agree(&set),
            "definitions disagree on random trial {trial}"
        );
    }
    finish(5, "convexity equivalence", start, Duration::from_secs(60));
}

#[test]
fn criterion_06_intersection_and_product_convexity() {
    let start = Instant::now();
    let mut g = Generator::from_seed(42);
    for trial in 0..500 {
        let (a, b) = g.convex_pair();
        let inter = a.intersection(&b, OrderMode::Lattice).unwrap();
        assert!(
            is_convex_by_cuts(&inter).convex
                && is_convex_pointwise(&inter, OrderMode::Lattice).unwrap().convex,
            "intersection not convex at trial {trial}"
        );
    }
    let mut g = Generator::from_seed(43);
    for trial in 0..500 {
        let a = g.convex_set();
        let b = g.convex_set();
        let product = a.cartesian_product(&b, OrderMode::Lattice).unwrap();
        assert!(
            is_convex_pointwise(&product, OrderMode::Lattice).unwrap().convex,
            "product not convex at trial {trial}"
        );
    }
    finish(6, "intersection/product convexity", start, Duration::from_secs(30));
}

#[test]
fn criterion_07_core_theorem_and_corollary() {
    let start = Instant::now();
    let mut g = Generator::from_seed(42);
    for trial in 0..500 {
        let a = g.convex_set_attained();
        let (_, attained) = essential_supremum(&a);
        assert!(attained, "generator must attain the supremum");
        let core = core_points(&a);
        assert!(!core.is_empty(), "attained supremum has a nonempty core");
        assert!(
            grid_convex_witness(a.universe(), &core).is_none(),
            "core not grid-convex at trial {trial}"
        );
    }
    let mut g = Generator::from_seed(43);
    for trial in 0..200 {
        let s = g.strongly_convex_set();
        assert_eq!(
            core_points(&s).len(),
            1,
            "strongly convex core not a singleton at trial {trial}"
        );
    }
    finish(7, "core theorem + corollary", start, Duration::from_secs(30));
}

#[test]
fn criterion_08_separation_theorem() {
    let start = Instant::now();
    // the worked pair: optimum exactly one half
    let u = Universe::line(&[0.0, 1.0, 2.0, 3.0, 4.0]).unwrap();
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
    assert_eq!(report.best_degree, diag(0.5));
    assert_eq!(report.intersection_max, diag(0.5));

    let mut g = Generator::from_seed(42);
    for trial in 0..500 {
        let (a, b) = g.convex_pair();
        let report = optimal_separation(&a, &b).unwrap();
        let expected = Hyp::ONE - report.intersection_max;
        assert!(
            report.best_degree.approx_eq(expected, TOL),
            "trial {trial}: optimum {} differs from 1 - M = {expected}",
            report.best_degree
        );
    }
    finish(8, "separation theorem", start, Duration::from_secs(30));
}

#[test]
fn criterion_09_convex_combination_sandwich() {
    let start = Instant::now();
    let mut g = Generator::from_seed(42);
    for trial in 0..1_000 {
        let (a, b, weight) = g.triple();
        let combo = DFuzzySet::convex_combination(&a, &b, &weight).unwrap();
        let inter = a.intersection(&b, OrderMode::Lattice).unwrap();
        let union = a.union(&b, OrderMode::Lattice).unwrap();
        assert_eq!(
            inter.is_subset(&combo).unwrap(),
            SubsetVerdict::Subset,
            "lower bound failed at trial {trial}"
        );
        assert_eq!(
            combo.is_subset(&union).unwrap(),
            SubsetVerdict::Subset,
            "upper bound failed at trial {trial}"
        );
    }
    finish(9, "convex-combination sandwich", start, Duration::from_secs(10));
}

#[test]
fn criterion_10_document_round_trip() {
    let start = Instant::now();
    let text = r#"{
        "version": 1,
        "universe": {
            "dim": 2,
            "points": [[1,0],[0,0],[5,2],[5,5],[200,200]],
            "labels": ["e1","0","5e1+2e2","5","200"]
        },
        "sets": {
            "A": { "values": [
                {"e1":0,"e2":0},
                {"e1":0,"e2":0},
                {"e1":0.06,"e2":0.04},
                {"a1":0.065,"a2":-0.005},
                {"e1":0.4,"e2":0.5}
            ]}
        },
        "default_mode": "lattice"
    }"#;

    let run = || {
        let doc = Document::from_json(text).unwrap();
        let rendered: Vec<String> = doc
            .get("A")
            .unwrap()
            .values()
            .iter()
            .map(Hyp::to_string)
            .collect();
        let idempotent = doc.to_json(ValueEncoding::Idempotent);
        let standard = doc.to_json(ValueEncoding::Standard);
        let back = Document::from_json(&standard).unwrap();
        (rendered, idempotent, standard, back.to_json(ValueEncoding::Idempotent))
    };

    let first = run();
    let second = run();
    assert_eq!(first, second, "two runs must agree byte for byte");

    let (rendered, idempotent, standard, converted_back) = first;
    assert_eq!(rendered[2], "0.06e1+0.04e2");
    assert_eq!(rendered[3], "0.06e1+0.07e2");
    assert!(idempotent.contains("\"e1\": 0.06"));
    assert!(standard.contains("\"a1\": 0.065"));
    assert_eq!(converted_back, idempotent, "standard -> idempotent is stable");
    finish(10, "document round-trip", start, Duration::from_secs(1));
}
