//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture` to see the
//! lines; every tolerance is pinned in the assertions below.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use spearlab::analysis::{
    decide_operator, ng_upper_bound, numerical_index, spear_equation, vg_radius,
};
use spearlab::exactgeom::{DdLimits, Polytope};
use spearlab::operators::{block_sum, fixture_operator, LinOp};
use spearlab::oracle;
use spearlab::rational::{rat, rat_int, RatMatrix, RatVector, Rational};
use spearlab::spaces::{direct_sum, fixture, SumKind};
use spearlab::speartest::{is_spear_vector, spear_vectors};
use std::sync::Arc;
use std::time::Instant;

fn pass(criterion: &str) {
    println!("acceptance: {criterion}: PASS");
}

fn rational_to_f64(r: &Rational) -> f64 {
    RatVector::new(vec![r.clone()]).to_f64s()[0]
}

/// Example-5.2 reproduction, exact and under five seconds.
#[test]
fn criterion_1_example52_reproduction() {
    let started = Instant::now();

    let x1 = fixture("example52_X1").unwrap();
    let x2 = fixture("example52_X2").unwrap();
    let g = fixture_operator("example52_G").unwrap();
    assert!(g.domain().same_space(&direct_sum(&[&x1, &x2], SumKind::SumInf).unwrap()));
    let verdict = decide_operator(&g).unwrap();
    assert!(verdict.lush && verdict.spear && verdict.adp);

    let id = LinOp::identity(direct_sum(&[&x1, &x2], SumKind::SumInf).unwrap());
    let verdict = decide_operator(&id).unwrap();
    assert!(!verdict.lush && !verdict.spear && !verdict.adp);
    let w = verdict.witness.expect("failing verdict carries a witness");
    let image = id.apply(&w.x).unwrap();
    assert_eq!(w.y_star.dot(&image).abs(), w.value);
    assert!(!w.value.is_one());

    let z = RatVector::from_ints(&[1, 1, -1, -1]);
    let cert = is_spear_vector(&x1, &z).unwrap();
    assert!(!cert.decision);
    let corner = RatVector::new(vec![rat(1, 2); 4]);
    assert_eq!(cert.witnesses[0].vector, corner);
    assert_eq!(cert.witnesses[0].value, rat_int(0));

    assert!(x1.dual_vertices().contains(&corner));

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    pass("criterion 1 (Example-5.2 reproduction, exact, < 5 s)");
}

/// Spear enumeration in the sequence spaces, exact set equality for n=1..5.
#[test]
fn criterion_2_spear_enumeration() {
    for n in 1..=5usize {
        let l1 = fixture(&format!("l1:{n}")).unwrap();
        let mut expect: Vec<RatVector> = (0..n)
            .flat_map(|i| [RatVector::unit(n, i), RatVector::unit(n, i).neg()])
            .collect();
        expect.sort();
        let mut got = spear_vectors(&l1);
        got.sort();
        assert_eq!(got, expect, "Spear(l1:{n})");

        let linf = fixture(&format!("linf:{n}")).unwrap();
        let mut expect: Vec<RatVector> = (0..1usize << n)
            .map(|bits| {
                RatVector::new(
                    (0..n)
                        .map(|i| if bits >> i & 1 == 1 { rat_int(1) } else { rat_int(-1) })
                        .collect(),
                )
            })
            .collect();
        expect.sort();
        let mut got = spear_vectors(&linf);
        got.sort();
        assert_eq!(got, expect, "Spear(linf:{n})");
    }
    pass("criterion 2 (spear enumeration in l1:n and linf:n, n=1..5, exact)");
}

/// Exact numerical indices plus agreement with the sampling oracle within
/// 1e-6 on every 2- and 3-dimensional fixture; the hexagon value is the
/// committed regression constant 1/2.
#[test]
fn criterion_3_numerical_index() {
    let l1 = fixture("l1:2").unwrap();
    let (v, _) = numerical_index(&l1, &RatVector::unit(2, 0)).unwrap();
    assert_eq!(v, rat_int(1));

    let linf = fixture("linf:2").unwrap();
    let (v, z) = numerical_index(&linf, &RatVector::from_ints(&[1, 0])).unwrap();
    assert_eq!(v, rat_int(0));
    assert_eq!(z.sign_canonical(), RatVector::from_ints(&[0, 1]));

    // The oracle produced 1/2 for the hexagon before the LP path was
    // trusted; both must stay on that constant.
    let hexagon = fixture("hexagon").unwrap();
    let u = RatVector::from_ints(&[1, 0]);
    let frozen = rat(1, 2);
    let oracle_value = oracle::brute_numerical_index(&hexagon, &u, 400);
    assert!((oracle_value - 0.5).abs() <= 1e-6, "oracle gave {oracle_value}");
    let (v, _) = numerical_index(&hexagon, &u).unwrap();
    assert_eq!(v, frozen);

    for name in ["l1:2", "l1:3", "linf:2", "linf:3", "hexagon"] {
        let space = fixture(name).unwrap();
        let mut probes = vec![space.vertices()[0].clone()];
        let e1 = RatVector::unit(space.dim(), 0);
        if space.norm(&e1).unwrap().is_one() {
            probes.push(e1);
        }
        for u in probes {
            let (exact, _) = numerical_index(&space, &u).unwrap();
            let brute = oracle::brute_numerical_index(&space, &u, 60);
            let delta = (brute - rational_to_f64(&exact)).abs();
            assert!(delta <= 1e-6, "{name} at {u}: exact {exact}, oracle {brute}");
        }
    }
    pass("criterion 3 (numerical indices, exact + oracle within 1e-6, hexagon = 1/2)");
}

/// `max_ω ‖G + ωT‖` over the rank-one family `f ⊗ w`, evaluated exactly
/// from precomputed dual products. On a polyhedral ball
/// `‖S‖ = max_{v,f} f·(Sv)`, and the two signs fold into the modulus, so
/// `max_ω ‖G + ωT‖ = max_{v,f} (|f·(Gv)| + |f·(Tv)|)` after pairing `±v`.
fn rank_one_family_all_hold(g: &LinOp) -> bool {
    let dom = g.domain();
    let cod = g.codomain();
    let verts = dom.vertices();
    let cod_duals = cod.dual_vertices();
    // Quarter the scan: vertices and dual vertices come in ± pairs and
    // every term is sign-invariant.
    let half_verts: Vec<&RatVector> = verts.iter().filter(|v| **v == v.sign_canonical()).collect();
    let half_duals: Vec<&RatVector> =
        cod_duals.iter().filter(|f| **f == f.sign_canonical()).collect();

    // |f·(Gv)| table.
    let gtab: Vec<Vec<Rational>> = half_verts
        .iter()
        .map(|v| {
            let gv = g.apply(v).unwrap();
            half_duals.iter().map(|f| f.dot(&gv).abs()).collect()
        })
        .collect();

    let dom_duals = dom.dual_vertices();
    let cod_verts = cod.vertices();
    // |x*·v| and |f·w| tables for the rank-one factors.
    let xtab: Vec<Vec<Rational>> = dom_duals
        .iter()
        .map(|xs| half_verts.iter().map(|v| xs.dot(v).abs()).collect())
        .collect();
    let ftab: Vec<Vec<Rational>> = cod_verts
        .iter()
        .map(|w| half_duals.iter().map(|f| f.dot(w).abs()).collect())
        .collect();

    let two = rat_int(2);
    (0..dom_duals.len()).into_par_iter().all(|xi| {
        (0..cod_verts.len()).all(|wi| {
            // T = x*_{xi} ⊗ w_{wi} has norm ‖x*‖·‖w‖ = 1.
            let mut lhs = Rational::zero();
            for (vi, grow) in gtab.iter().enumerate() {
                for (fi, gval) in grow.iter().enumerate() {
                    let cand = gval + &xtab[xi][vi] * &ftab[wi][fi];
                    if cand > lhs {
                        lhs = cand;
                    }
                }
            }
            lhs == two
        })
    })
}

/// Spear-equation soundness for every all-true operator fixture: the
/// exhaustive rank-one family, 200 seeded random rational operators, and a
/// thousand fuzz trials at 1e-9.
#[test]
fn criterion_4_spear_equation_soundness() {
    for name in ["example52_G1", "example52_G2", "example52_G"] {
        let g = fixture_operator(name).unwrap();
        assert!(decide_operator(&g).unwrap().all_true(), "{name} must be all-true");

        // Exhaustive rank-one family {f ⊗ w}.
        assert!(rank_one_family_all_hold(&g), "{name}: rank-one family");
        // The table evaluator must agree with spear_equation itself on a
        // deterministic subsample of the family.
        let dom_duals = g.domain().dual_vertices();
        let cod_verts = g.codomain().vertices();
        let mut k = 0usize;
        for (xi, xs) in dom_duals.iter().enumerate() {
            for (wi, w) in cod_verts.iter().enumerate() {
                if (xi + wi) % 37 != 0 {
                    continue;
                }
                k += 1;
                let t = LinOp::rank_one("t", xs, w, g.domain().clone(), g.codomain().clone())
                    .unwrap();
                let eq = spear_equation(&g, &t).unwrap();
                assert!(eq.holds, "{name}: rank-one {xi},{wi}");
                assert_eq!(eq.lhs, rat_int(2));
            }
        }
        assert!(k > 0);

        // 200 seeded random rational operators, exact.
        let mut rng = ChaCha8Rng::seed_from_u64(0x52);
        let (rows, cols) = (g.codomain().dim(), g.domain().dim());
        let mut done = 0;
        while done < 200 {
            let mut m = RatMatrix::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, rat(rng.random_range(-8..=8), 4));
                }
            }
            let t = LinOp::new_shared("t", g.domain().clone(), g.codomain().clone(), m).unwrap();
            if t.operator_norm().is_zero() {
                continue;
            }
            let eq = spear_equation(&g, &t).unwrap();
            assert!(eq.holds, "{name}: random T #{done}");
            done += 1;
        }

        let report = oracle::fuzz_spear_equation(&g, 1000, 1e-9, 0x52);
        assert!(report.passed, "{name}: fuzz max violation {}", report.max_violation);
    }
    pass("criterion 4 (spear equation: exhaustive rank-one family, 200 random T, 1000 fuzz trials)");
}

fn random_rat_vector(rng: &mut ChaCha8Rng, dim: usize) -> RatVector {
    RatVector::new((0..dim).map(|_| rat(rng.random_range(-12..=12), 4)).collect())
}

fn acceptance_fixture_names() -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for n in 2..=4 {
        names.push(format!("l1:{n}"));
        names.push(format!("linf:{n}"));
    }
    for n in ["example52_X1", "example52_X2", "example52_Y1", "example52_Y2", "hexagon"] {
        names.push(n.to_string());
    }
    names
}

/// Structural invariants: polar involution on random symmetric polytopes,
/// sum duality, adjoint norms and verdicts, sum stability, the rank-one
/// characterization, and index-1 ⇔ spear over every fixture vertex.
#[test]
fn criterion_5_structural_invariants() {
    // Polar involution on 200 random symmetric polytopes of dimension <= 5.
    let mut rng = ChaCha8Rng::seed_from_u64(0x51);
    let mut built = 0usize;
    while built < 200 {
        let dim = rng.random_range(2..=5usize);
        let count = rng.random_range(dim + 1..=dim + 6);
        let mut pts = Vec::with_capacity(2 * count);
        for _ in 0..count {
            let p = random_rat_vector(&mut rng, dim);
            if p.is_zero() {
                continue;
            }
            pts.push(p.clone());
            pts.push(p.neg());
        }
        let Ok(body) = Polytope::from_vertices(dim, &pts, &DdLimits::default()) else {
            // Degenerate draw (not full-dimensional); try again.
            continue;
        };
        built += 1;
        assert_eq!(body.polar().polar(), body);
        let double = Polytope::from_vertices(dim, body.polar().vertices(), &DdLimits::default())
            .unwrap()
            .polar();
        assert_eq!(double.vertices(), body.vertices(), "recomputed polar involution");
        // Membership sanity on the same instance: vertices sit on the
        // boundary, slightly scaled copies fall outside.
        let bump = rat(1_000_001, 1_000_000);
        for v in body.vertices() {
            assert!(body.contains(v).unwrap());
            assert!(!body.contains(&v.scale(&bump)).unwrap());
        }
    }

    // Sum duality, exact vertex-set equalities, both kinds.
    let pairs = [("l1:2", "linf:2"), ("example52_X1", "l1:3")];
    for (a, b) in pairs {
        let a = fixture(a).unwrap();
        let b = fixture(b).unwrap();
        let inf_dual = direct_sum(&[&a, &b], SumKind::SumInf).unwrap().dual_space();
        let dual_one = direct_sum(&[&a.dual_space(), &b.dual_space()], SumKind::SumOne).unwrap();
        assert!(inf_dual.same_space(&dual_one));
        let one_dual = direct_sum(&[&a, &b], SumKind::SumOne).unwrap().dual_space();
        let dual_inf = direct_sum(&[&a.dual_space(), &b.dual_space()], SumKind::SumInf).unwrap();
        assert!(one_dual.same_space(&dual_inf));
    }

    // Adjoints preserve norms (fixtures and 100 random operators) and
    // verdicts (fixtures).
    let fixture_ops = ["example52_G1", "example52_G2", "example52_G", "id:l1:3", "id:linf:2", "id:example52_X1", "id:hexagon"];
    for name in fixture_ops {
        let g = fixture_operator(name).unwrap();
        assert_eq!(g.adjoint().operator_norm(), g.operator_norm(), "{name}");
        if g.operator_norm().is_one() {
            let v = decide_operator(&g).unwrap();
            let va = decide_operator(&g.adjoint()).unwrap();
            assert_eq!(v.all_true(), va.all_true(), "{name}: verdict duality");
            // Codomain-side criterion: G* maps extreme codomain duals to
            // spear vectors of the dual domain.
            let dual_route = g.codomain().dual_vertices().iter().all(|y_star| {
                let pullback = g.adjoint().apply(y_star).unwrap();
                g.domain().dual_norm(&pullback).unwrap().is_one()
                    && is_spear_vector(&g.domain().dual_space(), &pullback).unwrap().decision
            });
            assert_eq!(v.all_true(), dual_route, "{name}: codomain criterion");
        }
    }
    let small = ["l1:2", "linf:2", "l1:3", "hexagon"];
    let mut done = 0;
    while done < 100 {
        let dname = small[rng.random_range(0..small.len())];
        let cname = small[rng.random_range(0..small.len())];
        let dom = fixture(dname).unwrap();
        let cod = fixture(cname).unwrap();
        let mut m = RatMatrix::zeros(cod.dim(), dom.dim());
        for i in 0..cod.dim() {
            for j in 0..dom.dim() {
                m.set(i, j, rat(rng.random_range(-12..=12), 6));
            }
        }
        let g = LinOp::new("g", dom, cod, m).unwrap();
        assert_eq!(g.adjoint().operator_norm(), g.operator_norm());
        done += 1;
    }

    // Sum stability of verdicts, both kinds and both directions.
    let lush_a = fixture_operator("id:l1:2").unwrap();
    let lush_b = fixture_operator("id:linf:3").unwrap();
    let bad = fixture_operator("id:example52_X1").unwrap();
    for kind in [SumKind::SumInf, SumKind::SumOne] {
        assert!(decide_operator(&block_sum(&[&lush_a, &lush_b], kind).unwrap()).unwrap().all_true());
        assert!(!decide_operator(&block_sum(&[&lush_a, &bad], kind).unwrap()).unwrap().all_true());
        assert!(!decide_operator(&block_sum(&[&bad, &lush_b], kind).unwrap()).unwrap().all_true());
    }

    // Rank-one characterization on 100 random rank-one norm-one operators.
    let mut done = 0;
    while done < 100 {
        let dname = small[rng.random_range(0..small.len())];
        let cname = small[rng.random_range(0..small.len())];
        let dom = Arc::new(fixture(dname).unwrap());
        let cod = Arc::new(fixture(cname).unwrap());
        let x_star = random_rat_vector(&mut rng, dom.dim());
        let y = random_rat_vector(&mut rng, cod.dim());
        let nx = dom.dual_norm(&x_star).unwrap();
        let ny = cod.norm(&y).unwrap();
        if nx.is_zero() || ny.is_zero() {
            continue;
        }
        let x_star = x_star.scale(&nx.recip());
        let y = y.scale(&ny.recip());
        let g = LinOp::rank_one("g", &x_star, &y, dom.clone(), cod.clone()).unwrap();
        assert!(g.operator_norm().is_one());
        let lush = decide_operator(&g).unwrap().all_true();
        let factor_spears = is_spear_vector(&dom.dual_space(), &x_star).unwrap().decision
            && is_spear_vector(&cod, &y).unwrap().decision;
        assert_eq!(lush, factor_spears, "rank-one characterization");
        let cert = spearlab::analysis::rank_one_lush(&x_star, &y, &dom, &cod).unwrap();
        assert_eq!(cert.decision, lush, "tagged rank-one certificate");
        done += 1;
    }

    // Numerical index 1 exactly at spear vectors, over every fixture vertex.
    for name in acceptance_fixture_names() {
        let space = fixture(&name).unwrap();
        let verts = space.vertices().to_vec();
        verts.par_iter().for_each(|v| {
            let (value, _) = numerical_index(&space, v).unwrap();
            let spear = is_spear_vector(&space, v).unwrap().decision;
            assert_eq!(value.is_one(), spear, "{name} at {v}");
            assert!(value >= Rational::zero() && value <= Rational::one());
        });
    }
    pass("criterion 5 (structural invariants, exact property suites)");
}

/// The infinite-dimensional headline results are out of scope by
/// construction; the finite-dimensional surface above is the whole
/// acceptance target. Nothing to compute.
#[test]
fn criterion_6_out_of_scope_surface() {
    pass("criterion 6 (infinite-dimensional results excluded; finite-dimensional surface only)");
}

/// Budget guard: the acceptance computations above must fit comfortably in
/// the five-minute whole-suite budget; this re-runs the two heaviest pieces
/// and checks their combined time.
#[test]
fn criterion_7_runtime_budget() {
    let started = Instant::now();
    let g = fixture_operator("example52_G").unwrap();
    assert!(decide_operator(&g).unwrap().all_true());
    let (bound, _) = ng_upper_bound(&g, 50, 0x7).unwrap();
    assert_eq!(bound, rat_int(1), "every sampled radius is full for a lush operator");
    let hex = LinOp::identity(fixture("hexagon").unwrap());
    let (bound, argmin) = ng_upper_bound(&hex, 2000, 0x7).unwrap();
    assert!(bound < rat_int(1));
    // Regression constant produced by this seeded sampling run, frozen.
    assert_eq!(bound, rat(1, 2));
    assert_eq!(vg_radius(&hex, &argmin).unwrap(), bound);
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:?}");
    pass("criterion 7 (runtime within budget)");
}
