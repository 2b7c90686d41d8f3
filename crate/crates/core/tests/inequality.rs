use hypergruss::inequality::exploratory::{thm_a_core, thm_b_core, thm_c_core};
use hypergruss::inequality::*;
use hypergruss::oracle::golden::{self, GoldenKind};
use hypergruss::oracle::{oracle_gruss, QuadKind};
use hypergruss::{gauss_2f1, kummer_1f1, EvalConfig, HgError, ParamSet};
use rand::{Rng, SeedableRng};

fn cfg() -> CheckConfig {
    CheckConfig::default()
}

fn ps(a: f64, b: f64, c: f64, alpha: f64, beta: f64, p: f64) -> ParamSet {
    ParamSet::new(a, b, c, alpha, beta, p)
}

fn named<'a>(reports: &'a [IneqReport], name: &str) -> &'a IneqReport {
    reports.iter().find(|r| r.name == name).unwrap_or_else(|| panic!("no report {name}"))
}

fn assert_hypothesis(r: hypergruss::Result<impl std::fmt::Debug>, needle: &str) {
    match r {
        Err(HgError::Hypothesis { condition, .. }) => assert!(condition.contains(needle), "{condition}"),
        other => panic!("expected hypothesis error mentioning {needle:?}, got {other:?}"),
    }
}

// ---- Grüss lemma ----

#[test]
fn gruss_constant_sequence() {
    let inst = GrussInstance::tight(vec![0.3; 5], vec![0.1, 0.7, 0.2, 0.9, 0.4], vec![1.0, 0.2, 0.0, 3.0, 0.5]);
    let r = gruss_check(&inst).unwrap();
    assert_eq!(r.lhs, 0.0);
    assert!(r.holds);
}

#[test]
fn gruss_sharpness_witness() {
    for &(g, gg, f, ff) in &[(0.0, 1.0, 0.0, 1.0), (-2.5, 3.0, 0.25, 0.75), (1e-3, 7.0, -4.0, -1.0)] {
        let inst = GrussInstance {
            x: vec![g, gg],
            y: vec![f, ff],
            m: vec![1.0, 1.0],
            gamma_lo: g,
            gamma_hi: gg,
            phi_lo: f,
            phi_hi: ff,
        };
        let r = gruss_check(&inst).unwrap();
        assert!(r.slack.abs() <= 1e-12, "{r:?}");
        assert!((r.lhs - (gg - g) * (ff - f)).abs() <= 1e-12);
        assert!(!r.certain_failure());
    }
}

#[test]
fn gruss_random_matches_double_loop() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(50);
    for _ in 0..200 {
        let n = rng.gen_range(1..=50);
        let x: Vec<f64> = (0..n).map(|_| rng.gen()).collect();
        let y: Vec<f64> = (0..n).map(|_| rng.gen()).collect();
        let m: Vec<f64> = (0..n).map(|_| rng.gen()).collect();
        let r = gruss_check(&GrussInstance::tight(x.clone(), y.clone(), m.clone())).unwrap();
        assert!(r.holds && r.slack >= 0.0);
        let (l, rhs) = oracle_gruss(&x, &y, &m).unwrap();
        assert!((l - r.lhs).abs() <= 1e-12 * (1.0 + l), "{l} vs {}", r.lhs);
        assert!((rhs - r.rhs).abs() <= 1e-12 * (1.0 + rhs));
    }
}

#[test]
fn gruss_rejects_bad_instances() {
    let mut inst = GrussInstance::tight(vec![0.0, 1.0], vec![0.0, 1.0], vec![1.0, 1.0]);
    inst.gamma_hi = 0.5;
    assert!(matches!(gruss_check(&inst), Err(HgError::Domain(_))));
    let inst = GrussInstance::tight(vec![0.0, 1.0], vec![0.0, 1.0], vec![1.0, -1.0]);
    assert!(gruss_check(&inst).is_err());
    let inst = GrussInstance::tight(vec![0.0, 1.0], vec![0.0], vec![1.0, 1.0]);
    assert!(gruss_check(&inst).is_err());
}

// ---- ratios ----

#[test]
fn ratios_reduce_at_p0() {
    let e = EvalConfig::default();
    for &(a, b, c, z) in &[(1.0, 1.0, 2.0, 0.5), (2.5, 0.4, 1.3, -0.6), (0.7, 3.0, 4.5, 0.9)] {
        let p = ps(a, b, c, 1.3, 0.8, 0.0);
        let r1 = ratio_1r1(&p, z, &cfg()).unwrap();
        let f1 = kummer_1f1(b, c, z, &e).unwrap();
        assert!((r1.value - f1.value).abs() <= 1e-10 * f1.value.abs());
        let r2 = ratio_2r1(&p, z, &cfg()).unwrap();
        let f2 = gauss_2f1(a, b, c, z, &e).unwrap();
        assert!((r2.value - f2.value).abs() <= 1e-10 * f2.value.abs());
    }
}

#[test]
fn ratios_are_one_at_zero() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(1);
    for _ in 0..50 {
        let b = rng.gen_range(0.2..4.0);
        let p = ps(
            rng.gen_range(0.2..3.0),
            b,
            b + rng.gen_range(0.2..4.0),
            rng.gen_range(0.2..3.0),
            rng.gen_range(0.2..3.0),
            rng.gen_range(0.0..2.0),
        );
        assert!((ratio_1r1(&p, 0.0, &cfg()).unwrap().value - 1.0).abs() <= 1e-10);
        assert!((ratio_2r1(&p, 0.0, &cfg()).unwrap().value - 1.0).abs() <= 1e-10);
    }
}

#[test]
fn ratios_match_composed_goldens() {
    let entries = golden::shipped().unwrap();
    let gb_ps = ps(0.0, 1.0, 2.0, 1.0, 2.0, 0.1);
    let gb = golden::find(&entries, GoldenKind::Quad(QuadKind::GenBeta), &gb_ps, 0.0).unwrap();
    // B(1, 1) = 1, so the raw golden is also the normalized one
    let gchf = golden::find(&entries, GoldenKind::Quad(QuadKind::GchfInt), &gb_ps, 0.5).unwrap();
    let expect = gchf.value / gb.value;
    let r = ratio_1r1(&ps(1.0, 1.0, 2.0, 1.0, 2.0, 0.1), 0.5, &cfg()).unwrap();
    assert!((r.value - expect).abs() <= 10.0 * (r.err_estimate + 2.0 * (gchf.bound + gb.bound)));

    let gghf_ps = ps(1.0, 1.0, 2.0, 1.0, 2.0, 0.1);
    let gghf = golden::find(&entries, GoldenKind::Quad(QuadKind::GghfInt), &gghf_ps, 0.3).unwrap();
    let expect = gghf.value / gb.value;
    let r = ratio_2r1(&gghf_ps, 0.3, &cfg()).unwrap();
    assert!((r.value - expect).abs() <= 10.0 * (r.err_estimate + 2.0 * (gghf.bound + gb.bound)));
}

#[test]
fn ratio_domain_errors() {
    assert!(ratio_1r1(&ps(1.0, 2.0, 1.0, 1.0, 2.0, 0.1), 0.5, &cfg()).is_err());
    assert!(ratio_2r1(&ps(1.0, 1.0, 2.0, 1.0, 2.0, 0.1), 1.0, &cfg()).is_err());
    assert!(ratio_1r1(&ps(1.0, 1.0, 2.0, -1.0, 2.0, 0.1), 0.5, &cfg()).is_err());
}

// ---- Proposition ----

#[test]
fn prop_kernel_bound_closed_form() {
    // α = 1, β = 2, t = 1/2, p = 1: K = ₁F₁(1;2;−4) = (1 − e^{−4})/4 ≤ 1/4
    let r = check_prop_bounds(&ps(2.0, 1.0, 2.0, 1.0, 2.0, 1.0), 0.5, 0.5, &cfg()).unwrap();
    let b15 = named(&r, "prop-15");
    assert!((b15.rhs - 0.25).abs() < 1e-15);
    assert!((b15.lhs - (1.0 - (-4.0f64).exp()) / 4.0).abs() < 1e-15);
    assert!(b15.holds && !b15.uncertain);
    // β = α + 1 makes the intermediate bound an identity
    let xx = named(&r, "prop-xx");
    assert!(xx.uncertain && xx.slack.abs() < 1e-14);
}

#[test]
fn prop_14_holds_at_example() {
    let r = check_prop_bounds(&ps(2.0, 1.0, 2.0, 1.0, 2.0, 1.0), 0.5, 0.5, &cfg()).unwrap();
    let b14 = named(&r, "prop-14");
    // b = 1, c = 2 is the equality case: both sides are (e^z − 1)/z
    assert!(!b14.certain_failure());
    assert!((b14.rhs - 0.5f64.exp_m1() / 0.5).abs() < 1e-14);
    for name in ["prop-14", "prop-15", "prop-xx", "prop-17"] {
        let r = check_prop_bounds(&ps(2.5, 1.5, 3.0, 1.2, 2.7, 0.4), -0.3, 0.2, &cfg()).unwrap();
        let rep = named(&r, name);
        assert!(rep.holds && !rep.uncertain, "{rep:?}");
    }
}

#[test]
fn prop_16_is_violated_as_stated() {
    // B_1(1,1) with α=1, β=2 is about 0.165 while θ = 1/16. The argument
    // only supports λ_{b−1,c−b−1} in place of λ_{b,c−b}, or 4θ.
    let r = check_prop_bounds(&ps(2.0, 1.0, 2.0, 1.0, 2.0, 1.0), 0.5, 0.5, &cfg()).unwrap();
    let b16 = named(&r, "prop-16");
    assert!((b16.rhs - 0.0625).abs() < 1e-15);
    assert!(b16.certain_failure());
    assert!(b16.lhs <= 4.0 * b16.rhs);
}

#[test]
fn prop_grid_shape() {
    let ts = default_t_grid();
    assert_eq!(ts.len(), 19);
    assert!((ts[0] - 0.05).abs() < 1e-15 && (ts[18] - 0.95).abs() < 1e-15);
    let r = check_prop_bounds_grid(&ps(0.5, 2.0, 3.5, 1.0, 2.5, 0.2), 0.4, &ts, &cfg()).unwrap();
    assert_eq!(r.len(), 3 + 2 * 19);
}

#[test]
fn prop_hypotheses_are_named() {
    let good = ps(2.0, 1.0, 2.0, 1.0, 2.0, 1.0);
    assert_hypothesis(check_prop_bounds(&ParamSet { a: 1.0, ..good }, 0.5, 0.5, &cfg()), "a != 1");
    assert_hypothesis(check_prop_bounds(&ParamSet { b: 0.5, ..good }, 0.5, 0.5, &cfg()), "b >= 1");
    assert_hypothesis(check_prop_bounds(&ParamSet { c: 1.5, ..good }, 0.5, 0.5, &cfg()), "c >= b + 1");
    assert_hypothesis(check_prop_bounds(&ParamSet { alpha: 0.5, ..good }, 0.5, 0.5, &cfg()), "alpha >= 1");
    assert_hypothesis(check_prop_bounds(&ParamSet { beta: 1.5, ..good }, 0.5, 0.5, &cfg()), "beta >= alpha + 1");
    assert_hypothesis(check_prop_bounds(&ParamSet { p: 0.0, ..good }, 0.5, 0.5, &cfg()), "p > 0");
    assert_hypothesis(check_prop_bounds(&good, 0.0, 0.5, &cfg()), "z != 0");
    assert_hypothesis(check_prop_bounds(&good, 1.0, 0.5, &cfg()), "|z| < 1");
    assert_hypothesis(check_prop_bounds(&good, 0.5, 1.0, &cfg()), "t in (0, 1)");
}

#[test]
fn corollary_prop_examples() {
    let r = check_corollary_prop(&ps(2.0, 1.0, 2.0, 1.0, 2.0, 100.0), 0.5, &cfg()).unwrap();
    for rep in &r {
        assert!(rep.lhs < 1e-2 && rep.rhs > 0.0 && rep.holds && !rep.uncertain);
    }
    for z in [0.5, -0.5] {
        let r = check_corollary_prop(&ps(2.0, 1.0, 2.0, 1.0, 2.0, 1.0), z, &cfg()).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|rep| rep.holds && !rep.uncertain), "{r:?}");
    }
    assert_hypothesis(check_corollary_prop(&ps(2.0, 1.0, 2.0, 1.0, 2.0, 0.0), 0.5, &cfg()), "p > 0");
}

// ---- Theorems ----

#[test]
fn thm_a_examples() {
    let p = ps(1.0, 1.0, 2.0, 1.0, 2.0, 0.5);
    for rep in check_thm_a(&p, 0.7, 0.7, &cfg()).unwrap() {
        assert_eq!(rep.lhs, 0.0);
        assert!(rep.holds);
    }
    for q in [p, p.with_p(0.0)] {
        let r = check_thm_a(&q, 0.3, 0.7, &cfg()).unwrap();
        assert!(r.iter().all(|rep| rep.holds && !rep.uncertain), "{r:?}");
    }
    // at p = 0, ₁R₁(1;2;z) = (e^z − 1)/z
    let r = check_thm_a(&p.with_p(0.0), 0.3, 0.7, &cfg()).unwrap();
    let f = |z: f64| z.exp_m1() / z;
    let lhs1 = (0.7f64.exp_m1() * (f(0.3) - 1.0) - 0.3f64.exp_m1() * (f(0.7) - 1.0)).abs();
    assert!((named(&r, "thm-a-1").lhs - lhs1).abs() < 1e-10);
}

#[test]
fn thm_a_first_inequality_is_symmetric() {
    let p = ps(1.0, 0.8, 2.1, 1.5, 2.5, 0.3);
    let fwd = thm_a_core(&p, 0.4, 1.3, &cfg()).unwrap();
    let rev = thm_a_core(&p, 1.3, 0.4, &cfg()).unwrap();
    let (l1, l2) = (named(&fwd, "thm-a-1").lhs, named(&rev, "thm-a-1").lhs);
    assert!((l1 - l2).abs() <= 1e-12 * l1.max(1e-300), "{l1} {l2}");
}

#[test]
fn thm_a_hypotheses() {
    let p = ps(1.0, 1.0, 2.0, 1.0, 2.0, 0.5);
    assert_hypothesis(check_thm_a(&p, 0.8, 0.7, &cfg()), "0 < z <= z0");
    assert_hypothesis(check_thm_a(&p, 0.0, 0.7, &cfg()), "0 < z <= z0");
    assert_hypothesis(check_thm_a(&p.with_p(-0.1), 0.3, 0.7, &cfg()), "p >= 0");
    assert_hypothesis(check_thm_a(&ParamSet { c: 1.0, ..p }, 0.3, 0.7, &cfg()), "0 < b < c");
}

#[test]
fn thm_i0_first_inequality_examples() {
    for p in [ps(1.0, 1.0, 2.0, 1.0, 2.0, 0.0), ps(2.0, 1.0, 2.0, 1.0, 2.0, 0.2)] {
        let r = check_thm_i0(&p, 0.2, 0.6, &cfg()).unwrap();
        let first = named(&r, "thm-i0-1");
        assert!(first.holds && !first.uncertain);
        for rep in check_thm_i0(&p, 0.6, 0.6, &cfg()).unwrap().iter().filter(|r| r.name == "thm-i0-1") {
            assert_eq!(rep.lhs, 0.0);
        }
    }
}

#[test]
fn thm_i0_second_inequality_is_violated_as_stated() {
    // With a = 1, b = 1, c = 2, p = 0: ₂R₁ = −ln(1−z)/z and the left side
    // is |ln(1−z)/z − ln(1−z0)/z0| ≈ 0.2817 against a right side of 0.1.
    // The Grüss argument gives ¼ (1−z)^a/(1−z0)^a without the factor z.
    let r = check_thm_i0(&ps(1.0, 1.0, 2.0, 1.0, 2.0, 0.0), 0.2, 0.6, &cfg()).unwrap();
    let second = named(&r, "thm-i0-2");
    let f = |z: f64| (1.0 - z) * -(-z).ln_1p() / z;
    assert!((second.lhs - (f(0.2) - f(0.6)).abs()).abs() < 1e-12);
    assert!((second.rhs - 0.1).abs() < 1e-15);
    assert!(second.certain_failure());
    assert!(second.lhs <= second.rhs / 0.2);
    let r = check_thm_i0(&ps(2.0, 1.0, 2.0, 1.0, 2.0, 0.2), 0.2, 0.6, &cfg()).unwrap();
    assert!(named(&r, "thm-i0-2").certain_failure());
}

#[test]
fn thm_i0_hypotheses() {
    let p = ps(1.0, 1.0, 2.0, 1.0, 2.0, 0.0);
    assert_hypothesis(check_thm_i0(&p, 0.2, 1.0, &cfg()), "z0 < 1");
    assert_hypothesis(check_thm_i0(&ParamSet { a: 0.0, ..p }, 0.2, 0.5, &cfg()), "a > 0");
    assert_hypothesis(check_thm_i0(&p, 0.7, 0.5, &cfg()), "0 < z <= z0");
}

#[test]
fn thm_b_examples() {
    let p = ps(1.0, 1.0, 2.0, 1.0, 2.0, 0.1);
    let r = check_thm_b(&p, 0.5, 0.5, 2.0, &cfg()).unwrap();
    assert!(r.holds && !r.uncertain);
    assert_eq!(check_thm_b(&p, 0.5, 1.0, 2.0, &cfg()).unwrap().lhs, 0.0);
    assert_eq!(check_thm_b(&p, 0.5, 0.3, 0.0, &cfg()).unwrap().lhs, 0.0);
    assert_hypothesis(check_thm_b(&p, 1.5, 0.5, 2.0, &cfg()), "z1");
    assert_hypothesis(check_thm_b(&p, 0.5, 0.5, -1.0, &cfg()), "z3 >= 0");
}

#[test]
fn thm_c_examples() {
    let p = ps(1.5, 1.0, 2.0, 1.0, 2.0, 0.1);
    let r = check_thm_c(&p, 0.8, 0.4, 0.5, &cfg()).unwrap();
    assert!(r.holds && !r.uncertain);
    assert_eq!(check_thm_c(&p, 0.8, 1.0, 0.5, &cfg()).unwrap().lhs, 0.0);
    assert_eq!(check_thm_c(&p, 0.8, 0.4, 0.0, &cfg()).unwrap().lhs, 0.0);
    assert_hypothesis(check_thm_c(&p, 0.8, 0.4, 1.0, &cfg()), "z3 < 1");
}

#[test]
fn theorems_b_and_c_fail_when_generalized_beta_is_negative() {
    // α > β lets the kernel change sign; here B_p^{(α,β)}(b, c−b) < 0, so
    // the right-hand sides are negative while the left-hand sides are not.
    let p = ps(1.4, 1.647, 2.2536, 1.44, 0.264, 0.5276);
    let b = check_thm_b(&p, 0.5, 0.5, 1.0, &cfg()).unwrap();
    assert!(b.rhs < 0.0 && b.certain_failure());
    let c = check_thm_c(&p, 0.5, 0.5, 0.5, &cfg()).unwrap();
    assert!(c.rhs < 0.0 && c.certain_failure());
}

// ---- Corollaries ----

#[test]
fn corollary_examples() {
    let p = ps(1.0, 1.0, 2.0, 9.0, 9.0, 0.7);
    let r = check_corollaries_p0(&p, CorollaryArgs::A { z: 0.6, z0: 0.6 }, &cfg()).unwrap();
    assert!(r.iter().all(|rep| rep.lhs == 0.0));
    let r = check_corollaries_p0(&p, CorollaryArgs::A { z: 0.3, z0: 0.7 }, &cfg()).unwrap();
    assert!(r.iter().all(|rep| rep.holds && !rep.uncertain));
    assert!(r.iter().all(|rep| rep.inputs.params.unwrap().p == 0.0));
    // with z1 = 1 the printed exponent factor is 1
    let r = check_corollaries_p0(&p, CorollaryArgs::B { z1: 1.0, z2: 0.4, z3: 1.5 }, &cfg()).unwrap();
    let printed = named(&r, "corollary-b-printed");
    let f = |z: f64| z.exp_m1() / z;
    assert!((printed.lhs - (f(0.6) - f(1.5)).abs()).abs() < 1e-12);
}

#[test]
fn printed_corollary_b_fails_somewhere() {
    // e^{(z1−1) z3} in place of e^{(z2−1) z3}: z1 = 1, z2 = 0 gives
    // |1 − ₁F₁(b;c;z3)|, close to e^{z3} − 1 when b/c → 1 and so larger
    // than ¼ e^{z3}. The theorem-consistent form holds at the same point.
    let p = ps(1.0, 2.9, 3.0, 1.0, 1.0, 0.0);
    let r = check_corollaries_p0(&p, CorollaryArgs::B { z1: 1.0, z2: 0.0, z3: 2.0 }, &cfg()).unwrap();
    let consistent = named(&r, "corollary-b");
    let printed = named(&r, "corollary-b-printed");
    assert!(consistent.holds && !consistent.uncertain, "{consistent:?}");
    assert!(printed.certain_failure(), "{printed:?}");
}

#[test]
fn theorems_reduce_to_corollaries_at_p0() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(9);
    for _ in 0..30 {
        let b = rng.gen_range(0.2..3.0);
        let p = ps(rng.gen_range(0.2..3.0), b, b + rng.gen_range(0.2..3.0), 1.7, 0.6, 0.0);
        let z0 = rng.gen_range(0.05..0.95);
        let z = z0 * rng.gen_range(0.05..1.0);
        let (z1, z2, z3) = (rng.gen::<f64>(), rng.gen::<f64>(), rng.gen_range(0.0..0.95));
        let pairs: Vec<(Vec<IneqReport>, Vec<IneqReport>)> = vec![
            (check_thm_a(&p, z, z0, &cfg()).unwrap(), check_corollaries_p0(&p, CorollaryArgs::A { z, z0 }, &cfg()).unwrap()),
            (check_thm_i0(&p, z, z0, &cfg()).unwrap(), check_corollaries_p0(&p, CorollaryArgs::I0 { z, z0 }, &cfg()).unwrap()),
            (
                vec![check_thm_b(&p, z1, z2, z3, &cfg()).unwrap()],
                check_corollaries_p0(&p, CorollaryArgs::B { z1, z2, z3 }, &cfg()).unwrap()[..1].to_vec(),
            ),
            (
                vec![check_thm_c(&p, z1, z2, z3, &cfg()).unwrap()],
                check_corollaries_p0(&p, CorollaryArgs::C { z1, z2, z3 }, &cfg()).unwrap(),
            ),
        ];
        for (thm, cor) in pairs {
            assert_eq!(thm.len(), cor.len());
            for (t, c) in thm.iter().zip(&cor) {
                assert!((t.lhs - c.lhs).abs() <= 1e-9 * (1.0 + c.lhs.abs()), "{t:?}\n{c:?}");
                assert!((t.rhs - c.rhs).abs() <= 1e-9 * (1.0 + c.rhs.abs()), "{t:?}\n{c:?}");
            }
        }
    }
}

#[test]
fn degenerate_arguments_give_zero_lhs() {
    let p = ps(1.3, 0.7, 1.9, 1.1, 2.4, 0.3);
    assert_eq!(named(&check_thm_a(&p, 0.9, 0.9, &cfg()).unwrap(), "thm-a-1").lhs, 0.0);
    assert_eq!(named(&check_thm_i0(&p, 0.4, 0.4, &cfg()).unwrap(), "thm-i0-1").lhs, 0.0);
    assert_eq!(check_thm_b(&p, 0.3, 1.0, 2.5, &cfg()).unwrap().lhs, 0.0);
    assert_eq!(check_thm_b(&p, 0.3, 0.6, 0.0, &cfg()).unwrap().lhs, 0.0);
    assert_eq!(check_thm_c(&p, 0.3, 1.0, 0.5, &cfg()).unwrap().lhs, 0.0);
    assert_eq!(check_thm_c(&p, 0.3, 0.6, 0.0, &cfg()).unwrap().lhs, 0.0);
    // z = 0 lies outside the hypotheses; ₁R₁(0) = 1 makes the first
    // inequality of Theorem A vanish identically
    assert_eq!(named(&thm_a_core(&p, 0.0, 0.9, &cfg()).unwrap(), "thm-a-1").lhs, 0.0);
    let _ = (thm_b_core, thm_c_core);
}

#[test]
fn theorems_hold_with_nonnegative_kernel() {
    // α ≤ β keeps the kernel positive, which is what the Grüss argument uses
    let mut rng = rand::rngs::StdRng::seed_from_u64(77);
    for _ in 0..150 {
        let b = rng.gen_range(0.1..4.0);
        let alpha = rng.gen_range(0.1..3.0);
        let p = ps(
            rng.gen_range(0.1..4.0),
            b,
            b + rng.gen_range(0.1..4.0),
            alpha,
            alpha + rng.gen_range(0.0..3.0),
            rng.gen_range(0.0..3.0),
        );
        let z0 = rng.gen_range(0.01..2.5);
        let z = z0 * rng.gen_range(0.01..1.0);
        let (z1, z2, z3) = (rng.gen::<f64>(), rng.gen::<f64>(), rng.gen_range(0.0..4.0));
        let mut reps = check_thm_a(&p, z, z0, &cfg()).unwrap();
        reps.push(check_thm_b(&p, z1, z2, z3, &cfg()).unwrap());
        reps.push(check_thm_c(&p, z1, z2, z3 / 4.2, &cfg()).unwrap());
        for r in reps {
            assert!(!r.certain_failure(), "{r:?}");
        }
    }
}
