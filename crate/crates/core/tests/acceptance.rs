//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured values (run with `--nocapture` to see them). Criterion 9 is
//! the long-running sieve check and is `#[ignore]`d by default; run it with
//! `cargo test --release -p pnt-bounds --test acceptance -- --ignored`.

use pnt_bounds::numerics::Direction;
use pnt_bounds::pintz::{self, PUBLISHED_TABLE};
use pnt_bounds::primes::build_sieve;
use pnt_bounds::ramanujan::{self, PiecewiseEnvelope};
use pnt_bounds::zeta::{lemma2_sum_bound, ZeroCatalog, ZeroDensityTable, ZeroFreeRegion};
use pnt_bounds::{pi_li, LogScalar};
use std::time::Instant;

fn data_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn density() -> ZeroDensityTable {
    ZeroDensityTable::load(&data_path("density_constants.txt")).expect("density table loads")
}

fn catalog() -> ZeroCatalog {
    ZeroCatalog::load(&data_path("zeta_zeros_100k.txt")).expect("zeros catalog loads")
}

/// deterministic uniform doubles in [0, 1)
struct Lcg(u64);

impl Lcg {
    fn next_f64(&mut self) -> f64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }
}

#[test]
fn acceptance_1_table_reproduction() {
    let start = Instant::now();
    let table = density();
    let region = ZeroFreeRegion::default();
    let candidates = table.sigmas();
    let mut worst_a = 0.0f64;
    let mut worst_eps = 0.0f64;
    for &(x, sigma_pub, a_pub, eps_pub) in &PUBLISHED_TABLE {
        let row = pintz::make_row(x, &table, &region, &candidates).unwrap();
        assert_eq!(row.sigma, sigma_pub, "sigma selection at X = {x}");
        let a = row.exact_a.to_f64().unwrap();
        let rel_a = ((a - a_pub) / a_pub).abs();
        assert!(rel_a < 0.005, "A at X = {x}: {a} vs {a_pub} (rel {rel_a})");
        let eps = row.eps0_exact.to_f64().unwrap();
        let rel_e = ((eps - eps_pub) / eps_pub).abs();
        assert!(
            rel_e < 0.01,
            "eps0 at X = {x}: {eps} vs {eps_pub} (rel {rel_e})"
        );
        // stronger: the rounded columns match the published digits exactly
        assert_eq!(row.a_rounded, a_pub, "rounded A at X = {x}");
        assert!(
            (row.eps0_rounded / eps_pub - 1.0).abs() < 1e-9,
            "rounded eps0 at X = {x}"
        );
        worst_a = worst_a.max(rel_a);
        worst_eps = worst_eps.max(rel_e);
    }
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 1.0, "took {dt:?}, budget 1 s");
    println!(
        "acceptance 1 (table reproduction): PASS - 10 rows, worst A dev {worst_a:.2e} (<0.5%), \
         worst eps0 dev {worst_eps:.2e} (<1%), rounded columns exact, {dt:?}"
    );
}

#[test]
fn acceptance_2_backsolve_consistency() {
    let start = Instant::now();
    let region = ZeroFreeRegion::default();
    let targets: Vec<(f64, f64, f64)> = PUBLISHED_TABLE
        .iter()
        .map(|&(x, s, a, _)| (x, s, a))
        .collect();
    let report = pintz::backsolve_density(&targets, 3.0, &region).unwrap();
    assert_eq!(report.per_sigma.len(), 2);
    for s in &report.per_sigma {
        assert!(
            s.spread < 0.01,
            "C1({}) spread {} exceeds 1%",
            s.sigma,
            s.spread
        );
        let expect = if s.sigma == 0.98 { 16.56 } else { 17.25 };
        assert!(
            (s.mean_c1 - expect).abs() / expect < 0.005,
            "mean C1({}) = {} far from {expect}",
            s.sigma,
            s.mean_c1
        );
    }
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 1.0, "took {dt:?}, budget 1 s");
    println!(
        "acceptance 2 (back-solve consistency): PASS - C1(0.98) = {:.4} spread {:.2e}, \
         C1(0.99) = {:.4} spread {:.2e}, {dt:?}",
        report.per_sigma[0].mean_c1,
        report.per_sigma[0].spread,
        report.per_sigma[1].mean_c1,
        report.per_sigma[1].spread
    );
}

#[test]
fn acceptance_3_exponent_conventions() {
    let table = density();
    let region = ZeroFreeRegion::default();
    let candidates = table.sigmas();
    for &(x, sigma, _, _) in &PUBLISHED_TABLE {
        let row = pintz::make_row(x, &table, &region, &candidates).unwrap();
        let (b_pub, c_pub) = if sigma == 0.98 {
            (1.52, 1.89)
        } else {
            (1.51, 1.94)
        };
        assert_eq!(row.b, b_pub, "B at X = {x}");
        assert_eq!(row.c_rounded, c_pub, "C at X = {x}");
        assert!(row.c_rounded <= row.exact_exponent);
    }
    println!(
        "acceptance 3 (exponent conventions): PASS - B = (5-2s)/2 gives 1.52/1.51, \
         (16s-10)/3 rounded down gives 1.89/1.94 on all 10 rows"
    );
}

#[test]
fn acceptance_4_recip_sum_window_on_real_zeros() {
    let start = Instant::now();
    let cat = catalog();
    assert_eq!(cat.len(), 100_000);
    let lo = 2.0 * std::f64::consts::PI * std::f64::consts::E;
    let hi = 74_900.0;
    let mut rng = Lcg(0x9E3779B97F4A7C15);
    let mut worst = 0.0f64;
    let mut worst_t = 0.0f64;
    for _ in 0..200 {
        let t = lo + rng.next_f64() * (hi - lo);
        let s = cat.sum_recip_gamma(t).unwrap();
        let (center, radius) = lemma2_sum_bound(t).unwrap();
        let dev = (s - center).abs();
        if dev > worst {
            worst = dev;
            worst_t = t;
        }
        assert!(
            dev <= radius,
            "window violated at T = {t}: {dev} > {radius}"
        );
    }
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 5.0, "took {dt:?}, budget 5 s");
    println!(
        "acceptance 4 (recip-sum window on 100k real zeros): PASS - 200 heights, max \
         |sum - center| = {worst:.4} at T = {worst_t:.1} (radius 0.9321), {dt:?}"
    );
}

#[test]
fn acceptance_5_pi_li_certificate() {
    let start = Instant::now();
    let tables = build_sieve(1000).unwrap();
    let region = ZeroFreeRegion::default();
    let i1 = pi_li::i1_plus(&tables).unwrap();
    assert!(i1 <= 7.6, "i1 budget exceeded: {i1}");
    assert!(
        (7.4..7.6).contains(&i1),
        "i1 = {i1} out of the expected window"
    );

    let kitchen = pi_li::kitchen_margin(2000.0, 1.52, 1.89, 0.47, &region);
    assert!(kitchen > 0.0);
    assert!(
        (kitchen - 128.0).abs() < 0.5,
        "kitchen margin {kitchen} not near +128"
    );

    let params = pi_li::PiLiParams::from_raw(2000.0, 0.47, 411.5, 1.52, 1.89).unwrap();
    let delta = pi_li::delta_bound(&params, i1, &region).unwrap();
    assert!(
        delta > 6.5 && delta <= 6.76,
        "Delta = {delta} outside (6.5, 6.76]"
    );

    let cert = pi_li::corollary_constants(&params, delta, &region).unwrap();
    assert!(cert.coefficient <= 235.0);
    assert!(cert.exp_coefficient >= 0.8 && cert.exp_coefficient <= 0.8472);
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 5.0, "took {dt:?}, budget 5 s");
    println!(
        "acceptance 5 (pi-li certificate): PASS - i1+2/log2 = {i1:.4} <= 7.6, kitchen = \
         +{kitchen:.1}, Delta = {delta:.4} <= 6.76, coefficient = {:.3} <= 235, exp coef = \
         {:.6} in [0.8, 0.8472], {dt:?}",
        cert.coefficient, cert.exp_coefficient
    );
}

#[test]
fn acceptance_6_sufficiency_certificate() {
    let start = Instant::now();
    let env = PiecewiseEnvelope::standard();
    let cert = ramanujan::sufficiency_check(3914.0, 3915.0, &env, None).unwrap();
    assert!(
        cert.pass,
        "sufficiency check failed, margin = {}",
        cert.margin
    );
    assert!(cert.margin > 0.0);
    assert!(
        (12.5..13.5).contains(&cert.margin),
        "margin = {} not near the expected +13",
        cert.margin
    );
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 5.0, "took {dt:?}, budget 5 s");
    println!(
        "acceptance 6 (sufficiency certificate): PASS - margin at (e^3914, e^3915) = \
         +{:.4} with every input directed conservatively, {dt:?}",
        cert.margin
    );
}

#[test]
fn acceptance_7_envelope_and_deficit_inequalities() {
    let start = Instant::now();
    let tables = build_sieve(100_000_000).unwrap();
    let env = PiecewiseEnvelope::standard();
    let built = start.elapsed();

    let n = 10_000usize;
    // uniform grid on (2, 1e8] for the envelope and the psi-theta transfer
    let mut worst_env = f64::NEG_INFINITY;
    let mut worst_shoe = f64::NEG_INFINITY;
    let lo = 2.0f64;
    let hi = 1e8f64;
    for i in 1..=n {
        let x = lo + (hi - lo) * i as f64 / n as f64;
        let c = tables.chebyshev(x).unwrap();
        let l5 = x.ln().powi(5);
        let margin = x * env.eval_over_log5(x.ln()).unwrap() * l5 - (c.theta - x).abs() * l5;
        assert!(margin >= 0.0, "envelope violated at x = {x}");
        worst_env = worst_env.max(-margin);
        let transfer = (1.0 + 1.47e-7) * x.sqrt() + 1.78 * x.powf(1.0 / 3.0);
        let gap = c.psi - c.theta;
        assert!(
            (0.0..=transfer).contains(&gap),
            "psi-theta transfer violated at x = {x}: {gap} vs {transfer}"
        );
        worst_shoe = worst_shoe.max(gap / transfer);
    }

    // geometric grid for the sqrt-scale and 1/(2 log x) deficits; the
    // envelope is re-checked here from 3 on (the printed first-branch
    // constant genuinely fails on (2, 3); that gap is pinned by a dedicated
    // unit test and recorded in the data notes)
    let mut worst_l6 = 0.0f64;
    let mut worst_rs = 0.0f64;
    for i in 0..=n {
        let x = 3.0 * (1e8f64 / 3.0).powf(i as f64 / n as f64);
        let c = tables.chebyshev(x).unwrap();
        let deficit = (c.theta - x).abs();
        if x > 599.0 {
            let cap = x.sqrt() / (8.0 * std::f64::consts::PI) * x.ln().powi(2);
            assert!(deficit <= cap, "sqrt-scale bound violated at x = {x}");
            worst_l6 = worst_l6.max(deficit / cap);
        }
        if x >= 563.0 {
            let cap = x / (2.0 * x.ln());
            assert!(deficit <= cap, "1/(2 log x) bound violated at x = {x}");
            worst_rs = worst_rs.max(deficit / cap);
        }
        let l5 = x.ln().powi(5);
        assert!(
            deficit * l5 <= x * env.eval_over_log5(x.ln()).unwrap() * l5,
            "envelope violated at x = {x}"
        );
    }
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 180.0, "took {dt:?}, budget 3 min");
    println!(
        "acceptance 7 (envelope and deficit inequalities): PASS - sieve to 1e8 in {built:?}; \
         10^4-point grids: envelope holds (uniform on (2,1e8] and geometric from 3), \
         sqrt-scale bound utilisation {worst_l6:.3}, 1/(2log x) utilisation {worst_rs:.3}, \
         psi-theta transfer utilisation {worst_shoe:.3}, total {dt:?}"
    );
}

#[test]
fn acceptance_8_explicit_formula_diagnostic() {
    let start = Instant::now();
    let cat = catalog();
    let tables = build_sieve(1_000_200).unwrap();

    let d_small = cat
        .explicit_formula_residual(&tables, 1e6 + 0.5, 1000.0)
        .unwrap();
    let d_full = cat
        .explicit_formula_residual(&tables, 1e6 + 0.5, 74_920.0)
        .unwrap();
    assert!(
        d_full.residual < d_small.residual,
        "residual did not shrink: {} vs {}",
        d_full.residual,
        d_small.residual
    );
    assert!(d_full.zeros_used > 99_000);

    // RMS over 20 half-odd points near 1e6, decreasing across the T ladder
    let heights = [1000.0, 10_000.0, 74_900.0];
    let mut rms = [0.0f64; 3];
    for j in 0..20 {
        let x = 999_981.5 + 2.0 * j as f64;
        for (k, &t) in heights.iter().enumerate() {
            let d = cat.explicit_formula_residual(&tables, x, t).unwrap();
            rms[k] += d.residual * d.residual;
            assert!(d.residual <= d.budget, "residual beyond the formula budget");
        }
    }
    for r in &mut rms {
        *r = (*r / 20.0).sqrt();
    }
    assert!(
        rms[0] > rms[1] && rms[1] > rms[2],
        "RMS ladder not decreasing: {rms:?}"
    );
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 60.0, "took {dt:?}, budget 1 min");
    println!(
        "acceptance 8 (explicit-formula diagnostic): PASS - residual at x = 1e6+1/2 drops \
         {:.2} -> {:.2} from T = 1e3 to 7.5e4; RMS ladder {:.2} > {:.2} > {:.2} over 20 \
         half-odd points, {dt:?}",
        d_small.residual, d_full.residual, rms[0], rms[1], rms[2]
    );
}

/// Criterion 9, the optional long-running boundary check: the inequality
/// fails at x = 38 358 837 682 (sieve to 3.84e10; tens of minutes).
#[test]
#[ignore = "long-running: sieves to 3.84e10 (tens of minutes); run explicitly"]
fn acceptance_9_boundary_spot_check() {
    let start = Instant::now();
    let x = 38_358_837_682u64;
    let tables = build_sieve(x + 10).unwrap();
    let sc = ramanujan::inequality_spot_check(x, &tables).unwrap();
    assert_eq!(
        sc.verdict,
        ramanujan::SpotCheckVerdict::Fails,
        "expected the boundary failure at {x}: {sc:?}"
    );
    println!(
        "acceptance 9 (boundary spot check): PASS - inequality fails at x = {x} \
         (pi = {}, pi(x/e) = {}), {:?}",
        sc.pi_x,
        sc.pi_x_over_e,
        start.elapsed()
    );
}

/// The residual diagnostic is meaningful only because psi is exact here;
/// cross-check one value against an independently summed reference.
#[test]
fn psi_at_1e6_matches_reference() {
    let tables = build_sieve(1_000_200).unwrap();
    let c = tables.chebyshev(1e6 + 0.5).unwrap();
    // reference values from exactly rounded summation over the primes
    assert!(
        (c.theta - 998_484.1750256342).abs() < 2e-7,
        "theta = {}",
        c.theta
    );
    assert!((c.psi - 999_586.5974956343).abs() < 2e-7, "psi = {}", c.psi);
    assert_eq!(c.pi, 78_498);
    assert!(c.psi > c.theta);
    let _ = LogScalar::from_f64(c.psi); // representable sanity
    let transfer = (1.0 + 1.47e-7) * 1e3 + 1.78 * 1e2;
    assert!(c.psi - c.theta <= transfer);
}

#[test]
fn e_upper_pair_check_at_thresholds() {
    // supplementary to criterion 5: the staged E(x) bound stays below the
    // closed-form target at the schedule thresholds
    let sched = pi_li::Schedule::from_published();
    let tables = build_sieve(1000).unwrap();
    let i1 = pi_li::i1_plus(&tables).unwrap();
    for k in [2000.0f64, 3000.0, 5000.0, 8000.0, 10000.0] {
        let e = pi_li::e_upper(k + 0.1, &sched, i1).unwrap();
        let rhs_ln = k + 0.52 * k.ln() - 0.8 * k.sqrt() + (1.001f64 * 235.0).ln();
        let rhs = LogScalar::from_ln(rhs_ln).nudge(Direction::Lower);
        assert!(
            e.cmp_value(&rhs) != std::cmp::Ordering::Greater,
            "pair check fails at k = {k}"
        );
    }
    println!("pair check: PASS at thresholds 2000..10000");
}
