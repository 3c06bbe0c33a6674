//! The constant pipeline that turns a zero-free region plus a per-sigma
//! zero-density estimate into rows (X, sigma, A, B, C, eps0) bounding
//! |psi(x) - x| / x for log x >= X.
//!
//! Every factor here is positive, so the assembly is purely multiplicative
//! in log space; nothing on this path is ever computed by subtraction.

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::numerics::{ls_combine, LogScalar};
use crate::zeta::{ZeroDensityTable, ZeroFreeRegion};

/// Published target rows (X, sigma, A, eps0) used by the back-solve and the
/// reproduction tests.
pub const PUBLISHED_TABLE: [(f64, f64, f64, f64); 10] = [
    (1000.0, 0.98, 461.9, 1.20e-5),
    (2000.0, 0.98, 411.4, 8.35e-10),
    (3000.0, 0.98, 379.6, 4.51e-13),
    (4000.0, 0.98, 356.3, 7.33e-16),
    (5000.0, 0.99, 713.0, 9.77e-19),
    (6000.0, 0.99, 611.6, 4.23e-21),
    (7000.0, 0.99, 590.1, 3.09e-23),
    (8000.0, 0.99, 570.5, 3.12e-25),
    (9000.0, 0.99, 552.3, 4.11e-27),
    (10000.0, 0.99, 535.4, 6.78e-29),
];

/// One row of the psi-bound table, with exact (unrounded) internals.
#[derive(Clone, Debug)]
pub struct PintzRow {
    /// the row is valid for log x >= x_threshold
    pub x_threshold: f64,
    pub sigma: f64,
    /// rounded up to 1 decimal
    pub a_rounded: f64,
    /// exact: (5 - 2 sigma)/2
    pub b: f64,
    /// (16 sigma - 10)/3 rounded down to 2 decimals (down weakens, hence
    /// preserves, the bound)
    pub c_rounded: f64,
    /// rounded up to 3 significant figures
    pub eps0_rounded: f64,
    pub exact_a: LogScalar,
    /// the unrounded exponent (16 sigma - 10)/3
    pub exact_exponent: f64,
    pub k: LogScalar,
    pub c3: f64,
    pub c4: f64,
    /// c5 per unit of C2
    pub c5_coeff: f64,
    pub eps0_exact: LogScalar,
}

fn check_sigma_l0(sigma: f64, l0: f64) -> Result<()> {
    if !(0.75..1.0).contains(&sigma) {
        return Err(Error::Domain(format!("sigma {sigma} outside [0.75, 1)")));
    }
    if !(l0 >= 1000.0) {
        return Err(Error::Precondition(format!(
            "log x0 = {l0} < 1000: the 2.0025 N(sigma,T)/T step of the zero sum \
             is only established for log x >= 1000"
        )));
    }
    Ok(())
}

/// k(sigma, x0) = [exp(((10-16 sigma)/3) sqrt(L/R)) (sqrt(L/R))^(5-2 sigma)]^-1
/// with L = log x0. Grows like e^(+1.9 sqrt(L/R)); returned in log space.
pub fn k_factor(sigma: f64, l0: f64, region: &ZeroFreeRegion) -> Result<LogScalar> {
    check_sigma_l0(sigma, l0)?;
    let s = Dd::from_f64(l0).div_f64(region.r()).sqrt();
    let c_ex = (16.0 * sigma - 10.0) / 3.0;
    // ln k = c_ex sqrt(L/R) - ((5 - 2 sigma)/2) ln(L/R)
    let ln_k = s.mul_f64(c_ex).sub(s.ln().mul_f64(5.0 - 2.0 * sigma));
    Ok(LogScalar::from_ln_dd(ln_k))
}

struct Parts {
    k: LogScalar,
    c3: f64,
    c4: f64,
    c5_coeff: f64,
}

fn constants_parts(sigma: f64, l0: f64, region: &ZeroFreeRegion) -> Result<Parts> {
    let k = k_factor(sigma, l0, region)?;
    let r = region.r();
    let s = Dd::from_f64(l0).div_f64(r).sqrt();
    let ln_l0 = Dd::from_f64(l0).ln();

    // The three corrections all tend to zero as L0 grows; far along the
    // monotonicity grid they drop below the f64 floor, where saturating to
    // zero only shrinks the (positive) sum A.
    let to_plain = |v: LogScalar| -> f64 {
        let plain = v.to_f64_saturating();
        debug_assert!(plain.is_finite(), "pipeline constants stay bounded");
        plain
    };

    // C3 = 2 exp(-2 sqrt(L/R)) L^2 k
    let c3 = to_plain(ls_combine(&[(
        2.0,
        LogScalar::from_ln_dd(s.mul_f64(-2.0).add(ln_l0.mul_f64(2.0))).mul(k),
    )])?);

    // C4 = e^(L (sigma - 1)) ((2/pi)(L/R) + 1.8642) k
    let bracket = Dd::from_f64(l0)
        .div_f64(r)
        .mul_f64(2.0)
        .div(crate::dd::PI)
        .add_f64(1.8642);
    let c4 = to_plain(
        LogScalar::from_ln_dd(Dd::from_f64(l0).mul_f64(sigma - 1.0).add(bracket.ln())).mul(k),
    );

    // C5 = 8.01 C2 exp(-2 sqrt(L/R)) (L/R) k; stored per unit of C2
    let c5_coeff = to_plain(ls_combine(&[(
        8.01,
        LogScalar::from_ln_dd(s.mul_f64(-2.0).add(ln_l0.sub(Dd::from_f64(r).ln()))).mul(k),
    )])?);

    Ok(Parts {
        k,
        c3,
        c4,
        c5_coeff,
    })
}

/// (C3, C4, C5) at the given sigma row of the density table.
pub fn pintz_constants(
    sigma: f64,
    l0: f64,
    table: &ZeroDensityTable,
    region: &ZeroFreeRegion,
) -> Result<(f64, f64, f64)> {
    let entry = table.entry(sigma)?;
    let p = constants_parts(sigma, l0, region)?;
    Ok((p.c3, p.c4, p.c5_coeff * entry.c2))
}

/// The sigma-row floor 2.0025 * 2^(5-2 sigma) * C1(sigma).
fn a_floor(sigma: f64, c1: f64) -> f64 {
    2.0025 * 2f64.powf(5.0 - 2.0 * sigma) * c1
}

/// A(sigma, x0) = 2.0025 2^(5-2 sigma) C1 + C3 + C4 + C5.
pub fn big_a(
    sigma: f64,
    l0: f64,
    table: &ZeroDensityTable,
    region: &ZeroFreeRegion,
) -> Result<f64> {
    let entry = table.entry(sigma)?;
    let p = constants_parts(sigma, l0, region)?;
    Ok(a_floor(sigma, entry.c1) + p.c3 + p.c4 + p.c5_coeff * entry.c2)
}

/// eps0(sigma, x0) = A (L/R)^((5-2 sigma)/2) exp(((10-16 sigma)/3) sqrt(L/R)),
/// evaluated with the exact exponent. Tiny for large L, hence log-space.
pub fn epsilon0(
    sigma: f64,
    l0: f64,
    table: &ZeroDensityTable,
    region: &ZeroFreeRegion,
) -> Result<LogScalar> {
    let a = big_a(sigma, l0, table, region)?;
    Ok(eps0_from_a(a, sigma, l0, region))
}

fn eps0_from_a(a: f64, sigma: f64, l0: f64, region: &ZeroFreeRegion) -> LogScalar {
    let s = Dd::from_f64(l0).div_f64(region.r()).sqrt();
    let c_ex = (16.0 * sigma - 10.0) / 3.0;
    let b = (5.0 - 2.0 * sigma) / 2.0;
    let ln_eps = Dd::from_f64(a)
        .ln()
        .add(s.ln().mul_f64(2.0 * b)) // (L/R)^B = (sqrt(L/R))^(2B)
        .sub(s.mul_f64(c_ex));
    LogScalar::from_ln_dd(ln_eps)
}

/// Rounds up to one decimal place.
pub fn round_up_1dp(v: f64) -> f64 {
    (v * 10.0).ceil() / 10.0
}

/// Rounds down to two decimal places.
pub fn round_down_2dp(v: f64) -> f64 {
    (v * 100.0).floor() / 100.0
}

/// Rounds a log-space value up to three significant figures, returning
/// (mantissa in [100, 999], decimal exponent) with value = mant * 10^(e-2).
pub fn round_up_3sf_parts(v: &LogScalar) -> (u32, i32) {
    let log_mag = v.log_mag().expect("rounding a nonzero value");
    let l10 = log_mag.div(Dd::from_f64(10.0).ln());
    let mut e = l10.to_f64().floor();
    let frac = l10.sub(Dd::from_f64(e));
    let mant100 = Dd::from_f64(10.0).powf(frac).mul_f64(100.0).to_f64();
    let mut m = (mant100 * (1.0 - 1e-12)).ceil() as u32;
    if m >= 1000 {
        m = 100;
        e += 1.0;
    }
    (m, e as i32)
}

pub fn round_up_3sf(v: &LogScalar) -> f64 {
    if v.is_zero() {
        return 0.0;
    }
    let (m, e) = round_up_3sf_parts(v);
    f64::from(m) * 10f64.powi(e - 2)
}

/// Log-derivatives of C3, C4, C5 with respect to L at fixed sigma; all three
/// nonpositive is the analytic half of the "A decreasing" verification.
fn term_log_derivs(sigma: f64, l: f64, r: f64) -> [f64; 3] {
    let c_ex = (16.0 * sigma - 10.0) / 3.0;
    let b = (5.0 - 2.0 * sigma) / 2.0;
    let sqrt_lr = (l * r).sqrt();
    let dk = c_ex / (2.0 * sqrt_lr) - b / l;
    let d3 = -1.0 / sqrt_lr + 2.0 / l + dk;
    let bracket = 2.0 / std::f64::consts::PI * (l / r) + 1.8642;
    let d4 = (sigma - 1.0) + 2.0 / (std::f64::consts::PI * r * bracket) + dk;
    let d5 = -1.0 / sqrt_lr + 1.0 / l + dk;
    [d3, d4, d5]
}

/// Verifies that A(sigma, x) is decreasing for x > e^X: the log-derivative
/// of each of C3, C4, C5 must be negative at L = X, and A must decrease
/// along a 1000-point geometric grid on [e^X, e^(100 X)].
pub fn verify_a_decreasing(
    sigma: f64,
    x: f64,
    table: &ZeroDensityTable,
    region: &ZeroFreeRegion,
) -> Result<bool> {
    let derivs = term_log_derivs(sigma, x, region.r());
    if derivs.iter().any(|&d| d >= 0.0) {
        return Ok(false);
    }
    let mut prev = f64::INFINITY;
    for i in 0..=1000 {
        let l = x + 99.0 * x * f64::from(i) / 1000.0;
        let a = big_a(sigma, l, table, region)?;
        if a >= prev {
            return Ok(false);
        }
        prev = a;
    }
    Ok(true)
}

/// Builds the table row for threshold X: evaluates eps0 for every candidate
/// sigma, keeps those with A verified decreasing beyond e^X, and picks the
/// minimum.
pub fn make_row(
    x: f64,
    table: &ZeroDensityTable,
    region: &ZeroFreeRegion,
    sigma_candidates: &[f64],
) -> Result<PintzRow> {
    if !(x >= 1000.0) {
        return Err(Error::Precondition(format!("row threshold X = {x} < 1000")));
    }
    let mut best: Option<(f64, LogScalar)> = None;
    for &sigma in sigma_candidates {
        table.entry(sigma)?;
        if !verify_a_decreasing(sigma, x, table, region)? {
            continue;
        }
        let eps = epsilon0(sigma, x, table, region)?;
        let better = match &best {
            None => true,
            Some((_, cur)) => eps.cmp_value(cur) == std::cmp::Ordering::Less,
        };
        if better {
            best = Some((sigma, eps));
        }
    }
    let (sigma, eps0_exact) = best.ok_or_else(|| {
        Error::Certification(format!(
            "no candidate sigma gives decreasing A for x > e^{x}"
        ))
    })?;

    let entry = table.entry(sigma)?;
    let p = constants_parts(sigma, x, region)?;
    let a = a_floor(sigma, entry.c1) + p.c3 + p.c4 + p.c5_coeff * entry.c2;
    let c_ex = (16.0 * sigma - 10.0) / 3.0;
    Ok(PintzRow {
        x_threshold: x,
        sigma,
        a_rounded: round_up_1dp(a),
        b: (5.0 - 2.0 * sigma) / 2.0,
        c_rounded: round_down_2dp(c_ex),
        eps0_rounded: round_up_3sf(&eps0_exact),
        exact_a: LogScalar::from_f64(a),
        exact_exponent: c_ex,
        k: p.k,
        c3: p.c3,
        c4: p.c4,
        c5_coeff: p.c5_coeff,
        eps0_exact,
    })
}

/// The theta-function variant: A1 = A + 0.1 transfers the row to
/// |theta(x) - x| / x (the psi - theta gap is far below the 0.1 at these
/// thresholds).
pub fn theta_variant(row: &PintzRow) -> f64 {
    row.a_rounded + 0.1
}

#[derive(Clone, Debug)]
pub struct BacksolvedRow {
    pub x_threshold: f64,
    pub sigma: f64,
    pub c1: f64,
}

#[derive(Clone, Debug)]
pub struct SigmaConsistency {
    pub sigma: f64,
    pub mean_c1: f64,
    /// (max - min)/mean; infinite when only one row constrains the sigma
    pub spread: f64,
    pub consistent: bool,
}

#[derive(Clone, Debug)]
pub struct BacksolveReport {
    pub rows: Vec<BacksolvedRow>,
    pub per_sigma: Vec<SigmaConsistency>,
}

/// Recovers the effective C1(sigma) from published (X, sigma, A) targets
/// under an assumed C2. Rows sharing a sigma must agree within 1%; the
/// spread is the mutual-consistency oracle.
pub fn backsolve_density(
    targets: &[(f64, f64, f64)],
    assumed_c2: f64,
    region: &ZeroFreeRegion,
) -> Result<BacksolveReport> {
    if targets.is_empty() {
        return Err(Error::Precondition(
            "back-solve needs at least one row".into(),
        ));
    }
    let mut rows = Vec::with_capacity(targets.len());
    for &(x, sigma, a_pub) in targets {
        let p = constants_parts(sigma, x, region)?;
        let c1 = (a_pub - p.c3 - p.c4 - p.c5_coeff * assumed_c2)
            / (2.0025 * 2f64.powf(5.0 - 2.0 * sigma));
        if !(c1 > 0.0) {
            return Err(Error::Certification(format!(
                "back-solve at X = {x} gives non-positive C1 = {c1}"
            )));
        }
        rows.push(BacksolvedRow {
            x_threshold: x,
            sigma,
            c1,
        });
    }
    let mut sigmas: Vec<f64> = rows.iter().map(|r| r.sigma).collect();
    sigmas.sort_by(f64::total_cmp);
    sigmas.dedup();
    let mut per_sigma = Vec::new();
    for sigma in sigmas {
        let vals: Vec<f64> = rows
            .iter()
            .filter(|r| r.sigma == sigma)
            .map(|r| r.c1)
            .collect();
        let mean = vals.iter().sum::<f64>() / vals.len() as f64;
        let spread = if vals.len() < 2 {
            f64::INFINITY
        } else {
            let max = vals.iter().cloned().fold(f64::MIN, f64::max);
            let min = vals.iter().cloned().fold(f64::MAX, f64::min);
            (max - min) / mean
        };
        per_sigma.push(SigmaConsistency {
            sigma,
            mean_c1: mean,
            spread,
            consistent: spread <= 0.01,
        });
    }
    Ok(BacksolveReport { rows, per_sigma })
}
