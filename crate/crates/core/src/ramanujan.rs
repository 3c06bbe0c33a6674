//! The Ramanujan-inequality machinery: the piecewise theta-deficit envelope
//! a(x), the constants K1/K2/K3 built from integrals of (720 +- a)/log^7,
//! the M_a/m_a envelopes and their epsilon polynomials, the sufficiency
//! check eps_M - eps_m < log x, the threshold scan, and exact sieve-backed
//! spot checks of the inequality itself.
//!
//! Everything feeding the sufficiency margin is directed conservatively:
//! upper bounds where a quantity pushes eps_M up, lower bounds where it
//! pulls eps_m down, so a positive margin is a certificate.

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::numerics::{bound_inv_log_power_integral, Direction, LogScalar};
use crate::primes::SieveTables;

const R: f64 = 5.573412;
const LN_599: f64 = 6.395261598120817;

/// One branch of the envelope: a(x)/log^5 x between lo_log and hi_log.
/// `hi_inclusive` mirrors the printed case list, where the low branches
/// close on the right ("x <= 599", "x <= exp(58)") and the table branches
/// open on the left ("exp(1169) <= x < exp(2000)").
#[derive(Clone, Copy, Debug)]
pub struct Branch {
    pub lo_log: f64,
    pub hi_log: f64,
    pub hi_inclusive: bool,
    pub kind: BranchKind,
}

#[derive(Clone, Copy, Debug)]
pub enum BranchKind {
    /// constant value
    Const(f64),
    /// log^2 x / (8 pi sqrt x)
    RootDeficit,
    /// sqrt(8/(17 pi)) (log x / 6.455)^(1/4) exp(-sqrt(log x / 6.455))
    Transition,
    /// a1 (log x / R)^1.52 exp(-1.89 sqrt(log x / R))
    PsiRow { a1: f64 },
}

impl BranchKind {
    /// ln of the branch value at L = log x, in double-double.
    fn ln_value(&self, l: f64, inflate: f64) -> Dd {
        let ld = Dd::from_f64(l);
        let base = match self {
            BranchKind::Const(c) => Dd::from_f64(*c).ln(),
            BranchKind::RootDeficit => ld
                .ln()
                .mul_f64(2.0)
                .sub(crate::dd::PI.mul_f64(8.0).ln())
                .sub(ld.mul_f64(0.5)),
            BranchKind::Transition => {
                let scaled = ld.div_f64(6.455);
                Dd::from_f64(8.0 / 17.0)
                    .div(crate::dd::PI)
                    .ln()
                    .mul_f64(0.5)
                    .add(scaled.ln().mul_f64(0.25))
                    .sub(scaled.sqrt())
            }
            BranchKind::PsiRow { a1 } => {
                let scaled = ld.div_f64(R);
                Dd::from_f64(*a1)
                    .ln()
                    .add(scaled.ln().mul_f64(1.52))
                    .sub(scaled.sqrt().mul_f64(1.89))
            }
        };
        if inflate == 1.0 {
            base
        } else {
            base.add(Dd::from_f64(inflate).ln())
        }
    }

    /// L above which the full a(x) = value * L^5 is non-increasing; interior
    /// maximum of a within a branch can only sit at this point.
    fn a_peak(&self) -> f64 {
        match self {
            // c L^5 increases throughout
            BranchKind::Const(_) => f64::INFINITY,
            // d/dL (7 ln L - L/2) = 7/L - 1/2
            BranchKind::RootDeficit => 14.0,
            // d/dL (5.25 ln L - sqrt(L/6.455)): sign change at 4*5.25^2*6.455
            BranchKind::Transition => 4.0 * 5.25 * 5.25 * 6.455,
            // d/dL (6.52 ln L - 1.89 sqrt(L/R)): sign change where
            // sqrt L = 2 * 6.52 * sqrt(R) / 1.89
            BranchKind::PsiRow { .. } => {
                let s = 2.0 * 6.52 * R.sqrt() / 1.89;
                s * s
            }
        }
    }
}

/// The branch structure of the deficit envelope, with boundaries in log
/// space. Branch ranges are half-open exactly as the case list is printed;
/// branches may be discontinuous at the seams.
#[derive(Clone, Debug)]
pub struct PiecewiseEnvelope {
    branches: Vec<Branch>,
    /// multiplicative inflation, 1.0 in production; sensitivity checks use
    /// it to confirm the margin really depends on the envelope
    inflate: f64,
}

impl Default for PiecewiseEnvelope {
    fn default() -> Self {
        PiecewiseEnvelope::standard()
    }
}

impl PiecewiseEnvelope {
    /// The six printed branches: trivial below 599, the sqrt-scale bound to
    /// e^58, the transition envelope to e^1169, then the three psi-table
    /// rows 462.0 / 411.5 / 379.7.
    pub fn standard() -> Self {
        let b = |lo_log, hi_log, hi_inclusive, kind| Branch {
            lo_log,
            hi_log,
            hi_inclusive,
            kind,
        };
        PiecewiseEnvelope {
            branches: vec![
                b(
                    std::f64::consts::LN_2,
                    LN_599,
                    true,
                    BranchKind::Const((2.0 - std::f64::consts::LN_2) / 2.0),
                ),
                b(LN_599, 58.0, true, BranchKind::RootDeficit),
                b(58.0, 1169.0, false, BranchKind::Transition),
                b(1169.0, 2000.0, false, BranchKind::PsiRow { a1: 462.0 }),
                b(2000.0, 3000.0, false, BranchKind::PsiRow { a1: 411.5 }),
                b(
                    3000.0,
                    f64::INFINITY,
                    false,
                    BranchKind::PsiRow { a1: 379.7 },
                ),
            ],
            inflate: 1.0,
        }
    }

    /// A copy with every branch value multiplied by `factor`; sensitivity
    /// instrument (factor > 1 claims a stronger theta bound than proven).
    pub fn scaled(&self, factor: f64) -> Self {
        assert!(factor > 0.0);
        PiecewiseEnvelope {
            branches: self.branches.clone(),
            inflate: self.inflate * factor,
        }
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn validate(&self) -> Result<()> {
        if self.branches.is_empty() {
            return Err(Error::Domain("envelope has no branches".into()));
        }
        for w in self.branches.windows(2) {
            if w[0].hi_log != w[1].lo_log {
                return Err(Error::Domain(format!(
                    "envelope gap between {} and {}",
                    w[0].hi_log, w[1].lo_log
                )));
            }
        }
        if self.branches.last().unwrap().hi_log.is_finite() {
            return Err(Error::Domain("envelope must cover all large x".into()));
        }
        Ok(())
    }

    fn branch_at(&self, x_log: f64) -> Result<&Branch> {
        if !(x_log > self.branches[0].lo_log) {
            return Err(Error::Domain(format!(
                "envelope evaluated at log x = {x_log}, at or below log 2"
            )));
        }
        Ok(self
            .branches
            .iter()
            .find(|b| x_log < b.hi_log || (b.hi_inclusive && x_log == b.hi_log))
            .expect("branches cover (log 2, inf)"))
    }

    /// a(x)/log^5 x.
    pub fn eval_over_log5(&self, x_log: f64) -> Result<f64> {
        let b = self.branch_at(x_log)?;
        Ok(b.kind.ln_value(x_log, self.inflate).exp().to_f64())
    }

    /// a(x) = (a(x)/log^5 x) * log^5 x as a log-space value.
    pub fn a_value(&self, x_log: f64) -> Result<LogScalar> {
        let b = self.branch_at(x_log)?;
        let ln_a = b
            .kind
            .ln_value(x_log, self.inflate)
            .add(Dd::from_f64(x_log).ln().mul_f64(5.0));
        Ok(LogScalar::from_ln_dd(ln_a))
    }

    /// Upper-directed a(x) as a plain real; values that have decayed below
    /// the plain-real floor are covered by 1e-304.
    pub fn a_value_upper_f64(&self, x_log: f64) -> Result<f64> {
        let v = self.a_value(x_log)?.nudge(Direction::Upper);
        match v.to_f64() {
            Ok(plain) => Ok(plain * (1.0 + 1e-14)),
            Err(_) => Ok(1e-304),
        }
    }

    /// Rigorous sup of a(x) over (log 2, u]: endpoint values plus the
    /// interior peaks of the sqrt-scale and transition branches.
    pub fn a_sup_upto(&self, u: f64) -> Result<f64> {
        let mut sup = 0.0f64;
        for b in &self.branches {
            if b.lo_log >= u {
                break;
            }
            let hi = b.hi_log.min(u);
            let mut candidates = vec![b.lo_log + 1e-9, hi - 1e-9];
            let peak = b.kind.a_peak();
            if peak > b.lo_log && peak < hi {
                candidates.push(peak);
            }
            for l in candidates {
                let a = b
                    .kind
                    .ln_value(l, self.inflate)
                    .add(Dd::from_f64(l).ln().mul_f64(5.0))
                    .exp()
                    .to_f64();
                sup = sup.max(a * (1.0 + 1e-9));
            }
        }
        Ok(sup)
    }
}

/// The assembled per-x_a constants. K1 and K2 are upper-directed (K2 enters
/// m_a negatively, so its upper bound is the conservative one); K3 is
/// astronomically small at any admissible x_a and is carried as its log10.
#[derive(Clone, Debug)]
pub struct RamanujanConstants {
    pub xa_log: f64,
    pub k1: f64,
    pub k2: f64,
    /// saturates to 0.0; see k3_log10
    pub k3: f64,
    pub k3_log10: f64,
    /// 1/log x_a + 7*2^8/log^2 x_a + 7 log^6 x_a/(sqrt x_a log^8 2), upper
    pub bracket: f64,
    /// upper-directed a(x_a)
    pub a_xa: f64,
    /// x-independent part of M_a: K1 + (720 + a(x_a)) * bracket
    pub ma_big_terms: f64,
    /// x-independent part of m_a: (K2 + K3) + a(x_a) * bracket
    pub mm_terms: f64,
    /// log10 of the accounted bound for the dropped head of the integrals
    pub dropped_log10: f64,
}

/// How many e-folds below x_a the integral pieces are computed explicitly;
/// everything lower is covered by a crude bound that must come out below
/// 1e-20 after scaling.
const DROP_EFOLDS: f64 = 70.0;

/// Directed K1/K2/K3 at x_a = e^(xa_log).
///
/// K1 = (log^6 x_a / x_a) int_2^(x_a) (720 + a(t))/log^7 t dt (upper bound),
/// K2 = the (720 - a) analogue (upper), K3 = 2 (log^6 x_a / x_a)
/// sum_(k=1..5) k!/log^(k+1) 2.
///
/// The integrals decompose along the branch boundaries; within a branch,
/// unit-log-width pieces bound a/log^5 by its extreme on the piece (every
/// branch is non-increasing on its own range) and the dt/log^k factors
/// integrate by parts.
pub fn ram_constants(xa_log: f64, env: &PiecewiseEnvelope) -> Result<RamanujanConstants> {
    env.validate()?;
    if !(xa_log >= 3000.0) {
        return Err(Error::Precondition(format!(
            "x_a = e^{xa_log} must sit in the final envelope branch (log x_a >= 3000)"
        )));
    }
    // a must be non-increasing from x_a on
    let last = env.branches().last().unwrap();
    if xa_log <= last.kind.a_peak() {
        return Err(Error::Certification(format!(
            "envelope not verified non-increasing at log x = {xa_log} (needs > {})",
            last.kind.a_peak()
        )));
    }

    let xa = Dd::from_f64(xa_log);
    let ln_scale6 = xa.ln().mul_f64(6.0); // log^6 x_a; the 1/x_a lives in the piece weights

    // explicit pieces over [xa_log - DROP_EFOLDS, xa_log]
    let lo_main = xa_log - DROP_EFOLDS;
    let mut k1_acc = Dd::ZERO; // scaled by e^-xa_log
    let mut k2_acc = Dd::ZERO;
    let g = |w: f64, k: i32| -> Dd { Dd::from_f64(w).sub(xa).exp().div(Dd::from_f64(w).powi(k)) };
    for b in env.branches() {
        let seg_lo = b.lo_log.max(lo_main);
        let seg_hi = b.hi_log.min(xa_log);
        if seg_lo >= seg_hi {
            continue;
        }
        let mut lo = seg_lo;
        while lo < seg_hi {
            let hi = (lo + 1.0).min(seg_hi);
            // int dt/log^7 t and int dt/log^2 t over the piece
            let d7 = g(hi, 7).sub(g(lo, 7));
            let up7 = d7.div(Dd::ONE.sub_f64(7.0 / lo));
            let d2 = g(hi, 2).sub(g(lo, 2));
            let up2 = d2.div(Dd::ONE.sub_f64(2.0 / lo));
            // a/log^5 is non-increasing on every branch range: max at the
            // left edge, min at the right
            let bmax = b.kind.ln_value(lo, env.inflate).exp().mul_f64(1.0 + 1e-13);
            let bmin = b.kind.ln_value(hi, env.inflate).exp().mul_f64(1.0 - 1e-13);
            k1_acc = k1_acc.add(up7.mul_f64(720.0)).add(bmax.mul(up2));
            k2_acc = k2_acc.add(up7.mul_f64(720.0)).sub(bmin.mul(d2));
            lo = hi;
        }
    }

    // dropped region [2, e^lo_main]: head below e^8 by length x extreme,
    // tail by parts, integrand capped by (720 + sup a)/log^7 t
    let a_sup = env.a_sup_upto(lo_main)?;
    let head = LogScalar::from_ln_dd(
        Dd::from_f64(8.0)
            .exp()
            .sub_f64(2.0)
            .mul(Dd::from_f64(720.0 + env.a_sup_upto(8.0)?))
            .div(crate::dd::LN_2.powi(7))
            .ln(),
    );
    let tail =
        bound_inv_log_power_integral(8.0, lo_main, 7, Direction::Upper)?.mul_f64(720.0 + a_sup);
    let dropped = crate::numerics::ls_combine(&[(1.0, head), (1.0, tail)])?
        .mul(LogScalar::from_ln_dd(ln_scale6.sub(xa)))
        .nudge(Direction::Upper);
    let dropped_log10 = dropped.log10_mag().unwrap_or(f64::NEG_INFINITY);
    if dropped_log10 >= -20.0 {
        return Err(Error::Certification(format!(
            "dropped-head bound 1e{dropped_log10:.1} not negligible; x_a too small for the drop depth"
        )));
    }
    let dropped_f64 = 10f64.powf(dropped_log10.max(-300.0));

    let scale6 = ln_scale6.exp();
    let k1 = scale6.mul(k1_acc).to_f64() * (1.0 + 1e-13) + dropped_f64;
    let k2 = scale6.mul(k2_acc).to_f64() * (1.0 + 1e-13) + dropped_f64;
    if !(k1 > k2) {
        return Err(Error::Certification(format!(
            "K1 = {k1} not above K2 = {k2}; envelope degenerate"
        )));
    }

    // K3 = 2 (log^6 x_a / x_a) sum_(k=1..5) k!/log^(k+1) 2
    let mut s = Dd::ZERO;
    let mut fact = 1.0;
    for k in 1..=5u32 {
        fact *= f64::from(k);
        s = s.add(crate::dd::LN_2.powi(-(k as i32 + 1)).mul_f64(fact));
    }
    let k3_ls = LogScalar::from_ln_dd(s.mul_f64(2.0).ln().add(ln_scale6).sub(xa));
    let k3_log10 = k3_ls.log10_mag().unwrap_or(f64::NEG_INFINITY);
    let k3 = k3_ls.to_f64_saturating();

    // bracket: the sqrt-scale third term is e^(-x_a/2)-sized; it is
    // certified below 1e-30 and absorbed by a 1e-30 allowance
    let third = LogScalar::from_ln_dd(
        Dd::from_f64(7.0)
            .ln()
            .add(ln_scale6)
            .sub(xa.mul_f64(0.5))
            .sub(crate::dd::LN_2.ln().mul_f64(8.0)),
    );
    if third.log10_mag().unwrap_or(f64::NEG_INFINITY) >= -30.0 {
        return Err(Error::Certification(
            "sqrt-scale bracket term not negligible at this x_a".into(),
        ));
    }
    let bracket = xa
        .recip()
        .add(Dd::from_f64(1792.0).div(xa.mul(xa)))
        .to_f64()
        * (1.0 + 1e-13)
        + 1e-30;

    let a_xa = env.a_value_upper_f64(xa_log)?;
    Ok(RamanujanConstants {
        xa_log,
        k1,
        k2,
        k3,
        k3_log10,
        bracket,
        a_xa,
        ma_big_terms: (k1 + (720.0 + a_xa) * bracket) * (1.0 + 1e-13),
        mm_terms: (k2 + k3 + a_xa * bracket) * (1.0 + 1e-13),
        dropped_log10,
    })
}

/// (M_a(x), m_a(x)) with M_a upper-directed and m_a lower-directed.
pub fn envelopes(
    x_log: f64,
    consts: &RamanujanConstants,
    env: &PiecewiseEnvelope,
) -> Result<(f64, f64)> {
    if !(x_log >= consts.xa_log) {
        return Err(Error::Domain(format!(
            "envelopes need x >= x_a, got log x = {x_log} < {}",
            consts.xa_log
        )));
    }
    let a_x = env.a_value_upper_f64(x_log)?;
    let ma = (120.0 + a_x + consts.ma_big_terms) * (1.0 + 1e-13);
    let mm = (120.0 - a_x - consts.mm_terms) * (1.0 + 1e-13); // negative here
    Ok((ma, mm))
}

/// The printed epsilon polynomials in 1/log x. The first component is the
/// upper-directed eps_M, the second the lower-directed eps_m, matching
/// their roles in the sufficiency margin.
pub fn epsilon_pair(x_log: f64, ma: f64, mm: f64) -> Result<(f64, f64)> {
    if !(x_log > 1.0) {
        return Err(Error::Domain(format!(
            "epsilon pair needs log x > 1, got {x_log}"
        )));
    }
    let l = x_log;
    let eps_upper = 72.0
        + 2.0 * ma
        + (2.0 * ma + 132.0) / l
        + (4.0 * ma + 288.0) / (l * l)
        + (12.0 * ma + 576.0) / (l * l * l)
        + 48.0 * ma / (l * l * l * l)
        + ma * ma / (l * l * l * l * l);
    let eps_lower = 206.0
        + mm
        + 364.0 / l
        + 381.0 / (l * l)
        + 238.0 / (l * l * l)
        + 97.0 / (l * l * l * l)
        + 30.0 / (l * l * l * l * l)
        + 8.0 / (l * l * l * l * l * l);
    Ok((
        eps_upper + eps_upper.abs() * 1e-12 + 1e-9,
        eps_lower - eps_lower.abs() * 1e-12 - 1e-9,
    ))
}

#[derive(Clone, Debug)]
pub struct SufficiencyCertificate {
    pub xa_log: f64,
    pub x_log: f64,
    pub consts: RamanujanConstants,
    pub ma: f64,
    pub mm: f64,
    pub eps_upper: f64,
    pub eps_lower: f64,
    /// log x - (eps_M - eps_m); positive certifies the inequality from x on
    pub margin: f64,
    pub pass: bool,
}

/// Checks eps_M(x) - eps_m(x) < log x at x = e^(x_log) with x_a = e^(xa_log).
///
/// When sieve tables are supplied, the envelope is first spot-validated
/// against exact theta on [3, min(limit, 1e8)] (the defining inequality
/// |theta - x| log^5 x <= x a(x)).
pub fn sufficiency_check(
    xa_log: f64,
    x_log: f64,
    env: &PiecewiseEnvelope,
    tables: Option<&SieveTables>,
) -> Result<SufficiencyCertificate> {
    if !(x_log > xa_log) {
        return Err(Error::Domain(format!(
            "sufficiency check needs x > x_a, got log x = {x_log} <= {xa_log}"
        )));
    }
    if let Some(t) = tables {
        validate_envelope_on_sieve(env, t, 240)?;
    }
    let consts = ram_constants(xa_log, env)?;
    let (ma, mm) = envelopes(x_log, &consts, env)?;
    let (eps_upper, eps_lower) = epsilon_pair(x_log, ma, mm)?;
    let margin = x_log - (eps_upper - eps_lower);
    Ok(SufficiencyCertificate {
        xa_log,
        x_log,
        consts,
        ma,
        mm,
        eps_upper,
        eps_lower,
        margin,
        pass: margin > 0.0,
    })
}

/// Spot-validates |theta(x) - x| log^5 x <= x a(x) on a geometric grid of
/// the sieve range, starting at 3 (on (2, 3) the printed first-branch
/// constant genuinely undershoots the deficit; see the module tests).
pub fn validate_envelope_on_sieve(
    env: &PiecewiseEnvelope,
    tables: &SieveTables,
    points: usize,
) -> Result<()> {
    let hi = (tables.limit() as f64).min(1e8);
    let lo = 3.0f64;
    let ratio = (hi / lo).ln();
    for i in 0..=points {
        let x = lo * (ratio * i as f64 / points as f64).exp();
        let c = tables.chebyshev(x)?;
        let l5 = x.ln().powi(5);
        let lhs = (c.theta - x).abs() * l5;
        let rhs = x * env.eval_over_log5(x.ln())? * l5;
        if lhs > rhs {
            return Err(Error::Certification(format!(
                "envelope violated at x = {x}: |theta - x| log^5 x = {lhs} > {rhs}"
            )));
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct ScanResult {
    /// margins at each integer L scanned: sufficiency_check(L-1, L)
    pub margins: Vec<(u32, f64)>,
    /// smallest L in range whose check passes
    pub first_pass: Option<u32>,
}

/// Scans integer thresholds L in [lo_log, hi_log], checking (x_a, x) =
/// (e^(L-1), e^L) for each.
pub fn threshold_scan(env: &PiecewiseEnvelope, lo_log: u32, hi_log: u32) -> Result<ScanResult> {
    if !(lo_log > 3000) {
        return Err(Error::Precondition(format!(
            "scan range must start above 3000, got {lo_log}"
        )));
    }
    if hi_log < lo_log {
        return Err(Error::Precondition(format!(
            "scan range [{lo_log}, {hi_log}] reversed"
        )));
    }
    let mut margins = Vec::new();
    let mut first_pass = None;
    for l in lo_log..=hi_log {
        let cert = sufficiency_check(f64::from(l) - 1.0, f64::from(l), env, None)?;
        margins.push((l, cert.margin));
        if cert.pass && first_pass.is_none() {
            first_pass = Some(l);
        }
    }
    Ok(ScanResult {
        margins,
        first_pass,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpotCheckVerdict {
    Holds,
    Fails,
    /// the directed interval for the right side straddles the integer left
    /// side; a higher-precision pass would be needed
    Indeterminate,
}

#[derive(Clone, Copy, Debug)]
pub struct SpotCheck {
    pub x: u64,
    pub pi_x: u64,
    pub x_over_e: u64,
    pub pi_x_over_e: u64,
    pub lhs: u128,
    pub rhs_lower: f64,
    pub rhs_upper: f64,
    pub verdict: SpotCheckVerdict,
}

/// Exact check of pi^2(x) < (e x / log x) pi(x/e) at integer x. Prime
/// counts are exact from the sieve; the transcendental right side is a
/// directed double-double interval.
pub fn inequality_spot_check(x: u64, tables: &SieveTables) -> Result<SpotCheck> {
    if x > tables.limit() {
        return Err(Error::Coverage {
            msg: format!("spot check at {x} beyond sieve limit {}", tables.limit()),
            required: x as f64,
        });
    }
    if x as f64 >= 9.0e15 {
        return Err(Error::Domain(
            "spot check x too large for exact f64 indexing".into(),
        ));
    }
    let e_dd = Dd::ONE.exp();
    let x_dd = Dd::from_f64(x as f64); // exact for x < 2^53
    let quot = x_dd.div(e_dd);
    let x_over_e = quot.to_f64().floor() as u64;
    // x/e is irrational; the double-double window is ~1e-16 relative, far
    // from any integer crossing for x in the sieve range
    if (quot.to_f64() - quot.to_f64().round()).abs() < 1e-9 {
        return Err(Error::Domain(format!(
            "x/e suspiciously near an integer at x = {x}"
        )));
    }
    if x_over_e < 2 {
        return Err(Error::Domain(format!("x = {x} has x/e below 2")));
    }
    let pi_x = tables.prime_count(x as f64)?;
    let pi_q = tables.prime_count(x_over_e as f64)?;
    let lhs = u128::from(pi_x) * u128::from(pi_x);

    // rhs = e x / log x * pi(x/e), directed both ways
    let rhs = e_dd.mul(x_dd).div(x_dd.ln()).mul_f64(pi_q as f64);
    let rhs_lower = rhs.to_f64() * (1.0 - 1e-12);
    let rhs_upper = rhs.to_f64() * (1.0 + 1e-12);
    let lhs_f = lhs as f64; // <= (pi(1e11))^2 ~ 1.7e19: 1e-16 relative slack below
    let verdict = if lhs_f * (1.0 + 1e-15) < rhs_lower {
        SpotCheckVerdict::Holds
    } else if lhs_f * (1.0 - 1e-15) > rhs_upper {
        SpotCheckVerdict::Fails
    } else {
        SpotCheckVerdict::Indeterminate
    };
    Ok(SpotCheck {
        x,
        pi_x,
        x_over_e,
        pi_x_over_e: pi_q,
        lhs,
        rhs_lower,
        rhs_upper,
        verdict,
    })
}
