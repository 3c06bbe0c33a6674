//! Signed log-domain scalars.
//!
//! Quantities like e^3914 or 10^-441 appear throughout the bound pipeline;
//! they exist here only as a sign plus the natural log of the absolute value,
//! stored to double-double precision. Anything whose log magnitude exceeds
//! +-700 must never be converted to a plain `f64` (see [`LogScalar::to_f64`]).

use crate::dd::Dd;
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// Threshold beyond which a value exists only in log space.
pub const PLAIN_REAL_LOG_LIMIT: f64 = 700.0;

/// Hard cap on the log magnitude itself.
pub const LOG_MAG_LIMIT: f64 = 1e300;

/// Relative cancellation threshold for [`ls_combine`].
const CANCELLATION_FLOOR: f64 = 1e-10;

/// Outward nudge, in log space, applied by the `*_dir` operations. One
/// double-double operation is good to ~1e-30 relative; 1e-26 per operation
/// dominates that with room to spare while staying far below every tolerance
/// in the crate.
const DIR_NUDGE: f64 = 1e-26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// Rounding direction for certified operations: `Upper` means the computed
/// result must be >= the exact one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Lower,
    Upper,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Lower => Direction::Upper,
            Direction::Upper => Direction::Lower,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct LogScalar {
    sign: Sign,
    /// ln |value|; meaningless when `sign == Zero` (kept at zero there).
    log_mag: Dd,
}

impl LogScalar {
    pub const ZERO: LogScalar = LogScalar {
        sign: Sign::Zero,
        log_mag: Dd::ZERO,
    };

    /// Positive value from its natural log.
    pub fn from_ln(ln: f64) -> LogScalar {
        LogScalar {
            sign: Sign::Positive,
            log_mag: Dd::from_f64(ln),
        }
    }

    pub fn from_ln_dd(ln: Dd) -> LogScalar {
        LogScalar {
            sign: Sign::Positive,
            log_mag: ln,
        }
    }

    pub fn from_sign_ln_dd(sign: Sign, ln: Dd) -> LogScalar {
        if sign == Sign::Zero {
            LogScalar::ZERO
        } else {
            LogScalar { sign, log_mag: ln }
        }
    }

    pub fn from_f64(v: f64) -> LogScalar {
        assert!(v.is_finite(), "LogScalar::from_f64 needs a finite value");
        if v == 0.0 {
            LogScalar::ZERO
        } else {
            LogScalar {
                sign: if v > 0.0 {
                    Sign::Positive
                } else {
                    Sign::Negative
                },
                log_mag: Dd::from_f64(v.abs()).ln(),
            }
        }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn is_zero(&self) -> bool {
        self.sign == Sign::Zero
    }

    pub fn is_positive(&self) -> bool {
        self.sign == Sign::Positive
    }

    /// ln |value|, if nonzero.
    pub fn log_mag(&self) -> Option<Dd> {
        match self.sign {
            Sign::Zero => None,
            _ => Some(self.log_mag),
        }
    }

    /// Conversion to a plain real. Values whose log magnitude exceeds 700
    /// exist only in log space; converting them is an error, not a rounding.
    pub fn to_f64(&self) -> Result<f64> {
        match self.sign {
            Sign::Zero => Ok(0.0),
            _ => {
                let lm = self.log_mag.to_f64();
                if lm.abs() > PLAIN_REAL_LOG_LIMIT {
                    return Err(Error::Unrepresentable(lm));
                }
                let mag = self.log_mag.exp().to_f64();
                Ok(if self.sign == Sign::Positive {
                    mag
                } else {
                    -mag
                })
            }
        }
    }

    /// Conversion for display paths only: underflows to signed zero and
    /// overflows to signed infinity instead of erroring.
    pub fn to_f64_saturating(&self) -> f64 {
        match self.to_f64() {
            Ok(v) => v,
            Err(_) => {
                let lm = self.log_mag.to_f64();
                let mag = if lm > 0.0 { f64::INFINITY } else { 0.0 };
                if self.sign == Sign::Negative {
                    -mag
                } else {
                    mag
                }
            }
        }
    }

    /// log10 of |value|, for reporting.
    pub fn log10_mag(&self) -> Option<f64> {
        self.log_mag().map(|l| l.to_f64() / std::f64::consts::LN_10)
    }

    pub fn neg(self) -> LogScalar {
        LogScalar {
            sign: self.sign.flip(),
            log_mag: self.log_mag,
        }
    }

    pub fn abs(self) -> LogScalar {
        LogScalar {
            sign: if self.sign == Sign::Zero {
                Sign::Zero
            } else {
                Sign::Positive
            },
            log_mag: self.log_mag,
        }
    }

    pub fn mul(self, rhs: LogScalar) -> LogScalar {
        if self.is_zero() || rhs.is_zero() {
            return LogScalar::ZERO;
        }
        let sign = if self.sign == rhs.sign {
            Sign::Positive
        } else {
            Sign::Negative
        };
        LogScalar {
            sign,
            log_mag: self.log_mag.add(rhs.log_mag),
        }
    }

    pub fn div(self, rhs: LogScalar) -> LogScalar {
        assert!(!rhs.is_zero(), "division of LogScalar by zero");
        if self.is_zero() {
            return LogScalar::ZERO;
        }
        let sign = if self.sign == rhs.sign {
            Sign::Positive
        } else {
            Sign::Negative
        };
        LogScalar {
            sign,
            log_mag: self.log_mag.sub(rhs.log_mag),
        }
    }

    pub fn mul_f64(self, c: f64) -> LogScalar {
        self.mul(LogScalar::from_f64(c))
    }

    /// Integer power (sign tracked).
    pub fn powi(self, n: i32) -> LogScalar {
        if self.is_zero() {
            assert!(n > 0, "0^n needs n > 0");
            return LogScalar::ZERO;
        }
        let sign = if self.sign == Sign::Negative && n % 2 != 0 {
            Sign::Negative
        } else {
            Sign::Positive
        };
        LogScalar {
            sign,
            log_mag: self.log_mag.mul_f64(f64::from(n)),
        }
    }

    /// Real power of a nonnegative value.
    pub fn powf(self, p: f64) -> LogScalar {
        match self.sign {
            Sign::Zero => {
                assert!(p > 0.0, "0^p needs p > 0");
                LogScalar::ZERO
            }
            Sign::Positive => LogScalar {
                sign: Sign::Positive,
                log_mag: self.log_mag.mul_f64(p),
            },
            Sign::Negative => panic!("real power of a negative LogScalar"),
        }
    }

    /// Value-directed outward nudge: `Upper` moves the represented value up,
    /// `Lower` moves it down. Used after each certified operation.
    pub fn nudge(self, dir: Direction) -> LogScalar {
        self.nudge_by(dir, DIR_NUDGE)
    }

    pub fn nudge_by(self, dir: Direction, eps: f64) -> LogScalar {
        match self.sign {
            Sign::Zero => self,
            Sign::Positive => {
                let delta = if dir == Direction::Upper { eps } else { -eps };
                LogScalar {
                    sign: self.sign,
                    log_mag: self.log_mag.add_f64(delta),
                }
            }
            Sign::Negative => {
                // larger value = smaller magnitude
                let delta = if dir == Direction::Upper { -eps } else { eps };
                LogScalar {
                    sign: self.sign,
                    log_mag: self.log_mag.add_f64(delta),
                }
            }
        }
    }

    pub fn mul_dir(self, rhs: LogScalar, dir: Direction) -> LogScalar {
        self.mul(rhs).nudge(dir)
    }

    pub fn approx_eq(self, rhs: LogScalar, rel: f64) -> bool {
        match (self.sign, rhs.sign) {
            (Sign::Zero, Sign::Zero) => true,
            (a, b) if a != b => false,
            _ => self.log_mag.sub(rhs.log_mag).abs().to_f64() <= rel,
        }
    }
}

impl PartialEq for LogScalar {
    fn eq(&self, other: &LogScalar) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl LogScalar {
    /// Total order agreeing with the order of the represented reals.
    pub fn cmp_value(&self, other: &LogScalar) -> Ordering {
        match (self.sign, other.sign) {
            (Sign::Zero, Sign::Zero) => Ordering::Equal,
            (Sign::Zero, Sign::Positive)
            | (Sign::Negative, Sign::Zero)
            | (Sign::Negative, Sign::Positive) => Ordering::Less,
            (Sign::Positive, Sign::Zero)
            | (Sign::Zero, Sign::Negative)
            | (Sign::Positive, Sign::Negative) => Ordering::Greater,
            (Sign::Positive, Sign::Positive) => self
                .log_mag
                .partial_cmp(&other.log_mag)
                .expect("log magnitudes are never NaN"),
            (Sign::Negative, Sign::Negative) => other
                .log_mag
                .partial_cmp(&self.log_mag)
                .expect("log magnitudes are never NaN"),
        }
    }
}

impl fmt::Display for LogScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Zero => write!(f, "0"),
            _ => {
                let l10 = self.log_mag.to_f64() / std::f64::consts::LN_10;
                let e = l10.floor();
                let mant = 10f64.powf(l10 - e);
                let s = if self.sign == Sign::Negative { "-" } else { "" };
                write!(f, "{s}{mant:.6}e{e:+}")
            }
        }
    }
}

/// Signed sum of `coefficient * value` terms via log-sum-exp.
///
/// Terms are reduced in a canonical order (descending magnitude), so any
/// permutation of the input yields bit-identical output. Exact cancellation
/// returns zero; near-cancellation below one part in 1e10 is flagged as a
/// loss of precision rather than returned silently.
pub fn ls_combine(terms: &[(f64, LogScalar)]) -> Result<LogScalar> {
    if terms.is_empty() {
        return Err(Error::Precondition(
            "ls_combine needs at least one term".into(),
        ));
    }
    let mut folded: Vec<(Sign, Dd)> = Vec::with_capacity(terms.len());
    for &(c, v) in terms {
        if !c.is_finite() {
            return Err(Error::Precondition(format!("non-finite coefficient {c}")));
        }
        if c == 0.0 || v.is_zero() {
            continue;
        }
        let sign = if (c > 0.0) == (v.sign == Sign::Positive) {
            Sign::Positive
        } else {
            Sign::Negative
        };
        let lm = v.log_mag.add(Dd::from_f64(c.abs()).ln());
        if lm.to_f64().abs() > LOG_MAG_LIMIT {
            return Err(Error::LogRange(lm.to_f64()));
        }
        folded.push((sign, lm));
    }
    if folded.is_empty() {
        return Ok(LogScalar::ZERO);
    }
    // canonical reduction order: descending magnitude, negatives first on ties
    folded.sort_by(|a, b| {
        b.1.partial_cmp(&a.1)
            .expect("log magnitudes are never NaN")
            .then_with(|| a.0.cmp(&b.0))
    });
    let m = folded[0].1;
    let mut acc = Dd::ZERO;
    let mut acc_abs = Dd::ZERO;
    for &(sign, lm) in &folded {
        let term = lm.sub(m).exp();
        acc_abs = acc_abs.add(term);
        acc = if sign == Sign::Positive {
            acc.add(term)
        } else {
            acc.sub(term)
        };
    }
    if acc.is_zero() {
        return Ok(LogScalar::ZERO);
    }
    if acc.abs().div(acc_abs).to_f64() < CANCELLATION_FLOOR {
        return Err(Error::PrecisionLoss {
            remaining: acc.to_f64(),
            total: acc_abs.to_f64(),
        });
    }
    let sign = if acc.to_f64() > 0.0 {
        Sign::Positive
    } else {
        Sign::Negative
    };
    Ok(LogScalar {
        sign,
        log_mag: m.add(acc.abs().ln()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_within_1e12() {
        for &v in &[1.0, -2.5, 3.9e-300, 7.2e250, 5.573412, -1e-9] {
            let ls = LogScalar::from_f64(v);
            let back = ls.to_f64().unwrap();
            assert!(((back - v) / v).abs() < 1e-12, "round trip {v} -> {back}");
        }
    }

    #[test]
    fn zero_orders_between_signs() {
        let z = LogScalar::ZERO;
        let pos = LogScalar::from_f64(1e-300);
        let neg = LogScalar::from_f64(-1e-300);
        assert_eq!(z.cmp_value(&pos), Ordering::Less);
        assert_eq!(z.cmp_value(&neg), Ordering::Greater);
        assert_eq!(z.cmp_value(&LogScalar::ZERO), Ordering::Equal);
    }

    #[test]
    fn ordering_matches_reals() {
        let vals = [-3.0, -0.5, 0.0, 1e-20, 2.0, 1e20];
        for &a in &vals {
            for &b in &vals {
                let la = LogScalar::from_f64(a);
                let lb = LogScalar::from_f64(b);
                assert_eq!(la.cmp_value(&lb), a.partial_cmp(&b).unwrap(), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn combine_doubles() {
        let e = LogScalar::from_f64(std::f64::consts::E);
        let r = ls_combine(&[(1.0, e), (1.0, e)]).unwrap();
        let expect = LogScalar::from_f64(2.0 * std::f64::consts::E);
        assert!(r.approx_eq(expect, 1e-25));
    }

    #[test]
    fn combine_exact_cancellation_is_zero() {
        let x = LogScalar::from_ln(123.456);
        let r = ls_combine(&[(1.0, x), (-1.0, x)]).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn combine_near_cancellation_flags() {
        let a = LogScalar::from_ln(50.0);
        let b = a.nudge_by(Direction::Upper, 1e-12); // relative 1e-12 apart
        match ls_combine(&[(1.0, b), (-1.0, a)]) {
            Err(Error::PrecisionLoss { .. }) => {}
            other => panic!("expected precision-loss flag, got {other:?}"),
        }
    }

    #[test]
    fn combine_is_permutation_invariant() {
        let terms = [
            (2.0, LogScalar::from_ln(-84.7168)),
            (-1.0, LogScalar::from_f64(55.25)),
            (1e8, LogScalar::from_f64(3.25e-7)),
            (1.0, LogScalar::from_ln(3.0)),
        ];
        let r1 = ls_combine(&terms).unwrap();
        let mut perm = terms;
        perm.reverse();
        let r2 = ls_combine(&perm).unwrap();
        perm.swap(1, 2);
        let r3 = ls_combine(&perm).unwrap();
        // bit-identical, not merely close
        assert_eq!(r1.log_mag().unwrap(), r2.log_mag().unwrap());
        assert_eq!(r1.log_mag().unwrap(), r3.log_mag().unwrap());
        assert_eq!(r1.sign(), r3.sign());
    }

    #[test]
    fn combine_range_error() {
        let huge = LogScalar::from_sign_ln_dd(Sign::Positive, crate::dd::Dd::from_f64(2e300));
        match ls_combine(&[(1.0, huge)]) {
            Err(Error::LogRange(_)) => {}
            other => panic!("expected range error, got {other:?}"),
        }
    }

    #[test]
    fn huge_values_refuse_plain_conversion() {
        let v = LogScalar::from_ln(3914.0);
        assert!(matches!(v.to_f64(), Err(Error::Unrepresentable(_))));
        assert_eq!(v.to_f64_saturating(), f64::INFINITY);
        let tiny = LogScalar::from_ln(-3914.0);
        assert_eq!(tiny.to_f64_saturating(), 0.0);
    }

    #[test]
    fn product_round_trip_property() {
        // LS(u) * LS(v) round-trips to u*v within 1e-12 relative
        let us = [3.7e-200, 1.0, 9.1e150, 2.2e-16];
        let vs = [5.5e-100, 0.25, 1.7e120];
        for &u in &us {
            for &v in &vs {
                let p = LogScalar::from_f64(u).mul(LogScalar::from_f64(v));
                let exact_ln = (u.ln() as f64) + v.ln();
                if exact_ln.abs() < 700.0 {
                    let back = p.to_f64().unwrap();
                    assert!(((back - u * v) / (u * v)).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn nudge_direction_respects_sign() {
        let p = LogScalar::from_f64(2.0);
        let n = LogScalar::from_f64(-2.0);
        assert_eq!(p.nudge(Direction::Upper).cmp_value(&p), Ordering::Greater);
        assert_eq!(p.nudge(Direction::Lower).cmp_value(&p), Ordering::Less);
        assert_eq!(n.nudge(Direction::Upper).cmp_value(&n), Ordering::Greater);
        assert_eq!(n.nudge(Direction::Lower).cmp_value(&n), Ordering::Less);
    }
}
