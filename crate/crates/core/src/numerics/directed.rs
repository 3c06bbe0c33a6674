//! Two-sided enclosures built from a pair of [`LogScalar`]s.
//!
//! Arithmetic is outward-monotone: the result interval contains every real
//! result of operand reals drawn from the operand intervals.

use super::log_scalar::{ls_combine, Direction, LogScalar};
use crate::error::{Error, Result};
use std::cmp::Ordering;

#[derive(Clone, Copy, Debug)]
pub struct DirectedValue {
    lower: LogScalar,
    upper: LogScalar,
}

impl DirectedValue {
    pub fn new(lower: LogScalar, upper: LogScalar) -> DirectedValue {
        assert!(
            lower.cmp_value(&upper) != Ordering::Greater,
            "directed value needs lower <= upper"
        );
        DirectedValue { lower, upper }
    }

    pub fn exact(v: LogScalar) -> DirectedValue {
        DirectedValue { lower: v, upper: v }
    }

    pub fn from_f64_pair(lower: f64, upper: f64) -> DirectedValue {
        DirectedValue::new(LogScalar::from_f64(lower), LogScalar::from_f64(upper))
    }

    pub fn lower(&self) -> LogScalar {
        self.lower
    }

    pub fn upper(&self) -> LogScalar {
        self.upper
    }

    pub fn bound(&self, dir: Direction) -> LogScalar {
        match dir {
            Direction::Lower => self.lower,
            Direction::Upper => self.upper,
        }
    }

    pub fn contains(&self, v: LogScalar) -> bool {
        self.lower.cmp_value(&v) != Ordering::Greater
            && v.cmp_value(&self.upper) != Ordering::Greater
    }

    pub fn add(&self, rhs: &DirectedValue) -> Result<DirectedValue> {
        let lower = ls_combine(&[(1.0, self.lower), (1.0, rhs.lower)])?.nudge(Direction::Lower);
        let upper = ls_combine(&[(1.0, self.upper), (1.0, rhs.upper)])?.nudge(Direction::Upper);
        Ok(DirectedValue::new(lower, upper))
    }

    pub fn neg(&self) -> DirectedValue {
        DirectedValue {
            lower: self.upper.neg(),
            upper: self.lower.neg(),
        }
    }

    /// Enclosure of the absolute value.
    pub fn abs(&self) -> DirectedValue {
        let zero = LogScalar::ZERO;
        if self.lower.cmp_value(&zero) != Ordering::Less {
            *self
        } else if self.upper.cmp_value(&zero) != Ordering::Greater {
            self.neg()
        } else {
            let hi = if self.upper.cmp_value(&self.lower.neg()) == Ordering::Greater {
                self.upper
            } else {
                self.lower.neg()
            };
            DirectedValue::new(zero, hi)
        }
    }

    pub fn scale(&self, c: f64) -> DirectedValue {
        let a = self.lower.mul_f64(c);
        let b = self.upper.mul_f64(c);
        if c >= 0.0 {
            DirectedValue::new(a.nudge(Direction::Lower), b.nudge(Direction::Upper))
        } else {
            DirectedValue::new(b.nudge(Direction::Lower), a.nudge(Direction::Upper))
        }
    }

    pub fn mul(&self, rhs: &DirectedValue) -> DirectedValue {
        let cands = [
            self.lower.mul(rhs.lower),
            self.lower.mul(rhs.upper),
            self.upper.mul(rhs.lower),
            self.upper.mul(rhs.upper),
        ];
        let mut lo = cands[0];
        let mut hi = cands[0];
        for c in &cands[1..] {
            if c.cmp_value(&lo) == Ordering::Less {
                lo = *c;
            }
            if c.cmp_value(&hi) == Ordering::Greater {
                hi = *c;
            }
        }
        DirectedValue::new(lo.nudge(Direction::Lower), hi.nudge(Direction::Upper))
    }

    /// Interval width as a plain real; errors when the endpoints are outside
    /// the plain-real range.
    pub fn width_f64(&self) -> Result<f64> {
        Ok(self.upper.to_f64()? - self.lower.to_f64()?)
    }

    /// Midpoint as a plain real, for reporting.
    pub fn mid_f64(&self) -> Result<f64> {
        Ok(0.5 * (self.upper.to_f64()? + self.lower.to_f64()?))
    }

    pub fn hull(&self, rhs: &DirectedValue) -> DirectedValue {
        let lo = if rhs.lower.cmp_value(&self.lower) == Ordering::Less {
            rhs.lower
        } else {
            self.lower
        };
        let hi = if rhs.upper.cmp_value(&self.upper) == Ordering::Greater {
            rhs.upper
        } else {
            self.upper
        };
        DirectedValue {
            lower: lo,
            upper: hi,
        }
    }
}

/// Checks the defining invariant when assembling from possibly-swapped data.
pub fn try_directed(lower: LogScalar, upper: LogScalar) -> Result<DirectedValue> {
    if lower.cmp_value(&upper) == Ordering::Greater {
        return Err(Error::Precondition(
            "directed value with lower > upper".into(),
        ));
    }
    Ok(DirectedValue::new(lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(a: f64, b: f64) -> DirectedValue {
        DirectedValue::from_f64_pair(a, b)
    }

    #[test]
    fn outward_add() {
        let s = dv(1.0, 1.5).add(&dv(-0.5, 0.25)).unwrap();
        assert!(s.lower().to_f64().unwrap() <= 0.5);
        assert!(s.upper().to_f64().unwrap() >= 1.75);
        assert!(s.width_f64().unwrap() < 1.2500001);
    }

    #[test]
    fn mul_covers_sign_cases() {
        let cases = [
            (dv(2.0, 3.0), dv(4.0, 5.0), 8.0, 15.0),
            (dv(-3.0, -2.0), dv(4.0, 5.0), -15.0, -8.0),
            (dv(-2.0, 3.0), dv(-5.0, 4.0), -15.0, 12.0),
        ];
        for (a, b, lo, hi) in cases {
            let p = a.mul(&b);
            assert!(p.lower().to_f64().unwrap() <= lo);
            assert!(p.upper().to_f64().unwrap() >= hi);
            assert!(p.contains(LogScalar::from_f64(lo)));
            assert!(p.contains(LogScalar::from_f64(hi)));
        }
    }

    #[test]
    fn abs_straddling_zero() {
        let a = dv(-3.0, 2.0).abs();
        assert!(a.lower().is_zero());
        assert!((a.upper().to_f64().unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn invariant_rejects_swapped() {
        assert!(try_directed(LogScalar::from_f64(2.0), LogScalar::from_f64(1.0)).is_err());
    }
}
