//! Double-double arithmetic: an unevaluated sum of two `f64`s giving a
//! ~106-bit significand.
//!
//! This is the working precision for every bound computation in the crate
//! (the published constants have four significant figures; the extra headroom
//! means rounding of the arithmetic itself never threatens a certificate).
//! The algorithms are the classical error-free transformations of Dekker and
//! Knuth; `two_prod` relies on `f64::mul_add` being a fused operation.

use std::cmp::Ordering;
use std::fmt;

/// ln 2 to double-double precision.
pub const LN_2: Dd = Dd {
    hi: std::f64::consts::LN_2,
    lo: 2.319_046_813_846_299_6e-17,
};

/// pi to double-double precision.
pub const PI: Dd = Dd {
    hi: std::f64::consts::PI,
    lo: 1.224_646_799_147_353_2e-16,
};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    /// Builds from a pre-normalized (hi, lo) pair, e.g. constants produced
    /// offline with 50-digit arithmetic.
    #[inline]
    pub const fn from_parts(hi: f64, lo: f64) -> Dd {
        Dd { hi, lo }
    }

    #[inline]
    pub fn from_f64(v: f64) -> Dd {
        Dd { hi: v, lo: 0.0 }
    }

    /// Nearest `f64`: `hi` is already the correctly rounded double.
    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn hi(self) -> f64 {
        self.hi
    }

    #[inline]
    fn renorm(hi: f64, lo: f64) -> Dd {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn add(self, rhs: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        Dd::renorm(s1, s2 + t2)
    }

    #[inline]
    pub fn sub(self, rhs: Dd) -> Dd {
        self.add(rhs.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            self.neg()
        } else {
            self
        }
    }

    #[inline]
    pub fn mul(self, rhs: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        Dd::renorm(p1, p2 + self.hi * rhs.lo + self.lo * rhs.hi)
    }

    #[inline]
    pub fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self.sub(rhs.mul_f64(q1));
        let q2 = r.hi / rhs.hi;
        let r = r.sub(rhs.mul_f64(q2));
        let q3 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd::renorm(s, e + q3)
    }

    #[inline]
    pub fn add_f64(self, rhs: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs);
        Dd::renorm(s1, s2 + self.lo)
    }

    #[inline]
    pub fn sub_f64(self, rhs: f64) -> Dd {
        self.add_f64(-rhs)
    }

    #[inline]
    pub fn mul_f64(self, rhs: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs);
        Dd::renorm(p1, p2 + self.lo * rhs)
    }

    #[inline]
    pub fn div_f64(self, rhs: f64) -> Dd {
        self.div(Dd::from_f64(rhs))
    }

    #[inline]
    pub fn recip(self) -> Dd {
        Dd::ONE.div(self)
    }

    pub fn sqrt(self) -> Dd {
        assert!(self.hi >= 0.0, "sqrt of negative double-double");
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        let y = self.hi.sqrt();
        // one Newton step: y + (a - y^2) / (2y)
        let y_dd = Dd::from_f64(y);
        let diff = self.sub(y_dd.mul(y_dd));
        y_dd.add(diff.div_f64(2.0 * y))
    }

    /// exp with Taylor series after reduction by ln 2. Underflows to zero
    /// below -745; the crate never calls it with arguments above ~709
    /// (quantities that large live in log space).
    pub fn exp(self) -> Dd {
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        assert!(
            self.hi <= 709.5,
            "Dd::exp overflow: argument {} belongs in log space",
            self.hi
        );
        let k = (self.hi / LN_2.hi).round();
        let r = self.sub(LN_2.mul_f64(k));
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        let mut n = 1.0;
        loop {
            term = term.mul(r).div_f64(n);
            sum = sum.add(term);
            if term.hi.abs() < 1e-35 || n > 40.0 {
                break;
            }
            n += 1.0;
        }
        sum.mul_exp2(k as i32)
    }

    /// Exact scaling by 2^k, chunked so the intermediate power of two stays
    /// in the normal range.
    pub fn mul_exp2(self, k: i32) -> Dd {
        let mut v = self;
        let mut rem = k;
        while rem != 0 {
            let step = rem.clamp(-1000, 1000);
            let scale = libm_exp2(step);
            v = Dd {
                hi: v.hi * scale,
                lo: v.lo * scale,
            };
            rem -= step;
        }
        v
    }

    /// Natural log: scales into [0.5, 2) by a power of two (so the Newton
    /// correction never touches subnormals), then refines the f64 seed.
    pub fn ln(self) -> Dd {
        assert!(self.hi > 0.0, "ln of non-positive double-double");
        let e = self.hi.log2().round() as i32;
        let m = self.mul_exp2(-e);
        let mut y = Dd::from_f64(m.hi.ln());
        for _ in 0..2 {
            // y <- y + m * exp(-y) - 1
            y = y.add(m.mul(y.neg().exp())).sub(Dd::ONE);
        }
        y.add(LN_2.mul_f64(f64::from(e)))
    }

    /// Integer power by binary squaring.
    pub fn powi(self, n: i32) -> Dd {
        if n == 0 {
            return Dd::ONE;
        }
        let mut base = if n < 0 { self.recip() } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Dd::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    /// Real power of a positive value, exp(p ln x).
    pub fn powf(self, p: Dd) -> Dd {
        self.ln().mul(p).exp()
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.hi == 0.0
    }
}

/// Exact 2^k for |k| within the normal f64 range.
#[inline]
fn libm_exp2(k: i32) -> f64 {
    f64::from_bits(((1023 + k.clamp(-1022, 1023)) as u64) << 52)
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}{:+e}", self.hi, self.lo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_err(a: Dd, b: Dd) -> f64 {
        a.sub(b).abs().div(b.abs()).to_f64()
    }

    // Reference values below were computed with 50-digit decimal arithmetic.

    #[test]
    fn exp_one_matches_reference() {
        // e = 2.7182818284590452353602874713527...
        let e = Dd::ONE.exp();
        let reference = Dd::from_parts(2.718281828459045, 1.4456468917292502e-16);
        assert!(rel_err(e, reference) < 1e-30);
    }

    #[test]
    fn ln_ten_matches_reference() {
        // ln 10 = 2.3025850929940456840179914546844...
        let l = Dd::from_f64(10.0).ln();
        let reference = Dd::from_parts(2.302585092994046, -2.1707562233822494e-16);
        assert!(rel_err(l, reference) < 1e-30);
    }

    #[test]
    fn exp_ln_round_trip() {
        for &v in &[1e-20, 0.3, 1.0, 7.5573412, 1e10, 3.2e300] {
            let x = Dd::from_f64(v);
            assert!(rel_err(x.ln().exp(), x) < 1e-29, "round trip at {v}");
        }
    }

    #[test]
    fn exp_large_negative_underflows() {
        assert!(Dd::from_f64(-1e6).exp().is_zero());
    }

    #[test]
    fn sqrt_squares_back() {
        for &v in &[2.0, 5.573412, 1e-12, 9.9e200] {
            let x = Dd::from_f64(v);
            let s = x.sqrt();
            assert!(rel_err(s.mul(s), x) < 1e-30);
        }
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = Dd::from_f64(3.0).recip(); // 1/3 beyond f64 precision
        let b = a.mul_f64(3.0);
        assert!(rel_err(b, Dd::ONE) < 1e-31);
    }

    #[test]
    fn powi_matches_repeated_mul() {
        let x = Dd::from_f64(1.1);
        let mut acc = Dd::ONE;
        for _ in 0..13 {
            acc = acc.mul(x);
        }
        assert!(rel_err(x.powi(13), acc) < 1e-30);
        assert!(rel_err(x.powi(-13), acc.recip()) < 1e-30);
    }

    #[test]
    fn ordering_sees_the_low_word() {
        let a = Dd::from_parts(1.0, 1e-20);
        let b = Dd::from_parts(1.0, 0.0);
        assert!(a > b);
    }
}
