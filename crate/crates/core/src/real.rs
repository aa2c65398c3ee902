//! Thin high-precision floating-point layer over `astro-float`.
//!
//! Every numeric routine in the crate funnels through [`RealCtx`], which
//! fixes the working precision and rounding mode once and carries the
//! shared constants cache. Working precision is the caller-requested
//! precision plus a guard margin, so results are still trustworthy at the
//! requested width after error accumulation.

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign as FloatSign};
use num_bigint::{BigInt, Sign as IntSign};
use num_rational::BigRational;

/// Extra working bits beyond the requested precision.
const GUARD_BITS: usize = 32;

/// Fixed-precision real arithmetic context.
pub struct RealCtx {
    prec: usize,
    display_prec: usize,
    rm: RoundingMode,
    consts: Consts,
}

impl RealCtx {
    /// Context computing with `precision_bits + 32` working bits.
    pub fn new(precision_bits: usize) -> Self {
        assert!(precision_bits >= 64, "need at least 64 bits of precision");
        RealCtx {
            prec: precision_bits + GUARD_BITS,
            display_prec: precision_bits,
            rm: RoundingMode::ToEven,
            consts: Consts::new().expect("constants cache"),
        }
    }

    /// Working precision in bits.
    pub fn precision(&self) -> usize {
        self.prec
    }

    /// π at working precision.
    pub fn pi(&mut self) -> BigFloat {
        self.consts.pi(self.prec, self.rm)
    }

    /// Exact conversion of an arbitrary-precision integer.
    pub fn from_bigint(&self, v: &BigInt) -> BigFloat {
        let (sign, digits) = v.to_u64_digits();
        if digits.is_empty() {
            return BigFloat::from_i64(0, self.prec);
        }
        let bits = digits.len() * 64;
        let fsign = match sign {
            IntSign::Minus => FloatSign::Neg,
            _ => FloatSign::Pos,
        };
        // from_words reads the words as a little-endian mantissa m with
        // value m · 2^(e - bits), so e = bits makes the value exactly v.
        BigFloat::from_words(&digits, fsign, bits as i32)
    }

    /// Rational converted by one correctly rounded division of exact parts.
    pub fn from_ratio(&self, v: &BigRational) -> BigFloat {
        let num = self.from_bigint(v.numer());
        let den = self.from_bigint(v.denom());
        num.div(&den, self.prec, self.rm)
    }

    /// Small-integer constant.
    pub fn from_u64(&self, v: u64) -> BigFloat {
        BigFloat::from_u64(v, self.prec)
    }

    /// Conversion from a machine float (exact; f64 is a dyadic rational).
    pub fn from_f64(&self, v: f64) -> BigFloat {
        BigFloat::from_f64(v, self.prec)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.prec, self.rm)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.prec, self.rm)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.prec, self.rm)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.prec, self.rm)
    }

    pub fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.prec, self.rm)
    }

    pub fn exp(&mut self, a: &BigFloat) -> BigFloat {
        a.exp(self.prec, self.rm, &mut self.consts)
    }

    /// Integer power.
    pub fn powi(&self, a: &BigFloat, e: usize) -> BigFloat {
        a.powi(e, self.prec, self.rm)
    }

    /// `|a - b| / |b|`; relative gap against reference value b (b ≠ 0).
    pub fn rel_gap(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        let diff = self.sub(a, b).abs();
        self.div(&diff, &b.abs())
    }

    /// Decimal rendering at the *requested* precision (guard bits are
    /// rounded away first so output does not depend on the guard margin).
    pub fn format_dec(&mut self, a: &BigFloat) -> String {
        let mut v = a.clone();
        v.set_precision(self.display_prec, self.rm).expect("precision");
        v.format(Radix::Dec, self.rm, &mut self.consts)
            .expect("finite value")
    }

    /// Nearest f64, read off the top mantissa words. Used only for
    /// tolerance comparisons, where 50+ correct bits are ample.
    pub fn to_f64(&self, a: &BigFloat) -> f64 {
        if a.is_zero() {
            return 0.0;
        }
        if a.is_inf() {
            return if a.is_inf_pos() { f64::INFINITY } else { f64::NEG_INFINITY };
        }
        let (words, _, _, exponent, _) = a.as_raw_parts().expect("finite value");
        let top = words[words.len() - 1] as f64;
        let next = if words.len() >= 2 {
            words[words.len() - 2] as f64
        } else {
            0.0
        };
        // Value is int(words) · 2^(exponent - 64·len); the top two words
        // carry more than f64 can hold.
        let mantissa = top * 2f64.powi(-64) + next * 2f64.powi(-128);
        let signum = if a.is_negative() { -1.0 } else { 1.0 };
        signum * mantissa * 2f64.powi(exponent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use std::str::FromStr;

    #[test]
    fn bigint_conversion_is_exact() {
        let ctx = RealCtx::new(128);
        let v = BigInt::from_str("340282366920938463463374607431768211457").unwrap(); // 2^128 + 1
        let f = ctx.from_bigint(&v);
        let one = ctx.from_u64(1);
        let back = ctx.sub(&f, &one);
        let two = ctx.from_u64(2);
        let expect = ctx.powi(&two, 128);
        assert_eq!(back.cmp(&expect), Some(0));
    }

    #[test]
    fn zero_and_negative_conversions() {
        let ctx = RealCtx::new(64);
        assert!(ctx.from_bigint(&BigInt::from(0)).is_zero());
        let neg = ctx.from_bigint(&BigInt::from(-7));
        assert_eq!(neg.cmp(&ctx.from_f64(-7.0)), Some(0));
        let one = ctx.from_bigint(&BigInt::from(1));
        assert_eq!(one.cmp(&ctx.from_u64(1)), Some(0));
    }

    #[test]
    fn ratio_conversion() {
        let ctx = RealCtx::new(64);
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert_eq!(ctx.from_ratio(&half).cmp(&ctx.from_f64(0.5)), Some(0));
        let third = BigRational::new(BigInt::one(), BigInt::from(3));
        let approx = ctx.to_f64(&ctx.from_ratio(&third));
        assert!((approx - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn pi_squared_over_six() {
        let mut ctx = RealCtx::new(128);
        let pi = ctx.pi();
        let six = ctx.from_u64(6);
        let v = ctx.div(&ctx.mul(&pi, &pi), &six);
        let approx = ctx.to_f64(&v);
        assert!((approx - 1.6449340668482264).abs() < 1e-15);
    }

    #[test]
    fn rel_gap_examples() {
        let ctx = RealCtx::new(64);
        let a = ctx.from_f64(1.01);
        let b = ctx.from_f64(1.0);
        let gap = ctx.to_f64(&ctx.rel_gap(&a, &b));
        assert!((gap - 0.01).abs() < 1e-12);
        assert!(ctx.rel_gap(&b, &b).is_zero());
    }

    #[test]
    fn powi_examples() {
        let ctx = RealCtx::new(64);
        let three = ctx.from_u64(3);
        assert_eq!(ctx.powi(&three, 7).cmp(&ctx.from_u64(2187)), Some(0));
        assert_eq!(ctx.powi(&three, 0).cmp(&ctx.from_u64(1)), Some(0));
    }

    #[test]
    fn exp_of_zero_and_one() {
        let mut ctx = RealCtx::new(96);
        let zero = ctx.from_u64(0);
        let one = ctx.from_u64(1);
        let e0 = ctx.exp(&zero);
        assert_eq!(e0.cmp(&one), Some(0));
        let e1 = ctx.exp(&one);
        assert!((ctx.to_f64(&e1) - std::f64::consts::E).abs() < 1e-15);
    }

    #[test]
    fn to_f64_handles_magnitudes() {
        let ctx = RealCtx::new(64);
        let big = ctx.from_f64(1.25e300);
        assert_eq!(ctx.to_f64(&big), 1.25e300);
        let small = ctx.from_f64(-3.5e-200);
        assert_eq!(ctx.to_f64(&small), -3.5e-200);
    }

    #[test]
    fn format_dec_is_scientific_decimal() {
        let mut ctx = RealCtx::new(64);
        let v = ctx.from_f64(0.5);
        assert_eq!(ctx.format_dec(&v), "5.e-1");
        let w = ctx.from_u64(207);
        assert_eq!(ctx.format_dec(&w), "2.07e+2");
    }
}
