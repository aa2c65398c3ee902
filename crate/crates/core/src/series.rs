//! Truncated formal power series over exact integers.
//!
//! This is the expansion engine for the two generating functions of the
//! crate: `I(x) = Σ_n Π_{i=1}^n (1 - (1-x)^i)` whose coefficients count
//! unlabelled interval orders, and `R(x) = Σ_n Π_{i=1}^n (1 - (1+x)^{-i})`
//! whose coefficients count the rigid ones. All arithmetic is exact; every
//! expansion used here is provably integral, so coefficients are `BigInt`
//! and nothing is ever rounded.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Sign selector for the binomial bases `(1 + x)` vs `(1 - x)` and the
/// substitutions `x/(1+x)` vs `x/(1-x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// +1 or -1.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A formal power series truncated at a fixed degree, with exact integer
/// coefficients.
///
/// The truncation order is set at construction and never silently extended:
/// binary operations require equal orders and yield that order. `coeffs[k]`
/// is the coefficient of `x^k`, and `coeffs.len() == order + 1` always.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<BigInt>,
}

impl TruncSeries {
    /// Builds a series from its coefficient vector. The vector length fixes
    /// the order: `coeffs.len()` must be `order + 1`.
    pub fn new(order: usize, coeffs: Vec<BigInt>) -> Self {
        assert_eq!(
            coeffs.len(),
            order + 1,
            "coefficient vector must have exactly order + 1 entries"
        );
        TruncSeries { order, coeffs }
    }

    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            order,
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series 1 at the given order.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Truncation degree (inclusive).
    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `x^k`; panics if `k` exceeds the order.
    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    /// All coefficients, index = degree.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// In-place `self += scalar * other`. Skips the work when the scalar is
    /// zero.
    fn add_scaled(&mut self, other: &TruncSeries, scalar: &BigInt) {
        assert_eq!(self.order, other.order, "series orders must match");
        if scalar.is_zero() {
            return;
        }
        for (c, o) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !o.is_zero() {
                *c += o * scalar;
            }
        }
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        assert_eq!(self.order, rhs.order, "series orders must match");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        TruncSeries {
            order: self.order,
            coeffs,
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        assert_eq!(self.order, rhs.order, "series orders must match");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        TruncSeries {
            order: self.order,
            coeffs,
        }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;

    fn neg(self) -> TruncSeries {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Truncated Cauchy product. Both operands must have the same order.
impl Mul for &TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        assert_eq!(self.order, rhs.order, "series orders must match");
        let n = self.order;
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (b, o) in rhs.coeffs[..=n - i].iter().zip(out[i..].iter_mut()) {
                if !b.is_zero() {
                    *o += a * b;
                }
            }
        }
        TruncSeries {
            order: n,
            coeffs: out,
        }
    }
}

/// Expands `(1 + sign*x)^exponent` to the given order.
///
/// Nonnegative exponents use the binomial theorem. Negative exponents expand
/// via `(1 + y)^{-i} = Σ_k (-1)^k C(i+k-1, k) y^k`, which keeps every
/// coefficient an integer.
pub fn binomial_power(sign: Sign, exponent: i64, order: usize) -> TruncSeries {
    let mut coeffs = vec![BigInt::zero(); order + 1];
    if exponent >= 0 {
        // C(e, k) * sign^k, zero past degree e.
        let e = exponent as usize;
        let mut c = BigInt::one();
        for (k, slot) in coeffs.iter_mut().enumerate() {
            if k > e {
                break;
            }
            *slot = if sign == Sign::Minus && k % 2 == 1 {
                -&c
            } else {
                c.clone()
            };
            if k < e {
                c = c * (e - k) / (k + 1);
            }
        }
    } else {
        // C(i+k-1, k) * (-sign)^k.
        let i = (-exponent) as u64;
        let mut c = BigInt::one();
        for (k, slot) in coeffs.iter_mut().enumerate() {
            let k = k as u64;
            *slot = if sign == Sign::Plus && k % 2 == 1 {
                -&c
            } else {
                c.clone()
            };
            c = c * (i + k) / (k + 1);
        }
    }
    TruncSeries::new(order, coeffs)
}

/// Sum of running products `Σ_{n=0}^{order} Π_{i=1}^{n} factor(i)`.
///
/// Every factor used here has zero constant term, so the n-th product has
/// valuation n and products past the truncation order contribute nothing;
/// one series multiplication per factor suffices.
fn product_sum(order: usize, factor: impl Fn(usize) -> TruncSeries) -> TruncSeries {
    let mut total = TruncSeries::one(order);
    let mut product = TruncSeries::one(order);
    for i in 1..=order {
        product = &product * &factor(i);
        total = &total + &product;
    }
    total
}

/// Generating function for unlabelled interval orders:
/// `Σ_n Π_{i=1}^n (1 - (1-x)^i)`. Coefficient k is `i_k`.
pub fn interval_gf(order: usize) -> TruncSeries {
    let one = TruncSeries::one(order);
    product_sum(order, |i| {
        &one - &binomial_power(Sign::Minus, i as i64, order)
    })
}

/// Generating function for unlabelled rigid interval orders:
/// `Σ_n Π_{i=1}^n (1 - (1+x)^{-i})`. Coefficient k is `r_k`.
pub fn rigid_gf(order: usize) -> TruncSeries {
    let one = TruncSeries::one(order);
    product_sum(order, |i| {
        &one - &binomial_power(Sign::Plus, -(i as i64), order)
    })
}

/// Composes a series with the Möbius map `x / (1 + sign*x)`, truncated to
/// the input's order.
///
/// Writing `S(x) = Σ_j c_j x^j`, the result is `Σ_j c_j x^j (1+sign*x)^{-j}`,
/// accumulated through powers of `x/(1+sign*x)`; each power has integer
/// coefficients, so the output stays exact. The two directions are mutually
/// inverse, and they interchange the interval-order and rigid generating
/// functions: `I(x) = R(x/(1-x))` and `R(x) = I(x/(1+x))`.
pub fn substitute_moebius(s: &TruncSeries, sign: Sign) -> TruncSeries {
    let order = s.order();
    // x/(1+sx) = x - s x^2 + s^2 x^3 - ...
    let mut base = TruncSeries::zero(order);
    let mut c = BigInt::one();
    for k in 1..=order {
        base.coeffs[k] = c.clone();
        c = -c * sign.value();
    }

    let mut result = TruncSeries::zero(order);
    result.coeffs[0] = s.coeff(0).clone();
    let mut power = TruncSeries::one(order);
    for j in 1..=order {
        power = &power * &base;
        result.add_scaled(&power, s.coeff(j));
    }
    result
}
