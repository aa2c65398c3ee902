//! Asymptotic constants, convergence diagnostics, and the Stirling-number
//! expansion checks.
//!
//! The exact sequences grow like `n!·√n·(6/π²)^n` (unlabelled and rigid)
//! and `(n!)²·√n·(6/π²)^n` (labelled). Dividing the exact counts by those
//! factors gives scaled ratios that converge to the constants below; a
//! three-term fit in powers of 1/n recovers the leading constant and the
//! first correction coefficient numerically.

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::counts::CountTable;
use crate::real::RealCtx;

/// Which counting sequence a diagnostic refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountKind {
    Unlabelled,
    Rigid,
    Labelled,
}

/// The closed-form constants of the three growth laws and the two Poisson
/// means, all evaluated at one precision.
#[derive(Clone, Debug)]
pub struct AsymptoticConstants {
    pub precision_bits: usize,
    /// Limit of the unlabelled scaled ratio: `12√3/π^{5/2}·e^{π²/12}`.
    pub c0: BigFloat,
    /// Limit of the rigid scaled ratio: `12√3/(π^{5/2}·e^{π²/12})`.
    pub d0: BigFloat,
    /// Limit of the labelled scaled ratio: `12√3/π^{5/2}`.
    pub e0: BigFloat,
    /// `e^{−π²/6}`, the limiting rigid proportion `r_n/i_n`.
    pub exp_neg_pi2_over_6: BigFloat,
    /// `π²/6`, the Poisson mean for unlabelled duplicated-pair counts.
    pub lambda_unlabelled: BigFloat,
    /// `π²/12`, the Poisson mean for labelled duplicated-pair counts.
    pub lambda_labelled: BigFloat,
}

/// Evaluates every constant from its own closed form.
pub fn constants(precision_bits: usize) -> AsymptoticConstants {
    let mut ctx = RealCtx::new(precision_bits);
    let pi = ctx.pi();
    let pi2 = ctx.mul(&pi, &pi);
    let lambda_unlabelled = ctx.div(&pi2, &ctx.from_u64(6));
    let lambda_labelled = ctx.div(&pi2, &ctx.from_u64(12));

    // 12√3/π^{5/2}, with π^{5/2} = π²·√π.
    let sqrt3 = ctx.sqrt(&ctx.from_u64(3));
    let numer = ctx.mul(&ctx.from_u64(12), &sqrt3);
    let pi_52 = ctx.mul(&pi2, &ctx.sqrt(&pi));
    let e0 = ctx.div(&numer, &pi_52);

    let exp_pi2_over_12 = ctx.exp(&lambda_labelled);
    let c0 = ctx.mul(&e0, &exp_pi2_over_12);
    let d0 = ctx.div(&e0, &exp_pi2_over_12);
    let exp_neg_pi2_over_6 = ctx.exp(&lambda_unlabelled.neg());

    AsymptoticConstants {
        precision_bits,
        c0,
        d0,
        e0,
        exp_neg_pi2_over_6,
        lambda_unlabelled,
        lambda_labelled,
    }
}

/// Exact count divided by its growth law: `count/(n!·√n·(6/π²)^n)`, with
/// `(n!)²` in place of `n!` for the labelled kind. The count and the
/// factorial enter as exact integers; only the final combination is
/// rounded.
pub fn scaled_ratio(
    kind: CountKind,
    n: usize,
    table: &CountTable,
    precision_bits: usize,
) -> BigFloat {
    assert!(n >= 1 && n <= table.max_n());
    let mut ctx = RealCtx::new(precision_bits);
    let count = match kind {
        CountKind::Unlabelled => table.unlabelled(n),
        CountKind::Rigid => table.rigid(n),
        CountKind::Labelled => table.labelled(n),
    };
    let count = ctx.from_bigint(count);
    let factorial = ctx.from_bigint(table.factorial(n));
    let factorial_part = match kind {
        CountKind::Labelled => ctx.mul(&factorial, &factorial),
        _ => factorial,
    };
    let pi = ctx.pi();
    let pi2 = ctx.mul(&pi, &pi);
    let base = ctx.div(&ctx.from_u64(6), &pi2);
    let growth = ctx.mul(
        &ctx.mul(&factorial_part, &ctx.sqrt(&ctx.from_u64(n as u64))),
        &ctx.powi(&base, n),
    );
    ctx.div(&count, &growth)
}

/// Coefficients of the fitted expansion `ratio(n) ≈ a0 + a1/n + a2/n²`.
#[derive(Clone, Debug)]
pub struct FitResult {
    pub a0: BigFloat,
    pub a1: BigFloat,
    pub a2: BigFloat,
    /// The n values the fit was taken over.
    pub sample_points: Vec<usize>,
    /// Maximum absolute deviation of the fit over the sample points.
    pub residual: BigFloat,
}

/// Rejected fit inputs.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FitError {
    #[error("need at least three sample points, got {0}")]
    TooFewPoints(usize),
    #[error("duplicate sample point n = {0}")]
    DuplicatePoint(usize),
}

/// Least-squares fit of `y ≈ a0 + a1·x + a2·x²` with `x = 1/n`, by the
/// normal equations; exact interpolation when given three points.
pub fn fit_inverse_powers(
    samples: &[(usize, BigFloat)],
    precision_bits: usize,
) -> Result<FitResult, FitError> {
    if samples.len() < 3 {
        return Err(FitError::TooFewPoints(samples.len()));
    }
    let mut ns: Vec<usize> = samples.iter().map(|(n, _)| *n).collect();
    ns.sort_unstable();
    for w in ns.windows(2) {
        if w[0] == w[1] {
            return Err(FitError::DuplicatePoint(w[0]));
        }
    }
    assert!(ns[0] >= 1, "sample points must be positive");

    let ctx = RealCtx::new(precision_bits);
    let one = ctx.from_u64(1);

    // Accumulate the moments Σx^k (k = 0..4) and Σy·x^k (k = 0..2).
    let mut xpow_sums = vec![ctx.from_u64(0); 5];
    let mut yx_sums = vec![ctx.from_u64(0); 3];
    for (n, y) in samples {
        let x = ctx.div(&one, &ctx.from_u64(*n as u64));
        let mut xp = one.clone();
        for k in 0..5 {
            xpow_sums[k] = ctx.add(&xpow_sums[k], &xp);
            if k < 3 {
                yx_sums[k] = ctx.add(&yx_sums[k], &ctx.mul(y, &xp));
            }
            xp = ctx.mul(&xp, &x);
        }
    }

    // Normal equations: row i is Σx^{i+j} for j = 0..2, augmented with Σy·x^i.
    let mut m: Vec<Vec<BigFloat>> = (0..3)
        .map(|i| {
            let mut row: Vec<BigFloat> =
                (0..3).map(|j| xpow_sums[i + j].clone()).collect();
            row.push(yx_sums[i].clone());
            row
        })
        .collect();

    // Gaussian elimination with partial pivoting.
    for col in 0..3 {
        let pivot = (col..3)
            .max_by(|&a, &b| {
                m[a][col]
                    .abs()
                    .cmp(&m[b][col].abs())
                    .expect("finite")
                    .cmp(&0)
            })
            .unwrap();
        m.swap(col, pivot);
        assert!(!m[col][col].is_zero(), "singular normal equations");
        for row in col + 1..3 {
            let factor = ctx.div(&m[row][col], &m[col][col]);
            for j in col..4 {
                let delta = ctx.mul(&factor, &m[col][j]);
                m[row][j] = ctx.sub(&m[row][j], &delta);
            }
        }
    }
    let mut coeffs = vec![ctx.from_u64(0); 3];
    for row in (0..3).rev() {
        let mut v = m[row][3].clone();
        for j in row + 1..3 {
            v = ctx.sub(&v, &ctx.mul(&m[row][j], &coeffs[j]));
        }
        coeffs[row] = ctx.div(&v, &m[row][row]);
    }

    let mut residual = ctx.from_u64(0);
    for (n, y) in samples {
        let x = ctx.div(&one, &ctx.from_u64(*n as u64));
        let fitted = ctx.add(
            &coeffs[0],
            &ctx.mul(&x, &ctx.add(&coeffs[1], &ctx.mul(&x, &coeffs[2]))),
        );
        let dev = ctx.sub(&fitted, y).abs();
        if dev.cmp(&residual).expect("finite") > 0 {
            residual = dev;
        }
    }

    Ok(FitResult {
        a0: coeffs[0].clone(),
        a1: coeffs[1].clone(),
        a2: coeffs[2].clone(),
        sample_points: samples.iter().map(|(n, _)| *n).collect(),
        residual,
    })
}

/// Scaled ratios at the given points, fitted by [`fit_inverse_powers`].
pub fn extrapolate(
    kind: CountKind,
    n_points: &[usize],
    table: &CountTable,
    precision_bits: usize,
) -> Result<FitResult, FitError> {
    let samples: Vec<(usize, BigFloat)> = n_points
        .iter()
        .map(|&n| (n, scaled_ratio(kind, n, table, precision_bits)))
        .collect();
    fit_inverse_powers(&samples, precision_bits)
}

/// Cross-check of the two fitted first-order coefficients.
#[derive(Clone, Debug)]
pub struct D1Consistency {
    /// `(ĉ1 + π²/4·c0)·e^{−π²/6}`, the rigid first-order coefficient the
    /// unlabelled fit predicts.
    pub predicted_d1: BigFloat,
    /// The rigid fit's own a1.
    pub observed_d1: BigFloat,
    pub relative_gap: BigFloat,
}

/// Predicts the rigid fit's a1 from the unlabelled fit's a1 and compares.
/// Both fits must come from the same sample points.
pub fn d1_consistency(
    c_fit: &FitResult,
    r_fit: &FitResult,
    k: &AsymptoticConstants,
) -> D1Consistency {
    assert_eq!(
        c_fit.sample_points, r_fit.sample_points,
        "fits must share sample points"
    );
    let ctx = RealCtx::new(k.precision_bits);
    // π²/4 = 3/2 · π²/6.
    let pi2_over_4 = ctx.div(&ctx.mul(&k.lambda_unlabelled, &ctx.from_u64(3)), &ctx.from_u64(2));
    let inner = ctx.add(&c_fit.a1, &ctx.mul(&pi2_over_4, &k.c0));
    let predicted_d1 = ctx.mul(&inner, &k.exp_neg_pi2_over_6);
    let observed_d1 = r_fit.a1.clone();
    let relative_gap = ctx.rel_gap(&observed_d1, &predicted_d1);
    D1Consistency {
        predicted_d1,
        observed_d1,
        relative_gap,
    }
}

/// How well the two-term Stirling approximation matches `S(n, n−j)`,
/// as exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HsuCheck {
    /// `S(n,n−j) · j!·2^j / (n−j)^{2j}` — exact over the leading term.
    pub ratio_leading: BigRational,
    /// Leading ratio divided by the first-order correction
    /// `1 + j(2j+1)/(3(n−j))`.
    pub ratio_corrected: BigRational,
}

/// Compares `S(n, n−j)` against its leading approximation
/// `(n−j)^{2j}/(j!·2^j)` and the corrected one. Both ratios tend to 1;
/// at j = 1 the corrected ratio is exactly 1 for every n.
pub fn hsu_check(n: usize, j: usize, table: &CountTable) -> HsuCheck {
    assert!(j < n && n <= table.max_n());
    let s = table.stirling2(n, n - j);
    let mut numer = s * table.factorial(j);
    numer <<= j;
    let denom = BigInt::from(n - j).pow(2 * j as u32);
    let ratio_leading = BigRational::new(numer, denom);
    // 1 + f1(j)/(n−j) with f1(j) = j(2j+1)/3, as (3(n−j) + j(2j+1))/(3(n−j)).
    let correction = BigRational::new(
        BigInt::from(3 * (n - j) + j * (2 * j + 1)),
        BigInt::from(3 * (n - j)),
    );
    let ratio_corrected = &ratio_leading / correction;
    HsuCheck {
        ratio_leading,
        ratio_corrected,
    }
}

/// Partitions of an n-set into n−j parts all of size ≤ 2 (equivalently,
/// j disjoint pairs): `n(n−1)⋯(n−2j+1)/(j!·2^j)`. Zero when `2j > n`.
/// Always a lower bound for `S(n, n−j)`, with equality iff j ≤ 1.
pub fn matchings_lower(n: usize, j: usize) -> BigInt {
    if 2 * j > n {
        return BigInt::zero();
    }
    let mut numer = BigInt::one();
    for t in 0..2 * j {
        numer *= n - t;
    }
    let mut denom = BigInt::one();
    for t in 1..=j {
        denom *= t;
    }
    denom <<= j;
    let (q, r) = num_integer::Integer::div_rem(&numer, &denom);
    assert!(r.is_zero());
    q
}
