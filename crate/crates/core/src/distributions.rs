//! Exact distributions of duplicated-holdings structure and their
//! comparison with the limiting Poisson laws.
//!
//! Probabilities are exact rationals throughout; floating point appears
//! only when a distribution is compared against a Poisson reference in
//! [`tv_distance`]. Mass the closed formulas deliberately do not cover
//! (reductions with a multiplicity ≥ 3) is carried as an explicit
//! `defect`, never smeared over the support.

use astro_float::BigFloat;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::asymptotics::matchings_lower;
use crate::counts::{binomial_row, CountTable};
use crate::real::RealCtx;

/// Which probability space a law lives on: unlabelled interval orders
/// (uniform over isomorphism classes) or labelled ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    Unlabelled,
    Labelled,
}

/// A finitely supported law with exact rational masses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pmf {
    /// Value of the first entry of `masses` (support is contiguous).
    pub support_offset: usize,
    pub masses: Vec<BigRational>,
    /// Mass intentionally not assigned to the support; zero for
    /// reduction-size laws, ≥ 0 for pair laws.
    pub defect: BigRational,
}

impl Pmf {
    fn assert_valid(&self) {
        let mut total = self.defect.clone();
        assert!(!self.defect.is_negative());
        for m in &self.masses {
            assert!(!m.is_negative());
            total += m;
        }
        assert!(total.is_one(), "masses and defect must sum to 1");
    }

    /// Mass at absolute value `j` (zero off the stored support).
    pub fn mass_at(&self, j: usize) -> BigRational {
        if j < self.support_offset || j >= self.support_offset + self.masses.len() {
            BigRational::zero()
        } else {
            self.masses[j - self.support_offset].clone()
        }
    }
}

/// Law of the reduction size: the number of points left after collapsing
/// every duplicated-holdings class. `P(size = m) = r_m·C(n−1,m−1)/i_n`
/// (unlabelled) or `r_m·m!·S(n,m)/ℓ_n` (labelled), for m = 1..n. These
/// decompositions are exact, so the defect is zero.
pub fn reduction_size_pmf(model: Model, n: usize, table: &CountTable) -> Pmf {
    assert!(n >= 1 && n <= table.max_n());
    let masses: Vec<BigRational> = match model {
        Model::Unlabelled => {
            let row = binomial_row(n - 1);
            let total = table.unlabelled(n);
            (1..=n)
                .map(|m| BigRational::new(table.rigid(m) * &row[m - 1], total.clone()))
                .collect()
        }
        Model::Labelled => {
            let total = table.labelled(n);
            (1..=n)
                .map(|m| BigRational::new(table.rigid(m) * table.surjections(n, m), total.clone()))
                .collect()
        }
    };
    let pmf = Pmf {
        support_offset: 1,
        masses,
        defect: BigRational::zero(),
    };
    pmf.assert_valid();
    pmf
}

/// Law of the duplicated-pair count, on the event that no holdings class
/// has three or more members. `P(j pairs) = r_{n−j}·C(n−j,j)/i_n`
/// (unlabelled) or `r_{n−j}·(n−j)!·matchings/ℓ_n` (labelled), for
/// j = 0..⌊n/2⌋, with `matchings` the parts-≤2 partition count. The mass
/// of orders whose reduction has a class of size ≥ 3 is the defect.
pub fn pair_pmf(model: Model, n: usize, table: &CountTable) -> Pmf {
    assert!(n >= 1 && n <= table.max_n());
    let masses: Vec<BigRational> = (0..=n / 2)
        .map(|j| match model {
            Model::Unlabelled => {
                let ways = &binomial_row(n - j)[j];
                BigRational::new(table.rigid(n - j) * ways, table.unlabelled(n).clone())
            }
            Model::Labelled => {
                let ways = matchings_lower(n, j) * table.factorial(n - j);
                BigRational::new(table.rigid(n - j) * ways, table.labelled(n).clone())
            }
        })
        .collect();
    let assigned = masses.iter().fold(BigRational::zero(), |acc, m| acc + m);
    let pmf = Pmf {
        support_offset: 0,
        masses,
        defect: BigRational::one() - assigned,
    };
    pmf.assert_valid();
    pmf
}

/// Poisson weights `e^{−λ}·λ^j/j!` for j = 0..j_max.
pub fn poisson_pmf(lambda: &BigFloat, j_max: usize, precision_bits: usize) -> Vec<BigFloat> {
    let mut ctx = RealCtx::new(precision_bits);
    let mut out = Vec::with_capacity(j_max + 1);
    let mut weight = ctx.exp(&lambda.neg());
    for j in 0..=j_max {
        out.push(weight.clone());
        weight = ctx.div(&ctx.mul(&weight, lambda), &ctx.from_u64(j as u64 + 1));
    }
    out
}

/// Total-variation distance between an exact law `p` and a reference law
/// given by its first weights `q` (indices are absolute values, starting
/// at 0). `q` must cover p's support. The defect of `p` and the mass of
/// `q` off p's support — both the listed entries and the implied tail
/// `1 − Σq` — count as pure discrepancy.
pub fn tv_distance(p: &Pmf, q: &[BigFloat], precision_bits: usize) -> BigFloat {
    assert!(
        q.len() >= p.support_offset + p.masses.len(),
        "reference law must cover the support"
    );
    let ctx = RealCtx::new(precision_bits);
    let mut sum = ctx.from_u64(0);
    let mut q_total = ctx.from_u64(0);
    for (j, qj) in q.iter().enumerate() {
        q_total = ctx.add(&q_total, qj);
        let pj = ctx.from_ratio(&p.mass_at(j));
        sum = ctx.add(&sum, &ctx.sub(&pj, qj).abs());
    }
    // Tail of the reference law beyond the listed entries (clamped: the
    // entries are rounded and may overshoot 1 by a few ulps).
    let tail = ctx.sub(&ctx.from_u64(1), &q_total);
    if !tail.is_negative() {
        sum = ctx.add(&sum, &tail);
    }
    sum = ctx.add(&sum, &ctx.from_ratio(&p.defect));
    ctx.div(&sum, &ctx.from_u64(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::constants;
    use num_bigint::BigInt;

    fn frac(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn reduction_law_unlabelled_hand_values() {
        let table = CountTable::build(5);
        let pmf = reduction_size_pmf(Model::Unlabelled, 5, &table);
        assert_eq!(pmf.support_offset, 1);
        assert_eq!(
            pmf.masses,
            vec![frac(1, 53), frac(4, 53), frac(12, 53), frac(20, 53), frac(16, 53)]
        );
        assert!(pmf.defect.is_zero());
    }

    #[test]
    fn reduction_law_labelled_hand_values() {
        let table = CountTable::build(4);
        let pmf = reduction_size_pmf(Model::Labelled, 4, &table);
        assert_eq!(
            pmf.masses,
            vec![frac(1, 207), frac(14, 207), frac(72, 207), frac(120, 207)]
        );
    }

    #[test]
    fn reduction_law_sums_to_one_everywhere() {
        let table = CountTable::build(25);
        for n in 1..=25 {
            // assert_valid inside the constructors is the real check.
            reduction_size_pmf(Model::Unlabelled, n, &table);
            reduction_size_pmf(Model::Labelled, n, &table);
        }
    }

    #[test]
    fn pair_law_unlabelled_hand_values() {
        let table = CountTable::build(5);
        let pmf = pair_pmf(Model::Unlabelled, 5, &table);
        assert_eq!(pmf.support_offset, 0);
        assert_eq!(pmf.masses, vec![frac(16, 53), frac(20, 53), frac(6, 53)]);
        assert_eq!(pmf.defect, frac(11, 53));
    }

    #[test]
    fn pair_law_on_two_points_has_no_defect() {
        let table = CountTable::build(2);
        let pmf = pair_pmf(Model::Unlabelled, 2, &table);
        assert_eq!(pmf.masses, vec![frac(1, 2), frac(1, 2)]);
        assert!(pmf.defect.is_zero());
    }

    #[test]
    fn pair_law_labelled_hand_values() {
        let table = CountTable::build(4);
        let pmf = pair_pmf(Model::Labelled, 4, &table);
        assert_eq!(pmf.masses, vec![frac(120, 207), frac(72, 207), frac(6, 207)]);
        // Orders whose reduction holds a class of size ≥ 3: r_2·2!·C(4,3)
        // + r_1·1!·1 = 9 of the 207.
        assert_eq!(pmf.defect, frac(9, 207));
    }

    #[test]
    fn pair_law_on_one_point_is_point_mass() {
        let table = CountTable::build(1);
        for model in [Model::Unlabelled, Model::Labelled] {
            let pmf = pair_pmf(model, 1, &table);
            assert_eq!(pmf.masses, vec![frac(1, 1)]);
            assert!(pmf.defect.is_zero());
        }
    }

    #[test]
    fn pair_mass_at_one_matches_closed_form() {
        let table = CountTable::build(40);
        for n in 2..=40usize {
            let pmf = pair_pmf(Model::Unlabelled, n, &table);
            let lhs = pmf.mass_at(1) * BigRational::from_integer(table.unlabelled(n).clone());
            let rhs = BigRational::from_integer(table.rigid(n - 1) * (n - 1));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn poisson_reference_values() {
        let k = constants(128);
        let ctx = RealCtx::new(128);
        let q6 = poisson_pmf(&k.lambda_unlabelled, 5, 128);
        assert_eq!(q6.len(), 6);
        assert!((ctx.to_f64(&q6[0]) - 0.19302528913989804).abs() < 1e-12);
        let q12 = poisson_pmf(&k.lambda_labelled, 3, 128);
        assert!((ctx.to_f64(&q12[0]) - 0.43934643408123622).abs() < 1e-8);
        // One-step ratio is λ/1.
        let ratio = ctx.to_f64(&ctx.div(&q6[1], &q6[0]));
        assert!((ratio - 1.6449340668482264).abs() < 1e-12);
    }

    #[test]
    fn poisson_mass_concentrates_as_lambda_vanishes() {
        let ctx = RealCtx::new(96);
        let tiny = ctx.from_f64(1e-12);
        let q = poisson_pmf(&tiny, 2, 96);
        assert!((ctx.to_f64(&q[0]) - 1.0).abs() < 1e-11);
    }

    #[test]
    fn tv_distance_of_identical_laws_is_zero() {
        let table = CountTable::build(6);
        let pmf = reduction_size_pmf(Model::Unlabelled, 6, &table);
        let ctx = RealCtx::new(128);
        let mut q = vec![ctx.from_u64(0)];
        for m in &pmf.masses {
            q.push(ctx.from_ratio(m));
        }
        let d = tv_distance(&pmf, &q, 128);
        // All mass accounted for; only rounding of the rationals remains.
        assert!(ctx.to_f64(&d).abs() < 1e-30);
    }

    #[test]
    fn tv_distance_of_point_mass_against_poisson() {
        let k = constants(128);
        let ctx = RealCtx::new(128);
        let point = Pmf {
            support_offset: 0,
            masses: vec![BigRational::one()],
            defect: BigRational::zero(),
        };
        let q = poisson_pmf(&k.lambda_unlabelled, 30, 128);
        let d = tv_distance(&point, &q, 128);
        let want = 1.0 - 0.19302528913989804;
        assert!((ctx.to_f64(&d) - want).abs() < 1e-12);
    }

    #[test]
    fn tv_distance_decreases_with_n() {
        let table = CountTable::build(40);
        let k = constants(128);
        let mut last: Option<f64> = None;
        let ctx = RealCtx::new(128);
        for n in [10usize, 20, 40] {
            let pmf = pair_pmf(Model::Unlabelled, n, &table);
            let q = poisson_pmf(&k.lambda_unlabelled, n, 128);
            let d = ctx.to_f64(&tv_distance(&pmf, &q, 128));
            if let Some(prev) = last {
                assert!(d < prev, "n = {n}: {d} !< {prev}");
            }
            last = Some(d);
        }
    }

    #[test]
    fn defect_halves_roughly_as_n_doubles() {
        let table = CountTable::build(40);
        for (small, large) in [(10usize, 20usize), (20, 40)] {
            for model in [Model::Unlabelled, Model::Labelled] {
                let a = pair_pmf(model, small, &table).defect;
                let b = pair_pmf(model, large, &table).defect;
                assert!(b * BigInt::from(4) <= a * BigInt::from(3), "{model:?} {small}->{large}");
            }
        }
    }
}
