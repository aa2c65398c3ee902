//! Exact counting sequences and the identities tying them together.
//!
//! A [`CountTable`] holds, up to a chosen `max_n`: the unlabelled interval
//! order counts `i_n`, the rigid unlabelled counts `r_n`, the labelled
//! counts `ℓ_n`, the Stirling triangle `S(n,k)`, and a factorial cache.
//! The labelled counts come from the surjection decomposition
//! `ℓ_n = Σ_k r_k · k! · S(n,k)`: a labelled interval order is a rigid
//! unlabelled order on k points together with a surjection from the labels
//! onto its ground set.

use crate::series::{interval_gf, rigid_gf};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Row `m` of Pascal's triangle: `C(m, 0) ..= C(m, m)`.
pub fn binomial_row(m: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(m + 1);
    let mut c = BigInt::one();
    for k in 0..=m {
        row.push(c.clone());
        if k < m {
            c = c * (m - k) / (k + 1);
        }
    }
    row
}

/// Exact sequences `i_n`, `r_n`, `ℓ_n` and the Stirling triangle, all as
/// arbitrary-precision integers. Immutable after [`CountTable::build`].
#[derive(Clone, Debug)]
pub struct CountTable {
    max_n: usize,
    i_seq: Vec<BigInt>,
    r_seq: Vec<BigInt>,
    l_seq: Vec<BigInt>,
    stirling: Vec<Vec<BigInt>>,
    factorials: Vec<BigInt>,
}

impl CountTable {
    /// Computes every sequence up to and including `max_n`.
    ///
    /// `i_n` and `r_n` are read off the generating functions, the Stirling
    /// triangle is filled by the recurrence
    /// `S(n,k) = k·S(n-1,k) + S(n-1,k-1)`, and `ℓ_n` by the surjection
    /// decomposition. Factorials are cached through `2·max_n` so the
    /// `(2n)!/2^n` upper bound can be checked without recomputation.
    pub fn build(max_n: usize) -> Self {
        let i_seq = interval_gf(max_n).coeffs().to_vec();
        let r_seq = rigid_gf(max_n).coeffs().to_vec();

        let mut stirling: Vec<Vec<BigInt>> = Vec::with_capacity(max_n + 1);
        stirling.push(vec![BigInt::one()]);
        for n in 1..=max_n {
            let prev = &stirling[n - 1];
            let mut row = vec![BigInt::zero(); n + 1];
            for k in 1..=n {
                let mut v = if k < prev.len() {
                    &prev[k] * k
                } else {
                    BigInt::zero()
                };
                v += &prev[k - 1];
                row[k] = v;
            }
            stirling.push(row);
        }

        let mut factorials = Vec::with_capacity(2 * max_n + 1);
        factorials.push(BigInt::one());
        for n in 1..=2 * max_n {
            let next = &factorials[n - 1] * n;
            factorials.push(next);
        }

        let mut l_seq = Vec::with_capacity(max_n + 1);
        l_seq.push(BigInt::one());
        for n in 1..=max_n {
            let mut total = BigInt::zero();
            for k in 1..=n {
                total += &r_seq[k] * &factorials[k] * &stirling[n][k];
            }
            l_seq.push(total);
        }

        CountTable {
            max_n,
            i_seq,
            r_seq,
            l_seq,
            stirling,
            factorials,
        }
    }

    /// Largest n covered by the table.
    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// `i_n`: unlabelled interval orders on n points.
    pub fn unlabelled(&self, n: usize) -> &BigInt {
        &self.i_seq[n]
    }

    /// `r_n`: rigid unlabelled interval orders on n points.
    pub fn rigid(&self, n: usize) -> &BigInt {
        &self.r_seq[n]
    }

    /// `ℓ_n`: labelled interval orders on n points.
    pub fn labelled(&self, n: usize) -> &BigInt {
        &self.l_seq[n]
    }

    /// The full `i` sequence, index = n.
    pub fn unlabelled_seq(&self) -> &[BigInt] {
        &self.i_seq
    }

    /// The full `r` sequence, index = n.
    pub fn rigid_seq(&self) -> &[BigInt] {
        &self.r_seq
    }

    /// The full `ℓ` sequence, index = n.
    pub fn labelled_seq(&self) -> &[BigInt] {
        &self.l_seq
    }

    /// Stirling number of the second kind `S(n, k)`; zero when `k > n`.
    pub fn stirling2(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            BigInt::zero()
        } else {
            self.stirling[n][k].clone()
        }
    }

    /// `n!` from the cache (valid through `2·max_n`).
    pub fn factorial(&self, n: usize) -> &BigInt {
        &self.factorials[n]
    }

    /// Number of surjections from an n-set onto a k-set: `k! · S(n,k)`.
    /// Zero when `k > n`.
    pub fn surjections(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            BigInt::zero()
        } else {
            &self.factorials[k] * &self.stirling[n][k]
        }
    }

    /// Checks `i_n = Σ_{m=1}^{n} r_m · C(n-1, m-1)` exactly.
    ///
    /// This is the coefficient-level form of composing the rigid generating
    /// function with `x/(1-x)`: an unlabelled interval order is its rigid
    /// reduction on m points plus a positive multiplicity for each point,
    /// and compositions of n into m parts are counted by `C(n-1, m-1)`.
    pub fn multiplicity_identity_check(&self, n: usize) -> bool {
        assert!(n >= 1 && n <= self.max_n);
        let row = binomial_row(n - 1);
        let mut total = BigInt::zero();
        for m in 1..=n {
            total += &self.r_seq[m] * &row[m - 1];
        }
        total == self.i_seq[n]
    }

    /// Checks the labelled upper bound `ℓ_n ≤ (2n)!/2^n` as exact integers.
    pub fn bgp_upper_check(&self, n: usize) -> bool {
        assert!(n >= 1 && n <= self.max_n);
        // (2n)! has at least n factors of 2, so the shift is exact.
        let bound = &self.factorials[2 * n] >> n;
        self.l_seq[n] <= bound
    }
}

/// `r_n` by the alternating binomial transform of the `i` sequence:
/// `r_n = Σ_{k=0}^{n-1} (-1)^k C(n-1,k) i_{n-k}` for n ≥ 1, and
/// `r_0 = i_0`.
///
/// This is the coefficient-level form of `R(x) = I(x/(1+x))` and is the
/// second, independent route to `r_n` besides the rigid generating
/// function. See [`rigid_by_transform_with_i0`] for the variant with an
/// extra constant term.
pub fn rigid_by_transform(n: usize, i_seq: &[BigInt]) -> BigInt {
    if n == 0 {
        return i_seq[0].clone();
    }
    let row = binomial_row(n - 1);
    let mut total = BigInt::zero();
    for k in 0..n {
        let term = &row[k] * &i_seq[n - k];
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// The transform of [`rigid_by_transform`] with an additional `i_0` term
/// added to the sum.
///
/// This variant disagrees with the rigid generating function by exactly
/// `i_0 = 1` at every n ≥ 1 (already at n = 1 it yields 2, but there is
/// only one poset on one point). It exists so the discrepancy can be
/// demonstrated; the generating function is the arbiter.
pub fn rigid_by_transform_with_i0(n: usize, i_seq: &[BigInt]) -> BigInt {
    if n == 0 {
        return i_seq[0].clone();
    }
    rigid_by_transform(n, i_seq) + &i_seq[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn known_small_counts() {
        let t = CountTable::build(5);
        assert_eq!(t.unlabelled_seq(), &[1, 1, 2, 5, 15, 53].map(big));
        assert_eq!(t.rigid_seq(), &[1, 1, 1, 2, 5, 16].map(big));
        assert_eq!(t.labelled_seq(), &[1, 1, 3, 19, 207, 3451].map(big));
    }

    #[test]
    fn labelled_decomposition_by_hand_at_three() {
        // r_1·1!·S(3,1) + r_2·2!·S(3,2) + r_3·3!·S(3,3) = 1 + 6 + 12
        let t = CountTable::build(3);
        assert_eq!(t.labelled(3), &big(19));
        assert_eq!(t.surjections(3, 1), big(1));
        assert_eq!(t.surjections(3, 2), big(6));
        assert_eq!(t.surjections(3, 3), big(6));
    }

    #[test]
    fn stirling_rows() {
        let t = CountTable::build(10);
        assert_eq!(
            (0..=4).map(|k| t.stirling2(4, k)).collect::<Vec<_>>(),
            [0, 1, 7, 6, 1].map(big)
        );
        assert_eq!(t.stirling2(10, 5), big(42525));
        assert_eq!(t.stirling2(3, 7), big(0));
        for n in 1..=10 {
            assert_eq!(t.stirling2(n, n), big(1));
            assert_eq!(t.stirling2(n, 1), big(1));
            assert_eq!(t.stirling2(n, 0), big(0));
        }
    }

    #[test]
    fn surjection_counts() {
        let t = CountTable::build(6);
        assert_eq!(t.surjections(3, 2), big(6)); // 2^3 - 2
        assert_eq!(t.surjections(4, 2), big(14)); // 2^4 - 2
        for n in 0..=6 {
            assert_eq!(&t.surjections(n, n), t.factorial(n));
        }
        assert_eq!(t.surjections(2, 5), big(0));
    }

    #[test]
    fn transform_matches_gf_route() {
        let t = CountTable::build(40);
        for n in 0..=40 {
            assert_eq!(&rigid_by_transform(n, t.unlabelled_seq()), t.rigid(n));
        }
    }

    #[test]
    fn transform_hand_values() {
        let t = CountTable::build(5);
        let i = t.unlabelled_seq();
        assert_eq!(rigid_by_transform(1, i), big(1));
        // i_4 - 3 i_3 + 3 i_2 - i_1 = 15 - 15 + 6 - 1
        assert_eq!(rigid_by_transform(4, i), big(5));
        // 53 - 4·15 + 6·5 - 4·2 + 1
        assert_eq!(rigid_by_transform(5, i), big(16));
    }

    #[test]
    fn transform_with_i0_is_off_by_one() {
        let t = CountTable::build(20);
        let i = t.unlabelled_seq();
        for n in 1..=20 {
            assert_eq!(rigid_by_transform_with_i0(n, i) - t.rigid(n), big(1));
        }
    }

    #[test]
    fn frozen_larger_values() {
        let t = CountTable::build(20);
        assert_eq!(t.unlabelled(20), &big(1358836180945243));
        assert_eq!(t.rigid(20), &big(295563725628564));
        assert_eq!(t.labelled(10), &big(356046745023));
    }

    #[test]
    fn multiplicity_identity_small() {
        let t = CountTable::build(30);
        for n in 1..=30 {
            assert!(t.multiplicity_identity_check(n));
        }
    }

    #[test]
    fn labelled_upper_bound_small() {
        let t = CountTable::build(30);
        for n in 1..=30 {
            assert!(t.bgp_upper_check(n));
        }
        // Equality at n = 1: 1 ≤ 2!/2.
        assert_eq!(t.factorial(2) >> 1, big(1));
    }

    #[test]
    fn sequences_are_ordered_and_positive() {
        let t = CountTable::build(25);
        for n in 1..=25 {
            assert!(t.rigid(n) <= t.unlabelled(n));
            assert!(t.unlabelled(n) <= t.labelled(n));
            assert!(t.rigid(n) > &big(0));
        }
    }

    #[test]
    fn growth_ratios_increase() {
        // i_n/i_{n-1} and r_n/r_{n-1} increase over the computed range;
        // compared as cross products to stay exact.
        let t = CountTable::build(40);
        for n in 2..40 {
            assert!(t.unlabelled(n + 1) * t.unlabelled(n - 1) > t.unlabelled(n) * t.unlabelled(n));
            assert!(t.rigid(n + 1) * t.rigid(n - 1) > t.rigid(n) * t.rigid(n));
        }
    }

    #[test]
    fn empty_order_convention() {
        let t = CountTable::build(0);
        assert_eq!(t.unlabelled(0), &big(1));
        assert_eq!(t.rigid(0), &big(1));
        assert_eq!(t.labelled(0), &big(1));
    }
}
