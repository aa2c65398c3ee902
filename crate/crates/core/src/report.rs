//! Run configuration, machine-readable reports, and the check suites
//! behind the CLI subcommands.
//!
//! Reports are JSON objects `{config, results, checks}`. Exact integers
//! and rationals are serialized as decimal strings (`"1358…"`, `"16/53"`),
//! high-precision reals as scientific decimal strings; nothing exact is
//! ever re-encoded through machine floats. All output is deterministic
//! for a fixed configuration.

use std::collections::BTreeMap;
use std::collections::HashMap;

use serde::Serialize;

use crate::asymptotics::{
    constants, d1_consistency, extrapolate, scaled_ratio, CountKind,
};
use crate::counts::{binomial_row, rigid_by_transform, rigid_by_transform_with_i0, CountTable};
use crate::distributions::{pair_pmf, poisson_pmf, reduction_size_pmf, tv_distance, Model};
use crate::oracle::{enumerate_posets, oracle_census};
use crate::real::RealCtx;
use crate::series::{interval_gf, rigid_gf, substitute_moebius, Sign};
use crate::tolerances::{D1_RELATIVE_GAP_TOL, FIT_LEADING_REL_TOL, RIGID_PROPORTION_TOL};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Output shape for the `counts` subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
    Bfile,
}

/// Which sequence a bfile emission selects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqKind {
    Unlabelled,
    Rigid,
    Labelled,
}

/// One run's knobs; everything an invocation needs is in here, so equal
/// configs produce bit-identical output.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub max_n: usize,
    pub precision_bits: usize,
    pub format: OutputFormat,
    pub oracle_max_n: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_n: 200,
            precision_bits: 256,
            format: OutputFormat::Csv,
            oracle_max_n: 5,
        }
    }
}

impl RunConfig {
    /// Rejects configurations outside the supported ranges. `max_n = 0`
    /// is allowed and emits the single empty-order row.
    pub fn validate(&self) -> Result<(), String> {
        if self.precision_bits < 64 {
            return Err(format!(
                "precision-bits must be at least 64, got {}",
                self.precision_bits
            ));
        }
        if self.oracle_max_n > 5 {
            return Err(format!(
                "oracle-max-n is hard-capped at 5, got {}",
                self.oracle_max_n
            ));
        }
        Ok(())
    }
}

/// One verification result: what was checked, the identity it rests on,
/// and the outcome.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub paper_anchor: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, anchor: &str, pass: bool, detail: String) -> Self {
        Check {
            name: name.to_string(),
            paper_anchor: anchor.to_string(),
            pass,
            detail,
        }
    }
}

/// The common report envelope.
#[derive(Serialize)]
struct Report<R: Serialize> {
    config: RunConfig,
    results: R,
    checks: Vec<Check>,
}

fn render<R: Serialize>(report: &Report<R>) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("serializable report");
    s.push('\n');
    s
}

#[derive(Clone, Serialize)]
struct CountsRow {
    n: usize,
    i: String,
    r: String,
    l: String,
}

fn counts_rows(table: &CountTable, up_to: usize) -> Vec<CountsRow> {
    (0..=up_to)
        .map(|n| CountsRow {
            n,
            i: table.unlabelled(n).to_string(),
            r: table.rigid(n).to_string(),
            l: table.labelled(n).to_string(),
        })
        .collect()
}

/// `counts` as CSV: header `n,i,r,l`, one row per order.
pub fn counts_csv(table: &CountTable) -> String {
    let mut out = String::from("n,i,r,l\n");
    for n in 0..=table.max_n() {
        out.push_str(&format!(
            "{n},{},{},{}\n",
            table.unlabelled(n),
            table.rigid(n),
            table.labelled(n)
        ));
    }
    out
}

/// `counts` as a b-file: `n value` lines for one selected sequence.
pub fn counts_bfile(table: &CountTable, seq: SeqKind) -> String {
    let mut out = String::new();
    for n in 0..=table.max_n() {
        let v = match seq {
            SeqKind::Unlabelled => table.unlabelled(n),
            SeqKind::Rigid => table.rigid(n),
            SeqKind::Labelled => table.labelled(n),
        };
        out.push_str(&format!("{n} {v}\n"));
    }
    out
}

/// `counts` as a JSON report (empty check list; counts are data, not
/// verification).
pub fn counts_json(cfg: &RunConfig, table: &CountTable) -> String {
    render(&Report {
        config: cfg.clone(),
        results: counts_rows(table, table.max_n()),
        checks: Vec::new(),
    })
}

/// Duplicated-pair class counts from the oracle for one n: per pair count
/// j, the number of isomorphism classes overall and the number whose
/// holdings classes all have size ≤ 2.
fn oracle_pair_classes(n: usize) -> (BTreeMap<usize, u64>, BTreeMap<usize, u64>) {
    let posets = enumerate_posets(n).expect("n capped by RunConfig");
    let mut seen: HashMap<u64, ()> = HashMap::new();
    let mut all: BTreeMap<usize, u64> = BTreeMap::new();
    let mut small_parts: BTreeMap<usize, u64> = BTreeMap::new();
    for p in &posets {
        if !p.is_interval_order() {
            continue;
        }
        if seen.insert(p.canonical_form(), ()).is_some() {
            continue;
        }
        let sizes = p.holdings_class_sizes();
        let pairs: usize = sizes.iter().map(|c| c * (c - 1) / 2).sum();
        *all.entry(pairs).or_insert(0) += 1;
        if sizes.iter().all(|&c| c <= 2) {
            *small_parts.entry(pairs).or_insert(0) += 1;
        }
    }
    (all, small_parts)
}

/// The full verification suite: oracle cross-checks up to
/// `cfg.oracle_max_n`, then the exact identities over the whole table.
/// `transform_with_i0` switches the alternating transform to the variant
/// with the extra order-0 term, which fails by exactly 1 at every n ≥ 1.
pub fn verify_checks(cfg: &RunConfig, table: &CountTable, transform_with_i0: bool) -> Vec<Check> {
    let mut checks = Vec::new();
    let oracle_limit = cfg.oracle_max_n.min(cfg.max_n);

    // Oracle census against the formula-side counts.
    {
        let mut pass = true;
        let mut detail = String::new();
        for n in 0..=oracle_limit {
            let census = oracle_census(n).expect("n capped by RunConfig");
            let want = (
                table.labelled(n),
                table.unlabelled(n),
                table.rigid(n),
            );
            let got = (
                &BigInt::from(census.labelled_interval),
                &BigInt::from(census.unlabelled_interval),
                &BigInt::from(census.rigid_unlabelled),
            );
            if got != want {
                pass = false;
                detail = format!(
                    "n = {n}: oracle (l, i, r) = ({}, {}, {}), formulas give ({}, {}, {})",
                    got.0, got.1, got.2, want.0, want.1, want.2
                );
                break;
            }
        }
        if pass {
            detail = format!("exhaustive enumeration agrees for n = 0..={oracle_limit}");
        }
        checks.push(Check::new(
            "oracle census matches exact counts",
            "census_n = (l_n, i_n, r_n)",
            pass,
            detail,
        ));
    }

    // Oracle pair histogram against the pair-count formula.
    {
        let mut pass = true;
        let mut detail = String::new();
        'outer: for n in 0..=oracle_limit {
            let (all, small_parts) = oracle_pair_classes(n);
            for j in 0..=n / 2 {
                let formula = table.rigid(n - j) * &binomial_row(n - j)[j];
                let counted = BigInt::from(small_parts.get(&j).copied().unwrap_or(0));
                let total = BigInt::from(all.get(&j).copied().unwrap_or(0));
                if counted != formula || total < formula {
                    pass = false;
                    detail = format!(
                        "n = {n}, j = {j}: formula {formula}, oracle parts-≤2 classes {counted}, all classes {total}"
                    );
                    break 'outer;
                }
            }
        }
        if pass {
            detail = format!(
                "class counts with all holdings classes ≤ 2 match for n = 0..={oracle_limit}"
            );
        }
        checks.push(Check::new(
            "oracle pair histogram matches pair formula",
            "#{classes: j pairs, parts <= 2} = r_(n-j)·C(n-j,j)",
            pass,
            detail,
        ));
    }

    let interval = interval_gf(cfg.max_n);
    let rigid = rigid_gf(cfg.max_n);

    // The two substitutions map each generating function onto the other.
    {
        let from_rigid = substitute_moebius(&rigid, Sign::Minus);
        let pass = from_rigid == interval;
        checks.push(Check::new(
            "rigid gf substituted at x/(1-x) gives interval gf",
            "I(x) = R(x/(1-x))",
            pass,
            if pass {
                format!("all coefficients equal through order {}", cfg.max_n)
            } else {
                first_coeff_mismatch(from_rigid.coeffs(), interval.coeffs())
            },
        ));
    }
    {
        let from_interval = substitute_moebius(&interval, Sign::Plus);
        let pass = from_interval == rigid;
        checks.push(Check::new(
            "interval gf substituted at x/(1+x) gives rigid gf",
            "R(x) = I(x/(1+x))",
            pass,
            if pass {
                format!("all coefficients equal through order {}", cfg.max_n)
            } else {
                first_coeff_mismatch(from_interval.coeffs(), rigid.coeffs())
            },
        ));
    }
    {
        let round_trip = substitute_moebius(&substitute_moebius(&interval, Sign::Plus), Sign::Minus);
        let pass = round_trip == interval;
        checks.push(Check::new(
            "substitution round trip is the identity",
            "x/(1+x) then x/(1-x) composes to x",
            pass,
            if pass {
                format!("interval gf reproduced through order {}", cfg.max_n)
            } else {
                first_coeff_mismatch(round_trip.coeffs(), interval.coeffs())
            },
        ));
    }

    // Alternating binomial transform of i against the rigid gf.
    {
        let (name, anchor) = if transform_with_i0 {
            (
                "alternating transform with order-0 term matches rigid gf",
                "r_n = i_0 + sum_k (-1)^k C(n-1,k) i_(n-k)",
            )
        } else {
            (
                "alternating transform matches rigid gf",
                "r_n = sum_k (-1)^k C(n-1,k) i_(n-k)",
            )
        };
        let mut pass = true;
        let mut detail = String::new();
        for n in 0..=cfg.max_n {
            let via_transform = if transform_with_i0 {
                rigid_by_transform_with_i0(n, table.unlabelled_seq())
            } else {
                rigid_by_transform(n, table.unlabelled_seq())
            };
            if &via_transform != table.rigid(n) {
                pass = false;
                let discrepancy = &via_transform - table.rigid(n);
                detail = format!(
                    "n = {n}: transform gives {via_transform}, generating function gives {} (discrepancy {discrepancy})",
                    table.rigid(n)
                );
                break;
            }
        }
        if pass {
            detail = format!("transform agrees for n = 0..={}", cfg.max_n);
        }
        checks.push(Check::new(name, anchor, pass, detail));
    }

    // Multiplicity identity.
    {
        let mut pass = true;
        let mut detail = String::new();
        for n in 1..=cfg.max_n {
            if !table.multiplicity_identity_check(n) {
                pass = false;
                detail = format!("n = {n}: sum over reductions misses i_{n}");
                break;
            }
        }
        if pass {
            detail = format!("identity holds for n = 1..={}", cfg.max_n);
        }
        checks.push(Check::new(
            "multiplicity identity",
            "i_n = sum_m r_m·C(n-1,m-1)",
            pass,
            detail,
        ));
    }

    // Labelled upper bound.
    {
        let mut pass = true;
        let mut detail = String::new();
        for n in 1..=cfg.max_n {
            if !table.bgp_upper_check(n) {
                pass = false;
                detail = format!("n = {n}: l_{n} exceeds (2n)!/2^n");
                break;
            }
        }
        if pass {
            detail = format!("bound holds for n = 1..={}", cfg.max_n);
        }
        checks.push(Check::new(
            "labelled upper bound",
            "l_n <= (2n)!/2^n",
            pass,
            detail,
        ));
    }

    checks
}

fn first_coeff_mismatch(got: &[BigInt], want: &[BigInt]) -> String {
    for (k, (g, w)) in got.iter().zip(want).enumerate() {
        if g != w {
            return format!("first mismatch at order {k}: got {g}, want {w}");
        }
    }
    "no mismatch found".to_string()
}

/// A finished `verify` run: the rendered report and the name of the first
/// failing check, if any.
pub struct VerifyOutcome {
    pub json: String,
    pub first_failure: Option<String>,
}

/// Builds the table, runs every check, and renders the report. The
/// outcome reports failures; it never aborts early.
pub fn verify_report(cfg: &RunConfig, transform_with_i0: bool) -> VerifyOutcome {
    let table = CountTable::build(cfg.max_n);
    let checks = verify_checks(cfg, &table, transform_with_i0);
    let first_failure = checks.iter().find(|c| !c.pass).map(|c| c.name.clone());
    let results = counts_rows(&table, cfg.oracle_max_n.min(cfg.max_n));
    let json = render(&Report {
        config: cfg.clone(),
        results,
        checks,
    });
    VerifyOutcome {
        json,
        first_failure,
    }
}

#[derive(Serialize)]
struct ConstantsOut {
    precision_bits: usize,
    c0: String,
    d0: String,
    e0: String,
    exp_neg_pi2_over_6: String,
    lambda_unlabelled: String,
    lambda_labelled: String,
}

#[derive(Serialize)]
struct RatioOut {
    kind: &'static str,
    n: usize,
    value: String,
}

#[derive(Serialize)]
struct FitOut {
    kind: &'static str,
    a0: String,
    a1: String,
    a2: String,
    residual: String,
    sample_points: Vec<usize>,
}

#[derive(Serialize)]
struct D1Out {
    predicted_d1: String,
    observed_d1: String,
    relative_gap: String,
}

#[derive(Serialize)]
struct ProportionRow {
    n: usize,
    /// r_n/i_n as an exact rational.
    ratio: String,
    /// The same value as a decimal.
    value: String,
    /// |value − e^{−π²/6}|.
    gap_to_limit: String,
}

#[derive(Serialize)]
struct AsymptResults {
    constants: ConstantsOut,
    scaled_ratios: Vec<RatioOut>,
    fits: Vec<FitOut>,
    d1_consistency: D1Out,
    ratio_rigid_over_unlabelled: Vec<ProportionRow>,
}

fn kind_name(kind: CountKind) -> &'static str {
    match kind {
        CountKind::Unlabelled => "unlabelled",
        CountKind::Rigid => "rigid",
        CountKind::Labelled => "labelled",
    }
}

/// Convergence report: constants, scaled ratios and fits at the sample
/// points `{max_n/2, 3·max_n/4, max_n}`, the first-order cross-check, and
/// the rigid-proportion table.
pub fn asympt_report(cfg: &RunConfig) -> Result<String, String> {
    let table = CountTable::build(cfg.max_n);
    let k = constants(cfg.precision_bits);
    let mut fmt = RealCtx::new(cfg.precision_bits);

    let points = vec![cfg.max_n / 2, 3 * cfg.max_n / 4, cfg.max_n];
    let mut distinct = points.clone();
    distinct.dedup();
    if points[0] == 0 || distinct.len() != 3 {
        return Err(format!(
            "max-n {} leaves no three distinct positive sample points",
            cfg.max_n
        ));
    }

    let kinds = [CountKind::Unlabelled, CountKind::Rigid, CountKind::Labelled];
    let mut scaled_ratios = Vec::new();
    for kind in kinds {
        for &n in &points {
            let v = scaled_ratio(kind, n, &table, cfg.precision_bits);
            scaled_ratios.push(RatioOut {
                kind: kind_name(kind),
                n,
                value: fmt.format_dec(&v),
            });
        }
    }

    let mut fits = Vec::new();
    let mut fit_results = Vec::new();
    for kind in kinds {
        let fit = extrapolate(kind, &points, &table, cfg.precision_bits)
            .map_err(|e| e.to_string())?;
        fits.push(FitOut {
            kind: kind_name(kind),
            a0: fmt.format_dec(&fit.a0),
            a1: fmt.format_dec(&fit.a1),
            a2: fmt.format_dec(&fit.a2),
            residual: fmt.format_dec(&fit.residual),
            sample_points: fit.sample_points.clone(),
        });
        fit_results.push(fit);
    }

    let d1 = d1_consistency(&fit_results[0], &fit_results[1], &k);

    let mut ratio_rigid_over_unlabelled = Vec::new();
    let mut proportion_gaps = Vec::new();
    for &n in &points {
        let exact = BigRational::new(table.rigid(n).clone(), table.unlabelled(n).clone());
        let value = fmt.from_ratio(&exact);
        let gap = fmt.sub(&value, &k.exp_neg_pi2_over_6).abs();
        ratio_rigid_over_unlabelled.push(ProportionRow {
            n,
            ratio: format!("{exact}"),
            value: fmt.format_dec(&value),
            gap_to_limit: fmt.format_dec(&gap),
        });
        proportion_gaps.push(fmt.to_f64(&gap));
    }

    let mut checks = Vec::new();
    for (fit, (kind, limit)) in fit_results.iter().zip([
        ("unlabelled", &k.c0),
        ("rigid", &k.d0),
        ("labelled", &k.e0),
    ]) {
        let gap = fmt.to_f64(&fmt.rel_gap(&fit.a0, limit));
        checks.push(Check::new(
            &format!("fitted {kind} leading coefficient matches its limit"),
            match kind {
                "unlabelled" => "C_0 = 12·sqrt(3)/pi^(5/2)·e^(pi^2/12)",
                "rigid" => "D_0 = 12·sqrt(3)/(pi^(5/2)·e^(pi^2/12))",
                _ => "E_0 = 12·sqrt(3)/pi^(5/2)",
            },
            gap < FIT_LEADING_REL_TOL,
            format!("relative gap {gap:.3e} against tolerance {FIT_LEADING_REL_TOL:.1e}"),
        ));
    }
    {
        let gap = fmt.to_f64(&d1.relative_gap);
        checks.push(Check::new(
            "first-order coefficients are mutually consistent",
            "D_1 = (C_1 + pi^2/4·C_0)·e^(-pi^2/6)",
            gap < D1_RELATIVE_GAP_TOL,
            format!("relative gap {gap:.3e} against tolerance {D1_RELATIVE_GAP_TOL:.1e}"),
        ));
    }
    {
        let last = proportion_gaps[2];
        let mid = proportion_gaps[0];
        let pass = last < RIGID_PROPORTION_TOL && last < mid;
        checks.push(Check::new(
            "rigid proportion approaches its limit",
            "r_n/i_n -> e^(-pi^2/6)",
            pass,
            format!(
                "gap {last:.3e} at n = {} (tolerance {RIGID_PROPORTION_TOL:.1e}), {mid:.3e} at n = {}",
                points[2], points[0]
            ),
        ));
    }

    let results = AsymptResults {
        constants: ConstantsOut {
            precision_bits: k.precision_bits,
            c0: fmt.format_dec(&k.c0),
            d0: fmt.format_dec(&k.d0),
            e0: fmt.format_dec(&k.e0),
            exp_neg_pi2_over_6: fmt.format_dec(&k.exp_neg_pi2_over_6),
            lambda_unlabelled: fmt.format_dec(&k.lambda_unlabelled),
            lambda_labelled: fmt.format_dec(&k.lambda_labelled),
        },
        scaled_ratios,
        fits,
        d1_consistency: D1Out {
            predicted_d1: fmt.format_dec(&d1.predicted_d1),
            observed_d1: fmt.format_dec(&d1.observed_d1),
            relative_gap: fmt.format_dec(&d1.relative_gap),
        },
        ratio_rigid_over_unlabelled,
    };

    Ok(render(&Report {
        config: cfg.clone(),
        results,
        checks,
    }))
}

fn rational_str(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[derive(Serialize)]
struct DistResults {
    model: &'static str,
    n: usize,
    support_offset: usize,
    /// Pair-count masses as exact rationals, j = 0..⌊n/2⌋.
    masses: Vec<String>,
    defect: String,
    /// Reduction-size masses as exact rationals, m = 1..n.
    reduction_masses: Vec<String>,
    poisson_lambda: String,
    /// Poisson weights for j = 0..n.
    poisson: Vec<String>,
    tv_distance: String,
}

/// Distribution report for one model and one n: the exact pair law, its
/// Poisson reference, the distance between them, and the reduction-size
/// law. The trend check recomputes the distance at {50, 100, 200} (capped
/// by max_n).
pub fn dist_report(cfg: &RunConfig, model: Model, n: usize) -> Result<String, String> {
    if n < 1 || n > cfg.max_n {
        return Err(format!("n must be in 1..=max-n, got {n}"));
    }
    let table = CountTable::build(cfg.max_n);
    let k = constants(cfg.precision_bits);
    let mut fmt = RealCtx::new(cfg.precision_bits);
    let lambda = match model {
        Model::Unlabelled => &k.lambda_unlabelled,
        Model::Labelled => &k.lambda_labelled,
    };

    let pmf = pair_pmf(model, n, &table);
    let reduction = reduction_size_pmf(model, n, &table);
    let q = poisson_pmf(lambda, n, cfg.precision_bits);
    let tv = tv_distance(&pmf, &q, cfg.precision_bits);

    let model_name = match model {
        Model::Unlabelled => "unlabelled",
        Model::Labelled => "labelled",
    };

    let trend_points: Vec<usize> = [50usize, 100, 200]
        .into_iter()
        .filter(|&m| m <= cfg.max_n)
        .collect();
    let mut checks = Vec::new();
    if trend_points.len() >= 2 {
        let mut distances = Vec::new();
        for &m in &trend_points {
            let p = pair_pmf(model, m, &table);
            let qm = poisson_pmf(lambda, m, cfg.precision_bits);
            distances.push(fmt.to_f64(&tv_distance(&p, &qm, cfg.precision_bits)));
        }
        let pass = distances.windows(2).all(|w| w[1] < w[0]);
        let listed: Vec<String> = trend_points
            .iter()
            .zip(&distances)
            .map(|(m, d)| format!("n = {m}: {d:.6}"))
            .collect();
        checks.push(Check::new(
            "trend",
            "pair count -> Poisson(lambda)",
            pass,
            format!(
                "total-variation distance to the Poisson law decreases: {}",
                listed.join(", ")
            ),
        ));
    } else {
        checks.push(Check::new(
            "trend",
            "pair count -> Poisson(lambda)",
            true,
            format!(
                "only {} trend point(s) within max-n = {}; trend vacuous",
                trend_points.len(),
                cfg.max_n
            ),
        ));
    }

    let results = DistResults {
        model: model_name,
        n,
        support_offset: pmf.support_offset,
        masses: pmf.masses.iter().map(rational_str).collect(),
        defect: rational_str(&pmf.defect),
        reduction_masses: reduction.masses.iter().map(rational_str).collect(),
        poisson_lambda: fmt.format_dec(lambda),
        poisson: q.iter().map(|w| fmt.format_dec(w)).collect(),
        tv_distance: fmt.format_dec(&tv),
    };

    Ok(render(&Report {
        config: cfg.clone(),
        results,
        checks,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_cfg(max_n: usize) -> RunConfig {
        RunConfig {
            max_n,
            precision_bits: 128,
            format: OutputFormat::Json,
            oracle_max_n: 4,
        }
    }

    #[test]
    fn config_validation() {
        assert!(RunConfig::default().validate().is_ok());
        let mut cfg = RunConfig::default();
        cfg.precision_bits = 32;
        assert!(cfg.validate().is_err());
        let mut cfg = RunConfig::default();
        cfg.oracle_max_n = 6;
        assert!(cfg.validate().is_err());
        let mut cfg = RunConfig::default();
        cfg.max_n = 0;
        assert!(cfg.validate().is_ok());
    }

    #[test]
    fn csv_shape() {
        let table = CountTable::build(4);
        let csv = counts_csv(&table);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,i,r,l");
        assert_eq!(lines[1], "0,1,1,1");
        assert_eq!(lines[4], "3,5,2,19");
        assert_eq!(lines[5], "4,15,5,207");
    }

    #[test]
    fn bfile_shape() {
        let table = CountTable::build(3);
        assert_eq!(
            counts_bfile(&table, SeqKind::Unlabelled),
            "0 1\n1 1\n2 2\n3 5\n"
        );
        assert_eq!(counts_bfile(&table, SeqKind::Labelled), "0 1\n1 1\n2 3\n3 19\n");
    }

    #[test]
    fn verify_clean_run_passes() {
        let cfg = small_cfg(12);
        let outcome = verify_report(&cfg, false);
        assert!(outcome.first_failure.is_none(), "{}", outcome.json);
        let parsed: serde_json::Value = serde_json::from_str(&outcome.json).unwrap();
        assert!(parsed["checks"].as_array().unwrap().len() >= 7);
        assert_eq!(parsed["results"][0]["i"], "1");
    }

    #[test]
    fn verify_flags_the_extra_constant_term() {
        let cfg = small_cfg(8);
        let outcome = verify_report(&cfg, true);
        assert_eq!(
            outcome.first_failure.as_deref(),
            Some("alternating transform with order-0 term matches rigid gf")
        );
        assert!(outcome.json.contains("discrepancy 1"));
    }

    #[test]
    fn verify_is_deterministic() {
        let cfg = small_cfg(10);
        let a = verify_report(&cfg, false);
        let b = verify_report(&cfg, false);
        assert_eq!(a.json, b.json);
    }

    #[test]
    fn verify_with_empty_oracle_range_still_passes() {
        let mut cfg = small_cfg(6);
        cfg.oracle_max_n = 0;
        let outcome = verify_report(&cfg, false);
        assert!(outcome.first_failure.is_none());
    }

    #[test]
    fn asympt_report_is_well_formed() {
        let cfg = small_cfg(60);
        let json = asympt_report(&cfg).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["results"]["fits"].as_array().unwrap().len(), 3);
        let pts: Vec<u64> = parsed["results"]["fits"][0]["sample_points"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_u64().unwrap())
            .collect();
        assert_eq!(pts, vec![30, 45, 60]);
        // Constants render as decimal scientific strings.
        let c0 = parsed["results"]["constants"]["c0"].as_str().unwrap();
        assert!(c0.starts_with("2.70433249006"), "{c0}");
    }

    #[test]
    fn asympt_rejects_degenerate_sample_points() {
        let cfg = small_cfg(2);
        assert!(asympt_report(&cfg).is_err());
    }

    #[test]
    fn dist_report_matches_hand_pmf() {
        let cfg = small_cfg(10);
        let json = dist_report(&cfg, Model::Unlabelled, 5).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        let masses: Vec<&str> = parsed["results"]["masses"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap())
            .collect();
        assert_eq!(masses, vec!["16/53", "20/53", "6/53"]);
        assert_eq!(parsed["results"]["defect"], "11/53");
        assert_eq!(parsed["results"]["model"], "unlabelled");
        // Vacuous trend at this max_n still reports a passing check.
        assert_eq!(parsed["checks"][0]["pass"], true);
    }

    #[test]
    fn dist_report_rejects_out_of_range_n() {
        let cfg = small_cfg(10);
        assert!(dist_report(&cfg, Model::Labelled, 11).is_err());
        assert!(dist_report(&cfg, Model::Labelled, 0).is_err());
    }
}
