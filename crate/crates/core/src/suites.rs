//! Randomized and structured property suites behind `verify-theorems`.
//!
//! Each suite evaluates named checks over seeded trials and structured
//! fixtures. Trials run concurrently; every trial draws from its own RNG
//! stream and results are collected in trial order, so the outcome depends
//! only on the seed and parameters.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    binormal_equivalents, centered_order, is_binormal, is_n_centered_definitional, mp_centered_check,
    product_polar, product_polar_transfer,
};
use crate::counterexample::{
    build_truncated, expected_commutator_pattern, predicted_polar, v_matrix, v_power_entries, ShiftSpec,
};
use crate::decomp::{abs_value, moore_penrose, mp_polar_parts, polar_decompose, verify_polar, PolarReport};
use crate::error::{Error, Result};
use crate::linalg::{
    approx_equal, commutes, equality_residual, fractional_power_psd, herm_eig, is_psd, range_projection,
    Operator, Residual, ToleranceConfig,
};
use crate::random::{self, trial_rng, Family, TrialRng};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Polar,
    CenteredCriterion,
    ProductPolar,
    PolarTransfer,
    Aluthge,
    MoorePenrose,
    Counterexample,
    PowerEntries,
    Commutation,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Polar,
        Suite::CenteredCriterion,
        Suite::ProductPolar,
        Suite::PolarTransfer,
        Suite::Aluthge,
        Suite::MoorePenrose,
        Suite::Counterexample,
        Suite::PowerEntries,
        Suite::Commutation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Polar => "polar",
            Suite::CenteredCriterion => "centered-criterion",
            Suite::ProductPolar => "product-polar",
            Suite::PolarTransfer => "polar-transfer",
            Suite::Aluthge => "aluthge",
            Suite::MoorePenrose => "moore-penrose",
            Suite::Counterexample => "counterexample",
            Suite::PowerEntries => "power-entries",
            Suite::Commutation => "commutation",
        }
    }

    /// Parses a suite name, or `all` for every suite.
    pub fn parse_selection(name: &str) -> Result<Vec<Suite>> {
        if name == "all" {
            Ok(Suite::ALL.to_vec())
        } else {
            Ok(vec![name.parse()?])
        }
    }

    /// Whether the suite draws random trials (the others are fixed
    /// computations run once).
    pub fn is_randomized(self) -> bool {
        !matches!(self, Suite::Counterexample | Suite::PowerEntries)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TrialConfig {
    pub seed: u64,
    /// Largest dimension drawn; trial dimensions are uniform in `2..=max_dim`.
    pub max_dim: usize,
    pub trials: usize,
}

impl TrialConfig {
    pub const DIM_RANGE: std::ops::RangeInclusive<usize> = 2..=12;

    pub fn new(seed: u64, max_dim: usize, trials: usize) -> Result<Self> {
        if !Self::DIM_RANGE.contains(&max_dim) {
            return Err(Error::InvalidParameter(format!(
                "dimension must lie in {}..={}, got {max_dim}",
                Self::DIM_RANGE.start(),
                Self::DIM_RANGE.end()
            )));
        }
        if trials == 0 {
            return Err(Error::InvalidParameter("at least one trial is required".into()));
        }
        Ok(Self { seed, max_dim, trials })
    }
}

/// One evaluated check inside a trial.
#[derive(Debug, Clone)]
pub(crate) struct Check {
    pub(crate) name: String,
    pub(crate) residual: Residual,
}

impl Check {
    fn residual(name: impl Into<String>, residual: Residual) -> Self {
        Self { name: name.into(), residual }
    }

    /// A boolean check: value 0 against bound 0 when it holds, 1 otherwise.
    fn flag(name: impl Into<String>, holds: bool) -> Self {
        Self::residual(name, Residual::new(if holds { 0.0 } else { 1.0 }, 0.0))
    }
}

fn ratio(r: &Residual) -> f64 {
    if r.passes() && r.value == 0.0 {
        0.0
    } else if r.bound > 0.0 {
        r.value / r.bound
    } else {
        f64::INFINITY
    }
}

/// Aggregate of one named check over all trials.
#[derive(Debug, Clone, Serialize)]
pub struct CheckSummary {
    pub name: String,
    pub trials: usize,
    pub failures: usize,
    /// The residual with the largest `value / bound`.
    pub worst: Residual,
    /// Label of the first failing trial, if any.
    pub first_failure: Option<String>,
}

impl CheckSummary {
    pub fn passes(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteOutcome {
    pub suite: Suite,
    /// Number of evaluated items (random trials plus structured fixtures).
    pub items: usize,
    pub checks: Vec<CheckSummary>,
}

impl SuiteOutcome {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(CheckSummary::passes)
    }

    pub fn check(&self, name: &str) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn aggregate(suite: Suite, items: Vec<(String, Vec<Check>)>) -> SuiteOutcome {
    let count = items.len();
    let mut checks: Vec<CheckSummary> = Vec::new();
    for (label, item) in items {
        for check in item {
            let index = match checks.iter().position(|c| c.name == check.name) {
                Some(i) => i,
                None => {
                    checks.push(CheckSummary {
                        name: check.name.clone(),
                        trials: 0,
                        failures: 0,
                        worst: check.residual,
                        first_failure: None,
                    });
                    checks.len() - 1
                }
            };
            let summary = &mut checks[index];
            summary.trials += 1;
            if ratio(&check.residual) > ratio(&summary.worst) {
                summary.worst = check.residual;
            }
            if !check.residual.passes() {
                summary.failures += 1;
                summary.first_failure.get_or_insert_with(|| label.clone());
            }
        }
    }
    SuiteOutcome { suite, items: count, checks }
}

fn stream(suite: Suite, trial: usize) -> u64 {
    let index = Suite::ALL.iter().position(|&s| s == suite).unwrap_or(0) as u64;
    (index << 32) | trial as u64
}

fn random_dim(rng: &mut TrialRng, max_dim: usize) -> usize {
    rng.random_range(2..=max_dim)
}

/// Operators evaluated once per run next to the random trials.
pub fn structured_fixtures() -> Vec<(String, Operator)> {
    let mut rng = trial_rng(0, u64::MAX);
    let real = |rows, cols, entries: &[f64]| Operator::from_real(rows, cols, entries).expect("finite fixture");
    let mut out = vec![
        ("zero".to_string(), Operator::zeros(3, 3)),
        ("identity".to_string(), Operator::identity(4)),
        ("nilpotent-jordan".to_string(), real(2, 2, &[0.0, 1.0, 0.0, 0.0])),
        ("jordan".to_string(), real(2, 2, &[1.0, 1.0, 0.0, 1.0])),
        ("diagonal-deficient".to_string(), Operator::diag_real(&[2.0, 0.0, 1.0])),
        ("normal".to_string(), random::normal(&mut rng, 4)),
        ("unitary".to_string(), random::unitary(&mut rng, 4)),
        (
            "weighted-shift".to_string(),
            random::weighted_shift(&[1.0, 2.0, 0.5, 3.0].map(|w| w.into())),
        ),
        ("rank-deficient".to_string(), random::rank_deficient(&mut rng, 5, 2)),
    ];
    for n in 2..=8 {
        let spec = ShiftSpec::recipe(n, None).expect("valid recipe");
        out.push((format!("shift-n{n}"), build_truncated(&spec).expect("valid recipe")));
    }
    out
}

/// Runs one suite. Randomized suites evaluate `trials` seeded items (plus
/// the structured fixtures where relevant); fixed suites ignore the trial
/// parameters.
pub fn run_suite(suite: Suite, trials: &TrialConfig, cfg: &ToleranceConfig) -> Result<SuiteOutcome> {
    cfg.validate()?;
    let items: Vec<(String, Vec<Check>)> = match suite {
        Suite::Counterexample => (2..=8)
            .into_par_iter()
            .map(|n| Ok((format!("n{n}"), counterexample_checks(&ShiftSpec::recipe(n, None)?, cfg)?)))
            .collect::<Result<_>>()?,
        Suite::PowerEntries => vec![("closed-forms".into(), power_entry_checks()?)],
        _ => {
            let mut items: Vec<(String, Vec<Check>)> = (0..trials.trials)
                .into_par_iter()
                .map(|i| {
                    let mut rng = trial_rng(trials.seed, stream(suite, i));
                    Ok((format!("trial {i}"), random_trial(suite, &mut rng, trials.max_dim, cfg)?))
                })
                .collect::<Result<_>>()?;
            if matches!(suite, Suite::CenteredCriterion | Suite::MoorePenrose) {
                let fixtures: Vec<(String, Vec<Check>)> = structured_fixtures()
                    .into_par_iter()
                    .map(|(name, t)| Ok((format!("fixture {name}"), operator_checks(suite, &t, cfg)?)))
                    .collect::<Result<_>>()?;
                items.extend(fixtures);
            }
            items
        }
    };
    Ok(aggregate(suite, items))
}

pub fn run_suites(suites: &[Suite], trials: &TrialConfig, cfg: &ToleranceConfig) -> Result<Vec<SuiteOutcome>> {
    suites.iter().map(|&s| run_suite(s, trials, cfg)).collect()
}

fn random_trial(suite: Suite, rng: &mut TrialRng, max_dim: usize, cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    match suite {
        Suite::Polar => polar_trial(rng, max_dim, cfg),
        Suite::CenteredCriterion | Suite::MoorePenrose => {
            let dim = random_dim(rng, max_dim);
            let (_, t) = random::mixed(rng, dim);
            operator_checks(suite, &t, cfg)
        }
        Suite::ProductPolar => product_trial(rng, max_dim, cfg),
        Suite::PolarTransfer => transfer_trial(rng, max_dim, cfg),
        Suite::Aluthge => aluthge_trial(rng, max_dim, cfg),
        Suite::Commutation => commutation_trial(rng, max_dim, cfg),
        Suite::Counterexample | Suite::PowerEntries => unreachable!("fixed suites have no random trials"),
    }
}

fn operator_checks(suite: Suite, t: &Operator, cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    match suite {
        Suite::CenteredCriterion => centered_checks(t, cfg),
        Suite::MoorePenrose => mp_checks(t, cfg),
        _ => unreachable!("only operator suites take fixtures"),
    }
}

fn push_report(out: &mut Vec<Check>, prefix: &str, report: &PolarReport) {
    for c in &report.checks {
        out.push(Check::residual(format!("{prefix}{}", c.name), c.residual));
    }
}

/// The residual of a report with the largest `value / bound`.
fn worst_of(report: &PolarReport) -> Residual {
    report
        .checks
        .iter()
        .map(|c| c.residual)
        .max_by(|a, b| ratio(a).total_cmp(&ratio(b)))
        .unwrap_or(Residual::new(0.0, 0.0))
}

fn polar_trial(rng: &mut TrialRng, max_dim: usize, cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    let rows = random_dim(rng, max_dim);
    let t = if rng.random_bool(0.3) {
        let cols = random_dim(rng, max_dim);
        let rank = rng.random_range(1..=rows.min(cols));
        &random::gaussian(rng, rows, rank) * &random::gaussian(rng, rank, cols)
    } else {
        random::mixed(rng, rows).1
    };
    let parts = polar_decompose(&t, cfg);
    let mut out = Vec::new();
    push_report(&mut out, "", &verify_polar(&t, &parts, cfg)?);
    Ok(out)
}

const CENTERED_MAX: usize = 6;

fn centered_checks(t: &Operator, cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    let report = centered_order(t, CENTERED_MAX, cfg)?;
    let definitional = is_n_centered_definitional(t, CENTERED_MAX, cfg)?;
    let by_definition = |n: usize| definitional.steps[..n].iter().all(|s| s.passes());
    let orders_agree = (1..=CENTERED_MAX).all(|n| by_definition(n) == (n <= report.verified_order));
    Ok(vec![
        Check::flag("oracle_agreement", report.oracle_agrees),
        Check::flag("order_agreement", orders_agree),
        Check::flag("binormal_agreement", report.binormal == is_binormal(t, cfg)?.binormal),
    ])
}

/// `S = |S*| W` with `|S*|` diagonal in an eigenbasis of `|T|`, so that
/// `[|T|, |S*|] = 0`.
fn commuting_moduli_partner(rng: &mut TrialRng, t: &Operator, cfg: &ToleranceConfig) -> Result<Operator> {
    let dim = t.rows();
    let q = herm_eig(&abs_value(t, cfg), cfg)?.eigenvectors;
    let values: Vec<f64> = (0..dim)
        .map(|_| if rng.random_bool(0.25) { 0.0 } else { rng.random_range(0.1..3.0) })
        .collect();
    let s_star = &(&q * &Operator::diag_real(&values)) * &q.adjoint();
    Ok(&s_star * &random::unitary(rng, dim))
}

fn product_trial(rng: &mut TrialRng, max_dim: usize, cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    let dim = random_dim(rng, max_dim);
    let (_, t) = random::mixed(rng, dim);
    let (_, s) = random::mixed(rng, dim);
    let random_pair = product_polar(&t, &s, cfg)?;
    let partner = commuting_moduli_partner(rng, &t, cfg)?;
    let constructed = product_polar(&t, &partner, cfg)?;
    Ok(vec![
        Check::flag("random_three_way_agreement", random_pair.consistent()),
        Check::residual("random_general_factor", random_pair.general_factor),
        Check::flag("constructed_three_way_agreement", constructed.consistent()),
        Check::flag("constructed_is_polar", constructed.is_polar),
        Check::residual("constructed_general_factor", constructed.general_factor),
    ])
}

fn transfer_trial(rng: &mut TrialRng, max_dim: usize, cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    let dim = random_dim(rng, max_dim);
    let (_, t) = random::mixed(rng, dim);
    let (_, s) = random::mixed(rng, dim);
    let report = product_polar_transfer(&t, &s, cfg)?;
    let mut out = Vec::new();
    push_report(&mut out, "forward_", &report.forward);
    push_report(&mut out, "backward_", &report.backward);
    Ok(out)
}

/// The exponent pairs sampled for the Aluthge-type transforms.
pub const ALUTHGE_PAIRS: [(f64, f64); 3] = [(0.5, 0.5), (1.0, 2.0), (std::f64::consts::FRAC_1_SQRT_2, 3.0)];

fn aluthge_trial(rng: &mut TrialRng, max_dim: usize, cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    let dim = random_dim(rng, max_dim);
    let binormal = random::binormal(rng, dim);
    let report = binormal_equivalents(&binormal, &ALUTHGE_PAIRS, cfg)?;
    let mut out = vec![Check::flag("binormal_all_statements_true", report.statements() == [true; 5])];
    for pair in &report.pairs {
        out.push(Check::residual("binormal_tilde_equation", pair.equation));
        out.push(Check::residual("binormal_tilde_polar", worst_of(&pair.polar)));
        for r in pair.modulus_closed_form.iter().flatten() {
            out.push(Check::residual("modulus_closed_form", *r));
        }
        for r in pair.adjoint_modulus_closed_form.iter().flatten() {
            out.push(Check::residual("adjoint_modulus_closed_form", *r));
        }
        if pair.modulus_closed_form.is_none() {
            out.push(Check::flag("modulus_closed_form", false));
        }
    }

    let family = [Family::Gaussian, Family::RankDeficient, Family::Nilpotent][rng.random_range(0..3)];
    // the 2×2 nilpotent is binormal; draw it at dimension 3 or more
    let dim = if family == Family::Nilpotent { dim.max(3) } else { dim };
    let other = family.sample(rng, dim);
    let report = binormal_equivalents(&other, &ALUTHGE_PAIRS, cfg)?;
    if report.binormal {
        out.push(Check::flag("all_statements_agree", report.agree()));
    } else {
        out.push(Check::flag("non_binormal_all_statements_false", report.statements() == [false; 5]));
    }
    Ok(out)
}

/// Largest order used for the Moore–Penrose power identities.
const MP_MAX: usize = 6;

fn mp_checks(t: &Operator, cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    let dagger = moore_penrose(t, cfg);
    let mut out = vec![Check::residual(
        "modulus_dagger",
        equality_residual(&moore_penrose(&abs_value(t, cfg), cfg), &abs_value(&dagger.adjoint(), cfg), cfg)?,
    )];
    let parts = mp_polar_parts(t, cfg)?;
    push_report(&mut out, "dagger_polar_", &verify_polar(&dagger, &parts, cfg)?);

    let order = centered_order(t, MP_MAX, cfg)?.verified_order;
    let dagger_order = centered_order(&dagger, MP_MAX, cfg)?.verified_order;
    out.push(Check::flag("order_symmetry", order == dagger_order));
    out.push(Check::flag(
        "binormal_symmetry",
        is_binormal(t, cfg)?.binormal == is_binormal(&dagger, cfg)?.binormal,
    ));
    let report = mp_centered_check(t, order, cfg)?;
    for r in &report.power_residuals {
        out.push(Check::residual("power_dagger", *r));
    }
    for pair in report.projection_commutators.iter().flatten() {
        out.push(Check::residual("range_projection_commutes_modulus", pair[0]));
        out.push(Check::residual("initial_projection_commutes_adjoint_modulus", pair[1]));
    }
    Ok(out)
}

/// Certifies a generated shift: predicted polar parts, exact order `n` by
/// criterion and definition, and the weight-pattern prediction for every
/// available commutator.
pub(crate) fn counterexample_checks(spec: &ShiftSpec, cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    let n = spec.n;
    let t = build_truncated(spec)?;
    let mut out = Vec::new();
    push_report(&mut out, "predicted_polar_", &verify_polar(&t, &predicted_polar(spec)?, cfg)?);

    let report = centered_order(&t, spec.blocks, cfg)?;
    out.push(Check::flag("criterion_order", report.verified_order == n));
    out.push(Check::flag("oracle_agreement", report.oracle_agrees));
    let definitional = is_n_centered_definitional(&t, n + 1, cfg)?;
    let holds_at = |k: usize| definitional.steps[..k].iter().all(|s| s.passes());
    out.push(Check::flag("definitional_order", holds_at(n) && !holds_at(n + 1)));
    for (i, r) in report.commutator_norms.iter().enumerate() {
        out.push(Check::flag(
            format!("commutator_pattern_k{}", i + 1),
            r.passes() == expected_commutator_pattern(spec, i + 1),
        ));
    }
    Ok(out)
}

/// Largest power compared against the closed-form entries.
pub const POWER_ENTRY_MAX: u32 = 30;

fn power_entry_checks() -> Result<Vec<Check>> {
    let v = v_matrix();
    let mut out = Vec::new();
    let mut vk = v.clone();
    for k in 1..=POWER_ENTRY_MAX {
        if k > 1 {
            vk = &vk * &v;
        }
        let (v13, v33) = v_power_entries(k)?;
        let error = (v13 - vk.get(0, 2)).norm().max((v33 - vk.get(2, 2)).norm());
        out.push(Check::residual("closed_form_matches_power", Residual::new(error, 1e-9)));
        let (next13, _) = v_power_entries(k + 1)?;
        out.push(Check::residual("corner_shift_identity", Residual::new((v33 - next13).norm(), 1e-12)));
        if k == 1 {
            out.push(Check::residual("first_corner_vanishes", Residual::new(v33.norm(), 0.0)));
        } else {
            // |v33(k)| > 1e-8, phrased as value ≤ bound
            out.push(Check::residual("corner_bounded_away_from_zero", Residual::new(1e-8, v33.norm())));
        }
    }
    Ok(out)
}

fn commutation_trial(rng: &mut TrialRng, max_dim: usize, cfg: &ToleranceConfig) -> Result<Vec<Check>> {
    let dim = random_dim(rng, max_dim);
    let commuting = rng.random_bool(0.5);
    let (a, b) = if commuting {
        random::commuting_psd_pair(rng, dim)
    } else {
        let ra = rng.random_range(1..=dim);
        let rb = rng.random_range(1..=dim);
        (random::psd(rng, dim, ra), random::psd(rng, dim, rb))
    };
    let ab_commute = commutes(&a, &b, cfg)?;
    let mut out = vec![
        Check::flag("construction_matches_commutator", ab_commute == commuting),
        Check::flag("product_positive_iff_commuting", is_psd(&(&a * &b), cfg) == ab_commute),
    ];
    for alpha in [0.5, 2.0] {
        let pa = fractional_power_psd(&a, alpha, cfg)?;
        out.push(Check::flag("power_commutes_iff_base_commutes", commutes(&pa, &b, cfg)? == ab_commute));
        let range = range_projection(&a, cfg);
        out.push(Check::flag(
            "range_stable_under_powers",
            approx_equal(&range_projection(&pa, cfg), &range, cfg)?,
        ));
    }
    let (pa, pb) = (range_projection(&a, cfg), range_projection(&b, cfg));
    if ab_commute {
        out.push(Check::flag(
            "range_projections_commute",
            commutes(&a, &pb, cfg)? && commutes(&pa, &b, cfg)? && commutes(&pa, &pb, cfg)?,
        ));
    }
    let rank = rng.random_range(0..=dim);
    let t = random::rank_deficient(rng, dim, rank);
    out.push(Check::flag(
        "range_of_gram_matches_range",
        approx_equal(&range_projection(&t, cfg), &range_projection(&(&t * &t.adjoint()), cfg), cfg)?,
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert_eq!(Suite::parse_selection("all").unwrap().len(), Suite::ALL.len());
        assert!(matches!("thm-9.9".parse::<Suite>(), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn trial_config_bounds() {
        assert!(TrialConfig::new(1, 1, 5).is_err());
        assert!(TrialConfig::new(1, 13, 5).is_err());
        assert!(TrialConfig::new(1, 4, 0).is_err());
        assert!(TrialConfig::new(1, 12, 1).is_ok());
    }

    #[test]
    fn flags_aggregate_as_counts() {
        let items = vec![
            ("a".to_string(), vec![Check::flag("x", true), Check::residual("y", Residual::new(1.0, 2.0))]),
            ("b".to_string(), vec![Check::flag("x", false), Check::residual("y", Residual::new(3.0, 2.0))]),
        ];
        let outcome = aggregate(Suite::Polar, items);
        let x = outcome.check("x").unwrap();
        assert_eq!((x.trials, x.failures), (2, 1));
        assert_eq!(x.first_failure.as_deref(), Some("b"));
        assert_eq!(outcome.check("y").unwrap().worst.value, 3.0);
        assert!(!outcome.passes());
    }

    #[test]
    fn every_suite_passes_on_a_small_run() {
        let trials = TrialConfig::new(7, 4, 6).unwrap();
        for suite in Suite::ALL {
            let outcome = run_suite(suite, &trials, &ToleranceConfig::default()).unwrap();
            let failing: Vec<_> = outcome.checks.iter().filter(|c| !c.passes()).collect();
            assert!(failing.is_empty(), "{suite}: {failing:?}");
        }
    }

    #[test]
    fn runs_are_deterministic() {
        let trials = TrialConfig::new(11, 5, 8).unwrap();
        let cfg = ToleranceConfig::default();
        let a = serde_json::to_string(&run_suite(Suite::CenteredCriterion, &trials, &cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&run_suite(Suite::CenteredCriterion, &trials, &cfg).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
