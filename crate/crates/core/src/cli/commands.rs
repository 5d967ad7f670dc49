use std::path::{Path, PathBuf};

use serde_json::json;

use crate::classify::{centered_order, is_binormal};
use crate::counterexample::{build_truncated, ShiftSpec};
use crate::decomp::{moore_penrose, mp_polar_parts, penrose_check, polar_decompose, verify_polar, PenroseCheck};
use crate::error::Result;
use crate::linalg::{svd, ToleranceConfig};
use crate::suites::{counterexample_checks, run_suites, Suite, TrialConfig};

use super::{MatrixFile, ReportCheck, RunReport};

pub const DEFAULT_MAX_N: usize = 6;

/// `dir/stem{suffix}.json` next to `input`.
fn sibling(input: &Path, suffix: &str) -> PathBuf {
    let stem = input.file_stem().and_then(|s| s.to_str()).unwrap_or("matrix");
    input.with_file_name(format!("{stem}{suffix}.json"))
}

fn write_output(report: &mut RunReport, path: &Path, file: &MatrixFile) -> Result<()> {
    file.write(path)?;
    report.outputs.push(path.display().to_string());
    Ok(())
}

/// Polar decomposition of the matrix in `input`. Writes `<prefix>_u.json`
/// and `<prefix>_p.json`; the prefix defaults to the input path without its
/// extension.
pub fn cmd_polar(input: &Path, out_prefix: Option<&Path>, cfg: &ToleranceConfig) -> Result<RunReport> {
    cfg.validate()?;
    let t = MatrixFile::read_operator(input)?;
    let mut report = RunReport::new("polar", *cfg);
    report.arg("input", input.display().to_string());
    if let Some(prefix) = out_prefix {
        report.arg("out", prefix.display().to_string());
    }

    let parts = polar_decompose(&t, cfg);
    report.push_polar("", &verify_polar(&t, &parts, cfg)?);
    report.note("rows", t.rows()).note("cols", t.cols()).note("rank", parts.rank);
    report.rank_margin = parts.rank_margin;

    let base = out_prefix.map_or_else(|| sibling(input, ""), Path::to_path_buf);
    write_output(&mut report, &sibling(&base, "_u"), &MatrixFile::from_operator(&parts.isometry))?;
    write_output(&mut report, &sibling(&base, "_p"), &MatrixFile::from_operator(&parts.modulus))?;
    Ok(report)
}

/// Moore–Penrose inverse of the matrix in `input`, written to `out`
/// (default `<input stem>_mp.json`).
pub fn cmd_mp(input: &Path, out: Option<&Path>, cfg: &ToleranceConfig) -> Result<RunReport> {
    cfg.validate()?;
    let t = MatrixFile::read_operator(input)?;
    let mut report = RunReport::new("mp", *cfg);
    report.arg("input", input.display().to_string());
    if let Some(out) = out {
        report.arg("out", out.display().to_string());
    }

    let dagger = moore_penrose(&t, cfg);
    let penrose = penrose_check(&t, &dagger, cfg)?;
    for (name, r) in PenroseCheck::NAMES.iter().zip(penrose.residuals) {
        report.push(ReportCheck::residual(*name, r));
    }
    // T† = U*|T†| as a polar decomposition, for square T
    if t.is_square() {
        let parts = mp_polar_parts(&t, cfg)?;
        report.push_polar("dagger_polar_", &verify_polar(&dagger, &parts, cfg)?);
    }
    let s = svd(&t);
    report.rank_margin = s.rank_margin(cfg);
    report
        .note("rows", t.rows())
        .note("cols", t.cols())
        .note("rank", crate::linalg::numerical_rank(&s.singular_values, cfg));

    let path = out.map_or_else(|| sibling(input, "_mp"), Path::to_path_buf);
    write_output(&mut report, &path, &MatrixFile::from_operator(&dagger))?;
    Ok(report)
}

/// Binormality and centered order of the (square) matrix in `input`.
///
/// The verdict covers the consistency checks only; the classification itself
/// is in the summary.
pub fn cmd_classify(input: &Path, max_n: usize, cfg: &ToleranceConfig) -> Result<RunReport> {
    cfg.validate()?;
    let t = MatrixFile::read_operator(input)?;
    let centered = centered_order(&t, max_n, cfg)?;
    let binormal = is_binormal(&t, cfg)?;

    let mut report = RunReport::new("classify", *cfg);
    report.arg("input", input.display().to_string()).arg("max_n", max_n);
    report.push(ReportCheck::flag("oracle_agreement", centered.oracle_agrees));
    report.push(ReportCheck::flag("binormal_agreement", centered.binormal == binormal.binormal));
    report
        .note("verified_order", centered.verified_order)
        .note("max_order_checked", centered.max_order_checked)
        .note("binormal", binormal.binormal)
        .note("binormal_commutator", json!(binormal.commutator))
        .note("centered", centered.centered)
        .note("commutator_norms", json!(centered.commutator_norms))
        .note("rank", centered.rank);
    report.rank_margin = centered.rank_margin;
    Ok(report)
}

/// Generates the block shift that is exactly `n`-centered, writes it and
/// certifies its order.
pub fn cmd_counterexample(
    n: usize,
    blocks: Option<usize>,
    out: Option<&Path>,
    cfg: &ToleranceConfig,
) -> Result<RunReport> {
    cfg.validate()?;
    let spec = ShiftSpec::recipe(n, blocks)?;
    let t = build_truncated(&spec)?;

    let mut report = RunReport::new("counterexample", *cfg);
    report.arg("n", n).arg("blocks", spec.blocks);
    if let Some(out) = out {
        report.arg("out", out.display().to_string());
    }
    for check in counterexample_checks(&spec, cfg)? {
        report.push(ReportCheck::residual(check.name, check.residual));
    }
    let centered = centered_order(&t, spec.blocks, cfg)?;
    report
        .note("dim", spec.dim())
        .note("weights", json!(spec.g))
        .note("verified_order", centered.verified_order)
        .note("max_order_checked", centered.max_order_checked)
        // the truncated modulus ends in a zero block; commutators against it vanish
        .note("trailing_zero_block", true);

    let path = out.map_or_else(|| PathBuf::from(format!("counterexample_n{n}_m{}.json", spec.blocks)), Path::to_path_buf);
    write_output(&mut report, &path, &MatrixFile::from_operator(&t))?;
    Ok(report)
}

/// Runs the named suite (or `all`) over seeded random operators and the
/// structured fixtures.
pub fn cmd_verify_theorems(suite: &str, trials: &TrialConfig, cfg: &ToleranceConfig) -> Result<RunReport> {
    cfg.validate()?;
    let suites: Vec<Suite> = Suite::parse_selection(suite)?;
    let outcomes = run_suites(&suites, trials, cfg)?;

    let mut report = RunReport::new("verify-theorems", *cfg);
    report
        .arg("suite", suite)
        .arg("seed", trials.seed)
        .arg("dim", trials.max_dim)
        .arg("trials", trials.trials);
    for outcome in &outcomes {
        for c in &outcome.checks {
            report.push(ReportCheck {
                name: format!("{}/{}", outcome.suite, c.name),
                value: c.worst.value,
                bound: c.worst.bound,
                pass: c.passes(),
                trials: Some(c.trials),
                failures: Some(c.failures),
            });
        }
        report.note(
            outcome.suite.name(),
            json!({
                "items": outcome.items,
                "pass": outcome.passes(),
                "first_failures": outcome
                    .checks
                    .iter()
                    .filter_map(|c| c.first_failure.as_ref().map(|f| json!({ "check": c.name, "item": f })))
                    .collect::<Vec<_>>(),
            }),
        );
    }
    Ok(report)
}
