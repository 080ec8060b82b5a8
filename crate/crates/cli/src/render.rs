//! Text rendering of reports and invariant tables.

use heightcalc_core::pmgraph::InvariantReport;
use heightcalc_core::ratio::format_rat;
use heightcalc_core::verify::{Outcome, VerificationReport};
use std::fmt::Write;

pub fn render_verification(report: &VerificationReport) -> String {
    let mut out = String::new();
    for check in &report.checks {
        match &check.outcome {
            Outcome::Pass => writeln!(out, "[pass] {}", check.name).unwrap(),
            Outcome::Fail { expected, computed } => writeln!(
                out,
                "[FAIL] {}: expected {}, computed {}",
                check.name, expected, computed
            )
            .unwrap(),
            Outcome::Skip { reason } => {
                writeln!(out, "[skip] {}: {}", check.name, reason).unwrap()
            }
        }
    }
    let (passed, failed, skipped) = report.counts();
    writeln!(out, "summary: {passed} passed, {failed} failed, {skipped} skipped").unwrap();
    out
}

pub fn render_invariants(inv: &InvariantReport) -> String {
    let mut out = String::new();
    writeln!(out, "genus = {}", inv.genus).unwrap();
    writeln!(out, "delta = {}", format_rat(&inv.delta)).unwrap();
    writeln!(out, "tau = {}", format_rat(&inv.tau)).unwrap();
    writeln!(out, "epsilon = {}", format_rat(&inv.epsilon)).unwrap();
    writeln!(out, "phi = {}", format_rat(&inv.phi)).unwrap();
    writeln!(out, "alpha = {}", format_rat(&inv.alpha)).unwrap();
    for (i, part) in inv.delta_parts.iter().enumerate() {
        writeln!(out, "delta_{i} = {}", format_rat(part)).unwrap();
    }
    out
}
