//! Self-verification suites: closed-form identities the coefficient
//! engine must reproduce exactly.

use crate::calculus::{
    arithmetic_intersection, height_coefficients, Generator, GeneratorSystem,
};
use crate::error::Error;
use crate::ratio::{format_rat, rat, rat_i, Rat};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::One;

/// A height expressed over the symbols (W, P, H): W the self-pairing of
/// the dualizing sheaf, P the summed phi contribution, H the height of
/// the degree-zero base divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicHeightVector {
    pub w: Rat,
    pub p: Rat,
    pub h: Rat,
}

impl SymbolicHeightVector {
    pub fn new(w: Rat, p: Rat, h: Rat) -> Self {
        SymbolicHeightVector { w, p, h }
    }

    pub fn scaled(&self, k: &Rat) -> Self {
        SymbolicHeightVector {
            w: &self.w * k,
            p: &self.p * k,
            h: &self.h * k,
        }
    }

    pub fn render(&self) -> String {
        format!(
            "({}, {}, {})",
            format_rat(&self.w),
            format_rat(&self.p),
            format_rat(&self.h)
        )
    }
}

impl core::ops::Sub for SymbolicHeightVector {
    type Output = SymbolicHeightVector;
    fn sub(self, rhs: SymbolicHeightVector) -> SymbolicHeightVector {
        SymbolicHeightVector {
            w: self.w - rhs.w,
            p: self.p - rhs.p,
            h: self.h - rhs.h,
        }
    }
}

impl core::ops::Add for SymbolicHeightVector {
    type Output = SymbolicHeightVector;
    fn add(self, rhs: SymbolicHeightVector) -> SymbolicHeightVector {
        SymbolicHeightVector {
            w: self.w + rhs.w,
            p: self.p + rhs.p,
            h: self.h + rhs.h,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail { expected: String, computed: String },
    Skip { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckEntry {
    pub name: String,
    pub outcome: Outcome,
}

impl CheckEntry {
    fn compare<T: PartialEq>(
        name: String,
        expected: T,
        computed: T,
        render: impl Fn(&T) -> String,
    ) -> CheckEntry {
        let outcome = if expected == computed {
            Outcome::Pass
        } else {
            Outcome::Fail {
                expected: render(&expected),
                computed: render(&computed),
            }
        };
        CheckEntry { name, outcome }
    }

    pub fn passed(&self) -> bool {
        !matches!(self.outcome, Outcome::Fail { .. })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<CheckEntry>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckEntry::passed)
    }

    /// (passed, failed, skipped)
    pub fn counts(&self) -> (usize, usize, usize) {
        let mut tally = (0, 0, 0);
        for c in &self.checks {
            match c.outcome {
                Outcome::Pass => tally.0 += 1,
                Outcome::Fail { .. } => tally.1 += 1,
                Outcome::Skip { .. } => tally.2 += 1,
            }
        }
        tally
    }

    pub fn merge(&mut self, mut other: VerificationReport) {
        self.checks.append(&mut other.checks);
    }
}

fn vector_of(m: &[i64], g: u32) -> Result<SymbolicHeightVector, Error> {
    let hc = height_coefficients(m, g)?;
    Ok(SymbolicHeightVector::new(hc.a, hc.b, hc.c))
}

fn compare_vector(name: String, expected: SymbolicHeightVector, computed: SymbolicHeightVector) -> CheckEntry {
    CheckEntry::compare(name, expected, computed, SymbolicHeightVector::render)
}

/// Closed forms for the point, difference, sum and theta cycles.
pub fn closed_form_suite(g_range: &[u32]) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::default();
    for &g in g_range {
        let gi = i64::from(g);
        report.checks.push(compare_vector(
            format!("point cycle coefficients g={g}"),
            SymbolicHeightVector::new(rat(1, 8 * (gi - 1)), rat_i(0), rat(gi - 1, gi)),
            vector_of(&[1], g)?,
        ));
        report.checks.push(compare_vector(
            format!("difference surface coefficients g={g}"),
            SymbolicHeightVector::new(
                rat(3 * gi - 1, 12 * gi * (gi - 1)),
                rat(-1, 6 * gi * (gi - 1)),
                rat_i(0),
            ),
            vector_of(&[1, -1], g)?,
        ));
        report.checks.push(compare_vector(
            format!("sum surface coefficients g={g}"),
            SymbolicHeightVector::new(
                rat(3 * gi * gi - 8 * gi - 1, 12 * gi * (gi - 1) * (gi - 1)),
                rat(1, 6 * gi * (gi - 1)),
                rat(4 * (gi - 2), gi),
            ),
            vector_of(&[1, 1], g)?,
        ));
        let theta_name = format!("theta divisor coefficients g={g}");
        if g == 2 {
            report.checks.push(CheckEntry {
                name: theta_name,
                outcome: Outcome::Skip {
                    reason: String::from(
                        "hyperelliptic relation at genus 2 makes (a, b) non-unique",
                    ),
                },
            });
        } else {
            let ones = vec![1i64; g as usize - 1];
            let hc = height_coefficients(&ones, g)?;
            report.checks.push(CheckEntry::compare(
                theta_name,
                (rat(1, 24 * gi), rat(1, 12 * gi)),
                (hc.a, hc.b),
                |(a, b)| format!("({}, {})", format_rat(a), format_rat(b)),
            ));
        }
    }
    Ok(report)
}

/// Coefficient of the triple-diagonal symbol in the g-fold product of
/// `sum of omega_i minus sum of Delta_ij` over rank g-1, unit weights.
/// Every phi contribution of the expansion comes from a triple-diagonal
/// term, so the coefficient is minus the phi component.
pub fn wilms_constant(g: u32) -> Result<Rat, Error> {
    let r = g as usize - 1;
    let mut gens: Vec<(Generator, BigInt)> = Vec::new();
    for i in 1..=r as u32 {
        gens.push((Generator::Omega(i), BigInt::one()));
    }
    for i in 1..=r as u32 {
        for j in (i + 1)..=r as u32 {
            gens.push((Generator::Delta(i, j), -BigInt::one()));
        }
    }
    let sys = GeneratorSystem::custom(r, g, gens)?;
    let v = arithmetic_intersection(&sys)?;
    Ok(-v.p)
}

fn factorial(n: u32) -> i64 {
    (1..=i64::from(n)).product()
}

/// Checks `wilms_constant(g) == -g!(g-1)!/12`. At genus 2 the expansion
/// has no triple-diagonal term at all (rank 1 admits no pair indices), so
/// the closed form does not apply and the check is recorded as skipped.
pub fn wilms_suite(g_range: &[u32]) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::default();
    for &g in g_range {
        let name = format!("triple diagonal constant g={g}");
        if g == 2 {
            report.checks.push(CheckEntry {
                name,
                outcome: Outcome::Skip {
                    reason: String::from(
                        "rank 1 expansion has no triple-diagonal term",
                    ),
                },
            });
            continue;
        }
        let expected = rat(-factorial(g) * factorial(g - 1), 12);
        report.checks.push(CheckEntry::compare(
            name,
            expected,
            wilms_constant(g)?,
            format_rat,
        ));
    }
    Ok(report)
}

/// The difference and sum surface heights recombine into the diagonal
/// cycle height vector `((2g+1)/(2g-2), -1, 12(g-1))`.
pub fn gross_schoen_consistency(g: u32) -> Result<CheckEntry, Error> {
    let gi = i64::from(g);
    let f = vector_of(&[1, -1], g)?;
    let z2 = vector_of(&[1, 1], g)?;
    let scale = rat_i(3 * gi * (gi - 1));
    let lhs = (f - z2).scaled(&scale)
        + SymbolicHeightVector::new(rat_i(0), rat_i(0), rat_i(12 * (gi - 1) * (gi - 1)));
    let rhs = SymbolicHeightVector::new(
        rat(2 * gi + 1, 2 * gi - 2),
        rat_i(-1),
        rat_i(12 * (gi - 1)),
    );
    Ok(compare_vector(
        format!("diagonal cycle recombination g={g}"),
        rhs,
        lhs,
    ))
}

/// Effective lower-bound coefficient and the sum-surface upper-bound
/// chain, as exact identities between coefficient vectors.
pub fn derived_bounds(g: u32) -> Result<VerificationReport, Error> {
    let gi = i64::from(g);
    let mut report = VerificationReport::default();

    let f = vector_of(&[1, -1], g)?;
    report.checks.push(CheckEntry::compare(
        format!("lower bound coefficient g={g}"),
        rat(2, 3 * gi - 1),
        -&f.p / &f.w,
        format_rat,
    ));

    // substituting the lower bound P <= (3g-1)/2 W into the sum surface
    // height collapses its W part to (g-2)/(2(g-1)^2)
    let z2 = vector_of(&[1, 1], g)?;
    let collapsed = &z2.w + &z2.p * rat(3 * gi - 1, 2);
    report.checks.push(CheckEntry::compare(
        format!("sum surface bound W part g={g}"),
        rat(gi - 2, 2 * (gi - 1) * (gi - 1)),
        collapsed.clone(),
        format_rat,
    ));
    report.checks.push(CheckEntry::compare(
        format!("sum surface bound H part g={g}"),
        rat(4 * (gi - 2), gi),
        z2.h.clone(),
        format_rat,
    ));

    // both parts of the bound are the same multiple of the point cycle
    let z1 = vector_of(&[1], g)?;
    let factor = rat(4 * (gi - 2), gi - 1);
    report.checks.push(CheckEntry::compare(
        format!("bound comparison factor g={g}"),
        (factor.clone(), factor),
        (collapsed / &z1.w, z2.h / &z1.h),
        |(x, y)| format!("({}, {})", format_rat(x), format_rat(y)),
    ));
    Ok(report)
}

/// Everything above over a genus range.
pub fn paper_suite(g_range: &[u32]) -> Result<VerificationReport, Error> {
    let mut report = closed_form_suite(g_range)?;
    report.merge(wilms_suite(
        &g_range.iter().copied().filter(|&g| g <= 6).collect::<Vec<_>>(),
    )?);
    for &g in g_range {
        report.checks.push(gross_schoen_consistency(g)?);
        report.merge(derived_bounds(g)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_hold_through_genus_six() {
        let report = closed_form_suite(&[2, 3, 4, 5, 6]).unwrap();
        assert!(report.passed(), "{:?}", report.checks);
        let (passed, failed, skipped) = report.counts();
        assert_eq!((passed, failed, skipped), (19, 0, 1));
    }

    #[test]
    fn genus_two_theta_check_is_skipped() {
        let report = closed_form_suite(&[2]).unwrap();
        let theta = report
            .checks
            .iter()
            .find(|c| c.name.starts_with("theta"))
            .unwrap();
        assert!(matches!(theta.outcome, Outcome::Skip { .. }));
    }

    #[test]
    fn triple_diagonal_constants() {
        assert_eq!(wilms_constant(3).unwrap(), rat_i(-1));
        assert_eq!(wilms_constant(4).unwrap(), rat_i(-12));
        assert_eq!(wilms_constant(5).unwrap(), rat_i(-240));
        assert!(wilms_suite(&[2, 3, 4, 5]).unwrap().passed());
    }

    #[test]
    fn diagonal_recombination() {
        for g in 2..=6 {
            let entry = gross_schoen_consistency(g).unwrap();
            assert!(entry.passed(), "{:?}", entry);
        }
    }

    #[test]
    fn bound_chain() {
        for g in 2..=8 {
            let report = derived_bounds(g).unwrap();
            assert!(report.passed(), "{:?}", report.checks);
        }
    }

    #[test]
    fn aggregate_suite() {
        let report = paper_suite(&[2, 3, 4]).unwrap();
        assert!(report.passed());
        let (_, failed, skipped) = report.counts();
        assert_eq!(failed, 0);
        assert_eq!(skipped, 2);
    }
}
