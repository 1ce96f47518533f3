//! Checks exact crosscap numbers of ring graphs against the ring-size bounds.

use std::fmt;

use crate::ring::LocalRing;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditRecord {
    pub spec: String,
    /// Local factors of the ring.
    pub factors: Vec<LocalRing>,
    pub s_label: String,
    /// Exact crosscap number, at least 1.
    pub crosscap: usize,
    pub units: usize,
    pub jacobson: usize,
}

impl AuditRecord {
    pub fn order(&self) -> usize {
        self.factors.iter().map(|f| f.order()).product()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SizeRule {
    /// `|R| <= 32k`.
    ThirtyTwoK,
    /// `|R| <= 6k - 12`, or `R = Z2^l x T` with `|T| <= 16` and `l <= log2(k) + 1`.
    Dichotomy,
    /// `|U(R)| <= 6` when `k = 1`.
    UnitsAtMostSix,
    /// `|J(R)| <= 3` when `k = 1`.
    RadicalAtMostThree,
}

impl fmt::Display for SizeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SizeRule::ThirtyTwoK => "|R| <= 32k",
            SizeRule::Dichotomy => "|R| <= 6k-12 or R = Z2^l x T with |T| <= 16, l <= log2 k + 1",
            SizeRule::UnitsAtMostSix => "|U(R)| <= 6 for k = 1",
            SizeRule::RadicalAtMostThree => "|J(R)| <= 3 for k = 1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub record: AuditRecord,
    pub rule: SizeRule,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

fn dichotomy_holds(r: &AuditRecord) -> bool {
    let (n, k) = (r.order() as i64, r.crosscap as i64);
    if n <= 6 * k - 12 {
        return true;
    }
    let twos = r.factors.iter().filter(|&&f| f == LocalRing::Z2).count() as u32;
    // largest admissible l, floor(log2 k) + 1
    let l = twos.min(k.ilog2() + 1);
    r.order() >> l <= 16
}

/// Applies every applicable bound to each record. Records with `k = 0` are skipped.
pub fn size_bound_audit(records: &[AuditRecord]) -> AuditReport {
    let mut report = AuditReport::default();
    for r in records.iter().filter(|r| r.crosscap > 0) {
        report.checked += 1;
        let mut fail = |rule| report.violations.push(Violation { record: r.clone(), rule });
        if r.order() > 32 * r.crosscap {
            fail(SizeRule::ThirtyTwoK);
        }
        if !dichotomy_holds(r) {
            fail(SizeRule::Dichotomy);
        }
        if r.crosscap == 1 {
            if r.units > 6 {
                fail(SizeRule::UnitsAtMostSix);
            }
            if r.jacobson > 3 {
                fail(SizeRule::RadicalAtMostThree);
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(factors: &[LocalRing], k: usize, units: usize, jacobson: usize) -> AuditRecord {
        AuditRecord {
            spec: String::new(),
            factors: factors.to_vec(),
            s_label: String::new(),
            crosscap: k,
            units,
            jacobson,
        }
    }

    #[test]
    fn known_values_pass() {
        let report = size_bound_audit(&[
            rec(&[LocalRing::Z5], 1, 4, 1),
            rec(&[LocalRing::Z8], 2, 4, 4),
            rec(&[LocalRing::Z3, LocalRing::Z3], 1, 4, 1),
        ]);
        assert_eq!(report.checked, 3);
        assert!(report.is_clean());
    }

    #[test]
    fn violations_are_listed() {
        let report = size_bound_audit(&[rec(&[LocalRing::F16, LocalRing::Z3], 1, 30, 1)]);
        let rules: Vec<SizeRule> = report.violations.iter().map(|v| v.rule).collect();
        assert_eq!(rules, vec![SizeRule::ThirtyTwoK, SizeRule::Dichotomy, SizeRule::UnitsAtMostSix]);
        assert!(size_bound_audit(&[rec(&[LocalRing::Z7], 0, 6, 1)]).checked == 0);
    }
}
