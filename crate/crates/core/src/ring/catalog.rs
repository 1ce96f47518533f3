//! Catalog of small finite local rings from which ring universes are built.
//!
//! Orders 2 through 9 are complete up to isomorphism. Order 16 carries only
//! representatives; that stratum is not claimed to be complete.

use std::fmt;

use super::spec::RingSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LocalRing {
    Z2,
    Z3,
    Z4,
    /// `Z2[x]/(x^2)`
    Z2x2,
    F4,
    Z5,
    Z7,
    Z8,
    /// `Z2[x]/(x^3)`
    Z2x3,
    Z9,
    /// `Z3[x]/(x^2)`
    Z3x2,
    F8,
    F9,
    Z16,
    F16,
    /// `Z4[x]/(x^2)`
    Z4x2,
    /// `Z2[x]/(x^4)`
    Z2x4,
    /// `F4[x]/(x^2)`, written as `Z2[x]/(x^4+x^2+1)`: since `x^4+x^2+1 = (x^2+x+1)^2`
    /// over `Z2`, the quotient is local with residue field `F4` and square-zero radical.
    F4x2,
}

impl LocalRing {
    pub const ALL: [LocalRing; 18] = [
        LocalRing::Z2,
        LocalRing::Z3,
        LocalRing::Z4,
        LocalRing::Z2x2,
        LocalRing::F4,
        LocalRing::Z5,
        LocalRing::Z7,
        LocalRing::Z8,
        LocalRing::Z2x3,
        LocalRing::Z9,
        LocalRing::Z3x2,
        LocalRing::F8,
        LocalRing::F9,
        LocalRing::Z16,
        LocalRing::F16,
        LocalRing::Z4x2,
        LocalRing::Z2x4,
        LocalRing::F4x2,
    ];

    /// Spec text accepted by [`RingSpec::parse`].
    pub fn spec_text(self) -> &'static str {
        match self {
            LocalRing::Z2 => "Z2",
            LocalRing::Z3 => "Z3",
            LocalRing::Z4 => "Z4",
            LocalRing::Z2x2 => "Z2[x]/(x^2)",
            LocalRing::F4 => "GF(4)",
            LocalRing::Z5 => "Z5",
            LocalRing::Z7 => "Z7",
            LocalRing::Z8 => "Z8",
            LocalRing::Z2x3 => "Z2[x]/(x^3)",
            LocalRing::Z9 => "Z9",
            LocalRing::Z3x2 => "Z3[x]/(x^2)",
            LocalRing::F8 => "GF(8)",
            LocalRing::F9 => "GF(9)",
            LocalRing::Z16 => "Z16",
            LocalRing::F16 => "GF(16)",
            LocalRing::Z4x2 => "Z4[x]/(x^2)",
            LocalRing::Z2x4 => "Z2[x]/(x^4)",
            LocalRing::F4x2 => "Z2[x]/(x^4+x^2+1)",
        }
    }

    pub fn spec(self) -> RingSpec {
        RingSpec::parse(self.spec_text()).expect("catalog specs parse")
    }

    pub fn order(self) -> usize {
        match self {
            LocalRing::Z2 => 2,
            LocalRing::Z3 => 3,
            LocalRing::Z4 | LocalRing::Z2x2 | LocalRing::F4 => 4,
            LocalRing::Z5 => 5,
            LocalRing::Z7 => 7,
            LocalRing::Z8 | LocalRing::Z2x3 | LocalRing::F8 => 8,
            LocalRing::Z9 | LocalRing::Z3x2 | LocalRing::F9 => 9,
            _ => 16,
        }
    }

    pub fn is_field(self) -> bool {
        matches!(
            self,
            LocalRing::Z2
                | LocalRing::Z3
                | LocalRing::F4
                | LocalRing::Z5
                | LocalRing::Z7
                | LocalRing::F8
                | LocalRing::F9
                | LocalRing::F16
        )
    }

    /// Size of the residue field `R/m`.
    pub fn residue_order(self) -> usize {
        match self {
            LocalRing::Z4 | LocalRing::Z2x2 | LocalRing::Z8 | LocalRing::Z2x3 => 2,
            LocalRing::Z16 | LocalRing::Z4x2 | LocalRing::Z2x4 => 2,
            LocalRing::Z9 | LocalRing::Z3x2 => 3,
            LocalRing::F4x2 => 4,
            field => field.order(),
        }
    }

    /// The catalog entry whose spec is exactly `spec`.
    pub fn from_spec(spec: &RingSpec) -> Option<LocalRing> {
        LocalRing::ALL.into_iter().find(|l| &l.spec() == spec)
    }

    /// Base modulus of the coefficient ring and whether a polynomial generator `x`
    /// is needed to generate the ring.
    pub(crate) fn generator_code(self) -> Option<usize> {
        match self.spec() {
            RingSpec::ModularInt(_) => None,
            RingSpec::GaloisField { p, k, .. } => (k > 1).then_some(p as usize),
            RingSpec::QuotientPoly { m, .. } => Some(m as usize),
            RingSpec::Product(_) => unreachable!("catalog entries are local"),
        }
    }

    pub(crate) fn base_modulus(self) -> usize {
        match self.spec() {
            RingSpec::ModularInt(n) => n as usize,
            RingSpec::GaloisField { p, .. } => p as usize,
            RingSpec::QuotientPoly { m, .. } => m as usize,
            RingSpec::Product(_) => unreachable!("catalog entries are local"),
        }
    }
}

impl fmt::Display for LocalRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.spec_text())
    }
}
