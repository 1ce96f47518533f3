//! Closed-form classification of the ring graphs by planarity and projectivity.
//!
//! Rings are given as products of catalog local rings; connection sets as
//! element codes of the compiled product (rightmost factor varying fastest).

use std::fmt;

use crate::ring::{LocalRing, RingSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphClass {
    Planar,
    Projective,
    Neither,
}

impl GraphClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphClass::Planar => "planar",
            GraphClass::Projective => "projective",
            GraphClass::Neither => "neither",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoryVerdict {
    pub class: GraphClass,
    /// Which case of which classification decided it.
    pub reason: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TheoryError {
    #[error("not a product of catalog local rings: {0}")]
    NonCanonicalSpec(String),
    #[error("element code {0} out of range")]
    BadElement(usize),
}

/// Catalog factors of a product spec, in the given order.
pub fn local_factors(spec: &RingSpec) -> Result<Vec<LocalRing>, TheoryError> {
    spec.factors()
        .into_iter()
        .map(|f| LocalRing::from_spec(f).ok_or_else(|| TheoryError::NonCanonicalSpec(spec.to_string())))
        .collect()
}

fn decode(factors: &[LocalRing], mut code: usize) -> Result<Vec<usize>, TheoryError> {
    let total: usize = factors.iter().map(|f| f.order()).product();
    if code >= total {
        return Err(TheoryError::BadElement(code));
    }
    let mut t = vec![0; factors.len()];
    for i in (0..factors.len()).rev() {
        t[i] = code % factors[i].order();
        code /= factors[i].order();
    }
    Ok(t)
}

fn tuples(factors: &[LocalRing], s: &[usize]) -> Result<Vec<Vec<usize>>, TheoryError> {
    let mut out = s.iter().map(|&x| decode(factors, x)).collect::<Result<Vec<_>, _>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// `S` on `Z3 x Z3` as sorted tuples, taken up to swapping the factors.
fn z3z3_matches(s: &[Vec<usize>], listed: &[&[[usize; 2]]]) -> bool {
    let norm = |set: &mut Vec<Vec<usize>>| {
        set.sort();
        set.dedup();
    };
    let mut swapped: Vec<Vec<usize>> = s.iter().map(|t| vec![t[1], t[0]]).collect();
    norm(&mut swapped);
    listed.iter().any(|l| {
        let mut want: Vec<Vec<usize>> = l.iter().map(|t| t.to_vec()).collect();
        norm(&mut want);
        want == s || want == swapped
    })
}

fn is_z3z3(factors: &[LocalRing]) -> bool {
    factors == [LocalRing::Z3, LocalRing::Z3]
}

/// Planarity of `Γ(R,S)`.
pub fn theory_planar_gamma(spec: &RingSpec, s: &[usize]) -> Result<bool, TheoryError> {
    Ok(planar_case(spec, s)?.is_some())
}

fn planar_case(spec: &RingSpec, s: &[usize]) -> Result<Option<&'static str>, TheoryError> {
    let factors = local_factors(spec)?;
    let s = tuples(&factors, s)?;
    let twos = factors.iter().filter(|&&f| f == LocalRing::Z2).count();
    let rest: Vec<LocalRing> = factors.iter().copied().filter(|&f| f != LocalRing::Z2).collect();
    let all_ones = s.len() == 1 && s[0].iter().all(|&c| c == 1);
    let case = match rest.as_slice() {
        [] => Some("planar: Z2^l x Z2"),
        [LocalRing::Z3 | LocalRing::Z4 | LocalRing::Z2x2] => Some("planar: Z2^l x T, T local of order <= 4, not F4"),
        [LocalRing::F4] if twos == 0 => Some("planar: F4"),
        [LocalRing::F4] if all_ones => Some("planar: Z2^l x F4 with S = {1}"),
        [LocalRing::Z5] if twos == 0 && s == [vec![1]] => Some("planar: Z5 with S = {1}"),
        _ if is_z3z3(&factors) && z3z3_matches(&s, &[&[[1, 1]], &[[1, 2]]]) => {
            Some("planar: Z3 x Z3 with S = {(1,1)}, {(1,-1)} or {(-1,1)}")
        }
        _ => None,
    };
    Ok(case)
}

/// Projectivity (crosscap number exactly 1) of `Γ(R,S)`.
pub fn theory_projective_gamma(spec: &RingSpec, s: &[usize]) -> Result<bool, TheoryError> {
    Ok(projective_case(spec, s)?.is_some())
}

fn projective_case(spec: &RingSpec, s: &[usize]) -> Result<Option<&'static str>, TheoryError> {
    let factors = local_factors(spec)?;
    let s = tuples(&factors, s)?;
    if factors == [LocalRing::Z5] && s != [vec![1]] {
        return Ok(Some("projective: Z5 with S != {1}"));
    }
    if is_z3z3(&factors) && z3z3_matches(&s, &[&[[2, 2]], &[[1, 2], [2, 2]]]) {
        return Ok(Some("projective: Z3 x Z3 with S = {(-1,-1)}, {(1,-1),(-1,-1)} or {(-1,1),(-1,-1)}"));
    }
    Ok(None)
}

/// Three-way class of `Γ(R,S)`.
pub fn theory_gamma(spec: &RingSpec, s: &[usize]) -> Result<TheoryVerdict, TheoryError> {
    if let Some(reason) = planar_case(spec, s)? {
        return Ok(TheoryVerdict { class: GraphClass::Planar, reason });
    }
    if let Some(reason) = projective_case(spec, s)? {
        return Ok(TheoryVerdict { class: GraphClass::Projective, reason });
    }
    Ok(TheoryVerdict { class: GraphClass::Neither, reason: "neither: outside both classifications" })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitUnitary {
    pub unit_graph_projective: bool,
    pub unitary_cayley_projective: bool,
    pub gamma_units_projective: bool,
}

/// Projectivity of the unit graph, the unitary Cayley graph and `Γ(R,U(R))`.
pub fn theory_unit_unitary(spec: &RingSpec) -> Result<UnitUnitary, TheoryError> {
    let mut factors = local_factors(spec)?;
    factors.sort();
    let z5 = factors == [LocalRing::Z5];
    Ok(UnitUnitary {
        unit_graph_projective: false,
        unitary_cayley_projective: z5 || is_z3z3(&factors),
        gamma_units_projective: z5,
    })
}

const COMAXIMAL_PLANAR: [&[LocalRing]; 8] = [
    &[LocalRing::Z2],
    &[LocalRing::Z3],
    &[LocalRing::Z4],
    &[LocalRing::Z2x2],
    &[LocalRing::F4],
    &[LocalRing::Z2, LocalRing::Z2],
    &[LocalRing::Z2, LocalRing::Z3],
    &[LocalRing::Z2, LocalRing::Z2, LocalRing::Z2],
];

const COMAXIMAL_PROJECTIVE: [&[LocalRing]; 3] =
    [&[LocalRing::Z2, LocalRing::Z4], &[LocalRing::Z2, LocalRing::Z2x2], &[LocalRing::Z5]];

/// Three-way class of the co-maximal graph.
pub fn theory_comaximal(spec: &RingSpec) -> Result<TheoryVerdict, TheoryError> {
    let mut factors = local_factors(spec)?;
    factors.sort();
    let verdict = if COMAXIMAL_PLANAR.contains(&factors.as_slice()) {
        TheoryVerdict { class: GraphClass::Planar, reason: "planar: one of the eight co-maximal planar rings" }
    } else if COMAXIMAL_PROJECTIVE.contains(&factors.as_slice()) {
        TheoryVerdict { class: GraphClass::Projective, reason: "projective: Z2 x Z4, Z2 x Z2[x]/(x^2) or Z5" }
    } else {
        TheoryVerdict { class: GraphClass::Neither, reason: "neither: outside both co-maximal lists" }
    };
    Ok(verdict)
}
