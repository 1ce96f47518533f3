use std::collections::BTreeSet;

use super::{FiniteRing, RingError};

/// A validated pair `(G, S)`: `G` a subgroup of `U(R)`, `S ⊆ G` non-empty and
/// closed under inverses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicativeData {
    group: Vec<usize>,
    connection: Vec<usize>,
}

impl MultiplicativeData {
    pub fn group(&self) -> &[usize] {
        &self.group
    }

    pub fn connection_set(&self) -> &[usize] {
        &self.connection
    }

    /// `G = U(R)` with the given `S`.
    pub fn with_units(ring: &FiniteRing, s: &[usize]) -> Result<Self, RingError> {
        validate_s(ring, ring.units(), s)
    }
}

/// Smallest multiplicative subgroup containing `seed`.
pub fn subgroup_closure(ring: &FiniteRing, seed: &[usize]) -> Result<Vec<usize>, RingError> {
    for &x in seed {
        if x >= ring.order() || !ring.is_unit(x) {
            return Err(RingError::ElementNotUnit(x));
        }
    }
    let mut set: BTreeSet<usize> = BTreeSet::from([ring.one()]);
    let mut frontier: Vec<usize> = vec![ring.one()];
    while let Some(a) = frontier.pop() {
        for &g in seed {
            let b = ring.mul(a, g);
            if set.insert(b) {
                frontier.push(b);
            }
        }
    }
    // finite group: closure under products already contains inverses
    Ok(set.into_iter().collect())
}

pub fn validate_s(ring: &FiniteRing, g: &[usize], s: &[usize]) -> Result<MultiplicativeData, RingError> {
    if s.is_empty() {
        return Err(RingError::EmptyS);
    }
    let gset: BTreeSet<usize> = g.iter().copied().collect();
    let is_subgroup = gset.contains(&ring.one())
        && gset.iter().all(|&x| x < ring.order() && ring.is_unit(x))
        && gset.iter().all(|&a| gset.iter().all(|&b| gset.contains(&ring.mul(a, b))))
        && gset.iter().all(|&a| ring.inverse(a).is_some_and(|i| gset.contains(&i)));
    if !is_subgroup {
        return Err(RingError::GNotSubgroup);
    }
    let sset: BTreeSet<usize> = s.iter().copied().collect();
    if let Some(&bad) = sset.iter().find(|x| !gset.contains(x)) {
        return Err(RingError::SNotInG(bad));
    }
    if let Some(&bad) = sset.iter().find(|&&x| !sset.contains(&ring.inverse(x).unwrap())) {
        return Err(RingError::SNotInverseClosed(bad));
    }
    Ok(MultiplicativeData { group: gset.into_iter().collect(), connection: sset.into_iter().collect() })
}

/// Every non-empty inverse-closed subset of `U(R)`, each sorted, in a fixed order.
pub fn inverse_closed_subsets(ring: &FiniteRing) -> Vec<Vec<usize>> {
    // orbits {u, u^-1}
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for &u in ring.units() {
        let inv = ring.inverse(u).unwrap();
        if inv >= u {
            orbits.push(if inv == u { vec![u] } else { vec![u, inv] });
        }
    }
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << orbits.len()) {
        let mut s: Vec<usize> = orbits
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .flat_map(|(_, o)| o.iter().copied())
            .collect();
        s.sort_unstable();
        out.push(s);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}
