//! Normalization of a compiled ring to a sorted product of catalog local rings.
//!
//! A finite commutative ring splits along its primitive idempotents `e` into the
//! local factors `eR`. Each factor is matched against the catalog by an explicit
//! ring isomorphism built from the image of the catalog ring's generator.

use super::catalog::LocalRing;
use super::finite::{compile_ring, FiniteRing};
use super::spec::RingSpec;
use super::RingError;

/// `R` identified with `L_1 x ... x L_t` (catalog factors in sorted order).
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    factors: Vec<LocalRing>,
    ring: FiniteRing,
    to_canonical: Vec<usize>,
}

impl CanonicalForm {
    pub fn factors(&self) -> &[LocalRing] {
        &self.factors
    }

    pub fn spec(&self) -> RingSpec {
        RingSpec::product(self.factors.iter().map(|f| f.spec()))
    }

    /// The compiled canonical product.
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    /// Image in the canonical ring of an element of the original ring.
    pub fn map(&self, x: usize) -> usize {
        self.to_canonical[x]
    }

    pub fn map_set(&self, xs: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = xs.iter().map(|&x| self.map(x)).collect();
        out.sort_unstable();
        out
    }
}

fn idempotents(r: &FiniteRing) -> Vec<usize> {
    (1..r.order()).filter(|&e| r.mul(e, e) == e).collect()
}

fn primitive_idempotents(r: &FiniteRing) -> Vec<usize> {
    let ids = idempotents(r);
    ids.iter().copied().filter(|&e| !ids.iter().any(|&f| f != e && r.mul(e, f) == f)).collect()
}

fn scalar(r: &FiniteRing, c: usize, y: usize) -> usize {
    (0..c).fold(0, |acc, _| r.add(acc, y))
}

/// Tries to build `phi: L -> eR`; returns the table `code in L -> element of R`.
fn match_local(
    r: &FiniteRing,
    e: usize,
    members: &[bool],
    size: usize,
    l: LocalRing,
    lr: &FiniteRing,
) -> Option<Vec<usize>> {
    if l.order() != size {
        return None;
    }
    let base = l.base_modulus();
    let candidates: Vec<usize> = match l.generator_code() {
        None => vec![e],
        Some(_) => (0..r.order()).filter(|&t| members[t]).collect(),
    };
    let degree = {
        let mut d = 0;
        let mut n = 1;
        while n < l.order() {
            n *= base;
            d += 1;
        }
        d
    };
    for t in candidates {
        let mut powers = vec![e];
        for i in 1..degree {
            powers.push(r.mul(powers[i - 1], t));
        }
        let phi: Vec<usize> = (0..l.order())
            .map(|mut code| {
                let mut acc = 0;
                for p in &powers {
                    acc = r.add(acc, scalar(r, code % base, *p));
                    code /= base;
                }
                acc
            })
            .collect();
        let mut seen = vec![false; r.order()];
        if phi.iter().any(|&y| !members[y] || std::mem::replace(&mut seen[y], true)) {
            continue;
        }
        let n = l.order();
        let hom = (0..n).all(|a| {
            (0..n).all(|b| phi[lr.add(a, b)] == r.add(phi[a], phi[b]) && phi[lr.mul(a, b)] == r.mul(phi[a], phi[b]))
        });
        if hom {
            return Some(phi);
        }
    }
    None
}

/// Identifies `r` with a product of catalog local rings.
pub fn canonicalize(r: &FiniteRing) -> Result<CanonicalForm, RingError> {
    let catalog: Vec<(LocalRing, FiniteRing)> =
        LocalRing::ALL.iter().map(|&l| (l, compile_ring(&l.spec()).expect("catalog compiles"))).collect();
    let mut parts: Vec<(LocalRing, usize, Vec<usize>)> = Vec::new();
    for e in primitive_idempotents(r) {
        let mut members = vec![false; r.order()];
        for x in 0..r.order() {
            members[r.mul(e, x)] = true;
        }
        let size = members.iter().filter(|&&b| b).count();
        let found = catalog.iter().find_map(|(l, lr)| match_local(r, e, &members, size, *l, lr).map(|phi| (*l, phi)));
        let (l, phi) = found.ok_or(RingError::NotInCatalog(size))?;
        parts.push((l, e, phi));
    }
    parts.sort_by_key(|(l, _, _)| *l);
    let factors: Vec<LocalRing> = parts.iter().map(|(l, _, _)| *l).collect();
    let ring = compile_ring(&RingSpec::product(factors.iter().map(|f| f.spec())))?;
    let inverses: Vec<Vec<usize>> = parts
        .iter()
        .map(|(_, _, phi)| {
            let mut inv = vec![usize::MAX; r.order()];
            for (code, &y) in phi.iter().enumerate() {
                inv[y] = code;
            }
            inv
        })
        .collect();
    let to_canonical = (0..r.order())
        .map(|x| {
            let tuple: Vec<usize> = parts.iter().zip(&inverses).map(|((_, e, _), inv)| inv[r.mul(*e, x)]).collect();
            ring.encode(&tuple).expect("factor codes are in range")
        })
        .collect();
    Ok(CanonicalForm { factors, ring, to_canonical })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canon(s: &str) -> CanonicalForm {
        canonicalize(&compile_ring(&RingSpec::parse(s).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn splits_and_sorts() {
        assert_eq!(canon("Z6").factors(), &[LocalRing::Z2, LocalRing::Z3]);
        assert_eq!(canon("Z4 x Z2").factors(), &[LocalRing::Z2, LocalRing::Z4]);
        assert_eq!(canon("Z12").factors(), &[LocalRing::Z3, LocalRing::Z4]);
        assert_eq!(canon("Z2[x]/(x^2+x+1)").factors(), &[LocalRing::F4]);
        assert_eq!(canon("Z3[x]/(x^2+1)").factors(), &[LocalRing::F9]);
        assert_eq!(canon("Z2[x]/(x^2+x)").factors(), &[LocalRing::Z2, LocalRing::Z2]);
    }

    #[test]
    fn map_is_ring_isomorphism() {
        for s in ["Z6", "Z3 x Z2", "Z2[x]/(x^2+x) x Z3", "Z20", "GF(4) x Z2"] {
            let r = compile_ring(&RingSpec::parse(s).unwrap()).unwrap();
            let c = canonicalize(&r).unwrap();
            let t = c.ring();
            for a in 0..r.order() {
                for b in 0..r.order() {
                    assert_eq!(c.map(r.add(a, b)), t.add(c.map(a), c.map(b)));
                    assert_eq!(c.map(r.mul(a, b)), t.mul(c.map(a), c.map(b)));
                }
            }
            assert_eq!(c.map(r.one()), t.one());
        }
    }

    #[test]
    fn catalog_entries_are_pairwise_non_isomorphic() {
        for l in LocalRing::ALL {
            assert_eq!(canon(l.spec_text()).factors(), &[l]);
        }
    }

    #[test]
    fn unknown_local_ring() {
        let r = compile_ring(&RingSpec::parse("Z25").unwrap()).unwrap();
        assert!(matches!(canonicalize(&r), Err(RingError::NotInCatalog(25))));
        // order 16 with m^2 of size 4 and characteristic 4: outside the shipped representatives
        let r = compile_ring(&RingSpec::parse("Z4[x]/(x^2+2)").unwrap()).unwrap();
        assert!(matches!(canonicalize(&r), Err(RingError::NotInCatalog(16))));
    }
}
