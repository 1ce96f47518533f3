//! The finite set of (ring, graph family, connection set) triples to classify.

use std::collections::BTreeSet;
use std::fmt;

use crate::ring::{compile_ring, inverse_closed_subsets, LocalRing, RingError, RingSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `Γ(R, U(R), S)`.
    Gamma,
    Comaximal,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Gamma => "gamma",
            Family::Comaximal => "comaximal",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniverseMember {
    pub spec: RingSpec,
    pub factors: Vec<LocalRing>,
    pub family: Family,
    /// Connection set as element codes; empty for the co-maximal family.
    pub s: Vec<usize>,
    pub s_label: String,
}

impl UniverseMember {
    pub fn spec_string(&self) -> String {
        self.spec.to_string()
    }

    pub fn sort_key(&self) -> (String, Family, Vec<usize>) {
        (self.spec_string(), self.family, self.s.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingUniverse {
    pub catalog: Vec<LocalRing>,
    pub max_order: usize,
    pub max_factors: usize,
    pub s_one: bool,
    pub s_minus_one: bool,
    pub s_units: bool,
    /// Every inverse-closed `S` for rings up to this order.
    pub exhaustive_s_max_order: usize,
    /// Co-maximal graphs for rings up to this order; 0 disables the family.
    pub comaximal_max_order: usize,
}

impl Default for RingUniverse {
    fn default() -> Self {
        RingUniverse {
            catalog: LocalRing::ALL.to_vec(),
            max_order: 18,
            max_factors: 4,
            s_one: true,
            s_minus_one: true,
            s_units: true,
            exhaustive_s_max_order: 9,
            comaximal_max_order: 16,
        }
    }
}

impl RingUniverse {
    /// Products `L_1 x ... x L_t` of catalog rings (`L_1 <= ... <= L_t`) within
    /// the order and factor limits.
    pub fn rings(&self) -> Vec<Vec<LocalRing>> {
        let mut catalog = self.catalog.clone();
        catalog.sort();
        catalog.dedup();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            catalog: &[LocalRing],
            start: usize,
            order: usize,
            u: &RingUniverse,
            cur: &mut Vec<LocalRing>,
            out: &mut Vec<Vec<LocalRing>>,
        ) {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            if cur.len() == u.max_factors {
                return;
            }
            for (i, &l) in catalog.iter().enumerate().skip(start) {
                if order * l.order() <= u.max_order {
                    cur.push(l);
                    rec(catalog, i, order * l.order(), u, cur, out);
                    cur.pop();
                }
            }
        }
        rec(&catalog, 0, 1, self, &mut cur, &mut out);
        out
    }

    pub fn members(&self) -> Result<Vec<UniverseMember>, RingError> {
        let mut out = Vec::new();
        for factors in self.rings() {
            let spec = RingSpec::product(factors.iter().map(|f| f.spec()));
            let r = compile_ring(&spec)?;
            let order = r.order();
            let fmt_set = |s: &[usize]| {
                let parts: Vec<String> = s.iter().map(|&x| r.format_element(x)).collect();
                format!("{{{}}}", parts.join(","))
            };
            let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
            let mut push = |s: Vec<usize>, label: String| {
                let mut s = s;
                s.sort_unstable();
                s.dedup();
                if seen.insert(s.clone()) {
                    out.push(UniverseMember {
                        spec: spec.clone(),
                        factors: factors.clone(),
                        family: Family::Gamma,
                        s,
                        s_label: label,
                    });
                }
            };
            if self.s_one {
                push(vec![r.one()], "{1}".into());
            }
            if self.s_minus_one {
                push(vec![r.minus_one()], "{-1}".into());
            }
            if self.s_units {
                push(r.units().to_vec(), "U(R)".into());
            }
            if order <= self.exhaustive_s_max_order {
                for s in inverse_closed_subsets(&r) {
                    let label = fmt_set(&s);
                    push(s, label);
                }
            }
            if order <= self.comaximal_max_order {
                out.push(UniverseMember {
                    spec: spec.clone(),
                    factors: factors.clone(),
                    family: Family::Comaximal,
                    s: Vec::new(),
                    s_label: "-".into(),
                });
            }
        }
        out.sort_by_key(|m| m.sort_key());
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_rings_respect_limits() {
        let u = RingUniverse::default();
        let rings = u.rings();
        assert!(rings.iter().all(|f| f.len() <= 4 && f.iter().map(|l| l.order()).product::<usize>() <= 18));
        assert!(rings.contains(&vec![LocalRing::Z2, LocalRing::Z3, LocalRing::Z3]));
        assert!(rings.contains(&vec![LocalRing::Z2; 4]));
        assert!(!rings.contains(&vec![LocalRing::Z3, LocalRing::Z7]));
    }

    #[test]
    fn z3xz3_gets_every_connection_set() {
        let members = RingUniverse::default().members().unwrap();
        let z3z3: Vec<_> = members
            .iter()
            .filter(|m| m.factors == [LocalRing::Z3, LocalRing::Z3] && m.family == Family::Gamma)
            .collect();
        assert_eq!(z3z3.len(), 15);
    }

    #[test]
    fn members_are_sorted_and_distinct() {
        let members = RingUniverse::default().members().unwrap();
        let keys: Vec<_> = members.iter().map(|m| m.sort_key()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
    }
}
