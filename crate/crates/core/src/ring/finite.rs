use std::fmt;

use super::poly;
use super::spec::{is_prime, Poly, RingSpec};
use super::RingError;

/// Default cap on compiled ring order; tables are `O(n^2)`.
pub const DEFAULT_MAX_ORDER: u64 = 4096;

/// A finite commutative ring compiled to operation tables.
///
/// Elements are codes `0..n`. Zero is always code 0. For a product the code is the
/// mixed-radix number of the factor codes with the rightmost factor varying fastest;
/// for `Z_m[x]/(f)` and `GF(p^k)` the code of `c_0 + c_1 x + ...` is `sum c_i m^i`.
#[derive(Clone)]
pub struct FiniteRing {
    name: String,
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    one: usize,
    radices: Vec<usize>,
    factor_names: Vec<String>,
    inverse: Vec<Option<u16>>,
    units: Vec<usize>,
    jacobson: Vec<usize>,
    zero_divisors: Vec<usize>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing").field("name", &self.name).field("order", &self.order).finish_non_exhaustive()
    }
}

/// Compiles with the default order cap.
pub fn compile_ring(spec: &RingSpec) -> Result<FiniteRing, RingError> {
    compile_ring_with_max(spec, DEFAULT_MAX_ORDER)
}

pub fn compile_ring_with_max(spec: &RingSpec, max_order: u64) -> Result<FiniteRing, RingError> {
    let order = spec_order(spec)?;
    if order > max_order || order > u16::MAX as u64 + 1 {
        return Err(RingError::OrderTooLarge { order, max: max_order.min(u16::MAX as u64 + 1) });
    }
    let factors = match spec {
        RingSpec::Product(fs) => {
            if fs.len() < 2 {
                return Err(RingError::Malformed("product needs at least two factors".into()));
            }
            fs.iter().map(compile_atom).collect::<Result<Vec<_>, _>>()?
        }
        atom => vec![compile_atom(atom)?],
    };
    let mut ring = if factors.len() == 1 { factors.into_iter().next().unwrap() } else { product_tables(&factors) };
    ring.name = spec.to_string();
    ring.derive_caches();
    Ok(ring)
}

fn spec_order(spec: &RingSpec) -> Result<u64, RingError> {
    let too_big = || RingError::OrderTooLarge { order: u64::MAX, max: DEFAULT_MAX_ORDER };
    match spec {
        RingSpec::ModularInt(n) => {
            if *n < 2 {
                return Err(RingError::Malformed(format!("Z{n}: modulus must be at least 2")));
            }
            Ok(*n)
        }
        RingSpec::GaloisField { p, k, .. } => {
            if *k == 0 {
                return Err(RingError::Malformed("GF degree must be at least 1".into()));
            }
            p.checked_pow(*k).ok_or_else(too_big)
        }
        RingSpec::QuotientPoly { m, f } => {
            if *m < 2 {
                return Err(RingError::Malformed(format!("Z{m}: modulus must be at least 2")));
            }
            let d = f.reduced(*m).len().saturating_sub(1);
            if d == 0 {
                return Err(RingError::Malformed("quotient polynomial must have degree >= 1".into()));
            }
            m.checked_pow(d as u32).ok_or_else(too_big)
        }
        RingSpec::Product(fs) => fs.iter().try_fold(1u64, |acc, f| acc.checked_mul(spec_order(f)?).ok_or_else(too_big)),
    }
}

fn compile_atom(spec: &RingSpec) -> Result<FiniteRing, RingError> {
    match spec {
        RingSpec::ModularInt(n) => Ok(modular(*n as usize)),
        RingSpec::GaloisField { p, k, poly } => {
            if !is_prime(*p) {
                return Err(RingError::NotPrimePower(*p));
            }
            let f = match poly {
                Some(f) => {
                    let c = f.reduced(*p);
                    if c.len() != *k as usize + 1 {
                        return Err(RingError::Malformed(format!(
                            "GF({}) polynomial {f} must have degree {k}",
                            p.pow(*k)
                        )));
                    }
                    if c[*k as usize] != 1 {
                        return Err(RingError::NonMonicPoly(f.to_string()));
                    }
                    if !poly::is_irreducible(&c, *p) {
                        return Err(RingError::NonIrreduciblePoly(f.to_string()));
                    }
                    c
                }
                None => poly::least_irreducible(*p, *k as usize),
            };
            Ok(quotient(*p as usize, &f))
        }
        RingSpec::QuotientPoly { m, f } => {
            let c = f.reduced(*m);
            if c.last() != Some(&1) {
                return Err(RingError::NonMonicPoly(f.to_string()));
            }
            Ok(quotient(*m as usize, &c))
        }
        RingSpec::Product(_) => Err(RingError::Malformed("nested product".into())),
    }
}

fn empty(n: usize) -> FiniteRing {
    FiniteRing {
        name: String::new(),
        order: n,
        add: vec![0; n * n],
        mul: vec![0; n * n],
        neg: vec![0; n],
        one: 0,
        radices: vec![n],
        factor_names: Vec::new(),
        inverse: Vec::new(),
        units: Vec::new(),
        jacobson: Vec::new(),
        zero_divisors: Vec::new(),
    }
}

fn modular(n: usize) -> FiniteRing {
    let mut r = empty(n);
    for a in 0..n {
        for b in 0..n {
            r.add[a * n + b] = ((a + b) % n) as u16;
            r.mul[a * n + b] = ((a * b) % n) as u16;
        }
        r.neg[a] = ((n - a) % n) as u16;
    }
    r.one = 1 % n;
    r.factor_names = vec![format!("Z{n}")];
    r
}

fn quotient(m: usize, f: &[u64]) -> FiniteRing {
    let d = f.len() - 1;
    let n = m.pow(d as u32);
    let decode = |mut code: usize| -> Vec<u64> {
        let mut c = vec![0u64; d];
        for slot in c.iter_mut() {
            *slot = (code % m) as u64;
            code /= m;
        }
        c
    };
    let encode = |c: &[u64]| -> usize { c.iter().rev().fold(0, |acc, &x| acc * m + x as usize) };
    let elems: Vec<Vec<u64>> = (0..n).map(decode).collect();
    let mut r = empty(n);
    for a in 0..n {
        for b in 0..n {
            let sum: Vec<u64> = elems[a].iter().zip(&elems[b]).map(|(x, y)| (x + y) % m as u64).collect();
            r.add[a * n + b] = encode(&sum) as u16;
            let prod = poly::mul_mod(&elems[a], &elems[b], f, m as u64);
            r.mul[a * n + b] = encode(&prod) as u16;
        }
        let neg: Vec<u64> = elems[a].iter().map(|x| (m as u64 - x) % m as u64).collect();
        r.neg[a] = encode(&neg) as u16;
    }
    r.one = 1;
    r.factor_names = vec![format!("Z{m}[x]/({})", Poly::new(f.iter().map(|&c| c as i64).collect()))];
    r
}

fn product_tables(factors: &[FiniteRing]) -> FiniteRing {
    let radices: Vec<usize> = factors.iter().map(|f| f.order).collect();
    let n: usize = radices.iter().product();
    let decode = |mut code: usize| -> Vec<usize> {
        let mut t = vec![0; radices.len()];
        for i in (0..radices.len()).rev() {
            t[i] = code % radices[i];
            code /= radices[i];
        }
        t
    };
    let encode = |t: &[usize]| -> usize { t.iter().zip(&radices).fold(0, |acc, (&x, &r)| acc * r + x) };
    let tuples: Vec<Vec<usize>> = (0..n).map(decode).collect();
    let mut r = empty(n);
    let mut buf = vec![0; radices.len()];
    for a in 0..n {
        for b in 0..n {
            for (i, f) in factors.iter().enumerate() {
                buf[i] = f.add(tuples[a][i], tuples[b][i]);
            }
            r.add[a * n + b] = encode(&buf) as u16;
            for (i, f) in factors.iter().enumerate() {
                buf[i] = f.mul(tuples[a][i], tuples[b][i]);
            }
            r.mul[a * n + b] = encode(&buf) as u16;
        }
        for (i, f) in factors.iter().enumerate() {
            buf[i] = f.neg(tuples[a][i]);
        }
        r.neg[a] = encode(&buf) as u16;
    }
    let ones: Vec<usize> = factors.iter().map(|f| f.one).collect();
    r.one = encode(&ones);
    r.radices = radices;
    r.factor_names = factors.iter().flat_map(|f| f.factor_names.clone()).collect();
    r
}

impl FiniteRing {
    fn derive_caches(&mut self) {
        let n = self.order;
        self.inverse = (0..n).map(|a| (0..n).find(|&b| self.mul(a, b) == self.one).map(|b| b as u16)).collect();
        self.units = (0..n).filter(|&a| self.inverse[a].is_some()).collect();
        self.jacobson = (0..n).filter(|&a| self.is_nilpotent(a)).collect();
        self.zero_divisors = (0..n).filter(|&a| (1..n).any(|b| self.mul(a, b) == 0)).collect();
    }

    fn is_nilpotent(&self, a: usize) -> bool {
        let mut x = a;
        for _ in 0..=self.order {
            if x == 0 {
                return true;
            }
            x = self.mul(x, a);
        }
        false
    }

    /// Canonical text of the spec this ring was compiled from.
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// `-1`.
    pub fn minus_one(&self) -> usize {
        self.neg(self.one)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        self.inverse[a].map(usize::from)
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.inverse[a].is_some()
    }

    /// `U(R)`, sorted.
    pub fn units(&self) -> &[usize] {
        &self.units
    }

    /// `J(R)` computed as the nilradical, which coincides with the Jacobson radical
    /// for finite commutative rings.
    pub fn jacobson_radical(&self) -> &[usize] {
        &self.jacobson
    }

    /// `Z(R)`, including 0.
    pub fn zero_divisors(&self) -> &[usize] {
        &self.zero_divisors
    }

    pub fn non_units(&self) -> Vec<usize> {
        (0..self.order).filter(|&a| !self.is_unit(a)).collect()
    }

    /// The unique maximal ideal when the ring is local.
    pub fn local_maximal_ideal(&self) -> Option<Vec<usize>> {
        let nu = self.non_units();
        let closed = nu.iter().all(|&a| nu.iter().all(|&b| !self.is_unit(self.add(a, b))));
        closed.then_some(nu)
    }

    pub fn is_local(&self) -> bool {
        self.local_maximal_ideal().is_some()
    }

    pub fn is_field(&self) -> bool {
        self.units.len() == self.order - 1
    }

    /// Orders of the product factors (a single entry for non-products).
    pub fn radices(&self) -> &[usize] {
        &self.radices
    }

    pub fn factor_names(&self) -> &[String] {
        &self.factor_names
    }

    pub fn decode(&self, mut code: usize) -> Vec<usize> {
        let mut t = vec![0; self.radices.len()];
        for i in (0..self.radices.len()).rev() {
            t[i] = code % self.radices[i];
            code /= self.radices[i];
        }
        t
    }

    pub fn encode(&self, tuple: &[usize]) -> Option<usize> {
        if tuple.len() != self.radices.len() || tuple.iter().zip(&self.radices).any(|(&x, &r)| x >= r) {
            return None;
        }
        Some(tuple.iter().zip(&self.radices).fold(0, |acc, (&x, &r)| acc * r + x))
    }

    /// `(a,b,...)` for products, the bare code otherwise.
    pub fn format_element(&self, code: usize) -> String {
        if self.radices.len() == 1 {
            code.to_string()
        } else {
            let parts: Vec<String> = self.decode(code).iter().map(|c| c.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }

    /// Parses a bare code, a tuple `(a,b,...)` of factor codes, or `-1`.
    pub fn parse_element(&self, text: &str) -> Result<usize, RingError> {
        let t = text.trim();
        if t == "-1" {
            return Ok(self.minus_one());
        }
        let code = if let Some(inner) = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
            let parts = inner
                .split(',')
                .map(|p| p.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| RingError::BadElement(t.to_string()))?;
            self.encode(&parts).ok_or_else(|| RingError::BadElement(t.to_string()))?
        } else {
            t.parse::<usize>().map_err(|_| RingError::BadElement(t.to_string()))?
        };
        if code >= self.order {
            return Err(RingError::BadElement(t.to_string()));
        }
        Ok(code)
    }

    /// Principal ideal `Rx`.
    pub fn principal_ideal(&self, x: usize) -> Vec<bool> {
        let mut set = vec![false; self.order];
        for r in 0..self.order {
            set[self.mul(r, x)] = true;
        }
        set
    }

    /// Whether `Rx + Ry = R`.
    pub fn comaximal(&self, x: usize, y: usize) -> bool {
        if self.is_unit(x) || self.is_unit(y) {
            return true;
        }
        let rx = self.principal_ideal(x);
        let ry = self.principal_ideal(y);
        let one = self.one;
        // 1 = a + b with a in Rx, b in Ry  <=>  1 - a in Ry for some a in Rx
        (0..self.order).any(|a| rx[a] && ry[self.sub(one, a)])
    }

    /// All ideals `m` with `|R/m| = 2`.
    ///
    /// Enumerates the additive characters `R -> Z_2` and keeps the kernels that
    /// absorb multiplication.
    pub fn index2_maximal_ideals(&self) -> Vec<Vec<usize>> {
        if self.order % 2 != 0 {
            return Vec::new();
        }
        let gens = self.additive_generators();
        let mut ideals = Vec::new();
        for mask in 1u64..(1u64 << gens.len()) {
            let Some(chi) = self.extend_character(&gens, mask) else { continue };
            let kernel: Vec<usize> = (0..self.order).filter(|&a| !chi[a]).collect();
            let absorbs = kernel.iter().all(|&k| (0..self.order).all(|r| !chi[self.mul(r, k)]));
            if absorbs && !kernel.contains(&self.one) {
                ideals.push(kernel);
            }
        }
        ideals.sort();
        ideals.dedup();
        ideals
    }

    fn additive_generators(&self) -> Vec<usize> {
        let mut span = vec![false; self.order];
        span[0] = true;
        let mut gens = Vec::new();
        for g in 0..self.order {
            if span[g] {
                continue;
            }
            gens.push(g);
            // close the span under adding g
            loop {
                let mut grew = false;
                for a in 0..self.order {
                    if span[a] && !span[self.add(a, g)] {
                        span[self.add(a, g)] = true;
                        grew = true;
                    }
                }
                if !grew {
                    break;
                }
            }
        }
        gens
    }

    /// Extends `gens[i] -> bit i of mask` to a homomorphism `(R,+) -> Z_2`.
    fn extend_character(&self, gens: &[usize], mask: u64) -> Option<Vec<bool>> {
        let mut value: Vec<Option<bool>> = vec![None; self.order];
        value[0] = Some(false);
        let mut stack = vec![0usize];
        while let Some(a) = stack.pop() {
            let va = value[a].unwrap();
            for (i, &g) in gens.iter().enumerate() {
                let vb = va ^ ((mask >> i) & 1 == 1);
                let b = self.add(a, g);
                match value[b] {
                    None => {
                        value[b] = Some(vb);
                        stack.push(b);
                    }
                    Some(v) if v != vb => return None,
                    Some(_) => {}
                }
            }
        }
        Some(value.into_iter().map(|v| v.unwrap_or(false)).collect())
    }

    /// Characteristic of the ring.
    pub fn characteristic(&self) -> usize {
        let mut x = self.one;
        let mut k = 1;
        while x != 0 {
            x = self.add(x, self.one);
            k += 1;
        }
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> FiniteRing {
        compile_ring(&RingSpec::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn z8_units_and_radical() {
        let r = ring("Z8");
        assert_eq!(r.units(), &[1, 3, 5, 7]);
        assert_eq!(r.jacobson_radical(), &[0, 2, 4, 6]);
        assert_eq!(r.local_maximal_ideal(), Some(vec![0, 2, 4, 6]));
    }

    #[test]
    fn gf4_auto_poly() {
        let r = ring("GF(4)");
        assert_eq!(r.order(), 4);
        assert_eq!(r.units().len(), 3);
        assert!(r.is_field());
        assert_eq!(r.factor_names(), &["Z2[x]/(x^2+x+1)".to_string()]);
    }

    #[test]
    fn dual_numbers_over_z2() {
        let r = ring("Z2[x]/(x^2)");
        assert_eq!(r.jacobson_radical(), &[0, 2]);
        assert!(r.is_local());
    }

    #[test]
    fn units_examples() {
        assert_eq!(ring("Z6").units(), &[1, 5]);
        assert_eq!(ring("Z5").units(), &[1, 2, 3, 4]);
        let r = ring("Z2 x GF(4)");
        let expect: Vec<usize> = [1, 2, 3].iter().map(|&b| r.encode(&[1, b]).unwrap()).collect();
        assert_eq!(r.units(), expect.as_slice());
    }

    #[test]
    fn radical_examples() {
        assert_eq!(ring("Z9").jacobson_radical(), &[0, 3, 6]);
        assert_eq!(ring("Z3 x Z3").jacobson_radical(), &[0]);
        let r = ring("Z2 x Z4");
        assert_eq!(r.jacobson_radical(), &[0, r.encode(&[0, 2]).unwrap()]);
    }

    #[test]
    fn locality() {
        assert!(!ring("Z3 x Z3").is_local());
        let r = ring("Z2[x]/(x^3)");
        assert_eq!(r.local_maximal_ideal().unwrap().len(), 4);
    }

    #[test]
    fn index2_ideals() {
        let r = ring("Z2 x Z5");
        let m: Vec<usize> = (0..5).map(|b| r.encode(&[0, b]).unwrap()).collect();
        assert_eq!(r.index2_maximal_ideals(), vec![m]);
        assert!(ring("Z5").index2_maximal_ideals().is_empty());
        assert_eq!(ring("Z4").index2_maximal_ideals(), vec![vec![0, 2]]);
        assert_eq!(ring("Z2 x Z2").index2_maximal_ideals().len(), 2);
        assert!(ring("GF(4)").index2_maximal_ideals().is_empty());
    }

    #[test]
    fn comaximal_examples() {
        assert!(ring("Z6").comaximal(2, 3));
        assert!(!ring("Z4").comaximal(2, 2));
        let r = ring("Z2 x Z4");
        assert!(r.comaximal(r.encode(&[1, 0]).unwrap(), r.encode(&[0, 1]).unwrap()));
    }

    #[test]
    fn errors() {
        let bad = RingSpec::GaloisField { p: 2, k: 2, poly: Some(Poly(vec![1, 0, 1])) };
        assert!(matches!(compile_ring(&bad), Err(RingError::NonIrreduciblePoly(_))));
        let nonmonic = RingSpec::QuotientPoly { m: 4, f: Poly(vec![1, 0, 2]) };
        assert!(matches!(compile_ring(&nonmonic), Err(RingError::NonMonicPoly(_))));
        assert!(matches!(compile_ring(&RingSpec::ModularInt(5000)), Err(RingError::OrderTooLarge { .. })));
        assert!(compile_ring_with_max(&RingSpec::ModularInt(5000), 6000).is_ok());
        let composite = RingSpec::GaloisField { p: 6, k: 1, poly: None };
        assert!(matches!(compile_ring(&composite), Err(RingError::NotPrimePower(6))));
    }

    #[test]
    fn element_io() {
        let r = ring("Z3 x Z3");
        assert_eq!(r.parse_element("(2,1)").unwrap(), 7);
        assert_eq!(r.format_element(7), "(2,1)");
        assert_eq!(r.parse_element("-1").unwrap(), 8);
        assert!(r.parse_element("(3,0)").is_err());
        assert!(r.parse_element("9").is_err());
    }
}
