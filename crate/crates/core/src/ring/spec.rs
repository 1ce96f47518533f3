//! Symbolic ring descriptions and the text grammar used to write them.
//!
//! ```text
//! atom := "Z" n | "GF(" q ")" | "Z" m "[x]/(" poly ")"
//! spec := atom { "x" atom }
//! poly := term { ("+" | "-") term },  term := [c]["*"]"x"["^"k] | c
//! ```

use std::fmt;

use super::RingError;

/// A polynomial with integer coefficients, constant term first.
///
/// Coefficients are reduced modulo the base ring only when the ring is compiled.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly(pub Vec<i64>);

impl Poly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        Poly(c)
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    /// Coefficients reduced into `0..m`, trailing zeros trimmed.
    pub fn reduced(&self, m: u64) -> Vec<u64> {
        let m = m as i64;
        let mut c: Vec<u64> = self.0.iter().map(|&a| a.rem_euclid(m) as u64).collect();
        while c.len() > 1 && c.last() == Some(&0) {
            c.pop();
        }
        c
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(sign)?;
            }
            first = false;
            match (k, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{mag}x")?,
                (_, 1) => write!(f, "x^{k}")?,
                _ => write!(f, "{mag}x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Expression tree for a finite commutative ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    /// `Z_n`.
    ModularInt(u64),
    /// `F_{p^k}`, optionally with an explicit defining polynomial.
    GaloisField { p: u64, k: u32, poly: Option<Poly> },
    /// `Z_m[x]/(f)` with `f` monic.
    QuotientPoly { m: u64, f: Poly },
    /// Direct product; always flat with at least two factors.
    Product(Vec<RingSpec>),
}

impl RingSpec {
    /// Builds a flattened product. A single factor is returned unchanged.
    pub fn product(factors: impl IntoIterator<Item = RingSpec>) -> RingSpec {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                RingSpec::Product(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            RingSpec::Product(flat)
        }
    }

    /// Factors of the product, or the ring itself.
    pub fn factors(&self) -> Vec<&RingSpec> {
        match self {
            RingSpec::Product(fs) => fs.iter().collect(),
            other => vec![other],
        }
    }

    pub fn parse(text: &str) -> Result<RingSpec, RingError> {
        Parser::new(text).spec()
    }
}

impl std::str::FromStr for RingSpec {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RingSpec::parse(s)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::ModularInt(n) => write!(f, "Z{n}"),
            RingSpec::GaloisField { p, k, poly: None } => write!(f, "GF({})", p.pow(*k)),
            // Same coding as the quotient ring, so this round-trips through the parser.
            RingSpec::GaloisField { p, poly: Some(poly), .. } => write!(f, "Z{p}[x]/({poly})"),
            RingSpec::QuotientPoly { m, f: poly } => write!(f, "Z{m}[x]/({poly})"),
            RingSpec::Product(fs) => {
                for (i, factor) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
        }
    }
}

/// Syntax error with a byte offset into the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.pos, self.msg)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, RingError> {
        Err(RingError::Parse(ParseError { pos: self.pos, msg: msg.into() }))
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), RingError> {
        if self.eat(token) {
            Ok(())
        } else {
            self.err(format!("expected `{token}`"))
        }
    }

    fn number(&mut self) -> Result<u64, RingError> {
        let digits: String = self.rest().chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return self.err("expected an integer");
        }
        let start = self.pos;
        self.pos += digits.len();
        digits.parse().map_err(|_| RingError::Parse(ParseError { pos: start, msg: "integer out of range".into() }))
    }

    fn spec(&mut self) -> Result<RingSpec, RingError> {
        let mut factors = Vec::new();
        self.skip_ws();
        factors.push(self.atom()?);
        loop {
            self.skip_ws();
            if self.rest().is_empty() {
                break;
            }
            if !(self.eat("x") || self.eat("×") || self.eat("X")) {
                return self.err("expected `x` between factors");
            }
            self.skip_ws();
            factors.push(self.atom()?);
        }
        Ok(RingSpec::product(factors))
    }

    fn atom(&mut self) -> Result<RingSpec, RingError> {
        if self.eat("GF(") {
            self.skip_ws();
            let q = self.number()?;
            self.skip_ws();
            let q = if self.eat("^") {
                let k = self.number()?;
                checked_pow(q, k).ok_or(RingError::OrderTooLarge { order: u64::MAX, max: 0 })?
            } else {
                q
            };
            self.skip_ws();
            self.expect(")")?;
            let (p, k) = prime_power(q).ok_or(RingError::NotPrimePower(q))?;
            return Ok(RingSpec::GaloisField { p, k, poly: None });
        }
        if self.eat("Z") || self.eat("ℤ") {
            let n = self.number()?;
            if self.eat("[x]/(") {
                self.skip_ws();
                let f = self.poly()?;
                self.skip_ws();
                self.expect(")")?;
                return Ok(RingSpec::QuotientPoly { m: n, f });
            }
            return Ok(RingSpec::ModularInt(n));
        }
        self.err("expected `Z` or `GF(`")
    }

    fn poly(&mut self) -> Result<Poly, RingError> {
        let mut coeffs: Vec<i64> = Vec::new();
        let mut sign = 1i64;
        self.skip_ws();
        if self.eat("-") {
            sign = -1;
        } else {
            self.eat("+");
        }
        loop {
            self.skip_ws();
            let (c, k) = self.term()?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, 0);
            }
            coeffs[k] += sign * c as i64;
            self.skip_ws();
            if self.eat("+") {
                sign = 1;
            } else if self.eat("-") {
                sign = -1;
            } else {
                break;
            }
        }
        Ok(Poly::new(coeffs))
    }

    fn term(&mut self) -> Result<(u64, usize), RingError> {
        let coeff = if self.rest().starts_with(|c: char| c.is_ascii_digit()) {
            let c = self.number()?;
            self.skip_ws();
            self.eat("*");
            self.skip_ws();
            Some(c)
        } else {
            None
        };
        if self.eat("x") {
            self.skip_ws();
            let k = if self.eat("^") {
                self.skip_ws();
                self.number()? as usize
            } else {
                1
            };
            Ok((coeff.unwrap_or(1), k))
        } else if let Some(c) = coeff {
            Ok((c, 0))
        } else {
            self.err("expected a polynomial term")
        }
    }
}

fn checked_pow(base: u64, exp: u64) -> Option<u64> {
    let exp = u32::try_from(exp).ok()?;
    base.checked_pow(exp)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^k` with `p` prime.
pub(crate) fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while q % p != 0 {
        p += 1;
    }
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grammar_example() {
        let spec = RingSpec::parse("Z2 x Z3[x]/(x^2)").unwrap();
        assert_eq!(
            spec,
            RingSpec::Product(vec![RingSpec::ModularInt(2), RingSpec::QuotientPoly { m: 3, f: Poly(vec![0, 0, 1]) },])
        );
        assert_eq!(spec.to_string(), "Z2 x Z3[x]/(x^2)");
    }

    #[test]
    fn parses_fields_and_polys() {
        assert_eq!(RingSpec::parse("GF(9)").unwrap(), RingSpec::GaloisField { p: 3, k: 2, poly: None });
        assert_eq!(RingSpec::parse("GF(2^4)").unwrap(), RingSpec::GaloisField { p: 2, k: 4, poly: None });
        let q = RingSpec::parse("Z2[x]/(x^4 + x^2 + 1)").unwrap();
        assert_eq!(q.to_string(), "Z2[x]/(x^4+x^2+1)");
        let q = RingSpec::parse("Z4[x]/(x^2-2x+3)").unwrap();
        assert_eq!(q, RingSpec::QuotientPoly { m: 4, f: Poly(vec![3, -2, 1]) });
    }

    #[test]
    fn nested_products_flatten() {
        let a = RingSpec::product([RingSpec::ModularInt(2), RingSpec::ModularInt(3)]);
        let b = RingSpec::product([a, RingSpec::ModularInt(5)]);
        assert_eq!(b.factors().len(), 3);
        assert_eq!(RingSpec::product([RingSpec::ModularInt(7)]), RingSpec::ModularInt(7));
    }

    #[test]
    fn parse_errors_carry_position() {
        match RingSpec::parse("Z2 x Q3") {
            Err(RingError::Parse(e)) => assert_eq!(e.pos, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(RingSpec::parse("GF(6)"), Err(RingError::NotPrimePower(6))));
        assert!(matches!(RingSpec::parse("Z4 Z2"), Err(RingError::Parse(_))));
    }
}
