//! Integer polynomials in one variable, the common currency of point counts.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact polynomial with coefficients stored in ascending degree, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CountPolynomial {
    coeffs: Vec<i64>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse polynomial {input:?} at byte {pos}: {msg}")]
pub struct ParseError {
    pub input: String,
    pub pos: usize,
    pub msg: &'static str,
}

impl CountPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        CountPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::new(vec![0, 1])
    }

    /// Builds from coefficients listed highest degree first.
    pub fn from_descending(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().rev().copied().collect())
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: i128) -> i128 {
        self.coeffs.iter().rev().fold(0i128, |acc, &c| acc * x + c as i128)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(1), |acc, _| &acc * self)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Exact division of every coefficient, `None` if some coefficient is not divisible.
    pub fn div_exact(&self, k: i64) -> Option<Self> {
        self.coeffs
            .iter()
            .map(|&c| (c % k == 0).then_some(c / k))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    /// Parses expressions such as `(q^2+q+1)(q^7-q)` or `2(q^4-q)^2 - 3q`.
    /// Any single ASCII letter serves as the variable; juxtaposition multiplies;
    /// division by integer constants is allowed as long as the result is integral.
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let mut p = Parser { src: s.as_bytes(), pos: 0, input: s };
        let out = p.integral()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }

    /// Human-readable form, highest degree first, in the variable `var`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(sign);
            }
            let a = c.unsigned_abs();
            match k {
                0 => out.push_str(&a.to_string()),
                _ => {
                    if a != 1 {
                        out.push_str(&a.to_string());
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push('^');
                        out.push_str(&k.to_string());
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for CountPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("q"))
    }
}

impl Add for &CountPolynomial {
    type Output = CountPolynomial;
    fn add(self, rhs: Self) -> CountPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        CountPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &CountPolynomial {
    type Output = CountPolynomial;
    fn sub(self, rhs: Self) -> CountPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        CountPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &CountPolynomial {
    type Output = CountPolynomial;
    fn mul(self, rhs: Self) -> CountPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return CountPolynomial::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CountPolynomial::new(out)
    }
}

impl Neg for &CountPolynomial {
    type Output = CountPolynomial;
    fn neg(self) -> CountPolynomial {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for CountPolynomial {
            type Output = CountPolynomial;
            fn $m(self, rhs: Self) -> CountPolynomial { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for CountPolynomial {
    type Output = CountPolynomial;
    fn neg(self) -> CountPolynomial {
        -&self
    }
}

impl std::iter::Sum for CountPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

/// A polynomial with rational coefficients, kept as `num / den` with `den > 0` in lowest terms.
/// Component counts such as `(q^2-q)/2` are integer-valued at odd `q` without having
/// integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScaledPolynomial {
    pub num: CountPolynomial,
    pub den: i64,
}

impl ScaledPolynomial {
    pub fn int(p: CountPolynomial) -> Self {
        ScaledPolynomial { num: p, den: 1 }
    }

    pub fn new(num: CountPolynomial, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        ScaledPolynomial { num: num.scale(den.signum()), den: den.abs() }.reduce()
    }

    /// Parses like [`CountPolynomial::parse`] but allows a non-integral result.
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let mut p = Parser { src: s.as_bytes(), pos: 0, input: s };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }

    /// Exact value at `x`, `None` if the denominator does not divide.
    pub fn eval(&self, x: i128) -> Option<i128> {
        let n = self.num.eval(x);
        (n % self.den as i128 == 0).then(|| n / self.den as i128)
    }

    pub fn to_integral(&self) -> Option<CountPolynomial> {
        (self.den == 1).then(|| self.num.clone())
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.num.scale(k), self.den)
    }

    fn add(self, o: ScaledPolynomial, sign: i64) -> ScaledPolynomial {
        let num = &self.num.scale(o.den) + &o.num.scale(sign * self.den);
        ScaledPolynomial { num, den: self.den * o.den }.reduce()
    }

    fn mul(self, o: ScaledPolynomial) -> ScaledPolynomial {
        ScaledPolynomial { num: &self.num * &o.num, den: self.den * o.den }.reduce()
    }

    fn reduce(self) -> ScaledPolynomial {
        let g = self.num.coeffs().iter().fold(self.den, |g, &c| gcd_i64(g, c));
        ScaledPolynomial { num: self.num.div_exact(g).unwrap(), den: self.den / g }
    }
}

impl fmt::Display for ScaledPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

impl Add for &ScaledPolynomial {
    type Output = ScaledPolynomial;
    fn add(self, rhs: Self) -> ScaledPolynomial {
        self.clone().add(rhs.clone(), 1)
    }
}

impl Sub for &ScaledPolynomial {
    type Output = ScaledPolynomial;
    fn sub(self, rhs: Self) -> ScaledPolynomial {
        self.clone().add(rhs.clone(), -1)
    }
}

impl Mul for &ScaledPolynomial {
    type Output = ScaledPolynomial;
    fn mul(self, rhs: Self) -> ScaledPolynomial {
        self.clone().mul(rhs.clone())
    }
}

impl Add for ScaledPolynomial {
    type Output = ScaledPolynomial;
    fn add(self, rhs: Self) -> ScaledPolynomial {
        ScaledPolynomial::add(self, rhs, 1)
    }
}

impl Sub for ScaledPolynomial {
    type Output = ScaledPolynomial;
    fn sub(self, rhs: Self) -> ScaledPolynomial {
        ScaledPolynomial::add(self, rhs, -1)
    }
}

impl Mul for ScaledPolynomial {
    type Output = ScaledPolynomial;
    fn mul(self, rhs: Self) -> ScaledPolynomial {
        ScaledPolynomial::mul(self, rhs)
    }
}

impl From<CountPolynomial> for ScaledPolynomial {
    fn from(p: CountPolynomial) -> Self {
        Self::int(p)
    }
}

impl std::iter::Sum for ScaledPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::int(CountPolynomial::zero()), |a, b| a + b)
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    input: &'a str,
}

impl Parser<'_> {
    fn err(&self, msg: &'static str) -> ParseError {
        ParseError { input: self.input.to_string(), pos: self.pos, msg }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integral(&mut self) -> Result<CountPolynomial, ParseError> {
        let f = self.expr()?;
        if f.den != 1 {
            return Err(self.err("expression is not integral"));
        }
        Ok(f.num)
    }

    fn expr(&mut self) -> Result<ScaledPolynomial, ParseError> {
        let mut acc = if self.eat(b'-') {
            ScaledPolynomial::int(CountPolynomial::zero()).add(self.term()?, -1)
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add(self.term()?, 1);
            } else if self.eat(b'-') {
                acc = acc.add(self.term()?, -1);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ScaledPolynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(self.factor()?);
            } else if self.eat(b'/') {
                let d = self.factor()?;
                let k = match d.num.coeffs() {
                    [k] if *k != 0 && d.den == 1 => *k,
                    _ => return Err(self.err("can only divide by a nonzero integer")),
                };
                acc = ScaledPolynomial { num: acc.num.scale(k.signum()), den: acc.den * k.abs() }.reduce();
            } else if matches!(self.peek(), Some(c) if c == b'(' || c.is_ascii_alphanumeric()) {
                acc = acc.mul(self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<ScaledPolynomial, ParseError> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                e
            }
            Some(c) if c.is_ascii_digit() => ScaledPolynomial::int(CountPolynomial::constant(self.integer()? as i64)),
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                ScaledPolynomial::int(CountPolynomial::var())
            }
            _ => return Err(self.err("expected a factor")),
        };
        if self.eat(b'^') {
            let close = match self.peek() {
                Some(b'{') => Some(b'}'),
                Some(b'(') => Some(b')'),
                _ => None,
            };
            if close.is_some() {
                self.pos += 1;
            }
            if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Err(self.err("expected an exponent"));
            }
            let e = self.integer()? as u32;
            if let Some(c) = close {
                if !self.eat(c) {
                    return Err(self.err("unclosed exponent"));
                }
            }
            return Ok(ScaledPolynomial { num: base.num.pow(e), den: base.den.pow(e) });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }
}
