//! Elements of the rational function field Q(q).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::Poly;
use crate::error::{Error, Result};

/// A Laurent polynomial `Σ c_i q^(low + i)`, used as raw input to
/// [`normalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    pub low: i64,
    pub coeffs: Vec<BigInt>,
}

impl Laurent {
    pub fn new(low: i64, coeffs: Vec<BigInt>) -> Self {
        Laurent { low, coeffs }
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        if terms.is_empty() {
            return Laurent { low: 0, coeffs: Vec::new() };
        }
        let low = terms.iter().map(|t| t.0).min().unwrap();
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for &(e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Laurent { low, coeffs }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// Canonical element of Q(q).
///
/// `num` and `den` are integer polynomials, coprime over Q[q], with coprime
/// integer contents and `den` having a positive leading coefficient. Equal
/// field elements therefore have identical representations; zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QScalar {
    num: Poly,
    den: Poly,
}

/// Reduces a raw Laurent fraction to canonical form.
pub fn normalize(num: &Laurent, den: &Laurent) -> Result<QScalar> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    // num / den = (N * q^a) / (D * q^b) with N, D polynomials.
    let n = Poly::from_coeffs(num.coeffs.clone());
    let d = Poly::from_coeffs(den.coeffs.clone());
    let shift = num.low - den.low;
    let (n, d) = if shift >= 0 {
        (n.shift_up(shift as usize), d)
    } else {
        (n, d.shift_up((-shift) as usize))
    };
    QScalar::from_polys(n, d)
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        QScalar { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_i64(c: i64) -> Self {
        QScalar { num: Poly::constant(BigInt::from(c)), den: Poly::one() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Result<Self> {
        QScalar::from_polys(Poly::constant(n.into()), Poly::constant(d.into()))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        QScalar::from_polys(Poly::constant(r.numer().clone()), Poly::constant(r.denom().clone()))
            .expect("rational with zero denominator")
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        QScalar::q_pow(1)
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(e: i64) -> Self {
        if e >= 0 {
            QScalar { num: Poly::monomial(BigInt::one(), e as usize), den: Poly::one() }
        } else {
            QScalar { num: Poly::one(), den: Poly::monomial(BigInt::one(), (-e) as usize) }
        }
    }

    /// Quantum integer `[n]_q = (q^n - q^-n) / (q - q^-1)`.
    pub fn qint(n: i64) -> Self {
        if n < 0 {
            return -QScalar::qint(-n);
        }
        if n == 0 {
            return QScalar::zero();
        }
        // q^(n-1) + q^(n-3) + ... + q^(1-n)
        let terms: Vec<(i64, i64)> = (0..n).map(|i| (n - 1 - 2 * i, 1)).collect();
        QScalar::laurent(&terms)
    }

    /// Laurent polynomial from `(exponent, coefficient)` pairs.
    pub fn laurent(terms: &[(i64, i64)]) -> Self {
        normalize(&Laurent::from_terms(terms), &Laurent::from_terms(&[(0, 1)]))
            .expect("unit denominator")
    }

    /// Builds a canonical element from arbitrary integer polynomials.
    pub fn from_polys(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(QScalar::zero());
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        Ok(QScalar::fix_content(num, den))
    }

    /// Removes a common integer content and makes the denominator's leading
    /// coefficient positive. Assumes polynomial coprimality already holds.
    fn fix_content(mut num: Poly, mut den: Poly) -> Self {
        if num.is_zero() {
            return QScalar::zero();
        }
        let cn = num.content();
        let cd = den.content();
        let c = cn.gcd(&cd);
        if !c.is_one() {
            num = num.div_int(&c);
            den = den.div_int(&c);
        }
        if den.leading().is_some_and(|l| l.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        QScalar { num, den }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value does not depend on `q`.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The rational value of a `q`-free element.
    pub fn as_rational(&self) -> Option<BigRational> {
        if !self.is_constant() {
            return None;
        }
        let n = self.num.coeffs().first().cloned().unwrap_or_default();
        let d = self.den.coeffs()[0].clone();
        Some(BigRational::new(n, d))
    }

    /// Denominator is a monomial `q^m` with unit coefficient: a Laurent
    /// polynomial with integer coefficients. Returns `(low exponent, poly)`.
    pub fn as_laurent(&self) -> Option<(i64, &Poly)> {
        let dc = self.den.coeffs();
        if self.den.term_count() == 1 && dc.last().unwrap().is_one() {
            Some((-(self.den.degree() as i64), &self.num))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QScalar::fix_content(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Exact value at `q = 1`.
    pub fn eval_at_one(&self) -> Result<BigRational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::NotRegularAtOne);
        }
        Ok(BigRational::new(self.num.eval_at_one(), d))
    }

    /// Value at an arbitrary rational point.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    /// Rough size measure used to order terms for display.
    pub fn complexity(&self) -> usize {
        self.num.term_count() + self.den.term_count() + self.num.degree() + self.den.degree()
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return QScalar::from_polys(self.num.add(&other.num), self.den.clone())
                .expect("nonzero denominator");
        }
        if self.den.is_one() {
            let n = self.num.mul(&other.den).add(&other.num);
            return QScalar::fix_content(n, other.den.clone());
        }
        if other.den.is_one() {
            let n = other.num.mul(&self.den).add(&self.num);
            return QScalar::fix_content(n, self.den.clone());
        }
        let g = Poly::gcd(&self.den, &other.den);
        if g.is_one() {
            let n = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            return QScalar::fix_content(n, self.den.mul(&other.den));
        }
        let b1 = self.den.div_exact(&g);
        let d1 = other.den.div_exact(&g);
        let t = self.num.mul(&d1).add(&other.num.mul(&b1));
        if t.is_zero() {
            return QScalar::zero();
        }
        let h = Poly::gcd(&t, &g);
        let (t, dh) = if h.is_one() {
            (t, other.den.clone())
        } else {
            (t.div_exact(&h), other.den.div_exact(&h))
        };
        QScalar::fix_content(t, b1.mul(&dh))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QScalar::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return QScalar::fix_content(self.num.mul(&other.num), Poly::one());
        }
        let g1 = Poly::gcd(&self.num, &other.den);
        let g2 = Poly::gcd(&other.num, &self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), other.den.clone())
        } else {
            (self.num.div_exact(&g1), other.den.div_exact(&g1))
        };
        let (c, b) = if g2.is_one() {
            (other.num.clone(), self.den.clone())
        } else {
            (other.num.div_exact(&g2), self.den.div_exact(&g2))
        };
        QScalar::fix_content(a.mul(&c), b.mul(&d))
    }
}

impl Default for QScalar {
    fn default() -> Self {
        QScalar::zero()
    }
}

impl From<i64> for QScalar {
    fn from(c: i64) -> Self {
        QScalar::from_i64(c)
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar { num: self.num.neg(), den: self.den }
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar { num: self.num.neg(), den: self.den.clone() }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&QScalar> for &QScalar {
            type Output = QScalar;
            fn $method(self, rhs: &QScalar) -> QScalar {
                $body(self, rhs)
            }
        }
        impl $tr<QScalar> for QScalar {
            type Output = QScalar;
            fn $method(self, rhs: QScalar) -> QScalar {
                $body(&self, &rhs)
            }
        }
        impl $tr<&QScalar> for QScalar {
            type Output = QScalar;
            fn $method(self, rhs: &QScalar) -> QScalar {
                $body(&self, rhs)
            }
        }
        impl $tr<QScalar> for &QScalar {
            type Output = QScalar;
            fn $method(self, rhs: QScalar) -> QScalar {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &QScalar, b: &QScalar| a.add_ref(b));
forward_binop!(Sub, sub, |a: &QScalar, b: &QScalar| a.add_ref(&-b));
forward_binop!(Mul, mul, |a: &QScalar, b: &QScalar| a.mul_ref(b));

impl AddAssign<&QScalar> for QScalar {
    fn add_assign(&mut self, rhs: &QScalar) {
        *self = self.add_ref(rhs);
    }
}

impl AddAssign<QScalar> for QScalar {
    fn add_assign(&mut self, rhs: QScalar) {
        *self = self.add_ref(&rhs);
    }
}

impl SubAssign<&QScalar> for QScalar {
    fn sub_assign(&mut self, rhs: &QScalar) {
        *self = self.add_ref(&-rhs);
    }
}

impl MulAssign<&QScalar> for QScalar {
    fn mul_assign(&mut self, rhs: &QScalar) {
        *self = self.mul_ref(rhs);
    }
}

impl std::iter::Sum for QScalar {
    fn sum<I: Iterator<Item = QScalar>>(iter: I) -> QScalar {
        iter.fold(QScalar::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for QScalar {
    /// Canonical string form, e.g. `(q^2+1)/q`, `q+1`, `(q^2)/(q^2+1)`, `1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        if self.den.is_one() {
            self.num.write_terms(&mut s, "q", 0);
            return f.write_str(&s);
        }
        if self.num.is_constant() {
            self.num.write_terms(&mut s, "q", 0);
        } else {
            s.push('(');
            self.num.write_terms(&mut s, "q", 0);
            s.push(')');
        }
        s.push('/');
        let bare = self.den.term_count() == 1
            && (self.den.is_constant() || self.den.leading().is_some_and(|l| l.is_one()));
        if bare {
            self.den.write_terms(&mut s, "q", 0);
        } else {
            s.push('(');
            self.den.write_terms(&mut s, "q", 0);
            s.push(')');
        }
        f.write_str(&s)
    }
}

impl FromStr for QScalar {
    type Err = Error;

    /// Parses canonical strings and general expressions in `q` built from
    /// integers, `q`, `q^e` (any integer `e`), `+ - * /` and parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = ExprParser { chars: s.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, src: s };
        let v = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(p.err("trailing input"));
        }
        Ok(v)
    }
}

struct ExprParser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl ExprParser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn is_minus(c: char) -> bool {
        c == '-' || c == '\u{2212}'
    }

    fn expr(&mut self) -> Result<QScalar> {
        let mut acc = QScalar::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    1
                }
                Some(c) if Self::is_minus(c) => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            let t = self.term()?;
            acc = if sign < 0 { acc - t } else { acc + t };
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QScalar> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') | Some('\u{00b7}') => {
                    self.pos += 1;
                    acc = acc * self.factor()?;
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    acc = acc.checked_div(&d)?;
                }
                Some('(') | Some('q') => {
                    // implicit multiplication, e.g. `2q` or `q(q+1)`
                    acc = acc * self.factor()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<QScalar> {
        let base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                v
            }
            Some('q') => {
                self.pos += 1;
                QScalar::q()
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                let n: BigInt = digits.parse().map_err(|_| self.err("bad integer"))?;
                QScalar::from_polys(Poly::constant(n), Poly::one())?
            }
            Some(c) if Self::is_minus(c) => {
                self.pos += 1;
                return Ok(-self.factor()?);
            }
            _ => return Err(self.err("expected a factor")),
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            let neg = match self.peek() {
                Some(c) if Self::is_minus(c) => {
                    self.pos += 1;
                    true
                }
                _ => false,
            };
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected exponent"));
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            let e: i64 = digits.parse().map_err(|_| self.err("bad exponent"))?;
            return pow(&base, if neg { -e } else { e });
        }
        Ok(base)
    }
}

/// Integer power of a field element.
pub fn pow(base: &QScalar, e: i64) -> Result<QScalar> {
    let b = if e < 0 { base.inv()? } else { base.clone() };
    let mut acc = QScalar::one();
    for _ in 0..e.unsigned_abs() {
        acc = &acc * &b;
    }
    Ok(acc)
}

impl Serialize for QScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
