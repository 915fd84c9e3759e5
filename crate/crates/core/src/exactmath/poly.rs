//! Dense univariate polynomials in `q` with arbitrary-precision integer
//! coefficients.
//!
//! Coefficients are stored in ascending degree order. The vector is empty for
//! the zero polynomial and never carries trailing zeros otherwise.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly { coeffs: vec![c] }.trim()
    }

    /// `c * q^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        Poly { coeffs }.trim()
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Largest power of `q` dividing the polynomial (0 for the zero polynomial).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count().min(self.coeffs.len())
    }

    pub fn shift_up(&self, by: usize) -> Self {
        if self.is_zero() || by == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); by];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divides by `q^by`; the caller guarantees divisibility.
    pub fn shift_down(&self, by: usize) -> Self {
        if by == 0 {
            return self.clone();
        }
        debug_assert!(self.coeffs.iter().take(by).all(|c| c.is_zero()));
        Poly {
            coeffs: self.coeffs[by.min(self.coeffs.len())..].to_vec(),
        }
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly { coeffs }.trim()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => unreachable!(),
            });
        }
        Poly { coeffs }.trim()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Poly { coeffs }.trim()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_int(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        self.div_int(&c)
    }

    /// Exact quotient `self / d` in Z[q]; the caller guarantees that `d`
    /// divides `self` and that the quotient has integer coefficients.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        assert!(!d.is_zero(), "polynomial division by zero");
        if d.is_one() {
            return self.clone();
        }
        if self.is_zero() {
            return Poly::zero();
        }
        let dv = d.valuation();
        let sv = self.valuation();
        let d = d.shift_down(dv);
        let mut rem = self.shift_down(sv).coeffs;
        let shift = sv - dv;
        if d.coeffs.len() == 1 {
            let c = &d.coeffs[0];
            let q = Poly { coeffs: rem.iter().map(|x| x / c).collect() };
            return q.shift_up(shift);
        }
        let dl = d.coeffs.len();
        let lc = d.coeffs.last().unwrap().clone();
        let qlen = rem.len() + 1 - dl;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + dl - 1];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(&lc);
            debug_assert!(r.is_zero(), "inexact polynomial division");
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[i + j] -= &qc * dc;
                }
            }
            quot[i] = qc;
        }
        debug_assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        Poly { coeffs: quot }.trim().shift_up(shift)
    }

    /// Primitive pseudo-remainder of `self` by `d`: a positive-content
    /// multiple of the remainder with its content removed.
    fn prem_primitive(&self, d: &Poly) -> Poly {
        let mut r = self.clone();
        let dl = d.coeffs.len();
        let lc = d.coeffs.last().unwrap();
        while !r.is_zero() && r.coeffs.len() >= dl {
            let rl = r.coeffs.last().unwrap().clone();
            let shift = r.coeffs.len() - dl;
            let g = rl.gcd(lc);
            let a = lc / &g;
            let b = &rl / &g;
            let mut coeffs: Vec<BigInt> = r.coeffs.iter().map(|c| c * &a).collect();
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    coeffs[shift + j] -= &b * dc;
                }
            }
            r = Poly { coeffs }.trim();
            if !r.is_zero() {
                let c = r.content();
                r = r.div_int(&c);
            }
        }
        r
    }

    /// Greatest common divisor over Q[q], returned as a primitive integer
    /// polynomial with positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.primitive();
        }
        if b.is_zero() {
            return a.primitive();
        }
        let va = a.valuation();
        let vb = b.valuation();
        let v = va.min(vb);
        let mut x = a.shift_down(va).primitive();
        let mut y = b.shift_down(vb).primitive();
        if x.is_constant() || y.is_constant() {
            return Poly::monomial(BigInt::one(), v);
        }
        if x == y {
            return x.shift_up(v);
        }
        if x.coeffs.len() < y.coeffs.len() {
            std::mem::swap(&mut x, &mut y);
        }
        loop {
            let r = x.prem_primitive(&y);
            if r.is_zero() {
                return y.primitive().shift_up(v);
            }
            if r.is_constant() {
                return Poly::monomial(BigInt::one(), v);
            }
            x = y;
            y = r;
        }
    }

    /// Value at `q = 1` (sum of coefficients).
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, x: &num_rational::BigRational) -> num_rational::BigRational {
        let mut acc = num_rational::BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + num_rational::BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the leading coefficient.
    pub fn leading_sign(&self) -> Ordering {
        match self.leading() {
            None => Ordering::Equal,
            Some(l) if l.is_negative() => Ordering::Less,
            Some(_) => Ordering::Greater,
        }
    }

    /// Writes the polynomial with terms in descending powers, e.g. `q^2-3*q+1`.
    pub(crate) fn write_terms(&self, out: &mut String, var: &str, exp_offset: i64) {
        if self.is_zero() {
            out.push('0');
            return;
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = i as i64 + exp_offset;
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                out.push('-');
            } else if !first {
                out.push('+');
            }
            first = false;
            let mag_one = mag.is_one();
            if e == 0 {
                out.push_str(&mag.to_string());
                continue;
            }
            if !mag_one {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push_str(var);
            if e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_terms(&mut s, "q", 0);
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (q^2+1)(q-1) and (q^2+1)(q+2)
        let a = p(&[1, 0, 1]).mul(&p(&[-1, 1]));
        let b = p(&[1, 0, 1]).mul(&p(&[2, 1]));
        assert_eq!(Poly::gcd(&a, &b), p(&[1, 0, 1]));
    }

    #[test]
    fn gcd_strips_powers_of_q() {
        let a = p(&[0, 0, 3, 3]);
        let b = p(&[0, 6]);
        assert_eq!(Poly::gcd(&a, &b), p(&[0, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(Poly::gcd(&p(&[1, 1]), &p(&[-1, 1])), Poly::one());
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&p(&[-1, 1])), p(&[1, 1]));
        let b = p(&[0, 4, 0, 4]);
        assert_eq!(b.div_exact(&p(&[0, 2])), p(&[2, 0, 2]));
    }

    #[test]
    fn display_descending() {
        assert_eq!(p(&[1, -3, 1]).to_string(), "q^2-3*q+1");
        assert_eq!(p(&[0, -1]).to_string(), "-q");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
