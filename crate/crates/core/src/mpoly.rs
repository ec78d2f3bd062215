//! Multivariate polynomials and lazy rational functions over the
//! rationals, used for the symbolic chart computations (divisor parameters
//! `c0, c1, ...`).
//!
//! Monomial keys are exponent vectors with trailing zeros trimmed, so
//! polynomials in different numbers of variables combine freely.  Rational
//! functions are numerator/denominator pairs; equality is decided exactly
//! by cross multiplication, and fractions are lightly reduced (common
//! numeric content and common monomial factor).  No full multivariate gcd
//! is attempted: printed fractions are content- and sign-normalized, not
//! factored.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

fn r_zero() -> Rat {
    num_traits::Zero::zero()
}
fn r_one() -> Rat {
    num_traits::One::one()
}
fn r_is_zero(c: &Rat) -> bool {
    num_traits::Zero::is_zero(c)
}
fn r_is_one(c: &Rat) -> bool {
    num_traits::One::is_one(c)
}

use crate::field::Field;
use crate::rat::{rat_str, Rat};

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn padded_zip(a: &[u32], b: &[u32]) -> impl Iterator<Item = (u32, u32)> {
    let n = a.len().max(b.len());
    let a: Vec<u32> = a
        .iter()
        .copied()
        .chain(std::iter::repeat(0))
        .take(n)
        .collect();
    let b: Vec<u32> = b
        .iter()
        .copied()
        .chain(std::iter::repeat(0))
        .take(n)
        .collect();
    a.into_iter().zip(b)
}

/// A multivariate polynomial: canonical exponent vector -> coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    pub terms: BTreeMap<Vec<u32>, Rat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !r_is_zero(&c) {
            terms.insert(Vec::new(), c);
        }
        MPoly { terms }
    }

    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, r_one());
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_empty())
    }

    fn cleaned(mut self) -> Self {
        self.terms.retain(|_, c| !r_is_zero(c));
        self
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            *out.terms.entry(e.clone()).or_insert_with(r_zero) += c;
        }
        out.cleaned()
    }

    pub fn neg(&self) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut terms: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = trim(padded_zip(e1, e2).map(|(a, b)| a + b).collect());
                *terms.entry(e).or_insert_with(r_zero) += c1 * c2;
            }
        }
        MPoly { terms }.cleaned()
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if r_is_zero(s) {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    /// Split off the numeric content and the common monomial factor.
    fn primitive_part(&self) -> (Self, Rat, Vec<u32>) {
        if self.is_zero() {
            return (self.clone(), r_one(), Vec::new());
        }
        let mut num_gcd: BigInt = num_traits::Zero::zero();
        let mut den_lcm: BigInt = num_traits::One::one();
        for c in self.terms.values() {
            num_gcd = num_integer::gcd(num_gcd, c.numer().clone());
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        if self.terms.values().next_back().unwrap().is_negative() {
            content = -content;
        }
        let mut mono = self.terms.keys().next().unwrap().clone();
        for e in self.terms.keys() {
            mono = trim(padded_zip(&mono, e).map(|(a, b)| a.min(b)).collect());
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let e2 = trim(padded_zip(e, &mono).map(|(a, b)| a - b).collect());
                (e2, c / &content)
            })
            .collect();
        (MPoly { terms }, content, mono)
    }

    fn mul_monomial(&self, mono: &[u32]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                (
                    trim(padded_zip(e, mono).map(|(a, b)| a + b).collect()),
                    c.clone(),
                )
            })
            .collect();
        MPoly { terms }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        format!("c{i}")
                    } else {
                        format!("c{i}^{x}")
                    }
                })
                .collect();
            let mono = mono.join("*");
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let ac = c.abs();
            if mono.is_empty() {
                write!(f, "{}", rat_str(&ac))?;
            } else if r_is_one(&ac) {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", rat_str(&ac))?;
            }
        }
        Ok(())
    }
}

/// Lazy multivariate rational function.
#[derive(Clone, Debug)]
pub struct MRat {
    pub num: MPoly,
    pub den: MPoly,
}

impl MRat {
    pub fn from_poly(p: MPoly) -> Self {
        MRat {
            num: p,
            den: MPoly::constant(r_one()),
        }
    }

    pub fn var(i: usize) -> Self {
        Self::from_poly(MPoly::var(i))
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(MPoly::constant(c))
    }

    fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            self.den = MPoly::constant(r_one());
            return self;
        }
        let (np, nc, nm) = self.num.primitive_part();
        let (dp, dc, dm) = self.den.primitive_part();
        let common = trim(padded_zip(&nm, &dm).map(|(a, b)| a.min(b)).collect());
        let reduce_mono = |full: &[u32]| -> Vec<u32> {
            trim(padded_zip(full, &common).map(|(a, b)| a - b).collect())
        };
        let num = np.mul_monomial(&reduce_mono(&nm)).scale(&(nc / &dc));
        let den = dp.mul_monomial(&reduce_mono(&dm));
        MRat { num, den }
    }
}

impl PartialEq for MRat {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl fmt::Display for MRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.terms.values().next().is_some_and(r_is_one) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Field for MRat {
    fn zero() -> Self {
        MRat::constant(r_zero())
    }
    fn one() -> Self {
        MRat::constant(r_one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        let den = self.den.mul(&o.den);
        MRat { num, den }.reduce()
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        MRat {
            num: self.num.mul(&o.num),
            den: self.den.mul(&o.den),
        }
        .reduce()
    }
    fn div(&self, o: &Self) -> Self {
        assert!(!o.num.is_zero(), "division by zero rational function");
        MRat {
            num: self.num.mul(&o.den),
            den: self.den.mul(&o.num),
        }
        .reduce()
    }
    fn neg(&self) -> Self {
        MRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn from_rat(r: &Rat) -> Self {
        MRat::constant(r.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_i;

    #[test]
    fn poly_arith() {
        let x = MPoly::var(0);
        let y = MPoly::var(1);
        let p = x.add(&y).mul(&x.sub(&y)); // x^2 - y^2
        let q = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(p, q);
        assert_eq!(format!("{p}"), "c0^2 - c1^2");
    }

    #[test]
    fn mrat_equality_cross() {
        let x = MRat::var(0);
        let y = MRat::var(1);
        // (x^2 - y^2)/(x - y) == x + y
        let a = x.mul(&x).sub(&y.mul(&y)).div(&x.sub(&y));
        let b = x.add(&y);
        assert_eq!(a, b);
        assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn reduce_keeps_small() {
        let x = MRat::var(0);
        let c2 = MRat::constant(rat_i(2));
        let e = x.mul(&c2).div(&x.mul(&c2)); // (2x)/(2x)
        assert_eq!(e, MRat::constant(rat_i(1)));
        assert!(e.num.is_constant());
        assert!(e.den.is_constant());
    }
}
