//! Truncated power series over an exact field, with the Laurent bookkeeping
//! needed by the chart computations.
//!
//! A [`Trunc`] holds coefficients modulo `u^K`; all arithmetic is exact and
//! the truncation order is tracked explicitly (operations on series of
//! different orders use the smaller one; none silently extends).

use crate::field::Field;

/// Coefficients `c[0] + c[1] u + ... + c[K-1] u^{K-1}` modulo `u^K`.
#[derive(Clone, Debug, PartialEq)]
pub struct Trunc<F: Field> {
    pub coeffs: Vec<F>,
}

impl<F: Field> Trunc<F> {
    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty());
        Trunc { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Trunc {
            coeffs: vec![F::zero(); order.max(1)],
        }
    }

    pub fn constant(c: F, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let k = self.order().min(o.order());
        Trunc::new((0..k).map(|i| self.coeffs[i].add(&o.coeffs[i])).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let k = self.order().min(o.order());
        Trunc::new((0..k).map(|i| self.coeffs[i].sub(&o.coeffs[i])).collect())
    }

    pub fn neg(&self) -> Self {
        Trunc::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn scale(&self, s: &F) -> Self {
        Trunc::new(self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let k = self.order().min(o.order());
        let mut out = vec![F::zero(); k];
        for i in 0..k {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..k - i {
                if !o.coeffs[j].is_zero() {
                    out[i + j] = out[i + j].add(&self.coeffs[i].mul(&o.coeffs[j]));
                }
            }
        }
        Trunc::new(out)
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inverse(&self) -> Self {
        let k = self.order();
        assert!(
            !self.coeffs[0].is_zero(),
            "series with zero constant term has no inverse"
        );
        let c0inv = F::one().div(&self.coeffs[0]);
        let mut out = vec![F::zero(); k];
        out[0] = c0inv.clone();
        for i in 1..k {
            // out[i] = -c0inv * sum_{j=1..=i} a_j * out[i-j]
            let mut s = F::zero();
            for j in 1..=i {
                if !self.coeffs[j].is_zero() {
                    s = s.add(&self.coeffs[j].mul(&out[i - j]));
                }
            }
            out[i] = s.mul(&c0inv).neg();
        }
        Trunc::new(out)
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Trunc::constant(F::one(), self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Integer power with possibly negative exponent.
    pub fn powi(&self, e: i64) -> Self {
        if e >= 0 {
            self.pow(e as u64)
        } else {
            self.inverse().pow((-e) as u64)
        }
    }

    /// Composition `self(g)` where `g` has zero constant term.
    pub fn compose(&self, g: &Self) -> Self {
        assert!(
            g.coeffs[0].is_zero(),
            "composition needs a series without constant term"
        );
        let k = self.order().min(g.order());
        // Horner from the top coefficient down
        let mut acc = Trunc::constant(self.coeff(k - 1), k);
        for i in (0..k - 1).rev() {
            acc = acc.mul(g);
            acc.coeffs[0] = acc.coeffs[0].add(&self.coeff(i));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_i, Rat};

    fn t(v: &[i64]) -> Trunc<Rat> {
        Trunc::new(v.iter().map(|&x| rat_i(x)).collect())
    }

    #[test]
    fn mul_and_inverse() {
        // (1 - u)^{-1} = 1 + u + u^2 + ...
        let s = t(&[1, -1, 0, 0, 0]);
        let inv = s.inverse();
        assert_eq!(inv, t(&[1, 1, 1, 1, 1]));
        assert_eq!(s.mul(&inv), t(&[1, 0, 0, 0, 0]));
        // (1 + u)^{-2}
        let p = t(&[1, 1, 0, 0]).powi(-2);
        assert_eq!(p, t(&[1, -2, 3, -4]));
    }

    #[test]
    fn compose_geometric() {
        // f(x) = 1/(1-x) at x = u + u^2: coefficients count compositions
        let f = t(&[1, 1, 1, 1, 1]);
        let g = t(&[0, 1, 1, 0, 0]);
        let c = f.compose(&g);
        assert_eq!(c, t(&[1, 1, 2, 3, 5]));
    }

    #[test]
    fn rational_coeffs() {
        let s = Trunc::new(vec![rat(1, 2), rat(1, 3)]);
        let sq = s.mul(&s);
        assert_eq!(sq.coeffs, vec![rat(1, 4), rat(1, 3)]);
    }
}
