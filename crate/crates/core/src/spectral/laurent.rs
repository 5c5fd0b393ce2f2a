use alloc::vec::Vec;
use core::fmt;

use crate::exactnum::{Field, TruncatedSeries};

/// Finite Laurent polynomial `Σ c_i z^{min + i}`.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<F> {
    min: i64,
    coeffs: Vec<F>,
}

impl<F: Field> LaurentPoly<F> {
    pub fn new(min: i64, coeffs: Vec<F>) -> Self {
        let mut p = LaurentPoly { min, coeffs };
        while p.coeffs.last().is_some_and(|c| c.is_zero()) {
            p.coeffs.pop();
        }
        let lead = p.coeffs.iter().take_while(|c| c.is_zero()).count();
        p.coeffs.drain(..lead);
        p.min += lead as i64;
        if p.coeffs.is_empty() {
            p.min = 0;
        }
        p
    }

    pub fn from_terms(terms: &[(i64, F)]) -> Self {
        let lo = terms.iter().map(|t| t.0).min().unwrap_or(0);
        let hi = terms.iter().map(|t| t.0).max().unwrap_or(-1);
        let mut c = alloc::vec![F::zero(); (hi - lo + 1).max(0) as usize];
        for (e, v) in terms {
            let i = (e - lo) as usize;
            c[i] = c[i].plus(v);
        }
        Self::new(lo, c)
    }

    pub fn min_exp(&self) -> i64 {
        self.min
    }

    pub fn max_exp(&self) -> i64 {
        self.min + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, e: i64) -> F {
        if e < self.min {
            return F::zero();
        }
        self.coeffs.get((e - self.min) as usize).cloned().unwrap_or_else(F::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &F)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.min + i as i64, c))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> LaurentPoly<G> {
        LaurentPoly::new(self.min, self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, k: &F) -> Self {
        self.map(|c| c.times(k))
    }

    pub fn derivative(&self) -> Self {
        let c = self.coeffs.iter().enumerate().map(|(i, c)| c.times(&F::from_i64(self.min + i as i64))).collect();
        Self::new(self.min - 1, c)
    }

    pub fn eval(&self, z: &F) -> F {
        let mut acc = F::zero();
        for (e, c) in self.terms() {
            acc = acc.plus(&c.times(&z.powi(e)));
        }
        acc
    }

    /// Taylor jet of `p(a + ζ)` in `ζ`, exact to `O(ζ^{order+1})`; `a` must be nonzero
    /// when negative powers are present.
    pub fn jet(&self, a: &F, order: i64) -> TruncatedSeries<F> {
        let z = TruncatedSeries::from_coeffs('ζ', alloc::vec![a.clone(), F::one()], order);
        let mut acc = TruncatedSeries::zero('ζ', order);
        if self.max_exp() >= 0 {
            let mut p = TruncatedSeries::constant('ζ', F::one(), order);
            for e in 0..=self.max_exp() {
                if e > 0 {
                    p = p.mul(&z);
                }
                let c = self.coeff(e);
                if !c.is_zero() {
                    acc = acc.add(&p.scale(&c));
                }
            }
        }
        if self.min < 0 {
            let zi = z.inv();
            let mut p = zi.clone();
            for e in (self.min..0).rev() {
                if e < -1 {
                    p = p.mul(&zi);
                }
                let c = self.coeff(e);
                if !c.is_zero() {
                    acc = acc.add(&p.scale(&c));
                }
            }
        }
        acc
    }

    /// Expansion in `a = 1/z` at `z = ∞`: returns the series `Σ c_e a^{-e}`.
    pub fn at_infinity(&self, order: i64) -> TruncatedSeries<F> {
        let c: Vec<F> = self.coeffs.iter().rev().cloned().collect();
        TruncatedSeries::new('a', -self.max_exp(), c, order)
    }
}

impl<F: fmt::Debug> fmt::Debug for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({:?})z^{}", c, self.min + i as i64)?;
        }
        if self.coeffs.is_empty() {
            f.write_str("0")?;
        }
        Ok(())
    }
}
