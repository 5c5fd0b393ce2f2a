use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::{format_rational, BigRational, Field, RationalFunc, ZPoly};

/// Laurent polynomial in the matrix size `N` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl NPoly {
    pub fn zero() -> Self {
        NPoly::default()
    }

    pub fn one() -> Self {
        NPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        NPoly::monomial(c, 0)
    }

    /// `c N^e`.
    pub fn monomial(c: BigRational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        NPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms by increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, e: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry(e).or_insert_with(BigRational::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, k: &BigRational) -> NPoly {
        if k.is_zero() {
            return NPoly::zero();
        }
        NPoly { terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect() }
    }

    /// Multiplies by `N^e`.
    pub fn shift(&self, e: i64) -> NPoly {
        NPoly { terms: self.terms.iter().map(|(&k, c)| (k + e, c.clone())).collect() }
    }

    /// Drops every term with exponent below `e`.
    pub fn truncate_below(&self, e: i64) -> NPoly {
        NPoly { terms: self.terms.range(e..).map(|(&k, c)| (k, c.clone())).collect() }
    }

    /// Exact image in the rational functions of `N`.
    pub fn to_ratfunc(&self) -> RationalFunc {
        let lo = self.min_exp().unwrap_or(0).min(0);
        let hi = self.max_exp().unwrap_or(0);
        let mut coeffs = Vec::new();
        for e in lo..=hi {
            coeffs.push(self.coeff(e));
        }
        let num = RationalFunc::from_rational_coeffs(&coeffs);
        let mut den = alloc::vec![BigInt::zero(); (-lo) as usize];
        den.push(BigInt::one());
        num.divided(&RationalFunc::from_poly(ZPoly::from_coeffs(den)))
    }
}

impl Add for &NPoly {
    type Output = NPoly;
    fn add(self, o: &NPoly) -> NPoly {
        let mut out = self.clone();
        for (&e, c) in &o.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &NPoly {
    type Output = NPoly;
    fn sub(self, o: &NPoly) -> NPoly {
        self + &(-o)
    }
}

impl Neg for &NPoly {
    type Output = NPoly;
    fn neg(self) -> NPoly {
        NPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Mul for &NPoly {
    type Output = NPoly;
    fn mul(self, o: &NPoly) -> NPoly {
        let mut out = NPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &o.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

macro_rules! owned_op {
    ($tr:ident, $f:ident) => {
        impl $tr for NPoly {
            type Output = NPoly;
            fn $f(self, o: NPoly) -> NPoly {
                (&self).$f(&o)
            }
        }
    };
}

owned_op!(Add, add);
owned_op!(Sub, sub);
owned_op!(Mul, mul);

impl fmt::Display for NPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{}", format_rational(c))?,
                1 => write!(f, "{}*N", format_rational(c))?,
                _ => write!(f, "{}*N^{}", format_rational(c), e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
