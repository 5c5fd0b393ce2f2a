//! Truncated formal Laurent series in one variable.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::field::Field;
use super::BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// The inner series of a composition has a nonzero constant term.
    ConstantTerm,
    /// Reversion needs `f = a x + O(x^2)` with `a != 0`.
    NotInvertibleLinear,
    /// The leading coefficient has no square root in the field, or the valuation is odd.
    NoSquareRoot,
    /// Division by a series known to be zero at the working precision.
    ZeroDivisor,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = match self {
            SeriesError::ConstantTerm => "inner series must have zero constant term",
            SeriesError::NotInvertibleLinear => "series must start with a nonzero linear term",
            SeriesError::NoSquareRoot => "leading term is not a square",
            SeriesError::ZeroDivisor => "division by a series that vanishes to working precision",
        };
        f.write_str(m)
    }
}

/// `Σ_{e ≥ min_exp} coeffs[e - min_exp] var^e + O(var^{order+1})`.
///
/// Normal form: the first stored coefficient is nonzero, nothing is stored
/// beyond `order`, and the zero series has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<T> {
    var: char,
    min_exp: i64,
    coeffs: Vec<T>,
    order: i64,
}

impl<T: Field> TruncatedSeries<T> {
    pub fn new(var: char, min_exp: i64, coeffs: Vec<T>, order: i64) -> Self {
        let mut s = TruncatedSeries { var, min_exp, coeffs, order };
        s.normalize();
        s
    }

    pub fn zero(var: char, order: i64) -> Self {
        TruncatedSeries { var, min_exp: 0, coeffs: Vec::new(), order }
    }

    pub fn constant(var: char, c: T, order: i64) -> Self {
        Self::new(var, 0, vec![c], order)
    }

    pub fn monomial(var: char, c: T, e: i64, order: i64) -> Self {
        Self::new(var, e, vec![c], order)
    }

    /// The variable itself, `var + O(var^{order+1})`.
    pub fn var_series(var: char, order: i64) -> Self {
        Self::monomial(var, T::one(), 1, order)
    }

    /// Power series from coefficients of `var^0, var^1, ...`.
    pub fn from_coeffs(var: char, coeffs: Vec<T>, order: i64) -> Self {
        Self::new(var, 0, coeffs, order)
    }

    fn normalize(&mut self) {
        let keep = (self.order - self.min_exp + 1).max(0) as usize;
        if self.coeffs.len() > keep {
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn raw_coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent of the first nonzero term; `order + 1` for the zero series.
    pub fn valuation(&self) -> i64 {
        if self.coeffs.is_empty() {
            self.order + 1
        } else {
            self.min_exp
        }
    }

    pub fn coeff(&self, e: i64) -> T {
        assert!(e <= self.order, "coefficient of {}^{} beyond order {}", self.var, e, self.order);
        if e < self.min_exp {
            return T::zero();
        }
        self.coeffs.get((e - self.min_exp) as usize).cloned().unwrap_or_else(T::zero)
    }

    /// Coefficients of `var^0 ..= var^order` (Laurent terms ignored).
    pub fn power_coeffs(&self) -> Vec<T> {
        (0..=self.order.max(-1)).map(|e| self.coeff(e)).collect()
    }

    pub fn truncate(&self, order: i64) -> Self {
        assert!(order <= self.order, "cannot raise precision by truncation");
        Self::new(self.var, self.min_exp, self.coeffs.clone(), order)
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> TruncatedSeries<U> {
        TruncatedSeries::new(self.var, self.min_exp, self.coeffs.iter().map(f).collect(), self.order)
    }

    pub fn with_var(&self, var: char) -> Self {
        TruncatedSeries { var, ..self.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        if self.is_zero() {
            return o.truncate(order).with_var(self.var);
        }
        if o.is_zero() {
            return self.truncate(order);
        }
        let lo = self.min_exp.min(o.min_exp);
        let hi = (self.min_exp + self.coeffs.len() as i64).max(o.min_exp + o.coeffs.len() as i64).min(order + 1);
        let mut c = Vec::with_capacity((hi - lo).max(0) as usize);
        for e in lo..hi {
            let a = self.get(e);
            let b = o.get(e);
            c.push(match (a, b) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => T::zero(),
            });
        }
        Self::new(self.var, lo, c, order)
    }

    fn get(&self, e: i64) -> Option<&T> {
        if e < self.min_exp {
            return None;
        }
        self.coeffs.get((e - self.min_exp) as usize)
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| c.negated()).collect(), ..self.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.var, self.min_exp, self.coeffs.iter().map(|c| c.times(k)).collect(), self.order)
    }

    pub fn scale_q(&self, k: &BigRational) -> Self {
        Self::new(self.var, self.min_exp, self.coeffs.iter().map(|c| c.scaled(k)).collect(), self.order)
    }

    pub fn add_scalar(&self, k: &T) -> Self {
        if self.order < 0 {
            return self.clone();
        }
        self.add(&Self::constant(self.var, k.clone(), self.order))
    }

    /// Multiply by `var^e` (exact).
    pub fn shift(&self, e: i64) -> Self {
        Self::new(self.var, self.min_exp + e, self.coeffs.clone(), self.order + e)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let order = (self.order + o.valuation()).min(o.order + self.valuation());
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.var, order);
        }
        let base = self.min_exp + o.min_exp;
        let len = ((order - base + 1).max(0) as usize).min(self.coeffs.len() + o.coeffs.len() - 1);
        let mut c = vec![T::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    c[i + j] = c[i + j].plus(&a.times(b));
                }
            }
        }
        Self::new(self.var, base, c, order)
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            let v = self.valuation();
            let rel = self.order - v;
            return Self::constant(self.var, T::one(), rel);
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn try_inv(&self) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Err(SeriesError::ZeroDivisor);
        }
        let v = self.min_exp;
        let rel = self.order - v;
        let a0inv = self.coeffs[0].inverse();
        let n = (rel + 1).max(0) as usize;
        let mut g: Vec<T> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                g.push(a0inv.clone());
                continue;
            }
            let mut acc = T::zero();
            for i in 1..=k.min(self.coeffs.len() - 1) {
                let fi = &self.coeffs[i];
                if !fi.is_zero() {
                    acc = acc.plus(&fi.times(&g[k - i]));
                }
            }
            g.push(acc.times(&a0inv).negated());
        }
        Ok(Self::new(self.var, -v, g, rel - v))
    }

    pub fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero series")
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a.times(&T::from_i64(self.min_exp + i as i64)))
            .collect();
        Self::new(self.var, self.min_exp - 1, c, self.order - 1)
    }

    /// Termwise primitive with zero constant; panics on a `var^{-1}` term.
    pub fn integrate(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let e = self.min_exp + i as i64 + 1;
                if a.is_zero() {
                    T::zero()
                } else {
                    assert!(e != 0, "residue term has no primitive");
                    a.divided(&T::from_i64(e))
                }
            })
            .collect();
        Self::new(self.var, self.min_exp + 1, c, self.order + 1)
    }

    /// `f(g)`. `g` must have zero constant term; `f` may have a finite principal part.
    pub fn compose(&self, g: &Self) -> Result<Self, SeriesError> {
        let vg = g.valuation();
        if vg < 1 {
            return Err(SeriesError::ConstantTerm);
        }
        let cap = if g.is_zero() { self.order.max(0) } else { (self.order + 1) * vg - 1 };
        let mut acc: Self = Self::zero(g.var, cap);
        let hi = self.min_exp + self.coeffs.len() as i64 - 1;
        let mut pos = Self::constant(g.var, T::one(), cap);
        for e in 0..=hi {
            if e >= 1 {
                pos = pos.mul(g);
            }
            if e >= self.min_exp {
                let a = &self.coeffs[(e - self.min_exp) as usize];
                if !a.is_zero() {
                    acc = acc.add(&pos.scale(a));
                }
            }
        }
        if self.min_exp < 0 {
            let ginv = g.inv();
            let mut negp = ginv.clone();
            for e in (self.min_exp..0).rev() {
                if e < -1 {
                    negp = negp.mul(&ginv);
                }
                let a = &self.coeffs[(e - self.min_exp) as usize];
                if !a.is_zero() {
                    acc = acc.add(&negp.scale(a));
                }
            }
        }
        let order = acc.order.min(cap);
        Ok(acc.truncate(order))
    }

    /// Compositional inverse `g` with `f(g(x)) = x + O(x^{order+1})`, by Lagrange inversion.
    pub fn reversion(&self) -> Result<Self, SeriesError> {
        if self.min_exp != 1 || self.is_zero() || self.order < 1 {
            return Err(SeriesError::NotInvertibleLinear);
        }
        let n = self.order;
        let phi = self.shift(-1).inv();
        let mut g: Vec<T> = vec![T::zero()];
        let mut p = Self::constant(self.var, T::one(), phi.order);
        for k in 1..=n {
            p = p.mul(&phi);
            g.push(p.coeff(k - 1).divided(&T::from_i64(k)));
        }
        Ok(Self::new(self.var, 0, g, n))
    }

    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Err(SeriesError::NoSquareRoot);
        }
        let v = self.min_exp;
        if v % 2 != 0 {
            return Err(SeriesError::NoSquareRoot);
        }
        let g0 = if self.coeffs[0].is_one() {
            T::one()
        } else {
            self.coeffs[0].sqrt().ok_or(SeriesError::NoSquareRoot)?
        };
        let two_g0_inv = g0.plus(&g0).inverse();
        let rel = self.order - v;
        let n = (rel + 1).max(0) as usize;
        let mut g: Vec<T> = Vec::with_capacity(n);
        g.push(g0);
        for k in 1..n {
            let mut acc = self.coeffs.get(k).cloned().unwrap_or_else(T::zero);
            for i in 1..k {
                acc = acc.minus(&g[i].times(&g[k - i]));
            }
            g.push(acc.times(&two_g0_inv));
        }
        Ok(Self::new(self.var, v / 2, g, v / 2 + rel))
    }

    /// Formal residue: the coefficient of `var^{-1}`.
    pub fn residue(&self) -> T {
        self.coeff(-1)
    }
}

impl<T: Field> fmt::Debug for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write!(f, "({:?}){}^{} + ", c, self.var, self.min_exp + i as i64)?;
        }
        write!(f, "O({}^{})", self.var, self.order + 1)
    }
}
