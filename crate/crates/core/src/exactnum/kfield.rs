//! The quadratic extension `K = Q(c)[s] / (s^2 - c^2 + 1)`.

use alloc::string::String;
use core::fmt;

use num_traits::{One, Zero};

use super::field::Field;
use super::ratfunc::RationalFunc;
use super::series::{SeriesError, TruncatedSeries};
use super::zpoly::ZPoly;
use super::BigRational;

/// `a(c) + b(c) s`, always reduced with `s^2 = c^2 - 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KElement {
    a: RationalFunc,
    b: RationalFunc,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExpandError {
    /// The element still depends on `s`, which has no expansion in `t`.
    RequiresSCancellation,
    /// The even part has a pole at `c = 1`.
    PoleAtOne,
    Series(SeriesError),
}

impl fmt::Display for ExpandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpandError::RequiresSCancellation => f.write_str("requires s-cancellation"),
            ExpandError::PoleAtOne => f.write_str("pole at c = 1"),
            ExpandError::Series(e) => write!(f, "{}", e),
        }
    }
}

fn c2_minus_1() -> ZPoly {
    ZPoly::from_i64s(&[-1, 0, 1])
}

impl KElement {
    pub fn new(a: RationalFunc, b: RationalFunc) -> Self {
        KElement { a, b }
    }

    pub fn from_c(a: RationalFunc) -> Self {
        KElement { a, b: RationalFunc::zero() }
    }

    pub fn c() -> Self {
        KElement::from_c(RationalFunc::x())
    }

    pub fn s() -> Self {
        KElement { a: RationalFunc::zero(), b: RationalFunc::one() }
    }

    /// `t = (c^2 - 1) / (3 c^4)`.
    pub fn t() -> Self {
        let c = RationalFunc::x();
        let c2 = c.times(&c);
        let num = c2.minus(&RationalFunc::one());
        KElement::from_c(num.divided(&c2.times(&c2).scaled(&BigRational::from_integer(3.into()))))
    }

    pub fn even(&self) -> &RationalFunc {
        &self.a
    }

    pub fn odd(&self) -> &RationalFunc {
        &self.b
    }

    /// `s -> -s`.
    pub fn conjugate(&self) -> Self {
        KElement { a: self.a.clone(), b: self.b.negated() }
    }

    /// Image of `R(u)` under `u = s^2 = c^2 - 1`.
    pub fn from_u(r: &RationalFunc) -> Self {
        KElement::from_c(r.compose_poly(&c2_minus_1()))
    }

    /// Image of `R(s)`, splitting into even and odd parts in `s`.
    pub fn from_s(r: &RationalFunc) -> Self {
        let (e, o) = r.even_odd_in_square();
        KElement { a: e.compose_poly(&c2_minus_1()), b: o.compose_poly(&c2_minus_1()) }
    }

    /// Expand an `s`-free element as a power series in `t` to `O(t^{q+1})`.
    pub fn expand_t(&self, q: i64) -> Result<TruncatedSeries<BigRational>, ExpandError> {
        if !self.b.is_zero() {
            return Err(ExpandError::RequiresSCancellation);
        }
        if self.a.den_z().eval(&1.into()).is_zero() {
            return Err(ExpandError::PoleAtOne);
        }
        let c = c_series(q).map_err(ExpandError::Series)?;
        Ok(self.a.eval_series(&c))
    }

    pub fn to_string_in(&self, cvar: &str, svar: &str) -> String {
        if self.b.is_zero() {
            return self.a.to_string_in(cvar);
        }
        let bs = alloc::format!("({})*{}", self.b.to_string_in(cvar), svar);
        if self.a.is_zero() {
            bs
        } else {
            alloc::format!("{} + {}", self.a.to_string_in(cvar), bs)
        }
    }
}

/// Canonical form; the representation is already reduced, so this is a copy.
pub fn k_normalize(x: &KElement) -> KElement {
    x.clone()
}

pub fn k_expand_t(x: &KElement, q: i64) -> Result<TruncatedSeries<BigRational>, ExpandError> {
    x.expand_t(q)
}

/// `c(t)` solving `3 t c^4 - c^2 + 1 = 0`, `c(0) = 1`, to `O(t^{q+1})`.
pub fn c_series(q: i64) -> Result<TruncatedSeries<BigRational>, SeriesError> {
    // u = c^2 - 1 satisfies t = u / (3 (1 + u)^2).
    let u = TruncatedSeries::<BigRational>::var_series('t', q.max(1));
    let one_u = u.add_scalar(&BigRational::one());
    let three = BigRational::from_integer(3.into());
    let t_of_u = u.mul(&one_u.square().scale(&three).inv());
    let u_of_t = t_of_u.reversion()?;
    Ok(u_of_t.add_scalar(&BigRational::one()).sqrt()?.truncate(q))
}

impl fmt::Debug for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("c", "s"))
    }
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("c", "s"))
    }
}

impl Zero for KElement {
    fn zero() -> Self {
        KElement { a: RationalFunc::zero(), b: RationalFunc::zero() }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for KElement {
    fn one() -> Self {
        KElement { a: RationalFunc::one(), b: RationalFunc::zero() }
    }

    fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }
}

impl core::ops::Add for KElement {
    type Output = KElement;
    fn add(self, o: Self) -> Self {
        self.plus(&o)
    }
}

impl core::ops::Mul for KElement {
    type Output = KElement;
    fn mul(self, o: Self) -> Self {
        self.times(&o)
    }
}

impl Field for KElement {
    fn plus(&self, o: &Self) -> Self {
        KElement { a: self.a.plus(&o.a), b: self.b.plus(&o.b) }
    }

    fn minus(&self, o: &Self) -> Self {
        KElement { a: self.a.minus(&o.a), b: self.b.minus(&o.b) }
    }

    fn times(&self, o: &Self) -> Self {
        let s2 = RationalFunc::from_poly(c2_minus_1());
        let bb = self.b.times(&o.b);
        let a = self.a.times(&o.a).plus(&bb.times(&s2));
        let b = self.a.times(&o.b).plus(&self.b.times(&o.a));
        KElement { a, b }
    }

    fn negated(&self) -> Self {
        KElement { a: self.a.negated(), b: self.b.negated() }
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.b.is_zero() {
            return Some(KElement::from_c(self.a.inverse()));
        }
        let s2 = RationalFunc::from_poly(c2_minus_1());
        let norm = self.a.times(&self.a).minus(&self.b.times(&self.b).times(&s2));
        let ni = norm.inverse();
        Some(KElement { a: self.a.times(&ni), b: self.b.negated().times(&ni) })
    }

    fn from_rational(q: &BigRational) -> Self {
        KElement::from_c(RationalFunc::from_rational(q))
    }

    fn scaled(&self, q: &BigRational) -> Self {
        KElement { a: self.a.scaled(q), b: self.b.scaled(q) }
    }
}
