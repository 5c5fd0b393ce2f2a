//! Rational functions in one variable over `Q`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::series::TruncatedSeries;
use super::zpoly::ZPoly;
use super::BigRational;

/// `num(x) / den(x)` in lowest terms.
///
/// Both parts carry integer coefficients with no common integer factor,
/// `gcd(num, den) = 1`, and `den` has a positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunc {
    num: ZPoly,
    den: ZPoly,
}

impl RationalFunc {
    pub fn from_zpolys(num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunc { num, den: ZPoly::one() };
        }
        let g = ZPoly::gcd_primitive(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        RationalFunc::fix_contents(num, den)
    }

    fn fix_contents(num: ZPoly, den: ZPoly) -> Self {
        if num.is_zero() {
            return RationalFunc { num, den: ZPoly::one() };
        }
        let mut g = num.content().gcd(&den.content());
        if den.lead().unwrap().is_negative() {
            g = -g;
        }
        if g.is_one() {
            RationalFunc { num, den }
        } else {
            RationalFunc { num: num.div_exact_scalar(&g), den: den.div_exact_scalar(&g) }
        }
    }

    pub fn from_poly(p: ZPoly) -> Self {
        RationalFunc { num: p, den: ZPoly::one() }
    }

    /// The variable itself.
    pub fn x() -> Self {
        RationalFunc::from_poly(ZPoly::x())
    }

    pub fn from_int(n: i64) -> Self {
        RationalFunc::from_poly(ZPoly::constant(BigInt::from(n)))
    }

    /// Polynomial with rational coefficients, little-endian.
    pub fn from_rational_coeffs(c: &[BigRational]) -> Self {
        let mut l = BigInt::one();
        for q in c {
            l = l.lcm(q.denom());
        }
        let num = ZPoly::from_coeffs(c.iter().map(|q| q.numer() * (&l / q.denom())).collect());
        RationalFunc::fix_contents(num, ZPoly::constant(l))
    }

    pub fn from_rational_parts(num: &[BigRational], den: &[BigRational]) -> Self {
        RationalFunc::from_rational_coeffs(num).divided(&RationalFunc::from_rational_coeffs(den))
    }

    pub fn num_z(&self) -> &ZPoly {
        &self.num
    }

    pub fn den_z(&self) -> &ZPoly {
        &self.den
    }

    /// Numerator over `Q`, scaled so the denominator is monic.
    pub fn numerator(&self) -> Vec<BigRational> {
        let lc = self.den.lead().unwrap().clone();
        self.num.coeffs().iter().map(|v| BigRational::new(v.clone(), lc.clone())).collect()
    }

    /// Monic denominator over `Q`.
    pub fn denominator(&self) -> Vec<BigRational> {
        let lc = self.den.lead().unwrap().clone();
        self.den.coeffs().iter().map(|v| BigRational::new(v.clone(), lc.clone())).collect()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.num.is_zero() {
            return Some(BigRational::zero());
        }
        if self.num.is_constant() && self.den.is_constant() {
            Some(BigRational::new(self.num.coeff(0), self.den.coeff(0)))
        } else {
            None
        }
    }

    /// Value at a rational point, `None` on a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let ev = |p: &ZPoly| {
            let mut acc = BigRational::zero();
            for a in p.coeffs().iter().rev() {
                acc = acc * x + BigRational::from_integer(a.clone());
            }
            acc
        };
        let d = ev(&self.den);
        if d.is_zero() {
            None
        } else {
            Some(ev(&self.num) / d)
        }
    }

    /// `f(x) -> f(-x)`
    pub fn reflect(&self) -> Self {
        RationalFunc::fix_contents(self.num.reflect(), self.den.reflect())
    }

    /// `f(x) -> f(q(x))` for a polynomial `q`.
    pub fn compose_poly(&self, q: &ZPoly) -> Self {
        let n = self.num.compose(q);
        let d = self.den.compose(q);
        RationalFunc::from_zpolys(n, d)
    }

    /// Substitute a truncated series for the variable.
    pub fn eval_series(&self, s: &TruncatedSeries<BigRational>) -> TruncatedSeries<BigRational> {
        let horner = |p: &ZPoly| {
            let mut acc = TruncatedSeries::constant(s.var(), BigRational::zero(), s.order());
            for a in p.coeffs().iter().rev() {
                acc = acc.mul(s).add_scalar(&BigRational::from_integer(a.clone()));
            }
            acc
        };
        horner(&self.num).mul(&horner(&self.den).inv())
    }

    /// Even part `e(x^2)` and odd part `o(x^2)` with `f(x) = e(x^2) + x o(x^2)`.
    ///
    /// Returned as functions of `v = x^2`.
    pub fn even_odd_in_square(&self) -> (RationalFunc, RationalFunc) {
        let conj = self.den.reflect();
        let d2 = self.den.mul(&conj);
        let n2 = self.num.mul(&conj);
        let pick = |p: &ZPoly, parity: usize| {
            ZPoly::from_coeffs(
                p.coeffs().iter().enumerate().filter(|(i, _)| i % 2 == parity).map(|(_, v)| v.clone()).collect(),
            )
        };
        let dv = pick(&d2, 0);
        let e = RationalFunc::from_zpolys(pick(&n2, 0), dv.clone());
        let o = RationalFunc::from_zpolys(pick(&n2, 1), dv);
        (e, o)
    }

    pub fn derivative(&self) -> Self {
        let n = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        RationalFunc::from_zpolys(n, self.den.mul(&self.den))
    }

    pub fn to_string_in(&self, var: &str) -> String {
        let n = poly_string(&self.num, var);
        if self.den.is_one() {
            return n;
        }
        let d = poly_string(&self.den, var);
        alloc::format!("({})/({})", n, d)
    }
}

fn poly_string(p: &ZPoly, var: &str) -> String {
    use core::fmt::Write;
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, a) in p.coeffs().iter().enumerate().rev() {
        if a.is_zero() {
            continue;
        }
        let neg = a.is_negative();
        let m = a.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let show_coeff = i == 0 || !m.is_one();
        if show_coeff {
            let _ = write!(s, "{}", m);
        }
        if i > 0 {
            if show_coeff {
                s.push('*');
            }
            s.push_str(var);
            if i > 1 {
                let _ = write!(s, "^{}", i);
            }
        }
    }
    s
}

impl fmt::Debug for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl fmt::Display for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl Zero for RationalFunc {
    fn zero() -> Self {
        RationalFunc { num: ZPoly::zero(), den: ZPoly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunc {
    fn one() -> Self {
        RationalFunc { num: ZPoly::one(), den: ZPoly::one() }
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl core::ops::Add for RationalFunc {
    type Output = RationalFunc;
    fn add(self, o: Self) -> Self {
        self.plus(&o)
    }
}

impl core::ops::Mul for RationalFunc {
    type Output = RationalFunc;
    fn mul(self, o: Self) -> Self {
        self.times(&o)
    }
}

impl Field for RationalFunc {
    fn plus(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let n = self.num.add(&o.num);
            return RationalFunc::from_zpolys(n, self.den.clone());
        }
        if self.den.is_constant() && o.den.is_constant() {
            let n = self.num.scale(&o.den.coeffs()[0]).add(&o.num.scale(&self.den.coeffs()[0]));
            let d = self.den.mul(&o.den);
            return RationalFunc::fix_contents(n, d);
        }
        let g = ZPoly::gcd_primitive(&self.den, &o.den);
        if g.is_one() {
            let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            return RationalFunc::fix_contents(n, self.den.mul(&o.den));
        }
        let d1 = self.den.div_exact(&g).unwrap();
        let d2 = o.den.div_exact(&g).unwrap();
        let n = self.num.mul(&d2).add(&o.num.mul(&d1));
        let d = self.den.mul(&d2);
        if n.is_zero() {
            return Self::zero();
        }
        let h = ZPoly::gcd_primitive(&n, &g);
        if h.is_one() {
            RationalFunc::fix_contents(n, d)
        } else {
            RationalFunc::fix_contents(n.div_exact(&h).unwrap(), d.div_exact(&h).unwrap())
        }
    }

    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }

    fn times(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let g1 = ZPoly::gcd_primitive(&self.num, &o.den);
        let g2 = ZPoly::gcd_primitive(&o.num, &self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), o.den.clone())
        } else {
            (self.num.div_exact(&g1).unwrap(), o.den.div_exact(&g1).unwrap())
        };
        let (n2, d1) = if g2.is_one() {
            (o.num.clone(), self.den.clone())
        } else {
            (o.num.div_exact(&g2).unwrap(), self.den.div_exact(&g2).unwrap())
        };
        RationalFunc::fix_contents(n1.mul(&n2), d1.mul(&d2))
    }

    fn negated(&self) -> Self {
        RationalFunc { num: self.num.neg(), den: self.den.clone() }
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(RationalFunc::fix_contents(self.den.clone(), self.num.clone()))
    }

    fn from_rational(q: &BigRational) -> Self {
        RationalFunc::fix_contents(ZPoly::constant(q.numer().clone()), ZPoly::constant(q.denom().clone()))
    }

    fn scaled(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        RationalFunc::fix_contents(self.num.scale(q.numer()), self.den.scale(q.denom()))
    }
}
