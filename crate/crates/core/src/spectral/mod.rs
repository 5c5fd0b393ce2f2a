//! Spectral curves: the quadrangulation curve, its exchange, and the
//! one-cut curve of a general polynomial potential.

mod general;
mod laurent;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::exactnum::{BigRational, Field, KElement, RationalFunc};

pub use general::{build_general_curve, GeneralCurve, PotentialSpec};
pub use laurent::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Ordinary,
    Exchanged,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpectralError {
    /// `dx` does not vanish simply at a listed branch point.
    NotSimple(usize),
    /// `dy` vanishes at a branch point.
    Irregular(usize),
    Unsupported,
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::NotSimple(i) => write!(f, "branch point {} is not a simple zero of dx", i),
            SpectralError::Irregular(i) => write!(f, "dy vanishes at branch point {}", i),
            SpectralError::Unsupported => f.write_str("exchange is only supported for the quadrangulation curve"),
        }
    }
}

/// Genus-zero curve `(P^1, x, y dx, B)` with `x`, `y` Laurent polynomials in `z`.
#[derive(Clone, Debug)]
pub struct Curve<F> {
    pub x: LaurentPoly<F>,
    pub y: LaurentPoly<F>,
    pub branch_points: Vec<F>,
}

impl<F: Field> Curve<F> {
    /// Checks simple ramification of `x` and regularity of `y` at every branch point.
    pub fn check(&self) -> Result<(), SpectralError> {
        for (i, a) in self.branch_points.iter().enumerate() {
            let xj = self.x.jet(a, 3);
            if !xj.coeff(1).is_zero() || xj.coeff(2).is_zero() {
                return Err(SpectralError::NotSimple(i));
            }
            let yj = self.y.jet(a, 2);
            if yj.coeff(1).is_zero() {
                return Err(SpectralError::Irregular(i));
            }
        }
        Ok(())
    }

    /// Same curve with `y` replaced by `λ y`.
    pub fn scale_y(&self, lambda: &F) -> Self {
        Curve { x: self.x.clone(), y: self.y.scale(lambda), branch_points: self.branch_points.clone() }
    }
}

/// Quadrangulation curve (or its exchange) with exact coefficients in `K`.
#[derive(Clone, Debug)]
pub struct SpectralCurveData {
    pub mode: Mode,
    pub x: LaurentPoly<KElement>,
    pub y: LaurentPoly<KElement>,
    pub branch_points: Vec<KElement>,
}

/// `x(z) = c(z + 1/z)`, `w(z) = 1/(cz) - t c^3 / z^3` with `t = (c^2 - 1)/(3c^4)`.
pub fn build_quadrangulation_curve() -> SpectralCurveData {
    let c = KElement::c();
    let t = KElement::t();
    let x = LaurentPoly::from_terms(&[(1, c.clone()), (-1, c.clone())]);
    let y = LaurentPoly::from_terms(&[(-1, c.inverse()), (-3, t.times(&c.powi(3)).negated())]);
    SpectralCurveData { mode: Mode::Ordinary, x, y, branch_points: vec![KElement::one(), KElement::from_i64(-1)] }
}

/// Swap the roles of `x` and `w`; the branch points become `±s`.
pub fn exchange_curve(cur: &SpectralCurveData) -> Result<SpectralCurveData, SpectralError> {
    let q = build_quadrangulation_curve();
    if cur.mode != Mode::Ordinary || cur.x != q.x || cur.y != q.y {
        return Err(SpectralError::Unsupported);
    }
    let s = KElement::s();
    Ok(SpectralCurveData {
        mode: Mode::Exchanged,
        x: cur.y.clone(),
        y: cur.x.clone(),
        branch_points: vec![s.clone(), s.negated()],
    })
}

impl SpectralCurveData {
    pub fn as_curve(&self) -> Curve<KElement> {
        Curve { x: self.x.clone(), y: self.y.clone(), branch_points: self.branch_points.clone() }
    }

    /// The same curve with the constant `c` scaled out of `x` and `y`.
    ///
    /// Ordinary: `x = c·(z + 1/z)`, `y = (1/z - u/(3z^3))/c` over `Q(u)`, `u = c^2 - 1`.
    /// Exchanged: `x = (1/z - s^2/(3z^3))/c`, `y = c·(z + 1/z)` over `Q(s)`.
    /// In both cases `y dx` and every amplitude are unchanged, so the returned
    /// curve drops the factors of `c`.
    pub fn reduced(&self) -> Curve<RationalFunc> {
        match self.mode {
            Mode::Ordinary => ordinary_reduced(),
            Mode::Exchanged => exchanged_reduced(),
        }
    }
}

fn x_hat<F: Field>() -> LaurentPoly<F> {
    LaurentPoly::from_terms(&[(1, F::one()), (-1, F::one())])
}

fn y_hat<F: Field>(u: F) -> LaurentPoly<F> {
    let third = BigRational::new(1.into(), 3.into());
    LaurentPoly::from_terms(&[(-1, F::one()), (-3, u.scaled(&third).negated())])
}

/// Ordinary quadrangulation curve over `Q(u)`, branch points `±1`.
pub fn ordinary_reduced() -> Curve<RationalFunc> {
    Curve {
        x: x_hat(),
        y: y_hat(RationalFunc::x()),
        branch_points: vec![RationalFunc::one(), RationalFunc::from_int(-1)],
    }
}

/// Exchanged quadrangulation curve over `Q(s)`, branch points `±s`.
pub fn exchanged_reduced() -> Curve<RationalFunc> {
    let s = RationalFunc::x();
    Curve { x: y_hat(s.times(&s)), y: x_hat(), branch_points: vec![s.clone(), s.negated()] }
}

/// Gaussian curve `x = z + 1/z`, `y = 1/z` (the quadrangulation curve at `t = 0`).
pub fn gaussian_curve() -> Curve<BigRational> {
    Curve { x: x_hat(), y: y_hat(BigRational::zero()), branch_points: vec![BigRational::one(), BigRational::from_i64(-1)] }
}
