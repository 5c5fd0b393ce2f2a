//! Exact arithmetic: rationals, integer polynomials, rational functions,
//! truncated series and the quadratic field `K`.

mod field;
mod kfield;
mod ratfunc;
mod series;
mod zpoly;

use alloc::string::String;

use num_bigint::BigInt;
use num_traits::One;

pub use field::Field;
pub use kfield::{c_series, k_expand_t, k_normalize, ExpandError, KElement};
pub use ratfunc::RationalFunc;
pub use series::{SeriesError, TruncatedSeries};
pub use zpoly::ZPoly;

pub type BigRational = num_rational::BigRational;

/// `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        alloc::format!("{}", q.numer())
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

/// Inverse of [`format_rational`].
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d == BigInt::from(0) {
        return None;
    }
    Some(BigRational::new(n, d))
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
