use core::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::BigRational;

/// Exact commutative field used as a coefficient domain.
pub trait Field: Clone + PartialEq + Debug + Send + Sync + Zero + One {
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn try_inverse(&self) -> Option<Self>;
    fn from_rational(q: &BigRational) -> Self;

    fn inverse(&self) -> Self {
        self.try_inverse().expect("inverse of zero")
    }

    fn divided(&self, o: &Self) -> Self {
        self.times(&o.inverse())
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn scaled(&self, q: &BigRational) -> Self {
        self.times(&Self::from_rational(q))
    }

    fn powi(&self, e: i64) -> Self {
        if e < 0 {
            return self.inverse().powi(-e);
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }

    /// Square root inside the field, when it exists and is cheap to find.
    fn sqrt(&self) -> Option<Self> {
        None
    }
}

impl Field for BigRational {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn try_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }
}
