use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exactnum::BigRational;

/// Power series in `a`, `b`, `t` truncated to the box `a^d1 b^d2 t^q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Tri {
    d1: usize,
    d2: usize,
    q: usize,
    c: Vec<BigRational>,
}

impl Tri {
    pub fn zero(d1: usize, d2: usize, q: usize) -> Self {
        Tri { d1, d2, q, c: vec![BigRational::zero(); (d1 + 1) * (d2 + 1) * (q + 1)] }
    }

    pub fn one(d1: usize, d2: usize, q: usize) -> Self {
        let mut s = Tri::zero(d1, d2, q);
        s.c[0] = BigRational::one();
        s
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * (self.d2 + 1) + j) * (self.q + 1) + k
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.d1, self.d2, self.q)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &BigRational {
        &self.c[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: BigRational) {
        if i <= self.d1 && j <= self.d2 && k <= self.q {
            let x = self.idx(i, j, k);
            self.c[x] = v;
        }
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: &BigRational) {
        if i <= self.d1 && j <= self.d2 && k <= self.q {
            let x = self.idx(i, j, k);
            self.c[x] += v;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, o: &Tri) -> Tri {
        Tri { c: self.c.iter().zip(&o.c).map(|(x, y)| x + y).collect(), ..*self }
    }

    pub fn sub(&self, o: &Tri) -> Tri {
        Tri { c: self.c.iter().zip(&o.c).map(|(x, y)| x - y).collect(), ..*self }
    }

    pub fn scale(&self, k: &BigRational) -> Tri {
        Tri { c: self.c.iter().map(|x| x * k).collect(), ..*self }
    }

    fn nonzero(&self) -> Vec<(usize, usize, usize, &BigRational)> {
        let mut out = Vec::new();
        for i in 0..=self.d1 {
            for j in 0..=self.d2 {
                for k in 0..=self.q {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v));
                    }
                }
            }
        }
        out
    }

    pub fn mul(&self, o: &Tri) -> Tri {
        let mut out = Tri::zero(self.d1, self.d2, self.q);
        let b = o.nonzero();
        for (i, j, k, x) in self.nonzero() {
            for &(p, r, s, y) in &b {
                if i + p <= self.d1 && j + r <= self.d2 && k + s <= self.q {
                    let at = out.idx(i + p, j + r, k + s);
                    out.c[at] += x * y;
                }
            }
        }
        out
    }

    /// Multiplies by a series in `t` alone.
    pub fn scale_series(&self, s: &[BigRational]) -> Tri {
        let mut t = Tri::zero(self.d1, self.d2, self.q);
        for (k, v) in s.iter().enumerate().take(self.q + 1) {
            t.set(0, 0, k, v.clone());
        }
        self.mul(&t)
    }

    /// Inverse of a series with nonzero constant term.
    pub fn inverse(&self) -> Tri {
        let c0 = self.c[0].clone();
        assert!(!c0.is_zero(), "series not invertible");
        let inv0 = c0.recip();
        // 1/(c0 (1 + e)) = (1/c0) Σ (-e)^n
        let mut e = self.scale(&inv0);
        e.c[0] = BigRational::zero();
        let minus_e = e.scale(&BigRational::from_integer((-1).into()));
        let mut acc = Tri::one(self.d1, self.d2, self.q);
        let mut p = Tri::one(self.d1, self.d2, self.q);
        for _ in 0..self.d1 + self.d2 + self.q {
            p = p.mul(&minus_e);
            if p.is_zero() {
                break;
            }
            acc = acc.add(&p);
        }
        acc.scale(&inv0)
    }

    /// `log(1 + e)` for `e` without constant term.
    pub fn log1p(&self) -> Tri {
        assert!(self.c[0].is_zero());
        let mut acc = Tri::zero(self.d1, self.d2, self.q);
        let mut p = Tri::one(self.d1, self.d2, self.q);
        for n in 1..=self.d1 + self.d2 + self.q {
            p = p.mul(self);
            if p.is_zero() {
                break;
            }
            let sign = if n % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&p.scale(&BigRational::new(sign.into(), (n as i64).into())));
        }
        acc
    }

    /// Partial derivative in `a` (`which = 0`) or `b` (`which = 1`).
    pub fn derivative(&self, which: usize) -> Tri {
        let mut out = Tri::zero(self.d1, self.d2, self.q);
        for (i, j, k, v) in self.nonzero() {
            let (e, ni, nj) = if which == 0 { (i, i.wrapping_sub(1), j) } else { (j, i, j.wrapping_sub(1)) };
            if e > 0 {
                out.set(ni, nj, k, v * BigRational::from_integer(e.into()));
            }
        }
        out
    }
}
