//! Dense univariate polynomials with integer coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Polynomial `Σ c[i] x^i` over `Z`, little-endian, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    c: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly::constant(BigInt::one())
    }

    pub fn constant(v: BigInt) -> Self {
        ZPoly::from_coeffs(vec![v])
    }

    /// `x`
    pub fn x() -> Self {
        ZPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn from_coeffs(c: Vec<BigInt>) -> Self {
        let mut p = ZPoly { c };
        p.trim();
        p
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        ZPoly::from_coeffs(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|v| v.is_zero()) {
            self.c.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.c.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.c.get(i).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &ZPoly) -> ZPoly {
        let (long, short) = if self.c.len() >= o.c.len() { (self, o) } else { (o, self) };
        let mut c = long.c.clone();
        for (a, b) in c.iter_mut().zip(short.c.iter()) {
            *a += b;
        }
        ZPoly::from_coeffs(c)
    }

    pub fn sub(&self, o: &ZPoly) -> ZPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly { c: self.c.iter().map(|v| -v).collect() }
    }

    pub fn mul(&self, o: &ZPoly) -> ZPoly {
        if self.is_zero() || o.is_zero() {
            return ZPoly::zero();
        }
        if self.c.len() == 1 {
            return o.scale(&self.c[0]);
        }
        if o.c.len() == 1 {
            return self.scale(&o.c[0]);
        }
        let mut c = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        ZPoly::from_coeffs(c)
    }

    pub fn scale(&self, k: &BigInt) -> ZPoly {
        if k.is_zero() {
            return ZPoly::zero();
        }
        ZPoly { c: self.c.iter().map(|v| v * k).collect() }
    }

    /// Exact division of every coefficient by `k`.
    pub fn div_exact_scalar(&self, k: &BigInt) -> ZPoly {
        if k.is_one() {
            return self.clone();
        }
        ZPoly { c: self.c.iter().map(|v| v / k).collect() }
    }

    pub fn pow(&self, mut e: u32) -> ZPoly {
        let mut base = self.clone();
        let mut acc = ZPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `p(x^k)`-free substitution `p(q(x))` by Horner.
    pub fn compose(&self, q: &ZPoly) -> ZPoly {
        let mut acc = ZPoly::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul(q).add(&ZPoly::constant(a.clone()));
        }
        acc
    }

    /// `p(-x)`
    pub fn reflect(&self) -> ZPoly {
        ZPoly {
            c: self
                .c
                .iter()
                .enumerate()
                .map(|(i, v)| if i % 2 == 1 { -v } else { v.clone() })
                .collect(),
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn derivative(&self) -> ZPoly {
        ZPoly::from_coeffs(
            self.c.iter().enumerate().skip(1).map(|(i, v)| v * BigInt::from(i)).collect(),
        )
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for v in &self.c {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient, and the signed content.
    pub fn primitive(&self) -> (BigInt, ZPoly) {
        if self.is_zero() {
            return (BigInt::zero(), ZPoly::zero());
        }
        let mut g = self.content();
        if self.lead().unwrap().is_negative() {
            g = -g;
        }
        (g.clone(), self.div_exact_scalar(&g))
    }

    fn max_norm(&self) -> BigInt {
        self.c.iter().map(|v| v.abs()).max().unwrap_or_default()
    }

    /// Exact quotient `self / d` over `Z`, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        let n = self.degree().unwrap();
        if n < dd {
            return None;
        }
        if dd == 0 {
            let k = &d.c[0];
            let mut q = Vec::with_capacity(self.c.len());
            for v in &self.c {
                let (qq, r) = v.div_rem(k);
                if !r.is_zero() {
                    return None;
                }
                q.push(qq);
            }
            return Some(ZPoly::from_coeffs(q));
        }
        let lc = d.lead().unwrap();
        let mut r = self.c.clone();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let top = &r[i + dd];
            if top.is_zero() {
                continue;
            }
            let (qq, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dj) in d.c.iter().enumerate() {
                if !dj.is_zero() {
                    r[i + j] -= &qq * dj;
                }
            }
            q[i] = qq;
        }
        if r.iter().any(|v| !v.is_zero()) {
            return None;
        }
        Some(ZPoly::from_coeffs(q))
    }

    /// Pseudo-remainder `prem(self, d)`.
    fn pseudo_rem(&self, d: &ZPoly) -> ZPoly {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.clone();
        let lc = d.lead().unwrap().clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let lr = r.lead().unwrap().clone();
            let shift = rd - dd;
            let mut nc = r.c.iter().map(|v| v * &lc).collect::<Vec<_>>();
            for (j, dj) in d.c.iter().enumerate() {
                nc[shift + j] -= &lr * dj;
            }
            r = ZPoly::from_coeffs(nc);
        }
        r
    }

    fn prs_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
        let (mut a, mut b) = (a.primitive().1, b.primitive().1);
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive().1;
        }
        a.primitive().1
    }

    /// Rebuild a polynomial from its value at `xi` using balanced digits.
    fn from_balanced_digits(mut v: BigInt, xi: &BigInt) -> ZPoly {
        let half = xi >> 1u32;
        let mut c = Vec::new();
        while !v.is_zero() {
            let mut d = v.mod_floor(xi);
            if d > half {
                d -= xi;
            }
            v = (v - &d) / xi;
            c.push(d);
        }
        ZPoly::from_coeffs(c)
    }

    /// Primitive gcd (positive leading coefficient) of two nonzero polynomials.
    ///
    /// Tries the heuristic evaluation gcd first and falls back to a
    /// primitive remainder sequence.
    pub fn gcd_primitive(a: &ZPoly, b: &ZPoly) -> ZPoly {
        if a.is_zero() {
            return b.primitive().1;
        }
        if b.is_zero() {
            return a.primitive().1;
        }
        if a.is_constant() || b.is_constant() {
            return ZPoly::one();
        }
        let (_, pa) = a.primitive();
        let (_, pb) = b.primitive();
        if pa == pb {
            return pa;
        }
        let bound = pa.max_norm().min(pb.max_norm());
        let mut xi: BigInt = bound * 2u32 + 29u32;
        for _ in 0..6 {
            let va = pa.eval(&xi);
            let vb = pb.eval(&xi);
            if !va.is_zero() && !vb.is_zero() {
                let h = va.gcd(&vb);
                let g = ZPoly::from_balanced_digits(h, &xi).primitive().1;
                if !g.is_zero() && pa.div_exact(&g).is_some() && pb.div_exact(&g).is_some() {
                    return g;
                }
            }
            xi = (&xi * 73794u32) / 27011u32 + 1u32;
        }
        ZPoly::prs_gcd(&pa, &pb)
    }

    /// Exact substitution `x -> x + a` for integer `a`.
    pub fn shift(&self, a: &BigInt) -> ZPoly {
        self.compose(&ZPoly::from_coeffs(vec![a.clone(), BigInt::one()]))
    }

    pub fn sign_of_lead(&self) -> Sign {
        self.lead().map(|v| v.sign()).unwrap_or(Sign::NoSign)
    }

    /// Total order used only for deterministic sorting.
    pub fn cmp_lex(&self, o: &ZPoly) -> Ordering {
        self.c.len().cmp(&o.c.len()).then_with(|| self.c.iter().rev().cmp(o.c.iter().rev()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> ZPoly {
        ZPoly::from_i64s(c)
    }

    #[test]
    fn gcd_of_products() {
        let a = p(&[1, 1]).mul(&p(&[-2, 0, 3]));
        let b = p(&[1, 1]).mul(&p(&[5, 7]));
        assert_eq!(ZPoly::gcd_primitive(&a, &b), p(&[1, 1]));
        let a = p(&[-1, 0, 1]).pow(3).scale(&BigInt::from(6));
        let b = p(&[1, 1]).pow(2).mul(&p(&[4, 0, 0, 9]));
        assert_eq!(ZPoly::gcd_primitive(&a, &b), p(&[1, 1]).pow(2));
    }

    #[test]
    fn prs_agrees_with_heuristic() {
        let f = p(&[3, -1, 4, 1, -5]);
        let g = p(&[2, 7, 1, 8]);
        let h = p(&[-1, 2, 1]);
        let a = f.mul(&h);
        let b = g.mul(&h);
        assert_eq!(ZPoly::prs_gcd(&a, &b), ZPoly::gcd_primitive(&a, &b));
        assert_eq!(ZPoly::gcd_primitive(&a, &b), h);
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 2, 1]);
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[1, 1])));
        assert_eq!(a.div_exact(&p(&[1, 2])), None);
    }
}
