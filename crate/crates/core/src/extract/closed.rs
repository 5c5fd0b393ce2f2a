use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{binom, ExtractError};
use crate::exactnum::{c_series, BigRational, Field, TruncatedSeries};

type Ser = TruncatedSeries<BigRational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Genus1Kind {
    Ordinary,
    FullySimple,
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

fn ratio(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

/// `φ_m = c^{2m} (1 + (m-1) sqrt(1 - 12t)) / (1 - 12t)`.
fn phi(m: i64, q: i64) -> Ser {
    let c2 = c_series(q).expect("c(t) exists").square();
    let one_minus = Ser::from_coeffs('t', alloc::vec![BigRational::one(), BigRational::from_i64(-12)], q);
    let sq = one_minus.sqrt().expect("leading term one");
    let num = sq.scale(&BigRational::from_i64(m - 1)).add_scalar(&BigRational::one());
    c2.pow(m as u32).mul(&num).mul(&one_minus.inv())
}

/// Genus-one one-boundary series: `F^{[1]}_{2(m+1)}` or `Ĥ^{[1]}_{2m}` in closed form.
pub fn genus1_closed(m: usize, q_max: usize, kind: Genus1Kind) -> Ser {
    let m = m as i64;
    let q = q_max as i64;
    match kind {
        Genus1Kind::Ordinary => {
            let pre = ratio(factorial(2 * m + 1), factorial(m) * factorial(m) * 6);
            phi(m, q).scale(&pre)
        }
        Genus1Kind::FullySimple => {
            assert!(m >= 1, "fully simple genus-one series start at m = 1");
            let pre = ratio(factorial(3 * m), factorial(m) * factorial(2 * m - 1) * 4);
            phi(3 * m + 1, q).shift(m + 1).truncate(q).scale(&pre)
        }
    }
}

/// `r_{m,i}` with `c^{2m} / (1 - 12t) = Σ r_{m,i} (3t)^i`.
pub fn r_coeff(m: usize, i: usize) -> BigRational {
    let (m, i) = (m as i64, i as i64);
    let mut s = BigInt::zero();
    for j in 0..=m / 2 {
        let term = binom(m - j - 1, j) * binom(2 * (m + i - j), m + i - j);
        if j % 2 == 0 {
            s += term;
        } else {
            s -= term;
        }
    }
    let pow2 = BigInt::from(2).pow((m + 2 * i) as u32);
    BigRational::from_integer(pow2) - ratio(s, BigInt::from(2))
}

/// `φ_m` through the explicit `r_{m,i}` expansion, as a series in `t`.
pub fn genus1_explicit(m: usize, q_max: usize) -> Ser {
    let mm = BigRational::from_integer(BigInt::from(m));
    let one_minus_m = BigRational::one() - &mm;
    let r: Vec<BigRational> = (0..=q_max).map(|i| r_coeff(m, i)).collect();
    let mut c = Vec::with_capacity(q_max + 1);
    let mut three_n = BigRational::one();
    for n in 0..=q_max {
        let mut inner = BigRational::zero();
        for (i, ri) in r.iter().enumerate().take(n) {
            let d = (n - i) as i64;
            let w = ratio(BigInt::from(2) * binom(2 * (d - 1), d - 1), BigInt::from(d));
            inner += ri * w;
        }
        let coeff = &mm * &r[n] + &one_minus_m * inner;
        c.push(coeff * &three_n);
        three_n *= BigRational::from_integer(3.into());
    }
    Ser::from_coeffs('t', c, q_max as i64)
}

/// Planar fully simple quadrangulations with even boundary lengths.
pub fn bernardi_fusy(q: usize, lengths: &[usize]) -> Result<BigRational, ExtractError> {
    if lengths.iter().any(|k| k % 2 == 1 || *k == 0) {
        return Err(ExtractError::Unsupported("boundary lengths must be positive and even".into()));
    }
    let n = lengths.len() as i64;
    let l: i64 = lengths.iter().map(|&k| k as i64).sum();
    let q = q as i64;
    let v = q - l / 2 - n + 2;
    if v < 0 {
        return Ok(BigRational::zero());
    }
    let e = l / 2 + 2 * q;
    let p3 = q - l / 2;
    let three = BigRational::from_integer(3.into());
    let mut alpha = ratio(factorial(e - 1), factorial(v) * factorial(l + q));
    alpha *= three.powi(p3);
    for &k in lengths {
        let k = k as i64;
        alpha *= BigRational::from_integer(BigInt::from(k) * binom(3 * k / 2, k));
    }
    Ok(alpha)
}

/// `F^{[1]}_2 = H_{1,1} + Ĥ^{[1]}_2` coefficientwise.
pub fn remark_l2_check(f2: &[BigRational], h11: &[BigRational], h2: &[BigRational]) -> bool {
    f2.len() == h11.len() && f2.len() == h2.len() && f2.iter().zip(h11).zip(h2).all(|((a, b), c)| *a == b + c)
}
