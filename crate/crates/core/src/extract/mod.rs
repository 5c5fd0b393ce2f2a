//! Map counts from curve data and amplitudes: residues at `z = ∞`, `c`-reinsertion
//! and expansion in `t`.

mod closed;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{BigRational, ExpandError, Field, KElement, RationalFunc, ZPoly};
use crate::spectral::{exchanged_reduced, ordinary_reduced, Mode};
use crate::tr::{Amplitude, TrEngine};

pub use closed::{bernardi_fusy, genus1_closed, genus1_explicit, r_coeff, remark_l2_check, Genus1Kind};

/// Which boundary conditions a table counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Ordinary,
    /// First boundary simple, second ordinary (cylinders only).
    Mixed,
    Simple,
    FullySimple,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Ordinary => "ordinary",
            Family::Mixed => "mixed",
            Family::Simple => "simple",
            Family::FullySimple => "fully-simple",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "ordinary" => Some(Family::Ordinary),
            "mixed" => Some(Family::Mixed),
            "simple" => Some(Family::Simple),
            "fully-simple" => Some(Family::FullySimple),
            _ => None,
        }
    }
}

/// `[t^q]` of one generating series, `q = 0..=q_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub family: Family,
    pub genus: usize,
    pub lengths: Vec<usize>,
    pub q_max: usize,
    pub coefficients: Vec<BigRational>,
}

impl CountTable {
    pub fn get(&self, q: usize) -> &BigRational {
        &self.coefficients[q]
    }

    pub fn is_nonnegative_integral(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_integer() && !c.is_negative())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtractError {
    /// The reduced value has an odd total length but is nonzero.
    OddLength,
    Expand(ExpandError),
    /// A count came out non-integral.
    NotInteger { q: usize, value: String },
    Unsupported(String),
}

impl fmt::Display for ExtractError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtractError::OddLength => f.write_str("nonzero value for odd total length"),
            ExtractError::Expand(e) => write!(f, "t-expansion failed: {}", e),
            ExtractError::NotInteger { q, value } => write!(f, "coefficient of t^{} is not an integer: {}", q, value),
            ExtractError::Unsupported(s) => write!(f, "unsupported: {}", s),
        }
    }
}

pub(crate) fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

fn binom_f<F: Field>(n: i64, k: i64) -> F {
    F::from_rational(&BigRational::from_integer(binom(n, k)))
}

/// `v = u/3` in `Q(u)` or `s^2/3` in `Q(s)`.
fn v_param(mode: Mode) -> RationalFunc {
    let third = BigRational::new(1.into(), 3.into());
    let x = RationalFunc::x();
    match mode {
        Mode::Ordinary => x.scaled(&third),
        Mode::Exchanged => x.times(&x).scaled(&third),
    }
}

/// `[z^e] (z + 1/z)^l`.
pub fn xhat_pow_coeff<F: Field>(l: usize, e: i64) -> F {
    let l = l as i64;
    if (l - e) % 2 != 0 {
        return F::zero();
    }
    binom_f(l, (l - e) / 2)
}

/// `[z^e] (1/z - v/z^3)^{-k}`.
pub fn yhat_neg_pow_coeff<F: Field>(k: usize, e: i64, v: &F) -> F {
    let k = k as i64;
    if k == 0 {
        return if e == 0 { F::one() } else { F::zero() };
    }
    if (k - e) % 2 != 0 || e > k {
        return F::zero();
    }
    let i = (k - e) / 2;
    binom_f::<F>(i + k - 1, k - 1).times(&v.powi(i))
}

/// `Res_{z=∞} f(z) dz / (z - a)^k` for `f = Σ_{e ≥ 0} f[e] z^e`.
pub fn res_inf_pole<F: Field>(f: &[F], a: &F, k: usize) -> F {
    let k = k as i64;
    let mut acc = F::zero();
    let mut apow = F::one();
    let mut m = 0i64;
    while ((m + k - 1) as usize) < f.len() {
        let c = &f[(m + k - 1) as usize];
        if !c.is_zero() {
            acc = acc.plus(&c.times(&binom_f::<F>(m + k - 1, k - 1)).times(&apow));
        }
        apow = apow.times(a);
        m += 1;
    }
    acc.negated()
}

/// Nonnegative part of the boundary test function `x^l` (ordinary) or `w^{-k}` (exchanged).
fn test_function(mode: Mode, len: usize, emax: usize) -> Vec<RationalFunc> {
    let v = v_param(mode);
    (0..=emax as i64)
        .map(|e| match mode {
            Mode::Ordinary => xhat_pow_coeff(len, e),
            Mode::Exchanged => yhat_neg_pow_coeff(len, e, &v),
        })
        .collect()
}

/// `(-1)^n Π Res x_i^{l_i} ω` or `Π Res w_i^{-k_i} ω` on the reduced curve (without the `c` powers).
pub fn amplitude_residue(amp: &Amplitude<RationalFunc>, mode: Mode, points: &[RationalFunc], lengths: &[usize]) -> RationalFunc {
    assert_eq!(lengths.len(), amp.n, "one length per slot");
    let kmax = amp.max_pole_order();
    let mut cache: Vec<Vec<Vec<Option<RationalFunc>>>> =
        lengths.iter().map(|_| points.iter().map(|_| vec![None; kmax + 1]).collect()).collect();
    let tests: Vec<Vec<RationalFunc>> = lengths.iter().map(|&l| test_function(mode, l, l.max(kmax))).collect();
    let mut acc = RationalFunc::zero();
    for (idx, c) in &amp.entries {
        let mut term = c.clone();
        for (i, &(a, k)) in idx.iter().enumerate() {
            let slot = &mut cache[i][a as usize][k as usize];
            if slot.is_none() {
                *slot = Some(res_inf_pole(&tests[i], &points[a as usize], k as usize));
            }
            term = term.times(slot.as_ref().unwrap());
            if term.is_zero() {
                break;
            }
        }
        acc = acc.plus(&term);
    }
    if mode == Mode::Ordinary && amp.n % 2 == 1 {
        acc = acc.negated();
    }
    acc
}

/// Multiply a reduced value by `c^{total}` and expand in `t`.
pub fn reduced_to_counts(val: &RationalFunc, mode: Mode, total: usize, q_max: usize) -> Result<Vec<BigRational>, ExtractError> {
    if val.is_zero() {
        return Ok(vec![BigRational::zero(); q_max + 1]);
    }
    if total % 2 == 1 {
        return Err(ExtractError::OddLength);
    }
    let one_plus = match mode {
        Mode::Ordinary => ZPoly::from_i64s(&[1, 1]),
        Mode::Exchanged => ZPoly::from_i64s(&[1, 0, 1]),
    };
    let cpow = RationalFunc::from_poly(one_plus.pow((total / 2) as u32));
    let full = val.times(&cpow);
    let k = match mode {
        Mode::Ordinary => KElement::from_u(&full),
        Mode::Exchanged => KElement::from_s(&full),
    };
    let ser = k.expand_t(q_max as i64).map_err(ExtractError::Expand)?;
    Ok((0..=q_max as i64).map(|q| ser.coeff(q)).collect())
}

fn integral(coeffs: Vec<BigRational>) -> Result<Vec<BigRational>, ExtractError> {
    for (q, c) in coeffs.iter().enumerate() {
        if !c.is_integer() {
            return Err(ExtractError::NotInteger { q, value: crate::exactnum::format_rational(c) });
        }
    }
    Ok(coeffs)
}

fn table(family: Family, genus: usize, lengths: &[usize], q_max: usize, coeffs: Vec<BigRational>) -> Result<CountTable, ExtractError> {
    Ok(CountTable { family, genus, lengths: lengths.to_vec(), q_max, coefficients: integral(coeffs)? })
}

/// Reduced disk value: `[z^{-1}] x^l y x'` (ordinary) or `-[z^{-1}] w^{-k} x w'` (exchanged).
pub fn disk_reduced(mode: Mode, len: usize) -> RationalFunc {
    let v = v_param(Mode::Ordinary);
    let three_v = v.scaled(&BigRational::from_integer(3.into()));
    match mode {
        Mode::Ordinary => {
            // y x' = z^{-1} - (1 + v) z^{-3} + v z^{-5}
            let yx = [(1i64, RationalFunc::one()), (3, RationalFunc::one().plus(&v).negated()), (5, v.clone())];
            let mut acc = RationalFunc::zero();
            for (p, c) in &yx {
                acc = acc.plus(&c.times(&xhat_pow_coeff::<RationalFunc>(len, p - 1)));
            }
            acc
        }
        Mode::Exchanged => {
            // x w' = -z^{-1} + (3v - 1) z^{-3} + 3v z^{-5}
            let xw = [
                (1i64, RationalFunc::one().negated()),
                (3, three_v.minus(&RationalFunc::one())),
                (5, three_v.clone()),
            ];
            let mut acc = RationalFunc::zero();
            for (p, c) in &xw {
                acc = acc.plus(&c.times(&yhat_neg_pow_coeff(len, p - 1, &v)));
            }
            acc.negated()
        }
    }
}

/// Ordinary disks `F_l` or simple disks `H_k`.
pub fn disk_coeffs(family: Family, len: usize, q_max: usize) -> Result<CountTable, ExtractError> {
    let mode = match family {
        Family::Ordinary => Mode::Ordinary,
        Family::Simple | Family::FullySimple => Mode::Exchanged,
        Family::Mixed => return Err(ExtractError::Unsupported("mixed disks".into())),
    };
    let val = disk_reduced(mode, len);
    table(family, 0, &[len], q_max, reduced_to_counts(&val, Mode::Ordinary, len, q_max)?)
}

/// Reduced cylinder value over `Q(u)`.
pub fn cylinder_reduced(family: Family, l1: usize, l2: usize) -> RationalFunc {
    let v = v_param(Mode::Ordinary);
    let f = |simple: bool, l: usize, e: i64| -> RationalFunc {
        if simple {
            yhat_neg_pow_coeff(l, e, &v)
        } else {
            xhat_pow_coeff(l, e)
        }
    };
    let pair = |s1: bool, s2: bool| {
        let mut acc = RationalFunc::zero();
        let top = l1.max(l2) as i64;
        for m in 0..top {
            let a = f(s1, l1, m + 1);
            if a.is_zero() {
                continue;
            }
            let b = f(s2, l2, m + 1);
            acc = acc.plus(&a.times(&b).scaled(&BigRational::from_integer((m + 1).into())));
        }
        acc
    };
    match family {
        Family::Ordinary => pair(false, false),
        Family::Mixed => pair(true, false),
        Family::Simple => pair(true, true),
        Family::FullySimple => fully_simple_cylinder(l1, l2, &v),
    }
}

/// Truncated bivariate series `Σ c[i][j] a^i b^j`.
struct Bi {
    c: Vec<Vec<RationalFunc>>,
}

impl Bi {
    fn zero(da: usize, db: usize) -> Self {
        Bi { c: vec![vec![RationalFunc::zero(); db + 1]; da + 1] }
    }

    fn dims(&self) -> (usize, usize) {
        (self.c.len() - 1, self.c[0].len() - 1)
    }

    fn mul(&self, o: &Bi) -> Bi {
        let (da, db) = self.dims();
        let mut r = Bi::zero(da, db);
        for i in 0..=da {
            for j in 0..=db {
                let x = &self.c[i][j];
                if x.is_zero() {
                    continue;
                }
                for p in 0..=da - i {
                    for q in 0..=db - j {
                        let y = &o.c[p][q];
                        if !y.is_zero() {
                            r.c[i + p][j + q] = r.c[i + p][j + q].plus(&x.times(y));
                        }
                    }
                }
            }
        }
        r
    }
}

/// `[a^{k1-1} b^{k2-1}] (1 - v a^2)^{-k1} (1 - v b^2)^{-k2} (v + v^2 (a^2 + 4ab + b^2)) / D^2`,
/// `D = 1 - v (a^2 + ab + b^2)`.
fn fully_simple_cylinder(k1: usize, k2: usize, v: &RationalFunc) -> RationalFunc {
    if k1 == 0 || k2 == 0 {
        return RationalFunc::zero();
    }
    let (da, db) = (k1 - 1, k2 - 1);
    let mut pa = Bi::zero(da, db);
    for i in 0..=da / 2 {
        pa.c[2 * i][0] = binom_f::<RationalFunc>((i + k1 - 1) as i64, (k1 - 1) as i64).times(&v.powi(i as i64));
    }
    let mut pb = Bi::zero(da, db);
    for j in 0..=db / 2 {
        pb.c[0][2 * j] = binom_f::<RationalFunc>((j + k2 - 1) as i64, (k2 - 1) as i64).times(&v.powi(j as i64));
    }
    let mut q = Bi::zero(da, db);
    let set = |b: &mut Bi, i: usize, j: usize, val: RationalFunc| {
        if i <= da && j <= db {
            b.c[i][j] = b.c[i][j].plus(&val);
        }
    };
    for (i, j) in [(2, 0), (1, 1), (0, 2)] {
        set(&mut q, i, j, RationalFunc::one());
    }
    // D^{-2} = Σ (n+1) v^n q^n
    let mut dinv = Bi::zero(da, db);
    let mut qn = Bi::zero(da, db);
    qn.c[0][0] = RationalFunc::one();
    let nmax = (da + db) / 2;
    for n in 0..=nmax {
        let w = v.powi(n as i64).scaled(&BigRational::from_integer((n + 1).into()));
        for i in 0..=da {
            for j in 0..=db {
                if !qn.c[i][j].is_zero() {
                    dinv.c[i][j] = dinv.c[i][j].plus(&qn.c[i][j].times(&w));
                }
            }
        }
        qn = qn.mul(&q);
    }
    let mut num = Bi::zero(da, db);
    let v2 = v.times(v);
    set(&mut num, 0, 0, v.clone());
    set(&mut num, 2, 0, v2.clone());
    set(&mut num, 1, 1, v2.scaled(&BigRational::from_integer(4.into())));
    set(&mut num, 0, 2, v2);
    let prod = pa.mul(&pb).mul(&num).mul(&dinv);
    prod.c[da][db].clone()
}

pub fn cylinder_coeffs(family: Family, l1: usize, l2: usize, q_max: usize) -> Result<CountTable, ExtractError> {
    let val = cylinder_reduced(family, l1, l2);
    table(family, 0, &[l1, l2], q_max, reduced_to_counts(&val, Mode::Ordinary, l1 + l2, q_max)?)
}

/// TR amplitudes on both reduced curves, with extraction of ordinary and fully simple counts.
pub struct Extractor {
    ordinary: TrEngine<RationalFunc>,
    exchanged: TrEngine<RationalFunc>,
}

impl Extractor {
    /// Able to reach every `(g, n)` with `2g - 2 + n <= chi_max`.
    pub fn new(chi_max: usize) -> Self {
        let ordinary = TrEngine::new(ordinary_reduced(), chi_max).expect("quadrangulation curve is regular");
        let exchanged = TrEngine::new(exchanged_reduced(), chi_max).expect("exchanged curve is regular");
        Extractor { ordinary, exchanged }
    }

    pub fn engine(&mut self, mode: Mode) -> &mut TrEngine<RationalFunc> {
        match mode {
            Mode::Ordinary => &mut self.ordinary,
            Mode::Exchanged => &mut self.exchanged,
        }
    }

    /// Reduced value of `F^{[g]}_{l...}` (ordinary) or `Ĥ^{[g]}_{k...}` (exchanged), before `c`-reinsertion.
    pub fn reduced(&mut self, mode: Mode, g: usize, lengths: &[usize]) -> RationalFunc {
        let n = lengths.len();
        if g == 0 && n <= 2 {
            let val = if n == 1 {
                disk_reduced(mode, lengths[0])
            } else {
                let fam = if mode == Mode::Ordinary { Family::Ordinary } else { Family::FullySimple };
                cylinder_reduced(fam, lengths[0], lengths[1])
            };
            return match mode {
                Mode::Ordinary => val,
                Mode::Exchanged => val.compose_poly(&ZPoly::from_i64s(&[0, 0, 1])),
            };
        }
        let engine = self.engine(mode);
        let points = engine.context().curve.branch_points.clone();
        let amp = engine.amplitude(g, n);
        amplitude_residue(amp, mode, &points, lengths)
    }

    pub fn ordinary_coeffs(&mut self, g: usize, lengths: &[usize], q_max: usize) -> Result<CountTable, ExtractError> {
        let val = self.reduced(Mode::Ordinary, g, lengths);
        let total = lengths.iter().sum();
        table(Family::Ordinary, g, lengths, q_max, reduced_to_counts(&val, Mode::Ordinary, total, q_max)?)
    }

    pub fn fully_simple_coeffs(&mut self, g: usize, lengths: &[usize], q_max: usize) -> Result<CountTable, ExtractError> {
        let val = self.reduced(Mode::Exchanged, g, lengths);
        let total = lengths.iter().sum();
        table(Family::FullySimple, g, lengths, q_max, reduced_to_counts(&val, Mode::Exchanged, total, q_max)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_of_pole_basis() {
        // Res_{z=∞} (z + 1/z)^2 dz/(z-1)^2: [z^{-1}] of z^2 (1 + 2/z + 3/z^2 + 4/z^3 ...)/z^2 = 2, negated
        let f: Vec<BigRational> = (0..=2).map(|e| xhat_pow_coeff(2, e)).collect();
        assert_eq!(res_inf_pole(&f, &BigRational::one(), 2), BigRational::from_integer((-2).into()));
    }
}
