use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exactnum::{BigRational, Field, TruncatedSeries};

type Ser = TruncatedSeries<BigRational>;

/// Potential `V(x) = x^2/2 - Σ_j t_j x^j / j` with `t_j = weights[j] · t`.
///
/// `t` is a single grading variable; every series below is in `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct PotentialSpec {
    pub weights: BTreeMap<usize, BigRational>,
    /// Vertex weight; must be the square of a rational.
    pub u: BigRational,
}

impl PotentialSpec {
    pub fn gaussian() -> Self {
        PotentialSpec { weights: BTreeMap::new(), u: BigRational::one() }
    }

    pub fn quadrangulations() -> Self {
        let mut weights = BTreeMap::new();
        weights.insert(4, BigRational::one());
        PotentialSpec { weights, u: BigRational::one() }
    }
}

/// `x(ζ) = α + γ(ζ + 1/ζ)` and `y(ζ) = Σ_{k ≥ 1} y_k ζ^{-k}`, coefficients series in `t`.
#[derive(Clone, Debug)]
pub struct GeneralCurve {
    pub alpha: Ser,
    pub gamma: Ser,
    /// `y[k-1]` is the coefficient of `ζ^{-k}`.
    pub y: Vec<Ser>,
    pub order: i64,
}

/// Laurent polynomial in `ζ` with series coefficients, as a map exponent -> series.
type ZetaPoly = BTreeMap<i64, Ser>;

fn zp_mul(a: &ZetaPoly, b: &ZetaPoly, order: i64) -> ZetaPoly {
    let mut out: ZetaPoly = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = out.entry(ea + eb).or_insert_with(|| Ser::zero('t', order));
            *e = e.add(&ca.mul(cb));
        }
    }
    out
}

fn x_poly(alpha: &Ser, gamma: &Ser) -> ZetaPoly {
    let mut x = BTreeMap::new();
    x.insert(-1, gamma.clone());
    x.insert(0, alpha.clone());
    x.insert(1, gamma.clone());
    x
}

/// `V'(x(ζ))` as a Laurent polynomial in `ζ`.
fn vprime(p: &PotentialSpec, alpha: &Ser, gamma: &Ser, order: i64) -> ZetaPoly {
    let x = x_poly(alpha, gamma);
    let mut out = x.clone();
    let tvar = Ser::var_series('t', order);
    let dmax = p.weights.keys().copied().max().unwrap_or(0);
    let mut pw: ZetaPoly = BTreeMap::new();
    pw.insert(0, Ser::constant('t', BigRational::one(), order));
    for j in 1..=dmax {
        if j >= 2 {
            pw = zp_mul(&pw, &x, order);
        }
        // pw = x^{j-1}
        if let Some(wt) = p.weights.get(&j) {
            if wt.is_zero() {
                continue;
            }
            let k = tvar.scale(wt);
            for (e, c) in &pw {
                let term = c.mul(&k).neg();
                let slot = out.entry(*e).or_insert_with(|| Ser::zero('t', order));
                *slot = slot.add(&term);
            }
        }
    }
    out
}

fn get(p: &ZetaPoly, e: i64, order: i64) -> Ser {
    p.get(&e).cloned().unwrap_or_else(|| Ser::zero('t', order))
}

/// Solves `[ζ^0] V'(x(ζ)) = 0` and `γ [ζ^{-1}] V'(x(ζ)) = u` for `α`, `γ` in `Q[[t]]`.
pub fn build_general_curve(p: &PotentialSpec, order: i64) -> GeneralCurve {
    let g0 = p.u.sqrt().expect("vertex weight must be a rational square");
    let mut alpha = Ser::zero('t', order);
    let mut gamma = Ser::constant('t', g0.clone(), order);
    let inv_2g0 = (g0.clone() + g0.clone()).recip();
    // The Jacobian at t = 0 is diag(1, 2γ0); each sweep gains at least one order.
    for _ in 0..=order {
        let v = vprime(p, &alpha, &gamma, order);
        let e1 = get(&v, 0, order);
        let e2 = gamma.mul(&get(&v, -1, order)).add_scalar(&-p.u.clone());
        if e1.is_zero() && e2.is_zero() {
            break;
        }
        alpha = alpha.sub(&e1);
        gamma = gamma.sub(&e2.scale(&inv_2g0));
    }
    let v = vprime(p, &alpha, &gamma, order);
    let lo = v.keys().next().copied().unwrap_or(0).min(-1);
    let y = (1..=-lo).map(|k| get(&v, -k, order)).collect();
    GeneralCurve { alpha, gamma, y, order }
}

impl GeneralCurve {
    /// Disk counts `F_ℓ = -Res_{ζ→∞} x^ℓ y dx` for `ℓ = 0..=l_max`, as series in `t`.
    pub fn disk_series(&self, l_max: usize) -> Vec<Ser> {
        let order = self.order;
        let x = x_poly(&self.alpha, &self.gamma);
        let mut dx: ZetaPoly = BTreeMap::new();
        dx.insert(0, self.gamma.clone());
        dx.insert(-2, self.gamma.neg());
        let mut yp: ZetaPoly = BTreeMap::new();
        for (i, c) in self.y.iter().enumerate() {
            yp.insert(-(i as i64) - 1, c.clone());
        }
        let mut out = vec![];
        let mut acc = zp_mul(&yp, &dx, order);
        for l in 0..=l_max {
            if l > 0 {
                acc = zp_mul(&acc, &x, order);
            }
            out.push(get(&acc, -1, order));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::c_series;

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&n| BigRational::from_i64(n)).collect()
    }

    #[test]
    fn gaussian_curve() {
        let g = build_general_curve(&PotentialSpec::gaussian(), 4);
        assert!(g.alpha.is_zero());
        assert_eq!(g.gamma.power_coeffs(), ints(&[1, 0, 0, 0, 0]));
        assert_eq!(g.y.len(), 1);
    }

    #[test]
    fn quadrangulation_gamma_is_c() {
        let g = build_general_curve(&PotentialSpec::quadrangulations(), 6);
        assert!(g.alpha.is_zero());
        assert_eq!(g.gamma, c_series(6).unwrap());
        let f = g.disk_series(2);
        assert_eq!(f[2].power_coeffs()[..5], ints(&[1, 2, 9, 54, 378])[..]);
        assert_eq!(f[0].power_coeffs(), ints(&[1, 0, 0, 0, 0, 0, 0]));
    }
}
