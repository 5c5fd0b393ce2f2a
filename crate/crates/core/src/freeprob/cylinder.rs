use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::tri::Tri;
use super::{fully_simple_disks, ordinary_disks, TSeries};
use crate::exactnum::BigRational;
use crate::extract::{cylinder_coeffs, ExtractError, Family};

/// Number of nonzero coefficients left over in each cylinder identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CylinderResiduals {
    /// `(W_2 + 1/(x_1-x_2)^2) dx_1 dx_2 = (X_2 + 1/(w_1-w_2)^2) dw_1 dw_2`.
    pub ordinary_fully_simple: usize,
    /// `Y_2(W(x_1), W(x_2)) = W_2(x_1,x_2) X'(W(x_1)) X'(W(x_2))`.
    pub ordinary_simple: usize,
    /// `Y_2 = X_2 + ∂_1 ∂_2 log((w_1 - w_2)/(X(w_1) - X(w_2)))`.
    pub simple_fully_simple: usize,
    /// The first identity with both double-pole terms dropped; nonzero.
    pub without_shift: usize,
}

fn count_nonzero(t: &Tri, max_total: usize) -> usize {
    let (d1, d2, q) = t.dims();
    let mut n = 0;
    for i in 0..=d1 {
        for j in 0..=d2 {
            if i + j > max_total {
                continue;
            }
            for k in 0..=q {
                if !t.get(i, j, k).is_zero() {
                    n += 1;
                }
            }
        }
    }
    n
}

/// Exact quotient by `(a - b)^2` of the homogeneous parts of degree `<= d`.
fn divide_by_diagonal(n: &Tri, d: usize) -> Option<Tri> {
    let (d1, d2, q) = n.dims();
    let mut out = Tri::zero(d1, d2, q);
    for k in 0..=q {
        for deg in 0..=d {
            // coefficients of a^i b^{deg-i}, as a polynomial in s = a/b
            let mut p: Vec<BigRational> = (0..=deg)
                .map(|i| if i <= d1 && deg - i <= d2 { n.get(i, deg - i, k).clone() } else { BigRational::zero() })
                .collect();
            // divide twice by (s - 1), from the top coefficient down
            for _ in 0..2 {
                if p.is_empty() {
                    break;
                }
                let top = p.len() - 1;
                let mut quot = alloc::vec![BigRational::zero(); top];
                let mut carry = BigRational::zero();
                for i in (0..=top).rev() {
                    let v = &p[i] + &carry;
                    if i == 0 {
                        if !v.is_zero() {
                            return None;
                        }
                    } else {
                        quot[i - 1] = v.clone();
                        carry = v;
                    }
                }
                p = quot;
            }
            for (i, v) in p.into_iter().enumerate() {
                if deg >= 2 {
                    out.set(i, deg - 2 - i, k, v);
                }
            }
        }
    }
    Some(out)
}

/// `Σ_m c_m u^m` in variable `a` or `b`.
fn univariate(coeffs: &[TSeries], which: usize, d: usize, q: usize) -> Tri {
    let mut t = Tri::zero(d, d, q);
    for (m, s) in coeffs.iter().enumerate() {
        for (k, v) in s.iter().enumerate() {
            if which == 0 {
                t.set(m, 0, k, v.clone());
            } else {
                t.set(0, m, k, v.clone());
            }
        }
    }
    t
}

fn powers(x: &Tri, n: usize) -> Vec<Tri> {
    let (d1, d2, q) = x.dims();
    let mut out = alloc::vec![Tri::one(d1, d2, q)];
    for i in 1..=n {
        let next = out[i - 1].mul(x);
        out.push(next);
    }
    out
}

/// Residuals of the three cylinder identities, in `u_i = 1/x_i` (or `w_i`)
/// up to total degree `degree - 2` and `t^{q_max}`.
pub fn cylinder_residuals(q_max: usize, degree: usize) -> Result<CylinderResiduals, ExtractError> {
    let d = degree;
    let lmax = d + 2;
    let f1 = ordinary_disks(lmax, q_max)?;
    let h1 = fully_simple_disks(lmax, q_max)?;
    let mut f2 = BTreeMap::new();
    let mut g2 = BTreeMap::new();
    let mut h2 = BTreeMap::new();
    for l1 in 1..=lmax {
        for l2 in 1..=lmax {
            if l1 + l2 > d + 2 {
                continue;
            }
            f2.insert((l1, l2), cylinder_coeffs(Family::Ordinary, l1, l2, q_max)?.coefficients);
            g2.insert((l1, l2), cylinder_coeffs(Family::Simple, l1, l2, q_max)?.coefficients);
            h2.insert((l1, l2), cylinder_coeffs(Family::FullySimple, l1, l2, q_max)?.coefficients);
        }
    }
    let q = q_max;
    let zero = || alloc::vec![BigRational::zero(); q + 1];
    // w(u) = u + Σ F_l u^{l+1}
    let mut wc: Vec<TSeries> = alloc::vec![zero(); lmax + 2];
    wc[1][0] = BigRational::one();
    for (l, s) in f1.iter().enumerate() {
        wc[l + 2] = s.clone();
    }
    let wa = univariate(&wc, 0, d, q);
    let wb = univariate(&wc, 1, d, q);
    let dwc: Vec<TSeries> = (1..wc.len())
        .map(|m| wc[m].iter().map(|c| c * BigRational::from_integer(m.into())).collect())
        .collect();
    let dwa = univariate(&dwc, 0, d, q);
    let dwb = univariate(&dwc, 1, d, q);
    let pa = powers(&wa, d + 1);
    let pb = powers(&wb, d + 1);
    let bi = |tab: &BTreeMap<(usize, usize), TSeries>, shift: i64, pa: &[Tri], pb: &[Tri]| -> Tri {
        let mut acc = Tri::zero(d, d, q);
        for (&(l1, l2), s) in tab {
            let (e1, e2) = (l1 as i64 + shift, l2 as i64 + shift);
            if e1 < 0 || e2 < 0 || e1 as usize > d || e2 as usize > d {
                continue;
            }
            acc = acc.add(&pa[e1 as usize].mul(&pb[e2 as usize]).scale_series(s));
        }
        acc
    };
    let id = |d: usize| -> Vec<Tri> {
        let mut a = Tri::zero(d, d, q);
        a.set(1, 0, 0, BigRational::one());
        powers(&a, d)
    };
    let ua = id(d);
    let mut ub = alloc::vec![Tri::one(d, d, q)];
    {
        let mut b = Tri::zero(d, d, q);
        b.set(0, 1, 0, BigRational::one());
        for i in 1..=d {
            let next = ub[i - 1].mul(&b);
            ub.push(next);
        }
    }

    // ordinary vs fully simple
    let w2_over = bi(&f2, -1, &ua, &ub);
    let x2 = bi(&h2, -1, &pa, &pb);
    let lhs = w2_over.sub(&x2.mul(&dwa).mul(&dwb));
    // D(a, b) = Σ c_m h_{m-1}(a, b)
    let mut dd = Tri::zero(d, d, q);
    for (m, s) in wc.iter().enumerate().skip(1) {
        for i in 0..m {
            for (k, v) in s.iter().enumerate() {
                dd.add_at(i, m - 1 - i, k, v);
            }
        }
    }
    let num = dwa.mul(&dwb).sub(&dd.mul(&dd));
    let top = d;
    let rhs = divide_by_diagonal(&num, top)
        .ok_or_else(|| ExtractError::Unsupported("numerator not divisible".into()))?
        .mul(&dd.mul(&dd).inverse());
    let ordinary_fully_simple = count_nonzero(&lhs.sub(&rhs), top - 2);
    let without_shift = count_nonzero(&lhs, top - 2);

    // ordinary vs simple, multiplied by w_1^2 w_2^2
    let y2w = bi(&g2, 1, &pa, &pb);
    let mut xc: Vec<TSeries> = alloc::vec![zero(); lmax + 1];
    xc[0][0] = BigRational::from_integer((-1).into());
    for (i, s) in h1.iter().enumerate() {
        let l = i + 1;
        if l < xc.len() {
            xc[l] = s.iter().map(|c| c * BigRational::from_integer((l as i64 - 1).into())).collect();
        }
    }
    let compose = |p: &[Tri]| -> Tri {
        let mut acc = Tri::zero(d, d, q);
        for (m, s) in xc.iter().enumerate() {
            if m < p.len() {
                acc = acc.add(&p[m].scale_series(s));
            }
        }
        acc
    };
    let w2 = bi(&f2, 1, &ua, &ub);
    let rhs = w2.mul(&compose(&pa)).mul(&compose(&pb));
    let ordinary_simple = count_nonzero(&y2w.sub(&rhs), d);

    // simple vs fully simple, directly in w
    let y2 = bi(&g2, -1, &ua, &ub);
    let x2w = bi(&h2, -1, &ua, &ub);
    let mut s = Tri::zero(d, d, q);
    for (i, h) in h1.iter().enumerate() {
        let l = i + 1;
        if l < 2 {
            continue;
        }
        for j in 0..=l - 2 {
            for (k, v) in h.iter().enumerate() {
                s.add_at(j + 1, l - 2 - j + 1, k, v);
            }
        }
    }
    let log = s.scale(&BigRational::from_integer((-1).into())).log1p();
    let mixed = log.derivative(0).derivative(1);
    let diff = y2.sub(&x2w).add(&mixed);
    let simple_fully_simple = count_nonzero(&diff, d - 2);
    Ok(CylinderResiduals { ordinary_fully_simple, ordinary_simple, simple_fully_simple, without_shift })
}

/// All three cylinder identities hold on the quadrangulation tables.
pub fn check_cylinder(q_max: usize, degree: usize) -> Result<bool, ExtractError> {
    let r = cylinder_residuals(q_max, degree)?;
    Ok(r.ordinary_fully_simple == 0 && r.ordinary_simple == 0 && r.simple_fully_simple == 0)
}
