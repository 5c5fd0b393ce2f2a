use alloc::vec::Vec;
use core::fmt;

use crate::exactnum::{Field, TruncatedSeries};
use crate::spectral::Curve;

type Ser<F> = TruncatedSeries<F>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrError {
    /// `x` is not simply ramified at the point.
    NotSimple,
    /// `y(a + ζ) - y(a + σ)` does not vanish simply (`dy = 0` at the branch point).
    DegenerateKernel,
}

impl fmt::Display for TrError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrError::NotSimple => f.write_str("x is not simply ramified at the branch point"),
            TrError::DegenerateKernel => f.write_str("kernel denominator vanishes to higher order (dy = 0)"),
        }
    }
}

/// Deck involution `σ(ζ)` near the branch point `a`: `x(a + σ) = x(a + ζ)`, `σ = -ζ + O(ζ^2)`.
pub fn deck_jet<F: Field>(curve: &Curve<F>, a: &F, order: i64) -> Result<Ser<F>, TrError> {
    let xj = curve.x.jet(a, order + 2);
    if !xj.coeff(1).is_zero() || xj.coeff(2).is_zero() {
        return Err(TrError::NotSimple);
    }
    let x0 = xj.coeff(0);
    let h = xj.add_scalar(&x0.negated()).shift(-2);
    let ratio = h.scale(&h.coeff(0).inverse());
    let r = ratio.sqrt().map_err(|_| TrError::NotSimple)?.shift(1);
    let rinv = r.reversion().map_err(|_| TrError::NotSimple)?;
    rinv.compose(&r.neg()).map_err(|_| TrError::NotSimple)
}

/// Recursion kernel near a branch point, `K(z_0, a + ζ) = Σ_m κ_m(ζ) dz_0 / (z_0 - a)^{m+1} / dζ`.
#[derive(Clone)]
pub struct KernelJet<F> {
    pub kappa: Vec<Ser<F>>,
}

pub fn kernel_jet<F: Field>(curve: &Curve<F>, a: &F, order: i64) -> Result<KernelJet<F>, TrError> {
    let sigma = deck_jet(curve, a, order)?;
    kernel_from_deck(curve, a, &sigma, order)
}

fn kernel_from_deck<F: Field>(curve: &Curve<F>, a: &F, sigma: &Ser<F>, order: i64) -> Result<KernelJet<F>, TrError> {
    let yj = curve.y.jet(a, order + 1);
    let y_sigma = yj.compose(sigma).expect("σ has no constant term");
    let dx = curve.x.derivative().jet(a, order + 1);
    let two = F::from_i64(2);
    let dy = yj.sub(&y_sigma);
    if dy.valuation() != 1 {
        return Err(TrError::DegenerateKernel);
    }
    let inv = dy.mul(&dx).scale(&two).inv();
    let zeta = Ser::var_series('ζ', order + 1);
    let mut kappa = Vec::with_capacity(order as usize + 2);
    kappa.push(Ser::zero('ζ', order));
    let mut zp = zeta.clone();
    let mut sp = sigma.clone();
    for _ in 1..=order + 1 {
        kappa.push(zp.sub(&sp).mul(&inv));
        zp = zp.mul(&zeta);
        sp = sp.mul(sigma);
    }
    Ok(KernelJet { kappa })
}

/// Local expansions at one branch point.
#[derive(Clone)]
pub struct LocalData<F> {
    pub index: usize,
    pub point: F,
    pub sigma: Ser<F>,
    pub dsigma: Ser<F>,
    pub kernel: KernelJet<F>,
    /// `∫ y dx` along `a + ζ`.
    pub primitive: Ser<F>,
    order: i64,
    plain: Vec<Vec<Ser<F>>>,
    deck: Vec<Vec<Ser<F>>>,
    sigma_pows: Vec<Ser<F>>,
}

impl<F: Field> LocalData<F> {
    pub fn new(curve: &Curve<F>, i: usize, order: i64) -> Result<Self, TrError> {
        let a = curve.branch_points[i].clone();
        let sigma = deck_jet(curve, &a, order)?;
        let dsigma = sigma.derivative();
        let kernel = kernel_from_deck(curve, &a, &sigma, order)?;
        let ydx = curve.y.jet(&a, order + 1).mul(&curve.x.derivative().jet(&a, order + 1));
        let primitive = ydx.integrate();
        let kmax = order.max(2) as usize;
        let mut plain = Vec::new();
        let mut deck = Vec::new();
        for b in &curve.branch_points {
            let d = a.minus(b);
            let (p, q) = if d.is_zero() {
                let zi = Ser::monomial('ζ', F::one(), -1, order);
                (zi, sigma.inv())
            } else {
                let z = Ser::from_coeffs('ζ', alloc::vec![d.clone(), F::one()], order);
                (z.inv(), sigma.add_scalar(&d).inv())
            };
            let mut pl = alloc::vec![Ser::constant('ζ', F::one(), order)];
            let mut dk = alloc::vec![dsigma.clone()];
            for k in 1..=kmax {
                pl.push(pl[k - 1].mul(&p));
                dk.push(dk[k - 1].mul(&q));
            }
            plain.push(pl);
            deck.push(dk);
        }
        let mut sigma_pows = alloc::vec![Ser::constant('ζ', F::one(), order)];
        for m in 1..=order as usize {
            let next = sigma_pows[m - 1].mul(&sigma);
            sigma_pows.push(next);
        }
        Ok(LocalData { index: i, point: a, sigma, dsigma, kernel, primitive, order, plain, deck, sigma_pows })
    }

    /// `(a + ζ - b)^{-k}`.
    pub fn pole(&self, b: usize, k: usize) -> Ser<F> {
        self.plain[b][k].clone()
    }

    /// `(a + σ - b)^{-k} σ'`.
    pub fn deck_pole(&self, b: usize, k: usize) -> Ser<F> {
        self.deck[b][k].clone()
    }

    /// Coefficient of `dz' / (z' - a)^{m+2}` in `B(a + ζ, z') / dζ`.
    pub fn b_plain(&self, m: usize) -> Ser<F> {
        Ser::monomial('ζ', F::from_i64(m as i64 + 1), m as i64, self.order)
    }

    /// Same for `B(a + σ(ζ), z')`.
    pub fn b_deck(&self, m: usize) -> Ser<F> {
        self.sigma_pows[m].mul(&self.dsigma).scale(&F::from_i64(m as i64 + 1))
    }

    /// `B(a + ζ, a + σ(ζ)) / dζ^2`.
    pub fn b_at_deck(&self) -> Ser<F> {
        let zeta = Ser::var_series('ζ', self.order + 1);
        let d = zeta.sub(&self.sigma);
        self.dsigma.mul(&d.square().inv())
    }
}
