use alloc::vec::Vec;

use crate::exactnum::{BigRational, Field, RationalFunc, ZPoly};
use crate::extract::Extractor;
use crate::spectral::{LaurentPoly, Mode};

/// Both sides of the pants identity as rational functions of one variable,
/// coefficients of `dz_1 dz_2 dz_3`.
#[derive(Clone, Debug, PartialEq)]
pub struct PantsSides {
    pub ordinary: RationalFunc,
    pub exchanged: RationalFunc,
    pub rhs: RationalFunc,
}

impl PantsSides {
    pub fn holds(&self) -> bool {
        self.ordinary.plus(&self.exchanged) == self.rhs
    }
}

fn laurent_at(p: &LaurentPoly<RationalFunc>, coeff: &dyn Fn(&RationalFunc) -> RationalFunc, z: &RationalFunc) -> RationalFunc {
    let mut acc = RationalFunc::from_int(0);
    for (e, c) in p.terms() {
        acc = acc.plus(&coeff(c).times(&z.powi(e)));
    }
    acc
}

fn amplitude_at(
    ext: &mut Extractor,
    mode: Mode,
    coeff: &dyn Fn(&RationalFunc) -> RationalFunc,
    z: &[RationalFunc; 3],
) -> RationalFunc {
    let engine = ext.engine(mode);
    let points: Vec<RationalFunc> = engine.context().curve.branch_points.iter().map(coeff).collect();
    let amp = engine.amplitude(0, 3);
    let mut acc = RationalFunc::from_int(0);
    for (idx, c) in &amp.entries {
        let mut term = coeff(c);
        for (i, &(a, k)) in idx.iter().enumerate() {
            term = term.times(&z[i].minus(&points[a as usize]).powi(-(k as i64)));
        }
        acc = acc.plus(&term);
    }
    acc
}

/// `Σ_i d_i [B(z_i,z_j) B(z_i,z_k) / (dx(z_i) dy(z_i))]`.
fn rhs(ext: &mut Extractor, coeff: &dyn Fn(&RationalFunc) -> RationalFunc, z: &[RationalFunc; 3]) -> RationalFunc {
    let curve = &ext.engine(Mode::Ordinary).context().curve;
    let (dx, dy) = (curve.x.derivative(), curve.y.derivative());
    let (ddx, ddy) = (dx.derivative(), dy.derivative());
    let two = RationalFunc::from_int(2);
    let mut acc = RationalFunc::from_int(0);
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let zi = &z[i];
        let p = laurent_at(&dx, coeff, zi).times(&laurent_at(&dy, coeff, zi));
        let pz = laurent_at(&ddx, coeff, zi)
            .times(&laurent_at(&dy, coeff, zi))
            .plus(&laurent_at(&dx, coeff, zi).times(&laurent_at(&ddy, coeff, zi)));
        let (dj, dk) = (zi.minus(&z[j]), zi.minus(&z[k]));
        let f = dj.times(&dj).times(&dk).times(&dk).times(&p).inverse();
        let log_derivative = two
            .divided(&dj)
            .plus(&two.divided(&dk))
            .plus(&pz.divided(&p))
            .negated();
        acc = acc.plus(&f.times(&log_derivative));
    }
    acc
}

/// Pants identity with `z_1` symbolic and `s`, `z_2`, `z_3` fixed rationals.
pub fn pants_sides(ext: &mut Extractor, s: &BigRational, z2: &BigRational, z3: &BigRational) -> PantsSides {
    let u = s * s;
    let at_u = |c: &RationalFunc| RationalFunc::from_rational_coeffs(&[c.eval(&u).expect("regular at u")]);
    let at_s = |c: &RationalFunc| RationalFunc::from_rational_coeffs(&[c.eval(s).expect("regular at s")]);
    let z = [
        RationalFunc::x(),
        RationalFunc::from_rational_coeffs(core::slice::from_ref(z2)),
        RationalFunc::from_rational_coeffs(core::slice::from_ref(z3)),
    ];
    PantsSides {
        ordinary: amplitude_at(ext, Mode::Ordinary, &at_u, &z),
        exchanged: amplitude_at(ext, Mode::Exchanged, &at_s, &z),
        rhs: rhs(ext, &at_u, &z),
    }
}

/// Pants identity as rational functions of `s`, at fixed rational `z_1, z_2, z_3`.
pub fn pants_sides_in_s(ext: &mut Extractor, z: [&BigRational; 3]) -> PantsSides {
    let square = ZPoly::from_i64s(&[0, 0, 1]);
    let in_s = |c: &RationalFunc| c.compose_poly(&square);
    let same = |c: &RationalFunc| c.clone();
    let z = z.map(|v| RationalFunc::from_rational_coeffs(core::slice::from_ref(v)));
    PantsSides {
        ordinary: amplitude_at(ext, Mode::Ordinary, &in_s, &z),
        exchanged: amplitude_at(ext, Mode::Exchanged, &same, &z),
        rhs: rhs(ext, &in_s, &z),
    }
}

/// `ω_{0,3} + ω̌_{0,3} = Σ_i d_i[B B / (dx dy)]` at a fixed set of sample points, in both forms.
pub fn check_pants() -> bool {
    let mut ext = Extractor::new(1);
    let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let samples = [(r(1, 2), r(3, 1), r(-5, 2)), (r(2, 3), r(1, 7), r(4, 1)), (r(3, 5), r(-2, 1), r(5, 3))];
    for (s, z2, z3) in &samples {
        if !pants_sides(&mut ext, s, z2, z3).holds() {
            return false;
        }
    }
    let points = [[r(2, 1), r(-3, 1), r(1, 3)], [r(5, 2), r(7, 3), r(-4, 5)]];
    for [a, b, c] in &points {
        if !pants_sides_in_s(&mut ext, [a, b, c]).holds() {
            return false;
        }
    }
    true
}
