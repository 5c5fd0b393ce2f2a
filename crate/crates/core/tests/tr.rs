use maprec_core::exactnum::{BigRational, Field, RationalFunc, TruncatedSeries};
use maprec_core::spectral::{exchanged_reduced, gaussian_curve, ordinary_reduced, Curve};
use maprec_core::tr::{deck_jet, kernel_jet, max_pole, Amplitude, TrEngine};
use num_traits::{One, Zero};

fn q(n: i64) -> RationalFunc {
    RationalFunc::from_int(n)
}

fn eval_amp1(amp: &Amplitude<RationalFunc>, points: &[RationalFunc], z: &RationalFunc) -> RationalFunc {
    let mut acc = RationalFunc::zero();
    for (idx, c) in &amp.entries {
        let (a, k) = idx[0];
        let d = z.minus(&points[a as usize]);
        acc = acc.plus(&c.times(&d.powi(-(k as i64))));
    }
    acc
}

#[test]
fn deck_at_one_is_inversion() {
    let cur = ordinary_reduced();
    let sigma = deck_jet(&cur, &RationalFunc::one(), 10).unwrap();
    // 1/(1+ζ) - 1
    let zeta = TruncatedSeries::<RationalFunc>::var_series('ζ', 10);
    let expect = zeta.add_scalar(&RationalFunc::one()).inv().add_scalar(&q(-1));
    assert_eq!(sigma.truncate(10), expect);
}

#[test]
fn deck_is_an_involution() {
    for cur in [ordinary_reduced(), exchanged_reduced()] {
        for a in &cur.branch_points {
            let s = deck_jet(&cur, a, 9).unwrap();
            let ss = s.compose(&s).unwrap();
            assert_eq!(ss, TruncatedSeries::var_series('ζ', ss.order()));
        }
    }
}

#[test]
fn exchanged_deck_second_coefficient() {
    let cur = exchanged_reduced();
    let a = cur.branch_points[0].clone();
    let wj = cur.x.jet(&a, 4);
    let s = deck_jet(&cur, &a, 4).unwrap();
    // w_2 σ^2 + w_3 σ^3 = w_2 ζ^2 + w_3 ζ^3 with σ = -ζ + σ_2 ζ^2 forces σ_2 = -w_3 / w_2
    let expect = wj.coeff(3).divided(&wj.coeff(2)).negated();
    assert_eq!(s.coeff(1), q(-1));
    assert_eq!(s.coeff(2), expect);
}

#[test]
fn exchanged_deck_matches_closed_form() {
    // ι(z) = s z (1 + sqrt(...)) / ...; on the reduced curve the deck map solves
    // v p^2 + (v/z) p + v/z^2 - 1 = 0 for p = 1/ι(z), v = s^2/3.
    let cur = exchanged_reduced();
    let s = cur.branch_points[0].clone();
    let v = s.times(&s).scaled(&BigRational::new(1.into(), 3.into()));
    let n = 8;
    let sigma = deck_jet(&cur, &s, n).unwrap();
    let z = TruncatedSeries::from_coeffs('ζ', vec![s.clone(), RationalFunc::one()], n);
    let p = sigma.add_scalar(&s).inv();
    let zi = z.inv();
    let lhs = p.square().scale(&v).add(&p.mul(&zi).scale(&v)).add(&zi.square().scale(&v)).add_scalar(&q(-1));
    assert!(lhs.is_zero() || lhs.valuation() > n - 2);
}

#[test]
fn kernel_two_routes() {
    // direct jet of (ζ^m - σ^m) / (2 (y(a+ζ) - y(a+σ)) x'(a+ζ)) against the
    // symmetrized form (ζ^m - σ^m) / (2 Δy x'), with Δy from the odd part of y in the
    // involution-adapted coordinate r = (ζ - σ)/2.
    let cur = ordinary_reduced();
    let a = RationalFunc::one();
    let n = 10;
    let k = kernel_jet(&cur, &a, n).unwrap();
    let sigma = deck_jet(&cur, &a, n).unwrap();
    // On this curve σ is global: a + σ = 1/(a + ζ), so y(a+σ) = y(1/z) exactly.
    let z = TruncatedSeries::from_coeffs('ζ', vec![a.clone(), RationalFunc::one()], n + 1);
    let zi = z.inv();
    let third = BigRational::new(1.into(), 3.into());
    let u = RationalFunc::x();
    let y_of = |w: &TruncatedSeries<RationalFunc>| w.inv().sub(&w.inv().pow(3).scale(&u.scaled(&third)));
    let dy = y_of(&z).sub(&y_of(&zi));
    let dx = TruncatedSeries::constant('ζ', RationalFunc::one(), n + 1).sub(&zi.square());
    let den = dy.mul(&dx).scale(&q(2)).inv();
    assert_eq!(k.kappa[0].valuation(), k.kappa[0].order() + 1);
    for m in 1..6usize {
        let zeta = TruncatedSeries::<RationalFunc>::var_series('ζ', n + 1);
        let num = zeta.pow(m as u32).sub(&sigma.pow(m as u32));
        let other = num.mul(&den);
        let ord = other.order().min(k.kappa[m].order());
        assert_eq!(other.truncate(ord), k.kappa[m].truncate(ord));
        assert!(k.kappa[m].valuation() >= m as i64 - 2);
    }
    assert_eq!(k.kappa[1].valuation(), -1);
}

fn engine(cur: Curve<RationalFunc>, chi: usize) -> TrEngine<RationalFunc> {
    TrEngine::new(cur, chi).unwrap()
}

#[test]
fn amplitudes_are_symmetric_with_double_poles_at_least() {
    let mut e = engine(ordinary_reduced(), 2);
    for (g, n) in [(0, 3), (1, 1), (0, 4), (1, 2), (2, 1)] {
        let a = e.amplitude(g, n).clone();
        assert!(a.is_symmetric(), "({}, {})", g, n);
        assert!(a.min_pole_order() >= 2);
        assert!(a.max_pole_order() <= max_pole(g, n));
        assert!(a.entries.keys().all(|k| k.len() == n));
    }
}

#[test]
fn quadrangulation_parity_symmetry() {
    // z -> -z maps x -> -x, y -> -y and exchanges the branch points.
    let mut e = engine(ordinary_reduced(), 2);
    for (g, n) in [(0, 3), (1, 1), (0, 4), (1, 2), (2, 1)] {
        let a = e.amplitude(g, n).clone();
        for (idx, c) in &a.entries {
            let mut sign = 1i64;
            let flipped: Vec<(u8, u16)> = idx
                .iter()
                .map(|&(p, k)| {
                    if k % 2 == 0 {
                        sign = -sign;
                    }
                    (1 - p, k)
                })
                .collect();
            assert_eq!(a.get(&flipped), c.times(&q(sign)), "({}, {}) {:?}", g, n, idx);
        }
    }
}

#[test]
fn homogeneity_in_y() {
    let mut e1 = engine(ordinary_reduced(), 2);
    let mut e2 = engine(ordinary_reduced().scale_y(&q(2)), 2);
    for (g, n) in [(0usize, 3usize), (1, 1), (0, 4), (1, 2)] {
        let deg = 2 - 2 * g as i64 - n as i64;
        let a = e1.amplitude(g, n).map(|c| c.times(&q(2).powi(deg)));
        assert_eq!(&a, e2.amplitude(g, n));
    }
}

#[test]
fn dilaton_on_both_curves() {
    let mut e = engine(ordinary_reduced(), 3);
    for (g, n) in [(0, 3), (1, 1), (0, 4), (1, 2), (2, 1)] {
        let r = e.dilaton_check(g, n);
        assert!(r.holds, "({}, {}) residual {:?}", g, n, r.residual);
    }
    let mut x = engine(exchanged_reduced(), 2);
    for (g, n) in [(0, 3), (1, 1), (1, 2)] {
        assert!(x.dilaton_check(g, n).holds);
    }
}

#[test]
fn dilaton_residual_detects_a_wrong_amplitude() {
    let mut e = engine(ordinary_reduced(), 2);
    e.amplitude(1, 2);
    let mut bad = e.amplitude(1, 1).clone();
    let key = bad.entries.keys().next().unwrap().clone();
    let v = bad.entries[&key].plus(&RationalFunc::one());
    bad.entries.insert(key, v);
    e.insert(bad);
    assert!(!e.dilaton_check(1, 1).holds);
}

fn tori_points() -> Vec<RationalFunc> {
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41].iter().map(|&n| q(n)).collect()
}

#[test]
fn torus_matches_closed_rational_form() {
    // ω_{1,1} = W dx with W = z^3 (v z^4 + (1 - 5v) z^2 + v) / ((z^2 - 1)^5 (1 - 3v)^2), v = u/3, c = 1.
    let mut e = engine(ordinary_reduced(), 1);
    let pts = e.context().curve.branch_points.clone();
    let amp = e.amplitude(1, 1).clone();
    let v = RationalFunc::x().scaled(&BigRational::new(1.into(), 3.into()));
    let one = RationalFunc::one();
    for z in tori_points() {
        let z2 = z.times(&z);
        let poly = v.times(&z2).times(&z2).plus(&one.minus(&v.scaled(&BigRational::from_i64(5))).times(&z2)).plus(&v);
        let den = z2.minus(&one).powi(5).times(&one.minus(&v.scaled(&BigRational::from_i64(3))).powi(2));
        let w = z2.times(&z).times(&poly).divided(&den);
        let dx = one.minus(&z2.inverse());
        assert_eq!(eval_amp1(&amp, &pts, &z), w.times(&dx));
    }
}

#[test]
fn exchanged_torus_matches_closed_rational_form() {
    // X dw with X = 3t^2c^9 z^5 [(3tc^4 - 2) z^4 + 3tc^4 (9tc^4 - 1) z^2 - 27 t^3 c^12] / ((3tc^4 - z^2)^5 (1 - 3tc^4)^2),
    // written with 3tc^4 = s^2 and c = 1 in dw.
    let mut e = engine(exchanged_reduced(), 1);
    let pts = e.context().curve.branch_points.clone();
    let amp = e.amplitude(1, 1).clone();
    let s = RationalFunc::x();
    let s2 = s.times(&s);
    let one = RationalFunc::one();
    let third = BigRational::new(1.into(), 3.into());
    for z in tori_points() {
        let z2 = z.times(&z);
        let bracket = s2
            .minus(&q(2))
            .times(&z2)
            .times(&z2)
            .plus(&s2.times(&s2.scaled(&BigRational::from_i64(3)).minus(&one)).times(&z2))
            .minus(&s2.powi(3));
        let pref = s2.times(&s2).scaled(&third);
        let num = pref.times(&z.powi(5)).times(&bracket);
        let den = s2.minus(&z2).powi(5).times(&one.minus(&s2).powi(2));
        let dw = s2.minus(&z2).divided(&z2.times(&z2));
        assert_eq!(eval_amp1(&amp, &pts, &z), num.divided(&den).times(&dw));
    }
}

#[test]
fn gaussian_genus_one_and_two_moments() {
    let mut e = TrEngine::new(gaussian_curve(), 3).unwrap();
    let pts = e.context().curve.branch_points.clone();
    // -Res_{z=∞} x^l ω_{g,1}: genus-g part of <Tr M^l>
    let count = |amp: &Amplitude<BigRational>, l: i64| -> BigRational {
        let f: Vec<BigRational> = (0..=l).map(|e| maprec_core::extract::xhat_pow_coeff(l as usize, e)).collect();
        let mut s = BigRational::zero();
        for (idx, c) in &amp.entries {
            s += c * maprec_core::extract::res_inf_pole(&f, &pts[idx[0].0 as usize], idx[0].1 as usize);
        }
        -s
    };
    let a1 = e.amplitude(1, 1).clone();
    let got: Vec<BigRational> = [4, 6, 8, 10].iter().map(|&l| count(&a1, l)).collect();
    assert_eq!(got, [1, 10, 70, 420].map(BigRational::from_i64));
    let a2 = e.amplitude(2, 1).clone();
    assert_eq!(count(&a2, 8), BigRational::from_i64(21));
    assert_eq!(count(&a2, 10), BigRational::from_i64(483));
}

#[test]
fn degenerate_points_are_rejected() {
    let cur = ordinary_reduced();
    assert_eq!(deck_jet(&cur, &q(2), 4).unwrap_err(), maprec_core::tr::TrError::NotSimple);
    // y = x has dy = dx, which vanishes at the branch points
    let flat = Curve { x: cur.x.clone(), y: cur.x.clone(), branch_points: cur.branch_points.clone() };
    assert_eq!(kernel_jet(&flat, &q(1), 4).err(), Some(maprec_core::tr::TrError::DegenerateKernel));
}
