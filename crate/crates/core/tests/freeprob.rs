use std::collections::BTreeMap;

use maprec_core::exactnum::{BigRational, Field, RationalFunc};
use maprec_core::extract::{bernardi_fusy, Extractor};
use maprec_core::freeprob::*;
use maprec_core::hurwitz::Partition;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn catalan(m: usize) -> BigInt {
    let mut c = BigInt::from(1);
    for i in 0..m {
        c = c * BigInt::from(2 * (2 * i + 1)) / BigInt::from(i + 2);
    }
    c
}

fn is_zero(s: &[BigRational]) -> bool {
    s.iter().all(|c| c.is_zero())
}

/// Block types of non-crossing set partitions, from restricted growth strings
/// and a direct a < b < c < d crossing test.
fn nc_block_types(n: usize) -> BTreeMap<Partition, u64> {
    fn go(i: usize, n: usize, rgs: &mut Vec<usize>, out: &mut BTreeMap<Partition, u64>) {
        if i == n {
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        for d in c + 1..n {
                            if rgs[a] == rgs[c] && rgs[b] == rgs[d] && rgs[a] != rgs[b] {
                                return;
                            }
                        }
                    }
                }
            }
            let k = rgs.iter().max().map_or(0, |m| m + 1);
            let mut sizes = vec![0; k];
            for &x in rgs.iter() {
                sizes[x] += 1;
            }
            *out.entry(Partition::new(&sizes)).or_insert(0) += 1;
            return;
        }
        let next = rgs.iter().max().map_or(0, |m| m + 1);
        for b in 0..=next {
            rgs.push(b);
            go(i + 1, n, rgs, out);
            rgs.pop();
        }
    }
    let mut out = BTreeMap::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

#[test]
fn kreweras_counts() {
    assert_eq!(kreweras(&Partition::new(&[1, 1, 1])), BigInt::from(1));
    assert_eq!(kreweras(&Partition::new(&[2, 1])), BigInt::from(3));
    for n in 1..=10 {
        let types = nc_block_types(n);
        let mut total = BigInt::zero();
        for lambda in Partition::all(n) {
            let c = kreweras(&lambda);
            assert_eq!(c, BigInt::from(*types.get(&lambda).unwrap_or(&0)), "{}", lambda);
            total += c;
        }
        assert_eq!(total, catalan(n));
    }
}

#[test]
fn nc_partition_enumeration() {
    for n in 0..=8 {
        let all = nc_partitions(n);
        assert_eq!(BigInt::from(all.len()), catalan(n));
        let mut types = BTreeMap::new();
        for p in &all {
            assert_eq!(p.size(), n);
            *types.entry(p.block_type()).or_insert(0u64) += 1;
        }
        if n > 0 {
            assert_eq!(types, nc_block_types(n));
        }
    }
    assert!(NCPartition::new(4, vec![vec![0, 2], vec![1, 3]]).is_none());
    assert!(NCPartition::new(4, vec![vec![0, 3], vec![1, 2]]).is_some());
    assert!(NCPartition::new(3, vec![vec![0, 1]]).is_none());
    assert!(NCPartition::new(2, vec![vec![0, 1], vec![1]]).is_none());
}

#[test]
fn semicircle_moments() {
    let mut k = vec![vec![r(0, 1)]; 10];
    k[1] = vec![r(1, 1)];
    let phi = moment_cumulant(Direction::ToMoments, &k);
    for (i, m) in phi.iter().enumerate() {
        let n = i + 1;
        let expected = if n % 2 == 0 { BigRational::from_integer(catalan(n / 2)) } else { r(0, 1) };
        assert_eq!(m[0], expected, "n = {}", n);
    }
    assert_eq!(moment_cumulant(Direction::ToCumulants, &phi), k);
}

#[test]
fn ordinary_disks_from_fully_simple() {
    let f = ordinary_disks(8, 8).unwrap();
    let h = fully_simple_disks(8, 8).unwrap();
    for l in 1..=8 {
        assert_eq!(ordinary_from_fully_simple(&h, l), f[l - 1], "l = {}", l);
    }
    let tail: Vec<TSeries> = f.iter().map(|s| vec![s[0].clone()]).collect();
    let hh: Vec<TSeries> = h.iter().map(|s| vec![s[0].clone()]).collect();
    assert_eq!(moment_cumulant(Direction::ToMoments, &hh), tail);
}

#[test]
fn inversion() {
    let f = ordinary_disks(8, 0).unwrap();
    let h = fully_simple_disks(9, 0).unwrap();
    for (i, s) in f.iter().enumerate() {
        let l = i + 1;
        let c = if l % 2 == 0 { BigRational::from_integer(catalan(l / 2)) } else { r(0, 1) };
        assert_eq!(s[0], c);
    }
    for (i, s) in h.iter().enumerate() {
        assert_eq!(s[0], r((i == 1) as i64, 1));
    }
    assert_eq!(check_inversion(0, 8), Ok(true));
    assert_eq!(check_inversion(8, 8), Ok(true));

    let f = ordinary_disks(6, 4).unwrap();
    let h = fully_simple_disks(7, 4).unwrap();
    let without = inversion_residual(&f, &h, 6, false);
    assert!(!is_zero(&without[0]));
    assert!(inversion_residual(&f, &h, 6, true).iter().all(|s| is_zero(s)));
}

#[test]
fn cylinder_identities() {
    let res = cylinder_residuals(0, 6).unwrap();
    assert_eq!((res.ordinary_fully_simple, res.ordinary_simple, res.simple_fully_simple), (0, 0, 0));
    let res = cylinder_residuals(8, 10).unwrap();
    assert_eq!((res.ordinary_fully_simple, res.ordinary_simple, res.simple_fully_simple), (0, 0, 0));
    assert!(res.without_shift > 0);
    assert_eq!(check_cylinder(8, 10), Ok(true));
}

#[test]
fn fully_simple_tutte() {
    for l in 1..=6 {
        assert!(is_zero(&tutte_fully_simple_residual(l, 8).unwrap()), "l = {}", l);
    }
    let f = ordinary_disks(6, 8).unwrap();
    let weights = quadrangulation_weights(8);
    for l in 1..=6 {
        let h = fully_simple_disks(l + 3, 8).unwrap();
        let printed = tutte_fully_simple_residual_with(l, &h, &weights, false);
        let expected: TSeries = if l == 1 {
            let mut e = vec![r(0, 1); 9];
            e[0] = r(-1, 1);
            e
        } else {
            f[l - 2].iter().map(|c| c * r(-2, 1)).collect()
        };
        assert_eq!(printed, expected, "l = {}", l);
    }
    let mut h = fully_simple_disks(6, 8).unwrap();
    h[1][0] += r(1, 1);
    assert!(!is_zero(&tutte_fully_simple_residual_with(3, &h, &weights, true)));
}

/// Residue of `f` at the rational point `a`.
fn residue_at(f: &RationalFunc, a: &BigRational) -> BigRational {
    let shift = RationalFunc::x().minus(&RationalFunc::from_rational_coeffs(std::slice::from_ref(a)));
    let mut g = f.clone();
    let mut order = 0usize;
    while g.eval(a).is_none() {
        g = g.times(&shift);
        order += 1;
    }
    if order == 0 {
        return r(0, 1);
    }
    let mut fact = BigRational::from_integer(1.into());
    for i in 1..order {
        g = g.derivative();
        fact *= r(i as i64, 1);
    }
    g.eval(a).unwrap() / fact
}

#[test]
fn pants_identity() {
    assert!(check_pants());
    let mut ext = Extractor::new(1);
    let (s, z2, z3) = (r(2, 3), r(5, 1), r(-1, 4));
    let sides = pants_sides(&mut ext, &s, &z2, &z3);
    assert!(sides.holds());
    assert_ne!(sides.ordinary.minus(&sides.exchanged), sides.rhs);
    assert_ne!(sides.ordinary, sides.rhs);
    let poles = [r(0, 1), r(1, 1), r(-1, 1), s.clone(), -s.clone(), z2, z3];
    for f in [&sides.ordinary, &sides.exchanged, &sides.rhs] {
        let mut check = f.clone();
        for p in &poles {
            assert!(residue_at(f, p).is_zero());
            while check.eval(p).is_none() {
                check = check.times(&RationalFunc::x().minus(&RationalFunc::from_rational_coeffs(std::slice::from_ref(p))));
            }
        }
        assert!(check.is_polynomial());
    }
    let sides = pants_sides_in_s(&mut ext, [&r(3, 1), &r(-2, 5), &r(7, 2)]);
    assert!(sides.holds());
    let corollary = ext.fully_simple_coeffs(0, &[2, 2, 2], 8).unwrap();
    for q in 0..=8 {
        assert_eq!(corollary.get(q), &bernardi_fusy(q, &[2, 2, 2]).unwrap(), "Q = {}", q);
    }
}

proptest! {
    #[test]
    fn moment_cumulant_round_trip(k in proptest::collection::vec((-20i64..20, 1i64..6), 1..=8)) {
        let k: Vec<TSeries> = k.into_iter().map(|(n, d)| vec![r(n, d)]).collect();
        let phi = moment_cumulant(Direction::ToMoments, &k);
        prop_assert_eq!(moment_cumulant(Direction::ToCumulants, &phi), k);
    }
}
