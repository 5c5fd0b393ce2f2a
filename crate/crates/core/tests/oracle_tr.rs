use maprec_core::exactnum::BigRational;
use maprec_core::extract::{cylinder_coeffs, disk_coeffs, Extractor};
use maprec_core::oracle::{census, Family};

fn big(n: u64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Oracle counts against TR-side tables, for every boundary layout with at most `hmax` half-edges.
#[test]
fn oracle_matches_tr_up_to_twelve_half_edges() {
    let hmax = 12;
    let mut ex = Extractor::new(2);
    let mut checked = 0;
    let mut layouts: Vec<Vec<usize>> = (1..=hmax).map(|l| vec![l]).collect();
    for l1 in 1..hmax {
        for l2 in 1..=hmax - l1 {
            layouts.push(vec![l1, l2]);
        }
    }
    for lengths in layouts {
        let total: usize = lengths.iter().sum();
        if total % 2 == 1 {
            continue;
        }
        let q_max = (hmax - total) / 4;
        let tabs = |g: usize, ex: &mut Extractor| -> Vec<(Family, Vec<BigRational>)> {
            let mut v = Vec::new();
            match (g, lengths.len()) {
                (0, 1) => {
                    v.push((Family::Ordinary, disk_coeffs(Family::Ordinary, lengths[0], q_max).unwrap().coefficients));
                    v.push((Family::Simple, disk_coeffs(Family::Simple, lengths[0], q_max).unwrap().coefficients));
                    v.push((Family::FullySimple, ex.fully_simple_coeffs(0, &lengths, q_max).unwrap().coefficients));
                }
                (0, 2) => {
                    for f in [Family::Ordinary, Family::Mixed, Family::Simple, Family::FullySimple] {
                        v.push((f, cylinder_coeffs(f, lengths[0], lengths[1], q_max).unwrap().coefficients));
                    }
                }
                _ => {
                    v.push((Family::Ordinary, ex.ordinary_coeffs(g, &lengths, q_max).unwrap().coefficients));
                    v.push((Family::FullySimple, ex.fully_simple_coeffs(g, &lengths, q_max).unwrap().coefficients));
                }
            }
            v
        };
        for g in 0..=1 {
            let t = tabs(g, &mut ex);
            for q in 0..=q_max {
                let c = census(&lengths, &vec![4; q], 20).unwrap();
                for (f, coeffs) in &t {
                    assert_eq!(big(c.count(g, *f)), coeffs[q], "g = {}, {:?}, Q = {}, {:?}", g, lengths, q, f);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100);
}
