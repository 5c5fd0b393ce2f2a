//! Non-crossing partitions, free cumulants and the identities relating
//! ordinary and fully simple generating series.

mod cylinder;
mod pants;
mod tri;

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::BigRational;
use crate::extract::{disk_coeffs, ExtractError, Family};
use crate::hurwitz::Partition;

pub use cylinder::{check_cylinder, cylinder_residuals, CylinderResiduals};
pub use pants::{check_pants, pants_sides, pants_sides_in_s, PantsSides};

/// Coefficients of `t^0, ..., t^q`.
pub type TSeries = Vec<BigRational>;

fn ts_zero(q: usize) -> TSeries {
    vec![BigRational::zero(); q + 1]
}

fn ts_one(q: usize) -> TSeries {
    let mut s = ts_zero(q);
    s[0] = BigRational::one();
    s
}

fn ts_add(a: &TSeries, b: &TSeries) -> TSeries {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn ts_scale(a: &TSeries, k: &BigRational) -> TSeries {
    a.iter().map(|x| x * k).collect()
}

fn ts_mul(a: &TSeries, b: &TSeries) -> TSeries {
    let q = a.len() - 1;
    let mut out = ts_zero(q);
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(q + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Partition of `{0, ..., n-1}` into blocks, each sorted, ordered by least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NCPartition {
    blocks: Vec<Vec<usize>>,
}

fn crossing(a: &[usize], b: &[usize]) -> bool {
    // a1 < b1 < a2 < b2 with a1, a2 in one block and b1, b2 in the other
    let inside = |x: usize, lo: usize, hi: usize| lo < x && x < hi;
    for w in 0..a.len() {
        for v in w + 1..a.len() {
            let (lo, hi) = (a[w], a[v]);
            let ins = b.iter().filter(|&&x| inside(x, lo, hi)).count();
            if ins > 0 && ins < b.len() {
                return true;
            }
        }
    }
    false
}

impl NCPartition {
    /// `None` unless the blocks partition `{0, ..., n-1}` without crossings.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Option<Self> {
        let mut seen = vec![false; n];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        for b in &blocks {
            if b.is_empty() {
                return None;
            }
            for &x in b {
                if x >= n || seen[x] {
                    return None;
                }
                seen[x] = true;
            }
        }
        if seen.contains(&false) {
            return None;
        }
        blocks.sort();
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                if crossing(&blocks[i], &blocks[j]) {
                    return None;
                }
            }
        }
        Some(NCPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    /// Block sizes as an integer partition.
    pub fn block_type(&self) -> Partition {
        let sizes: Vec<usize> = self.blocks.iter().map(|b| b.len()).collect();
        Partition::new(&sizes)
    }
}

/// All non-crossing partitions of `{0, ..., n-1}`, filtered from all set partitions.
pub fn nc_partitions(n: usize) -> Vec<NCPartition> {
    fn go(i: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<NCPartition>) {
        if i == n {
            if let Some(p) = NCPartition::new(n, cur.clone()) {
                out.push(p);
            }
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(i);
            go(i + 1, n, cur, out);
            cur[b].pop();
        }
        cur.push(vec![i]);
        go(i + 1, n, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, i| a * BigInt::from(i))
}

/// `M(λ) = ∏ m_i(λ)!`.
fn multiplicity_factor(lambda: &Partition) -> BigInt {
    lambda.multiplicities().into_iter().fold(BigInt::one(), |a, (_, m)| a * factorial(m))
}

/// Number of non-crossing partitions with block sizes `λ`:
/// `c_λ = |λ|! / (M(λ) (|λ| - ℓ(λ) + 1)!)`. The empty partition gives 1.
pub fn kreweras(lambda: &Partition) -> BigInt {
    let n = lambda.size();
    let k = lambda.len();
    factorial(n) / (multiplicity_factor(lambda) * factorial(n + 1 - k))
}

fn product_over_parts(values: &[TSeries], lambda: &Partition, q: usize) -> TSeries {
    lambda.parts().iter().fold(ts_one(q), |acc, &p| ts_mul(&acc, &values[p - 1]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Free cumulants to moments.
    ToMoments,
    /// Moments to free cumulants.
    ToCumulants,
}

/// The non-crossing moment-cumulant relation `φ_n = Σ_{π ∈ NC(n)} ∏_{B ∈ π} k_{|B|}`.
/// `values[i]` holds the order `i + 1` term.
pub fn moment_cumulant(direction: Direction, values: &[TSeries]) -> Vec<TSeries> {
    let n_max = values.len();
    if n_max == 0 {
        return Vec::new();
    }
    let q = values[0].len() - 1;
    match direction {
        Direction::ToMoments => (1..=n_max)
            .map(|n| {
                let mut acc = ts_zero(q);
                for lambda in Partition::all(n) {
                    let c = BigRational::from_integer(kreweras(&lambda));
                    acc = ts_add(&acc, &ts_scale(&product_over_parts(values, &lambda, q), &c));
                }
                acc
            })
            .collect(),
        Direction::ToCumulants => {
            let mut k: Vec<TSeries> = Vec::new();
            for n in 1..=n_max {
                let mut acc = values[n - 1].clone();
                for lambda in Partition::all(n).into_iter().skip(1) {
                    let c = BigRational::from_integer(-kreweras(&lambda));
                    acc = ts_add(&acc, &ts_scale(&product_over_parts(&k, &lambda, q), &c));
                }
                k.push(acc);
            }
            k
        }
    }
}

/// `F_l = Σ_k l!/(l-k+1)! · 𝓗_l((0,1)^k)/k!`, where `𝓗_l((0,1)^k)` sums
/// `∏ H_{l_i}` over compositions of `l` into `k` parts. `h[i]` is `H_{i+1}`.
pub fn ordinary_from_fully_simple(h: &[TSeries], l: usize) -> TSeries {
    let q = h[0].len() - 1;
    // comp[b] = 𝓗_b((0,1)^k) for the current k
    let mut comp: Vec<TSeries> = vec![ts_zero(q); l + 1];
    comp[0] = ts_one(q);
    let mut out = ts_zero(q);
    for k in 1..=l {
        let mut next = vec![ts_zero(q); l + 1];
        for b in 1..=l {
            for a in 1..=b {
                next[b] = ts_add(&next[b], &ts_mul(&h[a - 1], &comp[b - a]));
            }
        }
        comp = next;
        let w = BigRational::new(factorial(l), factorial(l + 1 - k) * factorial(k));
        out = ts_add(&out, &ts_scale(&comp[l], &w));
    }
    out
}

/// Sub-multisets of a partition, each once.
fn sub_multisets(lambda: &Partition) -> Vec<(Partition, Partition)> {
    let mult = lambda.multiplicities();
    let mut out = Vec::new();
    let mut choice = vec![0usize; mult.len()];
    loop {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (&(p, m), &c) in mult.iter().zip(&choice) {
            a.extend(core::iter::repeat(p).take(c));
            b.extend(core::iter::repeat(p).take(m - c));
        }
        out.push((Partition::new(&a), Partition::new(&b)));
        let mut i = 0;
        loop {
            if i == mult.len() {
                return out;
            }
            if choice[i] < mult[i].1 {
                choice[i] += 1;
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Left-hand side of the fully simple Tutte equation, with face weights
/// `weights[j] = p_j^{(0)}` (index 0 unused) and `h[i] = H_{i+1}`.
///
/// With `empty_blocks` the splittings `λ = μ^{(1)} ⊔ μ^{(2)}` may have an
/// empty side (weight `c_∅ = 1`), which is what Tutte's equation for
/// ordinary disks with `F_0 = 1` requires. Without it, only splittings with
/// both sides nonempty are kept, as in the printed equation.
pub fn tutte_fully_simple_residual_with(l: usize, h: &[TSeries], weights: &[TSeries], empty_blocks: bool) -> TSeries {
    assert!(l >= 1);
    let q = h[0].len() - 1;
    let mut acc = ts_zero(q);
    for lambda in Partition::all(l - 1) {
        let mut split = BigInt::zero();
        for (a, b) in sub_multisets(&lambda) {
            if !empty_blocks && (a.is_empty() || b.is_empty()) {
                continue;
            }
            split += kreweras(&a) * kreweras(&b);
        }
        if !split.is_zero() {
            let term = product_over_parts(h, &lambda, q);
            acc = ts_add(&acc, &ts_scale(&term, &BigRational::from_integer(split)));
        }
    }
    for (j, p) in weights.iter().enumerate().skip(1) {
        if p.iter().all(|c| c.is_zero()) {
            continue;
        }
        let n = l - 1 + j;
        let mut f = ts_zero(q);
        for lambda in Partition::all(n) {
            let c = BigRational::new(factorial(n), multiplicity_factor(&lambda) * factorial(n + 1 - lambda.len()));
            f = ts_add(&f, &ts_scale(&product_over_parts(h, &lambda, q), &c));
        }
        acc = ts_add(&acc, &ts_mul(p, &f));
    }
    acc
}

/// Quadrangulation weights `p_1 = 0`, `p_2 = -1`, `p_4 = t`.
pub fn quadrangulation_weights(q: usize) -> Vec<TSeries> {
    let mut w = vec![ts_zero(q); 5];
    w[2][0] = BigRational::from_integer((-1).into());
    if q >= 1 {
        w[4][1] = BigRational::one();
    }
    w
}

/// Fully simple disk series `H_1, ..., H_n` from the exchanged curve.
pub fn fully_simple_disks(n: usize, q: usize) -> Result<Vec<TSeries>, ExtractError> {
    (1..=n).map(|l| Ok(disk_coeffs(Family::FullySimple, l, q)?.coefficients)).collect()
}

/// Ordinary disk series `F_1, ..., F_n`.
pub fn ordinary_disks(n: usize, q: usize) -> Result<Vec<TSeries>, ExtractError> {
    (1..=n).map(|l| Ok(disk_coeffs(Family::Ordinary, l, q)?.coefficients)).collect()
}

/// The fully simple Tutte equation evaluated on the quadrangulation tables; zero when it holds.
pub fn tutte_fully_simple_residual(l: usize, q_max: usize) -> Result<TSeries, ExtractError> {
    let h = fully_simple_disks(l + 3, q_max)?;
    Ok(tutte_fully_simple_residual_with(l, &h, &quadrangulation_weights(q_max), true))
}

/// `u X(W(x)) - 1` in `u = 1/x`, up to `u^{l_max}`, where `W = u + Σ F_l u^{l+1}`
/// and `X(w) = 1/w + Σ H_l w^{l-1}`. Without `degenerate` the `1/x` and `1/w`
/// terms are dropped.
pub fn inversion_residual(f: &[TSeries], h: &[TSeries], l_max: usize, degenerate: bool) -> Vec<TSeries> {
    use tri::Tri;
    let q = f[0].len() - 1;
    let mut w = Tri::zero(l_max + 1, 0, q);
    if degenerate {
        w.set(1, 0, 0, BigRational::one());
    }
    for l in 1..=l_max {
        for (k, c) in f[l - 1].iter().enumerate() {
            w.set(l + 1, 0, k, c.clone());
        }
    }
    let mut out = Tri::zero(l_max + 1, 0, q);
    if degenerate {
        // u/W = 1/(W/u)
        let mut wu = Tri::zero(l_max + 1, 0, q);
        for i in 1..=l_max + 1 {
            for k in 0..=q {
                wu.set(i - 1, 0, k, w.get(i, 0, k).clone());
            }
        }
        out = out.add(&wu.inverse());
    }
    // Σ H_l u W^{l-1}
    let mut u = Tri::zero(l_max + 1, 0, q);
    u.set(1, 0, 0, BigRational::one());
    let mut wp = Tri::one(l_max + 1, 0, q);
    for l in 1..=l_max + 1 {
        if l - 1 < h.len() {
            out = out.add(&u.mul(&wp).scale_series(&h[l - 1]));
        }
        wp = wp.mul(&w);
    }
    let mut one = Tri::one(l_max + 1, 0, q);
    one = one.scale(&BigRational::from_integer((-1).into()));
    out = out.add(&one);
    (0..=l_max).map(|i| (0..=q).map(|k| out.get(i, 0, k).clone()).collect()).collect()
}

/// `X(W(x)) = x` on the quadrangulation tables, up to `x^{-l_max}` and `t^{q_max}`.
pub fn check_inversion(q_max: usize, l_max: usize) -> Result<bool, ExtractError> {
    let f = ordinary_disks(l_max, q_max)?;
    let h = fully_simple_disks(l_max + 1, q_max)?;
    let r = inversion_residual(&f, &h, l_max, true);
    Ok(r.iter().all(|s| s.iter().all(|c| c.is_zero())))
}
