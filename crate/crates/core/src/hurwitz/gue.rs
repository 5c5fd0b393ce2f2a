use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{CharTable, HurwitzError, HurwitzKind, NPoly, Partition, MAX_PAIRING_SIZE};
use crate::exactnum::{BigRational, Field, RationalFunc, ZPoly};
use crate::oracle::for_each_involution;

/// Calls `f(vertices, connected)` for every Wick pairing of the half-edges of
/// `∏ Tr M^{μ_i}`.
fn for_each_pairing(mu: &Partition, mut f: impl FnMut(usize, bool)) -> Result<(), HurwitzError> {
    let h = mu.size();
    if h > MAX_PAIRING_SIZE {
        return Err(HurwitzError::TooLarge { what: "|mu|", value: h, cap: MAX_PAIRING_SIZE });
    }
    let mut next = vec![0; h];
    let mut trace = vec![0; h];
    let mut start = 0;
    for (i, &p) in mu.parts().iter().enumerate() {
        for j in 0..p {
            next[start + j] = start + (j + 1) % p;
            trace[start + j] = i;
        }
        start += p;
    }
    if h % 2 == 1 {
        return Ok(());
    }
    for_each_involution(h, None, |alpha| {
        let mut seen = vec![false; h];
        let mut vertices = 0;
        for s in 0..h {
            if seen[s] {
                continue;
            }
            vertices += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = next[alpha[x]];
            }
        }
        // union of traces joined by the pairing
        let mut root: Vec<usize> = (0..mu.len()).collect();
        fn find(r: &mut [usize], mut x: usize) -> usize {
            while r[x] != x {
                r[x] = r[r[x]];
                x = r[x];
            }
            x
        }
        let mut comps = mu.len();
        for x in 0..h {
            let (a, b) = (find(&mut root, trace[x]), find(&mut root, trace[alpha[x]]));
            if a != b {
                root[a] = b;
                comps -= 1;
            }
        }
        f(vertices, comps == 1);
    });
    Ok(())
}

/// `⟨∏_i Tr M^{μ_i}⟩` for the GUE normalized by `⟨M_ab M_cd⟩ = δ_ad δ_bc / N`.
pub fn gue_moment(mu: &Partition) -> Result<NPoly, HurwitzError> {
    if mu.is_empty() {
        return Ok(NPoly::one());
    }
    let half = (mu.size() / 2) as i64;
    let mut counts: Vec<u64> = vec![0; mu.size() + 1];
    for_each_pairing(mu, |v, _| counts[v] += 1)?;
    Ok(collect(&counts, half))
}

/// `⟨∏_i (1/N) Tr M^{μ_i}⟩`.
pub fn gue_normalized_moment(mu: &Partition) -> Result<NPoly, HurwitzError> {
    Ok(gue_moment(mu)?.shift(-(mu.len() as i64)))
}

/// Joint cumulant `κ_n(Tr M^{μ_1}, ..., Tr M^{μ_n})`: the connected pairings.
pub fn gue_cumulant(mu: &Partition) -> Result<NPoly, HurwitzError> {
    if mu.is_empty() {
        return Err(HurwitzError::Domain("cumulant of no traces".into()));
    }
    let half = (mu.size() / 2) as i64;
    let mut counts: Vec<u64> = vec![0; mu.size() + 1];
    for_each_pairing(mu, |v, connected| {
        if connected {
            counts[v] += 1
        }
    })?;
    Ok(collect(&counts, half))
}

fn collect(counts: &[u64], half: i64) -> NPoly {
    let mut out = NPoly::zero();
    for (v, &c) in counts.iter().enumerate() {
        out = &out + &NPoly::monomial(BigRational::from_integer(c.into()), v as i64 - half);
    }
    out
}

/// `N^{|ν|/2} Σ_k N^{-k} [E_k]_{ν,(2,...,2)}`.
fn orbifold_series(table: &mut CharTable, nu: &Partition) -> Result<NPoly, HurwitzError> {
    let l = nu.size();
    if l % 2 == 1 {
        return Ok(NPoly::zero());
    }
    let pairs = Partition::uniform(2, l / 2);
    let mut out = NPoly::zero();
    for k in 0..l.max(1) {
        let e = table.double_hurwitz(HurwitzKind::Strict, k, nu, &pairs)?;
        out = &out + &NPoly::monomial(e, (l / 2) as i64 - k as i64);
    }
    Ok(out)
}

/// Connected 2-orbifold strictly monotone Hurwitz number `[E^{∘,g}]_{μ,(2,...,2)}`.
///
/// The disconnected numbers are the coefficients of `exp` of the connected
/// ones in the monomials `p̃_μ`; the logarithm is taken over the
/// sub-multisets of `μ`.
pub fn connected_2orbifold(g: usize, mu: &Partition) -> Result<BigRational, HurwitzError> {
    if mu.is_empty() || mu.size() % 2 == 1 {
        return Err(HurwitzError::Domain("|mu| must be positive and even".into()));
    }
    let mult = mu.multiplicities();
    let radix: Vec<usize> = mult.iter().map(|&(_, m)| m + 1).collect();
    let total: usize = radix.iter().product();
    let digits = |mut i: usize| -> Vec<usize> {
        radix
            .iter()
            .map(|&r| {
                let d = i % r;
                i /= r;
                d
            })
            .collect()
    };
    let index = |d: &[usize]| d.iter().zip(&radix).rev().fold(0, |acc, (&x, &r)| acc * r + x);
    let mut table = CharTable::new();
    let mut disc = vec![NPoly::zero(); total];
    for (i, slot) in disc.iter_mut().enumerate().skip(1) {
        let d = digits(i);
        let mut parts = Vec::new();
        for (&(p, _), &c) in mult.iter().zip(&d) {
            parts.extend(core::iter::repeat(p).take(c));
        }
        *slot = orbifold_series(&mut table, &Partition::new(&parts))?;
    }
    let mul = |a: &[NPoly], b: &[NPoly]| -> Vec<NPoly> {
        let mut out = vec![NPoly::zero(); total];
        for i in 0..total {
            if a[i].is_zero() {
                continue;
            }
            let di = digits(i);
            for j in 0..total {
                if b[j].is_zero() {
                    continue;
                }
                let dj = digits(j);
                let sum: Vec<usize> = di.iter().zip(&dj).map(|(x, y)| x + y).collect();
                if sum.iter().zip(&radix).all(|(s, r)| s < r) {
                    let k = index(&sum);
                    out[k] = &out[k] + &(&a[i] * &b[j]);
                }
            }
        }
        out
    };
    let mut log = vec![NPoly::zero(); total];
    let mut power = disc.clone();
    for j in 1..=mu.len() {
        let c = BigRational::new(BigInt::from(if j % 2 == 1 { 1 } else { -1 }), BigInt::from(j));
        for (acc, p) in log.iter_mut().zip(&power) {
            *acc = &*acc + &p.scale(&c);
        }
        power = mul(&power, &disc);
    }
    let e = 2 - 2 * g as i64 - mu.len() as i64;
    Ok(log[total - 1].coeff(e))
}

impl CharTable {
    /// `G̃_{N,L}(C, β) = (1/L!) Σ_λ |C| χ_λ(C) χ_λ(β) / ∏_{□ ∈ λ} (N + c(□))`.
    pub fn weingarten(&mut self, class: &Partition, beta: &Partition) -> Result<RationalFunc, HurwitzError> {
        if class.size() != beta.size() {
            return Err(HurwitzError::SizeMismatch { left: class.size(), right: beta.size() });
        }
        let mut acc = RationalFunc::zero();
        for lambda in Partition::all(class.size()) {
            let num = self.character(&lambda, class)? * self.character(&lambda, beta)?;
            if num.is_zero() {
                continue;
            }
            let den = lambda
                .contents()
                .into_iter()
                .fold(ZPoly::one(), |p, c| p.mul(&ZPoly::from_i64s(&[c, 1])));
            acc = acc.plus(&RationalFunc::from_zpolys(ZPoly::constant(num), den));
        }
        Ok(acc.scaled(&BigRational::new(BigInt::one(), class.aut())))
    }
}

pub fn weingarten(class: &Partition, beta: &Partition) -> Result<RationalFunc, HurwitzError> {
    CharTable::new().weingarten(class, beta)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckForm {
    /// `⟨∏ P_γ⟩ = Σ_μ G̃(C_μ, φ^∂) ⟨p_μ⟩` as rational functions of `N`.
    Wein,
    /// Both transition formulas, through strict and weak Hurwitz numbers.
    Transi,
}

/// `⟨P_λ⟩` for the GUE: `N^{-ℓ(λ)}` when every part is 2, else 0.
fn gue_simple_moment(lambda: &Partition) -> NPoly {
    if lambda.parts().iter().all(|&p| p == 2) {
        NPoly::monomial(BigRational::one(), -(lambda.len() as i64))
    } else {
        NPoly::zero()
    }
}

/// Checks the moment transition between `⟨P_λ⟩` and `⟨p_μ⟩` for the GUE.
pub fn weingarten_transition_check(lambda: &Partition, form: CheckForm) -> Result<bool, HurwitzError> {
    let l = lambda.size();
    let mut table = CharTable::new();
    let mut moments = Vec::new();
    for mu in Partition::all(l) {
        let m = gue_moment(&mu)?;
        moments.push((mu, m));
    }
    let lhs = gue_simple_moment(lambda);
    match form {
        CheckForm::Wein => {
            let mut rhs = RationalFunc::zero();
            for (mu, m) in &moments {
                rhs = rhs.plus(&table.weingarten(mu, lambda)?.times(&m.to_ratfunc()));
            }
            Ok(rhs == lhs.to_ratfunc())
        }
        CheckForm::Transi => {
            // ⟨p_λ⟩/|Aut λ| = N^{|λ|/2} Σ_k N^{-k} [E_k]_{λ,(2,...,2)}
            let moment = &moments.iter().find(|(mu, _)| mu == lambda).unwrap().1;
            let strict_ok = moment.scale(&BigRational::new(BigInt::one(), lambda.aut()))
                == orbifold_series(&mut table, lambda)?;
            // ⟨P_λ⟩/|Aut λ| = Σ_μ N^{-|μ|} Σ_k (-N)^{-k} [H_k]_{λ,μ} ⟨p_μ⟩, exact down to N^{-K}
            let cut = (l + 4) as i64;
            let mut rhs = NPoly::zero();
            for (mu, m) in &moments {
                let mut series = NPoly::zero();
                for k in 0..=cut as usize {
                    let h = table.double_hurwitz(HurwitzKind::Weak, k, lambda, mu)?;
                    let h = if k % 2 == 1 { -h } else { h };
                    series = &series + &NPoly::monomial(h, -(l as i64) - k as i64);
                }
                rhs = &rhs + &(&series * m);
            }
            let lhs = lhs.scale(&BigRational::new(BigInt::one(), lambda.aut()));
            Ok(strict_ok && rhs.truncate_below(-cut) == lhs.truncate_below(-cut))
        }
    }
}

/// The strict and weak transition matrices are inverse to each other:
/// `Σ_λ S_{μλ} |Aut λ| R_{λμ'} = δ_{μμ'} / |Aut μ'|`, where
/// `S_{μλ} = N^{|λ|} Σ_k N^{-k}[E_k]_{μ,λ}` and
/// `R_{λμ} = N^{-|μ|} Σ_k (-N)^{-k}[H_k]_{λ,μ}`, compared down to `N^{-order}`.
pub fn transition_inversion_check(size: usize, order: usize) -> Result<bool, HurwitzError> {
    let mut table = CharTable::new();
    let parts = Partition::all(size);
    let l = size as i64;
    let mut s = Vec::new();
    let mut r = Vec::new();
    for a in &parts {
        let mut srow = Vec::new();
        let mut rrow = Vec::new();
        for b in &parts {
            let mut sp = NPoly::zero();
            for k in 0..=size {
                sp = &sp + &NPoly::monomial(table.double_hurwitz(HurwitzKind::Strict, k, a, b)?, l - k as i64);
            }
            let mut rp = NPoly::zero();
            for k in 0..=order {
                let h = table.double_hurwitz(HurwitzKind::Weak, k, a, b)?;
                let h = if k % 2 == 1 { -h } else { h };
                rp = &rp + &NPoly::monomial(h, -l - k as i64);
            }
            srow.push(sp);
            rrow.push(rp);
        }
        s.push(srow);
        r.push(rrow);
    }
    let cut = -(order as i64);
    for i in 0..parts.len() {
        for j in 0..parts.len() {
            let mut acc = NPoly::zero();
            for (m, lambda) in parts.iter().enumerate() {
                let z = BigRational::from_integer(lambda.aut());
                acc = &acc + &(&s[i][m] * &r[m][j]).scale(&z);
            }
            let expected = if i == j {
                NPoly::constant(BigRational::new(BigInt::one(), parts[j].aut()))
            } else {
                NPoly::zero()
            };
            if acc.truncate_below(cut) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
