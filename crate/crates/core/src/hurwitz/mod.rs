//! Symmetric group characters, double monotone Hurwitz numbers, Weingarten
//! functions and GUE moments.

mod chars;
mod gue;
mod npoly;
mod partition;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::BigRational;

pub use chars::CharTable;
pub use gue::{
    connected_2orbifold, gue_cumulant, gue_moment, gue_normalized_moment, transition_inversion_check,
    weingarten, weingarten_transition_check, CheckForm,
};
pub use npoly::NPoly;
pub use partition::Partition;

pub const MAX_PATH_SIZE: usize = 8;
pub const MAX_PATH_STEPS: usize = 6;
pub const MAX_PAIRING_SIZE: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HurwitzError {
    SizeMismatch { left: usize, right: usize },
    TooLarge { what: &'static str, value: usize, cap: usize },
    Domain(String),
}

impl fmt::Display for HurwitzError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HurwitzError::SizeMismatch { left, right } => {
                write!(f, "partitions of different sizes {} and {}", left, right)
            }
            HurwitzError::TooLarge { what, value, cap } => write!(f, "{} = {} exceeds the cap {}", what, value, cap),
            HurwitzError::Domain(s) => write!(f, "{}", s),
        }
    }
}

/// Which symmetric function of the Jucys–Murphy elements is applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HurwitzKind {
    /// `e_k`: strictly monotone factorizations.
    Strict,
    /// `h_k`: weakly monotone factorizations.
    Weak,
    /// `p_1^k`: unrestricted factorizations.
    Ordinary,
}

impl HurwitzKind {
    pub const ALL: [HurwitzKind; 3] = [HurwitzKind::Strict, HurwitzKind::Weak, HurwitzKind::Ordinary];
}

/// `e_k`, `h_k` or `p_1^k` evaluated on the given contents.
pub fn content_function(kind: HurwitzKind, k: usize, contents: &[i64]) -> BigInt {
    match kind {
        HurwitzKind::Ordinary => {
            let s: i64 = contents.iter().sum();
            BigInt::from(s).pow(k as u32)
        }
        HurwitzKind::Strict | HurwitzKind::Weak => {
            let mut dp = vec![BigInt::zero(); k + 1];
            dp[0] = BigInt::one();
            for &c in contents {
                let c = BigInt::from(c);
                if kind == HurwitzKind::Strict {
                    for j in (1..=k).rev() {
                        let add = &dp[j - 1] * &c;
                        dp[j] += add;
                    }
                } else {
                    for j in 1..=k {
                        let add = &dp[j - 1] * &c;
                        dp[j] += add;
                    }
                }
            }
            dp.swap_remove(k)
        }
    }
}

impl CharTable {
    /// `[E_k]`, `[H_k]` or `[P_k]` between the classes `λ` and `μ`:
    /// `(1/(|Aut λ||Aut μ|)) Σ_ν χ_ν(C_μ) r(cont ν) χ_ν(C_λ)`.
    pub fn double_hurwitz(
        &mut self,
        kind: HurwitzKind,
        k: usize,
        lambda: &Partition,
        mu: &Partition,
    ) -> Result<BigRational, HurwitzError> {
        if lambda.size() != mu.size() {
            return Err(HurwitzError::SizeMismatch { left: lambda.size(), right: mu.size() });
        }
        let mut acc = BigInt::zero();
        for nu in Partition::all(lambda.size()) {
            let r = content_function(kind, k, &nu.contents());
            if r.is_zero() {
                continue;
            }
            acc += self.character(&nu, lambda)? * self.character(&nu, mu)? * r;
        }
        Ok(BigRational::new(acc, lambda.aut() * mu.aut()))
    }
}

pub fn character(lambda: &Partition, mu: &Partition) -> Result<BigInt, HurwitzError> {
    CharTable::new().character(lambda, mu)
}

pub fn double_hurwitz(
    kind: HurwitzKind,
    k: usize,
    lambda: &Partition,
    mu: &Partition,
) -> Result<BigRational, HurwitzError> {
    CharTable::new().double_hurwitz(kind, k, lambda, mu)
}

fn permutations_of_type(lambda: &Partition) -> Vec<Vec<u8>> {
    let n = lambda.size();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        if Partition::cycle_type(&perm) == *lambda {
            out.push(perm.iter().map(|&x| x as u8).collect());
        }
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    out
}

/// Number of tuples `(α, τ_1, ..., τ_k)` with `α ∈ C_λ`, `τ_i = (a_i b_i)`,
/// `a_i < b_i`, obeying the monotonicity of `kind` on the `b_i`, and
/// `τ_k ⋯ τ_1 α ∈ C_μ`.
pub fn monotone_path_count(
    kind: HurwitzKind,
    k: usize,
    lambda: &Partition,
    mu: &Partition,
) -> Result<u64, HurwitzError> {
    let n = lambda.size();
    if n != mu.size() {
        return Err(HurwitzError::SizeMismatch { left: n, right: mu.size() });
    }
    if n > MAX_PATH_SIZE {
        return Err(HurwitzError::TooLarge { what: "L", value: n, cap: MAX_PATH_SIZE });
    }
    if k > MAX_PATH_STEPS {
        return Err(HurwitzError::TooLarge { what: "k", value: k, cap: MAX_PATH_STEPS });
    }
    let mut layer: BTreeMap<(Vec<u8>, usize), u64> = BTreeMap::new();
    for p in permutations_of_type(lambda) {
        layer.insert((p, 0), 1);
    }
    for _ in 0..k {
        let mut next = BTreeMap::new();
        for ((p, last), w) in layer {
            let lo = match kind {
                HurwitzKind::Strict => last + 1,
                HurwitzKind::Weak => last,
                HurwitzKind::Ordinary => 0,
            };
            for b in lo.max(1)..n {
                for a in 0..b {
                    let q: Vec<u8> = p
                        .iter()
                        .map(|&x| match x as usize {
                            x if x == a => b as u8,
                            x if x == b => a as u8,
                            x => x as u8,
                        })
                        .collect();
                    let key = if kind == HurwitzKind::Ordinary { 0 } else { b };
                    *next.entry((q, key)).or_insert(0) += w;
                }
            }
        }
        layer = next;
    }
    Ok(layer
        .into_iter()
        .filter(|((p, _), _)| {
            let v: Vec<usize> = p.iter().map(|&x| x as usize).collect();
            Partition::cycle_type(&v) == *mu
        })
        .map(|(_, w)| w)
        .sum())
}

/// [`monotone_path_count`] divided by `L!`, which is the normalization of
/// [`double_hurwitz`].
pub fn monotone_path_oracle(
    kind: HurwitzKind,
    k: usize,
    lambda: &Partition,
    mu: &Partition,
) -> Result<BigRational, HurwitzError> {
    let count = monotone_path_count(kind, k, lambda, mu)?;
    let fact = (1..=lambda.size()).fold(BigInt::one(), |a, i| a * BigInt::from(i));
    Ok(BigRational::new(BigInt::from(count), fact))
}
