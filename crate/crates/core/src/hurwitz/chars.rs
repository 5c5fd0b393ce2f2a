use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{HurwitzError, Partition};

/// Memoized symmetric group characters `χ_λ(C_μ)`.
#[derive(Clone, Debug, Default)]
pub struct CharTable {
    memo: BTreeMap<(Partition, Partition), BigInt>,
}

/// Removes every rim hook of length `r` from `λ`, returning the remainder and the sign.
fn remove_rim_hooks(lambda: &Partition, r: usize) -> Vec<(Partition, bool)> {
    let l = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = nb.iter().enumerate().map(|(j, &x)| x - (l - 1 - j)).collect();
        out.push((Partition::new(&parts), between % 2 == 1));
    }
    out
}

impl CharTable {
    pub fn new() -> Self {
        CharTable::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// `χ_λ(C_μ)` by the Murnaghan–Nakayama rule.
    pub fn character(&mut self, lambda: &Partition, mu: &Partition) -> Result<BigInt, HurwitzError> {
        if lambda.size() != mu.size() {
            return Err(HurwitzError::SizeMismatch { left: lambda.size(), right: mu.size() });
        }
        Ok(self.mn(lambda, mu))
    }

    fn mn(&mut self, lambda: &Partition, mu: &Partition) -> BigInt {
        if mu.is_empty() {
            return BigInt::one();
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let r = mu.parts()[0];
        let rest = Partition::new(&mu.parts()[1..]);
        let mut acc = BigInt::zero();
        for (smaller, negative) in remove_rim_hooks(lambda, r) {
            let v = self.mn(&smaller, &rest);
            if negative {
                acc -= v;
            } else {
                acc += v;
            }
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}
