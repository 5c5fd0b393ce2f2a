use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// Integer partition with weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Partition(Vec<usize>);

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(parts: &[usize]) -> Self {
        let mut p: Vec<usize> = parts.iter().copied().filter(|&x| x > 0).collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        Partition(p)
    }

    /// `(part, ..., part)` with `count` copies.
    pub fn uniform(part: usize, count: usize) -> Self {
        Partition::new(&vec![part; count])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Distinct parts with their multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `|Aut λ| = |λ|! / |C_λ| = ∏ m_i! i^{m_i}`.
    pub fn aut(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (p, m)| acc * factorial(m) * BigInt::from(p).pow(m as u32))
    }

    /// Size of the conjugacy class `C_λ` in the symmetric group.
    pub fn class_size(&self) -> BigInt {
        factorial(self.size()) / self.aut()
    }

    /// Minimal number of transpositions whose product lies in `C_λ`.
    pub fn min_transpositions(&self) -> usize {
        self.size() - self.len()
    }

    /// Contents `j - i` of the boxes of the Young diagram, row by row.
    pub fn contents(&self) -> Vec<i64> {
        let mut c = Vec::with_capacity(self.size());
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p {
                c.push(j as i64 - i as i64);
            }
        }
        c
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition((0..cols).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Dimension of the irreducible representation, by the hook length formula.
    pub fn dimension(&self) -> BigInt {
        let conj = self.conjugate();
        let mut hooks = BigInt::one();
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p {
                hooks *= BigInt::from(p - j + conj.0[j] - i - 1);
            }
        }
        factorial(self.size()) / hooks
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                go(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Cycle type of a permutation given as the image list `i -> perm[i]`.
    pub fn cycle_type(perm: &[usize]) -> Partition {
        let mut seen = vec![false; perm.len()];
        let mut parts = Vec::new();
        for s in 0..perm.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
                len += 1;
            }
            parts.push(len);
        }
        Partition::new(&parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}
