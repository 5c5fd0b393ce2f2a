//! Topological recursion on genus-zero curves with simple branch points.
//!
//! Amplitudes are stored in the pole basis
//! `ω_{g,n} = Σ C[(a_1,k_1),…,(a_n,k_n)] Π dz_i / (z_i - a_i)^{k_i}`, and every
//! residue is taken by multiplying local jets at the branch points.

mod amplitude;
mod local;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::exactnum::{Field, TruncatedSeries};
use crate::spectral::Curve;

pub use amplitude::{Amplitude, Index, Slot};
pub use local::{deck_jet, kernel_jet, KernelJet, LocalData, TrError};

type Ser<F> = TruncatedSeries<F>;

/// Largest pole order that can appear in `ω_{g,n}`.
pub fn max_pole(g: usize, n: usize) -> usize {
    6 * g + 2 * n - 4
}

fn bracket_pole(g: usize, n_out: usize) -> usize {
    let n = n_out - 1;
    let mut p = 0;
    if g >= 1 {
        let inner = if g == 1 && n == 0 { 2 } else { 2 * max_pole(g - 1, n + 2) };
        p = p.max(inner);
    }
    if 6 * g + 2 * n >= 4 {
        p = p.max(6 * g + 2 * n - 4);
    }
    p
}

/// Local precision in `ζ` sufficient to compute `ω_{g,n}`.
pub fn zeta_order_for(g: usize, n: usize) -> i64 {
    bracket_pole(g, n) as i64 + 6
}

/// Curve data together with its local expansions at every branch point.
pub struct TrContext<F> {
    pub curve: Curve<F>,
    pub local: Vec<LocalData<F>>,
    order: i64,
}

impl<F: Field> TrContext<F> {
    pub fn new(curve: Curve<F>, zeta_order: i64) -> Result<Self, TrError> {
        let local = (0..curve.branch_points.len()).map(|i| LocalData::new(&curve, i, zeta_order)).collect::<Result<_, _>>()?;
        Ok(TrContext { curve, local, order: zeta_order })
    }

    pub fn zeta_order(&self) -> i64 {
        self.order
    }

    /// First slot of `amp` expanded at branch point `a` (plain, or through the deck map).
    fn partial(&self, amp: &Amplitude<F>, a: usize, deck: bool) -> BTreeMap<Index, Ser<F>> {
        let ld = &self.local[a];
        let mut out: BTreeMap<Index, Ser<F>> = BTreeMap::new();
        for (idx, c) in &amp.entries {
            let (b, k) = idx[0];
            let e = if deck { ld.deck_pole(b as usize, k as usize) } else { ld.pole(b as usize, k as usize) };
            let rest: Index = idx[1..].to_vec();
            let term = e.scale(c);
            match out.get_mut(&rest) {
                Some(s) => *s = s.add(&term),
                None => {
                    out.insert(rest, term);
                }
            }
        }
        out
    }

    /// `B(z, z')` with `z = a + ζ` (or `a + σ(ζ)`), projected on the `z'` pole basis at `a`.
    fn partial_b(&self, a: usize, deck: bool) -> BTreeMap<Index, Ser<F>> {
        let ld = &self.local[a];
        let mut out = BTreeMap::new();
        for m in 0..=self.order as usize {
            let s = if deck { ld.b_deck(m) } else { ld.b_plain(m) };
            out.insert(vec![(a as u8, (m + 2) as u16)], s);
        }
        out
    }

    fn factor(
        &self,
        lower: &BTreeMap<(usize, usize), Amplitude<F>>,
        g: usize,
        n: usize,
        a: usize,
        deck: bool,
    ) -> BTreeMap<Index, Ser<F>> {
        if g == 0 && n == 2 {
            return self.partial_b(a, deck);
        }
        let amp = lower.get(&(g, n)).unwrap_or_else(|| panic!("amplitude ({}, {}) not available", g, n));
        self.partial(amp, a, deck)
    }

    /// Contribution of the branch point `a` to `ω_{g,n}`.
    pub fn branch_contribution(
        &self,
        lower: &BTreeMap<(usize, usize), Amplitude<F>>,
        g: usize,
        n_out: usize,
        a: usize,
    ) -> BTreeMap<Index, F> {
        let n = n_out - 1;
        let ld = &self.local[a];
        let mut bracket: BTreeMap<Index, Ser<F>> = BTreeMap::new();
        let push = |key: Index, s: Ser<F>, br: &mut BTreeMap<Index, Ser<F>>| match br.get_mut(&key) {
            Some(t) => *t = t.add(&s),
            None => {
                br.insert(key, s);
            }
        };

        if g >= 1 {
            if g == 1 && n == 0 {
                push(Vec::new(), ld.b_at_deck(), &mut bracket);
            } else {
                let first = self.factor(lower, g - 1, n + 2, a, false);
                for (rest, s) in first {
                    let (b, k) = rest[0];
                    let prod = s.mul(&ld.deck_pole(b as usize, k as usize));
                    push(rest[1..].to_vec(), prod, &mut bracket);
                }
            }
        }

        for g1 in 0..=g {
            let g2 = g - g1;
            for mask in 0u32..(1u32 << n) {
                let n1 = mask.count_ones() as usize;
                let n2 = n - n1;
                if (g1 == 0 && n1 == 0) || (g2 == 0 && n2 == 0) {
                    continue;
                }
                let f1 = self.factor(lower, g1, n1 + 1, a, false);
                let f2 = self.factor(lower, g2, n2 + 1, a, true);
                let pos1: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                let pos2: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
                for (k1, s1) in &f1 {
                    for (k2, s2) in &f2 {
                        let mut key = vec![(0u8, 0u16); n];
                        for (p, v) in pos1.iter().zip(k1) {
                            key[*p] = *v;
                        }
                        for (p, v) in pos2.iter().zip(k2) {
                            key[*p] = *v;
                        }
                        push(key, s1.mul(s2), &mut bracket);
                    }
                }
            }
        }

        let mmax = (bracket_pole(g, n_out) + 1).min(ld.kernel.kappa.len() - 1);
        let mut out = BTreeMap::new();
        for (key, br) in &bracket {
            if br.is_zero() {
                continue;
            }
            for m in 1..=mmax {
                let v = residue_pair(&ld.kernel.kappa[m], br);
                if !v.is_zero() {
                    let mut idx = Vec::with_capacity(n_out);
                    idx.push((a as u8, (m + 1) as u16));
                    idx.extend_from_slice(key);
                    out.insert(idx, v);
                }
            }
        }
        out
    }
}

/// `Res_{ζ=0} f g dζ`, checking that both factors are known far enough.
fn residue_pair<F: Field>(f: &Ser<F>, g: &Ser<F>) -> F {
    if f.is_zero() || g.is_zero() {
        return F::zero();
    }
    let lo = f.min_exp();
    let hi = -1 - g.min_exp();
    assert!(
        hi <= f.order() && -1 - lo <= g.order(),
        "local expansion too short: need orders {} and {}, have {} and {}",
        hi,
        -1 - lo,
        f.order(),
        g.order()
    );
    let mut acc = F::zero();
    for e in lo..=hi {
        let a = f.coeff(e);
        if a.is_zero() {
            continue;
        }
        let b = g.coeff(-1 - e);
        if !b.is_zero() {
            acc = acc.plus(&a.times(&b));
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq)]
pub struct DilatonReport<F> {
    pub holds: bool,
    /// `Σ_a Res Φ ω_{g,n+1} - (2 - 2g - n) ω_{g,n}`.
    pub residual: Amplitude<F>,
}

/// Memoized recursion over `2g - 2 + n`.
pub struct TrEngine<F> {
    ctx: TrContext<F>,
    memo: BTreeMap<(usize, usize), Amplitude<F>>,
}

impl<F: Field> TrEngine<F> {
    /// Engine able to reach every `(g, n)` with `2g - 2 + n <= chi_max`.
    pub fn new(curve: Curve<F>, chi_max: usize) -> Result<Self, TrError> {
        let mut order = 0;
        for g in 0..=chi_max.div_ceil(2) {
            for n in 1..=chi_max + 2 {
                if 2 * g + n >= 3 && 2 * g + n <= chi_max + 2 {
                    order = order.max(zeta_order_for(g, n));
                }
            }
        }
        Ok(TrEngine { ctx: TrContext::new(curve, order)?, memo: BTreeMap::new() })
    }

    pub fn context(&self) -> &TrContext<F> {
        &self.ctx
    }

    pub fn cached(&self, g: usize, n: usize) -> Option<&Amplitude<F>> {
        self.memo.get(&(g, n))
    }

    pub fn insert(&mut self, amp: Amplitude<F>) {
        self.memo.insert((amp.g, amp.n), amp);
    }

    /// Dependencies of `ω_{g,n}`, in an order where each only needs earlier ones.
    pub fn schedule(g: usize, n: usize) -> Vec<(usize, usize)> {
        let chi = 2 * g + n - 2;
        let mut out = Vec::new();
        for c in 1..=chi {
            for gg in 0..=g {
                if 2 * gg > c + 1 {
                    continue;
                }
                let nn = c + 2 - 2 * gg;
                if nn >= 1 && nn <= n + 2 * (g - gg) {
                    out.push((gg, nn));
                }
            }
        }
        out
    }

    pub fn amplitude(&mut self, g: usize, n: usize) -> &Amplitude<F> {
        assert!(2 * g + n > 2, "ω_{{{},{}}} is not produced by the recursion", g, n);
        for (gg, nn) in Self::schedule(g, n) {
            if self.memo.contains_key(&(gg, nn)) {
                continue;
            }
            let mut entries: BTreeMap<Index, F> = BTreeMap::new();
            for a in 0..self.ctx.local.len() {
                for (k, v) in self.ctx.branch_contribution(&self.memo, gg, nn, a) {
                    entries.insert(k, v);
                }
            }
            let amp = Amplitude::new(gg, nn, entries);
            self.memo.insert((gg, nn), amp);
        }
        &self.memo[&(g, n)]
    }

    pub fn dilaton_check(&mut self, g: usize, n: usize) -> DilatonReport<F> {
        self.amplitude(g, n + 1);
        self.amplitude(g, n);
        let big = &self.memo[&(g, n + 1)];
        let small = &self.memo[&(g, n)];
        let mut lhs: BTreeMap<Index, F> = BTreeMap::new();
        for (idx, c) in &big.entries {
            let (a, k) = idx[n];
            let phi = &self.ctx.local[a as usize].primitive;
            let v = phi.coeff(k as i64 - 1).times(c);
            let key: Index = idx[..n].to_vec();
            let slot = lhs.entry(key).or_insert_with(F::zero);
            *slot = slot.plus(&v);
        }
        let factor = F::from_i64(2 - 2 * g as i64 - n as i64);
        for (idx, c) in &small.entries {
            let slot = lhs.entry(idx.clone()).or_insert_with(F::zero);
            *slot = slot.minus(&c.times(&factor));
        }
        let residual = Amplitude::new(g, n, lhs);
        DilatonReport { holds: residual.entries.is_empty(), residual }
    }
}
