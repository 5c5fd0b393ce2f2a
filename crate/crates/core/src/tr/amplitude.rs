use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::exactnum::Field;

/// `(branch point, pole order)`.
pub type Slot = (u8, u16);
pub type Index = Vec<Slot>;

/// `ω_{g,n}` as coefficients on `Π dz_i / (z_i - a_i)^{k_i}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Amplitude<F> {
    pub g: usize,
    pub n: usize,
    pub entries: BTreeMap<Index, F>,
}

impl<F: Field> Amplitude<F> {
    pub fn new(g: usize, n: usize, entries: BTreeMap<Index, F>) -> Self {
        let entries = entries.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Amplitude { g, n, entries }
    }

    pub fn get(&self, idx: &[Slot]) -> F {
        self.entries.get(idx).cloned().unwrap_or_else(F::zero)
    }

    pub fn max_pole_order(&self) -> usize {
        self.entries.keys().flat_map(|k| k.iter().map(|s| s.1 as usize)).max().unwrap_or(0)
    }

    pub fn min_pole_order(&self) -> usize {
        self.entries.keys().flat_map(|k| k.iter().map(|s| s.1 as usize)).min().unwrap_or(0)
    }

    /// Invariance under every transposition of adjacent slots.
    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n.saturating_sub(1) {
            for (k, v) in &self.entries {
                let mut p = k.clone();
                p.swap(i, i + 1);
                if self.get(&p) != *v {
                    return false;
                }
            }
        }
        true
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Amplitude<G> {
        Amplitude::new(self.g, self.n, self.entries.iter().map(|(k, v)| (k.clone(), f(v))).collect())
    }
}
