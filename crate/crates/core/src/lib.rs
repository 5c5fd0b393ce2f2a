#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod exactnum;
pub mod spectral;
pub mod tr;
pub mod extract;
pub mod oracle;
pub mod hurwitz;
pub mod freeprob;
