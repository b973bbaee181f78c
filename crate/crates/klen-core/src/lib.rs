// SPDX-License-Identifier: Apache-2.0

//! Generalized length functions over binary strings, the Bernoulli
//! measures tied to the roots of `x^k + x - 1`, and the coding tools
//! built on top of them: exact level counting, budget-checked prefix-free
//! codeword allocation, table machines with machine-relative k-complexity,
//! universal integer codes, and a seeded sampling lab.
//!
//! All arithmetic that decides anything (budgets, measure identities,
//! level bounds) is exact: elements of `Z[p_k]` are kept as reduced
//! polynomials and compared through interval refinement with a
//! Sturm-sequence fallback. Floating point never decides.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the CLI
//! live in the companion `klen` crate.

#![no_std]
#![warn(unreachable_pub)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebraic;
pub mod allocator;
pub mod bits;
pub mod lab;
pub mod lengths;
pub mod machines;

mod interval;
mod poly;
mod root;

pub use algebraic::AlgebraicReal;
pub use allocator::{CodeBook, RequestStream};
pub use bits::{Bit, BitString};
pub use interval::{decimal_round_half_even, ln_point, midpoint_f64, parse_decimal, Enclosure};
pub use lengths::KLengthSpec;
pub use machines::Icm;
pub use root::RootEnclosure;
