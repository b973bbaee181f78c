// SPDX-License-Identifier: Apache-2.0

//! Isolation of `p_k`, the unique root of `x^k + x - 1` in `(0, 1)`.
//!
//! `f_k` is strictly increasing on `[0, 1]` with `f_k(1/2) <= 0 < f_k(1)`,
//! so plain bisection from `[1/2, 1]` isolates the root with dyadic
//! endpoints; every sign test is an exact integer comparison. For `k = 1`
//! the root is exactly `1/2` and the enclosure is a point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::interval::Enclosure;

/// A nested dyadic enclosure of `p_k`; refinement only ever shrinks it.
#[derive(Debug, Clone)]
pub struct RootEnclosure {
    k: u32,
    lo: BigRational,
    hi: BigRational,
    exact: bool,
}

impl RootEnclosure {
    /// Start from `[1/2, 1]`. Panics if `k == 0`.
    pub fn new(k: u32) -> Self {
        assert!(k >= 1, "p_k requires k >= 1");
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        if k == 1 {
            return RootEnclosure {
                k,
                lo: half.clone(),
                hi: half,
                exact: true,
            };
        }
        RootEnclosure {
            k,
            lo: half,
            hi: BigRational::one(),
            exact: false,
        }
    }

    /// Enclosure of `p_k` with width at most `2^-precision_bits`.
    pub fn solve(k: u32, precision_bits: u32) -> Self {
        let mut root = Self::new(k);
        root.refine_to(precision_bits);
        root
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    /// Width zero: the root itself is dyadic (only `k = 1`).
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn enclosure(&self) -> Enclosure {
        Enclosure::new(self.lo.clone(), self.hi.clone())
    }

    /// Shrink until the width is at most `2^-precision_bits`.
    pub fn refine_to(&mut self, precision_bits: u32) {
        let bound = BigRational::new(BigInt::one(), BigInt::one() << precision_bits as usize);
        while !self.exact && self.width() > bound {
            self.bisect_step();
        }
    }

    fn bisect_step(&mut self) {
        let mid = (&self.lo + &self.hi) / BigRational::from(BigInt::from(2));
        match sign_of_f(self.k, &mid) {
            0 => {
                self.lo = mid.clone();
                self.hi = mid;
                self.exact = true;
            }
            s if s < 0 => self.lo = mid,
            _ => self.hi = mid,
        }
    }
}

/// Exact sign of `f_k(x) = x^k + x - 1` at a positive rational, computed
/// on cleared denominators: `sign(n^k + n d^{k-1} - d^k)` for `x = n/d`.
pub(crate) fn sign_of_f(k: u32, x: &BigRational) -> i8 {
    let n = x.numer();
    let d = x.denom();
    debug_assert!(d.is_positive());
    let v = n.pow(k) + n * d.pow(k - 1) - d.pow(k);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}
