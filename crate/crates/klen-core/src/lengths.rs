// SPDX-License-Identifier: Apache-2.0

//! k-length functions, level sets `S_k^n`, exact level counts, and the
//! length-lexicographic order with ranking.
//!
//! The k-length of a string charges 1 per unmarked bit and `k` per marked
//! bit (marked bit 1 by default). Levels are enumerated by the first-bit
//! decomposition `S^n = 0 S^{n-c0} | 1 S^{n-c1}`, which emits strings
//! already sorted in llex order and is the same recursion ranking uses.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::algebraic::AlgebraicReal;
use crate::bits::{Bit, BitString};

/// A k-length function: unmarked bits cost 1, the marked bit costs `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KLengthSpec {
    k: u32,
    marked: Bit,
}

impl KLengthSpec {
    /// Standard choice: bit 1 is the marked (cost-k) bit.
    ///
    /// Panics if `k == 0`.
    pub fn new(k: u32) -> Self {
        Self::with_marked(k, 1)
    }

    /// Panics if `k == 0` or `marked > 1`.
    pub fn with_marked(k: u32, marked: Bit) -> Self {
        assert!(k >= 1, "k-length requires k >= 1");
        assert!(marked <= 1, "marked bit must be 0 or 1");
        KLengthSpec { k, marked }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn marked(&self) -> Bit {
        self.marked
    }

    pub fn cost(&self, bit: Bit) -> u64 {
        if bit == self.marked {
            self.k as u64
        } else {
            1
        }
    }

    fn cost_zero(&self) -> u64 {
        self.cost(0)
    }

    fn cost_one(&self) -> u64 {
        self.cost(1)
    }

    /// The k-length of `s`; additive over concatenation, 0 on the empty
    /// string.
    pub fn k_length(&self, s: &BitString) -> u64 {
        let marked = s.count_of(self.marked) as u64;
        let unmarked = s.len() as u64 - marked;
        unmarked + self.k as u64 * marked
    }

    /// `s_k^n`, the number of strings of k-length exactly `n`.
    pub fn count_level(&self, n: u64) -> BigUint {
        if n < self.k as u64 {
            // Too short for any marked bit: only unmarked^n remains.
            return BigUint::one();
        }
        self.level_counts(n).pop().unwrap()
    }

    /// Counts for every level `0..=n`. `counts[i] = s_k^i`.
    pub(crate) fn level_counts(&self, n: u64) -> Vec<BigUint> {
        let c0 = self.cost_zero();
        let c1 = self.cost_one();
        let mut counts = Vec::with_capacity(n as usize + 1);
        counts.push(BigUint::one());
        for i in 1..=n {
            let mut c = BigUint::zero();
            if i >= c0 {
                c += &counts[(i - c0) as usize];
            }
            if i >= c1 {
                c += &counts[(i - c1) as usize];
            }
            counts.push(c);
        }
        counts
    }

    /// All strings of k-length exactly `n` in llex order.
    ///
    /// Refuses (returning the exact level count) when the level holds more
    /// than `cap` strings.
    pub fn enumerate_level(&self, n: u64, cap: u64) -> Result<Vec<BitString>, LevelTooLarge> {
        let count = self.count_level(n);
        if count > BigUint::from(cap) {
            return Err(LevelTooLarge { count });
        }
        let c0 = self.cost_zero();
        let c1 = self.cost_one();
        let mut out = Vec::new();
        if n == 0 {
            out.push(BitString::empty());
            return Ok(out);
        }
        // Depth-first with an explicit stack; pushing the 1-branch before
        // the 0-branch makes the pop order llex. Each frame records the
        // prefix length to rewind to before appending its bit.
        let mut prefix = BitString::empty();
        let mut stack: Vec<(usize, Bit, u64)> = Vec::new();
        if n >= c1 {
            stack.push((0, 1, n - c1));
        }
        if n >= c0 {
            stack.push((0, 0, n - c0));
        }
        while let Some((rewind, bit, residual)) = stack.pop() {
            while prefix.len() > rewind {
                prefix.pop();
            }
            prefix.push(bit);
            if residual == 0 {
                out.push(prefix.clone());
                continue;
            }
            let base = prefix.len();
            if residual >= c1 {
                stack.push((base, 1, residual - c1));
            }
            if residual >= c0 {
                stack.push((base, 0, residual - c0));
            }
        }
        Ok(out)
    }

    /// Total order: first by k-length, ties bitwise left-to-right with a
    /// proper prefix sorting before its extensions.
    pub fn llex_compare(&self, a: &BitString, b: &BitString) -> Ordering {
        self.k_length(a)
            .cmp(&self.k_length(b))
            .then_with(|| a.cmp(b))
    }

    /// 0-based position of `s` within its own level, without
    /// materializing the level.
    pub fn llex_rank(&self, s: &BitString) -> BigUint {
        let n = self.k_length(s);
        let counts = self.level_counts(n);
        let c0 = self.cost_zero();
        let mut rank = BigUint::zero();
        let mut rem = n;
        for bit in s.iter() {
            if bit == 1 {
                // Skip the whole 0-branch at this node.
                if rem >= c0 {
                    rank += &counts[(rem - c0) as usize];
                }
            }
            rem -= self.cost(bit);
        }
        rank
    }

    /// Inverse of [`llex_rank`](Self::llex_rank): the rank-`r` string of
    /// k-length `n`.
    pub fn llex_unrank(&self, n: u64, r: &BigUint) -> Result<BitString, RankOutOfRange> {
        let counts = self.level_counts(n);
        if *r >= counts[n as usize] {
            return Err(RankOutOfRange {
                count: counts[n as usize].clone(),
            });
        }
        let c0 = self.cost_zero();
        let c1 = self.cost_one();
        let mut rem = n;
        let mut r = r.clone();
        let mut out = BitString::empty();
        while rem > 0 {
            let zero_branch = if rem >= c0 {
                counts[(rem - c0) as usize].clone()
            } else {
                BigUint::zero()
            };
            if r < zero_branch {
                out.push(0);
                rem -= c0;
            } else {
                r -= zero_branch;
                out.push(1);
                rem -= c1;
            }
        }
        debug_assert!(r.is_zero());
        Ok(out)
    }

    /// Certify the level-count bounds at level `n` by exact algebraic
    /// comparison: `q^{n-k} <= s <= 2 q^{n-k}` (only meaningful for
    /// `n >= k`) and `s <= q^n`.
    pub fn level_bounds_check(&self, n: u64) -> LevelBounds {
        let k = self.k;
        let count = AlgebraicReal::from_biguint(k, self.count_level(n));
        let q_power_ok = count.compare(&AlgebraicReal::q_pow(k, n)) != Ordering::Greater;
        let (lower_ok, upper_ok) = if n >= k as u64 {
            let base = AlgebraicReal::q_pow(k, n - k as u64);
            let lower = base.compare(&count) != Ordering::Greater;
            let upper = count.compare(&base.scale_u32(2)) != Ordering::Greater;
            (Some(lower), Some(upper))
        } else {
            (None, None)
        };
        LevelBounds {
            lower_ok,
            upper_ok,
            q_power_ok,
        }
    }
}

/// Outcome of [`KLengthSpec::level_bounds_check`]; the two-sided bounds
/// are `None` below level `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelBounds {
    pub lower_ok: Option<bool>,
    pub upper_ok: Option<bool>,
    pub q_power_ok: bool,
}

impl LevelBounds {
    pub fn all_ok(&self) -> bool {
        self.lower_ok.unwrap_or(true) && self.upper_ok.unwrap_or(true) && self.q_power_ok
    }
}

/// A level exceeded the enumeration cap; carries the exact count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelTooLarge {
    pub count: BigUint,
}

impl fmt::Display for LevelTooLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "level holds {} strings, above the enumeration cap", self.count)
    }
}

impl core::error::Error for LevelTooLarge {}

/// Unrank index at or beyond the level count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOutOfRange {
    pub count: BigUint,
}

impl fmt::Display for RankOutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank out of range: level holds {} strings", self.count)
    }
}

impl core::error::Error for RankOutOfRange {}
