// SPDX-License-Identifier: Apache-2.0

//! Finite binary strings, the universe every other module works over.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// A single bit. Stored as `u8` 0/1 so strings stay cheap to index.
pub type Bit = u8;

/// A finite binary string; the empty string is `BitString::empty()`.
///
/// The derived `Ord` is bitwise lexicographic with a proper prefix
/// sorting before its extensions, which is exactly the tie-break order
/// used inside one k-length level.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitString {
    bits: Vec<Bit>,
}

impl BitString {
    pub fn empty() -> Self {
        BitString { bits: Vec::new() }
    }

    pub fn from_bits(bits: Vec<Bit>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        BitString { bits }
    }

    /// The string `bit^count`.
    pub fn repeated(bit: Bit, count: usize) -> Self {
        debug_assert!(bit <= 1);
        BitString {
            bits: alloc::vec![bit; count],
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> Bit {
        self.bits[i]
    }

    pub fn bits(&self) -> &[Bit] {
        &self.bits
    }

    pub fn push(&mut self, bit: Bit) {
        debug_assert!(bit <= 1);
        self.bits.push(bit);
    }

    pub fn pop(&mut self) -> Option<Bit> {
        self.bits.pop()
    }

    pub fn count_of(&self, bit: Bit) -> usize {
        self.bits.iter().filter(|&&b| b == bit).count()
    }

    pub fn concat(&self, other: &BitString) -> BitString {
        let mut bits = Vec::with_capacity(self.len() + other.len());
        bits.extend_from_slice(&self.bits);
        bits.extend_from_slice(&other.bits);
        BitString { bits }
    }

    /// Is `self` a prefix of `other` (including equality)?
    pub fn is_prefix_of(&self, other: &BitString) -> bool {
        self.len() <= other.len() && self.bits == other.bits[..self.len()]
    }

    /// Prefix-comparable: one extends the other (or they are equal).
    pub fn is_comparable_with(&self, other: &BitString) -> bool {
        self.is_prefix_of(other) || other.is_prefix_of(self)
    }

    pub fn prefix(&self, n: usize) -> BitString {
        BitString {
            bits: self.bits[..n].to_vec(),
        }
    }

    pub fn suffix_from(&self, n: usize) -> BitString {
        BitString {
            bits: self.bits[n..].to_vec(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Bit> + '_ {
        self.bits.iter().copied()
    }

    /// ASCII rendering, `""` for the empty string.
    pub fn to_ascii(&self) -> String {
        self.bits.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect()
    }
}

/// Error from parsing an ASCII bit string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseBitStringError {
    pub offending: char,
}

impl fmt::Display for ParseBitStringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid bit character {:?}; expected '0' or '1'", self.offending)
    }
}

impl core::error::Error for ParseBitStringError {}

impl FromStr for BitString {
    type Err = ParseBitStringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                other => return Err(ParseBitStringError { offending: other }),
            }
        }
        Ok(BitString { bits })
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

// Renders like `"0110"` so test failures stay readable.
impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}
