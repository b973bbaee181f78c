// SPDX-License-Identifier: Apache-2.0

//! Dense univariate polynomials over the rationals: just enough
//! arithmetic for reduction modulo `x^k + x - 1`, gcds, and Sturm
//! root counting. Internal to the crate.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients ascending by degree; invariant: no trailing zero
/// (the zero polynomial is the empty vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub(crate) fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub(crate) fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub(crate) fn constant(c: BigRational) -> Self {
        Self::from_coeffs(alloc::vec![c])
    }

    /// `x^k + x - 1`, the defining polynomial of `p_k`.
    pub(crate) fn defining(k: u32) -> Self {
        let mut coeffs = alloc::vec![BigRational::zero(); k as usize + 1];
        coeffs[0] = -BigRational::one();
        coeffs[1] += BigRational::one();
        coeffs[k as usize] += BigRational::one();
        Self::from_coeffs(coeffs)
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub(crate) fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub(crate) fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub(crate) fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(out)
    }

    pub(crate) fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Self::from_coeffs(out)
    }

    pub(crate) fn neg(&self) -> Self {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = alloc::vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub(crate) fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Euclidean remainder of `self` by `divisor` (nonzero).
    pub(crate) fn rem(&self, divisor: &Self) -> Self {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        while rem.len() > d {
            let top = rem.len() - 1;
            let factor = rem[top].clone() / lead.clone();
            if !factor.is_zero() {
                for i in 0..d {
                    let adj = &factor * &divisor.coeffs[i];
                    rem[top - d + i] -= adj;
                }
            }
            rem.pop();
        }
        Self::from_coeffs(rem)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub(crate) fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.into_monic()
    }

    fn into_monic(mut self) -> Self {
        if let Some(d) = self.degree() {
            let lead = self.coeffs[d].clone();
            if !lead.is_one() {
                for c in &mut self.coeffs {
                    *c /= lead.clone();
                }
            }
        }
        self
    }

    /// `self` with repeated factors removed.
    pub(crate) fn squarefree_part(&self) -> Self {
        let d = self.derivative();
        if d.is_zero() {
            return self.clone().into_monic();
        }
        let g = self.gcd(&d);
        if g.degree() == Some(0) {
            return self.clone().into_monic();
        }
        self.exact_div(&g).into_monic()
    }

    /// Exact quotient; panics if `divisor` does not divide `self`.
    fn exact_div(&self, divisor: &Self) -> Self {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = alloc::vec![BigRational::zero(); rem.len().saturating_sub(d)];
        while rem.len() > d {
            let top = rem.len() - 1;
            let factor = rem[top].clone() / lead.clone();
            quot[top - d] = factor.clone();
            if !factor.is_zero() {
                for i in 0..d {
                    let adj = &factor * &divisor.coeffs[i];
                    rem[top - d + i] -= adj;
                }
            }
            rem.pop();
        }
        debug_assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        Self::from_coeffs(quot)
    }

    pub(crate) fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Interval extension by Horner with endpoint interval arithmetic.
    /// Exact (rationals are closed under +,*), so the only looseness is
    /// the usual interval dependency effect.
    pub(crate) fn eval_interval(
        &self,
        lo: &BigRational,
        hi: &BigRational,
    ) -> (BigRational, BigRational) {
        let mut acc_lo = BigRational::zero();
        let mut acc_hi = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            let candidates = [
                &acc_lo * lo,
                &acc_lo * hi,
                &acc_hi * lo,
                &acc_hi * hi,
            ];
            let mut new_lo = candidates[0].clone();
            let mut new_hi = candidates[0].clone();
            for cand in &candidates[1..] {
                if *cand < new_lo {
                    new_lo = cand.clone();
                }
                if *cand > new_hi {
                    new_hi = cand.clone();
                }
            }
            acc_lo = new_lo + c;
            acc_hi = new_hi + c;
        }
        (acc_lo, acc_hi)
    }

    fn sign_at(&self, x: &BigRational) -> i8 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Number of distinct real roots in the open interval `(lo, hi)`.
    /// Requires `self(lo) != 0 != self(hi)`; `self` need not be
    /// squarefree (the squarefree part is taken internally).
    pub(crate) fn count_roots_between(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let p = self.squarefree_part();
        debug_assert!(!p.eval(lo).is_zero() && !p.eval(hi).is_zero());
        let chain = p.sturm_chain();
        let v_lo = sign_variations(chain.iter().map(|q| q.sign_at(lo)));
        let v_hi = sign_variations(chain.iter().map(|q| q.sign_at(hi)));
        v_lo - v_hi
    }

    fn sturm_chain(&self) -> Vec<RatPoly> {
        let mut chain = alloc::vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                return chain;
            }
            let r = chain[n - 2].rem(&chain[n - 1]).neg();
            chain.push(r);
        }
    }
}

fn sign_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}
