// SPDX-License-Identifier: Apache-2.0

//! Exact rational interval arithmetic with a certified natural log.
//!
//! Endpoints are arbitrary rationals, so ring operations are exact; the
//! only sources of width are input enclosures and the logarithm's series
//! remainder. Decimal rendering rounds half-to-even.

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A closed rational interval `[lo, hi]` guaranteed to contain the real
/// value it stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    lo: BigRational,
    hi: BigRational,
}

impl Enclosure {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        Enclosure { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Enclosure { lo: x.clone(), hi: x }
    }

    pub fn from_int(x: i64) -> Self {
        Self::point(BigRational::from(BigInt::from(x)))
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from(BigInt::from(2))
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn contains_interval(&self, other: &Enclosure) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &Enclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Width at most `2^-bits`?
    pub fn narrower_than(&self, bits: u32) -> bool {
        self.width() * BigRational::from(BigInt::one() << bits as usize) <= BigRational::one()
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_strictly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn add(&self, other: &Enclosure) -> Enclosure {
        Enclosure::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Enclosure) -> Enclosure {
        Enclosure::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> Enclosure {
        Enclosure::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &Enclosure) -> Enclosure {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        minmax(candidates)
    }

    /// Interval quotient; panics if `other` straddles zero.
    pub fn div(&self, other: &Enclosure) -> Enclosure {
        assert!(
            other.is_strictly_positive() || other.is_strictly_negative(),
            "interval division requires a sign-definite denominator"
        );
        let candidates = [
            &self.lo / &other.lo,
            &self.lo / &other.hi,
            &self.hi / &other.lo,
            &self.hi / &other.hi,
        ];
        minmax(candidates)
    }

    pub fn scale(&self, factor: &BigRational) -> Enclosure {
        let a = &self.lo * factor;
        let b = &self.hi * factor;
        if a <= b {
            Enclosure::new(a, b)
        } else {
            Enclosure::new(b, a)
        }
    }

    /// Natural log of the interval, requiring `lo > 0`. The result's
    /// extra width beyond monotone image width is at most `2^-err_bits`
    /// per endpoint.
    pub fn ln(&self, err_bits: u32) -> Enclosure {
        assert!(self.lo.is_positive(), "ln requires a positive interval");
        let lo = ln_point(&self.lo, err_bits);
        let hi = ln_point(&self.hi, err_bits);
        Enclosure::new(lo.lo, hi.hi)
    }

    /// Compare with another enclosure if their ranges do not overlap.
    pub fn try_compare(&self, other: &Enclosure) -> Option<core::cmp::Ordering> {
        if self.hi < other.lo {
            Some(core::cmp::Ordering::Less)
        } else if other.hi < self.lo {
            Some(core::cmp::Ordering::Greater)
        } else {
            None
        }
    }

    /// Rounded decimal at `digits` places, provided both endpoints round
    /// to the same string; `None` means the enclosure straddles a
    /// rounding boundary and needs refinement.
    pub fn to_decimal(&self, digits: u32) -> Option<String> {
        let a = decimal_round_half_even(&self.lo, digits);
        let b = decimal_round_half_even(&self.hi, digits);
        (a == b).then_some(a)
    }

    /// Rounded decimal of the midpoint at `digits` places.
    pub fn midpoint_decimal(&self, digits: u32) -> String {
        decimal_round_half_even(&self.midpoint(), digits)
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

fn minmax(candidates: [BigRational; 4]) -> Enclosure {
    let mut lo = candidates[0].clone();
    let mut hi = candidates[0].clone();
    for c in &candidates[1..] {
        if *c < lo {
            lo = c.clone();
        }
        if *c > hi {
            hi = c.clone();
        }
    }
    Enclosure::new(lo, hi)
}

/// Certified enclosure of `ln x` for rational `x > 0`, to within
/// `2^-err_bits`, via `ln x = 2 atanh((x-1)/(x+1))`.
///
/// The series runs in fixed-point (scale `2^W`, `W = err_bits + 40`)
/// floor arithmetic. Every scaled intermediate has magnitude below
/// `2^W`, so each operation adds at most a few ulps; the generous bound
/// `6 steps^2 + 2 steps + 16` ulps plus the analytic tail
/// `2 |t|^{2N+3} / ((2N+3)(1-t^2))` is folded into the returned width,
/// which stays far below the 40 guard bits.
pub fn ln_point(x: &BigRational, err_bits: u32) -> Enclosure {
    use num_bigint::BigUint;
    assert!(x.is_positive(), "ln requires x > 0");
    if x.is_one() {
        return Enclosure::point(BigRational::zero());
    }
    let w = err_bits as usize + 40;
    let xn = x.numer();
    let xd = x.denom();
    // t = (x-1)/(x+1); |t| < 1 for every positive x.
    let t_num = xn - xd;
    let t_den: BigUint = (xn + xd).to_biguint().expect("positive by construction");
    let negative = t_num.is_negative();
    let t_mag = t_num.abs().to_biguint().unwrap();

    // A = floor(|t| 2^W), error within 1 ulp.
    let a = (t_mag << w) / &t_den;
    // T2 = floor(A^2 / 2^W) approximates t^2 within 3 ulps.
    let t2 = (&a * &a) >> w;
    // Lower bound on (1 - t^2) 2^W for the tail denominator.
    let t2_padded = &t2 + BigUint::from(8u32);
    let scale_w = BigUint::one() << w;
    assert!(
        t2_padded < scale_w,
        "|t| is bounded away from 1 for rational x"
    );
    let denom_floor = scale_w - t2_padded;

    let mut sum = BigUint::ZERO;
    let mut power = a; // ~ |t|^(2i+1) 2^W
    let mut odd = BigUint::one();
    let two = BigUint::from(2u32);
    let mut steps = 0u64;
    let tail_scaled;
    loop {
        sum += &power / &odd;
        steps += 1;
        odd += &two;
        power = (&power * &t2) >> w;
        // Tail after the term just added, scaled by 2^W and padded by
        // the current ulp-error envelope on `power`.
        let padded = &power + BigUint::from(5 * steps + 8);
        let tail = ((&padded << w) * &two) / (&odd * &denom_floor) + BigUint::one();
        if tail <= BigUint::one() << (w - err_bits as usize - 2) {
            tail_scaled = tail;
            break;
        }
    }
    let rounding = BigUint::from(6 * steps * steps + 2 * steps + 16);
    let err = BigInt::from((rounding + tail_scaled) * &two);
    let value = BigInt::from(sum * two);
    let value = if negative { -value } else { value };
    let scale = BigInt::one() << w;
    Enclosure::new(
        BigRational::new(&value - &err, scale.clone()),
        BigRational::new(value + err, scale),
    )
}

/// Round-half-even decimal rendering of a rational at `digits` places.
pub fn decimal_round_half_even(x: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10).pow(digits);
    let scaled = x * BigRational::from(scale.clone());
    let (mut q, r) = scaled.numer().div_mod_floor(scaled.denom());
    // div_mod_floor leaves 0 <= r < denom; round the fractional part.
    let twice = &r * BigInt::from(2);
    let go_up = match twice.cmp(scaled.denom()) {
        core::cmp::Ordering::Greater => true,
        core::cmp::Ordering::Less => false,
        core::cmp::Ordering::Equal => q.is_odd(),
    };
    if go_up {
        q += BigInt::one();
    }
    render_scaled_decimal(&q, digits)
}

fn render_scaled_decimal(q: &BigInt, digits: u32) -> String {
    let negative = q.is_negative();
    let mut s = q.abs().to_string();
    if digits == 0 {
        return if negative {
            alloc::format!("-{s}")
        } else {
            s
        };
    }
    while s.len() <= digits as usize {
        s.insert(0, '0');
    }
    s.insert(s.len() - digits as usize, '.');
    if negative {
        s.insert(0, '-');
    }
    s
}

/// Parse a plain decimal literal (optional sign, optional fraction) into
/// an exact rational.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    if body.is_empty() {
        return None;
    }
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits: String = [int_part, frac_part].concat();
    let numer: BigInt = digits.parse().ok()?;
    let denom = BigInt::from(10).pow(frac_part.len() as u32);
    let v = BigRational::new(numer, denom);
    Some(if negative { -v } else { v })
}

/// Convenience: closest `f64` to the midpoint (display/reporting only;
/// nothing is decided with it).
pub fn midpoint_f64(e: &Enclosure) -> f64 {
    e.midpoint().to_f64().unwrap_or(f64::NAN)
}
