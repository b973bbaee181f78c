// SPDX-License-Identifier: Apache-2.0

//! Finite prefix-free table machines and the constructions on top of
//! them: machine-relative k-complexity, the prefix-free integer code
//! `rho_n`, information content measures compiled into machines, the
//! two-part description converting j-length into k-length, and
//! deficiency sets with certified measure bounds.
//!
//! A [`CodeBook`] *is* the machine: its codewords form the (prefix-free)
//! domain and its payloads the outputs.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::algebraic::{conversion_factor, AlgebraicReal};
use crate::allocator::{CodeBook, StreamRejected};
use crate::bits::BitString;
use crate::interval::Enclosure;
use crate::lengths::KLengthSpec;

/// A finite prefix-free machine; an alias because a codebook already
/// carries exactly the table semantics.
pub type TableMachine = CodeBook;

/// Machine-relative k-complexity: the least k-length of an input mapped
/// to the target, or infinite when the target is not in the range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum KComplexity {
    Finite(u64),
    Infinite,
}

impl KComplexity {
    pub fn finite(self) -> Option<u64> {
        match self {
            KComplexity::Finite(v) => Some(v),
            KComplexity::Infinite => None,
        }
    }
}

impl fmt::Display for KComplexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KComplexity::Finite(v) => write!(f, "{}", v),
            KComplexity::Infinite => write!(f, "inf"),
        }
    }
}

impl CodeBook {
    /// Run the machine: if some codeword is a prefix of `input`, return
    /// that codeword's payload and the number of bits consumed.
    /// Prefix-freeness makes the match unique.
    pub fn decode(&self, input: &BitString) -> Option<(&BitString, usize)> {
        let mut prefix = BitString::empty();
        if let Some(payload) = self.payload_of(&prefix) {
            return Some((payload, 0));
        }
        for bit in input.iter() {
            prefix.push(bit);
            if let Some(payload) = self.payload_of(&prefix) {
                return Some((payload, prefix.len()));
            }
        }
        None
    }

    /// `K_M^{(k)}(target)`: minimum k-length over inputs producing
    /// `target`.
    pub fn k_complexity(&self, target: &BitString) -> KComplexity {
        self.entries()
            .filter(|(_, payload)| *payload == target)
            .map(|(code, _)| self.spec().k_length(code))
            .min()
            .map_or(KComplexity::Infinite, KComplexity::Finite)
    }

    /// Distinct outputs, sorted.
    pub fn range(&self) -> Vec<&BitString> {
        let set: BTreeSet<&BitString> = self.entries().map(|(_, p)| p).collect();
        set.into_iter().collect()
    }
}

/// Prefix-free encoding of a positive integer:
/// `0^{floor(log n)+1} 1 bin(n)` with `bin(n)` the shortest binary form
/// (leading 1). Panics if `n == 0`.
pub fn rho_encode(n: u64) -> BitString {
    assert!(n >= 1, "rho code is defined for n >= 1");
    let width = 64 - n.leading_zeros() as usize; // floor(log2 n) + 1
    let mut out = BitString::repeated(0, width);
    out.push(1);
    for i in (0..width).rev() {
        out.push(((n >> i) & 1) as u8);
    }
    out
}

/// Decoding failures for [`rho_decode`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoDecodeError {
    /// Ran out of bits before the code completed.
    Truncated,
    /// The code must start with at least one 0.
    MissingZeroPrefix,
    /// Binary payload started with 0, which no canonical code produces.
    NonCanonical,
    /// Value does not fit in 64 bits.
    TooLarge,
}

impl fmt::Display for RhoDecodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            RhoDecodeError::Truncated => "input ended inside the code",
            RhoDecodeError::MissingZeroPrefix => "code must start with a zero run",
            RhoDecodeError::NonCanonical => "binary payload has a leading zero",
            RhoDecodeError::TooLarge => "encoded value exceeds 64 bits",
        };
        write!(f, "{}", msg)
    }
}

impl core::error::Error for RhoDecodeError {}

/// Inverse of [`rho_encode`]; returns the value and the number of bits
/// consumed (the code may be followed by arbitrary data).
pub fn rho_decode(input: &BitString) -> Result<(u64, usize), RhoDecodeError> {
    let mut zeros = 0usize;
    loop {
        if zeros >= input.len() {
            return Err(RhoDecodeError::Truncated);
        }
        if input.bit(zeros) == 1 {
            break;
        }
        zeros += 1;
    }
    if zeros == 0 {
        return Err(RhoDecodeError::MissingZeroPrefix);
    }
    if zeros > 63 {
        return Err(RhoDecodeError::TooLarge);
    }
    let payload_start = zeros + 1;
    if payload_start + zeros > input.len() {
        return Err(RhoDecodeError::Truncated);
    }
    if input.bit(payload_start) == 0 {
        return Err(RhoDecodeError::NonCanonical);
    }
    let mut n = 0u64;
    for i in 0..zeros {
        n = (n << 1) | input.bit(payload_start + i) as u64;
    }
    Ok((n, payload_start + zeros))
}

/// A finite map `F : strings -> naturals` intended to satisfy the
/// k-information-content-measure condition `sum p_k^{F(s)} <= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Icm {
    k: u32,
    assignments: BTreeMap<BitString, u64>,
}

/// Two assignments for the same string when building an [`Icm`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuplicateAssignment {
    pub sigma: BitString,
}

impl fmt::Display for DuplicateAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "duplicate assignment for {:?}", self.sigma)
    }
}

impl core::error::Error for DuplicateAssignment {}

/// Compilation failure: the sum condition does not hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IcmError {
    InvalidSum,
    /// Unreachable when `validate` passed; kept for honest propagation.
    Budget(StreamRejected),
}

impl fmt::Display for IcmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IcmError::InvalidSum => write!(f, "sum of p_k^F(s) exceeds 1"),
            IcmError::Budget(e) => write!(f, "allocation failed: {}", e),
        }
    }
}

impl core::error::Error for IcmError {}

impl Icm {
    pub fn new(k: u32) -> Self {
        assert!(k >= 1);
        Icm {
            k,
            assignments: BTreeMap::new(),
        }
    }

    pub fn from_pairs(
        k: u32,
        pairs: impl IntoIterator<Item = (BitString, u64)>,
    ) -> Result<Self, DuplicateAssignment> {
        let mut icm = Icm::new(k);
        for (sigma, value) in pairs {
            if icm.assignments.contains_key(&sigma) {
                return Err(DuplicateAssignment { sigma });
            }
            icm.assignments.insert(sigma, value);
        }
        Ok(icm)
    }

    pub fn insert(&mut self, sigma: BitString, value: u64) -> Option<u64> {
        self.assignments.insert(sigma, value)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn assignments(&self) -> impl Iterator<Item = (&BitString, u64)> {
        self.assignments.iter().map(|(s, &v)| (s, v))
    }

    /// Exact check of `sum_{s in dom F} p_k^{F(s)} <= 1`.
    pub fn validate(&self) -> bool {
        let mut sum = AlgebraicReal::zero(self.k);
        for (_, value) in self.assignments() {
            sum = sum.add(&AlgebraicReal::p_pow(self.k, value));
        }
        sum.compare(&AlgebraicReal::one(self.k)) != Ordering::Greater
    }

    /// Build the machine with `M(code) = s` and `l_k(code) = F(s) + k`
    /// for every assignment, in ascending key order. The shifted budget
    /// always fits: `sum p^{F+k} = p^k sum p^F <= p^k`.
    pub fn compile(&self) -> Result<TableMachine, IcmError> {
        if !self.validate() {
            return Err(IcmError::InvalidSum);
        }
        let mut book = CodeBook::new(self.k);
        for (index, (sigma, value)) in self.assignments().enumerate() {
            book.try_request(value + self.k as u64, sigma.clone())
                .map_err(|e| {
                    IcmError::Budget(StreamRejected {
                        index,
                        requested_klen: e.requested_klen,
                    })
                })?;
        }
        Ok(book)
    }
}

/// A lazily refined enclosure of `log p_j / log p_k`, shared across the
/// many ceiling decisions one operation makes. Refinement recomputes at
/// doubled precision; the ratio is 1 on the diagonal and irrational off
/// it, so every integer comparison eventually resolves.
#[derive(Debug, Clone)]
pub(crate) struct RatioEnclosure {
    j: u32,
    k: u32,
    bits: u32,
    cached: Option<Enclosure>,
}

impl RatioEnclosure {
    pub(crate) fn new(j: u32, k: u32) -> Self {
        RatioEnclosure {
            j,
            k,
            bits: 64,
            cached: None,
        }
    }

    pub(crate) fn is_diagonal(&self) -> bool {
        self.j == self.k
    }

    pub(crate) fn get(&mut self) -> &Enclosure {
        if self.cached.is_none() {
            self.cached = Some(conversion_factor(self.j, self.k, self.bits));
        }
        self.cached.as_ref().unwrap()
    }

    fn refine(&mut self) -> bool {
        if self.bits >= 4096 {
            return false;
        }
        self.bits *= 2;
        self.cached = Some(conversion_factor(self.j, self.k, self.bits));
        true
    }

    /// `ceil(n * ratio)`.
    pub(crate) fn scaled_ceil(&mut self, n: u64) -> u64 {
        if self.is_diagonal() || n == 0 {
            return n;
        }
        let n_rat = BigRational::from(BigInt::from(n));
        loop {
            let scaled = self.get().scale(&n_rat);
            let lo = scaled.lo().ceil();
            let hi = scaled.hi().ceil();
            if lo == hi {
                return lo
                    .to_integer()
                    .to_u64()
                    .expect("scaled length fits in u64");
            }
            if !self.refine() {
                panic!(
                    "conversion-factor ceiling did not stabilize for j={}, k={}, n={n}",
                    self.j, self.k
                );
            }
        }
    }

    /// Decide `value < ratio * diff` for positive `diff`.
    pub(crate) fn value_below_scaled(&mut self, value: u64, diff: u64) -> bool {
        if self.is_diagonal() {
            return value < diff;
        }
        let diff_rat = BigRational::from(BigInt::from(diff));
        let v = BigRational::from(BigInt::from(value));
        loop {
            let threshold = self.get().scale(&diff_rat);
            if v < *threshold.lo() {
                return true;
            }
            if v >= *threshold.hi() {
                return false;
            }
            if !self.refine() {
                panic!(
                    "deficiency threshold did not separate for j={}, k={}",
                    self.j, self.k
                );
            }
        }
    }
}

/// `ceil(n * log p_j / log p_k)`, with the enclosure of the irrational
/// ratio refined until the ceiling is unambiguous. The diagonal is exact.
pub fn scaled_length_ceil(j: u32, k: u32, n: u64) -> u64 {
    RatioEnclosure::new(j, k).scaled_ceil(n)
}

/// Exact k-length of the two-part codeword for any string of j-length
/// `n`: the rho header plus the fixed body length
/// `m = ceil(n ratio) + 2k`. Panics if `n == 0`.
pub fn two_part_code_k_length(j: u32, k: u32, n: u64) -> u64 {
    TwoPartCoder::new(j, k).code_k_length(n)
}

/// Failures of the two-part codec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoPartError {
    /// Describe requires a nonempty string.
    EmptyInput,
    Rho(RhoDecodeError),
    /// The body after the header does not have the required k-length.
    BodyLengthMismatch,
    /// Input continues past the codeword.
    TrailingBits,
    /// The body's rank does not name a string of j-length `n`.
    RankOutOfRange,
}

impl fmt::Display for TwoPartError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoPartError::EmptyInput => write!(f, "cannot describe the empty string"),
            TwoPartError::Rho(e) => write!(f, "bad header: {}", e),
            TwoPartError::BodyLengthMismatch => write!(f, "body k-length mismatch"),
            TwoPartError::TrailingBits => write!(f, "trailing bits after the codeword"),
            TwoPartError::RankOutOfRange => write!(f, "body rank exceeds the source level"),
        }
    }
}

impl core::error::Error for TwoPartError {}

impl From<RhoDecodeError> for TwoPartError {
    fn from(e: RhoDecodeError) -> Self {
        TwoPartError::Rho(e)
    }
}

/// Two-part codec between j-length structure and k-length codewords,
/// holding a cached enclosure of the conversion ratio so repeated calls
/// do not recompute logarithms.
#[derive(Debug, Clone)]
pub struct TwoPartCoder {
    jspec: KLengthSpec,
    kspec: KLengthSpec,
    ratio: RatioEnclosure,
}

impl TwoPartCoder {
    pub fn new(j: u32, k: u32) -> Self {
        TwoPartCoder {
            jspec: KLengthSpec::new(j),
            kspec: KLengthSpec::new(k),
            ratio: RatioEnclosure::new(j, k),
        }
    }

    pub fn j(&self) -> u32 {
        self.jspec.k()
    }

    pub fn k(&self) -> u32 {
        self.kspec.k()
    }

    /// Body length `m = ceil(n ratio) + 2k` for source j-length `n`.
    pub fn body_length(&mut self, n: u64) -> u64 {
        self.ratio.scaled_ceil(n) + 2 * self.k() as u64
    }

    /// Exact k-length of the codeword for any source of j-length `n`.
    pub fn code_k_length(&mut self, n: u64) -> u64 {
        assert!(n >= 1, "two-part code requires a nonempty source string");
        self.kspec.k_length(&rho_encode(n)) + self.body_length(n)
    }

    /// Describe `s`: `rho(l_j(s))` followed by the rank of `s` within
    /// its j-level, re-expressed as a string of k-length
    /// `m = ceil(l_j(s) ratio) + 2k`. The body level always has room:
    /// `s_k^m >= q_k^{m-k} >= q_j^{l_j} q_k^k >= 2 q_j^{l_j} >= 2 s_j^{l_j}`.
    pub fn describe(&mut self, s: &BitString) -> Result<BitString, TwoPartError> {
        if s.is_empty() {
            return Err(TwoPartError::EmptyInput);
        }
        let n = self.jspec.k_length(s);
        let rank = self.jspec.llex_rank(s);
        let m = self.body_length(n);
        let body = self
            .kspec
            .llex_unrank(m, &rank)
            .expect("body level is large enough by the capacity bound");
        Ok(rho_encode(n).concat(&body))
    }

    /// Invert [`describe`](Self::describe); the input must be exactly
    /// one codeword.
    pub fn decode(&mut self, input: &BitString) -> Result<BitString, TwoPartError> {
        let (n, consumed) = rho_decode(input)?;
        let m = self.body_length(n);
        let mut cost = 0u64;
        let mut end = consumed;
        while cost < m {
            if end >= input.len() {
                return Err(TwoPartError::BodyLengthMismatch);
            }
            cost += self.kspec.cost(input.bit(end));
            end += 1;
        }
        if cost != m {
            return Err(TwoPartError::BodyLengthMismatch);
        }
        if end != input.len() {
            return Err(TwoPartError::TrailingBits);
        }
        let body = input.suffix_from(consumed);
        let rank = self.kspec.llex_rank(&body);
        if rank >= self.jspec.count_level(n) {
            return Err(TwoPartError::RankOutOfRange);
        }
        Ok(self
            .jspec
            .llex_unrank(n, &rank)
            .expect("rank checked against the level count"))
    }
}

/// One-shot convenience for [`TwoPartCoder::describe`].
pub fn two_part_describe(j: u32, k: u32, s: &BitString) -> Result<BitString, TwoPartError> {
    TwoPartCoder::new(j, k).describe(s)
}

/// One-shot convenience for [`TwoPartCoder::decode`].
pub fn two_part_decode(j: u32, k: u32, input: &BitString) -> Result<BitString, TwoPartError> {
    TwoPartCoder::new(j, k).decode(input)
}

/// One output of the machine, classified against the deficiency
/// threshold `K_M^{(k)}(s) < ratio (l_j(s) - n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeficiencyRow {
    pub sigma: BitString,
    pub k_complexity: u64,
    pub j_length: u64,
    pub member: bool,
}

/// Deficiency set of a finite machine with its certified measure bound.
#[derive(Debug, Clone)]
pub struct DeficiencyReport {
    pub j: u32,
    pub n: u64,
    /// One row per distinct machine output, sorted.
    pub rows: Vec<DeficiencyRow>,
    /// `lambda_j` of the union of member cylinders (exact, field `j`).
    pub set_measure: AlgebraicReal,
    /// `lambda_k(dom M)` (exact, field `k`).
    pub domain_measure: AlgebraicReal,
    /// Whether `lambda_j(S_n) <= q_j^{-n} lambda_k(dom M)` was certified.
    pub bound_holds: bool,
}

impl DeficiencyReport {
    pub fn members(&self) -> impl Iterator<Item = &BitString> {
        self.rows.iter().filter(|r| r.member).map(|r| &r.sigma)
    }
}

/// Compute `S_n = { s in range(M) : K_M^{(k)}(s) < ratio (l_j(s) - n) }`
/// and certify its `lambda_j`-measure against `q_j^{-n} lambda_k(dom M)`.
/// Exact comparison when `j` equals the machine's `k`; certified interval
/// refinement otherwise.
pub fn deficiency_set(machine: &TableMachine, j: u32, n: u64) -> DeficiencyReport {
    let k = machine.k();
    let jspec = KLengthSpec::new(j);
    let mut ratio = RatioEnclosure::new(j, k);
    let mut rows = Vec::new();
    for sigma in machine.range() {
        let complexity = machine
            .k_complexity(sigma)
            .finite()
            .expect("outputs of the machine have finite complexity");
        let j_length = jspec.k_length(sigma);
        // Threshold ratio (l_j - n) is nonpositive when l_j <= n, and
        // complexity is never negative.
        let member = j_length > n && ratio.value_below_scaled(complexity, j_length - n);
        rows.push(DeficiencyRow {
            sigma: sigma.clone(),
            k_complexity: complexity,
            j_length,
            member,
        });
    }
    let members: Vec<&BitString> = rows.iter().filter(|r| r.member).map(|r| &r.sigma).collect();
    let set_measure = measure_of_union(j, &members);
    let domain_measure = machine.spent().clone();
    let scale = AlgebraicReal::p_pow(j, n); // q_j^{-n}
    let bound_holds = certify_bound(&set_measure, &scale, &domain_measure);
    DeficiencyReport {
        j,
        n,
        rows,
        set_measure,
        domain_measure,
        bound_holds,
    }
}

/// `lambda_j` of the union of cylinders: drop strings extending another
/// member (their cylinders are contained), then sum the now-disjoint
/// cylinder measures exactly.
fn measure_of_union(j: u32, members: &[&BitString]) -> AlgebraicReal {
    let jspec = KLengthSpec::new(j);
    let mut sorted: Vec<&BitString> = members.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut total = AlgebraicReal::zero(j);
    let mut last_kept: Option<&BitString> = None;
    for s in sorted {
        if let Some(kept) = last_kept {
            if kept.is_prefix_of(s) {
                continue;
            }
        }
        total = total.add(&AlgebraicReal::p_pow(j, jspec.k_length(s)));
        last_kept = Some(s);
    }
    total
}

/// Certify `set_measure <= scale * domain_measure` where `scale` lives in
/// field `j` and `domain_measure` in field `k`. Strict inequality holds
/// whenever the set is nonempty, so interval refinement terminates.
fn certify_bound(
    set_measure: &AlgebraicReal,
    scale: &AlgebraicReal,
    domain_measure: &AlgebraicReal,
) -> bool {
    if set_measure.is_zero() {
        return true; // rhs is a product of nonnegative measures
    }
    if scale.k() == domain_measure.k() {
        let rhs = scale.mul(domain_measure);
        return set_measure.compare(&rhs) != Ordering::Greater;
    }
    let mut bits = 64;
    while bits <= 8192 {
        let lhs = set_measure.enclosure(bits);
        let rhs = scale.enclosure(bits).mul(&domain_measure.enclosure(bits));
        if lhs.hi() <= rhs.lo() {
            return true;
        }
        if lhs.lo() > rhs.hi() {
            return false;
        }
        bits *= 2;
    }
    panic!("deficiency bound certification did not converge");
}
