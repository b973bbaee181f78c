// SPDX-License-Identifier: Apache-2.0

//! Online prefix-free codeword allocation under the exact measure budget
//! `p_k^k`.
//!
//! A request asks for a codeword of k-length exactly `r`. The budget test
//! `spent + p_k^r <= p_k^k` is decided in exact algebraic arithmetic, and
//! any request that passes it is guaranteed a codeword: if the level
//! `S_k^r` were fully blocked by existing codewords, those codewords
//! alone would already carry measure at least `p_k^k`. The chosen
//! codeword is always the llex-least free string of the requested
//! k-length, so allocation is deterministic.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::algebraic::AlgebraicReal;
use crate::bits::{Bit, BitString};
use crate::lengths::KLengthSpec;
use crate::root::RootEnclosure;

/// One codeword request: a k-length and the payload the eventual machine
/// should output for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Request {
    pub klen: u64,
    pub payload: BitString,
}

/// An ordered sequence of requests against a fixed `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RequestStream {
    pub k: u32,
    pub requests: Vec<Request>,
}

impl RequestStream {
    pub fn new(k: u32) -> Self {
        assert!(k >= 1);
        RequestStream {
            k,
            requests: Vec::new(),
        }
    }

    pub fn push(&mut self, klen: u64, payload: BitString) {
        self.requests.push(Request { klen, payload });
    }
}

/// Binary trie over the allocated codewords; terminal nodes are
/// codewords. Every node lies on a path to some terminal.
#[derive(Debug, Clone, Default)]
struct TrieNode {
    children: [Option<alloc::boxed::Box<TrieNode>>; 2],
    terminal: bool,
}

impl TrieNode {
    fn insert(&mut self, bits: &[Bit]) {
        let mut node = self;
        for &b in bits {
            node = node.children[b as usize].get_or_insert_with(Default::default);
        }
        node.terminal = true;
    }

    fn child(&self, bit: Bit) -> Option<&TrieNode> {
        self.children[bit as usize].as_deref()
    }
}

/// A prefix-free codebook with its exact spent measure; doubles as a
/// finite table machine (domain = codewords, output = payloads).
#[derive(Debug, Clone)]
pub struct CodeBook {
    spec: KLengthSpec,
    entries: BTreeMap<BitString, BitString>,
    trie: TrieNode,
    spent: AlgebraicReal,
    root: RootEnclosure,
}

/// A request whose cost would push the book past `p_k^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetExceeded {
    pub requested_klen: u64,
}

impl fmt::Display for BudgetExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "request of k-length {} exceeds the remaining budget",
            self.requested_klen
        )
    }
}

impl core::error::Error for BudgetExceeded {}

/// Stream allocation failure: the index of the first refused request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StreamRejected {
    pub index: usize,
    pub requested_klen: u64,
}

impl fmt::Display for StreamRejected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "request {} (k-length {}) exceeds the budget",
            self.index, self.requested_klen
        )
    }
}

impl core::error::Error for StreamRejected {}

/// Two entries share a codeword (only possible when loading raw entries).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuplicateCodeword {
    pub codeword: BitString,
}

impl fmt::Display for DuplicateCodeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "duplicate codeword {:?}", self.codeword)
    }
}

impl core::error::Error for DuplicateCodeword {}

impl CodeBook {
    /// Empty book over `l_k`; remaining budget is the full `p_k^k`.
    pub fn new(k: u32) -> Self {
        CodeBook {
            spec: KLengthSpec::new(k),
            entries: BTreeMap::new(),
            trie: TrieNode::default(),
            spent: AlgebraicReal::zero(k),
            root: RootEnclosure::new(k),
        }
    }

    /// Rebuild a book from raw entries (for example a loaded file). The
    /// entries are *not* required to be prefix-free — `verify` reports
    /// that — but duplicate codewords are rejected.
    pub fn from_entries(
        k: u32,
        entries: impl IntoIterator<Item = (BitString, BitString)>,
    ) -> Result<Self, DuplicateCodeword> {
        let mut book = CodeBook::new(k);
        for (code, payload) in entries {
            if book.entries.contains_key(&code) {
                return Err(DuplicateCodeword { codeword: code });
            }
            let cost = AlgebraicReal::p_pow(k, book.spec.k_length(&code));
            book.spent = book.spent.add(&cost);
            book.trie.insert(code.bits());
            book.entries.insert(code, payload);
        }
        Ok(book)
    }

    pub fn k(&self) -> u32 {
        self.spec.k()
    }

    pub fn spec(&self) -> &KLengthSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&BitString, &BitString)> {
        self.entries.iter()
    }

    pub fn payload_of(&self, codeword: &BitString) -> Option<&BitString> {
        self.entries.get(codeword)
    }

    /// Exact measure already committed: `sum p_k^{l_k(codeword)}`.
    pub fn spent(&self) -> &AlgebraicReal {
        &self.spent
    }

    /// The total budget `p_k^k = q_k^{-k}`.
    pub fn budget(&self) -> AlgebraicReal {
        AlgebraicReal::p_pow(self.k(), self.k() as u64)
    }

    /// Accept the request if it fits the exact budget, returning the
    /// llex-least free codeword of k-length exactly `klen`; otherwise
    /// leave the book untouched.
    pub fn try_request(
        &mut self,
        klen: u64,
        payload: BitString,
    ) -> Result<BitString, BudgetExceeded> {
        let cost = AlgebraicReal::p_pow(self.k(), klen);
        let after = self.spent.add(&cost);
        if after.compare_with(&self.budget(), &mut self.root) == Ordering::Greater {
            return Err(BudgetExceeded {
                requested_klen: klen,
            });
        }
        let codeword = self
            .find_llex_least_free(klen)
            .expect("a free codeword exists whenever the budget check passes");
        self.trie.insert(codeword.bits());
        self.entries.insert(codeword.clone(), payload);
        self.spent = after;
        Ok(codeword)
    }

    /// Llex-least string of k-length `klen` incomparable with every
    /// codeword, or `None` if the level is fully blocked.
    fn find_llex_least_free(&self, klen: u64) -> Option<BitString> {
        let c0 = self.spec.cost(0);
        let c1 = self.spec.cost(1);
        // Depth-first in llex order over the level. The moment the walk
        // steps off the codeword trie the llex-least completion is the
        // rank-0 string of the residual level, so only trie nodes are
        // ever explored.
        let mut prefix = BitString::empty();
        let mut stack: Vec<(usize, Bit, u64, Option<&TrieNode>)> = Vec::new();
        let seed_or_finish = |node: Option<&TrieNode>,
                                  residual: u64,
                                  prefix: &BitString|
         -> Option<BitString> {
            match node {
                None => {
                    let tail = self
                        .spec
                        .llex_unrank(residual, &BigUint::zero())
                        .expect("every level is nonempty");
                    Some(prefix.concat(&tail))
                }
                Some(_) => None,
            }
        };
        // Root: the empty prefix is off-trie only when the book is empty.
        if self.entries.is_empty() {
            return seed_or_finish(None, klen, &prefix);
        }
        let root = &self.trie;
        if root.terminal {
            return None; // the empty codeword blocks everything
        }
        if klen >= c1 {
            stack.push((0, 1, klen - c1, root.child(1)));
        }
        if klen >= c0 {
            stack.push((0, 0, klen - c0, root.child(0)));
        }
        while let Some((rewind, bit, residual, node)) = stack.pop() {
            while prefix.len() > rewind {
                prefix.pop();
            }
            prefix.push(bit);
            let node = match node {
                None => return seed_or_finish(None, residual, &prefix),
                Some(node) => node,
            };
            if node.terminal {
                continue; // extends an allocated codeword
            }
            if residual == 0 {
                // On-trie interior node: some codeword strictly extends
                // this string, so it is blocked.
                continue;
            }
            let base = prefix.len();
            if residual >= c1 {
                stack.push((base, 1, residual - c1, node.child(1)));
            }
            if residual >= c0 {
                stack.push((base, 0, residual - c0, node.child(0)));
            }
        }
        None
    }

    /// Structural report: prefix-freeness, spent-consistency, budget.
    pub fn verify(&self) -> VerifyReport {
        self.verify_report(None)
    }

    /// Like [`verify`](Self::verify) but additionally checks that the
    /// entries realize exactly the requests of `stream` (as a multiset of
    /// `(k-length, payload)` pairs).
    pub fn verify_against(&self, stream: &RequestStream) -> VerifyReport {
        self.verify_report(Some(stream))
    }

    fn verify_report(&self, stream: Option<&RequestStream>) -> VerifyReport {
        let mut prefix_violations = Vec::new();
        let codes: Vec<&BitString> = self.entries.keys().collect();
        // Sorted order puts a prefix immediately before its extensions,
        // so adjacent checks find every violation class.
        for pair in codes.windows(2) {
            if pair[0].is_prefix_of(pair[1]) {
                prefix_violations.push(((*pair[0]).clone(), (*pair[1]).clone()));
            }
        }
        let mut recomputed = AlgebraicReal::zero(self.k());
        for code in self.entries.keys() {
            recomputed =
                recomputed.add(&AlgebraicReal::p_pow(self.k(), self.spec.k_length(code)));
        }
        let spent_consistent = recomputed.eq_value(&self.spent);
        let within_budget = recomputed.compare(&self.budget()) != Ordering::Greater;
        let stream_matches = stream.map(|s| {
            let mut got: Vec<(u64, &BitString)> = self
                .entries
                .iter()
                .map(|(code, payload)| (self.spec.k_length(code), payload))
                .collect();
            let mut want: Vec<(u64, &BitString)> = s
                .requests
                .iter()
                .map(|r| (r.klen, &r.payload))
                .collect();
            got.sort();
            want.sort();
            s.k == self.k() && got == want
        });
        VerifyReport {
            prefix_violations,
            spent_consistent,
            within_budget,
            stream_matches,
        }
    }
}

/// Process every request in order; returns the finished book or the
/// index of the first refused request. Deterministic: identical streams
/// yield identical books, and the first codeword of a fresh book is the
/// all-zero string of the first requested k-length.
pub fn allocate_stream(stream: &RequestStream) -> Result<CodeBook, StreamRejected> {
    let mut book = CodeBook::new(stream.k);
    for (index, request) in stream.requests.iter().enumerate() {
        book.try_request(request.klen, request.payload.clone())
            .map_err(|e| StreamRejected {
                index,
                requested_klen: e.requested_klen,
            })?;
    }
    Ok(book)
}

/// Result of [`CodeBook::verify`] / [`CodeBook::verify_against`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub prefix_violations: Vec<(BitString, BitString)>,
    pub spent_consistent: bool,
    pub within_budget: bool,
    /// `None` when no stream was supplied for cross-checking.
    pub stream_matches: Option<bool>,
}

impl VerifyReport {
    pub fn all_ok(&self) -> bool {
        self.prefix_violations.is_empty()
            && self.spent_consistent
            && self.within_budget
            && self.stream_matches.unwrap_or(true)
    }
}

/// The oracle instance would take too long to search exhaustively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleTooLarge {
    pub estimated_nodes: BigUint,
}

impl fmt::Display for OracleTooLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "feasibility instance too large (~{} search nodes)",
            self.estimated_nodes
        )
    }
}

impl core::error::Error for OracleTooLarge {}

/// Ground-truth feasibility by exhaustive search: can some prefix-free
/// set realize exactly the requested k-lengths using strings of standard
/// length at most `max_std_length`?
///
/// Note any string of k-length `r` has standard length at most `r`, so
/// passing `max_std_length >= max(lengths)` makes the search complete.
/// The backtracking search carries a node budget; instances that blow
/// through it are refused rather than left to run forever.
pub fn feasibility_oracle(
    k: u32,
    lengths: &[u64],
    max_std_length: u64,
) -> Result<bool, OracleTooLarge> {
    const MAX_NODES: u64 = 10_000_000;
    let spec = KLengthSpec::new(k);
    if lengths.is_empty() {
        return Ok(true);
    }
    // Group equal lengths so permutations of identical requests are not
    // re-explored.
    let mut sorted = lengths.to_vec();
    sorted.sort_unstable();
    let mut groups: Vec<(u64, usize)> = Vec::new();
    for &r in &sorted {
        match groups.last_mut() {
            Some((len, mult)) if *len == r => *mult += 1,
            _ => groups.push((r, 1)),
        }
    }
    let mut candidates: Vec<Vec<BitString>> = Vec::with_capacity(groups.len());
    for &(r, mult) in &groups {
        let level = spec
            .enumerate_level(r, MAX_NODES)
            .map_err(|e| OracleTooLarge {
                estimated_nodes: e.count,
            })?;
        let usable: Vec<BitString> = level
            .into_iter()
            .filter(|s| s.len() as u64 <= max_std_length)
            .collect();
        if usable.len() < mult {
            return Ok(false);
        }
        candidates.push(usable);
    }
    let mut chosen: Vec<BitString> = Vec::with_capacity(lengths.len());
    let mut nodes = 0u64;
    search_groups(&groups, &candidates, 0, 0, &mut chosen, &mut nodes, MAX_NODES).ok_or(
        OracleTooLarge {
            estimated_nodes: BigUint::from(nodes),
        },
    )
}

/// `None` means the node budget ran out before the search concluded.
#[allow(clippy::too_many_arguments)]
fn search_groups(
    groups: &[(u64, usize)],
    candidates: &[Vec<BitString>],
    group: usize,
    start: usize,
    chosen: &mut Vec<BitString>,
    nodes: &mut u64,
    max_nodes: u64,
) -> Option<bool> {
    if group == groups.len() {
        return Some(true);
    }
    let (_, mult) = groups[group];
    let done_in_group = chosen.len()
        - groups[..group]
            .iter()
            .map(|&(_, m)| m)
            .sum::<usize>();
    if done_in_group == mult {
        return search_groups(groups, candidates, group + 1, 0, chosen, nodes, max_nodes);
    }
    let pool = &candidates[group];
    for i in start..pool.len() {
        *nodes += 1;
        if *nodes > max_nodes {
            return None;
        }
        let cand = &pool[i];
        if chosen.iter().any(|c| c.is_comparable_with(cand)) {
            continue;
        }
        chosen.push(cand.clone());
        match search_groups(groups, candidates, group, i + 1, chosen, nodes, max_nodes) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => return None,
        }
        chosen.pop();
    }
    Some(false)
}
