// SPDX-License-Identifier: Apache-2.0

//! Text formats: JSON-lines request streams, JSON codebooks and
//! information content measures, CSV tables and reports. Everything is
//! rendered deterministically (sorted entries, fixed decimal widths) so
//! outputs are diffable regression fixtures.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use klen_core::algebraic::{conversion_table, root_table};
use klen_core::decimal_round_half_even;
use klen_core::lab::RateReport;
use klen_core::machines::DeficiencyReport;
use klen_core::{BitString, CodeBook, Icm, RequestStream};

/// Decimal places used for report fields.
pub const REPORT_DIGITS: u32 = 9;

#[derive(Debug, Serialize, Deserialize)]
struct RequestLine {
    klen: u64,
    payload: String,
}

/// Parse a JSON-lines request stream (one `{"klen":..,"payload":".."}`
/// object per line; blank lines ignored) against a fixed `k`.
pub fn parse_request_stream(k: u32, text: &str) -> Result<RequestStream> {
    let mut stream = RequestStream::new(k);
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let parsed: RequestLine = serde_json::from_str(line)
            .with_context(|| format!("request line {}", idx + 1))?;
        let payload: BitString = parsed
            .payload
            .parse()
            .map_err(|e| anyhow::anyhow!("request line {}: {e}", idx + 1))?;
        stream.push(parsed.klen, payload);
    }
    Ok(stream)
}

pub fn render_request_stream(stream: &RequestStream) -> String {
    let mut out = String::new();
    for request in &stream.requests {
        let line = serde_json::to_string(&RequestLine {
            klen: request.klen,
            payload: request.payload.to_string(),
        })
        .expect("request lines always serialize");
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct CodeBookEntry {
    code: String,
    output: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct CodeBookFile {
    k: u32,
    entries: Vec<CodeBookEntry>,
}

/// Render a codebook as JSON with entries in codeword order.
pub fn render_codebook(book: &CodeBook) -> String {
    let file = CodeBookFile {
        k: book.k(),
        entries: book
            .entries()
            .map(|(code, output)| CodeBookEntry {
                code: code.to_string(),
                output: output.to_string(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("codebooks always serialize");
    s.push('\n');
    s
}

/// Load a codebook; entries need not be prefix-free (verification is a
/// separate step), but duplicate codewords and non-bit characters are
/// rejected.
pub fn parse_codebook(text: &str) -> Result<CodeBook> {
    let file: CodeBookFile = serde_json::from_str(text).context("codebook JSON")?;
    if file.k < 1 {
        bail!("codebook k must be at least 1");
    }
    let mut entries = Vec::with_capacity(file.entries.len());
    for e in &file.entries {
        let code: BitString = e
            .code
            .parse()
            .map_err(|err| anyhow::anyhow!("codeword {:?}: {err}", e.code))?;
        let output: BitString = e
            .output
            .parse()
            .map_err(|err| anyhow::anyhow!("output {:?}: {err}", e.output))?;
        entries.push((code, output));
    }
    CodeBook::from_entries(file.k, entries).map_err(|e| anyhow::anyhow!("{e}"))
}

#[derive(Debug, Serialize, Deserialize)]
struct IcmAssignment {
    sigma: String,
    value: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct IcmFile {
    k: u32,
    assignments: Vec<IcmAssignment>,
}

pub fn parse_icm(text: &str) -> Result<Icm> {
    let file: IcmFile = serde_json::from_str(text).context("icm JSON")?;
    if file.k < 1 {
        bail!("icm k must be at least 1");
    }
    let mut pairs = Vec::with_capacity(file.assignments.len());
    for a in &file.assignments {
        let sigma: BitString = a
            .sigma
            .parse()
            .map_err(|err| anyhow::anyhow!("sigma {:?}: {err}", a.sigma))?;
        pairs.push((sigma, a.value));
    }
    Icm::from_pairs(file.k, pairs).map_err(|e| anyhow::anyhow!("{e}"))
}

pub fn render_icm(icm: &Icm) -> String {
    let file = IcmFile {
        k: icm.k(),
        assignments: icm
            .assignments()
            .map(|(sigma, value)| IcmAssignment {
                sigma: sigma.to_string(),
                value,
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("icms always serialize");
    s.push('\n');
    s
}

/// `k,p_k` rows for the published k values, 5 decimals.
pub fn root_table_csv(precision_bits: u32) -> String {
    let mut out = String::from("k,p_k\n");
    for (k, value) in root_table(precision_bits) {
        out.push_str(&format!("{k},{value}\n"));
    }
    out
}

/// `j,k,ratio` rows for j,k <= 5, 4 decimals.
pub fn conversion_table_csv(precision_bits: u32) -> String {
    let mut out = String::from("j,k,ratio\n");
    for (j, k, value) in conversion_table(precision_bits) {
        out.push_str(&format!("{j},{k},{value}\n"));
    }
    out
}

/// One CSV row per report, exact rationals rendered at fixed width.
pub fn rate_report_csv(reports: &[RateReport]) -> String {
    let mut out = String::from(
        "j,k,seed,n,zero_frequency,length_rate,upper_bound_rate,target_lln,target_rate,target_dim\n",
    );
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.j,
            r.k,
            r.seed,
            r.n,
            decimal_round_half_even(&r.zero_frequency, REPORT_DIGITS),
            decimal_round_half_even(&r.length_rate, REPORT_DIGITS),
            decimal_round_half_even(&r.upper_bound_rate, REPORT_DIGITS),
            r.target_zero_frequency.midpoint_decimal(REPORT_DIGITS),
            r.target_length_rate.midpoint_decimal(REPORT_DIGITS),
            r.target_dimension.midpoint_decimal(REPORT_DIGITS),
        ));
    }
    out
}

/// `sigma,k_complexity,l_j,member` rows over the machine's range.
pub fn deficiency_csv(report: &DeficiencyReport) -> String {
    let mut out = String::from("sigma,k_complexity,l_j,member\n");
    for row in &report.rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.sigma, row.k_complexity, row.j_length, row.member
        ));
    }
    out
}
