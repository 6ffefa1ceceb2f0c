//! Text forms for words and masks.
//!
//! Bit-strings list `x_1` first. Hex strings carry a `0x` prefix and pack
//! four coordinates per digit with `x_1` as the most significant bit of
//! the first digit, so `0x8` is `1000` and `0x0001` is a single one at
//! `x_16`. A received word may mark erasures inline with `?`.

use anyhow::{bail, Context, Result};
use rmmld_core::Bits;

/// Parses a word that may contain `?` erasure markers (bit-string form)
/// or a `0x`-prefixed hex string (no erasures expressible). Returns
/// `(bits, erasure_mask)`.
pub fn parse_word(s: &str, expected_len: usize) -> Result<(Bits, Bits)> {
    let s = s.trim();
    if let Some(hex) = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        let bits = parse_hex(hex, expected_len)?;
        let mask = Bits::zeros(expected_len);
        return Ok((bits, mask));
    }
    if s.len() != expected_len {
        bail!("expected {} coordinates, got {}", expected_len, s.len());
    }
    let mut bits = Bits::zeros(expected_len);
    let mut mask = Bits::zeros(expected_len);
    for (i, c) in s.chars().enumerate() {
        match c {
            '0' => {}
            '1' => bits.set(i, true),
            '?' => mask.set(i, true),
            _ => bail!("invalid character {c:?} at position {} (want 0, 1, or ?)", i + 1),
        }
    }
    Ok((bits, mask))
}

/// Parses a plain bit-string (no erasures allowed).
pub fn parse_bits(s: &str, expected_len: usize) -> Result<Bits> {
    let (bits, mask) = parse_word(s, expected_len)?;
    if !mask.is_zero() {
        bail!("erasure markers are not allowed here");
    }
    Ok(bits)
}

fn parse_hex(hex: &str, expected_len: usize) -> Result<Bits> {
    if expected_len % 4 != 0 {
        bail!("hex form needs a length divisible by 4, code length is {expected_len}");
    }
    if hex.len() * 4 != expected_len {
        bail!(
            "expected {} hex digits for {} coordinates, got {}",
            expected_len / 4,
            expected_len,
            hex.len()
        );
    }
    let mut bits = Bits::zeros(expected_len);
    for (d, c) in hex.chars().enumerate() {
        let nibble = c
            .to_digit(16)
            .with_context(|| format!("invalid hex digit {c:?}"))? as u8;
        for b in 0..4 {
            if (nibble >> (3 - b)) & 1 == 1 {
                bits.set(d * 4 + b, true);
            }
        }
    }
    Ok(bits)
}

/// Formats bits as `0x...` with `x_1` as the MSB of the first digit.
pub fn to_hex(bits: &Bits) -> Result<String> {
    if bits.len() % 4 != 0 {
        bail!("hex form needs a length divisible by 4, got {}", bits.len());
    }
    let mut out = String::with_capacity(2 + bits.len() / 4);
    out.push_str("0x");
    for d in 0..bits.len() / 4 {
        let mut nibble = 0u32;
        for b in 0..4 {
            if bits.get(d * 4 + b) {
                nibble |= 1 << (3 - b);
            }
        }
        out.push(char::from_digit(nibble, 16).unwrap());
    }
    Ok(out)
}

/// Parses a comma-separated list of 1-based coordinate indices.
pub fn parse_indices(s: &str, max: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let idx: usize = part
            .parse()
            .with_context(|| format!("invalid index {part:?}"))?;
        if idx < 1 || idx > max {
            bail!("index {idx} out of range 1..={max}");
        }
        out.push(idx);
    }
    Ok(out)
}
