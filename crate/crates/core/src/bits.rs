//! Ordered bit sequences with exact MSB-first byte packing.
//!
//! All multi-bit fields are written most significant bit first, and the
//! final byte of a packed stream is zero-padded. This layout is shared by
//! the reduction codec payloads and by embedded messages.

use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// A growable bit sequence packed MSB-first into bytes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BitStream {
    bytes: Vec<u8>,
    len: usize,
}

impl BitStream {
    pub fn new() -> Self {
        BitStream::default()
    }

    /// Wraps whole bytes as a bit stream of `bytes.len() * 8` bits.
    pub fn from_bytes(bytes: &[u8]) -> Self {
        BitStream {
            len: bytes.len() * 8,
            bytes: bytes.to_vec(),
        }
    }

    /// Reinterprets packed bytes as a stream of exactly `len` bits.
    pub fn from_packed(bytes: Vec<u8>, len: usize) -> Result<Self> {
        if bytes.len() != (len + 7) / 8 {
            return Err(Error::BadContainer(format!(
                "{} bytes cannot hold exactly {len} bits",
                bytes.len()
            )));
        }
        Ok(BitStream { bytes, len })
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut out = BitStream::new();
        for b in bits {
            out.push_bit(b);
        }
        out
    }

    /// Parses a string of '0'/'1' characters; other characters are ignored,
    /// which allows the spaced notation used in test vectors.
    pub fn from_binary_text(text: &str) -> Self {
        BitStream::from_bits(text.chars().filter_map(|c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        }))
    }

    /// Uniformly random bits from a seeded generator.
    pub fn random(len: usize, seed: u64) -> Self {
        let mut rng = SplitMix64::new(seed);
        BitStream::from_bits((0..len).map(|_| rng.next_u64() & 1 == 1))
    }

    /// Random bits where each bit is 0 with probability `zero_fraction`.
    pub fn random_biased(len: usize, zero_fraction: f64, seed: u64) -> Self {
        let mut rng = SplitMix64::new(seed);
        BitStream::from_bits((0..len).map(|_| rng.next_f64() >= zero_fraction))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn push_bit(&mut self, bit: bool) {
        let byte = self.len / 8;
        if byte == self.bytes.len() {
            self.bytes.push(0);
        }
        if bit {
            self.bytes[byte] |= 0x80 >> (self.len % 8);
        }
        self.len += 1;
    }

    /// Appends the low `width` bits of `value`, most significant first.
    pub fn push_bits(&mut self, value: u32, width: u32) {
        debug_assert!(width <= 32);
        debug_assert!(width == 32 || value < 1 << width);
        for shift in (0..width).rev() {
            self.push_bit(value >> shift & 1 == 1);
        }
    }

    pub fn extend(&mut self, other: &BitStream) {
        for i in 0..other.len {
            self.push_bit(other.bit(i));
        }
    }

    pub fn bit(&self, index: usize) -> bool {
        assert!(index < self.len, "bit index {index} out of range");
        self.bytes[index / 8] & (0x80 >> (index % 8)) != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|i| self.bit(i))
    }

    pub fn count_ones(&self) -> usize {
        self.iter().filter(|&b| b).count()
    }

    /// Packed bytes, final byte zero-padded.
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Whole bytes of an 8-bit-aligned stream.
    pub fn to_bytes_exact(&self) -> Result<Vec<u8>> {
        if self.len % 8 != 0 {
            return Err(Error::BadContainer(format!(
                "stream of {} bits is not byte aligned",
                self.len
            )));
        }
        Ok(self.bytes.clone())
    }

    pub fn reader(&self) -> BitReader<'_> {
        BitReader {
            stream: self,
            pos: 0,
        }
    }
}

impl std::fmt::Display for BitStream {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Sequential reader over a [`BitStream`].
#[derive(Debug, Clone)]
pub struct BitReader<'a> {
    stream: &'a BitStream,
    pos: usize,
}

impl BitReader<'_> {
    pub fn position(&self) -> usize {
        self.pos
    }

    pub fn remaining(&self) -> usize {
        self.stream.len() - self.pos
    }

    pub fn read_bit(&mut self) -> Result<bool> {
        if self.pos >= self.stream.len() {
            return Err(Error::TruncatedStream);
        }
        let bit = self.stream.bit(self.pos);
        self.pos += 1;
        Ok(bit)
    }

    /// Reads `width` bits MSB-first into the low bits of the result.
    pub fn read_bits(&mut self, width: u32) -> Result<u32> {
        debug_assert!(width <= 32);
        let mut value = 0u32;
        for _ in 0..width {
            value = value << 1 | self.read_bit()? as u32;
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn msb_first_packing() {
        let mut s = BitStream::new();
        s.push_bit(true);
        assert_eq!(s.as_bytes(), &[0b1000_0000]);
        s.push_bits(0b0110, 4);
        assert_eq!(s.as_bytes(), &[0b1011_0000]);
        assert_eq!(s.len(), 5);
        s.push_bits(0b101, 3);
        assert_eq!(s.as_bytes(), &[0b1011_0101]);
    }

    #[test]
    fn reader_round_trip() {
        let mut s = BitStream::new();
        s.push_bits(22, 8);
        s.push_bits(0b100, 3);
        s.push_bits(13, 4);
        let mut r = s.reader();
        assert_eq!(r.read_bits(8).unwrap(), 22);
        assert_eq!(r.read_bits(3).unwrap(), 0b100);
        assert_eq!(r.read_bits(4).unwrap(), 13);
        assert_eq!(r.read_bit().unwrap_err(), Error::TruncatedStream);
    }

    #[test]
    fn binary_text_ignores_spacing() {
        let s = BitStream::from_binary_text("0 0001 0110");
        assert_eq!(s.len(), 9);
        assert_eq!(s.to_string(), "000010110");
    }

    #[test]
    fn byte_round_trip() {
        let data = [0xDE, 0xAD, 0xBE, 0xEF];
        let s = BitStream::from_bytes(&data);
        assert_eq!(s.len(), 32);
        assert_eq!(s.to_bytes_exact().unwrap(), data);
    }

    #[test]
    fn biased_stream_is_biased() {
        let s = BitStream::random_biased(10_000, 0.58, 7);
        let zeros = s.len() - s.count_ones();
        let frac = zeros as f64 / s.len() as f64;
        assert!((frac - 0.58).abs() < 0.02, "zero fraction {frac}");
    }
}
