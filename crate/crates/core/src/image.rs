//! Grayscale raster images at 8 or 16 bits per pixel.

use crate::bits::BitStream;
use crate::error::{Error, Result};

/// Pixel bit depth. Samples are stored as `u16` regardless of depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BitDepth {
    Eight,
    Sixteen,
}

impl BitDepth {
    /// Bits per pixel sample.
    pub fn bits(self) -> u32 {
        match self {
            BitDepth::Eight => 8,
            BitDepth::Sixteen => 16,
        }
    }

    /// Largest representable sample value (255 or 65535).
    pub fn max_value(self) -> u16 {
        match self {
            BitDepth::Eight => u8::MAX as u16,
            BitDepth::Sixteen => u16::MAX,
        }
    }

    pub fn from_bits(bits: u32) -> Result<Self> {
        match bits {
            8 => Ok(BitDepth::Eight),
            16 => Ok(BitDepth::Sixteen),
            _ => Err(Error::BadImageFile(format!("unsupported bit depth {bits}"))),
        }
    }
}

/// A width x height grayscale raster, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    depth: BitDepth,
    pixels: Vec<u16>,
}

impl GrayImage {
    /// All-zero image.
    pub fn new(width: usize, height: usize, depth: BitDepth) -> Self {
        GrayImage {
            width,
            height,
            depth,
            pixels: vec![0; width * height],
        }
    }

    /// Builds an image from row-major samples, checking count and range.
    pub fn from_pixels(
        width: usize,
        height: usize,
        depth: BitDepth,
        pixels: Vec<u16>,
    ) -> Result<Self> {
        if pixels.len() != width * height {
            return Err(Error::BadImageFile(format!(
                "expected {} samples, got {}",
                width * height,
                pixels.len()
            )));
        }
        let max = depth.max_value();
        if let Some(&bad) = pixels.iter().find(|&&p| p > max) {
            return Err(Error::ValueOutOfRange {
                value: bad as u32,
                max: max as u32,
            });
        }
        Ok(GrayImage {
            width,
            height,
            depth,
            pixels,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn depth(&self) -> BitDepth {
        self.depth
    }

    pub fn pixel_count(&self) -> usize {
        self.pixels.len()
    }

    pub fn get(&self, x: usize, y: usize) -> u16 {
        self.pixels[y * self.width + x]
    }

    pub fn set(&mut self, x: usize, y: usize, value: u16) {
        debug_assert!(value <= self.depth.max_value());
        self.pixels[y * self.width + x] = value;
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.pixels
    }

    pub fn as_mut_slice(&mut self) -> &mut [u16] {
        &mut self.pixels
    }

    /// Raw raster as a bit stream: row-major pixels, each written
    /// MSB-first in `depth.bits()` bits.
    pub fn raster_bits(&self) -> BitStream {
        let mut out = BitStream::new();
        let width = self.depth.bits();
        for &p in &self.pixels {
            out.push_bits(p as u32, width);
        }
        out
    }

    /// Inverse of [`raster_bits`](Self::raster_bits).
    pub fn from_raster_bits(
        width: usize,
        height: usize,
        depth: BitDepth,
        bits: &BitStream,
    ) -> Result<Self> {
        let mut reader = bits.reader();
        let mut pixels = Vec::with_capacity(width * height);
        for _ in 0..width * height {
            pixels.push(reader.read_bits(depth.bits())? as u16);
        }
        GrayImage::from_pixels(width, height, depth, pixels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_pixels_rejects_out_of_range() {
        let err = GrayImage::from_pixels(2, 1, BitDepth::Eight, vec![0, 300]).unwrap_err();
        assert_eq!(
            err,
            Error::ValueOutOfRange {
                value: 300,
                max: 255
            }
        );
    }

    #[test]
    fn from_pixels_rejects_wrong_count() {
        assert!(GrayImage::from_pixels(3, 3, BitDepth::Eight, vec![0; 8]).is_err());
    }

    #[test]
    fn raster_bits_round_trip() {
        let img = GrayImage::from_pixels(3, 2, BitDepth::Sixteen, vec![0, 1, 65535, 256, 7, 42])
            .unwrap();
        let bits = img.raster_bits();
        assert_eq!(bits.len(), 6 * 16);
        let back = GrayImage::from_raster_bits(3, 2, BitDepth::Sixteen, &bits).unwrap();
        assert_eq!(back, img);
    }
}
