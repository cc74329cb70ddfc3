//! Pixel-grid containers and colour conversions shared by the whole pipeline.

use thiserror::Error;

use crate::num::Real;

/// Construction failures for the raster types.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RasterError {
    /// Zero-sized grid or a pixel buffer that disagrees with width × height.
    #[error("invalid raster dimensions: {width}x{height} with {len} pixels")]
    InvalidDimensions {
        width: usize,
        height: usize,
        len: usize,
    },
}

/// 8-bit RGB image, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RgbRaster {
    width: usize,
    height: usize,
    pixels: Vec<[u8; 3]>,
}

/// 8-bit grayscale image, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayRaster {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

/// Per-pixel foreground/background flags, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMask {
    width: usize,
    height: usize,
    bits: Vec<bool>,
}

/// Hue/saturation/value triple; `h` in [0,1) with the full circle scaled to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HsvPixel<F: Real> {
    pub h: F,
    pub s: F,
    pub v: F,
}

fn check_dims(width: usize, height: usize, len: usize) -> Result<(), RasterError> {
    if width == 0 || height == 0 || len != width * height {
        return Err(RasterError::InvalidDimensions { width, height, len });
    }
    Ok(())
}

impl RgbRaster {
    pub fn new(width: usize, height: usize, pixels: Vec<[u8; 3]>) -> Result<Self, RasterError> {
        check_dims(width, height, pixels.len())?;
        Ok(Self {
            width,
            height,
            pixels,
        })
    }

    /// Uniform image of one colour.
    pub fn filled(width: usize, height: usize, rgb: [u8; 3]) -> Self {
        Self::new(width, height, vec![rgb; width * height]).expect("non-zero dims")
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, x: usize, y: usize) -> [u8; 3] {
        self.pixels[y * self.width + x]
    }

    pub fn set(&mut self, x: usize, y: usize, rgb: [u8; 3]) {
        self.pixels[y * self.width + x] = rgb;
    }

    pub fn pixels(&self) -> &[[u8; 3]] {
        &self.pixels
    }
}

impl GrayRaster {
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self, RasterError> {
        check_dims(width, height, pixels.len())?;
        Ok(Self {
            width,
            height,
            pixels,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.pixels[y * self.width + x]
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }
}

impl BinaryMask {
    pub fn new(width: usize, height: usize, bits: Vec<bool>) -> Result<Self, RasterError> {
        check_dims(width, height, bits.len())?;
        Ok(Self {
            width,
            height,
            bits,
        })
    }

    /// All-background mask of the given size.
    pub fn blank(width: usize, height: usize) -> Self {
        Self::new(width, height, vec![false; width * height]).expect("non-zero dims")
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.bits[y * self.width + x]
    }

    /// Bounds-tolerant lookup: anything outside the grid is background.
    pub fn get_checked(&self, x: isize, y: isize) -> bool {
        if x < 0 || y < 0 || x as usize >= self.width || y as usize >= self.height {
            return false;
        }
        self.bits[y as usize * self.width + x as usize]
    }

    pub fn set(&mut self, x: usize, y: usize, fg: bool) {
        self.bits[y * self.width + x] = fg;
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn count_foreground(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

/// Luminance view: gray = round(0.299·R + 0.587·G + 0.114·B).
pub fn to_gray(img: &RgbRaster) -> GrayRaster {
    let pixels = img
        .pixels
        .iter()
        .map(|&[r, g, b]| {
            let y = 0.299 * f64::from(r) + 0.587 * f64::from(g) + 0.114 * f64::from(b);
            y.round().clamp(0.0, 255.0) as u8
        })
        .collect();
    GrayRaster::new(img.width, img.height, pixels).expect("same dims as source")
}

/// Standard hexcone RGB → HSV; hue is 0 whenever saturation is 0.
pub fn rgb_to_hsv<F: Real>(rgb: [u8; 3]) -> HsvPixel<F> {
    let r = f64::from(rgb[0]) / 255.0;
    let g = f64::from(rgb[1]) / 255.0;
    let b = f64::from(rgb[2]) / 255.0;
    let max = r.max(g).max(b);
    let min = r.min(g).min(b);
    let delta = max - min;

    let v = max;
    let s = if max > 0.0 { delta / max } else { 0.0 };
    let h = if delta <= 0.0 {
        0.0
    } else {
        let h6 = if max == r {
            ((g - b) / delta).rem_euclid(6.0)
        } else if max == g {
            (b - r) / delta + 2.0
        } else {
            (r - g) / delta + 4.0
        };
        (h6 / 6.0).rem_euclid(1.0)
    };
    HsvPixel {
        h: F::of(h),
        s: F::of(s),
        v: F::of(v),
    }
}

/// Inverse hexcone conversion, used by the synthetic-scene generator and the
/// round-trip property tests.
pub fn hsv_to_rgb(h: f64, s: f64, v: f64) -> [u8; 3] {
    let h6 = (h.rem_euclid(1.0)) * 6.0;
    let i = h6.floor() as i32 % 6;
    let f = h6 - h6.floor();
    let p = v * (1.0 - s);
    let q = v * (1.0 - s * f);
    let t = v * (1.0 - s * (1.0 - f));
    let (r, g, b) = match i {
        0 => (v, t, p),
        1 => (q, v, p),
        2 => (p, v, t),
        3 => (p, q, v),
        4 => (t, p, v),
        _ => (v, p, q),
    };
    let to8 = |c: f64| (c * 255.0).round().clamp(0.0, 255.0) as u8;
    [to8(r), to8(g), to8(b)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_or_mismatched_dimensions() {
        assert!(matches!(
            RgbRaster::new(0, 5, vec![]),
            Err(RasterError::InvalidDimensions { .. })
        ));
        assert!(matches!(
            GrayRaster::new(2, 2, vec![0; 3]),
            Err(RasterError::InvalidDimensions { .. })
        ));
        assert!(matches!(
            BinaryMask::new(3, 0, vec![]),
            Err(RasterError::InvalidDimensions { .. })
        ));
    }

    #[test]
    fn gray_extremes_and_hand_value() {
        let img = RgbRaster::new(3, 1, vec![[0, 0, 0], [255, 255, 255], [100, 200, 50]]).unwrap();
        let gray = to_gray(&img);
        assert_eq!(gray.get(0, 0), 0);
        assert_eq!(gray.get(1, 0), 255);
        // 0.299·100 + 0.587·200 + 0.114·50 = 153.0
        assert_eq!(gray.get(2, 0), 153);
    }

    #[test]
    fn gray_is_monotone_in_every_channel() {
        // If every channel of A >= that of B, gray(A) >= gray(B).
        let levels = [0u8, 13, 127, 128, 200, 255];
        for &ra in &levels {
            for &ga in &levels {
                for &ba in &levels {
                    for &rb in &levels {
                        for &gb in &levels {
                            for &bb in &levels {
                                if ra >= rb && ga >= gb && ba >= bb {
                                    let img =
                                        RgbRaster::new(2, 1, vec![[ra, ga, ba], [rb, gb, bb]])
                                            .unwrap();
                                    let gray = to_gray(&img);
                                    assert!(gray.get(0, 0) >= gray.get(1, 0));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hsv_known_points() {
        let red: HsvPixel<f64> = rgb_to_hsv([255, 0, 0]);
        assert_eq!((red.h, red.s, red.v), (0.0, 1.0, 1.0));

        let gray: HsvPixel<f64> = rgb_to_hsv([128, 128, 128]);
        assert_eq!(gray.h, 0.0);
        assert_eq!(gray.s, 0.0);
        assert!((gray.v - 128.0 / 255.0).abs() < 1e-12);

        let blue: HsvPixel<f64> = rgb_to_hsv([0, 0, 255]);
        assert!((blue.h - 2.0 / 3.0).abs() < 1e-12);
        assert_eq!((blue.s, blue.v), (1.0, 1.0));
    }

    #[test]
    fn hsv_round_trips_within_one_level_on_subsampled_cube() {
        // 32 levels per channel, including both endpoints.
        let levels: Vec<u8> = (0..32).map(|i| ((i * 255) / 31) as u8).collect();
        for &r in &levels {
            for &g in &levels {
                for &b in &levels {
                    let hsv: HsvPixel<f64> = rgb_to_hsv([r, g, b]);
                    let back = hsv_to_rgb(hsv.h, hsv.s, hsv.v);
                    for (orig, rt) in [r, g, b].iter().zip(back.iter()) {
                        assert!(
                            (i16::from(*orig) - i16::from(*rt)).abs() <= 1,
                            "({r},{g},{b}) -> {back:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn hsv_components_stay_in_range_for_f32_and_f64() {
        for r in (0..=255).step_by(17) {
            for g in (0..=255).step_by(17) {
                for b in (0..=255).step_by(17) {
                    let p64: HsvPixel<f64> = rgb_to_hsv([r as u8, g as u8, b as u8]);
                    let p32: HsvPixel<f32> = rgb_to_hsv([r as u8, g as u8, b as u8]);
                    assert!(p64.h >= 0.0 && p64.h < 1.0 && p64.s <= 1.0 && p64.v <= 1.0);
                    assert!(p32.h >= 0.0 && p32.h < 1.0 && p32.s <= 1.0 && p32.v <= 1.0);
                }
            }
        }
    }
}
