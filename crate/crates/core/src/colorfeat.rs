//! The 16 colour descriptors: RGB channel statistics on the 0–255 scale and
//! HSV statistics on the unit scale.

use thiserror::Error;

use crate::num::Real;
use crate::raster::{rgb_to_hsv, BinaryMask, RgbRaster};

/// Colour extraction failures.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColorError {
    /// The mask holds no foreground pixels.
    #[error("empty region: no foreground pixels under the mask")]
    EmptyRegion,
}

/// The 16 colour descriptors, in canonical column order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ColorFeatures<F: Real> {
    pub mean_r: F,
    pub std_r: F,
    pub sqrt_mean_r: F,
    pub mean_g: F,
    pub std_g: F,
    pub sqrt_mean_g: F,
    pub mean_b: F,
    pub std_b: F,
    pub sqrt_mean_b: F,
    pub mean_rgb: F,
    pub mean_hue: F,
    pub std_hue: F,
    pub mean_sat: F,
    pub std_sat: F,
    pub mean_val: F,
    pub std_val: F,
}

/// Column names matching [`ColorFeatures::to_vec`].
pub const COLOR_FEATURE_NAMES: [&str; 16] = [
    "MeanR",
    "StdR",
    "SqrtMeanR",
    "MeanG",
    "StdG",
    "SqrtMeanG",
    "MeanB",
    "StdB",
    "SqrtMeanB",
    "MeanRGB",
    "MeanHue",
    "StdHue",
    "MeanSat",
    "StdSat",
    "MeanVal",
    "StdVal",
];

impl<F: Real> ColorFeatures<F> {
    /// The descriptor values in [`COLOR_FEATURE_NAMES`] order.
    pub fn to_vec(&self) -> Vec<F> {
        vec![
            self.mean_r,
            self.std_r,
            self.sqrt_mean_r,
            self.mean_g,
            self.std_g,
            self.sqrt_mean_g,
            self.mean_b,
            self.std_b,
            self.sqrt_mean_b,
            self.mean_rgb,
            self.mean_hue,
            self.std_hue,
            self.mean_sat,
            self.std_sat,
            self.mean_val,
            self.std_val,
        ]
    }
}

fn mean_std<F: Real>(values: &[F]) -> (F, F) {
    let n = F::of_usize(values.len());
    let mean = values.iter().copied().sum::<F>() / n;
    let var = values.iter().map(|&v| (v - mean) * (v - mean)).sum::<F>() / n;
    (mean, var.sqrt())
}

/// Compute the 16 colour descriptors of the masked pixels.
///
/// Hue is averaged arithmetically on [0, 1); regions straddling the red
/// wrap-around point blur toward 0.5, which is tolerable for seed imagery
/// because scanner sheets are blue and seeds cluster away from the seam.
pub fn extract_color<F: Real>(
    img: &RgbRaster,
    mask: &BinaryMask,
) -> Result<ColorFeatures<F>, ColorError> {
    assert_eq!(img.width(), mask.width());
    assert_eq!(img.height(), mask.height());
    let mut rs = Vec::new();
    let mut gs = Vec::new();
    let mut bs = Vec::new();
    let mut hs = Vec::new();
    let mut ss = Vec::new();
    let mut vs = Vec::new();
    for y in 0..img.height() {
        for x in 0..img.width() {
            if !mask.get(x, y) {
                continue;
            }
            let px = img.get(x, y);
            rs.push(F::of_usize(usize::from(px[0])));
            gs.push(F::of_usize(usize::from(px[1])));
            bs.push(F::of_usize(usize::from(px[2])));
            let hsv = rgb_to_hsv::<F>(px);
            hs.push(hsv.h);
            ss.push(hsv.s);
            vs.push(hsv.v);
        }
    }
    if rs.is_empty() {
        return Err(ColorError::EmptyRegion);
    }
    let (mean_r, std_r) = mean_std(&rs);
    let (mean_g, std_g) = mean_std(&gs);
    let (mean_b, std_b) = mean_std(&bs);
    let (mean_hue, std_hue) = mean_std(&hs);
    let (mean_sat, std_sat) = mean_std(&ss);
    let (mean_val, std_val) = mean_std(&vs);
    Ok(ColorFeatures {
        mean_r,
        std_r,
        sqrt_mean_r: mean_r.sqrt(),
        mean_g,
        std_g,
        sqrt_mean_g: mean_g.sqrt(),
        mean_b,
        std_b,
        sqrt_mean_b: mean_b.sqrt(),
        mean_rgb: (mean_r + mean_g + mean_b) / F::of(3.0),
        mean_hue,
        std_hue,
        mean_sat,
        std_sat,
        mean_val,
        std_val,
    })
}
