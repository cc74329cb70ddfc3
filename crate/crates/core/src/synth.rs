//! Synthetic rasters and datasets with known ground truth, used by the test
//! suites and benchmark corpora.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::raster::{hsv_to_rgb, BinaryMask, RgbRaster};
use crate::segmentation::{connected_components, SeedRegion};

/// Filled digital disc: pixel (x, y) is set iff its center lies within
/// `radius` of the canvas center. Canvas leaves a 1-pixel background rim.
pub fn binary_disc(radius: usize) -> BinaryMask {
    let side = 2 * radius + 3;
    let c = (radius + 1) as i64;
    let r2 = (radius * radius) as i64;
    let mut mask = BinaryMask::blank(side, side);
    for y in 0..side {
        for x in 0..side {
            let dx = x as i64 - c;
            let dy = y as i64 - c;
            if dx * dx + dy * dy <= r2 {
                mask.set(x, y, true);
            }
        }
    }
    mask
}

/// Filled digital ellipse with semi-axes `a`, `b`, rotated by `theta_deg`.
pub fn binary_ellipse(a: f64, b: f64, theta_deg: f64) -> BinaryMask {
    let half = a.max(b).ceil() as usize + 2;
    let side = 2 * half + 1;
    let c = half as f64;
    let th = theta_deg.to_radians();
    let (sin, cos) = th.sin_cos();
    let mut mask = BinaryMask::blank(side, side);
    for y in 0..side {
        for x in 0..side {
            let dx = x as f64 - c;
            let dy = y as f64 - c;
            let u = dx * cos + dy * sin;
            let v = -dx * sin + dy * cos;
            if (u / a).powi(2) + (v / b).powi(2) <= 1.0 {
                mask.set(x, y, true);
            }
        }
    }
    mask
}

/// Extract the unique connected component of a mask.
///
/// Panics unless the mask holds exactly one region, so only use it on
/// constructed shapes.
pub fn single_region(mask: &BinaryMask) -> SeedRegion {
    let regions = connected_components(mask);
    assert_eq!(regions.len(), 1, "mask must hold exactly one region");
    regions.into_iter().next().unwrap()
}

fn luma(rgb: [u8; 3]) -> f64 {
    0.299 * f64::from(rgb[0]) + 0.587 * f64::from(rgb[1]) + 0.114 * f64::from(rgb[2])
}

/// Composes scanner-like scenes: a blue sheet with elliptical seeds on top.
pub struct SceneBuilder {
    img: RgbRaster,
    rng: ChaCha8Rng,
    noise: u8,
}

impl SceneBuilder {
    /// A blue background canvas; `seed` fixes the noise stream.
    pub fn new(width: usize, height: usize, seed: u64) -> Self {
        Self {
            img: RgbRaster::filled(width, height, [25, 45, 165]),
            rng: ChaCha8Rng::seed_from_u64(seed),
            noise: 0,
        }
    }

    /// Per-channel uniform noise amplitude applied to the whole scene.
    /// Keep below ~40 so seeds stay non-blue and the sheet stays blue.
    pub fn noise(mut self, amplitude: u8) -> Self {
        self.noise = amplitude;
        self
    }

    /// Paint a filled ellipse in the given hue/saturation, with the value
    /// channel solved so the painted pixels hit `target_luma` in gray. Equal
    /// target lumas make differently-hued seeds indistinguishable to
    /// intensity statistics.
    #[allow(clippy::too_many_arguments)]
    pub fn add_ellipse_seed(
        mut self,
        cx: f64,
        cy: f64,
        a: f64,
        b: f64,
        theta_deg: f64,
        hue: f64,
        saturation: f64,
        target_luma: f64,
    ) -> Self {
        let unit = luma(hsv_to_rgb(hue, saturation, 1.0)) / 255.0;
        let v = (target_luma / 255.0 / unit).min(1.0);
        let rgb = hsv_to_rgb(hue, saturation, v);
        let th = theta_deg.to_radians();
        let (sin, cos) = th.sin_cos();
        for y in 0..self.img.height() {
            for x in 0..self.img.width() {
                let dx = x as f64 - cx;
                let dy = y as f64 - cy;
                let u = dx * cos + dy * sin;
                let w = -dx * sin + dy * cos;
                if (u / a).powi(2) + (w / b).powi(2) <= 1.0 {
                    self.img.set(x, y, rgb);
                }
            }
        }
        self
    }

    pub fn build(mut self) -> RgbRaster {
        if self.noise > 0 {
            let amp = i16::from(self.noise);
            for y in 0..self.img.height() {
                for x in 0..self.img.width() {
                    let mut px = self.img.get(x, y);
                    for c in px.iter_mut() {
                        let jitter = self.rng.gen_range(-amp..=amp);
                        *c = (i16::from(*c) + jitter).clamp(0, 255) as u8;
                    }
                    self.img.set(x, y, px);
                }
            }
        }
        self.img
    }
}

/// Isotropic unit-variance Gaussian clusters, roughly `√2 · separation`
/// apart. Class `j`'s mean is the sign pattern `(±1)^popcount(j & k)`
/// scaled to length `separation`: a hypercube vertex, so the offset is
/// spread evenly over every axis rather than concentrated in one. Returns
/// (feature rows, class indices).
pub fn gaussian_blobs(
    classes: usize,
    per_class: usize,
    dims: usize,
    separation: f64,
    seed: u64,
) -> (Vec<Vec<f64>>, Vec<usize>) {
    assert!(classes <= dims, "need at least one axis per class");
    let amplitude = separation / (dims as f64).sqrt();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(classes * per_class);
    let mut labels = Vec::with_capacity(classes * per_class);
    for class in 0..classes {
        for _ in 0..per_class {
            let row: Vec<f64> = (0..dims)
                .map(|axis| {
                    let sign = if (class & axis).count_ones() % 2 == 0 {
                        1.0
                    } else {
                        -1.0
                    };
                    standard_normal(&mut rng) + sign * amplitude
                })
                .collect();
            rows.push(row);
            labels.push(class);
        }
    }
    (rows, labels)
}

/// Box–Muller standard normal draw.
fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}
