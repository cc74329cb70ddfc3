//! The 16 texture descriptors: first-order gray-level statistics plus
//! Haralick features of the gray-level co-occurrence matrix (GLCM).

use thiserror::Error;

use crate::num::Real;
use crate::raster::{BinaryMask, GrayRaster};

/// Texture extraction failures.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TextureError {
    /// The mask holds no foreground pixels.
    #[error("empty region: no foreground pixels under the mask")]
    EmptyRegion,
    /// No co-occurring foreground pixel pair exists at any angle.
    #[error("no valid co-occurrence pairs at distance {distance}")]
    NoValidPairs { distance: usize },
}

/// Degenerate-input markers that accompany sentinel feature values.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TextureFlags {
    /// All gray levels equal; skewness and kurtosis reported as 0.
    pub zero_variance: bool,
    /// A contributing GLCM angle had zero marginal variance; its
    /// correlation was reported as 1.
    pub constant_glcm: bool,
}

/// The 16 texture descriptors, in canonical column order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TextureFeatures<F: Real> {
    pub min: F,
    pub max: F,
    pub mean: F,
    pub std: F,
    pub median: F,
    pub mode: F,
    pub skewness: F,
    pub kurtosis: F,
    pub intensity_sum: F,
    pub uniformity: F,
    pub entropy: F,
    pub smoothness_r: F,
    pub glcm_energy: F,
    pub glcm_contrast: F,
    pub glcm_correlation: F,
    pub glcm_homogeneity: F,
    pub flags: TextureFlags,
}

/// Column names matching [`TextureFeatures::to_vec`].
pub const TEXTURE_FEATURE_NAMES: [&str; 16] = [
    "Min",
    "Max",
    "Mean",
    "StD",
    "Median",
    "Mode",
    "Skewness",
    "Kurtosis",
    "IntensitySum",
    "Uniformity",
    "Entropy",
    "SmoothnessR",
    "GlcmEnergy",
    "GlcmContrast",
    "GlcmCorrelation",
    "GlcmHomogeneity",
];

impl<F: Real> TextureFeatures<F> {
    /// The descriptor values in [`TEXTURE_FEATURE_NAMES`] order.
    pub fn to_vec(&self) -> Vec<F> {
        vec![
            self.min,
            self.max,
            self.mean,
            self.std,
            self.median,
            self.mode,
            self.skewness,
            self.kurtosis,
            self.intensity_sum,
            self.uniformity,
            self.entropy,
            self.smoothness_r,
            self.glcm_energy,
            self.glcm_contrast,
            self.glcm_correlation,
            self.glcm_homogeneity,
        ]
    }
}

/// The four co-occurrence angles as (dx, dy) unit offsets in raster
/// coordinates (y grows downward): 0°, 45°, 90°, 135°.
pub const GLCM_OFFSETS: [(isize, isize); 4] = [(1, 0), (1, -1), (0, -1), (-1, -1)];

/// A symmetric, normalized 256-level co-occurrence matrix.
#[derive(Debug, Clone)]
pub struct Glcm<F: Real> {
    p: Vec<F>,
    pairs: u64,
}

impl<F: Real> Glcm<F> {
    pub fn probability(&self, i: u8, j: u8) -> F {
        self.p[usize::from(i) * 256 + usize::from(j)]
    }

    /// Unordered co-occurring pixel pairs that were counted.
    pub fn pair_count(&self) -> u64 {
        self.pairs
    }
}

/// Build the symmetric GLCM for one offset. Only pairs whose two endpoints
/// are both foreground count; each pair is accumulated in both directions.
/// Returns `None` when no pair exists.
pub fn glcm_matrix<F: Real>(
    gray: &GrayRaster,
    mask: &BinaryMask,
    dx: isize,
    dy: isize,
) -> Option<Glcm<F>> {
    assert_eq!(gray.width(), mask.width());
    assert_eq!(gray.height(), mask.height());
    let mut counts = vec![0u64; 256 * 256];
    let mut pairs = 0u64;
    for y in 0..gray.height() {
        for x in 0..gray.width() {
            if !mask.get(x, y) {
                continue;
            }
            let nx = x as isize + dx;
            let ny = y as isize + dy;
            if !mask.get_checked(nx, ny) {
                continue;
            }
            let a = usize::from(gray.get(x, y));
            let b = usize::from(gray.get(nx as usize, ny as usize));
            counts[a * 256 + b] += 1;
            counts[b * 256 + a] += 1;
            pairs += 1;
        }
    }
    if pairs == 0 {
        return None;
    }
    let total = F::of(2.0 * pairs as f64);
    let p = counts
        .into_iter()
        .map(|c| F::of(c as f64) / total)
        .collect();
    Some(Glcm { p, pairs })
}

/// Haralick features of one GLCM.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HaralickFeatures<F: Real> {
    pub energy: F,
    pub contrast: F,
    pub correlation: F,
    pub homogeneity: F,
    /// Marginal variance was 0: correlation reported as 1.
    pub correlation_degenerate: bool,
}

pub fn haralick<F: Real>(glcm: &Glcm<F>) -> HaralickFeatures<F> {
    let mut energy = F::zero();
    let mut contrast = F::zero();
    let mut homogeneity = F::zero();
    let mut marginal = [F::zero(); 256];
    for (i, row_sum) in marginal.iter_mut().enumerate() {
        for j in 0..256 {
            let p = glcm.p[i * 256 + j];
            if p == F::zero() {
                continue;
            }
            let d = F::of((i as f64) - (j as f64));
            energy += p * p;
            contrast += d * d * p;
            homogeneity += p / (F::one() + d.abs());
            *row_sum += p;
        }
    }
    // The matrix is symmetric, so both marginals coincide.
    let mut mu = F::zero();
    for (i, &m) in marginal.iter().enumerate() {
        mu += F::of_usize(i) * m;
    }
    let mut var = F::zero();
    for (i, &m) in marginal.iter().enumerate() {
        let d = F::of_usize(i) - mu;
        var += d * d * m;
    }
    let (correlation, correlation_degenerate) = if var > F::zero() {
        let mut c = F::zero();
        for i in 0..256 {
            for j in 0..256 {
                let p = glcm.p[i * 256 + j];
                if p == F::zero() {
                    continue;
                }
                c += (F::of_usize(i) - mu) * (F::of_usize(j) - mu) * p;
            }
        }
        (c / var, false)
    } else {
        (F::one(), true)
    };
    HaralickFeatures {
        energy,
        contrast,
        correlation,
        homogeneity,
        correlation_degenerate,
    }
}

/// Compute all 16 texture descriptors of the masked gray pixels.
///
/// GLCM features are averaged over the four angles at the given pixel
/// `distance`; angles without any valid pair are skipped.
pub fn extract_texture<F: Real>(
    gray: &GrayRaster,
    mask: &BinaryMask,
    distance: usize,
) -> Result<TextureFeatures<F>, TextureError> {
    assert_eq!(gray.width(), mask.width());
    assert_eq!(gray.height(), mask.height());
    assert!(distance >= 1, "co-occurrence distance must be positive");
    let mut flags = TextureFlags::default();

    let mut values: Vec<u8> = Vec::new();
    let mut hist = [0u64; 256];
    for y in 0..gray.height() {
        for x in 0..gray.width() {
            if mask.get(x, y) {
                let v = gray.get(x, y);
                values.push(v);
                hist[usize::from(v)] += 1;
            }
        }
    }
    if values.is_empty() {
        return Err(TextureError::EmptyRegion);
    }
    values.sort_unstable();
    let n = F::of_usize(values.len());
    let min = F::of_usize(usize::from(values[0]));
    let max = F::of_usize(usize::from(*values.last().unwrap()));
    let median = F::of_usize(usize::from(values[(values.len() - 1) / 2]));
    let mode_level = hist
        .iter()
        .enumerate()
        .max_by_key(|&(i, &c)| (c, usize::MAX - i))
        .map(|(i, _)| i)
        .unwrap();
    let mode = F::of_usize(mode_level);

    let intensity_sum = values
        .iter()
        .map(|&v| F::of_usize(usize::from(v)))
        .sum::<F>();
    let mean = intensity_sum / n;
    let mut m2 = F::zero();
    let mut m3 = F::zero();
    let mut m4 = F::zero();
    for &v in &values {
        let d = F::of_usize(usize::from(v)) - mean;
        let d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    let std = m2.sqrt();
    let (skewness, kurtosis) = if m2 > F::zero() {
        (m3 / (std * std * std), m4 / (m2 * m2) - F::of(3.0))
    } else {
        flags.zero_variance = true;
        (F::zero(), F::zero())
    };

    let mut uniformity = F::zero();
    let mut entropy = F::zero();
    for &c in hist.iter().filter(|&&c| c > 0) {
        let p = F::of(c as f64) / n;
        uniformity += p * p;
        entropy -= p * p.log2();
    }
    let level_range = F::of(255.0);
    let norm_var = m2 / (level_range * level_range);
    let smoothness_r = F::one() - F::one() / (F::one() + norm_var);

    let d = distance as isize;
    let mut sums = [F::zero(); 4];
    let mut angles = 0usize;
    for (dx, dy) in [(d, 0), (d, -d), (0, -d), (-d, -d)] {
        if let Some(g) = glcm_matrix::<F>(gray, mask, dx, dy) {
            let h = haralick(&g);
            sums[0] += h.energy;
            sums[1] += h.contrast;
            sums[2] += h.correlation;
            sums[3] += h.homogeneity;
            flags.constant_glcm |= h.correlation_degenerate;
            angles += 1;
        }
    }
    if angles == 0 {
        return Err(TextureError::NoValidPairs { distance });
    }
    let k = F::of_usize(angles);

    Ok(TextureFeatures {
        min,
        max,
        mean,
        std,
        median,
        mode,
        skewness,
        kurtosis,
        intensity_sum,
        uniformity,
        entropy,
        smoothness_r,
        glcm_energy: sums[0] / k,
        glcm_contrast: sums[1] / k,
        glcm_correlation: sums[2] / k,
        glcm_homogeneity: sums[3] / k,
        flags,
    })
}
