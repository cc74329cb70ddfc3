//! PNG/JPEG decoding into 8-bit RGB rasters, and PNG encoding for crops and
//! masks. Sixteen-bit and grayscale sources are converted on load.

use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use image::ImageReader;
use thiserror::Error;

use crate::raster::{BinaryMask, RgbRaster};

/// Image file failures.
#[derive(Debug, Error)]
pub enum ImageError {
    /// Extension is not one of png, jpg, jpeg.
    #[error("unsupported image format: {path}")]
    UnsupportedFormat { path: PathBuf },
    /// The file exists but cannot be decoded (or encoded on save).
    #[error("corrupt or unprocessable image {path}: {source}")]
    CorruptFile {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Whether the path's extension names a decodable format.
pub fn is_supported(path: &Path) -> bool {
    path.extension()
        .and_then(|e| e.to_str())
        .map(|e| {
            let e = e.to_ascii_lowercase();
            e == "png" || e == "jpg" || e == "jpeg"
        })
        .unwrap_or(false)
}

/// Decode a PNG or JPEG file to 8-bit RGB.
pub fn load_rgb(path: &Path) -> Result<RgbRaster, ImageError> {
    if !is_supported(path) {
        return Err(ImageError::UnsupportedFormat {
            path: path.to_path_buf(),
        });
    }
    // Open failures (missing file, permissions) are IO errors; anything that
    // goes wrong after the file is readable means the content is bad.
    let file = File::open(path)?;
    let decoded = ImageReader::new(BufReader::new(file))
        .with_guessed_format()?
        .decode()
        .map_err(|source| ImageError::CorruptFile {
            path: path.to_path_buf(),
            source,
        })?;
    let rgb = decoded.to_rgb8();
    let (w, h) = (rgb.width() as usize, rgb.height() as usize);
    let pixels: Vec<[u8; 3]> = rgb
        .into_raw()
        .chunks_exact(3)
        .map(|c| [c[0], c[1], c[2]])
        .collect();
    Ok(RgbRaster::new(w, h, pixels).expect("decoder yields consistent dimensions"))
}

/// Encode an RGB raster as PNG.
pub fn save_png(path: &Path, img: &RgbRaster) -> Result<(), ImageError> {
    let mut raw = Vec::with_capacity(img.width() * img.height() * 3);
    for px in img.pixels() {
        raw.extend_from_slice(px);
    }
    let buffer: image::RgbImage =
        image::ImageBuffer::from_raw(img.width() as u32, img.height() as u32, raw)
            .expect("raster dimensions are consistent");
    buffer
        .save_with_format(path, image::ImageFormat::Png)
        .map_err(|source| match source {
            image::ImageError::IoError(e) => ImageError::Io(e),
            source => ImageError::CorruptFile {
                path: path.to_path_buf(),
                source,
            },
        })
}

/// Render a mask as a black-and-white raster, for visual inspection.
pub fn mask_to_raster(mask: &BinaryMask) -> RgbRaster {
    let mut img = RgbRaster::filled(mask.width(), mask.height(), [0, 0, 0]);
    for y in 0..mask.height() {
        for x in 0..mask.width() {
            if mask.get(x, y) {
                img.set(x, y, [255, 255, 255]);
            }
        }
    }
    img
}
