//! End-to-end ingestion: scan a directory of scanner images, segment every
//! sheet, extract the selected descriptor categories and assemble a labeled
//! dataset.
//!
//! Labels come from the directory layout: images inside a subdirectory get
//! the subdirectory's name; images directly under the root need a sidecar
//! `<stem>.label` file. Files that cannot be processed are recorded and
//! skipped, never fatal. Row order is deterministic: lexicographic image
//! path, then region label.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use thiserror::Error;
use walkdir::WalkDir;

use crate::colorfeat::{extract_color, ColorError};
use crate::features::{assemble, CategorySet};
use crate::io::image::{is_supported, load_rgb};
use crate::ml::{LabeledDataset, MlError};
use crate::morphfeat::{extract_morph, MorphError};
use crate::num::Real;
use crate::raster::{to_gray, BinaryMask, RgbRaster};
use crate::segmentation::{
    blue_background_mask, connected_components, crop_region, filter_regions, RegionFilter,
    SeedRegion, SegmentError,
};
use crate::texturefeat::{extract_texture, TextureError};

/// Pipeline settings shared by segmentation and extraction commands.
#[derive(Debug, Clone, PartialEq)]
pub struct IngestConfig {
    /// Minimum region area in pixels; default 50.
    pub min_area: Option<usize>,
    /// Maximum region area; default one quarter of the image.
    pub max_area: Option<usize>,
    pub circ_min: f64,
    pub circ_max: f64,
    pub categories: CategorySet,
    /// Co-occurrence pixel distance for texture features.
    pub glcm_distance: usize,
    /// Background margin added around each crop.
    pub crop_pad: usize,
}

impl Default for IngestConfig {
    fn default() -> Self {
        Self {
            min_area: None,
            max_area: None,
            circ_min: 0.0,
            circ_max: 1.0,
            categories: CategorySet::ALL,
            glcm_distance: 1,
            crop_pad: 2,
        }
    }
}

impl IngestConfig {
    pub fn filter_for(&self, image_area: usize) -> RegionFilter {
        let default = RegionFilter::default_for(image_area);
        RegionFilter {
            min_area: self.min_area.unwrap_or(default.min_area),
            max_area: self.max_area.unwrap_or(default.max_area),
            circ_min: self.circ_min,
            circ_max: self.circ_max,
        }
    }
}

/// Ingestion failures that stop the whole run.
#[derive(Debug, Error)]
pub enum IngestError {
    #[error("no labeled images found under {root}")]
    NoLabeledImages { root: PathBuf },
    #[error("no seed regions survived segmentation and filtering")]
    NoRows,
    #[error("dataset: {0}")]
    Dataset(#[from] MlError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Why one region of one image produced no feature row.
#[derive(Debug, Error)]
pub enum RegionError {
    #[error(transparent)]
    Morph(#[from] MorphError),
    #[error(transparent)]
    Texture(#[from] TextureError),
    #[error(transparent)]
    Color(#[from] ColorError),
}

/// One region's descriptor row.
#[derive(Debug, Clone, PartialEq)]
pub struct SeedFeatures<F: Real> {
    pub region: SeedRegion,
    pub values: Vec<F>,
}

/// Extraction output of a single image.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageRows<F: Real> {
    pub rows: Vec<SeedFeatures<F>>,
    /// (region label, reason) for regions that failed extraction.
    pub dropped: Vec<(u32, String)>,
}

/// Segment one image and keep the regions passing the configured filter.
pub fn segment_image(
    img: &RgbRaster,
    cfg: &IngestConfig,
) -> Result<(BinaryMask, Vec<SeedRegion>), SegmentError> {
    let mask = blue_background_mask(img)?;
    let regions = connected_components(&mask);
    let filter = cfg.filter_for(img.width() * img.height());
    Ok((mask, filter_regions(regions, &filter)))
}

/// Extract the selected descriptor categories for one already-cropped seed.
pub fn extract_region_features<F: Real>(
    crop: &RgbRaster,
    crop_mask: &BinaryMask,
    cfg: &IngestConfig,
) -> Result<Vec<F>, RegionError> {
    let set = cfg.categories;
    let morph = if set.morph {
        let region = connected_components(crop_mask)
            .into_iter()
            .next()
            .ok_or(MorphError::DegenerateRegion)?;
        Some(extract_morph::<F>(crop_mask, &region)?)
    } else {
        None
    };
    let texture = if set.texture {
        let gray = to_gray(crop);
        Some(extract_texture::<F>(&gray, crop_mask, cfg.glcm_distance)?)
    } else {
        None
    };
    let color = if set.color {
        Some(extract_color::<F>(crop, crop_mask)?)
    } else {
        None
    };
    Ok(assemble(
        set,
        morph.as_ref(),
        texture.as_ref(),
        color.as_ref(),
    ))
}

/// Segment an image and extract one feature row per surviving region.
pub fn extract_image_features<F: Real>(
    img: &RgbRaster,
    cfg: &IngestConfig,
) -> Result<ImageRows<F>, SegmentError> {
    let (mask, regions) = segment_image(img, cfg)?;
    let mut rows = Vec::with_capacity(regions.len());
    let mut dropped = Vec::new();
    for region in regions {
        let (crop, crop_mask) = crop_region(img, &mask, &region, cfg.crop_pad);
        match extract_region_features(&crop, &crop_mask, cfg) {
            Ok(values) => rows.push(SeedFeatures { region, values }),
            Err(e) => dropped.push((region.label, e.to_string())),
        }
    }
    Ok(ImageRows { rows, dropped })
}

/// Where one dataset row came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowOrigin {
    pub path: PathBuf,
    pub region_label: u32,
}

/// A file that was seen but contributed nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkippedFile {
    pub path: PathBuf,
    pub reason: String,
}

/// The assembled dataset plus provenance and diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct IngestReport<F: Real> {
    pub dataset: LabeledDataset<F>,
    /// Parallel to the dataset rows.
    pub origins: Vec<RowOrigin>,
    pub skipped_files: Vec<SkippedFile>,
    pub dropped_regions: Vec<(PathBuf, u32, String)>,
}

fn file_label(path: &Path) -> Option<String> {
    let sidecar = path.with_extension("label");
    let text = fs::read_to_string(sidecar).ok()?;
    let trimmed = text.trim();
    if trimmed.is_empty() {
        None
    } else {
        Some(trimmed.to_string())
    }
}

fn is_hidden(path: &Path) -> bool {
    path.file_name()
        .and_then(|n| n.to_str())
        .map(|n| n.starts_with('.'))
        .unwrap_or(false)
}

fn has_extension(path: &Path, ext: &str) -> bool {
    path.extension()
        .and_then(|e| e.to_str())
        .map(|e| e.eq_ignore_ascii_case(ext))
        .unwrap_or(false)
}

/// Image paths paired with class labels, plus the files that were passed over.
type LabeledImages = (Vec<(PathBuf, String)>, Vec<SkippedFile>);

/// Enumerate (image, label) pairs under the root, lexicographically.
fn collect_labeled_images(root: &Path) -> Result<LabeledImages, std::io::Error> {
    let mut entries: Vec<PathBuf> = fs::read_dir(root)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()?;
    entries.sort();
    let mut labeled = Vec::new();
    let mut skipped = Vec::new();
    for path in entries {
        if is_hidden(&path) {
            continue;
        }
        if path.is_dir() {
            let class = path
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default();
            for entry in WalkDir::new(&path).sort_by_file_name() {
                let entry = entry.map_err(|e| std::io::Error::other(e.to_string()))?;
                if !entry.file_type().is_file() || is_hidden(entry.path()) {
                    continue;
                }
                let p = entry.into_path();
                if is_supported(&p) {
                    labeled.push((p, class.clone()));
                } else if !has_extension(&p, "label") {
                    skipped.push(SkippedFile {
                        path: p,
                        reason: "unsupported image format".into(),
                    });
                }
            }
        } else if is_supported(&path) {
            match file_label(&path) {
                Some(class) => labeled.push((path, class)),
                None => skipped.push(SkippedFile {
                    path,
                    reason: "no class folder and no sidecar .label file".into(),
                }),
            }
        } else if !has_extension(&path, "label") {
            skipped.push(SkippedFile {
                path,
                reason: "unsupported image format".into(),
            });
        }
    }
    labeled.sort();
    Ok((labeled, skipped))
}

/// Ingest every labeled image under `root` into one dataset.
pub fn ingest_directory<F: Real>(
    root: &Path,
    cfg: &IngestConfig,
) -> Result<IngestReport<F>, IngestError> {
    let (labeled, mut skipped_files) = collect_labeled_images(root)?;
    if labeled.is_empty() {
        return Err(IngestError::NoLabeledImages {
            root: root.to_path_buf(),
        });
    }

    let per_image: Vec<Result<ImageRows<F>, String>> = labeled
        .par_iter()
        .map(|(path, _)| {
            load_rgb(path)
                .map_err(|e| e.to_string())
                .and_then(|img| extract_image_features(&img, cfg).map_err(|e| e.to_string()))
        })
        .collect();

    let mut class_names: Vec<String> = Vec::new();
    let mut dropped_regions = Vec::new();
    let mut kept: Vec<(&PathBuf, &String, ImageRows<F>)> = Vec::new();
    for ((path, class), result) in labeled.iter().zip(per_image) {
        match result {
            Ok(image_rows) => {
                for (label, reason) in &image_rows.dropped {
                    dropped_regions.push((path.clone(), *label, reason.clone()));
                }
                if !image_rows.rows.is_empty() {
                    class_names.push(class.clone());
                }
                kept.push((path, class, image_rows));
            }
            Err(reason) => skipped_files.push(SkippedFile {
                path: path.clone(),
                reason,
            }),
        }
    }
    class_names.sort();
    class_names.dedup();

    let mut features = Vec::new();
    let mut labels = Vec::new();
    let mut origins = Vec::new();
    for (path, class, image_rows) in kept {
        let Ok(class_idx) = class_names.binary_search(class) else {
            continue;
        };
        for seed in image_rows.rows {
            origins.push(RowOrigin {
                path: path.clone(),
                region_label: seed.region.label,
            });
            features.push(seed.values);
            labels.push(class_idx);
        }
    }
    if features.is_empty() {
        return Err(IngestError::NoRows);
    }
    let dataset = LabeledDataset::new(
        features,
        labels,
        class_names,
        cfg.categories
            .names()
            .iter()
            .map(|s| s.to_string())
            .collect(),
    )?;
    Ok(IngestReport {
        dataset,
        origins,
        skipped_files,
        dropped_regions,
    })
}
