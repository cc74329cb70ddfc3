//! Seed image analysis toolkit.
//!
//! The pipeline turns flatbed-scanner images of seeds on a blue background into
//! per-seed regions, describes each seed with 64 numeric descriptors
//! (32 shape, 16 texture, 16 colour), and trains/evaluates classical
//! classifiers on the resulting datasets:
//!
//! ```text
//! RgbRaster ──segmentation──▶ SeedRegion* ──features──▶ FeatureVector (64)
//!                                                           │
//!                ARFF/CSV ◀──io──  LabeledDataset  ◀────────┘
//!                                        │
//!                   ml (kNN / NB / RF / SVM) ──▶ metrics / reports
//! ```
//!
//! Numeric work is generic over the [`num::Real`] scalar so the whole feature
//! and classifier stack runs in either `f32` or `f64`; the `*64` aliases at
//! this crate root pick the default double-precision instantiation.

pub mod colorfeat;
pub mod features;
pub mod io;
pub mod metrics;
pub mod ml;
pub mod morphfeat;
pub mod num;
pub mod raster;
pub mod segmentation;
pub mod synth;
pub mod texturefeat;

pub use num::Real;
pub use raster::{BinaryMask, GrayRaster, HsvPixel, RgbRaster};
pub use segmentation::{RegionFilter, SeedRegion};

/// Double-precision instantiations — what the CLI and most callers want.
pub type MorphFeatures64 = morphfeat::MorphFeatures<f64>;
pub type TextureFeatures64 = texturefeat::TextureFeatures<f64>;
pub type ColorFeatures64 = colorfeat::ColorFeatures<f64>;
pub type LabeledDataset64 = ml::LabeledDataset<f64>;
pub type TrainedModel64 = ml::TrainedModel<f64>;
pub type CvReport64 = ml::cv::CvReport<f64>;
pub type MetricsReport64 = metrics::MetricsReport<f64>;
