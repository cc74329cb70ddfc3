//! Dataset, image and model interchange: ARFF and CSV tables, PNG/JPEG
//! decoding, versioned binary model files, and labeled directory ingestion.

pub mod arff;
pub mod csvout;
pub mod image;
pub mod ingest;
pub mod model;
