//! CLI error channel: every failure carries the process exit code it maps to.
//!
//! 0 = success, 1 = usage, 2 = bad or missing data, 3 = internal fault.

use std::fmt;

use carpo_core::io::arff::ArffError;
use carpo_core::io::csvout::CsvError;
use carpo_core::io::image::ImageError;
use carpo_core::io::ingest::IngestError;
use carpo_core::io::model::ModelIoError;
use carpo_core::ml::MlError;
use carpo_core::segmentation::SegmentError;

#[derive(Debug)]
pub enum CliError {
    /// Bad invocation: unknown flags, missing arguments, invalid values.
    Usage(String),
    /// The inputs could not be read, parsed or processed.
    Data(String),
    /// A state the program promises never to reach.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    pub fn data(message: impl Into<String>) -> Self {
        CliError::Data(message.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Data(m) | CliError::Internal(m) => f.write_str(m),
        }
    }
}

macro_rules! data_error_from {
    ($($ty:ty),+ $(,)?) => {$(
        impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                CliError::Data(e.to_string())
            }
        }
    )+};
}

data_error_from!(
    ArffError,
    CsvError,
    ImageError,
    IngestError,
    MlError,
    ModelIoError,
    SegmentError,
    std::io::Error,
);
