use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pixel value {value} exceeds maximum {max} for this bit depth")]
    ValueOutOfRange { value: u32, max: u32 },

    #[error("bit word has two adjacent set bits and is not a valid Zeckendorf form")]
    AdjacentOnes,

    #[error("bit word length {got} does not match the {expected}-bit word for this depth")]
    WordLengthMismatch { got: usize, expected: usize },

    #[error("image dimensions {width}x{height} are not multiples of block size {block_size}")]
    DimensionsNotDivisible {
        width: usize,
        height: usize,
        block_size: usize,
    },

    #[error("block size {0} is not supported (expected 4, 8 or 16)")]
    InvalidBlockSize(usize),

    #[error("bit stream ended before a complete block could be decoded")]
    TruncatedStream,

    #[error("container is malformed: {0}")]
    BadContainer(String),

    #[error("unknown threshold code {code:#b}")]
    UnknownThresholdCode { code: u32 },

    #[error("message needs {required} embeddable bits but the cover provides {available}")]
    CapacityExceeded { required: u64, available: u64 },

    #[error("embedded payload is corrupt or was extracted with the wrong key")]
    CorruptPayload,

    #[error("low bit triplet {0:#05b} cannot occur in a valid Zeckendorf word")]
    InvalidTriplet(u8),

    #[error("input must not be empty")]
    EmptyInput,

    #[error("image dimensions mismatch: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),

    #[error("image is too small for this analysis (minimum {min_width}x{min_height})")]
    ImageTooSmall { min_width: usize, min_height: usize },

    #[error("operation requires an 8-bit image")]
    UnsupportedDepth,

    #[error("estimator is degenerate on this input; no reliable estimate")]
    UnreliableEstimate,

    #[error("malformed image file: {0}")]
    BadImageFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
