use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BeliefError {
    #[error("frame must contain at least one element")]
    EmptyFrame,
    #[error("frame labels must be non-empty")]
    EmptyLabel,
    #[error("duplicate frame label `{0}`")]
    DuplicateLabel(String),
    #[error("frame has {size} elements, cap is {cap}")]
    FrameTooLarge { size: usize, cap: usize },
    #[error("label `{0}` is not an element of the frame")]
    UnknownLabel(String),
    #[error("the empty set cannot be an input focal set")]
    EmptyFocal,
    #[error("focal set {0:#b} has members outside the frame")]
    ForeignFocal(u32),
    #[error("mass {0} is not in (0, 1]")]
    InvalidMass(f64),
    #[error("masses sum to {0}, expected 1")]
    BadSum(f64),
    #[error("mass functions are defined on different frames")]
    FrameMismatch,
    #[error("total conflict: all mass is on the empty set")]
    TotalConflict,
    #[error("frame is not a constituent of the product frame")]
    NotAConstituent,
    #[error("mapping is not a partition: {0}")]
    NotAPartition(String),
    #[error("mapping has {got} images for a source frame of {expected} elements")]
    MappingArity { expected: usize, got: usize },
    #[error("focal count {count} is outside 1..={max}")]
    FocalCountOutOfRange { count: usize, max: usize },
    #[error("dense oracle supports at most {cap} elements, frame has {size}")]
    OracleFrameTooLarge { size: usize, cap: usize },
}
