use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dart {dart}: opposite is not a fixed-point-free involution")]
    NonInvolutiveOpposite { dart: usize },
    #[error("broken rotation: {reason}")]
    BrokenRotation { reason: String },
    #[error("underlying graph is disconnected")]
    Disconnected,
    #[error("Euler characteristic V - E + F = {v} - {e} + {f} is not 2")]
    NonPlanarEuler { v: usize, e: usize, f: usize },
    #[error("base vertex {base} is not on the outer face")]
    BaseNotOnBoundary { base: usize },
    #[error("face {face} is the outer face; use the boundary walk instead")]
    OuterFaceQueried { face: usize },
    #[error("no such {kind} {index}")]
    OutOfRange { kind: &'static str, index: usize },
    #[error("edge set is not spanning: {reason}")]
    NotSpanning { reason: String },
    #[error("edge set contains a cycle")]
    NotAcyclic,
    #[error("edge set is not a tree")]
    NotATree,
    #[error("tree has level {tree} but fattening was requested at level {requested}")]
    LevelMismatch { tree: usize, requested: usize },
    #[error("annulus boundary length {k} is below the minimum of 5")]
    KTooSmall { k: usize },
    #[error("illegal shelling move: {reason}")]
    IllegalMove { reason: String },
    #[error("diagram size {size} exceeds the exact-search cap {cap}")]
    TooLargeForExactSearch { size: usize, cap: usize },
    #[error("invalid spanning tree pair: {reason}")]
    InvalidPair { reason: String },
    #[error("inscribed map does not match diagram: {reason}")]
    MapMismatch { reason: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}
