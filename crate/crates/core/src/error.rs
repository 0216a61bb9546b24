use thiserror::Error;

/// Errors raised while building solids, groups, or running a sweep.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown solid {0:?}")]
    UnknownSolid(String),
    #[error("failed to parse solid spec: {0}")]
    Parse(String),
    #[error("too many edges: {0} (at most 30 supported)")]
    TooManyEdges(usize),
    #[error("too many vertices: {0} (at most 64 supported)")]
    TooManyVertices(usize),
    #[error("solid has no edges")]
    NoEdges,
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) is a loop")]
    LoopEdge(usize, usize),
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("generator {0} is not a bijection on {1} vertices")]
    NotBijective(usize, usize),
    #[error("generator {index} maps edge ({lo}, {hi}) to a non-edge")]
    NotEdgePreserving { index: usize, lo: usize, hi: usize },
    #[error("group closure exceeded {0} elements")]
    ClosureTooLarge(usize),
    #[error("orbit count {sum}/{order} is not an integer; the group is not closed")]
    CorruptGroup { sum: u128, order: usize },
    #[error("coordinate magnitude {0} exceeds the supported range")]
    CoordinateScale(i64),
    #[error("arithmetic overflow in exact geometry")]
    Overflow,
    #[error("worker count must be at least 1")]
    NoWorkers,
}

pub type Result<T> = std::result::Result<T, Error>;
