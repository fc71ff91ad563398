use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph has {n} vertices, limit is 64")]
    TooManyVertices { n: usize },
    #[error("loop edge at vertex {v}")]
    LoopEdge { v: usize },
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("canonical form limited to {limit} vertices, got {n}")]
    CanonicalLimit { n: usize, limit: usize },
    #[error("internal enumeration limited to {limit} vertices, got {n}")]
    EnumerationLimit { n: usize, limit: usize },
    #[error("coloring has {got} entries, graph has {expected} vertices")]
    ColoringLength { expected: usize, got: usize },
    #[error("exhaustive division search limited to {limit} vertices, got {n}")]
    DivisionBudget { n: usize, limit: usize },
    #[error("perfect-divisibility verification limited to {limit} vertices, got {n}")]
    SubgraphBudget { n: usize, limit: usize },
    #[error("graph is not perfect")]
    NotPerfect,
    #[error("graph is not {class}-free: induced {pattern} on {witness}")]
    NotInClass {
        class: String,
        pattern: String,
        witness: String,
    },
    #[error("no perfect division exists for graph {graph6}")]
    NoDivision { graph6: String },
    #[error("palette of {palette} colors exhausted on the neighborhood of vertex {vertex}")]
    PaletteExhausted { vertex: usize, palette: usize },
    /// A structural assertion backed by a published lemma failed. This is a
    /// research-grade finding, never silently repaired; the offending graph is
    /// carried in graph6 form so the case can be replayed in isolation.
    #[error("{lemma} violated on graph {graph6}: {detail}")]
    LemmaViolation {
        lemma: String,
        graph6: String,
        detail: String,
    },
    #[error("certificate parse error at line {line}: {msg}")]
    CertificateParse { line: usize, msg: String },
    #[error("certificate invalid: {msg}")]
    CertificateInvalid { msg: String },
    #[error("graph on {n} vertices exceeds campaign size bound {max}")]
    SizeExceedsMax { n: usize, max: usize },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} outside printable range 63..=126")]
    ByteOutOfRange { byte: u8, offset: usize },
    #[error("expected {expected} payload bytes for {n} vertices, got {got}")]
    BadLength {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("nonzero padding bits in final payload byte")]
    PaddingBits,
    #[error("vertex count {n} exceeds supported maximum 64")]
    UnsupportedSize { n: usize },
}
