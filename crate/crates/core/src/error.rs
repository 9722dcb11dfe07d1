//! Error type shared by every operation in the crate.

/// Errors produced by graph construction, the graph6 codec, and the analyses.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Vertex counts are capped so an adjacency row fits one 64-bit word.
    #[error("vertex count {0} outside supported range 1..=64")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("({u}, {v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("operand orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("graph6: malformed header: {0}")]
    Graph6Header(String),
    #[error("graph6: body length mismatch (expected {expected} bytes, found {found})")]
    Graph6Length { expected: usize, found: usize },
    #[error("graph6: trailing padding bits are not zero")]
    Graph6TrailingBits,
    #[error("graph6: byte {0:#04x} outside printable range 63..=126")]
    Graph6CharOutOfRange(u8),
    #[error("sparse6 input is not supported (':' header)")]
    Sparse6Unsupported,
    #[error("digraph6 input is not supported ('&' header)")]
    Digraph6Unsupported,
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("invalid family parameters: {0}")]
    FamilyParameters(String),
    #[error("enumeration order {requested} exceeds the supported cap {cap}")]
    EnumerationCap { requested: usize, cap: usize },
    /// I/O failures carry the rendered message so the error stays cloneable
    /// and comparable.
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Error {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Wrap an error with the 1-based line number it was encountered on.
    pub fn at_line(self, line: usize) -> Error {
        Error::AtLine {
            line,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
