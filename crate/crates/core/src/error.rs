use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0}-{1} listed more than once")]
    ParallelEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("infinite radius: graph is disconnected")]
    InfiniteRadius,
    #[error("invalid graph6 string: {0}")]
    Graph6(String),
    #[error("invalid degree sequence: {0}")]
    SequenceParse(String),
    #[error("invalid chord diagram: {0}")]
    Diagram(String),
    #[error("not a radius-1 3-polytope: {0}")]
    NotRadiusOnePolytope(String),
    #[error("family {family}: {constraint}")]
    FamilyConstraint { family: String, constraint: String },
}

pub type Result<T> = std::result::Result<T, Error>;
