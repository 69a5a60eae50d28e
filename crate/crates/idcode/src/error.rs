use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0} is not allowed in a simple graph")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1}) in simple graph input")]
    DuplicateEdge(usize, usize),

    #[error("vertex {0} is isolated; construct with allow_isolated to permit")]
    IsolatedVertex(usize),

    #[error("vertices {0} and {1} are twins; no identifying code exists")]
    TwinsPresent(usize, usize),

    #[error("operation requires two distinct vertices, got {0} twice")]
    EqualVertices(usize),

    #[error("girth {girth} is below the required minimum {required}")]
    GirthTooSmall { girth: usize, required: usize },

    #[error("minimum degree {delta} is below the required minimum {required}")]
    MinDegreeTooSmall { delta: usize, required: usize },

    #[error("maximum degree {d} is below the required minimum {required}")]
    MaxDegreeTooSmall { d: usize, required: usize },

    #[error("parameter {name} = {value} outside its domain ({domain})")]
    DomainViolation {
        name: &'static str,
        value: String,
        domain: &'static str,
    },

    #[error("n*d must be even to pair half-edges (n = {n}, d = {d})")]
    OddDegreeSum { n: usize, d: usize },

    #[error("no simple graph found within {tries} sampling tries")]
    SamplingExhausted { tries: usize },

    #[error("multigraph is not regular (degrees {0} and {1} both occur)")]
    NotRegular(usize, usize),

    #[error("multigraph has a loop at vertex {0}; a loopless multigraph is required")]
    LoopedInput(usize),

    #[error("edge list parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("small-graph enumeration is capped at order 8 (requested {0})")]
    CorpusCapExceeded(usize),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI error envelope.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::SelfLoop(_) => "self_loop",
            Error::DuplicateEdge(..) => "duplicate_edge",
            Error::IsolatedVertex(_) => "isolated_vertex",
            Error::TwinsPresent(..) => "twins_present",
            Error::EqualVertices(_) => "equal_vertices",
            Error::GirthTooSmall { .. } => "girth_too_small",
            Error::MinDegreeTooSmall { .. } => "min_degree_too_small",
            Error::MaxDegreeTooSmall { .. } => "max_degree_too_small",
            Error::DomainViolation { .. } => "domain_violation",
            Error::OddDegreeSum { .. } => "odd_degree_sum",
            Error::SamplingExhausted { .. } => "sampling_exhausted",
            Error::NotRegular(..) => "not_regular",
            Error::LoopedInput(_) => "looped_input",
            Error::Parse { .. } => "parse_error",
            Error::CorpusCapExceeded(_) => "corpus_cap_exceeded",
        }
    }

    pub(crate) fn domain(name: &'static str, value: impl ToString, domain: &'static str) -> Self {
        Error::DomainViolation {
            name,
            value: value.to_string(),
            domain,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
