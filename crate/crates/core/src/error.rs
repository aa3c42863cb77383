use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({i}, {j}) outside [1, {r}] x [1, {s}]")]
    IndexOutOfRange { i: usize, j: usize, r: usize, s: usize },

    #[error("duplicate edge ({i}, {j})")]
    DuplicateEdge { i: usize, j: usize },

    #[error("one side of the bipartition is empty")]
    EmptyPart,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph on {order} vertex(es) is too small; at least 2 are required")]
    TooSmall { order: usize },

    #[error("{what} too large: {detail}")]
    TooLarge { what: &'static str, detail: String },

    #[error("cyclic group modulus must be at least 1")]
    ZeroModulus,

    #[error("subset member {member} is not below modulus {modulus}")]
    BadSubset { member: usize, modulus: usize },

    #[error("witness family {family}: precondition `{condition}` violated for (r={r}, s={s}, m={m})")]
    PreconditionViolated {
        family: &'static str,
        condition: &'static str,
        r: usize,
        s: usize,
        m: usize,
    },

    #[error("no witness family covers goal {goal} at (r={r}, s={s}, m={m})")]
    NoWitness {
        goal: &'static str,
        r: usize,
        s: usize,
        m: usize,
    },

    #[error("invalid parameter triple (r={r}, s={s}, m={m}): {reason}")]
    InvalidTriple {
        r: usize,
        s: usize,
        m: usize,
        reason: &'static str,
    },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("unknown witness family `{0}`")]
    UnknownFamily(String),

    #[error("unknown metric `{0}`")]
    UnknownMetric(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
