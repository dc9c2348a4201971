use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed permutation text {text:?}: {reason}")]
    MalformedPermutation { text: String, reason: String },
    #[error("point {point} repeated in cycle")]
    RepeatedPoint { point: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("not a bijection on {degree} points")]
    NotABijection { degree: usize },

    #[error("stabilizer chain exceeds the configured cap of {cap} stored transversal entries")]
    ChainTooLarge { cap: usize },
    #[error("orbit exceeds the configured cap of {cap} states")]
    OrbitCapExceeded { cap: usize },
    #[error("action callback is not a group action on the sampled states")]
    InvalidAction,
    #[error("random subgroup construction did not reach order {target} (reached {reached})")]
    OrderNotReached { target: u64, reached: u64 },
    #[error("group order overflows 64 bits")]
    OrderOverflow,
    #[error("sylow search for p={p} exhausted {restarts} restarts; retry with a new seed")]
    SylowRetriesExhausted { p: u64, restarts: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("subgroup too large for explicit element keys ({order} > {limit})")]
    SubgroupTooLarge { order: u64, limit: u64 },
    #[error("group is not abelian")]
    NotAbelian,
    #[error("group is not a {p}-group (order {order})")]
    NotPGroup { p: u64, order: u64 },
    #[error("Sylow {p}-subgroup is not abelian")]
    NonAbelianSylow { p: u64 },

    #[error("field of order {p}^{n} exceeds the supported size 2^16")]
    FieldTooLarge { p: u64, n: u32 },
    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix group enumeration exceeds the cap of {cap} elements")]
    EnumerationCapExceeded { cap: usize },
    #[error("number of lines {lines} exceeds the irreducibility cap {cap}")]
    LineCapExceeded { lines: u64, cap: u64 },

    #[error("automizer mismatch: {0}")]
    Automizer(String),
    #[error("semilinear structure: {0}")]
    Semilinear(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unsupported root datum: {0}")]
    UnsupportedDatum(String),

    #[error("unknown group spec {0:?}")]
    UnknownGroupSpec(String),
    #[error("generator file {path}: line {line}: {reason}")]
    GeneratorFile { path: String, line: usize, reason: String },
    #[error("order mismatch: file annotates {expected}, generators give {computed}")]
    OrderMismatch { expected: u64, computed: u64 },
    #[error("mismatched primes in combined reports: {0} vs {1}")]
    MismatchedPrimes(u64, u64),
    #[error("stage {stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) trait StageExt<T> {
    fn stage(self, stage: &'static str) -> Result<T>;
}

impl<T> StageExt<T> for Result<T> {
    fn stage(self, stage: &'static str) -> Result<T> {
        self.map_err(|e| Error::Stage {
            stage,
            source: Box::new(e),
        })
    }
}
