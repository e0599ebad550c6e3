use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    CompositeCharacteristic(u64),
    #[error("modulus of tower step {step} is reducible")]
    ReducibleModulus { step: usize },
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element does not belong to this field")]
    ForeignElement,
    #[error("range out of bounds: {0}")]
    RangeOutOfBounds(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("repeated locator at positions {0} and {1}")]
    RepeatedLocator(usize, usize),
    #[error("zero column multiplier at position {0}")]
    ZeroMultiplier(usize),
    #[error("code length {n} exceeds field size")]
    LengthExceedsField { n: usize },
    #[error("punctured code loses dimension")]
    DimensionDrop,
    #[error("cannot puncture {got} coordinates of a code with redundancy {redundancy}")]
    TooManyCoordinates { got: usize, redundancy: usize },
    #[error("distance search needs {required} codewords, budget is {budget}")]
    SearchBudgetExceeded { required: String, budget: u64 },
    #[error("enumeration needs {required} vectors, budget is {budget}")]
    BudgetExceeded { required: String, budget: u64 },
    #[error("code is not MDS")]
    NotMds,
    #[error("rate {k}/{n} is below the required minimum")]
    PreconditionRate { n: usize, k: usize },
    #[error("coordinate index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("invalid partition or assignment: {0}")]
    SpecViolation(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("epsilon must lie in (0, 1/2]")]
    BadEpsilon,
    #[error("no qualifying beta in the field")]
    NoQualifyingBeta,
    #[error("parameters too small: {0}")]
    ParameterTooSmall(String),
    #[error("h must be odd and at least 3")]
    EvenH,
    #[error("field too small: need more than {need} elements")]
    FieldTooSmall { need: String },
    #[error("candidate elements exhausted")]
    Exhausted,
    #[error("repeated interpolation point at index {0}")]
    RepeatedPoint(usize),
    #[error("unknown repro case {0}")]
    UnknownCase(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::SearchBudgetExceeded { .. })
    }
}
