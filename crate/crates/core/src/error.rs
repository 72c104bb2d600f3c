use thiserror::Error;

/// Errors produced by the simulator, the models, and the bench harness.
#[derive(Debug, Error)]
pub enum QvError {
    #[error("state of {required} bytes exceeds the memory budget of {budget} bytes")]
    Capacity { required: u64, budget: u64 },

    #[error("qubit index {index} out of range for a {n_qubits}-qubit register")]
    QubitIndex { index: usize, n_qubits: usize },

    #[error("control and target of a two-qubit gate must differ (both are {qubit})")]
    ControlEqualsTarget { qubit: usize },

    #[error("{context}: expected length {expected}, got {got}")]
    Shape {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("shot list is empty")]
    EmptyShots,

    #[error("outlier filtering needs at least 3 samples, got {got}")]
    TooFewSamples { got: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("operation not supported by this backend: {0}")]
    Unsupported(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, QvError>;
