use thiserror::Error;

use crate::ledger::TermLedger;

#[derive(Debug, Error)]
pub enum MmError {
    #[error(transparent)]
    Core(#[from] hosens_core::Error),
    /// A constructed table missed one of its postconditions. The ledger that
    /// produced it is attached for inspection.
    #[error("verification failed: {message}")]
    Verification { message: String, ledger: Box<TermLedger> },
}

pub type Result<T> = std::result::Result<T, MmError>;
