//! Error type shared by all estimation stages.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A physical error rate sits at or above the surface-code threshold, so
    /// increasing the code distance no longer suppresses logical errors.
    #[error("{rate_name} = {rate:e} is at or above the surface-code threshold {threshold:e}")]
    AboveThreshold {
        rate_name: String,
        rate: f64,
        threshold: f64,
    },

    /// No valid design exists for the requested target (e.g. the distillation
    /// chain does not terminate within the round limit).
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// The scenario is cataloged but has no cycle-time model.
    #[error("scenario `{name}`: no cycle-time model for modality `{modality}`")]
    UnsupportedModality { name: String, modality: String },

    #[error("invalid {name}: {reason}")]
    InvalidInput { name: String, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    /// Wraps an error with the pipeline stage that produced it.
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn invalid(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidInput {
            name: name.into(),
            reason: reason.into(),
        }
    }

    pub fn in_stage(self, stage: &'static str) -> Self {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }

    /// True for errors that mean "this configuration cannot be estimated"
    /// rather than "the input is malformed".
    pub fn is_infeasible(&self) -> bool {
        match self {
            Error::AboveThreshold { .. }
            | Error::Infeasible(_)
            | Error::UnsupportedModality { .. } => true,
            Error::Stage { source, .. } => source.is_infeasible(),
            _ => false,
        }
    }
}
