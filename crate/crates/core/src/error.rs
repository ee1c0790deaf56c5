// Copyright 2026 the descartes-core Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("DegenerateInput: {0}")]
    DegenerateInput(String),
    #[error("NonIntegralVertices: tile `{0}` has a non-integer vertex")]
    NonIntegralVertices(String),
    #[error("NegativeOrientation: tile `{0}` has non-positive signed area")]
    NegativeOrientation(String),
    #[error("ComplexSolutions: AB+BC+CA = {0} is negative")]
    ComplexSolutions(String),
    #[error("CurlViolation: a+b+c = {0}, expected 0")]
    CurlViolation(String),
    #[error("NonIntegral: {0} is not an integer")]
    NonIntegral(String),
    #[error("NotTangent: {0}")]
    NotTangent(String),
    #[error("ZeroRadius: {0}")]
    ZeroRadius(String),
    #[error("NonPositiveCurvature: {0}")]
    NonPositiveCurvature(String),
    #[error("NoConsistentPlacement: {0}")]
    NoConsistentPlacement(String),
    #[error("ZeroCurvature: {0}")]
    ZeroCurvature(String),
    #[error("CollinearTangencyPoints: the three tangency points lie on a line")]
    CollinearTangencyPoints,
    #[error("NotDescartes: {0}")]
    NotDescartes(String),
    #[error("Parse: {0}")]
    Parse(String),
    #[error("InvalidJob: {0}")]
    InvalidJob(String),
    #[error("Io: {0}")]
    Io(String),
}

impl Error {
    /// The variant name, as printed by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DegenerateInput(_) => "DegenerateInput",
            Error::NonIntegralVertices(_) => "NonIntegralVertices",
            Error::NegativeOrientation(_) => "NegativeOrientation",
            Error::ComplexSolutions(_) => "ComplexSolutions",
            Error::CurlViolation(_) => "CurlViolation",
            Error::NonIntegral(_) => "NonIntegral",
            Error::NotTangent(_) => "NotTangent",
            Error::ZeroRadius(_) => "ZeroRadius",
            Error::NonPositiveCurvature(_) => "NonPositiveCurvature",
            Error::NoConsistentPlacement(_) => "NoConsistentPlacement",
            Error::ZeroCurvature(_) => "ZeroCurvature",
            Error::CollinearTangencyPoints => "CollinearTangencyPoints",
            Error::NotDescartes(_) => "NotDescartes",
            Error::Parse(_) => "Parse",
            Error::InvalidJob(_) => "InvalidJob",
            Error::Io(_) => "Io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
