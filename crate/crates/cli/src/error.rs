use std::fmt;

/// Process exit codes.
pub const EXIT_OK: u8 = 0;
pub const EXIT_EXPECTATION: u8 = 2;
pub const EXIT_INEXACT: u8 = 3;
pub const EXIT_INPUT: u8 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub msg: String,
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            msg: msg.into(),
        }
    }

    pub fn failed(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_EXPECTATION,
            msg: msg.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.msg)
    }
}

impl From<topochrom::Error> for CliError {
    fn from(e: topochrom::Error) -> Self {
        use topochrom::Error as E;
        let code = match &e {
            E::ExactModeRefused(_) => EXIT_INEXACT,
            E::ImproperColoring { .. } | E::NotWide { .. } | E::NotHomomorphism { .. } | E::Verification(_) => EXIT_EXPECTATION,
            _ => EXIT_INPUT,
        };
        CliError { code, msg: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::input(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
