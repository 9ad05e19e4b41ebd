use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Core(tilting::Error),
    Io(std::io::Error),
    Json(serde_json::Error),
    Format(String),
}

impl CliError {
    /// Every error is a usage or resource error, reported with exit code 2.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(s) => write!(f, "parse error: {}", s),
            CliError::Core(e) => write!(f, "{}", e),
            CliError::Io(e) => write!(f, "io error: {}", e),
            CliError::Json(e) => write!(f, "json error: {}", e),
            CliError::Format(s) => write!(f, "bad input file: {}", s),
        }
    }
}

impl std::error::Error for CliError {}

impl From<tilting::Error> for CliError {
    fn from(e: tilting::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}
