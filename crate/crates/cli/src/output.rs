//! Files under `--out`, or standard streams without it.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use serde::Serialize;
use srgswitch::prelude::{graph6_encode, Graph};

use crate::error::CliError;

pub struct Output {
    dir: Option<PathBuf>,
}

impl Output {
    pub fn new(dir: Option<PathBuf>) -> Result<Output, CliError> {
        if let Some(d) = &dir {
            fs::create_dir_all(d)?;
        }
        Ok(Output { dir })
    }

    fn write(&self, name: &str, text: &str, to_stdout: bool) -> Result<(), CliError> {
        match &self.dir {
            Some(d) => fs::write(d.join(name), text)?,
            None if to_stdout => std::io::stdout().lock().write_all(text.as_bytes())?,
            None => std::io::stderr().lock().write_all(text.as_bytes())?,
        }
        Ok(())
    }

    /// graph6 text plus newline; standard output without `--out`.
    pub fn graph(&self, name: &str, g: &Graph) -> Result<(), CliError> {
        self.write(name, &format!("{}\n", graph6_encode(g)), true)
    }

    /// Pretty JSON. Without `--out` it goes to standard output when
    /// `primary`, otherwise to standard error next to a graph on stdout.
    pub fn json<T: Serialize>(&self, name: &str, value: &T, primary: bool) -> Result<(), CliError> {
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        self.write(name, &text, primary)
    }
}
