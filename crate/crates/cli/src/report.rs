//! Output assembly: every run builds one report that renders either as
//! human-readable lines or as a stable key/value document. Machine fields
//! are emitted in insertion order, so a given command always prints the
//! same field sequence.

use crate::session::OutputFormat;
use std::fmt::Display;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_DISCREPANCY: i32 = 4;

pub struct Report {
    exit: i32,
    machine: Vec<(String, String)>,
    pretty: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            exit: EXIT_OK,
            machine: vec![("command".to_string(), command.to_string())],
            pretty: Vec::new(),
        }
    }

    /// A machine-document field.
    pub fn field(&mut self, key: &str, value: impl Display) {
        self.machine.push((key.to_string(), value.to_string()));
    }

    /// A human-readable line.
    pub fn line(&mut self, text: impl Into<String>) {
        self.pretty.push(text.into());
    }

    /// Field plus identical pretty line, for values that read fine raw.
    pub fn both(&mut self, key: &str, value: impl Display) {
        let value = value.to_string();
        self.pretty.push(format!("{key}: {value}"));
        self.machine.push((key.to_string(), value));
    }

    pub fn set_exit(&mut self, code: i32) {
        self.exit = code;
    }


    pub fn emit(self, format: OutputFormat) -> i32 {
        match format {
            OutputFormat::Pretty => {
                for line in &self.pretty {
                    println!("{line}");
                }
            }
            OutputFormat::Machine => {
                for (key, value) in &self.machine {
                    println!("{key}: {value}");
                }
            }
        }
        self.exit
    }
}
