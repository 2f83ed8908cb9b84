//! CSV and manifest emission. CSV bodies are byte-identical across runs with
//! the same flags; timestamps live only in the side manifest.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;

use lumen_mix_core::constants::CONSTANTS_VERSION;

/// Reproducibility record written next to every data file set as
/// `<out>.manifest.json`.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub constants_version: String,
    pub tolerances: BTreeMap<String, f64>,
    pub outputs: Vec<String>,
    pub wall_time_s: f64,
    pub unix_time_s: u64,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        RunManifest {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            constants_version: CONSTANTS_VERSION.to_string(),
            tolerances: BTreeMap::new(),
            outputs: Vec::new(),
            wall_time_s: 0.0,
            unix_time_s: 0,
        }
    }

    pub fn parameter(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn tolerance(&mut self, key: &str, value: f64) -> &mut Self {
        self.tolerances.insert(key.to_string(), value);
        self
    }

    pub fn write(mut self, started: std::time::Instant) -> std::io::Result<PathBuf> {
        self.wall_time_s = started.elapsed().as_secs_f64();
        self.unix_time_s = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let base = self
            .outputs
            .first()
            .cloned()
            .unwrap_or_else(|| format!("{}.out", self.command));
        let path = PathBuf::from(format!("{base}.manifest.json"));
        let json = serde_json::to_string_pretty(&self).expect("manifest serializes");
        fs::write(&path, json)?;
        Ok(path)
    }
}

/// CSV writer: `#`-prefixed metadata lines, one header line with units in
/// the column names, then data rows in `{:.10e}` format.
pub struct CsvFile {
    path: PathBuf,
    buffer: String,
}

impl CsvFile {
    pub fn new(path: &Path) -> Self {
        CsvFile { path: path.to_path_buf(), buffer: String::new() }
    }

    pub fn metadata(&mut self, line: &str) -> &mut Self {
        self.buffer.push_str("# ");
        self.buffer.push_str(line);
        self.buffer.push('\n');
        self
    }

    pub fn header(&mut self, columns: &[&str]) -> &mut Self {
        self.buffer.push_str(&columns.join(","));
        self.buffer.push('\n');
        self
    }

    pub fn row(&mut self, values: &[f64]) -> &mut Self {
        let formatted: Vec<String> = values.iter().map(|v| format!("{v:.10e}")).collect();
        self.buffer.push_str(&formatted.join(","));
        self.buffer.push('\n');
        self
    }

    pub fn row_mixed(&mut self, values: &[String]) -> &mut Self {
        self.buffer.push_str(&values.join(","));
        self.buffer.push('\n');
        self
    }

    pub fn finish(self) -> std::io::Result<PathBuf> {
        if let Some(parent) = self.path.parent() {
            if !parent.as_os_str().is_empty() {
                fs::create_dir_all(parent)?;
            }
        }
        let mut file = fs::File::create(&self.path)?;
        file.write_all(self.buffer.as_bytes())?;
        Ok(self.path)
    }
}

pub fn fmt(v: f64) -> String {
    format!("{v:.10e}")
}
